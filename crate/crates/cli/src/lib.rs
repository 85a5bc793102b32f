//! Command-line front end: parameter parsing, pipelines and CSV/JSON output.

pub mod args;
pub mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use rpt::spectrum::{enumerate_spectrum, sample_wavefunction, BoundState, FamilyLabel, Sign};
use rpt::verify::{epsilon_scan, verify, DiscretizationSpec, VerificationReport};
use rpt::{potential, Couplings};

pub use args::Cli;
use output::{Document, StateEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_NON_CONVERGENCE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Sampling window for wavefunctions and potentials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Spectrum,
    Wavefunction { family: FamilyLabel, n: usize, window: Window },
    Potential { window: Window },
    Verify { grid: DiscretizationSpec },
    ScanEpsilon { eps_list: Vec<f64>, grid: DiscretizationSpec },
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub couplings: Couplings,
    pub format: Format,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
pub enum RunError {
    Validation(String),
    Io(io::Error),
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<rpt::Error> for RunError {
    fn from(e: rpt::Error) -> Self {
        RunError::Validation(e.to_string())
    }
}

fn sign(value: i32, name: &str) -> Result<Sign, RunError> {
    Sign::from_i32(value)
        .ok_or_else(|| RunError::Validation(format!("--{name} must be +1 or -1, got {value}")))
}

fn state_entry(s: &BoundState) -> StateEntry {
    StateEntry {
        sigma: s.family.sigma.as_i32(),
        tau: s.family.tau.as_i32(),
        n: s.n,
        energy: s.energy,
        kappa: s.kappa,
    }
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn report_exit_code(report: &VerificationReport) -> i32 {
    if report.has_convergence_failures() {
        EXIT_NON_CONVERGENCE
    } else if !report.passed {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

/// Executes the pipeline and writes its output; returns the process exit code.
pub fn execute(config: &RunConfig) -> Result<i32, RunError> {
    let c = &config.couplings;
    let mut out = open_output(&config.output)?;
    let states: Vec<StateEntry> = enumerate_spectrum(c).iter().map(state_entry).collect();

    let code = match &config.command {
        Command::Spectrum => {
            match config.format {
                Format::Json => output::write_json(&mut out, &Document::new(c, states, None))?,
                Format::Csv => output::write_states_csv(&mut out, &states)?,
            }
            EXIT_OK
        }
        Command::Wavefunction { family, n, window } => {
            let state = BoundState::new(c, *family, *n)?;
            let grid = sample_wavefunction(c, &state, window.x_min, window.x_max, window.step)?;
            match config.format {
                Format::Csv => output::write_grid_csv(&mut out, &grid, ["x", "re_psi", "im_psi", "abs_psi"])?,
                Format::Json => {
                    let doc = Document::new(c, vec![state_entry(&state)], None)
                        .with_samples(output::samples(&grid, ["x", "re_psi", "im_psi", "abs_psi"]));
                    output::write_json(&mut out, &doc)?
                }
            }
            EXIT_OK
        }
        Command::Potential { window } => {
            let grid = potential::sample_potential(c, window.x_min, window.x_max, window.step)?;
            match config.format {
                Format::Csv => output::write_grid_csv(&mut out, &grid, ["x", "re_V", "im_V", "abs_V"])?,
                Format::Json => {
                    let doc = Document::new(c, states, None)
                        .with_samples(output::samples(&grid, ["x", "re_V", "im_V", "abs_V"]));
                    output::write_json(&mut out, &doc)?
                }
            }
            EXIT_OK
        }
        Command::Verify { grid } => {
            let report = verify(c, grid);
            write_report(&mut out, config.format, c, states, &report)?;
            report_exit_code(&report)
        }
        Command::ScanEpsilon { eps_list, grid } => {
            let report = epsilon_scan(c, eps_list, grid)?;
            write_report(&mut out, config.format, c, states, &report)?;
            report_exit_code(&report)
        }
    };
    out.flush()?;
    Ok(code)
}

fn write_report(
    out: &mut dyn Write,
    format: Format,
    c: &Couplings,
    states: Vec<StateEntry>,
    report: &VerificationReport,
) -> io::Result<()> {
    match format {
        Format::Json => output::write_json(out, &Document::new(c, states, Some(report))),
        Format::Csv => output::write_report_csv(out, report),
    }
}

/// Runs a validated configuration, printing diagnostics to standard error.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config) {
        Ok(code) => {
            if code == EXIT_VERIFICATION {
                eprintln!("verification failed: at least one check exceeded its tolerance");
            } else if code == EXIT_NON_CONVERGENCE {
                eprintln!("numeric eigensolver did not converge for at least one seed");
            }
            code
        }
        Err(RunError::Validation(msg)) => {
            eprintln!("error: {msg}");
            EXIT_VALIDATION
        }
        Err(RunError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(RunError::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Parses argument strings and runs; the whole CLI behind `main`.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    match cli.into_config() {
        Ok(config) => run(&config),
        Err(RunError::Validation(msg)) => {
            eprintln!("error: {msg}");
            EXIT_VALIDATION
        }
        Err(RunError::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

pub(crate) fn family(sigma: i32, tau: i32) -> Result<FamilyLabel, RunError> {
    Ok(FamilyLabel::new(sign(sigma, "sigma")?, sign(tau, "tau")?))
}
