use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rpt::verify::DiscretizationSpec;
use rpt::Couplings;

use crate::{family, Command, Format, RunConfig, RunError, Window};

#[derive(Debug, Parser)]
#[command(name = "rpt", version, about = "Regularized PT-symmetric Pöschl–Teller model: spectra, wavefunctions, numerical verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Closed-form bound-state spectrum.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[command(flatten)]
        couplings: CouplingArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sample one bound-state wavefunction on a window (C1 = 1, not normalized).
    #[command(allow_negative_numbers = true)]
    Wavefunction {
        #[command(flatten)]
        couplings: CouplingArgs,
        #[arg(long)]
        sigma: i32,
        #[arg(long)]
        tau: i32,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sample the complexified potential on a window.
    #[command(allow_negative_numbers = true)]
    Potential {
        #[command(flatten)]
        couplings: CouplingArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare numeric eigenvalues of the discretized Hamiltonian with the closed form.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[command(flatten)]
        couplings: CouplingArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Repeat the numeric spectrum over several shifts and measure the spread.
    #[command(name = "scan-epsilon", allow_negative_numbers = true)]
    ScanEpsilon {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// Shifts to scan, comma separated (radians).
        #[arg(long = "eps-list", value_delimiter = ',', required = true)]
        eps_list: Vec<f64>,
        /// Base shift for the per-state records; defaults to the first scanned value.
        #[arg(long)]
        epsilon: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(skip)]
pub struct CouplingArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub beta: f64,
    /// Imaginary shift in radians, 0 < ε < π/2.
    #[arg(long, required_unless_present = "epsilon_frac", conflicts_with = "epsilon_frac")]
    pub epsilon: Option<f64>,
    /// Shift as a fraction f of π/2, 0 < f < 1.
    #[arg(long = "epsilon-frac", required_unless_present = "epsilon")]
    pub epsilon_frac: Option<f64>,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    #[arg(long)]
    pub xmin: f64,
    #[arg(long)]
    pub xmax: f64,
    #[arg(long)]
    pub step: f64,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Half width of the box [-L, L].
    #[arg(long = "L", default_value_t = 12.0)]
    pub half_width: f64,
    /// Grid step.
    #[arg(long = "h", default_value_t = 0.002)]
    pub step: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl CouplingArgs {
    fn couplings(&self) -> Result<Couplings, RunError> {
        let epsilon = match (self.epsilon, self.epsilon_frac) {
            (Some(e), None) => e,
            (None, Some(f)) => {
                if !(f > 0.0 && f < 1.0) {
                    return Err(RunError::Validation(format!(
                        "--epsilon-frac must lie in (0, 1), got {f}"
                    )));
                }
                f * FRAC_PI_2
            }
            _ => return Err(RunError::Validation("give exactly one of --epsilon, --epsilon-frac".into())),
        };
        Ok(Couplings::new(self.alpha, self.beta, epsilon)?)
    }
}

impl WindowArgs {
    fn window(&self) -> Result<Window, RunError> {
        rpt::ComplexGridFunction::node_count(self.xmin, self.xmax, self.step)?;
        Ok(Window { x_min: self.xmin, x_max: self.xmax, step: self.step })
    }
}

impl GridArgs {
    fn spec(&self) -> Result<DiscretizationSpec, RunError> {
        Ok(DiscretizationSpec::new(self.half_width, self.step)?)
    }
}

impl OutputArgs {
    fn resolve(&self, default: Format) -> (Format, Option<PathBuf>) {
        let format = match self.format {
            Some(FormatArg::Json) => Format::Json,
            Some(FormatArg::Csv) => Format::Csv,
            None => default,
        };
        (format, self.output.clone())
    }
}

impl Cli {
    /// Validates the parsed flags into a [`RunConfig`].
    pub fn into_config(self) -> Result<RunConfig, RunError> {
        let (command, couplings, (format, output)) = match self.command {
            Sub::Spectrum { couplings, out } => {
                (Command::Spectrum, couplings.couplings()?, out.resolve(Format::Json))
            }
            Sub::Wavefunction { couplings, sigma, tau, n, window, out } => (
                Command::Wavefunction { family: family(sigma, tau)?, n, window: window.window()? },
                couplings.couplings()?,
                out.resolve(Format::Csv),
            ),
            Sub::Potential { couplings, window, out } => (
                Command::Potential { window: window.window()? },
                couplings.couplings()?,
                out.resolve(Format::Csv),
            ),
            Sub::Verify { couplings, grid, out } => (
                Command::Verify { grid: grid.spec()? },
                couplings.couplings()?,
                out.resolve(Format::Json),
            ),
            Sub::ScanEpsilon { alpha, beta, eps_list, epsilon, grid, out } => {
                let base = epsilon.unwrap_or(eps_list[0]);
                let couplings = Couplings::new(alpha, beta, base)?;
                for &e in &eps_list {
                    couplings.with_epsilon(e)?;
                }
                (
                    Command::ScanEpsilon { eps_list, grid: grid.spec()? },
                    couplings,
                    out.resolve(Format::Json),
                )
            }
        };
        Ok(RunConfig { command, couplings, format, output })
    }
}
