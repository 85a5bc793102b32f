//! JSON and CSV emission.
//!
//! Floats are written with a fixed number of significant digits (17 in
//! JSON, 12 in CSV) so identical runs produce identical bytes.

use std::io::{self, Write};

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::ser::{Formatter, PrettyFormatter};

use rpt::verify::VerificationReport;
use rpt::{ComplexGridFunction, Couplings};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingsEntry {
    pub alpha: f64,
    pub beta: f64,
    pub epsilon: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateEntry {
    pub sigma: i32,
    pub tau: i32,
    pub n: usize,
    pub energy: f64,
    pub kappa: f64,
}

/// One grid sample with command-specific column names.
#[derive(Debug, Clone, Copy)]
pub struct Sample {
    names: [&'static str; 4],
    values: [f64; 4],
}

impl Serialize for Sample {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        for (k, v) in self.names.iter().zip(&self.values) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub fn samples(grid: &ComplexGridFunction, names: [&'static str; 4]) -> Vec<Sample> {
    grid.iter()
        .map(|(x, v)| Sample { names, values: [x, v.re, v.im, v.norm()] })
        .collect()
}

/// Top-level JSON document.
#[derive(Debug, Serialize)]
pub struct Document<'a> {
    pub schema_version: u32,
    pub couplings: CouplingsEntry,
    pub states: Vec<StateEntry>,
    pub report: Option<&'a VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<Sample>>,
}

impl<'a> Document<'a> {
    pub fn new(c: &Couplings, states: Vec<StateEntry>, report: Option<&'a VerificationReport>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            couplings: CouplingsEntry { alpha: c.alpha(), beta: c.beta(), epsilon: c.epsilon() },
            states,
            report,
            samples: None,
        }
    }

    pub fn with_samples(mut self, samples: Vec<Sample>) -> Self {
        self.samples = Some(samples);
        self
    }
}

/// Owned view of a spectrum document, for reading output back.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct SpectrumDocument {
    pub schema_version: u32,
    pub couplings: CouplingsEntry,
    pub states: Vec<StateEntry>,
}

/// Pretty JSON with every float as 17 significant digits; non-finite as `null`.
struct FixedDigits<'a>(PrettyFormatter<'a>);

impl Formatter for FixedDigits<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(w, "{value:.16e}")
        } else {
            w.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> io::Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedDigits(PrettyFormatter::new()));
    value.serialize(&mut ser).map_err(io::Error::other)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    out.write_all(to_json_string(value)?.as_bytes())
}

fn csv_float(v: f64) -> String {
    format!("{v:.11e}")
}

fn csv_opt(v: Option<f64>) -> String {
    v.map(csv_float).unwrap_or_default()
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

pub fn write_grid_csv(out: &mut dyn Write, grid: &ComplexGridFunction, header: [&str; 4]) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(header).map_err(csv_err)?;
    for (x, v) in grid.iter() {
        w.write_record([csv_float(x), csv_float(v.re), csv_float(v.im), csv_float(v.norm())])
            .map_err(csv_err)?;
    }
    w.flush()
}

pub fn write_states_csv(out: &mut dyn Write, states: &[StateEntry]) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["sigma", "tau", "n", "energy", "kappa"]).map_err(csv_err)?;
    for s in states {
        w.write_record([
            s.sigma.to_string(),
            s.tau.to_string(),
            s.n.to_string(),
            csv_float(s.energy),
            csv_float(s.kappa),
        ])
        .map_err(csv_err)?;
    }
    w.flush()
}

pub fn write_report_csv(out: &mut dyn Write, report: &VerificationReport) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record([
        "sigma",
        "tau",
        "n",
        "analytic_energy",
        "numeric_energy_re",
        "numeric_energy_im",
        "rel_deviation",
        "halving_ratio",
        "residual",
        "refined_residual",
        "residual_order",
    ])
    .map_err(csv_err)?;
    for r in &report.states {
        w.write_record([
            r.sigma.to_string(),
            r.tau.to_string(),
            r.n.to_string(),
            csv_float(r.analytic_energy),
            csv_opt(r.numeric_energy_re),
            csv_opt(r.numeric_energy_im),
            csv_opt(r.rel_deviation),
            csv_opt(r.halving_ratio),
            csv_opt(r.residual),
            csv_opt(r.refined_residual),
            csv_opt(r.residual_order),
        ])
        .map_err(csv_err)?;
    }
    w.flush()
}
