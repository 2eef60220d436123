//! Command-line front end: orbits, W(A3) slices, dual polytopes and dual
//! cells as JSON, OFF or OBJ.

pub mod mesh;
pub mod report;

use std::fs;
use std::path::PathBuf;

use a4poly::dual::{dual_cell_geometry_with, dual_polytope_with};
use a4poly::{
    build_set, dominant_slices, extract_faces, verify_group, verify_representation, FieldScalar, Rational,
    ScaleReference, SetName, Weight,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use mesh::{write_obj, write_off, FloatMesh};
use report::{CellReport, DualReport, Floats, GroupsReport, OrbitReport, ProjectReport, SetReport, WeylReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] a4poly::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(a4poly::Error::Verification(_) | a4poly::Error::DivisionByZero) => 2,
            CliError::Verification(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Off,
    Obj,
}

#[derive(Debug, Parser)]
#[command(name = "a4poly", version, about = "Exact W(A4) polytopes, their slices and duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Significant digits for float output.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..=17))]
    pub digits: u16,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Omit float fields from JSON.
    #[arg(long, global = true)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct WeightArg {
    /// Dynkin labels, integers or fractions such as 1/2.
    #[arg(num_args = 4, required = true, allow_negative_numbers = true, value_parser = parse_label, value_names = ["A1", "A2", "A3", "A4"])]
    pub labels: Vec<Rational>,
}

impl WeightArg {
    fn weight(&self) -> Weight {
        Weight::new(std::array::from_fn(|i| self.labels[i].clone()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit of a weight: vertices, size and stabilizer.
    Orbit(WeightArg),
    /// W(A3) slices of a dominant weight's orbit.
    Project {
        #[command(flatten)]
        weight: WeightArg,
        /// Slice to mesh for OFF/OBJ output, by position in the report.
        #[arg(long, default_value_t = 0)]
        slice: usize,
    },
    /// Dual polytope of a 0/1 weight.
    Dual {
        #[command(flatten)]
        weight: WeightArg,
        /// Node whose cell centres get scale 1.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        reference: Option<u8>,
    },
    /// Dual cell at one primal vertex.
    Cell {
        #[command(flatten)]
        weight: WeightArg,
        /// Primal vertex; defaults to the weight itself.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_parser = parse_label, value_names = ["B1", "B2", "B3", "B4"])]
        vertex: Option<Vec<Rational>>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        reference: Option<u8>,
    },
    /// Binary quaternion sets and the W(A4) construction, with checks.
    Groups {
        /// Only this set; one of T, T', O, S, I, I~.
        #[arg(long, value_parser = parse_set)]
        set: Option<SetName>,
    },
}

fn parse_label(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|_| format!("not a rational number: {s}"))
}

fn parse_set(s: &str) -> Result<SetName, String> {
    s.parse::<SetName>().map_err(|e| e.to_string())
}

fn reference(node: Option<u8>) -> ScaleReference {
    node.map_or(ScaleReference::MostIncident, |k| ScaleReference::Node(k.into()))
}

/// Rendered output plus the process status it should produce.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub warnings: Vec<String>,
    pub status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, warnings: Vec::new(), status: 0 }
    }
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn mesh_text(mesh: &FloatMesh, cli: &Cli) -> String {
    let digits = cli.digits.into();
    match cli.format {
        Format::Obj => write_obj(mesh, digits),
        _ => write_off(mesh, digits),
    }
}

fn json_only(cli: &Cli, command: &str) -> Result<(), CliError> {
    match cli.format {
        Format::Json => Ok(()),
        other => Err(CliError::Usage(format!("{command} has no {other:?} output; use --format json"))),
    }
}

/// Runs a parsed command without touching stdout or the file system.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let floats = Floats { digits: cli.digits.into(), enabled: !cli.exact };
    match &cli.command {
        Command::Orbit(arg) => {
            json_only(cli, "orbit")?;
            let w = arg.weight();
            let mut out = Output::ok(json(&OrbitReport::new(&w, floats)));
            if w.is_zero() {
                out.warnings.push("trivial orbit: the zero weight is fixed by every element".into());
            }
            Ok(out)
        }
        Command::Project { weight, slice } => {
            let w = weight.weight();
            let slices = dominant_slices(&w)?;
            if cli.format == Format::Json {
                return Ok(Output::ok(json(&ProjectReport::new(&w, &slices, floats))));
            }
            let s = slices
                .get(*slice)
                .ok_or_else(|| CliError::Usage(format!("slice {slice} out of range (0..{})", slices.len())))?;
            let mut mesh = extract_faces(&s.vertices3d)?;
            let [b1, b2, b3] = &s.a3_labels;
            mesh.tag = Some(format!("slice ({b1} {b2} {b3}) charge {} of {w}", s.charge));
            Ok(Output::ok(mesh_text(&FloatMesh::from_exact(&mesh, 1.0), cli)))
        }
        Command::Dual { weight, reference: node } => {
            json_only(cli, "dual")?;
            let w = weight.weight();
            let d = dual_polytope_with(&w, reference(*node))?;
            let sample = dual_cell_geometry_with(&w, &w, reference(*node))?;
            Ok(Output::ok(json(&DualReport::new(&d, &sample, floats)?)))
        }
        Command::Cell { weight, vertex, reference: node } => {
            let w = weight.weight();
            let v = vertex.as_ref().map_or_else(|| w.clone(), |l| Weight::new(std::array::from_fn(|i| l[i].clone())));
            let g = dual_cell_geometry_with(&w, &v, reference(*node))?;
            if !g.flat {
                return Err(CliError::Verification(format!("dual cell at {v} is not flat")));
            }
            if cli.format == Format::Json {
                return Ok(Output::ok(json(&CellReport::new(&g, floats))));
            }
            let unit = 1.0 / FieldScalar::from_rational(&g.frame_norm_sq).to_f64().sqrt();
            Ok(Output::ok(mesh_text(&FloatMesh::from_exact(&g.mesh, unit), cli)))
        }
        Command::Groups { set } => {
            json_only(cli, "groups")?;
            let names: Vec<SetName> = set.map_or_else(|| SetName::ALL.to_vec(), |s| vec![s]);
            let mut failures = Vec::new();
            let sets = names
                .into_iter()
                .map(|name| {
                    let q = build_set(name);
                    let check = verify_group(&q);
                    // only T, O and I are groups; the rest are cosets or unions
                    if matches!(name, SetName::T | SetName::O | SetName::I) && !check.is_group() {
                        failures.push(format!("{name} is not a group"));
                    }
                    SetReport::new(name.to_string(), &q, &check, floats)
                })
                .collect();
            let rep = verify_representation();
            if !rep.is_ok() {
                failures.push(rep.first_mismatch.clone().unwrap_or_else(|| "W(A4) construction".into()));
            }
            let text = json(&GroupsReport { sets, weyl: WeylReport::from(&rep) });
            let status = if failures.is_empty() { 0 } else { 2 };
            Ok(Output { text, warnings: failures, status })
        }
    }
}

/// Parses `argv` (program name first), runs the command and writes its
/// output. Returns the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli).and_then(|out| emit(&cli, out)) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(cli: &Cli, out: Output) -> Result<i32, CliError> {
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    match &cli.out {
        Some(path) => fs::write(path, &out.text).map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => print!("{}", out.text),
    }
    Ok(out.status)
}
