use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coxeter_davis::cone::{
    find_interior_basepoint, sample_imaginary_cone_from, validate_basepoint, ConePoint,
};
use coxeter_davis::davis::build_davis_ball;
use coxeter_davis::embedding::{embed_ball, verify_embedding, VertexImageTable, VtMode};
use coxeter_davis::export::{
    to_json, DavisExport, EmbeddingExport, ParabolicsExport, PointsExport, RootsExport,
    SamplesExport,
};
use coxeter_davis::normalize::{approximate_limit_roots, normalized_roots};
use coxeter_davis::parabolic::enumerate_spherical_poset;
use coxeter_davis::reflection::generate_roots;
use coxeter_davis::verify::{run_all, CheckConfig, Status, SuiteResult};
use coxeter_davis::{CoxeterDatum, Vector};

/// Directory for output files when `--out` is not given.
const OUT_DIR_ENV: &str = "COXETER_DAVIS_OUT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "coxeter-davis",
    version,
    about = "Root systems, imaginary cones and Davis complexes of Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// JSON datum file: generators, bonds and optional infinite-bond values.
    #[arg(long, global = true)]
    datum: Option<PathBuf>,

    /// Root BFS depth.
    #[arg(long, global = true)]
    depth: Option<usize>,

    /// Word-ball radius.
    #[arg(long, global = true)]
    radius: Option<usize>,

    /// Seed for sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Tolerance override, between 1e-12 and 1e-3.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output file. Defaults to $COXETER_DAVIS_OUT_DIR/<command>.<ext>, or
    /// stdout when that is unset.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Interior basepoint as comma-separated root coordinates.
    #[arg(long, global = true)]
    basepoint: Option<String>,

    #[arg(long, value_enum, global = true, default_value = "linear")]
    vt_mode: VtModeArg,

    /// Samples per chamber for cone-samples.
    #[arg(long, global = true, default_value_t = 4)]
    samples: usize,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Positive roots up to a BFS depth.
    Roots,
    /// Positive roots normalized to coordinate sum 1.
    NormalizedRoots,
    /// Nearly isotropic normalized roots from the deepest levels.
    LimitRoots,
    /// Classification of every standard parabolic subgroup and the spherical poset.
    Parabolics,
    /// Random points of the imaginary cone pushed through a word ball.
    ConeSamples,
    /// Chambers, simplices and gluing of the Davis complex over a word ball.
    Davis,
    /// The equivariant embedding of the Davis complex, with its verification.
    Embed,
    /// Run every invariant suite and print a pass/fail table.
    Check,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Roots => "roots",
            Command::NormalizedRoots => "normalized-roots",
            Command::LimitRoots => "limit-roots",
            Command::Parabolics => "parabolics",
            Command::ConeSamples => "cone-samples",
            Command::Davis => "davis",
            Command::Embed => "embed",
            Command::Check => "check",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum VtModeArg {
    Linear,
    Dot,
}

impl From<VtModeArg> for VtMode {
    fn from(m: VtModeArg) -> Self {
        match m {
            VtModeArg::Linear => VtMode::Linear,
            VtModeArg::Dot => VtMode::Dot,
        }
    }
}

/// Failure classes mapped to exit codes.
enum Failure {
    Input(String),
    Check(String),
}

impl From<coxeter_davis::Error> for Failure {
    fn from(e: coxeter_davis::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_datum(path: Option<&Path>) -> Result<CoxeterDatum, Failure> {
    let path = path.ok_or_else(|| Failure::Input("--datum is required".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(CoxeterDatum::parse(&text)?)
}

fn parse_basepoint(datum: &CoxeterDatum, text: &str) -> Result<ConePoint, Failure> {
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Input(format!("invalid --basepoint: {e}")))?;
    Ok(validate_basepoint(datum, &Vector::from_vec(coords))?)
}

fn basepoint(cli: &Cli, datum: &CoxeterDatum) -> Result<ConePoint, Failure> {
    match &cli.basepoint {
        Some(text) => parse_basepoint(datum, text),
        None => Ok(find_interior_basepoint(datum)?),
    }
}

fn tolerance(cli: &Cli, default: f64) -> Result<f64, Failure> {
    match cli.tol {
        None => Ok(default),
        Some(t) if (1e-12..=1e-3).contains(&t) => Ok(t),
        Some(t) => Err(Failure::Input(format!(
            "--tol {t} is outside [1e-12, 1e-3]"
        ))),
    }
}

/// Writes to `--out`, else into the output directory from the environment,
/// else to stdout.
fn emit(cli: &Cli, ext: &str, body: &str) -> Outcome {
    let target = match (&cli.out, std::env::var_os(OUT_DIR_ENV)) {
        (Some(path), _) => Some(path.clone()),
        (None, Some(dir)) => Some(PathBuf::from(dir).join(format!("{}.{ext}", cli.command.name()))),
        (None, None) => None,
    };
    match target {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|e| {
                    Failure::Input(format!("cannot create {}: {e}", parent.display()))
                })?;
            }
            fs::write(&path, body)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn emit_export(
    cli: &Cli,
    json: impl FnOnce() -> coxeter_davis::Result<String>,
    csv: impl FnOnce() -> coxeter_davis::Result<String>,
) -> Outcome {
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => emit(cli, "json", &json()?),
        Format::Csv => emit(cli, "csv", &csv()?),
    }
}

fn run(cli: &Cli) -> Outcome {
    tolerance(cli, 0.0)?;
    let datum = load_datum(cli.datum.as_deref())?;
    match cli.command {
        Command::Roots => {
            let depth = cli.depth.unwrap_or(4);
            let e = RootsExport::new(&datum, depth, &generate_roots(&datum, depth)?);
            emit_export(cli, || to_json(&e), || e.to_csv(&datum))
        }
        Command::NormalizedRoots => {
            let depth = cli.depth.unwrap_or(8);
            let e = PointsExport::from_normalized(&datum, depth, &normalized_roots(&datum, depth)?);
            emit_export(cli, || to_json(&e), || e.to_csv(&datum))
        }
        Command::LimitRoots => {
            let depth = cli.depth.unwrap_or(10);
            let tol = tolerance(cli, 1e-3)?;
            let est = approximate_limit_roots(&datum, depth, tol)?;
            let e = PointsExport::from_limits(&datum, depth, &est);
            emit_export(cli, || to_json(&e), || e.to_csv(&datum))
        }
        Command::Parabolics => {
            let e = ParabolicsExport::new(&datum, &enumerate_spherical_poset(&datum)?);
            emit_export(cli, || to_json(&e), || e.to_csv(&datum))
        }
        Command::ConeSamples => {
            let radius = cli.radius.unwrap_or(3);
            let seed = cli.seed.unwrap_or(0);
            let v0 = basepoint(cli, &datum)?;
            let samples = sample_imaginary_cone_from(&datum, &v0, radius, cli.samples, seed)?;
            let e = SamplesExport::new(&datum, radius, seed, &samples);
            emit_export(cli, || to_json(&e), || e.to_csv(&datum))
        }
        Command::Davis => {
            let radius = cli.radius.unwrap_or(3);
            let ball = build_davis_ball(&datum, &enumerate_spherical_poset(&datum)?, radius)?;
            let e = DavisExport::new(&datum, radius, &ball);
            emit_export(cli, || to_json(&e), || e.to_csv())
        }
        Command::Embed => embed(cli, &datum),
        Command::Check => check(cli, &datum),
    }
}

fn embed(cli: &Cli, datum: &CoxeterDatum) -> Outcome {
    let radius = cli.radius.unwrap_or(3);
    let poset = enumerate_spherical_poset(datum)?;
    let v0 = basepoint(cli, datum)?;
    let table = VertexImageTable::new(datum, &poset, v0, cli.vt_mode.into())?;
    let ball = build_davis_ball(datum, &poset, radius)?;
    let points = embed_ball(datum, &ball, &table)?;
    let report = verify_embedding(datum, radius, &table)?;
    let passed = report.passed;
    let e = EmbeddingExport::new(datum, &table, ball.chambers().len(), &points, report);
    emit_export(cli, || to_json(&e), || e.to_csv(datum))?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Check(
            "embedding verification failed; see the verification block of the output".into(),
        ))
    }
}

fn check(cli: &Cli, datum: &CoxeterDatum) -> Outcome {
    let defaults = CheckConfig::default();
    let config = CheckConfig {
        depth: cli.depth.unwrap_or(defaults.depth),
        radius: cli.radius.unwrap_or(defaults.radius),
        seed: cli.seed.unwrap_or(defaults.seed),
        tol: tolerance(cli, defaults.tol)?,
        vt_mode: cli.vt_mode.into(),
        ..defaults
    };
    let results = run_all(datum, &config)?;
    let (ext, body) = match cli.format {
        None => ("txt", table(&results)),
        Some(Format::Json) => (
            "json",
            serde_json::to_string_pretty(&results).expect("suite results serialize") + "\n",
        ),
        Some(Format::Csv) => {
            let mut s = String::from("suite,status,max_violation,detail\n");
            for r in &results {
                let _ = writeln!(
                    s,
                    "{},{},{:e},\"{}\"",
                    r.name,
                    status_word(r.status),
                    r.max_violation,
                    r.detail.replace('"', "\"\"")
                );
            }
            ("csv", s)
        }
    };
    emit(cli, ext, &body)?;
    let failed: Vec<String> = results
        .iter()
        .filter(|r| r.failed())
        .map(|r| format!("{} violated ({})", r.name, r.invariant))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failed.join("; ")))
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::NotApplicable => "N/A",
        Status::Info => "INFO",
    }
}

fn table(results: &[SuiteResult]) -> String {
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for r in results {
        let _ = writeln!(
            s,
            "{:<width$}  {:<4}  {:>10.3e}  {}",
            r.name,
            status_word(r.status),
            r.max_violation,
            r.detail
        );
    }
    let count = |st| results.iter().filter(|r| r.status == st).count();
    let _ = writeln!(
        s,
        "{} passed, {} failed, {} not applicable",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::NotApplicable)
    );
    s
}
