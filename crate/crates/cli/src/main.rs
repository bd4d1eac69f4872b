mod instance;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use ci_lefschetz::inverse::{colon_identity_holds, duality_holds, partials_span_holds};
use ci_lefschetz::lefschetz::{equivalence_with_form, MAX_SYMBOLIC_VARIABLES};
use ci_lefschetz::{
    associated_form, build_algebra, hessian_nonzero, milnor_pipeline, run_sweep, slp_degree1_exact,
    slp_degree1_probabilistic, AlgebraError, ArtinianCI, HessianMode, LefschetzError,
    MonomialOrder, OrderKind, ProbabilisticParams, SweepConfig,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use instance::{Instance, LoadedInstance};
use report::{
    AlgebraReport, DualityReport, HessianReport, Report, SlpReport, SweepReport, Timings,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid instance file: {0}")]
    Json(serde_json::Error),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ci-lefschetz",
    version,
    about = "Lefschetz and Hessian checks for Artinian complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Monomial order for Gröbner bases (grevlex or lex).
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<OrderKind>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// RNG seed for probabilistic checks; required by `sweep`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, default_value_t = ci_lefschetz::lefschetz::DEFAULT_TRIALS)]
    trials: u32,
    /// Random coordinates are drawn from [-bound, bound].
    #[arg(long, global = true, default_value_t = ci_lefschetz::lefschetz::DEFAULT_BOUND)]
    bound: u32,
    /// Worker threads for `sweep` (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full pipeline: algebra, associated form, duality checks, SLP and Hessian.
    Analyze { path: PathBuf },
    /// The associated form A_f.
    AssociatedForm { path: PathBuf },
    /// Whether the Hessian of A_f vanishes.
    Hessian {
        path: PathBuf,
        /// symbolic (default for n <= 4) or probabilistic.
        #[arg(long, value_parser = parse_mode)]
        mode: Option<HessianMode>,
    },
    /// The strong Lefschetz property in degree 1.
    Slp {
        path: PathBuf,
        /// Decide exactly via the symbolic determinant (n <= 4).
        #[arg(long)]
        exact: bool,
    },
    /// Macaulay duality, partials span and colon identity for A_f.
    Duality { path: PathBuf },
    /// Milnor algebra of a hypersurface given by `f`.
    Milnor { path: PathBuf },
    /// Random complete intersections of a fixed degree tuple.
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long)]
        count: usize,
    },
}

fn parse_order(s: &str) -> Result<OrderKind, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<HessianMode, String> {
    s.parse()
}

/// Everything a single-instance command needs.
struct Context {
    loaded: LoadedInstance,
    alg: ArtinianCI,
    seed: u64,
    params: ProbabilisticParams,
    expected_socle_degree: Option<u32>,
}

fn context(cli: &Cli, path: &Path, milnor_only: bool) -> Result<Context, CliError> {
    let loaded = instance::load(path)?;
    let kind = cli.order.or(loaded.order).unwrap_or_default();
    let order = MonomialOrder::new(kind, loaded.alphabet.clone());
    let seed = cli.seed.or(loaded.file.seed).unwrap_or(0);
    let params = ProbabilisticParams {
        trials: cli.trials,
        bound: cli.bound,
        seed,
    };
    let (alg, expected) = match &loaded.instance {
        Instance::CompleteIntersection(_) if milnor_only => {
            return Err(CliError::Input(
                "milnor needs an instance file with `f`".into(),
            ))
        }
        Instance::CompleteIntersection(gens) => (build_algebra(gens, &order)?, None),
        Instance::Hypersurface(f) => {
            let alg = milnor_pipeline(f, &order)?;
            let d = f.homogeneous_degree().unwrap_or(0);
            (alg, Some(f.nvars() as u32 * (d - 2)))
        }
    };
    Ok(Context {
        loaded,
        alg,
        seed,
        params,
        expected_socle_degree: expected,
    })
}

fn algebra_report(alg: &ArtinianCI) -> AlgebraReport {
    AlgebraReport {
        order: alg.order().kind().name(),
        generators: alg.generators().iter().map(|g| g.to_string()).collect(),
        groebner_basis: alg
            .groebner_basis()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect(),
        hilbert_function: alg.hilbert_function(),
        socle_degree: alg.socle_degree(),
        jacobian: alg.jacobian().to_string(),
        warnings: alg.warnings().iter().map(|w| w.to_string()).collect(),
    }
}

fn base_report(command: &'static str, ctx: &Context) -> Report {
    Report {
        command,
        instance: ctx.loaded.file.clone(),
        seed: ctx.seed,
        algebra: algebra_report(&ctx.alg),
        expected_socle_degree: ctx.expected_socle_degree,
        associated_form: None,
        duality: None,
        slp: None,
        hessian: None,
        agree: None,
        timings: Timings { total_ms: 0.0 },
    }
}

fn duality_report(alg: &ArtinianCI, form: &ci_lefschetz::Polynomial) -> DualityReport {
    DualityReport {
        macaulay_duality: duality_holds(alg, form),
        partials_span: partials_span_holds(alg, form),
        colon_identity: colon_identity_holds(alg, form),
    }
}

/// Result of one command: the text rendering, the JSON value and whether it is an anomaly.
struct Output {
    text: String,
    json: serde_json::Value,
    anomaly: bool,
}

fn output<T: Serialize>(text: String, value: &T, anomaly: bool) -> Output {
    Output {
        text,
        json: serde_json::to_value(value).expect("reports serialize"),
        anomaly,
    }
}

fn run(cli: &Cli, start: Instant) -> Result<Output, CliError> {
    let elapsed = || start.elapsed().as_secs_f64() * 1e3;
    match &cli.command {
        Command::Analyze { path } | Command::Milnor { path } => {
            let milnor = matches!(cli.command, Command::Milnor { .. });
            let ctx = context(cli, path, milnor)?;
            let form = associated_form(&ctx.alg);
            let duality = duality_report(&ctx.alg, &form);
            let eq = equivalence_with_form(&ctx.alg, form, ctx.params)?;
            let mut r = base_report(if milnor { "milnor" } else { "analyze" }, &ctx);
            r.associated_form = Some(eq.associated_form.to_string());
            r.duality = Some(duality);
            r.slp = Some(SlpReport::from(&eq.slp));
            r.hessian = Some(HessianReport::from(&eq.hessian));
            r.agree = Some(eq.agree);
            r.timings.total_ms = elapsed();
            Ok(output(r.text(), &r, r.is_anomaly()))
        }
        Command::AssociatedForm { path } => {
            let ctx = context(cli, path, false)?;
            let mut r = base_report("associated-form", &ctx);
            let form = associated_form(&ctx.alg).to_string();
            let text = format!("A_f = {form}\n");
            r.associated_form = Some(form);
            r.timings.total_ms = elapsed();
            Ok(output(text, &r, false))
        }
        Command::Hessian { path, mode } => {
            let ctx = context(cli, path, false)?;
            let form = associated_form(&ctx.alg);
            let mode = mode.unwrap_or(if ctx.alg.nvars() <= MAX_SYMBOLIC_VARIABLES {
                HessianMode::Symbolic
            } else {
                HessianMode::Probabilistic
            });
            let h = HessianReport::from(&hessian_nonzero(&form, mode, ctx.params)?);
            let text = format!("{}\n", h.text());
            let mut r = base_report("hessian", &ctx);
            r.associated_form = Some(form.to_string());
            r.hessian = Some(h);
            r.timings.total_ms = elapsed();
            Ok(output(text, &r, false))
        }
        Command::Slp { path, exact } => {
            let ctx = context(cli, path, false)?;
            let verdict = if *exact {
                slp_degree1_exact(&ctx.alg)?
            } else {
                slp_degree1_probabilistic(&ctx.alg, ctx.params)?
            };
            let s = SlpReport::from(&verdict);
            let text = format!("{}\n", s.text());
            let mut r = base_report("slp", &ctx);
            r.slp = Some(s);
            r.timings.total_ms = elapsed();
            Ok(output(text, &r, false))
        }
        Command::Duality { path } => {
            let ctx = context(cli, path, false)?;
            let form = associated_form(&ctx.alg);
            let d = duality_report(&ctx.alg, &form);
            let text = format!(
                "Macaulay duality: {}\npartials span: {}\ncolon identity: {}\n",
                d.macaulay_duality, d.partials_span, d.colon_identity
            );
            let mut r = base_report("duality", &ctx);
            r.associated_form = Some(form.to_string());
            r.duality = Some(d);
            r.timings.total_ms = elapsed();
            let anomaly = r.is_anomaly();
            Ok(output(text, &r, anomaly))
        }
        Command::Sweep { degrees, count } => {
            let seed = cli
                .seed
                .ok_or_else(|| CliError::Input("sweep requires --seed".into()))?;
            if degrees.len() < 2 || degrees.iter().any(|&d| d < 2) {
                return Err(CliError::Input(
                    "sweep needs at least 2 degrees, each at least 2".into(),
                ));
            }
            let mut config = SweepConfig::new(degrees.clone(), *count, seed);
            config.order = cli.order.unwrap_or_default();
            config.jobs = cli.jobs;
            config.trials = cli.trials;
            config.bound = cli.bound;
            let summary = run_sweep(&config)?;
            let r = SweepReport::new(&summary, config.order.name(), elapsed());
            Ok(output(r.text(), &r, r.anomalies > 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors; exit code 2 is reserved for anomalies.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let start = Instant::now();
    match run(&cli, start) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = match cli.format {
                Format::Text => write!(stdout, "{}", out.text),
                Format::Json => writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("valid JSON")
                ),
            };
            if out.anomaly {
                eprintln!("anomaly: SLP and Hessian verdicts disagree or a duality check failed");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
