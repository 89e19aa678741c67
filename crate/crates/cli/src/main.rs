use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ginlex::betti::{betti, BettiMethod, FieldMode};
use ginlex::error::Error;
use ginlex::families::Family;
use ginlex::format::{ideal_to_json, read_ideal, write_ideal};
use ginlex::gin::{gin_with_retries, GinOptions, DEFAULT_SEED};
use ginlex::lex::lex_ideal_certified;
use ginlex::monomial::TermOrder;
use ginlex::verify::{sweep, theorem_check, Engines, Report, VerifyOptions};
use ginlex::MonomialIdeal;

const WORKERS_ENV: &str = "GINLEX_WORKERS";

#[derive(Parser)]
#[command(name = "ginlex", version, about = "Generic initial ideals, lexsegment ideals and Betti numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti numbers of an ideal.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Koszul)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FieldArg::Modular)]
        field: FieldArg,
        #[command(flatten)]
        out: Output,
    },
    /// Generic initial ideal.
    Gin {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Revlex)]
        order: OrderArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Lexsegment ideal with the same Hilbert function.
    Lex {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Hilbert function `dim I_d` for `d = 0..=to`.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        to: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Check the identities of a family instance, or sweep a family.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    Boston(InstanceArgs),
    Sydney(InstanceArgs),
    Sweep(SweepArgs),
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    max_n: usize,
    #[command(flatten)]
    common: VerifyCommon,
}

#[derive(Args)]
struct VerifyCommon {
    #[arg(long, value_enum, default_value_t = EnginesArg::Default)]
    engines: EnginesArg,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Also write structured output to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Ek,
    Bigatti,
    Graph,
    Koszul,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Exact,
    Modular,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Revlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Boston,
    Sydney,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnginesArg {
    Default,
    All,
}

enum Failure {
    Verification,
    Parse(String),
    Engine(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Parse(_) => 2,
            Failure::Engine(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            other => Failure::Engine(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    configure_workers();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification => eprintln!("verification failed"),
                Failure::Parse(m) => eprintln!("error: {m}"),
                Failure::Engine(m) => eprintln!("engine error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn configure_workers() {
    if let Some(k) = std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if k > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

fn load(path: &Path) -> Result<MonomialIdeal, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    read_ideal(&text).map_err(|e| match e {
        Error::Parse { .. } => Failure::Parse(format!("{}: {e}", path.display())),
        other => Failure::Parse(format!("{}: {other}", path.display())),
    })
}

fn emit(out: &Output, value: Value) -> Result<(), Failure> {
    if let Some(path) = &out.json {
        let mut text = serde_json::to_string_pretty(&value).expect("json value serialises");
        text.push('\n');
        fs::write(path, text).map_err(|e| Failure::Engine(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Betti { file, method, field, out } => {
            let ideal = load(&file)?;
            let mode = match field {
                FieldArg::Exact => FieldMode::Exact,
                FieldArg::Modular => FieldMode::DualPrime,
            };
            let method = match method {
                MethodArg::Ek => BettiMethod::EliahouKervaire,
                MethodArg::Bigatti => BettiMethod::Bigatti,
                MethodArg::Graph => BettiMethod::Graph,
                MethodArg::Koszul => BettiMethod::Koszul(mode),
            };
            let table = match betti(&ideal, method) {
                Err(Error::PrimeDisagreement { .. }) => betti(&ideal, BettiMethod::Koszul(FieldMode::Exact))?,
                other => other?,
            };
            print!("{}", table.render());
            let mut v = table.to_json();
            v["method"] = json!(method.name());
            emit(&out, v)
        }
        Command::Gin { file, order, seed, out } => {
            let ideal = load(&file)?;
            let order = match order {
                OrderArg::Revlex => TermOrder::RevLex,
                OrderArg::Lex => TermOrder::Lex,
            };
            let opts = GinOptions { seed, ..GinOptions::with_order(order) };
            let g = gin_with_retries(&ideal, &opts)?;
            print!("{}", write_ideal(&g.ideal));
            emit(
                &out,
                json!({
                    "command": "gin",
                    "order": order.name(),
                    "seed": seed,
                    "accepted_seed": g.seed,
                    "attempt": g.attempt,
                    "degree_bound": g.degree_bound,
                    "exact": g.exact,
                    "ideal": ideal_to_json(&g.ideal),
                }),
            )
        }
        Command::Lex { file, out } => {
            let ideal = load(&file)?;
            let lex = lex_ideal_certified(&ideal, None)?;
            print!("{}", write_ideal(&lex.ideal));
            emit(
                &out,
                json!({"command": "lex", "degree_bound": lex.degree_bound, "ideal": ideal_to_json(&lex.ideal)}),
            )
        }
        Command::Hilbert { file, to, out } => {
            let ideal = load(&file)?;
            let h = ideal.hilbert_function(to);
            for (d, v) in h.values.iter().enumerate() {
                println!("{d}: {v}");
            }
            emit(&out, json!({"command": "hilbert", "n": ideal.n(), "values": h.values}))
        }
        Command::Verify { target } => match target {
            VerifyTarget::Boston(args) => verify_one(Family::Boston, args),
            VerifyTarget::Sydney(args) => verify_one(Family::Sydney, args),
            VerifyTarget::Sweep(args) => verify_sweep(args),
        },
    }
}

fn options(common: &VerifyCommon) -> VerifyOptions {
    VerifyOptions {
        engines: match common.engines {
            EnginesArg::Default => Engines::Default,
            EnginesArg::All => Engines::All,
        },
        seed: common.seed,
    }
}

fn verify_one(family: Family, args: InstanceArgs) -> Result<(), Failure> {
    let inst = family.instance(args.n, args.i, args.j)?;
    let report = theorem_check(&inst, &options(&args.common)).map_err(|e| Failure::Engine(e.to_string()))?;
    print!("{}", report.render());
    emit(&args.common.out, report.to_json())?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify_sweep(args: SweepArgs) -> Result<(), Failure> {
    let family = match args.family {
        FamilyArg::Boston => Family::Boston,
        FamilyArg::Sydney => Family::Sydney,
    };
    let results = sweep(family, args.max_n, &options(&args.common));
    let mut reports: Vec<Value> = Vec::new();
    let mut engine_error = None;
    let mut all_passed = true;
    for (n, i, j, r) in &results {
        match r {
            Ok(report) => {
                all_passed &= report.passed();
                print_summary(report);
                reports.push(report.to_json());
            }
            Err(e) => {
                println!("{family} n={n} i={i} j={j}: engine error {e}");
                reports.push(json!({"family": family.name(), "n": n, "i": i, "j": j, "error": e.to_string()}));
                engine_error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    let passed = results.iter().filter(|r| r.3.as_ref().is_ok_and(Report::passed)).count();
    println!("{passed}/{} cases passed", results.len());
    emit(
        &args.common.out,
        json!({"family": family.name(), "max_n": args.max_n, "seed": args.common.seed, "cases": reports}),
    )?;
    if let Some(e) = engine_error {
        return Err(Failure::Engine(e));
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn print_summary(report: &Report) {
    let fails: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
    let status = if fails.is_empty() { "PASS".to_string() } else { format!("FAIL ({})", fails.join(", ")) };
    println!(
        "{} n={} i={} j={}: {} claims, {status}",
        report.family,
        report.n,
        report.i,
        report.j,
        report.claims.len()
    );
}
