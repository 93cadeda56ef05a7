mod report;
mod verify;

use std::collections::BTreeMap;
use std::io::Write as _;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use mapenum_core::{
    enumerate_oriented, enumerate_oriented_moments, enumerate_unoriented,
    enumerate_unoriented_moments, goulden_jackson_table, harer_zagier_table, matching_count,
    signed_matching_count, DegreeProfile, Ensemble, EnumOptions, Error, MomentSpec, OneVertexTable,
    Rational,
};

use report::{Format, Mode, Orientation, RunReport, SCHEMA_VERSION};

/// Matching-space size above which `enumerate` wants `--force`.
const WORKLOAD_LIMIT: u64 = 1_000_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "mapenum",
    version,
    about = "Exact enumeration of labeled maps on surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate connected maps with a given vertex-degree profile.
    Enumerate(EnumerateArgs),
    /// Evaluate the closed-form one-vertex polynomials.
    Oracle(OracleArgs),
    /// Check the engine against built-in tables and identities.
    Verify(VerifyArgs),
    /// Brute-force Gaussian moment by Wick contraction.
    #[command(hide = true)]
    Wick(WickArgs),
}

#[derive(clap::Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum, default_value = "oriented")]
    mode: Orientation,
    /// Vertex degrees, e.g. `3,3,4` or `3:2,4:1`.
    #[arg(long)]
    degrees: String,
    #[arg(long, env = "MAPENUM_THREADS")]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Count every gluing, connected or not, binned by face count.
    #[arg(long)]
    include_disconnected: bool,
    /// Run even when the estimated workload is very large.
    #[arg(long)]
    force: bool,
    /// Suppress progress output on stderr.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Formula {
    Hz,
    Gj,
}

#[derive(clap::Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "paper-tables")]
    PublishedTables,
    Oracles,
    Wick,
    All,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Largest edge count to enumerate.
    #[arg(long, default_value_t = 8)]
    max_edges: u64,
    #[arg(long, env = "MAPENUM_THREADS")]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnsembleArg {
    Gue,
    Goe,
}

#[derive(clap::Args, Debug)]
struct WickArgs {
    #[arg(long, value_enum, default_value = "gue")]
    ensemble: EnsembleArg,
    #[arg(long)]
    degrees: String,
    #[arg(long)]
    n: u32,
}

/// Failure with the process exit status it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::InvalidProfile(_) | Error::OddDartCount(_) | Error::Parse { .. }) => 2,
            Some(Error::Overflow(_)) => 3,
            _ => 1,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Wick(args) => cmd_wick(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_threads(threads: Option<usize>) -> Result<usize, Failure> {
    match threads {
        Some(0) => Err(Failure {
            code: 2,
            error: anyhow::anyhow!("--threads must be at least 1"),
        }),
        Some(t) => Ok(t),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, Failure> {
    let profile: DegreeProfile = args.degrees.parse()?;
    let edges = profile.edge_count()?;
    let threads = resolve_threads(args.threads)?;

    let estimate = match args.mode {
        Orientation::Oriented => matching_count(2 * edges as usize),
        Orientation::Unoriented => signed_matching_count(edges as usize),
    };
    let formula = match args.mode {
        Orientation::Oriented => format!("(2E-1)!! with E={edges}"),
        Orientation::Unoriented => format!("(2E-1)!!*2^E with E={edges}"),
    };
    if !args.force && estimate.is_none_or(|w| w > WORKLOAD_LIMIT) {
        let shown = estimate.map_or_else(|| "more than 2^64".to_string(), |w| w.to_string());
        eprintln!(
            "error: estimated workload {formula} = {shown} exceeds {WORKLOAD_LIMIT}; pass --force to run anyway"
        );
        return Ok(4);
    }

    let mut opts = EnumOptions::threads(threads);
    if !args.quiet {
        let total = estimate.unwrap_or(0);
        opts = opts.with_progress(Arc::new(move |done| {
            if total > 0 {
                eprintln!(
                    "progress: {done}/{total} ({:.1}%)",
                    100.0 * done as f64 / total as f64
                );
            } else {
                eprintln!("progress: {done}");
            }
        }));
    }

    let start = Instant::now();
    let (mode, orientation, bin, bins, totals) = if args.include_disconnected {
        let hist = match args.mode {
            Orientation::Oriented => enumerate_oriented_moments(&profile, &opts)?,
            Orientation::Unoriented => enumerate_unoriented_moments(&profile, &opts)?,
        };
        let totals = BTreeMap::from([("gluings".to_string(), hist.total)]);
        (Mode::Moments, Some(args.mode), "faces", hist.bins, totals)
    } else {
        match args.mode {
            Orientation::Oriented => {
                let h = enumerate_oriented(&profile, &opts)?;
                let totals = BTreeMap::from([
                    ("connected".to_string(), h.total_connected),
                    ("matchings".to_string(), h.total_matchings),
                ]);
                (Mode::Oriented, None, "g", h.bins, totals)
            }
            Orientation::Unoriented => {
                let h = enumerate_unoriented(&profile, &opts)?;
                let totals = BTreeMap::from([
                    ("connected".to_string(), h.total_connected),
                    ("signed_matchings".to_string(), h.total_signed_matchings),
                ]);
                (Mode::Unoriented, None, "chi", h.bins, totals)
            }
        }
    };

    let report = RunReport {
        schema: SCHEMA_VERSION,
        mode,
        orientation,
        profile: profile.entries().clone(),
        bin: bin.to_string(),
        bins: bins.bins().clone(),
        totals,
        elapsed_ms: start.elapsed().as_millis() as u64,
        threads,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    print_out(&report.render(args.format))?;
    Ok(0)
}

fn print_out(s: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|_| out.flush())
        .context("writing output")?;
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Failure> {
    if args.n == 0 {
        return Err(Failure {
            code: 2,
            error: anyhow::anyhow!("--n must be at least 1"),
        });
    }
    let (name, bin, table) = match args.formula {
        Formula::Hz => ("hz", "g", harer_zagier_table(args.n)?),
        Formula::Gj => ("gj", "chi", goulden_jackson_table(args.n)?),
    };
    let text = match args.format {
        Format::Json => oracle_json(name, bin, &table) + "\n",
        Format::Table | Format::Csv => oracle_text(args.formula, bin, &table),
    };
    print_out(&text)?;
    Ok(0)
}

fn oracle_text(formula: Formula, bin: &str, table: &OneVertexTable) -> String {
    let (poly, letter) = match formula {
        Formula::Hz => ("G", "a"),
        Formula::Gj => ("F", "f"),
    };
    // genus ascending, χ descending
    let entries: Vec<(&i64, &num_bigint::BigInt)> = match formula {
        Formula::Hz => table.coefficients.iter().collect(),
        Formula::Gj => table.coefficients.iter().rev().collect(),
    };
    let listed: Vec<String> = entries.iter().map(|(_, v)| v.to_string()).collect();
    let mut out = format!("{poly}_{}(N) = {}\n", table.n, table.polynomial);
    out += &format!("{letter} = ({})\n", listed.join(", "));
    for (k, v) in entries {
        out += &format!("{letter}_{{{},{}}} = {v}   ({bin}={k})\n", table.n, k);
    }
    out
}

fn oracle_json(name: &str, bin: &str, table: &OneVertexTable) -> String {
    use serde_json::{Map, Number, Value};
    let number = |s: String| Value::Number(s.parse::<Number>().expect("integer literal"));
    let coefficients: Map<String, Value> = table
        .coefficients
        .iter()
        .map(|(k, v)| (k.to_string(), number(v.to_string())))
        .collect();
    // polynomial coefficients are integers or halves; keep exact text for the latter
    let polynomial: Vec<Value> = table
        .polynomial
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                number(c.to_string())
            } else {
                Value::String(c.to_string())
            }
        })
        .collect();
    let mut root = Map::new();
    root.insert("formula".into(), Value::String(name.into()));
    root.insert("n".into(), Value::from(table.n));
    root.insert("bin".into(), Value::String(bin.into()));
    root.insert("coefficients".into(), Value::Object(coefficients));
    root.insert("polynomial".into(), Value::Array(polynomial));
    serde_json::to_string_pretty(&Value::Object(root)).expect("json")
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let threads = resolve_threads(args.threads)?;
    let opts = EnumOptions::threads(threads);
    let mut checks = verify::Checks::default();
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::PublishedTables {
        verify::published_tables(&mut checks, args.max_edges, &opts)?;
    }
    if all || args.suite == Suite::Oracles {
        verify::oracles(&mut checks, args.max_edges, &opts)?;
    }
    if all || args.suite == Suite::Wick {
        verify::wick(&mut checks, args.max_edges, &opts)?;
    }
    let failed = checks.failed();
    println!("# {} checks, {} failed", checks.len(), failed);
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_wick(args: WickArgs) -> Result<u8, Failure> {
    let profile: DegreeProfile = args.degrees.parse()?;
    let spec = MomentSpec::new(profile, args.n)?;
    let ensemble = match args.ensemble {
        EnsembleArg::Gue => Ensemble::Gue,
        EnsembleArg::Goe => Ensemble::Goe,
    };
    let value: Rational = mapenum_core::wick::moment(&spec, ensemble)?;
    println!("{value}");
    Ok(0)
}
