//! The `corehooks` command line.
//!
//! Exit codes: 0 on success (every checked statement holds), 1 when a
//! counterexample or identity mismatch is found, 2 on usage or
//! configuration errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::enumerate::{partitions_of, t_cores_of, PartFilter};
use crate::error::Error;
use crate::partition::Partition;
use crate::qseries::{
    eta_quotient_tcore, theta_triangular, triple_triangular_series, verify_identity,
};
use crate::quadform::odd_representation;
use crate::stats::{chain_table, count_rows, BiasChain, BiasRecord, HookKey, Relation, Verdict};
use crate::verify::{scan_conjecture_5core, CheckOutcome, Statement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "corehooks",
    version,
    about = "Hook-length statistics of t-core partitions"
)]
pub struct Cli {
    /// Worker threads for range sweeps.
    #[arg(long, global = true, env = "COREHOOKS_WORKERS", value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List partitions of n, or its t-cores, one per line.
    Enum(EnumArgs),
    /// Print a_{t,k}(n) for one n or a range, optionally as a bias table.
    Count(CountArgs),
    /// Coefficients of the t-core generating function.
    Series(SeriesArgs),
    /// Check a named statement over a finite range.
    Verify(VerifyArgs),
    /// Scan the conjectured 5-core chain a_{5,1} >= a_{5,3} >= a_{5,6}.
    #[command(name = "conj-scan")]
    ConjScan(ConjScanArgs),
    /// Odd representations (2h+1)^2 + 4 = x^2 + 2y^2 + 2z^2.
    Quadform(QuadformArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Jsonl,
}

#[derive(Debug, Args)]
struct FilterArgs {
    /// Part values the partitions must avoid, e.g. --exclude 1,2
    #[arg(long, value_delimiter = ',')]
    exclude: Vec<usize>,

    /// Smallest allowed part.
    #[arg(long, default_value_t = 1)]
    min_part: usize,
}

impl FilterArgs {
    fn filter(&self) -> PartFilter {
        PartFilter::excluding(self.exclude.iter().copied()).with_min_part(self.min_part)
    }
}

#[derive(Debug, Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    /// Only t-cores (t >= 2); all partitions when absent.
    #[arg(long)]
    t: Option<usize>,
    #[command(flatten)]
    filter: FilterArgs,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    t: usize,
    /// One or more hook lengths, e.g. --k 1,3,6
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<usize>,
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    n: Option<usize>,
    /// Inclusive range LO..HI
    #[arg(long, value_parser = parse_range)]
    n_range: Option<RangeInclusive<usize>>,
    /// Relations between consecutive k, e.g. ">=,>="; switches to a bias table.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    relations: Vec<String>,
    #[command(flatten)]
    filter: FilterArgs,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = 200)]
    order: usize,
    /// Compare against an independent series and fail on mismatch.
    #[arg(long, value_enum)]
    against: Option<Oracle>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    /// Sum of q^{l(l+1)/2}
    Theta,
    /// Sum of q^{m(m+1)/2 + r(r+1) + s(s+1)}
    Triple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckId {
    Prop21,
    Thm13,
    Thm14,
    Thm16,
    Thm17,
    Thm18,
    Thm19,
    Region,
    Conj15,
    Conditions,
    All,
}

impl CheckId {
    fn statements(self) -> Vec<Statement> {
        match self {
            CheckId::All => Statement::ALL.to_vec(),
            other => {
                let id = other
                    .to_possible_value()
                    .expect("value")
                    .get_name()
                    .to_string();
                vec![Statement::from_id(&id).expect("every check id names a statement")]
            }
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: CheckId,
    #[arg(long, default_value_t = 60)]
    n_max: usize,
    /// Directory for JSON failure reports.
    #[arg(long, default_value = ".")]
    report_dir: PathBuf,
    /// On failure, write every core of the failing n here (JSON lines).
    #[arg(long)]
    seed_dump: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConjScanArgs {
    #[arg(long, default_value_t = 300)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// On failure, write every 5-core of each failing n here (JSON lines).
    #[arg(long)]
    seed_dump: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct QuadformArgs {
    #[arg(long, default_value_t = 1000)]
    h_max: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let workers = cli.workers.map_or_else(
        || std::thread::available_parallelism().map_or(1, |n| n.get()),
        |w| w as usize,
    );
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("corehooks: cannot start {workers} workers: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| {
        let mut out: Box<dyn Write> = match &cli.output {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        let code = dispatch(&cli.command, &mut out)?;
        out.flush()?;
        Ok::<i32, CliError>(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("corehooks: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Enum(args) => run_enum(args, out),
        Command::Count(args) => run_count(args, out),
        Command::Series(args) => run_series(args, out),
        Command::Verify(args) => run_verify(args, out),
        Command::ConjScan(args) => run_conj_scan(args, out),
        Command::Quadform(args) => run_quadform(args, out),
    }
}

fn emit_json_array<T: Serialize>(out: &mut dyn Write, items: &[T]) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, items)?;
    writeln!(out)?;
    Ok(())
}

fn emit_json_lines<T: Serialize>(out: &mut dyn Write, items: &[T]) -> Result<(), CliError> {
    for item in items {
        serde_json::to_writer(&mut *out, item)?;
        writeln!(out)?;
    }
    Ok(())
}

fn run_enum(args: &EnumArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let filter = args.filter.filter();
    let parts: Vec<Partition> = match args.t {
        Some(t) => t_cores_of(args.n, t, &filter)?.collect(),
        None => partitions_of(args.n, &filter).collect(),
    };
    match args.format {
        Format::Jsonl => {
            for p in &parts {
                writeln!(out, "{p}")?;
            }
        }
        Format::Json => emit_json_array(out, &parts)?,
        Format::Csv => {
            writeln!(out, "partition")?;
            for p in &parts {
                writeln!(out, "\"{p}\"")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    t: usize,
    k: usize,
    value: u64,
}

fn run_count(args: &CountArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let range = match (&args.n, &args.n_range) {
        (Some(n), _) => *n..=*n,
        (None, Some(r)) => r.clone(),
        (None, None) => {
            return Err(CliError::Usage(
                "one of --n or --n-range is required".into(),
            ))
        }
    };
    let filter = args.filter.filter();
    if !args.relations.is_empty() {
        let relations = args
            .relations
            .iter()
            .map(|r| r.parse::<Relation>())
            .collect::<Result<Vec<_>, _>>()?;
        let chain = BiasChain::single(args.t, &args.k, relations, filter)?;
        let rows = chain_table(&chain, range)?;
        write_bias_rows(out, &chain.terms, &rows, args.format.unwrap_or(Format::Csv))?;
        let failed = rows.iter().any(|r| r.verdict == Verdict::Fails);
        return Ok(if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK });
    }
    let rows: Vec<CountRow> = count_rows(args.t, &args.k, range, &filter)?
        .into_iter()
        .map(|(n, k, value)| CountRow {
            n,
            t: args.t,
            k,
            value,
        })
        .collect();
    match args.format {
        None if rows.len() == 1 => writeln!(out, "{}", rows[0].value)?,
        None | Some(Format::Csv) => {
            writeln!(out, "n,t,k,value")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.n, r.t, r.k, r.value)?;
            }
        }
        Some(Format::Json) => emit_json_array(out, &rows)?,
        Some(Format::Jsonl) => emit_json_lines(out, &rows)?,
    }
    Ok(EXIT_OK)
}

fn write_bias_rows(
    out: &mut dyn Write,
    keys: &[HookKey],
    rows: &[BiasRecord],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", BiasRecord::csv_header(keys))?;
            for r in rows {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Format::Json => emit_json_array(out, rows)?,
        Format::Jsonl => emit_json_lines(out, rows)?,
    }
    Ok(())
}

fn run_series(args: &SeriesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let series = eta_quotient_tcore(args.t, args.order)?;
    #[derive(Serialize)]
    struct Coefficient {
        n: usize,
        // Serialized as a decimal string so values past 2^53 stay exact.
        coefficient: String,
    }
    let rows: Vec<Coefficient> = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| Coefficient {
            n,
            coefficient: c.to_string(),
        })
        .collect();
    match args.format {
        Format::Csv => {
            writeln!(out, "n,coefficient")?;
            for r in &rows {
                writeln!(out, "{},{}", r.n, r.coefficient)?;
            }
        }
        Format::Json => emit_json_array(out, &rows)?,
        Format::Jsonl => emit_json_lines(out, &rows)?,
    }
    let Some(oracle) = args.against else {
        return Ok(EXIT_OK);
    };
    let other = match oracle {
        Oracle::Theta => theta_triangular(args.order),
        Oracle::Triple => triple_triangular_series(args.order),
    };
    let check = verify_identity(&series, &other)?;
    match check.first_mismatch {
        None => Ok(EXIT_OK),
        Some(n) => {
            eprintln!(
                "identity mismatch at n={n}: {} vs {}",
                series.coeffs()[n],
                other.coeffs()[n]
            );
            Ok(EXIT_COUNTEREXAMPLE)
        }
    }
}

fn write_report(dir: &Path, name: &str, body: &serde_json::Value) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("corehooks-{name}-report.json"));
    let mut file = BufWriter::new(File::create(&path)?);
    serde_json::to_writer_pretty(&mut file, body)?;
    writeln!(file)?;
    file.flush()?;
    Ok(path)
}

/// Core parameter and filter whose cores a failing statement is about.
fn dump_universe(statement: Statement) -> Option<(usize, PartFilter)> {
    match statement {
        Statement::TwoCoreFormula => Some((2, PartFilter::none())),
        Statement::CoreConditions | Statement::RegionTheorem | Statement::TwoVersusFour => None,
        other => other.chain().map(|c| (c.terms[0].t, c.filter)),
    }
}

fn dump_cores(path: &Path, t: usize, ns: &[usize], filter: &PartFilter) -> Result<(), CliError> {
    let mut file = BufWriter::new(File::create(path)?);
    for &n in ns {
        for p in t_cores_of(n, t, filter)? {
            let prof = p.hook_profile();
            let hooks: serde_json::Map<String, serde_json::Value> = prof
                .iter()
                .map(|(k, c)| (k.to_string(), json!(c)))
                .collect();
            serde_json::to_writer(
                &mut file,
                &json!({ "n": n, "t": t, "partition": p, "hooks": hooks }),
            )?;
            writeln!(file)?;
        }
    }
    file.flush()?;
    Ok(())
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut code = EXIT_OK;
    for statement in args.check.statements() {
        let outcome: CheckOutcome = statement.check(args.n_max)?;
        let verdict = if outcome.holds { "HOLDS" } else { "FAILS" };
        writeln!(
            out,
            "{} {verdict} n_max={} checked={}",
            statement.id(),
            args.n_max,
            outcome.checked
        )?;
        if let Some(failure) = &outcome.first_failure {
            code = EXIT_COUNTEREXAMPLE;
            writeln!(out, "  first failure: {failure}")?;
            let report = json!({
                "check": statement.id(),
                "n_max": args.n_max,
                "outcome": outcome,
            });
            let path = write_report(&args.report_dir, statement.id(), &report)?;
            writeln!(out, "  report: {}", path.display())?;
            if let (Some(dump), Some(n), Some((t, filter))) =
                (&args.seed_dump, failure.n, dump_universe(statement))
            {
                dump_cores(dump, t, &[n], &filter)?;
                writeln!(out, "  seed dump: {}", dump.display())?;
            }
        }
    }
    Ok(code)
}

fn run_conj_scan(args: &ConjScanArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let chain = Statement::FiveCoreChain.chain().expect("chain");
    let rows = chain_table(&chain, 0..=args.n_max)?;
    write_bias_rows(out, &chain.terms, &rows, args.format)?;
    let fails = scan_conjecture_5core(args.n_max)?;
    if fails.is_empty() {
        return Ok(EXIT_OK);
    }
    let ns: Vec<usize> = fails.iter().map(|r| r.n).collect();
    eprintln!("counterexamples to the 5-core chain at n = {ns:?}");
    if let Some(dump) = &args.seed_dump {
        dump_cores(dump, 5, &ns, &PartFilter::none())?;
        eprintln!("seed dump: {}", dump.display());
    }
    Ok(EXIT_COUNTEREXAMPLE)
}

fn run_quadform(args: &QuadformArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let reps = (2..=args.h_max)
        .map(odd_representation)
        .collect::<Result<Vec<_>, _>>()?;
    let bad = reps.iter().find(|r| !r.is_valid());
    match args.format {
        Format::Csv => {
            writeln!(out, "h,x,y,z,m,r,s")?;
            for r in &reps {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.h, r.x, r.y, r.z, r.m, r.r, r.s
                )?;
            }
        }
        Format::Json => emit_json_array(out, &reps)?,
        Format::Jsonl => emit_json_lines(out, &reps)?,
    }
    if let Some(r) = bad {
        eprintln!("invalid representation for h={}: {r:?}", r.h);
        return Ok(EXIT_COUNTEREXAMPLE);
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("0..20").unwrap(), 0..=20);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("5").is_err());
    }

    #[test]
    fn every_check_id_maps_to_one_statement() {
        let ids: Vec<CheckId> = CheckId::value_variants()
            .iter()
            .copied()
            .filter(|c| *c != CheckId::All)
            .collect();
        assert_eq!(ids.len(), Statement::ALL.len());
        for id in ids {
            assert_eq!(id.statements().len(), 1);
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run(["corehooks", "count", "--t", "9", "--k", "1", "--n", "-3"]),
            EXIT_USAGE
        );
        assert_eq!(run(["corehooks", "frobnicate"]), EXIT_USAGE);
        assert_eq!(
            run(["corehooks", "count", "--t", "1", "--k", "1", "--n", "3"]),
            EXIT_USAGE
        );
    }
}
