//! Command-line front end: row verification, decomposition, condition
//! profiles, the search engine, the invariant suites, and the two
//! coding-theory calculators. Every JSON document is a typed struct wrapped
//! in a `schema_version` envelope, so outputs can be parsed and re-emitted
//! byte for byte.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::exit;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ryser::scalar::format_scalar;
use ryser::{
    classify_conditions, csv_summary, decompose, is_circulant_hadamard, macwilliams_survey,
    max_code_bruteforce, paf, plotkin_bound, run_search, Circulant, ConditionProfile,
    Decomposition, Error, SearchConfig, SearchMode, SearchReport, SignRow, SuiteResult,
    SurveyReport,
};

const SCHEMA_VERSION: &str = "1";
const ORACLE_LENGTH_CAP: u32 = 12;

#[derive(Parser)]
#[command(name = "ryser", version, about = "Circulant Hadamard matrix toolkit")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a row generates a circulant Hadamard matrix
    Verify(RowInput),
    /// Print the odd/even decomposition of a row
    Decompose(RowInput),
    /// Evaluate the four structural conditions on a row
    Conditions(RowInput),
    /// Run a search over one or more orders
    Search(SearchArgs),
    /// Run named invariant suites
    Lemmas(LemmasArgs),
    /// Plotkin bound and exhaustive maximum code size
    Plotkin(PlotkinArgs),
    /// Survey symmetric orthogonal binary circulants of one order
    Macwilliams(MacwilliamsArgs),
}

#[derive(Args)]
struct RowInput {
    /// Row entries like "1,-1,-1,-1" (or a 0/1 bitstring); "-" reads stdin
    row: Option<String>,
    /// Read the row from a file instead
    #[arg(long, conflicts_with = "row")]
    file: Option<PathBuf>,
}

impl RowInput {
    fn read(&self) -> Result<SignRow, Error> {
        let text = match (&self.row, &self.file) {
            (Some(inline), None) if inline == "-" => {
                let mut buffer = String::new();
                std::io::stdin()
                    .read_to_string(&mut buffer)
                    .map_err(|e| Error::InvalidArgument(format!("cannot read stdin: {e}")))?;
                buffer
            }
            (Some(inline), None) => inline.clone(),
            (None, Some(path)) => fs::read_to_string(path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?,
            _ => {
                return Err(Error::InvalidArgument(
                    "provide a row argument or --file".to_string(),
                ))
            }
        };
        SignRow::from_str(&text)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Rank1,
    Rank2,
}

impl From<ModeArg> for SearchMode {
    fn from(mode: ModeArg) -> SearchMode {
        match mode {
            ModeArg::Full => SearchMode::Full,
            ModeArg::Rank1 => SearchMode::Rank1Constrained,
            ModeArg::Rank2 => SearchMode::Rank2Constrained,
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    /// Orders to search, e.g. --orders 4,6,8
    #[arg(long, required = true, value_delimiter = ',')]
    orders: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Full)]
    mode: ModeArg,
    /// Worker threads; counters are identical for every count
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Keep only orbit-minimal hits, halving the tree
    #[arg(long)]
    symmetry: bool,
    /// Disable the partial row-sum prune
    #[arg(long)]
    no_rowsum_prune: bool,
    /// Disable the partial autocorrelation prune
    #[arg(long)]
    no_paf_prune: bool,
    /// Directory for per-order JSON reports and a CSV summary
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LemmasArgs {
    /// Suite name, or "all"
    #[arg(long, default_value = "all")]
    suite: String,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PlotkinArgs {
    /// Code length
    #[arg(short, long)]
    m: u32,
    /// Minimum distance
    #[arg(short, long)]
    d: u32,
}

#[derive(Args)]
struct MacwilliamsArgs {
    #[arg(long)]
    order: usize,
}

#[derive(Serialize, Deserialize)]
struct Versioned<T> {
    schema_version: String,
    #[serde(flatten)]
    payload: T,
}

fn print_json<T: Serialize>(payload: T) {
    let wrapped = Versioned { schema_version: SCHEMA_VERSION.to_string(), payload };
    println!("{}", serde_json::to_string(&wrapped).expect("report types serialize"));
}

fn json_bytes<T: Serialize>(payload: T) -> String {
    let wrapped = Versioned { schema_version: SCHEMA_VERSION.to_string(), payload };
    serde_json::to_string(&wrapped).expect("report types serialize")
}

#[derive(Serialize, Deserialize)]
struct VerifyView {
    row: SignRow,
    order: usize,
    row_sum: i64,
    hadamard: bool,
    paf: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct ConditionsView {
    row: SignRow,
    #[serde(flatten)]
    profile: ConditionProfile,
    e1: String,
    e2: String,
    lambda1: i64,
    lambda2: i64,
}

#[derive(Serialize, Deserialize)]
struct SearchRunView {
    reports: Vec<SearchReport>,
}

#[derive(Serialize, Deserialize)]
struct LemmasView {
    seed: u64,
    all_passed: bool,
    suites: Vec<SuiteResult>,
}

#[derive(Serialize, Deserialize)]
struct PlotkinView {
    m: u32,
    d: u32,
    bound: Option<u64>,
    oracle_size: Option<u64>,
}

fn fail(err: &Error) -> ! {
    eprintln!("error: {err}");
    let code = match err {
        Error::ResourceLimit(_) => 3,
        _ => 2,
    };
    exit(code)
}

fn format_row(matrix: &Circulant) -> String {
    matrix.first_row().iter().map(format_scalar).collect::<Vec<_>>().join(",")
}

fn cmd_verify(format: Format, input: &RowInput) -> i32 {
    let row = input.read().unwrap_or_else(|e| fail(&e));
    let spectrum = paf(&row).values;
    let hadamard = is_circulant_hadamard(&row);
    let order = row.len();
    let row_sum = row.sum();
    match format {
        Format::Json => print_json(VerifyView {
            row: row.clone(),
            order,
            row_sum,
            hadamard,
            paf: spectrum,
        }),
        Format::Text => {
            if hadamard {
                println!("{row} is the first row of a circulant Hadamard matrix of order {order}");
            } else {
                let witness = (1..=order / 2)
                    .find(|&t| spectrum[t] != 0)
                    .expect("a non-Hadamard row has a nonzero shift");
                println!(
                    "{row} is not circulant Hadamard: autocorrelation at shift {witness} is {}",
                    spectrum[witness]
                );
            }
            println!("row sum {row_sum}; autocorrelation {spectrum:?}");
        }
    }
    i32::from(!hadamard)
}

fn cmd_decompose(format: Format, input: &RowInput) -> i32 {
    let row = input.read().unwrap_or_else(|e| fail(&e));
    let d = decompose(&row).unwrap_or_else(|e| fail(&e));
    match format {
        Format::Json => print_json(d),
        Format::Text => print_decomposition(&d),
    }
    0
}

fn print_decomposition(d: &Decomposition) {
    println!("order {}", 2 * d.e1.order());
    println!("e1: {}   λ1 = {}   rank {}", format_row(&d.e1), d.lambda1, d.rank1.rank);
    println!("e2: {}   λ2 = {}   rank {}", format_row(&d.e2), d.lambda2, d.rank2.rank);
    println!("g1: {}", format_row(&d.g1));
    println!("g2: {}", format_row(&d.g2));
    println!("k1: {}", format_row(&d.k1));
    println!("k2: {}", format_row(&d.k2));
}

fn cmd_conditions(format: Format, input: &RowInput) -> i32 {
    let row = input.read().unwrap_or_else(|e| fail(&e));
    let profile = classify_conditions(&row).unwrap_or_else(|e| fail(&e));
    let d = decompose(&row).unwrap_or_else(|e| fail(&e));
    match format {
        Format::Json => print_json(ConditionsView {
            row,
            profile,
            e1: format_row(&d.e1),
            e2: format_row(&d.e2),
            lambda1: d.lambda1,
            lambda2: d.lambda2,
        }),
        Format::Text => {
            print_conditions(&profile);
            println!("e1: {}   λ1 = {}", format_row(&d.e1), d.lambda1);
            println!("e2: {}   λ2 = {}", format_row(&d.e2), d.lambda2);
        }
    }
    0
}

fn print_conditions(profile: &ConditionProfile) {
    println!("(a) both blocks have rank 1: {}", profile.cond_a);
    println!("(b) Gram entries share one absolute value: {}", profile.cond_b);
    println!("(c) first two rows of each block are dependent: {}", profile.cond_c);
    println!("(d) cross inner products match the diagonal in absolute value: {}", profile.cond_d);
    println!("block ranks: ({}, {})", profile.ranks.0, profile.ranks.1);
    println!("off-row block inner-product sum: {}", profile.graphr_sum);
    println!("λ1·λ2: {}", profile.lambda_product);
}

fn cmd_search(format: Format, args: &SearchArgs) -> i32 {
    let mut config = SearchConfig::new(args.orders.clone(), args.mode.into());
    config.symmetry_reduction = args.symmetry;
    config.prune_rowsum = !args.no_rowsum_prune;
    config.prune_paf_prefix = !args.no_paf_prune;
    config.worker_count = args.workers;

    // Reports are computed in full before any file is written, so an
    // out-of-cap order can never leave partial output behind.
    let reports = run_search(&config).unwrap_or_else(|e| fail(&e));

    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)
            .unwrap_or_else(|e| fail(&Error::InvalidArgument(format!("cannot create {}: {e}", dir.display()))));
        for report in &reports {
            let name = format!("search_{}_order_{}.json", report.mode, report.order);
            fs::write(dir.join(&name), json_bytes(report))
                .unwrap_or_else(|e| fail(&Error::InvalidArgument(format!("cannot write {name}: {e}"))));
        }
        fs::write(dir.join("summary.csv"), csv_summary(&reports))
            .unwrap_or_else(|e| fail(&Error::InvalidArgument(format!("cannot write summary.csv: {e}"))));
    }

    match format {
        Format::Json => print_json(SearchRunView { reports }),
        Format::Text => {
            print!("{}", csv_summary(&reports));
            for report in &reports {
                for hit in &report.hits {
                    println!("hit order {}: {hit}", report.order);
                }
            }
        }
    }
    0
}

fn cmd_lemmas(format: Format, args: &LemmasArgs) -> i32 {
    let suites = if args.suite == "all" {
        ryser::lemmas::run_all(args.seed)
    } else {
        vec![ryser::lemmas::run_suite(&args.suite, args.seed).unwrap_or_else(|e| fail(&e))]
    };
    let all_passed = suites.iter().all(|s| s.passed);
    match format {
        Format::Json => print_json(LemmasView { seed: args.seed, all_passed, suites: suites.clone() }),
        Format::Text => {
            for suite in &suites {
                let status = if suite.passed { "PASS" } else { "FAIL" };
                println!("{status} {} ({} checks) — {}", suite.name, suite.instances, suite.detail);
            }
            println!(
                "{} of {} suites passed",
                suites.iter().filter(|s| s.passed).count(),
                suites.len()
            );
        }
    }
    i32::from(!all_passed)
}

fn cmd_plotkin(format: Format, args: &PlotkinArgs) -> i32 {
    if args.m == 0 || args.d == 0 {
        fail(&Error::InvalidArgument("m and d must be positive".to_string()));
    }
    let bound = plotkin_bound(args.m, args.d);
    let oracle_size = if args.m <= ORACLE_LENGTH_CAP {
        Some(max_code_bruteforce(args.m, args.d).unwrap_or_else(|e| fail(&e)).size)
    } else {
        None
    };
    match format {
        Format::Json => print_json(PlotkinView { m: args.m, d: args.d, bound, oracle_size }),
        Format::Text => {
            match bound {
                Some(b) => println!("Plotkin bound for (m = {}, d = {}): {b}", args.m, args.d),
                None => println!(
                    "Plotkin bound for (m = {}, d = {}): not applicable (needs d even and 2d > m)",
                    args.m, args.d
                ),
            }
            match oracle_size {
                Some(size) => println!("exhaustive maximum code size: {size}"),
                None => println!("exhaustive oracle skipped (length above {ORACLE_LENGTH_CAP})"),
            }
        }
    }
    0
}

fn cmd_macwilliams(format: Format, args: &MacwilliamsArgs) -> i32 {
    // The survey range is part of the argument contract, so an out-of-range
    // order is a usage error rather than a search-cap condition.
    let survey: SurveyReport = macwilliams_survey(args.order)
        .unwrap_or_else(|e| fail(&Error::InvalidArgument(e.to_string())));
    match format {
        Format::Json => print_json(survey),
        Format::Text => {
            let witnesses: Vec<String> =
                survey.witnesses.iter().map(|w| w.to_bitstring()).collect();
            println!(
                "order {}: {} symmetric orthogonal binary circulants: {}",
                survey.order,
                survey.count,
                witnesses.join(", ")
            );
        }
    }
    0
}

fn main() {
    // Rust ignores SIGPIPE, so `ryser ... | head` would otherwise panic on the
    // closed pipe; restore the default disposition and die quietly like cat.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(input) => cmd_verify(cli.format, input),
        Command::Decompose(input) => cmd_decompose(cli.format, input),
        Command::Conditions(input) => cmd_conditions(cli.format, input),
        Command::Search(args) => cmd_search(cli.format, args),
        Command::Lemmas(args) => cmd_lemmas(cli.format, args),
        Command::Plotkin(args) => cmd_plotkin(cli.format, args),
        Command::Macwilliams(args) => cmd_macwilliams(cli.format, args),
    };
    exit(code);
}
