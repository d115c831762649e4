use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dualcheck_cli::config::{self, Overrides, RunError};
use dualcheck_cli::{emit, run_sweep, summarize};

/// Exact and prime-power-modular verification of dual-sequence
/// supercongruences.
#[derive(Parser)]
#[command(name = "dualcheck", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch of congruence and identity checks over primes and points.
    Verify(Box<VerifyArgs>),
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated check ids; see --list-checks. Group aliases: all,
    /// identities, sigma, p4, coeff-expansion, parametric-dual.
    #[arg(long = "check", value_name = "ID[,ID...]")]
    check: Option<String>,

    /// Prime range "a..b" (inclusive, filtered to primes) or explicit list
    /// "5,7,11" (every entry must be prime).
    #[arg(long, value_name = "A..B|LIST")]
    primes: Option<String>,

    /// Evaluation points as comma-separated exact fractions, e.g.
    /// "1,-1/3,2/7". Decimals are rejected.
    #[arg(long = "x", value_name = "FRACS", allow_hyphen_values = true)]
    x: Option<String>,

    /// Override the comparison precision p^E for precision-independent
    /// checks (main-theorem, kw, binom-p1, parametric-dual). Off-default
    /// exponents probe beyond the stated congruences and may fail.
    #[arg(long, value_name = "E")]
    exp: Option<u32>,

    /// Worker count (default: available parallelism).
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,

    /// Report format: json (default) or csv.
    #[arg(long, value_name = "FMT")]
    format: Option<String>,

    /// Report file path; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Bernoulli/Euler cache file; loaded if present, written back after
    /// the run. Absence is never an error.
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Seed for the seeded random sequences (parametric-dual) and the
    /// random Chu-Vandermonde pairs.
    #[arg(long, value_name = "INT")]
    seed: Option<u64>,

    /// Run exact-rational lemma/sigma checks above p = 31 anyway.
    #[arg(long)]
    allow_slow: bool,

    /// Flat "key = value" config file; command-line flags override it.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Print the available check ids and exit.
    #[arg(long)]
    list_checks: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => match verify(*args) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("dualcheck: {e}");
                ExitCode::from(2)
            }
        },
    }
}

const CHECK_IDS: &[&str] = &[
    "main-theorem",
    "mod-p2",
    "kw",
    "rv-refinement",
    "parametric-dual[:constant|:linear|:central-binomial|:randomN]",
    "p4 | p4-half | p4-quarter | p4-third | p4-sixth",
    "binom-p1",
    "coeff-expansion[:low|:mid|:high]",
    "halfline",
    "sigma | sigma-1 | sigma-2 | sigma-3 | sigma-5",
    "block-decomposition",
    "identities | identity-jk | identity-mk | identity-poly-y",
    "harmonic-binom-sum | alt-binom-reciprocal | chu-vandermonde | binom-column-sum",
    "all",
];

fn verify(args: VerifyArgs) -> Result<ExitCode, RunError> {
    if args.list_checks {
        for id in CHECK_IDS {
            println!("{id}");
        }
        return Ok(ExitCode::SUCCESS);
    }

    let file_overrides = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunError::Io(format!("reading config {}: {e}", path.display())))?;
            config::parse_config_file(&text)?
        }
        None => Overrides::default(),
    };
    let flag_overrides = Overrides {
        checks: args.check,
        primes: args.primes,
        x: args.x,
        exp: args.exp,
        jobs: args.jobs,
        format: args.format,
        out: args.out,
        cache: args.cache,
        seed: args.seed,
        allow_slow: if args.allow_slow { Some(true) } else { None },
    };
    let cfg = config::resolve(file_overrides, flag_overrides)?;

    let rows = run_sweep(&cfg)?;
    emit(&rows, cfg.format, cfg.out.as_deref())?;

    let summary = summarize(&rows);
    eprintln!(
        "dualcheck: {} jobs — {} passed, {} failed, {} skipped, {} errors",
        summary.total, summary.passed, summary.failed, summary.skipped, summary.errors
    );
    for row in &rows {
        if row.pass == Some(false) {
            let signed = signed_note(row);
            if row.check.starts_with("p4-") && row.check != "p4-half" {
                eprintln!(
                    "dualcheck: POSSIBLE COUNTEREXAMPLE  {} p={} lhs={} rhs={}{signed} — \
                     this statement is open; please re-verify and report it",
                    row.check,
                    row.p.unwrap_or(0),
                    row.lhs.as_deref().unwrap_or("-"),
                    row.rhs.as_deref().unwrap_or("-"),
                );
            } else {
                eprintln!(
                    "dualcheck: FAIL  {} p={} x={} lhs={} rhs={} status={}{signed}",
                    row.check,
                    row.p.map(|p| p.to_string()).unwrap_or_else(|| "-".into()),
                    row.x.as_deref().unwrap_or("-"),
                    row.lhs.as_deref().unwrap_or("-"),
                    row.rhs.as_deref().unwrap_or("-"),
                    row.status,
                );
            }
        } else if row.status.starts_with("error") {
            eprintln!(
                "dualcheck: ERROR {} p={} x={} — {}",
                row.check,
                row.p.map(|p| p.to_string()).unwrap_or_else(|| "-".into()),
                row.x.as_deref().unwrap_or("-"),
                row.status
            );
        }
    }
    Ok(ExitCode::from(summarize(&rows).exit_code()))
}

/// Small signed-representative hint for failing rows, where |v| is small
/// relative to the modulus; reporting-layer sugar only.
fn signed_note(row: &dualcheck_cli::ReportRow) -> String {
    let (Some(lhs), Some(rhs), Some(modulus)) = (&row.lhs, &row.rhs, &row.modulus) else {
        return String::new();
    };
    let Some((p, e)) = modulus.split_once('^') else {
        return String::new();
    };
    let (Ok(p), Ok(e), Ok(l), Ok(r)) = (
        p.parse::<u128>(),
        e.parse::<u32>(),
        lhs.parse::<u128>(),
        rhs.parse::<u128>(),
    ) else {
        return String::new();
    };
    let m = p.pow(e);
    let signed = |v: u128| -> i128 {
        if 2 * v > m {
            v as i128 - m as i128
        } else {
            v as i128
        }
    };
    format!(" (signed: {} vs {})", signed(l), signed(r))
}
