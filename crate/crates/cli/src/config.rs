//! Sweep configuration: defaults, the flat key-value config file, and the
//! flag-override merge.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use dualcheck_core::{is_prime, parse_rational, Rational};

/// Errors that stop a run before any job executes. `Usage` maps to exit
/// code 2 and names the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Usage(String),
    Io(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Usage(msg) => write!(f, "usage error: {msg}"),
            RunError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for RunError {}

pub(crate) fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, RunError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(usage(format!("format: expected json or csv, got {other:?}"))),
        }
    }
}

/// A validated sweep description; the Cartesian product of applicable
/// (check, prime, point) combinations is what actually runs.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Check selector tokens, validated against the registry.
    pub checks: Vec<String>,
    pub primes: Vec<u64>,
    pub points: Vec<Rational>,
    /// Optional precision override for the checks whose sides are
    /// precision-independent; `None` means each check's stated modulus.
    pub exponent: Option<u32>,
    pub jobs: usize,
    pub format: ReportFormat,
    pub out: Option<PathBuf>,
    pub cache_path: Option<PathBuf>,
    pub seed: u64,
    pub allow_slow: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            checks: Vec::new(),
            primes: (5..=31).filter(|&p| is_prime(p)).collect(),
            points: Vec::new(),
            exponent: None,
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            format: ReportFormat::Json,
            out: None,
            cache_path: None,
            seed: 42,
            allow_slow: false,
        }
    }
}

/// `"a..b"` (inclusive, filtered to primes) or an explicit comma list in
/// which every entry must be prime.
pub fn parse_primes(s: &str) -> Result<Vec<u64>, RunError> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let lo: u64 = a
            .trim()
            .parse()
            .map_err(|_| usage(format!("primes: bad range start {a:?}")))?;
        let hi: u64 = b
            .trim()
            .parse()
            .map_err(|_| usage(format!("primes: bad range end {b:?}")))?;
        if lo > hi {
            return Err(usage(format!("primes: empty range {lo}..{hi}")));
        }
        return Ok((lo..=hi).filter(|&p| is_prime(p)).collect());
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let p: u64 = part
            .parse()
            .map_err(|_| usage(format!("primes: {part:?} is not an integer")))?;
        if !is_prime(p) {
            return Err(usage(format!("primes: {p} is not prime")));
        }
        out.push(p);
    }
    Ok(out)
}

/// Comma-separated exact fractions; decimals are rejected.
pub fn parse_points(s: &str) -> Result<Vec<Rational>, RunError> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(parse_rational(part).map_err(|e| usage(format!("x: {e}")))?);
    }
    Ok(out)
}

/// Partial settings from one source (config file or command line); later
/// sources override earlier ones field by field.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub checks: Option<String>,
    pub primes: Option<String>,
    pub x: Option<String>,
    pub exp: Option<u32>,
    pub jobs: Option<usize>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub seed: Option<u64>,
    pub allow_slow: Option<bool>,
}

impl Overrides {
    fn merged(file: Overrides, flags: Overrides) -> Overrides {
        Overrides {
            checks: flags.checks.or(file.checks),
            primes: flags.primes.or(file.primes),
            x: flags.x.or(file.x),
            exp: flags.exp.or(file.exp),
            jobs: flags.jobs.or(file.jobs),
            format: flags.format.or(file.format),
            out: flags.out.or(file.out),
            cache: flags.cache.or(file.cache),
            seed: flags.seed.or(file.seed),
            allow_slow: flags.allow_slow.or(file.allow_slow),
        }
    }
}

/// Parses the flat `key = value` config file format. Lists are
/// comma-separated; `#` starts a comment.
pub fn parse_config_file(text: &str) -> Result<Overrides, RunError> {
    let mut o = Overrides::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key = value", lineno + 1)))?;
        let key = key.trim();
        let value = value.trim().to_string();
        let bad_num = |field: &str| usage(format!("config {field}: bad number {value:?}"));
        match key {
            "checks" | "check" => o.checks = Some(value),
            "primes" => o.primes = Some(value),
            "x" | "points" => o.x = Some(value),
            "exp" => o.exp = Some(value.parse().map_err(|_| bad_num("exp"))?),
            "jobs" => o.jobs = Some(value.parse().map_err(|_| bad_num("jobs"))?),
            "format" => o.format = Some(value),
            "out" => o.out = Some(PathBuf::from(value)),
            "cache" => o.cache = Some(PathBuf::from(value)),
            "seed" => o.seed = Some(value.parse().map_err(|_| bad_num("seed"))?),
            "allow-slow" | "allow_slow" => {
                o.allow_slow = Some(value.parse().map_err(|_| {
                    usage(format!("config allow-slow: expected true/false, got {value:?}"))
                })?)
            }
            other => return Err(usage(format!("config line {}: unknown key {other:?}", lineno + 1))),
        }
    }
    Ok(o)
}

/// Merges file settings and flag settings (flags win) into a validated
/// [`SweepConfig`].
pub fn resolve(file: Overrides, flags: Overrides) -> Result<SweepConfig, RunError> {
    let o = Overrides::merged(file, flags);
    let mut cfg = SweepConfig::default();
    if let Some(checks) = o.checks {
        let tokens: Vec<String> = checks
            .split(',')
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty())
            .collect();
        crate::runner::expand_checks(&tokens)?; // validate early
        cfg.checks = tokens;
    }
    if let Some(primes) = o.primes {
        cfg.primes = parse_primes(&primes)?;
    }
    if let Some(x) = o.x {
        cfg.points = parse_points(&x)?;
    }
    if let Some(exp) = o.exp {
        if !(1..=4).contains(&exp) {
            return Err(usage(format!("exp: must be between 1 and 4, got {exp}")));
        }
        cfg.exponent = Some(exp);
    }
    if let Some(jobs) = o.jobs {
        if jobs < 1 {
            return Err(usage("jobs: must be at least 1"));
        }
        cfg.jobs = jobs;
    }
    if let Some(format) = o.format {
        cfg.format = format.parse()?;
    }
    cfg.out = o.out;
    cfg.cache_path = o.cache;
    if let Some(seed) = o.seed {
        cfg.seed = seed;
    }
    if let Some(allow) = o.allow_slow {
        cfg.allow_slow = allow;
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dualcheck_core::ratio;

    #[test]
    fn primes_range_filters_and_list_rejects() {
        assert_eq!(parse_primes("5..13").unwrap(), vec![5, 7, 11, 13]);
        assert_eq!(parse_primes("9..11").unwrap(), vec![11]);
        assert_eq!(parse_primes("3,5,7").unwrap(), vec![3, 5, 7]);
        assert!(parse_primes("9,11").is_err());
        assert!(parse_primes("11..9").is_err());
        assert!(parse_primes("x..9").is_err());
    }

    #[test]
    fn points_parse_exactly() {
        assert_eq!(
            parse_points("1,-1/3,-1/4").unwrap(),
            vec![ratio(1, 1), ratio(-1, 3), ratio(-1, 4)]
        );
        assert!(parse_points("0.5").is_err());
        // non-p-integral points are accepted at parse; they surface per job
        assert_eq!(parse_points("1/7").unwrap(), vec![ratio(1, 7)]);
    }

    #[test]
    fn file_then_flags_precedence() {
        let file = parse_config_file(
            "# sweep\nchecks = kw\nprimes = 5..7\nseed = 7\nformat = csv\nallow-slow = true\n",
        )
        .unwrap();
        let flags = Overrides {
            primes: Some("11".into()),
            ..Overrides::default()
        };
        let cfg = resolve(file, flags).unwrap();
        assert_eq!(cfg.checks, vec!["kw".to_string()]);
        assert_eq!(cfg.primes, vec![11]);
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.format, ReportFormat::Csv);
        assert!(cfg.allow_slow);
    }

    #[test]
    fn bad_fields_name_themselves() {
        let err = resolve(
            Overrides::default(),
            Overrides {
                checks: Some("no-such-check".into()),
                ..Overrides::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, RunError::Usage(ref m) if m.contains("no-such-check")));
        let err = resolve(
            Overrides::default(),
            Overrides {
                exp: Some(9),
                ..Overrides::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, RunError::Usage(ref m) if m.contains("exp")));
        assert!(parse_config_file("mystery = 1").is_err());
    }
}
