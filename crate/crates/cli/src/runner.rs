//! Job expansion and execution.
//!
//! A job is one report row: a single congruence instance, one
//! index-swept congruence family at a fixed (p, x), or one exhaustive
//! identity family. Jobs are built in a deterministic order and results are
//! collected in that order, so reports are byte-identical across reruns and
//! worker counts (apart from `elapsed_ms`).

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use dualcheck_core::{
    alternating_binom_reciprocal, binom_column_sum, check_binom_p1, check_block_decomposition,
    check_coeff_expansion, check_halfline, check_kw, check_main_theorem, check_mod_p2,
    check_p4_conjecture, check_parametric_dual, check_rv_refinement, check_sigma_block,
    chu_vandermonde, decompose, format_rational, harmonic_binom_sum, identity_jk, identity_mk,
    identity_poly_y, int, p_adic_valuation, ratio, CheckReport, IdentityOutcome, Modulus,
    P4Target, Rational, SequenceSpec, SpecialCache,
};

use crate::config::{usage, RunError, SweepConfig};

/// Exact-rational lemma and block checks refuse primes above this without
/// `--allow-slow`; their cost grows like p³-p⁴.
pub const ORACLE_SCALE_LIMIT: u64 = 31;

/// How many seeded random sequences an unqualified `parametric-dual` runs.
pub const RANDOM_SEQUENCES: u8 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffCase {
    Low,
    Mid,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqSlot {
    Constant,
    Linear,
    CentralBinomial,
    Random(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityFamily {
    Jk,
    Mk,
    PolyY,
    HarmonicBinomSum,
    AltBinomReciprocal,
    ChuVandermonde,
    BinomColumnSum,
}

/// One selectable job family; the `check` column of a report row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JobFamily {
    MainTheorem,
    ModP2,
    Kw,
    RvRefinement,
    ParametricDual(SeqSlot),
    P4(P4Target),
    BinomP1,
    Coeff(CoeffCase),
    Halfline,
    Sigma(u8),
    BlockDecomposition,
    Identity(IdentityFamily),
}

impl JobFamily {
    pub fn id(self) -> String {
        match self {
            JobFamily::MainTheorem => "main-theorem".into(),
            JobFamily::ModP2 => "mod-p2".into(),
            JobFamily::Kw => "kw".into(),
            JobFamily::RvRefinement => "rv-refinement".into(),
            JobFamily::ParametricDual(slot) => match slot {
                SeqSlot::Constant => "parametric-dual:constant".into(),
                SeqSlot::Linear => "parametric-dual:linear".into(),
                SeqSlot::CentralBinomial => "parametric-dual:central-binomial".into(),
                SeqSlot::Random(i) => format!("parametric-dual:random{i}"),
            },
            JobFamily::P4(t) => match t {
                P4Target::Half => "p4-half".into(),
                P4Target::Quarter => "p4-quarter".into(),
                P4Target::Third => "p4-third".into(),
                P4Target::Sixth => "p4-sixth".into(),
            },
            JobFamily::BinomP1 => "binom-p1".into(),
            JobFamily::Coeff(case) => match case {
                CoeffCase::Low => "coeff-expansion:low".into(),
                CoeffCase::Mid => "coeff-expansion:mid".into(),
                CoeffCase::High => "coeff-expansion:high".into(),
            },
            JobFamily::Halfline => "halfline".into(),
            JobFamily::Sigma(w) => format!("sigma-{w}"),
            JobFamily::BlockDecomposition => "block-decomposition".into(),
            JobFamily::Identity(f) => match f {
                IdentityFamily::Jk => "identity-jk".into(),
                IdentityFamily::Mk => "identity-mk".into(),
                IdentityFamily::PolyY => "identity-poly-y".into(),
                IdentityFamily::HarmonicBinomSum => "harmonic-binom-sum".into(),
                IdentityFamily::AltBinomReciprocal => "alt-binom-reciprocal".into(),
                IdentityFamily::ChuVandermonde => "chu-vandermonde".into(),
                IdentityFamily::BinomColumnSum => "binom-column-sum".into(),
            },
        }
    }

    fn takes_p(self) -> bool {
        !matches!(self, JobFamily::Identity(_))
    }

    fn takes_x(self) -> bool {
        matches!(
            self,
            JobFamily::MainTheorem
                | JobFamily::ModP2
                | JobFamily::ParametricDual(_)
                | JobFamily::Coeff(_)
                | JobFamily::Halfline
                | JobFamily::Sigma(_)
                | JobFamily::BlockDecomposition
        )
    }

    /// Families whose left side runs through the exact rational oracle.
    fn oracle_scale(self) -> bool {
        matches!(
            self,
            JobFamily::BinomP1
                | JobFamily::Coeff(_)
                | JobFamily::Halfline
                | JobFamily::Sigma(_)
                | JobFamily::BlockDecomposition
        )
    }

    /// Needs Bernoulli or Euler tables populated up to ~p.
    fn needs_cache(self) -> bool {
        matches!(self, JobFamily::RvRefinement | JobFamily::P4(_))
    }
}

const GROUP_ALL: &str = "all";

fn all_families() -> Vec<JobFamily> {
    let mut out = vec![
        JobFamily::MainTheorem,
        JobFamily::ModP2,
        JobFamily::Kw,
        JobFamily::RvRefinement,
    ];
    out.extend(parametric_dual_families());
    out.extend(P4Target::ALL.map(JobFamily::P4));
    out.extend([
        JobFamily::BinomP1,
        JobFamily::Coeff(CoeffCase::Low),
        JobFamily::Coeff(CoeffCase::Mid),
        JobFamily::Coeff(CoeffCase::High),
        JobFamily::Halfline,
        JobFamily::Sigma(1),
        JobFamily::Sigma(2),
        JobFamily::Sigma(3),
        JobFamily::Sigma(5),
        JobFamily::BlockDecomposition,
    ]);
    out.extend(identity_families());
    out
}

fn parametric_dual_families() -> Vec<JobFamily> {
    let mut out = vec![
        JobFamily::ParametricDual(SeqSlot::Constant),
        JobFamily::ParametricDual(SeqSlot::Linear),
        JobFamily::ParametricDual(SeqSlot::CentralBinomial),
    ];
    for i in 0..RANDOM_SEQUENCES {
        out.push(JobFamily::ParametricDual(SeqSlot::Random(i)));
    }
    out
}

fn identity_families() -> Vec<JobFamily> {
    [
        IdentityFamily::Jk,
        IdentityFamily::Mk,
        IdentityFamily::PolyY,
        IdentityFamily::HarmonicBinomSum,
        IdentityFamily::AltBinomReciprocal,
        IdentityFamily::ChuVandermonde,
        IdentityFamily::BinomColumnSum,
    ]
    .map(JobFamily::Identity)
    .to_vec()
}

/// Expands selector tokens (ids, qualified ids, and the group aliases
/// `all`, `identities`, `sigma`, `p4`) into a deduplicated family list.
pub fn expand_checks(tokens: &[String]) -> Result<Vec<JobFamily>, RunError> {
    let mut out: Vec<JobFamily> = Vec::new();
    let push = |fams: Vec<JobFamily>, out: &mut Vec<JobFamily>| {
        for f in fams {
            if !out.contains(&f) {
                out.push(f);
            }
        }
    };
    for token in tokens {
        let families = match token.as_str() {
            GROUP_ALL => all_families(),
            "identities" => identity_families(),
            "sigma" => vec![
                JobFamily::Sigma(1),
                JobFamily::Sigma(2),
                JobFamily::Sigma(3),
                JobFamily::Sigma(5),
            ],
            "p4" => P4Target::ALL.map(JobFamily::P4).to_vec(),
            "coeff-expansion" => vec![
                JobFamily::Coeff(CoeffCase::Low),
                JobFamily::Coeff(CoeffCase::Mid),
                JobFamily::Coeff(CoeffCase::High),
            ],
            "parametric-dual" => parametric_dual_families(),
            single => vec![parse_single_family(single)
                .ok_or_else(|| usage(format!("--check: unknown check id {token:?}")))?],
        };
        push(families, &mut out);
    }
    Ok(out)
}

fn parse_single_family(s: &str) -> Option<JobFamily> {
    let fixed = match s {
        "main-theorem" => Some(JobFamily::MainTheorem),
        "mod-p2" => Some(JobFamily::ModP2),
        "kw" => Some(JobFamily::Kw),
        "rv-refinement" => Some(JobFamily::RvRefinement),
        "p4-half" => Some(JobFamily::P4(P4Target::Half)),
        "p4-quarter" => Some(JobFamily::P4(P4Target::Quarter)),
        "p4-third" => Some(JobFamily::P4(P4Target::Third)),
        "p4-sixth" => Some(JobFamily::P4(P4Target::Sixth)),
        "binom-p1" => Some(JobFamily::BinomP1),
        "coeff-expansion:low" => Some(JobFamily::Coeff(CoeffCase::Low)),
        "coeff-expansion:mid" => Some(JobFamily::Coeff(CoeffCase::Mid)),
        "coeff-expansion:high" => Some(JobFamily::Coeff(CoeffCase::High)),
        "halfline" => Some(JobFamily::Halfline),
        "sigma-1" => Some(JobFamily::Sigma(1)),
        "sigma-2" => Some(JobFamily::Sigma(2)),
        "sigma-3" => Some(JobFamily::Sigma(3)),
        "sigma-5" => Some(JobFamily::Sigma(5)),
        "block-decomposition" => Some(JobFamily::BlockDecomposition),
        "parametric-dual:constant" => Some(JobFamily::ParametricDual(SeqSlot::Constant)),
        "parametric-dual:linear" => Some(JobFamily::ParametricDual(SeqSlot::Linear)),
        "parametric-dual:central-binomial" => {
            Some(JobFamily::ParametricDual(SeqSlot::CentralBinomial))
        }
        "identity-jk" => Some(JobFamily::Identity(IdentityFamily::Jk)),
        "identity-mk" => Some(JobFamily::Identity(IdentityFamily::Mk)),
        "identity-poly-y" => Some(JobFamily::Identity(IdentityFamily::PolyY)),
        "harmonic-binom-sum" => Some(JobFamily::Identity(IdentityFamily::HarmonicBinomSum)),
        "alt-binom-reciprocal" => Some(JobFamily::Identity(IdentityFamily::AltBinomReciprocal)),
        "chu-vandermonde" => Some(JobFamily::Identity(IdentityFamily::ChuVandermonde)),
        "binom-column-sum" => Some(JobFamily::Identity(IdentityFamily::BinomColumnSum)),
        _ => None,
    };
    if fixed.is_some() {
        return fixed;
    }
    let i = s.strip_prefix("parametric-dual:random")?;
    let i: u8 = i.parse().ok()?;
    (i < RANDOM_SEQUENCES).then_some(JobFamily::ParametricDual(SeqSlot::Random(i)))
}

/// One executable unit; exactly one report row.
#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub family: JobFamily,
    pub p: Option<u64>,
    pub x: Option<Rational>,
    pub seed: Option<u64>,
}

/// Expands the Cartesian product of applicable (check, p, x) combinations
/// in deterministic order: selector order, then primes, then points.
pub fn build_jobs(cfg: &SweepConfig, families: &[JobFamily]) -> Vec<Job> {
    let mut jobs = Vec::new();
    for &family in families {
        if !family.takes_p() {
            jobs.push(Job {
                family,
                p: None,
                x: None,
                seed: match family {
                    JobFamily::Identity(IdentityFamily::ChuVandermonde) => Some(cfg.seed),
                    _ => None,
                },
            });
            continue;
        }
        let seed = match family {
            JobFamily::ParametricDual(SeqSlot::Random(i)) => {
                Some(cfg.seed.wrapping_add(i as u64))
            }
            _ => None,
        };
        for &p in &cfg.primes {
            if family.takes_x() {
                for x in &cfg.points {
                    jobs.push(Job {
                        family,
                        p: Some(p),
                        x: Some(x.clone()),
                        seed,
                    });
                }
            } else {
                jobs.push(Job {
                    family,
                    p: Some(p),
                    x: None,
                    seed,
                });
            }
        }
    }
    jobs
}

/// One line of the report, in the emitted column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub check: String,
    pub p: Option<u64>,
    pub x: Option<String>,
    pub modulus: Option<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub pass: Option<bool>,
    pub status: String,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
}

impl ReportRow {
    fn for_job(job: &Job) -> ReportRow {
        ReportRow {
            check: job.family.id(),
            p: job.p,
            x: job.x.as_ref().map(format_rational),
            modulus: None,
            lhs: None,
            rhs: None,
            pass: None,
            status: String::new(),
            elapsed_ms: 0,
            seed: job.seed,
        }
    }

    fn skipped(mut self) -> ReportRow {
        self.status = "skipped".into();
        self
    }

    fn errored(mut self, e: impl std::fmt::Display) -> ReportRow {
        self.status = format!("error: {e}");
        self
    }

    /// Fills both sides from a single congruence report.
    fn single(mut self, report: &CheckReport) -> ReportRow {
        self.modulus = Some(report.modulus.to_string());
        self.lhs = Some(report.lhs.value().to_string());
        self.rhs = Some(report.rhs.value().to_string());
        self.pass = Some(report.pass);
        self.status = if !report.pass {
            match &report.detail {
                Some(d) => format!("fail: {d}"),
                None => "fail".into(),
            }
        } else if report.check.is_evidence() {
            "evidence".into()
        } else {
            "ok".into()
        };
        self
    }

    /// Aggregates an index sweep: sides are filled only from a failing
    /// index, named in `status`.
    fn swept(mut self, modulus: Modulus, failure: Option<(String, CheckReport)>) -> ReportRow {
        self.modulus = Some(modulus.to_string());
        match failure {
            None => {
                self.pass = Some(true);
                self.status = "ok".into();
            }
            Some((label, report)) => {
                self.lhs = Some(report.lhs.value().to_string());
                self.rhs = Some(report.rhs.value().to_string());
                self.pass = Some(false);
                self.status = format!("fail: {label}");
            }
        }
        self
    }

    fn identity(mut self, failure: Option<(String, IdentityOutcome)>) -> ReportRow {
        match failure {
            None => {
                self.pass = Some(true);
                self.status = "ok".into();
            }
            Some((label, outcome)) => {
                self.lhs = Some(format_rational(&outcome.lhs));
                self.rhs = Some(format_rational(&outcome.rhs));
                self.pass = Some(false);
                self.status = format!("fail: {label}");
            }
        }
        self
    }
}

fn is_p_integral(x: &Rational, p: u64) -> bool {
    p_adic_valuation(x, p).is_nonnegative()
}

fn sequence_for(slot: SeqSlot, seed: Option<u64>) -> SequenceSpec {
    match slot {
        SeqSlot::Constant => SequenceSpec::Constant(int(1)),
        SeqSlot::Linear => SequenceSpec::linear(),
        SeqSlot::CentralBinomial => SequenceSpec::CentralBinomial,
        SeqSlot::Random(_) => SequenceSpec::SeededRandom {
            seed: seed.expect("random slot carries a seed"),
        },
    }
}

/// Executes one job. Inapplicable combinations come back as `skipped`;
/// per-job errors are captured in the row, never aborting the sweep.
pub fn execute_job(job: &Job, cfg: &SweepConfig, cache: &SpecialCache) -> ReportRow {
    let started = Instant::now();
    let mut row = run_job(job, cfg, cache);
    row.elapsed_ms = started.elapsed().as_millis() as u64;
    row
}

fn run_job(job: &Job, cfg: &SweepConfig, cache: &SpecialCache) -> ReportRow {
    let row = ReportRow::for_job(job);
    if let JobFamily::Identity(family) = job.family {
        return run_identity(family, cfg, row);
    }
    let p = job.p.expect("congruence jobs carry a prime");

    // Applicability screens, in the same order a reader would check them.
    if p == 2 {
        return row.skipped();
    }
    if matches!(
        job.family,
        JobFamily::MainTheorem | JobFamily::ModP2 | JobFamily::RvRefinement | JobFamily::P4(_)
    ) && p == 3
    {
        return row.skipped();
    }
    if job.family.oracle_scale() && p > ORACLE_SCALE_LIMIT && !cfg.allow_slow {
        return row.skipped();
    }
    if let Some(x) = &job.x {
        if !is_p_integral(x, p) {
            return row.skipped();
        }
    }

    match job.family {
        JobFamily::MainTheorem => {
            let x = job.x.as_ref().unwrap();
            if *x == ratio(-1, 2) {
                return row.skipped();
            }
            match check_main_theorem(p, x, cfg.exponent.unwrap_or(3)) {
                Ok(report) => row.single(&report),
                Err(e) => row.errored(e),
            }
        }
        JobFamily::ModP2 => {
            let x = job.x.as_ref().unwrap();
            // 2x+1 is a p-unit iff m != (p-1)/2
            if decompose(x, p).expect("p-integral").m() == (p - 1) / 2 {
                return row.skipped();
            }
            match check_mod_p2(p, x) {
                Ok(report) => row.single(&report),
                Err(e) => row.errored(e),
            }
        }
        JobFamily::Kw => match check_kw(p, cfg.exponent.unwrap_or(3)) {
            Ok(report) => row.single(&report),
            Err(e) => row.errored(e),
        },
        JobFamily::RvRefinement => match check_rv_refinement(p, cache) {
            Ok(report) => row.single(&report),
            Err(e) => row.errored(e),
        },
        JobFamily::P4(target) => match check_p4_conjecture(target, p, cache) {
            Ok(report) => row.single(&report),
            Err(e) => row.errored(e),
        },
        JobFamily::ParametricDual(slot) => {
            let x = job.x.as_ref().unwrap();
            let seq = sequence_for(slot, job.seed);
            match check_parametric_dual(p, x, &seq, cfg.exponent.unwrap_or(2)) {
                Ok(report) => row.single(&report),
                Err(e) => row.errored(e),
            }
        }
        JobFamily::BinomP1 => {
            let e = cfg.exponent.unwrap_or(2);
            match Modulus::new(p, e) {
                Ok(modulus) => {
                    sweep_indices(row, modulus, 0..p, |n| check_binom_p1(p, n, e), |n| {
                        format!("n={n}")
                    })
                }
                Err(e) => row.errored(e),
            }
        }
        JobFamily::Coeff(case) => {
            let x = job.x.as_ref().unwrap();
            let m = decompose(x, p).expect("p-integral").m();
            if m > (p - 1) / 2 {
                return row.skipped();
            }
            let (e, range) = match case {
                CoeffCase::Low => (2, 0..m + 1),
                CoeffCase::Mid => (3, m + 1..p - m),
                CoeffCase::High => (3, p - m..p),
            };
            if range.is_empty() {
                return row.skipped();
            }
            match Modulus::new(p, e) {
                Ok(modulus) => sweep_indices(
                    row,
                    modulus,
                    range,
                    |k| check_coeff_expansion(p, x, k),
                    |k| format!("k={k}"),
                ),
                Err(err) => row.errored(err),
            }
        }
        JobFamily::Halfline => {
            let x = job.x.as_ref().unwrap();
            let m = decompose(x, p).expect("p-integral").m();
            if m != (p - 1) / 2 {
                return row.skipped();
            }
            match Modulus::new(p, 3) {
                Ok(modulus) => sweep_indices(
                    row,
                    modulus,
                    0..m + 1,
                    |k| check_halfline(p, x, k),
                    |k| format!("k={k}"),
                ),
                Err(err) => row.errored(err),
            }
        }
        JobFamily::Sigma(which) => {
            let x = job.x.as_ref().unwrap();
            let m = decompose(x, p).expect("p-integral").m();
            if m >= (p - 1) / 2 {
                return row.skipped();
            }
            match check_sigma_block(which, p, x) {
                Ok(report) => row.single(&report),
                Err(e) => row.errored(e),
            }
        }
        JobFamily::BlockDecomposition => {
            let x = job.x.as_ref().unwrap();
            let m = decompose(x, p).expect("p-integral").m();
            if m >= (p - 1) / 2 {
                return row.skipped();
            }
            match check_block_decomposition(p, x) {
                Ok(report) => row.single(&report),
                Err(e) => row.errored(e),
            }
        }
        JobFamily::Identity(_) => unreachable!("handled above"),
    }
}

fn sweep_indices(
    row: ReportRow,
    modulus: Modulus,
    range: std::ops::Range<u64>,
    mut check: impl FnMut(u64) -> Result<CheckReport, dualcheck_core::Error>,
    label: impl Fn(u64) -> String,
) -> ReportRow {
    for i in range {
        match check(i) {
            Ok(report) if report.pass => continue,
            Ok(report) => return row.swept(modulus, Some((label(i), report))),
            Err(e) => return row.errored(format!("{} at {}", e, label(i))),
        }
    }
    row.swept(modulus, None)
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn run_identity(family: IdentityFamily, cfg: &SweepConfig, row: ReportRow) -> ReportRow {
    let mut failure: Option<(String, IdentityOutcome)> = None;
    let mut observe = |label: String, outcome: IdentityOutcome| -> bool {
        if outcome.equal() {
            true
        } else {
            failure = Some((label, outcome));
            false
        }
    };
    match family {
        IdentityFamily::Jk => 'grid: {
            for j in 0..=25 {
                for k in 0..=25 {
                    if !observe(format!("j={j} k={k}"), identity_jk(j, k)) {
                        break 'grid;
                    }
                }
            }
        }
        IdentityFamily::Mk => 'grid: {
            for m in 0..=25 {
                for k in 0..=25 {
                    if !observe(format!("M={m} k={k}"), identity_mk(m, k)) {
                        break 'grid;
                    }
                }
            }
        }
        IdentityFamily::PolyY => 'grid: {
            for m in 0..=12 {
                for (i, o) in identity_poly_y(m).into_iter().enumerate() {
                    if !observe(format!("M={m} coeff=y^{i}"), o) {
                        break 'grid;
                    }
                }
            }
        }
        IdentityFamily::HarmonicBinomSum => 'grid: {
            for n in 2..=30 {
                for m in 1..n {
                    if !observe(format!("M={m} N={n}"), harmonic_binom_sum(m, n)) {
                        break 'grid;
                    }
                }
            }
        }
        IdentityFamily::AltBinomReciprocal => 'grid: {
            for n in 0..=20 {
                for b in 1..=20 {
                    for c in 1..=b {
                        let o = alternating_binom_reciprocal(n, b, c)
                            .expect("grid stays inside the domain");
                        if !observe(format!("N={n} b={b} c={c}"), o) {
                            break 'grid;
                        }
                    }
                }
            }
        }
        IdentityFamily::ChuVandermonde => 'grid: {
            let mut state = cfg.seed;
            for i in 0..200 {
                let a = ratio(
                    (splitmix64(&mut state) % 201) as i64 - 100,
                    (splitmix64(&mut state) % 59) as i64 + 1,
                );
                let b = ratio(
                    (splitmix64(&mut state) % 201) as i64 - 100,
                    (splitmix64(&mut state) % 59) as i64 + 1,
                );
                let n = splitmix64(&mut state) % 16;
                if !observe(format!("i={i} a={a} b={b} n={n}"), chu_vandermonde(&a, &b, n)) {
                    break 'grid;
                }
            }
        }
        IdentityFamily::BinomColumnSum => 'grid: {
            for n in 1..=25 {
                for j in 0..n {
                    for k in 0..n {
                        if !observe(format!("N={n} j={j} k={k}"), binom_column_sum(n, j, k)) {
                            break 'grid;
                        }
                    }
                }
            }
        }
    }
    row.identity(failure)
}

/// Summary counts over a finished sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl SweepSummary {
    /// 0 when every executed job passed; 1 when any job failed or errored.
    pub fn exit_code(&self) -> u8 {
        if self.failed == 0 && self.errors == 0 {
            0
        } else {
            1
        }
    }
}

pub fn summarize(rows: &[ReportRow]) -> SweepSummary {
    let mut s = SweepSummary {
        total: rows.len(),
        passed: 0,
        failed: 0,
        skipped: 0,
        errors: 0,
    };
    for row in rows {
        if row.status == "skipped" {
            s.skipped += 1;
        } else if row.status.starts_with("error") {
            s.errors += 1;
        } else if row.pass == Some(true) {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
    }
    s
}

/// Loads (or creates) the special-sequence cache, populates it for the
/// selected checks, runs all jobs on `cfg.jobs` workers, and returns rows
/// in deterministic job order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<ReportRow>, RunError> {
    let families = expand_checks(&cfg.checks)?;
    let jobs = build_jobs(cfg, &families);

    let mut cache = match &cfg.cache_path {
        Some(path) if path.exists() => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunError::Io(format!("reading cache {}: {e}", path.display())))?;
            SpecialCache::from_text(&text)
                .map_err(|e| RunError::Io(format!("cache {}: {e}", path.display())))?
        }
        _ => SpecialCache::new(),
    };
    if families.iter().any(|f| f.needs_cache()) {
        let max_p = cfg.primes.iter().copied().max().unwrap_or(0);
        let need = (max_p.saturating_sub(2)) as usize;
        cache.ensure(need, need);
    }
    // Single writer, before parallel dispatch; workers only read.
    if let Some(path) = &cfg.cache_path {
        std::fs::write(path, cache.to_text())
            .map_err(|e| RunError::Io(format!("writing cache {}: {e}", path.display())))?;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| RunError::Io(format!("building worker pool: {e}")))?;
    let rows = pool.install(|| {
        jobs.par_iter()
            .map(|job| execute_job(job, cfg, &cache))
            .collect()
    });
    Ok(rows)
}
