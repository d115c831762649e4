//! Auxiliary number sequences: harmonic numbers of all orders, Bernoulli
//! numbers and polynomials, Euler (secant) numbers, and Legendre symbols.
//!
//! Conventions are pinned by the congruences that consume them: `B_1 = -1/2`
//! (forced by the Bernoulli-polynomial definition), and Euler numbers in the
//! secant convention `E_0 = 1, E_2 = -1, E_4 = 5, E_6 = -61`, odd indices
//! zero.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::modular::{is_prime, pow_mod};
use crate::rational::{binom_uint, int, BigInt, Rational};

/// Harmonic number of order `r`: `H_n^(r) = sum_{k=1..n} 1/k^r`; 0 for n = 0.
pub fn harmonic(n: u64, r: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += Rational::new(BigInt::one(), BigInt::from(k).pow(r));
    }
    acc
}

fn bernoulli_extend(table: &mut Vec<Rational>, n_max: usize) {
    if table.is_empty() {
        table.push(Rational::one());
    }
    for n in table.len()..=n_max {
        // sum_{k=0}^{n} C(n+1,k) B_k = 0
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Rational::from_integer(binom_uint((n + 1) as u64, k as u64)) * b;
            }
        }
        table.push(-acc / int((n + 1) as i64));
    }
}

fn euler_extend(table: &mut Vec<BigInt>, n_max: usize) {
    if table.is_empty() {
        table.push(BigInt::one());
    }
    for n in table.len()..=n_max {
        if n % 2 == 1 {
            table.push(BigInt::zero());
            continue;
        }
        // sum_{k=0}^{m} C(2m,2k) E_{2k} = 0 for m >= 1
        let mut acc = BigInt::zero();
        for k in (0..n).step_by(2) {
            acc += binom_uint(n as u64, k as u64) * &table[k];
        }
        table.push(-acc);
    }
}

/// `B_n` with the convention `B_1 = -1/2`, via the defining recurrence.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = Vec::new();
    bernoulli_extend(&mut table, n);
    table.pop().unwrap()
}

/// Bernoulli polynomial `B_n(y) = sum_{k=0..n} C(n,k) B_k y^{n-k}`.
pub fn bernoulli_poly(n: usize, y: &Rational) -> Rational {
    let mut table = Vec::new();
    bernoulli_extend(&mut table, n);
    bernoulli_poly_from(&table, n, y)
}

fn bernoulli_poly_from(table: &[Rational], n: usize, y: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut power = Rational::one(); // y^{n-k} built from k = n downwards
    for k in (0..=n).rev() {
        if !table[k].is_zero() {
            acc += Rational::from_integer(binom_uint(n as u64, k as u64)) * &table[k] * &power;
        }
        power *= y;
    }
    acc
}

/// Euler number `E_n` in the secant convention.
pub fn euler_number(n: usize) -> BigInt {
    let mut table = Vec::new();
    euler_extend(&mut table, n);
    table.pop().unwrap()
}

/// Legendre symbol `(a|q)` by Euler's criterion; `q` must be an odd prime.
pub fn legendre(a: i64, q: u64) -> i32 {
    assert!(q > 2 && is_prime(q), "legendre needs an odd prime, got {q}");
    let a = (a.rem_euclid(q as i64)) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (q - 1) / 2, q) == 1 {
        1
    } else {
        -1
    }
}

/// Cached Bernoulli and Euler tables, dense from index 0, with a versioned
/// line-oriented text form for persistence.
///
/// Reads are lock-free on a shared reference; the harness populates the
/// tables before going parallel and owns any write-back.
#[derive(Debug, Clone, Default)]
pub struct SpecialCache {
    bernoulli: Vec<Rational>,
    euler: Vec<BigInt>,
}

const CACHE_HEADER: &str = "dualcheck-cache 1";

impl SpecialCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Extends the tables so that `bernoulli(n)` / `euler(n)` are cached up
    /// to the given indices.
    pub fn ensure(&mut self, bernoulli_max: usize, euler_max: usize) {
        bernoulli_extend(&mut self.bernoulli, bernoulli_max);
        euler_extend(&mut self.euler, euler_max);
    }

    pub fn bernoulli_len(&self) -> usize {
        self.bernoulli.len()
    }

    pub fn euler_len(&self) -> usize {
        self.euler.len()
    }

    /// `B_n`, from the table when cached, recomputed otherwise.
    pub fn bernoulli(&self, n: usize) -> Rational {
        match self.bernoulli.get(n) {
            Some(b) => b.clone(),
            None => bernoulli(n),
        }
    }

    /// `E_n`, from the table when cached, recomputed otherwise.
    pub fn euler(&self, n: usize) -> BigInt {
        match self.euler.get(n) {
            Some(e) => e.clone(),
            None => euler_number(n),
        }
    }

    /// `B_n(y)` using the cached table when it is long enough.
    pub fn bernoulli_poly(&self, n: usize, y: &Rational) -> Rational {
        if n < self.bernoulli.len() {
            bernoulli_poly_from(&self.bernoulli, n, y)
        } else {
            bernoulli_poly(n, y)
        }
    }

    /// Serializes as `B <n> <num>/<den>` and `E <n> <int>` lines under a
    /// version header.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(CACHE_HEADER);
        out.push('\n');
        for (n, b) in self.bernoulli.iter().enumerate() {
            let _ = writeln!(out, "B {n} {}/{}", b.numer(), b.denom());
        }
        for (n, e) in self.euler.iter().enumerate() {
            let _ = writeln!(out, "E {n} {e}");
        }
        out
    }

    /// Parses and validates the text form. Entries must be dense from index
    /// zero; loaded tables are spot-checked against the defining recurrences
    /// so a corrupted cache cannot poison a run.
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        match lines.next() {
            Some(header) if header.trim() == CACHE_HEADER => {}
            other => {
                return Err(Error::BadCache(match other {
                    Some(h) => alloc::format!("unknown header {h:?}"),
                    None => "empty file".to_string(),
                }))
            }
        }
        let mut cache = SpecialCache::new();
        for (lineno, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let bad = |msg: &str| Error::BadCache(alloc::format!("line {}: {msg}", lineno + 2));
            let kind = parts.next().ok_or_else(|| bad("missing kind"))?;
            let n: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("missing index"))?;
            let value = parts.next().ok_or_else(|| bad("missing value"))?;
            if parts.next().is_some() {
                return Err(bad("trailing fields"));
            }
            match kind {
                "B" => {
                    if n != cache.bernoulli.len() {
                        return Err(bad("bernoulli entries must be dense from 0"));
                    }
                    let (num, den) = value
                        .split_once('/')
                        .ok_or_else(|| bad("bernoulli value must be num/den"))?;
                    let num = BigInt::from_str(num).map_err(|_| bad("bad numerator"))?;
                    let den = BigInt::from_str(den).map_err(|_| bad("bad denominator"))?;
                    if !den.is_positive() {
                        return Err(bad("denominator must be positive"));
                    }
                    cache.bernoulli.push(Rational::new(num, den));
                }
                "E" => {
                    if n != cache.euler.len() {
                        return Err(bad("euler entries must be dense from 0"));
                    }
                    cache
                        .euler
                        .push(BigInt::from_str(value).map_err(|_| bad("bad integer"))?);
                }
                _ => return Err(bad("unknown kind")),
            }
        }
        cache.spot_check()?;
        Ok(cache)
    }

    fn spot_check(&self) -> Result<(), Error> {
        let fail = |what: &str, n: usize| {
            Err(Error::BadCache(alloc::format!(
                "{what} table fails recomputation check at index {n}"
            )))
        };
        if !self.bernoulli.is_empty() && !self.bernoulli[0].is_one() {
            return fail("bernoulli", 0);
        }
        // Recompute from the earlier cached entries at the top index and a
        // middle index: sum_{k=0}^{n} C(n+1,k) B_k = 0.
        let check_b = |n: usize| -> bool {
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += Rational::from_integer(binom_uint((n + 1) as u64, k as u64))
                    * &self.bernoulli[k];
            }
            acc.is_zero()
        };
        for n in [self.bernoulli.len().saturating_sub(1), self.bernoulli.len() / 2] {
            if n >= 1 && !check_b(n) {
                return fail("bernoulli", n);
            }
        }
        if !self.euler.is_empty() && !self.euler[0].is_one() {
            return fail("euler", 0);
        }
        for (n, e) in self.euler.iter().enumerate() {
            if n % 2 == 1 && !e.is_zero() {
                return fail("euler", n);
            }
        }
        let check_e = |n: usize| -> bool {
            let mut acc = BigInt::zero();
            for k in (0..=n).step_by(2) {
                acc += binom_uint(n as u64, k as u64) * &self.euler[k];
            }
            acc.is_zero()
        };
        for n in [
            self.euler.len().saturating_sub(1),
            self.euler.len().saturating_sub(2),
        ] {
            if n >= 2 && n % 2 == 0 && !check_e(n) {
                return fail("euler", n);
            }
        }
        Ok(())
    }
}
