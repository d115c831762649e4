//! Exact rational arithmetic helpers: construction, parsing, generalized
//! binomial coefficients, and p-adic valuation.
//!
//! The rational type is `num_rational::BigRational`, which keeps every value
//! in canonical form (positive denominator, gcd(numerator, denominator) = 1)
//! after each operation.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub use num_bigint::BigInt;

/// Exact arbitrary-precision fraction; the universal oracle representation.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses an exact fraction string: `"3"`, `"-5/3"`, `"+2/4"` (canonicalized
/// to `1/2`). Decimal notation is rejected; it would smuggle in inexactness.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let trimmed = s.trim();
    let bad = || Error::ParseFraction(trimmed.to_string());
    if trimmed.is_empty() || trimmed.contains('.') {
        return Err(bad());
    }
    let (num_str, den_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num = BigInt::from_str(num_str).map_err(|_| bad())?;
    let den = BigInt::from_str(den_str).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders `q` as `"n"` for integers and `"n/d"` otherwise, independent of
/// the `Display` impl of the underlying crate.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let mut s = q.numer().to_string();
        s.push('/');
        s.push_str(&q.denom().to_string());
        s
    }
}

/// p-adic valuation of a rational: the exponent of `p` in its factorization,
/// with a sentinel for the zero rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    /// Valuation of 0, by convention larger than every finite valuation.
    Infinite,
}

impl Valuation {
    /// True iff the value is a p-adic integer (v ≥ 0 or zero).
    pub fn is_nonnegative(self) -> bool {
        match self {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// `v_p(q) = v_p(numerator) - v_p(denominator)`; [`Valuation::Infinite`] iff
/// `q = 0`. `p` must be prime.
pub fn p_adic_valuation(q: &Rational, p: u64) -> Valuation {
    debug_assert!(crate::modular::is_prime(p), "p_adic_valuation needs a prime");
    if q.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(int_valuation(q.numer(), p) - int_valuation(q.denom(), p))
}

/// Generalized binomial coefficient `C(x,k) = x(x-1)...(x-k+1)/k!`, with
/// `C(x,0) = 1`.
pub fn binom(x: &Rational, k: u64) -> Rational {
    let mut out = Rational::one();
    for i in 0..k {
        out *= (x - int(i as i64)) / int((i + 1) as i64);
    }
    out
}

/// Integer binomial coefficient `C(n,k)` as a [`BigInt`]; zero when `k > n`.
pub fn binom_uint(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent valuation oracle: strip factors of p by trial division on
    /// numerator and denominator separately.
    fn valuation_oracle(q: &Rational, p: u64) -> Valuation {
        if q.is_zero() {
            return Valuation::Infinite;
        }
        let strip = |n: &BigInt| {
            let mut v = 0i64;
            let mut m = n.abs();
            while (&m % BigInt::from(p)).is_zero() {
                m /= BigInt::from(p);
                v += 1;
            }
            v
        };
        Valuation::Finite(strip(q.numer()) - strip(q.denom()))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(p_adic_valuation(&ratio(49, 3), 7), Valuation::Finite(2));
        assert_eq!(p_adic_valuation(&int(0), 5), Valuation::Infinite);
        // Derived example, checked against the trial-division oracle.
        let q = ratio(-7, 3);
        assert_eq!(valuation_oracle(&q, 7), Valuation::Finite(1));
        assert_eq!(p_adic_valuation(&q, 7), Valuation::Finite(1));
    }

    #[test]
    fn valuation_is_additive() {
        let cases = [ratio(49, 3), ratio(-7, 5), ratio(3, 98), int(14), ratio(1, 7)];
        for a in &cases {
            for b in &cases {
                let va = p_adic_valuation(a, 7).finite().unwrap();
                let vb = p_adic_valuation(b, 7).finite().unwrap();
                assert_eq!(p_adic_valuation(&(a * b), 7), Valuation::Finite(va + vb));
            }
        }
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(&ratio(-1, 2), 2), ratio(3, 8));
        assert_eq!(binom(&ratio(17, 5), 0), int(1));
        assert_eq!(binom(&int(3), 5), int(0));
    }

    #[test]
    fn binom_pascal_rule() {
        // C(x,k) = C(x-1,k-1) + C(x-1,k) for a spread of rational x.
        for (n, d) in [(1i64, 2i64), (-7, 3), (22, 7), (0, 1), (-1, 6)] {
            let x = ratio(n, d);
            let xm = &x - int(1);
            for k in 1..=20 {
                assert_eq!(binom(&x, k), binom(&xm, k - 1) + binom(&xm, k));
            }
        }
    }

    #[test]
    fn binom_uint_edges() {
        assert_eq!(binom_uint(4, 2), BigInt::from(6));
        assert_eq!(binom_uint(3, 5), BigInt::zero());
        assert_eq!(binom_uint(0, 0), BigInt::from(1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-5/3").unwrap(), ratio(-5, 3));
        assert_eq!(parse_rational("+2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 7/-2 ").unwrap(), ratio(-7, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&ratio(-5, 3)), "-5/3");
        assert_eq!(format_rational(&ratio(4, 2)), "2");
    }
}
