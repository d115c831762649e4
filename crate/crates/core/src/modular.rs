//! Prime-power residue rings `Z/p^e` on 64-bit values.
//!
//! Residues are kept in least-nonnegative form; any signed display belongs
//! to the reporting layer. Arithmetic is only defined between residues with
//! identical moduli and surfaces [`Error::ModulusMismatch`] otherwise, so a
//! mixed-modulus bug cannot pass silently.

use core::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::rational::{BigInt, Rational};

pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + (m - b) as u128) % m as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by extended gcd; `None` when gcd(a, m) != 1.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin, valid for the whole u64 range with the fixed
/// base set 2..37.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime-power modulus `p^e` with `p` prime and `e >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    e: u32,
    value: u64,
}

impl Modulus {
    pub fn new(p: u64, e: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::InvalidExponent(e));
        }
        let mut value = 1u64;
        for _ in 0..e {
            value = value.checked_mul(p).ok_or(Error::ModulusOverflow { p, e })?;
        }
        Ok(Modulus { p, e, value })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn exponent(self) -> u32 {
        self.e
    }

    /// The modulus itself, `p^e`.
    pub fn value(self) -> u64 {
        self.value
    }

    /// Reduces a `p`-integral rational into this ring: numerator times the
    /// inverse of the denominator, both mod `p^e`.
    pub fn reduce(self, q: &Rational) -> Result<Residue, Error> {
        let p = BigInt::from(self.p);
        if (q.denom() % &p).is_zero() {
            return Err(Error::NotPIntegral { p: self.p });
        }
        let num = self.reduce_int(q.numer());
        let den = self.reduce_int(q.denom());
        // gcd(den, p) = 1 in canonical form, so the inverse exists.
        let inv = inv_mod(den, self.value).expect("p-coprime denominator");
        Ok(Residue {
            value: mul_mod(num, inv, self.value),
            modulus: self,
        })
    }

    fn reduce_int(self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.value);
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        r.to_u64().expect("residue fits u64")
    }

    /// The residue of an integer in this ring.
    pub fn residue(self, n: i64) -> Residue {
        Residue {
            value: self.reduce_int(&BigInt::from(n)),
            modulus: self,
        }
    }

    /// The residue of a big integer in this ring.
    pub fn residue_bigint(self, n: &BigInt) -> Residue {
        Residue {
            value: self.reduce_int(n),
            modulus: self,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

/// Realizes every `... (mod p^e)` statement on p-integral rationals.
pub fn reduce_mod(q: &Rational, modulus: Modulus) -> Result<Residue, Error> {
    modulus.reduce(q)
}

/// An element of `Z/p^e` in least-nonnegative form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

// Arithmetic is checked (moduli must match), so these are fallible named
// methods rather than operator impls.
#[allow(clippy::should_implement_trait)]
impl Residue {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// The representative of smallest absolute value, for human-facing
    /// reports only.
    pub fn signed_value(self) -> i128 {
        let m = self.modulus.value() as i128;
        let v = self.value as i128;
        if 2 * v > m {
            v - m
        } else {
            v
        }
    }

    fn same_modulus(self, other: Residue) -> Result<u64, Error> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        Ok(self.modulus.value())
    }

    pub fn add(self, other: Residue) -> Result<Residue, Error> {
        let m = self.same_modulus(other)?;
        Ok(Residue {
            value: add_mod(self.value, other.value, m),
            modulus: self.modulus,
        })
    }

    pub fn sub(self, other: Residue) -> Result<Residue, Error> {
        let m = self.same_modulus(other)?;
        Ok(Residue {
            value: sub_mod(self.value, other.value, m),
            modulus: self.modulus,
        })
    }

    pub fn mul(self, other: Residue) -> Result<Residue, Error> {
        let m = self.same_modulus(other)?;
        Ok(Residue {
            value: mul_mod(self.value, other.value, m),
            modulus: self.modulus,
        })
    }

    pub fn neg(self) -> Residue {
        let m = self.modulus.value();
        Residue {
            value: if self.value == 0 { 0 } else { m - self.value },
            modulus: self.modulus,
        }
    }

    /// Callers invert explicitly (no division operator), so that a
    /// non-invertible value surfaces exactly where a congruence hypothesis
    /// such as "2x+1 is a p-unit" is actually used.
    pub fn inverse(self) -> Result<Residue, Error> {
        if self.value % self.modulus.p() == 0 {
            return Err(Error::NotInvertible {
                value: self.value,
                modulus: self.modulus.value(),
            });
        }
        let inv = inv_mod(self.value, self.modulus.value()).expect("p-unit");
        Ok(Residue {
            value: inv,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, exp: u64) -> Residue {
        Residue {
            value: pow_mod(self.value, exp, self.modulus.value()),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn primality_small_and_structured() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                79, 83, 89, 97
            ]
        );
        assert!(is_prime(4999));
        assert!(!is_prime(4999 * 4999));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn modulus_construction() {
        assert!(Modulus::new(9, 2).is_err());
        assert!(Modulus::new(5, 0).is_err());
        assert!(Modulus::new(4999, 20).is_err());
        assert_eq!(Modulus::new(5, 3).unwrap().value(), 125);
    }

    #[test]
    fn reduce_examples() {
        let m125 = Modulus::new(5, 3).unwrap();
        // Brute-force oracle for the inverse of 3 mod 125.
        let inv3 = (1..125).find(|k| (3 * k) % 125 == 1).unwrap();
        assert_eq!(inv3, 42);
        assert_eq!(reduce_mod(&ratio(-5, 3), m125).unwrap().value(), 40);
        let m49 = Modulus::new(7, 2).unwrap();
        assert_eq!(reduce_mod(&int(0), m49).unwrap().value(), 0);
        let m343 = Modulus::new(7, 3).unwrap();
        assert_eq!(
            reduce_mod(&ratio(1, 7), m343),
            Err(Error::NotPIntegral { p: 7 })
        );
    }

    #[test]
    fn residue_ops() {
        let m = Modulus::new(5, 3).unwrap();
        let three = m.residue(3);
        assert_eq!(three.inverse().unwrap().value(), 42);
        let forty = m.residue(40);
        assert_eq!(forty.mul(m.residue(0)).unwrap().value(), 0);
        assert_eq!(
            m.residue(5).inverse(),
            Err(Error::NotInvertible { value: 5, modulus: 125 })
        );
        let other = Modulus::new(7, 3).unwrap();
        assert_eq!(three.add(other.residue(1)), Err(Error::ModulusMismatch));
        assert_eq!(m.residue(-1).value(), 124);
        assert_eq!(m.residue(124).signed_value(), -1);
        assert_eq!(three.pow(3).value(), 27);
        assert_eq!(three.neg().value(), 122);
    }

    #[test]
    fn ring_homomorphism_spot() {
        let m = Modulus::new(7, 3).unwrap();
        let a = ratio(22, 5);
        let b = ratio(-3, 4);
        let ra = m.reduce(&a).unwrap();
        let rb = m.reduce(&b).unwrap();
        assert_eq!(m.reduce(&(&a + &b)).unwrap(), ra.add(rb).unwrap());
        assert_eq!(m.reduce(&(&a * &b)).unwrap(), ra.mul(rb).unwrap());
    }

    #[test]
    fn tower_compatibility_spot() {
        let q = ratio(-311, 6);
        for e in 2..=4u32 {
            let big = Modulus::new(5, e).unwrap();
            let small = Modulus::new(5, e - 1).unwrap();
            let r = big.reduce(&q).unwrap();
            assert_eq!(r.value() % small.value(), small.reduce(&q).unwrap().value());
        }
    }
}
