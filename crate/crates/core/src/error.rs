//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The base of a modulus failed the primality check.
    NotPrime(u64),
    /// A modulus exponent outside the supported range.
    InvalidExponent(u32),
    /// `p^e` does not fit in the 64-bit residue representation.
    ModulusOverflow { p: u64, e: u32 },
    /// A rational with negative p-adic valuation where a p-adic integer is
    /// required.
    NotPIntegral { p: u64 },
    /// Arithmetic between residues with different moduli.
    ModulusMismatch,
    /// Inversion of a residue divisible by the prime.
    NotInvertible { value: u64, modulus: u64 },
    /// The two closed forms of `s_n(x)` disagreed; indicates an arithmetic
    /// bug, never a property of the inputs.
    InternalFormMismatch { n: u64 },
    /// A congruence check invoked outside the case split it covers.
    CaseOutOfRange(String),
    /// The point the congruence explicitly excludes (`x = -1/2`, or
    /// `2x+1 ≡ 0 (mod p)` for the mod-p² statement).
    ExcludedPoint,
    /// The congruence requires a larger prime.
    InvalidPrime(u64),
    /// Parameters outside an identity's hypotheses.
    DomainViolation(String),
    /// A string that does not parse as an exact fraction.
    ParseFraction(String),
    /// A special-sequence cache file that fails validation.
    BadCache(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::InvalidExponent(e) => write!(f, "invalid modulus exponent {e}"),
            Error::ModulusOverflow { p, e } => write!(f, "{p}^{e} overflows u64"),
            Error::NotPIntegral { p } => write!(f, "not a {p}-adic integer"),
            Error::ModulusMismatch => write!(f, "residues have different moduli"),
            Error::NotInvertible { value, modulus } => {
                write!(f, "{value} is not invertible modulo {modulus}")
            }
            Error::InternalFormMismatch { n } => {
                write!(f, "the two closed forms of s_{n}(x) disagree")
            }
            Error::CaseOutOfRange(msg) => write!(f, "case out of range: {msg}"),
            Error::ExcludedPoint => write!(f, "x lies on the excluded point of the congruence"),
            Error::InvalidPrime(p) => write!(f, "prime {p} is too small for this check"),
            Error::DomainViolation(msg) => write!(f, "domain violation: {msg}"),
            Error::ParseFraction(s) => write!(f, "cannot parse {s:?} as an exact fraction"),
            Error::BadCache(msg) => write!(f, "invalid cache: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
