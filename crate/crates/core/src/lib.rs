//! Exact verification kernel for supercongruences of the dual polynomial
//! sequence
//!
//! ```text
//! s_n(x) = sum_{k=0..n} C(n,k) C(x,k) C(x+k,k)
//!        = sum_{k=0..n} C(n,k) (-1)^k C(x,k) C(-1-x,k),
//! ```
//!
//! where `C(x,k)` is the generalized binomial coefficient and `x` is a
//! p-adic integer, represented throughout by a rational with denominator
//! coprime to `p`.
//!
//! The crate provides:
//!
//! - exact arbitrary-precision rationals, p-adic valuation, and reduction
//!   of p-integral rationals into `Z/p^e` ([`rational`], [`modular`]);
//! - harmonic, Bernoulli, and Euler numbers, Bernoulli polynomials, and
//!   Legendre symbols ([`sequences`]);
//! - the dual transform, `s_n(x)`, and both an exact-rational oracle and an
//!   `O(p^2)` modular fast path for `sum_{n<p} s_n(x)^2` ([`dual`]);
//! - the exact combinatorial identities behind the congruence proofs
//!   ([`identities`]);
//! - every displayed congruence as a checkable operation returning both
//!   sides as residues ([`congruences`]).
//!
//! Everything here is pure computation over immutable values; IO, timing,
//! and batch sweeps live in the companion CLI crate. The library is
//! `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod congruences;
pub mod dual;
pub mod error;
pub mod identities;
pub mod modular;
pub mod rational;
pub mod sequences;

pub use congruences::{
    check_binom_p1, check_block_decomposition, check_coeff_expansion, check_halfline,
    check_kw, check_main_theorem, check_mod_p2, check_p4_conjecture, check_parametric_dual,
    check_rv_refinement, check_sigma_block, CheckId, CheckReport, P4Target, SequenceSpec,
};
pub use dual::{
    coefficient_table, decompose, dual_transform, s_exact, sum_squares_exact, sum_squares_mod,
    CoefficientTable, PadicPoint,
};
pub use error::Error;
pub use identities::{
    alternating_binom_reciprocal, binom_column_sum, chu_vandermonde, harmonic_binom_sum,
    identity_jk, identity_mk, identity_poly_y, IdentityOutcome,
};
pub use modular::{is_prime, reduce_mod, Modulus, Residue};
pub use rational::{
    binom, binom_uint, format_rational, int, p_adic_valuation, parse_rational, ratio, BigInt,
    Rational, Valuation,
};
pub use sequences::{
    bernoulli, bernoulli_poly, euler_number, harmonic, legendre, SpecialCache,
};
