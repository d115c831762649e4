//! Exact combinatorial identities, each evaluated on both sides so a failure
//! is diagnosable rather than a bare boolean.
//!
//! These are the non-congruence ingredients of the supercongruence proofs:
//! alternating reciprocal-binomial sums, a binomial/harmonic sum, the
//! Chu-Vandermonde convolution, and the column-product sum that converts
//! `sum_{n<N} C(n,j)C(n,k)` into a short weighted sum.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{binom, binom_uint, int, BigInt, Rational};
use crate::sequences::harmonic;

/// Both sides of one identity instance; they must be equal exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityOutcome {
    fn new(lhs: Rational, rhs: Rational) -> Self {
        IdentityOutcome { lhs, rhs }
    }

    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn sign(n: u64) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `sum_{n=0..j+k} (-1)^n/(n+1) C(n,j) C(j,n-k) = (-1)^{j+k} / ((j+k+1) C(j+k,j))`.
pub fn identity_jk(j: u64, k: u64) -> IdentityOutcome {
    let mut lhs = Rational::zero();
    for n in 0..=(j + k) {
        if n < k || n > j + k {
            continue;
        }
        let prod = binom_uint(n, j) * binom_uint(j, n - k);
        if prod.is_zero() {
            continue;
        }
        lhs += sign(n) * Rational::new(prod, BigInt::from(n + 1));
    }
    let rhs = sign(j + k) / (int((j + k + 1) as i64) * Rational::from_integer(binom_uint(j + k, j)));
    IdentityOutcome::new(lhs, rhs)
}

/// `sum_{j=0..M} (-1)^j C(M,j) C(M+j,j) / ((j+k+1) C(j+k,j))
///  = C(k,M) / ((k+1) C(M+k+1,M))`.
pub fn identity_mk(m: u64, k: u64) -> IdentityOutcome {
    let mut lhs = Rational::zero();
    for j in 0..=m {
        let num = binom_uint(m, j) * binom_uint(m + j, j);
        let den = BigInt::from(j + k + 1) * binom_uint(j + k, j);
        lhs += sign(j) * Rational::new(num, den);
    }
    let rhs = Rational::new(
        binom_uint(k, m),
        BigInt::from(k + 1) * binom_uint(m + k + 1, m),
    );
    IdentityOutcome::new(lhs, rhs)
}

/// Dense polynomial in one variable with exact coefficients, ascending by
/// degree. Just enough machinery for the cubic-coefficient comparison.
fn poly_mul_linear(poly: &mut Vec<Rational>, root: i64) {
    // poly *= (y - root)
    let r = int(-root);
    poly.push(Rational::zero());
    for i in (1..poly.len()).rev() {
        let v = &poly[i] * &r + &poly[i - 1];
        poly[i] = v;
    }
    poly[0] *= &r;
}

/// Coefficients of `C(y-1, n)` as a polynomial in `y`.
fn binom_y_minus_1(n: u64) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    let mut factorial = BigInt::one();
    for i in 1..=n {
        poly_mul_linear(&mut poly, i as i64);
        factorial *= BigInt::from(i);
    }
    let inv = Rational::new(BigInt::one(), factorial);
    for c in &mut poly {
        *c *= &inv;
    }
    poly
}

/// Expands the triple sum
///
/// ```text
/// sum_{j,k<=M} sum_{n<=j+k} C(M,j)C(M+j,j)C(M,k)C(M+k,k)C(n,j)C(j,n-k)C(y-1,n)/(n+1)
/// ```
///
/// as an exact polynomial in `y` and compares its coefficients of
/// `y^0..y^3` with `[(-1)^M/(2M+1), 0, -4(-1)^M H_M^(2)/(2M+1), 0]`.
pub fn identity_poly_y(m: u64) -> [IdentityOutcome; 4] {
    let mut acc = vec![Rational::zero(); (2 * m + 4) as usize];
    // C(y-1,n) expansions are shared across the (j,k) grid.
    let expansions: Vec<Vec<Rational>> = (0..=2 * m).map(binom_y_minus_1).collect();
    for j in 0..=m {
        let wj = binom_uint(m, j) * binom_uint(m + j, j);
        for k in 0..=m {
            let w = &wj * binom_uint(m, k) * binom_uint(m + k, k);
            for n in j.max(k)..=(j + k) {
                let c = binom_uint(n, j) * binom_uint(j, n - k);
                if c.is_zero() {
                    continue;
                }
                let coeff = Rational::new(&w * c, BigInt::from(n + 1));
                for (i, b) in expansions[n as usize].iter().enumerate() {
                    if !b.is_zero() {
                        acc[i] += &coeff * b;
                    }
                }
            }
        }
    }
    let denom = int((2 * m + 1) as i64);
    let target = [
        sign(m) / &denom,
        Rational::zero(),
        int(-4) * sign(m) * harmonic(m, 2) / &denom,
        Rational::zero(),
    ];
    let mut out: Vec<IdentityOutcome> = Vec::with_capacity(4);
    for (i, t) in target.into_iter().enumerate() {
        out.push(IdentityOutcome::new(acc[i].clone(), t));
    }
    out.try_into().unwrap()
}

/// `sum_{k=M..N-1} C(k-1,M-1)/(N-k) = C(N-1,M-1) (H_{N-1} - H_{M-1})`
/// for `0 < M < N`.
pub fn harmonic_binom_sum(m: u64, n: u64) -> IdentityOutcome {
    assert!(0 < m && m < n, "requires 0 < M < N");
    let mut lhs = Rational::zero();
    for k in m..n {
        lhs += Rational::new(binom_uint(k - 1, m - 1), BigInt::from(n - k));
    }
    let rhs = Rational::from_integer(binom_uint(n - 1, m - 1)) * (harmonic(n - 1, 1) - harmonic(m - 1, 1));
    IdentityOutcome::new(lhs, rhs)
}

/// `sum_{k=0..N} (-1)^k C(N,k) / C(b+k,c) = c / ((N+c) C(N+b, b-c))`
/// for `b >= c > 0`.
pub fn alternating_binom_reciprocal(n: u64, b: u64, c: u64) -> Result<IdentityOutcome, Error> {
    if c == 0 || b < c {
        return Err(Error::DomainViolation(alloc::format!(
            "requires b >= c > 0, got b={b} c={c}"
        )));
    }
    let mut lhs = Rational::zero();
    for k in 0..=n {
        lhs += sign(k) * Rational::new(binom_uint(n, k), binom_uint(b + k, c));
    }
    let rhs = Rational::new(
        BigInt::from(c),
        BigInt::from(n + c) * binom_uint(n + b, b - c),
    );
    Ok(IdentityOutcome::new(lhs, rhs))
}

/// Chu-Vandermonde convolution `sum_j C(a,j) C(b,n-j) = C(a+b,n)` for
/// arbitrary rational `a`, `b`; a polynomial identity.
pub fn chu_vandermonde(a: &Rational, b: &Rational, n: u64) -> IdentityOutcome {
    let mut lhs = Rational::zero();
    for j in 0..=n {
        lhs += binom(a, j) * binom(b, n - j);
    }
    IdentityOutcome::new(lhs, binom(&(a + b), n))
}

/// `sum_{i=0..N-1} C(i,j) C(i,k) = N sum_{n=0..j+k} C(n,j) C(j,n-k) C(N-1,n)/(n+1)`
/// for `0 <= j,k < N`. Exact for every positive `N`, prime or not.
pub fn binom_column_sum(n: u64, j: u64, k: u64) -> IdentityOutcome {
    assert!(n > 0 && j < n && k < n, "requires 0 <= j,k < N");
    let mut lhs = Rational::zero();
    for i in 0..n {
        lhs += Rational::from_integer(binom_uint(i, j) * binom_uint(i, k));
    }
    let mut rhs = Rational::zero();
    for i in j.max(k)..=(j + k) {
        let prod = binom_uint(i, j) * binom_uint(j, i - k) * binom_uint(n - 1, i);
        if !prod.is_zero() {
            rhs += Rational::new(prod, BigInt::from(i + 1));
        }
    }
    rhs *= int(n as i64);
    IdentityOutcome::new(lhs, rhs)
}
