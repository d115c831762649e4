//! The dual transform, the polynomial sequence `s_n(x)`, p-adic point
//! decomposition `x = m + p*t`, and the two evaluation routes for
//! `sum_{n<p} s_n(x)^2`: an exact rational oracle and an `O(p^2)` loop in
//! `Z/p^e`.
//!
//! The fast path never leaves `Z/p^e`: every binomial `C(n,k)` with
//! `n, k < p` and every factorial below `p` is a p-unit, so no valuation
//! bookkeeping is needed.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::modular::{add_mod, inv_mod, mul_mod, sub_mod, Modulus, Residue};
use crate::rational::{int, p_adic_valuation, BigInt, Rational};

/// A prime `p` together with a p-integral rational `x` and its decomposition
/// `x = m + p*t` with `m` the least nonnegative residue of `x` mod `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicPoint {
    p: u64,
    x: Rational,
    m: u64,
    t: Rational,
}

impl PadicPoint {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    /// The least nonnegative residue of `x` modulo `p`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The p-integral tail `t = (x - m)/p`.
    pub fn t(&self) -> &Rational {
        &self.t
    }
}

/// Splits a p-integral rational as `x = m + p*t`.
pub fn decompose(x: &Rational, p: u64) -> Result<PadicPoint, Error> {
    let mp = Modulus::new(p, 1)?;
    let m = mp.reduce(x)?.value();
    let t = (x - int(m as i64)) / int(p as i64);
    debug_assert!(p_adic_valuation(&t, p).is_nonnegative());
    debug_assert_eq!(&int(m as i64) + int(p as i64) * &t, *x);
    Ok(PadicPoint {
        p,
        x: x.clone(),
        m,
        t,
    })
}

/// The dual sequence: `out[n] = sum_{k=0..n} C(n,k) (-1)^k a[k]`. An
/// involution by binomial inversion.
pub fn dual_transform(a: &[Rational]) -> Vec<Rational> {
    let mut row: Vec<BigInt> = Vec::with_capacity(a.len());
    let mut out = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        // extend Pascal's row in place: row becomes C(n, 0..=n)
        row.push(BigInt::one());
        for k in (1..n).rev() {
            let prev = row[k - 1].clone();
            row[k] += prev;
        }
        let mut acc = Rational::zero();
        for (k, coeff) in row.iter().enumerate() {
            let term = Rational::from_integer(coeff.clone()) * &a[k];
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        out.push(acc);
    }
    out
}

/// `s_n(x)`, evaluated through both closed forms
///
/// ```text
/// sum_k C(n,k) C(x,k) C(x+k,k)   and   sum_k C(n,k) (-1)^k C(x,k) C(-1-x,k),
/// ```
///
/// which must agree; a mismatch means an arithmetic bug and is reported as
/// an error rather than silently returning either value. The cross-check
/// always runs; this function is the oracle-scale path.
pub fn s_exact(n: u64, x: &Rational) -> Result<Rational, Error> {
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    let mut cxk = Rational::one(); // C(x,k)
    let mut cxkk = Rational::one(); // C(x+k,k)
    let mut cneg = Rational::one(); // C(-1-x,k)
    let minus_one_minus_x = -int(1) - x;
    let mut pascal = Rational::one(); // C(n,k)
    for k in 0..=n {
        if k > 0 {
            let kk = int(k as i64);
            cxk *= (x - int(k as i64 - 1)) / &kk;
            cxkk *= (x + &kk) / &kk;
            cneg *= (&minus_one_minus_x - int(k as i64 - 1)) / &kk;
            // C(n,k) = C(n,k-1) * (n-k+1)/k
            pascal *= int((n - k + 1) as i64) / kk;
        }
        first += &pascal * &cxk * &cxkk;
        let term = &pascal * &cxk * &cneg;
        if k % 2 == 0 {
            second += term;
        } else {
            second -= term;
        }
    }
    if first != second {
        return Err(Error::InternalFormMismatch { n });
    }
    Ok(first)
}

/// The summand table of `s_n(x)` in `Z/p^e`: entry `k` is
/// `C(x,k) C(x+k,k) mod p^e`, built by the ratio recurrence
/// `c[k] = c[k-1] * (x-k+1)(x+k) / k^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    modulus: Modulus,
    entries: Vec<u64>,
}

impl CoefficientTable {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Entries `c[0..p]` as raw least-nonnegative values.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> Residue {
        self.modulus.residue_bigint(&BigInt::from(self.entries[k]))
    }
}

/// Builds the length-`p` coefficient table for `x` modulo `p^e`.
pub fn coefficient_table(pt: &PadicPoint, e: u32) -> Result<CoefficientTable, Error> {
    let p = pt.p();
    let modulus = Modulus::new(p, e)?;
    let pe = modulus.value();
    let x = modulus.reduce(pt.x())?.value();
    let mut entries = vec![0u64; p as usize];
    entries[0] = 1;
    for k in 1..p {
        let inv_k = inv_mod(k % pe, pe).expect("k < p is a p-unit");
        let a = sub_mod(add_mod(x, 1, pe), k % pe, pe); // x - (k-1)
        let b = add_mod(x, k % pe, pe); // x + k
        let step = mul_mod(mul_mod(a, b, pe), mul_mod(inv_k, inv_k, pe), pe);
        entries[k as usize] = mul_mod(entries[(k - 1) as usize], step, pe);
    }
    Ok(CoefficientTable { modulus, entries })
}

/// `sum_{n=0..p-1} s_n(x)^2 mod p^e`, computed entirely in `Z/p^e` from the
/// coefficient table with an `O(p^2)` loop; `C(n,k)` rows advance by
/// Pascal additions, so the inner loop is division-free.
pub fn sum_squares_mod(pt: &PadicPoint, e: u32) -> Result<Residue, Error> {
    assert!((1..=4).contains(&e), "supported exponents are 1..=4");
    let table = coefficient_table(pt, e)?;
    let pe = table.modulus().value();
    let c = table.entries();
    let p = pt.p() as usize;
    let mut row = vec![0u64; p]; // C(n, 0..=n)
    row[0] = 1;
    let mut acc = 0u64;
    for n in 0..p {
        for k in (1..=n).rev() {
            row[k] = add_mod(row[k], row[k - 1], pe);
        }
        let mut s = 0u64;
        for k in 0..=n {
            if row[k] != 0 && c[k] != 0 {
                s = add_mod(s, mul_mod(row[k], c[k], pe), pe);
            }
        }
        acc = add_mod(acc, mul_mod(s, s, pe), pe);
    }
    Ok(table.modulus().residue_bigint(&BigInt::from(acc)))
}

/// The exact rational `sum_{n=0..p-1} s_n(x)^2`; the oracle for
/// [`sum_squares_mod`], restricted to oracle-scale primes by cost.
pub fn sum_squares_exact(p: u64, x: &Rational) -> Result<Rational, Error> {
    debug_assert!(crate::modular::is_prime(p));
    let mut acc = Rational::zero();
    for n in 0..p {
        let s = s_exact(n, x)?;
        acc += &s * &s;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::reduce_mod;
    use crate::rational::{binom, ratio};

    #[test]
    fn decompose_examples() {
        let pt = decompose(&ratio(-1, 3), 7).unwrap();
        assert_eq!(pt.m(), 2);
        assert_eq!(pt.t(), &ratio(-1, 3));
        let pt = decompose(&int(0), 11).unwrap();
        assert_eq!((pt.m(), pt.t().clone()), (0, int(0)));
        let pt = decompose(&int(6), 5).unwrap();
        assert_eq!((pt.m(), pt.t().clone()), (1, int(1)));
        assert!(decompose(&ratio(1, 5), 5).is_err());
    }

    #[test]
    fn dual_examples() {
        let ones = vec![int(1), int(1), int(1), int(1)];
        assert_eq!(dual_transform(&ones), vec![int(1), int(0), int(0), int(0)]);
        assert_eq!(dual_transform(&[]), Vec::<Rational>::new());
        let j2 = vec![int(1), ratio(3, 4), ratio(41, 64)];
        assert_eq!(
            dual_transform(&j2),
            vec![int(1), ratio(1, 4), ratio(9, 64)]
        );
    }

    #[test]
    fn dual_is_involution() {
        let a: Vec<Rational> = (0..15).map(|i| ratio(3 * i - 7, i + 2)).collect();
        assert_eq!(dual_transform(&dual_transform(&a)), a);
    }

    #[test]
    fn s_exact_examples() {
        for n in 0..10 {
            assert_eq!(s_exact(n, &int(0)).unwrap(), int(1));
        }
        assert_eq!(s_exact(1, &ratio(-1, 2)).unwrap(), ratio(3, 4));
        assert_eq!(s_exact(3, &int(1)).unwrap(), int(7));
        // s_n(1) = 2n+1 and s_n(2) = 3n^2+3n+1 by direct summation
        for n in 0..8i64 {
            assert_eq!(s_exact(n as u64, &int(1)).unwrap(), int(2 * n + 1));
            assert_eq!(s_exact(n as u64, &int(2)).unwrap(), int(3 * n * n + 3 * n + 1));
        }
    }

    #[test]
    fn s_exact_reflection() {
        for (n, d) in [(1i64, 2i64), (-2, 3), (5, 7), (4, 1)] {
            let x = ratio(n, d);
            let reflected = -int(1) - &x;
            for k in 0..=12 {
                assert_eq!(s_exact(k, &x).unwrap(), s_exact(k, &reflected).unwrap());
            }
        }
    }

    #[test]
    fn specialization_to_apery_like_dual() {
        // s_n(-1/2) is the dual transform of C(-1/2,k)^2.
        let squares: Vec<Rational> = (0..=12)
            .map(|k| {
                let b = binom(&ratio(-1, 2), k);
                &b * &b
            })
            .collect();
        let dual = dual_transform(&squares);
        for n in 0..=12u64 {
            assert_eq!(s_exact(n, &ratio(-1, 2)).unwrap(), dual[n as usize]);
        }
    }

    #[test]
    fn coefficient_table_examples() {
        let pt = decompose(&int(1), 5).unwrap();
        let table = coefficient_table(&pt, 3).unwrap();
        assert_eq!(table.entries(), &[1, 2, 0, 0, 0]);

        // The incremental construction against the exact-reduction route.
        let pt = decompose(&ratio(-1, 3), 7).unwrap();
        let table = coefficient_table(&pt, 2).unwrap();
        assert_eq!(table.entries()[0], 1);
        let m49 = Modulus::new(7, 2).unwrap();
        let exact_c1 = reduce_mod(&ratio(-2, 9), m49).unwrap();
        assert_eq!(exact_c1.value(), 27);
        assert_eq!(table.entries()[1], 27);
        for k in 0..7u64 {
            let exact = binom(&ratio(-1, 3), k) * binom(&(ratio(-1, 3) + int(k as i64)), k);
            assert_eq!(
                table.entries()[k as usize],
                reduce_mod(&exact, m49).unwrap().value(),
                "k={k}"
            );
        }
    }

    #[test]
    fn sum_squares_mod_examples() {
        let cases = [
            (int(1), 5u64, 3u32, 40u64),
            (int(2), 5, 3, 1),
            (int(0), 7, 3, 7),
        ];
        for (x, p, e, expected) in cases {
            let pt = decompose(&x, p).unwrap();
            assert_eq!(sum_squares_mod(&pt, e).unwrap().value(), expected);
        }
    }

    #[test]
    fn sum_squares_exact_examples() {
        assert_eq!(sum_squares_exact(3, &ratio(-1, 2)).unwrap(), ratio(8081, 4096));
        assert_eq!(sum_squares_exact(5, &int(1)).unwrap(), int(165));
        assert_eq!(sum_squares_exact(11, &int(0)).unwrap(), int(11));
    }

    #[test]
    fn fast_path_matches_oracle() {
        let xs = [int(0), int(1), int(2), ratio(-1, 3), ratio(-1, 4), ratio(-1, 2), ratio(7, 5)];
        for p in [3u64, 5, 7, 11, 13] {
            for x in &xs {
                if !p_adic_valuation(x, p).is_nonnegative() {
                    continue;
                }
                let exact = sum_squares_exact(p, x).unwrap();
                let pt = decompose(x, p).unwrap();
                for e in 1..=3u32 {
                    let m = Modulus::new(p, e).unwrap();
                    assert_eq!(
                        sum_squares_mod(&pt, e).unwrap(),
                        reduce_mod(&exact, m).unwrap(),
                        "p={p} x={x} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn depends_only_on_residue_class() {
        for p in [5u64, 7, 11] {
            for e in 1..=3u32 {
                for x in [ratio(-1, 3), int(4), ratio(9, 4)] {
                    let shifted = &x + int(Modulus::new(p, e).unwrap().value() as i64);
                    let a = sum_squares_mod(&decompose(&x, p).unwrap(), e).unwrap();
                    let b = sum_squares_mod(&decompose(&shifted, p).unwrap(), e).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }
}
