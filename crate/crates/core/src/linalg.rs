//! Exact rank computations: fraction-free elimination over `Z` and `Z[t]`,
//! plus plain Gaussian elimination over `Q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A polynomial in `t` with integer coefficients, lowest degree first,
/// without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `c t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[BigInt], k: usize| v.get(k).cloned().unwrap_or_default();
        IntPoly::from_coeffs((0..n).map(|k| get(&self.coeffs, k) + get(&other.coeffs, k)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Quotient of an exact division in `Z[t]`. Panics if the division is not exact.
    pub fn exact_div(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            assert!(self.is_zero(), "inexact polynomial division");
            return IntPoly::zero();
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (qk, r) = c.div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dj;
            }
            quot[k] = qk;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Coefficients as `i64`, for JSON output.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let m = match k {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            (BigRational::from_integer(c.clone()), m)
        });
        write!(f, "{}", crate::groebner::format_terms(terms))
    }
}

/// Integral domain with exact division, as needed by fraction-free elimination.
pub trait ExactDomain: Clone + PartialEq {
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn times(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    /// Pivot preference: smaller is better.
    fn size(&self) -> (usize, u64);
}

impl ExactDomain for BigInt {
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
    fn size(&self) -> (usize, u64) {
        (0, self.bits())
    }
}

impl ExactDomain for IntPoly {
    fn unit() -> Self {
        IntPoly::constant(1)
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other)
    }
    fn size(&self) -> (usize, u64) {
        (self.coeffs.len(), self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0))
    }
}

/// A sparse row: column index to nonzero entry.
pub type SparseRow<T> = BTreeMap<usize, T>;

/// Rank by fraction-free (Bareiss) elimination with dynamic pivoting.
///
/// Every remaining row is updated at each step as
/// `(p * row - a * pivot_row) / previous_pivot`, so each division is exact.
/// Rows with no entry in the pivot column only need rescaling by
/// `p / previous_pivot`, skipped when the two pivots agree.
pub fn bareiss_rank<T: ExactDomain>(rows: Vec<SparseRow<T>>) -> usize {
    let mut active: Vec<SparseRow<T>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut prev = T::unit();
    let mut rank = 0;
    while !active.is_empty() {
        let (ri, col) = active
            .iter()
            .enumerate()
            .flat_map(|(ri, row)| row.iter().map(move |(&c, e)| ((e.size(), row.len()), ri, c)))
            .min_by(|a, b| a.0.cmp(&b.0))
            .map(|(_, ri, c)| (ri, c))
            .unwrap();
        let pivot_row = active.swap_remove(ri);
        let p = pivot_row[&col].clone();
        let same = p == prev;
        for row in active.iter_mut() {
            match row.remove(&col) {
                Some(a) => {
                    let mut next = SparseRow::new();
                    let keys: Vec<usize> = row.keys().chain(pivot_row.keys()).copied().collect();
                    for k in keys {
                        if k == col || next.contains_key(&k) {
                            continue;
                        }
                        let mine = row.get(&k);
                        let theirs = pivot_row.get(&k);
                        let mut v = match mine {
                            Some(m) => p.times(m),
                            None => p.minus(&p),
                        };
                        if let Some(b) = theirs {
                            v = v.minus(&a.times(b));
                        }
                        let v = if same { v } else { v.div_exact(&prev) };
                        if !v.is_nil() {
                            next.insert(k, v);
                        }
                    }
                    *row = next;
                }
                None if !same => {
                    for v in row.values_mut() {
                        *v = p.times(v).div_exact(&prev);
                    }
                }
                None => {}
            }
        }
        active.retain(|r| !r.is_empty());
        prev = p;
        rank += 1;
    }
    rank
}

/// Clear denominators row by row.
pub fn integer_rows(rows: &[SparseRow<BigRational>]) -> Vec<SparseRow<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter().map(|(&k, c)| (k, (c * BigRational::from_integer(l.clone())).to_integer())).collect()
        })
        .collect()
}

/// Rank over `Q` by fraction-free elimination on denominator-cleared rows.
pub fn rational_rank_fraction_free(rows: &[SparseRow<BigRational>]) -> usize {
    bareiss_rank(integer_rows(rows))
}

/// Rank over `Q` by textbook Gaussian elimination with rational arithmetic.
pub fn rational_rank_gauss(rows: &[SparseRow<BigRational>]) -> usize {
    let mut rows: Vec<SparseRow<BigRational>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut rank = 0;
    while let Some(pivot_row) = rows.pop() {
        if pivot_row.is_empty() {
            continue;
        }
        let (&col, p) = pivot_row.iter().next().unwrap();
        let p = p.clone();
        for row in rows.iter_mut() {
            if let Some(a) = row.remove(&col) {
                let factor = a / &p;
                for (&k, b) in pivot_row.iter().skip(1) {
                    let e = row.entry(k).or_insert_with(BigRational::zero);
                    *e -= &factor * b;
                    if e.is_zero() {
                        row.remove(&k);
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_rows(m: &[Vec<i64>]) -> Vec<SparseRow<BigInt>> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, BigInt::from(c))).collect())
            .collect()
    }

    fn rat_rows(m: &[Vec<i64>]) -> Vec<SparseRow<BigRational>> {
        int_rows(m)
            .into_iter()
            .map(|r| r.into_iter().map(|(k, c)| (k, BigRational::from_integer(c))).collect())
            .collect()
    }

    #[test]
    fn int_poly_arithmetic() {
        let a = IntPoly::from_coeffs(vec![1.into(), 1.into()]); // 1 + t
        let b = IntPoly::from_coeffs(vec![(-1).into(), 1.into()]); // t - 1
        let prod = a.mul(&b);
        assert_eq!(prod, IntPoly::from_coeffs(vec![(-1).into(), 0.into(), 1.into()]));
        assert_eq!(prod.exact_div(&a), b);
        assert_eq!(prod.to_string(), "t^2 - 1");
        assert_eq!(IntPoly::monomial(3, 2).shift(1), IntPoly::monomial(3, 3));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(prod.eval(&third), BigRational::new((-8).into(), 9.into()));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_poly_division_panics() {
        IntPoly::monomial(1, 2).exact_div(&IntPoly::from_coeffs(vec![1.into(), 2.into()]));
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(bareiss_rank(int_rows(&m)), 2);
        assert_eq!(rational_rank_gauss(&rat_rows(&m)), 2);
        assert_eq!(bareiss_rank::<BigInt>(vec![]), 0);
        let id = vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]];
        assert_eq!(bareiss_rank(int_rows(&id)), 3);
    }

    #[test]
    fn polynomial_rank_drops_only_at_special_values() {
        // [[1, t], [t, 1]] has generic rank 2, rank 1 at t = +-1
        let row = |a: IntPoly, b: IntPoly| SparseRow::from([(0, a), (1, b)]);
        let rows = vec![
            row(IntPoly::constant(1), IntPoly::monomial(1, 1)),
            row(IntPoly::monomial(1, 1), IntPoly::constant(1)),
        ];
        assert_eq!(bareiss_rank(rows.clone()), 2);
        for (t, expect) in [(1, 1), (-1, 1), (2, 2), (0, 2)] {
            let t = BigRational::from_integer(t.into());
            let num: Vec<SparseRow<BigRational>> = rows
                .iter()
                .map(|r| r.iter().map(|(&k, p)| (k, p.eval(&t))).filter(|(_, v)| !v.is_zero()).collect())
                .collect();
            assert_eq!(rational_rank_fraction_free(&num), expect);
            assert_eq!(rational_rank_gauss(&num), expect);
        }
    }

    proptest! {
        #[test]
        fn two_rank_routines_agree(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..7)) {
            let rr = rat_rows(&m);
            prop_assert_eq!(rational_rank_fraction_free(&rr), rational_rank_gauss(&rr));
        }

        #[test]
        fn poly_exact_division(a in prop::collection::vec(-5i64..=5, 1..5), b in prop::collection::vec(-5i64..=5, 1..4)) {
            let a = IntPoly::from_coeffs(a.into_iter().map(BigInt::from).collect());
            let b = IntPoly::from_coeffs(b.into_iter().map(BigInt::from).collect());
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).exact_div(&b), a);
        }
    }
}
