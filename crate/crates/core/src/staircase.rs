//! Monomial ideals of `k[x, y]` as staircases.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{DegreeValue, DegreeZero, Grading};
use crate::monomial::Monomial;

/// A monomial ideal, stored by its minimal generators `x^{p_i} y^{q_i}` with
/// `p_0 > p_1 > ... > p_n` and `q_0 < q_1 < ... < q_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal", into = "RawIdeal")]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct RawIdeal {
    gens: Vec<Monomial>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: RawIdeal) -> Result<Self> {
        MonomialIdeal::from_gens(raw.gens)
    }
}

impl From<MonomialIdeal> for RawIdeal {
    fn from(m: MonomialIdeal) -> Self {
        RawIdeal { gens: m.gens }
    }
}

impl MonomialIdeal {
    /// The ideal generated by the given monomials; non-minimal generators are
    /// dropped and the rest sorted by decreasing `x`-exponent.
    pub fn from_gens<I: IntoIterator<Item = Monomial>>(gens: I) -> Result<Self> {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if all.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        // sort by increasing y, then increasing x; a generator is minimal iff
        // its x-exponent is smaller than every earlier one
        all.sort_by_key(|m| (m.y, m.x));
        let mut gens: Vec<Monomial> = Vec::new();
        for m in all {
            if gens.last().is_none_or(|last| m.x < last.x) {
                gens.push(m);
            }
        }
        Ok(MonomialIdeal { gens })
    }

    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![Monomial::ONE] }
    }

    /// The finite-colength ideal whose standard monomials form the Young
    /// diagram with row `s` (the `y^s` row) of length `parts[s]`.
    pub fn from_partition(parts: &[u32]) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotMonotone);
        }
        let mut gens = Vec::new();
        let mut prev = None;
        for (s, &len) in parts.iter().enumerate() {
            if prev != Some(len) {
                gens.push(Monomial::new(len, s as u32));
                prev = Some(len);
            }
        }
        gens.push(Monomial::new(0, parts.len() as u32));
        MonomialIdeal::from_gens(gens)
    }

    /// Minimal generators, sorted by decreasing `x`-exponent.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// `p_i`.
    pub fn p(&self, i: usize) -> u32 {
        self.gens[i].x
    }

    /// `q_i`.
    pub fn q(&self, i: usize) -> u32 {
        self.gens[i].y
    }

    /// Index `n` of the last generator.
    pub fn last(&self) -> usize {
        self.gens.len() - 1
    }

    pub fn contains(&self, u: u32, v: u32) -> bool {
        self.contains_monomial(Monomial::new(u, v))
    }

    pub fn contains_monomial(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership for signed exponents; negative exponents are never members.
    pub fn contains_signed(&self, u: i64, v: i64) -> bool {
        u >= 0 && v >= 0 && self.contains(u as u32, v as u32)
    }

    pub fn is_finite_colength(&self) -> bool {
        self.gens[0].y == 0 && self.gens[self.last()].x == 0
    }

    /// Row lengths of the staircase: the partition of the colength.
    pub fn partition(&self) -> Result<Vec<u32>> {
        if !self.is_finite_colength() {
            return Err(Error::InfiniteColength);
        }
        let mut rows = Vec::new();
        for w in self.gens.windows(2) {
            for _ in w[0].y..w[1].y {
                rows.push(w[0].x);
            }
        }
        Ok(rows)
    }

    pub fn colength(&self) -> Result<usize> {
        Ok(self.partition()?.iter().map(|&r| r as usize).sum())
    }

    /// Standard monomials, row by row (increasing `y`, then `x`).
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let rows = self.partition()?;
        Ok(rows.iter().enumerate().flat_map(|(v, &len)| (0..len).map(move |u| Monomial::new(u, v as u32))).collect())
    }

    pub fn hilbert_function(&self, g: &Grading) -> Result<HilbertFunction> {
        let mut entries = BTreeMap::new();
        for m in self.standard_monomials()? {
            *entries.entry(g.degree(m)).or_insert(0) += 1;
        }
        Ok(HilbertFunction { entries })
    }

    /// `(M : x^a y^b)`.
    pub fn colon_monomial(&self, a: u32, b: u32) -> MonomialIdeal {
        MonomialIdeal::from_gens(self.gens.iter().map(|g| Monomial::new(g.x.saturating_sub(a), g.y.saturating_sub(b))))
            .expect("colon of a nonempty generator list is nonempty")
    }

    /// Split `M = x^a y^b * Q` with `(a, b) = (p_n, q_0)` the gcd of the generators.
    pub fn factor_gcd(&self) -> (Monomial, MonomialIdeal) {
        let d = Monomial::new(self.gens[self.last()].x, self.gens[0].y);
        (d, self.colon_monomial(d.x, d.y))
    }

    /// Codimension read off the staircase: 1 when the generators share a
    /// common factor, 2 for finite colength. The unit ideal reports 2.
    pub fn codimension(&self) -> u32 {
        if self.factor_gcd().0.is_one() {
            2
        } else {
            1
        }
    }

    /// Generators in `x^a y^b` form, for DOT labels.
    pub fn spaced_label(&self) -> String {
        self.gens.iter().map(|g| g.spaced()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// A finitely supported Hilbert function `h: A -> N`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<HilbertEntry>", into = "Vec<HilbertEntry>")]
pub struct HilbertFunction {
    entries: BTreeMap<DegreeValue, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertEntry {
    pub degree: DegreeValue,
    pub value: u64,
}

impl TryFrom<Vec<HilbertEntry>> for HilbertFunction {
    type Error = Error;

    fn try_from(list: Vec<HilbertEntry>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for e in list {
            if e.value == 0 {
                continue;
            }
            if entries.insert(e.degree.clone(), e.value).is_some() {
                return Err(Error::InvalidDegree(format!("degree {} listed twice", e.degree)));
            }
        }
        Ok(HilbertFunction { entries })
    }
}

impl From<HilbertFunction> for Vec<HilbertEntry> {
    fn from(h: HilbertFunction) -> Self {
        h.entries.into_iter().map(|(degree, value)| HilbertEntry { degree, value }).collect()
    }
}

impl HilbertFunction {
    pub fn from_entries<I: IntoIterator<Item = (DegreeValue, u64)>>(it: I) -> Self {
        HilbertFunction { entries: it.into_iter().filter(|(_, v)| *v > 0).collect() }
    }

    pub fn get(&self, d: &DegreeValue) -> u64 {
        self.entries.get(d).copied().unwrap_or(0)
    }

    /// `|h|`.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DegreeValue, u64)> {
        self.entries.iter().map(|(d, &v)| (d, v))
    }

    /// Check every degree against the grading's shape.
    pub fn validate(&self, g: &Grading) -> Result<()> {
        self.entries.keys().try_for_each(|d| g.check_degree(d))
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(d, v)| format!("{d}->{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    Projective,
    Affine,
}

/// The Hilbert scheme of a principal monomial ideal: `P^m` or `A^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpace {
    pub kind: FactorKind,
    pub m: u64,
}

impl fmt::Display for FactorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.kind {
            FactorKind::Projective => "P",
            FactorKind::Affine => "A",
        };
        write!(f, "{sym}^{}", self.m)
    }
}

/// Classify the Hilbert scheme of ideals with the Hilbert function of `<x^a y^b>`.
///
/// Positive gradings give `P^m` with `m + 1` the number of monomials of
/// degree `deg(x^a y^b)`. If the degree-zero monomials are `N v`, the answer
/// is `A^m` with `m` the largest `r` such that `(a, b) - r v` stays in `N^2`.
/// `(0, 0)` is the trivial factor `A^0`.
pub fn classify_principal_factor(a: u32, b: u32, g: &Grading) -> Result<FactorSpace> {
    if (a, b) == (0, 0) {
        return Ok(FactorSpace { kind: FactorKind::Affine, m: 0 });
    }
    match g.degree_zero_generator() {
        DegreeZero::Trivial => {
            let count =
                g.count_monomials_of_degree(a, b).expect("positive grading has finitely many monomials per degree");
            Ok(FactorSpace { kind: FactorKind::Projective, m: count - 1 })
        }
        DegreeZero::Monogenic(v) => {
            let rx = a.checked_div(v.x).unwrap_or(u32::MAX);
            let ry = b.checked_div(v.y).unwrap_or(u32::MAX);
            Ok(FactorSpace { kind: FactorKind::Affine, m: rx.min(ry) as u64 })
        }
        DegreeZero::NotMonogenic => Err(Error::Unsupported(
            "degree-zero monomials are not generated by a single monomial; no principal ideal is admissible".into(),
        )),
    }
}
