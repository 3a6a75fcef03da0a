//! The grading group `A = Z^r + Z/m_1 + ... + Z/m_s` and degrees of monomials.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// An element of `A`: a free part in `Z^r` and reduced torsion residues.
///
/// The derived `Ord` (free vector, then torsion vector) is the canonical
/// order used wherever degrees key a map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeValue {
    pub free: Vec<i64>,
    pub torsion: Vec<u64>,
}

impl DegreeValue {
    pub fn new(free: Vec<i64>, torsion: Vec<u64>) -> Self {
        DegreeValue { free, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&a| a == 0) && self.torsion.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.free.iter().map(|a| a.to_string()).chain(self.torsion.iter().map(|a| format!("{a}~"))).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "({})", parts.join(", "))
        }
    }
}

/// Structure of the submonoid of exponents `(u, v)` with `deg(x^u y^v) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeZero {
    /// Only `(0, 0)` has degree zero: the grading is positive.
    Trivial,
    /// The degree-zero exponents are exactly `N * v`.
    Monogenic(Monomial),
    /// The degree-zero exponents need at least two generators.
    NotMonogenic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct RawGrading {
    free_rank: usize,
    torsion: Vec<u64>,
    deg_x: DegreeValue,
    deg_y: DegreeValue,
}

/// A grading of `k[x, y]` by `A`, given by `deg(x)` and `deg(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGrading", into = "RawGrading")]
pub struct Grading {
    free_rank: usize,
    torsion: Vec<u64>,
    deg_x: DegreeValue,
    deg_y: DegreeValue,
}

impl TryFrom<RawGrading> for Grading {
    type Error = Error;

    fn try_from(raw: RawGrading) -> Result<Self> {
        Grading::new(raw.free_rank, raw.torsion, raw.deg_x, raw.deg_y)
    }
}

impl From<Grading> for RawGrading {
    fn from(g: Grading) -> Self {
        RawGrading { free_rank: g.free_rank, torsion: g.torsion, deg_x: g.deg_x, deg_y: g.deg_y }
    }
}

impl Grading {
    /// Validates shapes and that torsion residues are already reduced.
    pub fn new(free_rank: usize, torsion: Vec<u64>, deg_x: DegreeValue, deg_y: DegreeValue) -> Result<Self> {
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGrading(format!("torsion modulus {m} must be at least 2")));
        }
        let g = Grading { free_rank, torsion, deg_x: DegreeValue::default(), deg_y: DegreeValue::default() };
        g.check_degree(&deg_x).map_err(|e| Error::InvalidGrading(format!("deg_x: {e}")))?;
        g.check_degree(&deg_y).map_err(|e| Error::InvalidGrading(format!("deg_y: {e}")))?;
        Ok(Grading { deg_x, deg_y, ..g })
    }

    /// `A = 0`: every monomial has degree zero.
    pub fn trivial() -> Self {
        Grading { free_rank: 0, torsion: vec![], deg_x: DegreeValue::default(), deg_y: DegreeValue::default() }
    }

    /// `A = Z`.
    pub fn integer(dx: i64, dy: i64) -> Self {
        Grading {
            free_rank: 1,
            torsion: vec![],
            deg_x: DegreeValue::new(vec![dx], vec![]),
            deg_y: DegreeValue::new(vec![dy], vec![]),
        }
    }

    /// `A = Z/m`; the residues are reduced here.
    pub fn cyclic(m: u64, dx: i64, dy: i64) -> Result<Self> {
        let r = |a: i64| a.rem_euclid(m as i64) as u64;
        Grading::new(0, vec![m], DegreeValue::new(vec![], vec![r(dx)]), DegreeValue::new(vec![], vec![r(dy)]))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn deg_x(&self) -> &DegreeValue {
        &self.deg_x
    }

    pub fn deg_y(&self) -> &DegreeValue {
        &self.deg_y
    }

    /// Check that a degree has the right shape and reduced residues.
    pub fn check_degree(&self, d: &DegreeValue) -> Result<()> {
        if d.free.len() != self.free_rank {
            return Err(Error::InvalidDegree(format!(
                "free part has length {}, expected {}",
                d.free.len(),
                self.free_rank
            )));
        }
        if d.torsion.len() != self.torsion.len() {
            return Err(Error::InvalidDegree(format!(
                "torsion part has length {}, expected {}",
                d.torsion.len(),
                self.torsion.len()
            )));
        }
        for (j, (&a, &m)) in d.torsion.iter().zip(&self.torsion).enumerate() {
            if a >= m {
                return Err(Error::InvalidDegree(format!("torsion residue {a} not reduced mod {m} (entry {j})")));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> DegreeValue {
        DegreeValue::new(vec![0; self.free_rank], vec![0; self.torsion.len()])
    }

    pub fn add(&self, a: &DegreeValue, b: &DegreeValue) -> DegreeValue {
        DegreeValue {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a.torsion.iter().zip(&b.torsion).zip(&self.torsion).map(|((x, y), m)| (x + y) % m).collect(),
        }
    }

    /// `u deg(x) + v deg(y)` for signed exponents.
    pub fn degree_of_signed(&self, u: i64, v: i64) -> DegreeValue {
        let free = self.deg_x.free.iter().zip(&self.deg_y.free).map(|(a, b)| u * a + v * b).collect();
        let torsion = self
            .deg_x
            .torsion
            .iter()
            .zip(&self.deg_y.torsion)
            .zip(&self.torsion)
            .map(|((&a, &b), &m)| {
                let m = m as i128;
                ((u as i128 * a as i128 + v as i128 * b as i128).rem_euclid(m)) as u64
            })
            .collect();
        DegreeValue { free, torsion }
    }

    /// The degree of `x^u y^v`.
    pub fn degree_of(&self, u: u32, v: u32) -> DegreeValue {
        self.degree_of_signed(u as i64, v as i64)
    }

    pub fn degree(&self, m: Monomial) -> DegreeValue {
        self.degree_of(m.x, m.y)
    }

    /// Whether `deg(x^u y^v) = 0` for a signed exponent vector.
    pub fn is_degree_zero(&self, u: i64, v: i64) -> bool {
        self.degree_of_signed(u, v).is_zero()
    }

    /// Lattice `L` of signed `(u, v)` with degree zero, as a generator of
    /// its rank-one part. Returns `Ok(None)` when `L = 0`, `Err(())` when
    /// `L` has rank two.
    fn kernel_generator(&self) -> std::result::Result<Option<(i64, i64)>, ()> {
        let rows: Vec<(i64, i64)> = self
            .deg_x
            .free
            .iter()
            .zip(&self.deg_y.free)
            .map(|(&a, &b)| (a, b))
            .filter(|&(a, b)| a != 0 || b != 0)
            .collect();
        let Some(&(a, b)) = rows.first() else {
            // free kernel is all of Z^2; the torsion conditions cut out a
            // sublattice containing lcm(m_j) Z^2, so the rank stays two
            return Err(());
        };
        let g = a.gcd(&b);
        let w = (b / g, -a / g);
        if rows.iter().any(|&(c, d)| c * w.0 + d * w.1 != 0) {
            return Ok(None);
        }
        // smallest multiple of w that also satisfies the torsion congruences;
        // lcm(m_j) * w always does
        let bound = self.torsion.iter().fold(1u64, |acc, &m| acc.lcm(&m)) as i64;
        let s = (1..=bound)
            .find(|&s| self.is_degree_zero(s * w.0, s * w.1))
            .expect("lcm of the moduli kills every torsion residue");
        Ok(Some((s * w.0, s * w.1)))
    }

    /// Classify the degree-zero exponents in `N^2`.
    ///
    /// The degree-zero sublattice of `Z^2` is computed exactly: the kernel of
    /// the free part is found from one nonzero row, then scaled by the
    /// smallest factor (at most the lcm of the moduli) meeting the torsion
    /// congruences. Its intersection with `N^2` is then read off the signs.
    pub fn degree_zero_generator(&self) -> DegreeZero {
        match self.kernel_generator() {
            Err(()) => DegreeZero::NotMonogenic,
            Ok(None) => DegreeZero::Trivial,
            Ok(Some((a, b))) => {
                if a >= 0 && b >= 0 {
                    DegreeZero::Monogenic(Monomial::new(a as u32, b as u32))
                } else if a <= 0 && b <= 0 {
                    DegreeZero::Monogenic(Monomial::new((-a) as u32, (-b) as u32))
                } else {
                    DegreeZero::Trivial
                }
            }
        }
    }

    /// Number of monomials of degree `deg(x^a y^b)` when the grading is positive.
    ///
    /// With trivial degree-zero submonoid the monomials of a fixed degree are
    /// `(a, b) + j w` for `j` in a finite interval, where `w` generates the
    /// (mixed-sign) kernel lattice.
    pub fn count_monomials_of_degree(&self, a: u32, b: u32) -> Option<u64> {
        match self.kernel_generator() {
            Err(()) => None,
            Ok(None) => Some(1),
            Ok(Some((w0, w1))) => {
                if (w0 >= 0 && w1 >= 0) || (w0 <= 0 && w1 <= 0) {
                    return None;
                }
                // normalise so w0 > 0 > w1
                let (w0, w1) = if w0 > 0 { (w0, w1) } else { (-w0, -w1) };
                // need a + j w0 >= 0 and b + j w1 >= 0
                let lo = num_integer::Integer::div_ceil(&-(a as i64), &w0);
                let hi = (b as i64).div_euclid(-w1);
                Some((hi - lo + 1).max(0) as u64)
            }
        }
    }
}
