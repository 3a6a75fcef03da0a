//! Arrows `(i, u, v)` of a monomial ideal: a minimal generator `x^{p_i} y^{q_i}`
//! paired with a standard monomial `x^u y^v` of the same degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grading::Grading;
use crate::staircase::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrowClass {
    /// `u > p_i` and significant.
    PositiveSignificant,
    /// `u = p_i` and significant.
    NonnegSignificantNotPositive,
    /// `v >= q_i` and significant.
    NonposSignificant,
    /// Nonnegative or nonpositive, but not significant.
    Insignificant,
    /// `u < p_i` and `v < q_i`.
    UtterlyInsignificant,
}

impl ArrowClass {
    pub fn is_significant(self) -> bool {
        matches!(
            self,
            ArrowClass::PositiveSignificant | ArrowClass::NonnegSignificantNotPositive | ArrowClass::NonposSignificant
        )
    }

    pub fn is_nonneg_significant(self) -> bool {
        matches!(self, ArrowClass::PositiveSignificant | ArrowClass::NonnegSignificantNotPositive)
    }
}

/// An arrow with its classification. Ordered lexicographically by `(i, u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub i: usize,
    pub u: u32,
    pub v: u32,
    pub class: ArrowClass,
}

impl Arrow {
    pub fn triple(&self) -> (usize, u32, u32) {
        (self.i, self.u, self.v)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.u, self.v)
    }
}

/// Classify `(i, u, v)`, or `None` if it is not an arrow of `m`.
pub fn classify(m: &MonomialIdeal, g: &Grading, i: usize, u: u32, v: u32) -> Option<ArrowClass> {
    if i > m.last() || m.contains(u, v) {
        return None;
    }
    let (p, q) = (m.p(i), m.q(i));
    if g.degree_of(u, v) != g.degree_of(p, q) {
        return None;
    }
    let n = m.last();
    let class = if u >= p {
        let significant = i > 0 && m.contains(u + m.p(i - 1) - p, v);
        match (significant, u > p) {
            (true, true) => ArrowClass::PositiveSignificant,
            (true, false) => ArrowClass::NonnegSignificantNotPositive,
            (false, _) => ArrowClass::Insignificant,
        }
    } else if v >= q {
        if i < n && m.contains(u, v - q + m.q(i + 1)) {
            ArrowClass::NonposSignificant
        } else {
            ArrowClass::Insignificant
        }
    } else {
        ArrowClass::UtterlyInsignificant
    };
    Some(class)
}

/// All arrows of a finite-colength ideal, classified and sorted by `(i, u, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSet {
    arrows: Vec<Arrow>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowCounts {
    pub total: usize,
    pub significant: usize,
    pub nonneg_significant: usize,
    pub nonpos_significant: usize,
    pub positive_significant: usize,
    pub insignificant: usize,
    pub utterly_insignificant: usize,
}

impl ArrowSet {
    pub fn all(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    fn filtered(&self, pred: impl Fn(ArrowClass) -> bool) -> Vec<Arrow> {
        self.arrows.iter().copied().filter(|a| pred(a.class)).collect()
    }

    /// `T_+(M)`.
    pub fn positive_significant(&self) -> Vec<Arrow> {
        self.filtered(|c| c == ArrowClass::PositiveSignificant)
    }

    /// `T_{>=0}(M)`.
    pub fn nonneg_significant(&self) -> Vec<Arrow> {
        self.filtered(ArrowClass::is_nonneg_significant)
    }

    /// `T_{<=0}(M)`.
    pub fn nonpos_significant(&self) -> Vec<Arrow> {
        self.filtered(|c| c == ArrowClass::NonposSignificant)
    }

    /// `T(M)`.
    pub fn significant(&self) -> Vec<Arrow> {
        self.filtered(ArrowClass::is_significant)
    }

    /// Everything outside `T(M)`, utterly insignificant arrows included.
    pub fn insignificant(&self) -> Vec<Arrow> {
        self.filtered(|c| !c.is_significant())
    }

    pub fn utterly_insignificant(&self) -> Vec<Arrow> {
        self.filtered(|c| c == ArrowClass::UtterlyInsignificant)
    }

    pub fn find(&self, i: usize, u: u32, v: u32) -> Option<Arrow> {
        self.arrows.binary_search_by(|a| a.triple().cmp(&(i, u, v))).ok().map(|k| self.arrows[k])
    }

    pub fn counts(&self) -> ArrowCounts {
        let count = |pred: &dyn Fn(ArrowClass) -> bool| self.arrows.iter().filter(|a| pred(a.class)).count();
        ArrowCounts {
            total: self.arrows.len(),
            significant: count(&|c| c.is_significant()),
            nonneg_significant: count(&|c| c.is_nonneg_significant()),
            nonpos_significant: count(&|c| c == ArrowClass::NonposSignificant),
            positive_significant: count(&|c| c == ArrowClass::PositiveSignificant),
            insignificant: count(&|c| !c.is_significant()),
            utterly_insignificant: count(&|c| c == ArrowClass::UtterlyInsignificant),
        }
    }
}

/// Enumerate and classify every arrow of `m` in one pass over generators and
/// standard monomials.
pub fn all_arrows(m: &MonomialIdeal, g: &Grading) -> Result<ArrowSet> {
    let standard = m.standard_monomials()?;
    let mut arrows = Vec::new();
    for i in 0..=m.last() {
        for s in &standard {
            if let Some(class) = classify(m, g, i, s.x, s.y) {
                arrows.push(Arrow { i, u: s.x, v: s.y, class });
            }
        }
    }
    arrows.sort();
    Ok(ArrowSet { arrows })
}

/// `T_+(M)` in canonical order.
pub fn positive_significant(m: &MonomialIdeal, g: &Grading) -> Result<Vec<Arrow>> {
    Ok(all_arrows(m, g)?.positive_significant())
}
