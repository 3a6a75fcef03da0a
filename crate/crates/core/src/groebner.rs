//! Bivariate polynomials over `Q` and a Buchberger engine for the two
//! lexicographic orders on `k[x, y]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;
use crate::staircase::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Lexicographic with `x > y`.
    Lex,
    /// Lexicographic with `x < y`.
    Xel,
}

impl MonomialOrder {
    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => (a.x, a.y).cmp(&(b.x, b.y)),
            MonomialOrder::Xel => (a.y, a.x).cmp(&(b.y, b.x)),
        }
    }
}

/// A sparse polynomial in `x, y` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Poly2::zero();
        p.add_term(c, m);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly2::term(BigRational::one(), m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, c: BigRational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// `self += c * mono * other`.
    pub fn add_scaled(&mut self, other: &Poly2, c: &BigRational, mono: Monomial) {
        for (m, a) in &other.terms {
            self.add_term(a * c, m.mul(mono));
        }
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one(), Monomial::ONE);
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one(), Monomial::ONE);
        out
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (m, c) in &other.terms {
            out.add_scaled(self, c, *m);
        }
        out
    }

    pub fn scale(&self, c: &BigRational, mono: Monomial) -> Poly2 {
        let mut out = Poly2::zero();
        out.add_scaled(self, c, mono);
        out
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(*a.0, *b.0)).map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<Monomial> {
        self.leading(order).map(|(m, _)| m)
    }

    pub fn make_monic(&self, order: MonomialOrder) -> Poly2 {
        match self.leading(order) {
            None => Poly2::zero(),
            Some((_, c)) => self.scale(&c.recip(), Monomial::ONE),
        }
    }

    /// Terms in decreasing order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, BigRational)> {
        let mut t: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    pub fn display(&self, order: MonomialOrder) -> String {
        format_terms(self.sorted_terms(order).into_iter().map(|(m, c)| (c, m.to_string())))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(MonomialOrder::Lex))
    }
}

/// Render `c_1 m_1 + c_2 m_2 + ...` with unit coefficients elided.
pub(crate) fn format_terms<I: IntoIterator<Item = (BigRational, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (k, (c, m)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m == "1" {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&format!("{a}*{m}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Full reduction of `f` modulo `basis`; the remainder has no term divisible
/// by a leading monomial of the basis.
pub fn reduce(f: &Poly2, basis: &[Poly2], order: MonomialOrder) -> Poly2 {
    divide(f, basis, order).1
}

/// Division with quotients: `f = sum q_j basis_j + r`.
pub fn divide(f: &Poly2, basis: &[Poly2], order: MonomialOrder) -> (Vec<Poly2>, Poly2) {
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|b| {
            let (m, c) = b.leading(order).expect("zero polynomial in division basis");
            (m, c.clone())
        })
        .collect();
    let mut quotients = vec![Poly2::zero(); basis.len()];
    let mut remainder = Poly2::zero();
    let mut p = f.clone();
    while let Some((m, c)) = p.leading(order).map(|(m, c)| (m, c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(m)) {
            Some(j) => {
                let factor = m.checked_div(leads[j].0).unwrap();
                let coeff = &c / &leads[j].1;
                quotients[j].add_term(coeff.clone(), factor);
                p.add_scaled(&basis[j], &-coeff, factor);
            }
            None => {
                remainder.add_term(c.clone(), m);
                p.add_term(-c, m);
            }
        }
    }
    (quotients, remainder)
}

pub fn s_polynomial(f: &Poly2, g: &Poly2, order: MonomialOrder) -> Poly2 {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = mf.lcm(mg);
    let mut s = f.scale(&cf.recip(), l.checked_div(mf).unwrap());
    s.add_scaled(g, &-cg.recip(), l.checked_div(mg).unwrap());
    s
}

/// Reduced Gröbner basis (monic, sorted by decreasing leading monomial).
///
/// Pairs are processed smallest-lcm first; pairs with coprime leading
/// monomials are skipped.
pub fn buchberger(gens: &[Poly2], order: MonomialOrder) -> Vec<Poly2> {
    let mut basis: Vec<Poly2> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.make_monic(order)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while !pairs.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize), b: &[Poly2]| {
            b[i].leading_monomial(order).unwrap().lcm(b[j].leading_monomial(order).unwrap())
        };
        let best =
            (0..pairs.len()).min_by(|&a, &b| order.cmp(lcm_of(&pairs[a], &basis), lcm_of(&pairs[b], &basis))).unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (li, lj) = (basis[i].leading_monomial(order).unwrap(), basis[j].leading_monomial(order).unwrap());
        if li.gcd(lj).is_one() {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            basis.push(r.make_monic(order));
            let k = basis.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    interreduce(basis, order)
}

fn interreduce(mut basis: Vec<Poly2>, order: MonomialOrder) -> Vec<Poly2> {
    // drop elements whose leading monomial is divisible by another's
    basis.sort_by(|a, b| order.cmp(a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap()));
    let mut minimal: Vec<Poly2> = Vec::new();
    for f in basis {
        let lm = f.leading_monomial(order).unwrap();
        if !minimal.iter().any(|g| g.leading_monomial(order).unwrap().divides(lm)) {
            minimal.push(f);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly2> = minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.clone()).collect();
        let lead = Poly2::term(BigRational::one(), minimal[k].leading_monomial(order).unwrap());
        let tail = minimal[k].sub(&lead);
        reduced.push(lead.add(&reduce(&tail, &others, order)));
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial(order).unwrap(), a.leading_monomial(order).unwrap()));
    reduced
}

/// Whether every S-pair of `gens` reduces to zero modulo `gens`.
pub fn is_groebner_basis(gens: &[Poly2], order: MonomialOrder) -> bool {
    (0..gens.len()).all(|j| (0..j).all(|i| reduce(&s_polynomial(&gens[i], &gens[j], order), gens, order).is_zero()))
}

/// The monomial ideal of leading terms of a Gröbner basis.
pub fn initial_ideal(gb: &[Poly2], order: MonomialOrder) -> MonomialIdeal {
    MonomialIdeal::from_gens(gb.iter().map(|g| g.leading_monomial(order).unwrap()))
        .expect("Gröbner basis of a nonzero ideal")
}
