//! Edge ideals: the one-parameter binomial deformations `I_alpha(t)` of a
//! monomial ideal along a positive significant arrow.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arrows::{classify, Arrow, ArrowClass};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groebner::{self, format_terms, MonomialOrder, Poly2};
use crate::monomial::Monomial;
use crate::staircase::MonomialIdeal;

/// `lead - coeff * tail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Option<Monomial>,
    #[serde(with = "crate::ratstr")]
    pub coeff: BigRational,
}

impl Binomial {
    pub fn monomial(m: Monomial) -> Self {
        Binomial { lead: m, tail: None, coeff: BigRational::zero() }
    }

    pub fn to_poly(&self) -> Poly2 {
        let mut p = Poly2::monomial(self.lead);
        if let Some(t) = self.tail {
            p.add_term(-self.coeff.clone(), t);
        }
        p
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().display(MonomialOrder::Xel))
    }
}

/// One term `sign * t^t_power * monomial * e_component` of a syzygy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyTerm {
    pub component: usize,
    pub sign: i8,
    pub t_power: u32,
    pub monomial: Monomial,
}

/// The syzygy pairing generator `index - 1` with generator `index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyRow {
    pub index: usize,
    pub terms: Vec<SyzygyTerm>,
}

impl fmt::Display for SyzygyRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|term| {
            let mut parts = Vec::new();
            match term.t_power {
                0 => {}
                1 => parts.push("t".to_string()),
                k => parts.push(format!("t^{k}")),
            }
            if !term.monomial.is_one() {
                parts.push(term.monomial.to_string());
            }
            parts.push(format!("e{}", term.component));
            (BigRational::from_integer(BigInt::from(term.sign)), parts.join("*"))
        });
        write!(f, "{}", format_terms(terms))
    }
}

/// `I_alpha(t)` for `alpha = (k, l + p_k, m + q_k)` in `T_+(M)`:
/// generated by `x^{p_i} y^{q_i}` for `i < k` and
/// `x^{p_i} y^{q_i} - t x^{l + p_i} y^{m + q_i}` for `i >= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdeal {
    base: MonomialIdeal,
    alpha: Arrow,
    ell: i64,
    m: i64,
    t: BigRational,
}

impl EdgeIdeal {
    pub fn new(base: &MonomialIdeal, g: &Grading, alpha: (usize, u32, u32), t: BigRational) -> Result<Self> {
        let (i, u, v) = alpha;
        let arrow = Arrow { i, u, v, class: ArrowClass::PositiveSignificant };
        if !base.is_finite_colength() {
            return Err(Error::InfiniteColength);
        }
        if classify(base, g, i, u, v) != Some(ArrowClass::PositiveSignificant) {
            return Err(Error::NotPositiveSignificant(arrow));
        }
        Ok(EdgeIdeal {
            base: base.clone(),
            alpha: arrow,
            ell: u as i64 - base.p(i) as i64,
            m: v as i64 - base.q(i) as i64,
            t,
        })
    }

    /// The same ideal at another value of `t`.
    pub fn with_t(&self, t: BigRational) -> Self {
        EdgeIdeal { t, ..self.clone() }
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn alpha(&self) -> Arrow {
        self.alpha
    }

    pub fn k(&self) -> usize {
        self.alpha.i
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    fn tail_of(&self, j: usize) -> Monomial {
        let gen = self.base.gens()[j];
        gen.shifted(self.ell, self.m).expect("tail exponents are nonnegative for i >= k")
    }

    pub fn generators(&self) -> Vec<Binomial> {
        self.base
            .gens()
            .iter()
            .enumerate()
            .map(|(j, &gen)| {
                if j < self.k() || self.t.is_zero() {
                    Binomial::monomial(gen)
                } else {
                    Binomial { lead: gen, tail: Some(self.tail_of(j)), coeff: self.t.clone() }
                }
            })
            .collect()
    }

    pub fn polys(&self) -> Vec<Poly2> {
        self.generators().iter().map(Binomial::to_poly).collect()
    }

    /// The generators with `t` kept as a letter, e.g. `<x^4, x^2*y - t*x^3, y^2 - t*x*y>`.
    pub fn display_symbolic(&self) -> String {
        let parts: Vec<String> = self
            .base
            .gens()
            .iter()
            .enumerate()
            .map(|(j, gen)| if j < self.k() { gen.to_string() } else { format!("{gen} - t*{}", self.tail_of(j)) })
            .collect();
        format!("<{}>", parts.join(", "))
    }

    pub fn sigma(&self) -> usize {
        sigma_of(&self.base, self.k(), self.ell, self.m)
    }

    /// Generators of the syzygy module, one row per adjacent pair; row `k`
    /// carries the extra term `-t x^{l + p_{k-1} - p_sigma} y^{m + q_k - q_sigma} e_sigma`.
    pub fn syzygies(&self) -> Vec<SyzygyRow> {
        let b = &self.base;
        let (k, sigma) = (self.k(), self.sigma());
        (1..=b.last())
            .map(|i| {
                let mut terms = vec![
                    SyzygyTerm {
                        component: i - 1,
                        sign: 1,
                        t_power: 0,
                        monomial: Monomial::new(0, b.q(i) - b.q(i - 1)),
                    },
                    SyzygyTerm { component: i, sign: -1, t_power: 0, monomial: Monomial::new(b.p(i - 1) - b.p(i), 0) },
                ];
                if i == k {
                    let x = self.ell + b.p(k - 1) as i64 - b.p(sigma) as i64;
                    let y = self.m + b.q(k) as i64 - b.q(sigma) as i64;
                    terms.push(SyzygyTerm {
                        component: sigma,
                        sign: -1,
                        t_power: 1,
                        monomial: crate::monomial::from_signed(x, y).expect("sigma divides the corner"),
                    });
                }
                SyzygyRow { index: i, terms }
            })
            .collect()
    }

    /// `sum_j (syzygy)_j * f_j` at the current value of `t`.
    pub fn syzygy_residual(&self, row: &SyzygyRow) -> Poly2 {
        let gens = self.polys();
        let mut acc = Poly2::zero();
        for term in &row.terms {
            let c = BigRational::from_integer(BigInt::from(term.sign)) * pow(&self.t, term.t_power);
            acc.add_scaled(&gens[term.component], &c, term.monomial);
        }
        acc
    }

    /// Whether every syzygy row vanishes against the generators identically in
    /// `t`. The residual has degree at most two in `t`, so vanishing at four
    /// distinct values is an exact identity check.
    pub fn syzygies_vanish_identically(&self) -> bool {
        let rows = self.syzygies();
        (0..4).all(|t| {
            let e = self.with_t(BigRational::from_integer(BigInt::from(t)));
            rows.iter().all(|r| e.syzygy_residual(r).is_zero())
        })
    }

    /// Reduced Gröbner basis for `order`.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Vec<Poly2> {
        groebner::buchberger(&self.polys(), order)
    }

    pub fn initial_ideal(&self, order: MonomialOrder) -> MonomialIdeal {
        groebner::initial_ideal(&self.groebner_basis(order), order)
    }

    /// Normal form of a monomial under `xel`, with `t` kept symbolic: `None`
    /// when it reduces to zero, otherwise `(kappa, w)` meaning `t^kappa * w`.
    ///
    /// Relies on the defining generators being a Gröbner basis for `xel`, whose
    /// leading monomials are the generators of the base ideal.
    pub fn xel_normal_form(&self, mono: Monomial) -> Option<(u32, Monomial)> {
        let b = &self.base;
        let mut w = mono;
        let mut kappa = 0;
        loop {
            let j = match b.gens().iter().position(|gen| gen.divides(w)) {
                None => return Some((kappa, w)),
                Some(j) => j,
            };
            if j < self.k() {
                return None;
            }
            w = w.shifted(self.ell, self.m).expect("a multiple of a tail stays in N^2");
            kappa += 1;
        }
    }
}

fn pow(t: &BigRational, k: u32) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * t)
}

fn sigma_of(b: &MonomialIdeal, k: usize, ell: i64, m: i64) -> usize {
    let x = ell + b.p(k - 1) as i64;
    let y = m + b.q(k) as i64;
    (0..k).rev().find(|&s| x >= b.p(s) as i64 && y >= b.q(s) as i64).expect("a significant arrow always admits sigma")
}

/// The largest `sigma < k` with `x^{p_sigma} y^{q_sigma}` dividing
/// `x^{l + p_{k-1}} y^{m + q_k}`.
pub fn sigma_index(base: &MonomialIdeal, g: &Grading, alpha: (usize, u32, u32)) -> Result<usize> {
    Ok(EdgeIdeal::new(base, g, alpha, BigRational::one())?.sigma())
}
