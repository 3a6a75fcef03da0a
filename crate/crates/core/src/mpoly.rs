//! Polynomials in `x, y` whose coefficients are polynomials over `Q` in a
//! fixed number of parameters.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{format_terms, Poly2};
use crate::monomial::Monomial;

/// Exponents of one term: `x`, `y`, then each parameter. Ordered with `x`
/// first, then `y`, so the last key is the lex-largest `x, y` monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub x: u32,
    pub y: u32,
    pub c: Vec<u32>,
}

impl Key {
    fn xy(&self) -> Monomial {
        Monomial::new(self.x, self.y)
    }

    fn mul(&self, other: &Key) -> Key {
        Key { x: self.x + other.x, y: self.y + other.y, c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nparams: usize,
    terms: BTreeMap<Key, BigRational>,
}

impl MPoly {
    pub fn zero(nparams: usize) -> Self {
        MPoly { nparams, terms: BTreeMap::new() }
    }

    pub fn monomial(nparams: usize, x: u32, y: u32) -> Self {
        let mut p = MPoly::zero(nparams);
        p.add_term(Key { x, y, c: vec![0; nparams] }, BigRational::one());
        p
    }

    /// `c_k x^x y^y`.
    pub fn param_times(nparams: usize, k: usize, x: u32, y: u32) -> Self {
        let mut c = vec![0; nparams];
        c[k] = 1;
        let mut p = MPoly::zero(nparams);
        p.add_term(Key { x, y, c }, BigRational::one());
        p
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: Key, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nparams);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Multiply by `x^dx y^dy`.
    pub fn shift(&self, dx: u32, dy: u32) -> MPoly {
        MPoly {
            nparams: self.nparams,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (Key { x: k.x + dx, y: k.y + dy, c: k.c.clone() }, c.clone()))
                .collect(),
        }
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.y).max()
    }

    /// Exact quotient by `g`, which must be monic in `y`: its `y`-leading part
    /// is exactly `y^e`.
    pub fn div_monic_y(&self, g: &MPoly) -> Result<MPoly> {
        let e = g.y_degree().ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let top: Vec<(&Key, &BigRational)> = g.terms.iter().filter(|(k, _)| k.y == e).collect();
        if top.len() != 1 || top[0].0.x != 0 || top[0].0.c.iter().any(|&a| a != 0) || !top[0].1.is_one() {
            return Err(Error::InexactDivision("divisor is not monic in y".into()));
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nparams);
        while let Some(d) = rem.y_degree().filter(|&d| d >= e) {
            let mut part = MPoly::zero(self.nparams);
            for (k, c) in rem.terms.iter().filter(|(k, _)| k.y == d) {
                part.add_term(Key { x: k.x, y: d - e, c: k.c.clone() }, c.clone());
            }
            rem = rem.sub(&part.mul(g));
            quot = quot.add(&part);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision(format!("nonzero remainder {}", rem.display(&|k| format!("c{k}")))))
        }
    }

    /// The lex-largest `x, y` monomial and its coefficient as a polynomial in
    /// the parameters.
    pub fn lex_leading(&self) -> Option<(Monomial, MPoly)> {
        let lead = self.terms.keys().next_back()?.xy();
        let mut coeff = MPoly::zero(self.nparams);
        for (k, c) in self.terms.iter().filter(|(k, _)| k.xy() == lead) {
            coeff.add_term(Key { x: 0, y: 0, c: k.c.clone() }, c.clone());
        }
        Some((lead, coeff))
    }

    /// Whether the polynomial is the constant `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(k, c)| k.x == 0 && k.y == 0 && k.c.iter().all(|&a| a == 0) && c.is_one())
    }

    /// The distinct `x, y` monomials occurring.
    pub fn support(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self.terms.keys().map(Key::xy).collect();
        out.dedup();
        out
    }

    /// Substitute values for every parameter.
    pub fn specialize(&self, values: &[BigRational]) -> Poly2 {
        assert_eq!(values.len(), self.nparams);
        let mut out = Poly2::zero();
        for (k, c) in &self.terms {
            let mut v = c.clone();
            for (val, &e) in values.iter().zip(&k.c) {
                for _ in 0..e {
                    v *= val;
                }
            }
            out.add_term(v, k.xy());
        }
        out
    }

    /// Human-readable form, lex-largest `x, y` monomial first.
    pub fn display(&self, name: &dyn Fn(usize) -> String) -> String {
        let terms = self.terms.iter().rev().map(|(k, c)| {
            let mut parts: Vec<String> = Vec::new();
            for (j, &e) in k.c.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(name(j)),
                    _ => parts.push(format!("{}^{e}", name(j))),
                }
            }
            if !k.xy().is_one() {
                parts.push(k.xy().to_string());
            }
            let m = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
            (c.clone(), m)
        });
        format_terms(terms)
    }
}
