//! A family of ideals over affine `d`-space, `d = |T(L_h)|`, whose fibre at
//! the origin is the lex-most ideal and whose fibres all have Hilbert
//! function `h` and lex initial ideal `L_h`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrows::{all_arrows, Arrow, ArrowClass};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groebner::{self, MonomialOrder, Poly2};
use crate::monomial::Monomial;
use crate::mpoly::MPoly;
use crate::poset;
use crate::staircase::{HilbertFunction, MonomialIdeal};

#[derive(Clone, Debug)]
pub struct ChartFamily {
    grading: Grading,
    hilbert: HilbertFunction,
    lexmost: MonomialIdeal,
    params: Vec<Arrow>,
    /// `g_1, ..., g_n` at indices `0..n`.
    g: Vec<MPoly>,
    /// `f_0, ..., f_n`.
    f: Vec<MPoly>,
    /// `epsilon(i, u, v)` for each nonpositive significant arrow.
    epsilon: Vec<(Arrow, usize)>,
}

/// Build the chart around `L_h`.
pub fn build_chart(h: &HilbertFunction, g: &Grading) -> Result<ChartFamily> {
    let lexmost = poset::lex_most(h, g)?;
    build_chart_at(&lexmost, g)
}

/// Build the chart around an ideal known to be lex-most for its Hilbert function.
pub fn build_chart_at(lexmost: &MonomialIdeal, g: &Grading) -> Result<ChartFamily> {
    let arrows = all_arrows(lexmost, g)?;
    if !arrows.positive_significant().is_empty() {
        return Err(Error::PreconditionViolated(format!("{lexmost} has positive significant arrows")));
    }
    let params = arrows.significant();
    let d = params.len();
    let n = lexmost.last();
    let (p, q) = (|j: usize| lexmost.p(j), |j: usize| lexmost.q(j));

    let mut gs = Vec::with_capacity(n);
    for i in 1..=n {
        let mut gi = MPoly::monomial(d, 0, q(i) - q(i - 1));
        for (k, a) in params.iter().enumerate() {
            if a.i == i && a.class == ArrowClass::NonnegSignificantNotPositive {
                gi = gi.add(&MPoly::param_times(d, k, 0, a.v - q(i - 1)));
            }
        }
        gs.push(gi);
    }

    let mut f = vec![MPoly::zero(d); n + 1];
    f[n] = gs.iter().fold(MPoly::monomial(d, 0, 0), |acc, gi| acc.mul(gi));
    let mut epsilon = Vec::new();
    for i in (0..n).rev() {
        let mut numerator = f[i + 1].shift(p(i) - p(i + 1), 0);
        for (k, a) in params.iter().enumerate() {
            if a.i != i || a.class != ArrowClass::NonposSignificant {
                continue;
            }
            let w = Monomial::new(a.u, a.v - q(i) + q(i + 1));
            let eps = (0..=n)
                .rev()
                .find(|&j| lexmost.gens()[j].divides(w))
                .expect("a nonpositive significant arrow points into the ideal");
            epsilon.push((*a, eps));
            let term = MPoly::param_times(d, k, w.x - p(eps), w.y - q(eps));
            numerator = numerator.add(&term.mul(&f[eps]));
        }
        f[i] = numerator.div_monic_y(&gs[i])?;
    }
    epsilon.sort();
    Ok(ChartFamily {
        grading: g.clone(),
        hilbert: lexmost.hilbert_function(g)?,
        lexmost: lexmost.clone(),
        params,
        g: gs,
        f,
        epsilon,
    })
}

/// Outcome of [`ChartFamily::verify`]: symbolic checks plus per-sample checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartReport {
    pub seed: u64,
    pub samples: usize,
    pub d: usize,
    pub failures: Vec<String>,
}

impl ChartReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl ChartFamily {
    pub fn lexmost(&self) -> &MonomialIdeal {
        &self.lexmost
    }

    pub fn hilbert(&self) -> &HilbertFunction {
        &self.hilbert
    }

    /// The parameters `c^i_{u,v}`, one per significant arrow of `L_h`.
    pub fn params(&self) -> &[Arrow] {
        &self.params
    }

    pub fn d(&self) -> usize {
        self.params.len()
    }

    pub fn g_polys(&self) -> &[MPoly] {
        &self.g
    }

    pub fn f_polys(&self) -> &[MPoly] {
        &self.f
    }

    pub fn epsilon(&self) -> &[(Arrow, usize)] {
        &self.epsilon
    }

    pub fn param_name(&self, k: usize) -> String {
        let a = self.params[k];
        format!("c[{}][{}][{}]", a.i, a.u, a.v)
    }

    pub fn display_f(&self, i: usize) -> String {
        self.f[i].display(&|k| self.param_name(k))
    }

    pub fn display_g(&self, i: usize) -> String {
        self.g[i - 1].display(&|k| self.param_name(k))
    }

    /// The generators at a point of the base.
    pub fn specialize(&self, values: &[BigRational]) -> Vec<Poly2> {
        self.f.iter().map(|f| f.specialize(values)).collect()
    }

    /// Integer values in `[-10, 10]`.
    pub fn random_assignment<R: Rng>(&self, rng: &mut R) -> Vec<BigRational> {
        (0..self.d()).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-10..=10)))).collect()
    }

    /// Checks that hold over the whole parameter ring.
    pub fn symbolic_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let homogeneous = |p: &MPoly| {
            let degs: Vec<_> = p.support().iter().map(|&w| self.grading.degree(w)).collect();
            degs.windows(2).all(|d| d[0] == d[1])
        };
        for (i, f) in self.f.iter().enumerate() {
            match f.lex_leading() {
                Some((lead, coeff)) if lead == self.lexmost.gens()[i] && coeff.is_one() => {}
                _ => out.push(format!("in_lex(f_{i}) is not {}", self.lexmost.gens()[i])),
            }
            if !homogeneous(f) {
                out.push(format!("f_{i} is not homogeneous"));
            }
            let mut rest = f.clone();
            for k in 0..i {
                match rest.div_monic_y(&self.g[k]) {
                    Ok(q) => rest = q,
                    Err(_) => {
                        out.push(format!("g_1 * ... * g_{i} does not divide f_{i}"));
                        break;
                    }
                }
            }
        }
        for (k, g) in self.g.iter().enumerate() {
            if !homogeneous(g) {
                out.push(format!("g_{} is not homogeneous", k + 1));
            }
        }
        out
    }

    /// Checks at one point of the base; returns the reduced lex Gröbner basis
    /// for comparing points.
    pub fn check_point(&self, values: &[BigRational]) -> (Vec<Poly2>, Vec<String>) {
        let mut out = Vec::new();
        let gens = self.specialize(values);
        let order = MonomialOrder::Lex;
        for i in 1..gens.len() {
            let s = groebner::s_polynomial(&gens[i - 1], &gens[i], order);
            if !groebner::reduce(&s, &gens, order).is_zero() {
                out.push(format!("S(f_{}, f_{i}) does not reduce to zero", i - 1));
            }
        }
        let gb = groebner::buchberger(&gens, order);
        let initial = groebner::initial_ideal(&gb, order);
        if initial != self.lexmost {
            out.push(format!("lex initial ideal is {initial}, expected {}", self.lexmost));
        }
        match initial.hilbert_function(&self.grading) {
            Ok(h) if h == self.hilbert => {}
            _ => out.push("Hilbert function differs from h".to_string()),
        }
        (gb, out)
    }

    /// Symbolic checks, the origin, and `samples` seeded random points, which
    /// must also give pairwise distinct reduced Gröbner bases.
    pub fn verify(&self, samples: usize, seed: u64) -> ChartReport {
        let mut failures = self.symbolic_failures();
        let zero = vec![BigRational::zero(); self.d()];
        let origin: Vec<Monomial> =
            self.specialize(&zero).iter().filter_map(|p| p.leading_monomial(MonomialOrder::Lex)).collect();
        if origin != self.lexmost.gens() || self.specialize(&zero).iter().any(|p| p.len() != 1) {
            failures.push("the origin does not give the monomial generators".to_string());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen: Vec<(Vec<BigRational>, Vec<Poly2>)> = Vec::new();
        for _ in 0..samples {
            let values = self.random_assignment(&mut rng);
            let (gb, errs) = self.check_point(&values);
            let tag = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            failures.extend(errs.into_iter().map(|e| format!("[{tag}] {e}")));
            for (other, other_gb) in &seen {
                if *other != values && *other_gb == gb {
                    failures.push(format!("[{tag}] same Gröbner basis as another point"));
                }
            }
            seen.push((values, gb));
        }
        ChartReport { seed, samples, d: self.d(), failures }
    }

    pub fn to_json(&self) -> ChartJson {
        ChartJson {
            lexmost: self.lexmost.clone(),
            d: self.d(),
            params: self
                .params
                .iter()
                .map(|a| (self.param_name_of(a), a.triple()))
                .map(|(name, arrow)| ParamJson { name, arrow })
                .collect(),
            g: (1..=self.g.len()).map(|i| self.display_g(i)).collect(),
            f: (0..self.f.len()).map(|i| self.display_f(i)).collect(),
            epsilon: self.epsilon.iter().map(|(a, e)| (a.triple(), *e)).collect(),
        }
    }

    fn param_name_of(&self, a: &Arrow) -> String {
        format!("c[{}][{}][{}]", a.i, a.u, a.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamJson {
    pub name: String,
    pub arrow: (usize, u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartJson {
    pub lexmost: MonomialIdeal,
    pub d: usize,
    pub params: Vec<ParamJson>,
    pub g: Vec<String>,
    pub f: Vec<String>,
    pub epsilon: Vec<((usize, u32, u32), usize)>,
}
