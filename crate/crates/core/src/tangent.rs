//! Tangent spaces of the multigraded Hilbert scheme at monomial and edge
//! ideals, as kernels of explicit sparse linear systems in the arrow
//! variables `c^i_{u,v}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arrows::{all_arrows, Arrow, ArrowClass};
use crate::edge::EdgeIdeal;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::groebner::{self, MonomialOrder, Poly2};
use crate::linalg::{self, IntPoly, SparseRow};
use crate::monomial::{self, Monomial};
use crate::staircase::MonomialIdeal;

/// How `t` is treated when computing ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TMode {
    Numeric(BigRational),
    Symbolic,
}

impl TMode {
    pub fn int(t: i64) -> Self {
        TMode::Numeric(BigRational::from_integer(BigInt::from(t)))
    }
}

impl fmt::Display for TMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TMode::Numeric(t) => write!(f, "{t}"),
            TMode::Symbolic => write!(f, "t"),
        }
    }
}

pub type Label = (usize, u32, u32);

/// The equation `F(i, u, v)`: variable index to coefficient in `Z[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub label: Label,
    pub terms: BTreeMap<usize, IntPoly>,
}

/// The linear system cutting out the tangent space at `I_alpha(t)`, or at the
/// monomial ideal itself when `alpha` is absent.
#[derive(Clone, Debug)]
pub struct TangentSystem {
    base: MonomialIdeal,
    grading: Grading,
    edge: Option<EdgeIdeal>,
    mode: TMode,
    variables: Vec<Arrow>,
    index: HashMap<Label, usize>,
    equations: Vec<Equation>,
}

/// Build every `F(i, u, v)` with `1 <= i <= n` and `x^u y^v` standard.
pub fn build_system(m: &MonomialIdeal, g: &Grading, alpha: Option<Label>, mode: TMode) -> Result<TangentSystem> {
    let edge = alpha.map(|a| EdgeIdeal::new(m, g, a, BigRational::one())).transpose()?;
    let variables = all_arrows(m, g)?.all().to_vec();
    let index = variables.iter().enumerate().map(|(k, a)| (a.triple(), k)).collect();
    let mut sys =
        TangentSystem { base: m.clone(), grading: g.clone(), edge, mode, variables, index, equations: vec![] };
    let standard = m.standard_monomials()?;
    let mut equations = Vec::with_capacity(m.last() * standard.len());
    for i in 1..=m.last() {
        for w in &standard {
            equations.push(sys.equation(i, w.x, w.y));
        }
    }
    sys.equations = equations;
    Ok(sys)
}

/// `b_{u,v}`: the number of monomials other than `x^u y^v` whose `xel` normal
/// form modulo `I_alpha(t)` is a power of `t` times `x^u y^v`.
pub fn b_value(edge: &EdgeIdeal, u: u32, v: u32) -> u32 {
    let target = Monomial::new(u, v);
    let mut count = 0;
    for kappa in 1.. {
        let Some(w) = monomial::from_signed(u as i64 - kappa * edge.ell(), v as i64 - kappa * edge.m()) else {
            break;
        };
        if edge.xel_normal_form(w) == Some((kappa as u32, target)) {
            count += 1;
        }
    }
    count
}

/// The largest `b` such that for every `0 < kappa <= b` the monomial
/// `x^{u - kappa l} y^{v - kappa m}` is a multiple of a moved generator
/// (index `>= k`) and of no fixed one. Plain membership in the base ideal
/// overcounts once the chain meets a fixed generator.
pub fn b_value_membership(edge: &EdgeIdeal, u: u32, v: u32) -> u32 {
    let gens = edge.base().gens();
    let k = edge.k();
    let moved = |kappa: i64| match monomial::from_signed(u as i64 - kappa * edge.ell(), v as i64 - kappa * edge.m()) {
        None => false,
        Some(w) => gens[k..].iter().any(|g| g.divides(w)) && !gens[..k].iter().any(|g| g.divides(w)),
    };
    let mut b = 0;
    while moved(b as i64 + 1) {
        b += 1;
    }
    b
}

impl TangentSystem {
    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn alpha(&self) -> Option<Arrow> {
        self.edge.as_ref().map(EdgeIdeal::alpha)
    }

    pub fn edge(&self) -> Option<&EdgeIdeal> {
        self.edge.as_ref()
    }

    pub fn mode(&self) -> &TMode {
        &self.mode
    }

    /// The same equations with `t` treated differently.
    pub fn with_mode(&self, mode: TMode) -> Self {
        TangentSystem { mode, ..self.clone() }
    }

    pub fn variables(&self) -> &[Arrow] {
        &self.variables
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn variable_index(&self, label: Label) -> Option<usize> {
        self.index.get(&label).copied()
    }

    /// `F(i, u, v)`, or `None` if the label is not a row of this system.
    pub fn get(&self, label: Label) -> Option<&Equation> {
        self.equations.iter().find(|e| e.label == label)
    }

    fn add(&self, terms: &mut BTreeMap<usize, IntPoly>, j: usize, r: i64, s: i64, coeff: IntPoly) {
        if r < 0 || s < 0 {
            return;
        }
        if let Some(k) = self.variable_index((j, r as u32, s as u32)) {
            let e = terms.entry(k).or_insert_with(IntPoly::zero);
            *e = e.add(&coeff);
            if e.is_zero() {
                terms.remove(&k);
            }
        }
    }

    fn equation(&self, i: usize, u: u32, v: u32) -> Equation {
        let b = &self.base;
        let (p, q) = (|j: usize| b.p(j) as i64, |j: usize| b.q(j) as i64);
        let (u, v) = (u as i64, v as i64);
        let mut terms = BTreeMap::new();
        match &self.edge {
            None => {
                self.add(&mut terms, i - 1, u, v + q(i - 1) - q(i), IntPoly::constant(1));
                self.add(&mut terms, i, u - p(i - 1) + p(i), v, IntPoly::constant(-1));
            }
            Some(e) => {
                let (ell, m, k, sigma) = (e.ell(), e.m(), e.k(), e.sigma());
                let bound = b_value(e, u as u32, v as u32) as i64;
                for mu in 0..=bound {
                    let tm = mu as usize;
                    self.add(&mut terms, i - 1, u - mu * ell, v + q(i - 1) - q(i) - mu * m, IntPoly::monomial(1, tm));
                    self.add(&mut terms, i, u - p(i - 1) + p(i) - mu * ell, v - mu * m, IntPoly::monomial(-1, tm));
                    if i == k {
                        self.add(
                            &mut terms,
                            sigma,
                            u - p(k - 1) + p(sigma) - (mu + 1) * ell,
                            v - q(k) + q(sigma) - (mu + 1) * m,
                            IntPoly::monomial(-1, tm + 1),
                        );
                    }
                }
            }
        }
        Equation { label: (i, u as u32, v as u32), terms }
    }

    /// Whether `F(i, u, v)` belongs to the reduced system: its label degree
    /// matches the syzygy degree `deg(x^{p_{i-1}} y^{q_i})` and either
    /// `u >= p_{i-1}` or `v >= q_i - q_{i-1}`.
    pub fn in_reduced_system(&self, label: Label) -> bool {
        let (i, u, v) = label;
        let b = &self.base;
        self.grading.degree_of(u, v) == self.grading.degree_of(b.p(i - 1), b.q(i))
            && (u >= b.p(i - 1) || v >= b.q(i) - b.q(i - 1))
    }

    /// The subsystem of rows kept by [`Self::in_reduced_system`].
    pub fn reduced_system(&self) -> TangentSystem {
        let equations = self.equations.iter().filter(|e| self.in_reduced_system(e.label)).cloned().collect();
        TangentSystem { equations, ..self.clone() }
    }

    fn numeric_rows(&self, t: &BigRational) -> Vec<SparseRow<BigRational>> {
        self.equations
            .iter()
            .map(|e| e.terms.iter().map(|(&k, c)| (k, c.eval(t))).filter(|(_, c)| !c.is_zero()).collect())
            .collect()
    }

    /// Exact rank for the system's mode; in symbolic mode this is the rank
    /// over `Q(t)`.
    pub fn rank(&self) -> usize {
        match &self.mode {
            TMode::Numeric(t) => linalg::rational_rank_fraction_free(&self.numeric_rows(t)),
            TMode::Symbolic => {
                let rows = self.equations.iter().map(|e| e.terms.clone()).collect();
                linalg::bareiss_rank::<IntPoly>(rows)
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.variables.len() - self.rank()
    }

    pub fn significant_count(&self) -> usize {
        self.variables.iter().filter(|a| a.class.is_significant()).count()
    }

    /// The relation among equations attached to `(i, u, v)` with `x^u y^v`
    /// standard, `u < p_{i-1}` and `v < q_i - q_{i-1}`.
    pub fn relation(&self, i: usize, u: u32, v: u32) -> Result<Relation> {
        let e = self.edge.as_ref().ok_or_else(|| Error::PreconditionViolated("relations need an edge ideal".into()))?;
        let b = &self.base;
        if i == 0 || i > b.last() || b.contains(u, v) || u >= b.p(i - 1) || v >= b.q(i) - b.q(i - 1) {
            return Err(Error::PreconditionViolated(format!(
                "relation needs x^u y^v standard, u < p_(i-1), v < q_i - q_(i-1); got (i,u,v) = ({i},{u},{v})"
            )));
        }
        let (p, q) = (|j: usize| b.p(j) as i64, |j: usize| b.q(j) as i64);
        let (u, v, sigma) = (u as i64, v as i64, e.sigma());
        let mut summands = Vec::new();
        for j in i..=sigma {
            summands.push((0, (j, u - p(i - 1) + p(j - 1), v - q(i) + q(j))));
        }
        for lambda in 0.. {
            let mut any = false;
            for j in sigma + 1..=b.last() {
                let r = u - p(i - 1) + p(j - 1) - lambda * e.ell();
                if r >= 0 {
                    any = true;
                    summands.push((lambda as usize, (j, r, v - q(i) + q(j) - lambda * e.m())));
                }
            }
            if !any {
                break;
            }
        }
        let mut residual: BTreeMap<usize, IntPoly> = BTreeMap::new();
        let mut used = Vec::new();
        for (power, (j, r, s)) in summands {
            if r < 0 || s < 0 || b.contains(r as u32, s as u32) {
                continue;
            }
            let label = (j, r as u32, s as u32);
            used.push((power, label));
            for (&k, c) in &self.equation(j, label.1, label.2).terms {
                let entry = residual.entry(k).or_insert_with(IntPoly::zero);
                *entry = entry.add(&c.shift(power));
            }
        }
        residual.retain(|_, c| !c.is_zero());
        Ok(Relation { label: (i, u as u32, v as u32), summands: used, residual })
    }

    /// All labels at which a relation applies.
    pub fn relation_labels(&self) -> Vec<Label> {
        let b = &self.base;
        let standard = b.standard_monomials().unwrap_or_default();
        (1..=b.last())
            .flat_map(|i| standard.iter().map(move |w| (i, w.x, w.y)))
            .filter(|&(i, u, v)| u < b.p(i - 1) && v < b.q(i) - b.q(i - 1))
            .collect()
    }

    /// Order key on variables: larger `r - p_j` first, then by class with the
    /// index tie-breaks required for each class.
    fn variable_key(&self, a: &Arrow) -> (i64, u8, i64, u32) {
        let weight = a.u as i64 - self.base.p(a.i) as i64;
        match a.class {
            ArrowClass::PositiveSignificant | ArrowClass::NonnegSignificantNotPositive => (weight, 2, a.i as i64, a.v),
            ArrowClass::Insignificant if a.u >= self.base.p(a.i) => (weight, 2, a.i as i64, a.v),
            ArrowClass::UtterlyInsignificant => (weight, 0, -(a.i as i64), a.v),
            _ => (weight, 1, -(a.i as i64), a.v),
        }
    }

    /// The largest variable of an equation under [`Self::variable_key`].
    pub fn leading_variable(&self, eq: &Equation) -> Option<Arrow> {
        eq.terms.keys().map(|&k| self.variables[k]).max_by_key(|a| self.variable_key(a))
    }

    /// The equation whose leading variable should be the insignificant arrow `a`.
    pub fn head_equation(&self, a: &Arrow) -> Label {
        let b = &self.base;
        if a.u >= b.p(a.i) {
            (a.i, a.u + b.p(a.i - 1) - b.p(a.i), a.v)
        } else {
            (a.i + 1, a.u, a.v + b.q(a.i + 1) - b.q(a.i))
        }
    }

    /// Check that each insignificant arrow leads a distinct reduced-system
    /// equation; returns a description of the first failure.
    pub fn verify_leading_variables(&self) -> std::result::Result<(), String> {
        let mut seen = BTreeSet::new();
        for a in self.variables.iter().filter(|a| !a.class.is_significant()) {
            let label = self.head_equation(a);
            if !self.in_reduced_system(label) {
                return Err(format!("F{label:?} assigned to {a} is not in the reduced system"));
            }
            let eq = self.get(label).ok_or_else(|| format!("F{label:?} assigned to {a} does not exist"))?;
            if self.leading_variable(eq) != Some(*a) {
                return Err(format!("leading variable of F{label:?} is not {a}"));
            }
            if !seen.insert(label) {
                return Err(format!("F{label:?} is assigned twice"));
            }
        }
        Ok(())
    }

    pub fn equation_string(&self, eq: &Equation) -> String {
        let (i, u, v) = eq.label;
        // component i-1 first, then i, then the rest; lower powers of t first
        let group = |j: usize| {
            if j + 1 == i {
                0
            } else if j == i {
                1
            } else {
                2
            }
        };
        let mut order: Vec<(usize, usize, usize, &BigInt)> = Vec::new();
        for (&k, c) in &eq.terms {
            for (power, coeff) in c.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                order.push((group(self.variables[k].i), power, k, coeff));
            }
        }
        order.sort_by_key(|&(g, p, k, _)| (g, p, k));
        let mut terms: Vec<(BigRational, String)> = Vec::new();
        for (_, power, k, coeff) in order {
            let a = self.variables[k];
            let var = format!("c{}_{},{}", a.i, a.u, a.v);
            let name = match power {
                0 => var,
                1 => format!("t*{var}"),
                _ => format!("t^{power}*{var}"),
            };
            terms.push((BigRational::from_integer(coeff.clone()), name));
        }
        format!("F({i},{u},{v}) = {}", groebner::format_terms(terms))
    }

    pub fn to_json(&self) -> SystemJson {
        SystemJson {
            variables: self.variables.iter().map(Arrow::triple).collect(),
            equations: self
                .equations
                .iter()
                .map(|e| EquationJson {
                    label: e.label,
                    terms: e
                        .terms
                        .iter()
                        .map(|(&k, c)| TermJson {
                            var: self.variables[k].triple(),
                            coeff_t_poly: c.to_i64_vec().expect("tangent coefficients are small"),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Rewrite a rendered equation `F(i,u,v) = ...` with its signed terms sorted,
/// so that two renderings of the same equation compare equal.
pub fn normalize_equation(s: &str) -> String {
    let (lhs, rhs) = s.split_once('=').map_or(("", s), |(a, b)| (a.trim(), b.trim()));
    let mut terms: Vec<String> = Vec::new();
    let mut sign = '+';
    for tok in rhs.split_whitespace() {
        match tok {
            "+" | "-" => sign = tok.chars().next().unwrap(),
            "0" => {}
            _ => {
                let (sg, body) = match tok.strip_prefix('-') {
                    Some(b) => (if sign == '-' { '+' } else { '-' }, b),
                    None => (sign, tok),
                };
                terms.push(format!("{sg}{body}"));
            }
        }
    }
    terms.sort();
    format!("{lhs} = {}", if terms.is_empty() { "0".to_string() } else { terms.join(" ") })
}

/// JSON form of a tangent system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub variables: Vec<Label>,
    pub equations: Vec<EquationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    pub label: Label,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub var: Label,
    pub coeff_t_poly: Vec<i64>,
}

/// A relation instance: the summands `t^power F(label)` that survive the zero
/// convention, and what is left after adding them up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: Label,
    pub summands: Vec<(usize, Label)>,
    pub residual: BTreeMap<usize, IntPoly>,
}

impl Relation {
    pub fn is_zero(&self) -> bool {
        self.residual.is_empty()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|&(power, (j, r, s))| match power {
                0 => format!("F({j},{r},{s})"),
                1 => format!("t*F({j},{r},{s})"),
                _ => format!("t^{power}*F({j},{r},{s})"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `dim` of the tangent space for one treatment of `t`.
pub fn tangent_dimension(m: &MonomialIdeal, g: &Grading, alpha: Option<Label>, mode: TMode) -> Result<usize> {
    Ok(build_system(m, g, alpha, mode)?.dimension())
}

/// Generic dimension over `Q(t)` together with dimensions at specific values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSweep {
    pub generic: usize,
    pub specialized: Vec<(BigRational, usize)>,
}

impl TSweep {
    pub fn is_constant(&self) -> bool {
        self.specialized.iter().all(|(_, d)| *d == self.generic)
    }
}

/// Symbolic dimension plus separate specializations at each value of `ts`.
pub fn t_sweep(m: &MonomialIdeal, g: &Grading, alpha: Option<Label>, ts: &[BigRational]) -> Result<TSweep> {
    let sys = build_system(m, g, alpha, TMode::Symbolic)?;
    let generic = sys.dimension();
    let specialized = ts.iter().map(|t| (t.clone(), sys.with_mode(TMode::Numeric(t.clone())).dimension())).collect();
    Ok(TSweep { generic, specialized })
}

/// The values `0, 1, -1, 2` used for specialization checks.
pub fn default_sweep_values() -> Vec<BigRational> {
    [0, 1, -1, 2].iter().map(|&t| BigRational::from_integer(BigInt::from(t))).collect()
}

/// Tangent dimension computed from scratch: degree-zero maps from the
/// generators to the quotient, constrained by syzygies obtained from S-pair
/// divisions, with every image reduced to normal form by the Gröbner engine.
pub fn oracle_dimension(m: &MonomialIdeal, g: &Grading, alpha: Option<Label>, t: &BigRational) -> Result<usize> {
    let gens: Vec<Poly2> = match alpha {
        Some(a) => EdgeIdeal::new(m, g, a, t.clone())?.polys(),
        None => m.gens().iter().map(|&w| Poly2::monomial(w)).collect(),
    };
    let order = MonomialOrder::Xel;
    let standard = m.standard_monomials()?;
    // variables: (generator j, standard monomial w) of equal degree
    let mut vars = Vec::new();
    for (j, gen) in m.gens().iter().enumerate() {
        for &w in &standard {
            if g.degree(w) == g.degree(*gen) {
                vars.push((j, w));
            }
        }
    }
    // syzygies from every S-pair: lcm/lt_a e_a - lcm/lt_b e_b - sum quotients
    let mut syzygies: Vec<Vec<Poly2>> = Vec::new();
    for b in 0..gens.len() {
        for a in 0..b {
            let (la, lb) = (gens[a].leading_monomial(order).unwrap(), gens[b].leading_monomial(order).unwrap());
            let l = la.lcm(lb);
            let s = groebner::s_polynomial(&gens[a], &gens[b], order);
            let (quotients, remainder) = groebner::divide(&s, &gens, order);
            if !remainder.is_zero() {
                return Err(Error::PreconditionViolated("generators are not a Gröbner basis".into()));
            }
            let mut row: Vec<Poly2> = quotients.iter().map(|q| q.scale(&-BigRational::one(), Monomial::ONE)).collect();
            row[a] = row[a].add(&Poly2::monomial(l.checked_div(la).unwrap()));
            row[b] = row[b].sub(&Poly2::monomial(l.checked_div(lb).unwrap()));
            syzygies.push(row);
        }
    }
    let mut rows: Vec<SparseRow<BigRational>> = Vec::new();
    for syz in &syzygies {
        let mut by_monomial: BTreeMap<Monomial, SparseRow<BigRational>> = BTreeMap::new();
        for (k, &(j, w)) in vars.iter().enumerate() {
            if syz[j].is_zero() {
                continue;
            }
            let image = groebner::reduce(&syz[j].mul(&Poly2::monomial(w)), &gens, order);
            for (mono, c) in image.terms() {
                by_monomial.entry(mono).or_default().insert(k, c.clone());
            }
        }
        rows.extend(by_monomial.into_values());
    }
    Ok(vars.len() - linalg::rational_rank_gauss(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrows::positive_significant;

    fn ideal(gens: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::from_gens(gens.iter().map(|&g| g.into())).unwrap()
    }

    fn small() -> MonomialIdeal {
        ideal(&[(4, 0), (2, 1), (0, 2)])
    }

    fn large() -> MonomialIdeal {
        ideal(&[(7, 0), (6, 1), (5, 2), (4, 3), (2, 4), (0, 6)])
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn show(sys: &TangentSystem, label: Label) -> String {
        sys.equation_string(sys.get(label).unwrap())
    }

    #[test]
    fn normalized_equations_ignore_term_order() {
        let a = normalize_equation("F(1,2,0) = -c1_0,0 - t*c0_1,0");
        assert_eq!(a, normalize_equation("F(1,2,0) = -t*c0_1,0 - c1_0,0"));
        assert_ne!(a, normalize_equation("F(1,2,0) = -t*c0_1,0 + c1_0,0"));
        assert_eq!(normalize_equation("F(1,0,0) = 0"), "F(1,0,0) = 0");
    }

    #[test]
    fn equations_of_small_example() {
        let sys = build_system(&small(), &Grading::trivial(), Some((1, 3, 0)), TMode::Symbolic).unwrap();
        assert_eq!(sys.equations().len(), 12);
        assert_eq!(show(&sys, (1, 1, 0)), "F(1,1,0) = -t*c0_0,0");
        assert_eq!(show(&sys, (1, 0, 0)), "F(1,0,0) = 0");
        assert_eq!(show(&sys, (2, 3, 0)), "F(2,3,0) = t*c1_2,0 + t^2*c1_1,1 - c2_1,0 - t*c2_0,1");
        assert_eq!(show(&sys, (1, 3, 0)), "F(1,3,0) = -c1_1,0 - t*c1_0,1");
        assert_eq!(show(&sys, (2, 1, 1)), "F(2,1,1) = c1_1,0 + t*c1_0,1");
    }

    #[test]
    fn equations_of_large_example() {
        let sys = build_system(&large(), &Grading::trivial(), Some((4, 3, 2)), TMode::Symbolic).unwrap();
        assert_eq!(sys.edge().unwrap().sigma(), 2);
        assert_eq!(sys.equations().len(), 130);
        assert_eq!(show(&sys, (1, 5, 0)), "F(1,5,0) = -c1_4,0");
        assert_eq!(show(&sys, (3, 3, 2)), "F(3,3,2) = c2_3,1 + t*c2_2,3 + t^2*c2_1,5 - c3_2,2 - t*c3_1,4");
        assert_eq!(show(&sys, (4, 2, 3)), "F(4,2,3) = c3_2,2 - c4_0,3 - t*c2_2,3");
        assert_eq!(show(&sys, (4, 1, 5)), "F(4,1,5) = c3_1,4 - t*c2_1,5");
    }

    #[test]
    fn b_values_match_normal_forms_in_a_box() {
        // brute force: reduce every monomial in a box at t = 2 and read kappa off the coefficient
        let g = Grading::trivial();
        for (m, alpha) in [(small(), (1, 3, 0)), (large(), (4, 3, 2))] {
            let e = EdgeIdeal::new(&m, &g, alpha, q(2)).unwrap();
            let gens = e.polys();
            let mut counts: BTreeMap<Monomial, u32> = BTreeMap::new();
            for x in 0..12 {
                for y in 0..12 {
                    let nf = groebner::reduce(&Poly2::monomial(Monomial::new(x, y)), &gens, MonomialOrder::Xel);
                    if nf.len() == 1 {
                        let (w, _) = nf.terms().next().unwrap();
                        *counts.entry(w).or_default() += 1;
                    }
                }
            }
            for w in m.standard_monomials().unwrap() {
                assert_eq!(b_value(&e, w.x, w.y) + 1, counts[&w], "{w}");
                assert_eq!(b_value(&e, w.x, w.y), b_value_membership(&e, w.x, w.y), "{w} membership");
            }
        }
        let e = EdgeIdeal::new(&small(), &g, (1, 3, 0), q(1)).unwrap();
        assert_eq!(b_value(&e, 3, 0), 3);
        assert_eq!(b_value(&e, 0, 0), 0);
    }

    #[test]
    fn reduced_system_of_small_example() {
        let sys = build_system(&small(), &Grading::trivial(), Some((1, 3, 0)), TMode::Symbolic).unwrap();
        let red = sys.reduced_system();
        let labels: BTreeSet<Label> = red.equations().iter().map(|e| e.label).collect();
        let expect: BTreeSet<Label> =
            [(1, 0, 1), (1, 1, 1), (2, 2, 0), (2, 3, 0), (2, 0, 1), (2, 1, 1)].into_iter().collect();
        assert_eq!(labels, expect);
        assert_eq!(red.rank(), sys.rank());
        assert_eq!(sys.dimension(), 12);
        assert!(sys.verify_leading_variables().is_ok());
    }

    #[test]
    fn relations_of_worked_examples() {
        let sys = build_system(&small(), &Grading::trivial(), Some((1, 3, 0)), TMode::Symbolic).unwrap();
        let rels: Vec<String> = [(1, 1, 0), (1, 2, 0), (1, 3, 0)]
            .iter()
            .map(|&(i, u, v)| {
                let r = sys.relation(i, u, v).unwrap();
                assert!(r.is_zero());
                r.to_string()
            })
            .collect();
        assert_eq!(rels, ["F(1,1,0) + t*F(1,0,1)", "F(1,2,0) + F(2,0,1) + t*F(1,1,1)", "F(1,3,0) + F(2,1,1)"]);
        let sys = build_system(&large(), &Grading::trivial(), Some((4, 3, 2)), TMode::Symbolic).unwrap();
        let r = sys.relation(1, 5, 0).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.to_string(), "F(1,5,0) + F(2,4,1) + F(3,3,2) + F(4,2,3) + F(5,0,5) + t*F(4,1,5)");
        assert!(matches!(sys.relation(1, 7, 0), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn monomial_point_dimensions() {
        let g = Grading::trivial();
        assert_eq!(tangent_dimension(&small(), &g, None, TMode::int(0)).unwrap(), 12);
        assert_eq!(oracle_dimension(&small(), &g, None, &q(0)).unwrap(), 12);
        let maximal = ideal(&[(1, 0), (0, 1)]);
        assert_eq!(tangent_dimension(&maximal, &g, None, TMode::int(0)).unwrap(), 2);
        let square = ideal(&[(2, 0), (1, 1), (0, 2)]);
        assert_eq!(oracle_dimension(&square, &g, None, &q(0)).unwrap(), 6);
        let positive = Grading::integer(1, 1);
        let sys = build_system(&maximal, &positive, None, TMode::int(0)).unwrap();
        assert_eq!((sys.variables().len(), sys.rank(), sys.dimension()), (0, 0, 0));
        assert_eq!(oracle_dimension(&maximal, &positive, None, &q(0)).unwrap(), 0);
    }

    #[test]
    fn json_dump_round_trips() {
        let sys = build_system(&small(), &Grading::trivial(), Some((1, 3, 0)), TMode::Symbolic).unwrap();
        let json = serde_json::to_string(&sys.to_json()).unwrap();
        assert!(json.contains(r#"{"label":[1,1,0],"terms":[{"var":[0,0,0],"coeff_t_poly":[0,-1]}]}"#));
        let back: SystemJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sys.to_json());
    }

    /// Every (M, alpha) of colength at most 5 under several gradings.
    #[test]
    fn agreement_on_small_instances() {
        let gradings = [
            Grading::trivial(),
            Grading::integer(1, -1),
            Grading::cyclic(3, 1, 1).unwrap(),
            Grading::cyclic(2, 1, 0).unwrap(),
        ];
        for n in 1..=5 {
            for parts in crate::poset::partitions(n) {
                let m = MonomialIdeal::from_partition(&parts).unwrap();
                for g in &gradings {
                    let mono = build_system(&m, g, None, TMode::int(0)).unwrap();
                    let expect = mono.significant_count();
                    assert_eq!(mono.dimension(), expect);
                    assert!(mono.verify_leading_variables().is_ok());
                    for a in positive_significant(&m, g).unwrap() {
                        let sys = build_system(&m, g, Some(a.triple()), TMode::Symbolic).unwrap();
                        assert_eq!(sys.dimension(), expect, "{m} {a}");
                        assert_eq!(sys.reduced_system().rank(), sys.rank());
                        assert!(
                            sys.verify_leading_variables().is_ok(),
                            "{m} {a}: {:?}",
                            sys.verify_leading_variables()
                        );
                        for t in [q(1), q(-1)] {
                            assert_eq!(sys.with_mode(TMode::Numeric(t.clone())).dimension(), expect);
                            assert_eq!(oracle_dimension(&m, g, Some(a.triple()), &t).unwrap(), expect);
                        }
                        for label in sys.relation_labels() {
                            assert!(sys.relation(label.0, label.1, label.2).unwrap().is_zero(), "{m} {a} {label:?}");
                        }
                    }
                }
            }
        }
    }
}
