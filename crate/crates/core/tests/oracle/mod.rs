//! Brute-force reference implementations used to check the library. Nothing
//! here calls the library's algorithms; only `Grading::degree` is borrowed for
//! degrees of monomials.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hilb2_core::{DegreeValue, Grading, Monomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type Mono = (u32, u32);

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn deg(g: &Grading, w: Mono) -> DegreeValue {
    g.degree(Monomial::new(w.0, w.1))
}

// ---------- staircases ----------

/// Minimal generators `x^{p_0} y^{q_0}, ...` with `p` decreasing.
pub type Ideal = Vec<Mono>;

pub fn contains(m: &Ideal, w: Mono) -> bool {
    m.iter().any(|&(a, b)| a <= w.0 && b <= w.1)
}

/// Every finite-colength monomial ideal of colength `n`, built from weakly
/// decreasing column heights.
pub fn ideals_of_colength(n: u32) -> Vec<Ideal> {
    fn rec(left: u32, max: u32, cols: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cols.clone());
            return;
        }
        for c in (1..=left.min(max)).rev() {
            cols.push(c);
            rec(left - c, c, cols, out);
            cols.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, n, &mut Vec::new(), &mut all);
    all.iter().map(|cols| ideal_from_columns(cols)).collect()
}

/// `cols[u]` is the number of standard monomials `x^u y^v`.
pub fn ideal_from_columns(cols: &[u32]) -> Ideal {
    // x^u y^{cols[u]} is a corner when the column to its left is taller
    let mut gens = vec![(cols.len() as u32, 0)];
    for u in (0..cols.len()).rev() {
        if u == 0 || cols[u] < cols[u - 1] {
            gens.push((u as u32, cols[u]));
        }
    }
    gens
}

pub fn standard(m: &Ideal) -> Vec<Mono> {
    let (px, qy) = (m[0].0, m.last().unwrap().1);
    let mut out = Vec::new();
    for u in 0..px {
        for v in 0..qy {
            if !contains(m, (u, v)) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn hilbert(m: &Ideal, g: &Grading) -> BTreeMap<DegreeValue, usize> {
    let mut h = BTreeMap::new();
    for w in standard(m) {
        *h.entry(deg(g, w)).or_insert(0) += 1;
    }
    h
}

pub fn gens_of(m: &hilb2_core::MonomialIdeal) -> Ideal {
    m.gens().iter().map(|w| (w.x, w.y)).collect()
}

/// `a >= b` in the order comparing lex counting functions degree by degree.
pub fn order_geq(a: &Ideal, b: &Ideal, g: &Grading) -> bool {
    let (sa, sb) = (standard(a), standard(b));
    let count = |s: &[Mono], z: Mono| s.iter().filter(|&&w| deg(g, w) == deg(g, z) && w <= z).count();
    sa.iter().chain(&sb).all(|&z| count(&sa, z) >= count(&sb, z))
}

/// Cover pairs `(lower, upper)` from a `geq` matrix, by brute force.
pub fn covers(geq: &[Vec<bool>]) -> BTreeSet<(usize, usize)> {
    let n = geq.len();
    let gt = |a: usize, b: usize| a != b && geq[a][b];
    let mut out = BTreeSet::new();
    for hi in 0..n {
        for lo in 0..n {
            if gt(hi, lo) && !(0..n).any(|c| gt(hi, c) && gt(c, lo)) {
                out.insert((lo, hi));
            }
        }
    }
    out
}

// ---------- arrows ----------

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Positive,
    NonnegSignificant,
    NonposSignificant,
    Insignificant,
}

pub fn arrows(m: &Ideal, g: &Grading) -> BTreeMap<(usize, u32, u32), Kind> {
    let n = m.len() - 1;
    let mut out = BTreeMap::new();
    for (i, &(p, qq)) in m.iter().enumerate() {
        for w in standard(m) {
            if deg(g, w) != deg(g, (p, qq)) {
                continue;
            }
            let (u, v) = w;
            let nonneg_sig = u >= p && i > 0 && contains(m, (u + m[i - 1].0 - p, v));
            let nonpos_sig = v >= qq && i < n && contains(m, (u, v - qq + m[i + 1].1));
            let kind = if nonneg_sig && u > p {
                Kind::Positive
            } else if nonneg_sig {
                Kind::NonnegSignificant
            } else if nonpos_sig {
                Kind::NonposSignificant
            } else {
                Kind::Insignificant
            };
            out.insert((i, u, v), kind);
        }
    }
    out
}

pub fn significant_count(m: &Ideal, g: &Grading) -> usize {
    arrows(m, g).values().filter(|&&k| k != Kind::Insignificant).count()
}

pub fn positive(m: &Ideal, g: &Grading) -> Vec<(usize, u32, u32)> {
    arrows(m, g).into_iter().filter(|(_, k)| *k == Kind::Positive).map(|(a, _)| a).collect()
}

// ---------- polynomials ----------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// `x > y`.
    Lex,
    /// `y > x`.
    Xel,
}

fn key(o: Order, w: Mono) -> (u32, u32) {
    match o {
        Order::Lex => (w.0, w.1),
        Order::Xel => (w.1, w.0),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(pub BTreeMap<Mono, Q>);

impl Poly {
    pub fn mono(w: Mono) -> Self {
        Poly([(w, Q::one())].into_iter().collect())
    }

    pub fn binomial(a: Mono, c: Q, b: Mono) -> Self {
        let mut p = Poly::mono(a);
        p.add_term(-c, b);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, c: Q, w: Mono) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(w).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&w);
        }
    }

    /// `self += c * w * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Q, w: Mono) {
        for (&(a, b), d) in &other.0 {
            self.add_term(c * d, (a + w.0, b + w.1));
        }
    }

    pub fn lead(&self, o: Order) -> Option<(Mono, Q)> {
        self.0.iter().max_by_key(|(&w, _)| key(o, w)).map(|(&w, c)| (w, c.clone()))
    }

    pub fn monic(&self, o: Order) -> Poly {
        match self.lead(o) {
            None => self.clone(),
            Some((_, c)) => Poly(self.0.iter().map(|(&w, d)| (w, d / &c)).collect()),
        }
    }
}

fn divides(a: Mono, b: Mono) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Division with remainder; quotients are returned as polynomials.
pub fn divide(f: &Poly, basis: &[Poly], o: Order) -> (Vec<Poly>, Poly) {
    let mut quots = vec![Poly::default(); basis.len()];
    let mut rem = Poly::default();
    let mut p = f.clone();
    let leads: Vec<(Mono, Q)> = basis.iter().map(|b| b.lead(o).expect("nonzero divisor")).collect();
    while let Some((w, c)) = p.lead(o) {
        match leads.iter().position(|(l, _)| divides(*l, w)) {
            Some(j) => {
                let (l, lc) = &leads[j];
                let s = (w.0 - l.0, w.1 - l.1);
                let coef = &c / lc;
                quots[j].add_term(coef.clone(), s);
                p.add_scaled(&basis[j], &-coef, s);
            }
            None => {
                p.add_term(-c.clone(), w);
                rem.add_term(c, w);
            }
        }
    }
    (quots, rem)
}

fn s_poly(f: &Poly, g: &Poly, o: Order) -> Poly {
    let ((a, ca), (b, cb)) = (f.lead(o).unwrap(), g.lead(o).unwrap());
    let l = (a.0.max(b.0), a.1.max(b.1));
    let mut s = Poly::default();
    s.add_scaled(f, &(Q::one() / ca), (l.0 - a.0, l.1 - a.1));
    s.add_scaled(g, &(-Q::one() / cb), (l.0 - b.0, l.1 - b.1));
    s
}

/// The reduced Gröbner basis, monic, sorted by leading monomial.
pub fn groebner(gens: &[Poly], o: Order) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (_, r) = divide(&s_poly(&basis[i], &basis[j], o), &basis, o);
        if !r.is_zero() {
            basis.push(r);
            let k = basis.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimalize, then interreduce
    let mut minimal: Vec<Poly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let l = p.lead(o).unwrap().0;
        let redundant = basis.iter().enumerate().any(|(k2, p2)| {
            let l2 = p2.lead(o).unwrap().0;
            k2 != k && divides(l2, l) && (l2 != l || k2 < k)
        });
        if !redundant {
            minimal.push(p.monic(o));
        }
    }
    let mut out = Vec::new();
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(k2, _)| *k2 != k).map(|(_, p)| p.clone()).collect();
        let (l, _) = minimal[k].lead(o).unwrap();
        let mut tail = minimal[k].clone();
        tail.0.remove(&l);
        let (_, r) = if others.is_empty() { (vec![], tail) } else { divide(&tail, &others, o) };
        let mut p = r;
        p.add_term(Q::one(), l);
        out.push(p);
    }
    out.sort_by_key(|p| std::cmp::Reverse(key(o, p.lead(o).unwrap().0)));
    out
}

/// Minimal generators of the initial ideal, `x`-exponent decreasing.
pub fn initial(gb: &[Poly], o: Order) -> Ideal {
    let leads: Vec<Mono> = gb.iter().map(|p| p.lead(o).unwrap().0).collect();
    let mut min: Vec<Mono> =
        leads.iter().copied().filter(|&w| !leads.iter().any(|&v| v != w && divides(v, w))).collect();
    min.sort_by_key(|w| std::cmp::Reverse(w.0));
    min.dedup();
    min
}

// ---------- edge ideals and tangent spaces ----------

/// Generators of the edge ideal of the arrow `(k, u, v)` at `t`.
pub fn edge_gens(m: &Ideal, alpha: (usize, u32, u32), t: &Q) -> Vec<Poly> {
    let (k, u, v) = alpha;
    let l = u as i64 - m[k].0 as i64;
    let mm = v as i64 - m[k].1 as i64;
    m.iter()
        .enumerate()
        .map(|(j, &(p, qq))| {
            if j < k || t.is_zero() {
                Poly::mono((p, qq))
            } else {
                let tail = ((p as i64 + l) as u32, (qq as i64 + mm) as u32);
                Poly::binomial((p, qq), t.clone(), tail)
            }
        })
        .collect()
}

/// Whether `gens` is a Gröbner basis under `o` (every S-pair reduces to zero).
pub fn is_groebner(gens: &[Poly], o: Order) -> bool {
    (0..gens.len()).all(|j| (0..j).all(|i| divide(&s_poly(&gens[i], &gens[j], o), gens, o).1.is_zero()))
}

/// Rank of a dense rational matrix.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, |x| x.len());
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot[c];
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Hom(I, S/I)_0` for `I = M` or the edge ideal of `alpha` at `t`,
/// from S-pair syzygies of the generators (which must form a Gröbner basis
/// for the `y > x` order) and normal forms over the standard monomials of `M`.
pub fn tangent_dim(m: &Ideal, g: &Grading, alpha: Option<(usize, u32, u32)>, t: &Q) -> usize {
    let o = Order::Xel;
    let f = match alpha {
        Some(a) => edge_gens(m, a, t),
        None => m.iter().map(|&w| Poly::mono(w)).collect(),
    };
    assert!(is_groebner(&f, o), "generators are not a Gröbner basis");
    let std = standard(m);
    let pos: BTreeMap<Mono, usize> = std.iter().enumerate().map(|(k, &w)| (w, k)).collect();
    let vars: Vec<(usize, Mono)> = (0..m.len())
        .flat_map(|j| std.iter().map(move |&w| (j, w)))
        .filter(|&(j, w)| deg(g, w) == deg(g, m[j]))
        .collect();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for j in 0..f.len() {
        for i in 0..j {
            let ((a, _), (b, _)) = (f[i].lead(o).unwrap(), f[j].lead(o).unwrap());
            let l = (a.0.max(b.0), a.1.max(b.1));
            let (quots, r0) = divide(&s_poly(&f[i], &f[j], o), &f, o);
            assert!(r0.is_zero());
            // syzygy: (l/a) e_i - (l/b) e_j - sum quots_k e_k
            let mut coeffs: Vec<Poly> =
                quots.iter().map(|p| Poly(p.0.iter().map(|(&w, c)| (w, -c.clone())).collect())).collect();
            coeffs[i].add_term(Q::one(), (l.0 - a.0, l.1 - a.1));
            coeffs[j].add_term(-Q::one(), (l.0 - b.0, l.1 - b.1));
            let mut block = vec![vec![Q::zero(); vars.len()]; std.len()];
            for (col, &(jv, w)) in vars.iter().enumerate() {
                let mut image = Poly::default();
                image.add_scaled(&coeffs[jv], &Q::one(), w);
                let (_, nf) = divide(&image, &f, o);
                for (z, c) in nf.0 {
                    block[pos[&z]][col] += c;
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
    }
    if rows.is_empty() {
        return vars.len();
    }
    vars.len() - rank(rows)
}
