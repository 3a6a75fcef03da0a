//! The poset `P_h` of monomial ideals with a fixed Hilbert function, ordered by
//! comparing lex-counting functions of standard monomials degree by degree.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arrows::{positive_significant, Arrow};
use crate::edge::EdgeIdeal;
use crate::error::{Error, Result};
use crate::grading::{DegreeValue, Grading};
use crate::groebner::MonomialOrder;
use crate::monomial::Monomial;
use crate::staircase::{HilbertFunction, MonomialIdeal};

/// All partitions of `n` as weakly decreasing part lists, largest first part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every monomial ideal with Hilbert function `h`.
pub fn enumerate_ideals(h: &HilbertFunction, g: &Grading) -> Result<Vec<MonomialIdeal>> {
    let n = u32::try_from(h.total()).map_err(|_| Error::Unsupported("colength too large".into()))?;
    let mut out = Vec::new();
    for parts in partitions(n) {
        let m = MonomialIdeal::from_partition(&parts)?;
        if m.hilbert_function(g)? == *h {
            out.push(m);
        }
    }
    Ok(out)
}

/// Standard monomials grouped by degree, each group in increasing lex order.
fn standard_by_degree(m: &MonomialIdeal, g: &Grading) -> Result<BTreeMap<DegreeValue, Vec<Monomial>>> {
    let mut groups: BTreeMap<DegreeValue, Vec<Monomial>> = BTreeMap::new();
    for w in m.standard_monomials()? {
        groups.entry(g.degree(w)).or_default().push(w);
    }
    for ws in groups.values_mut() {
        ws.sort_by(|a, b| MonomialOrder::Lex.cmp(*a, *b));
    }
    Ok(groups)
}

fn count_at_most(sorted: &[Monomial], w: Monomial) -> usize {
    sorted.partition_point(|s| MonomialOrder::Lex.cmp(*s, w).is_le())
}

/// `a >= b`: for every monomial `w`, `a` has at least as many standard
/// monomials of degree `deg(w)` that are lex at most `w` as `b` does.
///
/// Within one degree both counts are nondecreasing step functions of `w`, and
/// `b`'s count only increases at its own standard monomials, so those are the
/// only places the inequality can first fail.
pub fn order_geq(a: &MonomialIdeal, b: &MonomialIdeal, g: &Grading) -> Result<bool> {
    if a.hilbert_function(g)? != b.hilbert_function(g)? {
        return Err(Error::HilbertFunctionMismatch);
    }
    Ok(geq_grouped(&standard_by_degree(a, g)?, &standard_by_degree(b, g)?))
}

fn geq_grouped(a: &BTreeMap<DegreeValue, Vec<Monomial>>, b: &BTreeMap<DegreeValue, Vec<Monomial>>) -> bool {
    b.iter().all(|(d, ws)| {
        let theirs = a.get(d).map(Vec::as_slice).unwrap_or(&[]);
        ws.iter().enumerate().all(|(k, &w)| count_at_most(theirs, w) > k)
    })
}

/// A finite poset `P_h` with its order matrix and Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    pub grading: Grading,
    pub hilbert: HilbertFunction,
    pub elements: Vec<MonomialIdeal>,
    /// `geq[a][b]` iff `elements[a] >= elements[b]`.
    pub geq: Vec<Vec<bool>>,
    /// Cover pairs `(lower, upper)`.
    pub hasse: Vec<(usize, usize)>,
}

impl Poset {
    pub fn build(h: &HilbertFunction, g: &Grading) -> Result<Self> {
        let elements = enumerate_ideals(h, g)?;
        let grouped = elements.iter().map(|m| standard_by_degree(m, g)).collect::<Result<Vec<_>>>()?;
        let geq: Vec<Vec<bool>> = grouped.iter().map(|a| grouped.iter().map(|b| geq_grouped(a, b)).collect()).collect();
        let hasse = transitive_reduction(&geq);
        Ok(Poset { grading: g.clone(), hilbert: h.clone(), elements, geq, hasse })
    }

    pub fn from_ideal(m: &MonomialIdeal, g: &Grading) -> Result<Self> {
        Poset::build(&m.hilbert_function(g)?, g)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &MonomialIdeal) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    /// Maximal elements of the order.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| (0..self.len()).all(|b| a == b || !self.geq[b][a])).collect()
    }

    /// The element above every other one.
    pub fn maximum(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::NotAHilbertFunction);
        }
        (0..self.len()).find(|&a| self.geq[a].iter().all(|&x| x)).ok_or(Error::NoUniqueMaximum)
    }

    /// Elements with no positive significant arrow.
    pub fn t_plus_empty(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (k, m) in self.elements.iter().enumerate() {
            if positive_significant(m, &self.grading)?.is_empty() {
                out.push(k);
            }
        }
        Ok(out)
    }

    /// The lex-most ideal, found as the maximum and cross-checked against the
    /// unique element with empty `T_+`.
    pub fn lex_most(&self) -> Result<&MonomialIdeal> {
        let top = self.maximum()?;
        if self.t_plus_empty()? != [top] {
            return Err(Error::NoUniqueMaximum);
        }
        Ok(&self.elements[top])
    }

    /// Whether the order matrix is reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.geq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.geq[a][b] && self.geq[b][a])))
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(self.geq[a][b] && self.geq[b][c]) || self.geq[a][c])))
    }

    /// Graphviz source: one node per ideal, one edge per cover pair pointing at
    /// the larger element.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
        for (k, m) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{}\"];", m.spaced_label());
        }
        for &(lo, hi) in &self.hasse {
            let _ = writeln!(s, "  n{lo} -> n{hi};");
        }
        s.push_str("}\n");
        s
    }
}

/// Cover pairs `(lower, upper)` of a partial order given as a `geq` matrix.
pub fn transitive_reduction(geq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = geq.len();
    let gt = |a: usize, b: usize| a != b && geq[a][b];
    let mut out = Vec::new();
    for hi in 0..n {
        for lo in 0..n {
            if gt(hi, lo) && !(0..n).any(|c| gt(hi, c) && gt(c, lo)) {
                out.push((lo, hi));
            }
        }
    }
    out.sort();
    out
}

/// `L_h`.
pub fn lex_most(h: &HilbertFunction, g: &Grading) -> Result<MonomialIdeal> {
    Poset::build(h, g)?.lex_most().cloned()
}

/// One curve of a chain: `to` is the lex initial ideal of `I_alpha(1)` built on `from`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub from: MonomialIdeal,
    pub alpha: Arrow,
    pub to: MonomialIdeal,
}

/// Walk from `m` to the lex-most ideal, always degenerating along the smallest
/// `(i, u, v)` in `T_+`.
pub fn chain_to_lexmost(m: &MonomialIdeal, g: &Grading) -> Result<Vec<ChainStep>> {
    let mut steps = Vec::new();
    let mut current = m.clone();
    // every step goes strictly up in a poset with at most p(|h|) elements
    let bound = partitions(m.colength()? as u32).len();
    while let Some(alpha) = positive_significant(&current, g)?.first().copied() {
        if steps.len() >= bound {
            return Err(Error::PreconditionViolated("chain did not terminate".into()));
        }
        let edge = EdgeIdeal::new(&current, g, alpha.triple(), BigRational::one())?;
        let to = edge.initial_ideal(MonomialOrder::Lex);
        steps.push(ChainStep { from: current, alpha, to: to.clone() });
        current = to;
    }
    Ok(steps)
}

/// A random grading of one of the shapes `Z`, `Z/m`, `Z + Z/m` or `Z^2`,
/// with small degrees.
pub fn random_grading<R: Rng>(rng: &mut R) -> Grading {
    loop {
        let shape = rng.gen_range(0..4);
        let m = rng.gen_range(2..=5u64);
        let free = |rng: &mut R| rng.gen_range(-3..=3i64);
        let res = |rng: &mut R| rng.gen_range(0..m as i64);
        let g = match shape {
            0 => Grading::integer(free(rng), free(rng)),
            1 => Grading::cyclic(m, res(rng), res(rng)).unwrap(),
            2 => Grading::new(
                1,
                vec![m],
                DegreeValue::new(vec![free(rng)], vec![res(rng) as u64]),
                DegreeValue::new(vec![free(rng)], vec![res(rng) as u64]),
            )
            .unwrap(),
            _ => Grading::new(
                2,
                vec![],
                DegreeValue::new(vec![free(rng), free(rng)], vec![]),
                DegreeValue::new(vec![free(rng), free(rng)], vec![]),
            )
            .unwrap(),
        };
        if !g.deg_x().is_zero() || !g.deg_y().is_zero() {
            return g;
        }
    }
}

/// A uniformly chosen partition of `n`.
pub fn random_partition<R: Rng>(rng: &mut R, n: u32) -> Vec<u32> {
    let all = partitions(n);
    all[rng.gen_range(0..all.len())].clone()
}

/// A random grading with the Hilbert function of a random ideal of colength
/// at most `max_n`. Draws whose poset has a single element are redrawn a few
/// times, since they exercise nothing.
pub fn random_instance<R: Rng>(rng: &mut R, max_n: u32) -> Result<(Grading, HilbertFunction)> {
    let mut last = None;
    for _ in 0..40 {
        let g = random_grading(rng);
        let n = rng.gen_range(1..=max_n);
        let h = MonomialIdeal::from_partition(&random_partition(rng, n))?.hilbert_function(&g)?;
        if enumerate_ideals(&h, &g)?.len() > 1 {
            return Ok((g, h));
        }
        last = Some((g, h));
    }
    Ok(last.expect("at least one draw"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ideal(gens: &[(u32, u32)]) -> MonomialIdeal {
        MonomialIdeal::from_gens(gens.iter().map(|&g| g.into())).unwrap()
    }

    fn z_hilbert(values: &[u64]) -> HilbertFunction {
        HilbertFunction::from_entries(
            values.iter().enumerate().map(|(d, &v)| (DegreeValue::new(vec![d as i64], vec![]), v)),
        )
    }

    /// The order read straight from its definition, over every monomial in a box.
    fn brute_geq(a: &MonomialIdeal, b: &MonomialIdeal, g: &Grading) -> bool {
        let bound = 2 + a.colength().unwrap().max(b.colength().unwrap()) as u32;
        let box_: Vec<Monomial> = (0..bound).flat_map(|u| (0..bound).map(move |v| Monomial::new(u, v))).collect();
        box_.iter().all(|&w| {
            let count = |m: &MonomialIdeal| {
                box_.iter()
                    .filter(|&&s| {
                        !m.contains_monomial(s) && g.degree(s) == g.degree(w) && MonomialOrder::Lex.cmp(s, w).is_le()
                    })
                    .count()
            };
            count(a) >= count(b)
        })
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), [vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn standard_graded_poset() {
        let g = Grading::integer(1, 1);
        let p = Poset::build(&z_hilbert(&[1, 2, 2, 1]), &g).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.hasse.len(), 8);
        assert!(p.is_partial_order());
        let top = p.maximum().unwrap();
        let bottom: Vec<usize> = (0..6).filter(|&b| (0..6).all(|a| p.geq[a][b])).collect();
        assert_eq!(bottom.len(), 1);
        assert_eq!(p.hasse.iter().filter(|&&(_, hi)| hi == top).count(), 2);
        assert_eq!(p.hasse.iter().filter(|&&(lo, _)| lo == bottom[0]).count(), 2);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(p.geq[a][b], brute_geq(&p.elements[a], &p.elements[b], &g));
            }
        }
        assert_eq!(p.to_dot().matches(" -> ").count(), 8);
        assert_eq!(p.to_dot().matches("[label=").count(), 6);
    }

    #[test]
    fn cyclic_example_is_not_lex_segment() {
        let g = Grading::cyclic(3, 1, 1).unwrap();
        let m = ideal(&[(5, 0), (1, 1), (0, 2)]);
        let p = Poset::from_ideal(&m, &g).unwrap();
        let top = ideal(&[(2, 0), (1, 1), (0, 5)]);
        let mut elems = p.elements.clone();
        elems.sort();
        let mut expect = vec![m.clone(), top.clone()];
        expect.sort();
        assert_eq!(elems, expect);
        assert_eq!(p.lex_most().unwrap(), &top);
        assert!(order_geq(&top, &m, &g).unwrap());
        assert!(!order_geq(&m, &top, &g).unwrap());
        // x and y^7 share a degree, x is lex larger, yet only y^7 lies in the ideal
        assert_eq!(g.degree_of(1, 0), g.degree_of(0, 7));
        assert!(top.contains(0, 7) && !top.contains(1, 0));
        let chain = chain_to_lexmost(&m, &g).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(chain[0].to, top);
    }

    #[test]
    fn colength_three_chain() {
        let g = Grading::trivial();
        let low = ideal(&[(3, 0), (0, 1)]);
        let mid = ideal(&[(2, 0), (1, 1), (0, 2)]);
        let high = ideal(&[(1, 0), (0, 3)]);
        assert!(order_geq(&high, &mid, &g).unwrap());
        assert!(order_geq(&mid, &low, &g).unwrap());
        assert!(order_geq(&high, &low, &g).unwrap());
        assert!(!order_geq(&low, &high, &g).unwrap());
        let p = Poset::from_ideal(&low, &g).unwrap();
        assert_eq!(p.hasse.len(), 2);
        assert_eq!(p.lex_most().unwrap(), &high);
        let mismatch = order_geq(&high, &ideal(&[(1, 0), (0, 1)]), &g);
        assert_eq!(mismatch, Err(Error::HilbertFunctionMismatch));
    }

    #[test]
    fn singleton_and_unit_posets() {
        let g = Grading::trivial();
        let p = Poset::from_ideal(&ideal(&[(1, 0), (0, 1)]), &g).unwrap();
        assert_eq!((p.len(), p.hasse.len()), (1, 0));
        assert_eq!(p.lex_most().unwrap(), &ideal(&[(1, 0), (0, 1)]));
        assert!(chain_to_lexmost(&p.elements[0], &g).unwrap().is_empty());
        let empty = Poset::build(&z_hilbert(&[1, 3]), &Grading::integer(1, 1)).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.maximum(), Err(Error::NotAHilbertFunction));
    }

    #[test]
    fn first_chain_step_of_worked_example() {
        let m = ideal(&[(4, 0), (2, 1), (0, 2)]);
        let chain = chain_to_lexmost(&m, &Grading::trivial()).unwrap();
        assert_eq!(chain[0].alpha.triple(), (1, 3, 0));
        assert_eq!(chain[0].to, ideal(&[(3, 0), (1, 1), (0, 4)]));
        assert_eq!(chain.last().unwrap().to, ideal(&[(1, 0), (0, 6)]));
    }

    #[test]
    fn trivial_grading_is_dominance_of_conjugates() {
        let g = Grading::trivial();
        let conj = |parts: &[u32]| -> Vec<u32> {
            (1..=parts.first().copied().unwrap_or(0))
                .map(|k| parts.iter().filter(|&&p| p >= k).count() as u32)
                .collect()
        };
        let dominates = |a: &[u32], b: &[u32]| {
            let mut sa = 0;
            let mut sb = 0;
            (0..a.len().max(b.len())).all(|k| {
                sa += a.get(k).copied().unwrap_or(0);
                sb += b.get(k).copied().unwrap_or(0);
                sa >= sb
            })
        };
        for n in 1..=7 {
            let parts = partitions(n);
            for a in &parts {
                for b in &parts {
                    let ma = MonomialIdeal::from_partition(a).unwrap();
                    let mb = MonomialIdeal::from_partition(b).unwrap();
                    assert_eq!(order_geq(&ma, &mb, &g).unwrap(), dominates(&conj(a), &conj(b)), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn random_posets_have_a_unique_top() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let g = random_grading(&mut rng);
            let n = rng.gen_range(1..=7);
            let m = MonomialIdeal::from_partition(&random_partition(&mut rng, n)).unwrap();
            let p = Poset::from_ideal(&m, &g).unwrap();
            assert!(p.is_partial_order());
            assert_eq!(p.maximal().len(), 1);
            let top = p.lex_most().unwrap().clone();
            for e in &p.elements {
                let chain = chain_to_lexmost(e, &g).unwrap();
                assert!(chain.len() < p.len());
                assert_eq!(chain.last().map_or(e, |s| &s.to), &top);
                for s in &chain {
                    assert!(order_geq(&s.to, &s.from, &g).unwrap() && s.to != s.from);
                }
            }
        }
    }
}
