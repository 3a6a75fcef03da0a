//! The worked-example corpus and the derived sweeps run by `verify-paper`.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use hilb2_core::poset::{self, Poset};
use hilb2_core::tangent::{self, Label};
use hilb2_core::{arrows, chart, EdgeIdeal, Grading, HilbertFunction, Monomial, MonomialIdeal, MonomialOrder, TMode};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::commands::{chain_checks, factor_report, Check, Failure};
use crate::input::parse_rationals;

pub const EMBEDDED: &[(&str, &str)] = &[
    ("arrows.json", include_str!("../../../corpus/arrows.json")),
    ("tangent_small.json", include_str!("../../../corpus/tangent_small.json")),
    ("tangent_large.json", include_str!("../../../corpus/tangent_large.json")),
    ("edge.json", include_str!("../../../corpus/edge.json")),
    ("poset.json", include_str!("../../../corpus/poset.json")),
    ("nonlex.json", include_str!("../../../corpus/nonlex.json")),
    ("colength3.json", include_str!("../../../corpus/colength3.json")),
    ("factor.json", include_str!("../../../corpus/factor.json")),
];

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Entry {
    Arrows {
        name: String,
        #[serde(default = "Grading::trivial")]
        grading: Grading,
        ideal: MonomialIdeal,
        expect: ArrowsExpect,
    },
    Tangent {
        name: String,
        #[serde(default = "Grading::trivial")]
        grading: Grading,
        ideal: MonomialIdeal,
        alpha: Label,
        t: Vec<String>,
        expect: TangentExpect,
    },
    Edge {
        name: String,
        #[serde(default = "Grading::trivial")]
        grading: Grading,
        ideal: MonomialIdeal,
        alpha: Label,
        t: Vec<String>,
        expect: EdgeExpect,
    },
    Poset {
        name: String,
        grading: Grading,
        hilbert: HilbertFunction,
        expect: PosetExpect,
    },
    Lexmost {
        name: String,
        #[serde(default = "Grading::trivial")]
        grading: Grading,
        ideal: MonomialIdeal,
        expect: LexmostExpect,
    },
    Factor {
        name: String,
        grading: Grading,
        ideal: MonomialIdeal,
        expect: FactorExpect,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowsExpect {
    pub total: usize,
    pub nonneg: Vec<Label>,
    pub nonpos: Vec<Label>,
    pub positive: Vec<Label>,
    pub insignificant: Vec<Label>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationExpect {
    pub at: Label,
    pub text: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TangentExpect {
    #[serde(default)]
    pub dimension: Option<usize>,
    #[serde(default)]
    pub sigma: Option<usize>,
    pub equation_count: usize,
    pub equations: Vec<String>,
    #[serde(default)]
    pub reduced: Option<Vec<Label>>,
    #[serde(default)]
    pub relations: Vec<RelationExpect>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeExpect {
    pub symbolic: String,
    pub lex_initial: MonomialIdeal,
    pub lex_t: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetExpect {
    pub count: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub outside: Monomial,
    pub inside: Monomial,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LexmostExpect {
    /// The whole poset, listed from the top down; it must be a chain.
    pub chain: Vec<MonomialIdeal>,
    #[serde(default)]
    pub witness: Option<Witness>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorExpect {
    pub gcd: Monomial,
    pub quotient: MonomialIdeal,
    pub report: String,
}

impl Entry {
    pub fn name(&self) -> &str {
        match self {
            Entry::Arrows { name, .. }
            | Entry::Tangent { name, .. }
            | Entry::Edge { name, .. }
            | Entry::Poset { name, .. }
            | Entry::Lexmost { name, .. }
            | Entry::Factor { name, .. } => name,
        }
    }

    pub fn run(&self) -> Result<Vec<Check>, Failure> {
        match self {
            Entry::Arrows { grading, ideal, expect, .. } => run_arrows(grading, ideal, expect),
            Entry::Tangent { grading, ideal, alpha, t, expect, .. } => run_tangent(grading, ideal, *alpha, t, expect),
            Entry::Edge { grading, ideal, alpha, t, expect, .. } => run_edge(grading, ideal, *alpha, t, expect),
            Entry::Poset { grading, hilbert, expect, .. } => run_poset(grading, hilbert, expect),
            Entry::Lexmost { grading, ideal, expect, .. } => run_lexmost(grading, ideal, expect),
            Entry::Factor { grading, ideal, expect, .. } => {
                let r = factor_report(ideal, grading)?;
                Ok(vec![
                    Check::with_detail("gcd", r.gcd == expect.gcd, r.gcd.to_string()),
                    Check::with_detail("quotient", r.quotient == expect.quotient, r.quotient.to_string()),
                    Check::with_detail("report", r.line() == expect.report, r.line()),
                ])
            }
        }
    }
}

/// Parse the embedded corpus, or every `*.json` file of `dir`.
pub fn load(dir: Option<&Path>) -> Result<Vec<(String, Entry)>> {
    let raw: Vec<(String, String)> = match dir {
        None => EMBEDDED.iter().map(|(n, s)| (n.to_string(), s.to_string())).collect(),
        Some(dir) => {
            let mut files: Vec<_> = fs::read_dir(dir)
                .with_context(|| format!("cannot read corpus directory {}", dir.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            files.into_iter().map(|p| Ok((p.display().to_string(), fs::read_to_string(&p)?))).collect::<Result<_>>()?
        }
    };
    raw.into_iter()
        .map(|(file, text)| {
            let e: Entry = serde_json::from_str(&text).with_context(|| format!("corpus file {file}"))?;
            Ok((file, e))
        })
        .collect()
}

fn labels(v: Vec<hilb2_core::Arrow>) -> BTreeSet<Label> {
    v.iter().map(|a| a.triple()).collect()
}

fn set(v: &[Label]) -> BTreeSet<Label> {
    v.iter().copied().collect()
}

fn run_arrows(g: &Grading, m: &MonomialIdeal, e: &ArrowsExpect) -> Result<Vec<Check>, Failure> {
    let a = arrows::all_arrows(m, g)?;
    let mut checks = vec![Check::with_detail("r", a.len() == e.total, a.len().to_string())];
    for (name, got, want) in [
        ("T>=0", labels(a.nonneg_significant()), set(&e.nonneg)),
        ("T<=0", labels(a.nonpos_significant()), set(&e.nonpos)),
        ("T+", labels(a.positive_significant()), set(&e.positive)),
        ("insignificant", labels(a.insignificant()), set(&e.insignificant)),
    ] {
        checks.push(Check::with_detail(name, got == want, format!("{got:?}")));
    }
    Ok(checks)
}

fn run_tangent(
    g: &Grading,
    m: &MonomialIdeal,
    alpha: Label,
    t: &[String],
    e: &TangentExpect,
) -> Result<Vec<Check>, Failure> {
    let ts = parse_rationals(t).map_err(Failure::Input)?;
    let sys = tangent::build_system(m, g, Some(alpha), TMode::Symbolic)?;
    let mut checks = Vec::new();
    let count = sys.equations().len();
    checks.push(Check::with_detail("equation count", count == e.equation_count, count.to_string()));
    if let Some(sigma) = e.sigma {
        let got = sys.edge().map(|x| x.sigma());
        checks.push(Check::with_detail("sigma", got == Some(sigma), format!("{got:?}")));
    }
    for want in &e.equations {
        let label = want.split('=').next().unwrap_or_default().trim().to_string();
        let got =
            sys.equations().iter().map(|q| sys.equation_string(q)).find(|s| s.starts_with(&(label.clone() + " ")));
        let ok = got.as_deref().map(tangent::normalize_equation) == Some(tangent::normalize_equation(want));
        checks.push(Check::with_detail(format!("equation {label}"), ok, format!("{got:?}")));
    }
    let generic = sys.dimension();
    if let Some(dim) = e.dimension {
        checks.push(Check::with_detail("generic dimension", generic == dim, generic.to_string()));
    }
    for t in &ts {
        let d = sys.with_mode(TMode::Numeric(t.clone())).dimension();
        checks.push(Check::with_detail(format!("dimension at t = {t}"), d == generic, d.to_string()));
    }
    let reduced = sys.reduced_system();
    let (rr, fr) = (reduced.rank(), sys.rank());
    checks.push(Check::with_detail("reduced rank = full rank", rr == fr, format!("{rr} vs {fr}")));
    if let Some(want) = &e.reduced {
        let got: BTreeSet<Label> = reduced.equations().iter().map(|q| q.label).collect();
        checks.push(Check::with_detail("reduced system labels", got == set(want), format!("{got:?}")));
    }
    for r in &e.relations {
        let (i, u, v) = r.at;
        let rel = sys.relation(i, u, v)?;
        let text = rel.to_string();
        checks.push(Check::with_detail(
            format!("relation at {:?}", r.at),
            rel.is_zero() && text == r.text,
            format!("{text}, zero: {}", rel.is_zero()),
        ));
    }
    Ok(checks)
}

fn run_edge(g: &Grading, m: &MonomialIdeal, alpha: Label, t: &[String], e: &EdgeExpect) -> Result<Vec<Check>, Failure> {
    let ts = parse_rationals(t).map_err(Failure::Input)?;
    let lex_ts = parse_rationals(&e.lex_t).map_err(Failure::Input)?;
    let edge = EdgeIdeal::new(m, g, alpha, BigRational::from_integer(1.into()))?;
    let sym = edge.display_symbolic();
    let mut checks = vec![
        Check::with_detail("generators", sym == e.symbolic, sym),
        Check::new("syzygies vanish identically", edge.syzygies_vanish_identically()),
    ];
    for t in &ts {
        let x = edge.with_t(t.clone()).initial_ideal(MonomialOrder::Xel);
        checks.push(Check::with_detail(format!("in_xel = M at t = {t}"), x == *m, x.to_string()));
    }
    for t in &lex_ts {
        let l = edge.with_t(t.clone()).initial_ideal(MonomialOrder::Lex);
        checks.push(Check::with_detail(format!("in_lex at t = {t}"), l == e.lex_initial, l.to_string()));
    }
    let above = poset::order_geq(&e.lex_initial, m, g)? && !poset::order_geq(m, &e.lex_initial, g)?;
    checks.push(Check::new("in_lex lies strictly above M", above));
    Ok(checks)
}

fn run_poset(g: &Grading, h: &HilbertFunction, e: &PosetExpect) -> Result<Vec<Check>, Failure> {
    let p = Poset::build(h, g)?;
    let n = p.len();
    let minimal = (0..n).filter(|&a| (0..n).all(|b| !p.geq[a][b] || a == b)).count();
    let top = p.maximum().ok();
    Ok(vec![
        Check::with_detail("count", n == e.count, n.to_string()),
        Check::new("unique top", top.is_some()),
        Check::new("unique bottom", minimal == 1),
        Check::new("partial order", p.is_partial_order()),
    ])
}

fn run_lexmost(g: &Grading, m: &MonomialIdeal, e: &LexmostExpect) -> Result<Vec<Check>, Failure> {
    let p = Poset::from_ideal(m, g)?;
    let mut checks = Vec::new();
    let got: BTreeSet<&MonomialIdeal> = p.elements.iter().collect();
    let want: BTreeSet<&MonomialIdeal> = e.chain.iter().collect();
    checks.push(Check::with_detail("elements", got == want, format!("{got:?}")));
    let is_chain = e.chain.windows(2).all(|w| match (p.index_of(&w[0]), p.index_of(&w[1])) {
        (Some(a), Some(b)) => p.geq[a][b] && !p.geq[b][a],
        _ => false,
    });
    checks.push(Check::new("listed order is a strict chain", is_chain));
    let top = p.lex_most()?;
    checks.push(Check::with_detail("maximum", Some(top) == e.chain.first(), top.to_string()));
    if let Some(w) = &e.witness {
        let ok = g.degree(w.outside) == g.degree(w.inside)
            && !top.contains_monomial(w.outside)
            && top.contains_monomial(w.inside)
            && MonomialOrder::Lex.cmp(w.outside, w.inside).is_gt();
        checks.push(Check::new("maximum is not a lex segment", ok));
    }
    let steps = poset::chain_to_lexmost(m, g)?;
    let end = steps.last().map_or(m, |s| &s.to);
    checks.push(Check::with_detail("chain from the input reaches the maximum", end == top, end.to_string()));
    Ok(checks)
}

/// A labelled derived check.
pub struct Sweep {
    pub name: &'static str,
    pub run: fn(u64) -> Result<Vec<Check>, Failure>,
}

pub const SWEEPS: &[Sweep] = &[
    Sweep { name: "relations vanish for colength <= 6 at A = 0", run: sweep_relations },
    Sweep { name: "tangent dimension 2n for every partition n <= 7", run: sweep_fogarty },
    Sweep { name: "posets have a unique maximum with empty T+", run: sweep_posets },
    Sweep { name: "chains climb to the lex-most ideal", run: sweep_chains },
    Sweep { name: "charts around lex-most ideals", run: sweep_charts },
];

fn a0_ideals(max_n: u32) -> Vec<MonomialIdeal> {
    (1..=max_n)
        .flat_map(poset::partitions)
        .map(|p| MonomialIdeal::from_partition(&p).expect("partitions give ideals"))
        .collect()
}

fn sweep_relations(_: u64) -> Result<Vec<Check>, Failure> {
    let g = Grading::trivial();
    let mut checks = Vec::new();
    for m in a0_ideals(6) {
        for alpha in arrows::positive_significant(&m, &g)? {
            let sys = tangent::build_system(&m, &g, Some(alpha.triple()), TMode::Symbolic)?;
            let bad: Vec<Label> = sys
                .relation_labels()
                .into_iter()
                .filter(|&(i, u, v)| sys.relation(i, u, v).map_or(true, |r| !r.is_zero()))
                .collect();
            let (rr, fr) = (sys.reduced_system().rank(), sys.rank());
            checks.push(Check::with_detail(
                format!("{m} at {alpha}"),
                bad.is_empty() && rr == fr,
                format!("nonzero relations {bad:?}, ranks {rr} vs {fr}"),
            ));
        }
    }
    Ok(checks)
}

fn sweep_fogarty(_: u64) -> Result<Vec<Check>, Failure> {
    let g = Grading::trivial();
    let zero = BigRational::from_integer(0.into());
    let mut checks = Vec::new();
    for m in a0_ideals(7) {
        let n = m.colength()?;
        let sys = tangent::build_system(&m, &g, None, TMode::Symbolic)?;
        let (sig, dim) = (sys.significant_count(), sys.dimension());
        let red = sys.variables().len() - sys.reduced_system().rank();
        let oracle = tangent::oracle_dimension(&m, &g, None, &zero)?;
        checks.push(Check::with_detail(
            m.to_string(),
            sig == 2 * n && dim == sig && red == sig && oracle == sig,
            format!("|T| {sig}, rank {dim}, reduced {red}, oracle {oracle}"),
        ));
    }
    Ok(checks)
}

/// All `A = 0` posets up to colength 7 and 20 seeded random gradings.
pub fn sweep_hilbert_functions(seed: u64) -> Result<Vec<(Grading, HilbertFunction)>, Failure> {
    let mut out = Vec::new();
    let g0 = Grading::trivial();
    for n in 1..=7u32 {
        let m = MonomialIdeal::from_partition(&[n])?;
        out.push((g0.clone(), m.hilbert_function(&g0)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        out.push(poset::random_instance(&mut rng, 8)?);
    }
    Ok(out)
}

fn sweep_posets(seed: u64) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    for (g, h) in sweep_hilbert_functions(seed)? {
        let p = Poset::build(&h, &g)?;
        let top = p.maximum().ok();
        let tplus = p.t_plus_empty()?;
        checks.push(Check::with_detail(
            format!("h = {h}"),
            top.is_some() && tplus == top.into_iter().collect::<Vec<_>>(),
            format!("maximum {top:?}, T+ empty at {tplus:?}"),
        ));
    }
    Ok(checks)
}

fn sweep_chains(seed: u64) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    for (g, h) in sweep_hilbert_functions(seed)? {
        let p = Poset::build(&h, &g)?;
        for m in &p.elements {
            let steps = poset::chain_to_lexmost(m, &g)?;
            let inner = chain_checks(m, &g, &steps)?;
            let failed: Vec<String> = inner.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
            checks.push(Check::with_detail(format!("{m} under h = {h}"), failed.is_empty(), failed.join("; ")));
        }
    }
    Ok(checks)
}

fn sweep_charts(seed: u64) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    for (g, h) in sweep_hilbert_functions(seed)? {
        let c = chart::build_chart(&h, &g)?;
        let dim = arrows::all_arrows(c.lexmost(), &g)?.significant().len();
        let r = c.verify(10, seed);
        checks.push(Check::with_detail(
            format!("h = {h}"),
            r.passed() && c.d() == dim,
            format!("d = {}, |T| = {dim}, {}", c.d(), r.failures.join("; ")),
        ));
    }
    Ok(checks)
}
