use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use clap::Args;
use hilb2_core::arrows::{self, ArrowCounts};
use hilb2_core::chart::{self, ChartJson};
use hilb2_core::poset::{self, ChainStep};
use hilb2_core::staircase::classify_principal_factor;
use hilb2_core::tangent::{self, SystemJson};
use hilb2_core::{
    ArrowClass, ArrowSet, Binomial, ChartReport, EdgeIdeal, FactorSpace, Grading, HilbertFunction, Monomial,
    MonomialIdeal, MonomialOrder, Poset, SyzygyRow, TMode,
};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::input::{parse_alpha, parse_rationals, Inputs};

/// Why a command stopped: bad input (exit 2) or a failed computation (exit 1).
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Compute(anyhow::Error),
}

impl From<hilb2_core::Error> for Failure {
    fn from(e: hilb2_core::Error) -> Self {
        use hilb2_core::Error as E;
        match e {
            E::InvalidGrading(_)
            | E::InvalidDegree(_)
            | E::NotMonotone
            | E::EmptyIdeal
            | E::InfiniteColength
            | E::NotPositiveSignificant(_)
            | E::HilbertFunctionMismatch
            | E::NotAHilbertFunction
            | E::Unsupported(_) => Failure::Input(e.into()),
            _ => Failure::Compute(e.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Compute(e)
    }
}

pub trait InputContext<T> {
    fn input(self) -> Result<T, Failure>;
}

impl<T> InputContext<T> for anyhow::Result<T> {
    fn input(self) -> Result<T, Failure> {
        self.map_err(Failure::Input)
    }
}

pub type Outcome = Result<Report, Failure>;

/// Rendered output of a command.
pub struct Report {
    pub text: String,
    pub json: String,
    pub passed: bool,
}

impl Report {
    fn new<T: Serialize>(text: String, value: &T, checks: &[Check]) -> Self {
        let json = serde_json::to_string_pretty(value).expect("reports serialize");
        Report { text: text + &render_checks(checks), json: json + "\n", passed: checks.iter().all(|c| c.passed) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, detail: None }
    }

    pub fn with_detail(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: if passed { None } else { Some(detail.into()) } }
    }
}

fn render_checks(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        match (&c.detail, c.passed) {
            (_, true) => writeln!(s, "check {}: ok", c.name),
            (Some(d), false) => writeln!(s, "check {}: FAILED ({d})", c.name),
            (None, false) => writeln!(s, "check {}: FAILED", c.name),
        }
        .unwrap();
    }
    s
}

fn class_name(c: ArrowClass) -> &'static str {
    match c {
        ArrowClass::PositiveSignificant => "positive significant",
        ArrowClass::NonnegSignificantNotPositive => "nonnegative significant",
        ArrowClass::NonposSignificant => "nonpositive significant",
        ArrowClass::Insignificant => "insignificant",
        ArrowClass::UtterlyInsignificant => "utterly insignificant",
    }
}

#[derive(Args, Debug)]
pub struct Plain {
    #[command(flatten)]
    pub inputs: Inputs,
}

#[derive(Args, Debug)]
pub struct Verified {
    #[command(flatten)]
    pub inputs: Inputs,
    /// Run the consistency checks; a failed check exits with status 1.
    #[arg(long)]
    pub verify: bool,
}

// enumerate

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub hilbert: HilbertFunction,
    pub ideals: Vec<MonomialIdeal>,
}

pub fn enumerate(a: &Plain) -> Outcome {
    let g = a.inputs.grading().input()?;
    let h = a.inputs.hilbert(&g).input()?;
    let ideals = poset::enumerate_ideals(&h, &g)?;
    let mut text = format!("{} monomial ideals with h = {h}\n", ideals.len());
    for m in &ideals {
        writeln!(text, "{m}").unwrap();
    }
    Ok(Report::new(text, &EnumerateReport { hilbert: h, ideals }, &[]))
}

// arrows

pub fn arrows(a: &Plain) -> Outcome {
    let g = a.inputs.grading().input()?;
    let m = a.inputs.finite_ideal().input()?;
    let set: ArrowSet = arrows::all_arrows(&m, &g)?;
    let mut text = format!("arrows of {m}\n");
    for arrow in set.all() {
        writeln!(text, "{arrow} {}", class_name(arrow.class)).unwrap();
    }
    let ArrowCounts {
        total,
        significant,
        nonneg_significant,
        nonpos_significant,
        positive_significant,
        insignificant,
        ..
    } = set.counts();
    writeln!(
        text,
        "r = {total}, significant {significant} (nonnegative {nonneg_significant}, nonpositive {nonpos_significant}, positive {positive_significant}), insignificant {insignificant}"
    )
    .unwrap();
    Ok(Report::new(text, &set, &[]))
}

// edge

#[derive(Args, Debug)]
pub struct EdgeArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// Positive significant arrow i,u,v.
    #[arg(long)]
    pub alpha: String,
    /// Values of t to sample, comma separated; rationals p/q allowed.
    #[arg(long, value_delimiter = ',', default_value = "1", allow_hyphen_values = true)]
    pub t: Vec<String>,
    /// Check the syzygies, in_xel = M, and that in_lex lies strictly above M.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSample {
    pub t: String,
    pub generators: Vec<Binomial>,
    pub xel_initial: MonomialIdeal,
    pub lex_initial: MonomialIdeal,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub ideal: MonomialIdeal,
    pub alpha: (usize, u32, u32),
    pub symbolic: String,
    pub ell: i64,
    pub m: i64,
    pub sigma: usize,
    pub syzygies: Vec<SyzygyRow>,
    pub samples: Vec<EdgeSample>,
    pub checks: Vec<Check>,
}

pub fn edge(a: &EdgeArgs) -> Outcome {
    let g = a.inputs.grading().input()?;
    let m = a.inputs.finite_ideal().input()?;
    let alpha = parse_alpha(&a.alpha).input()?;
    let ts = parse_rationals(&a.t).input()?;
    let e = EdgeIdeal::new(&m, &g, alpha, BigRational::zero())?;

    let mut text = format!("I_alpha(t) = {}\n", e.display_symbolic());
    writeln!(text, "k = {}, l = {}, m = {}, sigma = {}", e.k(), e.ell(), e.m(), e.sigma()).unwrap();
    text.push_str("syzygies:\n");
    let syzygies = e.syzygies();
    for row in &syzygies {
        writeln!(text, "  {row}").unwrap();
    }
    let mut samples = Vec::new();
    for t in &ts {
        let et = e.with_t(t.clone());
        let sample = EdgeSample {
            t: t.to_string(),
            generators: et.generators(),
            xel_initial: et.initial_ideal(MonomialOrder::Xel),
            lex_initial: et.initial_ideal(MonomialOrder::Lex),
        };
        writeln!(text, "t = {}: in_xel = {}, in_lex = {}", sample.t, sample.xel_initial, sample.lex_initial).unwrap();
        samples.push(sample);
    }

    let mut checks = Vec::new();
    if a.verify {
        checks.push(Check::new("syzygies vanish identically in t", e.syzygies_vanish_identically()));
        for s in &samples {
            checks.push(Check::with_detail(
                format!("in_xel = M at t = {}", s.t),
                s.xel_initial == m,
                format!("got {}", s.xel_initial),
            ));
        }
        let h = m.hilbert_function(&g)?;
        let nonzero: Vec<&EdgeSample> = samples.iter().filter(|s| s.t != "0").collect();
        for s in &nonzero {
            let same_h = s.lex_initial.hilbert_function(&g)? == h;
            let above = s.lex_initial != m && poset::order_geq(&s.lex_initial, &m, &g)?;
            checks.push(Check::with_detail(
                format!("in_lex at t = {} lies strictly above M", s.t),
                same_h && above,
                format!("got {}", s.lex_initial),
            ));
        }
        if let Some(first) = nonzero.first() {
            checks.push(Check::new(
                "in_lex does not depend on t != 0",
                nonzero.iter().all(|s| s.lex_initial == first.lex_initial),
            ));
        }
    }
    let report = EdgeReport {
        ideal: m,
        alpha,
        symbolic: e.display_symbolic(),
        ell: e.ell(),
        m: e.m(),
        sigma: e.sigma(),
        syzygies,
        samples,
        checks: checks.clone(),
    };
    Ok(Report::new(text, &report, &checks))
}

// poset

#[derive(Args, Debug)]
pub struct PosetArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// Write the Hasse diagram in DOT format to this file.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Check the order is a partial order and the maximum is the unique T+-empty element.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetReport {
    pub poset: Poset,
    pub maximum: Option<usize>,
    pub checks: Vec<Check>,
}

pub fn poset(a: &PosetArgs) -> Outcome {
    let g = a.inputs.grading().input()?;
    let h = a.inputs.hilbert(&g).input()?;
    let p = Poset::build(&h, &g)?;
    let maximum = p.maximum().ok();
    let mut text = format!("{} monomial ideals with h = {h}\n", p.len());
    for (k, m) in p.elements.iter().enumerate() {
        let mark = if Some(k) == maximum { "  (maximum)" } else { "" };
        writeln!(text, "  [{k}] {m}{mark}").unwrap();
    }
    text.push_str("Hasse diagram, lower -> upper:\n");
    for &(lo, hi) in &p.hasse {
        writeln!(text, "  {lo} -> {hi}").unwrap();
    }
    if let Some(path) = &a.dot {
        fs::write(path, p.to_dot()).with_context(|| format!("cannot write {}", path.display()))?;
    }

    let mut checks = Vec::new();
    if a.verify {
        checks.push(Check::new("order is a partial order", p.is_partial_order()));
        checks.push(Check::new("unique maximum", maximum.is_some()));
        let tplus = p.t_plus_empty()?;
        checks.push(Check::with_detail(
            "maximum is the only ideal without positive significant arrows",
            maximum.is_some() && tplus == maximum.into_iter().collect::<Vec<_>>(),
            format!("ideals with empty T+: {tplus:?}"),
        ));
    }
    Ok(Report::new(text, &PosetReport { poset: p, maximum, checks: checks.clone() }, &checks))
}

// lexmost

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexmostReport {
    pub hilbert: HilbertFunction,
    pub lexmost: MonomialIdeal,
    pub checks: Vec<Check>,
}

pub fn lexmost(a: &Verified) -> Outcome {
    let g = a.inputs.grading().input()?;
    let h = a.inputs.hilbert(&g).input()?;
    let l = poset::lex_most(&h, &g)?;
    let text = format!("L_h = {l}\n");
    let mut checks = Vec::new();
    if a.verify {
        checks.push(Check::new("T+(L_h) is empty", arrows::positive_significant(&l, &g)?.is_empty()));
        checks.push(Check::new("L_h has Hilbert function h", l.hilbert_function(&g)? == h));
    }
    Ok(Report::new(text, &LexmostReport { hilbert: h, lexmost: l, checks: checks.clone() }, &checks))
}

// chain

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub start: MonomialIdeal,
    pub steps: Vec<ChainStep>,
    pub end: MonomialIdeal,
    pub checks: Vec<Check>,
}

pub fn chain_checks(m: &MonomialIdeal, g: &Grading, steps: &[ChainStep]) -> Result<Vec<Check>, Failure> {
    let mut checks = Vec::new();
    let ts = tangent::default_sweep_values();
    let end = steps.last().map_or(m, |s| &s.to);
    for (k, s) in steps.iter().enumerate() {
        let up = poset::order_geq(&s.to, &s.from, g)? && !poset::order_geq(&s.from, &s.to, g)?;
        checks.push(Check::new(format!("step {k} goes strictly up"), up));
        for (which, ideal) in [("start", &s.from), ("end", &s.to)] {
            let expect = arrows::all_arrows(ideal, g)?.significant().len();
            let dim = tangent::tangent_dimension(ideal, g, None, TMode::Symbolic)?;
            checks.push(Check::with_detail(
                format!("step {k} {which}: tangent dimension = |T|"),
                dim == expect,
                format!("{dim} != {expect}"),
            ));
        }
        let sweep = tangent::t_sweep(&s.from, g, Some(s.alpha.triple()), &ts)?;
        checks.push(Check::with_detail(
            format!("step {k}: tangent dimension constant along the curve"),
            sweep.is_constant(),
            format!("{sweep:?}"),
        ));
    }
    let lex = poset::lex_most(&m.hilbert_function(g)?, g)?;
    checks.push(Check::with_detail("chain ends at the lex-most ideal", *end == lex, format!("ends at {end}")));
    Ok(checks)
}

pub fn chain(a: &Verified) -> Outcome {
    let g = a.inputs.grading().input()?;
    let m = a.inputs.finite_ideal().input()?;
    let steps = poset::chain_to_lexmost(&m, &g)?;
    let mut text = format!("{m}\n");
    for s in &steps {
        writeln!(text, "  --{}--> {}", s.alpha, s.to).unwrap();
    }
    let checks = if a.verify { chain_checks(&m, &g, &steps)? } else { Vec::new() };
    let end = steps.last().map_or(m.clone(), |s| s.to.clone());
    Ok(Report::new(text, &ChainReport { start: m, steps, end, checks: checks.clone() }, &checks))
}

// tangent

#[derive(Args, Debug)]
pub struct TangentArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// Build the system at the edge ideal of this arrow instead of at M.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Values of t at which to compute the dimension, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub t: Vec<String>,
    /// Print every equation F(i,u,v).
    #[arg(long)]
    pub equations: bool,
    /// Compare dimensions with |T|, the reduced system and the syzygy oracle.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentSample {
    pub t: String,
    pub dimension: usize,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    pub ideal: MonomialIdeal,
    pub alpha: Option<(usize, u32, u32)>,
    pub arrows: usize,
    pub significant: usize,
    pub equation_count: usize,
    pub generic_rank: usize,
    pub generic_dimension: usize,
    pub reduced_count: usize,
    pub samples: Vec<TangentSample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemJson>,
    pub checks: Vec<Check>,
}

pub fn tangent(a: &TangentArgs) -> Outcome {
    let g = a.inputs.grading().input()?;
    let m = a.inputs.finite_ideal().input()?;
    let alpha = a.alpha.as_deref().map(parse_alpha).transpose().input()?;
    let ts = parse_rationals(&a.t).input()?;
    let sys = tangent::build_system(&m, &g, alpha, TMode::Symbolic)?;
    let rank = sys.rank();
    let dim = sys.dimension();
    let reduced = sys.reduced_system();
    let mut text = match alpha {
        Some((i, u, v)) => format!("tangent space at the edge ideal of ({i},{u},{v}) on {m}\n"),
        None => format!("tangent space at {m}\n"),
    };
    if let Some(e) = sys.edge() {
        writeln!(text, "sigma = {}", e.sigma()).unwrap();
    }
    writeln!(
        text,
        "arrows r = {}, equations {}, generic rank {rank}, dimension {dim}, |T| = {}",
        sys.variables().len(),
        sys.equations().len(),
        sys.significant_count()
    )
    .unwrap();
    writeln!(text, "reduced system: {} equations", reduced.equations().len()).unwrap();
    let mut samples = Vec::new();
    for t in &ts {
        let d = sys.with_mode(TMode::Numeric(t.clone())).dimension();
        writeln!(text, "t = {t}: dimension {d}").unwrap();
        samples.push(TangentSample { t: t.to_string(), dimension: d });
    }
    if a.equations {
        for eq in sys.equations() {
            writeln!(text, "  {}", sys.equation_string(eq)).unwrap();
        }
    }

    let mut checks = Vec::new();
    if a.verify {
        let sig = sys.significant_count();
        checks.push(Check::with_detail("generic dimension = |T|", dim == sig, format!("{dim} != {sig}")));
        for s in &samples {
            checks.push(Check::with_detail(
                format!("dimension at t = {} equals the generic one", s.t),
                s.dimension == dim,
                format!("{} != {dim}", s.dimension),
            ));
        }
        let rr = reduced.rank();
        checks.push(Check::with_detail("reduced system has full rank", rr == rank, format!("{rr} != {rank}")));
        let lv = sys.verify_leading_variables();
        checks.push(Check::with_detail(
            "leading variables are the insignificant arrows",
            lv.is_ok(),
            lv.err().unwrap_or_default(),
        ));
        let oracle_ts = if ts.is_empty() { vec![BigRational::from_integer(1.into())] } else { ts.clone() };
        for t in &oracle_ts {
            let od = tangent::oracle_dimension(&m, &g, alpha, t)?;
            checks.push(Check::with_detail(
                format!("syzygy oracle agrees at t = {t}"),
                od == dim,
                format!("{od} != {dim}"),
            ));
        }
    }
    let report = TangentReport {
        ideal: m,
        alpha,
        arrows: sys.variables().len(),
        significant: sys.significant_count(),
        equation_count: sys.equations().len(),
        generic_rank: rank,
        generic_dimension: dim,
        reduced_count: reduced.equations().len(),
        samples,
        system: a.equations.then(|| sys.to_json()),
        checks: checks.clone(),
    };
    Ok(Report::new(text, &report, &checks))
}

// chart

#[derive(Args, Debug)]
pub struct ChartArgs {
    #[command(flatten)]
    pub inputs: Inputs,
    /// Number of random points checked by --verify.
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[arg(long, env = "HILB2_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Check the symbolic identities and sample random points.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartOutput {
    pub chart: ChartJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ChartReport>,
}

pub fn chart(a: &ChartArgs) -> Outcome {
    let g = a.inputs.grading().input()?;
    let h = a.inputs.hilbert(&g).input()?;
    let c = chart::build_chart(&h, &g)?;
    let mut text = format!("L_h = {}, d = {}\n", c.lexmost(), c.d());
    let names: Vec<String> = (0..c.d()).map(|k| c.param_name(k)).collect();
    writeln!(text, "parameters: {}", names.join(" ")).unwrap();
    for i in 1..=c.g_polys().len() {
        writeln!(text, "g_{i} = {}", c.display_g(i)).unwrap();
    }
    for i in 0..c.f_polys().len() {
        writeln!(text, "f_{i} = {}", c.display_f(i)).unwrap();
    }
    let mut checks = Vec::new();
    let report = a.verify.then(|| c.verify(a.samples, a.seed));
    if let Some(r) = &report {
        checks.push(Check::with_detail(
            format!("{} random points (seed {}) and the origin", r.samples, r.seed),
            r.passed(),
            r.failures.join("; "),
        ));
        let arrows_d = arrows::all_arrows(c.lexmost(), &g)?.significant().len();
        let dim = tangent::tangent_dimension(c.lexmost(), &g, None, TMode::Symbolic)?;
        checks.push(Check::with_detail(
            "d = tangent dimension at L_h",
            c.d() == dim && dim == arrows_d,
            format!("d = {}, dim = {dim}", c.d()),
        ));
    }
    Ok(Report::new(text, &ChartOutput { chart: c.to_json(), report }, &checks))
}

// factor

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub gcd: Monomial,
    pub quotient: MonomialIdeal,
    pub space: FactorSpace,
}

impl FactorReport {
    pub fn line(&self) -> String {
        format!("X = {}, Q = {}", self.space, self.quotient)
    }
}

pub fn factor_report(m: &MonomialIdeal, g: &Grading) -> Result<FactorReport, Failure> {
    let (gcd, quotient) = m.factor_gcd();
    let space = classify_principal_factor(gcd.x, gcd.y, g)?;
    Ok(FactorReport { gcd, quotient, space })
}

pub fn factor(a: &Plain) -> Outcome {
    let g = a.inputs.grading().input()?;
    let m = a.inputs.ideal().input()?;
    let r = factor_report(&m, &g)?;
    Ok(Report::new(r.line() + "\n", &r, &[]))
}
