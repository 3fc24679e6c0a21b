//! Graph enumeration, per-graph analysis and theorem verification.
//!
//! Every verdict is computed twice: once algebraically (local cohomology
//! and ideal equality) and once from the graph alone ([`criteria`]).
//! Disagreements are collected as mismatches.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{CohomologyWitness, LocalCohomology};
use crate::cover::is_standard_graded;
use crate::error::{Error, Result};
use crate::graph::{
    criteria, edge_pairs, ideal_of_graph, symbolic_power, Criteria, Diameter, Graph, GraphClass,
};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::{Face, SimplicialComplex};

pub const DEFAULT_SAMPLE: usize = 500;

fn has_isolated(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut touched = 0u32;
    for (k, &(a, b)) in pairs.iter().enumerate() {
        if mask & (1 << k) != 0 {
            touched |= (1 << (a - 1)) | (1 << (b - 1));
        }
    }
    touched.count_ones() as usize != n
}

/// All labeled graphs on `{1..n}` without isolated vertices, by ascending
/// edge mask.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(3..=7).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "exhaustive enumeration supports 3 <= n <= 7, got {n}"
        )));
    }
    let pairs = edge_pairs(n);
    let limit = 1u64 << pairs.len();
    Ok((1..limit).filter_map(move |mask| {
        if has_isolated(n, &pairs, mask) {
            None
        } else {
            Some(Graph::from_edge_mask(n, mask).expect("mask filtered"))
        }
    }))
}

/// `count` graphs drawn uniformly (with replacement) from the labeled
/// graphs on `{1..n}` without isolated vertices.
pub fn sample_graphs(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if !(3..=11).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "sampling supports 3 <= n <= 11, got {n}"
        )));
    }
    let pairs = edge_pairs(n);
    let full = if pairs.len() == 64 {
        u64::MAX
    } else {
        (1u64 << pairs.len()) - 1
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mask = rng.gen::<u64>() & full;
        if mask != 0 && !has_isolated(n, &pairs, mask) {
            out.push(Graph::from_edge_mask(n, mask)?);
        }
    }
    Ok(out)
}

/// The pure `(n-3)`-dimensional complex whose facets are the complements
/// of the edges of `g`.
pub fn complement_facet_complex(g: &Graph) -> SimplicialComplex {
    let n = g.n();
    let all = ((1u64 << n) - 1) as u32;
    SimplicialComplex::from_faces(
        n,
        g.edges()
            .iter()
            .map(|&(a, b)| Face(all & !Face::from_vertices(&[a, b]).0)),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEcho {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub mask: Option<u64>,
}

impl From<&Graph> for GraphEcho {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().to_vec(),
            mask: g.edge_mask(),
        }
    }
}

/// What the graph alone predicts for one power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub cm_symbolic: bool,
    pub cm_ordinary: bool,
    pub powers_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerRecord {
    pub m: u32,
    pub krull_dim: usize,
    pub depth_symbolic: usize,
    pub depth_ordinary: usize,
    pub cm_symbolic: bool,
    pub cm_ordinary: bool,
    pub powers_equal: bool,
    /// `None` for `m = 1`, where no criterion applies.
    pub predicted: Option<Prediction>,
    pub symbolic_witness: Option<CohomologyWitness>,
    pub ordinary_witness: Option<CohomologyWitness>,
    /// A minimal generator of `I^(m)` outside `I^m`, as an exponent vector.
    pub inequality_witness: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphEcho,
    pub n: usize,
    pub class: GraphClass,
    pub diameter: Diameter,
    pub criteria: Criteria,
    pub powers: Vec<PowerRecord>,
    pub mismatches: Vec<String>,
}

fn first_outside(symbolic: &MonomialIdeal, ordinary: &MonomialIdeal) -> Option<Monomial> {
    symbolic
        .generators()
        .iter()
        .find(|g| !ordinary.contains(g))
        .cloned()
}

/// Every algebraic verdict for `m = 1..=m_max` next to its prediction.
pub fn analyze(g: &Graph, m_max: u32) -> Result<AnalysisReport> {
    if m_max < 2 {
        return Err(Error::OutOfRange(format!(
            "m_max must be >= 2, got {m_max}"
        )));
    }
    let crit = criteria(g, 2)?;
    let base = ideal_of_graph(g);
    let mut ordinary = MonomialIdeal::unit(g.ambient());
    let mut powers = Vec::new();
    let mut mismatches = Vec::new();
    for m in 1..=m_max {
        ordinary = ordinary.multiply(&base)?;
        let symbolic = symbolic_power(g, m);
        let sym = LocalCohomology::new(&symbolic)?.depth_report();
        let ord = LocalCohomology::new(&ordinary)?.depth_report();
        let witness = first_outside(&symbolic, &ordinary);
        let rec = PowerRecord {
            m,
            krull_dim: sym.krull_dim,
            depth_symbolic: sym.depth,
            depth_ordinary: ord.depth,
            cm_symbolic: sym.is_cohen_macaulay(),
            cm_ordinary: ord.is_cohen_macaulay(),
            powers_equal: witness.is_none(),
            predicted: (m >= 2).then(|| Prediction {
                cm_symbolic: crit.cm_symbolic(m),
                cm_ordinary: crit.cm_ordinary(m),
                powers_equal: crit.powers_equal(m),
            }),
            symbolic_witness: sym.witness,
            ordinary_witness: ord.witness,
            inequality_witness: witness.map(|w| w.exponents().to_vec()),
        };
        if rec.cm_ordinary && !rec.powers_equal {
            mismatches.push(format!(
                "m={m}: I^m is Cohen-Macaulay but differs from I^(m)"
            ));
        }
        if let Some(p) = rec.predicted {
            let checks = [
                (TheoremId::cm_symbolic(m), rec.cm_symbolic, p.cm_symbolic),
                (TheoremId::powers_equal(m), rec.powers_equal, p.powers_equal),
                (TheoremId::cm_ordinary(m), rec.cm_ordinary, p.cm_ordinary),
            ];
            for (id, alg, pred) in checks {
                if alg != pred {
                    mismatches.push(format!("m={m}: {id}: algebraic {alg}, predicted {pred}"));
                }
            }
        }
        powers.push(rec);
    }
    Ok(AnalysisReport {
        graph: GraphEcho::from(g),
        n: g.n(),
        class: g.classify(),
        diameter: g.diameter(),
        criteria: crit,
        powers,
        mismatches,
    })
}

/// The verifiable graph-theoretic characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "CM-SYM-2")]
    CmSym2,
    #[serde(rename = "CM-SYM-HIGH")]
    CmSymHigh,
    #[serde(rename = "EQ-2")]
    Eq2,
    #[serde(rename = "EQ-HIGH")]
    EqHigh,
    #[serde(rename = "CM-ORD-2")]
    CmOrd2,
    #[serde(rename = "CM-ORD-HIGH")]
    CmOrdHigh,
    #[serde(rename = "COVER-STD")]
    CoverStd,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::CmSym2,
        TheoremId::CmSymHigh,
        TheoremId::Eq2,
        TheoremId::EqHigh,
        TheoremId::CmOrd2,
        TheoremId::CmOrdHigh,
        TheoremId::CoverStd,
    ];

    fn cm_symbolic(m: u32) -> Self {
        if m == 2 {
            Self::CmSym2
        } else {
            Self::CmSymHigh
        }
    }

    fn powers_equal(m: u32) -> Self {
        if m == 2 {
            Self::Eq2
        } else {
            Self::EqHigh
        }
    }

    fn cm_ordinary(m: u32) -> Self {
        if m == 2 {
            Self::CmOrd2
        } else {
            Self::CmOrdHigh
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::CmSym2 => "CM-SYM-2",
            Self::CmSymHigh => "CM-SYM-HIGH",
            Self::Eq2 => "EQ-2",
            Self::EqHigh => "EQ-HIGH",
            Self::CmOrd2 => "CM-ORD-2",
            Self::CmOrdHigh => "CM-ORD-HIGH",
            Self::CoverStd => "COVER-STD",
        }
    }

    /// The powers this theorem is checked at when none are given.
    pub fn default_powers(self) -> Vec<u32> {
        match self {
            Self::CmSym2 | Self::Eq2 | Self::CmOrd2 => vec![2],
            Self::CmSymHigh | Self::EqHigh | Self::CmOrdHigh | Self::CoverStd => vec![3],
        }
    }

    fn check_power(self, m: u32) -> Result<()> {
        let ok = match self {
            Self::CmSym2 | Self::Eq2 | Self::CmOrd2 => m == 2,
            Self::CmSymHigh | Self::EqHigh | Self::CmOrdHigh => m >= 3,
            Self::CoverStd => m >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "{self} cannot be checked at m = {m}"
            )))
        }
    }

    /// Algebraic verdict for `g` at power `m` (for COVER-STD, `m` is the
    /// largest power compared).
    pub fn algebraic(self, g: &Graph, m: u32) -> Result<bool> {
        let cm = |i: &MonomialIdeal| -> Result<bool> {
            Ok(LocalCohomology::new(i)?.depth_report().is_cohen_macaulay())
        };
        match self {
            Self::CmSym2 | Self::CmSymHigh => cm(&symbolic_power(g, m)),
            Self::Eq2 | Self::EqHigh => {
                Ok(symbolic_power(g, m).equals(&ideal_of_graph(g).power(m)))
            }
            Self::CmOrd2 | Self::CmOrdHigh => cm(&ideal_of_graph(g).power(m)),
            Self::CoverStd => is_standard_graded(&complement_facet_complex(g), m),
        }
    }

    /// Combinatorial verdict.
    pub fn predicted(self, g: &Graph) -> Result<bool> {
        let c = criteria(g, 2)?;
        Ok(match self {
            Self::CmSym2 => c.cm_sym2,
            Self::CmSymHigh => c.cm_sym_high,
            Self::Eq2 => c.eq2,
            Self::EqHigh => c.eq_high,
            Self::CmOrd2 => c.cm_ord2,
            Self::CmOrdHigh => c.cm_ord_high,
            Self::CoverStd => {
                let n = g.n();
                n == 3
                    || (n == 4
                        && matches!(
                            g.classify(),
                            GraphClass::Path | GraphClass::Cycle | GraphClass::TwoDisjointEdges
                        ))
            }
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub theorem: TheoremId,
    pub n_min: usize,
    pub n_max: usize,
    /// Empty means [`TheoremId::default_powers`].
    pub powers: Vec<u32>,
    /// Graphs per `n` drawn at random. `None` enumerates exhaustively for
    /// `n <= 5` and samples [`DEFAULT_SAMPLE`] graphs above.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(theorem: TheoremId, n_min: usize, n_max: usize) -> Self {
        Self {
            theorem,
            n_min,
            n_max,
            powers: vec![],
            sample: None,
            seed: 0,
        }
    }

    pub fn powers(mut self, powers: &[u32]) -> Self {
        self.powers = powers.to_vec();
        self
    }

    pub fn sample(mut self, count: usize, seed: u64) -> Self {
        self.sample = Some(count);
        self.seed = seed;
        self
    }
}

/// The graphs examined for size `n` under `sample`.
pub fn graphs_for(n: usize, sample: Option<usize>, seed: u64) -> Result<Vec<Graph>> {
    match sample {
        Some(count) => sample_graphs(n, count, seed),
        None if n >= 6 => sample_graphs(n, DEFAULT_SAMPLE, seed),
        None => Ok(enumerate_graphs(n)?.collect()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub n: usize,
    pub mask: Option<u64>,
    pub m: u32,
    pub algebraic: bool,
    pub predicted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph: GraphEcho,
    pub theorem: TheoremId,
    pub m: u32,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub theorem: TheoremId,
    pub n_min: usize,
    pub n_max: usize,
    pub powers: Vec<u32>,
    pub sampled: Option<usize>,
    pub seed: u64,
    pub graphs_examined: usize,
    pub verdicts: Vec<Verdict>,
    pub mismatches: Vec<Mismatch>,
    /// Wall time; left out of serialized output so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CensusResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares algebraic and combinatorial verdicts on every graph in range.
pub fn verify(cfg: &VerifyConfig) -> Result<CensusResult> {
    let start = Instant::now();
    if cfg.n_min > cfg.n_max {
        return Err(Error::OutOfRange(format!(
            "empty range n = {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    let powers = if cfg.powers.is_empty() {
        cfg.theorem.default_powers()
    } else {
        cfg.powers.clone()
    };
    for &m in &powers {
        cfg.theorem.check_power(m)?;
    }
    let mut graphs = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        graphs.extend(graphs_for(n, cfg.sample, cfg.seed)?);
    }
    let theorem = cfg.theorem;
    let rows: Vec<Result<Vec<Verdict>>> = graphs
        .par_iter()
        .map(|g| {
            let predicted = theorem.predicted(g)?;
            powers
                .iter()
                .map(|&m| {
                    Ok(Verdict {
                        n: g.n(),
                        mask: g.edge_mask(),
                        m,
                        algebraic: theorem.algebraic(g, m)?,
                        predicted,
                    })
                })
                .collect()
        })
        .collect();
    let mut verdicts = Vec::new();
    let mut mismatches = Vec::new();
    for (g, row) in graphs.iter().zip(rows) {
        for v in row? {
            if v.algebraic != v.predicted {
                mismatches.push(Mismatch {
                    graph: GraphEcho::from(g),
                    theorem,
                    m: v.m,
                    details: format!("algebraic {}, predicted {}", v.algebraic, v.predicted),
                });
            }
            verdicts.push(v);
        }
    }
    Ok(CensusResult {
        theorem,
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        powers,
        sampled: cfg.sample.or((cfg.n_max >= 6).then_some(DEFAULT_SAMPLE)),
        seed: cfg.seed,
        graphs_examined: graphs.len(),
        verdicts,
        mismatches,
        elapsed: start.elapsed(),
    })
}

/// Analyses every graph for one `n`, in enumeration order.
pub fn census(
    n: usize,
    m_max: u32,
    sample: Option<usize>,
    seed: u64,
) -> Result<Vec<AnalysisReport>> {
    let graphs = graphs_for(n, sample, seed)?;
    graphs.par_iter().map(|g| analyze(g, m_max)).collect()
}

/// One CSV row per `(graph, m)`.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub mask: Option<u64>,
    pub edges: String,
    pub class: GraphClass,
    pub diameter: String,
    pub m: u32,
    pub cm_symbolic: bool,
    pub cm_ordinary: bool,
    pub powers_equal: bool,
    pub pred_cm_symbolic: Option<bool>,
    pub pred_cm_ordinary: Option<bool>,
    pub pred_powers_equal: Option<bool>,
    pub cm_sym2: bool,
    pub cm_sym_high: bool,
    pub eq2: bool,
    pub eq_high: bool,
    pub cm_ord2: bool,
    pub cm_ord_high: bool,
    pub mismatch: bool,
}

pub fn census_rows(reports: &[AnalysisReport]) -> Vec<CensusRow> {
    let mut rows = Vec::new();
    for r in reports {
        let edges = r
            .graph
            .edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(" ");
        for p in &r.powers {
            let prefix = format!("m={}:", p.m);
            rows.push(CensusRow {
                n: r.n,
                mask: r.graph.mask,
                edges: edges.clone(),
                class: r.class,
                diameter: r.diameter.to_string(),
                m: p.m,
                cm_symbolic: p.cm_symbolic,
                cm_ordinary: p.cm_ordinary,
                powers_equal: p.powers_equal,
                pred_cm_symbolic: p.predicted.map(|x| x.cm_symbolic),
                pred_cm_ordinary: p.predicted.map(|x| x.cm_ordinary),
                pred_powers_equal: p.predicted.map(|x| x.powers_equal),
                cm_sym2: r.criteria.cm_sym2,
                cm_sym_high: r.criteria.cm_sym_high,
                eq2: r.criteria.eq2,
                eq_high: r.criteria.eq_high,
                cm_ord2: r.criteria.cm_ord2,
                cm_ord_high: r.criteria.cm_ord_high,
                mismatch: r.mismatches.iter().any(|s| s.starts_with(&prefix)),
            });
        }
    }
    rows
}

pub fn write_census_csv<W: std::io::Write>(
    reports: &[AnalysisReport],
    out: W,
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in census_rows(reports) {
        w.serialize(row)?;
    }
    w.flush()
}
