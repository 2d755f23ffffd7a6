//! Exhaustive scans over small graphs: family filters, isomorphism-class
//! enumeration, and the per-`n` maxima of `lambda_1` and edge count compared
//! with the matching construction.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::canon::{canonical_form, is_isomorphic};
use crate::cdv::classify_mu;
use crate::construct::{
    construct_cdv_extremal, construct_kr_extremal, construct_kst_extremal, decompose_apex_clique,
    recognize_residual, Residual,
};
use crate::generators::{complete, complete_bipartite, path};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::minors::has_minor;
use crate::spectral::{kr_lambda_lower_bound, kst_lambda_bound, lambda1, SpectralError};

/// Largest `n` that [`enumerate_graphs`] generates itself.
pub const MAX_ENUMERATION_N: usize = 7;

/// Slack allowed when comparing spectral radii of different graphs.
pub const LAMBDA_TOL: f64 = 1e-9;

/// A minor-closed family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    KrMinorFree { r: usize },
    KstMinorFree { s: usize, t: usize },
    /// `μ(G) <= m`, decidable for `1 <= m <= 4`.
    CdvAtMost { m: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), &'static str> {
        match *self {
            FamilySpec::KrMinorFree { r } if !(3..=MAX_VERTICES).contains(&r) => Err("r must be in 3..=64"),
            FamilySpec::KstMinorFree { s, t } if s < 2 || t < s => Err("need 2 <= s <= t"),
            FamilySpec::KstMinorFree { s, t } if s + t > MAX_VERTICES => Err("s + t must be at most 64"),
            FamilySpec::CdvAtMost { m } if !(1..=4).contains(&m) => Err("m must be in 1..=4"),
            _ => Ok(()),
        }
    }

    /// Short family name used in reports.
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::KrMinorFree { .. } => "kr",
            FamilySpec::KstMinorFree { .. } => "kst",
            FamilySpec::CdvAtMost { .. } => "cdv",
        }
    }

    /// Parameters as `key=value` pairs joined by `;`.
    pub fn params(&self) -> String {
        match *self {
            FamilySpec::KrMinorFree { r } => format!("r={r}"),
            FamilySpec::KstMinorFree { s, t } => format!("s={s};t={t}"),
            FamilySpec::CdvAtMost { m } => format!("m={m}"),
        }
    }

    /// The conjectured extremal graph on `n` vertices, when the parameters
    /// allow one. For `μ <= 1` this is the path.
    pub fn construction(&self, n: usize) -> Option<Graph> {
        match *self {
            FamilySpec::KrMinorFree { r } => construct_kr_extremal(n, r).ok(),
            FamilySpec::KstMinorFree { s, t } => construct_kst_extremal(n, s, t).ok(),
            FamilySpec::CdvAtMost { m: 1 } => (1..=MAX_VERTICES).contains(&n).then(|| path(n)),
            FamilySpec::CdvAtMost { m } => construct_cdv_extremal(n, m).ok(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::KrMinorFree { r } => write!(f, "K{r}-minor-free"),
            FamilySpec::KstMinorFree { s, t } => write!(f, "K{s},{t}-minor-free"),
            FamilySpec::CdvAtMost { m } => write!(f, "mu<={m}"),
        }
    }
}

/// Membership of `g` in the family. For `CdvAtMost` with `m >= 5` graphs of
/// class `>=5` are rejected, since their `μ` is not determined here.
pub fn family_filter(family: FamilySpec, g: &Graph) -> bool {
    match family {
        FamilySpec::KrMinorFree { r } => r > g.n() || has_minor(&complete(r), g).is_none(),
        FamilySpec::KstMinorFree { s, t } => s + t > g.n() || has_minor(&complete_bipartite(s, t), g).is_none(),
        FamilySpec::CdvAtMost { m } => classify_mu(g).at_most(m as u32),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchError {
    /// `n` beyond what internal enumeration supports.
    TooLarge(usize),
    /// A graph in the stream has the wrong vertex count.
    VertexCount { expected: usize, found: usize },
    NullGraph,
    /// No graph in the source belongs to the family.
    EmptyFamily,
    Family(&'static str),
    Spectral(SpectralError),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooLarge(n) => {
                write!(f, "n = {n} exceeds internal enumeration (max {MAX_ENUMERATION_N}); supply a graph6 stream")
            }
            SearchError::VertexCount { expected, found } => {
                write!(f, "expected graphs on {expected} vertices, found one on {found}")
            }
            SearchError::NullGraph => write!(f, "searches need n >= 1"),
            SearchError::EmptyFamily => write!(f, "no graph in the source belongs to the family"),
            SearchError::Family(msg) => write!(f, "invalid family: {msg}"),
            SearchError::Spectral(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SearchError {}

impl From<SpectralError> for SearchError {
    fn from(e: SpectralError) -> Self {
        SearchError::Spectral(e)
    }
}

/// All isomorphism classes on `n + 1` vertices, from all classes on `n`:
/// every graph is a smaller one plus a vertex, so adding a vertex with each
/// possible neighbourhood and deduplicating by canonical form is complete.
pub fn extend_classes(classes: &[Graph]) -> Vec<Graph> {
    let mut out = BTreeSet::new();
    for g in classes {
        let n = g.n();
        assert!(n < MAX_VERTICES, "cannot extend past {MAX_VERTICES} vertices");
        let base = g.disjoint_union(&complete(1)).expect("n < 64");
        for bits in 0..1u64 << n {
            let mut h = base.clone();
            for v in VertexSet::from_bits(bits) {
                h.link(v, n);
            }
            out.insert(canonical_form(&h));
        }
    }
    out.into_iter().collect()
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, in a fixed order. Counts for `n = 0..=7` are
/// 1, 1, 2, 4, 11, 34, 156, 1044.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, SearchError> {
    if n > MAX_ENUMERATION_N {
        return Err(SearchError::TooLarge(n));
    }
    let mut classes = alloc::vec![complete(0)];
    for _ in 0..n {
        classes = extend_classes(&classes);
    }
    if connected_only {
        classes.retain(Graph::is_connected);
    }
    Ok(classes)
}

/// Key used to order candidate maximisers: `lambda` is bucketed to
/// [`LAMBDA_TOL`] so near-ties fall through to the graph6 code.
fn lambda_key(lambda: f64) -> i64 {
    libm::round(lambda / LAMBDA_TOL) as i64
}

/// Whether `(value_a, code_a)` beats `(value_b, code_b)`: larger value,
/// then smaller code.
fn beats<K: Ord>(a: (K, &str), b: (K, &str)) -> bool {
    match a.0.cmp(&b.0) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.1 < b.1,
    }
}

/// Running maxima over part of a graph stream. Accumulators over disjoint
/// parts combine with [`SearchAccumulator::merge`], which is associative
/// and commutative, so any chunking gives the same result.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchAccumulator {
    family: FamilySpec,
    n: usize,
    /// Upper bound on `lambda_1` for the family, when one is known.
    bound: Option<f64>,
    best_lambda: Option<(f64, String)>,
    best_edges: Option<(usize, String)>,
    bound_violations: usize,
    scanned: usize,
    members: usize,
}

impl SearchAccumulator {
    pub fn new(family: FamilySpec, n: usize) -> Result<Self, SearchError> {
        family.validate().map_err(SearchError::Family)?;
        if n == 0 {
            return Err(SearchError::NullGraph);
        }
        let bound = match family {
            FamilySpec::KstMinorFree { s, t } if n >= s => Some(kst_lambda_bound(n as u64, s as u64, t as u64)?),
            _ => None,
        };
        Ok(SearchAccumulator {
            family,
            n,
            bound,
            best_lambda: None,
            best_edges: None,
            bound_violations: 0,
            scanned: 0,
            members: 0,
        })
    }

    pub fn observe(&mut self, g: &Graph) -> Result<(), SearchError> {
        if g.n() != self.n {
            return Err(SearchError::VertexCount { expected: self.n, found: g.n() });
        }
        self.scanned += 1;
        if !family_filter(self.family, g) {
            return Ok(());
        }
        self.members += 1;
        let lambda = lambda1(g)?;
        let code = g.to_graph6();
        if self.bound.is_some_and(|b| lambda > b + LAMBDA_TOL) {
            self.bound_violations += 1;
        }
        self.offer_lambda(lambda, code.clone());
        self.offer_edges(g.edge_count(), code);
        Ok(())
    }

    fn offer_lambda(&mut self, lambda: f64, code: String) {
        let better = match &self.best_lambda {
            None => true,
            Some((l, c)) => beats((lambda_key(lambda), &code), (lambda_key(*l), c)),
        };
        if better {
            self.best_lambda = Some((lambda, code));
        }
    }

    fn offer_edges(&mut self, edges: usize, code: String) {
        let better = match &self.best_edges {
            None => true,
            Some((e, c)) => beats((edges, &code), (*e, c)),
        };
        if better {
            self.best_edges = Some((edges, code));
        }
    }

    /// Combines two accumulators for the same family and `n`.
    pub fn merge(mut self, other: SearchAccumulator) -> SearchAccumulator {
        debug_assert_eq!((self.family, self.n), (other.family, other.n));
        self.scanned += other.scanned;
        self.members += other.members;
        self.bound_violations += other.bound_violations;
        if let Some((l, c)) = other.best_lambda {
            self.offer_lambda(l, c);
        }
        if let Some((e, c)) = other.best_edges {
            self.offer_edges(e, c);
        }
        self
    }

    /// Closes the scan and compares the maxima with the construction.
    pub fn finish(self) -> Result<SearchReport, SearchError> {
        let (Some((max_lambda, argmax_graph6)), Some((max_edges, edge_argmax_graph6))) =
            (self.best_lambda, self.best_edges)
        else {
            return Err(SearchError::EmptyFamily);
        };
        let construction = match self.family.construction(self.n) {
            None => None,
            Some(g) => Some(ConstructionSummary {
                lambda: lambda1(&g)?,
                edges: g.edge_count(),
                graph6: g.to_graph6(),
                member: family_filter(self.family, &g),
            }),
        };
        let lambda_match = construction
            .as_ref()
            .is_some_and(|c| c.member && libm::fabs(c.lambda - max_lambda) <= LAMBDA_TOL);
        Ok(SearchReport {
            n: self.n,
            family: self.family,
            max_lambda,
            argmax_graph6,
            max_edges,
            edge_argmax_graph6,
            construction,
            lambda_match,
            lambda_bound: self.bound,
            bound_violations: self.bound_violations,
            graphs_scanned: self.scanned,
            members: self.members,
        })
    }
}

/// The construction's values for the report.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionSummary {
    pub lambda: f64,
    pub edges: usize,
    pub graph6: String,
    /// Whether the construction passes the family filter.
    pub member: bool,
}

/// Maxima of a scan together with the matching construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub n: usize,
    pub family: FamilySpec,
    pub max_lambda: f64,
    /// Smallest graph6 code among members whose `lambda` is within
    /// [`LAMBDA_TOL`] of the maximum bucket.
    pub argmax_graph6: String,
    pub max_edges: usize,
    pub edge_argmax_graph6: String,
    pub construction: Option<ConstructionSummary>,
    /// The construction is a member and its `lambda` is within
    /// [`LAMBDA_TOL`] of `max_lambda`.
    pub lambda_match: bool,
    /// `kst_lambda_bound`, for `K_{s,t}`-minor-free families.
    pub lambda_bound: Option<f64>,
    /// Members whose `lambda` exceeds `lambda_bound` by more than
    /// [`LAMBDA_TOL`].
    pub bound_violations: usize,
    pub graphs_scanned: usize,
    pub members: usize,
}

/// Scans `graphs`, all on `n` vertices, for the family's largest spectral
/// radius and largest edge count. The report carries both maxima.
pub fn search_max_lambda<I>(family: FamilySpec, n: usize, graphs: I) -> Result<SearchReport, SearchError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut acc = SearchAccumulator::new(family, n)?;
    for g in graphs {
        acc.observe(&g)?;
    }
    acc.finish()
}

/// Same scan as [`search_max_lambda`]; named for callers after the edge
/// maximum.
pub fn search_max_edges<I>(family: FamilySpec, n: usize, graphs: I) -> Result<SearchReport, SearchError>
where
    I: IntoIterator<Item = Graph>,
{
    search_max_lambda(family, n, graphs)
}

/// Scan over the internally enumerated classes on `n <= 7` vertices.
pub fn search_enumerated(family: FamilySpec, n: usize) -> Result<SearchReport, SearchError> {
    search_max_lambda(family, n, enumerate_graphs(n, false)?)
}

/// Comparison of a graph with the equality case of the `K_{s,t}` bound:
/// `K_{s-1}` joined to disjoint copies of `K_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityStructure {
    /// Number of vertices adjacent to all others.
    pub universal: usize,
    /// Type of the graph left after removing `s-1` universal vertices, if
    /// there are that many.
    pub residual: Option<Residual>,
    /// `n ≡ s-1 (mod t)`.
    pub congruent: bool,
    pub holds: bool,
}

pub fn equality_structure(g: &Graph, s: usize, t: usize) -> EqualityStructure {
    let (apex, _) = decompose_apex_clique(g);
    let residual = (apex.len() + 1 >= s).then(|| {
        let k: VertexSet = apex.iter().take(s - 1).collect();
        recognize_residual(&g.induced(g.vertices().difference(k)))
    });
    let congruent = g.n() + 1 >= s && (g.n() + 1 - s).is_multiple_of(t);
    let holds = congruent && residual == Some(Residual::DisjointCliques(t));
    EqualityStructure { universal: apex.len(), residual, congruent, holds }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub member: bool,
    /// `None` for the null graph.
    pub lambda: Option<f64>,
    /// `kst_lambda_bound(n, s, t)` for `K_{s,t}`-minor-free families with
    /// `n >= s`.
    pub upper_bound: Option<f64>,
    /// `sqrt((r-2)(n-r+2))`, attained by a `K_r`-minor-free graph, for
    /// `n >= r-2`.
    pub extremal_lower_bound: Option<f64>,
    /// `K_{s,t}` families only.
    pub equality: Option<EqualityStructure>,
    /// `g` is isomorphic to the family's construction on `n` vertices.
    pub matches_construction: bool,
}

pub fn verify_membership(g: &Graph, family: FamilySpec) -> Result<MembershipReport, SearchError> {
    family.validate().map_err(SearchError::Family)?;
    let n = g.n();
    let lambda = if n == 0 { None } else { Some(lambda1(g)?) };
    let (upper_bound, extremal_lower_bound, equality) = match family {
        FamilySpec::KstMinorFree { s, t } => {
            let b = if n >= s { Some(kst_lambda_bound(n as u64, s as u64, t as u64)?) } else { None };
            (b, None, Some(equality_structure(g, s, t)))
        }
        FamilySpec::KrMinorFree { r } => (None, kr_lambda_lower_bound(n as u64, r as u64).ok(), None),
        FamilySpec::CdvAtMost { .. } => (None, None, None),
    };
    Ok(MembershipReport {
        member: family_filter(family, g),
        lambda,
        upper_bound,
        extremal_lower_bound,
        equality,
        matches_construction: family.construction(n).is_some_and(|c| is_isomorphic(&c, g)),
    })
}
