//! The extremal constructions for the three minor-closed families, and the
//! structural recognisers used to check a graph against them.

use alloc::vec::Vec;
use core::fmt;

use crate::generators::{complete, copies, empty, path};
use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    /// A parameter outside the construction's range; the message names it.
    Parameter(&'static str),
    Graph(GraphError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Parameter(msg) => write!(f, "invalid parameters: {msg}"),
            ConstructionError::Graph(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<GraphError> for ConstructionError {
    fn from(e: GraphError) -> Self {
        ConstructionError::Graph(e)
    }
}

/// Parameters of one of the extremal constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `K_{r-2}` joined to an independent set of size `n-r+2`.
    Kr { n: usize, r: usize },
    /// `K_{s-1}` joined to `k K_t + K_p`, where `n - s + 1 = k t + p`.
    Kst { n: usize, s: usize, t: usize },
    /// `K_{m-1}` joined to a path on `n-m+1` vertices.
    Cdv { n: usize, m: usize },
}

impl Construction {
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let n = match *self {
            Construction::Kr { n, r } => {
                if r < 3 {
                    return Err(ConstructionError::Parameter("r must be at least 3"));
                }
                if n + 1 < r {
                    return Err(ConstructionError::Parameter("n must be at least r-1"));
                }
                n
            }
            Construction::Kst { n, s, t } => {
                if s < 2 || t < s {
                    return Err(ConstructionError::Parameter("need 2 <= s <= t"));
                }
                if n < s {
                    return Err(ConstructionError::Parameter("n must be at least s"));
                }
                n
            }
            Construction::Cdv { n, m } => {
                if m < 2 {
                    return Err(ConstructionError::Parameter("m must be at least 2"));
                }
                if n < m {
                    return Err(ConstructionError::Parameter("n must be at least m"));
                }
                n
            }
        };
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n).into());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        match *self {
            Construction::Kr { n, .. } | Construction::Kst { n, .. } | Construction::Cdv { n, .. } => n,
        }
    }

    /// `(k, p)` with `n - s + 1 = k t + p`, for the `K_{s,t}` construction.
    pub fn kst_split(n: usize, s: usize, t: usize) -> (usize, usize) {
        let rest = n + 1 - s;
        (rest / t, rest % t)
    }

    pub fn build(&self) -> Result<Graph, ConstructionError> {
        self.validate()?;
        let g = match *self {
            Construction::Kr { n, r } => complete(r - 2).join(&empty(n + 2 - r))?,
            Construction::Kst { n, s, t } => {
                let (k, p) = Self::kst_split(n, s, t);
                let residual = copies(&complete(t), k).disjoint_union(&complete(p))?;
                complete(s - 1).join(&residual)?
            }
            Construction::Cdv { n, m } => complete(m - 1).join(&path(n + 1 - m))?,
        };
        Ok(g)
    }

    /// Closed-form edge count of [`Construction::build`].
    pub fn edge_count(&self) -> Result<usize, ConstructionError> {
        self.validate()?;
        Ok(match *self {
            Construction::Kr { n, r } => (r - 2) * (n + 2 - r) + (r - 2) * (r - 3) / 2,
            Construction::Kst { n, s, t } => {
                let (k, p) = Self::kst_split(n, s, t);
                (s - 1) * (n + 1 - s)
                    + (s - 1) * (s - 2) / 2
                    + k * t * (t - 1) / 2
                    + p * p.saturating_sub(1) / 2
            }
            Construction::Cdv { n, m } => (m - 1) * (n + 1 - m) + (m - 1) * (m - 2) / 2 + (n - m),
        })
    }
}

pub fn construct_kr_extremal(n: usize, r: usize) -> Result<Graph, ConstructionError> {
    Construction::Kr { n, r }.build()
}

pub fn construct_kst_extremal(n: usize, s: usize, t: usize) -> Result<Graph, ConstructionError> {
    Construction::Kst { n, s, t }.build()
}

pub fn construct_cdv_extremal(n: usize, m: usize) -> Result<Graph, ConstructionError> {
    Construction::Cdv { n, m }.build()
}

/// Splits off the universal vertices: returns the set `K` of vertices of
/// degree `n-1` and the graph induced on the rest. For `K_n` this is all of
/// `V` and the null graph.
pub fn decompose_apex_clique(g: &Graph) -> (VertexSet, Graph) {
    let n = g.n();
    let apex: VertexSet = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    let rest = g.vertices().difference(apex);
    (apex, g.induced(rest))
}

/// Structural type of the graph left after removing an apex clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Residual {
    /// No edges (including the null graph).
    Independent,
    /// Every component is a complete graph on the same `t >= 2` vertices.
    /// Checked before [`Residual::DisjointPaths`], so `k K_2` lands here.
    DisjointCliques(usize),
    /// A forest of paths with at least one edge.
    DisjointPaths,
    Other,
}

/// Size of the common clique when every component of `h` is a complete graph
/// on the same number of vertices.
pub fn uniform_clique_size(h: &Graph) -> Option<usize> {
    let comps = h.components();
    let t = comps.first()?.len();
    comps
        .iter()
        .all(|&c| c.len() == t && c.iter().all(|v| h.neighbors(v) == c.difference(VertexSet::singleton(v))))
        .then_some(t)
}

pub fn is_path_forest(h: &Graph) -> bool {
    h.max_degree() <= 2 && h.is_forest()
}

pub fn recognize_residual(h: &Graph) -> Residual {
    if h.edge_count() == 0 {
        return Residual::Independent;
    }
    if let Some(t) = uniform_clique_size(h) {
        return Residual::DisjointCliques(t);
    }
    if is_path_forest(h) {
        return Residual::DisjointPaths;
    }
    Residual::Other
}

/// Component sizes of `h`, largest first. Handy for reporting residuals.
pub fn component_sizes(h: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> = h.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
