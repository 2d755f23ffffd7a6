//! Spectral radius and Perron vector of the adjacency matrix, and the
//! closed-form bounds on it.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

/// Residual target used when callers have no preference.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Hard cap on power-iteration steps per component.
pub const MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    NullGraph,
    NoConvergence { iterations: usize, residual: f64 },
    /// Tolerance that is not a positive finite number.
    BadTolerance(f64),
    /// A vector that is empty, all zero, or of the wrong length.
    BadVector,
    /// A rewiring that removes a non-edge, adds an existing edge, or repeats
    /// a pair.
    BadRewiring(usize, usize),
    NotRegular,
    EmptyPart,
    Parameter(&'static str),
    Graph(crate::graph::GraphError),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NullGraph => write!(f, "graph has no vertices"),
            SpectralError::NoConvergence { iterations, residual } => {
                write!(f, "no convergence after {iterations} iterations (residual {residual:e})")
            }
            SpectralError::BadTolerance(t) => write!(f, "tolerance {t} is not positive"),
            SpectralError::BadVector => write!(f, "vector is empty, zero, or of the wrong length"),
            SpectralError::BadRewiring(u, v) => write!(f, "invalid rewiring at pair {u}-{v}"),
            SpectralError::NotRegular => write!(f, "first graph is not regular"),
            SpectralError::EmptyPart => write!(f, "both sides of the join need a vertex"),
            SpectralError::Parameter(msg) => write!(f, "invalid parameters: {msg}"),
            SpectralError::Graph(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SpectralError {}

/// Largest adjacency eigenvalue together with a nonnegative eigenvector
/// scaled so that its largest entry is exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub lambda: f64,
    pub vector: Vec<f64>,
    /// `max_v |(A x)_v - lambda x_v|` for the reported vector.
    pub residual: f64,
    pub iterations: usize,
    /// First vertex whose entry equals 1.
    pub max_vertex: usize,
}

impl EigenResult {
    /// `lambda / sqrt(n)`; growth-rate diagnostic only.
    pub fn lambda_per_sqrt_n(&self) -> f64 {
        self.lambda / libm::sqrt(self.vector.len() as f64)
    }
}

fn adjacency_apply(g: &Graph, comp: VertexSet, x: &[f64], y: &mut [f64]) {
    for v in comp {
        y[v] = g.neighbors(v).iter().map(|w| x[w]).sum();
    }
}

struct ComponentResult {
    lambda: f64,
    residual: f64,
    iterations: usize,
}

/// Power iteration on `A + (Δ+1) I` restricted to `comp`, writing the vector
/// into `x`.
fn power_iterate(
    g: &Graph,
    comp: VertexSet,
    tol: f64,
    x: &mut [f64],
) -> Result<ComponentResult, SpectralError> {
    for v in comp {
        x[v] = 1.0;
    }
    if comp.len() == 1 {
        return Ok(ComponentResult { lambda: 0.0, residual: 0.0, iterations: 0 });
    }
    let shift = comp.iter().map(|v| g.degree(v)).max().unwrap_or(0) as f64 + 1.0;
    let mut y = alloc::vec![0.0; x.len()];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        adjacency_apply(g, comp, x, &mut y);
        let (mut xy, mut xx) = (0.0, 0.0);
        for v in comp {
            xy += x[v] * y[v];
            xx += x[v] * x[v];
        }
        let lambda = xy / xx;
        residual = comp.iter().map(|v| libm::fabs(y[v] - lambda * x[v])).fold(0.0, f64::max);
        if residual <= tol {
            return Ok(ComponentResult { lambda, residual, iterations: it });
        }
        let mut top = 0.0f64;
        for v in comp {
            y[v] += shift * x[v];
            top = top.max(y[v]);
        }
        for v in comp {
            x[v] = y[v] / top;
        }
    }
    Err(SpectralError::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

/// Spectral radius of `g` by shifted power iteration from the all-ones
/// vector, stopping once the residual is at most `tol`.
///
/// A disconnected graph is handled component by component; the result
/// carries the component of largest eigenvalue (the lowest-indexed one on a
/// tie within `tol`) and zeros elsewhere.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<EigenResult, SpectralError> {
    if g.n() == 0 {
        return Err(SpectralError::NullGraph);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::BadTolerance(tol));
    }
    let mut best: Option<(ComponentResult, Vec<f64>)> = None;
    let mut iterations = 0;
    for comp in g.components() {
        let mut x = alloc::vec![0.0; g.n()];
        let res = power_iterate(g, comp, tol, &mut x)?;
        iterations += res.iterations;
        if best.as_ref().is_none_or(|(b, _)| res.lambda > b.lambda + tol) {
            best = Some((res, x));
        }
    }
    let (res, vector) = best.expect("n >= 1");
    let max_vertex = vector.iter().position(|&e| e == 1.0).unwrap_or(0);
    Ok(EigenResult { lambda: res.lambda, vector, residual: res.residual, iterations, max_vertex })
}

/// `lambda_1(g)` at the default tolerance.
pub fn lambda1(g: &Graph) -> Result<f64, SpectralError> {
    spectral_radius(g, DEFAULT_TOL).map(|r| r.lambda)
}

fn normalize_pair(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Change in the Rayleigh quotient of `x` when `removed` edges are deleted
/// from `g` and `added` pairs are then inserted:
/// `2 (Σ_added x_u x_v - Σ_removed x_u x_v) / |x|²`.
///
/// A positive value certifies that the rewired graph has a strictly larger
/// spectral radius whenever `x` is a Perron vector of `g`.
pub fn rayleigh_delta(
    g: &Graph,
    x: &[f64],
    removed: &[(usize, usize)],
    added: &[(usize, usize)],
) -> Result<f64, SpectralError> {
    let norm2: f64 = x.iter().map(|e| e * e).sum();
    if x.len() != g.n() || norm2 == 0.0 || !norm2.is_finite() {
        return Err(SpectralError::BadVector);
    }
    let mut seen_removed: Vec<(usize, usize)> = Vec::with_capacity(removed.len());
    for &(u, v) in removed {
        let p = normalize_pair(u, v);
        if !g.has_edge(u, v) || seen_removed.contains(&p) {
            return Err(SpectralError::BadRewiring(u, v));
        }
        seen_removed.push(p);
    }
    let mut seen_added: Vec<(usize, usize)> = Vec::with_capacity(added.len());
    for &(u, v) in added {
        let p = normalize_pair(u, v);
        let present = g.has_edge(u, v) && !seen_removed.contains(&p);
        if u == v || u >= g.n() || v >= g.n() || present || seen_added.contains(&p) {
            return Err(SpectralError::BadRewiring(u, v));
        }
        seen_added.push(p);
    }
    let gain: f64 = added.iter().map(|&(u, v)| x[u] * x[v]).sum();
    let loss: f64 = removed.iter().map(|&(u, v)| x[u] * x[v]).sum();
    Ok(2.0 * (gain - loss) / norm2)
}

/// The 2x2 matrix `[[d, n2], [n1, k]]` attached to the join of a
/// `d`-regular graph on `n1` vertices with a graph of maximum degree `k` on
/// `n2` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub d: u64,
    pub k: u64,
    pub n1: u64,
    pub n2: u64,
}

impl QuotientMatrix {
    /// Checks that some join of graphs realises these parameters.
    pub fn is_realisable(&self) -> bool {
        self.n1 >= 1 && self.n2 >= 1 && self.d < self.n1 && self.k < self.n2
    }
}

/// Larger eigenvalue of the quotient matrix,
/// `((d+k) + sqrt((d-k)² + 4 n1 n2)) / 2`, with the radicand formed exactly.
pub fn quotient_bound(q: QuotientMatrix) -> f64 {
    let diff = q.d.abs_diff(q.k) as u128;
    let radicand = diff * diff + 4 * q.n1 as u128 * q.n2 as u128;
    ((q.d + q.k) as f64 + libm::sqrt(radicand as f64)) / 2.0
}

/// Upper bound on `lambda_1` of an `n`-vertex graph with no `K_{s,t}` minor:
/// `(s+t-3 + sqrt((s+t-3)² + 4((s-1)(n-s+1) - (s-2)(t-1)))) / 2`.
pub fn kst_lambda_bound(n: u64, s: u64, t: u64) -> Result<f64, SpectralError> {
    if s < 2 || t < s {
        return Err(SpectralError::Parameter("need 2 <= s <= t"));
    }
    if n < s {
        return Err(SpectralError::Parameter("n must be at least s"));
    }
    let (n, s, t) = (n as i128, s as i128, t as i128);
    let a = s + t - 3;
    let radicand = a * a + 4 * ((s - 1) * (n - s + 1) - (s - 2) * (t - 1));
    Ok((a as f64 + libm::sqrt(radicand as f64)) / 2.0)
}

/// `sqrt((r-2)(n-r+2))`, the spectral radius of `K_{r-2, n-r+2}`, which has
/// no `K_r` minor.
pub fn kr_lambda_lower_bound(n: u64, r: u64) -> Result<f64, SpectralError> {
    if r < 3 || n + 2 < r {
        return Err(SpectralError::Parameter("need r >= 3 and n >= r-2"));
    }
    Ok(libm::sqrt(((r - 2) * (n + 2 - r)) as f64))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterlacingCheck {
    pub bound: f64,
    pub lambda: f64,
    /// Whether the second graph is regular of its maximum degree, which is
    /// exactly when `lambda` meets `bound`.
    pub tight: bool,
    pub quotient: QuotientMatrix,
}

/// Compares `lambda_1(h1 ∨ h2)` with the quotient bound for a regular `h1`.
pub fn check_interlacing_bound(h1: &Graph, h2: &Graph) -> Result<InterlacingCheck, SpectralError> {
    let d = h1.regular_degree().ok_or(SpectralError::NotRegular)?;
    if h1.n() == 0 || h2.n() == 0 {
        return Err(SpectralError::EmptyPart);
    }
    let k = h2.max_degree();
    let quotient = QuotientMatrix { d: d as u64, k: k as u64, n1: h1.n() as u64, n2: h2.n() as u64 };
    let joined = h1.join(h2).map_err(SpectralError::Graph)?;
    let lambda = lambda1(&joined)?;
    Ok(InterlacingCheck {
        bound: quotient_bound(quotient),
        lambda,
        tight: h2.regular_degree() == Some(k),
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_kst_extremal;
    use crate::generators::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn classic_spectral_radii() {
        for n in 2..10 {
            assert!(close(lambda1(&complete(n)).unwrap(), (n - 1) as f64, 1e-10));
        }
        for n in 3..12 {
            assert!(close(lambda1(&cycle(n)).unwrap(), 2.0, 1e-10));
        }
        for (a, b) in [(1, 4), (2, 5), (3, 7)] {
            let want = ((a * b) as f64).sqrt();
            assert!(close(lambda1(&complete_bipartite(a, b)).unwrap(), want, 1e-10));
        }
        // [[1,3],[2,0]] has eigenvalues (1 ± 5)/2.
        let g = complete(2).join(&empty(3)).unwrap();
        assert!(close(lambda1(&g).unwrap(), 3.0, 1e-10));
    }

    #[test]
    fn result_invariants() {
        let r = spectral_radius(&petersen(), DEFAULT_TOL).unwrap();
        assert!(r.residual <= 1e-10);
        assert!(r.vector.iter().all(|&e| e >= 0.0));
        assert_eq!(r.vector[r.max_vertex], 1.0);
        assert!(close(r.lambda, 3.0, 1e-10));
    }

    #[test]
    fn disconnected_picks_largest_component() {
        let g = path(3).disjoint_union(&complete(4)).unwrap();
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        assert!(close(r.lambda, 3.0, 1e-10));
        assert!(r.vector[..3].iter().all(|&e| e == 0.0));
        // Ties go to the lowest component.
        let r = spectral_radius(&copies(&complete(3), 2), DEFAULT_TOL).unwrap();
        assert!(r.vector[3..].iter().all(|&e| e == 0.0));
        let r = spectral_radius(&empty(3), DEFAULT_TOL).unwrap();
        assert_eq!((r.lambda, r.vector), (0.0, alloc::vec![1.0, 0.0, 0.0]));
    }

    #[test]
    fn error_paths() {
        assert_eq!(spectral_radius(&empty(0), 1e-12), Err(SpectralError::NullGraph));
        assert!(matches!(spectral_radius(&path(3), 0.0), Err(SpectralError::BadTolerance(_))));
        assert!(matches!(
            spectral_radius(&path(40), 1e-300),
            Err(SpectralError::NoConvergence { .. })
        ));
    }

    #[test]
    fn rayleigh_examples() {
        let g = path(4);
        let x = spectral_radius(&g, DEFAULT_TOL).unwrap().vector;
        assert!(rayleigh_delta(&g, &x, &[], &[(0, 3)]).unwrap() > 0.0);
        assert_eq!(rayleigh_delta(&g, &x, &[(1, 2)], &[(1, 2)]).unwrap(), 0.0);

        // Perron vector of K_{1,4}: centre 1, leaves 1/2.
        let s = star(5);
        let x = spectral_radius(&s, DEFAULT_TOL).unwrap().vector;
        assert!(close(x[1], 0.5, 1e-10));
        let d = rayleigh_delta(&s, &x, &[(0, 1)], &[(1, 2)]).unwrap();
        assert!(close(d, 2.0 * (0.25 - 0.5) / 2.0, 1e-10));

        assert_eq!(rayleigh_delta(&s, &[], &[], &[]), Err(SpectralError::BadVector));
        assert_eq!(rayleigh_delta(&s, &x, &[(1, 2)], &[]), Err(SpectralError::BadRewiring(1, 2)));
        assert_eq!(rayleigh_delta(&s, &x, &[], &[(0, 1)]), Err(SpectralError::BadRewiring(0, 1)));
        assert_eq!(
            rayleigh_delta(&s, &x, &[], &[(1, 2), (2, 1)]),
            Err(SpectralError::BadRewiring(2, 1))
        );
    }

    #[test]
    fn quotient_examples() {
        let q = QuotientMatrix { d: 1, k: 0, n1: 2, n2: 3 };
        assert!(close(quotient_bound(q), 3.0, 1e-12));
        for m in 1..30 {
            let star = QuotientMatrix { d: 0, k: 0, n1: 1, n2: m };
            assert!(close(quotient_bound(star), (m as f64).sqrt(), 1e-12));
        }
        assert!(!QuotientMatrix { d: 0, k: 3, n1: 1, n2: 2 }.is_realisable());
    }

    #[test]
    fn kst_bound_examples() {
        let b = kst_lambda_bound(5, 2, 2).unwrap();
        assert!(close(b, (1.0 + 17f64.sqrt()) / 2.0, 1e-12));
        assert!(close(b, 2.5615528128088303, 1e-12));
        let g = construct_kst_extremal(10, 2, 3).unwrap();
        assert!(close(lambda1(&g).unwrap(), kst_lambda_bound(10, 2, 3).unwrap(), 1e-9));
        for s in 2..7 {
            for t in s..8 {
                let b = kst_lambda_bound(s, s, t).unwrap();
                assert!(b.is_finite() && b >= (s - 1) as f64);
            }
        }
        assert!(kst_lambda_bound(5, 3, 2).is_err());
        assert!(kst_lambda_bound(2, 3, 3).is_err());
    }

    #[test]
    fn interlacing_examples() {
        let c = check_interlacing_bound(&complete(2), &copies(&complete(3), 3)).unwrap();
        assert!(c.tight);
        assert!(close(c.bound, (3.0 + 73f64.sqrt()) / 2.0, 1e-12));
        assert!(close(c.lambda, c.bound, 1e-9));

        let c = check_interlacing_bound(&complete(1), &path(3)).unwrap();
        assert!(!c.tight);
        assert!(c.lambda < c.bound - 1e-6);

        let c = check_interlacing_bound(&complete(2), &empty(3)).unwrap();
        assert!(c.tight && close(c.lambda, c.bound, 1e-9));

        assert_eq!(check_interlacing_bound(&path(3), &path(3)), Err(SpectralError::NotRegular));
        assert_eq!(check_interlacing_bound(&empty(0), &path(3)), Err(SpectralError::EmptyPart));
    }
}
