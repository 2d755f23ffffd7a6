//! Independent reference implementations the library is checked against.
//! None of these share code with the library beyond the `Graph` type.

#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use sml_core::{Graph, VertexSet};

/// Graph on `n` vertices whose edge set is read off `bits` in `(u, v)`
/// order with `u < v`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits.get(k).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Graphs on `lo..=hi` vertices, each edge present with probability 1/2.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        graph_from_bits(n, &bits)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let edges: Vec<(usize, usize)> = a.edges().collect();
    permutations(a.n()).iter().any(|p| edges.iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Minor containment by assigning every vertex of `g` to one of the
/// `h.n()` branch sets or to none, and checking each assignment.
pub fn partition_minor_oracle(h: &Graph, g: &Graph) -> bool {
    let (k, n) = (h.n(), g.n());
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![VertexSet::EMPTY; k];
        for (v, &l) in label.iter().enumerate() {
            if l > 0 {
                sets[l - 1].insert(v);
            }
        }
        let ok = sets.iter().all(|&s| !s.is_empty() && g.is_connected_set(s))
            && h.edges().all(|(a, b)| sets[a].iter().any(|x| sets[b].iter().any(|y| g.has_edge(x, y))));
        if ok {
            return true;
        }
        // Odometer over {0..=k}^n.
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// Largest eigenvalue of the adjacency matrix by cyclic Jacobi rotations
/// on the dense matrix.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_lambda_max(g: &Graph) -> f64 {
    let n = g.n();
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}
