//! Named small graphs.
//!
//! All generators panic if asked for more than [`MAX_VERTICES`] vertices.

use crate::graph::{Graph, MAX_VERTICES};

fn blank(n: usize) -> Graph {
    assert!(n <= MAX_VERTICES, "{n} vertices exceeds the limit of {MAX_VERTICES}");
    Graph::new(n).unwrap()
}

/// The edgeless graph `E_n`.
pub fn empty(n: usize) -> Graph {
    blank(n)
}

pub fn complete(n: usize) -> Graph {
    blank(n).complement()
}

/// The path on `n` vertices, `0 - 1 - .. - n-1`.
pub fn path(n: usize) -> Graph {
    let mut g = blank(n);
    for v in 1..n {
        g.link(v - 1, v);
    }
    g
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.link(0, n - 1);
    g
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Graph {
    let mut g = blank(n);
    for v in 1..n {
        g.link(0, v);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut g = blank(n);
    let mut offset = 0;
    let mut part_of = alloc::vec::Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, p));
        offset += p;
    }
    debug_assert_eq!(offset, n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.link(u, v);
            }
        }
    }
    g
}

/// Circulant graph: `i ~ i ± j (mod n)` for every jump `j`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut g = blank(n);
    for i in 0..n {
        for &j in jumps {
            let w = (i + j) % n;
            if w != i {
                g.link(i, w);
            }
        }
    }
    g
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    let mut acc = blank(0);
    for _ in 0..k {
        acc = acc.disjoint_union(g).expect("vertex limit");
    }
    acc
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut g = blank(10);
    for i in 0..5 {
        g.link(i, (i + 1) % 5);
        g.link(i, i + 5);
        g.link(5 + i, 5 + (i + 2) % 5);
    }
    g
}
