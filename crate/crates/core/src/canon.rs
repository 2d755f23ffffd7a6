//! Canonical labelling by partition refinement and individualisation.
//!
//! The ordered partition is refined to an equitable one by neighbour counts;
//! the search then individualises each vertex of the first non-singleton cell
//! in turn. Every leaf is a vertex ordering, and the canonical form is the
//! relabelled graph with the largest adjacency code over all leaves. Branches
//! on twin vertices (equal neighbourhoods up to each other) are skipped, since
//! swapping twins is an automorphism fixing the individualised prefix.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// An ordered partition of the vertex set.
type Cells = Vec<VertexSet>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next = Vec::with_capacity(cells.len() + 4);
            for &cell in &cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets: Vec<(usize, VertexSet)> = Vec::new();
                for v in cell {
                    let c = g.neighbors(v).intersection(splitter).len();
                    match buckets.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, s)) => s.insert(v),
                        None => buckets.push((c, VertexSet::singleton(v))),
                    }
                }
                if buckets.len() > 1 {
                    changed = true;
                    buckets.sort_unstable_by_key(|&(k, _)| k);
                }
                next.extend(buckets.into_iter().map(|(_, s)| s));
            }
            cells = next;
            w += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn code_of(g: &Graph, order: &[usize]) -> Vec<u64> {
    // Row i of the relabelled graph, with bit (n-1-j) for neighbour j so that
    // larger codes favour edges towards early positions.
    let n = order.len();
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1u64 << (n - 1 - pos[w])))
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.first().unwrap()).collect();
            let code = code_of(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in cell {
            let twin = tried.iter().any(|&u| {
                let nu = self.g.neighbors(u).difference(VertexSet::singleton(v));
                let nv = self.g.neighbors(v).difference(VertexSet::singleton(u));
                nu == nv
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(VertexSet::singleton(v));
            next.push(cell.difference(VertexSet::singleton(v)));
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next);
        }
    }
}

/// A canonical labelling: `order[i]` is the vertex of `g` placed at
/// position `i` of the canonical form.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None };
    search.descend(alloc::vec![g.vertices()]);
    search.best.expect("at least one leaf").1
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_order(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && {
            let (mut da, mut db) = (a.degrees(), b.degrees());
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}
