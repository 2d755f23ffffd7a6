//! Minor containment with branch-set witnesses, the classical forbidden-minor
//! families, ΔY closure, and the clique-completion check.
//!
//! `has_minor` is exact. Before the exponential search it shrinks the host
//! graph with reductions that preserve containment for the pattern at hand:
//!
//! * vertices of degree at most 1 are deleted when the pattern has minimum
//!   degree 2, and degree-2 vertices are contracted away when it has minimum
//!   degree 3;
//! * a connected pattern is searched per component, a 2-connected one per
//!   side of a cut vertex, and a 3-connected one per torso of a
//!   2-separation (the separating pair joined by a virtual edge).
//!
//! Witnesses found in a reduced graph are lifted back, so every witness
//! refers to the caller's graph and passes [`verify_witness`].

use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::canon::canonical_form;
use crate::generators::{complete, complete_bipartite, star};
use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::search::{family_filter, FamilySpec};

/// Disjoint connected vertex sets of the host graph, one per pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

/// Checks that `w` certifies `h` as a minor of `g`: one nonempty connected
/// set per vertex of `h`, pairwise disjoint, with a `g`-edge between the
/// sets of every edge of `h`.
pub fn verify_witness(h: &Graph, g: &Graph, w: &MinorWitness) -> bool {
    if w.branch_sets.len() != h.n() {
        return false;
    }
    let mut used = VertexSet::EMPTY;
    for &set in &w.branch_sets {
        if !set.is_subset(g.vertices()) || !set.is_disjoint(used) || !g.is_connected_set(set) {
            return false;
        }
        used = used.union(set);
    }
    h.edges().all(|(a, b)| !g.boundary(w.branch_sets[a]).is_disjoint(w.branch_sets[b]))
}

/// Searches for `h` as a minor of `g`.
pub fn has_minor(h: &Graph, g: &Graph) -> Option<MinorWitness> {
    if h.n() == 0 {
        return Some(MinorWitness { branch_sets: Vec::new() });
    }
    let pattern = Pattern::new(h);
    let sets = find(&pattern, g)?;
    let witness = MinorWitness { branch_sets: sets };
    debug_assert!(verify_witness(h, g, &witness));
    Some(witness)
}

/// Invariants of the pattern graph that steer the reductions.
struct Pattern<'a> {
    h: &'a Graph,
    edges: usize,
    min_degree: usize,
    connectivity: usize,
}

impl<'a> Pattern<'a> {
    fn new(h: &'a Graph) -> Self {
        let connectivity = (1..=3).take_while(|&k| h.is_k_connected(k)).count();
        Pattern { h, edges: h.edge_count(), min_degree: h.min_degree(), connectivity }
    }
}

fn lift(sets: Vec<VertexSet>, order: &[usize]) -> Vec<VertexSet> {
    sets.into_iter().map(|s| s.iter().map(|v| order[v]).collect()).collect()
}

fn find(p: &Pattern<'_>, g: &Graph) -> Option<Vec<VertexSet>> {
    if p.h.n() > g.n() || p.edges > g.edge_count() {
        return None;
    }
    if p.min_degree >= 2 {
        if let Some((reduced, reps)) = reduce_low_degree(g, p.min_degree) {
            let sets = find(p, &reduced)?;
            return Some(
                sets.into_iter()
                    .map(|s| s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(reps[v])))
                    .collect(),
            );
        }
    }
    if p.connectivity >= 1 && !g.is_connected() {
        return g.components().into_iter().find_map(|c| {
            let order = c.to_vec();
            find(p, &g.induced(c)).map(|s| lift(s, &order))
        });
    }
    if p.connectivity >= 2 {
        if let Some(sides) = cut_vertex_sides(g) {
            return sides.into_iter().find_map(|side| {
                let order = side.to_vec();
                find(p, &g.induced(side)).map(|s| lift(s, &order))
            });
        }
    }
    if p.connectivity >= 3 {
        if let Some((a, b, comps)) = two_separation(g) {
            return search_torsos(p, g, a, b, &comps);
        }
    }
    BranchSearch::run(p.h, g)
}

/// Deletes vertices of degree <= 1 and, when `min_degree >= 3`, contracts
/// degree-2 vertices into a neighbour, until neither applies. Returns `None`
/// if nothing changed; otherwise the reduced graph and, for each of its
/// vertices, the connected set of original vertices it stands for.
fn reduce_low_degree(g: &Graph, min_degree: usize) -> Option<(Graph, Vec<VertexSet>)> {
    let n = g.n();
    let mut rows = g.rows().to_vec();
    let mut reps: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let mut alive = g.vertices();
    let mut changed = false;
    loop {
        let pick = alive.iter().find(|&v| {
            let d = rows[v].count_ones();
            d <= 1 || (min_degree >= 3 && d == 2)
        });
        let Some(v) = pick else { break };
        changed = true;
        let nbrs = VertexSet::from_bits(rows[v]);
        if nbrs.len() == 2 {
            let a = nbrs.first().unwrap();
            let b = nbrs.difference(VertexSet::singleton(a)).first().unwrap();
            reps[a] = reps[a].union(reps[v]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        for w in nbrs {
            rows[w] &= !(1u64 << v);
        }
        rows[v] = 0;
        alive.remove(v);
    }
    if !changed {
        return None;
    }
    let order = alive.to_vec();
    let reduced = Graph::from_rows(n, rows).relabel(&order);
    let reps = order.iter().map(|&v| reps[v]).collect();
    Some((reduced, reps))
}

/// For a connected graph with a cut vertex `c`, the vertex sets `C + c` for
/// each component `C` of `g - c`.
fn cut_vertex_sides(g: &Graph) -> Option<Vec<VertexSet>> {
    (0..g.n()).find_map(|c| {
        let rest = g.vertices().difference(VertexSet::singleton(c));
        if rest.is_empty() || g.is_connected_set(rest) {
            return None;
        }
        Some(
            components_within(g, rest)
                .into_iter()
                .map(|comp| comp.union(VertexSet::singleton(c)))
                .collect(),
        )
    })
}

fn components_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut left = within;
    while let Some(v) = left.first() {
        let comp = g.reach(VertexSet::singleton(v), left);
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// A pair `{a, b}` whose removal disconnects `g`, with the components left.
fn two_separation(g: &Graph) -> Option<(usize, usize, Vec<VertexSet>)> {
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let rest = g.vertices().difference(VertexSet::from_bits(1 << a | 1 << b));
            if !rest.is_empty() && !g.is_connected_set(rest) {
                return Some((a, b, components_within(g, rest)));
            }
        }
    }
    None
}

fn search_torsos(
    p: &Pattern<'_>,
    g: &Graph,
    a: usize,
    b: usize,
    comps: &[VertexSet],
) -> Option<Vec<VertexSet>> {
    let pair = VertexSet::from_bits(1 << a | 1 << b);
    for (i, &comp) in comps.iter().enumerate() {
        let side = comp.union(pair);
        let order = side.to_vec();
        let mut torso = g.induced(side);
        let (ta, tb) = (order.iter().position(|&v| v == a)?, order.iter().position(|&v| v == b)?);
        if !torso.has_edge(ta, tb) {
            torso = torso.with_edge(ta, tb).ok()?;
        }
        let Some(sets) = find(p, &torso) else { continue };
        let mut sets = lift(sets, &order);
        if !g.has_edge(a, b) {
            // Route the virtual edge through another component; each one
            // touches both a and b because g is 2-connected.
            let other = comps[if i == 0 { 1 } else { 0 }];
            if let Some(s) = sets.iter_mut().find(|s| s.contains(a)) {
                *s = s.union(other);
            }
        }
        return Some(sets);
    }
    None
}

/// Exhaustive branch-set construction.
///
/// Each branch set grows from a root, its smallest vertex, by adding
/// neighbouring free vertices. The search always works on the pattern edge
/// with the fewest ways to progress and branches on one candidate vertex:
/// either it joins the set, or it is forbidden for that set from then on.
/// Interchangeable pattern vertices (twins) get increasing roots.
struct BranchSearch<'a> {
    g: &'a Graph,
    /// Pattern adjacency over labels `0..k` in processing order.
    label_edges: Vec<(usize, usize)>,
    label_nbrs: Vec<u64>,
    twin_prev: Vec<Option<usize>>,
    sets: Vec<u64>,
    allowed: Vec<u64>,
    free: u64,
}

impl<'a> BranchSearch<'a> {
    fn run(h: &Graph, g: &Graph) -> Option<Vec<VertexSet>> {
        // High-degree host vertices first so they become roots early.
        let mut g_order: Vec<usize> = (0..g.n()).collect();
        g_order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
        let host = g.relabel(&g_order);

        let labels = pattern_order(h);
        let k = labels.len();
        let mut pos = alloc::vec![0; k];
        for (i, &v) in labels.iter().enumerate() {
            pos[v] = i;
        }
        let mut label_nbrs = alloc::vec![0u64; k];
        let mut label_edges = Vec::new();
        for (u, v) in h.edges() {
            let (a, b) = (pos[u], pos[v]);
            label_nbrs[a] |= 1 << b;
            label_nbrs[b] |= 1 << a;
            label_edges.push((a.min(b), a.max(b)));
        }
        label_edges.sort_unstable();
        let twin_prev = twin_predecessors(h, &labels);

        let mut search = BranchSearch {
            g: &host,
            label_edges,
            label_nbrs,
            twin_prev,
            sets: alloc::vec![0; k],
            allowed: alloc::vec![host.vertices().bits(); k],
            free: host.vertices().bits(),
        };
        if !search.descend() {
            return None;
        }
        let sets: Vec<VertexSet> = (0..k)
            .map(|v| VertexSet::from_bits(search.sets[pos[v]]))
            .collect();
        Some(lift(sets, &g_order))
    }

    fn boundary(&self, set: u64) -> u64 {
        self.g.boundary(VertexSet::from_bits(set)).bits()
    }

    fn reach(&self, from: u64, region: u64) -> u64 {
        self.g.reach(VertexSet::from_bits(from), VertexSet::from_bits(from | region)).bits()
    }

    fn realised(&self, i: usize, j: usize) -> bool {
        self.boundary(self.sets[i]) & self.sets[j] != 0
    }

    /// Cheap necessary conditions for the current partial model to extend.
    fn feasible(&self) -> bool {
        let mut unrooted = 0;
        for i in 0..self.sets.len() {
            if self.sets[i] == 0 {
                unrooted += 1;
                if self.free & self.allowed[i] == 0 {
                    return false;
                }
            }
        }
        if (self.free.count_ones() as usize) < unrooted {
            return false;
        }
        for &(i, j) in &self.label_edges {
            let (ri, rj) = (self.sets[i] != 0, self.sets[j] != 0);
            if ri && rj {
                if self.realised(i, j) {
                    continue;
                }
                let region = self.free & (self.allowed[i] | self.allowed[j]);
                let r = self.reach(self.sets[i], region);
                if self.boundary(r) & self.sets[j] == 0 {
                    return false;
                }
            } else if ri || rj {
                let (a, b) = if ri { (i, j) } else { (j, i) };
                let region = self.free & (self.allowed[a] | self.allowed[b]);
                if self.reach(self.sets[a], region) & self.free & self.allowed[b] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&mut self) -> bool {
        // Most constrained unrealised edge between rooted sets.
        let mut best: Option<(u32, usize, usize, u64, u64)> = None;
        for &(i, j) in &self.label_edges {
            if self.sets[i] == 0 || self.sets[j] == 0 || self.realised(i, j) {
                continue;
            }
            let ci = self.boundary(self.sets[i]) & self.free & self.allowed[i];
            let cj = self.boundary(self.sets[j]) & self.free & self.allowed[j];
            let count = ci.count_ones() + cj.count_ones();
            if count == 0 {
                return false;
            }
            if best.is_none_or(|b| count < b.0) {
                best = Some((count, i, j, ci, cj));
            }
        }
        if let Some((_, i, j, ci, cj)) = best {
            // Prefer a vertex that realises the edge outright.
            let direct_i = ci & self.boundary(self.sets[j]);
            let direct_j = cj & self.boundary(self.sets[i]);
            let (label, w) = if direct_i != 0 {
                (i, direct_i.trailing_zeros())
            } else if direct_j != 0 {
                (j, direct_j.trailing_zeros())
            } else if ci != 0 {
                (i, ci.trailing_zeros())
            } else {
                (j, cj.trailing_zeros())
            };
            let bit = 1u64 << w;

            self.sets[label] |= bit;
            self.free &= !bit;
            if self.feasible() && self.descend() {
                return true;
            }
            self.sets[label] &= !bit;
            self.free |= bit;

            let saved = self.allowed[label];
            self.allowed[label] &= !bit;
            if self.feasible() && self.descend() {
                return true;
            }
            self.allowed[label] = saved;
            return false;
        }

        let Some(i) = self.sets.iter().position(|&s| s == 0) else {
            return true;
        };
        let mut cands = self.free & self.allowed[i];
        if let Some(prev) = self.twin_prev[i] {
            let root = self.sets[prev].trailing_zeros();
            cands &= !((2u64 << root).wrapping_sub(1));
        }
        // The new root must be reachable from every rooted neighbour.
        for a in VertexSet::from_bits(self.label_nbrs[i]) {
            if self.sets[a] != 0 {
                let region = self.free & (self.allowed[a] | self.allowed[i]);
                cands &= self.reach(self.sets[a], region);
            }
        }
        let saved = self.allowed[i];
        for v in VertexSet::from_bits(cands) {
            let bit = 1u64 << v;
            self.sets[i] = bit;
            self.free &= !bit;
            self.allowed[i] = saved & !((2u64 << v).wrapping_sub(1)) | bit;
            if self.feasible() && self.descend() {
                return true;
            }
            self.sets[i] = 0;
            self.free |= bit;
        }
        self.allowed[i] = saved;
        false
    }
}

/// Pattern vertices in search order: start from a vertex of largest degree,
/// then repeatedly take the vertex with most already-ordered neighbours.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < h.n() {
        let next = h
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| {
                (h.neighbors(v).intersection(placed).len(), h.degree(v), core::cmp::Reverse(v))
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

/// For each label, the previous label in the same twin class.
fn twin_predecessors(h: &Graph, labels: &[usize]) -> Vec<Option<usize>> {
    let twins = |u: usize, v: usize| {
        h.neighbors(u).difference(VertexSet::singleton(v))
            == h.neighbors(v).difference(VertexSet::singleton(u))
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut prev = alloc::vec![None; labels.len()];
    for (i, &v) in labels.iter().enumerate() {
        match classes.iter_mut().find(|c| c.iter().all(|&j| twins(labels[j], v))) {
            Some(class) => {
                prev[i] = class.last().copied();
                class.push(i);
            }
            None => classes.push(alloc::vec![i]),
        }
    }
    prev
}

/// Named forbidden-minor characterisations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Planar,
    Outerplanar,
    Linkless,
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyName::Planar => "planar",
            FamilyName::Outerplanar => "outerplanar",
            FamilyName::Linkless => "linklessly embeddable",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ForbiddenFamily {
    pub name: FamilyName,
    pub members: Vec<Graph>,
}

impl ForbiddenFamily {
    /// `{K_5, K_{3,3}}`.
    pub fn planar() -> Self {
        ForbiddenFamily { name: FamilyName::Planar, members: alloc::vec![complete(5), complete_bipartite(3, 3)] }
    }

    /// `{K_4, K_{2,3}}`.
    pub fn outerplanar() -> Self {
        ForbiddenFamily {
            name: FamilyName::Outerplanar,
            members: alloc::vec![complete(4), complete_bipartite(2, 3)],
        }
    }

    /// The Petersen family, generated as the ΔY/YΔ closure of `K_6`.
    pub fn linkless() -> Self {
        ForbiddenFamily { name: FamilyName::Linkless, members: delta_y_closure(&complete(6)) }
    }

    /// Shared instance for `name`; the Petersen family is computed once.
    pub fn get(name: FamilyName) -> &'static ForbiddenFamily {
        static PLANAR: OnceBox<ForbiddenFamily> = OnceBox::new();
        static OUTERPLANAR: OnceBox<ForbiddenFamily> = OnceBox::new();
        static LINKLESS: OnceBox<ForbiddenFamily> = OnceBox::new();
        match name {
            FamilyName::Planar => PLANAR.get_or_init(|| Box::new(Self::planar())),
            FamilyName::Outerplanar => OUTERPLANAR.get_or_init(|| Box::new(Self::outerplanar())),
            FamilyName::Linkless => LINKLESS.get_or_init(|| Box::new(Self::linkless())),
        }
    }

    /// The first member that is a minor of `g`, with its witness.
    pub fn find_in(&self, g: &Graph) -> Option<(&Graph, MinorWitness)> {
        self.members.iter().find_map(|m| has_minor(m, g).map(|w| (m, w)))
    }

    pub fn excludes(&self, g: &Graph) -> bool {
        self.find_in(g).is_none()
    }
}

pub fn is_planar(g: &Graph) -> bool {
    ForbiddenFamily::get(FamilyName::Planar).excludes(g)
}

pub fn is_outerplanar(g: &Graph) -> bool {
    ForbiddenFamily::get(FamilyName::Outerplanar).excludes(g)
}

pub fn is_linkless(g: &Graph) -> bool {
    ForbiddenFamily::get(FamilyName::Linkless).excludes(g)
}

/// Replaces the triangle `a b c` by a new vertex adjacent to its corners.
pub fn delta_to_y(g: &Graph, a: usize, b: usize, c: usize) -> Result<Graph, GraphError> {
    let g = g.delete_edge(a, b)?.delete_edge(b, c)?.delete_edge(a, c)?;
    let w = g.n();
    let g = g.disjoint_union(&complete(1))?;
    Graph::from_edges(w + 1, g.edges().chain([(a, w), (b, w), (c, w)]))
}

/// Replaces the degree-3 vertex `w` by a triangle on its neighbours.
/// Refused when two neighbours are already adjacent, since the result would
/// need a parallel edge.
pub fn y_to_delta(g: &Graph, w: usize) -> Option<Graph> {
    if w >= g.n() || g.degree(w) != 3 {
        return None;
    }
    let nb = g.neighbors(w).to_vec();
    let (a, b, c) = (nb[0], nb[1], nb[2]);
    if g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c) {
        return None;
    }
    let g = g.with_edge(a, b).ok()?.with_edge(b, c).ok()?.with_edge(a, c).ok()?;
    g.delete_vertex(w).ok()
}

/// All graphs reachable from `seed` by ΔY and YΔ moves, one canonical
/// representative per isomorphism class, sorted.
pub fn delta_y_closure(seed: &Graph) -> Vec<Graph> {
    let mut seen: BTreeSet<Graph> = BTreeSet::new();
    let start = canonical_form(seed);
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(g) = queue.pop_front() {
        let mut next = Vec::new();
        if g.n() < MAX_VERTICES {
            for (a, b) in g.edges() {
                let common = g.neighbors(a).intersection(g.neighbors(b));
                for c in common.iter().filter(|&c| c > b) {
                    next.push(delta_to_y(&g, a, b, c).expect("triangle edges exist"));
                }
            }
        }
        next.extend((0..g.n()).filter_map(|w| y_to_delta(&g, w)));
        for h in next {
            let h = canonical_form(&h);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorError {
    /// The graph already contains the minor the operation assumes absent.
    HasMinor(MinorWitness),
    NotConnected,
    NotMember,
    /// `K` has the wrong size for the family.
    WrongCliqueSize { expected: usize, found: usize },
    /// The common neighbourhood of `K` is below the required size.
    CommonNeighbourhoodTooSmall { required: usize, found: usize },
    Parameter(&'static str),
}

impl fmt::Display for MinorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorError::HasMinor(_) => write!(f, "graph contains the excluded minor"),
            MinorError::NotConnected => write!(f, "graph is not connected"),
            MinorError::NotMember => write!(f, "graph is not in the family"),
            MinorError::WrongCliqueSize { expected, found } => {
                write!(f, "hypothesis violated: |K| = {found}, expected {expected}")
            }
            MinorError::CommonNeighbourhoodTooSmall { required, found } => {
                write!(f, "hypothesis violated: common neighbourhood {found} < {required}")
            }
            MinorError::Parameter(msg) => write!(f, "invalid parameters: {msg}"),
        }
    }
}

impl core::error::Error for MinorError {}

/// Outcome of completing `K` to a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    /// Whether the completed graph is still in the family.
    pub safe: bool,
    /// Edges removed before completing (always empty for `K_r`).
    pub deleted_edges: Vec<(usize, usize)>,
    pub completed: Graph,
}

/// Completes `k` to a clique in a family member `g` whose vertices in `k`
/// share a large common neighbourhood `T`, and checks the result with the
/// minor tester.
///
/// For `K_r`-minor-free graphs `|K| = r-2` and
/// `|T| >= max(r+1, C(r-2,2)+3)`; the completion is applied directly. For
/// `K_{s,t}`-minor-free graphs (and `μ <= m`, with `s = m`) `|K| = s-1` and
/// `|T| > C(s-1,2)`; for each non-adjacent pair `x y` of `K` one
/// lowest-degree vertex `b` of `T` keeps only its edges to `x` and `y`,
/// the rest of its edges are deleted, and then `K` is completed.
pub fn clique_completion(g: &Graph, k: VertexSet, family: FamilySpec) -> Result<Completion, MinorError> {
    family.validate().map_err(MinorError::Parameter)?;
    if !k.is_subset(g.vertices()) {
        return Err(MinorError::Parameter("K is not a vertex set of the graph"));
    }
    if !family_filter(family, g) {
        return Err(MinorError::NotMember);
    }
    let common = k
        .iter()
        .fold(g.vertices(), |acc, v| acc.intersection(g.neighbors(v)))
        .difference(k);
    let (size, required) = match family {
        FamilySpec::KrMinorFree { r } => (r - 2, (r + 1).max((r - 2) * (r - 3) / 2 + 3)),
        FamilySpec::KstMinorFree { s, .. } => (s - 1, (s - 1) * (s - 2) / 2 + 1),
        FamilySpec::CdvAtMost { m } => (m.saturating_sub(1), (m - 1) * m.saturating_sub(2) / 2 + 1),
    };
    if k.len() != size {
        return Err(MinorError::WrongCliqueSize { expected: size, found: k.len() });
    }
    if common.len() < required {
        return Err(MinorError::CommonNeighbourhoodTooSmall { required, found: common.len() });
    }

    let missing: Vec<(usize, usize)> = k
        .iter()
        .flat_map(|x| k.iter().filter(move |&y| y > x).map(move |y| (x, y)))
        .filter(|&(x, y)| !g.has_edge(x, y))
        .collect();
    let mut deleted = Vec::new();
    let mut work = g.clone();
    if !matches!(family, FamilySpec::KrMinorFree { .. }) {
        let mut pool = common.to_vec();
        pool.sort_by_key(|&v| (g.degree(v), v));
        for (&(x, y), &b) in missing.iter().zip(&pool) {
            for w in work.neighbors(b) {
                if w != x && w != y {
                    deleted.push((b.min(w), b.max(w)));
                    work = work.delete_edge(b, w).expect("edge present");
                }
            }
        }
    }
    for &(x, y) in &missing {
        work = work.with_edge(x, y).expect("pair was missing");
    }
    Ok(Completion { safe: family_filter(family, &work), deleted_edges: deleted, completed: work })
}

/// Whether completing `k` to a clique keeps `g` in the family; see
/// [`clique_completion`] for the hypotheses.
pub fn clique_completion_safe(g: &Graph, k: VertexSet, family: FamilySpec) -> Result<bool, MinorError> {
    clique_completion(g, k, family).map(|c| c.safe)
}

/// For a connected graph with no `K_{1,t}` minor, whether
/// `e(h) <= n(h) + t(t-3)/2`.
pub fn max_degree_residual_bound(h: &Graph, t: usize) -> Result<bool, MinorError> {
    if t == 0 || t + 1 > MAX_VERTICES {
        return Err(MinorError::Parameter("t must be in 1..64"));
    }
    if !h.is_connected() {
        return Err(MinorError::NotConnected);
    }
    if let Some(w) = has_minor(&star(t + 1), h) {
        return Err(MinorError::HasMinor(w));
    }
    let (e, n, t) = (h.edge_count() as i64, h.n() as i64, t as i64);
    Ok(2 * e <= 2 * n + t * (t - 3))
}
