//! The Colin de Verdière parameter, computed only up to the class
//! `{<=1, 2, 3, 4, >=5}` through its forbidden-minor characterisations, and
//! the edge-count checks that go with it.

use core::fmt;

use crate::construct::is_path_forest;
use crate::generators::complete_bipartite;
use crate::graph::{Graph, GraphError};
use crate::minors::{FamilyName, ForbiddenFamily, MinorWitness};

/// Where `μ(G)` falls among the decidable levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MuClass {
    /// A disjoint union of paths.
    AtMostOne,
    /// Outerplanar, with a vertex of degree 3 or a cycle.
    Two,
    /// Planar, not outerplanar.
    Three,
    /// Linklessly embeddable, not planar.
    Four,
    /// Not linklessly embeddable.
    AtLeastFive,
}

impl MuClass {
    pub const ALL: [MuClass; 5] =
        [MuClass::AtMostOne, MuClass::Two, MuClass::Three, MuClass::Four, MuClass::AtLeastFive];

    /// Largest `μ` in the class, or `None` for `>=5`.
    pub fn upper_bound(self) -> Option<u32> {
        match self {
            MuClass::AtMostOne => Some(1),
            MuClass::Two => Some(2),
            MuClass::Three => Some(3),
            MuClass::Four => Some(4),
            MuClass::AtLeastFive => None,
        }
    }

    /// Smallest `μ` the class admits.
    pub fn lower_bound(self) -> u32 {
        match self {
            MuClass::AtMostOne => 0,
            MuClass::Two => 2,
            MuClass::Three => 3,
            MuClass::Four => 4,
            MuClass::AtLeastFive => 5,
        }
    }

    /// Whether every graph in the class has `μ <= m`.
    pub fn at_most(self, m: u32) -> bool {
        self.upper_bound().is_some_and(|b| b <= m)
    }

    /// The characterisation that pins the class down.
    pub fn description(self) -> &'static str {
        match self {
            MuClass::AtMostOne => "disjoint union of paths",
            MuClass::Two => "outerplanar, not a disjoint union of paths",
            MuClass::Three => "planar, not outerplanar",
            MuClass::Four => "linklessly embeddable, not planar",
            MuClass::AtLeastFive => "not linklessly embeddable",
        }
    }
}

impl fmt::Display for MuClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MuClass::AtMostOne => "<=1",
            MuClass::Two => "=2",
            MuClass::Three => "=3",
            MuClass::Four => "=4",
            MuClass::AtLeastFive => ">=5",
        })
    }
}

/// A class together with the reason the next level down failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuClassification {
    pub class: MuClass,
    /// The forbidden minor found at the level below, with its witness.
    /// `None` for [`MuClass::AtMostOne`] and for class 2 (which fails the
    /// path test by containing a cycle or a vertex of degree 3).
    pub obstruction: Option<(Graph, MinorWitness)>,
}

pub fn classify_mu_detailed(g: &Graph) -> MuClassification {
    if is_path_forest(g) {
        return MuClassification { class: MuClass::AtMostOne, obstruction: None };
    }
    let levels = [
        (FamilyName::Outerplanar, MuClass::Two),
        (FamilyName::Planar, MuClass::Three),
        (FamilyName::Linkless, MuClass::Four),
    ];
    let mut obstruction = None;
    for (name, class) in levels {
        match ForbiddenFamily::get(name).find_in(g) {
            None => return MuClassification { class, obstruction },
            Some((h, w)) => obstruction = Some((h.clone(), w)),
        }
    }
    MuClassification { class: MuClass::AtLeastFive, obstruction }
}

pub fn classify_mu(g: &Graph) -> MuClass {
    classify_mu_detailed(g).class
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CdvError {
    Graph(GraphError),
    /// `m` outside the range where the class is decidable here.
    Undecidable(u32),
    /// The graph's class exceeds the level the check assumes.
    ClassTooLarge { class: MuClass, m: u32 },
    NotBipartite,
    NotLinkless,
}

impl fmt::Display for CdvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CdvError::Graph(e) => e.fmt(f),
            CdvError::Undecidable(m) => write!(f, "m = {m} is outside the decidable range"),
            CdvError::ClassTooLarge { class, m } => write!(f, "graph has mu {class}, not <= {m}"),
            CdvError::NotBipartite => write!(f, "graph is not bipartite"),
            CdvError::NotLinkless => write!(f, "graph is not linklessly embeddable"),
        }
    }
}

impl core::error::Error for CdvError {}

/// The deletion bound `μ(G) <= μ(G - v) + 1`, given a bound `mu_without`
/// for `G - v`. The flag is true when the bound is attained, which holds
/// when `v` is adjacent to every other vertex and `G` has an edge.
pub fn mu_join_bound(g: &Graph, v: usize, mu_without: u32) -> Result<(u32, bool), CdvError> {
    if v >= g.n() {
        return Err(CdvError::Graph(GraphError::VertexOutOfRange { vertex: v, n: g.n() }));
    }
    let exact = g.degree(v) + 1 == g.n() && g.edge_count() > 0;
    Ok((mu_without + 1, exact))
}

/// `m n - m(m+1)/2`, which may be negative for `n < m`.
pub fn problem1_bound(n: usize, m: u32) -> i64 {
    let (n, m) = (n as i64, i64::from(m));
    m * n - m * (m + 1) / 2
}

/// Whether `e(g) <= m n - C(m+1, 2)` for a graph with `μ <= m`.
///
/// Only `1 <= m <= 4` can be checked, and the class of `g` must be at most
/// `m`. For `n < m` the bound drops below the edge count of small cliques,
/// so a `false` there is expected rather than a finding.
pub fn check_problem1(g: &Graph, m: u32) -> Result<bool, CdvError> {
    if !(1..=4).contains(&m) {
        return Err(CdvError::Undecidable(m));
    }
    let class = classify_mu(g);
    if !class.at_most(m) {
        return Err(CdvError::ClassTooLarge { class, m });
    }
    Ok(g.edge_count() as i64 <= problem1_bound(g.n(), m))
}

/// Whether a bipartite linklessly embeddable graph has `e <= 3n - 9`.
/// Report-only: the inequality is open, and fails for very small graphs.
pub fn check_problem2(g: &Graph) -> Result<bool, CdvError> {
    if !g.is_bipartite() {
        return Err(CdvError::NotBipartite);
    }
    if !ForbiddenFamily::get(FamilyName::Linkless).excludes(g) {
        return Err(CdvError::NotLinkless);
    }
    Ok(g.edge_count() as i64 <= 3 * g.n() as i64 - 9)
}

/// Whether `K_{m,m}` classifies as `m+1`, for `m` in `{3, 4}`.
pub fn mu_kmm_check(m: u32) -> Result<bool, CdvError> {
    if !(3..=4).contains(&m) {
        return Err(CdvError::Undecidable(m));
    }
    // Within this range m+1 is either exactly 4 or the open class >=5.
    Ok(classify_mu(&complete_bipartite(m as usize, m as usize)).lower_bound() == m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_cdv_extremal;
    use crate::generators::*;
    use crate::minors::verify_witness;

    #[test]
    fn characterisation_examples() {
        assert_eq!(classify_mu(&path(5)), MuClass::AtMostOne);
        assert_eq!(classify_mu(&empty(4)), MuClass::AtMostOne);
        assert_eq!(classify_mu(&empty(0)), MuClass::AtMostOne);
        assert_eq!(classify_mu(&cycle(5)), MuClass::Two);
        assert_eq!(classify_mu(&star(4)), MuClass::Two);
        assert_eq!(classify_mu(&complete(4)), MuClass::Three);
        assert_eq!(classify_mu(&complete(5)), MuClass::Four);
        assert_eq!(classify_mu(&complete_bipartite(3, 3)), MuClass::Four);
        assert_eq!(classify_mu(&complete(6)), MuClass::AtLeastFive);
        assert_eq!(classify_mu(&petersen()), MuClass::AtLeastFive);
    }

    #[test]
    fn obstructions_are_witnessed() {
        let c = classify_mu_detailed(&complete(5));
        let (h, w) = c.obstruction.unwrap();
        assert_eq!(h, complete(5));
        assert!(verify_witness(&h, &complete(5), &w));
        assert!(classify_mu_detailed(&path(3)).obstruction.is_none());
        assert!(classify_mu_detailed(&cycle(4)).obstruction.is_none());
    }

    #[test]
    fn display_strings() {
        let shown: alloc::vec::Vec<_> = MuClass::ALL.iter().map(|c| alloc::format!("{c}")).collect();
        assert_eq!(shown, ["<=1", "=2", "=3", "=4", ">=5"]);
        assert_eq!(MuClass::Three.description(), "planar, not outerplanar");
    }

    #[test]
    fn join_bound() {
        let g = complete(1).join(&path(4)).unwrap();
        assert_eq!(mu_join_bound(&g, 0, 1), Ok((2, true)));
        assert_eq!(mu_join_bound(&g, 1, 2), Ok((3, false)));
        assert_eq!(mu_join_bound(&complete(1), 0, 0), Ok((1, false)));
        assert!(mu_join_bound(&g, 5, 1).is_err());

        // Peeling the m-1 apexes of K_{m-1} + P walks down to a path.
        for m in 2..=4u32 {
            let mut g = construct_cdv_extremal(9, m as usize).unwrap();
            let mut exact = 0;
            for _ in 0..m - 1 {
                let (_, e) = mu_join_bound(&g, 0, 0).unwrap();
                exact += u32::from(e);
                g = g.delete_vertex(0).unwrap();
            }
            assert_eq!(classify_mu(&g), MuClass::AtMostOne);
            assert_eq!(1 + exact, m);
        }
    }

    #[test]
    fn problem1_examples() {
        // Maximal planar on 7 vertices: K_2 joined to P_5.
        let g = complete(2).join(&path(5)).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(check_problem1(&g, 3), Ok(true));
        assert_eq!(check_problem1(&path(5), 1), Ok(true));
        assert_eq!(check_problem1(&complete(5), 3), Err(CdvError::ClassTooLarge { class: MuClass::Four, m: 3 }));
        assert_eq!(check_problem1(&path(5), 5), Err(CdvError::Undecidable(5)));
        assert_eq!(problem1_bound(1, 2), -1);
    }

    #[test]
    fn problem2_examples() {
        assert_eq!(check_problem2(&complete_bipartite(3, 4)), Ok(true));
        assert_eq!(check_problem2(&cycle(6)), Ok(true));
        assert_eq!(check_problem2(&complete_bipartite(3, 3)), Ok(true));
        assert_eq!(check_problem2(&complete(3)), Err(CdvError::NotBipartite));
        assert_eq!(check_problem2(&complete_bipartite(4, 4)), Err(CdvError::NotLinkless));
    }

    #[test]
    fn kmm() {
        assert_eq!(mu_kmm_check(3), Ok(true));
        assert_eq!(mu_kmm_check(4), Ok(true));
        assert_eq!(mu_kmm_check(2), Err(CdvError::Undecidable(2)));
    }
}
