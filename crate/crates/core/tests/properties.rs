mod support;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sml_core::cdv::{classify_mu, MuClass};
use sml_core::construct::{construct_cdv_extremal, construct_kr_extremal};
use sml_core::generators::*;
use sml_core::minors::{has_minor, is_linkless, is_outerplanar, is_planar, verify_witness};
use sml_core::search::enumerate_graphs;
use sml_core::spectral::{
    check_interlacing_bound, kr_lambda_lower_bound, kst_lambda_bound, quotient_bound, spectral_radius,
    QuotientMatrix, DEFAULT_TOL,
};
use sml_core::{lambda1, Graph, VertexSet};
use support::*;

fn residual(g: &Graph, lambda: f64, x: &[f64]) -> f64 {
    (0..g.n())
        .map(|v| (g.neighbors(v).iter().map(|w| x[w]).sum::<f64>() - lambda * x[v]).abs())
        .fold(0.0, f64::max)
}

/// Random graph on `n` vertices with maximum degree at most `k`.
fn bounded_degree<R: Rng>(rng: &mut R, n: usize, k: usize) -> Graph {
    let mut g = empty(n);
    for _ in 0..n * k {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v && !g.has_edge(u, v) && g.degree(u) < k && g.degree(v) < k {
            g = g.with_edge(u, v).unwrap();
        }
    }
    g
}

/// Random `k`-regular graph on `n` vertices as a circulant, when one exists.
fn regular_circulant<R: Rng>(rng: &mut R, n: usize, k: usize) -> Option<Graph> {
    if k >= n || (k % 2 == 1 && n % 2 == 1) {
        return None;
    }
    let mut jumps: Vec<usize> = (1..=(n - 1) / 2).collect();
    for i in (1..jumps.len()).rev() {
        jumps.swap(i, rng.random_range(0..=i));
    }
    jumps.truncate(k / 2);
    if k % 2 == 1 {
        jumps.push(n / 2);
    }
    let g = circulant(n, &jumps);
    (g.regular_degree() == Some(k)).then_some(g)
}

#[test]
fn interlacing_bound_on_generated_joins() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut checked, mut tight) = (0, 0);
    while checked < 1000 {
        let n1 = rng.random_range(1..=8);
        let h1 = match rng.random_range(0..3) {
            0 if n1 >= 3 => cycle(n1),
            1 => complete(n1),
            _ if n1 >= 5 => circulant(n1, &[1, 2]),
            _ => complete(n1),
        };
        let n2 = rng.random_range(1..=20 - n1);
        let k = rng.random_range(0..=4.min(n2 - 1));
        let h2 = if rng.random_bool(0.3) {
            match regular_circulant(&mut rng, n2, k) {
                Some(g) => g,
                None => continue,
            }
        } else {
            bounded_degree(&mut rng, n2, k)
        };
        let c = check_interlacing_bound(&h1, &h2).unwrap();
        assert!(c.lambda <= c.bound + 1e-9, "{h1:?} {h2:?}");
        assert_eq!(c.tight, (c.bound - c.lambda).abs() <= 1e-9, "{h1:?} {h2:?} {c:?}");
        tight += usize::from(c.tight);
        checked += 1;
    }
    assert!(tight > 100 && tight < 900);
}

#[test]
fn quotient_and_kst_forms_agree() {
    for s in 2..=6u64 {
        for t in s..=6 {
            for n in s..=200 {
                let q = QuotientMatrix { d: s - 2, k: t - 1, n1: s - 1, n2: n - s + 1 };
                assert!((quotient_bound(q) - kst_lambda_bound(n, s, t).unwrap()).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn kr_construction_beats_its_bipartite_subgraph() {
    for r in 3..=8 {
        for n in r..=30 {
            let lambda = lambda1(&construct_kr_extremal(n, r).unwrap()).unwrap();
            assert!(lambda >= kr_lambda_lower_bound(n as u64, r as u64).unwrap() - 1e-12);
        }
    }
}

#[test]
fn family_hierarchy_on_all_small_graphs() {
    for n in 0..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            let (o, p, l) = (is_outerplanar(&g), is_planar(&g), is_linkless(&g));
            assert!(!o || p, "{g:?}");
            assert!(!p || l, "{g:?}");
            if n >= 3 && g.edge_count() > 3 * n - 6 {
                assert!(!p, "{g:?}");
            }
        }
    }
}

#[test]
fn cdv_constructions_have_class_m() {
    for m in 2..=4 {
        let want = MuClass::ALL[m - 1];
        // At n = m the construction is K_m, one class lower.
        assert_eq!(classify_mu(&construct_cdv_extremal(m, m).unwrap()), MuClass::ALL[m - 2]);
        for n in m + 1..=12 {
            assert_eq!(classify_mu(&construct_cdv_extremal(n, m).unwrap()), want, "n={n} m={m}");
        }
    }
}

#[test]
fn claw_joins_step_up() {
    assert_eq!(classify_mu(&star(4)), MuClass::Two);
    assert_eq!(classify_mu(&star(4).join(&complete(2)).unwrap()), MuClass::Four);
    assert_eq!(classify_mu(&star(4).join(&complete(3)).unwrap()), MuClass::AtLeastFive);
}

#[test]
fn every_small_graph_with_a_cycle_has_a_triangle_minor() {
    for n in 3..=7 {
        for g in enumerate_graphs(n, false).unwrap() {
            assert_eq!(has_minor(&complete(3), &g).is_some(), !g.is_forest(), "{g:?}");
        }
    }
}

/// A random minor of `g`: a few deletions and contractions.
fn random_minor<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut h = g.clone();
    for _ in 0..rng.random_range(1..=3) {
        let edges: Vec<_> = h.edges().collect();
        match rng.random_range(0..3) {
            0 if !edges.is_empty() => {
                let (u, v) = edges[rng.random_range(0..edges.len())];
                h = h.delete_edge(u, v).unwrap();
            }
            1 if !edges.is_empty() => {
                let (u, v) = edges[rng.random_range(0..edges.len())];
                h = h.contract_edge(u, v).unwrap();
            }
            _ if h.n() > 1 => h = h.delete_vertex(rng.random_range(0..h.n())).unwrap(),
            _ => {}
        }
    }
    h
}

#[test]
fn classification_is_minor_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = rng.random_range(2..=7);
        let p = rng.random_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let h = random_minor(&mut rng, &g);
        assert!(classify_mu(&h) <= classify_mu(&g), "{h:?} <= {g:?}");
    }
}

#[test]
fn minor_freeness_is_closed_under_deletion_and_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let patterns = [complete(4), complete(5), complete_bipartite(2, 3), complete_bipartite(3, 3)];
    let mut checked = 0;
    while checked < 500 {
        let n = rng.random_range(5..=9);
        let p = rng.random_range(0.2..0.6);
        let g = random_graph(&mut rng, n, p);
        let h = &patterns[checked % patterns.len()];
        if has_minor(h, &g).is_some() {
            continue;
        }
        for (u, v) in g.edges() {
            assert!(has_minor(h, &g.delete_edge(u, v).unwrap()).is_none());
            assert!(has_minor(h, &g.contract_edge(u, v).unwrap()).is_none());
        }
        checked += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn eigen_results_satisfy_their_invariants(g in arb_graph(1, 24)) {
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        prop_assert!(r.residual <= 1e-10);
        prop_assert!(residual(&g, r.lambda, &r.vector) <= 1e-10);
        prop_assert!(r.vector.iter().all(|&e| e >= 0.0));
        prop_assert_eq!(r.vector[r.max_vertex], 1.0);
        prop_assert_eq!(r.vector.iter().cloned().fold(0.0, f64::max), 1.0);
        prop_assert_eq!(spectral_radius(&g, DEFAULT_TOL).unwrap(), r);
    }

    #[test]
    fn adding_an_edge_never_lowers_lambda(g in arb_graph(2, 10), pick in any::<usize>()) {
        let missing: Vec<_> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick % missing.len()];
        let before = lambda1(&g).unwrap();
        let after = lambda1(&g.with_edge(u, v).unwrap()).unwrap();
        prop_assert!(after >= before - 1e-12);
        if g.is_connected() {
            prop_assert!(after - before > 1e-12);
        }
    }

    #[test]
    fn subgraphs_have_smaller_lambda(g in arb_graph(1, 14), keep in any::<u64>(), drop in any::<u64>()) {
        let set = VertexSet::from_bits(keep).intersection(g.vertices());
        prop_assume!(!set.is_empty());
        let mut h = g.induced(set);
        for (i, (u, v)) in h.clone().edges().enumerate() {
            if drop >> (i % 64) & 1 == 1 {
                h = h.delete_edge(u, v).unwrap();
            }
        }
        prop_assert!(lambda1(&h).unwrap() <= lambda1(&g).unwrap() + 1e-10);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(0, 64)) {
        let code = g.to_graph6();
        prop_assert_eq!(Graph::from_graph6(&code).unwrap(), g);
    }

    #[test]
    fn witnesses_always_verify(h in arb_graph(1, 5), g in arb_graph(1, 10)) {
        if let Some(w) = has_minor(&h, &g) {
            prop_assert!(verify_witness(&h, &g, &w));
        }
    }
}
