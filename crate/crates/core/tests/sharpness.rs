mod common;

use proptest::prelude::*;
use specmatch::bounds::{
    check_alpha_condition, check_complement_condition, check_fpm_spectral,
    check_spectral_condition, mu_f_lower_bound, phi, verdicts_for_graph, ScanGrid,
};
use specmatch::families::{
    complete_bipartite, exception_witness, family_b, family_b_membership, join_exception,
    FamilyBSpec,
};
use specmatch::fracmatch::max_matching_bipartite;
use specmatch::spectral::{build_matrix, family_quotient_radius, spectral_radius};
use specmatch::{
    fractional_matching_number, BoundQuery, Graph, Outcome, Params, Rational64, TheoremId,
    DEFAULT_EPSILON,
};

const PAIRS: [(usize, usize); 4] = [(1, 1), (2, 1), (2, 2), (3, 1)];

fn radius(g: &Graph, a: f64) -> f64 {
    spectral_radius(&build_matrix(g, &Params::new(a, 1.0).unwrap()), 1e-10).unwrap()
}

fn query(k: usize, a: f64) -> BoundQuery {
    BoundQuery::new(
        Rational64::from(k as i64),
        Params::new(a, 1.0).unwrap(),
        DEFAULT_EPSILON,
    )
    .unwrap()
}

#[test]
fn complete_bipartite_extremes() {
    for (delta, k) in PAIRS {
        let g = complete_bipartite(delta, delta + k);
        let n = g.order();
        assert_eq!(
            family_b(&FamilyBSpec::new(delta, k, delta).unwrap())
                .unwrap()
                .graph,
            g
        );
        assert_eq!(fractional_matching_number(&g).twice(), 2 * delta as u64);

        for a in [0.0, 1.0] {
            let want = phi(a, n, delta, k as f64).unwrap();
            let closed: f64 = family_quotient_radius(a, delta, delta, delta + k).unwrap();
            assert!((radius(&g, a) - want).abs() <= 1e-8);
            assert!((closed - want).abs() <= 1e-8);
            let v = check_spectral_condition(&g, &query(k, a)).unwrap();
            assert_eq!(v.outcome(), Outcome::Boundary, "{delta} {k} {a}");
        }
        for a in [0.0, 1.0, 2.0] {
            let c = radius(&g.complement(), a);
            assert!((c - (a + 1.0) * (delta + k - 1) as f64).abs() <= 1e-8);
            let v = check_complement_condition(&g, &query(k, a)).unwrap();
            assert_eq!(v.outcome(), Outcome::Boundary);
        }
        for a in [0.0, 1.0] {
            let lb = mu_f_lower_bound(&g, a, DEFAULT_EPSILON).unwrap();
            assert!(lb.tight && !lb.tight_outside_family, "{delta} {k} {a}");
        }
    }
}

#[test]
fn family_members_over_a_range() {
    let mut seen = 0;
    for m in 1..=12usize {
        for delta in 1..=m {
            for k in 1..=12usize {
                let Ok(spec) = FamilyBSpec::new(delta, k, m) else {
                    continue;
                };
                let fam = family_b(&spec).unwrap();
                let g = &fam.graph;
                let n = g.order();
                seen += 1;
                assert_eq!(fractional_matching_number(g).twice(), 2 * m as u64);
                assert_eq!(max_matching_bipartite(g).unwrap().size, m);
                assert_eq!(fam.connected, g.is_connected());
                if fam.connected {
                    let mem = family_b_membership(g).unwrap();
                    assert_eq!((mem.delta, mem.k, mem.x_size), (delta, k, m));
                }
                for a in [0.0, 1.0] {
                    let want = phi(a, n, delta, k as f64).unwrap();
                    assert!(
                        (radius(g, a) - want).abs() <= 1e-8,
                        "m={m} delta={delta} k={k} a={a}"
                    );
                }
                for a in [0.5, 2.0] {
                    let lambda = radius(g, a);
                    assert!(lambda - phi(a, n, delta, k as f64).unwrap() > 1e-9);
                    // the equality premise `k' = k` is never met, and the bound stays strict
                    let lb = mu_f_lower_bound(g, a, DEFAULT_EPSILON).unwrap();
                    assert!(lb.holds && lb.bound < m as f64 - 1e-9);
                }
            }
        }
    }
    assert!(seen > 100);
}

#[test]
fn join_exceptions_lack_perfect_matchings() {
    for delta in 1..=4usize {
        let hs: Vec<Vec<(usize, usize)>> = vec![
            vec![],
            Graph::complete(delta).edges().collect(),
            Graph::path(delta).edges().collect(),
        ];
        for h in hs {
            let g = join_exception(delta, &h).unwrap();
            assert!(fractional_matching_number(&g).twice() < g.order() as u64);
            assert!(exception_witness(&g, delta).is_some());
            let v = check_fpm_spectral(&g, 1.0, DEFAULT_EPSILON).unwrap();
            assert!(v.final_check.conclusion_holds);
            for r in [&v.th4, &v.th7, &v.final_check] {
                assert_ne!(r.outcome(), Outcome::Counterexample);
            }
        }
    }
}

#[test]
fn alpha_endpoints_match_their_special_cases() {
    let g = Graph::cycle(7);
    let k = Rational64::from(1);
    let at0 = check_alpha_condition(&g, 0.0, k, DEFAULT_EPSILON).unwrap();
    let adj = check_spectral_condition(&g, &query(1, 0.0)).unwrap();
    assert_eq!(at0.direct.lambda1, adj.lambda1);
    assert_eq!(at0.direct.threshold, adj.threshold);
    let half = check_alpha_condition(&g, 0.5, k, DEFAULT_EPSILON).unwrap();
    let q = check_spectral_condition(&g, &query(1, 1.0)).unwrap();
    assert!((2.0 * half.direct.lambda1.unwrap() - q.lambda1.unwrap()).abs() < 1e-9);
    assert!((2.0 * half.direct.threshold.unwrap() - q.threshold.unwrap()).abs() < 1e-9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn random_connected_graphs_have_no_counterexamples(g in common::connected_graph(2, 10)) {
        let grid = ScanGrid::new(
            &[0.0, 0.5, 1.0, 2.0],
            &[1.0, 2.0],
            vec![Rational64::new(1, 2), Rational64::from(1), Rational64::from(2), Rational64::new(7, 3)],
            None,
        )
        .unwrap();
        for v in verdicts_for_graph(&g, &grid, DEFAULT_EPSILON).unwrap() {
            prop_assert_ne!(v.outcome(), Outcome::Counterexample, "{:?}", v);
            if v.premise_holds && !v.boundary {
                prop_assert!(v.conclusion_holds);
            }
        }
    }

    #[test]
    fn lower_bounds_hold_in_regime(g in common::connected_graph(3, 11), a in 0.0f64..3.0) {
        let lb = mu_f_lower_bound(&g, a, DEFAULT_EPSILON).unwrap();
        if lb.in_regime {
            prop_assert!(lb.holds, "{:?}", lb);
        }
    }

    #[test]
    fn routing_is_exact(g in common::connected_graph(2, 10), num in 1i64..40, den in 1i64..8) {
        let n = g.order() as i64;
        let k = Rational64::new(num, den);
        prop_assume!(k < Rational64::from(n));
        let v = check_spectral_condition(
            &g,
            &BoundQuery::new(k, Params::adjacency(), DEFAULT_EPSILON).unwrap(),
        )
        .unwrap();
        let routed = Rational64::from(2 * g.min_degree() as i64) > Rational64::from(n) - k;
        prop_assert_eq!(v.theorem == TheoremId::Th2, routed);
        let two_mu = fractional_matching_number(&g).twice() as i64;
        prop_assert_eq!(v.conclusion_holds, Rational64::from(two_mu) > Rational64::from(n) - k);
    }
}
