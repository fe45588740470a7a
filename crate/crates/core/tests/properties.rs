use proptest::prelude::*;

use convexkit::convexity::{hull, is_convex};
use convexkit::generators::random_connected_graph;
use convexkit::intervals::{interval, IntervalKind};
use convexkit::io::{encode_graph6, parse_graph6};
use convexkit::oracle::{oracle_interval, WalkBudget};
use convexkit::products::{cartesian, corona, lexicographic, strong, Layer};
use convexkit::VertexSet;

fn graph() -> impl Strategy<Value = convexkit::Graph> {
    (1usize..=7, 0.2f64..0.8, any::<u64>()).prop_map(|(n, p, seed)| random_connected_graph(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree_with_the_oracle(g in graph(), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.n(), b % g.n());
        let budget = WalkBudget::default_for(g.n());
        for kind in [IntervalKind::WeaklyToll, IntervalKind::SemiWeaklyToll, IntervalKind::Toll] {
            prop_assert_eq!(interval(&g, u, v, kind).unwrap(), oracle_interval(&g, u, v, kind, budget).unwrap());
        }
    }

    #[test]
    fn intervals_nest(g in graph(), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.n(), b % g.n());
        let wt = interval(&g, u, v, IntervalKind::WeaklyToll).unwrap();
        let toll = interval(&g, u, v, IntervalKind::Toll).unwrap();
        let mono = interval(&g, u, v, IntervalKind::Monophonic).unwrap();
        let geo = interval(&g, u, v, IntervalKind::Geodesic).unwrap();
        prop_assert!(geo.is_subset(&mono) && mono.is_subset(&toll) && toll.is_subset(&wt));
        prop_assert!(wt.contains(u) && wt.contains(v));
    }

    #[test]
    fn hulls_are_convex(g in graph(), mask in any::<u32>()) {
        let n = g.n();
        let mut s = VertexSet::from_iter(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if s.is_empty() {
            s.insert(0);
        }
        for kind in IntervalKind::ALL {
            let h = hull(&g, &s, kind).unwrap();
            prop_assert!(is_convex(&g, &h, kind).unwrap());
            prop_assert!(s.is_subset(&h));
        }
    }

    #[test]
    fn graph6_round_trip(g in graph()) {
        let text = encode_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn product_shapes(g in graph(), h in graph()) {
        let (m, n) = (g.n(), h.n());
        let (eg, eh) = (g.edge_count(), h.edge_count());
        prop_assert_eq!(lexicographic(&g, &h).graph.edge_count(), m * eh + eg * n * n);
        prop_assert_eq!(cartesian(&g, &h).graph.edge_count(), m * eh + eg * n);
        prop_assert_eq!(strong(&g, &h).graph.edge_count(), m * eh + eg * n + 2 * eg * eh);
        let c = corona(&g, &h);
        prop_assert_eq!(c.graph.n(), m * (1 + n));
        prop_assert_eq!(c.graph.edge_count(), eg + m * (eh + n));
        for i in 0..m {
            prop_assert_eq!(c.layer(Layer::Copy { copy: i }).unwrap().len(), n);
        }
        let lex = lexicographic(&g, &h);
        for v in lex.graph.vertices() {
            let (a, b) = (lex.project_g(v).unwrap(), lex.project_h(v).unwrap());
            prop_assert_eq!(lex.pair(a, b).unwrap(), v);
        }
    }
}
