use proptest::prelude::*;
use roman_bondage::io::{parse_graph6, write_graph6};
use roman_bondage::{Girth, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(12)) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn girth_never_drops_when_edges_go(g in arb_graph(10), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let e = g.edges()[pick.index(g.edge_count())];
        let h = g.remove_edges(&[e]).unwrap();
        prop_assert!(h.girth() >= g.girth());
    }

    #[test]
    fn edge_cut_is_symmetric(g in arb_graph(10), mask in any::<u16>()) {
        let n = g.vertex_count();
        let side: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        prop_assume!(!side.is_empty() && !rest.is_empty());
        let a = g.edge_cut(&side).unwrap();
        let b = g.edge_cut(&rest).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn remove_then_add_is_identity(g in arb_graph(10), mask in any::<u64>()) {
        let chosen: Vec<_> = g.edges().iter().enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let back = g.remove_edges(&chosen).unwrap().add_edges(&chosen).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn private_neighbors_match_definition(g in arb_graph(5), mask in any::<u8>(), pick in any::<prop::sample::Index>()) {
        let n = g.vertex_count();
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!set.is_empty());
        let x = set[pick.index(set.len())];
        let closed = |v: usize, w: usize| v == w || g.has_edge(v, w);
        let expected: Vec<usize> = (0..n)
            .filter(|&w| closed(x, w) && set.iter().all(|&s| s == x || !closed(s, w)))
            .collect();
        prop_assert_eq!(g.private_neighbors(x, &set).unwrap(), expected);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(70)) {
        let bytes = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }
}

#[test]
fn forests_have_infinite_girth() {
    let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    assert_eq!(star.girth(), Girth::Infinite);
}
