use proptest::prelude::*;
use proptest::sample::subsequence;

use symbreak::colouring::{breaks_all, preserves, EdgeColouring, EdgeIndex};
use symbreak::graph::{
    bfs_distance, connected_components, induced_subgraph, parse_edge_list, parse_graph6,
    to_edge_list, to_graph6, Graph, VertexSet,
};
use symbreak::solver::{distinguishing_index, small_distinguishing_index, SolverConfig};
use symbreak::symmetry::{
    automorphism_group, is_automorphism, is_small, setwise_stabilizer, small_automorphisms,
    vertex_orbits, Permutation,
};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let all = pairs(n);
        let len = all.len();
        subsequence(all, 0..=len).prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn graph_with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph_with_colouring(max_n: usize, k: u8) -> impl Strategy<Value = (Graph, EdgeColouring)> {
    graph(max_n).prop_flat_map(move |g| {
        let m = g.size();
        (Just(g), proptest::collection::vec(1..=k, m))
            .prop_map(move |(g, colours)| (g, EdgeColouring::new(colours, k).unwrap()))
    })
}

fn group(g: &Graph) -> symbreak::AutGroup {
    automorphism_group(g, 12).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(10)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn components_partition_vertices(g in graph(12)) {
        let comps = connected_components(&g);
        let mut seen = VertexSet::default();
        for c in &comps {
            prop_assert!(seen.intersection(*c).is_empty());
            seen = seen.union(*c);
            for u in c.iter() {
                prop_assert!(g.neighbours(u).difference(*c).is_empty());
            }
        }
        prop_assert_eq!(seen, g.vertices());
        prop_assert_eq!(comps.len() == 1, g.is_connected() || g.order() == 0);
    }

    #[test]
    fn bfs_distances_step_by_one(g in graph(10), s in 0usize..10) {
        let s = s % g.order();
        let dist = bfs_distance(&g, VertexSet::singleton(s));
        prop_assert_eq!(dist[s], Some(0));
        for e in g.edges() {
            match (dist[e.u], dist[e.v]) {
                (Some(a), Some(b)) => prop_assert!(a.abs_diff(b) <= 1),
                (None, None) => {}
                _ => prop_assert!(false, "edge between reached and unreached vertex"),
            }
        }
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in graph(10), bits in any::<u64>()) {
        let s = VertexSet::from_bits(bits).intersection(g.vertices());
        let (h, map) = induced_subgraph(&g, s).unwrap();
        prop_assert_eq!(map.clone(), s.to_vec());
        for a in 0..h.order() {
            for b in 0..h.order() {
                if a != b {
                    prop_assert_eq!(h.has_edge(a, b), g.has_edge(map[a], map[b]));
                }
            }
        }
    }

    #[test]
    fn group_axioms(g in graph(7)) {
        let grp = group(&g);
        let n = g.order();
        prop_assert!(grp.contains(&Permutation::identity(n)));
        for p in grp.elements() {
            prop_assert!(is_automorphism(&g, p).unwrap());
            prop_assert!(grp.contains(&p.inverse()));
        }
        for p in grp.elements().iter().take(8) {
            for q in grp.elements().iter().take(8) {
                prop_assert!(grp.contains(&p.compose(q)));
            }
        }
    }

    #[test]
    fn orbit_stabilizer(g in graph(7)) {
        let grp = group(&g);
        let orbits = vertex_orbits(&grp, g.order());
        for v in 0..g.order() {
            let stab = setwise_stabilizer(&grp, VertexSet::singleton(v));
            prop_assert_eq!(orbits.orbit_of(v).len() * stab.order(), grp.order());
        }
    }

    #[test]
    fn relabelled_graph_has_conjugate_group((g, image) in graph_with_permutation(7)) {
        let q = Permutation::from_images(image.clone()).unwrap();
        let h = g.relabel(&image);
        let grp = group(&g);
        let hgrp = group(&h);
        prop_assert_eq!(grp.order(), hgrp.order());
        for p in grp.elements() {
            let conj = q.compose(p).compose(&q.inverse());
            prop_assert!(hgrp.contains(&conj));
            prop_assert_eq!(is_small(&g, p), is_small(&h, &conj));
        }
        prop_assert_eq!(small_automorphisms(&g, &grp).len(), small_automorphisms(&h, &hgrp).len());
    }

    #[test]
    fn preservers_form_a_subgroup((g, c) in graph_with_colouring(6, 2)) {
        let grp = group(&g);
        let kept: Vec<&Permutation> = grp.elements().iter().filter(|p| preserves(&g, &c, p)).collect();
        for p in &kept {
            prop_assert!(kept.contains(&&p.inverse()));
            for q in &kept {
                prop_assert!(kept.contains(&&p.compose(q)));
            }
        }
    }

    #[test]
    fn swapping_colours_keeps_breaking((g, c) in graph_with_colouring(6, 2)) {
        let grp = group(&g);
        let small = small_automorphisms(&g, &grp);
        let swapped = c.rename(&[2, 1]);
        prop_assert_eq!(breaks_all(&g, &c, &small), breaks_all(&g, &swapped, &small));
        for p in grp.elements() {
            prop_assert_eq!(preserves(&g, &c, p), preserves(&g, &swapped, p));
        }
    }

    #[test]
    fn relabelling_carries_preservation((g, image) in graph_with_permutation(6), seed in any::<u64>()) {
        let m = g.size();
        let colours: Vec<u8> = (0..m).map(|i| 1 + ((seed >> (i % 64)) & 1) as u8).collect();
        let c = EdgeColouring::new(colours, 2).unwrap();
        let q = Permutation::from_images(image.clone()).unwrap();
        let h = g.relabel(&image);
        let ch = c.relabel(&g, &q);
        let index = EdgeIndex::new(&g);
        for e in index.edges() {
            prop_assert_eq!(
                c.colour_of(&index, e.u, e.v),
                ch.colour_of(&EdgeIndex::new(&h), q.apply(e.u), q.apply(e.v))
            );
        }
        let grp = group(&g);
        for p in grp.elements() {
            let conj = q.compose(p).compose(&q.inverse());
            prop_assert_eq!(preserves(&g, &c, p), preserves(&h, &ch, &conj));
        }
    }

    #[test]
    fn indices_are_isomorphism_invariant((g, image) in graph_with_permutation(6)) {
        let cfg = SolverConfig::default();
        let h = g.relabel(&image);
        prop_assert_eq!(
            distinguishing_index(&g, &cfg).unwrap().value,
            distinguishing_index(&h, &cfg).unwrap().value
        );
        let dg = small_distinguishing_index(&g, &cfg).unwrap().value;
        prop_assert_eq!(dg, small_distinguishing_index(&h, &cfg).unwrap().value);
        prop_assert!(dg <= distinguishing_index(&g, &cfg).unwrap().value);
    }
}
