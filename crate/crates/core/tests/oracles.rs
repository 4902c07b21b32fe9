mod common;

use std::collections::BTreeSet;

use common::{corpus, is_identity, naive_automorphisms, naive_indices, naive_is_small};
use itertools::Itertools;
use symbreak::colouring::{breaks_all, preserves, EdgeColouring};
use symbreak::graph::{parse_graph6, Graph};
use symbreak::solver::{
    distinguishing_index, find_distinguishing_or_almost, small_distinguishing_index,
    DistinguishingOrAlmost, IndexValue, SolverConfig,
};
use symbreak::symmetry::{automorphism_group, small_automorphisms, Permutation};

fn images(ps: &[Permutation]) -> Vec<Vec<usize>> {
    ps.iter().map(|p| p.images()).collect()
}

/// Every k-colour vector of length m, counter order.
fn all_colourings(m: usize, k: u8) -> Vec<Vec<u8>> {
    (0..m).map(|_| 1..=k).multi_cartesian_product().collect()
}

#[test]
fn automorphism_groups_match_brute_force_up_to_six_vertices() {
    for n in 1..=6 {
        for g in corpus(&format!("all{n}")) {
            let grp = automorphism_group(&g, 12).unwrap();
            assert_eq!(images(grp.elements()), naive_automorphisms(&g), "{g:?}");
        }
    }
}

#[test]
fn small_automorphisms_match_brute_force() {
    for g in corpus("all5").into_iter().chain(corpus("conn6")) {
        let grp = automorphism_group(&g, 12).unwrap();
        let expected: Vec<Vec<usize>> = naive_automorphisms(&g)
            .into_iter()
            .filter(|p| naive_is_small(&g, p))
            .collect();
        assert_eq!(images(&small_automorphisms(&g, &grp)), expected);
    }
}

#[test]
fn group_orders_of_named_graphs() {
    let petersen = parse_graph6("IheA@GUAo").unwrap();
    assert_eq!(automorphism_group(&petersen, 12).unwrap().order(), 120);
    assert_eq!(
        automorphism_group(&Graph::complete(6).unwrap(), 12)
            .unwrap()
            .order(),
        720
    );
    assert_eq!(
        automorphism_group(&Graph::cycle(7).unwrap(), 12)
            .unwrap()
            .order(),
        14
    );
}

#[test]
fn indices_match_enumeration_up_to_six_vertices() {
    let cfg = SolverConfig::default();
    for n in 1..=6 {
        for g in corpus(&format!("all{n}")) {
            let (d, ds) = naive_indices(&g, cfg.max_colours);
            assert_eq!(
                distinguishing_index(&g, &cfg).unwrap().value,
                d,
                "D' of {g:?}"
            );
            assert_eq!(
                small_distinguishing_index(&g, &cfg).unwrap().value,
                ds,
                "D's of {g:?}"
            );
        }
    }
}

#[test]
fn witnesses_are_valid() {
    let cfg = SolverConfig::default();
    for g in corpus("all6") {
        let grp = automorphism_group(&g, 12).unwrap();
        let small = small_automorphisms(&g, &grp);
        let r = small_distinguishing_index(&g, &cfg).unwrap();
        match (r.value, r.witness) {
            (IndexValue::Finite(k), Some(w)) => {
                assert!(breaks_all(&g, &w, &small));
                assert!(w.colours().iter().all(|&c| (1..=k as u8).contains(&c)));
            }
            (IndexValue::Finite(_), None) => panic!("finite value without witness"),
            (_, w) => assert!(w.is_none()),
        }
    }
}

#[test]
fn c6_two_colourings() {
    let c6 = Graph::cycle(6).unwrap();
    let grp = automorphism_group(&c6, 12).unwrap();
    let small = small_automorphisms(&c6, &grp);
    let breaking = all_colourings(6, 2)
        .into_iter()
        .filter(|v| breaks_all(&c6, &EdgeColouring::new(v.clone(), 2).unwrap(), &small))
        .count();
    assert!(breaking > 0);
    let r = small_distinguishing_index(&c6, &SolverConfig::default()).unwrap();
    assert_eq!(r.value, IndexValue::Finite(2));
}

#[test]
fn c4_distinguishing_or_almost_matches_enumeration() {
    let c4 = Graph::cycle(4).unwrap();
    let auts: Vec<Vec<usize>> = naive_automorphisms(&c4)
        .into_iter()
        .filter(|p| !is_identity(p))
        .collect();
    let mut distinguishing = Vec::new();
    let mut almost = BTreeSet::new();
    for v in all_colourings(4, 2) {
        let c = EdgeColouring::new(v.clone(), 2).unwrap();
        let preservers: Vec<&Vec<usize>> = auts
            .iter()
            .filter(|p| preserves(&c4, &c, &Permutation::from_images((*p).clone()).unwrap()))
            .collect();
        if preservers.is_empty() {
            distinguishing.push(v);
            continue;
        }
        let swapped = |x: usize, y: usize| preservers.iter().all(|p| p[x] == y && p[y] == x);
        if (0..4).tuple_combinations().any(|(x, y)| swapped(x, y)) {
            almost.insert(v);
        }
    }
    let outcome = find_distinguishing_or_almost(&c4, 2, &SolverConfig::default()).unwrap();
    match outcome {
        DistinguishingOrAlmost::Distinguishing(c) => {
            assert!(distinguishing.contains(&c.colours().to_vec()))
        }
        DistinguishingOrAlmost::Almost { colourings, .. } => {
            assert!(distinguishing.is_empty());
            let found: BTreeSet<Vec<u8>> = colourings
                .iter()
                .map(|a| a.colouring.colours().to_vec())
                .collect();
            assert_eq!(found, almost);
        }
        DistinguishingOrAlmost::None => assert!(distinguishing.is_empty() && almost.is_empty()),
    }
}

#[test]
fn named_index_values() {
    let cfg = SolverConfig::default();
    let p3 = Graph::path(3).unwrap();
    assert_eq!(
        distinguishing_index(&p3, &cfg).unwrap().value,
        IndexValue::Finite(2)
    );
    let k2 = Graph::complete(2).unwrap();
    assert_eq!(
        distinguishing_index(&k2, &cfg).unwrap().value,
        IndexValue::Infinite
    );
    assert_eq!(
        small_distinguishing_index(&k2, &cfg).unwrap().value,
        IndexValue::Infinite
    );
    let star = Graph::star(5).unwrap();
    assert_eq!(
        small_distinguishing_index(&star, &cfg).unwrap().value,
        IndexValue::Finite(1)
    );
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(
        small_distinguishing_index(&c6, &cfg).unwrap().value,
        IndexValue::Finite(2)
    );

    let asym =
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 2)]).unwrap();
    assert_eq!(naive_automorphisms(&asym).len(), 1);
    assert_eq!(
        distinguishing_index(&asym, &cfg).unwrap().value,
        IndexValue::Finite(1)
    );
}
