//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use itertools::Itertools;
use symbreak::graph::parse_graph6;
use symbreak::{Graph, IndexValue};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}

/// Every graph of a bundled corpus, e.g. `corpus("conn6")`.
pub fn corpus(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(data_path(&format!("{name}.g6"))).unwrap();
    text.lines()
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}

/// All automorphisms, by filtering the n! permutations (lexicographic order).
pub fn naive_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let edges = g.edges();
    (0..n)
        .permutations(n)
        .filter(|p| edges.iter().all(|e| g.has_edge(p[e.u], p[e.v])))
        .collect()
}

pub fn naive_is_small(g: &Graph, p: &[usize]) -> bool {
    (0..g.order()).any(|v| p[v] != v && g.has_edge(v, p[v]))
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// Least `k ≤ max_k` admitting a colouring preserved by no target, found by
/// trying all `k^m` colour vectors. A target that fixes every edge is
/// preserved by every colouring, giving `Infinite`.
pub fn naive_index(g: &Graph, targets: &[Vec<usize>], max_k: u32) -> IndexValue {
    let edges = g.edges();
    let m = edges.len();
    let position = |a: usize, b: usize| {
        edges
            .iter()
            .position(|e| (e.u, e.v) == (a.min(b), a.max(b)))
            .unwrap()
    };
    let actions: Vec<Vec<usize>> = targets
        .iter()
        .map(|p| edges.iter().map(|e| position(p[e.u], p[e.v])).collect())
        .collect();
    if actions
        .iter()
        .any(|a| a.iter().enumerate().all(|(i, &j)| i == j))
    {
        return IndexValue::Infinite;
    }
    let preserved = |a: &[usize], colours: &[u8]| (0..m).all(|i| colours[i] == colours[a[i]]);
    for k in 1..=max_k {
        let mut colours = vec![0u8; m];
        loop {
            if actions.iter().all(|a| !preserved(a, &colours)) {
                return IndexValue::Finite(k);
            }
            // Next vector in base-k counting order; stop after wrapping.
            let mut i = m;
            let wrapped = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                colours[i] += 1;
                if u32::from(colours[i]) < k {
                    break false;
                }
                colours[i] = 0;
            };
            if wrapped {
                break;
            }
        }
    }
    IndexValue::Exceeds(max_k)
}

/// `(D', D'_s)` by brute force.
pub fn naive_indices(g: &Graph, max_k: u32) -> (IndexValue, IndexValue) {
    let auts = naive_automorphisms(g);
    let nontrivial: Vec<Vec<usize>> = auts.iter().filter(|p| !is_identity(p)).cloned().collect();
    let small: Vec<Vec<usize>> = auts
        .iter()
        .filter(|p| naive_is_small(g, p))
        .cloned()
        .collect();
    (
        naive_index(g, &nontrivial, max_k),
        naive_index(g, &small, max_k),
    )
}
