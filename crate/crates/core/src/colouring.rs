//! Edge colourings and the preserve / break predicates.
//!
//! An [`EdgeColouring`] is a plain colour vector aligned with
//! [`Graph::edges`], i.e. with the edges sorted by `(u, v)`. Colour ids run
//! from 1 to `k`; the constructor uses 1 for "pink" and 2 for "blue".

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::symmetry::{AutGroup, Permutation, DEFAULT_ENUMERATION_LIMIT};

pub const PINK: u8 = 1;
pub const BLUE: u8 = 2;

const NO_EDGE: u16 = u16::MAX;

/// Lookup from vertex pairs to positions in the sorted edge list.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    n: usize,
    edges: Vec<Edge>,
    slot: Vec<u16>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let edges = g.edges();
        let mut slot = vec![NO_EDGE; n * n];
        for (i, e) in edges.iter().enumerate() {
            slot[e.u * n + e.v] = i as u16;
            slot[e.v * n + e.u] = i as u16;
        }
        EdgeIndex { n, edges, slot }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.slot[u * self.n + v] {
            NO_EDGE => None,
            i => Some(i as usize),
        }
    }

    /// The permutation an automorphism induces on edge positions:
    /// `action[i]` is the position of the image of edge `i`.
    pub fn action(&self, p: &Permutation) -> Vec<u16> {
        self.edges
            .iter()
            .map(|e| self.slot[p.apply(e.u) * self.n + p.apply(e.v)])
            .inspect(|&i| debug_assert_ne!(i, NO_EDGE, "not an automorphism"))
            .collect()
    }
}

/// `true` iff the colouring is constant along the given edge action.
#[inline]
pub(crate) fn preserved_by_action(colours: &[u8], action: &[u16]) -> bool {
    action
        .iter()
        .enumerate()
        .all(|(i, &j)| colours[i] == colours[j as usize])
}

/// A total map from edges to colours `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColouring {
    colours: Vec<u8>,
    k: u8,
}

impl EdgeColouring {
    pub fn new(colours: Vec<u8>, k: u8) -> Result<Self> {
        if let Some(bad) = colours.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::Colouring(format!("colour {bad} outside 1..={k}")));
        }
        Ok(EdgeColouring { colours, k })
    }

    pub(crate) fn from_raw(colours: Vec<u8>, k: u8) -> Self {
        debug_assert!(colours.iter().all(|&c| (1..=k).contains(&c)));
        EdgeColouring { colours, k }
    }

    /// Every edge gets colour 1.
    pub fn monochromatic(m: usize, k: u8) -> Self {
        EdgeColouring {
            colours: vec![1; m],
            k: k.max(1),
        }
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours actually used.
    pub fn colours_used(&self) -> usize {
        let mut used = [false; 256];
        for &c in &self.colours {
            used[c as usize] = true;
        }
        used.iter().filter(|&&u| u).count()
    }

    pub fn colour_of(&self, index: &EdgeIndex, u: usize, v: usize) -> Option<u8> {
        index.index_of(u, v).map(|i| self.colours[i])
    }

    /// Renames colours: colour `c` becomes `rename[c - 1]`.
    pub fn rename(&self, rename: &[u8]) -> EdgeColouring {
        EdgeColouring {
            colours: self
                .colours
                .iter()
                .map(|&c| rename[c as usize - 1])
                .collect(),
            k: self.k,
        }
    }

    /// Transports the colouring along a vertex relabelling: the result
    /// colours `g.relabel(q)` so that edge `q(u)q(v)` gets the colour of `uv`.
    pub fn relabel(&self, g: &Graph, q: &Permutation) -> EdgeColouring {
        let image = g.relabel(&q.images());
        let target = EdgeIndex::new(&image);
        let mut colours = vec![0; self.colours.len()];
        for (i, e) in g.edges().iter().enumerate() {
            let j = target
                .index_of(q.apply(e.u), q.apply(e.v))
                .expect("relabelled edge");
            colours[j] = self.colours[i];
        }
        EdgeColouring { colours, k: self.k }
    }

    /// One `u v colour` line per edge, sorted by `(u, v)`.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (e, c) in g.edges().iter().zip(&self.colours) {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, c);
        }
        out
    }

    /// Parses the `u v colour` format. Every edge of `g` must appear once.
    pub fn from_text(g: &Graph, text: &str, k: u8) -> Result<Self> {
        let index = EdgeIndex::new(g);
        let mut colours = vec![0u8; index.len()];
        for (line_no, line) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let bad = || Error::Colouring(format!("line {}: {:?}", line_no + 1, line.trim()));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [u, v, c] = fields[..] else {
                return Err(bad());
            };
            let (u, v, c): (usize, usize, u8) = (
                u.parse().map_err(|_| bad())?,
                v.parse().map_err(|_| bad())?,
                c.parse().map_err(|_| bad())?,
            );
            let i = index.index_of(u, v).ok_or_else(bad)?;
            if colours[i] != 0 {
                return Err(Error::Colouring(format!("edge {u}-{v} coloured twice")));
            }
            colours[i] = c;
        }
        if let Some(i) = colours.iter().position(|&c| c == 0) {
            return Err(Error::Colouring(format!(
                "edge {} is uncoloured",
                index.edge(i)
            )));
        }
        EdgeColouring::new(colours, k)
    }
}

fn check_len(g: &Graph, c: &EdgeColouring) {
    assert_eq!(
        c.len(),
        g.size(),
        "colouring does not match the graph's edge count"
    );
}

/// True iff `p` maps every edge to an edge of the same colour.
pub fn preserves(g: &Graph, c: &EdgeColouring, p: &Permutation) -> bool {
    check_len(g, c);
    let index = EdgeIndex::new(g);
    preserved_by_action(&c.colours, &index.action(p))
}

/// True iff no permutation in `targets` preserves `c`.
pub fn breaks_all(g: &Graph, c: &EdgeColouring, targets: &[Permutation]) -> bool {
    check_len(g, c);
    let index = EdgeIndex::new(g);
    targets
        .iter()
        .all(|p| !preserved_by_action(&c.colours, &index.action(p)))
}

/// An unordered pair `{x, y}` with `x < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct AlmostDistinguishingWitness {
    pub x: usize,
    pub y: usize,
}

/// Outcome of [`find_almost_distinguishing_witness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// Only the identity preserves the colouring.
    Distinguishing,
    /// Every non-identity preserving automorphism swaps the pair.
    Witness(AlmostDistinguishingWitness),
    NotAlmostDistinguishing,
}

/// Looks for the least pair `{x, y}` swapped by every non-identity element
/// of `grp` that preserves `c`.
pub fn find_almost_distinguishing_witness(
    g: &Graph,
    c: &EdgeColouring,
    grp: &AutGroup,
) -> WitnessOutcome {
    check_len(g, c);
    let index = EdgeIndex::new(g);
    let preservers: Vec<&Permutation> = grp
        .non_identity()
        .filter(|p| preserved_by_action(&c.colours, &index.action(p)))
        .collect();
    witness_among(&preservers)
}

pub(crate) fn witness_among(preservers: &[&Permutation]) -> WitnessOutcome {
    let Some(first) = preservers.first() else {
        return WitnessOutcome::Distinguishing;
    };
    for x in 0..first.len() {
        let y = first.apply(x);
        if y <= x || first.apply(y) != x {
            continue;
        }
        if preservers
            .iter()
            .all(|p| p.apply(x) == y && p.apply(y) == x)
        {
            return WitnessOutcome::Witness(AlmostDistinguishingWitness { x, y });
        }
    }
    WitnessOutcome::NotAlmostDistinguishing
}

/// True iff some graph isomorphism `g1 → g2` carries each edge to an edge of
/// the same colour id. Colours are compared literally; to ask the question
/// up to renaming, try each renaming of `c2` explicitly.
pub fn coloured_isomorphic(
    g1: &Graph,
    c1: &EdgeColouring,
    g2: &Graph,
    c2: &EdgeColouring,
) -> Result<bool> {
    check_len(g1, c1);
    check_len(g2, c2);
    let n = g1.order();
    if n > DEFAULT_ENUMERATION_LIMIT || g2.order() > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            n: n.max(g2.order()),
            limit: DEFAULT_ENUMERATION_LIMIT,
        });
    }
    if n != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let mut h1 = c1.colours.clone();
    let mut h2 = c2.colours.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(false);
    }
    let i1 = EdgeIndex::new(g1);
    let i2 = EdgeIndex::new(g2);
    // Per-vertex signature: sorted colours of incident edges.
    let signature = |g: &Graph, idx: &EdgeIndex, c: &EdgeColouring, v: usize| {
        let mut s: Vec<u8> = g
            .neighbours(v)
            .iter()
            .map(|w| c.colour_of(idx, v, w).unwrap())
            .collect();
        s.sort_unstable();
        s
    };
    let s1: Vec<Vec<u8>> = (0..n).map(|v| signature(g1, &i1, c1, v)).collect();
    let s2: Vec<Vec<u8>> = (0..n).map(|v| signature(g2, &i2, c2, v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_iso(
        0, g1, c1, &i1, g2, c2, &i2, &s1, &s2, &mut map, &mut used,
    ))
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    v: usize,
    g1: &Graph,
    c1: &EdgeColouring,
    i1: &EdgeIndex,
    g2: &Graph,
    c2: &EdgeColouring,
    i2: &EdgeIndex,
    s1: &[Vec<u8>],
    s2: &[Vec<u8>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == map.len() {
        return true;
    }
    for w in 0..map.len() {
        if used[w] || s1[v] != s2[w] {
            continue;
        }
        let consistent = (0..v).all(|u| {
            let mu = map[u];
            c1.colour_of(i1, u, v) == c2.colour_of(i2, mu, w)
                && g1.has_edge(u, v) == g2.has_edge(mu, w)
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(v + 1, g1, c1, i1, g2, c2, i2, s1, s2, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}
