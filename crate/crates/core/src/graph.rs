//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset row per vertex, so membership
//! tests are a shift and a mask. Graphs are immutable once built.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, GraphError};
use serde::Serialize;

/// Hard upper bound on the number of vertices of a [`Graph`].
pub const MAX_ORDER: usize = 64;

/// An undirected edge in canonical orientation `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}`, orienting it so that `u < v`.
    ///
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A set of vertex ids, packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Least member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A finite simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            g.rows[a] |= 1u64 << b;
            g.rows[b] |= 1u64 << a;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)).filter(|&(a, b)| a != b))
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// All edges, sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            let above = if u + 1 >= 64 {
                0
            } else {
                self.rows[u] >> (u + 1) << (u + 1)
            };
            for v in VertexSet::from_bits(above).iter() {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// The graph with vertex `v` renamed to `image[v]`.
    pub fn relabel(&self, image: &[usize]) -> Graph {
        assert_eq!(image.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbours(u).iter() {
                rows[image[u]] |= 1u64 << image[v];
            }
        }
        Graph { n: self.n, rows }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || connected_components(self).len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Largest order representable in the single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(GraphError::Graph6Length {
            expected: 1,
            found: 0,
        });
    };
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6Char { pos, byte: b });
        }
    }
    if first == 126 {
        return Err(GraphError::TooLarge {
            n: GRAPH6_MAX_ORDER + 1,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(GraphError::Graph6Length {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(GraphError::Graph6Trailing {
            expected,
            found: bytes.len(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.rows[u] |= 1u64 << v;
                g.rows[v] |= 1u64 << u;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in graph6 short form (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::TooLarge {
            n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses the plain edge-list format: a line holding `n`, then one
/// whitespace-separated `u v` pair per line (0-indexed). Blank lines are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((line_no, header)) = lines.next() else {
        return Err(GraphError::EdgeListToken {
            line: 1,
            token: String::new(),
        });
    };
    let n = parse_index(header.trim(), line_no)?;
    let mut g = Graph::empty(n)?;
    for (line_no, line) in lines {
        let mut tokens = line.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(GraphError::EdgeListToken {
                line: line_no + 1,
                token: line.trim().to_owned(),
            });
        };
        let (a, b) = (parse_index(a, line_no)?, parse_index(b, line_no)?);
        if a >= n || b >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: a.max(b),
                n,
            });
        }
        if a == b {
            return Err(GraphError::SelfLoop { vertex: a });
        }
        g.rows[a] |= 1u64 << b;
        g.rows[b] |= 1u64 << a;
    }
    Ok(g)
}

fn parse_index(token: &str, line_no: usize) -> Result<usize, GraphError> {
    token.parse().map_err(|_| GraphError::EdgeListToken {
        line: line_no + 1,
        token: token.to_owned(),
    })
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Maximal connected vertex sets, ordered by least member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for start in 0..g.order() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(g.neighbours(v));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Components of the subgraph induced by `s`, as subsets of the original
/// vertex ids, ordered by least member.
pub fn induced_components(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut rest = s;
    let mut out = Vec::new();
    while let Some(start) = rest.min() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(g.neighbours(v));
            }
            frontier = next.intersection(s).difference(comp);
            comp = comp.union(frontier);
        }
        rest = rest.difference(comp);
        out.push(comp);
    }
    out
}

/// The subgraph induced by `s`, relabelled to `0..|s|` in increasing order
/// of original id, together with the map from new ids back to old ones.
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
    if let Some(bad) = s.iter().find(|&v| v >= g.order()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: bad,
            n: g.order(),
        });
    }
    let map = s.to_vec();
    let mut h = Graph::empty(map.len())?;
    for (i, &a) in map.iter().enumerate() {
        for (j, &b) in map.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                h.rows[i] |= 1u64 << j;
                h.rows[j] |= 1u64 << i;
            }
        }
    }
    Ok((h, map))
}

/// Multi-source BFS. Sources get `Some(0)`; unreachable vertices get `None`.
pub fn bfs_distance(g: &Graph, sources: VertexSet) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    for s in sources.iter().filter(|&s| s < g.order()) {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued vertices have a distance");
        for w in g.neighbours(v).iter() {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Sorted degree sequence and regularity flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub regular: bool,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let regular = degrees.windows(2).all(|w| w[0] == w[1]);
    DegreeProfile { degrees, regular }
}

/// Reads either input format.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, Error> {
    Ok(match format {
        GraphFormat::Graph6 => parse_graph6(text)?,
        GraphFormat::EdgeList => parse_edge_list(text)?,
    })
}

/// Input formats understood by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn graph6_small_cases() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(
            parse_graph6(">>graph6<<Bw\n").unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn graph6_matches_reference_encoder() {
        // Edges 0-2, 0-4, 1-3, 3-4 on five vertices, as encoded by petgraph.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn graph6_errors_are_distinct() {
        assert!(matches!(
            parse_graph6("B"),
            Err(GraphError::Graph6Length {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(GraphError::Graph6Trailing { .. })
        ));
        assert!(matches!(
            parse_graph6("B w"),
            Err(GraphError::Graph6Char { pos: 1, byte: b' ' })
        ));
        assert!(matches!(
            parse_graph6(""),
            Err(GraphError::Graph6Length { .. })
        ));
        assert!(matches!(
            parse_graph6("~??~"),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn graph6_rejects_large_order() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(
            to_graph6(&g),
            Err(GraphError::TooLarge { n: 63, .. })
        ));
    }

    #[test]
    fn edge_list_cases() {
        assert_eq!(
            parse_edge_list("3\n0 1\n1 2").unwrap(),
            Graph::path(3).unwrap()
        );
        assert_eq!(
            parse_edge_list("2\n0 1\n1 0").unwrap(),
            Graph::complete(2).unwrap()
        );
        assert!(matches!(
            parse_edge_list("2\n0 2"),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            parse_edge_list("2\n1 1"),
            Err(GraphError::SelfLoop { vertex: 1 })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 x"),
            Err(GraphError::EdgeListToken { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 1 1"),
            Err(GraphError::EdgeListToken { .. })
        ));
        let g = Graph::cycle(5).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn components() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(connected_components(&k2), vec![VertexSet::full(2)]);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            connected_components(&e3),
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
        assert_eq!(
            connected_components(&two_edges()),
            vec![VertexSet::from_iter([0, 1]), VertexSet::from_iter([2, 3])]
        );
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            induced_components(&c6, VertexSet::from_iter([0, 1, 3, 4])),
            vec![VertexSet::from_iter([0, 1]), VertexSet::from_iter([3, 4])]
        );
    }

    #[test]
    fn induced() {
        let c4 = Graph::cycle(4).unwrap();
        let (h, map) = induced_subgraph(&c4, VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(h, Graph::complete(2).unwrap());
        assert_eq!(map, vec![0, 1]);
        let (h, map) = induced_subgraph(&c4, VertexSet::EMPTY).unwrap();
        assert_eq!(h.order(), 0);
        assert!(map.is_empty());
        let k3 = Graph::complete(3).unwrap();
        let (h, map) = induced_subgraph(&k3, VertexSet::from_iter([0, 2])).unwrap();
        assert_eq!(h, Graph::complete(2).unwrap());
        assert_eq!(map, vec![0, 2]);
        assert!(induced_subgraph(&k3, VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn distances() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            bfs_distance(&p3, VertexSet::singleton(0)),
            vec![Some(0), Some(1), Some(2)]
        );
        assert_eq!(bfs_distance(&p3, p3.vertices()), vec![Some(0); 3]);
        assert_eq!(
            bfs_distance(&two_edges(), VertexSet::singleton(0)),
            vec![Some(0), Some(1), None, None]
        );
    }

    #[test]
    fn degrees() {
        let c6 = degree_profile(&Graph::cycle(6).unwrap());
        assert_eq!(c6.degrees, vec![2; 6]);
        assert!(c6.regular);
        let star = degree_profile(&Graph::star(5).unwrap());
        assert_eq!(star.degrees, vec![1, 1, 1, 1, 1, 5]);
        assert!(!star.regular);
        let empty = degree_profile(&Graph::empty(0).unwrap());
        assert!(empty.degrees.is_empty());
        assert!(empty.regular);
    }

    #[test]
    fn vertex_set_ops() {
        let s = VertexSet::from_iter([3, 1, 63]);
        assert_eq!(s.to_vec(), vec![1, 3, 63]);
        assert_eq!(s.min(), Some(1));
        assert_eq!(s.len(), 3);
        assert!(s.contains(63) && !s.contains(2));
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
