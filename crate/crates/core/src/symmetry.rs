//! Permutations, automorphism groups and orbits.
//!
//! Groups are stored as complete, lexicographically sorted element lists.
//! That is wasteful compared to a base and strong generating set, but every
//! consumer here (colouring verification in particular) has to walk all
//! elements anyway, and for the graph orders this crate targets (≤ 12) the
//! lists stay manageable.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default refusal threshold for [`automorphism_group`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// A bijection on `0..n`, stored by images: `image[v]` is where `v` goes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).map(|v| v as u8).collect(),
        }
    }

    /// Validates that `image` is a bijection on `0..image.len()`.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n > 256 {
            return Err(Error::NotBijection { n });
        }
        let mut seen = vec![false; n];
        for &w in &image {
            if w >= n || std::mem::replace(&mut seen[w], true) {
                return Err(Error::NotBijection { n });
            }
        }
        Ok(Permutation {
            image: image.into_iter().map(|w| w as u8).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&w| w as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other
                .image
                .iter()
                .map(|&w| self.image[w as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w as usize] = v as u8;
        }
        Permutation { image: inv }
    }

    /// Image of a vertex set.
    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.apply(v)).collect()
    }

    /// Vertices not fixed.
    pub fn support(&self) -> VertexSet {
        (0..self.len()).filter(|&v| self.apply(v) != v).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.image)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.image.iter())
    }
}

/// True iff `p` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: p.len(),
        });
    }
    Ok(preserves_adjacency(g, p))
}

fn preserves_adjacency(g: &Graph, p: &Permutation) -> bool {
    (0..g.order()).all(|u| p.apply_set(g.neighbours(u)) == g.neighbours(p.apply(u)))
}

/// True iff `p` moves some vertex onto one of its neighbours.
pub fn is_small(g: &Graph, p: &Permutation) -> bool {
    (0..p.len()).any(|v| {
        let w = p.apply(v);
        w != v && g.has_edge(v, w)
    })
}

/// A permutation group given by its full element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    /// The trivial group on `n` points.
    pub fn trivial(n: usize) -> Self {
        AutGroup {
            n,
            elements: vec![Permutation::identity(n)],
        }
    }

    /// Wraps an element list, sorting it. The caller vouches for closure.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        AutGroup { n, elements }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Elements in lexicographic order of their image arrays; the identity
    /// is always first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Ordered partition of the vertices, as per-vertex class ids `0..k`.
///
/// Class ids are assigned by sorting isomorphism-invariant keys, so the
/// refinement commutes with relabelling: for any isomorphism `q`, refining
/// `q·π` on `q·g` gives `q` applied to the refinement of `π` on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Cells {
    class_of: Vec<u32>,
    count: usize,
}

impl Cells {
    fn by_degree(g: &Graph) -> Cells {
        Cells::from_keys((0..g.order()).map(|v| g.degree(v)).collect())
    }

    fn from_keys<K: Ord + Clone>(keys: Vec<K>) -> Cells {
        let mut distinct = keys.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let class_of = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("key present") as u32)
            .collect();
        Cells {
            class_of,
            count: distinct.len(),
        }
    }

    fn is_discrete(&self) -> bool {
        self.count == self.class_of.len()
    }

    fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.class_of {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Splits each class by the counts of neighbours in every class, until
    /// stable.
    fn refine(&mut self, g: &Graph) {
        loop {
            let keys: Vec<(u32, Vec<u32>)> = (0..g.order())
                .map(|v| {
                    let mut counts = vec![0u32; self.count];
                    for w in g.neighbours(v).iter() {
                        counts[self.class_of[w] as usize] += 1;
                    }
                    (self.class_of[v], counts)
                })
                .collect();
            let next = Cells::from_keys(keys);
            let stable = next.count == self.count;
            *self = next;
            if stable {
                return;
            }
        }
    }

    /// Gives `v` a class of its own, placed just before the rest of its old
    /// class.
    fn individualize(&self, v: usize) -> Cells {
        Cells::from_keys(
            self.class_of
                .iter()
                .enumerate()
                .map(|(u, &c)| (c, u != v))
                .collect::<Vec<_>>(),
        )
    }
}

/// All automorphisms of `g`, by individualization and refinement.
///
/// Refuses graphs with more than `enumeration_limit` vertices rather than
/// approximating.
pub fn automorphism_group(g: &Graph, enumeration_limit: usize) -> Result<AutGroup> {
    let n = g.order();
    if n > enumeration_limit || n > 255 {
        return Err(Error::EnumerationLimit {
            n,
            limit: enumeration_limit,
        });
    }
    let mut root = Cells::by_degree(g);
    root.refine(g);
    let mut elements = Vec::new();
    search(g, &root, &root, &mut elements);
    Ok(AutGroup::from_elements(n, elements))
}

fn search(g: &Graph, domain: &Cells, image: &Cells, out: &mut Vec<Permutation>) {
    if domain.is_discrete() {
        let mut p = vec![0u8; domain.class_of.len()];
        let mut vertex_of_class = vec![0u8; image.class_of.len()];
        for (w, &c) in image.class_of.iter().enumerate() {
            vertex_of_class[c as usize] = w as u8;
        }
        for (v, &c) in domain.class_of.iter().enumerate() {
            p[v] = vertex_of_class[c as usize];
        }
        let p = Permutation { image: p };
        if preserves_adjacency(g, &p) {
            out.push(p);
        }
        return;
    }
    let sizes = domain.sizes();
    let target = sizes
        .iter()
        .position(|&s| s > 1)
        .expect("non-discrete partition") as u32;
    let v = domain
        .class_of
        .iter()
        .position(|&c| c == target)
        .expect("class is non-empty");
    let mut next_domain = domain.individualize(v);
    next_domain.refine(g);
    let next_sizes = next_domain.sizes();
    for w in (0..g.order()).filter(|&w| image.class_of[w] == target) {
        let mut next_image = image.individualize(w);
        next_image.refine(g);
        if next_image.count == next_domain.count && next_image.sizes() == next_sizes {
            search(g, &next_domain, &next_image, out);
        }
    }
}

/// The automorphisms in `grp` that are small, in the group's order.
pub fn small_automorphisms(g: &Graph, grp: &AutGroup) -> Vec<Permutation> {
    grp.elements()
        .iter()
        .filter(|p| is_small(g, p))
        .cloned()
        .collect()
}

/// Orbits of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Ordered by least member.
    pub classes: Vec<VertexSet>,
    pub class_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn orbit_of(&self, v: usize) -> VertexSet {
        self.classes[self.class_of[v]]
    }
}

pub fn vertex_orbits(grp: &AutGroup, n: usize) -> OrbitPartition {
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let orbit: VertexSet = grp.elements().iter().map(|p| p.apply(v)).collect();
        for w in orbit.iter() {
            class_of[w] = classes.len();
        }
        classes.push(orbit);
    }
    OrbitPartition { classes, class_of }
}

/// `{ p ∈ grp : p(s) = s }`.
pub fn setwise_stabilizer(grp: &AutGroup, s: VertexSet) -> AutGroup {
    AutGroup {
        n: grp.n,
        elements: grp
            .elements()
            .iter()
            .filter(|p| p.apply_set(s) == s)
            .cloned()
            .collect(),
    }
}
