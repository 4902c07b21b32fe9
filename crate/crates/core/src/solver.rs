//! Exact distinguishing and small-distinguishing indices.
//!
//! The workhorse is [`BreakingSearch`], which looks for a `k`-colouring
//! preserved by none of a fixed set of target automorphisms. It first runs a
//! seeded local search and, if that fails, an exhaustive depth-first walk
//! over colour vectors. Only the exhaustive phase may report non-existence.

use std::cmp::Ordering;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::colouring::{
    preserved_by_action, witness_among, AlmostDistinguishingWitness, EdgeColouring, EdgeIndex,
    WitnessOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{to_edge_list, to_graph6, Graph};
use crate::symmetry::{
    automorphism_group, small_automorphisms, AutGroup, Permutation, DEFAULT_ENUMERATION_LIMIT,
};

/// Default number of colours tried before giving up with [`IndexValue::Exceeds`].
pub const DEFAULT_MAX_COLOURS: u32 = 4;
/// Default number of local-search restarts.
pub const DEFAULT_BUDGET: usize = 16;
/// Largest colouring space [`find_distinguishing_or_almost`] will enumerate
/// once no distinguishing colouring exists.
pub const MAX_ENUMERATED_COLOURINGS: u64 = 1 << 24;

/// A distinguishing-type index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexValue {
    Finite(u32),
    /// No colouring with at most this many colours works.
    Exceeds(u32),
    /// Some target is preserved by every colouring.
    Infinite,
}

impl IndexValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            IndexValue::Finite(k) => Some(k),
            _ => None,
        }
    }

    fn rank(self) -> (u8, u32) {
        match self {
            IndexValue::Finite(k) => (0, k),
            IndexValue::Exceeds(k) => (1, k),
            IndexValue::Infinite => (2, 0),
        }
    }

    /// True iff the value is known to be at most `k`.
    pub fn at_most(self, k: u32) -> bool {
        matches!(self, IndexValue::Finite(v) if v <= k)
    }
}

impl PartialOrd for IndexValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Finite(_) < Exceeds(_) < Infinite`. Note that `Exceeds(k)` only bounds
/// the true value from below, so comparisons involving it are conservative.
impl Ord for IndexValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Finite(k) => write!(f, "{k}"),
            IndexValue::Exceeds(k) => write!(f, ">{k}"),
            IndexValue::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl serde::Serialize for IndexValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            IndexValue::Finite(k) => s.serialize_u32(*k),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> serde::Deserialize<'de> for IndexValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(k) => Ok(IndexValue::Finite(k)),
            Raw::Text(t) if t == "INFINITE" => Ok(IndexValue::Infinite),
            Raw::Text(t) => t
                .strip_prefix('>')
                .and_then(|k| k.parse().ok())
                .map(IndexValue::Exceeds)
                .ok_or_else(|| D::Error::custom(format!("bad index value {t:?}"))),
        }
    }
}

/// How an index value was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// No target automorphisms, so one colour suffices.
    NoSymmetryShortcut,
    /// The witness came from the seeded local search.
    HeuristicSearch,
    /// The witness, or the proof that none exists, came from enumeration
    /// (or from the edge-action test, which is a proof for every `k`).
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexResult {
    pub value: IndexValue,
    pub witness: Option<EdgeColouring>,
    pub method: Method,
}

/// Knobs shared by the index computations.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub max_colours: u32,
    pub budget: usize,
    /// Replaces the seed otherwise derived from the graph's graph6 string.
    pub seed_override: Option<u64>,
    pub enumeration_limit: usize,
    /// Skip the local search and go straight to enumeration.
    pub exhaustive_only: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_colours: DEFAULT_MAX_COLOURS,
            budget: DEFAULT_BUDGET,
            seed_override: None,
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            exhaustive_only: false,
        }
    }
}

/// Seed for the local search, derived from the graph6 encoding.
pub fn graph_seed(g: &Graph) -> u64 {
    let text = to_graph6(g).unwrap_or_else(|_| to_edge_list(g));
    let digest = Sha256::digest(text.as_bytes());
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

struct Target {
    /// `(i, action[i])` for every edge the target moves.
    moved: Vec<(u16, u16)>,
}

impl Target {
    #[inline]
    fn preserved(&self, colours: &[u8]) -> bool {
        self.moved
            .iter()
            .all(|&(i, j)| colours[i as usize] == colours[j as usize])
    }
}

/// Search for colourings preserved by none of a set of automorphisms.
pub struct BreakingSearch {
    m: usize,
    targets: Vec<Target>,
    /// `by_depth[d]` lists targets fully decided once edge `d` is coloured.
    by_depth: Vec<Vec<usize>>,
    edge_trivial: bool,
}

impl BreakingSearch {
    pub fn new(g: &Graph, targets: &[Permutation]) -> Self {
        let index = EdgeIndex::new(g);
        Self::with_index(&index, targets)
    }

    pub fn with_index(index: &EdgeIndex, targets: &[Permutation]) -> Self {
        let m = index.len();
        let mut actions: Vec<Vec<u16>> = targets.iter().map(|p| index.action(p)).collect();
        actions.sort_unstable();
        actions.dedup();
        let mut edge_trivial = false;
        let mut compiled = Vec::with_capacity(actions.len());
        let mut by_depth = vec![Vec::new(); m];
        for action in actions {
            let moved: Vec<(u16, u16)> = action
                .iter()
                .enumerate()
                .filter(|&(i, &j)| i != j as usize)
                .map(|(i, &j)| (i as u16, j))
                .collect();
            let Some(decided_at) = moved.iter().map(|&(i, j)| i.max(j) as usize).max() else {
                edge_trivial = true;
                continue;
            };
            by_depth[decided_at].push(compiled.len());
            compiled.push(Target { moved });
        }
        BreakingSearch {
            m,
            targets: compiled,
            by_depth,
            edge_trivial,
        }
    }

    /// Some target fixes every edge, so it preserves every colouring.
    pub fn has_edge_trivial_target(&self) -> bool {
        self.edge_trivial
    }

    pub fn has_targets(&self) -> bool {
        self.edge_trivial || !self.targets.is_empty()
    }

    fn preserved_count(&self, colours: &[u8], stop_at: usize) -> usize {
        let mut count = 0;
        for t in &self.targets {
            if t.preserved(colours) {
                count += 1;
                if count >= stop_at {
                    break;
                }
            }
        }
        count
    }

    /// Seeded local search: random colourings improved by single-edge
    /// recolourings that reduce the number of preserved targets.
    pub fn heuristic(&self, k: u8, budget: usize, seed: u64) -> Option<EdgeColouring> {
        if self.edge_trivial || k == 0 {
            return None;
        }
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ u64::from(k).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut order: Vec<usize> = (0..self.m).collect();
        for _ in 0..budget {
            let mut colours: Vec<u8> = (0..self.m).map(|_| rng.gen_range(1..=k)).collect();
            let mut score = self.preserved_count(&colours, usize::MAX);
            'climb: while score > 0 {
                order.shuffle(&mut rng);
                for &i in &order {
                    let original = colours[i];
                    for c in (1..=k).filter(|&c| c != original) {
                        colours[i] = c;
                        let s = self.preserved_count(&colours, score);
                        if s < score {
                            score = s;
                            continue 'climb;
                        }
                    }
                    colours[i] = original;
                }
                break;
            }
            if score == 0 {
                return Some(EdgeColouring::from_raw(colours, k));
            }
        }
        None
    }

    /// Depth-first enumeration in base-`k` counter order (edge 0 most
    /// significant). Returns the least colour vector that breaks every
    /// target, or `None` if there is none.
    ///
    /// Only vectors whose colours first appear in order 1, 2, ... are
    /// visited; since renaming colours maps breaking colourings to breaking
    /// colourings and such vectors are the least in their renaming class,
    /// the first success is unchanged.
    pub fn exhaustive(&self, k: u8) -> Option<EdgeColouring> {
        if self.edge_trivial || k == 0 {
            return None;
        }
        let mut colours = vec![0u8; self.m];
        self.descend(0, 0, k, &mut colours)
            .then(|| EdgeColouring::from_raw(colours, k))
    }

    fn descend(&self, depth: usize, max_used: u8, k: u8, colours: &mut [u8]) -> bool {
        if depth == self.m {
            return true;
        }
        let top = k.min(max_used + 1);
        for c in 1..=top {
            colours[depth] = c;
            let alive = self.by_depth[depth]
                .iter()
                .all(|&t| !self.targets[t].preserved(colours));
            if alive && self.descend(depth + 1, max_used.max(c), k, colours) {
                return true;
            }
        }
        colours[depth] = 0;
        false
    }

    /// Both phases, as in [`find_breaking_colouring`]. Reports which phase
    /// produced the answer.
    pub fn run(
        &self,
        k: u8,
        budget: usize,
        seed: u64,
        exhaustive_only: bool,
    ) -> (Option<EdgeColouring>, Method) {
        if !self.has_targets() {
            return (
                Some(EdgeColouring::monochromatic(self.m, k)),
                Method::NoSymmetryShortcut,
            );
        }
        if !exhaustive_only {
            if let Some(c) = self.heuristic(k, budget, seed) {
                return (Some(c), Method::HeuristicSearch);
            }
        }
        (self.exhaustive(k), Method::Exhaustive)
    }

    #[cfg(test)]
    fn decision_depths(&self) -> Vec<usize> {
        self.targets
            .iter()
            .map(|t| {
                t.moved
                    .iter()
                    .map(|&(i, j)| i.max(j) as usize)
                    .max()
                    .unwrap()
            })
            .collect()
    }
}

/// A `k`-colouring preserved by none of `targets`, or `None` when the
/// exhaustive phase proves there is none. The local-search seed comes from
/// the graph's graph6 string.
pub fn find_breaking_colouring(
    g: &Graph,
    k: u8,
    targets: &[Permutation],
    budget: usize,
) -> Option<EdgeColouring> {
    BreakingSearch::new(g, targets)
        .run(k, budget, graph_seed(g), false)
        .0
}

/// Least number of colours breaking every permutation in `targets`.
pub fn index_for_targets(g: &Graph, targets: &[Permutation], cfg: &SolverConfig) -> IndexResult {
    let search = BreakingSearch::new(g, targets);
    if !search.has_targets() {
        return IndexResult {
            value: IndexValue::Finite(1),
            witness: Some(EdgeColouring::monochromatic(g.size(), 1)),
            method: Method::NoSymmetryShortcut,
        };
    }
    if search.has_edge_trivial_target() {
        return IndexResult {
            value: IndexValue::Infinite,
            witness: None,
            method: Method::Exhaustive,
        };
    }
    let seed = cfg.seed_override.unwrap_or_else(|| graph_seed(g));
    // One colour never breaks a non-empty target set.
    for k in 2..=cfg.max_colours.min(u8::MAX as u32) {
        let (found, method) = search.run(k as u8, cfg.budget, seed, cfg.exhaustive_only);
        if let Some(witness) = found {
            return IndexResult {
                value: IndexValue::Finite(k),
                witness: Some(witness),
                method,
            };
        }
    }
    IndexResult {
        value: IndexValue::Exceeds(cfg.max_colours),
        witness: None,
        method: Method::Exhaustive,
    }
}

/// Non-identity elements of a group, the targets of the distinguishing index.
pub fn non_trivial_targets(grp: &AutGroup) -> Vec<Permutation> {
    grp.non_identity().cloned().collect()
}

/// `D'(g)`, the distinguishing index.
pub fn distinguishing_index(g: &Graph, cfg: &SolverConfig) -> Result<IndexResult> {
    let grp = automorphism_group(g, cfg.enumeration_limit)?;
    Ok(index_for_targets(g, &non_trivial_targets(&grp), cfg))
}

/// `D'_s(g)`, the small distinguishing index.
pub fn small_distinguishing_index(g: &Graph, cfg: &SolverConfig) -> Result<IndexResult> {
    let grp = automorphism_group(g, cfg.enumeration_limit)?;
    Ok(index_for_targets(g, &small_automorphisms(g, &grp), cfg))
}

/// One almost-distinguishing colouring and its witness pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostColouring {
    pub colouring: EdgeColouring,
    pub witness: AlmostDistinguishingWitness,
}

/// Result of [`find_distinguishing_or_almost`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistinguishingOrAlmost {
    Distinguishing(EdgeColouring),
    Almost {
        /// In counter order.
        colourings: Vec<AlmostColouring>,
        /// Classes of `colourings` (as indices) under colour-preserving
        /// isomorphism with literal colour ids.
        literal_classes: Vec<Vec<usize>>,
        /// Classes when colour renaming is also allowed.
        renaming_classes: Vec<Vec<usize>>,
    },
    None,
}

/// A distinguishing `k`-colouring if one exists; otherwise every
/// almost-distinguishing `k`-colouring, grouped into isomorphism classes.
pub fn find_distinguishing_or_almost(
    g: &Graph,
    k: u8,
    cfg: &SolverConfig,
) -> Result<DistinguishingOrAlmost> {
    let grp = automorphism_group(g, cfg.enumeration_limit)?;
    find_distinguishing_or_almost_in(g, &grp, k, cfg)
}

pub(crate) fn find_distinguishing_or_almost_in(
    g: &Graph,
    grp: &AutGroup,
    k: u8,
    cfg: &SolverConfig,
) -> Result<DistinguishingOrAlmost> {
    let m = g.size();
    let index = EdgeIndex::new(g);
    let targets = non_trivial_targets(grp);
    let search = BreakingSearch::with_index(&index, &targets);
    let seed = cfg.seed_override.unwrap_or_else(|| graph_seed(g));
    if let (Some(c), _) = search.run(k, cfg.budget, seed, cfg.exhaustive_only) {
        return Ok(DistinguishingOrAlmost::Distinguishing(c));
    }

    let space = (k as u64)
        .checked_pow(m as u32)
        .filter(|&s| s <= MAX_ENUMERATED_COLOURINGS);
    let Some(space) = space else {
        return Err(Error::ColouringLimit {
            m,
            limit: MAX_ENUMERATED_COLOURINGS.ilog(k.max(2) as u64) as usize,
        });
    };
    let actions: Vec<Vec<u16>> = targets.iter().map(|p| index.action(p)).collect();
    let mut colourings = Vec::new();
    let mut colours = vec![1u8; m];
    for _ in 0..space {
        let preservers: Vec<&Permutation> = targets
            .iter()
            .zip(&actions)
            .filter(|(_, a)| preserved_by_action(&colours, a))
            .map(|(p, _)| p)
            .collect();
        if let WitnessOutcome::Witness(witness) = witness_among(&preservers) {
            colourings.push(AlmostColouring {
                colouring: EdgeColouring::from_raw(colours.clone(), k),
                witness,
            });
        }
        advance(&mut colours, k);
    }
    if colourings.is_empty() {
        return Ok(DistinguishingOrAlmost::None);
    }
    let all_actions: Vec<Vec<u16>> = grp.elements().iter().map(|p| index.action(p)).collect();
    let literal_classes = group_by_key(&colourings, |c| {
        canonical_under(&all_actions, c.colours(), &[])
    });
    let renamings = colour_permutations(k);
    let renaming_classes = group_by_key(&colourings, |c| {
        canonical_under(&all_actions, c.colours(), &renamings)
    });
    Ok(DistinguishingOrAlmost::Almost {
        colourings,
        literal_classes,
        renaming_classes,
    })
}

/// Base-`k` increment with the last edge least significant.
fn advance(colours: &mut [u8], k: u8) {
    for c in colours.iter_mut().rev() {
        if *c < k {
            *c += 1;
            return;
        }
        *c = 1;
    }
}

fn colour_permutations(k: u8) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, k: u8, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == k as usize {
            out.push(prefix.clone());
            return;
        }
        for c in 1..=k {
            if !prefix.contains(&c) {
                prefix.push(c);
                rec(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), k, &mut out);
    out
}

/// Least image of a colour vector under the group's edge actions, composed
/// with each colour renaming in `renamings` (none means literal colours).
pub(crate) fn canonical_under(
    actions: &[Vec<u16>],
    colours: &[u8],
    renamings: &[Vec<u8>],
) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let mut image = vec![0u8; colours.len()];
    let identity = [Vec::new()];
    let renamings = if renamings.is_empty() {
        &identity[..]
    } else {
        renamings
    };
    for action in actions {
        for rename in renamings {
            for (i, &j) in action.iter().enumerate() {
                let c = colours[i];
                image[j as usize] = if rename.is_empty() {
                    c
                } else {
                    rename[c as usize - 1]
                };
            }
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
        }
    }
    best.unwrap_or_default()
}

fn group_by_key<K: Ord>(
    colourings: &[AlmostColouring],
    key: impl Fn(&EdgeColouring) -> K,
) -> Vec<Vec<usize>> {
    let mut keyed: Vec<(K, usize)> = colourings
        .iter()
        .enumerate()
        .map(|(i, c)| (key(&c.colouring), i))
        .collect();
    keyed.sort();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<&K> = None;
    for (key, i) in &keyed {
        if last == Some(key) {
            classes.last_mut().expect("class started").push(*i);
        } else {
            classes.push(vec![*i]);
            last = Some(key);
        }
    }
    classes.sort();
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::breaks_all;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn small_of(g: &Graph) -> Vec<Permutation> {
        small_automorphisms(g, &automorphism_group(g, 12).unwrap())
    }

    #[test]
    fn breaking_search_cases() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            find_breaking_colouring(&p3, 2, &[], 4),
            Some(EdgeColouring::monochromatic(2, 2))
        );

        let k2 = Graph::complete(2).unwrap();
        for k in 1..=4 {
            assert_eq!(find_breaking_colouring(&k2, k, &small_of(&k2), 4), None);
        }

        let c6 = Graph::cycle(6).unwrap();
        let small = small_of(&c6);
        let c = find_breaking_colouring(&c6, 2, &small, 4).expect("C6 has a breaking 2-colouring");
        assert!(breaks_all(&c6, &c, &small));
    }

    #[test]
    fn exhaustive_returns_least_counter() {
        // P3: the least 2-colouring breaking the reversal is (1, 2).
        let p3 = Graph::path(3).unwrap();
        let grp = automorphism_group(&p3, 12).unwrap();
        let search = BreakingSearch::new(&p3, &non_trivial_targets(&grp));
        assert_eq!(search.exhaustive(2).unwrap().colours(), &[1, 2]);
        assert_eq!(search.exhaustive(1), None);
    }

    #[test]
    fn decision_depth_is_last_moved_edge() {
        let p3 = Graph::path(3).unwrap();
        let search = BreakingSearch::new(&p3, &[Permutation::from_images(vec![2, 1, 0]).unwrap()]);
        assert_eq!(search.decision_depths(), vec![1]);
    }

    #[test]
    fn distinguishing_index_cases() {
        let p3 = Graph::path(3).unwrap();
        let r = distinguishing_index(&p3, &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Finite(2));

        let k2 = Graph::complete(2).unwrap();
        let r = distinguishing_index(&k2, &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Infinite);
        assert!(r.witness.is_none());

        let asym =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 2)]).unwrap();
        assert!(automorphism_group(&asym, 12).unwrap().is_trivial());
        let r = distinguishing_index(&asym, &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Finite(1));
        assert_eq!(r.method, Method::NoSymmetryShortcut);

        let edgeless = Graph::empty(1).unwrap();
        let r = distinguishing_index(&edgeless, &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Finite(1));
        assert!(r.witness.unwrap().is_empty());

        // Edgeless graph on two vertices: the swap fixes the empty edge set.
        let r = distinguishing_index(&Graph::empty(2).unwrap(), &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Infinite);
    }

    #[test]
    fn small_index_cases() {
        let star = Graph::star(5).unwrap();
        assert_eq!(
            small_distinguishing_index(&star, &cfg()).unwrap().value,
            IndexValue::Finite(1)
        );
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            small_distinguishing_index(&k2, &cfg()).unwrap().value,
            IndexValue::Infinite
        );
        let c6 = Graph::cycle(6).unwrap();
        let r = small_distinguishing_index(&c6, &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Finite(2));
        assert!(breaks_all(&c6, r.witness.as_ref().unwrap(), &small_of(&c6)));
    }

    #[test]
    fn exceeds_is_reported() {
        // K_{1,5} needs five colours to break the leaf permutations.
        let star = Graph::star(5).unwrap();
        let r = distinguishing_index(&star, &cfg()).unwrap();
        assert_eq!(r.value, IndexValue::Exceeds(4));
        let wide = SolverConfig {
            max_colours: 5,
            ..cfg()
        };
        assert_eq!(
            distinguishing_index(&star, &wide).unwrap().value,
            IndexValue::Finite(5)
        );
    }

    #[test]
    fn index_value_order_and_serde() {
        assert!(IndexValue::Finite(3) < IndexValue::Exceeds(4));
        assert!(IndexValue::Exceeds(4) < IndexValue::Infinite);
        for v in [
            IndexValue::Finite(2),
            IndexValue::Exceeds(4),
            IndexValue::Infinite,
        ] {
            let text = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<IndexValue>(&text).unwrap(), v);
        }
        assert_eq!(
            serde_json::to_string(&IndexValue::Infinite).unwrap(),
            "\"INFINITE\""
        );
    }

    #[test]
    fn distinguishing_or_almost_cases() {
        let asym =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 2)]).unwrap();
        assert!(matches!(
            find_distinguishing_or_almost(&asym, 2, &cfg()).unwrap(),
            DistinguishingOrAlmost::Distinguishing(_)
        ));

        let k2 = Graph::complete(2).unwrap();
        let DistinguishingOrAlmost::Almost {
            colourings,
            literal_classes,
            renaming_classes,
        } = find_distinguishing_or_almost(&k2, 2, &cfg()).unwrap()
        else {
            panic!("K2 has only almost-distinguishing colourings");
        };
        assert_eq!(colourings.len(), 2);
        assert!(colourings
            .iter()
            .all(|c| c.witness == AlmostDistinguishingWitness { x: 0, y: 1 }));
        assert_eq!(literal_classes, vec![vec![0], vec![1]]);
        assert_eq!(renaming_classes, vec![vec![0, 1]]);
    }

    #[test]
    fn distinguishing_or_almost_respects_limit() {
        let k8 = Graph::complete(8).unwrap();
        assert!(matches!(
            find_distinguishing_or_almost(&k8, 2, &cfg()),
            Ok(DistinguishingOrAlmost::Distinguishing(_))
        ));
        // The complement of a path with one chord is asymmetric; two extra
        // isolated vertices add a swap that every colouring keeps, so
        // enumeration would be needed over 2^35 colourings.
        let mut edges = Vec::new();
        for u in 0..10 {
            for v in u + 1..10 {
                if v != u + 1 && (u, v) != (1, 4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(12, edges).unwrap();
        assert_eq!(automorphism_group(&g, 12).unwrap().order(), 2);
        assert!(matches!(
            find_distinguishing_or_almost(&g, 2, &cfg()),
            Err(Error::ColouringLimit { m: 35, .. })
        ));
    }
}
