//! Constructive 2-colouring that breaks every small automorphism of a finite
//! connected graph.
//!
//! The pipeline picks a root vertex `x`, colours every component of every
//! vertex orbit with a distinguishing or almost-distinguishing colouring,
//! separates `x` from its partner `y` where needed, and then colours the
//! remaining edges layer by layer outward from the component `C` of `x`.
//!
//! The output is always checked against the full list of small
//! automorphisms. Whenever the pipeline hits a gap, or its output fails the
//! check, the colouring is taken from [`BreakingSearch`] instead and the
//! trace says so.

use serde::Serialize;

use crate::colouring::{
    breaks_all, coloured_isomorphic, preserves, AlmostDistinguishingWitness, EdgeColouring,
    EdgeIndex, BLUE, PINK,
};
use crate::error::{Error, Result};
use crate::graph::{
    bfs_distance, degree_profile, induced_components, induced_subgraph, to_graph6, Edge, Graph,
    VertexSet,
};
use crate::solver::{
    find_distinguishing_or_almost_in, graph_seed, BreakingSearch, DistinguishingOrAlmost,
    SolverConfig,
};
use crate::symmetry::{
    automorphism_group, setwise_stabilizer, small_automorphisms, vertex_orbits, AutGroup,
    OrbitPartition, Permutation,
};

/// Smallest order the construction accepts.
pub const MIN_ORDER: usize = 6;

/// Which branch produced the final colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
    #[serde(rename = "III-same-component")]
    IIISameComponent,
    #[serde(rename = "III-different-components")]
    IIIDifferentComponents,
    #[serde(rename = "fallback")]
    Fallback,
}

impl Case {
    pub const ALL: [Case; 5] = [
        Case::I,
        Case::II,
        Case::IIISameComponent,
        Case::IIIDifferentComponents,
        Case::Fallback,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::IIISameComponent => "III-same-component",
            Case::IIIDifferentComponents => "III-different-components",
            Case::Fallback => "fallback",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    Distinguishing,
    AlmostDistinguishing,
}

/// How one component of one orbit was coloured.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    pub vertices: VertexSet,
    pub kind: ComponentKind,
    /// Whether the component is a sibling of `C` (same orbit) whose
    /// colouring could not be made non-isomorphic to the one on `C`.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub isomorphic_to_c: bool,
}

/// The vertex receiving a pink back edge, and that edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BackEdgeChoice {
    pub vertex: usize,
    pub edge: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub graph6: String,
    pub regular: bool,
    pub chosen_x: Option<usize>,
    pub partner_y: Option<usize>,
    pub orbit_x: Option<VertexSet>,
    pub component_c: Option<VertexSet>,
    /// `fallback` whenever the returned colouring came from the solver.
    pub case: Case,
    /// The branch the construction reached before any fallback.
    pub attempted_case: Option<Case>,
    pub components: Vec<ComponentRecord>,
    pub back_edge_log: Vec<BackEdgeChoice>,
    /// Why the construction was abandoned, if it was.
    pub gap: Option<String>,
    /// Whether the construction's own output passed the check.
    pub construction_verified: bool,
    /// Whether the returned colouring breaks every small automorphism.
    pub verified: bool,
    /// Colouring isomorphism is tested with literal colour ids.
    pub isomorphism_reading: &'static str,
}

/// Orbits of the stabilizer of `C`, ordered outward from `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerEnumeration {
    pub layers: Vec<Layer>,
    pub stabilizer: AutGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layer {
    pub orbit: VertexSet,
    pub distance: usize,
}

impl LayerEnumeration {
    /// Position of each vertex's layer.
    pub fn layer_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for v in layer.orbit.iter() {
                out[v] = i;
            }
        }
        out
    }
}

/// Orbits of the setwise stabilizer of `c`, sorted by distance to `c` and
/// then by least member. `c` itself is layer 0 when it is a single orbit of
/// its stabilizer, which holds for every component of an `Aut(g)` orbit.
pub fn enumerate_layers(g: &Graph, c: VertexSet, grp: &AutGroup) -> LayerEnumeration {
    let stabilizer = setwise_stabilizer(grp, c);
    let orbits = vertex_orbits(&stabilizer, g.order());
    let dist = bfs_distance(g, c);
    let mut layers: Vec<Layer> = orbits
        .classes
        .iter()
        .map(|&orbit| {
            let v = orbit.min().expect("orbits are non-empty");
            Layer {
                orbit,
                distance: dist[v].unwrap_or(usize::MAX),
            }
        })
        .collect();
    layers.sort_by_key(|l| (l.distance, l.orbit.min()));
    LayerEnumeration { layers, stabilizer }
}

/// Picks the least vertex whose orbit's components admit distinguishing
/// 2-colourings, or vertex 0 if there is none. Returns it with its orbit.
pub fn choose_root(g: &Graph, grp: &AutGroup, cfg: &SolverConfig) -> Result<(usize, VertexSet)> {
    check_preconditions(g)?;
    if degree_profile(g).regular {
        return Err(Error::Precondition("graph is regular".into()));
    }
    let orbits = vertex_orbits(grp, g.order());
    for &orbit in &orbits.classes {
        let v = orbit.min().expect("orbits are non-empty");
        let rep = induced_components(g, orbit)[0];
        let (h, _) = induced_subgraph(g, rep)?;
        let hgrp = automorphism_group(&h, cfg.enumeration_limit)?;
        let targets: Vec<Permutation> = hgrp.non_identity().cloned().collect();
        if BreakingSearch::new(&h, &targets)
            .run(2, cfg.budget, graph_seed(&h), cfg.exhaustive_only)
            .0
            .is_some()
        {
            return Ok((v, orbit));
        }
    }
    Ok((0, orbits.orbit_of(0)))
}

fn check_preconditions(g: &Graph) -> Result<()> {
    if g.order() < MIN_ORDER {
        return Err(Error::Precondition(format!(
            "order {} is below {MIN_ORDER}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    Ok(())
}

type Gap = String;

/// Edge positions and colours for one component.
type Assignment = Vec<(usize, u8)>;

/// Colouring options for one component, in global edge positions.
#[derive(Clone, Debug)]
struct ComponentOptions {
    vertices: VertexSet,
    kind: ComponentKind,
    /// Preferred colouring first. For almost-distinguishing components one
    /// representative per literal isomorphism class, each with its witness.
    candidates: Vec<(Assignment, Option<AlmostDistinguishingWitness>)>,
    /// The component as a standalone graph, for isomorphism tests.
    local: Graph,
    local_map: Vec<usize>,
}

impl ComponentOptions {
    fn local_colouring(&self, index: &EdgeIndex, assignment: &[(usize, u8)]) -> EdgeColouring {
        let local_index = EdgeIndex::new(&self.local);
        let mut colours = vec![0u8; local_index.len()];
        for &(global, c) in assignment {
            let e = index.edge(global);
            let a = self
                .local_map
                .binary_search(&e.u)
                .expect("endpoint in component");
            let b = self
                .local_map
                .binary_search(&e.v)
                .expect("endpoint in component");
            colours[local_index.index_of(a, b).expect("edge in component")] = c;
        }
        EdgeColouring::from_raw(colours, 2)
    }
}

fn component_options(
    g: &Graph,
    index: &EdgeIndex,
    vertices: VertexSet,
    cfg: &SolverConfig,
) -> Result<std::result::Result<ComponentOptions, Gap>> {
    let (local, map) = induced_subgraph(g, vertices)?;
    let local_index = EdgeIndex::new(&local);
    let to_global = |colours: &[u8]| -> Vec<(usize, u8)> {
        local_index
            .edges()
            .iter()
            .zip(colours)
            .map(|(e, &c)| (index.index_of(map[e.u], map[e.v]).expect("induced edge"), c))
            .collect()
    };
    let grp = automorphism_group(&local, cfg.enumeration_limit)?;
    let outcome = find_distinguishing_or_almost_in(&local, &grp, 2, cfg)?;
    let (kind, candidates) = match outcome {
        DistinguishingOrAlmost::Distinguishing(c) => {
            let swapped = c.rename(&[2, 1]);
            (
                ComponentKind::Distinguishing,
                vec![
                    (to_global(c.colours()), None),
                    (to_global(swapped.colours()), None),
                ],
            )
        }
        DistinguishingOrAlmost::Almost {
            colourings,
            literal_classes,
            ..
        } => {
            let mut reps: Vec<usize> = literal_classes.iter().map(|class| class[0]).collect();
            reps.sort_unstable();
            let candidates = reps
                .into_iter()
                .map(|i| {
                    let w = colourings[i].witness;
                    let global = AlmostDistinguishingWitness {
                        x: map[w.x],
                        y: map[w.y],
                    };
                    (to_global(colourings[i].colouring.colours()), Some(global))
                })
                .collect();
            (ComponentKind::AlmostDistinguishing, candidates)
        }
        DistinguishingOrAlmost::None => return Ok(Err(format!(
            "component {:?} has neither a distinguishing nor an almost-distinguishing 2-colouring",
            vertices
        ))),
    };
    Ok(Ok(ComponentOptions {
        vertices,
        kind,
        candidates,
        local,
        local_map: map,
    }))
}

/// Working state of one construction run.
struct Builder<'a> {
    g: &'a Graph,
    index: EdgeIndex,
    small: &'a [Permutation],
    small_actions: Vec<Vec<u16>>,
    colours: Vec<u8>,
    trace: ConstructionTrace,
}

impl<'a> Builder<'a> {
    fn edge(&self, u: usize, v: usize) -> usize {
        self.index.index_of(u, v).expect("edge exists")
    }

    fn set(&mut self, i: usize, c: u8) -> std::result::Result<(), Gap> {
        match self.colours[i] {
            0 => {
                self.colours[i] = c;
                Ok(())
            }
            old if old == c => Ok(()),
            old => Err(format!(
                "edge {} needs colour {c} but already has {old}",
                self.index.edge(i)
            )),
        }
    }

    fn apply(&mut self, assignment: &[(usize, u8)]) {
        for &(i, c) in assignment {
            self.colours[i] = c;
        }
    }

    /// Small automorphisms not yet ruled out by the partial colouring: every
    /// edge whose image is also coloured keeps its colour.
    fn compatible_small(&self) -> Vec<&'a Permutation> {
        self.small
            .iter()
            .zip(&self.small_actions)
            .filter(|(_, action)| {
                action.iter().enumerate().all(|(i, &j)| {
                    let (a, b) = (self.colours[i], self.colours[j as usize]);
                    a == 0 || b == 0 || a == b
                })
            })
            .map(|(p, _)| p)
            .collect()
    }

    fn back_edges(&self, v: usize, layer_of: &[usize]) -> Vec<usize> {
        self.g
            .neighbours(v)
            .iter()
            .filter(|&w| layer_of[w] < layer_of[v])
            .map(|w| self.edge(v, w))
            .collect()
    }
}

/// Colours every edge inside an orbit. Returns, for each component, its
/// options and the index of the candidate used.
fn colour_orbit_components(
    b: &mut Builder<'_>,
    orbits: &OrbitPartition,
    x: &mut usize,
    orbit_x: VertexSet,
    cfg: &SolverConfig,
) -> Result<std::result::Result<Vec<(ComponentOptions, usize)>, Gap>> {
    let mut chosen = Vec::new();
    let c_vertices = induced_components(b.g, orbit_x)
        .into_iter()
        .find(|comp| comp.contains(*x))
        .expect("x lies in its orbit");
    let c_opts = match component_options(b.g, &b.index, c_vertices, cfg)? {
        Ok(o) => o,
        Err(gap) => return Ok(Err(gap)),
    };
    // Prefer an almost-distinguishing colouring whose pair contains x;
    // otherwise move x to the first vertex of the pair (still in C and X).
    let c_choice = c_opts
        .candidates
        .iter()
        .position(|(_, w)| w.is_none_or(|w| w.x == *x || w.y == *x))
        .unwrap_or(0);
    if let Some(w) = c_opts.candidates[c_choice].1 {
        if w.x != *x && w.y != *x {
            *x = w.x;
        }
    }
    b.apply(&c_opts.candidates[c_choice].0.clone());
    let c_local = c_opts.local_colouring(&b.index, &c_opts.candidates[c_choice].0);
    b.trace.components.push(ComponentRecord {
        vertices: c_vertices,
        kind: c_opts.kind,
        isomorphic_to_c: false,
    });

    for &orbit in &orbits.classes {
        for comp in induced_components(b.g, orbit) {
            if comp == c_vertices {
                continue;
            }
            let opts = match component_options(b.g, &b.index, comp, cfg)? {
                Ok(o) => o,
                Err(gap) => return Ok(Err(gap)),
            };
            let mut pick = 0;
            let mut isomorphic_to_c = false;
            if orbit == orbit_x {
                // Siblings of C get a colouring not isomorphic to C's, if any.
                let found = opts.candidates.iter().position(|(assignment, _)| {
                    let local = opts.local_colouring(&b.index, assignment);
                    !coloured_isomorphic(&c_opts.local, &c_local, &opts.local, &local)
                        .unwrap_or(true)
                });
                match found {
                    Some(i) => pick = i,
                    None => isomorphic_to_c = true,
                }
            }
            b.apply(&opts.candidates[pick].0.clone());
            b.trace.components.push(ComponentRecord {
                vertices: comp,
                kind: opts.kind,
                isomorphic_to_c,
            });
            chosen.push((opts, pick));
        }
    }
    chosen.insert(0, (c_opts, c_choice));
    Ok(Ok(chosen))
}

/// Decides the case and colours the edges it prescribes.
fn resolve_case(
    b: &mut Builder<'_>,
    orbit_x: VertexSet,
    c: VertexSet,
    x: usize,
    components: &mut [(ComponentOptions, usize)],
) -> std::result::Result<(Case, Option<usize>), Gap> {
    let (c_opts, c_pick) = &components[0];
    if c_opts.kind == ComponentKind::Distinguishing {
        return Ok((Case::I, None));
    }
    let w = c_opts.candidates[*c_pick]
        .1
        .ok_or("component C has no witness pair")?;
    let y = if w.x == x { w.y } else { w.x };
    debug_assert!(w.x == x || w.y == x);

    let common =
        b.g.neighbours(x)
            .intersection(b.g.neighbours(y))
            .difference(orbit_x);
    if let Some(v) = common.min() {
        b.set(b.edge(x, v), PINK)?;
        b.set(b.edge(y, v), BLUE)?;
        // Every other edge from y to a common outside neighbour stays blue.
        for other in common.iter().skip(1) {
            b.set(b.edge(y, other), BLUE)?;
        }
        return Ok((Case::II, Some(y)));
    }

    let candidates: Vec<&Permutation> = b
        .compatible_small()
        .into_iter()
        .filter(|p| p.apply(x) == y)
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for xp in b.g.neighbours(x).difference(c).iter() {
        for p in &candidates {
            pairs.push((xp, p.apply(xp)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let owner: Vec<Option<usize>> = (0..b.g.order())
        .map(|v| components.iter().position(|(o, _)| o.vertices.contains(v)))
        .collect();
    let component_of = |v: usize| owner[v];
    let same: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(xp, yp)| component_of(xp) == component_of(yp))
        .collect();
    if !same.is_empty() {
        for (xp, yp) in same {
            b.set(b.edge(x, xp), PINK)?;
            b.set(b.edge(y, yp), BLUE)?;
        }
        return Ok((Case::IIISameComponent, Some(y)));
    }
    for (xp, yp) in pairs {
        let (ci, di) = (
            component_of(xp).ok_or("x' outside every component")?,
            component_of(yp).ok_or("y' outside every component")?,
        );
        let (x_opts, x_pick) = &components[ci];
        let x_local = x_opts.local_colouring(&b.index, &x_opts.candidates[*x_pick].0);
        let (y_opts, y_pick) = &components[di];
        let current = y_opts.local_colouring(&b.index, &y_opts.candidates[*y_pick].0);
        let iso = |local: &EdgeColouring| {
            coloured_isomorphic(&x_opts.local, &x_local, &y_opts.local, local).unwrap_or(true)
        };
        if !iso(&current) {
            continue;
        }
        let replacement = y_opts
            .candidates
            .iter()
            .position(|(assignment, _)| !iso(&y_opts.local_colouring(&b.index, assignment)))
            .ok_or_else(|| {
                format!(
                    "components {:?} and {:?} admit only isomorphic colourings",
                    x_opts.vertices, y_opts.vertices
                )
            })?;
        let assignment = y_opts.candidates[replacement].0.clone();
        b.apply(&assignment);
        components[di].1 = replacement;
    }
    Ok((Case::IIIDifferentComponents, Some(y)))
}

/// Colours the back edges of layers 1, 2, ... in order. Edges that are
/// already coloured keep their colour.
fn colour_back_edges(
    b: &mut Builder<'_>,
    layers: &LayerEnumeration,
) -> std::result::Result<(), Gap> {
    let layer_of = layers.layer_of(b.g.order());
    for layer in layers.layers.iter().skip(1) {
        for d in induced_components(b.g, layer.orbit) {
            let compatible = b.compatible_small();
            let acting: Vec<&Permutation> = compatible
                .into_iter()
                .filter(|q| q.apply_set(d) == d && d.iter().any(|v| q.apply(v) != v))
                .collect();
            if let Some(first) = acting.first() {
                let (a, _) = d
                    .iter()
                    .map(|a| (a, first.apply(a)))
                    .find(|&(a, image)| image != a && acting.iter().all(|q| q.apply(a) == image))
                    .ok_or_else(|| format!("no vertex pair of layer component {d:?} is fixed by all its automorphisms"))?;
                let back = b.back_edges(a, &layer_of);
                if !back.iter().any(|&i| b.colours[i] == PINK) {
                    let pink = *back
                        .iter()
                        .find(|&&i| b.colours[i] == 0)
                        .ok_or_else(|| format!("vertex {a} has no uncoloured back edge"))?;
                    b.colours[pink] = PINK;
                    b.trace.back_edge_log.push(BackEdgeChoice {
                        vertex: a,
                        edge: b.index.edge(pink),
                    });
                }
            }
            for v in d.iter() {
                for i in b.back_edges(v, &layer_of) {
                    if b.colours[i] == 0 {
                        b.colours[i] = BLUE;
                    }
                }
            }
        }
    }
    if let Some(i) = b.colours.iter().position(|&c| c == 0) {
        return Err(format!("edge {} left uncoloured", b.index.edge(i)));
    }
    Ok(())
}

/// Runs the construction on a connected graph of order at least 6.
///
/// The returned colouring always breaks every small automorphism. The only
/// failure beyond bad input is [`Error::TheoremFalsified`], raised when an
/// exhaustive search proves that no such 2-colouring exists.
pub fn construct(g: &Graph, cfg: &SolverConfig) -> Result<(EdgeColouring, ConstructionTrace)> {
    check_preconditions(g)?;
    let grp = automorphism_group(g, cfg.enumeration_limit)?;
    let small = small_automorphisms(g, &grp);
    construct_with(g, &grp, &small, cfg)
}

pub(crate) fn construct_with(
    g: &Graph,
    grp: &AutGroup,
    small: &[Permutation],
    cfg: &SolverConfig,
) -> Result<(EdgeColouring, ConstructionTrace)> {
    check_preconditions(g)?;
    let index = EdgeIndex::new(g);
    let regular = degree_profile(g).regular;
    let trace = ConstructionTrace {
        graph6: to_graph6(g)?,
        regular,
        chosen_x: None,
        partner_y: None,
        orbit_x: None,
        component_c: None,
        case: Case::Fallback,
        attempted_case: None,
        components: Vec::new(),
        back_edge_log: Vec::new(),
        gap: None,
        construction_verified: false,
        verified: false,
        isomorphism_reading: "literal",
    };
    let small_actions = small.iter().map(|p| index.action(p)).collect();
    let mut b = Builder {
        g,
        index,
        small,
        small_actions,
        colours: vec![0; g.size()],
        trace,
    };

    if regular {
        b.trace.gap = Some("regular graph".into());
    } else {
        match attempt(&mut b, grp, cfg)? {
            Ok(case) => {
                b.trace.attempted_case = Some(case);
                let colouring = EdgeColouring::from_raw(b.colours.clone(), 2);
                if breaks_all(g, &colouring, small) {
                    b.trace.case = case;
                    b.trace.construction_verified = true;
                    b.trace.verified = true;
                    return Ok((colouring, b.trace));
                }
                let kept = small
                    .iter()
                    .find(|p| preserves(g, &colouring, p))
                    .expect("breaks_all failed");
                let c = b.trace.component_c.unwrap_or_default();
                let moves_c = if kept.apply_set(c) == c {
                    "fixes C setwise"
                } else {
                    "moves C"
                };
                b.trace.gap = Some(format!(
                    "constructed colouring preserves small automorphism {:?}, which {moves_c}",
                    kept.images()
                ));
            }
            Err(gap) => b.trace.gap = Some(gap),
        }
    }

    let mut trace = b.trace;
    let search = BreakingSearch::new(g, small);
    let seed = cfg.seed_override.unwrap_or_else(|| graph_seed(g));
    match search.run(2, cfg.budget, seed, cfg.exhaustive_only).0 {
        Some(colouring) => {
            debug_assert!(breaks_all(g, &colouring, small));
            trace.case = Case::Fallback;
            trace.verified = true;
            Ok((colouring, trace))
        }
        None => Err(Error::TheoremFalsified {
            graph6: trace.graph6,
        }),
    }
}

fn attempt(
    b: &mut Builder<'_>,
    grp: &AutGroup,
    cfg: &SolverConfig,
) -> Result<std::result::Result<Case, Gap>> {
    let (mut x, orbit_x) = choose_root(b.g, grp, cfg)?;
    let orbits = vertex_orbits(grp, b.g.order());
    b.trace.orbit_x = Some(orbit_x);
    let mut components = match colour_orbit_components(b, &orbits, &mut x, orbit_x, cfg)? {
        Ok(c) => c,
        Err(gap) => return Ok(Err(gap)),
    };
    let c = components[0].0.vertices;
    b.trace.chosen_x = Some(x);
    b.trace.component_c = Some(c);
    let (case, y) = match resolve_case(b, orbit_x, c, x, &mut components) {
        Ok(r) => r,
        Err(gap) => return Ok(Err(gap)),
    };
    b.trace.partner_y = y;
    b.trace.attempted_case = Some(case);
    let layers = enumerate_layers(b.g, c, grp);
    if let Err(gap) = colour_back_edges(b, &layers) {
        return Ok(Err(gap));
    }
    Ok(Ok(case))
}

#[cfg(test)]
mod tests {
    use super::*;
    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn group(g: &Graph) -> AutGroup {
        automorphism_group(g, 12).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            construct(&Graph::path(3).unwrap(), &cfg()),
            Err(Error::Precondition(_))
        ));
        let split = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(matches!(
            construct(&split, &cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn star_is_constructed_unaided() {
        let star = Graph::star(5).unwrap();
        let (c, trace) = construct(&star, &cfg()).unwrap();
        assert!(trace.verified && trace.construction_verified);
        assert_eq!(c.len(), 5);
        assert!(c.colours().iter().all(|&x| x == PINK || x == BLUE));
        assert_eq!(trace.chosen_x, Some(0));
    }

    #[test]
    fn regular_graphs_fall_back() {
        let c6 = Graph::cycle(6).unwrap();
        let (c, trace) = construct(&c6, &cfg()).unwrap();
        assert_eq!(trace.case, Case::Fallback);
        assert!(trace.regular && trace.verified);
        let small = small_automorphisms(&c6, &group(&c6));
        assert!(breaks_all(&c6, &c, &small));
    }

    #[test]
    fn root_choice() {
        let star = Graph::star(5).unwrap();
        assert_eq!(
            choose_root(&star, &group(&star), &cfg()).unwrap(),
            (0, VertexSet::singleton(0))
        );

        let asym =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 2)]).unwrap();
        assert_eq!(
            choose_root(&asym, &group(&asym), &cfg()).unwrap(),
            (0, VertexSet::singleton(0))
        );

        assert!(choose_root(
            &Graph::cycle(6).unwrap(),
            &group(&Graph::cycle(6).unwrap()),
            &cfg()
        )
        .is_err());
    }

    #[test]
    fn layers() {
        let star = Graph::star(5).unwrap();
        let grp = group(&star);
        let layers = enumerate_layers(&star, VertexSet::singleton(0), &grp);
        assert_eq!(
            layers.layers,
            vec![
                Layer {
                    orbit: VertexSet::singleton(0),
                    distance: 0
                },
                Layer {
                    orbit: VertexSet::from_iter(1..6),
                    distance: 1
                }
            ]
        );
        let all = enumerate_layers(&star, star.vertices(), &grp);
        assert_eq!(
            all.layers,
            vec![
                Layer {
                    orbit: VertexSet::singleton(0),
                    distance: 0
                },
                Layer {
                    orbit: VertexSet::from_iter(1..6),
                    distance: 0
                }
            ]
        );

        let asym =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 2)]).unwrap();
        let layers = enumerate_layers(&asym, VertexSet::singleton(0), &group(&asym));
        let order: Vec<(usize, usize)> = layers
            .layers
            .iter()
            .map(|l| (l.orbit.min().unwrap(), l.distance))
            .collect();
        assert_eq!(order, vec![(0, 0), (1, 1), (2, 1), (3, 2), (4, 2), (5, 3)]);
    }

    #[test]
    fn star_back_edges_are_blue() {
        let star = Graph::star(5).unwrap();
        let (c, trace) = construct(&star, &cfg()).unwrap();
        // No small automorphisms, so the leaf layer counts as distinguished
        // and every back edge is blue.
        assert!(trace.back_edge_log.is_empty());
        assert!(c.colours().iter().all(|&x| x == BLUE));
    }

    #[test]
    fn deterministic() {
        let g = Graph::path(7).unwrap();
        let a = construct(&g, &cfg()).unwrap();
        let b = construct(&g, &cfg()).unwrap();
        assert_eq!(a, b);
        assert!(a.1.verified);
    }
}
