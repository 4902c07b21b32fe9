use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::colouring::EdgeColouring;
use crate::construct::{construct_with, ConstructionTrace, MIN_ORDER};
use crate::error::Result;
use crate::graph::{connected_components, degree_profile, to_graph6, Graph};
use crate::solver::{
    index_for_targets, non_trivial_targets, IndexResult, IndexValue, Method, SolverConfig,
};
use crate::symmetry::{automorphism_group, small_automorphisms};

/// One analysed graph, as printed by `analyze` and stored in the cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub aut_order: u64,
    pub small_count: u64,
    pub d_prime: IndexValue,
    pub d_small: IndexValue,
    pub d_prime_method: Method,
    pub d_small_method: Method,
    /// Construction case when the construction ran, otherwise how
    /// `d_small` was settled.
    pub method: String,
    pub connected: bool,
    pub regular: bool,
    /// No component is a single edge.
    pub isolated_edge_free: bool,
    pub max_colours: u32,
    pub millis: u64,
}

impl VerificationRecord {
    /// `d_small ≤ d_prime` in the order finite < exceeds < infinite.
    pub fn monotone(&self) -> bool {
        self.d_small <= self.d_prime
    }

    /// The record-level invariants: monotonicity and
    /// `d_small = 1 ⇔ small_count = 0`.
    pub fn invariants_hold(&self) -> bool {
        self.monotone() && ((self.d_small == IndexValue::Finite(1)) == (self.small_count == 0))
    }

    /// Equality ignoring the timing field.
    pub fn same_result(&self, other: &VerificationRecord) -> bool {
        VerificationRecord {
            millis: 0,
            ..self.clone()
        } == VerificationRecord {
            millis: 0,
            ..other.clone()
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub solver: SolverConfig,
    /// Also run the construction (connected graphs of order ≥ 6 only).
    pub construct: bool,
}

/// Everything `analyze` computes for one graph.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub record: VerificationRecord,
    pub d_prime: IndexResult,
    pub d_small: IndexResult,
    pub construction: Option<(EdgeColouring, ConstructionTrace)>,
}

pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<Analysis> {
    let start = Instant::now();
    let cfg = &opts.solver;
    let grp = automorphism_group(g, cfg.enumeration_limit)?;
    let small = small_automorphisms(g, &grp);
    let d_prime = index_for_targets(g, &non_trivial_targets(&grp), cfg);
    let d_small = index_for_targets(g, &small, cfg);
    let connected = g.is_connected();
    let construction = if opts.construct && connected && g.order() >= MIN_ORDER {
        Some(construct_with(g, &grp, &small, cfg)?)
    } else {
        None
    };
    let method = match &construction {
        Some((_, trace)) => trace.case.label().to_owned(),
        None => serde_json::to_value(d_small.method)?
            .as_str()
            .unwrap_or_default()
            .to_owned(),
    };
    let record = VerificationRecord {
        graph6: to_graph6(g)?,
        n: g.order(),
        m: g.size(),
        aut_order: grp.order() as u64,
        small_count: small.len() as u64,
        d_prime: d_prime.value,
        d_small: d_small.value,
        d_prime_method: d_prime.method,
        d_small_method: d_small.method,
        method,
        connected,
        regular: degree_profile(g).regular,
        isolated_edge_free: connected_components(g).iter().all(|c| c.len() != 2),
        max_colours: cfg.max_colours,
        millis: start.elapsed().as_millis() as u64,
    };
    Ok(Analysis {
        record,
        d_prime,
        d_small,
        construction,
    })
}
