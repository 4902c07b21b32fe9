//! Corpus runs: analyse every graph in a graph6 file, check claims, and
//! summarise.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::cache::Cache;
use super::record::{analyze, AnalyzeOptions, VerificationRecord};
use crate::construct::{Case, MIN_ORDER};
use crate::error::{Error, Result};
use crate::graph::{degree_profile, parse_graph6, Graph};
use crate::solver::IndexValue;

/// A bound checked over a corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    /// `d_small ≤ 2` for connected graphs of order at least 6.
    Thm1,
    /// `d_small ≤ 3` for graphs with no single-edge component.
    Kpw3,
    /// `d_prime ≤ 2` for connected regular graphs of order at least 7.
    Regular2,
    /// `d_small ≤ d_prime`.
    Monotone,
}

impl Claim {
    pub const ALL: [Claim; 4] = [Claim::Thm1, Claim::Kpw3, Claim::Regular2, Claim::Monotone];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Thm1 => "thm1",
            Claim::Kpw3 => "kpw3",
            Claim::Regular2 => "regular2",
            Claim::Monotone => "monotone",
        }
    }

    pub fn applies(self, r: &VerificationRecord) -> bool {
        match self {
            Claim::Thm1 => r.connected && r.n >= MIN_ORDER,
            Claim::Kpw3 => r.isolated_edge_free,
            Claim::Regular2 => r.connected && r.regular && r.n >= 7,
            Claim::Monotone => true,
        }
    }

    pub fn holds(self, r: &VerificationRecord) -> bool {
        match self {
            Claim::Thm1 => r.d_small.at_most(2),
            Claim::Kpw3 => r.d_small.at_most(3),
            Claim::Regular2 => r.d_prime.at_most(2),
            Claim::Monotone => r.monotone(),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                format!("unknown claim {s:?} (expected thm1, kpw3, regular2 or monotone)")
            })
    }
}

/// Which corpus graphs to analyse at all.
#[derive(Clone, Debug, Default)]
pub struct Filters {
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
    pub connected_only: bool,
    pub regular_only: bool,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        self.min_order.is_none_or(|k| g.order() >= k)
            && self.max_order.is_none_or(|k| g.order() <= k)
            && (!self.connected_only || g.is_connected())
            && (!self.regular_only || degree_profile(g).regular)
    }
}

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub analyze: AnalyzeOptions,
    pub filters: Filters,
    pub jobs: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            analyze: AnalyzeOptions::default(),
            filters: Filters::default(),
            jobs: 1,
        }
    }
}

/// A corpus line that could not be used.
#[derive(Debug)]
pub struct CorpusError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for CorpusError {}

/// Parses a graph6 corpus; blank lines and an optional header are allowed.
pub fn parse_corpus(text: &str) -> std::result::Result<Vec<(usize, Graph)>, CorpusError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l)
                .map(|g| (i + 1, g))
                .map_err(|e| CorpusError {
                    line: i + 1,
                    error: e.into(),
                })
        })
        .collect()
}

fn cache_usable(r: &VerificationRecord, opts: &AnalyzeOptions, g: &Graph) -> bool {
    let wants_case = opts.construct && r.connected && g.order() >= MIN_ORDER;
    r.max_colours == opts.solver.max_colours
        && (!wants_case || Case::ALL.iter().any(|c| c.label() == r.method))
}

/// Analyses every accepted graph, in input order. Parallel work is merged
/// by position, so the output does not depend on `jobs`. New records are
/// written to the cache from this thread only.
pub fn run_corpus(
    graphs: &[(usize, Graph)],
    opts: &CorpusOptions,
    mut cache: Option<&mut Cache>,
) -> std::result::Result<Vec<VerificationRecord>, CorpusError> {
    let accepted: Vec<&(usize, Graph)> = graphs
        .iter()
        .filter(|(_, g)| opts.filters.accepts(g))
        .collect();
    let cached: Vec<Option<VerificationRecord>> = accepted
        .iter()
        .map(|(_, g)| {
            let key = crate::graph::to_graph6(g).ok()?;
            let hit = cache.as_ref()?.lookup(&key)?;
            cache_usable(hit, &opts.analyze, g).then(|| hit.clone())
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CorpusError {
            line: 0,
            error: Error::Precondition(e.to_string()),
        })?;
    let computed: Vec<std::result::Result<Option<VerificationRecord>, CorpusError>> =
        pool.install(|| {
            accepted
                .par_iter()
                .zip(cached.par_iter())
                .map(|((line, g), hit)| match hit {
                    Some(_) => Ok(None),
                    None => analyze(g, &opts.analyze)
                        .map(|a| Some(a.record))
                        .map_err(|error| CorpusError { line: *line, error }),
                })
                .collect()
        });
    let mut out = Vec::with_capacity(accepted.len());
    for (hit, fresh) in cached.into_iter().zip(computed) {
        match (hit, fresh?) {
            (Some(r), _) => out.push(r),
            (None, Some(r)) => {
                if let Some(cache) = cache.as_deref_mut() {
                    cache
                        .store(&r)
                        .map_err(|error| CorpusError { line: 0, error })?;
                }
                out.push(r);
            }
            (None, None) => unreachable!("uncached graphs are always analysed"),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub claim: Claim,
    /// Graphs the claim applies to; `pass + fail == total`.
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub violators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub claims: Vec<ClaimSummary>,
    /// Records breaking `d_small ≤ d_prime` or `d_small = 1 ⇔ no small
    /// automorphisms`.
    pub invariant_violations: Vec<String>,
    pub d_prime_distribution: BTreeMap<String, usize>,
    pub d_small_distribution: BTreeMap<String, usize>,
    /// Graphs attaining `d_small = 3`.
    pub d_small_three: Vec<String>,
    /// Construction outcome per case, when the construction ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction_histogram: Option<BTreeMap<String, usize>>,
}

impl CorpusSummary {
    pub fn all_hold(&self) -> bool {
        self.invariant_violations.is_empty() && self.claims.iter().all(|c| c.fail == 0)
    }
}

pub fn summarize(records: &[VerificationRecord], claims: &[Claim]) -> CorpusSummary {
    let claims = claims
        .iter()
        .map(|&claim| {
            let applicable: Vec<&VerificationRecord> =
                records.iter().filter(|r| claim.applies(r)).collect();
            let violators: Vec<String> = applicable
                .iter()
                .filter(|r| !claim.holds(r))
                .map(|r| r.graph6.clone())
                .collect();
            ClaimSummary {
                claim,
                total: applicable.len(),
                pass: applicable.len() - violators.len(),
                fail: violators.len(),
                violators,
            }
        })
        .collect();
    let distribution = |f: fn(&VerificationRecord) -> IndexValue| {
        let mut map = BTreeMap::new();
        for r in records {
            *map.entry(f(r).to_string()).or_insert(0) += 1;
        }
        map
    };
    let constructed: Vec<&VerificationRecord> = records
        .iter()
        .filter(|r| Case::ALL.iter().any(|c| c.label() == r.method))
        .collect();
    let construction_histogram = (!constructed.is_empty()).then(|| {
        let mut map: BTreeMap<String, usize> = Case::ALL
            .iter()
            .map(|c| (c.label().to_owned(), 0))
            .collect();
        for r in constructed {
            *map.get_mut(&r.method).expect("case label") += 1;
        }
        map
    });
    CorpusSummary {
        total: records.len(),
        claims,
        invariant_violations: records
            .iter()
            .filter(|r| !r.invariants_hold())
            .map(|r| r.graph6.clone())
            .collect(),
        d_prime_distribution: distribution(|r| r.d_prime),
        d_small_distribution: distribution(|r| r.d_small),
        d_small_three: records
            .iter()
            .filter(|r| r.d_small == IndexValue::Finite(3))
            .map(|r| r.graph6.clone())
            .collect(),
        construction_histogram,
    }
}

/// Output format for summaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(format!(
                "unknown report format {s:?} (expected json, text or csv)"
            )),
        }
    }
}

pub fn render(summary: &CorpusSummary, format: ReportFormat) -> Result<String> {
    Ok(match format {
        ReportFormat::Json => serde_json::to_string_pretty(summary)? + "\n",
        ReportFormat::Text => render_text(summary),
        ReportFormat::Csv => render_csv(summary)?,
    })
}

fn render_text(s: &CorpusSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graphs analysed: {}", s.total);
    if !s.claims.is_empty() {
        let _ = writeln!(
            out,
            "\n{:<10} {:>8} {:>8} {:>8}",
            "claim", "total", "pass", "fail"
        );
        for c in &s.claims {
            let _ = writeln!(
                out,
                "{:<10} {:>8} {:>8} {:>8}",
                c.claim.name(),
                c.total,
                c.pass,
                c.fail
            );
        }
        for c in s.claims.iter().filter(|c| c.fail > 0) {
            let _ = writeln!(out, "\nviolators of {}:", c.claim);
            for g in &c.violators {
                let _ = writeln!(out, "  {g}");
            }
        }
    }
    if !s.invariant_violations.is_empty() {
        let _ = writeln!(out, "\nrecord invariant violations:");
        for g in &s.invariant_violations {
            let _ = writeln!(out, "  {g}");
        }
    }
    let _ = writeln!(out, "\n{:<10} {:>8} {:>8}", "index", "D'", "D's");
    let mut keys: Vec<&String> = s
        .d_prime_distribution
        .keys()
        .chain(s.d_small_distribution.keys())
        .collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let a = s.d_prime_distribution.get(k).copied().unwrap_or(0);
        let b = s.d_small_distribution.get(k).copied().unwrap_or(0);
        let _ = writeln!(out, "{:<10} {:>8} {:>8}", k, a, b);
    }
    if let Some(h) = &s.construction_histogram {
        let _ = writeln!(out, "\n{:<26} {:>8}", "construction case", "graphs");
        for case in Case::ALL {
            let _ = writeln!(
                out,
                "{:<26} {:>8}",
                case.label(),
                h.get(case.label()).copied().unwrap_or(0)
            );
        }
    }
    if !s.d_small_three.is_empty() {
        let _ = writeln!(out, "\ngraphs with D's = 3: {}", s.d_small_three.join(" "));
    }
    out
}

fn render_csv(s: &CorpusSummary) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(["table", "key", "count"]).map_err(csv_err)?;
    for (k, v) in &s.d_prime_distribution {
        w.write_record(["d_prime", k, &v.to_string()])
            .map_err(csv_err)?;
    }
    for (k, v) in &s.d_small_distribution {
        w.write_record(["d_small", k, &v.to_string()])
            .map_err(csv_err)?;
    }
    for c in &s.claims {
        w.write_record(["claim_pass", c.claim.name(), &c.pass.to_string()])
            .map_err(csv_err)?;
        w.write_record(["claim_fail", c.claim.name(), &c.fail.to_string()])
            .map_err(csv_err)?;
    }
    if let Some(h) = &s.construction_histogram {
        for (k, v) in h {
            w.write_record(["construction", k, &v.to_string()])
                .map_err(csv_err)?;
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "A_\nBw\nBW\nCF\nCr\nC~\n";

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert!("thm2".parse::<Claim>().is_err());
    }

    #[test]
    fn summary_counts_add_up() {
        let graphs = parse_corpus(SMALL).unwrap();
        let records = run_corpus(&graphs, &CorpusOptions::default(), None).unwrap();
        let s = summarize(&records, &Claim::ALL);
        assert_eq!(s.total, 6);
        for c in &s.claims {
            assert_eq!(c.pass + c.fail, c.total);
        }
        assert!(s.invariant_violations.is_empty());
        let kpw = s.claims.iter().find(|c| c.claim == Claim::Kpw3).unwrap();
        // K2 is the only graph here with an isolated-edge component.
        assert_eq!(kpw.total, 5);
    }

    #[test]
    fn parallel_merge_is_order_stable() {
        let graphs = parse_corpus(SMALL).unwrap();
        let one = run_corpus(
            &graphs,
            &CorpusOptions {
                jobs: 1,
                ..Default::default()
            },
            None,
        )
        .unwrap();
        let four = run_corpus(
            &graphs,
            &CorpusOptions {
                jobs: 4,
                ..Default::default()
            },
            None,
        )
        .unwrap();
        assert_eq!(one.len(), four.len());
        assert!(one.iter().zip(&four).all(|(a, b)| a.same_result(b)));
    }

    #[test]
    fn filters_apply() {
        let graphs = parse_corpus(SMALL).unwrap();
        let opts = CorpusOptions {
            filters: Filters {
                min_order: Some(3),
                regular_only: true,
                ..Default::default()
            },
            ..Default::default()
        };
        let records = run_corpus(&graphs, &opts, None).unwrap();
        // K3, C4 and K4.
        let names: Vec<&str> = records.iter().map(|r| r.graph6.as_str()).collect();
        assert_eq!(names, vec!["Bw", "Cr", "C~"]);
    }

    #[test]
    fn bad_lines_are_reported() {
        let err = parse_corpus("A_\nB\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn renderers() {
        let graphs = parse_corpus(SMALL).unwrap();
        let records = run_corpus(&graphs, &CorpusOptions::default(), None).unwrap();
        let s = summarize(&records, &[Claim::Monotone]);
        let json = render(&s, ReportFormat::Json).unwrap();
        assert!(json.contains("\"monotone\""));
        let csv = render(&s, ReportFormat::Csv).unwrap();
        assert!(csv.starts_with("table,key,count\n"));
        let text = render(&s, ReportFormat::Text).unwrap();
        assert!(text.contains("monotone"));
    }
}
