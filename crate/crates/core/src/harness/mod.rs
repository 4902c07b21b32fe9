//! Corpus verification, per-graph records and the result cache.

pub mod cache;
pub mod corpus;
pub mod record;

pub use cache::{Cache, CACHE_ENV};
pub use corpus::{
    parse_corpus, render, run_corpus, summarize, Claim, ClaimSummary, CorpusError, CorpusOptions,
    CorpusSummary, Filters, ReportFormat,
};
pub use record::{analyze, Analysis, AnalyzeOptions, VerificationRecord};
