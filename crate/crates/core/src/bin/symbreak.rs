use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symbreak::colouring::EdgeColouring;
use symbreak::construct::{construct, ConstructionTrace};
use symbreak::graph::{parse_graph, GraphFormat};
use symbreak::harness::{
    analyze, parse_corpus, render, run_corpus, summarize, AnalyzeOptions, Cache, Claim,
    CorpusOptions, Filters, ReportFormat, VerificationRecord, CACHE_ENV,
};
use symbreak::solver::{SolverConfig, DEFAULT_MAX_COLOURS};
use symbreak::{Error, Graph};

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FALSIFIED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "symbreak",
    version,
    about = "Break graph automorphisms with edge colourings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full per-graph analysis, printed as one JSON record per graph.
    Analyze(AnalyzeArgs),
    /// Check a claim over every graph of a graph6 corpus.
    Verify(VerifyArgs),
    /// Build a 2-colouring breaking every small automorphism.
    Construct(ConstructArgs),
    /// Print both indices and their witness colourings.
    Index(IndexArgs),
    /// Index distributions over a corpus, without checking claims.
    Stats(CorpusArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Graph6 => GraphFormat::Graph6,
            Format::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Json,
    Text,
    Csv,
}

impl From<Report> for ReportFormat {
    fn from(r: Report) -> Self {
        match r {
            Report::Json => ReportFormat::Json,
            Report::Text => ReportFormat::Text,
            Report::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Args)]
struct SolverArgs {
    /// Largest number of colours tried before reporting ">k".
    #[arg(long, default_value_t = DEFAULT_MAX_COLOURS)]
    max_colours: u32,
    /// Fixed seed for the local search instead of one derived from graph6.
    #[arg(long)]
    seed_override: Option<u64>,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            max_colours: self.max_colours,
            seed_override: self.seed_override,
            ..Default::default()
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Graph given inline (graph6), instead of --input.
    graph: Option<String>,
    /// Input file; `-` or absent reads standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

impl InputArgs {
    fn read(&self) -> Result<String, Error> {
        if let Some(g) = &self.graph {
            return Ok(g.clone());
        }
        match &self.input {
            Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
            _ => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }

    /// One graph per graph6 line, or a single edge-list graph.
    fn graphs(&self) -> Result<Vec<Graph>, Error> {
        let text = self.read()?;
        match self.format {
            Format::Graph6 => Ok(parse_corpus(&text)
                .map_err(|e| e.error)?
                .into_iter()
                .map(|(_, g)| g)
                .collect()),
            Format::Edgelist => Ok(vec![parse_graph(&text, GraphFormat::EdgeList)?]),
        }
    }

    fn single(&self) -> Result<Graph, Error> {
        let text = self.read()?;
        parse_graph(&text, self.format.into())
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Also run the construction and include its colouring and trace.
    #[arg(long)]
    construct: bool,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct IndexArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    #[arg(long, value_enum, default_value = "text")]
    report: Report,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    solver: SolverArgs,
    /// Where to write the edge colouring (default: standard output).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Where to write the trace JSON (default: standard error).
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    /// graph6 corpus file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    min_order: Option<usize>,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    connected_only: bool,
    #[arg(long)]
    regular_only: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    report: Report,
    /// Run the construction on connected graphs of order ≥ 6 and report
    /// the per-case histogram.
    #[arg(long)]
    construct: bool,
    /// Also write every per-graph record as NDJSON to this file.
    #[arg(long)]
    records: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim(s) to check: thm1, kpw3, regular2, monotone.
    #[arg(long, required = true)]
    claim: Vec<Claim>,
    #[command(flatten)]
    corpus: CorpusArgs,
}

#[derive(Serialize)]
struct ConstructionOutput<'a> {
    colouring: String,
    trace: &'a ConstructionTrace,
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    #[serde(flatten)]
    record: &'a VerificationRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    construction: Option<ConstructionOutput<'a>>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(v) => cmd_verify(v),
        Command::Construct(c) => cmd_construct(c),
        Command::Index(i) => cmd_index(i),
        Command::Stats(s) => cmd_corpus(s, &[]),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e @ Error::TheoremFalsified { .. }) => {
            eprintln!("FATAL: {e}");
            ExitCode::from(EXIT_FALSIFIED)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, Error> {
    let graphs = args.input.graphs()?;
    let opts = AnalyzeOptions {
        solver: args.solver.config(),
        construct: args.construct,
    };
    let mut cache = args.cache_dir.as_deref().map(Cache::open).transpose()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in graphs {
        let key = symbreak::graph::to_graph6(&g)?;
        let hit = match (&cache, args.construct) {
            (Some(c), false) => c
                .lookup(&key)
                .filter(|r| r.max_colours == opts.solver.max_colours)
                .cloned(),
            _ => None,
        };
        let (record, construction) = match hit {
            Some(r) => (r, None),
            None => {
                let a = analyze(&g, &opts)?;
                if let Some(c) = cache.as_mut() {
                    c.store(&a.record)?;
                }
                (a.record, a.construction)
            }
        };
        let output = AnalyzeOutput {
            record: &record,
            construction: construction.as_ref().map(|(c, trace)| ConstructionOutput {
                colouring: c.to_text(&g),
                trace,
            }),
        };
        writeln!(out, "{}", serde_json::to_string(&output)?)?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct IndexOutput {
    graph6: String,
    d_prime: symbreak::IndexValue,
    d_prime_method: symbreak::Method,
    d_prime_witness: Option<String>,
    d_small: symbreak::IndexValue,
    d_small_method: symbreak::Method,
    d_small_witness: Option<String>,
}

fn cmd_index(args: IndexArgs) -> Result<u8, Error> {
    let graphs = args.input.graphs()?;
    let opts = AnalyzeOptions {
        solver: args.solver.config(),
        construct: false,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for g in graphs {
        let a = analyze(&g, &opts)?;
        let text = |c: &Option<EdgeColouring>| c.as_ref().map(|c| c.to_text(&g));
        let o = IndexOutput {
            graph6: a.record.graph6.clone(),
            d_prime: a.d_prime.value,
            d_prime_method: a.d_prime.method,
            d_prime_witness: text(&a.d_prime.witness),
            d_small: a.d_small.value,
            d_small_method: a.d_small.method,
            d_small_witness: text(&a.d_small.witness),
        };
        match args.report {
            Report::Json => writeln!(out, "{}", serde_json::to_string(&o)?)?,
            Report::Text | Report::Csv => {
                writeln!(out, "{}\tD'={}\tD's={}", o.graph6, o.d_prime, o.d_small)?;
                if let Some(w) = &o.d_small_witness {
                    for line in w.lines() {
                        writeln!(out, "  {line}")?;
                    }
                }
            }
        }
    }
    Ok(0)
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, Error> {
    let g = args.input.single()?;
    let (colouring, trace) = construct(&g, &args.solver.config())?;
    let text = colouring.to_text(&g);
    match &args.output {
        Some(p) => fs::write(p, &text)?,
        None => print!("{text}"),
    }
    let json = serde_json::to_string(&trace)? + "\n";
    match &args.trace {
        Some(p) => fs::write(p, json)?,
        None => eprint!("{json}"),
    }
    Ok(if trace.verified { 0 } else { EXIT_FALSIFIED })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    let mut claims = args.claim.clone();
    claims.sort();
    claims.dedup();
    cmd_corpus(args.corpus, &claims)
}

fn cmd_corpus(args: CorpusArgs, claims: &[Claim]) -> Result<u8, Error> {
    let text = fs::read_to_string(&args.input)?;
    let graphs = parse_corpus(&text).map_err(|e| Error::Precondition(e.to_string()))?;
    let opts = CorpusOptions {
        analyze: AnalyzeOptions {
            solver: args.solver.config(),
            construct: args.construct,
        },
        filters: Filters {
            min_order: args.min_order,
            max_order: args.max_order,
            connected_only: args.connected_only,
            regular_only: args.regular_only,
        },
        jobs: args.jobs,
    };
    let mut cache = args.cache_dir.as_deref().map(Cache::open).transpose()?;
    let records = run_corpus(&graphs, &opts, cache.as_mut())
        .map_err(|e| Error::Precondition(e.to_string()))?;
    if let Some(path) = &args.records {
        let mut lines = String::new();
        for r in &records {
            lines.push_str(&serde_json::to_string(r)?);
            lines.push('\n');
        }
        fs::write(path, lines)?;
    }
    let summary = summarize(&records, claims);
    print!("{}", render(&summary, args.report.into())?);
    Ok(if summary.all_hold() {
        0
    } else {
        EXIT_VIOLATIONS
    })
}
