//! The `iasi` command line: verify, classify, construct, search, census and
//! pipeline.
//!
//! Exit codes: `0` for a true verdict, `FOUND` or a successful construction;
//! `1` for a false verdict, a search without a witness or a failed
//! construction; `2` for unusable input. A JSON report (`"schema": 1`) is
//! written to `-o` or stdout whenever the exit code is 0 or 1.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{
    label_complement, label_corona, label_identical_biarithmetic, label_join, label_product,
    label_union, BiarithmeticParams, ConstructError, ConstructParams, ConstructionOutcome,
    FailedHypothesis, OffsetSchedule,
};
use crate::graph::{io, Graph, GraphError};
use crate::labeling::{classify, LabelError, Labeling, TargetClass};
use crate::search::{census, search, SearchBounds, SearchError, SearchStatus};

pub const SCHEMA: u32 = 1;
pub const BUDGET_ENV: &str = "IASI_NODE_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error("{path}: {source}")]
    Label { path: String, source: LabelError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Debug, Parser)]
#[command(
    name = "iasi",
    version,
    about = "Verify, construct and search for arithmetic set-indexers of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a labeling against a class.
    Verify(VerifyArgs),
    /// Report every class a labeling belongs to.
    Classify(LabeledInput),
    /// Build a labeled graph from labeled operands.
    Construct(ConstructArgs),
    /// Search for a labeling of a class within bounds.
    Search(SearchArgs),
    /// Search every small graph and tabulate against bipartiteness.
    Census(CensusArgs),
    /// Run a batch of constructions from a JSON spec file.
    Pipeline(PipelineArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Report path (stdout if absent).
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// Reject graphs with isolated vertices.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct LabeledInput {
    /// Graph file (`.json` or edge list).
    #[arg(short = 'g', long)]
    pub graph: PathBuf,
    /// Labeling JSON file.
    #[arg(short = 'l', long)]
    pub labeling: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: LabeledInput,
    #[arg(long, default_value = "iasi")]
    pub class: String,
    /// Multiplier for `identical-biarithmetic`.
    #[arg(long)]
    pub k: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Op {
    Union,
    Join,
    Product,
    Corona,
    Complement,
    IdenticalBiarithmetic,
}

impl Op {
    fn claim(self) -> &'static str {
        match self {
            Op::Union => "the union of arithmetic IASI graphs is arithmetic",
            Op::Join => "a join is arithmetic when every cross pair meets the adjacency condition",
            Op::Product => "the cartesian product of arithmetic IASI graphs is arithmetic",
            Op::Corona => "a corona is arithmetic when every spoke meets the adjacency condition",
            Op::Complement => "a complement keeps an arithmetic labeling when its new edges meet the adjacency condition",
            Op::IdenticalBiarithmetic => "a graph admits an identical biarithmetic IASI iff it is bipartite",
        }
    }

    fn binary(self) -> bool {
        matches!(self, Op::Union | Op::Join | Op::Product | Op::Corona)
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub op: Op,
    #[arg(long = "g1")]
    pub g1: PathBuf,
    #[arg(long = "l1")]
    pub l1: Option<PathBuf>,
    #[arg(long = "g2")]
    pub g2: Option<PathBuf>,
    #[arg(long = "l2")]
    pub l2: Option<PathBuf>,
    /// Multiplier for `identical-biarithmetic`.
    #[arg(long, default_value_t = 2)]
    pub k: u64,
    #[arg(long, default_value_t = 1)]
    pub base_d: u64,
    /// Lengthen labels that break a cardinality bound.
    #[arg(long)]
    pub pad: bool,
    /// Number of offset doublings before relabeling.
    #[arg(long, default_value_t = OffsetSchedule::default().cap)]
    pub cap: u32,
    /// Also write the constructed graph (format by extension).
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
    /// Also write the constructed labeling as JSON.
    #[arg(long)]
    pub labeling_out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, default_value = "iasi")]
    pub class: String,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, default_value_t = 12)]
    pub max_first: u64,
    /// Allowed common differences.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub diffs: Vec<u64>,
    /// Allowed label cardinalities.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub lengths: Vec<usize>,
    /// Node budget; defaults to `$IASI_NODE_BUDGET`, then a built-in cap.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short = 'g', long)]
    pub graph: PathBuf,
    #[command(flatten)]
    pub bounds: BoundsArgs,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    #[command(flatten)]
    pub bounds: BoundsArgs,
    /// Output format; defaults to CSV for `.csv` outputs, JSON otherwise.
    #[arg(long, value_enum)]
    pub format: Option<TableFormat>,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    /// JSON spec: a list of rows, or `{"rows": [...]}`. Paths are relative
    /// to the spec file.
    pub spec: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

/// Accepts `-g1` style flags by rewriting them to `--g1` before parsing.
fn normalize_args<I: IntoIterator<Item = OsString>>(args: I) -> Vec<OsString> {
    args.into_iter()
        .map(|a| match a.to_str() {
            Some(s @ ("-g1" | "-l1" | "-g2" | "-l2")) => OsString::from(format!("-{s}")),
            _ => a,
        })
        .collect()
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(normalize_args(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Verify(a) => verify(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Construct(a) => construct(a),
        Command::Search(a) => search_cmd(a),
        Command::Census(a) => census_cmd(a),
        Command::Pipeline(a) => pipeline(a),
    }
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(output: Option<&Path>, command: &str, body: T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(&Report {
        schema: SCHEMA,
        command,
        body,
    })
    .expect("reports are serializable");
    text.push('\n');
    write_out(output, &text)
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_graph(path: &Path, strict: bool) -> Result<Graph, CliError> {
    let text = read(path)?;
    let wrap = |source| CliError::Graph {
        path: path.display().to_string(),
        source,
    };
    let g = io::parse_for_path(path, &text).map_err(wrap)?;
    if strict {
        g.check_strict().map_err(wrap)?;
    }
    Ok(g)
}

/// Reads a labeling and checks that it labels every vertex of `g`.
pub fn load_labeling(path: &Path, g: &Graph) -> Result<Labeling, CliError> {
    let wrap = |source| CliError::Label {
        path: path.display().to_string(),
        source,
    };
    let f = Labeling::from_json(&read(path)?).map_err(wrap)?;
    f.labels_for(g).map_err(wrap)?;
    Ok(f)
}

fn parse_class(name: &str, k: Option<u64>) -> Result<TargetClass, CliError> {
    TargetClass::parse(name, k).map_err(CliError::Usage)
}

#[derive(Serialize)]
struct VerifyBody {
    class: TargetClass,
    holds: bool,
    #[serde(flatten)]
    classification: crate::labeling::ClassificationReport,
}

fn verify(a: VerifyArgs) -> Result<i32, CliError> {
    let class = parse_class(&a.class, a.k)?;
    let g = load_graph(&a.input.graph, a.input.common.strict)?;
    let f = load_labeling(&a.input.labeling, &g)?;
    let classification = classify(&g, &f).map_err(|source| CliError::Label {
        path: a.input.labeling.display().to_string(),
        source,
    })?;
    let holds = classification.satisfies(class);
    emit(
        a.input.common.output.as_deref(),
        "verify",
        VerifyBody {
            class,
            holds,
            classification,
        },
    )?;
    Ok(if holds { 0 } else { 1 })
}

fn classify_cmd(a: LabeledInput) -> Result<i32, CliError> {
    let g = load_graph(&a.graph, a.common.strict)?;
    let f = load_labeling(&a.labeling, &g)?;
    let report = classify(&g, &f).map_err(|source| CliError::Label {
        path: a.labeling.display().to_string(),
        source,
    })?;
    let code = if report.is_iasi { 0 } else { 1 };
    emit(a.common.output.as_deref(), "classify", report)?;
    Ok(code)
}

/// One construction request with all paths already resolved.
#[derive(Debug, Clone)]
pub struct ConstructRequest {
    pub op: Op,
    pub g1: PathBuf,
    pub l1: Option<PathBuf>,
    pub g2: Option<PathBuf>,
    pub l2: Option<PathBuf>,
    pub k: u64,
    pub base_d: u64,
    pub params: ConstructParams,
    pub strict: bool,
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &str, op: Op) -> Result<&'a Path, CliError> {
    p.as_deref().ok_or_else(|| {
        let op = op.to_possible_value().expect("no skipped variants");
        CliError::Usage(format!("--op {} requires {flag}", op.get_name()))
    })
}

pub fn run_construct(r: &ConstructRequest) -> Result<ConstructionOutcome, CliError> {
    let g1 = load_graph(&r.g1, r.strict)?;
    if r.op == Op::IdenticalBiarithmetic {
        let params = BiarithmeticParams {
            schedule: r.params.schedule,
            ..BiarithmeticParams::default()
        };
        return Ok(label_identical_biarithmetic(&g1, r.k, r.base_d, params)?);
    }
    let f1 = load_labeling(required(&r.l1, "--l1", r.op)?, &g1)?;
    if !r.op.binary() {
        return Ok(label_complement(&g1, &f1)?);
    }
    let g2 = load_graph(required(&r.g2, "--g2", r.op)?, r.strict)?;
    let f2 = load_labeling(required(&r.l2, "--l2", r.op)?, &g2)?;
    Ok(match r.op {
        Op::Union => label_union(&g1, &f1, &g2, &f2)?,
        Op::Join => label_join(&g1, &f1, &g2, &f2, r.params)?,
        Op::Product => label_product(&g1, &f1, &g2, &f2, r.params)?,
        Op::Corona => label_corona(&g1, &f1, &g2, &f2, r.params)?,
        Op::Complement | Op::IdenticalBiarithmetic => unreachable!("handled above"),
    })
}

fn construct(a: ConstructArgs) -> Result<i32, CliError> {
    let request = ConstructRequest {
        op: a.op,
        g1: a.g1,
        l1: a.l1,
        g2: a.g2,
        l2: a.l2,
        k: a.k,
        base_d: a.base_d,
        params: ConstructParams {
            pad: a.pad,
            schedule: OffsetSchedule { cap: a.cap },
        },
        strict: a.common.strict,
    };
    let outcome = run_construct(&request)?;
    if let Some(p) = &a.graph_out {
        let wrap = |source| CliError::Graph {
            path: p.display().to_string(),
            source,
        };
        let text = if p
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("json"))
        {
            io::write_json(outcome.graph())
        } else {
            io::write_edge_list(outcome.graph()).map_err(wrap)?
        };
        write_out(Some(p), &text)?;
    }
    if let (Some(p), Some(f)) = (&a.labeling_out, outcome.labeling()) {
        write_out(Some(p), &(f.to_json() + "\n"))?;
    }
    let code = if outcome.is_ok() { 0 } else { 1 };
    emit(a.common.output.as_deref(), "construct", &outcome)?;
    Ok(code)
}

fn bounds_from(a: &BoundsArgs) -> Result<(TargetClass, SearchBounds), CliError> {
    let class = parse_class(&a.class, a.k)?;
    let budget = match a.budget {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|e| CliError::Usage(format!("{BUDGET_ENV}=`{v}`: {e}")))?,
            Err(_) => SearchBounds::DEFAULT_BUDGET,
        },
    };
    Ok((
        class,
        SearchBounds::new(a.max_first, &a.diffs, &a.lengths).with_budget(budget),
    ))
}

#[derive(Serialize)]
struct SearchBody<'a> {
    class: TargetClass,
    bounds: &'a SearchBounds,
    #[serde(flatten)]
    result: crate::search::SearchResult,
}

fn search_cmd(a: SearchArgs) -> Result<i32, CliError> {
    let (class, bounds) = bounds_from(&a.bounds)?;
    let g = load_graph(&a.graph, a.common.strict)?;
    let result = search(&g, class, &bounds)?;
    let code = if result.status == SearchStatus::Found {
        0
    } else {
        1
    };
    emit(
        a.common.output.as_deref(),
        "search",
        SearchBody {
            class,
            bounds: &bounds,
            result,
        },
    )?;
    Ok(code)
}

fn census_cmd(a: CensusArgs) -> Result<i32, CliError> {
    let (class, bounds) = bounds_from(&a.bounds)?;
    if a.n_max < 2 {
        return Err(CliError::Usage("--n-max must be at least 2".into()));
    }
    let table = census(a.n_max, class, &bounds)?;
    let csv_out = a
        .output
        .as_ref()
        .is_some_and(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")));
    match a.format.unwrap_or(if csv_out {
        TableFormat::Csv
    } else {
        TableFormat::Json
    }) {
        TableFormat::Csv => write_out(a.output.as_deref(), &table.to_csv())?,
        TableFormat::Json => emit(a.output.as_deref(), "census", &table)?,
    }
    Ok(0)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PipelineRow {
    id: Option<String>,
    op: Op,
    g1: PathBuf,
    l1: Option<PathBuf>,
    g2: Option<PathBuf>,
    l2: Option<PathBuf>,
    k: Option<u64>,
    base_d: Option<u64>,
    #[serde(default)]
    pad: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PipelineSpec {
    Rows(Vec<serde_json::Value>),
    Wrapped { rows: Vec<serde_json::Value> },
}

#[derive(Debug, Serialize)]
pub struct PipelineEntry {
    pub id: String,
    pub op: Option<Op>,
    pub claim: Option<&'static str>,
    pub instance: serde_json::Value,
    /// `ok`, `failed` or `error`.
    pub status: &'static str,
    pub class: Option<TargetClass>,
    pub verified: Option<bool>,
    pub failed_hypothesis: Option<FailedHypothesis>,
    pub error: Option<String>,
}

fn pipeline_row(i: usize, raw: serde_json::Value, base: &Path, strict: bool) -> PipelineEntry {
    let fallback_id = format!("row{}", i + 1);
    let mut entry = PipelineEntry {
        id: raw
            .get("id")
            .and_then(|v| v.as_str())
            .map_or(fallback_id, str::to_string),
        op: None,
        claim: None,
        instance: raw.clone(),
        status: "error",
        class: None,
        verified: None,
        failed_hypothesis: None,
        error: None,
    };
    let row: PipelineRow = match serde_json::from_value(raw) {
        Ok(row) => row,
        Err(e) => {
            entry.error = Some(format!("row {}: {e}", i + 1));
            return entry;
        }
    };
    if let Some(id) = row.id {
        entry.id = id;
    }
    entry.op = Some(row.op);
    entry.claim = Some(row.op.claim());
    let resolve = |p: &PathBuf| base.join(p);
    let request = ConstructRequest {
        op: row.op,
        g1: resolve(&row.g1),
        l1: row.l1.as_ref().map(resolve),
        g2: row.g2.as_ref().map(resolve),
        l2: row.l2.as_ref().map(resolve),
        k: row.k.unwrap_or(2),
        base_d: row.base_d.unwrap_or(1),
        params: ConstructParams {
            pad: row.pad,
            ..ConstructParams::default()
        },
        strict,
    };
    match run_construct(&request) {
        Err(e) => entry.error = Some(e.to_string()),
        Ok(outcome) => {
            entry.status = if outcome.is_ok() { "ok" } else { "failed" };
            entry.class = outcome.class();
            entry.failed_hypothesis = outcome.failed_hypothesis().cloned();
            if let (Some(f), Some(class)) = (outcome.labeling(), outcome.class()) {
                entry.verified =
                    Some(classify(outcome.graph(), f).is_ok_and(|report| report.satisfies(class)));
            }
        }
    }
    entry
}

/// Runs every row of a pipeline spec; a bad row is reported and skipped.
pub fn run_pipeline(spec: &Path, strict: bool) -> Result<Vec<PipelineEntry>, CliError> {
    let text = read(spec)?;
    let rows = match serde_json::from_str::<PipelineSpec>(&text) {
        Ok(PipelineSpec::Rows(rows) | PipelineSpec::Wrapped { rows }) => rows,
        Err(e) => return Err(CliError::Usage(format!("{}: {e}", spec.display()))),
    };
    let base = spec.parent().unwrap_or(Path::new("."));
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(i, raw)| pipeline_row(i, raw, base, strict))
        .collect())
}

#[derive(Serialize)]
struct PipelineBody {
    rows: Vec<PipelineEntry>,
}

fn pipeline(a: PipelineArgs) -> Result<i32, CliError> {
    let rows = run_pipeline(&a.spec, a.common.strict)?;
    let all_good = rows
        .iter()
        .all(|r| r.status == "ok" && r.verified == Some(true));
    emit(
        a.common.output.as_deref(),
        "pipeline",
        PipelineBody { rows },
    )?;
    Ok(if all_good { 0 } else { 1 })
}
