//! `rbond`: run Roman domination and bondage campaigns over graph corpora.
//!
//! Exit codes: 0 when every check holds (or a hunt found a match), 1 when a
//! check is violated or a bound falls below an exact bondage number, 2 for
//! usage and I/O errors, 3 when a hunt exhausts its corpus.

mod predicate;
mod report;
mod source;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use roman_bondage::bounds::CheckId;
use roman_bondage::io::{graph6_string, hat_construction, Family, Format};

use predicate::Predicate;
use report::{GraphReport, Pipeline, Stage, SummaryRow};
use source::{Item, Items, Source};

/// Records handed to the worker pool at a time. Output order is restored per chunk.
const CHUNK: usize = 512;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "rbond", version, about = "Roman domination and Roman bondage campaigns")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Domination and Roman domination numbers.
    Solve(RunArgs),
    /// Adds the Roman bondage number and the vertex-removal partition.
    Bondage(RunArgs),
    /// Adds every upper bound and its soundness against the exact value.
    Bounds(RunArgs),
    /// Full pipeline with every check (or those named by --checks).
    Verify(RunArgs),
    /// Stops at the first graph whose report satisfies a predicate.
    Hunt {
        /// e.g. "bondage.value > Delta" or "v_plus_size > 0 AND n <= 5".
        predicate: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Writes the five-vertex-path attachment of each graph as graph6.
    Hat(WriteArgs),
    /// Writes the selected corpus as graph6.
    Gen(WriteArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Corpus file, or `-` for standard input.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, default_value = "graph6", value_parser = parse_format)]
    format: Format,
    /// Named family such as `grid:3,4`; repeat for several.
    #[arg(long = "gen", value_parser = parse_family)]
    gen: Vec<Family>,
    /// Every labeled graph on this many vertices (1 to 7).
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Restrict exhaustive enumeration to connected graphs.
    #[arg(long)]
    connected: bool,
    /// Abort on the first malformed corpus record instead of skipping it.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest edge set tried by the bondage search (default `3Δ - 3`).
    #[arg(long)]
    cap: Option<usize>,
    /// Comma-separated check names, or `all`.
    #[arg(long)]
    checks: Option<String>,
    /// JSON-lines output path (standard output if absent).
    #[arg(long)]
    out: Option<String>,
    /// CSV summary path.
    #[arg(long)]
    csv: Option<String>,
    #[arg(long, env = "RB_WORKERS")]
    workers: Option<usize>,
}

#[derive(Args)]
struct WriteArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    out: Option<String>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: roman_bondage::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: roman_bondage::Error| e.to_string())
}

impl SourceArgs {
    fn into_source(self) -> Result<Source, CliError> {
        let given = [self.input.is_some(), !self.gen.is_empty(), self.exhaustive.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(CliError::Usage(
                "give exactly one corpus source: --input, --gen or --exhaustive".into(),
            ));
        }
        if self.connected && self.exhaustive.is_none() {
            return Err(CliError::Usage("--connected only applies to --exhaustive".into()));
        }
        Ok(if let Some(path) = self.input {
            Source::File {
                path,
                format: self.format,
                strict: self.strict,
            }
        } else if let Some(n) = self.exhaustive {
            Source::Exhaustive {
                n,
                connected: self.connected,
            }
        } else {
            Source::Generated(self.gen)
        })
    }
}

fn parse_checks(spec: Option<&str>, default_all: bool) -> Result<Vec<CheckId>, CliError> {
    match spec {
        None if default_all => Ok(CheckId::ALL.to_vec()),
        None => Ok(Vec::new()),
        Some(s) if s.trim().eq_ignore_ascii_case("all") => Ok(CheckId::ALL.to_vec()),
        Some(s) => {
            let mut ids = Vec::new();
            for name in s.split(',').filter(|p| !p.trim().is_empty()) {
                let id: CheckId = name.parse().map_err(|e: roman_bondage::Error| CliError::Usage(e.to_string()))?;
                if !ids.contains(&id) {
                    ids.push(id);
                }
            }
            Ok(ids)
        }
    }
}

fn open_out(path: Option<&str>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::Io(format!("{p}: {e}")))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn next_chunk(items: &mut Items) -> Result<Vec<Item>, CliError> {
    let mut chunk = Vec::with_capacity(CHUNK);
    for item in items.by_ref() {
        chunk.push(item?);
        if chunk.len() == CHUNK {
            break;
        }
    }
    Ok(chunk)
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be positive".into()));
        }
        builder = builder.num_threads(w);
    }
    builder.build().map_err(|e| CliError::Io(e.to_string()))
}

fn reports(pool: &rayon::ThreadPool, chunk: &[Item], pipeline: &Pipeline) -> Vec<GraphReport> {
    pool.install(|| chunk.par_iter().map(|item| report::build(item, pipeline)).collect())
}

/// Runs a campaign and returns whether any record failed.
fn campaign(args: RunArgs, stage: Stage, all_checks: bool) -> Result<bool, CliError> {
    let pipeline = Pipeline {
        stage,
        cap: args.cap,
        checks: parse_checks(args.checks.as_deref(), all_checks)?,
    };
    let pool = pool(args.workers)?;
    let mut out = open_out(args.out.as_deref())?;
    let mut csv = match &args.csv {
        Some(p) => Some(csv::Writer::from_path(p).map_err(|e| CliError::Io(format!("{p}: {e}")))?),
        None => None,
    };
    let mut items = args.source.into_source()?.open()?;
    let mut failed = false;
    loop {
        let chunk = next_chunk(&mut items)?;
        if chunk.is_empty() {
            break;
        }
        for r in reports(&pool, &chunk, &pipeline) {
            failed |= r.has_failure();
            serde_json::to_writer(&mut out, &r).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
            if let Some(w) = csv.as_mut() {
                w.serialize(SummaryRow::from(&r))?;
            }
        }
    }
    out.flush()?;
    if let Some(mut w) = csv {
        w.flush()?;
    }
    Ok(failed)
}

/// Returns whether a match was found.
fn hunt(predicate: &str, args: RunArgs) -> Result<bool, CliError> {
    let predicate = Predicate::parse(predicate).map_err(|e| CliError::Usage(e.to_string()))?;
    let pipeline = Pipeline {
        stage: Stage::Bounds,
        cap: args.cap,
        checks: parse_checks(args.checks.as_deref(), false)?,
    };
    let pool = pool(args.workers)?;
    let mut out = open_out(args.out.as_deref())?;
    let mut items = args.source.into_source()?.open()?;
    loop {
        let chunk = next_chunk(&mut items)?;
        if chunk.is_empty() {
            writeln!(out, "NONE")?;
            out.flush()?;
            return Ok(false);
        }
        let values: Vec<(GraphReport, serde_json::Value)> = reports(&pool, &chunk, &pipeline)
            .into_iter()
            .map(|r| {
                let v = serde_json::to_value(&r).expect("reports serialize");
                (r, v)
            })
            .collect();
        if let Some((r, _)) = values.iter().find(|(_, v)| predicate.matches(v)) {
            writeln!(out, "{}", r.graph6)?;
            serde_json::to_writer(&mut out, r).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
            out.flush()?;
            return Ok(true);
        }
    }
}

fn write_graphs(args: WriteArgs, hat: bool) -> Result<(), CliError> {
    let mut out = open_out(args.out.as_deref())?;
    for item in args.source.into_source()?.open()? {
        let item = item?;
        let g = if hat {
            hat_construction(&item.graph).map_err(|e| CliError::Usage(format!("{}: {e}", item.id)))?
        } else {
            item.graph
        };
        let line = graph6_string(&g).map_err(|e| CliError::Io(format!("{}: {e}", item.id)))?;
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let failed_code = |failed: bool| if failed { ExitCode::from(1) } else { ExitCode::SUCCESS };
    match cli.verb {
        Verb::Solve(a) => campaign(a, Stage::Solve, false).map(failed_code),
        Verb::Bondage(a) => campaign(a, Stage::Bondage, false).map(failed_code),
        Verb::Bounds(a) => campaign(a, Stage::Bounds, false).map(failed_code),
        Verb::Verify(a) => campaign(a, Stage::Bounds, true).map(failed_code),
        Verb::Hunt { predicate, run } => hunt(&predicate, run).map(|found| if found { ExitCode::SUCCESS } else { ExitCode::from(3) }),
        Verb::Hat(a) => write_graphs(a, true).map(|_| ExitCode::SUCCESS),
        Verb::Gen(a) => write_graphs(a, false).map(|_| ExitCode::SUCCESS),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rbond: {e}");
            ExitCode::from(2)
        }
    }
}
