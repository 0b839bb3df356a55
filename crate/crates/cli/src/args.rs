use std::path::PathBuf;

use argmeter::io::DocumentFormat;
use argmeter::properties::DEFAULT_SEED;
use argmeter::{MeasureId, SemanticsKind};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "argmeter", version, about = "Inconsistency measures for argument graphs")]
pub struct Cli {
    /// Print errors as JSON on stderr.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Extensions,
    Labellings,
}

#[derive(Debug, Args)]
pub struct Engine {
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure an abstract or instantiated graph.
    Measure {
        file: PathBuf,
        /// Comma-separated measure codes; defaults to every measure the document supports.
        #[arg(long, value_parser = parse_measures)]
        measures: Option<MeasureList>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Force the document format instead of using the extension.
        #[arg(long = "input", value_parser = parse_document_format)]
        input: Option<DocumentFormat>,
        /// Include wall-clock timing.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// List extensions or labellings under a semantics.
    Semantics {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: SemanticsKind,
        #[arg(long, value_enum, default_value = "extensions")]
        form: Form,
        #[command(flatten)]
        engine: Engine,
    },
    /// Logic-based measures of an instantiated graph.
    Dmeasure {
        file: PathBuf,
        #[arg(long, value_parser = parse_measures)]
        measures: Option<MeasureList>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Build the argument tree for a root premise and score it.
    Argtree {
        file: PathBuf,
        /// Formula from the knowledgebase used as the root premise.
        #[arg(long)]
        root: String,
        /// Tree measure variant; all three when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        variant: Option<u8>,
    },
    /// Minimal inconsistent subsets of a knowledgebase.
    Mus { file: PathBuf },
    /// Check the basic axioms and optional properties of a measure on a random corpus.
    Properties {
        #[arg(long, value_parser = parse_measure)]
        measure: MeasureId,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[command(flatten)]
        engine: Engine,
    },
    /// Resolve a graph interactively, or serve resolution sessions over HTTP.
    Resolve {
        /// Document to resolve; with --serve it becomes a preloaded session.
        #[arg(required_unless_present = "serve")]
        file: Option<PathBuf>,
        #[arg(long, value_parser = parse_measures)]
        measures: Option<MeasureList>,
        #[arg(long)]
        serve: bool,
        #[arg(long, default_value = "127.0.0.1", requires = "serve")]
        host: String,
        #[arg(long, default_value_t = 8080, requires = "serve")]
        port: u16,
        /// Origin allowed by CORS, or `*`.
        #[arg(long, requires = "serve")]
        allow_origin: Option<String>,
        /// Directory for session snapshots, replayed on start.
        #[arg(long, requires = "serve")]
        snapshot_dir: Option<PathBuf>,
        /// Directory of static UI assets served at `/`.
        #[arg(long = "serve-ui", requires = "serve")]
        ui_dir: Option<PathBuf>,
        #[command(flatten)]
        engine: Engine,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureList(pub Vec<MeasureId>);

fn parse_measures(s: &str) -> Result<MeasureList, String> {
    let ms = MeasureId::parse_list(s).map_err(|e| e.to_string())?;
    if ms.is_empty() {
        return Err("no measures given".into());
    }
    Ok(MeasureList(ms))
}

fn parse_measure(s: &str) -> Result<MeasureId, String> {
    s.parse().map_err(|e: argmeter::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<SemanticsKind, String> {
    s.parse()
}

fn parse_document_format(s: &str) -> Result<DocumentFormat, String> {
    s.parse()
}
