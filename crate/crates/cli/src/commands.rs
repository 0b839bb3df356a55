use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use argmeter::instantiated::measure_bound;
use argmeter::io::{parse_document, parse_kb, Document, DocumentFormat, MeasureReport, Timing};
use argmeter::logic::{i_m, i_sharp, min_inconsistent_subsets_with};
use argmeter::measure::measure_graph_with;
use argmeter::properties::{check_basic_axioms, check_optional_property, property_corpus, CheckOptions, CheckReport, Property};
use argmeter::semantics::{extensions_with, labellings_with};
use argmeter::tree::{build_argument_tree_with, i_arg};
use argmeter::{Config, Execution, Formula, KnowledgeBase, MeasureId};
use serde_json::{json, Value};

use crate::args::{Command, Engine, Form, OutputFormat};
use crate::{resolve, CliError, CliResult};

pub fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Measure { file, measures, format, input, timing, engine } => {
            let doc = load_document(&file, input)?;
            let measures = measures.map(|l| l.0).unwrap_or_else(|| default_measures(&doc));
            let report = measure(&doc, &file, &measures, timing, &config(&engine))?;
            print_report(&report, format);
            Ok(())
        }
        Command::Semantics { file, kind, form, engine } => {
            let doc = load_document(&file, None)?;
            let cfg = config(&engine);
            let out = match form {
                Form::Extensions => serde_json::to_value(extensions_with(doc.graph(), kind, &cfg)?),
                Form::Labellings => serde_json::to_value(labellings_with(doc.graph(), kind, &cfg)?),
            }
            .expect("semantics output serializes");
            print_json(&out);
            Ok(())
        }
        Command::Dmeasure { file, measures, format } => {
            let doc = load_document(&file, Some(DocumentFormat::Inst))?;
            let measures = measures.map(|l| l.0).unwrap_or_else(|| MeasureId::INSTANTIATED.to_vec());
            if let Some(m) = measures.iter().find(|m| m.is_abstract()) {
                return Err(CliError::usage(format!("`{m}` is not a logic-based measure; use `measure`")));
            }
            let report = measure(&doc, &file, &measures, false, &Config::default())?;
            print_report(&report, format);
            Ok(())
        }
        Command::Argtree { file, root, variant } => argtree(&file, &root, variant),
        Command::Mus { file } => {
            let kb = load_kb(&file)?;
            let muses = min_inconsistent_subsets_with(&kb, &Config::default())?;
            let list: Vec<Vec<String>> = muses.iter().map(formula_strings).collect();
            print_json(&json!({
                "muses": list,
                "I_M": i_m(&kb)?.to_string(),
                "I_#": i_sharp(&kb)?.to_string(),
            }));
            Ok(())
        }
        Command::Properties { measure, seed, trials, engine } => properties(measure, seed, trials, &engine),
        Command::Resolve { file, measures, serve, host, port, allow_origin, snapshot_dir, ui_dir, engine } => {
            let measures = measures.map(|l| l.0).unwrap_or_default();
            let cfg = config(&engine);
            if serve {
                let service = argmeter_service::ServiceConfig { host, port, allow_origin, snapshot_dir, ui_dir, engine: cfg };
                let preload = match &file {
                    Some(path) => Some((read(path)?, DocumentFormat::from_path(path))),
                    None => None,
                };
                resolve::serve(service, preload, measures)
            } else {
                let path = file.expect("clap enforces a file without --serve");
                let doc = load_document(&path, None)?;
                let measures = if measures.is_empty() { vec![MeasureId::In] } else { measures };
                resolve::interactive(doc, measures, cfg)
            }
        }
    }
}

fn config(engine: &Engine) -> Config {
    if engine.sequential {
        Config::default().with_exec(Execution::Sequential)
    } else {
        Config::default()
    }
}

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Reads a graph or instantiated document; the extension decides the format unless `forced`.
pub fn load_document(path: &Path, forced: Option<DocumentFormat>) -> CliResult<Document> {
    let text = read(path)?;
    let format = forced.or_else(|| DocumentFormat::from_path(path));
    Ok(parse_document(&text, format)?)
}

fn load_kb(path: &Path) -> CliResult<KnowledgeBase> {
    Ok(parse_kb(&read(path)?)?)
}

fn default_measures(doc: &Document) -> Vec<MeasureId> {
    match doc {
        Document::Abstract(_) => MeasureId::ALL.into_iter().filter(|m| m.is_abstract()).collect(),
        Document::Instantiated(_) => MeasureId::ALL.to_vec(),
    }
}

fn measure(doc: &Document, path: &Path, measures: &[MeasureId], timing: bool, cfg: &Config) -> CliResult<MeasureReport> {
    let mut report = MeasureReport::new(path.display().to_string());
    let mut t = Timing::default();
    let start = Instant::now();
    for &m in measures {
        let began = Instant::now();
        let v = match doc {
            Document::Abstract(g) => measure_graph_with(g, m, cfg)?,
            Document::Instantiated(ig) => measure_bound(ig.graph(), ig.binding(), m, cfg)?,
        };
        t.per_measure_us.insert(m.code().to_string(), began.elapsed().as_micros());
        report.insert(m, v);
    }
    t.total_us = start.elapsed().as_micros();
    if timing {
        report.timing = Some(t);
    }
    Ok(report)
}

/// Writes to stdout, ignoring a closed pipe.
pub fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_report(report: &MeasureReport, format: OutputFormat) {
    match format {
        OutputFormat::Json => emit(&format!("{}\n", report.to_json())),
        OutputFormat::Table => emit(&report.to_table()),
    }
}

pub fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json value serializes")));
}

fn formula_strings(kb: &KnowledgeBase) -> Vec<String> {
    kb.iter().map(ToString::to_string).collect()
}

fn argtree(file: &Path, root: &str, variant: Option<u8>) -> CliResult {
    let kb = load_kb(file)?;
    let root: Formula = root.parse().map_err(|e: argmeter::Error| CliError::usage(format!("--root: {e}")))?;
    let tree = build_argument_tree_with(&kb, &root, &Config::default())?;
    let nodes: Vec<Value> = tree
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| {
            json!({
                "index": i,
                "parent": n.parent,
                "depth": n.depth,
                "support": formula_strings(n.argument.support()),
                "claim": n.argument.claim().to_string(),
            })
        })
        .collect();
    let variants: Vec<u8> = variant.map(|v| vec![v]).unwrap_or_else(|| vec![1, 2, 3]);
    let mut values = BTreeMap::new();
    for v in variants {
        values.insert(format!("arg{v}"), i_arg(&tree, v)?.to_string());
    }
    print_json(&json!({
        "root": root.to_string(),
        "root_undercuts": tree.root_undercuts(),
        "height": tree.height(),
        "nodes": nodes,
        "values": values,
    }));
    Ok(())
}

fn properties(m: MeasureId, seed: u64, trials: usize, engine: &Engine) -> CliResult {
    if !m.is_abstract() {
        return Err(CliError::usage(format!("`{m}` is not a graph-based measure")));
    }
    let opts = CheckOptions { seed, cfg: config(engine), ..CheckOptions::default() };
    let corpus = property_corpus(seed, trials);
    let mut reports: Vec<CheckReport> = check_basic_axioms(m, &corpus, &opts)?;
    for p in Property::ALL {
        reports.push(check_optional_property(m, p, &corpus, &opts)?);
    }
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "check": r.check,
                "cases": r.cases,
                "violations": r.violations,
                "holds": r.holds(),
                "witnesses": r.witnesses,
            })
        })
        .collect();
    print_json(&json!({ "measure": m.code(), "seed": seed, "corpus": corpus.len(), "checks": rows }));
    Ok(())
}
