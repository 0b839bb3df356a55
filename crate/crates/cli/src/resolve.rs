use std::io::{BufRead, IsTerminal, Write};

use argmeter::io::{Document, DocumentFormat};
use argmeter::value::fraction_string;
use argmeter::{Answer, ArgumentId, CommitmentState, Config, MeasureId};
use argmeter_service::{AppState, ServiceConfig};
use serde_json::json;

use crate::commands::print_json;
use crate::{CliError, CliResult};

const HELP: &str = "\
commands:
  show                 labelling, reduced graph and measure values
  rec [measure]        recommended query with the what-if table
  in <arg>             commit an argument in (its neighbours go out)
  out <arg>            commit an argument out
  undo                 take back the last answer
  transcript           measure values after each answer, as JSON
  help                 this text
  quit                 leave";

/// Line-oriented session on stdin; prompts only when stdin is a terminal.
pub fn interactive(doc: Document, measures: Vec<MeasureId>, cfg: Config) -> CliResult {
    let mut state = doc.into_state();
    for &m in &measures {
        state.measure_with(m, &cfg)?;
    }
    let stdin = std::io::stdin();
    let prompt = stdin.is_terminal();
    let mut out = std::io::stdout();
    if prompt {
        println!("{HELP}");
    }
    show(&state, &measures, &cfg);
    let mut lines = stdin.lock().lines();
    loop {
        if prompt {
            print!("> ");
            let _ = out.flush();
        }
        let Some(line) = lines.next() else { break };
        let line = line.map_err(|e| CliError::io(std::path::Path::new("<stdin>"), e))?;
        let words: Vec<&str> = line.split_whitespace().collect();
        let result = match words.as_slice() {
            [] => Ok(()),
            ["quit" | "exit" | "q"] => break,
            ["help" | "?"] => {
                println!("{HELP}");
                Ok(())
            }
            ["show" | "s"] => {
                show(&state, &measures, &cfg);
                Ok(())
            }
            ["rec" | "r"] => recommend(&state, measures[0], &cfg),
            ["rec" | "r", m] => m.parse().map_err(CliError::from).and_then(|m| recommend(&state, m, &cfg)),
            [a @ ("in" | "out"), arg] => step(&state, arg, if *a == "in" { Answer::In } else { Answer::Out }).map(|next| {
                state = next;
                show(&state, &measures, &cfg);
            }),
            ["undo" | "u"] => state.undo().map_err(CliError::from).map(|prev| {
                state = prev;
                show(&state, &measures, &cfg);
            }),
            ["transcript"] => transcript(&state, &measures, &cfg),
            _ => Err(CliError::usage(format!("unrecognised command `{line}` (try help)"))),
        };
        if let Err(e) = result {
            println!("error: {}", e.message);
        }
    }
    Ok(())
}

fn step(state: &CommitmentState, arg: &str, answer: Answer) -> CliResult<CommitmentState> {
    let q: ArgumentId = arg.parse()?;
    Ok(state.apply_answer(&q, answer)?)
}

fn show(state: &CommitmentState, measures: &[MeasureId], cfg: &Config) {
    let labels: Vec<String> = state.labelling().iter().map(|(a, l)| format!("{a}={l}")).collect();
    println!("labelling: {}", labels.join(" "));
    let reduced = state.reduced();
    let arcs: Vec<String> = reduced.arcs().iter().map(|(a, b)| format!("{a}->{b}")).collect();
    let nodes: Vec<String> = reduced.nodes().iter().map(ToString::to_string).collect();
    println!("reduced: nodes {{{}}} arcs {{{}}}", nodes.join(", "), arcs.join(", "));
    for &m in measures {
        match state.measure_with(m, cfg) {
            Ok(v) => println!("  {m} = {v} ({:.6})", v.approx()),
            Err(e) => println!("  {m}: {e}"),
        }
    }
    if state.is_committed() {
        println!("every argument is committed");
    }
}

fn recommend(state: &CommitmentState, m: MeasureId, cfg: &Config) -> CliResult {
    let rec = state.recommend_query_with(m, cfg)?;
    println!("{:<8} {:>10} {:>10} {:>10}", "query", "if in", "if out", "reduction");
    for c in &rec.candidates {
        let vin = c.value_if_in.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        println!("{:<8} {vin:>10} {:>10} {:>10}", c.argument.to_string(), c.value_if_out.to_string(), fraction_string(c.expected_reduction));
    }
    println!("recommended: {} ({m})", rec.best.argument);
    Ok(())
}

fn transcript(state: &CommitmentState, measures: &[MeasureId], cfg: &Config) -> CliResult {
    let mut replay = state.replay([])?;
    let mut rows = Vec::new();
    for (i, s) in state.history().iter().enumerate() {
        replay = replay.apply_answer(&s.query, s.answer)?;
        let values: serde_json::Map<String, serde_json::Value> = measures
            .iter()
            .map(|&m| Ok((m.code().to_string(), serde_json::to_value(replay.measure_with(m, cfg)?).expect("value serializes"))))
            .collect::<CliResult<_>>()?;
        rows.push(json!({ "step": i + 1, "query": s.query, "answer": s.answer, "measures": values }));
    }
    print_json(&json!(rows));
    Ok(())
}

/// Runs the HTTP service, optionally starting with one session on `preload`.
pub fn serve(cfg: ServiceConfig, preload: Option<(String, Option<DocumentFormat>)>, measures: Vec<MeasureId>) -> CliResult {
    let state = AppState::load(cfg.engine, cfg.snapshot_dir.clone())
        .map_err(|e| CliError { code: "io-error", message: e.to_string(), location: None, usage: false })?;
    if let Some((text, format)) = preload {
        let view = state.create_session(text, format, measures).map_err(|e| CliError {
            code: e.body.error,
            message: e.body.message,
            location: e.body.line.zip(e.body.column),
            usage: false,
        })?;
        eprintln!("preloaded session {}", view.id);
    }
    let rt = tokio::runtime::Runtime::new()
        .map_err(|e| CliError { code: "io-error", message: e.to_string(), location: None, usage: false })?;
    rt.block_on(argmeter_service::serve_state(state, cfg))
        .map_err(|e| CliError { code: "io-error", message: e.to_string(), location: None, usage: false })
}
