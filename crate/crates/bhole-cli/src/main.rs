//! `bhole` — compute invariants, find bipartite holes, solve Hamilton
//! problems, generate graph families, and run verification sweeps.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bhole::graph6::{from_graph6, parse_corpus, to_graph6};
use bhole::hamilton::{
    find_hamilton_cycle, find_hamilton_path, is_hamiltonian_connected, is_traceable,
};
use bhole::invariants::{coverage_profile, find_hole, hole_number, kappa, min_degree, sigma2};
use bhole::theorems::{verify_corpus, CorpusSource, TheoremId, VerifyOptions};
use bhole::{generate, Graph};

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "bhole", version, about = "bipartite-hole-number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; only JSON is a stable surface
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// RNG seed; recorded in every report
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for verification sweeps
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants of one graph: n, e, delta, sigma2, kappa, alpha_tilde
    Invariants { graph6: String },
    /// Bipartite holes: a specific (s,t) witness, or the coverage profile
    Holes {
        graph6: String,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
    },
    /// Hamilton cycle / fixed-endpoint path / hamiltonian-connectedness / traceability
    Hamilton {
        graph6: String,
        #[arg(value_enum)]
        mode: HamiltonMode,
        /// Path start vertex (path mode)
        u: Option<usize>,
        /// Path end vertex (path mode)
        v: Option<usize>,
    },
    /// Emit one graph6 line for a named family
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Sweep a corpus checking theorem hypotheses against exact conclusions
    Verify {
        /// All labeled graphs on lo..hi vertices, as "lo..hi"
        #[arg(long, conflicts_with = "corpus")]
        enumerate: Option<String>,
        /// graph6 file, one graph per line; "-" reads stdin
        #[arg(long)]
        corpus: Option<String>,
        /// Comma-separated theorem ids; default: all
        #[arg(long, value_delimiter = ',')]
        theorem: Vec<String>,
        /// Also solve conclusions where the hypothesis fails
        #[arg(long)]
        survey: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum HamiltonMode {
    Cycle,
    Path,
    Connected,
    Traceable,
}

#[derive(Subcommand)]
enum FamilyCmd {
    Complete {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Empty {
        #[arg(long)]
        n: usize,
    },
    Petersen,
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    Sharpness1 {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    Sharpness2 {
        #[arg(long)]
        a: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Invariants { graph6 } => cmd_invariants(cli, graph6),
        Command::Holes { graph6, s, t } => cmd_holes(cli, graph6, *s, *t),
        Command::Hamilton { graph6, mode, u, v } => cmd_hamilton(cli, graph6, *mode, *u, *v),
        Command::Generate { family } => cmd_generate(cli, family),
        Command::Verify {
            enumerate,
            corpus,
            theorem,
            survey,
        } => cmd_verify(cli, enumerate.as_deref(), corpus.as_deref(), theorem, *survey),
    }
}

/// Standard report envelope: version, seed, and a config echo.
fn envelope(cli: &Cli, command: &str, config: Value, body: Value) -> Value {
    let mut report = json!({
        "schema_version": 1,
        "tool_version": TOOL_VERSION,
        "command": command,
        "seed": cli.seed,
        "config": config,
    });
    for (k, v) in body.as_object().unwrap() {
        report[k] = v.clone();
    }
    report
}

fn emit(cli: &Cli, text: String) -> Result<(), String> {
    match &cli.output {
        Some(path) => {
            fs::write(path, text + "\n").map_err(|e| format!("writing {}: {e}", path.display()))
        }
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout(), "{text}") {
                // a closed pipe downstream is not our error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other.map_err(|e| format!("writing stdout: {e}")),
            }
        }
    }
}

fn emit_json(cli: &Cli, value: &Value) -> Result<(), String> {
    emit(cli, serde_json::to_string_pretty(value).unwrap())
}

fn parse_graph(g6: &str) -> Result<Graph, String> {
    from_graph6(g6.trim()).map_err(|e| e.to_string())
}

fn cmd_invariants(cli: &Cli, g6: &str) -> Result<ExitCode, String> {
    let g = parse_graph(g6)?;
    let n = g.order();
    let (alpha, blocking, reason) = if n >= 2 {
        let cert = hole_number(&g).map_err(|e| e.to_string())?;
        (
            json!(cert.value),
            json!([cert.blocking_pair.0, cert.blocking_pair.1]),
            Value::Null,
        )
    } else {
        (
            Value::Null,
            Value::Null,
            json!("alpha_tilde is defined for graphs with at least 2 vertices"),
        )
    };
    let body = json!({
        "graph6": to_graph6(&g),
        "n": n,
        "e": g.size(),
        "delta": min_degree(&g).map_err(|e| e.to_string())?,
        "sigma2": sigma2(&g),
        "kappa": kappa(&g).map_err(|e| e.to_string())?,
        "alpha_tilde": alpha,
        "blocking_pair": blocking,
        "reason": reason,
    });
    match cli.format {
        Format::Json => {
            let report = envelope(cli, "invariants", json!({ "graph6": g6 }), body);
            emit_json(cli, &report)?;
        }
        Format::Text => {
            let mut lines = vec![format!("n: {n}"), format!("e: {}", g.size())];
            lines.push(format!("delta: {}", min_degree(&g).map_err(|e| e.to_string())?));
            lines.push(format!("sigma2: {}", sigma2(&g)));
            lines.push(format!("kappa: {}", kappa(&g).map_err(|e| e.to_string())?));
            match (&alpha, &blocking) {
                (Value::Number(a), Value::Array(bp)) => {
                    lines.push(format!("alpha_tilde: {a}"));
                    lines.push(format!("blocking_pair: ({}, {})", bp[0], bp[1]));
                }
                _ => lines.push("alpha_tilde: undefined (n < 2)".into()),
            }
            emit(cli, lines.join("\n"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_holes(
    cli: &Cli,
    g6: &str,
    s: Option<usize>,
    t: Option<usize>,
) -> Result<ExitCode, String> {
    let g = parse_graph(g6)?;
    let body = match (s, t) {
        (Some(s), Some(t)) => {
            let witness = find_hole(&g, s, t);
            json!({
                "graph6": to_graph6(&g),
                "s": s,
                "t": t,
                "exists": witness.is_some(),
                "witness": witness,
            })
        }
        _ => {
            let profile = coverage_profile(&g);
            let (alpha, blocking) = if g.order() >= 2 {
                let cert = hole_number(&g).map_err(|e| e.to_string())?;
                (
                    json!(cert.value),
                    json!([cert.blocking_pair.0, cert.blocking_pair.1]),
                )
            } else {
                (Value::Null, Value::Null)
            };
            json!({
                "graph6": to_graph6(&g),
                "profile": (0..=g.order()).map(|s| profile.f(s).unwrap()).collect::<Vec<_>>(),
                "alpha_tilde": alpha,
                "blocking_pair": blocking,
            })
        }
    };
    match cli.format {
        Format::Json => {
            let config = json!({ "graph6": g6, "s": s, "t": t });
            emit_json(cli, &envelope(cli, "holes", config, body))?;
        }
        Format::Text => {
            let mut lines = Vec::new();
            for (k, v) in body.as_object().unwrap() {
                lines.push(format!("{k}: {v}"));
            }
            emit(cli, lines.join("\n"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hamilton(
    cli: &Cli,
    g6: &str,
    mode: HamiltonMode,
    u: Option<usize>,
    v: Option<usize>,
) -> Result<ExitCode, String> {
    let g = parse_graph(g6)?;
    let seq_string = |seq: &bhole::HamiltonSequence| {
        seq.vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let (mode_name, body, text) = match mode {
        HamiltonMode::Cycle => {
            let found = find_hamilton_cycle(&g);
            let text = found.as_ref().map_or("none".to_string(), &seq_string);
            (
                "cycle",
                json!({
                    "witness": found.as_ref().map(&seq_string),
                    "refusal": found.is_none().then_some("no such cycle"),
                }),
                text,
            )
        }
        HamiltonMode::Path => {
            let (u, v) = match (u, v) {
                (Some(u), Some(v)) => (u, v),
                _ => return Err("path mode needs two vertex ids: hamilton <g6> path <u> <v>".into()),
            };
            let found = find_hamilton_path(&g, u, v).map_err(|e| e.to_string())?;
            let text = found.as_ref().map_or("none".to_string(), &seq_string);
            (
                "path",
                json!({
                    "u": u,
                    "v": v,
                    "witness": found.as_ref().map(&seq_string),
                    "refusal": found.is_none().then_some("no such path"),
                }),
                text,
            )
        }
        HamiltonMode::Connected => {
            let (yes, failing) = is_hamiltonian_connected(&g).map_err(|e| e.to_string())?;
            (
                "connected",
                json!({
                    "hamiltonian_connected": yes,
                    "failing_pair": failing.map(|(a, b)| [a, b]),
                }),
                format!("hamiltonian-connected: {yes}"),
            )
        }
        HamiltonMode::Traceable => {
            let (yes, witness) = is_traceable(&g);
            (
                "traceable",
                json!({
                    "traceable": yes,
                    "witness": witness.as_ref().map(&seq_string),
                }),
                format!("traceable: {yes}"),
            )
        }
    };
    match cli.format {
        Format::Json => {
            let config = json!({ "graph6": g6, "mode": mode_name, "u": u, "v": v });
            emit_json(cli, &envelope(cli, "hamilton", config, body))?;
        }
        Format::Text => emit(cli, text)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(cli: &Cli, family: &FamilyCmd) -> Result<ExitCode, String> {
    let g = match *family {
        FamilyCmd::Complete { n } => generate::complete(n),
        FamilyCmd::Cycle { n } => generate::cycle(n),
        FamilyCmd::Path { n } => generate::path(n),
        FamilyCmd::Empty { n } => Graph::empty(n),
        FamilyCmd::Petersen => Ok(generate::petersen()),
        FamilyCmd::Gnp { n, p } => {
            let seed = cli
                .seed
                .ok_or_else(|| "gnp requires an explicit --seed".to_string())?;
            generate::gnp(n, p, seed)
        }
        FamilyCmd::Sharpness1 { a, b } => generate::sharpness1(a, b),
        FamilyCmd::Sharpness2 { a } => generate::sharpness2(a),
    }
    .map_err(|e| e.to_string())?;
    emit(cli, to_graph6(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    cli: &Cli,
    enumerate: Option<&str>,
    corpus: Option<&str>,
    theorem: &[String],
    survey: bool,
) -> Result<ExitCode, String> {
    let theorems = if theorem.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        theorem
            .iter()
            .map(|s| TheoremId::parse(s).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?
    };
    let (source, description) = match (enumerate, corpus) {
        (Some(range), None) => {
            let (lo, hi) = range
                .split_once("..")
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .ok_or_else(|| format!("bad --enumerate range \"{range}\", expected lo..hi"))?;
            if lo < 1 || lo > hi || hi > bhole::theorems::MAX_ENUMERATION_ORDER {
                return Err(format!(
                    "--enumerate range must satisfy 1 <= lo <= hi <= {}",
                    bhole::theorems::MAX_ENUMERATION_ORDER
                ));
            }
            (
                CorpusSource::Enumerate { lo, hi },
                format!("all labeled graphs n in [{lo}, {hi}]"),
            )
        }
        (None, Some(path)) => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| format!("reading stdin: {e}"))?;
                buf
            } else {
                fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
            };
            let (graphs, bad) = parse_corpus(&text);
            if let Some((line, err)) = bad.first() {
                return Err(format!("corpus line {line}: {err}"));
            }
            let graphs = graphs
                .into_iter()
                .map(|(_, g)| (to_graph6(&g), g))
                .collect();
            (
                CorpusSource::Graphs {
                    graphs,
                    lines_skipped: 0,
                },
                format!("corpus {path}"),
            )
        }
        _ => return Err("verify needs exactly one of --enumerate or --corpus".into()),
    };
    let report = verify_corpus(
        &source,
        &VerifyOptions {
            theorems,
            workers: cli.workers as usize,
            survey,
            seed: cli.seed.unwrap_or(0),
            description,
        },
    );
    match cli.format {
        Format::Json => emit(cli, serde_json::to_string_pretty(&report).unwrap())?,
        Format::Text => {
            let mut lines = vec![
                format!("corpus: {}", report.corpus),
                format!("graphs scanned: {}", report.graphs_scanned),
            ];
            for (name, stats) in &report.theorems {
                lines.push(format!(
                    "{name}: hypothesis {} / checked {} / counterexamples {}",
                    stats.hypothesis_true, stats.conclusion_checked, stats.counterexamples
                ));
            }
            for ce in &report.counterexamples {
                lines.push(format!("counterexample ({}): {}", ce.theorem, ce.report.graph6));
            }
            emit(cli, lines.join("\n"))?;
        }
    }
    Ok(if report.all_consistent() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
