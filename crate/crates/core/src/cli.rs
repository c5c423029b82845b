//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 inconclusive or failed result, 2 input error.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{goodness_failure_threshold, stahl_forest, turan_coloring, turan_lower_bound, ForestSpec};
use crate::catalog::{load_catalog, resolve_graph};
use crate::coloring::export_witness;
use crate::error::{Error, Result};
use crate::goodness::{goodness, render_markdown, PendantChain};
use crate::graph::{named_graph, parse_graph6, Girth, Graph};
use crate::sampler::{construct_witness, verify_superlinearity_witness};
use crate::search::{exists_good_coloring, ramsey_number, SearchOptions, SearchOutcome};
use crate::tree::embed_tree;

const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Parser, Debug)]
#[command(name = "ramsey-good", version, about = "Small Ramsey numbers R(H, K_p) and p-goodness")]
pub struct Cli {
    /// Omit the elapsed_ms field so output is byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether K_n has a coloring with no red H and no blue K_p.
    Search(SearchArgs),
    /// Compute R(H, K_p) by search.
    Ramsey(RamseyArgs),
    /// Goodness table for a pendant chain, from a catalog.
    Goodness(GoodnessArgs),
    /// Greedily embed a tree with a fixed root image.
    Embed(EmbedArgs),
    /// Turán lower bound and its coloring.
    Turan(TuranArgs),
    /// R(F, K_p) for a forest given by component-order counts.
    Stahl(StahlArgs),
    /// Natural log of the p beyond which girth-ell graphs on h vertices are not p-good.
    Threshold(ThresholdArgs),
    /// Sample a high-girth, small-independence witness graph.
    Sample(SampleArgs),
    /// Check girth > ell and independence number < p.
    VerifyWitness(VerifyArgs),
    /// Validate a catalog file (or the shipped one).
    CatalogCheck(CatalogArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    /// Graph name (K3, C4, H1, ...) or graph6.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Write the witness coloring here when one is found.
    #[arg(long)]
    pub witness_file: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct RamseyArgs {
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Write the coloring certifying the lower end here.
    #[arg(long)]
    pub witness_file: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct GoodnessArgs {
    /// One or more graphs, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub graph: Vec<String>,
    /// Catalog JSON; defaults to the shipped table.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    pub pmax: u64,
    /// Print a markdown table instead of JSON.
    #[arg(long)]
    pub markdown: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct EmbedArgs {
    #[arg(long)]
    pub tree: String,
    #[arg(long)]
    pub root: usize,
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub target: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct TuranArgs {
    #[arg(long)]
    pub h: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub emit_witness: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct StahlArgs {
    /// Component counts, e.g. k1=2,k3=1.
    #[arg(long)]
    pub forest: String,
    #[arg(long)]
    pub p: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub h: u64,
    /// Girth of H, or "infinite" for a tree.
    #[arg(long)]
    pub girth: String,
}

#[derive(Args, Debug, Serialize)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub girth: usize,
    /// Defaults to girth^-2.
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub seed: u64,
    /// Write the witness graph as graph6 here.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub girth: usize,
    #[arg(long)]
    pub p: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct CatalogArgs {
    #[arg(long)]
    pub catalog: Option<PathBuf>,
}

#[derive(Serialize, Debug)]
pub struct RunResult {
    pub command: String,
    pub inputs: Value,
    pub output: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Accepts a graph name, `g6:<graph6>` or bare graph6.
pub fn parse_graph_arg(s: &str) -> Result<Graph> {
    if s.starts_with("g6:") {
        return resolve_graph(s);
    }
    match named_graph(s) {
        Err(Error::UnknownGraph(_)) => parse_graph6(s),
        other => other,
    }
}

struct Done {
    output: Value,
    nodes: Option<u64>,
    ok: bool,
    text: Option<String>,
}

impl Done {
    fn ok(output: Value) -> Done {
        Done { output, nodes: None, ok: true, text: None }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("outputs serialize")
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn run(cmd: &Command) -> Result<Done> {
    match cmd {
        Command::Search(a) => {
            let h = parse_graph_arg(&a.graph)?;
            let opts = SearchOptions::from_env(a.budget);
            match exists_good_coloring(a.n, &h, a.p, &opts) {
                Ok(v) => {
                    let (outcome, witness) = match &v.outcome {
                        SearchOutcome::Exhausted => ("exhausted", None),
                        SearchOutcome::WitnessFound(c) => ("witness-found", Some(export_witness(c)?)),
                    };
                    if let (Some(path), Some(w)) = (&a.witness_file, &witness) {
                        write_file(path, w)?;
                    }
                    let output = json!({ "outcome": outcome, "witness": witness, "witness_file": a.witness_file });
                    Ok(Done { output, nodes: Some(v.nodes), ok: true, text: None })
                }
                Err(Error::Inconclusive { budget }) => Ok(Done {
                    output: json!({ "outcome": "inconclusive" }),
                    nodes: Some(budget),
                    ok: false,
                    text: None,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Ramsey(a) => {
            let h = parse_graph_arg(&a.graph)?;
            let r = ramsey_number(&h, a.p, &SearchOptions::from_env(a.budget))?;
            let witness = export_witness(&r.lower_witness).ok();
            if let (Some(path), Some(w)) = (&a.witness_file, &witness) {
                write_file(path, w)?;
            }
            let output = json!({
                "value": r.value.value,
                "provenance": r.value.provenance,
                "lower_witness": witness,
                "witness_file": a.witness_file,
            });
            Ok(Done { output, nodes: Some(r.nodes), ok: r.value.is_exact(), text: None })
        }
        Command::Goodness(a) => {
            if a.graph.is_empty() {
                return Err(Error::InvalidInput("--graph is required".into()));
            }
            let catalog = load_catalog(a.catalog.as_deref())?;
            let reports = a
                .graph
                .iter()
                .map(|g| goodness(&PendantChain::from_graph(&parse_graph_arg(g)?)?, &catalog, a.pmax))
                .collect::<Result<Vec<_>>>()?;
            let text = a.markdown.then(|| render_markdown(&reports));
            let output = if reports.len() == 1 { to_value(&reports[0]) } else { to_value(&reports) };
            Ok(Done { output, nodes: None, ok: true, text })
        }
        Command::Embed(a) => {
            let t = parse_graph_arg(&a.tree)?;
            let g = parse_graph_arg(&a.graph)?;
            match embed_tree(&t, a.root, &g, a.target)? {
                Some(e) => Ok(Done::ok(json!({ "map": e.map }))),
                None => Ok(Done { output: json!("FAILURE"), nodes: None, ok: false, text: None }),
            }
        }
        Command::Turan(a) => {
            let c = turan_coloring(a.h, a.p)?;
            let witness = export_witness(&c)?;
            if let Some(path) = &a.emit_witness {
                write_file(path, &witness)?;
            }
            Ok(Done::ok(json!({
                "bound": turan_lower_bound(a.h as u64, a.p as u64),
                "order": c.order(),
                "witness": witness,
            })))
        }
        Command::Stahl(a) => {
            let f: ForestSpec = a.forest.parse()?;
            if a.p < 2 {
                return Err(Error::InvalidInput("p must be at least 2".into()));
            }
            Ok(Done::ok(json!({ "forest": f.to_string(), "value": stahl_forest(&f, a.p) })))
        }
        Command::Threshold(a) => {
            let girth = match a.girth.as_str() {
                "infinite" | "inf" => Girth::Infinite,
                s => Girth::Finite(s.parse().map_err(|_| Error::InvalidInput(format!("bad girth `{s}`")))?),
            };
            Ok(Done::ok(to_value(&goodness_failure_threshold(a.h, girth)?)))
        }
        Command::Sample(a) => {
            let w = construct_witness(a.n, a.girth, a.lambda, a.seed)?;
            if let Some(path) = &a.emit {
                write_file(path, &w.graph.to_graph6())?;
            }
            Ok(Done { output: to_value(&w), nodes: None, ok: w.certified, text: None })
        }
        Command::VerifyWitness(a) => {
            let g = parse_graph_arg(&a.graph)?;
            let valid = verify_superlinearity_witness(&g, a.girth, a.p)?;
            Ok(Done {
                output: json!({ "valid": valid, "girth": g.girth(), "independence": g.independence_number()? }),
                nodes: None,
                ok: valid,
                text: None,
            })
        }
        Command::CatalogCheck(a) => {
            let cat = load_catalog(a.catalog.as_deref())?;
            Ok(Done::ok(json!({ "entries": cat.len(), "warnings": cat.warnings() })))
        }
    }
}

fn command_name(cmd: &Command) -> (&'static str, Value) {
    match cmd {
        Command::Search(a) => ("search", to_value(a)),
        Command::Ramsey(a) => ("ramsey", to_value(a)),
        Command::Goodness(a) => ("goodness", to_value(a)),
        Command::Embed(a) => ("embed", to_value(a)),
        Command::Turan(a) => ("turan", to_value(a)),
        Command::Stahl(a) => ("stahl", to_value(a)),
        Command::Threshold(a) => ("threshold", to_value(a)),
        Command::Sample(a) => ("sample", to_value(a)),
        Command::VerifyWitness(a) => ("verify-witness", to_value(a)),
        Command::CatalogCheck(a) => ("catalog-check", to_value(a)),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutcome { stdout: text, stderr: String::new(), code }
            } else {
                CliOutcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let (command, inputs) = command_name(&cli.command);
    let start = Instant::now();
    match run(&cli.command) {
        Ok(done) => {
            let elapsed_ms = (!cli.no_timing).then(|| start.elapsed().as_secs_f64() * 1e3);
            let stdout = match done.text {
                Some(t) => t,
                None => {
                    let result = RunResult { command: command.into(), inputs, output: done.output, nodes: done.nodes, elapsed_ms };
                    serde_json::to_string_pretty(&result).expect("run result serializes") + "\n"
                }
            };
            CliOutcome { stdout, stderr: String::new(), code: if done.ok { 0 } else { 1 } }
        }
        Err(e) => CliOutcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Value, i32) {
        let mut argv = vec!["ramsey-good", "--no-timing"];
        argv.extend_from_slice(args);
        let out = dispatch(argv);
        let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
        (v, out.code)
    }

    #[test]
    fn ramsey_k3() {
        let (v, code) = run_args(&["ramsey", "--graph", "K3", "--p", "3"]);
        assert_eq!(code, 0);
        assert_eq!(v["output"]["value"], json!(6));
        assert_eq!(v["output"]["provenance"], json!("SearchProved"));
        assert_eq!(v["command"], json!("ramsey"));
        assert!(v.get("elapsed_ms").is_none());
    }

    #[test]
    fn goodness_h1() {
        let (v, code) = run_args(&["goodness", "--graph", "H1", "--pmax", "6"]);
        assert_eq!(code, 0);
        assert_eq!(v["output"]["goodness"], json!(4));
        let out = dispatch(["ramsey-good", "goodness", "--graph", "H1,H2", "--pmax", "9", "--markdown"]);
        assert!(out.stdout.contains("| goodness | 4 | 8 |"), "{}", out.stdout);
    }

    #[test]
    fn embed_prints_map_or_failure() {
        let (v, code) = run_args(&["embed", "--tree", "Bg", "--root", "0", "--graph", "Bw", "--target", "2"]);
        assert_eq!(code, 0);
        assert_eq!(v["output"]["map"][0], json!(2));
        let (v, code) = run_args(&["embed", "--tree", "S4", "--root", "0", "--graph", "K4", "--target", "0"]);
        assert_eq!((v["output"].clone(), code), (json!("FAILURE"), 1));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(dispatch(["ramsey-good", "frobnicate"]).code, 2);
        assert_eq!(dispatch(["ramsey-good", "ramsey", "--graph", "K3"]).code, 2);
        assert_eq!(dispatch(["ramsey-good", "ramsey", "--graph", "Q7", "--p", "3"]).code, 2);
        assert_eq!(run_args(&["search", "--graph", "K4", "--p", "4", "--n", "17", "--budget", "1000"]).1, 1);
        assert_eq!(run_args(&["search", "--graph", "K3", "--p", "3", "--n", "5"]).1, 0);
        assert_eq!(run_args(&["threshold", "--h", "4", "--girth", "infinite"]).1, 2);
        assert_eq!(run_args(&["verify-witness", "--graph", "Petersen", "--girth", "4", "--p", "4"]).1, 1);
        assert_eq!(run_args(&["verify-witness", "--graph", "Petersen", "--girth", "4", "--p", "5"]).1, 0);
    }

    #[test]
    fn small_commands() {
        let (v, _) = run_args(&["turan", "--h", "4", "--p", "3"]);
        assert_eq!(v["output"]["bound"], json!(7));
        let (v, _) = run_args(&["stahl", "--forest", "k2=2", "--p", "3"]);
        assert_eq!(v["output"]["value"], json!(5));
        let (v, _) = run_args(&["threshold", "--h", "4", "--girth", "3"]);
        assert!((v["output"]["ln_value"].as_f64().unwrap() - (3888.0 + 11664f64.ln())).abs() < 1e-9);
        let (v, code) = run_args(&["catalog-check"]);
        assert_eq!(code, 0);
        assert_eq!(v["output"]["warnings"].as_array().unwrap().len(), 9);
        let (a, _) = run_args(&["sample", "--n", "30", "--girth", "4", "--seed", "5"]);
        let (b, _) = run_args(&["sample", "--n", "30", "--girth", "4", "--seed", "5"]);
        assert_eq!(a, b);
    }
}
