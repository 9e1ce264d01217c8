//! `mlt`: command-line front end for mlt-core.
//!
//! Exit codes: 0 on success, 1 when the computation answers "no" in a way the
//! caller asked about (for example a nonexistent estimator), 2 on usage, input
//! or parse errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use mlt_core::engine::{mlt_bounds, rank_report, smt_report};
use mlt_core::rigidity::pebble_game;
use mlt_core::score::{conjecture_lf_check, sme_exists, sme_solve, sme_solve_covariance, SampleData, ScoreError};
use mlt_core::splitting::{birank_check, n_core, search_splitting, splitting_bound, SplitError, SplitPlan};
use mlt_core::wmlt::wmlt_bounds;
use mlt_core::{generate_named, parse_graph, BoundsReport, Graph, Prime, RealMatrix, Settings};
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mlt", version, about = "Bounds on the maximum likelihood threshold and related graph invariants")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Root seed of every randomized computation.
    #[arg(long, global = true, env = "MLT_SEED", default_value_t = 0)]
    seed: u64,
    /// Random evaluations per generic-rank query.
    #[arg(long, global = true, default_value_t = 3, value_parser = positive)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = PrimeArg::P61)]
    prime: PrimeArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest vertex count for the exhaustive subgraph count check.
    #[arg(long, global = true, value_parser = positive)]
    subgraph_cap: Option<usize>,
    /// Largest vertex count for exact chromatic number.
    #[arg(long, global = true, value_parser = positive)]
    chromatic_cap: Option<usize>,
    /// Largest vertex count for the cyclic-ordering search.
    #[arg(long, global = true, value_parser = positive)]
    buhl_cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PrimeArg {
    P61,
    P62,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Bounds on the maximum likelihood threshold.
    Bounds { file: String },
    /// Exact rank with certificates.
    Rank { file: String },
    /// Bounds on the weak maximum likelihood threshold.
    Wmlt { file: String },
    /// Exact score matching threshold.
    Smt { file: String },
    /// The n-core and its removal order.
    Core {
        file: String,
        #[arg(long)]
        n: usize,
    },
    /// (k, l) pebble game.
    Pebble {
        file: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Birank membership of the edges between two vertex sets.
    Birank {
        file: String,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        left: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        right: Vec<usize>,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
    },
    /// Verify a splitting plan, or search for one when no parts are given.
    Split {
        file: String,
        /// One comma-separated vertex list per part.
        #[arg(long, num_args = 1.., requires = "targets")]
        parts: Vec<String>,
        /// Comma-separated rank target per part.
        #[arg(long, value_delimiter = ',', requires = "parts")]
        targets: Vec<usize>,
    },
    /// Score matching estimator.
    Sme {
        #[command(subcommand)]
        action: SmeAction,
    },
    /// Count condition against the score matching threshold at n.
    ConjectureLf {
        file: String,
        #[arg(long)]
        n: usize,
    },
    /// Print a named graph.
    Gen {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Subcommand)]
enum SmeAction {
    /// Exit 0 if the estimator exists, 1 otherwise.
    Exists(SmeInput),
    /// Print the estimated concentration matrix.
    Solve(SmeInput),
}

#[derive(Args)]
struct SmeInput {
    file: String,
    /// CSV of observations, or `random:N` for N standard normal rows.
    #[arg(long, conflicts_with = "cov", required_unless_present = "cov")]
    data: Option<String>,
    /// CSV covariance matrix.
    #[arg(long)]
    cov: Option<String>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn domain(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

impl Config {
    fn settings(&self) -> Settings {
        let mut s = Settings::with_seed(self.seed);
        s.trials = self.trials;
        s.prime = match self.prime {
            PrimeArg::P61 => Prime::P61,
            PrimeArg::P62 => Prime::P62,
        };
        if let Some(c) = self.subgraph_cap {
            s.subgraph_cap = c;
        }
        if let Some(c) = self.chromatic_cap {
            s.chromatic_cap = c;
        }
        if let Some(c) = self.buhl_cap {
            s.buhl_cap = c;
        }
        s
    }
}

fn read_text(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    let name = if path == "-" { "stdin" } else { path };
    parse_graph(&text).map_err(|e| usage(format!("{name}: {e}")))
}

fn parse_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad vertex list {s:?}"))))
        .collect()
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(","))
}

fn report_output(report: &BoundsReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn plan_text(plan: &SplitPlan) -> String {
    let bound = plan.bound().map_or("none".to_string(), |b| b.to_string());
    let mut out = format!("split bound={bound} targets={}\n", list(&plan.targets));
    for c in &plan.part_checks {
        out += &format!("split.part index={} target={} passes={} vertices={}\n", c.part, c.target, c.passes, list(&plan.parts[c.part]));
    }
    for c in &plan.pair_checks {
        let seeds = c.generic.as_ref().map_or(String::new(), |g| format!(" seeds={}", list_u64(&g.seeds)));
        out += &format!(
            "split.pair left={} right={} targets=({},{}) crossing_edges={} member={} method={}{seeds}\n",
            c.left,
            c.right,
            c.targets.0,
            c.targets.1,
            c.crossing_edges,
            c.member,
            serde_json::to_value(c.method).expect("serializable").as_str().unwrap_or_default()
        );
    }
    out
}

fn list_u64(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(","))
}

fn matrix_rows(k: &RealMatrix) -> Vec<Vec<f64>> {
    k.to_rows()
}

fn load_sme_input(input: &SmeInput, g: &Graph, settings: &Settings) -> Result<SmeSource, Failure> {
    let m = g.vertex_count();
    if let Some(cov) = &input.cov {
        let text = read_text(cov)?;
        let values = SampleData::from_csv(&text).map_err(|e| usage(format!("{cov}: {e}")))?;
        return Ok(SmeSource::Covariance(values.values().clone()));
    }
    let source = input.data.as_deref().expect("clap requires --data or --cov");
    if let Some(n) = source.strip_prefix("random:") {
        let n: usize = n.parse().map_err(|_| usage(format!("bad sample size in {source:?}")))?;
        return Ok(SmeSource::Data(SampleData::random_normal(n, m, &settings.rng().child(0x0073_6d65))));
    }
    let text = read_text(source)?;
    SampleData::from_csv(&text).map(SmeSource::Data).map_err(|e| usage(format!("{source}: {e}")))
}

enum SmeSource {
    Data(SampleData),
    Covariance(RealMatrix),
}

fn score_failure(e: ScoreError) -> Failure {
    match e {
        ScoreError::Nonexistent => domain("SME does not exist"),
        ScoreError::Residual { .. } | ScoreError::Linalg(_) => domain(e.to_string()),
        _ => usage(e.to_string()),
    }
}

/// Output plus the exit code to report after printing it.
type Outcome = (String, u8);

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let settings = cli.config.settings();
    let format = cli.config.format;
    let json = format == Format::Json;
    let out = match cli.command {
        Command::Bounds { file } => report_output(&mlt_bounds(&read_graph(&file)?, &settings), format),
        Command::Rank { file } => report_output(&rank_report(&read_graph(&file)?, &settings), format),
        Command::Wmlt { file } => report_output(&wmlt_bounds(&read_graph(&file)?, &settings), format),
        Command::Smt { file } => report_output(&smt_report(&read_graph(&file)?, &settings), format),
        Command::Core { file, n } => {
            let core = n_core(&read_graph(&file)?, n);
            if json {
                pretty(&serde_json::to_value(&core).expect("serializable"))
            } else {
                format!(
                    "core n={} empty={} remaining={} removal_order={}\n",
                    core.n,
                    core.is_empty(),
                    list(&core.remaining),
                    list(&core.removal_order)
                )
            }
        }
        Command::Pebble { file, k, l } => {
            let g = read_graph(&file)?;
            let outcome = pebble_game(&g, k, l).map_err(|e| usage(e.to_string()))?;
            if json {
                pretty(&json!({ "k": k, "l": l, "outcome": outcome }))
            } else {
                let witness = outcome.witness.as_deref().map_or("none".to_string(), list);
                format!(
                    "pebble k={k} l={l} independent={} witness={witness} witness_edges={}\n",
                    outcome.independent, outcome.witness_edges
                )
            }
        }
        Command::Birank { file, left, right, r1, r2 } => {
            let g = read_graph(&file)?;
            let b = g.bipartite_between(&left, &right).map_err(|e| usage(e.to_string()))?;
            let v = birank_check(&b, r1, r2, settings.trials, settings.prime, &settings.rng());
            if json {
                pretty(&json!({ "r1": r1, "r2": r2, "crossing_edges": b.edge_count(), "verdict": v }))
            } else {
                let method = serde_json::to_value(v.method).expect("serializable");
                let seeds = v.generic.as_ref().map_or(String::new(), |g| format!(" seeds={}", list_u64(&g.seeds)));
                format!(
                    "birank r1={r1} r2={r2} crossing_edges={} member={} method={}{seeds}\n",
                    b.edge_count(),
                    v.member,
                    method.as_str().unwrap_or_default()
                )
            }
        }
        Command::Split { file, parts, targets } => {
            let g = read_graph(&file)?;
            let plan = if parts.is_empty() {
                search_splitting(&g, &settings).plan.ok_or_else(|| domain("no verified splitting found"))?
            } else {
                let parts = parts.iter().map(|p| parse_list(p)).collect::<Result<Vec<_>, _>>()?;
                splitting_bound(&g, &parts, &targets, &settings).map_err(|e| match e {
                    SplitError::Malformed(_) => usage(e.to_string()),
                    _ => domain(format!("splitting plan rejected: {e}")),
                })?
            };
            if json {
                pretty(&json!({ "bound": plan.bound(), "plan": plan }))
            } else {
                plan_text(&plan)
            }
        }
        Command::Sme { action } => {
            let (input, solve) = match &action {
                SmeAction::Exists(i) => (i, false),
                SmeAction::Solve(i) => (i, true),
            };
            let g = read_graph(&input.file)?;
            let source = load_sme_input(input, &g, &settings)?;
            if solve {
                let sol = match &source {
                    SmeSource::Data(d) => sme_solve(&g, d),
                    SmeSource::Covariance(c) => sme_solve_covariance(&g, c),
                }
                .map_err(score_failure)?;
                if json {
                    pretty(&json!({ "k": matrix_rows(&sol.k), "residual": sol.residual }))
                } else {
                    let mut out = format!("sme residual={:e}\n", sol.residual);
                    for row in matrix_rows(&sol.k) {
                        let cells: Vec<String> = row.iter().map(|x| format!("{x:.12e}")).collect();
                        out += &format!("{}\n", cells.join(","));
                    }
                    out
                }
            } else {
                let data = match source {
                    SmeSource::Data(d) => d,
                    SmeSource::Covariance(c) => SampleData::from_covariance(&c).map_err(score_failure)?,
                };
                let exists = sme_exists(&g, &data).map_err(score_failure)?;
                let out = if json {
                    pretty(&json!({ "exists": exists, "n": data.n(), "m": data.m(), "seed": settings.seed }))
                } else if exists {
                    "SME exists\n".to_string()
                } else {
                    "SME does not exist\n".to_string()
                };
                return Ok((out, if exists { 0 } else { 1 }));
            }
        }
        Command::ConjectureLf { file, n } => {
            let check = conjecture_lf_check(&read_graph(&file)?, n, &settings);
            if json {
                pretty(&json!({ "counterexample": check.is_counterexample(), "check": check }))
            } else {
                format!(
                    "conjecture-lf n={} count={} bound={} predicted={} actual={} counterexample={}\n",
                    check.n,
                    check.count,
                    check.bound,
                    check.predicted,
                    check.actual,
                    check.is_counterexample()
                )
            }
        }
        Command::Gen { name, params, output } => {
            let g = generate_named(&name, &params).map_err(|e| usage(e.to_string()))?;
            let text = g.render();
            if let Some(path) = output {
                std::fs::write(&path, &text).map_err(|e| usage(format!("writing {path}: {e}")))?;
                String::new()
            } else {
                text
            }
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(cli) {
        Ok(ok) => ok,
        Err(f) => {
            eprintln!("mlt: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    let text = if out.is_empty() || out.ends_with('\n') { out } else { out + "\n" };
    if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
