//! Command-line front end.
//!
//! Every subcommand ends with a single `key=value` summary line. When the
//! primary artifact goes to stdout the summary goes to stderr, so commands
//! compose with pipes (`solgroup mh A7 | solgroup rank -`). With `-o FILE`
//! the artifact goes to the file and the summary to stdout.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 search
//! budget exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use solgroup::aut::{self, AutOptions, DEFAULT_NODE_BUDGET};
use solgroup::graph::{build_g, build_ghat, frucht_graph, kneser, srg_parameters, ColoredGraph};
use solgroup::group::{build_mh, named_group};
use solgroup::kneser_oracle::{all_seeds, build_constraints};
use solgroup::refine::{stable_refinement, topological_paths};
use solgroup::{checks, decolor, io as gio, Error, LinSystem};

/// Environment variable holding the default search node budget.
pub const BUDGET_ENV: &str = "SOLGROUP_NODE_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "solgroup", version, about = "Solution groups, system graphs, decoloring and automorphism search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dimacs,
}

#[derive(Debug, clap::Args)]
pub struct Output {
    /// Write the artifact here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct GraphOutput {
    #[command(flatten)]
    pub out: Output,
    #[arg(long, value_enum, default_value = "json")]
    pub format: GraphFormat,
    /// Also write `v <id> <c1> <c2>` color lines here (the DIMACS sidecar).
    #[arg(long = "colors-out")]
    pub colors_out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct GraphInput {
    /// Graph file (JSON or DIMACS), `-` for stdin.
    pub graph: PathBuf,
    /// Color sidecar for DIMACS input.
    #[arg(long)]
    pub colors: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The system M_H of a group: one equation per commuting involution triple.
    Mh {
        group: String,
        #[command(flatten)]
        out: Output,
    },
    /// Rank of a system's matrix.
    Rank { system: PathBuf },
    /// Nullspace basis, one 0/1 vector per line.
    Nullspace {
        system: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Homogenize a system (identity when b = 0).
    Homogenize {
        system: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Colored graph of a system: G(M,b), or Ĝ with --ghat.
    Buildgraph {
        system: PathBuf,
        #[arg(long)]
        ghat: bool,
        /// Homogenize the system first.
        #[arg(long)]
        homogenize: bool,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Decolor a graph; a system file is accepted too and run through the
    /// whole pipeline.
    Decolor {
        #[command(flatten)]
        input: GraphInput,
        /// Write the decoloring trace (JSON) here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Stable color refinement partition.
    Refine {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: Output,
    },
    /// Topological paths.
    Paths {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: Output,
    },
    /// Automorphism group order and generators.
    Aut {
        #[command(flatten)]
        input: GraphInput,
        /// Enumerate all permutations instead of searching.
        #[arg(long)]
        brute: bool,
        /// Largest graph the brute-force mode accepts.
        #[arg(long, default_value_t = aut::DEFAULT_BRUTE_WINDOW)]
        window: usize,
        /// Search node budget; defaults to $SOLGROUP_NODE_BUDGET or 10^7.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        parallel: bool,
        /// Write a certificate (graph hash, generators) here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Reserved; every algorithm here is deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Frucht graph of a group, checked against the group.
    Frucht {
        group: String,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Kneser graph K(n, l).
    Kneser {
        n: usize,
        l: usize,
        #[command(flatten)]
        out: GraphOutput,
    },
    /// Rank route and propagation route for A_7, and their agreement.
    VerifyA7,
    /// Run the verification suite.
    VerifyPaper {
        /// Include the slow checks (rigidity of the 31395-vertex witness).
        #[arg(long)]
        deep: bool,
        /// Write a human-readable report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) }
}

type CmdResult = Result<i32, Failure>;

/// Stdout, stderr and stdin as seen by a command.
pub struct Streams<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub stdin: &'a mut dyn Read,
}

fn read_text(path: &Path, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| io_failure(path, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn emit(s: &mut Streams, out: &Output, artifact: &str, summary: &str) -> Result<(), Failure> {
    let res = match &out.output {
        Some(path) => {
            write_file(path, artifact)?;
            writeln!(s.out, "{summary}")
        }
        None => s.out.write_all(artifact.as_bytes()).and_then(|_| writeln!(s.err, "{summary}")),
    };
    res.map_err(|e| Failure { code: EXIT_INPUT, message: e.to_string() })
}

fn say(s: &mut Streams, line: &str) -> Result<(), Failure> {
    writeln!(s.out, "{line}").map_err(|e| Failure { code: EXIT_INPUT, message: e.to_string() })
}

fn emit_graph(s: &mut Streams, out: &GraphOutput, g: &ColoredGraph, summary: &str) -> Result<(), Failure> {
    let text = match out.format {
        GraphFormat::Json => gio::graph_to_json(g),
        GraphFormat::Dimacs => gio::graph_to_dimacs(g),
    };
    if let Some(path) = &out.colors_out {
        write_file(path, &gio::colors_to_sidecar(g))?;
    }
    emit(s, &out.out, &text, summary)
}

fn read_system(path: &Path, s: &mut Streams) -> Result<LinSystem, Failure> {
    Ok(read_text(path, s.stdin)?.parse::<LinSystem>()?)
}

fn read_graph(input: &GraphInput, s: &mut Streams) -> Result<ColoredGraph, Failure> {
    let text = read_text(&input.graph, s.stdin)?;
    let side = input.colors.as_deref().map(|p| fs::read_to_string(p).map_err(|e| io_failure(p, e))).transpose()?;
    Ok(gio::read_graph(&text, side.as_deref())?)
}

/// Budget from the flag, else the environment, else the default.
pub fn node_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: EXIT_INPUT,
            message: format!("{BUDGET_ENV}={v:?} is not a number"),
        }),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn looks_like_system(text: &str) -> bool {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let toks: Vec<&str> = first.split_whitespace().collect();
    toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Runs one command line (including the program name) against the given
/// streams and returns the exit code.
pub fn run<I, T>(argv: I, s: &mut Streams) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { s.err.write_all(rendered.as_bytes()) } else { s.out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, s) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(s.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, s: &mut Streams) -> CmdResult {
    match cmd {
        Command::Mh { group, out } => {
            let g = named_group(&group)?;
            let sys = build_mh(&g);
            let summary = format!("group={group} order={} rows={} cols={}", g.order(), sys.rows(), sys.cols());
            emit(s, &out, &sys.to_text(), &summary)?;
            Ok(EXIT_OK)
        }
        Command::Rank { system } => {
            let sys = read_system(&system, s)?;
            say(s, &format!("rows={} cols={} rank={}", sys.rows(), sys.cols(), sys.matrix().rank()))?;
            Ok(EXIT_OK)
        }
        Command::Nullspace { system, out } => {
            let sys = read_system(&system, s)?;
            let basis = sys.matrix().nullspace_basis();
            let text: String = basis.iter().map(|v| bits(v) + "\n").collect();
            emit(s, &out, &text, &format!("cols={} nullity={}", sys.cols(), basis.len()))?;
            Ok(EXIT_OK)
        }
        Command::Homogenize { system, out } => {
            let sys = read_system(&system, s)?;
            let h = sys.homogenize();
            emit(s, &out, &h.to_text(), &format!("rows={} cols={} changed={}", h.rows(), h.cols(), !sys.is_homogeneous()))?;
            Ok(EXIT_OK)
        }
        Command::Buildgraph { system, ghat, homogenize, out } => {
            let mut sys = read_system(&system, s)?;
            if homogenize {
                sys = sys.homogenize();
            }
            let g = if ghat { build_ghat(&sys)? } else { build_g(&sys)? };
            let summary = format!(
                "kind={} n={} m={} colors={}",
                if ghat { "ghat" } else { "g" },
                g.vertex_count(),
                g.edge_count(),
                g.color_classes().len()
            );
            emit_graph(s, &out, &g, &summary)?;
            Ok(EXIT_OK)
        }
        Command::Decolor { input, trace, out } => {
            let text = read_text(&input.graph, s.stdin)?;
            let colored = if looks_like_system(&text) {
                build_g(&text.parse::<LinSystem>()?.homogenize())?
            } else {
                let side = input.colors.as_deref().map(|p| fs::read_to_string(p).map_err(|e| io_failure(p, e))).transpose()?;
                gio::read_graph(&text, side.as_deref())?
            };
            let (g, tr) = decolor::decolor(&colored);
            if let Some(path) = trace {
                write_file(&path, &gio::trace_to_json(&tr, &colored))?;
            }
            let summary = format!(
                "n={} m={} colors={} removed={} leaves={} gadget_vertices={}",
                g.vertex_count(),
                g.edge_count(),
                tr.color_normalization.len(),
                tr.removed_vertices.len(),
                tr.added_leaves.len(),
                tr.outer_vertices().len()
            );
            emit_graph(s, &out, &g, &summary)?;
            Ok(EXIT_OK)
        }
        Command::Refine { input, out } => {
            let g = read_graph(&input, s)?;
            let p = stable_refinement(&g);
            let summary = format!("n={} classes={} discrete={}", g.vertex_count(), p.len(), p.is_discrete());
            emit(s, &out, &p.dump(), &summary)?;
            Ok(EXIT_OK)
        }
        Command::Paths { input, out } => {
            let g = read_graph(&input, s)?;
            let paths = topological_paths(&g);
            let text: String = paths
                .iter()
                .map(|p| {
                    let inner: Vec<String> = p.interior.iter().map(|v| v.to_string()).collect();
                    format!("{} {} : {}\n", p.endpoint_a, p.endpoint_b, inner.join(" "))
                })
                .collect();
            emit(s, &out, &text, &format!("paths={}", paths.len()))?;
            Ok(EXIT_OK)
        }
        Command::Aut { input, brute, window, budget, parallel, cert, seed: _ } => {
            let g = read_graph(&input, s)?;
            let report = if brute {
                aut::brute_automorphisms_within(&g, window)?
            } else {
                aut::automorphism_group_with(&g, AutOptions { node_budget: node_budget(budget)?, parallel })?
            };
            if let Some(path) = cert {
                write_file(&path, &aut::certificate(&g, &report))?;
            }
            say(
                s,
                &format!(
                    "order={} rigid={} generators={} nodes={}",
                    report.order,
                    report.rigid,
                    report.generators.len(),
                    report.node_count
                ),
            )?;
            Ok(EXIT_OK)
        }
        Command::Frucht { group, budget, out } => {
            let gr = named_group(&group)?;
            let g = frucht_graph(&gr);
            let check = aut::verify_frucht_with(&gr, AutOptions { node_budget: node_budget(budget)?, parallel: false })?;
            let summary = format!(
                "group={group} n={} m={} group_order={} aut_order={} verified={}",
                g.vertex_count(),
                g.edge_count(),
                gr.order(),
                check.search_order,
                check.ok()
            );
            emit_graph(s, &out, &g, &summary)?;
            Ok(if check.ok() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Kneser { n, l, out } => {
            let g = kneser(n, l)?;
            let regular = g.vertex_count() > 0 && (0..g.vertex_count()).all(|v| g.degree(v) == g.degree(0));
            let srg = match srg_parameters(&g) {
                Some((n, k, Some(lambda), Some(mu))) => format!("{n},{k},{lambda},{mu}"),
                _ => "none".to_string(),
            };
            let summary = format!(
                "n={} regular={} srg={srg}",
                g.vertex_count(),
                if regular { g.degree(0).to_string() } else { "no".into() }
            );
            emit_graph(s, &out, &g, &summary)?;
            Ok(EXIT_OK)
        }
        Command::VerifyA7 => {
            let mh = build_mh(&named_group("A7")?);
            let (rank, nullity) = (mh.matrix().rank(), mh.matrix().nullity());
            say(s, &format!("rank_route rows={} cols={} rank={rank} nullity={nullity}", mh.rows(), mh.cols()))?;
            let sys = build_constraints();
            let outcomes = all_seeds(&sys);
            let contradictions = outcomes.iter().filter(|p| p.is_contradiction()).count();
            say(
                s,
                &format!(
                    "propagation_route edges={} constraints={} seeds={} contradictions={contradictions}",
                    sys.edges.len(),
                    sys.constraint_count(),
                    outcomes.len()
                ),
            )?;
            let agree = (contradictions == outcomes.len()) == (nullity == 0);
            let pass = agree && nullity == 0 && rank == 105;
            say(s, &format!("a7 rank={rank} nullity={nullity} contradictions={contradictions}/{} agree={agree}", outcomes.len()))?;
            Ok(if pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::VerifyPaper { deep, report } => {
            let mut text = String::new();
            let mut failed = 0;
            for c in checks::CRITERIA.iter().filter(|c| deep || !c.deep) {
                let outcome = (c.run)();
                failed += usize::from(!outcome.pass);
                say(s, &format!("check={} pass={} seconds={:.2}", outcome.id, outcome.pass, outcome.elapsed.as_secs_f64()))?;
                text += &format!("{}  [{}]\n", outcome, c.name);
            }
            if let Some(path) = report {
                write_file(&path, &text)?;
            }
            say(s, &format!("verify deep={deep} failed={failed}"))?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn system_sniffing() {
        assert!(looks_like_system("2 3\n110\n011\n"));
        assert!(!looks_like_system("{\"vertices\":[]}"));
        assert!(!looks_like_system("p edge 3 0\n"));
    }
}
