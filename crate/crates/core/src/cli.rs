//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; the `powerdom` binary wires it to the process.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bound_lab::{self, LabConfig};
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::io::{
    format_id_set, parse_graph, parse_id_list, parse_tree, parse_weights, render_graph,
    render_tree,
};
use crate::propagation::{closure_trace, TraceStep};
use crate::solver;
use crate::tree_dp::{input_labels, wpdt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "powerdom", about = "Power domination toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact minimum (weighted) power dominating set by subset search.
    SolveExact {
        /// Edge-list file; `-` or omitted reads stdin.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// One positive weight per vertex, in vertex order.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Print the propagation steps of the returned set.
        #[arg(long)]
        trace: bool,
    },
    /// Minimum-weight power dominating set of a weighted tree in linear time.
    SolveTree {
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long)]
        emit_set: bool,
    },
    /// Observation closure of a seed set.
    Propagate {
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Comma-separated 1-based vertex ids.
        #[arg(long)]
        seed: String,
        /// Vertices observed in advance (not dominating their neighbors).
        #[arg(long)]
        pre: Option<String>,
    },
    /// Structural checks; exits 0 iff every requested check passes.
    Check {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        claw_free: bool,
        #[arg(long, value_name = "K")]
        regular: Option<usize>,
        #[arg(long)]
        connected: bool,
        /// gamma_p <= floor((n + 1) / 5), by exact search.
        #[arg(long)]
        bound: bool,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Bound experiment over E_k and line graphs of random cubic graphs.
    Lab(LabArgs),
}

#[derive(Debug, Subcommand)]
enum GenFamily {
    /// The extremal family E_k (even r >= 4).
    Ek {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
    },
    /// Chain of k copies of K_4.
    Lk {
        #[arg(long)]
        k: usize,
    },
    /// Textbook families.
    Std {
        #[arg(long, value_enum)]
        family: StdFamily,
        #[arg(long)]
        n: usize,
        /// Second side of a complete bipartite graph.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Seeded connected cubic graph.
    Cubic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Seeded weighted tree (tree document format).
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StdFamily {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
}

#[derive(Debug, Args)]
struct LabArgs {
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = bound_lab::MAX_CUBIC_ORDER)]
    max_cubic: usize,
    /// Include E_0..=E_K (r = 4).
    #[arg(long, default_value_t = 2)]
    ek_max: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Write 0 for runtime_ms so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: Option<&Path>) -> Result<String> {
        match path {
            Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|source| {
                Error::Io {
                    path: p.to_path_buf(),
                    source,
                }
            }),
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|source| Error::Io {
                    path: PathBuf::from("<stdin>"),
                    source,
                })?;
                Ok(s)
            }
        }
    }

    fn out(&mut self, text: &str) -> Result<()> {
        self.stdout.write_all(text.as_bytes()).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
    }
}

fn with_path<T>(path: Option<&Path>, r: Result<T>) -> Result<T> {
    r.map_err(|e| match (path, e) {
        (Some(p), Error::Parse { line, msg }) => {
            Error::Input(format!("{}:{line}: {msg}", p.display()))
        }
        (_, e) => e,
    })
}

fn trace_lines(trace: &[TraceStep]) -> String {
    let mut out = String::new();
    for step in trace {
        let ids: Vec<String> = step.observed.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&format!("step {}: {}\n", step.step, ids.join(" ")));
    }
    out
}

fn format_weight(w: f64) -> String {
    format!("{w}")
}

/// Parses `argv` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32> {
    match command {
        Command::SolveExact {
            graph,
            weights,
            trace,
        } => {
            let text = io.read_input(graph.as_deref())?;
            let g = with_path(graph.as_deref(), parse_graph(&text))?;
            let result = match &weights {
                Some(wpath) => {
                    let wtext = io.read_input(Some(wpath))?;
                    let w = with_path(Some(wpath), parse_weights(&wtext, g.vertex_count()))?;
                    let r = solver::min_weight_pds(&g, &w)?;
                    io.out(&format!("gamma_p_w = {}\n", format_weight(r.weight)))?;
                    r
                }
                None => {
                    let r = solver::min_pds(&g)?;
                    io.out(&format!("gamma_p = {}\n", r.cardinality))?;
                    r
                }
            };
            io.out(&format!("set = {}\n", format_id_set(&result.set.to_vec())))?;
            if trace {
                io.out(&trace_lines(&result.certificate))?;
            }
            Ok(EXIT_OK)
        }
        Command::SolveTree { tree, emit_set } => {
            let text = io.read_input(tree.as_deref())?;
            let t = with_path(tree.as_deref(), parse_tree(&text))?;
            let r = wpdt(&t);
            io.out(&format!("gamma_p_w = {}\n", format_weight(r.weight)))?;
            if emit_set {
                io.out(&format!("set = {}\n", format_id_set(&input_labels(&t, &r.set))))?;
            }
            Ok(EXIT_OK)
        }
        Command::Propagate { graph, seed, pre } => {
            let text = io.read_input(graph.as_deref())?;
            let g = with_path(graph.as_deref(), parse_graph(&text))?;
            let n = g.vertex_count();
            let seeds = VertexSet::from_ids(n, parse_id_list(&seed, n)?)?;
            let pre = VertexSet::from_ids(n, parse_id_list(pre.as_deref().unwrap_or(""), n)?)?;
            let trace = closure_trace(&g, &seeds, &pre);
            let mut observed: Vec<usize> =
                trace.iter().flat_map(|s| s.observed.iter().copied()).collect();
            observed.sort_unstable();
            io.out(&format!("observed = {}\n", format_id_set(&observed)))?;
            io.out(&format!("count = {} of {}\n", observed.len(), n))?;
            io.out(&format!("pds = {}\n", observed.len() == n))?;
            io.out(&trace_lines(&trace))?;
            Ok(EXIT_OK)
        }
        Command::Check {
            graph,
            claw_free,
            regular,
            connected,
            bound,
        } => {
            let text = io.read_input(graph.as_deref())?;
            let g = with_path(graph.as_deref(), parse_graph(&text))?;
            check(&g, claw_free, regular, connected, bound, io)
        }
        Command::Gen { family, out } => {
            let text = match family {
                GenFamily::Ek { r, k } => render_graph(&families::gen_e(r, k)?),
                GenFamily::Lk { k } => render_graph(&families::gen_l(k)?),
                GenFamily::Std { family, n, m } => {
                    let spec = match family {
                        StdFamily::Path => FamilySpec::Path { n },
                        StdFamily::Cycle => FamilySpec::Cycle { n },
                        StdFamily::Star => FamilySpec::Star { n },
                        StdFamily::Complete => FamilySpec::Complete { n },
                        StdFamily::CompleteBipartite => FamilySpec::CompleteBipartite {
                            left: n,
                            right: m.ok_or_else(|| {
                                Error::input("complete-bipartite needs --m for the second side")
                            })?,
                        },
                    };
                    render_graph(&families::gen_standard(&spec)?)
                }
                GenFamily::Cubic { n, seed } => render_graph(&families::gen_random_cubic(n, seed)?),
                GenFamily::Tree { n, lo, hi, seed } => {
                    render_tree(&families::gen_random_tree(n, (lo, hi), seed)?)
                }
            };
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|source| Error::Io { path, source })?,
                None => io.out(&text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Lab(args) => lab(args, io),
    }
}

fn check(
    g: &Graph,
    claw_free: bool,
    regular: Option<usize>,
    connected: bool,
    bound: bool,
    io: &mut Io<'_>,
) -> Result<i32> {
    let mut all = true;
    let mut report = |name: String, ok: bool, io: &mut Io<'_>| -> Result<()> {
        all &= ok;
        io.out(&format!("{name} = {ok}\n"))
    };
    io.out(&format!("n = {}\nm = {}\n", g.vertex_count(), g.edge_count()))?;
    if connected {
        report("connected".into(), g.is_connected(), io)?;
    }
    if let Some(k) = regular {
        report(format!("regular({k})"), g.is_regular(k), io)?;
    }
    if claw_free {
        let claw = g.find_claw();
        if let Some((c, [x, y, z])) = claw {
            io.out(&format!("claw at {} with leaves {} {} {}\n", c + 1, x + 1, y + 1, z + 1))?;
        }
        report("claw_free".into(), claw.is_none(), io)?;
    }
    if bound {
        let r = solver::min_pds(g)?;
        let b = bound_lab::bound(g.vertex_count());
        io.out(&format!("gamma_p = {}\nbound = {}\n", r.cardinality, b))?;
        report("within_bound".into(), r.cardinality <= b, io)?;
    }
    Ok(if all { EXIT_OK } else { EXIT_FAILED })
}

fn lab(args: LabArgs, io: &mut Io<'_>) -> Result<i32> {
    let config = LabConfig {
        trials: args.trials,
        max_cubic: args.max_cubic,
        seed: args.seed,
        ek_max: Some(args.ek_max),
        timing: !args.no_timing,
        ..LabConfig::default()
    };
    let report = bound_lab::run_lab(&config)?;
    bound_lab::write_report(&report.records, &args.out)?;

    for r in &report.records {
        let gamma = r.gamma_p.map_or("skipped".to_string(), |g| g.to_string());
        let mut line = format!(
            "{}: n={} gamma_p={} bound={} tight={}",
            r.instance, r.n, gamma, r.bound, r.tight
        );
        if r.exceeds_n_over_5 {
            line.push_str(&format!(
                "  [counterexample to gamma_p <= n/(r+1) for r=4: {} > {}/5 = {}]",
                gamma,
                r.n,
                r.n as f64 / 5.0
            ));
        }
        if r.violates_bound() {
            line.push_str("  [BOUND VIOLATED]");
        }
        io.out(&format!("{line}\n"))?;
    }
    for name in &report.rejected {
        writeln!(io.stderr, "rejected {name}: failed a structural check").ok();
    }
    if report.violations.is_empty() {
        io.out(&format!(
            "{} instances, 0 bound violations, report written to {}\n",
            report.records.len(),
            args.out.display()
        ))?;
        return Ok(EXIT_OK);
    }
    for (name, g) in &report.violations {
        let path = args.out.with_extension(format!("violation-{name}.txt"));
        std::fs::write(&path, render_graph(g)).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        writeln!(
            io.stderr,
            "BOUND VIOLATION on {name}; graph written to {}",
            path.display()
        )
        .ok();
    }
    Ok(EXIT_FAILED)
}
