use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use strongcolor::coloring::{
    greedy_bound, greedy_strong, induced_matching_lower, verify_strong, ColoringError,
};
use strongcolor::discharge::{self, fmt_fifths, DischargeError};
use strongcolor::exact::{strong_chromatic_index_with, ExactError};
use strongcolor::generate::{generate_with_stats, named_instance, GenSpec};
use strongcolor::graph::PlaneMultigraph;
use strongcolor::io;
use strongcolor::reduce::{color_graph, find_configuration, ReduceError};

/// Strong 9-edge-colorings of subcubic planar multigraphs.
///
/// Graph files are `pmg` (embedded) or plain edge lists; `-` reads stdin.
/// Exit codes: 0 success, 1 input error, 2 verification failure, 3 internal
/// invariant breach.
#[derive(Parser)]
#[command(name = "strongcolor", version)]
struct Cli {
    /// Print machine-readable key=value records.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Strong 9-coloring by reduction.
    Color {
        graph: PathBuf,
        /// Print one line per reduction.
        #[arg(long)]
        trace: bool,
        /// Write the coloring here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Also fail if more than this many colors are used.
        #[arg(long)]
        max_colors: Option<u8>,
    },
    /// Exact strong chromatic index by branch and bound.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = 9)]
        max_k: u8,
        /// Run even above the edge-count guard.
        #[arg(long)]
        force: bool,
    },
    /// Initial and final discharging charges.
    Charge { graph: PathBuf },
    /// Structural predicates, charge bounds and the detector's answer.
    Audit { graph: PathBuf },
    /// Random or named instance.
    Gen {
        #[arg(long, required_unless_present = "named")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "named")]
        seed: Option<u64>,
        /// Probability that a growth step subdivides an edge.
        #[arg(long, default_value_t = 0.2)]
        p2: f64,
        /// Allow parallel edges.
        #[arg(long)]
        parallel: bool,
        /// Emit a named instance (prism, k4, cube, dodecahedron, ...).
        #[arg(long, conflicts_with_all = ["n", "seed"])]
        named: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write an edge list instead of pmg.
        #[arg(long)]
        edge_list: bool,
    },
    /// Structural summary.
    Stats { graph: PathBuf },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

trait Classify<T> {
    fn input(self) -> Result<T, Failure>;
    fn internal(self) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> Classify<T> for Result<T, E> {
    fn input(self) -> Result<T, Failure> {
        self.map_err(|e| Failure {
            code: 1,
            error: e.into(),
        })
    }
    fn internal(self) -> Result<T, Failure> {
        self.map_err(|e| Failure {
            code: 3,
            error: e.into(),
        })
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<PlaneMultigraph, Failure> {
    let text = read_text(path).input()?;
    io::parse_graph(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .input()
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .input(),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn reduce_failure(e: ReduceError) -> Failure {
    let code = match e {
        ReduceError::InputInvalid(_) => 1,
        _ => 3,
    };
    Failure {
        code,
        error: e.into(),
    }
}

fn discharge_failure(e: DischargeError) -> Failure {
    let code = match e {
        DischargeError::Disconnected | DischargeError::HasBridge(_) => 1,
        _ => 3,
    };
    Failure {
        code,
        error: e.into(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let porcelain = cli.porcelain;
    match cli.command {
        Command::Color { graph, trace, output } => {
            let g = read_graph(&graph)?;
            let (c, tr) = color_graph(&g).map_err(reduce_failure)?;
            if trace {
                for entry in &tr.entries {
                    if porcelain {
                        eprintln!("trace {entry}");
                    } else {
                        eprintln!("{:indent$}{entry}", "", indent = 2 * entry.depth);
                    }
                }
            }
            if porcelain {
                eprintln!(
                    "status=ok edges={} colors={} reductions={} base_cases={}",
                    g.edge_count(),
                    c.max_color(),
                    tr.entries.len(),
                    tr.base_cases
                );
            } else {
                eprintln!(
                    "colored {} edges with {} colors ({} reductions, {} base cases)",
                    g.edge_count(),
                    c.max_color(),
                    tr.entries.len(),
                    tr.base_cases
                );
            }
            write_out(output.as_deref(), &io::serialize_coloring(&c))
        }
        Command::Verify {
            graph,
            coloring,
            max_colors,
        } => {
            let g = read_graph(&graph)?;
            let text = read_text(&coloring).input()?;
            let c = io::parse_coloring(&text)
                .with_context(|| format!("parsing {}", coloring.display()))
                .input()?;
            if c.edge_count() > g.edge_count() {
                return Err(anyhow!(
                    "coloring lists edge {} but the graph has {} edges",
                    c.edge_count() - 1,
                    g.edge_count()
                ))
                .input();
            }
            let c = c.resized(g.edge_count());
            let mut problems: Vec<String> = match verify_strong(&g, &c) {
                Ok(v) => v
                    .iter()
                    .map(|v| format!("edges {} and {} both have color {}", v.first, v.second, v.color))
                    .collect(),
                Err(ColoringError::UncoloredEdge(e)) => vec![format!("edge {e} is uncolored")],
                Err(e) => return Err(e).input(),
            };
            if let Some(m) = max_colors {
                if c.max_color() > m {
                    problems.push(format!("uses color {} above the limit {m}", c.max_color()));
                }
            }
            if porcelain {
                println!(
                    "valid={} colors={} problems={}",
                    problems.is_empty(),
                    c.max_color(),
                    problems.len()
                );
                for p in &problems {
                    println!("problem {p}");
                }
            } else if problems.is_empty() {
                println!("valid strong coloring with {} colors", c.max_color());
            } else {
                for p in &problems {
                    println!("{p}");
                }
            }
            if problems.is_empty() {
                Ok(())
            } else {
                Err(Failure {
                    code: 2,
                    error: anyhow!(
                        "coloring is not a valid strong coloring ({} problems)",
                        problems.len()
                    ),
                })
            }
        }
        Command::Exact { graph, max_k, force } => {
            let g = read_graph(&graph)?;
            let r = strong_chromatic_index_with(&g, max_k, force).map_err(|e| {
                let code = match e {
                    ExactError::TooLarge { .. } | ExactError::PaletteTooLarge(_) => 1,
                };
                Failure {
                    code,
                    error: e.into(),
                }
            })?;
            let chi = r.chi_s.map_or("none".to_string(), |c| c.to_string());
            if porcelain {
                println!("chi_s={chi} max_k={max_k} lower_bound={}", r.lower_bound);
            } else {
                match r.chi_s {
                    Some(c) => println!("strong chromatic index {c} (clique bound {})", r.lower_bound),
                    None => println!("no strong {max_k}-coloring (clique bound {})", r.lower_bound),
                }
            }
            if let Some(w) = &r.witness {
                if !porcelain {
                    print!("{}", io::serialize_coloring(w));
                }
            }
            Ok(())
        }
        Command::Charge { graph } => {
            let g = read_graph(&graph)?;
            let r = discharge::charges(&g).map_err(discharge_failure)?;
            if r.total_initial() != r.total_final() {
                return Err(anyhow!("charge not conserved")).internal();
            }
            if porcelain {
                for (v, (a, b)) in r.vertex_initial.iter().zip(&r.vertex_final).enumerate() {
                    println!("vertex={v} initial={} final={}", fmt_fifths(*a), fmt_fifths(*b));
                }
                for (i, (a, b)) in r.face_initial.iter().zip(&r.face_final).enumerate() {
                    let len = r.faces.get(i).map_or(0, |f| f.len());
                    println!(
                        "face={i} length={len} initial={} final={}",
                        fmt_fifths(*a),
                        fmt_fifths(*b)
                    );
                }
                println!(
                    "total_initial={} total_final={}",
                    fmt_fifths(r.total_initial()),
                    fmt_fifths(r.total_final())
                );
            } else {
                println!("{r}");
            }
            Ok(())
        }
        Command::Audit { graph } => {
            let g = read_graph(&graph)?;
            let r = discharge::audit(&g).map_err(discharge_failure)?;
            if porcelain {
                for p in discharge::Predicate::ALL {
                    println!("predicate={:?} holds={}", p, !r.failing.contains(&p));
                }
                let held = r.bounds.iter().filter(|b| b.holds).count();
                println!("bounds_checked={} bounds_held={held}", r.bounds.len());
                println!(
                    "detector={} consistent={}",
                    r.detector.map_or("none".to_string(), |k| k.to_string()),
                    r.consistent()
                );
            } else {
                println!("{r}");
            }
            Ok(())
        }
        Command::Gen {
            n,
            seed,
            p2,
            parallel,
            named,
            output,
            edge_list,
        } => {
            let g = match named {
                Some(name) => named_instance(&name).input()?,
                None => {
                    let spec = GenSpec {
                        target_vertices: n.unwrap(),
                        seed: seed.unwrap(),
                        two_vertex_fraction: p2,
                        allow_parallel: parallel,
                    };
                    let (g, stats) = generate_with_stats(&spec).input()?;
                    if porcelain {
                        eprintln!(
                            "subdivisions={} expansions={} joins={} parallels={}",
                            stats.subdivisions, stats.expansions, stats.joins, stats.parallels
                        );
                    }
                    g
                }
            };
            let text = if edge_list {
                io::serialize_edge_list(&g)
            } else {
                io::serialize_pmg(&g)
            };
            write_out(output.as_deref(), &text)
        }
        Command::Stats { graph } => {
            let g = read_graph(&graph)?;
            stats(&g, porcelain).internal()
        }
    }
}

fn stats(g: &PlaneMultigraph, porcelain: bool) -> anyhow::Result<()> {
    let s = g.structure_report();
    let faces = g.trace_faces();
    let mut face_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for f in &faces {
        *face_hist.entry(f.len()).or_default() += 1;
    }
    let hist = face_hist
        .iter()
        .map(|(l, c)| format!("{l}:{c}"))
        .collect::<Vec<_>>()
        .join(",");
    let order: Vec<usize> = (0..g.edge_count()).collect();
    let greedy = if g.is_subcubic() {
        greedy_strong(g, &order)?.max_color().to_string()
    } else {
        "n/a".into()
    };
    let config = find_configuration(g).map_or("none".to_string(), |c| c.kind().to_string());
    let matching = match color_graph(g) {
        Ok((c, _)) => induced_matching_lower(g, &c)?.len().to_string(),
        Err(_) => "n/a".into(),
    };
    let girth = s.girth.map_or("acyclic".to_string(), |x| x.to_string());
    let fields: [(&str, String); 13] = [
        ("vertices", g.vertex_count().to_string()),
        ("edges", g.edge_count().to_string()),
        ("max_degree", g.max_degree().to_string()),
        ("components", s.components.len().to_string()),
        ("faces", faces.len().to_string()),
        ("face_lengths", hist),
        ("bridges", s.bridges.len().to_string()),
        ("two_vertices", s.two_vertices.len().to_string()),
        ("girth", girth),
        ("parallel_edges", g.has_parallel_edges().to_string()),
        (
            "greedy_colors",
            format!("{greedy} (bound {})", greedy_bound(g.max_degree())),
        ),
        ("induced_matching", matching),
        ("first_configuration", config),
    ];
    for (k, v) in fields {
        if porcelain {
            println!("{k}={}", v.replace(' ', "_"));
        } else {
            println!("{:<20} {v}", k.replace('_', " "));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // usage errors are input errors, not verification failures
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
