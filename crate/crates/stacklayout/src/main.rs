//! Thin command-line front end over the library. Exit codes: 0 ok, 2
//! violation found, 3 budget exceeded, 4 parse error, 1 other errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use stacklayout::adversary;
use stacklayout::engine::{self, PipelineConfig};
use stacklayout::graph::{block_cut_tree, check_outerplanar, Outerplanarity};
use stacklayout::hpartition;
use stacklayout::io::{self, IoError};
use stacklayout::layout::davies_bound;
use stacklayout::oracle::{exact_stack_number, exact_twist_number, OracleBudget, OracleError};
use stacklayout::twotree;

#[derive(Parser)]
#[command(name = "stacklayout", version, about = "Stack layouts of directed acyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonRun {
    /// Seed recorded for reproducibility; all commands are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Acyclicity, outerplanarity (certificate or witness), blocks, and the
    /// monotonicity profile of a graph.
    Recognize {
        path: PathBuf,
        /// Write the block-cut tree as DOT here.
        #[arg(long)]
        bct_dot: Option<PathBuf>,
    },
    /// Constant-stack layout of an outerplanar DAG with a bound report.
    Layout {
        path: PathBuf,
        /// Base edge `u,v` for the construction (defaults to the smallest).
        #[arg(long, value_parser = parse_edge)]
        base_edge: Option<(usize, usize)>,
        /// Quotient blocks up to this size are laid out exactly.
        #[arg(long, default_value_t = 12)]
        exact_threshold: usize,
        #[command(flatten)]
        run: CommonRun,
        /// Write the layout JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an arc-diagram SVG here.
        #[arg(long)]
        emit_svg: Option<PathBuf>,
        /// Write the bound report JSON here.
        #[arg(long)]
        report_json: Option<PathBuf>,
    },
    /// Check a layout JSON against its graph.
    Verify {
        graph: PathBuf,
        layout: PathBuf,
    },
    /// Exact twist or stack number by exhaustive search.
    Oracle {
        #[command(subcommand)]
        what: OracleWhat,
    },
    /// Built-in instance generators.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Directed H-partition of a maximal outerplanar DAG, with the property
    /// report.
    Hpartition {
        path: PathBuf,
        #[arg(long, value_parser = parse_edge)]
        base_edge: Option<(usize, usize)>,
        /// Write the partition JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the quotient as DOT here.
        #[arg(long)]
        quotient_dot: Option<PathBuf>,
        /// Write the quotient as graph JSON here, with a `part_of` sidecar
        /// next to it.
        #[arg(long)]
        quotient_out: Option<PathBuf>,
    },
    /// Arc-diagram SVG for a stored layout.
    Render {
        graph: PathBuf,
        layout: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Twist-to-stacks bound table and the pipeline constants.
    Bounds {
        #[arg(long, default_value_t = 10)]
        max_k: usize,
    },
}

#[derive(Subcommand)]
enum OracleWhat {
    /// Minimum twist number over all topological orderings.
    Tn {
        path: PathBuf,
        #[arg(long, default_value_t = 20_000_000)]
        max_orderings: usize,
    },
    /// Minimum stack number over all topological orderings.
    Sn {
        path: PathBuf,
        #[arg(long, default_value_t = 20_000_000)]
        max_orderings: usize,
        #[arg(long, default_value_t = 24)]
        max_edges: usize,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Directed path plus matching on 2k vertices (stack number exactly k).
    Fig1 {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 8-vertex outerplanar DAG with twist and stack number 3.
    Fence {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The nested-gadget 2-tree family with unbounded twist number.
    Adversary {
        #[arg(short)]
        k: usize,
        /// Truncate every gadget to this width (drops the twist guarantee).
        #[arg(long)]
        n_override: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the parameters and tracked matchings here.
        #[arg(long)]
        spec_out: Option<PathBuf>,
    },
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected `u,v`".into());
    }
    let u = parts[0].trim().parse().map_err(|e| format!("{}", e))?;
    let v = parts[1].trim().parse().map_err(|e| format!("{}", e))?;
    Ok((u, v))
}

const EXIT_VIOLATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_PARSE: u8 = 4;

fn emit(path: &Option<PathBuf>, contents: &str) -> Result<(), IoError> {
    if let Some(p) = path {
        std::fs::write(p, contents)?;
    }
    Ok(())
}

fn run() -> Result<u8, Box<dyn std::error::Error>> {
    match Cli::parse().command {
        Command::Recognize { path, bct_dot } => {
            let g = io::load_graph_auto(&path)?;
            println!("n = {}, m = {}", g.n(), g.edge_count());
            println!("acyclic: {}", g.is_acyclic());
            match check_outerplanar(&g) {
                Outerplanarity::Outerplanar { outer_order } => {
                    println!("outerplanar: true");
                    let names: Vec<String> =
                        outer_order.iter().map(|&v| g.name_of(v)).collect();
                    println!("outer cyclic order: {}", names.join(" "));
                }
                Outerplanarity::NotOuterplanar { witness } => {
                    println!("outerplanar: false");
                    println!(
                        "forbidden substructure: subdivision of {:?} with branch vertices {:?}",
                        witness.kind, witness.branch_vertices
                    );
                }
            }
            if g.is_connected() && g.n() >= 1 {
                let bct = block_cut_tree(&g, None)?;
                println!(
                    "blocks: {} (cut vertices: {:?})",
                    bct.blocks.len(),
                    bct.cut_vertices
                );
                if bct_dot.is_some() {
                    emit(&bct_dot, &io::block_cut_tree_to_dot(&bct))?;
                }
                if let Ok(profile) = twotree::monotonicity_profile(&g) {
                    println!("block-monotone: {}", profile.block_monotone);
                }
            }
            Ok(0)
        }
        Command::Layout {
            path,
            base_edge,
            exact_threshold,
            run,
            out,
            emit_svg,
            report_json,
        } => {
            let g = io::load_graph_auto(&path)?;
            let config = PipelineConfig { base_edge, exact_threshold };
            let (layout, report) = engine::layout_outerplanar_dag(&g, &config)?;
            println!("seed: {}", run.seed);
            println!(
                "route: {:?}, stacks: {} (run bound {}, ceiling {})",
                report.route, report.stacks, report.run_bound, report.paper_ceiling
            );
            println!(
                "h = {}, f = {}, w = {}, s = {}, p = {}, t = {}",
                report.h, report.f, report.w, report.s, report.p, report.t
            );
            emit(&out, &io::layout_to_json(&layout))?;
            if emit_svg.is_some() {
                emit(&emit_svg, &io::render_arc_diagram(&layout))?;
            }
            emit(&report_json, &io::bound_report_to_json(&report))?;
            match layout.verify() {
                Ok(()) => {
                    println!("verify: ok");
                    Ok(0)
                }
                Err(v) => {
                    println!("verify: VIOLATION {:?}", v);
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Command::Verify { graph, layout } => {
            let g = io::load_graph_auto(&graph)?;
            let text = std::fs::read_to_string(&layout)?;
            let l = io::layout_from_json(&text, &g)?;
            match l.verify() {
                Ok(()) => {
                    println!("ok: {} stacks", l.stack_count());
                    Ok(0)
                }
                Err(v) => {
                    println!("violation: {:?}", v);
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Command::Oracle { what } => {
            let budget_of = |max_orderings, max_edges| OracleBudget {
                max_orderings,
                max_edges_for_coloring: max_edges,
                time_cap: Duration::from_secs(600),
            };
            match what {
                OracleWhat::Tn { path, max_orderings } => {
                    let g = io::load_graph_auto(&path)?;
                    let (tn, witness) = exact_twist_number(&g, &budget_of(max_orderings, 24))?;
                    println!("tn = {}", tn);
                    let names: Vec<String> = witness.iter().map(|&v| g.name_of(v)).collect();
                    println!("ordering: {}", names.join(" "));
                }
                OracleWhat::Sn { path, max_orderings, max_edges } => {
                    let g = io::load_graph_auto(&path)?;
                    let (sn, layout) =
                        exact_stack_number(&g, &budget_of(max_orderings, max_edges))?;
                    println!("sn = {}", sn);
                    println!("{}", io::layout_to_json(&layout).trim_end());
                }
            }
            Ok(0)
        }
        Command::Gen { family } => {
            let (g, spec) = match family {
                GenFamily::Fig1 { k, out } => {
                    let g = adversary::gen_path_matching(k);
                    (Some((g, out)), None)
                }
                GenFamily::Fence { out } => (Some((adversary::gen_three_fence(), out)), None),
                GenFamily::Adversary { k, n_override, out, spec_out } => {
                    let (g, spec) = adversary::gen_unbounded_twist(k, n_override)?;
                    (Some((g, out)), Some((spec, spec_out)))
                }
            };
            if let Some((g, out)) = g {
                let json = io::graph_to_json(&g);
                match out {
                    Some(_) => emit(&out, &json)?,
                    None => print!("{}", json),
                }
                eprintln!("generated: n = {}, m = {}", g.n(), g.edge_count());
            }
            if let Some((spec, spec_out)) = spec {
                let mut text =
                    serde_json::to_string_pretty(&spec).expect("serializable");
                text.push('\n');
                match spec_out {
                    Some(_) => emit(&spec_out, &text)?,
                    None => eprint!("{}", text),
                }
            }
            Ok(0)
        }
        Command::Hpartition { path, base_edge, out, quotient_dot, quotient_out } => {
            let g = io::load_graph_auto(&path)?;
            let base = base_edge.unwrap_or_else(|| g.edges()[0]);
            let seq = twotree::build_construction_sequence(&g, base)?;
            let tree = twotree::build_construction_tree(&seq, &g)?;
            let hp = hpartition::construct_directed_h_partition(&g, &seq, &tree)?;
            println!(
                "parts: {}, quotient: n = {}, m = {}",
                hp.parts.len(),
                hp.quotient.n(),
                hp.quotient.edge_count()
            );
            let report = hpartition::verify_partition_properties(&g, &hp, &tree);
            println!("unidirectional: {:?}", report.unidirectional);
            println!("P1 parts are transitive subgraphs: {:?}", report.parts_are_transitive_sets);
            println!("P2 stackings hit Q1/Q2: {:?}", report.stackings_on_q_paths);
            println!("P3 quotient block-monotone: {:?}", report.quotient_block_monotone);
            println!("P4 cut cover <= 4 per block: {:?}", report.cut_cover_at_most_four);
            emit(&out, &io::partition_to_json(&hp))?;
            if quotient_dot.is_some() {
                emit(&quotient_dot, &io::graph_to_dot(&hp.quotient))?;
            }
            if let Some(qpath) = &quotient_out {
                std::fs::write(qpath, io::graph_to_json(&hp.quotient))?;
                let sidecar = qpath.with_extension("part_of.json");
                std::fs::write(sidecar, io::part_of_to_json(&hp))?;
            }
            Ok(if report.all_pass() { 0 } else { EXIT_VIOLATION })
        }
        Command::Render { graph, layout, out } => {
            let g = io::load_graph_auto(&graph)?;
            let text = std::fs::read_to_string(&layout)?;
            let l = io::layout_from_json(&text, &g)?;
            std::fs::write(&out, io::render_arc_diagram(&l))?;
            println!("wrote {}", out.display());
            Ok(0)
        }
        Command::Bounds { max_k } => {
            println!("twist k -> stacks (crossing-free case k = 1 maps to 1):");
            for k in 1..=max_k {
                println!("  {:>3} -> {}", k, davies_bound(k)?);
            }
            println!("pipeline constants:");
            println!("  monotone outerplanar:        {}", engine::MONOTONE_STACK_BOUND);
            println!("  block-monotone outerplanar:  {}", engine::BLOCK_MONOTONE_STACK_BOUND);
            println!("  per-block expansion:         {}", engine::BLOCK_EXPANSION_STACK_BOUND);
            println!("  outerplanar ceiling:         {}", engine::OUTERPLANAR_STACK_CEILING);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (e.g. piping into `head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            let code = if e.downcast_ref::<IoError>().is_some_and(|io| {
                matches!(io, IoError::Parse { .. } | IoError::InvariantViolation(_))
            }) {
                EXIT_PARSE
            } else if e
                .downcast_ref::<OracleError>()
                .is_some_and(|o| matches!(o, OracleError::BudgetExceeded(_)))
            {
                EXIT_BUDGET
            } else if let Some(stacklayout::adversary::AdversaryError::SizeExceeded { .. }) =
                e.downcast_ref::<stacklayout::adversary::AdversaryError>()
            {
                EXIT_BUDGET
            } else {
                1
            };
            ExitCode::from(code)
        }
    }
}
