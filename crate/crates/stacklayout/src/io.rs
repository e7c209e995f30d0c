//! File formats and rendering: graph JSON and edge-list text, layout and
//! partition JSON, DOT export, SVG arc diagrams, and the run configuration.
//!
//! All JSON writers are canonical: sorted keys, no floats, LF newlines, one
//! trailing newline. Loading and re-saving a file is byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::BoundReport;
use crate::graph::{BlockCutTree, DirectedGraph, Edge, GraphError};
use crate::hpartition::DirectedHPartition;
use crate::layout::Layout;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invariant violation: {0}")]
    InvariantViolation(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    EdgeList,
}

/// Run parameters shared by the CLI commands; identical configuration and
/// inputs give byte-identical outputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub exact_threshold: usize,
    pub vertex_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0, exact_threshold: 12, vertex_cap: 1_000_000 }
    }
}

// Struct fields are declared alphabetically so the writers emit sorted
// keys.
#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    edges: Vec<(usize, usize)>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

pub fn graph_from_json(text: &str) -> Result<DirectedGraph, IoError> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| IoError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let g = match parsed.names {
        Some(names) => {
            if names.len() != parsed.n {
                return Err(IoError::Parse {
                    location: "names".into(),
                    message: format!("{} names for {} vertices", names.len(), parsed.n),
                });
            }
            DirectedGraph::with_names(parsed.n, parsed.edges, names)?
        }
        None => DirectedGraph::new(parsed.n, parsed.edges)?,
    };
    Ok(g)
}

pub fn graph_to_json(g: &DirectedGraph) -> String {
    let doc = GraphJson {
        edges: g.edges().to_vec(),
        n: g.n(),
        names: g.names().map(|n| n.to_vec()),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// One `tail head` pair per line; `#` starts a comment. The vertex count is
/// one more than the largest mentioned id.
pub fn graph_from_edge_list(text: &str) -> Result<DirectedGraph, IoError> {
    let mut edges: Vec<Edge> = Vec::new();
    let mut max_vertex = None::<usize>;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, IoError> {
            tok.ok_or_else(|| IoError::Parse {
                location: format!("line {}", lineno + 1),
                message: "expected `tail head`".into(),
            })?
            .parse()
            .map_err(|e| IoError::Parse {
                location: format!("line {}", lineno + 1),
                message: format!("{}", e),
            })
        };
        let tail = parse(it.next())?;
        let head = parse(it.next())?;
        if it.next().is_some() {
            return Err(IoError::Parse {
                location: format!("line {}", lineno + 1),
                message: "trailing tokens".into(),
            });
        }
        max_vertex = Some(max_vertex.map_or(tail.max(head), |m: usize| m.max(tail).max(head)));
        edges.push((tail, head));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    Ok(DirectedGraph::new(n, edges)?)
}

pub fn load_graph(path: &Path, format: GraphFormat) -> Result<DirectedGraph, IoError> {
    let text = std::fs::read_to_string(path)?;
    match format {
        GraphFormat::Json => graph_from_json(&text),
        GraphFormat::EdgeList => graph_from_edge_list(&text),
    }
}

/// Guesses the format from the extension: `.json` is JSON, everything else
/// an edge list.
pub fn load_graph_auto(path: &Path) -> Result<DirectedGraph, IoError> {
    let format = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => GraphFormat::Json,
        _ => GraphFormat::EdgeList,
    };
    load_graph(path, format)
}

#[derive(Debug, Serialize, Deserialize)]
struct LayoutJson {
    ordering: Vec<usize>,
    stacks: BTreeMap<String, usize>,
}

pub fn layout_to_json(l: &Layout) -> String {
    let stacks: BTreeMap<String, usize> = l
        .graph
        .edges()
        .iter()
        .zip(&l.stacks)
        .map(|(&(u, v), &s)| (format!("{}-{}", u, v), s))
        .collect();
    let doc = LayoutJson { ordering: l.ordering.clone(), stacks };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// Reads a layout back over the given graph.
pub fn layout_from_json(text: &str, g: &DirectedGraph) -> Result<Layout, IoError> {
    let parsed: LayoutJson = serde_json::from_str(text).map_err(|e| IoError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let mut stacks = vec![usize::MAX; g.edge_count()];
    for (key, s) in &parsed.stacks {
        let mut it = key.split('-');
        let bad = || IoError::Parse {
            location: format!("stacks key {:?}", key),
            message: "expected `tail-head`".into(),
        };
        let u: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let v: usize = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let idx = g.edges().binary_search(&(u, v)).map_err(|_| IoError::Parse {
            location: format!("stacks key {:?}", key),
            message: "edge not in graph".into(),
        })?;
        stacks[idx] = *s;
    }
    if stacks.contains(&usize::MAX) {
        return Err(IoError::Parse {
            location: "stacks".into(),
            message: "assignment does not cover every edge".into(),
        });
    }
    Layout::new(std::sync::Arc::new(g.clone()), parsed.ordering, stacks).map_err(|e| {
        IoError::Parse { location: "layout".into(), message: e.to_string() }
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct SequenceJson {
    base: (usize, usize),
    steps: Vec<(usize, (usize, usize))>,
}

pub fn sequence_to_json(seq: &crate::twotree::ConstructionSequence) -> String {
    let doc = SequenceJson { base: seq.base, steps: seq.steps.clone() };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn sequence_from_json(text: &str) -> Result<crate::twotree::ConstructionSequence, IoError> {
    let parsed: SequenceJson = serde_json::from_str(text).map_err(|e| IoError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    Ok(crate::twotree::ConstructionSequence { base: parsed.base, steps: parsed.steps })
}

#[derive(Debug, Serialize, Deserialize)]
struct PartitionJson {
    apex: Vec<usize>,
    parts: Vec<Vec<usize>>,
    q1: Vec<Vec<usize>>,
    q2: Vec<Vec<usize>>,
}

pub fn partition_to_json(hp: &DirectedHPartition) -> String {
    let doc = PartitionJson {
        apex: hp.apex.clone(),
        parts: hp.parts.clone(),
        q1: (0..hp.parts.len()).map(|p| hp.q1(p).to_vec()).collect(),
        q2: (0..hp.parts.len()).map(|p| hp.q2(p).to_vec()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// `part_of` sidecar for a partition: vertex-indexed part ids.
pub fn part_of_to_json(hp: &DirectedHPartition) -> String {
    #[derive(Serialize)]
    struct Sidecar {
        part_of: Vec<usize>,
    }
    let mut s = serde_json::to_string_pretty(&Sidecar { part_of: hp.part_of.clone() })
        .expect("serializable");
    s.push('\n');
    s
}

pub fn bound_report_to_json(r: &BoundReport) -> String {
    #[derive(Serialize)]
    struct Doc {
        f: usize,
        h: usize,
        p: usize,
        paper_ceiling: u64,
        route: String,
        run_bound: u64,
        s: usize,
        stacks: usize,
        t: usize,
        w: usize,
    }
    let doc = Doc {
        f: r.f,
        h: r.h,
        p: r.p,
        paper_ceiling: r.paper_ceiling,
        route: format!("{:?}", r.route),
        run_bound: r.run_bound,
        s: r.s,
        stacks: r.stacks,
        t: r.t,
        w: r.w,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn graph_to_dot(g: &DirectedGraph) -> String {
    let mut out = String::from("digraph {\n  rankdir=LR;\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", v, g.name_of(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {} -> {};", u, v);
    }
    out.push_str("}\n");
    out
}

pub fn block_cut_tree_to_dot(bct: &BlockCutTree) -> String {
    let mut out = String::from("graph {\n");
    for (i, b) in bct.blocks.iter().enumerate() {
        let verts: Vec<String> = b.vertices.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            out,
            "  b{} [shape=box, label=\"B{} {{{}}}\"];",
            i,
            i,
            verts.join(",")
        );
    }
    for &v in &bct.cut_vertices {
        let _ = writeln!(out, "  c{} [shape=circle, label=\"{}\"];", v, v);
    }
    for &(b, v) in &bct.tree_edges {
        let _ = writeln!(out, "  b{} -- c{};", b, v);
    }
    out.push_str("}\n");
    out
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

/// Deterministic arc diagram: vertices equally spaced on a baseline in
/// ordering order, edges as semicircular arcs above it, stroke color keyed
/// to the stack id (12-color palette, cycling), arrowheads at edge heads.
pub fn render_arc_diagram(l: &Layout) -> String {
    let n = l.graph.n();
    let spacing = 60usize;
    let radius_unit = spacing / 2;
    let baseline = 40 + radius_unit * n.max(1);
    let width = spacing * (n + 1);
    let height = baseline + 60;
    let x = |pos: usize| spacing * (pos + 1);
    let pos = l.positions();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        width, height, width, height
    );
    out.push_str("  <defs>\n");
    for (i, color) in PALETTE.iter().enumerate() {
        let _ = writeln!(
            out,
            "    <marker id=\"arrow{}\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
             markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\
             <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"{}\"/></marker>",
            i, color
        );
    }
    out.push_str("  </defs>\n");
    let _ = writeln!(
        out,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\"/>",
        x(0),
        baseline,
        x(n.saturating_sub(1)),
        baseline
    );
    // Arcs, widest first so tight arcs draw on top.
    let mut order: Vec<usize> = (0..l.graph.edge_count()).collect();
    order.sort_by_key(|&i| {
        let (u, v) = l.graph.edges()[i];
        std::cmp::Reverse(pos[u].abs_diff(pos[v]))
    });
    for i in order {
        let (u, v) = l.graph.edges()[i];
        let stack = l.stacks[i];
        let color = PALETTE[stack % PALETTE.len()];
        let (a, b) = (x(pos[u]), x(pos[v]));
        let r = a.abs_diff(b) / 2;
        let sweep = if a < b { 1 } else { 0 };
        let _ = writeln!(
            out,
            "  <path d=\"M {} {} A {} {} 0 0 {} {} {}\" fill=\"none\" stroke=\"{}\" \
             stroke-width=\"2\" marker-end=\"url(#arrow{})\"/>",
            a,
            baseline,
            r,
            r,
            sweep,
            b,
            baseline,
            color,
            stack % PALETTE.len()
        );
    }
    for (p, &v) in l.ordering.iter().enumerate() {
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#222\"/>",
            x(p),
            baseline
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\" \
             font-family=\"monospace\">{}</text>",
            x(p),
            baseline + 20,
            l.graph.name_of(v)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::greedy_stack_assignment;

    #[test]
    fn graph_json_roundtrip_is_canonical() {
        let g = DirectedGraph::new(3, vec![(0, 1), (2, 1)]).unwrap();
        let once = graph_to_json(&g);
        let again = graph_to_json(&graph_from_json(&once).unwrap());
        assert_eq!(once, again);
        assert!(once.ends_with('\n'));

        let named = crate::adversary::gen_three_fence();
        let text = graph_to_json(&named);
        let back = graph_from_json(&text).unwrap();
        assert_eq!(named, back);
    }

    #[test]
    fn graph_json_errors() {
        assert!(matches!(
            graph_from_json("{\"n\": 2"),
            Err(IoError::Parse { .. })
        ));
        // Loop violates the invariants.
        assert!(matches!(
            graph_from_json("{\"n\": 2, \"edges\": [[0, 0]]}"),
            Err(IoError::InvariantViolation(_))
        ));
    }

    #[test]
    fn edge_list_parsing() {
        let g = graph_from_edge_list("0 1\n1 2 # comment\n# full comment\n\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);

        assert!(matches!(
            graph_from_edge_list("0\n"),
            Err(IoError::Parse { .. })
        ));
        assert!(matches!(
            graph_from_edge_list("0 1 2\n"),
            Err(IoError::Parse { .. })
        ));
        assert!(matches!(
            graph_from_edge_list("0 zero\n"),
            Err(IoError::Parse { .. })
        ));
    }

    #[test]
    fn sequence_json_roundtrip() {
        let g = crate::adversary::gen_three_fence();
        let seq = crate::twotree::build_construction_sequence(&g, (0, 1)).unwrap();
        let text = sequence_to_json(&seq);
        let back = sequence_from_json(&text).unwrap();
        assert_eq!(back, seq);
        assert_eq!(sequence_to_json(&back), text);
    }

    #[test]
    fn layout_json_roundtrip() {
        let g = crate::adversary::gen_path_matching(3);
        let order: Vec<usize> = (0..6).collect();
        let l = greedy_stack_assignment(&g, &order).unwrap();
        let text = layout_to_json(&l);
        let back = layout_from_json(&text, &g).unwrap();
        assert_eq!(back.ordering, l.ordering);
        assert_eq!(back.stacks, l.stacks);
        assert_eq!(layout_to_json(&back), text);
    }

    #[test]
    fn svg_has_expected_elements() {
        let g = crate::adversary::gen_path_matching(3);
        let order: Vec<usize> = (0..6).collect();
        let l = greedy_stack_assignment(&g, &order).unwrap();
        let svg = render_arc_diagram(&l);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg.matches("marker-end").count(), g.edge_count());
        // Three stacks, three arc colors.
        let colors: std::collections::HashSet<&str> = PALETTE
            .iter()
            .copied()
            .filter(|c| svg.contains(&format!("stroke=\"{}\"", c)))
            .collect();
        assert_eq!(colors.len(), 3);

        // Empty edge set: baseline only.
        let e = DirectedGraph::new(2, vec![]).unwrap();
        let l = greedy_stack_assignment(&e, &[0, 1]).unwrap();
        let svg = render_arc_diagram(&l);
        assert_eq!(svg.matches("marker-end").count(), 0);
        assert!(svg.contains("<line"));
    }

    #[test]
    fn load_from_files() {
        let dir = tempfile::tempdir().unwrap();
        let g = crate::adversary::gen_path_matching(2);

        let json_path = dir.path().join("g.json");
        std::fs::write(&json_path, graph_to_json(&g)).unwrap();
        assert_eq!(load_graph_auto(&json_path).unwrap(), g);

        let list_path = dir.path().join("g.edges");
        std::fs::write(&list_path, "0 1\n1 2\n2 3\n0 2\n1 3\n").unwrap();
        let loaded = load_graph_auto(&list_path).unwrap();
        assert!(loaded.same_structure(&g));

        assert!(matches!(
            load_graph(&list_path, GraphFormat::Json),
            Err(IoError::Parse { .. })
        ));
    }

    #[test]
    fn dot_export() {
        let g = DirectedGraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let dot = graph_to_dot(&g);
        assert!(dot.contains("0 -> 1;"));
        let bct = crate::graph::block_cut_tree(&g, None).unwrap();
        let dot = block_cut_tree_to_dot(&bct);
        assert!(dot.starts_with("graph {"));
    }
}
