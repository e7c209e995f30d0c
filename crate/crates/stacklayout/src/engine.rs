//! Layout composition: 1-stack layouts of transitive parts, monotone block
//! layouts, block-cut-tree combination, star-forest decomposition,
//! partition expansion, blockwise composition, and the end-to-end
//! constant-stack pipeline for outerplanar DAGs.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{
    block_cut_tree, is_outerplanar, BlockCutTree, DirectedGraph, Edge, GraphError, Vertex,
};
use crate::hpartition::{
    certificate_is_valid, constructive_certificate, construct_directed_h_partition,
    CutCoverCertificate, DirectedHPartition, PartitionError,
};
use crate::layout::{
    exact_min_stacks_for_ordering, greedy_stack_assignment, Layout, LayoutError,
};
use crate::oracle::{exact_twist_number, OracleBudget, OracleError};
use crate::twotree::{
    build_construction_sequence, build_construction_tree, is_monotone_with_base,
    transitive_set_below, ConstructionTree, Label, TwoTreeError,
};

/// Stack bound for monotone outerplanar DAGs via the twist-number bound:
/// twice the twist-4 coloring bound.
pub const MONOTONE_STACK_BOUND: u64 = 128;
/// Stack bound for block-monotone outerplanar DAGs: `2 + 2 * 128`.
pub const BLOCK_MONOTONE_STACK_BOUND: u64 = 258;
/// Per-block expansion bound `3 * 4 * 258 + 1`.
pub const BLOCK_EXPANSION_STACK_BOUND: u64 = 3097;
/// The constant stack bound for outerplanar DAGs: `4 * 3097 * 2 * 1`.
pub const OUTERPLANAR_STACK_CEILING: u64 = 24776;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("vertex {0} is not monotone in the construction tree")]
    NotMonotoneVertex(Vertex),
    #[error("block is not monotone with respect to the given base edge")]
    NotMonotone,
    #[error("no layout supplied for block {0}")]
    MissingBlockLayout(usize),
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("underlying undirected graph is not a forest")]
    NotAForest,
    #[error("graph has a directed cycle")]
    CyclicGraph,
    #[error("certificate of part {part} covers no endpoint of edge {edge:?}")]
    CertificateInsufficient { part: usize, edge: Edge },
    #[error("expansion spans conflict: {0}")]
    SpanConflict(String),
    #[error("composition premise fails at the part of vertex {cut_apex}: {detail}")]
    PremiseViolated { cut_apex: Vertex, detail: String },
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    TwoTree(#[from] TwoTreeError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A layout of an induced subgraph together with the map back to the host
/// graph's vertex ids.
#[derive(Debug, Clone)]
pub struct SubgraphLayout {
    pub layout: Layout,
    pub to_global: Vec<Vertex>,
}

impl SubgraphLayout {
    pub fn global_ordering(&self) -> Vec<Vertex> {
        self.layout.ordering.iter().map(|&v| self.to_global[v]).collect()
    }
}

/// One-stack layout of a directed forest: each subtree occupies a
/// contiguous interval, children on the side their edge direction demands.
pub fn forest_layout(g: &DirectedGraph) -> Result<Layout, EngineError> {
    let adj = g.undirected_adjacency();
    if g.edge_count() + g.connected_components().len() != g.n() {
        return Err(EngineError::NotAForest);
    }
    let mut ordering = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    // emit(v, parent) appends the interval of v's subtree.
    fn emit(
        v: Vertex,
        parent: Option<Vertex>,
        g: &DirectedGraph,
        adj: &[Vec<Vertex>],
        seen: &mut [bool],
        out: &mut Vec<Vertex>,
    ) {
        seen[v] = true;
        let children: Vec<Vertex> =
            adj[v].iter().copied().filter(|&c| Some(c) != parent).collect();
        for &c in children.iter().filter(|&&c| g.has_edge(c, v)) {
            emit(c, Some(v), g, adj, seen, out);
        }
        out.push(v);
        for &c in children.iter().filter(|&&c| g.has_edge(v, c)) {
            emit(c, Some(v), g, adj, seen, out);
        }
    }
    for root in 0..g.n() {
        if !seen[root] {
            emit(root, None, g, &adj, &mut seen, &mut ordering);
        }
    }
    let stacks = vec![0; g.edge_count()];
    let layout = Layout::new(Arc::new(g.clone()), ordering, stacks)?;
    debug_assert!(layout.verify().is_ok());
    Ok(layout)
}

/// One-stack layout of the transitive subgraph below the monotone vertex
/// `w`: the two transitive fans hanging off `w`'s parent edges laid out in
/// their unique topological orders, concatenated.
pub fn layout_transitive_part(
    g: &DirectedGraph,
    tree: &ConstructionTree,
    w: Vertex,
) -> Result<SubgraphLayout, EngineError> {
    if tree.label[w] != Label::M {
        return Err(EngineError::NotMonotoneVertex(w));
    }
    let members = transitive_set_below(tree, w);
    let member_set: HashSet<Vertex> = members.iter().copied().collect();

    // Children of the (undirected) edge {p, q} inside the part.
    let children_of = |p: Vertex, q: Vertex| -> Vec<Vertex> {
        members
            .iter()
            .copied()
            .filter(|&z| {
                tree.parent_edge[z].is_some_and(|(a, b)| {
                    (a, b) == (p, q) || (a, b) == (q, p)
                })
            })
            .collect()
    };
    // Interior of the fan over the directed edge (a, b), in its unique
    // topological order.
    fn interior(
        a: Vertex,
        b: Vertex,
        children_of: &dyn Fn(Vertex, Vertex) -> Vec<Vertex>,
        g: &DirectedGraph,
        out: &mut Vec<Vertex>,
    ) {
        for z in children_of(a, b) {
            // Transitive child: a -> z -> b.
            debug_assert!(g.has_edge(a, z) && g.has_edge(z, b));
            interior(a, z, children_of, g, out);
            out.push(z);
            interior(z, b, children_of, g, out);
        }
    }

    let mut order_global = Vec::with_capacity(members.len());
    match tree.parent_edge[w] {
        None if w == tree.root => order_global.push(w),
        _ => {
            // Anchor edges between w and its parents (for the base head the
            // parent edge is the base itself).
            let anchors: Vec<(Vertex, Vertex)> = match tree.parent_edge[w] {
                Some((v, u)) => {
                    let left = g.has_edge(w, v);
                    if left {
                        vec![(w, v), (w, u)]
                    } else {
                        vec![(v, w), (u, w)]
                    }
                }
                None => vec![tree.base],
            };
            let w_first = anchors[0].0 == w;
            if w_first {
                order_global.push(w);
            }
            for (a, b) in anchors {
                interior(a, b, &children_of, g, &mut order_global);
            }
            if !w_first {
                order_global.push(w);
            }
        }
    }
    debug_assert_eq!(order_global.len(), members.len());

    let (sub, to_global) = g.induced_subgraph(&members);
    let from_global: HashMap<Vertex, usize> =
        to_global.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ordering: Vec<usize> = order_global
        .iter()
        .filter(|v| member_set.contains(v))
        .map(|v| from_global[v])
        .collect();
    let stacks = vec![0; sub.edge_count()];
    let layout = Layout::new(Arc::new(sub), ordering, stacks)?;
    debug_assert!(layout.verify().is_ok(), "transitive part layout must be 1-stack");
    Ok(SubgraphLayout { layout, to_global })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutStrategy {
    /// Enumerate topological orderings for the minimum twist, then color
    /// that ordering exactly.
    ExactSmall,
    /// Split at the base edge into the two halves with at most one vertex
    /// on the base, order each by greedy insertion, first-fit color.
    Heuristic,
}

/// Lays out a monotone maximal outerplanar DAG (monotone with respect to
/// `base`).
pub fn layout_monotone_block(
    b: &DirectedGraph,
    base: Edge,
    strategy: LayoutStrategy,
) -> Result<Layout, EngineError> {
    if !b.has_edge(base.0, base.1) {
        return Err(EngineError::EdgeMissing(base.0, base.1));
    }
    if !is_monotone_with_base(b, base) {
        return Err(EngineError::NotMonotone);
    }
    match strategy {
        LayoutStrategy::ExactSmall => {
            let budget = OracleBudget {
                max_orderings: 5_000_000,
                max_edges_for_coloring: b.edge_count().max(24),
                ..OracleBudget::default()
            };
            let ordering = match exact_twist_number(b, &budget) {
                Ok((_, witness)) => witness,
                Err(OracleError::BudgetExceeded(_)) => {
                    return layout_monotone_block(b, base, LayoutStrategy::Heuristic)
                }
                Err(e) => return Err(e.into()),
            };
            let (_, layout) =
                exact_min_stacks_for_ordering(b, &ordering, b.edge_count().max(24))?;
            Ok(layout)
        }
        LayoutStrategy::Heuristic => {
            let seq = build_construction_sequence(b, base)?;
            let tree = build_construction_tree(&seq, b)?;
            let (x, y) = base;
            // The two halves: base endpoints plus the construction subtree
            // of each vertex stacked onto the base.
            let base_children: Vec<Vertex> = (0..b.n())
                .filter(|&z| tree.parent_edge[z] == Some(base))
                .collect();
            let mut halves: Vec<Vec<Vertex>> = Vec::new();
            for &z in &base_children {
                let mut half = vec![x, y];
                let mut stack = vec![z];
                while let Some(v) = stack.pop() {
                    half.push(v);
                    stack.extend(tree.children[v].iter().copied());
                }
                half.sort_unstable();
                halves.push(half);
            }
            if halves.is_empty() {
                halves.push(vec![x.min(y), x.max(y)]);
            }

            let mut half_layouts: Vec<SubgraphLayout> = Vec::new();
            for half in &halves {
                let (sub, to_global) = b.induced_subgraph(half);
                let from_global: HashMap<Vertex, usize> =
                    to_global.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let sub_base = (from_global[&x], from_global[&y]);
                let ordering = insertion_ordering(&sub, sub_base)?;
                let layout = greedy_stack_assignment(&sub, &ordering)?;
                half_layouts.push(SubgraphLayout { layout, to_global });
            }

            // Merge: both halves contain x and y in the same order; the
            // merged ordering concatenates matching segments, and the two
            // halves use disjoint stack sets.
            let seg = |sl: &SubgraphLayout| -> [Vec<Vertex>; 3] {
                let order = sl.global_ordering();
                let px = order.iter().position(|&v| v == x).unwrap();
                let py = order.iter().position(|&v| v == y).unwrap();
                debug_assert!(px < py);
                [
                    order[..px].to_vec(),
                    order[px + 1..py].to_vec(),
                    order[py + 1..].to_vec(),
                ]
            };
            let mut merged = Vec::with_capacity(b.n());
            let segments: Vec<[Vec<Vertex>; 3]> = half_layouts.iter().map(seg).collect();
            for part in 0..3 {
                if part == 1 {
                    merged.push(x);
                }
                if part == 2 {
                    merged.push(y);
                }
                for s in &segments {
                    merged.extend(s[part].iter().copied());
                }
            }

            let mut offset = 0usize;
            let mut assignment: HashMap<Edge, usize> = HashMap::new();
            for sl in &half_layouts {
                for (i, &(lu, lv)) in sl.layout.graph.edges().iter().enumerate() {
                    let e = (sl.to_global[lu], sl.to_global[lv]);
                    assignment.entry(e).or_insert(offset + sl.layout.stacks[i]);
                }
                offset += sl.layout.stack_count();
            }
            let stacks: Vec<usize> =
                b.edges().iter().map(|e| assignment[e]).collect();
            let mut layout = Layout::new(Arc::new(b.clone()), merged, stacks)?;
            layout.compact();
            Ok(layout)
        }
    }
}

/// Topological ordering by greedy insertion: each monotone child lands
/// directly before (left children) or after (right children) its parents.
fn insertion_ordering(b: &DirectedGraph, base: Edge) -> Result<Vec<Vertex>, EngineError> {
    let seq = build_construction_sequence(b, base)?;
    let (x, y) = base;
    let mut order = vec![x, y];
    for &(u, (v, w)) in &seq.steps {
        let pv = order.iter().position(|&z| z == v).unwrap();
        let pw = order.iter().position(|&z| z == w).unwrap();
        if b.has_edge(u, v) {
            // Left child: directly before the earlier parent.
            order.insert(pv.min(pw), u);
        } else {
            order.insert(pv.max(pw) + 1, u);
        }
    }
    Ok(order)
}

/// Combines per-block layouts around the block-cut tree: children of each
/// cut vertex are inserted directly around it, blocks at even and odd
/// levels reuse two disjoint stack sets of size `s + 1`, with all edges
/// incident to the shared cut vertex moved to the set's extra stack.
pub fn combine_block_layouts(
    g: &DirectedGraph,
    bct: &BlockCutTree,
    per_block: &[SubgraphLayout],
) -> Result<Layout, EngineError> {
    if per_block.len() != bct.blocks.len() {
        return Err(EngineError::MissingBlockLayout(per_block.len()));
    }
    for (i, (block, sl)) in bct.blocks.iter().zip(per_block).enumerate() {
        if sl.to_global != block.vertices {
            return Err(EngineError::MissingBlockLayout(i));
        }
    }
    let s_max = per_block.iter().map(|sl| sl.layout.stack_count()).max().unwrap_or(0);
    let set_size = s_max + 1;
    let levels = bct.block_levels();
    let parents = bct.parent_cut_vertex();

    let mut block_order: Vec<usize> = (0..bct.blocks.len()).collect();
    block_order.sort_by_key(|&b| (levels[b], b));

    let mut ordering: Vec<Vertex> = Vec::with_capacity(g.n());
    let mut assignment: HashMap<Edge, usize> = HashMap::new();
    for &b in &block_order {
        let sl = &per_block[b];
        let global = sl.global_ordering();
        let set_base = (levels[b] % 2) * set_size;
        match parents[b] {
            None => {
                debug_assert!(ordering.is_empty());
                ordering.extend(global.iter().copied());
            }
            Some(v) => {
                let pv_local = global.iter().position(|&z| z == v).expect("cut vertex in block");
                let left = &global[..pv_local];
                let right = &global[pv_local + 1..];
                let pv_global = ordering.iter().position(|&z| z == v).expect("parent placed");
                // Insert left part directly before v, right part directly
                // after, preserving internal order.
                for (k, &z) in left.iter().enumerate() {
                    ordering.insert(pv_global + k, z);
                }
                let pv_global = pv_global + left.len();
                for (k, &z) in right.iter().enumerate() {
                    ordering.insert(pv_global + 1 + k, z);
                }
            }
        }
        for (i, &(lu, lv)) in sl.layout.graph.edges().iter().enumerate() {
            let e = (sl.to_global[lu], sl.to_global[lv]);
            let incident_to_parent = parents[b].is_some_and(|v| e.0 == v || e.1 == v);
            let id = if incident_to_parent {
                set_base + s_max
            } else {
                set_base + sl.layout.stacks[i]
            };
            assignment.insert(e, id);
        }
    }
    let stacks: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| assignment.get(e).copied().ok_or(EngineError::MissingBlockLayout(usize::MAX)))
        .collect::<Result<_, _>>()?;
    let mut layout = Layout::new(Arc::new(g.clone()), ordering, stacks)?;
    layout.compact();
    Ok(layout)
}

/// A partition of an outerplanar edge set into at most four star forests.
#[derive(Debug, Clone)]
pub struct StarForestDecomposition {
    /// Edge classes; their union is the input edge set.
    pub forests: Vec<Vec<Edge>>,
    /// Per forest: center vertex of each star, indexed by the star id
    /// assigned to the edges.
    pub centers: Vec<Vec<Vertex>>,
    /// Per forest: parallel to `forests[f]`, the star id of each edge.
    pub star_of: Vec<Vec<usize>>,
}

impl StarForestDecomposition {
    pub fn forest_count(&self) -> usize {
        self.forests.len()
    }
}

/// Splits an outerplanar edge set into at most four star forests: a
/// 2-degeneracy orientation yields two forests, and a depth-parity split
/// turns each forest into two star forests. Edge sets with at most 16
/// edges first try an exact search for three or fewer.
pub fn star_forest_decomposition(
    n: usize,
    edges: &[Edge],
) -> Result<StarForestDecomposition, EngineError> {
    let g = DirectedGraph::new(n, edges.iter().copied()).map_err(EngineError::from)?;
    if !is_outerplanar(&g) {
        return Err(EngineError::NotOuterplanar);
    }
    if edges.len() <= 16 {
        for target in 1..=3 {
            if let Some(classes) = exact_star_forests(n, edges, target) {
                return Ok(finish_decomposition(n, classes));
            }
        }
    }

    // Orientation with out-degree <= 2 from repeated minimum-degree
    // removal.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push(i);
        adj[v].push(i);
    }
    let mut removed_edge = vec![false; edges.len()];
    let mut removed_vertex = vec![false; n];
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); n]; // edge indices
    for _ in 0..n {
        let Some(v) = (0..n)
            .filter(|&v| !removed_vertex[v])
            .min_by_key(|&v| (degree[v], v))
        else {
            break;
        };
        removed_vertex[v] = true;
        for &ei in &adj[v] {
            if removed_edge[ei] {
                continue;
            }
            removed_edge[ei] = true;
            out_of[v].push(ei);
            let (a, b) = edges[ei];
            let other = if a == v { b } else { a };
            degree[other] -= 1;
        }
        debug_assert!(out_of[v].len() <= 2, "outerplanar graphs are 2-degenerate");
    }

    // Forest split by out-slot, then star split by depth parity.
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); 4];
    for slot in 0..2 {
        let forest: Vec<Edge> = (0..n)
            .filter_map(|v| out_of[v].get(slot).map(|&ei| edges[ei]))
            .collect();
        // Root each component at its minimum vertex; an edge joins the
        // class of its parent-side depth parity.
        let mut fadj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        for &(u, v) in &forest {
            fadj.entry(u).or_default().push(v);
            fadj.entry(v).or_default().push(u);
        }
        let mut depth: HashMap<Vertex, usize> = HashMap::new();
        let mut verts: Vec<Vertex> = fadj.keys().copied().collect();
        verts.sort_unstable();
        for &root in &verts {
            if depth.contains_key(&root) {
                continue;
            }
            depth.insert(root, 0);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &fadj[&u] {
                    if !depth.contains_key(&w) {
                        depth.insert(w, depth[&u] + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        for &(u, v) in &forest {
            let parent_depth = depth[&u].min(depth[&v]);
            classes[slot * 2 + parent_depth % 2].push((u, v));
        }
    }
    classes.retain(|c| !c.is_empty());
    if classes.is_empty() {
        classes.push(Vec::new());
    }
    Ok(finish_decomposition(n, classes))
}

/// Exhaustive search for a partition into `target` star forests.
fn exact_star_forests(n: usize, edges: &[Edge], target: usize) -> Option<Vec<Vec<Edge>>> {
    fn class_is_star_forest(n: usize, class: &[Edge]) -> bool {
        let mut deg = vec![0usize; n];
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for &(u, v) in class {
            let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
            if ru == rv {
                return false; // cycle
            }
            dsu[ru] = rv;
            deg[u] += 1;
            deg[v] += 1;
        }
        // Star components: no edge joins two vertices of degree >= 2.
        class.iter().all(|&(u, v)| deg[u] < 2 || deg[v] < 2)
    }
    fn assign(
        i: usize,
        n: usize,
        edges: &[Edge],
        target: usize,
        classes: &mut Vec<Vec<Edge>>,
    ) -> bool {
        if i == edges.len() {
            return true;
        }
        for c in 0..target {
            classes[c].push(edges[i]);
            if class_is_star_forest(n, &classes[c])
                && assign(i + 1, n, edges, target, classes)
            {
                return true;
            }
            classes[c].pop();
        }
        false
    }
    let mut classes = vec![Vec::new(); target];
    if assign(0, n, edges, target, &mut classes) {
        classes.retain(|c| !c.is_empty());
        if classes.is_empty() {
            classes.push(Vec::new());
        }
        Some(classes)
    } else {
        None
    }
}

fn finish_decomposition(n: usize, classes: Vec<Vec<Edge>>) -> StarForestDecomposition {
    let mut centers = Vec::with_capacity(classes.len());
    let mut star_of = Vec::with_capacity(classes.len());
    for class in &classes {
        // Components of the class are stars; the center is the unique
        // vertex of degree >= 2, or the smaller endpoint of a lone edge.
        let mut deg = vec![0usize; n];
        for &(u, v) in class {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut star_ids: HashMap<Vertex, usize> = HashMap::new();
        let mut class_centers = Vec::new();
        let mut ids = Vec::with_capacity(class.len());
        for &(u, v) in class {
            let center = if deg[u] >= 2 {
                u
            } else if deg[v] >= 2 {
                v
            } else {
                u.min(v)
            };
            let next = class_centers.len();
            let id = *star_ids.entry(center).or_insert_with(|| {
                class_centers.push(center);
                next
            });
            ids.push(id);
        }
        centers.push(class_centers);
        star_of.push(ids);
    }
    StarForestDecomposition { forests: classes, centers, star_of }
}

/// A layout of `g` that expands an ordering of the quotient: every part
/// occupies a contiguous span, in quotient-ordering order.
#[derive(Debug, Clone)]
pub struct ExpandingLayout {
    pub layout: Layout,
    pub host_ordering: Vec<usize>,
    /// Half-open index interval per part in `layout.ordering`.
    pub part_spans: Vec<(usize, usize)>,
    /// Actual budget values: intra-part stacks `s`, host stacks `h`,
    /// forests `f`, cover width `w`.
    pub s: usize,
    pub h: usize,
    pub f: usize,
    pub w: usize,
}

/// Expands an ordering of the quotient into a layout of `g`: parts reuse a
/// shared set of `s` stacks internally; inter-part edges get one stack per
/// (host stack, star forest, certificate slot), at most `f * w * h + s`
/// stacks in total.
pub fn expand_partition_layout(
    g: &DirectedGraph,
    hp: &DirectedHPartition,
    h_layout: &Layout,
    part_layouts: &[SubgraphLayout],
    covers: &[CutCoverCertificate],
) -> Result<ExpandingLayout, EngineError> {
    let parts = hp.parts.len();
    if *h_layout.graph != hp.quotient {
        return Err(EngineError::SpanConflict("host layout is not over the quotient".into()));
    }
    if part_layouts.len() != parts || covers.len() != parts {
        return Err(EngineError::SpanConflict(format!(
            "{} parts, {} layouts, {} covers",
            parts,
            part_layouts.len(),
            covers.len()
        )));
    }
    for (p, sl) in part_layouts.iter().enumerate() {
        if sl.to_global != hp.parts[p] {
            return Err(EngineError::SpanConflict(format!(
                "layout of part {} covers {:?}, expected {:?}",
                p, sl.to_global, hp.parts[p]
            )));
        }
    }

    // Ordering: replace each quotient vertex by its part's internal order.
    let mut ordering = Vec::with_capacity(g.n());
    let mut part_spans = vec![(0usize, 0usize); parts];
    for &vp in &h_layout.ordering {
        let start = ordering.len();
        ordering.extend(part_layouts[vp].global_ordering());
        part_spans[vp] = (start, ordering.len());
    }
    if ordering.len() != g.n() {
        return Err(EngineError::SpanConflict("parts do not cover the graph".into()));
    }

    let s = part_layouts.iter().map(|sl| sl.layout.stack_count()).max().unwrap_or(0);

    // Star forests per host stack.
    let mut host_stacks: Vec<Vec<Edge>> = vec![Vec::new(); h_layout.stack_count()];
    for (i, &he) in hp.quotient.edges().iter().enumerate() {
        host_stacks[h_layout.stacks[i]].push(he);
    }
    let decompositions: Vec<StarForestDecomposition> = host_stacks
        .iter()
        .map(|stack_edges| star_forest_decomposition(parts, stack_edges))
        .collect::<Result<_, _>>()?;
    let f = decompositions.iter().map(|d| d.forest_count()).max().unwrap_or(1).max(1);
    let w = covers.iter().map(|c| c.cover.len()).max().unwrap_or(1).max(1);
    let h = h_layout.stack_count();

    // Stack per edge: intra-part edges use 0..s; the edge for host edge in
    // stack S, forest F, slot j uses s + S*(f*w) + F*w + j.
    let mut assignment: HashMap<Edge, usize> = HashMap::new();
    for sl in part_layouts {
        for (i, &(lu, lv)) in sl.layout.graph.edges().iter().enumerate() {
            let e = (sl.to_global[lu], sl.to_global[lv]);
            assignment.insert(e, sl.layout.stacks[i]);
        }
    }
    // Index stars: per (host stack, forest, edge) -> (star id, center).
    let mut star_lookup: HashMap<Edge, (usize, usize, usize)> = HashMap::new();
    for (sidx, d) in decompositions.iter().enumerate() {
        for (fidx, forest) in d.forests.iter().enumerate() {
            for (k, &he) in forest.iter().enumerate() {
                let star = d.star_of[fidx][k];
                let center = d.centers[fidx][star];
                star_lookup.insert(he, (sidx, fidx, center));
            }
        }
    }
    for &(u, v) in g.edges() {
        let (pu, pv) = (hp.part_of[u], hp.part_of[v]);
        if pu == pv {
            continue;
        }
        let he = if hp.quotient.has_edge(pu, pv) { (pu, pv) } else { (pv, pu) };
        let &(sidx, fidx, center) = star_lookup
            .get(&he)
            .ok_or_else(|| EngineError::SpanConflict(format!("host edge {:?} unassigned", he)))?;
        let slot = covers[center]
            .cover
            .iter()
            .position(|&c| c == u || c == v)
            .ok_or(EngineError::CertificateInsufficient { part: center, edge: (u, v) })?;
        assignment.insert((u, v), s + sidx * (f * w) + fidx * w + slot);
    }

    let stacks: Vec<usize> = g.edges().iter().map(|e| assignment[e]).collect();
    let mut layout = Layout::new(Arc::new(g.clone()), ordering, stacks)?;
    layout.compact();
    Ok(ExpandingLayout {
        layout,
        host_ordering: h_layout.ordering.clone(),
        part_spans,
        s,
        h,
        f,
        w,
    })
}

/// Per-block input to the blockwise composition.
#[derive(Debug, Clone)]
pub struct BlockExpander {
    /// Index of the block in the quotient's block-cut tree.
    pub block: usize,
    /// Local vertex id of the block subgraph to vertex of `g`.
    pub vertex_to_global: Vec<Vertex>,
    /// Local part index to part index of the full partition.
    pub part_to_global: Vec<usize>,
    pub expanding: ExpandingLayout,
}

/// Composes per-block expanding layouts along the quotient's block-cut
/// tree: each child block is spliced directly around its attachment edge,
/// with stacks drawn from disjoint groups per (level parity, path,
/// multiplicity class, alternation); at most `4 * s * p * t` stacks.
pub fn compose_blockwise(
    g: &DirectedGraph,
    hp: &DirectedHPartition,
    bct: &BlockCutTree,
    expanders: &[BlockExpander],
    p: usize,
    t: usize,
) -> Result<Layout, EngineError> {
    if expanders.len() != bct.blocks.len() {
        return Err(EngineError::MissingBlockLayout(expanders.len()));
    }
    let s = expanders.iter().map(|e| e.expanding.layout.stack_count()).max().unwrap_or(1).max(1);
    let group = |parity: usize, path: usize, class: usize, alt: usize, stack: usize| -> usize {
        debug_assert!(path < p && class < t && alt < 2 && stack < s);
        parity * (p * t * 2 * s) + path * (t * 2 * s) + class * (2 * s) + alt * s + stack
    };

    let levels = bct.block_levels();
    let mut block_order: Vec<usize> = (0..bct.blocks.len()).collect();
    block_order.sort_by_key(|&b| (levels[b], b));

    // Attachment data per non-root block: the single edge of the parent
    // part it touches, which stored path it lies on, its index along that
    // path, and its multiplicity class.
    struct Attach {
        edge: Edge,
        path: usize,
        edge_index: usize,
        class: usize,
    }
    let parents = bct.parent_cut_vertex();
    let mut attach: Vec<Option<Attach>> = (0..bct.blocks.len()).map(|_| None).collect();
    let mut multiplicity: HashMap<(usize, Edge), usize> = HashMap::new();
    for &b in &block_order {
        let Some(vp) = parents[b] else { continue };
        let part_members: HashSet<Vertex> = hp.parts[vp].iter().copied().collect();
        let block_vertices: HashSet<Vertex> = bct.blocks[b]
            .vertices
            .iter()
            .filter(|&&q| q != vp)
            .flat_map(|&q| hp.parts[q].iter().copied())
            .collect();
        let mut boundary: Vec<Vertex> = g
            .edges()
            .iter()
            .filter_map(|&(u, v)| {
                if part_members.contains(&u) && block_vertices.contains(&v) {
                    Some(u)
                } else if part_members.contains(&v) && block_vertices.contains(&u) {
                    Some(v)
                } else {
                    None
                }
            })
            .collect();
        boundary.sort_unstable();
        boundary.dedup();
        if boundary.len() != 2 {
            return Err(EngineError::PremiseViolated {
                cut_apex: hp.apex[vp],
                detail: format!(
                    "child block {} touches the part in {:?}, not a single edge",
                    b, boundary
                ),
            });
        }
        let edge = g.oriented(boundary[0], boundary[1]).map_err(|_| {
            EngineError::PremiseViolated {
                cut_apex: hp.apex[vp],
                detail: format!("attachment pair {:?} is not an edge", boundary),
            }
        })?;
        // Locate the edge on the stored paths.
        let paths = [hp.q1(vp).to_vec(), hp.q2(vp).to_vec()];
        let mut found = None;
        for (pi, path) in paths.iter().enumerate() {
            if let Some(k) = path.windows(2).position(|wnd| (wnd[0], wnd[1]) == edge) {
                found = Some((pi, k));
                break;
            }
        }
        let Some((path, edge_index)) = found else {
            return Err(EngineError::PremiseViolated {
                cut_apex: hp.apex[vp],
                detail: format!("attachment edge {:?} lies on neither stored path", edge),
            });
        };
        if path >= p {
            return Err(EngineError::PremiseViolated {
                cut_apex: hp.apex[vp],
                detail: format!("needs path {} but only {} allowed", path + 1, p),
            });
        }
        let class_slot = multiplicity.entry((vp, edge)).or_insert(0);
        let class = *class_slot;
        *class_slot += 1;
        if class >= t {
            return Err(EngineError::PremiseViolated {
                cut_apex: hp.apex[vp],
                detail: format!("edge {:?} is shared by more than {} child blocks", edge, t),
            });
        }
        attach[b] = Some(Attach { edge, path, edge_index, class });
    }

    let mut ordering: Vec<Vertex> = Vec::with_capacity(g.n());
    let mut assignment: HashMap<Edge, usize> = HashMap::new();
    for &b in &block_order {
        let ex = &expanders[b];
        if ex.block != b {
            return Err(EngineError::MissingBlockLayout(b));
        }
        let global_order: Vec<Vertex> = ex
            .expanding
            .layout
            .ordering
            .iter()
            .map(|&lv| ex.vertex_to_global[lv])
            .collect();
        let parity = levels[b] % 2;
        let (path, class, alt, skip_part): (usize, usize, usize, Option<usize>) = match &attach[b]
        {
            None => (0, 0, 0, None),
            Some(at) => {
                let vp = parents[b].unwrap();
                (at.path, at.class, at.edge_index % 2, Some(vp))
            }
        };

        match &attach[b] {
            None => {
                debug_assert!(ordering.is_empty());
                ordering.extend(global_order.iter().copied());
            }
            Some(at) => {
                let vp = parents[b].unwrap();
                let part_members: HashSet<Vertex> = hp.parts[vp].iter().copied().collect();
                let (a_i, b_i) = at.edge;
                let reduced: Vec<Vertex> = global_order
                    .iter()
                    .copied()
                    .filter(|&z| !part_members.contains(&z) || z == a_i || z == b_i)
                    .collect();
                let pa = reduced.iter().position(|&z| z == a_i).unwrap();
                let pb = reduced.iter().position(|&z| z == b_i).unwrap();
                debug_assert_eq!(pa + 1, pb, "attachment endpoints are adjacent after reduction");
                let left = &reduced[..pa];
                let right = &reduced[pb + 1..];
                let ga = ordering.iter().position(|&z| z == a_i).expect("parent part placed");
                for (k, &z) in left.iter().enumerate() {
                    ordering.insert(ga + k, z);
                }
                let gb = ordering.iter().position(|&z| z == b_i).unwrap();
                for (k, &z) in right.iter().enumerate() {
                    ordering.insert(gb + 1 + k, z);
                }
            }
        }

        // Edges owned by this block: everything in its subgraph except
        // edges inside the shared parent part.
        for (i, &(lu, lv)) in ex.expanding.layout.graph.edges().iter().enumerate() {
            let e = (ex.vertex_to_global[lu], ex.vertex_to_global[lv]);
            if let Some(vp) = skip_part {
                if hp.part_of[e.0] == vp && hp.part_of[e.1] == vp {
                    continue;
                }
            }
            let id = group(parity, path, class, alt, ex.expanding.layout.stacks[i]);
            assignment.insert(e, id);
        }
    }

    let stacks: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| {
            assignment
                .get(e)
                .copied()
                .ok_or_else(|| EngineError::SpanConflict(format!("edge {:?} unassigned", e)))
        })
        .collect::<Result<_, _>>()?;
    let mut layout = Layout::new(Arc::new(g.clone()), ordering, stacks)?;
    layout.compact();
    Ok(layout)
}

/// How the pipeline produced its layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutRoute {
    /// Trivial instance (no edges or a single vertex).
    Degenerate,
    /// Underlying forest, laid out directly on one stack.
    Forest,
    /// Full augmentation / partition / expansion / composition pipeline.
    HPartition,
}

/// Achieved budget values of a pipeline run against the formulas.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub route: LayoutRoute,
    /// Largest host-layout stack count among the quotient's blocks.
    pub h: usize,
    /// Largest star-forest count used.
    pub f: usize,
    /// Largest cut-cover certificate size.
    pub w: usize,
    /// Largest intra-part stack count.
    pub s: usize,
    pub p: usize,
    pub t: usize,
    /// Stacks of the final layout, restricted to the input graph.
    pub stacks: usize,
    /// `4 (f w h + s) p t` for this run's values.
    pub run_bound: u64,
    pub paper_ceiling: u64,
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub base_edge: Option<Edge>,
    /// Blocks of the quotient up to this many vertices are laid out by the
    /// exact strategy.
    pub exact_threshold: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { base_edge: None, exact_threshold: 12 }
    }
}

/// End-to-end constant-stack layout of an outerplanar DAG: augment to
/// maximal outerplanar, build the directed H-partition, lay out every
/// transitive part on one stack, expand a monotone layout of each quotient
/// block, compose blockwise with `p = 2` paths and multiplicity `t = 1`,
/// and restrict to the input edges.
pub fn layout_outerplanar_dag(
    g: &DirectedGraph,
    config: &PipelineConfig,
) -> Result<(Layout, BoundReport), EngineError> {
    if !g.is_acyclic() {
        return Err(EngineError::CyclicGraph);
    }
    let degenerate_report = |route: LayoutRoute, stacks: usize| BoundReport {
        route,
        h: 0,
        f: 0,
        w: 0,
        s: stacks,
        p: 0,
        t: 0,
        stacks,
        run_bound: stacks as u64,
        paper_ceiling: OUTERPLANAR_STACK_CEILING,
    };
    if g.n() <= 1 || g.edge_count() == 0 {
        let layout = Layout::new(
            Arc::new(g.clone()),
            (0..g.n()).collect(),
            vec![],
        )?;
        return Ok((layout, degenerate_report(LayoutRoute::Degenerate, 0)));
    }
    if g.edge_count() + g.connected_components().len() == g.n() {
        let layout = forest_layout(g)?;
        let report = degenerate_report(LayoutRoute::Forest, layout_stacks(&layout));
        return Ok((layout, report));
    }

    let aug = match crate::graph::augment_to_maximal_outerplanar(g) {
        Ok(aug) => aug,
        Err(GraphError::NotOuterplanar) => return Err(EngineError::NotOuterplanar),
        Err(GraphError::CyclicGraph) => return Err(EngineError::CyclicGraph),
        Err(e) => return Err(e.into()),
    };
    let base = match config.base_edge {
        Some((u, v)) => {
            if !g.has_edge(u, v) {
                return Err(EngineError::EdgeMissing(u, v));
            }
            (u, v)
        }
        None => aug.edges()[0],
    };
    let seq = build_construction_sequence(&aug, base)?;
    let tree = build_construction_tree(&seq, &aug)?;
    let hp = construct_directed_h_partition(&aug, &seq, &tree)?;

    // Per-part 1-stack layouts.
    let part_layouts: Vec<SubgraphLayout> = hp
        .apex
        .iter()
        .map(|&u| layout_transitive_part(&aug, &tree, u))
        .collect::<Result<_, _>>()?;
    let s = part_layouts.iter().map(|sl| sl.layout.stack_count()).max().unwrap_or(1).max(1);

    // Root the quotient's block-cut tree at the base parts' block.
    let root_hint = [hp.part_of[base.0], hp.part_of[base.1]];
    let bct = block_cut_tree(&hp.quotient, Some(&root_hint))?;

    let mut expanders = Vec::with_capacity(bct.blocks.len());
    let mut h_max = 0usize;
    let mut f_max = 1usize;
    let mut w_max = 1usize;
    for (bi, block) in bct.blocks.iter().enumerate() {
        let scope = block_scope(&aug, &hp, &block.vertices);
        let base_local = block_base_edge(&hp, &block.vertices, &scope);
        let strategy = if scope.quotient_local.n() <= config.exact_threshold {
            LayoutStrategy::ExactSmall
        } else {
            LayoutStrategy::Heuristic
        };
        let h_layout = layout_monotone_block(&scope.quotient_local, base_local, strategy)?;
        h_max = h_max.max(h_layout.stack_count());

        // Restrict part layouts and certificates to the block.
        let local_parts: Vec<SubgraphLayout> = scope
            .part_to_global
            .iter()
            .map(|&gp| restrict_subgraph_layout(&part_layouts[gp], &scope))
            .collect();
        let covers_local: Vec<CutCoverCertificate> = scope
            .part_to_global
            .iter()
            .enumerate()
            .map(|(lp, &gp)| {
                let cert = constructive_certificate(&hp, gp, &block.vertices);
                debug_assert!(certificate_is_valid(&aug, &hp.parts[gp], &cert));
                CutCoverCertificate {
                    part: lp,
                    cover: cert.cover.iter().map(|&v| scope.vertex_to_local[&v]).collect(),
                    scope: None,
                }
            })
            .collect();
        let expanding = expand_partition_layout(
            &scope.subgraph,
            &scope.partition,
            &h_layout,
            &local_parts,
            &covers_local,
        )?;
        f_max = f_max.max(expanding.f);
        w_max = w_max.max(expanding.w);
        expanders.push(BlockExpander {
            block: bi,
            vertex_to_global: scope.to_global.clone(),
            part_to_global: scope.part_to_global.clone(),
            expanding,
        });
    }

    let (p, t) = (2usize, 1usize);
    let composed = compose_blockwise(&aug, &hp, &bct, &expanders, p, t)?;
    debug_assert!(composed.verify().is_ok());
    let restricted = composed.restrict_to(Arc::new(g.clone()));
    let stacks = layout_stacks(&restricted);
    let run_bound = (4 * (f_max * w_max * h_max + s) * p * t) as u64;
    let report = BoundReport {
        route: LayoutRoute::HPartition,
        h: h_max,
        f: f_max,
        w: w_max,
        s,
        p,
        t,
        stacks,
        run_bound,
        paper_ceiling: OUTERPLANAR_STACK_CEILING,
    };
    Ok((restricted, report))
}

fn layout_stacks(l: &Layout) -> usize {
    l.stack_count()
}

/// A block of the quotient materialized as its own graph world: the induced
/// subgraph of `g` on the block's parts, with a partition over it.
struct BlockScope {
    subgraph: DirectedGraph,
    to_global: Vec<Vertex>,
    vertex_to_local: HashMap<Vertex, usize>,
    partition: DirectedHPartition,
    part_to_global: Vec<usize>,
    quotient_local: DirectedGraph,
}

fn block_scope(g: &DirectedGraph, hp: &DirectedHPartition, block_parts: &[usize]) -> BlockScope {
    let part_to_global: Vec<usize> = {
        let mut ps = block_parts.to_vec();
        ps.sort_unstable();
        ps
    };
    let vertices: Vec<Vertex> = part_to_global
        .iter()
        .flat_map(|&p| hp.parts[p].iter().copied())
        .collect();
    let (subgraph, to_global) = g.induced_subgraph(&vertices);
    let vertex_to_local: HashMap<Vertex, usize> =
        to_global.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let parts_local: Vec<Vec<usize>> = part_to_global
        .iter()
        .map(|&p| hp.parts[p].iter().map(|&v| vertex_to_local[&v]).collect())
        .collect();
    let mut part_of_local = vec![usize::MAX; subgraph.n()];
    for (lp, members) in parts_local.iter().enumerate() {
        for &v in members {
            part_of_local[v] = lp;
        }
    }
    let (quotient_local, _) = hp.quotient.induced_subgraph(&part_to_global);
    let map_path = |path: &[Vertex]| -> Vec<usize> {
        path.iter()
            .filter_map(|v| vertex_to_local.get(v).copied())
            .collect()
    };
    let partition = DirectedHPartition {
        parts: parts_local,
        part_of: part_of_local,
        quotient: quotient_local.clone(),
        apex: part_to_global.iter().map(|&p| vertex_to_local[&hp.apex[p]]).collect(),
        parents: part_to_global
            .iter()
            .map(|&p| {
                hp.parents[p].and_then(|(v, w)| {
                    match (vertex_to_local.get(&v), vertex_to_local.get(&w)) {
                        (Some(&lv), Some(&lw)) => Some((lv, lw)),
                        _ => None,
                    }
                })
            })
            .collect(),
        apex_is_left: part_to_global.iter().map(|&p| hp.apex_is_left[p]).collect(),
        q1_plus: part_to_global.iter().map(|&p| map_path(&hp.q1_plus[p])).collect(),
        q2_plus: part_to_global.iter().map(|&p| map_path(&hp.q2_plus[p])).collect(),
        creation_rank: part_to_global.iter().map(|&p| hp.creation_rank[p]).collect(),
    };
    BlockScope {
        subgraph,
        to_global,
        vertex_to_local,
        partition,
        part_to_global,
        quotient_local,
    }
}

/// The base edge of a quotient block: the edge between its two
/// earliest-created parts.
fn block_base_edge(hp: &DirectedHPartition, block_parts: &[usize], scope: &BlockScope) -> Edge {
    let mut ranked: Vec<usize> = block_parts.to_vec();
    ranked.sort_by_key(|&p| hp.creation_rank[p]);
    let (p0, p1) = (ranked[0], ranked[1]);
    let l0 = scope.part_to_global.iter().position(|&p| p == p0).unwrap();
    let l1 = scope.part_to_global.iter().position(|&p| p == p1).unwrap();
    scope
        .quotient_local
        .oriented(l0, l1)
        .expect("earliest parts of a block are adjacent")
}

fn restrict_subgraph_layout(sl: &SubgraphLayout, scope: &BlockScope) -> SubgraphLayout {
    // Part layouts live on induced part subgraphs of the full graph; the
    // same induced graph reappears in the block world, only vertex names
    // change.
    let to_global: Vec<usize> = sl
        .to_global
        .iter()
        .map(|v| scope.vertex_to_local[v])
        .collect();
    SubgraphLayout { layout: sl.layout.clone(), to_global }
}
