//! 2-tree construction sequences, stacking types, construction trees, and
//! monotonicity profiles for directed acyclic 2-trees.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{block_cut_tree, DirectedGraph, Edge, GraphError, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwoTreeError {
    #[error("underlying undirected graph is not a 2-tree")]
    NotTwoTree,
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
    #[error("vertex {child} stacked onto ({0}, {1}) is cyclic", .parent.0, .parent.1)]
    CyclicStackingFound { child: Vertex, parent: Edge },
    #[error("block containing vertex {0} is not a 2-tree")]
    NotTwoTreeBlock(Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How a stacked vertex relates to its directed parent edge `vw`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StackingType {
    /// `wu` and `uv` present: `(v, w, u)` is a directed cycle.
    Cyclic,
    /// `vu` and `uw` present.
    Transitive,
    /// `uv` and `uw` present: `u` precedes both parents in every
    /// topological ordering.
    MonotoneLeft,
    /// `vu` and `wu` present: `u` follows both parents.
    MonotoneRight,
}

impl StackingType {
    pub fn is_monotone(self) -> bool {
        matches!(self, StackingType::MonotoneLeft | StackingType::MonotoneRight)
    }
}

/// Classifies the stacking of `child` onto the directed `parent_edge`.
pub fn classify_stacking(
    parent_edge: Edge,
    child: Vertex,
    g: &DirectedGraph,
) -> Result<StackingType, TwoTreeError> {
    let (v, w) = parent_edge;
    if !g.has_edge(v, w) {
        return Err(TwoTreeError::EdgeMissing(v, w));
    }
    let to_v = g.has_edge(child, v);
    let from_v = g.has_edge(v, child);
    let to_w = g.has_edge(child, w);
    let from_w = g.has_edge(w, child);
    match ((to_v, from_v), (to_w, from_w)) {
        ((true, false), (false, true)) => Ok(StackingType::Cyclic), // uv, wu
        ((false, true), (true, false)) => Ok(StackingType::Transitive), // vu, uw
        ((true, false), (true, false)) => Ok(StackingType::MonotoneLeft), // uv, uw
        ((false, true), (false, true)) => Ok(StackingType::MonotoneRight), // vu, wu
        _ => Err(TwoTreeError::EdgeMissing(child, if to_v || from_v { w } else { v })),
    }
}

/// A replayable 2-tree construction: the base edge plus the ordered stacking
/// steps `(child, parent edge)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSequence {
    pub base: Edge,
    pub steps: Vec<(Vertex, Edge)>,
}

impl ConstructionSequence {
    /// Rebuilds the graph, taking the orientation of each new edge from `g`.
    pub fn replay_against(&self, g: &DirectedGraph) -> Result<DirectedGraph, TwoTreeError> {
        let mut edges = vec![self.base];
        let mut present = vec![false; g.n()];
        present[self.base.0] = true;
        present[self.base.1] = true;
        let mut edge_present: HashMap<Edge, ()> = HashMap::new();
        edge_present.insert(self.base, ());
        for &(child, (v, w)) in &self.steps {
            if !edge_present.contains_key(&(v, w)) {
                return Err(TwoTreeError::EdgeMissing(v, w));
            }
            if present[child] {
                return Err(TwoTreeError::NotTwoTree);
            }
            present[child] = true;
            for p in [v, w] {
                let e = g.oriented(child, p)?;
                edges.push(e);
                edge_present.insert(e, ());
            }
        }
        Ok(DirectedGraph::new(g.n(), edges)?)
    }
}

/// True iff the underlying undirected graph is a 2-tree (a single edge, or
/// built from one by stacking degree-2 vertices onto existing edges).
pub fn is_two_tree(g: &DirectedGraph) -> bool {
    g.n() >= 2 && peel_to_base(g, None).is_some()
}

/// Peels simplicial degree-2 vertices (lowest id first) down to a single
/// edge, never removing the endpoints of `base` if given. Returns the peel
/// order with each vertex's neighbor pair at removal time.
fn peel_to_base(
    g: &DirectedGraph,
    base: Option<Edge>,
) -> Option<Vec<(Vertex, (Vertex, Vertex))>> {
    let n = g.n();
    // Every 2-tree on n >= 2 vertices has exactly 2n-3 edges (n = 2: one).
    let expected = if n >= 3 { 2 * n - 3 } else { 1 };
    if n < 2 || g.edge_count() != expected {
        return None;
    }
    let mut adj: Vec<Vec<Vertex>> = g.undirected_adjacency();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let keep = base.map(|(x, y)| [x, y]);
    let mut removed = Vec::new();
    let mut remaining = n;
    while remaining > 2 {
        let mut pick = None;
        'scan: for v in 0..n {
            if !alive[v] || degree[v] != 2 {
                continue;
            }
            if let Some(k) = keep {
                if k.contains(&v) {
                    continue;
                }
            }
            let nbrs: Vec<Vertex> = adj[v].iter().copied().filter(|&w| alive[w]).collect();
            debug_assert_eq!(nbrs.len(), 2);
            if g.has_undirected_edge(nbrs[0], nbrs[1]) {
                pick = Some((v, (nbrs[0], nbrs[1])));
                break 'scan;
            }
        }
        let (v, pair) = pick?;
        alive[v] = false;
        remaining -= 1;
        for w in [pair.0, pair.1] {
            degree[w] -= 1;
            adj[w].retain(|&x| x != v);
        }
        removed.push((v, pair));
    }
    let last: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    if last.len() != 2 || !g.has_undirected_edge(last[0], last[1]) {
        return None;
    }
    if let Some([x, y]) = keep {
        if !(last.contains(&x) && last.contains(&y)) {
            return None;
        }
    }
    Some(removed)
}

/// Builds the construction sequence of a 2-tree from the given base edge.
///
/// The parent edge of every vertex is uniquely determined once the base is
/// fixed; only the step order is a choice, and this one peels lowest-id
/// simplicial vertices first.
pub fn build_construction_sequence(
    g: &DirectedGraph,
    base: Edge,
) -> Result<ConstructionSequence, TwoTreeError> {
    if !g.has_edge(base.0, base.1) {
        return Err(TwoTreeError::EdgeMissing(base.0, base.1));
    }
    let peeled = peel_to_base(g, Some(base)).ok_or(TwoTreeError::NotTwoTree)?;
    let steps = peeled
        .into_iter()
        .rev()
        .map(|(child, (a, b))| {
            let parent = g.oriented(a, b).expect("parent edge exists");
            (child, parent)
        })
        .collect();
    Ok(ConstructionSequence { base, steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    M,
    T,
}

/// Rooted construction tree of a maximal outerplanar DAG with M/T labels.
///
/// The tail of the base edge is the root; the head is its unique child; a
/// stacked vertex hangs below the younger endpoint of its parent edge.
#[derive(Debug, Clone)]
pub struct ConstructionTree {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    pub children: Vec<Vec<Vertex>>,
    pub label: Vec<Label>,
    /// Parent edge (in stored orientation) per stacked vertex; `None` for
    /// the base endpoints.
    pub parent_edge: Vec<Option<Edge>>,
    pub base: Edge,
}

impl ConstructionTree {
    pub fn monotone_vertices(&self) -> Vec<Vertex> {
        (0..self.label.len()).filter(|&v| self.label[v] == Label::M).collect()
    }
}

/// Builds the construction tree for `seq` over the DAG `g`.
pub fn build_construction_tree(
    seq: &ConstructionSequence,
    g: &DirectedGraph,
) -> Result<ConstructionTree, TwoTreeError> {
    let n = g.n();
    let (x, y) = seq.base;
    let mut age = vec![usize::MAX; n];
    age[x] = 0;
    age[y] = 1;
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut label = vec![Label::M; n];
    let mut parent_edge = vec![None; n];
    parent[y] = Some(x);
    children[x].push(y);
    for (i, &(u, (v, w))) in seq.steps.iter().enumerate() {
        let ty = classify_stacking((v, w), u, g)?;
        label[u] = match ty {
            StackingType::Cyclic => {
                return Err(TwoTreeError::CyclicStackingFound { child: u, parent: (v, w) })
            }
            StackingType::Transitive => Label::T,
            StackingType::MonotoneLeft | StackingType::MonotoneRight => Label::M,
        };
        age[u] = i + 2;
        let younger = if age[v] > age[w] { v } else { w };
        parent[u] = Some(younger);
        children[younger].push(u);
        parent_edge[u] = Some((v, w));
    }
    debug_assert!(children.iter().all(|c| c.len() <= 2));
    Ok(ConstructionTree { root: x, parent, children, label, parent_edge, base: seq.base })
}

/// The vertex set of the transitive subgraph below `v`: `v` plus every
/// descendant reachable through T-labeled vertices only.
pub fn transitive_set_below(tree: &ConstructionTree, v: Vertex) -> Vec<Vertex> {
    let mut set = vec![v];
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for &c in &tree.children[u] {
            if tree.label[c] == Label::T {
                set.push(c);
                stack.push(c);
            }
        }
    }
    set.sort_unstable();
    set
}

/// Checks that the sequence describes a maximal outerplanar graph: at most
/// one vertex stacked onto each edge, except up to two onto the base.
pub fn is_maximal_outerplanar_sequence(seq: &ConstructionSequence) -> bool {
    let mut children_of: HashMap<Edge, usize> = HashMap::new();
    for &(_, parent) in &seq.steps {
        *children_of.entry(parent).or_insert(0) += 1;
    }
    children_of
        .iter()
        .all(|(&e, &c)| if e == seq.base { c <= 2 } else { c <= 1 })
}

/// Monotonicity of one block.
#[derive(Debug, Clone)]
pub struct BlockMonotonicity {
    pub vertices: Vec<Vertex>,
    /// A base edge for which every other vertex is monotone, if any.
    pub monotone_base: Option<Edge>,
    /// A base edge for which every other vertex is transitive, if any.
    pub transitive_base: Option<Edge>,
}

/// Per-block monotonicity report.
#[derive(Debug, Clone)]
pub struct MonotonicityProfile {
    pub blocks: Vec<BlockMonotonicity>,
    pub block_monotone: bool,
}

/// Classifies every stacking of a 2-tree from the given base; `None` when
/// the base is missing or the graph is not a 2-tree.
fn stacking_kinds(g: &DirectedGraph, base: Edge) -> Option<Vec<StackingType>> {
    let seq = build_construction_sequence(g, base).ok()?;
    seq.steps
        .iter()
        .map(|&(u, parent)| classify_stacking(parent, u, g).ok())
        .collect()
}

/// True iff `g` (a directed 2-tree) is monotone with respect to `base`.
pub fn is_monotone_with_base(g: &DirectedGraph, base: Edge) -> bool {
    matches!(stacking_kinds(g, base), Some(kinds) if kinds.iter().all(|k| k.is_monotone()))
}

/// True iff `g` is transitive with respect to `base`.
pub fn is_transitive_with_base(g: &DirectedGraph, base: Edge) -> bool {
    matches!(
        stacking_kinds(g, base),
        Some(kinds) if kinds.iter().all(|k| *k == StackingType::Transitive)
    )
}

/// Reports, per block of `g`, whether the block is monotone or transitive
/// for some choice of base edge, trying every edge of the block as base.
pub fn monotonicity_profile(g: &DirectedGraph) -> Result<MonotonicityProfile, TwoTreeError> {
    let mut blocks_out = Vec::new();
    for comp in g.connected_components() {
        let (local, to_parent) = g.induced_subgraph(&comp);
        if local.n() == 1 {
            // An isolated vertex has no block.
            continue;
        }
        let bct = block_cut_tree(&local, None)?;
        for block in &bct.blocks {
            let (bg, b_to_local) = local.induced_subgraph(&block.vertices);
            if !is_two_tree(&bg) {
                return Err(TwoTreeError::NotTwoTreeBlock(to_parent[b_to_local[0]]));
            }
            let mut monotone_base = None;
            let mut transitive_base = None;
            for &(u, v) in bg.edges() {
                if monotone_base.is_none() && is_monotone_with_base(&bg, (u, v)) {
                    monotone_base = Some((to_parent[b_to_local[u]], to_parent[b_to_local[v]]));
                }
                if transitive_base.is_none() && is_transitive_with_base(&bg, (u, v)) {
                    transitive_base = Some((to_parent[b_to_local[u]], to_parent[b_to_local[v]]));
                }
            }
            blocks_out.push(BlockMonotonicity {
                vertices: b_to_local.iter().map(|&v| to_parent[v]).collect(),
                monotone_base,
                transitive_base,
            });
        }
    }
    let block_monotone = blocks_out.iter().all(|b| b.monotone_base.is_some());
    Ok(MonotonicityProfile { blocks: blocks_out, block_monotone })
}
