//! Simple directed graphs with the structural machinery the layout engine
//! is built on: acyclicity, topological-ordering enumeration, block-cut
//! trees, outerplanarity testing with certificates, and augmentation to
//! maximal outerplanar.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

pub type Vertex = usize;

/// Directed edge as an ordered `(tail, head)` pair.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("more than one edge between vertices {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("graph has a directed cycle")]
    CyclicGraph,
    #[error("underlying undirected graph is not connected")]
    Disconnected,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
}

/// A finite simple directed graph on vertices `0..n`.
///
/// No loops and at most one edge between any unordered vertex pair, in one
/// direction. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    /// Sorted lexicographically, unique.
    edges: Vec<Edge>,
    names: Option<Vec<String>>,
}

impl DirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let mut seen_pairs = HashSet::new();
        for &(u, v) in &edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen_pairs.insert((u.min(v), u.max(v))) {
                return Err(GraphError::ParallelEdge(u.min(v), u.max(v)));
            }
        }
        Ok(DirectedGraph { n, edges, names: None })
    }

    pub fn with_names(
        n: usize,
        edges: impl IntoIterator<Item = Edge>,
        names: Vec<String>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(n, edges)?;
        assert_eq!(names.len(), n, "one name per vertex");
        g.names = Some(names);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name_of(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Same vertex count and edge set, ignoring names.
    pub fn same_structure(&self, other: &DirectedGraph) -> bool {
        self.n == other.n && self.edges == other.edges
    }

    /// True iff the directed edge `(u, v)` is present.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    /// True iff some edge joins `u` and `v`, in either direction.
    pub fn has_undirected_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    /// The stored orientation of the edge between `u` and `v`.
    pub fn oriented(&self, u: Vertex, v: Vertex) -> Result<Edge, GraphError> {
        if self.has_edge(u, v) {
            Ok((u, v))
        } else if self.has_edge(v, u) {
            Ok((v, u))
        } else {
            Err(GraphError::EdgeMissing(u, v))
        }
    }

    pub fn out_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }

    pub fn in_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[v].push(u);
        }
        adj
    }

    /// Neighbors in the underlying undirected graph, sorted.
    pub fn undirected_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn is_acyclic(&self) -> bool {
        self.lexicographic_topological_ordering().is_some()
    }

    /// The lexicographically smallest topological ordering, if any.
    pub fn lexicographic_topological_ordering(&self) -> Option<Vec<Vertex>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, v) in &self.edges {
            indeg[v] += 1;
        }
        let out = self.out_adjacency();
        let mut ready: BTreeSet<Vertex> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            order.push(v);
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == self.n {
            Some(order)
        } else {
            None
        }
    }

    /// Enumerates distinct topological orderings in lexicographic order of
    /// vertex ids, stopping after `limit`.
    pub fn topological_orderings(&self, limit: usize) -> Result<TopoOrderings, GraphError> {
        if !self.is_acyclic() {
            return Err(GraphError::CyclicGraph);
        }
        Ok(TopoOrderings::new(self, limit))
    }

    /// Counts topological orderings, up to `limit`.
    pub fn count_topological_orderings(&self, limit: usize) -> Result<usize, GraphError> {
        Ok(self.topological_orderings(limit)?.count())
    }

    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let adj = self.undirected_adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Subgraph induced by `vertices` with dense local ids; returns the
    /// local-to-parent vertex map alongside.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (DirectedGraph, Vec<Vertex>) {
        let mut to_parent: Vec<Vertex> = vertices.to_vec();
        to_parent.sort_unstable();
        to_parent.dedup();
        let from_parent: HashMap<Vertex, usize> =
            to_parent.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| match (from_parent.get(&u), from_parent.get(&v)) {
                (Some(&lu), Some(&lv)) => Some((lu, lv)),
                _ => None,
            })
            .collect();
        let mut g = DirectedGraph::new(to_parent.len(), edges).expect("induced subgraph is valid");
        if let Some(names) = &self.names {
            g.names = Some(to_parent.iter().map(|&v| names[v].clone()).collect());
        }
        (g, to_parent)
    }

    /// A copy with `extra` edges added (orientations as given).
    pub fn with_extra_edges(&self, extra: &[Edge]) -> Result<DirectedGraph, GraphError> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        let mut g = DirectedGraph::new(self.n, edges)?;
        g.names = self.names.clone();
        Ok(g)
    }
}

/// Backtracking enumerator over topological orderings in lexicographic order.
pub struct TopoOrderings {
    out: Vec<Vec<Vertex>>,
    indeg: Vec<usize>,
    prefix: Vec<Vertex>,
    /// Per depth, the vertex id from which to resume the scan for the next
    /// ready vertex.
    next_try: Vec<Vertex>,
    placed: Vec<bool>,
    n: usize,
    remaining: usize,
    started: bool,
}

impl TopoOrderings {
    fn new(g: &DirectedGraph, limit: usize) -> Self {
        let mut indeg = vec![0usize; g.n];
        for &(_, v) in &g.edges {
            indeg[v] += 1;
        }
        TopoOrderings {
            out: g.out_adjacency(),
            indeg,
            prefix: Vec::with_capacity(g.n),
            next_try: vec![0],
            placed: vec![false; g.n],
            n: g.n,
            remaining: limit,
            started: false,
        }
    }

    fn place(&mut self, v: Vertex) {
        self.prefix.push(v);
        self.placed[v] = true;
        for i in 0..self.out[v].len() {
            let w = self.out[v][i];
            self.indeg[w] -= 1;
        }
        self.next_try.push(0);
    }

    fn unplace(&mut self) -> Option<Vertex> {
        let v = self.prefix.pop()?;
        self.placed[v] = false;
        for i in 0..self.out[v].len() {
            let w = self.out[v][i];
            self.indeg[w] += 1;
        }
        self.next_try.pop();
        Some(v)
    }
}

impl Iterator for TopoOrderings {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        if self.n == 0 {
            if self.started {
                return None;
            }
            self.started = true;
            self.remaining -= 1;
            return Some(Vec::new());
        }
        // On re-entry, backtrack off the previously emitted full ordering.
        if self.prefix.len() == self.n {
            if let Some(v) = self.unplace() {
                *self.next_try.last_mut().unwrap() = v + 1;
            }
        }
        self.started = true;
        loop {
            let depth = self.prefix.len();
            let start = self.next_try[depth];
            let mut advanced = false;
            for v in start..self.n {
                if !self.placed[v] && self.indeg[v] == 0 {
                    self.next_try[depth] = v;
                    self.place(v);
                    advanced = true;
                    break;
                }
            }
            if advanced {
                if self.prefix.len() == self.n {
                    self.remaining -= 1;
                    return Some(self.prefix.clone());
                }
                continue;
            }
            // Exhausted this depth: backtrack.
            {
                let v = self.unplace()?;
                *self.next_try.last_mut().unwrap() = v + 1
            }
        }
    }
}

/// One block of a connected graph: a bridge or a maximal 2-connected
/// component, stored as an edge set plus its vertex set.
#[derive(Debug, Clone)]
pub struct Block {
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
}

/// Block-cut tree of a connected graph. Tree nodes are blocks and cut
/// vertices, with an edge between block `B` and cut vertex `v` iff `v` lies in `B`.
#[derive(Debug, Clone)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
    /// `(block index, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, Vertex)>,
    pub root: usize,
}

impl BlockCutTree {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.contains(&v)
    }

    /// Blocks incident to cut vertex `v`.
    pub fn blocks_at(&self, v: Vertex) -> Vec<usize> {
        self.tree_edges
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(b, _)| b)
            .collect()
    }

    /// Level of each block: the number of cut vertices on its tree path to
    /// the root block.
    pub fn block_levels(&self) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.blocks.len()];
        level[self.root] = 0;
        let mut queue = VecDeque::from([self.root]);
        let mut seen_cut: HashSet<Vertex> = HashSet::new();
        while let Some(b) = queue.pop_front() {
            for &(bb, v) in &self.tree_edges {
                if bb != b || !seen_cut.insert(v) {
                    continue;
                }
                // v is a cut vertex of block b; its other blocks are children
                // unless already levelled.
                for other in self.blocks_at(v) {
                    if level[other] == usize::MAX {
                        level[other] = level[b] + 1;
                        queue.push_back(other);
                    }
                }
            }
        }
        level
    }

    /// The parent cut vertex of each non-root block: the unique cut vertex
    /// of the block that also lies in a block one level up.
    pub fn parent_cut_vertex(&self) -> Vec<Option<Vertex>> {
        let level = self.block_levels();
        let mut parent = vec![None; self.blocks.len()];
        for &(b, v) in &self.tree_edges {
            if b == self.root {
                continue;
            }
            let min_level_at_v = self.blocks_at(v).iter().map(|&o| level[o]).min().unwrap();
            if min_level_at_v + 1 == level[b] {
                parent[b] = Some(v);
            }
        }
        parent
    }
}

/// Computes the block-cut tree. The root defaults to the block containing
/// the lowest-id vertex.
pub fn block_cut_tree(
    g: &DirectedGraph,
    root_block_hint: Option<&[Vertex]>,
) -> Result<BlockCutTree, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Disconnected);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let adj = g.undirected_adjacency();
    let n = g.n();
    if n == 1 {
        return Ok(BlockCutTree {
            blocks: vec![Block { edges: vec![], vertices: vec![0] }],
            cut_vertices: vec![],
            tree_edges: vec![],
            root: 0,
        });
    }

    // Iterative Hopcroft-Tarjan biconnectivity.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    let mut is_cut = vec![false; n];

    // (vertex, next child index)
    let mut stack: Vec<(Vertex, usize)> = Vec::new();
    let root = 0;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    stack.push((root, 0));
    let mut root_children = 0usize;

    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if disc[w] == usize::MAX {
                parent[w] = v;
                edge_stack.push((v, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, 0));
            } else if w != parent[v] && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    // p separates v's subtree: pop one block.
                    let mut block = Vec::new();
                    while let Some(&(a, b)) = edge_stack.last() {
                        if disc[a] >= disc[v] || (a == p && b == v) {
                            block.push((a, b));
                            edge_stack.pop();
                            if a == p && b == v {
                                break;
                            }
                        } else {
                            break;
                        }
                    }
                    blocks.push(block);
                    if p != root {
                        is_cut[p] = true;
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[root] = true;
    }

    // Normalize: represent block edges in stored orientation, sorted.
    let mut block_structs: Vec<Block> = blocks
        .into_iter()
        .map(|undirected| {
            let mut edges: Vec<Edge> = undirected
                .iter()
                .map(|&(a, b)| g.oriented(a, b).expect("block edge exists"))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            let mut vertices: Vec<Vertex> =
                edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { edges, vertices }
        })
        .collect();
    block_structs.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| is_cut[v]).collect();
    let tree_edges: Vec<(usize, Vertex)> = block_structs
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| {
            b.vertices
                .iter()
                .filter(|&&v| is_cut[v])
                .map(move |&v| (bi, v))
                .collect::<Vec<_>>()
        })
        .collect();

    let root = match root_block_hint {
        Some(hint) => {
            let hint: BTreeSet<Vertex> = hint.iter().copied().collect();
            block_structs
                .iter()
                .position(|b| hint.iter().all(|v| b.vertices.contains(v)))
                .unwrap_or(0)
        }
        None => {
            let lowest = 0;
            block_structs
                .iter()
                .position(|b| b.vertices.contains(&lowest))
                .expect("vertex 0 lies in some block")
        }
    };

    Ok(BlockCutTree { blocks: block_structs, cut_vertices, tree_edges, root })
}

// ---------------------------------------------------------------------------
// Planarity (face-splitting embedder) and outerplanarity.
// ---------------------------------------------------------------------------

/// Faces of a planar embedding of a 2-connected graph; each face boundary is
/// a simple cycle.
type Faces = Vec<Vec<usize>>;

/// Incremental face-splitting planarity test for a 2-connected simple graph
/// on `n >= 3` vertices given as undirected pairs. Returns the face list of
/// an embedding, or `None` if the graph is non-planar.
fn planar_embed_biconnected(n: usize, undirected_edges: &[(usize, usize)]) -> Option<Faces> {
    let m = undirected_edges.len();
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in undirected_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in &mut adj {
        a.sort_unstable();
    }

    // Seed with any cycle, found by walking a DFS back edge.
    let cycle = {
        let mut parent = vec![usize::MAX; n];
        let mut state = vec![0u8; n]; // 0 new, 1 open, 2 done
        let mut stack = vec![(0usize, 0usize)];
        state[0] = 1;
        let mut found: Option<(usize, usize)> = None;
        'dfs: while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if state[w] == 0 {
                    parent[w] = v;
                    state[w] = 1;
                    stack.push((w, 0));
                } else if state[w] == 1 && w != parent[v] {
                    found = Some((v, w));
                    break 'dfs;
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
        let (mut v, w) = found?;
        let mut cyc = vec![v];
        while v != w {
            v = parent[v];
            cyc.push(v);
        }
        cyc
    };

    let mut embedded_vertex = vec![false; n];
    let mut embedded_edge: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for &v in &cycle {
        embedded_vertex[v] = true;
    }
    for i in 0..cycle.len() {
        embedded_edge.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    // Faces with tombstones plus a per-vertex index of live faces.
    let mut faces: Vec<Option<Vec<usize>>> =
        vec![Some(cycle.clone()), Some(cycle.iter().rev().copied().collect())];
    let mut faces_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &cycle {
        faces_at[v] = vec![0, 1];
    }

    while embedded_edge.len() < m {
        // Fragments: connected components of unembedded vertices with their
        // attachments, plus single unembedded edges between embedded vertices.
        struct Fragment {
            attach: Vec<usize>,
            inner: Vec<usize>,
            single_edge: Option<(usize, usize)>,
        }
        let mut fragments: Vec<Fragment> = Vec::new();
        for &(a, b) in undirected_edges {
            if embedded_vertex[a] && embedded_vertex[b] && !embedded_edge.contains(&key(a, b)) {
                fragments.push(Fragment {
                    attach: vec![a.min(b), a.max(b)],
                    inner: vec![],
                    single_edge: Some((a, b)),
                });
            }
        }
        let mut comp_seen = vec![false; n];
        for s in 0..n {
            if embedded_vertex[s] || comp_seen[s] {
                continue;
            }
            let mut inner = vec![s];
            comp_seen[s] = true;
            let mut queue = VecDeque::from([s]);
            let mut attach = BTreeSet::new();
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if embedded_vertex[w] {
                        attach.insert(w);
                    } else if !comp_seen[w] {
                        comp_seen[w] = true;
                        inner.push(w);
                        queue.push_back(w);
                    }
                }
            }
            inner.sort_unstable();
            fragments.push(Fragment {
                attach: attach.into_iter().collect(),
                inner,
                single_edge: None,
            });
        }
        debug_assert!(!fragments.is_empty());

        // Admissible faces per fragment: intersect the face lists of the
        // attachments (every fragment of a 2-connected graph has >= 2).
        let admissible_of = |fr: &Fragment| -> Vec<usize> {
            let first = &faces_at[fr.attach[0]];
            first
                .iter()
                .copied()
                .filter(|&fi| {
                    fr.attach[1..]
                        .iter()
                        .all(|&v| faces_at[v].contains(&fi))
                })
                .collect()
        };
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for (i, fr) in fragments.iter().enumerate() {
            let adm = admissible_of(fr);
            if adm.is_empty() {
                return None;
            }
            let unique = adm.len() == 1;
            if pick.is_none() || unique {
                pick = Some((i, adm));
            }
            if unique {
                break;
            }
        }
        let (pick, admissible) = pick.expect("some fragment exists");
        let face_idx = admissible[0];
        let fragment = &fragments[pick];

        // A path through the fragment between two distinct attachments.
        let path: Vec<usize> = match fragment.single_edge {
            Some((a, b)) => vec![a, b],
            None => {
                let a1 = fragment.attach[0];
                // BFS from a1 through inner vertices to another attachment.
                let inner_set: HashSet<usize> = fragment.inner.iter().copied().collect();
                let mut prev: HashMap<usize, usize> = HashMap::new();
                let mut queue = VecDeque::new();
                for &w in &adj[a1] {
                    if inner_set.contains(&w) && !prev.contains_key(&w) {
                        prev.insert(w, a1);
                        queue.push_back(w);
                    }
                }
                let mut end = None;
                'bfs: while let Some(v) = queue.pop_front() {
                    for &w in &adj[v] {
                        if w != a1 && embedded_vertex[w] {
                            prev.insert(w, v);
                            end = Some(w);
                            break 'bfs;
                        }
                        if inner_set.contains(&w) && !prev.contains_key(&w) {
                            prev.insert(w, v);
                            queue.push_back(w);
                        }
                    }
                }
                let end = end.expect("2-connected input: fragment has >= 2 attachments");
                let mut path = vec![end];
                let mut cur = end;
                while cur != a1 {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                path
            }
        };

        // Split the face along the path.
        let face = faces[face_idx].take().expect("picked face is live");
        let p1 = face.iter().position(|&v| v == path[0]).unwrap();
        let p2 = face.iter().position(|&v| v == *path.last().unwrap()).unwrap();
        debug_assert_ne!(p1, p2);
        let len = face.len();
        let mut arc1 = Vec::new(); // path[0] .. path[last] along the face
        let mut i = p1;
        loop {
            arc1.push(face[i]);
            if i == p2 {
                break;
            }
            i = (i + 1) % len;
        }
        let mut arc2 = Vec::new(); // path[last] .. path[0] along the face
        let mut i = p2;
        loop {
            arc2.push(face[i]);
            if i == p1 {
                break;
            }
            i = (i + 1) % len;
        }
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut face_a = arc1;
        face_a.extend(interior.iter().rev());
        let mut face_b = arc2;
        face_b.extend(interior.iter());
        for &v in &face {
            faces_at[v].retain(|&fi| fi != face_idx);
        }
        for new_face in [face_a, face_b] {
            let id = faces.len();
            for &v in &new_face {
                faces_at[v].push(id);
            }
            faces.push(Some(new_face));
        }

        for w in &path[1..path.len() - 1] {
            embedded_vertex[*w] = true;
        }
        for w in path.windows(2) {
            embedded_edge.insert(key(w[0], w[1]));
        }
    }
    Some(faces.into_iter().flatten().collect())
}

/// Result of the outerplanarity test.
#[derive(Debug, Clone)]
pub enum Outerplanarity {
    /// All vertices can be placed on a circle, in this cyclic order, with
    /// every edge a non-crossing chord.
    Outerplanar { outer_order: Vec<Vertex> },
    /// A forbidden substructure: a subdivision of `K4` or `K2,3`.
    NotOuterplanar { witness: ForbiddenSubdivision },
}

impl Outerplanarity {
    pub fn is_outerplanar(&self) -> bool {
        matches!(self, Outerplanarity::Outerplanar { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenKind {
    K4,
    K23,
}

/// A subdivision of `K4` or `K2,3` found inside a non-outerplanar graph.
#[derive(Debug, Clone)]
pub struct ForbiddenSubdivision {
    pub kind: ForbiddenKind,
    pub branch_vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// Fast boolean outerplanarity decision (no certificate, no witness).
///
/// Tests each connected component by adding an apex vertex adjacent to all
/// component vertices and running the planarity embedder: a graph is
/// outerplanar iff the apexed graph is planar.
pub fn is_outerplanar(g: &DirectedGraph) -> bool {
    outer_orders_per_component(g).is_some()
}

fn outer_orders_per_component(g: &DirectedGraph) -> Option<Vec<Vec<Vertex>>> {
    let mut orders = Vec::new();
    for comp in g.connected_components() {
        let (local, to_parent) = g.induced_subgraph(&comp);
        let nc = local.n();
        let order_local: Vec<usize> = if nc == 1 {
            vec![0]
        } else if nc == 2 {
            vec![0, 1]
        } else {
            let apex = nc;
            let mut undirected: Vec<(usize, usize)> =
                local.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            undirected.extend((0..nc).map(|v| (v, apex)));
            let faces = planar_embed_biconnected(nc + 1, &undirected)?;
            rotation_around(apex, &faces)
        };
        orders.push(order_local.into_iter().map(|v| to_parent[v]).collect());
    }
    Some(orders)
}

/// Reconstructs the cyclic order of `v`'s neighbors from the face list of an
/// embedding: each face incident to `v` pairs up two of its neighbors.
fn rotation_around(v: usize, faces: &Faces) -> Vec<usize> {
    let mut pair_adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for face in faces {
        let len = face.len();
        for i in 0..len {
            if face[i] == v {
                let prev = face[(i + len - 1) % len];
                let next = face[(i + 1) % len];
                pair_adj.entry(prev).or_default().push(next);
                pair_adj.entry(next).or_default().push(prev);
            }
        }
    }
    let start = *pair_adj.keys().min().expect("vertex has neighbors");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let nexts = &pair_adj[&cur];
        let nxt = if nexts[0] != prev { nexts[0] } else { nexts[1] };
        if nxt == start {
            break;
        }
        order.push(nxt);
        prev = cur;
        cur = nxt;
    }
    order
}

/// Full outerplanarity test with certificate or forbidden-substructure
/// witness.
pub fn check_outerplanar(g: &DirectedGraph) -> Outerplanarity {
    match outer_orders_per_component(g) {
        Some(orders) => {
            let outer_order: Vec<Vertex> = orders.into_iter().flatten().collect();
            debug_assert!(edges_noncrossing_on_circle(g, &outer_order));
            Outerplanarity::Outerplanar { outer_order }
        }
        None => Outerplanarity::NotOuterplanar { witness: forbidden_subdivision(g) },
    }
}

/// True iff all edges of `g` are pairwise non-crossing chords when the
/// vertices are placed on a circle in `order`.
pub fn edges_noncrossing_on_circle(g: &DirectedGraph, order: &[Vertex]) -> bool {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    if pos.contains(&usize::MAX) {
        return false;
    }
    let chords: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    for (i, &(a1, b1)) in chords.iter().enumerate() {
        for &(a2, b2) in &chords[i + 1..] {
            let inside1 = a1 < a2 && a2 < b1;
            let inside2 = a1 < b2 && b2 < b1;
            if inside1 != inside2 && a2 != a1 && a2 != b1 && b2 != a1 && b2 != b1 {
                return false;
            }
        }
    }
    true
}

/// Shrinks a non-outerplanar graph by greedy edge deletion to a minimal
/// non-outerplanar subgraph, which is a subdivision of `K4` or `K2,3`.
fn forbidden_subdivision(g: &DirectedGraph) -> ForbiddenSubdivision {
    assert!(!is_outerplanar(g), "witness requested for an outerplanar graph");
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..edges.len() {
            let mut trial = edges.clone();
            trial.remove(i);
            let trial_g = DirectedGraph::new(g.n(), trial.iter().copied()).unwrap();
            if !is_outerplanar(&trial_g) {
                edges = trial;
                changed = true;
                break;
            }
        }
    }
    // Count branch vertices (degree 3 in the subdivision).
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let branch_vertices: Vec<Vertex> = (0..g.n()).filter(|&v| deg[v] >= 3).collect();
    let kind = if branch_vertices.len() == 4 { ForbiddenKind::K4 } else { ForbiddenKind::K23 };
    ForbiddenSubdivision { kind, branch_vertices, edges }
}

/// Augments an outerplanar DAG to a maximal outerplanar DAG containing it.
///
/// The Hamiltonian outer cycle is closed along the certificate order and
/// every internal face is triangulated by a fan from its lowest-id vertex;
/// added edges are oriented left-to-right along the lexicographically
/// smallest topological ordering of the input.
pub fn augment_to_maximal_outerplanar(g: &DirectedGraph) -> Result<DirectedGraph, GraphError> {
    let topo = g
        .lexicographic_topological_ordering()
        .ok_or(GraphError::CyclicGraph)?;
    let order = match check_outerplanar(g) {
        Outerplanarity::Outerplanar { outer_order } => outer_order,
        Outerplanarity::NotOuterplanar { .. } => return Err(GraphError::NotOuterplanar),
    };
    let n = g.n();
    if n <= 1 {
        return Ok(g.clone());
    }
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in topo.iter().enumerate() {
        rank[v] = i;
    }
    let orient = |a: Vertex, b: Vertex| if rank[a] < rank[b] { (a, b) } else { (b, a) };

    if n == 2 {
        if g.edge_count() == 1 {
            return Ok(g.clone());
        }
        return g.with_extra_edges(&[orient(0, 1)]);
    }

    // Close the Hamiltonian cycle along the outer order.
    let mut added: Vec<Edge> = Vec::new();
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        if !g.has_undirected_edge(u, v) {
            added.push(orient(u, v));
        }
    }
    let cycled = g.with_extra_edges(&added)?;

    // Triangulate every internal face via rotation-system face tracing.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut rot: Vec<Vec<Vertex>> = cycled.undirected_adjacency();
    for v in 0..n {
        rot[v].sort_by_key(|&w| (pos[w] + n - pos[v]) % n);
    }
    let rot_index: Vec<HashMap<Vertex, usize>> = rot
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();

    let mut seen_dart: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut fan_edges: Vec<Edge> = Vec::new();
    for v in 0..n {
        for &w in &rot[v] {
            if seen_dart.contains(&(v, w)) {
                continue;
            }
            // Trace the face containing dart (v, w).
            let mut face = Vec::new();
            let (mut a, mut b) = (v, w);
            loop {
                seen_dart.insert((a, b));
                face.push(a);
                // Leave b via the neighbor preceding a in rot(b).
                let i = rot_index[b][&a];
                let next = rot[b][(i + rot[b].len() - 1) % rot[b].len()];
                a = b;
                b = next;
                if (a, b) == (v, w) {
                    break;
                }
            }
            // Outer face: traverses the circle clockwise.
            let is_outer = face.len() == n && {
                let i0 = face.iter().position(|&x| pos[x] == 0).unwrap();
                pos[face[(i0 + 1) % n]] == n - 1
            };
            if is_outer || face.len() <= 3 {
                continue;
            }
            let apex = *face.iter().min().unwrap();
            let ai = face.iter().position(|&x| x == apex).unwrap();
            for k in 0..face.len() {
                if k == ai
                    || (k + 1) % face.len() == ai
                    || (ai + 1) % face.len() == k
                {
                    continue;
                }
                fan_edges.push(orient(apex, face[k]));
            }
        }
    }
    let result = cycled.with_extra_edges(&fan_edges)?;
    debug_assert_eq!(result.edge_count(), 2 * n - 3);
    debug_assert!(is_outerplanar(&result));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn path_matching(k: usize) -> DirectedGraph {
        // Directed path l_1..l_k, r_1..r_k plus the matching l_i -> r_i.
        let mut edges = Vec::new();
        for i in 0..2 * k - 1 {
            edges.push((i, i + 1));
        }
        for i in 0..k {
            edges.push((i, k + i));
        }
        DirectedGraph::new(2 * k, edges).unwrap()
    }

    #[test]
    fn construction_rejects_invalid_edges() {
        assert_eq!(
            DirectedGraph::new(2, vec![(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            DirectedGraph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(0, 1))
        );
        assert_eq!(
            DirectedGraph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
    }

    #[test]
    fn acyclicity() {
        let g3 = path_matching(3);
        assert!(g3.is_acyclic());
        let cycle = DirectedGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!cycle.is_acyclic());
        let single = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        assert!(single.is_acyclic());
    }

    #[test]
    fn topological_enumeration() {
        // Path+matching has a unique topological ordering.
        let g = path_matching(3);
        let orders: Vec<_> = g.topological_orderings(10).unwrap().collect();
        assert_eq!(orders, vec![vec![0, 1, 2, 3, 4, 5]]);

        // Edgeless graph on 3 vertices: all 6 permutations, lexicographic.
        let e = DirectedGraph::new(3, vec![]).unwrap();
        let orders: Vec<_> = e.topological_orderings(100).unwrap().collect();
        assert_eq!(orders.len(), 6);
        assert_eq!(orders[0], vec![0, 1, 2]);
        assert_eq!(orders[5], vec![2, 1, 0]);
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(orders, sorted, "lexicographic emission order");

        // Single edge.
        let s = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        let orders: Vec<_> = s.topological_orderings(10).unwrap().collect();
        assert_eq!(orders, vec![vec![0, 1]]);

        // Limit.
        assert_eq!(e.count_topological_orderings(4).unwrap(), 4);

        // Cyclic input is an error.
        let cycle = DirectedGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            cycle.topological_orderings(10),
            Err(GraphError::CyclicGraph)
        ));
    }

    #[test]
    fn orderings_respect_edges() {
        let g = DirectedGraph::new(5, vec![(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap();
        for order in g.topological_orderings(1000).unwrap() {
            let mut pos = [0; 5];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            for &(u, v) in g.edges() {
                assert!(pos[u] < pos[v]);
            }
        }
    }

    #[test]
    fn block_cut_tree_on_tree() {
        // A path: every edge is its own block.
        let g = DirectedGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let bct = block_cut_tree(&g, None).unwrap();
        assert_eq!(bct.blocks.len(), 3);
        assert!(bct.blocks.iter().all(|b| b.edges.len() == 1));
        assert_eq!(bct.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn block_cut_tree_on_cycle() {
        let g = DirectedGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let bct = block_cut_tree(&g, None).unwrap();
        assert_eq!(bct.blocks.len(), 1);
        assert!(bct.cut_vertices.is_empty());
    }

    #[test]
    fn block_cut_tree_mixed() {
        // Triangle 0-1-2 with pendant path 2-3-4.
        let g =
            DirectedGraph::new(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let bct = block_cut_tree(&g, None).unwrap();
        assert_eq!(bct.blocks.len(), 3);
        assert_eq!(bct.cut_vertices, vec![2, 3]);
        // Every edge lies in exactly one block.
        let mut count = HashMap::new();
        for b in &bct.blocks {
            for &e in &b.edges {
                *count.entry(e).or_insert(0) += 1;
            }
        }
        assert!(g.edges().iter().all(|e| count[e] == 1));
        assert_eq!(count.len(), g.edge_count());
        // Root contains vertex 0.
        assert!(bct.blocks[bct.root].vertices.contains(&0));
        // Levels: root 0, the bridge 2-3 level 1, bridge 3-4 level 2.
        let levels = bct.block_levels();
        assert_eq!(levels[bct.root], 0);
        assert_eq!(levels.iter().copied().max().unwrap(), 2);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = DirectedGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(block_cut_tree(&g, None), Err(GraphError::Disconnected)));
    }

    #[test]
    fn outerplanarity_basics() {
        // K4 is not outerplanar.
        let k4 = DirectedGraph::new(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        match check_outerplanar(&k4) {
            Outerplanarity::NotOuterplanar { witness } => {
                assert_eq!(witness.kind, ForbiddenKind::K4);
                assert_eq!(witness.branch_vertices.len(), 4);
            }
            _ => panic!("K4 must be rejected"),
        }

        // Path+matching with k=3 is planar but not outerplanar.
        let g3 = path_matching(3);
        assert!(!is_outerplanar(&g3));

        // A triangle with a pendant edge is outerplanar.
        let g = DirectedGraph::new(4, vec![(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        match check_outerplanar(&g) {
            Outerplanarity::Outerplanar { outer_order } => {
                assert_eq!(outer_order.len(), 4);
                assert!(edges_noncrossing_on_circle(&g, &outer_order));
            }
            _ => panic!("expected outerplanar"),
        }

        // k=2 path+matching is outerplanar.
        assert!(is_outerplanar(&path_matching(2)));
    }

    #[test]
    fn k23_witness() {
        let k23 = DirectedGraph::new(
            5,
            vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        match check_outerplanar(&k23) {
            Outerplanarity::NotOuterplanar { witness } => {
                assert_eq!(witness.kind, ForbiddenKind::K23);
                assert_eq!(witness.branch_vertices, vec![0, 1]);
            }
            _ => panic!("K2,3 must be rejected"),
        }
    }

    #[test]
    fn outerplanarity_of_disconnected() {
        let g = DirectedGraph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        match check_outerplanar(&g) {
            Outerplanarity::Outerplanar { outer_order } => {
                assert_eq!(outer_order.len(), 6);
                assert!(edges_noncrossing_on_circle(&g, &outer_order));
            }
            _ => panic!("expected outerplanar"),
        }
    }

    #[test]
    fn augment_path() {
        // A directed 4-path augments to 2n-3 = 5 edges.
        let p = DirectedGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let a = augment_to_maximal_outerplanar(&p).unwrap();
        assert_eq!(a.edge_count(), 5);
        assert!(a.is_acyclic());
        assert!(is_outerplanar(&a));
        for e in p.edges() {
            assert!(a.has_edge(e.0, e.1));
        }
    }

    #[test]
    fn augment_fixpoint_and_base_cases() {
        let single = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(augment_to_maximal_outerplanar(&single).unwrap(), single);

        let tri = DirectedGraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(augment_to_maximal_outerplanar(&tri).unwrap(), tri);

        // Already-maximal 5-vertex fan.
        let fan = DirectedGraph::new(
            5,
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(augment_to_maximal_outerplanar(&fan).unwrap(), fan);

        let lone = DirectedGraph::new(1, vec![]).unwrap();
        assert_eq!(augment_to_maximal_outerplanar(&lone).unwrap(), lone);

        // Two isolated vertices gain the single edge.
        let pair = DirectedGraph::new(2, vec![]).unwrap();
        let a = augment_to_maximal_outerplanar(&pair).unwrap();
        assert_eq!(a.edge_count(), 1);
    }

    #[test]
    fn augment_connects_components() {
        let g = DirectedGraph::new(5, vec![(0, 1), (2, 3), (3, 4)]).unwrap();
        let a = augment_to_maximal_outerplanar(&g).unwrap();
        assert_eq!(a.edge_count(), 2 * 5 - 3);
        assert!(a.is_connected());
        assert!(a.is_acyclic());
        assert!(is_outerplanar(&a));
    }

    #[test]
    fn augment_rejects_bad_inputs() {
        let cyc = DirectedGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            augment_to_maximal_outerplanar(&cyc),
            Err(GraphError::CyclicGraph)
        ));
        let g3 = path_matching(3);
        assert!(matches!(
            augment_to_maximal_outerplanar(&g3),
            Err(GraphError::NotOuterplanar)
        ));
    }

    /// Brute-force minor check used to cross-validate the outerplanarity
    /// test: searches for a K4 or K2,3 minor by labelling vertices with
    /// branch-set indices.
    pub fn has_forbidden_minor(g: &DirectedGraph) -> bool {
        let n = g.n();
        let adj = g.undirected_adjacency();
        let connected = |set: &[usize]| -> bool {
            if set.is_empty() {
                return false;
            }
            let inset: HashSet<usize> = set.iter().copied().collect();
            let mut seen = HashSet::from([set[0]]);
            let mut queue = VecDeque::from([set[0]]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if inset.contains(&w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            seen.len() == set.len()
        };
        let touches = |a: &[usize], b: &[usize]| -> bool {
            a.iter().any(|&u| adj[u].iter().any(|w| b.contains(w)))
        };

        // K4 minor: 4 disjoint connected sets, pairwise adjacent.
        let mut label = vec![0usize; n]; // 0 = unused, 1..=4 branch sets
        fn enumerate(
            i: usize,
            n: usize,
            classes: usize,
            label: &mut Vec<usize>,
            check: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            if i == n {
                return check(label);
            }
            for c in 0..=classes {
                label[i] = c;
                if enumerate(i + 1, n, classes, label, check) {
                    return true;
                }
            }
            label[i] = 0;
            false
        }
        let k4 = enumerate(0, n, 4, &mut label, &mut |label| {
            let sets: Vec<Vec<usize>> = (1..=4)
                .map(|c| (0..n).filter(|&v| label[v] == c).collect())
                .collect();
            sets.iter().all(|s| connected(s))
                && (0..4).all(|i| (i + 1..4).all(|j| touches(&sets[i], &sets[j])))
        });
        if k4 {
            return true;
        }
        let mut label = vec![0usize; n];
        enumerate(0, n, 5, &mut label, &mut |label| {
            // classes 1,2 = the "2" side; 3,4,5 = the "3" side.
            let sets: Vec<Vec<usize>> = (1..=5)
                .map(|c| (0..n).filter(|&v| label[v] == c).collect())
                .collect();
            sets.iter().all(|s| connected(s))
                && [0, 1].iter().all(|&i| [2, 3, 4].iter().all(|&j| touches(&sets[i], &sets[j])))
        })
    }

    #[test]
    fn outerplanarity_matches_forbidden_minor_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..66 {
            let n = if trial >= 60 { 8 } else { 4 + trial % 4 };
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        } else {
                            edges.push((v, u));
                        }
                    }
                }
            }
            let g = DirectedGraph::new(n, edges).unwrap();
            assert_eq!(
                is_outerplanar(&g),
                !has_forbidden_minor(&g),
                "mismatch on {:?}",
                g
            );
        }
    }

    #[test]
    fn augment_random_outerplanar() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            // Random outerplanar DAG: take a random triangulated polygon and
            // keep a random subset of edges.
            let n = 5 + rng.gen_range(0..8);
            let mut edges: Vec<Edge> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, n - 1));
            // Fan chords from vertex 0 keep it maximal outerplanar.
            for v in 2..n - 1 {
                edges.push((0, v));
            }
            let keep: Vec<Edge> = edges
                .into_iter()
                .filter(|_| rng.gen_bool(0.7))
                .collect();
            let g = DirectedGraph::new(n, keep).unwrap();
            assert!(g.is_acyclic());
            assert!(is_outerplanar(&g));
            let a = augment_to_maximal_outerplanar(&g).unwrap();
            assert_eq!(a.edge_count(), 2 * n - 3);
            assert!(a.is_acyclic());
            assert!(is_outerplanar(&a));
            for e in g.edges() {
                assert!(a.has_edge(e.0, e.1));
            }
        }
    }
}
