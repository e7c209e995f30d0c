//! Stack-layout data model: crossing graphs, twist and rainbow numbers of a
//! fixed ordering, stack assignment (first-fit and exact), layout
//! verification, and the twist-to-stacks bound calculator.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{DirectedGraph, Edge, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayoutError {
    #[error("ordering is not a permutation of the vertices")]
    BadOrdering,
    #[error("ordering is not topological: edge ({0}, {1}) points right-to-left")]
    NotTopological(usize, usize),
    #[error("instance too large: {0} edges exceeds the exact-coloring budget {1}")]
    TooLarge(usize, usize),
    #[error("argument must be positive")]
    NonPositive,
}

/// A stack layout: a topological ordering plus an edge-to-stack assignment
/// with dense stack ids.
#[derive(Debug, Clone)]
pub struct Layout {
    pub graph: Arc<DirectedGraph>,
    pub ordering: Vec<Vertex>,
    /// Stack id per edge, parallel to `graph.edges()`.
    pub stacks: Vec<usize>,
}

/// First violation found when checking a layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LayoutViolation {
    BadOrdering,
    /// An edge points right-to-left in the ordering.
    NotTopological { edge: Edge },
    /// Two edges on the same stack cross.
    CrossingInStack { stack: usize, first: Edge, second: Edge },
    /// The assignment does not cover every edge.
    MissingAssignment,
}

impl Layout {
    pub fn new(
        graph: Arc<DirectedGraph>,
        ordering: Vec<Vertex>,
        stacks: Vec<usize>,
    ) -> Result<Self, LayoutError> {
        if !is_permutation(graph.n(), &ordering) {
            return Err(LayoutError::BadOrdering);
        }
        if stacks.len() != graph.edge_count() {
            return Err(LayoutError::BadOrdering);
        }
        Ok(Layout { graph, ordering, stacks })
    }

    /// Number of stacks (largest id in use plus one).
    pub fn stack_count(&self) -> usize {
        self.stacks.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn positions(&self) -> Vec<usize> {
        positions_of(self.graph.n(), &self.ordering)
    }

    pub fn stack_of(&self, e: Edge) -> Option<usize> {
        self.graph
            .edges()
            .binary_search(&e)
            .ok()
            .map(|i| self.stacks[i])
    }

    /// Renumbers stack ids densely in order of first use along the sorted
    /// edge list.
    pub fn compact(&mut self) {
        let mut remap: HashMap<usize, usize> = HashMap::new();
        for s in self.stacks.iter_mut() {
            let next = remap.len();
            let id = *remap.entry(*s).or_insert(next);
            *s = id;
        }
    }

    /// Checks the layout: topological ordering, per-stack crossing-freeness,
    /// and totality. Reports the first violation found.
    pub fn verify(&self) -> Result<(), LayoutViolation> {
        if !is_permutation(self.graph.n(), &self.ordering) {
            return Err(LayoutViolation::BadOrdering);
        }
        if self.stacks.len() != self.graph.edge_count() {
            return Err(LayoutViolation::MissingAssignment);
        }
        let pos = self.positions();
        for &(u, v) in self.graph.edges() {
            if pos[u] >= pos[v] {
                return Err(LayoutViolation::NotTopological { edge: (u, v) });
            }
        }
        let edges = self.graph.edges();
        let mut by_stack: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &s) in self.stacks.iter().enumerate() {
            by_stack.entry(s).or_default().push(i);
        }
        let mut stacks: Vec<_> = by_stack.into_iter().collect();
        stacks.sort_unstable();
        for (stack, members) in stacks {
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    if edges_cross(&pos, edges[i], edges[j]) {
                        return Err(LayoutViolation::CrossingInStack {
                            stack,
                            first: edges[i],
                            second: edges[j],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Restricts the layout to the edges of `sub` (which must be a subgraph
    /// on the same vertex set), compacting stack ids.
    pub fn restrict_to(&self, sub: Arc<DirectedGraph>) -> Layout {
        assert_eq!(sub.n(), self.graph.n());
        let stacks = sub
            .edges()
            .iter()
            .map(|&e| self.stack_of(e).expect("sub must be a subgraph"))
            .collect();
        let mut l = Layout { graph: sub, ordering: self.ordering.clone(), stacks };
        l.compact();
        l
    }
}

fn is_permutation(n: usize, ordering: &[Vertex]) -> bool {
    if ordering.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub fn positions_of(n: usize, ordering: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Two edges cross iff their endpoints strictly interleave along the
/// ordering; edges sharing an endpoint never cross.
pub fn edges_cross(pos: &[usize], e1: Edge, e2: Edge) -> bool {
    let (a, b) = (pos[e1.0].min(pos[e1.1]), pos[e1.0].max(pos[e1.1]));
    let (c, d) = (pos[e2.0].min(pos[e2.1]), pos[e2.0].max(pos[e2.1]));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Two edges nest iff one lies strictly inside the other.
pub fn edges_nest(pos: &[usize], e1: Edge, e2: Edge) -> bool {
    let (a, b) = (pos[e1.0].min(pos[e1.1]), pos[e1.0].max(pos[e1.1]));
    let (c, d) = (pos[e2.0].min(pos[e2.1]), pos[e2.0].max(pos[e2.1]));
    (a < c && d < b) || (c < a && b < d)
}

/// The crossing graph of `g` under `ordering`: one node per edge, adjacent
/// iff the edges cross. This is a circle graph.
#[derive(Debug, Clone)]
pub struct CrossingGraph {
    pub edge_list: Vec<Edge>,
    /// Bitset adjacency rows.
    adj: Vec<Vec<u64>>,
}

impl CrossingGraph {
    pub fn node_count(&self) -> usize {
        self.edge_list.len()
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.node_count()).filter(|&j| self.are_adjacent(i, j)).collect()
    }
}

pub fn crossing_graph(
    g: &DirectedGraph,
    ordering: &[Vertex],
) -> Result<CrossingGraph, LayoutError> {
    if !is_permutation(g.n(), ordering) {
        return Err(LayoutError::BadOrdering);
    }
    let pos = positions_of(g.n(), ordering);
    let m = g.edge_count();
    let words = m.div_ceil(64);
    let mut adj = vec![vec![0u64; words]; m];
    let edges = g.edges();
    for i in 0..m {
        for j in i + 1..m {
            if edges_cross(&pos, edges[i], edges[j]) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    Ok(CrossingGraph { edge_list: edges.to_vec(), adj })
}

/// Maximum clique of the crossing graph by branch-and-bound over a
/// degeneracy ordering with a greedy coloring bound.
fn max_clique(cg: &CrossingGraph) -> Vec<usize> {
    let n = cg.node_count();
    if n == 0 {
        return Vec::new();
    }
    // Degeneracy order: repeatedly remove a minimum-degree node.
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|i| cg.degree(i)).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        order.push(v);
        for w in cg.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    order.reverse();
    let rank = positions_of(n, &order);

    let mut best: Vec<usize> = Vec::new();
    // Expand candidates in degeneracy order so each root subproblem only
    // looks rightward.
    fn expand(cg: &CrossingGraph, current: &mut Vec<usize>, cand: &[usize], best: &mut Vec<usize>) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        // Greedy coloring bound on the candidates.
        let mut colors: Vec<usize> = Vec::new();
        let mut color_of: HashMap<usize, usize> = HashMap::new();
        for &v in cand {
            let mut c = 0;
            'outer: loop {
                for (&w, &cw) in &color_of {
                    if cw == c && cg.are_adjacent(v, w) {
                        c += 1;
                        continue 'outer;
                    }
                }
                break;
            }
            color_of.insert(v, c);
            if c >= colors.len() {
                colors.push(0);
            }
        }
        if current.len() + colors.len() <= best.len() {
            return;
        }
        for (idx, &v) in cand.iter().enumerate() {
            if current.len() + (cand.len() - idx) <= best.len() {
                return;
            }
            current.push(v);
            let next: Vec<usize> =
                cand[idx + 1..].iter().copied().filter(|&w| cg.are_adjacent(v, w)).collect();
            expand(cg, current, &next, best);
            current.pop();
        }
    }

    let nodes: Vec<usize> = {
        let mut v: Vec<usize> = (0..n).collect();
        v.sort_by_key(|&i| rank[i]);
        v
    };
    let mut current = Vec::new();
    expand(cg, &mut current, &nodes, &mut best);
    best.sort_unstable();
    best
}

/// Size and witness of a maximum set of pairwise crossing edges under
/// `ordering`: the clique number of the crossing graph.
pub fn twist_of_ordering(
    g: &DirectedGraph,
    ordering: &[Vertex],
) -> Result<(usize, Vec<Edge>), LayoutError> {
    let cg = crossing_graph(g, ordering)?;
    let clique = max_clique(&cg);
    let witness = clique.iter().map(|&i| cg.edge_list[i]).collect();
    Ok((clique.len(), witness))
}

/// Exact twist of an ordering via sweep: a twist lives in some gap between
/// consecutive positions, and among the edges spanning a gap a maximum twist
/// is a longest chain with increasing left and right endpoints.
///
/// Independent of the clique-based route; used to cross-check it.
pub fn twist_by_sweep(g: &DirectedGraph, ordering: &[Vertex]) -> Result<usize, LayoutError> {
    if !is_permutation(g.n(), ordering) {
        return Err(LayoutError::BadOrdering);
    }
    let pos = positions_of(g.n(), ordering);
    let intervals: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    let mut best = 0;
    for gap in 0..g.n().saturating_sub(1) {
        let mut spanning: Vec<(usize, usize)> =
            intervals.iter().copied().filter(|&(a, b)| a <= gap && gap < b).collect();
        spanning.sort_unstable_by_key(|x| (x.0, std::cmp::Reverse(x.1)));
        // Longest strictly increasing subsequence of right endpoints.
        let mut tails: Vec<usize> = Vec::new();
        for &(_, b) in &spanning {
            match tails.binary_search(&b) {
                Ok(_) => {}
                Err(i) => {
                    if i == tails.len() {
                        tails.push(b);
                    } else {
                        tails[i] = b;
                    }
                }
            }
        }
        best = best.max(tails.len());
    }
    Ok(best)
}

/// Size and witness of a maximum set of pairwise nesting edges under
/// `ordering` (the longest chain in the nesting order).
pub fn rainbow_of_ordering(
    g: &DirectedGraph,
    ordering: &[Vertex],
) -> Result<(usize, Vec<Edge>), LayoutError> {
    if !is_permutation(g.n(), ordering) {
        return Err(LayoutError::BadOrdering);
    }
    let pos = positions_of(g.n(), ordering);
    let mut intervals: Vec<(usize, usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (pos[u].min(pos[v]), pos[u].max(pos[v]), i))
        .collect();
    // Sort by left ascending, right ascending: a nesting chain picks
    // strictly increasing lefts with strictly decreasing rights, so it is a
    // strictly decreasing subsequence of rights in this order.
    intervals.sort_unstable();
    let m = intervals.len();
    let mut len = vec![1usize; m];
    let mut next: Vec<Option<usize>> = vec![None; m];
    for i in (0..m).rev() {
        for j in i + 1..m {
            // interval j strictly inside interval i
            if intervals[j].0 > intervals[i].0 && intervals[j].1 < intervals[i].1
                && len[j] + 1 > len[i] {
                    len[i] = len[j] + 1;
                    next[i] = Some(j);
                }
        }
    }
    let Some(start) = (0..m).max_by_key(|&i| len[i]) else {
        return Ok((0, Vec::new()));
    };
    let mut witness = Vec::new();
    let mut cur = Some(start);
    while let Some(i) = cur {
        witness.push(g.edges()[intervals[i].2]);
        cur = next[i];
    }
    Ok((len[start], witness))
}

/// First-fit stack assignment: edges sorted by (left endpoint position,
/// right endpoint position) each take the smallest stack with no crossing.
pub fn greedy_stack_assignment(
    g: &DirectedGraph,
    ordering: &[Vertex],
) -> Result<Layout, LayoutError> {
    if !is_permutation(g.n(), ordering) {
        return Err(LayoutError::BadOrdering);
    }
    let pos = positions_of(g.n(), ordering);
    for &(u, v) in g.edges() {
        if pos[u] >= pos[v] {
            return Err(LayoutError::NotTopological(u, v));
        }
    }
    let mut idx: Vec<usize> = (0..g.edge_count()).collect();
    let edges = g.edges();
    idx.sort_by_key(|&i| (pos[edges[i].0], pos[edges[i].1]));
    let mut stacks_of_edges: Vec<Vec<usize>> = Vec::new();
    let mut assignment = vec![0usize; edges.len()];
    for &i in &idx {
        let mut placed = false;
        for (s, members) in stacks_of_edges.iter_mut().enumerate() {
            if members.iter().all(|&j| !edges_cross(&pos, edges[i], edges[j])) {
                members.push(i);
                assignment[i] = s;
                placed = true;
                break;
            }
        }
        if !placed {
            assignment[i] = stacks_of_edges.len();
            stacks_of_edges.push(vec![i]);
        }
    }
    Layout::new(Arc::new(g.clone()), ordering.to_vec(), assignment)
}

/// Exact minimum number of stacks for a fixed ordering: the chromatic
/// number of the crossing graph, by branch-and-bound.
pub fn exact_min_stacks_for_ordering(
    g: &DirectedGraph,
    ordering: &[Vertex],
    max_edges: usize,
) -> Result<(usize, Layout), LayoutError> {
    if g.edge_count() > max_edges {
        return Err(LayoutError::TooLarge(g.edge_count(), max_edges));
    }
    let pos = positions_of(g.n(), ordering);
    for &(u, v) in g.edges() {
        if pos.get(u).copied().unwrap_or(usize::MAX) >= pos.get(v).copied().unwrap_or(usize::MAX) {
            return Err(LayoutError::NotTopological(u, v));
        }
    }
    let cg = crossing_graph(g, ordering)?;
    let m = cg.node_count();
    if m == 0 {
        let layout = Layout::new(Arc::new(g.clone()), ordering.to_vec(), vec![])?;
        return Ok((0, layout));
    }
    let lower = max_clique(&cg).len().max(1);
    // Static order: nodes by degree descending.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(cg.degree(i)));

    fn try_color(
        cg: &CrossingGraph,
        order: &[usize],
        k: usize,
        i: usize,
        max_used: usize,
        colors: &mut Vec<usize>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..k.min(max_used + 2) {
            let conflict = order[..i].iter().any(|&w| colors[w] == c && cg.are_adjacent(v, w));
            if !conflict {
                colors[v] = c;
                if try_color(cg, order, k, i + 1, max_used.max(c), colors) {
                    return true;
                }
            }
        }
        false
    }

    let mut k = lower;
    let mut colors = vec![usize::MAX; m];
    loop {
        colors.iter_mut().for_each(|c| *c = usize::MAX);
        colors[order[0]] = 0;
        if try_color(&cg, &order, k, 1, 0, &mut colors) {
            let layout = Layout::new(Arc::new(g.clone()), ordering.to_vec(), colors)?;
            debug_assert!(layout.verify().is_ok());
            return Ok((k, layout));
        }
        k += 1;
    }
}

/// Stacks sufficient for any ordering with twist number `k`:
/// `ceil(2k log2(k) + 2k log2(log2(k)) + 10k)`, with the crossing-free case
/// `k = 1` mapping to one stack.
pub fn davies_bound(k: usize) -> Result<u64, LayoutError> {
    if k == 0 {
        return Err(LayoutError::NonPositive);
    }
    if k == 1 {
        return Ok(1);
    }
    let kf = k as f64;
    let value = 2.0 * kf * kf.log2() + 2.0 * kf * kf.log2().log2() + 10.0 * kf;
    Ok(value.ceil() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedGraph;

    fn path_matching(k: usize) -> DirectedGraph {
        let mut edges = Vec::new();
        for i in 0..2 * k - 1 {
            edges.push((i, i + 1));
        }
        for i in 0..k {
            edges.push((i, k + i));
        }
        DirectedGraph::new(2 * k, edges).unwrap()
    }

    fn unique_ordering(g: &DirectedGraph) -> Vec<Vertex> {
        let mut it = g.topological_orderings(2).unwrap();
        let order = it.next().unwrap();
        assert!(it.next().is_none(), "ordering is unique");
        order
    }

    #[test]
    fn crossing_graph_basics() {
        // Path+matching: the matching edges pairwise cross in the unique
        // ordering.
        let g = path_matching(3);
        let order = unique_ordering(&g);
        let cg = crossing_graph(&g, &order).unwrap();
        let idx = |e: Edge| g.edges().iter().position(|&x| x == e).unwrap();
        for &(i, j) in &[((0usize, 3usize), (1usize, 4usize)), ((0, 3), (2, 5)), ((1, 4), (2, 5))] {
            assert!(cg.are_adjacent(idx(i), idx(j)));
        }

        // Star: shared endpoints never cross.
        let star = DirectedGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let cg = crossing_graph(&star, &[0, 1, 2, 3]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(i == j || !cg.are_adjacent(i, j));
            }
        }

        // Nesting is not crossing.
        let nest = DirectedGraph::new(4, vec![(0, 3), (1, 2)]).unwrap();
        let cg = crossing_graph(&nest, &[0, 1, 2, 3]).unwrap();
        assert!(!cg.are_adjacent(0, 1));

        // Bad ordering is rejected.
        assert!(matches!(
            crossing_graph(&star, &[0, 1, 2]),
            Err(LayoutError::BadOrdering)
        ));
    }

    #[test]
    fn crossing_and_nesting_are_exclusive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let pos: Vec<usize> = (0..10).collect();
        for _ in 0..500 {
            let mut picks = Vec::new();
            while picks.len() < 4 {
                let x = rng.gen_range(0..10);
                if !picks.contains(&x) {
                    picks.push(x);
                }
            }
            let e1 = (picks[0], picks[1]);
            let e2 = (picks[2], picks[3]);
            assert!(!(edges_cross(&pos, e1, e2) && edges_nest(&pos, e1, e2)));
        }
    }

    #[test]
    fn twist_values() {
        for k in 2..=4 {
            let g = path_matching(k);
            let order = unique_ordering(&g);
            let (t, witness) = twist_of_ordering(&g, &order).unwrap();
            assert_eq!(t, k);
            assert_eq!(witness.len(), k);
            // Witness is pairwise crossing.
            let pos = positions_of(g.n(), &order);
            for (i, &e1) in witness.iter().enumerate() {
                for &e2 in &witness[i + 1..] {
                    assert!(edges_cross(&pos, e1, e2));
                }
            }
            assert_eq!(twist_by_sweep(&g, &order).unwrap(), k);
        }

        // A star is crossing-free in any ordering.
        let star = DirectedGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(twist_of_ordering(&star, &[0, 1, 2, 3]).unwrap().0, 1);
    }

    #[test]
    fn twist_matches_sweep_on_random_orderings() {
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..60 {
            let n = 4 + rng.gen_range(0..6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = DirectedGraph::new(n, edges).unwrap();
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            // Identity-direction edges under a shuffled ordering are not
            // topological in general; twist is still defined for any
            // permutation.
            let (t, _) = twist_of_ordering(&g, &order).unwrap();
            assert_eq!(t, twist_by_sweep(&g, &order).unwrap());
        }
    }

    #[test]
    fn rainbow_values() {
        // Perfect rainbow {(i, 2n-1-i)}.
        let n = 4;
        let g = DirectedGraph::new(2 * n, (0..n).map(|i| (i, 2 * n - 1 - i))).unwrap();
        let order: Vec<usize> = (0..2 * n).collect();
        let (r, witness) = rainbow_of_ordering(&g, &order).unwrap();
        assert_eq!(r, n);
        assert_eq!(witness.len(), n);

        // Path+matching k=3: maximum rainbow has 2 edges (frozen from the
        // subset brute force below).
        let g = path_matching(3);
        let order = unique_ordering(&g);
        assert_eq!(rainbow_of_ordering(&g, &order).unwrap().0, 2);
        assert_eq!(brute_force_rainbow(&g, &order), 2);

        // Single edge.
        let single = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(rainbow_of_ordering(&single, &[0, 1]).unwrap().0, 1);
    }

    fn brute_force_rainbow(g: &DirectedGraph, order: &[Vertex]) -> usize {
        let pos = positions_of(g.n(), order);
        let m = g.edge_count();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let picked: Vec<Edge> = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| g.edges()[i])
                .collect();
            let ok = picked.iter().enumerate().all(|(a, &e1)| {
                picked[a + 1..].iter().all(|&e2| edges_nest(&pos, e1, e2))
            });
            if ok {
                best = best.max(picked.len());
            }
        }
        best
    }

    fn brute_force_twist(g: &DirectedGraph, order: &[Vertex]) -> usize {
        let pos = positions_of(g.n(), order);
        let m = g.edge_count();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let picked: Vec<Edge> = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| g.edges()[i])
                .collect();
            let ok = picked.iter().enumerate().all(|(a, &e1)| {
                picked[a + 1..].iter().all(|&e2| edges_cross(&pos, e1, e2))
            });
            if ok {
                best = best.max(picked.len());
            }
        }
        best
    }

    #[test]
    fn twist_and_rainbow_match_subset_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..25 {
            let n = 5 + rng.gen_range(0..3);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            if edges.len() > 12 {
                edges.truncate(12);
            }
            let g = DirectedGraph::new(n, edges).unwrap();
            let order: Vec<usize> = (0..n).collect();
            assert_eq!(twist_of_ordering(&g, &order).unwrap().0, brute_force_twist(&g, &order));
            assert_eq!(
                rainbow_of_ordering(&g, &order).unwrap().0,
                brute_force_rainbow(&g, &order)
            );
        }
    }

    #[test]
    fn greedy_assignment() {
        // Path+matching k=4 needs exactly 4 stacks in its unique ordering.
        let g = path_matching(4);
        let order = unique_ordering(&g);
        let l = greedy_stack_assignment(&g, &order).unwrap();
        assert!(l.verify().is_ok());
        assert_eq!(l.stack_count(), 4);

        // Crossing-free ordering: one stack.
        let p = DirectedGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let l = greedy_stack_assignment(&p, &[0, 1, 2, 3]).unwrap();
        assert_eq!(l.stack_count(), 1);

        // Empty edge set: zero stacks.
        let e = DirectedGraph::new(3, vec![]).unwrap();
        let l = greedy_stack_assignment(&e, &[0, 1, 2]).unwrap();
        assert_eq!(l.stack_count(), 0);

        // Non-topological ordering is rejected.
        assert!(matches!(
            greedy_stack_assignment(&p, &[3, 2, 1, 0]),
            Err(LayoutError::NotTopological(..))
        ));
    }

    #[test]
    fn exact_coloring() {
        let g = path_matching(3);
        let order = unique_ordering(&g);
        let (k, layout) = exact_min_stacks_for_ordering(&g, &order, 24).unwrap();
        assert_eq!(k, 3);
        assert!(layout.verify().is_ok());

        // A 2-twist needs 2.
        let two = DirectedGraph::new(4, vec![(0, 2), (1, 3)]).unwrap();
        assert_eq!(exact_min_stacks_for_ordering(&two, &[0, 1, 2, 3], 24).unwrap().0, 2);

        // Crossing-free needs 1.
        let p = DirectedGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(exact_min_stacks_for_ordering(&p, &[0, 1, 2], 24).unwrap().0, 1);

        // Budget.
        assert!(matches!(
            exact_min_stacks_for_ordering(&g, &order, 3),
            Err(LayoutError::TooLarge(8, 3))
        ));
    }

    #[test]
    fn twist_le_exact_le_greedy() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = 5 + rng.gen_range(0..4);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = DirectedGraph::new(n, edges).unwrap();
            let order: Vec<usize> = (0..n).collect();
            let (t, _) = twist_of_ordering(&g, &order).unwrap();
            let (x, _) = exact_min_stacks_for_ordering(&g, &order, 24).unwrap();
            let greedy = greedy_stack_assignment(&g, &order).unwrap().stack_count();
            assert!(t <= x, "twist {} <= exact {}", t, x);
            assert!(x <= greedy, "exact {} <= greedy {}", x, greedy);
        }
    }

    #[test]
    fn verify_catches_violations() {
        let g = Arc::new(path_matching(2));
        let order = unique_ordering(&g);
        // Valid 2-stack layout.
        let good = greedy_stack_assignment(&g, &order).unwrap();
        assert!(good.verify().is_ok());

        // Forcing both matching edges onto one stack is a crossing
        // violation.
        let mut stacks = good.stacks.clone();
        for (i, &e) in g.edges().iter().enumerate() {
            if e == (0, 2) || e == (1, 3) {
                stacks[i] = 0;
            }
        }
        let bad = Layout::new(g.clone(), order.clone(), stacks).unwrap();
        assert!(matches!(
            bad.verify(),
            Err(LayoutViolation::CrossingInStack { .. })
        ));

        // An edge pointing right-to-left is a topology violation.
        let rev = Layout::new(g.clone(), vec![3, 2, 1, 0], good.stacks.clone()).unwrap();
        assert!(matches!(
            rev.verify(),
            Err(LayoutViolation::NotTopological { .. })
        ));
    }

    #[test]
    fn davies_values() {
        assert_eq!(davies_bound(4).unwrap(), 64);
        assert_eq!(davies_bound(2).unwrap(), 24);
        assert_eq!(davies_bound(1).unwrap(), 1);
        assert!(matches!(davies_bound(0), Err(LayoutError::NonPositive)));
    }

    #[test]
    fn restrict_and_compact() {
        let g = Arc::new(path_matching(3));
        let order = unique_ordering(&g);
        let l = greedy_stack_assignment(&g, &order).unwrap();
        let sub = Arc::new(
            DirectedGraph::new(6, vec![(0, 3), (1, 4), (2, 5)]).unwrap(),
        );
        let r = l.restrict_to(sub);
        assert!(r.verify().is_ok());
        assert_eq!(r.stacks.len(), 3);
        // Dense ids from zero.
        let max = r.stacks.iter().max().unwrap();
        assert!(r.stacks.iter().all(|&s| s <= *max));
        assert_eq!(r.stack_count(), max + 1);
    }
}
