//! Exact ground truth at desk scale: exact twist number and exact stack
//! number over all topological orderings, plus monotone-subsequence
//! extraction.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{DirectedGraph, GraphError, Vertex};
use crate::layout::{exact_min_stacks_for_ordering, twist_by_sweep, Layout, LayoutError};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("sequence contains duplicate values")]
    DuplicateValues,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
}

/// Resource limits for the exhaustive searches.
#[derive(Debug, Clone)]
pub struct OracleBudget {
    /// Bound on explored search states (roughly, partial orderings).
    pub max_orderings: usize,
    /// Bound on the edge count admitted to exact coloring.
    pub max_edges_for_coloring: usize,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_orderings: 20_000_000,
            max_edges_for_coloring: 24,
            time_cap: Duration::from_secs(600),
        }
    }
}

struct Search<'a> {
    out: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    n: usize,
    g: &'a DirectedGraph,
    nodes: usize,
    budget: &'a OracleBudget,
    started: Instant,
}

impl<'a> Search<'a> {
    fn new(g: &'a DirectedGraph, budget: &'a OracleBudget) -> Self {
        Search {
            out: g.out_adjacency(),
            in_adj: g.in_adjacency(),
            n: g.n(),
            g,
            nodes: 0,
            budget,
            started: Instant::now(),
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget.max_orderings {
            return Err(OracleError::BudgetExceeded(format!(
                "more than {} search states",
                self.budget.max_orderings
            )));
        }
        if self.nodes.is_multiple_of(4096) && self.started.elapsed() > self.budget.time_cap {
            return Err(OracleError::BudgetExceeded(format!(
                "time cap {:?} hit",
                self.budget.time_cap
            )));
        }
        Ok(())
    }

    /// Twist of the completed-edge set of a prefix: edges whose endpoints
    /// are both placed. Computed by the gap sweep over placed positions.
    fn prefix_twist(&self, prefix: &[Vertex], placed: &[bool]) -> usize {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in prefix.iter().enumerate() {
            pos[v] = i;
        }
        let mut intervals: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in self.g.edges() {
            if placed[u] && placed[v] {
                intervals.push((pos[u].min(pos[v]), pos[u].max(pos[v])));
            }
        }
        let mut best = 0;
        for gap in 0..prefix.len().saturating_sub(1) {
            let mut spanning: Vec<(usize, usize)> = intervals
                .iter()
                .copied()
                .filter(|&(a, b)| a <= gap && gap < b)
                .collect();
            spanning.sort_unstable_by(|x, y| {
                (x.0, std::cmp::Reverse(x.1)).cmp(&(y.0, std::cmp::Reverse(y.1)))
            });
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
        best
    }

    /// Enumerates topological orderings in lexicographic order, pruning any
    /// prefix whose completed twist already reaches `prune_at(best)`;
    /// `visit` sees each surviving complete ordering.
    fn run(
        &mut self,
        mut prune_threshold: impl FnMut() -> usize,
        visit: &mut impl FnMut(&[Vertex]) -> Result<(), OracleError>,
    ) -> Result<(), OracleError> {
        let mut indeg: Vec<usize> = vec![0; self.n];
        for &(_, v) in self.g.edges() {
            indeg[v] += 1;
        }
        let mut placed = vec![false; self.n];
        let mut prefix: Vec<Vertex> = Vec::with_capacity(self.n);
        // next_try[d]: smallest vertex id still to consider at depth d.
        let mut next_try = vec![0usize];

        loop {
            let depth = prefix.len();
            if depth == self.n {
                visit(&prefix)?;
                // Backtrack.
                let v = prefix.pop().unwrap();
                placed[v] = false;
                for &w in &self.out[v] {
                    indeg[w] += 1;
                }
                next_try.pop();
                *next_try.last_mut().unwrap() = v + 1;
                continue;
            }
            let mut advanced = false;
            let start = next_try[depth];
            for v in start..self.n {
                if placed[v] || indeg[v] != 0 {
                    continue;
                }
                self.tick()?;
                // Tentatively place v.
                prefix.push(v);
                placed[v] = true;
                for &w in &self.out[v] {
                    indeg[w] -= 1;
                }
                let cutoff = prune_threshold();
                let completed_now = self.in_adj[v].len();
                let worth_checking = cutoff != usize::MAX && completed_now > 0;
                if worth_checking && self.prefix_twist(&prefix, &placed) >= cutoff {
                    // Prune: undo.
                    prefix.pop();
                    placed[v] = false;
                    for &w in &self.out[v] {
                        indeg[w] += 1;
                    }
                    next_try[depth] = v + 1;
                    continue;
                }
                next_try[depth] = v;
                next_try.push(0);
                advanced = true;
                break;
            }
            if advanced {
                continue;
            }
            // Exhausted depth: backtrack.
            match prefix.pop() {
                Some(v) => {
                    placed[v] = false;
                    for &w in &self.out[v] {
                        indeg[w] += 1;
                    }
                    next_try.pop();
                    *next_try.last_mut().unwrap() = v + 1;
                }
                None => return Ok(()),
            }
        }
    }
}

/// Minimum twist number over all topological orderings, with the
/// lexicographically smallest witnessing ordering.
pub fn exact_twist_number(
    g: &DirectedGraph,
    budget: &OracleBudget,
) -> Result<(usize, Vec<Vertex>), OracleError> {
    if !g.is_acyclic() {
        return Err(OracleError::Graph(GraphError::CyclicGraph));
    }
    let mut best = usize::MAX;
    let mut witness: Vec<Vertex> = Vec::new();
    let mut search = Search::new(g, budget);
    let best_cell = std::cell::Cell::new(usize::MAX);
    let mut visit = |order: &[Vertex]| -> Result<(), OracleError> {
        let t = twist_by_sweep(g, order).expect("valid ordering");
        if t < best_cell.get() {
            best_cell.set(t);
            witness = order.to_vec();
        }
        Ok(())
    };
    search.run(|| best_cell.get(), &mut visit)?;
    best = best.min(best_cell.get());
    debug_assert!(best != usize::MAX, "acyclic graph has an ordering");
    Ok((best, witness))
}

/// Minimum stack number over all topological orderings: the minimum over
/// orderings of the exact per-ordering chromatic number. Returns the
/// optimal layout for the lexicographically smallest optimal ordering.
pub fn exact_stack_number(
    g: &DirectedGraph,
    budget: &OracleBudget,
) -> Result<(usize, Layout), OracleError> {
    if !g.is_acyclic() {
        return Err(OracleError::Graph(GraphError::CyclicGraph));
    }
    if g.edge_count() > budget.max_edges_for_coloring {
        return Err(OracleError::BudgetExceeded(format!(
            "{} edges exceeds coloring budget {}",
            g.edge_count(),
            budget.max_edges_for_coloring
        )));
    }
    let best = std::cell::Cell::new(usize::MAX);
    let mut best_layout: Option<Layout> = None;
    let mut search = Search::new(g, budget);
    let max_edges = budget.max_edges_for_coloring;
    let mut visit = |order: &[Vertex]| -> Result<(), OracleError> {
        // The twist is a cheap lower bound for this ordering's chromatic
        // number; skip coloring when it cannot improve.
        let t = twist_by_sweep(g, order).expect("valid ordering");
        if t >= best.get() {
            return Ok(());
        }
        let (k, layout) = exact_min_stacks_for_ordering(g, order, max_edges)?;
        if k < best.get() {
            best.set(k);
            best_layout = Some(layout);
        }
        Ok(())
    };
    search.run(|| best.get(), &mut visit)?;
    let layout = best_layout.expect("acyclic graph has an ordering");
    Ok((best.get(), layout))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneMode {
    Increasing,
    Decreasing,
}

/// Indices of a longest strictly monotone subsequence (lexicographically
/// smallest index sequence among the longest ones). For distinct values and
/// length at least `(a-1)(b-1)+1` there is an increasing subsequence of
/// length `a` or a decreasing one of length `b`.
pub fn longest_monotone_subsequence(
    seq: &[i64],
    mode: MonotoneMode,
) -> Result<Vec<usize>, OracleError> {
    let n = seq.len();
    {
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(OracleError::DuplicateValues);
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let better = |a: i64, b: i64| match mode {
        MonotoneMode::Increasing => a < b,
        MonotoneMode::Decreasing => a > b,
    };
    // len[i]: longest monotone subsequence starting at i.
    let mut len = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if better(seq[i], seq[j]) && len[j] + 1 > len[i] {
                len[i] = len[j] + 1;
            }
        }
    }
    let target = *len.iter().max().unwrap();
    let mut result = Vec::with_capacity(target);
    let mut need = target;
    let mut last: Option<i64> = None;
    let mut from = 0;
    while need > 0 {
        for i in from..n {
            if len[i] == need && last.is_none_or(|l| better(l, seq[i])) {
                result.push(i);
                last = Some(seq[i]);
                from = i + 1;
                break;
            }
        }
        need -= 1;
    }
    Ok(result)
}
