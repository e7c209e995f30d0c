//! Generators for lower-bound families: the path-plus-matching graphs, the
//! 3-fence, and the 2-tree family with unbounded twist number, plus the
//! rainbow-with-children trichotomy classifier.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DirectedGraph, Edge, GraphError, Vertex};
use crate::layout::{edges_cross, positions_of};
use crate::oracle::{longest_monotone_subsequence, MonotoneMode, OracleError};

#[derive(Debug, Error)]
pub enum AdversaryError {
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
    #[error("edge between {0} and {1} is oriented the wrong way")]
    WrongOrientation(usize, usize),
    #[error("instance would have {got} vertices, over the cap {cap}; pass an override width")]
    SizeExceeded { got: BigUint, cap: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The 2k-vertex graph made of the directed path `l_1..l_k r_1..r_k` plus
/// the matching `l_i -> r_i`. Its unique topological ordering contains a
/// k-twist, so its stack number is exactly k.
pub fn gen_path_matching(k: usize) -> DirectedGraph {
    assert!(k >= 2, "pattern needs k >= 2");
    let mut edges = Vec::with_capacity(3 * k - 1);
    for i in 0..2 * k - 1 {
        edges.push((i, i + 1));
    }
    for i in 0..k {
        edges.push((i, k + i));
    }
    let names = (1..=k)
        .map(|i| format!("l{}", i))
        .chain((1..=k).map(|i| format!("r{}", i)))
        .collect();
    DirectedGraph::with_names(2 * k, edges, names).expect("valid by construction")
}

/// Left endpoints of the fence matching: vertices named a1, a2, a3.
pub const FENCE_A: [Vertex; 3] = [0, 7, 5];
/// Right endpoints of the fence matching: vertices named b1, b2, b3.
pub const FENCE_B: [Vertex; 3] = [1, 3, 4];

/// An 8-vertex maximal outerplanar DAG whose every topological ordering
/// contains a 3-twist, so its twist and stack numbers are exactly 3.
///
/// The matching a1b1, a2b2, a3b3 forms the twist in every ordering that
/// puts a3 left of b1; the half-turn anti-automorphism `v -> v + 4 (mod 8)`
/// maps a_i to b_{4-i} and handles the mirrored case.
pub fn gen_three_fence() -> DirectedGraph {
    let edges = vec![
        (0, 1), // a1 -> b1
        (0, 7), // a1 -> a2
        (1, 2), // b1 -> t
        (1, 3), // b1 -> b2
        (3, 2), // b2 -> t
        (3, 4), // b2 -> b3
        (5, 3), // a3 -> b2
        (5, 4), // a3 -> b3
        (6, 5), // s -> a3
        (6, 7), // s -> a2
        (7, 1), // a2 -> b1
        (7, 3), // a2 -> b2
        (7, 5), // a2 -> a3
    ];
    let names = ["a1", "b1", "t", "b2", "b3", "a3", "s", "a2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    DirectedGraph::with_names(8, edges, names).expect("valid by construction")
}

/// The width sequence `r_1, ..., r_k`: `r_k = 1` and
/// `r_s = 2 (2 r_{s+1})^{1 + r_{s+1} k}`. Grows astronomically; exact big
/// integers.
pub fn r_sequence(k: usize) -> Vec<BigUint> {
    assert!(k >= 1);
    let mut r = vec![BigUint::one(); k];
    for s in (0..k - 1).rev() {
        let next = &r[s + 1];
        let exponent = (next * BigUint::from(k)) + BigUint::one();
        let base = next * BigUint::from(2u32);
        let exponent = exponent.to_u64().expect("tower exponent fits in u64 at desk scale");
        r[s] = BigUint::from(2u32) * base.pow(exponent.try_into().expect("exponent fits u32"));
    }
    r
}

/// Gadget width for the full construction: `N = r_1 * k`.
pub fn full_width(k: usize) -> BigUint {
    r_sequence(k).swap_remove(0) * BigUint::from(k)
}

/// Stacks the tower gadget onto the edge `ab` (oriented `a -> b`): a chain
/// of right children `b^1..b^N` over `a`, and left children `a^1..a^N` with
/// `a^j` stacked onto `a b^j`. Returns the grown graph and the fresh
/// matching `{a^j b^j}`.
pub fn gen_t_gadget(
    g: &DirectedGraph,
    ab: Edge,
    width: usize,
) -> Result<(DirectedGraph, Vec<Edge>), AdversaryError> {
    let (a, b) = ab;
    if !g.has_edge(a, b) {
        if g.has_edge(b, a) {
            return Err(AdversaryError::WrongOrientation(a, b));
        }
        return Err(AdversaryError::EdgeMissing(a, b));
    }
    assert!(width >= 1);
    let n0 = g.n();
    let b_id = |j: usize| n0 + j - 1; // b^j, j = 1..=width
    let a_id = |j: usize| n0 + width + j - 1; // a^j
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for j in 1..=width {
        let prev_b = if j == 1 { b } else { b_id(j - 1) };
        // b^j stacked as a right child onto (a, b^{j-1}).
        edges.push((a, b_id(j)));
        edges.push((prev_b, b_id(j)));
        // a^j stacked as a left child onto (a, b^j).
        edges.push((a_id(j), a));
        edges.push((a_id(j), b_id(j)));
    }
    let grown = DirectedGraph::new(n0 + 2 * width, edges)?;
    let matching = (1..=width).map(|j| (a_id(j), b_id(j))).collect();
    Ok((grown, matching))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwistGuarantee {
    /// Full-width instance: every topological ordering has a k-twist.
    AtLeastK,
    /// Truncated width: structural invariants hold, the twist bound does
    /// not.
    None,
}

/// Parameters and tracked matchings of a generated unbounded-twist
/// instance. Fields are declared alphabetically so the JSON form has
/// sorted keys.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdversarySpec {
    pub guarantee: TwistGuarantee,
    pub k: usize,
    /// Matchings `E_0..E_k`; `E_s` edges receive gadgets at level `s+1`.
    pub matchings: Vec<Vec<Edge>>,
    /// Decimal rendering of the full width `N = r_1 k`.
    pub n_full_decimal: String,
    pub n_override: Option<usize>,
    /// Decimal renderings of `r_1..r_k` (exact).
    pub r_decimal: Vec<String>,
    /// Width actually used to build the instance.
    pub width_used: usize,
}

const DEFAULT_VERTEX_CAP: usize = 1_000_000;

/// Builds the nested-gadget 2-tree `G_k` with matchings `E_0..E_k`.
///
/// Without an override the full `N = r_1 k` is used and the instance is
/// refused when its vertex count exceeds one million; with `n_override`
/// every gadget uses that width instead (structural invariants still hold,
/// the twist guarantee does not).
pub fn gen_unbounded_twist(
    k: usize,
    n_override: Option<usize>,
) -> Result<(DirectedGraph, AdversarySpec), AdversaryError> {
    assert!(k >= 1);
    let r = r_sequence(k);
    let n_full = &r[0] * BigUint::from(k);
    let width = match n_override {
        Some(w) => {
            assert!(w >= 1);
            w
        }
        None => {
            // Vertex count: 2 + sum_{s=0}^{k-1} |E_s| 2N with |E_s| = N^s.
            let mut total = BigUint::from(2u32);
            let mut matching_size = BigUint::one();
            for _ in 0..k {
                total += &matching_size * (BigUint::from(2u32) * &n_full);
                matching_size *= &n_full;
            }
            match total.to_usize() {
                Some(t) if t <= DEFAULT_VERTEX_CAP => n_full
                    .to_usize()
                    .expect("width fits if total fits"),
                _ => {
                    return Err(AdversaryError::SizeExceeded {
                        got: total,
                        cap: DEFAULT_VERTEX_CAP,
                    })
                }
            }
        }
    };

    let mut g = DirectedGraph::new(2, vec![(0, 1)])?;
    let mut matchings: Vec<Vec<Edge>> = vec![vec![(0, 1)]];
    for _ in 0..k {
        let level: Vec<Edge> = matchings.last().unwrap().clone();
        let mut next = Vec::new();
        for ab in level {
            let (grown, matching) = gen_t_gadget(&g, ab, width)?;
            g = grown;
            next.extend(matching);
        }
        matchings.push(next);
    }
    let spec = AdversarySpec {
        guarantee: if n_override.is_none()
            || Some(&n_full) == n_override.map(BigUint::from).as_ref()
        {
            TwistGuarantee::AtLeastK
        } else {
            TwistGuarantee::None
        },
        k,
        matchings,
        n_full_decimal: n_full.to_string(),
        n_override,
        r_decimal: r.iter().map(|x| x.to_string()).collect(),
        width_used: width,
    };
    Ok((g, spec))
}

/// One rainbow edge with its right child: `(a_i, b_i, c_i)`.
pub type RainbowChild = (Vertex, Vertex, Vertex);

/// Outcome of the rainbow-with-children case analysis, with a
/// machine-verified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RainbowOutcome {
    /// `k` pairwise crossing edges.
    Twist { edges: Vec<Edge> },
    /// `b_{i+r}` precedes `c_i` precedes `b_n`: the edge `a_i c_i` crosses
    /// at least `r` rainbow edges (their indices are listed).
    CrossingEdge { index: usize, edge: Edge, crossed: Vec<usize> },
    /// Indices (1-based) of more than `n/(2r)` rainbow edges whose child
    /// edges are pairwise non-crossing.
    NoncrossingSet { indices: Vec<usize> },
}

/// Case analysis for a nested rainbow `a_n < ... < a_1 < b_1 < ... < b_n`
/// whose edges each carry a right child `c_i`: returns a k-twist, a single
/// child edge crossing at least `r` rainbow edges, or a spread-out set of
/// more than `n/(2r)` indices with pairwise non-crossing child edges.
///
/// The decision order mirrors the case analysis: children beyond `b_n`
/// first (largest-monotone-subsequence argument), then far-reaching
/// children, then the `r`-spaced selection.
pub fn classify_rainbow_children(
    g: &DirectedGraph,
    ordering: &[Vertex],
    rainbow: &[RainbowChild],
    r: usize,
    k: usize,
) -> Result<RainbowOutcome, AdversaryError> {
    let n = rainbow.len();
    if k < 1 || r < 1 {
        return Err(AdversaryError::PreconditionViolated("need r, k >= 1".into()));
    }
    if n < 2 * k * k {
        return Err(AdversaryError::PreconditionViolated(format!(
            "need n >= 2k^2 = {}, got {}",
            2 * k * k,
            n
        )));
    }
    let pos = positions_of(g.n(), ordering);
    if pos.contains(&usize::MAX) {
        return Err(AdversaryError::PreconditionViolated(
            "ordering is not a permutation of the vertices".into(),
        ));
    }
    // Nesting shape: a_n < ... < a_1 < b_1 < ... < b_n, and each c_i a
    // right child of the edge a_i b_i.
    for w in rainbow.windows(2) {
        let ((a_lo, b_lo, _), (a_hi, b_hi, _)) = (w[0], w[1]);
        if !(pos[a_hi] < pos[a_lo] && pos[b_lo] < pos[b_hi]) {
            return Err(AdversaryError::PreconditionViolated(
                "rainbow edges are not nested in index order".into(),
            ));
        }
    }
    for &(a, b, c) in rainbow {
        if pos[a] >= pos[b] {
            return Err(AdversaryError::PreconditionViolated(
                "rainbow edge points right-to-left".into(),
            ));
        }
        if !g.has_edge(a, b) {
            return Err(AdversaryError::EdgeMissing(a, b));
        }
        if !(g.has_edge(a, c) && g.has_edge(b, c)) {
            return Err(AdversaryError::PreconditionViolated(format!(
                "vertex {} is not a right child of ({}, {})",
                c, a, b
            )));
        }
        if pos[c] <= pos[b] {
            return Err(AdversaryError::PreconditionViolated(format!(
                "right child {} does not lie right of its parents",
                c
            )));
        }
    }
    let b_n = rainbow[n - 1].1;

    // Case 1: many children beyond b_n.
    let beyond: Vec<usize> = (0..n).filter(|&i| pos[rainbow[i].2] > pos[b_n]).collect();
    if beyond.len() >= k * k {
        // Order those children by position; their (1-based) rainbow indices
        // form the sequence for the monotone-subsequence argument.
        let mut by_c = beyond.clone();
        by_c.sort_by_key(|&i| pos[rainbow[i].2]);
        let seq: Vec<i64> = by_c.iter().map(|&i| i as i64).collect();
        let inc = longest_monotone_subsequence(&seq, MonotoneMode::Increasing)?;
        let dec = longest_monotone_subsequence(&seq, MonotoneMode::Decreasing)?;
        let twist: Vec<Edge> = if inc.len() >= k {
            inc[..k].iter().map(|&s| {
                let i = by_c[s];
                (rainbow[i].1, rainbow[i].2)
            }).collect()
        } else {
            debug_assert!(dec.len() >= k, "monotone-subsequence bound");
            dec[..k].iter().map(|&s| {
                let i = by_c[s];
                (rainbow[i].0, rainbow[i].2)
            }).collect()
        };
        verify_pairwise_crossing(&pos, &twist)?;
        return Ok(RainbowOutcome::Twist { edges: twist });
    }

    // Children not beyond b_n sit among the b-vertices.
    let inside: Vec<usize> = (0..n).filter(|&i| pos[rainbow[i].2] < pos[b_n]).collect();

    // Case 2: some child reaches at least r rainbow edges to the right.
    for &i in &inside {
        if i + r < n && pos[rainbow[i + r].1] < pos[rainbow[i].2] {
            let (a_i, _, c_i) = rainbow[i];
            let crossed: Vec<usize> = (0..n)
                .filter(|&j| edges_cross(&pos, (a_i, c_i), (rainbow[j].0, rainbow[j].1)))
                .map(|j| j + 1)
                .collect();
            if crossed.len() < r {
                return Err(AdversaryError::PreconditionViolated(format!(
                    "far-reaching child at index {} crosses only {} rainbow edges",
                    i + 1,
                    crossed.len()
                )));
            }
            return Ok(RainbowOutcome::CrossingEdge { index: i + 1, edge: (a_i, c_i), crossed });
        }
    }

    // Case 3: every child is r-close; take every r-th index.
    let selected: Vec<usize> = inside.iter().step_by(r).copied().collect();
    if 2 * r * selected.len() <= n {
        return Err(AdversaryError::PreconditionViolated(format!(
            "selection of {} indices is not larger than n/(2r)",
            selected.len()
        )));
    }
    for (s, &i) in selected.iter().enumerate() {
        for &j in &selected[s + 1..] {
            let (a_i, b_i, c_i) = rainbow[i];
            let (a_j, b_j, c_j) = rainbow[j];
            for e1 in [(a_i, c_i), (b_i, c_i)] {
                for e2 in [(a_j, c_j), (b_j, c_j)] {
                    if edges_cross(&pos, e1, e2) {
                        return Err(AdversaryError::PreconditionViolated(format!(
                            "selected indices {} and {} have crossing child edges",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(RainbowOutcome::NoncrossingSet { indices: selected.iter().map(|&i| i + 1).collect() })
}

fn verify_pairwise_crossing(pos: &[usize], edges: &[Edge]) -> Result<(), AdversaryError> {
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if !edges_cross(pos, e1, e2) {
                return Err(AdversaryError::PreconditionViolated(format!(
                    "claimed twist edges {:?} and {:?} do not cross",
                    e1, e2
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_outerplanar;
    use crate::oracle::{exact_stack_number, exact_twist_number, OracleBudget};
    use crate::twotree::{
        build_construction_sequence, classify_stacking, is_two_tree, monotonicity_profile,
        StackingType,
    };

    #[test]
    fn r_sequence_values() {
        assert_eq!(r_sequence(1), vec![BigUint::one()]);
        assert_eq!(full_width(1), BigUint::one());

        let r2 = r_sequence(2);
        assert_eq!(r2[1], BigUint::one());
        assert_eq!(r2[0], BigUint::from(16u32));
        assert_eq!(full_width(2), BigUint::from(32u32));

        // k = 3: r_2 = 2*2^4 = 32 and r_1 = 2*64^97 = 2^583.
        let r3 = r_sequence(3);
        assert_eq!(r3[2], BigUint::one());
        assert_eq!(r3[1], BigUint::from(32u32));
        assert_eq!(r3[0], BigUint::one() << 583);
        assert_eq!(full_width(3), (BigUint::one() << 583) * BigUint::from(3u32));
    }

    #[test]
    fn path_matching_shape() {
        let g = gen_path_matching(2);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 5);

        let g = gen_path_matching(3);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.count_topological_orderings(10).unwrap(), 1);
        let budget = OracleBudget::default();
        assert_eq!(exact_twist_number(&g, &budget).unwrap().0, 3);
        assert!(!is_outerplanar(&g));
        assert!(is_outerplanar(&gen_path_matching(2)));
    }

    #[test]
    fn fence_properties() {
        let g = gen_three_fence();
        assert_eq!(g.n(), 8);
        assert!(g.is_acyclic());
        assert!(is_outerplanar(&g));
        assert_eq!(g.edge_count(), 2 * 8 - 3);
        assert!(is_two_tree(&g));

        let budget = OracleBudget::default();
        let (tn, _) = exact_twist_number(&g, &budget).unwrap();
        assert_eq!(tn, 3);
        let (sn, layout) = exact_stack_number(&g, &budget).unwrap();
        assert_eq!(sn, 3);
        assert!(layout.verify().is_ok());

        // Not monotone for any base edge.
        let profile = monotonicity_profile(&g).unwrap();
        assert_eq!(profile.blocks.len(), 1);
        assert!(profile.blocks[0].monotone_base.is_none());

        // The half-turn is an edge-reversing automorphism mapping a_i to
        // b_{4-i}.
        let sigma = |v: usize| (v + 4) % 8;
        for &(u, v) in g.edges() {
            assert!(g.has_edge(sigma(v), sigma(u)));
        }
        for i in 0..3 {
            assert_eq!(sigma(FENCE_A[i]), FENCE_B[2 - i]);
        }

        // In every topological ordering with a3 left of b1, the matching is
        // a 3-twist; and every ordering has twist exactly 3.
        for order in g.topological_orderings(100).unwrap() {
            let pos = positions_of(8, &order);
            let m: Vec<Edge> = (0..3).map(|i| (FENCE_A[i], FENCE_B[i])).collect();
            if pos[FENCE_A[2]] < pos[FENCE_B[0]] {
                assert!(verify_pairwise_crossing(&pos, &m).is_ok());
            }
            let (t, _) = crate::layout::twist_of_ordering(&g, &order).unwrap();
            assert_eq!(t, 3);
        }
    }

    #[test]
    fn t_gadget_counts_and_orderings() {
        let base = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
        let (g, matching) = gen_t_gadget(&base, (0, 1), 1).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(matching.len(), 1);

        let (g, matching) = gen_t_gadget(&base, (0, 1), 3).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 1 + 4 * 3);
        assert_eq!(matching.len(), 3);
        // a = 0 and b = 1 are consecutive in every topological ordering,
        // and the b^j come in index order right of b.
        let b_ids = [2, 3, 4];
        for order in g.topological_orderings(1_000_000).unwrap() {
            let pos = positions_of(8, &order);
            assert_eq!(pos[1], pos[0] + 1);
            assert!(pos[b_ids[0]] > pos[1]);
            assert!(pos[b_ids[0]] < pos[b_ids[1]]);
            assert!(pos[b_ids[1]] < pos[b_ids[2]]);
        }

        assert!(matches!(
            gen_t_gadget(&base, (1, 0), 1),
            Err(AdversaryError::WrongOrientation(1, 0))
        ));
        let path = DirectedGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            gen_t_gadget(&path, (0, 2), 1),
            Err(AdversaryError::EdgeMissing(0, 2))
        ));
    }

    #[test]
    fn unbounded_twist_structure() {
        // k = 1 full: N = 1, the 4-vertex gadget.
        let (g, spec) = gen_unbounded_twist(1, None).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(spec.guarantee, TwistGuarantee::AtLeastK);
        assert_eq!(spec.matchings.len(), 2);

        // k = 2 truncated to width 2.
        let (g, spec) = gen_unbounded_twist(2, Some(2)).unwrap();
        assert_eq!(spec.guarantee, TwistGuarantee::None);
        assert_eq!(g.n(), 2 + 2 * 2 + 2 * (2 * 2));
        assert!(is_two_tree(&g));
        assert!(g.is_acyclic());

        // Structural invariants: monotone from the original base, at most
        // two stacked per edge, matchings disjoint and stacked-free in
        // their own level.
        verify_adversary_structure(&g, &spec);

        // k = 3 without an override is astronomically large.
        assert!(matches!(
            gen_unbounded_twist(3, None),
            Err(AdversaryError::SizeExceeded { .. })
        ));
    }

    pub fn verify_adversary_structure(g: &DirectedGraph, spec: &AdversarySpec) {
        let seq = build_construction_sequence(g, (0, 1)).expect("2-tree from base");
        // Monotone 2-tree: every stacking is monotone.
        let mut children_per_edge: std::collections::HashMap<Edge, usize> =
            std::collections::HashMap::new();
        for &(u, parent) in &seq.steps {
            let kind = classify_stacking(parent, u, g).unwrap();
            assert!(kind.is_monotone(), "stacking of {} is {:?}", u, kind);
            assert!(kind == StackingType::MonotoneLeft || kind == StackingType::MonotoneRight);
            *children_per_edge.entry(parent).or_insert(0) += 1;
        }
        assert!(children_per_edge.values().all(|&c| c <= 2));

        // Matchings pairwise disjoint.
        let mut seen: std::collections::HashSet<Edge> = std::collections::HashSet::new();
        for m in &spec.matchings {
            for &e in m {
                assert!(seen.insert(e), "matchings share edge {:?}", e);
            }
        }
        // No vertex is stacked onto an E_s edge within G_s: equivalent here
        // to both endpoints of each E_s edge predating any child of that
        // edge, and children of E_s edges only appearing at level s+1.
        // G_s vertex count grows by 2 * width per gadget; a child of an
        // E_s edge must have an id at least the size of G_s.
        let mut level_size = vec![2usize];
        for s in 0..spec.k {
            let gadgets = spec.matchings[s].len();
            level_size.push(level_size[s] + gadgets * 2 * spec.width_used);
        }
        for &(child, parent) in &seq.steps {
            for (s, m) in spec.matchings.iter().enumerate() {
                if m.contains(&parent) {
                    assert!(
                        child >= level_size[s],
                        "vertex {} stacked onto level-{} matching edge {:?} inside G_{}",
                        child,
                        s,
                        parent,
                        s
                    );
                }
            }
        }
    }

    fn nested_rainbow_graph(
        n: usize,
        child_positions: impl Fn(usize) -> usize,
    ) -> (DirectedGraph, Vec<Vertex>, Vec<RainbowChild>) {
        // Vertices: a_n..a_1 at 0..n, b_1..b_n afterwards, children
        // interleaved to the requested positions. Build the ordering first,
        // then the edges.
        let a = |i: usize| n - i; // a_i, i = 1..=n, positions descending
        let b = |i: usize| n + i - 1;
        let c = |i: usize| 2 * n + i - 1;
        let mut edges = Vec::new();
        let mut triples = Vec::new();
        for i in 1..=n {
            edges.push((a(i), b(i)));
            edges.push((a(i), c(i)));
            edges.push((b(i), c(i)));
            triples.push((a(i), b(i), c(i)));
        }
        let g = DirectedGraph::new(3 * n, edges).unwrap();
        // Ordering: a_n .. a_1, then b/c merged per child_positions: the
        // callback gives, for child i, how many b's precede it... simplest:
        // place all b's, then insert c_i right after position given.
        let mut order: Vec<Vertex> = (0..n).collect(); // a_n..a_1 are 0..n-1? a(n)=0 .. a(1)=n-1
        let mut tail: Vec<Vertex> = Vec::new();
        for i in 1..=n {
            tail.push(b(i));
        }
        // insert children: child i goes right after b_{child_positions(i)}.
        for i in (1..=n).rev() {
            let after_b = child_positions(i).min(n);
            let pos_b = tail.iter().position(|&v| v == b(after_b)).unwrap();
            tail.insert(pos_b + 1, c(i));
        }
        order.extend(tail);
        (g, order, triples)
    }

    #[test]
    fn classifier_case_twist() {
        // All children beyond b_n in increasing index order: twist from the
        // b-vertices.
        let k = 2;
        let n = 2 * k * k;
        let (g, order, triples) = nested_rainbow_graph(n, |_i| n);
        // children after b_n, in index order by construction (inserted in
        // reverse, each right after b_n, so c_1 ends first): fix by sorting:
        // the helper puts c_i right after b_n in reverse insertion order,
        // so the final order is c_1, c_2, ..: increasing indices.
        let out = classify_rainbow_children(&g, &order, &triples, 2, k).unwrap();
        match out {
            RainbowOutcome::Twist { edges } => assert_eq!(edges.len(), k),
            other => panic!("expected twist, got {:?}", other),
        }
    }

    #[test]
    fn classifier_case_crossing_edge() {
        // One child far to the right (but before b_n), the rest right next
        // to their own b.
        let k = 2;
        let n = 2 * k * k;
        let r = 2;
        let far = 1usize;
        let (g, order, triples) =
            nested_rainbow_graph(n, |i| if i == far { far + r } else { i });
        let out = classify_rainbow_children(&g, &order, &triples, r, k).unwrap();
        match out {
            RainbowOutcome::CrossingEdge { index, crossed, .. } => {
                assert_eq!(index, far);
                assert!(crossed.len() >= r);
            }
            other => panic!("expected crossing edge, got {:?}", other),
        }
    }

    #[test]
    fn classifier_case_noncrossing_set() {
        // Every child immediately right of its own b_i.
        let k = 2;
        let n = 2 * k * k;
        let r = 2;
        let (g, order, triples) = nested_rainbow_graph(n, |i| i);
        let out = classify_rainbow_children(&g, &order, &triples, r, k).unwrap();
        match out {
            RainbowOutcome::NoncrossingSet { indices } => {
                assert!(2 * r * indices.len() > n);
            }
            other => panic!("expected noncrossing set, got {:?}", other),
        }
    }

    #[test]
    fn classifier_rejects_bad_inputs() {
        let k = 3;
        let n = 4; // < 2k^2
        let (g, order, triples) = nested_rainbow_graph(n, |i| i);
        assert!(matches!(
            classify_rainbow_children(&g, &order, &triples, 2, k),
            Err(AdversaryError::PreconditionViolated(_))
        ));
    }
}
