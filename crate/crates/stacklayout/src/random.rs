//! Seeded random instance generators for tests, benchmarks, and the
//! acceptance corpora.

use rand::Rng;

use crate::graph::{DirectedGraph, Edge, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Transitive,
    Left,
    Right,
}

/// Random maximal outerplanar DAG on `n >= 2` vertices: a random simple
/// 2-tree (at most one vertex stacked per edge, two on the base) with
/// uniformly random acyclic stacking types.
pub fn random_maximal_outerplanar_dag(n: usize, rng: &mut impl Rng) -> DirectedGraph {
    random_stacked(n, rng, &[Kind::Transitive, Kind::Left, Kind::Right], 2)
}

/// Random monotone maximal outerplanar DAG (no transitive stackings);
/// `base_capacity` of one gives the variant with at most one vertex on the
/// base edge.
pub fn random_monotone_outerplanar_dag(
    n: usize,
    rng: &mut impl Rng,
    base_capacity: usize,
) -> DirectedGraph {
    random_stacked(n, rng, &[Kind::Left, Kind::Right], base_capacity)
}

fn random_stacked(
    n: usize,
    rng: &mut impl Rng,
    kinds: &[Kind],
    base_capacity: usize,
) -> DirectedGraph {
    assert!(n >= 2);
    let mut edges: Vec<Edge> = vec![(0, 1)];
    // Edges that can still receive a stacked vertex.
    let mut capacity: Vec<(Edge, usize)> = vec![((0, 1), base_capacity)];
    for u in 2..n {
        let slot = rng.gen_range(0..capacity.len());
        let (parent, cap) = capacity[slot];
        if cap == 1 {
            capacity.swap_remove(slot);
        } else {
            capacity[slot].1 -= 1;
        }
        let (v, w) = parent;
        let (e1, e2) = match kinds[rng.gen_range(0..kinds.len())] {
            Kind::Transitive => ((v, u), (u, w)),
            Kind::Left => ((u, v), (u, w)),
            Kind::Right => ((v, u), (w, u)),
        };
        edges.push(e1);
        edges.push(e2);
        capacity.push((e1, 1));
        capacity.push((e2, 1));
    }
    DirectedGraph::new(n, edges).expect("stacking yields a simple DAG")
}

/// Random outerplanar DAG: a random maximal one with each edge kept
/// independently with probability `keep`. May be disconnected.
pub fn random_outerplanar_dag(n: usize, keep: f64, rng: &mut impl Rng) -> DirectedGraph {
    let g = random_maximal_outerplanar_dag(n.max(2), rng);
    let edges: Vec<Edge> = g.edges().iter().copied().filter(|_| rng.gen_bool(keep)).collect();
    DirectedGraph::new(g.n(), edges).expect("subgraph is valid")
}

/// Random connected DAG glued from outerplanar 2-tree blocks and bridges at
/// shared cut vertices.
pub fn random_multiblock_dag(
    block_count: usize,
    max_block_size: usize,
    rng: &mut impl Rng,
) -> DirectedGraph {
    assert!(block_count >= 1);
    let mut g = random_maximal_outerplanar_dag(2 + rng.gen_range(0..max_block_size.max(1)), rng);
    for _ in 1..block_count {
        let attach = rng.gen_range(0..g.n());
        let extra = if rng.gen_bool(0.3) {
            // A bridge.
            1
        } else {
            1 + rng.gen_range(1..max_block_size.max(2))
        };
        let block = if extra == 1 {
            DirectedGraph::new(2, vec![(0, 1)]).unwrap()
        } else {
            random_maximal_outerplanar_dag(extra + 1, rng)
        };
        // Identify block vertex 0 with `attach`; other block vertices get
        // fresh ids.
        let offset = g.n();
        let map = |v: Vertex| if v == 0 { attach } else { offset + v - 1 };
        let mut edges: Vec<Edge> = g.edges().to_vec();
        edges.extend(block.edges().iter().map(|&(u, v)| (map(u), map(v))));
        g = DirectedGraph::new(offset + block.n() - 1, edges).expect("glued graph is simple");
    }
    g
}

/// Random directed forest on `n` vertices with `trees` components and
/// random edge orientations.
pub fn random_forest(n: usize, trees: usize, rng: &mut impl Rng) -> DirectedGraph {
    assert!(trees >= 1 && trees <= n.max(1));
    let mut edges = Vec::new();
    for v in trees..n {
        let parent = rng.gen_range(0..v);
        if rng.gen_bool(0.5) {
            edges.push((parent, v));
        } else {
            edges.push((v, parent));
        }
    }
    DirectedGraph::new(n, edges).expect("forest is simple")
}

/// Placement regime for the rainbow children.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChildRegime {
    /// All children beyond the outermost right endpoint.
    Beyond,
    /// One far-reaching child, the rest tight.
    FarReaching,
    /// Every child right next to its own right endpoint.
    Tight,
    /// Independently random placement right of the own right endpoint.
    Mixed,
}

/// A rainbow of `n` nested edges, each with a right child, embedded in a
/// concrete ordering per the regime. Returns the graph, the ordering, and
/// the triples `(a_i, b_i, c_i)` indexed innermost first.
pub fn random_rainbow_config(
    n: usize,
    regime: ChildRegime,
    rng: &mut impl Rng,
) -> (DirectedGraph, Vec<Vertex>, Vec<(Vertex, Vertex, Vertex)>) {
    let a = |i: usize| n - i; // a_i at position n - i
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
    let mut order: Vec<Vertex> = (0..n).collect(); // a_n .. a_1
    let mut tail: Vec<Vertex> = (1..=n).map(b).collect();
    for i in (1..=n).rev() {
        let after = match regime {
            ChildRegime::Beyond => n,
            ChildRegime::FarReaching => {
                if i == 1 {
                    (1 + n / 2).min(n)
                } else {
                    i
                }
            }
            ChildRegime::Tight => i,
            ChildRegime::Mixed => rng.gen_range(i..=n),
        };
        // Insert c_i right after the current occurrence of b_{after}.
        let pos = tail.iter().position(|&v| v == b(after)).unwrap();
        tail.insert(pos + 1, c(i));
    }
    order.extend(tail);
    (g, order, triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_outerplanar;
    use crate::twotree::is_two_tree;
    use rand::SeedableRng;

    #[test]
    fn maximal_outerplanar_generator_is_sound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..40 {
            let n = 2 + rng.gen_range(0..40);
            let g = random_maximal_outerplanar_dag(n, &mut rng);
            assert_eq!(g.edge_count(), if n == 2 { 1 } else { 2 * n - 3 });
            assert!(g.is_acyclic());
            assert!(is_two_tree(&g));
            assert!(is_outerplanar(&g));
        }
    }

    #[test]
    fn monotone_generator_is_monotone() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let n = 2 + rng.gen_range(0..12);
            let g = random_monotone_outerplanar_dag(n, &mut rng, 1);
            assert!(crate::twotree::is_monotone_with_base(&g, (0, 1)));
        }
    }

    #[test]
    fn multiblock_generator_is_connected_dag() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_multiblock_dag(1 + rng.gen_range(0..6), 6, &mut rng);
            assert!(g.is_connected());
            assert!(g.is_acyclic());
        }
    }

    #[test]
    fn forest_generator() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let g = random_forest(12, 3, &mut rng);
        assert_eq!(g.edge_count(), 9);
        assert!(g.is_acyclic());
        assert_eq!(g.connected_components().len(), 3);
    }
}
