//! Combining per-block layouts around the block-cut tree within the
//! 2s + 2 stack budget, plus the direct 1-stack construction for directed
//! forests.
//!
//! Run with: `cargo run -p stacklayout --example block_combination`

use rand::SeedableRng;

use stacklayout::engine::{combine_block_layouts, forest_layout, SubgraphLayout};
use stacklayout::graph::block_cut_tree;
use stacklayout::layout::greedy_stack_assignment;
use stacklayout::random::{random_forest, random_multiblock_dag};

fn main() {
    // Any directed forest admits a one-stack layout: children sit on the
    // side their edge direction demands, subtrees stay contiguous.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let forest = random_forest(12, 2, &mut rng);
    let layout = forest_layout(&forest).unwrap();
    println!(
        "forest on {} vertices: {} stack(s), ordering {:?}",
        forest.n(),
        layout.stack_count(),
        layout.ordering
    );

    // A multi-block DAG: lay out each block independently, then combine.
    let g = random_multiblock_dag(4, 5, &mut rng);
    let bct = block_cut_tree(&g, None).unwrap();
    println!(
        "\nmulti-block DAG: n = {}, m = {}, {} blocks, cut vertices {:?}",
        g.n(),
        g.edge_count(),
        bct.blocks.len(),
        bct.cut_vertices
    );
    let per_block: Vec<SubgraphLayout> = bct
        .blocks
        .iter()
        .map(|b| {
            let (sub, to_global) = g.induced_subgraph(&b.vertices);
            let order = sub.lexicographic_topological_ordering().unwrap();
            let layout = greedy_stack_assignment(&sub, &order).unwrap();
            SubgraphLayout { layout, to_global }
        })
        .collect();
    for (i, sl) in per_block.iter().enumerate() {
        println!(
            "  block {}: {} vertices, {} stack(s)",
            i,
            sl.to_global.len(),
            sl.layout.stack_count()
        );
    }
    let s = per_block.iter().map(|b| b.layout.stack_count()).max().unwrap();
    let combined = combine_block_layouts(&g, &bct, &per_block).unwrap();
    println!(
        "combined: {} stacks (budget 2s + 2 = {}), valid: {}",
        combined.stack_count(),
        2 * s + 2,
        combined.verify().is_ok()
    );
}
