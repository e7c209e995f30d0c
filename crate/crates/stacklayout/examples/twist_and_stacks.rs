//! Crossing analysis of a fixed ordering: crossing graph, twist and
//! rainbow numbers, first-fit versus exact stack assignment, and the
//! twist-to-stacks bound table.
//!
//! Run with: `cargo run -p stacklayout --example twist_and_stacks`

use stacklayout::adversary::gen_path_matching;
use stacklayout::layout::{
    crossing_graph, davies_bound, exact_min_stacks_for_ordering, greedy_stack_assignment,
    rainbow_of_ordering, twist_of_ordering,
};

fn main() {
    for k in 2..=5 {
        let g = gen_path_matching(k);
        // This family has exactly one topological ordering.
        let ordering = g.topological_orderings(2).unwrap().next().unwrap();

        let cg = crossing_graph(&g, &ordering).unwrap();
        let crossing_pairs: usize = (0..cg.node_count())
            .map(|i| (i + 1..cg.node_count()).filter(|&j| cg.are_adjacent(i, j)).count())
            .sum();
        let (twist, witness) = twist_of_ordering(&g, &ordering).unwrap();
        let (rainbow, _) = rainbow_of_ordering(&g, &ordering).unwrap();
        let greedy = greedy_stack_assignment(&g, &ordering).unwrap();
        let (exact, _) = exact_min_stacks_for_ordering(&g, &ordering, 24).unwrap();

        println!("path+matching k={}: {} crossing pairs", k, crossing_pairs);
        println!(
            "  twist {} (witness {:?}), rainbow {}",
            twist,
            witness
                .iter()
                .map(|&(u, v)| format!("{}-{}", g.name_of(u), g.name_of(v)))
                .collect::<Vec<_>>(),
            rainbow
        );
        println!(
            "  stacks: first-fit {}, exact {} (both equal the twist here)",
            greedy.stack_count(),
            exact
        );
    }

    println!("\ntwist k -> stacks that always suffice for the ordering:");
    for k in 1..=8 {
        println!("  {} -> {}", k, davies_bound(k).unwrap());
    }
}
