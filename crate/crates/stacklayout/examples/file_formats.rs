//! The on-disk formats: canonical graph JSON, edge-list text, layout JSON,
//! partition JSON, and DOT.
//!
//! Run with: `cargo run -p stacklayout --example file_formats`

use stacklayout::adversary::gen_three_fence;
use stacklayout::hpartition::construct_directed_h_partition;
use stacklayout::io::{
    graph_from_edge_list, graph_from_json, graph_to_dot, graph_to_json, layout_to_json,
    partition_to_json,
};
use stacklayout::layout::greedy_stack_assignment;
use stacklayout::twotree::{build_construction_sequence, build_construction_tree};

fn main() {
    let g = gen_three_fence();

    let json = graph_to_json(&g);
    println!("graph JSON (canonical, byte-stable under reload):\n{}", json);
    let reloaded = graph_from_json(&json).unwrap();
    assert_eq!(graph_to_json(&reloaded), json);

    let edge_list = "0 1\n1 2  # a comment\n2 3\n";
    let path = graph_from_edge_list(edge_list).unwrap();
    println!("edge list parsed: n = {}, edges {:?}\n", path.n(), path.edges());

    let ordering = g.lexicographic_topological_ordering().unwrap();
    let layout = greedy_stack_assignment(&g, &ordering).unwrap();
    println!("layout JSON:\n{}", layout_to_json(&layout));

    let seq = build_construction_sequence(&g, (0, 1)).unwrap();
    let tree = build_construction_tree(&seq, &g).unwrap();
    let hp = construct_directed_h_partition(&g, &seq, &tree).unwrap();
    println!("partition JSON:\n{}", partition_to_json(&hp));
    println!("quotient DOT:\n{}", graph_to_dot(&hp.quotient));
}
