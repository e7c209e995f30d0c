//! Directed H-partition of a maximal outerplanar DAG: parts, paths,
//! quotient, cut-cover certificates, and the independent property check.
//!
//! Run with: `cargo run -p stacklayout --example hpartition_tour`

use rand::SeedableRng;

use stacklayout::graph::block_cut_tree;
use stacklayout::hpartition::{
    constructive_certificate, construct_directed_h_partition, cut_cover_number,
    verify_partition_properties,
};
use stacklayout::io::graph_to_dot;
use stacklayout::random::random_maximal_outerplanar_dag;
use stacklayout::twotree::{build_construction_sequence, build_construction_tree};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let g = random_maximal_outerplanar_dag(18, &mut rng);
    println!("graph: n = {}, m = {}", g.n(), g.edge_count());

    let base = g.edges()[0];
    let seq = build_construction_sequence(&g, base).unwrap();
    let tree = build_construction_tree(&seq, &g).unwrap();
    let hp = construct_directed_h_partition(&g, &seq, &tree).unwrap();

    println!("partition into {} parts (one per monotone vertex):", hp.parts.len());
    for (p, members) in hp.parts.iter().enumerate() {
        println!(
            "  part {} (apex {}): {:?}, Q1 = {:?}, Q2 = {:?}",
            p,
            hp.apex[p],
            members,
            hp.q1(p),
            hp.q2(p)
        );
    }
    println!("quotient: n = {}, m = {}, acyclic: {}", hp.quotient.n(), hp.quotient.edge_count(), hp.quotient.is_acyclic());

    // Scoped cut covers per block of the quotient, both the constructive
    // certificate and the brute-force optimum.
    let bct = block_cut_tree(&hp.quotient, None).unwrap();
    for (bi, block) in bct.blocks.iter().enumerate() {
        println!("block {} of the quotient: parts {:?}", bi, block.vertices);
        let scope: Vec<usize> = block
            .vertices
            .iter()
            .flat_map(|&p| hp.parts[p].iter().copied())
            .collect();
        for &p in &block.vertices {
            let cert = constructive_certificate(&hp, p, &block.vertices);
            let (optimum, _) = cut_cover_number(&g, p, &hp.parts[p], Some(&scope), 4).unwrap();
            println!(
                "  part {}: certificate {:?} (size {}), optimum {}",
                p,
                cert.cover,
                cert.cover.len(),
                optimum
            );
        }
    }

    let report = verify_partition_properties(&g, &hp, &tree);
    println!("\nproperty check: all pass = {}", report.all_pass());
    println!("{}", graph_to_dot(&hp.quotient));
}
