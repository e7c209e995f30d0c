//! Structural recognition: acyclicity, outerplanarity with certificate or
//! forbidden-substructure witness, block decomposition, and augmentation to
//! a maximal outerplanar DAG.
//!
//! Run with: `cargo run -p stacklayout --example recognize_and_augment`

use stacklayout::adversary::{gen_path_matching, gen_three_fence};
use stacklayout::graph::{
    augment_to_maximal_outerplanar, block_cut_tree, check_outerplanar, DirectedGraph,
    Outerplanarity,
};

fn describe(name: &str, g: &DirectedGraph) {
    println!("== {} (n = {}, m = {})", name, g.n(), g.edge_count());
    println!("   acyclic: {}", g.is_acyclic());
    match check_outerplanar(g) {
        Outerplanarity::Outerplanar { outer_order } => {
            let names: Vec<String> = outer_order.iter().map(|&v| g.name_of(v)).collect();
            println!("   outerplanar, outer cyclic order: {}", names.join(" "));
        }
        Outerplanarity::NotOuterplanar { witness } => {
            println!(
                "   not outerplanar: subdivision of {:?}, branch vertices {:?}, {} edges",
                witness.kind,
                witness.branch_vertices,
                witness.edges.len()
            );
        }
    }
}

fn main() {
    // The fence is outerplanar; the path-plus-matching family stops being
    // outerplanar at k = 3.
    describe("three-fence", &gen_three_fence());
    describe("path+matching k=2", &gen_path_matching(2));
    describe("path+matching k=3", &gen_path_matching(3));

    // A two-block graph and its block-cut tree.
    let g = DirectedGraph::new(
        6,
        vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)],
    )
    .unwrap();
    describe("two blocks and a bridge", &g);
    let bct = block_cut_tree(&g, None).unwrap();
    println!("   blocks:");
    for (i, b) in bct.blocks.iter().enumerate() {
        println!("     B{}: vertices {:?}", i, b.vertices);
    }
    println!("   cut vertices: {:?}", bct.cut_vertices);

    // Augmentation: a sparse outerplanar DAG completed to a triangulated
    // polygon with oriented fill edges.
    let sparse = DirectedGraph::new(7, vec![(0, 1), (1, 2), (3, 2), (3, 4), (5, 4), (5, 6)])
        .unwrap();
    describe("sparse path-like DAG", &sparse);
    let aug = augment_to_maximal_outerplanar(&sparse).unwrap();
    println!(
        "   augmented to maximal outerplanar: m = {} (= 2n-3 = {})",
        aug.edge_count(),
        2 * aug.n() - 3
    );
    let added: Vec<_> = aug
        .edges()
        .iter()
        .filter(|e| !sparse.has_edge(e.0, e.1))
        .collect();
    println!("   added edges: {:?}", added);
}
