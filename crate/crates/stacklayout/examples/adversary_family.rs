//! The 2-tree family with unbounded twist number: exact width sequence,
//! gadget structure, a truncated desk-scale instance, and the
//! rainbow-with-children classifier that powers the lower-bound argument.
//!
//! Run with: `cargo run -p stacklayout --example adversary_family`

use rand::SeedableRng;

use stacklayout::adversary::{
    classify_rainbow_children, gen_t_gadget, gen_unbounded_twist, r_sequence, RainbowOutcome,
};
use stacklayout::graph::DirectedGraph;
use stacklayout::oracle::{exact_twist_number, OracleBudget};
use stacklayout::random::{random_rainbow_config, ChildRegime};

fn main() {
    for k in 1..=3 {
        let r = r_sequence(k);
        let widths: Vec<String> = r
            .iter()
            .map(|x| {
                let s = x.to_string();
                if s.len() > 24 {
                    format!("{}... ({} digits)", &s[..24], s.len())
                } else {
                    s
                }
            })
            .collect();
        println!("k = {}: widths r = [{}]", k, widths.join(", "));
    }

    // A single tower gadget.
    let base = DirectedGraph::new(2, vec![(0, 1)]).unwrap();
    let (gadget, matching) = gen_t_gadget(&base, (0, 1), 3).unwrap();
    println!(
        "\ntower gadget of width 3: n = {}, m = {}, fresh matching {:?}",
        gadget.n(),
        gadget.edge_count(),
        matching
    );

    // Full k = 2 instance is buildable; k = 3 is astronomically large.
    let (g2, spec2) = gen_unbounded_twist(2, None).unwrap();
    println!(
        "k = 2 full instance: n = {}, matchings sized {:?}, guarantee {:?}",
        g2.n(),
        spec2.matchings.iter().map(|m| m.len()).collect::<Vec<_>>(),
        spec2.guarantee
    );
    match gen_unbounded_twist(3, None) {
        Err(e) => println!("k = 3 full instance: {}", e),
        Ok(_) => unreachable!(),
    }

    // Truncated instance is oracle-checkable.
    let (small, spec) = gen_unbounded_twist(2, Some(2)).unwrap();
    let budget = OracleBudget::default();
    let (tn, _) = exact_twist_number(&small, &budget).unwrap();
    println!(
        "k = 2 truncated to width 2: n = {}, guarantee {:?}, measured tn = {}",
        small.n(),
        spec.guarantee,
        tn
    );

    // The classifier on the three child-placement regimes.
    println!("\nrainbow-with-children case analysis (k = 2, r = 2, n = 8):");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for regime in [ChildRegime::Beyond, ChildRegime::FarReaching, ChildRegime::Tight] {
        let (g, order, triples) = random_rainbow_config(8, regime, &mut rng);
        let outcome = classify_rainbow_children(&g, &order, &triples, 2, 2).unwrap();
        let label = match &outcome {
            RainbowOutcome::Twist { edges } => format!("twist of {} edges", edges.len()),
            RainbowOutcome::CrossingEdge { index, crossed, .. } => {
                format!("child edge at index {} crossing {} rainbow edges", index, crossed.len())
            }
            RainbowOutcome::NoncrossingSet { indices } => {
                format!("{} indices with pairwise non-crossing child edges", indices.len())
            }
        };
        println!("  {:?}: {}", regime, label);
    }
}
