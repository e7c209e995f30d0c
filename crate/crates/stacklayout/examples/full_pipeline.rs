//! The end-to-end constant-stack layout pipeline on random outerplanar
//! DAGs, with the bound report and, for small instances, a comparison
//! against the exact optimum.
//!
//! Run with: `cargo run --release -p stacklayout --example full_pipeline`

use rand::{Rng, SeedableRng};

use stacklayout::engine::{layout_outerplanar_dag, PipelineConfig};
use stacklayout::oracle::{exact_stack_number, OracleBudget};
use stacklayout::random::random_outerplanar_dag;

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let config = PipelineConfig::default();

    println!("small instances against the exact optimum:");
    for _ in 0..6 {
        let n = 5 + rng.gen_range(0..5);
        let g = random_outerplanar_dag(n, 0.9, &mut rng);
        let (layout, report) = layout_outerplanar_dag(&g, &config).unwrap();
        assert!(layout.verify().is_ok());
        let budget = OracleBudget::default();
        let optimum = exact_stack_number(&g, &budget).map(|(s, _)| s);
        println!(
            "  n = {:2}, m = {:2}: pipeline {} stacks via {:?}, optimum {}",
            g.n(),
            g.edge_count(),
            report.stacks,
            report.route,
            optimum.map(|s| s.to_string()).unwrap_or_else(|_| "-".into())
        );
    }

    println!("\nlarger instances, bound report per run:");
    for &n in &[50usize, 150, 400] {
        let g = random_outerplanar_dag(n, 0.85, &mut rng);
        let (layout, r) = layout_outerplanar_dag(&g, &config).unwrap();
        assert!(layout.verify().is_ok());
        println!(
            "  n = {:3}: {} stacks; h = {}, f = {}, w = {}, s = {}, p = {}, t = {}; \
             run bound {}, ceiling {}",
            g.n(),
            r.stacks,
            r.h,
            r.f,
            r.w,
            r.s,
            r.p,
            r.t,
            r.run_bound,
            r.paper_ceiling
        );
    }
}
