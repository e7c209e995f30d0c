//! Arc-diagram SVGs: vertices on a baseline in layout order, semicircular
//! arcs colored by stack.
//!
//! Run with: `cargo run -p stacklayout --example render_arc_diagram`
//! (writes SVG files into the current directory)

use stacklayout::adversary::{gen_path_matching, gen_three_fence};
use stacklayout::engine::{layout_outerplanar_dag, PipelineConfig};
use stacklayout::io::render_arc_diagram;
use stacklayout::layout::greedy_stack_assignment;
use stacklayout::oracle::{exact_stack_number, OracleBudget};

fn main() {
    // The k = 4 path+matching in its unique ordering: four stacks, four
    // colors.
    let g = gen_path_matching(4);
    let ordering = g.topological_orderings(2).unwrap().next().unwrap();
    let layout = greedy_stack_assignment(&g, &ordering).unwrap();
    std::fs::write("path_matching_4.svg", render_arc_diagram(&layout)).unwrap();
    println!("wrote path_matching_4.svg ({} stacks)", layout.stack_count());

    // The fence, optimally (3 stacks) and through the pipeline.
    let fence = gen_three_fence();
    let budget = OracleBudget::default();
    let (_, optimal) = exact_stack_number(&fence, &budget).unwrap();
    std::fs::write("fence_optimal.svg", render_arc_diagram(&optimal)).unwrap();
    println!("wrote fence_optimal.svg ({} stacks)", optimal.stack_count());

    let (pipeline, report) = layout_outerplanar_dag(&fence, &PipelineConfig::default()).unwrap();
    std::fs::write("fence_pipeline.svg", render_arc_diagram(&pipeline)).unwrap();
    println!(
        "wrote fence_pipeline.svg ({} stacks, run bound {})",
        report.stacks, report.run_bound
    );
}
