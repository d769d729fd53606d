//! Local search beats the product bound on a subdivided star times a path.
use std::time::Instant;

use mutvis::constructions::product_tmv_set;
use mutvis::families::{path, subdivided_star};
use mutvis::visibility::{mu_heuristic, solve, HeuristicOptions, SetKind, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tree = subdivided_star(3, 3)?;
    let p5 = path(5)?;
    let opts = SolveOptions::default();
    let s_t = solve(&tree, SetKind::FeasibleTmv, &opts)?.certificate.set;
    let s_p = solve(&p5, SetKind::FeasibleTmv, &opts)?.certificate.set;
    let bound = product_tmv_set(&tree, &s_t, &p5, &s_p)?;
    println!(
        "n = {}, product construction gives {}",
        bound.graph.order(),
        bound.certificate.size
    );

    let start = Instant::now();
    let options = HeuristicOptions {
        seed: 0,
        iterations: 5_000,
        target: Some(bound.certificate.size + 1),
        ..Default::default()
    };
    let found = mu_heuristic(&bound.graph, &options)?;
    println!(
        "local search (seed 0): {} in {:?}",
        found.size,
        start.elapsed()
    );
    Ok(())
}
