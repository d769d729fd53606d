//! Exact mu, mu_t and the feasible variant by branch and bound.
use std::time::Duration;

use mutvis::families::{cycle, path};
use mutvis::products::strong_product;
use mutvis::visibility::{brute_force_mu, solve, SetKind, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (g, index) = strong_product(&cycle(7)?, &path(2)?)?;
    let options = SolveOptions {
        threads: 2,
        ..Default::default()
    };
    for kind in [SetKind::Mv, SetKind::Tmv, SetKind::FeasibleTmv] {
        let r = solve(&g, kind, &options)?;
        let tuples: Vec<_> = r.certificate.set.iter().map(|v| index.decode(v)).collect();
        println!(
            "{kind:<13} value={} nodes={} {:?}",
            r.value, r.nodes_explored, tuples
        );
    }

    let small = cycle(6)?;
    println!(
        "oracle on C6: mu={}",
        brute_force_mu(&small, SetKind::Mv, 18)?.value
    );

    // a budget turns the answer into a verified lower bound
    let (big, _) = strong_product(&path(7)?, &path(7)?)?;
    let limited = SolveOptions {
        node_budget: Some(2_000),
        time_budget: Some(Duration::from_secs(5)),
        ..Default::default()
    };
    let r = solve(&big, SetKind::Mv, &limited)?;
    println!("P7 x P7 under budget: value>={} exact={}", r.value, r.exact);
    Ok(())
}
