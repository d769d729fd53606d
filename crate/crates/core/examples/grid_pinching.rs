//! Pin the mutual-visibility number of strong grids between a certified
//! lower bound and a convex-cover upper bound.
use mutvis::constructions::{grid_extremal_set, hull_cover_caps};
use mutvis::visibility::{mu_exact, Bound, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for dims in [
        vec![3, 3],
        vec![4, 7],
        vec![3, 12],
        vec![3, 3, 3],
        vec![3, 4, 5],
    ] {
        let (c, cover) = grid_extremal_set(&dims)?;
        let parts = cover.parts();
        let caps = hull_cover_caps(&c.graph, &parts)?;
        let upper: usize = caps.iter().sum();
        let options = SolveOptions {
            bound: Bound::HullCover { parts, caps },
            ..Default::default()
        };
        let exact = mu_exact(&c.graph, &options)?;
        println!(
            "{dims:?}: extremal set {} <= mu = {} <= cover bound {upper} ({} diagonals, {} nodes)",
            c.certificate.size,
            exact.value,
            cover.diagonals.len(),
            exact.nodes_explored
        );
    }
    Ok(())
}
