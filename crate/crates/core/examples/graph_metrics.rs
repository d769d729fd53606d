//! Distances, geodesic intervals, convex hulls and blocks of a small graph.
use mutvis::graph::{
    all_pairs_distances, block_decomposition, convex_hull, enabling_vertices, geodesic_interval,
};
use mutvis::{build_graph, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a 5-cycle with a pendant path 0-5-6
    let g = build_graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])?;
    let dm = all_pairs_distances(&g);
    println!("diameter {}", dm.diameter());
    println!("I(6, 2) = {:?}", geodesic_interval(&g, &dm, 6, 2)?);

    let seeds = VertexSet::from_iter_with_capacity(7, [1, 4]);
    println!("hull{:?} = {:?}", seeds, convex_hull(&g, &dm, &seeds)?);

    let blocks = block_decomposition(&g)?;
    for b in &blocks.blocks {
        println!("block {b:?}");
    }
    println!("cut vertices {:?}", blocks.cut_vertices);
    println!("enabling vertices {:?}", enabling_vertices(&g)?);
    Ok(())
}
