//! Build a strong product and move between vertex ids and factor tuples.
use mutvis::families::{cycle, path};
use mutvis::graph::all_pairs_distances;
use mutvis::products::{check_distance_law, strong_product, strong_product_multi};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (c5, p3) = (cycle(5)?, path(3)?);
    let (g, index) = strong_product(&c5, &p3)?;
    println!("C5 x P3: n={} m={}", g.order(), g.size());

    let v = index.encode(&[2, 1])?;
    println!("(2,1) -> {v} -> {:?}", index.decode(v));
    print!("neighbours of (2,1):");
    for w in g.neighbors(v).iter() {
        print!(" {:?}", index.decode(w));
    }
    println!();

    let dm = all_pairs_distances(&g);
    let far = index.encode(&[0, 2])?;
    println!("d((2,1), (0,2)) = {}", dm.get(v, far));
    println!(
        "distance law holds: {}",
        check_distance_law(&c5, &p3, &g, &index)?
    );

    let (cube, _) = strong_product_multi(&[&path(3)?, &path(3)?, &path(3)?])?;
    println!("P3 x P3 x P3: n={} m={}", cube.order(), cube.size());
    Ok(())
}
