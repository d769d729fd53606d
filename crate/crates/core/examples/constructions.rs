//! Certified lower-bound sets for products and prisms.
use mutvis::constructions::{
    block_prism_set, multiway_tmv_set, prism_layer_set, product_mv_set, product_tmv_set,
    universal_product_tmv,
};
use mutvis::families::{complete_split, cycle, path, random_block_graph};
use mutvis::visibility::{mu_exact, SolveOptions};
use mutvis::VertexSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p4 = path(4)?;
    let ends = VertexSet::from_iter_with_capacity(4, [0, 3]);
    let c = product_tmv_set(&p4, &ends, &p4, &ends)?;
    println!(
        "P4 x P4 feasible tmv set: {} (formula {})",
        c.certificate.size, c.formula
    );
    println!("  tuples {:?}", c.tuples().unwrap());

    let three = multiway_tmv_set(&[&p4, &p4, &p4], &[ends, ends, ends])?;
    println!("P4^3: {}", three.certificate.size);

    let split = complete_split(2, 3)?;
    println!(
        "universal factors: {}",
        universal_product_tmv(&[&split, &path(3)?])?
            .certificate
            .size
    );

    let c7 = cycle(7)?;
    let s = mu_exact(&c7, &SolveOptions::default())?.certificate.set;
    println!(
        "C7 x C7 from mu-sets: {}",
        product_mv_set(&c7, &s, &c7, &s)?.certificate.size
    );

    println!("C7 prism layer: {}", prism_layer_set(&c7)?.certificate.size);
    let block = random_block_graph(9, 4)?;
    println!(
        "block graph prism: {}",
        block_prism_set(&block)?.certificate.size
    );
    Ok(())
}
