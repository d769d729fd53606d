//! Generate members of each supported family and print their sizes.
use mutvis::families::{generate, random_cactus_recipe, random_cograph_recipe, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        FamilySpec::Path { n: 6 },
        FamilySpec::Cycle { n: 7 },
        FamilySpec::Complete { n: 5 },
        FamilySpec::CompleteMultipartite {
            parts: vec![2, 3, 3],
        },
        FamilySpec::CompleteSplit {
            independent: 3,
            clique: 4,
        },
        FamilySpec::Star { leaves: 5 },
        FamilySpec::SubdividedStar {
            legs: 3,
            subdivisions: 3,
        },
        FamilySpec::RandomTree { n: 10, seed: 1 },
        FamilySpec::RandomConnected {
            n: 10,
            extra_edges: 6,
            seed: 1,
        },
        FamilySpec::RandomBlockGraph { n: 12, seed: 1 },
        FamilySpec::RandomCograph { n: 9, seed: 1 },
        FamilySpec::RandomCactus { max_n: 15, seed: 1 },
    ];
    for spec in &specs {
        let g = generate(spec)?;
        println!(
            "{:<60} n={:<3} m={}",
            format!("{spec:?}"),
            g.order(),
            g.size()
        );
    }

    // recipes have a line-based text form
    println!("\ncograph recipe:\n{}", random_cograph_recipe(5, 7)?);
    println!("cactus recipe:\n{}", random_cactus_recipe(12, 7)?);
    Ok(())
}
