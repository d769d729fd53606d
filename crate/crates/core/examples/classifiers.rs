//! Decide structural facts about cographs and cacti without searching.
use mutvis::constructions::{classify_cactus, classify_cograph};
use mutvis::families::{build_cactus, build_cograph, random_cactus_recipe, random_cograph_recipe};
use mutvis::visibility::{mu_exact, mu_total_exact, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SolveOptions::default();
    for seed in 0..5 {
        let recipe = random_cograph_recipe(8, seed)?;
        let g = build_cograph(&recipe)?;
        let c = classify_cograph(&recipe)?;
        let (mu, mt) = (mu_exact(&g, &opts)?.value, mu_total_exact(&g, &opts)?.value);
        println!("{c}  | solved mu={mu} mu_t={mt}");
    }
    for seed in 0..5 {
        let g = build_cactus(&random_cactus_recipe(12, seed)?)?;
        let c = classify_cactus(&g)?;
        println!("{c}  | solved mu_t={}", mu_total_exact(&g, &opts)?.value);
    }
    Ok(())
}
