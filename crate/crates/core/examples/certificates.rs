//! Write a graph, solve it, save the certificate and reload it for checking.
use std::fs;

use mutvis::families::{cycle, path};
use mutvis::format::{to_dot, CertificateFile, EdgeListFile, GraphRef, SolverMeta};
use mutvis::products::strong_product;
use mutvis::visibility::{mu_exact, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("mutvis-example");
    fs::create_dir_all(&dir)?;

    let (g, index) = strong_product(&cycle(5)?, &path(2)?)?;
    let graph_path = dir.join("prism.el");
    fs::write(
        &graph_path,
        EdgeListFile::with_product(g.clone(), index.clone()).to_text(),
    )?;

    let r = mu_exact(&g, &SolveOptions::default())?;
    let meta = SolverMeta {
        method: "branch-and-bound".into(),
        nodes: Some(r.nodes_explored),
        exact: Some(r.exact),
        ..Default::default()
    };
    let cert = CertificateFile::new(
        GraphRef::File("prism.el".into()),
        &r.certificate,
        Some(&index),
        meta,
    );
    fs::write(dir.join("prism.json"), cert.to_json())?;
    print!("{}", cert.to_json());

    let reloaded = CertificateFile::from_json(&fs::read_to_string(dir.join("prism.json"))?)?;
    let graph = EdgeListFile::parse(&fs::read_to_string(&graph_path)?)?;
    println!("re-verified: {}", reloaded.recheck(&graph.graph)?.verified);

    let dot = to_dot(
        &graph.graph,
        graph.product.as_ref(),
        Some(&r.certificate.set),
    );
    fs::write(dir.join("prism.dot"), dot)?;
    println!("files in {}", dir.display());
    Ok(())
}
