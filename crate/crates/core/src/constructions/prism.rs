use super::{product_mv_set, Construction};
use crate::error::{Error, Result};
use crate::families::path;
use crate::graph::{block_decomposition, BlockDecomposition, Graph, VertexSet};
use crate::products::strong_product;
use crate::visibility::{mu_exact, SetKind, SolveOptions};

/// The larger of [`prism_layer_set`] and `S × V(P2)` for an optimal
/// mutual-visibility set `S` of `G`, so of size `max(n(G), 2·mu(G))`.
/// Ties go to the layer.
pub fn prism_lower_bound_set(g: &Graph, options: &SolveOptions) -> Result<Construction> {
    let layer = prism_layer_set(g)?;
    let best = mu_exact(g, options)?;
    if !best.exact {
        return Err(Error::Hypothesis(
            "mu of the base graph was not solved within budget".into(),
        ));
    }
    if 2 * best.value <= g.order() {
        return Ok(layer);
    }
    product_mv_set(g, &best.certificate.set, &path(2)?, &VertexSet::full(2))
}

/// `V(G) × {0}` in `G ⊠ P2`.
pub fn prism_layer_set(g: &Graph) -> Result<Construction> {
    g.require_connected()?;
    let (prism, index) = strong_product(g, &path(2)?)?;
    let set = index.cartesian_set(&[g.vertices(), VertexSet::singleton(2, 0)])?;
    Construction::verify(prism, Some(index), set, SetKind::Mv, g.order())
}

fn block_audit(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let blocks = block_decomposition(g)?;
    if !blocks.all_blocks_cliques(g) {
        return Err(Error::NotBlockGraph);
    }
    Ok(blocks)
}

/// In `G ⊠ P2` for a block graph `G`: one copy of each cut vertex and both
/// copies of every other vertex, `n + #non-cut` vertices in all.
pub fn block_prism_set(g: &Graph) -> Result<Construction> {
    let blocks = block_audit(g)?;
    let (prism, index) = strong_product(g, &path(2)?)?;
    let mut set = VertexSet::empty(prism.order());
    for v in 0..g.order() {
        set.insert(index.encode(&[v, 0])?);
        if !blocks.cut_vertices.contains(v) {
            set.insert(index.encode(&[v, 1])?);
        }
    }
    let formula = 2 * g.order() - blocks.cut_vertices.len();
    Construction::verify(prism, Some(index), set, SetKind::Mv, formula)
}

/// Non-cut vertices of a block graph, verified as a total
/// mutual-visibility set.
pub fn block_graph_mu_set(g: &Graph) -> Result<Construction> {
    let blocks = block_audit(g)?;
    let set = g.vertices().difference(&blocks.cut_vertices);
    let formula = g.order() - blocks.cut_vertices.len();
    Construction::verify(g.clone(), None, set, SetKind::Tmv, formula)
}

/// `mu(C_n ⊠ P2)`.
pub fn cycle_prism_mu(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidParameter(format!(
            "cycle length must be at least 3, got {n}"
        ))),
        3..=5 => Ok(6),
        6 => Ok(7),
        _ => Ok(n),
    }
}
