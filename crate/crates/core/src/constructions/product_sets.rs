use super::{require_nontrivial, Construction};
use crate::error::{Error, Result};
use crate::families::path;
use crate::graph::{all_pairs_distances, universal_vertices, Graph, VertexSet};
use crate::products::{strong_product, strong_product_multi};
use crate::visibility::{is_feasible_tmv_set, is_mv_set, SetKind};

fn require_feasible(g: &Graph, set: &VertexSet, which: &str) -> Result<()> {
    if set.capacity() != g.order() {
        return Err(Error::Hypothesis(format!(
            "set for {which} has the wrong capacity"
        )));
    }
    let dm = all_pairs_distances(g);
    if !is_feasible_tmv_set(g, &dm, set)? {
        return Err(Error::Hypothesis(format!(
            "set for {which} is not a feasible tmv set"
        )));
    }
    Ok(())
}

/// `V(G ⊠ H) \ (S̄_G × S̄_H)` for feasible total mutual-visibility sets
/// `S_G`, `S_H`. The result is again feasible and has
/// `|S_G|·n(H) + |S_H|·n(G) − |S_G|·|S_H|` vertices.
pub fn product_tmv_set(
    g: &Graph,
    s_g: &VertexSet,
    h: &Graph,
    s_h: &VertexSet,
) -> Result<Construction> {
    require_nontrivial(g, "first factor")?;
    require_nontrivial(h, "second factor")?;
    require_feasible(g, s_g, "first factor")?;
    require_feasible(h, s_h, "second factor")?;
    let (product, index) = strong_product(g, h)?;
    let set = index
        .cartesian_set(&[s_g.complement(), s_h.complement()])?
        .complement();
    let (a, b) = (s_g.len(), s_h.len());
    let formula = a * h.order() + b * g.order() - a * b;
    Construction::verify(product, Some(index), set, SetKind::FeasibleTmv, formula)
}

/// The k-factor version of [`product_tmv_set`]: every tuple with at least
/// one coordinate in its factor's set. Size `Π n_i − Π (n_i − |S_i|)`.
///
/// Factors must be connected, non-complete and of order at least two.
pub fn multiway_tmv_set(factors: &[&Graph], sets: &[VertexSet]) -> Result<Construction> {
    if factors.len() < 2 {
        return Err(Error::Hypothesis(
            "at least two factors are required".into(),
        ));
    }
    if factors.len() != sets.len() {
        return Err(Error::Hypothesis(format!(
            "{} factors but {} sets",
            factors.len(),
            sets.len()
        )));
    }
    for (i, (g, s)) in factors.iter().zip(sets).enumerate() {
        let which = format!("factor {i}");
        require_nontrivial(g, &which)?;
        if g.is_complete() {
            return Err(Error::Hypothesis(format!("{which} is complete")));
        }
        require_feasible(g, s, &which)?;
    }
    let (product, index) = strong_product_multi(factors)?;
    let complements: Vec<VertexSet> = sets.iter().map(VertexSet::complement).collect();
    let set = index.cartesian_set(&complements)?.complement();
    let total: usize = factors.iter().map(|g| g.order()).product();
    let outside: usize = factors
        .iter()
        .zip(sets)
        .map(|(g, s)| g.order() - s.len())
        .product();
    Construction::verify(
        product,
        Some(index),
        set,
        SetKind::FeasibleTmv,
        total - outside,
    )
}

/// `S_G × S_H` for mutual-visibility sets of the factors.
pub fn product_mv_set(
    g: &Graph,
    s_g: &VertexSet,
    h: &Graph,
    s_h: &VertexSet,
) -> Result<Construction> {
    g.require_connected()?;
    h.require_connected()?;
    for (graph, set, which) in [(g, s_g, "first"), (h, s_h, "second")] {
        if set.capacity() != graph.order() {
            return Err(Error::Hypothesis(format!(
                "set for {which} factor has the wrong capacity"
            )));
        }
        let dm = all_pairs_distances(graph);
        if !is_mv_set(graph, &dm, set)? {
            return Err(Error::Hypothesis(format!(
                "set for {which} factor is not an mv set"
            )));
        }
    }
    let (product, index) = strong_product(g, h)?;
    let set = index.cartesian_set(&[*s_g, *s_h])?;
    Construction::verify(
        product,
        Some(index),
        set,
        SetKind::Mv,
        s_g.len() * s_h.len(),
    )
}

/// Feasible set of size `|S_G| + n(G)` in `G ⊠ P2`, from a feasible set
/// `S_G` of `G`. It is in particular a mutual-visibility set.
pub fn prism_tmv_bound_set(g: &Graph, s_g: &VertexSet) -> Result<Construction> {
    let p2 = path(2)?;
    product_tmv_set(g, s_g, &p2, &VertexSet::singleton(2, 0))
}

/// For non-complete factors that each have a universal vertex, every
/// vertex of the product except the tuple of those universal vertices.
pub fn universal_product_tmv(factors: &[&Graph]) -> Result<Construction> {
    let mut sets = Vec::with_capacity(factors.len());
    for (i, g) in factors.iter().enumerate() {
        require_nontrivial(g, &format!("factor {i}"))?;
        if g.is_complete() {
            return Err(Error::Hypothesis(format!("factor {i} is complete")));
        }
        let u = universal_vertices(g)
            .first()
            .ok_or_else(|| Error::Hypothesis(format!("factor {i} has no universal vertex")))?;
        sets.push(g.vertices().without(u));
    }
    multiway_tmv_set(factors, &sets)
}
