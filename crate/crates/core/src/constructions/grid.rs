use super::Construction;
use crate::error::{Error, Result};
use crate::families::path;
use crate::graph::{all_pairs_distances, convex_hull, Graph, VertexSet};
use crate::products::strong_product_multi;
use crate::visibility::{mu_exact, SetKind, SolveOptions};

/// Partition of the extremal vertices of a strong grid into diagonals.
///
/// `starts` are the tuples with a coordinate 0 and no coordinate at its
/// maximum, `degenerate` those with both, and `ends` the last vertices of
/// the diagonals. A diagonal starts at a vertex of `starts` and adds 1 to
/// every coordinate until some coordinate reaches its maximum.
#[derive(Clone, Debug)]
pub struct GridDiagonalCover {
    pub starts: VertexSet,
    pub ends: VertexSet,
    pub degenerate: VertexSet,
    pub diagonals: Vec<Vec<usize>>,
}

impl GridDiagonalCover {
    /// One part per diagonal and one singleton per degenerate vertex.
    pub fn parts(&self) -> Vec<VertexSet> {
        let n = self.starts.capacity();
        let mut parts: Vec<VertexSet> = self
            .diagonals
            .iter()
            .map(|d| VertexSet::from_iter_with_capacity(n, d.iter().copied()))
            .collect();
        parts.extend(self.degenerate.iter().map(|v| VertexSet::singleton(n, v)));
        parts
    }
}

/// Extremal vertices of `P_{n_1} ⊠ … ⊠ P_{n_k}` (tuples with a coordinate
/// 0 or `n_i − 1`), as a verified feasible set of size
/// `Π n_i − Π (n_i − 2)`, together with its diagonal cover.
pub fn grid_extremal_set(path_lengths: &[usize]) -> Result<(Construction, GridDiagonalCover)> {
    if path_lengths.len() < 2 {
        return Err(Error::Hypothesis(
            "a grid needs at least two factors".into(),
        ));
    }
    if let Some(&bad) = path_lengths.iter().find(|&&n| n < 3) {
        return Err(Error::Hypothesis(format!(
            "path lengths must be at least 3, got {bad}"
        )));
    }
    let paths = path_lengths
        .iter()
        .map(|&n| path(n))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Graph> = paths.iter().collect();
    let (grid, index) = strong_product_multi(&refs)?;
    let n = grid.order();

    let mut set = VertexSet::empty(n);
    let mut starts = VertexSet::empty(n);
    let mut degenerate = VertexSet::empty(n);
    for v in 0..n {
        let t = index.decode(v);
        let low = t.contains(&0);
        let high = t.iter().zip(path_lengths).any(|(&c, &m)| c == m - 1);
        if low || high {
            set.insert(v);
        }
        match (low, high) {
            (true, false) => {
                starts.insert(v);
            }
            (true, true) => {
                degenerate.insert(v);
            }
            _ => {}
        }
    }

    let mut ends = VertexSet::empty(n);
    let mut diagonals = Vec::with_capacity(starts.len());
    for s in starts.iter() {
        let mut t = index.decode(s);
        let mut diagonal = vec![s];
        loop {
            t.iter_mut().for_each(|c| *c += 1);
            diagonal.push(index.encode(&t)?);
            if t.iter().zip(path_lengths).any(|(&c, &m)| c == m - 1) {
                break;
            }
        }
        ends.insert(*diagonal.last().expect("diagonal has two vertices"));
        diagonals.push(diagonal);
    }

    let covered = starts.union(&ends).union(&degenerate);
    if covered != set {
        return Err(Error::VerificationFailed(
            "diagonal cover does not match the extremal vertices".into(),
        ));
    }
    let formula = n - path_lengths.iter().map(|&m| m - 2).product::<usize>();
    let construction = Construction::verify(grid, Some(index), set, SetKind::FeasibleTmv, formula)?;
    Ok((
        construction,
        GridDiagonalCover {
            starts,
            ends,
            degenerate,
            diagonals,
        },
    ))
}

/// `mu` of the subgraph induced by `hull(part)`, for every part.
pub fn hull_cover_caps(g: &Graph, cover: &[VertexSet]) -> Result<Vec<usize>> {
    g.require_connected()?;
    let mut covered = VertexSet::empty(g.order());
    for part in cover {
        if part.capacity() != g.order() {
            return Err(Error::InvalidParameter(
                "cover part has the wrong capacity".into(),
            ));
        }
        covered.union_with(part);
    }
    if covered != g.vertices() {
        return Err(Error::InvalidParameter(
            "cover does not contain every vertex".into(),
        ));
    }
    let dm = all_pairs_distances(g);
    let options = SolveOptions::default();
    let mut caps = Vec::with_capacity(cover.len());
    let mut seen: Vec<(VertexSet, usize)> = Vec::new();
    for part in cover {
        let hull = convex_hull(g, &dm, part)?;
        if let Some(&(_, cap)) = seen.iter().find(|(h, _)| *h == hull) {
            caps.push(cap);
            continue;
        }
        let (sub, _) = g.induced_subgraph(&hull);
        let cap = mu_exact(&sub, &options)?.value;
        seen.push((hull, cap));
        caps.push(cap);
    }
    Ok(caps)
}

/// `Σ mu(hull(V_i))` over a vertex cover `V_1..V_k`. Every
/// mutual-visibility set meets `hull(V_i)` in a mutual-visibility set of
/// the induced subgraph, so the sum bounds `mu(G)` from above.
pub fn hull_cover_upper_bound(g: &Graph, cover: &[VertexSet]) -> Result<usize> {
    Ok(hull_cover_caps(g, cover)?.iter().sum())
}
