use std::collections::VecDeque;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances of one graph, plus for every vertex the
/// partition of the graph into distance levels around it.
///
/// The level sets let interval and visibility queries work a whole BFS
/// layer at a time.
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    levels: Vec<Vec<VertexSet>>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    /// Vertices at exactly distance `k` from `v` (empty past the eccentricity).
    #[inline]
    pub fn level(&self, v: usize, k: u32) -> Option<&VertexSet> {
        self.levels[v].get(k as usize)
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.levels[v].len() as u32 - 1
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<&[u32]> = (0..self.n).map(|u| self.row(u)).collect();
        f.debug_struct("DistanceMatrix").field("d", &rows).finish()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![UNREACHABLE; n * n];
    let mut levels = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        let mut lv: Vec<VertexSet> = vec![VertexSet::singleton(n, s)];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    if lv.len() <= (du + 1) as usize {
                        lv.push(VertexSet::empty(n));
                    }
                    lv[(du + 1) as usize].insert(w);
                    queue.push_back(w);
                }
            }
        }
        levels.push(lv);
    }
    DistanceMatrix { n, d, levels }
}

/// Every vertex on at least one shortest `u,v`-path, endpoints included.
pub fn geodesic_interval(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !dm.is_reachable(u, v) {
        return Err(Error::UnreachablePair(u, v));
    }
    Ok(interval_unchecked(dm, u, v))
}

pub(crate) fn interval_unchecked(dm: &DistanceMatrix, u: usize, v: usize) -> VertexSet {
    let total = dm.get(u, v);
    let mut out = VertexSet::empty(dm.order());
    for k in 0..=total {
        // both levels exist because u and v are at distance `total`
        let a = &dm.levels[u][k as usize];
        let b = &dm.levels[v][(total - k) as usize];
        out.union_with(&a.intersection(b));
    }
    out
}

/// True iff every geodesic between members of `set` stays inside `set`.
/// Pairs in different components have no geodesics and impose nothing.
pub fn is_convex(g: &Graph, dm: &DistanceMatrix, set: &VertexSet) -> bool {
    let _ = g;
    let members = set.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if dm.is_reachable(u, v) && !interval_unchecked(dm, u, v).is_subset(set) {
                return false;
            }
        }
    }
    true
}

/// Smallest convex superset of `set`, by closing under geodesic intervals
/// until nothing changes.
pub fn convex_hull(g: &Graph, dm: &DistanceMatrix, set: &VertexSet) -> Result<VertexSet> {
    g.require_connected()?;
    let mut hull = *set;
    let mut pending: Vec<usize> = set.to_vec();
    let mut processed = VertexSet::empty(g.order());
    while let Some(x) = pending.pop() {
        let mut added = VertexSet::empty(g.order());
        for y in &processed {
            added.union_with(&interval_unchecked(dm, x, y));
        }
        processed.insert(x);
        added.difference_with(&hull);
        hull.union_with(&added);
        pending.extend(added.iter());
    }
    Ok(hull)
}
