//! Simple undirected graphs over dense vertex ids, together with the metric
//! and structural queries the visibility machinery is built on.

mod metric;
mod structure;
mod vertex_set;

pub use metric::{
    all_pairs_distances, convex_hull, geodesic_interval, is_convex, DistanceMatrix, UNREACHABLE,
};
pub use structure::{
    block_decomposition, enabling_vertices, twin_relation, universal_vertices, BlockDecomposition,
    TwinRelation,
};
pub use vertex_set::{Iter, VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};

/// Immutable simple undirected graph with bit-row adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices; duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n });
        }
        let mut adj = vec![VertexSet::empty(n); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Self { adj, edge_count })
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self { adj, edge_count }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Union of the neighborhoods of every vertex in `set`.
    pub fn neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_avoiding(&self, start: usize, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.order(), start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = self.neighborhood_of(&frontier);
            next.difference_with(&seen);
            next.difference_with(blocked);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0; graphs on zero or
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        n <= 1 || self.reachable_avoiding(0, &VertexSet::empty(n)).len() == n
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in ascending id
    /// order. Returns the new graph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.to_vec();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let k = old.len();
        let adj = old
            .iter()
            .map(|&v| {
                VertexSet::from_iter_with_capacity(
                    k,
                    self.adj[v].intersection(set).iter().map(|w| new_id[w]),
                )
            })
            .collect();
        (Graph::from_rows(adj), old)
    }

    /// Graph with `v` deleted; remaining vertices keep their relative order.
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&self.vertices().without(v))
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Convenience wrapper over [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degree_sequence() {
        let g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn single_vertex() {
        let g = build_graph(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
        assert!(g.is_connected());
        assert!(build_graph(0, &[]).unwrap().is_connected());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = build_graph(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.degrees(), vec![2; 4]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            build_graph(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(build_graph(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert!(matches!(
            build_graph(MAX_VERTICES + 1, &[]),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn connectivity() {
        let p5 = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(p5.is_connected());
        let two_edges = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn induced_relabels() {
        let c4 = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (p3, map) = c4.remove_vertex(0);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
    }
}
