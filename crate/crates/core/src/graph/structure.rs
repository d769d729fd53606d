use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Maximal 2-connected components and the cut vertices joining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// True iff every block induces a clique.
    pub fn all_blocks_cliques(&self, g: &Graph) -> bool {
        self.blocks.iter().all(|b| {
            let k = b.len();
            b.iter()
                .all(|v| g.neighbors(v).intersection(b).len() == k - 1)
        })
    }

    /// True iff every block is a single edge or induces a cycle.
    pub fn all_blocks_cycles_or_edges(&self, g: &Graph) -> bool {
        self.blocks.iter().all(|b| {
            let k = b.len();
            let degs: Vec<usize> = b
                .iter()
                .map(|v| g.neighbors(v).intersection(b).len())
                .collect();
            match k {
                1 => true,
                2 => true,
                _ => degs.iter().all(|&d| d == 2),
            }
        })
    }
}

/// Biconnected components by Tarjan's low-point method with an explicit
/// edge stack. A graph on one vertex has the single block `{0}`.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.order();
    let mut out = BlockDecomposition {
        blocks: Vec::new(),
        cut_vertices: VertexSet::empty(n),
    };
    if n == 0 {
        return Ok(out);
    }
    if n == 1 {
        out.blocks.push(VertexSet::singleton(1, 0));
        return Ok(out);
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    // frames: (vertex, parent, remaining neighbors)
    let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    disc[0] = time;
    low[0] = time;
    time += 1;
    stack.push((0, UNSEEN, g.neighbors(0).to_vec()));
    let mut root_children = 0;

    while let Some(frame) = stack.last_mut() {
        let (u, parent) = (frame.0, frame.1);
        if let Some(w) = frame.2.pop() {
            if disc[w] == UNSEEN {
                edge_stack.push((u, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                if u == 0 {
                    root_children += 1;
                }
                stack.push((w, u, g.neighbors(w).to_vec()));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    if p != 0 {
                        out.cut_vertices.insert(p);
                    }
                    let mut block = VertexSet::empty(n);
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (p, u) {
                            break;
                        }
                    }
                    out.blocks.push(block);
                }
            }
        }
    }
    if root_children >= 2 {
        out.cut_vertices.insert(0);
    }
    Ok(out)
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| g.degree(v) + 1 == n))
}

/// Vertices `v` adjacent to every `u` whose degree in `G - v` is below
/// `n - 2`. Their existence is equivalent to a mutual-visibility set of
/// size at least `n - 1`.
pub fn enabling_vertices(g: &Graph) -> Result<VertexSet> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, n });
    }
    let is_enabling = |v: usize| {
        (0..n).filter(|&u| u != v).all(|u| {
            let adjacent = g.has_edge(u, v);
            let deg_without_v = g.degree(u) - usize::from(adjacent);
            deg_without_v >= n - 2 || adjacent
        })
    };
    Ok(VertexSet::from_iter_with_capacity(
        n,
        (0..n).filter(|&v| is_enabling(v)),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinRelation {
    /// Adjacent with equal closed neighborhoods.
    True,
    /// Non-adjacent with equal open neighborhoods.
    False,
    None,
}

pub fn twin_relation(g: &Graph, u: usize, v: usize) -> Result<TwinRelation> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let (nu, nv) = (g.neighbors(u), g.neighbors(v));
    Ok(if g.has_edge(u, v) {
        if nu.with(u) == nv.with(v) {
            TwinRelation::True
        } else {
            TwinRelation::None
        }
    } else if nu == nv {
        TwinRelation::False
    } else {
        TwinRelation::None
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build_graph(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = vec![];
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        build_graph(n, &edges).unwrap()
    }

    fn p3() -> Graph {
        build_graph(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn blocks_of_small_graphs() {
        let bd = block_decomposition(&p3()).unwrap();
        assert_eq!(bd.cut_vertices.to_vec(), vec![1]);
        assert_eq!(bd.blocks.len(), 2);

        let bd = block_decomposition(&cycle(5)).unwrap();
        assert_eq!(bd.blocks, vec![VertexSet::full(5)]);
        assert!(bd.cut_vertices.is_empty());

        let bowtie = build_graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let bd = block_decomposition(&bowtie).unwrap();
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices.to_vec(), vec![2]);
        assert!(bd.all_blocks_cliques(&bowtie));
        assert!(bd.all_blocks_cycles_or_edges(&bowtie));
    }

    #[test]
    fn blocks_with_root_cut_vertex() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let bd = block_decomposition(&star).unwrap();
        assert_eq!(bd.cut_vertices.to_vec(), vec![0]);
        assert_eq!(bd.blocks.len(), 3);
    }

    #[test]
    fn blocks_reject_disconnected() {
        let g = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_decomposition(&g), Err(Error::Disconnected));
    }

    #[test]
    fn universal() {
        assert_eq!(universal_vertices(&p3()).to_vec(), vec![1]);
        assert!(universal_vertices(&cycle(5)).is_empty());
        assert_eq!(universal_vertices(&complete(4)).len(), 4);
    }

    #[test]
    fn enabling() {
        // in P3 - v0 both remaining vertices have degree 1 = n - 2, so the
        // leaves are enabling as well
        assert_eq!(enabling_vertices(&p3()).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(enabling_vertices(&cycle(5)).unwrap().is_empty());
        assert_eq!(enabling_vertices(&complete(4)).unwrap().len(), 4);
        assert!(matches!(
            enabling_vertices(&build_graph(1, &[]).unwrap()),
            Err(Error::TooFewVertices { .. })
        ));
    }

    #[test]
    fn twins() {
        let c4 = cycle(4);
        assert_eq!(twin_relation(&c4, 0, 2).unwrap(), TwinRelation::False);
        assert_eq!(
            twin_relation(&complete(3), 0, 2).unwrap(),
            TwinRelation::True
        );
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(twin_relation(&p4, 0, 3).unwrap(), TwinRelation::None);
        assert_eq!(twin_relation(&p4, 1, 1), Err(Error::SameVertex(1)));
    }
}
