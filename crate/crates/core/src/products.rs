//! Strong products and their tuple indexing.
//!
//! Product vertices are numbered row-major with the first factor varying
//! slowest: in `G ⊠ H`, the pair `(g, h)` has id `g * n(H) + h`.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph, VertexSet, MAX_VERTICES};

/// Bijection between factor-vertex tuples and product vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIndex {
    orders: Vec<usize>,
    strides: Vec<usize>,
}

impl ProductIndex {
    pub fn new(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::NoFactors);
        }
        if orders.contains(&0) {
            return Err(Error::EmptyFactor);
        }
        let total = orders.iter().try_fold(1usize, |acc, &n| {
            acc.checked_mul(n).filter(|&t| t <= MAX_VERTICES)
        });
        let Some(_) = total else {
            let requested = orders.iter().fold(1usize, |a, &n| a.saturating_mul(n));
            return Err(Error::CapacityExceeded { requested });
        };
        let mut strides = vec![1; orders.len()];
        for i in (0..orders.len() - 1).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        Ok(Self {
            orders: orders.to_vec(),
            strides,
        })
    }

    pub fn factor_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn arity(&self) -> usize {
        self.orders.len()
    }

    pub fn len(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn encode(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.orders.len() {
            return Err(Error::InconsistentTuple(format!(
                "tuple has {} coordinates, product has {} factors",
                tuple.len(),
                self.orders.len()
            )));
        }
        let mut id = 0;
        for (i, (&x, &n)) in tuple.iter().zip(&self.orders).enumerate() {
            if x >= n {
                return Err(Error::InconsistentTuple(format!(
                    "coordinate {i} is {x}, factor has {n} vertices"
                )));
            }
            id += x * self.strides[i];
        }
        Ok(id)
    }

    pub fn decode(&self, id: usize) -> Vec<usize> {
        assert!(id < self.len(), "product vertex {id} out of range");
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| id / s % n)
            .collect()
    }

    #[inline]
    pub fn coordinate(&self, id: usize, position: usize) -> usize {
        id / self.strides[position] % self.orders[position]
    }

    /// Product vertices matching `fixed` everywhere except `free_position`,
    /// i.e. the layer of factor `free_position` through that tuple. The
    /// entry of `fixed` at `free_position` must be `None`, all others `Some`.
    pub fn layer(&self, fixed: &[Option<usize>], free_position: usize) -> Result<VertexSet> {
        if fixed.len() != self.arity() || free_position >= self.arity() {
            return Err(Error::InconsistentTuple(format!(
                "expected {} coordinates with a free position below {}",
                self.arity(),
                self.arity()
            )));
        }
        let mut base = vec![0; self.arity()];
        for (i, c) in fixed.iter().enumerate() {
            match (i == free_position, c) {
                (true, None) => {}
                (false, Some(x)) => base[i] = *x,
                (true, Some(_)) => {
                    return Err(Error::InconsistentTuple(format!(
                        "free position {i} must not be fixed"
                    )))
                }
                (false, None) => {
                    return Err(Error::InconsistentTuple(format!(
                        "coordinate {i} is unassigned"
                    )))
                }
            }
        }
        let start = self.encode(&base)?;
        let stride = self.strides[free_position];
        Ok(VertexSet::from_iter_with_capacity(
            self.len(),
            (0..self.orders[free_position]).map(|k| start + k * stride),
        ))
    }

    /// Row-major product of vertex subsets, one per factor.
    pub fn cartesian_set(&self, sets: &[VertexSet]) -> Result<VertexSet> {
        if sets.len() != self.arity() {
            return Err(Error::InconsistentTuple(format!(
                "expected {} factor sets, got {}",
                self.arity(),
                sets.len()
            )));
        }
        let n = self.len();
        Ok(VertexSet::from_iter_with_capacity(
            n,
            (0..n).filter(|&id| {
                sets.iter()
                    .enumerate()
                    .all(|(i, s)| s.contains(self.coordinate(id, i)))
            }),
        ))
    }
}

/// `G ⊠ H`: `(g,h) ~ (g',h')` iff the pairs are distinct and each
/// coordinate is equal or adjacent.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductIndex)> {
    strong_product_multi(&[g, h])
}

/// Strong product of any number of factors under one row-major index.
pub fn strong_product_multi(factors: &[&Graph]) -> Result<(Graph, ProductIndex)> {
    let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let index = ProductIndex::new(&orders)?;
    let n = index.len();
    // closed neighborhoods of each factor
    let closed: Vec<Vec<VertexSet>> = factors
        .iter()
        .map(|f| (0..f.order()).map(|v| f.neighbors(v).with(v)).collect())
        .collect();
    let mut adj = Vec::with_capacity(n);
    let mut tuple = vec![0; factors.len()];
    for id in 0..n {
        for (i, t) in tuple.iter_mut().enumerate() {
            *t = index.coordinate(id, i);
        }
        let sets: Vec<VertexSet> = tuple
            .iter()
            .enumerate()
            .map(|(i, &x)| closed[i][x])
            .collect();
        let row = index.cartesian_set(&sets)?.without(id);
        adj.push(row);
    }
    Ok((Graph::from_rows(adj), index))
}

/// Checks `d((g,h),(g',h')) = max(d_G(g,g'), d_H(h,h'))` for every pair.
pub fn check_distance_law(
    g: &Graph,
    h: &Graph,
    product: &Graph,
    index: &ProductIndex,
) -> Result<bool> {
    g.require_connected()?;
    h.require_connected()?;
    if index.factor_orders() != [g.order(), h.order()] || product.order() != index.len() {
        return Err(Error::InconsistentTuple(
            "index does not match the factors".into(),
        ));
    }
    let (dg, dh, dp) = (
        all_pairs_distances(g),
        all_pairs_distances(h),
        all_pairs_distances(product),
    );
    for a in 0..product.order() {
        let (ga, ha) = (index.coordinate(a, 0), index.coordinate(a, 1));
        for b in 0..product.order() {
            let (gb, hb) = (index.coordinate(b, 0), index.coordinate(b, 1));
            if dp.get(a, b) != dg.get(ga, gb).max(dh.get(ha, hb)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn edge_products() {
        let (k4, _) = strong_product(&path(2).unwrap(), &path(2).unwrap()).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.order(), 4);
        let (k6, _) = strong_product(&complete(2).unwrap(), &complete(3).unwrap()).unwrap();
        assert!(k6.is_complete());
        assert_eq!(k6.order(), 6);
    }

    #[test]
    fn p3_by_p3_edge_count() {
        // adjacency-rule enumeration over all pairs of tuples
        let p3 = path(3).unwrap();
        let mut expected = 0;
        for a in 0..9 {
            for b in a + 1..9 {
                let (g, h, g2, h2) = (a / 3, a % 3, b / 3, b % 3);
                let ok = |x: usize, y: usize| x == y || p3.has_edge(x, y);
                if ok(g, g2) && ok(h, h2) {
                    expected += 1;
                }
            }
        }
        assert_eq!(expected, 20);
        let (p, _) = strong_product(&p3, &p3).unwrap();
        assert_eq!((p.order(), p.size()), (9, expected));
    }

    #[test]
    fn multi_products() {
        let g = cycle(5).unwrap();
        let (same, _) = strong_product_multi(&[&g]).unwrap();
        assert_eq!(same, g);
        let p3 = path(3).unwrap();
        let (cube, idx) = strong_product_multi(&[&p3, &p3, &p3]).unwrap();
        assert_eq!(cube.order(), 27);
        assert_eq!(idx.decode(5), vec![0, 1, 2]);
        assert!(matches!(strong_product_multi(&[]), Err(Error::NoFactors)));
        let empty = Graph::empty(0).unwrap();
        assert!(matches!(
            strong_product(&g, &empty),
            Err(Error::EmptyFactor)
        ));
    }

    #[test]
    fn capacity_guard() {
        let big = path(40).unwrap();
        assert!(matches!(
            strong_product(&big, &big),
            Err(Error::CapacityExceeded { requested: 1600 })
        ));
    }

    #[test]
    fn encode_decode() {
        let idx = ProductIndex::new(&[3, 4, 2]).unwrap();
        for id in 0..idx.len() {
            assert_eq!(idx.encode(&idx.decode(id)).unwrap(), id);
        }
        assert!(idx.encode(&[3, 0, 0]).is_err());
        assert!(idx.encode(&[0, 0]).is_err());
    }

    #[test]
    fn layers() {
        let idx = ProductIndex::new(&[3, 2]).unwrap();
        let layer = idx.layer(&[None, Some(0)], 0).unwrap();
        assert_eq!(layer.to_vec(), vec![0, 2, 4]);
        let other = idx.layer(&[None, Some(1)], 0).unwrap();
        assert!(!layer.intersects(&other));
        assert_eq!(idx.layer(&[Some(2), None], 1).unwrap().len(), 2);
        assert!(idx.layer(&[Some(0), Some(0)], 1).is_err());
        assert!(idx.layer(&[None, None], 0).is_err());
    }

    #[test]
    fn distance_law() {
        let (p4, p3) = (path(4).unwrap(), path(3).unwrap());
        let (prod, idx) = strong_product(&p4, &p3).unwrap();
        let dm = all_pairs_distances(&prod);
        let (a, b) = (idx.encode(&[0, 0]).unwrap(), idx.encode(&[3, 2]).unwrap());
        assert_eq!(dm.get(a, b), 3);
        assert_eq!(dm.get(a, a), 0);
        assert!(check_distance_law(&p4, &p3, &prod, &idx).unwrap());
        let (c5, p2) = (cycle(5).unwrap(), path(2).unwrap());
        let (prod, idx) = strong_product(&c5, &p2).unwrap();
        assert!(check_distance_law(&c5, &p2, &prod, &idx).unwrap());
    }

    #[test]
    fn distance_law_rejects_disconnected() {
        let two = Graph::new(2, &[]).unwrap();
        let (prod, idx) = strong_product(&two, &two).unwrap();
        assert_eq!(
            check_distance_law(&two, &two, &prod, &idx),
            Err(Error::Disconnected)
        );
    }
}
