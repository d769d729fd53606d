use mutvis::families::random_connected;
use mutvis::graph::{
    all_pairs_distances, block_decomposition, convex_hull, enabling_vertices, geodesic_interval,
    is_convex,
};
use mutvis::visibility::{mu_exact, SolveOptions};
use mutvis::{Graph, VertexSet};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8, 0usize..12, any::<u64>())
        .prop_map(|(n, extra, seed)| random_connected(n, extra, seed).unwrap())
}

fn graph_and_sets() -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    small_graph().prop_flat_map(|g| {
        let n = g.order();
        let mask = prop::collection::vec(any::<bool>(), n);
        (Just(g), mask.clone(), mask).prop_map(move |(g, a, b)| {
            let s = VertexSet::from_iter_with_capacity(n, (0..n).filter(|&i| a[i]));
            let t = s.union(&VertexSet::from_iter_with_capacity(
                n,
                (0..n).filter(|&i| b[i]),
            ));
            (g, s, t)
        })
    })
}

/// Vertices on some shortest path, by enumerating every simple path.
fn interval_by_paths(g: &Graph, u: usize, v: usize) -> VertexSet {
    fn walk(
        g: &Graph,
        cur: usize,
        target: usize,
        path: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if cur == target {
            found.push(path.clone());
            return;
        }
        for w in g.neighbors(cur).iter() {
            if !path.contains(&w) {
                path.push(w);
                walk(g, w, target, path, found);
                path.pop();
            }
        }
    }
    let mut found = vec![];
    walk(g, u, v, &mut vec![u], &mut found);
    let shortest = found.iter().map(Vec::len).min().unwrap();
    let mut out = VertexSet::empty(g.order());
    for p in found.iter().filter(|p| p.len() == shortest) {
        for &x in p {
            out.insert(x);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interval_matches_path_enumeration(g in small_graph()) {
        let dm = all_pairs_distances(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(geodesic_interval(&g, &dm, u, v).unwrap(), interval_by_paths(&g, u, v));
            }
        }
    }

    #[test]
    fn hull_is_a_closure((g, s, t) in graph_and_sets()) {
        let dm = all_pairs_distances(&g);
        let hs = convex_hull(&g, &dm, &s).unwrap();
        let ht = convex_hull(&g, &dm, &t).unwrap();
        prop_assert!(s.is_subset(&hs));
        prop_assert_eq!(convex_hull(&g, &dm, &hs).unwrap(), hs);
        prop_assert!(hs.is_subset(&ht));
        prop_assert!(is_convex(&g, &dm, &hs));
    }

    #[test]
    fn cut_vertices_disconnect(g in small_graph()) {
        let blocks = block_decomposition(&g).unwrap();
        if g.order() >= 2 {
            for v in 0..g.order() {
                let (rest, _) = g.remove_vertex(v);
                prop_assert_eq!(!rest.is_connected(), blocks.cut_vertices.contains(v));
            }
        }
        let mut covered = VertexSet::empty(g.order());
        for b in &blocks.blocks {
            covered.union_with(b);
        }
        prop_assert_eq!(covered, g.vertices());
    }

    #[test]
    fn enabling_vertex_iff_mu_at_least_n_minus_1(g in small_graph()) {
        prop_assume!(g.order() >= 2);
        let mu = mu_exact(&g, &SolveOptions::default()).unwrap().value;
        let enabling = enabling_vertices(&g).unwrap();
        prop_assert_eq!(mu + 1 >= g.order(), !enabling.is_empty());
    }
}
