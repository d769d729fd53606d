use mutvis::families::{build_cactus, cycle, random_connected, CactusRecipe, CactusStep};
use mutvis::graph::{all_pairs_distances, convex_hull, is_convex};
use mutvis::visibility::{
    brute_force_mu, check_kind, is_mv_set, is_pair_visible, is_tmv_set, mu_exact, mu_total_exact,
    solve, SetKind, SolveOptions,
};
use mutvis::{Graph, VertexSet};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8, 0usize..14, any::<u64>())
        .prop_map(|(n, extra, seed)| random_connected(n, extra, seed).unwrap())
}

fn graph_with_set() -> impl Strategy<Value = (Graph, VertexSet, Vec<bool>)> {
    small_graph().prop_flat_map(|g| {
        let n = g.order();
        (
            Just(g),
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(g, a, keep)| {
                (
                    g,
                    VertexSet::from_iter_with_capacity(n, (0..n).filter(|&i| a[i])),
                    keep,
                )
            })
    })
}

/// Some shortest `u,v`-path avoids `x` internally, by enumerating paths.
fn visible_by_paths(g: &Graph, x: &VertexSet, u: usize, v: usize, d: u32) -> bool {
    fn walk(g: &Graph, x: &VertexSet, cur: usize, v: usize, left: u32) -> bool {
        if cur == v {
            return true;
        }
        if left == 0 {
            return false;
        }
        g.neighbors(cur)
            .iter()
            .any(|w| (w == v || !x.contains(w)) && walk(g, x, w, v, left - 1))
    }
    walk(g, x, u, v, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pair_visibility_matches_enumeration((g, x, _) in graph_with_set()) {
        let dm = all_pairs_distances(&g);
        for u in 0..g.order() {
            for v in (0..g.order()).filter(|&v| v != u) {
                let want = visible_by_paths(&g, &x, u, v, dm.get(u, v));
                prop_assert_eq!(is_pair_visible(&g, &dm, &x, u, v).unwrap(), want);
                prop_assert!(is_pair_visible(&g, &dm, &VertexSet::empty(g.order()), u, v).unwrap());
            }
        }
    }

    #[test]
    fn downward_closed((g, x, keep) in graph_with_set()) {
        let dm = all_pairs_distances(&g);
        let y = VertexSet::from_iter_with_capacity(g.order(), x.iter().filter(|&v| keep[v]));
        if is_mv_set(&g, &dm, &x).unwrap() {
            prop_assert!(is_mv_set(&g, &dm, &y).unwrap());
        }
        if is_tmv_set(&g, &dm, &x).unwrap() {
            prop_assert!(is_tmv_set(&g, &dm, &y).unwrap());
        }
    }

    #[test]
    fn solvers_agree_and_certify(g in small_graph()) {
        let opts = SolveOptions::default();
        let dm = all_pairs_distances(&g);
        let mut values = vec![];
        for kind in [SetKind::Mv, SetKind::Tmv, SetKind::FeasibleTmv] {
            let r = solve(&g, kind, &opts).unwrap();
            let b = brute_force_mu(&g, kind, 18).unwrap();
            prop_assert!(r.exact);
            prop_assert_eq!(r.value, b.value);
            prop_assert_eq!(r.certificate.size, r.value);
            prop_assert!(check_kind(&g, &dm, &r.certificate.set, kind).unwrap());
            prop_assert!(check_kind(&g, &dm, &b.certificate.set, kind).unwrap());
            values.push(r.value);
        }
        prop_assert!(values[2] <= values[1] && values[1] <= values[0]);
    }

    #[test]
    fn thread_count_does_not_change_result(g in small_graph()) {
        let one = mu_exact(&g, &SolveOptions::default()).unwrap();
        let four = mu_exact(&g, &SolveOptions { threads: 4, ..Default::default() }).unwrap();
        prop_assert_eq!(one.value, four.value);
        prop_assert_eq!(one.certificate, four.certificate);
    }
}

/// Every connected graph on up to 5 labelled vertices.
#[test]
fn exhaustive_small_corpus() {
    let opts = SolveOptions::default();
    let mut checked = 0;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let mu = mu_exact(&g, &opts).unwrap().value;
            let mt = mu_total_exact(&g, &opts).unwrap().value;
            assert_eq!(
                mu,
                brute_force_mu(&g, SetKind::Mv, 18).unwrap().value,
                "{edges:?}"
            );
            assert_eq!(
                mt,
                brute_force_mu(&g, SetKind::Tmv, 18).unwrap().value,
                "{edges:?}"
            );
            assert!(mt <= mu);
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 4 + 38 + 728);
}

/// Graphs covered by convex parts whose induced subgraphs have no
/// nonempty total mutual-visibility set have none either.
#[test]
fn convex_cover_of_zero_parts() {
    let opts = SolveOptions::default();
    for (a, b) in [(5, 5), (5, 7), (6, 6), (6, 8)] {
        let g = build_cactus(&CactusRecipe::new(vec![
            CactusStep::RootCycle { length: a },
            CactusStep::AttachCycle { at: 0, length: b },
        ]))
        .unwrap();
        let dm = all_pairs_distances(&g);
        let first = VertexSet::from_iter_with_capacity(g.order(), 0..a);
        let second =
            VertexSet::from_iter_with_capacity(g.order(), [0].into_iter().chain(a..g.order()));
        for part in [first, second] {
            assert!(is_convex(&g, &dm, &part));
            assert_eq!(convex_hull(&g, &dm, &part).unwrap(), part);
            let (sub, _) = g.induced_subgraph(&part);
            assert_eq!(mu_total_exact(&sub, &opts).unwrap().value, 0);
        }
        assert_eq!(mu_total_exact(&g, &opts).unwrap().value, 0);
    }
}

#[test]
fn cycle_values() {
    let opts = SolveOptions::default();
    for n in 5..=12 {
        let g = cycle(n).unwrap();
        assert_eq!(mu_exact(&g, &opts).unwrap().value, 3);
        assert_eq!(mu_total_exact(&g, &opts).unwrap().value, 0);
    }
    assert_eq!(mu_total_exact(&cycle(4).unwrap(), &opts).unwrap().value, 2);
}
