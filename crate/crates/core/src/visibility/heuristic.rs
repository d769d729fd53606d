use std::time::{Duration, Instant};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{mv_extends, Certificate, SetKind};
use crate::error::Result;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexSet};

#[derive(Clone, Debug)]
pub struct HeuristicOptions {
    /// Number of local-search moves.
    pub iterations: u64,
    pub time_limit: Option<Duration>,
    pub seed: u64,
    /// Moves without improvement before a random perturbation.
    pub stall_limit: u64,
    /// Iterations a removed vertex stays out of the set.
    pub tabu_tenure: u64,
    /// Stop as soon as a set of this size is found.
    pub target: Option<usize>,
}

impl Default for HeuristicOptions {
    fn default() -> Self {
        Self {
            iterations: 20_000,
            time_limit: None,
            seed: 0,
            stall_limit: 400,
            tabu_tenure: 7,
            target: None,
        }
    }
}

/// Large mutual-visibility set by randomized greedy construction followed
/// by tabu local search.
///
/// Each move first adds every vertex that fits; failing that it swaps one
/// outside vertex in for one member (a plateau move). Long stalls trigger a
/// perturbation that drops a few random members. The best set seen is
/// returned as a verified certificate, so its size is a lower bound on `mu`.
pub fn mu_heuristic(g: &Graph, options: &HeuristicOptions) -> Result<Certificate> {
    g.require_connected()?;
    let dm = all_pairs_distances(g);
    let n = g.order();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut current = VertexSet::empty(n);
    for &v in &order {
        if mv_extends(g, &dm, &current, v) {
            current.insert(v);
        }
    }
    let mut best = current;
    let mut tabu_until = vec![0u64; n];
    let mut stall = 0u64;

    for iter in 1..=options.iterations {
        if options.time_limit.is_some_and(|t| start.elapsed() >= t)
            || best.len() == n
            || options.target.is_some_and(|t| best.len() >= t)
        {
            break;
        }
        let mut outside: Vec<usize> = current.complement().iter().collect();
        outside.shuffle(&mut rng);

        if add_all(g, &dm, &mut current, &outside, &tabu_until, iter) {
            // nothing to do; fall through to the bookkeeping below
        } else if let Some((w, x)) =
            pick_swap(g, &dm, &current, &outside, &tabu_until, iter, &mut rng)
        {
            current.remove(x);
            current.insert(w);
            tabu_until[x] = iter + options.tabu_tenure;
            outside.retain(|&v| v != w);
            outside.push(x);
            add_all(g, &dm, &mut current, &outside, &tabu_until, iter);
        }

        if current.len() > best.len() {
            best = current;
            stall = 0;
        } else {
            stall += 1;
        }
        if stall >= options.stall_limit {
            stall = 0;
            current = best;
            let drop = rng.random_range(1..=3.min(current.len().max(1)));
            let members = current.to_vec();
            for &x in members.choose_multiple(&mut rng, drop) {
                current.remove(x);
                tabu_until[x] = iter + options.tabu_tenure;
            }
        }
    }
    Certificate::verified(g, &dm, best, SetKind::Mv)
}

fn add_all(
    g: &Graph,
    dm: &DistanceMatrix,
    current: &mut VertexSet,
    candidates: &[usize],
    tabu_until: &[u64],
    iter: u64,
) -> bool {
    let mut added = false;
    for &w in candidates {
        if tabu_until[w] <= iter && !current.contains(w) && mv_extends(g, dm, current, w) {
            current.insert(w);
            added = true;
        }
    }
    added
}

/// First outside vertex (in shuffled order) that fits after removing some
/// member; the member is chosen uniformly among those that work.
fn pick_swap(
    g: &Graph,
    dm: &DistanceMatrix,
    current: &VertexSet,
    outside: &[usize],
    tabu_until: &[u64],
    iter: u64,
    rng: &mut ChaCha8Rng,
) -> Option<(usize, usize)> {
    let members = current.to_vec();
    for &w in outside.iter().filter(|&&w| tabu_until[w] <= iter) {
        let options: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&x| mv_extends(g, dm, &current.without(x), w))
            .collect();
        if let Some(&x) = options.as_slice().choose(rng) {
            return Some((w, x));
        }
    }
    None
}
