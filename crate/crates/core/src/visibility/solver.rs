use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{feasible_unchecked, kind_unchecked, mv_extends, pair_visible, Certificate, SetKind};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexSet};

pub const DEFAULT_ORACLE_LIMIT: usize = 18;

/// Upper bound used to prune the include/exclude search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Bound {
    /// `|current| + undecided vertices`.
    #[default]
    Trivial,
    /// `|current| + undecided vertices that could still be added on their
    /// own`. Costs one extension test per undecided vertex per node.
    Candidates,
    /// Per-part caps from a vertex cover `V_1..V_k` of the graph: any valid
    /// set meets each `hull(V_i)` in at most `caps[i]` vertices, where
    /// `caps[i] = mu(hull(V_i))`.
    HullCover {
        parts: Vec<VertexSet>,
        caps: Vec<usize>,
    },
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub oracle_limit: usize,
    /// Worker threads; results do not depend on this.
    pub threads: usize,
    pub bound: Bound,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            node_budget: None,
            time_budget: None,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            threads: 1,
            bound: Bound::Trivial,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: Certificate,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// False when a budget ran out; `value` is then only a lower bound.
    pub exact: bool,
}

pub fn mu_exact(g: &Graph, options: &SolveOptions) -> Result<SolveResult> {
    solve(g, SetKind::Mv, options)
}

pub fn mu_total_exact(g: &Graph, options: &SolveOptions) -> Result<SolveResult> {
    solve(g, SetKind::Tmv, options)
}

/// Largest set of the given kind, by depth-first include/exclude search
/// over vertices in ascending id order.
///
/// The reported certificate is the first optimum met in that order
/// (include before exclude), independent of the thread count.
pub fn solve(g: &Graph, kind: SetKind, options: &SolveOptions) -> Result<SolveResult> {
    g.require_connected()?;
    let start = Instant::now();
    let dm = all_pairs_distances(g);
    if let Bound::HullCover { parts, caps } = &options.bound {
        let covered = parts
            .iter()
            .fold(VertexSet::empty(g.order()), |acc, p| acc.union(p));
        if parts.len() != caps.len() || covered != g.vertices() {
            return Err(Error::InvalidParameter(
                "hull cover must cover every vertex and carry one cap per part".into(),
            ));
        }
    }
    let shared = Shared {
        g,
        dm: &dm,
        kind,
        bound: &options.bound,
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        node_budget: options.node_budget,
        deadline: options.time_budget.map(|t| start + t),
    };

    let threads = options.threads.max(1);
    let outcome = if threads == 1 || g.order() < 8 {
        let mut worker = Worker::new(&shared);
        worker.dfs(0, VertexSet::empty(g.order()), 0);
        worker.flush();
        worker.best
    } else {
        let prefixes = split_prefixes(&shared, threads * 16);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        let results: Vec<Option<(usize, VertexSet)>> = pool.install(|| {
            prefixes
                .par_iter()
                .map(|&(depth, set, size)| {
                    let mut worker = Worker::new(&shared);
                    worker.dfs(depth, set, size);
                    worker.flush();
                    worker.best
                })
                .collect()
        });
        // ordered reduction: largest value, earliest prefix on ties
        let mut best: Option<(usize, VertexSet)> = None;
        for r in results.into_iter().flatten() {
            if best.as_ref().is_none_or(|b| r.0 > b.0) {
                best = Some(r);
            }
        }
        best
    };

    let (value, set) = outcome.unwrap_or((0, VertexSet::empty(g.order())));
    let certificate = Certificate::check(g, &dm, set, kind)?;
    if !certificate.verified {
        return Err(Error::VerificationFailed(format!(
            "solver produced {set:?}, which is not a {kind} set"
        )));
    }
    Ok(SolveResult {
        value,
        certificate,
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        exact: !shared.stop.load(Ordering::Relaxed),
    })
}

/// Subtree roots in DFS order, expanded breadth-wise until there are at
/// least `target` of them.
fn split_prefixes(shared: &Shared<'_>, target: usize) -> Vec<(usize, VertexSet, usize)> {
    let n = shared.g.order();
    let mut frontier = vec![(0usize, VertexSet::empty(n), 0usize)];
    while frontier.len() < target && frontier.iter().any(|p| p.0 < n) {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (depth, set, size) in frontier {
            if depth == n {
                next.push((depth, set, size));
                continue;
            }
            if shared.can_add(&set, depth) {
                next.push((depth + 1, set.with(depth), size + 1));
            }
            next.push((depth + 1, set, size));
        }
        frontier = next;
    }
    frontier
}

struct Shared<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    kind: SetKind,
    bound: &'a Bound,
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared<'_> {
    /// Whether `set ∪ {w}` keeps the property, given that `set` has it.
    /// Only pairs whose visibility `w` can affect are re-examined.
    fn can_add(&self, set: &VertexSet, w: usize) -> bool {
        let (g, dm) = (self.g, self.dm);
        let with_w = set.with(w);
        let blocks =
            |a: usize, b: usize| a != w && b != w && dm.get(a, w) + dm.get(w, b) == dm.get(a, b);
        match self.kind {
            SetKind::Mv => mv_extends(g, dm, set, w),
            SetKind::Tmv | SetKind::FeasibleTmv => {
                let n = g.order();
                let tmv = (0..n).all(|a| {
                    (a + 1..n).all(|b| {
                        dm.get(a, b) < 2 || !blocks(a, b) || pair_visible(g, dm, &with_w, a, b)
                    })
                });
                tmv && (self.kind == SetKind::Tmv || feasible_unchecked(g, &with_w))
            }
        }
    }
}

struct Worker<'s, 'a> {
    shared: &'s Shared<'a>,
    best: Option<(usize, VertexSet)>,
    pending_nodes: u64,
}

impl<'s, 'a> Worker<'s, 'a> {
    fn new(shared: &'s Shared<'a>) -> Self {
        Self {
            shared,
            best: None,
            pending_nodes: 0,
        }
    }

    fn local_best(&self) -> Option<usize> {
        self.best.as_ref().map(|b| b.0)
    }

    fn flush(&mut self) {
        let total = self
            .shared
            .nodes
            .fetch_add(self.pending_nodes, Ordering::Relaxed)
            + self.pending_nodes;
        self.pending_nodes = 0;
        if self.shared.node_budget.is_some_and(|b| total >= b)
            || self.shared.deadline.is_some_and(|d| Instant::now() >= d)
        {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&mut self, depth: usize, set: VertexSet, size: usize) {
        self.pending_nodes += 1;
        if self.pending_nodes >= 1024 {
            self.flush();
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return;
        }
        if self.local_best().is_none_or(|b| size > b) {
            self.best = Some((size, set));
            self.shared.best.fetch_max(size, Ordering::Relaxed);
        }
        let n = self.shared.g.order();
        if depth == n {
            return;
        }
        let bound = self.upper_bound(depth, &set, size);
        let local = self.local_best().unwrap_or(0);
        // ties with a bound found elsewhere must still be explored, since
        // an earlier subtree's optimum wins over a later one of equal size
        if bound <= local || bound < self.shared.best.load(Ordering::Relaxed) {
            return;
        }
        if self.shared.can_add(&set, depth) {
            self.dfs(depth + 1, set.with(depth), size + 1);
        }
        self.dfs(depth + 1, set, size);
    }

    fn upper_bound(&self, depth: usize, set: &VertexSet, size: usize) -> usize {
        let n = self.shared.g.order();
        let trivial = size + (n - depth);
        match self.shared.bound {
            Bound::Trivial => trivial,
            Bound::Candidates => size + (depth..n).filter(|&w| self.shared.can_add(set, w)).count(),
            Bound::HullCover { parts, caps } => {
                let mut open = *set;
                for w in depth..n {
                    open.insert(w);
                }
                let cover: usize = parts
                    .iter()
                    .zip(caps)
                    .map(|(p, &cap)| cap.min(p.intersection(&open).len()))
                    .sum();
                trivial.min(cover)
            }
        }
    }
}

/// Exhaustive subset enumeration in increasing bitmask order, using only
/// the plain set checkers. Ground truth for the branch-and-bound solver.
pub fn brute_force_mu(g: &Graph, kind: SetKind, oracle_limit: usize) -> Result<SolveResult> {
    let n = g.order();
    if n > oracle_limit || n > 30 {
        return Err(Error::OracleLimit {
            limit: oracle_limit.min(30),
            n,
        });
    }
    g.require_connected()?;
    let start = Instant::now();
    let dm = all_pairs_distances(g);
    let mut best = (0usize, VertexSet::empty(n));
    let mut visited = 0u64;
    for mask in 0u64..(1u64 << n) {
        visited += 1;
        let size = mask.count_ones() as usize;
        if size <= best.0 {
            continue;
        }
        let set = VertexSet::from_iter_with_capacity(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if kind_unchecked(g, &dm, &set, kind) {
            best = (size, set);
        }
    }
    let certificate = Certificate::check(g, &dm, best.1, kind)?;
    Ok(SolveResult {
        value: best.0,
        certificate,
        nodes_explored: visited,
        elapsed: start.elapsed(),
        exact: true,
    })
}
