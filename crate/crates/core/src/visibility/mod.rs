//! Visibility checks, exact solvers and heuristics.
//!
//! Two vertices `u`, `v` are *X-visible* when some shortest `u,v`-path has
//! no internal vertex in `X`. Whether `u` or `v` themselves lie in `X` does
//! not matter. All three set properties below are closed under taking
//! subsets, which is what makes include/exclude branch-and-bound sound.

mod heuristic;
mod solver;

pub use heuristic::{mu_heuristic, HeuristicOptions};
pub use solver::{
    brute_force_mu, mu_exact, mu_total_exact, solve, Bound, SolveOptions, SolveResult,
    DEFAULT_ORACLE_LIMIT,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexSet};

/// Which property a set is claimed to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetKind {
    /// Mutual-visibility: members pairwise visible.
    #[serde(rename = "mv")]
    Mv,
    /// Total mutual-visibility: every pair of the graph visible.
    #[serde(rename = "tmv")]
    Tmv,
    /// Total mutual-visibility where every adjacent pair of members has a
    /// common neighbor outside the set.
    #[serde(rename = "feasible-tmv")]
    FeasibleTmv,
}

impl SetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SetKind::Mv => "mv",
            SetKind::Tmv => "tmv",
            SetKind::FeasibleTmv => "feasible-tmv",
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mv" => Ok(SetKind::Mv),
            "tmv" => Ok(SetKind::Tmv),
            "feasible-tmv" | "ftmv" => Ok(SetKind::FeasibleTmv),
            other => Err(Error::InvalidParameter(format!(
                "unknown set kind {other:?}"
            ))),
        }
    }
}

/// A vertex set together with the property it is claimed to have.
///
/// `verified` is only ever set by running the matching checker against a
/// concrete graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub set: VertexSet,
    pub kind: SetKind,
    pub size: usize,
    pub verified: bool,
}

impl Certificate {
    /// Runs the checker for `kind` and records the outcome.
    pub fn check(g: &Graph, dm: &DistanceMatrix, set: VertexSet, kind: SetKind) -> Result<Self> {
        let verified = check_kind(g, dm, &set, kind)?;
        Ok(Self {
            set,
            kind,
            size: set.len(),
            verified,
        })
    }

    /// Like [`Certificate::check`] but fails unless the set verifies.
    pub fn verified(g: &Graph, dm: &DistanceMatrix, set: VertexSet, kind: SetKind) -> Result<Self> {
        let cert = Self::check(g, dm, set, kind)?;
        if cert.verified {
            Ok(cert)
        } else {
            Err(Error::VerificationFailed(format!(
                "{:?} is not a {} set",
                set, kind
            )))
        }
    }
}

pub fn check_kind(g: &Graph, dm: &DistanceMatrix, set: &VertexSet, kind: SetKind) -> Result<bool> {
    match kind {
        SetKind::Mv => is_mv_set(g, dm, set),
        SetKind::Tmv => is_tmv_set(g, dm, set),
        SetKind::FeasibleTmv => is_feasible_tmv_set(g, dm, set),
    }
}

/// Whether some shortest `u,v`-path avoids `x` internally.
pub fn is_pair_visible(
    g: &Graph,
    dm: &DistanceMatrix,
    x: &VertexSet,
    u: usize,
    v: usize,
) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if !dm.is_reachable(u, v) {
        return Err(Error::UnreachablePair(u, v));
    }
    Ok(pair_visible(g, dm, x, u, v))
}

/// Layered reachability from `u` toward `v` through admissible vertices.
///
/// At step `k` the frontier holds the vertices at distance `k` from `u` on
/// a `u,v`-geodesic that can be reached avoiding `x`. Stepping to
/// neighbors at distance `d(u,v) - k - 1` from `v` keeps every walk
/// geodesic.
#[inline]
pub(crate) fn pair_visible(
    g: &Graph,
    dm: &DistanceMatrix,
    x: &VertexSet,
    u: usize,
    v: usize,
) -> bool {
    let total = dm.get(u, v);
    if total <= 1 {
        return true;
    }
    let mut frontier = VertexSet::singleton(g.order(), u);
    for k in 1..total {
        let Some(target) = dm.level(v, total - k) else {
            return false;
        };
        let mut next = g.neighborhood_of(&frontier);
        next.intersect_with(target);
        next.difference_with(x);
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    // the frontier now sits next to v
    true
}

pub fn is_mv_set(g: &Graph, dm: &DistanceMatrix, x: &VertexSet) -> Result<bool> {
    g.require_connected()?;
    Ok(mv_unchecked(g, dm, x))
}

pub fn is_tmv_set(g: &Graph, dm: &DistanceMatrix, x: &VertexSet) -> Result<bool> {
    g.require_connected()?;
    Ok(tmv_unchecked(g, dm, x))
}

pub fn is_feasible_tmv_set(g: &Graph, dm: &DistanceMatrix, x: &VertexSet) -> Result<bool> {
    g.require_connected()?;
    Ok(tmv_unchecked(g, dm, x) && feasible_unchecked(g, x))
}

pub(crate) fn kind_unchecked(g: &Graph, dm: &DistanceMatrix, x: &VertexSet, kind: SetKind) -> bool {
    match kind {
        SetKind::Mv => mv_unchecked(g, dm, x),
        SetKind::Tmv => tmv_unchecked(g, dm, x),
        SetKind::FeasibleTmv => tmv_unchecked(g, dm, x) && feasible_unchecked(g, x),
    }
}

pub(crate) fn mv_unchecked(g: &Graph, dm: &DistanceMatrix, x: &VertexSet) -> bool {
    let members = x.to_vec();
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..]
            .iter()
            .all(|&b| pair_visible(g, dm, x, a, b))
    })
}

pub(crate) fn tmv_unchecked(g: &Graph, dm: &DistanceMatrix, x: &VertexSet) -> bool {
    if x.is_empty() {
        return true;
    }
    let n = g.order();
    (0..n).all(|a| (a + 1..n).all(|b| pair_visible(g, dm, x, a, b)))
}

/// Whether `x ∪ {w}` is a mutual-visibility set, given that `x` is one.
/// Besides pairs involving `w`, only pairs with `w` strictly inside their
/// geodesic interval can lose visibility.
pub(crate) fn mv_extends(g: &Graph, dm: &DistanceMatrix, x: &VertexSet, w: usize) -> bool {
    let with_w = x.with(w);
    let members: Vec<usize> = x.iter().filter(|&a| a != w).collect();
    if !members.iter().all(|&a| pair_visible(g, dm, &with_w, a, w)) {
        return false;
    }
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..].iter().all(|&b| {
            dm.get(a, w) + dm.get(w, b) != dm.get(a, b) || pair_visible(g, dm, &with_w, a, b)
        })
    })
}

/// Every adjacent pair inside `x` has a common neighbor outside `x`.
pub(crate) fn feasible_unchecked(g: &Graph, x: &VertexSet) -> bool {
    x.iter().all(|a| {
        g.neighbors(a)
            .intersection(x)
            .iter()
            .filter(|&b| b > a)
            .all(|b| {
                let mut common = g.neighbors(a).intersection(g.neighbors(b));
                common.difference_with(x);
                !common.is_empty()
            })
    })
}
