//! Generators for the graph families used throughout the crate.
//!
//! Deterministic families are built directly; randomized ones draw from a
//! ChaCha stream keyed by an explicit seed, so the same spec and seed always
//! produce the same edge list.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, Graph, VertexSet, MAX_VERTICES};

/// A member of one of the supported families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    /// Independent set on the first `independent` ids, clique on the rest,
    /// every independent vertex joined to every clique vertex.
    CompleteSplit {
        independent: usize,
        clique: usize,
    },
    /// `K_{1,leaves}` with the center at id 0.
    Star {
        leaves: usize,
    },
    /// A star whose every edge is subdivided `subdivisions` times.
    SubdividedStar {
        legs: usize,
        subdivisions: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Random tree plus up to `extra_edges` random chords.
    RandomConnected {
        n: usize,
        extra_edges: usize,
        seed: u64,
    },
    RandomBlockGraph {
        n: usize,
        seed: u64,
    },
    Cograph(CographRecipe),
    RandomCograph {
        n: usize,
        seed: u64,
    },
    Cactus(CactusRecipe),
    RandomCactus {
        max_n: usize,
        seed: u64,
    },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match spec {
        Path { n } => {
            at_least("path order", *n, 1)?;
            path(*n)
        }
        Cycle { n } => {
            at_least("cycle length", *n, 3)?;
            cycle(*n)
        }
        Complete { n } => {
            at_least("complete graph order", *n, 1)?;
            complete(*n)
        }
        CompleteMultipartite { parts } => complete_multipartite(parts),
        CompleteSplit {
            independent,
            clique,
        } => complete_split(*independent, *clique),
        Star { leaves } => {
            at_least("star leaves", *leaves, 1)?;
            subdivided_star(*leaves, 0)
        }
        SubdividedStar { legs, subdivisions } => {
            at_least("star legs", *legs, 1)?;
            subdivided_star(*legs, *subdivisions)
        }
        RandomTree { n, seed } => {
            at_least("tree order", *n, 1)?;
            random_tree(*n, *seed)
        }
        RandomConnected {
            n,
            extra_edges,
            seed,
        } => {
            at_least("graph order", *n, 1)?;
            random_connected(*n, *extra_edges, *seed)
        }
        RandomBlockGraph { n, seed } => {
            at_least("block graph order", *n, 1)?;
            random_block_graph(*n, *seed)
        }
        Cograph(recipe) => build_cograph(recipe),
        RandomCograph { n, seed } => build_cograph(&random_cograph_recipe(*n, *seed)?),
        Cactus(recipe) => build_cactus(recipe),
        RandomCactus { max_n, seed } => build_cactus(&random_cactus_recipe(*max_n, *seed)?),
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!(
            "{what} must be at least {min}, got {value}"
        )))
    } else if value > MAX_VERTICES {
        Err(Error::CapacityExceeded { requested: value })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle length", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete multipartite graph needs at least 2 parts, got {}",
            parts.len()
        )));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidParameter("empty part".into()));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

pub fn complete_split(independent: usize, clique: usize) -> Result<Graph> {
    let n = independent + clique;
    at_least("complete split graph order", n, 1)?;
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if v >= independent {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Center 0; leg `i` occupies ids `1 + i*(s+1) ..= (i+1)*(s+1)` walking
/// outward, so the leaf of each leg is its last id.
pub fn subdivided_star(legs: usize, subdivisions: usize) -> Result<Graph> {
    let leg_len = subdivisions + 1;
    let n = 1 + legs * leg_len;
    at_least("subdivided star order", n, 1)?;
    let mut edges = vec![];
    for leg in 0..legs {
        let first = 1 + leg * leg_len;
        edges.push((0, first));
        for k in 1..leg_len {
            edges.push((first + k - 1, first + k));
        }
    }
    Graph::new(n, &edges)
}

/// Replaces every edge by a path with `times` new internal vertices.
/// Original vertices keep their ids; new ones follow in sorted edge order.
pub fn subdivide(g: &Graph, times: usize) -> Result<Graph> {
    let old_edges = g.edges();
    let n = g.order() + old_edges.len() * times;
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: n });
    }
    let mut edges = vec![];
    let mut next = g.order();
    for (u, v) in old_edges {
        let mut prev = u;
        for _ in 0..times {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::new(n, &edges)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each vertex `i > 0` attaches to a uniformly random earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut r = rng(seed);
    let edges: Vec<_> = (1..n).map(|i| (r.random_range(0..i), i)).collect();
    Graph::new(n, &edges)
}

/// A random tree with `extra_edges` further vertex pairs joined. Repeated
/// pairs collapse, so the final size can fall short of `n - 1 + extra_edges`.
pub fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    let mut r = rng(seed);
    let mut edges: Vec<_> = (1..n).map(|i| (r.random_range(0..i), i)).collect();
    if n >= 2 {
        for _ in 0..extra_edges {
            let u = r.random_range(0..n);
            let v = (u + r.random_range(1..n)) % n;
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Connected block graph grown from `K_1` by a seeded sequence of
/// true-twin and pendant-vertex additions. Twins are only taken of
/// vertices lying in a single block, since twinning a cut vertex would
/// merge its blocks.
pub fn random_block_graph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "block graph order must be at least 1".into(),
        ));
    }
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: n });
    }
    let mut r = rng(seed);
    let mut blocks: Vec<Vec<usize>> = vec![];
    // index of the only block containing a vertex, if there is exactly one
    let mut home: Vec<Option<usize>> = vec![None];
    let mut block_count = vec![0usize];
    let mut edges = vec![];
    for new in 1..n {
        let simplicial: Vec<usize> = (0..new).filter(|&v| block_count[v] <= 1).collect();
        let twin = r.random_bool(0.5);
        if twin {
            let v = simplicial[r.random_range(0..simplicial.len())];
            match home[v] {
                Some(b) => {
                    edges.extend(blocks[b].iter().map(|&w| (w, new)));
                    blocks[b].push(new);
                    home.push(Some(b));
                    block_count.push(1);
                    continue;
                }
                None => {
                    // v is the isolated starting vertex; twin and pendant coincide
                    attach_pendant(v, new, &mut blocks, &mut home, &mut block_count, &mut edges);
                    continue;
                }
            }
        }
        let v = r.random_range(0..new);
        attach_pendant(v, new, &mut blocks, &mut home, &mut block_count, &mut edges);
    }
    Graph::new(n, &edges)
}

fn attach_pendant(
    v: usize,
    new: usize,
    blocks: &mut Vec<Vec<usize>>,
    home: &mut Vec<Option<usize>>,
    block_count: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
) {
    let b = blocks.len();
    blocks.push(vec![v, new]);
    edges.push((v, new));
    block_count[v] += 1;
    home[v] = if block_count[v] == 1 { Some(b) } else { None };
    home.push(Some(b));
    block_count.push(1);
}

/// One step of a cograph construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CographStep {
    Start,
    TrueTwin(usize),
    FalseTwin(usize),
}

/// Vertex `i` of the built graph is created by step `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CographRecipe {
    pub steps: Vec<CographStep>,
}

impl CographRecipe {
    pub fn new(steps: Vec<CographStep>) -> Self {
        Self { steps }
    }
}

pub fn build_cograph(recipe: &CographRecipe) -> Result<Graph> {
    let steps = &recipe.steps;
    if steps.first() != Some(&CographStep::Start) {
        return Err(Error::InvalidRecipe("first step must be start".into()));
    }
    if steps.len() > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            requested: steps.len(),
        });
    }
    let n = steps.len();
    let mut adj = vec![VertexSet::empty(n)];
    for (new, step) in steps.iter().enumerate().skip(1) {
        let (of, with_edge) = match *step {
            CographStep::Start => {
                return Err(Error::InvalidRecipe(format!(
                    "start repeated at step {new}"
                )))
            }
            CographStep::TrueTwin(of) => (of, true),
            CographStep::FalseTwin(of) => (of, false),
        };
        if of >= new {
            return Err(Error::InvalidRecipe(format!(
                "step {new} twins vertex {of}, which does not exist yet"
            )));
        }
        let mut nbrs = adj[of];
        if with_edge {
            nbrs.insert(of);
        }
        for w in &nbrs {
            adj[w].insert(new);
        }
        adj.push(nbrs);
    }
    Ok(Graph::from_rows(adj))
}

/// Starts with a true twin of vertex 0, which keeps every later graph
/// connected, then adds uniformly random twins.
pub fn random_cograph_recipe(n: usize, seed: u64) -> Result<CographRecipe> {
    at_least("cograph order", n, 1)?;
    let mut r = rng(seed);
    let mut steps = vec![CographStep::Start];
    if n >= 2 {
        steps.push(CographStep::TrueTwin(0));
    }
    for new in 2..n {
        let of = r.random_range(0..new);
        steps.push(if r.random_bool(0.5) {
            CographStep::TrueTwin(of)
        } else {
            CographStep::FalseTwin(of)
        });
    }
    Ok(CographRecipe::new(steps))
}

impl fmt::Display for CographRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match step {
                CographStep::Start => writeln!(f, "start")?,
                CographStep::TrueTwin(v) => writeln!(f, "true-twin {v}")?,
                CographStep::FalseTwin(v) => writeln!(f, "false-twin {v}")?,
            }
        }
        Ok(())
    }
}

/// One step per line: `start`, `true-twin V`, `false-twin V`; `#` comments.
impl FromStr for CographRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = vec![];
        for (lineno, line) in recipe_lines(s) {
            let words: Vec<&str> = line.split_whitespace().collect();
            let step = match words.as_slice() {
                ["start"] => CographStep::Start,
                ["true-twin", v] => CographStep::TrueTwin(parse_num(v, lineno)?),
                ["false-twin", v] => CographStep::FalseTwin(parse_num(v, lineno)?),
                _ => {
                    return Err(Error::InvalidRecipe(format!(
                        "line {lineno}: unrecognised step {line:?}"
                    )))
                }
            };
            steps.push(step);
        }
        Ok(Self { steps })
    }
}

/// One step of a cactus construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CactusStep {
    RootCycle {
        length: usize,
    },
    /// New cycle of `length` vertices, one of which is the existing `at`.
    AttachCycle {
        at: usize,
        length: usize,
    },
    /// New path of `length` fresh vertices hanging from `at`.
    AttachPath {
        at: usize,
        length: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusRecipe {
    pub steps: Vec<CactusStep>,
}

impl CactusRecipe {
    pub fn new(steps: Vec<CactusStep>) -> Self {
        Self { steps }
    }
}

pub fn build_cactus(recipe: &CactusRecipe) -> Result<Graph> {
    let mut edges = vec![];
    let mut n = 0usize;
    for (i, step) in recipe.steps.iter().enumerate() {
        match *step {
            CactusStep::RootCycle { length } => {
                if i != 0 {
                    return Err(Error::InvalidRecipe("root cycle must come first".into()));
                }
                if length < 3 {
                    return Err(Error::InvalidRecipe(format!("cycle length {length} < 3")));
                }
                edges.extend((0..length).map(|k| (k, (k + 1) % length)));
                n = length;
            }
            CactusStep::AttachCycle { at, length } => {
                check_attach(i, at, n)?;
                if length < 3 {
                    return Err(Error::InvalidRecipe(format!("cycle length {length} < 3")));
                }
                let mut prev = at;
                for k in 0..length - 1 {
                    edges.push((prev, n + k));
                    prev = n + k;
                }
                edges.push((prev, at));
                n += length - 1;
            }
            CactusStep::AttachPath { at, length } => {
                check_attach(i, at, n)?;
                if length < 1 {
                    return Err(Error::InvalidRecipe(
                        "path length must be at least 1".into(),
                    ));
                }
                let mut prev = at;
                for k in 0..length {
                    edges.push((prev, n + k));
                    prev = n + k;
                }
                n += length;
            }
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n });
        }
    }
    if recipe.steps.is_empty() {
        return Err(Error::InvalidRecipe("empty cactus recipe".into()));
    }
    let g = Graph::new(n, &edges)?;
    debug_assert!(block_decomposition(&g)
        .map(|bd| bd.all_blocks_cycles_or_edges(&g))
        .unwrap_or(false));
    Ok(g)
}

fn check_attach(step: usize, at: usize, n: usize) -> Result<()> {
    if step == 0 {
        return Err(Error::InvalidRecipe(
            "first step must be a root cycle".into(),
        ));
    }
    if at >= n {
        return Err(Error::InvalidRecipe(format!(
            "step {step} attaches at vertex {at}, but only {n} exist"
        )));
    }
    Ok(())
}

/// Random cactus with at most `max_n` vertices: a root cycle, then cycles
/// and short paths attached at random vertices until no more fit. About
/// half the recipes attach cycles only.
pub fn random_cactus_recipe(max_n: usize, seed: u64) -> Result<CactusRecipe> {
    at_least("cactus order", max_n, 3)?;
    let mut r = rng(seed);
    let root = r.random_range(3..=max_n.min(7));
    let mut steps = vec![CactusStep::RootCycle { length: root }];
    let mut n = root;
    // half the recipes use cycles only, so minimum degree 2 is common
    let cycles_only = r.random_bool(0.5);
    let mut attempts = 0;
    while n < max_n && attempts < 16 {
        attempts += 1;
        let at = r.random_range(0..n);
        let room = max_n - n;
        if cycles_only && room < 2 {
            break;
        }
        if (cycles_only || r.random_bool(0.75)) && room >= 2 {
            let length = r.random_range(3..=(room + 1).min(7));
            steps.push(CactusStep::AttachCycle { at, length });
            n += length - 1;
        } else {
            let length = r.random_range(1..=room.min(2));
            steps.push(CactusStep::AttachPath { at, length });
            n += length;
        }
        if r.random_bool(0.15) {
            break;
        }
    }
    Ok(CactusRecipe::new(steps))
}

impl fmt::Display for CactusRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match step {
                CactusStep::RootCycle { length } => writeln!(f, "cycle {length}")?,
                CactusStep::AttachCycle { at, length } => {
                    writeln!(f, "attach-cycle {at} {length}")?
                }
                CactusStep::AttachPath { at, length } => writeln!(f, "attach-path {at} {length}")?,
            }
        }
        Ok(())
    }
}

/// One step per line: `cycle L`, `attach-cycle AT L`, `attach-path AT L`.
impl FromStr for CactusRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = vec![];
        for (lineno, line) in recipe_lines(s) {
            let words: Vec<&str> = line.split_whitespace().collect();
            let step = match words.as_slice() {
                ["cycle", l] => CactusStep::RootCycle {
                    length: parse_num(l, lineno)?,
                },
                ["attach-cycle", at, l] => CactusStep::AttachCycle {
                    at: parse_num(at, lineno)?,
                    length: parse_num(l, lineno)?,
                },
                ["attach-path", at, l] => CactusStep::AttachPath {
                    at: parse_num(at, lineno)?,
                    length: parse_num(l, lineno)?,
                },
                _ => {
                    return Err(Error::InvalidRecipe(format!(
                        "line {lineno}: unrecognised step {line:?}"
                    )))
                }
            };
            steps.push(step);
        }
        Ok(Self { steps })
    }
}

fn recipe_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(word: &str, lineno: usize) -> Result<usize> {
    word.parse().map_err(|_| {
        Error::InvalidRecipe(format!("line {lineno}: expected a number, got {word:?}"))
    })
}
