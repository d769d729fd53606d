use std::fmt::Write as _;

use clap::{Args, ValueEnum};

use super::{Failure, SolverFlags, EXIT_OK, EXIT_VERIFY};
use crate::constructions::{
    block_graph_mu_set, block_prism_set, classify_cactus, classify_cograph, cycle_prism_mu,
    grid_extremal_set, hull_cover_upper_bound, product_tmv_set,
};
use crate::families::{
    build_cactus, build_cograph, cycle, path, random_block_graph, random_cactus_recipe,
    random_cograph_recipe, subdivided_star,
};
use crate::graph::Graph;
use crate::products::strong_product;
use crate::visibility::{
    mu_exact, mu_heuristic, mu_total_exact, solve, HeuristicOptions, SetKind, SolveOptions,
    SolveResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Experiment {
    CyclePrism,
    #[value(name = "grid-2d")]
    Grid2d,
    #[value(name = "grid-3d")]
    Grid3d,
    BlockPrism,
    CographAudit,
    CactusAudit,
    PrismOpenQuestion,
    /// Subdivided star times a path: product bound against local search.
    StarPath,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub(crate) enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum BaseFamily {
    Block,
    Cograph,
}

#[derive(Args, Debug)]
pub(crate) struct TableArgs {
    #[arg(long, value_enum)]
    experiment: Experiment,
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormat,
    /// Smallest order or path length.
    #[arg(long)]
    min: Option<usize>,
    /// Largest order or path length.
    #[arg(long)]
    max: Option<usize>,
    /// Number of random instances.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    #[arg(long, value_enum, default_value = "block")]
    family: BaseFamily,
    #[arg(long, default_value_t = 3)]
    legs: usize,
    #[arg(long, default_value_t = 3)]
    subdivisions: usize,
    #[arg(long, default_value_t = 5)]
    path_len: usize,
    /// Local-search moves for `star-path`.
    #[arg(long, default_value_t = 5_000)]
    iterations: u64,
    #[command(flatten)]
    solver: SolverFlags,
}

pub(crate) struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    /// Whether a `false` in the `match` column is a failure.
    asserting: bool,
}

impl Table {
    fn new(header: Vec<&'static str>, asserting: bool) -> Self {
        Self {
            header,
            rows: vec![],
            asserting,
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn failures(&self) -> usize {
        let Some(col) = self.header.iter().position(|&h| h == "match") else {
            return 0;
        };
        self.rows.iter().filter(|r| r[col] == "false").count()
    }

    fn render(&self, format: TableFormat) -> String {
        let mut out = String::new();
        match format {
            TableFormat::Csv => {
                writeln!(out, "{}", self.header.join(",")).unwrap();
                for r in &self.rows {
                    writeln!(out, "{}", r.join(",")).unwrap();
                }
            }
            TableFormat::Text => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|c| {
                        self.rows
                            .iter()
                            .map(|r| r[c].len())
                            .chain([self.header[c].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:>w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(self.header.clone())).unwrap();
                for r in &self.rows {
                    writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
                }
            }
        }
        out
    }
}

pub(crate) fn cmd_table(a: TableArgs) -> Result<i32, Failure> {
    let options = a.solver.options()?;
    let table = build(&a, &options)?;
    print!("{}", table.render(a.format));
    Ok(if table.asserting && table.failures() > 0 {
        EXIT_VERIFY
    } else {
        EXIT_OK
    })
}

/// Solver value, or `>=K` when a budget ran out.
fn shown(r: &SolveResult) -> String {
    if r.exact {
        r.value.to_string()
    } else {
        format!(">={}", r.value)
    }
}

/// `true`/`false` when the solver finished, `unknown` otherwise.
fn matches(r: &SolveResult, expected: usize) -> String {
    if r.exact {
        (r.value == expected).to_string()
    } else {
        "unknown".into()
    }
}

fn prism(g: &Graph) -> Result<Graph, Failure> {
    Ok(strong_product(g, &path(2)?)?.0)
}

fn build(a: &TableArgs, options: &SolveOptions) -> Result<Table, Failure> {
    let s = |x: usize| x.to_string();
    Ok(match a.experiment {
        Experiment::CyclePrism => {
            let mut t = Table::new(vec!["n", "formula", "solver", "match"], true);
            for n in a.min.unwrap_or(3)..=a.max.unwrap_or(8) {
                let formula = cycle_prism_mu(n)?;
                let r = mu_exact(&prism(&cycle(n)?)?, options)?;
                t.push(vec![s(n), s(formula), shown(&r), matches(&r, formula)]);
            }
            t
        }
        Experiment::Grid2d => {
            let mut t = Table::new(
                vec![
                    "m",
                    "n",
                    "formula",
                    "construction",
                    "hull_bound",
                    "solver",
                    "match",
                ],
                true,
            );
            let (lo, hi) = (a.min.unwrap_or(3), a.max.unwrap_or(5));
            for m in lo..=hi {
                for n in lo..=hi {
                    let formula = 2 * m + 2 * n - 4;
                    let (c, cover) = grid_extremal_set(&[m, n])?;
                    let bound = hull_cover_upper_bound(&c.graph, &cover.parts())?;
                    let r = mu_exact(&c.graph, options)?;
                    let ok = c.certificate.size == formula && bound == formula;
                    let m_flag = if ok {
                        matches(&r, formula)
                    } else {
                        "false".into()
                    };
                    t.push(vec![
                        s(m),
                        s(n),
                        s(formula),
                        s(c.certificate.size),
                        s(bound),
                        shown(&r),
                        m_flag,
                    ]);
                }
            }
            t
        }
        Experiment::Grid3d => {
            let dims = if a.dims.is_empty() {
                vec![3, 3, 3]
            } else {
                a.dims.clone()
            };
            let mut t = Table::new(
                vec!["dims", "formula", "construction", "solver", "match"],
                true,
            );
            let formula = dims.iter().product::<usize>()
                - dims.iter().map(|d| d.saturating_sub(2)).product::<usize>();
            let (c, _) = grid_extremal_set(&dims)?;
            let r = mu_exact(&c.graph, options)?;
            let label = dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("x");
            let m_flag = if c.certificate.size == formula {
                matches(&r, formula)
            } else {
                "false".into()
            };
            t.push(vec![
                label,
                s(formula),
                s(c.certificate.size),
                shown(&r),
                m_flag,
            ]);
            t
        }
        Experiment::BlockPrism => {
            let mut t = Table::new(
                vec![
                    "seed",
                    "n",
                    "mu",
                    "formula",
                    "construction",
                    "solver",
                    "match",
                ],
                true,
            );
            for (seed, n) in random_orders(a, 20, 4, 9) {
                let g = random_block_graph(n, seed)?;
                let mu = block_graph_mu_set(&g)?.certificate.size;
                let formula = n + mu;
                let c = block_prism_set(&g)?;
                let r = mu_exact(&prism(&g)?, options)?;
                let m_flag = if c.certificate.size == formula {
                    matches(&r, formula)
                } else {
                    "false".into()
                };
                t.push(vec![
                    s(seed as usize),
                    s(n),
                    s(mu),
                    s(formula),
                    s(c.certificate.size),
                    shown(&r),
                    m_flag,
                ]);
            }
            t
        }
        Experiment::CographAudit => {
            let mut t = Table::new(
                vec![
                    "seed",
                    "n",
                    "universal",
                    "enabling",
                    "mu_eq_mu_t",
                    "mu_claim",
                    "mu",
                    "mu_t",
                    "match",
                ],
                true,
            );
            for (seed, n) in random_orders(a, 50, 4, 10) {
                let recipe = random_cograph_recipe(n, seed)?;
                let g = build_cograph(&recipe)?;
                let c = classify_cograph(&recipe)?;
                let mu = mu_exact(&g, options)?;
                let mt = mu_total_exact(&g, options)?;
                let claim = c.value("mu").unwrap_or(0);
                let verdict = c.flag("mu-equals-mu-t").unwrap_or(false);
                let m_flag = if mu.exact && mt.exact {
                    (claim == mu.value && verdict == (mu.value == mt.value)).to_string()
                } else {
                    "unknown".into()
                };
                t.push(vec![
                    s(seed as usize),
                    s(n),
                    c.flag("universal-vertex").unwrap_or(false).to_string(),
                    c.flag("enabling-vertex").unwrap_or(false).to_string(),
                    verdict.to_string(),
                    s(claim),
                    shown(&mu),
                    shown(&mt),
                    m_flag,
                ]);
            }
            t
        }
        Experiment::CactusAudit => {
            let mut t = Table::new(
                vec!["seed", "n", "min_degree", "mu_t_zero", "mu_t", "match"],
                true,
            );
            let max_n = a.max.unwrap_or(12);
            for i in 0..a.count.unwrap_or(50) {
                let seed = a.seed + i as u64;
                let g = build_cactus(&random_cactus_recipe(max_n, seed)?)?;
                let c = classify_cactus(&g)?;
                let verdict = c.flag("mu-t-zero").unwrap_or(false);
                let mt = mu_total_exact(&g, options)?;
                let m_flag = if mt.exact {
                    (verdict == (mt.value == 0)).to_string()
                } else {
                    "unknown".into()
                };
                t.push(vec![
                    s(seed as usize),
                    s(g.order()),
                    s(c.value("min-degree").unwrap_or(0)),
                    verdict.to_string(),
                    shown(&mt),
                    m_flag,
                ]);
            }
            t
        }
        Experiment::PrismOpenQuestion => {
            let mut t = Table::new(
                vec![
                    "family",
                    "seed",
                    "n",
                    "mu",
                    "n_plus_mu",
                    "prism_mu",
                    "equal",
                ],
                false,
            );
            for (seed, n) in random_orders(a, 20, 4, 10) {
                let (g, name) = match a.family {
                    BaseFamily::Block => (random_block_graph(n, seed)?, "block"),
                    BaseFamily::Cograph => {
                        let recipe = random_cograph_recipe(n, seed)?;
                        if !classify_cograph(&recipe)?
                            .flag("mu-equals-mu-t")
                            .unwrap_or(false)
                        {
                            continue;
                        }
                        (build_cograph(&recipe)?, "cograph")
                    }
                };
                let mu = mu_exact(&g, options)?;
                let pm = mu_exact(&prism(&g)?, options)?;
                let equal = if mu.exact && pm.exact {
                    (pm.value == n + mu.value).to_string()
                } else {
                    "unknown".into()
                };
                t.push(vec![
                    name.into(),
                    s(seed as usize),
                    s(n),
                    shown(&mu),
                    s(n + mu.value),
                    shown(&pm),
                    equal,
                ]);
            }
            t
        }
        Experiment::StarPath => {
            let mut t = Table::new(
                vec![
                    "legs",
                    "subdivisions",
                    "path",
                    "n",
                    "product_bound",
                    "local_search",
                    "seed",
                    "exceeds",
                ],
                false,
            );
            let tree = subdivided_star(a.legs, a.subdivisions)?;
            let p = path(a.path_len)?;
            let s_t = solve(&tree, SetKind::FeasibleTmv, options)?.certificate.set;
            let s_p = solve(&p, SetKind::FeasibleTmv, options)?.certificate.set;
            let c = product_tmv_set(&tree, &s_t, &p, &s_p)?;
            let h = mu_heuristic(
                &c.graph,
                &HeuristicOptions {
                    seed: a.seed,
                    iterations: a.iterations,
                    time_limit: options.time_budget,
                    ..Default::default()
                },
            )?;
            t.push(vec![
                s(a.legs),
                s(a.subdivisions),
                s(a.path_len),
                s(c.graph.order()),
                s(c.certificate.size),
                s(h.size),
                s(a.seed as usize),
                (h.size > c.certificate.size).to_string(),
            ]);
            t
        }
    })
}

/// `(seed, order)` pairs: seeds count up from `--seed`, orders cycle
/// through `--min..=--max`.
fn random_orders(a: &TableArgs, count: usize, lo: usize, hi: usize) -> Vec<(u64, usize)> {
    let lo = a.min.unwrap_or(lo);
    let hi = a.max.unwrap_or(hi).max(lo);
    let span = hi - lo + 1;
    (0..a.count.unwrap_or(count))
        .map(|i| (a.seed + i as u64, lo + i % span))
        .collect()
}
