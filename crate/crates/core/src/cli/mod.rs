//! The `mutvis` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 budget exceeded.

mod table;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{
    block_graph_mu_set, block_prism_set, grid_extremal_set, multiway_tmv_set,
    prism_lower_bound_set, product_mv_set, product_tmv_set, universal_product_tmv, Construction,
};
use crate::error::Error;
use crate::families::{generate, CactusRecipe, CographRecipe, FamilySpec};
use crate::format::{to_dot, CertificateFile, EdgeListFile, GraphRef, InlineGraph, SolverMeta};
use crate::graph::{Graph, VertexSet};
use crate::products::strong_product_multi;
use crate::visibility::{
    brute_force_mu, mu_heuristic, solve, Bound, HeuristicOptions, SetKind, SolveOptions,
    SolveResult, DEFAULT_ORACLE_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "mutvis",
    version,
    about = "Mutual-visibility sets in graphs and strong products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Strong product of two or more edge-list files.
    Product(ProductArgs),
    /// Exact (or heuristic) mu / mu_t with a certificate.
    Mu(MuArgs),
    /// Re-verify a certificate file.
    Check(CheckArgs),
    /// Build a certified set from a named construction.
    Construct(ConstructArgs),
    /// Run a table experiment.
    Table(table::TableArgs),
    /// Export a graph, optionally with a highlighted certificate.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    CompleteSplit,
    Star,
    SubdividedStar,
    RandomTree,
    RandomConnected,
    RandomBlock,
    Cograph,
    RandomCograph,
    Cactus,
    RandomCactus,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long)]
    independent: Option<usize>,
    #[arg(long)]
    clique: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long)]
    legs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    subdivisions: usize,
    /// Chords added on top of a random tree by `random-connected`.
    #[arg(long, default_value_t = 0)]
    extra_edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Recipe file for `cograph` and `cactus`.
    #[arg(long)]
    recipe: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
    factors: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Exact,
    Brute,
    Heuristic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundName {
    Trivial,
    Candidates,
}

#[derive(Args, Debug, Clone)]
struct SolverFlags {
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    node_budget: Option<u64>,
    /// Seconds.
    #[arg(long)]
    time_budget: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
}

impl SolverFlags {
    fn options(&self) -> Result<SolveOptions, Failure> {
        let time_budget = self
            .time_budget
            .map(|s| {
                Duration::try_from_secs_f64(s)
                    .map_err(|e| Failure::usage(format!("--time-budget: {e}")))
            })
            .transpose()?;
        Ok(SolveOptions {
            node_budget: self.node_budget,
            time_budget,
            oracle_limit: self.oracle_limit,
            threads: self.threads.max(1),
            bound: Bound::Trivial,
        })
    }

    fn meta(&self, method: &str) -> SolverMeta {
        SolverMeta {
            method: method.into(),
            node_budget: self.node_budget,
            time_budget_ms: self.time_budget.map(|s| (s * 1000.0) as u64),
            threads: Some(self.threads.max(1)),
            ..Default::default()
        }
    }
}

#[derive(Args, Debug)]
struct MuArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "mv")]
    kind: SetKind,
    #[arg(long, value_enum, default_value = "exact")]
    method: Method,
    #[arg(long, value_enum, default_value = "trivial")]
    bound: BoundName,
    #[command(flatten)]
    solver: SolverFlags,
    /// Heuristic seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Heuristic moves.
    #[arg(long, default_value_t = 20_000)]
    iterations: u64,
    /// Certificate output file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Defaults to the graph referenced by the certificate.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructionId {
    #[value(name = "thm4.1")]
    Thm41,
    #[value(name = "cor4.2")]
    Cor42,
    #[value(name = "thm4.4")]
    Thm44,
    #[value(name = "cor4.5")]
    Cor45,
    #[value(name = "thm4.6")]
    Thm46,
    #[value(name = "thm5.1")]
    Thm51,
    #[value(name = "thm5.4")]
    Thm54,
    #[value(name = "blockmu")]
    BlockMu,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    theorem: ConstructionId,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    factors: Vec<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    /// One set per factor, e.g. `0,2;0,2`. Computed when omitted.
    #[arg(long)]
    sets: Option<String>,
    #[command(flatten)]
    solver: SolverFlags,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Dot,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "dot")]
    format: ExportFormat,
    /// Certificate whose set is highlighted.
    #[arg(long)]
    highlight: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Error carrying its exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::VerificationFailed(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Product(a) => cmd_product(a),
        Command::Mu(a) => cmd_mu(a),
        Command::Check(a) => cmd_check(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Table(a) => table::cmd_table(a),
        Command::Export(a) => cmd_export(a),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<EdgeListFile, Failure> {
    EdgeListFile::parse(&read(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("missing --{flag}")))
}

fn cmd_gen(a: GenArgs) -> Result<i32, Failure> {
    let spec = match a.family {
        FamilyName::Path => FamilySpec::Path { n: need(a.n, "n")? },
        FamilyName::Cycle => FamilySpec::Cycle { n: need(a.n, "n")? },
        FamilyName::Complete => FamilySpec::Complete { n: need(a.n, "n")? },
        FamilyName::CompleteMultipartite => FamilySpec::CompleteMultipartite { parts: a.parts },
        FamilyName::CompleteSplit => FamilySpec::CompleteSplit {
            independent: need(a.independent, "independent")?,
            clique: need(a.clique, "clique")?,
        },
        FamilyName::Star => FamilySpec::Star {
            leaves: need(a.leaves.or(a.n), "leaves")?,
        },
        FamilyName::SubdividedStar => FamilySpec::SubdividedStar {
            legs: need(a.legs, "legs")?,
            subdivisions: a.subdivisions,
        },
        FamilyName::RandomTree => FamilySpec::RandomTree {
            n: need(a.n, "n")?,
            seed: a.seed,
        },
        FamilyName::RandomConnected => FamilySpec::RandomConnected {
            n: need(a.n, "n")?,
            extra_edges: a.extra_edges,
            seed: a.seed,
        },
        FamilyName::RandomBlock => FamilySpec::RandomBlockGraph {
            n: need(a.n, "n")?,
            seed: a.seed,
        },
        FamilyName::RandomCograph => FamilySpec::RandomCograph {
            n: need(a.n, "n")?,
            seed: a.seed,
        },
        FamilyName::RandomCactus => FamilySpec::RandomCactus {
            max_n: need(a.n, "n")?,
            seed: a.seed,
        },
        FamilyName::Cograph => {
            let text = read(&need(a.recipe, "recipe")?)?;
            FamilySpec::Cograph(text.parse::<CographRecipe>()?)
        }
        FamilyName::Cactus => {
            let text = read(&need(a.recipe, "recipe")?)?;
            FamilySpec::Cactus(text.parse::<CactusRecipe>()?)
        }
    };
    let g = generate(&spec)?;
    let text = EdgeListFile::new(g.clone()).to_text();
    if let Some(out) = &a.out {
        write_or_print(Some(out), &text)?;
        println!("n={} m={}", g.order(), g.size());
    } else {
        print!("{text}");
    }
    Ok(EXIT_OK)
}

fn cmd_product(a: ProductArgs) -> Result<i32, Failure> {
    if a.factors.len() < 2 {
        return Err(Failure::usage("product needs at least two --factors"));
    }
    let files = a
        .factors
        .iter()
        .map(|p| load_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    let graphs: Vec<&Graph> = files.iter().map(|f| &f.graph).collect();
    let (g, index) = strong_product_multi(&graphs)?;
    let (n, m) = (g.order(), g.size());
    let text = EdgeListFile::with_product(g, index.clone()).to_text();
    let orders: Vec<String> = index.factor_orders().iter().map(usize::to_string).collect();
    if let Some(out) = &a.out {
        write_or_print(Some(out), &text)?;
        println!("n={n} m={m}");
        println!(
            "index: tuple (x_1,...,x_k) -> row-major id, first factor slowest, orders {}",
            orders.join(",")
        );
    } else {
        print!("{text}");
    }
    Ok(EXIT_OK)
}

fn seconds(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn cmd_mu(a: MuArgs) -> Result<i32, Failure> {
    let file = load_graph(&a.graph)?;
    let g = &file.graph;
    let mut options = a.solver.options()?;
    options.bound = match a.bound {
        BoundName::Trivial => Bound::Trivial,
        BoundName::Candidates => Bound::Candidates,
    };
    let (result, mut meta) = match a.method {
        Method::Exact => (
            solve(g, a.kind, &options)?,
            a.solver.meta("branch-and-bound"),
        ),
        Method::Brute => (
            brute_force_mu(g, a.kind, a.solver.oracle_limit)?,
            a.solver.meta("brute-force"),
        ),
        Method::Heuristic => {
            if a.kind != SetKind::Mv {
                return Err(Failure::usage("the heuristic only searches mv sets"));
            }
            let start = std::time::Instant::now();
            let h = HeuristicOptions {
                iterations: a.iterations,
                time_limit: options.time_budget,
                seed: a.seed,
                ..Default::default()
            };
            let cert = mu_heuristic(g, &h)?;
            let mut meta = a.solver.meta("tabu-search");
            meta.seed = Some(a.seed);
            let result = SolveResult {
                value: cert.size,
                certificate: cert,
                nodes_explored: a.iterations,
                elapsed: start.elapsed(),
                exact: false,
            };
            (result, meta)
        }
    };
    meta.nodes = Some(result.nodes_explored);
    meta.elapsed_ms = Some(result.elapsed.as_secs_f64() * 1000.0);
    meta.exact = Some(result.exact);
    println!(
        "value={} nodes={} time={}{}",
        result.value,
        result.nodes_explored,
        seconds(result.elapsed),
        if result.exact { "" } else { " exact=false" }
    );
    if let Some(out) = &a.out {
        let cert = CertificateFile::new(
            GraphRef::File(a.graph.display().to_string()),
            &result.certificate,
            file.product.as_ref(),
            meta,
        );
        write_or_print(Some(out), &cert.to_json())?;
    }
    let budget_hit = !result.exact && matches!(a.method, Method::Exact);
    Ok(if budget_hit { EXIT_BUDGET } else { EXIT_OK })
}

fn resolve_graph(reference: &GraphRef, cert_path: &Path) -> Result<EdgeListFile, Failure> {
    match reference {
        GraphRef::Inline(inline) => Ok(inline.to_file()?),
        GraphRef::File(name) => {
            let direct = PathBuf::from(name);
            if direct.exists() {
                return load_graph(&direct);
            }
            let sibling = cert_path.parent().unwrap_or(Path::new(".")).join(name);
            load_graph(&sibling)
        }
    }
}

fn cmd_check(a: CheckArgs) -> Result<i32, Failure> {
    let cert = CertificateFile::from_json(&read(&a.cert)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", a.cert.display())))?;
    let file = match &a.graph {
        Some(p) => load_graph(p)?,
        None => resolve_graph(&cert.graph, &a.cert)?,
    };
    let checked = cert.recheck(&file.graph)?;
    println!(
        "kind={} size={} verified={}",
        checked.kind,
        cert.set.len(),
        checked.verified
    );
    Ok(if checked.verified {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

/// Parses `0,2;1` into one vertex set per factor.
fn parse_sets(text: &str, graphs: &[&Graph]) -> Result<Vec<VertexSet>, Failure> {
    let groups: Vec<&str> = text.split(';').collect();
    if groups.len() != graphs.len() {
        return Err(Failure::usage(format!(
            "--sets has {} groups for {} factors",
            groups.len(),
            graphs.len()
        )));
    }
    groups
        .iter()
        .zip(graphs)
        .map(|(grp, g)| {
            let mut set = VertexSet::empty(g.order());
            for tok in grp.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let v: usize = tok
                    .parse()
                    .map_err(|e| Failure::usage(format!("--sets: {tok:?}: {e}")))?;
                if v >= g.order() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: g.order(),
                    }
                    .into());
                }
                set.insert(v);
            }
            Ok(set)
        })
        .collect()
}

/// Optimal set of `kind` for each factor, used when `--sets` is omitted.
fn canonical_sets(
    graphs: &[&Graph],
    kind: SetKind,
    options: &SolveOptions,
) -> Result<Vec<VertexSet>, Failure> {
    graphs
        .iter()
        .map(|g| {
            let r = solve(g, kind, options)?;
            if !r.exact {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    message: "factor set search ran out of budget".into(),
                });
            }
            Ok(r.certificate.set)
        })
        .collect()
}

fn cmd_construct(a: ConstructArgs) -> Result<i32, Failure> {
    let options = a.solver.options()?;
    let factor_files = a
        .factors
        .iter()
        .map(|p| load_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    let factors: Vec<&Graph> = factor_files.iter().map(|f| &f.graph).collect();
    let single =
        || -> Result<EdgeListFile, Failure> { load_graph(&need(a.graph.clone(), "graph")?) };
    let sets_for = |kind: SetKind| -> Result<Vec<VertexSet>, Failure> {
        match &a.sets {
            Some(text) => parse_sets(text, &factors),
            None => canonical_sets(&factors, kind, &options),
        }
    };
    let need_two = || -> Result<(), Failure> {
        if factors.len() == 2 {
            Ok(())
        } else {
            Err(Failure::usage(
                "this construction takes exactly two --factors",
            ))
        }
    };

    let construction: Construction = match a.theorem {
        ConstructionId::Thm41 => {
            need_two()?;
            let sets = sets_for(SetKind::FeasibleTmv)?;
            product_tmv_set(factors[0], &sets[0], factors[1], &sets[1])?
        }
        ConstructionId::Cor42 => {
            let sets = sets_for(SetKind::FeasibleTmv)?;
            multiway_tmv_set(&factors, &sets)?
        }
        ConstructionId::Thm44 => grid_extremal_set(&a.dims)?.0,
        ConstructionId::Cor45 => universal_product_tmv(&factors)?,
        ConstructionId::Thm46 => {
            need_two()?;
            let sets = sets_for(SetKind::Mv)?;
            product_mv_set(factors[0], &sets[0], factors[1], &sets[1])?
        }
        ConstructionId::Thm51 => prism_lower_bound_set(&single()?.graph, &options)?,
        ConstructionId::Thm54 => block_prism_set(&single()?.graph)?,
        ConstructionId::BlockMu => block_graph_mu_set(&single()?.graph)?,
    };

    let c = &construction.certificate;
    println!(
        "size={} formula={} kind={} verified={}",
        c.size, construction.formula, c.kind, c.verified
    );
    if let Some(out) = &a.out {
        let mut meta = a.solver.meta("construction");
        meta.formula = Some(construction.formula);
        let graph = GraphRef::Inline(InlineGraph::from_graph(
            &construction.graph,
            construction.index.as_ref(),
        ));
        let file = CertificateFile::new(graph, c, construction.index.as_ref(), meta);
        write_or_print(Some(out), &file.to_json())?;
    }
    Ok(EXIT_OK)
}

fn cmd_export(a: ExportArgs) -> Result<i32, Failure> {
    let ExportFormat::Dot = a.format;
    let file = load_graph(&a.graph)?;
    let highlight = match &a.highlight {
        Some(p) => {
            let cert = CertificateFile::from_json(&read(p)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            let n = file.graph.order();
            if let Some(&v) = cert.set.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n }.into());
            }
            Some(VertexSet::from_iter_with_capacity(
                n,
                cert.set.iter().copied(),
            ))
        }
        None => None,
    };
    let dot = to_dot(&file.graph, file.product.as_ref(), highlight.as_ref());
    write_or_print(a.out.as_deref(), &dot)?;
    Ok(EXIT_OK)
}
