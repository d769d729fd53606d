//! Text edge lists, JSON certificate files and DOT export.
//!
//! Edge-list layout:
//!
//! ```text
//! # optional comments
//! # strong-product orders=3,2
//! 6 11
//! 0 1
//! ...
//! ```
//!
//! The `strong-product` comment is written for product graphs and lets
//! later commands decode vertex ids back into tuples.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph, VertexSet};
use crate::products::ProductIndex;
use crate::visibility::{Certificate, SetKind};

const PRODUCT_TAG: &str = "strong-product orders=";

/// A parsed edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    pub product: Option<ProductIndex>,
    pub comments: Vec<String>,
}

impl EdgeListFile {
    pub fn new(graph: Graph) -> Self {
        Self {
            graph,
            product: None,
            comments: vec![],
        }
    }

    pub fn with_product(graph: Graph, index: ProductIndex) -> Self {
        Self {
            graph,
            product: Some(index),
            comments: vec![],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut comments = vec![];
        let mut product = None;
        let mut header: Option<(usize, usize)> = None;
        let mut edges = vec![];
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                let c = c.trim();
                if let Some(list) = c.strip_prefix(PRODUCT_TAG) {
                    let orders = list
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|e| parse_err(line_no, format!("bad product orders: {e}")))?;
                    product = Some(ProductIndex::new(&orders)?);
                } else {
                    comments.push(c.to_string());
                }
                continue;
            }
            let (a, b) = two_numbers(line, line_no)?;
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(0, "missing \"n m\" header".into()))?;
        if edges.len() != m {
            return Err(parse_err(
                0,
                format!("header announces {m} edges, found {}", edges.len()),
            ));
        }
        let graph = Graph::new(n, &edges)?;
        if graph.size() != m {
            return Err(parse_err(0, "duplicate edges".into()));
        }
        if let Some(p) = &product {
            if p.len() != n {
                return Err(parse_err(
                    0,
                    format!("product orders give {} vertices, header {n}", p.len()),
                ));
            }
        }
        Ok(Self {
            graph,
            product,
            comments,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            writeln!(out, "# {c}").unwrap();
        }
        if let Some(p) = &self.product {
            let orders: Vec<String> = p.factor_orders().iter().map(usize::to_string).collect();
            writeln!(out, "# {PRODUCT_TAG}{}", orders.join(",")).unwrap();
        }
        writeln!(out, "{} {}", self.graph.order(), self.graph.size()).unwrap();
        for (u, v) in self.graph.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

fn two_numbers(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| parse_err(line_no, "expected two integers".into()))?
            .parse()
            .map_err(|e| parse_err(line_no, format!("{e}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line_no, "expected two integers".into()));
    }
    Ok(pair)
}

/// Where the graph of a certificate lives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphRef {
    File(String),
    Inline(InlineGraph),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InlineGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product_orders: Option<Vec<usize>>,
}

impl InlineGraph {
    pub fn from_graph(g: &Graph, index: Option<&ProductIndex>) -> Self {
        Self {
            n: g.order(),
            edges: g.edges(),
            product_orders: index.map(|p| p.factor_orders().to_vec()),
        }
    }

    pub fn to_file(&self) -> Result<EdgeListFile> {
        let graph = Graph::new(self.n, &self.edges)?;
        let product = self
            .product_orders
            .as_deref()
            .map(ProductIndex::new)
            .transpose()?;
        Ok(EdgeListFile {
            graph,
            product,
            comments: vec![],
        })
    }
}

/// How the set was obtained.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverMeta {
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_budget_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    /// Closed-form size for certificates produced by a construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<usize>,
}

/// Serialized certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub graph: GraphRef,
    pub kind: SetKind,
    pub set: Vec<usize>,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product_tuples: Option<Vec<Vec<usize>>>,
    pub verified: bool,
    #[serde(default)]
    pub solver: SolverMeta,
}

impl CertificateFile {
    pub fn new(
        graph: GraphRef,
        cert: &Certificate,
        index: Option<&ProductIndex>,
        solver: SolverMeta,
    ) -> Self {
        Self {
            graph,
            kind: cert.kind,
            set: cert.set.to_vec(),
            size: cert.size,
            product_tuples: index.map(|p| cert.set.iter().map(|v| p.decode(v)).collect()),
            verified: cert.verified,
            solver,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
    }

    /// Re-runs the checker for the claimed kind on `g`. The stored
    /// `verified` flag is ignored.
    pub fn recheck(&self, g: &Graph) -> Result<Certificate> {
        let n = g.order();
        for &v in &self.set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let set = VertexSet::from_iter_with_capacity(n, self.set.iter().copied());
        if set.len() != self.set.len() || set.len() != self.size {
            return Ok(Certificate {
                set,
                kind: self.kind,
                size: set.len(),
                verified: false,
            });
        }
        let dm = all_pairs_distances(g);
        Certificate::check(g, &dm, set, self.kind)
    }
}

/// Graphviz rendering. Members of `highlight` get a fill colour and a
/// `highlight=true` attribute; product graphs are labelled by tuples.
pub fn to_dot(g: &Graph, product: Option<&ProductIndex>, highlight: Option<&VertexSet>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let label = match product {
            Some(p) => {
                let t: Vec<String> = p.decode(v).iter().map(usize::to_string).collect();
                format!("({})", t.join(","))
            }
            None => v.to_string(),
        };
        let marked = highlight.is_some_and(|h| h.contains(v));
        if marked {
            writeln!(
                out,
                "  {v} [label=\"{label}\", style=filled, fillcolor=\"#e4572e\", highlight=true];"
            )
        } else {
            writeln!(out, "  {v} [label=\"{label}\"];")
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
