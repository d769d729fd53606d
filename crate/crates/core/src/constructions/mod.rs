//! Certified set builders and family classifiers.
//!
//! Every builder checks its hypotheses first and refuses inputs that do
//! not meet them. Every set it emits has been re-verified by the matching
//! checker on the constructed graph, so a returned [`Construction`] always
//! carries `certificate.verified == true`.

mod classify;
mod grid;
mod prism;
mod product_sets;

pub use classify::{classify_cactus, classify_cograph, Classification, Family, Verdict};
pub use grid::{grid_extremal_set, hull_cover_caps, hull_cover_upper_bound, GridDiagonalCover};
pub use prism::{
    block_graph_mu_set, block_prism_set, cycle_prism_mu, prism_layer_set, prism_lower_bound_set,
};
pub use product_sets::{
    multiway_tmv_set, prism_tmv_bound_set, product_mv_set, product_tmv_set, universal_product_tmv,
};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph, VertexSet};
use crate::products::ProductIndex;
use crate::visibility::{Certificate, SetKind};

/// A verified set on a constructed graph, with the size the underlying
/// closed form predicts.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    /// Present when `graph` is a strong product.
    pub index: Option<ProductIndex>,
    pub certificate: Certificate,
    pub formula: usize,
}

impl Construction {
    fn verify(
        graph: Graph,
        index: Option<ProductIndex>,
        set: VertexSet,
        kind: SetKind,
        formula: usize,
    ) -> Result<Self> {
        let dm = all_pairs_distances(&graph);
        let certificate = Certificate::verified(&graph, &dm, set, kind)?;
        if certificate.size != formula {
            return Err(Error::VerificationFailed(format!(
                "constructed set has size {}, closed form gives {formula}",
                certificate.size
            )));
        }
        Ok(Self {
            graph,
            index,
            certificate,
            formula,
        })
    }

    /// Decoded factor tuples of the certificate's members, if the graph is
    /// a product.
    pub fn tuples(&self) -> Option<Vec<Vec<usize>>> {
        let index = self.index.as_ref()?;
        Some(
            self.certificate
                .set
                .iter()
                .map(|v| index.decode(v))
                .collect(),
        )
    }
}

fn require_nontrivial(g: &Graph, which: &str) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Hypothesis(format!(
            "{which} must have at least two vertices"
        )));
    }
    g.require_connected()
        .map_err(|_| Error::Hypothesis(format!("{which} must be connected")))
}
