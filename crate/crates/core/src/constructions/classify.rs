use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{build_cograph, CographRecipe};
use crate::graph::{block_decomposition, enabling_vertices, universal_vertices, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cograph,
    Cactus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Flag(bool),
    Value(usize),
}

/// Structural verdicts about a graph from a recognized family. Only facts
/// that follow from the family's characterization are listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub family: Family,
    pub order: usize,
    pub verdicts: Vec<(&'static str, Verdict)>,
}

impl Classification {
    pub fn get(&self, name: &str) -> Option<Verdict> {
        self.verdicts
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        match self.get(name)? {
            Verdict::Flag(b) => Some(b),
            Verdict::Value(_) => None,
        }
    }

    pub fn value(&self, name: &str) -> Option<usize> {
        match self.get(name)? {
            Verdict::Value(v) => Some(v),
            Verdict::Flag(_) => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Flag(b) => write!(f, "{b}"),
            Verdict::Value(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={:?} n={}", self.family, self.order)?;
        for (k, v) in &self.verdicts {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Cograph from a twin recipe.
///
/// `mu-equals-mu-t` holds iff the graph has a universal vertex or no
/// enabling vertex. `mu` is `n` for complete graphs, `n − 1` when there is
/// a universal or enabling vertex and `n − 2` otherwise.
pub fn classify_cograph(recipe: &CographRecipe) -> Result<Classification> {
    let g = build_cograph(recipe)?;
    g.require_connected()?;
    let n = g.order();
    let universal = !universal_vertices(&g).is_empty();
    let enabling = if n < 2 {
        true
    } else {
        !enabling_vertices(&g)?.is_empty()
    };
    let mu = if g.is_complete() {
        n
    } else if universal || enabling {
        n - 1
    } else {
        n - 2
    };
    let equal = universal || !enabling;
    let mut verdicts = vec![
        ("universal-vertex", Verdict::Flag(universal)),
        ("enabling-vertex", Verdict::Flag(enabling)),
        ("mu-equals-mu-t", Verdict::Flag(equal)),
        ("mu", Verdict::Value(mu)),
    ];
    if equal {
        verdicts.push(("mu-t", Verdict::Value(mu)));
    }
    Ok(Classification {
        family: Family::Cograph,
        order: n,
        verdicts,
    })
}

/// Cactus graph given directly.
///
/// `mu-t-zero` holds iff the minimum degree is at least 2 and every
/// vertex of a 3- or 4-cycle block has degree at least 3.
pub fn classify_cactus(g: &Graph) -> Result<Classification> {
    g.require_connected()?;
    let blocks = block_decomposition(g)?;
    if !blocks.all_blocks_cycles_or_edges(g) {
        return Err(Error::NotCactus);
    }
    let min_degree = g.min_degree().unwrap_or(0);
    let short_cycles_ok = blocks
        .blocks
        .iter()
        .filter(|b| matches!(b.len(), 3 | 4))
        .all(|b| b.iter().all(|v| g.degree(v) >= 3));
    let zero = min_degree >= 2 && short_cycles_ok;
    Ok(Classification {
        family: Family::Cactus,
        order: g.order(),
        verdicts: vec![
            ("min-degree", Verdict::Value(min_degree)),
            ("mu-t-zero", Verdict::Flag(zero)),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_cactus, complete, cycle, CactusRecipe, CactusStep, CographStep};
    use crate::visibility::{mu_exact, mu_total_exact, SolveOptions};

    #[test]
    fn cograph_c4() {
        let disconnected = CographRecipe::new(vec![
            CographStep::Start,
            CographStep::FalseTwin(0),
            CographStep::TrueTwin(0),
        ]);
        assert!(classify_cograph(&disconnected).is_err());
        let c4 = CographRecipe::new(vec![
            CographStep::Start,
            CographStep::TrueTwin(0),
            CographStep::FalseTwin(0),
            CographStep::FalseTwin(1),
        ]);
        let c = classify_cograph(&c4).unwrap();
        assert_eq!(c.flag("universal-vertex"), Some(false));
        assert_eq!(c.flag("enabling-vertex"), Some(true));
        assert_eq!(c.flag("mu-equals-mu-t"), Some(false));
        assert_eq!(c.value("mu"), Some(3));
        assert_eq!(c.value("mu-t"), None);
        let g = build_cograph(&c4).unwrap();
        let opts = SolveOptions::default();
        assert_eq!(mu_exact(&g, &opts).unwrap().value, 3);
        assert_eq!(mu_total_exact(&g, &opts).unwrap().value, 2);
    }

    #[test]
    fn cactus_cycles() {
        let c = classify_cactus(&cycle(6).unwrap()).unwrap();
        assert_eq!(c.flag("mu-t-zero"), Some(true));
        let c = classify_cactus(&cycle(4).unwrap()).unwrap();
        assert_eq!(c.flag("mu-t-zero"), Some(false));
        assert!(matches!(
            classify_cactus(&complete(4).unwrap()),
            Err(Error::NotCactus)
        ));
    }

    #[test]
    fn triangles_sharing_vertices() {
        // three triangles hung on a central triangle
        let recipe = CactusRecipe::new(vec![
            CactusStep::RootCycle { length: 3 },
            CactusStep::AttachCycle { at: 0, length: 3 },
            CactusStep::AttachCycle { at: 1, length: 3 },
            CactusStep::AttachCycle { at: 2, length: 3 },
        ]);
        let g = build_cactus(&recipe).unwrap();
        let c = classify_cactus(&g).unwrap();
        assert_eq!(c.flag("mu-t-zero"), Some(false));
        let mt = mu_total_exact(&g, &SolveOptions::default()).unwrap().value;
        assert!(mt > 0);
    }
}
