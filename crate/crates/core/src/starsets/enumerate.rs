use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{build_tableau, classify, initial_star_set, pivot, MainClassification, StarSet, Tableau};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::graphio::{Graph, VertexSet};
use crate::spectral::multiplicity;

/// Every λ-star set found, each with its main vertices, sorted by vertex set.
#[derive(Clone, Debug, PartialEq)]
pub struct StarSetCatalog {
    pub lambda: Rational,
    pub k_lambda: usize,
    pub items: Vec<MainClassification>,
    /// False when enumeration stopped at the cap.
    pub complete: bool,
}

impl StarSetCatalog {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn star_sets(&self) -> Vec<VertexSet> {
        self.items.iter().map(|i| i.star_set.star.clone()).collect()
    }

    pub fn get(&self, x: &VertexSet) -> Option<&MainClassification> {
        self.items.iter().find(|i| &i.star_set.star == x)
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::IncompleteCatalog)
        }
    }
}

/// `C(n, k)`, saturating. No graph has more λ-star sets than this.
pub fn default_cap(g: &Graph, lambda: &Rational) -> usize {
    let n = g.order() as u128;
    let k = multiplicity(g, lambda).min(g.order()) as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul(n - i) / (i + 1);
    }
    usize::try_from(c).unwrap_or(usize::MAX).max(1)
}

/// All λ-star sets, by breadth-first search over single simplex pivots from
/// the initial star set. `CapExceeded` if more than `cap` exist.
pub fn enumerate_star_sets(g: &Graph, lambda: &Rational, cap: usize) -> Result<StarSetCatalog> {
    let seed = initial_star_set(g, lambda)?;
    search(g, lambda, &seed.star, cap, true)
}

/// As [`enumerate_star_sets`], starting from a caller-chosen star set.
pub fn enumerate_from(g: &Graph, lambda: &Rational, seed: &VertexSet, cap: usize) -> Result<StarSetCatalog> {
    StarSet::new(g, lambda, seed.clone())?;
    search(g, lambda, seed, cap, true)
}

/// Stops at `cap` star sets instead of failing; the catalog is then marked
/// incomplete.
pub fn enumerate_partial(g: &Graph, lambda: &Rational, cap: usize) -> Result<StarSetCatalog> {
    let seed = initial_star_set(g, lambda)?;
    search(g, lambda, &seed.star, cap, false)
}

fn search(g: &Graph, lambda: &Rational, seed: &VertexSet, cap: usize, strict: bool) -> Result<StarSetCatalog> {
    if cap == 0 {
        return Err(Error::InvalidInput("enumeration cap must be at least 1".into()));
    }
    let mut seen: BTreeSet<VertexSet> = BTreeSet::from([seed.clone()]);
    let mut items = Vec::new();
    let mut frontier = vec![build_tableau(g, lambda, seed)?];
    let mut complete = true;
    'bfs: while !frontier.is_empty() {
        // Tableaux of one level are independent; results are merged in
        // frontier order so the outcome does not depend on scheduling.
        let expanded: Vec<(MainClassification, Vec<(usize, usize)>)> =
            frontier.par_iter().map(|t| (classify(t), t.legal_pivots())).collect();
        // only sets not seen before get a tableau, pivoted from their parent
        let mut moves = Vec::new();
        for (i, (class, pivots)) in expanded.into_iter().enumerate() {
            let x = class.star_set.star.clone();
            items.push(class);
            for (u, v) in pivots {
                let y = x.exchange(v, u);
                if seen.contains(&y) {
                    continue;
                }
                if seen.len() == cap {
                    if strict {
                        return Err(Error::CapExceeded { cap });
                    }
                    complete = false;
                    break 'bfs;
                }
                seen.insert(y);
                moves.push((i, u, v));
            }
        }
        let next_frontier: Vec<Tableau> = moves
            .par_iter()
            .map(|&(i, u, v)| pivot(&frontier[i], u, v).expect("legal pivots are non-zero"))
            .collect();
        frontier = next_frontier;
    }
    if !complete {
        // sets discovered but not yet expanded still belong in the catalog
        let listed: BTreeSet<VertexSet> = items.iter().map(|i| i.star_set.star.clone()).collect();
        for x in seen.iter().filter(|x| !listed.contains(*x)) {
            items.push(classify(&build_tableau(g, lambda, x)?));
        }
    }
    items.sort_by(|a, b| a.star_set.star.cmp(&b.star_set.star));
    Ok(StarSetCatalog {
        lambda: lambda.clone(),
        k_lambda: seed.len(),
        items,
        complete,
    })
}
