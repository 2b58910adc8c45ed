//! Star sets, their simplex tableaux, pivoting and enumeration.

mod enumerate;
mod partition;
mod tableau;

pub use enumerate::{default_cap, enumerate_from, enumerate_partial, enumerate_star_sets, StarSetCatalog};
pub use partition::{is_dominating, is_location_dominating, star_partition};
pub use tableau::{
    build_tableau, classify, eigenvalue_is_main_via_tableau, mainness_transfer_check, pivot,
    vertices_in_no_star_set, MainClassification, Tableau,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{invert, rref, RatMatrix, Rational};
use crate::graphio::{Graph, VertexSet};
use crate::spectral::{eigen_data, multiplicity};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarSet {
    pub lambda: Rational,
    pub star: VertexSet,
    pub co_star: VertexSet,
}

impl StarSet {
    /// Checks `star` and wraps it; `NotAStarSet` when the check fails.
    pub fn new(g: &Graph, lambda: &Rational, star: VertexSet) -> Result<Self> {
        star.check(g.order())?;
        if !verify_star_set(g, lambda, &star) {
            return Err(Error::NotAStarSet {
                lambda: lambda.clone(),
                vertices: g.format_set(&star),
            });
        }
        Ok(Self::unchecked(g.order(), lambda, star))
    }

    pub(crate) fn unchecked(n: usize, lambda: &Rational, star: VertexSet) -> Self {
        StarSet {
            lambda: lambda.clone(),
            co_star: star.complement(n),
            star,
        }
    }
}

/// Star set read off the row-reduced transpose of an eigenbasis: its pivot
/// columns index `k` rows of the eigenbasis that are linearly independent.
pub fn initial_star_set(g: &Graph, lambda: &Rational) -> Result<StarSet> {
    let e = eigen_data(g, lambda)?;
    let r = rref(&e.eigenbasis.transpose());
    let star = VertexSet::new(r.pivot_columns);
    debug_assert!(verify_star_set(g, lambda, &star));
    Ok(StarSet::unchecked(g.order(), lambda, star))
}

/// Outcome of both star-set tests on a candidate `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSetCheck {
    /// `|X|` equals the multiplicity of λ.
    pub size_matches: bool,
    /// `C_X̄ - λI` is invertible, i.e. λ is not an eigenvalue of `G - X`.
    pub complement_nonsingular: bool,
    /// `A_X - λI = Nᵀ (C_X̄ - λI)⁻¹ N`; false whenever the inverse does not exist.
    pub reconstruction_holds: bool,
}

impl StarSetCheck {
    pub fn by_complement(&self) -> bool {
        self.size_matches && self.complement_nonsingular
    }

    /// The reconstruction identity forces `rank(A - λI) = |X̄|`, so it needs
    /// no separate size test.
    pub fn by_reconstruction(&self) -> bool {
        self.complement_nonsingular && self.reconstruction_holds
    }
}

pub fn check_star_set(g: &Graph, lambda: &Rational, x: &VertexSet) -> Result<StarSetCheck> {
    x.check(g.order())?;
    let n = g.order();
    let co = x.complement(n);
    let shifted = g.adjacency_matrix().shift(lambda);
    let size_matches = x.len() == multiplicity(g, lambda);
    let b = shifted.select(co.members(), co.members());
    let (complement_nonsingular, reconstruction_holds) = match invert(&b) {
        Ok(b_inv) => {
            let nb = shifted.select(co.members(), x.members());
            let rhs = &(&nb.transpose() * &b_inv) * &nb;
            let lhs = shifted.select(x.members(), x.members());
            (true, lhs == rhs)
        }
        Err(_) => (false, false),
    };
    Ok(StarSetCheck {
        size_matches,
        complement_nonsingular,
        reconstruction_holds,
    })
}

/// True iff `x` is a λ-star set. Both tests are run and must agree.
pub fn verify_star_set(g: &Graph, lambda: &Rational, x: &VertexSet) -> bool {
    match check_star_set(g, lambda, x) {
        Ok(c) => {
            assert_eq!(c.by_complement(), c.by_reconstruction(), "star-set criteria disagree on {x:?}");
            // an empty set passes both tests when λ is not an eigenvalue at all
            c.by_complement() && !x.is_empty()
        }
        Err(_) => false,
    }
}

/// Rows of `[N | C_X̄ - λI]`, i.e. `(A - λI)` restricted to the co-star rows.
pub fn star_complement_rows(g: &Graph, lambda: &Rational, x: &VertexSet) -> RatMatrix {
    let co = x.complement(g.order());
    let all: Vec<usize> = x.iter().chain(co.iter()).collect();
    g.adjacency_matrix().shift(lambda).select(co.members(), &all)
}

pub(crate) fn is_zero_row(m: &RatMatrix, r: usize) -> bool {
    m.row(r).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::graphio::{corpus, named};

    fn set(g: &Graph, s: &str) -> VertexSet {
        g.parse_vertex_set(s).unwrap()
    }

    #[test]
    fn verify_examples() {
        let g = corpus("G").unwrap();
        assert!(verify_star_set(&g, &rat(0), &set(&g, "g6,g7")));
        assert!(!verify_star_set(&g, &rat(0), &set(&g, "g2,g5")));
        assert!(!verify_star_set(&g, &rat(0), &VertexSet::full(7)));
        assert!(!verify_star_set(&g, &rat(2), &set(&g, "g6")));
        let fig1 = corpus("fig1").unwrap();
        assert!(verify_star_set(&fig1, &rat(-2), &set(&fig1, "1,4")));
        assert!(verify_star_set(&fig1, &rat(1), &set(&fig1, "2,3")));
    }

    #[test]
    fn both_criteria_agree_on_every_subset() {
        for name in ["fig1", "G", "H", "F"] {
            let g = corpus(name).unwrap();
            for lambda in crate::spectral::rational_spectrum(&g).eigenvalues() {
                for mask in 0u32..(1 << g.order()) {
                    let x = VertexSet::new((0..g.order()).filter(|i| mask >> i & 1 == 1));
                    let c = check_star_set(&g, &lambda, &x).unwrap();
                    assert_eq!(c.by_complement(), c.by_reconstruction(), "{name} {lambda} {x:?}");
                }
            }
        }
    }

    #[test]
    fn initial_star_sets() {
        let fig1 = corpus("fig1").unwrap();
        assert_eq!(initial_star_set(&fig1, &rat(0)).unwrap().star, VertexSet::new([0]));
        let g = corpus("G").unwrap();
        let x = initial_star_set(&g, &rat(0)).unwrap();
        assert_eq!(x.star.len(), 2);
        assert!(verify_star_set(&g, &rat(0), &x.star));
        let k2 = named("K2").unwrap();
        assert_eq!(initial_star_set(&k2, &rat(1)).unwrap().star.len(), 1);
        assert!(matches!(initial_star_set(&k2, &rat(3)), Err(Error::NotAnEigenvalue(_))));
    }

    #[test]
    fn star_set_constructor_rejects() {
        let g = corpus("G").unwrap();
        assert!(matches!(StarSet::new(&g, &rat(0), set(&g, "g2,g5")), Err(Error::NotAStarSet { .. })));
        assert!(matches!(StarSet::new(&g, &rat(0), VertexSet::new([9])), Err(Error::Index { .. })));
        let x = StarSet::new(&g, &rat(0), set(&g, "g6,g7")).unwrap();
        assert_eq!(x.co_star, set(&g, "g1,g2,g3,g4,g5"));
    }

    #[test]
    fn rows_span_row_space() {
        let g = corpus("G").unwrap();
        let x = set(&g, "g6,g7");
        let rows = star_complement_rows(&g, &rat(0), &x);
        assert_eq!(rows.rows(), 5);
        assert_eq!(rows.rank(), g.adjacency_matrix().rank());
    }
}
