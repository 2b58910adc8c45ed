//! Rational eigenvalues, their eigenspaces and mainness.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{char_poly, fmt_rational, nullspace_basis, rat, rational_roots, IntPolynomial, RatMatrix, Rational};
use crate::graphio::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct EigenData {
    pub lambda: Rational,
    pub multiplicity: usize,
    /// `n x k` matrix whose columns span `ker(A - λI)`.
    pub eigenbasis: RatMatrix,
    pub is_main: bool,
}

/// Exact eigenspace data for `lambda`, or `NotAnEigenvalue`.
pub fn eigen_data(g: &Graph, lambda: &Rational) -> Result<EigenData> {
    let n = g.order();
    let basis = nullspace_basis(&g.adjacency_matrix().shift(lambda));
    if basis.is_empty() {
        return Err(Error::NotAnEigenvalue(lambda.clone()));
    }
    let is_main = basis.iter().any(|v| !v.iter().sum::<Rational>().is_zero());
    Ok(EigenData {
        lambda: lambda.clone(),
        multiplicity: basis.len(),
        eigenbasis: RatMatrix::from_columns(n, &basis),
        is_main,
    })
}

/// `n - rank(A - λI)`; zero when `lambda` is not an eigenvalue.
pub fn multiplicity(g: &Graph, lambda: &Rational) -> usize {
    g.order() - g.adjacency_matrix().shift(lambda).rank()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub char_poly: IntPolynomial,
    /// Sorted by eigenvalue, largest first.
    pub entries: Vec<EigenData>,
    /// Degree of the characteristic-polynomial factor without rational roots.
    pub residual_degree: usize,
}

impl SpectrumReport {
    pub fn eigenvalues(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.lambda.clone()).collect()
    }

    pub fn main_eigenvalues(&self) -> Vec<Rational> {
        self.entries.iter().filter(|e| e.is_main).map(|e| e.lambda.clone()).collect()
    }

    pub fn get(&self, lambda: &Rational) -> Option<&EigenData> {
        self.entries.iter().find(|e| &e.lambda == lambda)
    }

    /// `3 (main), 1^2, 0 (main), -1, -2^2`
    pub fn to_ascii(&self) -> String {
        let mut parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let mut s = fmt_rational(&e.lambda);
                if e.multiplicity > 1 {
                    s.push_str(&format!("^{}", e.multiplicity));
                }
                if e.is_main {
                    s.push_str(" (main)");
                }
                s
            })
            .collect();
        if self.residual_degree > 0 {
            parts.push(format!("[{} irrational]", self.residual_degree));
        }
        parts.join(", ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "char_poly": self.char_poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|e| json!({
                "lambda": fmt_rational(&e.lambda),
                "multiplicity": e.multiplicity,
                "is_main": e.is_main,
            })).collect::<Vec<_>>(),
            "residual_degree": self.residual_degree,
        })
    }
}

pub fn rational_spectrum(g: &Graph) -> SpectrumReport {
    let p = char_poly(&g.adjacency_matrix()).expect("adjacency matrices are integral");
    let roots = rational_roots(&p);
    let mut entries = Vec::with_capacity(roots.len());
    for (lambda, mult) in roots {
        let e = eigen_data(g, &lambda).expect("root of the characteristic polynomial");
        // algebraic and geometric multiplicity agree for symmetric matrices
        assert_eq!(e.multiplicity, mult, "multiplicity mismatch at {lambda}");
        entries.push(e);
    }
    let found: usize = entries.iter().map(|e| e.multiplicity).sum();
    SpectrumReport {
        char_poly: p,
        entries,
        residual_degree: g.order() - found,
    }
}

pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && char_poly(&g.adjacency_matrix()).ok() == char_poly(&h.adjacency_matrix()).ok()
}

/// Number of main eigenvalues, rational or not: the rank of the walk matrix
/// `[j, Aj, A^2 j, ...]`.
pub fn main_eigenvalue_count(g: &Graph) -> usize {
    let n = g.order();
    let a = g.adjacency_matrix();
    let mut cols = Vec::with_capacity(n);
    let mut v = vec![rat(1); n];
    for _ in 0..n {
        let next = a.mul_vec(&v);
        cols.push(v);
        v = next;
    }
    RatMatrix::from_columns(n, &cols).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphio::{corpus, named};

    #[test]
    fn fig1_spectrum() {
        let s = rational_spectrum(&corpus("fig1").unwrap());
        let got: Vec<(Rational, usize)> = s.entries.iter().map(|e| (e.lambda.clone(), e.multiplicity)).collect();
        assert_eq!(got, vec![(rat(3), 1), (rat(1), 2), (rat(0), 1), (rat(-1), 1), (rat(-2), 2)]);
        assert_eq!(s.residual_degree, 0);
        assert_eq!(s.main_eigenvalues(), vec![rat(3), rat(0)]);
        assert_eq!(s.to_ascii(), "3 (main), 1^2, 0 (main), -1, -2^2");
    }

    #[test]
    fn mainness_of_zero_in_g_and_h() {
        let g = eigen_data(&corpus("G").unwrap(), &rat(0)).unwrap();
        assert_eq!((g.multiplicity, g.is_main), (2, true));
        let h = eigen_data(&corpus("H").unwrap(), &rat(0)).unwrap();
        assert_eq!((h.multiplicity, h.is_main), (2, false));
        let k2 = eigen_data(&named("K2").unwrap(), &rat(1)).unwrap();
        assert_eq!((k2.multiplicity, k2.is_main), (1, true));
        assert_eq!(eigen_data(&named("K2").unwrap(), &rat(2)), Err(Error::NotAnEigenvalue(rat(2))));
    }

    #[test]
    fn zero_eigenvectors_of_g_vanish_at_g2_and_g5() {
        let e = eigen_data(&corpus("G").unwrap(), &rat(0)).unwrap();
        for j in 0..e.multiplicity {
            assert!(e.eigenbasis[(1, j)].is_zero());
            assert!(e.eigenbasis[(4, j)].is_zero());
        }
    }

    #[test]
    fn eigenbasis_columns_are_eigenvectors() {
        for name in crate::graphio::corpus_names() {
            let g = corpus(name).unwrap();
            let a = g.adjacency_matrix();
            for e in rational_spectrum(&g).entries {
                for j in 0..e.multiplicity {
                    let v = e.eigenbasis.column(j);
                    let av = a.mul_vec(&v);
                    assert!(av.iter().zip(&v).all(|(x, y)| *x == &e.lambda * y), "{name} {}", e.lambda);
                }
            }
        }
    }

    #[test]
    fn tiny_and_cone_spectra() {
        let k1 = rational_spectrum(&Graph::empty(1));
        assert_eq!(k1.to_ascii(), "0 (main)");
        let cone = rational_spectrum(&corpus("petersen_cone").unwrap());
        assert_eq!(cone.to_ascii(), "5 (main), 1^5, -2^5 (main)");
        let c5cone = rational_spectrum(&corpus("C5cone").unwrap());
        assert!(c5cone.entries.is_empty());
        assert_eq!(c5cone.residual_degree, 6);
    }

    #[test]
    fn cospectral_pairs() {
        let g = corpus("G").unwrap();
        assert!(cospectral(&g, &corpus("H").unwrap()));
        assert!(cospectral(&g, &corpus("F").unwrap()));
        assert!(!cospectral(&Graph::empty(1), &named("K2").unwrap()));
    }

    #[test]
    fn walk_matrix_counts_main_eigenvalues() {
        assert_eq!(main_eigenvalue_count(&corpus("petersen").unwrap()), 1);
        assert_eq!(main_eigenvalue_count(&corpus("petersen_cone").unwrap()), 2);
        for name in crate::graphio::corpus_names() {
            let g = corpus(name).unwrap();
            let s = rational_spectrum(&g);
            if s.residual_degree == 0 {
                assert_eq!(main_eigenvalue_count(&g), s.main_eigenvalues().len(), "{name}");
            }
        }
    }

    #[test]
    fn largest_rational_eigenvalue_of_connected_graph_is_main_and_simple() {
        for name in crate::graphio::corpus_names() {
            let g = corpus(name).unwrap();
            let s = rational_spectrum(&g);
            // with a fully rational spectrum the first entry is the spectral radius
            if let Some(top) = s.entries.first() {
                if g.is_connected() && s.residual_degree == 0 {
                    assert!(top.is_main && top.multiplicity == 1, "{name}");
                }
            }
        }
    }
}
