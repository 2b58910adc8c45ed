use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{is_zero_row, StarSet};
use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, invert, RatMatrix, Rational};
use crate::graphio::{Graph, VertexSet};

/// Simplex tableau of a star set `X`: rows are the co-star (basic) vertices,
/// columns the star (non-basic) vertices, body `B⁻¹N` with
/// `B = C_X̄ - λI`, and the reduced cost row `jᵀB⁻¹N - jᵀ`.
///
/// Row and column order is positional. A fresh tableau is in ascending vertex
/// order; pivoting puts the entering vertex in the slot of the leaving one.
#[derive(Clone, Debug, PartialEq)]
pub struct Tableau {
    pub lambda: Rational,
    pub basic: Vec<usize>,
    pub nonbasic: Vec<usize>,
    pub body: RatMatrix,
    pub reduced_cost: Vec<Rational>,
    /// Display names for every vertex of the host graph.
    pub labels: Vec<String>,
    /// Isolated vertices of the host graph.
    pub isolated: VertexSet,
}

pub fn build_tableau(g: &Graph, lambda: &Rational, x: &VertexSet) -> Result<Tableau> {
    let s = StarSet::new(g, lambda, x.clone())?;
    let shifted = g.adjacency_matrix().shift(lambda);
    let b = shifted.select(s.co_star.members(), s.co_star.members());
    let n_block = shifted.select(s.co_star.members(), s.star.members());
    let b_inv = invert(&b).expect("co-star block of a verified star set is invertible");
    let body = &b_inv * &n_block;
    let reduced_cost = body.column_sums().into_iter().map(|c| c - Rational::one()).collect();
    Ok(Tableau {
        lambda: lambda.clone(),
        basic: s.co_star.members().to_vec(),
        nonbasic: s.star.members().to_vec(),
        body,
        reduced_cost,
        labels: (0..g.order()).map(|v| g.label(v)).collect(),
        isolated: g.isolated_vertices(),
    })
}

impl Tableau {
    pub fn star_set(&self) -> VertexSet {
        VertexSet::new(self.nonbasic.iter().copied())
    }

    pub fn co_star_set(&self) -> VertexSet {
        VertexSet::new(self.basic.iter().copied())
    }

    pub fn row_of(&self, u: usize) -> Option<usize> {
        self.basic.iter().position(|&b| b == u)
    }

    pub fn col_of(&self, v: usize) -> Option<usize> {
        self.nonbasic.iter().position(|&x| x == v)
    }

    /// Body entry `y_uv` for co-star `u` and star `v`.
    pub fn entry(&self, u: usize, v: usize) -> Option<&Rational> {
        Some(&self.body[(self.row_of(u)?, self.col_of(v)?)])
    }

    pub fn cost(&self, v: usize) -> Option<&Rational> {
        self.col_of(v).map(|c| &self.reduced_cost[c])
    }

    pub fn is_main_vertex(&self, v: usize) -> bool {
        self.cost(v).is_some_and(|c| !c.is_zero())
    }

    /// Every `(u, v)` with `y_uv != 0`, in row-major order.
    pub fn legal_pivots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &u) in self.basic.iter().enumerate() {
            for (c, &v) in self.nonbasic.iter().enumerate() {
                if !self.body[(r, c)].is_zero() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Rows and columns sorted by vertex index.
    pub fn canonical(&self) -> Tableau {
        let mut rows: Vec<usize> = (0..self.basic.len()).collect();
        rows.sort_by_key(|&r| self.basic[r]);
        let mut cols: Vec<usize> = (0..self.nonbasic.len()).collect();
        cols.sort_by_key(|&c| self.nonbasic[c]);
        Tableau {
            lambda: self.lambda.clone(),
            basic: rows.iter().map(|&r| self.basic[r]).collect(),
            nonbasic: cols.iter().map(|&c| self.nonbasic[c]).collect(),
            body: self.body.select(&rows, &cols),
            reduced_cost: cols.iter().map(|&c| self.reduced_cost[c].clone()).collect(),
            labels: self.labels.clone(),
            isolated: self.isolated.clone(),
        }
    }

    /// One eigenvector per star vertex `i`: `-1` at `i`, column `i` of the
    /// body on the co-star, zero on the rest of the star set.
    pub fn eigenvectors(&self) -> Vec<Vec<Rational>> {
        let n = self.labels.len();
        (0..self.nonbasic.len())
            .map(|c| {
                let mut v = vec![Rational::zero(); n];
                v[self.nonbasic[c]] = -Rational::one();
                for (r, &u) in self.basic.iter().enumerate() {
                    v[u] = self.body[(r, c)].clone();
                }
                v
            })
            .collect()
    }

    fn label_set(&self, s: impl Iterator<Item = usize>) -> Vec<String> {
        s.map(|v| self.labels[v].clone()).collect()
    }

    /// Basic labels down the left, non-basic labels across the top, the
    /// reduced cost row last. A marked pivot is shown in brackets.
    pub fn to_ascii(&self, mark: Option<(usize, usize)>) -> String {
        let marked = mark.and_then(|(u, v)| Some((self.row_of(u)?, self.col_of(v)?)));
        let cell = |r: usize, c: usize| {
            let s = fmt_rational(&self.body[(r, c)]);
            if marked == Some((r, c)) {
                format!("[{s}]")
            } else {
                s
            }
        };
        let head = self.label_set(self.nonbasic.iter().copied());
        let rows = self.label_set(self.basic.iter().copied());
        let costs: Vec<String> = self.reduced_cost.iter().map(fmt_rational).collect();
        let lw = rows.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.nonbasic.len())
            .map(|c| {
                (0..self.basic.len())
                    .map(|r| cell(r, c).len())
                    .chain([head[c].len(), costs[c].len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let line = |left: &str, cells: &[String]| {
            let mut s = format!("{left:>lw$} |");
            for (c, x) in cells.iter().enumerate() {
                let _ = write!(s, " {x:>w$}", w = widths[c]);
            }
            s.push_str(" |\n");
            s
        };
        let rule = format!("{}-+{}-+\n", "-".repeat(lw), widths.iter().map(|w| "-".repeat(w + 1)).collect::<String>());
        let mut out = line("", &head);
        out.push_str(&rule);
        for (r, name) in rows.iter().enumerate() {
            let cells: Vec<String> = (0..self.nonbasic.len()).map(|c| cell(r, c)).collect();
            out.push_str(&line(name, &cells));
        }
        out.push_str(&rule);
        out.push_str(&line("", &costs));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": fmt_rational(&self.lambda),
            "basic": self.label_set(self.basic.iter().copied()),
            "nonbasic": self.label_set(self.nonbasic.iter().copied()),
            "body": (0..self.basic.len())
                .map(|r| self.body.row(r).iter().map(fmt_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "reduced_cost": self.reduced_cost.iter().map(fmt_rational).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MainClassification {
    pub star_set: StarSet,
    /// Star vertices with a non-zero reduced cost.
    pub main_vertices: VertexSet,
}

pub fn classify(t: &Tableau) -> MainClassification {
    let main_vertices = t
        .nonbasic
        .iter()
        .zip(&t.reduced_cost)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&v, _)| v)
        .collect();
    MainClassification {
        star_set: StarSet::unchecked(t.labels.len(), &t.lambda, t.star_set()),
        main_vertices,
    }
}

/// λ is main iff some reduced cost is non-zero.
pub fn eigenvalue_is_main_via_tableau(t: &Tableau) -> bool {
    t.reduced_cost.iter().any(|c| !c.is_zero())
}

/// Exchanges co-star `u` and star `v`: the tableau of `(X \ {v}) ∪ {u}`.
pub fn pivot(t: &Tableau, u: usize, v: usize) -> Result<Tableau> {
    let not_in = |w: usize, what: &str| Error::InvalidInput(format!("vertex {} is not {what}", t.labels.get(w).map_or(w.to_string(), Clone::clone)));
    let r = t.row_of(u).ok_or_else(|| not_in(u, "a co-star vertex of this tableau"))?;
    let c = t.col_of(v).ok_or_else(|| not_in(v, "a star vertex of this tableau"))?;
    let p = t.body[(r, c)].clone();
    if p.is_zero() {
        return Err(Error::ZeroPivot {
            row: t.labels[u].clone(),
            col: t.labels[v].clone(),
        });
    }
    let rows = t.basic.len();
    let cols = t.nonbasic.len();
    let body = RatMatrix::from_fn(rows, cols, |i, j| {
        match (i == r, j == c) {
            (true, true) => p.recip(),
            (false, true) => -&t.body[(i, c)] / &p,
            (true, false) => &t.body[(r, j)] / &p,
            (false, false) => &t.body[(i, j)] - &t.body[(i, c)] * &t.body[(r, j)] / &p,
        }
    });
    let rc = &t.reduced_cost[c];
    let reduced_cost = (0..cols)
        .map(|j| if j == c { -rc / &p } else { &t.reduced_cost[j] - rc * &t.body[(r, j)] / &p })
        .collect();
    let mut basic = t.basic.clone();
    basic[r] = v;
    let mut nonbasic = t.nonbasic.clone();
    nonbasic[c] = u;
    Ok(Tableau {
        lambda: t.lambda.clone(),
        basic,
        nonbasic,
        body,
        reduced_cost,
        labels: t.labels.clone(),
        isolated: t.isolated.clone(),
    })
}

/// Whether `v`'s status in `t` equals `u`'s status after pivoting at `(u, v)`.
pub fn mainness_transfer_check(t: &Tableau, u: usize, v: usize) -> Result<bool> {
    let after = pivot(t, u, v)?;
    Ok(t.is_main_vertex(v) == after.is_main_vertex(u))
}

/// Co-star vertices whose body row is zero; they lie in no λ-star set.
/// Requires a host graph without isolated vertices.
pub fn vertices_in_no_star_set(t: &Tableau) -> Result<VertexSet> {
    if !t.isolated.is_empty() {
        return Err(Error::IsolatedVertices {
            requirement: "detecting vertices that lie in no star set",
        });
    }
    Ok((0..t.basic.len()).filter(|&r| is_zero_row(&t.body, r)).map(|r| t.basic[r]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::graphio::corpus;

    fn tab(name: &str, lambda: i64, set: &str) -> (Graph, Tableau) {
        let g = corpus(name).unwrap();
        let x = g.parse_vertex_set(set).unwrap();
        let t = build_tableau(&g, &rat(lambda), &x).unwrap();
        (g, t)
    }

    fn body(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows)
    }

    #[test]
    fn fig1_tableaux() {
        let (_, t) = tab("fig1", -2, "1,4");
        assert_eq!(t.body, body(&[&[1, 0], &[0, 1], &[0, 1], &[1, 0], &[-1, -1]]));
        assert_eq!(t.reduced_cost, vec![rat(0), rat(0)]);
        let (_, t) = tab("fig1", 1, "2,3");
        assert_eq!(t.reduced_cost, vec![rat(0), rat(0)]);
        assert!(!eigenvalue_is_main_via_tableau(&t));
        let (_, t) = tab("fig1", 0, "7");
        assert_eq!(t.body, body(&[&[1], &[0], &[0], &[1], &[0], &[0]]));
        assert_eq!(t.reduced_cost, vec![rat(1)]);
    }

    #[test]
    fn g_and_h_zero_tableaux() {
        let (g, t) = tab("G", 0, "g6,g7");
        assert_eq!(t.body, body(&[&[1, -1], &[0, 0], &[0, 1], &[1, 0], &[0, 0]]));
        assert_eq!(t.reduced_cost, vec![rat(1), rat(-1)]);
        assert_eq!(classify(&t).main_vertices, g.parse_vertex_set("g6,g7").unwrap());
        assert_eq!(vertices_in_no_star_set(&t).unwrap(), g.parse_vertex_set("g2,g5").unwrap());

        let (h, t) = tab("H", 0, "h6,h7");
        assert_eq!(t.body, body(&[&[0, 0], &[0, 0], &[0, 0], &[0, 1], &[1, 0]]));
        assert_eq!(t.reduced_cost, vec![rat(0), rat(0)]);
        assert!(!eigenvalue_is_main_via_tableau(&t));
        assert_eq!(t.legal_pivots(), vec![(h.vertex("h4").unwrap(), 6), (4, 5)]);
    }

    #[test]
    fn g_pivot_chain_matches_reference_sequence() {
        let (g, t0) = tab("G", 0, "g6,g7");
        let v = |s: &str| g.vertex(s).unwrap();
        let t1 = pivot(&t0, v("g1"), v("g6")).unwrap();
        assert_eq!(t1.basic, [v("g6"), v("g2"), v("g3"), v("g4"), v("g5")]);
        assert_eq!(t1.nonbasic, [v("g1"), v("g7")]);
        assert_eq!(t1.body, body(&[&[1, -1], &[0, 0], &[0, 1], &[-1, 1], &[0, 0]]));
        assert_eq!(t1.reduced_cost, vec![rat(-1), rat(0)]);
        assert!(!t1.is_main_vertex(v("g7")));

        let t2 = pivot(&t1, v("g4"), v("g1")).unwrap();
        assert_eq!(t2.body, body(&[&[1, 0], &[0, 0], &[0, 1], &[-1, -1], &[0, 0]]));
        assert_eq!(t2.reduced_cost, vec![rat(-1), rat(-1)]);
        let t3 = pivot(&t2, v("g3"), v("g7")).unwrap();
        assert_eq!(t3.reduced_cost, vec![rat(-1), rat(1)]);
        let t4 = pivot(&t3, v("g1"), v("g3")).unwrap();
        assert_eq!(t4.body, body(&[&[1, 0], &[0, 0], &[1, -1], &[-1, 1], &[0, 0]]));
        assert_eq!(t4.reduced_cost, vec![rat(0), rat(-1)]);
    }

    #[test]
    fn f_tableau_rows() {
        let (f, t) = tab("F", 0, "f4,f7");
        assert_eq!(t.body, body(&[&[1, 1], &[1, 0], &[-1, -1], &[0, 0], &[0, 0]]));
        assert_eq!(t.reduced_cost, vec![rat(0), rat(-1)]);
        assert_eq!(vertices_in_no_star_set(&t).unwrap(), f.parse_vertex_set("f5,f6").unwrap());
        let (_, t) = tab("fig1", -2, "1,4");
        assert!(vertices_in_no_star_set(&t).unwrap().is_empty());
    }

    #[test]
    fn pivot_errors_and_involution() {
        let (g, t) = tab("G", 0, "g6,g7");
        let v = |s: &str| g.vertex(s).unwrap();
        assert!(matches!(pivot(&t, v("g2"), v("g6")), Err(Error::ZeroPivot { .. })));
        assert!(pivot(&t, v("g6"), v("g7")).is_err());
        for (a, b) in t.legal_pivots() {
            let there = pivot(&t, a, b).unwrap();
            assert_eq!(pivot(&there, b, a).unwrap(), t);
            assert_eq!(there.canonical(), build_tableau(&g, &rat(0), &there.star_set()).unwrap());
            assert!(mainness_transfer_check(&t, a, b).unwrap());
        }
    }

    #[test]
    fn isolated_vertices_are_refused() {
        let g = Graph::empty(1).disjoint_union(&Graph::from_edges(2, [(0, 1)]).unwrap());
        let t = build_tableau(&g, &rat(0), &VertexSet::new([0])).unwrap();
        assert!(matches!(vertices_in_no_star_set(&t), Err(Error::IsolatedVertices { .. })));
    }

    #[test]
    fn ascii_layout() {
        let (_, t) = tab("G", 0, "g6,g7");
        let got = t.to_ascii(Some((0, 5)));
        assert_eq!(
            got,
            "   |  g6 g7 |\n\
             ---+--------+\n\
             g1 | [1] -1 |\n\
             g2 |   0  0 |\n\
             g3 |   0  1 |\n\
             g4 |   1  0 |\n\
             g5 |   0  0 |\n\
             ---+--------+\n   |   1 -1 |\n"
        );
        let j = t.to_json();
        assert_eq!(j["basic"][0], "g1");
        assert_eq!(j["body"][0][1], "-1");
        assert_eq!(j["reduced_cost"][1], "-1");
    }
}
