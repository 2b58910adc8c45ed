//! Oracles that share no code with the library's linear algebra.
#![allow(dead_code)]

use starkit::graphio::{Graph, VertexSet};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn int_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `q·A - p·I` restricted to `keep`, for the eigenvalue `p/q`.
fn shifted(g: &Graph, keep: &[usize], p: i64, q: i64) -> Vec<Vec<i128>> {
    keep.iter()
        .map(|&u| {
            keep.iter()
                .map(|&v| {
                    let a = g.has_edge(u, v) as i128 * q as i128;
                    if u == v { a - p as i128 } else { a }
                })
                .collect()
        })
        .collect()
}

/// Multiplicity of `p/q` in the subgraph induced by `keep`.
pub fn mult_on(g: &Graph, keep: &[usize], p: i64, q: i64) -> usize {
    keep.len() - int_rank(shifted(g, keep, p, q))
}

pub fn mult(g: &Graph, p: i64, q: i64) -> usize {
    mult_on(g, &(0..g.order()).collect::<Vec<_>>(), p, q)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every `k`-subset `X` with `p/q` not an eigenvalue of `G - X`, sorted.
pub fn brute_force_star_sets(g: &Graph, p: i64, q: i64) -> Vec<VertexSet> {
    let n = g.order();
    let k = mult(g, p, q);
    if k == 0 {
        return Vec::new();
    }
    let mut out: Vec<VertexSet> = subsets(n, k)
        .into_iter()
        .filter(|x| {
            let rest: Vec<usize> = (0..n).filter(|v| !x.contains(v)).collect();
            mult_on(g, &rest, p, q) == 0
        })
        .map(VertexSet::new)
        .collect();
    out.sort();
    out
}

/// Rational eigenvalues `(p, q)` of a graph: candidates are integers in
/// `[-n, n]`, since adjacency eigenvalues are algebraic integers.
pub fn integer_eigenvalues(g: &Graph) -> Vec<(i64, usize)> {
    let n = g.order() as i64;
    (-n..=n).rev().filter_map(|l| Some((l, mult(g, l, 1))).filter(|&(_, m)| m > 0)).collect()
}

/// Largest root of the cone quotient matrix `[[0, n], [1, k]]`, i.e. of
/// `x^2 - kx - n`, when it is an integer.
pub fn cone_quotient_root(n: i64, k: i64) -> Option<i64> {
    let disc = k * k + 4 * n;
    let s = (disc as f64).sqrt().round() as i64;
    (s * s == disc && (k + s) % 2 == 0).then_some((k + s) / 2)
}
