use super::verify_star_set;
use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, Rational};
use crate::graphio::{Graph, VertexSet};
use crate::spectral::rational_spectrum;

/// Partition of the vertex set into one star set per distinct eigenvalue,
/// largest eigenvalue first.
///
/// With the eigenbases stacked side by side into a nonsingular `n x n`
/// matrix, a block of rows `S` can be given to the first eigenvalue whenever
/// its own `k x k` minor on `S` and the complementary minor of the remaining
/// eigenbases are both nonsingular; Laplace expansion along the first block
/// guarantees such an `S` exists. The rest is solved the same way.
pub fn star_partition(g: &Graph) -> Result<Vec<(Rational, VertexSet)>> {
    let spectrum = rational_spectrum(g);
    if spectrum.residual_degree > 0 {
        return Err(Error::UnsupportedSpectrum {
            residual_degree: spectrum.residual_degree,
        });
    }
    let n = g.order();
    let bases: Vec<&RatMatrix> = spectrum.entries.iter().map(|e| &e.eigenbasis).collect();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for (i, e) in spectrum.entries.iter().enumerate() {
        let k = e.multiplicity;
        let rest_cols: Vec<Vec<Rational>> = bases[i + 1..]
            .iter()
            .flat_map(|b| (0..b.cols()).map(|c| b.column(c)))
            .collect();
        let rest = RatMatrix::from_columns(n, &rest_cols);
        let own: Vec<usize> = (0..k).collect();
        let all_rest: Vec<usize> = (0..rest.cols()).collect();
        let block = find_block(&remaining, k, |s, others| {
            bases[i].select(s, &own).is_nonsingular() && rest.select(others, &all_rest).is_nonsingular()
        })
        .expect("stacked eigenbases are nonsingular, so a block always exists");
        let x = VertexSet::new(block.iter().copied());
        debug_assert!(verify_star_set(g, &e.lambda, &x));
        remaining.retain(|v| !x.contains(*v));
        out.push((e.lambda.clone(), x));
    }
    Ok(out)
}

/// First `k`-subset of `pool` in lexicographic order accepted by `ok`, which
/// also receives the unchosen elements.
fn find_block(pool: &[usize], k: usize, ok: impl Fn(&[usize], &[usize]) -> bool) -> Option<Vec<usize>> {
    let m = pool.len();
    if k > m {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
        let others: Vec<usize> = pool.iter().copied().filter(|v| !chosen.contains(v)).collect();
        if ok(&chosen, &others) {
            return Some(chosen);
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every vertex outside `d` has a neighbour in `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.order()).all(|v| d.contains(v) || g.neighbors(v).any(|u| d.contains(u)))
}

/// Dominating, and vertices outside `d` have pairwise distinct
/// neighbourhoods within `d`.
pub fn is_location_dominating(g: &Graph, d: &VertexSet) -> bool {
    if !is_dominating(g, d) {
        return false;
    }
    let mut traces: Vec<Vec<usize>> = (0..g.order())
        .filter(|&v| !d.contains(v))
        .map(|v| g.neighbors(v).filter(|&u| d.contains(u)).collect())
        .collect();
    let total = traces.len();
    traces.sort();
    traces.dedup();
    traces.len() == total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::graphio::{corpus, named};

    #[test]
    fn fig1_partition() {
        let g = corpus("fig1").unwrap();
        let p = star_partition(&g).unwrap();
        let sizes: Vec<(Rational, usize)> = p.iter().map(|(l, x)| (l.clone(), x.len())).collect();
        assert_eq!(sizes, vec![(rat(3), 1), (rat(1), 2), (rat(0), 1), (rat(-1), 1), (rat(-2), 2)]);
        let mut all: Vec<usize> = p.iter().flat_map(|(_, x)| x.iter()).collect();
        all.sort();
        assert_eq!(all, (0..7).collect::<Vec<_>>());
        for (l, x) in &p {
            assert!(verify_star_set(&g, l, x));
        }
    }

    #[test]
    fn tiny_partitions() {
        let p = star_partition(&named("K2").unwrap()).unwrap();
        assert_eq!(p, vec![(rat(1), VertexSet::new([0])), (rat(-1), VertexSet::new([1]))]);
        assert_eq!(star_partition(&Graph::empty(1)).unwrap(), vec![(rat(0), VertexSet::new([0]))]);
        assert!(matches!(star_partition(&named("C5").unwrap()), Err(Error::UnsupportedSpectrum { residual_degree: 4 })));
    }

    #[test]
    fn every_rational_corpus_graph_has_a_partition() {
        for name in ["fig1", "petersen", "petersen_cone", "G", "F"] {
            let g = corpus(name).unwrap();
            if rational_spectrum(&g).residual_degree == 0 {
                let p = star_partition(&g).unwrap();
                assert_eq!(p.iter().map(|(_, x)| x.len()).sum::<usize>(), g.order(), "{name}");
            }
        }
    }

    #[test]
    fn domination() {
        let g = corpus("G").unwrap();
        assert!(is_dominating(&g, &g.parse_vertex_set("g1,g2,g3,g4,g5").unwrap()));
        let f1 = corpus("fig1").unwrap();
        let co = f1.parse_vertex_set("1,4").unwrap().complement(7);
        assert!(is_location_dominating(&f1, &co));
        assert!(!is_dominating(&named("K2").unwrap(), &VertexSet::empty()));
        // both leaves of P3 see only the centre
        assert!(!is_location_dominating(&named("P3").unwrap(), &VertexSet::new([1])));
    }
}
