//! Named graphs.
//!
//! `fig1` is rebuilt from two `[N | C - λI]` blocks (one per star set)
//! that together cover every vertex pair. Where both blocks describe the same pair they must agree, so loading
//! it is self-checking.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const NAMES: [&str; 7] = ["fig1", "G", "H", "F", "petersen", "C5cone", "petersen_cone"];

pub fn corpus_names() -> &'static [&'static str] {
    &NAMES
}

pub fn corpus(name: &str) -> Result<Graph> {
    match name {
        "fig1" => fig1(),
        "G" => labeled(
            &[
                &[0, 1, 0, 0, 0, 0, 0],
                &[1, 0, 1, 0, 0, 1, 0],
                &[0, 1, 0, 1, 1, 1, 0],
                &[0, 0, 1, 0, 1, 0, 1],
                &[0, 0, 1, 1, 0, 1, 1],
                &[0, 1, 1, 0, 1, 0, 1],
                &[0, 0, 0, 1, 1, 1, 0],
            ],
            'g',
        ),
        "H" => {
            let g = Graph::from_edges(
                7,
                [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (3, 6), (3, 7), (4, 6), (5, 7), (6, 7)]
                    .map(|(u, v)| (u - 1, v - 1)),
            )?;
            g.with_labels((1..=7).map(|i| format!("h{i}")))
        }
        "F" => labeled(
            &[
                &[0, 1, 0, 1, 1, 1, 0],
                &[1, 0, 1, 0, 0, 0, 0],
                &[0, 1, 0, 1, 0, 0, 0],
                &[1, 0, 1, 0, 1, 1, 0],
                &[1, 0, 0, 1, 0, 1, 1],
                &[1, 0, 0, 1, 1, 0, 1],
                &[0, 0, 0, 0, 1, 1, 0],
            ],
            'f',
        ),
        "petersen" => Ok(petersen()),
        "C5cone" => Ok(Graph::empty(1).join(&cycle(5))),
        "petersen_cone" => Ok(Graph::empty(1).join(&petersen())),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

fn labeled(rows: &[&[u8]], prefix: char) -> Result<Graph> {
    let g = Graph::from_adjacency_rows(rows)?;
    let n = g.order();
    g.with_labels((1..=n).map(|i| format!("{prefix}{i}")))
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges).expect("valid Petersen edges")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("valid")
}

/// Corpus names plus the families `K<n>`, `C<n>`, `P<n>`, `E<n>` (edgeless)
/// and `K<a>,<b>`.
pub fn named(name: &str) -> Result<Graph> {
    if let Ok(g) = corpus(name) {
        return Ok(g);
    }
    let unknown = || Error::UnknownName(name.to_string());
    let (kind, rest) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
    if kind == "K" {
        if let Some((a, b)) = rest.split_once(',') {
            let a = a.parse().map_err(|_| unknown())?;
            let b = b.parse().map_err(|_| unknown())?;
            return Ok(complete_bipartite(a, b));
        }
    }
    let n: usize = rest.parse().map_err(|_| unknown())?;
    match kind {
        "K" => Ok(complete(n)),
        "C" if n >= 3 => Ok(cycle(n)),
        "P" => Ok(path(n)),
        "E" => Ok(Graph::empty(n)),
        _ => Err(unknown()),
    }
}

/// One block: the star set, the eigenvalue, and rows indexed by the
/// co-star vertices whose columns are `star ++ co_star` (1-based labels).
struct SourceBlock {
    lambda: i64,
    star: [usize; 2],
    co_star: [usize; 5],
    rows: [[i64; 7]; 5],
}

const FIG1_BLOCKS: [SourceBlock; 2] = [
    SourceBlock {
        lambda: -2,
        star: [1, 4],
        co_star: [2, 3, 5, 6, 7],
        rows: [
            [1, 0, 2, 1, 0, 0, 1],
            [0, 1, 1, 2, 0, 0, 1],
            [0, 1, 0, 0, 2, 1, 1],
            [1, 0, 0, 0, 1, 2, 1],
            [0, 0, 1, 1, 1, 1, 2],
        ],
    },
    SourceBlock {
        lambda: 1,
        star: [2, 3],
        co_star: [1, 4, 5, 6, 7],
        rows: [
            [1, 0, -1, 0, 0, 1, 0],
            [0, 1, 0, -1, 1, 0, 0],
            [0, 0, 0, 1, -1, 1, 1],
            [0, 0, 1, 0, 1, -1, 1],
            [1, 1, 0, 0, 1, 1, -1],
        ],
    },
];

/// Edge set of the reconstruction, kept as a literal so tests can compare.
pub const FIG1_EDGES: [(usize, usize); 10] =
    [(1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 7), (4, 5), (5, 6), (5, 7), (6, 7)];

fn fig1() -> Result<Graph> {
    let n = 7;
    let mut known: Vec<Option<bool>> = vec![None; n * n];
    let inconsistent = |msg: String| Error::InvalidInput(format!("fig1 reconstruction: {msg}"));
    for block in &FIG1_BLOCKS {
        let cols: Vec<usize> = block.star.iter().chain(&block.co_star).map(|v| v - 1).collect();
        for (r, &row_vertex) in block.co_star.iter().enumerate() {
            let u = row_vertex - 1;
            for (c, &v) in cols.iter().enumerate() {
                let entry = block.rows[r][c];
                if u == v {
                    if entry != -block.lambda {
                        return Err(inconsistent(format!("diagonal at {row_vertex} is {entry}")));
                    }
                    continue;
                }
                let edge = match entry {
                    0 => false,
                    1 => true,
                    e => return Err(inconsistent(format!("off-diagonal entry {e}"))),
                };
                for (a, b) in [(u, v), (v, u)] {
                    match known[a * n + b] {
                        Some(prev) if prev != edge => {
                            return Err(inconsistent(format!("blocks disagree on pair ({}, {})", a + 1, b + 1)))
                        }
                        _ => known[a * n + b] = Some(edge),
                    }
                }
            }
        }
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            match known[u * n + v] {
                Some(true) => g.add_edge(u, v)?,
                Some(false) => {}
                None => return Err(inconsistent(format!("pair ({}, {}) not covered", u + 1, v + 1))),
            }
        }
    }
    g.with_labels((1..=n).map(|i| i.to_string()))
}

/// Vertex set from 1-based labels such as `[6, 7]` for `{g6, g7}`.
pub fn one_based(labels: &[usize]) -> VertexSet {
    VertexSet::new(labels.iter().map(|v| v - 1))
}
