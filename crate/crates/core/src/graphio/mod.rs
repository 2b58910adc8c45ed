//! Simple undirected graphs, vertex sets and the interchange formats.

pub mod corpus;
mod formats;
mod graph6;

pub use corpus::{corpus, corpus_names, named};
pub use formats::{
    from_edge_list, from_json, parse_graphs, to_edge_list, to_json, GraphFormat, GraphJson,
};
pub use graph6::{from_graph6, from_graph6_with_limit, to_graph6, DEFAULT_MAX_ORDER};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{rat, RatMatrix};

/// Sorted, duplicate-free list of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> Self {
        VertexSet((0..n).filter(|v| !self.contains(*v)).collect())
    }

    pub fn with(&self, v: usize) -> Self {
        Self::new(self.0.iter().copied().chain(std::iter::once(v)))
    }

    pub fn without(&self, v: usize) -> Self {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    /// `(self \ {out}) ∪ {inn}`.
    pub fn exchange(&self, out: usize, inn: usize) -> Self {
        self.without(out).with(inn)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::Index { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::new(iter)
    }
}

/// Undirected simple graph with an optional display label per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a 0/1 adjacency table, checking symmetry and the
    /// zero diagonal.
    pub fn from_adjacency_rows(rows: &[&[u8]]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!("adjacency row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if i == j => return Err(Error::InvalidInput(format!("loop at vertex {i}"))),
                    1 => g.set(i, j, true),
                    _ => return Err(Error::InvalidInput(format!("adjacency entry ({i},{j}) is not 0/1"))),
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if g.has_edge(i, j) != g.has_edge(j, i) {
                    return Err(Error::InvalidInput(format!("adjacency not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(g)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::InvalidInput(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::InvalidInput("vertex labels must be distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::Index { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        self.set(u, v, true);
        self.set(v, u, true);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        self.adj[u * self.n + v] = on;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges().count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name: the label when present, otherwise the 0-based index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn format_set(&self, s: &VertexSet) -> String {
        let names: Vec<String> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Resolves a vertex by label first, then by 0-based index.
    pub fn vertex(&self, name: &str) -> Result<usize> {
        let name = name.trim();
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Ok(i);
            }
        }
        match name.parse::<usize>() {
            Ok(i) if i < self.n => Ok(i),
            Ok(i) => Err(Error::Index { vertex: i, n: self.n }),
            Err(_) => Err(Error::InvalidInput(format!("no vertex named '{name}'"))),
        }
    }

    /// Parses a comma-separated vertex list such as `g6,g7` or `0,1,2`.
    pub fn parse_vertex_set(&self, text: &str) -> Result<VertexSet> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| self.vertex(s))
            .collect::<Result<Vec<_>>>()
            .map(VertexSet::new)
    }

    pub fn adjacency_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, self.n, |i, j| rat(self.has_edge(i, j) as i64))
    }

    /// Subgraph induced by `s`; labels follow their vertices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        s.check(self.n)?;
        let m = s.members();
        let mut g = Graph::empty(m.len());
        for (i, &u) in m.iter().enumerate() {
            for (j, &v) in m.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        if self.labels.is_some() {
            g.labels = Some(m.iter().map(|&v| self.label(v)).collect());
        }
        Ok(g)
    }

    /// Join `self ∇ other`: disjoint union plus every edge between the two
    /// sides. Vertices of `self` come first.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v, true);
                g.set(self.n + v, u, true);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
            g.set(v, u, true);
        }
        for (u, v) in other.edges() {
            g.set(self.n + u, self.n + v, true);
            g.set(self.n + v, self.n + u, true);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidInput("not a permutation".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Same vertex count and edges, ignoring labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        write!(f, "Graph(n={}, edges=[{}])", self.n, edges.join(" "))
    }
}
