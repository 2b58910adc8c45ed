use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{from_graph6, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Edges,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edges" | "edgelist" => Ok(GraphFormat::Edges),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::InvalidInput(format!("unknown graph format '{other}'"))),
        }
    }
}

/// `{"n": 3, "edges": [[0, 1]], "labels": ["a", "b", "c"]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| {
        let offset = line_col_to_offset(text, e.line(), e.column());
        Error::parse(offset, e.to_string())
    })?;
    let g = Graph::from_edges(doc.n, doc.edges.iter().map(|[u, v]| (*u, *v)))?;
    match doc.labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.order(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&doc).expect("graph JSON serializes")
}

fn line_col_to_offset(text: &str, line: usize, col: usize) -> usize {
    let before: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + col.saturating_sub(1)
}

/// Edge-list text: a `n=<count>` header, then one `u v` pair per line.
/// Blank lines and `#` comments are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            if n.is_none() {
                let count = content
                    .strip_prefix("n=")
                    .or_else(|| content.strip_prefix("n ="))
                    .ok_or_else(|| Error::parse(offset, "edge list must start with 'n=<count>'"))?;
                n = Some(count.trim().parse::<usize>().map_err(|_| Error::parse(offset, "bad vertex count"))?);
            } else {
                let mut parts = content.split_whitespace();
                let mut next = || -> Result<usize> {
                    parts
                        .next()
                        .and_then(|p| p.parse().ok())
                        .ok_or_else(|| Error::parse(offset, format!("expected 'u v', found '{content}'")))
                };
                let (u, v) = (next()?, next()?);
                if parts.next().is_some() {
                    return Err(Error::parse(offset, format!("expected 'u v', found '{content}'")));
                }
                edges.push((u, v));
            }
        }
        offset += line.len();
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing 'n=<count>' header"))?;
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses input text into graphs. Graph6 input may hold one graph per line;
/// each line succeeds or fails independently. The other formats hold a single
/// graph.
pub fn parse_graphs(text: &str, format: GraphFormat) -> Vec<Result<Graph>> {
    match format {
        GraphFormat::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(from_graph6)
            .collect(),
        GraphFormat::Edges => vec![from_edge_list(text)],
        GraphFormat::Json => vec![from_json(text)],
    }
}
