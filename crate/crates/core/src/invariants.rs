//! Star-set invariants: extreme main counts, main and non-main degrees,
//! their histograms and the vertex classes they induce.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::Result;
use crate::exactla::{fmt_rational, Rational};
use crate::graphio::{Graph, VertexSet};
use crate::isocheck::certificate;
use crate::starsets::{build_tableau, MainClassification, StarSetCatalog};

/// `(ℵ_max, ℵ_min)`: largest and smallest `|Main(X)|` over the catalog.
pub fn aleph(c: &StarSetCatalog) -> Result<(usize, usize)> {
    c.require_complete()?;
    let sizes = c.items.iter().map(|i| i.main_vertices.len());
    Ok((sizes.clone().max().unwrap_or(0), sizes.min().unwrap_or(0)))
}

/// The same pair computed as `k - min δ₁` and `k - max δ₁`, where `δ₁`
/// counts the entries equal to one in `jᵀB⁻¹N` of each star set's tableau.
pub fn aleph_via_delta1(g: &Graph, c: &StarSetCatalog) -> Result<(usize, usize)> {
    c.require_complete()?;
    let one = Rational::from_integer(1.into());
    let mut deltas = Vec::with_capacity(c.len());
    for item in &c.items {
        let t = build_tableau(g, &c.lambda, &item.star_set.star)?;
        deltas.push(t.body.column_sums().iter().filter(|s| **s == one).count());
    }
    let k = c.k_lambda;
    Ok((k - deltas.iter().copied().min().unwrap_or(k), k - deltas.iter().copied().max().unwrap_or(k)))
}

/// Per-vertex main degree `d⁺` and non-main degree `d⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    pub d_plus: Vec<usize>,
    pub d_minus: Vec<usize>,
}

pub fn degree_table(c: &StarSetCatalog, n: usize) -> Result<DegreeTable> {
    c.require_complete()?;
    let mut d_plus = vec![0; n];
    let mut d_minus = vec![0; n];
    for item in &c.items {
        for v in item.star_set.star.iter() {
            if item.main_vertices.contains(v) {
                d_plus[v] += 1;
            } else {
                d_minus[v] += 1;
            }
        }
    }
    Ok(DegreeTable { d_plus, d_minus })
}

/// Vertices sharing one main (or non-main) degree.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexClass {
    pub degree: usize,
    pub vertices: VertexSet,
    /// Graph degrees of the members, ascending.
    pub graph_degrees: Vec<usize>,
    pub induced: Graph,
    /// Isomorphism-invariant fingerprint of `induced`.
    pub certificate: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub lambda: Rational,
    pub k_lambda: usize,
    pub ss_count: usize,
    pub star_sets: Vec<MainClassification>,
    pub aleph_max: usize,
    pub aleph_min: usize,
    /// `p -> #{X : |Main(X)| = p}`, zero counts omitted.
    pub main_size_histogram: BTreeMap<usize, usize>,
    pub delta_plus: usize,
    pub big_delta_plus: usize,
    pub delta_minus: usize,
    pub big_delta_minus: usize,
    /// `q -> #{v : d⁺(v) = q}`, zero counts omitted.
    pub plus_degree_histogram: BTreeMap<usize, usize>,
    pub minus_degree_histogram: BTreeMap<usize, usize>,
    pub degree_table: DegreeTable,
    pub plus_classes: Vec<VertexClass>,
    pub minus_classes: Vec<VertexClass>,
    pub labels: Vec<String>,
}

fn histogram(values: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn classes(g: &Graph, degrees: &[usize]) -> Result<Vec<VertexClass>> {
    let mut out = Vec::new();
    for d in histogram(degrees.iter().copied()).into_keys() {
        let vertices: VertexSet = (0..g.order()).filter(|&v| degrees[v] == d).collect();
        let induced = g.induced_subgraph(&vertices)?;
        let mut graph_degrees: Vec<usize> = vertices.iter().map(|v| g.degree(v)).collect();
        graph_degrees.sort_unstable();
        out.push(VertexClass {
            degree: d,
            certificate: certificate(&induced),
            vertices,
            graph_degrees,
            induced,
        });
    }
    Ok(out)
}

pub fn report(c: &StarSetCatalog, g: &Graph) -> Result<InvariantReport> {
    let (aleph_max, aleph_min) = aleph(c)?;
    let table = degree_table(c, g.order())?;
    let ext = |d: &[usize]| (d.iter().copied().min().unwrap_or(0), d.iter().copied().max().unwrap_or(0));
    let (delta_plus, big_delta_plus) = ext(&table.d_plus);
    let (delta_minus, big_delta_minus) = ext(&table.d_minus);
    Ok(InvariantReport {
        lambda: c.lambda.clone(),
        k_lambda: c.k_lambda,
        ss_count: c.len(),
        star_sets: c.items.clone(),
        aleph_max,
        aleph_min,
        main_size_histogram: histogram(c.items.iter().map(|i| i.main_vertices.len())),
        delta_plus,
        big_delta_plus,
        delta_minus,
        big_delta_minus,
        plus_degree_histogram: histogram(table.d_plus.iter().copied()),
        minus_degree_histogram: histogram(table.d_minus.iter().copied()),
        plus_classes: classes(g, &table.d_plus)?,
        minus_classes: classes(g, &table.d_minus)?,
        degree_table: table,
        labels: (0..g.order()).map(|v| g.label(v)).collect(),
    })
}

impl InvariantReport {
    pub fn plus_class(&self, d: usize) -> Option<&VertexClass> {
        self.plus_classes.iter().find(|c| c.degree == d)
    }

    pub fn minus_class(&self, d: usize) -> Option<&VertexClass> {
        self.minus_classes.iter().find(|c| c.degree == d)
    }

    fn names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    fn set_str(&self, s: &VertexSet) -> String {
        format!("{{{}}}", self.names(s).join(", "))
    }

    /// Membership grid: `1` where the vertex is main in that star set, `-1`
    /// where it is a non-main member, blank otherwise; degree columns last.
    pub fn table_ascii(&self) -> String {
        let m = self.star_sets.len();
        let heads: Vec<String> = (1..=m).map(|i| format!("X{i}")).collect();
        let w = heads.iter().map(String::len).max().unwrap_or(2).max(2);
        let lw = self.labels.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:lw$} |", "");
        for h in &heads {
            let _ = write!(out, " {h:>w$}");
        }
        out.push_str(" | main degree | non-main degree\n");
        let rule = format!("{}-+{}-+-------------+----------------\n", "-".repeat(lw), "-".repeat((w + 1) * m));
        out.push_str(&rule);
        for v in 0..self.labels.len() {
            let _ = write!(out, "{:lw$} |", self.labels[v]);
            for item in &self.star_sets {
                let mark = if item.main_vertices.contains(v) {
                    "1"
                } else if item.star_set.star.contains(v) {
                    "-1"
                } else {
                    ""
                };
                let _ = write!(out, " {mark:>w$}");
            }
            let _ = writeln!(
                out,
                " | {:>11} | {:>15}",
                self.degree_table.d_plus[v], self.degree_table.d_minus[v]
            );
        }
        out.push_str(&rule);
        out
    }

    /// Star-set legend, the grid, then items (a) to (h).
    pub fn to_ascii(&self) -> String {
        let lam = fmt_rational(&self.lambda);
        let mut out = format!("lambda = {lam}, k = {}\n", self.k_lambda);
        for (i, item) in self.star_sets.iter().enumerate() {
            let _ = writeln!(
                out,
                "X{} = {}  Main = {}",
                i + 1,
                self.set_str(&item.star_set.star),
                self.set_str(&item.main_vertices)
            );
        }
        out.push('\n');
        out.push_str(&self.table_ascii());
        out.push('\n');
        let _ = writeln!(out, "(a) |SS({lam})| = {}", self.ss_count);
        let _ = writeln!(out, "(b) aleph_max = {}, aleph_min = {}", self.aleph_max, self.aleph_min);
        let c: Vec<String> = self.main_size_histogram.iter().map(|(p, n)| format!("|Main(X)| = {p}: {n}")).collect();
        let _ = writeln!(out, "(c) {}", c.join("; "));
        let _ = writeln!(out, "(d) delta+ = {}, Delta+ = {}", self.delta_plus, self.big_delta_plus);
        let _ = writeln!(out, "(e) delta- = {}, Delta- = {}", self.delta_minus, self.big_delta_minus);
        for (tag, sign, h, top) in [
            ("(f)", "+", &self.plus_degree_histogram, self.big_delta_plus),
            ("(g)", "-", &self.minus_degree_histogram, self.big_delta_minus),
        ] {
            let parts: Vec<String> = (0..=top).map(|q| format!("d{sign} = {q}: {}", h.get(&q).copied().unwrap_or(0))).collect();
            let _ = writeln!(out, "{tag} {}", parts.join("; "));
        }
        out.push_str("(h)\n");
        for (sign, classes) in [("+", &self.plus_classes), ("-", &self.minus_classes)] {
            for cl in classes.iter() {
                let edges: Vec<String> = cl
                    .induced
                    .edges()
                    .map(|(a, b)| format!("{}-{}", cl.induced.label(a), cl.induced.label(b)))
                    .collect();
                let _ = writeln!(
                    out,
                    "    V{sign}_{} = {}; degrees {:?}; induced edges [{}]",
                    cl.degree,
                    self.set_str(&cl.vertices),
                    cl.graph_degrees,
                    edges.join(", ")
                );
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let hist = |h: &BTreeMap<usize, usize>| -> Value {
            h.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>().into()
        };
        let class_json = |cs: &[VertexClass]| -> Value {
            cs.iter()
                .map(|c| {
                    json!({
                        "d": c.degree,
                        "vertices": self.names(&c.vertices),
                        "graph_degrees": c.graph_degrees,
                        "induced_edges": c.induced.edges().map(|(a, b)| [c.induced.label(a), c.induced.label(b)]).collect::<Vec<_>>(),
                        "certificate": c.certificate,
                    })
                })
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "lambda": fmt_rational(&self.lambda),
            "k_lambda": self.k_lambda,
            "ss_count": self.ss_count,
            "star_sets": self.star_sets.iter().map(|i| json!({
                "X": self.names(&i.star_set.star),
                "main": self.names(&i.main_vertices),
            })).collect::<Vec<_>>(),
            "aleph": {"max": self.aleph_max, "min": self.aleph_min},
            "histograms": {
                "main_size": hist(&self.main_size_histogram),
                "plus_degree": hist(&self.plus_degree_histogram),
                "minus_degree": hist(&self.minus_degree_histogram),
            },
            "extremes": {
                "delta_plus": self.delta_plus,
                "Delta_plus": self.big_delta_plus,
                "delta_minus": self.delta_minus,
                "Delta_minus": self.big_delta_minus,
            },
            "degree_table": (0..self.labels.len()).map(|v| json!({
                "vertex": self.labels[v],
                "d_plus": self.degree_table.d_plus[v],
                "d_minus": self.degree_table.d_minus[v],
            })).collect::<Vec<_>>(),
            "classes": {"plus": class_json(&self.plus_classes), "minus": class_json(&self.minus_classes)},
        })
    }
}
