//! Non-isomorphism screening from spectra and star-set invariants.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, Rational};
use crate::graphio::Graph;
use crate::invariants::{report, InvariantReport, VertexClass};
use crate::spectral::{cospectral, main_eigenvalue_count, rational_spectrum};
use crate::starsets::{default_cap, enumerate_star_sets};

pub const DEFAULT_SMALL_ISO_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoStatus {
    NotIsomorphic,
    Inconclusive,
}

impl fmt::Display for IsoStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoStatus::NotIsomorphic => "NotIsomorphic",
            IsoStatus::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// `counts`, `degree-sequence`, `spectrum`, `main-eigenvalues`, or `a`..`h`.
    pub condition: String,
    pub lambda: Option<Rational>,
    pub detail: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsoVerdict {
    pub status: IsoStatus,
    pub witnesses: Vec<Witness>,
    /// Both graphs are regular, where these invariants cannot separate
    /// cospectral graphs.
    pub regular_caveat: bool,
    pub notes: Vec<String>,
}

impl IsoVerdict {
    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.to_string(),
            "regular_caveat": self.regular_caveat,
            "witnesses": self.witnesses.iter().map(|w| json!({
                "condition": w.condition,
                "lambda": w.lambda.as_ref().map(fmt_rational),
                "detail": w.detail,
                "left": w.left,
                "right": w.right,
                "pass": w.pass,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }

    pub fn to_ascii(&self) -> String {
        let mut out = format!("status: {}\n", self.status);
        for w in &self.witnesses {
            let lam = w.lambda.as_ref().map(|l| format!(" [lambda={}]", fmt_rational(l))).unwrap_or_default();
            out.push_str(&format!(
                "{} {}{lam} {}: {} vs {}\n",
                if w.pass { "pass" } else { "FAIL" },
                w.condition,
                w.detail,
                w.left,
                w.right
            ));
        }
        if self.regular_caveat {
            out.push_str("note: both graphs are regular; these invariants cannot separate cospectral regular graphs\n");
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CompareOptions {
    /// Enumeration cap; `None` uses `C(n, k)` for each graph.
    pub cap: Option<usize>,
    pub small_iso_limit: usize,
    /// Stop at the first failing condition.
    pub fail_fast: bool,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            cap: None,
            small_iso_limit: DEFAULT_SMALL_ISO_LIMIT,
            fail_fast: false,
        }
    }
}

struct Log<'a> {
    opts: &'a CompareOptions,
    witnesses: Vec<Witness>,
}

impl Log<'_> {
    /// Records a comparison; returns true when the caller should stop.
    fn check<T: PartialEq + fmt::Debug>(&mut self, condition: &str, lambda: Option<&Rational>, detail: &str, left: T, right: T) -> bool {
        let pass = left == right;
        self.witnesses.push(Witness {
            condition: condition.to_string(),
            lambda: lambda.cloned(),
            detail: detail.to_string(),
            left: format!("{left:?}"),
            right: format!("{right:?}"),
            pass,
        });
        !pass && self.opts.fail_fast
    }
}

fn rational_list(v: &[Rational]) -> String {
    format!("{{{}}}", v.iter().map(fmt_rational).collect::<Vec<_>>().join(", "))
}

/// Runs the screen. `NotIsomorphic` iff some recorded condition failed.
pub fn compare(g: &Graph, h: &Graph, opts: &CompareOptions) -> Result<IsoVerdict> {
    let mut log = Log { opts, witnesses: Vec::new() };
    let mut notes = Vec::new();
    let regular_caveat = g.is_regular() && h.is_regular();
    let finish = |log: Log, notes: Vec<String>| {
        let status = if log.witnesses.iter().any(|w| !w.pass) {
            IsoStatus::NotIsomorphic
        } else {
            IsoStatus::Inconclusive
        };
        Ok(IsoVerdict {
            status,
            witnesses: log.witnesses,
            regular_caveat,
            notes,
        })
    };

    if log.check("counts", None, "vertices, edges", (g.order(), g.size()), (h.order(), h.size()))
        || log.check("degree-sequence", None, "sorted degrees", g.degree_sequence(), h.degree_sequence())
    {
        return finish(log, notes);
    }
    let (sg, sh) = (rational_spectrum(g), rational_spectrum(h));
    let same_poly = cospectral(g, h);
    log.witnesses.push(Witness {
        condition: "spectrum".into(),
        lambda: None,
        detail: "characteristic polynomial".into(),
        left: sg.char_poly.to_string(),
        right: sh.char_poly.to_string(),
        pass: same_poly,
    });
    if !same_poly && opts.fail_fast {
        return finish(log, notes);
    }
    let (mg, mh) = (sg.main_eigenvalues(), sh.main_eigenvalues());
    let main_pass = mg == mh;
    let differing: Vec<Rational> = mg.iter().filter(|l| !mh.contains(l)).chain(mh.iter().filter(|l| !mg.contains(l))).cloned().collect();
    log.witnesses.push(Witness {
        condition: "main-eigenvalues".into(),
        lambda: None,
        detail: if main_pass {
            "rational main eigenvalues".into()
        } else {
            format!("main eigenvalue sets differ at {}", differing.iter().map(fmt_rational).collect::<Vec<_>>().join(", "))
        },
        left: rational_list(&mg),
        right: rational_list(&mh),
        pass: main_pass,
    });
    if !main_pass && opts.fail_fast {
        return finish(log, notes);
    }

    for lambda in mg.iter().filter(|l| mh.contains(l)) {
        let cap_g = opts.cap.unwrap_or_else(|| default_cap(g, lambda));
        let cap_h = opts.cap.unwrap_or_else(|| default_cap(h, lambda));
        let rg = report(&enumerate_star_sets(g, lambda, cap_g)?, g)?;
        let rh = report(&enumerate_star_sets(h, lambda, cap_h)?, h)?;
        if screen_eigenvalue(&mut log, &mut notes, lambda, &rg, &rh)? {
            return finish(log, notes);
        }
    }

    let unscreened = |g: &Graph, main: &[Rational]| main_eigenvalue_count(g) - main.len();
    let (ug, uh) = (unscreened(g, &mg), unscreened(h, &mh));
    if ug > 0 || uh > 0 {
        notes.push(format!("unscreened eigenvalues present: {ug} and {uh} irrational main eigenvalue(s)"));
    }
    finish(log, notes)
}

/// Conditions (a) to (h) at one shared main eigenvalue.
fn screen_eigenvalue(log: &mut Log, notes: &mut Vec<String>, lambda: &Rational, a: &InvariantReport, b: &InvariantReport) -> Result<bool> {
    let l = Some(lambda);
    if log.check("a", l, "|SS|", a.ss_count, b.ss_count)
        || log.check("b", l, "(aleph_max, aleph_min)", (a.aleph_max, a.aleph_min), (b.aleph_max, b.aleph_min))
        || log.check("c", l, "main-size histogram", &a.main_size_histogram, &b.main_size_histogram)
        || log.check("d", l, "(delta+, Delta+)", (a.delta_plus, a.big_delta_plus), (b.delta_plus, b.big_delta_plus))
        || log.check("e", l, "(delta-, Delta-)", (a.delta_minus, a.big_delta_minus), (b.delta_minus, b.big_delta_minus))
        || log.check("f", l, "main-degree histogram", &a.plus_degree_histogram, &b.plus_degree_histogram)
        || log.check("g", l, "non-main-degree histogram", &a.minus_degree_histogram, &b.minus_degree_histogram)
    {
        return Ok(true);
    }
    for (sign, ca, cb) in [("+", &a.plus_classes, &b.plus_classes), ("-", &a.minus_classes, &b.minus_classes)] {
        let by_degree = |cs: &[VertexClass]| cs.iter().map(|c| (c.degree, c.clone())).collect::<BTreeMap<_, _>>();
        let (ma, mb) = (by_degree(ca), by_degree(cb));
        let keys: std::collections::BTreeSet<usize> = ma.keys().chain(mb.keys()).copied().collect();
        for d in keys {
            let name = format!("V{sign}_{d}");
            let (x, y) = (ma.get(&d), mb.get(&d));
            if log.check("h", l, &format!("{name} size"), x.map_or(0, |c| c.vertices.len()), y.map_or(0, |c| c.vertices.len())) {
                return Ok(true);
            }
            let (Some(x), Some(y)) = (x, y) else { continue };
            if log.check("h", l, &format!("{name} graph degrees"), &x.graph_degrees, &y.graph_degrees) {
                return Ok(true);
            }
            match small_iso_with_limit(&x.induced, &y.induced, log.opts.small_iso_limit) {
                Ok(iso) => {
                    if log.check("h", l, &format!("{name} induced subgraphs isomorphic"), iso, true) {
                        return Ok(true);
                    }
                }
                Err(Error::SizeLimit { n, limit }) => {
                    notes.push(format!("{name} at lambda={}: induced subgraph on {n} vertices exceeds the isomorphism limit {limit}; compared by certificate only", fmt_rational(lambda)));
                    if log.check("h", l, &format!("{name} induced certificate"), &x.certificate, &y.certificate) {
                        return Ok(true);
                    }
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(false)
}

/// Exact isomorphism test for graphs up to the default size limit.
pub fn small_iso(a: &Graph, b: &Graph) -> Result<bool> {
    small_iso_with_limit(a, b, DEFAULT_SMALL_ISO_LIMIT)
}

pub fn small_iso_with_limit(a: &Graph, b: &Graph, limit: usize) -> Result<bool> {
    for g in [a, b] {
        if g.order() > limit {
            return Err(Error::SizeLimit { n: g.order(), limit });
        }
    }
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    let n = a.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(a, b, &order, 0, &mut map, &mut used))
}

fn extend(a: &Graph, b: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.order() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            used[w] = true;
            if extend(a, b, order, depth + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

/// Colour-refinement fingerprint: equal for isomorphic graphs, though two
/// non-isomorphic graphs may share one.
pub fn certificate(g: &Graph) -> String {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out = format!("n{}m{}", n, g.size());
    for _ in 0..n.max(1) {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        let mut hist: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            *hist.entry(s).or_insert(0) += 1;
        }
        out.push('|');
        out.push_str(&hist.iter().map(|((c, nb), k)| format!("{c}:{nb:?}x{k}")).collect::<Vec<_>>().join(";"));
        let stable = distinct.len() == colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        colors = next;
        if stable {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphio::{corpus, named};

    #[test]
    fn small_iso_examples() {
        assert!(!small_iso(&named("C4").unwrap(), &named("P4").unwrap()).unwrap());
        let k1k2 = Graph::empty(1).disjoint_union(&named("K2").unwrap());
        assert!(!small_iso(&k1k2, &named("K3").unwrap()).unwrap());
        let g = corpus("G").unwrap();
        let f = corpus("F").unwrap();
        let cg = g.induced_subgraph(&g.parse_vertex_set("g3,g4,g6,g7").unwrap()).unwrap();
        let cf = f.induced_subgraph(&f.parse_vertex_set("f1,f2,f3,f4").unwrap()).unwrap();
        assert!(small_iso(&cg, &cf).unwrap());
        assert_eq!(small_iso(&named("K11").unwrap(), &named("K11").unwrap()), Err(Error::SizeLimit { n: 11, limit: 10 }));
        let p = corpus("petersen").unwrap();
        let q = p.permuted(&[3, 1, 4, 0, 9, 2, 6, 5, 8, 7]).unwrap();
        assert!(small_iso(&p, &q).unwrap());
    }

    #[test]
    fn certificate_is_invariant() {
        let g = corpus("G").unwrap();
        let perm = [6, 2, 0, 5, 1, 4, 3];
        assert_eq!(certificate(&g), certificate(&g.permuted(&perm).unwrap()));
        assert_ne!(certificate(&g), certificate(&corpus("F").unwrap()));
    }

    #[test]
    fn g_versus_h() {
        let v = compare(&corpus("G").unwrap(), &corpus("H").unwrap(), &CompareOptions::default()).unwrap();
        assert_eq!(v.status, IsoStatus::NotIsomorphic);
        let w = v.witnesses.iter().find(|w| w.condition == "main-eigenvalues").unwrap();
        assert!(!w.pass);
        assert_eq!(w.detail, "main eigenvalue sets differ at 0");
        assert_eq!((w.left.as_str(), w.right.as_str()), ("{0}", "{}"));
    }

    #[test]
    fn g_versus_f() {
        let v = compare(&corpus("G").unwrap(), &corpus("F").unwrap(), &CompareOptions::default()).unwrap();
        assert_eq!(v.status, IsoStatus::NotIsomorphic);
        for cond in ["a", "b", "c", "d", "e", "f", "g"] {
            assert!(v.witnesses.iter().filter(|w| w.condition == cond).all(|w| w.pass), "{cond}");
        }
        let w = v.witnesses.iter().find(|w| w.detail == "V+_4 graph degrees").unwrap();
        assert!(!w.pass);
        assert_eq!((w.left.as_str(), w.right.as_str()), ("[1]", "[2]"));
    }

    #[test]
    fn self_comparison_is_inconclusive() {
        for name in ["G", "fig1", "petersen"] {
            let g = corpus(name).unwrap();
            let v = compare(&g, &g, &CompareOptions::default()).unwrap();
            assert_eq!(v.status, IsoStatus::Inconclusive, "{name}");
            assert_eq!(v.failures().count(), 0);
        }
        let p = corpus("petersen").unwrap();
        assert!(compare(&p, &p, &CompareOptions::default()).unwrap().regular_caveat);
    }

    #[test]
    fn fail_fast_stops_early() {
        let opts = CompareOptions { fail_fast: true, ..Default::default() };
        let v = compare(&corpus("G").unwrap(), &corpus("H").unwrap(), &opts).unwrap();
        assert_eq!(v.status, IsoStatus::NotIsomorphic);
        assert_eq!(v.witnesses.last().unwrap().condition, "degree-sequence");
    }
}
