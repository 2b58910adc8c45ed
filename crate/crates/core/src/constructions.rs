//! Cones over strongly regular graphs and the edgeless / complete star
//! complement propositions, checked on concrete graphs.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, rat, Rational};
use crate::graphio::{Graph, VertexSet};
use crate::spectral::{eigen_data, multiplicity, rational_spectrum, SpectrumReport};
use crate::starsets::{build_tableau, classify, default_cap, enumerate_star_sets, verify_star_set};

pub use crate::graphio::corpus::{complete, complete_bipartite, cycle, path, petersen};

/// `K1 ∇ h`: a new vertex 0 joined to every vertex of `h`.
pub fn cone(h: &Graph) -> Graph {
    let apex = Graph::empty(1);
    let g = apex.join(h);
    match h.labels() {
        Some(l) => {
            let labels = std::iter::once("apex".to_string()).chain(l.iter().cloned());
            g.with_labels(labels).unwrap_or_else(|_| apex.join(h))
        }
        None => g,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda_adj: usize,
    pub mu_adj: usize,
}

fn common_neighbours(g: &Graph, u: usize, v: usize) -> usize {
    g.neighbors(u).filter(|&w| g.has_edge(v, w)).count()
}

/// Parameters of a strongly regular graph. Complete and edgeless graphs are
/// rejected, since they lack one of the two kinds of vertex pair.
pub fn srg_params(h: &Graph) -> Result<SrgParams> {
    let n = h.order();
    if !h.is_regular() {
        return Err(Error::NotSrg("graph is not regular".into()));
    }
    if n < 2 || h.size() == 0 {
        return Err(Error::NotSrg("graph has no adjacent pair".into()));
    }
    if h.size() == n * (n - 1) / 2 {
        return Err(Error::NotSrg("graph is complete".into()));
    }
    let mut adj = None;
    let mut non = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = common_neighbours(h, u, v);
            let slot = if h.has_edge(u, v) { &mut adj } else { &mut non };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => {
                    let kind = if h.has_edge(u, v) { "adjacent" } else { "non-adjacent" };
                    return Err(Error::NotSrg(format!("{kind} pairs have {prev} and {c} common neighbours")));
                }
                _ => {}
            }
        }
    }
    let p = SrgParams {
        n,
        k: h.degree(0),
        lambda_adj: adj.expect("graph has an edge"),
        mu_adj: non.expect("graph is not complete"),
    };
    debug_assert_eq!(p.k * (p.k - p.lambda_adj - 1), (p.n - p.k - 1) * p.mu_adj);
    Ok(p)
}

/// Outcome of the cone test on a strongly regular `h` with spectrum
/// `{ν, μ^kμ, λ^kλ}`.
#[derive(Clone, Debug)]
pub struct ConeReport {
    pub params: SrgParams,
    pub nu: Rational,
    /// The restricted eigenvalue that stays non-main.
    pub mu: Rational,
    /// The restricted eigenvalue tested against `λ(ν - λ) = -n`; when the
    /// identity holds for neither, the smaller one.
    pub lambda: Rational,
    pub identity_holds: bool,
    pub identity: String,
    /// Present only when the identity holds.
    pub cone: Option<ConeSpectrumCheck>,
}

#[derive(Clone, Debug)]
pub struct ConeSpectrumCheck {
    pub rho: Rational,
    pub spectrum: SpectrumReport,
    pub three_distinct: bool,
    /// Main eigenvalues of the cone are exactly `{ρ, λ}`.
    pub main_is_rho_lambda: bool,
    pub lambda_multiplicity_grew: bool,
    pub mu_non_main: bool,
}

impl ConeSpectrumCheck {
    pub fn all_hold(&self) -> bool {
        self.three_distinct && self.main_is_rho_lambda && self.lambda_multiplicity_grew && self.mu_non_main
    }
}

impl ConeReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.cone.as_ref().is_some_and(ConeSpectrumCheck::all_hold)
    }

    pub fn to_ascii(&self) -> String {
        let p = &self.params;
        let mut out = format!(
            "srg({}, {}, {}, {}), spectrum nu={}, mu={}, lambda={}\n{}\n",
            p.n,
            p.k,
            p.lambda_adj,
            p.mu_adj,
            fmt_rational(&self.nu),
            fmt_rational(&self.mu),
            fmt_rational(&self.lambda),
            self.identity
        );
        if let Some(c) = &self.cone {
            let flag = |b: bool| if b { "pass" } else { "FAIL" };
            out.push_str(&format!("cone spectrum: {}\n", c.spectrum.to_ascii()));
            out.push_str(&format!("{} three distinct eigenvalues\n", flag(c.three_distinct)));
            out.push_str(&format!(
                "{} main eigenvalues are {} and {}\n",
                flag(c.main_is_rho_lambda),
                fmt_rational(&c.rho),
                fmt_rational(&self.lambda)
            ));
            out.push_str(&format!("{} multiplicity of {} grew by one\n", flag(c.lambda_multiplicity_grew), fmt_rational(&self.lambda)));
            out.push_str(&format!("{} {} is non-main in the cone\n", flag(c.mu_non_main), fmt_rational(&self.mu)));
        }
        out.push_str(if self.passed() { "result: pass\n" } else { "result: FAIL\n" });
        out
    }

    pub fn to_json(&self) -> Value {
        let p = &self.params;
        json!({
            "srg": {"n": p.n, "k": p.k, "lambda": p.lambda_adj, "mu": p.mu_adj},
            "nu": fmt_rational(&self.nu),
            "mu": fmt_rational(&self.mu),
            "lambda": fmt_rational(&self.lambda),
            "identity_holds": self.identity_holds,
            "identity": self.identity,
            "cone": self.cone.as_ref().map(|c| json!({
                "rho": fmt_rational(&c.rho),
                "spectrum": c.spectrum.to_json(),
                "three_distinct": c.three_distinct,
                "main_is_rho_lambda": c.main_is_rho_lambda,
                "lambda_multiplicity_grew": c.lambda_multiplicity_grew,
                "mu_non_main": c.mu_non_main,
            })),
            "passed": self.passed(),
        })
    }
}

fn paren(r: &Rational) -> String {
    format!("({})", fmt_rational(r))
}

/// Tests `λ(ν - λ) = -n` and, when it holds, checks that the cone has three
/// distinct eigenvalues with main part `{ρ, λ}` and λ one more time.
pub fn cone_three_eigenvalue_check(h: &Graph) -> Result<ConeReport> {
    let params = srg_params(h)?;
    let spectrum = rational_spectrum(h);
    if spectrum.residual_degree > 0 {
        return Err(Error::IrrationalSpectrum {
            residual_degree: spectrum.residual_degree,
        });
    }
    if spectrum.entries.len() != 3 {
        return Err(Error::NotSrg(format!("expected three distinct eigenvalues, found {}", spectrum.entries.len())));
    }
    let nu = rat(params.k as i64);
    let n = rat(params.n as i64);
    // entries are in decreasing order and ν = k comes first
    let (r, s) = (spectrum.entries[1].lambda.clone(), spectrum.entries[2].lambda.clone());
    let holds = |l: &Rational| l * &(&nu - l) == -n.clone();
    let (lambda, mu) = if holds(&s) {
        (s, r)
    } else if holds(&r) {
        (r, s)
    } else {
        (s, r)
    };
    let product = &lambda * &(&nu - &lambda);
    let identity_holds = product == -n.clone();
    let identity = if identity_holds {
        format!("{}({}-{}) = {} = -n", paren(&lambda), fmt_rational(&nu), paren(&lambda), fmt_rational(&product))
    } else {
        format!(
            "{}({}-{}) = {} != -n = {}",
            paren(&lambda),
            fmt_rational(&nu),
            paren(&lambda),
            fmt_rational(&product),
            fmt_rational(&-n.clone())
        )
    };
    let cone_check = if identity_holds {
        let c = cone(h);
        let cs = rational_spectrum(&c);
        let rho = &nu - &lambda;
        let mut main = cs.main_eigenvalues();
        main.sort();
        let mut expect = vec![rho.clone(), lambda.clone()];
        expect.sort();
        let base_mult = multiplicity(h, &lambda);
        Some(ConeSpectrumCheck {
            three_distinct: cs.residual_degree == 0 && cs.entries.len() == 3,
            main_is_rho_lambda: main == expect,
            lambda_multiplicity_grew: multiplicity(&c, &lambda) == base_mult + 1,
            mu_non_main: cs.get(&mu).is_some_and(|e| !e.is_main),
            rho,
            spectrum: cs,
        })
    } else {
        None
    };
    Ok(ConeReport {
        params,
        nu,
        mu,
        lambda,
        identity_holds,
        identity,
        cone: cone_check,
    })
}

/// Some λ-star set has every vertex main, i.e. `ℵ_max(λ) = k_λ`.
pub fn verify_aleph_equals_starset(g: &Graph, lambda: &Rational) -> Result<bool> {
    let c = enumerate_star_sets(g, lambda, default_cap(g, lambda))?;
    Ok(c.items.iter().any(|i| i.main_vertices == i.star_set.star))
}

/// Per-vertex outcome for the star set `X = V \ co_star`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMainness {
    pub vertex: usize,
    /// Non-zero reduced cost in the tableau of `X`.
    pub via_tableau: bool,
    /// λ is main in `G[co_star ∪ {v}]`, computed from its eigenbasis.
    pub via_extension: bool,
}

#[derive(Clone, Debug)]
pub struct PropositionCheck {
    pub lambda: Rational,
    pub star_set: VertexSet,
    pub co_star: VertexSet,
    pub lambda_main: bool,
    pub vertices: Vec<VertexMainness>,
    /// `|Main(X)|`; the claim is that it equals `n - t`.
    pub main_count: usize,
    pub expected: usize,
}

impl PropositionCheck {
    pub fn routes_agree(&self) -> bool {
        self.vertices.iter().all(|v| v.via_tableau == v.via_extension)
    }

    pub fn passed(&self) -> bool {
        self.lambda_main && self.routes_agree() && self.main_count == self.expected
    }

    pub fn to_ascii(&self, g: &Graph) -> String {
        let flag = |b: bool| if b { "pass" } else { "FAIL" };
        let mut out = format!(
            "lambda = {}, X = {}, co-star = {}\n",
            fmt_rational(&self.lambda),
            g.format_set(&self.star_set),
            g.format_set(&self.co_star)
        );
        out.push_str(&format!("{} lambda is main\n", flag(self.lambda_main)));
        out.push_str(&format!("{} |Main(X)| = {} = n - t = {}\n", flag(self.main_count == self.expected), self.main_count, self.expected));
        out.push_str(&format!("{} tableau and one-vertex extensions agree\n", flag(self.routes_agree())));
        out.push_str(if self.passed() { "result: pass\n" } else { "result: FAIL\n" });
        out
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        json!({
            "lambda": fmt_rational(&self.lambda),
            "star_set": self.star_set.iter().map(|v| g.label(v)).collect::<Vec<_>>(),
            "co_star": self.co_star.iter().map(|v| g.label(v)).collect::<Vec<_>>(),
            "lambda_main": self.lambda_main,
            "main_count": self.main_count,
            "expected": self.expected,
            "vertices": self.vertices.iter().map(|v| json!({
                "vertex": g.label(v.vertex),
                "via_tableau": v.via_tableau,
                "via_extension": v.via_extension,
            })).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(msg.to_string()))
    }
}

fn require_co_star(g: &Graph, lambda: &Rational, co_star: &VertexSet) -> Result<VertexSet> {
    co_star.check(g.order())?;
    require(multiplicity(g, lambda) > 0, "lambda is not an eigenvalue of the graph")?;
    let x = co_star.complement(g.order());
    require(verify_star_set(g, lambda, &x), "the given vertices are not a lambda-co-star set")?;
    Ok(x)
}

fn evaluate(g: &Graph, lambda: &Rational, x: VertexSet, co_star: &VertexSet) -> Result<PropositionCheck> {
    let t = build_tableau(g, lambda, &x)?;
    let main = classify(&t).main_vertices;
    let vertices = x
        .iter()
        .map(|v| {
            let ext = g.induced_subgraph(&co_star.with(v))?;
            let via_extension = match eigen_data(&ext, lambda) {
                Ok(e) => e.is_main,
                Err(Error::NotAnEigenvalue(_)) => false,
                Err(e) => return Err(e),
            };
            Ok(VertexMainness {
                vertex: v,
                via_tableau: main.contains(v),
                via_extension,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PropositionCheck {
        lambda: lambda.clone(),
        lambda_main: eigen_data(g, lambda)?.is_main,
        main_count: main.len(),
        expected: x.len(),
        star_set: x,
        co_star: co_star.clone(),
        vertices,
    })
}

/// Edgeless star complement `tK1` for `λ ∉ {0, -1}`: λ is main and every
/// vertex of the star set is λ-main.
pub fn check_tk1_proposition(g: &Graph, lambda: &Rational, co_star: &VertexSet) -> Result<PropositionCheck> {
    co_star.check(g.order())?;
    require(!co_star.is_empty(), "star complement tK1 needs t >= 1")?;
    require(g.induced_subgraph(co_star)?.size() == 0, "star complement must be edgeless (tK1)")?;
    require(!lambda.is_zero(), "lambda = 0 is an eigenvalue of tK1")?;
    require(*lambda != -Rational::one(), "lambda = -1 is excluded for tK1 star complements")?;
    let x = require_co_star(g, lambda, co_star)?;
    evaluate(g, lambda, x, co_star)
}

/// Complete star complement `K_t`, `t >= 2`, for a main `λ != 0`: every
/// vertex of the star set is λ-main.
pub fn check_kt_proposition(g: &Graph, lambda: &Rational, co_star: &VertexSet) -> Result<PropositionCheck> {
    co_star.check(g.order())?;
    let t = co_star.len();
    require(t >= 2, "star complement K_t needs t >= 2")?;
    require(g.induced_subgraph(co_star)?.size() == t * (t - 1) / 2, "star complement must be complete (K_t)")?;
    require(!lambda.is_zero(), "lambda = 0 is excluded for K_t star complements")?;
    let x = require_co_star(g, lambda, co_star)?;
    require(eigen_data(g, lambda)?.is_main, "lambda must be a main eigenvalue")?;
    evaluate(g, lambda, x, co_star)
}
