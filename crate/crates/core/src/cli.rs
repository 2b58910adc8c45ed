//! Command-line front end. Exit codes: 0 success (or an inconclusive
//! isomorphism screen), 1 `NotIsomorphic` or a failed verification, 2 error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::constructions::{check_kt_proposition, check_tk1_proposition, cone_three_eigenvalue_check};
use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, parse_rational, Rational};
use crate::graphio::{corpus_names, named, parse_graphs, to_edge_list, to_graph6, to_json, Graph, GraphFormat};
use crate::invariants::{aleph, report};
use crate::isocheck::{compare, CompareOptions, IsoStatus, DEFAULT_SMALL_ISO_LIMIT};
use crate::spectral::rational_spectrum;
use crate::starsets::{build_tableau, default_cap, enumerate_from, enumerate_star_sets, StarSetCatalog};

#[derive(Parser, Debug)]
#[command(name = "starkit", version, about = "Exact star sets and main-vertex invariants of graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Input format for graph files; inferred from the extension when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<GraphFormat>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Ascii)]
    output: Output,
    /// Star-set enumeration cap; defaults to C(n, k).
    #[arg(long, global = true, env = "STARKIT_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Treat the input as graph6, one graph per line, and report each line.
    #[arg(long, global = true)]
    batch: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Ascii,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rational spectrum with multiplicities and main eigenvalues.
    Spectrum { graph: String },
    /// All star sets for one eigenvalue with their main vertices.
    Starsets {
        graph: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda)]
        lambda: Rational,
        /// Print the tableau of every star set.
        #[arg(long)]
        tableaux: bool,
        /// Start the search from this star set, e.g. `g6,g7`.
        #[arg(long)]
        seed_star_set: Option<String>,
    },
    /// Star-set invariants and the membership table.
    Invariants {
        graph: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda)]
        lambda: Rational,
        #[arg(long)]
        seed_star_set: Option<String>,
    },
    /// Screens two graphs for non-isomorphism. With --batch, compares every
    /// pair of lines in one graph6 file.
    Isocheck {
        first: String,
        second: Option<String>,
        /// Stop at the first failing condition.
        #[arg(long)]
        fail_fast: bool,
        /// Largest induced subgraph given to the exhaustive isomorphism test.
        #[arg(long, default_value_t = DEFAULT_SMALL_ISO_LIMIT)]
        iso_limit: usize,
    },
    /// Checks one of the cone / tK1 / K_t / aleph-max statements on a graph.
    Verify {
        #[arg(value_enum)]
        check: Check,
        graph: String,
        #[arg(allow_hyphen_values = true, value_parser = parse_lambda)]
        lambda_pos: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda)]
        lambda: Option<Rational>,
        /// Vertices of the star complement, e.g. `0,1,2,3`.
        #[arg(long)]
        co_star: Option<String>,
    },
    /// Built-in graphs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Cone,
    Tk1,
    Kt,
    AlephMax,
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    List,
    /// Writes a named graph in the chosen --format (graph6 by default).
    Emit { name: String },
}

fn parse_format(s: &str) -> std::result::Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lambda(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Result of one command: text for stdout plus the exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn infer_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => GraphFormat::Json,
        Some("txt" | "edges" | "el") => GraphFormat::Edges,
        _ => GraphFormat::Graph6,
    }
}

/// A file path, `-` for stdin, or a built-in name such as `petersen` or `K5`.
fn load_all(source: &str, common: &Common) -> Result<Vec<Result<Graph>>> {
    let path = Path::new(source);
    let text = if source == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        Some(s)
    } else if path.is_file() {
        Some(std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{source}: {e}")))?)
    } else {
        None
    };
    match text {
        Some(t) => {
            let format = if common.batch { GraphFormat::Graph6 } else { common.format.unwrap_or_else(|| infer_format(path)) };
            Ok(parse_graphs(&t, format))
        }
        None => Ok(vec![named(source)]),
    }
}

fn load_one(source: &str, common: &Common) -> Result<Graph> {
    let mut graphs = load_all(source, common)?;
    match graphs.len() {
        0 => Err(Error::InvalidInput(format!("{source}: no graph found"))),
        1 => graphs.pop().expect("one graph"),
        n => Err(Error::InvalidInput(format!("{source}: holds {n} graphs; use --batch"))),
    }
}

fn cap_for(common: &Common, g: &Graph, lambda: &Rational) -> usize {
    common.cap.map_or_else(|| default_cap(g, lambda), |c| usize::try_from(c).unwrap_or(usize::MAX))
}

/// Runs `f` on every graph of the input. Outside batch mode this is a single
/// call; in batch mode lines run in parallel and are reported in order.
fn per_graph(source: &str, common: &Common, f: impl Fn(&Graph) -> Result<(String, Value)> + Sync) -> Result<Outcome> {
    if !common.batch {
        let g = load_one(source, common)?;
        let (text, value) = f(&g)?;
        return Ok(Outcome::ok(match common.output {
            Output::Ascii => text,
            Output::Json => render(&value),
        }));
    }
    let inputs = load_all(source, common)?;
    let results: Vec<Result<(String, Value)>> = inputs.par_iter().map(|g| g.as_ref().map_err(Clone::clone).and_then(&f)).collect();
    let failed = results.iter().any(|r| r.is_err());
    let text = match common.output {
        Output::Ascii => results
            .iter()
            .enumerate()
            .map(|(i, r)| match r {
                Ok((t, _)) => format!("# graph {}\n{t}", i + 1),
                Err(e) => format!("# graph {}\nerror: {e}\n", i + 1),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Output::Json => render(&Value::Array(
            results
                .iter()
                .enumerate()
                .map(|(i, r)| match r {
                    Ok((_, v)) => json!({"index": i + 1, "result": v}),
                    Err(e) => json!({"index": i + 1, "error": e.to_string()}),
                })
                .collect(),
        )),
    };
    Ok(Outcome {
        text,
        code: if failed { 2 } else { 0 },
    })
}

fn catalog(g: &Graph, lambda: &Rational, seed: Option<&str>, common: &Common) -> Result<StarSetCatalog> {
    let cap = cap_for(common, g, lambda);
    match seed {
        Some(s) => enumerate_from(g, lambda, &g.parse_vertex_set(s)?, cap),
        None => enumerate_star_sets(g, lambda, cap),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.command {
        Command::Spectrum { graph } => per_graph(graph, common, |g| {
            let s = rational_spectrum(g);
            let text = format!("{}\ncharacteristic polynomial: {}\n", s.to_ascii(), s.char_poly);
            Ok((text, s.to_json()))
        }),
        Command::Starsets {
            graph,
            lambda,
            tableaux,
            seed_star_set,
        } => per_graph(graph, common, |g| {
            let c = catalog(g, lambda, seed_star_set.as_deref(), common)?;
            starsets_output(g, &c, *tableaux)
        }),
        Command::Invariants { graph, lambda, seed_star_set } => per_graph(graph, common, |g| {
            let r = report(&catalog(g, lambda, seed_star_set.as_deref(), common)?, g)?;
            Ok((r.to_ascii(), r.to_json()))
        }),
        Command::Isocheck {
            first,
            second,
            fail_fast,
            iso_limit,
        } => {
            let opts = CompareOptions {
                cap: common.cap.map(|c| usize::try_from(c).unwrap_or(usize::MAX)),
                small_iso_limit: *iso_limit,
                fail_fast: *fail_fast,
            };
            if common.batch {
                if second.is_some() {
                    return Err(Error::InvalidInput("--batch isocheck takes a single graph6 file".into()));
                }
                return isocheck_batch(first, common, &opts);
            }
            let second = second.as_deref().ok_or_else(|| Error::InvalidInput("isocheck needs two graphs".into()))?;
            let (g, h) = (load_one(first, common)?, load_one(second, common)?);
            let v = compare(&g, &h, &opts)?;
            let text = match common.output {
                Output::Ascii => v.to_ascii(),
                Output::Json => render(&v.to_json()),
            };
            Ok(Outcome {
                text,
                code: if v.status == IsoStatus::NotIsomorphic { 1 } else { 0 },
            })
        }
        Command::Verify {
            check,
            graph,
            lambda_pos,
            lambda,
            co_star,
        } => {
            let g = load_one(graph, common)?;
            let lambda = lambda.clone().or_else(|| lambda_pos.clone());
            verify(*check, &g, lambda, co_star.as_deref(), common)
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                let text: String = corpus_names().iter().map(|n| format!("{n}\n")).collect();
                Ok(match common.output {
                    Output::Ascii => Outcome::ok(text),
                    Output::Json => Outcome::ok(render(&json!(corpus_names()))),
                })
            }
            CorpusAction::Emit { name } => {
                let g = named(name)?;
                let text = match common.format.unwrap_or(GraphFormat::Graph6) {
                    GraphFormat::Graph6 => format!("{}\n", to_graph6(&g)),
                    GraphFormat::Edges => to_edge_list(&g),
                    GraphFormat::Json => format!("{}\n", to_json(&g)),
                };
                Ok(Outcome::ok(text))
            }
        },
    }
}

fn starsets_output(g: &Graph, c: &StarSetCatalog, tableaux: bool) -> Result<(String, Value)> {
    let lam = fmt_rational(&c.lambda);
    let mut text = format!("lambda = {lam}, k = {}, {} star set(s)\n", c.k_lambda, c.len());
    let mut items = Vec::new();
    for item in &c.items {
        let x = &item.star_set.star;
        text.push_str(&format!("X = {}  Main = {}\n", g.format_set(x), g.format_set(&item.main_vertices)));
        let mut entry = json!({
            "X": x.iter().map(|v| g.label(v)).collect::<Vec<_>>(),
            "main": item.main_vertices.iter().map(|v| g.label(v)).collect::<Vec<_>>(),
        });
        if tableaux {
            let t = build_tableau(g, &c.lambda, x)?;
            text.push_str(&t.to_ascii(None));
            text.push('\n');
            entry["tableau"] = t.to_json();
        }
        items.push(entry);
    }
    Ok((
        text,
        json!({"lambda": lam, "k_lambda": c.k_lambda, "complete": c.complete, "star_sets": items}),
    ))
}

fn isocheck_batch(source: &str, common: &Common, opts: &CompareOptions) -> Result<Outcome> {
    let graphs = load_all(source, common)?;
    let pairs: Vec<(usize, usize)> = (0..graphs.len()).flat_map(|i| (i + 1..graphs.len()).map(move |j| (i, j))).collect();
    let results: Vec<Result<IsoStatus>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let g = graphs[i].as_ref().map_err(Clone::clone)?;
            let h = graphs[j].as_ref().map_err(Clone::clone)?;
            compare(g, h, opts).map(|v| v.status)
        })
        .collect();
    let failed = results.iter().any(|r| r.is_err());
    let text = match common.output {
        Output::Ascii => pairs
            .iter()
            .zip(&results)
            .map(|(&(i, j), r)| match r {
                Ok(s) => format!("{} {} {s}\n", i + 1, j + 1),
                Err(e) => format!("{} {} error: {e}\n", i + 1, j + 1),
            })
            .collect(),
        Output::Json => render(&Value::Array(
            pairs
                .iter()
                .zip(&results)
                .map(|(&(i, j), r)| match r {
                    Ok(s) => json!({"pair": [i + 1, j + 1], "status": s.to_string()}),
                    Err(e) => json!({"pair": [i + 1, j + 1], "error": e.to_string()}),
                })
                .collect(),
        )),
    };
    Ok(Outcome {
        text,
        code: if failed { 2 } else { 0 },
    })
}

fn verify(check: Check, g: &Graph, lambda: Option<Rational>, co_star: Option<&str>, common: &Common) -> Result<Outcome> {
    let need_lambda = || lambda.clone().ok_or_else(|| Error::InvalidInput("this check needs --lambda".into()));
    let need_co_star = || {
        co_star
            .ok_or_else(|| Error::InvalidInput("this check needs --co-star".into()))
            .and_then(|s| g.parse_vertex_set(s))
    };
    let (text, value, passed) = match check {
        Check::Cone => {
            let r = cone_three_eigenvalue_check(g)?;
            (r.to_ascii(), r.to_json(), r.passed())
        }
        Check::Tk1 => {
            let r = check_tk1_proposition(g, &need_lambda()?, &need_co_star()?)?;
            (r.to_ascii(g), r.to_json(g), r.passed())
        }
        Check::Kt => {
            let r = check_kt_proposition(g, &need_lambda()?, &need_co_star()?)?;
            (r.to_ascii(g), r.to_json(g), r.passed())
        }
        Check::AlephMax => {
            let lambda = need_lambda()?;
            let c = enumerate_star_sets(g, &lambda, cap_for(common, g, &lambda))?;
            let (amax, _) = aleph(&c)?;
            let holds = amax == c.k_lambda;
            let lam = fmt_rational(&lambda);
            let text = format!(
                "aleph_max({lam}) = {amax}, k = {}\nresult: {}\n",
                c.k_lambda,
                if holds { "pass" } else { "FAIL" }
            );
            (text, json!({"lambda": lam, "aleph_max": amax, "k_lambda": c.k_lambda, "passed": holds}), holds)
        }
    };
    Ok(Outcome {
        text: match common.output {
            Output::Ascii => text,
            Output::Json => render(&value),
        },
        code: if passed { 0 } else { 1 },
    })
}
