//! `threearc`: build 3-arc graphs, dominate them, recognize them, and run
//! bound-checking campaigns.
//!
//! Exit codes: 0 success, 1 negative result (no preimage, invalid
//! certificate, failed verification, bound violation), 2 input error,
//! 3 resource limit.

mod bench;
mod family;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use threearc::constructions::{
    theorem3_construct, theorem4b_construct, theorem5_clawfree_construct,
};
use threearc::domination::{gamma_exact, greedy_dominating, vi_set, TargetSet};
use threearc::graph::GraphRecord;
use threearc::iso::is_isomorphism;
use threearc::recognition::{
    construct_h, recognize_small, verify_certificate, CharacterizationCertificate,
    DEFAULT_CANDIDATE_CAP, DEFAULT_RECOGNITION_LIMIT,
};
use threearc::threearc::{
    build_x, build_x_directed, iterate_x, three_arc_graph, LabeledGraph, ThreeArcSet,
};
use threearc::{DiGraph, Error, Graph};

use family::FamilySpec;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "threearc",
    version,
    about = "3-arc graphs: construction, domination bounds and recognition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    EdgeList,
    Graph6,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Thm3,
    Thm4,
    Clawfree,
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Build X(G), or X(G, Δ) / X(D) / X^k(G).
    Build {
        /// Input graph (edge list or graph6); stdin when absent or `-`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Read the input as an arc list of a digraph.
        #[arg(long)]
        directed: bool,
        /// Apply the operation this many times.
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        /// Restrict to the self-paired 3-arc set listed in this file.
        #[arg(long)]
        delta_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: OutFormat,
        /// Write the `vertex: tail->head` label table here.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Largest order allowed for any stage.
        #[arg(long, default_value_t = 100_000)]
        max_order: usize,
    },
    /// Dominating set of G (exact, greedy) or arc plan for X(G) (thm3, thm4, clawfree).
    Dominate {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        /// `all` or `vi:<i>` (vertices of degree at least i); exact and greedy only.
        #[arg(long)]
        target: Option<String>,
        /// Run exact or greedy on X(G) instead of G.
        #[arg(long)]
        on_x: bool,
    },
    /// Search for H with X(H) isomorphic to the input.
    Recognize {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Largest input order searched.
        #[arg(long, default_value_t = DEFAULT_RECOGNITION_LIMIT)]
        budget: usize,
        /// Largest number of candidate preimages per edge count.
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
        candidate_cap: usize,
    },
    /// Check a characterization certificate against a graph.
    VerifyCert {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Certificate JSON with keys v1, v2, e.
        #[arg(long)]
        cert: PathBuf,
        /// Also rebuild a preimage H from a valid certificate.
        #[arg(long)]
        construct: bool,
    },
    /// Run every applicable bound and construction over a corpus.
    Bench {
        /// Family spec such as `friendship:k=1..4`; repeatable.
        #[arg(long)]
        family: Vec<FamilySpec>,
        /// Directory of `.el` / `.g6` files.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// CSV report path; CSV goes to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Full JSON report (summary plus rows) path.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest X(G) order for which γ(X) is computed exactly.
        #[arg(long, default_value_t = 64)]
        cap: usize,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// A failure with its exit code, printed as JSON on stderr.
struct Failure {
    code: u8,
    kind: String,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            kind: "input".into(),
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            _ if e.is_resource_limit() => EXIT_RESOURCE,
            Error::Verification(_) => EXIT_NEGATIVE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            kind: e.kind().into(),
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    Ok(Graph::parse_any(&read_text(path)?)?)
}

/// Writes to stdout, ignoring a closed pipe (e.g. output piped to `head`).
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    ));
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn cmd_build(
    input: Option<PathBuf>,
    directed: bool,
    iterate: usize,
    delta_file: Option<PathBuf>,
    format: OutFormat,
    labels: Option<PathBuf>,
    max_order: usize,
) -> Outcome {
    if iterate == 0 {
        return Err(Failure::input("--iterate must be at least 1"));
    }
    if iterate > 1 && (directed || delta_file.is_some()) {
        return Err(Failure::input(
            "--iterate > 1 applies to the full 3-arc graph of an undirected input only",
        ));
    }
    if directed && delta_file.is_some() {
        return Err(Failure::input("--delta-file needs an undirected input"));
    }
    let text = read_text(input.as_deref())?;
    let x: LabeledGraph = if directed {
        let d = DiGraph::from_arc_list(&text)?;
        if d.arc_count() > max_order {
            return Err(Error::ResourceLimit(format!(
                "{} arcs exceed --max-order {max_order}",
                d.arc_count()
            ))
            .into());
        }
        build_x_directed(&d)
    } else {
        let g = Graph::parse_any(&text)?;
        match delta_file {
            Some(p) => {
                let delta = ThreeArcSet::parse(&read_text(Some(&p))?)?;
                build_x(&g, Some(&delta))?
            }
            None => iterate_x(&g, iterate, max_order)?,
        }
    };
    if let Some(p) = labels {
        std::fs::write(&p, x.label_table())
            .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
    }
    match format {
        OutFormat::EdgeList => emit(&x.graph.to_edge_list()),
        OutFormat::Graph6 => emit(&format!("{}\n", x.graph.to_graph6())),
        OutFormat::Json => print_json(&json!({
            "schema": 1,
            "n": x.graph.order(),
            "m": x.graph.size(),
            "graph6": x.graph.to_graph6(),
            "edges": x.graph.edges().collect::<Vec<_>>(),
            "labels": x.labels.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        })),
    }
    Ok(0)
}

fn parse_target(g: &Graph, spec: Option<&str>) -> Result<TargetSet, Failure> {
    match spec {
        None | Some("all") => Ok(TargetSet::all(g)),
        Some(s) => {
            let i = s
                .strip_prefix("vi:")
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| Failure::input(format!("target `{s}` is not `all` or `vi:<i>`")))?;
            Ok(vi_set(g, i))
        }
    }
}

fn cmd_dominate(
    input: Option<PathBuf>,
    method: Method,
    target: Option<String>,
    on_x: bool,
) -> Outcome {
    let g = read_graph(input.as_deref())?;
    let constructive = matches!(method, Method::Thm3 | Method::Thm4 | Method::Clawfree);
    if constructive && (target.is_some() || on_x) {
        return Err(Failure::input(
            "--target and --on-x apply to exact and greedy only",
        ));
    }
    if constructive {
        let plan = match method {
            Method::Thm3 => theorem3_construct(&g)?,
            Method::Thm4 => theorem4b_construct(&g)?,
            _ => theorem5_clawfree_construct(&g)?,
        };
        let verified = plan.verify()?;
        print_json(&json!({
            "schema": 1,
            "method": method_name(method),
            "size": plan.size,
            "bound": plan.bound.to_string(),
            "verified": verified,
            "plan": to_value(&plan),
        }));
        return Ok(if verified { 0 } else { EXIT_NEGATIVE });
    }
    let host = if on_x { three_arc_graph(&g).graph } else { g };
    let target = parse_target(&host, target.as_deref())?;
    let cert = match method {
        Method::Exact => gamma_exact(&host, Some(&target))?,
        _ => greedy_dominating(&host, &target),
    };
    let verified = cert.verify(&host);
    print_json(&json!({
        "schema": 1,
        "method": method_name(method),
        "graph": if on_x { "X(G)" } else { "G" },
        "size": cert.size,
        "verified": verified,
        "certificate": to_value(&cert),
    }));
    Ok(if verified { 0 } else { EXIT_NEGATIVE })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Exact => "exact",
        Method::Thm3 => "thm3",
        Method::Thm4 => "thm4",
        Method::Clawfree => "clawfree",
        Method::Greedy => "greedy",
    }
}

fn cmd_recognize(input: Option<PathBuf>, budget: usize, candidate_cap: usize) -> Outcome {
    let g = read_graph(input.as_deref())?;
    let Some(found) = recognize_small(&g, budget, candidate_cap)? else {
        print_json(&json!({ "schema": 1, "status": "absent" }));
        return Ok(EXIT_NEGATIVE);
    };
    let x = three_arc_graph(&found.h);
    if !is_isomorphism(&x.graph, &g, &found.iso) {
        return Err(Error::Verification("returned map is not an isomorphism".into()).into());
    }
    let check = verify_certificate(&g, &found.certificate)?;
    print_json(&json!({
        "schema": 1,
        "status": "found",
        "h": GraphRecord::from(&found.h),
        "hGraph6": found.h.to_graph6(),
        "isomorphism": found.iso,
        "certificate": to_value(&found.certificate),
        "certificateValid": check.valid,
        "preimages": found.preimages,
        "candidatesExamined": found.candidates_examined,
    }));
    Ok(0)
}

fn cmd_verify_cert(input: Option<PathBuf>, cert: PathBuf, construct: bool) -> Outcome {
    let g = read_graph(input.as_deref())?;
    let text = read_text(Some(&cert))?;
    let cert: CharacterizationCertificate =
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("certificate: {e}")))?;
    let check = verify_certificate(&g, &cert)?;
    let mut report =
        json!({ "schema": 1, "valid": check.valid, "violation": to_value(&check.violation) });
    if construct && check.valid {
        let r = construct_h(&g, &cert)?;
        report["h"] = to_value(&GraphRecord::from(&r.h));
        report["isomorphism"] = to_value(&r.iso);
    }
    print_json(&report);
    Ok(if check.valid { 0 } else { EXIT_NEGATIVE })
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    families: Vec<FamilySpec>,
    corpus: Option<PathBuf>,
    out: Option<PathBuf>,
    json_path: Option<PathBuf>,
    seed: u64,
    cap: usize,
    jobs: Option<usize>,
) -> Outcome {
    if families.is_empty() && corpus.is_none() {
        return Err(Failure::input(
            "give at least one --family or a --corpus directory",
        ));
    }
    let mut items = Vec::new();
    for f in &families {
        items.extend(f.items(seed)?);
    }
    if let Some(dir) = corpus {
        items.extend(bench::load_corpus(&dir)?);
    }
    let jobs =
        jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get().min(8)));
    let rows = bench::run(&items, cap, jobs).map_err(Failure::input)?;
    let summary = bench::summarize(&rows, seed);
    let io = |e: csv::Error| Failure::input(e.to_string());
    match &out {
        Some(p) => {
            let file = std::fs::File::create(p)
                .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
            bench::write_csv(file, &rows).map_err(io)?;
            print_json(&to_value(&summary));
        }
        None => {
            match bench::write_csv(std::io::stdout().lock(), &rows) {
                Err(e) if matches!(e.kind(), csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe) =>
                    {}
                other => other.map_err(io)?,
            }
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("summary serializes")
            );
        }
    }
    if let Some(p) = json_path {
        let full = json!({ "schema": 1, "summary": to_value(&summary), "rows": to_value(&rows) });
        std::fs::write(
            &p,
            serde_json::to_string_pretty(&full).expect("report serializes"),
        )
        .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
    }
    Ok(if summary.violations > 0 {
        EXIT_NEGATIVE
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build {
            input,
            directed,
            iterate,
            delta_file,
            format,
            labels,
            max_order,
        } => cmd_build(
            input, directed, iterate, delta_file, format, labels, max_order,
        ),
        Command::Dominate {
            input,
            method,
            target,
            on_x,
        } => cmd_dominate(input, method, target, on_x),
        Command::Recognize {
            input,
            budget,
            candidate_cap,
        } => cmd_recognize(input, budget, candidate_cap),
        Command::VerifyCert {
            input,
            cert,
            construct,
        } => cmd_verify_cert(input, cert, construct),
        Command::Bench {
            family,
            corpus,
            out,
            json,
            seed,
            cap,
            jobs,
        } => cmd_bench(family, corpus, out, json, seed, cap, jobs),
    };
    let _ = std::io::stdout().flush();
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let report = json!({ "schema": 1, "error": { "kind": f.kind, "message": f.message } });
            eprintln!("{report}");
            ExitCode::from(f.code)
        }
    }
}
