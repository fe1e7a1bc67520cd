//! `fairdom`: compute exact fair-domination invariants on supplied graphs,
//! generate the named graph families and corpus streams, and run the
//! registered verification suites.
//!
//! Exit codes are a stable scripting contract: 0 success, 1 verification
//! failures, 2 usage or parse errors, 3 resource caps exceeded.

use clap::{Args, Parser, Subcommand};
use fairdom_core::error::Error;
use fairdom_core::fairdom::{fd_exact, kfd_exact, outr_exact, Fairness};
use fairdom_core::generators::{self, FamilySpec};
use fairdom_core::graph::{Graph, VertexSet};
use fairdom_core::invariants::{
    chromatic_number, domination_number, independence_number, k_domination_number,
};
use fairdom_core::io::{parse_edge_list, parse_graph6, write_graph6};
use fairdom_core::rng::Rng;
use fairdom_core::verify::{run_suite, suite_description, suite_ids, SuiteLimits};
use serde_json::json;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fairdom",
    version,
    about = "Exact fair domination: invariants, family generators and verification suites"
)]
struct Cli {
    /// Seed for all randomized generators and corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants for one or more input graphs.
    Compute(ComputeArgs),
    /// Emit graph6 lines for a family instance or corpus stream.
    Generate(GenerateArgs),
    /// Run a registered verification suite and write its report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// A single graph6 record.
    #[arg(long, conflicts_with_all = ["g6_file", "edges", "family"])]
    g6: Option<String>,
    /// A file with one graph6 record per line.
    #[arg(long, conflicts_with_all = ["edges", "family"])]
    g6_file: Option<PathBuf>,
    /// An edge-list file: first line "n m", then m lines "u v".
    #[arg(long, conflicts_with = "family")]
    edges: Option<PathBuf>,
    /// A family spec such as petersen, cycle:8 or extremal_H:4.
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated invariant tags: fd, kfd:K, outr, gamma, gamma2,
    /// alpha, chi, profile.
    #[arg(long, value_delimiter = ',', required = true)]
    param: Vec<String>,
    /// Output format: text (tab-separated rows) or json (one object per row).
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct GenerateArgs {
    /// A family spec producing a single graph.
    #[arg(long, conflicts_with = "stream")]
    family: Option<String>,
    /// A corpus stream tag: trees:N, mops:N, graphs:N, random_trees:N,COUNT
    /// or random_mops:N,COUNT.
    #[arg(long)]
    stream: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id; see `verify --suite list`.
    #[arg(long)]
    suite: String,
    /// Largest instance order for the suite corpus.
    #[arg(long)]
    max_n: Option<usize>,
    /// Truncate the corpus after this many instances.
    #[arg(long)]
    max_instances: Option<u64>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Report format: json or text.
    #[arg(long, default_value = "text")]
    format: String,
}

/// Lower exit: usage/parse problems (2) vs resource caps (3).
fn exit_for(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } | Error::InstanceTooLarge { .. } | Error::UnsupportedOrder => 3,
        _ => 2,
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

/// Write to stdout; a pipe closed downstream (e.g. `| head`) ends the
/// program quietly, like any line-oriented tool.
fn write_stdout(out: &mut impl std::io::Write, text: &str) {
    if let Err(e) = out.write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: stdout: {e}");
        std::process::exit(2);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => compute(args, cli.seed),
        Command::Generate(args) => generate(args, cli.seed),
        Command::Verify(args) => verify(args, cli.seed),
    }
}

/// `FD_MAX_N`, when set, lowers the order accepted by the exhaustive
/// solvers (useful to keep CI runs short).
fn solver_cap() -> usize {
    std::env::var("FD_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(fairdom_core::MAX_ORDER)
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum Param {
    Fd,
    Kfd(usize),
    Outr,
    Gamma,
    Gamma2,
    Alpha,
    Chi,
    Profile,
}

fn parse_param(tag: &str) -> Result<Param, String> {
    if let Some(k) = tag.strip_prefix("kfd:") {
        let k: usize = k.parse().map_err(|_| format!("invalid kfd level {k:?}"))?;
        if k == 0 {
            return Err("kfd level must be >= 1".into());
        }
        return Ok(Param::Kfd(k));
    }
    match tag {
        "fd" => Ok(Param::Fd),
        "outr" => Ok(Param::Outr),
        "gamma" => Ok(Param::Gamma),
        "gamma2" => Ok(Param::Gamma2),
        "alpha" => Ok(Param::Alpha),
        "chi" => Ok(Param::Chi),
        "profile" => Ok(Param::Profile),
        other => Err(format!(
            "unknown invariant tag {other:?} (expected fd, kfd:K, outr, gamma, gamma2, alpha, chi, profile)"
        )),
    }
}

fn param_name(p: Param) -> String {
    match p {
        Param::Fd => "fd".into(),
        Param::Kfd(k) => format!("kfd:{k}"),
        Param::Outr => "outr".into(),
        Param::Gamma => "gamma".into(),
        Param::Gamma2 => "gamma2".into(),
        Param::Alpha => "alpha".into(),
        Param::Chi => "chi".into(),
        Param::Profile => "profile".into(),
    }
}

fn vertex_list(s: VertexSet) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn fairness_text(f: Fairness) -> String {
    match f {
        Fairness::Vacuous => "vacuous".into(),
        Fairness::Level(k) => k.to_string(),
    }
}

fn load_inputs(args: &ComputeArgs) -> Result<Vec<Graph>, (u8, String)> {
    if let Some(g6) = &args.g6 {
        return Ok(vec![
            parse_graph6(g6).map_err(|e| (exit_for(&e), e.to_string()))?
        ]);
    }
    if let Some(path) = &args.g6_file {
        let text = fs::read_to_string(path).map_err(|e| (2, format!("{}: {e}", path.display())))?;
        let mut graphs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let g = parse_graph6(line).map_err(|e| {
                (
                    exit_for(&e),
                    format!("{} line {}: {e}", path.display(), i + 1),
                )
            })?;
            graphs.push(g);
        }
        return Ok(graphs);
    }
    if let Some(path) = &args.edges {
        let text = fs::read_to_string(path).map_err(|e| (2, format!("{}: {e}", path.display())))?;
        return Ok(vec![
            parse_edge_list(&text).map_err(|e| (exit_for(&e), e.to_string()))?
        ]);
    }
    if let Some(spec) = &args.family {
        let spec: FamilySpec = spec
            .parse()
            .map_err(|e: Error| (exit_for(&e), e.to_string()))?;
        return Ok(vec![spec
            .build()
            .map_err(|e| (exit_for(&e), e.to_string()))?]);
    }
    Err((
        2,
        "no input: pass one of --g6, --g6-file, --edges, --family".into(),
    ))
}

fn compute(args: ComputeArgs, _seed: u64) -> ExitCode {
    let json_out = match args.format.as_str() {
        "json" => true,
        "text" => false,
        other => return fail(2, format!("unknown format {other:?}")),
    };
    let params: Vec<Param> = match args.param.iter().map(|t| parse_param(t)).collect() {
        Ok(p) => p,
        Err(msg) => return fail(2, msg),
    };
    let graphs = match load_inputs(&args) {
        Ok(g) => g,
        Err((code, msg)) => return fail(code, msg),
    };
    let cap = solver_cap();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        if g.order() > cap {
            return fail(
                3,
                Error::InstanceTooLarge {
                    order: g.order(),
                    limit: cap,
                },
            );
        }
        let g6 = write_graph6(g);
        for &p in &params {
            match emit_row(&mut out, &g6, g, p, json_out) {
                Ok(()) => {}
                Err(e) => return fail(exit_for(&e), e),
            }
        }
    }
    ExitCode::SUCCESS
}

fn emit_row(
    out: &mut impl std::io::Write,
    g6: &str,
    g: &Graph,
    p: Param,
    json_out: bool,
) -> Result<(), Error> {
    let name = param_name(p);
    let line = match p {
        Param::Fd | Param::Outr | Param::Kfd(_) => {
            let r = match p {
                Param::Fd => fd_exact(g),
                Param::Outr => outr_exact(g),
                Param::Kfd(k) => kfd_exact(g, k),
                _ => unreachable!(),
            };
            if json_out {
                json!({
                    "graph6": g6,
                    "param": name,
                    "value": r.value,
                    "witness": r.witness.to_vec(),
                    "k": fairness_text(r.fairness),
                })
                .to_string()
            } else {
                format!(
                    "{g6}\t{name}\t{}\t{}\tk={}",
                    r.value,
                    vertex_list(r.witness),
                    fairness_text(r.fairness)
                )
            }
        }
        Param::Gamma | Param::Gamma2 | Param::Alpha => {
            let r = match p {
                Param::Gamma => domination_number(g),
                Param::Gamma2 => k_domination_number(g, 2),
                Param::Alpha => independence_number(g),
                _ => unreachable!(),
            };
            if json_out {
                json!({
                    "graph6": g6,
                    "param": name,
                    "value": r.value,
                    "witness": r.witness.to_vec(),
                })
                .to_string()
            } else {
                format!("{g6}\t{name}\t{}\t{}", r.value, vertex_list(r.witness))
            }
        }
        Param::Chi => {
            let r = chromatic_number(g)?;
            if json_out {
                json!({
                    "graph6": g6,
                    "param": name,
                    "value": r.value,
                    "coloring": r.coloring,
                })
                .to_string()
            } else {
                let colors = r
                    .coloring
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!(
                    "{g6}\t{name}\t{}\t{}",
                    r.value,
                    if colors.is_empty() {
                        "-".into()
                    } else {
                        colors
                    }
                )
            }
        }
        Param::Profile => {
            let p = g.degree_profile()?;
            if json_out {
                json!({
                    "graph6": g6,
                    "param": name,
                    "degree_sequence": p.degree_sequence,
                    "min_degree": p.min_degree,
                    "max_degree": p.max_degree,
                    "average_degree": p.average_degree.to_string(),
                    "span": p.span,
                    "rep": p.rep,
                })
                .to_string()
            } else {
                let seq = p
                    .degree_sequence
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!(
                    "{g6}\t{name}\tdelta={} Delta={} dbar={} span={} rep={}\t{seq}",
                    p.min_degree, p.max_degree, p.average_degree, p.span, p.rep
                )
            }
        }
    };
    write_stdout(out, &line);
    write_stdout(out, "\n");
    Ok(())
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

fn stream_graphs(tag: &str, seed: u64) -> Result<Vec<Graph>, Error> {
    let (name, rest) = tag.split_once(':').ok_or_else(|| Error::BadArity {
        family: tag.to_string(),
        msg: "stream tags look like trees:N, mops:N, graphs:N, random_trees:N,COUNT".into(),
    })?;
    let ints: Vec<usize> = rest
        .split(',')
        .map(|p| {
            p.parse::<usize>().map_err(|_| Error::BadArity {
                family: name.to_string(),
                msg: format!("invalid integer {p:?}"),
            })
        })
        .collect::<Result<_, _>>()?;
    let arity = |want: usize| -> Result<(), Error> {
        if ints.len() == want {
            Ok(())
        } else {
            Err(Error::BadArity {
                family: name.to_string(),
                msg: format!("expected {want} parameter(s), got {}", ints.len()),
            })
        }
    };
    match name {
        "trees" => {
            arity(1)?;
            Ok(generators::trees_exhaustive(ints[0])?.collect())
        }
        "mops" => {
            arity(1)?;
            Ok(generators::mops_exhaustive(ints[0])?.collect())
        }
        "graphs" => {
            arity(1)?;
            Ok(generators::graphs_exhaustive(ints[0])?.collect())
        }
        "random_trees" => {
            arity(2)?;
            let mut rng = Rng::new(seed);
            (0..ints[1])
                .map(|_| generators::random_tree(ints[0], rng.next_u64()))
                .collect()
        }
        "random_mops" => {
            arity(2)?;
            let mut rng = Rng::new(seed);
            (0..ints[1])
                .map(|_| generators::random_mop(ints[0], rng.next_u64()))
                .collect()
        }
        other => Err(Error::BadArity {
            family: other.to_string(),
            msg: "unknown stream tag".into(),
        }),
    }
}

fn generate(args: GenerateArgs, seed: u64) -> ExitCode {
    let graphs: Vec<Graph> = if let Some(spec) = &args.family {
        match spec.parse::<FamilySpec>().and_then(|s| s.build()) {
            Ok(g) => vec![g],
            Err(e) => return fail(exit_for(&e), e),
        }
    } else if let Some(tag) = &args.stream {
        match stream_graphs(tag, seed) {
            Ok(gs) => gs,
            Err(e) => return fail(exit_for(&e), e),
        }
    } else {
        return fail(2, "pass --family or --stream");
    };
    let mut body = String::new();
    for g in &graphs {
        body.push_str(&write_graph6(g));
        body.push('\n');
    }
    match &args.out {
        None => {
            write_stdout(&mut std::io::stdout().lock(), &body);
            ExitCode::SUCCESS
        }
        Some(path) => match fs::write(path, body) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(2, format!("{}: {e}", path.display())),
        },
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn verify(args: VerifyArgs, seed: u64) -> ExitCode {
    if args.suite == "list" {
        for id in suite_ids() {
            println!("{id}: {}", suite_description(id).expect("registered"));
        }
        return ExitCode::SUCCESS;
    }
    let cap = solver_cap();
    let max_order = match args.max_n {
        Some(n) => Some(n.min(cap)),
        None if cap < fairdom_core::MAX_ORDER => Some(cap),
        None => None,
    };
    let limits = SuiteLimits {
        max_order,
        max_instances: args.max_instances,
        seed,
    };
    let report = match run_suite(&args.suite, &limits) {
        Ok(r) => r,
        Err(e) => return fail(exit_for(&e), e),
    };
    let body = match args.format.as_str() {
        "json" => report.to_json(),
        "text" => report.to_text(),
        other => return fail(2, format!("unknown format {other:?}")),
    };
    match &args.report {
        None => {
            let mut out = std::io::stdout().lock();
            write_stdout(&mut out, body.trim_end());
            write_stdout(&mut out, "\n");
        }
        Some(path) => {
            if let Err(e) = fs::write(path, &body) {
                return fail(2, format!("{}: {e}", path.display()));
            }
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
