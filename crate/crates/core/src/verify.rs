//! Suite runner: a registry of named checks, each a predicate over one
//! graph, evaluated over instance corpora and aggregated into
//! machine-readable reports with counterexample witnesses.
//!
//! Checks never trust formulas: both sides of every inequality come from
//! independent exact solvers. Conditionally-applicable claims record
//! "not applicable" rather than a vacuous pass, so coverage is auditable.
//! Reports are deterministic for a fixed (suite, corpus, seed), modulo the
//! wall-time field; failures are sorted by (graph6, check id) and each one
//! is self-contained: re-parsing the embedded graph6 and re-running the
//! single check reproduces it.

use crate::error::{Error, Result};
use crate::fairdom::{
    fd_exact, fd_tree, find_special_corona_subtree, is_corona_of_tree, is_fair_dominating, is_tree,
    kfd_exact, leaves, minimum_fd_sets, outr_exact, regular_fd_witness, strong_support_vertices,
    Fairness,
};
use crate::generators;
use crate::graph::{disjoint_union, Graph, VertexSet};
use crate::invariants::{
    chromatic_number, domination_number, find_perfect_dominating_set, independence_number,
};
use crate::io::write_graph6;
use crate::ratio::Ratio;
use crate::rng::Rng;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// One registered claim: a stable id, a one-line statement, and an
/// evaluator returning pass / fail-with-witness / not-applicable.
#[derive(Clone)]
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub eval: fn(&Graph) -> CheckOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    NotApplicable,
    Fail(String),
}

/// Corpus construction knobs. `max_order` overrides the suite's default
/// instance size (clamped to the suite cap), `max_instances` truncates the
/// stream, and `seed` drives every randomized corpus.
#[derive(Clone, Debug, Default)]
pub struct SuiteLimits {
    pub max_order: Option<usize>,
    pub max_instances: Option<u64>,
    pub seed: u64,
}

/// An instance stream plus its human description.
pub struct Corpus {
    pub description: String,
    pub stream: Box<dyn Iterator<Item = Graph>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckTally {
    pub id: String,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Failure {
    pub graph6: String,
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub corpus: String,
    pub instances_checked: u64,
    pub checks: Vec<CheckTally>,
    pub failures: Vec<Failure>,
    pub wall_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned-column text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        out.push_str(&format!("corpus: {}\n", self.corpus));
        out.push_str(&format!("instances: {}\n", self.instances_checked));
        out.push_str(&format!("wall: {} ms\n", self.wall_ms));
        out.push_str(&format!(
            "{:<28} {:>10} {:>10} {:>10}\n",
            "check", "passed", "failed", "n/a"
        ));
        for t in &self.checks {
            out.push_str(&format!(
                "{:<28} {:>10} {:>10} {:>10}\n",
                t.id, t.passed, t.failed, t.not_applicable
            ));
        }
        for f in &self.failures {
            out.push_str(&format!(
                "FAIL {} on {} : {}\n",
                f.check, f.graph6, f.witness
            ));
        }
        out.push_str(&format!(
            "result: {} ({} failures)\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.failures.len()
        ));
        out
    }
}

/// Evaluate every check on every corpus instance.
pub fn run_checks(
    suite: &str,
    checks: &[Check],
    corpus: Corpus,
    instance_cap: usize,
    max_instances: Option<u64>,
) -> Result<Report> {
    let start = Instant::now();
    let mut tallies: Vec<CheckTally> = checks
        .iter()
        .map(|c| CheckTally {
            id: c.id.to_string(),
            passed: 0,
            failed: 0,
            not_applicable: 0,
        })
        .collect();
    let mut failures = Vec::new();
    let mut instances = 0u64;
    for g in corpus.stream {
        if let Some(cap) = max_instances {
            if instances >= cap {
                break;
            }
        }
        if g.order() > instance_cap {
            return Err(Error::InstanceTooLarge {
                order: g.order(),
                limit: instance_cap,
            });
        }
        instances += 1;
        for (i, chk) in checks.iter().enumerate() {
            match (chk.eval)(&g) {
                CheckOutcome::Pass => tallies[i].passed += 1,
                CheckOutcome::NotApplicable => tallies[i].not_applicable += 1,
                CheckOutcome::Fail(witness) => {
                    tallies[i].failed += 1;
                    failures.push(Failure {
                        graph6: write_graph6(&g),
                        check: chk.id.to_string(),
                        witness,
                    });
                }
            }
        }
    }
    failures.sort_by(|a, b| (&a.graph6, &a.check).cmp(&(&b.graph6, &b.check)));
    Ok(Report {
        suite: suite.to_string(),
        corpus: corpus.description,
        instances_checked: instances,
        checks: tallies,
        failures,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// Registered suite ids.
pub fn suite_ids() -> &'static [&'static str] {
    &[
        "basic",
        "duality",
        "upper_bounds",
        "extremal",
        "trees",
        "mop",
        "nordhaus_gaddum",
        "unions",
        "line_graph",
        "caro_wei",
    ]
}

struct SuiteDef {
    description: &'static str,
    instance_cap: usize,
    checks: fn() -> Vec<Check>,
    corpus: fn(&SuiteLimits) -> Corpus,
}

fn suite_def(id: &str) -> Result<SuiteDef> {
    let def = match id {
        "basic" => SuiteDef {
            description: "elementary identities and closed forms on named families",
            instance_cap: 16,
            checks: basic_checks,
            corpus: basic_corpus,
        },
        "duality" => SuiteDef {
            description: "fd + outr = n and the complement identities",
            instance_cap: 16,
            checks: duality_checks,
            corpus: duality_corpus,
        },
        "upper_bounds" => SuiteDef {
            description: "order/degree/chromatic upper bounds on fd",
            instance_cap: 14,
            checks: upper_bounds_checks,
            corpus: upper_bounds_corpus,
        },
        "extremal" => SuiteDef {
            description: "families attaining fd = n - 2",
            instance_cap: 14,
            checks: extremal_checks,
            corpus: extremal_corpus,
        },
        "trees" => SuiteDef {
            description: "tree bound fd <= n/2, corona equality, characterizations",
            instance_cap: 9,
            checks: trees_checks,
            corpus: trees_corpus,
        },
        "mop" => SuiteDef {
            description: "maximal outerplanar structure and fd < 17n/19",
            instance_cap: 12,
            checks: mop_checks,
            corpus: mop_corpus,
        },
        "nordhaus_gaddum" => SuiteDef {
            description: "sum/product bounds for fd(G) and fd of the complement",
            instance_cap: 7,
            checks: nordhaus_gaddum_checks,
            corpus: nordhaus_gaddum_corpus,
        },
        "unions" => SuiteDef {
            description: "fair domination of disjoint unions and edge sensitivity",
            instance_cap: 16,
            checks: unions_checks,
            corpus: unions_corpus,
        },
        "line_graph" => SuiteDef {
            description: "spanning regular subgraphs bound fd of the line graph",
            instance_cap: 12,
            checks: line_graph_checks,
            corpus: line_graph_corpus,
        },
        "caro_wei" => SuiteDef {
            description: "imported independence and repetition lower bounds",
            instance_cap: 16,
            checks: caro_wei_checks,
            corpus: caro_wei_corpus,
        },
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(def)
}

pub fn suite_description(id: &str) -> Result<&'static str> {
    Ok(suite_def(id)?.description)
}

/// Checks registered under a suite id, e.g. for re-running a single failure.
pub fn suite_checks(id: &str) -> Result<Vec<Check>> {
    Ok((suite_def(id)?.checks)())
}

/// Run a registered suite on its default corpus.
pub fn run_suite(id: &str, limits: &SuiteLimits) -> Result<Report> {
    let def = suite_def(id)?;
    run_checks(
        id,
        &(def.checks)(),
        (def.corpus)(limits),
        def.instance_cap,
        limits.max_instances,
    )
}

/// Run a registered suite's checks on a caller-supplied corpus.
pub fn run_suite_on(id: &str, corpus: Corpus, limits: &SuiteLimits) -> Result<Report> {
    let def = suite_def(id)?;
    run_checks(
        id,
        &(def.checks)(),
        corpus,
        def.instance_cap,
        limits.max_instances,
    )
}

fn pass_if(cond: bool, witness: impl FnOnce() -> String) -> CheckOutcome {
    if cond {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail(witness())
    }
}

// ---------------------------------------------------------------------------
// basic: elementary identities and the closed forms on named families
// ---------------------------------------------------------------------------

fn basic_checks() -> Vec<Check> {
    vec![
        Check {
            id: "ob1_gamma_le_fd",
            description: "the domination number never exceeds the fair domination number",
            eval: |g| {
                if g.order() == 0 {
                    return CheckOutcome::NotApplicable;
                }
                let gamma = domination_number(g).value;
                let fd = fd_exact(g).value;
                pass_if(gamma <= fd, || format!("gamma={gamma} fd={fd}"))
            },
        },
        Check {
            id: "ob1_fd_n_iff_edgeless",
            description: "fd <= n, with equality exactly on the edgeless graph",
            eval: |g| {
                if g.order() == 0 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                let n = g.order();
                pass_if(fd <= n && ((fd == n) == (g.size() == 0)), || {
                    format!("fd={fd} n={n} m={}", g.size())
                })
            },
        },
        Check {
            id: "ob2_outr_zero_iff_edgeless",
            description: "outr = 0 exactly on the edgeless graph",
            eval: |g| {
                if g.order() == 0 {
                    return CheckOutcome::NotApplicable;
                }
                let outr = outr_exact(g).value;
                pass_if((outr == 0) == (g.size() == 0), || {
                    format!("outr={outr} m={}", g.size())
                })
            },
        },
        Check {
            id: "ob3_perfect_dominating",
            description: "a perfect dominating set collapses gamma, 1-fair fd and fd",
            eval: |g| {
                if g.order() == 0 {
                    return CheckOutcome::NotApplicable;
                }
                match find_perfect_dominating_set(g) {
                    None => CheckOutcome::NotApplicable,
                    Some(pd) => {
                        let gamma = domination_number(g).value;
                        let ofd = kfd_exact(g, 1).value;
                        let fd = fd_exact(g).value;
                        pass_if(gamma == ofd && ofd == fd, || {
                            format!("pd={pd} gamma={gamma} 1fd={ofd} fd={fd}")
                        })
                    }
                }
            },
        },
        Check {
            id: "ob4_closed_forms",
            description:
                "closed-form fd on paths, cycles, completes, edgeless and complete bipartite graphs",
            eval: |g| match detect_closed_form(g) {
                None => CheckOutcome::NotApplicable,
                Some((family, want_gamma, want_fd)) => {
                    let gamma = domination_number(g).value;
                    let fd = fd_exact(g).value;
                    pass_if(gamma == want_gamma && fd == want_fd, || {
                        format!(
                            "{family}: gamma={gamma} (want {want_gamma}) fd={fd} (want {want_fd})"
                        )
                    })
                }
            },
        },
    ]
}

/// Structurally recognize the families with known closed forms; returns
/// (family, expected gamma, expected fd).
fn detect_closed_form(g: &Graph) -> Option<(&'static str, usize, usize)> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let m = g.size();
    if m == 0 {
        return Some(("edgeless", n, n));
    }
    if m == n * (n - 1) / 2 {
        return Some(("complete", 1, 1));
    }
    if n >= 3 && g.is_regular() == Some(2) && g.is_connected() {
        let gamma = n.div_ceil(3);
        let fd = gamma + usize::from(n >= 5 && n % 3 == 2);
        return Some(("cycle", gamma, fd));
    }
    if is_tree(g) && g.degree_profile().ok()?.max_degree <= 2 {
        let gamma = n.div_ceil(3);
        return Some(("path", gamma, gamma));
    }
    if let Some((a, b)) = g.bipartition() {
        if !a.is_empty() && !b.is_empty() && m == a.card() * b.card() {
            let v = if a.card().min(b.card()) == 1 { 1 } else { 2 };
            return Some(("complete_bipartite", v, v));
        }
    }
    None
}

fn basic_corpus(limits: &SuiteLimits) -> Corpus {
    let fam_max = limits.max_order.unwrap_or(12).clamp(3, 16);
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=fam_max {
        graphs.push(generators::path(n).unwrap());
        graphs.push(generators::complete(n).unwrap());
        graphs.push(generators::empty_graph(n).unwrap());
        if n >= 3 {
            graphs.push(generators::cycle(n).unwrap());
        }
    }
    for m in 1..=5usize {
        for n in 1..=m {
            graphs.push(generators::complete_bipartite(m, n).unwrap());
        }
    }
    graphs.push(generators::petersen());
    let exhaustive_max = fam_max.min(5);
    let stream = graphs
        .into_iter()
        .chain((1..=exhaustive_max).flat_map(|n| generators::graphs_exhaustive(n).unwrap()));
    Corpus {
        description: format!(
            "paths/cycles/completes/edgeless to order {fam_max}, complete bipartite to (5,5), the Petersen graph, all labeled graphs to order {exhaustive_max}"
        ),
        stream: Box::new(stream),
    }
}

// ---------------------------------------------------------------------------
// duality: fd + outr = n and the complement identities
// ---------------------------------------------------------------------------

fn duality_checks() -> Vec<Check> {
    vec![
        Check {
            id: "prop1_duality",
            description: "fd and outr are complementary: fd + outr = n for n >= 2",
            eval: |g| {
                let n = g.order();
                if n < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                let outr = outr_exact(g).value;
                pass_if(fd + outr == n, || format!("fd={fd} outr={outr} n={n}"))
            },
        },
        Check {
            id: "gbar_connected_equal",
            description: "when a graph and its complement are both connected, their fd agree",
            eval: |g| {
                if g.order() < 2 || !g.is_connected() {
                    return CheckOutcome::NotApplicable;
                }
                let gbar = g.complement();
                if !gbar.is_connected() {
                    return CheckOutcome::NotApplicable;
                }
                let a = fd_exact(g).value;
                let b = fd_exact(&gbar).value;
                pass_if(a == b, || format!("fd={a} fd(complement)={b}"))
            },
        },
        Check {
            id: "gbar_component_bound",
            description: "a connected graph whose complement has q >= 2 components has fd <= n/q",
            eval: |g| {
                let n = g.order();
                if n < 2 || !g.is_connected() {
                    return CheckOutcome::NotApplicable;
                }
                let q = g.complement().components().len();
                if q < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                pass_if(fd * q <= n, || format!("fd={fd} q={q} n={n}"))
            },
        },
    ]
}

fn exhaustive_orders_corpus(lo: usize, hi: usize) -> Corpus {
    Corpus {
        description: format!("all labeled graphs of orders {lo}..={hi}"),
        stream: Box::new((lo..=hi).flat_map(|n| generators::graphs_exhaustive(n).unwrap())),
    }
}

fn duality_corpus(limits: &SuiteLimits) -> Corpus {
    let max = limits.max_order.unwrap_or(6).clamp(1, 7);
    exhaustive_orders_corpus(1, max)
}

// ---------------------------------------------------------------------------
// upper_bounds
// ---------------------------------------------------------------------------

fn upper_bounds_checks() -> Vec<Check> {
    vec![
        Check {
            id: "thm_n2_upper",
            description: "without isolated vertices and n >= 3, fd <= n - 2",
            eval: |g| {
                let n = g.order();
                if n < 3 || g.degree_profile().map(|p| p.min_degree).unwrap_or(0) < 1 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                pass_if(fd <= n - 2, || format!("fd={fd} n={n}"))
            },
        },
        Check {
            id: "cbound_size_two",
            description: "with at least two edges, fd <= n - 2",
            eval: |g| {
                if g.size() < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let n = g.order();
                let fd = fd_exact(g).value;
                pass_if(fd <= n - 2, || format!("fd={fd} n={n} m={}", g.size()))
            },
        },
        Check {
            id: "prop2a_span_bound",
            description: "fd <= n - n/((avg+1)*maxdeg) when there are no isolated vertices",
            eval: |g| {
                let n = g.order();
                if n < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let p = g.degree_profile().expect("n >= 2");
                if p.min_degree < 1 {
                    return CheckOutcome::NotApplicable;
                }
                let (m, fd) = (g.size(), fd_exact(g).value);
                // fd <= n - n^2/((2m+n)*maxdeg), cleared of denominators
                let lhs = (n - fd) as i128 * (2 * m + n) as i128 * p.max_degree as i128;
                pass_if(lhs >= (n * n) as i128, || {
                    format!("fd={fd} n={n} m={m} maxdeg={}", p.max_degree)
                })
            },
        },
        Check {
            id: "prop2b_rep_chi_bound",
            description: "fd <= n - n/((2 avg - 2 mindeg + 1) * chi) when there are no isolated vertices",
            eval: |g| {
                let n = g.order();
                if n < 1 {
                    return CheckOutcome::NotApplicable;
                }
                let p = g.degree_profile().expect("n >= 1");
                if p.min_degree < 1 {
                    // fails on edgeless graphs (fd = n by convention), where the
                    // construction behind the bound breaks down
                    return CheckOutcome::NotApplicable;
                }
                let chi = chromatic_number(g).expect("order capped").value;
                let (m, fd) = (g.size(), fd_exact(g).value);
                // fd <= n - n^2/((4m - 2*mindeg*n + n) * chi)
                let weight = (4 * m + n) as i128 - 2 * (p.min_degree * n) as i128;
                let lhs = (n - fd) as i128 * weight * chi as i128;
                pass_if(lhs >= (n * n) as i128, || {
                    format!("fd={fd} n={n} m={m} mindeg={} chi={chi}", p.min_degree)
                })
            },
        },
        Check {
            id: "prop2c_regular_bound",
            description: "an r-regular graph with r >= 2 has fd <= rn/(r+1)",
            eval: |g| {
                let r = match g.is_regular() {
                    Some(r) if r >= 2 => r,
                    _ => return CheckOutcome::NotApplicable,
                };
                let n = g.order();
                let fd = fd_exact(g).value;
                pass_if(fd * (r + 1) <= r * n, || format!("fd={fd} r={r} n={n}"))
            },
        },
        Check {
            id: "prop4_regular_witness",
            description: "the constructive witness for regular graphs is a fair dominating set of size <= n - max(alpha, omega) + 1",
            eval: |g| {
                if !matches!(g.is_regular(), Some(r) if r >= 1) {
                    return CheckOutcome::NotApplicable;
                }
                let w = regular_fd_witness(g).expect("regular graph");
                let alpha = independence_number(g).value;
                let omega = independence_number(&g.complement()).value;
                let valid = is_fair_dominating(g, w).is_some();
                let small = w.card() <= g.order() - alpha.max(omega) + 1;
                pass_if(valid && small, || {
                    format!("witness={w} alpha={alpha} omega={omega} valid={valid}")
                })
            },
        },
        Check {
            id: "prop5_rep_window",
            description: "a connected graph of order >= 6 attaining fd = n - 2 has repetition number 2..=4",
            eval: |g| {
                let n = g.order();
                if n < 6 || !g.is_connected() {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                if fd != n - 2 {
                    return CheckOutcome::NotApplicable;
                }
                let rep = g.degree_profile().expect("n >= 6").rep;
                pass_if((2..=4).contains(&rep), || format!("fd=n-2={fd} rep={rep}"))
            },
        },
    ]
}

/// 200 random regular graphs with 3 <= n <= 14, r >= 1, seeded.
fn random_regular_sample(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = Rng::new(seed ^ 0x5eed_4e63);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 3 + rng.below(12) as usize;
        let mut r = 1 + rng.below((n - 1).min(5) as u64) as usize;
        if n * r % 2 == 1 {
            if r + 1 < n {
                r += 1;
            } else {
                r -= 1;
            }
        }
        if r == 0 {
            continue;
        }
        out.push(generators::random_regular_graph(n, r, rng.next_u64()).expect("valid n, r"));
    }
    out
}

fn upper_bounds_corpus(limits: &SuiteLimits) -> Corpus {
    let max = limits.max_order.unwrap_or(6).clamp(1, 7);
    let regulars = random_regular_sample(limits.seed, 200);
    Corpus {
        description: format!(
            "all labeled graphs of orders 1..={max} plus 200 seeded random regular graphs of orders 3..=14"
        ),
        stream: Box::new(
            (1..=max)
                .flat_map(|n| generators::graphs_exhaustive(n).unwrap())
                .chain(regulars),
        ),
    }
}

// ---------------------------------------------------------------------------
// extremal: families attaining fd = n - 2
// ---------------------------------------------------------------------------

fn extremal_checks() -> Vec<Check> {
    vec![
        Check {
            id: "extremal_fd_order_minus_two",
            description: "every corpus instance attains fd = n - 2",
            eval: |g| {
                let n = g.order();
                let fd = fd_exact(g).value;
                pass_if(fd == n - 2, || format!("fd={fd} n={n}"))
            },
        },
        Check {
            id: "extremal_connected",
            description: "the extremal instances are connected",
            eval: |g| pass_if(g.is_connected(), || "disconnected".to_string()),
        },
    ]
}

fn extremal_corpus(limits: &SuiteLimits) -> Corpus {
    let max_order = limits.max_order.unwrap_or(10).clamp(6, 14);
    let mut graphs = Vec::new();
    for n in 3..=5usize {
        graphs.push(generators::cycle(n).unwrap());
    }
    let mut k = 3;
    while 2 * k <= max_order {
        graphs.push(generators::extremal_h(k).unwrap());
        if 2 * k < max_order {
            graphs.push(generators::extremal_f(k).unwrap());
        }
        k += 1;
    }
    Corpus {
        description: format!(
            "cycles C_3..C_5 and the even/odd extremal families up to order {max_order}"
        ),
        stream: Box::new(graphs.into_iter()),
    }
}

// ---------------------------------------------------------------------------
// trees
// ---------------------------------------------------------------------------

fn has_adjacent_pair(g: &Graph, s: VertexSet) -> bool {
    s.iter().any(|v| !(g.neighbors(v) & s).is_empty())
}

fn trees_checks() -> Vec<Check> {
    vec![
        Check {
            id: "tree_half_bound",
            description: "a tree of order >= 2 has fd <= n/2",
            eval: |g| {
                if !is_tree(g) || g.order() < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                pass_if(2 * fd <= g.order(), || format!("fd={fd} n={}", g.order()))
            },
        },
        Check {
            id: "tree_corona_equality",
            description: "fd = n/2 exactly when the tree is the corona of a tree",
            eval: |g| {
                if !is_tree(g) || g.order() < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                let corona = is_corona_of_tree(g).expect("tree").is_some();
                pass_if((2 * fd == g.order()) == corona, || {
                    format!("fd={fd} n={} corona={corona}", g.order())
                })
            },
        },
        Check {
            id: "tree_solver_agreement",
            description: "the tree-specialized solver agrees with the general solver, witness included",
            eval: |g| {
                if !is_tree(g) {
                    return CheckOutcome::NotApplicable;
                }
                let spec = fd_tree(g).expect("tree");
                let gen = fd_exact(g);
                pass_if(spec.value == gen.value && spec.witness == gen.witness, || {
                    format!(
                        "fd_tree={} {} fd_exact={} {}",
                        spec.value, spec.witness, gen.value, gen.witness
                    )
                })
            },
        },
        Check {
            id: "fd_tree_level_one",
            description: "in a tree every minimum fair dominating set is 1-fair",
            eval: |g| {
                if !is_tree(g) || g.order() < 2 {
                    return CheckOutcome::NotApplicable;
                }
                for d in minimum_fd_sets(g).expect("order capped") {
                    if is_fair_dominating(g, d) != Some(Fairness::Level(1)) {
                        return CheckOutcome::Fail(format!("minimum set {d} is not 1-fair"));
                    }
                }
                CheckOutcome::Pass
            },
        },
        Check {
            id: "o_tree1_strong_supports",
            description: "every minimum fair dominating set contains all strong support vertices",
            eval: |g| {
                if !is_tree(g) || g.order() < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let strong = strong_support_vertices(g);
                for d in minimum_fd_sets(g).expect("order capped") {
                    if !strong.is_subset_of(d) {
                        return CheckOutcome::Fail(format!("set {d} misses strong supports {strong}"));
                    }
                }
                CheckOutcome::Pass
            },
        },
        Check {
            id: "o_tree_leaf_bound",
            description: "a tree of order >= 3 with l leaves has fd <= n - l",
            eval: |g| {
                if !is_tree(g) || g.order() < 3 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                let l = leaves(g).card();
                pass_if(fd <= g.order() - l, || format!("fd={fd} n={} leaves={l}", g.order()))
            },
        },
        Check {
            id: "char_tree_equiv",
            description: "fd < n - l, all minimum sets leaving an adjacent outside pair, and a special corona-subtree are equivalent",
            eval: |g| {
                if !is_tree(g) || g.order() < 3 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                let l = leaves(g).card();
                let i = fd < g.order() - l;
                let full = g.full_set();
                let ii = minimum_fd_sets(g)
                    .expect("order capped")
                    .iter()
                    .all(|&d| has_adjacent_pair(g, full - d));
                let iii = find_special_corona_subtree(g).expect("tree within cap").is_some();
                pass_if(i == ii && ii == iii, || format!("(i)={i} (ii)={ii} (iii)={iii}"))
            },
        },
        Check {
            id: "char_treec_equiv",
            description: "fd = n - l, some minimum set with independent complement, and no special corona-subtree are equivalent",
            eval: |g| {
                if !is_tree(g) || g.order() < 3 {
                    return CheckOutcome::NotApplicable;
                }
                let fd = fd_exact(g).value;
                let l = leaves(g).card();
                let i = fd == g.order() - l;
                let full = g.full_set();
                let ii = minimum_fd_sets(g)
                    .expect("order capped")
                    .iter()
                    .any(|&d| !has_adjacent_pair(g, full - d));
                let iii = find_special_corona_subtree(g).expect("tree within cap").is_none();
                pass_if(i == ii && ii == iii, || format!("(i)={i} (ii)={ii} (iii)={iii}"))
            },
        },
        Check {
            id: "o_tree2_corona_partition",
            description: "a corona tree splits into two fair dominating halves: supports and leaves",
            eval: |g| {
                if !is_tree(g) || g.order() < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let Some(pairing) = is_corona_of_tree(g).expect("tree") else {
                    return CheckOutcome::NotApplicable;
                };
                let supports: VertexSet = pairing.iter().map(|&(s, _)| s).collect();
                let leaf_side: VertexSet = pairing.iter().map(|&(_, l)| l).collect();
                let n = g.order();
                let ok = supports.card() == n / 2
                    && leaf_side.card() == n / 2
                    && is_fair_dominating(g, supports) == Some(Fairness::Level(1))
                    && is_fair_dominating(g, leaf_side) == Some(Fairness::Level(1))
                    && fd_exact(g).value == n / 2;
                pass_if(ok, || format!("supports={supports} leaves={leaf_side}"))
            },
        },
    ]
}

fn trees_corpus(limits: &SuiteLimits) -> Corpus {
    let max = limits.max_order.unwrap_or(8).clamp(2, 9);
    Corpus {
        description: format!("all labeled trees of orders 2..={max}"),
        stream: Box::new((2..=max).flat_map(|n| generators::trees_exhaustive(n).unwrap())),
    }
}

// ---------------------------------------------------------------------------
// mop: polygon triangulations
// ---------------------------------------------------------------------------

fn mop_checks() -> Vec<Check> {
    vec![
        Check {
            id: "mop_bip_degree_three",
            description: "the degree-3 vertices of a triangulation induce a bipartite graph",
            eval: |g| {
                let deg3: VertexSet = g.vertices().filter(|&v| g.degree(v) == 3).collect();
                let (h, _) = g.induced_subgraph(deg3).expect("subset");
                pass_if(h.bipartition().is_some(), || {
                    format!("degree-3 set {deg3} has an odd cycle")
                })
            },
        },
        Check {
            id: "mop_fd_17_19",
            description: "a triangulation of the polygon has fd < 17n/19",
            eval: |g| {
                let n = g.order();
                let fd = fd_exact(g).value;
                pass_if(19 * fd < 17 * n, || format!("fd={fd} n={n}"))
            },
        },
        Check {
            id: "mop_edge_count",
            description: "a triangulation on n vertices has exactly 2n-3 edges",
            eval: |g| {
                let (n, m) = (g.order(), g.size());
                pass_if(m == 2 * n - 3, || format!("m={m} n={n}"))
            },
        },
        Check {
            id: "mop_min_degree",
            description: "every triangulation has minimum degree 2",
            eval: |g| {
                let d = g.degree_profile().expect("n >= 3").min_degree;
                pass_if(d == 2, || format!("mindeg={d}"))
            },
        },
        Check {
            id: "mop_degree_two_independent",
            description: "for n >= 4 the degree-2 vertices are pairwise nonadjacent",
            eval: |g| {
                if g.order() < 4 {
                    return CheckOutcome::NotApplicable;
                }
                let deg2: VertexSet = g.vertices().filter(|&v| g.degree(v) == 2).collect();
                pass_if(!has_adjacent_pair(g, deg2), || {
                    format!("adjacent degree-2 pair in {deg2}")
                })
            },
        },
    ]
}

fn mop_corpus(limits: &SuiteLimits) -> Corpus {
    let max = limits.max_order.unwrap_or(10).clamp(3, 12);
    Corpus {
        description: format!("all polygon triangulations of orders 3..={max}"),
        stream: Box::new((3..=max).flat_map(|n| generators::mops_exhaustive(n).unwrap())),
    }
}

// ---------------------------------------------------------------------------
// nordhaus_gaddum
// ---------------------------------------------------------------------------

fn nordhaus_gaddum_checks() -> Vec<Check> {
    vec![
        Check {
            id: "ng_sum_bounds",
            description: "for n >= 5, 3 <= fd(G) + fd(complement) <= 2n - 4",
            eval: |g| {
                let n = g.order();
                if n < 5 {
                    return CheckOutcome::NotApplicable;
                }
                let s = fd_exact(g).value + fd_exact(&g.complement()).value;
                pass_if((3..=2 * n - 4).contains(&s), || format!("sum={s} n={n}"))
            },
        },
        Check {
            id: "ng_product_bounds",
            description: "for n >= 4, 2 <= fd(G) * fd(complement) <= (n-2)^2",
            eval: |g| {
                let n = g.order();
                if n < 4 {
                    return CheckOutcome::NotApplicable;
                }
                let p = fd_exact(g).value * fd_exact(&g.complement()).value;
                pass_if((2..=(n - 2) * (n - 2)).contains(&p), || format!("product={p} n={n}"))
            },
        },
        Check {
            id: "ng_k4_boundary",
            description: "the complete graph on 4 vertices breaks the sum bound: fd + fd(complement) = 5 > 2n - 4",
            eval: |g| {
                let n = g.order();
                if n != 4 || g.size() != 6 {
                    return CheckOutcome::NotApplicable;
                }
                let s = fd_exact(g).value + fd_exact(&g.complement()).value;
                pass_if(s == 5 && s > 2 * n - 4, || format!("sum={s}"))
            },
        },
        Check {
            id: "ng_k3_boundary",
            description: "the triangle breaks the product bound: fd * fd(complement) = 3 > (n-2)^2",
            eval: |g| {
                let n = g.order();
                if n != 3 || g.size() != 3 {
                    return CheckOutcome::NotApplicable;
                }
                let p = fd_exact(g).value * fd_exact(&g.complement()).value;
                pass_if(p == 3 && p > (n - 2) * (n - 2), || format!("product={p}"))
            },
        },
    ]
}

fn nordhaus_gaddum_corpus(limits: &SuiteLimits) -> Corpus {
    let max = limits.max_order.unwrap_or(6).clamp(3, 7);
    exhaustive_orders_corpus(3, max)
}

// ---------------------------------------------------------------------------
// unions
// ---------------------------------------------------------------------------

/// The sharp union instance: a 6-vertex star next to the octahedron.
fn union_sharpness_instance() -> Graph {
    disjoint_union(&[
        generators::star(6).unwrap(),
        generators::complete_multipartite(&[2, 2, 2]).unwrap(),
    ])
    .expect("order 12")
}

/// The sensitivity instance: the sharp union plus one edge inside the
/// octahedron's first part (vertices 6 and 7 of the union).
fn union_sensitivity_instance() -> Graph {
    let h = union_sharpness_instance();
    let mut edges = h.edges();
    edges.push((6, 7));
    Graph::from_edges(12, &edges).expect("order 12")
}

fn unions_checks() -> Vec<Check> {
    vec![
        Check {
            id: "union_component_bound",
            description: "for q >= 2 components, fd(H) - sum of component fd is at most (q-1)(n-q)/q",
            eval: |g| {
                let comps = g.components();
                let q = comps.len();
                if q < 2 {
                    return CheckOutcome::NotApplicable;
                }
                let n = g.order();
                let total = fd_exact(g).value as i64;
                let parts: i64 = comps
                    .iter()
                    .map(|&c| fd_exact(&g.induced_subgraph(c).expect("component").0).value as i64)
                    .sum();
                let gap = total - parts;
                pass_if(
                    (q as i64) * gap <= ((q - 1) * (n - q)) as i64,
                    || format!("fd={total} component-sum={parts} q={q} n={n}"),
                )
            },
        },
        Check {
            id: "union_sharpness",
            description: "star-plus-octahedron union: component fd 1 and 2, union fd 7, gap 4 within the two-part bound 5",
            eval: |g| {
                if *g != union_sharpness_instance() {
                    return CheckOutcome::NotApplicable;
                }
                let comps = g.components();
                let fd1 = fd_exact(&g.induced_subgraph(comps[0]).expect("star").0).value;
                let fd2 = fd_exact(&g.induced_subgraph(comps[1]).expect("octahedron").0).value;
                let fd = fd_exact(g).value;
                let gap = fd - fd1 - fd2;
                // two parts, twelve vertices: bound (k-1)(n-k)/k = 5
                pass_if(fd1 == 1 && fd2 == 2 && fd == 7 && gap == 4 && 2 * gap <= 10, || {
                    format!("fd1={fd1} fd2={fd2} fd={fd} gap={gap}")
                })
            },
        },
        Check {
            id: "union_sensitivity",
            description: "one added edge collapses the union's fd from 7 to 2, a drop of at least n/2 - 1",
            eval: |g| {
                if *g != union_sensitivity_instance() {
                    return CheckOutcome::NotApplicable;
                }
                let before = fd_exact(&union_sharpness_instance()).value;
                let after = fd_exact(g).value;
                let n = g.order();
                pass_if(after == 2 && before - after >= n / 2 - 1, || {
                    format!("before={before} after={after} n={n}")
                })
            },
        },
    ]
}

fn unions_corpus(limits: &SuiteLimits) -> Corpus {
    let mut graphs = vec![union_sharpness_instance(), union_sensitivity_instance()];
    let mut rng = Rng::new(limits.seed ^ 0x0041_0045);
    for _ in 0..40 {
        let k = 2 + rng.below(2) as usize;
        let parts: Vec<Graph> = (0..k)
            .map(|_| {
                let n = 3 + rng.below(3) as usize;
                generators::random_connected_graph(n, rng.next_u64()).expect("small order")
            })
            .collect();
        graphs.push(disjoint_union(&parts).expect("at most 15 vertices"));
    }
    Corpus {
        description: "the sharp union instance, its one-edge perturbation, and 40 seeded random 2- and 3-part unions of connected graphs".to_string(),
        stream: Box::new(graphs.into_iter()),
    }
}

// ---------------------------------------------------------------------------
// line_graph
// ---------------------------------------------------------------------------

/// A canonical perfect matching for the corpus instances that have one.
fn known_perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    if *g == generators::petersen() {
        return Some((0..5).map(|i| (i, i + 5)).collect());
    }
    if g.order() == 4 && g.size() == 6 {
        return Some(vec![(0, 1), (2, 3)]);
    }
    let n = g.order();
    if n >= 4 && n.is_multiple_of(2) && g.is_regular() == Some(2) && g.is_connected() {
        return Some((0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect());
    }
    None
}

fn line_graph_checks() -> Vec<Check> {
    vec![
        Check {
            id: "line1_perfect_matching",
            description: "a perfect matching yields a 2-fair dominating set of the line graph of matching size",
            eval: |g| {
                let Some(matching) = known_perfect_matching(g) else {
                    return CheckOutcome::NotApplicable;
                };
                let w = crate::fairdom::line_graph_fd_witness(g, &matching).expect("valid matching");
                let (l, _) = g.line_graph().expect("small size");
                let fair = is_fair_dominating(&l, w);
                let fd_l = fd_exact(&l).value;
                pass_if(
                    fair == Some(Fairness::Level(2)) && w.card() == matching.len() && fd_l <= matching.len(),
                    || format!("witness={w} fairness={fair:?} fd(L)={fd_l}"),
                )
            },
        },
        Check {
            id: "line1_two_factor",
            description: "a cycle is its own 2-factor; all edges give a (vacuous) fair dominating set of the line graph",
            eval: |g| {
                if !(g.order() >= 3 && g.is_regular() == Some(2) && g.is_connected()) {
                    return CheckOutcome::NotApplicable;
                }
                let w = crate::fairdom::line_graph_fd_witness(g, &g.edges()).expect("2-factor");
                let (l, _) = g.line_graph().expect("small size");
                let fair = is_fair_dominating(&l, w);
                let fd_l = fd_exact(&l).value;
                pass_if(fair.is_some() && fd_l <= g.size(), || {
                    format!("witness={w} fairness={fair:?} fd(L)={fd_l}")
                })
            },
        },
    ]
}

fn line_graph_corpus(limits: &SuiteLimits) -> Corpus {
    let max = limits.max_order.unwrap_or(8).clamp(3, 10);
    let mut graphs = vec![generators::petersen(), generators::complete(4).unwrap()];
    for n in 3..=max {
        graphs.push(generators::cycle(n).unwrap());
    }
    Corpus {
        description: format!(
            "the Petersen graph, the complete graph on 4 vertices, and cycles C_3..C_{max}"
        ),
        stream: Box::new(graphs.into_iter()),
    }
}

// ---------------------------------------------------------------------------
// caro_wei: the imported classical lower bounds
// ---------------------------------------------------------------------------

fn caro_wei_checks() -> Vec<Check> {
    vec![
        Check {
            id: "caro_wei_independence",
            description: "alpha >= sum of 1/(1+deg) >= n/(avg+1), checked in exact rationals",
            eval: |g| {
                let n = g.order();
                if n == 0 {
                    return CheckOutcome::NotApplicable;
                }
                let alpha = independence_number(g).value;
                let mut sum = Ratio::from_int(0);
                for v in g.vertices() {
                    sum = sum + Ratio::new(1, 1 + g.degree(v) as i128);
                }
                let global = Ratio::new((n * n) as i128, (2 * g.size() + n) as i128);
                let ok = Ratio::from_int(alpha as i128) >= sum && sum >= global;
                pass_if(ok, || {
                    format!("alpha={alpha} degree-sum={sum} n/(avg+1)={global}")
                })
            },
        },
        Check {
            id: "caro_west_repetition",
            description: "rep >= n/(2 avg - 2 mindeg + 1), checked in exact rationals",
            eval: |g| {
                let n = g.order();
                if n == 0 {
                    return CheckOutcome::NotApplicable;
                }
                let p = g.degree_profile().expect("n >= 1");
                let weight = (4 * g.size() + n) as i128 - 2 * (p.min_degree * n) as i128;
                let ok = p.rep as i128 * weight >= (n * n) as i128;
                pass_if(ok, || format!("rep={} n={n} weight={weight}", p.rep))
            },
        },
    ]
}

fn caro_wei_corpus(limits: &SuiteLimits) -> Corpus {
    let exhaustive_max = limits.max_order.unwrap_or(5).clamp(1, 5);
    let mut rng = Rng::new(limits.seed ^ 0xca50);
    let mut graphs: Vec<Graph> = Vec::new();
    graphs.push(generators::petersen());
    for _ in 0..100 {
        let n = 1 + rng.below(14) as usize;
        graphs.push(generators::random_graph(n, rng.next_u64()).expect("small order"));
    }
    for _ in 0..100 {
        let n = 2 + rng.below(13) as usize;
        graphs.push(generators::random_tree(n, rng.next_u64()).expect("small order"));
    }
    for _ in 0..50 {
        let n = 3 + rng.below(10) as usize;
        graphs.push(generators::random_mop(n, rng.next_u64()).expect("small order"));
    }
    graphs.extend(random_regular_sample(limits.seed, 200));
    let stream = (1..=exhaustive_max)
        .flat_map(|n| generators::graphs_exhaustive(n).unwrap())
        .chain(graphs);
    Corpus {
        description: format!(
            "all labeled graphs of orders 1..={exhaustive_max}, the Petersen graph, and seeded random graphs, trees, triangulations and regular graphs up to order 14"
        ),
        stream: Box::new(stream),
    }
}
