//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line with its measured wall time and asserting the stated
//! budget. Run with `cargo test --test acceptance` (add `-- --nocapture`
//! to see the timing lines).

use fairdom_core::fairdom::{
    fd_exact, is_fair_dominating, line_graph_fd_witness, regular_fd_witness, Fairness,
};
use fairdom_core::generators;
use fairdom_core::graph::disjoint_union;
use fairdom_core::io::{parse_graph6, write_graph6};
use fairdom_core::rng::Rng;
use fairdom_core::verify::{run_suite, SuiteLimits};
use std::time::{Duration, Instant};

fn finish(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "criterion {name}: PASS in {:.2?} (budget {:.0?})",
        elapsed, budget
    );
    assert!(
        elapsed < budget,
        "criterion {name} exceeded its time budget: {elapsed:.2?} >= {budget:.0?}"
    );
}

#[test]
fn c01_petersen_fair_domination() {
    let start = Instant::now();
    let pet = generators::petersen();
    let res = fd_exact(&pet);
    assert_eq!(res.value, 4);
    assert_eq!(res.witness.card(), 4);
    assert!(is_fair_dominating(&pet, res.witness).is_some());
    finish("01 (petersen fd = 4)", start, Duration::from_secs(1));
}

#[test]
fn c02_closed_forms() {
    let start = Instant::now();
    for n in 2..=12usize {
        let fd = fd_exact(&generators::path(n).unwrap()).value;
        assert_eq!(fd, n.div_ceil(3), "path on {n}");
    }
    for n in 3..=12usize {
        let fd = fd_exact(&generators::cycle(n).unwrap()).value;
        let expected = n.div_ceil(3) + usize::from(n >= 5 && n % 3 == 2);
        assert_eq!(fd, expected, "cycle on {n}");
    }
    for n in 1..=8usize {
        assert_eq!(
            fd_exact(&generators::complete(n).unwrap()).value,
            1,
            "complete on {n}"
        );
    }
    for m in 2..=5usize {
        for n in 2..=m {
            let g = generators::complete_bipartite(m, n).unwrap();
            assert_eq!(fd_exact(&g).value, 2, "complete bipartite ({m},{n})");
        }
    }
    finish("02 (closed forms)", start, Duration::from_secs(5));
}

#[test]
fn c03_extremal_families() {
    let start = Instant::now();
    for n in 3..=5usize {
        let h = generators::extremal_h(n).unwrap();
        assert_eq!(fd_exact(&h).value, 2 * n - 2, "even extremal family at {n}");
    }
    for n in 3..=4usize {
        let f = generators::extremal_f(n).unwrap();
        assert_eq!(fd_exact(&f).value, 2 * n - 1, "odd extremal family at {n}");
    }
    finish("03 (extremal families)", start, Duration::from_secs(30));
}

#[test]
fn c04_duality_suite() {
    let start = Instant::now();
    let limits = SuiteLimits {
        max_order: Some(6),
        ..Default::default()
    };
    let report = run_suite("duality", &limits).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert!(
        report.instances_checked >= 1024 + 32768,
        "orders 5 and 6 must be exhaustive"
    );
    let duality = report
        .checks
        .iter()
        .find(|t| t.id == "prop1_duality")
        .unwrap();
    assert!(duality.passed >= 1024 + 32768);
    assert_eq!(duality.failed, 0);
    finish(
        "04 (duality suite, orders <= 6)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn c05_tree_suite() {
    let start = Instant::now();
    let limits = SuiteLimits {
        max_order: Some(8),
        ..Default::default()
    };
    let report = run_suite("trees", &limits).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    let expected: u64 = (2..=8u64)
        .map(|n| if n <= 2 { 1 } else { n.pow(n as u32 - 2) })
        .sum();
    assert_eq!(report.instances_checked, expected); // 280392
    for id in [
        "tree_half_bound",
        "tree_corona_equality",
        "tree_solver_agreement",
        "fd_tree_level_one",
        "o_tree1_strong_supports",
        "o_tree_leaf_bound",
        "char_tree_equiv",
        "char_treec_equiv",
    ] {
        let t = report.checks.iter().find(|t| t.id == id).unwrap();
        assert_eq!(t.failed, 0, "{id}");
        assert!(t.passed > 0, "{id} never fired");
    }
    finish(
        "05 (tree suite, orders <= 8)",
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn c06_mop_suite() {
    let start = Instant::now();
    let limits = SuiteLimits {
        max_order: Some(10),
        ..Default::default()
    };
    let report = run_suite("mop", &limits).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    // Catalan(1..=8) summed over orders 3..=10
    assert_eq!(
        report.instances_checked,
        1 + 2 + 5 + 14 + 42 + 132 + 429 + 1430
    );
    finish(
        "06 (triangulation suite, orders <= 10)",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn c07_nordhaus_gaddum() {
    let start = Instant::now();
    let limits = SuiteLimits {
        max_order: Some(6),
        ..Default::default()
    };
    let report = run_suite("nordhaus_gaddum", &limits).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    let sum = report
        .checks
        .iter()
        .find(|t| t.id == "ng_sum_bounds")
        .unwrap();
    assert_eq!(
        sum.passed,
        1024 + 32768,
        "sum bound exhaustive on orders 5 and 6"
    );
    let product = report
        .checks
        .iter()
        .find(|t| t.id == "ng_product_bounds")
        .unwrap();
    assert_eq!(
        product.passed,
        64 + 1024 + 32768,
        "product bound exhaustive on orders 4..6"
    );

    // the boundary instances outside the bounds' valid range, reproduced exactly
    let k4 = generators::complete(4).unwrap();
    assert_eq!(fd_exact(&k4).value + fd_exact(&k4.complement()).value, 5);
    let k3 = generators::complete(3).unwrap();
    assert_eq!(fd_exact(&k3).value * fd_exact(&k3.complement()).value, 3);
    finish(
        "07 (nordhaus-gaddum suite)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn c08_union_sharpness_and_sensitivity() {
    let start = Instant::now();
    let star = generators::star(6).unwrap();
    let octa = generators::complete_multipartite(&[2, 2, 2]).unwrap();
    assert_eq!(fd_exact(&star).value, 1);
    assert_eq!(fd_exact(&octa).value, 2);

    let union = disjoint_union(&[star, octa]).unwrap();
    assert_eq!(union.order(), 12);
    let fd_union = fd_exact(&union).value;
    assert_eq!(fd_union, 7);
    let gap = fd_union - 1 - 2;
    assert_eq!(gap, 4);
    // two-part bound (k-1)(n-k)/k at k=2, n=12
    assert!(2 * gap <= 10);

    // adding one edge inside the octahedron's 2-part collapses fd to 2
    let mut edges = union.edges();
    edges.push((6, 7));
    let perturbed = fairdom_core::Graph::from_edges(12, &edges).unwrap();
    let fd_after = fd_exact(&perturbed).value;
    assert_eq!(fd_after, 2);
    assert!(fd_union - fd_after >= 12 / 2 - 1);
    assert_eq!(fd_union - fd_after, 5);
    finish(
        "08 (union sharpness and sensitivity)",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn c09_line_graph_bound() {
    let start = Instant::now();
    let pet = generators::petersen();
    let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
    let witness = line_graph_fd_witness(&pet, &spokes).unwrap();
    assert_eq!(witness.card(), 5);
    let (line, _) = pet.line_graph().unwrap();
    assert_eq!(line.order(), 15);
    assert_eq!(is_fair_dominating(&line, witness), Some(Fairness::Level(2)));
    assert!(fd_exact(&line).value <= 5);
    finish(
        "09 (line graph matching bound)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn c10_regular_witness_and_imported_bounds() {
    let start = Instant::now();
    // construction validity on 200 seeded random regular graphs, 3 <= n <= 14
    let mut rng = Rng::new(100);
    let mut produced = 0;
    while produced < 200 {
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
        let g = generators::random_regular_graph(n, r, rng.next_u64()).unwrap();
        let w = regular_fd_witness(&g).unwrap();
        assert!(
            is_fair_dominating(&g, w).is_some(),
            "witness must be fair dominating"
        );
        produced += 1;
    }
    // the imported classical inequalities hold on every corpus graph
    let report = run_suite("caro_wei", &SuiteLimits::default()).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    finish(
        "10 (regular witness + imported bounds)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn c11_graph6_round_trip() {
    let start = Instant::now();
    // golden pair
    assert_eq!(write_graph6(&generators::complete(3).unwrap()), "Bw");
    assert_eq!(
        parse_graph6("Bw").unwrap(),
        generators::complete(3).unwrap()
    );
    // exhaustive orders 0..=5
    for n in 0..=5usize {
        for g in generators::graphs_exhaustive(n).unwrap() {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
    // 10,000 seeded random graphs of order <= 20
    let mut rng = Rng::new(110);
    for _ in 0..10_000 {
        let n = rng.below(21) as usize;
        let g = generators::random_graph(n, rng.next_u64()).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
    finish("11 (graph6 round-trip)", start, Duration::from_secs(10));
}
