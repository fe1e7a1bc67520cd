//! Fair domination: predicates, exact solvers for fd / kfd / outr, the
//! tree-specialized solver, corona recognition, and the constructive
//! witnesses for regular graphs and line graphs.
//!
//! Search strategy everywhere: iterate the target cardinality ascending and
//! enumerate masks of that cardinality ascending, accepting the first hit.
//! fd is usually small on the corpora, so ascending order certifies
//! minimality without exploring all 2^n subsets; candidates failing a cheap
//! closed-neighborhood union test are rejected before the fairness count.

use crate::combinat::{deposit, subsets_of_card};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::independence_number;

/// The fairness level a witness certifies. The full vertex set is a fair
/// dominating set for every level, so it carries the distinguished tag
/// instead of an arbitrary integer.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Fairness {
    Vacuous,
    Level(usize),
}

/// Which solver produced a result.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Fd,
    Kfd(usize),
    Outr,
    FdTree,
}

/// Invariant value, minimum (or for outr, maximum) witness, and the
/// fairness level the witness certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdResult {
    pub value: usize,
    pub witness: VertexSet,
    pub fairness: Fairness,
    pub mode: SolveMode,
}

/// If `d` is a fair dominating set, the level it certifies: `Vacuous` for
/// the full set, otherwise the common neighbor count k >= 1 that every
/// outside vertex sees in `d`.
pub fn is_fair_dominating(g: &Graph, d: VertexSet) -> Option<Fairness> {
    debug_assert!(d.is_subset_of(g.full_set()));
    let full = g.full_set().bits();
    let mask = d.bits();
    if mask == full {
        return Some(Fairness::Vacuous);
    }
    let mut level = None;
    let mut outside = full & !mask;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        let cnt = (g.neighbors(v).bits() & mask).count_ones() as usize;
        if cnt == 0 {
            return None; // not dominated
        }
        match level {
            None => level = Some(cnt),
            Some(k) if k != cnt => return None,
            _ => {}
        }
    }
    level.map(Fairness::Level)
}

/// If every member of nonempty `q` has the same positive number of
/// neighbors outside `q`, that common out-degree.
pub fn is_out_regular(g: &Graph, q: VertexSet) -> Result<Option<usize>> {
    if q.is_empty() {
        return Err(Error::EmptySet);
    }
    debug_assert!(q.is_subset_of(g.full_set()));
    let outside_mask = g.full_set().bits() & !q.bits();
    let mut level = None;
    for v in q.iter() {
        let cnt = (g.neighbors(v).bits() & outside_mask).count_ones() as usize;
        if cnt == 0 {
            return Ok(None);
        }
        match level {
            None => level = Some(cnt),
            Some(k) if k != cnt => return Ok(None),
            _ => {}
        }
    }
    Ok(level)
}

/// Core ascending search shared by `fd_exact` and `kfd_exact`. When
/// `level_required` is set, only sets certifying exactly that level qualify
/// (the full set still qualifies vacuously).
fn solve_fd(g: &Graph, level_required: Option<usize>, mode: SolveMode) -> FdResult {
    let n = g.order();
    let full = g.full_set().bits();
    for c in 0..=n {
        for mask in subsets_of_card(n, c) {
            if mask == full {
                return FdResult {
                    value: c,
                    witness: VertexSet::from_bits(mask),
                    fairness: Fairness::Vacuous,
                    mode,
                };
            }
            // cheap domination rejection first
            let mut covered = mask;
            let mut members = mask;
            while members != 0 {
                let v = members.trailing_zeros() as usize;
                members &= members - 1;
                covered |= g.neighbors(v).bits();
            }
            if covered != full {
                continue;
            }
            // fairness: all outside counts equal
            let mut level = None;
            let mut ok = true;
            let mut outside = full & !mask;
            while outside != 0 {
                let v = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                let cnt = (g.neighbors(v).bits() & mask).count_ones() as usize;
                match level {
                    None => level = Some(cnt),
                    Some(k) if k != cnt => {
                        ok = false;
                        break;
                    }
                    _ => {}
                }
            }
            if !ok {
                continue;
            }
            let k = level.expect("outside nonempty");
            debug_assert!(k >= 1, "dominating set leaves outside vertex uncovered");
            if level_required.is_some_and(|need| need != k) {
                continue;
            }
            return FdResult {
                value: c,
                witness: VertexSet::from_bits(mask),
                fairness: Fairness::Level(k),
                mode,
            };
        }
    }
    unreachable!("the full vertex set is always a fair dominating set")
}

/// Exact fair domination number: the minimum cardinality over fair
/// dominating sets of every level, the full set included. On the edgeless
/// graph the search yields n, matching the convention.
pub fn fd_exact(g: &Graph) -> FdResult {
    let res = solve_fd(g, None, SolveMode::Fd);
    debug_assert!(g.size() > 0 || res.value == g.order());
    res
}

/// Exact k-fair domination number for a fixed level `k >= 1`; the full set
/// is permitted as the vacuous fallback.
pub fn kfd_exact(g: &Graph, k: usize) -> FdResult {
    assert!(k >= 1, "fairness level must be >= 1");
    solve_fd(g, Some(k), SolveMode::Kfd(k))
}

/// Exact out-regular number: the maximum cardinality of an out-regular set,
/// 0 with an empty witness on the edgeless graph.
pub fn outr_exact(g: &Graph) -> FdResult {
    let n = g.order();
    for c in (1..=n).rev() {
        for mask in subsets_of_card(n, c) {
            let q = VertexSet::from_bits(mask);
            if let Ok(Some(k)) = is_out_regular(g, q) {
                return FdResult {
                    value: c,
                    witness: q,
                    fairness: Fairness::Level(k),
                    mode: SolveMode::Outr,
                };
            }
        }
    }
    debug_assert_eq!(g.size(), 0);
    FdResult {
        value: 0,
        witness: VertexSet::EMPTY,
        fairness: Fairness::Vacuous,
        mode: SolveMode::Outr,
    }
}

/// True iff `g` is connected with exactly n-1 edges (n >= 1).
pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.size() == g.order() - 1 && g.is_connected()
}

/// Degree-1 vertices.
pub fn leaves(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) == 1).collect()
}

/// Vertices with at least one leaf neighbor.
pub fn support_vertices(g: &Graph) -> VertexSet {
    let l = leaves(g);
    g.vertices()
        .filter(|&v| !(g.neighbors(v) & l).is_empty())
        .collect()
}

/// Vertices with at least two leaf neighbors; forced into every 1-fair
/// dominating set.
pub fn strong_support_vertices(g: &Graph) -> VertexSet {
    let l = leaves(g);
    g.vertices()
        .filter(|&v| (g.neighbors(v) & l).card() >= 2)
        .collect()
}

/// Tree-specialized fair domination solver: in a tree every minimum fair
/// dominating set is 1-fair, so only level-1 sets are searched, and every
/// 1-fair dominating set must contain all strong support vertices, so the
/// enumeration is seeded with them.
pub fn fd_tree(t: &Graph) -> Result<FdResult> {
    if !is_tree(t) {
        return Err(Error::NotATree(
            "fd_tree needs a connected graph with n-1 edges",
        ));
    }
    let n = t.order();
    let full = t.full_set().bits();
    let seed = strong_support_vertices(t).bits();
    let pool = full & !seed;
    let seeded = seed.count_ones() as usize;
    for c in seeded..=n {
        for free in subsets_of_card(pool.count_ones() as usize, c - seeded) {
            let mask = seed | deposit(free, pool);
            let d = VertexSet::from_bits(mask);
            match is_fair_dominating(t, d) {
                Some(Fairness::Level(1)) | Some(Fairness::Vacuous) => {
                    return Ok(FdResult {
                        value: c,
                        witness: d,
                        fairness: if mask == full {
                            Fairness::Vacuous
                        } else {
                            Fairness::Level(1)
                        },
                        mode: SolveMode::FdTree,
                    });
                }
                _ => {}
            }
        }
    }
    unreachable!("the full vertex set always qualifies")
}

/// Every minimum fair dominating set, in ascending mask order. Quantifying
/// over all minimum sets is exponential, so this is only legal for n <= 16.
pub fn minimum_fd_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > 16 {
        return Err(Error::TooLarge {
            what: "minimum fair-dominating-set enumeration order",
            max: 16,
        });
    }
    let value = fd_exact(g).value;
    Ok(subsets_of_card(n, value)
        .map(VertexSet::from_bits)
        .filter(|&d| is_fair_dominating(g, d).is_some())
        .collect())
}

/// If the tree is the corona of a tree, the support -> leaf pairing, sorted
/// by support. A corona is recognized by: even order, every vertex either a
/// leaf or a support with exactly one leaf neighbor, and the non-leaves
/// inducing a (single-vertex allowed) subtree; the two-vertex tree is the
/// corona of a single vertex.
pub fn is_corona_of_tree(t: &Graph) -> Result<Option<Vec<(usize, usize)>>> {
    if !is_tree(t) {
        return Err(Error::NotATree("corona recognition needs a tree"));
    }
    let n = t.order();
    if n % 2 == 1 {
        return Ok(None);
    }
    if n == 2 {
        return Ok(Some(vec![(0, 1)]));
    }
    let l = leaves(t);
    let internal = t.full_set() - l;
    if l.card() != internal.card() {
        return Ok(None);
    }
    let mut pairing = Vec::with_capacity(internal.card());
    for v in internal.iter() {
        let mine = t.neighbors(v) & l;
        if mine.card() != 1 {
            return Ok(None);
        }
        pairing.push((v, mine.min_elem().unwrap()));
    }
    // non-leaves must induce a connected subgraph (a subtree of t)
    let start = internal
        .min_elem()
        .expect("internal vertices exist for n >= 4");
    if t.reach_within(start, internal) != internal {
        return Ok(None);
    }
    Ok(Some(pairing))
}

/// Support vertices of an induced subtree `h` of `t` given by vertex set
/// `s`, in `t`'s labels: members of `s` adjacent within `s` to a vertex of
/// `s`-degree one.
fn supports_within(t: &Graph, s: VertexSet) -> VertexSet {
    let leaves_in_s: VertexSet = s
        .iter()
        .filter(|&v| (t.neighbors(v) & s).card() == 1)
        .collect();
    s.iter()
        .filter(|&v| !(t.neighbors(v) & leaves_in_s).is_empty())
        .collect()
}

/// Search for a proper induced subtree H that is the corona of a tree and
/// whose support vertices have no neighbors outside H. Exhaustive over
/// connected even-cardinality subsets in ascending (cardinality, mask)
/// order; a verification oracle, not a scalable solver, hence the n <= 16
/// cap.
pub fn find_special_corona_subtree(t: &Graph) -> Result<Option<VertexSet>> {
    if !is_tree(t) {
        return Err(Error::NotATree("special-corona search needs a tree"));
    }
    let n = t.order();
    if n > 16 {
        return Err(Error::TooLarge {
            what: "special-corona search order",
            max: 16,
        });
    }
    for c in (2..n).step_by(2) {
        'mask: for mask in subsets_of_card(n, c) {
            let s = VertexSet::from_bits(mask);
            let start = s.min_elem().unwrap();
            if t.reach_within(start, s) != s {
                continue;
            }
            let (h, _map) = t.induced_subgraph(s).expect("subset of vertices");
            if is_corona_of_tree(&h)?.is_none() {
                continue;
            }
            // no vertex outside H may touch a support vertex of H
            for u in supports_within(t, s).iter() {
                if !t.neighbors(u).is_subset_of(s) {
                    continue 'mask;
                }
            }
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Constructive fair-dominating witness for an r-regular graph (r >= 1):
/// take a maximum independent set or maximum clique X, whichever is larger
/// (ties prefer the independent set); the complement of X is fair unless X
/// induces a full K_{r+1} component, in which case one vertex of X (least
/// index) is added back.
pub fn regular_fd_witness(g: &Graph) -> Result<VertexSet> {
    let r = match g.is_regular() {
        Some(r) if r >= 1 => r,
        _ => return Err(Error::NotRegular),
    };
    let alpha = independence_number(g);
    let omega = independence_number(&g.complement());
    let (x, induced_degree) = if alpha.value >= omega.value {
        (alpha.witness, 0)
    } else {
        (omega.witness, omega.value - 1)
    };
    let rest = g.full_set() - x;
    let witness = if induced_degree < r {
        rest
    } else {
        rest.with(x.min_elem().expect("clique nonempty"))
    };
    debug_assert!(is_fair_dominating(g, witness).is_some());
    Ok(witness)
}

/// Vertices of the line graph corresponding to `h_edges`, validated to form
/// a spanning r-regular subgraph of `g` (r >= 1). Such a set is a 2r-fair
/// dominating set of the line graph, certifying fd(L(g)) <= |h_edges|.
pub fn line_graph_fd_witness(g: &Graph, h_edges: &[(usize, usize)]) -> Result<VertexSet> {
    let mut norm: Vec<(usize, usize)> = Vec::with_capacity(h_edges.len());
    for &(u, v) in h_edges {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        norm.push((u.min(v), u.max(v)));
    }
    norm.sort_unstable();
    norm.dedup();
    let mut degree = vec![0usize; g.order()];
    for &(u, v) in &norm {
        degree[u] += 1;
        degree[v] += 1;
    }
    let r = degree.first().copied().unwrap_or(0);
    if r == 0 || degree.iter().any(|&d| d != r) {
        return Err(Error::NotSpanningRegular(
            "every vertex must meet the same positive number of selected edges",
        ));
    }
    let (_, edge_index_map) = g.line_graph()?;
    let witness = norm
        .iter()
        .map(|e| {
            edge_index_map
                .binary_search(e)
                .expect("validated edge appears in the lexicographic edge list")
        })
        .collect();
    Ok(witness)
}
