//! Exact classical invariants: domination, k-domination, independence,
//! chromatic number, packings and perfect dominating sets.
//!
//! Every solver is an exact exponential search with bit-vector pruning; the
//! results feed inequality checks where the slack direction matters, so
//! there are no approximation paths. Witnesses are deterministic: ascending
//! cardinality, then ascending bit-mask value (for the maximization
//! problems, the least mask among the optima).

use crate::combinat::subsets_of_card;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An invariant value together with a witness set that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// Chromatic number with a proper coloring witness (colors 0..value-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub value: usize,
    pub coloring: Vec<usize>,
}

/// True iff the closed neighborhood of `d` covers every vertex.
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    debug_assert!(d.is_subset_of(g.full_set()));
    let mut covered = d.bits();
    for v in d.iter() {
        covered |= g.neighbors(v).bits();
    }
    covered == g.full_set().bits()
}

/// Minimum dominating set; the order-0 graph yields 0 with empty witness.
pub fn domination_number(g: &Graph) -> InvariantResult {
    let n = g.order();
    for c in 0..=n {
        for mask in subsets_of_card(n, c) {
            let d = VertexSet::from_bits(mask);
            if is_dominating(g, d) {
                return InvariantResult {
                    value: c,
                    witness: d,
                };
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Minimum set such that every outside vertex has at least `k` neighbors
/// inside (the full set qualifies vacuously).
pub fn k_domination_number(g: &Graph, k: usize) -> InvariantResult {
    assert!(k >= 1, "k-domination needs k >= 1");
    let n = g.order();
    let full = g.full_set().bits();
    for c in 0..=n {
        for mask in subsets_of_card(n, c) {
            let mut ok = true;
            let mut outside = full & !mask;
            while outside != 0 {
                let v = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                if ((g.neighbors(v).bits() & mask).count_ones() as usize) < k {
                    ok = false;
                    break;
                }
            }
            if ok {
                return InvariantResult {
                    value: c,
                    witness: VertexSet::from_bits(mask),
                };
            }
        }
    }
    unreachable!("the full vertex set k-dominates vacuously")
}

fn is_independent(g: &Graph, s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbors(v).bits() & s != 0 {
            return false;
        }
    }
    true
}

/// Branch-and-bound maximum independent set size over the candidate mask.
fn mis_size(g: &Graph, cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    // pick the candidate of maximum degree within the candidate set
    let mut pivot = cand.trailing_zeros() as usize;
    let mut pivot_deg = (g.neighbors(pivot).bits() & cand).count_ones();
    let mut rest = cand & (cand - 1);
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (g.neighbors(v).bits() & cand).count_ones();
        if d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }
    if pivot_deg <= 1 {
        // G[cand] has max degree <= 1: a matching plus isolated vertices;
        // take one endpoint per edge and every isolated vertex.
        let mut twice_edges = 0usize;
        let mut r = cand;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            twice_edges += (g.neighbors(v).bits() & cand).count_ones() as usize;
        }
        return cand.count_ones() as usize - twice_edges / 2;
    }
    let with = 1 + mis_size(g, cand & !g.closed_neighborhood(pivot).bits());
    let without = mis_size(g, cand & !(1u64 << pivot));
    with.max(without)
}

/// Maximum independent set; witness is the least mask among the optima.
pub fn independence_number(g: &Graph) -> InvariantResult {
    let n = g.order();
    let full = g.full_set().bits();
    let alpha = mis_size(g, full);
    for mask in subsets_of_card(n, alpha) {
        if is_independent(g, mask) {
            return InvariantResult {
                value: alpha,
                witness: VertexSet::from_bits(mask),
            };
        }
    }
    unreachable!("an independent set of size alpha exists")
}

/// Exact chromatic number via iterative-deepening k-colorability, seeded by
/// a greedy clique lower bound and a greedy coloring upper bound. Refuses
/// orders above 30 to bound the runtime.
pub fn chromatic_number(g: &Graph) -> Result<ColoringResult> {
    let n = g.order();
    if n > 30 {
        return Err(Error::TooLarge {
            what: "chromatic search order",
            max: 30,
        });
    }
    if n == 0 {
        return Ok(ColoringResult {
            value: 0,
            coloring: Vec::new(),
        });
    }
    // vertices by descending degree, ties by index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // greedy clique lower bound
    let mut clique = VertexSet::EMPTY;
    for &v in &order {
        if clique.iter().all(|u| g.has_edge(u, v)) {
            clique.insert(v);
        }
    }
    let lower = clique.card().max(1);

    // greedy coloring upper bound (and fallback witness)
    let mut greedy = vec![usize::MAX; n];
    let mut upper = 0usize;
    for &v in &order {
        let mut used = 0u64;
        for u in g.neighbors(v).iter() {
            if greedy[u] != usize::MAX {
                used |= 1 << greedy[u];
            }
        }
        let c = (!used).trailing_zeros() as usize;
        greedy[v] = c;
        upper = upper.max(c + 1);
    }

    for k in lower..upper {
        if let Some(coloring) = try_color(g, &order, k) {
            return Ok(ColoringResult { value: k, coloring });
        }
    }
    Ok(ColoringResult {
        value: upper,
        coloring: greedy,
    })
}

fn try_color(g: &Graph, order: &[usize], k: usize) -> Option<Vec<usize>> {
    let n = order.len();
    let mut color = vec![usize::MAX; n];
    // class_mask[c] = vertices colored c
    let mut class_mask = vec![0u64; k];

    fn rec(
        g: &Graph,
        order: &[usize],
        idx: usize,
        used: usize,
        color: &mut [usize],
        class_mask: &mut [u64],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let row = g.neighbors(v).bits();
        // one fresh color at most: breaks color-class symmetry
        let tryable = (used + 1).min(class_mask.len());
        for c in 0..tryable {
            if class_mask[c] & row == 0 {
                color[v] = c;
                class_mask[c] |= 1 << v;
                if rec(g, order, idx + 1, used.max(c + 1), color, class_mask) {
                    return true;
                }
                class_mask[c] &= !(1u64 << v);
                color[v] = usize::MAX;
            }
        }
        false
    }

    if rec(g, order, 0, 0, &mut color, &mut class_mask) {
        Some(color)
    } else {
        None
    }
}

/// True iff all distinct members of `s` are pairwise at distance >= 3:
/// non-adjacent with disjoint neighborhoods.
pub fn is_packing(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(s.is_subset_of(g.full_set()));
    let members: Vec<usize> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) || !(g.neighbors(u) & g.neighbors(v)).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Minimum dominating packing, if one exists.
pub fn find_perfect_dominating_set(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    for c in 0..=n {
        for mask in subsets_of_card(n, c) {
            let s = VertexSet::from_bits(mask);
            if is_dominating(g, s) && is_packing(g, s) {
                return Some(s);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Brute-force oracle: minimum mask cardinality satisfying `pred`, over
    /// all subsets.
    fn brute_min(n: usize, pred: impl Fn(u64) -> bool) -> Option<usize> {
        (0..1u64 << n)
            .filter(|&m| pred(m))
            .map(|m| m.count_ones() as usize)
            .min()
    }

    #[test]
    fn dominating_predicate() {
        let c5 = generators::cycle(5).unwrap();
        assert!(is_dominating(&c5, c5.full_set()));
        assert!(!is_dominating(&c5, VertexSet::singleton(0)));
        let pet = generators::petersen();
        for v in pet.vertices() {
            assert!(is_dominating(&pet, pet.closed_neighborhood(v)));
        }
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&generators::petersen()).value, 3);
        assert_eq!(domination_number(&generators::cycle(8).unwrap()).value, 3);
        for m in 2..=4usize {
            for n in 2..=m {
                let g = generators::complete_bipartite(m, n).unwrap();
                assert_eq!(domination_number(&g).value, 2, "gamma(K_{m},{n})");
            }
        }
        // witness re-validates and is the least mask
        let r = domination_number(&generators::cycle(6).unwrap());
        assert!(is_dominating(&generators::cycle(6).unwrap(), r.witness));
        assert_eq!(r.witness.card(), r.value);
    }

    #[test]
    fn k_domination_examples() {
        let p4 = generators::path(4).unwrap();
        // independent oracle over all 16 subsets
        let oracle = brute_min(4, |m| {
            (0..4).all(|v| m >> v & 1 == 1 || (p4.neighbors(v).bits() & m).count_ones() >= 2)
        })
        .unwrap();
        assert_eq!(oracle, 3);
        assert_eq!(k_domination_number(&p4, 2).value, 3);

        // gamma_1 coincides with gamma
        let mut rng = crate::rng::Rng::new(9);
        for _ in 0..500 {
            let n = 1 + rng.below(8) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            assert_eq!(
                k_domination_number(&g, 1).value,
                domination_number(&g).value
            );
        }
    }

    #[test]
    fn k_domination_tree_lower_bound() {
        // 2-domination of a tree needs at least half the order, rounded up
        // past the middle.
        for n in 2..=8usize {
            for t in generators::trees_exhaustive(n).unwrap() {
                let g2 = k_domination_number(&t, 2).value;
                assert!(g2 >= (n + 1).div_ceil(2), "n={n} gamma2={g2}");
            }
        }
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&generators::cycle(5).unwrap()).value, 2);
        for m in 1..=4usize {
            for n in 1..=m {
                let g = generators::complete_bipartite(m, n).unwrap();
                assert_eq!(independence_number(&g).value, m);
            }
        }
        assert_eq!(independence_number(&generators::petersen()).value, 4);
        // witness independent and minimal mask
        let r = independence_number(&generators::petersen());
        assert!(is_independent(&generators::petersen(), r.witness.bits()));
    }

    #[test]
    fn independence_matches_brute_force() {
        let mut rng = crate::rng::Rng::new(10);
        for _ in 0..300 {
            let n = 1 + rng.below(10) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            let brute = (0..1u64 << n)
                .filter(|&m| is_independent(&g, m))
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(independence_number(&g).value, brute);
        }
    }

    #[test]
    fn independence_equals_order_minus_vertex_cover() {
        for n in 1..=5usize {
            for g in generators::graphs_exhaustive(n).unwrap() {
                // brute-force minimum vertex cover
                let vc = brute_min(n, |m| {
                    g.edges()
                        .iter()
                        .all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
                })
                .unwrap();
                assert_eq!(independence_number(&g).value, n - vc);
            }
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(
            chromatic_number(&generators::cycle(5).unwrap())
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            chromatic_number(&generators::complete(5).unwrap())
                .unwrap()
                .value,
            5
        );
        assert_eq!(
            chromatic_number(&generators::empty_graph(4).unwrap())
                .unwrap()
                .value,
            1
        );
        assert_eq!(chromatic_number(&generators::petersen()).unwrap().value, 3);
        for n in 3..=8usize {
            for g in generators::mops_exhaustive(n).unwrap() {
                assert!(chromatic_number(&g).unwrap().value <= 3);
            }
        }
    }

    #[test]
    fn chromatic_witness_proper_and_matches_brute_force() {
        let mut rng = crate::rng::Rng::new(12);
        for _ in 0..150 {
            let n = 1 + rng.below(7) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            let r = chromatic_number(&g).unwrap();
            for (u, v) in g.edges() {
                assert_ne!(r.coloring[u], r.coloring[v], "monochromatic edge");
            }
            assert!(r.coloring.iter().all(|&c| c < r.value.max(1)));
            // brute force: smallest k admitting a proper coloring
            let brute = (1..=n)
                .find(|&k| {
                    fn all_colorings(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> bool {
                        if v == g.order() {
                            return true;
                        }
                        for c in 0..k {
                            if g.neighbors(v).iter().all(|u| u >= v || col[u] != c) {
                                col[v] = c;
                                if all_colorings(g, k, v + 1, col) {
                                    return true;
                                }
                            }
                        }
                        false
                    }
                    all_colorings(&g, k, 0, &mut vec![0; n])
                })
                .unwrap();
            assert_eq!(r.value, brute);
        }
        assert!(chromatic_number(&generators::empty_graph(31).unwrap()).is_err());
    }

    #[test]
    fn packing_examples() {
        let p7 = generators::path(7).unwrap();
        assert!(is_packing(&p7, VertexSet::EMPTY));
        assert!(is_packing(&p7, [0usize, 3, 6].into_iter().collect()));
        let c5 = generators::cycle(5).unwrap();
        assert!(!is_packing(&c5, [0usize, 2].into_iter().collect()));
    }

    #[test]
    fn perfect_dominating_sets() {
        let p3 = generators::path(3).unwrap();
        assert_eq!(
            find_perfect_dominating_set(&p3),
            Some(VertexSet::singleton(1))
        );

        // no perfect dominating set in the 4-cycle: oracle over all 16 subsets
        let c4 = generators::cycle(4).unwrap();
        let brute = brute_min(4, |m| {
            let s = VertexSet::from_bits(m);
            is_dominating(&c4, s) && is_packing(&c4, s)
        });
        assert_eq!(brute, None);
        assert_eq!(find_perfect_dominating_set(&c4), None);
    }
}
