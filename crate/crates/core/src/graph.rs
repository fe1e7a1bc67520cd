//! Immutable simple undirected graphs with bit-vector adjacency rows.
//!
//! Orders are capped at [`MAX_ORDER`] so that every vertex set fits in a
//! single machine word and the single-byte graph6 order encoding always
//! applies. All transformations return new graphs; nothing here mutates.

use crate::error::{Error, Result};
use crate::ratio::Ratio;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 62;

/// A subset of vertex indices `0..n-1`, stored as one 64-bit word.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    /// All vertices of an order-`n` graph.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 0 {
            VertexSet::EMPTY
        } else {
            VertexSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { bits: 1u64 << v }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_ORDER);
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet {
            bits: self.bits | 1u64 << v,
        }
    }

    pub fn card(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn min_elem(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Iterate members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | rhs.bits,
        }
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & rhs.bits,
        }
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !rhs.bits,
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Degree statistics of a graph: the sequence itself, the extremes, the exact
/// rational average 2m/n, the number of distinct degrees (span) and the
/// maximum multiplicity of a degree (rep).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub average_degree: Ratio,
    pub span: usize,
    pub rep: usize,
}

/// Immutable simple undirected graph; row `v` of `adj` is the open
/// neighborhood N(v) as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Build a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "graph order",
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, order: n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph::from_rows(n, adj))
    }

    /// Internal constructor; asserts symmetry, irreflexivity and bit range.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        let full = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & !full, 0, "bits outside 0..n at vertex {v}");
            debug_assert_eq!(row >> v & 1, 0, "self-loop at vertex {v}");
        }
        for v in 0..n {
            for u in (v + 1)..n {
                debug_assert_eq!(
                    adj[v] >> u & 1,
                    adj[u] >> v & 1,
                    "asymmetric adjacency at ({v},{u})"
                );
            }
        }
        Graph { n, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | 1u64 << v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in lexicographic order (u < v).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut row = self.adj[u] >> (u + 1) << (u + 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                out.push((u, v));
                row &= row - 1;
            }
        }
        out
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub(crate) fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let within = within.bits();
        let mut reach = 1u64 << start;
        loop {
            let mut grown = reach;
            let mut frontier = reach;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.adj[v] & within;
            }
            if grown == reach {
                return VertexSet::from_bits(reach);
            }
            reach = grown;
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_within(0, self.full_set()).card() == self.n
    }

    /// `Some(r)` if every vertex has degree exactly `r` (and n >= 1).
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let r = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == r) {
            Some(r)
        } else {
            None
        }
    }

    /// A 2-coloring (color-0 side, color-1 side), if one exists. Components
    /// are colored independently, starting each from its least vertex.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color0 = VertexSet::EMPTY;
        let mut color1 = VertexSet::EMPTY;
        for comp in self.components() {
            let start = comp.min_elem().expect("nonempty component");
            let mut frontier = VertexSet::singleton(start);
            color0.insert(start);
            let mut side = 0u8;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | self.neighbors(v);
                }
                next = next - color0 - color1;
                if side == 0 {
                    color1 = color1 | next;
                } else {
                    color0 = color0 | next;
                }
                frontier = next;
                side ^= 1;
            }
        }
        for v in 0..self.n {
            let same = if color0.contains(v) { color0 } else { color1 };
            if !(self.neighbors(v) & same).is_empty() {
                return None;
            }
        }
        Some((color0, color1))
    }

    /// The graph with exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph::from_rows(self.n, adj)
    }

    /// The subgraph induced by `s`, vertices relabeled `0..|s|-1` in
    /// ascending original order. The returned map gives, for each new index,
    /// the original vertex, so witnesses translate back.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(bad) = (s - self.full_set()).min_elem() {
            return Err(Error::IndexOutOfRange {
                index: bad,
                order: self.n,
            });
        }
        let map: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; map.len()];
        for (new_u, &old_u) in map.iter().enumerate() {
            for (new_v, &old_v) in map.iter().enumerate() {
                if self.has_edge(old_u, old_v) {
                    adj[new_u] |= 1u64 << new_v;
                }
            }
        }
        Ok((Graph::from_rows(map.len(), adj), map))
    }

    /// Connected components, each sorted by least vertex; the list itself is
    /// sorted by least vertex as well.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.full_set();
        let mut out = Vec::new();
        while let Some(start) = remaining.min_elem() {
            let comp = self.reach_within(start, remaining);
            remaining = remaining - comp;
            out.push(comp);
        }
        out
    }

    /// The line graph: one vertex per edge (in lexicographic edge order,
    /// returned as the index map), adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges = self.edges();
        let m = edges.len();
        if m > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "line graph order (edge count)",
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; m];
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
            }
        }
        Ok((Graph::from_rows(m, adj), edges))
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.n == 0 {
            return Err(Error::OrderZero);
        }
        let degree_sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min_degree = *degree_sequence.iter().min().unwrap();
        let max_degree = *degree_sequence.iter().max().unwrap();
        let mut mult = vec![0usize; max_degree + 1];
        for &d in &degree_sequence {
            mult[d] += 1;
        }
        let span = mult.iter().filter(|&&c| c > 0).count();
        let rep = *mult.iter().max().unwrap();
        let average_degree = Ratio::new(2 * self.size() as i128, self.n as i128);
        Ok(DegreeProfile {
            degree_sequence,
            min_degree,
            max_degree,
            average_degree,
            span,
            rep,
        })
    }

    /// Shortest-path hop count via breadth-first layering; `None` when
    /// unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        for &x in &[u, v] {
            if x >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Ok(Some(0));
        }
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut dist = 0usize;
        while frontier != 0 {
            dist += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[w];
            }
            next &= !seen;
            if next >> v & 1 == 1 {
                return Ok(Some(dist));
            }
            seen |= next;
            frontier = next;
        }
        Ok(None)
    }
}

/// Concatenate vertex blocks in list order with no cross edges.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let total: usize = gs.iter().map(|g| g.order()).sum();
    if total > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "union order",
            max: MAX_ORDER,
        });
    }
    let mut adj = Vec::with_capacity(total);
    let mut offset = 0usize;
    for g in gs {
        for v in 0..g.order() {
            adj.push(g.adj[v] << offset);
        }
        offset += g.order();
    }
    Ok(Graph::from_rows(total, adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn build_basic() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.size(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 0));
        assert!(!p3.has_edge(0, 2));

        let empty = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(empty.order(), 0);
        assert_eq!(empty.size(), 0);

        // duplicate edge collapses
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(dup, p3);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]).unwrap_err(),
            Error::IndexOutOfRange { index: 3, order: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert!(matches!(
            Graph::from_edges(63, &[]).unwrap_err(),
            Error::TooLarge { .. }
        ));
    }

    #[test]
    fn complement_examples() {
        let k4 = generators::complete(4).unwrap();
        assert_eq!(k4.complement().size(), 0);

        // The complement of C_5 is connected and 2-regular on 5 vertices,
        // hence a 5-cycle again.
        let c5bar = generators::cycle(5).unwrap().complement();
        assert!(c5bar.is_connected());
        assert_eq!(c5bar.is_regular(), Some(2));
    }

    #[test]
    fn complement_involution_randomized() {
        let mut rng = crate::rng::Rng::new(1);
        for _ in 0..1000 {
            let n = rng.below(13) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = generators::cycle(5).unwrap();
        let (g0, map0) = c5.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(g0.order(), 0);
        assert!(map0.is_empty());

        let (p3, map) = c5
            .induced_subgraph([0usize, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        // In the Petersen graph every closed neighborhood induces a claw:
        // 3-regular and triangle-free.
        let pet = generators::petersen();
        for v in pet.vertices() {
            let (h, _) = pet.induced_subgraph(pet.closed_neighborhood(v)).unwrap();
            assert_eq!(h.order(), 4);
            assert_eq!(h.size(), 3);
            let prof = h.degree_profile().unwrap();
            assert_eq!(prof.max_degree, 3);
            assert_eq!(prof.min_degree, 1);
        }

        assert!(c5.induced_subgraph(VertexSet::from_bits(1 << 7)).is_err());
    }

    #[test]
    fn components_examples() {
        let p3 = generators::path(3).unwrap();
        let k2 = generators::complete(2).unwrap();
        let g = disjoint_union(&[p3, k2]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4]);

        let e4 = generators::empty_graph(4).unwrap();
        assert_eq!(e4.components().len(), 4);

        let pet = generators::petersen();
        let comps = pet.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].card(), 10);
    }

    #[test]
    fn components_partition_randomized() {
        let mut rng = crate::rng::Rng::new(2);
        for _ in 0..300 {
            let n = 1 + rng.below(12) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            let comps = g.components();
            let mut union = VertexSet::EMPTY;
            for (i, &c) in comps.iter().enumerate() {
                assert!(!c.is_empty());
                assert!((union & c).is_empty(), "components overlap");
                union = union | c;
                // internally connected, no cross edges
                assert_eq!(g.reach_within(c.min_elem().unwrap(), c), c);
                for v in c.iter() {
                    assert!(g.neighbors(v).is_subset_of(c));
                }
                if i > 0 {
                    assert!(comps[i - 1].min_elem() < c.min_elem());
                }
            }
            assert_eq!(union, g.full_set());
        }
    }

    #[test]
    fn line_graph_examples() {
        let p3 = generators::path(3).unwrap();
        let (l, map) = p3.line_graph().unwrap();
        assert_eq!(l.order(), 2);
        assert_eq!(l.size(), 1);
        assert_eq!(map, vec![(0, 1), (1, 2)]);

        let k3 = generators::complete(3).unwrap();
        let (l, _) = k3.line_graph().unwrap();
        assert_eq!(l.order(), 3);
        assert_eq!(l.size(), 3);

        // Each edge of a 3-regular graph meets 4 others.
        let pet = generators::petersen();
        let (l, _) = pet.line_graph().unwrap();
        assert_eq!(l.order(), 15);
        assert_eq!(l.is_regular(), Some(4));
    }

    #[test]
    fn line_graph_degree_formula_randomized() {
        let mut rng = crate::rng::Rng::new(3);
        for _ in 0..200 {
            let n = 1 + rng.below(9) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            let (l, map) = g.line_graph().unwrap();
            assert_eq!(l.order(), g.size());
            for (i, &(u, v)) in map.iter().enumerate() {
                assert_eq!(l.degree(i), g.degree(u) + g.degree(v) - 2);
            }
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = generators::complete(2).unwrap();
        let g = disjoint_union(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);

        let h = disjoint_union(&[
            generators::star(6).unwrap(),
            generators::complete_multipartite(&[2, 2, 2]).unwrap(),
        ])
        .unwrap();
        assert_eq!(h.order(), 12);
        assert_eq!(h.size(), 5 + 12);
        assert_eq!(h.components().len(), 2);

        let one = disjoint_union(std::slice::from_ref(&k2)).unwrap();
        assert_eq!(one, k2);
    }

    #[test]
    fn degree_profile_examples() {
        let c5 = generators::cycle(5).unwrap();
        let p = c5.degree_profile().unwrap();
        assert_eq!(p.min_degree, 2);
        assert_eq!(p.max_degree, 2);
        assert_eq!(p.average_degree, Ratio::from_int(2));
        assert_eq!(p.span, 1);
        assert_eq!(p.rep, 5);

        let h3 = generators::extremal_h(3).unwrap();
        let p = h3.degree_profile().unwrap();
        assert_eq!(p.degree_sequence, vec![1, 3, 4, 3, 2, 1]);

        assert!(generators::empty_graph(0).is_err());
        let g0 = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(g0.degree_profile().unwrap_err(), Error::OrderZero);
    }

    #[test]
    fn degree_profile_span_rep_bounds_randomized() {
        // span <= maxdeg - mindeg + 1 and the repetition lower bound
        // rep >= n / (2*avg - 2*min + 1) hold for every graph.
        let mut rng = crate::rng::Rng::new(4);
        for _ in 0..500 {
            let n = 1 + rng.below(14) as usize;
            let g = generators::random_graph(n, rng.next_u64()).unwrap();
            let p = g.degree_profile().unwrap();
            assert!(p.span <= p.max_degree - p.min_degree + 1);
            let denom = Ratio::from_int(2) * p.average_degree
                - Ratio::from_int(2 * p.min_degree as i128)
                + Ratio::from_int(1);
            let lower = Ratio::from_int(n as i128) / denom;
            assert!(Ratio::from_int(p.rep as i128) >= lower);
            // structural invariants of the profile itself
            assert!(Ratio::from_int(p.min_degree as i128) <= p.average_degree);
            assert!(p.average_degree <= Ratio::from_int(p.max_degree as i128));
            assert!(p.span + p.rep <= n + 1);
            assert_eq!(p.degree_sequence.iter().sum::<usize>(), 2 * g.size());
        }
    }

    #[test]
    fn distance_examples() {
        let p4 = generators::path(4).unwrap();
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));

        let k2 = generators::complete(2).unwrap();
        let g = disjoint_union(&[k2.clone(), k2]).unwrap();
        assert_eq!(g.distance(0, 2).unwrap(), None);
        assert!(g.distance(0, 9).is_err());

        // symmetry
        let pet = generators::petersen();
        for u in pet.vertices() {
            for v in pet.vertices() {
                assert_eq!(pet.distance(u, v).unwrap(), pet.distance(v, u).unwrap());
            }
        }
    }

    #[test]
    fn bipartition_works() {
        let c6 = generators::cycle(6).unwrap();
        let (a, b) = c6.bipartition().unwrap();
        assert_eq!(a.card() + b.card(), 6);
        assert!(generators::cycle(5).unwrap().bipartition().is_none());
        let k23 = generators::complete_bipartite(2, 3).unwrap();
        let (a, b) = k23.bipartition().unwrap();
        assert_eq!(a.card().min(b.card()), 2);
    }

    #[test]
    fn vertex_set_display() {
        let s: VertexSet = [0usize, 2, 5].into_iter().collect();
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
