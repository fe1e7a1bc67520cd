//! Graph family constructors and corpus streams.
//!
//! Everything here is deterministic: the exhaustive streams have a fixed
//! enumeration order and the random generators are pure functions of their
//! seed. Labeled (not isomorphism-reduced) enumeration is used throughout;
//! the verified properties are isomorphism-invariant, so duplicates cost
//! time, not correctness.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::io::parse_graph6;
use crate::rng::Rng;
use std::fmt;
use std::str::FromStr;

fn bad_range(family: &str, msg: impl Into<String>) -> Error {
    Error::BadRange {
        family: family.into(),
        msg: msg.into(),
    }
}

fn bad_arity(family: &str, msg: impl Into<String>) -> Error {
    Error::BadArity {
        family: family.into(),
        msg: msg.into(),
    }
}

/// The path on `n` vertices, labeled consecutively.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad_range("path", "order must be >= 1"));
    }
    let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle on `n >= 3` vertices, labeled consecutively.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad_range("cycle", "order must be >= 3"));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad_range("complete", "order must be >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad_range("empty", "order must be >= 1"));
    }
    Graph::from_edges(n, &[])
}

/// The star on `n >= 2` vertices (center 0 joined to n-1 leaves).
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad_range("star", "order must be >= 2"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(bad_range("complete_bipartite", "part sizes must be >= 1"));
    }
    complete_multipartite(&[m, n])
}

/// Complete multipartite graph with parts in consecutive vertex blocks.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(bad_arity(
            "complete_multipartite",
            "needs at least one part size",
        ));
    }
    if parts.iter().any(|&p| p < 1) {
        return Err(bad_range(
            "complete_multipartite",
            "part sizes must be >= 1",
        ));
    }
    let n: usize = parts.iter().sum();
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "multipartite order",
            max: MAX_ORDER,
        });
    }
    let mut block = vec![0usize; n];
    let mut v = 0;
    for (b, &p) in parts.iter().enumerate() {
        for _ in 0..p {
            block[v] = b;
            v += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for w in (u + 1)..n {
            if block[u] != block[w] {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes
/// i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).expect("petersen fits")
}

/// Attach a private leaf `n + v` to every vertex `v` of `h`.
pub fn corona(h: &Graph) -> Result<Graph> {
    let n = h.order();
    if n < 1 {
        return Err(bad_range("corona_of", "base order must be >= 1"));
    }
    if 2 * n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "corona order",
            max: MAX_ORDER,
        });
    }
    let mut edges = h.edges();
    for v in 0..n {
        edges.push((v, n + v));
    }
    Graph::from_edges(2 * n, &edges)
}

/// The even-order extremal family: vertices x_1..x_n (indices 0..n-1) and
/// y_1..y_n (indices n..2n-1); x_i ~ y_j iff i >= j, Y independent,
/// {x_2,...,x_n} a clique, x_1 with no neighbor inside X. Its fair
/// domination number is 2n-2, two below the order.
pub fn extremal_h(n: usize) -> Result<Graph> {
    if !(3..=31).contains(&n) {
        return Err(bad_range("extremal_H", "parameter must be in 3..=31"));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            edges.push((i - 1, n + j - 1));
        }
    }
    for i in 2..=n {
        for j in (i + 1)..=n {
            edges.push((i - 1, j - 1));
        }
    }
    let g = Graph::from_edges(2 * n, &edges)?;
    debug_assert_eq!(g.degree(0), 1);
    debug_assert!((2..=n).all(|i| g.degree(i - 1) == i + n - 2));
    debug_assert!((1..=n).all(|i| g.degree(n + i - 1) == n - i + 1));
    Ok(g)
}

/// The odd-order extremal family: `extremal_h(n)` plus a vertex (index 2n)
/// joined to x_2..x_n.
pub fn extremal_f(n: usize) -> Result<Graph> {
    if !(3..=30).contains(&n) {
        return Err(bad_range("extremal_F", "parameter must be in 3..=30"));
    }
    let h = extremal_h(n)?;
    let mut edges = h.edges();
    for i in 2..=n {
        edges.push((i - 1, 2 * n));
    }
    Graph::from_edges(2 * n + 1, &edges)
}

fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n.saturating_sub(2));
    if n == 1 {
        return Graph::from_edges(1, &[]).unwrap();
    }
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always remains");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let u = last.next().unwrap();
    let v = last.next().unwrap();
    edges.push((u, v));
    Graph::from_edges(n, &edges).unwrap()
}

/// All n^(n-2) labeled trees on `n <= 9` vertices, in lexicographic order of
/// their Pruefer sequences.
pub fn trees_exhaustive(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=9).contains(&n) {
        return Err(bad_range("trees", "order must be in 1..=9"));
    }
    let count: u64 = if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    };
    let mut index = 0u64;
    Ok(std::iter::from_fn(move || {
        if index >= count {
            return None;
        }
        let mut seq = vec![0usize; n.saturating_sub(2)];
        let mut rem = index;
        for slot in seq.iter_mut().rev() {
            *slot = (rem % n as u64) as usize;
            rem /= n as u64;
        }
        index += 1;
        Some(tree_from_pruefer(n, &seq))
    }))
}

/// A uniformly random labeled tree (uniform Pruefer sequence).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(bad_range(
            "random_tree",
            format!("order must be in 1..={MAX_ORDER}"),
        ));
    }
    let mut rng = Rng::new(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.below(n as u64) as usize)
        .collect();
    Ok(tree_from_pruefer(n, &seq))
}

/// Catalan numbers C(0)..=C(k); C(60) still fits comfortably in a u128.
fn catalan_table(k: usize) -> Vec<u128> {
    let mut c = vec![0u128; k + 1];
    c[0] = 1;
    for i in 1..=k {
        for j in 0..i {
            c[i] += c[j] * c[i - 1 - j];
        }
    }
    c
}

/// Graph of one polygon triangulation: boundary cycle 0..n-1 plus the given
/// diagonals.
fn mop_graph(n: usize, diagonals: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    edges.extend_from_slice(diagonals);
    Graph::from_edges(n, &edges).unwrap()
}

fn collect_triangulations(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in (lo + 1)..hi {
        for left in collect_triangulations(lo, apex) {
            for right in collect_triangulations(apex, hi) {
                let mut d = Vec::new();
                if apex > lo + 1 {
                    d.push((lo, apex));
                }
                if hi > apex + 1 {
                    d.push((apex, hi));
                }
                d.extend_from_slice(&left);
                d.extend_from_slice(&right);
                out.push(d);
            }
        }
    }
    out
}

/// All Catalan(n-2) triangulations of the convex n-gon with boundary cycle
/// 0,1,...,n-1, enumerated by recursive ear decomposition.
pub fn mops_exhaustive(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(3..=12).contains(&n) {
        return Err(bad_range("mops", "order must be in 3..=12"));
    }
    let sets = collect_triangulations(0, n - 1);
    Ok(sets.into_iter().map(move |d| mop_graph(n, &d)))
}

/// A uniformly random triangulation of the convex n-gon.
pub fn random_mop(n: usize, seed: u64) -> Result<Graph> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(bad_range(
            "random_mop",
            format!("order must be in 3..={MAX_ORDER}"),
        ));
    }
    let mut rng = Rng::new(seed);
    let mut diagonals = Vec::new();
    let catalan = catalan_table(n - 2);
    sample_triangulation(0, n - 1, &catalan, &mut rng, &mut diagonals);
    Ok(mop_graph(n, &diagonals))
}

fn sample_triangulation(
    lo: usize,
    hi: usize,
    catalan: &[u128],
    rng: &mut Rng,
    out: &mut Vec<(usize, usize)>,
) {
    if hi - lo < 2 {
        return;
    }
    let total = catalan[hi - lo - 1];
    let mut r = rng.below_u128(total);
    for apex in (lo + 1)..hi {
        let weight = catalan[apex - lo - 1] * catalan[hi - apex - 1];
        if r < weight {
            if apex > lo + 1 {
                out.push((lo, apex));
            }
            if hi > apex + 1 {
                out.push((apex, hi));
            }
            sample_triangulation(lo, apex, catalan, rng, out);
            sample_triangulation(apex, hi, catalan, rng, out);
            return;
        }
        r -= weight;
    }
    unreachable!("catalan weights sum to the total");
}

/// All 2^(n choose 2) labeled graphs on `n <= 7` vertices, in edge-mask
/// order (bit i of the mask is the i-th edge in lexicographic pair order).
pub fn graphs_exhaustive(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 7 {
        return Err(bad_range(
            "graphs",
            "order must be <= 7 (2^21 graphs is the ceiling)",
        ));
    }
    let pairs: Vec<(usize, usize)> = pair_list(n);
    let count = 1u64 << pairs.len();
    let mut mask = 0u64;
    Ok(std::iter::from_fn(move || {
        if mask >= count {
            return None;
        }
        let g = graph_from_edge_mask(n, &pairs, mask);
        mask += 1;
        Some(g)
    }))
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// A labeled Erdos-Renyi graph with edge probability 1/2.
pub fn random_graph(n: usize, seed: u64) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "graph order",
            max: MAX_ORDER,
        });
    }
    let mut rng = Rng::new(seed);
    let edges: Vec<_> = pair_list(n)
        .into_iter()
        .filter(|_| rng.chance(1, 2))
        .collect();
    Graph::from_edges(n, &edges)
}

/// A random connected graph: a uniform spanning tree plus extra edges.
pub fn random_connected_graph(n: usize, seed: u64) -> Result<Graph> {
    let tree = random_tree(n, seed)?;
    let mut rng = Rng::new(seed ^ 0xc001_d00d);
    let mut edges = tree.edges();
    for (u, v) in pair_list(n) {
        if !tree.has_edge(u, v) && rng.chance(1, 4) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// A random r-regular graph: a circulant seed graph randomized by double
/// edge swaps. Requires n*r even, r < n. Deterministic per seed; the swap
/// walk mixes the degree-preserving state space without ever failing.
pub fn random_regular_graph(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n > MAX_ORDER || r >= n || !(n * r).is_multiple_of(2) {
        return Err(bad_range("random_regular", "need r < n <= 62 and n*r even"));
    }
    if r == 0 {
        return Graph::from_edges(n, &[]);
    }
    // circulant base: offsets 1..=r/2 around the ring, plus the antipode
    // when r is odd (n is even then)
    let mut edges = Vec::with_capacity(n * r / 2);
    for v in 0..n {
        for off in 1..=r / 2 {
            edges.push((v, (v + off) % n));
        }
        if r % 2 == 1 && v < n / 2 {
            edges.push((v, v + n / 2));
        }
    }
    edges.iter_mut().for_each(|e| {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    });
    edges.sort_unstable();
    edges.dedup();
    debug_assert_eq!(edges.len(), n * r / 2);

    let mut adj = vec![0u64; n];
    for &(u, v) in &edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut rng = Rng::new(seed);
    let m = edges.len();
    for _ in 0..30 * m {
        let i = rng.below(m as u64) as usize;
        let j = rng.below(m as u64) as usize;
        if i == j {
            continue;
        }
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        // two rewirings preserve degrees; pick one at random
        let (x, y, z, w) = if rng.chance(1, 2) {
            (a, c, b, d)
        } else {
            (a, d, b, c)
        };
        let distinct = x != y && z != w;
        if !distinct || adj[x] >> y & 1 == 1 || adj[z] >> w & 1 == 1 {
            continue;
        }
        adj[a] &= !(1 << b);
        adj[b] &= !(1 << a);
        adj[c] &= !(1 << d);
        adj[d] &= !(1 << c);
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
        adj[z] |= 1 << w;
        adj[w] |= 1 << z;
        edges[i] = (x.min(y), x.max(y));
        edges[j] = (z.min(w), z.max(w));
    }
    Ok(Graph::from_rows(n, adj))
}

/// Declarative description of one deterministic family instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Petersen,
    CoronaOf(Graph),
    ExtremalH(usize),
    ExtremalF(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    /// Reserved for randomized family extensions; the deterministic families
    /// ignore it.
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match &self.family {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::Empty(n) => empty_graph(*n),
            Family::Star(n) => star(*n),
            Family::CompleteBipartite(m, n) => complete_bipartite(*m, *n),
            Family::CompleteMultipartite(parts) => complete_multipartite(parts),
            Family::Petersen => Ok(petersen()),
            Family::CoronaOf(h) => corona(h),
            Family::ExtremalH(n) => extremal_h(*n),
            Family::ExtremalF(n) => extremal_f(*n),
        }
    }
}

/// Textual form: `name[:p1,p2,...]`, e.g. `cycle:8`, `extremal_H:4`,
/// `complete_multipartite:2,2,2`, `petersen`, `corona_of:<graph6>`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let ints = |args: Option<&str>, arity: usize| -> Result<Vec<usize>> {
            let raw = args.unwrap_or("");
            let parts: Vec<&str> = if raw.is_empty() {
                Vec::new()
            } else {
                raw.split(',').collect()
            };
            if parts.len() != arity {
                return Err(bad_arity(
                    name,
                    format!("expected {arity} parameter(s), got {}", parts.len()),
                ));
            }
            parts
                .iter()
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| bad_arity(name, format!("invalid integer parameter {p:?}")))
                })
                .collect()
        };
        let family = match name {
            "path" => Family::Path(ints(args, 1)?[0]),
            "cycle" => Family::Cycle(ints(args, 1)?[0]),
            "complete" => Family::Complete(ints(args, 1)?[0]),
            "empty" => Family::Empty(ints(args, 1)?[0]),
            "star" => Family::Star(ints(args, 1)?[0]),
            "complete_bipartite" => {
                let p = ints(args, 2)?;
                Family::CompleteBipartite(p[0], p[1])
            }
            "complete_multipartite" => {
                let raw = args.unwrap_or("");
                let parts: Vec<&str> = if raw.is_empty() {
                    Vec::new()
                } else {
                    raw.split(',').collect()
                };
                if parts.is_empty() {
                    return Err(bad_arity(name, "needs at least one part size"));
                }
                let sizes = parts
                    .iter()
                    .map(|p| {
                        p.parse::<usize>().map_err(|_| {
                            bad_arity(name, format!("invalid integer parameter {p:?}"))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Family::CompleteMultipartite(sizes)
            }
            "petersen" => {
                ints(args, 0)?;
                Family::Petersen
            }
            "corona_of" => {
                let g6 = args.ok_or_else(|| bad_arity(name, "expected a graph6 argument"))?;
                Family::CoronaOf(parse_graph6(g6)?)
            }
            "extremal_H" => Family::ExtremalH(ints(args, 1)?[0]),
            "extremal_F" => Family::ExtremalF(ints(args, 1)?[0]),
            other => {
                return Err(bad_arity(other, "unknown family tag"));
            }
        };
        Ok(FamilySpec { family, seed: None })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "complete_bipartite:{m},{n}"),
            Family::CompleteMultipartite(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "complete_multipartite:{}", parts.join(","))
            }
            Family::Petersen => write!(f, "petersen"),
            Family::CoronaOf(g) => write!(f, "corona_of:{}", crate::io::write_graph6(g)),
            Family::ExtremalH(n) => write!(f, "extremal_H:{n}"),
            Family::ExtremalF(n) => write!(f, "extremal_F:{n}"),
        }
    }
}
