//! Fixed-cardinality subset enumeration in ascending bit-mask order.
//!
//! All exact solvers search subsets by ascending cardinality and, within a
//! cardinality, ascending mask value (Gosper's hack). The first hit is
//! therefore the deterministic tie-break winner everywhere.

/// Masks with exactly `c` bits among positions `0..n`, ascending.
pub(crate) fn subsets_of_card(n: usize, c: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n < 64);
    let limit = 1u64 << n;
    let mut cur = if c > n {
        None
    } else if c == 0 {
        Some(0u64)
    } else {
        Some((1u64 << c) - 1)
    };
    std::iter::from_fn(move || {
        let out = cur?;
        cur = gosper_next(out).filter(|&m| m < limit);
        Some(out)
    })
}

fn gosper_next(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let u = x & x.wrapping_neg();
    let v = x.checked_add(u)?;
    Some(v | ((x ^ v) / u) >> 2)
}

/// Scatter the low bits of `compact` into the set positions of `pool`
/// (software pdep). Order-preserving on fixed-cardinality masks.
pub(crate) fn deposit(mut compact: u64, mut pool: u64) -> u64 {
    let mut out = 0u64;
    while compact != 0 {
        debug_assert!(pool != 0, "compact mask wider than pool");
        let low = pool & pool.wrapping_neg();
        if compact & 1 == 1 {
            out |= low;
        }
        compact >>= 1;
        pool &= pool - 1;
    }
    out
}
