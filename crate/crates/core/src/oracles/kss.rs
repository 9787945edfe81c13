//! `K_{s,s}` detection and the Kővári–Sós–Turán edge bound.

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Graph, Host};

/// Two disjoint `s`-sets, complete to each other.
pub type KssWitness = (Vec<usize>, Vec<usize>);

/// First `K_{s,s}` (not necessarily induced) in `g`: the lexicographically
/// least `s`-set with at least `s` common neighbours, paired with its `s`
/// smallest common neighbours.
pub fn contains_kss(g: &Graph, s: usize) -> Option<KssWitness> {
    if s == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    let mut chosen = Vec::with_capacity(s);
    grow(g, s, 0, &g.full_set(), &mut chosen)
}

fn grow(g: &Graph, s: usize, from: usize, common: &FixedBitSet, chosen: &mut Vec<usize>) -> Option<KssWitness> {
    if chosen.len() == s {
        return Some((chosen.clone(), common.ones().take(s).collect()));
    }
    let remaining = s - chosen.len();
    for v in from..g.n() {
        if g.n() - v < remaining {
            break;
        }
        if g.degree(v) < s {
            continue;
        }
        let mut next = common.clone();
        next.intersect_with(g.neighbor_set(v));
        if next.count_ones(..) < s {
            continue;
        }
        chosen.push(v);
        if let Some(w) = grow(g, s, v + 1, &next, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

/// Whether some `K_{s,s}` in `g` uses vertex `w`.
///
/// Such a copy puts `w` on one side, so the other side is an `s`-subset of
/// `N(w)` whose common neighbourhood has `s` members (including `w`).
pub fn kss_through_vertex(g: &Graph, w: usize, s: usize) -> bool {
    if s == 0 {
        return true;
    }
    let nbrs: Vec<usize> = g.neighbors(w).collect();
    if nbrs.len() < s {
        return false;
    }
    fn pick(g: &Graph, s: usize, nbrs: &[usize], from: usize, common: &FixedBitSet, depth: usize) -> bool {
        if depth == s {
            return true;
        }
        for i in from..nbrs.len() {
            if nbrs.len() - i < s - depth {
                break;
            }
            let mut next = common.clone();
            next.intersect_with(g.neighbor_set(nbrs[i]));
            if next.count_ones(..) >= s && pick(g, s, nbrs, i + 1, &next, depth + 1) {
                return true;
            }
        }
        false
    }
    pick(g, s, &nbrs, 0, &g.full_set(), 0)
}

/// Checks `e ≤ (s-1)^{1/s} m^{2-1/s} + (s-1) m` for a `K_{s,s}`-free
/// bipartite host with sides of size `m`, exactly.
///
/// With `d = e - (s-1)m`, the bound holds trivially when `d ≤ 0` and is
/// otherwise equivalent to `d^s ≤ (s-1) m^{2s-1}`.
pub fn kst_check(host: &Host) -> Result<bool> {
    let parts = host.partition()?;
    let s = host.s;
    let m = parts.left.len();
    if parts.right.len() != m {
        return Err(Error::InvalidPartition(format!(
            "sides must have equal size, got {} and {}",
            m,
            parts.right.len()
        )));
    }
    parts.check_edges(&host.graph)?;
    if contains_kss(&host.graph, s).is_some() {
        return Err(Error::NotKssFree(s));
    }
    Ok(kst_bound_holds(host.graph.edge_count(), m, s))
}

/// The arithmetic part of [`kst_check`].
pub fn kst_bound_holds(e: usize, m: usize, s: usize) -> bool {
    let slack = (s as u128 - 1) * m as u128;
    if (e as u128) <= slack {
        return true;
    }
    let d = BigUint::from(e as u128 - slack);
    let lhs = d.pow(s as u32);
    let rhs = BigUint::from(s - 1) * BigUint::from(m).pow(2 * s as u32 - 1);
    lhs <= rhs
}
