//! Bad sets and rich `s`-sets.

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::contains_kss;
use crate::rational::{int, pow, Rational};

/// `B(W)`: vertices outside `W` with at least `c|W|` neighbours in `W`.
pub fn bad_set(g: &Graph, w: &[usize], c: &Rational) -> Result<Vec<usize>> {
    let set = g.vertex_set(w)?;
    if set.is_clear() {
        return Err(Error::EmptyQuery);
    }
    Ok(bad_set_of(g, &set, c))
}

pub(crate) fn bad_set_of(g: &Graph, set: &FixedBitSet, c: &Rational) -> Vec<usize> {
    let need = c * int(set.count_ones(..) as i64);
    (0..g.n())
        .filter(|&v| !set.contains(v))
        .filter(|&v| int(g.neighbor_set(v).intersection_count(set) as i64) >= need)
        .collect()
}

/// `B(W)` together with whether the small-bad-set bound applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadSetReport {
    pub bad: Vec<usize>,
    /// `0 < c < 1`, `s ≥ 2`, `|W| ≥ s (2/c)^s` and the graph is
    /// `K_{s,s}`-free.
    pub applies: bool,
    /// `2s / c`.
    #[serde(with = "crate::rational::as_string")]
    pub bound: Rational,
}

/// `|W|` needed before the bound kicks in: `s (2/c)^s`.
pub fn bad_set_size_floor(c: &Rational, s: usize) -> Rational {
    int(s as i64) * pow(&(int(2) / c), s as u32)
}

/// Computes `B(W)` and, when the hypotheses hold, checks `|B(W)| < 2s/c`.
/// A violation is returned as [`Error::DisprovesLemma`].
pub fn check_bad_set(g: &Graph, w: &[usize], c: &Rational, s: usize) -> Result<BadSetReport> {
    let bad = bad_set(g, w, c)?;
    let mut distinct = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let bound = int(2 * s as i64) / c;
    let applies = *c > Rational::zero()
        && *c < Rational::one()
        && s >= 2
        && int(distinct.len() as i64) >= bad_set_size_floor(c, s)
        && contains_kss(g, s).is_none();
    if applies && int(bad.len() as i64) >= bound {
        return Err(Error::DisprovesLemma(format!(
            "|B(W)| = {} with |W| = {}, c = {c}, s = {s}",
            bad.len(),
            distinct.len()
        )));
    }
    Ok(BadSetReport { bad, applies, bound })
}

/// Threshold `(c/2)^s |Y|` for a rich set.
pub fn rich_floor(c: &Rational, s: usize, y_len: usize) -> Rational {
    pow(&(c / int(2)), s as u32) * int(y_len as i64)
}

/// Lexicographically first `s`-subset of `x` whose common neighbourhood in
/// `y` has at least `(c/2)^s |Y|` vertices, searched exhaustively without
/// checking any hypothesis.
pub fn find_rich_s_set(g: &Graph, x: &[usize], y: &[usize], c: &Rational, s: usize) -> Result<Option<Vec<usize>>> {
    let mut xs = x.to_vec();
    xs.sort_unstable();
    xs.dedup();
    let y_set = g.vertex_set(y)?;
    g.vertex_set(&xs)?;
    let need = rich_floor(c, s, y_set.count_ones(..));
    let mut chosen = Vec::with_capacity(s);
    Ok(rich_dfs(g, &xs, s, 0, &y_set, &need, &mut chosen))
}

fn rich_dfs(
    g: &Graph,
    xs: &[usize],
    s: usize,
    from: usize,
    common: &FixedBitSet,
    need: &Rational,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == s {
        return Some(chosen.clone());
    }
    for i in from..xs.len() {
        if xs.len() - i < s - chosen.len() {
            break;
        }
        let mut next = common.clone();
        next.intersect_with(g.neighbor_set(xs[i]));
        // common neighbourhoods only shrink, so prune early
        if int(next.count_ones(..) as i64) < *need {
            continue;
        }
        chosen.push(xs[i]);
        if let Some(found) = rich_dfs(g, xs, s, i + 1, &next, need, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// A rich `s`-set of `x` under the averaging lemma's hypotheses: the
/// bipartite graph between `x` and `y` has at least `c|X||Y|` edges and
/// `c|X| ≥ 2s`, with `0 < c ≤ 1`.
pub fn rich_s_set(g: &Graph, x: &[usize], y: &[usize], c: &Rational, s: usize) -> Result<Vec<usize>> {
    let (between, _) = g.bipartite_between(x, y)?;
    let (nx, ny) = (x.len(), y.len());
    if s == 0 || *c <= Rational::zero() || *c > Rational::one() {
        return Err(Error::HypothesisUnmet(format!(
            "need s >= 1 and 0 < c <= 1, got s = {s}, c = {c}"
        )));
    }
    if int(between.edge_count() as i64) < c * int((nx * ny) as i64) {
        return Err(Error::HypothesisUnmet(format!(
            "e = {} is below c|X||Y| = {}",
            between.edge_count(),
            c * int((nx * ny) as i64)
        )));
    }
    if c * int(nx as i64) < int(2 * s as i64) {
        return Err(Error::HypothesisUnmet(format!(
            "c|X| = {} is below 2s = {}",
            c * int(nx as i64),
            2 * s
        )));
    }
    find_rich_s_set(g, x, y, c, s)?.ok_or_else(|| Error::DisprovesLemma(format!("no rich {s}-set with c = {c}")))
}
