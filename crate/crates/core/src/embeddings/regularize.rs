//! Passing to an almost-regular induced subgraph of comparable density.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::thresholds::RegularityFactor;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularizeReport {
    /// Kept vertices of the input graph, sorted.
    pub vertices: Vec<usize>,
    pub m: usize,
    pub edges: usize,
    pub k: RegularityFactor,
    pub almost_regular: bool,
    /// `e(H) ≥ (C/4) m^{1+α}`.
    pub density_ok: bool,
    /// `m ≥ C^{(α+1)/(2α+4)} n^{α/(2α+4)} / K`.
    pub size_ok: bool,
}

/// `α` as `(p, q)` with `α = p/q`.
fn parts(alpha: &Rational) -> (u32, u32) {
    let p: u32 = alpha.numer().try_into().expect("small exponent numerator");
    let q: u32 = alpha.denom().try_into().expect("small exponent denominator");
    (p, q)
}

fn big(v: usize) -> Rational {
    int(v as i64)
}

/// Whether `lhs ≥ factor · base^{1+α}`, exactly: raise both sides to `q`.
fn at_least_power(lhs: usize, factor: &Rational, base: usize, alpha: &Rational) -> bool {
    let (p, q) = parts(alpha);
    pow(&big(lhs), q) >= pow(factor, q) * pow(&big(base), p + q)
}

/// Compares `e1 / m1^{1+α}` with `e2 / m2^{1+α}`.
fn density_cmp(e1: usize, m1: usize, e2: usize, m2: usize, alpha: &Rational) -> std::cmp::Ordering {
    let (p, q) = parts(alpha);
    let lhs = pow(&big(e1), q) * pow(&big(m2), p + q);
    let rhs = pow(&big(e2), q) * pow(&big(m1), p + q);
    lhs.cmp(&rhs)
}

/// Whether `m ≥ C^{(α+1)/(2α+4)} n^{α/(2α+4)} / K` with `K = 2^κ`.
///
/// Equivalent to `m^{2α+4} 2^{κ(2α+4)} ≥ C^{α+1} n^α`; every exponent is
/// scaled by a common denominator so the check is on integers.
fn size_guarantee(m: usize, n: usize, c: &Rational, alpha: &Rational, k: &RegularityFactor) -> bool {
    let two_a_four = alpha * int(2) + int(4);
    let a_one = alpha + Rational::one();
    let kappa = &k.log2 * &two_a_four;
    let den = [&two_a_four, &a_one, alpha, &kappa]
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let scale = |r: &Rational| -> u32 {
        (r * Rational::from_integer(den.clone()))
            .to_integer()
            .try_into()
            .expect("small")
    };
    let lhs = pow(&big(m), scale(&two_a_four)) * Rational::from_integer(BigInt::one() << scale(&kappa));
    let rhs = pow(c, scale(&a_one)) * pow(&big(n), scale(alpha));
    lhs >= rhs
}

/// Greedy shrinking to a `K`-almost-regular induced subgraph, `K = 2^{4/α+2}`.
///
/// Each step removes a minimum-degree vertex, removes a maximum-degree
/// vertex, or keeps only the vertices of degree at least half the average,
/// whichever leaves the largest `e / m^{1+α}`. The loop stops at the first
/// almost-regular graph; both guarantees of the regularity lemma are then
/// checked and reported rather than assumed.
pub fn regularize(g: &Graph, alpha: &Rational, c: &Rational) -> Result<(Graph, RegularizeReport)> {
    if *c <= Rational::zero() {
        return Err(Error::InvalidParameter("C must be positive".into()));
    }
    let k = RegularityFactor::for_alpha(alpha)?;
    let n = g.n();
    if n == 0 || !at_least_power(g.edge_count(), c, n, alpha) {
        return Err(Error::HypothesisUnmet(format!(
            "e(G) = {} is below C n^(1+alpha) with C = {c}, alpha = {alpha}, n = {n}",
            g.edge_count()
        )));
    }

    let mut keep = g.full_set();
    loop {
        let (sub, _) = g.induced_on(&keep);
        let (lo, hi) = sub.min_max_degree();
        if k.bounds(hi, lo) {
            break;
        }
        let kept: Vec<usize> = keep.ones().collect();
        let degree = |v: usize| g.neighbor_set(v).intersection_count(&keep);
        let by_degree = |pick_max: bool| {
            let v = if pick_max {
                kept.iter().copied().max_by_key(|&v| (degree(v), std::cmp::Reverse(v)))
            } else {
                kept.iter().copied().min_by_key(|&v| (degree(v), v))
            };
            let mut next = keep.clone();
            next.set(v.expect("nonempty"), false);
            next
        };
        let total: usize = kept.iter().map(|&v| degree(v)).sum();
        let mut heavy = FixedBitSet::with_capacity(n);
        for &v in &kept {
            // deg ≥ avg / 2  ⇔  2 m deg ≥ Σ deg
            if 2 * kept.len() * degree(v) >= total {
                heavy.insert(v);
            }
        }
        let mut options = vec![by_degree(false), by_degree(true)];
        if heavy.count_ones(..) < kept.len() && !heavy.is_clear() {
            options.push(heavy);
        }
        let score = |set: &FixedBitSet| (g.edges_within(set), set.count_ones(..));
        keep = options
            .into_iter()
            .reduce(|best, cand| {
                let (eb, mb) = score(&best);
                let (ec, mc) = score(&cand);
                if mc > 0 && (mb == 0 || density_cmp(ec, mc, eb, mb, alpha).is_gt()) {
                    cand
                } else {
                    best
                }
            })
            .expect("at least two options");
    }

    let (sub, vertices) = g.induced_on(&keep);
    let m = sub.n();
    let edges = sub.edge_count();
    let (lo, hi) = sub.min_max_degree();
    let report = RegularizeReport {
        vertices,
        m,
        edges,
        almost_regular: k.bounds(hi, lo),
        density_ok: at_least_power(edges, &(c / int(4)), m, alpha),
        size_ok: size_guarantee(m, n, c, alpha, &k),
        k,
    };
    Ok((sub, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn regular_input_is_returned() {
        let g = Graph::complete(6);
        let (h, rep) = regularize(&g, &int(1), &rat(1, 3)).unwrap();
        assert_eq!(h, g);
        assert!(rep.almost_regular && rep.density_ok);
        assert_eq!(rep.vertices, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn clique_with_isolated_vertices() {
        // K_8 plus 4 isolated vertices; α = 1/2 gives K = 2^10
        let mut g = Graph::complete(8);
        g.add_vertices(4);
        let (h, rep) = regularize(&g, &rat(1, 2), &rat(1, 4)).unwrap();
        assert_eq!(rep.vertices, (0..8).collect::<Vec<_>>());
        assert_eq!(h.edge_count(), 28);
        assert!(rep.almost_regular && rep.density_ok && rep.size_ok);
    }

    #[test]
    fn star_is_trimmed() {
        // K_{1,9} is far from regular for α = 4 (K = 8)
        let g = Graph::complete_bipartite(1, 9);
        let (h, rep) = regularize(&g, &int(4), &rat(1, 100_000)).unwrap();
        let (lo, hi) = h.min_max_degree();
        assert!(rep.k.bounds(hi, lo));
        assert!(rep.m < 10);
    }

    #[test]
    fn sparse_input_rejected() {
        let g = Graph::path(10);
        assert!(matches!(
            regularize(&g, &int(1), &int(1)),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn exact_size_check() {
        // α = 1, K = 64: m ≥ C^{1/3} n^{1/6} / 64
        let k = RegularityFactor::for_alpha(&int(1)).unwrap();
        assert!(size_guarantee(1, 64, &int(1), &int(1), &k));
        assert!(!size_guarantee(1, 1 << 40, &int(1 << 20), &int(1), &k));
    }
}
