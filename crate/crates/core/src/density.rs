//! Rooted densities `ρ_F(S) = e_S / |S|`, `ρ(F)`, balancedness and the
//! exponent `2 - 1/ρ(F)`, all in exact arithmetic.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{attach_ktt_rooted, RootedGraph};
use crate::graph::Bipartition;
use crate::rational::{int, rat, Rational};

/// Largest non-root count accepted by [`is_balanced`].
pub const BALANCE_BUDGET: usize = 30;

/// Outcome of a balancedness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    #[serde(with = "crate::rational::as_string")]
    pub rho: Rational,
    pub balanced: bool,
    /// Lexicographically least subset of minimum density, present only when
    /// that density is below `rho`.
    pub witness: Option<Vec<usize>>,
    /// `2 - 1/ρ`; absent when `ρ = 0`.
    #[serde(with = "crate::rational::as_opt_string")]
    pub exponent: Option<Rational>,
}

/// `e_S`: edges of `f` with at least one endpoint in `s`.
pub fn edges_incident(f: &RootedGraph, s: &[usize]) -> Result<usize> {
    let g = f.graph();
    let set = g.vertex_set(s)?;
    if set.is_clear() {
        return Err(Error::EmptyQuery);
    }
    let degrees: usize = set.ones().map(|v| g.degree(v)).sum();
    Ok(degrees - g.edges_within(&set))
}

/// `ρ_F(S)`.
pub fn rho_of(f: &RootedGraph, s: &[usize]) -> Result<Rational> {
    let e = edges_incident(f, s)?;
    let mut distinct = s.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(rat(e as i64, distinct.len() as i64))
}

/// `ρ(F) = ρ_F(V(F) \ R)`.
pub fn rho(f: &RootedGraph) -> Rational {
    rho_of(f, &f.non_roots()).expect("a rooted graph has at least one non-root")
}

/// `2 - 1/ρ`, or `None` for `ρ = 0`.
pub fn exponent(rho: &Rational) -> Option<Rational> {
    if rho.is_zero() {
        None
    } else {
        Some(int(2) - rho.recip())
    }
}

/// Whether `a` precedes `b` when both masks are read as sorted index lists.
fn lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let d = diff.trailing_zeros();
    let above = |m: u32| if d >= 31 { 0 } else { m >> (d + 1) };
    if a & (1 << d) != 0 {
        // `a` has the smaller element here unless `b` already ended
        above(b) != 0
    } else {
        above(a) == 0
    }
}

/// Exhaustive balancedness check over all nonempty subsets of the
/// non-roots, visited in Gray-code order so each step updates `e_S` in O(1).
pub fn is_balanced(f: &RootedGraph) -> Result<DensityReport> {
    let non_roots = f.non_roots();
    let k = non_roots.len();
    if k > BALANCE_BUDGET {
        return Err(Error::TooLarge(format!(
            "{k} non-roots exceed the balancedness budget of {BALANCE_BUDGET}"
        )));
    }
    let g = f.graph();
    let degree: Vec<u64> = non_roots.iter().map(|&v| g.degree(v) as u64).collect();
    let inner: Vec<u32> = non_roots
        .iter()
        .map(|&v| {
            non_roots
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(v, w))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();

    let mut mask = 0u32;
    let mut e_s = 0u64;
    // (edges, size, mask) of the best subset so far
    let mut best: Option<(u64, u64, u32)> = None;
    let total: u64 = 1 << k;
    for step in 1..total {
        let bit = step.trailing_zeros() as usize;
        let b = 1u32 << bit;
        if mask & b == 0 {
            e_s += degree[bit] - (inner[bit] & mask).count_ones() as u64;
            mask |= b;
        } else {
            mask &= !b;
            e_s -= degree[bit] - (inner[bit] & mask).count_ones() as u64;
        }
        let size = mask.count_ones() as u64;
        let better = match best {
            None => true,
            Some((be, bs, bm)) => {
                let lhs = e_s * bs;
                let rhs = be * size;
                lhs < rhs || (lhs == rhs && lex_less(mask, bm))
            }
        };
        if better {
            best = Some((e_s, size, mask));
        }
    }

    let rho = rho(f);
    let (be, bs, bm) = best.expect("at least one non-root");
    let min_rho = rat(be as i64, bs as i64);
    let balanced = min_rho >= rho;
    let witness = (!balanced).then(|| (0..k).filter(|&i| bm & (1 << i) != 0).map(|i| non_roots[i]).collect());
    Ok(DensityReport {
        exponent: exponent(&rho),
        rho,
        balanced,
        witness,
    })
}

/// Checks that `F(1)` has density `ρ(F) + 1` and stays balanced whenever
/// `F` is.
pub fn verify_reduction_rho(f: &RootedGraph, parts: &Bipartition) -> Result<bool> {
    let (f1, _) = attach_ktt_rooted(f, parts, 1)?;
    if rho(&f1) != rho(f) + Rational::one() {
        return Ok(false);
    }
    if is_balanced(f)?.balanced && !is_balanced(&f1)?.balanced {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{height_two_tree, rooted_path, tree_r11};
    use crate::graph::Graph;

    #[test]
    fn edges_incident_examples() {
        let t = height_two_tree(3, 1).unwrap();
        assert_eq!(edges_incident(&t, &t.non_roots()).unwrap(), 6);
        let p = rooted_path(2).unwrap();
        assert_eq!(edges_incident(&p, &[2]).unwrap(), 2);
        let f = RootedGraph::new(Graph::from_edges(3, &[(0, 1)]).unwrap(), vec![0]).unwrap();
        assert_eq!(edges_incident(&f, &[2]).unwrap(), 0);
        assert_eq!(edges_incident(&f, &[]), Err(Error::EmptyQuery));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&height_two_tree(3, 1).unwrap()), rat(3, 2));
        assert_eq!(rho(&tree_r11(3).unwrap()), rat(7, 4));
        let p3 = rho(&rooted_path(3).unwrap());
        assert_eq!(p3, rat(3, 2));
        assert_eq!(exponent(&p3), Some(rat(4, 3)));
    }

    #[test]
    fn balanced_examples() {
        assert!(is_balanced(&height_two_tree(3, 1).unwrap()).unwrap().balanced);
        assert!(is_balanced(&tree_r11(2).unwrap()).unwrap().balanced);
    }

    #[test]
    fn unbalanced_witness() {
        // edges 0-1 and 2-3, root 0: ρ = 2/3 but {2, 3} has density 1/2
        let f = RootedGraph::new(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(), vec![0]).unwrap();
        let rep = is_balanced(&f).unwrap();
        assert_eq!(rep.rho, rat(2, 3));
        assert!(!rep.balanced);
        assert_eq!(rep.witness, Some(vec![2, 3]));
        assert!(rho_of(&f, &[2, 3]).unwrap() < rep.rho);
    }

    #[test]
    fn far_edge_rooted_at_near_edge_is_balanced() {
        // all of the near edge is rooted, so ρ = 1/2 and singletons reach 1
        let f = RootedGraph::new(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(), vec![0, 1]).unwrap();
        let rep = is_balanced(&f).unwrap();
        assert_eq!(rep.rho, rat(1, 2));
        assert!(rep.balanced);
        assert_eq!(rep.witness, None);
    }

    #[test]
    fn witness_prefers_lexicographically_least() {
        // non-roots 1..=4; {1} and {3} both isolated (density 0)
        let f = RootedGraph::new(Graph::from_edges(5, &[(0, 2), (0, 4), (2, 4)]).unwrap(), vec![0]).unwrap();
        let rep = is_balanced(&f).unwrap();
        assert_eq!(rep.witness, Some(vec![1]));
        assert_eq!(rep.exponent, Some(int(2) - rat(4, 3)));
    }

    #[test]
    fn lex_order_on_masks() {
        // {0} < {0, 1} < {1}
        assert!(lex_less(0b01, 0b11));
        assert!(lex_less(0b11, 0b10));
        assert!(!lex_less(0b10, 0b01));
        assert!(lex_less(0b101, 0b110));
        assert!(!lex_less(0b11, 0b11));
    }

    #[test]
    fn budget_is_enforced() {
        let f = RootedGraph::new(Graph::empty(32), vec![0]).unwrap();
        assert!(matches!(is_balanced(&f), Err(Error::TooLarge(_))));
    }

    #[test]
    fn reduction_examples() {
        for f in [
            height_two_tree(3, 1).unwrap(),
            rooted_path(3).unwrap(),
            tree_r11(2).unwrap(),
        ] {
            let parts = f.graph().bipartition().unwrap();
            assert!(verify_reduction_rho(&f, &parts).unwrap());
            let (f1, _) = attach_ktt_rooted(&f, &parts, 1).unwrap();
            assert_eq!(rho(&f1), rho(&f) + Rational::one());
        }
        assert_eq!(rho(&tree_r11(2).unwrap()), rat(5, 3));
        let p = rooted_path(2).unwrap();
        let (p1, _) = attach_ktt_rooted(&p, &p.graph().bipartition().unwrap(), 1).unwrap();
        assert_eq!((rho(&p), rho(&p1)), (int(2), int(3)));
    }
}
