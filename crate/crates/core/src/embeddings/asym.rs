//! Embedding a template whose `B` side has small degrees, starting from the
//! neighbourhood of a single vertex of `Y`.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;

use super::keylemma::key_lemma_embed;
use super::thresholds::Thresholds;
use super::trees::Subgraph;
use super::{EmbeddingOutcome, TraceEvent};
use crate::error::{Error, Result};
use crate::families::{for_each_combination, for_each_transversal, neighborhood_hypergraph, BipartiteTemplate};
use crate::graph::Host;
use crate::rational::Rational;

/// Search nodes allowed to one blowup search.
const BLOWUP_BUDGET: u64 = 200_000;

struct BlowupSearch<'a> {
    l: &'a crate::graph::Graph,
    y: &'a FixedBitSet,
    /// Hyperedges as positions into `parts`, each listed under its largest
    /// position so it is checked once all its parts exist.
    closing: Vec<Vec<Vec<usize>>>,
    size: usize,
    threshold: usize,
    nodes: u64,
}

impl BlowupSearch<'_> {
    fn rich(&self, set: &[usize]) -> bool {
        let mut common = self.y.clone();
        for &v in set {
            common.intersect_with(self.l.neighbor_set(v));
        }
        common.count_ones(..) >= self.threshold
    }

    fn closes(&self, parts: &[Vec<usize>]) -> bool {
        self.closing[parts.len() - 1].iter().all(|e| {
            let slices: Vec<&[usize]> = e.iter().map(|&i| parts[i].as_slice()).collect();
            let mut ok = true;
            for_each_transversal(&slices, |pick| ok = ok && self.rich(pick));
            ok
        })
    }

    fn go(&mut self, free: &[usize], parts: &mut Vec<Vec<usize>>) -> Result<bool> {
        if parts.len() == self.closing.len() {
            return Ok(true);
        }
        let mut options = Vec::new();
        for_each_combination(free.len(), self.size, |idx| options.push(idx.to_vec()));
        for idx in options {
            self.nodes += 1;
            if self.nodes > BLOWUP_BUDGET {
                return Err(Error::TooLarge(format!("blowup search exceeded {BLOWUP_BUDGET} nodes")));
            }
            parts.push(idx.iter().map(|&i| free[i]).collect());
            if self.closes(parts) {
                let rest: Vec<usize> = (0..free.len()).filter(|i| !idx.contains(i)).map(|i| free[i]).collect();
                if self.go(&rest, parts)? {
                    return Ok(true);
                }
            }
            parts.pop();
        }
        Ok(false)
    }
}

/// Disjoint parts of size `th.m_blow` inside `candidates`, one per vertex of
/// `A`, such that every transversal of every neighbourhood `N_H(b)` has at
/// least `th.c_hs` common `L`-neighbours in `Y`. Exhaustive up to a node
/// budget; running out of budget is [`Error::TooLarge`].
pub fn find_rich_blowup(
    host: &Host,
    l: &Subgraph,
    h: &BipartiteTemplate,
    candidates: &[usize],
    th: &Thresholds,
) -> Result<Option<Vec<Vec<usize>>>> {
    let y = host.graph.vertex_set(&host.partition()?.right)?;
    let mut position = vec![usize::MAX; h.h()];
    for (i, &a) in h.a().iter().enumerate() {
        position[a] = i;
    }
    let mut closing = vec![Vec::new(); h.a().len()];
    let mut empty_rich = true;
    for e in neighborhood_hypergraph(h).edges {
        let pos: Vec<usize> = e.iter().map(|&a| position[a]).collect();
        match pos.iter().max() {
            Some(&last) => closing[last].push(pos),
            None => empty_rich &= y.count_ones(..) >= th.c_hs,
        }
    }
    if !empty_rich {
        return Ok(None);
    }
    let mut free = candidates.to_vec();
    free.sort_unstable();
    free.dedup();
    let mut search = BlowupSearch {
        l: l.graph(),
        y: &y,
        closing,
        size: th.m_blow,
        threshold: th.c_hs,
        nodes: 0,
    };
    let mut parts = Vec::new();
    Ok(search.go(&free, &mut parts)?.then_some(parts))
}

/// Tries each `y ∈ Y` in turn: counts the rich `p`-sets in `N_M(y)` (with
/// `p` the largest degree on the `B` side), looks for a rich blowup of the
/// neighbourhood hypergraph inside `N_M(y)` and hands it to the key-lemma
/// procedure. Vertices whose rich `p`-sets exceed a `γ` fraction are tried
/// first, then the rest, each group in index order.
pub fn asymmetric_embed(
    host: &Host,
    m: &Subgraph,
    h: &BipartiteTemplate,
    th: &Thresholds,
    delta_y: usize,
    seed: u64,
) -> Result<EmbeddingOutcome> {
    th.validate()?;
    let side = host.partition()?;
    let lg = m.graph();
    let x = host.graph.vertex_set(&side.left)?;
    let y_set = host.graph.vertex_set(&side.right)?;
    if let Some(&y) = side.right.iter().find(|&&y| lg.degree(y) < delta_y) {
        return Err(Error::HypothesisUnmet(format!(
            "vertex {y} has degree {} in M, below {delta_y}",
            lg.degree(y)
        )));
    }
    let p = neighborhood_hypergraph(h).max_edge_size().max(1);

    let mut trace = Vec::new();
    let mut dense = Vec::new();
    let mut sparse = Vec::new();
    for &y in &side.right {
        let t: Vec<usize> = lg.neighbor_set(y).intersection(&x).collect();
        let (mut rich, mut total) = (0u64, 0u64);
        for_each_combination(t.len(), p, |idx| {
            total += 1;
            let mut common = y_set.clone();
            for &i in idx {
                common.intersect_with(lg.neighbor_set(t[i]));
            }
            if common.count_ones(..) >= th.c_hs {
                rich += 1;
            }
        });
        let is_dense = total > 0 && Rational::from_integer(BigInt::from(rich)) > &th.gamma * BigInt::from(total);
        trace.push(TraceEvent::RichDensity {
            y,
            rich,
            total,
            dense: is_dense,
        });
        if is_dense { &mut dense } else { &mut sparse }.push((y, t));
    }

    for (y, t) in dense.into_iter().chain(sparse) {
        let parts = match find_rich_blowup(host, m, h, &t, th) {
            Ok(Some(parts)) => parts,
            Ok(None) => continue,
            Err(Error::TooLarge(_)) => {
                trace.push(TraceEvent::BlowupBudget { y });
                continue;
            }
            Err(e) => return Err(e),
        };
        trace.push(TraceEvent::Blowup {
            y,
            parts: parts.clone(),
        });
        let inner = key_lemma_embed(host, m, h, &parts, th, seed)?;
        trace.extend(inner.trace);
        if inner.found {
            return Ok(EmbeddingOutcome {
                found: true,
                map: inner.map,
                trace,
            });
        }
    }
    Ok(EmbeddingOutcome::not_found(trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::fixtures::planted_key_lemma;
    use crate::graph::{Bipartition, Graph};
    use crate::oracles::verify_bip_induced_map;

    fn c6() -> BipartiteTemplate {
        BipartiteTemplate::from_bipartite(Graph::cycle(6).unwrap()).unwrap()
    }

    /// The planted key-lemma host plus one `Y` vertex seeing all of `X`.
    fn wrapped() -> (Host, Subgraph) {
        let fx = planted_key_lemma(&c6(), 2, 2, 0).unwrap();
        let mut g = fx.host.graph.clone();
        let hub = g.add_vertices(1);
        let side = fx.host.partition().unwrap();
        for &x in &side.left {
            g.add_edge(x, hub).unwrap();
        }
        let mut right = side.right.clone();
        right.push(hub);
        let part = Bipartition::new(g.n(), side.left.clone(), right).unwrap();
        let l = Subgraph::new(&g, g.clone()).unwrap();
        (Host::new(g, Some(part), 2).unwrap(), l)
    }

    #[test]
    fn planted_with_hub() {
        let (host, m) = wrapped();
        let h = c6();
        let th = Thresholds {
            c_hs: 2,
            ..Thresholds::default()
        };
        let out = asymmetric_embed(&host, &m, &h, &th, 1, 3).unwrap();
        assert!(out.found);
        assert!(verify_bip_induced_map(&host, &h, out.map.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn edgeless_m() {
        let g = Graph::empty(6);
        let part = Bipartition::new(6, vec![0, 1, 2], vec![3, 4, 5]).unwrap();
        let host = Host::new(g.clone(), Some(part), 2).unwrap();
        let m = Subgraph::new(&g, g.clone()).unwrap();
        let out = asymmetric_embed(&host, &m, &c6(), &Thresholds::default(), 0, 0).unwrap();
        assert!(!out.found);
    }

    #[test]
    fn min_degree_hypothesis() {
        let (host, m) = wrapped();
        let err = asymmetric_embed(&host, &m, &c6(), &Thresholds::default(), 5, 0).unwrap_err();
        assert!(matches!(err, Error::HypothesisUnmet(_)));
    }
}
