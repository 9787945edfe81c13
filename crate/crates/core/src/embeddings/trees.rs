//! Greedy enumeration of good induced tree copies.
//!
//! A labeled copy of a tree inside `L` is *good* when it is induced in the
//! host `G` and no vertex of the copy lies in the bad set
//! `B(x) = {y : |N_G(y) ∩ N_L(x)| ≥ d/(4t)}` of another vertex `x` of the
//! copy. Good copies of `T_i` are extended leaf by leaf through
//! `Γ(S) = N_L(u') \ (V(S) ∪ ⋃_{x ≠ u'} N_G(x) ∪ ⋃_x B(x))`, where `u'` is
//! the image of the new leaf's parent. `u'` itself has to stay out of the
//! union of host neighbourhoods, otherwise `Γ(S)` would always be empty.

use fixedbitset::FixedBitSet;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Host, VertexMap};
use crate::oracles::contains_kss;
use crate::rational::{int, pow, rat, Rational};

/// A subgraph `L` of a host graph on the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    graph: Graph,
}

impl Subgraph {
    /// Checks that every edge of `l` is an edge of `g`.
    pub fn new(g: &Graph, l: Graph) -> Result<Self> {
        if l.n() != g.n() {
            return Err(Error::InvalidParameter(format!(
                "subgraph has {} vertices, host has {}",
                l.n(),
                g.n()
            )));
        }
        if let Some((u, v)) = l.edges().into_iter().find(|&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidParameter(format!("edge {{{u}, {v}}} of L is not in G")));
        }
        Ok(Subgraph { graph: l })
    }

    /// All cross edges of a partitioned host.
    pub fn cross(host: &Host) -> Result<Self> {
        let parts = host.partition()?;
        let x = host.graph.vertex_set(&parts.left)?;
        let mut l = Graph::empty(host.graph.n());
        for (u, v) in host.graph.edges() {
            if x.contains(u) != x.contains(v) {
                l.insert_edge(u, v);
            }
        }
        Ok(Subgraph { graph: l })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// Leaf-extension order of a tree: `(vertex, parent)` pairs starting with
/// `(0, None)`, each later vertex a leaf of the tree spanned so far.
pub fn leaf_order(t: &Graph) -> Result<Vec<(usize, Option<usize>)>> {
    if t.n() == 0 || t.edge_count() + 1 != t.n() || !t.is_connected() {
        return Err(Error::InvalidParameter("pattern is not a tree".into()));
    }
    let mut order = vec![(0, None)];
    let mut seen = vec![false; t.n()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i].0;
        for w in t.neighbors(u) {
            if !std::mem::replace(&mut seen[w], true) {
                order.push((w, Some(u)));
            }
        }
        i += 1;
    }
    Ok(order)
}

/// Bad sets `B(x)` for every vertex, with threshold `d/(4t)`.
pub fn tree_bad_sets(g: &Graph, l: &Graph, d: usize, t: usize) -> Vec<FixedBitSet> {
    let need = rat(d as i64, 4 * t as i64);
    (0..g.n())
        .map(|x| {
            let nl = l.neighbor_set(x);
            let mut b = FixedBitSet::with_capacity(g.n());
            for y in 0..g.n() {
                if int(g.neighbor_set(y).intersection_count(nl) as i64) >= need {
                    b.insert(y);
                }
            }
            b
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEmbedding {
    /// Good labeled copies, sorted; `maps[i].get(v)` is the image of tree
    /// vertex `v`.
    pub maps: Vec<VertexMap>,
    /// Whether the counting guarantee's hypotheses hold for this instance.
    pub lemma_applies: bool,
    /// `n (d/2)^{t-1}`, the guaranteed count when the lemma applies.
    #[serde(with = "crate::rational::as_string")]
    pub guaranteed: Rational,
}

/// Enumerates every good labeled copy of the tree `t` in `L`.
pub fn greedy_tree_embed(host: &Host, l: &Subgraph, t: &Graph, d: usize) -> Result<TreeEmbedding> {
    let g = &host.graph;
    let l = l.graph();
    let order = leaf_order(t)?;
    let size = t.n();
    let bad = tree_bad_sets(g, l, d, size);

    // partial copies as images indexed by position in `order`
    let mut level: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    for &(_, parent) in &order[1..] {
        let parent_pos = order
            .iter()
            .position(|&(v, _)| Some(v) == parent)
            .expect("parent placed earlier");
        let mut next = Vec::new();
        for copy in &level {
            let u = copy[parent_pos];
            let mut gamma = l.neighbor_set(u).clone();
            for &x in copy {
                gamma.set(x, false);
                gamma.difference_with(&bad[x]);
                if x != u {
                    gamma.difference_with(g.neighbor_set(x));
                }
            }
            for v in gamma.ones() {
                if copy.iter().any(|&x| bad[v].contains(x)) {
                    continue;
                }
                let mut extended = copy.clone();
                extended.push(v);
                next.push(extended);
            }
        }
        level = next;
    }

    let mut maps: Vec<VertexMap> = level
        .into_iter()
        .map(|copy| {
            let mut image = vec![0; size];
            for (pos, &(v, _)) in order.iter().enumerate() {
                image[v] = copy[pos];
            }
            VertexMap::new(image).expect("copies are injective")
        })
        .collect();
    maps.sort_unstable();

    Ok(TreeEmbedding {
        lemma_applies: lemma_applies(host, l, d, size),
        guaranteed: int(g.n() as i64) * pow(&rat(d as i64, 2), size as u32 - 1),
        maps,
    })
}

/// `δ(L) ≥ d ≥ s t^2 2^{t+6} K^{t-1}` with `K = Δ(L)/δ(L)`, and `G` is
/// `K_{s,s}`-free.
fn lemma_applies(host: &Host, l: &Graph, d: usize, t: usize) -> bool {
    if l.n() == 0 {
        return false;
    }
    let (lo, hi) = l.min_max_degree();
    if lo == 0 || lo < d {
        return false;
    }
    let k = rat(hi as i64, lo as i64);
    let need = int((host.s * t * t) as i64) * pow(&int(2), t as u32 + 6) * pow(&k, t as u32 - 1);
    if int(d as i64) < need || need.is_zero() {
        return false;
    }
    contains_kss(&host.graph, host.s).is_none()
}

/// Whether a tree copy avoids every heavy `p`-star: for each tree vertex
/// and each `p` of its tree neighbours, the images of those neighbours have
/// fewer than `threshold` common `L`-neighbours.
pub fn is_admissible(l: &Graph, t: &Graph, map: &VertexMap, p: usize, threshold: usize) -> bool {
    for centre in 0..t.n() {
        let leaves: Vec<usize> = t.neighbors(centre).map(|v| map.get(v)).collect();
        if leaves.len() < p || p == 0 {
            continue;
        }
        let mut heavy = false;
        crate::families::for_each_combination(leaves.len(), p, |idx| {
            if heavy {
                return;
            }
            let mut common = l.full_set();
            for &i in idx {
                common.intersect_with(l.neighbor_set(leaves[i]));
            }
            heavy = common.count_ones(..) >= threshold;
        });
        if heavy {
            return false;
        }
    }
    true
}

/// Copies with no heavy `p`-star.
pub fn admissible_copies(l: &Subgraph, t: &Graph, maps: &[VertexMap], p: usize, threshold: usize) -> Vec<VertexMap> {
    maps.iter()
        .filter(|m| is_admissible(l.graph(), t, m, p, threshold))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{induced_copies, verify_induced_map};

    fn host(g: Graph) -> Host {
        Host::new(g, None, 2).unwrap()
    }

    #[test]
    fn c6_paths() {
        let c6 = Graph::cycle(6).unwrap();
        let h = host(c6.clone());
        let l = Subgraph::new(&c6, c6.clone()).unwrap();
        let out = greedy_tree_embed(&h, &l, &Graph::path(3), 2).unwrap();
        // d/(4t) = 1/6, so every vertex sharing a neighbour is bad: every
        // induced P3 has its ends in each other's bad sets
        let all = induced_copies(&c6, &Graph::path(3));
        assert_eq!(all.len(), 12);
        assert!(out.maps.iter().all(|m| all.contains(m)));
        for m in &out.maps {
            assert!(verify_induced_map(&c6, &Graph::path(3), m));
        }
    }

    #[test]
    fn single_vertex_tree() {
        let g = Graph::cycle(5).unwrap();
        let l = Subgraph::new(&g, g.clone()).unwrap();
        let out = greedy_tree_embed(&host(g), &l, &Graph::path(1), 1).unwrap();
        assert_eq!(out.maps.len(), 5);
    }

    #[test]
    fn complete_host_has_no_induced_path() {
        let g = Graph::complete(4);
        let l = Subgraph::new(&g, g.clone()).unwrap();
        let out = greedy_tree_embed(&host(g), &l, &Graph::path(3), 100).unwrap();
        assert!(out.maps.is_empty());
    }

    #[test]
    fn leaf_order_rejects_non_trees() {
        assert!(leaf_order(&Graph::cycle(4).unwrap()).is_err());
        let order = leaf_order(&Graph::complete_bipartite(1, 3)).unwrap();
        assert_eq!(order, vec![(0, None), (1, Some(0)), (2, Some(0)), (3, Some(0))]);
    }

    #[test]
    fn subgraph_must_lie_in_host() {
        let g = Graph::path(3);
        assert!(Subgraph::new(&g, Graph::complete(3)).is_err());
    }

    #[test]
    fn admissibility() {
        // K_{2,3}: the two left vertices share 3 neighbours
        let l = Graph::complete_bipartite(2, 3);
        let p3 = Graph::path(3);
        // centre 2 with leaves 0 and 1
        let m = VertexMap::new(vec![0, 2, 1]).unwrap();
        assert!(!is_admissible(&l, &p3, &m, 2, 3));
        assert!(is_admissible(&l, &p3, &m, 2, 4));
    }
}
