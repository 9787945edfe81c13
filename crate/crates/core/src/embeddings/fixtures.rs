//! Planted instances on which the embedding procedures must succeed.

use super::trees::Subgraph;
use crate::error::Result;
use crate::families::{for_each_transversal, rooted_power, BipartiteTemplate, RootedGraph};
use crate::graph::{Bipartition, Graph, Host, VertexMap};

/// A host with a planted blowup for the key-lemma procedure.
#[derive(Clone, Debug)]
pub struct KeyLemmaFixture {
    pub host: Host,
    pub l: Subgraph,
    /// Blowup parts in the order of `h.a()`.
    pub parts: Vec<Vec<usize>>,
}

/// Builds `X` from parts of size `m`, one per vertex of `A` (part `i` is
/// `i·m .. (i+1)·m`). For every `b ∈ B` and every transversal of the parts
/// of `N_H(b)`, `w` new `Y` vertices are joined to exactly that transversal.
/// `pad` isolated vertices are appended to `Y`. `L` is the whole host, which
/// is bipartite, and `s` is set to `2`.
pub fn planted_key_lemma(h: &BipartiteTemplate, m: usize, w: usize, pad: usize) -> Result<KeyLemmaFixture> {
    let a_len = h.a().len();
    let mut position = vec![usize::MAX; h.h()];
    for (i, &a) in h.a().iter().enumerate() {
        position[a] = i;
    }
    let parts: Vec<Vec<usize>> = (0..a_len).map(|i| (i * m..(i + 1) * m).collect()).collect();
    let mut g = Graph::empty(a_len * m);
    for &b in h.b() {
        let slices: Vec<&[usize]> = h.graph().neighbors(b).map(|a| parts[position[a]].as_slice()).collect();
        let mut picks = Vec::new();
        for_each_transversal(&slices, |pick| picks.push(pick.to_vec()));
        for pick in picks {
            let first = g.add_vertices(w);
            for y in first..first + w {
                for &x in &pick {
                    g.insert_edge(x, y);
                }
            }
        }
    }
    g.add_vertices(pad);
    let n = g.n();
    let partition = Bipartition::new(n, (0..a_len * m).collect(), (a_len * m..n).collect())?;
    let l = Subgraph::new(&g, g.clone())?;
    Ok(KeyLemmaFixture {
        host: Host::new(g, Some(partition), 2)?,
        l,
        parts,
    })
}

/// A semi-induced rooted power with extra edges between some copies.
#[derive(Clone, Debug)]
pub struct SemiInducedFixture {
    pub graph: Graph,
    pub copies: Vec<VertexMap>,
}

/// `F_R^λ` with, for every pair of copies listed in `dirty`, an edge between
/// their images of the first non-root of `F`.
pub fn planted_semi_induced(f: &RootedGraph, lambda: usize, dirty: &[usize]) -> Result<SemiInducedFixture> {
    let power = rooted_power(f, lambda)?;
    let mut graph = power.rooted.graph().clone();
    if let Some(&v) = f.non_roots().first() {
        for (i, &ci) in dirty.iter().enumerate() {
            for &cj in &dirty[i + 1..] {
                let (x, y) = (power.copies[ci].get(v), power.copies[cj].get(v));
                graph.add_edge(x, y)?;
            }
        }
    }
    Ok(SemiInducedFixture {
        graph,
        copies: power.copies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::rooted_path;
    use crate::oracles::{contains_kss, verify_induced_map};

    #[test]
    fn key_lemma_fixture_shape() {
        let h = BipartiteTemplate::from_bipartite(Graph::cycle(6).unwrap()).unwrap();
        let fx = planted_key_lemma(&h, 2, 3, 4).unwrap();
        // 3 parts of 2, then 3 neighbourhoods * 4 transversals * 3, then 4
        assert_eq!(fx.host.graph.n(), 6 + 36 + 4);
        assert_eq!(fx.host.graph.edge_count(), 36 * 2);
    }

    #[test]
    fn semi_induced_fixture() {
        let f = rooted_path(2).unwrap();
        let fx = planted_semi_induced(&f, 5, &[0, 1, 2]).unwrap();
        assert_eq!(fx.graph.n(), 7);
        assert_eq!(fx.graph.edge_count(), 10 + 3);
        for m in &fx.copies {
            assert!(verify_induced_map(&fx.graph, f.graph(), m));
        }
        assert!(contains_kss(&fx.graph, 3).is_none());
    }
}
