//! From a semi-induced rooted power to an induced one.
//!
//! Copies of `F` that share `R` are joined in an auxiliary graph whenever the
//! host has an edge between their non-root parts, coloured by the first such
//! pair of non-roots. An independent set of copies spans an induced power; a
//! monochromatic clique of size `2s` spans a `K_{s,s}`.

use serde::Serialize;

use super::{EmbeddingOutcome, TraceEvent};
use crate::error::{Error, Result};
use crate::families::{rooted_power, RootedGraph};
use crate::graph::{Graph, VertexMap};
use crate::oracles::{verify_induced_map, KssWitness};

/// Auxiliary graph on copies; `colour[i][j]` (for `i < j`) is the
/// lexicographically least pair `(a, b)` of non-root positions with
/// `φ_i(a) φ_j(b)` an edge of the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuxGraph {
    pub graph: Graph,
    pub edges: Vec<(usize, usize, (usize, usize))>,
}

impl AuxGraph {
    pub fn colour(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        let (i, j) = (i.min(j), i.max(j));
        self.edges
            .binary_search_by(|&(u, v, _)| (u, v).cmp(&(i, j)))
            .ok()
            .map(|k| self.edges[k].2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction {
    #[serde(flatten)]
    pub outcome: EmbeddingOutcome,
    /// Indices of the copies forming the induced power.
    pub chosen: Vec<usize>,
    /// A `K_{s,s}` in the host found through a monochromatic clique.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kss: Option<KssWitness>,
}

/// Checks that every map is an induced copy of `f` in `g`, that all agree on
/// `R` and that their non-root images are pairwise disjoint and avoid the
/// image of `R`.
fn check_semi_induced(g: &Graph, copies: &[VertexMap], f: &RootedGraph) -> Result<()> {
    let mut owner = vec![None; g.n()];
    for (k, map) in copies.iter().enumerate() {
        if map.len() != f.graph().n() || map.as_slice().iter().any(|&v| v >= g.n()) {
            return Err(Error::NotSemiInduced(format!("copy {k} is not a map of F into G")));
        }
        if !verify_induced_map(g, f.graph(), map) {
            return Err(Error::NotSemiInduced(format!("copy {k} is not induced")));
        }
        if f.roots().iter().any(|&r| map.get(r) != copies[0].get(r)) {
            return Err(Error::NotSemiInduced(format!("copy {k} moves a root")));
        }
    }
    if let Some(first) = copies.first() {
        for &r in f.roots() {
            owner[first.get(r)] = Some(usize::MAX);
        }
    }
    for (k, map) in copies.iter().enumerate() {
        for v in f.non_roots() {
            let w = map.get(v);
            if let Some(other) = owner[w].replace(k) {
                let what = if other == usize::MAX {
                    "a root".to_string()
                } else {
                    format!("copy {other}")
                };
                return Err(Error::NotSemiInduced(format!("copy {k} shares vertex {w} with {what}")));
            }
        }
    }
    Ok(())
}

/// Builds the coloured auxiliary graph on `copies`; positions refer to
/// `f.non_roots()`.
pub fn auxiliary_graph(g: &Graph, copies: &[VertexMap], f: &RootedGraph) -> AuxGraph {
    let non_roots = f.non_roots();
    let mut graph = Graph::empty(copies.len());
    let mut edges = Vec::new();
    for i in 0..copies.len() {
        for j in i + 1..copies.len() {
            let colour = non_roots.iter().enumerate().find_map(|(a, &u)| {
                non_roots
                    .iter()
                    .position(|&v| g.has_edge(copies[i].get(u), copies[j].get(v)))
                    .map(|b| (a, b))
            });
            if let Some(c) = colour {
                graph.insert_edge(i, j);
                edges.push((i, j, c));
            }
        }
    }
    AuxGraph { graph, edges }
}

/// A clique of `size` copies whose edges all carry one colour; colours are
/// tried in lexicographic order and the first clique found is returned.
pub fn monochromatic_clique(aux: &AuxGraph, size: usize) -> Option<((usize, usize), Vec<usize>)> {
    let mut colours: Vec<(usize, usize)> = aux.edges.iter().map(|e| e.2).collect();
    colours.sort_unstable();
    colours.dedup();
    let n = aux.graph.n();
    for colour in colours {
        let mut mono = Graph::empty(n);
        for &(i, j, c) in &aux.edges {
            if c == colour {
                mono.insert_edge(i, j);
            }
        }
        let mut clique = Vec::with_capacity(size);
        if grow_clique(&mono, size, 0, &mut clique) {
            return Some((colour, clique));
        }
    }
    None
}

fn grow_clique(g: &Graph, size: usize, from: usize, clique: &mut Vec<usize>) -> bool {
    if clique.len() == size {
        return true;
    }
    for v in from..g.n() {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
            if grow_clique(g, size, v + 1, clique) {
                return true;
            }
            clique.pop();
        }
    }
    false
}

/// An independent set of `size` vertices, trying vertices in order of
/// increasing degree (ties by index); returned sorted.
fn independent_set(g: &Graph, size: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut chosen = Vec::with_capacity(size);
    fn go(g: &Graph, order: &[usize], size: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == size {
            return true;
        }
        for k in from..order.len() {
            if order.len() - k < size - chosen.len() {
                break;
            }
            let v = order[k];
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                if go(g, order, size, k + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(g, &order, size, 0, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

/// Looks for `l` of the given copies that together form an induced `F_R^l`.
///
/// On success the map sends `rooted_power(f, l)` into `g` and has been
/// re-verified. Otherwise a monochromatic clique of size `2s` is searched
/// for; its copies give a `K_{s,s}` in `g`.
pub fn extract_induced_power(
    g: &Graph,
    copies: &[VertexMap],
    f: &RootedGraph,
    l: usize,
    s: usize,
) -> Result<Extraction> {
    if l == 0 || s == 0 {
        return Err(Error::InvalidParameter("l and s must be positive".into()));
    }
    check_semi_induced(g, copies, f)?;
    let aux = auxiliary_graph(g, copies, f);
    let mut trace = Vec::new();

    if let Some(chosen) = independent_set(&aux.graph, l) {
        trace.push(TraceEvent::Independent { copies: chosen.clone() });
        let power = rooted_power(f, l)?;
        let mut image = vec![usize::MAX; power.rooted.graph().n()];
        for (slot, &k) in power.copies.iter().zip(&chosen) {
            for v in 0..f.graph().n() {
                image[slot.get(v)] = copies[k].get(v);
            }
        }
        let map = VertexMap::new(image)?;
        if verify_induced_map(g, power.rooted.graph(), &map) {
            trace.push(TraceEvent::Found { attempt: 0 });
            return Ok(Extraction {
                outcome: EmbeddingOutcome {
                    found: true,
                    map: Some(map),
                    trace,
                },
                chosen,
                kss: None,
            });
        }
    }

    let kss = monochromatic_clique(&aux, 2 * s).map(|((a, b), clique)| {
        trace.push(TraceEvent::MonochromaticClique {
            colour: (a, b),
            copies: clique.clone(),
        });
        let non_roots = f.non_roots();
        let mut left: Vec<usize> = clique[..s].iter().map(|&k| copies[k].get(non_roots[a])).collect();
        let mut right: Vec<usize> = clique[s..].iter().map(|&k| copies[k].get(non_roots[b])).collect();
        left.sort_unstable();
        right.sort_unstable();
        (left, right)
    });
    Ok(Extraction {
        outcome: EmbeddingOutcome::not_found(trace),
        chosen: Vec::new(),
        kss,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::fixtures::planted_semi_induced;
    use crate::families::{height_two_tree, rooted_path};

    #[test]
    fn clean_copies_all_returned() {
        let f = rooted_path(3).unwrap();
        let fx = planted_semi_induced(&f, 3, &[]).unwrap();
        let out = extract_induced_power(&fx.graph, &fx.copies, &f, 3, 2).unwrap();
        assert!(out.outcome.found);
        assert_eq!(out.chosen, vec![0, 1, 2]);
        assert!(auxiliary_graph(&fx.graph, &fx.copies, &f).edges.is_empty());
    }

    #[test]
    fn planted_lambda_five() {
        let f = rooted_path(2).unwrap();
        let fx = planted_semi_induced(&f, 5, &[0, 1, 2]).unwrap();
        let out = extract_induced_power(&fx.graph, &fx.copies, &f, 2, 3).unwrap();
        assert!(out.outcome.found);
        assert_eq!(out.chosen, vec![3, 4]);
        let aux = auxiliary_graph(&fx.graph, &fx.copies, &f);
        assert_eq!(aux.colour(1, 0), Some((0, 0)));
        assert!(monochromatic_clique(&aux, 6).is_none());
        assert_eq!(monochromatic_clique(&aux, 3), Some(((0, 0), vec![0, 1, 2])));
    }

    #[test]
    fn clique_gives_kss() {
        // all four copies pairwise joined: a monochromatic K_4 gives K_{2,2}
        let f = rooted_path(2).unwrap();
        let fx = planted_semi_induced(&f, 4, &[0, 1, 2, 3]).unwrap();
        let out = extract_induced_power(&fx.graph, &fx.copies, &f, 2, 2).unwrap();
        assert!(!out.outcome.found);
        let (left, right) = out.kss.unwrap();
        for &u in &left {
            for &v in &right {
                assert!(fx.graph.has_edge(u, v));
            }
        }
    }

    #[test]
    fn shared_non_root_rejected() {
        let f = height_two_tree(2, 1).unwrap();
        let fx = planted_semi_induced(&f, 2, &[]).unwrap();
        let copies = vec![fx.copies[0].clone(), fx.copies[0].clone()];
        assert!(matches!(
            extract_induced_power(&fx.graph, &copies, &f, 2, 2),
            Err(Error::NotSemiInduced(_))
        ));
    }
}
