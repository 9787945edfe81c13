//! Copies of a bipartite template that live in `G[X, Y]` and are induced in
//! `G`.

use fixedbitset::FixedBitSet;

use super::search::{verify_induced_map, Search};
use crate::error::Result;
use crate::families::BipartiteTemplate;
use crate::graph::{Graph, Host, VertexMap};

/// Domains sending `A` into `first` and `B` into `second`.
pub(crate) fn side_domains(h: &BipartiteTemplate, first: &FixedBitSet, second: &FixedBitSet) -> Vec<FixedBitSet> {
    let mut domains = vec![second.clone(); h.h()];
    for &a in h.a() {
        domains[a] = first.clone();
    }
    domains
}

/// First induced copy of `h` with `A` in one side and `B` in the other,
/// trying `A ⊆ X` before `A ⊆ Y`.
pub fn contains_bip_induced(host: &Host, h: &BipartiteTemplate) -> Result<Option<VertexMap>> {
    let parts = host.partition()?;
    let g = &host.graph;
    let x = g.vertex_set(&parts.left)?;
    let y = g.vertex_set(&parts.right)?;
    for (first, second) in [(&x, &y), (&y, &x)] {
        let found = Search::induced(g, h.graph())
            .with_domains(side_domains(h, first, second))
            .first();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Whether `map` is an induced copy of `h` in `host.graph` whose parts land
/// on opposite sides of the host partition.
pub fn verify_bip_induced_map(host: &Host, h: &BipartiteTemplate, map: &VertexMap) -> Result<bool> {
    let parts = host.partition()?;
    if !verify_induced_map(&host.graph, h.graph(), map) {
        return Ok(false);
    }
    let x = host.graph.vertex_set(&parts.left)?;
    let side = |v: usize| x.contains(map.get(v));
    let a_side: Vec<bool> = h.a().iter().map(|&v| side(v)).collect();
    let b_side: Vec<bool> = h.b().iter().map(|&v| side(v)).collect();
    let uniform = |s: &[bool], want: bool| s.iter().all(|&b| b == want);
    Ok([true, false]
        .into_iter()
        .any(|a_in_x| uniform(&a_side, a_in_x) && uniform(&b_side, !a_in_x)))
}

/// Whether `G`, coloured by `in_x`, has an induced copy of `h` across the
/// colouring that uses vertex `w`.
pub(crate) fn bip_induced_through(g: &Graph, in_x: &FixedBitSet, h: &BipartiteTemplate, w: usize) -> bool {
    let mut y = g.full_set();
    y.difference_with(in_x);
    let mut pin = FixedBitSet::with_capacity(g.n());
    pin.insert(w);
    for (first, second) in [(in_x, &y), (&y, in_x)] {
        let base = side_domains(h, first, second);
        for u in 0..h.h() {
            if !base[u].contains(w) {
                continue;
            }
            let mut domains = base.clone();
            domains[u] = pin.clone();
            if Search::induced(g, h.graph()).with_domains(domains).first().is_some() {
                return true;
            }
        }
    }
    false
}
