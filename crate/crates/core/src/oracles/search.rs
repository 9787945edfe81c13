//! Backtracking search for (induced) copies of a pattern graph.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexMap};

/// Search for injective maps `V(h) -> V(g)`.
///
/// With `induced` set, a map must satisfy `φ(u)φ(v) ∈ E(g) ⇔ uv ∈ E(h)`;
/// otherwise only edges of `h` must be preserved. Optional per-vertex
/// domains restrict where each pattern vertex may land.
pub struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    induced: bool,
    domains: Option<Vec<FixedBitSet>>,
    order: Vec<usize>,
}

/// Pattern vertices ordered so each one has as many earlier neighbours as
/// possible; ties go to higher degree, then lower index.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut back = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| (back[u], h.degree(u), std::cmp::Reverse(u)))
            .expect("unplaced vertex");
        placed[u] = true;
        order.push(u);
        for w in h.neighbors(u) {
            back[w] += 1;
        }
    }
    order
}

impl<'a> Search<'a> {
    pub fn induced(g: &'a Graph, h: &'a Graph) -> Self {
        Search {
            g,
            h,
            induced: true,
            domains: None,
            order: search_order(h),
        }
    }

    pub fn subgraph(g: &'a Graph, h: &'a Graph) -> Self {
        Search {
            g,
            h,
            induced: false,
            domains: None,
            order: search_order(h),
        }
    }

    /// Restricts pattern vertex `u` to the host vertices in `domains[u]`.
    pub fn with_domains(mut self, domains: Vec<FixedBitSet>) -> Self {
        assert_eq!(domains.len(), self.h.n(), "one domain per pattern vertex");
        self.domains = Some(domains);
        self
    }

    /// Calls `f` on every map until it returns `Break`.
    pub fn for_each<B>(&self, mut f: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
        let (g, h) = (self.g, self.h);
        if h.n() > g.n() {
            return None;
        }
        let mut image = vec![usize::MAX; h.n()];
        let mut used = FixedBitSet::with_capacity(g.n());
        match self.extend(0, &mut image, &mut used, &mut f) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    fn candidates(&self, depth: usize, image: &[usize], used: &FixedBitSet) -> FixedBitSet {
        let (g, h) = (self.g, self.h);
        let u = self.order[depth];
        let mut cand = match &self.domains {
            Some(d) => d[u].clone(),
            None => g.full_set(),
        };
        cand.difference_with(used);
        for &w in &self.order[..depth] {
            let x = image[w];
            if h.has_edge(u, w) {
                cand.intersect_with(g.neighbor_set(x));
            } else if self.induced {
                cand.difference_with(g.neighbor_set(x));
            }
        }
        cand
    }

    fn extend<B>(
        &self,
        depth: usize,
        image: &mut Vec<usize>,
        used: &mut FixedBitSet,
        f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if depth == self.h.n() {
            return f(image);
        }
        let u = self.order[depth];
        let need = self.h.degree(u);
        for x in self.candidates(depth, image, used).ones() {
            if self.g.degree(x) < need {
                continue;
            }
            image[u] = x;
            used.insert(x);
            let r = self.extend(depth + 1, image, used, f);
            used.set(x, false);
            r?;
        }
        image[u] = usize::MAX;
        ControlFlow::Continue(())
    }

    pub fn first(&self) -> Option<VertexMap> {
        self.for_each(|m| ControlFlow::Break(VertexMap::from_vec_unchecked(m.to_vec())))
    }

    /// Every map, sorted lexicographically by image vector.
    pub fn all(&self) -> Vec<VertexMap> {
        let mut out = Vec::new();
        self.for_each::<()>(|m| {
            out.push(VertexMap::from_vec_unchecked(m.to_vec()));
            ControlFlow::Continue(())
        });
        out.sort_unstable();
        out
    }
}

/// Some induced copy of `h` in `g`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexMap> {
    Search::induced(g, h).first()
}

/// Every induced embedding of `h` in `g` (automorphic images counted
/// separately).
pub fn induced_copies(g: &Graph, h: &Graph) -> Vec<VertexMap> {
    Search::induced(g, h).all()
}

/// Some (not necessarily induced) copy of `h` in `g`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Option<VertexMap> {
    Search::subgraph(g, h).first()
}

/// An isomorphism `h -> g`, if any.
pub fn isomorphic(g: &Graph, h: &Graph) -> Option<VertexMap> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    contains_induced(g, h)
}

/// Checks a map against the definition: in range, injective, and adjacency
/// preserved in both directions for every pair.
pub fn verify_induced_map(g: &Graph, h: &Graph, map: &VertexMap) -> bool {
    let m = map.as_slice();
    if m.len() != h.n() || m.iter().any(|&x| x >= g.n()) {
        return false;
    }
    for u in 0..m.len() {
        for v in u + 1..m.len() {
            if m[u] == m[v] || g.has_edge(m[u], m[v]) != h.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let m = contains_induced(&c4, &Graph::path(3)).unwrap();
        assert!(verify_induced_map(&c4, &Graph::path(3), &m));
        assert!(contains_induced(&c4, &Graph::path(4)).is_none());
        assert!(contains_induced(&Graph::cycle(6).unwrap(), &c4).is_none());
        assert!(contains_subgraph(&Graph::complete(4), &c4).is_some());
    }

    #[test]
    fn copies_of_p3_in_c4() {
        // 4 middle vertices, 2 orientations each
        assert_eq!(induced_copies(&Graph::cycle(4).unwrap(), &Graph::path(3)).len(), 8);
    }

    #[test]
    fn domains_restrict() {
        let c4 = Graph::cycle(4).unwrap();
        let p = Graph::path(2);
        let mut d0 = FixedBitSet::with_capacity(4);
        d0.insert(2);
        let all = c4.full_set();
        let maps = Search::induced(&c4, &p).with_domains(vec![d0, all]).all();
        let images: Vec<_> = maps.iter().map(|m| m.as_slice().to_vec()).collect();
        assert_eq!(images, vec![vec![2, 1], vec![2, 3]]);
    }

    #[test]
    fn isomorphism() {
        let a = Graph::cycle(5).unwrap();
        let b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let m = isomorphic(&a, &b).unwrap();
        assert!(verify_induced_map(&a, &b, &m));
        assert!(isomorphic(&a, &Graph::path(5)).is_none());
    }
}
