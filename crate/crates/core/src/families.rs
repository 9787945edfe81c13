//! Constructors for the rooted trees, paths, theta graphs, rooted powers and
//! `K_{t,t}` attachments used throughout the crate, plus neighbourhood
//! hypergraphs and their blowups.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexMap};

/// A graph `F` with a proper root set `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    roots: Vec<usize>,
}

impl RootedGraph {
    pub fn new(graph: Graph, mut roots: Vec<usize>) -> Result<Self> {
        roots.sort_unstable();
        roots.dedup();
        for &r in &roots {
            graph.check_vertex(r)?;
        }
        if roots.len() >= graph.n() {
            return Err(Error::DegenerateRoot);
        }
        Ok(RootedGraph { graph, roots })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Sorted root set.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.roots.binary_search(&v).is_ok()
    }

    /// Sorted `V(F) \ R`; never empty.
    pub fn non_roots(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| !self.is_root(v)).collect()
    }
}

/// `T_{r,t}`: an `r`-star whose leaves each receive `t` new leaves, rooted at
/// the leaf set.
///
/// Numbering: centre `0`, children `1..=r`, then grandchildren row by row so
/// that `z_{i,j}` (1-based) is `r + (i - 1) t + j`.
pub fn height_two_tree(r: usize, t: usize) -> Result<RootedGraph> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "T_{{r,t}} needs r, t >= 1, got r={r}, t={t}"
        )));
    }
    let n = 1 + r + r * t;
    let mut g = Graph::empty(n);
    let mut roots = Vec::with_capacity(r * t);
    for i in 1..=r {
        g.insert_edge(0, i);
        for j in 1..=t {
            let z = r + (i - 1) * t + j;
            g.insert_edge(i, z);
            roots.push(z);
        }
    }
    RootedGraph::new(g, roots)
}

/// `T_{r,1,1}`: `T_{r,1}` plus one more leaf on the centre, rooted at all
/// leaves.
///
/// Numbering: `a = 0`, `b_i = i`, `c_i = r + i` for `i` in `1..=r`, and
/// `b_{r+1} = 2r + 1`.
pub fn tree_r11(r: usize) -> Result<RootedGraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("T_{r,1,1} needs r >= 1".into()));
    }
    let mut g = Graph::empty(2 * r + 2);
    let mut roots = Vec::with_capacity(r + 1);
    for i in 1..=r {
        g.insert_edge(0, i);
        g.insert_edge(i, r + i);
        roots.push(r + i);
    }
    g.insert_edge(0, 2 * r + 1);
    roots.push(2 * r + 1);
    RootedGraph::new(g, roots)
}

/// Path with `len` edges rooted at its endpoints, which are vertices `0` and
/// `1`; the interior runs `2, 3, ..., len` from the `0` end.
pub fn rooted_path(len: usize) -> Result<RootedGraph> {
    if len < 2 {
        return Err(Error::DegenerateRoot);
    }
    let mut g = Graph::empty(len + 1);
    let mut prev = 0;
    for v in 2..=len {
        g.insert_edge(prev, v);
        prev = v;
    }
    g.insert_edge(prev, 1);
    RootedGraph::new(g, vec![0, 1])
}

/// Star `K_{1,r}` with centre `0`, rooted at its `r` leaves.
pub fn rooted_star(r: usize) -> Result<RootedGraph> {
    if r == 0 {
        return Err(Error::InvalidParameter("star needs r >= 1".into()));
    }
    let mut g = Graph::empty(r + 1);
    for v in 1..=r {
        g.insert_edge(0, v);
    }
    RootedGraph::new(g, (1..=r).collect())
}

/// The `l`-th rooted power together with the vertex map of every copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedPower {
    pub rooted: RootedGraph,
    /// `copies[k].get(v)` is the image of `v ∈ V(F)` in copy `k`.
    pub copies: Vec<VertexMap>,
}

/// `F_R^l`: `l` copies of `F` identified along `R`, disjoint elsewhere.
///
/// Copy `0` keeps the numbering of `f`; later copies append their non-roots
/// in increasing order. Edges inside `R` are shared by all copies.
pub fn rooted_power(f: &RootedGraph, l: usize) -> Result<RootedPower> {
    if l == 0 {
        return Err(Error::InvalidParameter("power needs l >= 1".into()));
    }
    let g = f.graph();
    let non_roots = f.non_roots();
    let n = f.roots().len() + l * non_roots.len();
    let mut out = Graph::empty(n);
    let mut copies = Vec::with_capacity(l);
    let mut next = g.n();
    for k in 0..l {
        let mut image: Vec<usize> = (0..g.n()).collect();
        if k > 0 {
            for &v in &non_roots {
                image[v] = next;
                next += 1;
            }
        }
        for (u, v) in g.edges() {
            out.insert_edge(image[u], image[v]);
        }
        copies.push(VertexMap::from_vec_unchecked(image));
    }
    Ok(RootedPower {
        rooted: RootedGraph::new(out, f.roots().to_vec())?,
        copies,
    })
}

/// Partition of a rooted power that every copy inherits from `parts`.
pub fn power_parts(power: &RootedPower, parts: &Bipartition) -> Bipartition {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let n = power.rooted.graph().n();
    let mut seen = vec![false; n];
    for copy in &power.copies {
        for &v in &parts.left {
            let w = copy.get(v);
            if !std::mem::replace(&mut seen[w], true) {
                left.push(w);
            }
        }
        for &v in &parts.right {
            let w = copy.get(v);
            if !std::mem::replace(&mut seen[w], true) {
                right.push(w);
            }
        }
    }
    left.sort_unstable();
    right.sort_unstable();
    Bipartition { left, right }
}

/// `Θ_len^t`: `t` internally disjoint paths of length `len` between vertices
/// `0` and `1`, numbered path by path.
pub fn theta(len: usize, t: usize) -> Result<Graph> {
    if t == 0 || len == 0 {
        return Err(Error::InvalidParameter(format!(
            "theta needs len, t >= 1, got len={len}, t={t}"
        )));
    }
    if len == 1 {
        return if t == 1 {
            Graph::from_edges(2, &[(0, 1)])
        } else {
            Err(Error::Multigraph)
        };
    }
    Ok(rooted_power(&rooted_path(len)?, t)?.rooted.into_graph())
}

/// A bipartite pattern `H` with ordered parts `(A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteTemplate {
    graph: Graph,
    parts: Bipartition,
}

impl BipartiteTemplate {
    pub fn new(graph: Graph, parts: Bipartition) -> Result<Self> {
        let parts = Bipartition::new(graph.n(), parts.left, parts.right)?;
        parts.check_edges(&graph)?;
        Ok(BipartiteTemplate { graph, parts })
    }

    /// Uses the canonical 2-colouring of a bipartite graph.
    pub fn from_bipartite(graph: Graph) -> Result<Self> {
        let parts = graph
            .bipartition()
            .ok_or_else(|| Error::NotBipartite("graph has an odd cycle".into()))?;
        Ok(BipartiteTemplate { graph, parts })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parts(&self) -> &Bipartition {
        &self.parts
    }

    /// `A`.
    pub fn a(&self) -> &[usize] {
        &self.parts.left
    }

    /// `B`.
    pub fn b(&self) -> &[usize] {
        &self.parts.right
    }

    /// Vertex count `h = |A| + |B|`.
    pub fn h(&self) -> usize {
        self.graph.n()
    }

    /// Same graph with the roles of `A` and `B` exchanged.
    pub fn swapped(&self) -> BipartiteTemplate {
        BipartiteTemplate {
            graph: self.graph.clone(),
            parts: self.parts.swapped(),
        }
    }
}

/// Appends `C` and `D` (each of size `t`) forming `K_{t,t}` and joins
/// `A`–`D` and `B`–`C`. Returns the graph and the new parts `(A ∪ C, B ∪ D)`.
fn attach_ktt_graph(g: &Graph, parts: &Bipartition, t: usize) -> (Graph, Bipartition, Vec<usize>) {
    let mut out = g.clone();
    let first = out.add_vertices(2 * t);
    let c: Vec<usize> = (first..first + t).collect();
    let d: Vec<usize> = (first + t..first + 2 * t).collect();
    for &ci in &c {
        for &dj in &d {
            out.insert_edge(ci, dj);
        }
        for &b in &parts.right {
            out.insert_edge(b, ci);
        }
    }
    for &dj in &d {
        for &a in &parts.left {
            out.insert_edge(a, dj);
        }
    }
    let mut left = parts.left.clone();
    left.extend(&c);
    let mut right = parts.right.clone();
    right.extend(&d);
    let added = c.into_iter().chain(d).collect();
    (out, Bipartition { left, right }, added)
}

/// `H(t)` for a template.
pub fn attach_ktt(h: &BipartiteTemplate, t: usize) -> BipartiteTemplate {
    let (graph, parts, _) = attach_ktt_graph(h.graph(), h.parts(), t);
    BipartiteTemplate { graph, parts }
}

/// `F(t)` for a rooted bipartite graph; the `2t` added vertices join the
/// root set. Returns the new rooted graph and its parts.
pub fn attach_ktt_rooted(f: &RootedGraph, parts: &Bipartition, t: usize) -> Result<(RootedGraph, Bipartition)> {
    let parts = Bipartition::new(f.graph().n(), parts.left.clone(), parts.right.clone())
        .map_err(|e| Error::NotBipartite(e.to_string()))?;
    parts.check_edges(f.graph())?;
    let (graph, new_parts, added) = attach_ktt_graph(f.graph(), &parts, t);
    let mut roots = f.roots().to_vec();
    roots.extend(added);
    Ok((RootedGraph::new(graph, roots)?, new_parts))
}

/// Multi-hypergraph on a ground set of pattern vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    /// Ground vertices (ids of the source pattern), sorted.
    pub ground: Vec<usize>,
    /// Hyperedges as sorted subsets of `ground`, multiplicity kept.
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(mut ground: Vec<usize>, edges: Vec<Vec<usize>>) -> Result<Self> {
        ground.sort_unstable();
        ground.dedup();
        let mut clean = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(v) = e.iter().find(|v| ground.binary_search(v).is_err()) {
                return Err(Error::InvalidParameter(format!(
                    "hyperedge vertex {v} outside the ground set"
                )));
            }
            clean.push(e);
        }
        Ok(Hypergraph { ground, edges: clean })
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// `F_A(H)`: ground `A`, one hyperedge `N_H(b)` per `b ∈ B` in the order of
/// `B`.
pub fn neighborhood_hypergraph(h: &BipartiteTemplate) -> Hypergraph {
    let edges = h.b().iter().map(|&b| h.graph().neighbors(b).collect()).collect();
    Hypergraph {
        ground: h.a().to_vec(),
        edges,
    }
}

/// `m`-blowup of a hypergraph. Ground vertex at position `i` becomes the part
/// `S_i = {i·m, ..., i·m + m - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupHypergraph {
    pub pattern: Hypergraph,
    pub m: usize,
    pub parts: Vec<Vec<usize>>,
}

impl BlowupHypergraph {
    fn part_index(&self, v: usize) -> usize {
        self.pattern
            .ground
            .binary_search(&v)
            .expect("hyperedges lie in the ground set")
    }

    /// Number of blowup edges, `Σ_e m^{|e|}`.
    pub fn edge_count(&self) -> usize {
        self.pattern.edges.iter().map(|e| self.m.pow(e.len() as u32)).sum()
    }

    /// Every blowup edge: each pattern edge expands to the complete
    /// `|e|`-partite hypergraph on its parts. Edges of one pattern edge are
    /// listed in lexicographic order.
    pub fn edges(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.edge_count());
        for e in &self.pattern.edges {
            let parts: Vec<&[usize]> = e.iter().map(|&v| self.parts[self.part_index(v)].as_slice()).collect();
            for_each_transversal(&parts, |pick| out.push(pick.to_vec()));
        }
        out
    }
}

pub fn blowup(pattern: &Hypergraph, m: usize) -> Result<BlowupHypergraph> {
    if m == 0 {
        return Err(Error::EmptyBlowup);
    }
    let parts = (0..pattern.ground.len())
        .map(|i| (i * m..(i + 1) * m).collect())
        .collect();
    Ok(BlowupHypergraph {
        pattern: pattern.clone(),
        m,
        parts,
    })
}

/// Calls `f` on every choice of one element from each slice, in
/// lexicographic order of positions. An empty list of parts yields one empty
/// choice.
pub(crate) fn for_each_transversal(parts: &[&[usize]], mut f: impl FnMut(&[usize])) {
    if parts.iter().any(|p| p.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; parts.len()];
    let mut pick: Vec<usize> = parts.iter().map(|p| p[0]).collect();
    loop {
        f(&pick);
        let mut k = parts.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < parts[k].len() {
                pick[k] = parts[k][idx[k]];
                break;
            }
            idx[k] = 0;
            pick[k] = parts[k][0];
        }
    }
}

/// Calls `f` on every `k`-subset of `0..n` as increasing indices, in
/// lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn height_two_tree_counts() {
        let t = height_two_tree(3, 1).unwrap();
        assert_eq!((t.graph().n(), t.graph().edge_count(), t.roots().len()), (7, 6, 3));
        let t = height_two_tree(2, 2).unwrap();
        assert_eq!((t.graph().n(), t.graph().edge_count(), t.roots().len()), (7, 6, 4));
        let t = height_two_tree(1, 1).unwrap();
        assert_eq!(t.graph(), &Graph::path(3));
        assert_eq!(t.roots(), &[2]);
    }

    #[test]
    fn height_two_tree_is_tree_rooted_at_leaves() {
        for r in 1..=4 {
            for t in 1..=3 {
                let f = height_two_tree(r, t).unwrap();
                let g = f.graph();
                assert!(g.is_connected());
                assert_eq!(g.edge_count() + 1, g.n());
                let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
                // r = 1 makes the centre a leaf too; it stays a non-root.
                let expected: Vec<usize> = if r == 1 {
                    leaves.into_iter().filter(|&v| v != 0).collect()
                } else {
                    leaves
                };
                assert_eq!(f.roots(), expected.as_slice());
            }
        }
    }

    #[test]
    fn tree_r11_counts() {
        let t = tree_r11(3).unwrap();
        assert_eq!((t.graph().n(), t.graph().edge_count(), t.roots().len()), (8, 7, 4));
        assert_eq!(t.roots(), &[4, 5, 6, 7]);
        let t = tree_r11(1).unwrap();
        let expected = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(t.graph(), &expected);
        let t = tree_r11(2).unwrap();
        assert_eq!((t.graph().n(), t.graph().edge_count(), t.roots().len()), (6, 5, 3));
    }

    #[test]
    fn rooted_path_shapes() {
        let p = rooted_path(2).unwrap();
        assert_eq!(p.graph(), &Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap());
        assert_eq!(p.roots(), &[0, 1]);
        let p = rooted_path(3).unwrap();
        assert_eq!(p.graph().edge_count(), 3);
        assert_eq!(p.non_roots(), vec![2, 3]);
        assert_eq!(rooted_path(1), Err(Error::DegenerateRoot));
    }

    #[test]
    fn power_sizes() {
        let c4 = rooted_power(&rooted_path(2).unwrap(), 2).unwrap();
        assert_eq!((c4.rooted.graph().n(), c4.rooted.graph().edge_count()), (4, 4));
        let k23 = rooted_power(&rooted_path(2).unwrap(), 3).unwrap();
        assert_eq!((k23.rooted.graph().n(), k23.rooted.graph().edge_count()), (5, 6));
        assert!([0, 1].iter().all(|&v| k23.rooted.graph().degree(v) == 3));

        // the root edge 0-1 is glued, not duplicated
        let rooted_edge = RootedGraph::new(Graph::path(3), vec![0, 1]).unwrap();
        let p = rooted_power(&rooted_edge, 3).unwrap();
        assert_eq!((p.rooted.graph().n(), p.rooted.graph().edge_count()), (5, 4));
    }

    #[test]
    fn power_copies_restrict_to_f() {
        let f = height_two_tree(2, 1).unwrap();
        let p = rooted_power(&f, 3).unwrap();
        for copy in &p.copies {
            for (u, v) in f.graph().edges() {
                assert!(p.rooted.graph().has_edge(copy.get(u), copy.get(v)));
            }
            for &r in f.roots() {
                assert_eq!(copy.get(r), r);
            }
        }
        assert_eq!(p.rooted.graph().edge_count(), 3 * f.graph().edge_count());
    }

    #[test]
    fn theta_sizes() {
        assert_eq!(
            theta(2, 2).unwrap(),
            Graph::from_edges(4, &[(0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
        );
        let c6 = theta(3, 2).unwrap();
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        assert!((0..6).all(|v| c6.degree(v) == 2) && c6.is_connected());
        let k23 = theta(2, 3).unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert_eq!(theta(1, 2), Err(Error::Multigraph));
        let t = theta(5, 4).unwrap();
        assert_eq!((t.n(), t.edge_count()), (2 + 4 * 4, 20));
    }

    fn p3_template() -> BipartiteTemplate {
        // a - b - c with A = {a, c}, B = {b}
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        BipartiteTemplate::new(g, Bipartition::new(3, vec![0, 2], vec![1]).unwrap()).unwrap()
    }

    #[test]
    fn attach_ktt_counts() {
        let h = attach_ktt(&p3_template(), 1);
        assert_eq!((h.h(), h.graph().edge_count()), (5, 6));
        h.parts().check_edges(h.graph()).unwrap();

        let edge = BipartiteTemplate::new(
            Graph::from_edges(2, &[(0, 1)]).unwrap(),
            Bipartition::new(2, vec![0], vec![1]).unwrap(),
        )
        .unwrap();
        let c4 = attach_ktt(&edge, 1);
        assert_eq!(c4.graph().edge_count(), 4);
        assert!((0..4).all(|v| c4.graph().degree(v) == 2));

        let base = p3_template();
        let h2 = attach_ktt(&base, 2);
        assert_eq!(h2.graph().edge_count(), base.graph().edge_count() + 4 + 2 * 3);
        assert_eq!(attach_ktt(&base, 0), base);
    }

    #[test]
    fn attach_ktt_rooted_updates_roots() {
        let f = height_two_tree(3, 1).unwrap();
        let parts = f.graph().bipartition().unwrap();
        let (f1, _) = attach_ktt_rooted(&f, &parts, 1).unwrap();
        assert_eq!(f1.roots().len(), 5);

        let p = rooted_path(2).unwrap();
        let (p1, new_parts) = attach_ktt_rooted(&p, &p.graph().bipartition().unwrap(), 1).unwrap();
        assert_eq!((p1.graph().n(), p1.roots().len()), (5, 4));
        new_parts.check_edges(p1.graph()).unwrap();

        let (same, _) = attach_ktt_rooted(&p, &p.graph().bipartition().unwrap(), 0).unwrap();
        assert_eq!(same, p);

        let wrong = Bipartition::new(3, vec![0, 2], vec![1]).unwrap();
        assert!(matches!(attach_ktt_rooted(&p, &wrong, 1), Err(Error::NotBipartite(_))));
    }

    #[test]
    fn neighborhood_hypergraph_examples() {
        let c4 = BipartiteTemplate::new(
            Graph::cycle(4).unwrap(),
            Bipartition::new(4, vec![0, 2], vec![1, 3]).unwrap(),
        )
        .unwrap();
        let fa = neighborhood_hypergraph(&c4);
        assert_eq!(fa.edges, vec![vec![0, 2], vec![0, 2]]);

        let star = BipartiteTemplate::new(
            Graph::complete_bipartite(1, 3),
            Bipartition::new(4, vec![1, 2, 3], vec![0]).unwrap(),
        )
        .unwrap();
        assert_eq!(neighborhood_hypergraph(&star).edges, vec![vec![1, 2, 3]]);

        // T_{2,1} with A = centre and grandchildren, B = children.
        let t = height_two_tree(2, 1).unwrap();
        let tmpl = BipartiteTemplate::new(
            t.graph().clone(),
            Bipartition::new(5, vec![0, 3, 4], vec![1, 2]).unwrap(),
        )
        .unwrap();
        let fa = neighborhood_hypergraph(&tmpl);
        assert_eq!(fa.edges, vec![vec![0, 3], vec![0, 4]]);
        assert!(fa.max_edge_size() <= 2);
    }

    #[test]
    fn blowup_counts() {
        let single = Hypergraph::new(vec![0, 1], vec![vec![0, 1]]).unwrap();
        let b = blowup(&single, 2).unwrap();
        assert_eq!(b.edge_count(), 4);
        assert_eq!(b.edges(), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);

        let tri = Hypergraph::new(vec![0, 1, 2, 3], vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let b = blowup(&tri, 3).unwrap();
        assert_eq!(b.edge_count(), 2 * 27);
        assert_eq!(b.edges().len(), 54);

        let b1 = blowup(&tri, 1).unwrap();
        assert_eq!(b1.edges(), tri.edges);

        assert_eq!(blowup(&tri, 0).unwrap_err(), Error::EmptyBlowup);
    }
}
