//! Simple undirected graphs on dense vertex indices.
//!
//! Adjacency is one bitset per vertex, so common neighbourhoods and induced
//! subgraphs cost a handful of word operations per vertex.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Simple undirected graph with vertices `0..n`.
///
/// Serialises as `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(doc: EdgeList) -> Result<Self> {
        Graph::from_edges(doc.n, &doc.edges)
    }
}

/// Minimum, maximum and exact average degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub average: Rational,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n);
        g.insert_edge(n - 1, 0);
        Ok(g)
    }

    /// `K_{s,t}` with the `s`-side on `0..s`.
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        let mut g = Graph::empty(s + t);
        for u in 0..s {
            for v in s..s + t {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Adds the edge `{u, v}`. Loops, out-of-range endpoints and repeated
    /// edges are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.insert_edge(u, v);
        Ok(())
    }

    /// Adds `{u, v}` if absent. Returns whether the edge is new.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u].put(v) {
            return false;
        }
        self.adj[v].insert(u);
        self.edge_count += 1;
        true
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
            self.edge_count -= 1;
        }
    }

    /// Appends `k` isolated vertices and returns the index of the first.
    pub fn add_vertices(&mut self, k: usize) -> usize {
        let first = self.n;
        self.n += k;
        for row in &mut self.adj {
            row.grow(self.n);
        }
        self.adj
            .extend(std::iter::repeat_n(FixedBitSet::with_capacity(self.n), k));
        first
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Bitset over `0..n` holding `vertices`, after range checking.
    pub fn vertex_set(&self, vertices: &[usize]) -> Result<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.n);
        for &v in vertices {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.n);
        set.insert_range(..);
        set
    }

    /// Common neighbourhood as a bitset. Members of `set` are never in it.
    pub fn common_neighbor_set(&self, set: &FixedBitSet) -> Result<FixedBitSet> {
        let mut members = set.ones();
        let first = members.next().ok_or(Error::EmptyQuery)?;
        let mut acc = self.adj[first].clone();
        for v in members {
            acc.intersect_with(&self.adj[v]);
        }
        Ok(acc)
    }

    /// `N*(S)`: vertices adjacent to every vertex of `s`, sorted.
    pub fn common_neighborhood(&self, s: &[usize]) -> Result<Vec<usize>> {
        let set = self.vertex_set(s)?;
        Ok(self.common_neighbor_set(&set)?.ones().collect())
    }

    /// `G[X, Y]` on `X ∪ Y`, keeping only the cross edges.
    ///
    /// New vertex `i` corresponds to `index[i]` of `self`; `X` (sorted) comes
    /// first, then `Y` (sorted).
    pub fn bipartite_between(&self, x: &[usize], y: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let xs = self.vertex_set(x)?;
        let ys = self.vertex_set(y)?;
        if !xs.is_disjoint(&ys) {
            let v = xs.intersection(&ys).next().unwrap_or_default();
            return Err(Error::InvalidPartition(format!("vertex {v} is on both sides")));
        }
        let index: Vec<usize> = xs.ones().chain(ys.ones()).collect();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in index.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::empty(index.len());
        for u in xs.ones() {
            for v in self.adj[u].intersection(&ys) {
                g.insert_edge(position[u], position[v]);
            }
        }
        Ok((g, index))
    }

    /// Subgraph induced on `s` (sorted, deduplicated) with its index map.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let set = self.vertex_set(s)?;
        Ok(self.induced_on(&set))
    }

    pub(crate) fn induced_on(&self, set: &FixedBitSet) -> (Graph, Vec<usize>) {
        let index: Vec<usize> = set.ones().collect();
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in index.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::empty(index.len());
        for (i, &u) in index.iter().enumerate() {
            for v in self.adj[u].intersection(set) {
                if v > u {
                    g.insert_edge(i, position[v]);
                }
            }
        }
        (g, index)
    }

    /// Number of edges with both ends in `set`.
    pub(crate) fn edges_within(&self, set: &FixedBitSet) -> usize {
        let twice: usize = set.ones().map(|v| self.adj[v].intersection_count(set)).sum();
        twice / 2
    }

    /// Whether `Δ(G) <= k · δ(G)`.
    pub fn is_k_almost_regular(&self, k: &Rational) -> bool {
        if self.n == 0 {
            return true;
        }
        let (min, max) = self.min_max_degree();
        rat(max as i64, 1) <= k * rat(min as i64, 1)
    }

    pub(crate) fn min_max_degree(&self) -> (usize, usize) {
        let mut min = usize::MAX;
        let mut max = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            min = min.min(d);
            max = max.max(d);
        }
        (if self.n == 0 { 0 } else { min }, max)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let (min, max) = self.min_max_degree();
        Ok(DegreeStats {
            min,
            max,
            average: rat(2 * self.edge_count as i64, self.n as i64),
        })
    }

    /// Proper 2-colouring, if one exists. In every component the smallest
    /// vertex is placed on the left.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap_or(false);
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (right, left): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| side[v] == Some(true));
        Some(Bipartition { left, right })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen.put(v) {
                    stack.push(v);
                }
            }
        }
        seen.count_ones(..) == self.n
    }

    /// Graphviz rendering. Roots are drawn as boxes; partition sides as
    /// clusters are left to the viewer, only the side is annotated.
    pub fn to_dot(&self, roots: &[usize], partition: Option<&Bipartition>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let mut attrs = Vec::new();
            if roots.contains(&v) {
                attrs.push("shape=box".to_string());
            }
            if let Some(p) = partition {
                let side = if p.left.contains(&v) { "X" } else { "Y" };
                attrs.push(format!("side=\"{side}\""));
            }
            if attrs.is_empty() {
                let _ = writeln!(out, "  {v};");
            } else {
                let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Ordered pair of disjoint vertex sets covering `0..n`, both sorted.
///
/// Plays the role of `(A, B)` for patterns and `(X, Y)` for hosts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    #[serde(rename = "X")]
    pub left: Vec<usize>,
    #[serde(rename = "Y")]
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn new(n: usize, mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        right.sort_unstable();
        let mut seen = vec![false; n];
        for &v in left.iter().chain(&right) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is on neither side")));
        }
        Ok(Bipartition { left, right })
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// Errors unless every edge of `g` crosses the partition.
    pub fn check_edges(&self, g: &Graph) -> Result<()> {
        let left = g.vertex_set(&self.left)?;
        for (u, v) in g.edges() {
            if left.contains(u) == left.contains(v) {
                return Err(Error::NotBipartite(format!("edge {{{u}, {v}}} stays inside one side")));
            }
        }
        Ok(())
    }
}

/// A host graph, optionally split into `(X, Y)`, with its `K_{s,s}`
/// parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Host {
    pub graph: Graph,
    pub partition: Option<Bipartition>,
    pub s: usize,
}

impl Host {
    pub fn new(graph: Graph, partition: Option<Bipartition>, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("s must be positive".into()));
        }
        if let Some(p) = &partition {
            Bipartition::new(graph.n(), p.left.clone(), p.right.clone())?;
        }
        Ok(Host { graph, partition, s })
    }

    pub fn partition(&self) -> Result<&Bipartition> {
        self.partition.as_ref().ok_or(Error::NoPartition)
    }
}

/// Injective map from pattern vertices (the index) to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexMap(Vec<usize>);

impl TryFrom<Vec<usize>> for VertexMap {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        VertexMap::new(images)
    }
}

impl From<VertexMap> for Vec<usize> {
    fn from(map: VertexMap) -> Self {
        map.0
    }
}

impl VertexMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut sorted = images.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "vertex map is not injective: {} used twice",
                w[0]
            )));
        }
        Ok(VertexMap(images))
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        VertexMap(images)
    }

    #[inline]
    pub fn get(&self, pattern_vertex: usize) -> usize {
        self.0[pattern_vertex]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star3() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn common_neighborhood_examples() {
        assert_eq!(star3().common_neighborhood(&[1, 2]).unwrap(), vec![0]);
        assert_eq!(c4().common_neighborhood(&[0, 2]).unwrap(), vec![1, 3]);
        assert!(c4().common_neighborhood(&[0, 1]).unwrap().is_empty());
        assert_eq!(c4().common_neighborhood(&[]), Err(Error::EmptyQuery));
    }

    #[test]
    fn bipartite_between_examples() {
        let k4 = Graph::complete(4);
        let (g, idx) = k4.bipartite_between(&[0, 1], &[2, 3]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(idx, vec![0, 1, 2, 3]);

        let (g, _) = c4().bipartite_between(&[0, 2], &[1, 3]).unwrap();
        assert_eq!(g.edge_count(), 4);

        let (g, idx) = k4.bipartite_between(&[1, 3], &[]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(idx, vec![1, 3]);

        assert!(matches!(
            k4.bipartite_between(&[0, 1], &[1, 2]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn almost_regular_examples() {
        assert!(c4().is_k_almost_regular(&rat(1, 1)));
        assert!(!star3().is_k_almost_regular(&rat(2, 1)));
        assert!(star3().is_k_almost_regular(&rat(3, 1)));
        // isolated vertex forces Δ = 0
        let mut g = star3();
        g.add_vertices(1);
        assert!(!g.is_k_almost_regular(&rat(100, 1)));
        assert!(Graph::empty(3).is_k_almost_regular(&rat(1, 1)));
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p, idx) = c4().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p, Graph::path(3));
        assert_eq!(idx, vec![0, 1, 2]);
        let (same, _) = c4().induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(same, c4());
        let (empty, _) = c4().induced_subgraph(&[]).unwrap();
        assert_eq!(empty.n(), 0);
    }

    #[test]
    fn degree_stats_examples() {
        let s = c4().degree_stats().unwrap();
        assert_eq!((s.min, s.max, s.average), (2, 2, rat(2, 1)));
        let s = star3().degree_stats().unwrap();
        assert_eq!((s.min, s.max, s.average), (1, 3, rat(3, 2)));
        let s = Graph::complete(4).degree_stats().unwrap();
        assert_eq!((s.min, s.max, s.average), (3, 3, rat(3, 1)));
        assert_eq!(Graph::empty(0).degree_stats(), Err(Error::EmptyGraph));
    }

    #[test]
    fn bipartition_of_trees_and_odd_cycles() {
        let p = Graph::path(4).bipartition().unwrap();
        assert_eq!(p.left, vec![0, 2]);
        assert_eq!(p.right, vec![1, 3]);
        assert!(Graph::cycle(5).unwrap().bipartition().is_none());
    }

    #[test]
    fn partition_validation() {
        assert!(Bipartition::new(3, vec![0], vec![1]).is_err());
        assert!(Bipartition::new(3, vec![0, 1], vec![1, 2]).is_err());
        assert!(Bipartition::new(3, vec![0], vec![1, 2]).is_ok());
        assert!(VertexMap::new(vec![1, 1]).is_err());
    }

    #[test]
    fn add_vertices_keeps_edges() {
        let mut g = c4();
        let first = g.add_vertices(2);
        assert_eq!(first, 4);
        assert_eq!(g.n(), 6);
        assert!(g.has_edge(3, 0));
        g.add_edge(5, 0).unwrap();
        assert_eq!(g.degree(0), 3);
    }
}
