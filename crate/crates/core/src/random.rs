//! Seeded random graphs, including greedy `K_{s,s}`-free ones.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::{Bipartition, Graph, Host};
use crate::oracles::kss_through_vertex;

/// `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Visits `pairs` in random order and keeps each with probability `p`
/// unless it would complete a `K_{s,s}`.
fn greedy_kss_free<R: Rng>(g: &mut Graph, mut pairs: Vec<(usize, usize)>, p: f64, s: usize, rng: &mut R) {
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if !rng.gen_bool(p) {
            continue;
        }
        g.insert_edge(u, v);
        // a new copy would have to use the edge uv, hence the vertex u
        if kss_through_vertex(g, u, s) {
            g.remove_edge(u, v);
        }
    }
}

/// Random `K_{s,s}`-free graph on `n` vertices. With `p = 1` the result is
/// a maximal `K_{s,s}`-free graph.
pub fn random_kss_free<R: Rng>(n: usize, p: f64, s: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    greedy_kss_free(&mut g, pairs, p, s, rng);
    g
}

/// Random bipartite graph with `X = 0..nx`, `Y = nx..nx+ny` and edge
/// probability `p`.
pub fn random_bipartite<R: Rng>(nx: usize, ny: usize, p: f64, s: usize, rng: &mut R) -> Result<Host> {
    let mut g = Graph::empty(nx + ny);
    for x in 0..nx {
        for y in nx..nx + ny {
            if rng.gen_bool(p) {
                g.insert_edge(x, y);
            }
        }
    }
    Host::new(g, Some(sides(nx, ny)?), s)
}

/// Random `K_{s,s}`-free bipartite host with `X = 0..nx`, `Y = nx..nx+ny`.
pub fn random_bipartite_kss_free<R: Rng>(nx: usize, ny: usize, p: f64, s: usize, rng: &mut R) -> Result<Host> {
    let mut g = Graph::empty(nx + ny);
    let pairs = (0..nx).flat_map(|x| (nx..nx + ny).map(move |y| (x, y))).collect();
    greedy_kss_free(&mut g, pairs, p, s, rng);
    Host::new(g, Some(sides(nx, ny)?), s)
}

fn sides(nx: usize, ny: usize) -> Result<Bipartition> {
    Bipartition::new(nx + ny, (0..nx).collect(), (nx..nx + ny).collect())
}
