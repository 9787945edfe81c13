//! Exact `ex*(n, H, s)`, `ex*_bip(n, H, s)` and `ex(n, H)` for small `n`.
//!
//! All three forbidden properties are closed under deleting vertices, so
//! every feasible graph on `k + 1` vertices is a feasible graph on `k`
//! vertices plus one new vertex. The search therefore grows feasible graphs
//! one vertex at a time, trying every neighbourhood (and side, for the
//! bipartite variant) for the new vertex, checks only the structures that
//! use it, and keeps one representative per isomorphism class.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::bip::bip_induced_through;
use super::canon::{canonical_form, relabel, CanonicalForm, CANON_MAX_N};
use super::kss::kss_through_vertex;
use super::search::Search;
use crate::error::{Error, Result};
use crate::families::BipartiteTemplate;
use crate::graph::{Bipartition, Graph};

/// Default vertex budget for [`extremal_star`] and [`extremal_plain`].
pub const STAR_BUDGET: usize = 8;
/// Default vertex budget for [`extremal_bip_star`].
pub const BIP_BUDGET: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub value: usize,
    pub witness: Graph,
    /// `(X, Y)` of the witness, for the bipartite variant.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Bipartition>,
    /// Number of one-vertex extensions examined.
    pub explored: u64,
}

/// Whether pattern `h` has a copy through vertex `w` of `g`.
fn pattern_through(g: &Graph, h: &Graph, w: usize, induced: bool) -> bool {
    let all = g.full_set();
    let mut pin = FixedBitSet::with_capacity(g.n());
    pin.insert(w);
    (0..h.n()).any(|u| {
        let mut domains = vec![all.clone(); h.n()];
        domains[u] = pin.clone();
        let search = if induced {
            Search::induced(g, h)
        } else {
            Search::subgraph(g, h)
        };
        search.with_domains(domains).first().is_some()
    })
}

/// A graph with a 0/1 colouring (`1` = side `X`).
#[derive(Clone)]
struct Coloured {
    g: Graph,
    colours: Vec<u32>,
}

impl Coloured {
    /// Canonical form, up to exchanging the colours when `symmetric`.
    fn key(&self, symmetric: bool) -> (CanonicalForm, Vec<usize>) {
        let plain = canonical_form(&self.g, &self.colours);
        if !symmetric {
            return plain;
        }
        let flipped: Vec<u32> = self.colours.iter().map(|&c| 1 - c).collect();
        let swapped = canonical_form(&self.g, &flipped);
        if swapped.0 < plain.0 {
            swapped
        } else {
            plain
        }
    }
}

struct Spec<'a> {
    n: usize,
    colours: u32,
    feasible: &'a (dyn Fn(&Graph, &[u32], usize) -> bool + Sync),
    score: &'a (dyn Fn(&Graph, &[u32]) -> usize + Sync),
}

/// `(score, edges, colours)`; the best candidate has the highest score and
/// then the lexicographically least edge list and colouring.
type Best = (usize, Vec<(usize, usize)>, Vec<u32>);

fn better(a: &Best, b: &Best) -> bool {
    a.0 > b.0 || (a.0 == b.0 && (&a.1, &a.2) < (&b.1, &b.2))
}

fn extensions(base: &Coloured, spec: &Spec<'_>) -> (Vec<Coloured>, u64) {
    let k = base.g.n();
    let mut out = Vec::new();
    let mut explored = 0;
    for colour in 0..spec.colours {
        for mask in 0u64..(1 << k) {
            explored += 1;
            let mut g = base.g.clone();
            let v = g.add_vertices(1);
            for u in 0..k {
                if mask >> u & 1 == 1 {
                    g.insert_edge(u, v);
                }
            }
            let mut colours = base.colours.clone();
            colours.push(colour);
            if (spec.feasible)(&g, &colours, v) {
                out.push(Coloured { g, colours });
            }
        }
    }
    (out, explored)
}

fn run(spec: &Spec<'_>) -> Result<(Best, u64)> {
    let mut level = vec![Coloured {
        g: Graph::empty(0),
        colours: Vec::new(),
    }];
    let mut explored = 0u64;
    if spec.n == 0 {
        return Ok(((0, Vec::new(), Vec::new()), 0));
    }
    for k in 1..=spec.n {
        let batches: Vec<(Vec<Coloured>, u64)> = level.par_iter().map(|c| extensions(c, spec)).collect();
        explored += batches.iter().map(|b| b.1).sum::<u64>();
        if k == spec.n {
            let best = batches
                .into_par_iter()
                .flat_map_iter(|(cands, _)| cands)
                .map(|c| ((spec.score)(&c.g, &c.colours), c.g.edges(), c.colours))
                .reduce_with(|a, b| if better(&b, &a) { b } else { a });
            return best
                .map(|b| (b, explored))
                .ok_or_else(|| Error::Infeasible(format!("no graph on {k} vertices avoids the pattern")));
        }
        let symmetric = spec.colours == 2;
        let keyed: Vec<(CanonicalForm, Coloured)> = batches
            .into_par_iter()
            .flat_map_iter(|(cands, _)| cands)
            .map(|c| {
                let (form, pos) = c.key(symmetric);
                let g = relabel(&c.g, &pos);
                let colours = form.colours.clone();
                (form, Coloured { g, colours })
            })
            .collect();
        let mut seen = HashSet::new();
        level = keyed
            .into_iter()
            .filter_map(|(form, c)| seen.insert(form).then_some(c))
            .collect();
        if level.is_empty() {
            return Err(Error::Infeasible(format!(
                "no graph on {k} vertices avoids the pattern"
            )));
        }
    }
    unreachable!("the final level returns")
}

fn check_budget(n: usize, budget: usize) -> Result<()> {
    if n > budget.min(CANON_MAX_N) {
        return Err(Error::TooLarge(format!(
            "n = {n} exceeds the search budget of {budget}"
        )));
    }
    Ok(())
}

fn check_pattern(h: &Graph, s: Option<usize>) -> Result<()> {
    if h.n() == 0 {
        return Err(Error::InvalidParameter("pattern has no vertices".into()));
    }
    if s == Some(0) {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    Ok(())
}

/// `ex*(n, h, s)` with the default budget.
pub fn extremal_star(n: usize, h: &Graph, s: usize) -> Result<ExtremalResult> {
    extremal_star_with_budget(n, h, s, STAR_BUDGET)
}

/// Maximum edges of an `n`-vertex graph with no `K_{s,s}` subgraph and no
/// induced copy of `h`.
pub fn extremal_star_with_budget(n: usize, h: &Graph, s: usize, budget: usize) -> Result<ExtremalResult> {
    check_budget(n, budget)?;
    check_pattern(h, Some(s))?;
    let feasible = |g: &Graph, _: &[u32], v: usize| !kss_through_vertex(g, v, s) && !pattern_through(g, h, v, true);
    let score = |g: &Graph, _: &[u32]| g.edge_count();
    let ((value, edges, _), explored) = run(&Spec {
        n,
        colours: 1,
        feasible: &feasible,
        score: &score,
    })?;
    Ok(ExtremalResult {
        value,
        witness: Graph::from_edges(n, &edges)?,
        partition: None,
        explored,
    })
}

/// `ex(n, h)` with the default budget.
pub fn extremal_plain(n: usize, h: &Graph) -> Result<ExtremalResult> {
    extremal_plain_with_budget(n, h, STAR_BUDGET)
}

/// Maximum edges of an `n`-vertex graph with no (not necessarily induced)
/// copy of `h`.
pub fn extremal_plain_with_budget(n: usize, h: &Graph, budget: usize) -> Result<ExtremalResult> {
    check_budget(n, budget)?;
    check_pattern(h, None)?;
    let feasible = |g: &Graph, _: &[u32], v: usize| !pattern_through(g, h, v, false);
    let score = |g: &Graph, _: &[u32]| g.edge_count();
    let ((value, edges, _), explored) = run(&Spec {
        n,
        colours: 1,
        feasible: &feasible,
        score: &score,
    })?;
    Ok(ExtremalResult {
        value,
        witness: Graph::from_edges(n, &edges)?,
        partition: None,
        explored,
    })
}

/// `ex*_bip(n, h, s)` with the default budget.
pub fn extremal_bip_star(n: usize, h: &BipartiteTemplate, s: usize) -> Result<ExtremalResult> {
    extremal_bip_star_with_budget(n, h, s, BIP_BUDGET)
}

/// Maximum of `e(G[X, Y])` over `K_{s,s}`-free `n`-vertex `G` and
/// partitions `(X, Y)` such that `G[X, Y]` holds no copy of `h` (either
/// orientation) that is induced in `G`.
pub fn extremal_bip_star_with_budget(
    n: usize,
    h: &BipartiteTemplate,
    s: usize,
    budget: usize,
) -> Result<ExtremalResult> {
    check_budget(n, budget)?;
    check_pattern(h.graph(), Some(s))?;
    let in_x = |colours: &[u32]| {
        let mut x = FixedBitSet::with_capacity(colours.len());
        for (v, &c) in colours.iter().enumerate() {
            x.set(v, c == 1);
        }
        x
    };
    let feasible = |g: &Graph, colours: &[u32], v: usize| {
        !kss_through_vertex(g, v, s) && !bip_induced_through(g, &in_x(colours), h, v)
    };
    let score = |g: &Graph, colours: &[u32]| g.edges().iter().filter(|&&(u, v)| colours[u] != colours[v]).count();
    let ((value, edges, colours), explored) = run(&Spec {
        n,
        colours: 2,
        feasible: &feasible,
        score: &score,
    })?;
    let left = (0..n).filter(|&v| colours[v] == 1).collect();
    let right = (0..n).filter(|&v| colours[v] == 0).collect();
    Ok(ExtremalResult {
        value,
        witness: Graph::from_edges(n, &edges)?,
        partition: Some(Bipartition::new(n, left, right)?),
        explored,
    })
}
