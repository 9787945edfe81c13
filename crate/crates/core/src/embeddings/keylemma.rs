//! Induced copies of a bipartite template from a blowup of rich sets.
//!
//! Given parts `S_a ⊆ X` (one per vertex of `A`) whose transversals over
//! every neighbourhood `N_H(b)` have at least `C(H, s)` common
//! `L`-neighbours, `A` is mapped to one vertex per part and each `b` is then
//! placed in a private candidate set chosen through Hall's theorem.

use fixedbitset::FixedBitSet;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hall::hall_disjoint_sets;
use super::sets::bad_set_of;
use super::thresholds::Thresholds;
use super::trees::Subgraph;
use super::{EmbeddingOutcome, TraceEvent};
use crate::error::{Error, Result};
use crate::families::{for_each_transversal, neighborhood_hypergraph, BipartiteTemplate};
use crate::graph::{Host, VertexMap};
use crate::oracles::verify_bip_induced_map;
use crate::rational::{rat, Rational};

/// Largest number of `φ` choices tried by the exhaustive pass.
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Checks that `parts` (indexed like `h.a()`) are nonempty, pairwise
/// disjoint subsets of `X` and that every transversal of every neighbourhood
/// `N_H(b)` has at least `threshold` common `L`-neighbours in `Y`. An empty
/// neighbourhood counts `Y` itself.
pub fn check_blowup(
    host: &Host,
    l: &Subgraph,
    h: &BipartiteTemplate,
    parts: &[Vec<usize>],
    threshold: usize,
) -> Result<()> {
    let side = host.partition()?;
    let g = &host.graph;
    let x = g.vertex_set(&side.left)?;
    let y = g.vertex_set(&side.right)?;
    if parts.len() != h.a().len() {
        return Err(Error::BadBlowup(format!(
            "{} parts for {} vertices of A",
            parts.len(),
            h.a().len()
        )));
    }
    let mut used = FixedBitSet::with_capacity(g.n());
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::BadBlowup(format!("part {i} is empty")));
        }
        for &v in part {
            g.check_vertex(v)?;
            if !x.contains(v) {
                return Err(Error::BadBlowup(format!("vertex {v} of part {i} is not in X")));
            }
            if used.put(v) {
                return Err(Error::BadBlowup(format!("vertex {v} is in two parts")));
            }
        }
    }
    let position = a_positions(h);
    let lg = l.graph();
    for e in neighborhood_hypergraph(h).edges {
        let slices: Vec<&[usize]> = e.iter().map(|&a| parts[position[a]].as_slice()).collect();
        let mut missing = None;
        for_each_transversal(&slices, |pick| {
            if missing.is_some() {
                return;
            }
            let mut common = y.clone();
            for &v in pick {
                common.intersect_with(lg.neighbor_set(v));
            }
            if common.count_ones(..) < threshold {
                missing = Some(pick.to_vec());
            }
        });
        if let Some(pick) = missing {
            return Err(Error::BadBlowup(format!(
                "{pick:?} has fewer than {threshold} common neighbours in L"
            )));
        }
    }
    Ok(())
}

/// `position[a]` is the index of `a` in `h.a()`.
fn a_positions(h: &BipartiteTemplate) -> Vec<usize> {
    let mut position = vec![usize::MAX; h.h()];
    for (i, &a) in h.a().iter().enumerate() {
        position[a] = i;
    }
    position
}

struct Run<'a> {
    host: &'a Host,
    l: &'a Subgraph,
    h: &'a BipartiteTemplate,
    y: FixedBitSet,
    /// `N_H(b)` for each `b` in the order of `h.b()`.
    edges: Vec<Vec<usize>>,
    position: Vec<usize>,
    c: Rational,
    hall_t: usize,
}

enum Step {
    Failed,
    Found(VertexMap),
}

impl Run<'_> {
    /// Common `L`-neighbourhood in `Y` of `φ(e)`.
    fn common(&self, phi: &[usize], e: &[usize]) -> FixedBitSet {
        let mut w = self.y.clone();
        for &a in e {
            w.intersect_with(self.l.graph().neighbor_set(phi[self.position[a]]));
        }
        w
    }

    fn independent(&self, phi: &[usize], trace: &mut Vec<TraceEvent>) -> bool {
        let g = &self.host.graph;
        let a = self.h.a();
        for i in 0..phi.len() {
            for j in i + 1..phi.len() {
                if g.has_edge(phi[i], phi[j]) {
                    trace.push(TraceEvent::NotIndependent { u: a[i], v: a[j] });
                    return false;
                }
            }
        }
        true
    }

    /// First violation of condition 2, as `(b, a)`.
    fn bad_set_violation(&self, phi: &[usize]) -> Option<(usize, usize)> {
        for (k, e) in self.edges.iter().enumerate() {
            let w = self.common(phi, e);
            if w.is_clear() {
                continue;
            }
            let bad = bad_set_of(&self.host.graph, &w, &self.c);
            for &a in self.h.a() {
                if !e.contains(&a) && bad.binary_search(&phi[self.position[a]]).is_ok() {
                    return Some((self.h.b()[k], a));
                }
            }
        }
        None
    }

    /// Steps after fixing `φ` on `A`: the sets `Γ(e)`, Hall's step and the
    /// placement of `B`.
    fn complete(&self, phi: &[usize], trace: &mut Vec<TraceEvent>) -> Step {
        let g = &self.host.graph;
        let gammas: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| {
                let mut gamma = self.common(phi, e);
                for &a in self.h.a() {
                    if !e.contains(&a) {
                        gamma.difference_with(g.neighbor_set(phi[self.position[a]]));
                    }
                }
                gamma.ones().collect()
            })
            .collect();
        let Some(sets) = hall_disjoint_sets(&gammas, self.hall_t) else {
            trace.push(TraceEvent::HallFailed {
                gamma: gammas.iter().map(Vec::len).collect(),
            });
            return Step::Failed;
        };
        trace.push(TraceEvent::HallSets { sets: sets.clone() });

        let mut remaining: Vec<FixedBitSet> = sets
            .iter()
            .map(|u| {
                let mut set = FixedBitSet::with_capacity(g.n());
                set.extend(u.iter().copied());
                set
            })
            .collect();
        let mut image = vec![usize::MAX; self.h.h()];
        for (&a, &v) in self.h.a().iter().zip(phi) {
            image[a] = v;
        }
        for (i, &b) in self.h.b().iter().enumerate() {
            if remaining[i].is_clear() {
                trace.push(TraceEvent::PlacementFailed { b });
                return Step::Failed;
            }
            let mut avoid = FixedBitSet::with_capacity(g.n());
            for later in &remaining[i + 1..] {
                if !later.is_clear() {
                    avoid.extend(bad_set_of(g, later, &self.c));
                }
            }
            let mut choice = remaining[i].difference(&avoid).next();
            if choice.is_none() {
                trace.push(TraceEvent::BadSetUnavoidable { b });
                choice = remaining[i].ones().next();
            }
            let v = choice.expect("nonempty candidate set");
            image[b] = v;
            for later in &mut remaining[i + 1..] {
                later.difference_with(g.neighbor_set(v));
                later.set(v, false);
            }
        }
        let map = VertexMap::from_vec_unchecked(image);
        let in_l = self
            .h
            .graph()
            .edges()
            .iter()
            .all(|&(u, v)| self.l.graph().has_edge(map.get(u), map.get(v)));
        match verify_bip_induced_map(self.host, self.h, &map) {
            Ok(true) if in_l => Step::Found(map),
            _ => Step::Failed,
        }
    }
}

/// Runs the key-lemma procedure on the blowup `parts`.
///
/// Up to `th.retries` uniformly random choices of `φ` (from a ChaCha8
/// stream seeded with `seed`) must pass the independence and bad-set
/// conditions before the remaining steps run. After that every choice of
/// `φ` is tried in lexicographic order, requiring independence only; the
/// bad-set condition is recorded in the trace but not enforced, since at
/// small scale it is far stronger than needed. Bad sets use
/// `c = 1/(2h)` and Hall's step uses `th.hall_t`.
pub fn key_lemma_embed(
    host: &Host,
    l: &Subgraph,
    h: &BipartiteTemplate,
    parts: &[Vec<usize>],
    th: &Thresholds,
    seed: u64,
) -> Result<EmbeddingOutcome> {
    th.validate()?;
    check_blowup(host, l, h, parts, th.c_hs)?;
    let side = host.partition()?;
    let run = Run {
        host,
        l,
        h,
        y: host.graph.vertex_set(&side.right)?,
        edges: h.b().iter().map(|&b| h.graph().neighbors(b).collect()).collect(),
        position: a_positions(h),
        c: rat(1, 2 * h.h() as i64),
        hall_t: th.hall_t,
    };
    debug_assert!(run.c < Rational::one());

    let mut trace = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..th.retries {
        let phi: Vec<usize> = parts.iter().map(|p| p[rng.gen_range(0..p.len())]).collect();
        trace.push(TraceEvent::Attempt {
            attempt,
            phi: phi.clone(),
        });
        if !run.independent(&phi, &mut trace) {
            continue;
        }
        if let Some((b, a)) = run.bad_set_violation(&phi) {
            trace.push(TraceEvent::BadSetHit { b, a });
            continue;
        }
        if let Step::Found(map) = run.complete(&phi, &mut trace) {
            trace.push(TraceEvent::Found { attempt });
            return Ok(EmbeddingOutcome {
                found: true,
                map: Some(map),
                trace,
            });
        }
    }

    let choices = parts
        .iter()
        .try_fold(1u64, |acc, p| acc.checked_mul(p.len() as u64))
        .unwrap_or(u64::MAX);
    if choices > EXHAUSTIVE_LIMIT {
        trace.push(TraceEvent::ExhaustiveSkipped { choices });
        return Ok(EmbeddingOutcome::not_found(trace));
    }
    trace.push(TraceEvent::Exhaustive { choices });
    let slices: Vec<&[usize]> = parts.iter().map(Vec::as_slice).collect();
    let mut found = None;
    let mut attempt = th.retries;
    for_each_transversal(&slices, |phi| {
        if found.is_some() {
            return;
        }
        let mut local = Vec::new();
        local.push(TraceEvent::Attempt {
            attempt,
            phi: phi.to_vec(),
        });
        attempt += 1;
        if !run.independent(phi, &mut local) {
            // failed independence checks are not logged one by one
            return;
        }
        if let Some((b, a)) = run.bad_set_violation(phi) {
            local.push(TraceEvent::BadSetHit { b, a });
        }
        if let Step::Found(map) = run.complete(phi, &mut local) {
            local.push(TraceEvent::Found { attempt: attempt - 1 });
            found = Some(map);
            trace.extend(local);
        }
    });
    Ok(match found {
        Some(map) => EmbeddingOutcome {
            found: true,
            map: Some(map),
            trace,
        },
        None => EmbeddingOutcome::not_found(trace),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embeddings::fixtures::planted_key_lemma;
    use crate::graph::{Bipartition, Graph};

    fn c6() -> BipartiteTemplate {
        BipartiteTemplate::from_bipartite(Graph::cycle(6).unwrap()).unwrap()
    }

    #[test]
    fn planted_c6() {
        let h = c6();
        let fx = planted_key_lemma(&h, 2, 2, 3).unwrap();
        let th = Thresholds {
            c_hs: 2,
            ..Thresholds::default()
        };
        let out = key_lemma_embed(&fx.host, &fx.l, &h, &fx.parts, &th, 7).unwrap();
        assert!(out.found);
        let map = out.map.unwrap();
        assert!(verify_bip_induced_map(&fx.host, &h, &map).unwrap());
    }

    #[test]
    fn deterministic_for_seed() {
        let h = c6();
        let fx = planted_key_lemma(&h, 3, 2, 0).unwrap();
        let th = Thresholds::default();
        let a = key_lemma_embed(&fx.host, &fx.l, &h, &fx.parts, &th, 11).unwrap();
        let b = key_lemma_embed(&fx.host, &fx.l, &h, &fx.parts, &th, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn missing_blowup_edge() {
        let h = c6();
        let mut fx = planted_key_lemma(&h, 1, 1, 0).unwrap();
        // cut one private vertex loose so its transversal loses its only
        // common neighbour
        let (x, y) = fx.l.graph().edges()[0];
        let mut lg = fx.l.graph().clone();
        lg.remove_edge(x, y);
        fx.l = Subgraph::new(&fx.host.graph, lg).unwrap();
        let err = key_lemma_embed(&fx.host, &fx.l, &h, &fx.parts, &Thresholds::default(), 0).unwrap_err();
        assert!(matches!(err, Error::BadBlowup(_)));
    }

    #[test]
    fn single_edge() {
        // H = K_2 with A = {0}; m = 1
        let h = BipartiteTemplate::new(Graph::complete(2), Bipartition::new(2, vec![0], vec![1]).unwrap()).unwrap();
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let host = Host::new(g.clone(), Some(Bipartition::new(3, vec![0], vec![1, 2]).unwrap()), 2).unwrap();
        let l = Subgraph::new(&g, g.clone()).unwrap();
        let th = Thresholds {
            c_hs: 2,
            ..Thresholds::default()
        };
        let out = key_lemma_embed(&host, &l, &h, &[vec![0]], &th, 0).unwrap();
        assert_eq!(out.map.unwrap().as_slice(), &[0, 1]);
    }

    #[test]
    fn parts_must_be_in_x() {
        let h = c6();
        let fx = planted_key_lemma(&h, 1, 1, 0).unwrap();
        let mut parts = fx.parts.clone();
        parts[0] = vec![fx.host.partition().unwrap().right[0]];
        assert!(matches!(
            check_blowup(&fx.host, &fx.l, &h, &parts, 1),
            Err(Error::BadBlowup(_))
        ));
    }
}
