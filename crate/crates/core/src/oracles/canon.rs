//! Canonical labelling of small vertex-coloured graphs by colour refinement
//! and individualisation.

use crate::graph::Graph;

/// Largest vertex count whose adjacency code fits in a `u64`.
pub const CANON_MAX_N: usize = 11;

/// Canonical form of a coloured graph: equal for two inputs iff they are
/// isomorphic by a colour-preserving bijection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Vertex colours listed in canonical order.
    pub colours: Vec<u32>,
    /// Upper-triangle adjacency bits in canonical order, pairs `(i, j)`
    /// with `i < j` taken row by row.
    pub code: u64,
}

/// Canonical form together with the labelling `position[v]` realising it.
pub fn canonical_form(g: &Graph, colours: &[u32]) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    assert!(
        n <= CANON_MAX_N,
        "canonical forms support at most {CANON_MAX_N} vertices"
    );
    assert_eq!(colours.len(), n);
    let start = refine(g, &rank(colours.iter().map(|&c| vec![c as usize]).collect()));
    let mut best: Option<(u64, Vec<usize>)> = None;
    search(g, start, &mut best);
    let (code, position) = best.unwrap_or((0, Vec::new()));
    let mut ordered = vec![0u32; n];
    for v in 0..n {
        ordered[position[v]] = colours[v];
    }
    (CanonicalForm { colours: ordered, code }, position)
}

/// Relabels `g` so that vertex `v` becomes `position[v]`.
pub fn relabel(g: &Graph, position: &[usize]) -> Graph {
    let mut out = Graph::empty(g.n());
    for (u, v) in g.edges() {
        out.insert_edge(position[u], position[v]);
    }
    out
}

/// Dense ranks of arbitrary sortable signatures.
fn rank(signatures: Vec<Vec<usize>>) -> Vec<usize> {
    let mut sorted = signatures.clone();
    sorted.sort();
    sorted.dedup();
    signatures
        .iter()
        .map(|s| sorted.binary_search(s).expect("present"))
        .collect()
}

fn class_count(colour: &[usize]) -> usize {
    colour.iter().copied().max().map_or(0, |m| m + 1)
}

/// Equitable refinement: split classes by the multiset of neighbour
/// colours until nothing changes.
fn refine(g: &Graph, colour: &[usize]) -> Vec<usize> {
    let mut colour = colour.to_vec();
    loop {
        let k = class_count(&colour);
        let signatures: Vec<Vec<usize>> = (0..g.n())
            .map(|v| {
                let mut sig = vec![0usize; k + 1];
                sig[0] = colour[v];
                for w in g.neighbors(v) {
                    sig[1 + colour[w]] += 1;
                }
                sig
            })
            .collect();
        let next = rank(signatures);
        if class_count(&next) == k {
            return colour;
        }
        colour = next;
    }
}

fn search(g: &Graph, colour: Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
    let n = g.n();
    let k = class_count(&colour);
    if k == n {
        let code = adjacency_code(g, &colour);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colour));
        }
        return;
    }
    // first smallest non-singleton class
    let mut size = vec![0usize; k];
    for &c in &colour {
        size[c] += 1;
    }
    let target = (0..k)
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c))
        .expect("a non-singleton class");
    let cell: Vec<usize> = (0..n).filter(|&v| colour[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // swapping twins is an automorphism fixing the colouring
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let split: Vec<usize> = (0..n)
            .map(|w| 2 * colour[w] + usize::from(colour[w] == target && w != v))
            .collect();
        let split = rank(split.into_iter().map(|c| vec![c]).collect());
        search(g, refine(g, &split), best);
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbor_set(u).clone();
    let mut b = g.neighbor_set(v).clone();
    a.set(v, false);
    b.set(u, false);
    a == b
}

fn adjacency_code(g: &Graph, position: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (i, j) = if position[u] < position[v] {
            (position[u], position[v])
        } else {
            (position[v], position[u])
        };
        // pair index in row-major upper-triangle order
        let idx = i * (2 * n - i - 1) / 2 + (j - i - 1);
        code |= 1 << idx;
    }
    code
}
