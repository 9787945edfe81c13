//! Library oracles against naive enumeration.

use proptest::prelude::*;
use turan_core::families::BipartiteTemplate;
use turan_core::oracles::{
    contains_kss, contains_subgraph, extremal_bip_star, extremal_plain, extremal_star, induced_copies, isomorphic,
};
use turan_core::{Graph, VertexMap};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u32..1 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        graph_from_bits(n, &bits)
    })
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Every injective map `h -> g`, in lexicographic order of images.
fn injective_maps(g: usize, h: usize, mut f: impl FnMut(&[usize])) {
    fn grow(g: usize, h: usize, image: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if image.len() == h {
            f(image);
            return;
        }
        for v in 0..g {
            if !image.contains(&v) {
                image.push(v);
                grow(g, h, image, f);
                image.pop();
            }
        }
    }
    grow(g, h, &mut Vec::new(), &mut f);
}

fn naive_induced(g: &Graph, h: &Graph) -> Vec<VertexMap> {
    let mut out = Vec::new();
    injective_maps(g.n(), h.n(), |m| {
        let ok = (0..h.n()).all(|u| (u + 1..h.n()).all(|v| h.has_edge(u, v) == g.has_edge(m[u], m[v])));
        if ok {
            out.push(VertexMap::new(m.to_vec()).unwrap());
        }
    });
    out
}

fn naive_contains_subgraph(g: &Graph, h: &Graph) -> bool {
    let mut found = false;
    injective_maps(g.n(), h.n(), |m| {
        found |= h.edges().iter().all(|&(u, v)| g.has_edge(m[u], m[v]));
    });
    found
}

fn naive_kss(g: &Graph, s: usize) -> bool {
    naive_contains_subgraph(g, &Graph::complete_bipartite(s, s))
}

proptest! {
    #[test]
    fn induced_search_matches_naive(g in arb_graph(7), h in arb_graph(4)) {
        let mut got = induced_copies(&g, &h);
        got.sort();
        prop_assert_eq!(got, naive_induced(&g, &h));
    }

    #[test]
    fn subgraph_search_matches_naive(g in arb_graph(7), h in arb_graph(4)) {
        let got = contains_subgraph(&g, &h);
        prop_assert_eq!(got.is_some(), naive_contains_subgraph(&g, &h));
        if let Some(m) = got {
            prop_assert!(h.edges().iter().all(|&(u, v)| g.has_edge(m.get(u), m.get(v))));
        }
    }

    #[test]
    fn kss_search_matches_naive(g in arb_graph(7), s in 1usize..=3) {
        let got = contains_kss(&g, s);
        prop_assert_eq!(got.is_some(), naive_kss(&g, s));
        if let Some((left, right)) = got {
            prop_assert!(left.iter().all(|&u| right.iter().all(|&v| g.has_edge(u, v))));
        }
    }
}

/// `ex*(n, h, s)` over every labelled graph on `n` vertices.
fn naive_ex_star(n: usize, h: &Graph, s: usize) -> usize {
    all_graphs(n)
        .filter(|g| !naive_kss(g, s) && naive_induced(g, h).is_empty())
        .map(|g| g.edge_count())
        .max()
        .unwrap_or(0)
}

fn naive_ex(n: usize, h: &Graph) -> usize {
    all_graphs(n)
        .filter(|g| !naive_contains_subgraph(g, h))
        .map(|g| g.edge_count())
        .max()
        .unwrap_or(0)
}

#[test]
fn extremal_matches_naive_up_to_five() {
    for h in [Graph::cycle(4).unwrap(), Graph::path(4), Graph::path(3)] {
        for n in 1..=5 {
            assert_eq!(extremal_plain(n, &h).unwrap().value, naive_ex(n, &h), "ex({n})");
            for s in 1..=3 {
                let r = extremal_star(n, &h, s).unwrap();
                assert_eq!(r.value, naive_ex_star(n, &h, s), "ex*({n}, s = {s})");
                assert_eq!(r.witness.edge_count(), r.value);
                assert!(contains_kss(&r.witness, s).is_none());
                assert!(induced_copies(&r.witness, &h).is_empty());
            }
        }
    }
}

#[test]
fn bipartite_variant_witnesses() {
    let h = BipartiteTemplate::from_bipartite(Graph::cycle(4).unwrap()).unwrap();
    for n in 2..=5 {
        let r = extremal_bip_star(n, &h, 2).unwrap();
        let part = r.partition.as_ref().unwrap();
        let cross = r
            .witness
            .edges()
            .iter()
            .filter(|&&(u, v)| part.left.contains(&u) != part.left.contains(&v))
            .count();
        assert_eq!(cross, r.value);
        assert!(contains_kss(&r.witness, 2).is_none());
        assert!(2 * r.value >= extremal_star(n, h.graph(), 2).unwrap().value);
    }
}

#[test]
fn isomorphism_of_relabelled_cycles() {
    let c6 = Graph::cycle(6).unwrap();
    let shuffled = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 5), (5, 2), (2, 4), (4, 0)]).unwrap();
    assert!(isomorphic(&c6, &shuffled).is_some());
    assert!(isomorphic(&c6, &Graph::path(6)).is_none());
}
