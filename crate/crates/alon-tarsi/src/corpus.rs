//! Graph corpora for cross-route validation: exhaustive small graphs,
//! one representative per isomorphism class by edge count, and seeded
//! random multigraphs with compatible list-size functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::graph::{MultiGraph, Orientation};

/// All connected simple graphs on labeled vertices 1..=n.
pub fn connected_labeled_graphs(n: u32) -> Vec<MultiGraph> {
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = MultiGraph::new(n, edges).expect("valid pairs");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Vertex count plus canonical edge list, the isomorphism class key.
pub type CanonicalKey = (u32, Vec<(u32, u32)>);

/// Canonical edge list: vertices are pre-sorted by descending degree and
/// the lexicographically least edge list over all degree-class-preserving
/// relabelings is taken. Isomorphic graphs agree on this form because any
/// isomorphism respects degree classes; distinct forms are distinct graphs
/// because the form is itself a relabeling of the input.
pub fn canonical_form(g: &MultiGraph) -> CanonicalKey {
    let n = g.n() as usize;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v as u32 + 1)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        let d = g.degree(v as u32 + 1);
        match classes.last() {
            Some(c) if g.degree(c[0] as u32 + 1) == d => classes.last_mut().unwrap().push(v),
            _ => classes.push(vec![v]),
        }
    }

    // Odometer over the within-class permutations.
    let perms: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
    let mut idx = vec![0usize; perms.len()];
    let mut best: Option<Vec<(u32, u32)>> = None;
    loop {
        let mut label = vec![0u32; n];
        let mut next = 1u32;
        for (ci, class_perms) in perms.iter().enumerate() {
            for &v in &class_perms[idx[ci]] {
                label[v] = next;
                next += 1;
            }
        }
        let mut edges: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (label[a as usize - 1], label[b as usize - 1]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }

        let mut carry = 0;
        loop {
            if carry == idx.len() {
                return (g.n(), best.expect("at least one labeling"));
            }
            idx[carry] += 1;
            if idx[carry] < perms[carry].len() {
                break;
            }
            idx[carry] = 0;
            carry += 1;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// One representative per isomorphism class of connected simple graphs,
/// grouped by edge count m = 0..=max_m. Built by edge augmentation: every
/// connected graph with m+1 edges arises from a connected m-edge graph by
/// adding an edge between existing vertices or hanging a new leaf.
pub fn connected_iso_classes(max_m: usize) -> Vec<Vec<MultiGraph>> {
    let mut layers: Vec<Vec<MultiGraph>> = Vec::with_capacity(max_m + 1);
    layers.push(vec![MultiGraph::new(1, vec![]).expect("single vertex")]);
    for _ in 0..max_m {
        let mut seen: BTreeMap<CanonicalKey, MultiGraph> = BTreeMap::new();
        for g in layers.last().expect("nonempty") {
            let n = g.n();
            let adj = g.adjacency();
            for a in 1..=n {
                for b in a + 1..=n {
                    if !adj[a as usize].contains(&b) {
                        consider(&mut seen, g, n, (a, b));
                    }
                }
            }
            for a in 1..=n {
                consider(&mut seen, g, n + 1, (a, n + 1));
            }
        }
        layers.push(seen.into_values().collect());
    }
    layers
}

fn consider(
    seen: &mut BTreeMap<CanonicalKey, MultiGraph>,
    g: &MultiGraph,
    n: u32,
    extra: (u32, u32),
) {
    let mut edges = g.edges().to_vec();
    edges.push(extra);
    let candidate = MultiGraph::new(n, edges).expect("valid augmentation");
    let key = canonical_form(&candidate);
    seen.entry(key).or_insert(candidate);
}

/// Deterministic ChaCha stream for the random corpora.
pub fn corpus_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random loopless multigraph with 2..=max_n vertices and 1..=max_m
/// edges, parallel edges allowed.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_n: u32, max_m: usize) -> MultiGraph {
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(1..=max_m);
    let edges: Vec<(u32, u32)> = (0..m)
        .map(|_| {
            let a = rng.random_range(1..=n);
            let mut b = rng.random_range(1..=n - 1);
            if b >= a {
                b += 1;
            }
            (a.min(b), a.max(b))
        })
        .collect();
    MultiGraph::new(n, edges).expect("loopless by construction")
}

/// A random list-size function with the exact mass Σf = n + m: start from
/// all ones and sprinkle m unit increments.
pub fn random_f(rng: &mut ChaCha8Rng, g: &MultiGraph) -> Vec<u32> {
    let n = g.n() as usize;
    let mut f = vec![1u32; n];
    for _ in 0..g.m() {
        f[rng.random_range(0..n)] += 1;
    }
    f
}

/// A random rational weight scheme shaped for the orientation's
/// out-degrees, with small numerators and denominators.
pub fn random_weight_scheme(rng: &mut ChaCha8Rng, d: &Orientation) -> Vec<Vec<BigRational>> {
    d.out_degrees()
        .iter()
        .map(|&deg| {
            (0..deg)
                .map(|_| {
                    let num = rng.random_range(-9i64..=9);
                    let den = rng.random_range(1i64..=4);
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_connected_counts() {
        assert_eq!(connected_labeled_graphs(1).len(), 1);
        assert_eq!(connected_labeled_graphs(2).len(), 1);
        assert_eq!(connected_labeled_graphs(3).len(), 4);
        assert_eq!(connected_labeled_graphs(4).len(), 38);
        assert_eq!(connected_labeled_graphs(5).len(), 728);
    }

    #[test]
    fn iso_class_counts_by_edges() {
        let layers = connected_iso_classes(6);
        let counts: Vec<usize> = layers.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 5, 12, 30]);
    }

    #[test]
    fn canonical_form_identifies_isomorphs() {
        // The path 1-2-3 in three labelings collapses to one form; the
        // triangle stays distinct.
        let p_a = MultiGraph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let p_b = MultiGraph::new(3, vec![(1, 2), (1, 3)]).unwrap();
        let p_c = MultiGraph::new(3, vec![(1, 3), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&p_a), canonical_form(&p_b));
        assert_eq!(canonical_form(&p_a), canonical_form(&p_c));
        let k3 = MultiGraph::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_ne!(canonical_form(&p_a), canonical_form(&k3));
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let mut r1 = corpus_rng(7);
        let mut r2 = corpus_rng(7);
        for _ in 0..10 {
            let g1 = random_multigraph(&mut r1, 5, 10);
            let g2 = random_multigraph(&mut r2, 5, 10);
            assert_eq!(g1.edges(), g2.edges());
            let f1 = random_f(&mut r1, &g1);
            let f2 = random_f(&mut r2, &g2);
            assert_eq!(f1, f2);
            let total: u32 = f1.iter().sum();
            assert_eq!(total as usize, g1.n() as usize + g1.m());
        }
    }
}
