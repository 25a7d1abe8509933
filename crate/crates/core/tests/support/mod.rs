//! Generators and independent oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ncdim_core::{CrVector, CurveSignature, KClass, Rational, Slope};
use proptest::prelude::*;

pub fn orders() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=5, 0..=3).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

pub fn signature() -> impl Strategy<Value = CurveSignature> {
    (0u32..=5, prop::collection::vec(2u32..=12, 0..=6))
        .prop_map(|(g, orders)| CurveSignature::new(g, orders).unwrap())
}

/// A class built from Chen–Ruan coordinates, so integrality holds by design.
pub fn class(orders: &[u32], rank: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = KClass> {
    let locals: Vec<_> = orders
        .iter()
        .map(|&e| prop::collection::vec(-3i64..=3, e as usize - 1))
        .collect();
    (rank, -12i64..=12, locals).prop_map(|(rank, coarse_degree, locals)| {
        KClass::from_ch_orb(&CrVector { rank, coarse_degree, locals }).unwrap()
    })
}

pub fn classes(n: usize) -> impl Strategy<Value = (Vec<u32>, Vec<KClass>)> {
    orders().prop_flat_map(move |o| {
        let c = prop::collection::vec(class(&o, -5..=5), n);
        (Just(o), c)
    })
}

/// A heart-effective class: a bundle, or torsion of positive degree.
pub fn effective(orders: &[u32]) -> impl Strategy<Value = KClass> {
    let torsion = class(orders, 0..=0).prop_filter("positive degree", |c| c.degree() > Rational::from_integer(0));
    prop_oneof![3 => class(orders, 1..=4), 1 => torsion]
}

pub fn bundle(orders: &[u32]) -> impl Strategy<Value = KClass> {
    class(orders, 1..=4)
}

pub fn pieces(max: usize, torsion: bool) -> impl Strategy<Value = (Vec<u32>, Vec<KClass>)> {
    orders().prop_flat_map(move |o| {
        let piece = if torsion { effective(&o).boxed() } else { bundle(&o).boxed() };
        (Just(o), prop::collection::vec(piece, 1..=max))
    })
}

/// Oracle for HN normalization: bucket by slope in an ordered map, then
/// read the buckets from the largest slope down.
pub fn normalize_oracle(pieces: &[KClass]) -> Vec<KClass> {
    let mut buckets: BTreeMap<Slope, KClass> = BTreeMap::new();
    for p in pieces {
        let s = p.slope().unwrap();
        let merged = match buckets.remove(&s) {
            Some(acc) => acc.add(p).unwrap(),
            None => p.clone(),
        };
        buckets.insert(s, merged);
    }
    buckets.into_values().rev().collect()
}

/// Character table evaluation: at stacky point `i`, the class restricts to a
/// representation of `μ_e` whose character at `ζᵏ` is `Σⱼ mⱼ ζ^{jk}`.
/// Tensor product is pointwise multiplication of these values.
pub fn character_values(a: &KClass) -> Vec<Vec<(f64, f64)>> {
    (0..a.locals().len())
        .map(|i| {
            let full = a.full_character(i);
            let e = full.len();
            (0..e)
                .map(|k| {
                    full.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, &m)| {
                        let angle = 2.0 * std::f64::consts::PI * ((j * k) % e) as f64 / e as f64;
                        (re + m as f64 * angle.cos(), im + m as f64 * angle.sin())
                    })
                })
                .collect()
        })
        .collect()
}

pub fn complex_mul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

// ---------------------------------------------------------------------------
// Trees and the Dynkin shape catalogue.

/// Edge lists of every unlabelled tree on `n` vertices, one per isomorphism
/// class, grown leaf by leaf and deduplicated by a canonical AHU code.
pub fn trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut level: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    level.insert(canonical(1, &[]), Vec::new());
    for size in 1..n {
        let mut next = BTreeMap::new();
        for edges in level.values() {
            for v in 0..size {
                let mut grown = edges.clone();
                grown.push((v, size));
                next.entry(canonical(size + 1, &grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

fn canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    centres(&adj)
        .into_iter()
        .map(|c| encode(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> =
        adj[v].iter().filter(|&&w| w != parent).map(|&w| encode(adj, w, v)).collect();
    children.sort();
    format!("({})", children.concat())
}

/// What a tree should classify as, decided from its degree sequence and arm
/// lengths alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    A(usize),
    D(usize),
    E(usize),
    Extended,
    Wild,
}

pub fn catalogue_shape(n: usize, edges: &[(usize, usize)]) -> Shape {
    let adj = adjacency(n, edges);
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    match branch.as_slice() {
        [] => Shape::A(n),
        &[c] if degrees[c] == 4 => {
            // D̃₄: a centre with four leaves.
            if n == 5 { Shape::Extended } else { Shape::Wild }
        }
        &[c] if degrees[c] == 3 => {
            let mut arms: Vec<usize> = adj[c].iter().map(|&s| arm_length(&adj, c, s)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Shape::D(n),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Shape::E(n),
                [2, 2, 2] | [1, 3, 3] | [1, 2, 5] => Shape::Extended,
                _ => Shape::Wild,
            }
        }
        &[a, b] if degrees[a] == 3 && degrees[b] == 3 => {
            // D̃ₙ: two branch points, each carrying two leaves.
            let leaves = |c: usize| adj[c].iter().filter(|&&w| degrees[w] == 1).count();
            if leaves(a) == 2 && leaves(b) == 2 { Shape::Extended } else { Shape::Wild }
        }
        _ => Shape::Wild,
    }
}

fn arm_length(adj: &[Vec<usize>], centre: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    while adj[cur].len() == 2 {
        let next = adj[cur].iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

/// Every orientation of a tree's edges, as arrow lists.
pub fn orientations(edges: &[(usize, usize)]) -> impl Iterator<Item = Vec<(usize, usize)>> + '_ {
    (0u32..1 << edges.len()).map(move |mask| {
        edges
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) })
            .collect()
    })
}

/// Published counts of unlabelled trees on 1..=9 vertices.
pub const TREE_COUNTS: [usize; 9] = [1, 1, 1, 2, 3, 6, 11, 23, 47];

/// Brute-force negative triples: `deg ω = 1 − Σ 1/aᵢ < 0`, cleared of denominators.
pub fn negative_triples_oracle(bound: u32) -> BTreeSet<[u32; 3]> {
    let mut out = BTreeSet::new();
    for a in 1..=bound {
        for b in a..=bound {
            for c in b..=bound {
                if b * c + a * c + a * b > a * b * c {
                    out.insert([a, b, c]);
                }
            }
        }
    }
    out
}
