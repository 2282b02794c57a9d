//! Brute-force helpers for the CLI-side tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scx_core::{ComplexFamily, SimplicialComplex};

pub fn gen(s: &str) -> SimplicialComplex {
    s.parse::<ComplexFamily>().unwrap().generate().unwrap()
}

/// Edges of the complex as label pairs `(u, v)` with `u < v`.
fn edges(c: &SimplicialComplex) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for f in c.facet_labels() {
        for (i, &u) in f.iter().enumerate() {
            for &v in &f[i + 1..] {
                out.insert((u, v));
            }
        }
    }
    out
}

fn connected(keep: &[u32], e: &BTreeSet<(u32, u32)>) -> bool {
    let Some(&start) = keep.first() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in keep {
            if !seen.contains(&v) && e.contains(&(u.min(v), u.max(v))) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen.len() == keep.len()
}

/// Vertex connectivity by deleting every vertex set, smallest first.
pub fn brute_kappa(c: &SimplicialComplex) -> usize {
    let labels = c.labels();
    let n = labels.len();
    let e = edges(c);
    if e.len() == n * (n - 1) / 2 {
        return n.saturating_sub(1);
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for m in masks {
        let keep: Vec<u32> = (0..n).filter(|i| m >> i & 1 == 0).map(|i| labels[i]).collect();
        if keep.len() >= 2 && !connected(&keep, &e) {
            return m.count_ones() as usize;
        }
    }
    unreachable!("a non-complete graph has a separator")
}

/// A random complex on at most `max_n` vertices: a handful of random facets.
pub fn random_complex(seed: u64, max_n: u32) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let count = rng.gen_range(1..=6);
    let facets: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let f: Vec<u32> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
            if f.is_empty() { vec![rng.gen_range(1..=n)] } else { f }
        })
        .collect();
    SimplicialComplex::from_facets(facets).unwrap()
}
