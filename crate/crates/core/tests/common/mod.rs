//! Independent reference implementations used to cross-check the library.
//! They favour obviousness over speed and share no code with `scx-core`
//! beyond the public types.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use scx_core::{ComplexFamily, Graph, SimplicialComplex};

pub fn gen(s: &str) -> SimplicialComplex {
    s.parse::<ComplexFamily>().unwrap().generate().unwrap()
}

pub fn cx(facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
}

/// Every face as a set of external labels.
pub fn label_faces(c: &SimplicialComplex) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for f in c.facet_labels() {
        for mask in 0u32..1 << f.len() {
            out.insert((0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    out
}

/// All subsets of `labels`, as sorted vectors.
pub fn all_subsets(labels: &[u32]) -> Vec<Vec<u32>> {
    (0u32..1 << labels.len())
        .map(|mask| (0..labels.len()).filter(|i| mask >> i & 1 == 1).map(|i| labels[i]).collect())
        .collect()
}

/// Connected components of the graph on `keep` with the given edge test.
fn is_connected(keep: &[u32], edge: &dyn Fn(u32, u32) -> bool) -> bool {
    if keep.is_empty() {
        return true;
    }
    let mut seen = BTreeSet::from([keep[0]]);
    let mut stack = vec![keep[0]];
    while let Some(u) = stack.pop() {
        for &v in keep {
            if !seen.contains(&v) && edge(u, v) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen.len() == keep.len()
}

/// Vertex connectivity by trying every removal set, smallest first. A
/// complete graph on `n` vertices gets `n - 1`.
pub fn brute_force_kappa(labels: &[u32], edge: &dyn Fn(u32, u32) -> bool) -> usize {
    let n = labels.len();
    let complete = labels.iter().all(|&u| labels.iter().all(|&v| u == v || edge(u, v)));
    if complete {
        return n.saturating_sub(1);
    }
    let mut subsets = all_subsets(labels);
    subsets.sort_by_key(Vec::len);
    for s in subsets {
        let keep: Vec<u32> = labels.iter().copied().filter(|l| !s.contains(l)).collect();
        if keep.len() >= 2 && !is_connected(&keep, edge) {
            return s.len();
        }
    }
    unreachable!("a non-complete graph has a separating set")
}

pub fn complex_kappa(c: &SimplicialComplex) -> usize {
    let faces = label_faces(c);
    brute_force_kappa(c.labels(), &|u, v| {
        let e = if u < v { vec![u, v] } else { vec![v, u] };
        faces.contains(&e)
    })
}

pub fn graph_kappa(g: &Graph) -> usize {
    let labels: Vec<u32> = (0..g.num_vertices() as u32).collect();
    brute_force_kappa(&labels, &|u, v| g.has_edge(u as usize, v as usize))
}

/// Rank over GF(2) by counting the span: `2^rank` distinct combinations.
pub fn gf2_rank_by_span(rows: &[Vec<i64>]) -> usize {
    let vecs: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(2) as u8).collect()).collect();
    let cols = vecs.first().map_or(0, Vec::len);
    let mut span = HashSet::new();
    for mask in 0u32..1 << vecs.len() {
        let mut acc = vec![0u8; cols];
        for (i, v) in vecs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (a, b) in acc.iter_mut().zip(v) {
                    *a ^= b;
                }
            }
        }
        span.insert(acc);
    }
    span.len().trailing_zeros() as usize
}

/// Number of vectors `x ∈ GF(2)^cols` with `Mx = 0`.
pub fn gf2_kernel_size(rows: &[Vec<i64>], cols: usize) -> usize {
    (0u32..1 << cols)
        .filter(|x| {
            rows.iter()
                .all(|r| r.iter().enumerate().filter(|(j, _)| x >> j & 1 == 1).map(|(_, v)| v.rem_euclid(2)).sum::<i64>() % 2 == 0)
        })
        .count()
}

/// Rank over Q by textbook Gaussian elimination on exact fractions.
#[allow(clippy::needless_range_loop)]
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone() / pivot.clone();
                for k in 0..cols {
                    let sub = factor.clone() * m[rank][k].clone();
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients of `sum over faces σ of t^|σ| (1 - t)^(n - |σ|)`, the
/// numerator of the Hilbert series of the face ring.
pub fn k_polynomial(c: &SimplicialComplex) -> Vec<i64> {
    let n = c.num_vertices();
    let mut coeffs = vec![0i64; n + 1];
    for face in label_faces(c) {
        let k = face.len();
        // (1 - t)^(n-k) = sum_m C(n-k, m) (-1)^m t^m
        let mut binom = 1i64;
        for m in 0..=n - k {
            coeffs[k + m] += if m % 2 == 0 { binom } else { -binom };
            binom = binom * (n - k - m) as i64 / (m as i64 + 1);
        }
    }
    coeffs
}

/// Inclusion-minimal non-faces by checking every subset.
pub fn brute_minimal_nonfaces(c: &SimplicialComplex) -> BTreeSet<Vec<u32>> {
    let faces = label_faces(c);
    all_subsets(c.labels())
        .into_iter()
        .filter(|w| {
            !faces.contains(w)
                && (0..w.len()).all(|i| {
                    let mut sub = w.clone();
                    sub.remove(i);
                    faces.contains(&sub)
                })
        })
        .collect()
}

/// Banner per definition: every complete, critical vertex set of size at
/// least `d` is a face. Returns the offending sets.
pub fn brute_banner_violations(c: &SimplicialComplex) -> Vec<Vec<u32>> {
    let faces = label_faces(c);
    let d = c.facet_labels().iter().map(Vec::len).max().unwrap_or(0);
    let edge = |u: u32, v: u32| faces.contains(&if u < v { vec![u, v] } else { vec![v, u] });
    all_subsets(c.labels())
        .into_iter()
        .filter(|w| w.len() >= d && !faces.contains(w))
        .filter(|w| w.iter().all(|&u| w.iter().all(|&v| u == v || edge(u, v))))
        .filter(|w| {
            (0..w.len()).any(|i| {
                let mut sub = w.clone();
                sub.remove(i);
                faces.contains(&sub)
            })
        })
        .collect()
}

/// Betti numbers by Hochster's formula, with every induced subcomplex built
/// from scratch through the public API.
pub fn hochster_by_induced(c: &SimplicialComplex, field: scx_core::FieldSpec) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for w in all_subsets(c.labels()) {
        let j = w.len();
        let ranks = if w.is_empty() {
            vec![1]
        } else {
            scx_core::homology::reduced_homology(&c.induced_by_labels(&w).unwrap(), field).ranks().to_vec()
        };
        // an empty induced set of faces still has the empty face
        for (idx, &r) in ranks.iter().enumerate() {
            if r > 0 {
                *out.entry((j - idx, j)).or_insert(0) += r as u64;
            }
        }
    }
    out
}

/// Random complexes on at most `max_n` vertices with labels `1..=max_n`.
pub fn arb_complex(max_n: u32, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u32..(1 << max_n), 1..=max_facets).prop_map(move |masks| {
        SimplicialComplex::from_facets(
            masks
                .into_iter()
                .map(|m| (0..max_n).filter(move |i| m >> i & 1 == 1).map(|i| i + 1).collect::<Vec<_>>()),
        )
        .unwrap()
    })
}

/// Random graphs on `n` vertices for `n` in `1..=max_n`.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Small integer matrices.
pub fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}
