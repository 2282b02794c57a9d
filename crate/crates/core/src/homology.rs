//! Reduced simplicial homology over a field, for a complex and for all of its
//! induced subcomplexes at once.
//!
//! The chain complex is augmented: the empty face spans degree `-1` and
//! `∂_0` sends every vertex to it. So `{∅}` has `H̃_{-1}` of rank one and every
//! other complex has `H̃_{-1} = 0`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{rank_of_rows, FieldSpec, SparseMatrix};

/// Ranks of `H̃_k` for `k = -1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    field: FieldSpec,
    ranks: Vec<usize>,
}

impl HomologyProfile {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `rank H̃_k`; zero outside `-1..=dim`.
    pub fn rank(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    /// Ranks starting at degree `-1`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `sum_k (-1)^k rank H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 0 { -(r as i64) } else { r as i64 })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology of `complex` over `field`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    let mut by_card = complex.faces_by_card();
    for level in &mut by_card {
        level.sort_by_key(|f| f.bits());
    }
    HomologyProfile {
        field,
        ranks: reduced_ranks(&by_card, field),
    }
}

/// The boundary map `∂_k : C_k -> C_{k-1}` for `k >= 0`. Rows are indexed by
/// the faces with `k` vertices and columns by the faces with `k + 1`
/// vertices, both in canonical order. Removing the vertex at position `i` of
/// a face carries the sign `(-1)^i`.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> SparseMatrix {
    let lower = complex.faces_of_card(k);
    let upper = complex.faces_of_card(k + 1);
    let mut m = SparseMatrix::new(lower.len(), upper.len());
    for (col, &face) in upper.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let row = lower.binary_search(&face.without(v)).expect("faces are closed under subsets");
            m.set(row, col, if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Kernel of the top boundary map of a pure complex, as vectors indexed by
/// `complex.facets()`. Purity means there are no higher faces, so this is the
/// top homology itself.
pub fn top_cycle_space(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<Vec<BigInt>>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let top = complex.max_facet_len();
    if top == 0 {
        return Ok(vec![vec![BigInt::from(1)]]);
    }
    Ok(boundary_matrix(complex, top - 1).kernel_basis(field))
}

/// Homology ranks (indexed from degree -1) of the complex whose faces are
/// listed by cardinality, each level sorted by bit pattern.
pub(crate) fn reduced_ranks(by_card: &[Vec<Face>], field: FieldSpec) -> Vec<usize> {
    let top = by_card.len() - 1;
    // boundary_rank[c] = rank of the map from cardinality c to c - 1
    let mut boundary_rank = vec![0; top + 2];
    for c in 1..=top {
        let lower = &by_card[c - 1];
        let rows: Vec<Vec<(usize, i64)>> = by_card[c]
            .iter()
            .map(|&face| {
                face.iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let col = lower
                            .binary_search_by_key(&face.without(v).bits(), |f| f.bits())
                            .expect("faces are closed under subsets");
                        (col, if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        boundary_rank[c] = rank_of_rows(lower.len(), &rows, field);
    }
    (0..=top)
        .map(|c| by_card[c].len() - boundary_rank[c] - boundary_rank[c + 1])
        .collect()
}

/// Precomputed faces of a complex for repeated induced-subcomplex homology.
pub(crate) struct InducedSweep<'a> {
    complex: &'a SimplicialComplex,
    field: FieldSpec,
    by_card: Vec<Vec<Face>>,
}

impl<'a> InducedSweep<'a> {
    pub(crate) fn new(complex: &'a SimplicialComplex, field: FieldSpec) -> Self {
        let mut by_card = complex.faces_by_card();
        for level in &mut by_card {
            level.sort_by_key(|f| f.bits());
        }
        InducedSweep { complex, field, by_card }
    }

    /// Ranks of `H̃_k(Δ_W)` for `k = -1..`, padded to `dim + 2` entries.
    pub(crate) fn ranks(&self, w: Face) -> Vec<usize> {
        let width = self.by_card.len();
        let mut out = vec![0; width];
        if self.complex.is_face(w) {
            // a simplex is acyclic unless it is the empty face
            if w.is_empty() {
                out[0] = 1;
            }
            return out;
        }
        let mut sub: Vec<Vec<Face>> = self
            .by_card
            .iter()
            .map(|level| level.iter().copied().filter(|f| f.is_subset(w)).collect())
            .collect();
        while sub.last().is_some_and(Vec::is_empty) {
            sub.pop();
        }
        let ranks = reduced_ranks(&sub, self.field);
        out[..ranks.len()].copy_from_slice(&ranks);
        out
    }
}

/// Reduced homology ranks of every induced subcomplex `Δ_W`, indexed by the
/// bit pattern of `W`.
#[derive(Clone, Debug)]
pub struct InducedHomology {
    field: FieldSpec,
    n: usize,
    width: usize,
    ranks: Vec<u32>,
}

impl InducedHomology {
    /// Sweeps all `2^n` vertex subsets in parallel on the current rayon pool.
    pub fn compute(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<Self> {
        let n = complex.num_vertices();
        if n > cap.min(crate::HARD_VERTEX_CAP) {
            return Err(Error::TooManyVertices { found: n, limit: cap });
        }
        let sweep = InducedSweep::new(complex, field);
        let width = complex.max_facet_len() + 1;
        let mut ranks = vec![0u32; width << n];
        ranks.par_chunks_mut(width).enumerate().for_each(|(w, slot)| {
            for (dst, r) in slot.iter_mut().zip(sweep.ranks(Face::from_bits(w as u32))) {
                *dst = r as u32;
            }
        });
        Ok(InducedHomology { field, n, width, ranks })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// `rank H̃_k(Δ_W)`.
    pub fn rank(&self, w: Face, k: isize) -> usize {
        match usize::try_from(k + 1) {
            Ok(i) if i < self.width => self.ranks[w.bits() as usize * self.width + i] as usize,
            _ => 0,
        }
    }

    /// Ranks for `W`, starting at degree `-1`.
    pub fn ranks(&self, w: Face) -> &[u32] {
        let start = w.bits() as usize * self.width;
        &self.ranks[start..start + self.width]
    }

    /// All vertex subsets in canonical order (cardinality, then lexicographic).
    pub fn subsets(&self) -> Vec<Face> {
        let mut all: Vec<Face> = (0..1u32 << self.n).map(Face::from_bits).collect();
        all.sort();
        all
    }
}
