//! Finite simplicial complexes stored by their facets.
//!
//! Vertices carry arbitrary positive integer labels on the outside and are
//! renumbered `0..n` internally, in label order. Faces are bit sets over the
//! internal indices, which caps the vertex count at [`HARD_VERTEX_CAP`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Default limit on the number of vertices. Anything that sweeps all vertex
/// subsets is `2^n`, so the limit is deliberately conservative.
pub const DEFAULT_VERTEX_CAP: usize = 20;

/// Absolute limit on the number of vertices, whatever the configuration says.
pub const HARD_VERTEX_CAP: usize = 26;

/// A set of internal vertex indices, stored as a bit mask.
///
/// Faces are ordered first by cardinality and then lexicographically by their
/// sorted index lists, which is the enumeration order used throughout the
/// crate when a "first" witness has to be picked.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u32);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u32) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        Face(1 << v)
    }

    /// The face `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            Face(u32::MAX)
        } else {
            Face((1u32 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Face(indices.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Smallest index in the face.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    /// All subsets of this face, the face itself included.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// All subsets of cardinality `k`, in lexicographic order.
    pub fn subsets_of_len(self, k: usize) -> Vec<Face> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let n = elems.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Face::from_indices(idx.iter().map(|&i| elems[i])));
            let mut i = k;
            while i > 0 && idx[i - 1] == i - 1 + n - k {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for q in i..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            if self.0 == other.0 {
                Ordering::Equal
            } else {
                // the set holding the smallest element of the symmetric
                // difference is lexicographically first
                let low = (self.0 ^ other.0).trailing_zeros();
                if (self.0 >> low) & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct FaceIter(u32);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.mask);
        Some(Face(cur))
    }
}

/// Face counts by cardinality: entry `c` counts faces with `c` vertices, so
/// entry 0 is the empty face and entry `k + 1` is the classical `f_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(Vec<usize>);

impl FVector {
    /// `f_k`, the number of `k`-dimensional faces (`k >= -1`).
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|c| self.0.get(c).copied())
            .unwrap_or(0)
    }

    /// Counts indexed by cardinality.
    pub fn by_cardinality(&self) -> &[usize] {
        &self.0
    }

    /// `sum_k (-1)^k f_k` over `k >= -1`, i.e. the Euler characteristic minus one.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(c, &f)| if c % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

/// A finite simplicial complex, kept as its list of facets.
///
/// Values are immutable; all derived data is computed on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<u32>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from facets given by external labels, with the default
    /// vertex cap.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        Self::from_facets_with_cap(facets, DEFAULT_VERTEX_CAP)
    }

    /// Builds a complex from facets given by external labels. Non-maximal
    /// faces in the list are absorbed.
    pub fn from_facets_with_cap<I, F>(facets: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let cap = cap.min(HARD_VERTEX_CAP);
        let mut raw: Vec<Vec<u32>> = Vec::new();
        let mut all = BTreeSet::new();
        for (index, facet) in facets.into_iter().enumerate() {
            let mut seen = BTreeSet::new();
            for label in facet {
                if label == 0 {
                    return Err(Error::InvalidLabel(0));
                }
                if !seen.insert(label) {
                    return Err(Error::RepeatedVertex { index, label });
                }
            }
            if seen.is_empty() {
                return Err(Error::EmptyFacet { index });
            }
            all.extend(seen.iter().copied());
            raw.push(seen.into_iter().collect());
        }
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if all.len() > cap {
            return Err(Error::TooManyVertices {
                found: all.len(),
                limit: cap,
            });
        }
        let labels: Vec<u32> = all.into_iter().collect();
        let masks: Vec<Face> = raw
            .iter()
            .map(|f| Face::from_indices(f.iter().map(|l| labels.binary_search(l).expect("label collected"))))
            .collect();
        Ok(Self::from_parts(labels, masks))
    }

    /// The complex `{∅}` with no vertices and dimension `-1`.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: vec![Face::EMPTY],
        }
    }

    /// Assembles a complex from faces over `labels`, dropping unused vertices
    /// and non-maximal faces. `faces` must be nonempty.
    pub(crate) fn from_parts(labels: Vec<u32>, faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().collect();
        assert!(!faces.is_empty(), "a complex needs at least the empty face");
        let used = faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        if used.len() != labels.len() {
            let keep: Vec<usize> = used.iter().collect();
            let new_labels = keep.iter().map(|&i| labels[i]).collect();
            faces = faces
                .into_iter()
                .map(|f| Face::from_indices(keep.iter().enumerate().filter(|(_, &old)| f.contains(old)).map(|(new, _)| new)))
                .collect();
            return Self::from_parts(new_labels, faces);
        }
        faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { labels, facets }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// External vertex labels, sorted; position `i` is internal index `i`.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> u32 {
        self.labels[index]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// The face spanned by all vertices.
    pub fn vertex_set(&self) -> Face {
        Face::full(self.labels.len())
    }

    /// Facets in canonical order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.max_facet_len() as isize - 1
    }

    pub fn max_facet_len(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let top = self.max_facet_len();
        self.facets.iter().all(|f| f.len() == top)
    }

    /// Converts external labels into a face; fails on unknown labels.
    pub fn face_from_labels(&self, labels: &[u32]) -> Result<Face> {
        labels.iter().try_fold(Face::EMPTY, |acc, &l| {
            self.index_of(l).map(|i| acc.with(i)).ok_or(Error::UnknownVertex(l))
        })
    }

    pub fn face_labels(&self, face: Face) -> Vec<u32> {
        face.iter().map(|i| self.labels[i]).collect()
    }

    pub fn facet_labels(&self) -> Vec<Vec<u32>> {
        self.facets.iter().map(|&f| self.face_labels(f)).collect()
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, the empty face included, in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let mut set = HashSet::new();
        for f in &self.facets {
            // subsets of a face already seen are already in the set, but
            // facets are few enough that the plain walk is fine
            set.extend(f.subsets());
        }
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort();
        faces
    }

    /// Faces with exactly `k` vertices; empty when `k` is out of range.
    pub fn faces_of_card(&self, k: usize) -> Vec<Face> {
        let set: BTreeSet<Face> = self
            .facets
            .iter()
            .flat_map(|f| f.subsets_of_len(k))
            .collect();
        set.into_iter().collect()
    }

    /// Faces grouped by cardinality, `0..=dim+1`.
    pub fn faces_by_card(&self) -> Vec<Vec<Face>> {
        let mut out = vec![Vec::new(); self.max_facet_len() + 1];
        for f in self.faces() {
            out[f.len()].push(f);
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_card().iter().map(Vec::len).collect())
    }

    /// The subcomplex induced on `w`: all faces contained in `w`.
    pub fn induced(&self, w: Face) -> Self {
        let w = w.intersection(self.vertex_set());
        let faces: Vec<Face> = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_parts(self.labels.clone(), faces)
    }

    pub fn induced_by_labels(&self, labels: &[u32]) -> Result<Self> {
        Ok(self.induced(self.face_from_labels(labels)?))
    }

    /// `lk σ = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace(self.face_labels(sigma)));
        }
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(Self::from_parts(self.labels.clone(), faces))
    }

    /// Largest cardinality of a facet containing `sigma`.
    pub fn degree(&self, sigma: Face) -> Result<usize> {
        self.facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.len())
            .max()
            .ok_or_else(|| Error::NotAFace(self.face_labels(sigma)))
    }

    /// Inclusion-minimal non-faces, in canonical order. Empty exactly when the
    /// complex is a full simplex.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let faces = self.faces();
        let face_set: HashSet<Face> = faces.iter().copied().collect();
        let all = self.vertex_set();
        let mut out = BTreeSet::new();
        for &tau in &faces {
            for v in all.difference(tau).iter() {
                let w = tau.with(v);
                if face_set.contains(&w) || out.contains(&w) {
                    continue;
                }
                if w.iter().all(|u| face_set.contains(&w.without(u))) {
                    out.insert(w);
                }
            }
        }
        out.into_iter().collect()
    }

    /// True iff every minimal non-face is an edge.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|f| f.len() == 2)
    }

    /// Applies a label map; the map must be injective on this complex's labels.
    pub fn relabeled(&self, map: impl Fn(u32) -> u32) -> Result<Self> {
        Self::from_facets_with_cap(
            self.facet_labels().into_iter().map(|f| f.into_iter().map(&map).collect::<Vec<_>>()),
            HARD_VERTEX_CAP,
        )
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets = self.facet_labels();
        write!(f, "[")?;
        for (i, facet) in facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, v) in facet.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "]")
    }
}
