//! Complete and critical vertex sets, banner complexes and banner numbers,
//! pseudomanifolds and minimal cycles.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::top_cycle_space;
use crate::linalg::FieldSpec;

/// Whether every two vertices of `w` span an edge. Sets with at most one
/// vertex are complete.
pub fn is_complete(complex: &SimplicialComplex, w: Face) -> bool {
    let g = complex.underlying_graph();
    w.is_subset(complex.vertex_set()) && g.is_clique(w)
}

/// Whether the complete set `w` has `w ∖ {v}` a face for some `v ∈ w`.
pub fn is_critical(complex: &SimplicialComplex, w: Face) -> Result<bool> {
    if !is_complete(complex, w) {
        return Err(Error::NotComplete(complex.face_labels(w)));
    }
    Ok(w.iter().any(|v| complex.is_face(w.without(v))))
}

/// Least (in canonical order) critical complete set of size at least `d`
/// that is not a face, where `d - 1` is the dimension.
///
/// Such a set is `τ ∪ {v}` for a face `τ` of size at least `d - 1` whose
/// vertices are all adjacent to `v`, so it suffices to extend faces.
fn banner_witness(complex: &SimplicialComplex) -> Option<Face> {
    let d = complex.max_facet_len();
    if d == 0 {
        return None;
    }
    let g = &complex.underlying_graph();
    let all = complex.vertex_set();
    complex
        .faces()
        .into_iter()
        .filter(|tau| tau.len() + 1 >= d)
        .flat_map(|tau| {
            all.difference(tau)
                .iter()
                .filter(move |&v| tau.is_subset(g.neighbors(v)))
                .map(move |v| tau.with(v))
        })
        .filter(|&w| !complex.is_face(w))
        .min()
}

/// Banner status with a witness on failure and the banner number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BannerReport {
    pub is_banner: bool,
    /// A critical complete non-face of size at least `d`, by external labels.
    pub witness: Option<Vec<u32>>,
    pub banner_number: Option<usize>,
}

pub fn is_banner(complex: &SimplicialComplex) -> BannerReport {
    let witness = banner_witness(complex).map(|w| complex.face_labels(w));
    BannerReport {
        is_banner: witness.is_none(),
        witness,
        banner_number: banner_number(complex).ok(),
    }
}

/// Isomorphic to the boundary of a triangle.
pub fn is_boundary_of_triangle(complex: &SimplicialComplex) -> bool {
    complex.num_vertices() == 3 && complex.facets().len() == 3 && complex.facets().iter().all(|f| f.len() == 2)
}

/// The least `b` such that every face of cardinality `b` and degree `d` has a
/// link that is banner or a triangle boundary. `b = d` always qualifies since
/// the link of a facet is `{∅}`; for `{∅}` itself the answer is 0.
pub fn banner_number(complex: &SimplicialComplex) -> Result<usize> {
    let d = complex.max_facet_len();
    for b in 0..=d {
        let ok = complex.faces_of_card(b).into_iter().all(|sigma| {
            complex.degree(sigma).expect("sigma is a face") != d || {
                let link = complex.link(sigma).expect("sigma is a face");
                is_boundary_of_triangle(&link) || banner_witness(&link).is_none()
            }
        });
        if ok {
            return Ok(b);
        }
    }
    Err(Error::NoSuchB { max: d })
}

/// Pure, every ridge in exactly two facets, and connected through ridges.
/// The complex `{∅}` is not a pseudomanifold.
pub fn is_pseudomanifold(complex: &SimplicialComplex) -> bool {
    let d = complex.max_facet_len();
    if d == 0 || !complex.is_pure() {
        return false;
    }
    let facets = complex.facets();
    let mut ridges: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for v in f.iter() {
            ridges.entry(f.without(v)).or_default().push(i);
        }
    }
    if ridges.values().any(|owners| owners.len() != 2) {
        return false;
    }
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for v in facets[i].iter() {
            for &j in &ridges[&facets[i].without(v)] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Outcome of the minimal-cycle test, with the cycle generator over the
/// facets so that failures can be audited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalCycleCheck {
    pub field: FieldSpec,
    pub dim: isize,
    /// Dimension of the top cycle space.
    pub cycle_space_dim: usize,
    /// Facets by external labels, in the order used by `generator`.
    pub facets: Vec<Vec<u32>>,
    /// The generator when the cycle space is one-dimensional.
    #[serde(serialize_with = "serialize_coefficients")]
    pub generator: Option<Vec<BigInt>>,
    /// Facets on which the generator vanishes.
    pub unsupported: Vec<Vec<u32>>,
    pub is_minimal_cycle: bool,
}

fn serialize_coefficients<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let as_json = v.as_ref().map(|v| {
        v.iter()
            .map(|c| match c.to_i64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect::<Vec<_>>()
    });
    as_json.serialize(s)
}

/// A pure complex of dimension `d >= 1` is a minimal cycle over `field` when
/// its top cycle space is one-dimensional and spanned by a cycle that is
/// nonzero on every facet.
pub fn is_minimal_cycle(complex: &SimplicialComplex, field: FieldSpec) -> Result<MinimalCycleCheck> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    if complex.dim() < 1 {
        return Err(Error::DimensionTooLow { dim: complex.dim(), min: 1 });
    }
    let basis = top_cycle_space(complex, field)?;
    let generator = match basis.as_slice() {
        [z] => Some(z.clone()),
        _ => None,
    };
    let unsupported: Vec<Vec<u32>> = match &generator {
        Some(z) => complex
            .facets()
            .iter()
            .zip(z)
            .filter(|(_, c)| c.is_zero())
            .map(|(&f, _)| complex.face_labels(f))
            .collect(),
        None => Vec::new(),
    };
    Ok(MinimalCycleCheck {
        field,
        dim: complex.dim(),
        cycle_space_dim: basis.len(),
        facets: complex.facet_labels(),
        is_minimal_cycle: generator.is_some() && unsupported.is_empty(),
        generator,
        unsupported,
    })
}
