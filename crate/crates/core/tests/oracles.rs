//! The library against the brute-force reference code in `common`.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use proptest::prelude::*;
use scx_core::betti::hochster_table;
use scx_core::homology::reduced_homology;
use scx_core::structure::{banner_number, is_banner};
use scx_core::{FieldSpec, SimplicialComplex, SparseMatrix};

const FIELDS: [FieldSpec; 3] = [FieldSpec::Gf2, FieldSpec::Gfp(3), FieldSpec::Rational];

fn corpus() -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = [
        "simplex_boundary 2",
        "simplex_boundary 3",
        "simplex_boundary 4",
        "cross_polytope 2",
        "cross_polytope 3",
        "cross_polytope 4",
        "cycle 4",
        "cycle 6",
        "suspension cycle 4",
        "join simplex_boundary 2 simplex_boundary 2",
        "cone cycle 5",
        "rp2_6",
        "remark_complex 3",
    ]
    .iter()
    .map(|s| gen(s))
    .collect();
    out.extend((0..6).map(|seed| gen(&format!("random_flag 8 0.5 {seed}"))));
    out.push(cx(&[&[1, 2, 3], &[3, 4], &[4, 5, 6, 7]]));
    out
}

#[test]
fn max_flow_connectivity_matches_removal_on_the_corpus() {
    for c in corpus() {
        assert_eq!(c.underlying_graph().vertex_connectivity(), complex_kappa(&c), "{c}");
    }
}

#[test]
fn betti_tables_match_direct_hochster_sums() {
    for c in corpus() {
        for f in [FieldSpec::Gf2, FieldSpec::Rational] {
            let t = hochster_table(&c, f).unwrap();
            let got: BTreeMap<_, _> = t.entries().collect();
            assert_eq!(got, hochster_by_induced(&c, f), "{c} over {f}");
        }
    }
}

#[test]
fn minimal_nonfaces_and_banner_match_brute_force() {
    for c in corpus() {
        let got: BTreeSet<Vec<u32>> = c.minimal_nonfaces().into_iter().map(|f| c.face_labels(f)).collect();
        assert_eq!(got, brute_minimal_nonfaces(&c), "{c}");
        let violations = brute_banner_violations(&c);
        let report = is_banner(&c);
        assert_eq!(report.is_banner, violations.is_empty(), "{c}");
        if let Some(w) = report.witness {
            assert!(violations.contains(&w));
        }
    }
}

#[test]
fn clique_complexes_are_exactly_the_cliques() {
    for c in corpus() {
        let g = c.underlying_graph();
        let cl = SimplicialComplex::clique_complex(&g);
        let faces = label_faces(&cl);
        for w in all_subsets(c.labels()) {
            let clique = w.iter().all(|&u| w.iter().all(|&v| u >= v || faces.contains(&vec![u, v])));
            assert_eq!(faces.contains(&w), clique, "{c}: {w:?}");
        }
        // a complex sits inside its flag hull, equal exactly when flag
        assert!(label_faces(&c).is_subset(&faces));
        assert_eq!(label_faces(&c) == faces, c.is_flag());
    }
}

fn sparse(rows: &[Vec<i64>]) -> SparseMatrix {
    SparseMatrix::from_dense(rows)
}

fn field_kernel_check(rows: &[Vec<i64>], f: FieldSpec) {
    let m = sparse(rows);
    let kernel = m.kernel_basis(f);
    assert_eq!(m.rank(f) + kernel.len(), m.ncols(), "rank-nullity over {f}");
    for v in &kernel {
        for r in rows {
            let dot: num_bigint::BigInt = r.iter().zip(v).map(|(&a, b)| b * a).sum();
            match f.characteristic() {
                0 => assert!(dot == 0.into(), "kernel vector {v:?} over Q"),
                p => assert!(dot % p == 0.into(), "kernel vector {v:?} over GF({p})"),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ranks_agree_with_reference(rows in arb_matrix(7, 7)) {
        let m = sparse(&rows);
        prop_assert_eq!(m.rank(FieldSpec::Gf2), gf2_rank_by_span(&rows));
        prop_assert_eq!(m.rank(FieldSpec::Rational), rational_rank(&rows));
        let cols = rows[0].len();
        prop_assert_eq!(1usize << (cols - m.rank(FieldSpec::Gf2)), gf2_kernel_size(&rows, cols));
        // reduction mod p can only lose rank
        for p in [2u32, 3, 5, 7] {
            prop_assert!(m.rank(FieldSpec::gfp(p).unwrap()) <= m.rank(FieldSpec::Rational));
        }
        for f in FIELDS {
            field_kernel_check(&rows, f);
        }
    }

    #[test]
    fn graph_connectivity_matches_removal(g in arb_graph(8)) {
        let k = g.vertex_connectivity();
        prop_assert_eq!(k, graph_kappa(&g));
        prop_assert!(k <= g.min_degree() || g.num_vertices() == 1);
        if let Some(sep) = g.minimum_separator() {
            prop_assert_eq!(sep.len(), k);
        }
        for j in 0..=g.num_vertices() + 1 {
            prop_assert_eq!(g.is_k_connected(j), g.num_vertices() >= j && k >= j);
        }
    }

    #[test]
    fn hochster_matches_k_polynomial(c in arb_complex(7, 6)) {
        // sum_i (-1)^i b_{i,j} is the t^j coefficient of the K-polynomial
        let kp = k_polynomial(&c);
        for f in FIELDS {
            let t = hochster_table(&c, f).unwrap();
            let mut alt = vec![0i64; c.num_vertices() + 1];
            for ((i, j), b) in t.entries() {
                alt[j] += if i % 2 == 0 { b as i64 } else { -(b as i64) };
            }
            prop_assert_eq!(&alt, &kp, "{} over {}", c, f);
        }
    }

    #[test]
    fn banner_predicates_match_definition(c in arb_complex(7, 5)) {
        let violations = brute_banner_violations(&c);
        let r = is_banner(&c);
        prop_assert_eq!(r.is_banner, violations.is_empty());
        // the witness is the least violation by size, then lexicographically
        let least = violations.iter().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).cloned();
        prop_assert_eq!(r.witness, least);
        prop_assert!(banner_number(&c).is_ok());
        let got: BTreeSet<Vec<u32>> = c.minimal_nonfaces().into_iter().map(|f| c.face_labels(f)).collect();
        prop_assert_eq!(got, brute_minimal_nonfaces(&c));
    }

    #[test]
    fn connectivity_matches_removal_on_complexes(c in arb_complex(8, 8)) {
        prop_assert_eq!(c.underlying_graph().vertex_connectivity(), complex_kappa(&c));
    }

    #[test]
    fn homology_ranks_satisfy_euler_and_rank_nullity(c in arb_complex(7, 6)) {
        let chi = c.f_vector().reduced_euler_characteristic();
        for f in FIELDS {
            let h = reduced_homology(&c, f);
            prop_assert_eq!(h.euler_characteristic(), chi, "{} over {}", c, f);
        }
        for k in 0..=c.max_facet_len() {
            let m = scx_core::homology::boundary_matrix(&c, k);
            for f in FIELDS {
                prop_assert_eq!(m.rank(f) + m.kernel_basis(f).len(), m.ncols());
            }
        }
    }
}
