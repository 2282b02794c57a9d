//! Standard families of complexes: simplex boundaries, cross-polytopes,
//! cycles, cones, suspensions, joins, clique complexes, a six-vertex
//! projective plane and seeded random flag complexes.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{SimplicialComplex, HARD_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::reduced_homology;
use crate::linalg::FieldSpec;

/// A parameterized description of a complex. Composite families nest.
///
/// The textual form is prefix notation, e.g. `suspension cycle 5` or
/// `join cycle 4 simplex_boundary 2`, and round-trips through
/// [`ComplexFamily::from_str`].
#[derive(Clone, Debug, PartialEq)]
pub enum ComplexFamily {
    /// All `d`-subsets of `[d+1]`.
    SimplexBoundary(usize),
    /// Boundary of the `d`-dimensional cross-polytope on antipodal pairs `{i, i+d}`.
    CrossPolytope(usize),
    /// The `n`-gon.
    Cycle(usize),
    Cone(Box<ComplexFamily>),
    Suspension(Box<ComplexFamily>),
    Join(Box<ComplexFamily>, Box<ComplexFamily>),
    CliqueOf(Graph),
    /// A six-vertex triangulation of the real projective plane.
    Rp2Six,
    /// `∂Δ_d` together with one extra facet `F ∪ {a, b}`, where `F` is a
    /// facet of `∂Δ_d` and `a, b` are new vertices.
    RemarkComplex(usize),
    /// Clique complex of an Erdős–Rényi graph on `n` vertices.
    RandomFlag { n: usize, p: f64, seed: u64 },
}

/// Facets of the projective plane, checked by [`validate_rp2`] on every use.
const RP2_FACETS: [[u32; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [2, 4, 5],
    [2, 4, 6],
    [3, 4, 6],
    [3, 5, 6],
];

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

fn build(facets: Vec<Vec<u32>>) -> Result<SimplicialComplex> {
    SimplicialComplex::from_facets_with_cap(facets, HARD_VERTEX_CAP).map_err(|e| match e {
        Error::TooManyVertices { found, limit } => {
            out_of_range(format!("family would have {found} vertices, more than {limit}"))
        }
        other => other,
    })
}

fn max_label(c: &SimplicialComplex) -> u32 {
    c.labels().last().copied().unwrap_or(0)
}

impl ComplexFamily {
    /// The seed, when the family is random or contains a random part.
    pub fn seed(&self) -> Option<u64> {
        match self {
            ComplexFamily::RandomFlag { seed, .. } => Some(*seed),
            ComplexFamily::Cone(a) | ComplexFamily::Suspension(a) => a.seed(),
            ComplexFamily::Join(a, b) => a.seed().or_else(|| b.seed()),
            _ => None,
        }
    }

    pub fn generate(&self) -> Result<SimplicialComplex> {
        match self {
            ComplexFamily::SimplexBoundary(d) => {
                let d = *d as u32;
                if d < 1 || d as usize >= HARD_VERTEX_CAP {
                    return Err(out_of_range(format!("simplex_boundary needs 1 <= d < {HARD_VERTEX_CAP}")));
                }
                build((1..=d + 1).map(|skip| (1..=d + 1).filter(|&v| v != skip).collect()).collect())
            }
            ComplexFamily::CrossPolytope(d) => {
                let d = *d as u32;
                if d < 1 || 2 * d as usize > HARD_VERTEX_CAP {
                    return Err(out_of_range(format!(
                        "cross_polytope needs 1 <= d <= {}",
                        HARD_VERTEX_CAP / 2
                    )));
                }
                // bit i of the mask picks i+1 or its antipode i+1+d
                let facets = (0u32..1 << d)
                    .map(|mask| (0..d).map(|i| if mask >> i & 1 == 0 { i + 1 } else { i + 1 + d }).collect())
                    .collect();
                build(facets)
            }
            ComplexFamily::Cycle(n) => {
                let n = *n as u32;
                if n < 3 || n as usize > HARD_VERTEX_CAP {
                    return Err(out_of_range(format!("cycle needs 3 <= n <= {HARD_VERTEX_CAP}")));
                }
                build((1..=n).map(|i| vec![i, i % n + 1]).collect())
            }
            ComplexFamily::Cone(a) => {
                let a = a.generate()?;
                let apex = max_label(&a) + 1;
                build(a.facet_labels().into_iter().map(|mut f| {
                    f.push(apex);
                    f
                }).collect())
            }
            ComplexFamily::Suspension(a) => {
                let a = a.generate()?;
                let top = max_label(&a);
                let poles = SimplicialComplex::from_facets([[top + 1], [top + 2]])?;
                join(&a, &poles, 0)
            }
            ComplexFamily::Join(a, b) => {
                let a = a.generate()?;
                let b = b.generate()?;
                let offset = max_label(&a);
                join(&a, &b, offset)
            }
            ComplexFamily::CliqueOf(g) => {
                if g.num_vertices() == 0 {
                    return Err(out_of_range("clique_of needs a graph with at least one vertex"));
                }
                Ok(SimplicialComplex::clique_complex(g))
            }
            ComplexFamily::Rp2Six => {
                let c = build(RP2_FACETS.iter().map(|f| f.to_vec()).collect())?;
                validate_rp2(&c)?;
                Ok(c)
            }
            ComplexFamily::RemarkComplex(d) => {
                let d = *d as u32;
                if d < 2 || d as usize + 3 > HARD_VERTEX_CAP {
                    return Err(out_of_range(format!("remark_complex needs 2 <= d <= {}", HARD_VERTEX_CAP - 3)));
                }
                let mut facets: Vec<Vec<u32>> = (1..=d + 1).map(|skip| (1..=d + 1).filter(|&v| v != skip).collect()).collect();
                // the facet missing d+1, joined with the new edge
                facets.push((1..=d).chain([d + 2, d + 3]).collect());
                build(facets)
            }
            ComplexFamily::RandomFlag { n, p, seed } => {
                if *n < 1 || *n > HARD_VERTEX_CAP {
                    return Err(out_of_range(format!("random_flag needs 1 <= n <= {HARD_VERTEX_CAP}")));
                }
                if !(0.0..=1.0).contains(p) {
                    return Err(out_of_range("random_flag needs 0 <= p <= 1"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut g = Graph::new(*n);
                for u in 0..*n {
                    for v in u + 1..*n {
                        if rng.gen_bool(*p) {
                            g.add_edge(u, v);
                        }
                    }
                }
                Ok(SimplicialComplex::clique_complex(&g))
            }
        }
    }

    /// Parses a prefix-notation token stream, consuming exactly one family.
    pub fn parse_tokens<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<Self> {
        fn next<'a>(tokens: &mut impl Iterator<Item = &'a str>, what: &str) -> Result<&'a str> {
            tokens.next().ok_or_else(|| out_of_range(format!("missing {what}")))
        }
        fn num<T: FromStr>(tokens: &mut impl Iterator<Item = impl AsRef<str>>, what: &str) -> Result<T> {
            let t = tokens.next().ok_or_else(|| out_of_range(format!("missing {what}")))?;
            t.as_ref()
                .parse()
                .map_err(|_| out_of_range(format!("{what}: cannot parse {:?}", t.as_ref())))
        }
        let name = next(tokens, "family name")?;
        Ok(match name {
            "simplex_boundary" => ComplexFamily::SimplexBoundary(num(tokens, "simplex_boundary d")?),
            "cross_polytope" => ComplexFamily::CrossPolytope(num(tokens, "cross_polytope d")?),
            "cycle" => ComplexFamily::Cycle(num(tokens, "cycle n")?),
            "cone" => ComplexFamily::Cone(Box::new(Self::parse_tokens(tokens)?)),
            "suspension" => ComplexFamily::Suspension(Box::new(Self::parse_tokens(tokens)?)),
            "join" => {
                let a = Self::parse_tokens(tokens)?;
                let b = Self::parse_tokens(tokens)?;
                ComplexFamily::Join(Box::new(a), Box::new(b))
            }
            "clique_of" => ComplexFamily::CliqueOf(parse_edge_list(next(tokens, "clique_of edge list")?)?),
            "rp2_6" => ComplexFamily::Rp2Six,
            "remark_complex" => ComplexFamily::RemarkComplex(num(tokens, "remark_complex d")?),
            "random_flag" => ComplexFamily::RandomFlag {
                n: num(tokens, "random_flag n")?,
                p: num(tokens, "random_flag p")?,
                seed: num(tokens, "random_flag seed")?,
            },
            other => return Err(out_of_range(format!("unknown family {other:?}"))),
        })
    }
}

/// `1-2,2-3,3-1` style edge list; vertices are the labels that occur.
fn parse_edge_list(s: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (u, v) = part
            .split_once('-')
            .ok_or_else(|| out_of_range(format!("edge {part:?} is not of the form u-v")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .ok()
                .filter(|&l| l > 0)
                .ok_or_else(|| out_of_range(format!("bad vertex label {x:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(out_of_range(format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(out_of_range("clique_of needs at least one edge"));
    }
    let mut labels: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() > HARD_VERTEX_CAP {
        return Err(out_of_range(format!("graph has more than {HARD_VERTEX_CAP} vertices")));
    }
    let mut g = Graph::with_labels(labels.clone());
    for (u, v) in edges {
        let idx = |l| labels.binary_search(&l).expect("label collected");
        g.add_edge(idx(u), idx(v));
    }
    Ok(g)
}

fn join(a: &SimplicialComplex, b: &SimplicialComplex, offset: u32) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for f in a.facet_labels() {
        for g in b.facet_labels() {
            facets.push(f.iter().copied().chain(g.iter().map(|&l| l + offset)).collect::<Vec<_>>());
        }
    }
    build(facets)
}

/// Checks the invariants that pin down the projective plane: 10 triangles,
/// 15 edges, complete graph on 6 vertices, every edge in two triangles,
/// reduced Euler characteristic 0, homology `(0, 1, 1)` in degrees 0..2 over
/// GF(2) and acyclic over Q.
pub fn validate_rp2(c: &SimplicialComplex) -> Result<()> {
    let fail = |what: &str| Err(Error::GeneratorValidation(format!("rp2_6: {what}")));
    let f = c.f_vector();
    if f.by_cardinality() != [1, 6, 15, 10] {
        return fail(&format!("f-vector {:?}, expected [1, 6, 15, 10]", f.by_cardinality()));
    }
    if !c.underlying_graph().is_complete() {
        return fail("graph is not K_6");
    }
    for edge in c.faces_of_card(2) {
        let count = c.facets().iter().filter(|t| edge.is_subset(**t)).count();
        if count != 2 {
            return fail(&format!("edge {:?} lies in {count} triangles", c.face_labels(edge)));
        }
    }
    if f.reduced_euler_characteristic() != 0 {
        return fail("reduced Euler characteristic is not 0");
    }
    if reduced_homology(c, FieldSpec::Gf2).ranks() != [0, 0, 1, 1] {
        return fail("GF(2) homology is not (0, 1, 1)");
    }
    if !reduced_homology(c, FieldSpec::Rational).is_acyclic() {
        return fail("rational homology is not trivial");
    }
    Ok(())
}

impl FromStr for ComplexFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let family = Self::parse_tokens(&mut tokens)?;
        match tokens.next() {
            None => Ok(family),
            Some(extra) => Err(out_of_range(format!("unexpected token {extra:?}"))),
        }
    }
}

impl fmt::Display for ComplexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexFamily::SimplexBoundary(d) => write!(f, "simplex_boundary {d}"),
            ComplexFamily::CrossPolytope(d) => write!(f, "cross_polytope {d}"),
            ComplexFamily::Cycle(n) => write!(f, "cycle {n}"),
            ComplexFamily::Cone(a) => write!(f, "cone {a}"),
            ComplexFamily::Suspension(a) => write!(f, "suspension {a}"),
            ComplexFamily::Join(a, b) => write!(f, "join {a} {b}"),
            ComplexFamily::CliqueOf(g) => {
                let edges: Vec<String> = g
                    .edges()
                    .into_iter()
                    .map(|(u, v)| format!("{}-{}", g.labels()[u], g.labels()[v]))
                    .collect();
                write!(f, "clique_of {}", edges.join(","))
            }
            ComplexFamily::Rp2Six => write!(f, "rp2_6"),
            ComplexFamily::RemarkComplex(d) => write!(f, "remark_complex {d}"),
            ComplexFamily::RandomFlag { n, p, seed } => write!(f, "random_flag {n} {p} {seed}"),
        }
    }
}
