//! Checks each connectivity and Betti-table result on a concrete complex.
//!
//! Every check produces a [`TheoremEntry`] saying whether its hypotheses
//! hold (and if not, why), what was computed, and whether the conclusion
//! holds. Checks never skip silently.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::{max_b_index, property_a, property_b, strand_stats, BettiTable, Convention, PropertyA, StrandStats};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::InducedHomology;
use crate::linalg::FieldSpec;
use crate::structure::{banner_number, is_banner, is_minimal_cycle, is_pseudomanifold, BannerReport, MinimalCycleCheck};

pub const SCHEMA: &str = "scx/1";

/// Names accepted by [`verify_selected`], in report order.
pub const THEOREM_NAMES: [&str; 12] = [
    "connectivity_linear_strand",
    "strand_difference",
    "connectivity_from_strands",
    "poincare_inequality",
    "banner_link_monotonicity",
    "banner_homology_size",
    "banner_strand_property",
    "banner_connectivity",
    "flag_banner_connectivity",
    "gorenstein_koszul_regularity",
    "pseudomanifold_connectivity",
    "flag_pseudomanifold_connectivity",
];

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremEntry {
    pub name: String,
    pub statement: String,
    pub applicable: bool,
    /// Why the hypotheses fail, when they do.
    pub reason: Option<String>,
    pub hypotheses: BTreeMap<String, Value>,
    /// The conclusion with the computed numbers filled in.
    pub claim: Option<String>,
    pub computed: BTreeMap<String, Value>,
    /// Set only when applicable.
    pub pass: Option<bool>,
    pub witness: Option<Value>,
}

impl TheoremEntry {
    fn new(name: &str, statement: &str) -> Self {
        TheoremEntry {
            name: name.to_string(),
            statement: statement.to_string(),
            applicable: false,
            reason: None,
            hypotheses: BTreeMap::new(),
            claim: None,
            computed: BTreeMap::new(),
            pass: None,
            witness: None,
        }
    }

    fn hyp(mut self, key: &str, value: impl Serialize) -> Self {
        self.hypotheses.insert(key.to_string(), json!(value));
        self
    }

    fn val(mut self, key: &str, value: impl Serialize) -> Self {
        self.computed.insert(key.to_string(), json!(value));
        self
    }

    fn skip(mut self, reason: impl Into<String>) -> Self {
        self.applicable = false;
        self.reason = Some(reason.into());
        self
    }

    fn verdict(mut self, claim: String, pass: bool) -> Self {
        self.applicable = true;
        self.claim = Some(claim);
        self.pass = Some(pass);
        self
    }

    fn witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    /// Applicable and failed.
    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }
}

/// Everything the checks share, computed once per (complex, field).
pub struct Analysis<'a> {
    pub complex: &'a SimplicialComplex,
    pub field: FieldSpec,
    pub convention: Convention,
    pub graph: Graph,
    pub kappa: usize,
    /// A minimum separating set, absent for complete graphs.
    pub separator: Option<Face>,
    pub induced: InducedHomology,
    pub table: BettiTable,
    pub stats: StrandStats,
    /// `rank H̃_k(Δ)` from degree -1.
    pub homology: Vec<usize>,
    pub is_flag: bool,
    pub is_pure: bool,
    pub is_pseudomanifold: bool,
    pub banner: BannerReport,
    pub minimal_cycle: Result<MinimalCycleCheck>,
}

// The gates hand a finished, skipped entry back through `Err`; it is the
// return value, not an error travelling up the stack.
#[allow(clippy::result_large_err)]
impl<'a> Analysis<'a> {
    /// Runs the `2^n` induced-homology sweep on the current rayon pool, so
    /// `n` is bounded by `cap`.
    pub fn new(complex: &'a SimplicialComplex, field: FieldSpec, convention: Convention, cap: usize) -> Result<Self> {
        let induced = InducedHomology::compute(complex, field, cap)?;
        let table = BettiTable::from_induced(&induced);
        let graph = complex.underlying_graph();
        let separator = graph.minimum_separator();
        Ok(Analysis {
            complex,
            field,
            convention,
            kappa: graph.vertex_connectivity(),
            separator,
            homology: induced.ranks(complex.vertex_set()).iter().map(|&r| r as usize).collect(),
            stats: strand_stats(&table),
            table,
            induced,
            graph,
            is_flag: complex.is_flag(),
            is_pure: complex.is_pure(),
            is_pseudomanifold: is_pseudomanifold(complex),
            banner: is_banner(complex),
            minimal_cycle: is_minimal_cycle(complex, field),
        })
    }

    fn n(&self) -> usize {
        self.complex.num_vertices()
    }

    /// `d` with `d - 1` the dimension.
    fn d(&self) -> usize {
        self.complex.max_facet_len()
    }

    fn top_homology(&self) -> usize {
        self.homology.last().copied().unwrap_or(0)
    }

    fn labels(&self, f: Face) -> Vec<u32> {
        self.complex.face_labels(f)
    }

    fn separator_json(&self) -> Value {
        match self.separator {
            Some(s) => json!(self.labels(s)),
            None => Value::Null,
        }
    }

    /// Theorem checks need dimension at least one.
    fn dimension_gate(&self, e: TheoremEntry) -> std::result::Result<TheoremEntry, TheoremEntry> {
        let dim = self.complex.dim();
        let e = e.hyp("dim", dim);
        if dim < 1 {
            Err(e.skip(format!("dimension {dim} is below 1")))
        } else {
            Ok(e)
        }
    }

    fn minimal_cycle_gate(&self, e: TheoremEntry) -> std::result::Result<TheoremEntry, TheoremEntry> {
        match &self.minimal_cycle {
            Ok(m) if m.is_minimal_cycle => Ok(e.hyp("minimal_cycle", true)),
            Ok(m) => Err(e.hyp("minimal_cycle", false).skip(if m.cycle_space_dim != 1 {
                format!("not a minimal cycle over {}: top cycle space has dimension {}", self.field, m.cycle_space_dim)
            } else {
                format!("not a minimal cycle over {}: the cycle misses {} facets", self.field, m.unsupported.len())
            })),
            Err(err) => Err(e.hyp("minimal_cycle", false).skip(format!("not a minimal cycle: {err}"))),
        }
    }

    fn connectivity_verdict(&self, e: TheoremEntry, bound: usize) -> TheoremEntry {
        let pass = self.graph.is_k_connected(bound);
        let e = e
            .val("kappa", self.kappa)
            .val("n", self.n())
            .val("bound", bound)
            .val("tight", self.kappa == bound)
            .verdict(format!("graph is {bound}-connected (kappa = {}, n = {})", self.kappa, self.n()), pass);
        if pass {
            e
        } else {
            e.witness(json!({ "separator": self.separator_json() }))
        }
    }

    /// Shared hypotheses for the strand checks: regularity at least 2,
    /// property 𝔄 and `s >= 1`.
    fn strand_hypotheses(&self, mut e: TheoremEntry) -> std::result::Result<(TheoremEntry, PropertyA, usize), TheoremEntry> {
        let r = self.stats.regularity;
        let a = property_a(&self.table, self.convention);
        let other = match self.convention {
            Convention::Literal => Convention::Shifted,
            Convention::Shifted => Convention::Literal,
        };
        let s = max_b_index(&self.table);
        e = e
            .hyp("regularity", r)
            .hyp("property_a", &a)
            .hyp("property_a_other_convention", json!({ "convention": other, "holds": property_a(&self.table, other).holds }))
            .hyp("s", s);
        if r < 2 {
            return Err(e.skip(format!("regularity {r} is below 2")));
        }
        if !a.holds {
            let why = if !a.condition1 {
                format!("lp_2 = {} exceeds m = {}", a.lp2, a.m)
            } else {
                let c = &a.comparisons[a.violating_i.expect("a comparison failed")];
                format!("comparison at i = {} gives {} > {}", c.i, c.lhs, c.rhs)
            };
            return Err(e.skip(format!("property A fails under the {} convention: {why}", self.convention)));
        }
        if s == 0 {
            return Err(e.skip("property B_1 fails (s = 0)"));
        }
        Ok((e, a, s))
    }

    pub fn connectivity_linear_strand(&self) -> TheoremEntry {
        let e = TheoremEntry::new(THEOREM_NAMES[0], "kappa(G) + lp_2 = n - 1, with lp_2 the length of the linear strand");
        let e = match self.dimension_gate(e) {
            Ok(e) => e,
            Err(e) => return e,
        };
        let (k, lp2, n) = (self.kappa, self.stats.lp[&2], self.n());
        e.hyp("n", n)
            .val("kappa", k)
            .val("lp_2", lp2)
            .verdict(format!("{k} + {lp2} = {}", n - 1), k + lp2 == n - 1)
            .witness(json!({ "separator": self.separator_json() }))
    }

    pub fn strand_difference(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[1],
            "if the regularity r is at least 2 and properties A and B_s hold, then s <= lp_r - lp_2",
        );
        let e = match self.dimension_gate(e).and_then(|e| self.strand_hypotheses(e)) {
            Ok(x) => x,
            Err(e) => return e,
        };
        let (e, a, s) = e;
        let diff = a.m as i64 - a.lp2 as i64;
        let pass = s as i64 <= diff;
        let e = e
            .val("s", s)
            .val("lp_r", a.m)
            .val("lp_2", a.lp2)
            .verdict(format!("{s} <= {} - {}", a.m, a.lp2), pass);
        if pass {
            e
        } else {
            e.witness(json!({ "s": s, "lp_r": a.m, "lp_2": a.lp2 }))
        }
    }

    pub fn connectivity_from_strands(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[2],
            "a (d-1)-complex with nonzero top homology whose face ring has properties A and B_s has a (d+s-1)-connected graph",
        );
        let e = match self.dimension_gate(e) {
            Ok(e) => e,
            Err(e) => return e,
        };
        let top = self.top_homology();
        let e = e.hyp("top_homology_rank", top);
        if top == 0 {
            return e.skip(format!("top homology vanishes over {}", self.field));
        }
        let (e, _, s) = match self.strand_hypotheses(e) {
            Ok(x) => x,
            Err(e) => return e,
        };
        self.connectivity_verdict(e, self.d() + s - 1)
    }

    pub fn poincare_inequality(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[3],
            "for a minimal d-cycle S and every vertex set W, rank H_0(S_W) <= rank H_{d-1}(S_{V-W})",
        );
        let e = match self.dimension_gate(e).and_then(|e| self.minimal_cycle_gate(e)) {
            Ok(e) => e,
            Err(e) => return e,
        };
        let dim = self.complex.dim();
        let all = self.complex.vertex_set();
        let mut equalities = 0usize;
        let mut first_equality = None;
        let mut largest_slack: Option<(i64, Face)> = None;
        let mut violation = None;
        let subsets = self.induced.subsets();
        for &w in &subsets {
            let lhs = self.induced.rank(w, 0);
            let rhs = self.induced.rank(all.difference(w), dim - 1);
            if lhs > rhs {
                violation.get_or_insert((w, lhs, rhs));
            }
            if lhs == rhs && lhs > 0 {
                equalities += 1;
                first_equality.get_or_insert((w, lhs));
            }
            let slack = rhs as i64 - lhs as i64;
            if largest_slack.is_none_or(|(best, _)| slack > best) {
                largest_slack = Some((slack, w));
            }
        }
        let (slack, slack_w) = largest_slack.expect("at least the empty set");
        let e = e
            .val("subsets_checked", subsets.len())
            .val("nontrivial_equalities", equalities)
            .val(
                "first_equality",
                first_equality.map(|(w, r)| json!({ "W": self.labels(w), "rank": r })),
            )
            .val("largest_slack", json!({ "W": self.labels(slack_w), "slack": slack }))
            .verdict(format!("inequality holds for all {} subsets", subsets.len()), violation.is_none());
        match violation {
            None => e,
            Some((w, lhs, rhs)) => e.witness(json!({ "W": self.labels(w), "lhs": lhs, "rhs": rhs })),
        }
    }

    fn banner_number_gate(&self, e: TheoremEntry) -> std::result::Result<(TheoremEntry, usize), TheoremEntry> {
        match self.banner.banner_number {
            Some(b) => Ok((e.hyp("banner_number", b), b)),
            None => Err(e.skip("banner number does not exist")),
        }
    }

    pub fn banner_link_monotonicity(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[4],
            "for every face s of degree d, the banner number of lk(s) is at most max(0, b - |s|)",
        );
        let (e, b) = match self.dimension_gate(e).and_then(|e| self.banner_number_gate(e)) {
            Ok(x) => x,
            Err(e) => return e,
        };
        let d = self.d();
        let mut checked = 0;
        let mut violation = None;
        for sigma in self.complex.faces() {
            if self.complex.degree(sigma).expect("face") != d {
                continue;
            }
            checked += 1;
            let bound = b.saturating_sub(sigma.len());
            let link = self.complex.link(sigma).expect("face");
            match banner_number(&link) {
                Ok(bl) if bl <= bound => {}
                other => {
                    violation = Some(json!({
                        "face": self.labels(sigma),
                        "link_banner_number": other.ok(),
                        "bound": bound,
                    }));
                    break;
                }
            }
        }
        let e = e
            .val("faces_checked", checked)
            .verdict(format!("bound holds on all {checked} faces of degree {d}"), violation.is_none());
        match violation {
            None => e,
            Some(w) => e.witness(w),
        }
    }

    pub fn banner_homology_size(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[5],
            "if the top homology is nonzero and b < d - 2, every induced subcomplex with nonzero H_{d-2} has at least 2d - 2 - b vertices",
        );
        let (e, b) = match self.dimension_gate(e).and_then(|e| self.banner_number_gate(e)) {
            Ok(x) => x,
            Err(e) => return e,
        };
        let d = self.d();
        let top = self.top_homology();
        let e = e.hyp("top_homology_rank", top);
        if top == 0 {
            return e.skip(format!("top homology vanishes over {}", self.field));
        }
        if b + 2 >= d {
            return e.skip(format!("banner number {b} is not below d - 2 = {}", d as i64 - 2));
        }
        let bound = 2 * d - 2 - b;
        let carriers: Vec<Face> = self
            .induced
            .subsets()
            .into_iter()
            .filter(|&w| self.induced.rank(w, d as isize - 2) > 0)
            .collect();
        let smallest = carriers.first().copied();
        let e = e
            .val("bound", bound)
            .val("carriers", carriers.len())
            .val("min_size", smallest.map(Face::len))
            .val("smallest", smallest.map(|w| self.labels(w)));
        let pass = smallest.is_none_or(|w| w.len() >= bound);
        let claim = match smallest {
            Some(w) => format!("{} >= {bound}", w.len()),
            None => format!("no induced subcomplex has nonzero H_{}", d - 2),
        };
        let e = e.verdict(claim, pass);
        if pass {
            e
        } else {
            e.witness(json!({ "W": smallest.map(|w| self.labels(w)) }))
        }
    }

    pub fn banner_strand_property(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[6],
            "a pure (d-1)-complex with nonzero top homology and b < d - 2 satisfies property B_{d-b-1}",
        );
        let (e, b) = match self.dimension_gate(e).and_then(|e| self.banner_number_gate(e)) {
            Ok(x) => x,
            Err(e) => return e,
        };
        let d = self.d();
        let top = self.top_homology();
        let e = e.hyp("pure", self.is_pure).hyp("top_homology_rank", top);
        if !self.is_pure {
            return e.skip("complex is not pure");
        }
        if top == 0 {
            return e.skip(format!("top homology vanishes over {}", self.field));
        }
        if b + 2 >= d {
            return e.skip(format!("banner number {b} is not below d - 2 = {}", d as i64 - 2));
        }
        let s = d - b - 1;
        let pb = property_b(&self.table, s);
        let e = e
            .val("s", s)
            .val("regularity", pb.regularity)
            .val("t", &self.stats.t)
            .verdict(format!("B_{s} holds"), pb.holds);
        match pb.violating_i {
            None => e,
            Some(i) => e.witness(json!({ "i": i, "t_i": self.table.t(i) })),
        }
    }

    pub fn banner_connectivity(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[7],
            "the graph of a (d-1)-dimensional minimal cycle is (2d - b - 2)-connected",
        );
        let (e, b) = match self
            .dimension_gate(e)
            .and_then(|e| self.minimal_cycle_gate(e))
            .and_then(|e| self.banner_number_gate(e))
        {
            Ok(x) => x,
            Err(e) => return e,
        };
        let bound = (2 * self.d()).saturating_sub(b + 2);
        self.connectivity_verdict(e, bound)
    }

    pub fn flag_banner_connectivity(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[8],
            "the graph of a flag or banner (d-1)-dimensional minimal cycle is (2d - 2)-connected",
        );
        let e = match self.dimension_gate(e).and_then(|e| self.minimal_cycle_gate(e)) {
            Ok(e) => e,
            Err(e) => return e,
        };
        let e = e.hyp("flag", self.is_flag).hyp("banner", self.banner.is_banner);
        if !self.is_flag && !self.banner.is_banner {
            return e.skip("neither flag nor banner");
        }
        self.connectivity_verdict(e, 2 * self.d() - 2)
    }

    pub fn gorenstein_koszul_regularity(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[9],
            "for a flag complex with a Poincare-symmetric Betti table (a Gorenstein proxy), regularity <= projdim - lp_2 + 1",
        );
        let e = match self.dimension_gate(e) {
            Ok(e) => e,
            Err(e) => return e,
        };
        let symmetric = self.table.is_poincare_symmetric();
        let e = e.hyp("flag", self.is_flag).hyp("poincare_symmetric", symmetric);
        if !self.is_flag {
            return e.skip("not flag");
        }
        if !symmetric {
            return e.skip("Betti table is not Poincare-symmetric");
        }
        let (r, p, lp2) = (self.stats.regularity, self.stats.projdim, self.stats.lp[&2]);
        let bound = p as i64 - lp2 as i64 + 1;
        let pass = r as i64 <= bound;
        let e = e
            .val("regularity", r)
            .val("projdim", p)
            .val("lp_2", lp2)
            .val("tight", r as i64 == bound)
            .verdict(format!("{r} <= {p} - {lp2} + 1"), pass);
        if pass {
            e
        } else {
            e.witness(json!({ "regularity": r, "bound": bound }))
        }
    }

    pub fn pseudomanifold_connectivity(&self) -> TheoremEntry {
        let e = TheoremEntry::new(THEOREM_NAMES[10], "the graph of a (d-1)-pseudomanifold is d-connected");
        let e = match self.dimension_gate(e) {
            Ok(e) => e.hyp("pseudomanifold", self.is_pseudomanifold),
            Err(e) => return e,
        };
        if !self.is_pseudomanifold {
            return e.skip("not a pseudomanifold");
        }
        self.connectivity_verdict(e, self.d())
    }

    pub fn flag_pseudomanifold_connectivity(&self) -> TheoremEntry {
        let e = TheoremEntry::new(
            THEOREM_NAMES[11],
            "the graph of a flag (d-1)-pseudomanifold is (2d - 2)-connected",
        );
        let e = match self.dimension_gate(e) {
            Ok(e) => e.hyp("pseudomanifold", self.is_pseudomanifold).hyp("flag", self.is_flag),
            Err(e) => return e,
        };
        if !self.is_pseudomanifold {
            return e.skip("not a pseudomanifold");
        }
        if !self.is_flag {
            return e.skip("not flag");
        }
        self.connectivity_verdict(e, 2 * self.d() - 2)
    }

    /// Runs one check by name.
    pub fn run(&self, name: &str) -> Result<TheoremEntry> {
        Ok(match name {
            "connectivity_linear_strand" => self.connectivity_linear_strand(),
            "strand_difference" => self.strand_difference(),
            "connectivity_from_strands" => self.connectivity_from_strands(),
            "poincare_inequality" => self.poincare_inequality(),
            "banner_link_monotonicity" => self.banner_link_monotonicity(),
            "banner_homology_size" => self.banner_homology_size(),
            "banner_strand_property" => self.banner_strand_property(),
            "banner_connectivity" => self.banner_connectivity(),
            "flag_banner_connectivity" => self.flag_banner_connectivity(),
            "gorenstein_koszul_regularity" => self.gorenstein_koszul_regularity(),
            "pseudomanifold_connectivity" => self.pseudomanifold_connectivity(),
            "flag_pseudomanifold_connectivity" => self.flag_pseudomanifold_connectivity(),
            other => {
                return Err(Error::ParameterOutOfRange(format!(
                    "unknown theorem {other:?}; known: {}",
                    THEOREM_NAMES.join(", ")
                )))
            }
        })
    }

    /// Invariants of the complex that the checks rely on.
    pub fn facts(&self) -> Facts {
        Facts {
            f_vector: self.complex.f_vector().by_cardinality().to_vec(),
            pure: self.is_pure,
            flag: self.is_flag,
            pseudomanifold: self.is_pseudomanifold,
            homology: self.homology.clone(),
            kappa: self.kappa,
            separator: self.separator.map(|s| self.labels(s)),
            banner: self.banner.clone(),
            minimal_cycle: match &self.minimal_cycle {
                Ok(m) => json!(m.is_minimal_cycle),
                Err(e) => json!(e.to_string()),
            },
            poincare_symmetric: self.table.is_poincare_symmetric(),
            betti: self.table.clone(),
            stats: self.stats.clone(),
        }
    }
}

/// Summary invariants recorded alongside the checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Facts {
    /// Face counts by cardinality, starting with the empty face.
    pub f_vector: Vec<usize>,
    pub pure: bool,
    pub flag: bool,
    pub pseudomanifold: bool,
    /// Reduced homology ranks from degree -1.
    pub homology: Vec<usize>,
    pub kappa: usize,
    pub separator: Option<Vec<u32>>,
    pub banner: BannerReport,
    /// `true`/`false`, or the reason the test does not apply.
    pub minimal_cycle: Value,
    pub poincare_symmetric: bool,
    pub betti: BettiTable,
    pub stats: StrandStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    /// Caller-chosen identifier; defaults to the facet list.
    pub complex: String,
    pub field: FieldSpec,
    pub convention: Convention,
    pub n: usize,
    pub dim: isize,
    pub facts: Facts,
    pub summary: Summary,
    pub entries: Vec<TheoremEntry>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Runs the named checks (all of them for `None`). The checks run in
/// parallel; entries keep the order of [`THEOREM_NAMES`] filtered by the
/// selection.
pub fn verify_selected(
    complex: &SimplicialComplex,
    field: FieldSpec,
    convention: Convention,
    cap: usize,
    names: Option<&[String]>,
) -> Result<VerificationReport> {
    let selected: Vec<&str> = match names {
        None => THEOREM_NAMES.to_vec(),
        Some(names) => {
            for n in names {
                if !THEOREM_NAMES.contains(&n.as_str()) {
                    return Err(Error::ParameterOutOfRange(format!(
                        "unknown theorem {n:?}; known: {}",
                        THEOREM_NAMES.join(", ")
                    )));
                }
            }
            THEOREM_NAMES.iter().copied().filter(|t| names.iter().any(|n| n == t)).collect()
        }
    };
    let analysis = Analysis::new(complex, field, convention, cap)?;
    let entries: Vec<TheoremEntry> = selected
        .par_iter()
        .map(|name| analysis.run(name).expect("name validated"))
        .collect();
    let summary = Summary {
        checks: entries.len(),
        applicable: entries.iter().filter(|e| e.applicable).count(),
        passed: entries.iter().filter(|e| e.pass == Some(true)).count(),
        failed: entries.iter().filter(|e| e.failed()).count(),
    };
    Ok(VerificationReport {
        schema: SCHEMA,
        complex: complex.to_string(),
        field,
        convention,
        n: complex.num_vertices(),
        dim: complex.dim(),
        facts: analysis.facts(),
        summary,
        entries,
    })
}

pub fn verify_all(
    complex: &SimplicialComplex,
    field: FieldSpec,
    convention: Convention,
    cap: usize,
) -> Result<VerificationReport> {
    verify_selected(complex, field, convention, cap, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::ComplexFamily;
    use crate::DEFAULT_VERTEX_CAP;

    fn gen(s: &str) -> SimplicialComplex {
        s.parse::<ComplexFamily>().unwrap().generate().unwrap()
    }

    fn report(s: &str, field: FieldSpec, convention: Convention) -> VerificationReport {
        verify_all(&gen(s), field, convention, DEFAULT_VERTEX_CAP).unwrap()
    }

    fn entry<'a>(r: &'a VerificationReport, name: &str) -> &'a TheoremEntry {
        r.entries.iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn octahedron_passes_everything_applicable() {
        let r = report("cross_polytope 3", FieldSpec::Gf2, Convention::Shifted);
        assert!(r.all_passed(), "{:#?}", r.entries);
        for name in THEOREM_NAMES {
            let e = entry(&r, name);
            assert!(e.applicable, "{name}: {:?}", e.reason);
        }
        assert_eq!(entry(&r, "strand_difference").claim.as_deref(), Some("2 <= 3 - 1"));
        assert_eq!(entry(&r, "banner_homology_size").computed["min_size"], 4);
        let p = entry(&r, "poincare_inequality");
        assert_eq!(p.computed["first_equality"]["W"], json!([1, 4]));
        assert_eq!(entry(&r, "flag_banner_connectivity").computed["tight"], true);
    }

    #[test]
    fn tetrahedron_boundary() {
        let r = report("simplex_boundary 3", FieldSpec::Rational, Convention::Shifted);
        assert!(r.all_passed());
        assert_eq!(entry(&r, "connectivity_linear_strand").claim.as_deref(), Some("3 + 0 = 3"));
        assert_eq!(entry(&r, "strand_difference").claim.as_deref(), Some("1 <= 1 - 0"));
        let f = entry(&r, "flag_banner_connectivity");
        assert!(!f.applicable);
        assert_eq!(f.reason.as_deref(), Some("neither flag nor banner"));
        assert!(!entry(&r, "banner_homology_size").applicable);
    }

    #[test]
    fn literal_convention_is_recorded_not_hidden() {
        // with the literal reading, m sits on the empty row below the top strand
        let r = report("simplex_boundary 3", FieldSpec::Gf2, Convention::Literal);
        let e = entry(&r, "strand_difference");
        assert_eq!(e.pass, Some(false));
        assert!(e.witness.is_some());
    }

    #[test]
    fn full_simplex_has_nothing_to_check() {
        let c = SimplicialComplex::from_facets([[1, 2, 3]]).unwrap();
        let r = verify_all(&c, FieldSpec::Gf2, Convention::Shifted, 20).unwrap();
        assert_eq!(r.summary.failed, 0);
        // only the identity and the link bound have no further hypotheses
        assert_eq!(r.summary.applicable, 2);
        assert!(entry(&r, "connectivity_linear_strand").applicable);
        assert!(entry(&r, "banner_link_monotonicity").applicable);
    }

    #[test]
    fn low_dimension_gate() {
        let c = SimplicialComplex::from_facets([[1], [2]]).unwrap();
        let r = verify_all(&c, FieldSpec::Gf2, Convention::Shifted, 20).unwrap();
        assert_eq!(r.summary.applicable, 0);
        assert!(r.entries.iter().all(|e| e.reason.as_deref() == Some("dimension 0 is below 1")));
    }

    #[test]
    fn field_changes_the_gates() {
        let gf2 = report("rp2_6", FieldSpec::Gf2, Convention::Shifted);
        let q = report("rp2_6", FieldSpec::Rational, Convention::Shifted);
        assert!(entry(&gf2, "banner_connectivity").applicable);
        assert!(!entry(&q, "banner_connectivity").applicable);
        assert!(gf2.all_passed() && q.all_passed());
    }

    #[test]
    fn selection_and_unknown_names() {
        let c = gen("cycle 5");
        let names = vec!["pseudomanifold_connectivity".to_string()];
        let r = verify_selected(&c, FieldSpec::Gf2, Convention::Shifted, 20, Some(&names)).unwrap();
        assert_eq!(r.entries.len(), 1);
        let bad = vec!["nope".to_string()];
        assert!(verify_selected(&c, FieldSpec::Gf2, Convention::Shifted, 20, Some(&bad)).is_err());
    }
}
