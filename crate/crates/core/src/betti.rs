//! Graded Betti numbers of Stanley-Reisner rings via Hochster's formula,
//! together with the strand statistics read off a Betti table.
//!
//! `b_{i,j}` is the sum over all vertex sets `W` with `|W| = j` of
//! `rank H̃_{j-i-1}(Δ_W)`. No resolution is ever built.
//!
//! Two row conventions are supported for the length `lp_j` of a row.
//! [`Convention::Literal`] reads row `j` as the entries `b_{i,i+j-1}`, so that
//! `lp_2` measures the linear strand. [`Convention::Shifted`] reads it as
//! `b_{i,i+j}`, which puts the top strand of a complex with nonvanishing top
//! homology at `lp_d = n - d`. The linear strand `lp_2` is always taken in the
//! literal sense.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::homology::{InducedHomology, InducedSweep};
use crate::linalg::FieldSpec;

/// How a row index `j` maps onto Betti table entries when measuring `lp_j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `lp_j = max{i : b_{i,i+j-1} != 0}`.
    Literal,
    /// `lp_j = max{i : b_{i,i+j} != 0}`.
    #[default]
    Shifted,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Literal => "literal",
            Convention::Shifted => "shifted",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "literal" => Ok(Convention::Literal),
            "shifted" => Ok(Convention::Shifted),
            other => Err(Error::ParameterOutOfRange(format!(
                "unknown convention {other:?}, expected literal or shifted"
            ))),
        }
    }
}

/// Sparse graded Betti table of a face ring over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    /// An all-zero table, to be filled with [`BettiTable::add`].
    pub fn new(field: FieldSpec, n: usize) -> Self {
        BettiTable {
            field,
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Number of variables, i.e. vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `b_{i,j}`; zero for negative or absent indices.
    pub fn get(&self, i: isize, j: isize) -> u64 {
        if i < 0 || j < 0 {
            return 0;
        }
        self.entries.get(&(i as usize, j as usize)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), b_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&mut self, i: usize, j: usize, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_default() += b;
        }
    }

    /// Adds another partial table into this one. Both must be over the same
    /// field and number of variables.
    pub fn merge(&mut self, other: &BettiTable) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if self.n != other.n {
            return Err(Error::ParameterOutOfRange(format!(
                "tables over {} and {} variables",
                self.n, other.n
            )));
        }
        for ((i, j), b) in other.entries() {
            self.add(i, j, b);
        }
        Ok(())
    }

    /// Table read off the homology of all induced subcomplexes.
    pub fn from_induced(induced: &InducedHomology) -> Self {
        let mut t = BettiTable::new(induced.field(), induced.num_vertices());
        for w in 0..1u32 << induced.num_vertices() {
            let w = Face::from_bits(w);
            add_subset(&mut t.entries, w.len(), induced.ranks(w).iter().map(|&r| r as usize));
        }
        t
    }

    /// `max{i : b_{i,j} != 0 for some j}`.
    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `t_i = max{j : b_{i,j} != 0}`, zero if the column is empty.
    pub fn t(&self, i: usize) -> usize {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(&(_, j), _)| j)
            .max()
            .unwrap_or(0)
    }

    /// `max_i (t_i - i)`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Largest `i` with a nonzero entry on the diagonal `j - i = offset`, or 0.
    fn strand_length(&self, offset: isize) -> usize {
        self.entries
            .keys()
            .filter(|&&(i, j)| j as isize - i as isize == offset)
            .map(|&(i, _)| i)
            .max()
            .unwrap_or(0)
    }

    /// `lp_j` under the literal reading, `max{i : b_{i,i+j-1} != 0}`.
    pub fn lp_literal(&self, j: usize) -> usize {
        self.strand_length(j as isize - 1)
    }

    /// `lp_j` under the shifted reading, `max{i : b_{i,i+j} != 0}`.
    pub fn lp_shifted(&self, j: usize) -> usize {
        self.strand_length(j as isize)
    }

    pub fn lp(&self, j: usize, convention: Convention) -> usize {
        match convention {
            Convention::Literal => self.lp_literal(j),
            Convention::Shifted => self.lp_shifted(j),
        }
    }

    /// Length of the linear strand, `lp_2` in the literal reading.
    pub fn linear_strand_length(&self) -> usize {
        self.lp_literal(2)
    }

    /// Whether `b_{i,j} = b_{p-i,n-j}` for all `i, j`, with `p` the projective
    /// dimension. This is the Poincaré symmetry of a Gorenstein face ring
    /// whose top degree is `n`; it is only a proxy for Gorensteinness.
    pub fn is_poincare_symmetric(&self) -> bool {
        let p = self.projdim();
        self.entries().all(|((i, j), b)| {
            i <= p && j <= self.n && self.get((p - i) as isize, (self.n - j) as isize) == b
        })
    }

    /// Macaulay-style rendering: columns are homological degrees `i`, rows
    /// are `j - i`.
    pub fn render(&self) -> String {
        let p = self.projdim();
        let r = self.regularity();
        let cells: Vec<Vec<String>> = (0..=r)
            .map(|row| {
                (0..=p)
                    .map(|i| match self.get(i as isize, (i + row) as isize) {
                        0 => ".".to_string(),
                        b => b.to_string(),
                    })
                    .collect()
            })
            .collect();
        let totals: Vec<String> = (0..=p)
            .map(|i| {
                self.entries
                    .range((i, 0)..=(i, usize::MAX))
                    .map(|(_, &b)| b)
                    .sum::<u64>()
                    .to_string()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .chain(&totals)
            .map(String::len)
            .chain((0..=p).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = 7;
        let mut out = String::new();
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=p {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for (row, line) in cells.iter().enumerate() {
            let _ = write!(out, "{:>label$}", format!("{row}:"));
            for c in line {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            b: u64,
        }
        #[derive(Serialize)]
        struct Table {
            field: FieldSpec,
            n: usize,
            entries: Vec<Entry>,
        }
        Table {
            field: self.field,
            n: self.n,
            entries: self.entries().map(|((i, j), b)| Entry { i, j, b }).collect(),
        }
        .serialize(serializer)
    }
}

fn add_subset(entries: &mut BTreeMap<(usize, usize), u64>, j: usize, ranks: impl Iterator<Item = usize>) {
    // ranks start at degree -1, so position idx is degree idx - 1 and the
    // homological degree is j - (idx - 1) - 1 = j - idx
    for (idx, r) in ranks.enumerate() {
        if r > 0 {
            *entries.entry((j - idx, j)).or_default() += r as u64;
        }
    }
}

/// Hochster's formula with the default vertex cap.
pub fn hochster_table(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    hochster_table_capped(complex, field, DEFAULT_VERTEX_CAP)
}

/// Hochster's formula: sums homology ranks over all `2^n` induced
/// subcomplexes. The sweep runs on the current rayon pool; partial tables are
/// combined by addition, so the result does not depend on the partitioning.
pub fn hochster_table_capped(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    let n = complex.num_vertices();
    if n > cap.min(crate::HARD_VERTEX_CAP) {
        return Err(Error::TooManyVertices { found: n, limit: cap });
    }
    let sweep = InducedSweep::new(complex, field);
    let entries = (0..1u32 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, w| {
            let w = Face::from_bits(w);
            add_subset(&mut acc, w.len(), sweep.ranks(w).into_iter());
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(BettiTable { field, n, entries })
}

/// Row lengths, top degrees, regularity and projective dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandStats {
    /// Row `j` measured on `b_{i,i+j-1}`, for `j = 1..=max(reg + 1, 2)`.
    pub lp: BTreeMap<usize, usize>,
    /// Row `j` measured on `b_{i,i+j}`, for `j = 0..=max(reg, 2)`.
    pub lp_shifted: BTreeMap<usize, usize>,
    /// `t_i` for `i = 0..=projdim`.
    pub t: BTreeMap<usize, usize>,
    pub regularity: usize,
    pub projdim: usize,
}

pub fn strand_stats(table: &BettiTable) -> StrandStats {
    let r = table.regularity();
    let p = table.projdim();
    StrandStats {
        lp: (1..=(r + 1).max(2)).map(|j| (j, table.lp_literal(j))).collect(),
        lp_shifted: (0..=r.max(2)).map(|j| (j, table.lp_shifted(j))).collect(),
        t: (0..=p).map(|i| (i, table.t(i))).collect(),
        regularity: r,
        projdim: p,
    }
}

/// One instance of the inequality `b_{m-i,m-i+1} <= b_{i,i+r-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityComparison {
    pub i: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

/// Outcome of checking property 𝔄 with every comparison kept for auditing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyA {
    pub convention: Convention,
    pub regularity: usize,
    /// `m = lp_r` under the chosen convention.
    pub m: usize,
    pub lp2: usize,
    /// `lp_2 <= m`.
    pub condition1: bool,
    /// `b_{m-i,m-i+1} <= b_{i,i+r-1}` for `i = 0..=m`.
    pub comparisons: Vec<DualityComparison>,
    /// Least `i` at which a comparison fails.
    pub violating_i: Option<usize>,
    pub holds: bool,
}

/// Checks property 𝔄: with `r` the regularity and `m = lp_r`,
/// `lp_2 <= m` and `b_{m-i,m-i+1} <= b_{i,i+r-1}` for `0 <= i <= m`.
///
/// The convention only decides which strand `m` is read from. The
/// comparison always pairs the linear strand with the strand `b_{i,i+r-1}`,
/// which is exactly what the duality between `H̃_0(Δ_W)` and
/// `H̃_{d-2}(Δ_{V∖W})` controls when `m = n - d`.
pub fn property_a(table: &BettiTable, convention: Convention) -> PropertyA {
    let r = table.regularity();
    let m = table.lp(r, convention);
    let lp2 = table.linear_strand_length();
    let comparisons: Vec<DualityComparison> = (0..=m)
        .map(|i| {
            let lhs = table.get((m - i) as isize, (m - i + 1) as isize);
            let rhs = table.get(i as isize, i as isize + r as isize - 1);
            DualityComparison {
                i,
                lhs,
                rhs,
                holds: lhs <= rhs,
            }
        })
        .collect();
    let violating_i = comparisons.iter().find(|c| !c.holds).map(|c| c.i);
    let condition1 = lp2 <= m;
    PropertyA {
        convention,
        regularity: r,
        m,
        lp2,
        condition1,
        holds: condition1 && violating_i.is_none(),
        comparisons,
        violating_i,
    }
}

/// Outcome of checking property 𝔅_s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyB {
    pub s: usize,
    pub regularity: usize,
    /// Least `i < s` with `t_i >= r + i - 1`.
    pub violating_i: Option<usize>,
    pub holds: bool,
}

/// Property 𝔅_s: `t_i < r + i - 1` for every `0 <= i < s`.
pub fn property_b(table: &BettiTable, s: usize) -> PropertyB {
    let r = table.regularity();
    let violating_i = (0..s).find(|&i| !b_condition(table, r, i));
    PropertyB {
        s,
        regularity: r,
        violating_i,
        holds: violating_i.is_none(),
    }
}

fn b_condition(table: &BettiTable, r: usize, i: usize) -> bool {
    (table.t(i) as i64) < r as i64 + i as i64 - 1
}

/// Largest `s` for which 𝔅_s holds: the first index where the condition
/// fails. Some index does fail, namely one where `t_i - i` reaches the
/// regularity, so the answer is finite.
pub fn max_b_index(table: &BettiTable) -> usize {
    let r = table.regularity();
    (0..).find(|&i| !b_condition(table, r, i)).expect("the regularity is attained")
}
