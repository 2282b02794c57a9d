//! Exact rank and null-space computations over GF(2), GF(p) and the rationals.
//!
//! Matrices hold integer entries and are reduced into the requested field at
//! the point of use, which is how boundary matrices are naturally produced.
//! Nothing here touches floating point.
//!
//! Rank is computed by inserting rows one at a time into an echelon basis
//! keyed by leading column. Kernels come from a full reduction that pivots on
//! the least column first and, within a column, on the least row index, so
//! kernel bases are reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for homology and ranks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Gf2,
    /// Integers modulo an odd prime below 2^16.
    Gfp(u32),
    Rational,
}

impl FieldSpec {
    /// GF(p), checking that `p` is an odd prime below 2^16. `p = 2` gives
    /// [`FieldSpec::Gf2`].
    pub fn gfp(p: u32) -> Result<Self> {
        if p == 2 {
            return Ok(FieldSpec::Gf2);
        }
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::InvalidField(format!("gf{p}")));
        }
        Ok(FieldSpec::Gfp(p))
    }

    /// The characteristic, 0 for the rationals.
    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Gf2 => 2,
            FieldSpec::Gfp(p) => p,
            FieldSpec::Rational => 0,
        }
    }

    /// Short machine name: `gf2`, `gf<p>` or `q`.
    pub fn name(self) -> String {
        match self {
            FieldSpec::Gf2 => "gf2".into(),
            FieldSpec::Gfp(p) => format!("gf{p}"),
            FieldSpec::Rational => "q".into(),
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => write!(f, "GF(2)"),
            FieldSpec::Gfp(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rational" | "rationals" => return Ok(FieldSpec::Rational),
            _ => {}
        }
        let digits = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("gf"))
            .or_else(|| t.strip_prefix("z/"))
            .unwrap_or(&t);
        digits
            .parse::<u32>()
            .ok()
            .and_then(|p| FieldSpec::gfp(p).ok())
            .ok_or_else(|| Error::InvalidField(s.to_string()))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

/// An integer matrix stored by its nonzero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Sets an entry; zero removes it.
    ///
    /// # Panics
    /// Panics if the position is out of range.
    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "entry ({row}, {col}) out of range");
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (&(r, c), &v) in &self.entries {
            rows[r].push((c, v));
        }
        rows
    }

    /// Rank over `field`.
    pub fn rank(&self, field: FieldSpec) -> usize {
        rank_of_rows(self.cols, &self.sparse_rows(), field)
    }

    /// A basis of `{x : Mx = 0}` over `field`, one vector per free column in
    /// increasing column order. Finite-field vectors hold residues in
    /// `0..p`; rational vectors are scaled to primitive integer vectors.
    pub fn kernel_basis(&self, field: FieldSpec) -> Vec<Vec<BigInt>> {
        let rows = self.sparse_rows();
        match field {
            FieldSpec::Gf2 => modular_kernel(self.cols, &rows, 2),
            FieldSpec::Gfp(p) => modular_kernel(self.cols, &rows, p),
            FieldSpec::Rational => rational_kernel(self.cols, &rows),
        }
    }
}

/// Rank of the matrix whose rows are given sparsely as `(column, value)`.
pub(crate) fn rank_of_rows(cols: usize, rows: &[Vec<(usize, i64)>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Gf2 => gf2_rank(cols, rows),
        FieldSpec::Gfp(p) => modular_rank(cols, rows, p),
        FieldSpec::Rational => integer_rank::<i64>(cols, rows)
            .unwrap_or_else(|| integer_rank::<BigInt>(cols, rows).expect("bigint arithmetic cannot overflow")),
    }
}

fn gf2_rank(cols: usize, rows: &[Vec<(usize, i64)>]) -> usize {
    let words = cols.div_ceil(64);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    for row in rows {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v & 1 == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match &basis[lead] {
                Some(pivot) => {
                    for (b, p) in bits.iter_mut().zip(pivot) {
                        *b ^= p;
                    }
                }
                None => {
                    basis[lead] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn reduce_mod(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// `row -= factor * pivot` modulo `p`.
fn axpy_mod(row: &mut [u32], factor: u32, pivot: &[u32], p: u32) {
    let p = p as u64;
    for (x, &y) in row.iter_mut().zip(pivot) {
        if y != 0 {
            *x = ((*x as u64 + p - factor as u64 * y as u64 % p) % p) as u32;
        }
    }
}

fn modular_rank(cols: usize, rows: &[Vec<(usize, i64)>], p: u32) -> usize {
    let mut basis: Vec<Option<Vec<u32>>> = vec![None; cols];
    let mut rank = 0;
    for row in rows {
        let mut dense = vec![0u32; cols];
        for &(c, v) in row {
            dense[c] = reduce_mod(dense[c] as i64 + v, p);
        }
        for c in 0..cols {
            if dense[c] == 0 {
                continue;
            }
            match &basis[c] {
                Some(pivot) => {
                    let f = dense[c];
                    axpy_mod(&mut dense, f, pivot, p);
                }
                None => {
                    let inv = inv_mod(dense[c], p);
                    for x in dense.iter_mut() {
                        *x = (*x as u64 * inv as u64 % p as u64) as u32;
                    }
                    basis[c] = Some(dense);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Integer types usable for fraction-free elimination.
trait ExactInt: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64> {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub + From<i64>> ExactInt for T {}

/// Divides a row by the gcd of its entries.
fn make_primitive<T: ExactInt>(row: &mut [T]) {
    let g = row.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = x.div_floor(&g);
        }
    }
}

/// `a * row - b * pivot`, or `None` on overflow.
fn combine<T: ExactInt>(row: &mut [T], a: &T, b: &T, pivot: &[T]) -> Option<()> {
    for (x, y) in row.iter_mut().zip(pivot) {
        if y.is_zero() && x.is_zero() {
            continue;
        }
        let lhs = a.checked_mul(x)?;
        let rhs = b.checked_mul(y)?;
        *x = lhs.checked_sub(&rhs)?;
    }
    Some(())
}

/// Rank over the rationals by fraction-free elimination with per-row gcd
/// normalisation. Returns `None` if `T` overflows.
fn integer_rank<T: ExactInt>(cols: usize, rows: &[Vec<(usize, i64)>]) -> Option<usize> {
    let mut basis: Vec<Option<Vec<T>>> = vec![None; cols];
    let mut rank = 0;
    for row in rows {
        let mut dense = vec![T::zero(); cols];
        for &(c, v) in row {
            dense[c] = dense[c].clone() + T::from(v);
        }
        for c in 0..cols {
            if dense[c].is_zero() {
                continue;
            }
            match &basis[c] {
                Some(pivot) => {
                    let (a, b) = (pivot[c].clone(), dense[c].clone());
                    combine(&mut dense, &a, &b, pivot)?;
                    make_primitive(&mut dense);
                }
                None => {
                    make_primitive(&mut dense);
                    basis[c] = Some(dense);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

fn modular_kernel(cols: usize, rows: &[Vec<(usize, i64)>], p: u32) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|row| {
            let mut dense = vec![0u32; cols];
            for &(c, v) in row {
                dense[c] = reduce_mod(dense[c] as i64 + v, p);
            }
            dense
        })
        .collect();
    // (row position in `m`, pivot column); pivot rows are normalised to 1
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; m.len()];
    for c in 0..cols {
        let Some(r) = (0..m.len()).find(|&r| !used[r] && m[r][c] != 0) else {
            continue;
        };
        used[r] = true;
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        let pivot = m[r].clone();
        for (q, other) in m.iter_mut().enumerate() {
            if q != r && other[c] != 0 {
                let f = other[c];
                axpy_mod(other, f, &pivot, p);
            }
        }
        pivots.push((r, c));
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &(_, c) in &pivots {
            v[c] = true;
        }
        v
    };
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![BigInt::zero(); cols];
            x[f] = BigInt::one();
            for &(r, c) in &pivots {
                let v = m[r][f];
                if v != 0 {
                    x[c] = BigInt::from((p - v) % p);
                }
            }
            x
        })
        .collect()
}

fn rational_kernel(cols: usize, rows: &[Vec<(usize, i64)>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); cols];
            for &(c, v) in row {
                dense[c] += v;
            }
            dense
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; m.len()];
    for c in 0..cols {
        let Some(r) = (0..m.len()).find(|&r| !used[r] && !m[r][c].is_zero()) else {
            continue;
        };
        used[r] = true;
        make_primitive(&mut m[r]);
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot = m[r].clone();
        for (q, other) in m.iter_mut().enumerate() {
            if q != r && !other[c].is_zero() {
                let (a, b) = (pivot[c].clone(), other[c].clone());
                combine(other, &a, &b, &pivot).expect("bigint arithmetic cannot overflow");
                make_primitive(other);
            }
        }
        pivots.push((r, c));
    }
    let mut is_pivot = vec![false; cols];
    for &(_, c) in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            // each pivot row reads a*x_c + b*x_f = 0 (other pivot columns are
            // cleared), so x_f = lcm of the a's keeps everything integral
            let scale = pivots
                .iter()
                .filter(|&&(r, _)| !m[r][f].is_zero())
                .fold(BigInt::one(), |l, &(r, c)| l.lcm(&m[r][c]));
            let mut x = vec![BigInt::zero(); cols];
            x[f] = scale.clone();
            for &(r, c) in &pivots {
                if !m[r][f].is_zero() {
                    x[c] = -(&m[r][f] * &scale) / &m[r][c];
                }
            }
            make_primitive(&mut x);
            x
        })
        .collect()
}
