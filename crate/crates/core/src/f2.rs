//! Dense bit-packed linear algebra over F2.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVec::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = BitVec::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(n, w)| n * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row-major F2 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    ncols: usize,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BitMatrix {
            rows: vec![BitVec::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(nrows: usize, columns: &[BitVec]) -> Self {
        let mut m = BitMatrix::zeros(nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), nrows);
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_bits(self.rows.iter().map(|r| r.get(j)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.ncols, other.nrows(), "matrix shape mismatch");
        let mut out = BitMatrix::zeros(self.nrows(), other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for k in row.ones() {
                out.rows[i].xor_assign(&other.rows[k]);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        BitVec::from_bits(self.rows.iter().map(|r| r.dot(v)))
    }

    /// Kronecker product; row `(i, k)` of the result is `i * b.nrows() + k`.
    pub fn kron(&self, b: &BitMatrix) -> BitMatrix {
        let (br, bc) = (b.nrows(), b.ncols());
        let mut out = BitMatrix::zeros(self.nrows() * br, self.ncols * bc);
        for i in 0..self.nrows() {
            for j in self.rows[i].ones() {
                for k in 0..br {
                    for l in b.rows[k].ones() {
                        out.set(i * br + k, j * bc + l, true);
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut solver = SpanSolver::new(self.ncols, 0);
        self.rows
            .iter()
            .filter(|r| solver.insert((*r).clone(), BitVec::zeros(0)).is_ok())
            .count()
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows() == self.ncols && self.rank() == self.ncols
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r:?}")?;
        }
        f.write_str("]")
    }
}

/// Incremental row echelon form that remembers, for each stored row, which
/// combination of inserted vectors produced it.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    width: usize,
    tags: usize,
    rows: Vec<(usize, BitVec, BitVec)>,
}

impl SpanSolver {
    /// `width` is the vector length, `tags` the length of the combination
    /// bookkeeping vectors.
    pub fn new(width: usize, tags: usize) -> Self {
        SpanSolver {
            width,
            tags,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows. Rows are visited in insertion
    /// order; each row is already reduced against its predecessors, so one
    /// pass clears every stored pivot.
    fn reduce(&self, mut v: BitVec, mut tag: BitVec) -> (BitVec, BitVec) {
        for (pivot, row, row_tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                tag.xor_assign(row_tag);
            }
        }
        (v, tag)
    }

    /// Adds `v` labelled by `tag`. If `v` is already in the span, nothing is
    /// stored and the reduced tag (a dependency among the tags) is returned.
    pub fn insert(&mut self, v: BitVec, tag: BitVec) -> Result<(), BitVec> {
        debug_assert_eq!(v.len(), self.width);
        debug_assert_eq!(tag.len(), self.tags);
        let (v, tag) = self.reduce(v, tag);
        match v.first_one() {
            Some(pivot) => {
                self.rows.push((pivot, v, tag));
                Ok(())
            }
            None => Err(tag),
        }
    }

    /// Tag combination expressing `v`, or `None` when `v` is outside the span.
    pub fn solve(&self, v: BitVec) -> Option<BitVec> {
        let (rest, tag) = self.reduce(v, BitVec::zeros(self.tags));
        rest.is_zero().then_some(tag)
    }
}

/// Order of `GL(n, F2)`, saturating at `u128::MAX`.
pub fn gl_order(n: usize) -> u128 {
    let mut out: u128 = 1;
    for i in 0..n {
        let Some(full) = 1u128.checked_shl(n as u32).filter(|_| n < 127) else {
            return u128::MAX;
        };
        out = out.saturating_mul(full - (1u128 << i));
    }
    out
}

/// All invertible `n × n` matrices, in lexicographic order of their columns
/// read as integers (column 0 most significant).
pub fn general_linear_group(n: usize) -> Vec<BitMatrix> {
    assert!(n < 16, "GL({n}, F2) is too large to enumerate");
    let mut out = Vec::new();
    let mut cols: Vec<BitVec> = Vec::with_capacity(n);
    gl_rec(n, &mut cols, &mut out);
    out
}

fn gl_rec(n: usize, cols: &mut Vec<BitVec>, out: &mut Vec<BitMatrix>) {
    if cols.len() == n {
        out.push(BitMatrix::from_columns(n, cols));
        return;
    }
    let mut span = SpanSolver::new(n, 0);
    for c in cols.iter() {
        let _ = span.insert(c.clone(), BitVec::zeros(0));
    }
    for x in 1u32..(1 << n) {
        let c = BitVec::from_bits((0..n).map(|i| x >> i & 1 == 1));
        if span.solve(c.clone()).is_some() {
            continue;
        }
        cols.push(c);
        gl_rec(n, cols, out);
        cols.pop();
    }
}
