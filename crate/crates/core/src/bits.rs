//! Packed binary vectors and matrices over F2.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut v = Self::zeros(0);
        for b in bits {
            v.push(b);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let w = &mut self.words[i / 64];
        if value {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }

    pub fn push(&mut self, value: bool) {
        if self.len.is_multiple_of(64) {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `supp(self) ⊆ supp(other)`.
    pub fn is_covered_by(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

/// Row-major binary matrix with at most 64 rows when columns are read as `u64`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BinaryMatrix {
    pub fn from_rows(rows: Vec<BitVec>) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows, cols }
    }

    /// Builds a matrix from packed columns; bit `r` of `columns[j]` is entry `(r, j)`.
    pub fn from_columns(row_count: usize, columns: &[u64]) -> Result<Self> {
        if row_count > 64 {
            return Err(Error::TooManyRows(row_count));
        }
        let mut rows = vec![BitVec::zeros(columns.len()); row_count];
        for (j, &c) in columns.iter().enumerate() {
            for (r, row) in rows.iter_mut().enumerate() {
                if (c >> r) & 1 == 1 {
                    row.set(j, true);
                }
            }
        }
        Ok(Self {
            rows,
            cols: columns.len(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = BitVec::zeros(n);
                r.set(i, true);
                r
            })
            .collect();
        Self { rows, cols: n }
    }

    #[inline]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn col_count(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Column `j` packed into a word, row `r` at bit `r`.
    pub fn column(&self, j: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (r, row)| acc | (row.get(j) as u64) << r)
    }

    pub fn columns(&self) -> Result<Vec<u64>> {
        if self.row_count() > 64 {
            return Err(Error::TooManyRows(self.row_count()));
        }
        let mut out = vec![0u64; self.cols];
        for (r, row) in self.rows.iter().enumerate() {
            for (wi, &w) in row.words().iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    out[wi * 64 + b] |= 1 << r;
                    bits &= bits - 1;
                }
            }
        }
        Ok(out)
    }

    /// Rank over F2 by elimination on a copy of the rows.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = self.rows.iter().map(|r| r.words().to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, b) = (col / 64, col % 64);
            let Some(pivot) = (rank..rows.len()).find(|&i| (rows[i][w] >> b) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && (row[w] >> b) & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Row combination selected by the bits of `message`.
    pub fn encode(&self, message: u64) -> BitVec {
        let mut out = BitVec::zeros(self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            if (message >> r) & 1 == 1 {
                out.xor_assign(row);
            }
        }
        out
    }
}

/// Incremental XOR basis that remembers which inputs make up each basis vector.
#[derive(Clone, Debug, Default)]
pub struct TrackedBasis {
    /// `(pivot bit, vector, sorted input labels)`
    entries: Vec<(u32, u64, Vec<usize>)>,
}

impl TrackedBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Reduces `v` against the basis; returns the residue and the labels used.
    pub fn reduce(&self, mut v: u64) -> (u64, Vec<usize>) {
        let mut labels = Vec::new();
        for (pivot, vec, lab) in &self.entries {
            if (v >> pivot) & 1 == 1 {
                v ^= vec;
                labels = symmetric_difference(&labels, lab);
            }
        }
        (v, labels)
    }

    /// Inserts `v` with `label`; returns false if `v` was already in the span.
    pub fn insert(&mut self, v: u64, label: usize) -> bool {
        let (residue, mut labels) = self.reduce(v);
        if residue == 0 {
            return false;
        }
        labels = symmetric_difference(&labels, &[label]);
        let pivot = 63 - residue.leading_zeros();
        // keep existing entries reduced at the new pivot so `reduce` stays single-pass
        for (_, vec, lab) in self.entries.iter_mut() {
            if (*vec >> pivot) & 1 == 1 {
                *vec ^= residue;
                *lab = symmetric_difference(lab, &labels);
            }
        }
        self.entries.push((pivot, residue, labels));
        true
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(129, true);
        assert_eq!(v.count_ones(), 2);
        assert!(v.get(129) && !v.get(128));
        let w = BitVec::from_bits((0..130).map(|i| i % 2 == 0));
        assert!(!v.is_covered_by(&w));
        let mut x = BitVec::zeros(130);
        x.set(0, true);
        assert!(x.is_covered_by(&w));
    }

    #[test]
    fn rank_and_columns() {
        let m = BinaryMatrix::from_columns(3, &[0b001, 0b010, 0b011, 0b000, 0b100]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.columns().unwrap(), [0b001, 0b010, 0b011, 0b000, 0b100]);
        assert_eq!(m.column(2), 0b011);
        let dep = BinaryMatrix::from_columns(3, &[0b011, 0b011, 0b011]).unwrap();
        assert_eq!(dep.rank(), 1);
        assert_eq!(BinaryMatrix::identity(7).rank(), 7);
    }

    #[test]
    fn tracked_basis_reports_combination() {
        let mut b = TrackedBasis::new();
        assert!(b.insert(0b0110, 10));
        assert!(b.insert(0b0011, 20));
        assert!(!b.insert(0b0101, 30));
        let (res, labels) = b.reduce(0b0101);
        assert_eq!(res, 0);
        assert_eq!(labels, [10, 20]);
        let (res, _) = b.reduce(0b1000);
        assert_ne!(res, 0);
    }
}
