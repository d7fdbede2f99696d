//! Graded F2 vector spaces and exact homology of F2 chain complexes.
//!
//! A [`GradedSpace`] is a finitely supported map `degree -> rank`. Degrees are
//! arbitrary integers; zero ranks are never stored. Complexes are
//! cohomological: the differential raises degree by one. Homological data
//! (loop spaces) is stored in nonnegative degrees, with the sign flip
//! documented at the call sites that do the conversion.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradedError {
    #[error("boundary composition d∘d is nonzero between degrees {0} and {1}")]
    BoundarySquared(i64, i64),
    #[error("differential out of degree {degree} has {got} columns, expected {expected}")]
    ShapeMismatch { degree: i64, got: usize, expected: usize },
}

/// Finitely supported `degree -> rank` map over F2.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GradedSpace {
    ranks: BTreeMap<i64, usize>,
}

impl GradedSpace {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_ranks<I: IntoIterator<Item = (i64, usize)>>(it: I) -> Self {
        let mut s = Self::default();
        for (d, r) in it {
            s.add(d, r);
        }
        s
    }

    /// Adds `rank` in `degree` (no-op for rank 0).
    pub fn add(&mut self, degree: i64, rank: usize) {
        if rank == 0 {
            return;
        }
        *self.ranks.entry(degree).or_insert(0) += rank;
    }

    pub fn rank(&self, degree: i64) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.ranks.keys().copied()
    }

    /// Shift: the result holds in degree `t` what `self` holds in `t - s`,
    /// i.e. `X[s]` contributes its degree-j classes in total degree `j + s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            ranks: self.ranks.iter().map(|(&d, &r)| (d + s, r)).collect(),
        }
    }

    pub fn direct_sum<'a, I: IntoIterator<Item = &'a GradedSpace>>(parts: I) -> Self {
        let mut out = Self::default();
        for p in parts {
            for (d, r) in p.iter() {
                out.add(d, r);
            }
        }
        out
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, r) in self.ranks.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{d}: {r}")?;
            first = false;
        }
        Ok(())
    }
}

/// Dense bit-packed matrix over F2. Rows are packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixF2 {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl MatrixF2 {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize)]) -> Self {
        let mut m = Self::zero(rows, cols);
        for &(r, c) in entries {
            m.set(r, c, true);
        }
        m
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let (lo, hi) = (dst.min(src), dst.max(src));
        let (head, tail) = self.data.split_at_mut(hi * self.words);
        let src_slice: &[u64];
        let dst_slice: &mut [u64];
        if dst < src {
            dst_slice = &mut head[lo * self.words..lo * self.words + self.words];
            src_slice = &tail[..self.words];
        } else {
            src_slice = &head[lo * self.words..lo * self.words + self.words];
            dst_slice = &mut tail[..self.words];
        }
        for (d, s) in dst_slice.iter_mut().zip(src_slice) {
            *d ^= s;
        }
    }

    /// Rank by Gaussian elimination (destroys a copy, not self).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m.get(r, col));
            let Some(p) = pivot else { continue };
            if p != rank {
                for w in 0..m.words {
                    m.data.swap(rank * m.words + w, p * m.words + w);
                }
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_rows(r, rank);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Matrix product over F2 (self * rhs).
    pub fn mul(&self, rhs: &MatrixF2) -> MatrixF2 {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = MatrixF2::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let (orow, krow) = (r * out.words, k * rhs.words);
                    for w in 0..rhs.words {
                        out.data[orow + w] ^= rhs.data[krow + w];
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }
}

/// Cohomological chain complex over F2: `d_deg : C^deg -> C^{deg+1}`.
///
/// The boundary-squared condition is checked at construction.
#[derive(Debug, Clone)]
pub struct ChainComplexF2 {
    dims: BTreeMap<i64, usize>,
    // differentials[d] : C^d -> C^{d+1}, given as (dim C^{d+1}) x (dim C^d)
    differentials: BTreeMap<i64, MatrixF2>,
}

impl ChainComplexF2 {
    pub fn new(
        dims: BTreeMap<i64, usize>,
        differentials: BTreeMap<i64, MatrixF2>,
    ) -> Result<Self, GradedError> {
        let dim = |d: i64| dims.get(&d).copied().unwrap_or(0);
        for (&d, m) in &differentials {
            if m.cols() != dim(d) || m.rows() != dim(d + 1) {
                return Err(GradedError::ShapeMismatch {
                    degree: d,
                    got: m.cols(),
                    expected: dim(d),
                });
            }
        }
        let cx = Self { dims, differentials };
        for (&d, m) in &cx.differentials {
            if let Some(next) = cx.differentials.get(&(d + 1)) {
                if !next.mul(m).is_zero() {
                    return Err(GradedError::BoundarySquared(d, d + 1));
                }
            }
        }
        Ok(cx)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn chains(&self) -> GradedSpace {
        GradedSpace::from_ranks(self.dims.iter().map(|(&d, &r)| (d, r)))
    }

    fn rank_out(&self, degree: i64) -> usize {
        self.differentials.get(&degree).map_or(0, |m| m.rank())
    }

    /// Cohomology ranks: `dim ker(d_deg) - rank(d_{deg-1})` per degree.
    pub fn homology(&self) -> GradedSpace {
        let mut out = GradedSpace::zero();
        for (&d, &dim) in &self.dims {
            let r_out = self.rank_out(d);
            let r_in = self.rank_out(d - 1);
            let h = dim - r_out - r_in;
            out.add(d, h);
        }
        out
    }
}
