//! Exact Dynnikov coordinates for multicurves in the n-punctured disc, and
//! the piecewise-linear braid action on them.
//!
//! Punctures sit on the real axis, numbered 1..n left to right. For each
//! interior gap `i = 1..n-2` there is a coordinate pair `(a_i, b_i)`: `b_i`
//! is half the difference of the intersection numbers with the vertical lines
//! through gaps `i` and `i+1`, and `a_i` records the over/under asymmetry of
//! the curve at puncture `i+1`. The 2n-4 integers classify the isotopy class
//! uniquely; the zero vector is the empty multicurve (components parallel to
//! the boundary or to a single puncture are invisible).
//!
//! The generator `sigma_i` is the counterclockwise half twist exchanging
//! punctures i, i+1. Writing `x+ = max(x,0)`, `x- = min(x,0)`, the positive
//! interior generator (2 <= i <= n-2) updates
//!
//! ```text
//! t        = a_{i-1} - a_i - b_{i-1}- + b_i+
//! a_{i-1}' = a_{i-1} + b_{i-1}+ + (b_i+ - t)+
//! b_{i-1}' = b_i - t+
//! a_i'     = a_i + b_i- + (b_{i-1}- + t)-
//! b_i'     = b_{i-1} + t+
//! ```
//!
//! `sigma_1` is the same rule evaluated with the virtual left pair
//! `(0, -a_1+)`, keeping the right-hand outputs; `sigma_{n-1}` is obtained
//! from `sigma_1^{-1}` by the left-right reflection `a_g -> a_{m+1-g}`,
//! `b_g -> -b_{m+1-g}`; and inverses are conjugates of the positive rules by
//! the mirror `a -> -a` (reflection across the real axis). The convention is
//! pinned by the fixtures below: the braid relations hold identically, the
//! full twist acts trivially, and `sigma_i` fixes the round curve about
//! punctures {i, i+1}.

use super::{BraidError, BraidWord};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

fn pos(x: &BigInt) -> BigInt {
    if x.is_zero() || x < &BigInt::zero() {
        BigInt::zero()
    } else {
        x.clone()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x < &BigInt::zero() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

/// Isotopy class of a closed multicurve in the n-punctured disc, as exact
/// integer Dynnikov coordinates. Equality of classes is equality of vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiCurve {
    n: usize,
    /// Interleaved `[a_1, b_1, a_2, b_2, ...]`, length 2n-4.
    coords: Vec<BigInt>,
}

impl MultiCurve {
    pub fn new(n: usize, coords: Vec<BigInt>) -> Result<Self, BraidError> {
        if n < 3 {
            return Err(BraidError::TooFewPunctures(n));
        }
        if coords.len() != 2 * n - 4 {
            return Err(BraidError::CoordinateLength {
                got: coords.len(),
                expected: 2 * n - 4,
            });
        }
        Ok(Self { n, coords })
    }

    pub fn from_i64(n: usize, coords: &[i64]) -> Result<Self, BraidError> {
        Self::new(n, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The empty multicurve (the reserved zero vector).
    pub fn empty(n: usize) -> Result<Self, BraidError> {
        if n < 3 {
            return Err(BraidError::TooFewPunctures(n));
        }
        Ok(Self {
            n,
            coords: vec![BigInt::zero(); 2 * n - 4],
        })
    }

    /// Round curve enclosing the contiguous block of punctures `{i, ..., j}`,
    /// 1 <= i < j <= n. Its a-coordinates vanish and its b-coordinates are the
    /// differences of the vertical crossing numbers: -1 at gap i-1 and +1 at
    /// gap j-1 (where those gaps exist).
    pub fn round_curve(n: usize, i: usize, j: usize) -> Result<Self, BraidError> {
        if !(1 <= i && i < j && j <= n) {
            return Err(BraidError::PureIndexOrder { i, j, n });
        }
        let mut c = Self::empty(n)?;
        let m = n - 2;
        // gap g separates iff i <= g < j; b_g = (sep(g) - sep(g+1))
        for g in 1..=m {
            let sep = |g: usize| (i <= g && g < j) as i64;
            c.coords[2 * (g - 1) + 1] = BigInt::from(sep(g) - sep(g + 1));
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_empty_curve(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Largest bit length among the coordinates (growth diagnostics).
    pub fn max_bits(&self) -> u64 {
        self.coords.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    fn a(&self, g: usize) -> &BigInt {
        &self.coords[2 * (g - 1)]
    }
    fn b(&self, g: usize) -> &BigInt {
        &self.coords[2 * (g - 1) + 1]
    }
    fn set_pair(&mut self, g: usize, a: BigInt, b: BigInt) {
        self.coords[2 * (g - 1)] = a;
        self.coords[2 * (g - 1) + 1] = b;
    }

    fn mirror(&mut self) {
        for g in 1..=self.n - 2 {
            let v = -self.a(g).clone();
            self.coords[2 * (g - 1)] = v;
        }
    }

    fn reflect_lr(&mut self) {
        let m = self.n - 2;
        let mut out = Vec::with_capacity(2 * m);
        for g in 0..m {
            out.push(self.coords[2 * (m - 1 - g)].clone());
            out.push(-self.coords[2 * (m - 1 - g) + 1].clone());
        }
        self.coords = out;
    }

    fn interior_update(
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) -> (BigInt, BigInt, BigInt, BigInt) {
        let t = p - r - neg(q) + pos(s);
        let tp = pos(&t);
        let p2 = p + pos(q) + pos(&(pos(s) - &t));
        let q2 = s - &tp;
        let r2 = r + neg(s) + neg(&(neg(q) + &t));
        let s2 = q + &tp;
        (p2, q2, r2, s2)
    }

    fn apply_positive(&mut self, i: usize) {
        let n = self.n;
        if (2..=n - 2).contains(&i) {
            let (p, q, r, s) = (
                self.a(i - 1).clone(),
                self.b(i - 1).clone(),
                self.a(i).clone(),
                self.b(i).clone(),
            );
            let (p2, q2, r2, s2) = Self::interior_update(&p, &q, &r, &s);
            self.set_pair(i - 1, p2, q2);
            self.set_pair(i, r2, s2);
        } else if i == 1 {
            let (a, b) = (self.a(1).clone(), self.b(1).clone());
            let (_, _, r2, s2) =
                Self::interior_update(&BigInt::zero(), &(-pos(&a)), &a, &b);
            self.set_pair(1, r2, s2);
        } else {
            debug_assert_eq!(i, n - 1);
            self.reflect_lr();
            self.apply_negative(1);
            self.reflect_lr();
        }
    }

    fn apply_negative(&mut self, i: usize) {
        self.mirror();
        self.apply_positive(i);
        self.mirror();
    }

    /// Applies a single generator (internal; the public entry is [`act`]).
    fn apply_letter(&mut self, index: usize, positive: bool) {
        if positive {
            self.apply_positive(index);
        } else {
            self.apply_negative(index);
        }
    }
}

impl fmt::Display for MultiCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Acts by a braid word on a multicurve, rightmost letter first, in exact
/// integer arithmetic.
pub fn act(word: &BraidWord, curve: &MultiCurve) -> Result<MultiCurve, BraidError> {
    if word.n() != curve.n() {
        return Err(BraidError::StrandMismatch {
            word: word.n(),
            curve: curve.n(),
        });
    }
    let mut c = curve.clone();
    for l in word.letters().iter().rev() {
        c.apply_letter(l.index, l.positive);
    }
    Ok(c)
}
