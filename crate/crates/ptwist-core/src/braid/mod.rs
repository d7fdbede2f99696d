//! Braid groups acting on multicurves in the punctured disc, and the Garside
//! left normal form solving the word problem.
//!
//! The three pieces fit together as follows: [`BraidWord`] is a free word in
//! the Artin generators; [`MultiCurve`] carries exact integer coordinates for
//! an isotopy class of closed multicurves, acted on letter by letter; and
//! [`NormalForm`] is the canonical representative used whenever two words must
//! be compared as group elements (curve action alone cannot see boundary
//! twists).

mod checks;
mod dynnikov;
mod garside;

pub use checks::{centrality_check, lantern_check, pure_generator, ActionReport, LanternReport};
pub use dynnikov::MultiCurve;
pub use garside::NormalForm;

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },
    #[error("strand/puncture mismatch: word on {word} strands, curve on {curve} punctures")]
    StrandMismatch { word: usize, curve: usize },
    #[error("multicurve needs at least 3 punctures, got {0}")]
    TooFewPunctures(usize),
    #[error("coordinate vector has length {got}, expected 2n-4 = {expected}")]
    CoordinateLength { got: usize, expected: usize },
    #[error("pure braid generator needs 1 <= i < j <= n, got i={i}, j={j}, n={n}")]
    PureIndexOrder { i: usize, j: usize, n: usize },
    #[error("cannot parse braid letter `{0}`: expected s<k> or s<k>^-1")]
    BadLetter(String),
}

/// A single Artin generator with sign: `sigma_index^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    /// Generator index in `1..=n-1`.
    pub index: usize,
    /// `true` for the positive (counterclockwise) half twist.
    pub positive: bool,
}

impl Letter {
    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            positive: !self.positive,
        }
    }
}

/// Element of the braid group B_n as a word in the Artin generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Result<Self, BraidError> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        Ok(Self {
            n,
            letters: Vec::new(),
        })
    }

    pub fn new(n: usize, letters: Vec<(usize, bool)>) -> Result<Self, BraidError> {
        let mut w = Self::identity(n)?;
        for (index, positive) in letters {
            w.push(index, positive)?;
        }
        Ok(w)
    }

    pub fn push(&mut self, index: usize, positive: bool) -> Result<(), BraidError> {
        if index == 0 || index >= self.n {
            return Err(BraidError::GeneratorOutOfRange {
                index,
                max: self.n - 1,
            });
        }
        self.letters.push(Letter { index, positive });
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation (group product): `self` followed on the right by `rhs`.
    pub fn concat(&self, rhs: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.n != rhs.n {
            return Err(BraidError::StrandMismatch {
                word: self.n,
                curve: rhs.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(BraidWord {
            n: self.n,
            letters,
        })
    }

    /// Word inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The positive half twist `Delta = (s1)(s2 s1)...(s_{n-1}...s1)`.
    pub fn half_twist(n: usize) -> Result<BraidWord, BraidError> {
        let mut w = Self::identity(n)?;
        for j in 1..n {
            for i in (1..=j).rev() {
                w.push(i, true)?;
            }
        }
        Ok(w)
    }

    /// The full twist `Delta^2`, central in B_n.
    pub fn full_twist(n: usize) -> Result<BraidWord, BraidError> {
        let d = Self::half_twist(n)?;
        d.concat(&d)
    }

    /// Parses the whitespace-separated grammar `s<k>` / `s<k>^-1`,
    /// e.g. `"s1 s2 s1^-1"`.
    pub fn parse(n: usize, text: &str) -> Result<BraidWord, BraidError> {
        let mut w = Self::identity(n)?;
        for tok in text.split_whitespace() {
            let (body, positive) = match tok.strip_suffix("^-1") {
                Some(b) => (b, false),
                None => (tok, true),
            };
            let idx = body
                .strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| BraidError::BadLetter(tok.to_string()))?;
            w.push(idx, positive)?;
        }
        Ok(w)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.index)?;
            if !l.positive {
                write!(f, "^-1")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trip() {
        let w = BraidWord::parse(3, "s1 s2 s1^-1").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "s1 s2 s1^-1");
        let again = BraidWord::parse(3, &w.to_string()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn bad_letters_rejected() {
        assert!(matches!(
            BraidWord::parse(3, "t1"),
            Err(BraidError::BadLetter(_))
        ));
        assert!(matches!(
            BraidWord::parse(3, "s3"),
            Err(BraidError::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(
            BraidWord::parse(3, "s0"),
            Err(BraidError::GeneratorOutOfRange { .. })
        ));
    }

    #[test]
    fn half_twist_b3_is_s1s2s1() {
        let d = BraidWord::half_twist(3).unwrap();
        assert_eq!(d.to_string(), "s1 s2 s1");
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let w = BraidWord::parse(4, "s1 s3^-1 s2").unwrap();
        assert_eq!(w.inverse().to_string(), "s2^-1 s3 s1^-1");
    }
}
