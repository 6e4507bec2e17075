//! Finite binary words: ordering, cyclic extremes, digit bumps, and the
//! Lyndon / Perron predicates.
//!
//! Farey words and the `U0`/`U1` substitutions live in [`farey`]; infinite
//! periodic and eventually periodic sequences live in [`sequence`].

pub mod farey;
pub mod sequence;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use farey::{farey_code, farey_index, farey_word, substitute_u};
pub use sequence::{
    lex_cmp_eventually_periodic, lex_cmp_periodic, EventuallyPeriodicSequence, PeriodicSequence,
};

/// A finite word over `{0, 1}`.
///
/// The derived `Ord` is the usual slice order, in which a proper prefix sorts
/// first. Use [`lex_cmp_words`] when the prefix case has to be told apart.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

/// Outcome of comparing two finite words digit by digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordOrdering {
    Less,
    Equal,
    Greater,
    /// One word is a proper prefix of the other and no digit differs.
    Prefix,
}

impl WordOrdering {
    pub fn is_less(self) -> bool {
        self == WordOrdering::Less
    }

    pub fn is_greater(self) -> bool {
        self == WordOrdering::Greater
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from digits, rejecting anything other than 0 and 1.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        if let Some(d) = digits.iter().find(|&&d| d > 1) {
            return Err(Error::Parse(format!("digit {d} is not binary")));
        }
        Ok(Word(digits))
    }

    pub(crate) fn from_digits_unchecked(digits: Vec<u8>) -> Self {
        debug_assert!(digits.iter().all(|&d| d <= 1));
        Word(digits)
    }

    /// `d` repeated `n` times.
    pub fn constant(d: u8, n: usize) -> Self {
        assert!(d <= 1);
        Word(vec![d; n])
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Number of ones, `|w|_1`.
    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&d| d == 1).count()
    }

    /// Number of zeros, `|w|_0`.
    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, d: u8) {
        assert!(d <= 1);
        self.0.push(d);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// First `n` digits (the whole word if shorter).
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Cyclic rotation moving the first `k` digits to the end.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(move |k| self.rotate_left(k))
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Length of the shortest `p` dividing `|w|` with `w = (w_1..w_p)^(|w|/p)`.
    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        // KMP failure function: the smallest period is n - border(n).
        let mut fail = vec![0usize; n + 1];
        let mut k = 0usize;
        for i in 1..n {
            while k > 0 && self.0[i] != self.0[k] {
                k = fail[k];
            }
            if self.0[i] == self.0[k] {
                k += 1;
            }
            fail[i + 1] = k;
        }
        let p = n - fail[n];
        if n.is_multiple_of(p) {
            p
        } else {
            n
        }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_empty() && self.primitive_period() == self.len()
    }

    pub fn primitive_root(&self) -> Word {
        Word(self.0[..self.primitive_period()].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "Word(ε)")
        } else {
            write!(f, "Word({self})")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in word"
                ))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// Test and doc helper: parses a binary literal, panicking on bad input.
pub fn w(s: &str) -> Word {
    s.parse().expect("binary word literal")
}

/// Lexicographic comparison of finite words, reporting the prefix case
/// separately from strict orderings.
pub fn lex_cmp_words(u: &Word, v: &Word) -> WordOrdering {
    for (a, b) in u.0.iter().zip(&v.0) {
        if a != b {
            return if a < b {
                WordOrdering::Less
            } else {
                WordOrdering::Greater
            };
        }
    }
    if u.len() == v.len() {
        WordOrdering::Equal
    } else {
        WordOrdering::Prefix
    }
}

fn cmp_rotations(w: &[u8], i: usize, j: usize) -> std::cmp::Ordering {
    let n = w.len();
    for t in 0..n {
        let a = w[(i + t) % n];
        let b = w[(j + t) % n];
        if a != b {
            return a.cmp(&b);
        }
    }
    std::cmp::Ordering::Equal
}

/// `L(w)`: the lexicographically largest cyclic rotation.
pub fn cyclic_max(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::Empty);
    }
    let best = (1..w.len()).fold(0, |best, i| {
        if cmp_rotations(&w.0, i, best).is_gt() {
            i
        } else {
            best
        }
    });
    Ok(w.rotate_left(best))
}

/// `S(w)`: the lexicographically smallest cyclic rotation.
pub fn cyclic_min(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::Empty);
    }
    let best = (1..w.len()).fold(0, |best, i| {
        if cmp_rotations(&w.0, i, best).is_lt() {
            i
        } else {
            best
        }
    });
    Ok(w.rotate_left(best))
}

/// `w⁺`: replaces a final 0 by 1.
pub fn bump_up(w: &Word) -> Result<Word> {
    match w.last() {
        Some(0) => {
            let mut v = w.0.clone();
            *v.last_mut().unwrap() = 1;
            Ok(Word(v))
        }
        _ => Err(Error::DigitBumpDomain("bump_up needs a word ending in 0")),
    }
}

/// `w⁻`: replaces a final 1 by 0.
pub fn bump_down(w: &Word) -> Result<Word> {
    match w.last() {
        Some(1) => {
            let mut v = w.0.clone();
            *v.last_mut().unwrap() = 0;
            Ok(Word(v))
        }
        _ => Err(Error::DigitBumpDomain("bump_down needs a word ending in 1")),
    }
}

/// Digit-wise complement.
pub fn conjugate(w: &Word) -> Word {
    Word(w.0.iter().map(|d| 1 - d).collect())
}

/// Every proper suffix is strictly larger than the prefix of the same length.
/// Single digits count as Lyndon words.
pub fn is_lyndon(w: &Word) -> bool {
    let m = w.len();
    if m == 0 {
        return false;
    }
    (1..m).all(|i| w.0[i..] > w.0[..m - i])
}

/// Every proper suffix is strictly smaller than the prefix of the same length.
pub fn is_perron(w: &Word) -> Result<bool> {
    let n = w.len();
    if n < 2 {
        return Err(Error::TooShort { min: 2, len: n });
    }
    Ok((1..n).all(|i| w.0[i..] < w.0[..n - i]))
}

/// Zero runs of a word: for each 1, read left to right, the number of zeros
/// immediately before it; zeros after the final 1 are kept apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunLengthProfile {
    pub before_ones: Vec<usize>,
    pub trailing_zeros: usize,
}

impl RunLengthProfile {
    /// Word has the block form `0^{i_1}1 ... 0^{i_l}1` with every `i_j` in `allowed`.
    pub fn blocks_within(&self, allowed: &[usize]) -> bool {
        !self.before_ones.is_empty()
            && self.trailing_zeros == 0
            && self.before_ones.iter().all(|r| allowed.contains(r))
    }
}

pub fn run_length_profile(w: &Word) -> RunLengthProfile {
    let mut before_ones = Vec::new();
    let mut run = 0;
    for &d in &w.0 {
        if d == 0 {
            run += 1;
        } else {
            before_ones.push(run);
            run = 0;
        }
    }
    RunLengthProfile {
        before_ones,
        trailing_zeros: run,
    }
}

/// Balanced in the linear sense: any two factors of equal length differ by
/// at most one in their number of ones.
pub fn is_balanced(w: &Word) -> bool {
    let n = w.len();
    let mut prefix = vec![0usize; n + 1];
    for (i, &d) in w.0.iter().enumerate() {
        prefix[i + 1] = prefix[i] + d as usize;
    }
    (1..n).all(|len| {
        let counts = (0..=n - len).map(|i| prefix[i + len] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        hi - lo <= 1
    })
}
