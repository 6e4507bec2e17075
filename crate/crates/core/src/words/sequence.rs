//! Periodic and eventually periodic infinite words, stored in normal form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::{conjugate, Word};
use crate::error::{Error, Result};

/// `w^∞`, stored by its primitive root so that equal sequences compare equal
/// structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSequence {
    period: Word,
}

impl PeriodicSequence {
    pub fn new(period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Empty);
        }
        Ok(PeriodicSequence {
            period: period.primitive_root(),
        })
    }

    /// `d^∞` for a single digit.
    pub fn constant(d: u8) -> Self {
        PeriodicSequence {
            period: Word::constant(d, 1),
        }
    }

    /// The primitive period.
    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Always true: construction canonicalizes.
    pub fn is_canonical(&self) -> bool {
        true
    }

    pub fn digit(&self, i: usize) -> u8 {
        self.period.digits()[i % self.period.len()]
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::from_digits_unchecked((0..n).map(|i| self.digit(i)).collect())
    }

    /// `σ^k` of the sequence.
    pub fn shift(&self, k: usize) -> PeriodicSequence {
        PeriodicSequence {
            period: self.period.rotate_left(k),
        }
    }

    pub fn conjugate(&self) -> PeriodicSequence {
        PeriodicSequence {
            period: conjugate(&self.period),
        }
    }
}

impl Ord for PeriodicSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_periodic(self, other)
    }
}

impl PartialOrd for PeriodicSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^∞", self.period)
    }
}

impl fmt::Debug for PeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodicSequence({self})")
    }
}

/// Compares `a^∞` with `b^∞` over `lcm(|a|, |b|)` digits.
pub fn lex_cmp_periodic(a: &PeriodicSequence, b: &PeriodicSequence) -> Ordering {
    let n = a.period.len().lcm(&b.period.len());
    (0..n)
        .map(|i| a.digit(i).cmp(&b.digit(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// `u v^∞` in normal form: shortest preperiod, primitive tail.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicSequence {
    preperiod: Word,
    tail: PeriodicSequence,
}

impl EventuallyPeriodicSequence {
    pub fn new(preperiod: Word, tail: PeriodicSequence) -> Self {
        let mut pre = preperiod.into_digits();
        let mut period = tail.period.into_digits();
        // u d (v' d)^∞ = u (d v')^∞: fold the preperiod's last digit into the tail.
        while let (Some(&a), Some(&b)) = (pre.last(), period.last()) {
            if a != b {
                break;
            }
            pre.pop();
            period.rotate_right(1);
        }
        EventuallyPeriodicSequence {
            preperiod: Word::from_digits_unchecked(pre),
            tail: PeriodicSequence {
                period: Word::from_digits_unchecked(period),
            },
        }
    }

    pub fn periodic(tail: PeriodicSequence) -> Self {
        EventuallyPeriodicSequence {
            preperiod: Word::empty(),
            tail,
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn tail(&self) -> &PeriodicSequence {
        &self.tail
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    pub fn digit(&self, i: usize) -> u8 {
        let p = self.preperiod.len();
        if i < p {
            self.preperiod.digits()[i]
        } else {
            self.tail.digit(i - p)
        }
    }

    pub fn first(&self) -> u8 {
        self.digit(0)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::from_digits_unchecked((0..n).map(|i| self.digit(i)).collect())
    }

    pub fn conjugate(&self) -> Self {
        EventuallyPeriodicSequence {
            preperiod: conjugate(&self.preperiod),
            tail: self.tail.conjugate(),
        }
    }
}

impl From<PeriodicSequence> for EventuallyPeriodicSequence {
    fn from(tail: PeriodicSequence) -> Self {
        EventuallyPeriodicSequence::periodic(tail)
    }
}

impl Ord for EventuallyPeriodicSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_eventually_periodic(self, other)
    }
}

impl PartialOrd for EventuallyPeriodicSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EventuallyPeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.preperiod, self.tail)
    }
}

impl fmt::Debug for EventuallyPeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EventuallyPeriodicSequence({self})")
    }
}

/// Parses `pre:period`, e.g. `1:0` for `1(0)^∞` or `:10` for `(10)^∞`.
impl FromStr for EventuallyPeriodicSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (pre, period) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected <preperiod>:<period>, got {s:?}")))?;
        let tail = PeriodicSequence::new(period.parse()?)
            .map_err(|_| Error::Parse("period must be non-empty".into()))?;
        Ok(EventuallyPeriodicSequence::new(pre.parse()?, tail))
    }
}

/// Exact comparison of `x` and `y`; beyond `max(|pre|) + lcm(|tails|)` digits both
/// sequences share a period, so agreement up to there means equality.
pub fn lex_cmp_eventually_periodic(
    x: &EventuallyPeriodicSequence,
    y: &EventuallyPeriodicSequence,
) -> Ordering {
    let n =
        x.preperiod.len().max(y.preperiod.len()) + x.tail.period.len().lcm(&y.tail.period.len());
    (0..n)
        .map(|i| x.digit(i).cmp(&y.digit(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn ps(s: &str) -> PeriodicSequence {
        PeriodicSequence::new(w(s)).unwrap()
    }

    fn eps(s: &str) -> EventuallyPeriodicSequence {
        s.parse().unwrap()
    }

    #[test]
    fn periodic_canonical_form() {
        assert_eq!(ps("0101").period(), &w("01"));
        assert_eq!(ps("01"), ps("010101"));
        assert_eq!(PeriodicSequence::new(Word::empty()), Err(Error::Empty));
    }

    #[test]
    fn periodic_ordering() {
        assert_eq!(lex_cmp_periodic(&ps("10"), &ps("1")), Ordering::Less);
        assert_eq!(lex_cmp_periodic(&ps("01"), &ps("0101")), Ordering::Equal);
        assert_eq!(
            lex_cmp_periodic(&ps("10010000"), &ps("10100100")),
            Ordering::Less
        );
        // 10 vs 100: differs only after the shorter period wraps
        assert_eq!(lex_cmp_periodic(&ps("10"), &ps("100")), Ordering::Greater);
    }

    #[test]
    fn eventually_periodic_normal_form() {
        let x = eps("0110:0110");
        assert!(x.is_purely_periodic());
        assert_eq!(x.tail().period(), &w("0110"));
        let y = eps("0:1100");
        assert_eq!(y.preperiod(), &Word::empty());
        assert_eq!(y.tail().period(), &w("0110"));
        let y = eps("01:10");
        assert_eq!(y.preperiod(), &w("01"));
        let z = eps("1:0");
        assert_eq!(z.preperiod(), &w("1"));
        assert_eq!(z.to_string(), "1(0)^∞");
    }

    #[test]
    fn eventually_periodic_ordering() {
        assert_eq!(
            lex_cmp_eventually_periodic(&eps("1:0"), &eps(":10")),
            Ordering::Less
        );
        assert_eq!(
            lex_cmp_eventually_periodic(&eps("0:1100"), &eps(":0110")),
            Ordering::Equal
        );
        assert_eq!(
            lex_cmp_eventually_periodic(&eps("01:10"), &eps(":0110")),
            Ordering::Greater
        );
        assert_eq!(
            lex_cmp_eventually_periodic(&eps(":1110"), &eps(":1110")),
            Ordering::Equal
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "10".parse::<EventuallyPeriodicSequence>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "1:".parse::<EventuallyPeriodicSequence>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "1:2".parse::<EventuallyPeriodicSequence>(),
            Err(Error::Parse(_))
        ));
    }
}
