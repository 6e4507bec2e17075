//! The block substitution `s • r`.
//!
//! Each digit of `r` is replaced by a block of length `|s|` chosen from the
//! previous digit and the current one:
//!
//! | prev, cur | block  |
//! |-----------|--------|
//! | 0, 0      | L(s)   |
//! | 0, 1      | L(s)⁺  |
//! | 1, 0      | s⁻     |
//! | 1, 1      | s      |
//!
//! The first digit behaves as if preceded by its complement, so it yields
//! `s⁻` for 0 and `L(s)⁺` for 1.

use crate::error::{Error, Result};
use crate::words::{
    bump_down, bump_up, cyclic_max, is_lyndon, EventuallyPeriodicSequence, PeriodicSequence, Word,
};

struct Blocks {
    s: Word,
    s_minus: Word,
    l: Word,
    l_plus: Word,
}

impl Blocks {
    fn new(s: &Word) -> Result<Self> {
        if s.len() < 2 || !is_lyndon(s) {
            return Err(Error::OperandDomain(s.to_string()));
        }
        let l = cyclic_max(s)?;
        Ok(Blocks {
            s: s.clone(),
            s_minus: bump_down(s)?,
            l_plus: bump_up(&l)?,
            l,
        })
    }

    fn block(&self, prev: u8, cur: u8) -> &Word {
        match (prev, cur) {
            (0, 0) => &self.l,
            (0, _) => &self.l_plus,
            (_, 0) => &self.s_minus,
            _ => &self.s,
        }
    }
}

/// `s • r` for a Lyndon word `s` of length at least 2.
pub fn bullet(s: &Word, r: &Word) -> Result<Word> {
    let blocks = Blocks::new(s)?;
    let first = r.first().ok_or(Error::Empty)?;
    let mut out = Word::empty();
    let mut prev = 1 - first;
    for &d in r.digits() {
        out.extend_from(blocks.block(prev, d));
        prev = d;
    }
    Ok(out)
}

/// `s • r^∞`. The first block follows the start rule and every later block
/// follows the transition table, so the image is `(s • r)^∞` whenever the last
/// digit of the period differs from its first (for instance when the period is
/// a Lyndon word of length at least 2), and carries a one-block preperiod
/// otherwise.
pub fn bullet_periodic(s: &Word, r: &PeriodicSequence) -> Result<EventuallyPeriodicSequence> {
    let blocks = Blocks::new(s)?;
    let p = r.period().digits();
    let n = p.len();
    let pre = blocks.block(1 - p[0], p[0]).clone();
    let mut tail = Word::empty();
    for i in 1..=n {
        tail.extend_from(blocks.block(p[i - 1], p[i % n]));
    }
    Ok(EventuallyPeriodicSequence::new(
        pre,
        PeriodicSequence::new(tail)?,
    ))
}

/// Left fold `w_1 • w_2 • … • w_n`; every operand must be a Lyndon word of
/// length at least 2.
pub fn bullet_fold(ws: &[Word]) -> Result<Word> {
    let (first, rest) = ws.split_first().ok_or(Error::Empty)?;
    if let Some(bad) = ws.iter().find(|x| x.len() < 2 || !is_lyndon(x)) {
        return Err(Error::OperandDomain(bad.to_string()));
    }
    rest.iter()
        .try_fold(first.clone(), |acc, r| bullet(&acc, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{bump_down, bump_up, farey_word, w};

    #[test]
    fn transition_pattern() {
        let s = farey_word(3, 8).unwrap();
        let l = cyclic_max(&s).unwrap();
        let expected = [
            bump_down(&s).unwrap(),
            bump_up(&l).unwrap(),
            s.clone(),
            bump_down(&s).unwrap(),
            bump_up(&l).unwrap(),
        ]
        .iter()
        .fold(Word::empty(), |acc, b| acc.concat(b));
        assert_eq!(bullet(&s, &w("01101")).unwrap(), expected);
    }

    #[test]
    fn small_products() {
        assert_eq!(bullet(&w("0001"), &w("01")).unwrap(), w("00001001"));
        assert_eq!(bullet(&w("01"), &w("0001")).unwrap(), w("00101011"));
        assert_eq!(bullet(&w("01"), &w("0111")).unwrap(), w("00110101"));
        assert_eq!(bullet(&w("01"), &w("1000")).unwrap(), w("11001010"));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            bullet(&w("1"), &w("01")),
            Err(Error::OperandDomain(_))
        ));
        assert!(matches!(
            bullet(&w("0101"), &w("01")),
            Err(Error::OperandDomain(_))
        ));
        assert!(matches!(
            bullet(&w("10"), &w("01")),
            Err(Error::OperandDomain(_))
        ));
        assert_eq!(bullet(&w("01"), &Word::empty()), Err(Error::Empty));
        assert!(matches!(
            bullet_fold(&[w("01"), w("0101")]),
            Err(Error::OperandDomain(_))
        ));
        assert_eq!(bullet_fold(&[]), Err(Error::Empty));
    }

    #[test]
    fn periodic_images() {
        let ps = |s: &str| PeriodicSequence::new(w(s)).unwrap();
        let one = bullet_periodic(&w("01"), &ps("1")).unwrap();
        assert_eq!(one.to_string(), "1(10)^∞");
        assert_eq!(one.prefix(8), bullet(&w("01"), &w("1111")).unwrap());
        let x = bullet_periodic(&w("01"), &ps("01")).unwrap();
        assert_eq!(x, EventuallyPeriodicSequence::periodic(ps("0011")));
        let y = bullet_periodic(&w("0001"), &ps("01")).unwrap();
        assert_eq!(y, EventuallyPeriodicSequence::periodic(ps("00001001")));
    }

    #[test]
    fn folds() {
        assert_eq!(bullet_fold(&[w("01"), w("0001")]).unwrap(), w("00101011"));
        assert_eq!(bullet_fold(&[w("0001"), w("01")]).unwrap(), w("00001001"));
        let three = bullet_fold(&[w("01"), w("01"), w("01")]).unwrap();
        let right = bullet(&w("01"), &bullet(&w("01"), &w("01")).unwrap()).unwrap();
        let left = bullet(&bullet(&w("01"), &w("01")).unwrap(), &w("01")).unwrap();
        assert_eq!(three, left);
        assert_eq!(three, right);
        assert_eq!(three, w("00101101"));
    }
}
