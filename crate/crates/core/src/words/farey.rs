//! Farey words and the Sturmian substitutions `U0: 0→0, 1→01` and
//! `U1: 0→01, 1→1`.

use num_integer::Integer;
use num_rational::Ratio;

use super::Word;
use crate::error::{Error, Result};

/// `w_{p/q}`: digit `k` is 1 iff the rotation by `p/q` passes 0 between steps
/// `k-1` and `k`. Computed with residues mod `q`. Non-reduced fractions are
/// reduced first.
pub fn farey_word(p: u64, q: u64) -> Result<Word> {
    if p == 0 || p >= q {
        return Err(Error::Range(format!("{p}/{q} is not in (0,1)")));
    }
    let d = p.gcd(&q);
    let (p, q) = (p / d, q / d);
    let mut digits = Vec::with_capacity(q as usize);
    let mut r = 0u64;
    for _ in 0..q {
        let next = r + p;
        if next >= q {
            digits.push(1);
            r = next - q;
        } else {
            digits.push(0);
            r = next;
        }
    }
    Ok(Word::from_digits_unchecked(digits))
}

/// `|w|_1 / |w|` for a Farey word, checked by rebuilding the word.
pub fn farey_index(w: &Word) -> Result<Ratio<u64>> {
    let not_farey = || Error::NotFarey(w.to_string());
    let (ones, len) = (w.ones() as u64, w.len() as u64);
    if len < 2 || ones == 0 || ones == len || ones.gcd(&len) != 1 {
        return Err(not_farey());
    }
    if farey_word(ones, len)? != *w {
        return Err(not_farey());
    }
    Ok(Ratio::new(ones, len))
}

fn apply_u(d: u8, w: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 * w.len());
    for &x in w {
        // U_d fixes the digit d and sends the other digit to 01.
        if x == d {
            out.push(x);
        } else {
            out.extend_from_slice(&[0, 1]);
        }
    }
    out
}

/// `U_{d_1} ∘ … ∘ U_{d_n}` applied to `w`, where `code = d_1 … d_n`.
pub fn substitute_u(code: &Word, w: &Word) -> Word {
    let digits = code
        .digits()
        .iter()
        .rev()
        .fold(w.digits().to_vec(), |acc, &d| apply_u(d, &acc));
    Word::from_digits_unchecked(digits)
}

/// The code `c` with `w = substitute_u(c, 01)`, found by peeling off one
/// substitution at a time.
pub fn farey_code(w: &Word) -> Result<Word> {
    let not_farey = || Error::NotFarey(w.to_string());
    let mut cur = w.digits().to_vec();
    let mut code = Vec::new();
    loop {
        if cur == [0, 1] {
            return Ok(Word::from_digits_unchecked(code));
        }
        if cur.len() < 2 || cur[0] != 0 || cur[cur.len() - 1] != 1 {
            return Err(not_farey());
        }
        let has_11 = cur.windows(2).any(|p| p == [1, 1]);
        let has_00 = cur.windows(2).any(|p| p == [0, 0]);
        let (d, next) = match (has_00, has_11) {
            (true, true) => return Err(not_farey()),
            // No 11 and ends with 1: invert U0 (01 → 1, lone 0 → 0).
            (_, false) => (0, invert_u(&cur, 0)),
            // No 00 and starts with 0: invert U1 (01 → 0, lone 1 → 1).
            (false, true) => (1, invert_u(&cur, 1)),
        };
        code.push(d);
        cur = next;
    }
}

fn invert_u(w: &[u8], d: u8) -> Vec<u8> {
    let mut out = Vec::with_capacity(w.len());
    let mut i = 0;
    while i < w.len() {
        if w[i] == 0 && w.get(i + 1) == Some(&1) {
            out.push(1 - d);
            i += 2;
        } else {
            out.push(d);
            i += 1;
        }
    }
    out
}
