//! Extremal words among the Lyndon words (resp. Perron words) of length `m`
//! with `k` ones, and the block recodings `Φ_q`, `Ψ_q`.

use num_integer::Integer;

use crate::bullet::bullet;
use crate::error::{Error, Result};
use crate::oracle::enumerate_lyndon_bounded;
use crate::words::{cyclic_max, farey_word, Word};

/// Largest length accepted by the brute-force searches.
pub const DEFAULT_BRUTE_BOUND: usize = 18;

fn check_mk(m: u64, k: u64) -> Result<()> {
    if m < 2 || k == 0 || k >= m {
        return Err(Error::Range(format!("need 1 <= k < m, got m={m}, k={k}")));
    }
    Ok(())
}

/// `01^{d-1}`
fn zero_ones(d: u64) -> Word {
    let mut v = Word::constant(0, 1);
    v.extend_from(&Word::constant(1, d as usize - 1));
    v
}

/// `10^{d-1}`
fn one_zeros(d: u64) -> Word {
    let mut v = Word::constant(1, 1);
    v.extend_from(&Word::constant(0, d as usize - 1));
    v
}

/// The largest Lyndon word of length `m` with `k` ones.
pub fn max_lyndon(m: u64, k: u64) -> Result<Word> {
    check_mk(m, k)?;
    let fw = farey_word(k, m)?;
    match m.gcd(&k) {
        1 => Ok(fw),
        d => bullet(&fw, &zero_ones(d)),
    }
}

/// The smallest Perron word of length `m` with `k` ones.
pub fn min_perron(m: u64, k: u64) -> Result<Word> {
    check_mk(m, k)?;
    let fw = farey_word(k, m)?;
    match m.gcd(&k) {
        1 => cyclic_max(&fw),
        d => bullet(&fw, &one_zeros(d)),
    }
}

fn lyndon_with_ones(m: u64, k: u64, bound: usize) -> Result<Vec<Word>> {
    check_mk(m, k)?;
    let all = enumerate_lyndon_bounded(m as usize, bound)?;
    Ok(all.into_iter().filter(|w| w.ones() as u64 == k).collect())
}

/// Exhaustive counterpart of [`max_lyndon`].
pub fn brute_max_lyndon(m: u64, k: u64) -> Result<Word> {
    brute_max_lyndon_bounded(m, k, DEFAULT_BRUTE_BOUND)
}

pub fn brute_max_lyndon_bounded(m: u64, k: u64, bound: usize) -> Result<Word> {
    let words = lyndon_with_ones(m, k, bound)?;
    Ok(words
        .into_iter()
        .max()
        .expect("some Lyndon word has k ones"))
}

/// Exhaustive counterpart of [`min_perron`]: the least cyclic maximum over
/// the Lyndon words with `k` ones.
pub fn brute_min_perron(m: u64, k: u64) -> Result<Word> {
    brute_min_perron_bounded(m, k, DEFAULT_BRUTE_BOUND)
}

pub fn brute_min_perron_bounded(m: u64, k: u64, bound: usize) -> Result<Word> {
    let words = lyndon_with_ones(m, k, bound)?;
    words
        .iter()
        .map(cyclic_max)
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().min().expect("some Lyndon word has k ones"))
}

/// All Lyndon words of length `m`, in lexicographic order.
pub fn lyndon_all(m: usize) -> Result<Vec<Word>> {
    enumerate_lyndon_bounded(m, DEFAULT_BRUTE_BOUND)
}

/// Splits `w` into blocks `0^r 1` (leading) or `1 0^r` (trailing) and maps
/// each run length `r` through `code`.
fn recode<F>(w: &Word, leading_zeros: bool, code: F) -> Result<Vec<u8>>
where
    F: Fn(usize) -> Option<u8>,
{
    let bad = |why: &str| Error::BlockParse(format!("{w}: {why}"));
    let d = w.digits();
    let mut out = Vec::new();
    let mut i = 0;
    while i < d.len() {
        let run;
        if leading_zeros {
            let start = i;
            while i < d.len() && d[i] == 0 {
                i += 1;
            }
            if i == d.len() {
                return Err(bad("trailing zeros do not form a block"));
            }
            run = i - start;
            i += 1;
        } else {
            if d[i] != 1 {
                return Err(bad("block must start with 1"));
            }
            i += 1;
            let start = i;
            while i < d.len() && d[i] == 0 {
                i += 1;
            }
            run = i - start;
        }
        out.push(code(run).ok_or_else(|| bad(&format!("no block with {run} zeros")))?);
    }
    Ok(out)
}

fn expand(w: &Word, blocks: [Word; 2]) -> Word {
    w.digits()
        .iter()
        .fold(Word::empty(), |acc, &d| acc.concat(&blocks[d as usize]))
}

/// `Φ_q`: `0^{q+1}1 ↦ 0`, `0^q1 ↦ 1`.
pub fn phi_substitute(q: usize, w: &Word) -> Result<Word> {
    let v = recode(w, true, |r| {
        if r == q + 1 {
            Some(0)
        } else if r == q {
            Some(1)
        } else {
            None
        }
    })?;
    Ok(Word::from_digits_unchecked(v))
}

/// `Φ_q^{-1}`: `0 ↦ 0^{q+1}1`, `1 ↦ 0^q1`.
pub fn phi_inverse(q: usize, w: &Word) -> Word {
    let block = |z: usize| Word::constant(0, z).concat(&Word::constant(1, 1));
    expand(w, [block(q + 1), block(q)])
}

/// `Ψ_q`: `10^{q+1} ↦ 0`, `10^q ↦ 1`.
pub fn psi_substitute(q: usize, w: &Word) -> Result<Word> {
    let v = recode(w, false, |r| {
        if r == q + 1 {
            Some(0)
        } else if r == q {
            Some(1)
        } else {
            None
        }
    })?;
    Ok(Word::from_digits_unchecked(v))
}

/// `Ψ_q^{-1}`: `0 ↦ 10^{q+1}`, `1 ↦ 10^q`.
pub fn psi_inverse(q: usize, w: &Word) -> Word {
    let block = |z: usize| Word::constant(1, 1).concat(&Word::constant(0, z));
    expand(w, [block(q + 1), block(q)])
}

#[cfg(any(test, feature = "test-support"))]
fn ternary(q: usize) -> impl Fn(usize) -> Option<u8> {
    move |r| {
        if r == q + 1 {
            Some(0)
        } else if r == q {
            Some(1)
        } else if q >= 1 && r == q - 1 {
            Some(2)
        } else {
            None
        }
    }
}

/// `Φ'_q`: like `Φ_q` with the extra block `0^{q-1}1 ↦ 2`. Output digits are
/// in `{0,1,2}`.
#[cfg(any(test, feature = "test-support"))]
pub fn phi2_substitute(q: usize, w: &Word) -> Result<Vec<u8>> {
    recode(w, true, ternary(q))
}

/// `Ψ'_q`: like `Ψ_q` with the extra block `10^{q-1} ↦ 2`.
#[cfg(any(test, feature = "test-support"))]
pub fn psi2_substitute(q: usize, w: &Word) -> Result<Vec<u8>> {
    recode(w, false, ternary(q))
}
