//! Admissible chains `(m, k_1, …, k_j)`: each `k_i` lies strictly below the
//! running gcd `m_i` (with `m_1 = m`, `m_{i+1} = gcd(m_i, k_i)`) and the ladder
//! ends at 1. For fixed `m` they index the intervals on which the critical
//! value keeps the same expansion.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::bullet::bullet_fold;
use crate::error::{Error, Result};
use crate::words::{cyclic_max, farey_word, PeriodicSequence, Word};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    m: u64,
    ks: Vec<u64>,
}

/// Shape of the interval that starts at a chain's endpoint, read off from how
/// the successor chain is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalType {
    /// `k_j + 1 < m_j` and `gcd(k_j + 1, m_j) = 1`.
    A,
    /// `k_j + 1 < m_j` and `gcd(k_j + 1, m_j) > 1`.
    B,
    /// `k_j = m_j - 1` and `gcd(k_{j-1} + 1, m_{j-1}) = 1`.
    C,
    /// `k_j = m_j - 1` and `gcd(k_{j-1} + 1, m_{j-1}) > 1`.
    D,
    /// The chain `(m, m-1)`; its interval reaches 2.
    Last,
}

impl fmt::Display for IntervalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IntervalType::A => "A",
            IntervalType::B => "B",
            IntervalType::C => "C",
            IntervalType::D => "D",
            IntervalType::Last => "last",
        };
        f.write_str(s)
    }
}

impl Chain {
    pub fn new(m: u64, ks: Vec<u64>) -> Result<Self> {
        let bad = |why: String| Error::InvalidChain(why);
        if m < 2 {
            return Err(bad(format!("modulus must be >= 2, got {m}")));
        }
        if ks.is_empty() {
            return Err(bad("chain needs at least one k".into()));
        }
        let mut mi = m;
        for (i, &k) in ks.iter().enumerate() {
            if mi == 1 {
                return Err(bad(format!(
                    "entries after the gcd reached 1 (position {i})"
                )));
            }
            if k == 0 || k >= mi {
                return Err(bad(format!(
                    "k_{} = {k} must lie in [1, {}]",
                    i + 1,
                    mi - 1
                )));
            }
            mi = mi.gcd(&k);
        }
        if mi != 1 {
            return Err(bad(format!("gcd ladder stops at {mi}, not 1")));
        }
        Ok(Chain { m, ks })
    }

    /// `(m, 1)`, the first chain in order.
    pub fn first(m: u64) -> Result<Self> {
        Chain::new(m, vec![1])
    }

    /// `(m, m-1)`, the last chain in order.
    pub fn last(m: u64) -> Result<Self> {
        Chain::new(m, vec![m.saturating_sub(1)])
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn ks(&self) -> &[u64] {
        &self.ks
    }

    /// The gcd ladder `m_1, …, m_j` (one modulus per `k`).
    pub fn moduli(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.ks.len());
        let mut mi = self.m;
        for &k in &self.ks {
            out.push(mi);
            mi = mi.gcd(&k);
        }
        out
    }

    pub fn is_last(&self) -> bool {
        self.ks.len() == 1 && self.ks[0] == self.m - 1
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.m)?;
        for k in &self.ks {
            write!(f, ",{k}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain{self}")
    }
}

/// Accepts `(8,4,2,1)` or `8,4,2,1`.
impl FromStr for Chain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let nums = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad chain entry {t:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        let (&m, ks) = nums
            .split_first()
            .ok_or_else(|| Error::Parse("empty chain".into()))?;
        Chain::new(m, ks.to_vec())
    }
}

/// All admissible `m`-chains in increasing order, by depth-first traversal.
pub fn enumerate_chains(m: u64) -> Result<Vec<Chain>> {
    if m < 2 {
        return Err(Error::Range(format!("m must be >= 2, got {m}")));
    }
    fn walk(m: u64, mi: u64, prefix: &mut Vec<u64>, out: &mut Vec<Chain>) {
        for k in 1..mi {
            prefix.push(k);
            match mi.gcd(&k) {
                1 => out.push(Chain {
                    m,
                    ks: prefix.clone(),
                }),
                g => walk(m, g, prefix, out),
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(m, m, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `ψ(1), …, ψ(n)` from `ψ(1) = 1`, `ψ(n) = Σ_{k<n} ψ(gcd(n, k))`.
pub fn psi_table(n: u64) -> Vec<u64> {
    let mut t = vec![0u64; n as usize + 1];
    for i in 1..=n {
        t[i as usize] = if i == 1 {
            1
        } else {
            (1..i).map(|k| t[i.gcd(&k) as usize]).sum()
        };
    }
    t.remove(0);
    t
}

/// `ψ(m)`, the number of admissible `m`-chains for `m >= 2`.
pub fn psi(m: u64) -> u64 {
    assert!(m >= 1, "psi is defined for m >= 1");
    *psi_table(m).last().unwrap()
}

/// `w_{k_1/m_1} • … • w_{k_j/m_j}`, a Lyndon word of length `m`.
pub fn chain_word(c: &Chain) -> Word {
    let factors: Vec<Word> = c
        .moduli()
        .iter()
        .zip(&c.ks)
        .map(|(&mi, &k)| farey_word(k, mi).expect("valid chain entries"))
        .collect();
    bullet_fold(&factors).expect("Farey words are Lyndon")
}

/// `L(chain_word(c))`; its periodic repetition is the quasi-greedy expansion
/// of 1 at the chain's endpoint base.
pub fn anchor(c: &Chain) -> Word {
    cyclic_max(&chain_word(c)).expect("non-empty word")
}

pub fn anchor_sequence(c: &Chain) -> PeriodicSequence {
    PeriodicSequence::new(anchor(c)).expect("non-empty word")
}

/// Vector order of chains with the same modulus.
pub fn chain_cmp(a: &Chain, b: &Chain) -> Result<Ordering> {
    if a.m != b.m {
        return Err(Error::Modulus(a.m, b.m));
    }
    Ok(a.ks.cmp(&b.ks))
}

/// The next admissible chain in order, or `None` after `(m, m-1)`.
pub fn chain_successor(c: &Chain) -> Option<Chain> {
    let ms = c.moduli();
    for i in (0..c.ks.len()).rev() {
        let k = c.ks[i] + 1;
        if k < ms[i] {
            let mut ks = c.ks[..i].to_vec();
            ks.push(k);
            if ms[i].gcd(&k) > 1 {
                ks.push(1);
            }
            return Some(Chain { m: c.m, ks });
        }
    }
    None
}

pub fn interval_type(c: &Chain) -> IntervalType {
    if c.is_last() {
        return IntervalType::Last;
    }
    let ms = c.moduli();
    let j = c.ks.len() - 1;
    if c.ks[j] + 1 < ms[j] {
        if (c.ks[j] + 1).gcd(&ms[j]) == 1 {
            IntervalType::A
        } else {
            IntervalType::B
        }
    } else if (c.ks[j - 1] + 1).gcd(&ms[j - 1]) == 1 {
        IntervalType::C
    } else {
        IntervalType::D
    }
}

/// `k_1/m_1, …, k_j/m_j`, reduced.
pub fn chain_rationals(c: &Chain) -> Vec<Ratio<u64>> {
    c.moduli()
        .iter()
        .zip(&c.ks)
        .map(|(&mi, &k)| Ratio::new(k, mi))
        .collect()
}
