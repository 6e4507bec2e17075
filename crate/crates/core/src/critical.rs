//! The critical value `τ_m(β)`: the largest hole `(0, t)` that some orbit of
//! smallest period `m` survives.
//!
//! The admissible `m`-chains, in order, cut `(1, 2]` into intervals
//! `(β_c, β_succ(c)]`, where `β_c` is the base whose quasi-greedy expansion
//! of 1 is the chain's anchor repeated. On the interval of `c` the critical
//! orbit is `chain_word(c)^∞`; below the first endpoint no orbit survives a
//! non-trivial hole, and above the last one the orbit is `(01^{m-1})^∞`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rayon::prelude::*;

use crate::chains::{
    anchor, anchor_sequence, chain_rationals, chain_successor, chain_word, enumerate_chains,
    interval_type, Chain, IntervalType,
};
use crate::error::{Error, Result};
use crate::numerics::{
    beta_from_perron_word, cmp_value_one, eval_periodic, two, BetaKind, BetaParam, RealInterval,
};
use crate::words::{
    farey_word, lex_cmp_eventually_periodic, lex_cmp_periodic, EventuallyPeriodicSequence,
    PeriodicSequence, Word,
};

/// Where a critical orbit came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `β` is at or below the first endpoint, so `τ_m(β) = 0`.
    ZeroExtremal,
    /// `β` is above the last endpoint; the orbit is `w_{(m-1)/m}^∞`.
    HighExtremal(Word),
    /// `β` lies in the interval of this chain.
    Chain(Chain),
    /// Found by exhaustive search over Lyndon words.
    Witness(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalValue {
    /// Enclosure of `τ_m(β)`.
    pub value: RealInterval,
    /// The exact value when `β` is rational.
    pub exact: Option<BigRational>,
    /// The greedy expansion of `τ_m(β)`.
    pub expansion: PeriodicSequence,
    pub provenance: Provenance,
}

impl CriticalValue {
    pub fn zero() -> Self {
        CriticalValue {
            value: RealInterval::point(BigRational::zero()),
            exact: Some(BigRational::zero()),
            expansion: PeriodicSequence::constant(0),
            provenance: Provenance::ZeroExtremal,
        }
    }

    fn from_word(word: Word, beta: &BetaParam, provenance: Provenance) -> Self {
        let expansion = PeriodicSequence::new(word).expect("non-empty word");
        let value = eval_periodic(&expansion, beta);
        let exact = matches!(beta.kind(), BetaKind::Exact(_)).then(|| value.lo().clone());
        CriticalValue {
            value,
            exact,
            expansion,
            provenance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// `β <= β_{m,1}`.
    BelowFirst,
    /// `β > β_{m,m-1}`.
    AboveLast,
    /// `β` lies in `(β_c, β_succ(c)]`.
    In(Chain),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::BelowFirst => f.write_str("below-first"),
            Classification::AboveLast => f.write_str("above-last"),
            Classification::In(c) => write!(f, "{c}"),
        }
    }
}

/// Finds the last chain `c` (in chain order) with `above(c)`, assuming
/// `above` is monotone along the order. Each level of the tree is searched
/// by bisection over `k`, testing the first chain of the subtree under `k`.
fn descend<F>(m: u64, mut above: F) -> Result<Option<Chain>>
where
    F: FnMut(&Chain) -> Result<bool>,
{
    let first_under = |prefix: &[u64], mi: u64, k: u64| {
        let mut ks = prefix.to_vec();
        ks.push(k);
        if mi.gcd(&k) > 1 {
            ks.push(1);
        }
        Chain::new(m, ks).expect("leftmost chain of a subtree is admissible")
    };
    let mut prefix: Vec<u64> = Vec::new();
    let mut mi = m;
    loop {
        // Invariant: above(first_under(prefix, mi, 1)) holds below the root.
        let (mut lo, mut hi) = if prefix.is_empty() {
            (0, mi - 1)
        } else {
            (1, mi - 1)
        };
        while lo < hi {
            let k = lo + (hi - lo).div_ceil(2);
            if above(&first_under(&prefix, mi, k))? {
                lo = k;
            } else {
                hi = k - 1;
            }
        }
        if lo == 0 {
            return Ok(None);
        }
        prefix.push(lo);
        let g = mi.gcd(&lo);
        if g == 1 {
            return Ok(Some(
                Chain::new(m, prefix).expect("admissible by construction"),
            ));
        }
        mi = g;
    }
}

/// Locates `β` among the `m`-partition intervals.
pub fn classify_beta(m: u64, beta: &BetaParam) -> Result<Classification> {
    if m < 2 {
        return Err(Error::Range(format!("m must be >= 2, got {m}")));
    }
    let found = descend(m, |c| match cmp_value_one(&anchor_sequence(c), beta) {
        Ok(o) => Ok(o == Ordering::Less),
        Err(Error::Ambiguous { .. }) => Err(Error::Ambiguous {
            chain: Some(c.clone()),
        }),
        Err(e) => Err(e),
    })?;
    Ok(match found {
        None => Classification::BelowFirst,
        Some(c) if c.is_last() => Classification::AboveLast,
        Some(c) => Classification::In(c),
    })
}

/// `w_{(m-1)/m} = 01^{m-1}`.
pub fn high_word(m: u64) -> Word {
    farey_word(m - 1, m).expect("m >= 2")
}

/// `τ_m(β)` with its expansion and the interval that produced it.
pub fn tau(m: u64, beta: &BetaParam) -> Result<CriticalValue> {
    Ok(match classify_beta(m, beta)? {
        Classification::BelowFirst => CriticalValue::zero(),
        Classification::AboveLast => {
            let w = high_word(m);
            CriticalValue::from_word(w.clone(), beta, Provenance::HighExtremal(w))
        }
        Classification::In(c) => {
            CriticalValue::from_word(chain_word(&c), beta, Provenance::Chain(c))
        }
    })
}

/// One interval `(β_c, β_succ(c)]` of the partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRow {
    pub chain: Chain,
    /// `L(chain_word)`; the left endpoint is the base with this expansion of 1.
    pub anchor: Word,
    pub left_endpoint: RealInterval,
    pub tau_word: Word,
    pub interval_type: IntervalType,
}

/// All `ψ(m)` intervals in order, endpoints enclosed to width `tol`.
pub fn partition_table(m: u64, tol: &BigRational) -> Result<Vec<PartitionRow>> {
    let chains = enumerate_chains(m)?;
    chains
        .into_par_iter()
        .map(|chain| {
            let a = anchor(&chain);
            Ok(PartitionRow {
                left_endpoint: beta_from_perron_word(&a, tol)?,
                anchor: a,
                tau_word: chain_word(&chain),
                interval_type: interval_type(&chain),
                chain,
            })
        })
        .collect()
}

/// Compares the rational vectors `(k_1/m_1, …)^∞` of two chains.
///
/// Distinct chains can share a vector, e.g. `(8,4,2,1)` and `(4,2,1)`, while
/// their critical values differ; use [`tau_compare_words`] for a comparison
/// that always agrees with the values.
pub fn tau_compare(cm: &Chain, cn: &Chain) -> Ordering {
    let a = chain_rationals(cm);
    let b = chain_rationals(cn);
    let n = a.len().lcm(&b.len());
    (0..n)
        .map(|i| a[i % a.len()].cmp(&b[i % b.len()]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Compares `chain_word(cm)^∞` with `chain_word(cn)^∞`. When both chains
/// classify the same `β`, both sequences are greedy expansions, so this is
/// the order of `τ_m(β)` and `τ_n(β)`.
pub fn tau_compare_words(cm: &Chain, cn: &Chain) -> Ordering {
    let a = PeriodicSequence::new(chain_word(cm)).expect("non-empty");
    let b = PeriodicSequence::new(chain_word(cn)).expect("non-empty");
    lex_cmp_periodic(&a, &b)
}

/// Compares `τ_m(β)` with `τ_n(β)` through their expansions.
pub fn tau_compare_at(m: u64, n: u64, beta: &BetaParam) -> Result<Ordering> {
    let a = tau(m, beta)?;
    let b = tau(n, beta)?;
    Ok(lex_cmp_periodic(&a.expansion, &b.expansion))
}

/// The symbolic counterpart of [`tau`] for the subshift bounded above by `b`:
/// `(0)^∞` when `b ≼ b_{m,1}`, `w_{(m-1)/m}^∞` above the last anchor, and
/// otherwise the chain word of the interval containing `b`.
pub fn theta(m: u64, b: &EventuallyPeriodicSequence) -> Result<PeriodicSequence> {
    if m < 2 {
        return Err(Error::Range(format!("m must be >= 2, got {m}")));
    }
    if b.first() != 1 {
        return Err(Error::TrivialSubshift("b must begin with 1"));
    }
    let found = descend(m, |c| {
        let a = EventuallyPeriodicSequence::periodic(anchor_sequence(c));
        Ok(lex_cmp_eventually_periodic(&a, b) == Ordering::Less)
    })?;
    let word = match found {
        None => return Ok(PeriodicSequence::constant(0)),
        Some(c) if c.is_last() => high_word(m),
        Some(c) => chain_word(&c),
    };
    PeriodicSequence::new(word)
}

/// `conj(θ_m(conj(a)))` for `a` beginning with 0.
pub fn theta_tilde(m: u64, a: &EventuallyPeriodicSequence) -> Result<PeriodicSequence> {
    if a.first() != 0 {
        return Err(Error::TrivialSubshift("a must begin with 0"));
    }
    Ok(theta(m, &a.conjugate())?.conjugate())
}

/// Nested bracket `(β_c, β_succ(c)]` for the chain built from rationals
/// `r_1, …, r_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalChainBracket {
    pub chain: Chain,
    pub left: RealInterval,
    /// Enclosure of the right endpoint; the point 2 for the last chain.
    pub right: RealInterval,
    /// `[left.lo, right.hi]`, which contains every base of the interval.
    pub enclosure: RealInterval,
}

impl RationalChainBracket {
    pub fn width(&self) -> BigRational {
        self.enclosure.width()
    }
}

/// The chain `(Q, P_1, …, P_n)` with `Q = Π q_i` and `P_i = p_i Π_{k>i} q_k`,
/// whose rational vector is `r_1, …, r_n`.
pub fn chain_from_rationals(rs: &[Ratio<u64>]) -> Result<Chain> {
    if rs.is_empty() {
        return Err(Error::Range("need at least one rational".into()));
    }
    let overflow = || Error::Range("chain modulus overflows u64".into());
    for r in rs {
        if *r.numer() == 0 || r.numer() >= r.denom() {
            return Err(Error::Range(format!("{r} is not in (0,1)")));
        }
    }
    let mut tail = 1u64;
    let mut ks = vec![0u64; rs.len()];
    for (i, r) in rs.iter().enumerate().rev() {
        ks[i] = r.numer().checked_mul(tail).ok_or_else(overflow)?;
        tail = tail.checked_mul(*r.denom()).ok_or_else(overflow)?;
    }
    Chain::new(tail, ks)
}

/// Bracket for the base determined by the rational chain `rs`. Longer
/// chains give nested, shrinking brackets.
pub fn beta_from_rational_chain(
    rs: &[Ratio<u64>],
    tol: &BigRational,
) -> Result<RationalChainBracket> {
    let chain = chain_from_rationals(rs)?;
    let left = beta_from_perron_word(&anchor(&chain), tol)?;
    let right = match chain_successor(&chain) {
        Some(next) => beta_from_perron_word(&anchor(&next), tol)?,
        None => RealInterval::point(two()),
    };
    let enclosure = RealInterval::new(left.lo().clone(), right.hi().clone())?;
    Ok(RationalChainBracket {
        chain,
        left,
        right,
        enclosure,
    })
}

/// Longest all-`1/2` chain tried by [`komornik_loreti`].
pub const KL_MAX_DEPTH: usize = 16;

/// Enclosure of width at most `tol` of the Komornik–Loreti constant, the
/// limit of the brackets for the chains `(1/2, 1/2, …)`.
pub fn komornik_loreti(tol: &BigRational) -> Result<RealInterval> {
    if *tol <= BigRational::zero() {
        return Err(Error::Range("tolerance must be positive".into()));
    }
    let half = Ratio::new(1u64, 2);
    let endpoint_tol = tol / BigInt::from(8);
    for depth in 1..=KL_MAX_DEPTH {
        let bracket = beta_from_rational_chain(&vec![half; depth], &endpoint_tol)?;
        if bracket.width() <= *tol {
            return Ok(bracket.enclosure);
        }
    }
    Err(Error::Precision { bits: 0 })
}

/// One grid point of the `τ_m` staircase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePoint {
    pub beta: BigRational,
    pub tau: CriticalValue,
    pub classification: Classification,
}

/// `τ_m` on `steps` evenly spaced rational bases from `from` to `to`.
pub fn sample(
    m: u64,
    from: &BigRational,
    to: &BigRational,
    steps: usize,
) -> Result<Vec<SamplePoint>> {
    if steps == 0 {
        return Err(Error::Range("steps must be at least 1".into()));
    }
    if steps > 1 && from >= to {
        return Err(Error::Range("from must be below to".into()));
    }
    let step = if steps > 1 {
        (to - from) / BigInt::from(steps - 1)
    } else {
        BigRational::zero()
    };
    (0..steps)
        .into_par_iter()
        .map(|i| {
            let b = from + &step * BigInt::from(i);
            let beta = BetaParam::exact(b.clone())?;
            let classification = classify_beta(m, &beta)?;
            let tau = tau(m, &beta)?;
            Ok(SamplePoint {
                beta: b,
                tau,
                classification,
            })
        })
        .collect()
}
