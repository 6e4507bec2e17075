//! Brute-force ground truth.
//!
//! Nothing here touches chains or the classification descent: the oracle
//! enumerates Lyndon words, keeps those whose orbit is admissible in base
//! `β`, and maximizes. Only word utilities and numeric primitives are shared
//! with the fast path.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::critical::{CriticalValue, Provenance};
use crate::error::{Error, Result};
use crate::numerics::{
    cmp_value_one, eval_periodic, greedy_expansion, BetaKind, BetaParam, RealInterval,
};
use crate::words::{cyclic_max, cyclic_min, farey_index, lex_cmp_periodic, PeriodicSequence, Word};

/// Largest word length [`enumerate_lyndon`] accepts.
pub const DEFAULT_ORACLE_BOUND: usize = 22;

/// Digits of look-ahead per period used by [`survives`] before it gives up.
pub const SURVIVAL_DEPTH_FACTOR: usize = 10;

/// All binary Lyndon words of length `m` in lexicographic order.
pub fn enumerate_lyndon(m: usize) -> Result<Vec<Word>> {
    enumerate_lyndon_bounded(m, DEFAULT_ORACLE_BOUND)
}

/// As [`enumerate_lyndon`] with an explicit length bound.
pub fn enumerate_lyndon_bounded(m: usize, bound: usize) -> Result<Vec<Word>> {
    if m > bound {
        return Err(Error::OracleBound { len: m, bound });
    }
    let mut out = Vec::new();
    if m == 0 {
        return Ok(out);
    }
    // Duval's generator: visits every Lyndon word of length <= m in order.
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == m {
            out.push(Word::from_digits(w.clone())?);
        }
        let k = w.len();
        while w.len() < m {
            let d = w[w.len() - k];
            w.push(d);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            Some(d) => *d = 1,
            None => break,
        }
    }
    Ok(out)
}

/// `L(w)^∞ ≺ δ(β)`: every shift of `w^∞` is a greedy `β`-expansion.
fn admissible(w: &Word, beta: &BetaParam) -> Result<bool> {
    let top = PeriodicSequence::new(cyclic_max(w)?)?;
    Ok(cmp_value_one(&top, beta)? == Ordering::Less)
}

/// Orders two candidate values. Exact bases compare exactly; otherwise the
/// enclosures decide when they are disjoint, and lexicographic order of the
/// expansions (which matches numeric order for greedy expansions) settles
/// the rest.
fn cmp_candidates(a: &(Word, RealInterval), b: &(Word, RealInterval), exact: bool) -> Ordering {
    if exact {
        return a.1.lo().cmp(b.1.lo()).then_with(|| a.0.cmp(&b.0));
    }
    if a.1.strictly_below(&b.1) {
        Ordering::Less
    } else if b.1.strictly_below(&a.1) {
        Ordering::Greater
    } else {
        let pa = PeriodicSequence::new(a.0.clone()).expect("non-empty");
        let pb = PeriodicSequence::new(b.0.clone()).expect("non-empty");
        lex_cmp_periodic(&pa, &pb)
    }
}

/// The largest hole `t` such that some orbit of smallest period `m` avoids
/// `(0, t)`, found by trying every Lyndon word of length `m`.
pub fn brute_tau(m: usize, beta: &BetaParam) -> Result<CriticalValue> {
    if m < 2 {
        return Err(Error::Range(format!("m must be >= 2, got {m}")));
    }
    let words = enumerate_lyndon(m)?;
    let mut best: Option<(Word, RealInterval)> = None;
    for w in words {
        if !admissible(&w, beta)? {
            continue;
        }
        let v = eval_periodic(&PeriodicSequence::new(w.clone())?, beta);
        let cand = (w, v);
        best = match best {
            Some(b) if cmp_candidates(&b, &cand, is_rational(beta)).is_ge() => Some(b),
            _ => Some(cand),
        };
    }
    Ok(match best {
        None => CriticalValue::zero(),
        Some((w, value)) => {
            let exact = value.is_point().then(|| value.lo().clone());
            CriticalValue {
                value,
                exact,
                expansion: PeriodicSequence::new(w.clone())?,
                provenance: Provenance::Witness(w),
            }
        }
    })
}

fn is_rational(beta: &BetaParam) -> bool {
    matches!(beta.kind(), BetaKind::Exact(_))
}

/// Whether the orbit of `w^∞` avoids the hole `(0, t)` and consists of
/// greedy `β`-expansions: `b(t, β) ≼ σ^n(w^∞) ≺ δ(β)` for every `n`.
pub fn survives(w: &PeriodicSequence, t: &BigRational, beta: &BetaParam) -> Result<bool> {
    if *t < BigRational::zero() || *t >= BigRational::one() {
        return Err(Error::Range(format!("t = {t} is not in [0,1)")));
    }
    if !admissible(w.period(), beta)? {
        return Ok(false);
    }
    let low = PeriodicSequence::new(cyclic_min(w.period())?)?;
    if let BetaKind::Exact(_) = beta.kind() {
        // Greedy expansions are ordered like the numbers they expand.
        return Ok(eval_periodic(&low, beta).lo() >= t);
    }
    let depth = SURVIVAL_DEPTH_FACTOR * low.period().len();
    let bt = greedy_expansion(t, beta, depth)?;
    for i in 0..depth {
        match bt.digits()[i].cmp(&low.digit(i)) {
            Ordering::Less => return Ok(true),
            Ordering::Greater => return Ok(false),
            Ordering::Equal => {}
        }
    }
    let v = eval_periodic(&low, beta);
    if v.lo() >= t {
        Ok(true)
    } else if v.hi() < t {
        Ok(false)
    } else {
        Err(Error::Precision {
            bits: beta.precision(),
        })
    }
}

/// Checks that the periodic sequences with period at most `max_period` whose
/// whole orbit stays within `[s^∞, L(s)^∞]` are exactly the shifts of `s^∞`.
pub fn gamma_set_check(s: &Word, max_period: usize) -> Result<bool> {
    farey_index(s)?;
    let lo = PeriodicSequence::new(s.clone())?;
    let hi = PeriodicSequence::new(cyclic_max(s)?)?;
    let mut found = Vec::new();
    for p in 1..=max_period {
        // Each orbit is represented by its Lyndon word, the orbit minimum.
        for u in enumerate_lyndon_bounded(p, max_period)? {
            let min = PeriodicSequence::new(u.clone())?;
            let max = PeriodicSequence::new(cyclic_max(&u)?)?;
            if lex_cmp_periodic(&min, &lo).is_ge() && lex_cmp_periodic(&max, &hi).is_le() {
                found.push(u);
            }
        }
    }
    Ok(found == [s.clone()])
}
