//! Values of periodic expansions, the base parameter `β`, and certified
//! digit generation.
//!
//! Every comparison that decides a digit or an interval is either exact
//! (rational bases, bases defined by a Perron word) or done on an enclosure
//! whose endpoints are evaluated exactly. Nothing here rounds silently.

mod interval;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{is_perron, lex_cmp_periodic, PeriodicSequence, Word};

pub(crate) use interval::{ceil_log2_recip, is_in_unit_beta_range, one, pow2_recip, two};
pub use interval::{decimal_ceil, decimal_floor, parse_decimal, RealInterval};
pub(crate) use poly::{cmp_one_at, value_at};

/// Working precision in bits used when a caller does not choose one.
pub const DEFAULT_PRECISION: u32 = 128;
/// Precision ceiling for automatic refinement.
pub const DEFAULT_MAX_PRECISION: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BetaKind {
    /// A rational base `p/q`.
    Exact(BigRational),
    /// The base whose quasi-greedy expansion of 1 is `a^∞`, for a Perron word `a`.
    Word(Word),
    /// Some base inside the given enclosure.
    Approximate(RealInterval),
}

/// A base `β ∈ (1, 2]`.
#[derive(Clone)]
pub struct BetaParam {
    kind: BetaKind,
    precision: u32,
    max_precision: u32,
    enclosure: OnceLock<RealInterval>,
}

impl PartialEq for BetaParam {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.precision == other.precision
    }
}

impl fmt::Debug for BetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BetaParam({self}, {} bits)", self.precision)
    }
}

impl fmt::Display for BetaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            BetaKind::Exact(r) => write!(f, "{r}"),
            BetaKind::Word(a) => write!(f, "word:{a}"),
            BetaKind::Approximate(iv) => write!(f, "{iv:.15}"),
        }
    }
}

fn out_of_range() -> Error {
    Error::InvalidBeta("beta out of range (1,2]".into())
}

impl BetaParam {
    fn with_kind(kind: BetaKind) -> Self {
        BetaParam {
            kind,
            precision: DEFAULT_PRECISION,
            max_precision: DEFAULT_MAX_PRECISION,
            enclosure: OnceLock::new(),
        }
    }

    pub fn exact(beta: BigRational) -> Result<Self> {
        if !is_in_unit_beta_range(&beta) {
            return Err(out_of_range());
        }
        Ok(Self::with_kind(BetaKind::Exact(beta)))
    }

    /// `p/q` as an exact base.
    pub fn ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidBeta("zero denominator".into()));
        }
        Self::exact(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The base with `δ(β) = a^∞`.
    pub fn from_word(a: Word) -> Result<Self> {
        if !is_perron(&a).unwrap_or(false) {
            return Err(Error::NotPerron(a.to_string()));
        }
        Ok(Self::with_kind(BetaKind::Word(a)))
    }

    /// A base known only to lie in `enclosure`, which must sit inside `(1, 2]`.
    pub fn approximate(enclosure: RealInterval) -> Result<Self> {
        if !is_in_unit_beta_range(enclosure.lo()) || !is_in_unit_beta_range(enclosure.hi()) {
            return Err(out_of_range());
        }
        Ok(Self::with_kind(BetaKind::Approximate(enclosure)))
    }

    pub fn with_precision(mut self, bits: u32) -> Self {
        self.precision = bits.max(1);
        self.max_precision = self.max_precision.max(self.precision);
        self.enclosure = OnceLock::new();
        self
    }

    pub fn with_max_precision(mut self, bits: u32) -> Self {
        self.max_precision = bits.max(self.precision);
        self
    }

    pub fn kind(&self) -> &BetaKind {
        &self.kind
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn max_precision(&self) -> u32 {
        self.max_precision
    }

    /// True when every comparison against this base is decided exactly.
    pub fn is_exact(&self) -> bool {
        !matches!(self.kind, BetaKind::Approximate(_))
    }

    /// An enclosure of `β`: a point for rationals, width at most
    /// `2^-precision` for word-defined bases, the given interval otherwise.
    pub fn enclosure(&self) -> &RealInterval {
        self.enclosure.get_or_init(|| match &self.kind {
            BetaKind::Exact(r) => RealInterval::point(r.clone()),
            BetaKind::Word(a) => root_enclosure(a.digits(), self.precision),
            BetaKind::Approximate(iv) => iv.clone(),
        })
    }

    fn enclosure_at(&self, bits: u32) -> RealInterval {
        match &self.kind {
            BetaKind::Word(a) if bits != self.precision => root_enclosure(a.digits(), bits),
            _ => self.enclosure().clone(),
        }
    }
}

/// Grammar: `p/q` or an integer (exact), `word:<bits>` (Perron word),
/// `mid±r` or `mid+-r` (approximate), or a decimal literal, read as
/// approximate with radius half a unit in its last place. An approximate
/// upper end above 2 is cut back to 2.
impl FromStr for BetaParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(bits) = s.strip_prefix("word:") {
            return BetaParam::from_word(bits.parse()?);
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad_beta(s))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad_beta(s))?;
            if q.is_zero() {
                return Err(Error::InvalidBeta("zero denominator".into()));
            }
            return BetaParam::exact(BigRational::new(p, q));
        }
        let split = s.split_once('±').or_else(|| s.split_once("+-"));
        let (mid, radius) = match split {
            Some((m, r)) => {
                let (mid, _) = parse_decimal(m).map_err(|_| bad_beta(s))?;
                let (radius, _) = parse_decimal(r).map_err(|_| bad_beta(s))?;
                if radius <= BigRational::zero() {
                    return Err(Error::InvalidBeta("radius must be positive".into()));
                }
                (mid, radius)
            }
            None => {
                let (mid, ulp) = parse_decimal(s).map_err(|_| bad_beta(s))?;
                if !s.contains(['.', 'e', 'E']) {
                    return BetaParam::exact(mid);
                }
                (mid, ulp / BigInt::from(2))
            }
        };
        if !is_in_unit_beta_range(&mid) {
            return Err(out_of_range());
        }
        let hi = (&mid + &radius).min(two());
        let lo = mid - radius;
        BetaParam::approximate(RealInterval::new(lo, hi)?)
    }
}

fn bad_beta(s: &str) -> Error {
    Error::InvalidBeta(format!("cannot parse {s:?}"))
}

/// Bisection for the root of `β ↦ (a^∞)_β - 1`, which is strictly
/// decreasing on `(1, 2]` and crosses zero exactly once when `a` is Perron.
fn root_enclosure(a: &[u8], bits: u32) -> RealInterval {
    let mut lo = one();
    let mut hi = two();
    let target = pow2_recip(bits);
    while &hi - &lo > target || lo == one() {
        let mid = (&lo + &hi) / BigInt::from(2);
        match cmp_one_at(a, &mid) {
            Ordering::Less => hi = mid,
            Ordering::Greater => lo = mid,
            Ordering::Equal => return RealInterval::point(mid),
        }
    }
    RealInterval::new(lo, hi).expect("ordered bounds")
}

/// Enclosure of `(a^∞)_β = Σ_{i≤n} a_i β^{n-i} / (β^n - 1)`.
pub fn eval_periodic(a: &PeriodicSequence, beta: &BetaParam) -> RealInterval {
    let d = a.period().digits();
    match &beta.kind {
        BetaKind::Exact(r) => RealInterval::point(value_at(d, r)),
        _ => {
            let enc = beta.enclosure();
            RealInterval::new(value_at(d, enc.hi()), value_at(d, enc.lo()))
                .expect("value decreases in beta")
                .round_outward(beta.precision + 8)
        }
    }
}

/// Sign of `(a^∞)_β - 1`.
///
/// Exact for rational and word-defined bases. For an approximate base the
/// answer is `Less` or `Greater` only when it holds over the whole
/// enclosure, and `Error::Ambiguous` otherwise; it is never `Equal`.
pub fn cmp_value_one(a: &PeriodicSequence, beta: &BetaParam) -> Result<Ordering> {
    let d = a.period().digits();
    if !d.contains(&1) {
        return Ok(Ordering::Less);
    }
    match &beta.kind {
        BetaKind::Exact(r) => Ok(cmp_one_at(d, r)),
        BetaKind::Word(b) => {
            if d.len() >= 2 && is_perron(a.period()).unwrap_or(false) {
                // Both sequences are quasi-greedy expansions of 1, and the base
                // grows with the expansion.
                let b = PeriodicSequence::new(b.clone())?;
                return Ok(lex_cmp_periodic(a, &b));
            }
            if poly::shares_root(d, b.digits()) {
                return Ok(Ordering::Equal);
            }
            let mut bits = beta.precision;
            loop {
                let enc = beta.enclosure_at(bits);
                if cmp_one_at(d, enc.lo()) == Ordering::Less {
                    return Ok(Ordering::Less);
                }
                if cmp_one_at(d, enc.hi()) == Ordering::Greater {
                    return Ok(Ordering::Greater);
                }
                if bits >= beta.max_precision {
                    return Err(Error::Precision { bits });
                }
                bits = (bits * 2).min(beta.max_precision);
            }
        }
        BetaKind::Approximate(iv) => {
            if cmp_one_at(d, iv.lo()) == Ordering::Less {
                Ok(Ordering::Less)
            } else if cmp_one_at(d, iv.hi()) == Ordering::Greater {
                Ok(Ordering::Greater)
            } else {
                Err(Error::Ambiguous { chain: None })
            }
        }
    }
}

/// Enclosure of width at most `tol` of the base `β` with `(a^∞)_β = 1`.
pub fn beta_from_perron_word(a: &Word, tol: &BigRational) -> Result<RealInterval> {
    if !is_perron(a).unwrap_or(false) {
        return Err(Error::NotPerron(a.to_string()));
    }
    if *tol <= BigRational::zero() {
        return Err(Error::Range("tolerance must be positive".into()));
    }
    Ok(root_enclosure(a.digits(), ceil_log2_recip(tol)))
}

/// Runs the digit map `x ↦ βx - d` on an enclosure of `β`. With
/// `quasi` the digit is 1 only when `βx > 1`; otherwise when `βx >= 1`.
/// Returns `None` as soon as a digit cannot be decided.
fn digits_on_enclosure(
    x0: &BigRational,
    beta: &RealInterval,
    n: usize,
    quasi: bool,
    round_bits: Option<u32>,
) -> Option<Word> {
    let mut lo = x0.clone();
    let mut hi = x0.clone();
    let mut out = Word::empty();
    let unit = one();
    for _ in 0..n {
        let ylo = beta.lo() * &lo;
        let yhi = beta.hi() * &hi;
        let (sure_one, sure_zero) = if quasi {
            (ylo > unit, yhi <= unit)
        } else {
            (ylo >= unit, yhi < unit)
        };
        let d = if sure_one {
            1
        } else if sure_zero {
            0
        } else {
            return None;
        };
        out.push(d);
        lo = ylo - BigInt::from(d);
        hi = yhi - BigInt::from(d);
        if let Some(bits) = round_bits {
            let r = RealInterval::new(lo, hi).ok()?.round_outward(bits);
            lo = r.lo().clone();
            hi = r.hi().clone();
        }
    }
    Some(out)
}

fn refine_digits(x0: &BigRational, beta: &BetaParam, n: usize, quasi: bool) -> Result<Word> {
    match &beta.kind {
        BetaKind::Exact(r) => {
            let iv = RealInterval::point(r.clone());
            Ok(digits_on_enclosure(x0, &iv, n, quasi, None).expect("exact digits decide"))
        }
        BetaKind::Approximate(iv) => {
            let bits = beta.precision + n as u32;
            digits_on_enclosure(x0, iv, n, quasi, Some(bits)).ok_or(Error::Precision {
                bits: beta.precision,
            })
        }
        BetaKind::Word(_) => {
            let mut bits = beta.precision;
            loop {
                let enc = beta.enclosure_at(bits);
                if let Some(w) = digits_on_enclosure(x0, &enc, n, quasi, Some(bits + n as u32)) {
                    return Ok(w);
                }
                if bits >= beta.max_precision {
                    return Err(Error::Precision { bits });
                }
                bits = (bits * 2).min(beta.max_precision);
            }
        }
    }
}

/// First `n` digits of the quasi-greedy expansion `δ(β)` of 1.
pub fn quasi_greedy_delta(beta: &BetaParam, n: usize) -> Result<Word> {
    if let BetaKind::Word(a) = &beta.kind {
        return Ok(PeriodicSequence::new(a.clone())?.prefix(n));
    }
    refine_digits(&one(), beta, n, true)
}

/// First `n` digits of the greedy expansion of `t ∈ [0, 1)` in base `β`.
pub fn greedy_expansion(t: &BigRational, beta: &BetaParam, n: usize) -> Result<Word> {
    if *t < BigRational::zero() || *t >= BigRational::one() {
        return Err(Error::Range(format!("t = {t} is not in [0,1)")));
    }
    refine_digits(t, beta, n, false)
}
