//! Closed intervals with rational endpoints, and decimal conversion in both
//! directions.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// `[lo, hi]` with exact rational endpoints. Operations that shrink the
/// representation (see [`RealInterval::round_outward`]) only ever widen it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RealInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Range(format!(
                "interval bounds out of order: {lo} > {hi}"
            )));
        }
        Ok(RealInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RealInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &RealInterval) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Replaces the endpoints by dyadic rationals with `bits` fractional bits,
    /// rounding `lo` down and `hi` up.
    pub fn round_outward(&self, bits: u32) -> RealInterval {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        RealInterval { lo, hi }
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64().unwrap_or(f64::NAN)
    }

    /// `[lo,hi]` with `digits` decimals, `lo` rounded down and `hi` rounded up.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format!(
            "[{},{}]",
            decimal_floor(&self.lo, digits),
            decimal_ceil(&self.hi, digits)
        )
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(12);
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealInterval{}", self.to_decimal_string(20))
    }
}

fn pow10(digits: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), digits)
}

fn format_scaled(n: &BigInt, digits: usize) -> String {
    let neg = n.sign() == Sign::Minus;
    let s = n.abs().to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Largest decimal with `digits` places that is `<= x`.
pub fn decimal_floor(x: &BigRational, digits: usize) -> String {
    let scaled = (x * BigRational::from_integer(pow10(digits))).floor();
    format_scaled(scaled.numer(), digits)
}

/// Smallest decimal with `digits` places that is `>= x`.
pub fn decimal_ceil(x: &BigRational, digits: usize) -> String {
    let scaled = (x * BigRational::from_integer(pow10(digits))).ceil();
    format_scaled(scaled.numer(), digits)
}

/// Parses a decimal literal (optional sign, fraction and exponent) exactly.
/// Also returns the unit in the last written place.
pub fn parse_decimal(s: &str) -> Result<(BigRational, BigRational)> {
    let bad = || Error::Parse(format!("not a decimal number: {s:?}"));
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}0")
        .parse::<BigInt>()
        .map_err(|_| bad())?
        / 10;
    let e = exp - frac.len() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    let ulp = if e >= 0 {
        num_traits::pow(ten, e as usize)
    } else {
        num_traits::pow(ten, (-e) as usize).recip()
    };
    let mut value = BigRational::from_integer(digits) * &ulp;
    if neg {
        value = -value;
    }
    Ok((value, ulp))
}

pub(crate) fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

pub(crate) fn one() -> BigRational {
    BigRational::one()
}

pub(crate) fn is_in_unit_beta_range(x: &BigRational) -> bool {
    x > &one() && x <= &two()
}

pub(crate) fn pow2_recip(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

pub(crate) fn ceil_log2_recip(tol: &BigRational) -> u32 {
    // smallest b with 2^-b <= tol
    let mut b = 0u32;
    let mut p = BigRational::one();
    while &p > tol {
        p /= BigInt::from(2);
        b += 1;
    }
    b
}
