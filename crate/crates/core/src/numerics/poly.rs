//! Exact arithmetic on the value of a periodic expansion at a rational base,
//! and the integer polynomials whose roots are word-defined bases.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `(N, D)` with `(a^∞)_{p/q} = N / D`, where `N = Σ a_i p^{n-i} q^i` and
/// `D = p^n - q^n`.
pub(crate) fn value_parts(a: &[u8], p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
    let mut num = BigInt::zero();
    let mut q_pow = BigInt::one();
    let mut p_pow = BigInt::one();
    for &d in a {
        q_pow *= q;
        p_pow *= p;
        num *= p;
        if d == 1 {
            num += &q_pow;
        }
    }
    (num, p_pow - q_pow)
}

/// `(a^∞)_β` for rational `β > 1`.
pub(crate) fn value_at(a: &[u8], beta: &BigRational) -> BigRational {
    let (n, d) = value_parts(a, beta.numer(), beta.denom());
    BigRational::new(n, d)
}

/// Sign of `(a^∞)_β - 1` for rational `β > 1`.
pub(crate) fn cmp_one_at(a: &[u8], beta: &BigRational) -> Ordering {
    let (n, d) = value_parts(a, beta.numer(), beta.denom());
    n.cmp(&d)
}

type Poly = Vec<BigRational>;

/// `x^n - Σ a_i x^{n-i} - 1`, lowest degree first. Its only positive root is
/// the base at which `(a^∞)_β = 1`.
fn parry_poly(a: &[u8]) -> Poly {
    let n = a.len();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    for (i, &d) in a.iter().enumerate() {
        if d == 1 {
            c[n - 1 - i] -= BigRational::one();
        }
    }
    c[0] -= BigRational::one();
    trim(c)
}

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lead = b.last().expect("non-zero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn monic(p: Poly) -> Poly {
    match p.last().cloned() {
        Some(l) => p.into_iter().map(|c| c / &l).collect(),
        None => p,
    }
}

fn gcd(a: Poly, b: Poly) -> Poly {
    let (mut a, mut b) = (monic(a), monic(b));
    while !b.is_empty() {
        let r = monic(rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Whether `(a^∞)_β = 1` exactly at the base `β ∈ (1, 2)` fixed by
/// `(b^∞)_β = 1`.
///
/// The polynomial for `b` has a single positive root, which is simple, so
/// the common factor with the polynomial for `a` has that root iff it
/// changes sign on `[1, 2]`.
pub(crate) fn shares_root(a: &[u8], b: &[u8]) -> bool {
    let g = gcd(parry_poly(a), parry_poly(b));
    if g.len() <= 1 {
        return false;
    }
    let at1 = eval(&g, &BigRational::one());
    let at2 = eval(&g, &BigRational::from_integer(BigInt::from(2)));
    (at1 * at2).is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_values() {
        assert_eq!(value_at(&[0, 1], &q(2, 1)), q(1, 3));
        assert_eq!(value_at(&[1], &q(2, 1)), q(1, 1));
        assert_eq!(value_at(&[1, 0, 0, 0, 0, 0, 0, 0], &q(2, 1)), q(128, 255));
        assert_eq!(
            cmp_one_at(&[1, 0, 0, 0, 0, 0, 0, 0], &q(2, 1)),
            Ordering::Less
        );
        assert_eq!(cmp_one_at(&[1], &q(2, 1)), Ordering::Equal);
        assert_eq!(cmp_one_at(&[1, 0], &q(3, 2)), Ordering::Greater);
    }

    fn value_f64(a: &[u8], beta: f64) -> f64 {
        let n = a.len() as i32;
        let num: f64 = a
            .iter()
            .enumerate()
            .map(|(i, &d)| d as f64 * beta.powi(n - 1 - i as i32))
            .sum();
        num / (beta.powi(n) - 1.0)
    }

    #[test]
    fn common_roots_match_floating_point() {
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        // (110)^∞ has value 1 where x^3 = x^2 + x + 1
        let tribonacci = 1.839286755214161;
        for (b, beta) in [(vec![1u8, 0], golden), (vec![1u8, 1, 0], tribonacci)] {
            assert!((value_f64(&b, beta) - 1.0).abs() < 1e-12);
            let mut hits = 0;
            for n in 1..=10usize {
                for bits in 0u32..(1 << n) {
                    let a: Vec<u8> = (0..n).map(|i| ((bits >> i) & 1) as u8).collect();
                    let close = (value_f64(&a, beta) - 1.0).abs() < 1e-9;
                    assert_eq!(shares_root(&a, &b), close, "{a:?} vs {b:?}");
                    hits += close as usize;
                }
            }
            assert!(hits > 1);
        }
    }
}
