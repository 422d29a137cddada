//! Exact rational numbers.
//!
//! The crate uses [`num_rational::BigRational`] as its only number type: every
//! value is kept in lowest terms with a positive denominator, and every
//! operation is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Builds `num / den` in lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p` (optional leading sign on `p`). The result is reduced.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    if num.is_empty() || den.is_empty() || den.starts_with(['+', '-']) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical text: `p/q` in lowest terms, or `p` when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal expansion rounded half away from zero to `digits` places.
///
/// Computed with integer arithmetic only; intended for human-facing
/// convenience columns, never for comparisons.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let twice = r * 2u32;
    let q = if &twice >= scaled.denom() { q + 1u32 } else { q };
    let (int_part, frac_part) = q.div_rem(&scale);
    let sign = if x.is_negative() && !(int_part.is_zero() && frac_part.is_zero()) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Lossy conversion for heuristics (annealing temperatures); never used for
/// feasibility or measure decisions.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Number of bits in the larger of numerator and denominator.
pub fn height_bits(x: &Rational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents and semiconvergents).
pub fn best_approximation(x: &Rational, max_den: &BigInt) -> Rational {
    if x.denom() <= max_den {
        return x.clone();
    }
    // Convergents p/q with (p0/q0, p1/q1) the last two.
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    loop {
        let a = num.div_floor(&den);
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            // Largest semiconvergent that still fits.
            let t = (max_den - &q0).div_floor(&q1);
            let ps = &t * &p1 + &p0;
            let qs = &t * &q1 + &q0;
            let semi = Rational::new(ps, qs);
            let conv = Rational::new(p1, q1);
            let d_semi = (&semi - x).abs();
            let d_conv = (&conv - x).abs();
            return if d_semi < d_conv { semi } else { conv };
        }
        let p2 = &a * &p1 + &p0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let rem = &num - &a * &den;
        if rem.is_zero() {
            return Rational::new(p1, q1);
        }
        num = std::mem::replace(&mut den, rem);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-31/59"), Some(rat(-31, 59)));
        assert_eq!(parse_rational("2/2"), Some(int(1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(format_rational(&rat(8, 177)), "8/177");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-3, 9)), "-1/3");
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&rat(77, 177), 4), "0.4350");
        assert_eq!(to_decimal(&rat(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal(&int(5), 0), "5");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
    }

    #[test]
    fn approximations() {
        let x = rat(8, 177) + rat(1, 10_000_000);
        assert_eq!(best_approximation(&x, &BigInt::from(200)), rat(8, 177));
        assert_eq!(best_approximation(&rat(1, 3), &BigInt::from(2)), rat(1, 2));
        assert_eq!(best_approximation(&rat(22, 7), &BigInt::from(7)), rat(22, 7));
        let pi_ish = rat(314_159_265, 100_000_000);
        assert_eq!(best_approximation(&pi_ish, &BigInt::from(120)), rat(355, 113));
    }
}
