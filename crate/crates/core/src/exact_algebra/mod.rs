//! Exact arithmetic: big rationals, the quadratic field ℚ(√15) and the
//! integer Lucas sequences attached to the unit 4 + √15.

mod lucas;
mod quad;

pub use lucas::{lucas_pair, lucas_t, lucas_u, quad_to_lucas_consistency, LucasPair};
pub use quad::QuadExt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use crate::error::{Error, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `base^k` as an exact rational.
pub fn rat_pow(base: &BigRational, k: u32) -> BigRational {
    num_traits::pow(base.clone(), k as usize)
}

/// Canonical `p/q` rendering; the denominator is always printed.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q`, or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// Rounds a non-negative rational to the nearest integer, ties to even.
fn round_half_even_int(x: &BigRational) -> BigInt {
    debug_assert!(!x.is_negative());
    let (q, r) = x.numer().div_rem(x.denom());
    let twice = r * 2u32;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1u32,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u32
            }
        }
    }
}

fn place_point(digits: &BigInt, places: u32, negative: bool) -> String {
    let mut s = digits.to_string();
    if places > 0 {
        let places = places as usize;
        if s.len() <= places {
            s = format!("{}{}", "0".repeat(places + 1 - s.len()), s);
        }
        s.insert(s.len() - places, '.');
    }
    if negative && digits.is_positive() {
        s.insert(0, '-');
    }
    s
}

/// Exact decimal rendering with `places` fractional digits, rounding half to even.
pub fn round_half_even(x: &BigRational, places: u32) -> String {
    let scaled = x.abs() * BigRational::from_integer(pow10(places));
    place_point(&round_half_even_int(&scaled), places, x.is_negative())
}

/// Exact decimal rendering with `digits` significant digits (half to even),
/// trailing fractional zeros trimmed.
pub fn to_significant(x: &BigRational, digits: u32) -> String {
    assert!(digits > 0);
    if x.is_zero() {
        return "0".to_string();
    }
    let mag = x.abs();
    // exponent e with 10^e <= |x| < 10^(e+1)
    let mut e = x.numer().abs().to_string().len() as i64 - x.denom().to_string().len() as i64;
    let at = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(pow10(e as u32))
        } else {
            BigRational::one() / BigRational::from_integer(pow10((-e) as u32))
        }
    };
    while at(e) > mag {
        e -= 1;
    }
    while at(e + 1) <= mag {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let mut m = round_half_even_int(&(mag.clone() * at(shift)));
    let mut shift = shift;
    if m >= pow10(digits) {
        m /= 10u32;
        shift -= 1;
    }
    let s = if shift <= 0 {
        let mut s = (m * pow10((-shift) as u32)).to_string();
        if x.is_negative() {
            s.insert(0, '-');
        }
        s
    } else {
        place_point(&m, shift as u32, x.is_negative())
    };
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Serde adapter rendering a [`BigRational`] as its canonical `p/q` string.
pub mod rational_str {
    use super::{format_rational, parse_rational, BigRational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for fixed-size arrays of rationals.
pub mod rational_array {
    use super::{format_rational, parse_rational, BigRational};
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        xs: &[BigRational; N],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(N))?;
        for x in xs {
            seq.serialize_element(&format_rational(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<[BigRational; N], D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        if raw.len() != N {
            return Err(serde::de::Error::custom(format!(
                "expected {N} rationals, got {}",
                raw.len()
            )));
        }
        let parsed = raw
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(parsed.try_into().expect("length checked"))
    }
}
