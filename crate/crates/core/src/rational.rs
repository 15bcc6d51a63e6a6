//! Exact rationals and their string form.
//!
//! Every rational that leaves the crate is written as `"p/q"` (or `"p"` when
//! the denominator is 1). Floats never appear.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Integer value of `x` if it has denominator 1 and fits in an `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.denom().is_one() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

pub fn serialize_q_vec<S: Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_q))
}

pub fn deserialize_q_vec<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
    let raw: Vec<String> = Vec::deserialize(d)?;
    raw.iter()
        .map(|s| parse_q(s).map_err(serde::de::Error::custom))
        .collect()
}

pub fn serialize_q<S: Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_q(v))
}

pub fn deserialize_q<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    let raw = String::deserialize(d)?;
    parse_q(&raw).map_err(serde::de::Error::custom)
}
