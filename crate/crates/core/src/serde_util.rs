//! JSON helpers: exact values as decimal strings, doubles with 17
//! significant digits.

use serde::ser::{SerializeSeq, Serializer};
use serde_json::value::RawValue;

use crate::exactmath::Rational;

pub fn rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

/// `x` rendered with 17 significant digits, e.g. `3.8196601125010510e-1`.
pub fn sig17(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format!("{x:.16e}") } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

pub fn f64_17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&sig17(*x), s)
}

/// Complex numbers as `[re, im]` pairs.
pub fn complex_pairs<S: Serializer>(v: &[num_complex::Complex64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[sig17(z.re), sig17(z.im)])?;
    }
    seq.end()
}
