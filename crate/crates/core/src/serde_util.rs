//! Serialization helpers: rationals as `"p/q"` strings, integers as JSON
//! numbers when they fit in an `i64` and as strings otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serializer;

use crate::exact::format_rational;

pub fn rational_str<S: Serializer>(q: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&format_rational(q))
}

pub fn bigint<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => ser.serialize_i64(x),
        None => ser.serialize_str(&v.to_string()),
    }
}

pub fn bigint_opt<S: Serializer>(v: &Option<BigInt>, ser: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => bigint(v, ser),
        None => ser.serialize_none(),
    }
}

/// JSON value for an integer, following the same rule as [`bigint`].
pub fn bigint_value(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}
