//! Formatting helpers for exact rationals.
//!
//! Machine formats carry a rational as `[num, den]`; components that do not
//! fit in an `i64` are written as decimal strings. Text output uses `num/den`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};
use serde_json::Value;

fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn to_json(q: &BigRational) -> Value {
    Value::Array(vec![int_value(q.numer()), int_value(q.denom())])
}

/// `num/den`, or just `num` for integers.
pub fn to_text(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    to_json(q).serialize(s)
}

pub fn serialize_opt<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    q.as_ref().map(to_json).serialize(s)
}

pub fn serialize_array<S: Serializer, const N: usize>(
    qs: &[BigRational; N],
    s: S,
) -> Result<S::Ok, S::Error> {
    let values: Vec<Value> = qs.iter().map(to_json).collect();
    values.serialize(s)
}

/// Smallest integer not below `q`.
pub fn ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}
