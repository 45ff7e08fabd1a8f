//! Serializes big integers as plain JSON numbers, never as digit arrays
//! or strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::{Error as _, SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::{Number, Value};

pub fn number(v: &BigInt) -> Number {
    v.to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers")
}

pub fn value(v: &BigInt) -> Value {
    Value::Number(number(v))
}

pub(crate) fn int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let n: Number = v.to_string().parse().map_err(S::Error::custom)?;
    n.serialize(s)
}

pub(crate) fn ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&number(x))?;
    }
    seq.end()
}

pub(crate) fn int_map<S: Serializer>(v: &BTreeMap<usize, BigInt>, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, x) in v {
        map.serialize_entry(k, &number(x))?;
    }
    map.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_stay_numeric() {
        let big = BigInt::from(2).pow(100) * -1;
        let text = serde_json::to_string(&value(&big)).unwrap();
        assert_eq!(text, "-1267650600228229401496703205376");
    }
}
