//! Arbitrary-precision naturals.
//!
//! Encoded set elements grow like `m^v` in the vertex count, so everything
//! that touches set elements uses [`Nat`]. In serialized output naturals are
//! written as decimal strings.

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serializer};

pub type Nat = BigUint;

/// `base^exp` as a [`Nat`].
pub fn pow(base: &Nat, exp: u32) -> Nat {
    num_traits::pow::Pow::pow(base, exp)
}

pub fn to_json(n: &Nat) -> serde_json::Value {
    serde_json::Value::String(n.to_str_radix(10))
}

pub fn list_to_json(ns: &[Nat]) -> serde_json::Value {
    serde_json::Value::Array(ns.iter().map(to_json).collect())
}

pub fn parse(s: &str) -> Option<Nat> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Serde adapter: a single [`Nat`] as a decimal string.
pub mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Nat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Nat, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| serde::de::Error::custom(format!("not a natural: {s:?}")))
    }
}

/// Serde adapter: a list of [`Nat`] as decimal strings.
pub mod decimal_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(ns: &[Nat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(ns.len()))?;
        for n in ns {
            seq.serialize_element(&n.to_str_radix(10))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Nat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse(s).ok_or_else(|| serde::de::Error::custom(format!("not a natural: {s:?}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_and_parse() {
        assert_eq!(pow(&Nat::from(5u32), 4), Nat::from(625u32));
        assert_eq!(parse(" 620 "), Some(Nat::from(620u32)));
        assert_eq!(parse("-3"), None);
        assert_eq!(parse("12a"), None);
        assert_eq!(parse(""), None);
    }
}
