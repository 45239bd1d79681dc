//! Serde helpers: arbitrary-precision values travel as decimal strings in
//! JSON so no reader needs bignum-aware number parsing. Deserialization also
//! accepts plain JSON integers for convenience.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

use crate::{Nat, Rational};

#[derive(Deserialize)]
#[serde(untagged)]
enum NumRepr {
    Num(u64),
    Str(String),
}

fn nat_from_repr<'de, D: Deserializer<'de>>(repr: NumRepr) -> Result<Nat, D::Error> {
    match repr {
        NumRepr::Num(n) => Ok(Nat::from(n)),
        NumRepr::Str(s) => s
            .parse()
            .map_err(|_| D::Error::custom(format!("invalid natural number `{s}`"))),
    }
}

pub mod nat {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Nat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Nat, D::Error> {
        nat_from_repr::<D>(NumRepr::deserialize(de)?)
    }
}

pub mod nat_vec {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[Nat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(values.iter().map(Nat::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Nat>, D::Error> {
        Vec::<NumRepr>::deserialize(de)?
            .into_iter()
            .map(nat_from_repr::<D>)
            .collect()
    }
}

pub mod rat {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        crate::scalar::parse_rational(&s).map_err(|e| D::Error::custom(e.to_string()))
    }
}
