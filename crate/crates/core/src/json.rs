//! JSON helpers: integers print as numbers when they fit in `i64`, otherwise
//! as decimal strings; rationals print as `"p/q"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::scalar::fmt_rational;

pub fn int(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn int_rows(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|r| ints(r)).collect())
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(fmt_rational(q))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Num(i64),
    Str(String),
}

impl IntRepr {
    fn into_big<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Num(n) => Ok(BigInt::from(n)),
            IntRepr::Str(s) => s.trim().parse().map_err(|_| E::custom(format!("not an integer: {s}"))),
        }
    }
}

struct Wrap<'a>(&'a BigInt);

impl Serialize for Wrap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

pub mod big_int {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Wrap(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        IntRepr::deserialize(d)?.into_big()
    }
}

pub mod big_ints {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(Wrap))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<IntRepr>::deserialize(d)?.into_iter().map(IntRepr::into_big).collect()
    }
}

pub mod big_int_rows {
    use super::*;

    struct Row<'a>(&'a [BigInt]);

    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(self.0.iter().map(Wrap))
        }
    }

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(rows.iter().map(|r| Row(r)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<IntRepr>>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_iter().map(IntRepr::into_big).collect())
            .collect()
    }
}

/// A rational read from a JSON integer or a `"p/q"` string and written back
/// as an integer when it is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub BigRational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            Wrap(self.0.numer()).serialize(s)
        } else {
            s.serialize_str(&fmt_rational(&self.0))
        }
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match IntRepr::deserialize(d)? {
            IntRepr::Num(n) => Ok(Rat(BigRational::from_integer(n.into()))),
            IntRepr::Str(s) => crate::scalar::parse_rational(&s)
                .map(Rat)
                .ok_or_else(|| D::Error::custom(format!("not a rational: {s}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Probe {
        #[serde(with = "big_int_rows")]
        rows: Vec<Vec<BigInt>>,
    }

    #[test]
    fn small_and_large_integers() {
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = Probe {
            rows: vec![vec![BigInt::from(-3), huge.clone()]],
        };
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"rows":[[-3,"123456789012345678901234567890"]]}"#);
        assert_eq!(serde_json::from_str::<Probe>(&text).unwrap(), p);
    }
}
