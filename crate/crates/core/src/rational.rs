//! The exact rational scalar and its canonical string form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Canonical `p/q` (or `n` when integral), with `q > 0` and `gcd(p, q) = 1`.
pub fn to_string(x: &Q) -> String {
    // BigRational is kept reduced with a positive denominator.
    x.to_string()
}

pub fn parse(s: &str) -> Result<Q> {
    let t = s.trim();
    let r = match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim())
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let d = BigInt::from_str(d.trim())
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Q::new(n, d)
        }
        None => Q::from_integer(
            BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad rational {s:?}")))?,
        ),
    };
    Ok(r)
}

/// Serde adapters: rationals travel as strings, integers are also accepted.
pub mod serde_q {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        S(String),
        I(i64),
    }

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        match Raw::deserialize(d)? {
            Raw::S(s) => parse(&s).map_err(serde::de::Error::custom),
            Raw::I(i) => Ok(int(i)),
        }
    }
}

pub mod serde_q_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        S(String),
        I(i64),
    }

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&to_string(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        Vec::<Raw>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Raw::S(s) => parse(&s).map_err(serde::de::Error::custom),
                Raw::I(i) => Ok(int(i)),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(to_string(&q(6, -4)), "-3/2");
        assert_eq!(to_string(&q(4, 2)), "2");
        assert_eq!(to_string(&zero()), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/2").unwrap(), q(3, 2));
        assert_eq!(parse(" -6/4 ").unwrap(), q(-3, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
