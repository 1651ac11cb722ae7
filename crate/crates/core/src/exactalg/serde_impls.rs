use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::parse::parse_laurent;
use super::poly::{IntPoly, LaurentPoly, Vars};

/// On-disk form of a polynomial: its variables and a parseable expression.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    expr: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr { vars: self.vars().names().to_vec(), expr: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        parse_laurent(&r.expr, &Vars::new(r.vars)).map_err(D::Error::custom)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_laurent().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        IntPoly::new(LaurentPoly::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Serde adapter storing integers as decimal strings.
pub mod bigint_vec {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| BigInt::from_str(x).map_err(D::Error::custom))
            .collect()
    }
}
