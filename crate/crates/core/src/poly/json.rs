//! JSON form: `{ "vars": ["x","y"], "terms": [{"x": k, "y": d, "coeff": "c"}] }`.
//! Univariate polynomials use `"vars": ["x"]` and omit `"y"`. Coefficients
//! are decimal strings; terms follow the canonical printing order.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BiPoly, UniPoly};

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    x: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    y: Option<u32>,
    coeff: String,
}

fn parse_coeff<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    s.parse().map_err(|_| E::custom(format!("bad coefficient {s:?}")))
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            vars: vec!["x".into()],
            terms: self
                .terms()
                .map(|(k, c)| TermJson { x: k, y: None, coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            vars: vec!["x".into(), "y".into()],
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|(k, d, c)| TermJson { x: k, y: Some(d), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(d)?;
        if raw.vars != ["x"] {
            return Err(D::Error::custom("univariate polynomial must have vars [\"x\"]"));
        }
        let mut p = UniPoly::zero();
        for t in raw.terms {
            if t.y.is_some_and(|y| y != 0) {
                return Err(D::Error::custom("univariate term carries a y exponent"));
            }
            p.add_term(t.x, parse_coeff(&t.coeff)?);
        }
        Ok(p)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(d)?;
        if raw.vars != ["x", "y"] {
            return Err(D::Error::custom("bivariate polynomial must have vars [\"x\",\"y\"]"));
        }
        let mut p = BiPoly::zero();
        for t in raw.terms {
            p.add_term(t.x, t.y.unwrap_or(0), parse_coeff(&t.coeff)?);
        }
        Ok(p)
    }
}
