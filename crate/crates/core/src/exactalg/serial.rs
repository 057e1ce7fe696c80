use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cpoly::CPoly;
use crate::Scalar;

/// Wire form of one term: an exact fraction string and an exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// Wire form of a polynomial, terms ascending in lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub vars: usize,
    pub terms: Vec<TermRecord>,
}

impl<S: Scalar> From<&CPoly<S>> for PolyRecord {
    fn from(p: &CPoly<S>) -> Self {
        PolyRecord {
            vars: p.vars(),
            terms: p
                .terms()
                .map(|(e, c)| TermRecord {
                    coeff: c.to_fraction(),
                    exps: e.clone(),
                })
                .collect(),
        }
    }
}

impl PolyRecord {
    pub fn to_poly<S: Scalar>(&self) -> Result<CPoly<S>, String> {
        let mut p = CPoly::zero(self.vars);
        for t in &self.terms {
            if t.exps.len() != self.vars {
                return Err(format!(
                    "exponent vector {:?} does not have {} entries",
                    t.exps, self.vars
                ));
            }
            let c = S::parse_fraction(&t.coeff)
                .ok_or_else(|| format!("invalid coefficient `{}`", t.coeff))?;
            p.add_term(t.exps.clone(), c);
        }
        Ok(p)
    }
}

impl<S: Scalar> Serialize for CPoly<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> Result<Z::Ok, Z::Error> {
        PolyRecord::from(self).serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for CPoly<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        PolyRecord::deserialize(deserializer)?
            .to_poly()
            .map_err(D::Error::custom)
    }
}
