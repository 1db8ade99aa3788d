//! Canonical JSON and CSV forms of [`TPoly`].
//!
//! JSON: `{"terms":[{"exp":"5/2","coeff":"1"}, ...]}` with exponents ascending
//! and coefficients as decimal strings. Integral exponents are written without
//! a denominator.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Exp, TPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TPolyJson {
    pub terms: Vec<TermRecord>,
}

fn parse_exp(s: &str) -> Result<Exp> {
    let bad = || Error::Invalid(format!("bad exponent {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Exp::new(n, d))
        }
        None => Ok(Exp::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl TPoly {
    pub fn to_records(&self) -> TPolyJson {
        TPolyJson {
            terms: self
                .terms()
                .map(|(e, c)| TermRecord {
                    exp: e.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_records(records: &TPolyJson) -> Result<TPoly> {
        let mut out = TPoly::zero();
        for r in &records.terms {
            let c: BigInt = r
                .coeff
                .parse()
                .map_err(|_| Error::Invalid(format!("bad coefficient {:?}", r.coeff)))?;
            out.add_term(parse_exp(&r.exp)?, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_records()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<TPoly> {
        let rec: TPolyJson = serde_json::from_str(s).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))?;
        TPoly::from_records(&rec)
    }

    /// `exp,coeff` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("exp,coeff\n");
        for (e, c) in self.terms() {
            out.push_str(&format!("{e},{c}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn json_shape() {
        let p = TPoly::from_terms([(Exp::new(5, 2), 3), (Exp::from_integer(0), -1)]);
        assert_eq!(
            p.to_json(),
            r#"{"terms":[{"exp":"0","coeff":"-1"},{"exp":"5/2","coeff":"3"}]}"#
        );
        assert_eq!(p.to_csv(), "exp,coeff\n0,-1\n5/2,3\n");
    }

    #[test]
    fn accepts_explicit_denominators() {
        let p = TPoly::from_json(r#"{"terms":[{"exp":"4/2","coeff":"7"}]}"#).unwrap();
        assert_eq!(p, TPoly::monomial(Exp::from_integer(2), 7));
        assert!(TPoly::from_json(r#"{"terms":[{"exp":"1/0","coeff":"7"}]}"#).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in prop::collection::vec((-50i64..50, 1i64..5, -1000i64..1000), 0..12)) {
            let p = TPoly::from_terms(terms.into_iter().map(|(n, d, c)| (Exp::new(n, d), c)));
            prop_assert_eq!(TPoly::from_json(&p.to_json()).unwrap(), p);
        }
    }
}
