//! Check reports: one row per identity, with digests of both sides.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub parameters: String,
    pub identity: String,
    pub status: Status,
    /// SHA-256 of the canonical JSON of the left-hand side; absent for
    /// checks that only produce a verdict.
    pub lhs_digest: Option<String>,
    pub rhs_digest: Option<String>,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub passed: bool,
    pub cases: Vec<CaseReport>,
}

impl CheckReport {
    pub fn new(suite: &str, cases: Vec<CaseReport>) -> Self {
        CheckReport {
            suite: suite.to_string(),
            passed: cases.iter().all(|c| c.status == Status::Pass),
            cases,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> + '_ {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("parameters,identity,status,lhs_digest,rhs_digest,wall_time_ms\n");
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            };
            out.push_str(&format!(
                "{},{},{},{},{},{:.3}\n",
                csv_field(&c.parameters),
                csv_field(&c.identity),
                status,
                c.lhs_digest.as_deref().unwrap_or(""),
                c.rhs_digest.as_deref().unwrap_or(""),
                c.wall_time_ms
            ));
        }
        out
    }
}

/// Hex SHA-256 of the canonical JSON serialization.
pub fn digest(p: &TPoly) -> String {
    format!("{:x}", Sha256::digest(p.to_json().as_bytes()))
}

/// Quotes a CSV field when it contains a separator or a quote.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_are_canonical() {
        let a = TPoly::one() + TPoly::t_pow(crate::tpoly::exp(2));
        let b = TPoly::t_pow(crate::tpoly::exp(2)) + TPoly::one();
        assert_eq!(digest(&a), digest(&b));
        assert_ne!(digest(&a), digest(&TPoly::one()));
        assert_eq!(digest(&a).len(), 64);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("n=2"), "n=2");
        assert_eq!(csv_field("alpha=1,2"), "\"alpha=1,2\"");
        assert_eq!(csv_field("a\"b"), "\"a\"\"b\"");
    }

    #[test]
    fn report_passes_iff_every_case_does() {
        let case = |status| CaseReport {
            parameters: "n=1".into(),
            identity: "x".into(),
            status,
            lhs_digest: None,
            rhs_digest: None,
            wall_time_ms: 0.0,
            error: None,
        };
        assert!(CheckReport::new("s", vec![case(Status::Pass)]).passed);
        assert!(!CheckReport::new("s", vec![case(Status::Pass), case(Status::Fail)]).passed);
        assert!(CheckReport::new("s", vec![]).passed);
        let csv = CheckReport::new("s", vec![case(Status::Fail)]).to_csv();
        assert_eq!(csv.lines().nth(1), Some("n=1,x,fail,,,0.000"));
    }
}
