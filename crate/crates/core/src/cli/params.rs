//! `key=value` parameters for `compute`, and integer grids for `table` and `check`.

use std::collections::BTreeSet;

use super::CliError;

/// Ordered `key=value` pairs as given on the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pairs: Vec<(String, String)>,
}

impl Params {
    pub fn parse(args: &[String]) -> Result<Self, CliError> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for arg in args {
            let (k, v) = arg
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected key=value, got {arg:?}")))?;
            let k = k.trim().to_string();
            if pairs.iter().any(|(seen, _)| *seen == k) {
                return Err(CliError::Usage(format!("parameter {k:?} given twice")));
            }
            pairs.push((k, v.trim().to_string()));
        }
        Ok(Params { pairs })
    }

    pub fn from_pairs(pairs: Vec<(String, String)>) -> Self {
        Params { pairs }
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn has(&self, key: &str) -> bool {
        self.get(key).is_some()
    }

    pub fn require(&self, key: &str) -> Result<&str, CliError> {
        self.get(key)
            .ok_or_else(|| CliError::Usage(format!("missing parameter {key:?}")))
    }

    pub fn u32(&self, key: &str) -> Result<u32, CliError> {
        parse_u32(key, self.require(key)?)
    }

    pub fn i64(&self, key: &str) -> Result<i64, CliError> {
        let v = self.require(key)?;
        v.parse()
            .map_err(|_| CliError::Usage(format!("parameter {key} must be an integer, got {v:?}")))
    }

    pub fn u32_or(&self, key: &str, default: u32) -> Result<u32, CliError> {
        match self.get(key) {
            Some(v) => parse_u32(key, v),
            None => Ok(default),
        }
    }

    /// Rejects any key outside `allowed`.
    pub fn only(&self, allowed: &[&str]) -> Result<(), CliError> {
        let allowed: BTreeSet<&str> = allowed.iter().copied().collect();
        for (k, _) in &self.pairs {
            if !allowed.contains(k.as_str()) {
                let mut names: Vec<&str> = allowed.iter().copied().collect();
                names.sort_unstable();
                return Err(CliError::Usage(format!(
                    "unknown parameter {k:?} (expected one of: {})",
                    names.join(", ")
                )));
            }
        }
        Ok(())
    }

    /// The string form `k1=v1 k2=v2`, used to label report rows.
    pub fn label(&self) -> String {
        self.pairs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn parse_u32(key: &str, v: &str) -> Result<u32, CliError> {
    v.parse()
        .map_err(|_| CliError::Usage(format!("parameter {key} must be a nonnegative integer, got {v:?}")))
}

/// Expands a table grid. Each value is a literal or an inclusive range `a..b`
/// whose bounds are integers or names of earlier keys, so `n=0..4 k=0..n`
/// yields the triangle `0 <= k <= n <= 4`. Points come out in odometer order
/// with the last key varying fastest.
pub fn expand_grid(params: &Params) -> Result<Vec<Params>, CliError> {
    let mut points = vec![Vec::<(String, String)>::new()];
    for (key, value) in params.pairs() {
        let mut next = Vec::new();
        for point in &points {
            match value.split_once("..") {
                Some((lo, hi)) => {
                    let lo = resolve_bound(key, lo, point)?;
                    let hi = resolve_bound(key, hi, point)?;
                    for v in lo..=hi {
                        let mut p = point.clone();
                        p.push((key.clone(), v.to_string()));
                        next.push(p);
                    }
                }
                None => {
                    let mut p = point.clone();
                    p.push((key.clone(), value.clone()));
                    next.push(p);
                }
            }
        }
        points = next;
    }
    Ok(points.into_iter().map(Params::from_pairs).collect())
}

fn resolve_bound(key: &str, bound: &str, point: &[(String, String)]) -> Result<i64, CliError> {
    let bound = bound.trim();
    if let Ok(v) = bound.parse::<i64>() {
        return Ok(v);
    }
    point
        .iter()
        .find(|(k, _)| k == bound)
        .and_then(|(_, v)| v.parse().ok())
        .ok_or_else(|| {
            CliError::Usage(format!(
                "range bound {bound:?} for {key} is neither an integer nor an earlier key"
            ))
        })
}
