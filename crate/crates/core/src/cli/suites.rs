//! Named check suites: each expands its bounds into a grid of cases, every
//! case comparing independently computed polynomials.

use std::time::Instant;

use clap::ValueEnum;
use rayon::prelude::*;

use super::params::Params;
use super::report::{digest, CaseReport, CheckReport, Status};
use super::CliError;
use crate::boxes::{
    box_identities, box_limits_check, compatible_partition_sum, compatible_sum, compatible_uniqueness_check, Partition,
};
use crate::error::{Error, Result};
use crate::ffield::{dickson_identity_check, subspace_identities};
use crate::identity::CheckOutcome;
use crate::macschur::{dual_check, hook_checks, tableau_limits_check, three_way_check, SkewShape};
use crate::permstat::{perm_limits_check, perm_sum_check, ribbon_three_way, ribbon_total_check};
use crate::qtnum::{
    binomial, convolution_check, hilbert_quotient_check, multinomial_pascal_check, pascal_check, Composition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Both (q,t)-Pascal relations, and the multinomial one; bounds `n` (6), `m` (5).
    Pascal,
    /// Box sum, compatible sum and compatible partitions against the binomial; bound `n` (6).
    Box,
    /// Uniqueness of q-compatible representations and the compatible sums; bound `n` (6).
    Compat,
    /// Subspace sums over `F_p^n` with `p` taken from `--q`; bound `n` (5).
    Subspace,
    /// Bialternant = Jacobi–Trudi = tableau sum inside a square box; bounds `size` (3), `k` (3).
    #[value(name = "schur3way")]
    Schur3way,
    /// Jacobi–Trudi = dual Jacobi–Trudi on skew shapes; bounds `size` (3), `k` (3).
    #[value(name = "dualjt")]
    DualJt,
    /// Sum over minimal coset representatives = multinomial; bound `n` (6).
    #[value(name = "permsum")]
    PermSum,
    /// Three ribbon routes agree and sum to the full multinomial; bound `n` (6).
    #[value(name = "ribbon3way")]
    Ribbon3way,
    /// Hook product formula, recurrence and ribbon coincidence; bounds `m` (3), `k` (3), `n` (4).
    Hook,
    /// Dickson expansion over `F_p` with `p` taken from `--q`; bound `n` (3).
    Dickson,
    /// Factorial convolution; bound `n` (5) on both halves.
    Convolution,
    /// Multinomial by telescoping, direct quotient and Hilbert series; bound `n` (5).
    Hilbert,
    /// `t -> 1` and `q -> 1` limits of box, permutation and tableau sums; bounds `n` (5), `k` (2).
    Limits,
}

/// What a single case produces.
pub enum Outcome {
    Identities(CheckOutcome),
    /// A yes/no verdict with no polynomial sides to digest.
    Verdict {
        label: String,
        holds: bool,
    },
}

type Runner = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Case {
    pub parameters: String,
    run: Runner,
}

fn case(parameters: String, run: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Case {
    Case {
        parameters,
        run: Box::new(run),
    }
}

fn ids(o: Result<CheckOutcome>) -> Result<Outcome> {
    o.map(Outcome::Identities)
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    fn bounds(self) -> &'static [(&'static str, u32)] {
        match self {
            Suite::Pascal => &[("n", 6), ("m", 5)],
            Suite::Box | Suite::Compat | Suite::PermSum | Suite::Ribbon3way => &[("n", 6)],
            Suite::Subspace | Suite::Convolution | Suite::Hilbert => &[("n", 5)],
            Suite::Schur3way | Suite::DualJt => &[("size", 3), ("k", 3)],
            Suite::Hook => &[("m", 3), ("k", 3), ("n", 4)],
            Suite::Dickson => &[("n", 3)],
            Suite::Limits => &[("n", 5), ("k", 2)],
        }
    }

    /// Expands the suite's bounds (overridable by `key=value`) into cases, in
    /// a fixed order.
    pub fn cases(self, params: &Params, qs: &[u64]) -> std::result::Result<Vec<Case>, CliError> {
        let keys: Vec<&str> = self.bounds().iter().map(|(k, _)| *k).collect();
        params.only(&keys)?;
        let bound = |key: &str| -> std::result::Result<u32, CliError> {
            let default = self
                .bounds()
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .expect("known key");
            params.u32_or(key, default)
        };
        let mut out = Vec::new();
        match self {
            Suite::Pascal => {
                let (nmax, mmax) = (bound("n")?, bound("m")?);
                for &q in qs {
                    for n in 1..=nmax {
                        for k in 0..=n {
                            out.push(case(format!("n={n} k={k} q={q}"), move || ids(pascal_check(n, k, q))));
                        }
                    }
                    for n in 1..=mmax {
                        for alpha in Composition::all_of(n) {
                            out.push(case(format!("alpha={alpha} q={q}"), move || {
                                ids(multinomial_pascal_check(&alpha, q))
                            }));
                        }
                    }
                }
            }
            Suite::Box => {
                let nmax = bound("n")?;
                for &q in qs {
                    for n in 0..=nmax {
                        for k in 0..=n {
                            out.push(case(format!("n={n} k={k} q={q}"), move || ids(box_identities(n, k, q))));
                        }
                    }
                }
            }
            Suite::Compat => {
                let nmax = bound("n")?;
                for &q in qs {
                    for n in 0..=nmax {
                        for k in 0..=n {
                            out.push(case(format!("n={n} k={k} q={q}"), move || {
                                Ok(Outcome::Verdict {
                                    label: format!("compatible-uniqueness n={n} k={k} q={q}"),
                                    holds: compatible_uniqueness_check(n, k, q)?,
                                })
                            }));
                            out.push(case(format!("n={n} k={k} q={q}"), move || {
                                let b = binomial(n, k, q)?;
                                let mut o = CheckOutcome::single(
                                    format!("compatible-sum n={n} k={k} q={q}"),
                                    compatible_sum(n, k, q)?,
                                    b.clone(),
                                );
                                o.push(
                                    format!("compatible-partitions n={n} k={k} q={q}"),
                                    compatible_partition_sum(n, k, q)?,
                                    b,
                                );
                                Ok(Outcome::Identities(o))
                            }));
                        }
                    }
                }
            }
            Suite::Subspace => {
                let nmax = bound("n")?;
                for &p in qs {
                    for n in 0..=nmax {
                        for k in 0..=n {
                            out.push(case(format!("n={n} k={k} p={p}"), move || {
                                ids(subspace_identities(n, k, p))
                            }));
                        }
                    }
                }
            }
            Suite::Schur3way => {
                let (size, kmax) = (bound("size")?, bound("k")?);
                for &q in qs {
                    for k in 0..=kmax {
                        for lambda in Partition::in_box(size as usize, size) {
                            out.push(case(format!("lambda={lambda} k={k} q={q}"), move || {
                                ids(three_way_check(&lambda, k, q))
                            }));
                        }
                    }
                }
            }
            Suite::DualJt => {
                let (size, kmax) = (bound("size")?, bound("k")?);
                for &q in qs {
                    for k in 0..=kmax {
                        for sh in SkewShape::all_inside(size as usize, size) {
                            out.push(case(format!("shape={sh} k={k} q={q}"), move || {
                                ids(dual_check(&sh, k, q))
                            }));
                        }
                    }
                }
            }
            Suite::PermSum => {
                let nmax = bound("n")?;
                for &q in qs {
                    for n in 1..=nmax {
                        for alpha in Composition::all_of(n) {
                            out.push(case(format!("alpha={alpha} q={q}"), move || {
                                ids(perm_sum_check(&alpha, q))
                            }));
                        }
                    }
                }
            }
            Suite::Ribbon3way => {
                let nmax = bound("n")?;
                for &q in qs {
                    for n in 1..=nmax {
                        for alpha in Composition::all_of(n) {
                            out.push(case(format!("alpha={alpha} q={q}"), move || {
                                ids(ribbon_three_way(&alpha, q))
                            }));
                        }
                        out.push(case(format!("n={n} q={q}"), move || ids(ribbon_total_check(n, q))));
                    }
                }
            }
            Suite::Hook => {
                let (mmax, kmax, nmax) = (bound("m")?, bound("k")?, bound("n")?);
                for &q in qs {
                    for m in 1..=mmax {
                        for k in 0..=kmax {
                            for n in k..=nmax {
                                out.push(case(format!("m={m} k={k} n={n} q={q}"), move || {
                                    ids(hook_checks(m, k, n, q))
                                }));
                            }
                        }
                    }
                }
            }
            Suite::Dickson => {
                let nmax = bound("n")?;
                for &p in qs {
                    for n in 1..=nmax {
                        out.push(case(format!("n={n} p={p}"), move || {
                            Ok(Outcome::Verdict {
                                label: format!("dickson n={n} p={p}"),
                                holds: dickson_identity_check(n, p)?,
                            })
                        }));
                    }
                }
            }
            Suite::Convolution => {
                let nmax = bound("n")?;
                for &q in qs {
                    for k in 0..=nmax {
                        for l in 0..=nmax {
                            out.push(case(format!("k={k} l={l} q={q}"), move || {
                                ids(convolution_check(k, l, q))
                            }));
                        }
                    }
                }
            }
            Suite::Hilbert => {
                let nmax = bound("n")?;
                for &q in qs {
                    for n in 1..=nmax {
                        for alpha in Composition::all_of(n) {
                            out.push(case(format!("alpha={alpha} q={q}"), move || {
                                ids(hilbert_quotient_check(&alpha, q))
                            }));
                        }
                    }
                }
            }
            Suite::Limits => {
                let (nmax, kmax) = (bound("n")?, bound("k")?);
                for &q in qs {
                    for n in 0..=nmax {
                        for k in 0..=n {
                            out.push(case(format!("box n={n} k={k} q={q}"), move || {
                                ids(box_limits_check(n, k, q))
                            }));
                        }
                        for alpha in Composition::all_of(n) {
                            out.push(case(format!("alpha={alpha} q={q}"), move || {
                                ids(perm_limits_check(&alpha, q))
                            }));
                        }
                    }
                    for k in 0..=kmax {
                        for sh in SkewShape::all_inside(3, 3).into_iter().filter(|s| s.size() <= nmax) {
                            out.push(case(format!("shape={sh} k={k} q={q}"), move || {
                                ids(tableau_limits_check(&sh, k, q))
                            }));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs the cases concurrently and assembles the report in case order. Also
/// returns the errors raised by failing cases.
pub fn run(suite: Suite, cases: Vec<Case>) -> (CheckReport, Vec<Error>) {
    let results: Vec<(Vec<CaseReport>, Option<Error>)> = cases
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)();
            let ms = start.elapsed().as_secs_f64() * 1e3;
            match outcome {
                Ok(Outcome::Identities(o)) => {
                    let rows = o
                        .identities
                        .iter()
                        .map(|id| CaseReport {
                            parameters: c.parameters.clone(),
                            identity: id.label.clone(),
                            status: if id.holds() { Status::Pass } else { Status::Fail },
                            lhs_digest: Some(digest(&id.lhs)),
                            rhs_digest: Some(digest(&id.rhs)),
                            wall_time_ms: ms,
                            error: (!id.holds()).then(|| format!("lhs = {}\nrhs = {}", id.lhs, id.rhs)),
                        })
                        .collect();
                    (rows, None)
                }
                Ok(Outcome::Verdict { label, holds }) => (
                    vec![CaseReport {
                        parameters: c.parameters,
                        identity: label,
                        status: if holds { Status::Pass } else { Status::Fail },
                        lhs_digest: None,
                        rhs_digest: None,
                        wall_time_ms: ms,
                        error: None,
                    }],
                    None,
                ),
                Err(e) => (
                    vec![CaseReport {
                        parameters: c.parameters,
                        identity: "error".into(),
                        status: Status::Fail,
                        lhs_digest: None,
                        rhs_digest: None,
                        wall_time_ms: ms,
                        error: Some(e.to_string()),
                    }],
                    Some(e),
                ),
            }
        })
        .collect();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for (r, e) in results {
        rows.extend(r);
        errors.extend(e);
    }
    (CheckReport::new(&suite.name(), rows), errors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_suite(suite: Suite, args: &[&str], qs: &[u64]) -> (CheckReport, Vec<Error>) {
        let params = Params::parse(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap();
        run(suite, suite.cases(&params, qs).unwrap())
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::value_variants() {
            let args: Vec<String> = suite
                .bounds()
                .iter()
                .map(|(k, v)| format!("{k}={}", (*v).min(3)))
                .collect();
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let (report, errors) = run_suite(*suite, &args, &[2]);
            assert!(errors.is_empty(), "{}: {errors:?}", suite.name());
            assert!(report.passed, "{}", suite.name());
            assert!(!report.cases.is_empty(), "{}", suite.name());
        }
    }

    #[test]
    fn names_and_bounds() {
        assert_eq!(Suite::Schur3way.name(), "schur3way");
        assert_eq!(Suite::DualJt.name(), "dualjt");
        assert_eq!(Suite::Ribbon3way.name(), "ribbon3way");
        let params = Params::parse(&["x=1".to_string()]).unwrap();
        assert!(Suite::Pascal.cases(&params, &[2]).is_err());
    }

    #[test]
    fn non_prime_subspace_field_is_an_error() {
        let (report, errors) = run_suite(Suite::Subspace, &["n=1"], &[4]);
        assert!(!report.passed);
        assert!(matches!(errors[0], Error::NotPrime(4)));
    }
}
