//! (q,t)-factorials, binomials and multinomials, together with the Pascal,
//! convolution and Hilbert-series identities they satisfy and the classical
//! Gaussian oracles they specialise to.

mod composition;
mod gaussian;

pub use composition::Composition;
pub use gaussian::{gaussian_binomial, gaussian_multinomial};

use crate::error::{Error, Result};
use crate::exprcore::{QExp, WeightExpr};
use crate::identity::CheckOutcome;
use crate::tpoly::{pow_q, TPoly};

fn to_i32(n: u32) -> Result<i32> {
    i32::try_from(n).map_err(|_| Error::OutOfRange(format!("{n} does not fit in i32")))
}

/// `1 - t^{q^a - q^b}`.
fn one_minus_qdiff(q: u64, a: u32, b: u32) -> Result<TPoly> {
    Ok(TPoly::one_minus(pow_q(q, to_i32(a)?)? - pow_q(q, to_i32(b)?)?))
}

/// `t^{q^a - q^b}`.
fn t_qdiff(q: u64, a: u32, b: u32) -> Result<TPoly> {
    Ok(TPoly::t_pow(pow_q(q, to_i32(a)?)? - pow_q(q, to_i32(b)?)?))
}

/// `n!_{q,t} = prod_{i=0}^{n-1} (1 - t^{q^n - q^i})`.
pub fn factorial(n: u32, q: u64) -> Result<TPoly> {
    let factors = (0..n).map(|i| one_minus_qdiff(q, n, i)).collect::<Result<Vec<_>>>()?;
    TPoly::product(&factors)
}

/// The bracket form of `k!_{q,t^q} / k!_{q,t} = prod_{j=0}^{k-1} [q]_{t^{q^k - q^j}}`.
pub fn factorial_quotient(k: u32) -> Result<WeightExpr> {
    let k = to_i32(k)?;
    Ok(WeightExpr::new(
        QExp::zero(),
        (0..k).map(|j| QExp::qdiff(k, j)).collect(),
    ))
}

/// `[n choose k]_{q,t} = prod_{i=1}^k (1 - t^{q^n - q^{i-1}}) / (1 - t^{q^k - q^{i-1}})`,
/// computed by exact division. Zero when `k > n`.
pub fn binomial(n: u32, k: u32, q: u64) -> Result<TPoly> {
    if k > n {
        return Ok(TPoly::zero());
    }
    let mut num = Vec::with_capacity(k as usize);
    let mut den = Vec::with_capacity(k as usize);
    for i in 1..=k {
        num.push(one_minus_qdiff(q, n, i - 1)?);
        den.push(one_minus_qdiff(q, k, i - 1)?);
    }
    TPoly::product(&num)?.exact_div(&TPoly::product(&den)?)
}

/// Like [`binomial`] but with `k` possibly negative, in which case it is zero.
fn binomial_signed(n: u32, k: i64, q: u64) -> Result<TPoly> {
    match u32::try_from(k) {
        Ok(k) => binomial(n, k, q),
        Err(_) => Ok(TPoly::zero()),
    }
}

/// The (q,t)-multinomial by the telescoping product
/// `[n; a_1] phi^{s_1}[n - s_1; a_2] phi^{s_2}[n - s_2; a_3] ...`,
/// where `s_i` are the partial sums and `phi^s: t -> t^{q^s}`.
pub fn multinomial(alpha: &Composition, q: u64) -> Result<TPoly> {
    let n = alpha.n();
    let sums = alpha.partial_sums();
    let mut acc = TPoly::one();
    for (s, &a) in alpha.parts().iter().enumerate() {
        let sigma = sums[s];
        let b = binomial(n - sigma, a, q)?.frobenius(q, to_i32(sigma)?)?;
        acc = acc.try_mul(&b)?;
    }
    Ok(acc)
}

/// `alpha!_{q,t} = prod_s phi^{s_{s-1}}(a_s!_{q,t})`.
pub fn composition_factorial(alpha: &Composition, q: u64) -> Result<TPoly> {
    let sums = alpha.partial_sums();
    let mut acc = TPoly::one();
    for (s, &a) in alpha.parts().iter().enumerate() {
        let f = factorial(a, q)?.frobenius(q, to_i32(sums[s])?)?;
        acc = acc.try_mul(&f)?;
    }
    Ok(acc)
}

/// The (q,t)-multinomial as the single quotient `n!_{q,t} / alpha!_{q,t}`.
pub fn multinomial_direct(alpha: &Composition, q: u64) -> Result<TPoly> {
    factorial(alpha.n(), q)?.exact_div(&composition_factorial(alpha, q)?)
}

/// The multinomial as a quotient of Hilbert-series numerators: the invariant
/// degrees `q^n - q^{n-i}` of the general linear group over the invariant
/// degrees `q^{s} - q^{s-i}` of the parabolic subgroup.
pub fn hilbert_quotient(alpha: &Composition, q: u64) -> Result<TPoly> {
    let n = alpha.n();
    let num = (1..=n)
        .map(|i| one_minus_qdiff(q, n, n - i))
        .collect::<Result<Vec<_>>>()?;
    let sums = alpha.partial_sums();
    let mut den = Vec::new();
    for (&s, &a) in sums[1..].iter().zip(alpha.parts()) {
        for i in 1..=a {
            den.push(one_minus_qdiff(q, s, s - i)?);
        }
    }
    TPoly::product(&num)?.exact_div(&TPoly::product(&den)?)
}

/// Both Pascal-type recurrences for `[n choose k]_{q,t}`, `n >= 1`:
///
/// `[n;k] = phi[n-1;k-1] + t^{q^k-1} Q_k phi[n-1;k]` and
/// `[n;k] = t^{q^n-q^k} phi[n-1;k-1] + Q_k phi[n-1;k]`,
/// with `Q_k = k!_{q,t^q}/k!_{q,t}` expanded from its bracket form.
pub fn pascal_check(n: u32, k: u32, q: u64) -> Result<CheckOutcome> {
    if n == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "pascal recurrence needs 0 <= k <= n, n >= 1 (got n={n}, k={k})"
        )));
    }
    let lhs = binomial(n, k, q)?;
    let left = binomial_signed(n - 1, k as i64 - 1, q)?.frobenius(q, 1)?;
    let right = binomial(n - 1, k, q)?.frobenius(q, 1)?;
    let fq = factorial_quotient(k)?.to_poly(q)?;
    let qf_right = fq.try_mul(&right)?;

    let rhs1 = &left + &t_qdiff(q, k, 0)?.try_mul(&qf_right)?;
    let rhs2 = &t_qdiff(q, n, k)?.try_mul(&left)? + &qf_right;

    let mut out = CheckOutcome::new();
    out.push(format!("pascal-first n={n} k={k} q={q}"), lhs.clone(), rhs1);
    out.push(format!("pascal-second n={n} k={k} q={q}"), lhs, rhs2);
    Ok(out)
}

/// The multinomial Pascal recurrence for a composition with positive parts:
///
/// `[n; alpha] = sum_i t^{q^{s_{i-1}}-1} (alpha'!_{q,t^q}/alpha'!_{q,t}) phi[n-1; alpha - e_i]`
/// where `alpha' = (a_1, ..., a_{i-1})`.
pub fn multinomial_pascal_check(alpha: &Composition, q: u64) -> Result<CheckOutcome> {
    alpha.require_positive()?;
    if alpha.is_empty() {
        return Err(Error::OutOfRange("empty composition".into()));
    }
    let lhs = multinomial(alpha, q)?;
    let sums = alpha.partial_sums();
    let mut rhs = TPoly::zero();
    let mut quotient = WeightExpr::one();
    for i in 0..alpha.len() {
        let mut lowered = alpha.parts().to_vec();
        lowered[i] -= 1;
        let term = multinomial(&Composition::new(lowered), q)?.frobenius(q, 1)?;
        let weight = WeightExpr::monomial(QExp::qdiff(to_i32(sums[i])?, 0)) * quotient.clone();
        rhs += weight.to_poly(q)?.try_mul(&term)?;
        quotient *= factorial_quotient(alpha.parts()[i])?.frobenius(to_i32(sums[i])?);
    }
    Ok(CheckOutcome::single(
        format!("multinomial-pascal alpha={alpha} q={q}"),
        lhs,
        rhs,
    ))
}

/// `(k+l)!_{q,t} = k!_{q,t} * phi^k(l!_{q,t}) * [k+l; k]_{q,t}`.
pub fn convolution_check(k: u32, l: u32, q: u64) -> Result<CheckOutcome> {
    let lhs = factorial(k + l, q)?;
    let rhs = factorial(k, q)?
        .try_mul(&factorial(l, q)?.frobenius(q, to_i32(k)?)?)?
        .try_mul(&binomial(k + l, k, q)?)?;
    Ok(CheckOutcome::single(format!("convolution k={k} l={l} q={q}"), lhs, rhs))
}

/// Telescoping product, single factorial quotient and Hilbert-series quotient
/// all agree.
pub fn hilbert_quotient_check(alpha: &Composition, q: u64) -> Result<CheckOutcome> {
    let tele = multinomial(alpha, q)?;
    let mut out = CheckOutcome::new();
    out.push(
        format!("multinomial-direct alpha={alpha} q={q}"),
        tele.clone(),
        multinomial_direct(alpha, q)?,
    );
    out.push(
        format!("hilbert-quotient alpha={alpha} q={q}"),
        tele,
        hilbert_quotient(alpha, q)?,
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::exp;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (exp(e), c)))
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn small_values() {
        assert_eq!(factorial(0, 2).unwrap(), TPoly::one());
        assert_eq!(factorial(1, 2).unwrap(), p(&[(0, 1), (1, -1)]));
        assert_eq!(binomial(2, 1, 2).unwrap(), p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(binomial(3, 0, 3).unwrap(), TPoly::one());
        assert_eq!(binomial(3, 3, 3).unwrap(), TPoly::one());
        assert_eq!(binomial(2, 3, 2).unwrap(), TPoly::zero());
    }

    #[test]
    fn t_one_counts_subspaces() {
        for q in [2u64, 3] {
            for n in 0..=5 {
                for k in 0..=n {
                    let b = binomial(n, k, q).unwrap();
                    let g = gaussian_binomial(n, k).eval_at(&BigInt::from(q)).unwrap();
                    assert_eq!(b.eval_one(), g, "n={n} k={k} q={q}");
                    assert!(b.nonnegative_coefficients() && b.is_polynomial());
                }
            }
        }
    }

    #[test]
    fn recurrences_small() {
        for q in [2u64, 3] {
            for n in 1..=5 {
                for k in 0..=n {
                    assert!(pascal_check(n, k, q).unwrap().holds(), "n={n} k={k} q={q}");
                }
            }
        }
        assert!(pascal_check(0, 0, 2).is_err());
    }

    #[test]
    fn multinomial_routes_agree() {
        for alpha in [c(&[1, 2, 1]), c(&[2, 0, 2]), c(&[3]), c(&[]), c(&[1, 1, 1, 1])] {
            assert!(hilbert_quotient_check(&alpha, 2).unwrap().holds(), "{alpha}");
        }
        assert!(multinomial_pascal_check(&c(&[1, 2, 1]), 2).unwrap().holds());
        assert!(multinomial_pascal_check(&c(&[1, 0]), 2).is_err());
    }

    #[test]
    fn factorial_quotient_matches_division() {
        for k in 0..=4 {
            let fq = factorial_quotient(k).unwrap().to_poly(2).unwrap();
            let f = factorial(k, 2).unwrap();
            assert_eq!(f.frobenius(2, 1).unwrap().exact_div(&f).unwrap(), fq);
        }
    }

    #[test]
    fn guard_is_reported() {
        let err = factorial(40, 3).unwrap_err();
        assert!(err.is_guard());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn convolution_holds(k in 0u32..4, l in 0u32..4, q in 2u64..4) {
            prop_assert!(convolution_check(k, l, q).unwrap().holds());
        }

        #[test]
        fn multinomial_specialises_to_gaussian(parts in prop::collection::vec(0u32..3, 0..4), q in 2u64..4) {
            let alpha = Composition::new(parts);
            let m = multinomial(&alpha, q).unwrap();
            prop_assert_eq!(m.eval_one(), gaussian_multinomial(&alpha).eval_at(&BigInt::from(q)).unwrap());
            prop_assert!(hilbert_quotient_check(&alpha, q).unwrap().holds());
        }

        #[test]
        fn binomial_symmetry_at_t_one(n in 0u32..6, k in 0u32..6) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k, 2).unwrap().eval_one(), binomial(n, n - k, 2).unwrap().eval_one());
        }
    }
}
