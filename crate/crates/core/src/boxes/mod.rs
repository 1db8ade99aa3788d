//! Partitions in a `k x (n-k)` box, their product-form cell weights, and the
//! two ways of summing them to the (q,t)-binomial: directly over the box, and
//! through partitions built from the parts `q^k - q^{k-i}`.

mod partition;

pub use partition::{BoxedPartition, Partition};

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exprcore::{QExp, WeightExpr};
use crate::identity::CheckOutcome;
use crate::qtnum::factorial_quotient;
use crate::tpoly::{check_exponent, exp, TPoly};

fn to_i32(n: usize) -> Result<i32> {
    i32::try_from(n).map_err(|_| Error::OutOfRange(format!("{n} does not fit in i32")))
}

/// The exponent `q^{i+d} - q^d` of cell `(i, j)` (row `i` from the top) in a
/// box of height `k`, where `d = (j - i) + k - 1`.
pub fn cell_exponent(i: usize, j: usize, k: usize) -> Result<QExp> {
    if i == 0 || i > k || j == 0 {
        return Err(Error::OutOfRange(format!(
            "cell ({i},{j}) lies outside a box of height {k}"
        )));
    }
    let d = to_i32(j + k - 1)? - to_i32(i)?;
    Ok(QExp::qdiff(to_i32(i)? + d, d))
}

/// `wt(lambda, k) = prod_x [q]_{t^{e_k(x)}}`, with an extra `t^{e_k(x)}` for each
/// cell `x` that is the lowest cell of its column.
pub fn partition_weight(lambda: &Partition, k: usize) -> Result<WeightExpr> {
    if lambda.length() > k {
        return Err(Error::OutOfRange(format!("{lambda} has more than {k} parts")));
    }
    let mut w = WeightExpr::one();
    for i in 1..=lambda.length() {
        let below = lambda.part(i + 1) as usize;
        for j in 1..=lambda.part(i) as usize {
            let e = cell_exponent(i, j, k)?;
            w *= if j > below {
                WeightExpr::shifted_bracket(e)
            } else {
                WeightExpr::bracket(e)
            };
        }
    }
    Ok(w)
}

/// The right-hand side of the weight recurrence: a full first column peels off
/// as `t^{q^k-1} (k!_{q,t^q}/k!_{q,t}) phi(wt(lambda-hat, k))`; otherwise the
/// box height drops by one under `phi`.
pub fn partition_weight_by_recurrence(lambda: &Partition, k: usize) -> Result<WeightExpr> {
    if lambda.length() == 0 {
        return Ok(WeightExpr::one());
    }
    if lambda.length() > k {
        return Err(Error::OutOfRange(format!("{lambda} has more than {k} parts")));
    }
    if lambda.length() == k {
        let ki = to_i32(k)?;
        let head = WeightExpr::monomial(QExp::qdiff(ki, 0)) * factorial_quotient(ki as u32)?;
        let tail = partition_weight_by_recurrence(&lambda.without_first_column(), k)?;
        Ok(head * tail.frobenius(1))
    } else {
        Ok(partition_weight_by_recurrence(lambda, k - 1)?.frobenius(1))
    }
}

/// Checks the recurrence one step deep against the cell-product definition,
/// both symbolically and after expansion at `q = 2, 3`.
pub fn partition_weight_recurrence_check(bp: &BoxedPartition) -> Result<bool> {
    let lambda = bp.partition();
    let k = bp.k();
    let direct = partition_weight(lambda, k)?;
    let stepped = if lambda.length() == 0 {
        WeightExpr::one()
    } else if lambda.length() == k {
        let ki = to_i32(k)?;
        WeightExpr::monomial(QExp::qdiff(ki, 0))
            * factorial_quotient(ki as u32)?
            * partition_weight(&lambda.without_first_column(), k)?.frobenius(1)
    } else {
        partition_weight(lambda, k - 1)?.frobenius(1)
    };
    for q in [2u64, 3] {
        if direct.to_poly(q)? != stepped.to_poly(q)? {
            return Ok(false);
        }
    }
    Ok(direct == stepped)
}

/// `sum_lambda wt(lambda, k)` over the `k x (n-k)` box, expanded at `q`.
pub fn box_sum(n: u32, k: u32, q: u64) -> Result<TPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    Partition::in_box(k as usize, n - k)
        .par_iter()
        .map(|lambda| partition_weight(lambda, k as usize)?.to_poly(q))
        .try_reduce(TPoly::zero, |a, b| Ok(a + b))
}

fn qpow_u64(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or_else(|| Error::OutOfRange(format!("{q}^{e} overflows")))
}

/// `delta_i(lambda) = sum_{j=lambda_{i+1}}^{lambda_i - 1} q^j` (1-indexed, with
/// `lambda_{k+1} = 0`).
pub fn delta(lambda: &Partition, k: usize, i: usize, q: u64) -> Result<u64> {
    if i == 0 || i > k {
        return Err(Error::OutOfRange(format!("index {i} outside 1..={k}")));
    }
    let hi = lambda.part(i);
    let lo = if i == k { 0 } else { lambda.part(i + 1) };
    let mut s = 0u64;
    for j in lo..hi {
        s = s
            .checked_add(qpow_u64(q, j)?)
            .ok_or_else(|| Error::OutOfRange("delta overflows".into()))?;
    }
    Ok(s)
}

/// The q-compatible part sizes `q^k - q^{k-i}` for `i = 1..=k`.
pub fn compatible_parts(k: usize, q: u64) -> Result<Vec<u64>> {
    let top = qpow_u64(q, k as u32)?;
    (1..=k).map(|i| Ok(top - qpow_u64(q, (k - i) as u32)?)).collect()
}

/// The row-collated product `prod_i t^{e_i delta_i} [q^{lambda_i}]_{t^{e_i}}`
/// with `e_i = q^k - q^{k-i}`; equal to `wt(lambda, k)` at `q`.
pub fn collated_rows_weight(lambda: &Partition, k: usize, q: u64) -> Result<TPoly> {
    let parts = compatible_parts(k, q)?;
    let mut acc = TPoly::one();
    for i in 1..=k {
        let e = parts[i - 1];
        let shift = e
            .checked_mul(delta(lambda, k, i, q)?)
            .ok_or_else(|| Error::OutOfRange("exponent overflows".into()))?;
        let shift = exp(i64::try_from(shift).map_err(|_| Error::OutOfRange("exponent overflows".into()))?);
        check_exponent(&shift)?;
        let e = exp(e as i64);
        let g = TPoly::geometric(qpow_u64(q, lambda.part(i))?, e)?;
        acc = acc.try_mul(&(&TPoly::t_pow(shift) * &g))?;
    }
    Ok(acc)
}

/// `sum_lambda` of the row-collated products over the box.
pub fn compatible_sum(n: u32, k: u32, q: u64) -> Result<TPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    Partition::in_box(k as usize, n - k)
        .par_iter()
        .map(|lambda| collated_rows_weight(lambda, k as usize, q))
        .try_reduce(TPoly::zero, |a, b| Ok(a + b))
}

/// Every multiplicity vector `m` with `delta_i <= m_i < delta_i + q^{lambda_i}`:
/// the q-compatible partitions attached to `lambda`.
pub fn compatible_multiplicities(lambda: &Partition, k: usize, q: u64) -> Result<Vec<Vec<u64>>> {
    let mut ranges = Vec::with_capacity(k);
    for i in 1..=k {
        let lo = delta(lambda, k, i, q)?;
        ranges.push((lo, lo + qpow_u64(q, lambda.part(i))?));
    }
    let mut out = vec![Vec::with_capacity(k)];
    for (lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                (lo..hi).map(move |m| {
                    let mut v = prefix.clone();
                    v.push(m);
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

/// Sums `t^{|mu|}` over all q-compatible partitions `mu` arising from the box,
/// enumerated one multiplicity vector at a time.
pub fn compatible_partition_sum(n: u32, k: u32, q: u64) -> Result<TPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let parts = compatible_parts(k as usize, q)?;
    let mut acc = TPoly::zero();
    for lambda in Partition::in_box(k as usize, n - k) {
        for m in compatible_multiplicities(&lambda, k as usize, q)? {
            let size: u64 = m.iter().zip(&parts).map(|(a, b)| a * b).sum();
            let e = exp(size as i64);
            check_exponent(&e)?;
            acc.add_term(e, 1.into());
        }
    }
    Ok(acc)
}

/// Checks that the multiplicity vectors for distinct partitions in the box are
/// disjoint and that `lambda` contributes exactly `q^{|lambda|}` of them.
pub fn compatible_uniqueness_check(n: u32, k: u32, q: u64) -> Result<bool> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let mut seen = HashSet::new();
    for lambda in Partition::in_box(k as usize, n - k) {
        let ms = compatible_multiplicities(&lambda, k as usize, q)?;
        if ms.len() as u64 != qpow_u64(q, lambda.size())? {
            return Ok(false);
        }
        for m in ms {
            if !seen.insert(m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Box sum, compatible sum and q-compatible partition sum against the
/// (q,t)-binomial.
pub fn box_identities(n: u32, k: u32, q: u64) -> Result<CheckOutcome> {
    let b = crate::qtnum::binomial(n, k, q)?;
    let mut out = CheckOutcome::new();
    out.push(format!("box-sum n={n} k={k} q={q}"), box_sum(n, k, q)?, b.clone());
    out.push(
        format!("compatible-sum n={n} k={k} q={q}"),
        compatible_sum(n, k, q)?,
        b.clone(),
    );
    out.push(
        format!("compatible-partitions n={n} k={k} q={q}"),
        compatible_partition_sum(n, k, q)?,
        b,
    );
    Ok(out)
}

/// Term-wise limits of the box sum. At `t -> 1` each weight becomes
/// `q^{|lambda|}`, summing to the Gaussian binomial at `q`; at `q -> 1` (after
/// `t -> t^{1/(q-1)}`) it becomes `t^{|lambda|}`, summing to the Gaussian
/// binomial in `t`.
pub fn box_limits_check(n: u32, k: u32, q: u64) -> Result<CheckOutcome> {
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let mut t1 = BigInt::zero();
    let mut q1 = TPoly::zero();
    for lambda in Partition::in_box(k as usize, n - k) {
        let w = partition_weight(&lambda, k as usize)?;
        t1 += w.limit_t1(q);
        q1.add_term(exp(w.limit_q1()?), BigInt::one());
    }
    let gaussian = crate::qtnum::gaussian_binomial(n, k);
    let mut out = CheckOutcome::new();
    out.push(
        format!("box t->1 limit n={n} k={k} q={q}"),
        TPoly::constant(t1),
        TPoly::constant(gaussian.eval_at(&BigInt::from(q))?),
    );
    out.push(format!("box q->1 limit n={n} k={k}"), q1, gaussian);
    Ok(out)
}
