//! Principal specializations of the `GL_n(F_q)` analogue of Schur functions:
//! the bialternant product, the Jacobi–Trudi determinant and its dual, and the
//! sum over reverse column-strict tableaux, plus the hook coincidence with
//! (q,t)-ribbon numbers.
//!
//! Throughout, `k` is the top power of the specialization `(1, t, ..., t^k)`,
//! i.e. there are `k + 1` variables.

mod shape;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::boxes::{partition_weight, Partition};
use crate::error::{Error, Result};
use crate::exprcore::WeightExpr;
use crate::identity::CheckOutcome;
use crate::permstat::{ribbon_qt, RibbonRoute};
use crate::qtnum::{binomial, Composition};
use crate::tpoly::{exp, pow_q, Exp, TPoly};

pub use shape::{enumerate_tableaux, SkewShape, Tableau};

/// Largest matrix expanded by the Leibniz formula.
pub const MAX_DETERMINANT_SIZE: usize = 8;

fn qpow(q: u64, e: u32) -> Result<Exp> {
    pow_q(q, e as i32)
}

/// `prod (t^{a_i} - t^{b_i}) / prod (t^{c_i} - t^{d_i})` with `a_i > b_i` and
/// `c_i > d_i`: monomials are cleared first, equal `1 - t^e` factors cancel,
/// and what remains is an exact division of genuine polynomials.
fn cleared_quotient(num: &[(Exp, Exp)], den: &[(Exp, Exp)]) -> Result<TPoly> {
    let shift: Exp = num.iter().map(|(_, b)| *b).sum::<Exp>() - den.iter().map(|(_, d)| *d).sum::<Exp>();
    let mut num_diffs: Vec<Exp> = num.iter().map(|(a, b)| a - b).collect();
    let mut den_diffs = Vec::new();
    for (c, d) in den {
        let e = c - d;
        match num_diffs.iter().position(|&x| x == e) {
            Some(pos) => {
                num_diffs.swap_remove(pos);
            }
            None => den_diffs.push(e),
        }
    }
    let n: Vec<TPoly> = num_diffs.into_iter().map(TPoly::one_minus).collect();
    let d: Vec<TPoly> = den_diffs.into_iter().map(TPoly::one_minus).collect();
    let quotient = TPoly::product(&n)?.exact_div(&TPoly::product(&d)?)?;
    quotient.try_mul(&TPoly::t_pow(shift))
}

/// The bialternant `A_{lambda+delta}/A_delta` at `(1, t, ..., t^n)`:
/// `prod_{0<=i<j<=n} (t^{q^{lambda_{n-j}+j}} - t^{q^{lambda_{n-i}+i}}) / (t^{q^j} - t^{q^i})`
/// with `lambda` padded to `n + 1` parts (0-indexed). A partition with more than
/// `n + 1` nonzero parts gives 0, matching the tableau and determinant routes.
pub fn bialternant_spec(lambda: &Partition, n: u32, q: u64) -> Result<TPoly> {
    let n = n as usize;
    if lambda.length() > n + 1 {
        return Ok(TPoly::zero());
    }
    let p: Vec<u32> = (1..=n + 1).map(|i| lambda.part(i)).collect();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for j in 1..=n {
        for i in 0..j {
            let a = qpow(q, p[n - j] + j as u32)?;
            let b = qpow(q, p[n - i] + i as u32)?;
            num.push((a, b));
            den.push((qpow(q, j as u32)?, qpow(q, i as u32)?));
        }
    }
    cleared_quotient(&num, &den)
}

/// `HZ_r` at `(1, t, ..., t^k)`: `[r+k choose k]_{q,t}`, and 0 for `r < 0`.
pub fn hz(r: i64, k: u32, q: u64) -> Result<TPoly> {
    if r < 0 {
        return Ok(TPoly::zero());
    }
    let r = u32::try_from(r).map_err(|_| Error::OutOfRange(format!("degree {r}")))?;
    binomial(r + k, k, q)
}

/// `EZ_r` at `(1, t, ..., t^{n-1})`:
/// `[n choose n-r]_{q,t} prod_{i=1}^r (t^{q^n} - t^{q^{n-r+i-1}}) / (t^{q^{n-r+i}} - t^{q^{n-r}})`.
/// Zero outside `0 <= r <= n`.
pub fn ez(r: i64, n: u32, q: u64) -> Result<TPoly> {
    if r < 0 || r > n as i64 {
        return Ok(TPoly::zero());
    }
    let r = r as u32;
    if r == 0 {
        return Ok(TPoly::one());
    }
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=r {
        num.push((qpow(q, n)?, qpow(q, n - r + i - 1)?));
        den.push((qpow(q, n - r + i)?, qpow(q, n - r)?));
    }
    binomial(n, n - r, q)?.try_mul(&cleared_quotient(&num, &den)?)
}

/// Leibniz expansion of a square determinant over `TPoly`, skipping
/// permutations that hit a zero entry.
pub fn determinant(matrix: &[Vec<TPoly>]) -> Result<TPoly> {
    let size = matrix.len();
    if size > MAX_DETERMINANT_SIZE {
        return Err(Error::OutOfRange(format!(
            "{size}x{size} determinant exceeds the Leibniz limit {MAX_DETERMINANT_SIZE}"
        )));
    }
    if matrix.iter().any(|row| row.len() != size) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    let perms: Vec<Vec<usize>> = (0..size).permutations(size).collect();
    perms
        .par_iter()
        .map(|sigma| {
            let mut term = TPoly::one();
            for (i, &j) in sigma.iter().enumerate() {
                let entry = &matrix[i][j];
                if entry.is_zero() {
                    return Ok(TPoly::zero());
                }
                term = term.try_mul(entry)?;
            }
            let inversions = sigma.iter().array_combinations::<2>().filter(|[a, b]| a > b).count();
            Ok(if inversions % 2 == 1 { -term } else { term })
        })
        .try_reduce(TPoly::zero, |a, b| Ok(a + b))
}

fn frobenius_signed(p: TPoly, q: u64, steps: i64) -> Result<TPoly> {
    let steps = i32::try_from(steps).map_err(|_| Error::OutOfRange(format!("Frobenius power {steps}")))?;
    if p.is_zero() {
        return Ok(p);
    }
    p.frobenius(q, steps)
}

/// `det( phi^{mu_j-(j-1)} HZ_{lambda_i - mu_j - i + j} )` at `(1, t, ..., t^k)`.
pub fn jacobi_trudi_spec(shape: &SkewShape, k: u32, q: u64) -> Result<TPoly> {
    let l = shape.rows();
    let (lambda, mu) = (shape.lambda(), shape.mu());
    let mut matrix = Vec::with_capacity(l);
    for i in 1..=l {
        let mut row = Vec::with_capacity(l);
        for j in 1..=l {
            let r = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            let steps = mu.part(j) as i64 - (j as i64 - 1);
            row.push(frobenius_signed(hz(r, k, q)?, q, steps)?);
        }
        matrix.push(row);
    }
    determinant(&matrix)
}

/// `det( phi^{-mu'_j + j - 1} EZ_{lambda'_i - mu'_j - i + j} )` at `(1, t, ..., t^k)`,
/// a `lambda_1 x lambda_1` determinant over the conjugate shape.
pub fn dual_jacobi_trudi_spec(shape: &SkewShape, k: u32, q: u64) -> Result<TPoly> {
    let conj = shape.conjugate();
    let l = conj.rows();
    let (lambda, mu) = (conj.lambda(), conj.mu());
    let mut matrix = Vec::with_capacity(l);
    for i in 1..=l {
        let mut row = Vec::with_capacity(l);
        for j in 1..=l {
            let r = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            let steps = j as i64 - 1 - mu.part(j) as i64;
            row.push(frobenius_signed(ez(r, k + 1, q)?, q, steps)?);
        }
        matrix.push(row);
    }
    determinant(&matrix)
}

/// `prod_i phi^{mu_i-(i-1)} wt(nu_i, k)`, where row `i` of `T` is the conjugate of `nu_i`.
pub fn tableau_weight(tableau: &Tableau, k: u32) -> Result<WeightExpr> {
    let mu = tableau.shape().mu();
    let mut w = WeightExpr::one();
    for i in 1..=tableau.rows().len() {
        let nu = tableau.row_partition(i);
        let steps = mu.part(i) as i32 - (i as i32 - 1);
        w *= partition_weight(&nu, k as usize)?.frobenius(steps);
    }
    Ok(w)
}

/// `sum_T wt(T; q, t)` over reverse column-strict tableaux with entries in `0..=k`.
pub fn tableau_sum(shape: &SkewShape, k: u32, q: u64) -> Result<TPoly> {
    enumerate_tableaux(shape, k)
        .par_iter()
        .map(|t| tableau_weight(t, k)?.to_poly(q))
        .try_reduce(TPoly::zero, |a, b| Ok(a + b))
}

/// The classical specialization `s_{lambda/mu}(1, t, ..., t^k) = sum_T t^{sum T}`.
pub fn classical_schur_spec(shape: &SkewShape, k: u32) -> TPoly {
    enumerate_tableaux(shape, k)
        .iter()
        .map(|t| TPoly::t_pow(exp(t.entry_sum() as i64)))
        .sum()
}

/// Term-wise limits of the tableau sum: `t -> 1` gives `q^{sum T}` per tableau
/// and `q -> 1` gives `t^{sum T}`, so the latter add up to [`classical_schur_spec`].
pub fn tableau_limits_check(shape: &SkewShape, k: u32, q: u64) -> Result<CheckOutcome> {
    let mut t1 = BigInt::zero();
    let mut t1_expected = BigInt::zero();
    let mut q1 = TPoly::zero();
    for t in enumerate_tableaux(shape, k) {
        let w = tableau_weight(&t, k)?;
        t1 += w.limit_t1(q);
        t1_expected += num_traits::pow(BigInt::from(q), t.entry_sum() as usize);
        q1.add_term(exp(w.limit_q1()?), BigInt::one());
    }
    let mut out = CheckOutcome::new();
    out.push(
        format!("tableau t->1 limit {shape} k={k} q={q}"),
        TPoly::constant(t1),
        TPoly::constant(t1_expected),
    );
    out.push(
        format!("tableau q->1 limit {shape} k={k}"),
        q1,
        classical_schur_spec(shape, k),
    );
    Ok(out)
}

/// Bialternant, Jacobi–Trudi and tableau sum for a straight shape.
pub fn three_way_check(lambda: &Partition, k: u32, q: u64) -> Result<CheckOutcome> {
    let shape = SkewShape::straight(lambda);
    let bialt = bialternant_spec(lambda, k, q)?;
    let mut out = CheckOutcome::new();
    out.push(
        format!("bialternant = JT for {lambda}, k={k}"),
        bialt.clone(),
        jacobi_trudi_spec(&shape, k, q)?,
    );
    out.push(
        format!("bialternant = tableau sum for {lambda}, k={k}"),
        bialt,
        tableau_sum(&shape, k, q)?,
    );
    Ok(out)
}

/// Jacobi–Trudi against its dual for a skew shape.
pub fn dual_check(shape: &SkewShape, k: u32, q: u64) -> Result<CheckOutcome> {
    Ok(CheckOutcome::single(
        format!("JT = dual JT for {shape}, k={k}"),
        jacobi_trudi_spec(shape, k, q)?,
        dual_jacobi_trudi_spec(shape, k, q)?,
    ))
}

/// The hook `(m, 1^k)`.
pub fn hook(m: u32, k: u32) -> Partition {
    let mut parts = vec![m];
    parts.extend(std::iter::repeat_n(1, k as usize));
    Partition::new(parts).expect("hooks are partitions")
}

/// The three hook identities at `(1, t, ..., t^n)`:
/// (a) the product formula, (b) the `HZ_m EZ_k` recurrence (for `k >= 1`), and
/// (c) the coincidence with the ribbon number `r_{(1^k, m)}`.
pub fn hook_checks(m: u32, k: u32, n: u32, q: u64) -> Result<CheckOutcome> {
    if m == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "hook checks need m >= 1 and n >= k (m={m}, k={k}, n={n})"
        )));
    }
    let lhs = bialternant_spec(&hook(m, k), n, q)?;
    let qbin = binomial(m + n, n - k, q)?;
    let mut out = CheckOutcome::new();

    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=k {
        num.push((qpow(q, m + k)?, qpow(q, i)?));
        den.push((qpow(q, i)?, exp(1)));
    }
    let correction = cleared_quotient(&num, &den)?.frobenius(q, (n - k) as i32)?;
    out.push(
        format!("hook product formula (m={m}, k={k}, n={n})"),
        lhs.clone(),
        qbin.try_mul(&correction)?,
    );

    if k >= 1 {
        let sum = &lhs + &bialternant_spec(&hook(m + 1, k - 1), n - 1, q)?;
        let rhs = hz(m as i64, n, q)?.try_mul(&ez(k as i64, n, q)?)?;
        out.push(format!("hook recurrence (m={m}, k={k}, n={n})"), sum, rhs);
    }

    let mut parts = vec![1; k as usize];
    parts.push(m);
    let ribbon = ribbon_qt(&Composition::new(parts), q, RibbonRoute::DescentSum)?;
    let rhs = qbin.try_mul(&ribbon.frobenius(q, (n - k) as i32)?)?;
    out.push(format!("hook = ribbon (m={m}, k={k}, n={n})"), lhs, rhs);
    Ok(out)
}
