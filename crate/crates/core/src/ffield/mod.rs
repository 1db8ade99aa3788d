//! Subspaces of `F_p^n` through their row-reduced echelon matrices, the
//! subspace statistic whose generating function is the (q,t)-binomial, and
//! the Dickson product over all linear functionals.
//!
//! Only prime fields are supported.

mod echelon;

pub use echelon::{EchelonMatrix, EntryBijections, SubspaceIter};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::boxes::{partition_weight, Partition};
use crate::error::{Error, Result};
use crate::identity::CheckOutcome;
use crate::qtnum::binomial;
use crate::tpoly::{check_exponent, exp, pow_q, FpPoly2, TPoly};

/// Largest `n` accepted by the enumerators.
pub const MAX_DIMENSION: usize = 24;

/// Largest number of linear factors `p^n` accepted by [`dickson_product`].
pub const MAX_DICKSON_FACTORS: u64 = 1 << 12;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_dims(n: u32, k: u32, p: u64) -> Result<()> {
    require_prime(p)?;
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    if n as usize > MAX_DIMENSION {
        return Err(Error::OutOfRange(format!("n={n} exceeds {MAX_DIMENSION}")));
    }
    Ok(())
}

/// Every `k`-dimensional subspace of `F_p^n`, once each.
pub fn enumerate_subspaces(n: u32, k: u32, p: u64) -> Result<SubspaceIter> {
    check_dims(n, k, p)?;
    Ok(echelon::subspace_iter(n as usize, k as usize, p))
}

fn to_term(s: u64) -> Result<TPoly> {
    let e = exp(i64::try_from(s).map_err(|_| Error::OutOfRange("statistic overflows".into()))?);
    check_exponent(&e)?;
    Ok(TPoly::t_pow(e))
}

/// `sum_U t^{s(U)}` over all `k`-subspaces, with custom entry bijections.
pub fn subspace_sum_with(n: u32, k: u32, phis: &EntryBijections) -> Result<TPoly> {
    let p = phis.modulus();
    check_dims(n, k, p)?;
    echelon::pivot_masks(n as usize, k as usize)
        .into_par_iter()
        .map(|mask| {
            let mut acc = BTreeMap::<u64, i64>::new();
            for u in echelon::matrices_for_mask(n as usize, p, mask) {
                *acc.entry(u.statistic_with(phis)?).or_default() += 1;
            }
            let mut poly = TPoly::zero();
            for (s, c) in acc {
                poly += &to_term(s)? * &TPoly::constant(c);
            }
            Ok(poly)
        })
        .try_reduce(TPoly::zero, |a, b| Ok(a + b))
}

/// `sum_U t^{s(U)}` with the canonical bijections `a -> a`, `a -> a + 1`.
pub fn subspace_sum(n: u32, k: u32, p: u64) -> Result<TPoly> {
    require_prime(p)?;
    subspace_sum_with(n, k, &EntryBijections::canonical(p))
}

/// `sum_U t^{s(U)}` grouped by the partition `lambda(U)` of free positions.
pub fn subspace_sums_by_shape(n: u32, k: u32, phis: &EntryBijections) -> Result<BTreeMap<Partition, TPoly>> {
    let mut out = BTreeMap::<Partition, TPoly>::new();
    for u in enumerate_subspaces(n, k, phis.modulus())? {
        let term = to_term(u.statistic_with(phis)?)?;
        *out.entry(u.lambda()).or_default() += term;
    }
    Ok(out)
}

/// The subspace sum against the (q,t)-binomial, and each shape class against
/// the product-form weight of its partition.
pub fn subspace_identities(n: u32, k: u32, p: u64) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::single(
        format!("subspace-sum n={n} k={k} p={p}"),
        subspace_sum(n, k, p)?,
        binomial(n, k, p)?,
    );
    for (lambda, sum) in subspace_sums_by_shape(n, k, &EntryBijections::canonical(p))? {
        let w = partition_weight(&lambda, k as usize)?.to_poly(p)?;
        out.push(format!("subspace-shape {lambda} n={n} k={k} p={p}"), sum, w);
    }
    Ok(out)
}

/// CSV with one row per subspace: 1-indexed pivot columns, free entries in
/// row-major order, the partition `lambda(U)`, and `s(U)`. List-valued fields
/// are `;`-separated.
pub fn subspaces_csv(n: u32, k: u32, p: u64) -> Result<String> {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(";");
    let mut out = String::from("pivots,free_entries,lambda,s\n");
    for u in enumerate_subspaces(n, k, p)? {
        let piv = join(&mut u.pivots().iter().map(|c| (c + 1).to_string()));
        let free = join(&mut u.free_entries().iter().map(u64::to_string));
        let lam = join(&mut u.lambda().parts().iter().map(u32::to_string));
        writeln!(out, "{piv},{free},{lam},{}", u.statistic()?).expect("writing to a String");
    }
    Ok(out)
}

/// `prod_{l in (F_p^n)^*} (y + l(1, t, ..., t^{n-1}))` over `F_p`, including the
/// zero functional, so the `y`-degree is `p^n`.
pub fn dickson_product(n: u32, p: u64) -> Result<FpPoly2> {
    require_prime(p)?;
    let count = p
        .checked_pow(n)
        .filter(|&c| c <= MAX_DICKSON_FACTORS)
        .ok_or_else(|| Error::OutOfRange(format!("{p}^{n} linear factors exceed {MAX_DICKSON_FACTORS}")))?;
    let mut acc = FpPoly2::one(p);
    for idx in 0..count {
        let mut factor = FpPoly2::monomial(p, 1, 0, 1);
        let mut rest = idx;
        for i in 0..n as u64 {
            factor.add_term(0, i, (rest % p) as i64);
            rest /= p;
        }
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `[n;s]_{q,t} prod_{j=1}^{n-s} (t^{q^n} - t^{q^{n-j}}) / (t^{q^{s+j}} - t^{q^s})`
/// over the integers at `q`; its reduction mod `p` is, up to the sign
/// `(-1)^{n-s}`, the coefficient of `y^{q^s}` in the Dickson product.
pub fn dickson_coefficient(n: u32, s: u32, q: u64) -> Result<TPoly> {
    if s > n {
        return Err(Error::OutOfRange(format!("s={s} exceeds n={n}")));
    }
    let tq = |e: u32| -> Result<TPoly> { Ok(TPoly::t_pow(pow_q(q, e as i32)?)) };
    let mut num = binomial(n, s, q)?;
    let mut den = TPoly::one();
    for j in 1..=n - s {
        num = num.try_mul(&(&tq(n)? - &tq(n - j)?))?;
        den = den.try_mul(&(&tq(s + j)? - &tq(s)?))?;
    }
    num.exact_div(&den)
}

fn reduce_mod(poly: &TPoly, p: u64) -> Result<Vec<(u64, u64)>> {
    let pb = num_bigint::BigInt::from(p);
    let mut out = Vec::new();
    for (e, c) in poly.terms() {
        if !e.is_integer() || *e < exp(0) {
            return Err(Error::Invalid(format!("t^{e} is not a polynomial term")));
        }
        let r: u64 = ((c % &pb + &pb) % &pb).try_into().expect("residue fits u64");
        if r != 0 {
            out.push((e.to_integer() as u64, r));
        }
    }
    Ok(out)
}

/// Compares the Dickson product with the closed form coefficient by coefficient.
///
/// With `signed`, the coefficient of `y^{p^s}` is compared with
/// `(-1)^{n-s}` times [`dickson_coefficient`]; that sign is what the classical
/// Dickson expansion `prod_v (y - v) = sum_s (-1)^{n-s} c_{n,s} y^{q^s}` carries
/// and is invisible in characteristic 2. Without it, the comparison is the
/// unsigned form and fails for odd `p` whenever `n > s`.
/// Every `y`-degree that is not a power of `p` must have coefficient zero.
pub fn dickson_comparison(n: u32, p: u64, signed: bool) -> Result<bool> {
    let prod = dickson_product(n, p)?;
    let powers: Vec<u64> = (0..=n).map(|s| p.pow(s)).collect();
    if prod.y_support().iter().any(|d| !powers.contains(d)) {
        return Ok(false);
    }
    for s in 0..=n {
        let mut expected = dickson_coefficient(n, s, p)?;
        if signed && (n - s) % 2 == 1 {
            expected = -expected;
        }
        if prod.y_coefficient(powers[s as usize]) != reduce_mod(&expected, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Dickson identity with the classical sign convention.
pub fn dickson_identity_check(n: u32, p: u64) -> Result<bool> {
    dickson_comparison(n, p, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtnum::gaussian_binomial;
    use num_bigint::BigInt;
    use rand::seq::SliceRandom;
    use rand::{rngs::StdRng, SeedableRng};

    fn p(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (exp(e), c)))
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(4) && !is_prime(91));
        assert!(matches!(enumerate_subspaces(3, 1, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_subspaces(2, 1, 2).unwrap().count(), 3);
        assert_eq!(enumerate_subspaces(3, 0, 2).unwrap().count(), 1);
        assert_eq!(enumerate_subspaces(4, 2, 2).unwrap().count(), 35);
        assert_eq!(enumerate_subspaces(5, 2, 3).unwrap().count(), 1210);
        assert_eq!(enumerate_subspaces(3, 3, 3).unwrap().count(), 1);
        for q in [2u64, 3] {
            for n in 0..=5 {
                for k in 0..=n {
                    let c = enumerate_subspaces(n, k, q).unwrap().count();
                    let g = gaussian_binomial(n, k).eval_at(&BigInt::from(q)).unwrap();
                    assert_eq!(BigInt::from(c), g);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_distinct_and_ordered() {
        let all: Vec<_> = enumerate_subspaces(4, 2, 3).unwrap().collect();
        let rows: std::collections::HashSet<_> = all.iter().map(|u| u.rows()).collect();
        assert_eq!(rows.len(), all.len());
        // colex order on pivot sets: {0,1}, {0,2}, {1,2}, {0,3}, ...
        let first: Vec<_> = all.first().unwrap().pivots().to_vec();
        assert_eq!(first, vec![1, 0]);
        assert_eq!(all.last().unwrap().pivots(), &[3, 2]);
    }

    #[test]
    fn statistic_examples() {
        let zero = EchelonMatrix::new(2, 2, vec![0], vec![]).unwrap();
        assert_eq!(zero.statistic().unwrap(), 0);
        let a0 = EchelonMatrix::new(2, 2, vec![1], vec![0]).unwrap();
        let a1 = EchelonMatrix::new(2, 2, vec![1], vec![1]).unwrap();
        assert_eq!(a0.lambda(), "1".parse().unwrap());
        assert_eq!((a0.statistic().unwrap(), a1.statistic().unwrap()), (1, 2));
    }

    #[test]
    fn display_shape() {
        // 4 x 10 with pivots (1-indexed) at columns 8, 6, 3, 1.
        let m = EchelonMatrix::new(2, 10, vec![7, 5, 2, 0], vec![0; 8]).unwrap();
        assert_eq!(m.lambda(), "4,3,1,0".parse().unwrap());
        let dists: Vec<usize> = m.free_positions().iter().map(|&(r, c)| m.dist(r, c)).collect();
        assert_eq!(dists, vec![3, 4, 5, 6, 2, 3, 4, 1]);
        let cols: Vec<usize> = m.free_positions().iter().map(|&(_, c)| c + 1).collect();
        assert_eq!(cols, vec![2, 4, 5, 7, 2, 4, 5, 2]);
        assert_eq!(m.rows()[0][7], 1);
        assert_eq!(m.rows()[0][8], 0);
    }

    #[test]
    fn sums() {
        assert_eq!(subspace_sum(2, 1, 2).unwrap(), p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(subspace_sum(3, 3, 3).unwrap(), TPoly::one());
        let expected = p(&(0..7).map(|e| (e, 1)).collect::<Vec<_>>());
        assert_eq!(subspace_sum(3, 1, 2).unwrap(), expected);
        for q in [2u64, 3] {
            for n in 0..=4 {
                for k in 0..=n {
                    assert!(subspace_identities(n, k, q).unwrap().holds(), "n={n} k={k} q={q}");
                }
            }
        }
    }

    #[test]
    fn bijection_invariance() {
        let mut rng = StdRng::seed_from_u64(7);
        let base = subspace_sum(3, 1, 3).unwrap();
        for _ in 0..5 {
            let mut phi0: Vec<u64> = (0..3).collect();
            let mut phi1: Vec<u64> = (1..=3).collect();
            phi0.shuffle(&mut rng);
            phi1.shuffle(&mut rng);
            let phis = EntryBijections::new(phi0, phi1).unwrap();
            assert_eq!(subspace_sum_with(3, 1, &phis).unwrap(), base);
        }
        assert!(EntryBijections::new(vec![0, 0], vec![1, 2]).is_err());
    }

    #[test]
    fn csv_dump() {
        let csv = subspaces_csv(2, 1, 2).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "pivots,free_entries,lambda,s");
        assert_eq!(&lines[1..], &["1,,0,0", "2,0,1,1", "2,1,1,2"]);
    }

    #[test]
    fn dickson_examples() {
        let one = dickson_product(1, 2).unwrap();
        assert_eq!(one, FpPoly2::from_terms(2, [((2, 0), 1), ((1, 0), 1)]));
        let two = dickson_product(2, 2).unwrap();
        let expected = FpPoly2::from_terms(
            2,
            [
                ((4, 0), 1),
                ((2, 0), 1),
                ((2, 1), 1),
                ((2, 2), 1),
                ((1, 1), 1),
                ((1, 2), 1),
            ],
        );
        assert_eq!(two, expected);
        for (n, q) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
            assert!(dickson_identity_check(n, q).unwrap(), "n={n} p={q}");
        }
        assert!(dickson_product(13, 2).is_err());
    }

    #[test]
    fn unsigned_form_needs_characteristic_two() {
        assert!(dickson_comparison(2, 2, false).unwrap());
        assert!(!dickson_comparison(1, 3, false).unwrap());
        assert!(!dickson_comparison(2, 3, false).unwrap());
    }
}
