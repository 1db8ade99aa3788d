//! Permutation weights `wt(w; q, t)`, the (q,t)-multinomial as a sum over
//! minimum-length coset representatives, and (q,t)-ribbon numbers by three
//! independent routes.

mod permutation;

pub use permutation::Permutation;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::boxes::Partition;
use crate::error::{Error, Result};
use crate::exprcore::{QExp, WeightExpr};
use crate::identity::CheckOutcome;
use crate::qtnum::{factorial, factorial_quotient, gaussian_multinomial, multinomial, Composition};
use crate::tpoly::{exp, TPoly};

/// Largest number of parts accepted by the determinant route.
pub const MAX_DETERMINANT_SIZE: usize = 8;

/// The minimum-length representative `u_lambda` of `S_n / (S_k x S_{n-k})`:
/// `u(i) = lambda_{k+1-i} + i` for `i <= k`, then the remaining values in
/// increasing order.
pub fn u_lambda(lambda: &Partition, k: u32, n: u32) -> Result<Permutation> {
    if k > n || lambda.length() > k as usize || lambda.width() > n - k {
        return Err(Error::OutOfRange(format!(
            "{lambda} does not fit in a {k} x {} box",
            n.saturating_sub(k)
        )));
    }
    let mut one_line: Vec<u32> = (1..=k).map(|i| lambda.part((k + 1 - i) as usize) + i).collect();
    let mut rest: Vec<u32> = (1..=n).filter(|v| !one_line.contains(v)).collect();
    one_line.append(&mut rest);
    Permutation::new(one_line)
}

/// The factorization `w = u_lambda . a . e . b` with `k + 1 = w^{-1}(1)`,
/// `a` in `S_k`, `e` fixing `k + 1`, and `b` in `S_{n-k-1}` (acting on
/// `k+2, ..., n`). `lambda` always has a full first column of length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub k: u32,
    pub lambda: Partition,
    pub u: Permutation,
    pub a: Permutation,
    pub b: Permutation,
}

impl Factorization {
    /// `u . (a (+) e (+) b)` as a permutation of `{1..n}`.
    pub fn reassemble(&self) -> Result<Permutation> {
        let k = self.k;
        let mut inner: Vec<u32> = self.a.one_line().to_vec();
        inner.push(k + 1);
        inner.extend(self.b.one_line().iter().map(|&v| v + k + 1));
        self.u.compose(&Permutation::new(inner)?)
    }
}

/// Splits `w` (with `n >= 1`) as `u_lambda . a . e . b`; the result is checked
/// by reassembly and additivity of length.
pub fn factorize(w: &Permutation) -> Result<Factorization> {
    let n = w.n();
    if n == 0 {
        return Err(Error::OutOfRange("the empty permutation has no factorization".into()));
    }
    let k = w.inverse().apply(1) - 1;
    let head = &w.one_line()[..k as usize];
    let tail = &w.one_line()[k as usize + 1..];
    let mut top = head.to_vec();
    top.sort_unstable();
    let lambda = Partition::new((1..=k).map(|j| top[(k - j) as usize] - (k + 1 - j)).collect())?;
    let f = Factorization {
        k,
        u: u_lambda(&lambda, k, n)?,
        lambda,
        a: Permutation::standardize(head),
        b: Permutation::standardize(tail),
    };
    debug_assert_eq!(&f.reassemble()?, w);
    debug_assert_eq!(w.length(), f.u.length() + f.a.length() + f.b.length());
    Ok(f)
}

/// `wt(w; q, t)`, defined recursively by
/// `t^{q^k - 1} (k!_{q,t^q}/k!_{q,t}) phi(wt(u_{lambda-hat})) wt(a) phi^{k+1}(wt(b))`,
/// with `wt = 1` on `S_0` and `S_1`.
pub fn perm_weight(w: &Permutation) -> Result<WeightExpr> {
    if w.n() <= 1 {
        return Ok(WeightExpr::one());
    }
    let f = factorize(w)?;
    let k = f.k as i32;
    let hat = f.lambda.without_first_column();
    let u_hat = u_lambda(&hat, f.k, w.n() - 1)?;
    let mut out = WeightExpr::monomial(QExp::qdiff(k, 0)) * factorial_quotient(f.k)?;
    out *= perm_weight(&u_hat)?.frobenius(1);
    out *= perm_weight(&f.a)?;
    out *= perm_weight(&f.b)?.frobenius(k + 1);
    Ok(out)
}

/// `W^alpha`: permutations whose descent composition is refined by `alpha`
/// (descent set contained in the partial sums of `alpha`).
pub fn coset_reps(alpha: &Composition) -> Result<impl Iterator<Item = Permutation>> {
    alpha.require_positive()?;
    let allowed = alpha.descent_mask();
    Ok(Permutation::all(alpha.n()).filter(move |w| w.descent_composition().descent_mask() & !allowed == 0))
}

fn sum_weights(perms: Vec<Permutation>, q: u64) -> Result<TPoly> {
    perms
        .par_iter()
        .map(|w| perm_weight(w)?.to_poly(q))
        .try_reduce(TPoly::zero, |a, b| Ok(a + b))
}

/// `sum_{w in W^alpha} wt(w; q, t)`.
pub fn multinomial_perm_sum(alpha: &Composition, q: u64) -> Result<TPoly> {
    sum_weights(coset_reps(alpha)?.collect(), q)
}

/// The three ways of computing a (q,t)-ribbon number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RibbonRoute {
    /// Sum of `wt(w)` over the descent class `beta(w) = alpha`.
    DescentSum,
    /// Alternating sum of multinomials over the coarsenings of `alpha`.
    InclusionExclusion,
    /// `n!_{q,t} det(phi^{s_{i-1}} 1/(s_j - s_{i-1})!_{q,t})` by Leibniz expansion.
    Determinant,
}

impl RibbonRoute {
    pub const ALL: [RibbonRoute; 3] = [
        RibbonRoute::DescentSum,
        RibbonRoute::InclusionExclusion,
        RibbonRoute::Determinant,
    ];
}

impl fmt::Display for RibbonRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RibbonRoute::DescentSum => "descent-sum",
            RibbonRoute::InclusionExclusion => "inclusion-exclusion",
            RibbonRoute::Determinant => "determinant",
        })
    }
}

impl FromStr for RibbonRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RibbonRoute::ALL
            .into_iter()
            .find(|r| r.to_string() == s.replace('_', "-"))
            .ok_or_else(|| Error::Invalid(format!("unknown ribbon route {s:?}")))
    }
}

/// The descent class `{w : beta(w) = alpha}`.
pub fn descent_class(alpha: &Composition) -> Result<Vec<Permutation>> {
    alpha.require_positive()?;
    Ok(Permutation::all(alpha.n())
        .filter(|w| &w.descent_composition() == alpha)
        .collect())
}

/// `r_alpha(q, t)` by the chosen route.
pub fn ribbon_qt(alpha: &Composition, q: u64, route: RibbonRoute) -> Result<TPoly> {
    alpha.require_positive()?;
    match route {
        RibbonRoute::DescentSum => sum_weights(descent_class(alpha)?, q),
        RibbonRoute::InclusionExclusion => {
            let mut acc = TPoly::zero();
            for beta in alpha.coarsenings() {
                let m = multinomial(&beta, q)?;
                if (alpha.len() - beta.len()).is_multiple_of(2) {
                    acc += m;
                } else {
                    acc -= &m;
                }
            }
            Ok(acc)
        }
        RibbonRoute::Determinant => ribbon_determinant(alpha, q),
    }
}

fn ribbon_determinant(alpha: &Composition, q: u64) -> Result<TPoly> {
    let l = alpha.len();
    if l > MAX_DETERMINANT_SIZE {
        return Err(Error::OutOfRange(format!(
            "determinant of size {l} exceeds {MAX_DETERMINANT_SIZE}"
        )));
    }
    let sums = alpha.partial_sums();
    let top = factorial(alpha.n(), q)?;
    let mut acc = TPoly::zero();
    'perms: for tau in (0..l).permutations(l) {
        let mut den = TPoly::one();
        for (i, &j) in tau.iter().enumerate() {
            // row i (0-indexed) uses s_{i}, column j uses s_{j+1}
            let (lo, hi) = (sums[i], sums[j + 1]);
            if hi < lo {
                continue 'perms;
            }
            den = den.try_mul(&factorial(hi - lo, q)?.frobenius(q, lo as i32)?)?;
        }
        let term = top.exact_div(&den)?;
        let inversions = tau.iter().array_combinations().filter(|[a, b]| a > b).count();
        if inversions % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

/// The statistic used for classical ribbon numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermStatistic {
    /// Inversion count `l(w)`.
    Length,
    /// `maj(w^{-1})`: equidistributed with `l` on every descent class
    /// (Foata-Schutzenberger), and the statistic that the standard bijection
    /// from ribbon tableaux to permutations carries `maj(Q)` to.
    InverseMaj,
    /// `maj(w)` itself, which is constant on a descent class.
    Maj,
}

impl FromStr for PermStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "length" | "inv" => Ok(PermStatistic::Length),
            "imaj" | "inverse-maj" => Ok(PermStatistic::InverseMaj),
            "maj" => Ok(PermStatistic::Maj),
            _ => Err(Error::Invalid(format!("unknown statistic {s:?}"))),
        }
    }
}

/// `r_alpha(t) = sum_{beta(w) = alpha} t^{stat(w)}`.
pub fn ribbon_classical(alpha: &Composition, stat: PermStatistic) -> Result<TPoly> {
    let mut acc = TPoly::zero();
    for w in descent_class(alpha)? {
        let s = match stat {
            PermStatistic::Length => w.length(),
            PermStatistic::InverseMaj => w.inverse().maj(),
            PermStatistic::Maj => w.maj(),
        };
        acc.add_term(exp(s as i64), 1.into());
    }
    Ok(acc)
}

/// `sum_{beta(w)=alpha} t^{lim_{q->1} wt(w)}`, the term-wise `q -> 1` limit.
pub fn ribbon_q1_limit(alpha: &Composition) -> Result<TPoly> {
    let mut acc = TPoly::zero();
    for w in descent_class(alpha)? {
        acc.add_term(exp(perm_weight(&w)?.limit_q1()?), 1.into());
    }
    Ok(acc)
}

/// The permutation sum over `W^alpha` against the (q,t)-multinomial.
pub fn perm_sum_check(alpha: &Composition, q: u64) -> Result<CheckOutcome> {
    Ok(CheckOutcome::single(
        format!("perm-sum alpha={alpha} q={q}"),
        multinomial_perm_sum(alpha, q)?,
        multinomial(alpha, q)?,
    ))
}

/// All three ribbon routes agree.
pub fn ribbon_three_way(alpha: &Composition, q: u64) -> Result<CheckOutcome> {
    let d = ribbon_qt(alpha, q, RibbonRoute::DescentSum)?;
    let mut out = CheckOutcome::new();
    for route in [RibbonRoute::InclusionExclusion, RibbonRoute::Determinant] {
        out.push(
            format!("ribbon descent-sum vs {route} alpha={alpha} q={q}"),
            d.clone(),
            ribbon_qt(alpha, q, route)?,
        );
    }
    Ok(out)
}

/// `sum_alpha r_alpha(q,t) = [n; 1^n]_{q,t}` over all compositions of `n`.
pub fn ribbon_total_check(n: u32, q: u64) -> Result<CheckOutcome> {
    let mut total = TPoly::zero();
    for alpha in Composition::all_of(n) {
        total += ribbon_qt(&alpha, q, RibbonRoute::DescentSum)?;
    }
    Ok(CheckOutcome::single(
        format!("ribbon-total n={n} q={q}"),
        total,
        multinomial(&Composition::ones(n), q)?,
    ))
}

/// Term-wise limits of the permutation sums. Over `W^alpha`, `t -> 1` gives
/// `q^{l(w)}` per term, summing to the Gaussian multinomial at `q`, and `q -> 1`
/// gives `t^{l(w)}`, summing to the Gaussian multinomial in `t`. Over a descent
/// class the `q -> 1` limits sum to the classical ribbon number.
pub fn perm_limits_check(alpha: &Composition, q: u64) -> Result<CheckOutcome> {
    let mut t1 = BigInt::zero();
    let mut q1 = TPoly::zero();
    for w in coset_reps(alpha)? {
        let wt = perm_weight(&w)?;
        t1 += wt.limit_t1(q);
        q1.add_term(exp(wt.limit_q1()?), BigInt::one());
    }
    let gaussian = gaussian_multinomial(alpha);
    let mut out = CheckOutcome::new();
    out.push(
        format!("perm t->1 limit alpha={alpha} q={q}"),
        TPoly::constant(t1),
        TPoly::constant(gaussian.eval_at(&BigInt::from(q))?),
    );
    out.push(format!("perm q->1 limit alpha={alpha}"), q1, gaussian);
    out.push(
        format!("ribbon q->1 limit alpha={alpha}"),
        ribbon_q1_limit(alpha)?,
        ribbon_classical(alpha, PermStatistic::Length)?,
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxes::partition_weight;
    use proptest::prelude::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn p(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (exp(e), c)))
    }

    #[test]
    fn u_lambda_examples() {
        assert_eq!(u_lambda(&Partition::empty(), 0, 3).unwrap(), Permutation::identity(3));
        assert_eq!(u_lambda(&Partition::empty(), 2, 3).unwrap(), Permutation::identity(3));
        let lam: Partition = "3,2,2,1".parse().unwrap();
        assert_eq!(u_lambda(&lam, 4, 8).unwrap(), w("2,4,5,7,1,3,6,8"));
        assert_eq!(u_lambda(&"1".parse().unwrap(), 1, 2).unwrap(), w("2,1"));
        assert!(u_lambda(&"3".parse().unwrap(), 1, 3).is_err());
    }

    #[test]
    fn worked_factorization() {
        let f = factorize(&w("5,2,7,4,1,3,8,6")).unwrap();
        assert_eq!(f.k, 4);
        assert_eq!(f.lambda, "3,2,2,1".parse().unwrap());
        assert_eq!(f.u, w("2,4,5,7,1,3,6,8"));
        assert_eq!(f.a, w("3,1,4,2"));
        assert_eq!(f.b, w("1,3,2"));
        let hat = u_lambda(&f.lambda.without_first_column(), 4, 7).unwrap();
        assert_eq!(hat, w("1,3,4,6,2,5,7"));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(perm_weight(&Permutation::identity(4)).unwrap(), WeightExpr::one());
        let s = perm_weight(&w("2,1")).unwrap();
        assert_eq!(s, WeightExpr::shifted_bracket(QExp::qdiff(1, 0)));
        assert_eq!(s.to_poly(2).unwrap(), p(&[(1, 1), (2, 1)]));
        let big = perm_weight(&w("5,2,7,4,1,3,8,6")).unwrap();
        for b in [
            QExp::qdiff(4, 0),
            QExp::qdiff(4, 1),
            QExp::qdiff(4, 2),
            QExp::qdiff(4, 3),
        ] {
            assert!(big.brackets().contains(&b));
        }
        assert_eq!(big.bracket_count(), w("5,2,7,4,1,3,8,6").length() as usize);
    }

    #[test]
    fn coset_counts() {
        assert_eq!(
            coset_reps(&c(&[3])).unwrap().collect::<Vec<_>>(),
            vec![Permutation::identity(3)]
        );
        assert_eq!(coset_reps(&c(&[1, 1])).unwrap().count(), 2);
        assert_eq!(coset_reps(&c(&[1, 1, 1])).unwrap().count(), 6);
        assert_eq!(coset_reps(&c(&[2, 2])).unwrap().count(), 6);
        assert!(coset_reps(&c(&[1, 0])).is_err());
    }

    #[test]
    fn perm_sums() {
        assert_eq!(
            multinomial_perm_sum(&c(&[1, 1]), 2).unwrap(),
            p(&[(0, 1), (1, 1), (2, 1)])
        );
        assert_eq!(multinomial_perm_sum(&c(&[4]), 2).unwrap(), TPoly::one());
        for n in 1..=4 {
            for alpha in Composition::all_of(n) {
                assert!(perm_sum_check(&alpha, 2).unwrap().holds(), "{alpha}");
            }
        }
    }

    #[test]
    fn ribbon_examples() {
        for route in RibbonRoute::ALL {
            assert_eq!(ribbon_qt(&c(&[3]), 2, route).unwrap(), TPoly::one(), "{route}");
            assert_eq!(
                ribbon_qt(&c(&[1, 1]), 2, route).unwrap(),
                p(&[(1, 1), (2, 1)]),
                "{route}"
            );
            assert_eq!(ribbon_qt(&c(&[]), 2, route).unwrap(), TPoly::one(), "{route}");
        }
        assert!(ribbon_three_way(&c(&[1, 2]), 2).unwrap().holds());
        assert_eq!(ribbon_classical(&c(&[3]), PermStatistic::Length).unwrap(), TPoly::one());
        assert_eq!(
            ribbon_classical(&c(&[1, 1]), PermStatistic::InverseMaj).unwrap(),
            p(&[(1, 1)])
        );
        // maj(w) is the descent-set sum, so it only counts the class.
        assert_eq!(ribbon_classical(&c(&[1, 2]), PermStatistic::Maj).unwrap(), p(&[(1, 2)]));
        assert_eq!(
            ribbon_classical(&c(&[1, 2]), PermStatistic::Length).unwrap(),
            p(&[(1, 1), (2, 1)])
        );
        assert!(ribbon_qt(&c(&[0, 2]), 2, RibbonRoute::Determinant).is_err());
        assert_eq!(
            "inclusion_exclusion".parse::<RibbonRoute>().unwrap(),
            RibbonRoute::InclusionExclusion
        );
    }

    #[test]
    fn ribbon_grids() {
        for n in 0..=4 {
            assert!(ribbon_total_check(n, 2).unwrap().holds());
            for alpha in Composition::all_of(n) {
                assert!(ribbon_three_way(&alpha, 2).unwrap().holds(), "{alpha}");
                let lim = ribbon_q1_limit(&alpha).unwrap();
                assert_eq!(lim, ribbon_classical(&alpha, PermStatistic::Length).unwrap());
                assert_eq!(lim, ribbon_classical(&alpha, PermStatistic::InverseMaj).unwrap());
                // Summing ribbons over the coarsenings recovers the multinomial.
                let mut pair = TPoly::zero();
                for beta in alpha.coarsenings() {
                    pair += ribbon_qt(&beta, 2, RibbonRoute::InclusionExclusion).unwrap();
                }
                assert_eq!(pair, multinomial(&alpha, 2).unwrap());
            }
        }
    }

    #[test]
    fn two_part_cosets_match_box_weights() {
        for n in 0..=6u32 {
            for k in 0..=n {
                for lam in Partition::in_box(k as usize, n - k) {
                    let u = u_lambda(&lam, k, n).unwrap();
                    assert_eq!(perm_weight(&u).unwrap(), partition_weight(&lam, k as usize).unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn per_permutation_invariants(v in Just((1..=6u32).collect::<Vec<_>>()).prop_shuffle(), q in 2u64..4) {
            let w = Permutation::new(v).unwrap();
            let f = factorize(&w).unwrap();
            prop_assert_eq!(f.reassemble().unwrap(), w.clone());
            prop_assert_eq!(w.length(), f.u.length() + f.a.length() + f.b.length());
            let wt = perm_weight(&w).unwrap();
            prop_assert_eq!(wt.bracket_count() as u32, w.length());
            prop_assert_eq!(wt.limit_q1().unwrap(), w.length() as i64);
            prop_assert_eq!(wt.limit_t1(q), num_traits::pow(BigInt::from(q), w.length() as usize));
            prop_assert!(wt.validate().is_ok());
            let poly = wt.to_poly(q).unwrap();
            prop_assert!(poly.nonnegative_coefficients() && poly.is_polynomial());
        }

        #[test]
        fn coset_count_is_multinomial(parts in prop::collection::vec(1u32..3, 0..4)) {
            let alpha = Composition::new(parts);
            let count = coset_reps(&alpha).unwrap().count();
            prop_assert_eq!(BigInt::from(count), gaussian_multinomial(&alpha).eval_one());
        }
    }

    #[test]
    fn limits_recover_gaussian_multinomials_and_ribbons() {
        for q in [2, 3] {
            for n in 0..=5 {
                for alpha in Composition::all_of(n) {
                    assert!(perm_limits_check(&alpha, q).unwrap().holds(), "{alpha} q={q}");
                }
            }
        }
        assert!(perm_limits_check(&c(&[2, 0, 1]), 2).is_err());
    }
}
