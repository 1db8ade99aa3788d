//! Classical Gaussian binomials and multinomials in a single variable `t`,
//! built from the Pascal recurrence. These serve as independent oracles for
//! the `t -> 1` specialisation of the (q,t)-versions at integer `q`.

use super::Composition;
use crate::tpoly::{exp, TPoly};

/// `[n choose k]_t` via `[n;k] = [n-1;k-1] + t^k [n-1;k]`.
pub fn gaussian_binomial(n: u32, k: u32) -> TPoly {
    if k > n {
        return TPoly::zero();
    }
    let mut row = vec![TPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut entry = TPoly::zero();
            if j >= 1 {
                entry += &row[j as usize - 1];
            }
            if j < m {
                entry += &TPoly::t_pow(exp(j as i64)) * &row[j as usize];
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `[n; a_1, ..., a_l]_t = prod_s [n - s_{s-1}; a_s]_t`.
pub fn gaussian_multinomial(alpha: &Composition) -> TPoly {
    let n = alpha.n();
    let sums = alpha.partial_sums();
    alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(s, &a)| gaussian_binomial(n - sums[s], a))
        .fold(TPoly::one(), |acc, b| &acc * &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn known_values() {
        let g = gaussian_binomial(3, 2);
        assert_eq!(g, TPoly::from_terms([(exp(0), 1), (exp(1), 1), (exp(2), 1)]));
        assert_eq!(g.eval_at(&BigInt::from(2)).unwrap(), BigInt::from(7));
        assert_eq!(
            gaussian_binomial(4, 2).eval_at(&BigInt::from(2)).unwrap(),
            BigInt::from(35)
        );
        assert_eq!(gaussian_binomial(2, 5), TPoly::zero());
        let m = gaussian_multinomial(&Composition::new(vec![1, 1, 1]));
        assert_eq!(m.eval_one(), BigInt::from(6));
    }
}
