//! Process-wide bound on exponent size.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::Signed;

use super::Exp;
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_GUARD: u64 = 1_000_000;

static GUARD: AtomicU64 = AtomicU64::new(DEFAULT_DEGREE_GUARD);

pub fn degree_guard() -> u64 {
    GUARD.load(Ordering::Relaxed)
}

/// Sets the largest absolute exponent any guarded operation may produce.
/// Intended to be called once at startup.
pub fn set_degree_guard(limit: u64) {
    GUARD.store(limit, Ordering::Relaxed);
}

pub fn check_exponent(e: &Exp) -> Result<()> {
    let limit = degree_guard();
    let mag = e.abs().ceil().to_integer();
    if mag as u64 > limit {
        return Err(Error::DegreeGuard {
            exponent: e.to_string(),
            limit,
        });
    }
    Ok(())
}

/// `q^steps` as an exact rational, guard-checked.
pub fn pow_q(q: u64, steps: i32) -> Result<Exp> {
    let limit = degree_guard();
    let breach = || Error::DegreeGuard {
        exponent: format!("{q}^{steps}"),
        limit,
    };
    let mag = (q as i64).checked_pow(steps.unsigned_abs()).ok_or_else(breach)?;
    if mag as u64 > limit {
        return Err(breach());
    }
    Ok(if steps >= 0 {
        Exp::from_integer(mag)
    } else {
        Exp::new(1, mag)
    })
}
