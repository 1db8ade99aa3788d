//! The objects `compute` and `table` know how to build.

use clap::ValueEnum;

use super::params::Params;
use super::CliError;
use crate::boxes::{box_sum, compatible_sum};
use crate::ffield::subspace_sum;
use crate::macschur::{dual_jacobi_trudi_spec, ez, hz, jacobi_trudi_spec, tableau_sum, SkewShape};
use crate::permstat::{perm_weight, ribbon_qt, Permutation, RibbonRoute};
use crate::qtnum::{binomial, factorial, multinomial, Composition};
use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// `n!_{q,t}`; parameters `n`.
    Factorial,
    /// `[n choose k]_{q,t}`; parameters `n k`.
    Binomial,
    /// `[n; alpha]_{q,t}`; parameters `alpha` (e.g. `alpha=1,2,1`).
    Multinomial,
    /// Sum of partition weights over the `k x (n-k)` box; parameters `n k`.
    BoxSum,
    /// Sum over q-compatible multiplicity vectors; parameters `n k`.
    CompatibleSum,
    /// Sum of `t^{s(U)}` over `k`-subspaces of `F_q^n` (`q` prime); parameters `n k`.
    SubspaceSum,
    /// Schur specialization by Jacobi–Trudi; parameters `shape` and `vars` (or `k = vars - 1`).
    Schur,
    /// `HZ_r(1, t, ..., t^k)`; parameters `r k`.
    Hz,
    /// `EZ_r(1, t, ..., t^{n-1})`; parameters `r n`.
    Ez,
    /// Jacobi–Trudi determinant; parameters `shape` and `vars` or `k`.
    Jt,
    /// Dual Jacobi–Trudi determinant; parameters `shape` and `vars` or `k`.
    DualJt,
    /// Sum over reverse column-strict tableaux; parameters `shape` and `vars` or `k`.
    TableauSum,
    /// `r_alpha(q, t)`; parameters `alpha` and optional `route`.
    Ribbon,
    /// `wt(w; q, t)`; parameter `w` in one-line notation.
    PermWeight,
}

impl Object {
    /// Parameters each object accepts.
    fn keys(self) -> &'static [&'static str] {
        match self {
            Object::Factorial => &["n"],
            Object::Binomial | Object::BoxSum | Object::CompatibleSum | Object::SubspaceSum => &["n", "k"],
            Object::Multinomial => &["alpha"],
            Object::Schur | Object::Jt | Object::DualJt | Object::TableauSum => &["shape", "vars", "k"],
            Object::Hz => &["r", "k"],
            Object::Ez => &["r", "n"],
            Object::Ribbon => &["alpha", "route"],
            Object::PermWeight => &["w"],
        }
    }

    /// Table grids may give `n` instead of `alpha` (all compositions of `n`) or
    /// of `w` (all permutations of `n`).
    pub fn expand_point(self, point: Params) -> Result<Vec<Params>, CliError> {
        let n = match self {
            Object::Multinomial | Object::Ribbon if !point.has("alpha") && point.has("n") => point.u32("n")?,
            Object::PermWeight if !point.has("w") && point.has("n") => point.u32("n")?,
            _ => return Ok(vec![point]),
        };
        let values: Vec<String> = match self {
            Object::PermWeight => Permutation::all(n)
                .map(|w| w.one_line().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                .collect(),
            _ => Composition::all_of(n)
                .iter()
                .map(|a| a.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                .collect(),
        };
        let key = if self == Object::PermWeight { "w" } else { "alpha" };
        Ok(values
            .into_iter()
            .map(|v| {
                let mut pairs = point.pairs().to_vec();
                pairs.push((key.to_string(), v));
                Params::from_pairs(pairs)
            })
            .collect())
    }

    pub fn compute(self, params: &Params, q: u64) -> Result<TPoly, CliError> {
        let mut allowed = self.keys().to_vec();
        // expanded table points keep their `n`
        if matches!(self, Object::Multinomial | Object::Ribbon | Object::PermWeight) {
            allowed.push("n");
        }
        params.only(&allowed)?;
        let poly = match self {
            Object::Factorial => factorial(params.u32("n")?, q)?,
            Object::Binomial => binomial(params.u32("n")?, params.u32("k")?, q)?,
            Object::Multinomial => multinomial(&composition(params)?, q)?,
            Object::BoxSum => box_sum(params.u32("n")?, nk(params)?, q)?,
            Object::CompatibleSum => compatible_sum(params.u32("n")?, nk(params)?, q)?,
            Object::SubspaceSum => subspace_sum(params.u32("n")?, nk(params)?, q)?,
            Object::Schur | Object::Jt => jacobi_trudi_spec(&shape(params)?, top_power(params)?, q)?,
            Object::DualJt => dual_jacobi_trudi_spec(&shape(params)?, top_power(params)?, q)?,
            Object::TableauSum => tableau_sum(&shape(params)?, top_power(params)?, q)?,
            Object::Hz => hz(params.i64("r")?, params.u32("k")?, q)?,
            Object::Ez => ez(params.i64("r")?, params.u32("n")?, q)?,
            Object::Ribbon => {
                let route = match params.get("route") {
                    Some(r) => r.parse::<RibbonRoute>()?,
                    None => RibbonRoute::DescentSum,
                };
                ribbon_qt(&composition(params)?, q, route)?
            }
            Object::PermWeight => {
                let w: Permutation = params.require("w")?.parse()?;
                perm_weight(&w)?.to_poly(q)?
            }
        };
        Ok(poly)
    }
}

fn nk(params: &Params) -> Result<u32, CliError> {
    let (n, k) = (params.u32("n")?, params.u32("k")?);
    if k > n {
        return Err(CliError::Usage(format!("k={k} exceeds n={n}")));
    }
    Ok(k)
}

fn composition(params: &Params) -> Result<Composition, CliError> {
    Ok(params.require("alpha")?.parse()?)
}

fn shape(params: &Params) -> Result<SkewShape, CliError> {
    Ok(params.require("shape")?.parse()?)
}

/// `k`, the top power of `(1, t, ..., t^k)`: given directly or as `vars = k + 1`.
fn top_power(params: &Params) -> Result<u32, CliError> {
    match (params.get("vars"), params.get("k")) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either vars or k, not both".into())),
        (Some(_), None) => {
            let vars = params.u32("vars")?;
            vars.checked_sub(1)
                .ok_or_else(|| CliError::Usage("vars must be at least 1".into()))
        }
        (None, Some(_)) => params.u32("k"),
        (None, None) => Err(CliError::Usage("missing parameter \"vars\" (or \"k\")".into())),
    }
}
