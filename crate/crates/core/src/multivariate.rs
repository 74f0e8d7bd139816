//! Multigraded series of joint covariants and invariants.
//!
//! `f_d(z_1,…,z_n, x) = 1 / ∏_k ∏_{j=0}^{d_k} (1 - z_k x^{d_k - 2j})` is the
//! character of the coefficient space. Weyl's integration formula for SL2
//! gives
//!
//! ```text
//! P(C) = Ω≥0 (1 - (tλ)^{-2}) f_d(z, tλ)
//! P(I) = Ω=0 (1 - λ^{-2}) f_d(z, λ)
//! ```
//!
//! The substitution `z_k → z_k (tλ)^{d_k}`, `t → 1/(tλ)` is available as
//! [`Variant::Substituted`]; it leaves no negative powers of `λ` and does not
//! reproduce direct counts.

use crate::algebra::{rational, BinomialFactor, FactoredRational, Monomial, MultiPoly, VarSet};
use crate::degrees::DegreeList;
use crate::error::Result;
use crate::omega::{omega_nonneg, omega_zero, OmegaExpr};

const LAMBDA: &str = "lambda";

/// Which Omega integrand to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Variant {
    /// Weyl-measure integrand; matches direct dimension counts.
    #[default]
    Weyl,
    /// `f_d(z_k (tλ)^{d_k}, 1/(tλ))`.
    Substituted,
}

/// `z1, …, zn`.
pub fn z_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("z{k}")).collect()
}

/// `z1, …, zn, t`.
pub fn multivar_vars(n: usize) -> VarSet {
    VarSet::new(z_names(n).into_iter().chain(["t".to_string()])).expect("distinct names")
}

/// `z1, …, zn`.
pub fn multivar_invariant_vars(n: usize) -> VarSet {
    VarSet::new(z_names(n)).expect("distinct names")
}

fn block_factors(d: &DegreeList, width: usize, x: &[usize]) -> Vec<BinomialFactor> {
    let mut out = Vec::new();
    for (k, &dk) in d.degrees().iter().enumerate() {
        for j in 0..=dk {
            let e = dk as i32 - 2 * j as i32;
            let mut exps = vec![0; width];
            exps[k] = 1;
            for &xi in x {
                exps[xi] = e;
            }
            out.push(BinomialFactor::new(Monomial::new(exps), 1));
        }
    }
    out
}

/// `f_d(z_1,…,z_n, t)` over `(z1,…,zn,t)`.
pub fn multivar_generating_function(d: &DegreeList) -> Result<FactoredRational> {
    let n = d.len();
    let vars = multivar_vars(n);
    FactoredRational::reciprocal_of(&vars, block_factors(d, n + 1, &[n]))
}

fn weyl_weight(vars: &VarSet, x: &[usize]) -> MultiPoly {
    let mut low = vec![0; vars.len()];
    for &xi in x {
        low[xi] = -2;
    }
    MultiPoly::from_terms(
        vars,
        [
            (Monomial::one(vars.len()), rational(1)),
            (Monomial::new(low), rational(-1)),
        ],
    )
    .expect("two terms")
}

/// The integrand of Ω≥0 for covariants, over `(z1,…,zn,t,lambda)`.
pub fn covariant_integrand(d: &DegreeList, variant: Variant) -> Result<FactoredRational> {
    let n = d.len();
    let vars = multivar_vars(n).with(LAMBDA)?;
    let (t, l) = (n, n + 1);
    match variant {
        Variant::Weyl => FactoredRational::new(
            weyl_weight(&vars, &[t, l]),
            block_factors(d, n + 2, &[t, l]),
        ),
        Variant::Substituted => substituted(d, &vars),
    }
}

/// The integrand of Ω=0 for invariants.
pub fn invariant_integrand(d: &DegreeList, variant: Variant) -> Result<FactoredRational> {
    let n = d.len();
    match variant {
        Variant::Weyl => {
            let vars = multivar_invariant_vars(n).with(LAMBDA)?;
            FactoredRational::new(weyl_weight(&vars, &[n]), block_factors(d, n + 1, &[n]))
        }
        Variant::Substituted => substituted(d, &multivar_vars(n).with(LAMBDA)?),
    }
}

/// `f_d(z_k (tλ)^{d_k}, 1/(tλ))`: every factor becomes `1 - z_k (tλ)^{2j}`.
fn substituted(d: &DegreeList, vars: &VarSet) -> Result<FactoredRational> {
    let n = d.len();
    let f = multivar_generating_function(d)?;
    let images: Vec<Monomial> = (0..=n)
        .map(|i| {
            let mut e = vec![0; n + 2];
            if i < n {
                e[i] = 1;
                e[n] = d.degrees()[i] as i32;
                e[n + 1] = d.degrees()[i] as i32;
            } else {
                e[n] = -1;
                e[n + 1] = -1;
            }
            Monomial::new(e)
        })
        .collect();
    f.map_variables(vars, &images)
}

/// Joint covariants by multidegree and order, over `(z1,…,zn,t)`.
pub fn multivar_covariants(d: &DegreeList) -> Result<FactoredRational> {
    multivar_covariants_with(d, Variant::default())
}

pub fn multivar_covariants_with(d: &DegreeList, variant: Variant) -> Result<FactoredRational> {
    let g = covariant_integrand(d, variant)?;
    omega_nonneg(&OmegaExpr::new(&g, LAMBDA)?)
}

/// Joint invariants by multidegree, over `(z1,…,zn)`.
pub fn multivar_invariants(d: &DegreeList) -> Result<FactoredRational> {
    multivar_invariants_with(d, Variant::default())
}

pub fn multivar_invariants_with(d: &DegreeList, variant: Variant) -> Result<FactoredRational> {
    let g = invariant_integrand(d, variant)?;
    let out = omega_zero(&OmegaExpr::new(&g, LAMBDA)?)?;
    match variant {
        Variant::Weyl => Ok(out),
        Variant::Substituted => out.drop_var(d.len()),
    }
}

/// `z_k → z` (and `t` kept) on a series over `(z1,…,zn,t)`, giving `(z,t)`.
pub fn collapse_degrees(f: &FactoredRational) -> Result<FactoredRational> {
    let n = f.vars().len() - 1;
    let target = VarSet::new(["z", "t"])?;
    let images: Vec<Monomial> = (0..=n)
        .map(|i| Monomial::new(if i < n { vec![1, 0] } else { vec![0, 1] }))
        .collect();
    f.map_variables(&target, &images)
}

/// `z_k → z` on a series over `(z1,…,zn)`.
pub fn collapse_invariant_degrees(f: &FactoredRational) -> Result<FactoredRational> {
    let n = f.vars().len();
    let images = vec![Monomial::new(vec![1]); n];
    f.map_variables(&VarSet::single("z"), &images)
}
