//! The joint generating function `f_d(t, z)` and its partial fractions in
//! `t` after the substitution `t ↦ t z^{d*}`.
//!
//! The limit in the coefficient formula is removable: the singular factor is
//! cancelled exactly, the remainder is differentiated in `t`, and `t` is then
//! replaced by the monomial `z^{-i}`.

use std::collections::BTreeMap;

use crate::algebra::{rational, BinomialFactor, FactoredRational, Monomial, VarSet};
use crate::degrees::DegreeList;
use crate::error::{Error, Result};
use crate::qseries::{factorial, q_pochhammer_factors};

/// Variables of `f_d`: `t` (degree) first, then `z` (weight).
pub fn tz_vars() -> VarSet {
    VarSet::new(["t", "z"]).expect("distinct names")
}

/// `f_d(t, z) = 1 / ∏_k (t z^{-d_k}; z^2)_{d_k+1}` over `(t, z)`.
pub fn joint_generating_function(d: &DegreeList) -> Result<FactoredRational> {
    let vars = tz_vars();
    let factors = d.degrees().iter().flat_map(|&dk| {
        q_pochhammer_factors(
            &Monomial::new(vec![1, -(dk as i32)]),
            &Monomial::new(vec![0, 2]),
            dk + 1,
        )
    });
    FactoredRational::reciprocal_of(&vars, factors)
}

/// `f_d(t z^{d*}, z)`; every factor is `(1 - t z^i)` with `0 <= i <= 2 d*`.
pub fn specialized_generating_function(d: &DegreeList) -> Result<FactoredRational> {
    let f = joint_generating_function(d)?;
    f.substitute(0, &Monomial::new(vec![1, d.max_degree() as i32]))
}

/// Multiplicities `β_0, …, β_{2d*}` of the factors `(1 - t z^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaProfile(Vec<u32>);

impl BetaProfile {
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `(i, β_i)` for the nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| (i, b))
    }
}

pub fn beta_exponents(d: &DegreeList) -> Result<BetaProfile> {
    let f = specialized_generating_function(d)?;
    let top = 2 * d.max_degree() as usize;
    let mut betas = vec![0u32; top + 1];
    if !f.numerator().is_one() {
        return Err(Error::Invariant("f_d(t z^d*, z) has numerator 1".into()));
    }
    for BinomialFactor {
        monomial,
        multiplicity,
    } in f.factors()
    {
        let i = monomial.exp(1);
        if monomial.exp(0) != 1 || i < 0 || i as usize > top {
            return Err(Error::Invariant(format!(
                "unexpected factor (1 - {:?}) in f_d(t z^d*, z)",
                monomial.exps()
            )));
        }
        betas[i as usize] += multiplicity;
    }
    Ok(BetaProfile(betas))
}

/// Coefficients `α_1, …, α_μ` of the principal part
/// `Σ_k α_k / (1 - c x)^k` of `h / (1 - c x)^μ` at `x = 1/c`, where `x` is
/// variable `var` and `h` is regular there.
///
/// `α_k = (-1)^{μ-k} / ((μ-k)! c^{μ-k}) · ∂_x^{μ-k} h |_{x = 1/c}`. The
/// results no longer involve `x` but keep it in their variable set.
pub fn principal_coefficients(
    h: &FactoredRational,
    var: usize,
    c: &Monomial,
    mu: u32,
) -> Result<Vec<FactoredRational>> {
    if c.exp(var) != 0 {
        return Err(Error::Invariant(
            "pole monomial must not involve the variable".into(),
        ));
    }
    let at_pole = c.inv();
    let mut out = vec![FactoredRational::zero(h.vars()); mu as usize];
    let mut deriv = h.clone();
    for j in 0..mu {
        let k = mu - j;
        let value = deriv.substitute(var, &at_pole)?;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let scale = rational(sign) / factorial(j);
        out[k as usize - 1] = value
            .mul_monomial(&c.inv().pow(j as i32))
            .scale(&scale)
            .normalize();
        if j + 1 < mu {
            deriv = deriv.diff(var, 1);
        }
    }
    Ok(out)
}

/// `h = f · (1 - m)^{μ_m}`, removing the factor entirely.
pub(crate) fn without_factor(f: &FactoredRational, m: &Monomial) -> Result<FactoredRational> {
    FactoredRational::from_parts(
        f.numerator().clone(),
        f.factors().filter(|b| &b.monomial != m),
    )
}

fn pole_monomial(i: usize) -> Monomial {
    Monomial::new(vec![0, i as i32])
}

/// `A_{i,k}(z)` as a function over the single variable `z`.
pub fn pf_coefficient(d: &DegreeList, i: usize, k: u32) -> Result<FactoredRational> {
    let betas = beta_exponents(d)?;
    let f = specialized_generating_function(d)?;
    let b = betas.get(i);
    if k < 1 || k > b {
        return Err(Error::OutOfRange(format!(
            "A_{{{i},{k}}} requires 1 <= k <= β_{i} = {b}"
        )));
    }
    let coeffs = coefficients_at(&f, i, b)?;
    Ok(coeffs[k as usize - 1].clone())
}

fn coefficients_at(f: &FactoredRational, i: usize, b: u32) -> Result<Vec<FactoredRational>> {
    let m = Monomial::new(vec![1, i as i32]);
    let h = without_factor(f, &m)?;
    principal_coefficients(&h, 0, &pole_monomial(i), b)?
        .into_iter()
        .map(|a| a.drop_var(0))
        .collect()
}

/// All `A_{i,k}` for one degree list.
#[derive(Clone, Debug)]
pub struct PartialFractionTable {
    pub betas: BetaProfile,
    pub coefficients: BTreeMap<(usize, u32), FactoredRational>,
}

impl PartialFractionTable {
    pub fn new(d: &DegreeList) -> Result<Self> {
        let betas = beta_exponents(d)?;
        let f = specialized_generating_function(d)?;
        let mut coefficients = BTreeMap::new();
        for (i, b) in betas.nonzero() {
            for (k, a) in coefficients_at(&f, i, b)?.into_iter().enumerate() {
                coefficients.insert((i, k as u32 + 1), a);
            }
        }
        Ok(PartialFractionTable {
            betas,
            coefficients,
        })
    }

    pub fn get(&self, i: usize, k: u32) -> Option<&FactoredRational> {
        self.coefficients.get(&(i, k))
    }

    /// `Σ A_{i,k}(z) / (1 - t z^i)^k` over `(t, z)`.
    pub fn recombine(&self) -> Result<FactoredRational> {
        let vars = tz_vars();
        let terms = self
            .coefficients
            .iter()
            .map(|(&(i, k), a)| {
                a.embed(&vars)?
                    .div_factor(&Monomial::new(vec![1, i as i32]), k)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FactoredRational::sum(&vars, terms.iter()))
    }
}
