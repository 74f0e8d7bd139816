//! Covariants of a single form graded by degree and order.

use crate::algebra::{rational, FactoredRational, Monomial, MultiPoly, VarSet};
use crate::error::{Error, Result};
use crate::qseries::{psi_section, q_pochhammer_factors};
use crate::univariate::z_vars;

/// Variables `(z, t)`: `z` tracks degree, `t` tracks order.
pub fn zt_vars() -> VarSet {
    VarSet::new(["z", "t"]).expect("distinct names")
}

/// `Σ_{0<=k<d/2} ψ_{d-2k}(g_k(t)) / (1 - z t^{d-2k})` with
/// `g_k = (-1)^k t^{k(k+1)} (1 - t^2) / ((t^2;t^2)_k (t^2;t^2)_{d-k})`.
pub fn bivariate_covariants(d: u32) -> Result<FactoredRational> {
    if d < 1 {
        return Err(Error::InvalidDegrees("degree must be at least 1".into()));
    }
    let tv = VarSet::single("t");
    let target = zt_vars();
    let t = |e: i32| Monomial::new(vec![e]);
    let mut terms = Vec::new();
    for k in (0..d).take_while(|k| 2 * k < d) {
        let n = d - 2 * k;
        assert!(n >= 1, "ψ_0 is never needed");
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let num = MultiPoly::from_terms(
            &tv,
            [
                (t((k * (k + 1)) as i32), rational(sign)),
                (t((k * (k + 1) + 2) as i32), rational(-sign)),
            ],
        )?;
        let factors = q_pochhammer_factors(&t(2), &t(2), k)
            .into_iter()
            .chain(q_pochhammer_factors(&t(2), &t(2), d - k));
        let g = FactoredRational::new(num, factors)?;
        let section = psi_section(&g, n, &target)?;
        terms.push(section.div_factor(&Monomial::new(vec![1, n as i32]), 1)?);
    }
    Ok(FactoredRational::sum(&target, terms.iter()))
}

/// Specialization `t = 0`, over `z`.
pub fn at_t_zero(f: &FactoredRational) -> Result<FactoredRational> {
    f.substitute_zero(1)?.drop_var(1)
}

/// Specialization `t = 1`, over `z`.
pub fn at_t_one(f: &FactoredRational) -> Result<FactoredRational> {
    f.map_variables(&z_vars(), &[Monomial::new(vec![1]), Monomial::new(vec![0])])
}
