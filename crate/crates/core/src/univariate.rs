//! Poincaré series graded by degree alone.
//!
//! A single form uses Springer's sum of multisections. A system of forms
//! uses the partial fractions of `f_d(t z^{d*}, z)`:
//!
//! ```text
//! P = Σ_{i=0}^{d*} Σ_{k=1}^{β_i} 1/(k-1)! · D^{k-1}( z^{k-1} φ_{d*-i}(w(z) A_{i,k}(z)) )
//! ```
//!
//! with `w = 1 - z^2` for invariants and `w = 1 + z` for covariants. The
//! multisection picks the coefficients of `z^{m(d*-i)}` that carry weight
//! zero (or zero and one) in degree `m`. The derivative turns `Σ a_m z^m`
//! into `Σ C(m+k-1, k-1) a_m z^m`.

use crate::algebra::{rational, BinomialFactor, FactoredRational, Monomial, MultiPoly, VarSet};
use crate::degrees::DegreeList;
use crate::error::{Error, Result};
use crate::partial_fractions::PartialFractionTable;
use crate::qseries::{
    binomial, factorial, narayana_polynomial, phi_section, q_pochhammer_factors, shifted_factorial,
    PhiZero,
};

/// Which algebra a series counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Invariants,
    Covariants,
}

/// Section index used inside the joint formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SectionIndex {
    /// `φ_{d*-i}`, which agrees with direct dimension counts.
    #[default]
    ByPole,
    /// `φ_{d*-k}` as it appears in print; kept for comparison only.
    ByMultiplicity,
}

/// Switches for [`joint_series_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct JointOptions {
    pub section: SectionIndex,
    pub phi_zero: PhiZero,
}

/// The degree variable `z`.
pub fn z_vars() -> VarSet {
    VarSet::single("z")
}

fn zm(e: i32) -> Monomial {
    Monomial::new(vec![e])
}

fn zpoly(terms: &[(i32, i64)]) -> MultiPoly {
    MultiPoly::from_terms(&z_vars(), terms.iter().map(|&(e, c)| (zm(e), rational(c))))
        .expect("univariate terms")
}

/// `1 - z^2` or `1 + z`.
fn weight_multiplier(kind: SeriesKind) -> MultiPoly {
    match kind {
        SeriesKind::Invariants => zpoly(&[(0, 1), (2, -1)]),
        SeriesKind::Covariants => zpoly(&[(0, 1), (1, 1)]),
    }
}

/// `1/(k-1)! · D^{k-1}(z^{k-1} g)`.
fn binomial_lift(g: &FactoredRational, k: u32) -> FactoredRational {
    if k <= 1 {
        return g.clone();
    }
    g.mul_monomial(&zm(k as i32 - 1))
        .diff(0, k - 1)
        .scale(&(rational(1) / factorial(k - 1)))
}

fn check_degree(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::InvalidDegrees("degree must be at least 1".into()));
    }
    Ok(())
}

/// Springer's formula for a single form of degree `d`.
pub fn springer(d: u32, kind: SeriesKind) -> Result<FactoredRational> {
    check_degree(d)?;
    let vars = z_vars();
    let z2 = zm(2);
    let mut terms = Vec::new();
    for k in (0..d).take_while(|k| 2 * k < d) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let num = weight_multiplier(kind)
            .mul_monomial(&zm((k * (k + 1)) as i32))
            .scale(&rational(sign));
        let factors = q_pochhammer_factors(&z2, &z2, k)
            .into_iter()
            .chain(q_pochhammer_factors(&z2, &z2, d - k));
        let g = FactoredRational::new(num, factors)?;
        terms.push(phi_section(&g, d - 2 * k, PhiZero::default())?);
    }
    Ok(FactoredRational::sum(&vars, terms.iter()))
}

pub fn springer_invariants(d: u32) -> Result<FactoredRational> {
    springer(d, SeriesKind::Invariants)
}

pub fn springer_covariants(d: u32) -> Result<FactoredRational> {
    springer(d, SeriesKind::Covariants)
}

/// Joint invariants or covariants of several forms.
pub fn joint_series(d: &DegreeList, kind: SeriesKind) -> Result<FactoredRational> {
    joint_series_with(d, kind, JointOptions::default())
}

pub fn joint_series_with(
    d: &DegreeList,
    kind: SeriesKind,
    opts: JointOptions,
) -> Result<FactoredRational> {
    let vars = z_vars();
    let table = PartialFractionTable::new(d)?;
    let dstar = d.max_degree() as i64;
    let w = weight_multiplier(kind);
    let mut terms = Vec::new();
    for (&(i, k), a) in &table.coefficients {
        let g = a.mul_poly(&w);
        if i as i64 > dstar {
            // These poles only contribute at exponents `m(d* - i) <= 0`;
            // the partial fraction term must vanish there.
            if opts.section == SectionIndex::ByPole
                && g.numerator().min_exponent(0).is_some_and(|e| e <= 0)
            {
                return Err(Error::Invariant(format!(
                    "A_{{{i},{k}}} term has a nonpositive-order coefficient beyond d*"
                )));
            }
            continue;
        }
        let index = match opts.section {
            SectionIndex::ByPole => dstar - i as i64,
            SectionIndex::ByMultiplicity => dstar - k as i64,
        };
        let index = u32::try_from(index).map_err(|_| Error::NegativeSection(index))?;
        let section = phi_section(&g, index, opts.phi_zero)?;
        terms.push(binomial_lift(&section, k));
    }
    Ok(FactoredRational::sum(&vars, terms.iter()))
}

/// Kernel of the Weitzenböck derivation with Jordan blocks of sizes
/// `d_k + 1`; degree-preserving isomorphic to the joint covariants.
pub fn kernel_series(jordan: &DegreeList) -> Result<FactoredRational> {
    joint_series(jordan, SeriesKind::Covariants)
}

fn recip_one_minus_z2(power: u32) -> Vec<BinomialFactor> {
    vec![BinomialFactor::new(zm(2), power)]
}

/// `N_{n-2}(z^2) / (1 - z^2)^{2n-3}` for `n` linear forms (`1` when `n = 1`).
pub fn linear_invariants_narayana(n: u32) -> Result<FactoredRational> {
    if n < 2 {
        return Ok(FactoredRational::one(&z_vars()));
    }
    let vars = z_vars();
    let nar = narayana_polynomial(&vars, n - 2).map_monomials(&vars, &[zm(2)]);
    FactoredRational::new(nar, recip_one_minus_z2(2 * n - 3))
}

/// Derivative-sum form for `n` linear forms.
pub fn linear_derivative_sum(n: u32, kind: SeriesKind) -> Result<FactoredRational> {
    if n < 1 {
        return Err(Error::InvalidDegrees("n must be at least 1".into()));
    }
    let vars = z_vars();
    let nn = n as i64;
    let mut terms = Vec::new();
    for k in 1..=n {
        let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
        let c = rational(sign) * shifted_factorial(nn, n - k) / factorial(n - k);
        let e = (2 * n - k - 1) as i32;
        let inner = match kind {
            SeriesKind::Invariants => {
                FactoredRational::new(zpoly(&[(e, 1)]), recip_one_minus_z2(2 * n - k - 1))?
            }
            SeriesKind::Covariants => {
                FactoredRational::new(zpoly(&[(e, 1), (e + 1, 1)]), recip_one_minus_z2(2 * n - k))?
            }
        };
        let lifted = inner.diff(0, k - 1).scale(&(c / factorial(k - 1)));
        terms.push(lifted);
    }
    Ok(FactoredRational::sum(&vars, terms.iter()))
}

/// Closed forms for `n` linear forms: the Narayana form for invariants and
/// the derivative sum for covariants.
pub fn linear_closed(n: u32, kind: SeriesKind) -> Result<FactoredRational> {
    match kind {
        SeriesKind::Invariants => linear_invariants_narayana(n),
        SeriesKind::Covariants => linear_derivative_sum(n, kind),
    }
}

/// Derivative-sum form for `n` quadratic forms.
pub fn quadratic_derivative_sum(n: u32, kind: SeriesKind) -> Result<FactoredRational> {
    if n < 1 {
        return Err(Error::InvalidDegrees("n must be at least 1".into()));
    }
    let vars = z_vars();
    let nn = n as i64;
    let mut terms = Vec::new();
    for k in 1..=n {
        let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
        let outer = rational(sign) / (factorial(n - k) * factorial(k - 1));
        let mut inner = Vec::new();
        for i in 0..=(n - k) {
            let c = binomial((n - k) as i64, i as i64)
                * shifted_factorial(nn, i)
                * shifted_factorial(nn, n - k - i);
            let e = (2 * n - k - i - 1) as i32;
            let num = match kind {
                SeriesKind::Invariants => zpoly(&[(e, 1), (e + 1, -1)]),
                SeriesKind::Covariants => zpoly(&[(e, 1)]),
            };
            let f = FactoredRational::new(
                num.scale(&c),
                [
                    BinomialFactor::new(zm(1), n + i),
                    BinomialFactor::new(zm(2), 2 * n - k - i),
                ],
            )?;
            inner.push(f);
        }
        let inner = FactoredRational::sum(&vars, inner.iter());
        terms.push(inner.diff(0, k - 1).scale(&outer));
    }
    Ok(FactoredRational::sum(&vars, terms.iter()))
}

/// `Σ_i C(n-1,i)^2 z^{2i} / ((1-z)^n (1-z^2)^{2n-1})`.
pub fn quadratic_covariants_numerator_form(n: u32) -> Result<FactoredRational> {
    if n < 1 {
        return Err(Error::InvalidDegrees("n must be at least 1".into()));
    }
    let vars = z_vars();
    let num = MultiPoly::from_terms(
        &vars,
        (0..n).map(|i| {
            let c = binomial((n - 1) as i64, i as i64);
            (zm(2 * i as i32), &c * &c)
        }),
    )?;
    FactoredRational::new(
        num,
        [
            BinomialFactor::new(zm(1), n),
            BinomialFactor::new(zm(2), 2 * n - 1),
        ],
    )
}

/// Closed forms for `n` quadratic forms: the derivative sum for invariants
/// and the explicit numerator for covariants.
pub fn quadratic_closed(n: u32, kind: SeriesKind) -> Result<FactoredRational> {
    match kind {
        SeriesKind::Invariants => quadratic_derivative_sum(n, kind),
        SeriesKind::Covariants => quadratic_covariants_numerator_form(n),
    }
}
