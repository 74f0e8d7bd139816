//! q-shifted factorials and the section operators φ_n and ψ_n.
//!
//! Both sections act on factored rational functions by rebasing every
//! denominator factor `(1 - v^a)` to `(1 - v^{lcm(a,n)})`. The denominator
//! then only involves `v^n`, so the section acts on the numerator alone.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{
    rational, BinomialFactor, FactoredRational, Monomial, MultiPoly, Rational, VarSet,
};
use crate::error::{Error, Result};

/// Meaning of φ_0, which the multisection definition leaves open.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PhiZero {
    /// `φ_0(Σ a_i v^i) = a_0 · Σ v^i = a_0 / (1 - v)`.
    #[default]
    Geometric,
    /// `φ_0(Σ a_i v^i) = a_0`.
    Constant,
}

/// Factors of `(a; q)_n = (1 - a)(1 - a q) ⋯ (1 - a q^{n-1})`.
pub fn q_pochhammer_factors(a: &Monomial, q: &Monomial, n: u32) -> Vec<BinomialFactor> {
    (0..n as i32)
        .map(|j| BinomialFactor::new(a * &q.pow(j), 1))
        .collect()
}

/// `(a; q)_n` multiplied out.
pub fn q_pochhammer(vars: &VarSet, a: &Monomial, q: &Monomial, n: u32) -> MultiPoly {
    q_pochhammer_factors(a, q, n)
        .iter()
        .fold(MultiPoly::one(vars), |acc, f| {
            &acc * &MultiPoly::one_minus(vars, &f.monomial)
        })
}

/// `1 / (a; q)_n`, kept in factored form and not normalized.
pub fn reciprocal_q_pochhammer(
    vars: &VarSet,
    a: &Monomial,
    q: &Monomial,
    n: u32,
) -> Result<FactoredRational> {
    FactoredRational::from_parts(MultiPoly::one(vars), q_pochhammer_factors(a, q, n))
}

/// Rising product `(n)_m = n (n+1) ⋯ (n+m-1)`, with `(n)_0 = 1`.
pub fn shifted_factorial(n: i64, m: u32) -> Rational {
    (0..m as i64).fold(Rational::one(), |acc, j| acc * rational(n + j))
}

pub fn factorial(n: u32) -> Rational {
    shifted_factorial(1, n)
}

pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    shifted_factorial(n - k + 1, k as u32) / factorial(k as u32)
}

/// Univariate function with every factor rebased to an exponent divisible by
/// `n`. The numerator is returned expanded together with the rebased
/// exponents.
fn rebase(f: &FactoredRational, n: i32) -> Result<(MultiPoly, Vec<(i32, u32)>)> {
    let vars = f.vars();
    let f = f.normalize();
    if f.numerator().min_exponent(0).is_some_and(|e| e < 0) {
        return Err(Error::NegativeExponent(vars.name(0).to_string()));
    }
    let mut num = f.numerator().clone();
    let mut den = Vec::new();
    for BinomialFactor {
        monomial,
        multiplicity,
    } in f.factors()
    {
        let a = monomial.exp(0);
        let m = n / a.gcd(&n);
        let block = MultiPoly::from_terms(
            vars,
            (0..m).map(|j| (Monomial::new(vec![a * j]), Rational::one())),
        )?;
        num = &num * &block.pow(multiplicity);
        den.push((a * m, multiplicity));
    }
    Ok((num, den))
}

fn require_univariate(f: &FactoredRational) -> Result<()> {
    if f.vars().len() != 1 {
        return Err(Error::Arity {
            expected: 1,
            got: f.vars().len(),
        });
    }
    Ok(())
}

/// Multisection `φ_n(Σ a_i v^i) = Σ a_{in} v^i` of a univariate power
/// series given as a rational function.
pub fn phi_section(f: &FactoredRational, n: u32, zero: PhiZero) -> Result<FactoredRational> {
    require_univariate(f)?;
    let vars = f.vars().clone();
    if n == 0 {
        let f = f.normalize();
        if f.numerator().min_exponent(0).is_some_and(|e| e < 0) {
            return Err(Error::NegativeExponent(vars.name(0).to_string()));
        }
        let a0 = f.substitute_zero(0)?;
        let a0 = a0.numerator().as_constant().ok_or_else(|| {
            Error::Invariant("value at 0 of a univariate power series is constant".into())
        })?;
        let c = FactoredRational::constant(&vars, a0);
        return match zero {
            PhiZero::Constant => Ok(c),
            PhiZero::Geometric => c.div_factor(&Monomial::new(vec![1]), 1),
        };
    }
    let n = n as i32;
    let (num, den) = rebase(f, n)?;
    let kept = num
        .terms()
        .filter(|(m, _)| m.exp(0) % n == 0)
        .map(|(m, c)| (Monomial::new(vec![m.exp(0) / n]), c.clone()));
    let num = MultiPoly::from_terms(&vars, kept)?;
    FactoredRational::new(
        num,
        den.into_iter()
            .map(|(e, mu)| BinomialFactor::new(Monomial::new(vec![e / n]), mu)),
    )
}

/// Unique `(i, j)` with `m = n·i - j` and `0 <= j < n`.
pub fn psi_decomposition(m: i32, n: i32) -> (i32, i32) {
    let i = -(-m).div_euclid(n);
    (i, n * i - m)
}

/// The section `ψ_n(t^m) = z^i t^j` for `m = n·i - j`, `0 <= j < n`.
///
/// `f` is univariate in `t`; `target` holds the degree variable at index 0
/// and the order variable at index 1.
pub fn psi_section(f: &FactoredRational, n: u32, target: &VarSet) -> Result<FactoredRational> {
    require_univariate(f)?;
    if target.len() != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: target.len(),
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange("ψ_0 is undefined".into()));
    }
    let n = n as i32;
    let (num, den) = rebase(f, n)?;
    let mapped = num.terms().map(|(m, c)| {
        let (i, j) = psi_decomposition(m.exp(0), n);
        (Monomial::new(vec![i, j]), c.clone())
    });
    let num = MultiPoly::from_terms(target, mapped)?;
    FactoredRational::new(
        num,
        den.into_iter()
            .map(|(e, mu)| BinomialFactor::new(Monomial::new(vec![e / n, 0]), mu)),
    )
}

/// Narayana polynomial `N_n(v) = Σ_{k=1}^n (1/k) C(n-1,k-1) C(n,k-1) v^{k-1}`,
/// with `N_0 = 1`.
pub fn narayana_polynomial(vars: &VarSet, n: u32) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one(vars);
    }
    let n = n as i64;
    let terms = (1..=n).map(|k| {
        let c = binomial(n - 1, k - 1) * binomial(n, k - 1) / rational(k);
        (Monomial::new(vec![(k - 1) as i32]), c)
    });
    MultiPoly::from_terms(vars, terms).expect("univariate terms")
}
