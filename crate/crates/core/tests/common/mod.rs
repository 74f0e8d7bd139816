#![allow(dead_code)]

use poincare::{
    BinomialFactor, DegreeList, FactoredRational, Monomial, MultiPoly, Rational, VarSet,
};

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn vars(names: &[&str]) -> VarSet {
    VarSet::new(names.iter().copied()).unwrap()
}

pub fn deg(d: &[u32]) -> DegreeList {
    DegreeList::new(d.to_vec()).unwrap()
}

pub fn poly(vars: &VarSet, terms: &[(i64, &[i32])]) -> MultiPoly {
    MultiPoly::from_terms(
        vars,
        terms
            .iter()
            .map(|(c, e)| (Monomial::new(e.to_vec()), r(*c))),
    )
    .unwrap()
}

/// Univariate polynomial in `z` from ascending coefficients.
pub fn zpoly(coeffs: &[i64]) -> MultiPoly {
    let v = VarSet::single("z");
    MultiPoly::from_terms(
        &v,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::new(vec![i as i32]), r(c))),
    )
    .unwrap()
}

pub fn factored(num: MultiPoly, den: &[(&[i32], u32)]) -> FactoredRational {
    FactoredRational::new(
        num,
        den.iter()
            .map(|(e, mu)| BinomialFactor::new(Monomial::new(e.to_vec()), *mu)),
    )
    .unwrap()
}

pub fn recip(vars: &VarSet, den: &[(&[i32], u32)]) -> FactoredRational {
    factored(MultiPoly::one(vars), den)
}

/// `f == num / den` with `den` an arbitrary polynomial.
pub fn equals_quotient(f: &FactoredRational, num: &MultiPoly, den: &MultiPoly) -> bool {
    let lhs = f.numerator() * den;
    let rhs = num * &f.expanded_denominator();
    lhs == rhs
}
