use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::image_of;
use super::{Monomial, MultiPoly, Rational, VarSet};
use crate::error::{Error, Result};

/// A denominator factor `(1 - monomial)^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactor {
    pub monomial: Monomial,
    pub multiplicity: u32,
}

impl BinomialFactor {
    pub fn new(monomial: Monomial, multiplicity: u32) -> Self {
        BinomialFactor {
            monomial,
            multiplicity,
        }
    }
}

/// Rational function `numerator / ∏ (1 - m_i)^{μ_i}`.
///
/// The denominator is never expanded during arithmetic. After
/// [`normalize`](Self::normalize) every factor monomial is lexicographically
/// positive with respect to the variable order, factors are merged, and no
/// factor divides the numerator.
///
/// `PartialEq` is structural. Use [`equals`](Self::equals) for equality of
/// the represented functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    num: MultiPoly,
    den: BTreeMap<Monomial, u32>,
}

impl FactoredRational {
    /// Builds and normalizes `num / ∏ factors`.
    pub fn new<I>(num: MultiPoly, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = BinomialFactor>,
    {
        Ok(Self::from_parts(num, factors)?.normalize())
    }

    /// Builds `num / ∏ factors` exactly as given, without normalization.
    pub fn from_parts<I>(num: MultiPoly, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = BinomialFactor>,
    {
        let n = num.vars().len();
        let mut den = BTreeMap::new();
        for f in factors {
            if f.monomial.len() != n {
                return Err(Error::Arity {
                    expected: n,
                    got: f.monomial.len(),
                });
            }
            if f.monomial.is_one() {
                return Err(Error::ZeroFactor);
            }
            if f.multiplicity > 0 {
                *den.entry(f.monomial).or_insert(0) += f.multiplicity;
            }
        }
        Ok(FactoredRational { num, den })
    }

    /// `1 / ∏ (1 - m)^μ`.
    pub fn reciprocal_of<I>(vars: &VarSet, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = BinomialFactor>,
    {
        Self::new(MultiPoly::one(vars), factors)
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        FactoredRational {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_poly(MultiPoly::one(vars))
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn factors(&self) -> impl Iterator<Item = BinomialFactor> + '_ {
        self.den
            .iter()
            .map(|(m, &mu)| BinomialFactor::new(m.clone(), mu))
    }

    pub fn factor_count(&self) -> usize {
        self.den.len()
    }

    pub fn multiplicity(&self, m: &Monomial) -> u32 {
        self.den.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The denominator multiplied out.
    pub fn expanded_denominator(&self) -> MultiPoly {
        expand_factors(self.vars(), self.den.iter().map(|(m, &mu)| (m, mu)))
    }

    /// Canonical form: orient, merge, cancel.
    pub fn normalize(&self) -> Self {
        let vars = self.vars().clone();
        let mut num = self.num.clone();
        let mut den: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, &mu) in &self.den {
            if m.is_lex_positive() {
                *den.entry(m.clone()).or_insert(0) += mu;
            } else {
                // 1/(1-m) = -m^{-1} / (1 - m^{-1})
                let inv = m.inv();
                let sign = if mu % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                num = num.mul_monomial(&inv.pow(mu as i32)).scale(&sign);
                *den.entry(inv).or_insert(0) += mu;
            }
        }
        if num.is_zero() {
            return Self::zero(&vars);
        }
        loop {
            let mut changed = false;
            let keys: Vec<Monomial> = den.keys().cloned().collect();
            for m in keys {
                let Some(mut mu) = den.get(&m).copied() else {
                    continue;
                };
                while mu > 0 {
                    match num.div_one_minus(&m) {
                        Some(q) => {
                            num = q;
                            mu -= 1;
                            changed = true;
                        }
                        None => break,
                    }
                }
                if mu > 0 {
                    if let Some((b, q)) = partial_cancel(&num, &m) {
                        num = q;
                        mu -= 1;
                        let u = primitive_root(&m);
                        *den.entry(u.pow(b)).or_insert(0) += 1;
                        changed = true;
                    }
                }
                if mu == 0 {
                    den.remove(&m);
                } else {
                    den.insert(m, mu);
                }
            }
            if !changed {
                break;
            }
        }
        FactoredRational { num, den }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        FactoredRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        FactoredRational {
            num: &self.num * p,
            den: self.den.clone(),
        }
        .normalize()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        FactoredRational {
            num: self.num.mul_monomial(m),
            den: self.den.clone(),
        }
    }

    /// Divides by `(1 - m)^mu`.
    pub fn div_factor(&self, m: &Monomial, mu: u32) -> Result<Self> {
        if m.is_one() {
            return Err(Error::ZeroFactor);
        }
        let mut den = self.den.clone();
        *den.entry(m.clone()).or_insert(0) += mu;
        Ok(FactoredRational {
            num: self.num.clone(),
            den,
        }
        .normalize())
    }

    /// Sum of many terms over one common factored denominator.
    pub fn sum<'a, I>(vars: &VarSet, items: I) -> Self
    where
        I: IntoIterator<Item = &'a FactoredRational>,
    {
        let items: Vec<&FactoredRational> = items.into_iter().filter(|f| !f.is_zero()).collect();
        let mut lcm: BTreeMap<Monomial, u32> = BTreeMap::new();
        for f in &items {
            assert!(f.vars() == vars, "sum over mismatched variable sets");
            for (m, &mu) in &f.den {
                let e = lcm.entry(m.clone()).or_insert(0);
                *e = (*e).max(mu);
            }
        }
        let mut num = MultiPoly::zero(vars);
        for f in items {
            let cofactor = expand_factors(
                vars,
                lcm.iter()
                    .map(|(m, &mu)| (m, mu - f.den.get(m).copied().unwrap_or(0))),
            );
            num = &num + &(&f.num * &cofactor);
        }
        FactoredRational { num, den: lcm }.normalize()
    }

    /// Iterated partial derivative; the quotient rule only raises factor
    /// multiplicities.
    pub fn diff(&self, var: usize, order: u32) -> Self {
        let mut f = self.clone();
        for _ in 0..order {
            f = f.diff_once(var);
            if f.is_zero() {
                break;
            }
        }
        f
    }

    fn diff_once(&self, var: usize) -> Self {
        let vars = self.vars();
        let moving: Vec<(&Monomial, u32)> = self
            .den
            .iter()
            .filter(|(m, _)| m.exp(var) != 0)
            .map(|(m, &mu)| (m, mu))
            .collect();
        let ones_minus: Vec<MultiPoly> = moving
            .iter()
            .map(|(m, _)| MultiPoly::one_minus(vars, m))
            .collect();
        let all = ones_minus
            .iter()
            .fold(MultiPoly::one(vars), |acc, p| &acc * p);
        // N' ∏(1-m) + N Σ μ m' ∏_{j≠i}(1-m_j)
        let mut num = &self.num.derivative(var) * &all;
        for (i, (m, mu)) in moving.iter().enumerate() {
            let dm = MultiPoly::monomial(
                vars,
                m.with_exp(var, m.exp(var) - 1),
                Rational::from_integer((m.exp(var) as i64 * *mu as i64).into()),
            );
            let others = ones_minus
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(dm, |acc, (_, p)| &acc * p);
            num = &num + &(&self.num * &others);
        }
        let mut den = self.den.clone();
        for (m, _) in moving {
            *den.get_mut(m).expect("factor present") += 1;
        }
        FactoredRational { num, den }.normalize()
    }

    /// Applies the monomial map sending variable `i` to `images[i]`, a Laurent
    /// monomial over `target`.
    pub fn map_variables(&self, target: &VarSet, images: &[Monomial]) -> Result<Self> {
        if images.len() != self.vars().len() {
            return Err(Error::Arity {
                expected: self.vars().len(),
                got: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|m| m.len() != target.len()) {
            return Err(Error::Arity {
                expected: target.len(),
                got: bad.len(),
            });
        }
        let num = self.num.map_monomials(target, images);
        let mut den = BTreeMap::new();
        for (m, &mu) in &self.den {
            let image = image_of(m, target.len(), images);
            if image.is_one() {
                return Err(Error::ZeroFactor);
            }
            *den.entry(image).or_insert(0) += mu;
        }
        Ok(FactoredRational { num, den }.normalize())
    }

    /// Replaces variable `var` by the Laurent monomial `replacement` over the
    /// same variable set.
    pub fn substitute(&self, var: usize, replacement: &Monomial) -> Result<Self> {
        let n = self.vars().len();
        let images: Vec<Monomial> = (0..n)
            .map(|i| {
                if i == var {
                    replacement.clone()
                } else {
                    Monomial::var(n, i, 1)
                }
            })
            .collect();
        self.map_variables(&self.vars().clone(), &images)
    }

    /// Sets variable `var` to zero. Factors whose monomial contains `var`
    /// become 1.
    pub fn substitute_zero(&self, var: usize) -> Result<Self> {
        let name = || self.vars().name(var).to_string();
        if self.den.keys().any(|m| m.exp(var) < 0) {
            return Err(Error::NegativeExponent(name()));
        }
        let num = self.num.substitute_zero(var)?;
        let den = self
            .den
            .iter()
            .filter(|(m, _)| m.exp(var) == 0)
            .map(|(m, &mu)| (m.clone(), mu))
            .collect();
        Ok(FactoredRational { num, den }.normalize())
    }

    /// Removes a variable that no longer occurs.
    pub fn drop_var(&self, var: usize) -> Result<Self> {
        if self.den.keys().any(|m| m.exp(var) != 0) {
            return Err(Error::VariableOccurs(self.vars().name(var).to_string()));
        }
        let num = self.num.drop_var(var)?;
        let den = self
            .den
            .iter()
            .map(|(m, &mu)| (m.remove(var), mu))
            .collect();
        Ok(FactoredRational { num, den })
    }

    /// Re-expresses the function over a superset of its variables.
    pub fn embed(&self, target: &VarSet) -> Result<Self> {
        if target == self.vars() {
            return Ok(self.clone());
        }
        let pos = self.vars().embedding_into(target)?;
        let images: Vec<Monomial> = pos
            .iter()
            .map(|&p| Monomial::var(target.len(), p, 1))
            .collect();
        self.map_variables(target, &images)
    }

    /// Exact equality of the represented rational functions, by
    /// cross-multiplication over the common factored denominator.
    pub fn equals(&self, other: &FactoredRational) -> bool {
        let Ok((a, b)) = align(self, other) else {
            return false;
        };
        let vars = a.vars().clone();
        let mut lcm: BTreeMap<&Monomial, u32> = BTreeMap::new();
        for (m, &mu) in a.den.iter().chain(b.den.iter()) {
            let e = lcm.entry(m).or_insert(0);
            *e = (*e).max(mu);
        }
        let lift = |f: &FactoredRational| {
            let cof = expand_factors(
                &vars,
                lcm.iter()
                    .map(|(m, &mu)| (*m, mu - f.den.get(*m).copied().unwrap_or(0))),
            );
            &f.num * &cof
        };
        lift(&a) == lift(&b)
    }
}

fn expand_factors<'a, I>(vars: &VarSet, factors: I) -> MultiPoly
where
    I: IntoIterator<Item = (&'a Monomial, u32)>,
{
    factors
        .into_iter()
        .filter(|&(_, mu)| mu > 0)
        .fold(MultiPoly::one(vars), |acc, (m, mu)| {
            &acc * &MultiPoly::one_minus(vars, m).pow(mu)
        })
}

fn primitive_root(m: &Monomial) -> Monomial {
    let g = m.content();
    Monomial::new(m.exps().iter().map(|e| e / g).collect())
}

/// Finds the smallest proper divisor `b` of `g` (where `m = u^g`) such that
/// `(1-u^g)/(1-u^b)` divides `num`.
fn partial_cancel(num: &MultiPoly, m: &Monomial) -> Option<(i32, MultiPoly)> {
    let g = m.content();
    if g < 2 {
        return None;
    }
    let u = primitive_root(m);
    (1..g)
        .filter(|b| g % b == 0)
        .find_map(|b| num.div_cyclotomic_block(&u, g, b).map(|q| (b, q)))
}

/// Brings two functions onto a common variable set when one contains the
/// other.
pub fn align(
    a: &FactoredRational,
    b: &FactoredRational,
) -> Result<(FactoredRational, FactoredRational)> {
    if a.vars() == b.vars() {
        Ok((a.clone(), b.clone()))
    } else if a.vars().contains_all(b.vars()) {
        Ok((a.clone(), b.embed(a.vars())?))
    } else if b.vars().contains_all(a.vars()) {
        Ok((a.embed(b.vars())?, b.clone()))
    } else {
        Err(a.vars().mismatch(b.vars()))
    }
}

/// Operation selector for [`rf_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
}

/// Binary arithmetic on factored rational functions with automatic
/// embedding of variable sets.
pub fn rf_arith(op: RfOp, a: &FactoredRational, b: &FactoredRational) -> Result<FactoredRational> {
    let (a, b) = align(a, b)?;
    Ok(match op {
        RfOp::Add => &a + &b,
        RfOp::Sub => &a - &b,
        RfOp::Mul => &a * &b,
    })
}

impl Add for &FactoredRational {
    type Output = FactoredRational;

    fn add(self, rhs: &FactoredRational) -> FactoredRational {
        FactoredRational::sum(self.vars(), [self, rhs])
    }
}

impl Sub for &FactoredRational {
    type Output = FactoredRational;

    fn sub(self, rhs: &FactoredRational) -> FactoredRational {
        self + &(-rhs)
    }
}

impl Neg for &FactoredRational {
    type Output = FactoredRational;

    fn neg(self) -> FactoredRational {
        FactoredRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;

    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        let mut den = self.den.clone();
        for (m, &mu) in &rhs.den {
            *den.entry(m.clone()).or_insert(0) += mu;
        }
        FactoredRational {
            num: &self.num * &rhs.num,
            den,
        }
        .normalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> VarSet {
        VarSet::single("z")
    }

    fn zm(e: i32) -> Monomial {
        Monomial::new(vec![e])
    }

    fn upoly(coeffs: &[i64]) -> MultiPoly {
        MultiPoly::from_terms(
            &z(),
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (zm(i as i32), Rational::from_integer(c.into()))),
        )
        .unwrap()
    }

    fn rf(num: &[i64], den: &[(i32, u32)]) -> FactoredRational {
        FactoredRational::from_parts(
            upoly(num),
            den.iter().map(|&(e, mu)| BinomialFactor::new(zm(e), mu)),
        )
        .unwrap()
    }

    #[test]
    fn normalize_cancels_and_merges() {
        let f = rf(&[1, 0, -1], &[(1, 1), (2, 1)]).normalize();
        assert_eq!(f, rf(&[1], &[(1, 1)]));
        let f = rf(&[1], &[(1, 1), (1, 2)]).normalize();
        assert_eq!(f.multiplicity(&zm(1)), 3);
    }

    #[test]
    fn normalize_flips_orientation() {
        // 1/(1 - z^-1) = -z/(1 - z)
        let f = rf(&[1], &[(-1, 1)]).normalize();
        assert_eq!(f.factors().next().unwrap().monomial, zm(1));
        assert_eq!(f.numerator(), &upoly(&[0, -1]));
    }

    #[test]
    fn normalize_partial_cancellation() {
        // (1 + z^2)/(1 - z^4) = 1/(1 - z^2)
        let f = rf(&[1, 0, 1], &[(4, 1)]).normalize();
        assert_eq!(f, rf(&[1], &[(2, 1)]));
    }

    #[test]
    fn zero_factor_rejected() {
        let r = FactoredRational::from_parts(upoly(&[1]), [BinomialFactor::new(zm(0), 1)]);
        assert_eq!(r, Err(Error::ZeroFactor));
    }

    #[test]
    fn arithmetic_examples() {
        let g = rf(&[1], &[(1, 1)]);
        assert_eq!(&g + &g, rf(&[2], &[(1, 1)]));
        let h = rf(&[0, 1], &[(1, 1)]);
        assert_eq!(&g - &h, FactoredRational::one(&z()));
    }

    #[test]
    fn derivative_examples() {
        let g = rf(&[1], &[(1, 1)]);
        assert!(g.diff(0, 1).equals(&rf(&[1], &[(1, 2)])));
        let h = rf(&[0, 1], &[(2, 1)]);
        assert!(h.diff(0, 1).equals(&rf(&[1, 0, 1], &[(2, 2)])));
        assert_eq!(h.diff(0, 0), h);
    }

    #[test]
    fn substitution_examples() {
        let zt = VarSet::new(["z", "t"]).unwrap();
        let f = FactoredRational::reciprocal_of(
            &zt,
            [BinomialFactor::new(Monomial::new(vec![0, 1]), 1)],
        )
        .unwrap();
        let g = f.substitute(1, &Monomial::new(vec![2, 1])).unwrap();
        assert_eq!(
            g.factors().next().unwrap().monomial,
            Monomial::new(vec![2, 1])
        );

        let f = rf(&[1], &[(1, 1)]);
        assert_eq!(f.substitute(0, &zm(2)).unwrap(), rf(&[1], &[(2, 1)]));
        assert_eq!(f.substitute(0, &zm(0)), Err(Error::ZeroFactor));
    }

    #[test]
    fn equality_examples() {
        // 1/(-1+z) vs -1/(1-z)
        let a = FactoredRational::from_poly(upoly(&[-1, 1]));
        let inv_a = rf(&[-1], &[(1, 1)]);
        assert!((&a * &inv_a).equals(&FactoredRational::one(&z())));
        assert!(rf(&[1], &[(1, 1)]).equals(&rf(&[1, 1], &[(2, 1)])));
        assert!(!rf(&[1], &[(1, 1)]).equals(&rf(&[1], &[(2, 1)])));
    }

    #[test]
    fn substitute_zero_drops_factors() {
        let zt = VarSet::new(["z", "t"]).unwrap();
        let f = FactoredRational::reciprocal_of(
            &zt,
            [
                BinomialFactor::new(Monomial::new(vec![1, 2]), 1),
                BinomialFactor::new(Monomial::new(vec![2, 0]), 1),
            ],
        )
        .unwrap();
        let g = f.substitute_zero(1).unwrap().drop_var(1).unwrap();
        assert_eq!(g, rf(&[1], &[(2, 1)]));
    }
}
