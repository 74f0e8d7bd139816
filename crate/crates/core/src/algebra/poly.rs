use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, Rational, VarSet};
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Exponents may be negative; callers that need an ordinary polynomial check
/// [`MultiPoly::min_exponent`]. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// `x_idx^exp`.
    pub fn var(vars: &VarSet, idx: usize, exp: i32) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), idx, exp), Rational::one())
    }

    /// `1 - m`.
    pub fn one_minus(vars: &VarSet, m: &Monomial) -> Self {
        Self::one(vars) - Self::monomial(vars, m.clone(), Rational::one())
    }

    /// Builds a polynomial from terms, summing repeated monomials.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.len() != vars.len() {
                return Err(Error::Arity {
                    expected: vars.len(),
                    got: m.len(),
                });
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MultiPoly {
            vars: vars.clone(),
            terms: acc,
        })
    }

    fn from_map(vars: &VarSet, map: HashMap<Monomial, Rational>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn min_exponent(&self, idx: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(idx)).min()
    }

    pub fn max_exponent(&self, idx: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(idx)).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k * m, v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(idx);
            (e != 0).then(|| (m.with_exp(idx, e - 1), c * Rational::from_integer(e.into())))
        });
        MultiPoly {
            vars: self.vars.clone(),
            terms: terms.collect(),
        }
    }

    /// Applies a monomial map: variable `i` of `self` goes to `images[i]`,
    /// a monomial over `target`.
    pub fn map_monomials(&self, target: &VarSet, images: &[Monomial]) -> Self {
        debug_assert_eq!(images.len(), self.vars.len());
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let image = image_of(m, target.len(), images);
            *acc.entry(image).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(target, acc)
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn embed(&self, target: &VarSet) -> Result<Self> {
        if *target == self.vars {
            return Ok(self.clone());
        }
        let pos = self.vars.embedding_into(target)?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &p) in pos.iter().enumerate() {
                e[p] = m.exp(i);
            }
            (Monomial::new(e), c.clone())
        });
        Ok(MultiPoly {
            vars: target.clone(),
            terms: terms.collect(),
        })
    }

    /// Removes variable `idx`, which must not occur.
    pub fn drop_var(&self, idx: usize) -> Result<Self> {
        if self.terms.keys().any(|m| m.exp(idx) != 0) {
            return Err(Error::VariableOccurs(self.vars.name(idx).to_string()));
        }
        Ok(MultiPoly {
            vars: self.vars.without(idx),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remove(idx), c.clone()))
                .collect(),
        })
    }

    /// Exact quotient by `1 - m`, or `None` when `1 - m` does not divide.
    ///
    /// Terms are grouped into chains `u, u·m, u·m², …`; on each chain the
    /// polynomial is univariate in `s = m` and divisible by `1 - s` iff its
    /// coefficients sum to zero, in which case the quotient coefficients are
    /// the prefix sums.
    pub fn div_one_minus(&self, m: &Monomial) -> Option<Self> {
        let pivot = m.exps().iter().position(|&e| e != 0)?;
        let step = m.exp(pivot);
        let mut chains: HashMap<Monomial, BTreeMap<i32, &Rational>> = HashMap::new();
        for (u, c) in &self.terms {
            let k = u.exp(pivot).div_euclid(step);
            let base = u.div(&m.pow(k));
            chains.entry(base).or_default().insert(k, c);
        }
        let mut out = HashMap::with_capacity(self.terms.len());
        for (base, chain) in chains {
            let mut acc = Rational::zero();
            let mut prev: Option<i32> = None;
            for (&k, &c) in &chain {
                if let Some(p) = prev {
                    if !acc.is_zero() {
                        for j in p..k {
                            out.insert(&base * &m.pow(j), acc.clone());
                        }
                    }
                }
                acc += c;
                prev = Some(k);
            }
            if !acc.is_zero() {
                return None;
            }
        }
        Some(Self::from_map(&self.vars, out))
    }

    /// Exact quotient by `(1 - u^g) / (1 - u^b)` = `1 + u^b + … + u^{g-b}`.
    pub fn div_cyclotomic_block(&self, u: &Monomial, g: i32, b: i32) -> Option<Self> {
        let shifted = self - &self.mul_monomial(&u.pow(b));
        shifted.div_one_minus(&u.pow(g))
    }

    /// Sets variable `idx` to zero. Terms with a negative exponent there make
    /// this undefined.
    pub fn substitute_zero(&self, idx: usize) -> Result<Self> {
        if self.min_exponent(idx).is_some_and(|e| e < 0) {
            return Err(Error::NegativeExponent(self.vars.name(idx).to_string()));
        }
        Ok(self.filter(|m| m.exp(idx) == 0))
    }
}

pub(crate) fn image_of(m: &Monomial, nvars: usize, images: &[Monomial]) -> Monomial {
    let mut e = vec![0i32; nvars];
    for (i, &k) in m.exps().iter().enumerate() {
        if k != 0 {
            for (slot, &x) in e.iter_mut().zip(images[i].exps()) {
                *slot += x * k;
            }
        }
    }
    Monomial::new(e)
}

fn same_vars(a: &MultiPoly, b: &MultiPoly) {
    assert!(
        a.vars == b.vars,
        "polynomial variable sets differ: {:?} vs {:?}",
        a.vars,
        b.vars
    );
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        same_vars(self, rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        same_vars(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma * mb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        MultiPoly::from_map(&self.vars, acc)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Brings two polynomials onto a common variable set when one set contains
/// the other.
pub fn align(a: &MultiPoly, b: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    if a.vars == b.vars {
        Ok((a.clone(), b.clone()))
    } else if a.vars.contains_all(&b.vars) {
        Ok((a.clone(), b.embed(&a.vars)?))
    } else if b.vars.contains_all(&a.vars) {
        Ok((a.embed(&b.vars)?, b.clone()))
    } else {
        Err(a.vars.mismatch(&b.vars))
    }
}

/// Binary polynomial arithmetic with automatic embedding of variable sets.
pub fn poly_arith(op: PolyOp, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    let (a, b) = align(a, b)?;
    Ok(match op {
        PolyOp::Add => &a + &b,
        PolyOp::Sub => &a - &b,
        PolyOp::Mul => &a * &b,
    })
}
