use std::ops::Mul;

use num_integer::Integer;

/// Exponent tuple of a Laurent monomial, one entry per variable of a [`VarSet`].
///
/// [`VarSet`]: super::VarSet
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    /// `x_idx^exp` in a ring with `nvars` variables.
    pub fn var(nvars: usize, idx: usize, exp: i32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Monomial(e)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, idx: usize) -> i32 {
        self.0[idx]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn with_exp(&self, idx: usize, exp: i32) -> Self {
        let mut e = self.0.clone();
        e[idx] = exp;
        Monomial(e)
    }

    pub fn inv(&self) -> Self {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i32) -> Self {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn div(&self, other: &Monomial) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// First nonzero exponent is positive. This fixes the canonical
    /// orientation of a binomial factor `(1 - m)`.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|&&e| e != 0).is_some_and(|&e| e > 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// gcd of the absolute exponents; `m = u^g` with `u` primitive.
    pub fn content(&self) -> i32 {
        self.0.iter().fold(0, |g, &e| g.gcd(&e))
    }

    pub fn remove(&self, idx: usize) -> Self {
        let mut e = self.0.clone();
        e.remove(idx);
        Monomial(e)
    }

    pub fn insert(&self, idx: usize, exp: i32) -> Self {
        let mut e = self.0.clone();
        e.insert(idx, exp);
        Monomial(e)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation() {
        assert!(Monomial::new(vec![0, 2]).is_lex_positive());
        assert!(Monomial::new(vec![1, -2]).is_lex_positive());
        assert!(!Monomial::new(vec![-1, 5]).is_lex_positive());
        assert!(!Monomial::one(3).is_lex_positive());
    }

    #[test]
    fn content_and_powers() {
        let m = Monomial::new(vec![4, -6]);
        assert_eq!(m.content(), 2);
        assert_eq!(m.pow(-1), m.inv());
        assert_eq!(&m * &m.inv(), Monomial::one(2));
    }
}
