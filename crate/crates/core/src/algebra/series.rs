use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{FactoredRational, Monomial, Rational, VarSet};
use crate::error::{Error, Result};

/// Truncated multivariate Laurent series.
///
/// `bounds[i] = Some(b)` means coefficients are known for exponents of
/// variable `i` up to `b`; `None` leaves the variable unbounded. A missing
/// entry within the bounds is a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    vars: VarSet,
    bounds: Vec<Option<i32>>,
    coeffs: BTreeMap<Monomial, Rational>,
}

impl TruncSeries {
    pub fn new(vars: &VarSet, bounds: Vec<Option<i32>>) -> Result<Self> {
        if bounds.len() != vars.len() {
            return Err(Error::Arity {
                expected: vars.len(),
                got: bounds.len(),
            });
        }
        Ok(TruncSeries {
            vars: vars.clone(),
            bounds,
            coeffs: BTreeMap::new(),
        })
    }

    /// Builds a series from explicit coefficients, dropping those outside
    /// the bounds.
    pub fn from_coefficients<I>(vars: &VarSet, bounds: Vec<Option<i32>>, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut s = Self::new(vars, bounds)?;
        for (m, c) in coeffs {
            if m.len() != vars.len() {
                return Err(Error::Arity {
                    expected: vars.len(),
                    got: m.len(),
                });
            }
            s.add_term(m, c);
        }
        Ok(s)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if !self.in_bounds(&m) || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn bounds(&self) -> &[Option<i32>] {
        &self.bounds
    }

    pub fn in_bounds(&self, m: &Monomial) -> bool {
        m.exps()
            .iter()
            .zip(&self.bounds)
            .all(|(&e, b)| b.is_none_or(|b| e <= b))
    }

    pub fn coefficient(&self, exps: &[i32]) -> Rational {
        self.coeffs
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients as a dense vector for a univariate series.
    pub fn univariate_coefficients(&self) -> Vec<Rational> {
        assert_eq!(self.vars.len(), 1, "univariate series expected");
        let top = self.bounds[0].expect("bounded series");
        (0..=top).map(|i| self.coefficient(&[i])).collect()
    }

    /// Restricts to tighter bounds.
    pub fn truncate(&self, bounds: Vec<Option<i32>>) -> Self {
        let mut s = TruncSeries {
            vars: self.vars.clone(),
            bounds,
            coeffs: BTreeMap::new(),
        };
        s.coeffs = self
            .coeffs
            .iter()
            .filter(|(m, _)| s.in_bounds(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        s
    }

    /// Keeps the terms satisfying `keep`.
    pub fn retain<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        TruncSeries {
            vars: self.vars.clone(),
            bounds: self.bounds.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets variable `var` to 1 and removes it. Only meaningful when every
    /// coefficient with fixed remaining exponents is fully present.
    pub fn specialize_to_one(&self, var: usize) -> Self {
        let mut coeffs: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.coeffs {
            *coeffs.entry(m.remove(var)).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        let mut bounds = self.bounds.clone();
        bounds.remove(var);
        TruncSeries {
            vars: self.vars.without(var),
            bounds,
            coeffs,
        }
    }

    /// Termwise partial derivative; the bound of `var` drops by one.
    pub fn derivative(&self, var: usize) -> Self {
        let mut bounds = self.bounds.clone();
        if let Some(b) = bounds[var].as_mut() {
            *b -= 1;
        }
        let mut out = TruncSeries {
            vars: self.vars.clone(),
            bounds,
            coeffs: BTreeMap::new(),
        };
        for (m, c) in &self.coeffs {
            let e = m.exp(var);
            if e != 0 {
                out.add_term(m.with_exp(var, e - 1), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Coefficientwise sum over the tighter of the two bounds.
    pub fn add(&self, other: &TruncSeries) -> Result<Self> {
        if self.vars != other.vars {
            return Err(self.vars.mismatch(&other.vars));
        }
        let bounds = meet(&self.bounds, &other.bounds);
        let mut out = TruncSeries::new(&self.vars, bounds)?;
        for (m, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// True when both series agree on every coefficient inside the common
    /// bounds.
    pub fn agrees_with(&self, other: &TruncSeries) -> bool {
        if self.vars != other.vars {
            return false;
        }
        let bounds = meet(&self.bounds, &other.bounds);
        let a = self.truncate(bounds.clone());
        let b = other.truncate(bounds);
        a.coeffs == b.coeffs
    }

    /// First coefficient on which the two series differ, for diagnostics.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<(Monomial, Rational, Rational)> {
        let bounds = meet(&self.bounds, &other.bounds);
        let a = self.truncate(bounds.clone());
        let b = other.truncate(bounds);
        a.coeffs
            .keys()
            .chain(b.coeffs.keys())
            .find(|m| a.coeffs.get(*m) != b.coeffs.get(*m))
            .map(|m| {
                let get = |s: &TruncSeries| s.coeffs.get(m).cloned().unwrap_or_else(Rational::zero);
                (m.clone(), get(&a), get(&b))
            })
    }
}

fn meet(a: &[Option<i32>], b: &[Option<i32>]) -> Vec<Option<i32>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| match (x, y) {
            (Some(x), Some(y)) => Some(*x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(*x),
            (None, None) => None,
        })
        .collect()
}

impl FactoredRational {
    /// Truncated expansion, each factor expanded as `Σ m^k`.
    ///
    /// Every factor monomial must have nonnegative exponents in all bounded
    /// variables and a positive exponent in at least one of them, so that the
    /// truncation is exact.
    pub fn series(&self, bounds: &[Option<i32>]) -> Result<TruncSeries> {
        let vars = self.vars().clone();
        if bounds.len() != vars.len() {
            return Err(Error::Arity {
                expected: vars.len(),
                got: bounds.len(),
            });
        }
        for f in self.factors() {
            let m = &f.monomial;
            let nonneg = bounds
                .iter()
                .enumerate()
                .all(|(i, b)| b.is_none() || m.exp(i) >= 0);
            let advances = bounds
                .iter()
                .enumerate()
                .any(|(i, b)| b.is_some() && m.exp(i) > 0);
            if !nonneg || !advances {
                return Err(Error::NotExpandable(format!(
                    "factor (1 - {:?}) under bounds {:?}",
                    m.exps(),
                    bounds
                )));
            }
        }
        // Widen the working bounds by the most negative numerator exponent.
        let work: Vec<Option<i32>> = bounds
            .iter()
            .enumerate()
            .map(|(i, b)| {
                b.map(|b| {
                    let low = self.numerator().min_exponent(i).unwrap_or(0).min(0);
                    b - low
                })
            })
            .collect();
        let fits = |m: &Monomial| {
            m.exps()
                .iter()
                .zip(&work)
                .all(|(&e, b)| b.is_none_or(|b| e <= b))
        };
        let out = TruncSeries::new(&vars, bounds.to_vec())?;
        Ok(self.expand_into(out, fits, |_| true))
    }

    /// Expansion up to total degree `order` in the variables `graded`, the
    /// others unbounded. Every factor must have nonnegative exponents in the
    /// graded variables and a positive total among them.
    pub fn graded_series(&self, graded: &[usize], order: i32) -> Result<TruncSeries> {
        let vars = self.vars().clone();
        if let Some(&bad) = graded.iter().find(|&&i| i >= vars.len()) {
            return Err(Error::OutOfRange(format!("no variable at index {bad}")));
        }
        let total = |m: &Monomial| graded.iter().map(|&i| m.exp(i) as i64).sum::<i64>();
        for f in self.factors() {
            let m = &f.monomial;
            if graded.iter().any(|&i| m.exp(i) < 0) || total(m) <= 0 {
                return Err(Error::NotExpandable(format!(
                    "factor (1 - {:?}) is not graded by {:?}",
                    m.exps(),
                    graded
                )));
            }
        }
        let low = self
            .numerator()
            .terms()
            .map(|(m, _)| total(m))
            .min()
            .unwrap_or(0)
            .min(0);
        let work = order as i64 - low;
        let bounds = (0..vars.len())
            .map(|i| graded.contains(&i).then_some(order))
            .collect();
        let out = TruncSeries::new(&vars, bounds)?;
        Ok(self.expand_into(
            out,
            |m| total(m) <= work,
            |m| total(m) <= order as i64 && graded.iter().all(|&i| m.exp(i) >= 0),
        ))
    }

    /// Multiplies the numerator into `Σ` of the factor expansions that pass
    /// `fits`, keeping the terms that pass `keep` and `out`'s bounds.
    fn expand_into<F, K>(&self, mut out: TruncSeries, fits: F, keep: K) -> TruncSeries
    where
        F: Fn(&Monomial) -> bool,
        K: Fn(&Monomial) -> bool,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        acc.insert(Monomial::one(self.vars().len()), Rational::one());
        for f in self.factors() {
            for _ in 0..f.multiplicity {
                acc = divide_by_one_minus(&acc, &f.monomial, &fits);
            }
        }
        let mut coeffs: HashMap<Monomial, Rational> = HashMap::new();
        for (nm, nc) in self.numerator().terms() {
            for (m, c) in &acc {
                let p = nm * m;
                if out.in_bounds(&p) && keep(&p) {
                    *coeffs.entry(p).or_insert_with(Rational::zero) += nc * c;
                }
            }
        }
        out.coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out
    }
}

/// `S / (1 - m)` truncated by `fits`, i.e. `Σ_k m^k S`.
fn divide_by_one_minus<F: Fn(&Monomial) -> bool>(
    s: &HashMap<Monomial, Rational>,
    m: &Monomial,
    fits: &F,
) -> HashMap<Monomial, Rational> {
    let mut out: HashMap<Monomial, Rational> = s.clone();
    let mut layer: Vec<(Monomial, Rational)> =
        s.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    loop {
        layer = layer
            .into_iter()
            .map(|(k, v)| (&k * m, v))
            .filter(|(k, _)| fits(k))
            .collect();
        if layer.is_empty() {
            break;
        }
        for (k, v) in &layer {
            *out.entry(k.clone()).or_insert_with(Rational::zero) += v;
        }
    }
    out
}
