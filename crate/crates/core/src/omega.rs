//! MacMahon's partition-analysis operators.
//!
//! `Ω≥0` keeps the terms of a series whose exponent of the elimination
//! variable `λ` is nonnegative and then sets `λ = 1`; `Ω=0` keeps the
//! `λ`-free slice. Expansions follow the canonical factor orientation: every
//! factor `(1 - a λ^e)` has a lexicographically positive `λ`-free part `a`
//! and is read as `Σ (a λ^e)^k`.
//!
//! After rebasing every factor to the common exponent `M = lcm |e|` and
//! splitting the numerator by exponent residue mod `M`, each residue class
//! is a rational function of `Λ = λ^M` with simple-exponent factors
//! `(1 - a Λ)` and `(1 - b/Λ)`. Its partial fraction expansion in `Λ` has
//! principal parts `Σ_k α_k / (1 - a Λ)^k`, which expand in nonnegative
//! powers only, and a remainder whose nonnegative part can be read off the
//! expansion at `Λ = ∞`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::algebra::{
    rational, BinomialFactor, FactoredRational, Monomial, MultiPoly, Rational, VarSet,
};
use crate::error::{Error, Result};
use crate::partial_fractions::principal_coefficients;

/// A rational function prepared for elimination of one variable.
#[derive(Clone, Debug)]
pub struct OmegaExpr {
    expr: FactoredRational,
    outer: VarSet,
}

impl OmegaExpr {
    /// Validates `expr` for elimination of `lambda`. Every factor must involve
    /// some other variable.
    pub fn new(expr: &FactoredRational, lambda: &str) -> Result<Self> {
        let vars = expr.vars();
        let li = vars.position(lambda)?;
        let outer = vars.without(li);
        let work = outer.with(lambda)?;
        let expr = expr.embed(&work)?.normalize();
        let l = work.len() - 1;
        if let Some(bad) = expr.factors().find(|f| f.monomial.remove(l).is_one()) {
            return Err(Error::InvalidOmega(format!(
                "factor (1 - {lambda}^{}) has no other variable",
                bad.monomial.exp(l)
            )));
        }
        Ok(OmegaExpr { expr, outer })
    }

    /// The expression over its variables with `λ` moved last.
    pub fn expr(&self) -> &FactoredRational {
        &self.expr
    }

    /// Variables remaining after elimination.
    pub fn outer_vars(&self) -> &VarSet {
        &self.outer
    }

    fn lambda(&self) -> usize {
        self.outer.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slice {
    NonNegative,
    Zero,
}

/// `Ω≥0`: nonnegative `λ`-exponents, then `λ = 1`.
pub fn omega_nonneg(e: &OmegaExpr) -> Result<FactoredRational> {
    eliminate(e, Slice::NonNegative)
}

/// `Ω=0`: the `λ^0` slice, by constant terms of the partial fractions.
pub fn omega_zero(e: &OmegaExpr) -> Result<FactoredRational> {
    eliminate(e, Slice::Zero)
}

/// `Ω=0(G) = Ω≥0(G) - Ω≥0(G/λ)`.
pub fn omega_zero_by_shift(e: &OmegaExpr) -> Result<FactoredRational> {
    let l = e.lambda();
    let n = e.expr.vars().len();
    let shifted = OmegaExpr {
        expr: e.expr.mul_monomial(&Monomial::var(n, l, -1)),
        outer: e.outer.clone(),
    };
    let all = omega_nonneg(e)?;
    let positive = omega_nonneg(&shifted)?;
    Ok(FactoredRational::sum(
        &e.outer,
        [all, positive.scale(&rational(-1))].iter(),
    ))
}

/// Factors split by the sign of their exponent in `Λ`, with the `λ`-free
/// part as key.
struct Reduced {
    free: Vec<BinomialFactor>,
    pos: BTreeMap<Monomial, u32>,
    neg: BTreeMap<Monomial, u32>,
    classes: BTreeMap<i32, MultiPoly>,
}

fn reduce(e: &OmegaExpr) -> Reduced {
    let f = &e.expr;
    let l = e.lambda();
    let g = f
        .factors()
        .map(|b| b.monomial.exp(l))
        .chain(f.numerator().terms().map(|(m, _)| m.exp(l)))
        .fold(0i32, |acc, x| acc.gcd(&x))
        .max(1);
    let modulus = f
        .factors()
        .map(|b| (b.monomial.exp(l) / g).abs())
        .filter(|&x| x != 0)
        .fold(1i32, |acc, x| acc.lcm(&x));
    let mut num = MultiPoly::from_terms(
        f.vars(),
        f.numerator()
            .terms()
            .map(|(m, c)| (m.with_exp(l, m.exp(l) / g), c.clone())),
    )
    .expect("rescaled numerator");
    let mut free = Vec::new();
    let mut pos = BTreeMap::new();
    let mut neg = BTreeMap::new();
    for BinomialFactor {
        monomial,
        multiplicity,
    } in f.factors()
    {
        let ex = monomial.exp(l) / g;
        if ex == 0 {
            free.push(BinomialFactor::new(monomial, multiplicity));
            continue;
        }
        let m = monomial.with_exp(l, ex);
        let s = modulus / ex.abs();
        let block = MultiPoly::from_terms(f.vars(), (0..s).map(|j| (m.pow(j), rational(1))))
            .expect("block over the expression's variables");
        num = &num * &block.pow(multiplicity);
        let key = m.pow(s).with_exp(l, 0);
        let side = if ex > 0 { &mut pos } else { &mut neg };
        *side.entry(key).or_insert(0) += multiplicity;
    }
    let mut grouped: BTreeMap<i32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in num.terms() {
        let ex = m.exp(l);
        let r = ex.rem_euclid(modulus);
        grouped
            .entry(r)
            .or_default()
            .push((m.with_exp(l, (ex - r) / modulus), c.clone()));
    }
    let classes = grouped
        .into_iter()
        .map(|(r, terms)| {
            let p = MultiPoly::from_terms(f.vars(), terms).expect("regrouped terms");
            (r, p)
        })
        .collect();
    Reduced {
        free,
        pos,
        neg,
        classes,
    }
}

fn eliminate(e: &OmegaExpr, slice: Slice) -> Result<FactoredRational> {
    let vars = e.expr.vars().clone();
    let l = e.lambda();
    let red = reduce(e);
    let mut terms = Vec::new();
    for (&r, num) in &red.classes {
        if slice == Slice::Zero && r != 0 {
            continue;
        }
        terms.extend(principal_terms(&vars, l, &red, num, slice)?);
        let tail = tail_at_infinity(&vars, l, &red, num, slice);
        if !tail.is_zero() {
            terms.push(FactoredRational::from_poly(tail));
        }
    }
    let mut out = FactoredRational::sum(&vars, terms.iter());
    for b in &red.free {
        out = out.div_factor(&b.monomial, b.multiplicity)?;
    }
    out.drop_var(l)
}

/// `Σ_k α_k / (1 - a)^k` (or `Σ_k α_k` for the zero slice) over the poles
/// `Λ = 1/a` of one residue class.
fn principal_terms(
    vars: &VarSet,
    l: usize,
    red: &Reduced,
    num: &MultiPoly,
    slice: Slice,
) -> Result<Vec<FactoredRational>> {
    let up = |a: &Monomial| a.with_exp(l, 1);
    let down = |b: &Monomial| b.with_exp(l, -1);
    let mut out = Vec::new();
    for (a, &mu) in &red.pos {
        let others = red
            .pos
            .iter()
            .filter(|&(a2, _)| a2 != a)
            .map(|(a2, &m2)| BinomialFactor::new(up(a2), m2))
            .chain(
                red.neg
                    .iter()
                    .map(|(b, &nu)| BinomialFactor::new(down(b), nu)),
            );
        let h = FactoredRational::from_parts(num.clone(), others)?;
        let alphas = principal_coefficients(&h, l, a, mu)?;
        for (k, alpha) in alphas.into_iter().enumerate() {
            if alpha.is_zero() {
                continue;
            }
            let term = match slice {
                Slice::NonNegative => alpha.div_factor(a, k as u32 + 1)?,
                Slice::Zero => alpha,
            };
            out.push(term);
        }
    }
    debug_assert!(out.iter().all(|t| t.vars() == vars));
    Ok(out)
}

/// Nonnegative (or zero) `Λ`-part of the expansion at `Λ = ∞`, at `Λ = 1`.
///
/// There `1/(1 - aΛ) = -Σ_{k>=1} a^{-k} Λ^{-k}` and
/// `1/(1 - b/Λ) = Σ_{k>=0} b^k Λ^{-k}`; the principal parts at the poles
/// `Λ = 1/a` only carry negative powers, so this is exactly the remainder's
/// contribution.
fn tail_at_infinity(
    vars: &VarSet,
    l: usize,
    red: &Reduced,
    num: &MultiPoly,
    slice: Slice,
) -> MultiPoly {
    let poles: u32 = red.pos.values().sum();
    let top = num.max_exponent(l).unwrap_or(i32::MIN);
    if top < poles as i32 {
        return MultiPoly::zero(vars);
    }
    let keep = |m: &Monomial| m.exp(l) >= 0;
    let mut s = num.filter(keep);
    for (a, &mu) in &red.pos {
        let step = a.inv().with_exp(l, -1);
        for _ in 0..mu {
            s = s.mul_monomial(&step).scale(&rational(-1)).filter(keep);
            s = geometric(&s, &step, l);
        }
    }
    for (b, &nu) in &red.neg {
        let step = b.with_exp(l, -1);
        for _ in 0..nu {
            s = geometric(&s, &step, l);
        }
    }
    if slice == Slice::Zero {
        s = s.filter(|m| m.exp(l) == 0);
    }
    let images: Vec<Monomial> = (0..vars.len())
        .map(|i| {
            if i == l {
                Monomial::one(vars.len())
            } else {
                Monomial::var(vars.len(), i, 1)
            }
        })
        .collect();
    s.map_monomials(vars, &images)
}

/// `s / (1 - u)` where `u` lowers the `Λ`-exponent, keeping exponents `>= 0`.
fn geometric(s: &MultiPoly, u: &Monomial, l: usize) -> MultiPoly {
    let mut out = s.clone();
    let mut layer = s.clone();
    loop {
        layer = layer.mul_monomial(u).filter(|m| m.exp(l) >= 0);
        if layer.is_zero() {
            return out;
        }
        out = &out + &layer;
    }
}
