//! Plain-text and LaTeX rendering.

use std::cmp::Reverse;

use num_traits::{One, Signed};
use poincare::{FactoredRational, Monomial, MultiPoly, Rational, TruncSeries, VarSet};

/// Output styles shared by rational functions and series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

/// Display order: ascending total degree, then earlier variables first.
fn term_order(m: &Monomial) -> (i64, Reverse<Vec<i32>>) {
    (m.total_degree(), Reverse(m.exps().to_vec()))
}

fn var_name(name: &str, style: Style) -> String {
    match style {
        Style::Plain => name.to_string(),
        Style::Latex => {
            let split = name.find(|c: char| c.is_ascii_digit());
            match split {
                Some(i) if i > 0 => format!("{}_{{{}}}", &name[..i], &name[i..]),
                _ if name == "lambda" => "\\lambda".to_string(),
                _ => name.to_string(),
            }
        }
    }
}

fn power(base: &str, e: i32, style: Style) -> String {
    match (e, style) {
        (1, _) => base.to_string(),
        (_, Style::Plain) => format!("{base}^{e}"),
        (_, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

/// `z1^2*t` or `z_{1}^{2} t`; empty for the unit monomial.
pub fn monomial(vars: &VarSet, m: &Monomial, style: Style) -> String {
    let sep = match style {
        Style::Plain => "*",
        Style::Latex => " ",
    };
    m.exps()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e != 0)
        .map(|(i, &e)| power(&var_name(vars.name(i), style), e, style))
        .collect::<Vec<_>>()
        .join(sep)
}

fn magnitude(c: &Rational, style: Style) -> String {
    let c = c.abs();
    match style {
        Style::Plain => c.to_string(),
        Style::Latex if c.is_integer() => c.to_string(),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

/// Signed terms joined as `a + b - c`.
fn sum<'a, I>(vars: &VarSet, terms: I, style: Style) -> String
where
    I: IntoIterator<Item = (&'a Monomial, &'a Rational)>,
{
    let mut terms: Vec<_> = terms.into_iter().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by_key(|(m, _)| term_order(m));
    let mut out = String::new();
    for (idx, (m, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = monomial(vars, m, style);
        let unit = c.abs().is_one();
        let body = match (mono.is_empty(), unit, style) {
            (true, _, _) => magnitude(c, style),
            (false, true, _) => mono,
            (false, false, Style::Plain) => format!("{}*{mono}", magnitude(c, style)),
            (false, false, Style::Latex) => format!("{} {mono}", magnitude(c, style)),
        };
        out.push_str(&body);
    }
    out
}

pub fn polynomial(p: &MultiPoly, style: Style) -> String {
    sum(p.vars(), p.terms(), style)
}

pub fn series(s: &TruncSeries, style: Style) -> String {
    sum(s.vars(), s.terms(), style)
}

/// The rational function with canonical `(1 - m)` factors.
pub fn rational_function(f: &FactoredRational, style: Style) -> String {
    let vars = f.vars();
    let num = polynomial(f.numerator(), style);
    let mut factors: Vec<_> = f.factors().collect();
    if factors.is_empty() {
        return num;
    }
    factors.sort_by_key(|b| term_order(&b.monomial));
    let den: Vec<String> = factors
        .iter()
        .map(|b| {
            let inner = format!("(1-{})", monomial(vars, &b.monomial, style));
            match (b.multiplicity, style) {
                (1, _) => inner,
                (mu, Style::Plain) => format!("{inner}^{mu}"),
                (mu, Style::Latex) => format!("{inner}^{{{mu}}}"),
            }
        })
        .collect();
    match style {
        Style::Plain => {
            let num = if f.numerator().len() > 1 {
                format!("({num})")
            } else {
                num
            };
            let den = if den.len() > 1 {
                format!("({})", den.join("*"))
            } else {
                den.join("")
            };
            format!("{num}/{den}")
        }
        Style::Latex => format!("\\frac{{{num}}}{{{}}}", den.join("")),
    }
}
