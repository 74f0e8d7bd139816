//! Machine-readable output and its decoder.
//!
//! A rational function is
//! `{"variables": [...], "numerator": [[coefficient, [exponents]], ...],
//! "denominator": [{"monomial": [...], "coefficient": "-1", "multiplicity": k}, ...]}`
//! where each denominator entry is the factor `(1 + coefficient·monomial)^k`.
//! Coefficients are decimal strings, optionally `p/q`.

use poincare::{
    BinomialFactor, FactoredRational, Monomial, MultiPoly, Rational, TruncSeries, VarSet,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Largest exponent magnitude the decoder accepts.
pub const MAX_EXPONENT: i32 = 256;
/// Largest factor multiplicity the decoder accepts.
pub const MAX_MULTIPLICITY: u32 = 64;
/// Largest number of numerator terms or denominator factors.
pub const MAX_ENTRIES: usize = 4096;
/// Largest number of variables.
pub const MAX_VARIABLES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub monomial: Vec<i32>,
    pub coefficient: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalFunctionJson {
    pub variables: Vec<String>,
    pub numerator: Vec<(String, Vec<i32>)>,
    pub denominator: Vec<FactorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub variables: Vec<String>,
    pub order: u32,
    pub terms: Vec<(String, Vec<i32>)>,
}

fn terms<'a, I>(it: I) -> Vec<(String, Vec<i32>)>
where
    I: IntoIterator<Item = (&'a Monomial, &'a Rational)>,
{
    it.into_iter()
        .map(|(m, c)| (c.to_string(), m.exps().to_vec()))
        .collect()
}

pub fn encode(f: &FactoredRational) -> RationalFunctionJson {
    RationalFunctionJson {
        variables: f.vars().names().to_vec(),
        numerator: terms(f.numerator().terms()),
        denominator: f
            .factors()
            .map(|b| FactorJson {
                monomial: b.monomial.exps().to_vec(),
                coefficient: "-1".into(),
                multiplicity: b.multiplicity,
            })
            .collect(),
    }
}

pub fn encode_series(s: &TruncSeries, order: u32) -> SeriesJson {
    SeriesJson {
        variables: s.vars().names().to_vec(),
        order,
        terms: terms(s.terms()),
    }
}

pub fn to_string(f: &FactoredRational) -> String {
    serde_json::to_string_pretty(&encode(f)).expect("plain data serializes")
}

pub fn series_to_string(s: &TruncSeries, order: u32) -> String {
    serde_json::to_string_pretty(&encode_series(s, order)).expect("plain data serializes")
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Json(msg.into())
}

fn parse_coefficient(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| bad(format!("coefficient `{s}` is not a rational number")))
}

fn check_exponents(e: &[i32], n: usize) -> Result<Monomial, CliError> {
    if e.len() != n {
        return Err(bad(format!(
            "exponent list of length {}, expected {n}",
            e.len()
        )));
    }
    if e.iter().any(|x| x.abs() > MAX_EXPONENT) {
        return Err(bad(format!("exponent magnitude above {MAX_EXPONENT}")));
    }
    Ok(Monomial::new(e.to_vec()))
}

/// Rebuilds a rational function from its JSON form.
pub fn from_json(doc: &RationalFunctionJson) -> Result<FactoredRational, CliError> {
    if doc.variables.len() > MAX_VARIABLES {
        return Err(bad("too many variables"));
    }
    if doc.numerator.len() > MAX_ENTRIES || doc.denominator.len() > MAX_ENTRIES {
        return Err(bad("too many entries"));
    }
    let vars = VarSet::new(doc.variables.iter().cloned()).map_err(|e| bad(e.to_string()))?;
    let n = vars.len();
    let mut num_terms = Vec::with_capacity(doc.numerator.len());
    for (c, e) in &doc.numerator {
        num_terms.push((check_exponents(e, n)?, parse_coefficient(c)?));
    }
    let mut num = MultiPoly::from_terms(&vars, num_terms).map_err(|e| bad(e.to_string()))?;
    let mut factors = Vec::with_capacity(doc.denominator.len());
    for f in &doc.denominator {
        let m = check_exponents(&f.monomial, n)?;
        if m.is_one() {
            return Err(bad("denominator factor without a variable"));
        }
        if f.multiplicity > MAX_MULTIPLICITY {
            return Err(bad(format!("multiplicity above {MAX_MULTIPLICITY}")));
        }
        let c = parse_coefficient(&f.coefficient)?;
        if c == Rational::from_integer((-1).into()) {
            factors.push(BinomialFactor::new(m, f.multiplicity));
        } else if c == Rational::from_integer(1.into()) {
            // 1 + m = (1 - m^2)/(1 - m)
            let square = m.pow(2);
            if square.exps().iter().any(|x| x.abs() > MAX_EXPONENT) {
                return Err(bad(format!("exponent magnitude above {MAX_EXPONENT}")));
            }
            num = &num * &MultiPoly::one_minus(&vars, &m).pow(f.multiplicity);
            factors.push(BinomialFactor::new(square, f.multiplicity));
        } else {
            return Err(CliError::Compute(poincare::Error::UnsupportedCoefficient(
                f.coefficient.clone(),
            )));
        }
    }
    Ok(FactoredRational::new(num, factors)?)
}

pub fn decode(s: &str) -> Result<FactoredRational, CliError> {
    let doc: RationalFunctionJson = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
    from_json(&doc)
}

/// Parses a series document and checks its shape.
pub fn decode_series(s: &str) -> Result<SeriesJson, CliError> {
    let doc: SeriesJson = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
    if doc.variables.len() > MAX_VARIABLES {
        return Err(bad("too many variables"));
    }
    VarSet::new(doc.variables.iter().cloned()).map_err(|e| bad(e.to_string()))?;
    for (c, e) in &doc.terms {
        if e.len() != doc.variables.len() {
            return Err(bad(format!("exponent list of length {}", e.len())));
        }
        parse_coefficient(c)?;
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let z = VarSet::single("z");
        let f = FactoredRational::new(
            MultiPoly::from_terms(
                &z,
                [
                    (Monomial::new(vec![0]), Rational::from_integer(1.into())),
                    (Monomial::new(vec![3]), Rational::new(5.into(), 2.into())),
                ],
            )
            .unwrap(),
            [BinomialFactor::new(Monomial::new(vec![2]), 3)],
        )
        .unwrap();
        let back = decode(&to_string(&f)).unwrap();
        assert!(back.equals(&f));
    }

    #[test]
    fn series_documents() {
        let ok = r#"{"variables":["z"],"order":2,"terms":[["1",[0]],["3/2",[2]]]}"#;
        assert_eq!(decode_series(ok).unwrap().terms.len(), 2);
        let short = r#"{"variables":["z","t"],"order":2,"terms":[["1",[0]]]}"#;
        assert!(decode_series(short).is_err());
    }

    #[test]
    fn plus_sign_factors() {
        let doc = r#"{"variables":["z"],"numerator":[["1",[0]]],
            "denominator":[{"monomial":[1],"coefficient":"1","multiplicity":1}]}"#;
        let f = decode(doc).unwrap();
        let expect = FactoredRational::new(
            MultiPoly::one_minus(&VarSet::single("z"), &Monomial::new(vec![1])),
            [BinomialFactor::new(Monomial::new(vec![2]), 1)],
        )
        .unwrap();
        assert!(f.equals(&expect));
    }

    #[test]
    fn rejects_malformed_documents() {
        let cases = [
            "",
            "{}",
            r#"{"variables":["z","z"],"numerator":[],"denominator":[]}"#,
            r#"{"variables":["z"],"numerator":[["x",[0]]],"denominator":[]}"#,
            r#"{"variables":["z"],"numerator":[["1/0",[0]]],"denominator":[]}"#,
            r#"{"variables":["z"],"numerator":[["1",[0,1]]],"denominator":[]}"#,
            r#"{"variables":["z"],"numerator":[],"denominator":[{"monomial":[0],"coefficient":"-1","multiplicity":1}]}"#,
            r#"{"variables":["z"],"numerator":[],"denominator":[{"monomial":[1],"coefficient":"2","multiplicity":1}]}"#,
            r#"{"variables":["z"],"numerator":[["1",[100000]]],"denominator":[]}"#,
        ];
        for c in cases {
            assert!(decode(c).is_err(), "{c}");
        }
    }
}
