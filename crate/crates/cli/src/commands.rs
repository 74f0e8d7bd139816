//! The computations behind each subcommand and the oracle cross-check.

use std::collections::BTreeMap;

use clap::ValueEnum;
use poincare::bivariate::bivariate_covariants;
use poincare::multivariate::{multivar_covariants_with, multivar_invariants_with, Variant};
use poincare::oracle::{
    cayley_sylvester_dim, degree_dimensions, weight_oracle, weight_oracle_invariants, Count,
};
use poincare::univariate::{joint_series_with, JointOptions, SectionIndex, SeriesKind};
use poincare::{DegreeList, FactoredRational, Rational, TruncSeries};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Joint invariants by degree.
    Invariants,
    /// Joint covariants by degree.
    Covariants,
    /// Kernel of the Weitzenböck derivation with the given Jordan blocks.
    Kernel,
    /// Covariants of one form by degree and order.
    Bivariate,
    /// Joint covariants by multidegree and order.
    MultivarCovariants,
    /// Joint invariants by multidegree.
    MultivarInvariants,
}

/// Which reading of an ambiguous formula to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    /// The reading that agrees with direct dimension counts.
    #[default]
    Repaired,
    /// The literal reading of the formulas, kept for comparison.
    Printed,
}

pub fn compute(
    cmd: Command,
    d: &DegreeList,
    reading: Reading,
) -> Result<FactoredRational, CliError> {
    let joint = |kind| {
        let section = match reading {
            Reading::Repaired => SectionIndex::ByPole,
            Reading::Printed => SectionIndex::ByMultiplicity,
        };
        let opts = JointOptions {
            section,
            ..JointOptions::default()
        };
        joint_series_with(d, kind, opts)
    };
    let variant = match reading {
        Reading::Repaired => Variant::Weyl,
        Reading::Printed => Variant::Substituted,
    };
    let f = match cmd {
        Command::Invariants => joint(SeriesKind::Invariants)?,
        Command::Covariants | Command::Kernel => joint(SeriesKind::Covariants)?,
        Command::Bivariate => {
            if d.len() != 1 {
                return Err(CliError::Usage("bivariate takes exactly one degree".into()));
            }
            if reading == Reading::Printed {
                return Err(CliError::Usage(
                    "bivariate has no alternative reading".into(),
                ));
            }
            bivariate_covariants(d.degrees()[0])?
        }
        Command::MultivarCovariants => multivar_covariants_with(d, variant)?,
        Command::MultivarInvariants => multivar_invariants_with(d, variant)?,
    };
    Ok(f)
}

/// Whether the last variable of the result is the order `t`.
fn has_order(cmd: Command) -> bool {
    matches!(cmd, Command::Bivariate | Command::MultivarCovariants)
}

/// Expansion up to total degree `order` in the degree variables.
pub fn expand(cmd: Command, f: &FactoredRational, order: u32) -> Result<TruncSeries, CliError> {
    let degree_vars = f.vars().len() - usize::from(has_order(cmd));
    let graded: Vec<usize> = (0..degree_vars).collect();
    Ok(f.graded_series(&graded, order as i32)?)
}

fn integer(v: u128) -> Rational {
    Rational::from_integer(v.into())
}

fn as_map(s: &TruncSeries) -> BTreeMap<Vec<i32>, Rational> {
    s.terms()
        .map(|(m, c)| (m.exps().to_vec(), c.clone()))
        .collect()
}

fn compare(
    got: &BTreeMap<Vec<i32>, Rational>,
    expect: &BTreeMap<Vec<i32>, Rational>,
) -> Result<(), CliError> {
    let zero = Rational::from_integer(0.into());
    for key in got.keys().chain(expect.keys()) {
        let a = got.get(key).unwrap_or(&zero);
        let b = expect.get(key).unwrap_or(&zero);
        if a != b {
            return Err(CliError::Check(format!(
                "coefficient at exponents {key:?}: formula {a}, oracle {b}"
            )));
        }
    }
    Ok(())
}

/// Compares the expansion of `f` with direct counts up to total degree
/// `order`.
pub fn check(
    cmd: Command,
    d: &DegreeList,
    f: &FactoredRational,
    order: u32,
) -> Result<(), CliError> {
    if order == 0 {
        return Err(CliError::Usage("--check needs a positive order".into()));
    }
    let got = as_map(&expand(cmd, f, order)?);
    let expect: BTreeMap<Vec<i32>, Rational> = match cmd {
        Command::Invariants | Command::Covariants | Command::Kernel => {
            let count = if cmd == Command::Invariants {
                Count::Invariants
            } else {
                Count::Covariants
            };
            degree_dimensions(d, order, count)?
                .into_iter()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .map(|(i, v)| (vec![i as i32], integer(v)))
                .collect()
        }
        Command::Bivariate => {
            let deg = d.degrees()[0];
            let mut out = BTreeMap::new();
            for i in 0..=order {
                for j in 0..=deg * i {
                    let v = cayley_sylvester_dim(deg, i, j);
                    if v != 0 {
                        out.insert(vec![i as i32, j as i32], integer(v));
                    }
                }
            }
            out
        }
        Command::MultivarCovariants | Command::MultivarInvariants => {
            let caps = vec![order; d.len()];
            let s = if cmd == Command::MultivarCovariants {
                weight_oracle(d, &caps)?
            } else {
                weight_oracle_invariants(d, &caps)?
            };
            let n = d.len();
            as_map(&s.retain(|m| m.exps()[..n].iter().sum::<i32>() <= order as i32))
        }
    };
    compare(&got, &expect)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: &[u32]) -> DegreeList {
        DegreeList::new(d.to_vec()).unwrap()
    }

    #[test]
    fn every_command_passes_its_check() {
        let cases = [
            (Command::Invariants, &[3][..]),
            (Command::Covariants, &[1, 2]),
            (Command::Kernel, &[2]),
            (Command::Bivariate, &[3]),
            (Command::MultivarCovariants, &[1, 2]),
            (Command::MultivarInvariants, &[2, 2]),
        ];
        for (cmd, d) in cases {
            let d = deg(d);
            let f = compute(cmd, &d, Reading::Repaired).unwrap();
            check(cmd, &d, &f, 8).unwrap();
        }
    }

    #[test]
    fn printed_readings_fail_their_checks() {
        let d = deg(&[2]);
        let f = compute(Command::Invariants, &d, Reading::Printed).unwrap();
        assert!(matches!(
            check(Command::Invariants, &d, &f, 8),
            Err(CliError::Check(_))
        ));
        let d = deg(&[1]);
        let f = compute(Command::MultivarCovariants, &d, Reading::Printed).unwrap();
        assert!(check(Command::MultivarCovariants, &d, &f, 8).is_err());
    }

    #[test]
    fn bivariate_needs_one_degree() {
        let e = compute(Command::Bivariate, &deg(&[1, 2]), Reading::Repaired).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
