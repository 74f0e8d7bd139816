//! Acceptance gate: runs each criterion at its tolerance and time limit and
//! prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use poincare::bivariate::{at_t_one, at_t_zero};
use poincare::multivariate::{
    collapse_degrees, collapse_invariant_degrees, multivar_covariants, multivar_invariant_vars,
    multivar_invariants, multivar_vars,
};
use poincare::omega::{omega_nonneg, omega_zero, OmegaExpr};
use poincare::univariate::{
    joint_series, linear_closed, linear_derivative_sum, linear_invariants_narayana,
    quadratic_closed, quadratic_covariants_numerator_form, quadratic_derivative_sum, springer,
    springer_covariants, springer_invariants, SeriesKind,
};
use poincare::{
    BinomialFactor, DegreeList, FactoredRational, Monomial, MultiPoly, Rational, VarSet,
};
use poincare_cli::json;

type Check = Result<(), String>;

const KINDS: [SeriesKind; 2] = [SeriesKind::Invariants, SeriesKind::Covariants];

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn deg(d: &[u32]) -> DegreeList {
    DegreeList::new(d.to_vec()).unwrap()
}

fn poly(vars: &VarSet, terms: &[(i64, &[i32])]) -> MultiPoly {
    MultiPoly::from_terms(
        vars,
        terms
            .iter()
            .map(|(c, e)| (Monomial::new(e.to_vec()), r(*c))),
    )
    .unwrap()
}

fn zpoly(coeffs: &[i64]) -> MultiPoly {
    let z = VarSet::single("z");
    MultiPoly::from_terms(
        &z,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::new(vec![i as i32]), r(c))),
    )
    .unwrap()
}

/// `-1 + z^k`.
fn minus_one_plus(k: usize) -> MultiPoly {
    let mut c = vec![0; k + 1];
    c[0] = -1;
    c[k] = 1;
    zpoly(&c)
}

fn product(ps: &[MultiPoly]) -> MultiPoly {
    ps.iter().fold(zpoly(&[1]), |acc, p| &acc * p)
}

fn factored(num: MultiPoly, den: &[(&[i32], u32)]) -> FactoredRational {
    FactoredRational::new(
        num,
        den.iter()
            .map(|(e, mu)| BinomialFactor::new(Monomial::new(e.to_vec()), *mu)),
    )
    .unwrap()
}

/// Runs the command line in process and returns stdout.
fn cli(args: &str) -> Result<String, String> {
    let argv = std::iter::once("poincare").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = poincare_cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!(
            "`{args}` exited {code}: {}",
            String::from_utf8_lossy(&err).trim()
        ));
    }
    String::from_utf8(out).map_err(|e| e.to_string())
}

/// The rational function printed by `poincare <args> --format json`.
fn cli_rf(args: &str) -> Result<FactoredRational, String> {
    let text = cli(&format!("{args} --format json"))?;
    json::decode(&text).map_err(|e| format!("`{args}`: {e}"))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn matches(args: &str, expect: &FactoredRational) -> Check {
    let got = cli_rf(args)?;
    ensure(got.equals(expect), || {
        format!("`{args}` differs from the expected closed form")
    })
}

/// `got == num / den` for an arbitrary polynomial `den`.
fn matches_quotient(args: &str, num: &MultiPoly, den: &MultiPoly) -> Check {
    let got = cli_rf(args)?;
    let ok = got.numerator() * den == num * &got.expanded_denominator();
    ensure(ok, || {
        format!("`{args}` differs from the expected quotient")
    })
}

fn c1() -> Check {
    let num = zpoly(&[1, 1, 0, -1, -1, -1, 0, 1, 1]);
    let den = product(&[
        zpoly(&[-1, -1, -1, 0, 1, 1, 1]),
        zpoly(&[-1, -1, 0, 0, 0, 1, 1]),
        minus_one_plus(2),
        minus_one_plus(1),
    ]);
    matches_quotient("invariants 6", &num, &den)
}

fn c2() -> Check {
    let num = zpoly(&[1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1]);
    let den = product(&[
        zpoly(&[-1, -1, -1, 0, 1, 1, 1]),
        zpoly(&[-1, -1, 0, 0, 0, 1, 1]),
        minus_one_plus(2),
        minus_one_plus(1).pow(3),
    ]);
    matches_quotient("covariants 6", &num, &den)
}

fn c3() -> Check {
    let num = zpoly(&[1, 0, 0, 1, 2, 3, 3, 3, 2, 1, 0, 0, 1]);
    let den = product(&[
        minus_one_plus(4).pow(2),
        minus_one_plus(3).pow(2),
        minus_one_plus(1),
        minus_one_plus(2),
        zpoly(&[1, 1, 1, 1, 1]),
    ]);
    matches_quotient("invariants 1 2 3", &num, &den)
}

fn c4() -> Check {
    let expect = factored(zpoly(&[1, 0, 4, 0, 1]), &[(&[1], 3), (&[2], 5)]);
    matches("covariants 2 2 2", &expect)?;
    let closed = quadratic_closed(3, SeriesKind::Covariants).map_err(|e| e.to_string())?;
    ensure(closed.equals(&expect), || {
        "quadratic closed form differs".into()
    })
}

fn c5a() -> Check {
    let quartic = factored(zpoly(&[1, -1, 1]), &[(&[2], 1), (&[3], 1), (&[1], 2)]);
    matches("kernel 4", &quartic)
}

fn c5b() -> Check {
    let mixed = factored(
        zpoly(&[1, 2, 7, 11, 11, 11, 7, 2, 1]),
        &[(&[2], 3), (&[3], 3), (&[1], 2)],
    );
    matches("kernel 1 1 1 2", &mixed)
}

fn c6() -> Check {
    let zt = VarSet::new(["z", "t"]).unwrap();
    let num = poly(&zt, &[(1, &[2, 4]), (-1, &[1, 2]), (1, &[0, 0])]);
    let expect = factored(
        num,
        &[(&[1, 2], 1), (&[1, 4], 1), (&[2, 0], 1), (&[3, 0], 1)],
    );
    matches("bivariate 4", &expect)?;
    let f = cli_rf("bivariate 4")?;
    let e = |e: poincare::Error| e.to_string();
    let inv = springer_invariants(4).map_err(e)?;
    let cov = springer_covariants(4).map_err(e)?;
    ensure(at_t_zero(&f).map_err(e)?.equals(&inv), || {
        "t -> 0 differs".into()
    })?;
    ensure(at_t_one(&f).map_err(e)?.equals(&cov), || {
        "t -> 1 differs".into()
    })
}

fn c7a() -> Check {
    // Seven (-1 + m) factors: the printed fraction is -N / ∏(1 - m).
    let v = multivar_vars(3);
    let num = poly(
        &v,
        &[
            (1, &[2, 2, 2, 2]),
            (1, &[1, 2, 1, 1]),
            (-1, &[0, 1, 1, 1]),
            (-1, &[1, 1, 1, 0]),
            (1, &[1, 1, 1, 2]),
            (1, &[2, 1, 1, 1]),
            (-1, &[1, 0, 1, 1]),
            (-1, &[0, 0, 0, 0]),
        ],
    );
    let expect = factored(
        num.scale(&r(-1)),
        &[
            (&[0, 0, 1, 2], 1),
            (&[0, 0, 2, 0], 1),
            (&[0, 1, 0, 1], 1),
            (&[0, 2, 1, 0], 1),
            (&[1, 0, 0, 1], 1),
            (&[2, 0, 1, 0], 1),
            (&[1, 1, 0, 0], 1),
        ],
    );
    matches("multivar-covariants 1 1 2", &expect)
}

fn c7b() -> Check {
    let v = multivar_invariant_vars(2);
    let num = poly(&v, &[(1, &[4, 4]), (1, &[2, 2]), (1, &[0, 0])]);
    let expect = factored(
        num,
        &[
            (&[0, 2], 1),
            (&[0, 3], 1),
            (&[2, 1], 1),
            (&[1, 1], 1),
            (&[1, 2], 1),
            (&[2, 0], 1),
            (&[3, 0], 1),
        ],
    );
    matches("multivar-invariants 4 4", &expect)
}

const ORACLE_BATTERY: [&str; 10] = ["1", "2", "3", "4", "5", "6", "1 1", "1 2", "2 2", "1 2 3"];

fn c8() -> Check {
    for d in ORACLE_BATTERY {
        for cmd in ["invariants", "covariants"] {
            cli(&format!("{cmd} {d} --check 20"))?;
        }
    }
    Ok(())
}

fn identity(ok: poincare::Result<bool>, what: impl FnOnce() -> String) -> Check {
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(what()),
        Err(e) => Err(format!("{}: {e}", what())),
    }
}

fn omega_fundamentals() -> Check {
    let v = VarSet::new(["x", "y", "lambda"]).unwrap();
    let f = factored(MultiPoly::one(&v), &[(&[1, 0, 1], 1), (&[0, 1, -1], 1)]);
    let e = OmegaExpr::new(&f, "lambda").map_err(|e| e.to_string())?;
    let xy = VarSet::new(["x", "y"]).unwrap();
    let nonneg = factored(MultiPoly::one(&xy), &[(&[1, 0], 1), (&[1, 1], 1)]);
    let zero = factored(MultiPoly::one(&xy), &[(&[1, 1], 1)]);
    identity(omega_nonneg(&e).map(|g| g.equals(&nonneg)), || {
        "Omega>=0".into()
    })?;
    identity(omega_zero(&e).map(|g| g.equals(&zero)), || "Omega=0".into())
}

fn c9() -> Check {
    for n in 1..=8 {
        for kind in KINDS {
            let ok = joint_series(&deg(&[n]), kind).and_then(|j| Ok(j.equals(&springer(n, kind)?)));
            identity(ok, || format!("joint = Springer, {kind:?} d={n}"))?;
        }
    }
    for n in 1..=5u32 {
        let d = deg(&vec![1; n as usize]);
        for kind in KINDS {
            let ok =
                joint_series(&d, kind).and_then(|g| {
                    Ok(g.equals(&linear_closed(n, kind)?)
                        && g.equals(&linear_derivative_sum(n, kind)?))
                });
            identity(ok, || format!("linear closed forms, {kind:?} n={n}"))?;
        }
        if n >= 2 {
            let ok = linear_invariants_narayana(n)
                .and_then(|a| Ok(a.equals(&linear_derivative_sum(n, SeriesKind::Invariants)?)));
            identity(ok, || format!("Narayana form n={n}"))?;
        }
        let ok = quadratic_derivative_sum(n, SeriesKind::Covariants)
            .and_then(|a| Ok(a.equals(&quadratic_covariants_numerator_form(n)?)));
        identity(ok, || format!("quadratic closed forms n={n}"))?;
    }
    omega_fundamentals()?;
    for d in [&[1][..], &[2], &[1, 1], &[1, 2], &[1, 1, 2]] {
        let d = deg(d);
        let ok = (|| {
            let cov = collapse_degrees(&multivar_covariants(&d)?)?;
            let joint_cov = joint_series(&d, SeriesKind::Covariants)?;
            let joint_inv = joint_series(&d, SeriesKind::Invariants)?;
            let inv = collapse_invariant_degrees(&multivar_invariants(&d)?)?;
            Ok(at_t_one(&cov)?.equals(&joint_cov)
                && at_t_zero(&cov)?.equals(&joint_inv)
                && inv.equals(&joint_inv))
        })();
        identity(ok, || format!("specialization triangle d={d}"))?;
    }
    Ok(())
}

/// Every command the gate exercises, as it is typed.
fn produced_commands() -> Vec<String> {
    let mut out: Vec<String> = [
        "invariants 6",
        "covariants 6",
        "invariants 1 2 3",
        "covariants 2 2 2",
        "kernel 4",
        "kernel 1 1 1 2",
        "multivar-covariants 1 1 2",
        "multivar-invariants 4 4",
    ]
    .map(String::from)
    .to_vec();
    for d in ORACLE_BATTERY {
        for cmd in ["invariants", "covariants", "kernel"] {
            out.push(format!("{cmd} {d}"));
        }
    }
    for n in 1..=8 {
        out.push(format!("bivariate {n}"));
    }
    for d in ["1", "2", "1 1", "1 2"] {
        for cmd in ["multivar-covariants", "multivar-invariants"] {
            out.push(format!("{cmd} {d}"));
        }
    }
    out
}

fn c10() -> Check {
    let one = r(1);
    for cmd in produced_commands() {
        let text = cli(&format!("{cmd} --series 30 --format json"))?;
        let doc = json::decode_series(&text).map_err(|e| format!("`{cmd}`: {e}"))?;
        let mut constant = None;
        for (c, e) in &doc.terms {
            let c: Rational = c
                .parse()
                .map_err(|_| format!("`{cmd}`: bad coefficient {c}"))?;
            if !c.is_integer() || c < r(0) {
                return Err(format!("`{cmd}`: coefficient {c} at {e:?}"));
            }
            if e.iter().all(|&x| x == 0) {
                constant = Some(c);
            }
        }
        ensure(constant.as_ref() == Some(&one), || {
            format!("`{cmd}`: constant term {constant:?}")
        })?;
    }
    Ok(())
}

struct Criterion {
    id: &'static str,
    label: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn criteria() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion {
            id: "1",
            label: "invariants 6",
            limit: secs(5),
            run: c1,
        },
        Criterion {
            id: "2",
            label: "covariants 6",
            limit: secs(5),
            run: c2,
        },
        Criterion {
            id: "3",
            label: "invariants 1 2 3",
            limit: secs(10),
            run: c3,
        },
        Criterion {
            id: "4",
            label: "covariants 2 2 2 and the quadratic closed form",
            limit: secs(10),
            run: c4,
        },
        Criterion {
            id: "5a",
            label: "kernel 4",
            limit: secs(10),
            run: c5a,
        },
        Criterion {
            id: "5b",
            label: "kernel 1 1 1 2",
            limit: secs(10),
            run: c5b,
        },
        Criterion {
            id: "6",
            label: "bivariate 4 and its specializations",
            limit: secs(5),
            run: c6,
        },
        Criterion {
            id: "7a",
            label: "multivar-covariants 1 1 2",
            limit: secs(60),
            run: c7a,
        },
        Criterion {
            id: "7b",
            label: "multivar-invariants 4 4",
            limit: secs(60),
            run: c7b,
        },
        Criterion {
            id: "8",
            label: "oracle battery to order 20",
            limit: secs(120),
            run: c8,
        },
        Criterion {
            id: "9",
            label: "identity suite",
            limit: secs(120),
            run: c9,
        },
        Criterion {
            id: "10",
            label: "nonnegative integer series to order 30, constant term 1",
            limit: None,
            run: c10,
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let mut result = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, c.limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(()) => println!("PASS  [{}] {} ({elapsed:.2?})", c.id, c.label),
            Err(why) => {
                failed += 1;
                println!("FAIL  [{}] {} ({elapsed:.2?}): {why}", c.id, c.label);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
