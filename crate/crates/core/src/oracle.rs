//! Dimension counts computed directly from weights.
//!
//! The coefficient space of a form of degree `d` has torus weights
//! `d, d-2, …, -d`. Expanding `∏_k ∏_j 1/(1 - z_k w^{d_k - 2j})` counts the
//! monomials of each multidegree and weight; an irreducible representation
//! of highest weight `j` contributes once to weights `j` and `j+2` apart, so
//! `dim C_{m,j} = [w^j] - [w^{j+2}]`. Nothing here uses partial fractions,
//! multisections or Omega.

use crate::algebra::{Monomial, Rational, TruncSeries, VarSet};
use crate::degrees::DegreeList;
use crate::error::{Error, Result};

fn form_vars(n: usize, with_order: bool) -> VarSet {
    let names = (1..=n).map(|k| format!("z{k}"));
    let order = with_order.then(|| "t".to_string());
    VarSet::new(names.chain(order)).expect("distinct names")
}

/// Weight multiplicities on a box of multidegrees, optionally cut at a total
/// degree.
struct WeightTable {
    degrees: Vec<u32>,
    caps: Vec<usize>,
    strides: Vec<usize>,
    span: i64,
    width: usize,
    cells: Vec<u128>,
}

impl WeightTable {
    fn build(d: &DegreeList, caps: &[u32], total: Option<u32>) -> Self {
        let degrees = d.degrees().to_vec();
        let caps: Vec<usize> = caps.iter().map(|&c| c as usize).collect();
        let span: i64 = degrees
            .iter()
            .zip(&caps)
            .map(|(&dk, &c)| dk as i64 * c as i64)
            .sum();
        let width = (2 * span + 1) as usize;
        let mut strides = vec![0; caps.len()];
        let mut acc = width;
        for k in (0..caps.len()).rev() {
            strides[k] = acc;
            acc *= caps[k] + 1;
        }
        let mut t = WeightTable {
            degrees,
            caps,
            strides,
            span,
            width,
            cells: vec![0; acc],
        };
        t.cells[t.span as usize] = 1;
        let blocks = t.blocks();
        for k in 0..t.degrees.len() {
            let dk = t.degrees[k] as i64;
            for j in 0..=dk {
                t.divide(k, dk - 2 * j, total, &blocks);
            }
        }
        t
    }

    /// Multi-indices of every multidegree in the box, in increasing order of
    /// each coordinate.
    fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for &c in &self.caps {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=c).map(move |m| {
                        let mut q = p.clone();
                        q.push(m);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// In-place division by `1 - z_k w^e`.
    fn divide(&mut self, k: usize, e: i64, total: Option<u32>, blocks: &[Vec<usize>]) {
        for m in blocks {
            if m[k] == 0 || total.is_some_and(|t| m.iter().sum::<usize>() > t as usize) {
                continue;
            }
            let base = self.offset(m);
            let prev = base - self.strides[k];
            for w in 0..self.width as i64 {
                let src = w - e;
                if src < 0 || src >= self.width as i64 {
                    continue;
                }
                let v = self.cells[prev + src as usize];
                self.cells[base + w as usize] += v;
            }
        }
    }

    fn offset(&self, m: &[usize]) -> usize {
        m.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    fn at(&self, m: &[usize], w: i64) -> u128 {
        if w.abs() > self.span {
            return 0;
        }
        self.cells[self.offset(m) + (w + self.span) as usize]
    }

    /// Covariant dimension at multidegree `m` and order `j`.
    fn dim(&self, m: &[usize], j: i64) -> u128 {
        self.at(m, j) - self.at(m, j + 2)
    }
}

fn check_bounds(d: &DegreeList, caps: &[u32]) -> Result<()> {
    if caps.len() != d.len() {
        return Err(Error::Arity {
            expected: d.len(),
            got: caps.len(),
        });
    }
    if caps.contains(&0) {
        return Err(Error::OutOfRange("oracle bounds must be positive".into()));
    }
    Ok(())
}

/// `dim C_{m,j}` for every multidegree `m_k <= caps[k]`, over `(z1,…,zn,t)`.
/// The order bound is `Σ d_k caps[k]`, which no covariant in the box exceeds.
pub fn weight_oracle(d: &DegreeList, caps: &[u32]) -> Result<TruncSeries> {
    check_bounds(d, caps)?;
    let table = WeightTable::build(d, caps, None);
    let vars = form_vars(d.len(), true);
    let mut bounds: Vec<Option<i32>> = caps.iter().map(|&c| Some(c as i32)).collect();
    bounds.push(Some(table.span as i32));
    let mut coeffs = Vec::new();
    for m in table.blocks() {
        for j in 0..=table.span {
            let v = table.dim(&m, j);
            if v != 0 {
                let mut e: Vec<i32> = m.iter().map(|&x| x as i32).collect();
                e.push(j as i32);
                coeffs.push((Monomial::new(e), Rational::from_integer(v.into())));
            }
        }
    }
    TruncSeries::from_coefficients(&vars, bounds, coeffs)
}

/// `dim I_m` for every multidegree `m_k <= caps[k]`, over `(z1,…,zn)`.
pub fn weight_oracle_invariants(d: &DegreeList, caps: &[u32]) -> Result<TruncSeries> {
    check_bounds(d, caps)?;
    let table = WeightTable::build(d, caps, None);
    let vars = form_vars(d.len(), false);
    let bounds = caps.iter().map(|&c| Some(c as i32)).collect();
    let coeffs = table.blocks().into_iter().filter_map(|m| {
        let v = table.dim(&m, 0);
        (v != 0).then(|| {
            let e = m.iter().map(|&x| x as i32).collect();
            (Monomial::new(e), Rational::from_integer(v.into()))
        })
    });
    TruncSeries::from_coefficients(&vars, bounds, coeffs)
}

/// What a degree-graded count sums over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    /// Order zero only.
    Invariants,
    /// All orders.
    Covariants,
}

/// Dimensions of the total-degree pieces `0..=order` of the joint invariants
/// or covariants.
pub fn degree_dimensions(d: &DegreeList, order: u32, count: Count) -> Result<Vec<u128>> {
    if order == 0 {
        return Err(Error::OutOfRange("oracle order must be positive".into()));
    }
    let caps = vec![order; d.len()];
    let table = WeightTable::build(d, &caps, Some(order));
    let mut out = vec![0u128; order as usize + 1];
    for m in table.blocks() {
        let i: usize = m.iter().sum();
        if i > order as usize {
            continue;
        }
        out[i] += match count {
            Count::Invariants => table.dim(&m, 0),
            // Σ_{j>=0} ([w^j] - [w^{j+2}]) telescopes to [w^0] + [w^1].
            Count::Covariants => table.at(&m, 0) + table.at(&m, 1),
        };
    }
    Ok(out)
}

/// Coefficients of the Gaussian binomial `[n choose k]_q`, which count
/// partitions inside a `k × (n-k)` box by size.
fn gaussian_binomial(n: usize, k: usize) -> Vec<u128> {
    // rows[j] = [m choose j] for the current m.
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    for m in 1..=n {
        let mut next: Vec<Vec<u128>> = Vec::with_capacity(k + 1);
        for j in 0..=k.min(m) {
            if j == 0 || j == m {
                next.push(vec![1]);
                continue;
            }
            // [m j] = [m-1 j-1] + q^j [m-1 j]
            let a = &rows[j - 1];
            let b = &rows[j];
            let len = a.len().max(b.len() + j);
            let mut c = vec![0u128; len];
            for (i, v) in a.iter().enumerate() {
                c[i] += v;
            }
            for (i, v) in b.iter().enumerate() {
                c[i + j] += v;
            }
            next.push(c);
        }
        rows = next;
    }
    rows.swap_remove(k)
}

/// Cayley–Sylvester: `dim C_{i,j}` for a single form of degree `d` equals
/// `N(p) - N(p-1)` with `p = (d i - j)/2` and `N(p)` the number of
/// partitions of `p` into at most `i` parts of size at most `d`.
pub fn cayley_sylvester_dim(d: u32, i: u32, j: u32) -> u128 {
    let di = d as i64 * i as i64;
    let j = j as i64;
    if j > di || (di - j) % 2 != 0 {
        return 0;
    }
    let p = ((di - j) / 2) as usize;
    let counts = gaussian_binomial((d + i) as usize, i as usize);
    let n = |p: usize| counts.get(p).copied().unwrap_or(0);
    n(p) - if p == 0 { 0 } else { n(p - 1) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(d: &[u32]) -> DegreeList {
        DegreeList::new(d.to_vec()).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn linear_form_powers() {
        let s = weight_oracle(&deg(&[1]), &[6]).unwrap();
        assert_eq!(s.coefficient(&[3, 3]), r(1));
        assert_eq!(s.coefficient(&[3, 1]), r(0));
        assert_eq!(s.coefficient(&[0, 0]), r(1));
    }

    #[test]
    fn quadratic_discriminant() {
        let s = weight_oracle(&deg(&[2]), &[4]).unwrap();
        assert_eq!(s.coefficient(&[2, 0]), r(1));
        let inv = weight_oracle_invariants(&deg(&[2]), &[4]).unwrap();
        assert_eq!(inv.coefficient(&[2]), r(1));
        assert_eq!(inv.coefficient(&[3]), r(0));
    }

    #[test]
    fn bracket_of_two_linear_forms() {
        let inv = weight_oracle_invariants(&deg(&[1, 1]), &[3, 3]).unwrap();
        assert_eq!(inv.coefficient(&[1, 1]), r(1));
        assert_eq!(inv.coefficient(&[2, 0]), r(0));
        assert_eq!(inv.coefficient(&[2, 2]), r(1));
    }

    #[test]
    fn cayley_sylvester_examples() {
        assert_eq!(cayley_sylvester_dim(2, 2, 0), 1);
        assert_eq!(cayley_sylvester_dim(1, 5, 5), 1);
        assert_eq!(cayley_sylvester_dim(3, 2, 7), 0);
        assert_eq!(cayley_sylvester_dim(4, 3, 0), 1);
        assert_eq!(cayley_sylvester_dim(4, 2, 0), 1);
    }

    #[test]
    fn degree_counts_for_a_quartic() {
        // 1/((1-z^2)(1-z^3)) and (1-z+z^2)/((1-z)^2 (1-z^2)(1-z^3)).
        let inv = degree_dimensions(&deg(&[4]), 6, Count::Invariants).unwrap();
        assert_eq!(inv, vec![1, 0, 1, 1, 1, 1, 2]);
        let cov = degree_dimensions(&deg(&[4]), 4, Count::Covariants).unwrap();
        assert_eq!(cov, vec![1, 1, 3, 5, 8]);
    }

    #[test]
    fn rejects_empty_bounds() {
        assert!(weight_oracle(&deg(&[1]), &[0]).is_err());
        assert!(weight_oracle(&deg(&[1, 2]), &[3]).is_err());
        assert!(degree_dimensions(&deg(&[1]), 0, Count::Invariants).is_err());
    }
}
