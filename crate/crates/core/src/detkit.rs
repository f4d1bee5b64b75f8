//! The branch matrix `[M_ij]` and exact determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{binom_ext, binom_trunc};
use crate::groups::{BranchPair, DominantWeight, Family};
use crate::rational::{ExactRational, HalfInteger};

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<ExactRational>,
}

impl RationalMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ExactRational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[ExactRational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `u[i][j] = λ_i − μ_j + j − i` over `1 ≤ i, j ≤ n` with zero padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftTable {
    n: usize,
    u: Vec<i64>,
}

impl ShiftTable {
    /// One-based access.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.u[(i - 1) * self.n + (j - 1)]
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

pub fn shift_table(pair: &BranchPair, lambda: &DominantWeight, mu: &DominantWeight) -> ShiftTable {
    let n = pair.n();
    let mut u = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            u.push(lambda.get(i) - mu.get(j) + j as i64 - i as i64);
        }
    }
    ShiftTable { n, u }
}

/// Builds `[M_ij]`: truncated partition-function binomials in the first `m`
/// columns, family-specific dimension-type binomials in the rest.
pub fn build_branch_matrix(
    pair: &BranchPair,
    lambda: &DominantWeight,
    mu: &DominantWeight,
) -> RationalMatrix {
    let n = pair.n();
    let m = pair.m();
    let r = pair.r() as i64;
    let p = pair.big().size() as i64;
    let u = shift_table(pair, lambda, mu);
    RationalMatrix::from_fn(n, |i, j| {
        let (i, j) = (i + 1, j + 1);
        let uij = u.get(i, j);
        if j <= m {
            let v = binom_trunc(uij + r - 1, (r - 1) as u32);
            return BigRational::from_integer(v.into());
        }
        let (n, j) = (n as i64, j as i64);
        let (top, k) = match pair.family() {
            Family::GL => (HalfInteger::from_int(uij + n - j), n - j),
            Family::Sp => (HalfInteger::from_int(uij + 2 * n - 2 * j + 1), 2 * n - 2 * j + 1),
            // u + p - 2j - 1/2
            Family::SO => (HalfInteger::from_doubled(2 * (uij + p - 2 * j) - 1), p - 2 * j),
        };
        binom_ext(&top, k as u32)
    })
}

/// Exact determinant by fraction-free elimination. The empty matrix has
/// determinant one.
pub fn det_exact(matrix: &RationalMatrix) -> ExactRational {
    let n = matrix.size();
    // clear denominators row by row: det(A) = det(D A) / det(D)
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = matrix.row(i);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    BigRational::new(bareiss(rows), scale)
}

/// Bareiss elimination on an integer matrix; pivots on the first nonzero
/// entry of each column.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != k {
            a.swap(pivot, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Exact determinant by Gaussian elimination over the rationals. Agrees with
/// [`det_exact`]; kept as an independent second route.
pub fn det_rational_elimination(matrix: &RationalMatrix) -> ExactRational {
    let n = matrix.size();
    let mut a = matrix.clone();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return BigRational::zero();
        };
        if pivot != k {
            a.swap_rows(pivot, k);
            det = -det;
        }
        let pv = a.get(k, k).clone();
        det *= &pv;
        for i in k + 1..n {
            let factor = a.get(i, k) / &pv;
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &factor * a.get(k, j);
                a.entries[i * n + j] = v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ClassicalGroup;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRational {
        BigRational::new(n.into(), d.into())
    }

    fn pair(s: &str) -> BranchPair {
        s.parse().unwrap()
    }

    fn w(g: ClassicalGroup, parts: &[i64]) -> DominantWeight {
        DominantWeight::new(&g, parts.to_vec()).unwrap()
    }

    /// Signed sum over all permutations.
    fn leibniz(m: &RationalMatrix) -> ExactRational {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.size();
        let mut total = BigRational::zero();
        for sigma in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| sigma[i] > sigma[j])
                .count();
            let mut prod = BigRational::one();
            for (j, &s) in sigma.iter().enumerate() {
                prod *= m.get(s, j);
            }
            if inversions % 2 == 1 {
                total -= prod;
            } else {
                total += prod;
            }
        }
        total
    }

    #[test]
    fn shift_tables() {
        let p = pair("Sp:6/Sp:2");
        let u = shift_table(&p, &w(p.big(), &[2, 1, 0]), &w(p.small(), &[0]));
        assert_eq!((u.get(1, 1), u.get(2, 1), u.get(3, 1)), (2, 0, -2));

        let p = pair("GL:3/GL:1");
        let u = shift_table(&p, &w(p.big(), &[2, 1, 0]), &w(p.small(), &[1]));
        assert_eq!(u.get(1, 1), 1);

        let p = pair("SO:7/SO:2");
        let u = shift_table(&p, &DominantWeight::zero(&p.big()), &DominantWeight::zero(&p.small()));
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(u.get(i, j), j as i64 - i as i64);
            }
        }
    }

    #[test]
    fn symplectic_branch_matrix() {
        let p = pair("Sp:6/Sp:2");
        let m = build_branch_matrix(&p, &w(p.big(), &[2, 1, 0]), &w(p.small(), &[0]));
        assert_eq!(m, RationalMatrix::from_integers(&[&[10, 20, 5], &[1, 4, 3], &[0, 0, 1]]));
    }

    #[test]
    fn orthogonal_branch_matrix() {
        let p = pair("SO:7/SO:3");
        let m = build_branch_matrix(&p, &w(p.big(), &[2, 1, 0]), &w(p.small(), &[0]));
        let expect = RationalMatrix::from_rows(vec![
            vec![q(10, 1), q(231, 16), q(9, 2)],
            vec![q(1, 1), q(35, 16), q(5, 2)],
            vec![q(0, 1), q(-1, 16), q(1, 2)],
        ]);
        assert_eq!(m, expect);
        assert_eq!(det_exact(&m) * q(4, 1), q(20, 1));
    }

    #[test]
    fn general_linear_first_column() {
        let p = pair("GL:3/GL:1");
        let m = build_branch_matrix(&p, &w(p.big(), &[2, 1, 0]), &w(p.small(), &[2]));
        let col: Vec<_> = (0..3).map(|i| m.get(i, 0).clone()).collect();
        assert_eq!(col, vec![q(1, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn displayed_determinants() {
        let cases: [(&[&[i64]], i64); 3] = [
            (&[&[10, 20, 5], &[1, 4, 3], &[0, 0, 1]], 20),
            (&[&[4, 20, 5], &[0, 4, 3], &[0, 0, 1]], 16),
            (&[&[1, 20, 5], &[0, 4, 3], &[0, 0, 1]], 4),
        ];
        for (rows, expect) in cases {
            let m = RationalMatrix::from_integers(rows);
            assert_eq!(det_exact(&m), q(expect, 1));
            assert_eq!(det_rational_elimination(&m), q(expect, 1));
        }
    }

    #[test]
    fn degenerate_determinants() {
        assert_eq!(det_exact(&RationalMatrix::identity(0)), q(1, 1));
        assert_eq!(det_exact(&RationalMatrix::identity(4)), q(1, 1));
        let m = RationalMatrix::from_integers(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert_eq!(det_exact(&m), q(0, 1));
        // needs a row swap on the first pivot
        let m = RationalMatrix::from_integers(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_exact(&m), q(-1, 1));
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..=4).prop_flat_map(|n| {
            proptest::collection::vec((-6i64..=6, 1i64..=4), n * n).prop_map(move |v| {
                let mut it = v.into_iter();
                RationalMatrix::from_fn(n, |_, _| {
                    let (a, b) = it.next().unwrap();
                    q(a, b)
                })
            })
        })
    }

    proptest! {
        #[test]
        fn matches_leibniz_expansion(m in small_matrix()) {
            let expect = leibniz(&m);
            prop_assert_eq!(det_exact(&m), expect.clone());
            prop_assert_eq!(det_rational_elimination(&m), expect);
        }

        #[test]
        fn row_swap_negates(m in small_matrix(), a in 0usize..4, b in 0usize..4) {
            let n = m.size();
            let (a, b) = (a % n, b % n);
            prop_assume!(a != b);
            let mut swapped = m.clone();
            swapped.swap_rows(a, b);
            prop_assert_eq!(det_exact(&swapped), -det_exact(&m));
        }

        #[test]
        fn integer_matrices(v in proptest::collection::vec(-9i64..=9, 25)) {
            let m = RationalMatrix::from_fn(5, |i, j| q(v[i * 5 + j], 1));
            prop_assert_eq!(det_exact(&m), det_rational_elimination(&m));
        }
    }

    fn factorial(k: i64) -> BigInt {
        (1..=k).map(BigInt::from).product()
    }

    fn power_matrix(xs: &[i64], exp: impl Fn(i64) -> i64) -> RationalMatrix {
        let n = xs.len();
        RationalMatrix::from_fn(n, |i, j| {
            let e = exp(j as i64 + 1);
            BigRational::new(BigInt::from(xs[i]).pow(e as u32), factorial(e))
        })
    }

    proptest! {
        // det[x^{e_j}/e_j!] equals det of the matching binomial matrix for the
        // three column patterns used by the dimension formulas.
        #[test]
        fn factorial_and_binomial_determinants_agree(xs in proptest::collection::vec(-8i64..=8, 1..=5)) {
            let n = xs.len() as i64;
            let k = xs.len();

            let lhs = det_exact(&power_matrix(&xs, |j| n - j));
            let rhs = det_exact(&RationalMatrix::from_fn(k, |i, j| {
                binom_ext(&HalfInteger::from_int(xs[i]), (n - j as i64 - 1) as u32)
            }));
            prop_assert_eq!(lhs, rhs);

            let lhs = det_exact(&power_matrix(&xs, |j| 2 * n - 2 * j + 1));
            let rhs = det_exact(&RationalMatrix::from_fn(k, |i, j| {
                let j = j as i64 + 1;
                binom_ext(&HalfInteger::from_int(xs[i] + n - j), (2 * n - 2 * j + 1) as u32)
            }));
            prop_assert_eq!(lhs, rhs);

            let lhs = det_exact(&power_matrix(&xs, |j| 2 * n - 2 * j));
            let rhs = det_exact(&RationalMatrix::from_fn(k, |i, j| {
                let j = j as i64 + 1;
                let top = HalfInteger::from_doubled(2 * (xs[i] + n - j) - 1);
                binom_ext(&top, (2 * n - 2 * j) as u32)
            }));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
