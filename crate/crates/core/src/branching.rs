//! Branching multiplicities `m(λ, μ)` for `H ⊂ G` and the operations built
//! on them: interlacing, support enumeration, full decompositions, the
//! corank-two product formulas and cross-pair comparisons.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::detkit::{build_branch_matrix, det_exact};
use crate::error::{Error, Result};
use crate::groups::{BranchPair, ClassicalGroup, DominantWeight, Family};
use crate::rational::ExactRational;
use crate::weyl::{to_natural, weyl_dim_product};

/// The restriction `Π_λ|_H` as a list of `(μ, m(λ, μ))`, sorted by `μ`
/// lexicographically descending, with every multiplicity positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub pair: BranchPair,
    pub lambda: DominantWeight,
    pub rows: Vec<(DominantWeight, BigUint)>,
}

impl MultiplicityTable {
    pub fn get(&self, mu: &[i64]) -> BigUint {
        self.rows
            .iter()
            .find(|(m, _)| m.parts() == mu)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// `Σ c · dim Ψ_μ` over the table, counting both `±μ_m` constituents for
    /// an even orthogonal subgroup.
    pub fn dimension_sum(&self) -> Result<BigUint> {
        let small = self.pair.small();
        let mut total = BigUint::zero();
        for (mu, c) in &self.rows {
            total += c * weyl_dim_product(&small, mu)? * subgroup_copies(&small, mu);
        }
        Ok(total)
    }
}

/// Number of subgroup irreducibles sharing the parameter `μ`: two for
/// `SO(2m)` when `μ_m > 0` (highest weights `(…, ±μ_m)`), otherwise one.
pub fn subgroup_copies(small: &ClassicalGroup, mu: &DominantWeight) -> u32 {
    if small.is_even_orthogonal() && mu.parts().last().is_some_and(|&x| x > 0) {
        2
    } else {
        1
    }
}

fn check_weights(pair: &BranchPair, lambda: &DominantWeight, mu: &DominantWeight) -> Result<()> {
    lambda.check_rank(&pair.big())?;
    mu.check_rank(&pair.small())
}

/// `λ_i ≥ μ_i ≥ λ_{i+Δ}` for `1 ≤ i ≤ m`, with `λ` zero-padded.
pub fn interlaces(pair: &BranchPair, lambda: &DominantWeight, mu: &DominantWeight) -> bool {
    let delta = pair.delta();
    (1..=pair.m()).all(|i| lambda.get(i) >= mu.get(i) && mu.get(i) >= lambda.get(i + delta))
}

/// `2^l · det[M_ij]` without any interlacing shortcut.
pub fn determinant_value(
    pair: &BranchPair,
    lambda: &DominantWeight,
    mu: &DominantWeight,
) -> Result<ExactRational> {
    check_weights(pair, lambda, mu)?;
    let det = det_exact(&build_branch_matrix(pair, lambda, mu));
    Ok(det * BigRational::from_integer(BigInt::from(2).pow(pair.l() as u32)))
}

/// The branching multiplicity `m(λ, μ)`.
///
/// Outside the interlacing box the result is zero; debug builds still
/// evaluate the determinant there and fail if it is not zero.
pub fn multiplicity(pair: &BranchPair, lambda: &DominantWeight, mu: &DominantWeight) -> Result<BigUint> {
    check_weights(pair, lambda, mu)?;
    if !interlaces(pair, lambda, mu) {
        if cfg!(debug_assertions) {
            let value = determinant_value(pair, lambda, mu)?;
            if !value.is_zero() {
                return Err(Error::InterlacingMismatch {
                    mu: mu.parts().to_vec(),
                    value: value.to_string(),
                });
            }
        }
        return Ok(BigUint::zero());
    }
    let value = determinant_value(pair, lambda, mu)?;
    if value.is_zero() {
        return Err(Error::InterlacingMismatch {
            mu: mu.parts().to_vec(),
            value: value.to_string(),
        });
    }
    to_natural(value, "branching determinant")
}

/// All `μ` in the interlacing box, lexicographically descending.
pub fn support(pair: &BranchPair, lambda: &DominantWeight) -> Vec<DominantWeight> {
    fn descend(
        i: usize,
        m: usize,
        delta: usize,
        lambda: &DominantWeight,
        prefix: &mut Vec<i64>,
        out: &mut Vec<DominantWeight>,
    ) {
        if i > m {
            out.push(DominantWeight::from_parts(prefix.clone()).expect("box weights are dominant"));
            return;
        }
        let upper = match prefix.last() {
            Some(&prev) => prev.min(lambda.get(i)),
            None => lambda.get(i),
        };
        let lower = lambda.get(i + delta);
        for v in (lower..=upper).rev() {
            prefix.push(v);
            descend(i + 1, m, delta, lambda, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    descend(1, pair.m(), pair.delta(), lambda, &mut Vec::new(), &mut out);
    out
}

pub fn decompose(pair: &BranchPair, lambda: &DominantWeight) -> Result<MultiplicityTable> {
    lambda.check_rank(&pair.big())?;
    let rows = support(pair, lambda)
        .into_iter()
        .map(|mu| {
            let c = multiplicity(pair, lambda, &mu)?;
            Ok((mu, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable {
        pair: *pair,
        lambda: lambda.clone(),
        rows,
    })
}

/// `x_1 ≥ y_1 ≥ x_2 ≥ … ≥ y_{n-1} ≥ x_n`, the sorted merge of `λ` and the
/// zero-padded `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RearrangedChain {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl RearrangedChain {
    pub fn new(lambda: &DominantWeight, mu: &DominantWeight, n: usize) -> Self {
        let mut all: Vec<i64> = (1..=n)
            .map(|i| lambda.get(i))
            .chain((1..n).map(|j| mu.get(j)))
            .collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        let x = all.iter().step_by(2).copied().collect();
        let y = all.iter().skip(1).step_by(2).copied().collect();
        Self { x, y }
    }
}

/// Closed-form multiplicity for `GL^n_{n-2}`, `Sp^{2n}_{2n-2}`,
/// `SO^{2n+1}_{2n-1}` and `SO^{2n}_{2n-2}`.
pub fn product_formula(pair: &BranchPair, lambda: &DominantWeight, mu: &DominantWeight) -> Result<BigUint> {
    check_weights(pair, lambda, mu)?;
    if pair.delta() != 2 {
        return Err(Error::WrongCorank {
            pair: pair.to_string(),
        });
    }
    let n = pair.n();
    if !(1..n).all(|j| lambda.get(j) >= mu.get(j) && mu.get(j) >= lambda.get(j + 2)) {
        return Ok(BigUint::zero());
    }
    let chain = RearrangedChain::new(lambda, mu, n);
    let mut acc: BigUint = chain
        .x
        .iter()
        .zip(&chain.y)
        .map(|(x, y)| BigUint::from((x - y + 1) as u64))
        .product();
    let last = chain.x[n - 1] as u64;
    match pair.family() {
        Family::Sp => acc *= last + 1,
        Family::SO if pair.big().is_odd_orthogonal() => acc *= 2 * last + 1,
        _ => {}
    }
    Ok(acc)
}

/// Every non-increasing sequence of length `rank` with entries in
/// `0..=max_part`, lexicographically descending.
pub fn dominant_weights(rank: usize, max_part: i64) -> Vec<Vec<i64>> {
    fn go(rank: usize, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == rank {
            out.push(prefix.clone());
            return;
        }
        for v in (0..=cap).rev() {
            prefix.push(v);
            go(rank, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rank, max_part, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// `n/2 ≤ m < n`, `ℓ(μ) ≤ 2m − n`: all four pairs agree.
    ShortSubgroupWeight,
    /// `n/2 ≤ m < n`, `ℓ(λ) ≤ 2m − n`: all four pairs agree.
    ShortWeight,
    /// `0 ≤ m < n`, `ℓ(λ) ≤ m`: the symplectic and both orthogonal pairs agree.
    SymplecticOrthogonal,
    /// `m = n − 1`, `μ_{n−1} = 0`: all four corank-two pairs agree.
    CorankTwoVanishingTail,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::ShortSubgroupWeight => "clause 1 (len(mu) <= 2m-n)",
            Clause::ShortWeight => "clause 2 (len(lambda) <= 2m-n)",
            Clause::SymplecticOrthogonal => "clause 3 (len(lambda) <= m)",
            Clause::CorankTwoVanishingTail => "corank-2 remark (mu_{n-1} = 0)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseVerdict {
    pub clause: Clause,
    /// Whether the clause's hypotheses hold for this input.
    pub applicable: bool,
    /// Whether the predicted equality was observed; meaningful only when applicable.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairValue {
    pub pair: BranchPair,
    /// `None` when `μ` has nonzero parts beyond the subgroup rank.
    pub value: Option<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub n: usize,
    pub m: usize,
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub values: Vec<PairValue>,
    pub clauses: Vec<ClauseVerdict>,
}

impl ComparisonReport {
    pub fn value(&self, family: Family, big_size: u32) -> Option<&PairValue> {
        self.values
            .iter()
            .find(|v| v.pair.family() == family && v.pair.big().size() == big_size)
    }

    pub fn verdict(&self, clause: Clause) -> &ClauseVerdict {
        self.clauses
            .iter()
            .find(|c| c.clause == clause)
            .expect("every clause is reported")
    }

    /// No applicable clause was violated.
    pub fn consistent(&self) -> bool {
        self.clauses.iter().all(|c| !c.applicable || c.holds)
    }
}

/// Pads with zeros or drops trailing zeros to reach `rank`; `None` if a
/// nonzero part would have to be dropped.
fn fit(parts: &[i64], rank: usize) -> Option<Vec<i64>> {
    if parts.len() > rank && parts[rank..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut out = parts.to_vec();
    out.resize(rank, 0);
    Some(out)
}

fn group(family: Family, size: u32) -> Result<ClassicalGroup> {
    if size == 0 {
        Ok(ClassicalGroup::trivial(family))
    } else {
        ClassicalGroup::new(family, size)
    }
}

/// Evaluates `m(λ, μ)` on `GL^n_{2m−n}` (when `2m ≥ n`), `Sp^{2n}_{2m}`,
/// `SO^{2n+1}_{2m+1}` and `SO^{2n}_{2m}` and checks which equalities among
/// them are predicted and observed.
///
/// A pair whose subgroup rank is too small to carry `μ` reports `None`;
/// for the equality checks such a value counts as zero, since `μ` then does
/// not occur in the restriction.
pub fn compare_pairs(n: usize, m: usize, lambda: &[i64], mu: &[i64]) -> Result<ComparisonReport> {
    if n == 0 || m >= n {
        return Err(Error::BadRankWindow { n, m });
    }
    let lambda = fit(lambda, n).ok_or(Error::WrongLength {
        expected: n,
        got: lambda.len(),
    })?;
    let lambda_w = DominantWeight::from_parts(lambda.clone())?;
    DominantWeight::from_parts(mu.to_vec())?;
    let mu_len = mu.iter().take_while(|&&x| x != 0).count();

    let (n32, m32) = (n as u32, m as u32);
    let mut pairs = Vec::new();
    let has_gl = 2 * m >= n;
    if has_gl {
        pairs.push(BranchPair::new(
            group(Family::GL, n32)?,
            group(Family::GL, 2 * m32 - n32)?,
        )?);
    }
    pairs.push(BranchPair::new(group(Family::Sp, 2 * n32)?, group(Family::Sp, 2 * m32)?)?);
    pairs.push(BranchPair::new(
        group(Family::SO, 2 * n32 + 1)?,
        group(Family::SO, 2 * m32 + 1)?,
    )?);
    pairs.push(BranchPair::new(group(Family::SO, 2 * n32)?, group(Family::SO, 2 * m32)?)?);

    let mut values = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let value = match fit(mu, pair.m()) {
            Some(parts) => {
                let mu_w = DominantWeight::from_parts(parts)?;
                Some(multiplicity(&pair, &lambda_w, &mu_w)?)
            }
            None => None,
        };
        values.push(PairValue { pair, value });
    }

    let all_equal = |filter: &dyn Fn(&BranchPair) -> bool| {
        let vals: Vec<BigUint> = values
            .iter()
            .filter(|v| filter(&v.pair))
            .map(|v| v.value.clone().unwrap_or_default())
            .collect();
        vals.windows(2).all(|w| w[0] == w[1])
    };
    let every = all_equal(&|_| true);
    let non_linear = all_equal(&|p| p.family() != Family::GL);

    let short = if has_gl { 2 * m - n } else { 0 };
    let clauses = vec![
        ClauseVerdict {
            clause: Clause::ShortSubgroupWeight,
            applicable: has_gl && mu_len <= short,
            holds: every,
        },
        ClauseVerdict {
            clause: Clause::ShortWeight,
            applicable: has_gl && lambda_w.length() <= short,
            holds: every,
        },
        ClauseVerdict {
            clause: Clause::SymplecticOrthogonal,
            applicable: lambda_w.length() <= m,
            holds: non_linear,
        },
        ClauseVerdict {
            clause: Clause::CorankTwoVanishingTail,
            applicable: n >= 2 && m == n - 1 && mu_len <= n - 2,
            holds: every,
        },
    ];

    Ok(ComparisonReport {
        n,
        m,
        lambda,
        mu: mu.to_vec(),
        values,
        clauses,
    })
}
