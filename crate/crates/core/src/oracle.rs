//! Formula-independent branching: full weight multisets via Freudenthal's
//! recursion, restriction to the subgroup torus, and greedy peeling of
//! subgroup characters.
//!
//! Nothing here touches the determinant formulas. The only shared pieces are
//! the group model and the Weyl vector.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::branching::MultiplicityTable;
use crate::error::{Error, Result};
use crate::groups::{BranchPair, ClassicalGroup, DominantWeight, Family};
use crate::weyl::{rho, weyl_dim_product};

pub const DEFAULT_MAX_DIM: u64 = 50_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub group: ClassicalGroup,
    pub positives: Vec<Vec<i64>>,
}

pub fn positive_roots(group: &ClassicalGroup) -> RootSystem {
    let n = group.rank();
    let unit = |i: usize, s: i64| {
        let mut v = vec![0; n];
        v[i] = s;
        v
    };
    let mut positives = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = vec![0; n];
            minus[i] = 1;
            minus[j] = -1;
            positives.push(minus);
            if group.family() != Family::GL {
                let mut plus = vec![0; n];
                plus[i] = 1;
                plus[j] = 1;
                positives.push(plus);
            }
        }
    }
    match group.family() {
        Family::Sp => positives.extend((0..n).map(|i| unit(i, 2))),
        Family::SO if group.is_odd_orthogonal() => positives.extend((0..n).map(|i| unit(i, 1))),
        _ => {}
    }
    RootSystem {
        group: *group,
        positives,
    }
}

/// Integer weights of a representation with their multiplicities.
type Reflection = Box<dyn Fn(&mut Vec<i64>)>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    pub weights: BTreeMap<Vec<i64>, BigUint>,
}

impl WeightMultiset {
    pub fn total_mass(&self) -> BigUint {
        self.weights.values().sum()
    }

    pub fn get(&self, weight: &[i64]) -> BigUint {
        self.weights.get(weight).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Keeps the first `m` coordinates of every weight.
    pub fn project(&self, m: usize) -> WeightMultiset {
        let mut out: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
        for (w, c) in &self.weights {
            *out.entry(w[..m].to_vec()).or_default() += c;
        }
        WeightMultiset { weights: out }
    }

    /// Invariance under the simple reflections of the family's Weyl group.
    pub fn is_weyl_invariant(&self, group: &ClassicalGroup) -> bool {
        let n = group.rank();
        let mut generators: Vec<Reflection> = Vec::new();
        for i in 0..n.saturating_sub(1) {
            generators.push(Box::new(move |v: &mut Vec<i64>| v.swap(i, i + 1)));
        }
        if n >= 1 {
            match group.family() {
                Family::Sp | Family::SO if !group.is_even_orthogonal() => {
                    generators.push(Box::new(move |v: &mut Vec<i64>| v[n - 1] = -v[n - 1]));
                }
                Family::SO if n >= 2 => {
                    generators.push(Box::new(move |v: &mut Vec<i64>| {
                        let (a, b) = (v[n - 2], v[n - 1]);
                        v[n - 2] = -b;
                        v[n - 1] = -a;
                    }));
                }
                _ => {}
            }
        }
        generators.iter().all(|s| {
            self.weights.iter().all(|(w, c)| {
                let mut image = w.clone();
                s(&mut image);
                self.weights.get(&image) == Some(c)
            })
        })
    }
}

/// Representative of the Weyl orbit of `v` in the dominant chamber.
fn dominant_representative(group: &ClassicalGroup, v: &[i64]) -> Vec<i64> {
    match group.family() {
        Family::GL => {
            let mut out = v.to_vec();
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
        _ => {
            let mut out: Vec<i64> = v.iter().map(|x| x.abs()).collect();
            out.sort_unstable_by(|a, b| b.cmp(a));
            if group.is_even_orthogonal() {
                let negatives = v.iter().filter(|&&x| x < 0).count();
                let last = out.len() - 1;
                if negatives % 2 == 1 && out[last] != 0 {
                    out[last] = -out[last];
                }
            }
            out
        }
    }
}

/// Height of `hw − v` in simple-root coordinates, or `None` if `v` is not
/// below `hw` in the dominance order.
fn depth_below(group: &ClassicalGroup, hw: &[i64], v: &[i64]) -> Option<i64> {
    let n = hw.len();
    if n == 0 {
        return Some(0);
    }
    let d: Vec<i64> = hw.iter().zip(v).map(|(a, b)| a - b).collect();
    let partial: Vec<i64> = d
        .iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect();
    let total = partial[n - 1];
    let type_a = &partial[..n - 1];
    match group.family() {
        Family::GL => {
            (total == 0 && type_a.iter().all(|&s| s >= 0)).then(|| type_a.iter().sum())
        }
        Family::Sp => (total >= 0 && total % 2 == 0 && type_a.iter().all(|&s| s >= 0))
            .then(|| type_a.iter().sum::<i64>() + total / 2),
        Family::SO if group.is_odd_orthogonal() => {
            (total >= 0 && type_a.iter().all(|&s| s >= 0)).then(|| partial.iter().sum())
        }
        Family::SO => {
            if n == 1 {
                return (total == 0).then_some(0);
            }
            // ε_{n-1} + ε_n carries coefficient total/2, ε_{n-1} − ε_n the rest
            if total % 2 != 0 || total < 0 {
                return None;
            }
            let b = total / 2;
            let a = partial[n - 2] - b;
            let head = &partial[..n - 2];
            (a >= 0 && head.iter().all(|&s| s >= 0)).then(|| head.iter().sum::<i64>() + a + b)
        }
    }
}

/// Candidate dominant weights inside the box spanned by `hw`.
fn dominant_candidates(group: &ClassicalGroup, hw: &[i64]) -> Vec<Vec<i64>> {
    let n = hw.len();
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    match group.family() {
        Family::GL => {
            let (lo, hi) = (hw[n - 1], hw[0]);
            fn go(n: usize, lo: i64, cap: i64, p: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
                if p.len() == n {
                    out.push(p.clone());
                    return;
                }
                for x in lo..=cap {
                    p.push(x);
                    go(n, lo, x, p, out);
                    p.pop();
                }
            }
            go(n, lo, hi, &mut prefix, &mut out);
        }
        _ => {
            let hi = hw.iter().map(|x| x.abs()).max().unwrap_or(0);
            let even = group.is_even_orthogonal();
            fn go(n: usize, even: bool, cap: i64, p: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
                if p.len() == n {
                    out.push(p.clone());
                    return;
                }
                let lo = if even && p.len() == n - 1 { -cap } else { 0 };
                for x in lo..=cap {
                    p.push(x);
                    go(n, even, x.abs(), p, out);
                    p.pop();
                }
            }
            go(n, even, hi, &mut prefix, &mut out);
        }
    }
    out
}

/// Dominant-chamber multiplicities of the irreducible module with highest
/// weight `hw` (any dominant integral weight of the family, including
/// negative entries for `GL` and a negative last entry for even `SO`).
fn dominant_multiplicities(group: &ClassicalGroup, hw: &[i64]) -> HashMap<Vec<i64>, BigInt> {
    let roots = positive_roots(group).positives;
    let two_rho = rho(group).doubled();
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };

    let mut levels: Vec<(i64, Vec<i64>)> = dominant_candidates(group, hw)
        .into_iter()
        .filter_map(|v| depth_below(group, hw, &v).map(|d| (d, v)))
        .collect();
    levels.sort();

    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::new();
    for (depth, mu) in levels {
        if depth == 0 {
            mult.insert(mu, BigInt::from(1));
            continue;
        }
        // (|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) (μ+kα, α)
        let sum: Vec<i64> = hw.iter().zip(&mu).zip(&two_rho).map(|((a, b), r)| a + b + r).collect();
        let diff: Vec<i64> = hw.iter().zip(&mu).map(|(a, b)| a - b).collect();
        let denom = dot(&diff, &sum);
        let mut numer = BigInt::zero();
        for alpha in &roots {
            let mut shifted = mu.clone();
            loop {
                for (s, a) in shifted.iter_mut().zip(alpha) {
                    *s += a;
                }
                let rep = dominant_representative(group, &shifted);
                let Some(c) = mult.get(&rep) else { break };
                if c.is_zero() {
                    break;
                }
                numer += c * dot(&shifted, alpha);
            }
        }
        numer *= 2;
        debug_assert!(denom > 0);
        let value = &numer / denom;
        debug_assert!((&value * denom) == numer, "Freudenthal quotient is exact");
        mult.insert(mu, value);
    }
    mult
}

/// All distinct images of `v` under the family's coordinate Weyl action.
fn orbit(group: &ClassicalGroup, v: &[i64]) -> Vec<Vec<i64>> {
    let mut base: Vec<Vec<i64>> = vec![v.to_vec()];
    if group.family() != Family::GL {
        for i in 0..v.len() {
            let mut next = Vec::with_capacity(base.len() * 2);
            for w in base {
                if w[i] != 0 {
                    let mut f = w.clone();
                    f[i] = -f[i];
                    next.push(f);
                }
                next.push(w);
            }
            base = next;
        }
        if group.is_even_orthogonal() {
            let target = v.iter().filter(|&&x| x < 0).count() % 2;
            let has_zero = v.contains(&0);
            base.retain(|w| has_zero || w.iter().filter(|&&x| x < 0).count() % 2 == target);
        }
    }
    let mut out = Vec::new();
    for w in base {
        permutations_into(&w, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn permutations_into(v: &[i64], out: &mut Vec<Vec<i64>>) {
    let mut a = v.to_vec();
    a.sort();
    loop {
        out.push(a.clone());
        // next lexicographic permutation
        let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
            return;
        };
        let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
        a.swap(i - 1, j);
        a[i..].reverse();
    }
}

fn weights_of(group: &ClassicalGroup, hw: &[i64]) -> WeightMultiset {
    let mut weights = BTreeMap::new();
    for (dominant, c) in dominant_multiplicities(group, hw) {
        if c.is_zero() {
            continue;
        }
        let c = c.to_biguint().expect("multiplicities are non-negative");
        for w in orbit(group, &dominant) {
            weights.insert(w, c.clone());
        }
    }
    WeightMultiset { weights }
}

/// Weight multiset of `Π_λ`, refusing representations above `max_dim`.
pub fn weight_multiplicities_capped(
    group: &ClassicalGroup,
    lambda: &DominantWeight,
    max_dim: u64,
) -> Result<WeightMultiset> {
    let dim = weyl_dim_product(group, lambda)?;
    if dim > BigUint::from(max_dim) {
        return Err(Error::ScaleExceeded {
            dim: dim.to_string(),
            cap: max_dim,
        });
    }
    Ok(weights_of(group, lambda.parts()))
}

pub fn weight_multiplicities(group: &ClassicalGroup, lambda: &DominantWeight) -> Result<WeightMultiset> {
    weight_multiplicities_capped(group, lambda, DEFAULT_MAX_DIM)
}

/// Oracle decomposition. For an even orthogonal subgroup the rows include
/// highest weights with a negative last coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleDecomposition {
    pub pair: BranchPair,
    pub lambda: DominantWeight,
    pub rows: Vec<(Vec<i64>, BigUint)>,
}

impl OracleDecomposition {
    pub fn get(&self, mu: &[i64]) -> BigUint {
        self.rows
            .iter()
            .find(|(m, _)| m == mu)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Rows `(…, −μ_m)` and `(…, +μ_m)` carry equal multiplicities; other
/// families have no signed rows at all.
    pub fn sign_symmetric(&self) -> bool {
        if !self.pair.small().is_even_orthogonal() {
            return self.rows.iter().all(|(mu, _)| mu.iter().all(|&x| x >= 0));
        }
        self.rows.iter().all(|(mu, c)| match mu.last() {
            Some(&x) if x != 0 => {
                let mut flipped = mu.clone();
                *flipped.last_mut().unwrap() = -x;
                self.get(&flipped) == *c
            }
            _ => true,
        })
    }

    /// Rows with non-negative entries, as a formula-comparable table.
    pub fn non_negative_part(&self) -> MultiplicityTable {
        let rows = self
            .rows
            .iter()
            .filter(|(mu, _)| mu.iter().all(|&x| x >= 0))
            .map(|(mu, c)| {
                (
                    DominantWeight::from_parts(mu.clone()).expect("oracle rows are dominant"),
                    c.clone(),
                )
            })
            .collect();
        MultiplicityTable {
            pair: self.pair,
            lambda: self.lambda.clone(),
            rows,
        }
    }

    /// Equal to `table` on non-negative rows and symmetric under `μ_m ↦ −μ_m`.
    pub fn agrees_with(&self, table: &MultiplicityTable) -> bool {
        let ours: BTreeMap<_, _> = self.non_negative_part().rows.into_iter().collect();
        let theirs: BTreeMap<_, _> = table.rows.iter().cloned().collect();
        self.sign_symmetric() && ours.len() == table.rows.len() && ours == theirs
    }
}

/// Orders weights by coordinate sum, then lexicographically.
fn peel_key(w: &[i64]) -> (i64, &[i64]) {
    (w.iter().sum(), w)
}

pub fn restrict_and_decompose(
    pair: &BranchPair,
    lambda: &DominantWeight,
    max_dim: u64,
) -> Result<OracleDecomposition> {
    let big = pair.big();
    let small = pair.small();
    let full = weight_multiplicities_capped(&big, lambda, max_dim)?;
    let mut remaining: BTreeMap<Vec<i64>, BigInt> = full
        .project(pair.m())
        .weights
        .into_iter()
        .map(|(w, c)| (w, BigInt::from(c)))
        .collect();

    let mut cache: HashMap<Vec<i64>, WeightMultiset> = HashMap::new();
    let mut rows = Vec::new();
    while let Some((top, c)) = remaining
        .iter()
        .max_by(|a, b| peel_key(a.0).cmp(&peel_key(b.0)))
        .map(|(w, c)| (w.clone(), c.clone()))
    {
        let character = cache
            .entry(top.clone())
            .or_insert_with(|| weights_of(&small, &top));
        for (w, k) in &character.weights {
            let entry = remaining.entry(w.clone()).or_default();
            *entry -= &c * BigInt::from(k.clone());
            if entry.is_negative() {
                return Err(Error::NegativeRemainder { weight: w.clone() });
            }
            if entry.is_zero() {
                remaining.remove(w);
            }
        }
        rows.push((top, c.to_biguint().expect("positive")));
    }
    rows.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(OracleDecomposition {
        pair: *pair,
        lambda: lambda.clone(),
        rows,
    })
}

/// Total dimension of an oracle decomposition, `Σ c · dim Ψ_μ` over all
/// rows (signed rows included).
pub fn oracle_dimension_sum(decomposition: &OracleDecomposition) -> BigUint {
    let small = decomposition.pair.small();
    decomposition
        .rows
        .iter()
        .map(|(mu, c)| {
            let mass = weights_of(&small, mu).total_mass();
            c * mass
        })
        .sum()
}

/// Convenience for reporting: the multiplicity as a `u64` when it fits.
pub fn small_value(v: &BigUint) -> Option<u64> {
    v.to_u64()
}
