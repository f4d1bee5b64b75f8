//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p branchkit --test acceptance -- --nocapture` to see them.

use branchkit::branching::{
    compare_pairs, decompose, determinant_value, dominant_weights, interlaces, multiplicity,
    product_formula, Clause,
};
use branchkit::detkit::{build_branch_matrix, det_exact, RationalMatrix};
use branchkit::oracle::{restrict_and_decompose, DEFAULT_MAX_DIM};
use branchkit::weyl::{weyl_dim_det, weyl_dim_product};
use branchkit::{BranchPair, ClassicalGroup, DominantWeight, ExactRational, Family};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, title: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{verdict}] {title}: {detail}");
    assert!(ok, "criterion {id} failed: {detail}");
}

fn pair(s: &str) -> BranchPair {
    s.parse().unwrap()
}

fn weight(parts: &[i64]) -> DominantWeight {
    DominantWeight::from_parts(parts.to_vec()).unwrap()
}

fn group(family: Family, size: u32) -> Option<ClassicalGroup> {
    if size == 0 {
        Some(ClassicalGroup::trivial(family))
    } else {
        ClassicalGroup::new(family, size).ok()
    }
}

/// Every valid pair whose big group has size at most `max_size`.
fn pairs_up_to(max_size: u32) -> Vec<BranchPair> {
    let mut out = Vec::new();
    for family in [Family::GL, Family::Sp, Family::SO] {
        for big in 1..=max_size {
            let Some(big) = group(family, big) else { continue };
            for small in 0..big.size() {
                let Some(small) = group(family, small) else { continue };
                if let Ok(p) = BranchPair::new(big, small) {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[test]
fn criterion_01_table_two() {
    let expected: [(&str, [u32; 3]); 6] = [
        ("Sp:6/Sp:2", [20, 16, 4]),
        ("SO:7/SO:3", [20, 20, 5]),
        ("SO:6/SO:2", [24, 16, 4]),
        ("SO:6/SO:3", [8, 12, 4]),
        ("SO:7/SO:2", [45, 25, 5]),
        ("GL:3/GL:1", [2, 4, 2]),
    ];
    let mut bad = Vec::new();
    for (p, want) in expected {
        let pr = pair(p);
        let table = decompose(&pr, &weight(&[2, 1, 0])).unwrap();
        let got: Vec<BigUint> = (0..3).map(|k| table.get(&[k])).collect();
        let want: Vec<BigUint> = want.iter().map(|&x| x.into()).collect();
        if got != want || table.rows.len() != 3 {
            bad.push(format!("{p}: got {got:?}"));
        }
    }
    report(1, "Table 2 reproduction", bad.is_empty(), &format!("6 pairs, mismatches {bad:?}"));
}

#[test]
fn criterion_02_table_three() {
    let mus: [[i64; 2]; 7] = [[0, 0], [1, 0], [1, 1], [2, 0], [2, 1], [3, 0], [3, 1]];
    let want: [u32; 7] = [45, 40, 10, 16, 4, 4, 1];
    let mut bad = Vec::new();
    for p in ["Sp:8/Sp:4", "SO:9/SO:5", "SO:8/SO:4"] {
        let table = decompose(&pair(p), &weight(&[3, 1, 0, 0])).unwrap();
        for (mu, &w) in mus.iter().zip(&want) {
            if table.get(mu) != BigUint::from(w) {
                bad.push(format!("{p} {mu:?}"));
            }
        }
        if table.rows.len() != 7 {
            bad.push(format!("{p}: {} rows", table.rows.len()));
        }
    }
    report(2, "Table 3 reproduction", bad.is_empty(), &format!("3 pairs x 7 weights, mismatches {bad:?}"));
}

fn q(n: i64, d: i64) -> ExactRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn criterion_03_displayed_determinants() {
    let mut ok = true;
    for (first, want) in [((10, 1), 20), ((4, 0), 16), ((1, 0), 4)] {
        let m = RationalMatrix::from_integers(&[&[first.0, 20, 5], &[first.1, 4, 3], &[0, 0, 1]]);
        ok &= det_exact(&m) == q(want, 1);
    }
    // (11/2)(9/2)(7/2)/3! and siblings, written out as in the worked example
    let cube = |a: i64| q(a * (a - 2) * (a - 4), 8 * 6);
    let p = pair("SO:7/SO:3");
    let lambda = weight(&[2, 1, 0]);
    for (k, col, want) in [(0, [10, 1, 0], 20), (1, [4, 0, 0], 20), (2, [1, 0, 0], 5)] {
        let m = RationalMatrix::from_rows(vec![
            vec![q(col[0], 1), cube(11), q(9, 2)],
            vec![q(col[1], 1), cube(7), q(5, 2)],
            vec![q(col[2], 1), cube(3), q(1, 2)],
        ]);
        ok &= det_exact(&m) * q(4, 1) == q(want, 1);
        ok &= build_branch_matrix(&p, &lambda, &weight(&[k])) == m;
    }
    report(3, "displayed determinant evaluations", ok, "20/16/4 and 2^2 x det = 20/20/5");
}

#[test]
fn criterion_04_dimension_formulas_agree() {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for family in [Family::GL, Family::Sp, Family::SO] {
        for rank in 1..=5u32 {
            let sizes: Vec<u32> = match family {
                Family::GL => vec![rank],
                Family::Sp => vec![2 * rank],
                Family::SO => vec![2 * rank, 2 * rank + 1],
            };
            for size in sizes {
                let g = ClassicalGroup::new(family, size).unwrap();
                for parts in dominant_weights(rank as usize, 4) {
                    let l = weight(&parts);
                    let a = weyl_dim_product(&g, &l).unwrap();
                    let b = weyl_dim_det(&g, &l).unwrap();
                    if a != b {
                        bad.push(format!("{g} {parts:?}: {a} vs {b}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    report(
        4,
        "Weyl product = determinant form",
        bad.is_empty(),
        &format!("{checked} (group, weight) cases, mismatches {bad:?}"),
    );
}

struct BoxScan {
    checked: usize,
    so_checked: usize,
    off_box: Vec<String>,
    non_integral: Vec<String>,
}

/// `2^l det` for every pair with big size at most 8, `λ_1 ≤ 3`, and every
/// dominant `μ` with `μ_1 ≤ λ_1`.
fn scan_box() -> BoxScan {
    let mut scan = BoxScan { checked: 0, so_checked: 0, off_box: Vec::new(), non_integral: Vec::new() };
    for p in pairs_up_to(8) {
        for lp in dominant_weights(p.n(), 3) {
            let lambda = weight(&lp);
            for mp in dominant_weights(p.m(), lp[0]) {
                let mu = weight(&mp);
                let value = determinant_value(&p, &lambda, &mu).unwrap();
                if p.family() == Family::SO {
                    scan.so_checked += 1;
                    if !value.is_integer() || value.is_negative() {
                        scan.non_integral.push(format!("{p} {lp:?} {mp:?} -> {value}"));
                    }
                }
                if interlaces(&p, &lambda, &mu) == value.is_zero() || value.is_negative() {
                    scan.off_box.push(format!("{p} {lp:?} {mp:?} -> {value}"));
                }
                scan.checked += 1;
            }
        }
    }
    scan
}

#[test]
fn criterion_05_interlacing_support() {
    let scan = scan_box();
    report(
        5,
        "multiplicity > 0 exactly on the interlacing box",
        scan.off_box.is_empty(),
        &format!(
            "{} cases over {} pairs, violations {:?}",
            scan.checked,
            pairs_up_to(8).len(),
            &scan.off_box[..scan.off_box.len().min(5)]
        ),
    );
}

#[test]
fn criterion_10_orthogonal_integrality() {
    let scan = scan_box();
    report(
        10,
        "SO: 2^l det is a non-negative integer",
        scan.non_integral.is_empty(),
        &format!(
            "{} SO cases, violations {:?}",
            scan.so_checked,
            &scan.non_integral[..scan.non_integral.len().min(5)]
        ),
    );
}

#[test]
fn criterion_06_dimension_sum() {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for p in pairs_up_to(8) {
        for lp in dominant_weights(p.n(), 3) {
            let lambda = weight(&lp);
            let table = decompose(&p, &lambda).unwrap();
            let lhs = table.dimension_sum().unwrap();
            let rhs = weyl_dim_product(&p.big(), &lambda).unwrap();
            if lhs != rhs {
                bad.push(format!("{p} {lp:?}: {lhs} vs {rhs}"));
            }
            checked += 1;
        }
    }
    report(
        6,
        "sum m(lambda,mu) dim(mu) = dim(lambda)",
        bad.is_empty(),
        &format!("{checked} (pair, lambda) cases, violations {bad:?}"),
    );
}

fn oracle_agrees(p: &BranchPair, lambda: &DominantWeight) -> bool {
    let table = decompose(p, lambda).unwrap();
    let oracle = restrict_and_decompose(p, lambda, DEFAULT_MAX_DIM).unwrap();
    oracle.agrees_with(&table)
}

#[test]
fn criterion_07_oracle_equivalence() {
    let mut fixed_bad = Vec::new();
    for p in ["Sp:6/Sp:2", "SO:7/SO:3", "SO:6/SO:2", "SO:6/SO:3", "SO:7/SO:2", "GL:3/GL:1"] {
        if !oracle_agrees(&pair(p), &weight(&[2, 1, 0])) {
            fixed_bad.push(p);
        }
    }
    for p in ["Sp:8/Sp:4", "SO:9/SO:5", "SO:8/SO:4"] {
        if !oracle_agrees(&pair(p), &weight(&[3, 1, 0, 0])) {
            fixed_bad.push(p);
        }
    }

    let candidates: Vec<BranchPair> = pairs_up_to(9).into_iter().filter(|p| p.n() <= 4).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b7a2);
    let mut random_bad = Vec::new();
    let mut done = 0usize;
    let mut signed_top = 0usize;
    while done < 120 {
        let p = candidates[rng.gen_range(0..candidates.len())];
        let mut parts: Vec<i64> = (0..p.n()).map(|_| rng.gen_range(0..=3)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = weight(&parts);
        let dim = weyl_dim_product(&p.big(), &lambda).unwrap();
        if dim > BigUint::from(DEFAULT_MAX_DIM) {
            continue;
        }
        if p.big().is_even_orthogonal() && parts.last().is_some_and(|&x| x > 0) {
            signed_top += 1;
        }
        if !oracle_agrees(&p, &lambda) {
            random_bad.push(format!("{p} {parts:?}"));
        }
        done += 1;
    }
    let ok = fixed_bad.is_empty() && random_bad.is_empty();
    report(
        7,
        "oracle decomposition = determinant decomposition",
        ok,
        &format!(
            "9 table inputs + {done} random (of which {signed_top} SO(2n) with lambda_n > 0), failures {fixed_bad:?} {random_bad:?}"
        ),
    );
}

#[test]
fn criterion_08_corank_two_products() {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for n in 1..=4u32 {
        let mut pairs = vec![
            format!("Sp:{}/Sp:{}", 2 * n, 2 * n - 2),
            format!("SO:{}/SO:{}", 2 * n + 1, 2 * n - 1),
            format!("SO:{}/SO:{}", 2 * n, 2 * n - 2),
        ];
        if n >= 2 {
            pairs.push(format!("GL:{}/GL:{}", n, n - 2));
        }
        for p in pairs {
            let p = pair(&p);
            for lp in dominant_weights(p.n(), 3) {
                let lambda = weight(&lp);
                for mp in dominant_weights(p.m(), lp[0]) {
                    let mu = weight(&mp);
                    let a = product_formula(&p, &lambda, &mu).unwrap();
                    let b = multiplicity(&p, &lambda, &mu).unwrap();
                    if a != b {
                        bad.push(format!("{p} {lp:?} {mp:?}: {a} vs {b}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    report(
        8,
        "corank-2 product formulas",
        bad.is_empty(),
        &format!("{checked} cases over 15 pairs, mismatches {bad:?}"),
    );
}

#[test]
fn criterion_09_cross_pair_comparison() {
    let mut applicable = [0usize; 4];
    let mut bad = Vec::new();
    let clauses = [
        Clause::ShortSubgroupWeight,
        Clause::ShortWeight,
        Clause::SymplecticOrthogonal,
        Clause::CorankTwoVanishingTail,
    ];
    for n in 1..=4usize {
        for m in 0..n {
            for lp in dominant_weights(n, 3) {
                for mp in dominant_weights(m, 3) {
                    let r = compare_pairs(n, m, &lp, &mp).unwrap();
                    for (k, c) in clauses.iter().enumerate() {
                        let v = r.verdict(*c);
                        if v.applicable {
                            applicable[k] += 1;
                            if !v.holds {
                                bad.push(format!("{c} n={n} m={m} {lp:?} {mp:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    let ok = bad.is_empty() && applicable.iter().all(|&c| c > 0);
    report(
        9,
        "cross-pair equalities",
        ok,
        &format!(
            "applicable cases: clause1={} clause2={} clause3={} remark={}, violations {:?}",
            applicable[0],
            applicable[1],
            applicable[2],
            applicable[3],
            &bad[..bad.len().min(5)]
        ),
    );
}

#[test]
fn multiplicity_zero_weight_is_one() {
    for p in pairs_up_to(8) {
        let v = multiplicity(&p, &DominantWeight::zero(&p.big()), &DominantWeight::zero(&p.small())).unwrap();
        assert_eq!(v, BigUint::from(1u32), "{p}");
    }
}
