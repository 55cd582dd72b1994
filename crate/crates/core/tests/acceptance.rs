//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its scope and timing. Every comparison is exact; there are no
//! tolerances anywhere.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use delta2_core::delta_core::{
    delta_e1_closed, delta_e1_coefficient, extract_certificate, f_poly, g_coefficient,
    g_raw_quotient, reconstruct,
};
use delta2_core::delta_e3::{delta3_coefficient, delta3_via_f_samplecheck};
use delta2_core::enriched::{g_via_all_enriched, g_via_leftovers, injection_accounting};
use delta2_core::genfun::{build_f, check_f_properties, g_from_series};
use delta2_core::qt_algebra::{qt_analog, qt_range, QtPoly};
use delta2_core::recursion::{
    check_00n_count, check_qt1, check_rank, g_00k_closed, g_a0k_closed, g_block_bruteforce,
    g_via_recursion, BlockArgs, ThreePartShape,
};
use delta2_core::shapes::Partition;

fn report(criterion: u32, elapsed: Duration, what: &str) {
    println!(
        "criterion {criterion}: PASS ({:.3}s) - {what}",
        elapsed.as_secs_f64()
    );
}

fn assert_within(criterion: u32, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_01_golden_values() {
    let start = Instant::now();
    let g14 = g_coefficient(&Partition::new(vec![1, 1, 1, 1])).unwrap();
    let expected14 = qt_analog(2)
        + qt_analog(3)
        + qt_analog(4).scale_i64(2)
        + qt_analog(5)
        + qt_analog(6)
        + (QtPoly::one() + qt_analog(2) + qt_analog(3)).mul_monomial(1, 1);
    assert_eq!(g14, expected14, "g for (1,1,1,1)");

    let g211 = g_coefficient(&Partition::new(vec![2, 1, 1])).unwrap();
    let expected211 = qt_analog(1)
        + qt_analog(2).scale_i64(2)
        + qt_analog(3).scale_i64(3)
        + qt_analog(4).scale_i64(2)
        + qt_analog(5)
        + (QtPoly::one() + qt_analog(2)).mul_monomial(1, 1);
    assert_eq!(g211, expected211, "g for (2,1,1)");

    let elapsed = start.elapsed();
    assert_within(1, elapsed, Duration::from_secs(1));
    report(1, elapsed, "golden expansions for (1,1,1,1) and (2,1,1)");
}

#[test]
fn criterion_02_block_expansions() {
    let start = Instant::now();
    let expected5 =
        qt_range(5, 8) + qt_range(3, 5).mul_monomial(1, 1) + qt_analog(2).mul_monomial(2, 2);
    assert_eq!(g_00k_closed(5), expected5, "g[0,0,5]");

    let expected12 = qt_range(12, 22)
        + qt_range(10, 19).mul_monomial(1, 1)
        + qt_range(9, 16).mul_monomial(2, 2)
        + qt_range(7, 13).mul_monomial(3, 3)
        + qt_range(6, 10).mul_monomial(4, 4)
        + qt_range(4, 7).mul_monomial(5, 5)
        + qt_range(3, 4).mul_monomial(6, 6)
        + qt_analog(1).mul_monomial(7, 7);
    assert_eq!(g_00k_closed(12), expected12, "g[0,0,12]");

    let elapsed = start.elapsed();
    assert_within(2, elapsed, Duration::from_secs(1));
    report(2, elapsed, "printed block expansions at k = 5 and k = 12");
}

#[test]
fn criterion_03_four_method_agreement() {
    let start = Instant::now();
    let mut shapes = 0u32;
    for n in 0..=12u32 {
        for shape in ThreePartShape::all_of(n) {
            let lambda = shape.to_partition();
            let reference = g_coefficient(&lambda).unwrap();
            assert_eq!(
                g_raw_quotient(&lambda).unwrap(),
                reference,
                "raw quotient at {lambda}"
            );
            assert_eq!(
                g_via_recursion(shape),
                reference,
                "recursion at {lambda}"
            );
            assert_eq!(
                g_via_all_enriched(&lambda).unwrap(),
                reference,
                "all-enriched at {lambda}"
            );
            assert_eq!(g_via_leftovers(&lambda), reference, "leftovers at {lambda}");
            shapes += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_within(3, elapsed, Duration::from_secs(300));
    report(
        3,
        elapsed,
        &format!("five routes agree on {shapes} shapes with parts <= 3, n <= 12"),
    );
}

#[test]
fn criterion_04_positivity_certificates() {
    let start = Instant::now();
    let mut checked = 0u32;
    for n in 0..=12u32 {
        for lambda in Partition::all_of(n) {
            let f = f_poly(&lambda).unwrap();
            let cert = extract_certificate(&f);
            assert!(cert.is_positive(), "certificate for {lambda}");
            assert_eq!(
                reconstruct(&cert),
                g_coefficient(&lambda).unwrap(),
                "reconstruction for {lambda}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        4,
        elapsed,
        &format!("positive certificates reconstruct g for all {checked} shapes, n <= 12"),
    );
}

#[test]
fn criterion_05_injection_accounting() {
    let start = Instant::now();
    let mut shapes = 0u32;
    for n in 0..=10u32 {
        for shape in Partition::all_of(n) {
            let acc = injection_accounting(&shape);
            assert!(acc.monotone_ok(), "monotonicity for {shape}");
            assert!(acc.exact_ok(), "exact accounting for {shape}");
            assert!(acc.leftovers_are_t_heavy(), "leftover classes for {shape}");
            shapes += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_within(5, elapsed, Duration::from_secs(120));
    report(
        5,
        elapsed,
        &format!("count differences equal leftover counts on {shapes} shapes, |shape| <= 10"),
    );
}

#[test]
fn criterion_06_specializations() {
    let start = Instant::now();
    for n in 2..=12 {
        assert!(check_qt1(n).unwrap(), "q=t=1 value at n = {n}");
    }
    let samples = [
        BigRational::from_integer(2.into()),
        BigRational::from_integer(3.into()),
        BigRational::new(BigInt::from(5), BigInt::from(2)),
    ];
    for n in 2..=10 {
        assert!(check_rank(n, &samples).unwrap(), "t = 1/q rank at n = {n}");
    }
    for n in 2..=15 {
        assert!(check_00n_count(n), "2 C(n+1,3) count at n = {n}");
    }
    let elapsed = start.elapsed();
    report(
        6,
        elapsed,
        "q=t=1 values (n <= 12), t=1/q rank identity at 2, 3, 5/2 (n <= 10), block counts (n <= 15)",
    );
}

#[test]
fn criterion_07_delta_e1() {
    let start = Instant::now();
    let mut checked = 0u32;
    for n in 0..=10u32 {
        for lambda in Partition::all_of(n) {
            assert_eq!(
                delta_e1_coefficient(&lambda).unwrap(),
                delta_e1_closed(&lambda),
                "degree-1 routes at {lambda}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        7,
        elapsed,
        &format!("degree-1 coefficient matches the closed form on {checked} shapes, n <= 10"),
    );
}

#[test]
fn criterion_08_generating_function() {
    let start = Instant::now();
    let bound = 5;
    let props = check_f_properties(bound);
    assert!(props.nonnegative, "F has a negative coefficient");
    assert!(props.t_heavy, "F has a non-t-dominant monomial");

    let f = build_f(bound);
    let mut checked = 0u32;
    for a in 0..=bound {
        for b in 0..=bound - a {
            for c in 0..=bound - a - b {
                let got = g_from_series(&f, a, b, c).unwrap();
                let mut parts: Vec<u32> = Vec::new();
                parts.extend(std::iter::repeat_n(3, c as usize));
                parts.extend(std::iter::repeat_n(2, b as usize));
                parts.extend(std::iter::repeat_n(1, a as usize));
                let lambda = if parts.is_empty() {
                    Partition::empty()
                } else {
                    Partition::new(parts)
                };
                assert_eq!(
                    got,
                    g_coefficient(&lambda).unwrap(),
                    "series coefficient at ({a},{b},{c})"
                );
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert_within(8, elapsed, Duration::from_secs(120));
    report(
        8,
        elapsed,
        &format!(
            "seven-term F: nonnegative, t-heavy, {} qt-terms scanned; g agrees at {checked} coefficients to u-degree 5",
            props.terms_scanned
        ),
    );
}

#[test]
fn criterion_09_delta_e3() {
    let start = Instant::now();
    // n = 3 operator identity
    for lambda in Partition::all_of(3) {
        let d3 = delta3_coefficient(&lambda).unwrap();
        let mut expected =
            g_coefficient(&lambda).unwrap() - delta_e1_coefficient(&lambda).unwrap();
        if lambda.parts() == [1, 1, 1] {
            expected += QtPoly::one();
        }
        assert_eq!(d3, expected, "degree-3 identity at {lambda}");
    }
    // polynomiality and tau symmetry through n = 7
    for n in 0..=7u32 {
        for lambda in Partition::all_of(n) {
            let d3 = delta3_coefficient(&lambda)
                .unwrap_or_else(|e| panic!("non-polynomial at {lambda}: {e}"));
            assert!(d3.is_tau_symmetric(), "tau symmetry at {lambda}");
        }
    }
    // sample check against the partial-fraction formula through n = 6
    let rat = |n: i64| BigRational::from_integer(n.into());
    let samples = [
        (rat(2), rat(3)),
        (rat(5), rat(2)),
        (rat(3), rat(5)),
    ];
    for n in 0..=6u32 {
        for lambda in Partition::all_of(n) {
            assert!(
                delta3_via_f_samplecheck(&lambda, &samples).unwrap(),
                "sample check at {lambda}"
            );
        }
    }
    let elapsed = start.elapsed();
    report(
        9,
        elapsed,
        "degree-3: n = 3 identity, polynomial + tau-symmetric to n = 7, 3-point sample check to n = 6",
    );
}

#[test]
fn criterion_10_shift_formula_correction() {
    let start = Instant::now();
    assert_eq!(g_a0k_closed(1, 0), qt_analog(1), "g[1,0,0]");
    assert_eq!(g_a0k_closed(1, 1), qt_analog(2) + qt_analog(3), "g[1,0,1]");
    assert_eq!(
        g_a0k_closed(1, 2),
        qt_analog(2).mul_monomial(1, 1) + qt_range(3, 5),
        "g[1,0,2]"
    );
    for a in 0..=6 {
        for k in 0..=12 {
            assert_eq!(
                g_a0k_closed(a, k),
                g_block_bruteforce(BlockArgs { a, k1: 0, k2: k }),
                "shift formula at a = {a}, k = {k}"
            );
        }
    }
    let elapsed = start.elapsed();
    report(
        10,
        elapsed,
        "shift formula: pinned values and brute-force agreement for a <= 6, k <= 12",
    );
}
