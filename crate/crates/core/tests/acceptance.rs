//! End-to-end acceptance checks, one test per published criterion.
//!
//! Every assertion is exact integer or rational arithmetic; the timed
//! tests bound wall-clock time at desk scale.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use twisted_chains::chain::{enumerate_labellings, ChainLabel};
use twisted_chains::collision::{
    bpf_grassmannian_class, common_zero_class, coprime_tuple_class, fq_count_oracle,
    CollisionPredicate, FormFactor, FormSpaceSpec,
};
use twisted_chains::dimension::higgs_moduli_dimension;
use twisted_chains::localization::{poincare_series, rank2_closed_form, series_report};
use twisted_chains::morse::morse_index;
use twisted_chains::poly::{gaussian_class, projective_class, MotivicClass, PoincarePoly};
use twisted_chains::report::{stratum_report, StratumReport};
use twisted_chains::sigma::{build_sigma_system, sigma_determinant_check, solve_sigma};
use twisted_chains::splitting::SplittingType;

fn label(ranks: &[u32], degrees: &[i64], twist: u32) -> ChainLabel {
    ChainLabel::on_line(ranks.to_vec(), degrees.to_vec(), twist).unwrap()
}

fn splittings(parts: &[&[i64]]) -> Vec<SplittingType> {
    parts
        .iter()
        .map(|p| SplittingType::from_parts(p).unwrap())
        .collect()
}

/// Builds the x-polynomial whose even coefficients are as given.
fn even_series(even: &[i64]) -> PoincarePoly {
    let mut coeffs = vec![0i64; 2 * even.len().saturating_sub(1) + 1];
    for (i, &c) in even.iter().enumerate() {
        coeffs[2 * i] = c;
    }
    PoincarePoly::from_coeffs(&coeffs)
}

#[test]
fn rank_two_series_matches_closed_form() {
    let start = Instant::now();
    for t in 1..=10 {
        for d in [-1, 1, 3] {
            let series = poincare_series(2, d, t).unwrap();
            let closed = rank2_closed_form(t, d).unwrap();
            assert_eq!(series, closed, "rank 2, d = {d}, t = {t}");
        }
    }
    assert!(
        start.elapsed() < Duration::from_secs(1),
        "rank-2 sweep took {:?}",
        start.elapsed()
    );
}

#[test]
fn rank_three_twist_two_series_and_inventory() {
    let start = Instant::now();
    let run = series_report(3, -1, 2).unwrap();
    assert_eq!(run.series, even_series(&[1, 1, 3, 4, 3]));

    assert_eq!(run.components.len(), 4);
    let mut lines: Vec<(Vec<i64>, u64)> = run
        .components
        .iter()
        .filter(|c| c.label.ranks == [1, 1, 1])
        .map(|c| (c.label.degrees.clone(), c.beta))
        .collect();
    lines.sort_by_key(|(_, beta)| std::cmp::Reverse(*beta));
    assert_eq!(
        lines,
        vec![
            (vec![1, 0, -2], 6),
            (vec![1, -1, -1], 4),
            (vec![0, 0, -1], 2),
        ]
    );
    let bottom: Vec<_> = run
        .components
        .iter()
        .filter(|c| c.label.ranks == [2, 1])
        .collect();
    assert_eq!(bottom.len(), 1);
    assert_eq!(bottom[0].beta, 0);
    assert_eq!(bottom[0].total_class, MotivicClass::one());

    assert!(
        start.elapsed() < Duration::from_secs(1),
        "rank-3 t=2 run took {:?}",
        start.elapsed()
    );
}

#[test]
fn rank_three_twist_six_series_inventory_and_warnings() {
    let start = Instant::now();
    let run = series_report(3, -1, 6).unwrap();
    assert_eq!(
        run.series,
        even_series(&[1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 49, 49, 45, 36, 21])
    );
    assert_eq!(run.series.coeff(22), BigInt::from(45));
    assert_eq!(run.euler_characteristic, BigInt::from(392));

    let count = |shape: &[u32]| {
        run.components
            .iter()
            .filter(|c| c.label.ranks == shape)
            .count()
    };
    assert_eq!(count(&[1, 1, 1]), 21);
    assert_eq!(count(&[2, 1]), 3);
    assert_eq!(count(&[1, 2]), 2);
    assert_eq!(run.components.len(), 26);

    assert_eq!(run.warnings.len(), 3, "warnings: {:?}", run.warnings);
    for needle in [
        "computed as Gr(2,5); previously tabulated as Gr(2,4)",
        "computed as P^5 x P^1; previously tabulated as P^5 x P^5",
        "Morse index computed as 6; previously tabulated as 4",
    ] {
        assert!(
            run.warnings.iter().any(|w| w.contains(needle)),
            "missing warning {needle:?} in {:?}",
            run.warnings
        );
    }

    assert!(
        start.elapsed() < Duration::from_secs(10),
        "rank-3 t=6 run took {:?}",
        start.elapsed()
    );
}

fn closure(ranks: &[u32], degrees: &[i64], twist: u32, parts: &[&[i64]]) -> StratumReport {
    let report = stratum_report(&label(ranks, degrees, twist), &splittings(parts)).unwrap();
    assert_eq!(
        report.formula_dimension, report.geometry_dimension as i64,
        "dimension routes disagree for {ranks:?} {degrees:?} t={twist} {parts:?}"
    );
    report
}

#[test]
fn worked_stratum_closures_reproduce() {
    let r = closure(&[1, 2, 1], &[2, -1, -2], 5, &[&[0, -1]]);
    assert_eq!(r.geometry, "P^2 x P^3 x P^6");
    let r = closure(&[1, 2, 1], &[2, -1, -2], 5, &[&[1, -2]]);
    assert_eq!(r.geometry, "P^1 x P^2 x P^6");

    let r = closure(&[1, 2, 1], &[2, 0, -3], 6, &[&[0, 0]]);
    assert_eq!(r.geometry, "P^9 x Gr(2,4)");
    assert!(r.warnings.is_empty());

    let r = closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 5, &[&[0, 0], &[0, -1, -1]]);
    assert_eq!(r.geometry, "P^3 x P^8 x P^11 x Gr(2,9)");

    let r = closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 6, &[&[0, 0], &[0, -1, -1]]);
    assert_eq!(r.geometry, "P^4 x P^11 x P^13 x Gr(2,3) x Gr(2,10)");
    let r = closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 6, &[&[0, 0], &[1, -1, -2]]);
    assert_eq!(r.geometry, "P^1 x P^3 x P^10 x P^13 x Gr(2,10)");
    let r = closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 6, &[&[0, 0], &[0, 0, -2]]);
    assert_eq!(r.geometry, "P^1 x P^8 x P^13 x Gr(2,5) x Gr(2,10)");

    // The one closure whose previously tabulated form disagrees with the
    // computed one; it must come back with an explicit warning.
    let r = closure(&[1, 2, 1], &[2, 0, -3], 6, &[&[1, -1]]);
    assert_eq!(r.geometry, "P^2 x P^3 x P^7");
    assert_eq!(r.warnings.len(), 1);
    assert!(r.warnings[0].contains("previously tabulated as P^2 x P^3 x P^9"));
}

#[test]
fn dimension_identities_hold() {
    assert_eq!(higgs_moduli_dimension(3, 2), 19);
    assert_eq!(higgs_moduli_dimension(3, 6), 55);
    for t in 1..=10 {
        assert_eq!(higgs_moduli_dimension(2, t), 4 * t as i64 + 1);
    }

    let r = closure(&[1, 2, 1], &[2, -1, -2], 5, &[&[0, -1]]);
    assert_eq!(r.formula_dimension, 11);
    let r = closure(&[1, 2, 1], &[2, -1, -2], 5, &[&[1, -2]]);
    assert_eq!(r.formula_dimension, 9);
    // The remaining worked strata cross-check inside `closure`.
    closure(&[1, 2, 1], &[2, 0, -3], 6, &[&[0, 0]]);
    closure(&[1, 2, 1], &[2, 0, -3], 6, &[&[1, -1]]);
    closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 5, &[&[0, 0], &[0, -1, -1]]);
    closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 6, &[&[0, 0], &[0, -1, -1]]);
    closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 6, &[&[0, 0], &[1, -1, -2]]);
    closure(&[1, 2, 1, 3, 1], &[0, 0, 3, -2, -2], 6, &[&[0, 0], &[0, 0, -2]]);
}

#[test]
fn sigma_systems_solve_exactly_on_random_labellings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51_64_a1);
    for case in 0..500 {
        let q = rng.gen_range(1..=3usize);
        let mut ranks = vec![1u32];
        for _ in 0..q {
            ranks.push(rng.gen_range(1..=4u32));
            ranks.push(1);
        }
        let degrees: Vec<i64> = (0..ranks.len()).map(|_| rng.gen_range(-10..=10)).collect();
        let twist = rng.gen_range(1..=8u32);
        let c = label(&ranks, &degrees, twist);

        let system = build_sigma_system(&c).unwrap();
        let sigma = solve_sigma(&system).unwrap();
        assert_eq!(sigma.len(), 2 * q, "case {case}");
        for (row, rhs) in system.matrix.iter().zip(&system.rhs) {
            let lhs: BigRational = row.iter().zip(&sigma).map(|(a, s)| a * s).sum();
            assert_eq!(lhs, rhs.clone(), "case {case}: nonzero residual");
        }

        let (det, closed) = sigma_determinant_check(&ranks).unwrap();
        assert_eq!(det, closed, "case {case}");
        assert!(!det.is_zero(), "case {case}");
        let total: i64 = ranks.iter().map(|&r| r as i64).sum();
        let product: i64 = ranks.iter().skip(1).step_by(2).map(|&r| r as i64).product();
        let expected = BigRational::new(
            BigInt::from(total).pow(2 * q as u32 - 1),
            BigInt::from(product),
        );
        assert_eq!(det, expected, "case {case}");
    }
}

/// All degree tuples (each entry >= 0) whose slot sizes e_i + 1 sum to at
/// most the bound.
fn degree_tuples(bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn extend(budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let mut e = 0;
        while e + 1 <= budget {
            prefix.push(e);
            extend(budget - (e + 1), prefix, out);
            prefix.pop();
            e += 1;
        }
    }
    extend(bound, &mut prefix, &mut out);
    out
}

#[test]
fn collision_classes_match_finite_field_counts() {
    let tuples = degree_tuples(12);
    assert_eq!(tuples.len(), 4095);
    tuples.par_iter().for_each(|degrees| {
        let spec = FormSpaceSpec {
            factors: degrees
                .iter()
                .map(|&degree| FormFactor::Projective { degree })
                .collect(),
        };
        let class = common_zero_class(degrees).unwrap();
        let coprime = coprime_tuple_class(degrees).unwrap();
        let mut total = MotivicClass::one();
        for &e in degrees {
            total = &total * &projective_class(e);
        }
        assert_eq!(&coprime + &class, total, "classes must complement each other");
        for q in [2u64, 3] {
            let counted =
                fq_count_oracle(&spec, CollisionPredicate::CommonZero, q, None).unwrap();
            let predicted = class.eval(&BigInt::from(q));
            assert_eq!(
                predicted,
                BigInt::from(counted),
                "common-zero count at q = {q} for degrees {degrees:?}"
            );
        }
    });
    assert_eq!(bpf_grassmannian_class(2, 2).unwrap(), MotivicClass::monomial(2, 1));
}

#[test]
fn property_suites_hold() {
    for n in 0..=12u32 {
        for s in 0..=n {
            let g = gaussian_class(s, n);
            assert_eq!(g, gaussian_class(n - s, n), "symmetry at ({s},{n})");
            let mut binom = BigInt::one();
            for i in 0..s as u64 {
                binom = binom * BigInt::from(n as u64 - i) / BigInt::from(i + 1);
            }
            assert_eq!(g.eval_at_one(), binom, "q = 1 value at ({s},{n})");
        }
    }

    for rank in 2..=3u32 {
        for d in [-1i64, 1, 3] {
            if (d % rank as i64) == 0 {
                continue;
            }
            for t in 1..=8u32 {
                let mut bottom = 0;
                for c in enumerate_labellings(rank, d, t).unwrap() {
                    let beta = morse_index(&c).unwrap();
                    if beta == 0 {
                        bottom += 1;
                    }
                    for shift in [-2i64, 1, 5] {
                        let moved: Vec<i64> = c
                            .degrees
                            .iter()
                            .zip(&c.ranks)
                            .map(|(&di, &ri)| di + ri as i64 * shift)
                            .collect();
                        let shifted = label(&c.ranks, &moved, t);
                        assert_eq!(
                            morse_index(&shifted).unwrap(),
                            beta,
                            "index must be shift-invariant at {c}"
                        );
                    }
                }
                assert_eq!(bottom, 1, "unique bottom component for ({rank},{d},{t})");

                let run = series_report(rank, d, t).unwrap();
                for c in &run.components {
                    if c.strata.len() == 1 {
                        assert!(
                            c.total_class.is_palindromic(),
                            "type-change-free component {} must be palindromic",
                            c.label
                        );
                        assert!(c.palindromic);
                    }
                }
            }
        }
    }
}
