//! Motivic classes of collision loci: common-zero loci of tuples of binary
//! forms inside products of projective spaces and Grassmannians, via a
//! gcd-stratification recursion, with an exhaustive finite-field oracle as
//! ground truth.
//!
//! Binary forms of degree e are stored as coefficient vectors
//! `c[0..=e]`, encoding `sum_k c_k y^(e-k) z^k`; the same vector read as a
//! univariate polynomial in z is the dehomogenization at y = 1, and the
//! form vanishes at the point at infinity `[0:1]` iff `c[e] = 0`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{gaussian_class, projective_class, sym_class, MotivicClass};

/// Default cap on the number of tuples the oracle will enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 100_000_000;

/// One projectivized factor of a space of binary forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormFactor {
    /// The projective space of a single nonzero form of the given degree.
    Projective { degree: u32 },
    /// The Grassmannian of `dim`-dimensional subspaces of forms of the
    /// given degree; the subspace contributes all of its members.
    Grassmannian { dim: u32, degree: u32 },
}

/// A product of form-space factors whose tuples the oracle enumerates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSpaceSpec {
    pub factors: Vec<FormFactor>,
}

/// Condition counted by the oracle over one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CollisionPredicate {
    /// Every tuple.
    Any,
    /// All forms of the tuple (subspace members included) share a zero on
    /// the projective line over the algebraic closure.
    CommonZero,
    /// No shared zero.
    BasePointFree,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut exp = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Canonical representative of f modulo g over the prime field F_p: the
/// unique f' = f + g*psi with deg f' < deg g, computed by eliminating the
/// top coefficient of the running remainder at each step.
pub fn euclidean_reduce(f: &[u64], g: &[u64], p: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let dg = poly_degree(g).ok_or_else(|| {
        Error::InvalidInput("cannot reduce by the zero polynomial".into())
    })?;
    let mut r: Vec<u64> = f.iter().map(|&c| c % p).collect();
    let lead_inv = inv_mod(g[dg] % p, p);
    while let Some(dr) = poly_degree(&r) {
        if dr < dg {
            break;
        }
        let scale = mul_mod(r[dr], lead_inv, p);
        for k in 0..=dg {
            let idx = dr - dg + k;
            r[idx] = (r[idx] + p - mul_mod(scale, g[k] % p, p)) % p;
        }
    }
    Ok(trim(r))
}

fn poly_gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = euclidean_reduce(&a, &b, p).expect("b is nonzero and p is prime");
        a = b;
        b = r;
    }
    a
}

/// Canonical representatives of nonzero forms of degree e up to scalar:
/// first nonzero coefficient normalized to 1.
fn projective_reps(e: usize, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for pivot in 0..=e {
        let free = e - pivot;
        let mut counter = vec![0u64; free];
        loop {
            let mut form = vec![0u64; e + 1];
            form[pivot] = 1;
            form[pivot + 1..].copy_from_slice(&counter);
            out.push(form);
            let mut k = 0;
            while k < free {
                counter[k] += 1;
                if counter[k] < p {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
            if k == free {
                break;
            }
        }
    }
    out
}

/// Bases of the s-dimensional subspaces of F_p^n, one per subspace, as the
/// rows of the reduced row echelon form.
fn grassmannian_reps(s: usize, n: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..s).collect();
    loop {
        let free_cells: Vec<(usize, usize)> = (0..s)
            .flat_map(|row| {
                let pivots = &pivots;
                (pivots[row] + 1..n)
                    .filter(move |col| !pivots.contains(col))
                    .map(move |col| (row, col))
            })
            .collect();
        let mut counter = vec![0u64; free_cells.len()];
        loop {
            let mut basis = vec![vec![0u64; n]; s];
            for (row, &col) in pivots.iter().enumerate() {
                basis[row][col] = 1;
            }
            for (&(row, col), &v) in free_cells.iter().zip(&counter) {
                basis[row][col] = v;
            }
            out.push(basis);
            let mut k = 0;
            while k < free_cells.len() {
                counter[k] += 1;
                if counter[k] < p {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
            if k == free_cells.len() {
                break;
            }
        }
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            pivots[i] += 1;
            if pivots[i] <= n - (s - i) {
                for j in i + 1..s {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Per-representative summary: gcd of the member forms (dehomogenized) and
/// whether every member vanishes at the point at infinity.
struct RepData {
    gcd: Vec<u64>,
    at_infinity: bool,
}

fn rep_data(forms: &[Vec<u64>], degree: usize, p: u64) -> RepData {
    let mut gcd: Vec<u64> = Vec::new();
    let mut at_infinity = true;
    for form in forms {
        gcd = if gcd.is_empty() {
            trim(form.clone())
        } else {
            poly_gcd(&gcd, form, p)
        };
        at_infinity &= form[degree] == 0;
    }
    RepData { gcd, at_infinity }
}

fn factor_count(factor: &FormFactor, p: u64) -> BigInt {
    let q = BigInt::from(p);
    match *factor {
        FormFactor::Projective { degree } => projective_class(degree).eval(&q),
        FormFactor::Grassmannian { dim, degree } => gaussian_class(dim, degree + 1).eval(&q),
    }
}

fn count_tuples(factors: &[Vec<RepData>], running: &RepData, p: u64) -> u128 {
    let Some((head, rest)) = factors.split_first() else {
        let hit = poly_degree(&running.gcd).map_or(false, |d| d >= 1) || running.at_infinity;
        return hit as u128;
    };
    let mut total = 0u128;
    for data in head {
        let combined = RepData {
            gcd: if running.gcd.is_empty() {
                data.gcd.clone()
            } else {
                poly_gcd(&running.gcd, &data.gcd, p)
            },
            at_infinity: running.at_infinity && data.at_infinity,
        };
        if poly_degree(&combined.gcd) == Some(0) && !combined.at_infinity {
            continue;
        }
        total += count_tuples(rest, &combined, p);
    }
    total
}

/// Exact count, by exhaustive enumeration over the field with q elements,
/// of tuples in the given form-space product satisfying the predicate.
pub fn fq_count_oracle(
    spec: &FormSpaceSpec,
    predicate: CollisionPredicate,
    q: u64,
    budget: Option<u64>,
) -> Result<u128> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if spec.factors.is_empty() {
        return Err(Error::InvalidInput(
            "form space needs at least one factor".into(),
        ));
    }
    for factor in &spec.factors {
        if let FormFactor::Grassmannian { dim, degree } = *factor {
            if dim == 0 || dim > degree + 1 {
                return Err(Error::InvalidInput(format!(
                    "no {dim}-dimensional subspaces of forms of degree {degree}"
                )));
            }
        }
    }
    let counts: Vec<BigInt> = spec.factors.iter().map(|f| factor_count(f, q)).collect();
    let total: BigInt = counts.iter().product();
    let needed = total.to_u128().unwrap_or(u128::MAX);
    if matches!(predicate, CollisionPredicate::Any) {
        return Ok(needed);
    }
    let budget = budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
    if needed > budget as u128 {
        return Err(Error::OracleBudget { needed, budget });
    }
    let factors: Vec<Vec<RepData>> = spec
        .factors
        .iter()
        .map(|f| match *f {
            FormFactor::Projective { degree } => projective_reps(degree as usize, q)
                .into_iter()
                .map(|form| rep_data(std::slice::from_ref(&form), degree as usize, q))
                .collect(),
            FormFactor::Grassmannian { dim, degree } => {
                grassmannian_reps(dim as usize, degree as usize + 1, q)
                    .into_iter()
                    .map(|basis| rep_data(&basis, degree as usize, q))
                    .collect()
            }
        })
        .collect();
    let start = RepData {
        gcd: Vec::new(),
        at_infinity: true,
    };
    let colliding = count_tuples(&factors, &start, q);
    Ok(match predicate {
        CollisionPredicate::Any => unreachable!(),
        CollisionPredicate::CommonZero => colliding,
        CollisionPredicate::BasePointFree => needed - colliding,
    })
}

/// The unique integer polynomial of degree at most `degree_bound` through
/// the (prime, count) samples; every extra sample must lie on it too.
pub fn interpolate_class(samples: &[(u64, u128)], degree_bound: usize) -> Result<MotivicClass> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::NotEnoughSamples {
            needed,
            degree: degree_bound,
            got: samples.len(),
        });
    }
    for (i, &(qi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|&(qj, _)| qj == qi) {
            return Err(Error::InvalidInput(format!(
                "duplicate sample point q = {qi}"
            )));
        }
    }
    let base = &samples[..needed];
    let mut coeffs = vec![BigRational::zero(); needed];
    for &(xi, yi) in base {
        let xi = BigInt::from(xi);
        let mut numer = vec![BigRational::from(BigInt::from(yi))];
        let mut denom = BigRational::one();
        for &(xj, _) in base {
            let xj = BigInt::from(xj);
            if xj == xi {
                continue;
            }
            denom *= BigRational::from(&xi - &xj);
            let mut next = vec![BigRational::zero(); numer.len() + 1];
            for (k, c) in numer.iter().enumerate() {
                next[k] -= c * BigRational::from(xj.clone());
                next[k + 1] += c;
            }
            numer = next;
        }
        for (k, c) in numer.iter().enumerate() {
            coeffs[k] += c / &denom;
        }
    }
    let mut ints = Vec::with_capacity(needed);
    for c in &coeffs {
        if !c.is_integer() {
            return Err(Error::NonIntegralInterpolation);
        }
        ints.push(c.to_integer());
    }
    let class = MotivicClass::new(ints);
    for &(qi, yi) in samples {
        let value = class.eval(&BigInt::from(qi));
        if value.is_negative() || value.magnitude() != &num_bigint::BigUint::from(yi) {
            return Err(Error::NonIntegralInterpolation);
        }
    }
    Ok(class)
}

fn joint_free_inner(
    systems: &[(u32, u32)],
    memo: &mut HashMap<Vec<(u32, u32)>, MotivicClass>,
) -> MotivicClass {
    if systems.iter().any(|&(s, e)| e + 1 < s) {
        return MotivicClass::zero();
    }
    if let Some(hit) = memo.get(systems) {
        return hit.clone();
    }
    let mut total = MotivicClass::one();
    for &(s, e) in systems {
        total = &total * &gaussian_class(s, e + 1);
    }
    let gmax = systems.iter().map(|&(s, e)| e + 1 - s).min().unwrap_or(0);
    for g in 1..=gmax {
        let reduced: Vec<(u32, u32)> = systems.iter().map(|&(s, e)| (s, e - g)).collect();
        total = &total - &(&sym_class(g) * &joint_free_inner(&reduced, memo));
    }
    memo.insert(systems.to_vec(), total.clone());
    total
}

fn validated_systems(systems: &[(u32, u32)]) -> Result<Vec<(u32, u32)>> {
    if systems.is_empty() {
        return Err(Error::InvalidInput(
            "joint collision needs at least one map system".into(),
        ));
    }
    for &(s, e) in systems {
        if s == 0 || s > e + 1 {
            return Err(Error::InvalidInput(format!(
                "no {s}-dimensional subspaces of forms of degree {e}"
            )));
        }
    }
    let mut sorted = systems.to_vec();
    sorted.sort_unstable();
    Ok(sorted)
}

/// Class of tuples of subspaces (one s_c-dimensional subspace of forms of
/// degree e_c per system) whose joint member collection has no common zero.
pub fn joint_base_point_free_class(systems: &[(u32, u32)]) -> Result<MotivicClass> {
    let sorted = validated_systems(systems)?;
    Ok(joint_free_inner(&sorted, &mut HashMap::new()))
}

/// Complementary class: tuples of subspaces whose joint member collection
/// does share a zero.
pub fn joint_common_zero_class(systems: &[(u32, u32)]) -> Result<MotivicClass> {
    let sorted = validated_systems(systems)?;
    let mut total = MotivicClass::one();
    for &(s, e) in &sorted {
        total = &total * &gaussian_class(s, e + 1);
    }
    Ok(&total - &joint_free_inner(&sorted, &mut HashMap::new()))
}

/// Class of tuples of projectivized forms of the given degrees with no
/// common divisor.
pub fn coprime_tuple_class(degrees: &[u32]) -> Result<MotivicClass> {
    let systems: Vec<(u32, u32)> = degrees.iter().map(|&e| (1, e)).collect();
    joint_base_point_free_class(&systems)
}

/// Class of tuples of projectivized forms of the given degrees sharing a
/// zero.
pub fn common_zero_class(degrees: &[u32]) -> Result<MotivicClass> {
    let systems: Vec<(u32, u32)> = degrees.iter().map(|&e| (1, e)).collect();
    joint_common_zero_class(&systems)
}

/// Class of base-point-free s-dimensional subspaces of forms of degree e.
pub fn bpf_grassmannian_class(s: u32, e: u32) -> Result<MotivicClass> {
    joint_base_point_free_class(&[(s, e)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proj(degree: u32) -> FormFactor {
        FormFactor::Projective { degree }
    }

    fn gr(dim: u32, degree: u32) -> FormFactor {
        FormFactor::Grassmannian { dim, degree }
    }

    fn spec(factors: Vec<FormFactor>) -> FormSpaceSpec {
        FormSpaceSpec { factors }
    }

    fn poly_mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn poly_add_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + y) % p;
        }
        trim(out)
    }

    fn all_polys(max_len: usize, p: u64) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for len in 1..=max_len {
            let mut counter = vec![0u64; len];
            loop {
                if counter[len - 1] != 0 {
                    out.push(counter.clone());
                }
                let mut k = 0;
                while k < len {
                    counter[k] += 1;
                    if counter[k] < p {
                        break;
                    }
                    counter[k] = 0;
                    k += 1;
                }
                if k == len {
                    break;
                }
            }
        }
        out
    }

    #[test]
    fn euclidean_reduce_examples() {
        assert_eq!(
            euclidean_reduce(&[0, 0, 0, 1], &[0, 1], 3).unwrap(),
            Vec::<u64>::new()
        );
        assert_eq!(euclidean_reduce(&[1, 0, 1], &[0, 1], 3).unwrap(), vec![1]);
        assert!(euclidean_reduce(&[1, 1], &[], 3).is_err());
        assert!(euclidean_reduce(&[1, 1], &[1], 4).is_err());
    }

    #[test]
    fn euclidean_reduce_matches_exhaustive_division() {
        let p = 3;
        let fs = all_polys(4, p);
        let gs: Vec<Vec<u64>> = all_polys(3, p).into_iter().filter(|g| !g.is_empty()).collect();
        let quotients = all_polys(4, p);
        for f in &fs {
            for g in &gs {
                let r = euclidean_reduce(f, g, p).unwrap();
                assert!(poly_degree(&r).map_or(0, |d| d + 1) <= poly_degree(g).unwrap());
                let witness = quotients.iter().any(|psi| {
                    poly_add_mod(&poly_mul_mod(g, psi, p), &r, p) == trim(f.clone())
                });
                assert!(witness, "no quotient reproduces f = {f:?}, g = {g:?}");
            }
        }
    }

    #[test]
    fn oracle_counts_coprime_pairs() {
        let s = spec(vec![proj(1), proj(2)]);
        assert_eq!(fq_count_oracle(&s, CollisionPredicate::Any, 2, None).unwrap(), 21);
        assert_eq!(
            fq_count_oracle(&s, CollisionPredicate::BasePointFree, 2, None).unwrap(),
            12
        );
        assert_eq!(
            fq_count_oracle(&s, CollisionPredicate::CommonZero, 2, None).unwrap(),
            9
        );
    }

    #[test]
    fn oracle_rejects_bad_input() {
        let s = spec(vec![proj(1)]);
        assert!(matches!(
            fq_count_oracle(&s, CollisionPredicate::Any, 4, None),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            fq_count_oracle(&s, CollisionPredicate::Any, 1, None),
            Err(Error::NotPrime(1))
        ));
        assert!(fq_count_oracle(&spec(vec![]), CollisionPredicate::Any, 2, None).is_err());
        assert!(fq_count_oracle(&spec(vec![gr(3, 1)]), CollisionPredicate::Any, 2, None).is_err());
        let big = spec(vec![proj(8), proj(8)]);
        assert!(matches!(
            fq_count_oracle(&big, CollisionPredicate::CommonZero, 3, Some(1000)),
            Err(Error::OracleBudget { .. })
        ));
    }

    #[test]
    fn frozen_recursion_values() {
        assert_eq!(
            coprime_tuple_class(&[1, 2]).unwrap(),
            MotivicClass::from_coeffs(&[0, 0, 1, 1])
        );
        assert_eq!(
            coprime_tuple_class(&[2, 3]).unwrap(),
            MotivicClass::from_coeffs(&[0, 0, 0, 0, 1, 1])
        );
        assert_eq!(
            common_zero_class(&[1, 2]).unwrap(),
            MotivicClass::from_coeffs(&[1, 2, 1])
        );
        assert_eq!(
            common_zero_class(&[2, 3]).unwrap(),
            MotivicClass::from_coeffs(&[1, 2, 3, 3, 1])
        );
        assert_eq!(
            bpf_grassmannian_class(2, 2).unwrap(),
            MotivicClass::monomial(2, 1)
        );
        assert_eq!(
            bpf_grassmannian_class(2, 3).unwrap(),
            MotivicClass::monomial(4, 1)
        );
        for e in [0u32, 1, 2, 5] {
            assert_eq!(
                coprime_tuple_class(&[0, e]).unwrap(),
                projective_class(e),
                "constants are coprime to everything"
            );
            assert!(common_zero_class(&[0, e]).unwrap().is_zero());
        }
        for e in 1..=4u32 {
            assert!(bpf_grassmannian_class(1, e).unwrap().is_zero());
            assert_eq!(bpf_grassmannian_class(e + 1, e).unwrap(), MotivicClass::one());
            assert!(coprime_tuple_class(&[e]).unwrap().is_zero());
        }
        assert_eq!(coprime_tuple_class(&[0]).unwrap(), MotivicClass::one());
        assert!(bpf_grassmannian_class(3, 1).is_err());
        assert!(bpf_grassmannian_class(0, 1).is_err());
        assert!(coprime_tuple_class(&[]).is_err());
    }

    #[test]
    fn complement_identity() {
        for degrees in [vec![1u32, 2], vec![2, 3], vec![1, 1, 2], vec![0, 4], vec![3]] {
            let mut product = MotivicClass::one();
            for &e in &degrees {
                product = &product * &projective_class(e);
            }
            let together =
                &coprime_tuple_class(&degrees).unwrap() + &common_zero_class(&degrees).unwrap();
            assert_eq!(together, product);
        }
    }

    #[test]
    fn recursion_matches_oracle_on_small_cases() {
        let cases: Vec<(Vec<(u32, u32)>, Vec<FormFactor>)> = vec![
            (vec![(1, 1), (1, 2)], vec![proj(1), proj(2)]),
            (vec![(1, 2), (1, 3)], vec![proj(2), proj(3)]),
            (vec![(1, 1), (1, 1), (1, 1)], vec![proj(1), proj(1), proj(1)]),
            (vec![(2, 2)], vec![gr(2, 2)]),
            (vec![(2, 3)], vec![gr(2, 3)]),
            (vec![(1, 2)], vec![proj(2)]),
            (vec![(3, 2)], vec![gr(3, 2)]),
            (vec![(1, 1), (2, 2)], vec![proj(1), gr(2, 2)]),
        ];
        for (systems, factors) in cases {
            let class = joint_base_point_free_class(&systems).unwrap();
            let complement = joint_common_zero_class(&systems).unwrap();
            for q in [2u64, 3] {
                let s = spec(factors.clone());
                let free = fq_count_oracle(&s, CollisionPredicate::BasePointFree, q, None).unwrap();
                let hit = fq_count_oracle(&s, CollisionPredicate::CommonZero, q, None).unwrap();
                assert_eq!(class.eval(&BigInt::from(q)), BigInt::from(free), "{systems:?} at {q}");
                assert_eq!(complement.eval(&BigInt::from(q)), BigInt::from(hit));
            }
        }
    }

    #[test]
    fn mixed_system_class() {
        assert_eq!(
            joint_base_point_free_class(&[(2, 2), (1, 1)]).unwrap(),
            MotivicClass::from_coeffs(&[0, 1, 2, 1])
        );
    }

    #[test]
    fn interpolation_examples() {
        let samples = [(2u64, 7u128), (3, 13), (5, 31)];
        assert_eq!(
            interpolate_class(&samples, 2).unwrap(),
            MotivicClass::from_coeffs(&[1, 1, 1])
        );
        let mut samples = Vec::new();
        for q in [2u64, 3, 5, 7] {
            let s = spec(vec![proj(1), proj(2)]);
            samples.push((q, fq_count_oracle(&s, CollisionPredicate::BasePointFree, q, None).unwrap()));
        }
        assert_eq!(
            interpolate_class(&samples, 3).unwrap(),
            MotivicClass::from_coeffs(&[0, 0, 1, 1])
        );
        assert!(matches!(
            interpolate_class(&samples[..2], 3),
            Err(Error::NotEnoughSamples { .. })
        ));
        assert!(matches!(
            interpolate_class(&[(2, 1), (4, 2)], 1),
            Err(Error::NonIntegralInterpolation)
        ));
        let inconsistent = [(2u64, 7u128), (3, 13), (5, 31), (7, 58)];
        assert!(interpolate_class(&inconsistent, 2).is_err());
        assert!(interpolate_class(&[(2, 1), (2, 1), (3, 2)], 1).is_err());
    }

    #[test]
    fn total_counts_need_no_enumeration() {
        let s = spec(vec![proj(30), gr(2, 40)]);
        let total = fq_count_oracle(&s, CollisionPredicate::Any, 2, Some(1)).unwrap();
        let expected = projective_class(30).eval(&BigInt::from(2))
            * gaussian_class(2, 41).eval(&BigInt::from(2));
        assert_eq!(BigInt::from(total), expected);
    }
}
