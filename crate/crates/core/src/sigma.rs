//! Exact solver for the tuple-stability parameters of odd-length argyle
//! chains.
//!
//! A labelled argyle chain of length n = 2q+1 alternates rank-one nodes
//! with middle nodes of ranks r_2, r_4, ..., r_2q.  Twisting each bundle
//! by the inverse of its left rank-one neighbour repackages a
//! representation as a 4q-tuple: 2q bundles V_1, ..., V_2q (rank r_{i+1}
//! at odd slots, rank one at even slots) together with 2q sections.
//! Stability on the tuple side depends on 2q rational parameters
//! sigma_1, ..., sigma_2q.  Matching the chain's slope condition for the
//! two kinds of rank-one subobjects hanging off each middle node pins the
//! parameters down exactly: each even node j contributes one equation
//! from a line subbundle of the node alone (family one) and one from the
//! same line together with the induced line one step further (family
//! two).
//!
//! This module builds that 2q x 2q linear system over exact rationals,
//! solves it, cross-checks the system determinant against a closed form,
//! evaluates the stable-tuple inequality, converts between the sigma and
//! alpha parameter conventions, and records the degrees of the q+1
//! determinant line bundles attached to the tuple.
//!
//! All degrees are normalized internally so the first node has degree
//! zero (tensor the whole chain by a line bundle).  The tuple bundles,
//! and therefore the parameters and every derived quantity, are invariant
//! under that shift; the applied shift is recorded so reports can quote
//! the caller's original degrees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chain::{argyle_check, ChainLabel};
use crate::error::{Error, Result};

/// Exact rational from an integer.
fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Exact rational v/w.
fn ratio(v: i64, w: i64) -> BigRational {
    BigRational::new(BigInt::from(v), BigInt::from(w))
}

/// Middle ranks r_2, r_4, ..., r_2q of an odd-length argyle rank tuple.
///
/// The tuple construction needs the strict alternating shape: nodes at
/// odd positions carry line bundles, so the length must be odd, at least
/// three, and every rank at an even index (0-based) must equal one.
fn middle_ranks(ranks: &[u32]) -> Result<Vec<u32>> {
    argyle_check(ranks)?;
    let n = ranks.len();
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "tuple construction needs an odd chain length of at least 3, got {n}"
        )));
    }
    if let Some(i) = (0..n).step_by(2).find(|&i| ranks[i] != 1) {
        return Err(Error::InvalidInput(format!(
            "tuple construction needs rank 1 at node {}, got rank {}",
            i + 1,
            ranks[i]
        )));
    }
    Ok(ranks.iter().skip(1).step_by(2).copied().collect())
}

/// The 2q x 2q exact linear system whose unique solution is the
/// tuple-stability parameter vector (sigma_1, ..., sigma_2q).
///
/// Rows come in two families, one pair per even node j, listed family one
/// first: family one has the entry 1 - r/r_j on sigma_{j-1} and ones
/// elsewhere; family two has 2 - r/r_j on sigma_{j-1}, 2 - r on sigma_j,
/// and twos elsewhere.  Degrees are stored with the first node normalized
/// to zero; `shift` records how much was removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSystem {
    /// Coefficient rows: q family-one rows, then q family-two rows.
    pub matrix: Vec<Vec<BigRational>>,
    /// Right-hand sides in the same row order.
    pub rhs: Vec<BigRational>,
    /// Node ranks (1, r_2, 1, ..., r_2q, 1).
    pub ranks: Vec<u32>,
    /// Node degrees after normalization (`degrees[0] == 0`).
    pub degrees: Vec<i64>,
    /// Twisting degree t of the arrows.
    pub twist: u32,
    /// Genus of the base curve; carried for reporting only, the system
    /// does not involve it.
    pub genus: u32,
    /// Degree shift removed from the input:
    /// `degrees[i] = input[i] - ranks[i] * shift`.
    pub shift: i64,
    /// Total degree e of the associated tuple, equal to both the
    /// bookkeeping formula over the chain and the sum of the tuple
    /// bundle degrees.
    pub e: i64,
}

impl SigmaSystem {
    /// Number of even nodes q (half the number of unknowns).
    pub fn q(&self) -> usize {
        self.matrix.len() / 2
    }

    /// Degrees of the caller's original labelling, undoing the internal
    /// first-node normalization.
    pub fn original_degrees(&self) -> Vec<i64> {
        self.degrees
            .iter()
            .zip(&self.ranks)
            .map(|(&d, &r)| d + r as i64 * self.shift)
            .collect()
    }

    /// Rank and degree data of the ambient tuple: total rank k = r - 1,
    /// slot ranks k_i = r_{i+1}, total degree e.
    pub fn tuple_shape(&self) -> TupleShape {
        TupleShape {
            total_rank: self.ranks.iter().skip(1).map(|&x| x as i64).sum(),
            ranks: self.ranks.iter().skip(1).map(|&x| x as i64).collect(),
            degree: self.e,
        }
    }
}

/// Builds the defining rows from validated data.  Degrees must already be
/// normalized alongside the tuple degree e.
fn canonical_system(
    ranks: &[u32],
    degrees: &[i64],
    twist: u32,
    e: i64,
) -> Result<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let mid = middle_ranks(ranks)?;
    if degrees.len() != ranks.len() {
        return Err(Error::LengthMismatch {
            ranks: ranks.len(),
            degrees: degrees.len(),
        });
    }
    let q = mid.len();
    let cols = 2 * q;
    let r: i64 = ranks.iter().map(|&x| x as i64).sum();
    let d: i64 = degrees.iter().sum();
    let t = twist as i64;
    let mut matrix = Vec::with_capacity(cols);
    let mut rhs = Vec::with_capacity(cols);
    for m in 0..q {
        let rj = mid[m] as i64;
        let mut row = vec![rat(1); cols];
        row[2 * m] = rat(1) - ratio(r, rj);
        matrix.push(row);
        rhs.push(rat(-degrees[2 * m]) + ratio(d, r) + rat(t) - ratio(e, 2 * q as i64 * rj));
    }
    for m in 0..q {
        let rj = mid[m] as i64;
        let r_next = ranks[2 * m + 2] as i64;
        let mut row = vec![rat(2); cols];
        row[2 * m] = rat(2) - ratio(r, rj);
        row[2 * m + 1] = rat(2 - r);
        matrix.push(row);
        rhs.push(
            rat(-2 * degrees[2 * m]) + ratio(d, r) + rat(degrees[2 * m + 2]) + rat(3 * t)
                - ratio(e, 2 * q as i64) * (ratio(1, rj) + ratio(1, r_next)),
        );
    }
    Ok((matrix, rhs))
}

/// Assembles the stability parameter system for an odd-length argyle
/// labelling.
///
/// Normalizes the degrees so the first node has degree zero, computes the
/// tuple degree e twice (once by the bookkeeping formula over the chain,
/// once as the sum of the tuple bundle degrees) and refuses to continue
/// if the routes disagree, then fills in both equation families.
pub fn build_sigma_system(c: &ChainLabel) -> Result<SigmaSystem> {
    let mid = middle_ranks(&c.ranks)?;
    let q = mid.len();
    let t = c.twist as i64;
    let shift = c.degrees[0];
    let degrees: Vec<i64> = c
        .degrees
        .iter()
        .zip(&c.ranks)
        .map(|(&d, &r)| d - r as i64 * shift)
        .collect();
    let total: i64 = degrees.iter().sum();
    let e = total
        + (0..q)
            .map(|m| {
                let k = mid[m] as i64;
                (k + 2) * t - (k + 1) * degrees[2 * m]
            })
            .sum::<i64>();
    let from_tuple: i64 = (0..q)
        .map(|m| {
            let k = mid[m] as i64;
            let odd_slot = degrees[2 * m + 1] - k * degrees[2 * m] + k * t;
            let even_slot = degrees[2 * m + 2] - degrees[2 * m] + 2 * t;
            odd_slot + even_slot
        })
        .sum();
    if e != from_tuple {
        return Err(Error::RouteMismatch {
            quantity: "tuple degree".into(),
            first: e.to_string(),
            second: from_tuple.to_string(),
        });
    }
    let (matrix, rhs) = canonical_system(&c.ranks, &degrees, c.twist, e)?;
    Ok(SigmaSystem {
        matrix,
        rhs,
        ranks: c.ranks.clone(),
        degrees,
        twist: c.twist,
        genus: c.genus,
        shift,
        e,
    })
}

/// Gaussian elimination with exact arithmetic; None when singular.
fn gaussian_solve(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !a[row][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &a[col][col];
            for k in col..n {
                let delta = &factor * &a[col][k];
                a[row][k] -= delta;
            }
            let delta = &factor * &b[col];
            b[row] -= delta;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for k in row + 1..n {
            let term = &a[row][k] * &x[k];
            acc -= term;
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

/// Determinant by exact row reduction, tracking row swaps.
fn row_reduce_det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&row| !a[row][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det = det * &a[col][col];
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &a[col][col];
            for k in col..n {
                let delta = &factor * &a[col][k];
                a[row][k] -= delta;
            }
        }
    }
    det
}

/// Solves the system exactly and certifies the result.
///
/// The unique solution of the stored matrix is recomputed against the
/// defining rows rebuilt from the stored ranks, degrees, twist, and tuple
/// degree, so a doctored matrix or right-hand side is caught as a nonzero
/// residual even though it still admits a formal solution.
pub fn solve_sigma(s: &SigmaSystem) -> Result<Vec<BigRational>> {
    let n = s.matrix.len();
    if s.rhs.len() != n || s.matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput(
            "system matrix and right-hand side sizes disagree".into(),
        ));
    }
    let x = gaussian_solve(s.matrix.clone(), s.rhs.clone()).ok_or(Error::SingularSystem)?;
    let (canon_m, canon_r) = canonical_system(&s.ranks, &s.degrees, s.twist, s.e)?;
    if canon_m.len() != n {
        return Err(Error::InvalidInput(
            "system size does not match its rank data".into(),
        ));
    }
    for (row, (coeffs, want)) in canon_m.iter().zip(&canon_r).enumerate() {
        let mut acc = BigRational::zero();
        for (c, xi) in coeffs.iter().zip(&x) {
            acc += c * xi;
        }
        if acc != *want {
            return Err(Error::NonzeroResidual { row });
        }
    }
    Ok(x)
}

/// Computes the determinant of the reduced coefficient matrix two ways
/// and insists they agree and are nonzero.
///
/// The reduced matrix has ones off the diagonal and alternating diagonal
/// entries 1 - r/r_2, 1 - r, 1 - r/r_4, ..., 1 - r.  Route one row
/// reduces it.  Route two writes it as diag(-r/r_2, -r, ..., -r) plus the
/// all-ones rank-one matrix and applies the matrix determinant lemma:
/// det(A + uv^T) = (1 + v^T A^{-1} u) det(A).  All 2q diagonal entries of
/// the factor matrix are negative, so det(A) = r^{2q} / (product of
/// middle ranks) is positive, and the lemma factor is
/// 1 - (q + sum of middle ranks)/r = 1/r by the rank identity
/// r = 1 + q + sum of middle ranks.  The determinant therefore equals
/// r^{2q-1} divided by the product of the middle ranks; in particular it
/// is positive.
pub fn sigma_determinant_check(ranks: &[u32]) -> Result<(BigRational, BigRational)> {
    let mid = middle_ranks(ranks)?;
    let q = mid.len();
    let r: i64 = ranks.iter().map(|&x| x as i64).sum();
    let size = 2 * q;
    let mut reduced = vec![vec![rat(1); size]; size];
    for m in 0..q {
        reduced[2 * m][2 * m] = rat(1) - ratio(r, mid[m] as i64);
        reduced[2 * m + 1][2 * m + 1] = rat(1 - r);
    }
    let by_reduction = row_reduce_det(reduced);
    let mut det_a = BigRational::one();
    let mut lemma_factor = BigRational::one();
    for &k in &mid {
        let first = -ratio(r, k as i64);
        let second = rat(-r);
        lemma_factor += first.recip() + second.recip();
        det_a = det_a * &first * &second;
    }
    let by_lemma = lemma_factor * det_a;
    if by_reduction != by_lemma {
        return Err(Error::RouteMismatch {
            quantity: "stability system determinant".into(),
            first: by_reduction.to_string(),
            second: by_lemma.to_string(),
        });
    }
    if by_reduction.is_zero() {
        return Err(Error::SingularSystem);
    }
    Ok((by_reduction, by_lemma))
}

/// Rank and degree bookkeeping for a 4q-tuple or a subtuple of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleShape {
    /// Total rank: k for the ambient tuple, k' for a subtuple.  For
    /// honest subtuples this is the sum of the slot ranks.
    pub total_rank: i64,
    /// Slot ranks k_i (2q entries; k_i = r_{i+1} on the chain side).
    pub ranks: Vec<i64>,
    /// Total degree: e for the ambient tuple, e' for a subtuple.
    pub degree: i64,
}

/// Evaluates the stable-tuple inequality for one subtuple, exactly.
///
/// The bound is e'/1 < (e/2q) sum k'_i/k_i + sum sigma_i (c - (k+1)
/// k'_i/k_i), where c = k' + 1 when the first section lands in the
/// subtuple's first slot and c = k' otherwise.  Strictness means the full
/// subtuple (equal to the ambient tuple) never passes, and a subtuple of
/// sufficiently negative degree always does; callers exclude the zero and
/// full subtuples as improper.
pub fn tuple_stability_check(
    sub: &TupleShape,
    phi1_in_sub: bool,
    ambient: &TupleShape,
    sigma: &[BigRational],
) -> Result<bool> {
    let slots = ambient.ranks.len();
    if sub.ranks.len() != slots || sigma.len() != slots || slots == 0 {
        return Err(Error::InvalidInput(format!(
            "subtuple, ambient tuple, and sigma need one shared positive slot count (got {}, {}, {})",
            sub.ranks.len(),
            slots,
            sigma.len()
        )));
    }
    for (i, (&kp, &k)) in sub.ranks.iter().zip(&ambient.ranks).enumerate() {
        if k <= 0 || kp < 0 || kp > k {
            return Err(Error::InvalidInput(format!(
                "slot {} needs 0 <= subtuple rank <= ambient rank with positive ambient rank, got {} of {}",
                i + 1,
                kp,
                k
            )));
        }
    }
    let occupancy = phi1_in_sub as i64;
    let mut bound = BigRational::zero();
    for i in 0..slots {
        let share = ratio(sub.ranks[i], ambient.ranks[i]);
        bound += ratio(ambient.degree, slots as i64) * &share;
        bound += &sigma[i]
            * (rat(sub.total_rank + occupancy) - rat(ambient.total_rank + 1) * &share);
    }
    Ok(rat(sub.degree) < bound)
}

/// Degrees of the q+1 determinant line bundles attached to the tuple of
/// an odd-length argyle labelling, computed two ways.
///
/// Route one works slotwise: entry c takes the determinants of all q
/// odd-slot bundles and, for the last c of them, divides by the adjacent
/// even-slot line bundle raised to the odd slot's rank.  Route two
/// expands the same line bundle in terms of the fixed determinant P of
/// the chain and the node degrees directly.  Both are invariant under a
/// consistent degree shift d_i -> d_i + r_i s because each tuple bundle
/// is built from a bundle and its left neighbour's inverse, so no
/// normalization is needed here.
pub fn pullback_degrees(c: &ChainLabel) -> Result<Vec<i64>> {
    let mid = middle_ranks(&c.ranks)?;
    let q = mid.len();
    let t = c.twist as i64;
    let d = &c.degrees;
    let deg_p = c.total_degree();
    let odd_slots: Vec<i64> = (0..q)
        .map(|m| {
            let k = mid[m] as i64;
            d[2 * m + 1] - k * d[2 * m] + k * t
        })
        .collect();
    let even_slots: Vec<i64> = (0..q).map(|m| d[2 * m + 2] - d[2 * m] + 2 * t).collect();
    let odd_total: i64 = odd_slots.iter().sum();
    let mut out = Vec::with_capacity(q + 1);
    for replaced in 0..=q {
        let split = q - replaced;
        let from_slots = odd_total
            - (split..q)
                .map(|m| mid[m] as i64 * even_slots[m])
                .sum::<i64>();
        let twist_weight: i64 = (0..split).map(|m| mid[m] as i64).sum::<i64>()
            - (split..q).map(|m| mid[m] as i64).sum::<i64>();
        let from_expansion = deg_p + t * twist_weight
            - (0..split)
                .map(|m| (mid[m] as i64 + 1) * d[2 * m])
                .sum::<i64>()
            - d[2 * split]
            - (split..q)
                .map(|m| (mid[m] as i64 + 1) * d[2 * m + 2])
                .sum::<i64>();
        if from_slots != from_expansion {
            return Err(Error::RouteMismatch {
                quantity: "pullback degree".into(),
                first: from_slots.to_string(),
                second: from_expansion.to_string(),
            });
        }
        out.push(from_slots);
    }
    Ok(out)
}

/// Which slope normalization to read in the alpha conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaNormalization {
    /// Divide the total slope by the arrow count n - 1.
    ChainArrows,
    /// Divide the total slope by the tuple bundle count 2q.
    TupleBundles,
}

/// Chain stability weights recovered from the tuple parameters:
/// alpha_i = (r/r_{i+1}) (sigma_i - mu/D) with mu the normalized total
/// slope and D the chosen normalization.
///
/// An odd chain of length n = 2q+1 has exactly n - 1 = 2q arrows, so the
/// two readings agree on every system this module builds; both are kept
/// so callers can name the convention they used.
pub fn alpha_from_sigma(
    s: &SigmaSystem,
    sigma: &[BigRational],
    reading: AlphaNormalization,
) -> Result<Vec<BigRational>> {
    let unknowns = s.matrix.len();
    if sigma.len() != unknowns {
        return Err(Error::InvalidInput(format!(
            "expected {} stability parameters, got {}",
            unknowns,
            sigma.len()
        )));
    }
    let divisor = match reading {
        AlphaNormalization::ChainArrows => (s.ranks.len() - 1) as i64,
        AlphaNormalization::TupleBundles => unknowns as i64,
    };
    let r: i64 = s.ranks.iter().map(|&x| x as i64).sum();
    let d: i64 = s.degrees.iter().sum();
    let mu_share = ratio(d, r * divisor);
    Ok((0..unknowns)
        .map(|i| ratio(r, s.ranks[i + 1] as i64) * (&sigma[i] - &mu_share))
        .collect())
}
