//! Fixed-point components of the circle action assembled over splitting
//! strata, and the localization sum giving the rational Poincare series of
//! twisted Higgs moduli on the line.

use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::chain::{enumerate_labellings, label_admissible, ChainLabel};
use crate::collision::joint_common_zero_class;
use crate::errata::component_warnings;
use crate::error::{Error, Result};
use crate::geometry::{block_decompose, closure_geometry, i_prime, ArgyleBlock, MapSide, StratumGeometry};
use crate::morse::morse_index;
use crate::poly::{projective_class, to_poincare, MotivicClass, PoincarePoly};
use crate::splitting::{admissible_splittings, type_change_moves, SplittingType};

/// One splitting stratum of a fixed-point component: a splitting type per
/// block, the closure geometries, and the locally closed stratum class.
#[derive(Debug, Clone)]
pub struct ComponentStratum {
    pub splittings: Vec<SplittingType>,
    pub geometries: Vec<StratumGeometry>,
    pub class: MotivicClass,
}

/// A connected component of the fixed-point locus, with its stratification
/// by splitting types and the assembled point-count class.
#[derive(Debug, Clone)]
pub struct FixedComponent {
    pub label: ChainLabel,
    pub beta: u64,
    pub strata: Vec<ComponentStratum>,
    pub total_class: MotivicClass,
    pub palindromic: bool,
    pub surgery_ambiguous: bool,
    /// When a surgery is ambiguous: the product of the blocks' generic
    /// closure classes, the completion-of-the-regular-part reading.
    pub ambiguous_alternative: Option<MotivicClass>,
    pub warnings: Vec<String>,
}

/// The full localization run for one (rank, degree, twist).
#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub rank: u32,
    pub degree: i64,
    pub twist: u32,
    pub components: Vec<FixedComponent>,
    pub series: PoincarePoly,
    pub euler_characteristic: BigInt,
    pub warnings: Vec<String>,
}

struct BlockStrata {
    types: Vec<SplittingType>,
    geometries: Vec<StratumGeometry>,
    classes: Vec<MotivicClass>,
    total: MotivicClass,
    generic_closure: MotivicClass,
    ambiguous: bool,
}

/// Collision class removed from a two-sided closure for the move raising
/// class `ci` and lowering class `cj`: the projective factor times the
/// untouched Grassmannians times the joint common-zero class of the
/// outgoing systems of classes 0..=ci and incoming systems of cj.. .
fn two_sided_collision(geom: &StratumGeometry, ci: usize, cj: usize) -> Result<MotivicClass> {
    let q = geom.proj_dim.ok_or_else(|| {
        Error::InvalidInput("two-sided stratum is missing its projective factor".into())
    })?;
    let mut touched = Vec::new();
    let mut collision = projective_class(q);
    for f in &geom.gr_factors {
        let in_collection = match f.side {
            MapSide::Outgoing => f.class_index <= ci,
            MapSide::Incoming => f.class_index >= cj,
        };
        if in_collection {
            touched.push((f.subspace, f.ambient - 1));
        } else {
            collision = &collision * &crate::poly::gaussian_class(f.subspace, f.ambient);
        }
    }
    Ok(&collision * &joint_common_zero_class(&touched)?)
}

/// Collision class removed once from a one-sided closure that has a stable
/// child: the joint common-zero class of all of its map systems.
fn one_sided_collision(geom: &StratumGeometry) -> Result<MotivicClass> {
    let systems: Vec<(u32, u32)> = geom
        .gr_factors
        .iter()
        .map(|f| (f.subspace, f.ambient - 1))
        .collect();
    joint_common_zero_class(&systems)
}

fn block_strata(block: &ArgyleBlock) -> Result<BlockStrata> {
    let types = admissible_splittings(block)?;
    if types.is_empty() {
        return Err(Error::InvalidInput(
            "block has no stable splitting types".into(),
        ));
    }
    let geometries: Vec<StratumGeometry> = types
        .iter()
        .map(|ty| closure_geometry(block, ty))
        .collect::<Result<_>>()?;
    let admissible: HashSet<Vec<i64>> = types.iter().map(|ty| ty.parts()).collect();
    let two_sided = block.left_degree.is_some() && block.right_degree.is_some();
    let mut ambiguous = false;
    let mut classes = Vec::with_capacity(types.len());
    for (ty, geom) in types.iter().zip(&geometries) {
        let stable_moves: Vec<(usize, usize)> = type_change_moves(ty)
            .into_iter()
            .filter(|(_, _, child)| admissible.contains(&child.parts()))
            .map(|(i, j, _)| (i, j))
            .collect();
        let mut class = geom.class();
        if !stable_moves.is_empty() {
            if two_sided {
                let ip = i_prime(ty, block.global_slope)?;
                for &(ci, cj) in &stable_moves {
                    if ci < ip && cj >= ip {
                        class = &class - &two_sided_collision(geom, ci, cj)?;
                    } else {
                        ambiguous = true;
                    }
                }
            } else {
                class = &class - &one_sided_collision(geom)?;
                if stable_moves.len() > 1 {
                    ambiguous = true;
                }
            }
        }
        class.check_nonnegative()?;
        classes.push(class);
    }
    let mut total = MotivicClass::zero();
    for c in &classes {
        total = &total + c;
    }
    Ok(BlockStrata {
        generic_closure: geometries[0].class(),
        types,
        geometries,
        classes,
        total,
        ambiguous,
    })
}

/// Assembles the fixed-point component of an admissible labelling: per
/// block, closure classes minus collision classes for moves to stable
/// children, multiplied across blocks.
pub fn component_class(label: &ChainLabel) -> Result<FixedComponent> {
    if !label_admissible(label)? {
        return Err(Error::InvalidInput(format!(
            "labelling {label} is not admissible"
        )));
    }
    let beta = morse_index(label)?;
    let blocks = block_decompose(label)?;
    let per_block: Vec<BlockStrata> = blocks.iter().map(block_strata).collect::<Result<_>>()?;
    let mut strata = vec![ComponentStratum {
        splittings: Vec::new(),
        geometries: Vec::new(),
        class: MotivicClass::one(),
    }];
    for bs in &per_block {
        let mut next = Vec::with_capacity(strata.len() * bs.types.len());
        for st in &strata {
            for ((ty, geom), cls) in bs.types.iter().zip(&bs.geometries).zip(&bs.classes) {
                let mut splittings = st.splittings.clone();
                splittings.push(ty.clone());
                let mut geometries = st.geometries.clone();
                geometries.push(geom.clone());
                next.push(ComponentStratum {
                    splittings,
                    geometries,
                    class: &st.class * cls,
                });
            }
        }
        strata = next;
    }
    let mut total_class = MotivicClass::one();
    for bs in &per_block {
        total_class = &total_class * &bs.total;
    }
    total_class.check_nonnegative()?;
    let palindromic = total_class.is_palindromic();
    let surgery_ambiguous = per_block.iter().any(|b| b.ambiguous) || !palindromic;
    let ambiguous_alternative = surgery_ambiguous.then(|| {
        let mut alt = MotivicClass::one();
        for bs in &per_block {
            alt = &alt * &bs.generic_closure;
        }
        alt
    });
    Ok(FixedComponent {
        warnings: component_warnings(label),
        label: label.clone(),
        beta,
        strata,
        total_class,
        palindromic,
        surgery_ambiguous,
        ambiguous_alternative,
    })
}

/// All fixed-point components of the twist-t rank-r degree-d moduli,
/// in canonical labelling order, with the localization series.
pub fn series_report(rank: u32, degree: i64, twist: u32) -> Result<SeriesReport> {
    let labels = if rank == 1 {
        vec![ChainLabel::on_line(vec![1], vec![degree], twist)?]
    } else {
        enumerate_labellings(rank, degree, twist)?
    };
    let components: Vec<FixedComponent> = labels
        .par_iter()
        .map(component_class)
        .collect::<Result<_>>()?;
    let mut series = PoincarePoly::zero();
    for c in &components {
        series = series.add(&to_poincare(&c.total_class, c.beta as i64)?);
    }
    let euler_characteristic = series.euler_characteristic();
    let warnings = components
        .iter()
        .flat_map(|c| c.warnings.iter().cloned())
        .collect();
    Ok(SeriesReport {
        rank,
        degree,
        twist,
        components,
        series,
        euler_characteristic,
        warnings,
    })
}

/// The rational Poincare series of the twisted Higgs moduli, summed over
/// fixed components as x^beta times the component class at q = x^2.
pub fn poincare_series(rank: u32, degree: i64, twist: u32) -> Result<PoincarePoly> {
    Ok(series_report(rank, degree, twist)?.series)
}

fn require_odd(degree: i64) -> Result<()> {
    if degree % 2 == 0 {
        return Err(Error::NotCoprime {
            rank: 2,
            degree,
            gcd: 2,
        });
    }
    Ok(())
}

/// Closed form of the rank-2 series for odd d:
/// coefficient of x^(2k) is (2k + 4 - (2k mod 4)) / 4, for k = 0..t-1.
pub fn rank2_closed_form(twist: u32, degree: i64) -> Result<PoincarePoly> {
    require_odd(degree)?;
    let mut coeffs = Vec::with_capacity(2 * twist as usize);
    for k in 0..twist as i64 {
        coeffs.push((2 * k + 4 - (2 * k).rem_euclid(4)) / 4);
        coeffs.push(0);
    }
    Ok(PoincarePoly::from_coeffs(&coeffs))
}

/// The same series computed from the change-making generating function
///
/// `1/((1-x^2)(1-x^4)) - (floor(t/2)+1) x^(2t)/(1-x^2)
///  - x^(4 floor(t/2) + 4)/((1-x^2)(1-x^4))`
///
/// expanded as a truncated power series; the tail must cancel exactly.
pub fn rank2_generating_form(twist: u32, degree: i64) -> Result<PoincarePoly> {
    require_odd(degree)?;
    let t = twist as usize;
    let half = t / 2;
    let len = 2 * t + 4 * half + 8;
    let geom2: Vec<i64> = vec![1; len];
    let mut geom24 = vec![0i64; len];
    for i in (0..len).step_by(2) {
        for k in 0..len - i {
            geom24[i + k] += geom2[k];
        }
    }
    let mut series = vec![0i64; len];
    for (k, &c) in geom24.iter().enumerate() {
        series[k] += c;
    }
    for k in t..len {
        series[k] -= (half as i64 + 1) * geom2[k - t];
    }
    for k in 2 * half + 2..len {
        series[k] -= geom24[k - 2 * half - 2];
    }
    if series[t..].iter().any(|&c| c != 0) {
        return Err(Error::InvalidInput(
            "generating function tail did not cancel".into(),
        ));
    }
    let mut coeffs = Vec::with_capacity(2 * t);
    for &c in &series[..t] {
        coeffs.push(c);
        coeffs.push(0);
    }
    Ok(PoincarePoly::from_coeffs(&coeffs))
}
