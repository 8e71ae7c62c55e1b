//! Deterministic, machine-readable reports for the engine's command
//! surface.
//!
//! One report type per command, each a plain struct of integers, strings,
//! and domain types that already serialize canonically: polynomial
//! coefficients as arrays of decimal strings indexed by exponent, exact
//! rationals as {num, den} decimal-string pairs, splitting types as parts
//! lists.  Reports contain no maps and no timing data, so field order is
//! fixed and parsing then re-serializing a report is byte-identical.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::chain::ChainLabel;
use crate::collision::{common_zero_class, fq_count_oracle, CollisionPredicate, FormFactor, FormSpaceSpec};
use crate::dimension::{moduli_dimension, stratum_dimension};
use crate::error::{Error, Result};
use crate::errata::stratum_warnings;
use crate::geometry::{block_decompose, closure_geometry, describe_product, h0_end, StratumGeometry};
use crate::localization::{FixedComponent, SeriesReport};
use crate::poly::{MotivicClass, PoincarePoly};
use crate::sigma::{
    alpha_from_sigma, build_sigma_system, pullback_degrees, sigma_determinant_check, solve_sigma,
    AlphaNormalization,
};
use crate::splitting::{generic_splitting, SplittingType};

/// Exact rational as a pair of decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl RationalRepr {
    pub fn from_big(v: &BigRational) -> Self {
        RationalRepr {
            num: v.numer().to_string(),
            den: v.denom().to_string(),
        }
    }
}

/// Full series run: the Poincare polynomial and summary counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub rank: u32,
    pub degree: i64,
    pub twist: u32,
    /// Coefficients of the series by exponent, as decimal strings.
    pub series: PoincarePoly,
    pub euler_characteristic: String,
    pub component_count: usize,
    /// Components whose stratum surgery was ambiguous.
    pub unverified_components: usize,
    pub warnings: Vec<String>,
}

impl BettiReport {
    pub fn from_series(run: &SeriesReport) -> Self {
        BettiReport {
            rank: run.rank,
            degree: run.degree,
            twist: run.twist,
            series: run.series.clone(),
            euler_characteristic: run.euler_characteristic.to_string(),
            component_count: run.components.len(),
            unverified_components: run
                .components
                .iter()
                .filter(|c| c.surgery_ambiguous)
                .count(),
            warnings: run.warnings.clone(),
        }
    }
}

/// One splitting stratum of a component: the per-block splitting types,
/// the rendered closure product, and the locally closed class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRow {
    pub splittings: Vec<SplittingType>,
    pub geometry: String,
    pub class: MotivicClass,
}

/// One fixed-point component of a series run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRow {
    pub ranks: Vec<u32>,
    pub degrees: Vec<i64>,
    pub beta: u64,
    pub class: MotivicClass,
    pub palindromic: bool,
    /// True when a stratum surgery was ambiguous and the class is the
    /// default reading rather than a certified one.
    pub unverified: bool,
    pub strata: Vec<StratumRow>,
    pub warnings: Vec<String>,
}

impl ComponentRow {
    pub fn from_component(c: &FixedComponent) -> Self {
        ComponentRow {
            ranks: c.label.ranks.clone(),
            degrees: c.label.degrees.clone(),
            beta: c.beta,
            class: c.total_class.clone(),
            palindromic: c.palindromic,
            unverified: c.surgery_ambiguous,
            strata: c
                .strata
                .iter()
                .map(|s| StratumRow {
                    splittings: s.splittings.clone(),
                    geometry: describe_product(&s.geometries.iter().collect::<Vec<_>>()),
                    class: s.class.clone(),
                })
                .collect(),
            warnings: c.warnings.clone(),
        }
    }
}

/// Per-labelling table of a series run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentsReport {
    pub rank: u32,
    pub degree: i64,
    pub twist: u32,
    pub components: Vec<ComponentRow>,
    pub warnings: Vec<String>,
}

impl ComponentsReport {
    pub fn from_series(run: &SeriesReport) -> Self {
        ComponentsReport {
            rank: run.rank,
            degree: run.degree,
            twist: run.twist,
            components: run
                .components
                .iter()
                .map(ComponentRow::from_component)
                .collect(),
            warnings: run.warnings.clone(),
        }
    }
}

/// Closure geometry of one splitting stratum with its class and the two
/// independent dimension computations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub ranks: Vec<u32>,
    pub degrees: Vec<i64>,
    pub twist: u32,
    /// Splitting types of the rank > 1 nodes, in node order.
    pub splittings: Vec<SplittingType>,
    pub geometry: String,
    pub factors: Vec<StratumGeometry>,
    /// Point-count class of the closure product.
    pub class: MotivicClass,
    /// Dimension read off the closure factors.
    pub geometry_dimension: u64,
    /// Dimension from the expected-dimension formula with the actual
    /// cohomology of the splitting, minus the obstruction correction.
    pub formula_dimension: i64,
    pub warnings: Vec<String>,
}

/// Builds the closure report for the given middle-node splitting types,
/// one per rank > 1 node in node order.
pub fn stratum_report(c: &ChainLabel, middle: &[SplittingType]) -> Result<StratumReport> {
    let blocks = block_decompose(c)?;
    if blocks.len() != middle.len() {
        return Err(Error::InvalidInput(format!(
            "expected {} splitting types (one per rank > 1 node), got {}",
            blocks.len(),
            middle.len()
        )));
    }
    let mut factors = Vec::with_capacity(blocks.len());
    for (block, ty) in blocks.iter().zip(middle) {
        factors.push(closure_geometry(block, ty)?);
    }
    let mut class = MotivicClass::one();
    for g in &factors {
        class = &class * &g.class();
    }
    let geometry_dimension: u64 = factors.iter().map(|g| g.dimension()).sum();
    let mut per_node = Vec::with_capacity(c.len());
    let mut next_middle = middle.iter();
    for i in 0..c.len() {
        if c.ranks[i] > 1 {
            per_node.push(next_middle.next().expect("one splitting per block").clone());
        } else {
            per_node.push(SplittingType::from_parts(&[c.degrees[i]])?);
        }
    }
    let formula_dimension = stratum_dimension(c, &per_node)?;
    let mut warnings = Vec::new();
    for ty in middle {
        warnings.extend(stratum_warnings(c, ty));
    }
    Ok(StratumReport {
        ranks: c.ranks.clone(),
        degrees: c.degrees.clone(),
        twist: c.twist,
        splittings: middle.to_vec(),
        geometry: describe_product(&factors.iter().collect::<Vec<_>>()),
        factors,
        class,
        geometry_dimension,
        formula_dimension,
        warnings,
    })
}

/// Expected moduli dimension for a labelling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub ranks: Vec<u32>,
    pub degrees: Vec<i64>,
    pub twist: u32,
    pub genus: u32,
    /// The h^0(End U_i) values used, one per node.
    pub h0_end: Vec<u64>,
    pub dimension: i64,
}

/// Evaluates the expected-dimension formula.  Without explicit h^0(End)
/// values the genus-zero default takes each node's generic splitting;
/// other genera need the values supplied.
pub fn dimension_report(c: &ChainLabel, h0: Option<&[u64]>) -> Result<DimensionReport> {
    let h0_end: Vec<u64> = match h0 {
        Some(values) => values.to_vec(),
        None => {
            c.require_genus_zero().map_err(|_| {
                Error::InvalidInput(
                    "h0(End) values must be supplied explicitly for genus > 0".into(),
                )
            })?;
            c.ranks
                .iter()
                .zip(&c.degrees)
                .map(|(&r, &d)| h0_end(&generic_splitting(r, d)))
                .collect()
        }
    };
    let dimension = moduli_dimension(c, &h0_end)?;
    Ok(DimensionReport {
        ranks: c.ranks.clone(),
        degrees: c.degrees.clone(),
        twist: c.twist,
        genus: c.genus,
        h0_end,
        dimension,
    })
}

/// Stability parameters of an odd-length argyle labelling: the solved
/// sigma vector, the alpha conversion, the determinant check, and the
/// degrees of the determinant line bundles of the pullback.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaReport {
    pub ranks: Vec<u32>,
    pub degrees: Vec<i64>,
    pub twist: u32,
    /// Degree shift applied internally so the first node has degree zero.
    pub shift: i64,
    /// Total degree of the associated tuple after normalization.
    pub tuple_degree: i64,
    pub sigma: Vec<RationalRepr>,
    pub alpha: Vec<RationalRepr>,
    pub determinant: RationalRepr,
    pub determinant_closed_form: RationalRepr,
    pub pullback_degrees: Vec<i64>,
}

/// Solves the stability system and assembles the full parameter report.
pub fn sigma_report(c: &ChainLabel) -> Result<SigmaReport> {
    let system = build_sigma_system(c)?;
    let sigma = solve_sigma(&system)?;
    let alpha = alpha_from_sigma(&system, &sigma, AlphaNormalization::ChainArrows)?;
    let (det, closed) = sigma_determinant_check(&c.ranks)?;
    let b = pullback_degrees(c)?;
    Ok(SigmaReport {
        ranks: c.ranks.clone(),
        degrees: c.degrees.clone(),
        twist: c.twist,
        shift: system.shift,
        tuple_degree: system.e,
        sigma: sigma.iter().map(RationalRepr::from_big).collect(),
        alpha: alpha.iter().map(RationalRepr::from_big).collect(),
        determinant: RationalRepr::from_big(&det),
        determinant_closed_form: RationalRepr::from_big(&closed),
        pullback_degrees: b,
    })
}

/// Exhaustive finite-field count against the closed-form prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    /// Degrees of the projectivized forms, one per tuple slot.
    pub degrees: Vec<u32>,
    pub modulus: u64,
    /// Number of tuples sharing a zero, by enumeration.
    pub count: String,
    /// The common-zero class evaluated at the modulus.
    pub predicted: String,
    pub matches: bool,
}

/// Counts tuples of projectivized forms of the given degrees sharing a
/// zero over the prime field, and compares with the closed-form class.
pub fn oracle_report(degrees: &[u32], modulus: u64, budget: Option<u64>) -> Result<OracleReport> {
    let spec = FormSpaceSpec {
        factors: degrees
            .iter()
            .map(|&degree| FormFactor::Projective { degree })
            .collect(),
    };
    let count = fq_count_oracle(&spec, CollisionPredicate::CommonZero, modulus, budget)?;
    let predicted = common_zero_class(degrees)?.eval(&modulus.into());
    Ok(OracleReport {
        degrees: degrees.to_vec(),
        modulus,
        count: count.to_string(),
        predicted: predicted.to_string(),
        matches: predicted.to_string() == count.to_string(),
    })
}
