//! Exact moduli computations for twisted holomorphic chains on the
//! projective line: fixed-point labellings, splitting-type strata and their
//! closure geometry, collision classes, dimensions, Morse indices, and
//! rational Poincare series of twisted Higgs bundle moduli assembled by
//! localization.

pub mod chain;
pub mod collision;
pub mod dimension;
pub mod errata;
pub mod error;
pub mod geometry;
pub mod localization;
pub mod morse;
pub mod poly;
pub mod report;
pub mod sigma;
pub mod splitting;

pub use chain::{
    enumerate_labellings, label_admissible, slope, total_slope, ChainLabel, Slope,
};
pub use collision::{
    bpf_grassmannian_class, common_zero_class, coprime_tuple_class, euclidean_reduce,
    fq_count_oracle, interpolate_class, joint_base_point_free_class, joint_common_zero_class,
    CollisionPredicate, FormFactor, FormSpaceSpec, DEFAULT_ORACLE_BUDGET,
};
pub use dimension::{higgs_moduli_dimension, moduli_dimension, stratum_dimension};
pub use errata::{component_warnings, stratum_warnings};
pub use error::{Error, Result};
pub use geometry::{
    block_decompose, closure_geometry, describe_product, h0_end, h1_end, i_prime,
    try_closure_geometry, ArgyleBlock, GrFactor, MapSide, StratumGeometry,
};
pub use localization::{
    component_class, poincare_series, rank2_closed_form, rank2_generating_form, series_report,
    ComponentStratum, FixedComponent, SeriesReport,
};
pub use morse::morse_index;
pub use poly::{
    gaussian_class, grassmannian_class, projective_class, sym_class, to_poincare, MotivicClass,
    PoincarePoly,
};
pub use report::{
    dimension_report, oracle_report, sigma_report, stratum_report, BettiReport, ComponentRow,
    ComponentsReport, DimensionReport, OracleReport, RationalRepr, SigmaReport, StratumReport,
    StratumRow,
};
pub use sigma::{
    alpha_from_sigma, build_sigma_system, pullback_degrees, sigma_determinant_check, solve_sigma,
    tuple_stability_check, AlphaNormalization, SigmaSystem, TupleShape,
};
pub use splitting::{
    admissible_splittings, generic_splitting, slope_stable, splitting_graph, type_change_children,
    type_change_moves, GraphEdge, SplittingGraph, SplittingType,
};
