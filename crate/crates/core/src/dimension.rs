//! Expected dimensions: chain representation moduli at any genus, twisted
//! Higgs moduli on the line, and fixed-splitting strata.

use crate::chain::ChainLabel;
use crate::error::{Error, Result};
use crate::geometry::{h0_end, h1_end};
use crate::splitting::SplittingType;

/// Expected dimension of the moduli of stable representations with the given
/// labelling, from caller-supplied per-node h^0(End U_i) values.
///
/// Evaluates
/// `sum_i (r_i d_{i+1} - r_{i+1} d_i + r_i r_{i+1} t)
///  + (1 - g)(sum_i r_i r_{i+1} - sum_i r_i^2) + min_i h0`.
pub fn moduli_dimension(c: &ChainLabel, h0_end_values: &[u64]) -> Result<i64> {
    let n = c.len();
    if h0_end_values.len() != n {
        return Err(Error::InvalidInput(format!(
            "expected {} h0(End) values, got {}",
            n,
            h0_end_values.len()
        )));
    }
    if let Some(&bad) = h0_end_values.iter().find(|&&h| h == 0) {
        return Err(Error::InvalidInput(format!(
            "h0(End) values must be at least 1, got {bad}"
        )));
    }
    let t = c.twist as i64;
    let mut arrows = 0i64;
    let mut products = 0i64;
    for i in 0..n - 1 {
        let (ri, rj) = (c.ranks[i] as i64, c.ranks[i + 1] as i64);
        let (di, dj) = (c.degrees[i], c.degrees[i + 1]);
        arrows += ri * dj - rj * di + ri * rj * t;
        products += ri * rj;
    }
    let squares: i64 = c.ranks.iter().map(|&r| (r as i64) * (r as i64)).sum();
    let min_h0 = *h0_end_values.iter().min().expect("n >= 1") as i64;
    Ok(arrows + (1 - c.genus as i64) * (products - squares) + min_h0)
}

/// Complex dimension of the moduli of t-twisted rank-r Higgs bundles on the
/// line: t r^2 + 1.
pub fn higgs_moduli_dimension(r: u32, t: u32) -> i64 {
    let r = r as i64;
    t as i64 * r * r + 1
}

/// Dimension of the stratum of chains splitting as prescribed at each node
/// (genus 0): the moduli dimension with the actual h^0(End U_i) values,
/// minus the total h^1(End U_i) correction.
pub fn stratum_dimension(c: &ChainLabel, splittings: &[SplittingType]) -> Result<i64> {
    c.require_genus_zero()?;
    let n = c.len();
    if splittings.len() != n {
        return Err(Error::InvalidInput(format!(
            "expected {} splitting types, got {}",
            n,
            splittings.len()
        )));
    }
    for (i, s) in splittings.iter().enumerate() {
        if s.rank() != c.ranks[i] || s.degree() != c.degrees[i] {
            return Err(Error::InvalidInput(format!(
                "splitting {} does not match node {} of rank {} and degree {}",
                s.describe(),
                i,
                c.ranks[i],
                c.degrees[i]
            )));
        }
    }
    let h0: Vec<u64> = splittings.iter().map(h0_end).collect();
    let h1: i64 = splittings.iter().map(|s| h1_end(s) as i64).sum();
    Ok(moduli_dimension(c, &h0)? - h1)
}
