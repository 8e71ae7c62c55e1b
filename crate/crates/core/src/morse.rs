//! Morse index of a fixed-point component, from its labelling alone.

use crate::chain::ChainLabel;
use crate::error::{Error, Result};

fn chi_hom(ri: i64, di: i64, rj: i64, dj: i64, m: i64) -> i64 {
    ri * dj - rj * di + ri * rj * (m + 1)
}

/// Morse index of the fixed-point component with the given labelling:
/// `beta = 2 sum_{k=1}^{n-1} [chi(W_{k+1} ox O(t)) - chi(W_k)]` where
/// `W_k = oplus_i Hom(U_i, U_{i+k})` and `W_n = 0`.
///
/// Depends only on ranks, degrees and the twist. A negative value signals
/// an inadmissible labelling and is rejected.
pub fn morse_index(c: &ChainLabel) -> Result<u64> {
    c.require_genus_zero()?;
    let n = c.len();
    let t = c.twist as i64;
    let chi_w = |k: usize, m: i64| -> i64 {
        (0..n.saturating_sub(k))
            .map(|i| {
                chi_hom(
                    c.ranks[i] as i64,
                    c.degrees[i],
                    c.ranks[i + k] as i64,
                    c.degrees[i + k],
                    m,
                )
            })
            .sum()
    };
    let total: i64 = (1..n).map(|k| chi_w(k + 1, t) - chi_w(k, 0)).sum();
    let beta = 2 * total;
    if beta < 0 {
        return Err(Error::NegativeMorseIndex(beta));
    }
    Ok(beta as u64)
}
