//! Catalog of computed values that disagree with previously tabulated
//! ones, surfaced as warnings alongside the affected component or stratum.

use crate::chain::ChainLabel;
use crate::splitting::SplittingType;

struct Erratum {
    ranks: &'static [u32],
    degrees: &'static [i64],
    twist: u32,
    splitting: Option<&'static [i64]>,
    message: &'static str,
}

const ERRATA: [Erratum; 4] = [
    Erratum {
        ranks: &[1, 2],
        degrees: &[1, -2],
        twist: 6,
        splitting: None,
        message: "component variety computed as Gr(2,5); previously tabulated as Gr(2,4)",
    },
    Erratum {
        ranks: &[1, 1, 1],
        degrees: &[2, 1, -4],
        twist: 6,
        splitting: None,
        message: "component variety computed as P^5 x P^1; previously tabulated as P^5 x P^5",
    },
    Erratum {
        ranks: &[2, 1],
        degrees: &[1, -2],
        twist: 6,
        splitting: None,
        message: "Morse index computed as 6; previously tabulated as 4",
    },
    Erratum {
        ranks: &[1, 2, 1],
        degrees: &[2, 0, -3],
        twist: 6,
        splitting: Some(&[1, -1]),
        message: "stratum closure computed as P^2 x P^3 x P^7; \
                  previously tabulated as P^2 x P^3 x P^9",
    },
];

fn label_matches(e: &Erratum, c: &ChainLabel) -> bool {
    c.genus == 0 && c.twist == e.twist && c.ranks == e.ranks && c.degrees == e.degrees
}

fn render(e: &Erratum, c: &ChainLabel) -> String {
    format!("{c}: {}", e.message)
}

/// Warnings for a whole fixed-point component with this labelling.
pub fn component_warnings(c: &ChainLabel) -> Vec<String> {
    ERRATA
        .iter()
        .filter(|e| e.splitting.is_none() && label_matches(e, c))
        .map(|e| render(e, c))
        .collect()
}

/// Warnings for one splitting stratum of the component.
pub fn stratum_warnings(c: &ChainLabel, s: &SplittingType) -> Vec<String> {
    ERRATA
        .iter()
        .filter(|e| e.splitting.is_some_and(|parts| s.parts() == parts) && label_matches(e, c))
        .map(|e| render(e, c))
        .collect()
}
