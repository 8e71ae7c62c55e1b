//! Block decomposition of an argyle chain and the closure geometry of a
//! fixed splitting stratum: projective and Grassmannian factors with their
//! classes, dimensions, and canonical descriptions.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::chain::{total_slope, ChainLabel, Slope};
use crate::error::{Error, Result};
use crate::poly::{gaussian_class, projective_class, MotivicClass};
use crate::splitting::SplittingType;

/// One (1,k,1) piece of an argyle chain: a middle node with up to two
/// rank-one anchor degrees beside it. The aggregated degree and rank of the
/// chain strictly right of the middle node feed the slope tests; both are
/// zero exactly when there is no right anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgyleBlock {
    pub left_degree: Option<i64>,
    pub middle_rank: u32,
    pub middle_degree: i64,
    pub right_degree: Option<i64>,
    pub twist: u32,
    pub global_slope: Slope,
    pub right_suffix_degree: i64,
    pub right_suffix_rank: u32,
}

/// Which arrow of the block a map system belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MapSide {
    /// Maps from a middle summand into the right anchor.
    Outgoing,
    /// Maps from the left anchor into a middle summand.
    Incoming,
}

/// One Grassmannian factor Gr(subspace, ambient) of a stratum closure,
/// recording which summand class and which arrow produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrFactor {
    pub subspace: u32,
    pub ambient: u32,
    pub side: MapSide,
    pub class_index: usize,
}

/// The closure of one splitting stratum of a block: an optional projective
/// factor and a list of Grassmannian factors in class order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumGeometry {
    pub proj_dim: Option<u32>,
    pub gr_factors: Vec<GrFactor>,
}

type FactorKey = (u8, u32, u32);

fn factor_entries(g: &StratumGeometry) -> Vec<(FactorKey, String)> {
    let mut out = Vec::new();
    if let Some(q) = g.proj_dim {
        out.push(projective_entry(q));
    }
    for f in &g.gr_factors {
        if f.subspace == f.ambient {
            out.push(((0, 0, 0), "{pt}".into()));
        } else if f.subspace == 1 {
            out.push(projective_entry(f.ambient - 1));
        } else {
            out.push((
                (2, f.subspace, f.ambient),
                format!("Gr({},{})", f.subspace, f.ambient),
            ));
        }
    }
    out
}

fn projective_entry(dim: u32) -> (FactorKey, String) {
    if dim == 0 {
        ((0, 0, 0), "{pt}".into())
    } else {
        ((1, dim, 0), format!("P^{dim}"))
    }
}

fn render_entries(mut entries: Vec<(FactorKey, String)>) -> String {
    entries.sort();
    let texts: Vec<String> = entries.into_iter().map(|(_, s)| s).collect();
    texts.join(" x ")
}

impl StratumGeometry {
    /// Point count polynomial: the projective factor times all Grassmannian
    /// factors.
    pub fn class(&self) -> MotivicClass {
        let mut c = match self.proj_dim {
            Some(q) => projective_class(q),
            None => MotivicClass::one(),
        };
        for f in &self.gr_factors {
            c = &c * &gaussian_class(f.subspace, f.ambient);
        }
        c
    }

    /// Complex dimension of the closure.
    pub fn dimension(&self) -> u64 {
        let mut d = self.proj_dim.unwrap_or(0) as u64;
        for f in &self.gr_factors {
            d += f.subspace as u64 * (f.ambient - f.subspace) as u64;
        }
        d
    }

    /// Canonical rendering, e.g. "P^2 x P^3 x P^6" or "P^9 x Gr(2,4)".
    /// Point factors print as "{pt}"; Gr(1,N) prints as P^(N-1).
    pub fn describe(&self) -> String {
        render_entries(factor_entries(self))
    }
}

/// Canonical rendering of a product of stratum closures across blocks.
/// Point factors are dropped unless the whole product is a point.
pub fn describe_product(geometries: &[&StratumGeometry]) -> String {
    let mut entries = Vec::new();
    for g in geometries {
        entries.extend(factor_entries(g));
    }
    entries.retain(|(key, _)| *key != (0, 0, 0));
    if entries.is_empty() {
        return "{pt}".into();
    }
    render_entries(entries)
}

/// The number of summand classes with degree strictly above the global
/// slope. A summand degree equal to the slope is impossible under total
/// coprimality and aborts loudly.
pub fn i_prime(s: &SplittingType, mu: Slope) -> Result<usize> {
    let mut count = 0;
    for &(a, _) in s.classes() {
        let value = Rational64::from_integer(a);
        if value == mu {
            return Err(Error::SlopeCollision {
                degree: a,
                slope: format!("{}/{}", mu.numer(), mu.denom()),
            });
        }
        if value > mu {
            count += 1;
        }
    }
    Ok(count)
}

/// Closure of the stratum of the block where the middle bundle has the given
/// splitting type.
///
/// With classes a_1 > ... > a_m (multiplicities s_j), anchors d1/d3, twist t
/// and i' classes above the global slope:
/// - classes above the slope carry constrained outgoing systems
///   Gr(s_j, d3 - a_j + t + 1 - sum_{k<j} s_k (a_k - a_j + 1));
/// - classes below carry constrained incoming systems
///   Gr(s_j, a_j - d1 + t + 1 - sum_{k>j} s_k (a_j - a_k + 1));
/// - with both anchors present the free maps on the other arrow contribute
///   one projective factor of dimension
///   q = sum_{j<=i'} s_j (a_j - d1 + t + 1)
///     + sum_{j>i'} s_j (d3 - a_j + t + 1) - 1
///     - sum_{j<=i'} sum_{k>i'} s_j s_k (a_j - a_k + 1).
///
/// A single-anchor block requires every class on the anchored side of the
/// slope and has no projective factor. Empty output (some Gr(s, N) with
/// N < s, q < 0, or a one-anchor side mismatch) reports EmptyStratum.
pub fn closure_geometry(block: &ArgyleBlock, s: &SplittingType) -> Result<StratumGeometry> {
    if s.rank() != block.middle_rank || s.degree() != block.middle_degree {
        return Err(Error::InvalidInput(format!(
            "splitting {} does not match a middle node of rank {} and degree {}",
            s.describe(),
            block.middle_rank,
            block.middle_degree
        )));
    }
    let classes = s.classes();
    let m = classes.len();
    let t = block.twist as i64;
    let ip = i_prime(s, block.global_slope)?;
    let (d1, d3) = match (block.left_degree, block.right_degree) {
        (None, None) => {
            return Err(Error::InvalidInput(
                "block has no anchors on either side".into(),
            ))
        }
        (Some(d1), None) => {
            if ip != 0 {
                return Err(Error::EmptyStratum(format!(
                    "splitting {} has a summand above the slope but no right anchor",
                    s.describe()
                )));
            }
            (Some(d1), None)
        }
        (None, Some(d3)) => {
            if ip != m {
                return Err(Error::EmptyStratum(format!(
                    "splitting {} has a summand below the slope but no left anchor",
                    s.describe()
                )));
            }
            (None, Some(d3))
        }
        (Some(d1), Some(d3)) => (Some(d1), Some(d3)),
    };

    let mut gr_factors = Vec::new();
    for (j, &(a, sj)) in classes.iter().enumerate() {
        let ambient = if j < ip {
            let d3 = d3.expect("classes above the slope need a right anchor");
            d3 - a + t + 1
                - classes[..j]
                    .iter()
                    .map(|&(ak, sk)| sk as i64 * (ak - a + 1))
                    .sum::<i64>()
        } else {
            let d1 = d1.expect("classes below the slope need a left anchor");
            a - d1 + t + 1
                - classes[j + 1..]
                    .iter()
                    .map(|&(ak, sk)| sk as i64 * (a - ak + 1))
                    .sum::<i64>()
        };
        if ambient < sj as i64 {
            return Err(Error::EmptyStratum(format!(
                "class {} of splitting {} needs Gr({},{})",
                j + 1,
                s.describe(),
                sj,
                ambient
            )));
        }
        gr_factors.push(GrFactor {
            subspace: sj,
            ambient: ambient as u32,
            side: if j < ip {
                MapSide::Outgoing
            } else {
                MapSide::Incoming
            },
            class_index: j,
        });
    }

    let proj_dim = match (d1, d3) {
        (Some(d1), Some(d3)) => {
            let mut q: i64 = -1;
            for (j, &(a, sj)) in classes.iter().enumerate() {
                q += sj as i64
                    * if j < ip {
                        a - d1 + t + 1
                    } else {
                        d3 - a + t + 1
                    };
            }
            for &(aj, sj) in &classes[..ip] {
                for &(ak, sk) in &classes[ip..] {
                    q -= sj as i64 * sk as i64 * (aj - ak + 1);
                }
            }
            if q < 0 {
                return Err(Error::EmptyStratum(format!(
                    "splitting {} leaves projective dimension {}",
                    s.describe(),
                    q
                )));
            }
            Some(q as u32)
        }
        _ => None,
    };

    Ok(StratumGeometry {
        proj_dim,
        gr_factors,
    })
}

/// closure_geometry with EmptyStratum mapped to None; other errors pass
/// through.
pub fn try_closure_geometry(
    block: &ArgyleBlock,
    s: &SplittingType,
) -> Result<Option<StratumGeometry>> {
    match closure_geometry(block, s) {
        Ok(g) => Ok(Some(g)),
        Err(Error::EmptyStratum(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Projective free-parameter count with the two anchor tallies exchanged:
/// classes above the slope counted against the right anchor and classes
/// below against the left. Kept only as a diagnostic for comparing
/// alternative bookkeepings of the free maps; plays no part in class
/// assembly. Needs both anchors.
pub fn projective_dimension_swapped(block: &ArgyleBlock, s: &SplittingType) -> Result<i64> {
    let (d1, d3) = match (block.left_degree, block.right_degree) {
        (Some(d1), Some(d3)) => (d1, d3),
        _ => {
            return Err(Error::InvalidInput(
                "the swapped tally needs both anchors".into(),
            ))
        }
    };
    let classes = s.classes();
    let t = block.twist as i64;
    let ip = i_prime(s, block.global_slope)?;
    let mut q: i64 = -1;
    for (j, &(a, sj)) in classes.iter().enumerate() {
        q += sj as i64
            * if j < ip {
                d3 - a + t + 1
            } else {
                a - d1 + t + 1
            };
    }
    for &(aj, sj) in &classes[..ip] {
        for &(ak, sk) in &classes[ip..] {
            q -= sj as i64 * sk as i64 * (aj - ak + 1);
        }
    }
    Ok(q)
}

/// Splits an argyle chain into blocks, each covering every arrow exactly
/// once, ordered left to right by middle node:
/// - every rank > 1 node becomes the middle of one block with its adjacent
///   rank-one degrees as anchors;
/// - an arrow between two rank-one nodes not adjacent to any rank > 1 node
///   becomes a one-arrow block anchored at its source;
/// - a chain with all ranks one instead pairs arrows greedily: two-sided
///   blocks at nodes 2, 4, ... and, for even length, a final one-arrow
///   block at the last node.
pub fn block_decompose(c: &ChainLabel) -> Result<Vec<ArgyleBlock>> {
    c.require_genus_zero()?;
    c.require_argyle()?;
    let n = c.len();
    if n == 1 {
        return if c.ranks[0] == 1 {
            Ok(Vec::new())
        } else {
            Err(Error::InvalidInput(
                "a rank > 1 node needs at least one arrow".into(),
            ))
        };
    }
    let mu = total_slope(c);

    // (middle index, left anchor present, right anchor present)
    let mut shapes: Vec<(usize, bool, bool)> = Vec::new();
    if c.ranks.iter().any(|&r| r > 1) {
        let mut covered = vec![false; n - 1];
        for i in 0..n {
            if c.ranks[i] > 1 {
                shapes.push((i, i > 0, i < n - 1));
                if i > 0 {
                    covered[i - 1] = true;
                }
                if i < n - 1 {
                    covered[i] = true;
                }
            }
        }
        for a in 0..n - 1 {
            if !covered[a] {
                shapes.push((a + 1, true, false));
            }
        }
        shapes.sort_unstable();
    } else {
        let mut i = 1;
        while i + 1 < n {
            shapes.push((i, true, true));
            i += 2;
        }
        if n % 2 == 0 {
            shapes.push((n - 1, true, false));
        }
    }

    let blocks = shapes
        .into_iter()
        .map(|(i, left, right)| {
            let (suffix_degree, suffix_rank) = if right {
                (
                    c.degrees[i + 1..].iter().sum(),
                    c.ranks[i + 1..].iter().sum(),
                )
            } else {
                (0, 0)
            };
            ArgyleBlock {
                left_degree: if left { Some(c.degrees[i - 1]) } else { None },
                middle_rank: c.ranks[i],
                middle_degree: c.degrees[i],
                right_degree: if right { Some(c.degrees[i + 1]) } else { None },
                twist: c.twist,
                global_slope: mu,
                right_suffix_degree: suffix_degree,
                right_suffix_rank: suffix_rank,
            }
        })
        .collect();
    Ok(blocks)
}

/// Sections of the endomorphism bundle of a bundle with this splitting.
pub fn h0_end(s: &SplittingType) -> u64 {
    let parts = s.parts();
    let mut total = 0i64;
    for &a in &parts {
        for &b in &parts {
            total += (a - b + 1).max(0);
        }
    }
    total as u64
}

/// First cohomology of the endomorphism bundle of a bundle with this
/// splitting.
pub fn h1_end(s: &SplittingType) -> u64 {
    let parts = s.parts();
    let mut total = 0i64;
    for &a in &parts {
        for &b in &parts {
            total += (b - a - 1).max(0);
        }
    }
    total as u64
}
