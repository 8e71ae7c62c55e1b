//! Splitting types of bundles on the projective line, the generic splitting,
//! the type-change move lattice, and slope-admissibility of splittings
//! relative to an argyle block.

use std::collections::HashMap;

use num_integer::Integer;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chain::slope;
use crate::error::{Error, Result};
use crate::geometry::{self, ArgyleBlock};

/// A splitting type: distinct summand degrees a_1 > a_2 > ... > a_m with
/// positive multiplicities s_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    classes: Vec<(i64, u32)>,
}

impl SplittingType {
    /// Builds from (degree, multiplicity) classes; degrees must strictly
    /// decrease and multiplicities must be positive.
    pub fn new(classes: Vec<(i64, u32)>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::InvalidSplitting("no summands".into()));
        }
        for w in classes.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::InvalidSplitting(format!(
                    "degrees not strictly decreasing: {} then {}",
                    w[0].0, w[1].0
                )));
            }
        }
        if classes.iter().any(|&(_, s)| s == 0) {
            return Err(Error::InvalidSplitting("zero multiplicity".into()));
        }
        Ok(SplittingType { classes })
    }

    /// Builds from an unsorted list of summand degrees.
    pub fn from_parts(parts: &[i64]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSplitting("no summands".into()));
        }
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut classes: Vec<(i64, u32)> = Vec::new();
        for a in sorted {
            match classes.last_mut() {
                Some((deg, mult)) if *deg == a => *mult += 1,
                _ => classes.push((a, 1)),
            }
        }
        SplittingType::new(classes)
    }

    /// The distinct (degree, multiplicity) classes, degrees decreasing.
    pub fn classes(&self) -> &[(i64, u32)] {
        &self.classes
    }

    /// Summand degrees expanded with multiplicity, decreasing.
    pub fn parts(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for &(a, s) in &self.classes {
            out.extend(std::iter::repeat(a).take(s as usize));
        }
        out
    }

    pub fn rank(&self) -> u32 {
        self.classes.iter().map(|&(_, s)| s).sum()
    }

    pub fn degree(&self) -> i64 {
        self.classes.iter().map(|&(a, s)| a * s as i64).sum()
    }

    /// Number of distinct summand degrees m.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sum of squared summand degrees; strictly increases along moves.
    pub fn sum_of_squares(&self) -> i64 {
        self.classes.iter().map(|&(a, s)| a * a * s as i64).sum()
    }

    /// True when max degree - min degree <= 1.
    pub fn is_generic(&self) -> bool {
        self.classes[0].0 - self.classes.last().unwrap().0 <= 1
    }

    /// Rendering like "(1,-2)" with summands in decreasing order.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.parts().iter().map(|a| a.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl Serialize for SplittingType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SplittingType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(deserializer)?;
        SplittingType::from_parts(&parts).map_err(D::Error::custom)
    }
}

/// The balanced splitting of (rank k, degree d): s copies of a+1 and k-s
/// copies of a, where a = floor(d/k) and s = d - k*a.
pub fn generic_splitting(rank: u32, degree: i64) -> SplittingType {
    let k = rank as i64;
    let a = Integer::div_floor(&degree, &k);
    let s = (degree - k * a) as u32;
    let mut classes = Vec::new();
    if s > 0 {
        classes.push((a + 1, s));
    }
    if rank - s > 0 {
        classes.push((a, rank - s));
    }
    SplittingType::new(classes).expect("generic splitting is well formed")
}

/// One type-change move: raise one summand of class i by 1 and lower one
/// summand of class j >= i by 1 (same class needs multiplicity >= 2).
/// Returns (i, j, child) triples; every move strictly increases the sum of
/// squared degrees, and distinct moves give distinct children.
pub fn type_change_moves(s: &SplittingType) -> Vec<(usize, usize, SplittingType)> {
    let classes = s.classes();
    let m = classes.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            if i == j && classes[i].1 < 2 {
                continue;
            }
            let mut parts = s.parts();
            let raise = parts.iter().position(|&a| a == classes[i].0).unwrap();
            parts[raise] += 1;
            let lower = parts.iter().rposition(|&a| a == classes[j].0).unwrap();
            parts[lower] -= 1;
            let child = SplittingType::from_parts(&parts).expect("move output is well formed");
            assert!(
                child.sum_of_squares() > s.sum_of_squares(),
                "type-change move must increase the degree spread"
            );
            out.push((i, j, child));
        }
    }
    out
}

/// Children of one type-change move, without the move bookkeeping.
pub fn type_change_children(s: &SplittingType) -> Vec<SplittingType> {
    type_change_moves(s).into_iter().map(|(_, _, c)| c).collect()
}

/// Slope stability of a splitting inside its block, tested on the generic
/// representation of the stratum through three families of invariant
/// subchains.
///
/// Family 1, top summands plus the aggregated right suffix (D, R), with
/// parts a_1 >= a_2 >= ... (with multiplicity):
/// - both anchors present: (D + a_1 + ... + a_p)/(R + p) < mu for p = 0..k;
/// - no left anchor: same but only p = 0..k-1 (p = k is the whole chain);
/// - no right anchor: (a_1 + ... + a_p)/p < mu for p = 1..k.
/// Equality here is impossible under total coprimality and aborts loudly.
///
/// Family 2, when a left anchor d1 exists: the anchor's map lands in the
/// summands with a_i + t - d1 >= 0. If none is in range the map vanishes
/// identically and the rest of the chain splits off: unstable. Otherwise the
/// saturation of the generic image is a line of degree d1 - t (or the lone
/// in-range summand when only one is). Joining it with the p-1 highest
/// remaining summands gives, for p = 1..k-1, both the subchain
/// (anchor + V_p + suffix) and the middle-only quotient U_2/V_p; the quotient
/// covers subchains that also thread every node left of the anchor. Partial
/// unions with a strict segment of a longer prefix are not representable
/// block-locally and are not tested.
///
/// Family 3, when a right anchor d3 exists: the forced map onto the anchor
/// kills the summands with a_i > d3 + t. If every summand is killed the map
/// vanishes and the suffix splits off: unstable. Otherwise the kernel of the
/// restriction to the top p+1 in-range summands is generically a rank-p
/// subbundle of degree (their sum) - d3 - t, invariant with nothing attached,
/// for p = 1..(in-range count)-1.
///
/// In families 2 and 3 a subchain of slope exactly mu means the generic
/// representation is strictly semistable, hence not stable: equality returns
/// false rather than erroring.
pub fn slope_stable(block: &ArgyleBlock, s: &SplittingType) -> Result<bool> {
    let mu = block.global_slope;
    let parts = s.parts();
    let k = parts.len();
    let t = block.twist as i64;
    let (range, use_suffix) = if block.right_degree.is_none() {
        (1..=k, false)
    } else if block.left_degree.is_none() {
        (0..=k - 1, true)
    } else {
        (0..=k, true)
    };
    let (suffix_degree, suffix_rank) = if use_suffix {
        (block.right_suffix_degree, block.right_suffix_rank as i64)
    } else {
        (0, 0)
    };
    for p in range {
        let top: i64 = parts[..p].iter().sum();
        let num = suffix_degree + top;
        let den = suffix_rank + p as i64;
        if den == 0 {
            continue;
        }
        let value = slope(num, den);
        if value == mu {
            return Err(Error::SlopeCollision {
                degree: num,
                slope: format!("{}/{}", mu.numer(), mu.denom()),
            });
        }
        if value > mu {
            return Ok(false);
        }
    }
    if let Some(d1) = block.left_degree {
        let in_range = parts.iter().take_while(|&&a| a + t - d1 >= 0).count();
        if in_range == 0 {
            return Ok(false);
        }
        let (image_degree, rest) = if in_range == 1 {
            (parts[0], &parts[1..])
        } else {
            (d1 - t, &parts[..])
        };
        for p in 1..k {
            let sub: i64 = image_degree + rest[..p - 1].iter().sum::<i64>();
            if slope(d1 + sub + suffix_degree, 1 + p as i64 + suffix_rank) >= mu {
                return Ok(false);
            }
            if slope(s.degree() - sub, (k - p) as i64) <= mu {
                return Ok(false);
            }
        }
    }
    if let Some(d3) = block.right_degree {
        let killed = parts.iter().take_while(|&&a| a > d3 + t).count();
        let in_range = &parts[killed..];
        if in_range.is_empty() {
            return Ok(false);
        }
        for p in 1..in_range.len() {
            let num: i64 = in_range[..p + 1].iter().sum::<i64>() - d3 - t;
            if slope(num, p as i64) >= mu {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An edge of the splitting graph: the move raised a summand of class
/// `from_class` and lowered one of class `to_class` (indices into the
/// parent's classes), landing on `types[child]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub from_class: usize,
    pub to_class: usize,
    pub child: usize,
}

/// All slope-stable splitting types reachable from the generic one by
/// type-change moves, with the move edges between them.
#[derive(Debug, Clone)]
pub struct SplittingGraph {
    /// Stable types sorted by (sum of squares, parts); the generic type,
    /// when stable, is first.
    pub types: Vec<SplittingType>,
    /// `children[i]` lists the moves out of `types[i]` into stable children.
    pub children: Vec<Vec<GraphEdge>>,
}

/// Builds the splitting graph of the block's middle node.
pub fn splitting_graph(block: &ArgyleBlock) -> Result<SplittingGraph> {
    let generic = generic_splitting(block.middle_rank, block.middle_degree);
    if !slope_stable(block, &generic)? {
        return Ok(SplittingGraph {
            types: Vec::new(),
            children: Vec::new(),
        });
    }
    let mut types = vec![generic.clone()];
    let mut index: HashMap<SplittingType, usize> = HashMap::new();
    index.insert(generic, 0);
    let mut moves: Vec<Vec<(usize, usize, SplittingType)>> = Vec::new();
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        if moves.len() <= i {
            moves.resize(i + 1, Vec::new());
        }
        let own_moves = type_change_moves(&types[i]);
        let mut kept = Vec::new();
        for (ci, cj, child) in own_moves {
            if !slope_stable(block, &child)? {
                continue;
            }
            if !index.contains_key(&child) {
                let fresh = types.len();
                index.insert(child.clone(), fresh);
                types.push(child.clone());
                frontier.push(fresh);
            }
            kept.push((ci, cj, child));
        }
        moves[i] = kept;
    }
    moves.resize(types.len(), Vec::new());
    // Re-sort canonically and remap edges.
    let mut order: Vec<usize> = (0..types.len()).collect();
    order.sort_by_key(|&i| (types[i].sum_of_squares(), types[i].parts()));
    let mut rank_of = vec![0usize; types.len()];
    for (new_i, &old_i) in order.iter().enumerate() {
        rank_of[old_i] = new_i;
    }
    let sorted_types: Vec<SplittingType> = order.iter().map(|&i| types[i].clone()).collect();
    let mut children = vec![Vec::new(); sorted_types.len()];
    for (old_i, list) in moves.iter().enumerate() {
        for (ci, cj, child) in list {
            let child_new = rank_of[index[child]];
            children[rank_of[old_i]].push(GraphEdge {
                from_class: *ci,
                to_class: *cj,
                child: child_new,
            });
        }
    }
    Ok(SplittingGraph {
        types: sorted_types,
        children,
    })
}

/// The slope-stable splittings of the block's middle node whose closure
/// geometry is nonempty, sorted canonically (generic first when present).
pub fn admissible_splittings(block: &ArgyleBlock) -> Result<Vec<SplittingType>> {
    let graph = splitting_graph(block)?;
    let mut out = Vec::new();
    for ty in graph.types {
        if geometry::try_closure_geometry(block, &ty)?.is_some() {
            out.push(ty);
        }
    }
    Ok(out)
}
