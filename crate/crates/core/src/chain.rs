//! Chain labels on an A-type quiver: rank and degree vectors with a twist,
//! slope stability bookkeeping, admissibility, and exhaustive enumeration
//! of fixed-point labellings for a given total (rank, degree, twist).

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry;
use crate::splitting;

/// Exact rational slope degree/rank, stored in lowest terms.
pub type Slope = Rational64;

/// Reduced slope d/r.
pub fn slope(degree: i64, rank: i64) -> Slope {
    Rational64::new(degree, rank)
}

/// A labelled chain: one (rank, degree) pair per node, a twist t for the
/// morphisms, and the genus of the base curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainLabel {
    pub ranks: Vec<u32>,
    pub degrees: Vec<i64>,
    pub twist: u32,
    pub genus: u32,
}

impl ChainLabel {
    /// Builds a label after checking the shape: equal nonzero lengths and
    /// strictly positive ranks. Genus is stored as given; operations that
    /// only work on the projective line check it themselves.
    pub fn new(ranks: Vec<u32>, degrees: Vec<i64>, twist: u32, genus: u32) -> Result<Self> {
        if ranks.is_empty() || ranks.len() != degrees.len() {
            return Err(Error::LengthMismatch {
                ranks: ranks.len(),
                degrees: degrees.len(),
            });
        }
        if ranks.iter().any(|&r| r == 0) {
            return Err(Error::InvalidInput("node ranks must be positive".into()));
        }
        Ok(ChainLabel {
            ranks,
            degrees,
            twist,
            genus,
        })
    }

    /// Genus-zero label.
    pub fn on_line(ranks: Vec<u32>, degrees: Vec<i64>, twist: u32) -> Result<Self> {
        Self::new(ranks, degrees, twist, 0)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn total_rank(&self) -> u32 {
        self.ranks.iter().sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn require_genus_zero(&self) -> Result<()> {
        if self.genus != 0 {
            return Err(Error::UnsupportedGenus(self.genus));
        }
        Ok(())
    }

    /// Errors unless gcd(total rank, total degree) = 1.
    pub fn require_coprime(&self) -> Result<()> {
        require_coprime(self.total_rank(), self.total_degree())
    }

    /// Slope of a single node.
    pub fn node_slope(&self, i: usize) -> Slope {
        slope(self.degrees[i], self.ranks[i] as i64)
    }

    /// Rejects two adjacent nodes of rank > 1, naming the offending pair.
    pub fn require_argyle(&self) -> Result<()> {
        argyle_check(&self.ranks)
    }
}

impl std::fmt::Display for ChainLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ranks: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        let degrees: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "ranks ({}), degrees ({}), twist {}",
            ranks.join(","),
            degrees.join(","),
            self.twist
        )?;
        if self.genus != 0 {
            write!(f, ", genus {}", self.genus)?;
        }
        Ok(())
    }
}

/// Total slope d/r of the label.
pub fn total_slope(c: &ChainLabel) -> Slope {
    slope(c.total_degree(), c.total_rank() as i64)
}

/// Errors with the gcd unless gcd(r, d) = 1.
pub fn require_coprime(rank: u32, degree: i64) -> Result<()> {
    let g = (rank as i64).gcd(&degree);
    if g != 1 {
        return Err(Error::NotCoprime {
            rank: rank as i64,
            degree,
            gcd: g,
        });
    }
    Ok(())
}

/// Errors when two adjacent ranks are both > 1, naming the offending pair.
pub fn argyle_check(ranks: &[u32]) -> Result<()> {
    for i in 0..ranks.len().saturating_sub(1) {
        if ranks[i] > 1 && ranks[i + 1] > 1 {
            return Err(Error::NotArgyle {
                composition: ranks.to_vec(),
                left_index: i,
                right_index: i + 1,
            });
        }
    }
    Ok(())
}

/// Decides whether a stable representation with this labelling exists on
/// the projective line.
///
/// Tests, in order:
/// (a) every arrow supports a nonzero map under generic splittings:
///     ceil(d_{i+1}/r_{i+1}) - floor(d_i/r_i) + t >= 0;
/// (b) every proper suffix has slope strictly below the total slope;
/// (c) every rank > 1 node admits at least one admissible splitting type.
pub fn label_admissible(c: &ChainLabel) -> Result<bool> {
    c.require_genus_zero()?;
    c.require_coprime()?;
    let n = c.len();
    if n == 1 {
        return Ok(c.ranks[0] == 1);
    }
    c.require_argyle()?;
    let t = c.twist as i64;
    for i in 0..n - 1 {
        let hi = Integer::div_ceil(&c.degrees[i + 1], &(c.ranks[i + 1] as i64));
        let lo = Integer::div_floor(&c.degrees[i], &(c.ranks[i] as i64));
        if hi - lo + t < 0 {
            return Ok(false);
        }
    }
    let mu = total_slope(c);
    let mut suffix_degree = 0i64;
    let mut suffix_rank = 0i64;
    for i in (1..n).rev() {
        suffix_degree += c.degrees[i];
        suffix_rank += c.ranks[i] as i64;
        if slope(suffix_degree, suffix_rank) >= mu {
            return Ok(false);
        }
    }
    for block in geometry::block_decompose(c)? {
        if block.middle_rank > 1 && splitting::admissible_splittings(&block)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn compositions(total: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            rec(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, &mut Vec::new(), &mut out);
    out.retain(|comp| comp.len() >= 2);
    out
}

/// Enumerates every admissible labelling with total rank r, total degree d,
/// twist t, and at least two nodes, sorted by (length, ranks, degrees).
///
/// Degrees are searched inside the window |d_i/r_i - d/r| <= r(t+1); an
/// admissible labelling sitting exactly on the window boundary aborts the
/// run, since completeness of the window could then no longer be certified.
pub fn enumerate_labellings(rank: u32, degree: i64, twist: u32) -> Result<Vec<ChainLabel>> {
    require_coprime(rank, degree)?;
    if rank == 1 {
        return Ok(Vec::new());
    }
    let comps = compositions(rank);
    for comp in &comps {
        argyle_check(comp)?;
    }
    let r = rank as i64;
    let half_width = r * (twist as i64 + 1);

    fn search(
        i: usize,
        partial: i64,
        comp: &[u32],
        lo: &[i64],
        hi: &[i64],
        degree: i64,
        twist: u32,
        r: i64,
        half_width: i64,
        degrees: &mut Vec<i64>,
        out: &mut Vec<ChainLabel>,
    ) -> Result<()> {
        let n = comp.len();
        if i + 1 == n {
            let last = degree - partial;
            if last < lo[n - 1] || last > hi[n - 1] {
                return Ok(());
            }
            degrees[n - 1] = last;
            let label = ChainLabel::on_line(comp.to_vec(), degrees.clone(), twist)?;
            if label_admissible(&label)? {
                for j in 0..n {
                    let deviation = degrees[j] * r - comp[j] as i64 * degree;
                    if deviation.abs() == comp[j] as i64 * r * half_width {
                        return Err(Error::WindowBoundary(degrees.clone()));
                    }
                }
                out.push(label);
            }
            return Ok(());
        }
        for di in lo[i]..=hi[i] {
            degrees[i] = di;
            search(
                i + 1,
                partial + di,
                comp,
                lo,
                hi,
                degree,
                twist,
                r,
                half_width,
                degrees,
                out,
            )?;
        }
        Ok(())
    }

    let mut out = Vec::new();
    for comp in &comps {
        let n = comp.len();
        // Node windows: d_i in [r_i (d/r - w), r_i (d/r + w)] with w = r(t+1).
        let lo: Vec<i64> = comp
            .iter()
            .map(|&ri| Integer::div_ceil(&(ri as i64 * (degree - half_width * r)), &r))
            .collect();
        let hi: Vec<i64> = comp
            .iter()
            .map(|&ri| Integer::div_floor(&(ri as i64 * (degree + half_width * r)), &r))
            .collect();
        let mut degrees = vec![0i64; n];
        search(
            0,
            0,
            comp,
            &lo,
            &hi,
            degree,
            twist,
            r,
            half_width,
            &mut degrees,
            &mut out,
        )?;
    }
    out.sort_by(|a, b| {
        (a.len(), &a.ranks, &a.degrees).cmp(&(b.len(), &b.ranks, &b.degrees))
    });
    Ok(out)
}
