//! General uniform position: no C(u+2, 2) points of the set lie on a common
//! degree-u curve, for any u >= 1.
//!
//! Soundness of checking only subsets of the exact threshold size: if some
//! larger subset of size m >= C(u+2, 2) lies on a degree-u curve, then every
//! threshold-size subset of it lies on that curve too, and its square
//! evaluation matrix is singular. Conversely a singular threshold-size
//! minor exhibits C(u+2, 2) points on a common degree-u curve (a kernel
//! vector of the minor). So the verdict over exact-threshold subsets equals
//! the verdict over all sizes.
//!
//! Degree u = 0 is excluded: its threshold would be 1, but degree-0 forms
//! are nonzero constants with empty zero locus, so no point lies on one.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{binomial, monomial_count, unrank_subset, KSubsets};
use crate::error::{Error, Result};
use crate::geometry::{ensure_distinct, evaluation_matrix, ProjectivePoint};
use crate::matrix::Prefilter;
use crate::scalar::Scalar;

/// Smallest subset size constrained in degree u: C(u+2, 2).
pub fn gup_threshold(u: u32) -> usize {
    monomial_count(u)
}

/// Outcome of a general-uniform-position check.
#[derive(Debug, Clone, Serialize)]
pub struct GupReport {
    pub holds: bool,
    pub checked_degrees: Vec<u32>,
    pub witness: Option<GupWitness>,
}

/// First violation found: a threshold-size subset on a degree-u curve.
#[derive(Debug, Clone, Serialize)]
pub struct GupWitness {
    pub u: u32,
    pub subset: Vec<ProjectivePoint>,
    pub curve: Vec<Scalar>,
}

/// Options for the subset scan.
#[derive(Debug, Clone)]
pub struct GupOptions {
    /// Upper bound on the total number of subset determinants; exceeding it
    /// is an error rather than an open-ended computation.
    pub cap: u64,
    /// Optional modular screening of the determinants (answers unchanged).
    pub prefilter: Option<Prefilter>,
    /// Scan subset ranges on the rayon pool. The reported witness is the
    /// lexicographically first violation either way.
    pub parallel: bool,
}

impl Default for GupOptions {
    fn default() -> Self {
        GupOptions {
            cap: 10_000_000,
            prefilter: None,
            parallel: false,
        }
    }
}

/// Decides general uniform position for a set of distinct points, returning
/// the lexicographically first violation (by ascending degree u, then by
/// subset position over the canonically sorted points) as a witness.
pub fn gup_check(points: &[ProjectivePoint], opts: &GupOptions) -> Result<GupReport> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    ensure_distinct(points)?;
    let mut sorted = points.to_vec();
    sorted.sort();
    let n = sorted.len();

    let mut degrees = Vec::new();
    let mut total: u128 = 0;
    let mut u = 1u32;
    while gup_threshold(u) <= n {
        degrees.push(u);
        total = total.saturating_add(binomial(n, gup_threshold(u)));
        u += 1;
    }
    if total > opts.cap as u128 {
        return Err(Error::CapExceeded {
            needed: total,
            cap: opts.cap,
        });
    }

    for &u in &degrees {
        if let Some(subset) = scan_degree(&sorted, u, opts)? {
            let chosen: Vec<ProjectivePoint> =
                subset.iter().map(|&i| sorted[i].clone()).collect();
            let kernel = evaluation_matrix(&chosen, u)?.kernel_basis();
            let curve = kernel
                .into_iter()
                .next()
                .expect("singular evaluation matrix has a kernel vector");
            return Ok(GupReport {
                holds: false,
                checked_degrees: degrees,
                witness: Some(GupWitness {
                    u,
                    subset: chosen,
                    curve,
                }),
            });
        }
    }
    Ok(GupReport {
        holds: true,
        checked_degrees: degrees,
        witness: None,
    })
}

/// Index set of the first threshold-size subset whose evaluation matrix in
/// degree u is singular, or `None`.
fn scan_degree(
    sorted: &[ProjectivePoint],
    u: u32,
    opts: &GupOptions,
) -> Result<Option<Vec<usize>>> {
    let n = sorted.len();
    let size = gup_threshold(u);
    let count = binomial(n, size);
    let singular = |subset: &[usize]| -> Result<bool> {
        let chosen: Vec<ProjectivePoint> = subset.iter().map(|&i| sorted[i].clone()).collect();
        let matrix = evaluation_matrix(&chosen, u)?;
        matrix.det_is_zero_with(opts.prefilter.as_ref())
    };

    const CHUNK: u128 = 1024;
    if opts.parallel && count > CHUNK {
        let chunks = count.div_ceil(CHUNK);
        let found = (0..chunks as u64)
            .into_par_iter()
            .map(|chunk| -> Result<Option<Vec<usize>>> {
                let start = chunk as u128 * CHUNK;
                let end = (start + CHUNK).min(count);
                let mut subset = unrank_subset(n, size, start);
                let mut rank = start;
                loop {
                    if singular(&subset)? {
                        return Ok(Some(subset));
                    }
                    rank += 1;
                    if rank >= end || !crate::combinat::next_subset(&mut subset, n) {
                        return Ok(None);
                    }
                }
            })
            .find_map_first(|r| r.transpose());
        found.transpose()
    } else {
        for subset in KSubsets::new(n, size) {
            if singular(&subset)? {
                return Ok(Some(subset));
            }
        }
        Ok(None)
    }
}
