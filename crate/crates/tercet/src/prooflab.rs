//! Instrumentation for pairs of decompositions of one form: builds the
//! union of the two point sets, its Hilbert profile, and the chain of
//! observables (defect at degree d, initial segment, plateaus, curve split,
//! residual identity, final inequality) that the certification argument is
//! made of. The module reports; it never concludes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::certifier::compute_u;
use crate::error::{Error, Result};
use crate::geometry::{verify_decomposition, Decomposition, ProjectivePoint, TernaryForm};
use crate::hilbert::{
    find_plateau_curve, min_plateau, plateau_scan, residual_identity_check, union_profile,
    CurveSplit, HilbertProfile,
};

/// h_W(d) against w: a strict defect at degree d is the first observable of
/// the argument.
#[derive(Debug, Clone, Serialize)]
pub struct Claim1 {
    pub h_at_d: usize,
    pub w: usize,
    pub holds: bool,
}

/// The three quantities of the closing inequality: the upper bound for |A|,
/// twice the position threshold in degree m, and whether d <= 2m (the
/// configuration the argument rules out in range).
#[derive(Debug, Clone, Serialize)]
pub struct FinalInequality {
    pub a_upper_bound: i64,
    pub double_threshold: i64,
    pub d_le_2m: bool,
}

/// Everything observable about one pair of decompositions.
#[derive(Debug, Clone, Serialize)]
pub struct PairAnalysis {
    pub d: u32,
    pub k: usize,
    pub w: usize,
    pub profile: HilbertProfile,
    pub claim1: Claim1,
    pub u: u32,
    /// Dh_W(i) = i+1 for i = 0..u.
    pub initial_segment_ok: bool,
    pub plateaus: Vec<(u32, usize)>,
    pub m: Option<usize>,
    pub split: Option<CurveSplit>,
    pub residual_ok: Option<bool>,
    pub final_inequality: Option<FinalInequality>,
    /// Reasons for fields left empty, keyed by field name.
    pub absent: BTreeMap<&'static str, String>,
}

/// h_W(d) < w, with h_W(d) = w once d reaches the regularity.
pub fn claim1_check(profile: &HilbertProfile, d: u32) -> bool {
    profile.value_at(d) < profile.cardinality
}

/// Builds the full analysis for two decompositions of `f`. Both must
/// reproduce `f` up to a nonzero scalar and must differ as point sets;
/// shared points are allowed and deduplicated in the union.
pub fn analyze_pair(
    f: &TernaryForm,
    dec1: &Decomposition,
    dec2: &Decomposition,
) -> Result<PairAnalysis> {
    for dec in [dec1, dec2] {
        if verify_decomposition(f, dec)?.is_none() {
            return Err(Error::DecompositionMismatch);
        }
    }
    let mut z1: Vec<ProjectivePoint> = dec1.points();
    let mut z2: Vec<ProjectivePoint> = dec2.points();
    z1.sort();
    z2.sort();
    if z1 == z2 {
        return Err(Error::IdenticalPointSets);
    }

    let d = f.degree();
    let k = dec1.len();
    let (w_points, profile) = union_profile(&z1, &z2)?;
    let w = w_points.len();

    let claim1 = Claim1 {
        h_at_d: profile.value_at(d),
        w,
        holds: claim1_check(&profile, d),
    };
    let u = compute_u(k);
    let initial_segment_ok = (0..=u as i64).all(|i| profile.diff_at(i) == i as usize + 1);
    let plateaus = plateau_scan(&profile.diffs, d);
    let m = min_plateau(&profile.diffs, d);

    let mut absent = BTreeMap::new();
    let (split, residual_ok, final_inequality) = match m {
        None => {
            absent.insert(
                "m",
                format!("no index j <= {d} with Dh(j) = Dh(j+1) > 0"),
            );
            (None, None, None)
        }
        Some(m_val) => {
            let final_inequality = {
                let (m_i, d_i) = (m_val as i64, d as i64);
                FinalInequality {
                    a_upper_bound: (m_i + 1) * d_i - m_i * m_i + m_i + 2,
                    double_threshold: m_i * m_i + 3 * m_i + 2,
                    d_le_2m: d_i <= 2 * m_i,
                }
            };
            match find_plateau_curve(&w_points, m_val as u32)? {
                None => {
                    absent.insert(
                        "split",
                        format!(
                            "no degree-{m_val} curve through at least {} points of W",
                            crate::gup::gup_threshold(m_val as u32)
                        ),
                    );
                    (None, None, Some(final_inequality))
                }
                Some(split) => {
                    let residual = residual_identity_check(&w_points, &split)?;
                    (Some(split), Some(residual), Some(final_inequality))
                }
            }
        }
    };

    Ok(PairAnalysis {
        d,
        k,
        w,
        profile,
        claim1,
        u,
        initial_segment_ok,
        plateaus,
        m,
        split,
        residual_ok,
        final_inequality,
        absent,
    })
}
