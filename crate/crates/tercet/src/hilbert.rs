//! Hilbert functions of finite point sets in the plane, their first
//! differences, plateau detection, and the curve/residual split.
//!
//! For a set Z of distinct points, h_Z(t) is the rank of the degree-t
//! monomial evaluation matrix: the number of independent conditions Z
//! imposes on degree-t curves. h_Z is nondecreasing and stabilizes exactly
//! at |Z|; the first index where it does is the regularity.

use serde::Serialize;

use crate::combinat::{binomial, monomial_count, KSubsets};
use crate::error::{Error, Result};
use crate::geometry::{ensure_distinct, eval_monomials, evaluation_matrix, ProjectivePoint};
use crate::scalar::Scalar;

/// Hilbert function values h(0..T) with T the regularity, plus the first
/// differences Dh(t) = h(t) - h(t-1) (with h(-1) = 0, so Dh(0) = 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub cardinality: usize,
    pub values: Vec<usize>,
    pub diffs: Vec<usize>,
    pub regularity: u32,
}

impl HilbertProfile {
    fn from_values(values: Vec<usize>, cardinality: usize) -> HilbertProfile {
        let mut diffs = Vec::with_capacity(values.len());
        let mut prev = 0usize;
        for &v in &values {
            diffs.push(v - prev);
            prev = v;
        }
        let profile = HilbertProfile {
            cardinality,
            regularity: (values.len() - 1) as u32,
            values,
            diffs,
        };
        profile.check_invariants();
        profile
    }

    fn check_invariants(&self) {
        assert_eq!(self.values[0], 1, "h(0) must be 1");
        assert!(
            self.values.windows(2).all(|w| w[0] <= w[1]),
            "h must be nondecreasing"
        );
        assert_eq!(
            *self.values.last().unwrap(),
            self.cardinality,
            "h(T) must reach |Z|"
        );
        assert_eq!(
            self.diffs.iter().sum::<usize>(),
            self.cardinality,
            "differences must sum to |Z|"
        );
        assert!(
            self.diffs.iter().enumerate().all(|(t, &d)| d <= t + 1),
            "Dh(t) <= t+1"
        );
    }

    /// h(t), extended by h(t) = |Z| beyond the regularity.
    pub fn value_at(&self, t: u32) -> usize {
        self.values
            .get(t as usize)
            .copied()
            .unwrap_or(self.cardinality)
    }

    /// Dh(t), extended by 0 beyond the stored range.
    pub fn diff_at(&self, t: i64) -> usize {
        if t < 0 {
            return 0;
        }
        self.diffs.get(t as usize).copied().unwrap_or(0)
    }
}

/// h_Z(t): rank of the degree-t evaluation matrix of Z.
pub fn hilbert_value(points: &[ProjectivePoint], t: u32) -> Result<usize> {
    Ok(evaluation_matrix(points, t)?.rank())
}

/// Full Hilbert profile of Z, computed by increasing degree until the
/// function reaches |Z|.
pub fn profile(points: &[ProjectivePoint]) -> Result<HilbertProfile> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    ensure_distinct(points)?;
    let target = points.len();
    let mut values = Vec::new();
    for t in 0..=target as u32 {
        let h = hilbert_value(points, t)?;
        values.push(h);
        if h == target {
            return Ok(HilbertProfile::from_values(values, target));
        }
    }
    unreachable!("h reaches |Z| by degree |Z| - 1");
}

/// Deduplicated union of two point sets (canonically sorted) together with
/// its profile.
pub fn union_profile(
    z1: &[ProjectivePoint],
    z2: &[ProjectivePoint],
) -> Result<(Vec<ProjectivePoint>, HilbertProfile)> {
    ensure_distinct(z1)?;
    ensure_distinct(z2)?;
    let mut w: Vec<ProjectivePoint> = z1.iter().chain(z2).cloned().collect();
    w.sort();
    w.dedup();
    let p = profile(&w)?;
    Ok((w, p))
}

/// All indices j <= d with Dh(j) = Dh(j+1) > 0, with Dh read as 0 beyond the
/// stored range. Returned as (j, Dh(j)) pairs in ascending j.
pub fn plateau_scan(diffs: &[usize], d: u32) -> Vec<(u32, usize)> {
    let at = |t: usize| diffs.get(t).copied().unwrap_or(0);
    (0..=d)
        .filter_map(|j| {
            let v = at(j as usize);
            if v > 0 && v == at(j as usize + 1) {
                Some((j, v))
            } else {
                None
            }
        })
        .collect()
}

/// The minimum plateau value m = min { Dh(j) : j <= d, Dh(j) = Dh(j+1) > 0 },
/// or `None` when no plateau exists.
pub fn min_plateau(diffs: &[usize], d: u32) -> Option<usize> {
    plateau_scan(diffs, d).into_iter().map(|(_, v)| v).min()
}

/// A degree-m curve splitting W into the incident subset A and the residue
/// B = W \ A.
#[derive(Debug, Clone, Serialize)]
pub struct CurveSplit {
    /// Coefficients of the curve in the degree-m monomial order, normalized
    /// so the first nonzero coefficient is 1.
    pub curve: Vec<Scalar>,
    pub m: u32,
    pub on_curve: Vec<ProjectivePoint>,
    pub off_curve: Vec<ProjectivePoint>,
    pub a: usize,
}

fn curve_vanishes_at(curve: &[Scalar], point: &ProjectivePoint, m: u32) -> bool {
    let row = eval_monomials(point, m);
    let mut acc = Scalar::zero(point.field());
    for (c, v) in curve.iter().zip(&row) {
        acc = acc.add(&c.mul(v));
    }
    acc.is_zero()
}

/// Searches for a degree-m curve through as many points of W as possible.
///
/// Candidate curves are generated from every subset of W of size
/// C(m+2, 2) - 1 (the number of conditions that generically pin down at
/// least one degree-m curve) via the kernel of its evaluation matrix. A
/// candidate only counts when at least C(m+2, 2) points of W lie on it:
/// fewer points lie on some degree-m curve for trivial dimension reasons and
/// single out nothing. Among the qualifying curves one with the largest
/// incidence set wins; ties go to the lexicographically smallest generating
/// subset (points sorted canonically), then to the first kernel vector.
pub fn find_plateau_curve(
    w: &[ProjectivePoint],
    m: u32,
) -> Result<Option<CurveSplit>> {
    if m < 1 {
        return Err(Error::CurveDegree);
    }
    ensure_distinct(w)?;
    let mut sorted: Vec<ProjectivePoint> = w.to_vec();
    sorted.sort();
    let need = monomial_count(m) - 1;
    if sorted.len() < need {
        return Ok(None);
    }
    let mut best: Option<CurveSplit> = None;
    for subset in KSubsets::new(sorted.len(), need) {
        let chosen: Vec<ProjectivePoint> = subset.iter().map(|&i| sorted[i].clone()).collect();
        let matrix = evaluation_matrix(&chosen, m)?;
        for curve in matrix.kernel_basis() {
            let (on_curve, off_curve): (Vec<_>, Vec<_>) = sorted
                .iter()
                .cloned()
                .partition(|p| curve_vanishes_at(&curve, p, m));
            if (on_curve.len() as u128) < binomial(m as usize + 2, 2) {
                continue;
            }
            if best.as_ref().is_none_or(|b| on_curve.len() > b.a) {
                best = Some(CurveSplit {
                    a: on_curve.len(),
                    curve,
                    m,
                    on_curve,
                    off_curve,
                });
            }
        }
    }
    Ok(best)
}

/// Checks the shifted difference-function identity
/// Dh_A(i) + Dh_B(i - m) = Dh_W(i) for all i, after validating that the
/// split is consistent with W (A and B partition W, A on the curve, B off).
pub fn residual_identity_check(w: &[ProjectivePoint], split: &CurveSplit) -> Result<bool> {
    let mut recombined: Vec<ProjectivePoint> = split
        .on_curve
        .iter()
        .chain(&split.off_curve)
        .cloned()
        .collect();
    recombined.sort();
    let mut sorted_w = w.to_vec();
    sorted_w.sort();
    if recombined != sorted_w || split.on_curve.len() + split.off_curve.len() != w.len() {
        return Err(Error::InconsistentSplit(
            "A and B do not partition W".into(),
        ));
    }
    for p in &split.on_curve {
        if !curve_vanishes_at(&split.curve, p, split.m) {
            return Err(Error::InconsistentSplit(format!(
                "{p} is in A but not on the curve"
            )));
        }
    }
    for p in &split.off_curve {
        if curve_vanishes_at(&split.curve, p, split.m) {
            return Err(Error::InconsistentSplit(format!(
                "{p} is in B but lies on the curve"
            )));
        }
    }
    let w_profile = profile(&sorted_w)?;
    let a_profile = profile(&split.on_curve)?;
    let b_profile = if split.off_curve.is_empty() {
        None
    } else {
        Some(profile(&split.off_curve)?)
    };
    let horizon = w_profile.regularity as i64
        + a_profile.regularity as i64
        + b_profile.as_ref().map_or(0, |p| p.regularity as i64)
        + split.m as i64
        + 2;
    for i in 0..=horizon {
        let lhs = a_profile.diff_at(i)
            + b_profile
                .as_ref()
                .map_or(0, |p| p.diff_at(i - split.m as i64));
        if lhs != w_profile.diff_at(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn qp(c0: i64, c1: i64, c2: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(c0, c1, c2, Field::Rational).unwrap()
    }

    fn collinear4() -> Vec<ProjectivePoint> {
        vec![qp(1, 0, 0), qp(0, 1, 0), qp(1, 1, 0), qp(1, -1, 0)]
    }

    /// Six points on the conic XZ = Y^2: (1:t:t^2) for t = 0..4 and (0:0:1).
    fn conic6() -> Vec<ProjectivePoint> {
        let mut pts: Vec<ProjectivePoint> =
            (0..5).map(|t| qp(1, t, t * t)).collect();
        pts.push(qp(0, 0, 1));
        pts
    }

    #[test]
    fn hilbert_value_examples() {
        let tri = vec![qp(1, 0, 0), qp(0, 1, 0), qp(1, 1, 0)];
        assert_eq!(hilbert_value(&tri, 1).unwrap(), 2);
        assert_eq!(hilbert_value(&[qp(1, 2, 3)], 0).unwrap(), 1);
        assert_eq!(hilbert_value(&collinear4(), 2).unwrap(), 3);
        let dup = vec![qp(1, 0, 0), qp(1, 0, 0)];
        assert!(hilbert_value(&dup, 1).is_err());
    }

    #[test]
    fn profile_examples() {
        let p = profile(&collinear4()).unwrap();
        assert_eq!(p.values, vec![1, 2, 3, 4]);
        assert_eq!(p.diffs, vec![1, 1, 1, 1]);
        assert_eq!(p.regularity, 3);

        // Ten points imposing independent conditions in every degree.
        let ten: Vec<ProjectivePoint> = [
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 1),
            (1, 2, 3),
            (1, -1, 2),
            (1, 3, -2),
            (1, 5, 7),
            (1, -4, 9),
            (1, 7, -3),
        ]
        .iter()
        .map(|&(a, b, c)| qp(a, b, c))
        .collect();
        let p = profile(&ten).unwrap();
        assert_eq!(p.values, vec![1, 3, 6, 10]);
        assert_eq!(p.diffs, vec![1, 2, 3, 4]);

        let p = profile(&[qp(1, 2, 3)]).unwrap();
        assert_eq!(p.values, vec![1]);
        assert_eq!(p.diffs, vec![1]);
        assert_eq!(p.regularity, 0);
        assert_eq!(p.value_at(5), 1);
        assert_eq!(p.diff_at(5), 0);
        assert_eq!(p.diff_at(-1), 0);
    }

    #[test]
    fn union_profile_examples() {
        let z1 = vec![qp(1, 0, 0), qp(0, 1, 0)];
        let z2 = vec![qp(1, 1, 0), qp(1, -1, 0)];
        let (w, p) = union_profile(&z1, &z2).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(p.value_at(2), 3);
        assert!(p.value_at(2) < p.cardinality);

        let (w, p) = union_profile(&z1, &z1).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(p, profile(&z1).unwrap());

        let a = vec![qp(1, 0, 0), qp(0, 1, 0), qp(0, 0, 1)];
        let b = vec![qp(1, 1, 1), qp(1, 2, 3), qp(1, -1, 2)];
        let (w, p) = union_profile(&a, &b).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(p.values, vec![1, 3, 6]);
    }

    #[test]
    fn plateau_examples() {
        assert_eq!(plateau_scan(&[1, 2, 3, 2, 2, 1], 6), vec![(3, 2)]);
        assert_eq!(min_plateau(&[1, 2, 3, 2, 2, 1], 6), Some(2));
        assert_eq!(
            plateau_scan(&[1, 1, 1, 1], 2),
            vec![(0, 1), (1, 1), (2, 1)]
        );
        assert_eq!(min_plateau(&[1, 1, 1, 1], 2), Some(1));
        assert!(plateau_scan(&[1, 2, 3], 6).is_empty());
        assert_eq!(min_plateau(&[1, 2, 3], 6), None);
    }

    #[test]
    fn plateau_curve_on_collinear_points() {
        let w = collinear4();
        let split = find_plateau_curve(&w, 1).unwrap().unwrap();
        let coeffs: Vec<String> = split.curve.iter().map(|x| x.to_string()).collect();
        assert_eq!(coeffs, vec!["0", "0", "1"]);
        assert_eq!(split.a, 4);
        assert!(split.off_curve.is_empty());
        assert!(residual_identity_check(&w, &split).unwrap());
    }

    #[test]
    fn plateau_curve_recovers_conic() {
        let mut w = conic6();
        w.push(qp(1, 2, 9));
        w.push(qp(1, -3, 5));
        let split = find_plateau_curve(&w, 2).unwrap().unwrap();
        assert_eq!(split.a, 6);
        let mut expected = conic6();
        expected.sort();
        let mut got = split.on_curve.clone();
        got.sort();
        assert_eq!(got, expected);
        // XZ - Y^2 in the order X^2, XY, XZ, Y^2, YZ, Z^2.
        let coeffs: Vec<String> = split.curve.iter().map(|x| x.to_string()).collect();
        assert_eq!(coeffs, vec!["0", "0", "1", "-1", "0", "0"]);
        assert!(residual_identity_check(&w, &split).unwrap());
    }

    #[test]
    fn plateau_curve_absent_for_generic_triple() {
        let w = vec![qp(1, 0, 0), qp(0, 1, 0), qp(0, 0, 1)];
        assert!(find_plateau_curve(&w, 1).unwrap().is_none());
    }

    #[test]
    fn residual_identity_rejects_bad_split() {
        let w = collinear4();
        let mut split = find_plateau_curve(&w, 1).unwrap().unwrap();
        // Move one incident point to the off-curve side.
        let moved = split.on_curve.pop().unwrap();
        split.off_curve.push(moved);
        split.a -= 1;
        assert!(matches!(
            residual_identity_check(&w, &split),
            Err(Error::InconsistentSplit(_))
        ));
    }

    #[test]
    fn residual_identity_on_conic_plus_two() {
        let mut w = conic6();
        w.push(qp(1, 2, 9));
        w.push(qp(1, -3, 5));
        let split = find_plateau_curve(&w, 2).unwrap().unwrap();
        // Dh_W = (1,2,3,2), Dh_A = (1,2,2,1), Dh_B = (1,1) shifted by m=2.
        let wp = profile(&w).unwrap();
        assert_eq!(wp.diffs, vec![1, 2, 3, 2]);
        let ap = profile(&split.on_curve).unwrap();
        assert_eq!(ap.diffs, vec![1, 2, 2, 1]);
        assert!(residual_identity_check(&w, &split).unwrap());
    }

    #[test]
    fn subset_monotonicity_of_hilbert_values() {
        let w = {
            let mut v = conic6();
            v.push(qp(1, 4, 7));
            v
        };
        for t in 0..4 {
            let sub = &w[..4];
            assert!(hilbert_value(sub, t).unwrap() <= hilbert_value(&w, t).unwrap());
        }
    }
}
