//! The certification pipeline: verifies every hypothesis of the
//! identifiability criterion on a concrete (form, decomposition) pair and
//! records the full evidence trail.
//!
//! A `Certified` verdict asserts that the given expression is the unique one
//! of its length (up to scaling and permutation). A refusal is *not* a proof
//! of non-identifiability; it only means some hypothesis could not be
//! verified, and the certificate says which.

use serde::Serialize;

use crate::combinat::monomial_count;
use crate::error::{Error, Result};
use crate::geometry::{
    catalecticant, power_coeffs, synthesize, verify_decomposition, Decomposition, TernaryForm,
};
use crate::gup::{gup_check, GupOptions, GupReport};
use crate::hilbert::hilbert_value;
use crate::matrix::ExactMatrix;
use crate::scalar::{Field, Scalar};

/// Machine-readable refusal reasons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RefusalReason {
    /// The decomposition does not reproduce the form (no nonzero sigma).
    SigmaMismatch,
    /// 8k < d^2 + 2d fails.
    BoundFail,
    /// 2(u+2) <= d fails.
    UConsistencyFail,
    /// 2k <= (u+1)d - u^2 + u + 2 fails.
    Inequality1Fail,
    /// The k power vectors do not span a (k-1)-plane.
    VeroneseRankFail,
    /// The rank of the form could not be pinned to k.
    RankUncertified,
    /// The point set is not in general uniform position.
    GupFail,
}

/// Final verdict of the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Certified,
    /// k = 1: a pure power is classically the unique expression of itself,
    /// no criterion needed.
    CertifiedRankOne,
    NotCertified(Vec<RefusalReason>),
}

/// An integer comparison with both sides recorded.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
}

/// Complete record of one certification run.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub criterion: &'static str,
    pub field: Field,
    pub d: u32,
    pub k: usize,
    /// 8k < d^2 + 2d.
    pub bound: Comparison,
    pub u: u32,
    /// 2(u+2) <= d (integer-safe form of u+2 <= d/2).
    pub u_consistency: bool,
    /// 2k <= (u+1)d - u^2 + u + 2.
    pub inequality1: Comparison,
    /// Informational only: 3k < N+1 with N = d(d+3)/2; never gates.
    pub generic_range_ok: bool,
    pub sigma: Option<Scalar>,
    pub distinct_points: bool,
    pub lambdas_nonzero: bool,
    pub veronese_rank: usize,
    /// (h_Z(floor(d/2)), h_Z(ceil(d/2))).
    pub independence: (usize, usize),
    /// Rank of the contraction matrix at a = floor(d/2).
    pub catalecticant_rank: usize,
    pub rank_certified: bool,
    pub gup: GupReport,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, Verdict::Certified | Verdict::CertifiedRankOne)
    }
}

/// True iff 8k < d^2 + 2d, the rank range of the criterion.
pub fn bound_check(k: usize, d: u32) -> bool {
    let d = d as i64;
    8 * k as i64 > 0 && 8 * (k as i64) < d * d + 2 * d
}

/// The unique u >= 0 with C(u+2, 2) <= k < C(u+3, 2).
pub fn compute_u(k: usize) -> u32 {
    let mut u = 0u32;
    while monomial_count(u + 1) <= k {
        u += 1;
    }
    u
}

/// True iff 2k <= (u+1)d - u^2 + u + 2.
pub fn inequality1_check(k: usize, d: u32, u: u32) -> bool {
    let (d, u) = (d as i64, u as i64);
    2 * k as i64 <= (u + 1) * d - u * u + u + 2
}

/// Informational range in which a *general* expression of length k is known
/// to be unique: 3k < N + 1 = C(d+2, 2). Never gates the verdict.
pub fn generic_range_check(k: usize, d: u32) -> bool {
    3 * k < monomial_count(d)
}

/// Options for certification.
#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    pub gup: GupOptions,
}

/// Runs the full pipeline. When `f` is absent, the form is synthesized from
/// the decomposition (sigma = 1 trivially). Every sub-result is computed and
/// recorded even when an earlier gate fails, so refusals show how far the
/// instance got.
pub fn certify(
    f: Option<&TernaryForm>,
    dec: &Decomposition,
    opts: &CertifyOptions,
) -> Result<Certificate> {
    let synthesized;
    let form = match f {
        Some(form) => {
            if form.degree() != dec.degree() {
                return Err(Error::DegreeMismatch(form.degree(), dec.degree()));
            }
            if form.field() != dec.field() {
                return Err(Error::ContextMismatch(
                    form.field().describe(),
                    dec.field().describe(),
                ));
            }
            form
        }
        None => {
            synthesized = synthesize(dec)?;
            &synthesized
        }
    };
    let d = dec.degree();
    let k = dec.len();
    let field = dec.field();
    let points = dec.points();

    let sigma = verify_decomposition(form, dec)?;

    // Distinctness and nonzero coefficients are construction invariants of
    // Decomposition; recorded here so certificates are self-contained.
    let distinct_points = true;
    let lambdas_nonzero = dec.terms().iter().all(|(_, l)| !l.is_zero());

    let bound = Comparison {
        lhs: 8 * k as i64,
        rhs: (d as i64) * (d as i64) + 2 * d as i64,
        ok: bound_check(k, d),
    };
    let u = compute_u(k);
    let u_consistency = 2 * (u as i64 + 2) <= d as i64;
    let inequality1 = Comparison {
        lhs: 2 * k as i64,
        rhs: (u as i64 + 1) * d as i64 - (u as i64) * (u as i64) + u as i64 + 2,
        ok: inequality1_check(k, d, u),
    };
    let generic_range_ok = generic_range_check(k, d);

    let power_rows: Vec<Vec<Scalar>> = points.iter().map(|p| power_coeffs(p, d)).collect();
    let veronese_rank = ExactMatrix::from_rows(power_rows, field)?.rank();

    let a = d / 2;
    let (independence, catalecticant_rank) = if a >= 1 {
        let h_lo = hilbert_value(&points, a)?;
        let h_hi = hilbert_value(&points, d - a)?;
        (
            (h_lo, h_hi),
            catalecticant(form, a)?.rank(),
        )
    } else {
        // d = 1: no contraction bidegree exists; the rank cannot be pinned
        // this way (only k = 1 certifies, via the pure-power rule).
        ((hilbert_value(&points, 0)?, hilbert_value(&points, 1)?), 0)
    };
    let rank_certified =
        a >= 1 && independence == (k, k) && catalecticant_rank == k;

    let gup = gup_check(&points, &opts.gup)?;

    let verdict = if k == 1 {
        if sigma.is_some() {
            Verdict::CertifiedRankOne
        } else {
            Verdict::NotCertified(vec![RefusalReason::SigmaMismatch])
        }
    } else {
        let mut reasons = Vec::new();
        if sigma.is_none() {
            reasons.push(RefusalReason::SigmaMismatch);
        }
        if !bound.ok {
            reasons.push(RefusalReason::BoundFail);
        }
        if !u_consistency {
            reasons.push(RefusalReason::UConsistencyFail);
        }
        if !inequality1.ok {
            reasons.push(RefusalReason::Inequality1Fail);
        }
        if veronese_rank != k {
            reasons.push(RefusalReason::VeroneseRankFail);
        }
        if !rank_certified {
            reasons.push(RefusalReason::RankUncertified);
        }
        if !gup.holds {
            reasons.push(RefusalReason::GupFail);
        }
        if reasons.is_empty() {
            Verdict::Certified
        } else {
            Verdict::NotCertified(reasons)
        }
    };

    let cert = Certificate {
        criterion: "BC-ternary-GUP",
        field,
        d,
        k,
        bound,
        u,
        u_consistency,
        inequality1,
        generic_range_ok,
        sigma,
        distinct_points,
        lambdas_nonzero,
        veronese_rank,
        independence,
        catalecticant_rank,
        rank_certified,
        gup,
        verdict,
    };
    if matches!(cert.verdict, Verdict::Certified) {
        debug_assert!(
            cert.bound.ok
                && cert.u_consistency
                && cert.inequality1.ok
                && cert.gup.holds
                && cert.rank_certified
                && cert.veronese_rank == cert.k
        );
    }
    Ok(cert)
}
