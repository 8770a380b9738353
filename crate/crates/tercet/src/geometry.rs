//! Points of P^2, ternary forms, decompositions into powers of linear
//! forms, and the contraction (catalecticant) matrices that bound rank.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinat::{monomial_count, multinomial};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{Field, Scalar};

/// A point of the projective plane with canonicalized homogeneous
/// coordinates: the first nonzero coordinate equals 1. Equality, hashing and
/// ordering all operate on the canonical triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: [Scalar; 3],
}

impl ProjectivePoint {
    pub fn new(c0: Scalar, c1: Scalar, c2: Scalar) -> Result<ProjectivePoint> {
        let field = c0.field();
        for c in [&c1, &c2] {
            if c.field() != field {
                return Err(Error::ContextMismatch(
                    field.describe(),
                    c.field().describe(),
                ));
            }
        }
        let mut coords = [c0, c1, c2];
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::ZeroPoint)?;
        let inv = lead.inv().expect("nonzero leading coordinate");
        for c in &mut coords {
            *c = c.mul(&inv);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64, field: Field) -> Result<ProjectivePoint> {
        ProjectivePoint::new(
            Scalar::from_int(c0, field),
            Scalar::from_int(c1, field),
            Scalar::from_int(c2, field),
        )
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// The fixed monomial order for one degree: exponent triples (a, b, c) with
/// a+b+c = d, sorted lexicographically descending. This single order drives
/// serialization and every matrix column index in the crate.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    degree: u32,
    exponents: Vec<(u32, u32, u32)>,
}

impl MonomialOrder {
    pub fn new(degree: u32) -> MonomialOrder {
        let mut exponents = Vec::with_capacity(monomial_count(degree));
        for a in (0..=degree).rev() {
            for b in (0..=degree - a).rev() {
                exponents.push((a, b, degree - a - b));
            }
        }
        MonomialOrder { degree, exponents }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u32, u32)] {
        &self.exponents
    }

    /// Position of (a, b, c) in the order, in closed form.
    pub fn index_of(&self, a: u32, b: u32, _c: u32) -> usize {
        let r = (self.degree - a) as usize;
        r * (r + 1) / 2 + (r - b as usize)
    }
}

/// Vector of all degree-t monomials evaluated at the canonical coordinates
/// of `x`, in the fixed monomial order.
pub fn eval_monomials(x: &ProjectivePoint, t: u32) -> Vec<Scalar> {
    let field = x.field();
    let order = MonomialOrder::new(t);
    // Power tables avoid re-multiplying per monomial.
    let pow_table = |c: &Scalar| -> Vec<Scalar> {
        let mut pows = Vec::with_capacity(t as usize + 1);
        pows.push(Scalar::one(field));
        for e in 1..=t as usize {
            let next = pows[e - 1].mul(c);
            pows.push(next);
        }
        pows
    };
    let p0 = pow_table(&x.coords()[0]);
    let p1 = pow_table(&x.coords()[1]);
    let p2 = pow_table(&x.coords()[2]);
    order
        .exponents()
        .iter()
        .map(|&(a, b, c)| p0[a as usize].mul(&p1[b as usize]).mul(&p2[c as usize]))
        .collect()
}

/// Coefficient vector of (x0*X + x1*Y + x2*Z)^d in the fixed monomial
/// order: the monomial evaluation scaled by the multinomial d!/(a! b! c!).
pub fn power_coeffs(x: &ProjectivePoint, d: u32) -> Vec<Scalar> {
    let field = x.field();
    let order = MonomialOrder::new(d);
    eval_monomials(x, d)
        .into_iter()
        .zip(order.exponents())
        .map(|(v, &(a, b, c))| v.mul(&Scalar::from_bigint(multinomial(a, b, c), field)))
        .collect()
}

/// The |Z| x C(t+2, 2) matrix whose i-th row is `eval_monomials(Z[i], t)`.
/// Its rank is the number of independent conditions Z imposes in degree t.
pub fn evaluation_matrix(points: &[ProjectivePoint], t: u32) -> Result<ExactMatrix> {
    ensure_distinct(points)?;
    let field = points
        .first()
        .map(ProjectivePoint::field)
        .ok_or(Error::EmptyPointSet)?;
    for p in points {
        if p.field() != field {
            return Err(Error::ContextMismatch(
                field.describe(),
                p.field().describe(),
            ));
        }
    }
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| eval_monomials(p, t)).collect();
    ExactMatrix::from_rows(rows, field)
}

pub(crate) fn ensure_distinct(points: &[ProjectivePoint]) -> Result<()> {
    let mut sorted: Vec<&ProjectivePoint> = points.iter().collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicatePoint(w[0].to_string()));
        }
    }
    Ok(())
}

/// A ternary form of degree d as its coefficient sequence in the fixed
/// monomial order. The zero form is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    coeffs: Vec<Scalar>,
}

impl TernaryForm {
    pub fn new(degree: u32, coeffs: Vec<Scalar>) -> Result<TernaryForm> {
        if degree < 1 {
            return Err(Error::ShapeMismatch("degree must be at least 1".into()));
        }
        let expected = monomial_count(degree);
        if coeffs.len() != expected {
            return Err(Error::BadCoefficientCount {
                degree,
                expected,
                got: coeffs.len(),
            });
        }
        let field = coeffs[0].field();
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::ContextMismatch(
                    field.describe(),
                    c.field().describe(),
                ));
            }
        }
        if coeffs.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(TernaryForm { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    pub fn scale(&self, c: &Scalar) -> Result<TernaryForm> {
        TernaryForm::new(self.degree, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }
}

impl Serialize for TernaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// An expression of a form as a combination of d-th powers of linear forms:
/// pairwise distinct points with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    degree: u32,
    terms: Vec<(ProjectivePoint, Scalar)>,
}

impl Decomposition {
    pub fn new(degree: u32, terms: Vec<(ProjectivePoint, Scalar)>) -> Result<Decomposition> {
        if terms.is_empty() {
            return Err(Error::EmptyDecomposition);
        }
        if degree < 1 {
            return Err(Error::ShapeMismatch("degree must be at least 1".into()));
        }
        let field = terms[0].0.field();
        for (i, (p, lambda)) in terms.iter().enumerate() {
            if p.field() != field || lambda.field() != field {
                return Err(Error::ContextMismatch(
                    field.describe(),
                    lambda.field().describe(),
                ));
            }
            if lambda.is_zero() {
                return Err(Error::ZeroLambda(i));
            }
        }
        let points: Vec<ProjectivePoint> = terms.iter().map(|(p, _)| p.clone()).collect();
        ensure_distinct(&points)?;
        Ok(Decomposition { degree, terms })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(ProjectivePoint, Scalar)] {
        &self.terms
    }

    pub fn points(&self) -> Vec<ProjectivePoint> {
        self.terms.iter().map(|(p, _)| p.clone()).collect()
    }

    pub fn field(&self) -> Field {
        self.terms[0].0.field()
    }

    /// Same points, every coefficient multiplied by a nonzero scalar.
    pub fn scale_lambdas(&self, c: &Scalar) -> Result<Decomposition> {
        Decomposition::new(
            self.degree,
            self.terms
                .iter()
                .map(|(p, l)| (p.clone(), l.mul(c)))
                .collect(),
        )
    }
}

/// Expands a decomposition into the form it represents.
pub fn synthesize(dec: &Decomposition) -> Result<TernaryForm> {
    let field = dec.field();
    let n = monomial_count(dec.degree());
    let mut acc = vec![Scalar::zero(field); n];
    for (point, lambda) in dec.terms() {
        for (slot, coeff) in acc.iter_mut().zip(power_coeffs(point, dec.degree())) {
            *slot = slot.add(&coeff.mul(lambda));
        }
    }
    if acc.iter().all(Scalar::is_zero) {
        return Err(Error::DegenerateDecomposition);
    }
    TernaryForm::new(dec.degree(), acc)
}

/// If `synthesize(dec)` equals `sigma * f` for a (necessarily unique)
/// nonzero sigma, returns it; otherwise `None`. This is projective equality
/// of the two forms.
pub fn verify_decomposition(f: &TernaryForm, dec: &Decomposition) -> Result<Option<Scalar>> {
    if f.degree() != dec.degree() {
        return Err(Error::DegreeMismatch(f.degree(), dec.degree()));
    }
    if f.field() != dec.field() {
        return Err(Error::ContextMismatch(
            f.field().describe(),
            dec.field().describe(),
        ));
    }
    let g = synthesize(dec)?;
    let lead = f
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("forms are nonzero");
    let sigma = g.coeffs()[lead].div(&f.coeffs()[lead]).expect("nonzero");
    if sigma.is_zero() {
        return Ok(None);
    }
    for (gc, fc) in g.coeffs().iter().zip(f.coeffs()) {
        if *gc != fc.mul(&sigma) {
            return Ok(None);
        }
    }
    Ok(Some(sigma))
}

/// The contraction matrix of `f` in bidegree (a, d-a).
///
/// Normalization: with rows indexed by degree-a exponents alpha and columns
/// by degree-b exponents beta (b = d-a), the entry is
///
///   multinomial(alpha) * multinomial(beta) * coeff(alpha+beta) / multinomial(alpha+beta),
///
/// which makes the matrix of a pure power l^d exactly the outer product of
/// the two power-coefficient vectors of l. Only ranks are consumed
/// downstream, and ranks are invariant under this diagonal rescaling. Over
/// F_p the division requires multinomial(alpha+beta) invertible mod p, which
/// holds whenever p > d; otherwise the computation reports an error.
pub fn catalecticant(f: &TernaryForm, a: u32) -> Result<ExactMatrix> {
    let d = f.degree();
    if a < 1 || a >= d {
        return Err(Error::ContractionDegree { a, max: d - 1 });
    }
    let b = d - a;
    let field = f.field();
    let row_order = MonomialOrder::new(a);
    let col_order = MonomialOrder::new(b);
    let full_order = MonomialOrder::new(d);
    let mut entries = Vec::with_capacity(row_order.len() * col_order.len());
    for &(ra, rb, rc) in row_order.exponents() {
        let row_scale = Scalar::from_bigint(multinomial(ra, rb, rc), field);
        for &(ca, cb, cc) in col_order.exponents() {
            let col_scale = Scalar::from_bigint(multinomial(ca, cb, cc), field);
            let (sa, sb, sc) = (ra + ca, rb + cb, rc + cc);
            let denom = Scalar::from_bigint(multinomial(sa, sb, sc), field);
            if denom.is_zero() {
                return Err(Error::NonInvertible(
                    format!("multinomial({sa},{sb},{sc})"),
                    match field {
                        Field::Fp(p) => p,
                        Field::Rational => unreachable!("multinomials are nonzero over Q"),
                    },
                ));
            }
            let coeff = &f.coeffs()[full_order.index_of(sa, sb, sc)];
            entries.push(coeff.mul(&row_scale).mul(&col_scale).div(&denom)?);
        }
    }
    ExactMatrix::new(row_order.len(), col_order.len(), entries, field)
}
