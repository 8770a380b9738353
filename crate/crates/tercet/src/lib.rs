//! Certification toolkit for rank decompositions of ternary forms.
//!
//! Given a degree-d form in three variables together with an expression as a
//! combination of k d-th powers of linear forms, the crate decides whether
//! that expression is provably the only one of its length, by a criterion
//! that combines an integer bound on k with general-uniform-position and
//! exact rank conditions on the points of the decomposition. Everything runs
//! over exact fields (arbitrary-precision rationals or a prime field); there
//! is no floating point anywhere.
//!
//! The supporting machinery is exposed as well: exact linear algebra, Hilbert
//! functions of plane point sets, plateau/curve splits of difference
//! functions, and an exhaustive finite-field search oracle for desk-scale
//! ground truth.

pub mod certifier;
pub mod combinat;
pub mod error;
pub mod geometry;
pub mod gup;
pub mod hilbert;
pub mod matrix;
pub mod oracle;
pub mod prooflab;
pub mod scalar;

pub use certifier::{certify, Certificate, CertifyOptions, Verdict};
pub use error::{Error, Result};
pub use geometry::{Decomposition, MonomialOrder, ProjectivePoint, TernaryForm};
pub use gup::{gup_check, GupOptions, GupReport};
pub use hilbert::{profile, HilbertProfile};
pub use matrix::{ExactMatrix, Prefilter};
pub use oracle::{all_decompositions, plane_points, OracleOptions, SearchResult};
pub use prooflab::{analyze_pair, PairAnalysis};
pub use scalar::{Field, Scalar};
