//! Exact dense linear algebra over Q and over prime fields.
//!
//! Over Q, rank and determinant go through fraction-free Bareiss elimination
//! on a denominator-cleared integer matrix, so intermediate entries are
//! minors of the input (polynomial growth) instead of unreduced fractions.
//! Over F_p, plain Gaussian elimination is exact already.
//!
//! Pivoting is deterministic: columns left to right, first nonzero row top
//! down. All derived objects (kernel bases, span coordinates) inherit that
//! determinism.

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{inv_mod, is_prime, mul_mod, Field, Scalar};

/// Dense matrix with all entries in one field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
    field: Field,
}

impl ExactMatrix {
    /// Builds a rows x cols matrix from row-major entries, checking that
    /// every entry lives in `field`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>, field: Field) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::ContextMismatch(
                    field.describe(),
                    e.field().describe(),
                ));
            }
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
            field,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, field: Field) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged rows".to_string()));
        }
        ExactMatrix::new(nrows, ncols, rows.into_iter().flatten().collect(), field)
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut entries = vec![Scalar::zero(field); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::one(field);
        }
        ExactMatrix {
            rows: n,
            cols: n,
            entries,
            field,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
            field: self.field,
        }
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.rank_with(None)
    }

    /// Exact rank, optionally short-circuited by a modular prefilter: when
    /// the reduction mod a random prime already has full rank, the exact rank
    /// is certified without big-integer elimination. Deficient modular ranks
    /// are always re-verified exactly, so the answer never changes.
    pub fn rank_with(&self, prefilter: Option<&Prefilter>) -> usize {
        if let (Some(pf), Field::Rational) = (prefilter, self.field) {
            if let Some(m) = self.reduce_entries(pf.prime) {
                let full = self.rows.min(self.cols);
                if fp_rank(m, self.cols, pf.prime) == full {
                    return full;
                }
            }
        }
        match self.field {
            Field::Rational => {
                let (m, _) = self.integerized();
                bareiss(m, self.cols).pivot_cols.len()
            }
            Field::Fp(p) => fp_rank(self.fp_entries(), self.cols, p as u64),
        }
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one(self.field));
        }
        match self.field {
            Field::Rational => {
                let (m, row_scales) = self.integerized();
                let ech = bareiss(m, self.cols);
                if ech.pivot_cols.len() < n {
                    return Ok(Scalar::zero(self.field));
                }
                let mut det = ech.mat[n - 1][n - 1].clone();
                if ech.sign < 0 {
                    det = -det;
                }
                let mut denom = BigInt::one();
                for s in row_scales {
                    denom *= s;
                }
                Ok(Scalar::Rat(BigRational::new(det, denom)))
            }
            Field::Fp(p) => {
                let p64 = p as u64;
                let (mat, pivots, sign) = fp_echelon(self.fp_entries(), self.cols, p64);
                if pivots.len() < n {
                    return Ok(Scalar::zero(self.field));
                }
                let mut det = 1u64;
                for (r, &c) in pivots.iter().enumerate() {
                    det = mul_mod(det, mat[r][c], p64);
                }
                if sign < 0 && det != 0 {
                    det = p64 - det;
                }
                Ok(Scalar::Fp {
                    value: det,
                    prime: p,
                })
            }
        }
    }

    /// Whether a square matrix is singular, optionally using the modular
    /// prefilter: a determinant that is nonzero mod a prime is nonzero over
    /// Q, so only zero residues fall back to the exact computation.
    pub fn det_is_zero_with(&self, prefilter: Option<&Prefilter>) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let (Some(pf), Field::Rational) = (prefilter, self.field) {
            if let Some(m) = self.reduce_entries(pf.prime) {
                if fp_rank(m, self.cols, pf.prime) == self.rows {
                    return Ok(false);
                }
            }
        }
        Ok(self.determinant()?.is_zero())
    }

    /// Basis of the right null space, each vector normalized so its first
    /// nonzero entry is 1, ordered by ascending free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivot_cols) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (r, &c) in pivot_cols.iter().enumerate() {
                v[c] = rref[r][free].neg();
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Treats `self` as a list of column vectors and decides whether `target`
    /// lies in their span. On success returns the coordinate vector of the
    /// eliminated system with free variables set to 0 (deterministic).
    pub fn coords_in_span(&self, target: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if target.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "target length {} does not match row count {}",
                target.len(),
                self.rows
            )));
        }
        for e in target {
            if e.field() != self.field {
                return Err(Error::ContextMismatch(
                    self.field.describe(),
                    e.field().describe(),
                ));
            }
        }
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(target[i].clone());
            rows.push(row);
        }
        let augmented = ExactMatrix::from_rows(rows, self.field)?;
        let (rref, pivot_cols) = augmented.rref();
        if pivot_cols.contains(&self.cols) {
            return Ok(None);
        }
        let mut coords = vec![Scalar::zero(self.field); self.cols];
        for (r, &c) in pivot_cols.iter().enumerate() {
            coords[c] = rref[r][self.cols].clone();
        }
        Ok(Some(coords))
    }

    /// Reduced row echelon form together with the pivot columns. Over Q the
    /// forward pass is fraction-free; only the final normalization divides.
    fn rref(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        match self.field {
            Field::Rational => {
                let (m, _) = self.integerized();
                let ech = bareiss(m, self.cols);
                let pivot_cols = ech.pivot_cols.clone();
                let mut rat: Vec<Vec<BigRational>> = ech
                    .mat
                    .into_iter()
                    .take(pivot_cols.len())
                    .map(|row| row.into_iter().map(BigRational::from_integer).collect())
                    .collect();
                // Back-substitution from the last pivot up.
                for k in (0..pivot_cols.len()).rev() {
                    let c = pivot_cols[k];
                    let piv = rat[k][c].clone();
                    for x in &mut rat[k] {
                        *x /= piv.clone();
                    }
                    for i in 0..k {
                        let factor = rat[i][c].clone();
                        if factor.is_zero() {
                            continue;
                        }
                        for j in 0..self.cols {
                            let delta = &factor * &rat[k][j];
                            rat[i][j] -= delta;
                        }
                    }
                }
                let rows = rat
                    .into_iter()
                    .map(|row| row.into_iter().map(Scalar::Rat).collect())
                    .collect();
                (rows, pivot_cols)
            }
            Field::Fp(p) => {
                let p64 = p as u64;
                let (mut mat, pivot_cols, _) = fp_echelon(self.fp_entries(), self.cols, p64);
                for k in (0..pivot_cols.len()).rev() {
                    let c = pivot_cols[k];
                    let inv = inv_mod(mat[k][c], p64).expect("pivot invertible");
                    for x in &mut mat[k] {
                        *x = mul_mod(*x, inv, p64);
                    }
                    for i in 0..k {
                        let factor = mat[i][c];
                        if factor == 0 {
                            continue;
                        }
                        for j in 0..self.cols {
                            let sub = mul_mod(factor, mat[k][j], p64);
                            mat[i][j] = (mat[i][j] + p64 - sub) % p64;
                        }
                    }
                }
                let rows = mat
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|value| Scalar::Fp { value, prime: p })
                            .collect()
                    })
                    .collect();
                (rows, pivot_cols)
            }
        }
    }

    /// Clears denominators row by row; returns the integer matrix and the
    /// positive scale factor applied to each row.
    fn integerized(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                if let Scalar::Rat(q) = self.get(i, j) {
                    lcm = num::integer::lcm(lcm, q.denom().clone());
                }
            }
            let row = (0..self.cols)
                .map(|j| match self.get(i, j) {
                    Scalar::Rat(q) => q.numer() * (&lcm / q.denom()),
                    Scalar::Fp { .. } => unreachable!("integerized is Q-only"),
                })
                .collect();
            out.push(row);
            scales.push(lcm);
        }
        (out, scales)
    }

    fn fp_entries(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| match self.get(i, j) {
                        Scalar::Fp { value, .. } => *value,
                        Scalar::Rat(_) => unreachable!("fp_entries is F_p-only"),
                    })
                    .collect()
            })
            .collect()
    }

    /// Reduction of a rational matrix mod `q`; `None` if any denominator
    /// vanishes mod `q`.
    fn reduce_entries(&self, q: u64) -> Option<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).reduce_mod(q)).collect())
            .collect()
    }
}

/// Divides a vector by its first nonzero entry (no-op for the zero vector).
pub fn normalize_leading(v: &mut [Scalar]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.inv().expect("nonzero leading entry");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
    }
}

struct Echelon {
    mat: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    sign: i32,
}

/// One-step fraction-free (Bareiss) elimination with row swaps and column
/// skipping. After the k-th step every entry is, up to the tracked sign, a
/// (k+1)-minor of the input, so the division by the previous pivot is exact.
fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if pr != r {
            m.swap(pr, r);
            sign = -sign;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row.iter_mut().skip(c + 1) {
                    *x = &(&pivot_row[c] * &*x) / &prev;
                }
            } else {
                for j in c + 1..cols {
                    row[j] = &(&pivot_row[c] * &row[j] - &row[c] * &pivot_row[j]) / &prev;
                }
                row[c] = BigInt::zero();
            }
        }
        prev = m[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        mat: m,
        pivot_cols,
        sign,
    }
}

/// Row echelon form over F_p; returns (matrix, pivot columns, swap sign).
fn fp_echelon(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> (Vec<Vec<u64>>, Vec<usize>, i32) {
    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut sign = 1i32;
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] % p != 0) else {
            continue;
        };
        if pr != r {
            m.swap(pr, r);
            sign = -sign;
        }
        let inv = inv_mod(m[r][c], p).expect("pivot invertible mod prime");
        for i in r + 1..rows {
            if m[i][c] == 0 {
                continue;
            }
            let factor = mul_mod(m[i][c], inv, p);
            for j in c..cols {
                let sub = mul_mod(factor, m[r][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    (m, pivot_cols, sign)
}

fn fp_rank(m: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    fp_echelon(m, cols, p).1.len()
}

/// A single random 31-bit prime used to screen determinant and rank
/// computations over Q. Screening never changes results: nonzero residues
/// certify nonzero values, zero residues are recomputed exactly.
#[derive(Debug, Clone)]
pub struct Prefilter {
    prime: u64,
}

impl Prefilter {
    pub fn new(prime: u64) -> Result<Prefilter> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        Ok(Prefilter { prime })
    }

    /// Picks a uniformly random 31-bit prime.
    pub fn random() -> Prefilter {
        let mut rng = rand::thread_rng();
        loop {
            let candidate: u64 = rng.gen_range((1u64 << 30) + 1..1u64 << 31) | 1;
            if is_prime(candidate) {
                return Prefilter { prime: candidate };
            }
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn qm(rows: &[&[i64]]) -> ExactMatrix {
        let entries: Vec<Scalar> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Scalar::from_int(x, Field::Rational)))
            .collect();
        ExactMatrix::new(rows.len(), rows[0].len(), entries, Field::Rational).unwrap()
    }

    /// Independent oracle: cofactor-expansion determinant over Q.
    fn cofactor_det(rows: &[Vec<BigRational>]) -> BigRational {
        let n = rows.len();
        if n == 0 {
            return BigRational::one();
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut acc = BigRational::zero();
        for (i, row) in rows.iter().enumerate() {
            if row[0].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigRational>> = rows
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, r)| r[1..].to_vec())
                .collect();
            let term = &row[0] * cofactor_det(&minor);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn as_rationals(m: &ExactMatrix) -> Vec<Vec<BigRational>> {
        (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| match m.get(i, j) {
                        Scalar::Rat(q) => q.clone(),
                        _ => panic!(),
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(ExactMatrix::identity(3, Field::Rational).rank(), 3);
        let z = ExactMatrix::new(
            4,
            6,
            vec![Scalar::zero(Field::Rational); 24],
            Field::Rational,
        )
        .unwrap();
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rank_vandermonde_against_determinant_oracle() {
        // Vandermonde at nodes 0,1,2,3: nonzero determinant = product of
        // node differences, so the rank oracle must say 4.
        let m = qm(&[
            &[1, 0, 0, 0],
            &[1, 1, 1, 1],
            &[1, 2, 4, 8],
            &[1, 3, 9, 27],
        ]);
        let oracle = cofactor_det(&as_rationals(&m));
        assert!(!oracle.is_zero());
        assert_eq!(m.rank(), 4);
        match m.determinant().unwrap() {
            Scalar::Rat(d) => assert_eq!(d, oracle),
            _ => panic!(),
        }
    }

    #[test]
    fn determinant_examples() {
        let id = ExactMatrix::identity(3, Field::Rational);
        assert!(id.determinant().unwrap().is_one());
        // Swapping two rows of the identity flips the sign.
        let m = qm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(m.determinant().unwrap().to_string(), "-1");
        // Cofactor oracle pins 2x2.
        let m = qm(&[&[1, 2], &[3, 4]]);
        let oracle = cofactor_det(&as_rationals(&m));
        assert_eq!(oracle, BigRational::from_integer(BigInt::from(-2)));
        assert_eq!(m.determinant().unwrap().to_string(), "-2");
        let ns = qm(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(ns.determinant(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn determinant_with_rational_entries() {
        let half = Scalar::parse("1/2", Field::Rational).unwrap();
        let third = Scalar::parse("1/3", Field::Rational).unwrap();
        let m = ExactMatrix::new(
            2,
            2,
            vec![
                half.clone(),
                Scalar::from_int(1, Field::Rational),
                third,
                half,
            ],
            Field::Rational,
        )
        .unwrap();
        // det = 1/4 - 1/3 = -1/12
        assert_eq!(m.determinant().unwrap().to_string(), "-1/12");
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(3, Field::Rational)
            .kernel_basis()
            .is_empty());

        // Single row (1, 1, 0): two normalized kernel directions.
        let m = qm(&[&[1, 1, 0]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        let strings: Vec<Vec<String>> = basis
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(strings[0], vec!["1", "-1", "0"]);
        assert_eq!(strings[1], vec!["0", "0", "1"]);

        let z = ExactMatrix::new(
            2,
            2,
            vec![Scalar::zero(Field::Rational); 4],
            Field::Rational,
        )
        .unwrap();
        assert_eq!(z.kernel_basis().len(), 2);
    }

    fn matvec(m: &ExactMatrix, v: &[Scalar]) -> Vec<Scalar> {
        (0..m.rows())
            .map(|i| {
                let mut acc = Scalar::zero(m.field());
                for j in 0..m.cols() {
                    acc = acc.add(&m.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    #[test]
    fn kernel_vectors_annihilate_and_count_matches_rank() {
        let m = qm(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let rank = m.rank();
        let basis = m.kernel_basis();
        assert_eq!(rank + basis.len(), m.cols());
        for v in &basis {
            assert!(matvec(&m, v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn coords_in_span_examples() {
        let id = ExactMatrix::identity(3, Field::Rational);
        let e1 = vec![
            Scalar::from_int(0, Field::Rational),
            Scalar::from_int(1, Field::Rational),
            Scalar::from_int(0, Field::Rational),
        ];
        let c = id.coords_in_span(&e1).unwrap().unwrap();
        assert_eq!(
            c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            vec!["0", "1", "0"]
        );

        // (1,1) is not in the span of the single column (1,0).
        let col = qm(&[&[1], &[0]]);
        let target = vec![
            Scalar::from_int(1, Field::Rational),
            Scalar::from_int(1, Field::Rational),
        ];
        assert!(col.coords_in_span(&target).unwrap().is_none());

        // (2,2,0) = 1*(1,0,0) + 1*(1,2,0): direct substitution oracle.
        let cols = qm(&[&[1, 1], &[0, 2], &[0, 0]]);
        let target = vec![
            Scalar::from_int(2, Field::Rational),
            Scalar::from_int(2, Field::Rational),
            Scalar::from_int(0, Field::Rational),
        ];
        let c = cols.coords_in_span(&target).unwrap().unwrap();
        assert_eq!(
            c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            vec!["1", "1"]
        );

        assert!(cols.coords_in_span(&target[..2]).is_err());
    }

    #[test]
    fn fp_matrices() {
        let f = Field::prime(7).unwrap();
        let entries: Vec<Scalar> = [1, 2, 3, 4, 5, 6, 6, 5, 4]
            .iter()
            .map(|&x| Scalar::from_int(x, f))
            .collect();
        let m = ExactMatrix::new(3, 3, entries, f).unwrap();
        // Row3 = 2*Row2 - Row1 mod 7? 2*(4,5,6)-(1,2,3) = (7,8,9) = (0,1,2) no.
        // Just cross-check rank against the Q lift of the same integers.
        let lift = qm(&[&[1, 2, 3], &[4, 5, 6], &[6, 5, 4]]);
        assert_eq!(m.rank(), lift.rank());
        let det = m.determinant().unwrap();
        let lift_det = lift.determinant().unwrap();
        match (det, lift_det) {
            (Scalar::Fp { value, .. }, Scalar::Rat(q)) => {
                let num = q.numer();
                assert_eq!(
                    BigInt::from(value),
                    ((num % 7i32) + 7i32) % 7i32
                );
            }
            _ => panic!(),
        }
        for v in m.kernel_basis() {
            assert!(matvec(&m, &v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn mixed_context_rejected() {
        let entries = vec![
            Scalar::from_int(1, Field::Rational),
            Scalar::from_int(1, Field::Fp(7)),
        ];
        assert!(matches!(
            ExactMatrix::new(1, 2, entries, Field::Rational),
            Err(Error::ContextMismatch(..))
        ));
    }

    #[test]
    fn prefilter_never_changes_answers() {
        let pf = Prefilter::new(2147483647).unwrap();
        let singular = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(singular.rank_with(Some(&pf)), singular.rank());
        assert!(singular.det_is_zero_with(Some(&pf)).unwrap());
        let regular = qm(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        assert_eq!(regular.rank_with(Some(&pf)), regular.rank());
        assert!(!regular.det_is_zero_with(Some(&pf)).unwrap());
        let rnd = Prefilter::random();
        assert!(is_prime(rnd.prime()));
        assert!(rnd.prime() > 1 << 30 && rnd.prime() < 1 << 31);
    }
}
