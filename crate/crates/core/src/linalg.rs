//! Vectors, matrices and canonical subspaces over a [`FieldSpec`].
//!
//! Every [`Subspace`] stores its basis in reduced row-echelon form, so two
//! subspaces are equal exactly when their representations are equal.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Default cap on the number of vectors any enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: FieldSpec, coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Vector { field, coords })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Vector {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    /// The standard basis vector `e_index`.
    pub fn unit(field: FieldSpec, dim: usize, index: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.coords[index] = field.one();
        v
    }

    pub fn from_i64(field: FieldSpec, values: &[i64]) -> Self {
        Vector {
            field,
            coords: values.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub(crate) fn check(&self, field: FieldSpec, dim: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch);
        }
        if self.dim() != dim {
            return Err(Error::dims(dim, self.dim()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        other.check(self.field, self.dim())?;
        Ok(self.add(other))
    }

    pub(crate) fn add(&self, other: &Vector) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * other`
    pub(crate) fn axpy(&mut self, c: &Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    pub(crate) fn neg(&self) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Concatenates coordinate blocks, as for a direct sum.
    pub fn concat(parts: &[Vector]) -> Result<Vector> {
        let field = parts.first().ok_or(Error::EmptyList)?.field;
        let mut coords = Vec::new();
        for p in parts {
            if p.field != field {
                return Err(Error::FieldMismatch);
            }
            coords.extend(p.coords.iter().cloned());
        }
        Ok(Vector { field, coords })
    }

    fn pivot(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            r.check(field, cols)?;
            data.extend(r.coords);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(field: FieldSpec, cols: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows.iter().map(|r| Vector::from_i64(field, r)).collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diagonal(blocks: &[&Matrix]) -> Result<Self> {
        let field = blocks.first().ok_or(Error::EmptyList)?.field;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zero(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if b.field != field {
                return Err(Error::FieldMismatch);
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(r0 + i) * cols + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<()> {
        if value.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        self.data[i * self.cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            coords: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            coords: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        v.check(self.field, self.cols)?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.field, self.rows);
        for (j, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out.coords[i] = &out.coords[i] + &(m * c);
                }
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::dims(self.cols, rhs.rows));
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// Rank of the matrix (row rank).
    pub fn rank(&self) -> usize {
        rref(self.row_vectors()).len()
    }

    /// Basis of `{v : M v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let rows = rref(self.row_vectors());
        let pivots: Vec<usize> = rows.iter().map(|r| r.pivot().unwrap()).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::unit(self.field, self.cols, free);
            for (r, &pc) in rows.iter().zip(&pivots) {
                v.coords[pc] = -&r.coords[free];
            }
            basis.push(v);
        }
        Subspace::from_generators(self.field, self.cols, basis)
    }
}

/// Reduced row-echelon form with zero rows removed.
fn rref(mut rows: Vec<Vector>) -> Vec<Vector> {
    let Some(first) = rows.first() else {
        return rows;
    };
    let ncols = first.dim();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r].coords[col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank].coords[col].inv().expect("nonzero pivot");
        rows[rank] = rows[rank].scale(&inv);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row.coords[col].is_zero() {
                let c = -&row.coords[col];
                row.axpy(&c, &pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// A linear subspace of `field^ambient_dim` with a canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| Vector::unit(field, ambient_dim, i)).collect(),
        }
    }

    /// Span of `vectors`; validated.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            v.check(field, ambient_dim)?;
        }
        Ok(Self::from_generators(field, ambient_dim, vectors))
    }

    pub(crate) fn from_generators(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vector>) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: rref(vectors),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::dims(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        v.check(self.field, self.ambient_dim)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &Vector) -> bool {
        let mut r = v.clone();
        for b in &self.basis {
            let p = b.pivot().expect("basis rows are nonzero");
            let c = -&r.coords[p];
            r.axpy(&c, b);
        }
        r.is_zero()
    }

    /// `self ⊆ other`
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.rank() <= other.rank() && self.basis.iter().all(|b| other.contains_unchecked(b)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_generators(self.field, self.ambient_dim, gens))
    }

    /// `{ M b : b ∈ self }`
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if m.cols != self.ambient_dim {
            return Err(Error::dims(m.cols, self.ambient_dim));
        }
        let gens = self.basis.iter().map(|b| m.apply_unchecked(b)).collect();
        Ok(Self::from_generators(self.field, m.rows, gens))
    }

    /// `{ v : M v ∈ self }`, the solutions of `M v = Σ λ_i w_i` projected to `v`.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace> {
        if m.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if m.rows != self.ambient_dim {
            return Err(Error::dims(m.rows, self.ambient_dim));
        }
        let (n, r) = (m.cols, self.rank());
        let mut system = Matrix::zero(self.field, m.rows, n + r);
        for i in 0..m.rows {
            for j in 0..n {
                system.data[i * (n + r) + j] = m.get(i, j).clone();
            }
            for (k, w) in self.basis.iter().enumerate() {
                system.data[i * (n + r) + n + k] = -&w.coords[i];
            }
        }
        let solutions = system.kernel();
        let gens = solutions
            .basis
            .into_iter()
            .map(|s| Vector {
                field: self.field,
                coords: s.coords[..n].to_vec(),
            })
            .collect();
        Ok(Self::from_generators(self.field, n, gens))
    }

    /// Direct sum of subspaces living in consecutive coordinate blocks.
    pub fn direct_sum(parts: &[Subspace]) -> Result<Subspace> {
        let field = parts.first().ok_or(Error::EmptyList)?.field;
        let total: usize = parts.iter().map(|p| p.ambient_dim).sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for p in parts {
            if p.field != field {
                return Err(Error::FieldMismatch);
            }
            for b in &p.basis {
                let mut v = Vector::zero(field, total);
                v.coords[offset..offset + p.ambient_dim].clone_from_slice(&b.coords);
                gens.push(v);
            }
            offset += p.ambient_dim;
        }
        // Block-shifted RREF rows are already in RREF.
        Ok(Self::from_generators(field, total, gens))
    }

    /// Number of vectors in the subspace over GF(p), checked against `cap`.
    pub fn cardinality(&self, cap: u128) -> Result<u128> {
        let p = self.field.order().ok_or(Error::UnsupportedField)? as u128;
        checked_power(p, self.rank(), cap)
    }

    /// Every vector of the subspace, ordered lexicographically by the
    /// coefficient tuple over the canonical basis.
    pub fn vectors(&self, cap: u128) -> Result<SubspaceVectors<'_>> {
        let total = self.cardinality(cap)?;
        Ok(SubspaceVectors {
            space: self,
            coeffs: vec![0; self.rank()],
            p: self.field.order().unwrap() as u32,
            remaining: total,
        })
    }
}

/// `base^exp`, or `CapExceeded` when it passes `cap`.
pub(crate) fn checked_power(base: u128, exp: usize, cap: u128) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc > cap {
            return Err(Error::CapExceeded {
                needed: base.checked_pow(exp as u32).unwrap_or(u128::MAX),
                cap,
            });
        }
    }
    Ok(acc)
}

pub struct SubspaceVectors<'a> {
    space: &'a Subspace,
    coeffs: Vec<u32>,
    p: u32,
    remaining: u128,
}

impl Iterator for SubspaceVectors<'_> {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let field = self.space.field;
        let mut v = Vector::zero(field, self.space.ambient_dim);
        for (c, b) in self.coeffs.iter().zip(&self.space.basis) {
            v.axpy(&field.from_i64(*c as i64), b);
        }
        // odometer, last coefficient fastest
        for c in self.coeffs.iter_mut().rev() {
            *c += 1;
            if *c < self.p {
                break;
            }
            *c = 0;
        }
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn v(vals: &[i64]) -> Vector {
        Vector::from_i64(Q, vals)
    }

    fn span(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(Q, n, vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    fn example_alpha() -> Matrix {
        // columns are images: e1 -> e2, e2 -> 0, e3 -> 0
        Matrix::from_i64(Q, 3, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]).unwrap()
    }

    #[test]
    fn span_examples() {
        assert!(span(&[&[1, 0], &[0, 1]], 2).is_full());
        assert_eq!(span(&[&[2, 4]], 2).basis(), &[v(&[1, 2])]);
        let s = span(&[&[1, 1], &[1, 1]], 2);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.basis(), &[v(&[1, 1])]);
        assert!(span(&[], 3).is_zero());
    }

    #[test]
    fn span_rejects_bad_input() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(
            Subspace::span(Q, 2, vec![v(&[1, 2, 3])]),
            Err(Error::dims(2, 3))
        );
        assert_eq!(
            Subspace::span(Q, 2, vec![Vector::from_i64(f5, &[1, 2])]),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn contains_examples() {
        assert!(Subspace::zero(Q, 2).contains(&v(&[0, 0])).unwrap());
        assert!(span(&[&[1, 2]], 2).contains(&v(&[2, 4])).unwrap());
        assert!(!span(&[&[1, 0]], 2).contains(&v(&[0, 1])).unwrap());
        assert!(span(&[&[1, 0]], 2).contains(&v(&[0, 1, 0])).is_err());
    }

    #[test]
    fn leq_and_sum_examples() {
        let e1 = span(&[&[1, 0]], 2);
        let e2 = span(&[&[0, 1]], 2);
        let full = Subspace::full(Q, 2);
        let zero = Subspace::zero(Q, 2);
        assert!(zero.is_subspace_of(&e1).unwrap());
        assert!(e1.is_subspace_of(&full).unwrap());
        assert!(!e1.is_subspace_of(&e2).unwrap());
        assert_eq!(e1.sum(&zero).unwrap(), e1);
        assert_eq!(e1.sum(&e2).unwrap(), full);
        assert_eq!(e1.sum(&e1).unwrap(), e1);
    }

    #[test]
    fn image_and_preimage_examples() {
        let s = span(&[&[1, 1, 0]], 3);
        assert_eq!(s.image(&Matrix::identity(Q, 3)).unwrap(), s);
        assert!(s.image(&Matrix::zero(Q, 3, 3)).unwrap().is_zero());
        assert_eq!(
            Subspace::full(Q, 3).image(&example_alpha()).unwrap(),
            span(&[&[0, 1, 0]], 3)
        );
        assert_eq!(s.preimage(&Matrix::identity(Q, 3)).unwrap(), s);
        assert_eq!(
            Subspace::zero(Q, 3).preimage(&example_alpha()).unwrap(),
            span(&[&[0, 1, 0], &[0, 0, 1]], 3)
        );
        assert!(Subspace::zero(Q, 2)
            .preimage(&Matrix::zero(Q, 2, 4))
            .unwrap()
            .is_full());
    }

    #[test]
    fn enumeration_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let zero: Vec<_> = Subspace::zero(f2, 2).vectors(10).unwrap().collect();
        assert_eq!(zero, vec![Vector::zero(f2, 2)]);
        let all: Vec<_> = Subspace::full(f2, 2).vectors(10).unwrap().collect();
        let expect: Vec<_> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|c| Vector::from_i64(f2, c))
            .collect();
        assert_eq!(all, expect);
        let line = Subspace::span(f3, 2, vec![Vector::from_i64(f3, &[1, 1])]).unwrap();
        let got: Vec<_> = line.vectors(10).unwrap().collect();
        let expect: Vec<_> = [[0, 0], [1, 1], [2, 2]]
            .iter()
            .map(|c| Vector::from_i64(f3, c))
            .collect();
        assert_eq!(got, expect);
        assert!(matches!(
            Subspace::full(f3, 3).vectors(26),
            Err(Error::CapExceeded { needed: 27, cap: 26 })
        ));
        assert!(matches!(
            Subspace::full(Q, 1).vectors(10),
            Err(Error::UnsupportedField)
        ));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = Matrix::from_i64(Q, 3, &[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.rank(), 2);
        for b in k.basis() {
            assert!(m.apply(b).unwrap().is_zero());
        }
    }
}
