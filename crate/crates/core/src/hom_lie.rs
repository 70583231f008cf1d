//! Hom-Lie algebras given by structure constants and a twist map.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{checked_power, Matrix, Subspace, Vector};

/// A finite-dimensional Hom-Lie algebra `(L, [ , ], α)`.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` is their
/// negation and `[e_i, e_i] = 0`, so the bracket is alternating in every
/// characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    field: FieldSpec,
    dim: usize,
    structure: BTreeMap<(usize, usize), Vector>,
    alpha: Matrix,
    name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureMode {
    Subalgebra,
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomKind {
    SkewSymmetry,
    HomJacobi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub kind: AxiomKind,
    /// 0-based basis indices of the failing tuple.
    pub witness: Vec<usize>,
    pub defect: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub valid: bool,
    pub failures: Vec<AxiomFailure>,
}

/// Why a subspace fails to be a subalgebra or ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureViolation {
    /// `α(b_index)` leaves the subspace.
    Twist { basis_index: usize },
    /// `[b_left, b_right]` leaves the subspace. For ideals `right` indexes
    /// the ambient standard basis.
    Bracket { left: usize, right: usize },
}

impl HomLieAlgebra {
    /// Builds an algebra from `(i, j, [e_i, e_j])` entries with `i < j`.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        brackets: Vec<(usize, usize, Vector)>,
        alpha: Matrix,
        name: Option<String>,
    ) -> Result<Self> {
        if alpha.field() != field {
            return Err(Error::FieldMismatch);
        }
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::invariant(format!(
                "alpha must be {dim}x{dim}, got {}x{}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        let mut structure = BTreeMap::new();
        for (i, j, v) in brackets {
            if i >= j {
                return Err(Error::invariant(format!(
                    "bracket entry ({i}, {j}) must have i < j"
                )));
            }
            if j >= dim {
                return Err(Error::invariant(format!(
                    "bracket entry ({i}, {j}) is out of range for dimension {dim}"
                )));
            }
            v.check(field, dim)?;
            if structure.contains_key(&(i, j)) {
                return Err(Error::invariant(format!("duplicate bracket entry ({i}, {j})")));
            }
            if !v.is_zero() {
                structure.insert((i, j), v);
            }
        }
        Ok(HomLieAlgebra {
            field,
            dim,
            structure,
            alpha,
            name,
        })
    }

    /// The abelian algebra with the given twist map.
    pub fn abelian(field: FieldSpec, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        Self::new(field, dim, Vec::new(), alpha, None)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Nonzero structure constants, `i < j`.
    pub fn structure(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.structure.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// `[e_i, e_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self
                .structure
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Vector::zero(self.field, self.dim)),
            Greater => self
                .structure
                .get(&(j, i))
                .map(Vector::neg)
                .unwrap_or_else(|| Vector::zero(self.field, self.dim)),
            Equal => Vector::zero(self.field, self.dim),
        }
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        x.check(self.field, self.dim)?;
        y.check(self.field, self.dim)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.field, self.dim);
        let (xs, ys) = (x.coords(), y.coords());
        for (&(i, j), c) in &self.structure {
            // x_i y_j - x_j y_i
            let coeff = &(&xs[i] * &ys[j]) - &(&xs[j] * &ys[i]);
            out.axpy(&coeff, c);
        }
        out
    }

    pub fn twist(&self, x: &Vector) -> Result<Vector> {
        self.alpha.apply(x)
    }

    fn unit(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim, i)
    }

    /// `[α(x), [y, z]] + [α(y), [z, x]] + [α(z), [x, y]]`
    pub fn jacobi_defect(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        for v in [x, y, z] {
            v.check(self.field, self.dim)?;
        }
        Ok(self.jacobi_unchecked(x, y, z))
    }

    fn jacobi_unchecked(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = &self.alpha;
        let t1 = self.bracket_unchecked(&a.apply_unchecked(x), &self.bracket_unchecked(y, z));
        let t2 = self.bracket_unchecked(&a.apply_unchecked(y), &self.bracket_unchecked(z, x));
        let t3 = self.bracket_unchecked(&a.apply_unchecked(z), &self.bracket_unchecked(x, y));
        t1.add(&t2).add(&t3)
    }

    /// Checks the Hom-Jacobi identity on all basis triples `i < j < k`.
    ///
    /// The Jacobi sum is trilinear and vanishes when two arguments agree,
    /// so these triples decide it. Skew-symmetry holds by representation.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut failures = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let d = self.jacobi_unchecked(&self.unit(i), &self.unit(j), &self.unit(k));
                    if !d.is_zero() {
                        failures.push(AxiomFailure {
                            kind: AxiomKind::HomJacobi,
                            witness: vec![i, j, k],
                            defect: d,
                        });
                    }
                }
            }
        }
        AxiomReport {
            valid: failures.is_empty(),
            failures,
        }
    }

    fn check_subspace(&self, h: &Subspace) -> Result<()> {
        if h.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if h.ambient_dim() != self.dim {
            return Err(Error::dims(self.dim, h.ambient_dim()));
        }
        Ok(())
    }

    fn twist_violation(&self, h: &Subspace) -> Option<ClosureViolation> {
        h.basis()
            .iter()
            .position(|b| !h.contains_unchecked(&self.alpha.apply_unchecked(b)))
            .map(|basis_index| ClosureViolation::Twist { basis_index })
    }

    /// First reason `h` is not a Hom-Lie subalgebra, if any.
    pub fn subalgebra_violation(&self, h: &Subspace) -> Result<Option<ClosureViolation>> {
        self.check_subspace(h)?;
        if let Some(v) = self.twist_violation(h) {
            return Ok(Some(v));
        }
        let b = h.basis();
        for left in 0..b.len() {
            for right in left + 1..b.len() {
                if !h.contains_unchecked(&self.bracket_unchecked(&b[left], &b[right])) {
                    return Ok(Some(ClosureViolation::Bracket { left, right }));
                }
            }
        }
        Ok(None)
    }

    /// First reason `h` is not a Hom-Lie ideal, if any.
    pub fn ideal_violation(&self, h: &Subspace) -> Result<Option<ClosureViolation>> {
        self.check_subspace(h)?;
        if let Some(v) = self.twist_violation(h) {
            return Ok(Some(v));
        }
        for (left, b) in h.basis().iter().enumerate() {
            for right in 0..self.dim {
                if !h.contains_unchecked(&self.bracket_unchecked(b, &self.unit(right))) {
                    return Ok(Some(ClosureViolation::Bracket { left, right }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_subalgebra(&self, h: &Subspace) -> Result<bool> {
        Ok(self.subalgebra_violation(h)?.is_none())
    }

    pub fn is_ideal(&self, h: &Subspace) -> Result<bool> {
        Ok(self.ideal_violation(h)?.is_none())
    }

    pub fn violation(&self, h: &Subspace, mode: ClosureMode) -> Result<Option<ClosureViolation>> {
        match mode {
            ClosureMode::Subalgebra => self.subalgebra_violation(h),
            ClosureMode::Ideal => self.ideal_violation(h),
        }
    }

    /// Smallest subalgebra (or ideal) containing `seeds`.
    pub fn closure(&self, seeds: Vec<Vector>, mode: ClosureMode) -> Result<Subspace> {
        let mut current = Subspace::span(self.field, self.dim, seeds)?;
        loop {
            let b = current.basis();
            let mut gens: Vec<Vector> = b.to_vec();
            gens.extend(b.iter().map(|v| self.alpha.apply_unchecked(v)));
            match mode {
                ClosureMode::Subalgebra => {
                    for i in 0..b.len() {
                        for j in i + 1..b.len() {
                            gens.push(self.bracket_unchecked(&b[i], &b[j]));
                        }
                    }
                }
                ClosureMode::Ideal => {
                    for v in b {
                        for j in 0..self.dim {
                            gens.push(self.bracket_unchecked(v, &self.unit(j)));
                        }
                    }
                }
            }
            let next = Subspace::span(self.field, self.dim, gens)?;
            if next.rank() == current.rank() {
                return Ok(next);
            }
            current = next;
        }
    }

    /// `L_1 ⊕ … ⊕ L_n` with componentwise bracket and block twist map.
    pub fn direct_sum(algebras: &[&HomLieAlgebra]) -> Result<HomLieAlgebra> {
        let field = algebras.first().ok_or(Error::EmptyList)?.field;
        if algebras.iter().any(|a| a.field != field) {
            return Err(Error::FieldMismatch);
        }
        let dim: usize = algebras.iter().map(|a| a.dim).sum();
        let mut brackets = Vec::new();
        let mut offset = 0;
        for a in algebras {
            for (&(i, j), c) in &a.structure {
                let mut parts = vec![Vector::zero(field, offset), c.clone()];
                parts.push(Vector::zero(field, dim - offset - a.dim));
                brackets.push((offset + i, offset + j, Vector::concat(&parts)?));
            }
            offset += a.dim;
        }
        let blocks: Vec<&Matrix> = algebras.iter().map(|a| &a.alpha).collect();
        let alpha = Matrix::block_diagonal(&blocks)?;
        HomLieAlgebra::new(field, dim, brackets, alpha, None)
    }

    /// Whether `f` (rows = `target.dim`, cols = `self.dim`) is a morphism
    /// `self → target`.
    pub fn is_morphism_to(&self, f: &Matrix, target: &HomLieAlgebra) -> Result<bool> {
        if f.field() != self.field || target.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if f.cols() != self.dim {
            return Err(Error::dims(self.dim, f.cols()));
        }
        if f.rows() != target.dim {
            return Err(Error::dims(target.dim, f.rows()));
        }
        if f.mul(&self.alpha)? != target.alpha.mul(f)? {
            return Ok(false);
        }
        let images: Vec<Vector> = (0..self.dim).map(|i| f.column(i)).collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = f.apply_unchecked(&self.basis_bracket(i, j));
                let rhs = target.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All morphisms `self → target` over GF(p), in lexicographic order of
    /// the row-major matrix entries.
    pub fn morphisms_to<'a>(
        &'a self,
        target: &'a HomLieAlgebra,
        cap: u128,
    ) -> Result<impl Iterator<Item = Morphism> + 'a> {
        if target.field != self.field {
            return Err(Error::FieldMismatch);
        }
        let p = self.field.order().ok_or(Error::UnsupportedField)? as u128;
        let entries = self.dim * target.dim;
        let total = checked_power(p, entries, cap)?;
        let field = self.field;
        let (rows, cols) = (target.dim, self.dim);
        Ok((0..total).filter_map(move |code| {
            let mut m = Matrix::zero(field, rows, cols);
            let mut rest = code;
            for idx in (0..entries).rev() {
                let digit = (rest % p) as u64;
                rest /= p;
                m.set(idx / cols.max(1), idx % cols.max(1), field.residue(digit).unwrap())
                    .unwrap();
            }
            Morphism::certify(self.clone(), target.clone(), m).ok()
        }))
    }
}

/// A linear map between Hom-Lie algebras; `certified` once checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: HomLieAlgebra,
    target: HomLieAlgebra,
    map: Matrix,
    certified: bool,
}

impl Morphism {
    pub fn new(source: HomLieAlgebra, target: HomLieAlgebra, map: Matrix) -> Self {
        Morphism {
            source,
            target,
            map,
            certified: false,
        }
    }

    /// Builds and checks in one step; `NotAMorphism` if the map fails.
    pub fn certify(source: HomLieAlgebra, target: HomLieAlgebra, map: Matrix) -> Result<Self> {
        Morphism::new(source, target, map).certified()
    }

    pub fn certified(mut self) -> Result<Self> {
        if !self.source.is_morphism_to(&self.map, &self.target)? {
            return Err(Error::NotAMorphism);
        }
        self.certified = true;
        Ok(self)
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn source(&self) -> &HomLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &HomLieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        self.map.rank() == self.target.dim
    }

    pub fn identity(a: &HomLieAlgebra) -> Self {
        Self::trusted(a.clone(), a.clone(), Matrix::identity(a.field, a.dim))
    }

    pub fn zero(a: &HomLieAlgebra, b: &HomLieAlgebra) -> Result<Self> {
        Self::certify(a.clone(), b.clone(), Matrix::zero(a.field, b.dim, a.dim))
    }

    /// Inclusion of the `index`-th summand into `sum`.
    pub fn inclusion(parts: &[&HomLieAlgebra], index: usize, sum: &HomLieAlgebra) -> Result<Self> {
        let (offset, dim) = summand_range(parts, index)?;
        let mut m = Matrix::zero(sum.field, sum.dim, dim);
        for i in 0..dim {
            m.set(offset + i, i, sum.field.one())?;
        }
        Self::certify(parts[index].clone(), sum.clone(), m)
    }

    /// Projection of `sum` onto its `index`-th summand.
    pub fn projection(parts: &[&HomLieAlgebra], index: usize, sum: &HomLieAlgebra) -> Result<Self> {
        let (offset, dim) = summand_range(parts, index)?;
        let mut m = Matrix::zero(sum.field, dim, sum.dim);
        for i in 0..dim {
            m.set(i, offset + i, sum.field.one())?;
        }
        Self::certify(sum.clone(), parts[index].clone(), m)
    }

    fn trusted(source: HomLieAlgebra, target: HomLieAlgebra, map: Matrix) -> Self {
        Morphism {
            source,
            target,
            map,
            certified: true,
        }
    }
}

fn summand_range(parts: &[&HomLieAlgebra], index: usize) -> Result<(usize, usize)> {
    if index >= parts.len() {
        return Err(Error::InvalidParams(format!(
            "summand {index} of {}",
            parts.len()
        )));
    }
    let offset = parts[..index].iter().map(|a| a.dim).sum();
    Ok((offset, parts[index].dim))
}

/// The three-dimensional example: `α(e1) = e2`, `α(e2) = α(e3) = 0`,
/// `[e1, e3] = e1`, all other basis brackets zero.
pub fn paper_example(field: FieldSpec) -> HomLieAlgebra {
    let alpha = Matrix::from_i64(field, 3, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]).unwrap();
    HomLieAlgebra::new(
        field,
        3,
        vec![(0, 2, Vector::unit(field, 3, 0))],
        alpha,
        Some("example-3d".into()),
    )
    .unwrap()
}
