//! Linear subspaces of a fixed coordinate space.
//!
//! A subspace is stored as the reduced row-echelon basis of its spanning
//! set, so set-equal subspaces compare equal as values.

use super::mat::{Mat, RowReducer};
use super::scalar::{FieldSpec, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubspaceError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Mat, // rref, no zero rows
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Mat::zeros(field, 0, ambient) }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Mat::identity(field, ambient) }
    }

    /// Span of the given row vectors.
    pub fn from_rows(rows: &Mat) -> Subspace {
        let basis = rows.rref().0.drop_zero_rows();
        Subspace { field: rows.field(), ambient: rows.cols(), basis }
    }

    pub fn from_vectors(field: FieldSpec, ambient: usize, vs: &[Vec<Scalar>]) -> Subspace {
        Subspace::from_rows(&Mat::from_rows(field, ambient, vs.to_vec()))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        let mut red = self.reducer();
        !red.add_row(v.to_vec())
    }

    fn reducer(&self) -> RowReducer {
        let mut red = RowReducer::new(self.field, self.ambient);
        for r in 0..self.basis.rows() {
            red.add_row(self.basis.row_vec(r));
        }
        red
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, SubspaceError> {
        self.check_ambient(other)?;
        let red = self.reducer();
        Ok((0..other.basis.rows()).all(|r| red.contains(other.basis.row(r))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)))
    }

    /// Intersection of row spaces: solve u^T A = v^T B by stacking the
    /// transposes and reading the kernel.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(other)?;
        let a = &self.basis;
        let b = &other.basis;
        if a.rows() == 0 || b.rows() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let stacked = a.transpose().hstack(&b.transpose().neg());
        let kernel = stacked.kernel_basis();
        let mut vectors = Vec::new();
        for k in 0..kernel.rows() {
            let row = kernel.row(k);
            let u = &row[..a.rows()];
            let mut v = vec![self.field.zero(); self.ambient];
            for (i, coeff) in u.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    let e = a.at(i, c);
                    if e.is_zero() {
                        continue;
                    }
                    v[c] = &v[c] + &(coeff * e);
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(self.field, self.ambient, &vectors))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

/// Sum, intersection and containment in one bundle.
#[derive(Debug)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub contains: bool,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceOps, SubspaceError> {
    Ok(SubspaceOps {
        sum: a.sum(b)?,
        intersection: a.intersection(b)?,
        contains: a.contains(b)?,
    })
}

/// Projection onto the complement of `sub`, plus a section.
///
/// The complement basis is taken from the non-pivot coordinates of the
/// subspace's rref basis, so outputs are deterministic. The projection has
/// kernel exactly `sub`; `projection * section` is the identity.
pub fn quotient_map(ambient: usize, sub: &Subspace) -> (Mat, Mat) {
    assert_eq!(sub.ambient_dim(), ambient);
    let field = sub.field();
    let basis = sub.basis();
    let (_, pivots) = basis.rref(); // basis already rref; reuse for pivots
    let mut is_pivot = vec![false; ambient];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient).filter(|c| !is_pivot[*c]).collect();
    let m = free.len();

    // projection column c: reduce e_c by the rref basis, keep free coords
    let mut proj = Mat::zeros(field, m, ambient);
    for c in 0..ambient {
        let mut e = vec![field.zero(); ambient];
        e[c] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            if e[p].is_zero() {
                continue;
            }
            let factor = e[p].clone();
            for cc in 0..ambient {
                let b = basis.at(i, cc);
                if b.is_zero() {
                    continue;
                }
                e[cc] = &e[cc] - &(&factor * b);
            }
        }
        for (j, &f) in free.iter().enumerate() {
            proj.set(j, c, e[f].clone());
        }
    }

    let mut sect = Mat::zeros(field, ambient, m);
    for (j, &f) in free.iter().enumerate() {
        sect.set(f, j, field.one());
    }
    (proj, sect)
}
