//! Quotient DG algebras and DG modules, and the two semisimple parts
//! attached to a DG algebra.

use super::radical::{external_dg_ideal, internal_dg_ideal, jacobson_radical, RadicalError};
use super::{DGAlgebra, DGIdeal, DGModule, GradedIdeal, LinComb};
use crate::complexes::ChainMap;
use crate::exactlin::{quotient_map, Mat, Subspace};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuotientError {
    #[error("ideal is not closed under the differential")]
    NotDClosed,
    #[error(transparent)]
    Radical(#[from] RadicalError),
}

/// Quotient DG algebra by a DG ideal, with the projection matrix onto the
/// chosen complement basis (non-pivot coordinates of the ideal's rref).
pub fn quotient_dga(
    alg: &DGAlgebra,
    ideal: &GradedIdeal,
) -> Result<(DGAlgebra, Mat), QuotientError> {
    if !ideal.is_d_closed(alg) {
        return Err(QuotientError::NotDClosed);
    }
    let field = alg.field();
    let (proj, sect) = quotient_map(alg.dim(), ideal.subspace());
    let m = proj.rows();
    let reps: Vec<Vec<_>> = (0..m).map(|i| sect.col_vec(i)).collect();
    // labels and degrees inherited from the complement coordinates
    let mut labels = Vec::with_capacity(m);
    let mut degrees = Vec::with_capacity(m);
    for i in 0..m {
        let rep = &reps[i];
        let pos = rep.iter().position(|c| !c.is_zero()).expect("section column nonzero");
        labels.push(format!("[{}]", alg.label(pos)));
        degrees.push(alg.degrees()[pos]);
    }
    let unit = proj.apply(alg.unit());
    let mut mult = vec![vec![LinComb::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let prod = proj.apply(&alg.mult_vec(&reps[i], &reps[j]));
            mult[i][j] = super::sparse_from_dense(&prod);
        }
    }
    let mut diff = Mat::zeros(field, m, m);
    for j in 0..m {
        let image = proj.apply(&alg.d_vec(&reps[j]));
        for r in 0..m {
            diff.set(r, j, image[r].clone());
        }
    }
    let quotient = DGAlgebra::new(field, labels, degrees, unit, mult, diff);
    debug_assert!(quotient.validate().is_empty(), "quotient of a DG ideal must validate");
    Ok((quotient, proj))
}

/// Quotient of a right DG module by an action- and d-stable graded
/// subspace. Returns the quotient module and the projection.
pub fn quotient_module(module: &DGModule, sub: &Subspace) -> (DGModule, Mat) {
    let alg = Arc::clone(module.algebra());
    let (proj, sect) = quotient_map(module.dim(), sub);
    let m = proj.rows();
    let mut labels = Vec::with_capacity(m);
    let mut degrees = Vec::with_capacity(m);
    for i in 0..m {
        let rep = sect.col_vec(i);
        let pos = rep.iter().position(|c| !c.is_zero()).expect("section column nonzero");
        labels.push(format!("[{}]", module.labels()[pos]));
        degrees.push(module.degrees()[pos]);
    }
    let action: Vec<Mat> = (0..alg.dim())
        .map(|a| proj.mul(module.action(a)).mul(&sect))
        .collect();
    let diff = proj.mul(module.diff()).mul(&sect);
    (DGModule::new(alg, labels, degrees, action, diff), proj)
}

/// The subquotient complex outer/inner of two nested d-stable graded
/// subspaces of the algebra.
pub fn subquotient_complex(
    alg: &DGAlgebra,
    outer: &Subspace,
    inner: &Subspace,
) -> crate::complexes::Complex {
    use crate::complexes::{Complex, GradedSpace};
    use std::collections::BTreeMap;

    assert!(inner.contains(outer).is_ok());
    assert!(outer.contains(inner).expect("same ambient"), "inner must sit inside outer");
    let field = alg.field();
    let (proj, _) = quotient_map(alg.dim(), inner);
    // representatives: rows of outer independent modulo inner
    let mut reducer = crate::exactlin::RowReducer::new(field, alg.dim());
    for r in 0..inner.basis().rows() {
        reducer.add_row(inner.basis().row_vec(r));
    }
    let mut reps: Vec<Vec<_>> = Vec::new();
    for r in 0..outer.basis().rows() {
        let v = outer.basis().row_vec(r);
        if reducer.add_row(v.clone()) {
            reps.push(v);
        }
    }
    // group by degree and express d through projected coordinates
    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, v) in reps.iter().enumerate() {
        let d = super::homogeneous_degree(alg.degrees(), v).expect("graded subspace");
        by_degree.entry(d).or_default().push(i);
    }
    let dims: BTreeMap<i64, usize> = by_degree.iter().map(|(&q, v)| (q, v.len())).collect();
    // projected representative matrix for coordinate solving
    let projected: Vec<Vec<_>> = reps.iter().map(|v| proj.apply(v)).collect();
    let solver = crate::exactlin::SpanSolver::new(&Mat::from_rows(
        field,
        proj.rows(),
        projected,
    ));
    let mut d_blocks = BTreeMap::new();
    for (&q, cols) in &by_degree {
        let Some(rows) = by_degree.get(&(q + 1)) else { continue };
        let mut block = Mat::zeros(field, rows.len(), cols.len());
        for (c, &idx) in cols.iter().enumerate() {
            let image = proj.apply(&alg.d_vec(&reps[idx]));
            let coords = solver
                .coords(&image)
                .expect("differential of outer stays in outer modulo inner");
            for (r, &ridx) in rows.iter().enumerate() {
                if !coords[ridx].is_zero() {
                    block.set(r, c, coords[ridx].clone());
                }
            }
        }
        d_blocks.insert(q, block);
    }
    Complex::new(field, GradedSpace::from_dims(dims), d_blocks)
        .expect("subquotient differential squares to zero")
}

/// The two canonical semisimple quotients of a DG algebra and the
/// comparison map between them.
pub struct SemisimpleParts {
    pub radical: GradedIdeal,
    pub internal_radical: DGIdeal,
    pub external_radical: DGIdeal,
    pub s_minus: DGAlgebra,
    pub s_plus: DGAlgebra,
    /// Projection matrices from the ambient algebra.
    pub minus_projection: Mat,
    pub plus_projection: Mat,
    /// The natural surjection S_- -> S_+ on underlying complexes.
    pub comparison: ChainMap,
}

/// Computes S_- = R/J_-, S_+ = R/J_+ and the natural surjection between
/// them. The surjection is always a quasi-isomorphism; this is asserted
/// here because a failure would indicate an implementation bug.
pub fn semisimple_parts(alg: &DGAlgebra) -> Result<SemisimpleParts, QuotientError> {
    let radical = jacobson_radical(alg)?;
    let internal = internal_dg_ideal(alg, &radical);
    let external = external_dg_ideal(alg, &radical);
    let (s_minus, minus_projection) = quotient_dga(alg, internal.graded())?;
    let (s_plus, plus_projection) = quotient_dga(alg, external.graded())?;

    // comparison in complement coordinates: project a lift
    let (_, minus_sect) = quotient_map(alg.dim(), internal.subspace());
    let flat = plus_projection.mul(&minus_sect);
    let src = s_minus.complex();
    let tgt = s_plus.complex();
    let src_idx = s_minus.degree_indices();
    let tgt_idx = s_plus.degree_indices();
    let mut blocks = BTreeMap::new();
    for (&q, cols) in &src_idx {
        if let Some(rows) = tgt_idx.get(&q) {
            blocks.insert(q, flat.submatrix(rows, cols));
        }
    }
    let comparison = ChainMap::new(src, tgt, blocks)
        .expect("natural surjection between semisimple parts is a chain map");
    assert!(
        comparison.is_quasi_iso(),
        "surjection S- -> S+ must be a quasi-isomorphism; this indicates a bug"
    );
    Ok(SemisimpleParts {
        radical,
        internal_radical: internal,
        external_radical: external,
        s_minus,
        s_plus,
        minus_projection,
        plus_projection,
        comparison,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{exterior_algebra, truncated_polynomial_algebra};
    use crate::dga::test_fixtures::contractible_dual_numbers;
    use crate::exactlin::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let alg = exterior_algebra(2, q());
        let (quot, proj) = quotient_dga(&alg, &GradedIdeal::zero(&alg)).unwrap();
        assert_eq!(quot.dim(), alg.dim());
        assert_eq!(proj, Mat::identity(q(), 4));
        assert_eq!(quot.degrees(), alg.degrees());
    }

    #[test]
    fn truncation_shortens() {
        // k[x]/x^3 divided by span{x^2} gives k[x]/x^2
        let alg = truncated_polynomial_algebra(3, q());
        let sub = Subspace::from_vectors(q(), 3, &[alg.basis_vector(2)]);
        let ideal = GradedIdeal::from_subspace(&alg, &sub).unwrap();
        let (quot, _) = quotient_dga(&alg, &ideal).unwrap();
        assert!(quot.validate().is_empty());
        let expected = truncated_polynomial_algebra(2, q());
        assert_eq!(quot.dim(), 2);
        assert_eq!(quot.degrees(), expected.degrees());
        // identical structure constants under the evident identification
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(quot.mult_basis(i, j), expected.mult_basis(i, j));
            }
        }
    }

    #[test]
    fn semisimple_parts_with_zero_differential() {
        let alg = exterior_algebra(2, q());
        let parts = semisimple_parts(&alg).unwrap();
        // d = 0: both quotients equal R/J = k
        assert_eq!(parts.s_minus.dim(), 1);
        assert_eq!(parts.s_plus.dim(), 1);
    }

    #[test]
    fn semisimple_parts_of_contractible_algebra() {
        let alg = contractible_dual_numbers();
        let parts = semisimple_parts(&alg).unwrap();
        // J_- = 0 so S_- is the whole (acyclic) algebra; J_+ = R so S_+ = 0
        assert_eq!(parts.s_minus.dim(), 2);
        assert_eq!(parts.s_plus.dim(), 0);
        assert!(parts.s_minus.is_acyclic());
    }
}
