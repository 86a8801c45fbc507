//! Jacobson radical and the internal/external DG ideals attached to a
//! graded ideal.
//!
//! The radical of the underlying ungraded algebra is computed through the
//! trace bilinear form T(x, y) = trace(L_{xy}) of the regular
//! representation, valid in characteristic zero. For prime fields the
//! characteristic must exceed the algebra dimension, and the result is
//! post-verified (nilpotent, graded, two-sided, semisimple quotient) so a
//! wrong guard cannot slip through silently.

use super::{DGAlgebra, DGIdeal, GradedIdeal, IdealError};
use crate::exactlin::{FieldSpec, Mat, RowReducer, Scalar, Subspace};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RadicalError {
    #[error("prime field F_{p} is unsupported here: characteristic must exceed dim = {dim}")]
    CharUnsupported { p: u64, dim: usize },
    #[error("radical verification failed: {0}")]
    VerificationFailed(String),
    #[error("ideal is not nilpotent: powers stabilize at dimension {0}")]
    NotNilpotent(usize),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// The Jacobson radical of the underlying ungraded algebra, returned as a
/// graded two-sided ideal.
pub fn jacobson_radical(alg: &DGAlgebra) -> Result<GradedIdeal, RadicalError> {
    let dim = alg.dim();
    if let FieldSpec::PrimeField(p) = alg.field() {
        if (p as u128) <= dim as u128 {
            return Err(RadicalError::CharUnsupported { p, dim });
        }
    }
    // t[k] = trace of left multiplication by basis k
    let traces: Vec<Scalar> = (0..dim)
        .map(|k| {
            let l = alg.left_mult_matrix(&alg.basis_vector(k));
            let mut t = alg.field().zero();
            for i in 0..dim {
                t = &t + l.at(i, i);
            }
            t
        })
        .collect();
    // gram[i][j] = trace(L_{b_i b_j})
    let gram = Mat::from_fn(alg.field(), dim, dim, |i, j| {
        let mut t = alg.field().zero();
        for (k, c) in alg.mult_basis(i, j) {
            t = &t + &(c * &traces[*k]);
        }
        t
    });
    let kernel = gram.kernel_basis(); // symmetric form, kernel rows are the radical
    let sub = Subspace::from_rows(&kernel);
    let ideal = GradedIdeal::from_subspace(alg, &sub)
        .map_err(|e| RadicalError::VerificationFailed(e.to_string()))?;

    // certificate 1: nilpotency (so the candidate sits inside the radical)
    if power_chain(alg, &ideal).last().map(|s| s.dim()).unwrap_or(0) != 0 {
        return Err(RadicalError::VerificationFailed(
            "trace-form candidate is not nilpotent".into(),
        ));
    }
    // certificate 2: the quotient algebra's own trace form is nondegenerate
    // (so the radical sits inside the candidate); together the certificates
    // prove the answer in any characteristic
    if !quotient_trace_form_nondegenerate(alg, &ideal) {
        return Err(RadicalError::VerificationFailed(
            "quotient trace form is degenerate".into(),
        ));
    }
    Ok(ideal)
}

/// Trace form of the regular representation of `A / ideal`, computed from
/// the quotient's own structure constants.
fn quotient_trace_form_nondegenerate(alg: &DGAlgebra, ideal: &GradedIdeal) -> bool {
    let field = alg.field();
    let (proj, sect) = crate::exactlin::quotient_map(alg.dim(), ideal.subspace());
    let m = proj.rows();
    if m == 0 {
        return true;
    }
    let reps: Vec<Vec<Scalar>> = (0..m).map(|i| sect.col_vec(i)).collect();
    // left multiplication matrices of the quotient
    let lmats: Vec<Mat> = (0..m)
        .map(|i| {
            Mat::from_fn(field, m, m, |r, c| {
                let prod = alg.mult_vec(&reps[i], &reps[c]);
                proj.apply(&prod)[r].clone()
            })
        })
        .collect();
    let traces: Vec<Scalar> = lmats
        .iter()
        .map(|l| {
            let mut t = field.zero();
            for i in 0..m {
                t = &t + l.at(i, i);
            }
            t
        })
        .collect();
    let gram = Mat::from_fn(field, m, m, |i, j| {
        let prod = proj.apply(&alg.mult_vec(&reps[i], &reps[j]));
        let mut t = field.zero();
        for (k, c) in prod.iter().enumerate() {
            if !c.is_zero() {
                t = &t + &(c * &traces[k]);
            }
        }
        t
    });
    gram.rank() == m
}

/// Successive powers `I, I^2, ...` until the chain stabilizes; the last
/// entry is either zero or a stable nonzero subspace.
fn power_chain(alg: &DGAlgebra, ideal: &GradedIdeal) -> Vec<Subspace> {
    let mut chain = vec![ideal.subspace().clone()];
    loop {
        let prev = chain.last().unwrap();
        if prev.is_zero() {
            break;
        }
        let next = multiply_subspaces(alg, prev, ideal.subspace());
        if &next == prev {
            chain.push(next);
            break;
        }
        chain.push(next);
    }
    chain
}

fn multiply_subspaces(alg: &DGAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut red = RowReducer::new(alg.field(), alg.dim());
    for i in 0..a.basis().rows() {
        let x = a.basis().row_vec(i);
        for j in 0..b.basis().rows() {
            let y = b.basis().row_vec(j);
            red.add_row(alg.mult_vec(&x, &y));
        }
    }
    Subspace::from_rows(&red.basis())
}

/// Smallest s with `ideal^s = 0`.
pub fn nilpotency_index(alg: &DGAlgebra, ideal: &GradedIdeal) -> Result<usize, RadicalError> {
    if ideal.is_zero() {
        return Ok(1);
    }
    let chain = power_chain(alg, ideal);
    let last = chain.last().unwrap();
    if !last.is_zero() {
        return Err(RadicalError::NotNilpotent(last.dim()));
    }
    Ok(chain.len())
}

/// The span of all p-fold products of ideal elements, as a graded ideal.
pub fn ideal_power(alg: &DGAlgebra, ideal: &GradedIdeal, p: usize) -> GradedIdeal {
    assert!(p >= 1, "power must be at least 1");
    let mut current = ideal.subspace().clone();
    for _ in 1..p {
        if current.is_zero() {
            break;
        }
        current = multiply_subspaces(alg, &current, ideal.subspace());
    }
    GradedIdeal::from_subspace(alg, &current)
        .expect("powers of a two-sided graded ideal stay two-sided and graded")
}

/// The internal DG ideal: elements of the ideal whose differential stays in
/// the ideal. Computed as the kernel of `I -> A -> A/I` following `d`.
pub fn internal_dg_ideal(alg: &DGAlgebra, ideal: &GradedIdeal) -> DGIdeal {
    let field = alg.field();
    let basis = ideal.subspace().basis();
    let k = basis.rows();
    if k == 0 {
        return DGIdeal::zero(alg);
    }
    let (proj, _) = crate::exactlin::quotient_map(alg.dim(), ideal.subspace());
    // rows of the constraint matrix: proj(d(v_i)) as columns over the
    // coefficients of a general element sum c_i v_i
    let mut constraint = Mat::zeros(field, proj.rows(), k);
    for i in 0..k {
        let image = proj.apply(&alg.d_vec(&basis.row_vec(i)));
        for r in 0..proj.rows() {
            constraint.set(r, i, image[r].clone());
        }
    }
    let kernel = constraint.kernel_basis();
    let mut rows = Vec::new();
    for r in 0..kernel.rows() {
        let coeffs = kernel.row(r);
        let mut v = vec![field.zero(); alg.dim()];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (pos, b) in basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[pos] = &v[pos] + &(c * b);
                }
            }
        }
        rows.push(v);
    }
    let sub = Subspace::from_vectors(field, alg.dim(), &rows);
    let graded = GradedIdeal::from_subspace(alg, &sub)
        .expect("internal part of a graded ideal is a two-sided graded ideal");
    DGIdeal::from_graded(alg, graded).expect("internal DG ideal is closed under d")
}

/// The external DG ideal `I + d(I)`.
pub fn external_dg_ideal(alg: &DGAlgebra, ideal: &GradedIdeal) -> DGIdeal {
    let basis = ideal.subspace().basis();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in 0..basis.rows() {
        let v = basis.row_vec(r);
        rows.push(alg.d_vec(&v));
        rows.push(v);
    }
    let sub = Subspace::from_vectors(alg.field(), alg.dim(), &rows);
    let graded = GradedIdeal::from_subspace(alg, &sub)
        .expect("I + d(I) is a two-sided graded ideal");
    DGIdeal::from_graded(alg, graded).expect("I + d(I) is closed under d")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{exterior_algebra, truncated_polynomial_algebra};
    use crate::dga::test_fixtures::contractible_dual_numbers;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn radical_of_truncated_polynomials() {
        let alg = truncated_polynomial_algebra(3, q());
        let j = jacobson_radical(&alg).unwrap();
        assert_eq!(j.dim(), 2); // span{x, x^2}
        assert_eq!(nilpotency_index(&alg, &j).unwrap(), 3);
    }

    #[test]
    fn radical_of_semisimple_product_is_zero() {
        let k = truncated_polynomial_algebra(1, q());
        let kk = DGAlgebra::direct_product(&k, &k);
        let j = jacobson_radical(&kk).unwrap();
        assert!(j.is_zero());
        assert_eq!(nilpotency_index(&kk, &j).unwrap(), 1);
    }

    #[test]
    fn radical_of_exterior_algebra() {
        let alg = exterior_algebra(2, q());
        let j = jacobson_radical(&alg).unwrap();
        assert_eq!(j.dim(), 3); // everything in positive degree
        let dims = j.graded_dims(&alg);
        assert_eq!(dims.get(&1), Some(&2));
        assert_eq!(dims.get(&2), Some(&1));
        assert_eq!(nilpotency_index(&alg, &j).unwrap(), 3);
        // top wedge power survives to the last step
        let alg3 = exterior_algebra(3, q());
        let j3 = jacobson_radical(&alg3).unwrap();
        assert_eq!(nilpotency_index(&alg3, &j3).unwrap(), 4);
        let sq = ideal_power(&alg3, &j3, 2);
        assert_eq!(sq.dim(), 4); // wedge^2 + wedge^3 = 3 + 1
        assert_eq!(ideal_power(&alg3, &j3, 3).dim(), 1); // top wedge power
    }

    #[test]
    fn ideal_power_boundaries() {
        let alg = truncated_polynomial_algebra(4, q());
        let j = jacobson_radical(&alg).unwrap();
        assert_eq!(ideal_power(&alg, &j, 1), j);
        assert!(ideal_power(&alg, &j, 4).is_zero());
    }

    #[test]
    fn internal_external_for_d_stable_ideal() {
        let alg = exterior_algebra(2, q());
        let j = jacobson_radical(&alg).unwrap();
        // d = 0, so both constructions return the ideal itself
        let int = internal_dg_ideal(&alg, &j);
        let ext = external_dg_ideal(&alg, &j);
        assert_eq!(int.subspace(), j.subspace());
        assert_eq!(ext.subspace(), j.subspace());
    }

    #[test]
    fn internal_external_for_contractible_algebra() {
        let alg = contractible_dual_numbers();
        let j = jacobson_radical(&alg).unwrap();
        assert_eq!(j.dim(), 1); // span{a}
        let int = internal_dg_ideal(&alg, &j);
        assert!(int.is_zero()); // d(a) = 1 escapes
        let ext = external_dg_ideal(&alg, &j);
        assert_eq!(ext.dim(), 2); // a and 1 = d(a)
    }

    #[test]
    fn char_guard_rejects_small_primes() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let alg = exterior_algebra(3, f5); // dim 8 > 5
        assert!(matches!(
            jacobson_radical(&alg),
            Err(RadicalError::CharUnsupported { p: 5, dim: 8 })
        ));
        let f101 = FieldSpec::prime_field(101).unwrap();
        let alg = exterior_algebra(3, f101);
        assert_eq!(jacobson_radical(&alg).unwrap().dim(), 7);
    }
}
