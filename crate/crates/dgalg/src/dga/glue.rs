//! Lower-triangular gluing of two DG algebras along a DG bimodule.
//!
//! The glued algebra lives on R (+) T (+) S with product
//! (r,t,s)(r',t',s') = (rr', t r' + s t', ss'), unit (1,0,1) and
//! componentwise differential. T is a left-S right-R DG bimodule.

use super::{dense_from_sparse, homogeneous_degree, DGAlgebra, LinComb};
use crate::exactlin::{Mat, Scalar};
use std::ops::Range;
use thiserror::Error;

/// A left-S right-R DG bimodule presented by action matrices.
#[derive(Debug, Clone)]
pub struct Bimodule {
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    /// left[s]: action of the S basis element s on T.
    pub left: Vec<Mat>,
    /// right[r]: action of the R basis element r on T.
    pub right: Vec<Mat>,
    pub diff: Mat,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// The zero bimodule; gluing along it gives the direct product.
    pub fn zero(field: crate::exactlin::FieldSpec, r: &DGAlgebra, s: &DGAlgebra) -> Bimodule {
        Bimodule {
            labels: vec![],
            degrees: vec![],
            left: vec![Mat::zeros(field, 0, 0); s.dim()],
            right: vec![Mat::zeros(field, 0, 0); r.dim()],
            diff: Mat::zeros(field, 0, 0),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GluingSpec {
    pub r: DGAlgebra,
    pub s: DGAlgebra,
    pub t: Bimodule,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlueError {
    #[error("bimodule axiom violated: {0}")]
    BimoduleAxiom(String),
}

/// The glued algebra with its corner idempotents and the block layout.
#[derive(Debug, Clone)]
pub struct Glued {
    pub algebra: DGAlgebra,
    pub e_r: Vec<Scalar>,
    pub e_s: Vec<Scalar>,
    pub r_range: Range<usize>,
    pub t_range: Range<usize>,
    pub s_range: Range<usize>,
}

fn check_bimodule(spec: &GluingSpec) -> Result<(), GlueError> {
    let r = &spec.r;
    let s = &spec.s;
    let t = &spec.t;
    let field = r.field();
    let dim = t.dim();
    let fail = |msg: String| Err(GlueError::BimoduleAxiom(msg));
    if t.left.len() != s.dim() || t.right.len() != r.dim() {
        return fail("action table sizes do not match algebra dimensions".into());
    }
    for m in t.left.iter().chain(t.right.iter()) {
        if (m.rows(), m.cols()) != (dim, dim) {
            return fail("action matrix shape mismatch".into());
        }
    }
    // gradings
    for (a, m) in t.left.iter().enumerate() {
        for c in 0..dim {
            for row in 0..dim {
                if !m.at(row, c).is_zero() && t.degrees[row] != t.degrees[c] + s.degrees()[a] {
                    return fail(format!("left action of {} breaks grading", s.label(a)));
                }
            }
        }
    }
    for (a, m) in t.right.iter().enumerate() {
        for c in 0..dim {
            for row in 0..dim {
                if !m.at(row, c).is_zero() && t.degrees[row] != t.degrees[c] + r.degrees()[a] {
                    return fail(format!("right action of {} breaks grading", r.label(a)));
                }
            }
        }
    }
    let left_of = |x: &[Scalar]| -> Mat {
        let mut m = Mat::zeros(field, dim, dim);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&t.left[a].scale(c));
            }
        }
        m
    };
    let right_of = |x: &[Scalar]| -> Mat {
        let mut m = Mat::zeros(field, dim, dim);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&t.right[a].scale(c));
            }
        }
        m
    };
    // units act as identity
    if left_of(s.unit()) != Mat::identity(field, dim) {
        return fail("unit of S does not act as identity".into());
    }
    if right_of(r.unit()) != Mat::identity(field, dim) {
        return fail("unit of R does not act as identity".into());
    }
    // associativity of each action: (s s') t = s (s' t), t (r r') = (t r) r'
    for a in 0..s.dim() {
        for b in 0..s.dim() {
            let ab = dense_from_sparse(field, s.dim(), s.mult_basis(a, b));
            if left_of(&ab) != t.left[a].mul(&t.left[b]) {
                return fail(format!("left action not associative on ({}, {})", s.label(a), s.label(b)));
            }
        }
    }
    for a in 0..r.dim() {
        for b in 0..r.dim() {
            let ab = dense_from_sparse(field, r.dim(), r.mult_basis(a, b));
            if right_of(&ab) != t.right[b].mul(&t.right[a]) {
                return fail(format!("right action not associative on ({}, {})", r.label(a), r.label(b)));
            }
        }
    }
    // the two actions commute: (s t) r = s (t r)
    for a in 0..s.dim() {
        for b in 0..r.dim() {
            if t.right[b].mul(&t.left[a]) != t.left[a].mul(&t.right[b]) {
                return fail(format!("actions of {} and {} do not commute", s.label(a), r.label(b)));
            }
        }
    }
    // d^2 = 0 and both Leibniz rules
    if !t.diff.mul(&t.diff).is_zero() {
        return fail("bimodule differential does not square to zero".into());
    }
    for c in 0..dim {
        let col = t.diff.col_vec(c);
        match homogeneous_degree(&t.degrees, &col) {
            None => {}
            Some(d) if d == t.degrees[c] + 1 => {}
            Some(_) => return fail(format!("d({}) has wrong degree", t.labels[c])),
        }
    }
    // d(s t) = d(s) t + (-1)^{|s|} s d(t)
    for a in 0..s.dim() {
        let ds = s.diff().col_vec(a);
        let sign = if s.degrees()[a].rem_euclid(2) == 0 { 1 } else { -1 };
        let lhs = t.diff.mul(&t.left[a]);
        let second = t.left[a].mul(&t.diff);
        let rhs = if sign == 1 {
            left_of(&ds).add(&second)
        } else {
            left_of(&ds).add(&second.neg())
        };
        if lhs != rhs {
            return fail(format!("left Leibniz fails on {}", s.label(a)));
        }
    }
    // d(t r) = d(t) r + (-1)^{|t|} t d(r), checked per T basis element
    for a in 0..r.dim() {
        let dr = r.diff().col_vec(a);
        let act_dr = right_of(&dr);
        for m in 0..dim {
            let e: Vec<Scalar> = (0..dim)
                .map(|i| if i == m { field.one() } else { field.zero() })
                .collect();
            let lhs = t.diff.apply(&t.right[a].apply(&e));
            let mut rhs = t.right[a].apply(&t.diff.apply(&e));
            let sign = if t.degrees[m].rem_euclid(2) == 0 { 1 } else { -1 };
            let term = act_dr.apply(&e);
            for (x, y) in rhs.iter_mut().zip(&term) {
                *x = if sign == 1 { &*x + y } else { &*x - y };
            }
            if lhs != rhs {
                return fail(format!("right Leibniz fails on ({}, {})", t.labels[m], r.label(a)));
            }
        }
    }
    Ok(())
}

/// Glues two DG algebras along a bimodule, checking the bimodule axioms
/// first and the corner identities afterwards.
pub fn glue(spec: &GluingSpec) -> Result<Glued, GlueError> {
    check_bimodule(spec)?;
    let r = &spec.r;
    let s = &spec.s;
    let t = &spec.t;
    let field = r.field();
    let (nr, nt, ns) = (r.dim(), t.dim(), s.dim());
    let dim = nr + nt + ns;
    let r_range = 0..nr;
    let t_range = nr..nr + nt;
    let s_range = nr + nt..dim;

    let mut labels: Vec<String> = r.labels().iter().map(|l| format!("r.{l}")).collect();
    labels.extend(t.labels.iter().map(|l| format!("t.{l}")));
    labels.extend(s.labels().iter().map(|l| format!("s.{l}")));
    let mut degrees = r.degrees().to_vec();
    degrees.extend_from_slice(&t.degrees);
    degrees.extend_from_slice(s.degrees());

    let mut unit = vec![field.zero(); dim];
    for (i, c) in r.unit().iter().enumerate() {
        unit[i] = c.clone();
    }
    for (i, c) in s.unit().iter().enumerate() {
        unit[s_range.start + i] = c.clone();
    }

    let mut mult = vec![vec![LinComb::new(); dim]; dim];
    // R * R and S * S
    for i in 0..nr {
        for j in 0..nr {
            mult[i][j] = r.mult_basis(i, j).clone();
        }
    }
    for i in 0..ns {
        for j in 0..ns {
            mult[s_range.start + i][s_range.start + j] = s
                .mult_basis(i, j)
                .iter()
                .map(|(k, c)| (s_range.start + k, c.clone()))
                .collect();
        }
    }
    // T * R (right action) and S * T (left action)
    for i in 0..nt {
        for j in 0..nr {
            let col = t.right[j].col_vec(i);
            mult[t_range.start + i][j] = col
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (t_range.start + k, c.clone()))
                .collect();
        }
    }
    for i in 0..ns {
        for j in 0..nt {
            let col = t.left[i].col_vec(j);
            mult[s_range.start + i][t_range.start + j] = col
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (t_range.start + k, c.clone()))
                .collect();
        }
    }
    // R * T, T * S, T * T and S * R corners are zero

    let mut diff = Mat::zeros(field, dim, dim);
    for (block, range) in [
        (r.diff(), &r_range),
        (&t.diff, &t_range),
        (s.diff(), &s_range),
    ] {
        for row in 0..block.rows() {
            for c in 0..block.cols() {
                if !block.at(row, c).is_zero() {
                    diff.set(range.start + row, range.start + c, block.at(row, c).clone());
                }
            }
        }
    }

    let algebra = DGAlgebra::new(field, labels, degrees, unit, mult, diff);
    let report = algebra.validate();
    assert!(report.is_empty(), "glued algebra failed validation: {report:?}");

    let mut e_r = vec![field.zero(); dim];
    for (i, c) in r.unit().iter().enumerate() {
        e_r[i] = c.clone();
    }
    let mut e_s = vec![field.zero(); dim];
    for (i, c) in s.unit().iter().enumerate() {
        e_s[s_range.start + i] = c.clone();
    }

    // corner identities: e_r + e_s = 1, orthogonal idempotents, and the
    // off-diagonal corners land where they should
    let sum: Vec<Scalar> = e_r.iter().zip(&e_s).map(|(a, b)| a + b).collect();
    assert_eq!(sum, algebra.unit(), "corner idempotents must sum to the unit");
    assert_eq!(algebra.mult_vec(&e_r, &e_r), e_r);
    assert_eq!(algebra.mult_vec(&e_s, &e_s), e_s);
    assert!(algebra.mult_vec(&e_r, &e_s).iter().all(Scalar::is_zero));
    assert!(algebra.mult_vec(&e_s, &e_r).iter().all(Scalar::is_zero));
    for i in 0..dim {
        let b = algebra.basis_vector(i);
        let corner_rs = algebra.mult_vec(&e_r, &algebra.mult_vec(&b, &e_s));
        assert!(corner_rs.iter().all(Scalar::is_zero), "e_r A e_s must vanish");
        let corner_sr = algebra.mult_vec(&e_s, &algebra.mult_vec(&b, &e_r));
        for (k, c) in corner_sr.iter().enumerate() {
            assert!(
                c.is_zero() || t_range.contains(&k),
                "e_s A e_r must equal the bimodule block"
            );
        }
    }

    Ok(Glued { algebra, e_r, e_s, r_range, t_range, s_range })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{exterior_algebra, truncated_polynomial_algebra};
    use crate::exactlin::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn point() -> DGAlgebra {
        truncated_polynomial_algebra(1, q())
    }

    /// One-dimensional bimodule in degree zero with scalar actions.
    fn scalar_bimodule(r: &DGAlgebra, s: &DGAlgebra) -> Bimodule {
        Bimodule {
            labels: vec!["t".into()],
            degrees: vec![0],
            left: vec![Mat::identity(q(), 1); s.dim()],
            right: vec![Mat::identity(q(), 1); r.dim()],
            diff: Mat::zeros(q(), 1, 1),
        }
    }

    #[test]
    fn zero_bimodule_gives_product() {
        let r = exterior_algebra(1, q());
        let s = truncated_polynomial_algebra(2, q());
        let spec = GluingSpec { r: r.clone(), s: s.clone(), t: Bimodule::zero(q(), &r, &s) };
        let glued = glue(&spec).unwrap();
        let product = DGAlgebra::direct_product(&r, &s);
        assert_eq!(glued.algebra.dim(), product.dim());
        assert_eq!(glued.algebra.degrees(), product.degrees());
        for i in 0..product.dim() {
            for j in 0..product.dim() {
                assert_eq!(glued.algebra.mult_basis(i, j), product.mult_basis(i, j));
            }
        }
    }

    #[test]
    fn gluing_points_gives_arrow_algebra() {
        let spec = GluingSpec { r: point(), s: point(), t: scalar_bimodule(&point(), &point()) };
        let glued = glue(&spec).unwrap();
        assert_eq!(glued.algebra.dim(), 3);
        assert!(glued.algebra.validate().is_empty());
        // the single arrow multiplies to zero with itself
        let t = glued.algebra.basis_vector(1);
        assert!(glued.algebra.mult_vec(&t, &t).iter().all(Scalar::is_zero));
    }

    #[test]
    fn bad_bimodule_is_rejected() {
        let r = point();
        let s = point();
        let mut t = scalar_bimodule(&r, &s);
        t.left = vec![Mat::zeros(q(), 1, 1)]; // unit no longer acts as identity
        let err = glue(&GluingSpec { r, s, t }).unwrap_err();
        assert!(matches!(err, GlueError::BimoduleAxiom(_)));
    }
}
