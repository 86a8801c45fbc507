//! Lifting idempotents from H^0 to exact degree-zero cocycles.
//!
//! Given a cocycle a whose class is idempotent, the lift is a polynomial in
//! a: write the minimal polynomial of a (inside the cocycle subalgebra) as
//! t^alpha * w with w(0) != 0, then solve h = 0 mod t^alpha, h = 1 mod w
//! by the extended Euclidean algorithm and evaluate h at a. The result
//! squares to itself exactly, is killed by d, and represents the same
//! class.

use super::{homogeneous_degree, DGAlgebra};
use crate::exactlin::{RowReducer, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("input is not a degree-zero cocycle whose class is idempotent: {0}")]
    NotIdempotent(String),
    #[error("lift failed: {0}")]
    LiftFailed(String),
}

type Poly = Vec<Scalar>; // coefficients, index = power, no trailing zeros

fn poly_trim(mut p: Poly) -> Poly {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn poly_divmod(num: &Poly, den: &Poly) -> (Poly, Poly) {
    assert!(!den.is_empty(), "division by zero polynomial");
    let field = den.last().unwrap().field();
    let mut rem = num.clone();
    let mut quo = vec![field.zero(); num.len().saturating_sub(den.len()) + 1];
    let lead_inv = den.last().unwrap().inv();
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - den.len();
        let coef = rem.last().unwrap() * &lead_inv;
        quo[shift] = &quo[shift] + &coef;
        for (i, dc) in den.iter().enumerate() {
            rem[shift + i] = &rem[shift + i] - &(&coef * dc);
        }
        rem = poly_trim(rem);
    }
    (poly_trim(quo), rem)
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
fn poly_xgcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let field = a
        .iter()
        .chain(b.iter())
        .next()
        .expect("xgcd of zero polynomials")
        .field();
    let one = vec![field.one()];
    let zero: Poly = vec![];
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
        let next_t = poly_sub(&t0, &poly_mul(&q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, next_s);
        (t0, t1) = (t1, next_t);
    }
    // normalize to a monic gcd
    let lead = r0.last().expect("gcd of nonzero polynomials is nonzero").clone();
    let inv = lead.inv();
    let scale = |p: &Poly| p.iter().map(|c| c * &inv).collect::<Poly>();
    (scale(&r0), scale(&s0), scale(&t0))
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let field = a[0].field();
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let field = a.iter().chain(b.iter()).next().map(|c| c.field());
    let Some(field) = field else { return vec![] };
    let n = a.len().max(b.len());
    let mut out = vec![field.zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = &out[i] - y;
    }
    poly_trim(out)
}

/// Lifts an idempotent class of H^0, given by a degree-zero cocycle, to an
/// exact idempotent cocycle representing the same class.
pub fn lift_idempotent(alg: &DGAlgebra, cocycle: &[Scalar]) -> Result<Vec<Scalar>, LiftError> {
    let field = alg.field();
    let dim = alg.dim();
    assert_eq!(cocycle.len(), dim);
    if alg.d_vec(cocycle).iter().any(|c| !c.is_zero()) {
        return Err(LiftError::NotIdempotent("d(a) != 0".into()));
    }
    match homogeneous_degree(alg.degrees(), cocycle) {
        Some(0) | None if cocycle.iter().all(Scalar::is_zero) => return Ok(cocycle.to_vec()),
        Some(0) => {}
        _ => return Err(LiftError::NotIdempotent("not homogeneous of degree 0".into())),
    }
    // the class must be idempotent: a^2 - a must be a boundary
    let square = alg.mult_vec(cocycle, cocycle);
    let defect: Vec<Scalar> = square.iter().zip(cocycle).map(|(s, c)| s - c).collect();
    let h = alg.complex().cohomology();
    let by_degree = alg.degree_indices();
    let deg0 = by_degree.get(&0).cloned().unwrap_or_default();
    let defect0: Vec<Scalar> = deg0.iter().map(|&i| defect[i].clone()).collect();
    match h.class_coords(0, &defect0) {
        Some(coords) if coords.iter().all(Scalar::is_zero) => {}
        _ => return Err(LiftError::NotIdempotent("class of a^2 - a is nonzero".into())),
    }

    // minimal polynomial of the cocycle inside the algebra
    let mut red = RowReducer::new(field, dim);
    let mut powers: Vec<Vec<Scalar>> = vec![alg.unit().to_vec()];
    red.add_row(alg.unit().to_vec());
    let minimal: Poly = loop {
        let next = alg.mult_vec(powers.last().unwrap(), cocycle);
        if red.contains(&next) {
            // express next in terms of the recorded powers
            let basis = crate::exactlin::Mat::from_rows(field, dim, powers.clone());
            let solver = crate::exactlin::SpanSolver::new(&basis);
            let coeffs = solver.coords(&next).expect("dependent power lies in the span");
            let mut m: Poly = coeffs.iter().map(|c| -c).collect();
            m.push(field.one());
            break poly_trim(m);
        }
        red.add_row(next.clone());
        powers.push(next);
    };

    let alpha = minimal.iter().take_while(|c| c.is_zero()).count();
    let w: Poly = poly_trim(minimal[alpha..].to_vec());
    let h_poly: Poly = if alpha == 0 {
        vec![field.one()] // class is invertible-idempotent, i.e. 1
    } else if w.len() <= 1 {
        vec![] // minimal polynomial is t^alpha, class is 0
    } else {
        // t^alpha * u + w * v = 1; h = u * t^alpha is 0 mod t^alpha, 1 mod w
        let mut t_alpha = vec![field.zero(); alpha + 1];
        t_alpha[alpha] = field.one();
        let (g, u, _v) = poly_xgcd(&t_alpha, &w);
        if g.len() != 1 {
            return Err(LiftError::LiftFailed(
                "t^alpha and w are not coprime; minimal polynomial not of the form t^a*w".into(),
            ));
        }
        let (_, reduced) = poly_divmod(&poly_mul(&u, &t_alpha), &minimal);
        reduced
    };

    // evaluate h at the cocycle using the recorded powers
    let mut z = vec![field.zero(); dim];
    for (i, c) in h_poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = if i < powers.len() {
            powers[i].clone()
        } else {
            // h was reduced mod the minimal polynomial, so powers suffice
            unreachable!("reduced polynomial degree exceeds recorded powers")
        };
        for (zc, pc) in z.iter_mut().zip(&p) {
            *zc = &*zc + &(c * pc);
        }
    }

    // exact verification of all three posted equations
    if alg.mult_vec(&z, &z) != z {
        return Err(LiftError::LiftFailed("z^2 != z".into()));
    }
    if alg.d_vec(&z).iter().any(|c| !c.is_zero()) {
        return Err(LiftError::LiftFailed("d(z) != 0".into()));
    }
    let diff_class: Vec<Scalar> = deg0.iter().map(|&i| &z[i] - &cocycle[i]).collect();
    match h.class_coords(0, &diff_class) {
        Some(coords) if coords.iter().all(Scalar::is_zero) => {}
        _ => return Err(LiftError::LiftFailed("[z] != [a]".into())),
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::truncated_polynomial_algebra;
    use crate::dga::DGAlgebra;
    use crate::exactlin::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn lifts_zero_and_one() {
        let alg = truncated_polynomial_algebra(3, q());
        let one = alg.unit().to_vec();
        assert_eq!(lift_idempotent(&alg, &one).unwrap(), one);
        let zero = vec![q().zero(); 3];
        assert_eq!(lift_idempotent(&alg, &zero).unwrap(), zero);
    }

    #[test]
    fn lifts_perturbed_idempotent() {
        // in k x k, the element (1, 0) plus a nilpotent correction is not
        // idempotent, but e = (1,0) itself lifts to itself
        let k = truncated_polynomial_algebra(1, q());
        let alg = DGAlgebra::direct_product(&k, &k);
        let e = alg.basis_vector(0);
        let z = lift_idempotent(&alg, &e).unwrap();
        assert_eq!(z, e);
    }

    #[test]
    fn rejects_non_idempotent() {
        let alg = truncated_polynomial_algebra(3, q());
        // x has square x^2 != x and [x] = x != 0 in H^0? x has degree 1,
        // so it is rejected for homogeneity
        let x = alg.basis_vector(1);
        assert!(lift_idempotent(&alg, &x).is_err());
        // 1 + x is degree-mixed
        let mut v = alg.unit().to_vec();
        v[1] = q().one();
        assert!(lift_idempotent(&alg, &v).is_err());
    }

    #[test]
    fn polynomial_helpers() {
        let f = q();
        let a = vec![f.from_i64(-1), f.zero(), f.one()]; // t^2 - 1
        let b = vec![f.from_i64(-1), f.one()]; // t - 1
        let (quo, rem) = poly_divmod(&a, &b);
        assert_eq!(quo, vec![f.one(), f.one()]); // t + 1
        assert!(rem.is_empty());
        let (g, u, v) = poly_xgcd(&a, &b);
        assert_eq!(g, b); // gcd = t - 1
        let check = poly_sub(&poly_mul(&u, &a), &poly_mul(&v, &b).iter().map(|c| -c).collect());
        assert_eq!(check, g);
    }
}
