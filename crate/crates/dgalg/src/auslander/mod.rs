//! The endomorphism-algebra construction: from a finite-dimensional DG
//! algebra R build the chain of internal DG ideals J_p = (J^p)_-, the
//! quotient modules M_p = R/J_p, the endomorphism DG algebra
//! E = End(M_1 (+) ... (+) M_n), the projective modules P_s = Hom(M, M_s)
//! over E, the connecting maps phi and the twisted two-term modules K_i,
//! together with machine verification of their semi-orthogonality,
//! semisimplicity and generation properties.

mod shifted;
mod verify;

pub use shifted::{
    end_of_shifted_sum, gram_matrix, quiver_comparison, QuiverMatch, QuiverPresentationKind,
    ShiftedSum,
};
pub use verify::{
    cohomology_algebra, homall_dims_match, semisimple_pipeline, verify_generation,
    verify_semisimple_h, verify_triangular, GenerationReport, PipelineReport,
    SemisimpleCertificate, TriangularReport,
};

use crate::dga::{
    homogeneous_degree, ideal_power, internal_dg_ideal, jacobson_radical, nilpotency_index,
    quotient_module, DGAlgebra, DGIdeal, DGModule, RadicalError,
};
use crate::exactlin::{quotient_map, Mat, Scalar};
use crate::homalg::{end_dga, hom_complex_with_gens, module_over_end, EndDGA, HomComplex, PModule};
use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuslanderError {
    #[error("input DG algebra is acyclic; the construction requires nonzero cohomology")]
    AcyclicInput,
    #[error("input DG algebra fails validation: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Radical(#[from] RadicalError),
}

/// The full output bundle of the construction.
pub struct AuslanderData {
    pub algebra: Arc<DGAlgebra>,
    /// Index of nilpotency of the radical; number of modules in the chain.
    pub nilpotency: usize,
    /// J_p = (J^p)_- for p = 1..n, a decreasing chain with J_n = 0.
    pub j_chain: Vec<DGIdeal>,
    /// M_p = R / J_p as right DG modules over R.
    pub m_modules: Vec<Arc<DGModule>>,
    /// Projections R -> M_p and sections M_p -> R in coordinates.
    pub m_projections: Vec<Mat>,
    pub m_sections: Vec<Mat>,
    /// M = (+) M_p with its summand layout.
    pub big_m: Arc<DGModule>,
    pub summands: Vec<Range<usize>>,
    /// E = End(M) with realized basis maps.
    pub end: EndDGA,
    /// A generating set of E, reused by every Hom computation over E.
    pub e_generators: Vec<usize>,
    /// P_s = Hom(M, M_s) as right DG E-modules, s = 1..n (0-indexed).
    pub p_modules: Vec<PModule>,
    /// Coordinates of the canonical projections pr_s in P_s.
    pub pr_coords: Vec<Vec<Scalar>>,
    /// units_in_m[s]: the class of 1 in M_{s+1}, embedded in M.
    pub units_in_m: Vec<Vec<Scalar>>,
    /// phi[i-2]: the connecting map P_i -> P_{i-1} for i = 2..n.
    pub phi: Vec<Mat>,
    /// K_1 = P_1 and K_i = P_{i-1}[-1] (+) P_i with the twisted
    /// differential [[-d, -phi], [0, d]].
    pub k_modules: Vec<Arc<DGModule>>,
    /// Block layout of K_i: (first summand range, second summand range);
    /// K_1 has an empty first range.
    pub k_blocks: Vec<(Range<usize>, Range<usize>)>,
    /// Hom_E(K_i, K_j) for every ordered pair (1-based keys).
    pub k_homs: BTreeMap<(usize, usize), HomComplex>,
}

impl AuslanderData {
    pub fn k_hom(&self, i: usize, j: usize) -> &HomComplex {
        &self.k_homs[&(i, j)]
    }

    /// Evaluation of an E-linear map F: P_i -> P_j at the canonical data:
    /// F(pr_i) factors through the i-th summand, so evaluating the realized
    /// map at the class of 1 in M_i lands in M_j coordinates and determines
    /// F completely.
    pub fn evaluate_p_map(&self, i: usize, j: usize, map: &Mat) -> Vec<Scalar> {
        let image = map.apply(&self.pr_coords[i - 1]);
        let realized = self.p_modules[j - 1].realize(&image);
        realized.apply(&self.units_in_m[i - 1])
    }
}

/// Runs the construction, re-verifying every intermediate invariant.
pub fn auslander_data(algebra: &Arc<DGAlgebra>) -> Result<AuslanderData, AuslanderError> {
    let report = algebra.validate();
    if !report.is_empty() {
        return Err(AuslanderError::InvalidInput(report[0].to_string()));
    }
    if algebra.is_acyclic() {
        return Err(AuslanderError::AcyclicInput);
    }

    let radical = jacobson_radical(algebra)?;
    let n = nilpotency_index(algebra, &radical)?;

    let mut j_chain = Vec::with_capacity(n);
    for p in 1..=n {
        let power = ideal_power(algebra, &radical, p);
        j_chain.push(internal_dg_ideal(algebra, &power));
    }
    assert!(j_chain[n - 1].is_zero(), "J_n must vanish at the nilpotency index");
    for w in j_chain.windows(2) {
        assert!(
            w[0].subspace().contains(w[1].subspace()).expect("same ambient"),
            "internal ideal chain must be decreasing"
        );
    }

    let regular = Arc::new(DGModule::regular(algebra));
    let mut m_modules = Vec::with_capacity(n);
    let mut m_projections = Vec::with_capacity(n);
    let mut m_sections = Vec::with_capacity(n);
    for ideal in &j_chain {
        let (module, proj) = quotient_module(&regular, ideal.subspace());
        let violations = module.validate();
        assert!(violations.is_empty(), "M_p failed validation: {}", violations[0]);
        let (_, sect) = quotient_map(algebra.dim(), ideal.subspace());
        m_modules.push(Arc::new(module));
        m_projections.push(proj);
        m_sections.push(sect);
    }

    let parts: Vec<&DGModule> = m_modules.iter().map(|m| m.as_ref()).collect();
    let (big_m, summands) = DGModule::direct_sum(&parts);
    let big_m = Arc::new(big_m);
    let end = end_dga(&big_m);
    let e_generators = end.algebra().generating_set();

    let mut p_modules = Vec::with_capacity(n);
    for s in 0..n {
        let p = module_over_end(&end, &m_modules, s).expect("summand index in range");
        p_modules.push(p);
    }

    // canonical projections pr_s: M -> M_s as degree-zero elements of P_s
    let mut pr_coords = Vec::with_capacity(n);
    for s in 0..n {
        let range = &summands[s];
        let mut pr = Mat::zeros(algebra.field(), m_modules[s].dim(), big_m.dim());
        for (row, col) in range.clone().enumerate() {
            pr.set(row, col, algebra.field().one());
        }
        let coords = p_modules[s]
            .coords_of_map(0, &pr)
            .expect("summand projection is right-linear of degree 0");
        pr_coords.push(coords);
    }

    // the class of 1 in each summand M_s, embedded in M
    let mut units_in_m = Vec::with_capacity(n);
    for s in 0..n {
        let mut v = vec![algebra.field().zero(); big_m.dim()];
        let class = m_projections[s].apply(algebra.unit());
        for (offset, c) in class.iter().enumerate() {
            v[summands[s].start + offset] = c.clone();
        }
        units_in_m.push(v);
    }

    // connecting maps phi_{i, i-1}: P_i -> P_{i-1} induced by the quotient
    // M_i -> M_{i-1}
    let mut phi = Vec::with_capacity(n.saturating_sub(1));
    for i in 2..=n {
        let q_mat = m_projections[i - 2].mul(&m_sections[i - 1]); // M_i -> M_{i-1}
        let p_i = &p_modules[i - 1];
        let p_prev = &p_modules[i - 2];
        let mut block = Mat::zeros(algebra.field(), p_prev.dim(), p_i.dim());
        for j in 0..p_i.dim() {
            let composed = q_mat.mul(&p_i.maps[j]);
            let coords = p_prev
                .coords_of_map(p_i.degrees[j], &composed)
                .expect("postcomposition with the quotient map stays E-linear");
            for (r, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    block.set(r, j, c.clone());
                }
            }
        }
        // phi must be a degree-0 chain map of right E-modules
        assert_eq!(
            block.mul(p_i.module.diff()),
            p_prev.module.diff().mul(&block),
            "phi must commute with the differentials"
        );
        for e in 0..end.dim() {
            assert_eq!(
                block.mul(p_i.module.action(e)),
                p_prev.module.action(e).mul(&block),
                "phi must be E-linear"
            );
        }
        phi.push(block);
    }

    // K_1 = P_1; K_i = P_{i-1}[-1] (+) P_i with differential
    // [[-d_{P_{i-1}}, -phi], [0, d_{P_i}]]
    let mut k_modules: Vec<Arc<DGModule>> = Vec::with_capacity(n);
    let mut k_blocks = Vec::with_capacity(n);
    k_modules.push(Arc::clone(&p_modules[0].module));
    k_blocks.push((0..0, 0..p_modules[0].dim()));
    for i in 2..=n {
        let prev = &p_modules[i - 2];
        let cur = &p_modules[i - 1];
        let (dp, dc) = (prev.dim(), cur.dim());
        let dim = dp + dc;
        let field = algebra.field();
        let mut labels: Vec<String> =
            prev.module.labels().iter().map(|l| format!("u.{l}")).collect();
        labels.extend(cur.module.labels().iter().map(|l| format!("v.{l}")));
        // first block carries the [-1] shift: degrees go up by one
        let mut degrees: Vec<i64> = prev.module.degrees().iter().map(|&d| d + 1).collect();
        degrees.extend_from_slice(cur.module.degrees());
        let mut action = Vec::with_capacity(end.dim());
        for e in 0..end.dim() {
            let mut m = Mat::zeros(field, dim, dim);
            let a = prev.module.action(e);
            for r in 0..dp {
                for c in 0..dp {
                    if !a.at(r, c).is_zero() {
                        m.set(r, c, a.at(r, c).clone());
                    }
                }
            }
            let b = cur.module.action(e);
            for r in 0..dc {
                for c in 0..dc {
                    if !b.at(r, c).is_zero() {
                        m.set(dp + r, dp + c, b.at(r, c).clone());
                    }
                }
            }
            action.push(m);
        }
        let mut diff = Mat::zeros(field, dim, dim);
        let dprev = prev.module.diff();
        for r in 0..dp {
            for c in 0..dp {
                if !dprev.at(r, c).is_zero() {
                    diff.set(r, c, -dprev.at(r, c));
                }
            }
        }
        let ph = &phi[i - 2];
        for r in 0..dp {
            for c in 0..dc {
                if !ph.at(r, c).is_zero() {
                    diff.set(r, dp + c, -ph.at(r, c));
                }
            }
        }
        let dcur = cur.module.diff();
        for r in 0..dc {
            for c in 0..dc {
                if !dcur.at(r, c).is_zero() {
                    diff.set(dp + r, dp + c, dcur.at(r, c).clone());
                }
            }
        }
        let k = DGModule::new(Arc::clone(end.algebra()), labels, degrees, action, diff);
        let violations = k.validate();
        assert!(violations.is_empty(), "K_{i} failed validation: {}", violations[0]);
        k_modules.push(Arc::new(k));
        k_blocks.push((0..dp, dp..dim));
    }

    // Hom_E(K_i, K_j) for all ordered pairs
    let mut k_homs = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            let hom = hom_complex_with_gens(&k_modules[i - 1], &k_modules[j - 1], &e_generators)
                .expect("K modules share the algebra E");
            k_homs.insert((i, j), hom);
        }
    }

    Ok(AuslanderData {
        algebra: Arc::clone(algebra),
        nilpotency: n,
        j_chain,
        m_modules,
        m_projections,
        m_sections,
        big_m,
        summands,
        end,
        e_generators,
        p_modules,
        pr_coords,
        units_in_m,
        phi,
        k_modules,
        k_blocks,
        k_homs,
    })
}

/// Outcome of comparing Hom_E(P_i, P_j) with R/J_j via evaluation.
pub struct QuotientComparison {
    /// Graded dimensions of Hom_E(P_i, P_j).
    pub hom_dims: BTreeMap<i64, usize>,
    /// Graded dimensions of R/J_j.
    pub quotient_dims: BTreeMap<i64, usize>,
    /// The evaluation matrix per degree, verified bijective.
    pub evaluation: BTreeMap<i64, Mat>,
    /// True when i = j = n and the evaluation was additionally verified to
    /// be an algebra isomorphism onto R.
    pub multiplicative: bool,
}

/// Builds the evaluation map Hom_E(P_i, P_j) -> R/J_j (for i >= j) and
/// verifies it is an isomorphism of complexes; for i = j = n the map is
/// also verified to be an isomorphism of DG algebras onto R.
pub fn compare_hom_with_quotient(
    data: &AuslanderData,
    i: usize,
    j: usize,
) -> Result<QuotientComparison, crate::homalg::HomError> {
    use crate::homalg::HomError;
    assert!(i >= j && j >= 1 && i <= data.nilpotency, "requires n >= i >= j >= 1");
    let field = data.algebra.field();
    let hom = hom_complex_with_gens(
        &data.p_modules[i - 1].module,
        &data.p_modules[j - 1].module,
        &data.e_generators,
    )?;
    let m_j = &data.m_modules[j - 1];
    let mj_by_degree = m_j.degree_indices();
    let hom_dims = hom.graded_dims();
    let mut quotient_dims = BTreeMap::new();
    for (&q, idx) in &mj_by_degree {
        quotient_dims.insert(q, idx.len());
    }
    if hom_dims != quotient_dims {
        return Err(HomError::NotIso(format!(
            "graded dimensions differ: hom {hom_dims:?} vs quotient {quotient_dims:?}"
        )));
    }

    // evaluation per degree, in M_j's degree-local coordinates
    let mut evaluation = BTreeMap::new();
    for &q in hom_dims.keys() {
        let maps = hom.basis_maps(q);
        let rows = mj_by_degree.get(&q).cloned().unwrap_or_default();
        let mut block = Mat::zeros(field, rows.len(), maps.len());
        for (col, map) in maps.iter().enumerate() {
            let v = data.evaluate_p_map(i, j, map);
            debug_assert_eq!(
                homogeneous_degree(m_j.degrees(), &v).unwrap_or(q),
                q,
                "evaluation must preserve degree"
            );
            for (r, &idx) in rows.iter().enumerate() {
                if !v[idx].is_zero() {
                    block.set(r, col, v[idx].clone());
                }
            }
        }
        if block.rows() != block.cols() || (block.rows() > 0 && block.inverse().is_none()) {
            return Err(HomError::NotIso(format!("evaluation fails to invert in degree {q}")));
        }
        evaluation.insert(q, block);
    }

    // chain map property: ev(D f) = d(ev f) for every basis map
    for (&q, maps) in hom_dims.keys().map(|q| (q, hom.basis_maps(*q))) {
        for map in maps {
            let df = hom.d_of(q, map);
            let lhs = if df.is_zero() {
                vec![field.zero(); m_j.dim()]
            } else {
                data.evaluate_p_map(i, j, &df)
            };
            let rhs = m_j.diff().apply(&data.evaluate_p_map(i, j, map));
            if lhs != rhs {
                return Err(HomError::NotIso(format!(
                    "evaluation does not commute with differentials in degree {q}"
                )));
            }
        }
    }

    // nailing the algebra case: End_E(P_n) = R via the same evaluation
    let mut multiplicative = false;
    if i == data.nilpotency && j == data.nilpotency {
        let flat = hom.flat_basis();
        for (qa, fa) in &flat {
            for (qb, fb) in &flat {
                let _ = (qa, qb);
                let composed = fa.mul(fb);
                let lhs = if composed.is_zero() {
                    vec![field.zero(); m_j.dim()]
                } else {
                    data.evaluate_p_map(i, j, &composed)
                };
                let rhs = data.algebra.mult_vec(
                    &data.evaluate_p_map(i, j, fa),
                    &data.evaluate_p_map(i, j, fb),
                );
                if lhs != rhs {
                    return Err(HomError::NotIso(
                        "evaluation is not multiplicative on End(P_n)".into(),
                    ));
                }
            }
        }
        // unit goes to unit
        let id = Mat::identity(field, data.p_modules[i - 1].dim());
        let unit_image = data.evaluate_p_map(i, j, &id);
        if unit_image != data.algebra.unit() {
            return Err(HomError::NotIso("evaluation does not preserve the unit".into()));
        }
        multiplicative = true;
    }

    Ok(QuotientComparison { hom_dims, quotient_dims, evaluation, multiplicative })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{exterior_algebra, truncated_polynomial_algebra};
    use crate::exactlin::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn base_field_is_trivial_case() {
        let alg = Arc::new(truncated_polynomial_algebra(1, q()));
        let data = auslander_data(&alg).unwrap();
        assert_eq!(data.nilpotency, 1);
        assert_eq!(data.end.dim(), 1);
        assert_eq!(data.k_modules.len(), 1);
        assert_eq!(data.k_modules[0].dim(), 1);
    }

    #[test]
    fn dual_numbers_bundle_dimensions() {
        // R = k[x]/x^2 with deg x = 1: n = 2, dim M = 3, dim E = 5 with
        // graded dimensions {0: 3, 1: 2}
        let alg = Arc::new(truncated_polynomial_algebra(2, q()));
        let data = auslander_data(&alg).unwrap();
        assert_eq!(data.nilpotency, 2);
        assert_eq!(data.big_m.dim(), 3);
        assert_eq!(data.end.dim(), 5);
        let by_degree = data.end.algebra().degree_indices();
        assert_eq!(by_degree[&0].len(), 3);
        assert_eq!(by_degree[&1].len(), 2);
    }

    #[test]
    fn exterior_two_bundle_dimensions() {
        let alg = Arc::new(exterior_algebra(2, q()));
        let data = auslander_data(&alg).unwrap();
        assert_eq!(data.nilpotency, 3);
        let dims: Vec<usize> = data.m_modules.iter().map(|m| m.dim()).collect();
        assert_eq!(dims, vec![1, 3, 4]);
    }

    #[test]
    fn acyclic_input_rejected() {
        let alg = Arc::new(crate::dga::test_fixtures::contractible_dual_numbers());
        assert!(matches!(auslander_data(&alg), Err(AuslanderError::AcyclicInput)));
    }

    #[test]
    fn quotient_comparison_small() {
        let alg = Arc::new(truncated_polynomial_algebra(2, q()));
        let data = auslander_data(&alg).unwrap();
        for i in 1..=2usize {
            for j in 1..=i {
                let cmp = compare_hom_with_quotient(&data, i, j).unwrap();
                assert_eq!(cmp.hom_dims, cmp.quotient_dims);
                if i == 2 && j == 2 {
                    assert!(cmp.multiplicative);
                }
            }
        }
    }
}
