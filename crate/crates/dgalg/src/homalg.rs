//! Hom complexes between DG modules, endomorphism DG algebras and module
//! structures over them.
//!
//! A homogeneous degree-q element of Hom(M, N) is a right-linear map whose
//! matrix only connects degree t of M to degree t+q of N. The component is
//! computed as the kernel of the right-linearity constraints
//! f(m * g) = f(m) * g over a generating set of the base algebra, one
//! degree slice at a time. Bases are canonical (rref of the flattened
//! matrices), so coordinates are read off pivot positions without solving.
//!
//! Maps act on the left of right modules and compose as (f o g)(m) =
//! f(g(m)); the differential is D(f) = d_N o f - (-1)^{|f|} f o d_M.

use crate::complexes::{Complex, GradedSpace};
use crate::dga::{DGAlgebra, DGModule, LinComb};
use crate::exactlin::{Mat, RowReducer, Scalar};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("source and target live over different algebras")]
    AlgebraMismatch,
    #[error("summand index {0} out of range")]
    BadIndex(usize),
    #[error("evaluation map is not an isomorphism: {0}")]
    NotIso(String),
}

/// The complex of homogeneous right-linear maps between two DG modules.
pub struct HomComplex {
    source: Arc<DGModule>,
    target: Arc<DGModule>,
    /// Per degree: canonical basis of maps (each a target-dim x source-dim
    /// matrix). Flattened row-major, the stack of flattenings is in rref.
    basis: BTreeMap<i64, Vec<Mat>>,
    complex: Complex,
}

impl HomComplex {
    pub fn source(&self) -> &Arc<DGModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<DGModule> {
        &self.target
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        self.basis
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(&q, v)| (q, v.len()))
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    pub fn basis_maps(&self, q: i64) -> &[Mat] {
        self.basis.get(&q).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// All basis maps ordered by (degree, index in degree), with degrees.
    pub fn flat_basis(&self) -> Vec<(i64, &Mat)> {
        self.basis
            .iter()
            .flat_map(|(&q, maps)| maps.iter().map(move |m| (q, m)))
            .collect()
    }

    /// Coordinates of a homogeneous degree-q map in the canonical basis,
    /// None when the map is not in the span.
    pub fn coords(&self, q: i64, map: &Mat) -> Option<Vec<Scalar>> {
        let maps = self.basis_maps(q);
        let field = self.source.algebra().field();
        let flat = map.flatten();
        let mut residual = flat;
        let mut out = vec![field.zero(); maps.len()];
        for (i, basis_map) in maps.iter().enumerate() {
            let bflat = basis_map.flatten();
            let pivot = bflat
                .iter()
                .position(|c| !c.is_zero())
                .expect("basis maps are nonzero");
            if residual[pivot].is_zero() {
                continue;
            }
            let coef = residual[pivot].clone();
            for (r, b) in residual.iter_mut().zip(&bflat) {
                if !b.is_zero() {
                    *r = &*r - &(&coef * b);
                }
            }
            out[i] = coef;
        }
        if residual.iter().all(Scalar::is_zero) {
            Some(out)
        } else {
            None
        }
    }

    /// The differential applied to a degree-q map.
    pub fn d_of(&self, q: i64, map: &Mat) -> Mat {
        hom_differential(&self.source, &self.target, q, map)
    }
}

pub(crate) fn hom_differential(source: &DGModule, target: &DGModule, q: i64, map: &Mat) -> Mat {
    let first = target.diff().mul(map);
    let second = map.mul(source.diff());
    if q.rem_euclid(2) == 0 {
        first.sub(&second)
    } else {
        first.add(&second)
    }
}

/// Computes Hom(M, N) over the modules' common algebra.
pub fn hom_complex(
    source: &Arc<DGModule>,
    target: &Arc<DGModule>,
) -> Result<HomComplex, HomError> {
    let gens = source.algebra().generating_set();
    hom_complex_with_gens(source, target, &gens)
}

/// As `hom_complex`, with a precomputed generating set of the algebra.
pub fn hom_complex_with_gens(
    source: &Arc<DGModule>,
    target: &Arc<DGModule>,
    gens: &[usize],
) -> Result<HomComplex, HomError> {
    if source.algebra().as_ref() != target.algebra().as_ref() {
        return Err(HomError::AlgebraMismatch);
    }
    let field = source.algebra().field();
    let sdim = source.dim();
    let tdim = target.dim();
    let sdeg = source.degrees();
    let tdeg = target.degrees();

    // degree range of possibly nonzero components
    let (mut lo, mut hi) = (i64::MAX, i64::MIN);
    for &t in tdeg {
        for &s in sdeg {
            lo = lo.min(t - s);
            hi = hi.max(t - s);
        }
    }

    let mut basis: BTreeMap<i64, Vec<Mat>> = BTreeMap::new();
    if sdim == 0 || tdim == 0 {
        lo = 0;
        hi = -1; // empty range
    }
    for q in lo..=hi {
        // unknowns: matrix entries (r, c) with tdeg[r] = sdeg[c] + q,
        // ordered row-major (target-major)
        let mut unknowns: Vec<(usize, usize)> = Vec::new();
        for r in 0..tdim {
            for c in 0..sdim {
                if tdeg[r] == sdeg[c] + q {
                    unknowns.push((r, c));
                }
            }
        }
        if unknowns.is_empty() {
            continue;
        }
        let unknown_index: BTreeMap<(usize, usize), usize> =
            unknowns.iter().copied().enumerate().map(|(i, u)| (u, i)).collect();
        let mut reducer = RowReducer::new(field, unknowns.len());
        // constraints: f(e_c * g) = f(e_c) * g for each generator g and
        // each source basis element e_c, one scalar row per target coord
        for &g in gens {
            let src_act = source.action(g);
            let tgt_act = target.action(g);
            for c in 0..sdim {
                let w = src_act.col_vec(c); // e_c * g in source coords
                let row_degree = sdeg[c] + source.algebra().degrees()[g] + q;
                for r in 0..tdim {
                    if tdeg[r] != row_degree {
                        continue;
                    }
                    let mut row = vec![field.zero(); unknowns.len()];
                    let mut nonzero = false;
                    // + sum_j w_j F[r][j]
                    for (j, wj) in w.iter().enumerate() {
                        if wj.is_zero() {
                            continue;
                        }
                        if let Some(&u) = unknown_index.get(&(r, j)) {
                            row[u] = &row[u] + wj;
                            nonzero = true;
                        }
                    }
                    // - sum_i act[r][i] F[i][c]
                    for i in 0..tdim {
                        let a = tgt_act.at(r, i);
                        if a.is_zero() {
                            continue;
                        }
                        if let Some(&u) = unknown_index.get(&(i, c)) {
                            row[u] = &row[u] - a;
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        reducer.add_row(row);
                    }
                }
            }
        }
        let kernel = if reducer.rank() == 0 {
            Mat::identity(field, unknowns.len())
        } else {
            reducer.basis().kernel_basis()
        };
        let mut maps = Vec::new();
        for krow in 0..kernel.rows() {
            let mut m = Mat::zeros(field, tdim, sdim);
            for (u, &(r, c)) in unknowns.iter().enumerate() {
                let v = kernel.at(krow, u);
                if !v.is_zero() {
                    m.set(r, c, v.clone());
                }
            }
            maps.push(m);
        }
        if !maps.is_empty() {
            basis.insert(q, maps);
        }
    }

    // assemble the underlying complex; differentials expressed in the
    // canonical bases (a failure to land in the span is a bug)
    let dims: BTreeMap<i64, usize> = basis.iter().map(|(&q, v)| (q, v.len())).collect();
    let hom = HomComplex {
        source: Arc::clone(source),
        target: Arc::clone(target),
        basis,
        complex: Complex::zero_differential(field, GradedSpace::from_dims(dims.clone())),
    };
    let mut d_blocks = BTreeMap::new();
    for (&q, maps) in &hom.basis {
        let next = hom.basis_maps(q + 1);
        if next.is_empty() {
            for m in maps {
                let dm = hom_differential(source, target, q, m);
                assert!(dm.is_zero(), "hom differential escapes the computed basis");
            }
            continue;
        }
        let mut block = Mat::zeros(field, next.len(), maps.len());
        for (j, m) in maps.iter().enumerate() {
            let dm = hom_differential(source, target, q, m);
            let coords = hom
                .coords(q + 1, &dm)
                .expect("hom differential must be right-linear");
            for (i, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    block.set(i, j, c.clone());
                }
            }
        }
        d_blocks.insert(q, block);
    }
    let complex = Complex::new(field, GradedSpace::from_dims(dims), d_blocks)
        .expect("hom differential squares to zero");
    Ok(HomComplex { complex, ..hom })
}

/// An endomorphism DG algebra End(M) together with the matrices realizing
/// each basis element as an actual map.
pub struct EndDGA {
    algebra: Arc<DGAlgebra>,
    module: Arc<DGModule>,
    basis_maps: Vec<Mat>,
    degrees: Vec<i64>,
    hom: HomComplex,
}

impl EndDGA {
    pub fn algebra(&self) -> &Arc<DGAlgebra> {
        &self.algebra
    }

    pub fn module(&self) -> &Arc<DGModule> {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.basis_maps.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn basis_map(&self, i: usize) -> &Mat {
        &self.basis_maps[i]
    }

    pub fn hom(&self) -> &HomComplex {
        &self.hom
    }

    /// The matrix of an algebra element acting on M.
    pub fn realize(&self, coords: &[Scalar]) -> Mat {
        let field = self.module.algebra().field();
        let mut m = Mat::zeros(field, self.module.dim(), self.module.dim());
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.basis_maps[i].scale(c));
        }
        m
    }

    /// Coordinates of a homogeneous map in the algebra basis.
    pub fn coords_of_map(&self, q: i64, map: &Mat) -> Option<Vec<Scalar>> {
        let local = self.hom.coords(q, map)?;
        let mut out = vec![self.module.algebra().field().zero(); self.dim()];
        let offset = degree_offset(&self.hom, q);
        for (i, c) in local.iter().enumerate() {
            out[offset + i] = c.clone();
        }
        Some(out)
    }
}

/// Builds End(M) as a DG algebra with multiplication = composition.
/// The Leibniz rule for composition is a theorem; construction asserts it
/// by validating the result.
pub fn end_dga(module: &Arc<DGModule>) -> EndDGA {
    let field = module.algebra().field();
    let hom = hom_complex(module, module).expect("same module");
    let flat = hom.flat_basis();
    let dim = flat.len();
    let degrees: Vec<i64> = flat.iter().map(|(q, _)| *q).collect();
    let basis_maps: Vec<Mat> = flat.iter().map(|(_, m)| (*m).clone()).collect();
    let labels: Vec<String> = (0..dim).map(|i| format!("f{i}")).collect();

    let unit = {
        let id = Mat::identity(field, module.dim());
        let coords = hom.coords(0, &id).expect("identity is right-linear");
        let mut out = vec![field.zero(); dim];
        let offset = degree_offset(&hom, 0);
        for (i, c) in coords.iter().enumerate() {
            out[offset + i] = c.clone();
        }
        out
    };

    let mut mult = vec![vec![LinComb::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let composed = basis_maps[i].mul(&basis_maps[j]);
            if composed.is_zero() {
                continue;
            }
            let q = degrees[i] + degrees[j];
            let local = hom
                .coords(q, &composed)
                .expect("composition of right-linear maps is right-linear");
            let offset = degree_offset(&hom, q);
            mult[i][j] = local
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (offset + k, c.clone()))
                .collect();
        }
    }

    let mut diff = Mat::zeros(field, dim, dim);
    for j in 0..dim {
        let dm = hom.d_of(degrees[j], &basis_maps[j]);
        if dm.is_zero() {
            continue;
        }
        let q = degrees[j] + 1;
        let local = hom.coords(q, &dm).expect("differential stays right-linear");
        let offset = degree_offset(&hom, q);
        for (i, c) in local.iter().enumerate() {
            if !c.is_zero() {
                diff.set(offset + i, j, c.clone());
            }
        }
    }

    let algebra = DGAlgebra::new(field, labels, degrees.clone(), unit, mult, diff);
    let report = algebra.validate();
    assert!(report.is_empty(), "endomorphism algebra failed validation: {}", report[0]);
    EndDGA { algebra: Arc::new(algebra), module: Arc::clone(module), basis_maps, degrees, hom }
}

fn degree_offset(hom: &HomComplex, q: i64) -> usize {
    let mut offset = 0usize;
    for (&deg, maps) in &hom.basis {
        if deg == q {
            return offset;
        }
        offset += maps.len();
    }
    offset
}

/// Hom(M, M_s) as a right DG module over End(M), with action by
/// precomposition.
pub struct PModule {
    pub module: Arc<DGModule>,
    /// Basis element i as an actual map M -> M_s.
    pub maps: Vec<Mat>,
    pub degrees: Vec<i64>,
    hom: HomComplex,
}

impl PModule {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn coords_of_map(&self, q: i64, map: &Mat) -> Option<Vec<Scalar>> {
        let local = self.hom.coords(q, map)?;
        let field = self.module.algebra().field();
        let mut out = vec![field.zero(); self.dim()];
        let offset = degree_offset(&self.hom, q);
        for (i, c) in local.iter().enumerate() {
            out[offset + i] = c.clone();
        }
        Some(out)
    }

    /// Realizes a coefficient vector as an actual map M -> M_s.
    pub fn realize(&self, coords: &[Scalar]) -> Mat {
        let field = self.module.algebra().field();
        let mut m = Mat::zeros(field, self.maps[0].rows(), self.maps[0].cols());
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.maps[i].scale(c));
        }
        m
    }
}

/// Builds P_s = Hom(M, targets[s]) over E = End(M), with right action by
/// precomposition.
pub fn module_over_end(
    end: &EndDGA,
    summand_targets: &[Arc<DGModule>],
    summand: usize,
) -> Result<PModule, HomError> {
    let m_s = summand_targets.get(summand).ok_or(HomError::BadIndex(summand))?;
    let field = end.module().algebra().field();
    let hom = hom_complex(end.module(), m_s)?;
    let flat = hom.flat_basis();
    let dim = flat.len();
    let degrees: Vec<i64> = flat.iter().map(|(q, _)| *q).collect();
    let maps: Vec<Mat> = flat.iter().map(|(_, m)| (*m).clone()).collect();
    let labels: Vec<String> = (0..dim).map(|i| format!("p{i}")).collect();

    // right action of E by precomposition: p * e = p o e
    let mut action = Vec::with_capacity(end.dim());
    for e in 0..end.dim() {
        let emat = end.basis_map(e);
        let edeg = end.degrees[e];
        let mut act = Mat::zeros(field, dim, dim);
        for (j, p) in maps.iter().enumerate() {
            let composed = p.mul(emat);
            if composed.is_zero() {
                continue;
            }
            let q = degrees[j] + edeg;
            let local = hom.coords(q, &composed).expect("precomposition stays linear");
            let offset = degree_offset(&hom, q);
            for (i, c) in local.iter().enumerate() {
                if !c.is_zero() {
                    act.set(offset + i, j, c.clone());
                }
            }
        }
        action.push(act);
    }

    let mut diff = Mat::zeros(field, dim, dim);
    for j in 0..dim {
        let dm = hom.d_of(degrees[j], &maps[j]);
        if dm.is_zero() {
            continue;
        }
        let q = degrees[j] + 1;
        let local = hom.coords(q, &dm).expect("differential stays right-linear");
        let offset = degree_offset(&hom, q);
        for (i, c) in local.iter().enumerate() {
            if !c.is_zero() {
                diff.set(offset + i, j, c.clone());
            }
        }
    }

    let module = DGModule::new(Arc::clone(end.algebra()), labels, degrees.clone(), action, diff);
    let report = module.validate();
    assert!(report.is_empty(), "module over End(M) failed validation: {}", report[0]);
    Ok(PModule { module: Arc::new(module), maps, degrees, hom })
}

/// Verifies right-linearity of every basis map against every algebra basis
/// element (not just the generators used during the solve).
pub fn verify_right_linearity(hom: &HomComplex) -> bool {
    let alg = hom.source.algebra();
    for maps in hom.basis.values() {
        for f in maps {
            for a in 0..alg.dim() {
                let lhs = f.mul(hom.source.action(a));
                let rhs = hom.target.action(a).mul(f);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Composition Leibniz: D(f o g) = D(f) o g + (-1)^{|f|} f o D(g) for all
/// basis pairs of End(M).
pub fn verify_composition_leibniz(end: &EndDGA) -> bool {
    let module = end.module();
    for i in 0..end.dim() {
        for j in 0..end.dim() {
            let f = end.basis_map(i);
            let g = end.basis_map(j);
            let (qf, qg) = (end.degrees[i], end.degrees[j]);
            let lhs = hom_differential(module, module, qf + qg, &f.mul(g));
            let df = hom_differential(module, module, qf, f);
            let dg = hom_differential(module, module, qg, g);
            let second = f.mul(&dg);
            let rhs = if qf.rem_euclid(2) == 0 {
                df.mul(g).add(&second)
            } else {
                df.mul(g).sub(&second)
            };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::truncated_polynomial_algebra;
    use crate::dga::quotient_module;
    use crate::dga::jacobson_radical;
    use crate::exactlin::{FieldSpec, Subspace};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// R = k[x]/x^2 with deg x = 1 and the modules k = R/J and R.
    fn dual_number_modules() -> (Arc<DGAlgebra>, Arc<DGModule>, Arc<DGModule>) {
        let alg = Arc::new(truncated_polynomial_algebra(2, q()));
        let r = Arc::new(DGModule::regular(&alg));
        let j = jacobson_radical(&alg).unwrap();
        let (k_mod, _) = quotient_module(&r, j.subspace());
        (alg, r, Arc::new(k_mod))
    }

    #[test]
    fn hom_from_regular_module_is_the_target() {
        // Hom(R, N) has the graded dimensions of N, via f -> f(1)
        let (_, r, k_mod) = dual_number_modules();
        for target in [&r, &k_mod] {
            let hom = hom_complex(&r, target).unwrap();
            let mut target_dims: BTreeMap<i64, usize> = BTreeMap::new();
            for &d in target.degrees() {
                *target_dims.entry(d).or_insert(0) += 1;
            }
            assert_eq!(hom.graded_dims(), target_dims);
        }
    }

    #[test]
    fn hom_from_simple_to_regular_is_the_socle() {
        // Hom(R/J, R) over k[x]/x^2 is one-dimensional in degree 1
        let (_, r, k_mod) = dual_number_modules();
        let hom = hom_complex(&k_mod, &r).unwrap();
        let dims = hom.graded_dims();
        assert_eq!(dims.len(), 1);
        assert_eq!(dims.get(&1), Some(&1));
        assert!(verify_right_linearity(&hom));
    }

    #[test]
    fn end_of_k_plus_r_has_expected_graded_dims() {
        let (_, r, k_mod) = dual_number_modules();
        let (m, _) = DGModule::direct_sum(&[&k_mod, &r]);
        let m = Arc::new(m);
        let end = end_dga(&m);
        let by_degree = end.algebra().degree_indices();
        assert_eq!(by_degree[&0].len(), 3);
        assert_eq!(by_degree[&1].len(), 2);
        assert_eq!(end.dim(), 5);
        assert!(verify_composition_leibniz(&end));
    }

    #[test]
    fn end_of_regular_module_is_the_algebra() {
        // End(R) = R via left multiplications, same multiplication order
        let (alg, r, _) = dual_number_modules();
        let end = end_dga(&r);
        assert_eq!(end.dim(), alg.dim());
        // evaluation f -> f(1) takes composition to multiplication
        let unit_vec = alg.unit().to_vec();
        for i in 0..end.dim() {
            for j in 0..end.dim() {
                let fi = end.basis_map(i);
                let fj = end.basis_map(j);
                let lhs = fi.mul(fj).apply(&unit_vec);
                let rhs = alg.mult_vec(&fi.apply(&unit_vec), &fj.apply(&unit_vec));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn p_modules_sum_to_end() {
        let (_, r, k_mod) = dual_number_modules();
        let (m, _) = DGModule::direct_sum(&[&k_mod, &r]);
        let m = Arc::new(m);
        let end = end_dga(&m);
        let targets = vec![Arc::clone(&k_mod), Arc::clone(&r)];
        let p1 = module_over_end(&end, &targets, 0).unwrap();
        let p2 = module_over_end(&end, &targets, 1).unwrap();
        assert_eq!(p1.dim() + p2.dim(), end.dim());
        assert!(matches!(module_over_end(&end, &targets, 2), Err(HomError::BadIndex(2))));
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let (_, r, _) = dual_number_modules();
        let other_alg = Arc::new(truncated_polynomial_algebra(3, q()));
        let other = Arc::new(DGModule::regular(&other_alg));
        assert!(matches!(hom_complex(&r, &other), Err(HomError::AlgebraMismatch)));
    }

    #[test]
    fn zero_module_hom() {
        let (_, r, _) = dual_number_modules();
        let zero = Arc::new(quotient_module(&r, &Subspace::full(q(), 2)).0);
        assert_eq!(zero.dim(), 0);
        let hom = hom_complex(&r, &zero).unwrap();
        assert_eq!(hom.total_dim(), 0);
    }
}
