//! Finite-dimensional DG algebras, DG modules and DG ideals.
//!
//! A DG algebra is stored as a graded basis with sparse structure constants
//! and a single flat differential matrix of degree +1. Validation checks
//! every axiom on basis elements and reports violations with witnesses.

mod glue;
mod idempotent;
mod quotient;
mod radical;

pub use glue::{glue, Bimodule, GlueError, Glued, GluingSpec};
pub use idempotent::{lift_idempotent, LiftError};
pub use quotient::{
    quotient_dga, quotient_module, semisimple_parts, subquotient_complex, QuotientError,
    SemisimpleParts,
};
pub use radical::{
    external_dg_ideal, ideal_power, internal_dg_ideal, jacobson_radical, nilpotency_index,
    RadicalError,
};

use crate::complexes::{Complex, GradedSpace};
use crate::exactlin::{FieldSpec, Mat, RowReducer, Scalar, Subspace};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Sparse coefficient vector over the algebra basis.
pub type LinComb = Vec<(usize, Scalar)>;

pub fn dense_from_sparse(field: FieldSpec, dim: usize, sparse: &LinComb) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    for (i, c) in sparse {
        v[*i] = &v[*i] + c;
    }
    v
}

pub fn sparse_from_dense(dense: &[Scalar]) -> LinComb {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// One violated axiom with a witness, produced by validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Grading { left: String, right: String },
    Assoc { a: String, b: String, c: String },
    Unit { witness: String },
    DDegree { witness: String },
    DSquared { witness: String },
    Leibniz { left: String, right: String },
    DUnit,
}

impl AxiomViolation {
    pub fn code(&self) -> &'static str {
        match self {
            AxiomViolation::Grading { .. } => "GRADING",
            AxiomViolation::Assoc { .. } => "ASSOC",
            AxiomViolation::Unit { .. } => "UNIT",
            AxiomViolation::DDegree { .. } => "D_DEGREE",
            AxiomViolation::DSquared { .. } => "D_SQUARED",
            AxiomViolation::Leibniz { .. } => "LEIBNIZ",
            AxiomViolation::DUnit => "D_UNIT",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Grading { left, right } => {
                write!(f, "GRADING: product {left} * {right} is not homogeneous of the right degree")
            }
            AxiomViolation::Assoc { a, b, c } => {
                write!(f, "ASSOC: ({a} * {b}) * {c} != {a} * ({b} * {c})")
            }
            AxiomViolation::Unit { witness } => write!(f, "UNIT: fails on {witness}"),
            AxiomViolation::DDegree { witness } => {
                write!(f, "D_DEGREE: d({witness}) is not homogeneous of degree +1")
            }
            AxiomViolation::DSquared { witness } => write!(f, "D_SQUARED: d(d({witness})) != 0"),
            AxiomViolation::Leibniz { left, right } => {
                write!(f, "LEIBNIZ: fails on ({left}, {right})")
            }
            AxiomViolation::DUnit => write!(f, "D_UNIT: d(1) != 0"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DgaError {
    #[error("algebra axioms violated: {0:?}")]
    Invalid(Vec<String>),
}

/// A finite-dimensional DG algebra over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    degrees: Vec<i64>,
    unit: Vec<Scalar>,
    mult: Vec<Vec<LinComb>>,
    diff: Mat,
}

impl DGAlgebra {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        degrees: Vec<i64>,
        unit: Vec<Scalar>,
        mult: Vec<Vec<LinComb>>,
        diff: Mat,
    ) -> DGAlgebra {
        let dim = labels.len();
        assert_eq!(degrees.len(), dim);
        assert_eq!(unit.len(), dim);
        assert_eq!(mult.len(), dim);
        for row in &mult {
            assert_eq!(row.len(), dim);
        }
        assert_eq!((diff.rows(), diff.cols()), (dim, dim));
        DGAlgebra { field, labels, degrees, unit, mult, diff }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn diff(&self) -> &Mat {
        &self.diff
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &LinComb {
        &self.mult[i][j]
    }

    #[cfg(test)]
    pub(crate) fn mult_mut(&mut self) -> &mut Vec<Vec<LinComb>> {
        &mut self.mult
    }

    /// Product of two coefficient vectors.
    pub fn mult_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coef = xi * yj;
                for (k, c) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(&coef * c);
                }
            }
        }
        out
    }

    pub fn d_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.diff.apply(x)
    }

    /// Matrix of left multiplication by the coefficient vector `x`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Mat {
        let dim = self.dim();
        let mut m = Mat::zeros(self.field, dim, dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..dim {
                for (k, c) in &self.mult[i][j] {
                    let v = m.at(*k, j) + &(xi * c);
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by the coefficient vector `x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Mat {
        let dim = self.dim();
        let mut m = Mat::zeros(self.field, dim, dim);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for i in 0..dim {
                for (k, c) in &self.mult[i][j] {
                    let v = m.at(*k, i) + &(xj * c);
                    m.set(*k, i, v);
                }
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Flat indices grouped by degree, ascending.
    pub fn degree_indices(&self) -> BTreeMap<i64, Vec<usize>> {
        degree_index_map(&self.degrees)
    }

    /// The degree of a homogeneous vector, None for zero or mixed vectors.
    pub fn degree_of(&self, v: &[Scalar]) -> Option<i64> {
        homogeneous_degree(&self.degrees, v)
    }

    /// Underlying cochain complex (basis grouped by degree, ascending).
    pub fn complex(&self) -> Complex {
        complex_of(self.field, &self.degrees, &self.diff)
    }

    pub fn is_acyclic(&self) -> bool {
        self.complex().is_acyclic()
    }

    /// Validates every DG algebra axiom on basis elements; empty iff valid.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let dim = self.dim();
        // grading of products
        for i in 0..dim {
            for j in 0..dim {
                let want = self.degrees[i] + self.degrees[j];
                for (k, c) in &self.mult[i][j] {
                    if !c.is_zero() && self.degrees[*k] != want {
                        out.push(AxiomViolation::Grading {
                            left: self.labels[i].clone(),
                            right: self.labels[j].clone(),
                        });
                        break;
                    }
                }
            }
        }
        // unit is degree 0 and acts as identity on both sides; the
        // zero-dimensional algebra (1 = 0) is allowed
        if dim > 0 {
            match homogeneous_degree(&self.degrees, &self.unit) {
                Some(0) => {}
                _ => out.push(AxiomViolation::Unit {
                    witness: "1 (zero or not concentrated in degree 0)".into(),
                }),
            }
        }
        for i in 0..dim {
            let b = self.basis_vector(i);
            if self.mult_vec(&self.unit, &b) != b || self.mult_vec(&b, &self.unit) != b {
                out.push(AxiomViolation::Unit { witness: self.labels[i].clone() });
            }
        }
        // associativity on basis triples
        'assoc: for a in 0..dim {
            for b in 0..dim {
                let ab = dense_from_sparse(self.field, dim, &self.mult[a][b]);
                for c in 0..dim {
                    let bc = dense_from_sparse(self.field, dim, &self.mult[b][c]);
                    let lhs = self.mult_vec(&ab, &self.basis_vector(c));
                    let rhs = self.mult_vec(&self.basis_vector(a), &bc);
                    if lhs != rhs {
                        out.push(AxiomViolation::Assoc {
                            a: self.labels[a].clone(),
                            b: self.labels[b].clone(),
                            c: self.labels[c].clone(),
                        });
                        if out.len() > 16 {
                            break 'assoc;
                        }
                    }
                }
            }
        }
        // differential degree, square, unit, Leibniz
        for i in 0..dim {
            let di = self.diff.col_vec(i);
            match homogeneous_degree(&self.degrees, &di) {
                None => {}
                Some(deg) if deg == self.degrees[i] + 1 => {}
                Some(_) => out.push(AxiomViolation::DDegree { witness: self.labels[i].clone() }),
            }
            if self.d_vec(&di).iter().any(|c| !c.is_zero()) {
                out.push(AxiomViolation::DSquared { witness: self.labels[i].clone() });
            }
        }
        if self.d_vec(&self.unit).iter().any(|c| !c.is_zero()) {
            out.push(AxiomViolation::DUnit);
        }
        for i in 0..dim {
            for j in 0..dim {
                let prod = dense_from_sparse(self.field, dim, &self.mult[i][j]);
                let lhs = self.d_vec(&prod);
                let di = self.diff.col_vec(i);
                let dj = self.diff.col_vec(j);
                let mut rhs = self.mult_vec(&di, &self.basis_vector(j));
                let sign = if self.degrees[i].rem_euclid(2) == 0 { 1 } else { -1 };
                let term = self.mult_vec(&self.basis_vector(i), &dj);
                for (r, t) in rhs.iter_mut().zip(&term) {
                    *r = if sign == 1 { &*r + t } else { &*r - t };
                }
                if lhs != rhs {
                    out.push(AxiomViolation::Leibniz {
                        left: self.labels[i].clone(),
                        right: self.labels[j].clone(),
                    });
                }
            }
        }
        out
    }

    /// A small unital generating set, found greedily in basis order.
    /// Right-linearity constraints over these generators suffice for Hom
    /// computations.
    pub fn generating_set(&self) -> Vec<usize> {
        let dim = self.dim();
        let mut red = RowReducer::new(self.field, dim);
        red.add_row(self.unit.clone());
        let mut reps: Vec<Vec<Scalar>> = vec![self.unit.clone()];
        let mut gens = Vec::new();
        for i in 0..dim {
            if red.rank() == dim {
                break;
            }
            let e = self.basis_vector(i);
            if red.contains(&e) {
                continue;
            }
            gens.push(i);
            red.add_row(e.clone());
            let mut frontier = vec![e];
            while let Some(x) = frontier.pop() {
                reps.push(x.clone());
                let mut new_elems = Vec::new();
                for y in &reps {
                    for p in [self.mult_vec(&x, y), self.mult_vec(y, &x)] {
                        if !red.contains(&p) {
                            red.add_row(p.clone());
                            new_elems.push(p);
                        }
                    }
                }
                frontier.extend(new_elems);
            }
        }
        gens
    }

    /// Direct product of two algebras over the same field.
    pub fn direct_product(a: &DGAlgebra, b: &DGAlgebra) -> DGAlgebra {
        assert_eq!(a.field, b.field);
        let field = a.field;
        let dim = a.dim() + b.dim();
        let mut labels: Vec<String> = a.labels.iter().map(|l| format!("l.{l}")).collect();
        labels.extend(b.labels.iter().map(|l| format!("r.{l}")));
        let mut degrees = a.degrees.clone();
        degrees.extend_from_slice(&b.degrees);
        let mut unit = a.unit.clone();
        unit.extend_from_slice(&b.unit);
        let mut mult = vec![vec![LinComb::new(); dim]; dim];
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                mult[i][j] = a.mult[i][j].clone();
            }
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                mult[a.dim() + i][a.dim() + j] =
                    b.mult[i][j].iter().map(|(k, c)| (a.dim() + k, c.clone())).collect();
            }
        }
        let mut diff = Mat::zeros(field, dim, dim);
        for r in 0..a.dim() {
            for c in 0..a.dim() {
                diff.set(r, c, a.diff.at(r, c).clone());
            }
        }
        for r in 0..b.dim() {
            for c in 0..b.dim() {
                diff.set(a.dim() + r, a.dim() + c, b.diff.at(r, c).clone());
            }
        }
        DGAlgebra::new(field, labels, degrees, unit, mult, diff)
    }
}

pub(crate) fn degree_index_map(degrees: &[i64]) -> BTreeMap<i64, Vec<usize>> {
    let mut map: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &d) in degrees.iter().enumerate() {
        map.entry(d).or_default().push(i);
    }
    map
}

pub(crate) fn homogeneous_degree(degrees: &[i64], v: &[Scalar]) -> Option<i64> {
    let mut found: Option<i64> = None;
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match found {
            None => found = Some(degrees[i]),
            Some(d) if d == degrees[i] => {}
            Some(_) => return None,
        }
    }
    found
}

pub(crate) fn complex_of(field: FieldSpec, degrees: &[i64], diff: &Mat) -> Complex {
    let by_degree = degree_index_map(degrees);
    let dims: BTreeMap<i64, usize> = by_degree.iter().map(|(&q, v)| (q, v.len())).collect();
    let mut d = BTreeMap::new();
    for (&q, cols) in &by_degree {
        if let Some(rows) = by_degree.get(&(q + 1)) {
            let block = diff.submatrix(rows, cols);
            if !block.is_zero() {
                d.insert(q, block);
            }
        }
    }
    Complex::new(field, GradedSpace::from_dims(dims), d)
        .expect("flat differential must restrict to degree blocks")
}

/// A right DG module over a DG algebra, given by right-action matrices per
/// algebra basis element and a flat differential.
#[derive(Debug, Clone)]
pub struct DGModule {
    algebra: Arc<DGAlgebra>,
    labels: Vec<String>,
    degrees: Vec<i64>,
    action: Vec<Mat>,
    diff: Mat,
}

/// One violated DG module axiom with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleViolation {
    Grading { basis: String, alg: String },
    Assoc { left: String, right: String },
    Unit { basis: String },
    DDegree { basis: String },
    DSquared,
    Leibniz { basis: String, alg: String },
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleViolation::Grading { basis, alg } => {
                write!(f, "MODULE_GRADING: {basis} * {alg} has wrong degree")
            }
            ModuleViolation::Assoc { left, right } => {
                write!(f, "MODULE_ASSOC: action of ({left}, {right}) mismatch")
            }
            ModuleViolation::Unit { basis } => write!(f, "MODULE_UNIT: fails on {basis}"),
            ModuleViolation::DDegree { basis } => write!(f, "MODULE_D_DEGREE: fails on {basis}"),
            ModuleViolation::DSquared => write!(f, "MODULE_D_SQUARED"),
            ModuleViolation::Leibniz { basis, alg } => {
                write!(f, "MODULE_LEIBNIZ: fails on ({basis}, {alg})")
            }
        }
    }
}

impl DGModule {
    pub fn new(
        algebra: Arc<DGAlgebra>,
        labels: Vec<String>,
        degrees: Vec<i64>,
        action: Vec<Mat>,
        diff: Mat,
    ) -> DGModule {
        let dim = labels.len();
        assert_eq!(degrees.len(), dim);
        assert_eq!(action.len(), algebra.dim());
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (dim, dim));
        }
        assert_eq!((diff.rows(), diff.cols()), (dim, dim));
        DGModule { algebra, labels, degrees, action, diff }
    }

    /// The algebra as a right module over itself.
    pub fn regular(algebra: &Arc<DGAlgebra>) -> DGModule {
        let action = (0..algebra.dim())
            .map(|a| algebra.right_mult_matrix(&algebra.basis_vector(a)))
            .collect();
        DGModule {
            algebra: Arc::clone(algebra),
            labels: algebra.labels().to_vec(),
            degrees: algebra.degrees().to_vec(),
            action,
            diff: algebra.diff().clone(),
        }
    }

    pub fn algebra(&self) -> &Arc<DGAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn diff(&self) -> &Mat {
        &self.diff
    }

    /// Right action matrix of the algebra basis element `a`.
    pub fn action(&self, a: usize) -> &Mat {
        &self.action[a]
    }

    /// Right action matrix of an arbitrary algebra element.
    pub fn action_of(&self, r: &[Scalar]) -> Mat {
        let field = self.algebra.field();
        let mut m = Mat::zeros(field, self.dim(), self.dim());
        for (a, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.action[a].scale(c));
        }
        m
    }

    pub fn act_vec(&self, m: &[Scalar], r: &[Scalar]) -> Vec<Scalar> {
        self.action_of(r).apply(m)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.algebra.field().zero(); self.dim()];
        v[i] = self.algebra.field().one();
        v
    }

    pub fn complex(&self) -> Complex {
        complex_of(self.algebra.field(), &self.degrees, &self.diff)
    }

    pub fn degree_indices(&self) -> BTreeMap<i64, Vec<usize>> {
        degree_index_map(&self.degrees)
    }

    /// Shifted module: `(m[k])^q = m^{q+k}`, differential times `(-1)^k`,
    /// unchanged right action.
    pub fn shift(&self, k: i64) -> DGModule {
        let degrees = self.degrees.iter().map(|&d| d - k).collect();
        let diff = if k.rem_euclid(2) == 0 { self.diff.clone() } else { self.diff.neg() };
        DGModule {
            algebra: Arc::clone(&self.algebra),
            labels: self.labels.iter().map(|l| format!("{l}[{k}]")).collect(),
            degrees,
            action: self.action.clone(),
            diff,
        }
    }

    /// Direct sum with recorded summand ranges.
    pub fn direct_sum(parts: &[&DGModule]) -> (DGModule, Vec<std::ops::Range<usize>>) {
        assert!(!parts.is_empty());
        let algebra = Arc::clone(parts[0].algebra());
        let field = algebra.field();
        for p in parts {
            assert_eq!(p.algebra.as_ref(), algebra.as_ref(), "summands over different algebras");
        }
        let dim: usize = parts.iter().map(|p| p.dim()).sum();
        let mut ranges = Vec::new();
        let mut offset = 0usize;
        for p in parts {
            ranges.push(offset..offset + p.dim());
            offset += p.dim();
        }
        let mut labels = Vec::with_capacity(dim);
        let mut degrees = Vec::with_capacity(dim);
        for (s, p) in parts.iter().enumerate() {
            labels.extend(p.labels.iter().map(|l| format!("s{}.{l}", s + 1)));
            degrees.extend_from_slice(&p.degrees);
        }
        let mut action = Vec::with_capacity(algebra.dim());
        for a in 0..algebra.dim() {
            let mut m = Mat::zeros(field, dim, dim);
            for (range, p) in ranges.iter().zip(parts) {
                let block = p.action(a);
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        if !block.at(r, c).is_zero() {
                            m.set(range.start + r, range.start + c, block.at(r, c).clone());
                        }
                    }
                }
            }
            action.push(m);
        }
        let mut diff = Mat::zeros(field, dim, dim);
        for (range, p) in ranges.iter().zip(parts) {
            for r in 0..p.dim() {
                for c in 0..p.dim() {
                    if !p.diff.at(r, c).is_zero() {
                        diff.set(range.start + r, range.start + c, p.diff.at(r, c).clone());
                    }
                }
            }
        }
        (DGModule { algebra, labels, degrees, action, diff }, ranges)
    }

    /// Validates all right DG module axioms; empty iff valid.
    pub fn validate(&self) -> Vec<ModuleViolation> {
        let mut out = Vec::new();
        let alg = &self.algebra;
        let dim = self.dim();
        let field = alg.field();
        // grading of the action and the differential
        for a in 0..alg.dim() {
            let mat = &self.action[a];
            'col: for c in 0..dim {
                for r in 0..dim {
                    if !mat.at(r, c).is_zero()
                        && self.degrees[r] != self.degrees[c] + alg.degrees()[a]
                    {
                        out.push(ModuleViolation::Grading {
                            basis: self.labels[c].clone(),
                            alg: alg.label(a).to_string(),
                        });
                        continue 'col;
                    }
                }
            }
        }
        for c in 0..dim {
            let col = self.diff.col_vec(c);
            match homogeneous_degree(&self.degrees, &col) {
                None => {}
                Some(d) if d == self.degrees[c] + 1 => {}
                Some(_) => out.push(ModuleViolation::DDegree { basis: self.labels[c].clone() }),
            }
        }
        // unit acts as the identity
        let unit_action = self.action_of(alg.unit());
        if unit_action != Mat::identity(field, dim) {
            out.push(ModuleViolation::Unit { basis: "1".into() });
        }
        // associativity (m*a)*b = m*(ab) as matrix identities
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let ab = dense_from_sparse(field, alg.dim(), alg.mult_basis(a, b));
                let lhs = self.action[b].mul(&self.action[a]);
                let rhs = self.action_of(&ab);
                if lhs != rhs {
                    out.push(ModuleViolation::Assoc {
                        left: alg.label(a).to_string(),
                        right: alg.label(b).to_string(),
                    });
                }
            }
        }
        // d^2 = 0
        if !self.diff.mul(&self.diff).is_zero() {
            out.push(ModuleViolation::DSquared);
        }
        // module Leibniz d(m a) = d(m) a + (-1)^{|m|} m d(a), per basis pair
        for a in 0..alg.dim() {
            let da = alg.diff().col_vec(a);
            let act_da = self.action_of(&da);
            for m in 0..dim {
                let e = self.basis_vector(m);
                let lhs = self.diff.apply(&self.action[a].apply(&e));
                let mut rhs = self.action[a].apply(&self.diff.apply(&e));
                let sign = if self.degrees[m].rem_euclid(2) == 0 { 1 } else { -1 };
                let term = act_da.apply(&e);
                for (r, t) in rhs.iter_mut().zip(&term) {
                    *r = if sign == 1 { &*r + t } else { &*r - t };
                }
                if lhs != rhs {
                    out.push(ModuleViolation::Leibniz {
                        basis: self.labels[m].clone(),
                        alg: alg.label(a).to_string(),
                    });
                }
            }
        }
        out
    }
}

/// A two-sided graded ideal, stored as a canonical graded subspace
/// (homogeneous rref basis rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    subspace: Subspace,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("subspace is not graded: {0}")]
    NotGraded(String),
    #[error("subspace is not a two-sided ideal (witness: {0})")]
    NotTwoSided(String),
    #[error("ideal is not closed under the differential (witness row {0})")]
    NotDClosed(usize),
}

impl GradedIdeal {
    /// Canonicalizes and checks gradedness and two-sidedness.
    pub fn from_subspace(alg: &DGAlgebra, sub: &Subspace) -> Result<GradedIdeal, IdealError> {
        assert_eq!(sub.ambient_dim(), alg.dim());
        let graded = graded_closure_check(alg, sub)?;
        // two-sided: multiply basis rows by every algebra basis element
        for r in 0..graded.basis().rows() {
            let v = graded.basis().row_vec(r);
            for a in 0..alg.dim() {
                let e = alg.basis_vector(a);
                for p in [alg.mult_vec(&e, &v), alg.mult_vec(&v, &e)] {
                    if !graded.contains_vector(&p) {
                        return Err(IdealError::NotTwoSided(format!(
                            "row {r} times {}",
                            alg.label(a)
                        )));
                    }
                }
            }
        }
        Ok(GradedIdeal { subspace: graded })
    }

    pub fn zero(alg: &DGAlgebra) -> GradedIdeal {
        GradedIdeal { subspace: Subspace::zero(alg.field(), alg.dim()) }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.subspace.is_zero()
    }

    /// Dimensions of the homogeneous components.
    pub fn graded_dims(&self, alg: &DGAlgebra) -> BTreeMap<i64, usize> {
        let mut map = BTreeMap::new();
        for r in 0..self.subspace.basis().rows() {
            let v = self.subspace.basis().row_vec(r);
            let d = homogeneous_degree(alg.degrees(), &v).expect("basis rows are homogeneous");
            *map.entry(d).or_insert(0) += 1;
        }
        map
    }

    pub fn is_d_closed(&self, alg: &DGAlgebra) -> bool {
        (0..self.subspace.basis().rows()).all(|r| {
            let v = self.subspace.basis().row_vec(r);
            self.subspace.contains_vector(&alg.d_vec(&v))
        })
    }
}

/// A two-sided graded ideal closed under the differential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGIdeal {
    ideal: GradedIdeal,
}

impl DGIdeal {
    pub fn from_graded(alg: &DGAlgebra, ideal: GradedIdeal) -> Result<DGIdeal, IdealError> {
        for r in 0..ideal.subspace.basis().rows() {
            let v = ideal.subspace.basis().row_vec(r);
            if !ideal.subspace.contains_vector(&alg.d_vec(&v)) {
                return Err(IdealError::NotDClosed(r));
            }
        }
        Ok(DGIdeal { ideal })
    }

    pub fn zero(alg: &DGAlgebra) -> DGIdeal {
        DGIdeal { ideal: GradedIdeal::zero(alg) }
    }

    pub fn graded(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn subspace(&self) -> &Subspace {
        self.ideal.subspace()
    }

    pub fn dim(&self) -> usize {
        self.ideal.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.ideal.is_zero()
    }
}

/// Splits a subspace into homogeneous components and re-canonicalizes.
/// Errors when a component of a member escapes the subspace.
fn graded_closure_check(alg: &DGAlgebra, sub: &Subspace) -> Result<Subspace, IdealError> {
    let field = alg.field();
    let dim = alg.dim();
    let by_degree = alg.degree_indices();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in 0..sub.basis().rows() {
        let v = sub.basis().row_vec(r);
        for indices in by_degree.values() {
            let mut comp = vec![field.zero(); dim];
            let mut nonzero = false;
            for &i in indices {
                if !v[i].is_zero() {
                    comp[i] = v[i].clone();
                    nonzero = true;
                }
            }
            if nonzero {
                if !sub.contains_vector(&comp) {
                    return Err(IdealError::NotGraded(format!("row {r}")));
                }
                rows.push(comp);
            }
        }
    }
    Ok(Subspace::from_vectors(field, dim, &rows))
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    /// The two-dimensional algebra {1, a} with deg a = -1, a^2 = 0, d(a) = 1.
    /// Acyclic but perfectly well-formed.
    pub fn contractible_dual_numbers() -> DGAlgebra {
        let field = FieldSpec::Rationals;
        let labels = vec!["1".to_string(), "a".to_string()];
        let degrees = vec![0, -1];
        let unit = vec![field.one(), field.zero()];
        let mut mult = vec![vec![LinComb::new(); 2]; 2];
        mult[0][0] = vec![(0, field.one())];
        mult[0][1] = vec![(1, field.one())];
        mult[1][0] = vec![(1, field.one())];
        // a * a = 0
        let mut diff = Mat::zeros(field, 2, 2);
        diff.set(0, 1, field.one());
        DGAlgebra::new(field, labels, degrees, unit, mult, diff)
    }
}

#[cfg(test)]
mod tests {
    use super::test_fixtures::contractible_dual_numbers;
    use super::*;
    use crate::builders::{exterior_algebra, truncated_polynomial_algebra};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn builders_validate() {
        assert!(exterior_algebra(2, q()).validate().is_empty());
        assert!(truncated_polynomial_algebra(3, q()).validate().is_empty());
    }

    #[test]
    fn acyclic_dual_numbers_are_valid() {
        let a = contractible_dual_numbers();
        assert!(a.validate().is_empty());
        assert!(a.is_acyclic());
    }

    #[test]
    fn corrupted_sign_is_caught() {
        // flipping x2 * x1 alone breaks associativity against x3
        let mut a = exterior_algebra(3, q());
        let v = a.mult_basis(2, 1).clone();
        a.mult_mut()[2][1] = v.into_iter().map(|(k, c)| (k, -&c)).collect();
        let report = a.validate();
        assert!(!report.is_empty());
        assert!(report
            .iter()
            .any(|v| matches!(v, AxiomViolation::Assoc { .. } | AxiomViolation::Leibniz { .. })));
    }

    #[test]
    fn regular_module_validates() {
        let alg = Arc::new(exterior_algebra(2, q()));
        let m = DGModule::regular(&alg);
        assert!(m.validate().is_empty());
        assert_eq!(m.complex().cohomology().total_dim(), 4); // zero differential
    }

    #[test]
    fn shifted_module_validates() {
        let alg = Arc::new(contractible_dual_numbers());
        let m = DGModule::regular(&alg);
        for k in [-2i64, -1, 1, 2] {
            assert!(m.shift(k).validate().is_empty(), "shift by {k}");
        }
    }

    #[test]
    fn direct_sum_validates() {
        let alg = Arc::new(truncated_polynomial_algebra(3, q()));
        let m = DGModule::regular(&alg);
        let (sum, ranges) = DGModule::direct_sum(&[&m, &m]);
        assert!(sum.validate().is_empty());
        assert_eq!(ranges, vec![0..3, 3..6]);
    }

    #[test]
    fn generating_set_spans() {
        let alg = exterior_algebra(3, q());
        let gens = alg.generating_set();
        assert_eq!(gens.len(), 3); // the three degree-one generators
    }

    #[test]
    fn graded_ideal_detects_non_ideal() {
        let alg = exterior_algebra(2, q());
        // span{x1} is not an ideal: x1 * x2 escapes
        let sub = Subspace::from_vectors(q(), 4, &[alg.basis_vector(1)]);
        assert!(GradedIdeal::from_subspace(&alg, &sub).is_err());
    }

    #[test]
    fn direct_product_validates() {
        let a = exterior_algebra(1, q());
        let b = truncated_polynomial_algebra(3, q());
        let p = DGAlgebra::direct_product(&a, &b);
        assert!(p.validate().is_empty());
        assert_eq!(p.dim(), 5);
    }
}
