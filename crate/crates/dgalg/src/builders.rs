//! Constructors for the standard example families and for general quiver
//! path algebras with relations.
//!
//! Path algebras are built by enumerating paths length by length and
//! reducing modulo the two-sided span of the relations, stopping once a
//! whole length stratum dies. Relations must be homogeneous in both degree
//! and path length; that is all the examples need and it keeps the
//! truncation argument sound without noncommutative Groebner machinery.

use crate::dga::{sparse_from_dense, DGAlgebra, LinComb};
use crate::exactlin::{FieldSpec, Mat, RowReducer, Scalar};
use std::collections::BTreeMap;
use thiserror::Error;

/// Exterior algebra on `n` generators of degree one, zero differential.
/// Basis: subsets of {1..n} ordered by (size, lexicographic).
pub fn exterior_algebra(n: usize, field: FieldSpec) -> DGAlgebra {
    let mut subsets: Vec<Vec<usize>> = vec![vec![]];
    for size in 1..=n {
        let mut level = Vec::new();
        gen_subsets(n, size, 1, &mut vec![], &mut level);
        subsets.extend(level);
    }
    let index: BTreeMap<Vec<usize>, usize> =
        subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let dim = subsets.len();
    let labels: Vec<String> = subsets
        .iter()
        .map(|s| {
            if s.is_empty() {
                "1".to_string()
            } else {
                s.iter().map(|g| format!("x{g}")).collect::<Vec<_>>().join("")
            }
        })
        .collect();
    let degrees: Vec<i64> = subsets.iter().map(|s| s.len() as i64).collect();
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    let mut mult = vec![vec![LinComb::new(); dim]; dim];
    for (i, s) in subsets.iter().enumerate() {
        'pair: for (j, t) in subsets.iter().enumerate() {
            // zero if the subsets intersect
            for g in s {
                if t.contains(g) {
                    continue 'pair;
                }
            }
            // sign = (-1)^{inversions between s and t}
            let mut inversions = 0usize;
            for a in s {
                for b in t {
                    if a > b {
                        inversions += 1;
                    }
                }
            }
            let mut union: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
            union.sort_unstable();
            let k = index[&union];
            let coef = if inversions.is_multiple_of(2) { field.one() } else { -&field.one() };
            mult[i][j] = vec![(k, coef)];
        }
    }
    let diff = Mat::zeros(field, dim, dim);
    DGAlgebra::new(field, labels, degrees, unit, mult, diff)
}

fn gen_subsets(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for g in start..=n {
        cur.push(g);
        gen_subsets(n, size, g + 1, cur, out);
        cur.pop();
    }
}

/// The truncated polynomial algebra k[x]/x^n with deg x = 1 and d = 0.
pub fn truncated_polynomial_algebra(n: usize, field: FieldSpec) -> DGAlgebra {
    graded_truncated_polynomial_algebra(n, 1, field)
}

/// k[x]/x^n with a chosen generator degree; `deg = 0` gives the classical
/// ungraded truncation sitting in degree zero.
pub fn graded_truncated_polynomial_algebra(n: usize, deg: i64, field: FieldSpec) -> DGAlgebra {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let degrees: Vec<i64> = (0..n as i64).map(|i| i * deg).collect();
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let mut mult = vec![vec![LinComb::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mult[i][j] = vec![(i + j, field.one())];
            }
        }
    }
    DGAlgebra::new(field, labels, degrees, unit, mult, Mat::zeros(field, n, n))
}

/// An arrow of a quiver with a homological degree.
#[derive(Debug, Clone)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

/// A linear combination of paths; each path is a sequence of arrow indices
/// in traversal order (first arrow first).
pub type PathComb = Vec<(Vec<usize>, Scalar)>;

/// A quiver with relations and a degree +1 differential on arrows.
#[derive(Debug, Clone)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<PathComb>,
    /// d(arrow) as a combination of parallel paths, degree +1.
    pub differential: Vec<(usize, PathComb)>,
    /// Paths longer than this abort with `InfiniteDimensional`.
    pub max_path_length: usize,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> QuiverPresentation {
        QuiverPresentation {
            vertices,
            arrows,
            relations: Vec::new(),
            differential: Vec::new(),
            max_path_length: 24,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathAlgebraError {
    #[error("path enumeration exceeded the bound {0}; algebra looks infinite-dimensional")]
    InfiniteDimensional(usize),
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("bad differential: {0}")]
    BadDifferential(String),
}

/// A path in traversal order with cached endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

/// The result of building a path algebra: the DG algebra plus the basis
/// bookkeeping needed by tests and by the corpus.
#[derive(Debug, Clone)]
pub struct PathAlgebra {
    pub algebra: DGAlgebra,
    /// Coefficient vectors of the vertex idempotents.
    pub vertex_idempotents: Vec<Vec<Scalar>>,
    /// (source, target) of each basis element.
    pub basis_endpoints: Vec<(usize, usize)>,
}

impl PathAlgebra {
    /// Dimension of the span of basis elements from `source` to `target`.
    pub fn block_dim(&self, source: usize, target: usize) -> usize {
        self.basis_endpoints
            .iter()
            .filter(|(s, t)| *s == source && *t == target)
            .count()
    }
}

/// Builds the path algebra of a quiver with relations over `field`.
pub fn path_algebra(
    q: &QuiverPresentation,
    field: FieldSpec,
) -> Result<PathAlgebra, PathAlgebraError> {
    let nv = q.vertices.len();
    assert!(nv > 0, "quiver needs at least one vertex");
    for a in &q.arrows {
        assert!(a.source < nv && a.target < nv, "arrow endpoints out of range");
    }
    validate_relations(q)?;

    // enumerate paths level by level until a stratum dies
    let mut levels: Vec<Vec<Path>> = vec![(0..nv)
        .map(|v| Path { source: v, target: v, arrows: vec![] })
        .collect()];
    let mut stop_len = None;
    while stop_len.is_none() {
        let cur_len = levels.len();
        if cur_len > q.max_path_length {
            return Err(PathAlgebraError::InfiniteDimensional(q.max_path_length));
        }
        let mut level = Vec::new();
        for p in &levels[cur_len - 1] {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    level.push(Path { source: p.source, target: a.target, arrows });
                }
            }
        }
        levels.push(level);
        let all_paths = sorted_paths(q, &levels);
        let span = relation_span(q, field, &all_paths);
        let last = levels.last().unwrap();
        if last.is_empty() || last.iter().all(|p| span_contains(&span, &all_paths, p, field)) {
            stop_len = Some(cur_len);
        }
    }

    let paths = sorted_paths(q, &levels);
    let span = relation_span(q, field, &paths);
    let path_index: BTreeMap<Path, usize> =
        paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let ambient = paths.len();
    let cut = stop_len.unwrap();

    // complement basis: non-pivot paths
    let mut is_pivot = vec![false; ambient];
    for &p in span.pivots() {
        is_pivot[p] = true;
    }
    let basis_paths: Vec<usize> = (0..ambient).filter(|i| !is_pivot[*i]).collect();
    let dim = basis_paths.len();

    // reduce an ambient path-space vector to complement coordinates
    let reduce = |v: Vec<Scalar>| -> Vec<Scalar> {
        let reduced = span.reduce(v);
        basis_paths.iter().map(|&i| reduced[i].clone()).collect()
    };
    let path_vec = |p: &Path, coef: &Scalar| -> Vec<Scalar> {
        let mut v = vec![field.zero(); ambient];
        v[path_index[p]] = coef.clone();
        v
    };

    let labels: Vec<String> = basis_paths
        .iter()
        .map(|&i| {
            let p = &paths[i];
            if p.arrows.is_empty() {
                format!("e{}", q.vertices[p.source])
            } else {
                p.arrows.iter().map(|&a| q.arrows[a].label.clone()).collect::<Vec<_>>().join("*")
            }
        })
        .collect();
    let degrees: Vec<i64> = basis_paths
        .iter()
        .map(|&i| paths[i].arrows.iter().map(|&a| q.arrows[a].degree).sum())
        .collect();
    let basis_endpoints: Vec<(usize, usize)> =
        basis_paths.iter().map(|&i| (paths[i].source, paths[i].target)).collect();

    // unit = sum of vertex idempotent images
    let mut unit = vec![field.zero(); dim];
    let mut vertex_idempotents = Vec::with_capacity(nv);
    for v in 0..nv {
        let e = Path { source: v, target: v, arrows: vec![] };
        let image = reduce(path_vec(&e, &field.one()));
        for (u, c) in unit.iter_mut().zip(&image) {
            *u = &*u + c;
        }
        vertex_idempotents.push(image);
    }

    // multiplication: p * r = r-then-p when composable, zero otherwise;
    // concatenations at or beyond the dead stratum vanish
    let mut mult = vec![vec![LinComb::new(); dim]; dim];
    for (bi, &pi) in basis_paths.iter().enumerate() {
        for (bj, &pj) in basis_paths.iter().enumerate() {
            let (p, r) = (&paths[pi], &paths[pj]);
            if r.target != p.source {
                continue;
            }
            let total = r.arrows.len() + p.arrows.len();
            if total >= cut {
                continue; // dead stratum
            }
            let mut arrows = r.arrows.clone();
            arrows.extend_from_slice(&p.arrows);
            let concat = Path { source: r.source, target: p.target, arrows };
            let coords = reduce(path_vec(&concat, &field.one()));
            mult[bi][bj] = sparse_from_dense(&coords);
        }
    }

    // differential on arrows, extended to basis paths by the Leibniz rule;
    // image terms at or beyond the dead stratum already lie in the ideal
    // and are dropped
    let mut diff = Mat::zeros(field, dim, dim);
    if !q.differential.is_empty() {
        validate_differential(q)?;
        let d_arrow: BTreeMap<usize, PathComb> = q.differential.iter().cloned().collect();
        for (bi, &pi) in basis_paths.iter().enumerate() {
            let image = differentiate_path(q, field, &paths[pi], &d_arrow, ambient, &path_index, cut);
            let coords = reduce(image);
            for (r, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    diff.set(r, bi, c.clone());
                }
            }
        }
        // the differential must preserve the relation ideal
        for row in 0..span.basis().rows() {
            let v = span.basis().row_vec(row);
            let mut image = vec![field.zero(); ambient];
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let contrib =
                    differentiate_path(q, field, &paths[i], &d_arrow, ambient, &path_index, cut);
                for (x, y) in image.iter_mut().zip(&contrib) {
                    *x = &*x + &(c * y);
                }
            }
            if !span.contains(&image) {
                return Err(PathAlgebraError::BadDifferential(
                    "differential does not preserve the relation ideal".into(),
                ));
            }
        }
    }

    let algebra = DGAlgebra::new(field, labels, degrees, unit, mult, diff);
    let report = algebra.validate();
    if !report.is_empty() {
        return Err(PathAlgebraError::BadDifferential(format!(
            "constructed algebra fails validation: {}",
            report[0]
        )));
    }
    Ok(PathAlgebra { algebra, vertex_idempotents, basis_endpoints })
}

fn sorted_paths(q: &QuiverPresentation, levels: &[Vec<Path>]) -> Vec<Path> {
    let mut all: Vec<Path> = levels.iter().flatten().cloned().collect();
    all.sort_by_key(|p| {
        (
            p.source,
            p.target,
            p.arrows.len(),
            p.arrows.iter().map(|&a| q.arrows[a].label.clone()).collect::<Vec<_>>(),
        )
    });
    all
}

fn validate_relations(q: &QuiverPresentation) -> Result<(), PathAlgebraError> {
    for (ri, rel) in q.relations.iter().enumerate() {
        let mut endpoints = None;
        let mut degree = None;
        let mut length = None;
        for (path, _) in rel {
            let ep = path_endpoints(q, path).ok_or_else(|| {
                PathAlgebraError::BadRelation(format!("relation {ri}: path not composable"))
            })?;
            let deg: i64 = path.iter().map(|&a| q.arrows[a].degree).sum();
            let len = path.len();
            if *endpoints.get_or_insert(ep) != ep {
                return Err(PathAlgebraError::BadRelation(format!(
                    "relation {ri}: terms have different endpoints"
                )));
            }
            if *degree.get_or_insert(deg) != deg {
                return Err(PathAlgebraError::BadRelation(format!(
                    "relation {ri}: terms have different degrees"
                )));
            }
            if *length.get_or_insert(len) != len {
                return Err(PathAlgebraError::BadRelation(format!(
                    "relation {ri}: terms have different lengths (not supported)"
                )));
            }
        }
    }
    Ok(())
}

fn validate_differential(q: &QuiverPresentation) -> Result<(), PathAlgebraError> {
    for (ai, comb) in &q.differential {
        let a = &q.arrows[*ai];
        for (path, _) in comb {
            let ep = path_endpoints(q, path).ok_or_else(|| {
                PathAlgebraError::BadDifferential(format!(
                    "d({}) has a non-composable path",
                    a.label
                ))
            })?;
            if ep != (a.source, a.target) {
                return Err(PathAlgebraError::BadDifferential(format!(
                    "d({}) is not parallel to the arrow",
                    a.label
                )));
            }
            let deg: i64 = path.iter().map(|&x| q.arrows[x].degree).sum();
            if deg != a.degree + 1 {
                return Err(PathAlgebraError::BadDifferential(format!(
                    "d({}) does not raise degree by one",
                    a.label
                )));
            }
        }
    }
    Ok(())
}

fn path_endpoints(q: &QuiverPresentation, path: &[usize]) -> Option<(usize, usize)> {
    if path.is_empty() {
        return None;
    }
    let mut cur = q.arrows[path[0]].source;
    for &a in path {
        if q.arrows[a].source != cur {
            return None;
        }
        cur = q.arrows[a].target;
    }
    Some((q.arrows[path[0]].source, cur))
}

/// Two-sided span of the relations inside the truncated path space.
/// Relations are length-homogeneous, so products stay within the
/// truncation whenever their total length does.
fn relation_span(q: &QuiverPresentation, field: FieldSpec, paths: &[Path]) -> RowReducer {
    let index: BTreeMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let max_len = paths.iter().map(|p| p.arrows.len()).max().unwrap_or(0);
    let mut red = RowReducer::new(field, paths.len());
    for rel in &q.relations {
        if rel.is_empty() {
            continue;
        }
        let (src, tgt) = path_endpoints(q, &rel[0].0).expect("validated");
        let rel_len = rel[0].0.len();
        for left in paths {
            if left.target != src {
                continue;
            }
            for right in paths {
                if right.source != tgt {
                    continue;
                }
                let total = left.arrows.len() + rel_len + right.arrows.len();
                if total > max_len {
                    continue;
                }
                let mut row = vec![field.zero(); paths.len()];
                for (term, coef) in rel {
                    let mut arrows = left.arrows.clone();
                    arrows.extend_from_slice(term);
                    arrows.extend_from_slice(&right.arrows);
                    let p = Path { source: left.source, target: right.target, arrows };
                    let i = index
                        .get(&p)
                        .copied()
                        .expect("length-homogeneous closure stays within the truncation");
                    row[i] = &row[i] + coef;
                }
                red.add_row(row);
            }
        }
    }
    red
}

fn span_contains(span: &RowReducer, paths: &[Path], p: &Path, field: FieldSpec) -> bool {
    let mut v = vec![field.zero(); paths.len()];
    let i = paths.iter().position(|x| x == p).expect("path enumerated");
    v[i] = field.one();
    span.contains(&v)
}

/// d of a full path via the graded Leibniz rule, in path-space coordinates.
/// Terms whose length reaches the dead stratum vanish in the quotient and
/// are omitted.
fn differentiate_path(
    q: &QuiverPresentation,
    field: FieldSpec,
    p: &Path,
    d_arrow: &BTreeMap<usize, PathComb>,
    ambient: usize,
    index: &BTreeMap<Path, usize>,
    cut: usize,
) -> Vec<Scalar> {
    let mut out = vec![field.zero(); ambient];
    // the path is a_k * ... * a_1 in algebra order; by the Leibniz rule the
    // factor at traversal position pos picks up the sign of the total
    // degree of the factors to its algebra-left, i.e. the later arrows
    for pos in 0..p.arrows.len() {
        let Some(comb) = d_arrow.get(&p.arrows[pos]) else { continue };
        let left_degree: i64 = p.arrows[pos + 1..].iter().map(|&a| q.arrows[a].degree).sum();
        let sign = if left_degree.rem_euclid(2) == 0 { 1 } else { -1 };
        for (term, coef) in comb {
            let new_len = p.arrows.len() - 1 + term.len();
            if new_len >= cut {
                continue;
            }
            let mut arrows = p.arrows[..pos].to_vec();
            arrows.extend_from_slice(term);
            arrows.extend_from_slice(&p.arrows[pos + 1..]);
            let np = Path { source: p.source, target: p.target, arrows };
            let i = *index.get(&np).expect("short differential terms are enumerated");
            let c = if sign == 1 { coef.clone() } else { -coef };
            out[i] = &out[i] + &c;
        }
    }
    out
}

/// The linear quiver with `n` vertices and single arrows, no relations.
pub fn a_n_quiver_algebra(n: usize, field: FieldSpec) -> PathAlgebra {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<Arrow> = (1..n)
        .map(|i| Arrow { label: format!("a{i}"), source: i - 1, target: i, degree: 0 })
        .collect();
    path_algebra(&QuiverPresentation::new(vertices, arrows), field)
        .expect("linear quivers are finite-dimensional")
}

/// The quiver with n+1 vertices and n+1 anticommuting arrows between each
/// consecutive pair; block (i, j) has dimension C(n+1, j-i).
pub fn beilinson_algebra(n: usize, field: FieldSpec) -> PathAlgebra {
    assert!(n >= 1);
    let vertices: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for hop in 0..n {
        for a in 0..=n {
            arrows.push(Arrow {
                label: format!("x{a}.{hop}"),
                source: hop,
                target: hop + 1,
                degree: 0,
            });
        }
    }
    let arrow_at = |a: usize, hop: usize| hop * (n + 1) + a;
    let mut relations: Vec<PathComb> = Vec::new();
    for hop in 0..n.saturating_sub(1) {
        for a in 0..=n {
            for b in a..=n {
                if a == b {
                    relations.push(vec![(
                        vec![arrow_at(a, hop), arrow_at(a, hop + 1)],
                        field.one(),
                    )]);
                } else {
                    relations.push(vec![
                        (vec![arrow_at(b, hop), arrow_at(a, hop + 1)], field.one()),
                        (vec![arrow_at(a, hop), arrow_at(b, hop + 1)], field.one()),
                    ]);
                }
            }
        }
    }
    let mut q = QuiverPresentation::new(vertices, arrows);
    q.relations = relations;
    path_algebra(&q, field).expect("anticommutation relations keep the algebra finite")
}

/// The n-vertex quiver with double arrows a_i, b_i and the relations
/// a_{i+1} b_i = 0, b_{i+1} a_i = 0; all arrows in degree zero.
pub fn double_arrow_quiver_algebra(n: usize, field: FieldSpec) -> PathAlgebra {
    assert!(n >= 1);
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push(Arrow { label: format!("a{i}"), source: i - 1, target: i, degree: 0 });
        arrows.push(Arrow { label: format!("b{i}"), source: i - 1, target: i, degree: 0 });
    }
    let a_at = |i: usize| 2 * (i - 1);
    let b_at = |i: usize| 2 * (i - 1) + 1;
    let mut relations: Vec<PathComb> = Vec::new();
    for i in 1..n {
        if i + 1 < n {
            relations.push(vec![(vec![b_at(i), a_at(i + 1)], field.one())]);
            relations.push(vec![(vec![a_at(i), b_at(i + 1)], field.one())]);
        }
    }
    let mut q = QuiverPresentation::new(vertices, arrows);
    q.relations = relations;
    path_algebra(&q, field).expect("double-arrow relations keep the algebra finite")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn exterior_dimensions() {
        assert_eq!(exterior_algebra(0, q()).dim(), 1);
        let e2 = exterior_algebra(2, q());
        assert_eq!(e2.dim(), 4);
        let by_degree = e2.degree_indices();
        assert_eq!(by_degree[&0].len(), 1);
        assert_eq!(by_degree[&1].len(), 2);
        assert_eq!(by_degree[&2].len(), 1);
        // anticommutation and squares
        let x1 = e2.basis_vector(1);
        let x2 = e2.basis_vector(2);
        let x1x2 = e2.mult_vec(&x1, &x2);
        let x2x1 = e2.mult_vec(&x2, &x1);
        let sum: Vec<Scalar> = x1x2.iter().zip(&x2x1).map(|(a, b)| a + b).collect();
        assert!(sum.iter().all(Scalar::is_zero));
        assert!(e2.mult_vec(&x1, &x1).iter().all(Scalar::is_zero));
    }

    #[test]
    fn truncated_cases() {
        assert_eq!(truncated_polynomial_algebra(1, q()).dim(), 1);
        let t2 = truncated_polynomial_algebra(2, q());
        let e1 = exterior_algebra(1, q());
        assert_eq!(t2.degrees(), e1.degrees());
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(t2.mult_basis(i, j), e1.mult_basis(i, j));
            }
        }
    }

    #[test]
    fn a2_quiver_dimension() {
        let a2 = a_n_quiver_algebra(2, q());
        assert_eq!(a2.algebra.dim(), 3);
        assert!(a2.algebra.validate().is_empty());
        assert_eq!(a2.block_dim(0, 1), 1);
    }

    #[test]
    fn beilinson_dimensions_and_blocks() {
        for n in 1..=3usize {
            let b = beilinson_algebra(n, q());
            assert!(b.algebra.validate().is_empty());
            let mut expected_total = 0;
            for i in 0..=n {
                for j in i..=n {
                    let want = binomial(n + 1, j - i);
                    assert_eq!(b.block_dim(i, j), want, "block ({i},{j}) of n={n}");
                    expected_total += want;
                }
            }
            assert_eq!(b.algebra.dim(), expected_total);
            // blockwise Pascal identity
            for k in 1..=n {
                assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
            }
        }
        assert_eq!(beilinson_algebra(1, q()).algebra.dim(), 4);
        assert_eq!(beilinson_algebra(2, q()).algebra.dim(), 12);
    }

    #[test]
    fn double_arrow_dimensions() {
        assert_eq!(double_arrow_quiver_algebra(1, q()).algebra.dim(), 1);
        assert_eq!(double_arrow_quiver_algebra(2, q()).algebra.dim(), 4);
        let d3 = double_arrow_quiver_algebra(3, q());
        assert_eq!(d3.algebra.dim(), 9);
        assert!(d3.algebra.validate().is_empty());
        // pure words survive, mixed words die
        assert_eq!(d3.block_dim(0, 2), 2);
    }

    #[test]
    fn infinite_dimensional_detected() {
        // a loop with no relations
        let mut qp = QuiverPresentation::new(
            vec!["v".into()],
            vec![Arrow { label: "l".into(), source: 0, target: 0, degree: 0 }],
        );
        qp.max_path_length = 6;
        assert_eq!(path_algebra(&qp, q()).unwrap_err(), PathAlgebraError::InfiniteDimensional(6));
    }

    #[test]
    fn bad_relation_detected() {
        let mut qp = QuiverPresentation::new(
            vec!["1".into(), "2".into()],
            vec![Arrow { label: "a".into(), source: 0, target: 1, degree: 0 }],
        );
        // a * a is not composable
        qp.relations = vec![vec![(vec![0, 0], q().one())]];
        assert!(matches!(path_algebra(&qp, q()), Err(PathAlgebraError::BadRelation(_))));
    }

    #[test]
    fn quiver_differential_leibniz() {
        // two parallel routes 0 -> 2, the degree -1 arrow mapping onto the
        // composite of the other two
        let arrows = vec![
            Arrow { label: "a".into(), source: 0, target: 1, degree: 0 },
            Arrow { label: "b".into(), source: 1, target: 2, degree: 0 },
            Arrow { label: "c".into(), source: 0, target: 2, degree: -1 },
        ];
        let mut qp = QuiverPresentation::new(vec!["0".into(), "1".into(), "2".into()], arrows);
        qp.differential = vec![(2, vec![(vec![0, 1], q().one())])];
        let pa = path_algebra(&qp, q()).unwrap();
        assert!(pa.algebra.validate().is_empty());
        assert_eq!(pa.algebra.dim(), 7); // e0 e1 e2 a b c ba
        assert_eq!(pa.algebra.complex().cohomology().total_dim(), 5);
    }
}
