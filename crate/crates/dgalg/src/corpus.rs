//! The test corpus: deterministic example families plus seeded random
//! differentials on fixed graded quiver algebras, with rejection testing
//! of d^2 = 0. Reproducible from a fixed seed; no external randomness.

use crate::builders::{
    beilinson_algebra, double_arrow_quiver_algebra, exterior_algebra,
    graded_truncated_polynomial_algebra, path_algebra, truncated_polynomial_algebra, Arrow,
    QuiverPresentation,
};
use crate::dga::{glue, Bimodule, DGAlgebra, GluingSpec, LinComb};
use crate::exactlin::{FieldSpec, Mat};

/// Default seed for the randomized corpus members.
pub const CORPUS_SEED: u64 = 0x00C0_FFEE;

/// A tiny deterministic PRNG (splitmix64); stable across platforms so the
/// corpus and every report derived from it are byte-reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// A small integer in -2..=2.
    pub fn small_int(&mut self) -> i64 {
        (self.below(5) as i64) - 2
    }
}

/// One corpus member. `auslander` marks algebras the endomorphism
/// construction is run on (nonacyclic members of the standard families);
/// the rest participate in the radical and ideal checks only.
pub struct CorpusEntry {
    pub name: String,
    pub algebra: DGAlgebra,
    pub auslander: bool,
}

/// The two-dimensional algebra {1, a} with a^2 = 0 and the generator in
/// the given degree. For degree -1 the differential d(a) = 1 is attached,
/// which makes the algebra acyclic.
pub fn dual_numbers(degree: i64, field: FieldSpec) -> DGAlgebra {
    let labels = vec!["1".to_string(), "a".to_string()];
    let degrees = vec![0, degree];
    let mut unit = vec![field.zero(); 2];
    unit[0] = field.one();
    let mut mult = vec![vec![LinComb::new(); 2]; 2];
    mult[0][0] = vec![(0, field.one())];
    mult[0][1] = vec![(1, field.one())];
    mult[1][0] = vec![(1, field.one())];
    let mut diff = Mat::zeros(field, 2, 2);
    if degree == -1 {
        diff.set(0, 1, field.one());
    }
    DGAlgebra::new(field, labels, degrees, unit, mult, diff)
}

/// Gluing of two scalar points along a one-dimensional bimodule: the
/// two-vertex single-arrow quiver algebra.
pub fn glued_arrow(field: FieldSpec) -> DGAlgebra {
    let point = truncated_polynomial_algebra(1, field);
    let t = Bimodule {
        labels: vec!["t".into()],
        degrees: vec![0],
        left: vec![Mat::identity(field, 1)],
        right: vec![Mat::identity(field, 1)],
        diff: Mat::zeros(field, 1, 1),
    };
    glue(&GluingSpec { r: point.clone(), s: point, t })
        .expect("scalar bimodule satisfies the axioms")
        .algebra
}

/// Gluing of the arrow algebra with a third point along the two paths into
/// it: the three-vertex linear quiver algebra.
pub fn glued_two_step(field: FieldSpec) -> DGAlgebra {
    let a2 = glued_arrow(field);
    let point = truncated_polynomial_algebra(1, field);
    // T = span{t1 (from the middle vertex), t2 (from the first)} with the
    // right action of [e1, arrow, e2]
    let zeros = Mat::zeros(field, 2, 2);
    let mut act_e1 = zeros.clone();
    act_e1.set(1, 1, field.one());
    let mut act_arrow = zeros.clone();
    act_arrow.set(1, 0, field.one());
    let mut act_e2 = zeros.clone();
    act_e2.set(0, 0, field.one());
    let t = Bimodule {
        labels: vec!["t1".into(), "t2".into()],
        degrees: vec![0, 0],
        left: vec![Mat::identity(field, 2)],
        right: vec![act_e1, act_arrow, act_e2],
        diff: Mat::zeros(field, 2, 2),
    };
    glue(&GluingSpec { r: a2, s: point, t })
        .expect("path bimodule satisfies the axioms")
        .algebra
}

/// Two vertices, a degree-0 arrow and a parallel degree -1 arrow mapping
/// onto a random multiple of it.
fn random_two_vertex(rng: &mut Rng, field: FieldSpec) -> DGAlgebra {
    let arrows = vec![
        Arrow { label: "a".into(), source: 0, target: 1, degree: 0 },
        Arrow { label: "u".into(), source: 0, target: 1, degree: -1 },
    ];
    let mut qp = QuiverPresentation::new(vec!["1".into(), "2".into()], arrows);
    let c = rng.small_int();
    if c != 0 {
        qp.differential = vec![(1, vec![(vec![0], field.from_i64(c))])];
    }
    path_algebra(&qp, field).expect("two-vertex quiver is finite").algebra
}

/// Two vertices with two parallel degree-0 arrows and a degree -1 arrow
/// mapping onto a random combination of them.
fn random_parallel_pair(rng: &mut Rng, field: FieldSpec) -> DGAlgebra {
    let arrows = vec![
        Arrow { label: "a".into(), source: 0, target: 1, degree: 0 },
        Arrow { label: "b".into(), source: 0, target: 1, degree: 0 },
        Arrow { label: "u".into(), source: 0, target: 1, degree: -1 },
    ];
    let mut qp = QuiverPresentation::new(vec!["1".into(), "2".into()], arrows);
    let (c1, c2) = (rng.small_int(), rng.small_int());
    let mut comb = Vec::new();
    if c1 != 0 {
        comb.push((vec![0usize], field.from_i64(c1)));
    }
    if c2 != 0 {
        comb.push((vec![1usize], field.from_i64(c2)));
    }
    if !comb.is_empty() {
        qp.differential = vec![(2, comb)];
    }
    path_algebra(&qp, field).expect("two-vertex quiver is finite").algebra
}

/// Three vertices with a two-step route, a shortcut in degree -1 and a
/// second-order shortcut in degree -2; d^2 = 0 imposes a real constraint
/// on the sampled coefficients, handled by rejection.
fn random_three_vertex(rng: &mut Rng, field: FieldSpec) -> DGAlgebra {
    loop {
        let arrows = vec![
            Arrow { label: "a".into(), source: 0, target: 1, degree: 0 },
            Arrow { label: "b".into(), source: 1, target: 2, degree: 0 },
            Arrow { label: "g1".into(), source: 0, target: 2, degree: -2 },
            Arrow { label: "g2".into(), source: 0, target: 2, degree: -1 },
        ];
        let mut qp = QuiverPresentation::new(vec!["1".into(), "2".into(), "3".into()], arrows);
        let u = rng.small_int();
        let v = rng.small_int();
        let mut differential = Vec::new();
        if u != 0 {
            differential.push((2usize, vec![(vec![3usize], field.from_i64(u))]));
        }
        if v != 0 {
            differential.push((3usize, vec![(vec![0usize, 1usize], field.from_i64(v))]));
        }
        qp.differential = differential;
        // d^2(g1) = u v (b a); reject until it vanishes
        match path_algebra(&qp, field) {
            Ok(pa) => return pa.algebra,
            Err(_) => continue,
        }
    }
}

/// The deterministic families plus `random_count` seeded random members.
pub fn corpus_with(field: FieldSpec, seed: u64, random_count: usize) -> Vec<CorpusEntry> {
    let mut entries = Vec::new();
    let mut push = |name: &str, algebra: DGAlgebra, auslander: bool| {
        entries.push(CorpusEntry { name: name.to_string(), algebra, auslander });
    };

    for n in 1..=3 {
        push(&format!("exterior_{n}"), exterior_algebra(n, field), true);
    }
    for n in 2..=5 {
        push(&format!("truncated_{n}"), truncated_polynomial_algebra(n, field), true);
    }
    // dual numbers across degrees; the degree -1 variant is acyclic
    push("dual_numbers_deg_minus1", dual_numbers(-1, field), false);
    push("dual_numbers_deg0", graded_truncated_polynomial_algebra(2, 0, field), true);
    push("dual_numbers_deg1", dual_numbers(1, field), true);
    // linear quiver gluings
    push("glued_a2", glued_arrow(field), true);
    push("glued_a3", glued_two_step(field), true);
    // comparison quivers
    push("double_arrow_2", double_arrow_quiver_algebra(2, field).algebra, true);
    push("double_arrow_3", double_arrow_quiver_algebra(3, field).algebra, true);
    push("beilinson_1", beilinson_algebra(1, field).algebra, true);
    push("beilinson_2", beilinson_algebra(2, field).algebra, true);
    // products with the acyclic factor: the radical is not d-stable, so
    // these exercise the internal/external machinery; the construction
    // degenerates on them, so they sit out of the endomorphism suite
    push(
        "contractible_times_point",
        DGAlgebra::direct_product(
            &dual_numbers(-1, field),
            &truncated_polynomial_algebra(1, field),
        ),
        false,
    );
    push(
        "contractible_times_exterior1",
        DGAlgebra::direct_product(&dual_numbers(-1, field), &exterior_algebra(1, field)),
        false,
    );

    let mut rng = Rng::new(seed);
    for k in 0..random_count {
        let algebra = match k % 3 {
            0 => random_two_vertex(&mut rng, field),
            1 => random_three_vertex(&mut rng, field),
            _ => random_parallel_pair(&mut rng, field),
        };
        push(&format!("random_{k}"), algebra, true);
    }
    entries
}

/// The standard corpus: deterministic families and eight random members
/// under the fixed seed.
pub fn corpus(field: FieldSpec) -> Vec<CorpusEntry> {
    corpus_with(field, CORPUS_SEED, 8)
}

/// Random dense matrix with entries in -3..=3, for the substrate checks.
pub fn random_matrix(rng: &mut Rng, field: FieldSpec, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(field, rows, cols, |_, _| field.from_i64((rng.below(7) as i64) - 3))
}

/// A random complex on up to four degrees, built as a sum of shifted
/// two-term identity complexes and zero lines, conjugated by random
/// invertible changes of basis so d^2 = 0 holds by construction.
pub fn random_complex(rng: &mut Rng, field: FieldSpec) -> crate::complexes::Complex {
    use crate::complexes::{Complex, GradedSpace};
    use std::collections::BTreeMap;

    let lo = -1i64;
    let hi = 2i64;
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    let mut pair_count: BTreeMap<i64, usize> = BTreeMap::new();
    for q in lo..=hi {
        dims.insert(q, 0);
    }
    // seed with free summands: pairs spanning (q, q+1) and single lines
    for q in lo..=hi {
        let lines = rng.below(3) as usize;
        *dims.get_mut(&q).unwrap() += lines;
        if q < hi {
            let pairs = rng.below(3) as usize;
            *pair_count.entry(q).or_insert(0) += pairs;
            *dims.get_mut(&q).unwrap() += pairs;
            *dims.get_mut(&(q + 1)).unwrap() += pairs;
        }
    }
    let mut d: BTreeMap<i64, Mat> = BTreeMap::new();
    for q in lo..hi {
        let rows = dims[&(q + 1)];
        let cols = dims[&q];
        if rows == 0 || cols == 0 {
            continue;
        }
        // identity blocks: the pairs of degree q occupy the last `pairs`
        // columns of degree q and the first `pairs` rows of degree q+1
        let pairs = pair_count.get(&q).copied().unwrap_or(0);
        let mut block = Mat::zeros(field, rows, cols);
        for p in 0..pairs {
            block.set(p, cols - pairs + p, field.one());
        }
        d.insert(q, block);
    }
    // conjugate by random invertible matrices per degree
    let mut change: BTreeMap<i64, (Mat, Mat)> = BTreeMap::new();
    for (&q, &n) in &dims {
        if n == 0 {
            continue;
        }
        let (m, inv) = random_invertible(rng, field, n);
        change.insert(q, (m, inv));
    }
    let d: BTreeMap<i64, Mat> = d
        .into_iter()
        .map(|(q, block)| {
            let left = change.get(&(q + 1)).map(|(m, _)| m.clone());
            let right = change.get(&q).map(|(_, inv)| inv.clone());
            let b = match (left, right) {
                (Some(l), Some(r)) => l.mul(&block).mul(&r),
                _ => block,
            };
            (q, b)
        })
        .collect();
    let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|(_, n)| *n > 0).collect();
    Complex::new(field, GradedSpace::from_dims(dims), d).expect("conjugated sum is a complex")
}

fn random_invertible(rng: &mut Rng, field: FieldSpec, n: usize) -> (Mat, Mat) {
    // unit upper triangular times unit lower triangular
    let mut upper = Mat::identity(field, n);
    let mut lower = Mat::identity(field, n);
    for r in 0..n {
        for c in (r + 1)..n {
            upper.set(r, c, field.from_i64(rng.small_int()));
            lower.set(c, r, field.from_i64(rng.small_int()));
        }
    }
    let m = lower.mul(&upper);
    let inv = m.inverse().expect("triangular product is invertible");
    (m, inv)
}

/// A random chain map between two random complexes, sampled uniformly from
/// the solution space of the commuting constraints.
pub fn random_chain_map(
    rng: &mut Rng,
    field: FieldSpec,
    source: &crate::complexes::Complex,
    target: &crate::complexes::Complex,
) -> crate::complexes::ChainMap {
    use crate::complexes::ChainMap;
    use crate::exactlin::RowReducer;
    use std::collections::BTreeMap;

    // unknowns: per degree q, entries of the block target_dim(q) x source_dim(q)
    let unknown_degrees: Vec<i64> = source
        .space()
        .degrees()
        .filter(|q| target.dim(*q) > 0 && source.dim(*q) > 0)
        .collect();
    let mut offsets: BTreeMap<i64, usize> = BTreeMap::new();
    let mut total = 0usize;
    for &q in &unknown_degrees {
        offsets.insert(q, total);
        total += target.dim(q) * source.dim(q);
    }
    // the commuting constraint at q lives in Hom(source^q, target^{q+1})
    // and must be imposed for every source degree, unknowns or not
    let degrees: Vec<i64> = source.space().degrees().collect();
    let mut reducer = RowReducer::new(field, total);
    for &q in &degrees {
        // d_tgt(q) * F_q = F_{q+1} * d_src(q), one row per matrix entry
        let dt = target.d(q);
        let ds = source.d(q);
        for r in 0..target.dim(q + 1) {
            for c in 0..source.dim(q) {
                let mut row = vec![field.zero(); total];
                let mut nonzero = false;
                if let Some(&off) = offsets.get(&q) {
                    for i in 0..target.dim(q) {
                        let a = dt.at(r, i);
                        if !a.is_zero() {
                            row[off + i * source.dim(q) + c] = a.clone();
                            nonzero = true;
                        }
                    }
                }
                if let Some(&off) = offsets.get(&(q + 1)) {
                    for j in 0..source.dim(q + 1) {
                        let a = ds.at(j, c);
                        if !a.is_zero() {
                            let idx = off + r * source.dim(q + 1) + j;
                            row[idx] = &row[idx] - a;
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    reducer.add_row(row);
                }
            }
        }
    }
    let kernel = if reducer.rank() == 0 {
        Mat::identity(field, total)
    } else {
        reducer.basis().kernel_basis()
    };
    // random combination of the kernel basis
    let mut flat = vec![field.zero(); total];
    for k in 0..kernel.rows() {
        let coef = field.from_i64(rng.small_int());
        if coef.is_zero() {
            continue;
        }
        for (f, v) in flat.iter_mut().zip(kernel.row(k)) {
            if !v.is_zero() {
                *f = &*f + &(&coef * v);
            }
        }
    }
    let mut blocks = BTreeMap::new();
    for &q in &unknown_degrees {
        let off = offsets[&q];
        let block = Mat::from_fn(field, target.dim(q), source.dim(q), |r, c| {
            flat[off + r * source.dim(q) + c].clone()
        });
        blocks.insert(q, block);
    }
    ChainMap::new(source.clone(), target.clone(), blocks)
        .expect("sampled from the chain-map solution space")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::a_n_quiver_algebra;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn corpus_members_validate() {
        let entries = corpus(q());
        assert!(entries.len() >= 20, "need at least 20 corpus members");
        for e in &entries {
            assert!(
                e.algebra.validate().is_empty(),
                "corpus member {} fails validation",
                e.name
            );
            assert!(e.algebra.dim() <= 24, "corpus member {} too large", e.name);
            if e.auslander {
                assert!(!e.algebra.is_acyclic(), "{} must not be acyclic", e.name);
            }
        }
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = corpus(q());
        let b = corpus(q());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.algebra, y.algebra);
        }
    }

    #[test]
    fn glued_linear_quivers_match_path_algebras() {
        let a2 = glued_arrow(q());
        assert_eq!(a2.dim(), 3);
        let a3 = glued_two_step(q());
        assert_eq!(a3.dim(), 6);
        assert!(a3.validate().is_empty());
        let direct = a_n_quiver_algebra(3, q());
        assert_eq!(a3.dim(), direct.algebra.dim());
    }

    #[test]
    fn random_complexes_are_complexes() {
        let mut rng = Rng::new(7);
        for _ in 0..20 {
            let c = random_complex(&mut rng, q());
            // construction already validates d^2 = 0; sanity-check dims
            assert!(c.total_dim() <= 40);
        }
    }

    #[test]
    fn random_chain_maps_commute() {
        let mut rng = Rng::new(11);
        for _ in 0..10 {
            let a = random_complex(&mut rng, q());
            let b = random_complex(&mut rng, q());
            // ChainMap::new validates commuting squares
            let _ = random_chain_map(&mut rng, q(), &a, &b);
        }
    }
}
