// index-based loops over matrices are the house style here
#![allow(clippy::needless_range_loop)]

//! Module-level invariants checked against independent oracles and on the
//! corpus, complementing the acceptance suite.

use dgalg::auslander::{auslander_data, gram_matrix, verify_semisimple_h, verify_triangular};
use dgalg::builders::truncated_polynomial_algebra;
use dgalg::complexes::cone;
use dgalg::corpus::{corpus, random_chain_map, random_complex, random_matrix, Rng};
use dgalg::dga::DGModule;
use dgalg::exactlin::{quotient_map, subspace_ops, FieldSpec, Mat, Scalar, Subspace};
use dgalg::homalg::{
    end_dga, hom_complex, verify_composition_leibniz, verify_right_linearity,
};
use std::sync::Arc;

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

/// Determinant by cofactor expansion; independent of the rref path.
fn det_cofactor(m: &Mat) -> Scalar {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return q().one();
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = q().zero();
    for c in 0..n {
        if m.at(0, c).is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
        let minor = det_cofactor(&m.submatrix(&rows, &cols));
        let term = m.at(0, c) * &minor;
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Rank as the size of the largest nonzero minor.
fn rank_by_minors(m: &Mat) -> usize {
    let max = m.rows().min(m.cols());
    for size in (1..=max).rev() {
        let row_sets = subsets(m.rows(), size);
        let col_sets = subsets(m.cols(), size);
        for rs in &row_sets {
            for cs in &col_sets {
                if !det_cofactor(&m.submatrix(rs, cs)).is_zero() {
                    return size;
                }
            }
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[test]
fn rank_matches_minor_enumeration() {
    let mut rng = Rng::new(0x0A11_CE00);
    for _ in 0..40 {
        let m = random_matrix(&mut rng, q(), 4, 5);
        assert_eq!(m.rank(), rank_by_minors(&m));
    }
}

#[test]
fn subspace_dimension_formula() {
    let mut rng = Rng::new(0x5AB5_0001);
    for _ in 0..120 {
        let ambient = 2 + (rng.below(4) as usize);
        let ra = 1 + (rng.below(3) as usize);
        let a = Subspace::from_rows(&random_matrix(&mut rng, q(), ra, ambient));
        let rb = 1 + (rng.below(3) as usize);
        let b = Subspace::from_rows(&random_matrix(&mut rng, q(), rb, ambient));
        let ops = subspace_ops(&a, &b).unwrap();
        assert_eq!(
            ops.sum.dim() + ops.intersection.dim(),
            a.dim() + b.dim(),
            "dimension formula"
        );
        assert!(ops.sum.contains(&a).unwrap());
        assert!(ops.sum.contains(&b).unwrap());
        assert!(a.contains(&ops.intersection).unwrap());
        assert!(b.contains(&ops.intersection).unwrap());
    }
}

#[test]
fn projection_section_identity() {
    let mut rng = Rng::new(0x9807_1234);
    for _ in 0..120 {
        let ambient = 1 + (rng.below(6) as usize);
        let rows = rng.below(1 + ambient as u64) as usize;
        let sub = Subspace::from_rows(&random_matrix(&mut rng, q(), rows, ambient));
        let (proj, sect) = quotient_map(ambient, &sub);
        assert_eq!(proj.mul(&sect), Mat::identity(q(), proj.rows()));
        for r in 0..sub.basis().rows() {
            assert!(proj.apply(sub.basis().row(r)).iter().all(Scalar::is_zero));
        }
    }
}

#[test]
fn cohomology_against_subspace_quotient_oracle() {
    let mut rng = Rng::new(0xC0C0_55AA);
    for _ in 0..60 {
        let c = random_complex(&mut rng, q());
        let h = c.cohomology();
        for deg in c.space().degrees().collect::<Vec<_>>() {
            // oracle: kernel and image as canonical subspaces
            let kernel = Subspace::from_rows(&c.d(deg).kernel_basis());
            let image_rows = c.d(deg - 1).transpose();
            let image = Subspace::from_rows(&image_rows);
            assert!(kernel.contains(&image).unwrap(), "boundaries are cocycles");
            assert_eq!(h.dim(deg), kernel.dim() - image.dim(), "degree {deg}");
        }
    }
}

#[test]
fn cone_long_exact_rank_identity() {
    let mut rng = Rng::new(0x1E57_0CEE);
    for _ in 0..80 {
        let a = random_complex(&mut rng, q());
        let b = random_complex(&mut rng, q());
        let f = random_chain_map(&mut rng, q(), &a, &b);
        let k = cone(&f);
        let ha = a.cohomology();
        let hb = b.cohomology();
        let hk = k.cohomology();
        let degrees: Vec<i64> = hk
            .dims()
            .keys()
            .copied()
            .chain(ha.dims().keys().map(|&d| d - 1))
            .chain(hb.dims().keys().copied())
            .collect();
        for deg in degrees {
            let rk_here = f.induced_on_cohomology(deg, &ha, &hb).rank();
            let rk_next = f.induced_on_cohomology(deg + 1, &ha, &hb).rank();
            let expected = (hb.dim(deg) - rk_here) + (ha.dim(deg + 1) - rk_next);
            assert_eq!(hk.dim(deg), expected, "exactness at degree {deg}");
        }
    }
}

#[test]
fn hom_bases_are_right_linear_beyond_generators() {
    for entry in corpus(q()) {
        if entry.algebra.dim() > 6 {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let regular = Arc::new(DGModule::regular(&alg));
        let hom = hom_complex(&regular, &regular).unwrap();
        assert!(verify_right_linearity(&hom), "{}", entry.name);
    }
}

#[test]
fn composition_satisfies_leibniz_on_corpus() {
    for entry in corpus(q()) {
        if entry.algebra.dim() > 5 {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let regular = Arc::new(DGModule::regular(&alg));
        let end = end_dga(&regular);
        assert!(verify_composition_leibniz(&end), "{}", entry.name);
    }
}

#[test]
fn hom_over_end_matches_hom_over_base_in_all_pairs() {
    for entry in corpus(q()) {
        if !entry.auslander || entry.algebra.dim() > 5 {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let data = auslander_data(&alg).unwrap();
        for i in 1..=data.nilpotency {
            for j in 1..=data.nilpotency {
                assert!(
                    dgalg::auslander::homall_dims_match(&data, i, j),
                    "{} at ({i},{j})",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn p_modules_decompose_the_endomorphism_algebra() {
    for entry in corpus(q()) {
        if !entry.auslander || entry.algebra.dim() > 6 {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let data = auslander_data(&alg).unwrap();
        let total: usize = data.p_modules.iter().map(|p| p.dim()).sum();
        assert_eq!(total, data.end.dim(), "{}", entry.name);
    }
}

#[test]
fn gram_matrices_are_unitriangular_on_corpus() {
    for entry in corpus(q()) {
        if !entry.auslander {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let data = auslander_data(&alg).unwrap();
        let tri = verify_triangular(&data);
        assert!(tri.pass(), "{}", entry.name);
        for normalize in [false, true] {
            let g = gram_matrix(&data, normalize);
            for i in 0..g.len() {
                for j in 0..i {
                    assert_eq!(g[i][j], 0, "{} below diagonal", entry.name);
                }
                assert!(g[i][i] >= 1, "{} diagonal must be positive", entry.name);
            }
        }
    }
}

#[test]
fn prime_field_run_matches_structure() {
    // exact genericity over a prime field large enough for the guards
    let f101 = FieldSpec::prime_field(101).unwrap();
    let alg = Arc::new(truncated_polynomial_algebra(3, f101));
    let data = auslander_data(&alg).unwrap();
    assert_eq!(data.nilpotency, 3);
    assert_eq!(data.end.dim(), 14);
    assert!(verify_triangular(&data).pass());
    for i in 1..=3 {
        assert!(verify_semisimple_h(&data, i).unwrap().pass());
    }
    let g = gram_matrix(&data, true);
    let rational = {
        let alg = Arc::new(truncated_polynomial_algebra(3, q()));
        gram_matrix(&auslander_data(&alg).unwrap(), true)
    };
    assert_eq!(g, rational);
}
