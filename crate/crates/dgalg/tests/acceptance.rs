// index-based loops over matrices are the house style here
#![allow(clippy::needless_range_loop)]

//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime (run with `--nocapture` to see them).
//!
//! Criterion 2 is special: the dimension and block identities hold, but
//! the literal relations a_{i+1} b_i = 0, b_{i+1} a_i = 0 are provably
//! unrealizable in H of the shifted sum for the truncated polynomial
//! family (the junction kernels carry a single rank-one line, a basis
//! invariant, where those relations require two). The sign-twisted
//! presentation a_{i+1} a_i = 0, a_{i+1} b_i = b_{i+1} a_i is what the
//! computation realizes, and a supplementary test certifies it. The
//! criterion is asserted as stated and therefore fails; see the
//! repository notes for the analysis.

use dgalg::auslander::{
    auslander_data, compare_hom_with_quotient, end_of_shifted_sum, gram_matrix,
    quiver_comparison, semisimple_pipeline, verify_generation, verify_semisimple_h,
    verify_triangular, QuiverMatch, QuiverPresentationKind,
};
use dgalg::builders::exterior_algebra;
use dgalg::builders::{a_n_quiver_algebra, truncated_polynomial_algebra};
use dgalg::complexes::{cone, ChainMap};
use dgalg::corpus::{
    corpus, dual_numbers, glued_arrow, random_chain_map, random_complex, random_matrix, Rng,
};
use dgalg::dga::{
    external_dg_ideal, glue, ideal_power, internal_dg_ideal, jacobson_radical,
    lift_idempotent, subquotient_complex, Bimodule, DGAlgebra, GluingSpec,
};
use dgalg::exactlin::{FieldSpec, Mat, Scalar};
use std::sync::Arc;
use std::time::{Duration, Instant};

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

fn report(criterion: &str, start: Instant) {
    println!("ACCEPTANCE {criterion}: PASS ({:.2?})", start.elapsed());
}

#[test]
fn criterion_1_exterior_beilinson_identity() {
    let start = Instant::now();
    for n in 1..=3usize {
        let alg = Arc::new(exterior_algebra(n, q()));
        let data = auslander_data(&alg).unwrap();
        assert_eq!(data.k_modules.len(), n + 1, "exterior({n}) must yield n + 1 objects");
        for i in 1..=(n + 1) {
            let cert = verify_semisimple_h(&data, i).unwrap();
            assert_eq!(
                cert.h_graded_dims,
                [(0i64, 1usize)].into_iter().collect(),
                "End(K_{i}) of exterior({n}) must have H = k in degree 0"
            );
        }
        let shifted = end_of_shifted_sum(&data);
        for i in 1..=(n + 1) {
            for j in (i + 1)..=(n + 1) {
                let dims = &shifted.block_h_dims[&(i, j)];
                let want = binomial(n + 1, j - i);
                assert_eq!(
                    dims,
                    &[(0i64, want)].into_iter().collect(),
                    "block ({i},{j}) of exterior({n})"
                );
            }
        }
        let g = gram_matrix(&data, true);
        for i in 0..=n {
            for j in 0..=n {
                let want = if j >= i { binomial(n + 1, j - i) as i64 } else { 0 };
                assert_eq!(g[i][j], want, "gram[{i}][{j}] of exterior({n})");
            }
        }
    }
    assert!(start.elapsed() < Duration::from_secs(60), "criterion 1 exceeded 60 s");
    report("1 (exterior/Beilinson identity)", start);
}

#[test]
fn criterion_2_truncated_quiver_identity() {
    let start = Instant::now();
    for n in 2..=4usize {
        let alg = Arc::new(truncated_polynomial_algebra(n, q()));
        let data = auslander_data(&alg).unwrap();
        assert_eq!(data.k_modules.len(), n);
        let shifted = end_of_shifted_sum(&data);
        assert!(shifted.h_concentrated_in_degree_zero(), "H(K') concentrated in degree 0");
        assert_eq!(shifted.total_h_dim(), n * n, "total dim of H(K') must be n^2");
        for i in 1..=n {
            assert_eq!(shifted.block_h0_indices(i, i).len(), 1, "diagonal block ({i},{i})");
            for j in (i + 1)..=n {
                assert_eq!(shifted.block_h0_indices(i, j).len(), 2, "block ({i},{j})");
            }
        }
        let stated = quiver_comparison(&shifted, QuiverPresentationKind::Orthogonal);
        let twisted = quiver_comparison(&shifted, QuiverPresentationKind::Interlaced);
        println!(
            "  truncated({n}): stated relations -> {stated:?}; interlaced -> {twisted:?}"
        );
        assert_eq!(
            stated,
            QuiverMatch::Verified,
            "the relations a_(i+1) b_i = 0, b_(i+1) a_i = 0 do not hold in H(K') for \
             truncated({n}); the computation realizes the interlaced presentation \
             a_(i+1) a_i = 0, a_(i+1) b_i = b_(i+1) a_i instead ({twisted:?})"
        );
    }
    assert!(start.elapsed() < Duration::from_secs(60), "criterion 2 exceeded 60 s");
    report("2 (truncated/quiver identity)", start);
}

/// The block structure of H(K') for the truncated family does carry a
/// double-arrow quiver presentation; it is the interlaced one, certified
/// here with an explicit basis search plus span and dimension checks.
#[test]
fn criterion_2_supplement_interlaced_presentation() {
    let start = Instant::now();
    for n in 2..=4usize {
        let alg = Arc::new(truncated_polynomial_algebra(n, q()));
        let data = auslander_data(&alg).unwrap();
        let shifted = end_of_shifted_sum(&data);
        assert_eq!(
            quiver_comparison(&shifted, QuiverPresentationKind::Interlaced),
            QuiverMatch::Verified,
            "interlaced presentation for truncated({n})"
        );
    }
    report("2s (interlaced quiver presentation, supplement)", start);
}

#[test]
fn criterion_3_theorem_suite_on_corpus() {
    let start = Instant::now();
    let entries = corpus(q());
    let eligible: Vec<_> = entries.iter().filter(|e| e.auslander).collect();
    assert!(eligible.len() >= 20, "corpus must contain at least 20 eligible algebras");
    for entry in eligible {
        assert!(entry.algebra.dim() <= 24);
        let alg = Arc::new(entry.algebra.clone());
        let data = auslander_data(&alg).unwrap();
        let tri = verify_triangular(&data);
        assert!(tri.pass(), "triangularity fails for {}", entry.name);
        for i in 1..=data.nilpotency {
            let cert = verify_semisimple_h(&data, i).unwrap();
            assert!(cert.pass(), "semisimplicity fails for {} at {i}", entry.name);
        }
        for i in 2..=data.nilpotency {
            let rep = semisimple_pipeline(&data, i);
            assert!(rep.pass(), "pipeline fails for {} at {i}: {:?}", entry.name, rep.steps);
        }
        let gen = verify_generation(&data);
        assert!(gen.pass(), "generation fails for {}", entry.name);
    }
    assert!(start.elapsed() < Duration::from_secs(300), "criterion 3 exceeded 5 minutes");
    report("3 (structural theorem suite on the corpus)", start);
}

#[test]
fn criterion_4_radical_ideals_and_acyclic_gap() {
    let start = Instant::now();
    for entry in corpus(q()) {
        let alg = &entry.algebra;
        let radical = jacobson_radical(alg).unwrap();
        let n = alg.dim();
        for p in 1..=n {
            let power = ideal_power(alg, &radical, p);
            let internal = internal_dg_ideal(alg, &power);
            let external = external_dg_ideal(alg, &power);
            // containments with d-closure on both ends
            assert!(
                power.subspace().contains(internal.subspace()).unwrap(),
                "{}: I- inside I at power {p}",
                entry.name
            );
            assert!(
                external.subspace().contains(power.subspace()).unwrap(),
                "{}: I inside I+ at power {p}",
                entry.name
            );
            assert!(internal.graded().is_d_closed(alg));
            assert!(external.graded().is_d_closed(alg));
            // fixed point when the power is already d-stable
            if power.is_d_closed(alg) {
                assert_eq!(internal.subspace(), power.subspace());
                assert_eq!(external.subspace(), power.subspace());
            }
            if power.is_zero() {
                break;
            }
        }
        // the gap J+ / J- is acyclic
        let internal = internal_dg_ideal(alg, &radical);
        let external = external_dg_ideal(alg, &radical);
        let gap = subquotient_complex(alg, external.subspace(), internal.subspace());
        assert!(gap.is_acyclic(), "{}: J+/J- must be acyclic", entry.name);
    }
    report("4 (internal/external radicals and the acyclic gap)", start);
}

#[test]
fn criterion_5_hom_quotient_identity() {
    let start = Instant::now();
    for entry in corpus(q()) {
        if !entry.auslander {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let data = auslander_data(&alg).unwrap();
        for i in 1..=data.nilpotency {
            for j in 1..=i {
                let cmp = compare_hom_with_quotient(&data, i, j).unwrap_or_else(|e| {
                    panic!("{}: evaluation iso fails at ({i},{j}): {e}", entry.name)
                });
                assert_eq!(cmp.hom_dims, cmp.quotient_dims);
                if i == data.nilpotency && j == data.nilpotency {
                    assert!(cmp.multiplicative, "{}: End(P_n) = R as algebras", entry.name);
                }
            }
        }
    }
    report("5 (Hom against quotient identity and End(P_n) = R)", start);
}

#[test]
fn criterion_6_idempotent_lifting() {
    let start = Instant::now();
    for entry in corpus(q()) {
        if !entry.auslander {
            continue;
        }
        let alg = Arc::new(entry.algebra.clone());
        let data = auslander_data(&alg).unwrap();
        let e_alg = data.end.algebra();
        for range in &data.summands {
            // the projection onto one summand as a degree-zero cocycle
            let mut mat = Mat::zeros(q(), data.big_m.dim(), data.big_m.dim());
            for i in range.clone() {
                mat.set(i, i, q().one());
            }
            let coords = data
                .end
                .coords_of_map(0, &mat)
                .expect("summand projection is an endomorphism");
            let z = lift_idempotent(e_alg, &coords).unwrap_or_else(|e| {
                panic!("{}: lifting fails: {e}", entry.name)
            });
            // re-verify the three equations independently
            assert_eq!(e_alg.mult_vec(&z, &z), z, "{}: z^2 = z", entry.name);
            assert!(e_alg.d_vec(&z).iter().all(Scalar::is_zero), "{}: dz = 0", entry.name);
            let diff: Vec<Scalar> = z.iter().zip(&coords).map(|(a, b)| a - b).collect();
            let h = e_alg.complex().cohomology();
            let deg0 = e_alg.degree_indices()[&0].clone();
            let local: Vec<Scalar> = deg0.iter().map(|&k| diff[k].clone()).collect();
            let class = h.class_coords(0, &local).expect("difference is a cocycle");
            assert!(class.iter().all(Scalar::is_zero), "{}: [z] = [e]", entry.name);
        }
    }
    report("6 (idempotent lifting on corpus endomorphism algebras)", start);
}

#[test]
fn criterion_7_gluing() {
    let start = Instant::now();
    // T = 0 gives the direct product
    let r = exterior_algebra(1, q());
    let s = truncated_polynomial_algebra(3, q());
    let glued = glue(&GluingSpec {
        r: r.clone(),
        s: s.clone(),
        t: Bimodule::zero(q(), &r, &s),
    })
    .unwrap();
    let product = DGAlgebra::direct_product(&r, &s);
    assert_eq!(glued.algebra.dim(), product.dim());
    for i in 0..product.dim() {
        for j in 0..product.dim() {
            assert_eq!(glued.algebra.mult_basis(i, j), product.mult_basis(i, j));
        }
    }

    // glue(k, k, k) is the two-vertex single-arrow path algebra
    let arrow = glued_arrow(q());
    let direct = a_n_quiver_algebra(2, q());
    assert_eq!(arrow.dim(), direct.algebra.dim());
    assert_eq!(arrow.degrees(), direct.algebra.degrees());
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(
                arrow.mult_basis(i, j),
                direct.algebra.mult_basis(i, j),
                "structure constants at ({i},{j})"
            );
        }
    }

    // corner semi-orthogonality across a batch of gluings
    let specs = vec![
        GluingSpec { r: r.clone(), s: s.clone(), t: Bimodule::zero(q(), &r, &s) },
        GluingSpec {
            r: truncated_polynomial_algebra(1, q()),
            s: truncated_polynomial_algebra(1, q()),
            t: Bimodule {
                labels: vec!["t".into()],
                degrees: vec![0],
                left: vec![Mat::identity(q(), 1)],
                right: vec![Mat::identity(q(), 1)],
                diff: Mat::zeros(q(), 1, 1),
            },
        },
        {
            // the contractible algebra as a bimodule over itself and a point,
            // so the gluing carries a nontrivial differential on T
            let r = dual_numbers(-1, q());
            let right = (0..r.dim())
                .map(|a| r.right_mult_matrix(&r.basis_vector(a)))
                .collect();
            GluingSpec {
                s: truncated_polynomial_algebra(1, q()),
                t: Bimodule {
                    labels: r.labels().to_vec(),
                    degrees: r.degrees().to_vec(),
                    left: vec![Mat::identity(q(), r.dim())],
                    right,
                    diff: r.diff().clone(),
                },
                r,
            }
        },
    ];
    for spec in &specs {
        let glued = glue(spec).unwrap(); // corner identities asserted inside
        let a = &glued.algebra;
        for i in 0..a.dim() {
            let b = a.basis_vector(i);
            let corner = a.mult_vec(&glued.e_r, &a.mult_vec(&b, &glued.e_s));
            assert!(corner.iter().all(Scalar::is_zero));
        }
    }
    report("7 (gluing: products, arrow algebra, corner orthogonality)", start);
}

#[test]
fn criterion_8_linear_substrate() {
    let start = Instant::now();
    let mut instances = 0usize;

    // rank-nullity and rref idempotence
    let mut rng = Rng::new(0xACCE_5508);
    for _ in 0..400 {
        let rows = 1 + (rng.below(5) as usize);
        let cols = 1 + (rng.below(5) as usize);
        let m = random_matrix(&mut rng, q(), rows, cols);
        let (r1, pivots) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2, "rref idempotence");
        let kernel = m.kernel_basis();
        assert_eq!(pivots.len() + kernel.rows(), cols, "rank-nullity");
        for k in 0..kernel.rows() {
            assert!(m.apply(kernel.row(k)).iter().all(Scalar::is_zero));
        }
        instances += 1;
    }

    // Euler characteristic conservation and the shift identity
    for _ in 0..350 {
        let c = random_complex(&mut rng, q());
        let h = c.cohomology();
        assert_eq!(c.euler_characteristic(), h.euler_characteristic());
        let k = (rng.below(5) as i64) - 2;
        let shifted = c.shift(k);
        let sh = shifted.cohomology();
        for (&deg, &dim) in sh.dims() {
            assert_eq!(dim, h.dim(deg + k), "shift moves cohomology");
        }
        instances += 1;
    }

    // quasi-isomorphism iff acyclic cone
    for _ in 0..300 {
        let a = random_complex(&mut rng, q());
        let b = random_complex(&mut rng, q());
        let f = random_chain_map(&mut rng, q(), &a, &b);
        assert_eq!(f.is_quasi_iso(), cone(&f).is_acyclic());
        // identity sanity inside the same loop
        let id = ChainMap::identity(&a);
        assert!(id.is_quasi_iso());
        instances += 1;
    }

    assert!(instances >= 1000, "need at least 1000 randomized instances, got {instances}");
    report("8 (linear-algebra substrate on randomized instances)", start);
}
