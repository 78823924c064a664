//! Cross-checks against routes that do not share code with the module under test.

use nalgebra::DMatrix;
use opschmidt_core::linalg::{BipartiteDims, ComplexMatrix};
use opschmidt_core::qft::{a_matrix, b_matrix, closed_form_decomposition, enumerate_classes, qft_bipartite, rho_closed_form};
use opschmidt_core::schmidt::{left_factors_from_right, realign, reduced_density, schmidt_decompose, DEFAULT_REL_TOL};
use opschmidt_core::svd::svd;
use opschmidt_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dims(n1: usize, n2: usize) -> BipartiteDims {
    BipartiteDims::new(n1, n2).unwrap()
}

fn to_nalgebra(m: &ComplexMatrix) -> DMatrix<nalgebra::Complex<f64>> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        let z = m[(r, c)];
        nalgebra::Complex::new(z.re, z.im)
    })
}

/// Brute-force `F_N` straight from `exp(2πi·t·s/N)/√N`, no integer reduction.
fn naive_qft(n: usize) -> ComplexMatrix {
    let scale = 1.0 / (n as f64).sqrt();
    ComplexMatrix::from_fn(n, n, |t, s| {
        let angle = 2.0 * std::f64::consts::PI * (t * s) as f64 / n as f64;
        Complex64::from_polar(scale, angle)
    })
}

#[test]
fn jacobi_svd_agrees_with_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..50 {
        let rows = rng.gen_range(1..=16);
        let cols = rng.gen_range(1..=16);
        let m = ComplexMatrix::from_fn(rows, cols, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let ours = svd(&m).unwrap().singular_values;
        let mut theirs: Vec<f64> = to_nalgebra(&m).singular_values().iter().copied().collect();
        theirs.sort_by(|a, b| b.total_cmp(a));
        assert_eq!(ours.len(), theirs.len());
        for (a, b) in ours.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}

#[test]
fn realigned_qft_spectrum_agrees_with_nalgebra() {
    for (n1, n2) in [(2, 3), (3, 5), (4, 6), (5, 3), (6, 4)] {
        let d = dims(n1, n2);
        let m = realign(&naive_qft(d.n()), d).unwrap();
        let mut theirs: Vec<f64> = to_nalgebra(&m).singular_values().iter().copied().collect();
        theirs.sort_by(|a, b| b.total_cmp(a));
        let closed = closed_form_decomposition(d).coefficients();
        for (k, c) in closed.iter().enumerate() {
            assert!((c - theirs[k]).abs() < 1e-9);
        }
        assert!(theirs[closed.len()..].iter().all(|&s| s < 1e-9));
    }
}

#[test]
fn qft_matches_naive_construction() {
    for n in 2..=40 {
        let d = dims(2, n);
        let diff = qft_bipartite(d).max_abs_diff(&naive_qft(2 * n)).unwrap();
        assert!(diff < 1e-12);
    }
}

#[test]
fn closed_form_density_matches_partial_trace() {
    for n1 in 2..=8 {
        for n2 in 2..=8 {
            let d = dims(n1, n2);
            let numeric = reduced_density(&naive_qft(d.n()), d).unwrap();
            assert!(rho_closed_form(d).max_abs_diff(&numeric).unwrap() < 1e-12, "({n1},{n2})");
        }
    }
}

#[test]
fn density_is_weighted_projector_sum() {
    // ρ = Σ_C (N1/N2)|C| · |B_C⟩⟨B_C|
    let d = dims(3, 7);
    let mut rho = ComplexMatrix::zeros(49, 49);
    for c in enumerate_classes(d) {
        let b = b_matrix(&c, d);
        let w = 3.0 * c.size() as f64 / 7.0;
        let outer = ComplexMatrix::from_fn(49, 49, |i, j| b.data()[i] * b.data()[j].conj() * w);
        rho.add_scaled(Complex64::new(1.0, 0.0), &outer).unwrap();
    }
    assert!(rho.max_abs_diff(&rho_closed_form(d)).unwrap() < 1e-12);
}

#[test]
fn left_factor_recovery_reproduces_closed_form() {
    for (n1, n2) in [(2, 3), (3, 5), (4, 6), (3, 2)] {
        let d = dims(n1, n2);
        let f = qft_bipartite(d);
        let classes = enumerate_classes(d);
        let rights: Vec<ComplexMatrix> = classes.iter().map(|c| b_matrix(c, d)).collect();
        let mus: Vec<f64> = classes.iter().map(|c| (n1 * c.size()) as f64 / n2 as f64).collect();
        let lefts = left_factors_from_right(&f, d, &rights, &mus).unwrap();
        for (c, a) in classes.iter().zip(&lefts) {
            assert!(a.max_abs_diff(&a_matrix(c, d)).unwrap() < 1e-12);
        }
    }
}

#[test]
fn random_unitary_reconstruction() {
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    for (n1, n2) in [(2, 3), (3, 2)] {
        let d = dims(n1, n2);
        for _ in 0..20 {
            let g = ComplexMatrix::from_fn(6, 6, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let t = svd(&g).unwrap();
            let u = t.left.matmul(&t.right.dagger()).unwrap();
            let dec = schmidt_decompose(&u, d, DEFAULT_REL_TOL).unwrap();
            let rights: Vec<ComplexMatrix> = dec.terms.iter().map(|t| t.right.clone()).collect();
            let mus: Vec<f64> = dec.terms.iter().map(|t| t.coefficient * t.coefficient).collect();
            let lefts = left_factors_from_right(&u, d, &rights, &mus).unwrap();
            let mut rebuilt = ComplexMatrix::zeros(6, 6);
            for ((a, b), mu) in lefts.iter().zip(&rights).zip(&mus) {
                let k = opschmidt_core::linalg::tensor_product(a, b);
                rebuilt.add_scaled(Complex64::new(mu.sqrt(), 0.0), &k).unwrap();
            }
            assert!(rebuilt.distance(&u).unwrap() < 1e-10);
        }
    }
}
