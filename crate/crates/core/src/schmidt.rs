//! Numerical operator-Schmidt decomposition.
//!
//! An operator `f` on `C^{n1} ⊗ C^{n2}` is rearranged ("realigned") into an
//! `n1² × n2²` matrix `M` with `M[j1·n1 + j2, l1·n2 + l2] = f[j1·n2 + l1, j2·n2 + l2]`.
//! Product operators `A ⊗ B` map to rank-one matrices `vec(A)·vec(B)ᵀ`, so an SVD
//! `M = Σ σ_k u_k v_k†` yields `f = Σ σ_k A_k ⊗ B_k` with `A_k = unvec(u_k)` and
//! `B_k = unvec(conj(v_k))`. The conjugate on the right factor is what makes
//! the reconstruction identity hold; dropping it silently breaks every
//! non-real operator.
//!
//! The same machinery handles operators between different bipartite spaces
//! through [`OperatorSplit`].

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{frobenius_norm, hs_inner, tensor_product, BipartiteDims, ComplexMatrix};
use crate::math;
use crate::svd::{hermitian_eigen, svd};

/// Default relative cutoff below which singular values count as zero.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Shape of an operator `C^{left_in} ⊗ C^{right_in} → C^{left_out} ⊗ C^{right_out}`.
///
/// Its matrix is `(left_out·right_out) × (left_in·right_in)`; left factors
/// are `left_out × left_in` and right factors `right_out × right_in`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OperatorSplit {
    pub left_out: usize,
    pub left_in: usize,
    pub right_out: usize,
    pub right_in: usize,
}

impl OperatorSplit {
    pub fn square(dims: BipartiteDims) -> Self {
        OperatorSplit { left_out: dims.n1(), left_in: dims.n1(), right_out: dims.n2(), right_in: dims.n2() }
    }

    pub fn operator_shape(&self) -> (usize, usize) {
        (self.left_out * self.right_out, self.left_in * self.right_in)
    }

    pub fn realigned_shape(&self) -> (usize, usize) {
        (self.left_out * self.left_in, self.right_out * self.right_in)
    }
}

/// One term `λ · A ⊗ B`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtTerm {
    pub coefficient: f64,
    pub left: ComplexMatrix,
    pub right: ComplexMatrix,
}

/// `f = Σ_k λ_k A_k ⊗ B_k` with `λ_k > 0` descending and HS-orthonormal
/// families `{A_k}` (`n1 × n1`) and `{B_k}` (`n2 × n2`).
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtDecomposition {
    pub dims: BipartiteDims,
    pub terms: Vec<SchmidtTerm>,
}

impl SchmidtDecomposition {
    /// Number of terms, i.e. the Schmidt number.
    pub fn schmidt_number(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficients(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.coefficient).collect()
    }

    /// `Σ λ_k²`; equals `‖f‖²` for an exact decomposition of `f`.
    pub fn coefficient_norm_sqr(&self) -> f64 {
        self.terms.iter().map(|t| t.coefficient * t.coefficient).sum()
    }

    /// `Σ λ_k A_k ⊗ B_k`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        reconstruct_terms(&self.terms, OperatorSplit::square(self.dims))
    }

    /// Largest deviation of the left and right Gram matrices from the identity.
    pub fn orthonormality_error(&self) -> (f64, f64) {
        let lefts: Vec<&ComplexMatrix> = self.terms.iter().map(|t| &t.left).collect();
        let rights: Vec<&ComplexMatrix> = self.terms.iter().map(|t| &t.right).collect();
        (gram_error(&lefts), gram_error(&rights))
    }

    /// Maximal term count `min(n1, n2)²` with all coefficients equal up to `tol`.
    pub fn is_completely_degenerate(&self, tol: f64) -> bool {
        let m = self.dims.n1().min(self.dims.n2());
        if self.terms.len() != m * m {
            return false;
        }
        let first = self.terms[0].coefficient;
        self.terms.iter().all(|t| (t.coefficient - first).abs() <= tol)
    }
}

/// Largest `|⟨X_i, X_j⟩ - δ_ij|` over a family.
pub fn gram_error(family: &[&ComplexMatrix]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate().skip(i) {
            let g = match hs_inner(a, b) {
                Ok(g) => g,
                Err(_) => return f64::INFINITY,
            };
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max(math::abs(g - Complex64::new(target, 0.0)));
        }
    }
    worst
}

/// `Σ λ A ⊗ B` for an arbitrary split.
pub fn reconstruct_terms(terms: &[SchmidtTerm], split: OperatorSplit) -> ComplexMatrix {
    let (r, c) = split.operator_shape();
    let mut out = ComplexMatrix::zeros(r, c);
    for t in terms {
        let k = tensor_product(&t.left, &t.right);
        out.add_scaled(Complex64::new(t.coefficient, 0.0), &k).expect("term shapes match the split");
    }
    out
}

/// Realignment for a general split:
/// `M[ra·left_in + ca, rb·right_in + cb] = f[ra·right_out + rb, ca·right_in + cb]`.
pub fn realign_split(f: &ComplexMatrix, split: OperatorSplit) -> Result<ComplexMatrix> {
    if f.shape() != split.operator_shape() {
        return Err(Error::dims("realign", split.operator_shape(), f.shape()));
    }
    let (rows, cols) = split.realigned_shape();
    let mut m = ComplexMatrix::zeros(rows, cols);
    for ra in 0..split.left_out {
        for rb in 0..split.right_out {
            for ca in 0..split.left_in {
                for cb in 0..split.right_in {
                    m[(ra * split.left_in + ca, rb * split.right_in + cb)] =
                        f[(ra * split.right_out + rb, ca * split.right_in + cb)];
                }
            }
        }
    }
    Ok(m)
}

/// Inverse of [`realign_split`].
pub fn unrealign_split(m: &ComplexMatrix, split: OperatorSplit) -> Result<ComplexMatrix> {
    if m.shape() != split.realigned_shape() {
        return Err(Error::dims("unrealign", split.realigned_shape(), m.shape()));
    }
    let (rows, cols) = split.operator_shape();
    let mut f = ComplexMatrix::zeros(rows, cols);
    for ra in 0..split.left_out {
        for rb in 0..split.right_out {
            for ca in 0..split.left_in {
                for cb in 0..split.right_in {
                    f[(ra * split.right_out + rb, ca * split.right_in + cb)] =
                        m[(ra * split.left_in + ca, rb * split.right_in + cb)];
                }
            }
        }
    }
    Ok(f)
}

/// Realigns an `n × n` operator on `C^{n1} ⊗ C^{n2}` into an `n1² × n2²` matrix.
pub fn realign(f: &ComplexMatrix, dims: BipartiteDims) -> Result<ComplexMatrix> {
    realign_split(f, OperatorSplit::square(dims))
}

pub fn unrealign(m: &ComplexMatrix, dims: BipartiteDims) -> Result<ComplexMatrix> {
    unrealign_split(m, OperatorSplit::square(dims))
}

fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::Domain("relative tolerance must lie in (0, 1)"));
    }
    Ok(())
}

/// Realignment + SVD for an arbitrary split. Keeps `σ_k > rel_tol · σ_max`.
///
/// Each left singular vector is rephased so that its first largest-magnitude
/// entry is real and positive; the right vector absorbs the opposite phase.
pub fn schmidt_terms(f: &ComplexMatrix, split: OperatorSplit, rel_tol: f64) -> Result<Vec<SchmidtTerm>> {
    check_rel_tol(rel_tol)?;
    let m = realign_split(f, split)?;
    if frobenius_norm(&m) == 0.0 {
        return Err(Error::Domain("cannot decompose the zero operator"));
    }
    let triple = svd(&m)?;
    let kept = triple.rank(rel_tol);

    let mut terms = Vec::with_capacity(kept);
    for k in 0..kept {
        let mut u = triple.left.column(k);
        let mut v = triple.right.column(k);
        let biggest = u.iter().map(|&z| math::abs(z)).fold(0.0, f64::max);
        let pivot = u
            .iter()
            .copied()
            .find(|&z| math::abs(z) >= biggest * (1.0 - 1e-12))
            .expect("nonempty singular vector");
        let rot = math::phase(pivot).conj();
        u.iter_mut().for_each(|z| *z *= rot);
        v.iter_mut().for_each(|z| *z *= rot);

        let left = ComplexMatrix::new(split.left_out, split.left_in, u)?;
        let right = ComplexMatrix::new(split.right_out, split.right_in, v.iter().map(|z| z.conj()).collect())?;
        terms.push(SchmidtTerm { coefficient: triple.singular_values[k], left, right });
    }
    Ok(terms)
}

/// Operator-Schmidt decomposition of `f` on `C^{n1} ⊗ C^{n2}` by realignment + SVD.
pub fn schmidt_decompose(f: &ComplexMatrix, dims: BipartiteDims, rel_tol: f64) -> Result<SchmidtDecomposition> {
    let terms = schmidt_terms(f, OperatorSplit::square(dims), rel_tol)?;
    Ok(SchmidtDecomposition { dims, terms })
}

/// Reduced density superoperator on `B(C^{n2})`, as an `n2² × n2²` matrix:
/// `ρ[l1·n2 + l2, m1·n2 + m2] = Σ_{j1,j2} f[j1·n2 + l1, j2·n2 + l2] · conj(f[j1·n2 + m1, j2·n2 + m2])`.
///
/// In terms of `M = realign(f)` this is `Mᵀ·conj(M)`, the entrywise conjugate
/// of `M†M`; both have the squared Schmidt coefficients as nonzero spectrum.
pub fn reduced_density(f: &ComplexMatrix, dims: BipartiteDims) -> Result<ComplexMatrix> {
    let n = dims.n();
    if f.shape() != (n, n) {
        return Err(Error::dims("reduced_density", (n, n), f.shape()));
    }
    let (n1, n2) = (dims.n1(), dims.n2());
    let q = n2 * n2;
    let block = |j1: usize, j2: usize, l: usize| f[(j1 * n2 + l / n2, j2 * n2 + l % n2)];
    let mut rho = ComplexMatrix::zeros(q, q);
    for j1 in 0..n1 {
        for j2 in 0..n1 {
            for l in 0..q {
                let x = block(j1, j2, l);
                if x.norm_sqr() == 0.0 {
                    continue;
                }
                for m in 0..q {
                    rho[(l, m)] += x * block(j1, j2, m).conj();
                }
            }
        }
    }
    Ok(rho)
}

/// Recovers left factors from right factors:
/// `A_ℓ[j1, j2] = μ_ℓ^{-1/2} Σ_{l1,l2} f[j1·n2 + l1, j2·n2 + l2] · conj(B_ℓ[l1, l2])`.
///
/// `rights` must be HS-orthonormal eigenvectors of [`reduced_density`] with
/// eigenvalues `mus`; the orthonormality is checked to `1e-10`.
pub fn left_factors_from_right(
    f: &ComplexMatrix,
    dims: BipartiteDims,
    rights: &[ComplexMatrix],
    mus: &[f64],
) -> Result<Vec<ComplexMatrix>> {
    let (n1, n2) = (dims.n1(), dims.n2());
    if f.shape() != (dims.n(), dims.n()) {
        return Err(Error::dims("left_factors_from_right", (dims.n(), dims.n()), f.shape()));
    }
    if rights.len() != mus.len() {
        return Err(Error::Domain("one eigenvalue is required per right factor"));
    }
    if mus.iter().any(|&mu| mu.is_nan() || mu <= 0.0) {
        return Err(Error::Domain("eigenvalues must be strictly positive"));
    }
    for b in rights {
        if b.shape() != (n2, n2) {
            return Err(Error::dims("left_factors_from_right", (n2, n2), b.shape()));
        }
    }
    let refs: Vec<&ComplexMatrix> = rights.iter().collect();
    if gram_error(&refs) > 1e-10 {
        return Err(Error::Domain("right factors are not Hilbert-Schmidt orthonormal"));
    }

    let lefts = rights
        .iter()
        .zip(mus)
        .map(|(b, &mu)| {
            let inv = 1.0 / math::sqrt(mu);
            ComplexMatrix::from_fn(n1, n1, |j1, j2| {
                let mut acc = Complex64::new(0.0, 0.0);
                for l1 in 0..n2 {
                    for l2 in 0..n2 {
                        acc += f[(j1 * n2 + l1, j2 * n2 + l2)] * b[(l1, l2)].conj();
                    }
                }
                acc * inv
            })
        })
        .collect();
    Ok(lefts)
}

/// Decomposition through the spectral decomposition of the reduced density:
/// eigenvectors of `ρ` give the right factors, eigenvalues give `λ²`, and
/// [`left_factors_from_right`] supplies the left factors.
///
/// Here `rel_tol` is applied to the eigenvalues: `μ_k > rel_tol · μ_max` is kept.
pub fn schmidt_decompose_via_density(
    f: &ComplexMatrix,
    dims: BipartiteDims,
    rel_tol: f64,
) -> Result<SchmidtDecomposition> {
    check_rel_tol(rel_tol)?;
    let rho = reduced_density(f, dims)?;
    let (mus, vecs) = hermitian_eigen(&rho)?;
    let mu_max = mus.first().copied().unwrap_or(0.0);
    if mu_max.is_nan() || mu_max <= 0.0 {
        return Err(Error::Domain("cannot decompose the zero operator"));
    }
    let n2 = dims.n2();
    let kept: Vec<usize> = (0..mus.len()).take_while(|&k| mus[k] > rel_tol * mu_max).collect();
    let rights = kept
        .iter()
        .map(|&k| ComplexMatrix::new(n2, n2, vecs.column(k)))
        .collect::<Result<Vec<_>>>()?;
    let kept_mus: Vec<f64> = kept.iter().map(|&k| mus[k]).collect();
    let lefts = left_factors_from_right(f, dims, &rights, &kept_mus)?;
    let terms = lefts
        .into_iter()
        .zip(rights)
        .zip(kept_mus)
        .map(|((left, right), mu)| SchmidtTerm { coefficient: math::sqrt(mu), left, right })
        .collect();
    Ok(SchmidtDecomposition { dims, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qft::qft_matrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    fn dims(n1: usize, n2: usize) -> BipartiteDims {
        BipartiteDims::new(n1, n2).unwrap()
    }

    #[test]
    fn realign_entry_formula() {
        let d = dims(2, 3);
        let f = ComplexMatrix::from_fn(6, 6, |r, c| Complex64::new(r as f64, c as f64));
        let m = realign(&f, d).unwrap();
        assert_eq!(m.shape(), (4, 9));
        for j1 in 0..2 {
            for j2 in 0..2 {
                for l1 in 0..3 {
                    for l2 in 0..3 {
                        assert_eq!(m[(j1 * 2 + j2, l1 * 3 + l2)], f[(j1 * 3 + l1, j2 * 3 + l2)]);
                    }
                }
            }
        }
        assert_eq!(unrealign(&m, d).unwrap(), f);
    }

    #[test]
    fn realign_rejects_wrong_shape() {
        assert!(matches!(realign(&ComplexMatrix::identity(5), dims(2, 3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn realign_product_is_rank_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_matrix(&mut rng, 2, 2);
        let b = random_matrix(&mut rng, 2, 2);
        let m = realign(&tensor_product(&a, &b), dims(2, 2)).unwrap();
        let t = svd(&m).unwrap();
        assert_eq!(t.rank(1e-9), 1);
        let expected = frobenius_norm(&a) * frobenius_norm(&b);
        assert!((t.singular_values[0] - expected).abs() < 1e-12);
    }

    #[test]
    fn realign_identity() {
        let m = realign(&ComplexMatrix::identity(4), dims(2, 2)).unwrap();
        let sv = svd(&m).unwrap().singular_values;
        assert!((sv[0] - 2.0).abs() < 1e-15);
        assert!(sv[1..].iter().all(|&s| s < 1e-15));
    }

    #[test]
    fn realign_preserves_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = random_matrix(&mut rng, 6, 6);
        let m = realign(&f, dims(2, 3)).unwrap();
        // a pure permutation of entries; only the summation order differs
        let key = |z: &Complex64| (z.re, z.im);
        let mut a: alloc::vec::Vec<_> = f.data().iter().map(key).collect();
        let mut b: alloc::vec::Vec<_> = m.data().iter().map(key).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_eq!(a, b);
        assert!((frobenius_norm(&m) - frobenius_norm(&f)).abs() < 1e-14 * frobenius_norm(&f));
    }

    #[test]
    fn decompose_product_operator() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = random_matrix(&mut rng, 3, 3);
        let b = random_matrix(&mut rng, 2, 2);
        let f = tensor_product(&a, &b);
        let d = schmidt_decompose(&f, dims(3, 2), DEFAULT_REL_TOL).unwrap();
        assert_eq!(d.schmidt_number(), 1);
        assert!((d.terms[0].coefficient - frobenius_norm(&a) * frobenius_norm(&b)).abs() < 1e-12);
        assert!(d.reconstruct().distance(&f).unwrap() < 1e-12);
    }

    #[test]
    fn decompose_qft_2x2_and_2x3() {
        let d = schmidt_decompose(&qft_matrix(4).unwrap(), dims(2, 2), DEFAULT_REL_TOL).unwrap();
        assert_eq!(d.schmidt_number(), 4);
        assert!(d.coefficients().iter().all(|&l| (l - 1.0).abs() < 1e-12));

        let f = qft_matrix(6).unwrap();
        let d = schmidt_decompose(&f, dims(2, 3), DEFAULT_REL_TOL).unwrap();
        let expected = [(8.0f64 / 3.0).sqrt(), (4.0f64 / 3.0).sqrt(), (4.0f64 / 3.0).sqrt(), (2.0f64 / 3.0).sqrt()];
        assert_eq!(d.schmidt_number(), 4);
        for (l, e) in d.coefficients().iter().zip(expected) {
            assert!((l - e).abs() < 1e-12);
        }
        assert!(d.reconstruct().distance(&f).unwrap() < 1e-12);
        let (el, er) = d.orthonormality_error();
        assert!(el < 1e-12 && er < 1e-12);
    }

    #[test]
    fn decompose_errors() {
        assert!(matches!(
            schmidt_decompose(&ComplexMatrix::zeros(4, 4), dims(2, 2), DEFAULT_REL_TOL),
            Err(Error::Domain(_))
        ));
        assert!(schmidt_decompose(&ComplexMatrix::identity(4), dims(2, 2), 0.0).is_err());
        assert!(schmidt_decompose(&ComplexMatrix::identity(4), dims(2, 2), 1.0).is_err());
    }

    #[test]
    fn left_vectors_are_phase_canonical() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let f = random_matrix(&mut rng, 6, 6);
        let d = schmidt_decompose(&f, dims(3, 2), DEFAULT_REL_TOL).unwrap();
        for t in &d.terms {
            let biggest = t.left.data().iter().map(|z| z.norm()).fold(0.0, f64::max);
            let first = t.left.data().iter().find(|z| z.norm() >= biggest * (1.0 - 1e-12)).unwrap();
            assert!(first.im.abs() < 1e-15 && first.re > 0.0);
        }
    }

    #[test]
    fn reduced_density_is_conj_gram_of_realigned() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let d = dims(2, 3);
        let f = random_matrix(&mut rng, 6, 6);
        let m = realign(&f, d).unwrap();
        let rho = reduced_density(&f, d).unwrap();
        let gram = m.dagger().matmul(&m).unwrap().conj();
        assert!(rho.max_abs_diff(&gram).unwrap() < 1e-13);
    }

    #[test]
    fn reduced_density_of_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let a = random_matrix(&mut rng, 2, 2);
        let a = a.scale_real(1.0 / frobenius_norm(&a));
        let b = random_matrix(&mut rng, 3, 3);
        let rho = reduced_density(&tensor_product(&a, &b), dims(2, 3)).unwrap();
        let expected = ComplexMatrix::from_fn(9, 9, |l, m| b.data()[l] * b.data()[m].conj());
        assert!(rho.max_abs_diff(&expected).unwrap() < 1e-13);
        let (vals, _) = hermitian_eigen(&rho).unwrap();
        assert!(vals[1..].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn reduced_density_spectra_of_qft() {
        let (vals, _) = hermitian_eigen(&reduced_density(&qft_matrix(4).unwrap(), dims(2, 2)).unwrap()).unwrap();
        for v in vals {
            assert!((v - 1.0).abs() < 1e-12);
        }
        let (vals, _) = hermitian_eigen(&reduced_density(&qft_matrix(6).unwrap(), dims(2, 3)).unwrap()).unwrap();
        let expected = [8.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0, 2.0 / 3.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        for (v, e) in vals.iter().zip(expected) {
            assert!((v - e).abs() < 1e-12, "{v} vs {e}");
        }
    }

    #[test]
    fn left_factor_recovery_for_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        let a = random_matrix(&mut rng, 2, 2);
        let b = random_matrix(&mut rng, 3, 3);
        let (na, nb) = (frobenius_norm(&a), frobenius_norm(&b));
        let f = tensor_product(&a, &b);
        let right = b.scale_real(1.0 / nb);
        let mu = na * na * nb * nb;
        let lefts = left_factors_from_right(&f, dims(2, 3), &[right], &[mu]).unwrap();
        assert!(lefts[0].max_abs_diff(&a.scale_real(1.0 / na)).unwrap() < 1e-13);
    }

    #[test]
    fn left_factor_errors() {
        let f = ComplexMatrix::identity(4);
        let b = ComplexMatrix::identity(2).scale_real(1.0 / 2f64.sqrt());
        let d = dims(2, 2);
        assert!(matches!(left_factors_from_right(&f, d, core::slice::from_ref(&b), &[0.0]), Err(Error::Domain(_))));
        assert!(matches!(left_factors_from_right(&f, d, core::slice::from_ref(&b), &[-1.0]), Err(Error::Domain(_))));
        assert!(left_factors_from_right(&f, d, &[b.clone(), b.clone()], &[1.0, 1.0]).is_err());
        assert!(left_factors_from_right(&f, d, &[b], &[]).is_err());
    }

    #[test]
    fn density_route_reconstructs_random_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for (n1, n2) in [(2, 3), (3, 2)] {
            for _ in 0..20 {
                let d = dims(n1, n2);
                let g = random_matrix(&mut rng, 6, 6);
                let u = svd(&g).unwrap();
                let unitary = u.left.matmul(&u.right.dagger()).unwrap();
                let dec = schmidt_decompose_via_density(&unitary, d, DEFAULT_REL_TOL).unwrap();
                assert!(dec.reconstruct().distance(&unitary).unwrap() < 1e-10);
                let (el, er) = dec.orthonormality_error();
                assert!(el < 1e-10 && er < 1e-10);
                assert!((dec.coefficient_norm_sqr() - 6.0).abs() < 1e-9 * 6.0);
            }
        }
    }

    #[test]
    fn completely_degenerate_predicate() {
        let d = schmidt_decompose(&qft_matrix(4).unwrap(), dims(2, 2), DEFAULT_REL_TOL).unwrap();
        assert!(d.is_completely_degenerate(1e-9));
        let d = schmidt_decompose(&qft_matrix(6).unwrap(), dims(2, 3), DEFAULT_REL_TOL).unwrap();
        assert!(!d.is_completely_degenerate(1e-9));
        let d = schmidt_decompose(&ComplexMatrix::identity(4), dims(2, 2), DEFAULT_REL_TOL).unwrap();
        assert!(!d.is_completely_degenerate(1e-9));
    }
}
