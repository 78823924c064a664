//! Cyclic Jacobi solvers: one-sided (Hestenes) SVD and two-sided Hermitian
//! eigendecomposition.
//!
//! Both reduce every 2×2 pivot to a real symmetric problem by rephasing the
//! second column, then apply the same plane rotation. They share no state
//! beyond [`pivot`], so the eigensolver can serve as an independent check of
//! the SVD on `M†M`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::math;

const MAX_SWEEPS: usize = 80;

/// Thin singular value decomposition `M = U·diag(σ)·V†`.
///
/// With `k = min(rows, cols)`, `left` is `rows × k` and `right` is `cols × k`;
/// both have orthonormal columns. `singular_values` is sorted descending.
#[derive(Debug, Clone)]
pub struct SingularTriple {
    pub singular_values: Vec<f64>,
    pub left: ComplexMatrix,
    pub right: ComplexMatrix,
}

impl SingularTriple {
    /// Rebuilds `U·diag(σ)·V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (m, n) = (self.left.rows(), self.right.rows());
        ComplexMatrix::from_fn(m, n, |i, j| {
            self.singular_values
                .iter()
                .enumerate()
                .map(|(k, &s)| self.left[(i, k)] * self.right[(j, k)].conj() * s)
                .sum()
        })
    }

    /// Number of singular values strictly above `rel_tol · σ_max`.
    pub fn rank(&self, rel_tol: f64) -> usize {
        let cutoff = rel_tol * self.singular_values.first().copied().unwrap_or(0.0);
        self.singular_values.iter().take_while(|&&s| s > cutoff).count()
    }
}

/// 2×2 unitary `W = diag(1, ē)·[[c, s], [-s, c]]` that zeroes the `(p, q)` entry of
/// a Hermitian pivot `[[app, apq], [conj(apq), aqq]]` under `W† · · W`.
#[derive(Debug, Clone, Copy)]
struct Pivot {
    pp: Complex64,
    pq: Complex64,
    qp: Complex64,
    qq: Complex64,
}

fn pivot(app: f64, aqq: f64, apq: Complex64) -> Pivot {
    let g = math::abs(apq);
    let e = apq / g;
    let zeta = (aqq - app) / (2.0 * g);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + math::sqrt(1.0 + zeta * zeta))
    } else {
        -1.0 / (-zeta + math::sqrt(1.0 + zeta * zeta))
    };
    let c = 1.0 / math::sqrt(1.0 + t * t);
    let s = c * t;
    let ec = e.conj();
    Pivot {
        pp: Complex64::new(c, 0.0),
        pq: Complex64::new(s, 0.0),
        qp: ec * -s,
        qq: ec * c,
    }
}

impl Pivot {
    /// `(x, y) ↦ (x·W_pp + y·W_qp, x·W_pq + y·W_qq)`, i.e. right-multiplication
    /// of the column pair by `W`.
    #[inline]
    fn apply_cols(&self, x: Complex64, y: Complex64) -> (Complex64, Complex64) {
        (x * self.pp + y * self.qp, x * self.pq + y * self.qq)
    }

    /// Left-multiplication of the row pair by `W†`.
    #[inline]
    fn apply_rows(&self, x: Complex64, y: Complex64) -> (Complex64, Complex64) {
        (self.pp.conj() * x + self.qp.conj() * y, self.pq.conj() * x + self.qq.conj() * y)
    }
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, &y)| x.conj() * y).sum()
}

fn norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

fn rotate_pair(cols: &mut [Vec<Complex64>], p: usize, q: usize, w: &Pivot) {
    let (lo, hi) = cols.split_at_mut(q);
    for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
        let (nx, ny) = w.apply_cols(*x, *y);
        *x = nx;
        *y = ny;
    }
}

/// Singular value decomposition by one-sided Jacobi.
///
/// Singular vectors belonging to numerically zero singular values are
/// completed to an orthonormal family. Fails with [`Error::NoConvergence`]
/// if the sweep limit is reached.
pub fn svd(m: &ComplexMatrix) -> Result<SingularTriple> {
    if m.rows() < m.cols() {
        let t = svd_tall(&m.dagger())?;
        return Ok(SingularTriple { singular_values: t.singular_values, left: t.right, right: t.left });
    }
    svd_tall(m)
}

fn svd_tall(m: &ComplexMatrix) -> Result<SingularTriple> {
    let (rows, n) = m.shape();
    debug_assert!(rows >= n);
    let mut a: Vec<Vec<Complex64>> = (0..n).map(|c| m.column(c)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|c| {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[c] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let tol = f64::EPSILON * rows as f64;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = norm_sqr(&a[p]);
                let beta = norm_sqr(&a[q]);
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let gamma = dot(&a[p], &a[q]);
                let g = math::abs(gamma);
                if g <= tol * math::sqrt(alpha) * math::sqrt(beta) {
                    continue;
                }
                rotated = true;
                let w = pivot(alpha, beta, gamma);
                rotate_pair(&mut a, p, q, &w);
                rotate_pair(&mut v, p, q, &w);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let sigma: Vec<f64> = a.iter().map(|col| math::sqrt(norm_sqr(col))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep column order
    order.sort_by(|&i, &j| sigma[j].total_cmp(&sigma[i]));

    let sigma_max = order.first().map(|&i| sigma[i]).unwrap_or(0.0);
    let negligible = sigma_max * tol;
    let mut left: Vec<Option<Vec<Complex64>>> = Vec::with_capacity(n);
    for &i in &order {
        let s = sigma[i];
        if s > negligible && s > 0.0 {
            left.push(Some(a[i].iter().map(|z| z / s).collect()));
        } else {
            left.push(None);
        }
    }
    let left = complete_orthonormal(rows, left);

    let singular_values = order.iter().map(|&i| sigma[i]).collect();
    let u = ComplexMatrix::from_fn(rows, n, |r, k| left[k][r]);
    let vm = ComplexMatrix::from_fn(n, n, |r, k| v[order[k]][r]);
    Ok(SingularTriple { singular_values, left: u, right: vm })
}

/// Fills the `None` slots with unit vectors orthogonal to everything else,
/// drawn from the standard basis by Gram-Schmidt (two passes).
fn complete_orthonormal(dim: usize, cols: Vec<Option<Vec<Complex64>>>) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = cols.iter().flatten().cloned().collect();
    let mut fill = Vec::new();
    let mut candidate = 0;
    let missing = cols.iter().filter(|c| c.is_none()).count();
    while fill.len() < missing && candidate < dim {
        let mut x = vec![Complex64::new(0.0, 0.0); dim];
        x[candidate] = Complex64::new(1.0, 0.0);
        candidate += 1;
        for _ in 0..2 {
            for b in &basis {
                let proj = dot(b, &x);
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi -= proj * bi;
                }
            }
        }
        let nrm = math::sqrt(norm_sqr(&x));
        if nrm > 0.5 {
            let unit: Vec<Complex64> = x.iter().map(|z| z / nrm).collect();
            basis.push(unit.clone());
            fill.push(unit);
        }
    }
    let mut fill = fill.into_iter();
    cols.into_iter()
        .map(|c| c.unwrap_or_else(|| fill.next().expect("standard basis spans the space")))
        .collect()
}

/// Eigendecomposition of a Hermitian matrix by cyclic two-sided Jacobi.
///
/// Returns eigenvalues in descending order and the matching orthonormal
/// eigenvectors as columns. Only the Hermitian part of `h` is meaningful;
/// the strictly lower triangle is ignored in favour of the upper one.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !h.is_square() {
        return Err(Error::dims("hermitian_eigen", (h.rows(), h.rows()), h.shape()));
    }
    let n = h.rows();
    let mut a = ComplexMatrix::from_fn(n, n, |r, c| match r.cmp(&c) {
        core::cmp::Ordering::Less => h[(r, c)],
        core::cmp::Ordering::Equal => Complex64::new(h[(r, r)].re, 0.0),
        core::cmp::Ordering::Greater => h[(c, r)].conj(),
    });
    let mut v = ComplexMatrix::identity(n);
    let scale = crate::linalg::frobenius_norm(&a);

    let mut converged = n < 2 || scale == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        if math::sqrt(2.0 * off) <= f64::EPSILON * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.norm_sqr() == 0.0 {
                    continue;
                }
                let w = pivot(a[(p, p)].re, a[(q, q)].re, apq);
                for r in 0..n {
                    let (x, y) = w.apply_cols(a[(r, p)], a[(r, q)]);
                    a[(r, p)] = x;
                    a[(r, q)] = y;
                    let (x, y) = w.apply_cols(v[(r, p)], v[(r, q)]);
                    v[(r, p)] = x;
                    v[(r, q)] = y;
                }
                for c in 0..n {
                    let (x, y) = w.apply_rows(a[(p, c)], a[(q, c)]);
                    a[(p, c)] = x;
                    a[(q, c)] = y;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, k| v[(r, order[k])]);
    Ok((values, vectors))
}
