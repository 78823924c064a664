//! Dense complex matrices and the bipartite index conventions.
//!
//! A basis vector `|k⟩ ⊗ |ℓ⟩` of `C^{n1} ⊗ C^{n2}` is identified with `|k·n2 + ℓ⟩`
//! of `C^{n1·n2}` (mixed-decimal flattening). Every index in the crate is
//! 0-based and every matrix is stored row-major.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense row-major matrix of `Complex64`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Wraps row-major `data`; fails unless `data.len() == rows * cols` and both
    /// dimensions are positive.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("matrix dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::dims("ComplexMatrix::new", (rows, cols), (data.len(), 1)));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    /// Diagonal matrix with real entries.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    /// Entry at `(r, c)`, or `None` when out of range.
    pub fn get(&self, r: usize, c: usize) -> Option<Complex64> {
        (r < self.rows && c < self.cols).then(|| self.data[r * self.cols + c])
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        ComplexMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "hadamard", |a, b| a * b)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::dims(op, self.shape(), other.shape()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(ComplexMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// In-place `self += s * other`.
    pub fn add_scaled(&mut self, s: Complex64, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::dims("add_scaled", self.shape(), other.shape()));
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dims("matmul", (self.cols, other.cols), (other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.shape() != other.shape() {
            return Err(Error::dims("max_abs_diff", self.shape(), other.shape()));
        }
        Ok(self.data.iter().zip(&other.data).map(|(&a, &b)| math::abs(a - b)).fold(0.0, f64::max))
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        Ok(frobenius_norm(&self.sub(other)?))
    }

    /// Reshapes without moving data (row-major order is kept).
    pub fn reshape(self, rows: usize, cols: usize) -> Result<Self> {
        if rows * cols != self.data.len() {
            return Err(Error::dims("reshape", (rows, cols), self.shape()));
        }
        Self::new(rows, cols, self.data)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Local dimensions `(n1, n2)` of `C^{n1} ⊗ C^{n2}`, both at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipartiteDims {
    n1: usize,
    n2: usize,
}

impl BipartiteDims {
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        if n1 < 2 || n2 < 2 {
            return Err(Error::Domain("local dimensions must be at least 2"));
        }
        Ok(BipartiteDims { n1, n2 })
    }

    #[inline]
    pub fn n1(&self) -> usize {
        self.n1
    }

    #[inline]
    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Total dimension `n1 · n2`.
    #[inline]
    pub fn n(&self) -> usize {
        self.n1 * self.n2
    }

    /// `(n2, n1)`.
    pub fn swapped(&self) -> Self {
        BipartiteDims { n1: self.n2, n2: self.n1 }
    }
}

/// Kronecker product: entry `(ra·b.rows + rb, ca·b.cols + cb)` is `a[ra,ca]·b[rb,cb]`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = b.shape();
    let mut out = ComplexMatrix::zeros(a.rows * br, a.cols * bc);
    let out_cols = out.cols;
    for ra in 0..a.rows {
        for ca in 0..a.cols {
            let x = a[(ra, ca)];
            if x == ZERO {
                continue;
            }
            for rb in 0..br {
                let row = (ra * br + rb) * out_cols + ca * bc;
                for cb in 0..bc {
                    out.data[row + cb] = x * b.data[rb * bc + cb];
                }
            }
        }
    }
    out
}

/// Conjugate transpose; free-function form of [`ComplexMatrix::dagger`].
pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    a.dagger()
}

/// Hilbert-Schmidt inner product `Tr(a† b)`, conjugate-linear in `a`.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if a.shape() != b.shape() {
        return Err(Error::dims("hs_inner", a.shape(), b.shape()));
    }
    Ok(a.data.iter().zip(&b.data).map(|(x, &y)| x.conj() * y).sum())
}

pub fn frobenius_norm(a: &ComplexMatrix) -> f64 {
    math::sqrt(a.data.iter().map(|z| z.norm_sqr()).sum())
}

/// `(k, ℓ) ↦ k·n2 + ℓ`.
pub fn mixed_decimal_encode(k: usize, l: usize, dims: BipartiteDims) -> Result<usize> {
    if k >= dims.n1 {
        return Err(Error::Index { index: k, bound: dims.n1 });
    }
    if l >= dims.n2 {
        return Err(Error::Index { index: l, bound: dims.n2 });
    }
    Ok(k * dims.n2 + l)
}

/// `s ↦ (s div n2, s mod n2)`.
pub fn mixed_decimal_decode(s: usize, dims: BipartiteDims) -> Result<(usize, usize)> {
    if s >= dims.n() {
        return Err(Error::Index { index: s, bound: dims.n() });
    }
    Ok((s / dims.n2, s % dims.n2))
}

/// Permutation `R|k·n2 + ℓ⟩ = |ℓ·n1 + k⟩` exchanging the two mixed-decimal digits.
pub fn digit_swap(dims: BipartiteDims) -> ComplexMatrix {
    let n = dims.n();
    let mut r = ComplexMatrix::zeros(n, n);
    for k in 0..dims.n1 {
        for l in 0..dims.n2 {
            // column = input basis state, row = image
            r[(l * dims.n1 + k, k * dims.n2 + l)] = ONE;
        }
    }
    r
}
