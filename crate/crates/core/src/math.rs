//! Scalar helpers routed through `libm` so the crate stays `no_std`.

use core::f64::consts::PI;
use num_complex::Complex64;

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub(crate) fn abs(z: Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

/// `exp(2πi·k/m)`, with `k` reduced modulo `m` in integer arithmetic first.
pub(crate) fn root_of_unity(k: i64, m: u64) -> Complex64 {
    let r = k.rem_euclid(m as i64) as f64;
    let (s, c) = libm::sincos(2.0 * PI * r / m as f64);
    Complex64::new(c, s)
}

/// Unit-modulus phase of `z`; `1` for `z == 0`.
pub(crate) fn phase(z: Complex64) -> Complex64 {
    let r = abs(z);
    if r == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        z / r
    }
}
