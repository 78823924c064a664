//! Exhaustive closed-form vs numerical sweep over `(N1, N2)`.

use opschmidt_core::qft::{
    chi_identity_check, closed_form_decomposition, qft_bipartite, rho_closed_form, spectrum_by_cases,
};
use opschmidt_core::schmidt::{reduced_density, schmidt_decompose, SchmidtDecomposition, DEFAULT_REL_TOL};
use opschmidt_core::{BipartiteDims, Complex64};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;

/// Test hook: rotates the phase of one closed-form `A` entry for one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub dims: BipartiteDims,
}

impl Fault {
    fn apply(&self, d: &mut SchmidtDecomposition) {
        if d.dims == self.dims {
            if let Some(t) = d.terms.first_mut() {
                t.left[(0, 0)] *= Complex64::from_polar(1.0, 0.5);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub n1: usize,
    pub n2: usize,
    pub case_label: String,
    /// Largest gap between sorted closed-form coefficients and the numerical
    /// ones, and between the closed form and the case table.
    pub max_coeff_deviation: f64,
    /// Largest Frobenius reconstruction error of either decomposition.
    pub max_reconstruction_error: f64,
    /// Largest deviation of the closed-form factor families from orthonormal.
    pub max_orthonormality_error: f64,
    pub schmidt_number_match: bool,
    pub max_rho_deviation: f64,
    pub chi_identity: bool,
    pub passed: bool,
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn verify_pair(dims: BipartiteDims, tol: f64, fault: Option<Fault>) -> Result<VerifyOutcome, CliError> {
    let f = qft_bipartite(dims);
    let mut closed = closed_form_decomposition(dims);
    if let Some(fault) = fault {
        fault.apply(&mut closed);
    }
    let numeric = schmidt_decompose(&f, dims, DEFAULT_REL_TOL)?;
    let table = spectrum_by_cases(dims);

    let closed_coeffs = sorted_desc(closed.coefficients());
    let coeff_dev = max_gap(&closed_coeffs, &sorted_desc(numeric.coefficients()))
        .max(max_gap(&closed_coeffs, &table.expand()));
    let recon = closed.reconstruct().distance(&f)?.max(numeric.reconstruct().distance(&f)?);
    let (ol, or) = closed.orthonormality_error();
    let expected_sch = (dims.n1() * dims.n1()).min(dims.n2() * dims.n2());
    let sch_match = closed.schmidt_number() == expected_sch
        && numeric.schmidt_number() == expected_sch
        && table.schmidt_number() == expected_sch;
    let rho_dev = rho_closed_form(dims).max_abs_diff(&reduced_density(&f, dims)?)?;
    let chi = chi_identity_check(dims);

    let passed =
        coeff_dev <= tol && recon <= tol && ol.max(or) <= tol && rho_dev <= tol && sch_match && chi;
    Ok(VerifyOutcome {
        n1: dims.n1(),
        n2: dims.n2(),
        case_label: table.case.label().to_string(),
        max_coeff_deviation: coeff_dev,
        max_reconstruction_error: recon,
        max_orthonormality_error: ol.max(or),
        schmidt_number_match: sch_match,
        max_rho_deviation: rho_dev,
        chi_identity: chi,
        passed,
    })
}

/// Every pair `2 ≤ N1 ≤ n1_max`, `2 ≤ N2 ≤ n2_max`, checked in parallel and
/// returned in lexicographic order.
pub fn sweep(n1_max: usize, n2_max: usize, tol: f64, fault: Option<Fault>) -> Result<Vec<VerifyOutcome>, CliError> {
    if n1_max < 2 || n2_max < 2 {
        return Err(CliError::Usage("sweep bounds must be at least 2".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(CliError::Usage("tolerance must be positive".into()));
    }
    let pairs: Vec<BipartiteDims> = (2..=n1_max)
        .flat_map(|a| (2..=n2_max).map(move |b| (a, b)))
        .map(|(a, b)| BipartiteDims::new(a, b).expect("bounds checked"))
        .collect();
    pairs.into_par_iter().map(|d| verify_pair(d, tol, fault)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let out = sweep(4, 5, 1e-9, None).unwrap();
        assert_eq!(out.len(), 12);
        assert!(out.iter().all(|o| o.passed));
        assert_eq!((out[0].n1, out[0].n2), (2, 2));
        assert_eq!((out[11].n1, out[11].n2), (4, 5));
    }

    #[test]
    fn fault_is_detected_for_that_pair_only() {
        let fault = Fault { dims: BipartiteDims::new(3, 4).unwrap() };
        let out = sweep(4, 4, 1e-9, Some(fault)).unwrap();
        let failed: Vec<(usize, usize)> = out.iter().filter(|o| !o.passed).map(|o| (o.n1, o.n2)).collect();
        assert_eq!(failed, vec![(3, 4)]);
    }

    #[test]
    fn bad_bounds() {
        assert!(sweep(1, 4, 1e-9, None).is_err());
        assert!(sweep(3, 3, 0.0, None).is_err());
    }
}
