//! Closed-form operator-Schmidt decomposition of the quantum Fourier
//! transform `F_{N1×N2}` on `C^{N1} ⊗ C^{N2}`.
//!
//! `Z_{N2}²` is partitioned into classes `ℓ ∼ m ⇔ ℓ - m ∈ N1·Z²` (plain integer
//! subtraction, not modular). Each class `C` contributes one term
//! `√((N1/N2)|C|) · A_C ⊗ B_C`, where `B_C` is supported exactly on `C` and
//! `A_C` is a phase pattern fixed by any representative of `C`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{BipartiteDims, ComplexMatrix};
use crate::math;
use crate::schmidt::{SchmidtDecomposition, SchmidtTerm};

/// `F_n[t, s] = exp(2πi·t·s/n)/√n`.
pub fn qft_matrix(n: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::Domain("Fourier transform dimension must be at least 2"));
    }
    let norm = 1.0 / math::sqrt(n as f64);
    Ok(ComplexMatrix::from_fn(n, n, |t, s| {
        math::root_of_unity(((t * s) % n) as i64, n as u64) * norm
    }))
}

/// `F_{N1×N2}`: the `N`-point transform read on `C^{N1} ⊗ C^{N2}` through
/// the mixed-decimal flattening (which leaves the matrix unchanged).
pub fn qft_bipartite(dims: BipartiteDims) -> ComplexMatrix {
    qft_matrix(dims.n()).expect("n1·n2 ≥ 4")
}

/// One class of `Z_{N2}²` modulo translations by `N1·Z²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquivalenceClass {
    /// Member with both coordinates below `min(N1, N2)`.
    pub rep: (usize, usize),
    /// All members, lexicographically ordered.
    pub members: Vec<(usize, usize)>,
}

impl EquivalenceClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Characteristic function `χ_C`.
    pub fn contains(&self, point: (usize, usize)) -> bool {
        self.members.binary_search(&point).is_ok()
    }
}

/// Canonical representative of the class of `point`.
pub fn canonical_rep(point: (usize, usize), dims: BipartiteDims) -> (usize, usize) {
    (point.0 % dims.n1(), point.1 % dims.n1())
}

/// `min(N1, N2)²` classes partitioning `Z_{N2}²`, ordered by representative.
pub fn enumerate_classes(dims: BipartiteDims) -> Vec<EquivalenceClass> {
    let (n1, n2) = (dims.n1(), dims.n2());
    let m = n1.min(n2);
    let mut classes = Vec::with_capacity(m * m);
    for c1 in 0..m {
        for c2 in 0..m {
            let members = (c1..n2)
                .step_by(n1)
                .flat_map(|x| (c2..n2).step_by(n1).map(move |y| (x, y)))
                .collect();
            classes.push(EquivalenceClass { rep: (c1, c2), members });
        }
    }
    classes
}

/// `A_C[k1, k2] = exp(2πi(N2·k1·k2 + k1·c2 + k2·c1)/N1)/N1` for the canonical representative.
pub fn a_matrix(class: &EquivalenceClass, dims: BipartiteDims) -> ComplexMatrix {
    a_matrix_with_rep(class.rep, dims)
}

/// [`a_matrix`] evaluated at an arbitrary representative `(c1, c2)`.
pub fn a_matrix_with_rep(rep: (usize, usize), dims: BipartiteDims) -> ComplexMatrix {
    let (n1, n2) = (dims.n1(), dims.n2());
    let (c1, c2) = (rep.0 % n1, rep.1 % n1);
    let inv = 1.0 / n1 as f64;
    ComplexMatrix::from_fn(n1, n1, |k1, k2| {
        let k = (n2 % n1) * k1 * k2 + k1 * c2 + k2 * c1;
        math::root_of_unity((k % n1) as i64, n1 as u64) * inv
    })
}

/// `B_C[ℓ1, ℓ2] = exp(2πi·ℓ1·ℓ2/N)/√|C|` on `C`, zero elsewhere.
pub fn b_matrix(class: &EquivalenceClass, dims: BipartiteDims) -> ComplexMatrix {
    let (n2, n) = (dims.n2(), dims.n());
    let inv = 1.0 / math::sqrt(class.size() as f64);
    let mut b = ComplexMatrix::zeros(n2, n2);
    for &(l1, l2) in &class.members {
        b[(l1, l2)] = math::root_of_unity(((l1 * l2) % n) as i64, n as u64) * inv;
    }
    b
}

/// `√((N1/N2)·|C|)`.
pub fn class_coefficient(class: &EquivalenceClass, dims: BipartiteDims) -> f64 {
    math::sqrt((dims.n1() * class.size()) as f64 / dims.n2() as f64)
}

/// `F_{N1×N2} = Σ_C √((N1/N2)|C|) · A_C ⊗ B_C`, terms sorted by coefficient
/// descending and then by class representative.
pub fn closed_form_decomposition(dims: BipartiteDims) -> SchmidtDecomposition {
    let mut terms: Vec<SchmidtTerm> = enumerate_classes(dims)
        .iter()
        .map(|c| SchmidtTerm {
            coefficient: class_coefficient(c, dims),
            left: a_matrix(c, dims),
            right: b_matrix(c, dims),
        })
        .collect();
    terms.sort_by(|a, b| b.coefficient.total_cmp(&a.coefficient));
    SchmidtDecomposition { dims, terms }
}

/// Which of the three spectral regimes `(N1, N2)` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumCase {
    /// `N1 | N2` (includes `N1 = N2`).
    Divides,
    /// `N1 > N2`.
    N1GeN2,
    General,
}

impl SpectrumCase {
    pub fn label(&self) -> &'static str {
        match self {
            SpectrumCase::Divides => "divides",
            SpectrumCase::N1GeN2 => "n1_ge_n2",
            SpectrumCase::General => "general",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        match label {
            "divides" => Some(SpectrumCase::Divides),
            "n1_ge_n2" => Some(SpectrumCase::N1GeN2),
            "general" => Some(SpectrumCase::General),
            _ => None,
        }
    }

    pub fn is_completely_degenerate(&self) -> bool {
        !matches!(self, SpectrumCase::General)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub coefficient: f64,
    pub multiplicity: usize,
}

/// Distinct Schmidt coefficients of `F_{N1×N2}` with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub case: SpectrumCase,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    pub fn schmidt_number(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// `Σ multiplicity · coefficient²`.
    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|e| e.multiplicity as f64 * e.coefficient * e.coefficient).sum()
    }

    /// Every coefficient repeated by its multiplicity, descending.
    pub fn expand(&self) -> Vec<f64> {
        let mut out: Vec<f64> =
            self.entries.iter().flat_map(|e| core::iter::repeat_n(e.coefficient, e.multiplicity)).collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }
}

/// Spectrum of `F_{N1×N2}` by case analysis.
///
/// With `q = ⌊N2/N1⌋`, `r = N2 mod N1` and `s = (-N2) mod N1`, the general
/// case has coefficients `√((q+1)²N1/N2)`, `√((q+1)q·N1/N2)` and `√(q²N1/N2)`
/// with multiplicities `r²`, `2rs` and `s²`.
pub fn spectrum_by_cases(dims: BipartiteDims) -> SpectrumTable {
    let (n1, n2) = (dims.n1(), dims.n2());
    let ratio = n1 as f64 / n2 as f64;
    if n2 % n1 == 0 {
        return SpectrumTable {
            case: SpectrumCase::Divides,
            entries: vec![SpectrumEntry { coefficient: math::sqrt(n2 as f64 / n1 as f64), multiplicity: n1 * n1 }],
        };
    }
    if n1 >= n2 {
        return SpectrumTable {
            case: SpectrumCase::N1GeN2,
            entries: vec![SpectrumEntry { coefficient: math::sqrt(n1 as f64 / n2 as f64), multiplicity: n2 * n2 }],
        };
    }
    let floor = n2 / n1;
    let ceil = floor + 1;
    let r = n2 % n1;
    let s = n1 - r;
    let coeff = |a: usize, b: usize| math::sqrt((a * b) as f64 * ratio);
    SpectrumTable {
        case: SpectrumCase::General,
        entries: vec![
            SpectrumEntry { coefficient: coeff(ceil, ceil), multiplicity: r * r },
            SpectrumEntry { coefficient: coeff(ceil, floor), multiplicity: 2 * r * s },
            SpectrumEntry { coefficient: coeff(floor, floor), multiplicity: s * s },
        ],
    }
}

/// `(ℓ1 - m1, ℓ2 - m2) ∈ N1·Z²`, with integer (non-modular) differences.
fn in_lattice(l: (usize, usize), m: (usize, usize), n1: usize) -> bool {
    l.0.abs_diff(m.0).is_multiple_of(n1) && l.1.abs_diff(m.1).is_multiple_of(n1)
}

/// `ρ[ℓ, m] = (N1/N2)·exp(2πi(ℓ1ℓ2 - m1m2)/N)·χ_{N1·Z²}(ℓ - m)`, indices flattened as `ℓ1·N2 + ℓ2`.
pub fn rho_closed_form(dims: BipartiteDims) -> ComplexMatrix {
    let (n1, n2, n) = (dims.n1(), dims.n2(), dims.n());
    let q = n2 * n2;
    let scale = n1 as f64 / n2 as f64;
    ComplexMatrix::from_fn(q, q, |li, mi| {
        let l = (li / n2, li % n2);
        let m = (mi / n2, mi % n2);
        if in_lattice(l, m, n1) {
            let k = (l.0 * l.1) as i64 - (m.0 * m.1) as i64;
            math::root_of_unity(k, n as u64) * scale
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Checks `χ_{N1·Z²}(ℓ - m) = Σ_C χ_C(ℓ)·χ_C(m)` for every pair in `Z_{N2}² × Z_{N2}²`.
pub fn chi_identity_check(dims: BipartiteDims) -> bool {
    let n2 = dims.n2();
    let classes = enumerate_classes(dims);
    let points: Vec<(usize, usize)> = (0..n2).flat_map(|a| (0..n2).map(move |b| (a, b))).collect();
    // membership[c][p] = χ_C(p)
    let membership: Vec<Vec<bool>> =
        classes.iter().map(|c| points.iter().map(|&p| c.contains(p)).collect()).collect();
    for (pi, &l) in points.iter().enumerate() {
        for (mi, &m) in points.iter().enumerate() {
            let lhs = usize::from(in_lattice(l, m, dims.n1()));
            let rhs: usize = membership.iter().map(|row| usize::from(row[pi] && row[mi])).sum();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
