//! Nonlocality strengths, communication bounds, and the re-association
//! ("communication") operator.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::math;
use crate::schmidt::{schmidt_terms, OperatorSplit, SchmidtDecomposition, SchmidtTerm};

/// Relative slack allowed in `Σλ² = n1·n2` before the Schmidt strength is refused.
pub const UNITARY_NORM_TOL: f64 = 1e-6;

/// Slack on the qudit-capacity comparison.
pub const SCHEDULE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct StrengthReport {
    pub schmidt_number: usize,
    /// `log2(Sch)`, in bits.
    pub hartley: f64,
    /// Shannon entropy (bits) of `λ_k² / (n1·n2)`.
    pub schmidt_strength: f64,
    /// Lower bound on qubits communicated: `K_Har`.
    pub q0_lower: f64,
    /// The weaker printed bound `K_Har / 2`.
    pub q0_lower_original: f64,
    /// `2·min(log2 n1, log2 n2)`, only when both dimensions are powers of two.
    pub q0_upper: Option<f64>,
}

/// `log2(x)` for a positive integer, exact when `x` is a power of two.
fn log2_int(x: usize) -> f64 {
    if x.is_power_of_two() {
        x.trailing_zeros() as f64
    } else {
        math::log2(x as f64)
    }
}

/// Hartley strength `log2(Sch)`.
pub fn hartley_strength(d: &SchmidtDecomposition) -> Result<f64> {
    if d.terms.is_empty() {
        return Err(Error::Domain("Hartley strength of an empty decomposition"));
    }
    Ok(log2_int(d.schmidt_number()))
}

/// Base-2 Shannon entropy, with `0·log 0 = 0`.
pub fn shannon_entropy(probabilities: &[f64]) -> f64 {
    -probabilities.iter().filter(|&&p| p > 0.0).map(|&p| p * math::log2(p)).sum::<f64>()
}

/// Schmidt strength `H({λ_k² / (n1·n2)})`.
///
/// Refuses decompositions whose squared coefficients do not sum to `n1·n2`
/// (i.e. operators that are not unitary) within [`UNITARY_NORM_TOL`].
pub fn schmidt_strength(d: &SchmidtDecomposition) -> Result<f64> {
    if d.terms.is_empty() {
        return Err(Error::Domain("Schmidt strength of an empty decomposition"));
    }
    let dim = d.dims.n() as f64;
    let total = d.coefficient_norm_sqr();
    if (total - dim).abs() > UNITARY_NORM_TOL * dim {
        return Err(Error::Normalization { expected: dim, actual: total, deficit: dim - total });
    }
    let p: Vec<f64> = d.terms.iter().map(|t| t.coefficient * t.coefficient / dim).collect();
    Ok(shannon_entropy(&p))
}

pub fn strength_report(d: &SchmidtDecomposition) -> Result<StrengthReport> {
    let hartley = hartley_strength(d)?;
    let schmidt_strength = schmidt_strength(d)?;
    let (n1, n2) = (d.dims.n1(), d.dims.n2());
    let q0_upper = (n1.is_power_of_two() && n2.is_power_of_two())
        .then(|| 2.0 * log2_int(n1).min(log2_int(n2)));
    Ok(StrengthReport {
        schmidt_number: d.schmidt_number(),
        hartley,
        schmidt_strength,
        q0_lower: hartley,
        q0_lower_original: hartley / 2.0,
        q0_upper,
    })
}

/// How many qudits of each dimension are exchanged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuditSchedule {
    counts: BTreeMap<usize, usize>,
}

impl QuditSchedule {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` qudits of dimension `dim` (at least 2).
    pub fn with(mut self, dim: usize, count: usize) -> Result<Self> {
        self.add(dim, count)?;
        Ok(self)
    }

    pub fn add(&mut self, dim: usize, count: usize) -> Result<()> {
        if dim < 2 {
            return Err(Error::Domain("qudit dimension must be at least 2"));
        }
        *self.counts.entry(dim).or_insert(0) += count;
        Ok(())
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// `Σ_d N_d · log2(d)`.
    pub fn capacity_bits(&self) -> f64 {
        self.counts.iter().map(|(&d, &n)| n as f64 * log2_int(d)).sum()
    }
}

/// Whether the schedule carries at least `K_Har` bits of quantum capacity.
pub fn schedule_satisfies_bound(s: &QuditSchedule, d: &SchmidtDecomposition) -> Result<bool> {
    Ok(s.capacity_bits() >= hartley_strength(d)? - SCHEDULE_SLACK)
}

fn check_comm_dims(n1: usize, n2: usize, n3: usize) -> Result<()> {
    if n1 < 2 || n2 < 2 || n3 < 2 {
        return Err(Error::Domain("communication operator dimensions must be at least 2"));
    }
    Ok(())
}

/// Split of `(C^{n1} ⊗ C^{n2}) ⊗ C^{n3} → C^{n1} ⊗ (C^{n2} ⊗ C^{n3})`.
pub fn communication_split(n1: usize, n2: usize, n3: usize) -> OperatorSplit {
    OperatorSplit { left_out: n1, left_in: n1 * n2, right_out: n2 * n3, right_in: n3 }
}

/// Matrix of the re-association map. In flattened bases it is the identity.
pub fn communication_operator(n1: usize, n2: usize, n3: usize) -> Result<ComplexMatrix> {
    check_comm_dims(n1, n2, n3)?;
    Ok(ComplexMatrix::identity(n1 * n2 * n3))
}

/// Explicit decomposition `C = Σ_k √(n1·n3) · A_k ⊗ B_k` with
/// `A_k = n1^{-1/2} Σ_i |i⟩⟨i k|` and `B_k = n3^{-1/2} Σ_i |k i⟩⟨i|`, `k ∈ 0..n2`.
pub fn communication_operator_decomposition(n1: usize, n2: usize, n3: usize) -> Result<Vec<SchmidtTerm>> {
    check_comm_dims(n1, n2, n3)?;
    let coefficient = math::sqrt((n1 * n3) as f64);
    let a_scale = Complex64::new(1.0 / math::sqrt(n1 as f64), 0.0);
    let b_scale = Complex64::new(1.0 / math::sqrt(n3 as f64), 0.0);
    let terms = (0..n2)
        .map(|k| {
            let mut left = ComplexMatrix::zeros(n1, n1 * n2);
            for i in 0..n1 {
                left[(i, i * n2 + k)] = a_scale;
            }
            let mut right = ComplexMatrix::zeros(n2 * n3, n3);
            for i in 0..n3 {
                right[(k * n3 + i, i)] = b_scale;
            }
            SchmidtTerm { coefficient, left, right }
        })
        .collect();
    Ok(terms)
}

/// Numerical decomposition of the communication operator by rectangular
/// realignment + SVD.
pub fn communication_operator_numeric(n1: usize, n2: usize, n3: usize, rel_tol: f64) -> Result<Vec<SchmidtTerm>> {
    let c = communication_operator(n1, n2, n3)?;
    schmidt_terms(&c, communication_split(n1, n2, n3), rel_tol)
}
