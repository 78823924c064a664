//! JSON documents and CSV/table renderers.
//!
//! Complex numbers are always `[re, im]` pairs; matrices are
//! `{"rows", "cols", "data"}` with `data` row-major.

use std::io::Write;

use opschmidt_core::qft::{EquivalenceClass, SpectrumCase, SpectrumEntry, SpectrumTable};
use opschmidt_core::schmidt::{SchmidtDecomposition, SchmidtTerm};
use opschmidt_core::strength::StrengthReport;
use opschmidt_core::{BipartiteDims, Complex64, ComplexMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixJson { rows: m.rows(), cols: m.cols(), data: m.data().iter().map(|z| [z.re, z.im]).collect() }
    }
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = CliError;

    fn try_from(m: MatrixJson) -> Result<Self, CliError> {
        let data = m.data.into_iter().map(|[re, im]| Complex64::new(re, im)).collect();
        Ok(ComplexMatrix::new(m.rows, m.cols, data)?)
    }
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, CliError> {
    let m: MatrixJson = serde_json::from_str(text)?;
    m.try_into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsJson {
    pub n1: usize,
    pub n2: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub lambda: f64,
    #[serde(rename = "A")]
    pub a: MatrixJson,
    #[serde(rename = "B")]
    pub b: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub dims: DimsJson,
    pub terms: Vec<TermJson>,
}

impl From<&SchmidtDecomposition> for DecompositionJson {
    fn from(d: &SchmidtDecomposition) -> Self {
        DecompositionJson {
            dims: DimsJson { n1: d.dims.n1(), n2: d.dims.n2() },
            terms: d
                .terms
                .iter()
                .map(|t| TermJson { lambda: t.coefficient, a: (&t.left).into(), b: (&t.right).into() })
                .collect(),
        }
    }
}

impl TryFrom<DecompositionJson> for SchmidtDecomposition {
    type Error = CliError;

    fn try_from(d: DecompositionJson) -> Result<Self, CliError> {
        let dims = BipartiteDims::new(d.dims.n1, d.dims.n2)?;
        let terms = d
            .terms
            .into_iter()
            .map(|t| {
                let left = ComplexMatrix::try_from(t.a)?;
                let right = ComplexMatrix::try_from(t.b)?;
                if left.shape() != (dims.n1(), dims.n1()) || right.shape() != (dims.n2(), dims.n2()) {
                    return Err(CliError::Usage("term factor shape does not match dims".into()));
                }
                Ok(SchmidtTerm { coefficient: t.lambda, left, right })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(SchmidtDecomposition { dims, terms })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub rep: [usize; 2],
    pub members: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassPartitionJson {
    pub n1: usize,
    pub n2: usize,
    pub classes: Vec<ClassJson>,
}

impl ClassPartitionJson {
    pub fn new(dims: BipartiteDims, classes: &[EquivalenceClass]) -> Self {
        ClassPartitionJson {
            n1: dims.n1(),
            n2: dims.n2(),
            classes: classes
                .iter()
                .map(|c| ClassJson {
                    rep: [c.rep.0, c.rep.1],
                    members: c.members.iter().map(|&(a, b)| [a, b]).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntryJson {
    pub coefficient: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub case: String,
    pub entries: Vec<SpectrumEntryJson>,
}

impl From<&SpectrumTable> for SpectrumJson {
    fn from(t: &SpectrumTable) -> Self {
        SpectrumJson {
            case: t.case.label().to_string(),
            entries: t
                .entries
                .iter()
                .map(|e| SpectrumEntryJson { coefficient: e.coefficient, multiplicity: e.multiplicity })
                .collect(),
        }
    }
}

impl TryFrom<SpectrumJson> for SpectrumTable {
    type Error = CliError;

    fn try_from(s: SpectrumJson) -> Result<Self, CliError> {
        let case = SpectrumCase::from_label(&s.case)
            .ok_or_else(|| CliError::Usage(format!("unknown spectrum case {:?}", s.case)))?;
        let entries = s
            .entries
            .into_iter()
            .map(|e| SpectrumEntry { coefficient: e.coefficient, multiplicity: e.multiplicity })
            .collect();
        Ok(SpectrumTable { case, entries })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrengthJson {
    pub schmidt_number: usize,
    pub hartley: f64,
    pub schmidt_strength: f64,
    pub q0_lower: f64,
    pub q0_lower_original: f64,
    pub q0_upper: Option<f64>,
}

impl From<&StrengthReport> for StrengthJson {
    fn from(r: &StrengthReport) -> Self {
        StrengthJson {
            schmidt_number: r.schmidt_number,
            hartley: r.hartley,
            schmidt_strength: r.schmidt_strength,
            q0_lower: r.q0_lower,
            q0_lower_original: r.q0_lower_original,
            q0_upper: r.q0_upper,
        }
    }
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

pub fn render_spectrum_csv(out: &mut dyn Write, t: &SpectrumTable) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(["case", "coefficient", "multiplicity"])?;
    for e in &t.entries {
        w.write_record([t.case.label().to_string(), fmt_real(e.coefficient), e.multiplicity.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn render_spectrum_table(out: &mut dyn Write, t: &SpectrumTable) -> Result<(), CliError> {
    writeln!(out, "case: {}", t.case.label())?;
    writeln!(out, "{:<24} {:>12}", "coefficient", "multiplicity")?;
    for e in &t.entries {
        writeln!(out, "{:<24} {:>12}", e.coefficient, e.multiplicity)?;
    }
    writeln!(out, "schmidt number: {}", t.schmidt_number())?;
    Ok(())
}

pub fn render_decomposition_csv(out: &mut dyn Write, d: &SchmidtDecomposition) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(["n1", "n2", "term", "lambda"])?;
    for (k, t) in d.terms.iter().enumerate() {
        w.write_record([d.dims.n1().to_string(), d.dims.n2().to_string(), k.to_string(), fmt_real(t.coefficient)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn render_decomposition_table(out: &mut dyn Write, d: &SchmidtDecomposition) -> Result<(), CliError> {
    writeln!(out, "dims: {} x {}", d.dims.n1(), d.dims.n2())?;
    writeln!(out, "schmidt number: {}", d.schmidt_number())?;
    writeln!(out, "{:>5}  lambda", "term")?;
    for (k, t) in d.terms.iter().enumerate() {
        writeln!(out, "{k:>5}  {}", t.coefficient)?;
    }
    Ok(())
}

pub fn render_strength_csv(out: &mut dyn Write, r: &StrengthReport) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    w.write_record(["schmidt_number", "hartley", "schmidt_strength", "q0_lower", "q0_lower_original", "q0_upper"])?;
    w.write_record([
        r.schmidt_number.to_string(),
        fmt_real(r.hartley),
        fmt_real(r.schmidt_strength),
        fmt_real(r.q0_lower),
        fmt_real(r.q0_lower_original),
        r.q0_upper.map(fmt_real).unwrap_or_default(),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn render_strength_table(out: &mut dyn Write, r: &StrengthReport) -> Result<(), CliError> {
    writeln!(out, "schmidt number:     {}", r.schmidt_number)?;
    writeln!(out, "hartley (bits):     {}", r.hartley)?;
    writeln!(out, "schmidt strength:   {}", r.schmidt_strength)?;
    writeln!(out, "q0 lower:           {}", r.q0_lower)?;
    writeln!(out, "q0 lower (K_Har/2): {}", r.q0_lower_original)?;
    match r.q0_upper {
        Some(u) => writeln!(out, "q0 upper:           {u}")?,
        None => writeln!(out, "q0 upper:           n/a")?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use opschmidt_core::qft::{closed_form_decomposition, spectrum_by_cases};

    #[test]
    fn matrix_json_shape_checked() {
        assert!(parse_matrix(r#"{"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0]]}"#).is_err());
        assert!(parse_matrix(r#"{"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0],"x"]}"#).is_err());
        let m = parse_matrix(r#"{"rows":1,"cols":2,"data":[[1,0.5],[0,-2]]}"#).unwrap();
        assert_eq!(m[(0, 1)], Complex64::new(0.0, -2.0));
    }

    #[test]
    fn decomposition_json_round_trip() {
        let d = closed_form_decomposition(BipartiteDims::new(2, 3).unwrap());
        let text = serde_json::to_string(&DecompositionJson::from(&d)).unwrap();
        let back: DecompositionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SchmidtDecomposition::try_from(back).unwrap(), d);
        assert!(text.contains("\"lambda\"") && text.contains("\"A\"") && text.contains("\"B\""));
    }

    #[test]
    fn spectrum_json_round_trip() {
        let t = spectrum_by_cases(BipartiteDims::new(4, 6).unwrap());
        let text = serde_json::to_string(&SpectrumJson::from(&t)).unwrap();
        let back: SpectrumJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SpectrumTable::try_from(back).unwrap(), t);
    }

    #[test]
    fn csv_reals_round_trip() {
        for x in [2f64.sqrt(), 1.0 / 3.0, 1e-300, 123456789.12345679] {
            assert_eq!(fmt_real(x).parse::<f64>().unwrap(), x);
        }
    }
}
