//! Command-line surface. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use opschmidt_core::qft::{closed_form_decomposition, enumerate_classes, qft_bipartite, spectrum_by_cases};
use opschmidt_core::schmidt::{gram_error, reconstruct_terms, schmidt_decompose, SchmidtDecomposition, DEFAULT_REL_TOL};
use opschmidt_core::strength::{
    communication_operator, communication_operator_decomposition, communication_operator_numeric,
    communication_split, strength_report,
};
use opschmidt_core::{BipartiteDims, ComplexMatrix};
use serde::Serialize;

use crate::error::CliError;
use crate::formats::{self, fmt_real, ClassPartitionJson, DecompositionJson, MatrixJson, SpectrumJson, StrengthJson};
use crate::verify::{sweep, Fault, VerifyOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "opschmidt", version, about = "Operator-Schmidt decompositions of the quantum Fourier transform")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    #[arg(long)]
    pub n1: usize,
    #[arg(long)]
    pub n2: usize,
}

impl DimArgs {
    fn dims(&self) -> Result<BipartiteDims, CliError> {
        BipartiteDims::new(self.n1, self.n2)
            .map_err(|_| CliError::Usage(format!("--n1 and --n2 must be at least 2 (got {} and {})", self.n1, self.n2)))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distinct Schmidt coefficients of F_{N1xN2} with multiplicities.
    Spectrum {
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Schmidt decomposition of F_{N1xN2} (closed form, or numerical with --numeric).
    Decompose {
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        tol: f64,
        /// Write the decomposition JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Numerical Schmidt decomposition of an operator read from a matrix JSON file.
    DecomposeFile {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Cross-check closed form against realignment + SVD for every pair up to the bounds.
    Verify {
        /// Square sweep bound, used for both dimensions unless overridden.
        #[arg(long, default_value_t = 8)]
        max: usize,
        #[arg(long)]
        n1_max: Option<usize>,
        #[arg(long)]
        n2_max: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Corrupt one closed-form phase for the pair N1xN2 (testing aid).
        #[arg(long, hide = true, value_name = "N1xN2")]
        inject_fault: Option<String>,
    },
    /// Hartley and Schmidt strengths and communication bounds for F_{N1xN2}.
    Strength {
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long)]
        numeric: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Schmidt decomposition of the re-association operator (C^n1 ⊗ C^n2) ⊗ C^n3 → C^n1 ⊗ (C^n2 ⊗ C^n3).
    Commop {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        n3: usize,
        #[arg(long, default_value_t = DEFAULT_REL_TOL)]
        tol: f64,
        /// Include the factor matrices.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Partition of Z_{N2}^2 into translation classes modulo N1·Z^2.
    Classes {
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Spectrum { dims, format } => {
            let t = spectrum_by_cases(dims.dims()?);
            match format {
                Format::Json => formats::write_json(out, &SpectrumJson::from(&t))?,
                Format::Csv => formats::render_spectrum_csv(out, &t)?,
                Format::Table => formats::render_spectrum_table(out, &t)?,
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { dims, numeric, tol, out: path, format } => {
            let dims = dims.dims()?;
            let d = if numeric {
                schmidt_decompose(&qft_bipartite(dims), dims, tol)?
            } else {
                closed_form_decomposition(dims)
            };
            emit_decomposition(&d, path, format, out)?;
            Ok(EXIT_OK)
        }
        Command::DecomposeFile { input, dims, tol, out: path, format } => {
            let dims = dims.dims()?;
            let text = std::fs::read_to_string(&input)?;
            let f = formats::parse_matrix(&text)?;
            if f.shape() != (dims.n(), dims.n()) {
                return Err(CliError::Usage(format!(
                    "matrix in {} is {}x{}, expected {n}x{n} for dims ({}, {})",
                    input.display(),
                    f.rows(),
                    f.cols(),
                    dims.n1(),
                    dims.n2(),
                    n = dims.n()
                )));
            }
            let d = schmidt_decompose(&f, dims, tol)?;
            emit_decomposition(&d, path, format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { max, n1_max, n2_max, tol, format, inject_fault } => {
            let fault = inject_fault.as_deref().map(parse_fault).transpose()?;
            let outcomes = sweep(n1_max.unwrap_or(max), n2_max.unwrap_or(max), tol, fault)?;
            render_verify(&outcomes, format, out)?;
            let failed: Vec<&VerifyOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
            for o in &failed {
                writeln!(err, "verification failed for (n1, n2) = ({}, {})", o.n1, o.n2)?;
            }
            Ok(if failed.is_empty() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Strength { dims, numeric, format } => {
            let dims = dims.dims()?;
            let d = if numeric {
                schmidt_decompose(&qft_bipartite(dims), dims, DEFAULT_REL_TOL)?
            } else {
                closed_form_decomposition(dims)
            };
            let r = strength_report(&d)?;
            match format {
                Format::Json => formats::write_json(out, &StrengthJson::from(&r))?,
                Format::Csv => formats::render_strength_csv(out, &r)?,
                Format::Table => formats::render_strength_table(out, &r)?,
            }
            Ok(EXIT_OK)
        }
        Command::Commop { n1, n2, n3, tol, full, format } => commop(n1, n2, n3, tol, full, format, out),
        Command::Classes { dims, format } => {
            let dims = dims.dims()?;
            let classes = enumerate_classes(dims);
            match format {
                Format::Json => formats::write_json(out, &ClassPartitionJson::new(dims, &classes))?,
                Format::Csv => {
                    let mut w = formats::csv_writer(out);
                    w.write_record(["rep1", "rep2", "l1", "l2"])?;
                    for c in &classes {
                        for &(a, b) in &c.members {
                            w.write_record([c.rep.0, c.rep.1, a, b].map(|x| x.to_string()))?;
                        }
                    }
                    w.flush()?;
                }
                Format::Table => {
                    for c in &classes {
                        let members: Vec<String> = c.members.iter().map(|(a, b)| format!("({a},{b})")).collect();
                        writeln!(out, "({},{}) |C|={}: {}", c.rep.0, c.rep.1, c.size(), members.join(" "))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_fault(spec: &str) -> Result<Fault, CliError> {
    let bad = || CliError::Usage(format!("--inject-fault expects N1xN2, got {spec:?}"));
    let (a, b) = spec.split_once('x').ok_or_else(bad)?;
    let dims = BipartiteDims::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        .map_err(|_| bad())?;
    Ok(Fault { dims })
}

fn emit_decomposition(
    d: &SchmidtDecomposition,
    path: Option<PathBuf>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let doc = DecompositionJson::from(d);
    if let Some(path) = path {
        let mut file = std::io::BufWriter::new(std::fs::File::create(&path)?);
        formats::write_json(&mut file, &doc)?;
        file.flush()?;
    }
    match format {
        Format::Json => formats::write_json(out, &doc),
        Format::Csv => formats::render_decomposition_csv(out, d),
        Format::Table => formats::render_decomposition_table(out, d),
    }
}

fn render_verify(outcomes: &[VerifyOutcome], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => formats::write_json(out, &outcomes)?,
        Format::Csv => {
            let mut w = formats::csv_writer(out);
            w.write_record([
                "n1",
                "n2",
                "case",
                "max_coeff_deviation",
                "max_reconstruction_error",
                "max_orthonormality_error",
                "schmidt_number_match",
                "max_rho_deviation",
                "chi_identity",
                "passed",
            ])?;
            for o in outcomes {
                w.write_record([
                    o.n1.to_string(),
                    o.n2.to_string(),
                    o.case_label.clone(),
                    fmt_real(o.max_coeff_deviation),
                    fmt_real(o.max_reconstruction_error),
                    fmt_real(o.max_orthonormality_error),
                    o.schmidt_number_match.to_string(),
                    fmt_real(o.max_rho_deviation),
                    o.chi_identity.to_string(),
                    o.passed.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(
                out,
                "{:>3} {:>3}  {:<9} {:>10} {:>10} {:>10} {:>10}  {:<5} {:<5} result",
                "n1", "n2", "case", "coeff", "recon", "orth", "rho", "sch", "chi"
            )?;
            for o in outcomes {
                writeln!(
                    out,
                    "{:>3} {:>3}  {:<9} {:>10.3e} {:>10.3e} {:>10.3e} {:>10.3e}  {:<5} {:<5} {}",
                    o.n1,
                    o.n2,
                    o.case_label,
                    o.max_coeff_deviation,
                    o.max_reconstruction_error,
                    o.max_orthonormality_error,
                    o.max_rho_deviation,
                    o.schmidt_number_match,
                    o.chi_identity,
                    if o.passed { "ok" } else { "FAIL" }
                )?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            writeln!(out, "checked {} pairs, {} failed", outcomes.len(), failed)?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CommopFactor {
    coefficient: f64,
    #[serde(rename = "A")]
    a: MatrixJson,
    #[serde(rename = "B")]
    b: MatrixJson,
}

#[derive(Debug, Serialize)]
struct CommopSummary {
    n1: usize,
    n2: usize,
    n3: usize,
    terms: usize,
    coefficient: f64,
    numeric_terms: usize,
    max_coefficient_deviation: f64,
    reconstruction_error: f64,
    orthonormality_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<CommopFactor>>,
}

fn commop(n1: usize, n2: usize, n3: usize, tol: f64, full: bool, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    if n1 < 2 || n2 < 2 || n3 < 2 {
        return Err(CliError::Usage(format!("--n1, --n2, --n3 must be at least 2 (got {n1}, {n2}, {n3})")));
    }
    let closed = communication_operator_decomposition(n1, n2, n3)?;
    let numeric = communication_operator_numeric(n1, n2, n3, tol)?;
    let c: ComplexMatrix = communication_operator(n1, n2, n3)?;
    let coefficient = closed[0].coefficient;
    let max_dev = if closed.len() == numeric.len() {
        closed.iter().zip(&numeric).map(|(a, b)| (a.coefficient - b.coefficient).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let recon = reconstruct_terms(&closed, communication_split(n1, n2, n3)).distance(&c)?;
    let lefts: Vec<&ComplexMatrix> = closed.iter().map(|t| &t.left).collect();
    let rights: Vec<&ComplexMatrix> = closed.iter().map(|t| &t.right).collect();
    let orth = gram_error(&lefts).max(gram_error(&rights));
    let summary = CommopSummary {
        n1,
        n2,
        n3,
        terms: closed.len(),
        coefficient,
        numeric_terms: numeric.len(),
        max_coefficient_deviation: max_dev,
        reconstruction_error: recon,
        orthonormality_error: orth,
        factors: full.then(|| {
            closed
                .iter()
                .map(|t| CommopFactor { coefficient: t.coefficient, a: (&t.left).into(), b: (&t.right).into() })
                .collect()
        }),
    };
    let check_tol = tol.max(1e-10);
    let ok = max_dev <= check_tol && recon <= check_tol && orth <= check_tol;

    match format {
        Format::Json => formats::write_json(out, &summary)?,
        Format::Csv => {
            let mut w = formats::csv_writer(out);
            w.write_record(["n1", "n2", "n3", "term", "coefficient", "numeric_coefficient"])?;
            for (k, t) in closed.iter().enumerate() {
                let num = numeric.get(k).map(|t| fmt_real(t.coefficient)).unwrap_or_default();
                w.write_record([
                    n1.to_string(),
                    n2.to_string(),
                    n3.to_string(),
                    k.to_string(),
                    fmt_real(t.coefficient),
                    num,
                ])?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "terms: {}", summary.terms)?;
            writeln!(out, "coefficient: {}", summary.coefficient)?;
            writeln!(out, "numeric terms: {}", summary.numeric_terms)?;
            writeln!(out, "max coefficient deviation: {:e}", summary.max_coefficient_deviation)?;
            writeln!(out, "reconstruction error: {:e}", summary.reconstruction_error)?;
            if full {
                for (k, t) in closed.iter().enumerate() {
                    writeln!(out, "term {k}: A = {:?}", MatrixJson::from(&t.left).data)?;
                    writeln!(out, "term {k}: B = {:?}", MatrixJson::from(&t.right).data)?;
                }
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}
