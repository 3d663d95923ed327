//! Render library results as text or JSON. Both forms are deterministic for
//! fixed input: text scalars use the scalar grammar, JSON uses the wire
//! structs.

use serde::Deserialize;
use serde_json::json;

use skewlin::wire::{
    MatrixWire, QuasidetWire, RankReportWire, SolveOutcomeWire, WireScalar,
};
use skewlin::{
    Matrix, ProductKind, QuasidetEngine, QuasidetResult, RankReport, SolveOutcome,
};

use crate::{FormatArg, UsageError};

/// Input for `span` and `independent`: `{"family": matrix, "vector": matrix?}`.
#[derive(Deserialize)]
pub struct FamilyInput {
    pub family: MatrixWire,
    pub vector: Option<MatrixWire>,
}

/// Input for `coords`: `{"basis": matrix, "vector": matrix}`.
#[derive(Deserialize)]
pub struct BasisInput {
    pub basis: MatrixWire,
    pub vector: MatrixWire,
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn render_matrix<T: WireScalar>(m: &Matrix<T>, format: FormatArg) -> String {
    match format {
        FormatArg::Text => m.to_string(),
        FormatArg::Json => pretty(&MatrixWire::from_matrix(m)),
    }
}

pub fn render_outcome<T: WireScalar>(outcome: &SolveOutcome<T>, format: FormatArg) -> String {
    if format == FormatArg::Json {
        return pretty(&SolveOutcomeWire::from_outcome(outcome));
    }
    match outcome {
        SolveOutcome::Unique(x) => format!("unique solution:\n{x}"),
        SolveOutcome::Parametric {
            particular,
            free,
            homogeneous_basis,
        } => {
            let mut out = format!(
                "parametric solution with {} free variable(s) {}:\nparticular:\n{particular}",
                free.len(),
                free
            );
            for (v, f) in homogeneous_basis.iter().zip(free.iter()) {
                out.push_str(&format!("\nhomogeneous basis vector (free variable {f}):\n{v}"));
            }
            out
        }
        SolveOutcome::Inconsistent {
            coefficient_rank,
            extended_rank,
        } => format!(
            "inconsistent: coefficient rank {coefficient_rank} < extended rank {extended_rank}"
        ),
    }
}

pub fn render_singular(product: ProductKind, format: FormatArg) -> String {
    match format {
        FormatArg::Text => format!("matrix is {product}-singular"),
        FormatArg::Json => pretty(&json!({ "singular": true, "product": product })),
    }
}

pub fn render_rank<T: WireScalar>(report: &RankReport<T>, format: FormatArg) -> String {
    if format == FormatArg::Json {
        return pretty(&RankReportWire::from_report(report));
    }
    let mut out = format!(
        "{} rank: {}\nmajor rows: {}\nmajor cols: {}",
        report.product, report.rank, report.major_rows, report.major_cols
    );
    let coeff_list = |coefficients: &[T]| {
        coefficients
            .iter()
            .map(|c| format!("({c})"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    for dep in &report.row_dependencies {
        let side = match report.product {
            ProductKind::Rc => "left",
            ProductKind::Cr => "right",
        };
        out.push_str(&format!(
            "\nrow {} = combination of major rows with {} coefficients [{}]",
            dep.index,
            side,
            coeff_list(&dep.coefficients)
        ));
    }
    for dep in &report.col_dependencies {
        let side = match report.product {
            ProductKind::Rc => "right",
            ProductKind::Cr => "left",
        };
        out.push_str(&format!(
            "\ncol {} = combination of major cols with {} coefficients [{}]",
            dep.index,
            side,
            coeff_list(&dep.coefficients)
        ));
    }
    out
}

pub fn render_quasidet<T: WireScalar>(result: &QuasidetResult<T>, format: FormatArg) -> String {
    match format {
        FormatArg::Json => pretty(&QuasidetWire::from_result(result)),
        FormatArg::Text => match result {
            QuasidetResult::Defined(v) => v.to_string(),
            QuasidetResult::Undefined {
                minor_rows,
                minor_cols,
            } => format!("undefined (minor rows {minor_rows}, cols {minor_cols})"),
        },
    }
}

pub fn render_quasidet_table<T: WireScalar>(
    a: &Matrix<T>,
    product: ProductKind,
    format: FormatArg,
) -> Result<String, UsageError> {
    // The CR table is the conjugated RC table of the conjugated matrix.
    let worker = match product {
        ProductKind::Rc => a.clone(),
        ProductKind::Cr => a.conjugate(),
    };
    let mut engine = QuasidetEngine::new(&worker)?;
    let table = engine.rc_table()?;
    let transport = |r: QuasidetResult<T>| match (product, r) {
        (ProductKind::Cr, QuasidetResult::Defined(v)) => {
            QuasidetResult::Defined(skewlin::DivisionRing::conj(&v))
        }
        (_, other) => other,
    };
    let table: Vec<Vec<QuasidetResult<T>>> = table
        .into_iter()
        .map(|row| row.into_iter().map(transport).collect())
        .collect();
    if format == FormatArg::Json {
        let rows: Vec<Vec<QuasidetWire>> = table
            .iter()
            .map(|row| row.iter().map(QuasidetWire::from_result).collect())
            .collect();
        return Ok(pretty(&json!({ "product": product, "table": rows })));
    }
    let mut out = format!("{product} quasideterminants:");
    for (i, row) in table.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            out.push_str(&format!(
                "\n({i},{j}): {}",
                render_quasidet(value, FormatArg::Text)
            ));
        }
    }
    Ok(out)
}

pub fn render_singular_check(rc: bool, cr: bool, format: FormatArg) -> String {
    match format {
        FormatArg::Text => format!("RC-singular: {rc}\nCR-singular: {cr}"),
        FormatArg::Json => pretty(&json!({ "rc_singular": rc, "cr_singular": cr })),
    }
}

pub fn render_coefficients<T: WireScalar>(c: &Matrix<T>, format: FormatArg) -> String {
    match format {
        FormatArg::Json => pretty(&json!({ "coefficients": MatrixWire::from_matrix(c) })),
        FormatArg::Text => {
            let parts: Vec<String> = (0..c.cols()).map(|j| c[(0, j)].to_string()).collect();
            format!("coefficients: ({})", parts.join(", "))
        }
    }
}

pub fn render_not_in_span(format: FormatArg) -> String {
    match format {
        FormatArg::Text => "not in span".to_string(),
        FormatArg::Json => pretty(&json!({ "coefficients": null })),
    }
}

pub fn render_independent(
    independent: bool,
    rank: usize,
    count: usize,
    format: FormatArg,
) -> String {
    match format {
        FormatArg::Text => format!("independent: {independent} (rank {rank} of {count} vectors)"),
        FormatArg::Json => pretty(&json!({
            "independent": independent,
            "rank": rank,
            "vectors": count,
        })),
    }
}

pub fn render_not_a_basis(e: &skewlin::Error, format: FormatArg) -> String {
    match format {
        FormatArg::Text => e.to_string(),
        FormatArg::Json => pretty(&json!({ "coefficients": null, "reason": e.to_string() })),
    }
}
