//! The quaternion witness separating the RC and CR matrix groups.
//!
//! With `b = 1+k`, `c = j` (so `c*b = j + i`) the matrix
//!
//! ```text
//! [ 1    1+k ]
//! [ j    i+j ]
//! ```
//!
//! is RC-singular — its second row is `j` times the first, the RC
//! quasideterminant at (1,1) is a defined zero, and the RC rank is 1 — yet
//! CR-nonsingular: the CR quasideterminant at (1,1) is `2i` and a two-sided
//! CR inverse exists. One exact instance proves that the groups of RC- and
//! CR-nonsingular 2x2 quaternion matrices differ.

use std::fmt::Write as _;

use crate::matrix::{Matrix, ProductKind};
use crate::quasidet::{cr_quasidet, rc_quasidet, QuasidetResult};
use crate::rank::{cr_rank, rc_rank, RankReport};
use crate::scalar::Quaternion;
use crate::solve::{cr_inverse, solve_general, Side, SolveOutcome};

/// `[[1, 1+k], [j, i+j]]`.
pub fn witness_matrix() -> Matrix<Quaternion> {
    let parse = |s: &str| Quaternion::parse(s).expect("literal");
    Matrix::from_rows(vec![
        vec![parse("1"), parse("1+k")],
        vec![parse("j"), parse("i+j")],
    ])
    .expect("rectangular literal")
}

/// One of the four orientation variants of the witness system with right-hand
/// side of ones.
pub struct SystemVariant {
    pub side: Side,
    pub product: ProductKind,
    pub outcome: SolveOutcome<Quaternion>,
}

/// Everything the demo claims about the witness, machine-checked.
pub struct WitnessReport {
    pub matrix: Matrix<Quaternion>,
    pub rc_rank: RankReport<Quaternion>,
    pub cr_rank: RankReport<Quaternion>,
    pub rc_quasidet_11: QuasidetResult<Quaternion>,
    pub cr_quasidet_11: QuasidetResult<Quaternion>,
    pub cr_inverse: Matrix<Quaternion>,
    pub systems: Vec<SystemVariant>,
}

/// Builds the full report. Panics only on internal contract violations
/// (square shapes, conformable products), never on mathematical content;
/// use [`WitnessReport::check`] for the mathematical claims.
pub fn witness_report() -> WitnessReport {
    let matrix = witness_matrix();
    let rc_rank_report = rc_rank(&matrix);
    let cr_rank_report = cr_rank(&matrix);
    let rc_qd = rc_quasidet(&matrix, 1, 1).expect("square 2x2");
    let cr_qd = cr_quasidet(&matrix, 1, 1).expect("square 2x2");
    let cr_inv = cr_inverse(&matrix)
        .expect("square 2x2")
        .expect("witness is CR-nonsingular");
    let ones_col = Matrix::column_vector(vec![Quaternion::one(), Quaternion::one()]);
    let ones_row = Matrix::row_vector(vec![Quaternion::one(), Quaternion::one()]);
    let mut systems = Vec::new();
    for (side, product) in [
        (Side::Right, ProductKind::Rc),
        (Side::Left, ProductKind::Rc),
        (Side::Right, ProductKind::Cr),
        (Side::Left, ProductKind::Cr),
    ] {
        let b = match side {
            Side::Right => &ones_col,
            Side::Left => &ones_row,
        };
        let outcome = solve_general(&matrix, b, side, product).expect("conformable");
        systems.push(SystemVariant {
            side,
            product,
            outcome,
        });
    }
    WitnessReport {
        matrix,
        rc_rank: rc_rank_report,
        cr_rank: cr_rank_report,
        rc_quasidet_11: rc_qd,
        cr_quasidet_11: cr_qd,
        cr_inverse: cr_inv,
        systems,
    }
}

impl WitnessReport {
    /// Verifies every claim exactly; returns the list of failures (empty on
    /// success). A failure here is a build-breaking defect.
    pub fn check(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let mut claim = |ok: bool, text: &str| {
            if !ok {
                failures.push(text.to_string());
            }
        };
        let two_i = Quaternion::parse("2i").expect("literal");
        let j = Quaternion::parse("j").expect("literal");
        claim(self.rc_rank.rank == 1, "RC rank is 1");
        claim(self.cr_rank.rank == 2, "CR rank is 2");
        claim(self.rc_rank.verify(&self.matrix), "RC certificates verify");
        claim(self.cr_rank.verify(&self.matrix), "CR certificates verify");
        claim(
            self.rc_rank.row_dependencies.len() == 1
                && self.rc_rank.row_dependencies[0].coefficients == vec![j],
            "row 1 = j * row 0",
        );
        claim(
            self.rc_quasidet_11 == QuasidetResult::Defined(Quaternion::zero()),
            "RC quasideterminant at (1,1) is a defined 0",
        );
        claim(
            self.cr_quasidet_11 == QuasidetResult::Defined(two_i),
            "CR quasideterminant at (1,1) is 2i",
        );
        let identity = Matrix::identity(2);
        claim(
            self.matrix.cr_mul(&self.cr_inverse).ok().as_ref() == Some(&identity)
                && self.cr_inverse.cr_mul(&self.matrix).ok().as_ref() == Some(&identity),
            "CR inverse is two-sided",
        );
        for variant in &self.systems {
            match variant.product {
                ProductKind::Rc => claim(
                    !matches!(variant.outcome, SolveOutcome::Unique(_)),
                    "RC systems cannot be uniquely solvable",
                ),
                ProductKind::Cr => claim(
                    matches!(variant.outcome, SolveOutcome::Unique(_)),
                    "CR systems are uniquely solvable",
                ),
            }
        }
        failures
    }

    /// Human-readable walkthrough, deterministic for fixed input.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "witness matrix over the quaternions (b = 1+k, c = j):");
        let _ = writeln!(out, "{}", self.matrix);
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "RC rank: {}  (major rows {}, cols {})",
            self.rc_rank.rank, self.rc_rank.major_rows, self.rc_rank.major_cols
        );
        if let Some(dep) = self.rc_rank.row_dependencies.first() {
            let _ = writeln!(
                out,
                "left row dependency: row {} = ({}) * row {}",
                dep.index,
                dep.coefficients[0],
                self.rc_rank.major_rows.as_slice()[0]
            );
        }
        let _ = writeln!(out, "CR rank: {}", self.cr_rank.rank);
        let describe = |r: &QuasidetResult<Quaternion>| match r {
            QuasidetResult::Defined(v) => format!("{v}"),
            QuasidetResult::Undefined {
                minor_rows,
                minor_cols,
            } => format!("undefined (minor rows {minor_rows}, cols {minor_cols})"),
        };
        let _ = writeln!(
            out,
            "RC quasideterminant at (1,1): {}",
            describe(&self.rc_quasidet_11)
        );
        let _ = writeln!(
            out,
            "CR quasideterminant at (1,1): {}",
            describe(&self.cr_quasidet_11)
        );
        let _ = writeln!(out);
        let _ = writeln!(out, "CR inverse:");
        let _ = writeln!(out, "{}", self.cr_inverse);
        if let Ok(product) = self.matrix.cr_mul(&self.cr_inverse) {
            let _ = writeln!(out, "verification, witness cr* inverse:");
            let _ = writeln!(out, "{product}");
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "the four system variants with right-hand side of ones:");
        for variant in &self.systems {
            let shape = match variant.side {
                Side::Right => "A * x = b (column unknown)",
                Side::Left => "x * A = b (row unknown)",
            };
            let verdict = match &variant.outcome {
                SolveOutcome::Unique(x) => format!("unique solution {}", render_flat(x)),
                SolveOutcome::Parametric { free, .. } => {
                    format!("parametric with {} free variable(s)", free.len())
                }
                SolveOutcome::Inconsistent {
                    coefficient_rank,
                    extended_rank,
                } => format!(
                    "inconsistent (rank {coefficient_rank} vs extended {extended_rank})"
                ),
            };
            let _ = writeln!(out, "  {} under {}: {}", shape, variant.product, verdict);
        }
        let _ = writeln!(
            out,
            "\nconclusion: the witness is RC-singular yet CR-nonsingular;"
        );
        let _ = writeln!(
            out,
            "RC-GL(2, H) and CR-GL(2, H) are different groups."
        );
        out
    }
}

fn render_flat(x: &Matrix<Quaternion>) -> String {
    let mut parts = Vec::new();
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            parts.push(x[(i, j)].to_string());
        }
    }
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_claim_checks() {
        let report = witness_report();
        let failures = report.check();
        assert!(failures.is_empty(), "witness failures: {failures:?}");
    }

    #[test]
    fn rendering_is_deterministic() {
        assert_eq!(witness_report().render(), witness_report().render());
    }
}
