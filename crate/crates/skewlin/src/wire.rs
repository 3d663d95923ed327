//! JSON wire formats.
//!
//! A scalar is a single string `"p"` / `"p/q"` for rationals, or an array of
//! four such strings `["w","x","y","z"]` for quaternions. A matrix is
//! `{"ring": "quaternion"|"rational", "rows": m, "cols": n, "entries": [[..]]}`.
//! A system is `{"A": matrix, "b": matrix, "side": "left"|"right"}`, where
//! `"right"` is the column system `A * x = b` and `"left"` the row system
//! `x * A = b` — noncommutativity makes these different systems.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::{IndexSet, Matrix, ProductKind};
use crate::quasidet::QuasidetResult;
use crate::rank::{Dependency, RankReport};
use crate::scalar::{DivisionRing, Quaternion, Rational};
use crate::solve::{Side, SolveOutcome};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Rational,
    Quaternion,
}

impl std::fmt::Display for RingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingKind::Rational => write!(f, "rational"),
            RingKind::Quaternion => write!(f, "quaternion"),
        }
    }
}

/// One scalar on the wire.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarWire {
    Rational(String),
    Quaternion([String; 4]),
}

/// Scalars that can cross the JSON boundary.
pub trait WireScalar: DivisionRing {
    const RING: RingKind;
    fn to_wire(&self) -> ScalarWire;
    fn from_wire(wire: &ScalarWire) -> Result<Self, Error>;
    /// The human-readable text form used by the CLI (`"1+k"`, `"-1/2"`).
    fn parse_text(text: &str) -> Result<Self, Error>;
}

impl WireScalar for Rational {
    const RING: RingKind = RingKind::Rational;

    fn to_wire(&self) -> ScalarWire {
        ScalarWire::Rational(self.to_string())
    }

    fn from_wire(wire: &ScalarWire) -> Result<Self, Error> {
        match wire {
            ScalarWire::Rational(s) => Rational::parse(s),
            ScalarWire::Quaternion(_) => Err(Error::Parse {
                position: 0,
                message: "expected a rational string, found a quaternion array".into(),
            }),
        }
    }

    fn parse_text(text: &str) -> Result<Self, Error> {
        Rational::parse(text)
    }
}

impl WireScalar for Quaternion {
    const RING: RingKind = RingKind::Quaternion;

    fn to_wire(&self) -> ScalarWire {
        ScalarWire::Quaternion([
            self.w.to_string(),
            self.x.to_string(),
            self.y.to_string(),
            self.z.to_string(),
        ])
    }

    fn from_wire(wire: &ScalarWire) -> Result<Self, Error> {
        match wire {
            ScalarWire::Quaternion([w, x, y, z]) => Ok(Quaternion::new(
                Rational::parse(w)?,
                Rational::parse(x)?,
                Rational::parse(y)?,
                Rational::parse(z)?,
            )),
            ScalarWire::Rational(_) => Err(Error::Parse {
                position: 0,
                message: "expected a quaternion array of 4 strings, found a plain string".into(),
            }),
        }
    }

    fn parse_text(text: &str) -> Result<Self, Error> {
        Quaternion::parse(text)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MatrixWire {
    pub ring: RingKind,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<ScalarWire>>,
}

impl MatrixWire {
    pub fn from_matrix<T: WireScalar>(m: &Matrix<T>) -> Self {
        MatrixWire {
            ring: T::RING,
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_wire()).collect())
                .collect(),
        }
    }

    pub fn to_matrix<T: WireScalar>(&self) -> Result<Matrix<T>, Error> {
        if self.ring != T::RING {
            return Err(Error::Parse {
                position: 0,
                message: format!("expected ring {}, found {}", T::RING, self.ring),
            });
        }
        if self.entries.len() != self.rows {
            return Err(Error::Parse {
                position: 0,
                message: format!(
                    "declared {} rows but found {} entry rows",
                    self.rows,
                    self.entries.len()
                ),
            });
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(Error::Parse {
                    position: 0,
                    message: format!(
                        "declared {} cols but row {} has {} entries",
                        self.cols,
                        i,
                        row.len()
                    ),
                });
            }
            rows.push(
                row.iter()
                    .map(T::from_wire)
                    .collect::<Result<Vec<T>, Error>>()?,
            );
        }
        Matrix::from_rows(rows)
    }
}

/// `{"A": ..., "b": ..., "side": "left"|"right"}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SystemWire {
    #[serde(rename = "A")]
    pub a: MatrixWire,
    pub b: MatrixWire,
    #[serde(default = "default_side")]
    pub side: Side,
}

fn default_side() -> Side {
    Side::Right
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum SolveOutcomeWire {
    Unique {
        solution: MatrixWire,
    },
    Parametric {
        particular: MatrixWire,
        free: Vec<usize>,
        homogeneous_basis: Vec<MatrixWire>,
    },
    Inconsistent {
        coefficient_rank: usize,
        extended_rank: usize,
    },
}

impl SolveOutcomeWire {
    pub fn from_outcome<T: WireScalar>(outcome: &SolveOutcome<T>) -> Self {
        match outcome {
            SolveOutcome::Unique(x) => SolveOutcomeWire::Unique {
                solution: MatrixWire::from_matrix(x),
            },
            SolveOutcome::Parametric {
                particular,
                free,
                homogeneous_basis,
            } => SolveOutcomeWire::Parametric {
                particular: MatrixWire::from_matrix(particular),
                free: free.as_slice().to_vec(),
                homogeneous_basis: homogeneous_basis
                    .iter()
                    .map(MatrixWire::from_matrix)
                    .collect(),
            },
            SolveOutcome::Inconsistent {
                coefficient_rank,
                extended_rank,
            } => SolveOutcomeWire::Inconsistent {
                coefficient_rank: *coefficient_rank,
                extended_rank: *extended_rank,
            },
        }
    }

    pub fn to_outcome<T: WireScalar>(&self) -> Result<SolveOutcome<T>, Error> {
        Ok(match self {
            SolveOutcomeWire::Unique { solution } => SolveOutcome::Unique(solution.to_matrix()?),
            SolveOutcomeWire::Parametric {
                particular,
                free,
                homogeneous_basis,
            } => SolveOutcome::Parametric {
                particular: particular.to_matrix()?,
                free: IndexSet::new(free.clone())?,
                homogeneous_basis: homogeneous_basis
                    .iter()
                    .map(MatrixWire::to_matrix)
                    .collect::<Result<_, Error>>()?,
            },
            SolveOutcomeWire::Inconsistent {
                coefficient_rank,
                extended_rank,
            } => SolveOutcome::Inconsistent {
                coefficient_rank: *coefficient_rank,
                extended_rank: *extended_rank,
            },
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DependencyWire {
    pub index: usize,
    pub coefficients: Vec<ScalarWire>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RankReportWire {
    pub product: ProductKind,
    pub rank: usize,
    pub major_rows: Vec<usize>,
    pub major_cols: Vec<usize>,
    pub row_dependencies: Vec<DependencyWire>,
    pub col_dependencies: Vec<DependencyWire>,
}

impl RankReportWire {
    pub fn from_report<T: WireScalar>(report: &RankReport<T>) -> Self {
        let deps = |items: &[Dependency<T>]| {
            items
                .iter()
                .map(|d| DependencyWire {
                    index: d.index,
                    coefficients: d.coefficients.iter().map(T::to_wire).collect(),
                })
                .collect()
        };
        RankReportWire {
            product: report.product,
            rank: report.rank,
            major_rows: report.major_rows.as_slice().to_vec(),
            major_cols: report.major_cols.as_slice().to_vec(),
            row_dependencies: deps(&report.row_dependencies),
            col_dependencies: deps(&report.col_dependencies),
        }
    }

    pub fn to_report<T: WireScalar>(&self) -> Result<RankReport<T>, Error> {
        let deps = |items: &[DependencyWire]| {
            items
                .iter()
                .map(|d| {
                    Ok(Dependency {
                        index: d.index,
                        coefficients: d
                            .coefficients
                            .iter()
                            .map(T::from_wire)
                            .collect::<Result<_, Error>>()?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()
        };
        Ok(RankReport {
            product: self.product,
            rank: self.rank,
            major_rows: IndexSet::new(self.major_rows.clone())?,
            major_cols: IndexSet::new(self.major_cols.clone())?,
            row_dependencies: deps(&self.row_dependencies)?,
            col_dependencies: deps(&self.col_dependencies)?,
        })
    }
}

/// Quasideterminant value on the wire.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum QuasidetWire {
    Defined {
        value: ScalarWire,
    },
    Undefined {
        minor_rows: Vec<usize>,
        minor_cols: Vec<usize>,
    },
}

impl QuasidetWire {
    pub fn from_result<T: WireScalar>(result: &QuasidetResult<T>) -> Self {
        match result {
            QuasidetResult::Defined(v) => QuasidetWire::Defined { value: v.to_wire() },
            QuasidetResult::Undefined {
                minor_rows,
                minor_cols,
            } => QuasidetWire::Undefined {
                minor_rows: minor_rows.as_slice().to_vec(),
                minor_cols: minor_cols.as_slice().to_vec(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Quaternion {
        Quaternion::parse(text).unwrap()
    }

    #[test]
    fn matrix_json_shape_is_bit_exact() {
        let m = Matrix::from_rows(vec![vec![q("1+k"), q("-1/2i")]]).unwrap();
        let wire = MatrixWire::from_matrix(&m);
        let json = serde_json::to_string(&wire).unwrap();
        assert_eq!(
            json,
            r#"{"ring":"quaternion","rows":1,"cols":2,"entries":[[["1","0","0","1"],["0","-1/2","0","0"]]]}"#
        );
        let back: MatrixWire = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_matrix::<Quaternion>().unwrap(), m);
    }

    #[test]
    fn rational_matrix_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![Rational::new(1, 2).unwrap(), Rational::from_int(-3)],
            vec![Rational::from_int(0), Rational::new(7, 5).unwrap()],
        ])
        .unwrap();
        let wire = MatrixWire::from_matrix(&m);
        let json = serde_json::to_string(&wire).unwrap();
        let back: MatrixWire = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_matrix::<Rational>().unwrap(), m);
        // Ring mismatch is a parse error, not a silent promotion.
        assert!(back.to_matrix::<Quaternion>().is_err());
    }

    #[test]
    fn shape_mismatch_rejected() {
        let json = r#"{"ring":"rational","rows":2,"cols":1,"entries":[["1"]]}"#;
        let wire: MatrixWire = serde_json::from_str(json).unwrap();
        assert!(wire.to_matrix::<Rational>().is_err());
    }

    #[test]
    fn outcome_round_trip() {
        let w = Matrix::from_rows(vec![vec![q("1"), q("1+k")], vec![q("j"), q("i+j")]]).unwrap();
        let zero = Matrix::zero(2, 1);
        let outcome =
            crate::solve::solve_general(&w, &zero, Side::Right, crate::matrix::ProductKind::Rc)
                .unwrap();
        assert!(matches!(outcome, SolveOutcome::Parametric { .. }));
        let json = serde_json::to_string(&SolveOutcomeWire::from_outcome(&outcome)).unwrap();
        let back: SolveOutcomeWire = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_outcome::<Quaternion>().unwrap(), outcome);
    }

    #[test]
    fn outcome_discriminants() {
        let unique = SolveOutcome::Unique(Matrix::from_rows(vec![vec![q("1")]]).unwrap());
        let json = serde_json::to_string(&SolveOutcomeWire::from_outcome(&unique)).unwrap();
        assert!(json.starts_with(r#"{"outcome":"unique""#));
        let inconsistent: SolveOutcome<Quaternion> = SolveOutcome::Inconsistent {
            coefficient_rank: 1,
            extended_rank: 2,
        };
        let json = serde_json::to_string(&SolveOutcomeWire::from_outcome(&inconsistent)).unwrap();
        assert_eq!(
            json,
            r#"{"outcome":"inconsistent","coefficient_rank":1,"extended_rank":2}"#
        );
    }
}
