//! `skewlin` — exact linear algebra over the quaternions (and rationals)
//! from the command line.
//!
//! Exit codes: 0 on success, 1 on a mathematical negative (singular matrix
//! where an inverse was requested, inconsistent system, vector outside a
//! span, dependent family), 2 on usage or input errors.

mod output;
mod selftest;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewlin::wire::{MatrixWire, SystemWire, WireScalar};
use skewlin::{Matrix, Orientation, ProductKind, Quaternion, Rational, Side};

#[derive(Parser)]
#[command(
    name = "skewlin",
    version,
    about = "Exact linear algebra over noncommutative division rings",
    long_about = "Solve linear systems, invert matrices, compute ranks with dependency \
                  certificates and quasideterminants over exact quaternions or rationals. \
                  Matrices travel as JSON; scalars render in the text grammar (\"1+k\", \"-1/2i\")."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum ProductArg {
    #[default]
    Rc,
    Cr,
}

impl From<ProductArg> for ProductKind {
    fn from(p: ProductArg) -> Self {
        match p {
            ProductArg::Rc => ProductKind::Rc,
            ProductArg::Cr => ProductKind::Cr,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum SpaceArg {
    #[default]
    Rcd,
    Drc,
    Crd,
    Dcr,
}

impl From<SpaceArg> for Orientation {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::Rcd => Orientation::Rcd,
            SpaceArg::Drc => Orientation::Drc,
            SpaceArg::Crd => Orientation::Crd,
            SpaceArg::Dcr => Orientation::Dcr,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq)]
pub enum FormatArg {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Input file; `-` or omitted reads stdin.
    input: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a linear system `{"A":…, "b":…, "side":"left"|"right"}`.
    ///
    /// "right" is the column system A*x=b, "left" the row system x*A=b.
    Solve {
        #[arg(long, value_enum, default_value_t)]
        product: ProductArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Invert a square matrix; exits 1 when it is singular under the product.
    Inverse {
        #[arg(long, value_enum, default_value_t)]
        product: ProductArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Rank with major minor and row/column dependency certificates.
    Rank {
        #[arg(long, value_enum, default_value_t)]
        product: ProductArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Quasideterminant at (--row, --col), or the whole table when omitted.
    Quasidet {
        #[arg(long, value_enum, default_value_t)]
        product: ProductArg,
        #[arg(long)]
        row: Option<usize>,
        #[arg(long)]
        col: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Report RC- and CR-singularity of a square matrix.
    SingularCheck {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Coefficients of `{"vector":…}` in the span of `{"family":…}`.
    Span {
        #[arg(long, value_enum, default_value_t)]
        space: SpaceArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Linear independence of the rows of `{"family":…}`.
    Independent {
        #[arg(long, value_enum, default_value_t)]
        space: SpaceArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Coordinates of `{"vector":…}` in the basis `{"basis":…}`.
    Coords {
        #[arg(long, value_enum, default_value_t)]
        space: SpaceArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Walk through the quaternion matrix that is RC-singular yet
    /// CR-nonsingular, with every claim machine-checked.
    Demo,
    /// Randomized exact self-test; seed from SKEWLIN_SEED (default 1).
    SelfTest,
}

/// A failure that maps to exit code 2 with a diagnostic on stderr.
pub struct UsageError(pub String);

impl From<skewlin::Error> for UsageError {
    fn from(e: skewlin::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult = Result<u8, UsageError>;

fn read_input(path: &Option<PathBuf>) -> Result<String, UsageError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, UsageError> {
    serde_json::from_str(text).map_err(|e| UsageError(format!("invalid JSON input: {e}")))
}

/// A matrix of either scalar ring, dispatched by the JSON `ring` field.
enum AnyMatrix {
    Rational(Matrix<Rational>),
    Quaternion(Matrix<Quaternion>),
}

impl AnyMatrix {
    fn load(wire: &MatrixWire) -> Result<Self, UsageError> {
        Ok(match wire.ring {
            skewlin::wire::RingKind::Rational => AnyMatrix::Rational(wire.to_matrix()?),
            skewlin::wire::RingKind::Quaternion => AnyMatrix::Quaternion(wire.to_matrix()?),
        })
    }
}

/// Runs `$body` with `$m` bound to the concrete matrix of either ring.
macro_rules! dispatch {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            AnyMatrix::Rational(ref $m) => $body,
            AnyMatrix::Quaternion(ref $m) => $body,
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Solve { product, common } => {
            let system: SystemWire = parse_json(&read_input(&common.input)?)?;
            if system.a.ring != system.b.ring {
                return Err(UsageError(format!(
                    "A is over {} but b is over {}",
                    system.a.ring, system.b.ring
                )));
            }
            let a = AnyMatrix::load(&system.a)?;
            dispatch!(a, m => {
                let b = system.b.to_matrix()?;
                run_solve(m, &b, system.side, product.into(), common.format)
            })
        }
        Command::Inverse { product, common } => {
            let wire: MatrixWire = parse_json(&read_input(&common.input)?)?;
            let a = AnyMatrix::load(&wire)?;
            dispatch!(a, m => run_inverse(m, product.into(), common.format))
        }
        Command::Rank { product, common } => {
            let wire: MatrixWire = parse_json(&read_input(&common.input)?)?;
            let a = AnyMatrix::load(&wire)?;
            dispatch!(a, m => run_rank(m, product.into(), common.format))
        }
        Command::Quasidet {
            product,
            row,
            col,
            common,
        } => {
            let wire: MatrixWire = parse_json(&read_input(&common.input)?)?;
            let a = AnyMatrix::load(&wire)?;
            dispatch!(a, m => run_quasidet(m, product.into(), row, col, common.format))
        }
        Command::SingularCheck { common } => {
            let wire: MatrixWire = parse_json(&read_input(&common.input)?)?;
            let a = AnyMatrix::load(&wire)?;
            dispatch!(a, m => run_singular_check(m, common.format))
        }
        Command::Span { space, common } => {
            let input: output::FamilyInput = parse_json(&read_input(&common.input)?)?;
            let family = AnyMatrix::load(&input.family)?;
            let vector = input
                .vector
                .ok_or_else(|| UsageError("span needs a \"vector\" field".into()))?;
            dispatch!(family, m => {
                let v = vector.to_matrix()?;
                run_span(m, &v, space.into(), common.format)
            })
        }
        Command::Independent { space, common } => {
            let input: output::FamilyInput = parse_json(&read_input(&common.input)?)?;
            let family = AnyMatrix::load(&input.family)?;
            dispatch!(family, m => run_independent(m, space.into(), common.format))
        }
        Command::Coords { space, common } => {
            let input: output::BasisInput = parse_json(&read_input(&common.input)?)?;
            let basis = AnyMatrix::load(&input.basis)?;
            dispatch!(basis, m => {
                let v = input.vector.to_matrix()?;
                run_coords(m, &v, space.into(), common.format)
            })
        }
        Command::Demo => run_demo(),
        Command::SelfTest => selftest::run(),
    }
}

fn run_solve<T: WireScalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    side: Side,
    product: ProductKind,
    format: FormatArg,
) -> CliResult {
    let outcome = skewlin::solve_general(a, b, side, product)?;
    emit_line(&output::render_outcome(&outcome, format));
    Ok(if outcome.is_consistent() { 0 } else { 1 })
}

fn run_inverse<T: WireScalar>(a: &Matrix<T>, product: ProductKind, format: FormatArg) -> CliResult {
    match skewlin::inverse(a, product)? {
        Some(inv) => {
            emit_line(&output::render_matrix(&inv, format));
            Ok(0)
        }
        None => {
            emit_line(&output::render_singular(product, format));
            Ok(1)
        }
    }
}

fn run_rank<T: WireScalar>(a: &Matrix<T>, product: ProductKind, format: FormatArg) -> CliResult {
    let report = skewlin::rank::rank(a, product);
    emit_line(&output::render_rank(&report, format));
    Ok(0)
}

fn run_quasidet<T: WireScalar>(
    a: &Matrix<T>,
    product: ProductKind,
    row: Option<usize>,
    col: Option<usize>,
    format: FormatArg,
) -> CliResult {
    match (row, col) {
        (Some(i), Some(j)) => {
            let result = match product {
                ProductKind::Rc => skewlin::rc_quasidet(a, i, j)?,
                ProductKind::Cr => skewlin::cr_quasidet(a, i, j)?,
            };
            emit_line(&output::render_quasidet(&result, format));
            Ok(0)
        }
        (None, None) => {
            emit_line(&output::render_quasidet_table(a, product, format)?);
            Ok(0)
        }
        _ => Err(UsageError(
            "provide both --row and --col, or neither for the full table".into(),
        )),
    }
}

fn run_singular_check<T: WireScalar>(a: &Matrix<T>, format: FormatArg) -> CliResult {
    let rc = skewlin::is_rc_singular(a)?;
    let cr = skewlin::is_cr_singular(a)?;
    emit_line(&output::render_singular_check(rc, cr, format));
    Ok(0)
}

fn run_span<T: WireScalar>(
    family: &Matrix<T>,
    v: &Matrix<T>,
    orientation: Orientation,
    format: FormatArg,
) -> CliResult {
    let family = skewlin::VectorFamily::new(orientation, family.clone());
    match family.in_span(v)? {
        Some(coefficients) => {
            emit_line(&output::render_coefficients(&coefficients, format));
            Ok(0)
        }
        None => {
            emit_line(&output::render_not_in_span(format));
            Ok(1)
        }
    }
}

fn run_independent<T: WireScalar>(
    family: &Matrix<T>,
    orientation: Orientation,
    format: FormatArg,
) -> CliResult {
    let family = skewlin::VectorFamily::new(orientation, family.clone());
    let rank = family.rank().rank;
    let independent = rank == family.count();
    emit_line(&output::render_independent(
        independent,
        rank,
        family.count(),
        format,
    ));
    Ok(if independent { 0 } else { 1 })
}

fn run_coords<T: WireScalar>(
    basis_matrix: &Matrix<T>,
    v: &Matrix<T>,
    orientation: Orientation,
    format: FormatArg,
) -> CliResult {
    let family = skewlin::VectorFamily::new(orientation, basis_matrix.clone());
    match skewlin::Basis::new(family) {
        Ok(basis) => {
            let coords = basis.coordinates(v)?;
            emit_line(&output::render_coefficients(&coords, format));
            Ok(0)
        }
        Err(e) => {
            emit_line(&output::render_not_a_basis(&e, format));
            Ok(1)
        }
    }
}

fn run_demo() -> CliResult {
    let report = skewlin::witness::witness_report();
    let failures = report.check();
    if !failures.is_empty() {
        return Err(UsageError(format!(
            "witness verification failed: {}",
            failures.join("; ")
        )));
    }
    emit_line(report.render().trim_end());
    emit_line("all claims verified exactly.");
    Ok(0)
}

/// Writes one line to stdout; a broken pipe (e.g. piping into `head`) ends
/// the process quietly instead of panicking.
pub fn emit_line(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let result = writeln!(out, "{text}").and_then(|()| out.flush());
    if let Err(e) = result {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
    }
}
