//! Rank under the RC and CR products, with machine-checkable certificates.
//!
//! The rank of a matrix is the maximal order of a nonsingular minor under the
//! chosen product; a witnessing minor is the *major minor*. The production
//! algorithm is elimination: the pivot rows and columns form the major minor.
//! Because the definition is minor-based and the equivalence with elimination
//! is a theorem about division rings rather than a code identity, the literal
//! definition is kept as [`minor_rank_oracle`] and the two are checked against
//! each other in tests, not assumed.
//!
//! A [`RankReport`] certifies its rank in both directions: every non-major
//! row is expressed as a combination of major rows, every non-major column as
//! a combination of major columns. Under RC the row coefficients act from the
//! LEFT and the column coefficients from the RIGHT; under CR both sides are
//! mirrored. Certificates re-multiply exactly; [`RankReport::verify`] checks
//! every identity.

use crate::elim;
use crate::error::Error;
use crate::matrix::{IndexSet, Matrix, ProductKind};
use crate::par;
use crate::scalar::DivisionRing;

/// One dependency certificate: `index` is the non-major row (or column), and
/// `coefficients` are aligned with the major rows (or columns).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dependency<T> {
    pub index: usize,
    pub coefficients: Vec<T>,
}

/// Rank, major minor and dependency certificates of one matrix under one
/// product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankReport<T> {
    pub product: ProductKind,
    pub rank: usize,
    pub major_rows: IndexSet,
    pub major_cols: IndexSet,
    /// For RC: `row_p = sum_s coeff[s] * row_s` (coefficients on the left).
    /// For CR: `row_p = sum_s row_s * coeff[s]` (coefficients on the right).
    pub row_dependencies: Vec<Dependency<T>>,
    /// For RC: `col_r = sum_t col_t * coeff[t]` (coefficients on the right).
    /// For CR: `col_r = sum_t coeff[t] * col_t` (coefficients on the left).
    pub col_dependencies: Vec<Dependency<T>>,
}

impl<T: DivisionRing> RankReport<T> {
    /// Re-multiplies every certificate against `a` and re-tests the major
    /// minor's nonsingularity. Exact; true only if everything checks out.
    pub fn verify(&self, a: &Matrix<T>) -> bool {
        if self.major_rows.len() != self.rank || self.major_cols.len() != self.rank {
            return false;
        }
        let Ok(major) = a.submatrix(&self.major_rows, &self.major_cols) else {
            return false;
        };
        let invertible = match self.product {
            ProductKind::Rc => elim::rc_inverse(&major),
            ProductKind::Cr => elim::rc_inverse(&major.conjugate()),
        };
        if !matches!(invertible, Ok(Some(_))) {
            return false;
        }
        if self.row_dependencies.len() != a.rows() - self.rank
            || self.col_dependencies.len() != a.cols() - self.rank
        {
            return false;
        }
        for dep in &self.row_dependencies {
            if dep.coefficients.len() != self.rank {
                return false;
            }
            for j in 0..a.cols() {
                let mut acc = T::zero();
                for (pos, s) in self.major_rows.iter().enumerate() {
                    let c = &dep.coefficients[pos];
                    let term = match self.product {
                        ProductKind::Rc => c.mul(&a[(s, j)]),
                        ProductKind::Cr => a[(s, j)].mul(c),
                    };
                    acc = acc.add(&term);
                }
                if acc != a[(dep.index, j)] {
                    return false;
                }
            }
        }
        for dep in &self.col_dependencies {
            if dep.coefficients.len() != self.rank {
                return false;
            }
            for i in 0..a.rows() {
                let mut acc = T::zero();
                for (pos, t) in self.major_cols.iter().enumerate() {
                    let c = &dep.coefficients[pos];
                    let term = match self.product {
                        ProductKind::Rc => a[(i, t)].mul(c),
                        ProductKind::Cr => c.mul(&a[(i, t)]),
                    };
                    acc = acc.add(&term);
                }
                if acc != a[(i, dep.index)] {
                    return false;
                }
            }
        }
        true
    }

    /// A nonzero row vector annihilating `a` from the unknown's side
    /// (`lambda * A = 0` under the report's product), built from the first
    /// row dependency. `None` when the rank equals the row count.
    pub fn row_annihilator(&self, row_count: usize) -> Option<Matrix<T>> {
        let dep = self.row_dependencies.first()?;
        let mut lambda = Matrix::zero(1, row_count);
        for (pos, s) in self.major_rows.iter().enumerate() {
            lambda[(0, s)] = dep.coefficients[pos].clone();
        }
        lambda[(0, dep.index)] = T::one().neg();
        Some(lambda)
    }

    /// A nonzero column vector with `A * mu = 0` under the report's product,
    /// from the first column dependency. `None` when the rank equals the
    /// column count.
    pub fn col_annihilator(&self, col_count: usize) -> Option<Matrix<T>> {
        let dep = self.col_dependencies.first()?;
        let mut mu = Matrix::zero(col_count, 1);
        for (pos, t) in self.major_cols.iter().enumerate() {
            mu[(t, 0)] = dep.coefficients[pos].clone();
        }
        mu[(dep.index, 0)] = T::one().neg();
        Some(mu)
    }
}

/// Elimination rank under RC: `(rank, major rows ascending, major cols)`.
pub(crate) fn rc_rank_core<T: DivisionRing>(a: &Matrix<T>) -> (usize, Vec<usize>, Vec<usize>) {
    elim::rank_core(a)
}

/// RC rank with certificates.
pub fn rc_rank<T: DivisionRing>(a: &Matrix<T>) -> RankReport<T> {
    let (rank, rows, cols) = rc_rank_core(a);
    let major_rows = IndexSet::new(rows).expect("ascending");
    let major_cols = IndexSet::new(cols).expect("ascending");
    let major = a
        .submatrix(&major_rows, &major_cols)
        .expect("indices from elimination");
    let major_inverse = elim::rc_inverse(&major)
        .expect("square")
        .expect("major minor is RC-nonsingular");

    // row_p = (A[p, T] rc* inv) rc* A[S, :]; the solved coefficients stand on
    // the left of the major rows.
    let mut row_dependencies = Vec::new();
    for p in major_rows.complement(a.rows()).iter() {
        let row_major_part = a
            .submatrix(&IndexSet::new(vec![p]).expect("single"), &major_cols)
            .expect("valid");
        let coeff = row_major_part
            .rc_mul(&major_inverse)
            .expect("conformable");
        row_dependencies.push(Dependency {
            index: p,
            coefficients: coeff.entries().to_vec(),
        });
    }

    // col_r = A[:, T] rc* (inv rc* A[S, r]); coefficients on the right.
    let mut col_dependencies = Vec::new();
    for r in major_cols.complement(a.cols()).iter() {
        let col_major_part = a
            .submatrix(&major_rows, &IndexSet::new(vec![r]).expect("single"))
            .expect("valid");
        let coeff = major_inverse
            .rc_mul(&col_major_part)
            .expect("conformable");
        col_dependencies.push(Dependency {
            index: r,
            coefficients: coeff.entries().to_vec(),
        });
    }

    RankReport {
        product: ProductKind::Rc,
        rank,
        major_rows,
        major_cols,
        row_dependencies,
        col_dependencies,
    }
}

/// CR rank through the conjugation transport: run the RC engine on the
/// conjugated matrix and conjugate the certificates back, which mirrors the
/// coefficient sides.
pub fn cr_rank<T: DivisionRing>(a: &Matrix<T>) -> RankReport<T> {
    let conjugated = rc_rank(&a.conjugate());
    let transport = |deps: Vec<Dependency<T>>| {
        deps.into_iter()
            .map(|d| Dependency {
                index: d.index,
                coefficients: d.coefficients.iter().map(T::conj).collect(),
            })
            .collect()
    };
    RankReport {
        product: ProductKind::Cr,
        rank: conjugated.rank,
        major_rows: conjugated.major_rows,
        major_cols: conjugated.major_cols,
        row_dependencies: transport(conjugated.row_dependencies),
        col_dependencies: transport(conjugated.col_dependencies),
    }
}

pub fn rank<T: DivisionRing>(a: &Matrix<T>, product: ProductKind) -> RankReport<T> {
    match product {
        ProductKind::Rc => rc_rank(a),
        ProductKind::Cr => cr_rank(a),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance to the next combination.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if current[pos] != pos + n - k {
                current[pos] += 1;
                for later in pos + 1..k {
                    current[later] = current[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// The literal rank definition: exhaustively searches all `k x k` minors in
/// lexicographic (row set, column set) order, largest `k` first, and reports
/// the largest `k` with an invertible minor. Minors of one size are tested
/// concurrently; the verdict is the first hit in enumeration order, so the
/// result does not depend on scheduling. Intended for `min(m, n) <= 4`; this
/// is the ground-truth oracle for [`rc_rank`] and [`cr_rank`].
pub fn minor_rank_oracle<T: DivisionRing>(a: &Matrix<T>, product: ProductKind) -> usize {
    minor_rank_oracle_with(a, product, cfg!(feature = "parallel"))
}

/// Sequential variant of [`minor_rank_oracle`], kept callable for the bench
/// comparison against the parallel path.
pub fn minor_rank_oracle_seq<T: DivisionRing>(a: &Matrix<T>, product: ProductKind) -> usize {
    minor_rank_oracle_with(a, product, false)
}

fn minor_rank_oracle_with<T: DivisionRing>(
    a: &Matrix<T>,
    product: ProductKind,
    parallel: bool,
) -> usize {
    let worker = match product {
        ProductKind::Rc => a.clone(),
        ProductKind::Cr => a.conjugate(),
    };
    let upper = worker.rows().min(worker.cols());
    for k in (1..=upper).rev() {
        let row_sets = combinations(worker.rows(), k);
        let col_sets = combinations(worker.cols(), k);
        let mut candidates = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rows in &row_sets {
            for cols in &col_sets {
                candidates.push((rows.clone(), cols.clone()));
            }
        }
        let verdicts = par::map_slice(&candidates, parallel, |(rows, cols)| {
            let minor = Matrix::from_fn(k, k, |p, q| worker[(rows[p], cols[q])].clone());
            matches!(elim::rc_inverse(&minor), Ok(Some(_)))
        });
        if verdicts.iter().any(|&ok| ok) {
            return k;
        }
    }
    0
}

/// Rank below the full size under the RC product; errors on non-square input.
pub fn is_rc_singular<T: DivisionRing>(a: &Matrix<T>) -> Result<bool, Error> {
    Ok(elim::rc_inverse(a)?.is_none())
}

/// Rank below the full size under the CR product; errors on non-square input.
pub fn is_cr_singular<T: DivisionRing>(a: &Matrix<T>) -> Result<bool, Error> {
    Ok(elim::rc_inverse(&a.conjugate())?.is_none())
}

/// `(is_rc_singular(A), is_rc_singular(B), is_rc_singular(A rc* B))`. The
/// product-singularity theorem says the third equals the OR of the first two;
/// the test harness asserts exactly that.
pub fn product_singularity_check<T: DivisionRing>(
    a: &Matrix<T>,
    b: &Matrix<T>,
) -> Result<(bool, bool, bool), Error> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch {
            operation: "product singularity check",
            left: (a.rows(), a.cols()),
            right: (b.rows(), b.cols()),
        });
    }
    let product = a.rc_mul(b)?;
    Ok((
        is_rc_singular(a)?,
        is_rc_singular(b)?,
        is_rc_singular(&product)?,
    ))
}
