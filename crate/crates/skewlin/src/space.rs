//! Finite-dimensional vector spaces over the division ring: independence,
//! span, bases, coordinates, linear maps and automorphisms.
//!
//! A family always stores its vectors as the rows of a coordinate matrix;
//! the orientation says how a coefficient row combines them:
//!
//! * `rcd`: `w = c rc* A` — coefficients multiply coordinates from the left.
//! * `crd`: `w = c cr* A` — coefficients multiply coordinates from the right.
//! * `dcr`: the same expression as `rcd` read in the opposite direction;
//!   numerically identical to `rcd`.
//! * `drc`: the mirror reading of `crd`; numerically identical to `crd`.
//!
//! Every request is normalized to the RC row computation through the
//! transpose/conjugation transports inside the solver, and the answer is
//! transported back; there is one code path, checked by the duality oracles.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::{IndexSet, Matrix, ProductKind};
use crate::rank;
use crate::scalar::DivisionRing;
use crate::solve::{self, Side, SolveOutcome};

/// The four vector-space types, named by where the division ring and which
/// product appear in the linear composition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Rcd,
    Drc,
    Crd,
    Dcr,
}

impl Orientation {
    /// The matrix product composing coordinate rows in this orientation.
    pub fn product(self) -> ProductKind {
        match self {
            Orientation::Rcd | Orientation::Dcr => ProductKind::Rc,
            Orientation::Crd | Orientation::Drc => ProductKind::Cr,
        }
    }

    /// The side on which scalars multiply vectors (and rescale coordinates).
    pub fn scalar_side(self) -> Side {
        match self {
            Orientation::Rcd | Orientation::Dcr => Side::Left,
            Orientation::Crd | Orientation::Drc => Side::Right,
        }
    }
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Orientation::Rcd => "rcd",
            Orientation::Drc => "drc",
            Orientation::Crd => "crd",
            Orientation::Dcr => "dcr",
        };
        write!(f, "{name}")
    }
}

/// A finite family of vectors given by their coordinate rows in an ambient
/// basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorFamily<T> {
    orientation: Orientation,
    coordinates: Matrix<T>,
}

impl<T: DivisionRing> VectorFamily<T> {
    pub fn new(orientation: Orientation, coordinates: Matrix<T>) -> Self {
        VectorFamily {
            orientation,
            coordinates,
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn coordinates(&self) -> &Matrix<T> {
        &self.coordinates
    }

    /// Number of vectors in the family.
    pub fn count(&self) -> usize {
        self.coordinates.rows()
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        self.coordinates.cols()
    }

    /// The linear composition of the family with the coefficient row `c`.
    pub fn combine(&self, c: &Matrix<T>) -> Result<Matrix<T>, Error> {
        c.mul(&self.coordinates, self.orientation.product())
    }

    /// Rank of the coordinate matrix under the orientation's product.
    pub fn rank(&self) -> rank::RankReport<T> {
        rank::rank(&self.coordinates, self.orientation.product())
    }

    /// True iff only the zero coefficient row combines to the zero vector,
    /// i.e. the coordinate matrix has full row rank.
    pub fn is_independent(&self) -> bool {
        self.rank().rank == self.count()
    }

    /// Coefficients expressing `v` in the family, or `None` when `v` lies
    /// outside the span. Free coefficients of an underdetermined membership
    /// system are set to zero.
    pub fn in_span(&self, v: &Matrix<T>) -> Result<Option<Matrix<T>>, Error> {
        if v.rows() != 1 || v.cols() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                operation: "span membership",
                left: (self.count(), self.ambient_dim()),
                right: (v.rows(), v.cols()),
            });
        }
        let outcome = solve::solve_general(
            &self.coordinates,
            v,
            Side::Left,
            self.orientation.product(),
        )?;
        Ok(match outcome {
            SolveOutcome::Unique(c) => Some(c),
            SolveOutcome::Parametric { particular, .. } => Some(particular),
            SolveOutcome::Inconsistent { .. } => None,
        })
    }

    /// Indices of a maximal independent subfamily, extracted greedily in
    /// scan order: a vector is kept when it raises the rank of the kept set.
    pub fn independent_subfamily(&self) -> IndexSet {
        let mut kept: Vec<usize> = Vec::new();
        let product = self.orientation.product();
        for candidate in 0..self.count() {
            let mut trial = kept.clone();
            trial.push(candidate);
            let rows = IndexSet::new(trial).expect("ascending by construction");
            let sub = self
                .coordinates
                .submatrix(&rows, &IndexSet::full(self.ambient_dim()))
                .expect("valid indices");
            if rank::rank(&sub, product).rank == rows.len() {
                kept.push(candidate);
            }
        }
        IndexSet::new(kept).expect("ascending")
    }

    /// Dimension of the span.
    pub fn span_dimension(&self) -> usize {
        self.rank().rank
    }
}

/// A family whose coordinate matrix is square and nonsingular under the
/// orientation's product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Basis<T> {
    family: VectorFamily<T>,
}

impl<T: DivisionRing> Basis<T> {
    pub fn new(family: VectorFamily<T>) -> Result<Self, Error> {
        if family.count() != family.ambient_dim() {
            return Err(Error::NotABasis {
                reason: format!(
                    "{} vectors in a {}-dimensional space",
                    family.count(),
                    family.ambient_dim()
                ),
            });
        }
        let report = family.rank();
        if report.rank != family.count() {
            return Err(Error::NotABasis {
                reason: format!(
                    "coordinate matrix is {}-singular (rank {} of {})",
                    report.product,
                    report.rank,
                    family.count()
                ),
            });
        }
        Ok(Basis { family })
    }

    pub fn family(&self) -> &VectorFamily<T> {
        &self.family
    }

    pub fn orientation(&self) -> Orientation {
        self.family.orientation
    }

    pub fn dimension(&self) -> usize {
        self.family.count()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.family.coordinates
    }

    /// The unique expansion of `v` in this basis.
    pub fn coordinates(&self, v: &Matrix<T>) -> Result<Matrix<T>, Error> {
        match self.family.in_span(v)? {
            Some(c) => Ok(c),
            None => unreachable!("a basis spans the whole space"),
        }
    }

    /// Transition matrix expressing `other`'s vectors in `self` coordinates:
    /// row `i` holds `coordinates(other[i])`. It is nonsingular under the
    /// orientation's product, and coordinate rows transport through it:
    /// `coords_self(v) = coords_other(v) * T` under the same product.
    pub fn change_of_basis(&self, other: &Basis<T>) -> Result<Matrix<T>, Error> {
        if self.orientation() != other.orientation() {
            return Err(Error::OrientationMismatch);
        }
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                operation: "change of basis",
                left: (self.dimension(), self.dimension()),
                right: (other.dimension(), other.dimension()),
            });
        }
        let product = self.orientation().product();
        let inverse = solve::inverse(self.matrix(), product)?
            .expect("basis coordinate matrix is nonsingular");
        other.matrix().mul(&inverse, product)
    }
}

/// A linear map presented by its matrix relative to chosen bases: a
/// coordinate row `a` of the source maps to `a * A` under the orientation's
/// product, so the matrix is `source_dim x target_dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap<T> {
    orientation: Orientation,
    matrix: Matrix<T>,
}

impl<T: DivisionRing> LinearMap<T> {
    pub fn new(orientation: Orientation, matrix: Matrix<T>) -> Self {
        LinearMap {
            orientation,
            matrix,
        }
    }

    pub fn identity(orientation: Orientation, n: usize) -> Self {
        LinearMap::new(orientation, Matrix::identity(n))
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.cols()
    }

    /// Image coordinates of the row `a`.
    pub fn apply(&self, a: &Matrix<T>) -> Result<Matrix<T>, Error> {
        if a.rows() != 1 || a.cols() != self.source_dim() {
            return Err(Error::DimensionMismatch {
                operation: "linear map application",
                left: (self.source_dim(), self.target_dim()),
                right: (a.rows(), a.cols()),
            });
        }
        a.mul(&self.matrix, self.orientation.product())
    }

    /// `self` followed by `g`; the composite's matrix is the product of the
    /// two matrices under the orientation's product, so that
    /// `compose(f, g).apply(a) = g.apply(f.apply(a))`.
    pub fn compose(&self, g: &LinearMap<T>) -> Result<LinearMap<T>, Error> {
        if self.orientation != g.orientation {
            return Err(Error::OrientationMismatch);
        }
        if self.target_dim() != g.source_dim() {
            return Err(Error::DimensionMismatch {
                operation: "map composition",
                left: (self.source_dim(), self.target_dim()),
                right: (g.source_dim(), g.target_dim()),
            });
        }
        let matrix = self.matrix.mul(&g.matrix, self.orientation.product())?;
        Ok(LinearMap::new(self.orientation, matrix))
    }

    /// Bijectivity of a square map is exactly nonsingularity of its matrix
    /// under the orientation's product.
    pub fn is_automorphism(&self) -> Result<bool, Error> {
        if !self.matrix.is_square() {
            return Err(Error::NotSquare {
                rows: self.matrix.rows(),
                cols: self.matrix.cols(),
            });
        }
        Ok(solve::inverse(&self.matrix, self.orientation.product())?.is_some())
    }

    /// The inverse automorphism, when the map is one.
    pub fn inverse_map(&self) -> Result<Option<LinearMap<T>>, Error> {
        if !self.matrix.is_square() {
            return Err(Error::NotSquare {
                rows: self.matrix.rows(),
                cols: self.matrix.cols(),
            });
        }
        Ok(solve::inverse(&self.matrix, self.orientation.product())?
            .map(|m| LinearMap::new(self.orientation, m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Quaternion, Rational};

    fn q(text: &str) -> Quaternion {
        Quaternion::parse(text).unwrap()
    }

    fn qm(rows: Vec<Vec<&str>>) -> Matrix<Quaternion> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(q).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rm(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Rational::from_int).collect())
                .collect(),
        )
        .unwrap()
    }

    fn witness() -> Matrix<Quaternion> {
        qm(vec![vec!["1", "1+k"], vec!["j", "i+j"]])
    }

    #[test]
    fn independence_depends_on_orientation() {
        let rows = witness();
        let rcd = VectorFamily::new(Orientation::Rcd, rows.clone());
        let crd = VectorFamily::new(Orientation::Crd, rows.clone());
        // Left dependency j * row0 = row1 kills rcd independence...
        assert!(!rcd.is_independent());
        // ...but the same two rows are CR-independent.
        assert!(crd.is_independent());
        let unit = VectorFamily::new(Orientation::Rcd, Matrix::<Quaternion>::identity(3));
        assert!(unit.is_independent());
    }

    #[test]
    fn span_membership() {
        let family = VectorFamily::new(
            Orientation::Rcd,
            qm(vec![vec!["1", "1+k"]]),
        );
        let v = qm(vec![vec!["j", "i+j"]]);
        let c = family.in_span(&v).unwrap().expect("v = j * (1, 1+k)");
        assert_eq!(c, qm(vec![vec!["j"]]));
        assert_eq!(family.combine(&c).unwrap(), v);
        let outside = qm(vec![vec!["1", "0"]]);
        assert!(family.in_span(&outside).unwrap().is_none());
        // A member of the family itself: unit coefficient row.
        let two = VectorFamily::new(Orientation::Rcd, qm(vec![vec!["1", "0"], vec!["0", "j"]]));
        let member = qm(vec![vec!["0", "j"]]);
        assert_eq!(
            two.in_span(&member).unwrap().unwrap(),
            qm(vec![vec!["0", "1"]])
        );
    }

    #[test]
    fn coordinates_in_a_basis() {
        let basis = Basis::new(VectorFamily::new(
            Orientation::Rcd,
            rm(vec![vec![1, 0], vec![1, 1]]),
        ))
        .unwrap();
        let v = rm(vec![vec![3, 2]]);
        let coords = basis.coordinates(&v).unwrap();
        assert_eq!(coords, rm(vec![vec![1, 2]]));
        // Standard basis: coordinates are the vector itself.
        let std_basis =
            Basis::new(VectorFamily::new(Orientation::Rcd, Matrix::identity(2))).unwrap();
        assert_eq!(std_basis.coordinates(&v).unwrap(), v);
    }

    #[test]
    fn rescaling_a_basis_vector_rescales_the_coordinate() {
        let basis = Basis::new(VectorFamily::new(
            Orientation::Rcd,
            qm(vec![vec!["1", "1+k"], vec!["i", "j"]]),
        ))
        .unwrap();
        let v = qm(vec![vec!["2+j", "1-i"]]);
        let coords = basis.coordinates(&v).unwrap();
        // Left-scale basis vector 0 by d: its coordinate picks up d^{-1} on
        // the right.
        let d = q("1+i-k");
        let mut scaled_rows = basis.matrix().clone();
        for col in 0..2 {
            scaled_rows[(0, col)] = d.mul(&scaled_rows[(0, col)]);
        }
        let scaled =
            Basis::new(VectorFamily::new(Orientation::Rcd, scaled_rows)).unwrap();
        let new_coords = scaled.coordinates(&v).unwrap();
        assert_eq!(
            new_coords[(0, 0)],
            coords[(0, 0)].mul(&d.inverse().unwrap())
        );
        assert_eq!(new_coords[(0, 1)], coords[(0, 1)]);
    }

    #[test]
    fn change_of_basis_round_trips() {
        let b1 = Basis::new(VectorFamily::new(
            Orientation::Rcd,
            qm(vec![vec!["1", "i"], vec!["j", "1+k"]]),
        ))
        .unwrap();
        let b2 = Basis::new(VectorFamily::new(
            Orientation::Rcd,
            qm(vec![vec!["1+i", "0"], vec!["k", "2"]]),
        ))
        .unwrap();
        let t12 = b1.change_of_basis(&b2).unwrap();
        let t21 = b2.change_of_basis(&b1).unwrap();
        assert_eq!(t12.rc_mul(&t21).unwrap(), Matrix::identity(2));
        assert_eq!(b1.change_of_basis(&b1).unwrap(), Matrix::identity(2));
        // T rc* B1 = B2: each row of T holds the b1-coordinates of a b2 vector.
        assert_eq!(t12.rc_mul(b1.matrix()).unwrap(), *b2.matrix());
        // Coordinates transport: coords_b1(v) = coords_b2(v) rc* T.
        let v = qm(vec![vec!["1-j", "i+k"]]);
        let c1 = b1.coordinates(&v).unwrap();
        let c2 = b2.coordinates(&v).unwrap();
        assert_eq!(c2.rc_mul(&t12).unwrap(), c1);
    }

    #[test]
    fn witness_is_not_a_basis_under_rcd_but_is_under_crd() {
        assert!(Basis::new(VectorFamily::new(Orientation::Rcd, witness())).is_err());
        assert!(Basis::new(VectorFamily::new(Orientation::Crd, witness())).is_ok());
    }

    #[test]
    fn linear_map_application_and_composition() {
        let f = LinearMap::new(Orientation::Rcd, witness());
        let a = qm(vec![vec!["1", "j"]]);
        assert_eq!(f.apply(&a).unwrap(), a.rc_mul(&witness()).unwrap());
        let id = LinearMap::identity(Orientation::Rcd, 2);
        assert_eq!(id.apply(&a).unwrap(), a);
        assert_eq!(f.compose(&id).unwrap(), f);
        let g = LinearMap::new(Orientation::Rcd, qm(vec![vec!["i", "0"], vec!["0", "1-k"]]));
        let fg = f.compose(&g).unwrap();
        assert_eq!(
            fg.apply(&a).unwrap(),
            g.apply(&f.apply(&a).unwrap()).unwrap()
        );
        assert_eq!(
            fg.matrix(),
            &witness().rc_mul(g.matrix()).unwrap()
        );
    }

    #[test]
    fn automorphism_checks() {
        let id = LinearMap::<Quaternion>::identity(Orientation::Rcd, 2);
        assert!(id.is_automorphism().unwrap());
        let f_rcd = LinearMap::new(Orientation::Rcd, witness());
        let f_crd = LinearMap::new(Orientation::Crd, witness());
        assert!(!f_rcd.is_automorphism().unwrap());
        assert!(f_crd.is_automorphism().unwrap());
        let inv = f_crd.inverse_map().unwrap().unwrap();
        let composed = f_crd.compose(&inv).unwrap();
        assert_eq!(composed.matrix(), &Matrix::identity(2));
    }

    #[test]
    fn greedy_extraction_finds_a_maximal_subfamily() {
        // Rows 0 and 2 independent; row 1 = j * row 0.
        let rows = qm(vec![
            vec!["1", "1+k"],
            vec!["j", "i+j"],
            vec!["0", "1"],
        ]);
        let family = VectorFamily::new(Orientation::Rcd, rows);
        let picked = family.independent_subfamily();
        assert_eq!(picked.as_slice(), &[0, 2]);
        assert_eq!(family.span_dimension(), 2);
    }

    #[test]
    fn coordinates_commute_with_addition_and_scalar_action() {
        let basis = Basis::new(VectorFamily::new(
            Orientation::Rcd,
            qm(vec![vec!["1", "i"], vec!["j", "1+k"]]),
        ))
        .unwrap();
        let u = qm(vec![vec!["2+j", "1-i"]]);
        let v = qm(vec![vec!["-k", "3+2i"]]);
        let cu = basis.coordinates(&u).unwrap();
        let cv = basis.coordinates(&v).unwrap();
        assert_eq!(
            basis.coordinates(&u.add(&v).unwrap()).unwrap(),
            cu.add(&cv).unwrap()
        );
        // rcd scalars act from the left, on vectors and coordinates alike.
        let d = q("1-j+k");
        assert_eq!(
            basis.coordinates(&u.scale_left(&d)).unwrap(),
            cu.scale_left(&d)
        );
    }

    #[test]
    fn duality_of_orientations() {
        // dcr is the mirror reading of rcd, crd of drc: same verdicts.
        let rows = witness();
        for (a, b) in [
            (Orientation::Rcd, Orientation::Dcr),
            (Orientation::Crd, Orientation::Drc),
        ] {
            let fa = VectorFamily::new(a, rows.clone());
            let fb = VectorFamily::new(b, rows.clone());
            assert_eq!(fa.is_independent(), fb.is_independent());
            assert_eq!(fa.span_dimension(), fb.span_dimension());
        }
    }
}
