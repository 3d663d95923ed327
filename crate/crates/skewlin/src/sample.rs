//! Deterministic pseudo-random generation of scalars and matrices.
//!
//! Tests, the self-test subcommand and the benches all draw from this
//! splitmix64 generator so that a fixed seed reproduces byte-identical runs
//! on every platform.

use crate::matrix::{Matrix, ProductKind};
use crate::rank;
use crate::scalar::{DivisionRing, Quaternion, Rational};

/// splitmix64; tiny, seedable, and stable across platforms.
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Rational `p/q` with `|p| <= max_numer` and `1 <= q <= max_denom`.
    pub fn rational(&mut self, max_numer: u64, max_denom: u64) -> Rational {
        let numer = self.below(2 * max_numer + 1) as i64 - max_numer as i64;
        let denom = self.below(max_denom) as i64 + 1;
        Rational::new(numer, denom).expect("positive denominator")
    }

    /// Quaternion with all four coefficients drawn from [`Rng::rational`].
    pub fn quaternion(&mut self, max_numer: u64, max_denom: u64) -> Quaternion {
        Quaternion::new(
            self.rational(max_numer, max_denom),
            self.rational(max_numer, max_denom),
            self.rational(max_numer, max_denom),
            self.rational(max_numer, max_denom),
        )
    }

    pub fn nonzero_quaternion(&mut self, max_numer: u64, max_denom: u64) -> Quaternion {
        loop {
            let q = self.quaternion(max_numer, max_denom);
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn quaternion_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Quaternion> {
        Matrix::from_fn(rows, cols, |_, _| self.quaternion(9, 9))
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        Matrix::from_fn(rows, cols, |_, _| self.rational(9, 9))
    }

    /// A random `n x n` quaternion matrix that is nonsingular under `product`
    /// (random matrices almost surely are; this just retries).
    pub fn nonsingular_quaternion(&mut self, n: usize, product: ProductKind) -> Matrix<Quaternion> {
        loop {
            let a = self.quaternion_matrix(n, n);
            if rank::rank(&a, product).rank == n {
                return a;
            }
        }
    }

    /// An `m x n` quaternion matrix of exact RC rank `k`: `k` independent
    /// random rows padded with random left combinations of them, then the
    /// rows are shuffled.
    pub fn rank_deficient_quaternion(&mut self, m: usize, n: usize, k: usize) -> Matrix<Quaternion> {
        assert!(k <= m && k <= n);
        let base = loop {
            let candidate = self.quaternion_matrix(k, n);
            if rank::rc_rank(&candidate).rank == k {
                break candidate;
            }
        };
        let mut rows: Vec<Vec<Quaternion>> = Vec::with_capacity(m);
        for i in 0..k {
            rows.push((0..n).map(|j| base[(i, j)].clone()).collect());
        }
        for _ in k..m {
            let coeff: Vec<Quaternion> = (0..k).map(|_| self.quaternion(3, 3)).collect();
            let combo: Vec<Quaternion> = (0..n)
                .map(|j| {
                    let mut acc = Quaternion::zero();
                    for (s, c) in coeff.iter().enumerate() {
                        acc = acc.add(&c.mul(&base[(s, j)]));
                    }
                    acc
                })
                .collect();
            rows.push(combo);
        }
        self.shuffle(&mut rows);
        Matrix::from_rows(rows).expect("rectangular by construction")
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
