//! Randomized exact self-test. The seed comes from SKEWLIN_SEED (default 1),
//! so a fixed seed reproduces a byte-identical run.

use skewlin::sample::Rng;
use skewlin::{
    minor_rank_oracle, rc_inverse, rc_inverse_quasidet, rc_rank, solve_general, Matrix,
    ProductKind, Quaternion, Side, SolveOutcome,
};

use crate::{CliResult, UsageError};

struct Suite {
    failures: usize,
}

impl Suite {
    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            crate::emit_line(&format!("PASS {name}"));
        } else {
            crate::emit_line(&format!("FAIL {name}"));
            self.failures += 1;
        }
    }
}

pub fn run() -> CliResult {
    let seed = match std::env::var("SKEWLIN_SEED") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| UsageError(format!("SKEWLIN_SEED must be a u64, got {text:?}")))?,
        Err(_) => 1,
    };
    crate::emit_line(&format!("self-test with seed {seed}"));
    let mut rng = Rng::new(seed);
    let mut suite = Suite { failures: 0 };

    let mut axioms_ok = true;
    for _ in 0..200 {
        let a = rng.quaternion(9, 9);
        let b = rng.quaternion(9, 9);
        let c = rng.quaternion(9, 9);
        axioms_ok &= (&a * &b) * c.clone() == a.clone() * (&b * &c);
        axioms_ok &= (&a + &b) * c.clone() == &(&a * &c) + &(&b * &c);
        axioms_ok &= (&a * &b).conjugate() == &b.conjugate() * &a.conjugate();
        axioms_ok &= (&a * &b).norm_sq() == &a.norm_sq() * &b.norm_sq();
        if !a.is_zero() {
            let inv = a.inverse().expect("nonzero");
            axioms_ok &= &a * &inv == Quaternion::one() && &inv * &a == Quaternion::one();
        }
    }
    suite.check("division-ring axioms (200 random quaternions)", axioms_ok);

    let mut duality_ok = true;
    for _ in 0..50 {
        let m = rng.below(3) as usize + 1;
        let n = rng.below(3) as usize + 1;
        let p = rng.below(3) as usize + 1;
        let a = rng.quaternion_matrix(m, n);
        let b = rng.quaternion_matrix(n, p);
        let rc = a.rc_mul(&b).expect("conformable");
        let cr = a.cr_mul(&b).expect("conformable");
        duality_ok &= rc.transpose() == b.transpose().cr_mul(&a.transpose()).expect("conformable");
        duality_ok &= cr == a.conjugate().rc_mul(&b.conjugate()).expect("conformable").conjugate();
        duality_ok &= cr == a.into_opposite().rc_mul(&b.into_opposite()).expect("conformable").from_opposite();
    }
    suite.check("duality transports (50 random pairs)", duality_ok);

    let mut inverse_ok = true;
    for n in 1..=3 {
        for _ in 0..10 {
            let a = rng.nonsingular_quaternion(n, ProductKind::Rc);
            let by_elim = rc_inverse(&a).expect("square").expect("nonsingular");
            let identity = Matrix::identity(n);
            inverse_ok &= a.rc_mul(&by_elim).expect("square") == identity;
            inverse_ok &= by_elim.rc_mul(&a).expect("square") == identity;
            inverse_ok &= rc_inverse_quasidet(&a).expect("square") == Some(by_elim);
        }
    }
    suite.check("two-sided inverses, elimination = quasideterminant route", inverse_ok);

    let mut rank_ok = true;
    for _ in 0..30 {
        let m = rng.below(4) as usize + 1;
        let n = rng.below(4) as usize + 1;
        let k = rng.below(m.min(n) as u64 + 1) as usize;
        let a = if k == 0 {
            Matrix::zero(m, n)
        } else {
            rng.rank_deficient_quaternion(m, n, k)
        };
        let report = rc_rank(&a);
        rank_ok &= report.rank == k;
        rank_ok &= report.rank == minor_rank_oracle(&a, ProductKind::Rc);
        rank_ok &= report.verify(&a);
    }
    suite.check("elimination rank = minor oracle, certificates verify", rank_ok);

    let mut solve_ok = true;
    for _ in 0..20 {
        let m = rng.below(3) as usize + 1;
        let n = rng.below(3) as usize + 1;
        let a = rng.quaternion_matrix(m, n);
        let x = rng.quaternion_matrix(n, 1);
        let b = a.rc_mul(&x).expect("conformable");
        match solve_general(&a, &b, Side::Right, ProductKind::Rc).expect("conformable") {
            SolveOutcome::Unique(sol) => solve_ok &= a.rc_mul(&sol).expect("conformable") == b,
            SolveOutcome::Parametric { particular, .. } => {
                solve_ok &= a.rc_mul(&particular).expect("conformable") == b
            }
            SolveOutcome::Inconsistent { .. } => solve_ok = false,
        }
    }
    suite.check("generated-consistent systems solve and substitute back", solve_ok);

    let witness_failures = skewlin::witness::witness_report().check();
    suite.check("witness matrix (RC-singular, CR-nonsingular)", witness_failures.is_empty());

    if suite.failures == 0 {
        crate::emit_line("self-test passed");
        Ok(0)
    } else {
        crate::emit_line(&format!("self-test failed: {} check(s)", suite.failures));
        Ok(1)
    }
}
