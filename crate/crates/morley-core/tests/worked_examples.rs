//! End-to-end pipeline runs on small hand-checked systems, exercising
//! only the public API: parse → system → Morley data → duality report.

use morley_core::corpus::{
    diagonal_powers, random_fp_system, random_rat_system, shared_factor_pair, univariate_powers,
};
use morley_core::{check_duality, CheckOptions, RatSystem, Verdict};

fn checked(s: &RatSystem) -> morley_core::DualityReport {
    let report = check_duality(s, CheckOptions::default());
    assert_eq!(
        report.verdict,
        Verdict::Verified,
        "failures: {:?}",
        report.failures
    );
    report
}

#[test]
fn single_square_full_pipeline() {
    let s = univariate_powers::<morley_core::Rat>((), &[2]);
    let report = checked(&s);
    assert_eq!(report.delta, 1);
    assert_eq!(report.hilbert[..2], [1, 1]);
    assert!(report.hilbert[2..].iter().all(|&d| d == 0));
    assert_eq!(report.delta_lines, vec!["(+1)·(X + Y)·e{}"]);
    assert_eq!(report.lambda_lines, vec!["(+1)·(X)·e{}"]);
    let row = |nu: usize| &report.rows[nu];
    for nu in 0..=1 {
        assert_eq!(row(nu).dim_b_dual, 1);
        assert_eq!(row(nu).rank_omega, Some(1));
        assert_eq!(row(nu).pairing_rank, Some(1));
    }
}

#[test]
fn square_cube_full_pipeline() {
    let s = univariate_powers::<morley_core::Rat>((), &[2, 3]);
    let report = checked(&s);
    assert_eq!(report.delta, 4);
    assert_eq!(
        report.delta_lines,
        vec!["(-1)·(X^2 + X*Y + Y^2)·e{1}", "(+1)·(X + Y)·e{2}"]
    );
    assert_eq!(
        report.lambda_lines,
        vec!["(-1)·(X^2)·e{1}", "(+1)·(X)·e{2}"]
    );
    // H_1 of the Koszul complex lives only in degrees 3 and 4, where
    // it matches B̌_1 and B̌_0.
    let dims_h: Vec<usize> = report.rows.iter().map(|r| r.dim_h).collect();
    assert_eq!(&dims_h[..6], &[0, 0, 0, 1, 1, 0]);
    assert!(report.rows.iter().all(|r| r.ok));
}

#[test]
fn two_squares_full_pipeline() {
    let s = diagonal_powers::<morley_core::Rat>((), &[2, 2]);
    let report = checked(&s);
    assert_eq!(report.delta, 2);
    assert_eq!(report.hilbert[..4], [1, 2, 1, 0]);
    assert_eq!(
        report.delta_lines,
        vec!["(+1)·(X1*X2 + X1*Y2 + X2*Y1 + Y1*Y2)·e{}"]
    );
    assert_eq!(report.lambda_lines, vec!["(+1)·(X1*X2)·e{}"]);
    let b_dims: Vec<usize> = report.rows.iter().map(|r| r.dim_b_dual).collect();
    assert_eq!(&b_dims[..4], &[1, 2, 1, 0]);
    for r in &report.rows {
        assert_eq!(r.rank_omega.unwrap_or(0), r.dim_b_dual);
    }
}

#[test]
fn shared_factor_not_certified() {
    let s = shared_factor_pair::<morley_core::Rat>(());
    let report = check_duality(&s, CheckOptions::default());
    assert_eq!(report.verdict, Verdict::NotCertified);
    assert!(!report.certificate.is_certified());
    assert!(report.rows.iter().all(|r| r.rank_omega.is_none()));
}

#[test]
fn prime_field_matches_rational_dimensions() {
    let q = diagonal_powers::<morley_core::Rat>((), &[2, 2]);
    let f = diagonal_powers::<morley_core::Fp>(101, &[2, 2]);
    let rq = check_duality(&q, CheckOptions::default());
    let rf = check_duality(&f, CheckOptions::default());
    assert_eq!(rq.verdict, Verdict::Verified);
    assert_eq!(rf.verdict, Verdict::Verified);
    assert_eq!(rq.hilbert, rf.hilbert);
    let dims = |r: &morley_core::DualityReport| -> Vec<(i64, usize, usize)> {
        r.rows.iter().map(|x| (x.nu, x.dim_b_dual, x.dim_h)).collect()
    };
    assert_eq!(dims(&rq), dims(&rf));
}

#[test]
fn random_systems_verify() {
    let s = random_rat_system(1, &[1, 1], &[2, 2]).unwrap();
    checked(&s);
    let f = random_fp_system(101, 2, &[1, 2], &[2, 4]).unwrap();
    let report = check_duality(&f, CheckOptions::default());
    assert_eq!(report.verdict, Verdict::Verified, "failures: {:?}", report.failures);
}
