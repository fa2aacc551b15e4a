//! Built-in verification corpus: eight independent checks covering
//! the univariate family, the two golden worked examples, the random
//! stress corpus, the lemma suite, the negative control, field
//! consistency, and the torsion-oracle agreement.

use std::time::Instant;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use morley_core::corpus::{
    certified_fp_corpus, diagonal_powers, integer_corpus, reduce_mod, shared_factor_pair,
    univariate_powers,
};
use morley_core::{
    b_linearity_check, check_duality, monomials_of_wdeg, torsion_fixpoint, CheckOptions,
    DualVector, DualityReport, Field, Fp, MorleyData, Rat, SystemConfig, Verdict, WPoly,
};

pub struct Criterion {
    pub name: &'static str,
    pub run: fn() -> Result<String, String>,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { name: "univariate family x^d, d = 2..6", run: univariate_family },
        Criterion { name: "golden example (x^2, x^3)", run: golden_square_cube },
        Criterion { name: "golden example (x1^2, x2^2)", run: golden_two_squares },
        Criterion { name: "random corpus over F_101", run: random_corpus },
        Criterion { name: "lemma suite on the corpus", run: lemma_suite },
        Criterion { name: "negative control (x1^2, x1*x2)", run: negative_control },
        Criterion { name: "field consistency F_101 vs F_65537", run: field_consistency },
        Criterion { name: "torsion fixpoint equals full homology", run: fixpoint_oracle },
    ]
}

/// Run every criterion, printing one line each; exit 0 iff all pass.
pub fn run() -> crate::app::Outcome {
    let list = criteria();
    let total = list.len();
    let mut out = String::new();
    let mut failed = 0;
    for (i, c) in list.iter().enumerate() {
        match (c.run)() {
            Ok(detail) => {
                out.push_str(&format!("[{}/{total}] {} ... PASS ({detail})\n", i + 1, c.name));
            }
            Err(why) => {
                failed += 1;
                out.push_str(&format!("[{}/{total}] {} ... FAIL: {why}\n", i + 1, c.name));
            }
        }
    }
    out.push_str(&format!("selftest: {}/{total} passed\n", total - failed));
    crate::app::Outcome { out, err: String::new(), code: if failed == 0 { 0 } else { 3 } }
}

fn verified(s: &SystemConfig<impl Field>, label: &str) -> Result<DualityReport, String> {
    let report = check_duality(s, CheckOptions::default());
    if report.verdict != Verdict::Verified {
        return Err(format!("{label}: verdict {:?}, failures {:?}", report.verdict, report.failures));
    }
    Ok(report)
}

pub fn univariate_family() -> Result<String, String> {
    let start = Instant::now();
    for d in 2..=6u32 {
        let s = univariate_powers::<Rat>((), &[d]);
        let report = verified(&s, &format!("x^{d}"))?;
        if report.delta != i64::from(d) - 1 {
            return Err(format!("x^{d}: delta = {} != {}", report.delta, d - 1));
        }
        for nu in 0..=report.delta {
            let row = &report.rows[nu as usize];
            if row.dim_b_dual != 1 || row.dim_torsion != Some(1) || row.rank_omega != Some(1) {
                return Err(format!("x^{d}: degree {nu} row {row:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        return Err(format!("took {elapsed:?}, budget 1 s"));
    }
    Ok(format!("5 systems in {elapsed:.2?}"))
}

pub fn golden_square_cube() -> Result<String, String> {
    let s = univariate_powers::<Rat>((), &[2, 3]);
    let report = verified(&s, "(x^2, x^3)")?;
    let want_delta = ["(-1)·(X^2 + X*Y + Y^2)·e{1}", "(+1)·(X + Y)·e{2}"];
    let want_lambda = ["(-1)·(X^2)·e{1}", "(+1)·(X)·e{2}"];
    if report.delta_lines != want_delta {
        return Err(format!("Delta = {:?}", report.delta_lines));
    }
    if report.lambda_lines != want_lambda {
        return Err(format!("Lambda = {:?}", report.lambda_lines));
    }
    let h: Vec<usize> = report.rows.iter().map(|r| r.dim_h).collect();
    let mut want_h = vec![0usize; h.len()];
    want_h[3] = 1;
    want_h[4] = 1;
    if h != want_h {
        return Err(format!("H_1 dims = {h:?}"));
    }
    for nu in [3usize, 4] {
        if report.rows[nu].rank_omega != Some(1) {
            return Err(format!("omega not invertible at nu = {nu}"));
        }
    }
    Ok("Delta, Lambda, homology window, omega ranks".into())
}

pub fn golden_two_squares() -> Result<String, String> {
    let s = diagonal_powers::<Rat>((), &[2, 2]);
    let report = verified(&s, "(x1^2, x2^2)")?;
    if report.delta != 2 {
        return Err(format!("delta = {}", report.delta));
    }
    if report.hilbert[..4] != [1, 2, 1, 0] {
        return Err(format!("hilbert = {:?}", report.hilbert));
    }
    let want = ["(+1)·(X1*X2 + X1*Y2 + X2*Y1 + Y1*Y2)·e{}"];
    if report.delta_lines != want {
        return Err(format!("Delta = {:?}", report.delta_lines));
    }
    for nu in 0..=2usize {
        let row = &report.rows[nu];
        if row.pairing_rank != Some(row.dim_b_dual) {
            return Err(format!("pairing degenerate at nu = {nu}: {row:?}"));
        }
    }
    Ok("hilbert (1,2,1), Delta product form, pairings nondegenerate".into())
}

pub fn random_corpus() -> Result<String, String> {
    let start = Instant::now();
    let corpus = certified_fp_corpus(101);
    if corpus.len() < 20 {
        return Err(format!("only {} certified systems", corpus.len()));
    }
    for (label, s) in &corpus {
        verified(s, label)?;
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 60 {
        return Err(format!("took {elapsed:?}, budget 60 s"));
    }
    Ok(format!("{} systems in {elapsed:.2?}", corpus.len()))
}

pub fn lemma_suite() -> Result<String, String> {
    let corpus = certified_fp_corpus(101);
    let mut pairs = 0usize;
    for (idx, (label, s)) in corpus.iter().enumerate() {
        let ctx = s.koszul();
        let md = MorleyData::build(s, &ctx);
        // Delta is checked as a cycle at construction; Lambda must be a
        // cycle with a nonzero class.
        let lambda_class = ctx
            .class_coords(&md.lambda_chain)
            .map_err(|e| format!("{label}: Lambda not a cycle: {e}"))?;
        if s.delta >= 0 && lambda_class.iter().all(|c| c.is_zero()) {
            return Err(format!("{label}: Lambda class is zero"));
        }
        if !md.dp_ok.iter().all(|&b| b) {
            return Err(format!("{label}: (Xj-Yj)·Delta not exact: {:?}", md.dp_ok));
        }
        if !md.wiebe_ok {
            return Err(format!("{label}: forward/reverse forms disagree"));
        }
        if !md.nabla_top_is_lambda {
            return Err(format!("{label}: top reduction component differs from Lambda"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(9000 + idx as u64);
        for _ in 0..10 {
            let q = rng.gen_range(0..=s.delta.max(0));
            let dim = s.b_dim(q);
            let coords: Vec<Fp> = (0..dim)
                .map(|_| Fp::embed_i64(&101, rng.gen_range(0..101)))
                .collect();
            let u = DualVector { q, coords };
            let max_s = (s.delta - q).min(2).max(0);
            let deg = rng.gen_range(0..=max_s);
            let mut b = WPoly::zero(&s.ring);
            for m in monomials_of_wdeg(&s.ring, deg) {
                b = b.add(&WPoly::monomial(&s.ring, m, Fp::embed_i64(&101, rng.gen_range(0..101))));
            }
            if b.is_zero() {
                b = WPoly::one(&s.ring);
            }
            if !b_linearity_check(s, &ctx, &md.nabla, &b, &u) {
                return Err(format!("{label}: b-linearity failed for b = {b}, q = {q}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{} systems, {pairs} linearity pairs", corpus.len()))
}

pub fn negative_control() -> Result<String, String> {
    let s = shared_factor_pair::<Rat>(());
    let report = check_duality(&s, CheckOptions::default());
    if report.verdict != Verdict::NotCertified {
        return Err(format!("verdict {:?}", report.verdict));
    }
    if !report.verdict.as_str().contains("not certified") {
        return Err(format!("verdict text {:?}", report.verdict.as_str()));
    }
    if report.rows.iter().any(|r| r.rank_omega.is_some()) {
        return Err("an omega rank was claimed without the certificate".into());
    }
    Ok("not certified, dimensions-only report".into())
}

pub fn field_consistency() -> Result<String, String> {
    let mut count = 0usize;
    for (label, s) in integer_corpus() {
        let a = reduce_mod(&s, 101).map_err(|e| format!("{label}: {e}"))?;
        let b = reduce_mod(&s, 65537).map_err(|e| format!("{label}: {e}"))?;
        let ra = check_duality(&a, CheckOptions::default());
        let rb = check_duality(&b, CheckOptions::default());
        if ra.hilbert != rb.hilbert {
            return Err(format!("{label}: hilbert differs: {:?} vs {:?}", ra.hilbert, rb.hilbert));
        }
        let dims = |r: &DualityReport| -> Vec<(i64, usize, usize, Option<usize>, Option<usize>)> {
            r.rows
                .iter()
                .map(|x| (x.nu, x.dim_b_dual, x.dim_h, x.dim_torsion, x.rank_omega))
                .collect()
        };
        if dims(&ra) != dims(&rb) {
            return Err(format!("{label}: dimension tables differ"));
        }
        if ra.verdict != rb.verdict {
            return Err(format!("{label}: verdicts differ: {:?} vs {:?}", ra.verdict, rb.verdict));
        }
        count += 1;
    }
    Ok(format!("{count} systems agree across both primes"))
}

pub fn fixpoint_oracle() -> Result<String, String> {
    let corpus = certified_fp_corpus(101);
    for (label, s) in &corpus {
        let ctx = s.koszul();
        let p = s.r() - s.n();
        let window_hi = s.delta.max(0) + s.default_slack().max(1);
        let t = torsion_fixpoint(&ctx, p, window_hi, &s.ring.weights)
            .map_err(|e| format!("{label}: {e}"))?;
        for nu in 0..=window_hi {
            let full = ctx.homology(p, nu).dim();
            if t[&nu].cols() != full {
                return Err(format!(
                    "{label}: fixpoint dim {} != full dim {full} at degree {nu}",
                    t[&nu].cols()
                ));
            }
        }
    }
    Ok(format!("{} systems, all degrees agree", corpus.len()))
}
