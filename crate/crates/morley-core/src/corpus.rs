//! Reusable example systems: small hand-checked inputs and
//! deterministic pseudo-random dense systems for stress tests.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::WPoly;
use crate::quotient::{SystemConfig, SystemError};
use crate::ring::{monomials_of_wdeg, RingDescriptor};
use crate::scalar::{Field, Fp, Rat};

/// n = 1, weight 1, f_i = x^{d_i}.
pub fn univariate_powers<K: Field>(cfg: K::Config, degrees: &[u32]) -> SystemConfig<K> {
    let ring = RingDescriptor::x_ring(vec![1], vec!["x".into()]);
    let polys = degrees.iter().map(|&d| WPoly::var(&ring, 0).pow(d)).collect();
    SystemConfig::new(ring, cfg, polys).expect("powers of x form a valid system")
}

/// n = len(degrees), all weights 1, f_i = x_i^{d_i}.
pub fn diagonal_powers<K: Field>(cfg: K::Config, degrees: &[u32]) -> SystemConfig<K> {
    let n = degrees.len();
    let ring = RingDescriptor::x_ring(
        vec![1; n],
        (1..=n).map(|i| format!("x{i}")).collect(),
    );
    let polys = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| WPoly::var(&ring, i).pow(d))
        .collect();
    SystemConfig::new(ring, cfg, polys).expect("diagonal powers form a valid system")
}

/// (x1², x1·x2): a system whose quotient is infinite-dimensional,
/// so the finiteness certificate must fail.
pub fn shared_factor_pair<K: Field>(cfg: K::Config) -> SystemConfig<K> {
    let ring = RingDescriptor::x_ring(vec![1, 1], vec!["x1".into(), "x2".into()]);
    let x1 = WPoly::var(&ring, 0);
    let x2 = WPoly::var(&ring, 1);
    let polys = vec![x1.mul(&x1), x1.mul(&x2)];
    SystemConfig::new(ring, cfg, polys).expect("valid system")
}

fn random_system<K: Field>(
    cfg: K::Config,
    ring: Arc<RingDescriptor>,
    degrees: &[i64],
    mut draw: impl FnMut() -> K,
) -> Result<SystemConfig<K>, SystemError> {
    let mut polys = Vec::with_capacity(degrees.len());
    for &d in degrees {
        let basis = monomials_of_wdeg(&ring, d);
        let mut f = WPoly::zero(&ring);
        // No monomials of degree d leaves f = 0; SystemConfig::new
        // then reports the zero polynomial with its index.
        while !basis.is_empty() {
            f = WPoly::zero(&ring);
            for m in &basis {
                f = f.add(&WPoly::monomial(&ring, m.clone(), draw()));
            }
            if !f.is_zero() {
                break;
            }
        }
        polys.push(f);
    }
    SystemConfig::new(ring, cfg, polys)
}

/// Dense random system over F_p: each f_i carries every monomial of
/// weighted degree degrees[i] with a uniform coefficient (redrawn if
/// all vanish). Fully determined by `seed`.
pub fn random_fp_system(
    p: u64,
    seed: u64,
    weights: &[i64],
    degrees: &[i64],
) -> Result<SystemConfig<Fp>, SystemError> {
    let n = weights.len();
    let ring = RingDescriptor::x_ring(
        weights.to_vec(),
        (1..=n).map(|i| format!("x{i}")).collect(),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_system(p, ring, degrees, move || {
        Fp::embed_i64(&p, rng.gen_range(0..p) as i64)
    })
}

/// Dense random system over Q with small integer coefficients in
/// [−9, 9]. Fully determined by `seed`.
pub fn random_rat_system(
    seed: u64,
    weights: &[i64],
    degrees: &[i64],
) -> Result<SystemConfig<Rat>, SystemError> {
    let n = weights.len();
    let ring = RingDescriptor::x_ring(
        weights.to_vec(),
        (1..=n).map(|i| format!("x{i}")).collect(),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_system((), ring, degrees, move || {
        Rat::embed_i64(&(), rng.gen_range(-9..=9))
    })
}

/// Weight/degree shapes for the random stress corpus: n ∈ {2, 3},
/// weights in {1, 2}, degrees ≤ 4, and up to two extra polynomials
/// beyond n — sized so a full duality check on each stays fast in
/// exact arithmetic.
pub fn corpus_shapes() -> Vec<(Vec<i64>, Vec<i64>)> {
    vec![
        // n = 2, weights [1, 1]
        (vec![1, 1], vec![2, 2]),
        (vec![1, 1], vec![2, 3]),
        (vec![1, 1], vec![3, 3]),
        (vec![1, 1], vec![2, 4]),
        (vec![1, 1], vec![3, 4]),
        (vec![1, 1], vec![4, 4]),
        (vec![1, 1], vec![2, 2, 2]),
        (vec![1, 1], vec![2, 2, 3]),
        (vec![1, 1], vec![2, 3, 3]),
        (vec![1, 1], vec![2, 2, 4]),
        (vec![1, 1], vec![2, 2, 2, 2]),
        (vec![1, 1], vec![2, 2, 2, 3]),
        // n = 2, weights [1, 2]
        (vec![1, 2], vec![2, 2]),
        (vec![1, 2], vec![2, 4]),
        (vec![1, 2], vec![3, 4]),
        (vec![1, 2], vec![4, 4]),
        (vec![1, 2], vec![2, 2, 4]),
        (vec![1, 2], vec![2, 4, 4]),
        // n = 2, weights [2, 2]
        (vec![2, 2], vec![2, 2]),
        (vec![2, 2], vec![2, 4]),
        (vec![2, 2], vec![4, 4]),
        (vec![2, 2], vec![2, 2, 4]),
        // n = 3
        (vec![1, 1, 1], vec![2, 2, 2]),
        (vec![1, 1, 1], vec![2, 2, 3]),
        (vec![1, 1, 1], vec![2, 2, 2, 2]),
        (vec![1, 1, 2], vec![2, 2, 2]),
        (vec![1, 1, 2], vec![2, 2, 4]),
        (vec![2, 2, 2], vec![2, 2, 2]),
    ]
}

/// The stress corpus over F_p: one dense random system per shape,
/// retrying a few deterministic seeds until the finiteness
/// certificate holds (dense systems almost always pass on the first
/// draw). Labels describe the shape and chosen seed.
pub fn certified_fp_corpus(p: u64) -> Vec<(String, SystemConfig<Fp>)> {
    let mut out = Vec::new();
    for (i, (w, d)) in corpus_shapes().into_iter().enumerate() {
        for attempt in 0..5u64 {
            let seed = 101 * i as u64 + attempt;
            let s = random_fp_system(p, seed, &w, &d).expect("dense draw is a valid system");
            if s.finiteness_certificate(s.default_search_bound()).is_certified() {
                out.push((format!("w={w:?} d={d:?} seed={seed}"), s));
                break;
            }
        }
    }
    out
}

/// One dense random integer-coefficient system per corpus shape,
/// for cross-characteristic comparison via `reduce_mod`.
pub fn integer_corpus() -> Vec<(String, SystemConfig<Rat>)> {
    corpus_shapes()
        .into_iter()
        .enumerate()
        .map(|(i, (w, d))| {
            let seed = 7000 + i as u64;
            let s = random_rat_system(seed, &w, &d).expect("dense draw is a valid system");
            (format!("w={w:?} d={d:?} seed={seed}"), s)
        })
        .collect()
}

/// The same system with coefficients reduced mod p. Panics if a
/// denominator vanishes mod p (integer-coefficient inputs never do).
pub fn reduce_mod(s: &SystemConfig<Rat>, p: u64) -> Result<SystemConfig<Fp>, SystemError> {
    let ring = s.ring.clone();
    let polys = s
        .polys
        .iter()
        .map(|f| {
            let mut g = WPoly::zero(&ring);
            for (m, c) in &f.terms {
                let num = Fp::embed(&p, c.numer());
                let den = Fp::embed(&p, c.denom());
                assert!(den != Fp::embed_i64(&p, 0), "denominator vanishes mod {p}");
                g = g.add(&WPoly::monomial(&ring, m.clone(), num / den));
            }
            g
        })
        .collect();
    SystemConfig::new(ring, p, polys)
}
