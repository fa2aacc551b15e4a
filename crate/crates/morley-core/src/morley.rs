//! Generalized Morley forms: telescoping decompositions g_{i,j}, the
//! form Δ in the difference complex, its Y=0 shadow Λ, and the bigraded
//! reduction ∇ in C ⊗ B, together with the well-definedness checks
//! (multiplication invariance and decomposition independence).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::koszul::{wedge_basis, Chain, KoszulContext, WedgeIndex};
use crate::matrix::Matrix;
use crate::poly::WPoly;
use crate::quotient::{DualVector, SystemConfig};
use crate::ring::{monomials_of_wdeg, Monomial, RingDescriptor};
use crate::scalar::Field;

/// Which telescoping order produced a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Substitute Y into the variables left to right.
    Forward,
    /// Substitute X into the variables left to right instead.
    Reverse,
}

/// Matrices g_{i,j} over the doubled ring with
/// f_i(X) − f_i(Y) = Σ_j (X_j − Y_j)·g_{i,j}, re-verified exactly on
/// construction; g_{i,j} is homogeneous of degree d_i − m_j or zero.
pub struct Decomposition<K: Field> {
    pub direction: Direction,
    pub doubled: Arc<RingDescriptor>,
    /// r × n matrix of doubled-ring polynomials.
    pub g: Vec<Vec<WPoly<K>>>,
}

/// The Koszul complex of the difference sequence f_i(X) − f_i(Y) over
/// the doubled ring.
pub fn difference_context<K: Field>(cfg: &SystemConfig<K>) -> KoszulContext<K> {
    let doubled = cfg.ring.doubled_ring();
    let seq = cfg
        .polys
        .iter()
        .map(|f| {
            let fx = f.embed_doubled(&doubled);
            let fy = substitute_all_y(f, &doubled);
            fx.sub(&fy)
        })
        .collect();
    KoszulContext::new(doubled, seq)
}

fn substitute_all_y<K: Field>(f: &WPoly<K>, doubled: &Arc<RingDescriptor>) -> WPoly<K> {
    let n = doubled.base_n;
    let images: Vec<WPoly<K>> = (0..n).map(|i| WPoly::var(doubled, n + i)).collect();
    f.substitute(doubled, &images).expect("Y_i has X_i's weight")
}

/// Build the telescoping decomposition: the j-th forward term is
/// f_i(Y_1..Y_{j−1}, X_j..X_n) − f_i(Y_1..Y_j, X_{j+1}..X_n), which
/// differs only in the j-th variable and is exactly divisible by
/// X_j − Y_j. The reverse direction telescopes the X prefix instead.
pub fn telescoping_decomposition<K: Field>(
    cfg: &SystemConfig<K>,
    direction: Direction,
) -> Decomposition<K> {
    let n = cfg.n();
    let doubled = cfg.ring.doubled_ring();
    // stage(s) = substitution with the first s variables replaced:
    // forward replaces a Y prefix, reverse an X prefix (rest Y).
    let stage = |f: &WPoly<K>, s: usize| -> WPoly<K> {
        let images: Vec<WPoly<K>> = (0..n)
            .map(|l| match direction {
                Direction::Forward => {
                    if l < s {
                        WPoly::var(&doubled, n + l) // Y_l
                    } else {
                        WPoly::var(&doubled, l) // X_l
                    }
                }
                Direction::Reverse => {
                    if l < s {
                        WPoly::var(&doubled, l) // X_l
                    } else {
                        WPoly::var(&doubled, n + l) // Y_l
                    }
                }
            })
            .collect();
        f.substitute(&doubled, &images).expect("variable images carry the right weights")
    };
    let mut g = Vec::with_capacity(cfg.r());
    for (i, f) in cfg.polys.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let diff = match direction {
                Direction::Forward => stage(f, j).sub(&stage(f, j + 1)),
                Direction::Reverse => stage(f, j + 1).sub(&stage(f, j)),
            };
            let gij = diff
                .divide_linear_diff(j)
                .expect("telescoping difference is divisible by X_j - Y_j");
            if !gij.is_zero() {
                assert_eq!(
                    gij.homogeneous_degree(),
                    Ok(cfg.degrees[i] - cfg.ring.weight(j)),
                    "g[{i}][{j}] has the wrong degree"
                );
            }
            row.push(gij);
        }
        // Re-verify the defining identity exactly.
        let mut sum = WPoly::zero(&doubled);
        for (j, gij) in row.iter().enumerate() {
            let lin = WPoly::var(&doubled, j).sub(&WPoly::var(&doubled, n + j));
            sum = sum.add(&lin.mul(gij));
        }
        let fx = f.embed_doubled(&doubled);
        let fy = substitute_all_y(f, &doubled);
        assert_eq!(sum, fx.sub(&fy), "decomposition identity failed for f_{}", i + 1);
        g.push(row);
    }
    Decomposition {
        direction,
        doubled,
        g,
    }
}

/// Signature of the permutation sending (1..n) to S ascending and
/// (n+1..r) to the complement ascending, by inversion count.
/// `s` holds 0-based positions.
pub fn shuffle_sign(s: &[usize], r: usize) -> i64 {
    let mut seq: Vec<usize> = s.to_vec();
    seq.extend((0..r).filter(|j| !s.contains(j)));
    let mut inversions = 0usize;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant by cofactor expansion along the first row; fine at the
/// small matrix sizes used here (n ≤ ~5).
fn det_poly<K: Field>(ring: &Arc<RingDescriptor>, m: &[Vec<&WPoly<K>>]) -> WPoly<K> {
    let n = m.len();
    if n == 0 {
        return WPoly::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = WPoly::zero(ring);
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<&WPoly<K>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| *p)
                    .collect()
            })
            .collect();
        let cof = entry.mul(&det_poly(ring, &minor));
        det = if col % 2 == 0 { det.add(&cof) } else { det.sub(&cof) };
    }
    det
}

/// The shuffle-determinant form Σ_S ε(S)·det(rows S of `mat`)·e_T with
/// T the ascending complement of S — shared shape of Δ and Λ.
fn shuffle_form<K: Field>(
    ring: &Arc<RingDescriptor>,
    mat: &[Vec<WPoly<K>>],
    r: usize,
    n: usize,
    nu: i64,
) -> Chain<K> {
    let mut chain = Chain::zero(r - n, nu);
    for s_idx in wedge_basis(r, n) {
        let s = &s_idx.subset;
        let rows: Vec<Vec<&WPoly<K>>> = s
            .iter()
            .map(|&i| mat[i].iter().collect())
            .collect();
        let mut det = det_poly(ring, &rows);
        if det.is_zero() {
            continue;
        }
        if shuffle_sign(s, r) < 0 {
            det = det.neg();
        }
        let t: Vec<usize> = (0..r).filter(|j| !s.contains(j)).collect();
        chain.add_term(WedgeIndex::new(t), det);
    }
    chain
}

/// The generalized Morley form Δ: a cycle of degree δ in homological
/// index r − n of the difference complex. The cycle property is
/// verified on construction.
pub fn delta_form<K: Field>(
    cfg: &SystemConfig<K>,
    dec: &Decomposition<K>,
    diff_ctx: &KoszulContext<K>,
) -> Chain<K> {
    let chain = shuffle_form(&dec.doubled, &dec.g, cfg.r(), cfg.n(), cfg.delta);
    if chain.p >= 1 {
        let d = diff_ctx.differential(&chain);
        assert!(d.is_zero(), "the Morley form failed its cycle check");
    }
    chain
}

/// Λ: the same shuffle-determinant form built from
/// f_{i,j} = g_{i,j}|_{Y=0}, a cycle in K_{r−n}(f_1..f_r; C) of degree
/// δ. Verified to be a cycle on construction.
pub fn lambda_form<K: Field>(
    cfg: &SystemConfig<K>,
    dec: &Decomposition<K>,
    koszul_ctx: &KoszulContext<K>,
) -> Chain<K> {
    let f_mat: Vec<Vec<WPoly<K>>> = dec
        .g
        .iter()
        .map(|row| {
            row.iter()
                .map(|gij| gij.set_y_zero().with_ring(&cfg.ring))
                .collect()
        })
        .collect();
    let chain = shuffle_form(&cfg.ring, &f_mat, cfg.r(), cfg.n(), cfg.delta);
    if chain.p >= 1 {
        let d = koszul_ctx.differential(&chain);
        assert!(d.is_zero(), "the reduced Morley form failed its cycle check");
    }
    chain
}

/// Split Δ by bidegree: bucket (p, q) collects the terms whose X-part
/// weighted degree plus wedge shift is p and Y-part degree is q.
/// Summing the buckets returns Δ.
pub fn split_bidegree<K: Field>(
    cfg: &SystemConfig<K>,
    delta_chain: &Chain<K>,
) -> BTreeMap<(i64, i64), Chain<K>> {
    let mut out: BTreeMap<(i64, i64), Chain<K>> = BTreeMap::new();
    for (j, poly) in &delta_chain.coeffs {
        let dj = j.shift(&cfg.degrees);
        for (m, c) in &poly.terms {
            let p = m.xdeg(&poly.ring) + dj;
            let q = m.ydeg(&poly.ring);
            let bucket = out
                .entry((p, q))
                .or_insert_with(|| Chain::zero(delta_chain.p, delta_chain.nu));
            bucket.add_term(
                j.clone(),
                WPoly::monomial(&poly.ring, m.clone(), c.clone()),
            );
        }
    }
    out
}

/// One bidegree component ∇_{p,q}: for each wedge index J a matrix
/// whose rows run over the B_q basis and whose columns run over the
/// X-monomials of weighted degree p − D_J; the entry is the reduced
/// coefficient of Δ.
pub struct NablaComponent<K: Field> {
    pub p: i64,
    pub q: i64,
    pub blocks: BTreeMap<WedgeIndex, Matrix<K>>,
}

/// The full bigraded reduction ∇ of Δ in C ⊗ B: components for every
/// (p, q) with p + q = δ, p, q ≥ 0.
pub struct Nabla<K: Field> {
    pub delta: i64,
    pub components: BTreeMap<(i64, i64), NablaComponent<K>>,
}

/// Reduce Δ into C ⊗ B and split by bidegree: every term
/// c·X^α Y^β e_J contributes c times the B_q class of Y^β (read as a
/// C-monomial) to the (wdeg α + D_J, wdeg β) component.
pub fn nabla<K: Field>(cfg: &SystemConfig<K>, delta_chain: &Chain<K>) -> Nabla<K> {
    let r = cfg.r();
    let n = cfg.n();
    let p_hom = r - n;
    let delta = cfg.delta;
    let mut components = BTreeMap::new();
    for q in 0..=delta.max(0) {
        let p = delta - q;
        let bdim = cfg.b_dim(q);
        let mut blocks = BTreeMap::new();
        for j in wedge_basis(r, p_hom) {
            let cols = monomials_of_wdeg(&cfg.ring, p - j.shift(&cfg.degrees));
            blocks.insert(j, Matrix::<K>::zero(bdim, cols.len()));
        }
        components.insert((p, q), NablaComponent { p, q, blocks });
    }
    for (j, poly) in &delta_chain.coeffs {
        let dj = j.shift(&cfg.degrees);
        for (m, c) in &poly.terms {
            let alpha = Monomial {
                exps: m.exps[..n].to_vec(),
            };
            let beta = Monomial {
                exps: m.exps[n..].to_vec(),
            };
            let p = alpha.wdeg(&cfg.ring) + dj;
            let q = beta.wdeg(&cfg.ring);
            let nf = cfg
                .normal_form(&WPoly::monomial(&cfg.ring, beta, K::one()), q)
                .expect("monomial class");
            let comp = components.get_mut(&(p, q)).expect("bidegree inside [0, delta]");
            let block = comp.blocks.get_mut(j).expect("wedge block exists");
            let col_basis = monomials_of_wdeg(&cfg.ring, p - dj);
            let col = col_basis
                .binary_search(&alpha)
                .expect("X-part is a degree p − D_J monomial");
            for (row, v) in nf.iter().enumerate() {
                if !v.is_zero() {
                    block[(row, col)] = block[(row, col)].clone() + c.clone() * v.clone();
                }
            }
        }
    }
    Nabla { delta, components }
}

impl<K: Field> Nabla<K> {
    /// Contract ∇_{ν,δ−ν} with a dual vector u ∈ B̌_{δ−ν}: the result
    /// is the chain Σ_J Σ_α u(reduced column) · X^α e_J in K(f; C).
    pub fn contract(
        &self,
        cfg: &SystemConfig<K>,
        nu: i64,
        u: &DualVector<K>,
    ) -> Chain<K> {
        assert_eq!(u.q, self.delta - nu, "dual vector degree mismatch");
        let p_hom = cfg.r() - cfg.n();
        let mut chain = Chain::zero(p_hom, nu);
        let Some(comp) = self.components.get(&(nu, self.delta - nu)) else {
            return chain;
        };
        for (j, block) in &comp.blocks {
            let cols = monomials_of_wdeg(&cfg.ring, nu - j.shift(&cfg.degrees));
            let mut poly = WPoly::zero(&cfg.ring);
            for (ci, alpha) in cols.iter().enumerate() {
                let val = u.apply(&block.col(ci));
                if !val.is_zero() {
                    poly = poly.add(&WPoly::monomial(&cfg.ring, alpha.clone(), val));
                }
            }
            chain.add_term(j.clone(), poly);
        }
        chain
    }
}

/// Whether (X_j − Y_j)·Δ is a boundary of the difference complex —
/// the multiplication-invariance property of the Morley class.
pub fn dp_check<K: Field>(
    diff_ctx: &KoszulContext<K>,
    delta_chain: &Chain<K>,
    j: usize,
) -> bool {
    let n = diff_ctx.ring.base_n;
    let lin = WPoly::var(&diff_ctx.ring, j).sub(&WPoly::var(&diff_ctx.ring, n + j));
    let shifted = delta_chain.mul_poly(&lin);
    diff_ctx.is_boundary(&shifted).expect("product of a cycle is a cycle")
}

/// Whether Δ_fwd − Δ_rev is a boundary — independence of the Morley
/// class from the chosen decomposition.
pub fn wiebe_check<K: Field>(
    diff_ctx: &KoszulContext<K>,
    fwd: &Chain<K>,
    rev: &Chain<K>,
) -> bool {
    diff_ctx.is_boundary(&fwd.sub(rev)).expect("difference of cycles is a cycle")
}

/// Everything the duality verification needs from this module, with
/// the well-definedness check results.
pub struct MorleyData<K: Field> {
    pub delta_chain: Chain<K>,
    pub lambda_chain: Chain<K>,
    pub nabla: Nabla<K>,
    /// (X_j − Y_j)·Δ bounds, per variable j.
    pub dp_ok: Vec<bool>,
    /// Forward and reverse Δ agree up to a boundary.
    pub wiebe_ok: bool,
    /// ∇_{δ,0} contracted with the dual of 1 equals Λ coefficientwise.
    pub nabla_top_is_lambda: bool,
}

impl<K: Field> MorleyData<K> {
    pub fn build(cfg: &SystemConfig<K>, koszul_ctx: &KoszulContext<K>) -> Self {
        let diff_ctx = difference_context(cfg);
        let fwd = telescoping_decomposition(cfg, Direction::Forward);
        let rev = telescoping_decomposition(cfg, Direction::Reverse);
        let delta_chain = delta_form(cfg, &fwd, &diff_ctx);
        let delta_rev = delta_form(cfg, &rev, &diff_ctx);
        let lambda_chain = lambda_form(cfg, &fwd, koszul_ctx);
        let nabla = nabla(cfg, &delta_chain);
        let dp_ok = (0..cfg.n())
            .map(|j| dp_check(&diff_ctx, &delta_chain, j))
            .collect();
        let wiebe_ok = wiebe_check(&diff_ctx, &delta_chain, &delta_rev);
        let nabla_top_is_lambda = if cfg.delta >= 0 {
            let dual_one = DualVector {
                q: 0,
                coords: {
                    let mut v = vec![K::zero(); cfg.b_dim(0)];
                    if !v.is_empty() {
                        v[0] = K::one();
                    }
                    v
                },
            };
            nabla.contract(cfg, cfg.delta, &dual_one) == lambda_chain
        } else {
            lambda_chain.is_zero()
        };
        MorleyData {
            delta_chain,
            lambda_chain,
            nabla,
            dp_ok,
            wiebe_ok,
            nabla_top_is_lambda,
        }
    }
}
