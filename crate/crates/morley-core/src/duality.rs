//! Degree-by-degree verification that the Morley-form map ω identifies
//! the graded dual of B (shifted by δ) with the m-torsion of the Koszul
//! homology H_{r−n}: torsion bases, ω matrices, the multiplication
//! pairing, B-linearity, and the final verdict report.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::koszul::{Chain, HomologyPiece, KoszulContext};
use crate::matrix::{column_space_echelon, quotient_coords, solve_in_span, Matrix};
use crate::morley::{MorleyData, Nabla};
use crate::poly::WPoly;
use crate::quotient::{CertificateStatus, DualVector, SystemConfig};
use crate::ring::RingDescriptor;
use crate::scalar::Field;

/// Errors from duality-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityError {
    DegreeOutOfRange { nu: i64, delta: i64 },
    /// An ω image fell outside the torsion subspace.
    ImageNotTorsion { nu: i64 },
    /// The degree-δ torsion is not one-dimensional.
    TorsionNotALine { dim: usize },
    /// The fixpoint cannot classify a class whose products leave the window.
    WindowTooSmall { nu: i64 },
}

impl fmt::Display for DualityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityError::DegreeOutOfRange { nu, delta } => {
                write!(f, "degree {nu} outside the duality range [0, {delta}]")
            }
            DualityError::ImageNotTorsion { nu } => {
                write!(f, "an image of ω at degree {nu} is not m-torsion")
            }
            DualityError::TorsionNotALine { dim } => {
                write!(f, "degree-δ torsion has dimension {dim}, expected a line")
            }
            DualityError::WindowTooSmall { nu } => {
                write!(f, "window too small to classify torsion at degree {nu}")
            }
        }
    }
}

impl std::error::Error for DualityError {}

/// Options for `check_duality`; `None` picks the documented defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Width of the verification strip above δ (default max m_i + max d_i).
    pub slack: Option<i64>,
    /// Degree bound for the finiteness search (default Σ d_i + max m_i).
    pub search_bound: Option<i64>,
}

/// Homology of H_{r−n}(K)_ν over a degree window, with torsion bases.
pub struct HomologyTable<K: Field> {
    /// Homological index r − n.
    pub p: usize,
    /// Window is [0, window_hi], inclusive.
    pub window_hi: i64,
    pub entries: BTreeMap<i64, TableEntry<K>>,
}

pub struct TableEntry<K: Field> {
    pub piece: Arc<HomologyPiece<K>>,
    /// Columns: torsion basis vectors in homology class coordinates.
    pub torsion: Matrix<K>,
}

impl<K: Field> HomologyTable<K> {
    pub fn dim_h(&self, nu: i64) -> usize {
        self.entries.get(&nu).map_or(0, |e| e.piece.dim())
    }

    pub fn dim_torsion(&self, nu: i64) -> usize {
        self.entries.get(&nu).map_or(0, |e| e.torsion.cols())
    }
}

/// The m-torsion of H_{r−n} over the window, by the monotone fixpoint
/// T⁰ = 0, T^{s+1}_μ = {x : X_j·x ∈ T^s_{μ+m_j} for all j}. Products
/// that leave the window are accepted only where H vanishes; if a
/// nonzero class escapes, the window is too small to decide.
pub fn torsion_fixpoint<K: Field>(
    ctx: &KoszulContext<K>,
    p: usize,
    window_hi: i64,
    weights: &[i64],
) -> Result<BTreeMap<i64, Matrix<K>>, DualityError> {
    let degrees: Vec<i64> = (0..=window_hi).collect();
    let mut dims = BTreeMap::new();
    for &nu in &degrees {
        dims.insert(nu, ctx.homology(p, nu).dim());
    }
    // Multiplication matrices H_ν → H_{ν+m_j}, computed on demand.
    let mut mul: BTreeMap<(i64, usize), Matrix<K>> = BTreeMap::new();
    let mut mul_matrix = |nu: i64, j: usize| -> Matrix<K> {
        if let Some(m) = mul.get(&(nu, j)) {
            return m.clone();
        }
        let src = ctx.homology(p, nu).dim();
        let dst = ctx.homology(p, nu + weights[j]).dim();
        let mut m = Matrix::zero(dst, src);
        for k in 0..src {
            let mut unit = vec![K::zero(); src];
            unit[k] = K::one();
            let img = ctx.multiply_class(p, nu, &unit, j);
            for (row, v) in img.into_iter().enumerate() {
                m[(row, k)] = v;
            }
        }
        mul.insert((nu, j), m.clone());
        m
    };
    // T_ν as echelonized column bases; start empty.
    let mut t: BTreeMap<i64, Matrix<K>> = degrees
        .iter()
        .map(|&nu| (nu, Matrix::zero(dims[&nu], 0)))
        .collect();
    loop {
        let mut changed = false;
        for &nu in &degrees {
            let d = dims[&nu];
            if d == 0 || t[&nu].cols() == d {
                continue;
            }
            // x ∈ T'_ν ⟺ the class of M_j·x modulo T_{ν+m_j} is zero, ∀j.
            let mut constraint_rows: Vec<Vec<K>> = Vec::new();
            let mut stuck = false;
            for j in 0..weights.len() {
                let target = nu + weights[j];
                let m = mul_matrix(nu, j);
                if target > window_hi {
                    // Beyond the window: only H = 0 there keeps things decidable.
                    if m.rows() > 0 {
                        stuck = true;
                        break;
                    }
                    continue;
                }
                let tt = &t[&target];
                // Rows of the quotient-by-T_{target} projection composed with M_j.
                let proj_dim = m.rows() - tt.cols();
                if proj_dim == 0 {
                    continue; // target already all torsion: no constraint
                }
                let qcols: Vec<Vec<K>> =
                    (0..d).map(|col| quotient_coords(tt, &m.col(col))).collect();
                for row in 0..proj_dim {
                    constraint_rows.push(qcols.iter().map(|q| q[row].clone()).collect());
                }
            }
            if stuck {
                return Err(DualityError::WindowTooSmall { nu });
            }
            let new_t = if constraint_rows.is_empty() {
                Matrix::identity(d)
            } else {
                let cm = Matrix::from_rows(constraint_rows);
                let ns = cm.nullspace();
                if ns.is_empty() {
                    Matrix::zero(d, 0)
                } else {
                    Matrix::from_cols(ns)
                }
            };
            let (new_ech, _) = column_space_echelon(&new_t);
            if new_ech.cols() != t[&nu].cols() {
                changed = true;
            }
            t.insert(nu, new_ech);
        }
        if !changed {
            return Ok(t);
        }
    }
}

/// The contraction ω(u) = ⟨∇_{ν,δ−ν}, u⟩ as a chain of K_{r−n}(f; C)_ν.
pub fn omega_chain<K: Field>(
    cfg: &SystemConfig<K>,
    nabla: &Nabla<K>,
    nu: i64,
    u: &DualVector<K>,
) -> Result<Chain<K>, DualityError> {
    if nu < 0 || nu > cfg.delta {
        return Err(DualityError::DegreeOutOfRange { nu, delta: cfg.delta });
    }
    Ok(nabla.contract(cfg, nu, u))
}

/// Matrix of ω_ν over the dual basis of B_{δ−ν} (columns) and the
/// torsion basis of H_{r−n}(K)_ν (rows).
pub fn omega_matrix<K: Field>(
    cfg: &SystemConfig<K>,
    ctx: &KoszulContext<K>,
    nabla: &Nabla<K>,
    table: &HomologyTable<K>,
    nu: i64,
) -> Result<Matrix<K>, DualityError> {
    let duals = cfg.dual_basis(cfg.delta - nu);
    let entry = table.entries.get(&nu);
    let tdim = entry.map_or(0, |e| e.torsion.cols());
    let mut m = Matrix::zero(tdim, duals.len());
    for (col, u) in duals.iter().enumerate() {
        let chain = omega_chain(cfg, nabla, nu, u)?;
        let class = ctx.class_coords(&chain).expect("omega images are cycles");
        if class.iter().all(|c| c.is_zero()) {
            continue;
        }
        let e = entry.expect("nonzero class in an empty window entry");
        let coords = solve_in_span(&e.torsion, &class)
            .ok_or(DualityError::ImageNotTorsion { nu })?;
        for (row, v) in coords.into_iter().enumerate() {
            m[(row, col)] = v;
        }
    }
    Ok(m)
}

/// The multiplication pairing B_{δ−ν} × torsion(H)_ν → torsion(H)_δ
/// written against the degree-δ torsion line: entry (b, h) is the
/// coordinate of b·h on that line's basis vector.
pub fn pairing_matrix<K: Field>(
    cfg: &SystemConfig<K>,
    ctx: &KoszulContext<K>,
    table: &HomologyTable<K>,
    nu: i64,
) -> Result<Matrix<K>, DualityError> {
    let delta = cfg.delta;
    let line = table
        .entries
        .get(&delta)
        .map(|e| e.torsion.clone())
        .unwrap_or_else(|| Matrix::zero(0, 0));
    if line.cols() != 1 {
        return Err(DualityError::TorsionNotALine { dim: line.cols() });
    }
    let b_basis = cfg.b_piece(delta - nu).b_monomials.clone();
    let tors = table
        .entries
        .get(&nu)
        .map(|e| e.torsion.clone())
        .unwrap_or_else(|| Matrix::zero(0, 0));
    let hp = ctx.homology(ctx.r() - cfg.n(), nu);
    let mut m = Matrix::zero(b_basis.len(), tors.cols());
    for (row, b) in b_basis.iter().enumerate() {
        let b_poly = WPoly::monomial(&cfg.ring, b.clone(), K::one());
        for col in 0..tors.cols() {
            let class = tors.col(col);
            let rep_coords = hp.lifts.mul_vec(&class);
            let rep = ctx.chain_from_coords(hp.p, nu, &rep_coords);
            let shifted = rep.mul_poly(&b_poly);
            let img = ctx.class_coords(&shifted).expect("cycle times b is a cycle");
            let coords = solve_in_span(&line, &img)
                .ok_or(DualityError::ImageNotTorsion { nu: delta })?;
            m[(row, col)] = coords[0].clone();
        }
    }
    Ok(m)
}

/// ω intertwines the B̌ and homology module structures:
/// ω(b·u) = b·ω(u) as homology classes.
pub fn b_linearity_check<K: Field>(
    cfg: &SystemConfig<K>,
    ctx: &KoszulContext<K>,
    nabla: &Nabla<K>,
    b: &WPoly<K>,
    u: &DualVector<K>,
) -> bool {
    let s = if b.is_zero() {
        return true; // 0·u = 0 on both sides
    } else {
        b.homogeneous_degree().expect("homogeneous b")
    };
    let nu = cfg.delta - u.q;
    let Ok(bu) = cfg.dual_action(b, u) else {
        return true; // degree underflow: nothing to compare
    };
    let lhs_chain = omega_chain(cfg, nabla, nu + s, &bu).expect("degree stays in range");
    let lhs = ctx.class_coords(&lhs_chain).expect("cycle");
    let rhs_chain = omega_chain(cfg, nabla, nu, u)
        .expect("degree in range")
        .mul_poly(b);
    let rhs = ctx.class_coords(&rhs_chain).expect("cycle");
    lhs == rhs
}

/// Final verdict of a duality run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every degree checks out: ω is an isomorphism onto the torsion.
    Verified,
    /// The finiteness certificate failed; only dimensions are reported.
    NotCertified,
    /// A verification equality failed.
    Mismatch,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Verified => "DUALITY VERIFIED",
            Verdict::NotCertified => "hypothesis depth_I(C)=n not certified",
            Verdict::Mismatch => "DUALITY MISMATCH",
        }
    }
}

/// One row of the per-degree table. Torsion/ω/pairing columns are
/// `None` when the certificate failed (dimensions-only mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuRow {
    pub nu: i64,
    pub dim_b_dual: usize,
    pub dim_h: usize,
    pub dim_torsion: Option<usize>,
    pub rank_omega: Option<usize>,
    pub pairing_rank: Option<usize>,
    pub ok: bool,
}

/// Everything `check_duality` established, rendered field-free so the
/// CLI can format it as text or JSON.
pub struct DualityReport {
    pub field_name: String,
    pub weights: Vec<i64>,
    pub var_names: Vec<String>,
    pub polys: Vec<String>,
    pub degrees: Vec<i64>,
    pub delta: i64,
    pub certificate: CertificateStatus,
    /// dim B_q for q = 0..=window_hi.
    pub hilbert: Vec<usize>,
    pub delta_lines: Vec<String>,
    pub lambda_lines: Vec<String>,
    pub dp_ok: Vec<bool>,
    pub wiebe_ok: bool,
    pub nabla_top_is_lambda: bool,
    /// Fixpoint torsion equals the certified short-circuit (certified runs).
    pub fixpoint_agrees: Option<bool>,
    /// ω_δ maps the dual of 1 to the class of Λ.
    pub unit_maps_to_lambda: Option<bool>,
    pub rows: Vec<NuRow>,
    pub slack: i64,
    pub search_bound: i64,
    pub window_hi: i64,
    pub verdict: Verdict,
    pub failures: Vec<String>,
}

/// Run the whole verification pipeline on one system.
pub fn check_duality<K: Field>(cfg: &SystemConfig<K>, opts: CheckOptions) -> DualityReport {
    let slack = opts.slack.unwrap_or_else(|| cfg.default_slack());
    let search_bound = opts.search_bound.unwrap_or_else(|| cfg.default_search_bound());
    let delta = cfg.delta;
    let window_hi = delta.max(0) + slack.max(1);
    let p = cfg.r() - cfg.n();

    let certificate = cfg.finiteness_certificate(search_bound);
    let hilbert = cfg.hilbert(window_hi);
    let ctx = cfg.koszul();
    let md = MorleyData::build(cfg, &ctx);
    let canonical = RingDescriptor::canonical_x(cfg.ring.weights.clone());
    let lambda_lines = chain_with_ring(&md.lambda_chain, &canonical).render_lines();

    let mut failures = Vec::new();
    for (j, ok) in md.dp_ok.iter().enumerate() {
        if !ok {
            failures.push(format!(
                "(X_{0} - Y_{0})·Δ is not a boundary of the difference complex",
                j + 1
            ));
        }
    }
    if !md.wiebe_ok {
        failures.push("forward and reverse Morley forms differ by a non-boundary".into());
    }
    if !md.nabla_top_is_lambda {
        failures.push("the top component of the reduction does not equal Λ".into());
    }

    // Homology dimensions over the window.
    let mut entries = BTreeMap::new();
    for nu in 0..=window_hi {
        let piece = ctx.homology(p, nu);
        entries.insert(nu, piece);
    }

    let mut rows = Vec::new();
    let mut fixpoint_agrees = None;
    let mut unit_maps_to_lambda = None;
    let verdict;

    if !certificate.is_certified() {
        for nu in 0..=window_hi {
            rows.push(NuRow {
                nu,
                dim_b_dual: cfg.b_dim(delta - nu),
                dim_h: entries[&nu].dim(),
                dim_torsion: None,
                rank_omega: None,
                pairing_rank: None,
                ok: false,
            });
        }
        failures.push(format!(
            "no vanishing window of width {} found up to degree {}",
            cfg.max_weight(),
            search_bound
        ));
        verdict = Verdict::NotCertified;
        return DualityReport {
            field_name: K::field_name(&cfg.field_cfg),
            weights: cfg.ring.weights.clone(),
            var_names: cfg.ring.names.clone(),
            polys: cfg.polys.iter().map(|f| f.to_string()).collect(),
            degrees: cfg.degrees.clone(),
            delta,
            certificate,
            hilbert,
            delta_lines: md.delta_chain.render_lines(),
            lambda_lines,
            dp_ok: md.dp_ok,
            wiebe_ok: md.wiebe_ok,
            nabla_top_is_lambda: md.nabla_top_is_lambda,
            fixpoint_agrees,
            unit_maps_to_lambda,
            rows,
            slack,
            search_bound,
            window_hi,
            verdict,
            failures,
        };
    }

    // Certified: every class of H_{r−n} is m-torsion (H_{r−n} is a
    // finitely generated module over the artinian B), so the torsion
    // is all of H — provided H really vanishes along the top strip,
    // which the verdict checks below.
    let mut table = HomologyTable {
        p,
        window_hi,
        entries: BTreeMap::new(),
    };
    for nu in 0..=window_hi {
        let piece = entries[&nu].clone();
        let torsion = Matrix::identity(piece.dim());
        table.entries.insert(nu, TableEntry { piece, torsion });
    }

    // Cross-check against the fixpoint computation.
    match torsion_fixpoint(&ctx, p, window_hi, &cfg.ring.weights) {
        Ok(fp) => {
            let agree = (0..=window_hi).all(|nu| fp[&nu].cols() == table.dim_torsion(nu));
            if !agree {
                failures.push("fixpoint torsion disagrees with the certified short-circuit".into());
            }
            fixpoint_agrees = Some(agree);
        }
        Err(e) => {
            failures.push(format!("torsion fixpoint inconclusive: {e}"));
            fixpoint_agrees = Some(false);
        }
    }

    // ω_δ must send the dual of 1 to the class of Λ.
    if delta >= 0 && cfg.b_dim(0) == 1 {
        let mut coords = vec![K::zero(); 1];
        coords[0] = K::one();
        let u = DualVector { q: 0, coords };
        let img = omega_chain(cfg, &md.nabla, delta, &u).expect("delta in range");
        let lambda_class = ctx.class_coords(&md.lambda_chain).expect("lambda is a cycle");
        let img_class = ctx.class_coords(&img).expect("omega image is a cycle");
        let ok = img_class == lambda_class;
        if !ok {
            failures.push("ω_δ does not send the dual of 1 to the class of Λ".into());
        }
        unit_maps_to_lambda = Some(ok);
    }

    for nu in 0..=window_hi {
        let dim_b_dual = cfg.b_dim(delta - nu);
        let dim_h = table.dim_h(nu);
        let dim_torsion = table.dim_torsion(nu);
        if nu > delta {
            // Above δ both sides must vanish.
            let ok = dim_torsion == 0 && dim_b_dual == 0;
            if !ok {
                failures.push(format!("torsion does not vanish at degree {nu} > δ"));
            }
            rows.push(NuRow {
                nu,
                dim_b_dual,
                dim_h,
                dim_torsion: Some(dim_torsion),
                rank_omega: None,
                pairing_rank: None,
                ok,
            });
            continue;
        }
        let rank_omega = match omega_matrix(cfg, &ctx, &md.nabla, &table, nu) {
            Ok(m) => m.rank(),
            Err(e) => {
                failures.push(format!("ω at degree {nu}: {e}"));
                rows.push(NuRow {
                    nu,
                    dim_b_dual,
                    dim_h,
                    dim_torsion: Some(dim_torsion),
                    rank_omega: None,
                    pairing_rank: None,
                    ok: false,
                });
                continue;
            }
        };
        let pairing_rank = match pairing_matrix(cfg, &ctx, &table, nu) {
            Ok(m) => Some(m.rank()),
            Err(e) => {
                failures.push(format!("pairing at degree {nu}: {e}"));
                None
            }
        };
        let ok = rank_omega == dim_b_dual
            && dim_torsion == dim_b_dual
            && pairing_rank == Some(dim_b_dual);
        if !ok && pairing_rank.is_some() {
            failures.push(format!(
                "degree {nu}: rank ω = {rank_omega}, dim torsion = {dim_torsion}, dim B̌ = {dim_b_dual}, pairing rank = {}",
                pairing_rank.unwrap()
            ));
        }
        rows.push(NuRow {
            nu,
            dim_b_dual,
            dim_h,
            dim_torsion: Some(dim_torsion),
            rank_omega: Some(rank_omega),
            pairing_rank,
            ok,
        });
    }

    let all_ok = rows.iter().all(|r| r.ok)
        && md.dp_ok.iter().all(|&b| b)
        && md.wiebe_ok
        && md.nabla_top_is_lambda
        && fixpoint_agrees != Some(false)
        && unit_maps_to_lambda != Some(false);
    verdict = if all_ok { Verdict::Verified } else { Verdict::Mismatch };

    DualityReport {
        field_name: K::field_name(&cfg.field_cfg),
        weights: cfg.ring.weights.clone(),
        var_names: cfg.ring.names.clone(),
        polys: cfg.polys.iter().map(|f| f.to_string()).collect(),
        degrees: cfg.degrees.clone(),
        delta,
        certificate,
        hilbert,
        delta_lines: md.delta_chain.render_lines(),
        lambda_lines,
        dp_ok: md.dp_ok,
        wiebe_ok: md.wiebe_ok,
        nabla_top_is_lambda: md.nabla_top_is_lambda,
        fixpoint_agrees,
        unit_maps_to_lambda,
        rows,
        slack,
        search_bound,
        window_hi,
        verdict,
        failures,
    }
}

/// A chain with its polynomial coefficients renamed into `target`
/// (used to render user-ring chains with canonical X names).
pub fn chain_with_ring<K: Field>(c: &Chain<K>, target: &Arc<RingDescriptor>) -> Chain<K> {
    let mut out = Chain::zero(c.p, c.nu);
    for (j, poly) in &c.coeffs {
        out.add_term(j.clone(), poly.with_ring(target));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::scalar::{rat, Rat};
    use num_traits::Zero;

    fn system(weights: Vec<i64>, vars: &[&str], polys: &[&str]) -> SystemConfig<Rat> {
        let ring = RingDescriptor::x_ring(weights, vars.iter().map(|s| s.to_string()).collect());
        let fs = polys.iter().map(|s| parse(s, &ring, &()).unwrap()).collect();
        SystemConfig::new(ring, (), fs).unwrap()
    }

    fn e3() -> SystemConfig<Rat> {
        system(vec![1], &["x"], &["x^2"])
    }

    fn e1() -> SystemConfig<Rat> {
        system(vec![1], &["x"], &["x^2", "x^3"])
    }

    fn e2() -> SystemConfig<Rat> {
        system(vec![1, 1], &["x1", "x2"], &["x1^2", "x2^2"])
    }

    #[test]
    fn verified_worked_examples() {
        for s in [e3(), e1(), e2()] {
            let report = check_duality(&s, CheckOptions::default());
            assert_eq!(report.verdict, Verdict::Verified, "failures: {:?}", report.failures);
            assert!(report.failures.is_empty());
            assert_eq!(report.fixpoint_agrees, Some(true));
            assert_eq!(report.unit_maps_to_lambda, Some(true));
        }
    }

    #[test]
    fn e1_table_dimensions() {
        let s = e1();
        let report = check_duality(&s, CheckOptions::default());
        let row = |nu: i64| report.rows.iter().find(|r| r.nu == nu).unwrap().clone();
        for nu in [3, 4] {
            let r = row(nu);
            assert_eq!(r.dim_b_dual, 1);
            assert_eq!(r.dim_torsion, Some(1));
            assert_eq!(r.rank_omega, Some(1));
            assert_eq!(r.pairing_rank, Some(1));
            assert!(r.ok);
        }
        for nu in [0, 1, 2] {
            let r = row(nu);
            assert_eq!(r.dim_b_dual, 0);
            assert_eq!(r.dim_torsion, Some(0));
            assert!(r.ok);
        }
        // Above δ everything vanishes.
        for nu in 5..=report.window_hi {
            assert_eq!(row(nu).dim_torsion, Some(0));
        }
    }

    #[test]
    fn e2_table_dimensions() {
        let report = check_duality(&e2(), CheckOptions::default());
        let dims: Vec<usize> = (0..=2)
            .map(|nu| report.rows[nu as usize].dim_b_dual)
            .collect();
        assert_eq!(dims, vec![1, 2, 1]);
        for nu in 0..=2usize {
            let r = &report.rows[nu];
            assert_eq!(r.rank_omega, Some(r.dim_b_dual));
            assert_eq!(r.dim_torsion, Some(r.dim_b_dual));
            assert_eq!(r.pairing_rank, Some(r.dim_b_dual));
        }
    }

    #[test]
    fn not_certified_report() {
        let s = system(vec![1, 1], &["x1", "x2"], &["x1^2", "x1*x2"]);
        let report = check_duality(&s, CheckOptions::default());
        assert_eq!(report.verdict, Verdict::NotCertified);
        assert!(report.rows.iter().all(|r| r.dim_torsion.is_none()));
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn torsion_examples() {
        let s = e1();
        let ctx = s.koszul();
        let t = torsion_fixpoint(&ctx, 1, s.delta + s.default_slack(), &s.ring.weights).unwrap();
        assert_eq!(t[&3].cols(), 1);
        assert_eq!(t[&5].cols(), 0);
        let s3 = e3();
        let ctx3 = s3.koszul();
        let t3 = torsion_fixpoint(&ctx3, 0, s3.delta + s3.default_slack(), &s3.ring.weights).unwrap();
        assert_eq!(t3[&0].cols(), 1);
        assert_eq!(t3[&1].cols(), 1);
        assert_eq!(t3[&2].cols(), 0);
    }

    #[test]
    fn omega_chain_examples() {
        let s = e1();
        let ctx = s.koszul();
        let md = MorleyData::build(&s, &ctx);
        // u = dual of 1 at ν = 4 gives Λ itself.
        let u0 = DualVector { q: 0, coords: vec![rat(1)] };
        let w4 = omega_chain(&s, &md.nabla, 4, &u0).unwrap();
        assert_eq!(w4, md.lambda_chain);
        // u = dual of x̄ at ν = 3 gives e_2 − X e_1.
        let u1 = DualVector { q: 1, coords: vec![rat(1)] };
        let w3 = omega_chain(&s, &md.nabla, 3, &u1).unwrap();
        assert_eq!(w3.render_lines(), vec!["(-1)·(x)·e{1}", "(+1)·(1)·e{2}"]);
        // Degree range is enforced.
        assert!(matches!(
            omega_chain(&s, &md.nabla, 5, &u0),
            Err(DualityError::DegreeOutOfRange { .. })
        ));
        // Zero dual vector gives the zero chain.
        let z = DualVector { q: 0, coords: vec![rat(0)] };
        assert!(omega_chain(&s, &md.nabla, 4, &z).unwrap().is_zero());
    }

    #[test]
    fn b_linearity_examples() {
        let s = e1();
        let ctx = s.koszul();
        let md = MorleyData::build(&s, &ctx);
        let x = parse::<Rat>("x", &s.ring, &()).unwrap();
        let u = DualVector { q: 1, coords: vec![rat(1)] };
        assert!(b_linearity_check(&s, &ctx, &md.nabla, &x, &u));
        let one = WPoly::one(&s.ring);
        assert!(b_linearity_check(&s, &ctx, &md.nabla, &one, &u));

        let s2 = e2();
        let ctx2 = s2.koszul();
        let md2 = MorleyData::build(&s2, &ctx2);
        for expr in ["x1", "x2", "x1 + 2*x2"] {
            let b = parse::<Rat>(expr, &s2.ring, &()).unwrap();
            for q in 0..=2 {
                for u in s2.dual_basis(q) {
                    assert!(b_linearity_check(&s2, &ctx2, &md2.nabla, &b, &u), "b = {expr}, q = {q}");
                }
            }
        }
    }

    #[test]
    fn image_torsion_bound() {
        // For u ∈ B̌_{δ−ν}, multiplying ω(u)'s class by a monomial of
        // degree > δ − ν kills it.
        let s = e2();
        let ctx = s.koszul();
        let md = MorleyData::build(&s, &ctx);
        let nu = 1;
        for u in s.dual_basis(s.delta - nu) {
            let w = omega_chain(&s, &md.nabla, nu, &u).unwrap();
            let class = ctx.class_coords(&w).unwrap();
            // degree δ − ν + 1 = 2 products vanish
            let mut cur = vec![class];
            for step in 0..2 {
                let mut next = Vec::new();
                for c in &cur {
                    for j in 0..2 {
                        next.push(ctx.multiply_class(0, nu + step, c, j));
                    }
                }
                cur = next;
            }
            for c in &cur {
                assert!(c.iter().all(|v| v.is_zero()));
            }
        }
    }
}
