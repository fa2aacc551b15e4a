//! Graded pieces of the Koszul complex K_•(h_1..h_r; R), its
//! differential, and exact homology with deterministic class
//! coordinates, boundary tests, and the multiplication action on
//! homology.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;


use crate::matrix::{column_space_echelon, quotient_coords, solve_in_span, Matrix};
use crate::poly::WPoly;
use crate::ring::{monomials_of_wdeg, Monomial, RingDescriptor};
use crate::scalar::Field;

/// Errors from chain-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KoszulError {
    /// The chain's differential is nonzero (rendered).
    NotACycle { boundary: String },
}

impl fmt::Display for KoszulError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KoszulError::NotACycle { boundary } => {
                write!(f, "chain is not a cycle: d(c) = {boundary}")
            }
        }
    }
}

impl std::error::Error for KoszulError {}

/// Basis index e_J of the exterior algebra: a sorted subset of the
/// generator positions 0..r (rendered 1-based). `Ord` is lex on the
/// sorted element lists, the crate-wide wedge order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WedgeIndex {
    pub subset: Vec<usize>,
}

impl WedgeIndex {
    pub fn new(mut subset: Vec<usize>) -> Self {
        subset.sort_unstable();
        subset.windows(2).for_each(|w| assert!(w[0] != w[1], "repeated wedge factor"));
        WedgeIndex { subset }
    }

    pub fn empty() -> Self {
        WedgeIndex { subset: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.subset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subset.is_empty()
    }

    /// Degree shift D_J = Σ_{j∈J} d_j.
    pub fn shift(&self, degrees: &[i64]) -> i64 {
        self.subset.iter().map(|&j| degrees[j]).sum()
    }

    /// J with the l-th element (0-based position) removed.
    pub fn without_position(&self, l: usize) -> WedgeIndex {
        let mut subset = self.subset.clone();
        subset.remove(l);
        WedgeIndex { subset }
    }

    /// Render 1-based: `e{}`, `e{1,3}`.
    pub fn render(&self) -> String {
        let inner: Vec<String> = self.subset.iter().map(|j| (j + 1).to_string()).collect();
        format!("e{{{}}}", inner.join(","))
    }
}

/// All p-subsets of {0..r−1} in lexicographic order.
pub fn wedge_basis(r: usize, p: usize) -> Vec<WedgeIndex> {
    assert!(p <= r, "wedge degree out of range");
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(r: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<WedgeIndex>) {
        if cur.len() == p {
            out.push(WedgeIndex { subset: cur.clone() });
            return;
        }
        let need = p - cur.len();
        for j in start..=(r - need) {
            cur.push(j);
            rec(r, p, j + 1, cur, out);
            cur.pop();
        }
    }
    rec(r, p, 0, &mut cur, &mut out);
    out
}

/// Element of (K_p)_ν: polynomial coefficients on wedge basis vectors.
/// Coefficients are nonzero and homogeneous of degree ν − D_J.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain<K: Field> {
    pub p: usize,
    pub nu: i64,
    pub coeffs: BTreeMap<WedgeIndex, WPoly<K>>,
}

impl<K: Field> Chain<K> {
    pub fn zero(p: usize, nu: i64) -> Self {
        Chain {
            p,
            nu,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn term(p: usize, nu: i64, j: WedgeIndex, poly: WPoly<K>) -> Self {
        let mut c = Self::zero(p, nu);
        c.add_term(j, poly);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, j: WedgeIndex, poly: WPoly<K>) {
        assert_eq!(j.len(), self.p, "wedge degree mismatch");
        if poly.is_zero() {
            return;
        }
        match self.coeffs.remove(&j) {
            None => {
                self.coeffs.insert(j, poly);
            }
            Some(old) => {
                let s = old.add(&poly);
                if !s.is_zero() {
                    self.coeffs.insert(j, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.p, self.nu), (other.p, other.nu), "graded piece mismatch");
        let mut out = self.clone();
        for (j, poly) in &other.coeffs {
            out.add_term(j.clone(), poly.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for poly in out.coeffs.values_mut() {
            *poly = poly.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero(self.p, self.nu);
        for (j, poly) in &self.coeffs {
            out.add_term(j.clone(), poly.scale(k));
        }
        out
    }

    /// Multiply every coefficient by a homogeneous polynomial; the
    /// internal degree rises by its degree.
    pub fn mul_poly(&self, g: &WPoly<K>) -> Self {
        if g.is_zero() {
            return Self::zero(self.p, self.nu);
        }
        let e = g.homogeneous_degree().expect("homogeneous multiplier");
        let mut out = Self::zero(self.p, self.nu + e);
        for (j, poly) in &self.coeffs {
            out.add_term(j.clone(), poly.mul(g));
        }
        out
    }

    /// One line per wedge term, ascending wedge order:
    /// `(+1)·(X + Y)·e{}` — the sign of the leading coefficient is
    /// factored out, the body keeps its magnitudes. A zero chain
    /// renders as the single line `0`.
    pub fn render_lines(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs
            .iter()
            .map(|(j, poly)| {
                let (neg, body) = poly.display_sign_split();
                let sign = if neg { '-' } else { '+' };
                format!("({sign}1)·({body})·{}", j.render())
            })
            .collect()
    }
}

/// Ordered basis of a graded piece (K_p)_ν: pairs (J, monomial),
/// wedge-lex major, monomial-lex minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub entries: Vec<(WedgeIndex, Monomial)>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn position(&self, j: &WedgeIndex, m: &Monomial) -> Option<usize> {
        self.entries
            .binary_search_by(|(bj, bm)| (bj, bm).cmp(&(j, m)))
            .ok()
    }
}

/// A Koszul complex K_•(h_1..h_r; R) evaluated lazily one graded piece
/// at a time, with memoized differential matrices and homology.
pub struct KoszulContext<K: Field> {
    pub ring: Arc<RingDescriptor>,
    pub sequence: Vec<WPoly<K>>,
    pub degrees: Vec<i64>,
    diff_memo: RefCell<BTreeMap<(usize, i64), Arc<Matrix<K>>>>,
    hom_memo: RefCell<BTreeMap<(usize, i64), Arc<HomologyPiece<K>>>>,
}

impl<K: Field> KoszulContext<K> {
    pub fn new(ring: Arc<RingDescriptor>, sequence: Vec<WPoly<K>>) -> Self {
        assert!(!sequence.is_empty(), "empty sequence");
        let degrees = sequence
            .iter()
            .map(|h| {
                assert_eq!(*h.ring, *ring, "sequence entry in the wrong ring");
                let d = h
                    .homogeneous_degree()
                    .expect("sequence entries must be nonzero and homogeneous");
                assert!(d > 0, "sequence entries must have positive degree");
                d
            })
            .collect();
        KoszulContext {
            ring,
            sequence,
            degrees,
            diff_memo: RefCell::new(BTreeMap::new()),
            hom_memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn r(&self) -> usize {
        self.sequence.len()
    }

    /// Ordered ambient basis of (K_p)_ν.
    pub fn graded_basis(&self, p: usize, nu: i64) -> GradedBasis {
        let mut entries = Vec::new();
        for j in wedge_basis(self.r(), p) {
            let d = j.shift(&self.degrees);
            for m in monomials_of_wdeg(&self.ring, nu - d) {
                entries.push((j.clone(), m));
            }
        }
        GradedBasis { entries }
    }

    /// d(e_J) = Σ_l (−1)^{l−1} h_{j_l} e_{J∖{j_l}}, extended bilinearly.
    pub fn differential(&self, c: &Chain<K>) -> Chain<K> {
        assert!(c.p >= 1, "differential needs p ≥ 1");
        let mut out = Chain::zero(c.p - 1, c.nu);
        for (j, poly) in &c.coeffs {
            for (l, &jl) in j.subset.iter().enumerate() {
                let h = &self.sequence[jl];
                let signed = if l % 2 == 0 { poly.mul(h) } else { poly.mul(h).neg() };
                out.add_term(j.without_position(l), signed);
            }
        }
        out
    }

    /// Matrix of d: (K_p)_ν → (K_{p−1})_ν over the ambient bases.
    /// For p = 0 this is the zero map out of (K_0)_ν (no rows).
    pub fn differential_matrix(&self, p: usize, nu: i64) -> Arc<Matrix<K>> {
        if let Some(m) = self.diff_memo.borrow().get(&(p, nu)) {
            return m.clone();
        }
        let src = self.graded_basis(p, nu);
        let mat = if p == 0 {
            Matrix::zero(0, src.dim())
        } else {
            let dst = self.graded_basis(p - 1, nu);
            let mut mat = Matrix::zero(dst.dim(), src.dim());
            for (col, (j, m)) in src.entries.iter().enumerate() {
                let gen = Chain::term(
                    p,
                    nu,
                    j.clone(),
                    WPoly::monomial(&self.ring, m.clone(), K::one()),
                );
                let image = self.differential(&gen);
                for (ij, poly) in &image.coeffs {
                    for (im, c) in &poly.terms {
                        let row = dst
                            .position(ij, im)
                            .expect("differential image outside graded basis");
                        mat[(row, col)] = c.clone();
                    }
                }
            }
            mat
        };
        let arc = Arc::new(mat);
        self.diff_memo.borrow_mut().insert((p, nu), arc.clone());
        arc
    }

    /// Coordinates of a chain over the ambient basis of its piece.
    pub fn chain_coords(&self, c: &Chain<K>) -> Vec<K> {
        let basis = self.graded_basis(c.p, c.nu);
        let mut v = vec![K::zero(); basis.dim()];
        for (j, poly) in &c.coeffs {
            for (m, coeff) in &poly.terms {
                let pos = basis
                    .position(j, m)
                    .expect("chain term outside its graded piece");
                v[pos] = coeff.clone();
            }
        }
        v
    }

    pub fn chain_from_coords(&self, p: usize, nu: i64, v: &[K]) -> Chain<K> {
        let basis = self.graded_basis(p, nu);
        assert_eq!(v.len(), basis.dim(), "coordinate length mismatch");
        let mut out = Chain::zero(p, nu);
        for ((j, m), c) in basis.entries.iter().zip(v) {
            if !c.is_zero() {
                out.add_term(j.clone(), WPoly::monomial(&self.ring, m.clone(), c.clone()));
            }
        }
        out
    }

    /// Homology of the graded piece: cycles, boundaries, dimension, and
    /// a deterministic coordinate map on classes.
    pub fn homology(&self, p: usize, nu: i64) -> Arc<HomologyPiece<K>> {
        if let Some(h) = self.hom_memo.borrow().get(&(p, nu)) {
            return h.clone();
        }
        let ambient = self.graded_basis(p, nu);
        let d_out = self.differential_matrix(p, nu);
        let ns = d_out.nullspace();
        let cycles = if ns.is_empty() {
            Matrix::zero(ambient.dim(), 0)
        } else {
            Matrix::from_cols(ns)
        };
        let d_in = if p + 1 <= self.r() {
            self.differential_matrix(p + 1, nu)
        } else {
            Arc::new(Matrix::zero(ambient.dim(), 0))
        };
        let (boundary_ech, boundary_pivot_rows) = column_space_echelon(&d_in);
        // Coordinates of each cycle basis vector in ambient/boundaries.
        let qdim = ambient.dim() - boundary_pivot_rows.len();
        let mut qcols = Vec::with_capacity(cycles.cols());
        for i in 0..cycles.cols() {
            qcols.push(quotient_coords(&d_in, &cycles.col(i)));
        }
        let cycle_quotient = if qcols.is_empty() {
            Matrix::zero(qdim, 0)
        } else {
            Matrix::from_cols(qcols)
        };
        let (class_basis, _) = column_space_echelon(&cycle_quotient);
        // A cycle representative for each class basis vector.
        let mut lift_cols = Vec::with_capacity(class_basis.cols());
        for k in 0..class_basis.cols() {
            let y = solve_in_span(&cycle_quotient, &class_basis.col(k))
                .expect("class basis lies in the cycle image");
            lift_cols.push(cycles.mul_vec(&y));
        }
        let lifts = if lift_cols.is_empty() {
            Matrix::zero(ambient.dim(), 0)
        } else {
            Matrix::from_cols(lift_cols)
        };
        let piece = Arc::new(HomologyPiece {
            p,
            nu,
            ambient,
            cycles,
            boundaries: d_in,
            boundary_ech,
            boundary_pivot_rows,
            class_basis,
            lifts,
        });
        self.hom_memo.borrow_mut().insert((p, nu), piece.clone());
        piece
    }

    /// Coordinates of the homology class of a cycle; boundaries map to
    /// zero. Errors when the chain is not a cycle.
    pub fn class_coords(&self, c: &Chain<K>) -> Result<Vec<K>, KoszulError> {
        self.check_cycle(c)?;
        let hp = self.homology(c.p, c.nu);
        let qc = quotient_coords(&hp.boundaries, &self.chain_coords(c));
        Ok(solve_in_span(&hp.class_basis, &qc).expect("cycle class lies in the homology span"))
    }

    fn check_cycle(&self, c: &Chain<K>) -> Result<(), KoszulError> {
        if c.p == 0 {
            return Ok(()); // every 0-chain is a cycle
        }
        let d = self.differential(c);
        if d.is_zero() {
            Ok(())
        } else {
            Err(KoszulError::NotACycle {
                boundary: d.render_lines().join("  "),
            })
        }
    }

    /// Whether a cycle is a boundary; `Some(witness)` gives a chain at
    /// p+1 with d(witness) = c.
    pub fn boundary_preimage(&self, c: &Chain<K>) -> Result<Option<Chain<K>>, KoszulError> {
        self.check_cycle(c)?;
        let hp = self.homology(c.p, c.nu);
        match solve_in_span(&hp.boundaries, &self.chain_coords(c)) {
            None => Ok(None),
            Some(y) => Ok(Some(self.chain_from_coords(c.p + 1, c.nu, &y))),
        }
    }

    pub fn is_boundary(&self, c: &Chain<K>) -> Result<bool, KoszulError> {
        Ok(self.boundary_preimage(c)?.is_some())
    }

    /// Act on a homology class by the variable X_j (0-based): lift to a
    /// cycle representative, multiply, reduce at ν + m_j. Independent of
    /// the chosen representative.
    pub fn multiply_class(&self, p: usize, nu: i64, coords: &[K], j: usize) -> Vec<K> {
        let hp = self.homology(p, nu);
        assert_eq!(coords.len(), hp.dim(), "class coordinate length mismatch");
        let rep_coords = hp.lifts.mul_vec(coords);
        let rep = self.chain_from_coords(p, nu, &rep_coords);
        let xj = WPoly::var(&self.ring, j);
        let shifted = rep.mul_poly(&xj);
        self.class_coords(&shifted).expect("cycle stays a cycle under multiplication")
    }
}

/// Exact homology data of one graded piece (K_p)_ν.
pub struct HomologyPiece<K: Field> {
    pub p: usize,
    pub nu: i64,
    /// Ambient basis of (K_p)_ν.
    pub ambient: GradedBasis,
    /// Columns: canonical nullspace basis of d_p (the cycles Z).
    pub cycles: Matrix<K>,
    /// The raw matrix of d_{p+1} whose column span is the boundaries.
    pub boundaries: Arc<Matrix<K>>,
    /// Echelonized boundary basis and its pivot rows.
    pub boundary_ech: Matrix<K>,
    pub boundary_pivot_rows: Vec<usize>,
    /// Echelonized basis of the class coordinates (the quotient Z/B
    /// written in ambient-mod-boundary coordinates).
    pub class_basis: Matrix<K>,
    /// Columns: an ambient-coordinate cycle representative per class
    /// basis vector.
    pub lifts: Matrix<K>,
}

impl<K: Field> HomologyPiece<K> {
    pub fn dim(&self) -> usize {
        self.class_basis.cols()
    }

    pub fn cycle_dim(&self) -> usize {
        self.cycles.cols()
    }

    pub fn boundary_dim(&self) -> usize {
        self.boundary_pivot_rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::scalar::{rat, Rat};
    use num_traits::Zero;

    fn ctx_e3() -> KoszulContext<Rat> {
        let ring = RingDescriptor::x_ring(vec![1], vec!["x".into()]);
        let f = parse("x^2", &ring, &()).unwrap();
        KoszulContext::new(ring, vec![f])
    }

    fn ctx_e1() -> KoszulContext<Rat> {
        let ring = RingDescriptor::x_ring(vec![1], vec!["x".into()]);
        let f2 = parse("x^2", &ring, &()).unwrap();
        let f3 = parse("x^3", &ring, &()).unwrap();
        KoszulContext::new(ring, vec![f2, f3])
    }

    #[test]
    fn wedge_basis_orders() {
        let names = |v: Vec<WedgeIndex>| -> Vec<Vec<usize>> {
            v.into_iter().map(|w| w.subset).collect()
        };
        assert_eq!(names(wedge_basis(2, 1)), vec![vec![0], vec![1]]);
        assert_eq!(
            names(wedge_basis(3, 2)),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(names(wedge_basis(2, 0)), vec![Vec::<usize>::new()]);
        assert_eq!(wedge_basis(4, 2).len(), 6);
    }

    #[test]
    fn differential_of_generators() {
        let ctx = ctx_e1();
        let one = WPoly::one(&ctx.ring);
        // d(e_1) = h_1
        let c = Chain::term(1, 2, WedgeIndex::new(vec![0]), one.clone());
        let d = ctx.differential(&c);
        assert_eq!(d.coeffs[&WedgeIndex::empty()], ctx.sequence[0]);
        // d(e_1∧e_2) = h_1 e_2 − h_2 e_1
        let c12 = Chain::term(2, 5, WedgeIndex::new(vec![0, 1]), one);
        let d12 = ctx.differential(&c12);
        assert_eq!(d12.coeffs[&WedgeIndex::new(vec![1])], ctx.sequence[0]);
        assert_eq!(d12.coeffs[&WedgeIndex::new(vec![0])], ctx.sequence[1].neg());
    }

    #[test]
    fn differential_squares_to_zero() {
        let ring = RingDescriptor::x_ring(vec![1], vec!["x".into()]);
        let seq: Vec<WPoly<Rat>> = ["x^2", "x^3", "x^4"]
            .iter()
            .map(|s| parse(s, &ring, &()).unwrap())
            .collect();
        let ctx = KoszulContext::new(ring.clone(), seq);
        let c = Chain::term(3, 9, WedgeIndex::new(vec![0, 1, 2]), WPoly::one(&ring));
        let dd = ctx.differential(&ctx.differential(&c));
        assert!(dd.is_zero());
        // and as matrices on a window of degrees
        for nu in 0..=8 {
            for p in 1..=2 {
                let a = ctx.differential_matrix(p, nu);
                let b = ctx.differential_matrix(p + 1, nu);
                let prod = a.matmul(&b);
                for i in 0..prod.rows() {
                    for j in 0..prod.cols() {
                        assert!(prod[(i, j)].is_zero(), "d∘d ≠ 0 at p={p} ν={nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn differential_matrix_single_generator() {
        let ctx = ctx_e3();
        let m = ctx.differential_matrix(1, 2);
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(m[(0, 0)], rat(1));
        // Degree below every shift: zero columns.
        let empty = ctx.differential_matrix(1, 1);
        assert_eq!(empty.cols(), 0);
    }

    #[test]
    fn graded_dimension_formula() {
        let ctx = ctx_e1();
        for nu in 0..=8 {
            for p in 0..=2 {
                let dim = ctx.graded_basis(p, nu).dim();
                let expect: usize = wedge_basis(2, p)
                    .iter()
                    .map(|j| monomials_of_wdeg(&ctx.ring, nu - j.shift(&ctx.degrees)).len())
                    .sum();
                assert_eq!(dim, expect);
            }
        }
    }

    #[test]
    fn homology_dimensions_one_variable() {
        // H_0(K)_ν = B_ν for f = x²: dims 1,1,0,…
        let ctx = ctx_e3();
        assert_eq!(ctx.homology(0, 0).dim(), 1);
        assert_eq!(ctx.homology(0, 1).dim(), 1);
        assert_eq!(ctx.homology(0, 2).dim(), 0);
        // H_1 for (x², x³): dimension 1 in degrees 3 and 4, else 0.
        let ctx = ctx_e1();
        let dims: Vec<usize> = (0..=8).map(|nu| ctx.homology(1, nu).dim()).collect();
        assert_eq!(dims, vec![0, 0, 0, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn class_coords_and_boundaries() {
        let ctx = ctx_e1();
        let x = WPoly::<Rat>::var(&ctx.ring, 0);
        // Syzygy cycle −x·e_1 + e_2 generates H_1 in degree 3.
        let mut syz = Chain::zero(1, 3);
        syz.add_term(WedgeIndex::new(vec![0]), x.neg());
        syz.add_term(WedgeIndex::new(vec![1]), WPoly::one(&ctx.ring));
        let coords = ctx.class_coords(&syz).unwrap();
        assert_eq!(coords.len(), 1);
        assert!(!coords[0].is_zero());
        assert!(!ctx.is_boundary(&syz).unwrap());
        // x²·e_2 − x³·e_1 = d(e_1∧e_2) is a boundary with that witness.
        let mut bnd = Chain::zero(1, 5);
        bnd.add_term(WedgeIndex::new(vec![1]), x.pow(2));
        bnd.add_term(WedgeIndex::new(vec![0]), x.pow(3).neg());
        assert_eq!(ctx.class_coords(&bnd).unwrap(), Vec::<Rat>::new());
        let witness = ctx.boundary_preimage(&bnd).unwrap().unwrap();
        assert_eq!(ctx.differential(&witness), bnd);
        // Zero chain: boundary, zero coordinates.
        let zero = Chain::zero(1, 3);
        assert!(ctx.is_boundary(&zero).unwrap());
        // Non-cycle input is rejected.
        let not_cycle = Chain::term(1, 2, WedgeIndex::new(vec![0]), WPoly::one(&ctx.ring));
        assert!(matches!(
            ctx.class_coords(&not_cycle),
            Err(KoszulError::NotACycle { .. })
        ));
    }

    #[test]
    fn multiply_class_action() {
        let ctx = ctx_e1();
        let x = WPoly::<Rat>::var(&ctx.ring, 0);
        let mut syz = Chain::zero(1, 3);
        syz.add_term(WedgeIndex::new(vec![0]), x.neg());
        syz.add_term(WedgeIndex::new(vec![1]), WPoly::one(&ctx.ring));
        let c3 = ctx.class_coords(&syz).unwrap();
        // x · (degree-3 generator) ≠ 0 in degree 4
        let c4 = ctx.multiply_class(1, 3, &c3, 0);
        assert_eq!(c4.len(), 1);
        assert!(!c4[0].is_zero());
        // x · (degree-4 class) = 0 in degree 5
        let c5 = ctx.multiply_class(1, 4, &c4, 0);
        assert!(c5.iter().all(|c| c.is_zero()));
        // zero in, zero out
        let z = ctx.multiply_class(1, 3, &[rat(0)], 0);
        assert!(z.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn multiply_class_representative_independent() {
        let ctx = ctx_e1();
        let x = WPoly::<Rat>::var(&ctx.ring, 0);
        // Degree-4 cycle: x·(−x e_1 + e_2); alternative representative
        // adds the boundary d(e_1∧e_2) shifted... boundary space at 4
        // is spanned by nothing below 5, so build one at 5 instead:
        // act from degree 4 to 5 with two representatives of the same
        // degree-4 class.
        let mut rep1 = Chain::zero(1, 4);
        rep1.add_term(WedgeIndex::new(vec![0]), x.pow(2).neg());
        rep1.add_term(WedgeIndex::new(vec![1]), x.clone());
        let coords = ctx.class_coords(&rep1).unwrap();
        let hp4 = ctx.homology(1, 4);
        // lift stored representative and compare actions
        let via_lift = ctx.multiply_class(1, 4, &coords, 0);
        let direct = ctx.class_coords(&rep1.mul_poly(&x)).unwrap();
        assert_eq!(via_lift, direct);
        assert_eq!(hp4.dim(), 1);
    }

    #[test]
    fn euler_characteristic_matches() {
        let ctx = ctx_e1();
        for nu in 0..=9 {
            let mut chi_ambient = 0i64;
            let mut chi_hom = 0i64;
            for p in 0..=ctx.r() {
                let sign = if p % 2 == 0 { 1 } else { -1 };
                chi_ambient += sign * ctx.graded_basis(p, nu).dim() as i64;
                chi_hom += sign * ctx.homology(p, nu).dim() as i64;
            }
            assert_eq!(chi_ambient, chi_hom, "Euler characteristic at ν={nu}");
        }
    }

    #[test]
    fn chain_render() {
        let ctx = ctx_e1();
        let x = WPoly::<Rat>::var(&ctx.ring, 0);
        let mut c = Chain::zero(1, 3);
        c.add_term(WedgeIndex::new(vec![0]), x.neg());
        c.add_term(WedgeIndex::new(vec![1]), WPoly::one(&ctx.ring));
        assert_eq!(c.render_lines(), vec!["(-1)·(x)·e{1}", "(+1)·(1)·e{2}"]);
        assert_eq!(Chain::<Rat>::zero(1, 3).render_lines(), vec!["0"]);
    }
}
