//! Graded data of the quotient B = C/(f_1..f_r): ideal pieces, normal
//! forms, the Hilbert function, the finiteness certificate for
//! depth, and dual vectors on graded pieces of B.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;


use crate::koszul::KoszulContext;
use crate::matrix::{quotient_coords, Matrix};
use crate::poly::{PolyError, WPoly};
use crate::ring::{monomials_of_wdeg, Monomial, RingDescriptor};
use crate::scalar::Field;

/// Validation errors when assembling a polynomial system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemError {
    TooFewPolynomials { r: usize, n: usize },
    ZeroPolynomial { index: usize },
    /// Polynomial `index` (0-based) mixes the listed weighted degrees.
    NotHomogeneous { index: usize, degrees: Vec<i64> },
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::TooFewPolynomials { r, n } => {
                write!(f, "need at least as many polynomials as variables: r = {r} < n = {n}")
            }
            SystemError::ZeroPolynomial { index } => {
                write!(f, "polynomial {} is zero", index + 1)
            }
            SystemError::NotHomogeneous { index, degrees } => {
                let ds: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
                write!(
                    f,
                    "polynomial {} is not quasi-homogeneous: its monomials have weighted degrees {}",
                    index + 1,
                    ds.join(", ")
                )
            }
        }
    }
}

impl std::error::Error for SystemError {}

/// Outcome of the finiteness search: either the smallest degree from
/// which B provably vanishes, or failure within the search bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateStatus {
    /// B_μ = 0 for all μ ≥ s0, so dim_k B < ∞ and depth_I(C) = n.
    Certified { s0: i64 },
    /// No vanishing window of width max(m_i) found up to the bound.
    NotCertified { search_bound: i64 },
}

impl CertificateStatus {
    pub fn is_certified(&self) -> bool {
        matches!(self, CertificateStatus::Certified { .. })
    }
}

/// A quasi-homogeneous polynomial system f_1..f_r in the weighted ring
/// C, with r ≥ n, plus memoized graded data of B = C/(f_1..f_r).
pub struct SystemConfig<K: Field> {
    pub ring: Arc<RingDescriptor>,
    pub field_cfg: K::Config,
    pub polys: Vec<WPoly<K>>,
    pub degrees: Vec<i64>,
    pub delta: i64,
    b_memo: RefCell<BTreeMap<i64, Arc<BPiece<K>>>>,
}

impl<K: Field> SystemConfig<K> {
    pub fn new(
        ring: Arc<RingDescriptor>,
        field_cfg: K::Config,
        polys: Vec<WPoly<K>>,
    ) -> Result<Self, SystemError> {
        let n = ring.num_vars();
        let r = polys.len();
        if r < n {
            return Err(SystemError::TooFewPolynomials { r, n });
        }
        let mut degrees = Vec::with_capacity(r);
        for (index, f) in polys.iter().enumerate() {
            assert_eq!(*f.ring, *ring, "system polynomial in the wrong ring");
            match f.homogeneous_degree() {
                Ok(d) => degrees.push(d),
                Err(PolyError::ZeroPolynomial) => {
                    return Err(SystemError::ZeroPolynomial { index })
                }
                Err(_) => {
                    let mut ds: Vec<i64> = f.terms.keys().map(|m| m.wdeg(&ring)).collect();
                    ds.sort_unstable();
                    ds.dedup();
                    return Err(SystemError::NotHomogeneous { index, degrees: ds });
                }
            }
        }
        let delta: i64 = degrees.iter().sum::<i64>() - ring.weights.iter().sum::<i64>();
        Ok(SystemConfig {
            ring,
            field_cfg,
            polys,
            degrees,
            delta,
            b_memo: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn r(&self) -> usize {
        self.polys.len()
    }

    pub fn max_weight(&self) -> i64 {
        self.ring.max_weight()
    }

    pub fn max_degree(&self) -> i64 {
        *self.degrees.iter().max().expect("nonempty system")
    }

    /// Default degree up to which the finiteness search runs: Σ d_i + max m_i.
    pub fn default_search_bound(&self) -> i64 {
        self.degrees.iter().sum::<i64>() + self.max_weight()
    }

    /// Default width of the verification strip above δ: max m_i + max d_i.
    pub fn default_slack(&self) -> i64 {
        self.max_weight() + self.max_degree()
    }

    /// The Koszul complex K_•(f_1..f_r; C).
    pub fn koszul(&self) -> KoszulContext<K> {
        KoszulContext::new(self.ring.clone(), self.polys.clone())
    }

    /// Basis matrix of the ideal piece I_q: columns are the coordinate
    /// vectors of X^γ·f_i over the monomial basis of C_q, for i
    /// ascending and γ in the fixed monomial order.
    pub fn ideal_piece(&self, q: i64) -> Matrix<K> {
        let ambient = monomials_of_wdeg(&self.ring, q);
        let mut cols = Vec::new();
        for (f, &d) in self.polys.iter().zip(&self.degrees) {
            for gamma in monomials_of_wdeg(&self.ring, q - d) {
                let gen = f.mul_monomial(&gamma, &K::one());
                cols.push(gen.coords(q).expect("homogeneous by construction"));
            }
        }
        if cols.is_empty() {
            Matrix::zero(ambient.len(), 0)
        } else {
            Matrix::from_cols(cols)
        }
    }

    /// Graded piece of B at degree q, memoized.
    pub fn b_piece(&self, q: i64) -> Arc<BPiece<K>> {
        if let Some(p) = self.b_memo.borrow().get(&q) {
            return p.clone();
        }
        let monomials = monomials_of_wdeg(&self.ring, q);
        let ideal = self.ideal_piece(q);
        let (_, pivot_rows) = crate::matrix::column_space_echelon(&ideal);
        let b_monomials: Vec<Monomial> = monomials
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivot_rows.contains(i))
            .map(|(_, m)| m.clone())
            .collect();
        let piece = Arc::new(BPiece {
            q,
            monomials,
            ideal,
            pivot_rows,
            b_monomials,
        });
        self.b_memo.borrow_mut().insert(q, piece.clone());
        piece
    }

    pub fn b_dim(&self, q: i64) -> usize {
        if q < 0 {
            return 0;
        }
        self.b_piece(q).dim()
    }

    /// dim B_q for q = 0..=n_max.
    pub fn hilbert(&self, n_max: i64) -> Vec<usize> {
        (0..=n_max).map(|q| self.b_dim(q)).collect()
    }

    /// Coordinates of the class of `f` over the B_q monomial basis.
    /// Linear, vanishes exactly on I_q, identity on B-basis monomials.
    pub fn normal_form(&self, f: &WPoly<K>, q: i64) -> Result<Vec<K>, PolyError> {
        let v = f.coords(q)?;
        Ok(quotient_coords(&self.b_piece(q).ideal, &v))
    }

    /// Search for the smallest s0 ≤ search_bound such that B vanishes
    /// on the window [s0, s0 + max m_i). Every monomial of degree
    /// ≥ s0 + max m_i is some X_j times a monomial of degree ≥ s0, so
    /// the window certifies B_μ = 0 for all μ ≥ s0: dim_k B is finite,
    /// equivalently depth_I(C) = n.
    pub fn finiteness_certificate(&self, search_bound: i64) -> CertificateStatus {
        let w = self.max_weight();
        let mut run_start: Option<i64> = None; // start of the current all-zero run
        for q in 0..search_bound + w {
            if self.b_dim(q) == 0 {
                let start = *run_start.get_or_insert(q);
                if q - start + 1 >= w && start <= search_bound {
                    return CertificateStatus::Certified { s0: start };
                }
            } else {
                run_start = None;
            }
        }
        CertificateStatus::NotCertified { search_bound }
    }

    /// The unit dual vectors on the B_q basis.
    pub fn dual_basis(&self, q: i64) -> Vec<DualVector<K>> {
        let dim = self.b_dim(q);
        (0..dim)
            .map(|i| {
                let mut coords = vec![K::zero(); dim];
                coords[i] = K::one();
                DualVector { q, coords }
            })
            .collect()
    }

    /// The action (b·u)(x) = u(b·x) of a homogeneous b of degree s on a
    /// dual vector of degree q, landing in degree q − s.
    pub fn dual_action(
        &self,
        b: &WPoly<K>,
        u: &DualVector<K>,
    ) -> Result<DualVector<K>, QuotientError> {
        let s = if b.is_zero() {
            0
        } else {
            b.homogeneous_degree().map_err(QuotientError::Poly)?
        };
        let q = u.q - s;
        if q < 0 {
            return Err(QuotientError::DegreeUnderflow { from: u.q, by: s });
        }
        assert_eq!(u.coords.len(), self.b_dim(u.q), "dual vector length mismatch");
        let basis = self.b_piece(q).b_monomials.clone();
        let mut coords = Vec::with_capacity(basis.len());
        for m in &basis {
            let prod = b.mul_monomial(m, &K::one());
            let nf = self.normal_form(&prod, u.q).map_err(QuotientError::Poly)?;
            coords.push(u.apply(&nf));
        }
        Ok(DualVector { q, coords })
    }
}

/// Errors from quotient-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientError {
    DegreeUnderflow { from: i64, by: i64 },
    Poly(PolyError),
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::DegreeUnderflow { from, by } => {
                write!(f, "dual action drops degree {from} by {by} below zero")
            }
            QuotientError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for QuotientError {}

/// Graded piece of B at one degree: ambient monomials, the ideal
/// subspace, and the monomial complement basis of B.
pub struct BPiece<K: Field> {
    pub q: i64,
    /// Monomial basis of C_q (ascending lex).
    pub monomials: Vec<Monomial>,
    /// Columns span I_q inside C_q coordinates.
    pub ideal: Matrix<K>,
    /// Pivot rows of the echelonized ideal; the complement indexes B.
    pub pivot_rows: Vec<usize>,
    /// Monomials at non-pivot positions — the B_q basis.
    pub b_monomials: Vec<Monomial>,
}

impl<K: Field> BPiece<K> {
    pub fn dim(&self) -> usize {
        self.b_monomials.len()
    }

    pub fn ideal_rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

/// Element of B̌_q: a linear functional on B_q in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualVector<K> {
    pub q: i64,
    pub coords: Vec<K>,
}

impl<K: Field> DualVector<K> {
    pub fn zero(q: i64, dim: usize) -> Self {
        DualVector {
            q,
            coords: vec![K::zero(); dim],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Evaluate on an element of B_q given in basis coordinates.
    pub fn apply(&self, b_coords: &[K]) -> K {
        assert_eq!(b_coords.len(), self.coords.len(), "dimension mismatch");
        let mut acc = K::zero();
        for (u, x) in self.coords.iter().zip(b_coords) {
            if !u.is_zero() && !x.is_zero() {
                acc = acc + u.clone() * x.clone();
            }
        }
        acc
    }
}
