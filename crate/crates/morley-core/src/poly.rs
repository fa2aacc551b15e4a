//! Weighted-graded polynomials: exact arithmetic, substitution, graded
//! coordinates, and exact division by a difference of paired variables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;



use crate::ring::{monomials_of_wdeg, Monomial, RingDescriptor};
use crate::scalar::Field;

/// Errors from polynomial-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
    Inhomogeneous,
    /// `substitute` image for this variable (0-based) has the wrong
    /// weighted degree.
    WeightIncompatibleImage { var: usize },
    /// `divide_linear_diff` found a nonzero remainder (rendered).
    NotDivisible { remainder: String },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "zero polynomial"),
            PolyError::Inhomogeneous => write!(f, "polynomial is not quasi-homogeneous"),
            PolyError::WeightIncompatibleImage { var } => {
                write!(f, "substitution image for variable {} has the wrong weight", var + 1)
            }
            PolyError::NotDivisible { remainder } => {
                write!(f, "not divisible: remainder {remainder}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Polynomial over a weighted ring, stored as monomial → coefficient
/// with no zero coefficients. The `BTreeMap` keeps terms in ascending
/// lex order, which every basis and report relies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoly<K: Field> {
    pub ring: Arc<RingDescriptor>,
    pub terms: BTreeMap<Monomial, K>,
}

impl<K: Field> WPoly<K> {
    pub fn zero(ring: &Arc<RingDescriptor>) -> Self {
        WPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<RingDescriptor>, c: K) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.num_vars()), c);
        }
        p
    }

    pub fn one(ring: &Arc<RingDescriptor>) -> Self {
        Self::constant(ring, K::one())
    }

    pub fn var(ring: &Arc<RingDescriptor>, i: usize) -> Self {
        let mut p = Self::zero(ring);
        p.terms.insert(Monomial::var(i, ring.num_vars()), K::one());
        p
    }

    pub fn monomial(ring: &Arc<RingDescriptor>, m: Monomial, c: K) -> Self {
        assert_eq!(m.exps.len(), ring.num_vars(), "ring mismatch");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(*self.ring, *other.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * k.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(*self.ring, *other.ring, "ring mismatch");
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &K) -> Self {
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            out.insert_add(ma.mul(m), ca.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The common weighted degree of all terms, or an error if the
    /// polynomial is zero or mixes degrees.
    pub fn homogeneous_degree(&self) -> Result<i64, PolyError> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?;
        let d = first.wdeg(&self.ring);
        for m in it {
            if m.wdeg(&self.ring) != d {
                return Err(PolyError::Inhomogeneous);
            }
        }
        Ok(d)
    }

    /// Substitute each variable by the corresponding image polynomial
    /// (all over `target`). Every nonzero image must be homogeneous of
    /// the source variable's weight, so grading is preserved.
    pub fn substitute(
        &self,
        target: &Arc<RingDescriptor>,
        images: &[WPoly<K>],
    ) -> Result<WPoly<K>, PolyError> {
        assert_eq!(images.len(), self.ring.num_vars(), "one image per variable");
        for (i, img) in images.iter().enumerate() {
            assert_eq!(*img.ring, **target, "image ring mismatch");
            if !img.is_zero() && img.homogeneous_degree() != Ok(self.ring.weight(i)) {
                return Err(PolyError::WeightIncompatibleImage { var: i });
            }
        }
        let mut out = WPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = WPoly::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    acc = acc.mul(&images[i].pow(e));
                }
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Embed an X-ring polynomial into the doubled ring via X_i ↦ X_i.
    pub fn embed_doubled(&self, doubled: &Arc<RingDescriptor>) -> WPoly<K> {
        assert!(!self.ring.doubled && doubled.doubled);
        assert_eq!(self.ring.base_n, doubled.base_n);
        let mut out = WPoly::zero(doubled);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps.resize(doubled.num_vars(), 0);
            out.terms.insert(Monomial { exps }, c.clone());
        }
        out
    }

    /// Set every Y variable of a doubled-ring polynomial to zero and
    /// land in the canonical X subring.
    pub fn set_y_zero(&self) -> WPoly<K> {
        assert!(self.ring.doubled);
        let n = self.ring.base_n;
        let sub = self.ring.x_subring();
        let mut out = WPoly::zero(&sub);
        for (m, c) in &self.terms {
            if m.exps[n..].iter().all(|&e| e == 0) {
                out.terms.insert(
                    Monomial {
                        exps: m.exps[..n].to_vec(),
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    /// Exact quotient by `X_j − Y_j` in the doubled ring (`j` 0-based).
    /// Fails with the rendered remainder when `F|_{X_j→Y_j} ≠ 0`.
    pub fn divide_linear_diff(&self, j: usize) -> Result<WPoly<K>, PolyError> {
        assert!(self.ring.doubled, "division needs the doubled ring");
        let n = self.ring.base_n;
        assert!(j < n);
        // Remainder: fold X_j into Y_j and see whether everything cancels.
        let mut rem = WPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps[n + j] += exps[j];
            exps[j] = 0;
            rem.insert_add(Monomial { exps }, c.clone());
        }
        if !rem.is_zero() {
            return Err(PolyError::NotDivisible {
                remainder: rem.to_string(),
            });
        }
        // X^a Y^b − Y^{a+b} = (X − Y) · Σ_{t<a} X^t Y^{a+b−1−t}, so the
        // quotient is the term-by-term sum of those telescopes.
        let mut q = WPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let a = m.exps[j];
            let b = m.exps[n + j];
            for t in 0..a {
                let mut exps = m.exps.clone();
                exps[j] = t;
                exps[n + j] = a + b - 1 - t;
                q.insert_add(Monomial { exps }, c.clone());
            }
        }
        Ok(q)
    }

    /// Coefficient vector over `monomials_of_wdeg(ring, nu)`; the
    /// polynomial must be homogeneous of degree `nu` (zero is fine).
    pub fn coords(&self, nu: i64) -> Result<Vec<K>, PolyError> {
        if !self.is_zero() && self.homogeneous_degree()? != nu {
            return Err(PolyError::Inhomogeneous);
        }
        Ok(monomials_of_wdeg(&self.ring, nu)
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_else(K::zero))
            .collect())
    }

    pub fn from_coords(ring: &Arc<RingDescriptor>, nu: i64, coeffs: &[K]) -> WPoly<K> {
        let basis = monomials_of_wdeg(ring, nu);
        assert_eq!(basis.len(), coeffs.len(), "coordinate length mismatch");
        let mut p = WPoly::zero(ring);
        for (m, c) in basis.into_iter().zip(coeffs) {
            if !c.is_zero() {
                p.terms.insert(m, c.clone());
            }
        }
        p
    }

    /// The same polynomial viewed in a ring that differs only in
    /// variable names (weights and doubling must match).
    pub fn with_ring(&self, target: &Arc<RingDescriptor>) -> WPoly<K> {
        assert_eq!(self.ring.weights, target.weights, "weight mismatch");
        assert_eq!(self.ring.doubled, target.doubled, "shape mismatch");
        WPoly {
            ring: target.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Split off the display sign: `(true, −f)` when the leading
    /// (descending-lex) coefficient displays as negative, else
    /// `(false, f)`. Prime-field residues never display as negative.
    pub fn display_sign_split(&self) -> (bool, WPoly<K>) {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.display_negative() => (true, self.neg()),
            _ => (false, self.clone()),
        }
    }
}

impl<K: Field> fmt::Display for WPoly<K> {
    /// Descending lex, explicit signs: `X^2 + X*Y - 2*Y^2`, `0` if zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.display_negative();
            let mag = c.display_abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.render(&self.ring))?;
            } else {
                write!(f, "{}*{}", mag, m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}
