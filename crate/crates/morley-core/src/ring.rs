//! Weighted polynomial ring descriptors and monomials.
//!
//! A ring is `k[X_1..X_n]` with `deg X_i = m_i`, or its doubled variant
//! `k[X_1..X_n, Y_1..Y_n]` where `Y_i` carries the same weight as `X_i`.
//! Monomials are ordered by ascending lexicographic comparison of
//! exponent vectors; every graded basis in the crate inherits that order.

use std::fmt;
use std::sync::Arc;

/// Shape of a weighted polynomial ring: variable count, weights, and
/// display names. `doubled` switches to the X/Y ring used for
/// difference-complex work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDescriptor {
    /// Number of X variables (the geometry's `n`).
    pub base_n: usize,
    /// Weight of each variable; length `base_n`, or `2·base_n` when
    /// doubled (Y weights repeat the X weights).
    pub weights: Vec<i64>,
    /// Display name of each variable; same length as `weights`.
    pub names: Vec<String>,
    /// Whether the variables are X_1..X_n, Y_1..Y_n.
    pub doubled: bool,
}

impl RingDescriptor {
    /// The user-facing ring C = k[names] with the given weights.
    pub fn x_ring(weights: Vec<i64>, names: Vec<String>) -> Arc<Self> {
        assert!(!weights.is_empty(), "need at least one variable");
        assert!(weights.iter().all(|&m| m >= 1), "weights must be positive");
        assert_eq!(weights.len(), names.len(), "one name per variable");
        Arc::new(RingDescriptor {
            base_n: weights.len(),
            weights,
            names,
            doubled: false,
        })
    }

    /// X-ring with canonical names: `X` for one variable, else `X1..Xn`.
    pub fn canonical_x(weights: Vec<i64>) -> Arc<Self> {
        let names = canonical_names(weights.len(), false);
        Self::x_ring(weights, names)
    }

    /// The doubled ring k[X_1..X_n, Y_1..Y_n] over the same weights,
    /// always with canonical names.
    pub fn doubled_ring(&self) -> Arc<Self> {
        assert!(!self.doubled, "already doubled");
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&self.weights);
        Arc::new(RingDescriptor {
            base_n: self.base_n,
            names: canonical_names(self.base_n, true),
            weights,
            doubled: true,
        })
    }

    /// The canonical-name X-ring underneath a doubled ring.
    pub fn x_subring(&self) -> Arc<Self> {
        assert!(self.doubled, "only doubled rings have an X subring");
        Arc::new(RingDescriptor {
            base_n: self.base_n,
            weights: self.weights[..self.base_n].to_vec(),
            names: self.names[..self.base_n].to_vec(),
            doubled: false,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn max_weight(&self) -> i64 {
        *self.weights.iter().max().expect("nonempty")
    }
}

/// `X`/`Y` for one variable, `X1..`/`Y1..` otherwise.
fn canonical_names(n: usize, doubled: bool) -> Vec<String> {
    let block = |letter: char| -> Vec<String> {
        if n == 1 {
            vec![letter.to_string()]
        } else {
            (1..=n).map(|i| format!("{letter}{i}")).collect()
        }
    };
    let mut names = block('X');
    if doubled {
        names.extend(block('Y'));
    }
    names
}

/// Exponent vector of a monomial. `Ord` is ascending lexicographic
/// comparison of the exponents, which is the crate-wide basis order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn var(i: usize, num_vars: usize) -> Self {
        let mut m = Self::one(num_vars);
        m.exps[i] = 1;
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn wdeg(&self, ring: &RingDescriptor) -> i64 {
        assert_eq!(self.exps.len(), ring.num_vars(), "ring mismatch");
        self.exps
            .iter()
            .zip(&ring.weights)
            .map(|(&e, &m)| e as i64 * m)
            .sum()
    }

    /// Weighted degree of the X part of a doubled monomial.
    pub fn xdeg(&self, ring: &RingDescriptor) -> i64 {
        assert!(ring.doubled);
        self.exps[..ring.base_n]
            .iter()
            .zip(&ring.weights[..ring.base_n])
            .map(|(&e, &m)| e as i64 * m)
            .sum()
    }

    /// Weighted degree of the Y part of a doubled monomial.
    pub fn ydeg(&self, ring: &RingDescriptor) -> i64 {
        assert!(ring.doubled);
        self.exps[ring.base_n..]
            .iter()
            .zip(&ring.weights[ring.base_n..])
            .map(|(&e, &m)| e as i64 * m)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "ring mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// Render with the ring's variable names, e.g. `X1^2*X2`; the empty
    /// monomial renders as `1`.
    pub fn render(&self, ring: &RingDescriptor) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

// Display needs a ring for names, so the bare impl prints raw
// exponents; use `render` for report output.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// All monomials of weighted degree exactly `nu`, ascending lex.
/// Negative `nu` gives the empty list.
pub fn monomials_of_wdeg(ring: &RingDescriptor, nu: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nu < 0 {
        return out;
    }
    let nv = ring.num_vars();
    let mut exps = vec![0u32; nv];
    fill(ring, 0, nu, &mut exps, &mut out);
    fn fill(
        ring: &RingDescriptor,
        i: usize,
        remaining: i64,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        let nv = ring.num_vars();
        if i == nv {
            if remaining == 0 {
                out.push(Monomial { exps: exps.clone() });
            }
            return;
        }
        let m = ring.weight(i);
        let max_e = remaining / m;
        for e in 0..=max_e {
            exps[i] = e as u32;
            fill(ring, i + 1, remaining - e * m, exps, out);
        }
        exps[i] = 0;
    }
    out
}

/// Number of monomials of weighted degree `nu` (the Hilbert function of
/// the free ring).
pub fn count_monomials_of_wdeg(ring: &RingDescriptor, nu: i64) -> usize {
    monomials_of_wdeg(ring, nu).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_example() {
        // weights (1,1), degree 2: x2², x1·x2, x1² in that order
        let ring = RingDescriptor::canonical_x(vec![1, 1]);
        let ms = monomials_of_wdeg(&ring, 2);
        let exps: Vec<Vec<u32>> = ms.iter().map(|m| m.exps.clone()).collect();
        assert_eq!(exps, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(sorted, ms, "enumeration is already ascending lex");
    }

    #[test]
    fn weighted_enumeration() {
        // weights (1,2), degree 4: {x1⁴, x1²x2, x2²}
        let ring = RingDescriptor::canonical_x(vec![1, 2]);
        let ms = monomials_of_wdeg(&ring, 4);
        assert_eq!(ms.len(), 3);
        for m in &ms {
            assert_eq!(m.wdeg(&ring), 4);
        }
    }

    #[test]
    fn degree_zero_and_negative() {
        let ring = RingDescriptor::canonical_x(vec![3, 5]);
        assert_eq!(monomials_of_wdeg(&ring, 0), vec![Monomial::one(2)]);
        assert!(monomials_of_wdeg(&ring, -1).is_empty());
        assert!(monomials_of_wdeg(&ring, 1).is_empty()); // no weight-1 variable
    }

    #[test]
    fn brute_force_count_agrees() {
        let ring = RingDescriptor::canonical_x(vec![1, 2, 3]);
        for nu in 0..12 {
            let fast = count_monomials_of_wdeg(&ring, nu);
            let mut slow = 0usize;
            for a in 0..=nu {
                for b in 0..=nu / 2 {
                    for c in 0..=nu / 3 {
                        if a + 2 * b + 3 * c == nu {
                            slow += 1;
                        }
                    }
                }
            }
            assert_eq!(fast, slow, "degree {nu}");
        }
    }

    #[test]
    fn doubled_ring_shape() {
        let c = RingDescriptor::x_ring(vec![1, 2], vec!["a".into(), "b".into()]);
        let d = c.doubled_ring();
        assert_eq!(d.num_vars(), 4);
        assert_eq!(d.weights, vec![1, 2, 1, 2]);
        assert_eq!(d.names, vec!["X1", "X2", "Y1", "Y2"]);
        let m = Monomial { exps: vec![1, 0, 0, 2] };
        assert_eq!(m.xdeg(&d), 1);
        assert_eq!(m.ydeg(&d), 4);
        assert_eq!(m.wdeg(&d), 5);
        assert_eq!(d.x_subring().names, vec!["X1", "X2"]);
    }

    #[test]
    fn single_variable_canonical_names() {
        let c = RingDescriptor::canonical_x(vec![1]);
        assert_eq!(c.names, vec!["X"]);
        assert_eq!(c.doubled_ring().names, vec!["X", "Y"]);
    }

    #[test]
    fn monomial_render() {
        let ring = RingDescriptor::canonical_x(vec![1, 1, 1]);
        let m = Monomial { exps: vec![2, 1, 0] };
        assert_eq!(m.render(&ring), "X1^2*X2");
        assert_eq!(Monomial::one(3).render(&ring), "1");
    }
}
