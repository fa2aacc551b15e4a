//! Exact field scalars: arbitrary-precision rationals and prime fields
//! with a modulus chosen at runtime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Coefficient domain for every matrix and polynomial in this crate.
///
/// The two implementors are [`Rat`] and [`Fp`]. All operations are exact;
/// there is no rounding anywhere.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Runtime data needed to map an integer into the field: the modulus
    /// for `Fp`, nothing for `Rat`.
    type Config: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn embed(cfg: &Self::Config, n: &BigInt) -> Self;

    fn embed_i64(cfg: &Self::Config, n: i64) -> Self {
        Self::embed(cfg, &BigInt::from(n))
    }

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Whether a renderer should pull a minus sign out of this coefficient.
    fn display_negative(&self) -> bool;

    /// The coefficient with any display sign stripped.
    fn display_abs(&self) -> Self;

    /// Short name of the field for report headers ("Q" or "F_p").
    fn field_name(cfg: &Self::Config) -> String;
}

impl Field for BigRational {
    type Config = ();

    fn embed(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn display_negative(&self) -> bool {
        self.is_negative()
    }

    fn display_abs(&self) -> Self {
        self.abs()
    }

    fn field_name(_: &()) -> String {
        "Q".to_string()
    }
}

/// Residue in a prime field F_p, carrying its modulus.
///
/// `Zero::zero()` and `One::one()` have no modulus at hand, so small
/// integer literals are held with `p == 0` and adopt the modulus of the
/// first bound value they meet. Literals only ever arise from fills and
/// unit vectors, never from input data.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    val: i64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let m = p as i64;
        let mut r = v % m;
        if r < 0 {
            r += m;
        }
        Fp { val: r, p }
    }

    /// An integer literal not yet attached to a modulus.
    pub fn literal(v: i64) -> Self {
        Fp { val: v, p: 0 }
    }

    pub fn value(&self) -> i64 {
        self.val
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn join_moduli(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, q) | (q, 0) => q,
            (a, b) => {
                assert_eq!(a, b, "mixed moduli {a} and {b}");
                a
            }
        }
    }

    fn reduced(v: i128, p: u64) -> Fp {
        if p == 0 {
            let val = i64::try_from(v).expect("unbound literal overflow");
            Fp { val, p: 0 }
        } else {
            let m = p as i128;
            let mut r = v % m;
            if r < 0 {
                r += m;
            }
            Fp { val: r as i64, p }
        }
    }

    fn canonical_val(&self, p: u64) -> i64 {
        Self::reduced(self.val as i128, p).val
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let p = Self::join_moduli(self.p, other.p);
        self.canonical_val(p) == other.canonical_val(p)
    }
}

impl Eq for Fp {}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let p = Self::join_moduli(self.p, rhs.p);
        Self::reduced(self.val as i128 + rhs.val as i128, p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let p = Self::join_moduli(self.p, rhs.p);
        Self::reduced(self.val as i128 - rhs.val as i128, p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let p = Self::join_moduli(self.p, rhs.p);
        Self::reduced(self.val as i128 * rhs.val as i128, p)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Self::reduced(-(self.val as i128), self.p)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp::literal(0)
    }
    fn is_zero(&self) -> bool {
        self.val == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp::literal(1)
    }
    fn is_one(&self) -> bool {
        self.val == 1
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

impl Field for Fp {
    type Config = u64;

    fn embed(p: &u64, n: &BigInt) -> Self {
        let m = BigInt::from(*p);
        let mut r = n % &m;
        if r.sign() == num_bigint::Sign::Minus {
            r += &m;
        }
        Fp {
            val: r.to_i64().expect("residue fits i64"),
            p: *p,
        }
    }

    fn inv(&self) -> Self {
        if self.p == 0 {
            return match self.val {
                1 => Fp::literal(1),
                -1 => Fp::literal(-1),
                0 => panic!("inverse of zero"),
                v => panic!("cannot invert unbound literal {v}"),
            };
        }
        assert!(self.val != 0, "inverse of zero");
        // extended Euclid on (val, p)
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, self.val);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        assert!(r == 1, "modulus is not prime: gcd({}, {}) = {r}", self.val, self.p);
        Fp::new(t, self.p)
    }

    fn display_negative(&self) -> bool {
        self.p == 0 && self.val < 0
    }

    fn display_abs(&self) -> Self {
        if self.p == 0 {
            Fp::literal(self.val.abs())
        } else {
            *self
        }
    }

    fn field_name(p: &u64) -> String {
        format!("F_{p}")
    }
}

/// Trial-division primality test for moduli below 2^31.
pub fn is_prime(p: u64) -> bool {
    if p < 2 || p >= (1 << 31) {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Convenience constructor for rational scalars in tests and fills.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_fp() {
        let p = 101u64;
        for v in [1i64, 2, 50, 100] {
            let a = Fp::new(v, p);
            assert!((a * a.inv()).is_one(), "a · a⁻¹ = 1 for a = {v}");
        }
    }

    #[test]
    fn fp_literals_bind_on_contact() {
        let a = Fp::new(5, 7);
        let one = Fp::one();
        assert_eq!((one + a).value(), 6);
        assert_eq!((Fp::zero() - a).value(), 2);
        assert_eq!((-Fp::one() * a).value(), 2);
    }

    #[test]
    fn fp_eq_across_binding() {
        assert_eq!(Fp::new(1, 7), Fp::one());
        assert_eq!(Fp::new(6, 7), Fp::literal(-1));
        assert_ne!(Fp::new(2, 7), Fp::one());
    }

    #[test]
    fn rational_inverse() {
        let a = rat(3) / rat(4);
        assert!((a.clone() * Field::inv(&a)).is_one());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(101));
        assert!(is_prime(65537));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91)); // 7 · 13
        assert!(!is_prime(1 << 31));
    }
}
