//! Exact computational commutative algebra for weighted polynomial
//! systems: Koszul homology, quotient rings, generalized Morley forms,
//! and degree-by-degree duality verification.
//!
//! All arithmetic is exact — arbitrary-precision rationals or a prime
//! field with runtime modulus — and every basis, echelon form, and
//! report is deterministic for a given input.

pub mod corpus;
pub mod duality;
pub mod koszul;
pub mod matrix;
pub mod morley;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod scalar;

pub use duality::{
    b_linearity_check, check_duality, omega_chain, omega_matrix, pairing_matrix,
    torsion_fixpoint, CheckOptions, DualityError, DualityReport, HomologyTable, NuRow, Verdict,
};
pub use koszul::{wedge_basis, Chain, KoszulContext, WedgeIndex};
pub use matrix::Matrix;
pub use morley::{Direction, MorleyData};
pub use poly::WPoly;
pub use quotient::{CertificateStatus, DualVector, SystemConfig};
pub use ring::{monomials_of_wdeg, Monomial, RingDescriptor};
pub use scalar::{is_prime, rat, Field, Fp, Rat};

/// Matrix over the rationals.
pub type RatMatrix = Matrix<Rat>;
/// Matrix over a prime field.
pub type FpMatrix = Matrix<Fp>;
/// Weighted polynomial over the rationals.
pub type RatPoly = WPoly<Rat>;
/// Weighted polynomial over a prime field.
pub type FpPoly = WPoly<Fp>;
/// Polynomial system over the rationals.
pub type RatSystem = SystemConfig<Rat>;
/// Polynomial system over a prime field.
pub type FpSystem = SystemConfig<Fp>;
