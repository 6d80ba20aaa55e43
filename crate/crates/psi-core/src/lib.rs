//! Exact-arithmetic toolkit for principal symmetric ideals.
//!
//! A principal symmetric ideal (psi) in `k[x_1, ..., x_d]` is the ideal
//! generated by the full orbit of a single homogeneous polynomial under the
//! permutation action of the symmetric group on the variables. This crate
//! builds such ideals exactly (rational or prime-field coefficients, never
//! floating point), computes their invariants (minimal generator counts,
//! Hilbert functions, stabilizers), and mechanizes the decision procedures
//! that recognize or refute the psi property: generator-count bounds,
//! order-type obstruction certificates, monomial-ideal characterizations,
//! product/power criteria, and symmetric Hilbert-function matching.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line front end live in the companion crate `psi-lab`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod action;
pub mod checks;
pub mod combinatorics;
pub mod error;
pub mod hilbert_sym;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod perm;
pub mod poly;
pub mod scalar;

pub use action::{
    is_k_symmetric, is_strongly_homogeneous, k_stabilizer, orbit, order_type_decompose,
    order_type_split, StabilizerReport,
};
pub use checks::{
    is_monomial_ideal, monomial_psi_test, mu_bound_check, order_type_obstruction,
    power_psi_analysis, product_monomial_psi_predict, stabilizer_product_criterion,
    strongly_homogeneous_psi_check, two_var_product_psi_test, validate_certificate, Certificate,
    PsiVerdict,
};
pub use combinatorics::{binomial, dim_r_a, monomials_of_order_type, partitions_of, Partition};
pub use error::{Error, Result};
pub use ideal::{Provenance, SymmetricIdeal};
pub use linalg::{graded_piece, ideal_equal, span_reduce, GradedPiece};
pub use monomial::Monomial;
pub use perm::Permutation;
pub use poly::{Homogeneity, Polynomial};
pub use scalar::{Field, Fp, Rational};

/// Orbit and stabilizer enumeration iterate all of `S_d`; this is the
/// default bound on `d` past which those operations refuse to run.
pub const DEFAULT_ORBIT_CAP: usize = 8;
