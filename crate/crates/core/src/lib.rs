//! Geometry of Finslerian 4-spinors.
//!
//! The crate implements, over plain `f64` complex arithmetic:
//!
//! * the antisymmetric symplectic scalar 4-product on ℂ⁴ and the
//!   pseudounitary (twistor) product of signature (+,+,−,−), with
//!   membership predicates for the groups preserving them ([`spinor`]);
//! * the 16-dimensional real space of Hermitian 4×4 matrices with its
//!   τ basis, exact trace duality, and the indefinite quartic length form,
//!   both as a determinant and as an exact integer-coefficient polynomial
//!   ([`herm`]);
//! * the induced isometries `X ↦ DXD⁺`, their real 16×16 matrices, and the
//!   closed-form Lorentz/Majorana block decomposition for embedded 2×2
//!   transformations ([`isometry`]);
//! * the dimensional reduction of the quartic length to gamma-matrix
//!   bilinears in the Majorana representation ([`reduction`]);
//! * seeded samplers ([`sample`]) and a deterministic property-check
//!   harness ([`check`]) behind the `finsler4` CLI.
//!
//! Values are immutable and all operations are pure functions; everything
//! is safe to share across threads without synchronization.

#![allow(clippy::needless_range_loop)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod check;
pub mod herm;
pub mod isometry;
pub mod linalg;
pub mod reduction;
pub mod sample;
pub mod spinor;

pub use check::{CheckReport, PropertyRecord, RunConfig};
pub use herm::{GTensor, GTensorEntry, Vec16};
pub use isometry::{L16, Sl2Blocks};
pub use linalg::{c, C64, Mat2C, Mat4C, Spinor4};
pub use reduction::ReducedX;

/// Error type for the fallible operations of the crate.
///
/// Most operations are total on finite input; errors signal either corrupted
/// caller data (a matrix that should have been Hermitian or unit-determinant
/// and is not) or an internal consistency tripwire.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian: deviation {deviation:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error(
        "matrix determinant {det_re}{det_im:+}i is not 1 within tolerance {tol:.1e}"
    )]
    NotUnimodular { det_re: f64, det_im: f64, tol: f64 },

    #[error(
        "imaginary residue {residue:.3e} exceeds bound {bound:.3e}; basis table corrupted?"
    )]
    ImaginaryResidue { residue: f64, bound: f64 },

    #[error("non-finite component")]
    NonFinite,
}
