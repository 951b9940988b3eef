//! Finslerian 4-spinors: the symplectic scalar 4-product on ℂ⁴, the
//! pseudounitary (twistor) product of signature (+,+,−,−), and membership
//! predicates for the groups preserving them.
//!
//! The 4-product `[ξ,η,λ,μ] = ε_abcd ξ^a η^b λ^c μ^d` is evaluated as the
//! determinant of the matrix with columns ξ, η, λ, μ — the same value as the
//! 24-term ε sum with fewer rounding events. Transformations preserving it
//! are exactly those with unit determinant; those preserving the
//! pseudounitary product as well form the twistor subgroup.

use std::sync::OnceLock;

use crate::linalg::{c, C64, Mat4C, Spinor4};

/// Gram matrix `H = diag(1, 1, −1, −1)` of the pseudounitary product.
///
/// Satisfies `H = H⁺` and `H² = I`.
pub fn twistor_gram() -> &'static Mat4C {
    static H: OnceLock<Mat4C> = OnceLock::new();
    H.get_or_init(|| {
        Mat4C::diag([c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)])
    })
}

/// Antisymmetric 4-linear form `[ξ,η,λ,μ]`, normalized so the standard
/// basis gives 1. Vanishes iff the four columns are linearly dependent.
pub fn symplectic_product(xi: &Spinor4, eta: &Spinor4, lambda: &Spinor4, mu: &Spinor4) -> C64 {
    Mat4C::from_cols([xi.0, eta.0, lambda.0, mu.0]).det()
}

/// Pseudounitary product `⟨ξ,η⟩ = ξ¹η̄¹ + ξ²η̄² − ξ³η̄³ − ξ⁴η̄⁴`
/// (conjugation on the second argument).
pub fn pseudounitary_product(xi: &Spinor4, eta: &Spinor4) -> C64 {
    xi.0[0] * eta.0[0].conj() + xi.0[1] * eta.0[1].conj()
        - xi.0[2] * eta.0[2].conj()
        - xi.0[3] * eta.0[3].conj()
}

/// True iff `|det D − 1| ≤ tol`.
///
/// Note this is unit determinant, not unimodular: `det D = e^{iφ}` with
/// `φ ≠ 0` fails even though `|det D| = 1`.
pub fn is_sl4(d: &Mat4C, tol: f64) -> bool {
    (d.det() - c(1.0, 0.0)).norm() <= tol
}

/// Max entry magnitude of `D⁺HD − H`: how far `D` is from preserving the
/// pseudounitary product.
pub fn twistor_deviation(d: &Mat4C) -> f64 {
    let h = twistor_gram();
    (&(&d.adjoint() * h) * d).sub(h).max_abs()
}

/// True iff `D` has unit determinant and preserves the pseudounitary form:
/// `is_sl4(D, tol)` and `max|D⁺HD − H| ≤ tol`.
pub fn is_su22(d: &Mat4C, tol: f64) -> bool {
    is_sl4(d, tol) && twistor_deviation(d) <= tol
}
