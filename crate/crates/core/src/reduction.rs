//! Dimensional reduction of the quartic length: the 16 components regrouped
//! as a Lorentz 4-vector, two Majorana 4-spinors, and four scalars, with the
//! length rewritten through gamma-matrix bilinears.
//!
//! The gamma matrices are the Majorana-representation constants with entries
//! in `{0, ±1, ±i}`; they satisfy `γ^μγ^ν + γ^νγ^μ = 2g^{μν}I` exactly in
//! floating point, and `γ⁵ = γ⁰γ¹γ²γ³` squares to `−I`. Spinor components
//! are ordinary commuting reals; the rewritten form is a polynomial identity
//! in the 16 real variables, checked against the determinant route (which is
//! ground truth on any mismatch).

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::herm::Vec16;
use crate::linalg::{c, C64, Mat4C};

/// Diagonal of the Minkowski metric `g = diag(1, −1, −1, −1)`.
pub const MINKOWSKI_DIAG: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Minkowski pairing `g_{μν} a^μ b^ν`.
pub fn minkowski(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

struct GammaSet {
    gamma: [Mat4C; 4],
    gamma5: Mat4C,
    /// Products γ⁰γ^ν and γ⁰γ⁵γ^ν used by the bilinears; all real-entried.
    g0_g: [Mat4C; 4],
    g0_g5_g: [Mat4C; 4],
}

fn gamma_set() -> &'static GammaSet {
    static G: OnceLock<GammaSet> = OnceLock::new();
    G.get_or_init(|| {
        let i = |v: f64| c(0.0, v);
        let r = |v: f64| c(v, 0.0);
        let o = c(0.0, 0.0);
        let g0 = Mat4C::from_rows([
            [o, o, i(1.0), o],
            [o, o, o, i(-1.0)],
            [i(-1.0), o, o, o],
            [o, i(1.0), o, o],
        ]);
        let g1 = Mat4C::from_rows([
            [i(1.0), o, o, o],
            [o, i(-1.0), o, o],
            [o, o, i(-1.0), o],
            [o, o, o, i(1.0)],
        ]);
        let g2 = Mat4C::from_rows([
            [o, i(1.0), o, o],
            [i(1.0), o, o, o],
            [o, o, o, i(1.0)],
            [o, o, i(1.0), o],
        ]);
        let g3 = Mat4C::from_rows([
            [o, o, i(-1.0), o],
            [o, o, o, i(1.0)],
            [i(-1.0), o, o, o],
            [o, i(1.0), o, o],
        ]);
        let g5 = Mat4C::from_rows([
            [o, r(-1.0), o, o],
            [r(1.0), o, o, o],
            [o, o, o, r(-1.0)],
            [o, o, r(1.0), o],
        ]);
        let gamma = [g0, g1, g2, g3];
        let g0_g = std::array::from_fn(|nu| &g0 * &gamma[nu]);
        let g0_g5_g = std::array::from_fn(|nu| &(&g0 * &g5) * &gamma[nu]);
        GammaSet {
            gamma,
            gamma5: g5,
            g0_g,
            g0_g5_g,
        }
    })
}

/// The Dirac matrix `γ^μ`, `μ = 0..=3`.
pub fn gamma(mu: usize) -> &'static Mat4C {
    &gamma_set().gamma[mu]
}

/// The constant `γ⁵ = γ⁰γ¹γ²γ³`.
pub fn gamma5() -> &'static Mat4C {
    &gamma_set().gamma5
}

/// The 16 components regrouped for a 4-dimensional observer.
///
/// Index map against [`Vec16`]: `vec = X^0..X^3`, `theta^i = X^{3+i}`
/// (components 4..=7), `s8 = X^8`, `vartheta^j = X^{8+j}` (components
/// 9..=12), then `s13, s14, s15`.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReducedX {
    pub vec: [f64; 4],
    pub theta: [f64; 4],
    pub s8: f64,
    pub vartheta: [f64; 4],
    pub s13: f64,
    pub s14: f64,
    pub s15: f64,
}

/// Regroups a 16-vector; lossless relabeling.
pub fn split(x: &Vec16) -> ReducedX {
    ReducedX {
        vec: [x.0[0], x.0[1], x.0[2], x.0[3]],
        theta: [x.0[4], x.0[5], x.0[6], x.0[7]],
        s8: x.0[8],
        vartheta: [x.0[9], x.0[10], x.0[11], x.0[12]],
        s13: x.0[13],
        s14: x.0[14],
        s15: x.0[15],
    }
}

/// Inverse of [`split`].
pub fn join(r: &ReducedX) -> Vec16 {
    let mut x = [0.0; 16];
    x[..4].copy_from_slice(&r.vec);
    x[4..8].copy_from_slice(&r.theta);
    x[8] = r.s8;
    x[9..13].copy_from_slice(&r.vartheta);
    x[13] = r.s13;
    x[14] = r.s14;
    x[15] = r.s15;
    Vec16(x)
}

/// Dirac adjoint row `θ̄ = θᵀγ⁰` of a real 4-spinor.
pub fn bar(theta: &[f64; 4]) -> [C64; 4] {
    let g0 = gamma(0);
    std::array::from_fn(|col| {
        let mut z = c(0.0, 0.0);
        for r in 0..4 {
            z += c(theta[r], 0.0) * g0.e[r][col];
        }
        z
    })
}

/// Spinor bilinear `θ̄ M ϑ` as a complex scalar.
pub fn bilinear(theta: &[f64; 4], m: &Mat4C, vartheta: &[f64; 4]) -> C64 {
    let row = bar(theta);
    let mut z = c(0.0, 0.0);
    for r in 0..4 {
        for col in 0..4 {
            z += row[r] * m.e[r][col] * c(vartheta[col], 0.0);
        }
    }
    z
}

/// Real quadratic form `θᵀ (γ⁰ M) ϑ` for the matrices appearing in the
/// reduced quartic; the product `γ⁰M` is real-entried there, so the value
/// is exactly real. The residue assertion is a tripwire for a corrupted
/// gamma table.
fn real_bilinear(theta: &[f64; 4], g0m: &Mat4C, vartheta: &[f64; 4]) -> f64 {
    let mut z = c(0.0, 0.0);
    for r in 0..4 {
        for col in 0..4 {
            z += c(theta[r], 0.0) * g0m.e[r][col] * c(vartheta[col], 0.0);
        }
    }
    let scale = theta
        .iter()
        .chain(vartheta.iter())
        .map(|v| v.abs())
        .fold(1.0, f64::max);
    assert!(
        z.im.abs() <= 1e-12 * scale * scale,
        "imaginary residue {} in a Majorana bilinear",
        z.im
    );
    z.re
}

/// The quartic length in 4-dimensional form:
///
/// ```text
/// |X|⁴ = X¹⁵[X⁸ g_{μν}X^μX^ν − g_{μν}X^μ θ̄γ^νθ]
///      − [(X¹³)² + (X¹⁴)²] g_{μν}X^μX^ν
///      − X⁸ g_{μν}X^μ ϑ̄γ^νϑ
///      + 2X¹³ g_{μν}X^μ θ̄γ^νϑ + 2X¹⁴ g_{μν}X^μ θ̄γ⁵γ^νϑ
///      + ½ g_{μν} θ̄γ^μθ ϑ̄γ^νϑ
/// ```
///
/// Agrees with `quartic_det(join(R))` to rounding.
pub fn quartic_reduced(r: &ReducedX) -> f64 {
    let set = gamma_set();
    let x = &r.vec;

    let mut theta_theta = [0.0; 4];
    let mut var_var = [0.0; 4];
    let mut theta_var = [0.0; 4];
    let mut theta5_var = [0.0; 4];
    for nu in 0..4 {
        theta_theta[nu] = real_bilinear(&r.theta, &set.g0_g[nu], &r.theta);
        var_var[nu] = real_bilinear(&r.vartheta, &set.g0_g[nu], &r.vartheta);
        theta_var[nu] = real_bilinear(&r.theta, &set.g0_g[nu], &r.vartheta);
        theta5_var[nu] = real_bilinear(&r.theta, &set.g0_g5_g[nu], &r.vartheta);
    }

    let xx = minkowski(x, x);
    r.s15 * (r.s8 * xx - minkowski(x, &theta_theta))
        - (r.s13 * r.s13 + r.s14 * r.s14) * xx
        - r.s8 * minkowski(x, &var_var)
        + 2.0 * r.s13 * minkowski(x, &theta_var)
        + 2.0 * r.s14 * minkowski(x, &theta5_var)
        + 0.5 * minkowski(&theta_theta, &var_var)
}
