//! Isometries of the Hermitian 16-space: the induced action `X′ = DXD⁺`,
//! its real 16×16 matrix `L(D)^A_B = ½Tr(τ^A D τ_B D⁺)`, and the closed-form
//! block decomposition when `D` embeds a 2×2 unit-determinant matrix.
//!
//! For the embedded subgroup the 16 components split into a Lorentz 4-vector
//! (indices 0..=3), two Majorana 4-spinors θ (4..=7) and ϑ (9..=12), and four
//! scalars (8, 13, 14, 15). The vector and spinor blocks have closed forms
//! quadratic respectively linear in the 2×2 entries; both are cross-checked
//! against the trace formula in the test suites, and the trace formula is
//! authoritative on any mismatch.

use serde::{Deserialize, Serialize};

use crate::herm::{components, dual_factor, pack, tau, tau_entries, Vec16};
use crate::linalg::{c, C64, Mat2C, Mat4C};
use crate::Error;

/// Determinant tolerance for accepting a 2×2 matrix as unit-determinant.
pub const SL2_DET_TOL: f64 = 1e-10;

/// Relative bound on the imaginary residue of each trace in the `L(D)`
/// computation; a violation indicates a broken basis table rather than
/// ordinary rounding.
pub const L_RESIDUE_BOUND: f64 = 1e-12;

/// Real 16×16 matrix acting on [`Vec16`], rows/cols indexed `A, B = 0..=15`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct L16(pub [[f64; 16]; 16]);

impl L16 {
    pub const fn zero() -> Self {
        L16([[0.0; 16]; 16])
    }

    pub const fn identity() -> Self {
        let mut e = [[0.0; 16]; 16];
        let mut k = 0;
        while k < 16 {
            e[k][k] = 1.0;
            k += 1;
        }
        L16(e)
    }

    /// `L · X`.
    pub fn apply(&self, x: &Vec16) -> Vec16 {
        let mut out = [0.0; 16];
        for (a, row) in self.0.iter().enumerate() {
            out[a] = row.iter().zip(x.0.iter()).map(|(l, v)| l * v).sum();
        }
        Vec16(out)
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &L16) -> L16 {
        let mut out = L16::zero();
        for a in 0..16 {
            for k in 0..16 {
                let v = self.0[a][k];
                if v == 0.0 {
                    continue;
                }
                for b in 0..16 {
                    out.0[a][b] += v * rhs.0[k][b];
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &L16) -> f64 {
        let mut dev = 0.0f64;
        for a in 0..16 {
            for b in 0..16 {
                dev = dev.max((self.0[a][b] - other.0[a][b]).abs());
            }
        }
        dev
    }
}

impl Serialize for L16 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for L16 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(L16(<[[f64; 16]; 16]>::deserialize(d)?))
    }
}

/// The action `X ↦ DXD⁺` in components: pack, conjugate, extract.
///
/// The result is Hermitian by construction for any `D`, so extraction skips
/// the hermiticity gate; rounding asymmetry only perturbs the discarded
/// imaginary parts.
pub fn induced_transform(d: &Mat4C, x: &Vec16) -> Vec16 {
    components(&(&(d * &pack(x)) * &d.adjoint()))
}

/// The matrix of the induced action: `L(D)^A_B = ½Tr(τ^A D τ_B D⁺)`.
///
/// Each trace is mathematically real; the real parts are kept and the
/// imaginary residues are required to stay below
/// `L_RESIDUE_BOUND · max(1, ‖D‖²_F)`.
pub fn l_matrix(d: &Mat4C) -> Result<L16, Error> {
    l_matrix_bounded(d, L_RESIDUE_BOUND * d.frob_sq().max(1.0))
}

/// Worst imaginary residue over the 256 traces of `L(D)`, before dropping.
pub fn l_realness_residue(d: &Mat4C) -> f64 {
    l_traces(d).1
}

fn l_matrix_bounded(d: &Mat4C, bound: f64) -> Result<L16, Error> {
    let (l, residue) = l_traces(d);
    if residue > bound {
        return Err(Error::ImaginaryResidue { residue, bound });
    }
    Ok(l)
}

fn l_traces(d: &Mat4C) -> (L16, f64) {
    let adj = d.adjoint();
    let mut out = L16::zero();
    let mut worst = 0.0f64;
    for b in 0..16 {
        let conjugated = &(d * tau(b)) * &adj;
        for a in 0..16 {
            let f = dual_factor(a) as f64;
            let mut tr = c(0.0, 0.0);
            for &(r, col, re, im) in tau_entries(a) {
                tr += c(re as f64, im as f64) * conjugated.e[col][r];
            }
            worst = worst.max((0.5 * f * tr.im).abs());
            out.0[a][b] = 0.5 * f * tr.re;
        }
    }
    (out, worst)
}

/// Embeds a unit-determinant 2×2 matrix as the upper-left block of a 4×4
/// matrix with the identity in the lower-right block; the result again has
/// unit determinant.
pub fn embed_sl2(d: &Mat2C) -> Result<Mat4C, Error> {
    check_sl2(d)?;
    let mut m = Mat4C::identity();
    for r in 0..2 {
        for col in 0..2 {
            m.e[r][col] = d.e[r][col];
        }
    }
    Ok(m)
}

fn check_sl2(d: &Mat2C) -> Result<(), Error> {
    let det = d.det();
    let deviation = (det - c(1.0, 0.0)).norm();
    if deviation > SL2_DET_TOL {
        return Err(Error::NotUnimodular {
            det_re: det.re,
            det_im: det.im,
            tol: SL2_DET_TOL,
        });
    }
    Ok(())
}

/// Closed-form blocks of `L` for an embedded 2×2 matrix: the 4×4 vector
/// block on indices 0..=3 and the 4×4 spinor block acting on both θ and ϑ.
#[derive(Clone, Copy, PartialEq, Debug, Serialize)]
pub struct Sl2Blocks {
    /// Lorentz block `Λ^α_β`, quadratic in the 2×2 entries.
    pub vector: [[f64; 4]; 4],
    /// Majorana block `M^i_j`, linear in the 2×2 entries.
    pub spinor: [[f64; 4]; 4],
}

impl Sl2Blocks {
    /// Assembles the full 16×16 matrix: vector block on 0..=3, spinor block
    /// on 4..=7 and on 9..=12, ones at (8,8), (13,13), (14,14), (15,15),
    /// zeros everywhere else.
    pub fn to_l16(&self) -> L16 {
        let mut l = L16::zero();
        for a in 0..4 {
            for b in 0..4 {
                l.0[a][b] = self.vector[a][b];
                l.0[4 + a][4 + b] = self.spinor[a][b];
                l.0[9 + a][9 + b] = self.spinor[a][b];
            }
        }
        l.0[8][8] = 1.0;
        l.0[13][13] = 1.0;
        l.0[14][14] = 1.0;
        l.0[15][15] = 1.0;
        l
    }
}

/// Closed-form vector and spinor blocks, computed directly from the 2×2
/// entries rather than through traces.
///
/// Each expression below is of the form `z + z̄` or `i(z − z̄)` (scaled by
/// ½), so the imaginary parts are pure rounding; they are bounded and
/// dropped like the trace residues.
pub fn l_blocks_sl2(d: &Mat2C) -> Result<Sl2Blocks, Error> {
    check_sl2(d)?;
    let d11 = d.e[0][0];
    let d12 = d.e[0][1];
    let d21 = d.e[1][0];
    let d22 = d.e[1][1];
    let i = c(0.0, 1.0);
    let half = c(0.5, 0.0);
    let ih = i * half;
    let cj = |z: C64| z.conj();

    let vector_c: [[C64; 4]; 4] = [
        [
            half * (d11 * cj(d11) + d12 * cj(d12) + d21 * cj(d21) + d22 * cj(d22)),
            half * (d11 * cj(d12) + d21 * cj(d22) + d12 * cj(d11) + d22 * cj(d21)),
            ih * (d12 * cj(d11) + d22 * cj(d21) - d11 * cj(d12) - d21 * cj(d22)),
            half * (d11 * cj(d11) + d21 * cj(d21) - d12 * cj(d12) - d22 * cj(d22)),
        ],
        [
            half * (d11 * cj(d21) + d21 * cj(d11) + d12 * cj(d22) + d22 * cj(d12)),
            half * (d11 * cj(d22) + d21 * cj(d12) + d12 * cj(d21) + d22 * cj(d11)),
            ih * (d12 * cj(d21) + d22 * cj(d11) - d11 * cj(d22) - d21 * cj(d12)),
            half * (d11 * cj(d21) + d21 * cj(d11) - d12 * cj(d22) - d22 * cj(d12)),
        ],
        [
            ih * (d11 * cj(d21) - d21 * cj(d11) + d12 * cj(d22) - d22 * cj(d12)),
            ih * (d11 * cj(d22) - d21 * cj(d12) + d12 * cj(d21) - d22 * cj(d11)),
            half * (d11 * cj(d22) + d22 * cj(d11) - d12 * cj(d21) - d21 * cj(d12)),
            ih * (d11 * cj(d21) - d21 * cj(d11) - d12 * cj(d22) + d22 * cj(d12)),
        ],
        [
            half * (d11 * cj(d11) - d21 * cj(d21) + d12 * cj(d12) - d22 * cj(d22)),
            half * (d11 * cj(d12) - d21 * cj(d22) + d12 * cj(d11) - d22 * cj(d21)),
            ih * (d12 * cj(d11) - d22 * cj(d21) - d11 * cj(d12) + d21 * cj(d22)),
            half * (d11 * cj(d11) - d12 * cj(d12) - d21 * cj(d21) + d22 * cj(d22)),
        ],
    ];

    let spinor_c: [[C64; 4]; 4] = [
        [
            half * (cj(d11) + d11),
            ih * (cj(d11) - d11),
            half * (cj(d12) + d12),
            ih * (cj(d12) - d12),
        ],
        [
            ih * (d11 - cj(d11)),
            half * (d11 + cj(d11)),
            ih * (d12 - cj(d12)),
            half * (d12 + cj(d12)),
        ],
        [
            half * (cj(d21) + d21),
            ih * (cj(d21) - d21),
            half * (cj(d22) + d22),
            ih * (cj(d22) - d22),
        ],
        [
            ih * (d21 - cj(d21)),
            half * (d21 + cj(d21)),
            ih * (d22 - cj(d22)),
            half * (d22 + cj(d22)),
        ],
    ];

    let scale = (d11.norm_sqr() + d12.norm_sqr() + d21.norm_sqr() + d22.norm_sqr()).max(1.0);
    let mut blocks = Sl2Blocks {
        vector: [[0.0; 4]; 4],
        spinor: [[0.0; 4]; 4],
    };
    for r in 0..4 {
        for col in 0..4 {
            debug_assert!(vector_c[r][col].im.abs() <= L_RESIDUE_BOUND * scale);
            debug_assert!(spinor_c[r][col].im.abs() <= L_RESIDUE_BOUND * scale);
            blocks.vector[r][col] = vector_c[r][col].re;
            blocks.spinor[r][col] = spinor_c[r][col].re;
        }
    }
    Ok(blocks)
}

/// Applies the split form of the action: vector block on `X^0..X^3`, the
/// spinor block on both 4-spinor slices, scalars untouched. Equals
/// `induced_transform(embed_sl2(d), X)`.
pub fn split_action_sl2(d: &Mat2C, x: &Vec16) -> Result<Vec16, Error> {
    let blocks = l_blocks_sl2(d)?;
    let mut out = *x;
    for a in 0..4 {
        let mut v = 0.0;
        let mut th = 0.0;
        let mut vth = 0.0;
        for b in 0..4 {
            v += blocks.vector[a][b] * x.0[b];
            th += blocks.spinor[a][b] * x.0[4 + b];
            vth += blocks.spinor[a][b] * x.0[9 + b];
        }
        out.0[a] = v;
        out.0[4 + a] = th;
        out.0[9 + a] = vth;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herm::quartic_det;
    use crate::sample::{rng, sl2_sample, vec16_uniform};

    #[test]
    fn identity_leaves_components_fixed() {
        let mut r = rng(21);
        let x = vec16_uniform(&mut r);
        let y = induced_transform(&Mat4C::identity(), &x);
        assert!(x.max_abs_diff(&y) < 1e-15);
    }

    #[test]
    fn l_of_identity_is_identity() {
        let l = l_matrix(&Mat4C::identity()).unwrap();
        assert!(l.max_abs_diff(&L16::identity()) < 1e-14);
    }

    #[test]
    fn scaling_by_two_scales_quartic_by_256() {
        let mut r = rng(22);
        let x = vec16_uniform(&mut r);
        let d = Mat4C::identity().scale(c(2.0, 0.0));
        let q0 = quartic_det(&x);
        let q1 = quartic_det(&induced_transform(&d, &x));
        assert!((q1 - 256.0 * q0).abs() < 1e-9 * q0.abs().max(1.0));
    }

    #[test]
    fn embed_rejects_non_unit_determinant() {
        let d = Mat2C::from_rows([[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert!(matches!(embed_sl2(&d), Err(Error::NotUnimodular { .. })));
    }

    #[test]
    fn embed_diag_example() {
        let d = Mat2C::from_rows([[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]]);
        let m = embed_sl2(&d).unwrap();
        assert_eq!(m.e[0][0], c(2.0, 0.0));
        assert_eq!(m.e[1][1], c(0.5, 0.0));
        assert_eq!(m.e[2][2], c(1.0, 0.0));
        assert_eq!(m.e[3][3], c(1.0, 0.0));
        assert!((m.det() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn embedding_is_multiplicative() {
        let mut r = rng(23);
        let d1 = sl2_sample(&mut r);
        let d2 = sl2_sample(&mut r);
        let lhs = &embed_sl2(&d1).unwrap() * &embed_sl2(&d2).unwrap();
        let prod = &d1 * &d2;
        // det(d1·d2) = 1 only up to rounding; re-check through the embedded product.
        let rhs = {
            let mut m = Mat4C::identity();
            for a in 0..2 {
                for b in 0..2 {
                    m.e[a][b] = prod.e[a][b];
                }
            }
            m
        };
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn blocks_of_identity_are_identity() {
        let blocks = l_blocks_sl2(&Mat2C::identity()).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let expected = if a == b { 1.0 } else { 0.0 };
                assert_eq!(blocks.vector[a][b], expected);
                assert_eq!(blocks.spinor[a][b], expected);
            }
        }
    }

    #[test]
    fn blocks_match_trace_route() {
        let mut r = rng(24);
        for _ in 0..25 {
            let d = sl2_sample(&mut r);
            let closed = l_blocks_sl2(&d).unwrap().to_l16();
            let traced = l_matrix(&embed_sl2(&d).unwrap()).unwrap();
            assert!(closed.max_abs_diff(&traced) < 1e-12);
        }
    }

    #[test]
    fn split_action_matches_induced() {
        let mut r = rng(25);
        for _ in 0..25 {
            let d = sl2_sample(&mut r);
            let x = vec16_uniform(&mut r);
            let fast = split_action_sl2(&d, &x).unwrap();
            let full = induced_transform(&embed_sl2(&d).unwrap(), &x);
            assert!(fast.max_abs_diff(&full) < 1e-10);
        }
    }

    #[test]
    fn scalars_are_fixed() {
        let mut r = rng(26);
        let d = sl2_sample(&mut r);
        let mut x = Vec16::zero();
        x.0[8] = 0.7;
        x.0[13] = -0.3;
        x.0[14] = 1.9;
        x.0[15] = 0.2;
        let y = split_action_sl2(&d, &x).unwrap();
        assert!(x.max_abs_diff(&y) < 1e-15);
    }

    #[test]
    fn vector_block_is_even_in_d() {
        let mut r = rng(27);
        let d = sl2_sample(&mut r);
        let minus = Mat2C::from_rows([
            [-d.e[0][0], -d.e[0][1]],
            [-d.e[1][0], -d.e[1][1]],
        ]);
        let b1 = l_blocks_sl2(&d).unwrap();
        let b2 = l_blocks_sl2(&minus).unwrap();
        assert_eq!(b1.vector, b2.vector);
    }

    #[test]
    fn trace_residues_cancel_pairwise() {
        // Conjugate-mirrored products round identically, so the imaginary
        // parts of the 256 traces cancel exactly; only a corrupted basis
        // table could trip the residue gate.
        let mut r = rng(28);
        for _ in 0..10 {
            let d = crate::sample::mat4_uniform(&mut r);
            assert_eq!(l_realness_residue(&d), 0.0);
        }
    }
}
