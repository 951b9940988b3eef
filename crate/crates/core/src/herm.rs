//! The 16-dimensional real space of Hermitian 4×4 matrices.
//!
//! A 16-vector `X` is identified with the Hermitian matrix `Σ_A X^A τ_A`
//! over the sixteen basis matrices `τ_0..τ_15` (entries in `{0, ±1, ±i}`).
//! The dual set `τ^A` differs only at `A = 8, 15`, where `τ^A = 2τ_A`; it
//! satisfies the trace duality `Tr(τ^A τ_B) = 2δ^A_B`, which makes component
//! extraction a pair of exact half-traces.
//!
//! The quartic length form `|X|⁴ = det(Σ X^A τ_A)` is available both as a
//! numeric determinant ([`quartic_det`]) and as an exact integer-coefficient
//! polynomial in the sixteen components ([`GTensor`]). The determinant is
//! ground truth; the polynomial is expanded from it symbolically, never
//! transcribed by hand.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::linalg::{c, Mat4C};
use crate::Error;

/// Gaussian integer; exact arithmetic for τ entries and G coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub(crate) struct Gint {
    pub re: i64,
    pub im: i64,
}

impl Gint {
    pub(crate) const ZERO: Gint = Gint { re: 0, im: 0 };

    pub(crate) fn new(re: i64, im: i64) -> Gint {
        Gint { re, im }
    }

    pub(crate) fn mul(self, o: Gint) -> Gint {
        Gint {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    pub(crate) fn add(self, o: Gint) -> Gint {
        Gint {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

/// Nonzero entries of `τ_A` as `(row, col, re, im)` with `re, im ∈ {−1, 0, 1}`.
///
/// Single source of truth for the basis: the floating-point matrices, the
/// integer trace arithmetic, and the symbolic determinant expansion all read
/// from this table.
pub(crate) fn tau_entries(a: usize) -> &'static [(usize, usize, i64, i64)] {
    match a {
        0 => &[(0, 0, 1, 0), (1, 1, 1, 0)],
        1 => &[(0, 1, 1, 0), (1, 0, 1, 0)],
        2 => &[(0, 1, 0, -1), (1, 0, 0, 1)],
        3 => &[(0, 0, 1, 0), (1, 1, -1, 0)],
        4 => &[(0, 2, 1, 0), (2, 0, 1, 0)],
        5 => &[(0, 2, 0, -1), (2, 0, 0, 1)],
        6 => &[(1, 2, 1, 0), (2, 1, 1, 0)],
        7 => &[(1, 2, 0, -1), (2, 1, 0, 1)],
        8 => &[(2, 2, 1, 0)],
        9 => &[(0, 3, 1, 0), (3, 0, 1, 0)],
        10 => &[(0, 3, 0, -1), (3, 0, 0, 1)],
        11 => &[(1, 3, 1, 0), (3, 1, 1, 0)],
        12 => &[(1, 3, 0, -1), (3, 1, 0, 1)],
        13 => &[(2, 3, 1, 0), (3, 2, 1, 0)],
        14 => &[(2, 3, 0, -1), (3, 2, 0, 1)],
        15 => &[(3, 3, 1, 0)],
        _ => panic!("basis index {a} out of range 0..16"),
    }
}

/// Dual scaling: `τ^A = dual_factor(A) · τ_A`.
pub fn dual_factor(a: usize) -> i64 {
    if a == 8 || a == 15 {
        2
    } else {
        1
    }
}

pub(crate) type TauTableInt = [[[Gint; 4]; 4]; 16];

fn build_int_table() -> TauTableInt {
    let mut t = [[[Gint::ZERO; 4]; 4]; 16];
    for a in 0..16 {
        for &(r, col, re, im) in tau_entries(a) {
            t[a][r][col] = Gint::new(re, im);
        }
    }
    t
}

struct TauBasis {
    tau: [Mat4C; 16],
    dual: [Mat4C; 16],
    int: TauTableInt,
}

fn basis() -> &'static TauBasis {
    static BASIS: OnceLock<TauBasis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let int = build_int_table();
        let mut tau = [Mat4C::zero(); 16];
        let mut dual = [Mat4C::zero(); 16];
        for a in 0..16 {
            for r in 0..4 {
                for col in 0..4 {
                    let g = int[a][r][col];
                    tau[a].e[r][col] = c(g.re as f64, g.im as f64);
                    let f = dual_factor(a) as f64;
                    dual[a].e[r][col] = c(g.re as f64 * f, g.im as f64 * f);
                }
            }
        }
        TauBasis { tau, dual, int }
    })
}

/// The basis matrix `τ_A`, `A = 0..=15`.
pub fn tau(a: usize) -> &'static Mat4C {
    &basis().tau[a]
}

/// The dual matrix `τ^A` (`τ_A` except `τ^8 = 2τ_8`, `τ^15 = 2τ_15`).
pub fn tau_dual(a: usize) -> &'static Mat4C {
    &basis().dual[a]
}

pub(crate) fn tau_int() -> &'static TauTableInt {
    &basis().int
}

/// Max deviation of `Tr(τ^A τ_B)` from `2δ^A_B` over all 256 pairs,
/// computed in Gaussian-integer arithmetic; 0 means the duality holds
/// exactly.
pub fn trace_duality_defect() -> i64 {
    trace_duality_defect_of(tau_int())
}

pub(crate) fn trace_duality_defect_of(table: &TauTableInt) -> i64 {
    let mut worst = 0i64;
    for a in 0..16 {
        let f = Gint::new(dual_factor(a), 0);
        for b in 0..16 {
            let mut tr = Gint::ZERO;
            for r in 0..4 {
                for k in 0..4 {
                    tr = tr.add(f.mul(table[a][r][k]).mul(table[b][k][r]));
                }
            }
            let target = if a == b { 2 } else { 0 };
            worst = worst.max((tr.re - target).abs()).max(tr.im.abs());
        }
    }
    worst
}

/// 16 real components of an element of the Hermitian space, index order
/// matching the τ basis (`A = 0..=15`).
#[derive(Clone, Copy, PartialEq, Debug, Default)]
pub struct Vec16(pub [f64; 16]);

impl Vec16 {
    pub const fn zero() -> Self {
        Vec16([0.0; 16])
    }

    /// Unit vector `e_A`.
    pub fn unit(a: usize) -> Self {
        let mut x = Vec16::zero();
        x.0[a] = 1.0;
        x
    }

    pub fn scale(&self, t: f64) -> Vec16 {
        let mut x = *self;
        for v in x.0.iter_mut() {
            *v *= t;
        }
        x
    }

    pub fn max_abs_diff(&self, other: &Vec16) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl std::ops::Index<usize> for Vec16 {
    type Output = f64;

    fn index(&self, a: usize) -> &f64 {
        &self.0[a]
    }
}

impl Serialize for Vec16 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vec16 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vals = <[f64; 16]>::deserialize(d)?;
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(serde::de::Error::custom("non-finite component"));
        }
        Ok(Vec16(vals))
    }
}

/// `Σ_A X^A τ_A`: the Hermitian matrix carrying the 16 components.
pub fn pack(x: &Vec16) -> Mat4C {
    let mut m = Mat4C::zero();
    for a in 0..16 {
        for &(r, col, re, im) in tau_entries(a) {
            m.e[r][col] += c(re as f64 * x.0[a], im as f64 * x.0[a]);
        }
    }
    m
}

/// Component extraction `X^A = ½ Tr(τ^A M)` without the hermiticity gate.
///
/// Only the real part of each half-trace is kept, so for inputs that are
/// Hermitian up to rounding this hermitizes implicitly.
pub(crate) fn components(m: &Mat4C) -> Vec16 {
    let mut x = [0.0f64; 16];
    for a in 0..16 {
        let f = dual_factor(a) as f64;
        let mut tr = c(0.0, 0.0);
        for &(r, col, re, im) in tau_entries(a) {
            // Tr(τ^A M) picks up τ^A[r][c]·M[c][r].
            tr += c(re as f64, im as f64) * m.e[col][r];
        }
        x[a] = 0.5 * f * tr.re;
    }
    Vec16(x)
}

/// Coordinates of a Hermitian matrix in the τ basis.
///
/// Rejects input whose deviation from hermiticity exceeds `tol`; such a
/// matrix has no real coordinates and indicates corrupted caller data.
pub fn unpack(m: &Mat4C, tol: f64) -> Result<Vec16, Error> {
    let deviation = m.hermitian_deviation();
    if !(deviation <= tol) {
        return Err(Error::NotHermitian { deviation, tol });
    }
    Ok(components(m))
}

/// The fourth power of the length: `|X|⁴ = det(Σ X^A τ_A)`.
///
/// The determinant of a Hermitian matrix is real; the imaginary residue is
/// pure rounding and is asserted to stay below `1e-10 · max(1, ‖M‖⁴)`
/// before being dropped. A violation means the basis table is broken.
pub fn quartic_det(x: &Vec16) -> f64 {
    let m = pack(x);
    let det = m.det();
    let scale = m.max_abs().powi(4).max(1.0);
    assert!(
        det.im.abs() <= 1e-10 * scale,
        "imaginary residue {} exceeds bound for a Hermitian determinant",
        det.im
    );
    det.re
}

/// Result of the length: defined only where the quartic is non-negative.
///
/// The quartic form is indefinite, so `|X| = (quartic)^{1/4}` does not exist
/// as a real number on negative input; that outcome is modeled as `None`
/// rather than an error.
pub fn finsler_length(x: &Vec16) -> Option<f64> {
    let q = quartic_det(x);
    if q >= 0.0 {
        Some(q.powf(0.25))
    } else {
        None
    }
}

/// One row of the serialized coefficient table.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GTensorEntry {
    /// Sorted index multiset `A ≤ B ≤ C ≤ D`.
    pub indices: [u8; 4],
    /// Exact integer coefficient under the once-per-multiset convention.
    pub coefficient: i64,
}

/// Integer coefficient table of the quartic form.
///
/// Keys are sorted index multisets `{A ≤ B ≤ C ≤ D}`; full symmetry is
/// structural. The stored coefficient `c` is the once-per-multiset value:
///
/// ```text
/// det(Σ X^A τ_A) = Σ_multisets c_{ABCD} · X^A X^B X^C X^D
/// ```
///
/// with each distinct monomial counted exactly once. The fully symmetric
/// tensor component (every index permutation counted separately) is
/// `c / multiplicity`, exposed by [`GTensor::symmetric_component`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTensor {
    coeffs: BTreeMap<[u8; 4], i64>,
}

impl GTensor {
    /// Expands `det(Σ_A X^A τ_A)` symbolically over the 16 indeterminates.
    ///
    /// The τ entries are Gaussian integers, so the expansion is exact: the
    /// determinant is summed over all 24 column permutations, each product
    /// of four linear entry forms is distributed, and the imaginary parts
    /// must cancel identically.
    pub fn build() -> GTensor {
        // entry_forms[r][c] = list of (A, coeff) with τ_A[r][c] = coeff ≠ 0
        let mut entry_forms: [[Vec<(u8, Gint)>; 4]; 4] = Default::default();
        for a in 0..16 {
            for &(r, col, re, im) in tau_entries(a) {
                entry_forms[r][col].push((a as u8, Gint::new(re, im)));
            }
        }

        let mut acc: BTreeMap<[u8; 4], Gint> = BTreeMap::new();
        for (perm, sign) in permutations4() {
            for (a0, c0) in &entry_forms[0][perm[0]] {
                for (a1, c1) in &entry_forms[1][perm[1]] {
                    for (a2, c2) in &entry_forms[2][perm[2]] {
                        for (a3, c3) in &entry_forms[3][perm[3]] {
                            let mut key = [*a0, *a1, *a2, *a3];
                            key.sort_unstable();
                            let mut v = c0.mul(*c1).mul(*c2).mul(*c3);
                            if sign < 0 {
                                v = Gint::new(-v.re, -v.im);
                            }
                            let slot = acc.entry(key).or_insert(Gint::ZERO);
                            *slot = slot.add(v);
                        }
                    }
                }
            }
        }

        let mut coeffs = BTreeMap::new();
        for (key, v) in acc {
            assert!(
                v.im == 0,
                "imaginary coefficient survived the Hermitian expansion at {key:?}"
            );
            if v.re != 0 {
                coeffs.insert(key, v.re);
            }
        }
        GTensor { coeffs }
    }

    /// Once-per-multiset coefficient; 0 for absent multisets. Indices may be
    /// given in any order.
    pub fn coefficient(&self, mut indices: [u8; 4]) -> i64 {
        indices.sort_unstable();
        self.coeffs.get(&indices).copied().unwrap_or(0)
    }

    /// Fully symmetric tensor component `G_ABCD` (tensor convention): the
    /// multiset coefficient divided by the number of distinct permutations.
    pub fn symmetric_component(&self, indices: [u8; 4]) -> f64 {
        self.coefficient(indices) as f64 / multiplicity(indices) as f64
    }

    /// Evaluates the quartic polynomial at `x`. Agrees with [`quartic_det`]
    /// to roundoff.
    pub fn evaluate(&self, x: &Vec16) -> f64 {
        let mut sum = 0.0;
        for (key, &coeff) in &self.coeffs {
            let m = x.0[key[0] as usize]
                * x.0[key[1] as usize]
                * x.0[key[2] as usize]
                * x.0[key[3] as usize];
            sum += coeff as f64 * m;
        }
        sum
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Entries in canonical (sorted-key) order.
    pub fn entries(&self) -> impl Iterator<Item = GTensorEntry> + '_ {
        self.coeffs.iter().map(|(&indices, &coefficient)| GTensorEntry {
            indices,
            coefficient,
        })
    }

    /// Cached instance; the expansion is deterministic, so sharing is safe.
    pub fn get() -> &'static GTensor {
        static G: OnceLock<GTensor> = OnceLock::new();
        G.get_or_init(GTensor::build)
    }
}

/// Evaluates the expanded quartic polynomial; same value as [`quartic_det`].
pub fn quartic_form(x: &Vec16, g: &GTensor) -> f64 {
    g.evaluate(x)
}

/// Number of distinct permutations of an index multiset (`24 / ∏ kᵢ!`).
pub fn multiplicity(mut indices: [u8; 4]) -> i64 {
    indices.sort_unstable();
    let mut denom = 1i64;
    let mut run = 1i64;
    for k in 1..4 {
        if indices[k] == indices[k - 1] {
            run += 1;
            denom *= run;
        } else {
            run = 1;
        }
    }
    24 / denom
}

/// All permutations of `(0,1,2,3)` with parity, fixed order.
pub(crate) fn permutations4() -> Vec<([usize; 4], i64)> {
    let mut out = Vec::with_capacity(24);
    let items = [0usize, 1, 2, 3];
    permute(&mut out, items, 0);
    out
}

fn permute(out: &mut Vec<([usize; 4], i64)>, mut items: [usize; 4], k: usize) {
    if k == 4 {
        out.push((items, parity(&items)));
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(out, items, k + 1);
        items.swap(k, i);
    }
}

fn parity(p: &[usize; 4]) -> i64 {
    let mut sign = 1i64;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}
