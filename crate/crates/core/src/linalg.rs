//! Fixed-shape complex matrix arithmetic: 4×4 and 2×2 matrices over `Complex64`.
//!
//! Everything downstream (spinor products, the Hermitian 16-space, induced
//! isometries, the gamma algebra) is built on these two shapes; there is no
//! general n×n linear algebra here on purpose. Row/column indices are
//! 0-based (`0..=3`); texts that number components 1..4 map to 0..3.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the types are freely shareable across threads.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Shorthand for the scalar type used throughout the crate.
pub type C64 = Complex64;

/// `re + im·i` without the `Complex64::new` noise at call sites.
#[inline]
pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub(crate) const C_ZERO: C64 = c(0.0, 0.0);
pub(crate) const C_ONE: C64 = c(1.0, 0.0);

/// 4×4 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Mat4C {
    pub e: [[C64; 4]; 4],
}

/// 2×2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Mat2C {
    pub e: [[C64; 2]; 2],
}

impl Mat4C {
    pub const fn zero() -> Self {
        Mat4C {
            e: [[C_ZERO; 4]; 4],
        }
    }

    pub const fn identity() -> Self {
        let mut e = [[C_ZERO; 4]; 4];
        e[0][0] = C_ONE;
        e[1][1] = C_ONE;
        e[2][2] = C_ONE;
        e[3][3] = C_ONE;
        Mat4C { e }
    }

    pub fn from_rows(rows: [[C64; 4]; 4]) -> Self {
        Mat4C { e: rows }
    }

    /// Builds the matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: [[C64; 4]; 4]) -> Self {
        let mut e = [[C_ZERO; 4]; 4];
        for (j, col) in cols.iter().enumerate() {
            for r in 0..4 {
                e[r][j] = col[r];
            }
        }
        Mat4C { e }
    }

    pub fn diag(d: [C64; 4]) -> Self {
        let mut m = Mat4C::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.e[k][k] = v;
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat4C {
        let mut a = Mat4C::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.e[r][c] = self.e[c][r].conj();
            }
        }
        a
    }

    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1] + self.e[2][2] + self.e[3][3]
    }

    /// Determinant by partial-pivot LU. Total on finite input: a singular
    /// matrix yields 0, never an error.
    pub fn det(&self) -> C64 {
        let mut a = self.e;
        let mut det = C_ONE;
        for k in 0..4 {
            let mut piv = k;
            let mut best = a[k][k].norm_sqr();
            for r in k + 1..4 {
                let m = a[r][k].norm_sqr();
                if m > best {
                    best = m;
                    piv = r;
                }
            }
            if best == 0.0 {
                return C_ZERO;
            }
            if piv != k {
                a.swap(k, piv);
                det = -det;
            }
            det *= a[k][k];
            for r in k + 1..4 {
                let f = a[r][k] / a[k][k];
                for c in k + 1..4 {
                    let t = f * a[k][c];
                    a[r][c] -= t;
                }
            }
        }
        det
    }

    /// Max entry magnitude of `self − self⁺`; 0 for exactly Hermitian input.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                dev = dev.max((self.e[r][c] - self.e[c][r].conj()).norm());
            }
        }
        dev
    }

    /// True iff the max-entry magnitude of `self − self⁺` is ≤ `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Max entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Sum of squared entry magnitudes (squared Frobenius norm).
    pub fn frob_sq(&self) -> f64 {
        self.e.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    /// Max entry magnitude of `self − other`.
    pub fn max_abs_diff(&self, other: &Mat4C) -> f64 {
        let mut dev = 0.0f64;
        for r in 0..4 {
            for c in 0..4 {
                dev = dev.max((self.e[r][c] - other.e[r][c]).norm());
            }
        }
        dev
    }

    pub fn scale(&self, s: C64) -> Mat4C {
        let mut m = *self;
        for row in m.e.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        m
    }

    /// Matrix-vector product `self · v` on a 4-column.
    pub fn mul_vec(&self, v: &[C64; 4]) -> [C64; 4] {
        let mut out = [C_ZERO; 4];
        for r in 0..4 {
            for k in 0..4 {
                out[r] += self.e[r][k] * v[k];
            }
        }
        out
    }

    /// Matrix exponential by scaling and squaring with a Taylor kernel.
    ///
    /// Accurate to machine precision for the moderate norms this crate
    /// feeds it (group-sample generators with entries of order one).
    pub fn expm(&self) -> Mat4C {
        let norm = self.max_abs();
        let mut squarings = 0u32;
        let mut scaled = *self;
        if norm > 0.25 {
            squarings = (norm / 0.25).log2().ceil() as u32;
            let f = c(0.5f64.powi(squarings as i32), 0.0);
            scaled = scaled.scale(f);
        }
        let mut sum = Mat4C::identity();
        let mut term = Mat4C::identity();
        for k in 1..=24u32 {
            term = &term * &scaled;
            term = term.scale(c(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
            if term.max_abs() < 1e-20 {
                break;
            }
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        sum
    }

    pub fn add(&self, other: &Mat4C) -> Mat4C {
        let mut m = *self;
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] += other.e[r][c];
            }
        }
        m
    }

    pub fn sub(&self, other: &Mat4C) -> Mat4C {
        let mut m = *self;
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] -= other.e[r][c];
            }
        }
        m
    }
}

impl std::ops::Mul for &Mat4C {
    type Output = Mat4C;

    fn mul(self, rhs: &Mat4C) -> Mat4C {
        let mut out = Mat4C::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = self.e[r][k];
                for c in 0..4 {
                    out.e[r][c] += a * rhs.e[k][c];
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Mat4C {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.e[r][c]
    }
}

impl Mat2C {
    pub const fn zero() -> Self {
        Mat2C {
            e: [[C_ZERO; 2]; 2],
        }
    }

    pub const fn identity() -> Self {
        let mut e = [[C_ZERO; 2]; 2];
        e[0][0] = C_ONE;
        e[1][1] = C_ONE;
        Mat2C { e }
    }

    pub fn from_rows(rows: [[C64; 2]; 2]) -> Self {
        Mat2C { e: rows }
    }

    pub fn det(&self) -> C64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn scale(&self, s: C64) -> Mat2C {
        let mut m = *self;
        for row in m.e.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        m
    }
}

impl std::ops::Mul for &Mat2C {
    type Output = Mat2C;

    fn mul(self, rhs: &Mat2C) -> Mat2C {
        let mut out = Mat2C::zero();
        for r in 0..2 {
            for k in 0..2 {
                let a = self.e[r][k];
                for c in 0..2 {
                    out.e[r][c] += a * rhs.e[k][c];
                }
            }
        }
        out
    }
}

/// Rejects non-finite components at the JSON boundary.
fn finite_pair<E: serde::de::Error>(p: [f64; 2]) -> Result<C64, E> {
    if p[0].is_finite() && p[1].is_finite() {
        Ok(c(p[0], p[1]))
    } else {
        Err(E::custom("non-finite complex component"))
    }
}

// JSON convention shared with the CLI: a complex number is a 2-array
// [re, im]; matrices are nested arrays of those pairs.

impl Serialize for Mat4C {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut rows = [[[0.0f64; 2]; 4]; 4];
        for r in 0..4 {
            for col in 0..4 {
                rows[r][col] = [self.e[r][col].re, self.e[r][col].im];
            }
        }
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat4C {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = <[[[f64; 2]; 4]; 4]>::deserialize(d)?;
        let mut m = Mat4C::zero();
        for r in 0..4 {
            for col in 0..4 {
                m.e[r][col] = finite_pair::<D::Error>(rows[r][col])?;
            }
        }
        Ok(m)
    }
}

impl Serialize for Mat2C {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut rows = [[[0.0f64; 2]; 2]; 2];
        for r in 0..2 {
            for col in 0..2 {
                rows[r][col] = [self.e[r][col].re, self.e[r][col].im];
            }
        }
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat2C {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = <[[[f64; 2]; 2]; 2]>::deserialize(d)?;
        let mut m = Mat2C::zero();
        for r in 0..2 {
            for col in 0..2 {
                m.e[r][col] = finite_pair::<D::Error>(rows[r][col])?;
            }
        }
        Ok(m)
    }
}

/// A 4-component complex column: the basic spinor-valued data of the crate.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Spinor4(pub [C64; 4]);

impl Spinor4 {
    pub const fn zero() -> Self {
        Spinor4([C_ZERO; 4])
    }

    /// The a-th basis column, `a = 0..=3`.
    pub fn unit(a: usize) -> Self {
        let mut s = Spinor4::zero();
        s.0[a] = C_ONE;
        s
    }

    pub fn scale(&self, f: C64) -> Spinor4 {
        Spinor4([self.0[0] * f, self.0[1] * f, self.0[2] * f, self.0[3] * f])
    }

    pub fn add(&self, other: &Spinor4) -> Spinor4 {
        Spinor4([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
            self.0[3] + other.0[3],
        ])
    }

    /// `D · ξ`.
    pub fn transform(&self, d: &Mat4C) -> Spinor4 {
        Spinor4(d.mul_vec(&self.0))
    }
}

impl Serialize for Spinor4 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut out = [[0.0f64; 2]; 4];
        for (k, z) in self.0.iter().enumerate() {
            out[k] = [z.re, z.im];
        }
        out.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spinor4 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = <[[f64; 2]; 4]>::deserialize(d)?;
        let mut s = Spinor4::zero();
        for k in 0..4 {
            s.0[k] = finite_pair::<D::Error>(pairs[k])?;
        }
        Ok(s)
    }
}

/// Checks that every entry of a deserialized matrix is finite.
///
/// Kept separate from `Deserialize` so in-memory construction stays total;
/// the CLI calls this (via the impls above) only at input boundaries.
pub fn ensure_finite_mat4(m: &Mat4C) -> Result<(), Error> {
    for row in &m.e {
        for z in row {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite);
            }
        }
    }
    Ok(())
}
