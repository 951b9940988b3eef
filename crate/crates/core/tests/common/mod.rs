//! Independent reference implementations used as oracles. These must stay
//! decoupled from the library's production paths: determinants by explicit
//! Leibniz sum instead of LU, products by plain index loops, the 4-product
//! by the full 256-term Levi-Civita contraction.

use finsler4_core::{c, C64, Mat4C, Spinor4};

/// Leibniz determinant: sum over all 24 permutations with explicit parity.
pub fn leibniz_det(m: &Mat4C) -> C64 {
    let mut sum = c(0.0, 0.0);
    permute([0, 1, 2, 3], 0, &mut |perm| {
        let mut term = c(sign_of(perm) as f64, 0.0);
        for (row, &col) in perm.iter().enumerate() {
            term *= m.e[row][col];
        }
        sum += term;
    });
    sum
}

/// Plain row-by-column product.
pub fn naive_mul(a: &Mat4C, b: &Mat4C) -> Mat4C {
    let mut out = Mat4C::zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut s = c(0.0, 0.0);
            for k in 0..4 {
                s += a.e[i][k] * b.e[k][j];
            }
            out.e[i][j] = s;
        }
    }
    out
}

/// `ε_{abcd} ξ^a η^b λ^c μ^d` summed over all 256 index tuples.
pub fn epsilon_sum_product(xi: &Spinor4, eta: &Spinor4, lam: &Spinor4, mu: &Spinor4) -> C64 {
    let mut sum = c(0.0, 0.0);
    for a in 0..4 {
        for b in 0..4 {
            for l in 0..4 {
                for m in 0..4 {
                    let eps = levi_civita([a, b, l, m]);
                    if eps != 0 {
                        sum += c(eps as f64, 0.0) * xi.0[a] * eta.0[b] * lam.0[l] * mu.0[m];
                    }
                }
            }
        }
    }
    sum
}

/// Levi-Civita symbol on four indices: 0 on repeats, else permutation sign.
pub fn levi_civita(idx: [usize; 4]) -> i64 {
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0;
            }
        }
    }
    sign_of(idx)
}

fn sign_of(perm: [usize; 4]) -> i64 {
    let mut sign = 1i64;
    for i in 0..4 {
        for j in i + 1..4 {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn permute(mut items: [usize; 4], k: usize, visit: &mut impl FnMut([usize; 4])) {
    if k == 4 {
        visit(items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Spinor bilinear `θ̄ M ϑ` by full component summation, no intermediate row.
pub fn naive_bilinear(theta: &[f64; 4], m: &Mat4C, vartheta: &[f64; 4]) -> C64 {
    let g0 = finsler4_core::reduction::gamma(0);
    let mut sum = c(0.0, 0.0);
    for a in 0..4 {
        for b in 0..4 {
            for k in 0..4 {
                sum += c(theta[a], 0.0) * g0.e[a][b] * m.e[b][k] * c(vartheta[k], 0.0);
            }
        }
    }
    sum
}

/// Determinant of a real 4×4 matrix through the Leibniz sum.
pub fn real_leibniz_det(m: &[[f64; 4]; 4]) -> f64 {
    let mut cm = Mat4C::zero();
    for r in 0..4 {
        for col in 0..4 {
            cm.e[r][col] = c(m[r][col], 0.0);
        }
    }
    leibniz_det(&cm).re
}
