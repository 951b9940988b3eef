//! Oracle comparisons: every production path checked against an independent
//! reference implementation on seeded random data, plus the published
//! coefficient table of the quartic form pinned entry by entry.

#![allow(clippy::needless_range_loop)]

mod common;

use common::{epsilon_sum_product, leibniz_det, naive_bilinear, naive_mul, real_leibniz_det};
use finsler4_core::herm::{multiplicity, pack, quartic_det, unpack, GTensor};
use finsler4_core::isometry::{embed_sl2, induced_transform, l_blocks_sl2, l_matrix};
use finsler4_core::reduction::{bilinear, gamma, gamma5, join, quartic_reduced, split};
use finsler4_core::sample::{
    mat4_uniform, real4_uniform, rng, sl2_sample, sl4_sample, spinor_uniform, su22_sample,
    vec16_uniform,
};
use finsler4_core::spinor::{is_su22, symplectic_product, twistor_deviation};
use finsler4_core::{c, Mat4C};

#[test]
fn det_matches_leibniz_sum() {
    let mut r = rng(101);
    for _ in 0..200 {
        let m = mat4_uniform(&mut r);
        let fast = m.det();
        let reference = leibniz_det(&m);
        assert!(
            (fast - reference).norm() <= 1e-12 * reference.norm().max(1.0),
            "LU {fast} vs Leibniz {reference}"
        );
    }
}

#[test]
fn det_is_multiplicative() {
    let mut r = rng(102);
    for _ in 0..200 {
        let a = mat4_uniform(&mut r);
        let b = mat4_uniform(&mut r);
        let lhs = (&a * &b).det();
        let rhs = a.det() * b.det();
        assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0));
    }
}

#[test]
fn product_matches_naive_loops() {
    let mut r = rng(103);
    for _ in 0..200 {
        let a = mat4_uniform(&mut r);
        let b = mat4_uniform(&mut r);
        assert!((&a * &b).max_abs_diff(&naive_mul(&a, &b)) <= 1e-13);
    }
}

#[test]
fn conjugation_preserves_hermiticity() {
    let mut r = rng(104);
    for _ in 0..100 {
        let x = vec16_uniform(&mut r);
        let d = mat4_uniform(&mut r);
        let m = &(&d * &pack(&x)) * &d.adjoint();
        assert!(m.is_hermitian(1e-10));
    }
}

#[test]
fn four_product_matches_levi_civita_contraction() {
    let mut r = rng(105);
    for _ in 0..100 {
        let (xi, eta) = (spinor_uniform(&mut r), spinor_uniform(&mut r));
        let (lam, mu) = (spinor_uniform(&mut r), spinor_uniform(&mut r));
        let det_route = symplectic_product(&xi, &eta, &lam, &mu);
        let sum_route = epsilon_sum_product(&xi, &eta, &lam, &mu);
        assert!((det_route - sum_route).norm() <= 1e-12 * sum_route.norm().max(1.0));
    }
}

#[test]
fn four_product_scales_with_determinant() {
    let mut r = rng(106);
    for _ in 0..100 {
        let d = mat4_uniform(&mut r);
        let (xi, eta) = (spinor_uniform(&mut r), spinor_uniform(&mut r));
        let (lam, mu) = (spinor_uniform(&mut r), spinor_uniform(&mut r));
        let before = symplectic_product(&xi, &eta, &lam, &mu);
        let after = symplectic_product(
            &xi.transform(&d),
            &eta.transform(&d),
            &lam.transform(&d),
            &mu.transform(&d),
        );
        let expected = d.det() * before;
        assert!((after - expected).norm() <= 1e-10 * expected.norm().max(1.0));
    }
}

#[test]
fn gtensor_reproduces_determinant() {
    let g = GTensor::get();
    let mut r = rng(107);
    for _ in 0..10_000 {
        let x = vec16_uniform(&mut r);
        let det = quartic_det(&x);
        let poly = g.evaluate(&x);
        assert!(
            (poly - det).abs() <= 1e-10 * det.abs().max(1.0),
            "polynomial {poly} vs determinant {det}"
        );
    }
}

/// The published coefficient table of the quartic form, one entry per sorted
/// multiset. Any mismatch here is arbitrated by the determinant expansion,
/// which is ground truth.
#[test]
fn gtensor_coefficient_table_spot_values() {
    let g = GTensor::get();
    let expected: &[([u8; 4], i64)] = &[
        // (vector square) × s8 × s15 block
        ([0, 0, 8, 15], 1),
        ([1, 1, 8, 15], -1),
        ([2, 2, 8, 15], -1),
        ([3, 3, 8, 15], -1),
        // first-spinor squares × s15
        ([0, 4, 4, 15], -1),
        ([0, 5, 5, 15], -1),
        ([0, 6, 6, 15], -1),
        ([0, 7, 7, 15], -1),
        ([1, 4, 6, 15], 2),
        ([1, 5, 7, 15], 2),
        ([2, 5, 6, 15], 2),
        ([2, 4, 7, 15], -2),
        ([3, 4, 4, 15], 1),
        ([3, 5, 5, 15], 1),
        ([3, 6, 6, 15], -1),
        ([3, 7, 7, 15], -1),
        // vector square × (s13² + s14²)
        ([0, 0, 13, 13], -1),
        ([0, 0, 14, 14], -1),
        ([1, 1, 13, 13], 1),
        ([1, 1, 14, 14], 1),
        ([2, 2, 13, 13], 1),
        ([2, 2, 14, 14], 1),
        ([3, 3, 13, 13], 1),
        ([3, 3, 14, 14], 1),
        // spinor-square × spinor-square couplings
        ([4, 4, 11, 11], 1),
        ([4, 4, 12, 12], 1),
        ([5, 5, 11, 11], 1),
        ([5, 5, 12, 12], 1),
        ([6, 6, 9, 9], 1),
        ([6, 6, 10, 10], 1),
        ([7, 7, 9, 9], 1),
        ([7, 7, 10, 10], 1),
        // s8 × second-spinor squares
        ([0, 8, 9, 9], -1),
        ([0, 8, 10, 10], -1),
        ([0, 8, 11, 11], -1),
        ([0, 8, 12, 12], -1),
        ([3, 8, 9, 9], 1),
        ([3, 8, 10, 10], 1),
        ([3, 8, 11, 11], -1),
        ([3, 8, 12, 12], -1),
        // trilinear couplings with the scalars s13/s14
        ([0, 4, 9, 13], 2),
        ([0, 4, 10, 14], 2),
        ([0, 5, 9, 14], -2),
        ([0, 5, 10, 13], 2),
        ([3, 4, 9, 13], -2),
        ([3, 4, 10, 14], -2),
        ([3, 5, 9, 14], 2),
        ([3, 5, 10, 13], -2),
        ([0, 6, 11, 13], 2),
        ([0, 6, 12, 14], 2),
        ([0, 7, 11, 14], -2),
        ([0, 7, 12, 13], 2),
        ([3, 6, 11, 13], 2),
        ([3, 6, 12, 14], 2),
        ([3, 7, 11, 14], -2),
        ([3, 7, 12, 13], 2),
        ([1, 4, 11, 13], -2),
        ([1, 4, 12, 14], -2),
        ([1, 5, 11, 14], 2),
        ([1, 5, 12, 13], -2),
        ([1, 6, 9, 13], -2),
        ([1, 6, 10, 14], -2),
        ([1, 7, 9, 14], 2),
        ([1, 7, 10, 13], -2),
        ([1, 8, 9, 11], 2),
        ([1, 8, 10, 12], 2),
        ([2, 4, 11, 14], -2),
        ([2, 4, 12, 13], 2),
        ([2, 5, 11, 13], -2),
        ([2, 5, 12, 14], -2),
        ([2, 6, 9, 14], 2),
        ([2, 6, 10, 13], -2),
        ([2, 7, 9, 13], 2),
        ([2, 7, 10, 14], 2),
        ([2, 8, 9, 12], -2),
        ([2, 8, 10, 11], 2),
        // pure-spinor quartics
        ([4, 6, 9, 11], -2),
        ([4, 6, 10, 12], -2),
        ([4, 7, 9, 12], -2),
        ([4, 7, 10, 11], 2),
        ([5, 6, 9, 12], 2),
        ([5, 6, 10, 11], -2),
        ([5, 7, 9, 11], -2),
        ([5, 7, 10, 12], -2),
        // structural zeros: rank-deficient monomials
        ([0, 0, 0, 0], 0),
        ([0, 0, 0, 8], 0),
        ([15, 15, 15, 15], 0),
        ([8, 8, 15, 15], 0),
    ];
    for &(indices, coeff) in expected {
        assert_eq!(
            g.coefficient(indices),
            coeff,
            "coefficient of multiset {indices:?}"
        );
    }
}

#[test]
fn gtensor_coefficients_are_bounded_integers() {
    // Expansion arithmetic is exact: coefficients come from at most 24
    // signed unit products, so |c| ≤ 24 (in practice ≤ 2).
    let g = GTensor::get();
    assert!(!g.is_empty());
    for entry in g.entries() {
        assert!(entry.coefficient != 0);
        assert!(entry.coefficient.abs() <= 24);
        assert!(multiplicity(entry.indices) >= 1);
        let mut sorted = entry.indices;
        sorted.sort_unstable();
        assert_eq!(sorted, entry.indices, "keys are sorted multisets");
    }
}

#[test]
fn round_trip_through_hermitian_matrices() {
    let mut r = rng(108);
    for _ in 0..1000 {
        let x = vec16_uniform(&mut r);
        let back = unpack(&pack(&x), 1e-13).expect("pack output is Hermitian");
        assert!(x.max_abs_diff(&back) <= 1e-14);
    }
}

#[test]
fn round_trip_starting_from_hermitian_matrices() {
    let mut r = rng(117);
    for _ in 0..1000 {
        let g = mat4_uniform(&mut r);
        let m = g.add(&g.adjoint()).scale(c(0.5, 0.0));
        let back = pack(&unpack(&m, 1e-13).unwrap());
        assert!(back.max_abs_diff(&m) <= 1e-13);
    }
}

#[test]
fn l_matrix_action_matches_conjugation_route() {
    let mut r = rng(109);
    for _ in 0..200 {
        let d = mat4_uniform(&mut r);
        let l = l_matrix(&d).unwrap();
        let x = vec16_uniform(&mut r);
        let via_matrix = l.apply(&x);
        let via_conjugation = induced_transform(&d, &x);
        assert!(via_matrix.max_abs_diff(&via_conjugation) <= 1e-10);
    }
}

#[test]
fn closed_form_blocks_match_trace_route_and_vanish_off_block() {
    let mut r = rng(110);
    for _ in 0..200 {
        let d = sl2_sample(&mut r);
        let closed = l_blocks_sl2(&d).unwrap().to_l16();
        let traced = l_matrix(&embed_sl2(&d).unwrap()).unwrap();
        // entrywise agreement covers the off-block zeros and the fixed ones,
        // because `to_l16` writes the strict block pattern
        assert!(closed.max_abs_diff(&traced) <= 1e-12);
    }
}

#[test]
fn lorentz_block_is_orthochronous_proper() {
    let mut r = rng(111);
    let g = [1.0f64, -1.0, -1.0, -1.0];
    for _ in 0..200 {
        let d = sl2_sample(&mut r);
        let lam = l_blocks_sl2(&d).unwrap().vector;
        for a in 0..4 {
            for b in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += lam[k][a] * g[k] * lam[k][b];
                }
                let expected = if a == b { g[a] } else { 0.0 };
                assert!((s - expected).abs() <= 1e-9, "metric entry ({a},{b})");
            }
        }
        assert!((real_leibniz_det(&lam) - 1.0).abs() <= 1e-9);
        assert!(lam[0][0] >= 1.0 - 1e-12);
    }
}

#[test]
fn bilinear_matches_componentwise_summation() {
    let mut r = rng(112);
    for _ in 0..200 {
        let theta = real4_uniform(&mut r);
        let var = real4_uniform(&mut r);
        for nu in 0..4 {
            let fast = bilinear(&theta, gamma(nu), &var);
            let slow = naive_bilinear(&theta, gamma(nu), &var);
            assert!((fast - slow).norm() <= 1e-13);
        }
    }
}

#[test]
fn bilinears_match_real_symmetric_forms() {
    // Alternative evaluation route: precompute the real matrices γ⁰γ^ν and
    // γ⁰γ⁵γ^ν once, then evaluate pure-real quadratic forms.
    let mut real_forms = [[[0.0f64; 4]; 4]; 8];
    for nu in 0..4 {
        let m = gamma(0) * gamma(nu);
        let m5 = &(gamma(0) * gamma5()) * gamma(nu);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(m.e[a][b].im, 0.0);
                assert_eq!(m5.e[a][b].im, 0.0);
                real_forms[nu][a][b] = m.e[a][b].re;
                real_forms[4 + nu][a][b] = m5.e[a][b].re;
            }
        }
    }
    let mut r = rng(113);
    for _ in 0..200 {
        let theta = real4_uniform(&mut r);
        let var = real4_uniform(&mut r);
        for nu in 0..4 {
            let complex_route = bilinear(&theta, gamma(nu), &var);
            let complex5_route = bilinear(&theta, &(gamma5() * gamma(nu)), &var);
            let mut real_route = 0.0;
            let mut real5_route = 0.0;
            for a in 0..4 {
                for b in 0..4 {
                    real_route += theta[a] * real_forms[nu][a][b] * var[b];
                    real5_route += theta[a] * real_forms[4 + nu][a][b] * var[b];
                }
            }
            assert!((complex_route.re - real_route).abs() <= 1e-13);
            assert!((complex5_route.re - real5_route).abs() <= 1e-13);
            assert!(complex_route.im.abs() <= 1e-13);
            assert!(complex5_route.im.abs() <= 1e-13);
        }
    }
}

#[test]
fn reduced_quartic_matches_determinant_bulk() {
    let mut r = rng(114);
    for _ in 0..10_000 {
        let x = vec16_uniform(&mut r);
        let via_det = quartic_det(&x);
        let via_reduced = quartic_reduced(&split(&x));
        assert!(
            (via_reduced - via_det).abs() <= 1e-9 * via_det.abs().max(1.0),
            "reduced {via_reduced} vs det {via_det}"
        );
    }
}

#[test]
fn reduced_round_trip_is_exact() {
    let mut r = rng(115);
    for _ in 0..1000 {
        let x = vec16_uniform(&mut r);
        assert_eq!(join(&split(&x)), x);
    }
}

#[test]
fn twistor_samples_satisfy_membership_predicate() {
    for seed in 0..50 {
        let d = su22_sample(seed);
        assert!(is_su22(&d, 1e-9));
        assert!((d.det() - c(1.0, 0.0)).norm() <= 1e-10);
        assert!(twistor_deviation(&d) <= 1e-10);
    }
}

#[test]
fn generic_unit_determinant_matrices_are_not_twistor() {
    let mut r = rng(116);
    let mut found = 0;
    while found < 50 {
        let d = sl4_sample(&mut r);
        if twistor_deviation(&d) > 0.1 {
            found += 1;
            assert!(!is_su22(&d, 1e-9));
        }
    }
}

#[test]
fn quartic_spot_values_from_fixed_vectors() {
    // hand-checkable diagonal case: pack = diag(x0+x3, x0−x3, x8, x15)
    let mut x = finsler4_core::Vec16::zero();
    x.0[0] = 0.5;
    x.0[3] = 0.25;
    x.0[8] = 2.0;
    x.0[15] = -1.5;
    let expected = (0.5 + 0.25) * (0.5 - 0.25) * 2.0 * (-1.5);
    assert!((quartic_det(&x) - expected).abs() <= 1e-14);
    let m = pack(&x);
    assert_eq!(m.e[0][0], c(0.75, 0.0));
    assert_eq!(m.e[1][1], c(0.25, 0.0));
    assert_eq!(m.e[2][2], c(2.0, 0.0));
    assert_eq!(m.e[3][3], c(-1.5, 0.0));
    assert!((leibniz_det(&m).re - expected).abs() <= 1e-14);
    assert_eq!(Mat4C::identity().det(), c(1.0, 0.0));
}
