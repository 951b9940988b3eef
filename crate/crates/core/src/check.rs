//! Self-contained property-check harness: every invariant the crate claims,
//! run over seeded random data and collected into a machine-readable report.
//!
//! The harness is deterministic: a fixed [`RunConfig`] produces an identical
//! report, down to the byte once serialized. Each property draws from its
//! own sub-seeded generator, so the outcome of one suite cannot shift the
//! data of another.

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::herm::{
    self, pack, quartic_det, trace_duality_defect, trace_duality_defect_of, unpack, GTensor, Vec16,
};
use crate::isometry::{
    embed_sl2, induced_transform, l_matrix, l_realness_residue, l_blocks_sl2, split_action_sl2,
    L16,
};
use crate::linalg::{c, Mat4C};
use crate::reduction::{
    bilinear, gamma, gamma5, join, minkowski, quartic_reduced, split, MINKOWSKI_DIAG,
};
use crate::sample::{
    complex_uniform, rng, sl2_sample, sl4_sample, spinor_uniform, su22_sample_with, vec16_uniform,
};
use crate::spinor::{
    is_su22, pseudounitary_product, symplectic_product, twistor_deviation,
};

/// Configuration of one harness run.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    /// Master seed; sub-seeds are derived per property.
    pub seed: u64,
    /// Trial count for the sampled properties (fixed-size suites ignore it).
    pub samples: usize,
    /// When set, replaces the default threshold of every approximate
    /// property. Exact (zero-threshold) properties are unaffected.
    pub tol_override: Option<f64>,
    /// Negative control: corrupt the basis table fed to the trace-duality
    /// suite, which must then fail.
    pub corrupt_tau: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            samples: 1000,
            tol_override: None,
            corrupt_tau: false,
        }
    }
}

/// Outcome of a single property suite.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyRecord {
    pub name: &'static str,
    pub samples: usize,
    pub max_error: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// Full harness outcome; `pass` iff every record passes.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub samples: usize,
    pub corrupt_tau: bool,
    pub properties: Vec<PropertyRecord>,
    pub pass: bool,
}

struct Property {
    name: &'static str,
    threshold: f64,
    /// Exact properties keep threshold 0 even under a tolerance override.
    exact: bool,
    run: fn(&mut ChaCha8Rng, usize, &RunConfig) -> (f64, usize),
}

/// Relative deviation with the unit floor used across the suites.
fn rel(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(1.0)
}

/// Runs every property suite and assembles the report.
pub fn run_checks(cfg: &RunConfig) -> CheckReport {
    let mut properties = Vec::new();
    for (idx, prop) in property_table().iter().enumerate() {
        let mut sub = rng(cfg
            .seed
            .wrapping_add((idx as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let (max_error, samples) = (prop.run)(&mut sub, cfg.samples.max(1), cfg);
        let threshold = match cfg.tol_override {
            Some(t) if !prop.exact => t,
            _ => prop.threshold,
        };
        properties.push(PropertyRecord {
            name: prop.name,
            samples,
            max_error,
            threshold,
            pass: max_error <= threshold,
        });
    }
    let pass = properties.iter().all(|p| p.pass);
    CheckReport {
        seed: cfg.seed,
        samples: cfg.samples,
        corrupt_tau: cfg.corrupt_tau,
        properties,
        pass,
    }
}

fn property_table() -> &'static [Property] {
    &[
        Property {
            name: "herm.trace_duality",
            threshold: 0.0,
            exact: true,
            run: |_, _, cfg| {
                let defect = if cfg.corrupt_tau {
                    let mut table = *herm::tau_int();
                    // flip one sign inside τ_3
                    table[3][1][1] = herm::Gint::new(1, 0);
                    trace_duality_defect_of(&table)
                } else {
                    trace_duality_defect()
                };
                (defect as f64, 256)
            },
        },
        Property {
            name: "herm.pack_unpack_round_trip",
            threshold: 1e-13,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let x = vec16_uniform(r);
                    let back = unpack(&pack(&x), 1e-12).expect("pack output is Hermitian");
                    worst = worst.max(x.max_abs_diff(&back));
                }
                (worst, n)
            },
        },
        Property {
            name: "herm.quartic_form_matches_det",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                let g = GTensor::get();
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let x = vec16_uniform(r);
                    worst = worst.max(rel(g.evaluate(&x), quartic_det(&x)));
                }
                (worst, n)
            },
        },
        Property {
            name: "herm.quartic_homogeneity",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                use rand::Rng;
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let x = vec16_uniform(r);
                    let t: f64 = r.gen_range(-2.0..=2.0);
                    worst = worst.max(rel(quartic_det(&x.scale(t)), t.powi(4) * quartic_det(&x)));
                }
                (worst, n)
            },
        },
        Property {
            name: "herm.null_cone_on_rank_deficient",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    // v·v⁺ + w·w⁺ has rank ≤ 2, so its determinant vanishes.
                    let v = spinor_uniform(r);
                    let w = spinor_uniform(r);
                    let mut m = Mat4C::zero();
                    for a in 0..4 {
                        for b in 0..4 {
                            m.e[a][b] =
                                v.0[a] * v.0[b].conj() + w.0[a] * w.0[b].conj();
                        }
                    }
                    let x = unpack(&m, 1e-12).expect("Gram matrix is Hermitian");
                    worst = worst.max(quartic_det(&x).abs());
                }
                (worst, n)
            },
        },
        Property {
            name: "herm.quartic_indefinite_witnesses",
            threshold: 0.0,
            exact: true,
            run: |_, _, _| {
                let mut pos = Vec16::zero();
                pos.0[0] = 1.0;
                pos.0[8] = 1.0;
                pos.0[15] = 1.0;
                let mut neg = pos;
                neg.0[15] = -1.0;
                let null = Vec16::unit(0);
                let ok = quartic_det(&pos) > 0.0
                    && quartic_det(&neg) < 0.0
                    && quartic_det(&null) == 0.0;
                (if ok { 0.0 } else { 1.0 }, 3)
            },
        },
        Property {
            name: "spinor.antisymmetry_all_permutations",
            threshold: 1e-12,
            exact: false,
            run: |r, n, _| {
                let perms = herm::permutations4();
                let mut worst = 0.0f64;
                let trials = (n / 24).max(1);
                for _ in 0..trials {
                    let args = [
                        spinor_uniform(r),
                        spinor_uniform(r),
                        spinor_uniform(r),
                        spinor_uniform(r),
                    ];
                    let base = symplectic_product(&args[0], &args[1], &args[2], &args[3]);
                    for (p, sign) in &perms {
                        let v = symplectic_product(&args[p[0]], &args[p[1]], &args[p[2]], &args[p[3]]);
                        worst = worst.max((v - base * c(*sign as f64, 0.0)).norm());
                    }
                }
                (worst, trials * 24)
            },
        },
        Property {
            name: "spinor.multilinearity_first_slot",
            threshold: 1e-12,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let (xi, xi2) = (spinor_uniform(r), spinor_uniform(r));
                    let (eta, lam, mu) = (spinor_uniform(r), spinor_uniform(r), spinor_uniform(r));
                    let (a, b) = (complex_uniform(r), complex_uniform(r));
                    let combined = symplectic_product(
                        &xi.scale(a).add(&xi2.scale(b)),
                        &eta,
                        &lam,
                        &mu,
                    );
                    let split_val = a * symplectic_product(&xi, &eta, &lam, &mu)
                        + b * symplectic_product(&xi2, &eta, &lam, &mu);
                    worst = worst.max((combined - split_val).norm());
                }
                (worst, n)
            },
        },
        Property {
            name: "spinor.sl4_preserves_4product",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let d = sl4_sample(r);
                    let (xi, eta) = (spinor_uniform(r), spinor_uniform(r));
                    let (lam, mu) = (spinor_uniform(r), spinor_uniform(r));
                    let before = symplectic_product(&xi, &eta, &lam, &mu);
                    let after = symplectic_product(
                        &xi.transform(&d),
                        &eta.transform(&d),
                        &lam.transform(&d),
                        &mu.transform(&d),
                    );
                    worst = worst.max((after - before).norm() / before.norm().max(1.0));
                }
                (worst, n)
            },
        },
        Property {
            name: "spinor.det_scales_4product",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let d = crate::sample::mat4_uniform(r);
                    let (xi, eta) = (spinor_uniform(r), spinor_uniform(r));
                    let (lam, mu) = (spinor_uniform(r), spinor_uniform(r));
                    let before = symplectic_product(&xi, &eta, &lam, &mu);
                    let after = symplectic_product(
                        &xi.transform(&d),
                        &eta.transform(&d),
                        &lam.transform(&d),
                        &mu.transform(&d),
                    );
                    let expected = d.det() * before;
                    worst = worst.max((after - expected).norm() / expected.norm().max(1.0));
                }
                (worst, n)
            },
        },
        Property {
            name: "spinor.su22_preserves_both_products",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = su22_sample_with(r);
                    let (xi, eta) = (spinor_uniform(r), spinor_uniform(r));
                    let (lam, mu) = (spinor_uniform(r), spinor_uniform(r));
                    let four_before = symplectic_product(&xi, &eta, &lam, &mu);
                    let four_after = symplectic_product(
                        &xi.transform(&d),
                        &eta.transform(&d),
                        &lam.transform(&d),
                        &mu.transform(&d),
                    );
                    let herm_before = pseudounitary_product(&xi, &eta);
                    let herm_after =
                        pseudounitary_product(&xi.transform(&d), &eta.transform(&d));
                    worst = worst
                        .max((four_after - four_before).norm() / four_before.norm().max(1.0))
                        .max((herm_after - herm_before).norm() / herm_before.norm().max(1.0));
                }
                (worst, trials)
            },
        },
        Property {
            name: "spinor.su22_membership_of_samples",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = su22_sample_with(r);
                    worst = worst
                        .max(twistor_deviation(&d))
                        .max((d.det() - c(1.0, 0.0)).norm());
                }
                (worst, trials)
            },
        },
        Property {
            name: "spinor.su22_rejects_non_preserving",
            threshold: 0.0,
            exact: true,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut rejected = 0usize;
                let mut attempts = 0usize;
                let mut error = 0.0f64;
                let mut best_pair_deviation = 0.0f64;
                while rejected < trials && attempts < trials * 20 {
                    attempts += 1;
                    let d = sl4_sample(r);
                    if twistor_deviation(&d) <= 0.1 {
                        continue;
                    }
                    rejected += 1;
                    if is_su22(&d, 1e-9) {
                        error = 1.0;
                    }
                    let (xi, eta) = (spinor_uniform(r), spinor_uniform(r));
                    let delta = (pseudounitary_product(&xi.transform(&d), &eta.transform(&d))
                        - pseudounitary_product(&xi, &eta))
                    .norm();
                    best_pair_deviation = best_pair_deviation.max(delta);
                }
                // the Gram deviation must also show up on actual vectors
                if best_pair_deviation < 1e-2 {
                    error = 1.0;
                }
                (error, rejected)
            },
        },
        Property {
            name: "isometry.induced_preserves_quartic",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let d = sl4_sample(r);
                    let x = vec16_uniform(r);
                    worst = worst.max(rel(quartic_det(&induced_transform(&d, &x)), quartic_det(&x)));
                }
                (worst, n)
            },
        },
        Property {
            name: "isometry.induced_det_scaling",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let d = crate::sample::mat4_uniform(r);
                    let x = vec16_uniform(r);
                    let factor = d.det().norm_sqr();
                    worst = worst.max(rel(
                        quartic_det(&induced_transform(&d, &x)),
                        factor * quartic_det(&x),
                    ));
                }
                (worst, n)
            },
        },
        Property {
            name: "isometry.l_matrix_realness",
            threshold: 1e-12,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    worst = worst.max(l_realness_residue(&crate::sample::mat4_uniform(r)));
                }
                (worst, trials)
            },
        },
        Property {
            name: "isometry.l_matrix_matches_action",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 5).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = crate::sample::mat4_uniform(r);
                    let l = l_matrix(&d).expect("residues bounded for finite input");
                    let x = vec16_uniform(r);
                    worst = worst.max(l.apply(&x).max_abs_diff(&induced_transform(&d, &x)));
                }
                (worst, trials)
            },
        },
        Property {
            name: "isometry.l_matrix_homomorphism",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d1 = crate::sample::mat4_uniform(r);
                    let d2 = crate::sample::mat4_uniform(r);
                    let composed = l_matrix(&(&d1 * &d2)).expect("bounded");
                    let product = l_matrix(&d1)
                        .expect("bounded")
                        .compose(&l_matrix(&d2).expect("bounded"));
                    worst = worst.max(composed.max_abs_diff(&product));
                }
                (worst, trials)
            },
        },
        Property {
            name: "isometry.l_of_identity",
            threshold: 1e-14,
            exact: false,
            run: |_, _, _| {
                let l = l_matrix(&Mat4C::identity()).expect("identity has zero residue");
                (l.max_abs_diff(&L16::identity()), 1)
            },
        },
        Property {
            name: "isometry.sl2_blocks_match_trace_route",
            threshold: 1e-12,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = sl2_sample(r);
                    let closed = l_blocks_sl2(&d).expect("unit det by construction").to_l16();
                    let traced = l_matrix(&embed_sl2(&d).expect("unit det")).expect("bounded");
                    worst = worst.max(closed.max_abs_diff(&traced));
                }
                (worst, trials)
            },
        },
        Property {
            name: "isometry.split_action_matches_induced",
            threshold: 1e-10,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let d = sl2_sample(r);
                    let x = vec16_uniform(r);
                    let fast = split_action_sl2(&d, &x).expect("unit det");
                    let full = induced_transform(&embed_sl2(&d).expect("unit det"), &x);
                    worst = worst.max(fast.max_abs_diff(&full));
                }
                (worst, n)
            },
        },
        Property {
            name: "isometry.lorentz_block_metric",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 5).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = sl2_sample(r);
                    let lam = l_blocks_sl2(&d).expect("unit det").vector;
                    for a in 0..4 {
                        for b in 0..4 {
                            let mut s = 0.0;
                            for k in 0..4 {
                                s += lam[k][a] * MINKOWSKI_DIAG[k] * lam[k][b];
                            }
                            let expected = if a == b { MINKOWSKI_DIAG[a] } else { 0.0 };
                            worst = worst.max((s - expected).abs());
                        }
                    }
                }
                (worst, trials)
            },
        },
        Property {
            name: "isometry.lorentz_block_orthochronous_proper",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let trials = (n / 5).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = sl2_sample(r);
                    let lam = l_blocks_sl2(&d).expect("unit det").vector;
                    let det = real_det4(&lam);
                    worst = worst.max((det - 1.0).abs());
                    worst = worst.max((1.0 - lam[0][0]).max(0.0));
                }
                (worst, trials)
            },
        },
        Property {
            name: "isometry.vector_block_even_in_d",
            threshold: 0.0,
            exact: true,
            run: |r, n, _| {
                let trials = (n / 10).max(10);
                let mut worst = 0.0f64;
                for _ in 0..trials {
                    let d = sl2_sample(r);
                    let minus = d.scale(c(-1.0, 0.0));
                    let b1 = l_blocks_sl2(&d).expect("unit det").vector;
                    let b2 = l_blocks_sl2(&minus).expect("unit det").vector;
                    for a in 0..4 {
                        for b in 0..4 {
                            worst = worst.max((b1[a][b] - b2[a][b]).abs());
                        }
                    }
                }
                (worst, trials)
            },
        },
        Property {
            name: "reduction.clifford_anticommutators",
            threshold: 0.0,
            exact: true,
            run: |_, _, _| {
                let mut worst = 0.0f64;
                for mu in 0..4 {
                    for nu in 0..4 {
                        let anti = (gamma(mu) * gamma(nu)).add(&(gamma(nu) * gamma(mu)));
                        let expected = if mu == nu {
                            Mat4C::identity().scale(c(2.0 * MINKOWSKI_DIAG[mu], 0.0))
                        } else {
                            Mat4C::zero()
                        };
                        worst = worst.max(anti.max_abs_diff(&expected));
                    }
                }
                (worst, 16)
            },
        },
        Property {
            name: "reduction.gamma5_identities",
            threshold: 0.0,
            exact: true,
            run: |_, _, _| {
                let product = &(&(gamma(0) * gamma(1)) * gamma(2)) * gamma(3);
                let mut worst = product.max_abs_diff(gamma5());
                let sq = gamma5() * gamma5();
                worst = worst.max(sq.max_abs_diff(&Mat4C::identity().scale(c(-1.0, 0.0))));
                (worst, 2)
            },
        },
        Property {
            name: "reduction.bilinears_real",
            threshold: 1e-12,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let theta = crate::sample::real4_uniform(r);
                    let var = crate::sample::real4_uniform(r);
                    for nu in 0..4 {
                        worst = worst
                            .max(bilinear(&theta, gamma(nu), &theta).im.abs())
                            .max(bilinear(&theta, gamma(nu), &var).im.abs())
                            .max(bilinear(&var, gamma(nu), &var).im.abs())
                            .max(
                                bilinear(&theta, &(gamma5() * gamma(nu)), &var)
                                    .im
                                    .abs(),
                            );
                    }
                }
                (worst, n)
            },
        },
        Property {
            name: "reduction.quartic_matches_det",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let x = vec16_uniform(r);
                    worst = worst.max(rel(quartic_reduced(&split(&x)), quartic_det(&x)));
                }
                (worst, n)
            },
        },
        Property {
            name: "reduction.quartic_sl2_invariant",
            threshold: 1e-9,
            exact: false,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let d = sl2_sample(r);
                    let x = vec16_uniform(r);
                    let moved = split_action_sl2(&d, &x).expect("unit det");
                    worst =
                        worst.max(rel(quartic_reduced(&split(&moved)), quartic_reduced(&split(&x))));
                }
                (worst, n)
            },
        },
        Property {
            name: "reduction.split_join_round_trip",
            threshold: 0.0,
            exact: true,
            run: |r, n, _| {
                let mut worst = 0.0f64;
                for _ in 0..n {
                    let x = vec16_uniform(r);
                    worst = worst.max(x.max_abs_diff(&join(&split(&x))));
                }
                (worst, n)
            },
        },
        Property {
            name: "reduction.minkowski_signature",
            threshold: 0.0,
            exact: true,
            run: |_, _, _| {
                let e0 = [1.0, 0.0, 0.0, 0.0];
                let e1 = [0.0, 1.0, 0.0, 0.0];
                let ok = minkowski(&e0, &e0) == 1.0
                    && minkowski(&e1, &e1) == -1.0
                    && minkowski(&e0, &e1) == 0.0;
                (if ok { 0.0 } else { 1.0 }, 3)
            },
        },
    ]
}

/// Determinant of a real 4×4 block via the complex LU path.
fn real_det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut cm = Mat4C::zero();
    for r in 0..4 {
        for col in 0..4 {
            cm.e[r][col] = c(m[r][col], 0.0);
        }
    }
    cm.det().re
}
