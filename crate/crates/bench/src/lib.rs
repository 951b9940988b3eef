//! Shared input generation for the benchmark targets.

use finsler4_core::herm::Vec16;
use finsler4_core::sample::{mat2_uniform, mat4_uniform, rng, sl2_sample, vec16_uniform};
use finsler4_core::{Mat2C, Mat4C};

/// Fixed pools of seeded inputs so every run measures the same work.
pub fn vec16_pool(n: usize) -> Vec<Vec16> {
    let mut r = rng(0xBE9C);
    (0..n).map(|_| vec16_uniform(&mut r)).collect()
}

pub fn mat4_pool(n: usize) -> Vec<Mat4C> {
    let mut r = rng(0xBE9D);
    (0..n).map(|_| mat4_uniform(&mut r)).collect()
}

pub fn mat2_pool(n: usize) -> Vec<Mat2C> {
    let mut r = rng(0xBE9E);
    (0..n).map(|_| mat2_uniform(&mut r)).collect()
}

pub fn sl2_pool(n: usize) -> Vec<Mat2C> {
    let mut r = rng(0xBE9F);
    (0..n).map(|_| sl2_sample(&mut r)).collect()
}
