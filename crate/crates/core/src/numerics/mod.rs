//! Deterministic numerical kernels: dense/sparse products, softmax, top-k
//! selection, geometric median, seeded random generation.
//!
//! Everything here is a pure function over immutable inputs (the [`Rng`] is
//! single-owner; parallel code derives child seeds with [`split_seed`]).

mod matrix;
mod median;
mod rng;
mod sparse;

pub use matrix::DenseMatrix;
pub use median::{geometric_median, geometric_median_trace, MedianTrace, MEDIAN_MAX_ITER, MEDIAN_TOL};
pub use rng::{mix64, split_seed, Rng};
pub use sparse::{topk_select, SparseVector};

use crate::error::{Result, SaeError};

/// Numerically stable softmax (max-subtracted). Preserves the argmax of the
/// input and sums to 1 within double-precision rounding.
pub fn softmax(v: &[f64]) -> Result<Vec<f64>> {
    if v.is_empty() {
        return Err(SaeError::invalid("softmax of an empty vector"));
    }
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut out: Vec<f64> = v.iter().map(|x| (x - max).exp()).collect();
    let sum: f64 = out.iter().sum();
    for o in out.iter_mut() {
        *o /= sum;
    }
    Ok(out)
}

/// Index of the largest entry; ties break to the lowest index.
pub fn argmax(v: &[f64]) -> usize {
    debug_assert!(!v.is_empty());
    let mut best = 0;
    for (i, &x) in v.iter().enumerate().skip(1) {
        if x > v[best] {
            best = i;
        }
    }
    best
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `out = a - b`.
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `acc += scale * v`.
pub fn axpy(acc: &mut [f64], scale: f64, v: &[f64]) {
    debug_assert_eq!(acc.len(), v.len());
    for (a, x) in acc.iter_mut().zip(v) {
        *a += scale * x;
    }
}

/// Cosine of the angle between `a` and `b`, clamped to [-1, 1]; zero vectors
/// yield 0.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let na = norm(a);
    let nb = norm(b);
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    (dot(a, b) / (na * nb)).clamp(-1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn softmax_symmetry() {
        assert_eq!(softmax(&[0.0, 0.0]).unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn softmax_analytic_case() {
        let p = softmax(&[2f64.ln(), 0.0]).unwrap();
        assert!((p[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((p[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn softmax_rejects_empty() {
        assert!(softmax(&[]).is_err());
    }

    #[test]
    fn softmax_sums_to_one_and_preserves_argmax() {
        let v = [3.0, -100.0, 250.0, 0.0, 249.9999];
        let p = softmax(&v).unwrap();
        let sum: f64 = p.iter().sum();
        assert!((sum - 1.0).abs() <= 1e-12);
        assert!(p.iter().all(|&x| x > 0.0 && x <= 1.0));
        assert_eq!(argmax(&v), argmax(&p));
    }

    #[test]
    fn argmax_tie_to_lowest() {
        assert_eq!(argmax(&[1.0, 5.0, 5.0]), 1);
    }
}
