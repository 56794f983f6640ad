//! Geometric median by Weiszfeld iteration.

use crate::error::{Result, SaeError};
use crate::numerics::matrix::DenseMatrix;

/// Default stopping tolerance for [`geometric_median`].
pub const MEDIAN_TOL: f64 = 1e-6;
/// Default iteration cap for [`geometric_median`].
pub const MEDIAN_MAX_ITER: usize = 100;

/// Distance below which an iterate counts as sitting on a data point.
const COINCIDENCE_EPS: f64 = 1e-12;

/// Result of a Weiszfeld run, with the objective value after each update.
#[derive(Debug, Clone)]
pub struct MedianTrace {
    pub point: Vec<f64>,
    /// Sum of distances to the data points, evaluated at the start iterate
    /// and after every accepted update.
    pub objective: Vec<f64>,
    pub iterations: usize,
}

fn objective(points: &DenseMatrix, x: &[f64]) -> f64 {
    (0..points.rows()).map(|i| distance(points.row(i), x)).sum()
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
}

/// Geometric median of the rows of `points` (one point per row).
///
/// Weiszfeld update `x <- sum(p_i / ||p_i - x||) / sum(1 / ||p_i - x||)`,
/// started from the coordinate-wise mean, stopped when the iterate moves
/// less than `tol` or after `max_iter` updates. An iterate that lands on a
/// data point is nudged by `tol` along the first coordinate axis before
/// continuing, which sidesteps the division singularity.
pub fn geometric_median(points: &DenseMatrix, tol: f64, max_iter: usize) -> Result<Vec<f64>> {
    Ok(geometric_median_trace(points, tol, max_iter)?.point)
}

/// Same as [`geometric_median`] but keeps the objective trace; the trace is
/// what lets tests confirm monotone descent.
pub fn geometric_median_trace(
    points: &DenseMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<MedianTrace> {
    let n = points.rows();
    let d = points.cols();
    if n == 0 {
        return Err(SaeError::invalid("geometric median of an empty point set"));
    }
    if tol <= 0.0 {
        return Err(SaeError::invalid("geometric median tolerance must be positive"));
    }

    // Start from the coordinate-wise mean.
    let mut x = vec![0.0; d];
    for i in 0..n {
        for (xj, pj) in x.iter_mut().zip(points.row(i)) {
            *xj += pj;
        }
    }
    for xj in x.iter_mut() {
        *xj /= n as f64;
    }

    let mut trace = MedianTrace { point: Vec::new(), objective: vec![objective(points, &x)], iterations: 0 };

    for iter in 0..max_iter {
        // If x sits on every point (single point / identical batch) it is
        // already the median.
        if (0..n).all(|i| distance(points.row(i), &x) <= COINCIDENCE_EPS) {
            break;
        }
        // Nudge off a coinciding data point before the reciprocal weights.
        if (0..n).any(|i| distance(points.row(i), &x) <= COINCIDENCE_EPS) {
            x[0] += tol;
        }

        let mut num = vec![0.0; d];
        let mut den = 0.0;
        for i in 0..n {
            let w = 1.0 / distance(points.row(i), &x);
            for (nj, pj) in num.iter_mut().zip(points.row(i)) {
                *nj += w * pj;
            }
            den += w;
        }
        let next: Vec<f64> = num.into_iter().map(|v| v / den).collect();
        let moved = distance(&next, &x);
        x = next;
        trace.objective.push(objective(points, &x));
        trace.iterations = iter + 1;
        if moved < tol {
            break;
        }
    }

    trace.point = x;
    Ok(trace)
}
