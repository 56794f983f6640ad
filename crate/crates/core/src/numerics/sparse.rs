//! Sparse latent vectors and top-k selection.

use crate::error::{Result, SaeError};

/// Sparse vector as (index, value) pairs with strictly ascending indices.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, f64)>,
}

impl SparseVector {
    /// Entries must be sorted ascending by index, all indices < `dim`.
    pub fn new(dim: usize, entries: Vec<(usize, f64)>) -> Result<Self> {
        if entries.len() > dim {
            return Err(SaeError::invalid(format!(
                "sparse vector with {} entries exceeds dimension {}",
                entries.len(),
                dim
            )));
        }
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(SaeError::invalid("sparse indices must be strictly ascending"));
            }
        }
        if let Some(&(last, _)) = entries.last() {
            if last >= dim {
                return Err(SaeError::invalid(format!("sparse index {} out of range {}", last, dim)));
            }
        }
        Ok(SparseVector { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Expand to a dense vector of length `dim`.
    pub fn to_dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for &(i, v) in &self.entries {
            out[i] = v;
        }
        out
    }

    /// Sum of stored values.
    pub fn value_sum(&self) -> f64 {
        self.entries.iter().map(|&(_, v)| v).sum()
    }
}

/// Keep the `k` entries of `v` with the largest value (not magnitude).
///
/// Ties break toward the lower index; values are preserved unmodified. The
/// result is sorted ascending by index.
pub fn topk_select(v: &[f64], k: usize) -> Result<SparseVector> {
    if k == 0 || k > v.len() {
        return Err(SaeError::invalid(format!(
            "k={} out of range for vector of length {}",
            k,
            v.len()
        )));
    }
    debug_assert!(v.iter().all(|x| x.is_finite()), "topk_select expects finite input");

    let mut order: Vec<usize> = (0..v.len()).collect();
    // "a before b" iff a has the larger value, or equal value and lower index.
    let better = |&a: &usize, &b: &usize| {
        v[b].total_cmp(&v[a]).then_with(|| a.cmp(&b))
    };
    if k < v.len() {
        order.select_nth_unstable_by(k - 1, better);
        order.truncate(k);
    }
    order.sort_unstable();
    let entries = order.into_iter().map(|i| (i, v[i])).collect();
    SparseVector::new(v.len(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topk_by_value_not_magnitude() {
        let z = topk_select(&[3.0, -1.0, 2.0, 5.0], 2).unwrap();
        assert_eq!(z.entries(), &[(0, 3.0), (3, 5.0)]);
    }

    #[test]
    fn topk_tie_breaks_to_lowest_index() {
        let z = topk_select(&[1.0, 1.0, 0.0], 1).unwrap();
        assert_eq!(z.entries(), &[(0, 1.0)]);
    }

    #[test]
    fn topk_full_width_is_identity() {
        let v = [0.25, -7.0, 1.5];
        let z = topk_select(&v, 3).unwrap();
        assert_eq!(z.to_dense(), v.to_vec());
    }

    #[test]
    fn topk_rejects_out_of_range_k() {
        assert!(topk_select(&[1.0, 2.0], 0).is_err());
        assert!(topk_select(&[1.0, 2.0], 3).is_err());
    }

    #[test]
    fn sparse_vector_validates_indices() {
        assert!(SparseVector::new(3, vec![(0, 1.0), (0, 2.0)]).is_err());
        assert!(SparseVector::new(3, vec![(3, 1.0)]).is_err());
        assert!(SparseVector::new(2, vec![(0, 1.0), (1, 2.0)]).is_ok());
    }
}
