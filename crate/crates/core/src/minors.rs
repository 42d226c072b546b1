//! Principal minors and their complete tables.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::{det_in_place, same_dim, Matrix};
use crate::subset::{size_lex_order, IndexSet};

/// `det K[α]`.
pub fn principal_minor(m: &Matrix, alpha: &IndexSet) -> Result<f64> {
    Ok(m.principal(alpha)?.determinant())
}

/// Every principal minor of a matrix, indexed by subset.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorTable {
    n: usize,
    /// Indexed by subset bitmask; slot 0 (the empty set) holds 1.
    values: Vec<f64>,
}

/// Result of comparing two minor tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinorComparison {
    /// First subset, in size-then-lex order, whose minors differ beyond tolerance.
    pub first_difference: Option<IndexSet>,
    /// Largest `|a - b| / max(1, |a|, |b|)` over all subsets.
    pub max_discrepancy: f64,
}

impl MinorTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, alpha: &IndexSet) -> f64 {
        assert_eq!(alpha.dim(), self.n, "subset dimension mismatch");
        self.values[alpha.mask() as usize]
    }

    /// Non-empty subsets with their minors, in size-then-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (IndexSet, f64)> + '_ {
        size_lex_order(self.n).into_iter().map(move |mask| {
            (
                IndexSet::from_mask(self.n, mask),
                self.values[mask as usize],
            )
        })
    }

    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `c_0, …, c_n`: `c_j` is the sum of all principal minors of size `j`.
    pub fn minor_sums(&self) -> Vec<f64> {
        let mut c = vec![0.0; self.n + 1];
        for (mask, v) in self.values.iter().enumerate() {
            c[(mask as u64).count_ones() as usize] += v;
        }
        c
    }

    pub fn compare(&self, other: &MinorTable, tol: f64) -> Result<MinorComparison> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut first_difference = None;
        let mut max_discrepancy = 0.0f64;
        for mask in size_lex_order(self.n) {
            let gap = crate::scaled_gap(self.values[mask as usize], other.values[mask as usize]);
            max_discrepancy = max_discrepancy.max(gap);
            if first_difference.is_none() && (gap.is_nan() || gap > tol) {
                first_difference = Some(IndexSet::from_mask(self.n, mask));
            }
        }
        Ok(MinorComparison {
            first_difference,
            max_discrepancy,
        })
    }
}

/// Computes all `2^n - 1` principal minors. Refuses dimensions above the
/// minor enumeration cap.
pub fn all_principal_minors(m: &Matrix) -> Result<MinorTable> {
    let n = m.dim();
    Limits::current().check_minors(n)?;
    let values: Vec<f64> = (0..1u64 << n)
        .into_par_iter()
        .map_init(Vec::new, |buf, mask| minor_by_mask(m, mask, buf))
        .collect();
    Ok(MinorTable { n, values })
}

/// Compares the principal minors of two matrices of equal size.
pub fn compare_minors(a: &Matrix, b: &Matrix, tol: f64) -> Result<MinorComparison> {
    same_dim(a, b)?;
    all_principal_minors(a)?.compare(&all_principal_minors(b)?, tol)
}

fn minor_by_mask(m: &Matrix, mask: u64, buf: &mut Vec<f64>) -> f64 {
    if mask == 0 {
        return 1.0;
    }
    let idx: Vec<usize> = IndexSet::from_mask(m.dim(), mask).to_vec();
    let k = idx.len();
    buf.clear();
    for &i in &idx {
        for &j in &idx {
            buf.push(m[(i, j)]);
        }
    }
    det_in_place(buf, k)
}
