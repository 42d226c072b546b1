//! Effective spectrum and effective spectral radius.
//!
//! For a scaling vector `η ≥ 0`, the effective spectrum of `K` at `η` is the
//! eigenvalue multiset of `K·Diag(η)` and the effective spectral radius is
//! `R_e[K](η) = ρ(K·Diag(η))`. For entrywise-nonnegative matrices the
//! following are equivalent, and the cheapest of them (equal principal
//! minors) is the decision procedure used here:
//!
//! - `R_e[K] = R_e[K̃]` on all of `ℝ₊ⁿ`, or only on `{0,1}ⁿ`;
//! - the effective spectra agree on `ℝ₊ⁿ`, or only on `{0,1}ⁿ`;
//! - every principal minor of `K` equals that of `K̃`.
//!
//! For matrices of arbitrary sign, equal radii imply equal minors only when
//! both diagonals carry the same signs and at most one of them is zero; see
//! [`signed_equality_check`].

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::eigen::{eigenvalues, match_spectra, spectral_radius};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::{same_dim, Matrix};
use crate::minors::compare_minors;
use crate::subset::{combinations, size_lex_order, IndexSet};

/// A nonnegative scaling vector `η`.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaVector(Vec<f64>);

impl EtaVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(index) = values.iter().position(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::InvalidEta {
                index,
                value: values[index],
            });
        }
        Ok(EtaVector(values))
    }

    pub fn ones(n: usize) -> Self {
        EtaVector(vec![1.0; n])
    }

    /// The indicator vector of `alpha`.
    pub fn indicator(alpha: &IndexSet) -> Self {
        EtaVector(
            (0..alpha.dim())
                .map(|i| if alpha.contains(i) { 1.0 } else { 0.0 })
                .collect(),
        )
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every component is 0 or 1.
    pub fn is_boolean(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0 || x == 1.0)
    }

    /// `1_{η>0}`.
    pub fn support(&self) -> Self {
        EtaVector(
            self.0
                .iter()
                .map(|&x| if x > 0.0 { 1.0 } else { 0.0 })
                .collect(),
        )
    }

    /// `c·η` for `c ≥ 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        EtaVector::new(self.0.iter().map(|x| c * x).collect())
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for EtaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// `R_e[K](η) = ρ(K·Diag(η))`.
pub fn effective_radius(k: &Matrix, eta: &EtaVector) -> Result<f64> {
    eta.check_dim(k.dim())?;
    spectral_radius(&k.scale_columns(eta.values())?)
}

/// Eigenvalues of `K·Diag(η)`.
pub fn effective_spectrum(k: &Matrix, eta: &EtaVector) -> Result<Vec<Complex64>> {
    eta.check_dim(k.dim())?;
    eigenvalues(&k.scale_columns(eta.values())?)
}

/// `R_e[K]` on the boolean grid: entry `α` is `ρ(K[α])`, which equals the
/// effective radius at the indicator vector of `α`. The empty set maps to 0.
#[derive(Debug, Clone, PartialEq)]
pub struct BooleanRadiusTable {
    n: usize,
    values: Vec<f64>,
}

impl BooleanRadiusTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, alpha: &IndexSet) -> f64 {
        assert_eq!(alpha.dim(), self.n, "subset dimension mismatch");
        self.values[alpha.mask() as usize]
    }

    /// Non-empty subsets with their radii, in size-then-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (IndexSet, f64)> + '_ {
        size_lex_order(self.n).into_iter().map(move |mask| {
            (
                IndexSet::from_mask(self.n, mask),
                self.values[mask as usize],
            )
        })
    }

    /// First subset (size-then-lex) where the radii differ beyond
    /// `tol·max(1, |a|, |b|)`, and the largest scaled gap.
    pub fn compare(&self, other: &BooleanRadiusTable, tol: f64) -> Result<(Option<IndexSet>, f64)> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut first = None;
        let mut worst = 0.0f64;
        for mask in size_lex_order(self.n) {
            let gap = crate::scaled_gap(self.values[mask as usize], other.values[mask as usize]);
            worst = worst.max(gap);
            if first.is_none() && (gap.is_nan() || gap > tol) {
                first = Some(IndexSet::from_mask(self.n, mask));
            }
        }
        Ok((first, worst))
    }
}

pub fn boolean_radius_table(k: &Matrix) -> Result<BooleanRadiusTable> {
    let n = k.dim();
    Limits::current().check_minors(n)?;
    let values = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            if mask == 0 {
                return Ok(0.0);
            }
            spectral_radius(&k.principal(&IndexSet::from_mask(n, mask))?)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(BooleanRadiusTable { n, values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Equal,
    NotEqual,
    /// The check's preconditions failed; no claim either way.
    Inconclusive,
}

/// Which comparison produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// All principal minors, for nonnegative or unrestricted inputs.
    PrincipalMinors,
    /// All principal minors behind the diagonal-sign guard.
    SignedPrincipalMinors,
    /// All principal minors of a partial-transpose pair, i.e. equal
    /// characteristic polynomials of every principal submatrix pair.
    SubmatrixSpectra,
}

/// Why a signed comparison was inconclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    /// `sgn K_ii ≠ sgn K̃_ii`.
    DiagonalSigns { index: usize },
    /// More than one zero on the diagonal.
    ZeroDiagonal { zeros: usize },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::DiagonalSigns { index } => {
                write!(f, "diagonal signs differ at index {}", index + 1)
            }
            Precondition::ZeroDiagonal { zeros } => {
                write!(f, "{zeros} zero diagonal entries (at most one allowed)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Subset(IndexSet),
    Eta(EtaVector),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Subset(s) => s.fmt(f),
            Witness::Eta(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EqualityVerdict {
    pub outcome: Outcome,
    /// Where disagreement was found; always present for `NotEqual`.
    pub witness: Option<Witness>,
    pub method: Method,
    /// Largest scaled discrepancy seen (0 when nothing was compared).
    pub max_discrepancy: f64,
    /// Set exactly when the outcome is `Inconclusive`.
    pub failed_precondition: Option<Precondition>,
}

impl EqualityVerdict {
    pub fn is_equal(&self) -> bool {
        self.outcome == Outcome::Equal
    }

    pub(crate) fn from_minors(a: &Matrix, b: &Matrix, tol: f64, method: Method) -> Result<Self> {
        let cmp = compare_minors(a, b, tol)?;
        Ok(EqualityVerdict {
            outcome: if cmp.first_difference.is_some() {
                Outcome::NotEqual
            } else {
                Outcome::Equal
            },
            witness: cmp.first_difference.map(Witness::Subset),
            method,
            max_discrepancy: cmp.max_discrepancy,
            failed_precondition: None,
        })
    }
}

/// Whether all principal minors agree within `|a - b| <= tol·max(1, |a|, |b|)`.
/// The witness is the first differing subset in size-then-lex order.
pub fn minors_equal(k: &Matrix, kt: &Matrix, tol: f64) -> Result<EqualityVerdict> {
    EqualityVerdict::from_minors(k, kt, tol, Method::PrincipalMinors)
}

/// Decides `R_e[K] = R_e[K̃]` (equivalently, equal effective spectra) for
/// entrywise-nonnegative matrices by comparing principal minors.
pub fn same_effective_family(k: &Matrix, kt: &Matrix, tol: f64) -> Result<EqualityVerdict> {
    same_dim(k, kt)?;
    for m in [k, kt] {
        if let Some((row, col, value)) = m.first_negative() {
            return Err(Error::NegativeEntry { row, col, value });
        }
    }
    minors_equal(k, kt, tol)
}

/// Equality check for matrices of arbitrary sign.
///
/// When both diagonals have the same sign pattern with at most one zero,
/// equal effective radii on `ℝ₊ⁿ` are equivalent to equal principal minors
/// and the verdict is decisive. Otherwise the verdict is `Inconclusive`
/// and names the failed precondition: equal radii need not force equal
/// minors there, so no inequality is claimed.
pub fn signed_equality_check(k: &Matrix, kt: &Matrix, tol: f64) -> Result<EqualityVerdict> {
    same_dim(k, kt)?;
    let failed = signed_precondition(k, kt);
    if failed.is_some() {
        return Ok(EqualityVerdict {
            outcome: Outcome::Inconclusive,
            witness: None,
            method: Method::SignedPrincipalMinors,
            max_discrepancy: 0.0,
            failed_precondition: failed,
        });
    }
    EqualityVerdict::from_minors(k, kt, tol, Method::SignedPrincipalMinors)
}

fn signed_precondition(k: &Matrix, kt: &Matrix) -> Option<Precondition> {
    let sign = |x: f64| (x > 0.0) as i8 - (x < 0.0) as i8;
    let (da, db) = (k.diagonal(), kt.diagonal());
    if let Some(index) = (0..da.len()).find(|&i| sign(da[i]) != sign(db[i])) {
        return Some(Precondition::DiagonalSigns { index });
    }
    let zeros = da.iter().filter(|&&x| x == 0.0).count();
    if zeros > 1 {
        return Some(Precondition::ZeroDiagonal { zeros });
    }
    None
}

/// Checks that `K·Diag(η)`, `Diag(η)·K`, `Diag(1_{η>0})·K·Diag(η)` and
/// `Diag(η)·K·Diag(1_{η>0})` have the same effective spectrum at `η′`, as
/// multisets within `tol·max(1, scale)`.
pub fn scaling_identities_check(
    k: &Matrix,
    eta: &EtaVector,
    eta_prime: &EtaVector,
    tol: f64,
) -> Result<bool> {
    let n = k.dim();
    eta.check_dim(n)?;
    eta_prime.check_dim(n)?;
    let support = eta.support();
    let variants = [
        k.scale_columns(eta.values())?,
        k.scale_rows(eta.values())?,
        k.scale_columns(eta.values())?
            .scale_rows(support.values())?,
        k.scale_rows(eta.values())?
            .scale_columns(support.values())?,
    ];
    let reference = effective_spectrum(&variants[0], eta_prime)?;
    for v in &variants[1..] {
        if !match_spectra(&reference, &effective_spectrum(v, eta_prime)?, tol).equal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Best boolean scaling with a fixed number of zeroed components.
#[derive(Debug, Clone, PartialEq)]
pub struct Minimization {
    pub budget: usize,
    /// Smallest effective radius reached.
    pub radius: f64,
    /// Every zeroed index set attaining `radius` (within tolerance), in lex order.
    pub argmin: Vec<IndexSet>,
}

/// Exhaustively searches boolean `η` with exactly `budget` zero components
/// for the smallest `R_e[K](η)`, i.e. the principal submatrix of size
/// `n - budget` with the smallest spectral radius. Radii within
/// `tol·max(1, best)` of the best count as ties.
pub fn minimize_radius(k: &Matrix, budget: usize, tol: f64) -> Result<Minimization> {
    let n = k.dim();
    Limits::current().check_minors(n)?;
    if let Some((row, col, value)) = k.first_negative() {
        return Err(Error::NegativeEntry { row, col, value });
    }
    if budget > n {
        return Err(Error::InvalidBudget { budget, n });
    }
    let removals = combinations(n, budget);
    let radii = removals
        .par_iter()
        .map(|&mask| {
            let keep = IndexSet::from_mask(n, mask).complement();
            if keep.is_empty() {
                Ok(0.0)
            } else {
                spectral_radius(&k.principal(&keep)?)
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    let radius = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let bound = tol * radius.max(1.0);
    let argmin = removals
        .iter()
        .zip(&radii)
        .filter(|(_, &r)| r - radius <= bound)
        .map(|(&mask, _)| IndexSet::from_mask(n, mask))
        .collect();
    Ok(Minimization {
        budget,
        radius,
        argmin,
    })
}
