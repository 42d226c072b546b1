//! Effective spectrum and effective spectral radius of square matrices.
//!
//! For a square matrix `K` of size `n` and a nonnegative scaling vector `η`,
//! the effective spectrum is the eigenvalue multiset of `K·Diag(η)` and the
//! effective spectral radius is its largest modulus. Two nonnegative
//! matrices have the same effective spectral radius everywhere exactly when
//! all their principal minors agree; this crate computes that invariant,
//! decides equality, and implements the transformations that preserve it
//! (transpose, atomic part, diagonal similarity, partial transpose over a
//! clan).
//!
//! Indices are zero-based throughout the library. [`IndexSet`] displays
//! itself one-based, which is what the command-line front end reads and
//! prints.

pub mod clan;
pub mod eigen;
pub mod error;
pub mod limits;
pub mod matrix;
pub mod minors;
pub mod poly;
pub mod spectral;
pub mod structure;
pub mod subset;

pub use clan::{
    classify_minor_equal_pair, find_clans, is_clan_free, partial_transpose,
    partial_transpose_with_clan, rank1_factor, verify_partial_transpose_invariance, Clan,
    Classification, ClassificationKind,
};
pub use eigen::{eigenvalues, match_spectra, spectral_radius, SpectrumMatch};
pub use error::{Error, Result};
pub use limits::Limits;
pub use matrix::{Block, Matrix};
pub use minors::{all_principal_minors, principal_minor, MinorComparison, MinorTable};
pub use num_complex::Complex64;
pub use poly::{characteristic_polynomial, characteristic_polynomial_from_minors, Polynomial};
pub use spectral::{
    boolean_radius_table, effective_radius, effective_spectrum, minimize_radius, minors_equal,
    same_effective_family, scaling_identities_check, signed_equality_check, BooleanRadiusTable,
    EqualityVerdict, EtaVector, Method, Minimization, Outcome, Precondition, Witness,
};
pub use structure::{
    adjacency_digraph, atomic_part, atoms, diagonal_similarity_witness, is_completely_reducible,
    is_irreducible, Digraph, Partition, SimilarityWitness,
};
pub use subset::IndexSet;

/// Relative pivot threshold used for rank decisions unless a caller passes one.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Relative tolerance used when comparing eigenvalue multisets.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-8;

/// `|a - b| <= tol * max(1, |a|, |b|)`.
#[inline]
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    scaled_gap(a, b) <= tol
}

/// `|a - b| / max(1, |a|, |b|)`, the quantity `close` compares against its tolerance.
#[inline]
pub fn scaled_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}
