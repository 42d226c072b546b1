//! Clans and partial transposes.
//!
//! A subset `α` with `2 ≤ |α| ≤ n-2` is a clan of `K` when both
//! off-diagonal blocks `K[α, αᶜ]` and `K[αᶜ, α]` have rank at most one.
//! Permuting `α` to the front, `K` then reads
//!
//! ```text
//! K = [ A      v·bᵀ ]        K̃ = [ Aᵀ     w·bᵀ ]
//!     [ c·wᵀ   B    ]             [ c·vᵀ   B    ]
//! ```
//!
//! and `K̃` is a partial transpose of `K`. Every principal submatrix of `K̃`
//! has the same characteristic polynomial as the matching one of `K`, so the
//! two share all principal minors and hence their effective spectral radius.
//! Matrices of size at most 3 have no clans.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::{same_dim, Block, Matrix};
use crate::spectral::{minors_equal, EqualityVerdict, Method, Witness};
use crate::structure::{atomic_part, diagonal_similarity_witness, SimilarityWitness};
use crate::subset::{size_lex_order, IndexSet};

/// Factors a rank-≤1 block as `u·vᵀ`.
///
/// `u` is the column holding the largest-magnitude entry, scaled so that
/// entry becomes 1, and `v` is that entry's row. A zero block yields two
/// zero vectors. Blocks of numerical rank above one (pivot threshold
/// `tol·‖B‖_max`) are refused with a 2×2 minor certifying the rank.
pub fn rank1_factor(block: &Block, tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let (rows, cols) = (block.rows(), block.cols());
    let pivots = block.pivots(tol, 2);
    match pivots[..] {
        [] => Ok((vec![0.0; rows], vec![0.0; cols])),
        [(p, q)] => {
            let pivot = block[(p, q)];
            let u = block.column(q).into_iter().map(|x| x / pivot).collect();
            Ok((u, block.row(p).to_vec()))
        }
        [(p1, q1), (p2, q2), ..] => Err(Error::RankExceeded {
            max_rank: 1,
            rows: [p1.min(p2), p1.max(p2)],
            cols: [q1.min(q2), q1.max(q2)],
            minor: block[(p1, q1)] * block[(p2, q2)] - block[(p1, q2)] * block[(p2, q1)],
        }),
    }
}

/// A clan `α` with factorizations `K[α, αᶜ] = v·bᵀ` and `K[αᶜ, α] = c·wᵀ`.
///
/// Vectors are indexed by the members of `α` (for `v`, `w`) or of `αᶜ`
/// (for `b`, `c`) in increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Clan {
    alpha: IndexSet,
    v: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
    w: Vec<f64>,
    tol: f64,
}

impl Clan {
    /// Validates `alpha` as a clan of `k` under rank tolerance `tol` and
    /// factors its off-diagonal blocks canonically.
    pub fn new(k: &Matrix, alpha: IndexSet, tol: f64) -> Result<Clan> {
        let n = k.dim();
        if alpha.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: alpha.dim(),
            });
        }
        if alpha.len() < 2 || alpha.len() + 2 > n {
            return Err(Error::InvalidClan {
                alpha,
                reason: format!("size {} outside [2, {}]", alpha.len(), n.saturating_sub(2)),
            });
        }
        let rest = alpha.complement();
        let (v, b) = rank1_factor(&k.submatrix(&alpha, &rest)?, tol)?;
        let (c, w) = rank1_factor(&k.submatrix(&rest, &alpha)?, tol)?;
        Ok(Clan {
            alpha,
            v,
            b,
            c,
            w,
            tol,
        })
    }

    /// A clan with caller-chosen factors, checked against `k` within
    /// `tol·‖block‖_max`.
    pub fn from_factors(
        k: &Matrix,
        alpha: IndexSet,
        (v, b): (Vec<f64>, Vec<f64>),
        (c, w): (Vec<f64>, Vec<f64>),
        tol: f64,
    ) -> Result<Clan> {
        let clan = Clan {
            alpha,
            v,
            b,
            c,
            w,
            tol,
        };
        clan.verify(k)?;
        Ok(clan)
    }

    pub fn alpha(&self) -> &IndexSet {
        &self.alpha
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    pub fn w(&self) -> &[f64] {
        &self.w
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The same clan of the partial transpose: `v` and `w` trade places.
    pub fn mirrored(&self) -> Clan {
        Clan {
            v: self.w.clone(),
            w: self.v.clone(),
            ..self.clone()
        }
    }

    /// Re-checks the factorizations against `k`.
    pub fn verify(&self, k: &Matrix) -> Result<()> {
        let invalid = |reason: String| Error::InvalidClan {
            alpha: self.alpha,
            reason,
        };
        if self.alpha.dim() != k.dim() || self.alpha.len() < 2 || self.alpha.len() + 2 > k.dim() {
            return Err(invalid("size or dimension out of range".into()));
        }
        let rest = self.alpha.complement();
        let upper = k.submatrix(&self.alpha, &rest)?;
        let lower = k.submatrix(&rest, &self.alpha)?;
        for (name, block, left, right) in [
            ("K[α,αᶜ] ≠ v·bᵀ", &upper, &self.v, &self.b),
            ("K[αᶜ,α] ≠ c·wᵀ", &lower, &self.c, &self.w),
        ] {
            if left.len() != block.rows() || right.len() != block.cols() {
                return Err(invalid(format!("{name}: factor lengths")));
            }
            let bound = self.tol * block.max_abs();
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    if (block[(i, j)] - left[i] * right[j]).abs() > bound {
                        return Err(invalid(name.to_string()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// All clans of `k`, in size-then-lex order of `α`. Both `α` and `αᶜ` are
/// reported when both qualify. Subject to the clan enumeration cap.
pub fn find_clans(k: &Matrix, tol: f64) -> Result<Vec<Clan>> {
    let n = k.dim();
    Limits::current().check_clans(n)?;
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut clans = Vec::new();
    for mask in size_lex_order(n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > n - 2 {
            continue;
        }
        let alpha = IndexSet::from_mask(n, mask);
        let rest = alpha.complement();
        if k.submatrix(&alpha, &rest)?.rank_at_most(1, tol)
            && k.submatrix(&rest, &alpha)?.rank_at_most(1, tol)
        {
            clans.push(Clan::new(k, alpha, tol)?);
        }
    }
    Ok(clans)
}

pub fn is_clan_free(k: &Matrix, tol: f64) -> Result<bool> {
    Ok(find_clans(k, tol)?.is_empty())
}

/// `[[Aᵀ, w·bᵀ], [c·vᵀ, B]]` in the original index order.
pub fn partial_transpose(k: &Matrix, clan: &Clan) -> Result<Matrix> {
    clan.verify(k)?;
    let n = k.dim();
    let alpha = &clan.alpha;
    // position of each index inside α or αᶜ
    let mut pos = vec![0; n];
    let (mut ia, mut ic) = (0, 0);
    for (i, p) in pos.iter_mut().enumerate() {
        if alpha.contains(i) {
            *p = ia;
            ia += 1;
        } else {
            *p = ic;
            ic += 1;
        }
    }
    Ok(Matrix::from_fn(n, |i, j| {
        match (alpha.contains(i), alpha.contains(j)) {
            (true, true) => k[(j, i)],
            (true, false) => clan.w[pos[i]] * clan.b[pos[j]],
            (false, true) => clan.c[pos[i]] * clan.v[pos[j]],
            (false, false) => k[(i, j)],
        }
    }))
}

/// The partial transpose together with its own clan factorization, so that
/// transposing the output again with that clan gives back `k`.
pub fn partial_transpose_with_clan(k: &Matrix, clan: &Clan) -> Result<(Matrix, Clan)> {
    Ok((partial_transpose(k, clan)?, clan.mirrored()))
}

/// Whether every principal submatrix pair `K[β]`, `K̃[β]` has the same
/// characteristic polynomial, i.e. all principal minors agree.
pub fn verify_partial_transpose_invariance(
    k: &Matrix,
    kt: &Matrix,
    tol: f64,
) -> Result<EqualityVerdict> {
    same_dim(k, kt)?;
    Limits::current().check_clans(k.dim())?;
    EqualityVerdict::from_minors(k, kt, tol, Method::SubmatrixSpectra)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassificationKind {
    /// Both symmetric and entrywise equal.
    Identical,
    /// `K̃` (or `K̃^𝒜` when `K` is symmetric) is diagonally similar to `K`.
    DiagonallySimilarToK,
    /// `K̃` is diagonally similar to `Kᵀ`.
    DiagonallySimilarToKTranspose,
    /// Neither similarity holds and `K` has a clan, so minor-equal pairs
    /// need not be related by similarity.
    ClanObstructed,
    /// No relation verified.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub kind: ClassificationKind,
    pub witness: Option<SimilarityWitness>,
}

impl Classification {
    fn of(kind: ClassificationKind) -> Self {
        Classification {
            kind,
            witness: None,
        }
    }
}

/// Explains why two nonnegative matrices with equal principal minors are
/// related.
///
/// - both symmetric: they must be equal;
/// - `K` symmetric: `K̃^𝒜` must be diagonally similar to `K`;
/// - otherwise `K̃` is tested for diagonal similarity to `K`, then to `Kᵀ`.
///   For irreducible clan-free `K` one of the two must hold; if neither
///   does and `K` has a clan the pair is reported as clan-obstructed.
///
/// Anything else, including a failed expectation, is `Unresolved`.
pub fn classify_minor_equal_pair(k: &Matrix, kt: &Matrix, tol: f64) -> Result<Classification> {
    same_dim(k, kt)?;
    for m in [k, kt] {
        if let Some((row, col, value)) = m.first_negative() {
            return Err(Error::NegativeEntry { row, col, value });
        }
    }
    Limits::current().check_clans(k.dim())?;
    let verdict = minors_equal(k, kt, tol)?;
    if let Some(Witness::Subset(witness)) = verdict.witness {
        return Err(Error::MinorsDiffer { witness });
    }

    let k_sym = k.is_symmetric(tol);
    if k_sym && kt.is_symmetric(tol) {
        let scale = 1f64.max(k.max_abs());
        return Ok(Classification::of(if k.max_abs_diff(kt)? <= tol * scale {
            ClassificationKind::Identical
        } else {
            ClassificationKind::Unresolved
        }));
    }
    if k_sym {
        return Ok(
            match diagonal_similarity_witness(&atomic_part(kt), k, tol)? {
                Some(w) => Classification {
                    kind: ClassificationKind::DiagonallySimilarToK,
                    witness: Some(w),
                },
                None => Classification::of(ClassificationKind::Unresolved),
            },
        );
    }
    if let Some(w) = diagonal_similarity_witness(kt, k, tol)? {
        return Ok(Classification {
            kind: ClassificationKind::DiagonallySimilarToK,
            witness: Some(w),
        });
    }
    if let Some(w) = diagonal_similarity_witness(kt, &k.transpose(), tol)? {
        return Ok(Classification {
            kind: ClassificationKind::DiagonallySimilarToKTranspose,
            witness: Some(w),
        });
    }
    Ok(Classification::of(
        if is_clan_free(k, crate::DEFAULT_RANK_TOL)? {
            ClassificationKind::Unresolved
        } else {
            ClassificationKind::ClanObstructed
        },
    ))
}
