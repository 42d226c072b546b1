//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use effspec::{IndexSet, Matrix};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `[lo, hi)`.
pub fn uniform(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Matrix {
    Matrix::new(n, (0..n * n).map(|_| rng.gen_range(lo..hi)).collect()).unwrap()
}

/// Nonnegative with a random zero pattern: off-diagonal entries vanish with
/// probability `p_zero`, diagonal entries with probability `p_zero / 2`.
pub fn sparse_nonnegative(rng: &mut impl Rng, n: usize, p_zero: f64) -> Matrix {
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let p = if i == j { p_zero / 2.0 } else { p_zero };
            data.push(if rng.gen_bool(p) {
                0.0
            } else {
                rng.gen_range(0.05..1.0)
            });
        }
    }
    Matrix::new(n, data).unwrap()
}

pub fn positive_vector(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}

/// Log-uniform in `[lo, hi]`.
pub fn log_uniform_vector(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n)
        .map(|_| (rng.gen_range(lo.ln()..=hi.ln())).exp())
        .collect()
}

/// A random subset of `{0..n}` with exactly `size` members.
pub fn random_subset(rng: &mut impl Rng, n: usize, size: usize) -> IndexSet {
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    IndexSet::new(n, &idx[..size]).unwrap()
}

/// A matrix with `K[α, αᶜ] = v·bᵀ` and `K[αᶜ, α] = c·wᵀ`, all factors and
/// diagonal blocks drawn from `[lo, hi)`.
pub fn clan_instance(rng: &mut impl Rng, n: usize, alpha: &IndexSet, lo: f64, hi: f64) -> Matrix {
    let m = alpha.len();
    let v = positive_vector(rng, m, lo, hi);
    let w = positive_vector(rng, m, lo, hi);
    let b = positive_vector(rng, n - m, lo, hi);
    let c = positive_vector(rng, n - m, lo, hi);
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
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(match (alpha.contains(i), alpha.contains(j)) {
                (true, false) => v[pos[i]] * b[pos[j]],
                (false, true) => c[pos[i]] * w[pos[j]],
                _ => rng.gen_range(lo..hi),
            });
        }
    }
    Matrix::new(n, data).unwrap()
}

/// Clan test by explicit 2×2 minors: every 2×2 minor of both off-diagonal
/// blocks is at most `tol·‖block‖²_max` in magnitude.
pub fn brute_force_clans(k: &Matrix, tol: f64) -> Vec<IndexSet> {
    let n = k.dim();
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    for mask in 1u64..(1 << n) - 1 {
        let alpha = IndexSet::from_mask(n, mask);
        if alpha.len() < 2 || alpha.len() > n - 2 {
            continue;
        }
        let rest = alpha.complement();
        if rank_le_one_by_minors(k, &alpha.to_vec(), &rest.to_vec(), tol)
            && rank_le_one_by_minors(k, &rest.to_vec(), &alpha.to_vec(), tol)
        {
            out.push(alpha);
        }
    }
    out.sort_by_key(|s| (s.len(), s.to_vec()));
    out
}

fn rank_le_one_by_minors(k: &Matrix, rows: &[usize], cols: &[usize], tol: f64) -> bool {
    let max = rows
        .iter()
        .flat_map(|&i| cols.iter().map(move |&j| k[(i, j)].abs()))
        .fold(0.0, f64::max);
    let bound = tol * max * max;
    for (a, &i1) in rows.iter().enumerate() {
        for &i2 in &rows[a + 1..] {
            for (b, &j1) in cols.iter().enumerate() {
                for &j2 in &cols[b + 1..] {
                    let minor = k[(i1, j1)] * k[(i2, j2)] - k[(i1, j2)] * k[(i2, j1)];
                    if minor.abs() > bound {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Irreducibility straight from the subset definition: every proper split
/// `β | α∖β` of `α` has a nonzero entry in `K[β, α∖β]`.
pub fn irreducible_by_splits(k: &Matrix, alpha: &[usize]) -> bool {
    let m = alpha.len();
    if m == 1 {
        return true;
    }
    for split in 1u64..(1 << m) - 1 {
        let (inside, outside): (Vec<usize>, Vec<usize>) =
            (0..m).partition(|&p| split >> p & 1 == 1);
        let connected = inside
            .iter()
            .any(|&p| outside.iter().any(|&q| k[(alpha[p], alpha[q])] != 0.0));
        if !connected {
            return false;
        }
    }
    true
}

/// Inclusion-maximal irreducible subsets, sorted by smallest member.
pub fn brute_force_atoms(k: &Matrix) -> Vec<Vec<usize>> {
    let n = k.dim();
    let irreducible: Vec<u64> = (1u64..1 << n)
        .filter(|&mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            irreducible_by_splits(k, &members)
        })
        .collect();
    let mut out: Vec<Vec<usize>> = irreducible
        .iter()
        .filter(|&&a| !irreducible.iter().any(|&b| b != a && a & b == a))
        .map(|&mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Solves `A x = rhs` by Gaussian elimination with partial pivoting.
pub fn solve(a: &Matrix, rhs: &[f64]) -> Vec<f64> {
    let n = a.dim();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(rhs[i]);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))
            .unwrap();
        m.swap(col, piv);
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            let f = row[col] / pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= f * p;
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| m[i][j] * x[j]).sum();
        x[i] = (m[i][n] - s) / m[i][i];
    }
    x
}
