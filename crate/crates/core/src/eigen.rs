//! Eigenvalues of dense real nonsymmetric matrices.
//!
//! The matrix is balanced (permutations isolating eigenvalues that can be
//! read off the diagonal, then power-of-two diagonal scaling of the
//! remaining block), reduced to upper Hessenberg form with Householder
//! reflections, and driven to real Schur form by the implicitly shifted
//! double-step QR iteration. Only eigenvalues are accumulated.

#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// QR sweeps allowed per eigenvalue before giving up.
const SWEEPS_PER_EIGENVALUE: usize = 60;

/// Eigenvalues with multiplicity, sorted by real part then imaginary part,
/// both descending. Complex eigenvalues come in exact conjugate pairs.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<Complex64>> {
    let n = m.dim();
    let mut h = Work::new(n, m.as_slice().to_vec());
    let (low, high) = h.balance();
    h.hessenberg(low, high);
    let mut out = h.schur_eigenvalues(low, high)?;
    out.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    Ok(out)
}

/// `ρ(M) = max |λ|`.
pub fn spectral_radius(m: &Matrix) -> Result<f64> {
    Ok(eigenvalues(m)?.iter().fold(0.0, |r, z| r.max(z.norm())))
}

/// Outcome of pairing two eigenvalue multisets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumMatch {
    pub equal: bool,
    /// Largest distance between paired eigenvalues.
    pub max_distance: f64,
    /// `max(1, largest modulus in either multiset)`.
    pub scale: f64,
}

/// Compares two eigenvalue multisets by greedy minimum-distance pairing:
/// the globally closest unpaired couple is matched first. The multisets
/// agree when every paired distance is within `tol·max(1, scale)`.
pub fn match_spectra(a: &[Complex64], b: &[Complex64], tol: f64) -> SpectrumMatch {
    let scale = a.iter().chain(b).fold(1.0f64, |s, z| s.max(z.norm()));
    if a.len() != b.len() {
        return SpectrumMatch {
            equal: false,
            max_distance: f64::INFINITY,
            scale,
        };
    }
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            pairs.push(((x - y).norm(), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut max_distance = 0.0f64;
    let mut matched = 0;
    for (d, i, j) in pairs {
        if used_a[i] || used_b[j] {
            continue;
        }
        used_a[i] = true;
        used_b[j] = true;
        max_distance = max_distance.max(d);
        matched += 1;
        if matched == a.len() {
            break;
        }
    }
    SpectrumMatch {
        equal: max_distance <= tol * scale,
        max_distance,
        scale,
    }
}

struct Work {
    n: usize,
    a: Vec<f64>,
}

impl Work {
    fn new(n: usize, a: Vec<f64>) -> Self {
        Work { n, a }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    #[inline]
    fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.a[i * self.n + j]
    }

    fn swap_index(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let n = self.n;
        for k in 0..n {
            self.a.swap(i * n + k, j * n + k);
        }
        for k in 0..n {
            self.a.swap(k * n + i, k * n + j);
        }
    }

    /// Returns the active range `[low, high]`; eigenvalues outside it sit
    /// on the diagonal of a block upper-triangular permuted matrix.
    fn balance(&mut self) -> (usize, usize) {
        let mut low = 0;
        let mut high = self.n - 1;

        // rows with no off-diagonal entry inside the active columns go to the bottom
        while let Some(j) = (low..=high)
            .rev()
            .find(|&j| (low..=high).all(|i| i == j || self.at(j, i) == 0.0))
        {
            self.swap_index(j, high);
            if high == low {
                return (low, high);
            }
            high -= 1;
        }
        // columns with no off-diagonal entry inside the active rows go to the top
        while low < high {
            let Some(j) =
                (low..=high).find(|&j| (low..=high).all(|i| i == j || self.at(i, j) == 0.0))
            else {
                break;
            };
            self.swap_index(j, low);
            low += 1;
        }

        const RADIX: f64 = 2.0;
        const RADIX2: f64 = RADIX * RADIX;
        loop {
            let mut converged = true;
            for i in low..=high {
                let mut c = 0.0;
                let mut r = 0.0;
                for j in low..=high {
                    if j != i {
                        c += self.at(j, i).abs();
                        r += self.at(i, j).abs();
                    }
                }
                if c == 0.0 || r == 0.0 {
                    continue;
                }
                let s = c + r;
                let mut f = 1.0;
                let mut g = r / RADIX;
                while c < g {
                    f *= RADIX;
                    c *= RADIX2;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= RADIX2;
                }
                if (c + r) / f < 0.95 * s {
                    converged = false;
                    let g = 1.0 / f;
                    for j in low..self.n {
                        *self.at_mut(i, j) *= g;
                    }
                    for j in 0..=high {
                        *self.at_mut(j, i) *= f;
                    }
                }
            }
            if converged {
                return (low, high);
            }
        }
    }

    /// Householder reduction of rows/columns `low..=high` to upper Hessenberg form.
    fn hessenberg(&mut self, low: usize, high: usize) {
        let n = self.n;
        let mut ort = vec![0.0; n];
        for m in low + 1..high {
            let scale: f64 = (m..=high).map(|i| self.at(i, m - 1).abs()).sum();
            if scale == 0.0 {
                continue;
            }
            let mut h = 0.0;
            for i in (m..=high).rev() {
                ort[i] = self.at(i, m - 1) / scale;
                h += ort[i] * ort[i];
            }
            let mut g = h.sqrt();
            if ort[m] > 0.0 {
                g = -g;
            }
            h -= ort[m] * g;
            ort[m] -= g;

            // H = (I - u uᵀ/h) H (I - u uᵀ/h)
            for j in m..n {
                let f = (m..=high)
                    .rev()
                    .map(|i| ort[i] * self.at(i, j))
                    .sum::<f64>()
                    / h;
                for i in m..=high {
                    *self.at_mut(i, j) -= f * ort[i];
                }
            }
            for i in 0..=high {
                let f = (m..=high)
                    .rev()
                    .map(|j| ort[j] * self.at(i, j))
                    .sum::<f64>()
                    / h;
                for j in m..=high {
                    *self.at_mut(i, j) -= f * ort[j];
                }
            }
            *self.at_mut(m, m - 1) = scale * g;
            for i in m + 1..=high {
                *self.at_mut(i, m - 1) = 0.0;
            }
        }
    }

    /// Real Schur iteration on the Hessenberg matrix; eigenvalues only.
    fn schur_eigenvalues(&mut self, low: usize, high: usize) -> Result<Vec<Complex64>> {
        let nn = self.n;
        let mut re = vec![0.0; nn];
        let mut im = vec![0.0; nn];
        let eps = f64::EPSILON;
        let low_i = low as isize;

        let mut norm = 0.0;
        for i in 0..nn {
            if i < low || i > high {
                re[i] = self.at(i, i);
            }
            for j in i.saturating_sub(1)..nn {
                norm += self.at(i, j).abs();
            }
        }

        let max_sweeps = SWEEPS_PER_EIGENVALUE * nn.max(1);
        let mut sweeps = 0;
        let mut n = high as isize;
        let mut iter = 0;
        let mut exshift = 0.0;
        let (mut p, mut q, mut r, mut s, mut z);
        let (mut w, mut x, mut y);

        while n >= low_i {
            let nu = n as usize;

            // look for a single small subdiagonal element
            let mut l = n;
            while l > low_i {
                let lu = l as usize;
                s = self.at(lu - 1, lu - 1).abs() + self.at(lu, lu).abs();
                if s == 0.0 {
                    s = norm;
                }
                if self.at(lu, lu - 1).abs() < eps * s {
                    break;
                }
                l -= 1;
            }

            if l == n {
                // one root
                *self.at_mut(nu, nu) += exshift;
                re[nu] = self.at(nu, nu);
                im[nu] = 0.0;
                n -= 1;
                iter = 0;
            } else if l == n - 1 {
                // two roots
                w = self.at(nu, nu - 1) * self.at(nu - 1, nu);
                p = (self.at(nu - 1, nu - 1) - self.at(nu, nu)) / 2.0;
                q = p * p + w;
                z = q.abs().sqrt();
                *self.at_mut(nu, nu) += exshift;
                *self.at_mut(nu - 1, nu - 1) += exshift;
                x = self.at(nu, nu);
                if q >= 0.0 {
                    z = if p >= 0.0 { p + z } else { p - z };
                    re[nu - 1] = x + z;
                    re[nu] = re[nu - 1];
                    if z != 0.0 {
                        re[nu] = x - w / z;
                    }
                    im[nu - 1] = 0.0;
                    im[nu] = 0.0;
                } else {
                    re[nu - 1] = x + p;
                    re[nu] = x + p;
                    im[nu - 1] = z;
                    im[nu] = -z;
                }
                n -= 2;
                iter = 0;
            } else {
                sweeps += 1;
                if sweeps > max_sweeps {
                    return Err(Error::NoConvergence {
                        iterations: sweeps - 1,
                    });
                }
                let lu = l as usize;

                // form shift
                x = self.at(nu, nu);
                y = 0.0;
                w = 0.0;
                if l < n {
                    y = self.at(nu - 1, nu - 1);
                    w = self.at(nu, nu - 1) * self.at(nu - 1, nu);
                }

                // exceptional shifts
                if iter == 10 {
                    exshift += x;
                    for i in low..=nu {
                        *self.at_mut(i, i) -= x;
                    }
                    s = self.at(nu, nu - 1).abs() + self.at(nu - 1, nu - 2).abs();
                    x = 0.75 * s;
                    y = x;
                    w = -0.4375 * s * s;
                }
                if iter == 30 {
                    s = (y - x) / 2.0;
                    s = s * s + w;
                    if s > 0.0 {
                        s = s.sqrt();
                        if y < x {
                            s = -s;
                        }
                        s = x - w / ((y - x) / 2.0 + s);
                        for i in low..=nu {
                            *self.at_mut(i, i) -= s;
                        }
                        exshift += s;
                        x = 0.964;
                        y = x;
                        w = x;
                    }
                }
                iter += 1;

                // look for two consecutive small subdiagonal elements
                let mut m = nu - 2;
                loop {
                    z = self.at(m, m);
                    r = x - z;
                    s = y - z;
                    p = (r * s - w) / self.at(m + 1, m) + self.at(m, m + 1);
                    q = self.at(m + 1, m + 1) - z - r - s;
                    r = self.at(m + 2, m + 1);
                    s = p.abs() + q.abs() + r.abs();
                    p /= s;
                    q /= s;
                    r /= s;
                    if m == lu {
                        break;
                    }
                    if self.at(m, m - 1).abs() * (q.abs() + r.abs())
                        < eps
                            * (p.abs()
                                * (self.at(m - 1, m - 1).abs()
                                    + z.abs()
                                    + self.at(m + 1, m + 1).abs()))
                    {
                        break;
                    }
                    m -= 1;
                }
                for i in m + 2..=nu {
                    *self.at_mut(i, i - 2) = 0.0;
                    if i > m + 2 {
                        *self.at_mut(i, i - 3) = 0.0;
                    }
                }

                // double QR step on rows l..=n, columns m..=n
                for k in m..nu {
                    let notlast = k != nu - 1;
                    if k != m {
                        p = self.at(k, k - 1);
                        q = self.at(k + 1, k - 1);
                        r = if notlast { self.at(k + 2, k - 1) } else { 0.0 };
                        x = p.abs() + q.abs() + r.abs();
                        if x == 0.0 {
                            continue;
                        }
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                    s = (p * p + q * q + r * r).sqrt();
                    if p < 0.0 {
                        s = -s;
                    }
                    if s == 0.0 {
                        continue;
                    }
                    if k != m {
                        *self.at_mut(k, k - 1) = -s * x;
                    } else if lu != m {
                        let v = self.at(k, k - 1);
                        *self.at_mut(k, k - 1) = -v;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;

                    for j in k..nn {
                        p = self.at(k, j) + q * self.at(k + 1, j);
                        if notlast {
                            p += r * self.at(k + 2, j);
                            *self.at_mut(k + 2, j) -= p * z;
                        }
                        *self.at_mut(k, j) -= p * x;
                        *self.at_mut(k + 1, j) -= p * y;
                    }
                    for i in 0..=nu.min(k + 3) {
                        p = x * self.at(i, k) + y * self.at(i, k + 1);
                        if notlast {
                            p += z * self.at(i, k + 2);
                            *self.at_mut(i, k + 2) -= p * r;
                        }
                        *self.at_mut(i, k) -= p;
                        *self.at_mut(i, k + 1) -= p * q;
                    }
                }
            }
        }

        Ok(re
            .into_iter()
            .zip(im)
            .map(|(a, b)| Complex64::new(a, b))
            .collect())
    }
}
