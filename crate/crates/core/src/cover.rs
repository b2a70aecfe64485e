//! Independent check of the cyclic-cover splitting: the action on the
//! `k`-fold cover is assembled as one block-circulant integer matrix, whose
//! spectrum must equal the union of the spectra of `M(eta_k^j)`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;
use serde::Serialize;

use crate::representation::{decompose, substitute, LaurentMatrix};
use crate::algebraic::{eigenvalues_at_all_roots, integer_eigenvalues};
use crate::eigen::{eigenvalues, CMatrix};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{coeff_to_real, unit_root, Coefficient, Real};

/// Multiplication by `M(s)` on the free module of rank `base_dim` over
/// `Z[Z_k]`, in the basis `{s^i e_j}`: block `(i', i)` holds
/// `sum_l M_{lk + (i' - i mod k)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverAction<C> {
    pub k: usize,
    pub base_dim: usize,
    pub matrix: Matrix<C>,
}

impl<C: Coefficient> CoverAction<C> {
    pub fn dim(&self) -> usize {
        self.k * self.base_dim
    }

    /// Block `(bi, bj)` as a `base_dim x base_dim` matrix.
    pub fn block(&self, bi: usize, bj: usize) -> Matrix<C> {
        let r = self.base_dim;
        Matrix::from_fn(r, r, |i, j| self.matrix[(bi * r + i, bj * r + j)].clone())
    }

    pub fn to_complex<T: Real>(&self) -> CMatrix<T> {
        self.matrix.map(|c| Complex::new(coeff_to_real(c), T::zero()))
    }
}

/// Folds the exponents of `m` modulo `k`.
pub fn build_cover_action<C: Coefficient>(m: &LaurentMatrix<C>, k: usize) -> Result<CoverAction<C>> {
    if k == 0 {
        return Err(Error::InvalidArgument("cover degree k must be positive".into()));
    }
    let r = m.dim();
    let mut residues: Vec<Matrix<C>> = vec![Matrix::zeros(r, r); k];
    for (e, part) in decompose(m) {
        let c = e.rem_euclid(k as i64) as usize;
        residues[c] = Matrix::from_fn(r, r, |i, j| residues[c][(i, j)].clone() + part[(i, j)].clone());
    }
    let matrix = Matrix::from_fn(k * r, k * r, |row, col| {
        let (bi, i) = (row / r, row % r);
        let (bj, j) = (col / r, col % r);
        residues[(bi + k - bj) % k][(i, j)].clone()
    });
    Ok(CoverAction {
        k,
        base_dim: r,
        matrix,
    })
}

/// The deck transformation: block permutation sending block `i` to `i + 1`.
pub fn block_shift<C: Coefficient>(k: usize, base_dim: usize) -> Matrix<C> {
    let r = base_dim;
    Matrix::from_fn(k * r, k * r, |row, col| {
        if row % r == col % r && row / r == (col / r + 1) % k {
            C::one()
        } else {
            C::zero()
        }
    })
}

/// Exact check that the cover action commutes with the deck shift.
pub fn shift_commutation_check<C: Coefficient>(cover: &CoverAction<C>) -> bool {
    let t = block_shift::<C>(cover.k, cover.base_dim);
    let (a, b) = (&cover.matrix, &t);
    let n = cover.dim();
    // Products of a 0/1 permutation matrix, written out to keep C owned.
    let prod = |x: &Matrix<C>, y: &Matrix<C>| {
        Matrix::from_fn(n, n, |i, j| {
            (0..n).fold(C::zero(), |acc, l| {
                if x[(i, l)].is_zero() || y[(l, j)].is_zero() {
                    acc
                } else {
                    acc + x[(i, l)].clone() * y[(l, j)].clone()
                }
            })
        })
    };
    prod(a, b) == prod(b, a)
}

/// Largest distance in an optimal pairing of two equal-size multisets,
/// minimising the worst pair (bottleneck assignment).
pub fn bottleneck_distance<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!(
            "multisets of size {} and {}",
            a.len(),
            b.len()
        )));
    }
    let n = a.len();
    if n == 0 {
        return Ok(T::zero());
    }
    let dist: Vec<Vec<T>> = a.iter().map(|x| b.iter().map(|y| (*x - *y).norm()).collect()).collect();

    // Greedy pairing first; it is optimal in the common well-separated case
    // and its value bounds the optimum from above.
    let mut used = vec![false; n];
    let mut greedy = T::zero();
    for row in &dist {
        let (best, d) = row
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
            .map(|(j, d)| (j, *d))
            .unwrap();
        used[best] = true;
        greedy = greedy.max(d);
    }

    let mut candidates: Vec<T> = dist.iter().flatten().copied().filter(|d| *d <= greedy).collect();
    candidates.sort_by(|x, y| x.partial_cmp(y).unwrap());
    candidates.dedup();
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if has_perfect_matching(&dist, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[lo])
}

fn has_perfect_matching<T: Real>(dist: &[Vec<T>], threshold: T) -> bool {
    let n = dist.len();
    let mut match_of_b: Vec<Option<usize>> = vec![None; n];
    fn augment<T: Real>(
        u: usize,
        dist: &[Vec<T>],
        threshold: T,
        seen: &mut [bool],
        match_of_b: &mut [Option<usize>],
    ) -> bool {
        for v in 0..dist.len() {
            if dist[u][v] <= threshold && !seen[v] {
                seen[v] = true;
                if match_of_b[v].map_or(true, |w| augment(w, dist, threshold, seen, match_of_b)) {
                    match_of_b[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|u| {
        let mut seen = vec![false; n];
        augment(u, dist, threshold, &mut seen, &mut match_of_b)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectSumVerdict {
    pub k: usize,
    pub dim: usize,
    pub max_match_distance: f64,
    pub pass: bool,
}

/// How eigenvalue multisets are obtained for the comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumMethod {
    /// Dense Hessenberg QR on the numeric matrices.
    Dense,
    /// Exact squarefree splitting of the characteristic polynomials, then
    /// simple roots numerically.
    #[default]
    Exact,
}

/// Compares the spectrum of the block-circulant cover action with the
/// union over `j` of the spectra of `M(eta_k^j)`.
pub fn verify_direct_sum<T: Real>(
    m: &LaurentMatrix<BigInt>,
    k: usize,
    tol: f64,
    method: SpectrumMethod,
) -> Result<DirectSumVerdict> {
    match method {
        SpectrumMethod::Dense => verify_direct_sum_dense::<BigInt, T>(m, k, tol),
        SpectrumMethod::Exact => {
            check_tol(tol)?;
            let cover = build_cover_action(m, k)?;
            let whole = integer_eigenvalues::<T>(&cover.matrix)?;
            let parts: Vec<Complex<T>> = eigenvalues_at_all_roots::<T>(m, k as u64)?.concat();
            verdict(k, cover.dim(), &whole, &parts, tol)
        }
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    Ok(())
}

fn verdict<T: Real>(k: usize, dim: usize, a: &[Complex<T>], b: &[Complex<T>], tol: f64) -> Result<DirectSumVerdict> {
    let d = bottleneck_distance(a, b)?.to_f64().unwrap_or(f64::NAN);
    Ok(DirectSumVerdict {
        k,
        dim,
        max_match_distance: d,
        pass: d <= tol,
    })
}

/// [`verify_direct_sum`] with dense QR throughout, for any coefficient type.
pub fn verify_direct_sum_dense<C: Coefficient, T: Real>(
    m: &LaurentMatrix<C>,
    k: usize,
    tol: f64,
) -> Result<DirectSumVerdict> {
    check_tol(tol)?;
    let cover = build_cover_action(m, k)?;
    let whole = eigenvalues(&cover.to_complex::<T>())?;
    let mut parts = Vec::with_capacity(whole.len());
    for j in 0..k {
        let a: CMatrix<T> = substitute(m, unit_root::<T>(j as i64, k as u64))?;
        parts.extend(eigenvalues(&a)?);
    }
    verdict(k, cover.dim(), &whole, &parts, tol)
}

/// For the deck-shift eigenspace with eigenvalue `eta_k^j`, the largest
/// residual `|C v - w|` over the vectors `v = (a, eta^-j a, eta^-2j a, ..)`,
/// `a` a standard basis vector, with `w` built from `M(eta_k^j) a`.
pub fn eigenspace_residual<C: Coefficient, T: Real>(
    cover: &CoverAction<C>,
    m: &LaurentMatrix<C>,
    j: usize,
) -> Result<T> {
    let (k, r) = (cover.k, cover.base_dim);
    let c: CMatrix<T> = cover.to_complex();
    let eta = unit_root::<T>(j as i64, k as u64);
    let inv = eta.conj();
    let block_scale: Vec<Complex<T>> = (0..k).map(|i| inv.powi(i as i32)).collect();
    let mj: CMatrix<T> = substitute(m, eta)?;
    let mut worst = T::zero();
    for col in 0..r {
        let v: Vec<Complex<T>> = (0..k * r)
            .map(|idx| if idx % r == col { block_scale[idx / r] } else { Complex::zero() })
            .collect();
        for row in 0..k * r {
            let cv = (0..k * r).fold(Complex::zero(), |acc: Complex<T>, l| acc + c[(row, l)] * v[l]);
            let expected = block_scale[row / r] * mj[(row % r, col)];
            worst = worst.max((cv - expected).norm());
        }
    }
    Ok(worst)
}
