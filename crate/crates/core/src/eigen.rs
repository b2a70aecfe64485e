//! Dense complex eigenvalues: balancing, Householder reduction to upper
//! Hessenberg form, then shifted QR iteration with Givens rotations.
//!
//! The QR sweep is capped at `100 * dim` iterations in total; running out
//! is reported as [`Error::NoConvergence`].

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Real;

pub type CMatrix<T> = Matrix<Complex<T>>;

/// Iteration cap per unit of dimension.
pub const ITERATIONS_PER_DIM: usize = 100;

fn cabs1<T: Real>(z: Complex<T>) -> T {
    z.re.abs() + z.im.abs()
}

/// All eigenvalues of a square complex matrix, with multiplicity, in no
/// particular order.
pub fn eigenvalues<T: Real>(a: &CMatrix<T>) -> Result<Vec<Complex<T>>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    if a.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    hessenberg_qr(&mut h)
}

/// Largest eigenvalue modulus.
pub fn spectral_radius<T: Real>(a: &CMatrix<T>) -> Result<T> {
    Ok(eigenvalues(a)?
        .into_iter()
        .map(|z| z.norm())
        .fold(T::zero(), T::max))
}

/// Diagonal similarity by powers of two so that row and column norms are
/// comparable. Exact in binary floating point.
fn balance<T: Real>(a: &mut CMatrix<T>) {
    let n = a.dim();
    let two = T::of(2.0);
    let four = T::of(4.0);
    let mut converged = false;
    let mut sweeps = 0;
    while !converged && sweeps < 100 {
        converged = true;
        sweeps += 1;
        for i in 0..n {
            let mut c = T::zero();
            let mut r = T::zero();
            for j in 0..n {
                if j != i {
                    c += cabs1(a[(j, i)]);
                    r += cabs1(a[(i, j)]);
                }
            }
            if c.is_zero() || r.is_zero() {
                continue;
            }
            let s = c + r;
            let mut f = T::one();
            let mut g = r / two;
            while c < g {
                f *= two;
                c *= four;
            }
            g = r * two;
            while c >= g {
                f /= two;
                c /= four;
            }
            if (c + r) / f < T::of(0.95) * s {
                converged = false;
                let inv = T::one() / f;
                for j in 0..n {
                    a[(i, j)] = a[(i, j)] * inv;
                    a[(j, i)] = a[(j, i)] * f;
                }
            }
        }
    }
}

/// In-place unitary similarity to upper Hessenberg form.
fn hessenberg<T: Real>(a: &mut CMatrix<T>) {
    let n = a.dim();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let norm = (k + 1..n)
            .map(|i| a[(i, k)].norm_sqr())
            .fold(T::zero(), |s, x| s + x)
            .sqrt();
        if norm.is_zero() {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm().is_zero() {
            Complex::one()
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        let mut v: Vec<Complex<T>> = (k + 1..n).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2 = v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |s, x| s + x);
        if vnorm2.is_zero() {
            continue;
        }
        let beta = T::of(2.0) / vnorm2;
        // Left: rows k+1..n, columns k..n.
        for j in k..n {
            let mut dot = Complex::zero();
            for (idx, vi) in v.iter().enumerate() {
                dot += vi.conj() * a[(k + 1 + idx, j)];
            }
            let scale = dot * beta;
            for (idx, vi) in v.iter().enumerate() {
                a[(k + 1 + idx, j)] -= *vi * scale;
            }
        }
        // Right: all rows, columns k+1..n.
        for i in 0..n {
            let mut dot = Complex::zero();
            for (idx, vi) in v.iter().enumerate() {
                dot += a[(i, k + 1 + idx)] * *vi;
            }
            let scale = dot * beta;
            for (idx, vi) in v.iter().enumerate() {
                a[(i, k + 1 + idx)] -= scale * vi.conj();
            }
        }
        a[(k + 1, k)] = alpha;
        for i in k + 2..n {
            a[(i, k)] = Complex::zero();
        }
    }
}

/// Eigenvalues of `[[a, b], [c, d]]`, larger modulus first.
fn eig2<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> (Complex<T>, Complex<T>) {
    let half = T::of(0.5);
    let mean = (a + d) * half;
    let diff = (a - d) * half;
    let disc = (diff * diff + b * c).sqrt();
    let (l1, l2) = (mean + disc, mean - disc);
    let (big, small) = if l1.norm() >= l2.norm() { (l1, l2) } else { (l2, l1) };
    if big.norm().is_zero() {
        return (big, small);
    }
    // The smaller root from the determinant avoids cancellation.
    (big, (a * d - b * c) / big)
}

fn givens<T: Real>(x: Complex<T>, y: Complex<T>) -> (T, Complex<T>) {
    let ax = x.norm();
    let ay = y.norm();
    if ay.is_zero() {
        return (T::one(), Complex::zero());
    }
    if ax.is_zero() {
        return (T::zero(), Complex::one());
    }
    let r = ax.hypot(ay);
    let phase = x / ax;
    (ax / r, phase * y.conj() / r)
}

fn hessenberg_qr<T: Real>(h: &mut CMatrix<T>) -> Result<Vec<Complex<T>>> {
    let n = h.dim();
    let mut eigs = vec![Complex::zero(); n];
    if n == 0 {
        return Ok(eigs);
    }
    let cap = ITERATIONS_PER_DIM * n;
    let eps = T::epsilon();
    let scale = h.iter().map(|z| cabs1(*z)).fold(T::zero(), T::max);
    let mut total = 0usize;
    let mut since_deflation = 0usize;
    let mut hi = n - 1;
    loop {
        if hi == 0 {
            eigs[0] = h[(0, 0)];
            break;
        }
        let mut l = hi;
        while l > 0 {
            let mut s = cabs1(h[(l - 1, l - 1)]) + cabs1(h[(l, l)]);
            if s.is_zero() {
                s = scale;
            }
            if cabs1(h[(l, l - 1)]) <= eps * s {
                h[(l, l - 1)] = Complex::zero();
                break;
            }
            l -= 1;
        }
        if l == hi {
            eigs[hi] = h[(hi, hi)];
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if l + 1 == hi {
            let (e1, e2) = eig2(h[(l, l)], h[(l, hi)], h[(hi, l)], h[(hi, hi)]);
            eigs[l] = e1;
            eigs[hi] = e2;
            if l == 0 {
                break;
            }
            hi = l - 1;
            since_deflation = 0;
            continue;
        }
        if total >= cap {
            return Err(Error::NoConvergence {
                iterations: total,
                dim: n,
            });
        }
        total += 1;
        since_deflation += 1;
        let shift = if since_deflation % 10 == 0 {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + Complex::new(T::of(0.75) * cabs1(h[(hi, hi - 1)]), T::zero())
        } else {
            let d = h[(hi, hi)];
            let (e1, e2) = eig2(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], d);
            if (e1 - d).norm() <= (e2 - d).norm() {
                e1
            } else {
                e2
            }
        };
        qr_step(h, l, hi, shift);
    }
    Ok(eigs)
}

/// One explicitly shifted QR step on the window `lo..=hi`.
fn qr_step<T: Real>(h: &mut CMatrix<T>, lo: usize, hi: usize, shift: Complex<T>) {
    for i in lo..=hi {
        h[(i, i)] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..=hi {
            let x = h[(k, j)];
            let y = h[(k + 1, j)];
            h[(k, j)] = x * c + s * y;
            h[(k + 1, j)] = y * c - s.conj() * x;
        }
        h[(k + 1, k)] = Complex::zero();
        rotations.push((c, s));
    }
    for (idx, &(c, s)) in rotations.iter().enumerate() {
        let k = lo + idx;
        for i in lo..=(k + 1).min(hi) {
            let x = h[(i, k)];
            let y = h[(i, k + 1)];
            h[(i, k)] = x * c + y * s.conj();
            h[(i, k + 1)] = y * c - x * s;
        }
    }
    for i in lo..=hi {
        h[(i, i)] += shift;
    }
}

/// Determinant by LU factorisation with partial pivoting.
pub fn lu_determinant<T: Real>(a: &CMatrix<T>) -> Result<Complex<T>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    let n = a.dim();
    let mut m = a.clone();
    let mut det = Complex::<T>::one();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| m[(i, k)].norm().partial_cmp(&m[(j, k)].norm()).unwrap())
            .unwrap();
        if m[(p, k)].norm().is_zero() {
            return Ok(Complex::zero());
        }
        if p != k {
            m.swap_rows(p, k);
            det = -det;
        }
        let pivot = m[(k, k)];
        det *= pivot;
        for i in k + 1..n {
            let f = m[(i, k)] / pivot;
            for j in k + 1..n {
                let v = m[(k, j)];
                m[(i, j)] -= f * v;
            }
        }
    }
    Ok(det)
}
