//! Spectral radius of the Burau matrix on the unit circle,
//! `r(theta) = spec(B(e^{2 pi i theta}))`, and its values at roots of unity.

use std::cmp::Ordering;
use std::fmt;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::representation::{burau_matrix, substitute, LaurentMatrix};
use crate::eigen::{eigenvalues, CMatrix};
use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::scalar::{unit_point, unit_root, Real};

/// Default absolute tolerance on a spectral radius when deciding sharpness.
pub const DEFAULT_SHARP_TOL: f64 = 1e-6;

/// A root of unity `e^{2 pi i j/k}` as a reduced fraction `j/k`,
/// `0 <= j < k`, `gcd(j, k) = 1`. `-1` is `1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootFraction {
    pub j: u64,
    pub k: u64,
}

impl RootFraction {
    /// Reduces `j/k` modulo 1.
    pub fn new(j: i64, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("root of unity with k = 0".into()));
        }
        let j = j.rem_euclid(k as i64) as u64;
        let g = j.gcd(&k);
        Ok(Self { j: j / g, k: k / g })
    }

    pub fn theta(&self) -> f64 {
        self.j as f64 / self.k as f64
    }

    pub fn point<T: Real>(&self) -> Complex<T> {
        unit_root(self.j as i64, self.k)
    }
}

impl Ord for RootFraction {
    /// Orders by the angle `j/k`.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j as u128 * other.k as u128)
            .cmp(&(other.j as u128 * self.k as u128))
            .then(self.k.cmp(&other.k))
    }
}

impl PartialOrd for RootFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.j, self.k)
    }
}

/// Sorts by decreasing modulus, ties by real then imaginary part.
pub fn sort_eigenvalues<T: Real>(eigs: &mut [Complex<T>]) {
    eigs.sort_by(|a, b| {
        b.norm()
            .partial_cmp(&a.norm())
            .unwrap_or(Ordering::Equal)
            .then(a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal))
            .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
    });
}

fn radius_of<T: Real>(eigs: &[Complex<T>]) -> T {
    eigs.iter().map(|z| z.norm()).fold(T::zero(), T::max)
}

/// Eigenvalues of `B(e^{2 pi i j/k})`, sorted by decreasing modulus.
pub fn eigenvalues_at<T: Real>(m: &LaurentMatrix<BigInt>, j: i64, k: u64) -> Result<Vec<Complex<T>>> {
    let a: CMatrix<T> = substitute(m, unit_root::<T>(j, k))?;
    let mut eigs = eigenvalues(&a)?;
    sort_eigenvalues(&mut eigs);
    Ok(eigs)
}

/// `r(theta) = spec(B(e^{2 pi i theta}))` for an arbitrary real `theta`.
pub fn radius_at_theta<T: Real>(m: &LaurentMatrix<BigInt>, theta: f64) -> Result<T> {
    let a: CMatrix<T> = substitute(m, unit_point::<T>(theta))?;
    Ok(radius_of(&eigenvalues(&a)?))
}

/// `spec(B(e^{2 pi i j/k}))`.
pub fn radius_at<T: Real>(m: &LaurentMatrix<BigInt>, j: i64, k: u64) -> Result<T> {
    Ok(radius_of(&eigenvalues_at::<T>(m, j, k)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSample<T> {
    pub theta: f64,
    pub radius: T,
    pub eigenvalues: Vec<Complex<T>>,
}

/// `r(theta)` on the grid `theta = j / resolution`, `j = 0 .. resolution-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralScan<T> {
    pub word: BraidWord,
    pub resolution: usize,
    pub samples: Vec<SpectralSample<T>>,
}

impl<T: Real> SpectralScan<T> {
    pub fn max_radius(&self) -> T {
        self.samples.iter().map(|s| s.radius).fold(T::zero(), T::max)
    }

    pub fn radii(&self) -> Vec<T> {
        self.samples.iter().map(|s| s.radius).collect()
    }

    /// Writes `theta,spectral_radius[,re_1,im_1,...]` rows with 12
    /// significant digits.
    pub fn write_csv<W: Write>(&self, out: &mut W, with_eigenvalues: bool) -> io::Result<()> {
        let dim = self.word.strings() - 1;
        write!(out, "theta,spectral_radius")?;
        if with_eigenvalues {
            for i in 1..=dim {
                write!(out, ",re_{i},im_{i}")?;
            }
        }
        writeln!(out)?;
        for s in &self.samples {
            write!(
                out,
                "{},{}",
                fmt_sig(s.theta, 12),
                fmt_sig(s.radius.to_f64().unwrap_or(f64::NAN), 12)
            )?;
            if with_eigenvalues {
                for z in &s.eigenvalues {
                    write!(
                        out,
                        ",{},{}",
                        fmt_sig(z.re.to_f64().unwrap_or(f64::NAN), 12),
                        fmt_sig(z.im.to_f64().unwrap_or(f64::NAN), 12)
                    )?;
                }
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Samples `r(theta)` and the eigenvalue loci on a uniform closed-open grid.
pub fn scan<T: Real>(w: &BraidWord, resolution: usize) -> Result<SpectralScan<T>> {
    if resolution < 2 {
        return Err(Error::InvalidArgument(format!(
            "scan resolution must be at least 2, got {resolution}"
        )));
    }
    let m = burau_matrix::<BigInt>(w);
    let samples = (0..resolution)
        .into_par_iter()
        .map(|j| {
            let eigs = eigenvalues_at::<T>(&m, j as i64, resolution as u64)?;
            Ok(SpectralSample {
                theta: j as f64 / resolution as f64,
                radius: radius_of(&eigs),
                eigenvalues: eigs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralScan {
        word: w.clone(),
        resolution,
        samples,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnitySlot<T> {
    pub j: u64,
    pub eta: Complex<T>,
    pub eigenvalues: Vec<Complex<T>>,
}

impl<T: Real> UnitySlot<T> {
    pub fn radius(&self) -> T {
        radius_of(&self.eigenvalues)
    }
}

/// Eigenvalues of `B(eta_k^j)` for `j = 0 .. k-1`, `eta_k = e^{2 pi i / k}`.
pub fn unity_spectrum<T: Real>(w: &BraidWord, k: u64) -> Result<Vec<UnitySlot<T>>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let m = burau_matrix::<BigInt>(w);
    (0..k)
        .into_par_iter()
        .map(|j| {
            Ok(UnitySlot {
                j,
                eta: unit_root(j as i64, k),
                eigenvalues: eigenvalues_at::<T>(&m, j as i64, k)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpRoot {
    #[serde(flatten)]
    pub root: RootFraction,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub strings: usize,
    pub lambda: f64,
    pub tol: f64,
    pub k_max: u64,
    pub sharp: Vec<SharpRoot>,
    pub minimal_k: Option<u64>,
    /// Whether the minimal `k` satisfies `k <= 2n/3`.
    pub within_bound: Option<bool>,
    /// Whether the minimal `k` is a power of two.
    pub power_of_two: Option<bool>,
}

impl SharpnessReport {
    pub fn fractions(&self) -> Vec<RootFraction> {
        self.sharp.iter().map(|s| s.root).collect()
    }
}

/// Scans every primitive `j/k` with `2 <= k <= k_max`, `0 < j < k`, and
/// reports those with `spec(B(e^{2 pi i j/k})) >= lambda - tol`.
pub fn sharpness(w: &BraidWord, lambda: f64, k_max: u64, tol: f64) -> Result<SharpnessReport> {
    if !(lambda > 1.0) {
        return Err(Error::InvalidArgument(format!("lambda must exceed 1, got {lambda}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    let m = burau_matrix::<BigInt>(w);
    let roots: Vec<RootFraction> = (2..=k_max)
        .flat_map(|k| (1..k).filter(move |j| j.gcd(&k) == 1).map(move |j| RootFraction { j, k }))
        .collect();
    let values = roots
        .par_iter()
        .map(|r| radius_at::<f64>(&m, r.j as i64, r.k))
        .collect::<Result<Vec<_>>>()?;
    let mut sharp: Vec<SharpRoot> = roots
        .into_iter()
        .zip(values)
        .filter(|(_, v)| *v >= lambda - tol)
        .map(|(root, value)| SharpRoot { root, value })
        .collect();
    sharp.sort_by(|a, b| a.root.cmp(&b.root));
    let minimal_k = sharp.iter().map(|s| s.root.k).min();
    let n = w.strings() as u64;
    Ok(SharpnessReport {
        strings: w.strings(),
        lambda,
        tol,
        k_max,
        sharp,
        minimal_k,
        within_bound: minimal_k.map(|k| 3 * k <= 2 * n),
        power_of_two: minimal_k.map(u64::is_power_of_two),
    })
}

/// Independent spectral-radius estimate by power iteration with Rayleigh
/// quotients. Reliable only when one eigenvalue strictly dominates.
pub fn power_iteration_radius<T: Real>(a: &CMatrix<T>, iterations: usize) -> T {
    let n = a.dim();
    if n == 0 {
        return T::zero();
    }
    let mut v: Vec<Complex<T>> = (0..n)
        .map(|i| Complex::new(T::one(), T::of(0.1 * i as f64)))
        .collect();
    let mut estimate = T::zero();
    for _ in 0..iterations {
        let w: Vec<Complex<T>> = (0..n)
            .map(|i| (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + a[(i, j)] * v[j]))
            .collect();
        let norm = w.iter().map(|z| z.norm_sqr()).fold(T::zero(), |s, x| s + x).sqrt();
        if norm.is_zero() {
            return T::zero();
        }
        let vnorm = v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |s, x| s + x).sqrt();
        estimate = norm / vnorm;
        v = w.into_iter().map(|z| z / norm).collect();
    }
    estimate
}
