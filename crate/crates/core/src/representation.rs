//! Reduced Burau matrices and the exact objects derived from them.
//!
//! Generator convention, on the `(n-1) x (n-1)` module with basis
//! `e_0 .. e_{n-2}`:
//!
//! * `sigma_1`: identity except the top-left block `[[-t, 0], [1, 1]]`;
//! * `sigma_i`, `1 < i < n-1`: identity except the block on rows/columns
//!   `i-1, i, i+1` (1-based) equal to `[[1, t, 0], [0, -t, 0], [0, 1, 1]]`;
//! * `sigma_{n-1}`: identity except the bottom-right block `[[1, t], [0, -t]]`.
//!
//! All three are the same column operation with missing neighbours
//! dropped, which is how words are multiplied out.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::{berkowitz, determinant as domain_determinant};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::scalar::{Coefficient, Real};

pub type LaurentMatrix<C> = Matrix<LaurentPoly<C>>;

/// Right-multiplies `m` in place by the Burau image of letter `g`.
fn apply_letter<C: Coefficient>(m: &mut LaurentMatrix<C>, g: i64) {
    let r = m.dim();
    let p = g.unsigned_abs() as usize - 1;
    let t = LaurentPoly::<C>::t();
    let tinv = LaurentPoly::<C>::monomial(C::one(), -1);
    // Column p becomes  left * col(p-1) + mid * col(p) + right * col(p+1).
    let (left, mid, right) = if g > 0 {
        (t.clone(), -&t, LaurentPoly::one())
    } else {
        (LaurentPoly::one(), -&tinv, tinv.clone())
    };
    for i in 0..r {
        let mut acc = &m[(i, p)] * &mid;
        if p > 0 && !m[(i, p - 1)].is_zero() {
            acc += &(&m[(i, p - 1)] * &left);
        }
        if p + 1 < r && !m[(i, p + 1)].is_zero() {
            acc += &(&m[(i, p + 1)] * &right);
        }
        m[(i, p)] = acc;
    }
}

/// Burau image of `sigma_i^sign` in `B_n`. For `n == 2` this is the
/// degenerate `1 x 1` matrix `[-t^sign]`.
pub fn burau_generator<C: Coefficient>(i: usize, sign: i8, strings: usize) -> Result<LaurentMatrix<C>> {
    if strings < 2 {
        return Err(Error::TooFewStrings(strings));
    }
    if i == 0 || i >= strings {
        return Err(Error::GeneratorOutOfRange {
            index: i as i64,
            strings,
        });
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("generator sign must be +1 or -1, got {sign}")));
    }
    let mut m = Matrix::identity(strings - 1);
    apply_letter(&mut m, i as i64 * sign as i64);
    Ok(m)
}

/// Left-to-right product of the generator images of `w`.
pub fn burau_matrix<C: Coefficient>(w: &BraidWord) -> LaurentMatrix<C> {
    let mut m = Matrix::identity(w.strings() - 1);
    for &g in w.letters() {
        apply_letter(&mut m, g);
    }
    m
}

/// Exact determinant, by fraction-free elimination over `Z[t, 1/t]`.
pub fn determinant<C: Coefficient>(m: &LaurentMatrix<C>) -> LaurentPoly<C> {
    domain_determinant(m)
}

/// Polynomial in `x` whose coefficients are Laurent polynomials in `t`;
/// `x_coeffs[a]` multiplies `x^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly<C> {
    x_coeffs: Vec<LaurentPoly<C>>,
}

impl<C: Coefficient> BivariatePoly<C> {
    pub fn new(x_coeffs: Vec<LaurentPoly<C>>) -> Self {
        let mut x_coeffs = x_coeffs;
        while x_coeffs.len() > 1 && x_coeffs.last().is_some_and(Zero::is_zero) {
            x_coeffs.pop();
        }
        Self { x_coeffs }
    }

    pub fn degree_x(&self) -> usize {
        self.x_coeffs.len().saturating_sub(1)
    }

    pub fn x_coeffs(&self) -> &[LaurentPoly<C>] {
        &self.x_coeffs
    }

    /// Coefficient of `x^a t^b`.
    pub fn coeff(&self, a: usize, b: i64) -> C {
        self.x_coeffs.get(a).map_or_else(C::zero, |p| p.coeff(b))
    }

    pub fn is_monic(&self) -> bool {
        self.x_coeffs.last().is_some_and(One::is_one)
    }

    /// Substitutes `t = t0`, giving complex coefficients in increasing
    /// powers of `x`.
    pub fn eval_t<T: Real>(&self, t0: Complex<T>) -> Result<Vec<Complex<T>>> {
        self.x_coeffs.iter().map(|p| p.eval(t0)).collect()
    }

    pub fn eval<T: Real>(&self, x: Complex<T>, t0: Complex<T>) -> Result<Complex<T>> {
        let coeffs = self.eval_t(t0)?;
        Ok(coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, c| acc * x + c))
    }
}

impl<C: Coefficient> fmt::Display for BivariatePoly<C> {
    /// Highest power of `x` first, e.g. `x^2 + (-1+t+t^-1)x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, p) in self.x_coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let xpart = match a {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{a}"),
            };
            if a == 0 {
                write!(f, "{p}")?;
            } else if p.is_one() {
                f.write_str(&xpart)?;
            } else {
                write!(f, "({p}){xpart}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `det(x I - m(t))`, exact and monic in `x`.
pub fn char_poly<C: Coefficient>(m: &LaurentMatrix<C>) -> BivariatePoly<C> {
    BivariatePoly::new(berkowitz(m))
}

/// Writes `m = sum_i t^i M_i` and returns the nonzero `(i, M_i)` in
/// increasing `i`.
pub fn decompose<C: Coefficient>(m: &LaurentMatrix<C>) -> Vec<(i64, Matrix<C>)> {
    let lo = m.iter().filter(|p| !p.is_zero()).map(LaurentPoly::min_exp).min();
    let hi = m.iter().filter_map(LaurentPoly::max_exp).max();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Vec::new();
    };
    (lo..=hi)
        .map(|e| (e, m.map(|p| p.coeff(e))))
        .filter(|(_, mi)| !mi.is_zero())
        .collect()
}

/// Inverse of [`decompose`].
pub fn recompose<C: Coefficient>(dim: usize, parts: &[(i64, Matrix<C>)]) -> LaurentMatrix<C> {
    Matrix::from_fn(dim, dim, |i, j| {
        LaurentPoly::from_terms(parts.iter().map(|(e, mi)| (*e, mi[(i, j)].clone())))
    })
}

/// Entrywise substitution `t = eta` (`eta != 0`).
pub fn substitute<C: Coefficient, T: Real>(m: &LaurentMatrix<C>, eta: Complex<T>) -> Result<Matrix<Complex<T>>> {
    if eta.re.is_zero() && eta.im.is_zero() {
        return Err(Error::ZeroSubstitution);
    }
    Ok(m.map(|p| p.eval_unchecked(eta)))
}
