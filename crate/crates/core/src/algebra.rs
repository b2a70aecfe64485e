//! Exact linear algebra over integral domains: fraction-free determinants
//! and division-free characteristic polynomials.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::scalar::Coefficient;

/// Commutative ring without zero divisors, with exact division.
pub trait Domain:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

impl<C: Coefficient> Domain for C {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        self.exact_div(divisor)
    }
}

impl<C: Coefficient> Domain for LaurentPoly<C> {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        self.exact_div(divisor)
    }
}

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// division is exact, so entries never leave the ring.
pub fn determinant<R: Domain>(m: &Matrix<R>) -> R {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.dim();
    if n == 0 {
        return R::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let num = a[(i, j)].clone() * pivot.clone() - lead.clone() * a[(k, j)].clone();
                a[(i, j)] = num
                    .exact_quotient(&prev)
                    .expect("Bareiss step divides exactly in an integral domain");
            }
            a[(i, k)] = R::zero();
        }
        prev = pivot;
    }
    let det = a[(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Coefficients of `det(x I - m)` in increasing powers of `x`, computed by
/// Berkowitz's division-free algorithm. The result has length `dim + 1` and
/// is monic.
pub fn berkowitz<R: Domain>(m: &Matrix<R>) -> Vec<R> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.dim();
    // Highest power first while building.
    let mut poly: Vec<R> = vec![R::one()];
    for r in 0..n {
        // Column of the Toeplitz factor: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let mut column = Vec::with_capacity(r + 2);
        column.push(R::one());
        column.push(-m[(r, r)].clone());
        // v = A_r^k C, starting with C = m[0..r, r]
        let mut v: Vec<R> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for step in 0..r {
            let dot = (0..r).fold(R::zero(), |acc, j| acc + m[(r, j)].clone() * v[j].clone());
            column.push(-dot);
            if step + 1 < r {
                v = (0..r)
                    .map(|i| {
                        (0..r).fold(R::zero(), |acc, j| acc + m[(i, j)].clone() * v[j].clone())
                    })
                    .collect();
            }
        }
        let next: Vec<R> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(R::zero(), |acc, j| {
                    acc + column[i - j].clone() * poly[j].clone()
                })
            })
            .collect();
        poly = next;
    }
    poly.reverse();
    poly
}
