//! Scalar abstractions.
//!
//! Exact algebra is generic over a [`Coefficient`] ring (machine integers,
//! big integers, or big rationals). Floating-point work is generic over a
//! [`Real`] type (`f32` or `f64`) through `num_complex::Complex<T>`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, One, Signed, ToPrimitive, Zero};

/// An integral domain with exact division, used for Laurent coefficients.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Signed
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Returns `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! impl_int_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if rhs.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(rhs);
                r.is_zero().then_some(q)
            }
        }
    )*};
}

impl_int_coefficient!(i64, i128, BigInt);

impl Coefficient for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Coefficient for Ratio<i64> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

/// Real floating-point scalar for numeric linear algebra.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Converts from `f64`, rounding as needed.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite conversion")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an exact coefficient into a floating-point scalar.
pub(crate) fn coeff_to_real<C: Coefficient, T: Real>(c: &C) -> T {
    match c.to_f64() {
        Some(v) => T::of(v),
        None => T::nan(),
    }
}

/// `e^{2 pi i j / k}`, with exact values at multiples of a quarter turn and
/// exact conjugate symmetry between `j` and `k - j`.
pub fn unit_root<T: Real>(j: i64, k: u64) -> Complex<T> {
    assert!(k > 0, "root of unity needs k > 0");
    let k = k as i64;
    let j = j.rem_euclid(k);
    if j == 0 {
        return Complex::new(T::one(), T::zero());
    }
    if 2 * j == k {
        return Complex::new(-T::one(), T::zero());
    }
    if 4 * j == k {
        return Complex::new(T::zero(), T::one());
    }
    if 4 * j == 3 * k {
        return Complex::new(T::zero(), -T::one());
    }
    if 2 * j > k {
        return unit_root::<T>(k - j, k as u64).conj();
    }
    let angle = T::TAU() * T::of(j as f64) / T::of(k as f64);
    Complex::new(angle.cos(), angle.sin())
}

/// `e^{2 pi i theta}` for `theta` in `[0, 1)`, conjugate-symmetric about 1/2.
pub fn unit_point<T: Real>(theta: f64) -> Complex<T> {
    let theta = theta.rem_euclid(1.0);
    if theta > 0.5 {
        return unit_point::<T>(1.0 - theta).conj();
    }
    if theta == 0.0 {
        return Complex::new(T::one(), T::zero());
    }
    if theta == 0.5 {
        return Complex::new(-T::one(), T::zero());
    }
    if theta == 0.25 {
        return Complex::new(T::zero(), T::one());
    }
    let angle = T::of(std::f64::consts::TAU * theta);
    Complex::new(angle.cos(), angle.sin())
}
