//! Laurent polynomials `sum c_j t^j` over an exact coefficient ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{coeff_to_real, Coefficient, Real};

/// `coeffs[j]` is the coefficient of `t^(min_exp + j)`.
///
/// Canonical form: the first and last coefficients are nonzero; the zero
/// polynomial has no coefficients and `min_exp == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    min_exp: i64,
    coeffs: Vec<C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn new(min_exp: i64, coeffs: Vec<C>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.canonicalize();
        p
    }

    pub fn constant(c: C) -> Self {
        Self::new(0, vec![c])
    }

    /// `c * t^exp`.
    pub fn monomial(c: C, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(C::zero);
            *entry = entry.clone() + c;
        }
        let Some((&lo, _)) = map.iter().next() else {
            return Self::zero();
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        Self::new(lo, coeffs)
    }

    fn canonicalize(&mut self) {
        let trail = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trail);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn max_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> C {
        let idx = exp - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.min_exp + j as i64, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplies by a ring scalar.
    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// `true` for `±t^k`, the units of `Z[t, 1/t]` (and `c t^k` with `c`
    /// invertible in general).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// `p(1/t)`.
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => Self::new(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder in the Laurent ring.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both shifted to polynomials with nonzero constant term; the
        // quotient is then an ordinary polynomial.
        let num = &self.coeffs;
        let den = &divisor.coeffs;
        if num.len() < den.len() {
            return None;
        }
        let lead = den.last().unwrap();
        let mut rem: Vec<C> = num.clone();
        let qlen = num.len() - den.len() + 1;
        let mut quot = vec![C::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = &rem[qi + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead)?;
            for (dj, d) in den.iter().enumerate() {
                rem[qi + dj] = rem[qi + dj].clone() - q.clone() * d.clone();
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.min_exp - divisor.min_exp, quot))
    }

    /// `p^k` for `k >= 0`; negative `k` is allowed for monomials.
    pub fn pow(&self, k: i64) -> Option<Self> {
        if k < 0 {
            if !self.is_monomial() {
                return None;
            }
            let inv = Self::one().exact_div(self)?;
            return inv.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Some(acc)
    }

    /// Evaluates at a nonzero complex point: Horner's scheme on the
    /// coefficient sequence, times `eta^min_exp`.
    pub fn eval<T: Real>(&self, eta: Complex<T>) -> Result<Complex<T>> {
        if eta.re.is_zero() && eta.im.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        Ok(self.eval_unchecked(eta))
    }

    pub(crate) fn eval_unchecked<T: Real>(&self, eta: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * eta + Complex::new(coeff_to_real::<C, T>(c), T::zero());
        }
        if self.min_exp != 0 && !self.coeffs.is_empty() {
            acc = acc * eta.powi(self.min_exp as i32);
        }
        acc
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::new(self.min_exp, self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coefficient> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        Self {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_signed<C: Coefficient>(a: &LaurentPoly<C>, b: &LaurentPoly<C>, negate_b: bool) -> LaurentPoly<C> {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.min_exp.min(b.min_exp);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
    for (j, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.min_exp - lo) as usize + j] = c.clone();
    }
    for (j, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.min_exp - lo) as usize + j];
        *slot = if negate_b {
            slot.clone() - c.clone()
        } else {
            slot.clone() + c.clone()
        };
    }
    LaurentPoly::new(lo, coeffs)
}

impl<C: Coefficient> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        add_signed(self, rhs, false)
    }
}

impl<C: Coefficient> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        add_signed(self, rhs, true)
    }
}

impl<C: Coefficient> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: Self) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &Self) -> LaurentPoly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &Self) {
        *self = &*self + rhs;
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &Self) {
        *self = &*self - rhs;
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    /// Signed monomial sum in increasing exponent order, e.g. `-t^-1+2-t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
