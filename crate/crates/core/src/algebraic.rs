//! Eigenvalues with exact multiplicities. The characteristic polynomial is
//! split exactly into squarefree factors (Yun) over `Q` or over the
//! cyclotomic field `Q(zeta_k)`; only the simple roots of those factors are
//! found numerically. Dense QR loses accuracy like `eps^(1/m)` on an
//! eigenvalue with an `m x m` Jordan block; this route does not.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::berkowitz;
use crate::eigen::eigenvalues;
use crate::error::Result;
use crate::matrix::Matrix;
use crate::representation::{char_poly, LaurentMatrix};
use crate::scalar::{unit_root, Real};

/// Arithmetic of a field of characteristic zero, carried by a context value
/// so that elements need not know their modulus.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Polynomials as coefficient vectors in increasing degree, kept trimmed.
pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn derivative<F: Field>(f: &F, p: &[F::Elem]) -> Poly<F::Elem> {
    let d = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_int(&BigInt::from(i)), c))
        .collect();
    trim(f, d)
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let b = trim(f, b.to_vec());
    let lead_inv = f.inv(b.last().expect("division by the zero polynomial")).expect("nonzero lead");
    let mut r = trim(f, a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &lead_inv);
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bi));
        }
        q[shift] = c;
        r.pop();
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn make_monic<F: Field>(f: &F, p: &[F::Elem]) -> Poly<F::Elem> {
    match p.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero lead");
            p.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let (mut a, mut b) = (trim(f, a.to_vec()), trim(f, b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b);
        a = b;
        b = r;
    }
    make_monic(f, &a)
}

/// Returns `(g, s)` with `g = gcd(a, b)` monic and `s a = g mod b`.
fn gcd_with_cofactor<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let (mut r0, mut r1) = (trim(f, a.to_vec()), trim(f, b.to_vec()));
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let qs = mul(f, &q, &s1);
        let s = sub(f, &s0, &qs);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let inv = f.inv(r0.last().expect("gcd of zero polynomials")).expect("nonzero lead");
    let scale = |p: &[F::Elem]| p.iter().map(|c| f.mul(c, &inv)).collect::<Vec<_>>();
    (scale(&r0), scale(&s0))
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let zero = f.zero();
    let out = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(f, out)
}

/// Yun's squarefree decomposition: `p = c * prod_i a_i^i` with the `a_i`
/// monic, squarefree and pairwise coprime. Returns the nonconstant `(i, a_i)`.
pub fn squarefree<F: Field>(f: &F, p: &[F::Elem]) -> Vec<(usize, Poly<F::Elem>)> {
    let p = trim(f, p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let dp = derivative(f, &p);
    let a0 = gcd(f, &p, &dp);
    let mut b = divrem(f, &p, &a0).0;
    let c = divrem(f, &dp, &a0).0;
    let mut d = sub(f, &c, &derivative(f, &b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = gcd(f, &b, &d);
        let nb = divrem(f, &b, &a).0;
        let c = divrem(f, &d, &a).0;
        d = sub(f, &c, &derivative(f, &nb));
        if a.len() > 1 {
            out.push((i, a));
        }
        b = nb;
        i += 1;
    }
    out
}

/// Integer polynomials, increasing degree, trimmed.
pub mod zx {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    pub fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(p: Vec<BigInt>) -> Vec<BigInt> {
        let p = trim(p);
        let Some(lead) = p.last() else {
            return p;
        };
        let mut g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if lead.is_negative() {
            g = -g;
        }
        p.into_iter().map(|c| c / &g).collect()
    }

    pub fn derivative(p: &[BigInt]) -> Vec<BigInt> {
        trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let zero = BigInt::zero();
        let n = a.len().max(b.len());
        trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
    }

    /// `lc(b)^(deg a - deg b + 1) a mod b`.
    pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let lead = b.last().expect("division by the zero polynomial").clone();
        let mut r = trim(a.to_vec());
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let top = r.last().unwrap().clone();
            r = r.iter().map(|c| c * &lead).collect();
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] -= &top * bi;
            }
            r = trim(r);
        }
        r
    }

    /// Primitive gcd by the primitive remainder sequence.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        a
    }

    /// `a / b` when `b` divides `a` in `Z[x]`; `None` otherwise.
    pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        let b = trim(b.to_vec());
        let lead = b.last()?.clone();
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return r.is_empty().then(Vec::new);
        }
        let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let (c, rem) = r.last().unwrap().div_rem(&lead);
            if !rem.is_zero() {
                return None;
            }
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] -= &c * bi;
            }
            q[shift] = c;
            r = trim(r);
        }
        r.is_empty().then(|| trim(q))
    }

    /// Yun's squarefree decomposition over `Z`, factors primitive.
    pub fn squarefree(p: &[BigInt]) -> Vec<(usize, Vec<BigInt>)> {
        let p = primitive(p.to_vec());
        if p.len() <= 1 {
            return Vec::new();
        }
        let dp = derivative(&p);
        let a0 = gcd(&p, &dp);
        let exact = |x: &[BigInt], y: &[BigInt]| div_exact(x, y).expect("primitive divisor divides exactly");
        let mut b = exact(&p, &a0);
        let c = exact(&dp, &a0);
        let mut d = sub(&c, &derivative(&b));
        let mut out = Vec::new();
        let mut i = 1;
        while b.len() > 1 {
            let a = gcd(&b, &d);
            let nb = exact(&b, &a);
            let c = exact(&d, &a);
            d = sub(&c, &derivative(&nb));
            if a.len() > 1 {
                out.push((i, a));
            }
            b = nb;
            i += 1;
        }
        out
    }
}

/// Integer coefficients of the cyclotomic polynomial `Phi_k`, increasing.
pub fn cyclotomic_polynomial(k: u64) -> Vec<BigInt> {
    assert!(k > 0);
    let q = Rationals;
    let mut num: Poly<BigRational> = vec![BigRational::zero(); k as usize + 1];
    num[0] = -BigRational::one();
    num[k as usize] = BigRational::one();
    for d in (1..k).filter(|d| k % d == 0) {
        let phi: Vec<BigRational> = cyclotomic_polynomial(d).into_iter().map(BigRational::from_integer).collect();
        num = divrem(&q, &num, &phi).0;
    }
    num.into_iter().map(|c| c.to_integer()).collect()
}

/// `Q(zeta_k) = Q[z] / Phi_k(z)`, embedded in `C` by `z -> e^{2 pi i / k}`.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    k: u64,
    modulus: Poly<BigRational>,
}

impl CyclotomicField {
    pub fn new(k: u64) -> Self {
        let modulus = cyclotomic_polynomial(k).into_iter().map(BigRational::from_integer).collect();
        CyclotomicField { k, modulus }
    }

    pub fn order(&self) -> u64 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: Poly<BigRational>) -> Poly<BigRational> {
        divrem(&Rationals, &p, &self.modulus).1
    }

    /// `z^e` for any integer `e`.
    pub fn power_of_generator(&self, e: i64) -> Poly<BigRational> {
        let e = e.rem_euclid(self.k as i64) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        self.reduce(p)
    }

    pub fn embed<T: Real>(&self, a: &[BigRational]) -> Complex<T> {
        self.embed_conjugate(a, 1)
    }

    /// Image of `a` under the embedding `z -> e^{2 pi i j / k}`, `gcd(j, k) = 1`.
    pub fn embed_conjugate<T: Real>(&self, a: &[BigRational], j: i64) -> Complex<T> {
        let z = unit_root::<T>(j, self.k);
        a.iter().rev().fold(Complex::new(T::zero(), T::zero()), |acc, c| {
            acc * z + Complex::new(T::of(c.to_f64().unwrap_or(f64::NAN)), T::zero())
        })
    }
}

impl Field for CyclotomicField {
    type Elem = Poly<BigRational>;
    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![BigRational::one()]
    }
    fn from_int(&self, v: &BigInt) -> Self::Elem {
        trim(&Rationals, vec![BigRational::from_integer(v.clone())])
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let zero = BigRational::zero();
        trim(
            &Rationals,
            (0..n).map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).collect(),
        )
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        sub(&Rationals, a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(mul(&Rationals, a, b))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_empty() {
            return None;
        }
        // Phi_k is irreducible, so gcd(a, Phi_k) = 1 and s a = 1 mod Phi_k.
        let (g, s) = gcd_with_cofactor(&Rationals, a, &self.modulus);
        debug_assert_eq!(g, vec![BigRational::one()]);
        Some(self.reduce(s))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
}

/// Simple roots of `p` (numeric coefficients): companion-matrix QR followed
/// by a few Newton steps.
fn simple_roots<T: Real>(p: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let deg = p.len() - 1;
    let lead = p[deg];
    let monic: Vec<Complex<T>> = p.iter().map(|c| *c / lead).collect();
    let zero = Complex::new(T::zero(), T::zero());
    let companion = Matrix::from_fn(deg, deg, |i, j| {
        if i == 0 {
            -monic[deg - 1 - j]
        } else if i == j + 1 {
            Complex::new(T::one(), T::zero())
        } else {
            zero
        }
    });
    let dmonic: Vec<Complex<T>> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| *c * T::of(i as f64))
        .collect();
    let horner = |q: &[Complex<T>], x: Complex<T>| q.iter().rev().fold(zero, |acc, c| acc * x + c);
    let mut roots = eigenvalues(&companion)?;
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let d = horner(&dmonic, *r);
            if d.norm().is_zero() {
                break;
            }
            let step = horner(&monic, *r) / d;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *r = *r - step;
        }
    }
    Ok(roots)
}

fn roots_with_multiplicity<T: Real>(
    factors: &[(usize, Vec<Complex<T>>)],
) -> Result<Vec<Complex<T>>> {
    let mut out = Vec::new();
    for (mult, p) in factors {
        for r in simple_roots(p)? {
            out.extend(std::iter::repeat(r).take(*mult));
        }
    }
    Ok(out)
}

/// Eigenvalues of an integer matrix, with exact multiplicities.
pub fn integer_eigenvalues<T: Real>(m: &Matrix<BigInt>) -> Result<Vec<Complex<T>>> {
    let factors: Vec<(usize, Vec<Complex<T>>)> = zx::squarefree(&berkowitz(m))
        .into_iter()
        .map(|(i, a)| {
            let c = a
                .iter()
                .map(|c| Complex::new(T::of(c.to_f64().unwrap_or(f64::NAN)), T::zero()))
                .collect();
            (i, c)
        })
        .collect();
    roots_with_multiplicity(&factors)
}

/// Squarefree splitting of `det(x I - m(z))` over `Q(zeta_k)`, `z` the
/// field generator.
fn cyclotomic_squarefree(
    m: &LaurentMatrix<BigInt>,
    field: &CyclotomicField,
) -> Vec<(usize, Poly<Poly<BigRational>>)> {
    let coeffs: Vec<Poly<BigRational>> = char_poly(m)
        .x_coeffs()
        .iter()
        .map(|p| {
            p.terms().fold(field.zero(), |acc, (e, c)| {
                let term = field.mul(&field.from_int(c), &field.power_of_generator(e));
                field.add(&acc, &term)
            })
        })
        .collect();
    squarefree(field, &coeffs)
}

/// Eigenvalues of `m(e^{2 pi i j/k})`, with exact multiplicities taken in
/// `Q(zeta)` for the reduced order of the root.
pub fn eigenvalues_at_root<T: Real>(m: &LaurentMatrix<BigInt>, j: i64, k: u64) -> Result<Vec<Complex<T>>> {
    assert!(k > 0);
    let g = (j.rem_euclid(k as i64) as u64).gcd(&k);
    let (j, k) = (j.rem_euclid(k as i64) / g as i64, k / g);
    let field = CyclotomicField::new(k);
    let factors = cyclotomic_squarefree(m, &field);
    roots_at_conjugate(&field, &factors, j)
}

fn roots_at_conjugate<T: Real>(
    field: &CyclotomicField,
    factors: &[(usize, Poly<Poly<BigRational>>)],
    j: i64,
) -> Result<Vec<Complex<T>>> {
    let numeric: Vec<(usize, Vec<Complex<T>>)> = factors
        .iter()
        .map(|(i, a)| (*i, a.iter().map(|c| field.embed_conjugate(c, j)).collect()))
        .collect();
    roots_with_multiplicity(&numeric)
}

/// Eigenvalues of `m(eta_k^j)` for `j = 0..k`. The splitting over
/// `Q(zeta_d)` is computed once per divisor `d` of `k`; the roots of the
/// same order are its Galois conjugates.
pub fn eigenvalues_at_all_roots<T: Real>(m: &LaurentMatrix<BigInt>, k: u64) -> Result<Vec<Vec<Complex<T>>>> {
    assert!(k > 0);
    let mut cache: Vec<Option<(CyclotomicField, Vec<(usize, Poly<Poly<BigRational>>)>)>> = vec![None; k as usize + 1];
    (0..k)
        .map(|j| {
            let g = j.gcd(&k);
            let (jr, d) = (j / g, k / g);
            let (field, factors) = cache[d as usize].get_or_insert_with(|| {
                let field = CyclotomicField::new(d);
                let factors = cyclotomic_squarefree(m, &field);
                (field, factors)
            });
            roots_at_conjugate(field, factors, jr as i64)
        })
        .collect()
}

/// Largest absolute value among the integer coefficients, for diagnostics.
pub fn height(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::representation::{burau_matrix, substitute};

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn qs(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let phi = |k| cyclotomic_polynomial(k).iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn yun_splits_powers() {
        // (x - 1)^3 (x + 2) (x^2 + 1)^2
        let f = Rationals;
        let a = mul(&f, &mul(&f, &qs(&[-1, 1]), &qs(&[-1, 1])), &qs(&[-1, 1]));
        let b = mul(&f, &qs(&[1, 0, 1]), &qs(&[1, 0, 1]));
        let p = mul(&f, &mul(&f, &a, &qs(&[2, 1])), &b);
        let parts = squarefree(&f, &p);
        assert_eq!(parts, vec![(1, qs(&[2, 1])), (2, qs(&[1, 0, 1])), (3, qs(&[-1, 1]))]);
        assert!(squarefree(&f, &qs(&[5])).is_empty());

        let z = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let p: Vec<BigInt> = p.iter().map(|c| (c * q(3)).to_integer()).collect();
        let parts = zx::squarefree(&p);
        assert_eq!(parts, vec![(1, z(&[2, 1])), (2, z(&[1, 0, 1])), (3, z(&[-1, 1]))]);
        assert_eq!(zx::gcd(&z(&[-4, 0, 4]), &z(&[6, 6])), z(&[1, 1]));
        assert_eq!(zx::div_exact(&z(&[-1, 0, 1]), &z(&[1, 1])), Some(z(&[-1, 1])));
        assert_eq!(zx::div_exact(&z(&[1, 0, 1]), &z(&[1, 1])), None);
    }

    #[test]
    fn cyclotomic_inverse() {
        let f = CyclotomicField::new(5);
        let a = qs(&[1, 2, 0, -1]);
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        let z = f.embed::<f64>(&f.power_of_generator(7));
        assert!((z - unit_root::<f64>(2, 5)).norm() < 1e-15);
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn jordan_block_is_recovered_exactly() {
        // 4x4 Jordan block at 1, perturbed in the corner only by rounding.
        let m = Matrix::from_fn(4, 4, |i, j| BigInt::from((i == j || j == i + 1) as i64));
        let eigs = integer_eigenvalues::<f64>(&m).unwrap();
        assert_eq!(eigs.len(), 4);
        for z in eigs {
            assert!((z - Complex::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn agrees_with_dense_solver() {
        let w = BraidWord::new(4, vec![1, -2, 3, 2, 2]).unwrap();
        let m = burau_matrix::<BigInt>(&w);
        for (j, k) in [(0, 1), (1, 2), (1, 3), (2, 5), (3, 8)] {
            let mut a = eigenvalues_at_root::<f64>(&m, j, k).unwrap();
            let mut b = eigenvalues(&substitute(&m, unit_root::<f64>(j, k as u64)).unwrap()).unwrap();
            assert_eq!(a.len(), 3);
            let key = |z: &Complex<f64>| (z.re * 1e6).round() as i64 * 100_000_000 + (z.im * 1e6).round() as i64;
            a.sort_by_key(key);
            b.sort_by_key(key);
            let mut c = eigenvalues_at_all_roots::<f64>(&m, k as u64).unwrap().swap_remove(j as usize);
            c.sort_by_key(key);
            for ((x, y), z) in a.iter().zip(&b).zip(&c) {
                assert!((x - z).norm() < 1e-12);
                // -1 is a double, defective eigenvalue at 1/2; dense QR only
                // resolves it to about sqrt(eps).
                assert!((x - y).norm() < 1e-6, "{j}/{k}: {x} vs {y}");
            }
        }
    }
}
