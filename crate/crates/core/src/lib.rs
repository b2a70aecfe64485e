//! Reduced Burau matrices over exact Laurent polynomials, their spectra on
//! the unit circle, sharpness at roots of unity, a cyclic-cover oracle and
//! the Nielsen–Thurston predictions they are checked against.
//!
//! Exact algebra is generic over [`Coefficient`] (machine integers,
//! `BigInt`, rationals); numerics are generic over [`Real`] (`f32`, `f64`).

pub mod algebra;
pub mod algebraic;
pub mod braid;
pub mod corpus;
pub mod cover;
pub mod eigen;
pub mod error;
pub mod format;
pub mod json;
pub mod laurent;
pub mod matrix;
pub mod nt;
pub mod representation;
pub mod scalar;
pub mod spectral;

pub use braid::{parse_braid, BlockBraidTerm, BraidWord, Permutation};
pub use representation::{burau_generator, burau_matrix, char_poly, decompose, recompose, substitute, BivariatePoly, LaurentMatrix};
pub use cover::{build_cover_action, shift_commutation_check, verify_direct_sum, CoverAction, DirectSumVerdict, SpectrumMethod};
pub use eigen::{eigenvalues, spectral_radius, CMatrix};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use nt::{
    burau_orientable, compute_a, eph_check, k_bound_check, pa_sharpness_classifier, predict_sharp_set, ComponentData,
    Orientability, ReductionData,
};
pub use scalar::{unit_root, Coefficient, Real};
pub use spectral::{scan, sharpness, unity_spectrum, RootFraction, SharpnessReport, SpectralScan};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;

/// Integer Laurent polynomial, the coefficient ring of the Burau matrix.
pub type IntLaurent = LaurentPoly<BigInt>;
pub type BurauMatrix = LaurentMatrix<BigInt>;
pub type RationalLaurent = LaurentPoly<BigRational>;
pub type RationalBurauMatrix = LaurentMatrix<BigRational>;
pub type BurauPoly = BivariatePoly<BigInt>;
pub type Complex64 = Complex<f64>;
pub type ComplexMatrix = CMatrix<f64>;
pub type ComplexMatrix32 = CMatrix<f32>;
pub type Scan = SpectralScan<f64>;
pub type Cover = CoverAction<BigInt>;
