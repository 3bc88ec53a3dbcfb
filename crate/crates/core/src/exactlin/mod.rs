//! Exact linear algebra over the rationals.
//!
//! Every value here is an exact [`BigRational`]; rank decisions, kernels and
//! Fitting components are therefore never subject to rounding.

mod fitting;
mod matrix;
mod polynomial;
mod subspace;

pub use fitting::{fitting_single, matrix_lie_nilpotent, FittingComponents};
pub use matrix::{image, kernel, rref, Matrix, Rref};
pub use polynomial::{charpoly, zero_root_order, Polynomial};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An element of the ground field.
pub type Scalar = BigRational;

/// A dense coordinate vector.
pub type Vector = Vec<Scalar>;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The rational `num / den`. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::zero(); len]
}

/// Standard basis vector `e_{index+1}` of length `len` (0-based `index`).
pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coeff * x;
        }
    }
}

/// Formats a vector as a sparse combination of basis vectors, e.g. `2e1 - 1/3e4`.
pub fn format_vector(v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Scalar::zero();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
