use std::fmt;

use num_traits::{One, Zero};

use super::{int, Matrix, Scalar};
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![Scalar::one()],
        }
    }

    /// `(t - r_1)(t - r_2)...`
    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), Scalar::one()]))
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplicity of `0` as a root: the index of the lowest nonzero coefficient.
    pub fn zero_root_order(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Scalar::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(tI - M)` by the Faddeev-LeVerrier recurrence, exact over the rationals.
pub fn charpoly(m: &Matrix) -> Result<Polynomial> {
    let n = m.ensure_square()?;
    // coeffs[k] multiplies t^k; monic of degree n
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut aux = Matrix::zeros(n, n);
    let identity = Matrix::identity(n);
    for k in 1..=n {
        aux = &(m * &aux) + &identity.scale(&coeffs[n - k + 1]);
        let c = -(m * &aux).trace() / int(k as i64);
        coeffs[n - k] = c;
    }
    Ok(Polynomial::new(coeffs))
}

pub fn zero_root_order(p: &Polynomial) -> Result<usize> {
    p.zero_root_order()
}
