//! Vector literals such as `2e1+1/3e4` or `-e2 + e3`, joined by `;` into
//! subspaces and by `,` into element tuples.

use num_traits::One;

use crate::algebra::ElementTuple;
use crate::error::{Error, Result};
use crate::exactlin::{zero_vector, Scalar, Subspace, Vector};

use super::format::parse_scalar;

fn literal_error(text: &str, message: impl std::fmt::Display) -> Error {
    Error::InvalidParameter(format!("bad vector literal `{text}`: {message}"))
}

pub fn parse_vector(text: &str, dim: usize) -> Result<Vector> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut v = zero_vector(dim);
    if compact == "0" {
        return Ok(v);
    }
    if compact.is_empty() {
        return Err(literal_error(text, "empty"));
    }
    let bytes = compact.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if pos > 0 {
            return Err(literal_error(text, "expected `+` or `-` between terms"));
        }
        let e_at = compact[pos..]
            .find('e')
            .map(|i| pos + i)
            .ok_or_else(|| literal_error(text, "missing basis vector `e<k>`"))?;
        let coef_text = &compact[pos..e_at];
        let mut coef = if coef_text.is_empty() {
            Scalar::one()
        } else {
            parse_scalar(coef_text)
                .filter(|_| !coef_text.starts_with(['+', '-']))
                .ok_or_else(|| literal_error(text, format!("bad coefficient `{coef_text}`")))?
        };
        if negative {
            coef = -coef;
        }
        let digits_end = compact[e_at + 1..]
            .find(|c: char| !c.is_ascii_digit())
            .map_or(compact.len(), |i| e_at + 1 + i);
        let k: usize = compact[e_at + 1..digits_end]
            .parse()
            .map_err(|_| literal_error(text, "missing basis index"))?;
        if k == 0 || k > dim {
            return Err(Error::IndexOutOfRange { index: k, dim });
        }
        v[k - 1] += coef;
        pos = digits_end;
    }
    Ok(v)
}

/// `;`-separated spanning vectors; an empty string or `0` is the zero subspace.
pub fn parse_subspace(text: &str, dim: usize) -> Result<Subspace> {
    if text.trim().is_empty() {
        return Ok(Subspace::zero(dim));
    }
    let vectors = text
        .split(';')
        .map(|part| parse_vector(part, dim))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_vectors(dim, vectors)
}

/// `,`-separated components; the count must be `arity - 1`.
pub fn parse_tuple(text: &str, dim: usize, arity: usize) -> Result<ElementTuple> {
    let comps = text
        .split(',')
        .map(|part| parse_vector(part, dim))
        .collect::<Result<Vec<_>>>()?;
    if comps.len() != arity - 1 {
        return Err(Error::Arity {
            expected: arity - 1,
            found: comps.len(),
        });
    }
    Ok(ElementTuple::new(comps))
}
