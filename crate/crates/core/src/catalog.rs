//! Reference algebras used as fixtures, and the lift of a binary Leibniz
//! algebra to an n-ary one.
//!
//! Constructor parameters use the 1-based conventions of the printed tables
//! (`e_1, ..., e_m`); the resulting [`NAlgebra`] uses 0-based indices.

use std::fmt;

use crate::algebra::{basis_tuples, check_fundamental_identity, NAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{int, unit_vector, zero_vector, Scalar, Vector};

use num_traits::Zero;

fn scaled_unit(m: usize, index: usize, c: Scalar) -> Vector {
    let mut v = zero_vector(m);
    v[index] = c;
    v
}

/// `L_{p,q}`: `[e_{p-1}, e_1, ..., e_{n-1}] = e_{p-1}` and
/// `[e_{q-1}, e_1, ..., e_{n-1}] = -e_{q-1}`, all other products zero.
pub fn make_lpq(n: usize, m: usize, p: usize, q: usize) -> Result<NAlgebra> {
    if n < 2 || p < 2 || q < 2 || p > n || q > n || p == q {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= p != q <= n, got n={n}, p={p}, q={q}"
        )));
    }
    if m + 1 < n {
        return Err(Error::InvalidParameter(format!(
            "need m >= n - 1, got m={m}, n={n}"
        )));
    }
    let tail: Vec<usize> = (0..n - 1).collect();
    let entry = |head: usize, sign: i64| {
        let mut t = vec![head];
        t.extend(&tail);
        (t, scaled_unit(m, head, int(sign)))
    };
    NAlgebra::new(
        format!("L_{p},{q}(n={n},m={m})"),
        n,
        m,
        [entry(p - 2, 1), entry(q - 2, -1)],
    )
}

/// `[e_i, e_1, ..., e_{n-1}] = alpha_i e_i` for every `i`, all other products zero.
/// Requires every `alpha_i != 0` and `alpha_1 + ... + alpha_{n-1} = 0`.
pub fn make_diagonal(n: usize, m: usize, alpha: &[Scalar]) -> Result<NAlgebra> {
    if n < 2 || m + 1 < n {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and m >= n - 1, got n={n}, m={m}"
        )));
    }
    if alpha.len() != m {
        return Err(Error::InvalidParameter(format!(
            "need {m} coefficients, got {}",
            alpha.len()
        )));
    }
    if alpha.iter().any(Zero::is_zero) {
        return Err(Error::InvalidParameter(
            "every coefficient must be nonzero".into(),
        ));
    }
    let head_sum: Scalar = alpha[..n - 1].iter().cloned().sum();
    if !head_sum.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "the first n - 1 coefficients must sum to zero, got {head_sum}"
        )));
    }
    let tail: Vec<usize> = (0..n - 1).collect();
    let entries = alpha.iter().enumerate().map(|(i, a)| {
        let mut t = vec![i];
        t.extend(&tail);
        (t, scaled_unit(m, i, a.clone()))
    });
    NAlgebra::new(format!("Diagonal(n={n},m={m})"), n, m, entries)
}

/// `[e_k, e_1, ..., e_1] = e_k` for `2 <= k <= m`, all other products zero.
pub fn make_cartan_example(n: usize, m: usize) -> Result<NAlgebra> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and m >= 2, got n={n}, m={m}"
        )));
    }
    let entries = (1..m).map(|k| {
        let mut t = vec![k];
        t.extend(std::iter::repeat_n(0, n - 1));
        (t, unit_vector(m, k))
    });
    NAlgebra::new(format!("CartanExample(n={n},m={m})"), n, m, entries)
}

/// The n-ary product `[x_1, [x_2, ..., [x_{n-1}, x_n]...]]` built from a
/// binary Leibniz algebra. Fails if `base` is not binary or violates the
/// Leibniz identity.
pub fn lift_leibniz(base: &NAlgebra, n: usize) -> Result<NAlgebra> {
    if base.arity() != 2 {
        return Err(Error::InvalidParameter(format!(
            "lift needs a binary algebra, got arity {}",
            base.arity()
        )));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "lift arity must be >= 2, got {n}"
        )));
    }
    let report = check_fundamental_identity(base)?;
    if !report.passed {
        return Err(Error::Precondition(format!(
            "{} is not a Leibniz algebra: {report}",
            base.name()
        )));
    }
    let m = base.dim();
    let mut entries = Vec::new();
    for t in basis_tuples(m, n) {
        let mut value = unit_vector(m, t[n - 1]);
        for &i in t[..n - 1].iter().rev() {
            value = base.bracket(&[unit_vector(m, i), value])?;
        }
        if value.iter().any(|c| !c.is_zero()) {
            entries.push((t, value));
        }
    }
    NAlgebra::new(format!("Lift{n}({})", base.name()), n, m, entries)
}

/// Binary Leibniz algebra on `{e, f, h, i_0, ..., i_{m-4}}` (in that basis
/// order) with `[i_k, h] = (m-4-2k) i_k`, `[i_k, f] = i_{k+1}`,
/// `[i_k, e] = k(k+3-n) i_{k-1}` and the `sl_2` products among `e, f, h`.
/// The coefficient of `[i_k, e]` uses the lift arity `n`.
pub fn make_e27_base(m: usize, n: usize) -> Result<NAlgebra> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!("need m >= 4, got {m}")));
    }
    let (e, f, h) = (0, 1, 2);
    let i = |k: usize| 3 + k;
    let top = m - 4;
    let mut entries: Vec<(Vec<usize>, Vector)> = vec![
        (vec![e, h], scaled_unit(m, e, int(2))),
        (vec![h, e], scaled_unit(m, e, int(-2))),
        (vec![f, h], scaled_unit(m, f, int(-2))),
        (vec![h, f], scaled_unit(m, f, int(2))),
        (vec![e, f], scaled_unit(m, h, int(1))),
        (vec![f, e], scaled_unit(m, h, int(-1))),
    ];
    for k in 0..=top {
        let weight = top as i64 - 2 * k as i64;
        if weight != 0 {
            entries.push((vec![i(k), h], scaled_unit(m, i(k), int(weight))));
        }
        if k < top {
            entries.push((vec![i(k), f], scaled_unit(m, i(k + 1), int(1))));
        }
        if k >= 1 {
            let c = k as i64 * (k as i64 + 3 - n as i64);
            if c != 0 {
                entries.push((vec![i(k), e], scaled_unit(m, i(k - 1), int(c))));
            }
        }
    }
    NAlgebra::new(format!("E27Base(m={m},n={n})"), 2, m, entries)
}

/// The algebra with every product zero.
pub fn make_zero(n: usize, m: usize) -> Result<NAlgebra> {
    NAlgebra::zero(format!("Zero(n={n},m={m})"), n, m)
}

/// `L_{2,3}` with `n = 3`, `m = 4`.
pub fn a3() -> NAlgebra {
    make_lpq(3, 4, 2, 3)
        .expect("valid parameters")
        .with_name("A3")
}

/// Diagonal algebra with `n = 3` and coefficients `(1, -1, 2, 3)`.
pub fn d3() -> NAlgebra {
    make_diagonal(3, 4, &[int(1), int(-1), int(2), int(3)])
        .expect("valid parameters")
        .with_name("D3")
}

/// Cartan example with `n = 3`, `m = 3`.
pub fn c3() -> NAlgebra {
    make_cartan_example(3, 3)
        .expect("valid parameters")
        .with_name("C3")
}

/// 5-ary lift of the 5-dimensional base algebra.
pub fn w5() -> NAlgebra {
    let base = make_e27_base(5, 5).expect("valid parameters");
    lift_leibniz(&base, 5)
        .expect("base is Leibniz")
        .with_name("W5")
}

/// A named catalog entry with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixture {
    Lpq {
        n: usize,
        m: usize,
        p: usize,
        q: usize,
    },
    Diagonal {
        n: usize,
        alpha: Vec<Scalar>,
    },
    CartanExample {
        n: usize,
        m: usize,
    },
    E27Base {
        m: usize,
        n: usize,
    },
    E27Lift {
        m: usize,
        n: usize,
    },
    Zero {
        n: usize,
        m: usize,
    },
}

impl Fixture {
    /// The fixed acceptance fixtures by short name.
    pub fn named(name: &str) -> Option<Fixture> {
        Some(match name.to_ascii_uppercase().as_str() {
            "A3" => Fixture::Lpq {
                n: 3,
                m: 4,
                p: 2,
                q: 3,
            },
            "D3" => Fixture::Diagonal {
                n: 3,
                alpha: vec![int(1), int(-1), int(2), int(3)],
            },
            "C3" => Fixture::CartanExample { n: 3, m: 3 },
            "W5" => Fixture::E27Lift { m: 5, n: 5 },
            _ => return None,
        })
    }

    pub fn build(&self) -> Result<NAlgebra> {
        match self {
            Fixture::Lpq { n, m, p, q } => make_lpq(*n, *m, *p, *q),
            Fixture::Diagonal { n, alpha } => make_diagonal(*n, alpha.len(), alpha),
            Fixture::CartanExample { n, m } => make_cartan_example(*n, *m),
            Fixture::E27Base { m, n } => make_e27_base(*m, *n),
            Fixture::E27Lift { m, n } => lift_leibniz(&make_e27_base(*m, *n)?, *n),
            Fixture::Zero { n, m } => make_zero(*n, *m),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Lpq { n, m, p, q } => write!(f, "lpq n={n} m={m} p={p} q={q}"),
            Fixture::Diagonal { n, alpha } => {
                let a: Vec<String> = alpha.iter().map(|x| x.to_string()).collect();
                write!(f, "diagonal n={n} alpha={}", a.join(","))
            }
            Fixture::CartanExample { n, m } => write!(f, "cartan n={n} m={m}"),
            Fixture::E27Base { m, n } => write!(f, "e27-base m={m} n={n}"),
            Fixture::E27Lift { m, n } => write!(f, "e27 m={m} n={n}"),
            Fixture::Zero { n, m } => write!(f, "zero n={n} m={m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_fundamental_identity_with_cap, ElementTuple};
    use crate::exactlin::frac;

    #[test]
    fn a3_has_two_products() {
        let a3 = a3();
        assert_eq!(a3.nonzero_products(), 2);
        assert_eq!(a3.product(&[0, 0, 1]).unwrap(), unit_vector(4, 0));
        assert_eq!(a3.product(&[1, 0, 1]).unwrap(), scaled_unit(4, 1, int(-1)));
    }

    #[test]
    fn lpq_parameter_checks() {
        assert!(make_lpq(3, 4, 2, 2).is_err());
        assert!(make_lpq(3, 4, 1, 3).is_err());
        assert!(make_lpq(3, 4, 2, 4).is_err());
        assert!(make_lpq(4, 2, 2, 3).is_err());
        assert!(make_lpq(4, 3, 2, 4).is_ok());
    }

    #[test]
    fn diagonal_parameter_checks() {
        assert!(make_diagonal(3, 2, &[int(1), int(1)]).is_err());
        assert!(make_diagonal(3, 3, &[int(1), int(-1), int(0)]).is_err());
        assert!(make_diagonal(3, 3, &[int(1), int(-1)]).is_err());
        assert!(make_diagonal(3, 3, &[frac(1, 2), frac(-1, 2), int(5)]).is_ok());
    }

    #[test]
    fn d3_right_multiplication_determinant() {
        let r = d3()
            .right_mult_matrix(&ElementTuple::basis(4, &[0, 1]))
            .unwrap();
        assert_eq!(r.determinant().unwrap(), int(-6));
    }

    #[test]
    fn fixtures_satisfy_the_identity() {
        for l in [a3(), d3(), c3(), make_zero(3, 3).unwrap()] {
            assert!(
                check_fundamental_identity(&l).unwrap().passed,
                "{}",
                l.name()
            );
        }
        let d = make_diagonal(4, 5, &[int(2), int(-5), int(3), int(7), frac(1, 3)]).unwrap();
        assert!(check_fundamental_identity(&d).unwrap().passed);
    }

    #[test]
    fn e27_base_is_leibniz_when_arities_agree() {
        for m in 4..=7 {
            let b = make_e27_base(m, m).unwrap();
            assert!(check_fundamental_identity(&b).unwrap().passed, "m = {m}");
        }
    }

    #[test]
    fn w5_displayed_products() {
        let w = w5();
        let (e, f, h, i0, i1) = (0, 1, 2, 3, 4);
        assert_eq!(
            w.product(&[h, h, h, h, e]).unwrap(),
            scaled_unit(5, e, int(16))
        );
        assert_eq!(
            w.product(&[f, h, h, h, e]).unwrap(),
            scaled_unit(5, h, int(8))
        );
        assert_eq!(
            w.product(&[i0, h, h, h, f]).unwrap(),
            scaled_unit(5, i1, int(8))
        );
        assert_eq!(
            w.product(&[i1, h, h, h, e]).unwrap(),
            scaled_unit(5, i0, int(8))
        );
        assert_eq!(
            w.product(&[h, h, h, h, f]).unwrap(),
            scaled_unit(5, f, int(16))
        );
    }

    #[test]
    fn w5_identity_exhaustive() {
        let w = w5();
        let r = check_fundamental_identity_with_cap(&w, 5u128.pow(9)).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked_cases, 1_953_125);
    }

    #[test]
    fn lift_to_arity_two_is_identity() {
        let b = make_e27_base(5, 5).unwrap();
        assert!(lift_leibniz(&b, 2).unwrap().same_structure(&b));
        let z = lift_leibniz(&make_zero(2, 3).unwrap(), 4).unwrap();
        assert_eq!(z.nonzero_products(), 0);
        assert!(lift_leibniz(&c3(), 3).is_err());
    }

    #[test]
    fn lift_rejects_non_leibniz_base() {
        let bad = NAlgebra::new(
            "bad",
            2,
            2,
            [
                (vec![0, 1], unit_vector(2, 1)),
                (vec![1, 0], unit_vector(2, 1)),
            ],
        )
        .unwrap();
        assert!(matches!(lift_leibniz(&bad, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn named_fixtures() {
        for name in ["A3", "d3", "C3", "W5"] {
            let fixture = Fixture::named(name).unwrap();
            assert!(fixture.build().is_ok());
        }
        assert!(Fixture::named("B7").is_none());
        assert!(Fixture::named("c3")
            .unwrap()
            .build()
            .unwrap()
            .same_structure(&c3()));
    }
}
