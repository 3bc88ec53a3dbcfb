//! Line-oriented text format for algebras.
//!
//! ```text
//! # comment
//! algebra C3
//! arity 3
//! dim 3
//! field rational
//! bracket 2 1 1 : 1 e2
//! bracket 3 1 1 : 1 e3
//! end
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::NAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{zero_vector, Scalar};

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    tokens
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an optionally signed integer or `p/q`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

fn parse_count(tok: &Token<'_>, line: usize) -> Result<usize> {
    tok.text.parse().map_err(|_| {
        parse_error(
            line,
            tok.column,
            format!("expected a count, found `{}`", tok.text),
        )
    })
}

/// One parsed bracket line: index tuple and its nonzero terms.
type BracketLine = (Vec<usize>, Vec<(usize, Scalar)>);

pub fn parse_algebra(text: &str) -> Result<NAlgebra> {
    let mut name: Option<String> = None;
    let mut arity: Option<usize> = None;
    let mut dim: Option<usize> = None;
    let mut entries: Vec<BracketLine> = Vec::new();
    let mut ended = false;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(head) = tokens.first() else {
            continue;
        };
        if ended {
            return Err(parse_error(lineno, head.column, "content after `end`"));
        }
        let expect_args = |count: usize| -> Result<()> {
            if tokens.len() != count + 1 {
                let col = tokens.get(count + 1).map_or(head.column, |t| t.column);
                return Err(parse_error(
                    lineno,
                    col,
                    format!("`{}` takes {count} argument(s)", head.text),
                ));
            }
            Ok(())
        };
        match head.text {
            "algebra" => {
                expect_args(1)?;
                if name.replace(tokens[1].text.to_string()).is_some() {
                    return Err(parse_error(
                        lineno,
                        head.column,
                        "repeated `algebra` header",
                    ));
                }
            }
            "arity" => {
                expect_args(1)?;
                let n = parse_count(&tokens[1], lineno)?;
                if n < 2 {
                    return Err(parse_error(
                        lineno,
                        tokens[1].column,
                        "arity must be at least 2",
                    ));
                }
                if arity.replace(n).is_some() {
                    return Err(parse_error(lineno, head.column, "repeated `arity` header"));
                }
            }
            "dim" => {
                expect_args(1)?;
                let m = parse_count(&tokens[1], lineno)?;
                if dim.replace(m).is_some() {
                    return Err(parse_error(lineno, head.column, "repeated `dim` header"));
                }
            }
            "field" => {
                expect_args(1)?;
                if tokens[1].text != "rational" {
                    return Err(parse_error(
                        lineno,
                        tokens[1].column,
                        format!("unsupported field `{}`", tokens[1].text),
                    ));
                }
            }
            "bracket" => {
                let (Some(n), Some(m)) = (arity, dim) else {
                    return Err(parse_error(
                        lineno,
                        head.column,
                        "`arity` and `dim` must precede bracket lines",
                    ));
                };
                entries.push(parse_bracket(&tokens[1..], lineno, head.column, n, m)?);
            }
            "end" => {
                expect_args(0)?;
                ended = true;
            }
            other => {
                return Err(parse_error(
                    lineno,
                    head.column,
                    format!("unknown keyword `{other}`"),
                ))
            }
        }
    }

    if !ended {
        return Err(parse_error(last_line + 1, 1, "missing `end`"));
    }
    let missing = |what: &str| parse_error(1, 1, format!("missing `{what}` header"));
    let name = name.ok_or_else(|| missing("algebra"))?;
    let arity = arity.ok_or_else(|| missing("arity"))?;
    let dim = dim.ok_or_else(|| missing("dim"))?;
    let dense = entries.into_iter().map(|(tuple, terms)| {
        let mut v = zero_vector(dim);
        for (k, c) in terms {
            v[k] = c;
        }
        (tuple, v)
    });
    NAlgebra::new(name, arity, dim, dense)
}

type Entry = (Vec<usize>, Vec<(usize, Scalar)>);

fn parse_bracket(
    tokens: &[Token<'_>],
    line: usize,
    column: usize,
    arity: usize,
    dim: usize,
) -> Result<Entry> {
    let colon = tokens
        .iter()
        .position(|t| t.text == ":")
        .ok_or_else(|| parse_error(line, column, "expected `:` in bracket line"))?;
    let (indices, rhs) = (&tokens[..colon], &tokens[colon + 1..]);
    if indices.len() != arity {
        return Err(Error::Arity {
            expected: arity,
            found: indices.len(),
        });
    }
    let mut tuple = Vec::with_capacity(arity);
    for tok in indices {
        let idx = parse_count(tok, line)?;
        if idx == 0 || idx > dim {
            return Err(Error::IndexOutOfRange { index: idx, dim });
        }
        tuple.push(idx - 1);
    }

    let mut terms: BTreeMap<usize, Scalar> = BTreeMap::new();
    if rhs.len() == 1 && rhs[0].text == "0" {
        return Ok((tuple, Vec::new()));
    }
    let mut pos = 0;
    loop {
        let Some(coef_tok) = rhs.get(pos) else {
            let col = rhs.last().map_or(tokens[colon].column, |t| t.column);
            return Err(parse_error(line, col, "expected a term `c e<k>`"));
        };
        let coef = parse_scalar(coef_tok.text).ok_or_else(|| {
            parse_error(
                line,
                coef_tok.column,
                format!("bad coefficient `{}`", coef_tok.text),
            )
        })?;
        let basis_tok = rhs.get(pos + 1).ok_or_else(|| {
            parse_error(line, coef_tok.column, "coefficient without basis vector")
        })?;
        let k = basis_tok
            .text
            .strip_prefix('e')
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| {
                parse_error(
                    line,
                    basis_tok.column,
                    format!("expected basis vector `e<k>`, found `{}`", basis_tok.text),
                )
            })?;
        if k == 0 || k > dim {
            return Err(Error::IndexOutOfRange { index: k, dim });
        }
        if terms.insert(k - 1, coef).is_some() {
            return Err(parse_error(
                line,
                basis_tok.column,
                format!("e{k} appears twice"),
            ));
        }
        pos += 2;
        match rhs.get(pos) {
            None => break,
            Some(t) if t.text == "+" => pos += 1,
            Some(t) => {
                return Err(parse_error(
                    line,
                    t.column,
                    format!("expected `+`, found `{}`", t.text),
                ))
            }
        }
    }
    Ok((
        tuple,
        terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    ))
}

pub fn serialize_algebra(l: &NAlgebra) -> String {
    let mut out = String::new();
    let name: String = l
        .name()
        .chars()
        .map(|c| {
            if c.is_whitespace() || c == '#' {
                '_'
            } else {
                c
            }
        })
        .collect();
    let name = if name.is_empty() {
        "L".to_string()
    } else {
        name
    };
    writeln!(out, "algebra {name}").unwrap();
    writeln!(out, "arity {}", l.arity()).unwrap();
    writeln!(out, "dim {}", l.dim()).unwrap();
    writeln!(out, "field rational").unwrap();
    for (tuple, value) in l.entries() {
        let idx: Vec<String> = tuple.iter().map(|i| (i + 1).to_string()).collect();
        let terms: Vec<String> = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c} e{}", k + 1))
            .collect();
        writeln!(out, "bracket {} : {}", idx.join(" "), terms.join(" + ")).unwrap();
    }
    out.push_str("end\n");
    out
}
