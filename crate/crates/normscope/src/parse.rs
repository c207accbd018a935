//! Norm spec string grammar.
//!
//! ```text
//! p:<float|inf>                 p-norm; dimension from --dim (default 2)
//! wp:<float|inf>:<w1,...,wd>    weighted p-norm; dimension = weight count
//! quad:<a11,a12,...,add>        quadratic form, row-major symmetric
//! poly:<x1,y1;x2,y2;...>        2D polytope gauge, vertices symmetrized
//! ```
//!
//! Parsing is locale-independent with `.` as the decimal separator.

use crate::matrix::Matrix;
use crate::norm::{NormSpec, PExponent};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("parse error at byte {position}: {message} (token {token:?})")]
pub struct ParseError {
    pub position: usize,
    pub token: String,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, token: &str, message: impl Into<String>) -> Self {
        Self {
            position,
            token: token.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    pos: usize,
}

fn split_tokens(s: &str, base: usize, sep: char) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push(Token {
                text: &s[start..i],
                pos: base + start,
            });
            start = i + 1;
        }
    }
    out.push(Token {
        text: &s[start..],
        pos: base + start,
    });
    out
}

fn parse_float(tok: Token<'_>) -> Result<f64, ParseError> {
    let t = tok.text.trim();
    if t.is_empty() {
        return Err(ParseError::new(tok.pos, tok.text, "expected a number"));
    }
    t.parse::<f64>()
        .map_err(|_| ParseError::new(tok.pos, t, "not a valid number"))
}

fn parse_exponent(tok: Token<'_>) -> Result<PExponent, ParseError> {
    let t = tok.text.trim();
    if t.eq_ignore_ascii_case("inf") {
        return Ok(PExponent::Infinity);
    }
    let p = parse_float(tok)?;
    if p < 1.0 {
        return Err(ParseError::new(tok.pos, t, "p-norm exponent must be >= 1 or inf"));
    }
    Ok(PExponent::Finite(p))
}

fn check_dim_override(
    dim_override: Option<usize>,
    inferred: usize,
    pos: usize,
    token: &str,
) -> Result<(), ParseError> {
    if let Some(d) = dim_override {
        if d != inferred {
            return Err(ParseError::new(
                pos,
                token,
                format!("--dim {d} conflicts with inferred dimension {inferred}"),
            ));
        }
    }
    Ok(())
}

/// Parses a norm spec string. The dimension is inferred from the parameters
/// where possible; plain `p:` specs take it from `dim_override` and default
/// to 2.
pub fn parse_norm_spec(s: &str, dim_override: Option<usize>) -> Result<NormSpec, ParseError> {
    if s.trim().is_empty() {
        return Err(ParseError::new(0, s, "empty norm spec"));
    }
    let (head, rest, rest_pos) = match s.find(':') {
        Some(i) => (&s[..i], &s[i + 1..], i + 1),
        None => return Err(ParseError::new(0, s, "expected `family:params`")),
    };
    match head {
        "p" => {
            let p = parse_exponent(Token {
                text: rest,
                pos: rest_pos,
            })?;
            let dim = dim_override.unwrap_or(2);
            NormSpec::p_norm(p, dim).map_err(|e| ParseError::new(rest_pos, rest, e.to_string()))
        }
        "wp" => {
            let parts = split_tokens(rest, rest_pos, ':');
            if parts.len() != 2 {
                return Err(ParseError::new(
                    rest_pos,
                    rest,
                    "expected wp:<p>:<w1,...,wd>",
                ));
            }
            let p = parse_exponent(parts[0])?;
            let weight_toks = split_tokens(parts[1].text, parts[1].pos, ',');
            let mut weights = Vec::with_capacity(weight_toks.len());
            for tok in weight_toks {
                weights.push(parse_float(tok)?);
            }
            check_dim_override(dim_override, weights.len(), parts[1].pos, parts[1].text)?;
            NormSpec::weighted_p_norm(p, weights)
                .map_err(|e| ParseError::new(parts[1].pos, parts[1].text, e.to_string()))
        }
        "quad" => {
            let toks = split_tokens(rest, rest_pos, ',');
            let mut entries = Vec::with_capacity(toks.len());
            for tok in &toks {
                entries.push(parse_float(*tok)?);
            }
            let dim = (entries.len() as f64).sqrt().round() as usize;
            if dim * dim != entries.len() {
                return Err(ParseError::new(
                    rest_pos,
                    rest,
                    format!("{} entries do not form a square matrix", entries.len()),
                ));
            }
            check_dim_override(dim_override, dim, rest_pos, rest)?;
            NormSpec::quadratic(Matrix::from_rows(dim, entries))
                .map_err(|e| ParseError::new(rest_pos, rest, e.to_string()))
        }
        "poly" => {
            let pair_toks = split_tokens(rest, rest_pos, ';');
            let mut vertices = Vec::with_capacity(pair_toks.len());
            for pair in pair_toks {
                let coords = split_tokens(pair.text, pair.pos, ',');
                if coords.len() != 2 {
                    return Err(ParseError::new(
                        pair.pos,
                        pair.text,
                        "expected a vertex as `x,y`",
                    ));
                }
                vertices.push((parse_float(coords[0])?, parse_float(coords[1])?));
            }
            check_dim_override(dim_override, 2, rest_pos, rest)?;
            NormSpec::polytope_gauge_2d(&vertices)
                .map_err(|e| ParseError::new(rest_pos, rest, e.to_string()))
        }
        other => Err(ParseError::new(
            0,
            other,
            "unknown norm family; expected p, wp, quad or poly",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::{NormFamily, Vector};

    #[test]
    fn parses_p_norm_with_dim() {
        let spec = parse_norm_spec("p:2", Some(3)).unwrap();
        assert_eq!(spec.dim(), 3);
        assert!(matches!(
            spec.family(),
            NormFamily::PNorm {
                p: PExponent::Finite(p)
            } if *p == 2.0
        ));
    }

    #[test]
    fn parses_p_inf() {
        let spec = parse_norm_spec("p:inf", None).unwrap();
        assert_eq!(spec.dim(), 2);
        assert!(matches!(
            spec.family(),
            NormFamily::PNorm {
                p: PExponent::Infinity
            }
        ));
    }

    #[test]
    fn parses_quadratic_and_infers_dim() {
        let spec = parse_norm_spec("quad:1,0.5,0.5,1", None).unwrap();
        assert_eq!(spec.dim(), 2);
        let x = Vector::from_slice(&[1.0, 0.0]).unwrap();
        assert_eq!(spec.eval(&x).unwrap(), 1.0);
    }

    #[test]
    fn parses_polytope_with_symmetrization() {
        let spec = parse_norm_spec("poly:1,0;0.5,0.75", None).unwrap();
        assert_eq!(spec.dim(), 2);
        // (-1, 0) comes from symmetrization.
        let x = Vector::from_slice(&[-1.0, 0.0]).unwrap();
        assert!((spec.eval(&x).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn error_names_token_and_position() {
        let err = parse_norm_spec("wp:2:1,zork,3", None).unwrap_err();
        assert_eq!(err.token, "zork");
        assert_eq!(err.position, 7);
        assert!(err.message.contains("number"), "message: {}", err.message);
    }

    #[test]
    fn rejects_unknown_family() {
        let err = parse_norm_spec("nonsense", None).unwrap_err();
        assert!(err.message.contains("expected"), "message: {}", err.message);
        let err = parse_norm_spec("zorp:1,2", None).unwrap_err();
        assert_eq!(err.token, "zorp");
    }

    #[test]
    fn rejects_non_square_quad() {
        let err = parse_norm_spec("quad:1,2,3", None).unwrap_err();
        assert!(err.message.contains("square"), "message: {}", err.message);
    }

    #[test]
    fn rejects_exponent_below_one() {
        let err = parse_norm_spec("p:0.5", None).unwrap_err();
        assert!(err.message.contains(">= 1"), "message: {}", err.message);
    }

    #[test]
    fn rejects_dim_conflict() {
        let err = parse_norm_spec("quad:1,0,0,1", Some(3)).unwrap_err();
        assert!(err.message.contains("conflicts"), "message: {}", err.message);
    }
}
