//! Structured (JSON) rendering of the exchange formats and parsing of
//! expression files.
//!
//! Structured output is byte-deterministic: terms are ordered degree
//! ascending and reverse-lexicographically within a degree, and coefficient
//! exponents descend. Rationals render as `a` or `a/b`.
//!
//! An expression file is a JSON object in one of two shapes:
//!
//! - a serialized symmetric function,
//!   `{"basis": "h", "terms": [{"partition": [2], "coefficient": {"2": "1", "0": "-1"}}, ...]}`,
//!   where a coefficient is either an exponent-to-rational map or a plain
//!   rational string (shorthand for a constant);
//! - a combination of rho components,
//!   `{"rho_terms": [{"partition": [3], "coefficient": "1"}, ...]}`.

use crate::gelfand_graev::RhoExpansion;
use crate::partition::Partition;
use crate::ring::{LaurentPoly, Rat};
use crate::symfunc::{BasisTag, SymFunc};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

/// A malformed expression file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// The two accepted top-level shapes of an expression file.
#[derive(Debug, Clone, PartialEq)]
pub enum ExpressionFile {
    SymFunc(SymFunc),
    RhoCombination(Vec<(Partition, Rat)>),
}

/// Exponent map rendering of a Laurent polynomial, exponents descending:
/// `{"2":"1","0":"-1"}`. The zero polynomial is `{}`.
pub fn laurent_to_json(p: &LaurentPoly) -> String {
    let mut out = String::from("{");
    let mut terms: Vec<(i64, &Rat)> = p.terms().collect();
    terms.reverse();
    for (i, (k, c)) in terms.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "\"{k}\":\"{c}\"");
    }
    out.push('}');
    out
}

fn partition_to_json(lam: &Partition) -> String {
    let mut out = String::from("[");
    for (i, part) in lam.parts().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{part}");
    }
    out.push(']');
    out
}

/// Canonical structured form of a symmetric function.
pub fn symfunc_to_json(f: &SymFunc) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"basis\":\"{}\",\"terms\":[", f.basis());
    for (i, (lam, c)) in f.terms().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"partition\":{},\"coefficient\":{}}}",
            partition_to_json(lam),
            laurent_to_json(c)
        );
    }
    out.push_str("]}");
    out
}

/// Canonical structured form of a rho-basis expansion with its dimension.
pub fn rho_expansion_to_json(e: &RhoExpansion) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"q\":\"{}\",\"dim\":\"{}\",\"coeffs\":[",
        e.q_value(),
        e.dim_sum()
    );
    for (i, (lam, c)) in e.coeffs().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"partition\":{},\"coefficient\":\"{c}\"}}",
            partition_to_json(lam)
        );
    }
    out.push_str("]}");
    out
}

/// Text form of a rho-basis expansion: `1*rho[3] + 1*rho[2,1]`.
pub fn rho_expansion_to_text(e: &RhoExpansion) -> String {
    if e.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (lam, c)) in e.coeffs().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let _ = write!(out, "{mag}*rho{lam}");
    }
    out
}

/// Parses `a` or `a/b` as an exact rational, rejecting zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(numer.trim())
        .map_err(|_| ParseError(format!("bad rational numerator {numer:?}")))?;
    let d = BigInt::from_str(denom.trim())
        .map_err(|_| ParseError(format!("bad rational denominator {denom:?}")))?;
    if d.is_zero() {
        return err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

fn parse_partition(value: &serde_json::Value) -> Result<Partition, ParseError> {
    let arr = match value.as_array() {
        Some(a) => a,
        None => return err("partition must be an array of positive integers"),
    };
    let mut parts = Vec::with_capacity(arr.len());
    for v in arr {
        let n = match v.as_u64() {
            Some(n) if n >= 1 && n <= u64::from(u32::MAX) => n as u32,
            _ => return err(format!("bad partition part {v}")),
        };
        parts.push(n);
    }
    Ok(Partition::new(parts))
}

fn parse_coefficient(value: &serde_json::Value) -> Result<LaurentPoly, ParseError> {
    match value {
        serde_json::Value::String(s) => Ok(LaurentPoly::constant(parse_rat(s)?)),
        serde_json::Value::Object(map) => {
            let mut terms = Vec::with_capacity(map.len());
            for (k, v) in map {
                let exp =
                    i64::from_str(k).map_err(|_| ParseError(format!("bad exponent key {k:?}")))?;
                let c = match v.as_str() {
                    Some(s) => parse_rat(s)?,
                    None => return err(format!("coefficient value {v} must be a string")),
                };
                terms.push((exp, c));
            }
            Ok(LaurentPoly::from_terms(terms))
        }
        other => err(format!(
            "coefficient must be a rational string or an exponent map, got {other}"
        )),
    }
}

/// Parses an expression file into either a symmetric function or a
/// rho-combination.
pub fn parse_expression(src: &str) -> Result<ExpressionFile, ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(src).map_err(|e| ParseError(format!("invalid JSON: {e}")))?;
    let obj = match value.as_object() {
        Some(o) => o,
        None => return err("expression file must be a JSON object"),
    };

    if let Some(rho_terms) = obj.get("rho_terms") {
        let arr = match rho_terms.as_array() {
            Some(a) => a,
            None => return err("rho_terms must be an array"),
        };
        let mut terms = Vec::with_capacity(arr.len());
        for entry in arr {
            let lam = parse_partition(
                entry
                    .get("partition")
                    .ok_or_else(|| ParseError("rho term missing partition".into()))?,
            )?;
            let c = match entry.get("coefficient").and_then(|v| v.as_str()) {
                Some(s) => parse_rat(s)?,
                None => return err("rho term coefficient must be a rational string"),
            };
            terms.push((lam, c));
        }
        return Ok(ExpressionFile::RhoCombination(terms));
    }

    let basis: BasisTag = match obj.get("basis").and_then(|v| v.as_str()) {
        Some(s) => s.parse().map_err(ParseError)?,
        None => return err("expression file needs a basis tag or rho_terms"),
    };
    let arr = match obj.get("terms").and_then(|v| v.as_array()) {
        Some(a) => a,
        None => return err("expression file needs a terms array"),
    };
    let mut terms = Vec::with_capacity(arr.len());
    for entry in arr {
        let lam = parse_partition(
            entry
                .get("partition")
                .ok_or_else(|| ParseError("term missing partition".into()))?,
        )?;
        let c = parse_coefficient(
            entry
                .get("coefficient")
                .ok_or_else(|| ParseError("term missing coefficient".into()))?,
        )?;
        terms.push((lam, c));
    }
    Ok(ExpressionFile::SymFunc(SymFunc::from_terms(basis, terms)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gelfand_graev::{rho, to_rho_basis};
    use crate::ring::rat;

    #[test]
    fn symfunc_json_roundtrip() {
        let f = rho(2);
        let json = symfunc_to_json(&f);
        assert_eq!(
            json,
            "{\"basis\":\"h\",\"terms\":[\
             {\"partition\":[2],\"coefficient\":{\"2\":\"1\",\"0\":\"-1\"}},\
             {\"partition\":[1,1],\"coefficient\":{\"1\":\"-1\",\"0\":\"1\"}}]}"
        );
        match parse_expression(&json).unwrap() {
            ExpressionFile::SymFunc(parsed) => assert_eq!(parsed, f),
            other => panic!("unexpected shape: {other:?}"),
        }
    }

    #[test]
    fn rho_combination_parsing() {
        let src = r#"{"rho_terms": [
            {"partition": [3], "coefficient": "1"},
            {"partition": [2,1], "coefficient": "1"}
        ]}"#;
        match parse_expression(src).unwrap() {
            ExpressionFile::RhoCombination(terms) => {
                assert_eq!(terms.len(), 2);
                assert_eq!(terms[0].0.parts(), &[3]);
                assert_eq!(terms[1].1, rat(1));
            }
            other => panic!("unexpected shape: {other:?}"),
        }
    }

    #[test]
    fn constant_coefficient_shorthand() {
        let src = r#"{"basis": "h", "terms": [{"partition": [2], "coefficient": "3"}]}"#;
        match parse_expression(src).unwrap() {
            ExpressionFile::SymFunc(f) => {
                assert_eq!(f, SymFunc::h(&[2]).scale(&LaurentPoly::constant(rat(3))));
            }
            other => panic!("unexpected shape: {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_expression("not json").is_err());
        assert!(parse_expression("{\"basis\": \"x\", \"terms\": []}").is_err());
        assert!(parse_expression("{\"terms\": []}").is_err());
        assert!(parse_expression(
            "{\"basis\": \"h\", \"terms\": [{\"partition\": [0], \"coefficient\": \"1\"}]}"
        )
        .is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(parse_rat("-4/6").unwrap(), crate::ring::rat_frac(-2, 3));
    }

    #[test]
    fn rho_expansion_rendering() {
        let e = to_rho_basis(&rho(2), &rat(2)).unwrap();
        assert_eq!(
            rho_expansion_to_json(&e),
            "{\"q\":\"2\",\"dim\":\"1\",\"coeffs\":[{\"partition\":[2],\"coefficient\":\"1\"}]}"
        );
        assert_eq!(rho_expansion_to_text(&e), "1*rho[2]");
    }
}
