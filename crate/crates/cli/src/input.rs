//! Parsing of JSON documents and inline numeric lists.

use std::io::Read;

use kunz_core::{Int, KunzError, Rational, Result};
use serde::Deserialize;
use serde_json::Value;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NilsemigroupInput {
    pub m: u32,
    pub sums: Vec<[u32; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupInput {
    pub generators: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointInput {
    pub m: u32,
    pub x: Vec<Value>,
}

/// Either inline JSON (starting with `{`), `-` for stdin, or a file path.
pub fn read_document(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| KunzError::InvalidInput(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| KunzError::InvalidInput(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| KunzError::InvalidInput(format!("malformed JSON: {e}")))
}

pub fn from_value<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| KunzError::InvalidInput(format!("not a {what} document: {e}")))
}

/// `"7"`, `"-3"`, or `"7/2"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || KunzError::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q == Int::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn rational_of(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(KunzError::InvalidInput(format!("coordinates must be integers or strings, got {other}"))),
    }
}

impl PointInput {
    pub fn coordinates(&self) -> Result<Vec<Rational>> {
        if self.x.len() + 1 != self.m as usize {
            return Err(KunzError::DimensionMismatch { expected: self.m as usize - 1, got: self.x.len() });
        }
        self.x.iter().map(rational_of).collect()
    }
}

/// Comma-separated list, e.g. `6,7,8,9` or `7/2,7`.
pub fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

pub fn parse_generators(s: &str) -> Result<Vec<u64>> {
    split_list(s)
        .into_iter()
        .map(|t| t.parse().map_err(|_| KunzError::InvalidInput(format!("not a generator: {t:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("7/2").unwrap(), Rational::new(Int::from(7), Int::from(2)));
        assert_eq!(parse_rational(" -3 ").unwrap(), Rational::from_integer(Int::from(-3)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn documents() {
        let v = read_document(r#"{"m":6,"sums":[[1,1,2]]}"#).unwrap();
        let n: NilsemigroupInput = from_value(v, "nilsemigroup").unwrap();
        assert_eq!(n.sums, vec![[1, 1, 2]]);
        assert!(read_document("{nope").is_err());
        let p: PointInput = from_value(read_document(r#"{"m":3,"x":[1,"3/2"]}"#).unwrap(), "point").unwrap();
        assert_eq!(p.coordinates().unwrap()[1], Rational::new(Int::from(3), Int::from(2)));
    }

    #[test]
    fn lists() {
        assert_eq!(parse_generators("6, 7,8,9").unwrap(), vec![6, 7, 8, 9]);
        assert!(parse_generators("6,a").is_err());
    }
}
