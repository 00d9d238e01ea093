//! JSON group spec files.
//!
//! ```json
//! {"name": "cmm", "dim": 2,
//!  "gram": [[5, 3], [3, "5/1"]],
//!  "generators": [[[0, 1], [1, 0]], [[0, -1], [-1, 0]]],
//!  "generator_names": ["s1", "s2"],
//!  "max_closure": 20000}
//! ```
//!
//! Gram entries are integers or exact `"p/q"` strings; floats are rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{GroupSpec, DEFAULT_MAX_CLOSURE};
use crate::linalg::{IntMatrix, RatMatrix};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn parse_int(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("{what}: {s:?} is not an integer"))),
        _ => Err(bad(format!("{what}: expected an integer, found {v}"))),
    }
}

/// Exact rational from an integer or a `"p/q"` / `"p"` string.
pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (s, "1"),
            };
            let num: BigInt = num.parse().map_err(|_| bad(format!("gram entry {s:?} is not a rational")))?;
            let den: BigInt = den.parse().map_err(|_| bad(format!("gram entry {s:?} is not a rational")))?;
            if den.is_zero() {
                return Err(bad(format!("gram entry {s:?} has zero denominator")));
            }
            Ok(BigRational::new(num, den))
        }
        _ => parse_int(v, "gram entry").map(BigRational::from_integer),
    }
}

fn rows<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn square<T>(v: &Value, n: usize, what: &str, entry: impl Fn(&Value) -> Result<T>) -> Result<Vec<Vec<T>>> {
    let rs = rows(v, what)?;
    if rs.len() != n {
        return Err(bad(format!("{what} must have {n} rows")));
    }
    rs.iter()
        .map(|r| {
            let cells = rows(r, what)?;
            if cells.len() != n {
                return Err(bad(format!("{what} must have {n} columns")));
            }
            cells.iter().map(&entry).collect()
        })
        .collect()
}

impl GroupSpec {
    pub fn from_json_str(text: &str) -> Result<GroupSpec> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn from_json(v: &Value) -> Result<GroupSpec> {
        let obj = v.as_object().ok_or_else(|| bad("spec must be a JSON object"))?;
        let name = obj.get("name").and_then(Value::as_str).ok_or_else(|| bad("missing string \"name\""))?;
        let dim = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing integer \"dim\""))? as usize;
        let gram_v = obj.get("gram").ok_or_else(|| bad("missing \"gram\""))?;
        let gram = RatMatrix::from_rows(&square(gram_v, dim, "gram", parse_rational)?);
        let gens = match obj.get("generators") {
            Some(g) => rows(g, "generators")?
                .iter()
                .map(|m| {
                    square(m, dim, "generator", |x| parse_int(x, "generator entry")).map(|r| IntMatrix::from_rows(&r))
                })
                .collect::<Result<Vec<_>>>()?,
            None => return Err(bad("missing \"generators\"")),
        };
        let names = match obj.get("generator_names") {
            None | Some(Value::Null) => Vec::new(),
            Some(n) => rows(n, "generator_names")?
                .iter()
                .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("generator names must be strings")))
                .collect::<Result<_>>()?,
        };
        let max_closure = match obj.get("max_closure") {
            None | Some(Value::Null) => DEFAULT_MAX_CLOSURE,
            Some(m) => m.as_u64().ok_or_else(|| bad("max_closure must be a nonnegative integer"))? as usize,
        };
        let mut spec = GroupSpec::new(name, gram, gens).with_names(names).with_max_closure(max_closure);
        spec.dim = dim;
        Ok(spec)
    }

    /// JSON in the same schema accepted by [`GroupSpec::from_json`].
    pub fn to_json(&self) -> Value {
        let gram: Vec<Vec<String>> =
            self.gram.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        let gens: Vec<Vec<Vec<String>>> = self
            .generators
            .iter()
            .map(|m| m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect())
            .collect();
        json!({
            "name": self.name,
            "dim": self.dim,
            "gram": gram,
            "generators": gens,
            "generator_names": self.generator_names,
            "max_closure": self.max_closure,
        })
    }
}
