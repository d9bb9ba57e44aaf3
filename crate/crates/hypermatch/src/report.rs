//! Line-oriented `key=value` reports with a JSON rendering.
//!
//! A report is an ordered list of fields. Scalar fields render as
//! `key=value` lines; a record list renders one line per record,
//! `key k1=v1 k2=v2`. Rationals are always `p/q`, integers decimal and
//! edges comma-separated.

use hypermatch_core::Rational;
use num_bigint::BigInt;
use serde_json::{json, Map, Value as Json};

#[derive(Clone, PartialEq, Debug)]
pub enum Value {
    Int(BigInt),
    Bool(bool),
    Text(String),
    Ratio(Rational),
    /// Vertex tokens; plain numbers render as JSON numbers.
    Tokens(Vec<String>),
    Records(Vec<Record>),
}

pub type Record = Vec<(String, Value)>;

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(v: $t) -> Self {
                Value::Int(BigInt::from(v))
            }
        }
    )*};
}
from_int!(u32, u64, usize, i64);

impl From<num_bigint::BigUint> for Value {
    fn from(v: num_bigint::BigUint) -> Self {
        Value::Int(v.into())
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::Ratio(v)
    }
}

impl From<&Rational> for Value {
    fn from(v: &Rational) -> Self {
        Value::Ratio(v.clone())
    }
}

/// Vertex tokens of a base edge.
pub fn edge<T: ToString>(vs: &[T]) -> Value {
    Value::Tokens(vs.iter().map(ToString::to_string).collect())
}

pub fn ratio_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

/// Builds a record from `(key, value)` pairs.
pub fn record<const N: usize>(pairs: [(&str, Value); N]) -> Record {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_owned(), value.into()));
        self
    }

    pub fn records(&mut self, key: &str, records: Vec<Record>) -> &mut Self {
        self.fields.push((key.to_owned(), Value::Records(records)));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            self.to_json()
        } else {
            self.to_text()
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Records(rs) => {
                    for r in rs {
                        out.push_str(key);
                        for (k, v) in r {
                            out.push(' ');
                            out.push_str(k);
                            out.push('=');
                            out.push_str(&scalar_text(v));
                        }
                        out.push('\n');
                    }
                }
                v => {
                    out.push_str(key);
                    out.push('=');
                    out.push_str(&scalar_text(v));
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Json> = self.fields.iter().map(|(k, v)| (k.clone(), to_json(v))).collect();
        let mut s = serde_json::to_string_pretty(&Json::Object(map)).expect("plain values serialize");
        s.push('\n');
        s
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Text(t) => t.clone(),
        Value::Ratio(r) => ratio_text(r),
        Value::Tokens(ts) => ts.join(","),
        Value::Records(_) => unreachable!("records are rendered by the caller"),
    }
}

fn to_json(v: &Value) -> Json {
    match v {
        Value::Int(i) => match i64::try_from(i) {
            Ok(x) => json!(x),
            Err(_) => json!(i.to_string()),
        },
        Value::Bool(b) => json!(b),
        Value::Text(t) => json!(t),
        Value::Ratio(r) => json!(ratio_text(r)),
        Value::Tokens(ts) => Json::Array(
            ts.iter()
                .map(|t| t.parse::<u64>().map_or_else(|_| json!(t), |x| json!(x)))
                .collect(),
        ),
        Value::Records(rs) => Json::Array(
            rs.iter()
                .map(|r| Json::Object(r.iter().map(|(k, v)| (k.clone(), to_json(v))).collect()))
                .collect(),
        ),
    }
}
