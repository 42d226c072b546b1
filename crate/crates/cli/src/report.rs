//! Command output: an ordered list of keyed records, printed either as
//! `key: value` lines or as one single-key JSON object per line.

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

use crate::format::fmt_num;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    List(Vec<Field>),
}

impl Field {
    fn human(&self) -> String {
        match self {
            Field::Num(x) => fmt_num(*x),
            Field::Int(i) => i.to_string(),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::List(items) => items.iter().map(Field::human).collect::<Vec<_>>().join(" "),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Num(x) => {
                let rounded: f64 = fmt_num(*x).parse().expect("formatted number parses");
                Number::from_f64(rounded).map_or(Value::Null, Value::Number)
            }
            Field::Int(i) => Value::from(*i),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Bool(b) => Value::from(*b),
            Field::List(items) => Value::Array(items.iter().map(Field::json).collect()),
        }
    }
}

impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Num(x)
    }
}

impl From<usize> for Field {
    fn from(i: usize) -> Self {
        Field::Int(i as i64)
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub records: Vec<(String, Field)>,
    pub exit_code: i32,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Field>) -> &mut Self {
        self.records.push((key.into(), value.into()));
        self
    }

    pub fn exit(mut self, code: i32) -> Self {
        self.exit_code = code;
        self
    }

    pub fn render(&self, json_lines: bool) -> String {
        let mut out = String::new();
        for (key, value) in &self.records {
            if json_lines {
                let mut obj = Map::new();
                obj.insert(key.clone(), value.json());
                writeln!(out, "{}", Value::Object(obj)).expect("writing to a String");
            } else {
                writeln!(out, "{key}: {}", value.human()).expect("writing to a String");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_modes() {
        let mut r = Report::new();
        r.push("radius", 2f64.sqrt())
            .push("witness", "{1,2}")
            .push(
                "eigenvalue",
                Field::List(vec![Field::Num(1.0), Field::Num(-0.0)]),
            )
            .push("equal", false)
            .push("count", 3usize);
        assert_eq!(
            r.render(false),
            "radius: 1.414213562373\nwitness: {1,2}\neigenvalue: 1 0\nequal: false\ncount: 3\n"
        );
        assert_eq!(
            r.render(true),
            "{\"radius\":1.414213562373}\n{\"witness\":\"{1,2}\"}\n{\"eigenvalue\":[1.0,0.0]}\n\
             {\"equal\":false}\n{\"count\":3}\n"
        );
    }
}
