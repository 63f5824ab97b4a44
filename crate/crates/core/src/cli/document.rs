//! The `loghodge/1` JSON table document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::table::{BigradedTable, Source, StripParams};

pub const SCHEMA: &str = "loghodge/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Strip {
    pub q: usize,
    pub r: usize,
}

/// Serialized form of a [`BigradedTable`]. Field order is the output order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub schema: String,
    pub source: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub jmax: Option<usize>,
    pub entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strip: Option<Strip>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub checksums: Option<BTreeMap<String, i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_vector: Option<Vec<usize>>,
}

/// Integer-looking parameters become JSON integers.
fn param_value(v: &str) -> Value {
    match v.parse::<i64>() {
        Ok(n) => Value::from(n),
        Err(_) => Value::from(v),
    }
}

pub fn source_object(s: &Source) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), Value::from(s.command.as_str()));
    for (k, v) in &s.params {
        m.insert(k.clone(), param_value(v));
    }
    m
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

impl TableDocument {
    pub fn from_table(t: &BigradedTable) -> Self {
        TableDocument {
            schema: SCHEMA.into(),
            source: source_object(&t.source),
            jmax: t.j_max,
            entries: t.iter().map(|(i, j, dim)| Entry { i, j, dim }).collect(),
            strip: t.strip.map(|p| Strip { q: p.q, r: p.r }),
            checksums: (!t.checksums.is_empty())
                .then(|| t.checksums.iter().map(|(j, c)| (j.to_string(), *c)).collect()),
            h_vector: None,
        }
    }

    pub fn into_table(self) -> Result<BigradedTable> {
        if self.schema != SCHEMA {
            return Err(invalid(format!("unsupported schema `{}`, expected `{SCHEMA}`", self.schema)));
        }
        let mut source = Source::default();
        for (k, v) in self.source {
            let text = match v {
                Value::String(s) => s,
                Value::Number(n) => n.to_string(),
                other => return Err(invalid(format!("source field `{k}` has non-scalar value {other}"))),
            };
            if k == "command" {
                source.command = text;
            } else {
                source.params.push((k, text));
            }
        }
        let mut table = BigradedTable::new(source);
        for e in &self.entries {
            if e.dim == 0 {
                return Err(invalid(format!("entry ({}, {}) has dim 0", e.i, e.j)));
            }
            if table.get(e.i, e.j) != 0 {
                return Err(invalid(format!("duplicate entry ({}, {})", e.i, e.j)));
            }
            table.set(e.i, e.j, e.dim);
        }
        table.j_max = self.jmax;
        table.strip = self.strip.map(|s| StripParams::new(s.q, s.r));
        for (j, c) in self.checksums.unwrap_or_default() {
            let j: usize = j.parse().map_err(|_| invalid(format!("checksum key `{j}` is not a degree")))?;
            table.checksums.insert(j, c);
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }
}

pub fn to_csv(t: &BigradedTable) -> String {
    let mut out = String::from("i,j,dim\n");
    for (i, j, dim) in t.iter() {
        out.push_str(&format!("{i},{j},{dim}\n"));
    }
    out
}
