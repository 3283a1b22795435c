//! Canonical output records: sorted keys, rationals as reduced `p/q`
//! strings, integers unquoted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use pbn_core::limits::AdditivityReport;
use pbn_core::verify::VerifyReport;
use pbn_core::{DimReport, PrymSpace, ThetaClass, VanishingSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub result: Value,
    pub citations: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &'static str) -> Self {
        Self { command, params: Map::new(), result: Value::Null, citations: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn param_opt<T: Into<Value>>(self, key: &str, value: Option<T>) -> Self {
        match value {
            Some(v) => self.param(key, v),
            None => self,
        }
    }

    pub fn cite(mut self, citation: impl Into<String>) -> Self {
        self.citations.push(citation.into());
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "result": self.result,
            "citations": self.citations,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let flat = flatten(&self.to_value());
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(flat.keys()).expect("in-memory write");
                w.write_record(flat.values()).expect("in-memory write");
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
            Format::Md => {
                let mut s = String::from("| key | value |\n|---|---|\n");
                for (k, v) in flatten(&self.to_value()) {
                    s.push_str(&format!("| {k} | {} |\n", v.replace('|', "\\|")));
                }
                s
            }
        }
    }
}

/// Dotted keys for nested objects; arrays stay compact JSON in one cell.
pub fn flatten(value: &Value) -> BTreeMap<String, String> {
    fn go(prefix: &str, v: &Value, out: &mut BTreeMap<String, String>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    go(&key, child, out);
                }
            }
            Value::String(s) => {
                out.insert(prefix.to_string(), s.clone());
            }
            Value::Null => {
                out.insert(prefix.to_string(), String::new());
            }
            other => {
                out.insert(prefix.to_string(), other.to_string());
            }
        }
    }
    let mut out = BTreeMap::new();
    go("", value, &mut out);
    out
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn integer(n: &BigInt) -> Value {
    Value::Number(serde_json::from_str(&n.to_string()).expect("integer literal"))
}

pub fn sequence(a: &VanishingSequence) -> Value {
    json!(a.entries())
}

pub fn class(c: &ThetaClass) -> Value {
    json!({
        "coeff": rational(c.coeff()),
        "exponent": c.exponent(),
        "generator": c.generator().name(),
    })
}

pub fn dim_report(rep: &DimReport) -> Value {
    json!({
        "value": rep.value,
        "exactness": rep.exactness.name(),
        "emptiness": rep.emptiness.name(),
        "source": rep.source,
    })
}

pub fn space(s: &PrymSpace) -> Value {
    json!({
        "flavor": s.flavor().name(),
        "g": s.genus(),
        "k": s.k(),
        "dim": s.dim(),
        "theta_top": s.theta_top().map(integer),
    })
}

pub fn additivity(rep: &AdditivityReport) -> Value {
    json!({
        "lhs": rep.lhs,
        "s": rep.s,
        "aspect_rhos": [rep.aspect_rhos.0, rep.aspect_rhos.1],
        "bridge_rho": rep.bridge_rho,
        "total": rep.total(),
        "equality": rep.equality,
    })
}

pub fn verify_report(rep: &VerifyReport) -> Value {
    let suites: Vec<Value> = rep
        .suites
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "passed": s.passed(),
                "cases": s.cases,
                "counterexample": s.counterexample,
            })
        })
        .collect();
    json!({ "all_passed": rep.all_passed(), "suites": suites })
}
