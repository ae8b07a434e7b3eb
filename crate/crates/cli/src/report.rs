//! JSON-lines records.

use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn rat(x: &BigRational) -> String {
    x.to_string()
}

pub fn rat_rows(m: &[Vec<BigRational>]) -> Value {
    json!(m.iter().map(|r| r.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Collects records and the verdicts of internal checks.
pub struct Report {
    lines: Vec<String>,
    failures: Vec<String>,
}

impl Report {
    pub fn new(command: &str, args: &[String], input: &[u8]) -> Report {
        let mut r = Report { lines: Vec::new(), failures: Vec::new() };
        r.push(
            "report",
            json!({
                "command": command,
                "args": args,
                "input_sha256": sha256_hex(input),
                "version": env!("CARGO_PKG_VERSION"),
            }),
        );
        r
    }

    pub fn push(&mut self, record: &str, body: impl Serialize) {
        let mut v = serde_json::to_value(body).expect("serializable record");
        let mut obj = serde_json::Map::new();
        obj.insert("record".into(), json!(record));
        if let Value::Object(m) = &mut v {
            obj.append(m);
        } else {
            obj.insert("value".into(), v);
        }
        self.lines.push(Value::Object(obj).to_string());
    }

    /// Record a named internal check; a false verdict makes the run fail.
    pub fn check(&mut self, name: &str, ok: bool) -> bool {
        if !ok {
            self.failures.push(name.to_string());
        }
        ok
    }

    pub fn failures(&self) -> &[String] {
        &self.failures
    }

    pub fn write(&self, out: &mut impl Write, elapsed_ms: u128) -> std::io::Result<()> {
        for l in &self.lines {
            writeln!(out, "{l}")?;
        }
        let checks = json!({ "record": "checks", "failed": self.failures });
        writeln!(out, "{checks}")?;
        writeln!(out, "{}", json!({ "record": "timing", "elapsed_ms": elapsed_ms as u64 }))
    }
}
