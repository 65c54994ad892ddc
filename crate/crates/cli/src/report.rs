//! Run reports: JSON shape, text rendering and a structural validator.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use seshadri_core::factory::{Check, Datum};
use seshadri_core::field::Rational;
use seshadri_core::seshadri::BoundCertificate;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub params: Map<String, Value>,
    pub checks: Vec<CheckEntry>,
    pub certificate: Option<CertificateEntry>,
    /// Only filled in with `--timing`, so default output is reproducible.
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: String,
    pub data: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub kind: String,
    pub lemma: String,
    pub lower_bound: Value,
    pub strict: bool,
    pub witness: Option<Value>,
    pub epsilon: Option<Value>,
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        RunReport { command: command.to_string(), version: env!("CARGO_PKG_VERSION").to_string(), params, checks: vec![], certificate: None, elapsed_ms: None }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, data: Map<String, Value>) {
        let status = if pass { "pass" } else { "fail" };
        self.checks.push(CheckEntry { name: name.into(), status: status.into(), data });
    }

    pub fn skip(&mut self, name: impl Into<String>) {
        self.checks.push(CheckEntry { name: name.into(), status: "skipped".into(), data: Map::new() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != "fail")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} (version {})\n", self.command, self.version);
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
            out.push_str(&format!("params: {}\n", ps.join(" ")));
        }
        for c in &self.checks {
            let ds: Vec<String> = c.data.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect();
            out.push_str(&format!("[{:<7}] {}", c.status, c.name));
            if !ds.is_empty() {
                out.push_str(&format!("  {}", ds.join(" ")));
            }
            out.push('\n');
        }
        if let Some(cert) = &self.certificate {
            let rel = if cert.strict { ">" } else { ">=" };
            out.push_str(&format!("certificate {}: epsilon {rel} {} ({})\n", cert.kind, text_value(&cert.lower_bound), cert.lemma));
            match &cert.witness {
                Some(w) => out.push_str(&format!("  witness curve: degree {} multiplicity {}\n", w["degree"], w["multiplicity"])),
                None => out.push_str("  no witness curve\n"),
            }
            match &cert.epsilon {
                Some(e) => out.push_str(&format!("  epsilon = {}\n", text_value(e))),
                None => out.push_str("  epsilon not pinned\n"),
            }
            for w in &cert.warnings {
                out.push_str(&format!("  warning: {w}\n"));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.len() == 2 && o.contains_key("num") && o.contains_key("den") => {
            if o["den"] == json!(1) {
                text_value(&o["num"])
            } else {
                format!("{}/{}", text_value(&o["num"]), text_value(&o["den"]))
            }
        }
        Value::Array(items) => format!("[{}]", items.iter().map(text_value).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn integer(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn rational_json(q: &Rational) -> Value {
    json!({ "num": integer(q.numer()), "den": integer(q.denom()) })
}

pub fn datum_json(d: &Datum) -> Value {
    match d {
        Datum::Int(v) => Value::from(*v),
        Datum::Bool(b) => Value::Bool(*b),
        Datum::Rational(q) => rational_json(q),
        Datum::Text(s) => Value::String(s.clone()),
    }
}

pub fn check_entry(c: &Check, prefix: &str) -> CheckEntry {
    let mut data: Map<String, Value> = c.data.iter().map(|(k, v)| (k.clone(), datum_json(v))).collect();
    if let Some(cert) = c.certification {
        data.insert("certification".into(), Value::String(cert.as_str().into()));
    }
    CheckEntry { name: format!("{prefix}{}", c.name), status: c.status.as_str().into(), data }
}

pub fn certificate_entry(c: &BoundCertificate) -> CertificateEntry {
    CertificateEntry {
        kind: c.kind.as_str().into(),
        lemma: c.lemma.into(),
        lower_bound: rational_json(&c.lower_bound),
        strict: c.strict,
        witness: c.witness.map(|w| json!({ "degree": w.degree, "multiplicity": w.multiplicity })),
        epsilon: c.epsilon().as_ref().map(rational_json),
        warnings: c.warnings.clone(),
    }
}

fn is_integer(v: &Value) -> bool {
    v.is_i64() || v.is_u64() || v.as_str().is_some_and(|s| s.strip_prefix('-').unwrap_or(s).chars().all(|c| c.is_ascii_digit()) && !s.is_empty())
}

fn check_rational(v: &Value, at: &str) -> Result<(), String> {
    let o = v.as_object().ok_or(format!("{at}: expected object"))?;
    for key in ["num", "den"] {
        if !o.get(key).is_some_and(is_integer) {
            return Err(format!("{at}.{key}: expected integer"));
        }
    }
    if o.len() != 2 {
        return Err(format!("{at}: unexpected keys"));
    }
    if o["den"].as_i64().is_some_and(|d| d <= 0) {
        return Err(format!("{at}.den: must be positive"));
    }
    Ok(())
}

fn no_floats(v: &Value, at: &str) -> Result<(), String> {
    match v {
        Value::Number(n) if n.is_f64() => Err(format!("{at}: floating-point value")),
        Value::Array(items) => items.iter().enumerate().try_for_each(|(i, x)| no_floats(x, &format!("{at}[{i}]"))),
        Value::Object(o) => o.iter().try_for_each(|(k, x)| no_floats(x, &format!("{at}.{k}"))),
        _ => Ok(()),
    }
}

/// Checks `v` against the published report shape.
pub fn validate_report(v: &Value) -> Result<(), String> {
    let o = v.as_object().ok_or("report: expected object")?;
    let required = ["command", "version", "params", "checks", "certificate", "elapsed_ms"];
    for key in required {
        if !o.contains_key(key) {
            return Err(format!("report: missing `{key}`"));
        }
    }
    if let Some(extra) = o.keys().find(|k| !required.contains(&k.as_str())) {
        return Err(format!("report: unexpected key `{extra}`"));
    }
    if !o["command"].is_string() || !o["version"].is_string() {
        return Err("report: command and version must be strings".into());
    }
    if !o["params"].is_object() {
        return Err("params: expected object".into());
    }
    let checks = o["checks"].as_array().ok_or("checks: expected array")?;
    for (i, c) in checks.iter().enumerate() {
        let c = c.as_object().ok_or(format!("checks[{i}]: expected object"))?;
        if !c.get("name").is_some_and(Value::is_string) {
            return Err(format!("checks[{i}].name: expected string"));
        }
        if !c.get("status").and_then(Value::as_str).is_some_and(|s| ["pass", "fail", "skipped"].contains(&s)) {
            return Err(format!("checks[{i}].status: expected pass, fail or skipped"));
        }
        if !c.get("data").is_some_and(Value::is_object) {
            return Err(format!("checks[{i}].data: expected object"));
        }
    }
    match &o["certificate"] {
        Value::Null => {}
        Value::Object(c) => {
            if !c.get("kind").and_then(Value::as_str).is_some_and(|k| ["LINE_PRESENT", "NO_LINE_GT1", "D_OVER_D_MINUS_1", "TANGENT_DIM0_GE2"].contains(&k)) {
                return Err("certificate.kind: unknown kind".into());
            }
            check_rational(c.get("lower_bound").ok_or("certificate: missing lower_bound")?, "certificate.lower_bound")?;
            match c.get("witness").ok_or("certificate: missing witness")? {
                Value::Null => {}
                Value::Object(w) => {
                    for key in ["degree", "multiplicity"] {
                        if !w.get(key).is_some_and(|x| x.as_u64().is_some_and(|n| n > 0)) {
                            return Err(format!("certificate.witness.{key}: expected positive integer"));
                        }
                    }
                }
                _ => return Err("certificate.witness: expected object or null".into()),
            }
            match c.get("epsilon").ok_or("certificate: missing epsilon")? {
                Value::Null => {}
                e => check_rational(e, "certificate.epsilon")?,
            }
        }
        _ => return Err("certificate: expected object or null".into()),
    }
    match &o["elapsed_ms"] {
        Value::Null => {}
        e if e.is_u64() => {}
        _ => return Err("elapsed_ms: expected non-negative integer or null".into()),
    }
    no_floats(v, "report")
}
