//! JSON output for the command-line tool. Objects serialize with sorted keys.

use serde_json::{json, Value};

use crate::gf::FieldCtx;
use crate::hoefsmit::Rep;
use crate::images::FieldCase;
use crate::suites::{Setting, SuiteResult};

pub const SCHEMA_VERSION: u32 = 1;

/// Note attached to every image report.
pub const IMAGE_NOTE: &str =
    "equality with the predicted group is only claimed where the enumeration terminates; elsewhere the invariants are necessary conditions";

pub fn field_json(f: &FieldCtx) -> Value {
    let desc = f.descriptor();
    json!({"p": desc.p, "d": desc.d, "q": f.q(), "modulus": desc.modulus})
}

pub fn case_json(c: &FieldCase) -> Value {
    json!({
        "case": c.case_id,
        "degrees": c.degrees,
        "alpha_degrees": c.dtilde,
    })
}

pub fn setting_json(s: &Setting) -> Value {
    let f = s.field();
    let mut v = json!({
        "type": s.type_name(),
        "n": s.n(),
        "field": field_json(f),
    });
    match s {
        Setting::B { params, case, .. } => {
            v["alpha"] = json!(f.coeffs(params.alpha));
            v["beta"] = json!(f.coeffs(params.beta));
            v["field_case"] = case_json(case);
        }
        Setting::D { params } => {
            v["alpha"] = json!(f.coeffs(params.alpha));
            v["split"] = json!(params.field_split());
        }
    }
    v
}

/// `{params, label, dim, gens}` with each generator as rows of coefficient vectors.
pub fn rep_json(rep: &Rep) -> Value {
    let f = &rep.field;
    let gens: serde_json::Map<String, Value> = rep
        .names
        .iter()
        .zip(&rep.gens)
        .map(|(name, m)| (name.clone(), json!(m.to_coeffs(f))))
        .collect();
    json!({
        "params": {
            "field": field_json(f),
            "alpha": f.coeffs(rep.alpha),
            "beta": f.coeffs(rep.beta),
            "n": rep.n,
        },
        "label": rep.label.to_string(),
        "dim": rep.dim(),
        "gens": gens,
    })
}

pub fn envelope(command: &str, setting: &Setting, body: Value) -> Value {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "setting": setting_json(setting),
    });
    if let (Value::Object(out), Value::Object(extra)) = (&mut v, body) {
        out.extend(extra);
    }
    v
}

pub fn verify_json(setting: &Setting, results: &[SuiteResult], seed: u64) -> Value {
    envelope(
        "verify",
        setting,
        json!({
            "seed": seed,
            "passed": results.iter().all(|r| r.passed),
            "suites": results,
        }),
    )
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}
