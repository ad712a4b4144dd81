//! Machine-readable run reports.

use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::rational::to_string;
use crate::exact::{factor_linear, Poly, RatFunc};

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, paper_ref: impl Into<String>, witness: Option<String>) -> Check {
        Check { name: name.into(), paper_ref: paper_ref.into(), pass: witness.is_none(), witness }
    }

    /// Passing unless `r` is an error or carries a witness.
    pub fn from_result(name: impl Into<String>, paper_ref: impl Into<String>, r: crate::Result<Option<String>>) -> Check {
        let witness = match r {
            Ok(w) => w,
            Err(e) => Some(format!("error: {e}")),
        };
        Check::new(name, paper_ref, witness)
    }
}

/// The full report for one command invocation.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A polynomial as its display string, plus its roots when it splits into linear factors.
pub fn poly_json(p: &Poly) -> Value {
    let roots = if p.is_monic() {
        factor_linear(p).ok().map(|r| r.iter().map(to_string).collect::<Vec<_>>())
    } else {
        None
    };
    json!({ "monic": p.to_string(), "roots": roots })
}

pub fn ratfunc_json(f: &RatFunc) -> Value {
    json!({ "num": poly_json(f.num()), "den": poly_json(f.den()), "display": f.to_string() })
}
