use serde_json::{json, Map, Value};

use crate::Format;

#[derive(Debug, Clone)]
pub struct SumRow {
    pub n: usize,
    pub value: String,
    pub method: &'static str,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct MomentRow {
    pub n: usize,
    pub b: String,
    pub beta: String,
    pub error: String,
    pub beta_error: String,
}

#[derive(Debug, Clone)]
pub struct ZeroRow {
    pub k: usize,
    pub value: String,
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone)]
pub struct OracleRow {
    pub n: usize,
    pub partial: String,
    pub tail: String,
    pub estimate: String,
    pub error_bound: String,
    pub newton: String,
    pub bound_kind: String,
    pub note: String,
}

/// Everything a command prints; values are already decimal strings.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub function: String,
    pub params: Vec<(String, String)>,
    pub precision: u32,
    pub sigmas: Option<Vec<String>>,
    pub sums: Vec<SumRow>,
    pub checks: Option<Vec<Check>>,
    pub moments: Option<Vec<MomentRow>>,
    pub zeros: Option<Vec<ZeroRow>>,
    pub oracle: Option<Vec<OracleRow>>,
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks
            .as_ref()
            .is_none_or(|c| c.iter().all(|c| c.passed))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn sum_value(&self, n: usize, method: &str) -> Option<&str> {
        self.sums
            .iter()
            .find(|r| r.n == n && r.method == method)
            .map(|r| r.value.as_str())
    }

    fn max_n(&self) -> usize {
        self.sums.iter().map(|r| r.n).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("function".into(), json!(self.function));
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        top.insert("params".into(), Value::Object(params));
        top.insert("precision".into(), json!(self.precision));
        if let Some(sig) = &self.sigmas {
            let rows: Vec<Value> = sig
                .iter()
                .enumerate()
                .map(|(n, v)| json!({"n": n, "value": v}))
                .collect();
            top.insert("sigmas".into(), Value::Array(rows));
        }
        let sums: Vec<Value> = self
            .sums
            .iter()
            .map(|r| json!({"n": r.n, "value": r.value, "method": r.method}))
            .collect();
        top.insert("sums".into(), Value::Array(sums));
        if let Some(m) = &self.moments {
            let rows: Vec<Value> = m
                .iter()
                .map(|r| json!({"n": r.n, "b": r.b, "b_error": r.error, "beta": r.beta, "beta_error": r.beta_error}))
                .collect();
            top.insert("moments".into(), Value::Array(rows));
        }
        if let Some(z) = &self.zeros {
            let rows: Vec<Value> = z
                .iter()
                .map(|r| json!({"k": r.k, "value": r.value, "bracket": [r.lo, r.hi]}))
                .collect();
            top.insert("zeros".into(), Value::Array(rows));
        }
        if let Some(o) = &self.oracle {
            let rows: Vec<Value> = o
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "partial": r.partial,
                        "tail": r.tail,
                        "estimate": r.estimate,
                        "error_bound": r.error_bound,
                        "newton": r.newton,
                        "bound_kind": r.bound_kind,
                        "note": r.note,
                    })
                })
                .collect();
            top.insert("oracle".into(), Value::Array(rows));
        }
        if let Some(c) = &self.checks {
            let rows: Vec<Value> = c
                .iter()
                .map(|c| json!({"name": c.name, "status": status(c.passed), "detail": c.detail}))
                .collect();
            top.insert("checks".into(), Value::Array(rows));
        }
        Value::Object(top)
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(m) = &self.moments {
            out.push_str("n,b,b_error,beta,beta_error\n");
            for r in m {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n, r.b, r.error, r.beta, r.beta_error
                ));
            }
            return out;
        }
        if let Some(o) = &self.oracle {
            out.push_str("n,partial,tail,estimate,error_bound,newton\n");
            for r in o {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.n, r.partial, r.tail, r.estimate, r.error_bound, r.newton
                ));
            }
            return out;
        }
        out.push_str("n,sigma,s_recurrence,s_determinant\n");
        for n in 1..=self.max_n() {
            let sigma = self
                .sigmas
                .as_ref()
                .and_then(|s| s.get(n))
                .map(String::as_str)
                .unwrap_or("");
            out.push_str(&format!(
                "{n},{sigma},{},{}\n",
                self.sum_value(n, "recurrence").unwrap_or(""),
                self.sum_value(n, "determinant").unwrap_or("")
            ));
        }
        out
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        if params.is_empty() {
            out.push_str(&format!("{}, {} digits\n", self.function, self.precision));
        } else {
            out.push_str(&format!(
                "{} ({}), {} digits\n",
                self.function,
                params.join(", "),
                self.precision
            ));
        }
        if let Some(sig) = &self.sigmas {
            for (n, v) in sig.iter().enumerate().skip(1) {
                out.push_str(&format!("sigma_{n} = {v}\n"));
            }
        }
        for r in &self.sums {
            out.push_str(&format!("s_{} [{}] = {}\n", r.n, r.method, r.value));
        }
        if let Some(m) = &self.moments {
            for r in m {
                out.push_str(&format!(
                    "b_{n} = {}  (± {})\nbeta_{n} = {}  (± {})\n",
                    r.b,
                    r.error,
                    r.beta,
                    r.beta_error,
                    n = r.n
                ));
            }
        }
        if let Some(z) = &self.zeros {
            for r in z {
                out.push_str(&format!(
                    "zero_{} = {}  in [{}, {}]\n",
                    r.k, r.value, r.lo, r.hi
                ));
            }
        }
        if let Some(o) = &self.oracle {
            for r in o {
                out.push_str(&format!(
                    "oracle s_{n} = {} ± {}  (partial {}, tail {}, {})\nnewton s_{n} = {}\n",
                    r.estimate,
                    r.error_bound,
                    r.partial,
                    r.tail,
                    r.bound_kind,
                    r.newton,
                    n = r.n
                ));
            }
        }
        if let Some(c) = &self.checks {
            for c in c {
                out.push_str(&format!("{} {}: {}\n", status(c.passed), c.name, c.detail));
            }
        }
        out
    }
}
