use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandReport {
    pub status: Status,
    pub payload: Value,
    pub citations: Vec<String>,
}

/// Exit codes: 0 ok, 1 domain error, 2 usage error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub exit: i32,
    pub code: String,
    pub message: String,
    pub detail: Option<Value>,
}

impl Failure {
    pub fn domain(code: &str, message: impl ToString) -> Self {
        Failure {
            exit: EXIT_DOMAIN,
            code: code.to_string(),
            message: message.to_string(),
            detail: None,
        }
    }

    pub fn usage(message: impl ToString) -> Self {
        Failure {
            exit: EXIT_USAGE,
            code: "usage".to_string(),
            message: message.to_string(),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn into_report(self, citations: Vec<String>) -> CommandReport {
        let mut payload = json!({ "code": self.code, "message": self.message });
        if let Some(d) = self.detail {
            payload["detail"] = d;
        }
        CommandReport {
            status: Status::Error,
            payload,
            citations,
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::domain(e.code(), &e)
            }
        }
    )*};
}

domain_from!(
    smaralg_core::ring::RingError,
    smaralg_core::ring::Rejection,
    smaralg_core::poly::PolyError,
    smaralg_core::linalg::LinalgError,
    smaralg_core::semigroup::SemigroupError,
    smaralg_core::semivector::SemivectorError
);

impl From<smaralg_core::econ::EconError> for Failure {
    fn from(e: smaralg_core::econ::EconError) -> Self {
        let failure = Failure::domain(e.code(), &e);
        match &e {
            smaralg_core::econ::EconError::Singular { nullspace } => {
                let rows: Vec<Vec<String>> = nullspace
                    .iter()
                    .map(|v| v.iter().map(smaralg_core::rational::format_rational).collect())
                    .collect();
                failure.with_detail(json!({ "nullspace": rows }))
            }
            _ => failure,
        }
    }
}

impl From<smaralg_core::rational::RationalError> for Failure {
    fn from(e: smaralg_core::rational::RationalError) -> Self {
        Failure::usage(e)
    }
}

pub fn to_payload<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

/// Two-column `key  value` summary of a payload, for `--pretty`.
pub fn human_table(payload: &Value) -> String {
    let mut out = String::new();
    match payload {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                let mut text = v.to_string();
                if text.len() > 96 {
                    text.truncate(93);
                    text.push_str("...");
                }
                out.push_str(&format!("{k:width$}  {text}\n"));
            }
        }
        other => {
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
    out
}
