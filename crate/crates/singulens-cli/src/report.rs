//! Command reports: a structured payload plus a status and a stable exit
//! code, rendered as aligned text or JSON.
//!
//! Exit codes: 0 ok; 2 refused (a mathematical hypothesis of the requested
//! operation does not hold or could not be certified); 3 parse, usage, or
//! I/O error; 4 infeasible (the answer exists but is out of reach: infinite
//! colength or covolume, exhausted bounds, non-stabilized fits, or internal
//! inconsistencies).

use serde_json::{json, Value};
use singulens::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Refused,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Refused => "refused",
            Status::Error => "error",
        }
    }
}

/// Classify a library error into a report status and exit code.
pub fn error_class(e: &Error) -> (Status, i32) {
    match e {
        Error::HypothesisNotMet(_)
        | Error::NondegeneracyUnknown
        | Error::NotConvenient
        | Error::UnsupportedContext
        | Error::UnsupportedCone
        | Error::NonCompactFace
        | Error::ZeroGerm
        | Error::ConstantGerm
        | Error::ConstantTermPresent
        | Error::LatticeNotFull
        | Error::DegenerateCone
        | Error::NegativeExponent
        | Error::NonStronglyConvexCone => (Status::Refused, 2),
        Error::DimensionMismatch { .. } => (Status::Error, 3),
        Error::InfiniteColength
        | Error::InfiniteCovolume
        | Error::BoundTooSmall
        | Error::WitnessBoundExceeded
        | Error::NonStabilized
        | Error::RangeTooShort
        | Error::EmptySupport
        | Error::NonIntegerResult
        | Error::InternalInconsistency(_) => (Status::Error, 4),
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub exit_code: i32,
}

impl Report {
    pub fn ok(command: impl Into<String>, payload: Value) -> Report {
        Report {
            command: command.into(),
            status: Status::Ok,
            payload,
            exit_code: 0,
        }
    }

    pub fn refused(command: impl Into<String>, payload: Value) -> Report {
        Report {
            command: command.into(),
            status: Status::Refused,
            payload,
            exit_code: 2,
        }
    }

    pub fn from_error(command: impl Into<String>, error: &Error) -> Report {
        let (status, exit_code) = error_class(error);
        Report {
            command: command.into(),
            status,
            payload: json!({ "error": error.to_string() }),
            exit_code,
        }
    }

    /// Usage, argument, file, or session-parse problems: exit code 3.
    pub fn usage(command: impl Into<String>, message: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            status: Status::Error,
            payload: json!({ "error": message.into() }),
            exit_code: 3,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "exit_code": self.exit_code,
            "payload": self.payload,
            "status": self.status.label(),
        })
    }

    /// Aligned `key: value` text; nested maps indent by two spaces.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("status: {}\n", self.status.label()));
        render_value(&mut out, &self.payload, 0);
        out
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect::<Option<_>>()?;
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn render_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (key, item) in map {
                match scalar_text(item) {
                    Some(text) => {
                        out.push_str(&format!("{pad}{key:width$}: {text}\n"));
                    }
                    None => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_value(out, item, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(text) => out.push_str(&format!("{pad}- {text}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(out, item, indent + 1);
                    }
                }
            }
        }
        other => {
            let text = scalar_text(other).unwrap_or_default();
            out.push_str(&format!("{pad}{text}\n"));
        }
    }
}
