//! Command reports in text and JSON form.
//!
//! JSON reports carry `"schema": "ualg-report/1"`, the command name, a
//! status string and the exit code, followed by command-specific fields.

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "ualg-report/1";

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    /// Unreadable file, syntax error, bad arguments, unknown names, budget.
    Usage = 1,
    /// The document parsed but violates an invariant.
    Invalid = 2,
    /// A checked theorem did not hold on the input.
    CheckFailed = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn status(self) -> &'static str {
        match self {
            Exit::Ok => "ok",
            Exit::Usage => "error",
            Exit::Invalid => "invalid",
            Exit::CheckFailed => "check-failed",
        }
    }
}

/// A failure that ends a command before a report exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            exit: Exit::Usage,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub exit: Exit,
    lines: Vec<String>,
    data: Map<String, Value>,
    failed: Vec<String>,
    raw: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            exit: Exit::Ok,
            lines: Vec::new(),
            data: Map::new(),
            failed: Vec::new(),
            raw: None,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(
            key.to_owned(),
            serde_json::to_value(value).expect("report values serialize"),
        );
    }

    /// Records a named check; a failure raises the exit code to 3.
    pub fn check(&mut self, name: &str, holds: bool, detail: impl FnOnce() -> String) {
        if holds {
            self.line(format!("check {name}: holds"));
        } else {
            let detail = detail();
            self.line(format!("check {name}: FAILS ({detail})"));
            self.failed.push(format!("{name}: {detail}"));
            self.exit = self.exit.max(Exit::CheckFailed);
        }
    }

    pub fn invalid(&mut self) {
        self.exit = self.exit.max(Exit::Invalid);
    }

    /// Text output printed verbatim instead of the report lines.
    pub fn raw(&mut self, text: String) {
        self.raw = Some(text);
    }

    pub fn render(&self, json: bool) -> String {
        if let (Some(raw), false) = (&self.raw, json) {
            return raw.clone();
        }
        if !json {
            let mut out = self.lines.join("\n");
            out.push('\n');
            return out;
        }
        let mut obj = Map::new();
        obj.insert("schema".into(), SCHEMA.into());
        obj.insert("command".into(), self.command.into());
        obj.insert("status".into(), self.exit.status().into());
        obj.insert("exit".into(), self.exit.code().into());
        obj.insert("failed_checks".into(), self.failed.clone().into());
        obj.extend(self.data.clone());
        let mut out =
            serde_json::to_string_pretty(&Value::Object(obj)).expect("json objects serialize");
        out.push('\n');
        out
    }
}

/// The JSON body printed for a [`CliError`] under `--json`.
pub fn error_json(command: &str, err: &CliError) -> String {
    let value = serde_json::json!({
        "schema": SCHEMA,
        "command": command,
        "status": err.exit.status(),
        "exit": err.exit.code(),
        "error": err.message,
    });
    let mut out = serde_json::to_string_pretty(&value).expect("json objects serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_check_sets_exit_and_json_fields() {
        let mut r = Report::new("basis");
        r.check("generates", true, String::new);
        r.check("minimal", false, || "drop x".into());
        r.set("sizes", [1, 2]);
        assert_eq!(r.exit, Exit::CheckFailed);
        let v: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["exit"], 3);
        assert_eq!(v["sizes"], serde_json::json!([1, 2]));
        assert_eq!(v["failed_checks"][0], "minimal: drop x");
        assert!(r.render(false).contains("check minimal: FAILS (drop x)"));
    }
}
