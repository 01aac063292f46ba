use serde_json::{Map, Value};

use crate::verdict::{Verdict, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// An ordered list of `key: value` lines. The final `result` line is added on render.
#[derive(Clone, Debug)]
pub struct Report {
    entries: Vec<(String, String)>,
    status: Status,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            entries: vec![("command".into(), command.into())],
            status: Status::Pass,
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn fail(&mut self) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    pub fn error(&mut self, kind: &str, message: impl ToString) {
        self.status = Status::Error;
        self.push("error", kind);
        self.push("message", message);
    }

    /// `law`, `witness`, `expected` and `actual` of a violation, under an optional prefix.
    pub fn violation(&mut self, prefix: &str, v: &Violation) {
        self.fail();
        for (key, value) in [
            ("law", v.law),
            ("witness", &v.witness),
            ("expected", &v.expected),
            ("actual", &v.actual),
        ] {
            self.push(format!("{prefix}{key}"), value);
        }
    }

    /// `key: pass` or `key: fail` followed by the violation.
    pub fn verdict(&mut self, key: &str, v: &Verdict) {
        match v {
            Ok(()) => self.push(key, "pass"),
            Err(violation) => {
                self.push(key, "fail");
                self.violation(&format!("{key}."), violation);
            }
        }
    }

    /// One line per named step, `skipped` once an earlier step failed; the
    /// first violation is appended after the list.
    pub fn steps(&mut self, prefix: &str, steps: &[(&'static str, Option<Verdict>)]) {
        let mut first = None;
        for (name, outcome) in steps {
            let word = match outcome {
                Some(Ok(())) => "pass",
                Some(Err(v)) => {
                    first.get_or_insert(v.clone());
                    "fail"
                }
                None => "skipped",
            };
            self.push(format!("{prefix}{name}"), word);
        }
        if let Some(v) = first {
            self.violation("", &v);
        }
    }

    pub fn lines(&self) -> Vec<(String, String)> {
        let mut out = self.entries.clone();
        out.push(("result".into(), self.status.word().into()));
        out
    }

    pub fn render_text(&self) -> String {
        self.lines()
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", v.replace('\n', " ")))
            .collect()
    }

    pub fn render_json(&self) -> String {
        let map: Map<String, Value> = self.lines().into_iter().map(|(k, v)| (k, Value::String(v))).collect();
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("strings serialize");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steps_report_skips_and_first_failure() {
        let mut r = Report::new("check");
        let v = Violation::new("right-counit", "e_12").with_sides("e_12", "e_11 + e_12");
        r.steps("axiom.", &[("a", Some(Ok(()))), ("b", Some(Err(v))), ("c", None)]);
        assert_eq!(
            r.render_text(),
            "command: check\naxiom.a: pass\naxiom.b: fail\naxiom.c: skipped\nlaw: right-counit\nwitness: e_12\n\
             expected: e_12\nactual: e_11 + e_12\nresult: fail\n"
        );
        assert_eq!(r.status().exit_code(), 1);
    }

    #[test]
    fn json_keeps_order() {
        let mut r = Report::new("dims");
        r.push("dim", 4);
        assert_eq!(
            r.render_json(),
            "{\n  \"command\": \"dims\",\n  \"dim\": \"4\",\n  \"result\": \"pass\"\n}\n"
        );
    }
}
