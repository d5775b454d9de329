use std::fmt::Write;

use liaison_core::{CurveSummary, LiaisonError, Verdict};
use serde::Serialize;
use serde_json::Value;

use crate::input::Input;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Invalid,
    Blocked,
    Disagreement,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Invalid => 2,
            Status::Blocked => 3,
            Status::Disagreement => 4,
        }
    }

    pub fn of_error(e: &LiaisonError) -> Self {
        match e {
            LiaisonError::InvalidData(_) | LiaisonError::Domination(_) => Status::Invalid,
            _ => Status::Blocked,
        }
    }
}

/// Free-form block of a report: text lines for the table view and the same
/// content as structured data for `--json`.
#[derive(Debug, Serialize)]
pub struct Section {
    pub title: String,
    #[serde(skip)]
    pub lines: Vec<String>,
    pub data: Value,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<Input>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<CurveSummary>,
    pub verdicts: Vec<Verdict>,
    pub sections: Vec<Section>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            status: Status::Ok,
            input: None,
            invariants: None,
            verdicts: Vec::new(),
            sections: Vec::new(),
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn fail(&mut self, status: Status, msg: impl Into<String>) {
        self.status = status;
        self.error = Some(msg.into());
    }

    pub fn section(&mut self, title: impl Into<String>, lines: Vec<String>, data: Value) {
        self.sections.push(Section {
            title: title.into(),
            lines,
            data,
        });
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        let w = w.into();
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}  status: {:?}", self.command, self.status);
        if let Some(input) = &self.input {
            let _ = writeln!(out, "\ninput");
            let _ = writeln!(out, "  delta2  {}", input.minimal.delta2());
            let _ = writeln!(out, "  h1      {}", input.minimal.h1());
            if let Some(d) = &input.buchsbaum_dims {
                let _ = writeln!(out, "  buchsbaum dims  {d}");
            }
            if let Some(t1) = input.t1 {
                let _ = writeln!(out, "  t1      {t1}");
            }
            if let Some(k) = &input.kernel {
                let _ = writeln!(out, "  kernel  {k}");
            }
        }
        if let Some(s) = &self.invariants {
            let _ = writeln!(out, "\ninvariants");
            let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
            let rows = [
                ("degree", s.degree.to_string()),
                ("genus", s.genus.to_string()),
                ("e", s.e.to_string()),
                ("sigma", s.sigma.to_string()),
                ("alpha", s.alpha.to_string()),
                ("r_a", opt(s.r_a)),
                ("r_o", opt(s.r_o)),
                ("diam", s.diam.to_string()),
                ("s", s.s.to_string()),
                ("t", s.t.to_string()),
                ("numreg", s.numreg.to_string()),
                ("gamma", s.gamma.to_string()),
                (
                    "equal cohomology",
                    s.equal_cohomology.map_or("-".into(), |b| b.to_string()),
                ),
            ];
            for (k, v) in rows {
                let _ = writeln!(out, "  {k:<17}{v}");
            }
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out, "\nverdicts");
            for v in &self.verdicts {
                let mark = if v.holds { "yes" } else { "no " };
                let _ = writeln!(out, "  [{mark}] {}: {}  ({})", v.name, v.reason, v.basis);
            }
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n{}", s.title);
            for l in &s.lines {
                let _ = writeln!(out, "  {l}");
            }
        }
        if !self.warnings.is_empty() {
            let _ = writeln!(out, "\nwarnings");
            for w in &self.warnings {
                let _ = writeln!(out, "  - {w}");
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "\nerror: {e}");
        }
        out
    }
}
