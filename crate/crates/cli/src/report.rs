use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn compare<T: PartialEq + ToString>(name: impl Into<String>, expected: T, actual: T) -> Self {
        Self {
            name: name.into(),
            status: Status::from_bool(expected == actual),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub version: String,
    pub elapsed_ms: f64,
    pub checks: Vec<Check>,
    /// Column order for `rows` in CSV and table output.
    #[serde(default)]
    pub columns: Vec<String>,
    #[serde(default)]
    pub rows: Vec<Map<String, Value>>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA,
            command: command.into(),
            version: qkvf_core::VERSION.to_string(),
            elapsed_ms: 0.0,
            checks: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// The rows table, or the checks table when there are no rows.
    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        if self.columns.is_empty() {
            let head = ["name", "status", "expected", "actual"].map(String::from).to_vec();
            let body = self
                .checks
                .iter()
                .map(|c| vec![c.name.clone(), c.status.as_str().into(), c.expected.clone(), c.actual.clone()])
                .collect();
            return (head, body);
        }
        let body = self
            .rows
            .iter()
            .map(|r| self.columns.iter().map(|c| cell(r.get(c))).collect())
            .collect();
        (self.columns.clone(), body)
    }

    pub fn to_csv(&self) -> String {
        let (head, body) = self.table();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&head).expect("in-memory write");
        for row in &body {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{}  (qkvf {}, {:.1} ms)\n", self.command, self.version, self.elapsed_ms);
        if !self.columns.is_empty() {
            let (head, body) = self.table();
            out.push_str(&aligned(&head, &body));
            out.push('\n');
        }
        for c in &self.checks {
            let mark = if c.status == Status::Pass { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {}  expected {}  actual {}\n", c.name, c.expected, c.actual));
        }
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), self.failures()));
        out
    }
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(v) => v.to_string(),
    }
}

fn aligned(head: &[String], body: &[Vec<String>]) -> String {
    let width = |i: usize| {
        body.iter()
            .map(|r| r[i].chars().count())
            .chain([head[i].chars().count()])
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..head.len()).map(width).collect();
    let line = |r: &[String]| {
        r.iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut lines = vec![line(head)];
    lines.extend(body.iter().map(|r| line(r)));
    lines.join("\n")
}
