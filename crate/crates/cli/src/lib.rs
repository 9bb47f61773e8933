//! `qkvf`: verification reports and dimension tables.
//!
//! Exit codes: 0 when every check passes, 1 on a usage error, 2 when a
//! check fails.

pub mod identities;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use qkvf_core::exact::binomial;
use qkvf_core::flat::kernel_dimension;
use qkvf_core::twistor::{closed_form_dim, euler_wedge_map, holo_dim, real_form_dim, vtilde_dim};

pub use report::{Check, Report, Status, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qkvf", version = qkvf_core::VERSION, about = "Exact checks for quaternionic k-vector fields")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Holomorphic k-vector fields on CP^{2n+1}: brute force vs closed form.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long = "k-max")]
        k_max: usize,
        /// Also compute real dimensions of the τ̂-fixed parts.
        #[arg(long)]
        real: bool,
    },
    /// Structure equations and the algebraic identity suites.
    Identities {
        /// Print check names without running them.
        #[arg(long)]
        list: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Quaternionic k-vector fields on H^n with polynomial coefficients.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        degree: usize,
    },
}

/// What a run printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            };
        }
    };
    if let Command::Identities { list: true, .. } = cli.command {
        let stdout = identities::catalogue()
            .iter()
            .map(|(name, statement)| format!("{name}\t{statement}\n"))
            .collect();
        return Outcome { code: EXIT_OK, stdout, stderr: String::new() };
    }
    let start = Instant::now();
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(msg) => return Outcome::usage(format!("error: {msg}\n")),
    };
    let report = Report {
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        ..report
    };
    let stdout = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Table => report.to_table(),
    };
    Outcome {
        code: if report.all_passed() { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr: String::new(),
    }
}

fn execute(cmd: &Command) -> Result<Report, String> {
    match *cmd {
        Command::Dims { n, k_max, real } => cmd_dims(n, k_max, real),
        Command::Identities { inject_fault, .. } => Ok(cmd_identities(inject_fault)),
        Command::Kernel { n, k, degree } => cmd_kernel(n, k, degree),
    }
}

fn row(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn cmd_dims(n: usize, k_max: usize, real: bool) -> Result<Report, String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    if k_max == 0 || k_max > 2 * n + 1 {
        return Err(format!("--k-max must lie in 1..={}", 2 * n + 1));
    }
    let mut report = Report::new(format!("dims --n {n} --k-max {k_max}{}", if real { " --real" } else { "" }));
    report.columns = ["k", "vtilde_dim", "rank", "holo_dim", "closed_form_dim", "match"]
        .map(String::from)
        .to_vec();
    if real {
        report.columns.push("real_form_dim".into());
    }
    for k in 1..=k_max {
        let rank = euler_wedge_map(n, k).map_err(|e| e.to_string())?.rank();
        let holo = holo_dim(n, k).map_err(|e| e.to_string())?;
        let closed = closed_form_dim(n, k).map_err(|e| e.to_string())?;
        let closed = i64::try_from(closed).map_err(|e| e.to_string())?;
        let matches = holo as i64 == closed;
        report.checks.push(Check::compare(format!("holo_dim(n={n}, k={k})"), closed, holo as i64));
        let mut r = row(vec![
            ("k", json!(k)),
            ("vtilde_dim", json!(vtilde_dim(n, k))),
            ("rank", json!(rank)),
            ("holo_dim", json!(holo)),
            ("closed_form_dim", json!(closed)),
            ("match", json!(matches)),
        ]);
        if real {
            let rd = real_form_dim(n, k).map_err(|e| e.to_string())?;
            report.checks.push(Check::compare(format!("real_form_dim(n={n}, k={k})"), holo, rd));
            r.insert("real_form_dim".into(), json!(rd));
        }
        report.rows.push(r);
    }
    Ok(report)
}

pub fn cmd_identities(inject_fault: bool) -> Report {
    let mut report = Report::new("identities");
    report.checks = identities::run(inject_fault);
    report
}

pub fn cmd_kernel(n: usize, k: usize, degree: usize) -> Result<Report, String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    if k == 0 || k > 2 * n {
        return Err(format!("--k must lie in 1..={}", 2 * n));
    }
    let mut report = Report::new(format!("kernel --n {n} --k {k} --degree {degree}"));
    let dim = kernel_dimension(n, k, degree).map_err(|e| e.to_string())?;
    let baseline = binomial(2 * n, k) * (k + 1);
    // Constants are always quaternionic.
    report.checks.push(Check {
        name: "constants_included".into(),
        status: Status::from_bool(dim >= baseline),
        expected: format!(">= {baseline}"),
        actual: dim.to_string(),
    });
    report.columns = ["n", "k", "degree", "kernel_dimension", "baseline"].map(String::from).to_vec();
    report.rows.push(row(vec![
        ("n", json!(n)),
        ("k", json!(k)),
        ("degree", json!(degree)),
        ("kernel_dimension", json!(dim)),
        ("baseline", json!(baseline)),
    ]));
    Ok(report)
}
