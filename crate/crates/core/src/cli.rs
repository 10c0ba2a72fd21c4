//! The `sympair` command line: distance tables, oracle verification, word
//! metrics, MDS listing and channel simulation.
//!
//! Exit codes: 0 success, 1 mismatch or guarantee violation, 2 usage or input
//! error, 3 incomplete verification (enumeration budget).

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::channel::correctability_experiment;
use crate::codes::{distance_table, CodeSpec};
use crate::error::{Error, Result};
use crate::gf::{build_field, FieldSpec};
use crate::oracle::{verify_over, EnumBudget, Status, Verdict};
use crate::pairmetrics::{
    hamming_distance, hamming_weight, pair_distance, pair_read, pair_weight, run_count,
};
use crate::polyring::RingElement;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
    #[default]
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "sympair",
    version,
    about = "Symbol-pair distances of repeated-root cyclic codes"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    pub format: OutputFormat,

    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Explicit modulus coefficients c_0,...,c_m (monic, irreducible).
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form d_H and d_p for every i in [0, p^e].
    Table {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        e: u32,
    },
    /// Check both closed forms against exhaustive search.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        e: u32,
        #[arg(long, default_value_t = 10_000_000)]
        max_enum: u64,
    },
    /// Hamming weight, pair weight and pair read of a word.
    Weight {
        #[command(flatten)]
        field: FieldArgs,
        /// Comma-separated element encodings, constant coordinate first.
        #[arg(long)]
        vector: String,
    },
    /// d_H, run count L and d_p of two words.
    Pairdist {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Generator exponents of the MDS symbol-pair codes in the family.
    Mds {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        e: u32,
    },
    /// Random pair errors followed by nearest-codeword decoding.
    Simulate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000_000)]
        max_enum: u64,
    },
}

#[derive(Clone, Debug, PartialEq)]
enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
    Text(String),
    Null,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.4}"),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Null => "-".into(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Value::from(*v),
            Cell::Bool(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Null => Value::Null,
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(headers: Vec<&'static str>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Tsv => {
                let mut out = self.headers.join("\t");
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::render).collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
                out
            }
            OutputFormat::Json => {
                let records: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut map = Map::new();
                        for (h, c) in self.headers.iter().zip(row) {
                            map.insert((*h).to_string(), c.to_json());
                        }
                        Value::Object(map)
                    })
                    .collect();
                let mut out =
                    serde_json::to_string_pretty(&records).expect("plain values serialize");
                out.push('\n');
                out
            }
            OutputFormat::Pretty => {
                let rendered: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|row| row.iter().map(Cell::render).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|k| {
                        rendered
                            .iter()
                            .map(|r| r[k].len())
                            .chain([self.headers[k].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    let s: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    let mut s = s.join("  ").trim_end().to_string();
                    s.push('\n');
                    s
                };
                let mut out = line(self.headers.clone());
                for r in &rendered {
                    out.push_str(&line(r.iter().map(String::as_str).collect()));
                }
                out
            }
        }
    }
}

/// Result of running one command: rendered stdout, an optional note for
/// stderr and the exit code.
struct Outcome {
    stdout: String,
    note: Option<String>,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            note: None,
            code: EXIT_OK,
        }
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidParameter(format!("cannot parse {what} entry {s:?}")))
        })
        .collect()
}

fn field_from(args: &FieldArgs) -> Result<FieldSpec> {
    match &args.modulus {
        None => build_field(args.p, args.m),
        Some(text) => {
            let coeffs = parse_list(text, "modulus")?;
            if coeffs.len() != args.m as usize + 1 {
                return Err(Error::InvalidParameter(format!(
                    "modulus has degree {} but --m is {}",
                    coeffs.len().saturating_sub(1),
                    args.m
                )));
            }
            FieldSpec::with_modulus(args.p, coeffs)
        }
    }
}

fn parse_vector(fs: &FieldSpec, text: &str) -> Result<RingElement> {
    let values = parse_list(text, "vector")?;
    RingElement::from_encodings(fs, &values)
}

fn format_pairs(x: &RingElement) -> Result<String> {
    Ok(pair_read(x)?
        .pairs()
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(" "))
}

fn cmd_table(field: &FieldArgs, e: u32, format: OutputFormat) -> Result<Outcome> {
    field_from(field)?;
    let mut table = Table::new(vec!["i", "dim", "d_h", "d_p", "branch", "mds_pair"]);
    for r in distance_table(field.p, e, field.m)? {
        table.push(vec![
            r.i.into(),
            r.dimension.into(),
            r.d_h.into(),
            r.d_p.into(),
            r.branch.into(),
            r.mds_pair.into(),
        ]);
    }
    Ok(Outcome::ok(table.render(format)))
}

fn cmd_verify(field: &FieldArgs, e: u32, max_enum: u64, format: OutputFormat) -> Result<Outcome> {
    let base = CodeSpec::with_field(field_from(field)?, e, 0)?;
    let report = verify_over(&base, EnumBudget::new(max_enum)?)?;
    let mut table = Table::new(vec![
        "i",
        "formula_d_h",
        "oracle_d_h",
        "formula_d_p",
        "oracle_d_p",
        "status",
        "branch",
        "witness",
    ]);
    for entry in &report.entries {
        let status = match entry.status {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Skipped => "skipped",
        };
        let witness = entry.witness.as_ref().map(|w| {
            w.encodings()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        });
        table.push(vec![
            entry.i.into(),
            entry.formula_d_h.into(),
            entry.oracle_d_h.into(),
            entry.formula_d_p.into(),
            entry.oracle_d_p.into(),
            status.into(),
            entry.branch.clone().into(),
            witness.into(),
        ]);
    }
    let (code, verdict) = match report.verdict() {
        Verdict::AllMatch => (EXIT_OK, "all entries match"),
        Verdict::Mismatch => (EXIT_MISMATCH, "MISMATCH between closed form and oracle"),
        Verdict::Incomplete => (EXIT_INCOMPLETE, "incomplete: some entries skipped (budget)"),
    };
    let mut stdout = table.render(format);
    if format == OutputFormat::Pretty {
        stdout.push_str(&format!("verdict: {verdict}\n"));
    }
    Ok(Outcome {
        stdout,
        note: (format != OutputFormat::Pretty).then(|| format!("verdict: {verdict}")),
        code,
    })
}

fn cmd_weight(field: &FieldArgs, vector: &str, format: OutputFormat) -> Result<Outcome> {
    let fs = field_from(field)?;
    let x = parse_vector(&fs, vector)?;
    let mut table = Table::new(vec!["n", "hamming_weight", "pair_weight", "pair_read"]);
    table.push(vec![
        x.len().into(),
        hamming_weight(&x).into(),
        pair_weight(&x)?.into(),
        format_pairs(&x)?.into(),
    ]);
    Ok(Outcome::ok(table.render(format)))
}

fn cmd_pairdist(field: &FieldArgs, x: &str, y: &str, format: OutputFormat) -> Result<Outcome> {
    let fs = field_from(field)?;
    let x = parse_vector(&fs, x)?;
    let y = parse_vector(&fs, y)?;
    let d_h = hamming_distance(&x, &y)?;
    let d_p = pair_distance(&x, &y)?;
    let runs = run_count(&x, &y)?.block_count;
    let n = x.len();
    let (identity, code) = if d_h == 0 || d_h == n {
        ("not-applicable", EXIT_OK)
    } else if d_p == d_h + runs {
        ("holds", EXIT_OK)
    } else {
        ("violated", EXIT_MISMATCH)
    };
    let mut table = Table::new(vec!["n", "d_h", "l", "d_p", "identity"]);
    table.push(vec![
        n.into(),
        d_h.into(),
        runs.into(),
        d_p.into(),
        identity.into(),
    ]);
    Ok(Outcome {
        stdout: table.render(format),
        note: (code != EXIT_OK).then(|| "d_p = d_H + L violated".to_string()),
        code,
    })
}

fn cmd_mds(field: &FieldArgs, e: u32, format: OutputFormat) -> Result<Outcome> {
    field_from(field)?;
    let mut table = Table::new(vec!["i", "dim", "d_p"]);
    for r in distance_table(field.p, e, field.m)? {
        if r.mds_pair == Some(true) {
            table.push(vec![r.i.into(), r.dimension.into(), r.d_p.into()]);
        }
    }
    Ok(Outcome::ok(table.render(format)))
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    field: &FieldArgs,
    e: u32,
    i: usize,
    t: usize,
    trials: usize,
    seed: u64,
    max_enum: u64,
    format: OutputFormat,
) -> Result<Outcome> {
    let spec = CodeSpec::with_field(field_from(field)?, e, i)?;
    let d_p = spec.closed_form_pair_distance()?.value;
    let threshold = d_p.saturating_sub(1) / 2;
    let guaranteed = 2 * t < d_p;
    let report = correctability_experiment(&spec, t, trials, seed, EnumBudget::new(max_enum)?)?;
    let mut table = Table::new(vec![
        "p",
        "e",
        "m",
        "i",
        "d_p",
        "threshold",
        "t",
        "trials",
        "successes",
        "success_rate",
        "guaranteed",
    ]);
    table.push(vec![
        (spec.p() as usize).into(),
        (e as usize).into(),
        (spec.m() as usize).into(),
        i.into(),
        d_p.into(),
        threshold.into(),
        t.into(),
        trials.into(),
        report.successes.into(),
        Cell::Float(report.success_rate),
        guaranteed.into(),
    ]);
    let violated = guaranteed && report.successes < trials;
    Ok(Outcome {
        stdout: table.render(format),
        note: violated.then(|| {
            format!(
                "guarantee violated: {} of {trials} trials failed with 2t+1 <= d_p",
                trials - report.successes
            )
        }),
        code: if violated { EXIT_MISMATCH } else { EXIT_OK },
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Table { field, e } => cmd_table(field, *e, format),
        Command::Verify { field, e, max_enum } => cmd_verify(field, *e, *max_enum, format),
        Command::Weight { field, vector } => cmd_weight(field, vector, format),
        Command::Pairdist { field, x, y } => cmd_pairdist(field, x, y, format),
        Command::Mds { field, e } => cmd_mds(field, *e, format),
        Command::Simulate {
            field,
            e,
            i,
            t,
            trials,
            seed,
            max_enum,
        } => cmd_simulate(field, *e, *i, *t, *trials, *seed, *max_enum, format),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExhausted { .. } => EXIT_INCOMPLETE,
        Error::Internal(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let text = err.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = match cli.jobs {
        Some(0) => Err(Error::InvalidParameter("--jobs must be at least 1".into())),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))
            .and_then(|pool| pool.install(|| dispatch(&cli))),
        None => dispatch(&cli),
    };
    match outcome {
        Ok(o) => {
            let _ = stdout.write_all(o.stdout.as_bytes());
            if let Some(note) = o.note {
                let _ = writeln!(stderr, "{note}");
            }
            o.code
        }
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code_for(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sympair").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn tsv_column(text: &str, name: &str) -> Vec<String> {
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
        let k = header.iter().position(|h| *h == name).unwrap();
        lines
            .map(|l| l.split('\t').nth(k).unwrap().to_string())
            .collect()
    }

    #[test]
    fn table_tsv() {
        let (code, out, _) = run_capture(&[
            "table", "--p", "3", "--e", "2", "--m", "1", "--format", "tsv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            tsv_column(&out, "d_p"),
            ["2", "3", "4", "4", "6", "6", "6", "9", "9", "0"]
        );
        assert!(out.lines().all(|l| !l.ends_with(char::is_whitespace)));
        let (_, out, _) = run_capture(&["--format", "tsv", "table", "--p", "5", "--e", "1"]);
        assert_eq!(tsv_column(&out, "d_p"), ["2", "3", "4", "5", "5", "0"]);
        assert_eq!(tsv_column(&out, "mds_pair").last().unwrap(), "-");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["table", "--p", "4", "--e", "2"]).0, 2);
        assert_eq!(run_capture(&["table", "--p", "3"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["weight", "--p", "3", "--vector", "1,x"]).0, 2);
        assert_eq!(run_capture(&["weight", "--p", "3", "--vector", "1,3"]).0, 2);
        assert_eq!(
            run_capture(&[
                "table",
                "--p",
                "2",
                "--e",
                "2",
                "--m",
                "2",
                "--modulus",
                "1,0,1"
            ])
            .0,
            2
        );
        // simulate refuses to run without a seed
        assert_eq!(
            run_capture(&["simulate", "--p", "3", "--e", "2", "--i", "4", "--t", "1"]).0,
            2
        );
        assert_eq!(
            run_capture(&["--jobs", "0", "mds", "--p", "3", "--e", "1"]).0,
            2
        );
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn explicit_modulus_accepted() {
        let (code, _, _) = run_capture(&[
            "verify",
            "--p",
            "3",
            "--m",
            "2",
            "--e",
            "1",
            "--modulus",
            "2,2,1",
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn weight_and_pairdist() {
        let (code, out, _) = run_capture(&[
            "weight",
            "--p",
            "3",
            "--vector",
            "2,1,0,0,0,0,0,0,0",
            "--format",
            "tsv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(tsv_column(&out, "hamming_weight"), ["2"]);
        assert_eq!(tsv_column(&out, "pair_weight"), ["3"]);
        let (_, out, _) = run_capture(&[
            "weight",
            "--p",
            "2",
            "--vector",
            "1,0,1,0,0",
            "--format",
            "tsv",
        ]);
        assert_eq!(tsv_column(&out, "pair_weight"), ["4"]);
        assert_eq!(
            tsv_column(&out, "pair_read"),
            ["(1,0) (0,1) (1,0) (0,0) (0,1)"]
        );

        let (code, out, _) = run_capture(&[
            "pairdist",
            "--p",
            "2",
            "--x",
            "1,0,0,0,1",
            "--y",
            "0,0,0,0,0",
            "--format",
            "tsv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(tsv_column(&out, "l"), ["1"]);
        assert_eq!(tsv_column(&out, "d_p"), ["3"]);
        assert_eq!(tsv_column(&out, "identity"), ["holds"]);
        let (_, out, _) = run_capture(&[
            "pairdist", "--p", "2", "--x", "1,1", "--y", "1,1", "--format", "tsv",
        ]);
        assert_eq!(tsv_column(&out, "d_p"), ["0"]);
        assert_eq!(
            run_capture(&["pairdist", "--p", "2", "--x", "1,1", "--y", "1,1,0"]).0,
            2
        );
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            run_capture(&["verify", "--p", "3", "--e", "2", "--m", "1"]).0,
            0
        );
        assert_eq!(
            run_capture(&["verify", "--p", "2", "--e", "2", "--m", "2"]).0,
            0
        );
        assert_eq!(
            run_capture(&["verify", "--p", "3", "--e", "2", "--max-enum", "5"]).0,
            3
        );
    }

    #[test]
    fn simulate_guaranteed() {
        let (code, out, _) = run_capture(&[
            "simulate", "--p", "2", "--e", "2", "--i", "1", "--t", "1", "--trials", "100",
            "--seed", "1", "--format", "tsv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(tsv_column(&out, "success_rate"), ["1.0000"]);
        assert_eq!(tsv_column(&out, "guaranteed"), ["true"]);
    }

    #[test]
    fn json_records_are_flat() {
        let (_, out, _) = run_capture(&["mds", "--p", "5", "--e", "1", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let is: Vec<u64> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["i"].as_u64().unwrap())
            .collect();
        assert_eq!(is, [0, 1, 2, 3]);
    }
}
