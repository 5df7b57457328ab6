//! Argument parsing, dispatch and rendering for the `abelcover` binary.
//!
//! [`run`] never panics on bad input and never exits the process; the
//! binary only forwards its [`Outcome`]. Exit codes: 0 success, 1 domain
//! failure (covers do not glue, no integral line bundles, a table does not
//! regenerate), 2 input error (unreadable or malformed document, unknown
//! identifier, bad command line).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use abelcover_core::cover::{local_equations, local_germ, slc_check, structure_flags};
use abelcover_core::document::{parse_input, to_problem, validate_document};
use abelcover_core::gluing::{glue_check, local_config_at, GluingProblem};
use abelcover_core::invariants::{global_cartier_index, invariant_report, CartierIndex};
use abelcover_core::local::tables::table;
use abelcover_core::local::{classify, regenerate_table, TableRow, TABLE_TITLES};
use abelcover_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "abelcover",
    version,
    about = "Abelian covers of surfaces with double crossings",
    after_help = "ABELCOVER_SEED is reserved and currently ignored: every command is deterministic."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural checks, cover flags and the slc criterion.
    Validate { file: PathBuf },
    /// Table row of the cover over one point.
    ClassifyPoint {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// K^2, chi(O_X), the eigensheaves and the Cartier indices.
    Invariants { file: PathBuf },
    /// Whether the covers of the components glue.
    GlueCheck { file: PathBuf },
    /// Print or regenerate the classification tables.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
        table: Option<u8>,
        #[arg(long)]
        regenerate: bool,
    },
    /// Cartier index of K_X at one point or at every declared point.
    Index {
        file: PathBuf,
        #[arg(long)]
        point: Option<String>,
    },
    /// Local equations of the cover over a point, per component.
    LocalEq {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::ClassifyPoint { .. } => "classify-point",
            Command::Invariants { .. } => "invariants",
            Command::GlueCheck { .. } => "glue-check",
            Command::Tables { .. } => "tables",
            Command::Index { .. } => "index",
            Command::LocalEq { .. } => "local-eq",
        }
    }
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    Failure,
    Error,
}

impl Status {
    fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failure => 1,
            Status::Error => 2,
        }
    }

    fn word(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failure => "failure",
            Status::Error => "error",
        }
    }
}

struct Report {
    status: Status,
    results: Value,
    text: String,
}

impl Report {
    fn ok(results: Value, text: String) -> Self {
        Report { status: Status::Ok, results, text }
    }
}

fn status_of(err: &Error) -> Status {
    if err.is_input_error() {
        Status::Error
    } else {
        Status::Failure
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let name = cli.command.name();
    let report = dispatch(&cli.command).unwrap_or_else(|e| Report {
        status: status_of(&e),
        results: json!({ "error": e.to_string() }),
        text: String::new(),
    });
    let code = report.status.code();
    match cli.format {
        Format::Json => {
            let doc = json!({ "command": name, "status": report.status.word(), "results": report.results });
            let mut stdout = serde_json::to_string_pretty(&doc).expect("reports serialize");
            stdout.push('\n');
            Outcome { code, stdout, stderr: String::new() }
        }
        Format::Text if report.status == Status::Ok || !report.text.is_empty() => {
            Outcome { code, stdout: report.text, stderr: String::new() }
        }
        Format::Text => {
            let msg = report.results.get("error").and_then(Value::as_str).unwrap_or("failed").to_string();
            Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

fn load(path: &Path) -> abelcover_core::Result<GluingProblem> {
    let text = read(path)?;
    to_problem(&parse_input(&text)?)
}

fn read(path: &Path) -> abelcover_core::Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn to_value<T: serde::Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn dispatch(cmd: &Command) -> abelcover_core::Result<Report> {
    match cmd {
        Command::Validate { file } => validate(file),
        Command::ClassifyPoint { file, point } => classify_point(&load(file)?, point),
        Command::Invariants { file } => invariants(&load(file)?),
        Command::GlueCheck { file } => glue(&load(file)?),
        Command::Tables { table, regenerate } => tables(*table, *regenerate),
        Command::Index { file, point } => index(&load(file)?, point.as_deref()),
        Command::LocalEq { file, point } => local_eq(&load(file)?, point),
    }
}

fn validate(file: &Path) -> abelcover_core::Result<Report> {
    let doc = parse_input(&read(file)?)?;
    let findings = validate_document(&doc)?;
    if !findings.is_empty() {
        let mut text = String::new();
        for f in &findings {
            writeln!(text, "{}: {}", f.subject, f.message).unwrap();
        }
        return Ok(Report { status: Status::Error, results: json!({ "findings": findings }), text });
    }
    let p = to_problem(&doc)?;
    let mut text = String::new();
    let mut status = Status::Ok;
    let mut components = Vec::new();
    for bd in &p.building {
        let flags = structure_flags(&p.surface, bd)?;
        let lines = match p.line_bundles(&bd.component) {
            Ok(_) => None,
            Err(e) if e.is_input_error() => return Err(e),
            Err(e) => {
                status = Status::Failure;
                Some(e.to_string())
            }
        };
        writeln!(
            text,
            "{}: normal={} gdc={} standardable={} line bundles: {}",
            bd.component,
            flags.normal,
            flags.gdc,
            flags.standardable,
            lines.as_deref().unwrap_or("ok")
        )
        .unwrap();
        components.push(json!({ "component": bd.component, "flags": flags, "line_bundle_error": lines }));
    }
    let slc = slc_check(&p.surface, &p.building)?;
    if slc.is_empty() {
        writeln!(text, "slc: ok").unwrap();
    } else {
        status = Status::Failure;
        for v in &slc {
            writeln!(text, "slc: {} at {}: {}", v.component, v.locus, v.value).unwrap();
        }
    }
    Ok(Report { status, results: json!({ "findings": [], "components": components, "slc_violations": slc }), text })
}

fn classify_point(p: &GluingProblem, point: &str) -> abelcover_core::Result<Report> {
    p.surface.point(point)?;
    let cfg = local_config_at(p, point)?;
    let c = classify(&cfg)?;
    let d = c.descriptor;
    let mut text = String::new();
    writeln!(text, "point {point}: {} (Table {})", c.label, c.row.table).unwrap();
    writeln!(text, "  germ          {cfg}").unwrap();
    writeln!(text, "  relations     {}", c.relations).unwrap();
    writeln!(text, "  |H|           {}", c.h_order).unwrap();
    writeln!(text, "  iota          {}", c.iota).unwrap();
    if let Some(chi) = c.chi {
        writeln!(text, "  chi           {chi}").unwrap();
    }
    writeln!(text, "  singularity   {}", d.singularity.unwrap_or("-")).unwrap();
    writeln!(text, "  normalization {}", c.normalization).unwrap();
    Ok(Report::ok(json!({ "point": point, "config": cfg, "classification": c }), text))
}

fn invariants(p: &GluingProblem) -> abelcover_core::Result<Report> {
    let r = invariant_report(p)?;
    let mut text = String::new();
    writeln!(text, "K^2 = {}", r.k_square).unwrap();
    writeln!(text, "chi(O_X) = {}", r.chi_ox).unwrap();
    writeln!(text, "chi(O_X') = {}", r.chi_x_prime).unwrap();
    writeln!(text, "chi(O_B~) = {}", r.chi_b_tilde).unwrap();
    let rel: Vec<String> = r.relevant.iter().map(|(y, w)| format!("{y} ({w})")).collect();
    writeln!(text, "relevant points: {}", if rel.is_empty() { "none".into() } else { rel.join(", ") }).unwrap();
    writeln!(text, "eigensheaves:").unwrap();
    for e in &r.eigensheaves {
        let h = match e.cohomology {
            Some((h0, h1, h2)) => format!("h = ({h0}, {h1}, {h2})"),
            None => "h undetermined".into(),
        };
        writeln!(text, "  {}: chi(F) = {}, {h}", e.character, e.chi_f).unwrap();
    }
    writeln!(text, "Cartier index of K_X:").unwrap();
    for (y, idx) in &r.cartier {
        writeln!(text, "  {y}: {}", index_word(*idx)).unwrap();
    }
    Ok(Report::ok(to_value(&r), text))
}

fn index_word(idx: CartierIndex) -> &'static str {
    match idx {
        CartierIndex::One => "1",
        CartierIndex::Two => "2",
        CartierIndex::Indeterminate => "undetermined",
    }
}

fn glue(p: &GluingProblem) -> abelcover_core::Result<Report> {
    let report = glue_check(p)?;
    let mut text = String::new();
    if report.passed() {
        writeln!(text, "the covers glue").unwrap();
    }
    for v in &report.violations {
        writeln!(text, "{}: {}", v.point.as_deref().unwrap_or(&v.curve), v.message).unwrap();
    }
    let status = if report.passed() { Status::Ok } else { Status::Failure };
    Ok(Report { status, results: to_value(&report), text })
}

fn index(p: &GluingProblem, point: Option<&str>) -> abelcover_core::Result<Report> {
    let ids: Vec<&str> = match point {
        Some(y) => vec![p.surface.point(y)?.id.as_str()],
        None => p.surface.points.iter().map(|pt| pt.id.as_str()).collect(),
    };
    let mut out = BTreeMap::new();
    let mut text = String::new();
    for y in ids {
        let idx = global_cartier_index(p, y)?;
        writeln!(text, "{y}: {}", index_word(idx)).unwrap();
        out.insert(y.to_string(), idx);
    }
    Ok(Report::ok(to_value(&out), text))
}

fn local_eq(p: &GluingProblem, point: &str) -> abelcover_core::Result<Report> {
    let decl = p.surface.point(point)?;
    let mut text = String::new();
    let mut results = Vec::new();
    for bd in &p.building {
        if !p.surface.components_at(decl)?.contains(&bd.component) {
            continue;
        }
        // Same symbol order as the germ: first appearance in the data.
        let mut symbols: Vec<&str> = Vec::new();
        for d in bd.data_through(decl) {
            if !symbols.contains(&d.curve.as_str()) {
                symbols.push(&d.curve);
            }
        }
        let eq = local_equations(&local_germ(bd, decl))?;
        let monomial = |sigma: &[u64]| -> String {
            let parts: Vec<String> = sigma
                .iter()
                .zip(&symbols)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, s)| if e == 1 { format!("s[{s}]") } else { format!("s[{s}]^{e}") })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join(" ")
            }
        };
        writeln!(text, "{}:", bd.component).unwrap();
        for pw in &eq.powers {
            writeln!(text, "  z_{}^{} = {}", pw.character, pw.order, monomial(&pw.sigma)).unwrap();
        }
        for pr in &eq.products {
            let rhs = match (monomial(&pr.sigma), pr.product.is_trivial()) {
                (m, true) => m,
                (m, false) if m == "1" => format!("z_{}", pr.product),
                (m, false) => format!("{m} z_{}", pr.product),
            };
            writeln!(text, "  z_{} z_{} = {rhs}", pr.left, pr.right).unwrap();
        }
        results.push(json!({ "component": bd.component, "symbols": symbols, "equations": eq }));
    }
    Ok(Report::ok(json!({ "point": point, "components": results }), text))
}

const HEADERS: [&str; 9] = ["", "|H|", "relations", "ι", "χ", "singularity", "X~", "C maps", "X^sr"];

fn cells(row: &TableRow) -> [String; 9] {
    let opt = |s: Option<&str>| s.unwrap_or("").to_string();
    let singularity = match row.same_as {
        Some(other) => format!("same as {other}"),
        None => opt(row.singularity),
    };
    [
        row.label.to_string(),
        row.h_order.to_string(),
        row.relations.to_string(),
        row.iota.map(|i| i.to_string()).unwrap_or_default(),
        row.chi.map(|c| c.to_string()).unwrap_or_default(),
        singularity,
        opt(row.normalization),
        opt(row.curve_map),
        row.sr.map(|s| s.to_string()).unwrap_or_default(),
    ]
}

/// Width-aligned rows, dropping columns that are empty throughout.
fn render_table(id: u8) -> String {
    let rows: Vec<[String; 9]> = table(id).map(cells).collect();
    let keep: Vec<usize> = (0..9).filter(|&c| c == 0 || rows.iter().any(|r| !r[c].is_empty())).collect();
    let width = |c: usize| rows.iter().map(|r| r[c].chars().count()).chain([HEADERS[c].chars().count()]).max().unwrap();
    let widths: Vec<usize> = keep.iter().map(|&c| width(c)).collect();
    let line = |cols: Vec<&str>| -> String {
        let padded: Vec<String> =
            cols.iter().zip(&widths).map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut text = format!("Table {id}: {}\n", TABLE_TITLES[id as usize - 1]);
    text.push_str(&line(keep.iter().map(|&c| HEADERS[c]).collect()));
    text.push('\n');
    for r in &rows {
        text.push_str(&line(keep.iter().map(|&c| r[c].as_str()).collect()));
        text.push('\n');
    }
    text
}

fn tables(id: Option<u8>, regenerate: bool) -> abelcover_core::Result<Report> {
    let ids: Vec<u8> = id.map(|t| vec![t]).unwrap_or_else(|| (1..=9).collect());
    let mut text = String::new();
    let mut results = Vec::new();
    let mut status = Status::Ok;
    for t in ids {
        if regenerate {
            match regenerate_table(t) {
                Ok(r) => {
                    writeln!(text, "Table {t}: {} classes, {} rows, all matched", r.classes, r.rows).unwrap();
                    for (relations, label) in &r.matched {
                        writeln!(text, "  {relations:<16} -> {label}").unwrap();
                    }
                    results.push(to_value(&r));
                }
                Err(e @ Error::Regeneration(_)) => {
                    status = Status::Failure;
                    writeln!(text, "Table {t}: {e}").unwrap();
                    results.push(json!({ "table": t, "error": e.to_string() }));
                }
                Err(e) => return Err(e),
            }
        } else {
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&render_table(t));
            results.push(
                json!({ "table": t, "title": TABLE_TITLES[t as usize - 1], "rows": table(t).collect::<Vec<_>>() }),
            );
        }
    }
    Ok(Report { status, results: Value::Array(results), text })
}
