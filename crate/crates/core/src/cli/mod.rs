//! The `loghodge` command line.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 success, 1 a
//! check found a violation or mismatch, 2 bad input.

pub mod document;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bott::{self, BottQuery};
use crate::error::{Error, Result};
use crate::gralg::{text::parse_presentation, GradedQuotientAlgebra};
use crate::grpcpt::{self, CartanType};
use crate::koszul::{self, DEFAULT_J_MAX};
use crate::table::{BigradedTable, Source, StripParams};
use crate::toric::{self, ValidatedFan};
use crate::verify;

pub use document::TableDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "loghodge", version, about = "Exact bigraded logarithmic Hodge tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tables of equivariant group compactifications.
    Grpcpt(GrpcptArgs),
    /// Koszul engine on an ideal presentation file.
    Engine(EngineArgs),
    /// Chow dimensions and h-vector of a smooth complete fan.
    Toric(ToricArgs),
    /// Twisted forms on projective space.
    Bott(BottArgs),
    /// Vanishing-strip check of a JSON table.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Closed,
    Engine,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug)]
struct GrpcptArgs {
    /// Cartan type such as A2, G2 or T3.
    #[arg(long = "type")]
    ty: String,
    #[arg(long, value_enum, default_value = "closed")]
    mode: Mode,
    /// Run both modes and compare.
    #[arg(long, conflicts_with = "mode")]
    crosscheck: bool,
    /// Largest internal degree. Engine cost grows steeply: A2 at 5 takes hours.
    #[arg(long)]
    jmax: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
}

#[derive(Args, Debug)]
struct EngineArgs {
    #[arg(long)]
    presentation: PathBuf,
    #[arg(long, default_value_t = DEFAULT_J_MAX)]
    jmax: usize,
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
}

#[derive(Args, Debug)]
struct ToricArgs {
    #[arg(long)]
    fan: PathBuf,
    /// Zero-based indices of boundary rays to remove.
    #[arg(long, value_delimiter = ',')]
    remove: Vec<usize>,
    #[arg(long, conflicts_with = "all")]
    codim: Option<usize>,
    /// Every codimension (the default).
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
}

#[derive(Args, Debug)]
struct BottArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, required_unless_present = "broer", conflicts_with = "broer")]
    j: Option<usize>,
    #[arg(long, required_unless_present = "broer", conflicts_with = "broer", allow_hyphen_values = true)]
    twist: Option<i64>,
    /// Scan twists for strip violations.
    #[arg(long, requires = "kmax")]
    broer: bool,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    kmin: i64,
    #[arg(long, allow_hyphen_values = true)]
    kmax: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    table: PathBuf,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    r: usize,
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Grpcpt(a) => grpcpt_cmd(a, out, err),
        Command::Engine(a) => engine_cmd(a, out),
        Command::Toric(a) => toric_cmd(a, out),
        Command::Bott(a) => bott_cmd(a, out, err),
        Command::Verify(a) => verify_cmd(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NotAComplex { .. } => EXIT_VIOLATION,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn emit(out: &mut dyn Write, t: &BigradedTable, format: Format, h_vector: Option<Vec<usize>>) -> Result<()> {
    match format {
        Format::Json => {
            let mut doc = TableDocument::from_table(t);
            doc.h_vector = h_vector;
            out.write_all(doc.to_json().as_bytes())?;
        }
        Format::Csv => out.write_all(document::to_csv(t).as_bytes())?,
        Format::Pretty => {
            write!(out, "{t}")?;
            if let Some(h) = h_vector {
                let hs: Vec<String> = h.iter().map(usize::to_string).collect();
                writeln!(out, "h-vector: {}", hs.join(" "))?;
            }
        }
    }
    Ok(())
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn grpcpt_cmd(a: GrpcptArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ty: CartanType = a.ty.parse()?;
    let degrees = grpcpt::invariant_degrees(ty);
    let closed = |j_max: Option<usize>| {
        let mut t = grpcpt::closed_form_table(&degrees, j_max);
        t.j_max = Some(j_max.unwrap_or_else(|| degrees.degrees().iter().sum()));
        t
    };
    if a.crosscheck {
        let j_max = a.jmax.unwrap_or(DEFAULT_J_MAX);
        let engine = grpcpt::engine_table(ty, j_max)?;
        let reference = closed(Some(j_max));
        let diff = reference.diff(&engine);
        let differences: Vec<Value> = diff
            .iter()
            .map(|&(i, j, c, e)| json!({"i": i, "j": j, "closed": c, "engine": e}))
            .collect();
        let source = Source::new("grpcpt").with("type", ty).with("mode", "crosscheck").with("jmax", j_max);
        emit_json(
            out,
            &json!({
                "schema": document::SCHEMA,
                "source": document::source_object(&source),
                "jmax": j_max,
                "differences": differences,
            }),
        )?;
        if diff.is_empty() {
            return Ok(EXIT_OK);
        }
        writeln!(err, "crosscheck failed: {} entries differ", diff.len())?;
        return Ok(EXIT_VIOLATION);
    }
    let (mode, mut table) = match a.mode {
        Mode::Closed => ("closed", closed(a.jmax)),
        Mode::Engine => ("engine", grpcpt::engine_table(ty, a.jmax.unwrap_or(DEFAULT_J_MAX))?),
    };
    let j_max = table.j_max.expect("set above");
    table.source = Source::new("grpcpt").with("type", ty).with("mode", mode).with("jmax", j_max);
    emit(out, &table, a.out, None)?;
    Ok(EXIT_OK)
}

fn engine_cmd(a: EngineArgs, out: &mut dyn Write) -> Result<i32> {
    let text = read(&a.presentation)?;
    let presentation = parse_presentation(&text)?;
    let algebra = GradedQuotientAlgebra::new(presentation, a.jmax);
    let mut table = koszul::tor_table(&algebra, a.jmax)?;
    let name = a.presentation.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    table.source = Source::new("engine").with("presentation", name).with("jmax", a.jmax);
    emit(out, &table, a.out, None)?;
    Ok(EXIT_OK)
}

fn toric_cmd(a: ToricArgs, out: &mut dyn Write) -> Result<i32> {
    let fan = toric::parse_fan(&read(&a.fan)?)?;
    let fan = ValidatedFan::new(fan)?;
    let removed: BTreeSet<usize> = a.remove.iter().copied().collect();
    let name = a.fan.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let removed_text: Vec<String> = removed.iter().map(usize::to_string).collect();
    let mut source = Source::new("toric").with("fan", name);
    if !removed.is_empty() {
        source = source.with("remove", removed_text.join(","));
    }
    let mut table = match a.codim {
        Some(k) => {
            source = source.with("codim", k);
            let mut t = BigradedTable::new(Source::default());
            t.set(k, k, toric::chow_dim(&fan, k, &removed)?);
            t
        }
        None => toric::chow_table(&fan, &removed)?,
    };
    table.source = source;
    table.j_max = Some(fan.dim());
    emit(out, &table, a.out, Some(toric::h_vector(&fan)))?;
    Ok(EXIT_OK)
}

fn bott_cmd(a: BottArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if a.broer {
        let k_max = a.kmax.expect("clap enforces --kmax");
        let report = bott::broer_check(a.n, a.kmin, k_max)?;
        let source = Source::new("bott").with("mode", "broer").with("n", a.n).with("kmin", a.kmin).with("kmax", k_max);
        emit_json(
            out,
            &json!({
                "schema": document::SCHEMA,
                "source": document::source_object(&source),
                "violations": report.violations,
                "negative_twist_loci": report.negative_twist_loci,
            }),
        )?;
        if report.passed() {
            return Ok(EXIT_OK);
        }
        writeln!(err, "{} strip violations", report.violations.len())?;
        return Ok(EXIT_VIOLATION);
    }
    let (j, k) = (a.j.expect("clap enforces --j"), a.twist.expect("clap enforces --twist"));
    let q = BottQuery::new(a.n, j, k)?;
    let mut table = BigradedTable::new(Source::new("bott").with("n", a.n).with("j", j).with("twist", k));
    for (i, d) in bott::bott_dims(q) {
        let d = usize::try_from(d).map_err(|_| Error::OutOfRange {
            what: "twist",
            value: k,
            range: "dimensions that fit in 64 bits".into(),
        })?;
        table.set(i, j, d);
    }
    table.j_max = Some(a.n);
    emit(out, &table, a.out, None)?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let table = TableDocument::parse(&read(&a.table)?)?.into_table()?;
    let violations = verify::strip_check(&table, StripParams::new(a.q, a.r));
    let name = a.table.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let source = Source::new("verify").with("table", name).with("q", a.q).with("r", a.r);
    emit_json(
        out,
        &json!({
            "schema": document::SCHEMA,
            "source": document::source_object(&source),
            "strip": {"q": a.q, "r": a.r},
            "checked": table.len(),
            "violations": violations,
        }),
    )?;
    if violations.is_empty() {
        return Ok(EXIT_OK);
    }
    writeln!(err, "{} entries outside the strip", violations.len())?;
    Ok(EXIT_VIOLATION)
}
