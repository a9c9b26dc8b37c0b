//! Command-line driver: argument handling, rendering, and the table cache.

pub mod args;
pub mod cache;

use std::fmt::Write as _;
use std::io::Write;

use clap::Parser;
use serde::Serialize;
use serde_json::json;
use skewplane_core::{
    enumerate_fillings, enumerate_liftings, enumerate_skew_shapes, parse_filling, parse_shape,
    sweep_weight, table_oracle, verify, verify_lemma1, verify_models, CountTable, Error,
    Filling, MarkingModel, Side, Variant, VerifyOptions, VerifyReport,
};

use args::{Cli, Command, Format, Function, ModelArg, VariantArg, VerifyCommand};
use cache::{CacheKey, TableCache};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) | Error::WorkerPool(_) => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// What a command produced: its standard output and the exit code to report.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }

    fn checked(stdout: String, failures: u64) -> Self {
        Outcome {
            stdout,
            code: if failures == 0 { EXIT_OK } else { EXIT_MISMATCH },
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli, stderr) {
        Ok(outcome) => {
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return EXIT_INTERNAL;
            }
            outcome.code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Restricted => Variant::Restricted,
        VariantArg::Literal => Variant::Literal,
    }
}

fn side(f: Function) -> Side {
    match f {
        Function::Pg => Side::Above,
        Function::Ps => Side::Below,
    }
}

fn fname(f: Function) -> &'static str {
    match f {
        Function::Pg => "pg",
        Function::Ps => "ps",
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn execute(cli: &Cli, stderr: &mut dyn Write) -> Result<Outcome, Failure> {
    let workers = cli.workers.map_or(1, usize::from);
    let format = cli.format;
    match &cli.command {
        Command::Shapes {
            max_outer,
            min_cells,
            max_cells,
        } => {
            let max_cells = max_cells.unwrap_or(*max_outer);
            if min_cells > &max_cells {
                return Err(Failure::Input(format!(
                    "--min-cells {min_cells} exceeds --max-cells {max_cells}"
                )));
            }
            let shapes = enumerate_skew_shapes(*max_outer, *min_cells, max_cells);
            let names: Vec<String> = shapes.iter().map(|s| s.to_string()).collect();
            Ok(Outcome::ok(match format {
                Format::Text => {
                    let mut out = String::new();
                    for (name, s) in names.iter().zip(&shapes) {
                        writeln!(out, "{name}\t{}", s.cell_count())?;
                    }
                    writeln!(out, "# {} shapes", shapes.len())?;
                    out
                }
                Format::Json => to_json(&json!({
                    "max_outer": max_outer,
                    "min_cells": min_cells,
                    "max_cells": max_cells,
                    "count": shapes.len(),
                    "shapes": names,
                }))?,
                Format::Csv => {
                    let mut out = String::from("shape,cells\n");
                    for (name, s) in names.iter().zip(&shapes) {
                        writeln!(out, "{},{}", csv_field(name), s.cell_count())?;
                    }
                    out
                }
            }))
        }
        Command::Fillings {
            shape,
            weight,
            square_free_only,
            pretty,
        } => {
            let shape = parse_shape(shape)?;
            let fillings: Vec<Filling> = enumerate_fillings(&shape, *weight)
                .into_iter()
                .filter(|f| !square_free_only || f.is_square_free())
                .collect();
            Ok(Outcome::ok(match format {
                Format::Text => {
                    let mut out = String::new();
                    for f in &fillings {
                        if *pretty {
                            out.push_str(&grid(f));
                            out.push('\n');
                        } else {
                            writeln!(out, "{f}")?;
                        }
                    }
                    writeln!(out, "# {} fillings", fillings.len())?;
                    out
                }
                Format::Json => to_json(&json!({
                    "shape": shape.to_string(),
                    "weight": weight,
                    "square_free_only": square_free_only,
                    "count": fillings.len(),
                    "fillings": fillings.iter().map(|f| json!({
                        "filling": f.to_string(),
                        "square_free": f.is_square_free(),
                    })).collect::<Vec<_>>(),
                }))?,
                Format::Csv => {
                    let mut out = String::from("filling,square_free\n");
                    for f in &fillings {
                        writeln!(out, "{},{}", csv_field(&f.to_string()), f.is_square_free())?;
                    }
                    out
                }
            }))
        }
        Command::Stats { input, k } => {
            let shape = parse_shape(&input.shape)?;
            let filling = parse_filling(&shape, &input.filling)?;
            let stats = filling.stats(*k)?;
            let forced: Vec<u32> = filling.forced_values().into_iter().collect();
            let fields = [
                ("pivot", stats.pivot.to_string()),
                ("present", stats.present.to_string()),
                ("d_above", stats.d_above.to_string()),
                ("l_above", stats.l_above.to_string()),
                ("clean_below", stats.clean_below.to_string()),
                ("d_below", stats.d_below.to_string()),
                ("l_below", stats.l_below.to_string()),
                ("clean_above", stats.clean_above.to_string()),
            ];
            Ok(Outcome::ok(match format {
                Format::Text => {
                    let mut out = String::new();
                    for (name, value) in &fields {
                        writeln!(out, "{name}={value}")?;
                    }
                    writeln!(out, "forced={}", join(&forced))?;
                    out
                }
                Format::Json => to_json(&json!({
                    "shape": shape.to_string(),
                    "filling": filling.to_string(),
                    "stats": stats,
                    "forced": forced,
                }))?,
                Format::Csv => {
                    let header: Vec<&str> = fields.iter().map(|(n, _)| *n).collect();
                    let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
                    format!(
                        "{},forced\n{},{}\n",
                        header.join(","),
                        values.join(","),
                        csv_field(&join(&forced))
                    )
                }
            }))
        }
        Command::Liftings { input, model } => {
            let shape = parse_shape(&input.shape)?;
            let filling = parse_filling(&shape, &input.filling)?;
            let model = match model {
                ModelArg::Value => MarkingModel::Value,
                ModelArg::Occurrence => MarkingModel::Occurrence,
                ModelArg::Hybrid => MarkingModel::Hybrid,
            };
            let liftings = enumerate_liftings(&filling, model)?;
            let reconstruction = model == MarkingModel::Hybrid;
            let rendered: Vec<String> = liftings.iter().map(|l| l.to_string()).collect();
            Ok(Outcome::ok(match format {
                Format::Text => {
                    let mut out = String::new();
                    if reconstruction {
                        writeln!(
                            out,
                            "# model=hybrid is a reconstruction, not a literal reading of the overline rules"
                        )?;
                    }
                    for l in &rendered {
                        writeln!(out, "{l}")?;
                    }
                    writeln!(out, "# {} liftings (model={model})", rendered.len())?;
                    out
                }
                Format::Json => to_json(&json!({
                    "shape": shape.to_string(),
                    "filling": filling.to_string(),
                    "model": model,
                    "reconstruction": reconstruction,
                    "count": rendered.len(),
                    "liftings": rendered,
                }))?,
                Format::Csv => {
                    let mut out = String::from("model,reconstruction,lifting\n");
                    for l in &rendered {
                        writeln!(out, "{model},{reconstruction},{}", csv_field(l))?;
                    }
                    out
                }
            }))
        }
        Command::Count {
            function,
            point,
            m,
            variant: v,
        } => {
            let sweep = sweep_weight(point.n, workers)?;
            let count = sweep.count(side(*function), point.k, *m, variant(*v));
            Ok(Outcome::ok(match format {
                Format::Text => format!("{count}\n"),
                Format::Json => to_json(&json!({
                    "function": fname(*function),
                    "n": point.n,
                    "k": point.k,
                    "m": m,
                    "variant": variant(*v),
                    "count": count.to_string(),
                }))?,
                Format::Csv => format!(
                    "function,n,k,m,variant,count\n{},{},{},{},{},{count}\n",
                    fname(*function),
                    point.n,
                    point.k,
                    m,
                    variant(*v)
                ),
            }))
        }
        Command::Table {
            function,
            point,
            oracle,
        } => {
            let table = if *oracle {
                table_oracle(point.n, point.k, side(*function))?
            } else {
                cached_table(cli, side(*function), point.n, point.k, workers, stderr)?
            };
            Ok(Outcome::ok(render_table(&table, fname(*function), format)?))
        }
        Command::Verify(cmd) => verify_command(cmd, format, workers),
    }
}

fn cached_table(
    cli: &Cli,
    side: Side,
    n: u32,
    k: u32,
    workers: usize,
    stderr: &mut dyn Write,
) -> Result<CountTable, Failure> {
    let cache = cli.cache_dir.as_ref().map(TableCache::new);
    let key = CacheKey { n, k, side };
    if let Some(hit) = cache.as_ref().and_then(|c| c.lookup(key)) {
        return Ok(hit);
    }
    let table = sweep_weight(n, workers)?.table(side, k);
    if let Some(cache) = &cache {
        if let Err(e) = cache.store(&table) {
            let _ = writeln!(
                stderr,
                "warning: cache directory {} is not writable ({e}); continuing uncached",
                cache.dir().display()
            );
        }
    }
    Ok(table)
}

fn render_table(table: &CountTable, function: &str, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "# {} n={} k={} side={}",
                function.to_uppercase(),
                table.n,
                table.k,
                table.side
            )?;
            for ((j, l), c) in table.entries() {
                writeln!(out, "j={j} l={l} count={c}")?;
            }
            out
        }
        Format::Json => to_json(table)?,
        Format::Csv => {
            let mut out = String::from("n,k,side,j,l,count\n");
            for ((j, l), c) in table.entries() {
                writeln!(out, "{},{},{},{j},{l},{c}", table.n, table.k, table.side)?;
            }
            out
        }
    })
}

fn verify_command(cmd: &VerifyCommand, format: Format, workers: usize) -> Result<Outcome, Failure> {
    match cmd {
        VerifyCommand::Theorem1(a) | VerifyCommand::Theorem2(a) => {
            let (name, side) = match cmd {
                VerifyCommand::Theorem1(_) => ("theorem1", Side::Above),
                _ => ("theorem2", Side::Below),
            };
            let opts = VerifyOptions {
                workers,
                fail_fast: a.fail_fast,
            };
            let report = verify(side, a.max_n, variant(a.variant), opts)?;
            let failures = report.mismatch_count as u64;
            Ok(Outcome::checked(render_report(&report, name, format)?, failures))
        }
        VerifyCommand::Lemma1 { max } => {
            let report = verify_lemma1(*max)?;
            let out = match format {
                Format::Text => {
                    let mut out = String::new();
                    for r in report.rows.iter().filter(|r| !r.matches) {
                        writeln!(out, "MISMATCH D={} R={} value={}", r.d, r.r, r.value)?;
                    }
                    writeln!(
                        out,
                        "lemma1 max={}: {} pairs, {} mismatches",
                        report.max,
                        report.rows.len(),
                        report.mismatch_count
                    )?;
                    out
                }
                Format::Json => to_json(&report)?,
                Format::Csv => {
                    let mut out = String::from("d,r,value,expected,match\n");
                    for r in &report.rows {
                        writeln!(out, "{},{},{},{},{}", r.d, r.r, r.value, r.expected, r.matches)?;
                    }
                    out
                }
            };
            Ok(Outcome::checked(out, report.mismatch_count as u64))
        }
        VerifyCommand::Models { max_n } => {
            let report = verify_models(*max_n);
            let out = match format {
                Format::Text => {
                    let mut out = String::new();
                    writeln!(out, "max_n={}", report.max_n)?;
                    writeln!(out, "fillings={}", report.fillings)?;
                    writeln!(out, "square_free={}", report.square_free)?;
                    writeln!(out, "with_square={}", report.with_square)?;
                    writeln!(out, "value_mismatches={}", report.value_mismatches)?;
                    writeln!(out, "occurrence_mismatches={}", report.occurrence_mismatches)?;
                    writeln!(out, "nesting_violations={}", report.nesting_violations)?;
                    writeln!(out, "square_violations={}", report.square_violations)?;
                    for e in &report.examples {
                        writeln!(out, "# {e}")?;
                    }
                    out
                }
                Format::Json => to_json(&report)?,
                Format::Csv => format!(
                    "max_n,fillings,square_free,with_square,value_mismatches,occurrence_mismatches,nesting_violations,square_violations\n{},{},{},{},{},{},{},{}\n",
                    report.max_n,
                    report.fillings,
                    report.square_free,
                    report.with_square,
                    report.value_mismatches,
                    report.occurrence_mismatches,
                    report.nesting_violations,
                    report.square_violations
                ),
            };
            Ok(Outcome::checked(out, report.failures()))
        }
    }
}

fn render_report(report: &VerifyReport, name: &str, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for r in &report.rows {
                writeln!(
                    out,
                    "n={} k={} m={} lhs={} rhs={} {}",
                    r.n,
                    r.k,
                    r.m,
                    r.lhs,
                    r.rhs,
                    if r.matches { "ok" } else { "MISMATCH" }
                )?;
            }
            writeln!(
                out,
                "{name} {} max_n={}: {} rows, {} mismatches",
                report.variant,
                report.max_n,
                report.rows.len(),
                report.mismatch_count
            )?;
            out
        }
        Format::Json => to_json(report)?,
        Format::Csv => {
            let mut out = String::from("n,k,m,lhs,rhs,match\n");
            for r in &report.rows {
                writeln!(out, "{},{},{},{},{},{}", r.n, r.k, r.m, r.lhs, r.rhs, r.matches)?;
            }
            out
        }
    })
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Space-padded grid; cells outside the shape are blank.
fn grid(filling: &Filling) -> String {
    let shape = filling.shape();
    let width = filling
        .values()
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let cols = shape.outer().part(0);
    let mut lines = Vec::new();
    for row in 1..=shape.rows() as u32 {
        let line: Vec<String> = (1..=cols)
            .map(|col| match filling.value_at(row, col) {
                Some(v) => format!("{v:>width$}"),
                None => " ".repeat(width),
            })
            .collect();
        lines.push(line.join(" ").trim_end().to_string());
    }
    lines.join("\n") + "\n"
}
