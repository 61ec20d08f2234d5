//! Command-line front end for `fusion2s-core`.
//!
//! Exit codes: 0 success or PASS, 1 FAIL, 2 input error, 3 size or capability error.

pub mod render;
pub mod scan;
pub mod spec;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fusion2s_core::groups::DEFAULT_MAX_GROUP_SIZE;
use fusion2s_core::modcats::schur_classes;
use fusion2s_core::smatrix::{
    char_table_of_group, st_matrix_direct, st_matrix_via_center, verify_theorem,
    verify_theorem_bicharacter,
};
use fusion2s_core::{Error, FiniteAbelianGroup, QuadraticForm, Result, TheoremReport, Verdict};
use rayon::prelude::*;

use crate::render::{
    matrix_table, render_report, report_table, CharTableDoc, ClassifyDoc, MugerDoc, ScanLine,
    LEGEND,
};
use crate::spec::{Category, CategorySpec};

pub const MAX_GROUP_ENV: &str = "FUSION2S_MAX_GROUP";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "fusion2s", version, about = "S̃-matrices of braided pointed fusion categories")]
pub struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a category document and print it normalized.
    Validate { input: PathBuf },
    /// Müger center and its Tannakian flavor.
    Muger { input: PathBuf },
    /// Schur classes of braided module categories.
    Classify { input: PathBuf },
    /// The S̃-matrix.
    Stmatrix {
        input: PathBuf,
        /// Compute through the Drinfeld center instead.
        #[arg(long)]
        via_center: bool,
    },
    /// Character table of Z_{n1} × … × Z_{nk}.
    Chartable {
        #[arg(required = true)]
        orders: Vec<u32>,
    },
    /// Compare S̃ with the character table of the Müger center.
    Verify {
        input: PathBuf,
        /// Also cross-check against the Drinfeld center route.
        #[arg(long)]
        with_oracle: bool,
    },
    /// Certify every quadratic form on every abelian group up to a size.
    Scan {
        #[arg(long)]
        max_size: usize,
        /// Write report lines here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Include the center route wherever the form lifts to a bicharacter.
        #[arg(long)]
        with_oracle: bool,
    },
}

/// Stable exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::WellDefinedness(_) | Error::Quadraticity(_) | Error::Bilinearity(_) => 2,
        Error::Size { .. } | Error::OracleUnavailable(_) => 3,
        Error::Existence(_) | Error::CrossCheck(_) | Error::InvariantViolation(_) => 1,
    }
}

/// Group-size cap from the environment, or the default.
pub fn size_cap() -> Result<usize> {
    match std::env::var(MAX_GROUP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{MAX_GROUP_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_GROUP_SIZE),
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
                return 2;
            }
            return 0;
        }
    };
    let result = size_cap().and_then(|cap| dispatch(&cli, cap, out, err));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {}: {e}", path.display())))
    }
}

fn load(path: &PathBuf, cap: usize) -> Result<Category> {
    CategorySpec::parse(&read_input(path)?)?.build(cap)
}

fn io(e: std::io::Error) -> Error {
    Error::Input(format!("write failed: {e}"))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

fn dispatch(cli: &Cli, cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let table = cli.format == Format::Table;
    match &cli.command {
        Command::Validate { input } => {
            let cat = load(input, cap)?;
            let doc = json(&cat.normalized());
            if table {
                writeln!(out, "valid: {}", cat.form).map_err(io)?;
            }
            writeln!(out, "{doc}").map_err(io)?;
        }
        Command::Muger { input } => {
            let cat = load(input, cap)?;
            let doc = MugerDoc::new(cat.form.group().orders(), &cat.form.classify()?);
            let text = if table { doc.table() } else { json(&doc) + "\n" };
            write!(out, "{text}").map_err(io)?;
        }
        Command::Classify { input } => {
            let cat = load(input, cap)?;
            let classes = schur_classes(&cat.form)?;
            let doc = ClassifyDoc::new(&cat.form.classify()?, &classes);
            let text = if table { doc.table() } else { json(&doc) + "\n" };
            write!(out, "{text}").map_err(io)?;
        }
        Command::Stmatrix { input, via_center } => {
            let cat = load(input, cap)?;
            let m = if *via_center {
                st_matrix_via_center(&cat.oracle_bicharacter()?)?
            } else {
                st_matrix_direct(&cat.form)?
            };
            if table {
                writeln!(out, "{}{LEGEND}", matrix_table(&m)).map_err(io)?;
            } else {
                writeln!(out, "{}", json(&m)).map_err(io)?;
            }
        }
        Command::Chartable { orders } => {
            let group = FiniteAbelianGroup::with_cap(orders.clone(), cap)?;
            let doc = CharTableDoc::new(&char_table_of_group(&group)?);
            if table {
                writeln!(out, "{}{LEGEND}", matrix_table(&doc.table)).map_err(io)?;
            } else {
                writeln!(out, "{}", json(&doc)).map_err(io)?;
            }
        }
        Command::Verify { input, with_oracle } => {
            let cat = load(input, cap)?;
            let report = verify(&cat, *with_oracle)?;
            if table {
                write!(out, "{}", report_table(&report)).map_err(io)?;
            } else {
                writeln!(out, "{}", render_report(&report)).map_err(io)?;
            }
            if report.verdict == Verdict::Fail {
                writeln!(err, "FAIL: S̃ does not match the character table of the Müger center")
                    .map_err(io)?;
                write!(err, "{}", report_table(&report)).map_err(io)?;
                return Ok(1);
            }
        }
        Command::Scan {
            max_size,
            output,
            with_oracle,
        } => return scan_command(*max_size, output.as_ref(), *with_oracle, cap, out, err),
    }
    Ok(0)
}

fn verify(cat: &Category, with_oracle: bool) -> Result<TheoremReport> {
    match (&cat.bicharacter, with_oracle) {
        (Some(beta), true) => verify_theorem_bicharacter(beta),
        _ => verify_theorem(&cat.form, with_oracle),
    }
}

/// Certifies one scan instance.
pub fn scan_instance(q: &QuadraticForm, with_oracle: bool) -> Result<ScanLine> {
    let oracle = with_oracle && q.bicharacter_lift().is_some();
    let report = verify_theorem(q, oracle)?;
    Ok(ScanLine {
        spec: q.clone().into(),
        radical_order: report.radical.len(),
        flavor: report.flavor,
        schur_classes: schur_classes(q)?.len(),
        oracle,
        verdict: report.verdict,
    })
}

/// All scan instances for groups of order at most `max_size`, in scan order.
pub fn scan_forms(max_size: usize, cap: usize) -> Result<Vec<QuadraticForm>> {
    if max_size > cap {
        return Err(Error::Size {
            size: max_size as u128,
            cap,
        });
    }
    let mut forms = Vec::new();
    for orders in scan::abelian_groups(max_size) {
        forms.extend(scan::forms_on(&FiniteAbelianGroup::with_cap(orders, cap)?)?);
    }
    Ok(forms)
}

fn scan_command(
    max_size: usize,
    output: Option<&PathBuf>,
    with_oracle: bool,
    cap: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let forms = scan_forms(max_size, cap)?;
    let lines: Vec<ScanLine> = forms
        .par_iter()
        .map(|q| scan_instance(q, with_oracle))
        .collect::<Result<_>>()?;
    let mut text = String::new();
    for line in &lines {
        text.push_str(&serde_json::to_string(line).expect("scan lines serialize"));
        text.push('\n');
    }
    match output {
        Some(path) => fs::write(path, &text)
            .map_err(|e| Error::Input(format!("writing {}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes()).map_err(io)?,
    }
    let failed: Vec<&ScanLine> = lines.iter().filter(|l| l.verdict == Verdict::Fail).collect();
    for line in &failed {
        writeln!(err, "FAIL: {}", serde_json::to_string(&line.spec).expect("specs serialize"))
            .map_err(io)?;
    }
    writeln!(
        err,
        "scanned {} instances, {} failed",
        lines.len(),
        failed.len()
    )
    .map_err(io)?;
    Ok(if failed.is_empty() { 0 } else { 1 })
}
