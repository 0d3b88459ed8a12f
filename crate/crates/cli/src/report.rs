//! Table and JSON-lines rendering of check reports.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use supercong_core::CheckReport;

use crate::sweep::Summary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Jsonl,
}

/// One JSON-lines record. Residues are decimal strings since they exceed
/// 32 bits at `p^4`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub p: u64,
    pub modulus: String,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
    pub ms: f64,
}

impl From<&CheckReport> for Record {
    fn from(r: &CheckReport) -> Self {
        Record {
            check: r.id.as_str().to_string(),
            p: r.param,
            modulus: r.modulus.clone().unwrap_or_default(),
            status: r.status.as_str().to_string(),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            ms: r.elapsed_ms,
        }
    }
}

pub fn write_jsonl<W: Write>(w: &mut W, reports: &[CheckReport]) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *w, &Record::from(r))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_table<W: Write>(w: &mut W, reports: &[CheckReport]) -> io::Result<()> {
    let id_w = reports.iter().map(|r| r.id.as_str().len()).max().unwrap_or(5).max(5);
    writeln!(w, "{:<id_w$}  {:>6}  {:<10}  {:<6}  {:>22}  {:>22}  {:>9}", "check", "p", "modulus", "status", "lhs", "rhs", "ms")?;
    for r in reports {
        write!(
            w,
            "{:<id_w$}  {:>6}  {:<10}  {:<6}  {:>22}  {:>22}  {:>9.3}",
            r.id.as_str(),
            r.param,
            r.modulus.as_deref().unwrap_or(""),
            r.status.as_str(),
            r.lhs,
            r.rhs,
            r.elapsed_ms
        )?;
        match &r.detail {
            Some(d) => writeln!(w, "  {d}")?,
            None => writeln!(w)?,
        }
    }
    Ok(())
}

pub fn write_summary<W: Write>(w: &mut W, s: &Summary) -> io::Result<()> {
    writeln!(w, "{} checks: {} pass, {} fail, {} skip", s.total(), s.pass, s.fail, s.skip)
}

pub fn write_reports<W: Write>(w: &mut W, reports: &[CheckReport], format: Format) -> io::Result<()> {
    match format {
        Format::Table => write_table(w, reports),
        Format::Jsonl => write_jsonl(w, reports),
    }
}
