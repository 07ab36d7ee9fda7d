//! Rendering of orbit tables and verification reports as markdown, CSV
//! (RFC 4180, header row) or JSON.

use serde::Serialize;

use crate::integral_roots::{integral_count, lambda_q};
use crate::orbits::{case_for, exceptional_table, orbit_q_classical, CaseTag};
use crate::partitions::ClassicalFamily;
use crate::report::VerificationReport;
use crate::rootsys::{CartanType, RootSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Io(format!("unknown format `{}`", other))),
        }
    }
}

/// A rendered table: a title and rows of (q, orbit, dim, n_integral).
#[derive(Debug, Clone, Serialize)]
pub struct TableView {
    pub title: String,
    pub rows: Vec<TableRowView>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRowView {
    pub q: String,
    pub orbit: String,
    pub dim: i64,
    /// `None` when the family has no root system in bounds (so_6, sp_2).
    pub n_integral: Option<i64>,
}

impl TableRowView {
    fn n_integral_text(&self) -> String {
        match self.n_integral {
            Some(v) => v.to_string(),
            None => "-".to_string(),
        }
    }
}

/// The orbit table of an exceptional type, with the q column exactly as in
/// the bundled data (parenthesized values included).
pub fn exceptional_table_view(ct: CartanType, case: CaseTag) -> Result<TableView> {
    let rows = exceptional_table(ct, case)?;
    let case_name = match case {
        CaseTag::Coprincipal => "coprincipal",
        _ => "principal",
    };
    Ok(TableView {
        title: format!("Data for {}, {} case", ct, case_name),
        rows: rows
            .iter()
            .map(|r| TableRowView {
                q: r.q_label.clone(),
                orbit: r.label.clone(),
                dim: r.dim,
                n_integral: Some(r.n_integral),
            })
            .collect(),
    })
}

/// Orbit table of a classical family over a q-range, one row per q.
pub fn classical_table_view(
    family: ClassicalFamily,
    q_lo: u64,
    q_hi: u64,
) -> Result<TableView> {
    let rs = family.cartan_type().map(RootSystem::build);
    let mut rows = Vec::new();
    for q in q_lo.max(1)..=q_hi {
        let case = case_for(family.lacing(), q);
        let orbit = orbit_q_classical(family, q, case)?;
        let n_integral = match &rs {
            Some(rs) => {
                let lq = lambda_q(rs, q, case)?;
                Some(integral_count(rs, &lq)?)
            }
            None => None,
        };
        rows.push(TableRowView {
            q: q.to_string(),
            orbit: orbit.label.to_string(),
            dim: orbit.dim,
            n_integral,
        });
    }
    Ok(TableView {
        title: format!("Data for {}", family),
        rows,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_table(view: &TableView, format: Format) -> String {
    match format {
        Format::Markdown => {
            let mut out = String::new();
            out.push_str(&format!("# {}\n\n", view.title));
            out.push_str("| q | orbit | dim | n_integral |\n");
            out.push_str("|---|-------|-----|------------|\n");
            for r in &view.rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    r.q, r.orbit, r.dim, r.n_integral_text()
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("q,orbit,dim,n_integral\r\n");
            for r in &view.rows {
                out.push_str(&format!(
                    "{},{},{},{}\r\n",
                    csv_field(&r.q),
                    csv_field(&r.orbit),
                    r.dim,
                    r.n_integral_text()
                ));
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(view).expect("table serializes"),
    }
}

pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut out = String::from(
                "cartan_type,q,case,orbit,dim_orbit,n_integral,var_dim,checks,status\r\n",
            );
            for r in &report.records {
                let checks: Vec<String> = r
                    .checks
                    .iter()
                    .map(|(k, v)| format!("{}={}", k, if *v { "ok" } else { "FAIL" }))
                    .collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\r\n",
                    csv_field(&r.cartan_type),
                    r.q,
                    r.case,
                    csv_field(&r.orbit),
                    r.dim_orbit,
                    r.n_integral,
                    r.var_dim,
                    csv_field(&checks.join(";")),
                    if r.passed() { "pass" } else { "FAIL" }
                ));
            }
            out
        }
        Format::Markdown => {
            let mut out = String::new();
            out.push_str("| type | q | case | orbit | dim | n_integral | var_dim | status |\n");
            out.push_str("|------|---|------|-------|-----|------------|---------|--------|\n");
            for r in &report.records {
                let status = if r.passed() {
                    "pass".to_string()
                } else {
                    let failed: Vec<&str> = r
                        .checks
                        .iter()
                        .filter(|(_, v)| !**v)
                        .map(|(k, _)| k.as_str())
                        .collect();
                    if r.var_dim != r.dim_orbit {
                        format!("FAIL (identity; {})", failed.join(","))
                    } else {
                        format!("FAIL ({})", failed.join(","))
                    }
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    r.cartan_type,
                    r.q,
                    r.case,
                    r.orbit,
                    r.dim_orbit,
                    r.n_integral,
                    r.var_dim,
                    status
                ));
            }
            out.push_str(&format!(
                "\n{}/{} records passed\n",
                report.summary.passed, report.summary.total
            ));
            out
        }
    }
}
