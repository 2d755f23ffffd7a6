//! CSV, JSON, and text renderings of search reports.

use std::io::{self, Write};

use serde::Serialize;
use sml_core::search::SearchReport;

/// Decimal places for every real number the tools print.
pub const DECIMALS: usize = 12;

pub fn fmt_real(x: f64) -> String {
    format!("{x:.DECIMALS$}")
}

/// One report as a flat record; the field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub family: &'static str,
    pub params: String,
    pub max_lambda: String,
    pub argmax_g6: String,
    pub max_edges: usize,
    pub edge_argmax_g6: String,
    /// Empty when the parameters admit no construction at this `n`.
    pub construction_lambda: String,
    pub lambda_match: bool,
    pub bound_violations: usize,
    pub graphs_scanned: usize,
}

impl From<&SearchReport> for ReportRow {
    fn from(r: &SearchReport) -> Self {
        ReportRow {
            n: r.n,
            family: r.family.tag(),
            params: r.family.params(),
            max_lambda: fmt_real(r.max_lambda),
            argmax_g6: r.argmax_graph6.clone(),
            max_edges: r.max_edges,
            edge_argmax_g6: r.edge_argmax_graph6.clone(),
            construction_lambda: r.construction.as_ref().map(|c| fmt_real(c.lambda)).unwrap_or_default(),
            lambda_match: r.lambda_match,
            bound_violations: r.bound_violations,
            graphs_scanned: r.graphs_scanned,
        }
    }
}

pub fn write_csv<W: Write>(out: W, reports: &[SearchReport]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(ReportRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

/// JSON mirror of the CSV: an array of objects with the same fields.
pub fn write_json<W: Write>(mut out: W, reports: &[SearchReport]) -> io::Result<()> {
    let rows: Vec<ReportRow> = reports.iter().map(ReportRow::from).collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)
}

pub fn write_text<W: Write>(mut out: W, reports: &[SearchReport]) -> io::Result<()> {
    for r in reports {
        writeln!(out, "family        {} ({})", r.family, r.family.params())?;
        writeln!(out, "n             {}", r.n)?;
        writeln!(out, "scanned       {} graphs, {} in family", r.graphs_scanned, r.members)?;
        writeln!(out, "max lambda    {} at {}", fmt_real(r.max_lambda), r.argmax_graph6)?;
        writeln!(out, "max edges     {} at {}", r.max_edges, r.edge_argmax_graph6)?;
        match &r.construction {
            Some(c) => {
                let member = if c.member { "member" } else { "not a member" };
                writeln!(out, "construction  {} lambda {} edges {} ({member})", c.graph6, fmt_real(c.lambda), c.edges)?;
            }
            None => writeln!(out, "construction  none at this n")?,
        }
        writeln!(out, "lambda match  {}", if r.lambda_match { "yes" } else { "no" })?;
        if let Some(b) = r.lambda_bound {
            writeln!(out, "lambda bound  {} ({} violations)", fmt_real(b), r.bound_violations)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use sml_core::search::{search_enumerated, FamilySpec};

    #[test]
    fn csv_columns() {
        let r = search_enumerated(FamilySpec::KstMinorFree { s: 2, t: 2 }, 5).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &[r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,family,params,max_lambda,argmax_g6,max_edges,edge_argmax_g6,construction_lambda,lambda_match,bound_violations,graphs_scanned"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("5,kst,s=2;t=2,2.561552812809,"), "{row}");
        assert!(row.ends_with(",2.561552812809,true,0,34"), "{row}");
    }

    #[test]
    fn json_mirrors_csv_fields() {
        let r = search_enumerated(FamilySpec::KrMinorFree { r: 3 }, 4).unwrap();
        let mut buf = Vec::new();
        write_json(&mut buf, &[r]).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let obj = v[0].as_object().unwrap();
        assert_eq!(obj.len(), 11);
        assert_eq!(obj["max_edges"], 3);
        assert_eq!(obj["params"], "r=3");
    }
}
