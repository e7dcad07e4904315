//! Human-readable rendering of the analysis documents.

use std::fmt::Write;

use crate::docs::{AnalysisDocument, OracleDocument, RefinedDocument};

fn pad_left(s: &str, width: usize) -> String {
    format!("{s:>width$}")
}

/// The per-edge table, sums, rotation values, and the refined loop.
pub fn render_analysis(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    match &doc.name {
        Some(name) => writeln!(out, "loop {name}: d = {}", doc.vertices.len()).unwrap(),
        None => writeln!(out, "loop: d = {}", doc.vertices.len()).unwrap(),
    }
    out.push('\n');
    out.push_str(&render_edge_table(doc));
    out.push('\n');
    writeln!(out, "signed term sum:  {}", doc.signed_term_sum).unwrap();
    writeln!(out, "sum of a:         {}", doc.a_sum).unwrap();
    writeln!(out, "sum of (x+y)/eps: {}", doc.xy_sum).unwrap();
    out.push('\n');
    writeln!(out, "rotation number:  {}", doc.rotation).unwrap();
    writeln!(out, "winding (exact):  {}", doc.oracle.winding_exact).unwrap();
    writeln!(
        out,
        "winding (float):  {:.6} -> {}",
        doc.oracle.float_value, doc.oracle.float_rounded
    )
    .unwrap();
    writeln!(out, "refined rotation: {}", doc.hm_on_refined).unwrap();
    out.push('\n');
    out.push_str(&render_refined_listing(&doc.refined));
    out
}

fn render_edge_table(doc: &AnalysisDocument) -> String {
    let headers = ["edge", "eps", "a", "x", "y", "l", "terms"];
    let rows: Vec<[String; 7]> = doc
        .edges
        .iter()
        .map(|e| {
            let terms = e
                .terms
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            [
                e.i.to_string(),
                e.eps.to_string(),
                e.a.to_string(),
                e.x.to_string(),
                e.y.to_string(),
                e.l.to_string(),
                terms,
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let header_line: Vec<String> = headers
        .iter()
        .zip(&widths)
        .map(|(h, w)| pad_left(h, *w))
        .collect();
    writeln!(out, "  {}", header_line.join(" | ")).unwrap();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| pad_left(c, *w))
            .collect();
        writeln!(out, "  {}", cells.join(" | ").trim_end()).unwrap();
    }
    out
}

fn render_refined_listing(refined: &RefinedDocument) -> String {
    let mut out = String::new();
    writeln!(out, "refined loop ({} vertices):", refined.vertices.len()).unwrap();
    for ((x, y), origin) in refined.vertices.iter().zip(&refined.origins) {
        writeln!(out, "  ({x}, {y})  [{origin}]").unwrap();
    }
    out
}

/// Plain-format refined loop with provenance comments; parseable back with
/// `--format plain`.
pub fn render_refined_plain(refined: &RefinedDocument) -> String {
    let mut out = String::new();
    match &refined.name {
        Some(name) => writeln!(out, "# {name}: {} vertices", refined.vertices.len()).unwrap(),
        None => writeln!(out, "# refined loop: {} vertices", refined.vertices.len()).unwrap(),
    }
    for ((x, y), origin) in refined.vertices.iter().zip(&refined.origins) {
        writeln!(out, "{x} {y}  # {origin}").unwrap();
    }
    out
}

pub fn render_oracle(oracle: &OracleDocument) -> String {
    let mut out = String::new();
    writeln!(out, "winding (exact): {}", oracle.winding_exact).unwrap();
    writeln!(
        out,
        "winding (float): {:.6} -> {}",
        oracle.float_value, oracle.float_rounded
    )
    .unwrap();
    out
}
