//! Rendering of a finished report.
//!
//! JSON output is canonical: the document serializes through ordered maps
//! and contains no timing data, so the same datum and suite selection
//! produce byte-identical output on every run. Wall-clock timings appear
//! only in the human-readable table.

use std::time::Duration;

use crate::config::Format;
use crate::document::{EntryReport, ReportDocument};
use crate::runner::SuiteTiming;

#[derive(Debug)]
pub struct RenderError(pub String);

impl std::fmt::Display for RenderError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for RenderError {}

pub fn render(
    document: &ReportDocument,
    timings: &[SuiteTiming],
    format: Format,
) -> Result<String, RenderError> {
    match format {
        Format::Json => render_json(document),
        Format::Csv => render_csv(document),
        Format::Table => Ok(render_table(document, timings)),
    }
}

pub fn render_json(document: &ReportDocument) -> Result<String, RenderError> {
    let mut text = serde_json::to_string_pretty(document)
        .map_err(|e| RenderError(format!("cannot serialize report: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// One row per suite entry: suite, item, status, detail.
fn render_csv(document: &ReportDocument) -> Result<String, RenderError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["suite", "item", "status", "detail"])
        .map_err(|e| RenderError(e.to_string()))?;
    for (suite, report) in &document.suites {
        for entry in &report.entries {
            writer
                .write_record([
                    suite.as_str(),
                    &item_label(entry),
                    &entry.status,
                    &detail_text(entry),
                ])
                .map_err(|e| RenderError(e.to_string()))?;
        }
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| RenderError(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| RenderError(e.to_string()))
}

fn item_label(entry: &EntryReport) -> String {
    if let Some(name) = &entry.name {
        return name.clone();
    }
    match (&entry.v, &entry.lam, &entry.mu) {
        (Some(v), Some(lam), _) => format!("v={} lam={}", join(v), join(lam)),
        (Some(v), None, _) => format!("v={}", join(v)),
        (_, _, Some(mu)) => format!("mu={}", join(mu)),
        _ => "-".to_string(),
    }
}

fn join(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Explicit detail when present, otherwise a compact digest of the
/// entry's main values.
fn detail_text(entry: &EntryReport) -> String {
    if let Some(detail) = &entry.detail {
        return detail.clone();
    }
    let mut parts = Vec::new();
    if let Some(poly) = &entry.shriek_stable {
        parts.push(format!("shriek={poly}"));
    }
    if let Some(star) = entry.star_stable {
        parts.push(format!("star={star}"));
    }
    if let Some(target) = &entry.target {
        parts.push(format!("target={} / {}", target.shriek, target.star));
    }
    if let Some(poly) = &entry.delta0 {
        parts.push(format!("delta0={poly}"));
    }
    if let Some(exp) = entry.min_exponent {
        parts.push(format!("min-exp={exp}"));
    }
    if let Some(obs) = entry.observed_threshold {
        parts.push(format!("observed={obs}"));
    }
    if let Some(apriori) = entry.apriori_threshold {
        parts.push(format!("apriori={apriori}"));
    }
    if let Some(matches) = entry.matches {
        parts.push(format!("matches={matches}"));
    }
    if let Some(summands) = entry.summands {
        parts.push(format!("summands={summands}"));
    }
    if let Some(dim) = entry.dimension {
        parts.push(format!("dim={dim}"));
    }
    parts.join(" ")
}

type Column = (&'static str, fn(&EntryReport) -> Option<String>);

/// Candidate table columns in display order; a suite shows a column only
/// when at least one of its entries populates it.
const COLUMNS: &[Column] = &[
    ("shriek", |e| e.shriek_stable.as_ref().map(|p| p.to_string())),
    ("thr", |e| e.shriek_threshold.map(|t| t.to_string())),
    ("star", |e| e.star_stable.map(|s| s.to_string())),
    ("star-thr", |e| e.star_threshold.map(|t| t.to_string())),
    ("target!", |e| {
        e.target.as_ref().map(|t| t.shriek.to_string())
    }),
    ("target*", |e| e.target.as_ref().map(|t| t.star.to_string())),
    ("delta0", |e| e.delta0.as_ref().map(|p| p.to_string())),
    ("min-exp", |e| e.min_exponent.map(|m| m.to_string())),
    ("pairing", |e| e.pairing_2rho.map(|p| p.to_string())),
    ("codim", |e| e.codim_global_model.map(|c| c.to_string())),
    ("codim-gr", |e| e.codim_grassmannian.map(|c| c.to_string())),
    ("observed", |e| e.observed_threshold.map(|t| t.to_string())),
    ("apriori", |e| e.apriori_threshold.map(|t| t.to_string())),
    ("within", |e| e.within_apriori.map(yes_no)),
    ("support", |e| e.character.as_ref().map(|c| c.len().to_string())),
    ("matches", |e| e.matches.map(yes_no)),
    ("summands", |e| e.summands.map(|s| s.to_string())),
    ("dim", |e| e.dimension.map(|d| d.to_string())),
    ("truncated", |e| e.truncated_window.map(yes_no)),
    ("detail", |e| e.detail.clone()),
];

fn yes_no(flag: bool) -> String {
    if flag { "yes" } else { "no" }.to_string()
}

fn render_table(document: &ReportDocument, timings: &[SuiteTiming]) -> String {
    let mut out = String::new();
    let datum = &document.datum;
    out.push_str(&format!(
        "datum {}: rank {}, {} positive roots, Weyl order {}\n",
        datum.label, datum.rank, datum.positive_roots, datum.weyl_order
    ));
    for (suite, report) in &document.suites {
        out.push('\n');
        let timing = timings
            .iter()
            .find(|t| t.suite == suite)
            .map(|t| format!(" ({})", format_duration(t.elapsed)))
            .unwrap_or_default();
        out.push_str(&format!("suite {suite}: {}{timing}\n", report.status));
        if report.entries.is_empty() {
            continue;
        }
        let active: Vec<&Column> = COLUMNS
            .iter()
            .filter(|(_, cell)| report.entries.iter().any(|e| cell(e).is_some()))
            .collect();
        let mut rows: Vec<Vec<String>> = Vec::with_capacity(report.entries.len() + 1);
        let mut header = vec!["item".to_string()];
        header.extend(active.iter().map(|(name, _)| name.to_string()));
        header.push("status".to_string());
        rows.push(header);
        for entry in &report.entries {
            let mut row = vec![item_label(entry)];
            row.extend(
                active
                    .iter()
                    .map(|(_, cell)| cell(entry).unwrap_or_else(|| "-".to_string())),
            );
            row.push(entry.status.clone());
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0))
            .collect();
        for row in &rows {
            out.push_str("  ");
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, width)| format!("{cell:<width$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
    }
    out
}

fn format_duration(elapsed: Duration) -> String {
    let secs = elapsed.as_secs_f64();
    if secs < 1.0 {
        format!("{:.1} ms", secs * 1_000.0)
    } else {
        format!("{secs:.2} s")
    }
}
