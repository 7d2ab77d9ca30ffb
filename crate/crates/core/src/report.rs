//! Export of comparison reports to JSON and CSV.
//!
//! Exports are byte-deterministic: identical reports render to identical
//! bytes. Means are rounded to three decimals; all other locations are
//! integers. The CSV layout is one `vertex_id,respecting,ignoring,diff` row
//! per vertex followed by a `# summary` trailer block.

use serde::Serialize;

use crate::analysis::{CardinalitySummary, ComparisonReport, DiffSummary};
use crate::graph::{TemporalHypergraph, VertexId};

#[derive(Serialize)]
struct SummaryDoc {
    mean: f64,
    median: u64,
    min: u64,
    max: u64,
}

impl SummaryDoc {
    fn new(s: &CardinalitySummary) -> Self {
        SummaryDoc {
            mean: round3(s.mean),
            median: s.median,
            min: s.min,
            max: s.max,
        }
    }
}

#[derive(Serialize)]
struct DiffSummaryDoc {
    mean: f64,
    median: u64,
    max: u64,
}

impl DiffSummaryDoc {
    fn new(s: &DiffSummary) -> Self {
        DiffSummaryDoc {
            mean: round3(s.mean),
            median: s.median,
            max: s.max,
        }
    }
}

#[derive(Serialize)]
struct RowDoc<'a> {
    vertex_id: &'a str,
    respecting: u32,
    ignoring: u32,
    diff: u32,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    time_unit: &'a str,
    vertex_count: usize,
    channel_count: usize,
    respecting_summary: SummaryDoc,
    ignoring_summary: SummaryDoc,
    diff_summary: DiffSummaryDoc,
    per_vertex: Vec<RowDoc<'a>>,
}

fn round3(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

fn rows<'a>(report: &ComparisonReport, graph: &'a TemporalHypergraph) -> Vec<RowDoc<'a>> {
    (0..report.respecting.per_vertex.len())
        .map(|v| RowDoc {
            vertex_id: graph.vertex_label(VertexId(v as u32)),
            respecting: report.respecting.per_vertex[v],
            ignoring: report.ignoring.per_vertex[v],
            diff: report.per_vertex_diff[v],
        })
        .collect()
}

/// Full report as a pretty-printed JSON document.
pub fn render_json(report: &ComparisonReport, graph: &TemporalHypergraph) -> String {
    let doc = ReportDoc {
        time_unit: graph.time_unit(),
        vertex_count: graph.vertex_count(),
        channel_count: graph.channel_count(),
        respecting_summary: SummaryDoc::new(&report.respecting.summary),
        ignoring_summary: SummaryDoc::new(&report.ignoring.summary),
        diff_summary: DiffSummaryDoc::new(&report.diff_summary),
        per_vertex: rows(report, graph),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serialization cannot fail");
    out.push('\n');
    out
}

/// Full report as CSV: `vertex_id,respecting,ignoring,diff` rows plus a
/// `# summary` trailer block.
pub fn render_csv(report: &ComparisonReport, graph: &TemporalHypergraph) -> String {
    let mut out = String::from("vertex_id,respecting,ignoring,diff\n");
    for row in rows(report, graph) {
        out.push_str(&csv_field(row.vertex_id));
        out.push_str(&format!(
            ",{},{},{}\n",
            row.respecting, row.ignoring, row.diff
        ));
    }
    out.push_str("# summary\n");
    let r = &report.respecting.summary;
    let i = &report.ignoring.summary;
    let d = &report.diff_summary;
    out.push_str(&format!(
        "# respecting,mean={:.3},median={},min={},max={}\n",
        r.mean, r.median, r.min, r.max
    ));
    out.push_str(&format!(
        "# ignoring,mean={:.3},median={},min={},max={}\n",
        i.mean, i.median, i.min, i.max
    ));
    out.push_str(&format!(
        "# diff,mean={:.3},median={},max={}\n",
        d.mean, d.median, d.max
    ));
    out
}

/// Compact one-line JSON with the summary locations of both models, for
/// printing to stdout alongside a file export.
pub fn summary_line(report: &ComparisonReport) -> String {
    #[derive(Serialize)]
    struct Line {
        respecting: SummaryDoc,
        ignoring: SummaryDoc,
        diff: DiffSummaryDoc,
    }
    serde_json::to_string(&Line {
        respecting: SummaryDoc::new(&report.respecting.summary),
        ignoring: SummaryDoc::new(&report.ignoring.summary),
        diff: DiffSummaryDoc::new(&report.diff_summary),
    })
    .expect("summary serialization cannot fail")
}

fn csv_field(value: &str) -> String {
    if value.contains(',') || value.contains('"') || value.contains('\n') {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}
