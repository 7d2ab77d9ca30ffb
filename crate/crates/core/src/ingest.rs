//! Channel event-log ingestion.
//!
//! Two line-oriented formats carry the same record shape:
//!
//! * JSONL — one object per line with keys `id`, `participants`,
//!   `opened_at`, `closed_at`;
//! * CSV — header `id,participants,opened_at,closed_at`, participants as
//!   `|`-separated labels (labels therefore must not contain `|`).
//!
//! Timestamps are integers; the meaning of one tick is declared out of band
//! (CLI flag or sidecar config), never inside the file. Parse errors carry
//! 1-based line numbers.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::ChannelDef;
use crate::time::{Duration, TimeStamp, TimeWindow};

/// One channel event: a code-review-style communication record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelRecord {
    #[serde(rename = "id")]
    pub external_id: String,
    pub participants: Vec<String>,
    pub opened_at: i64,
    pub closed_at: i64,
}

impl ChannelRecord {
    /// Conversion into the graph-builder input; file records carry no
    /// latency, so it defaults to zero.
    pub fn to_def(&self) -> ChannelDef {
        ChannelDef {
            external_id: self.external_id.clone(),
            participants: self.participants.clone(),
            open: TimeStamp(self.opened_at),
            close: TimeStamp(self.closed_at),
            latency: Duration(0),
        }
    }
}

/// Convenience mapping for a whole batch.
pub fn records_to_defs(records: &[ChannelRecord]) -> Vec<ChannelDef> {
    records.iter().map(ChannelRecord::to_def).collect()
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {reason}")]
    ParseError { line: u64, reason: String },
    #[error("line {line}: invalid record: {reason}")]
    InvalidRecord { line: u64, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl IngestError {
    pub fn line(&self) -> Option<u64> {
        match self {
            IngestError::ParseError { line, .. } | IngestError::InvalidRecord { line, .. } => {
                Some(*line)
            }
            IngestError::Io(_) => None,
        }
    }
}

/// Validates interval order, de-duplicates participants (first occurrence
/// wins), and rejects records without participants.
fn validate(mut record: ChannelRecord, line: u64) -> Result<ChannelRecord, IngestError> {
    if record.opened_at > record.closed_at {
        return Err(IngestError::InvalidRecord {
            line,
            reason: format!(
                "opened_at {} is after closed_at {}",
                record.opened_at, record.closed_at
            ),
        });
    }
    let mut seen = HashSet::new();
    record.participants.retain(|p| seen.insert(p.clone()));
    if record.participants.is_empty() {
        return Err(IngestError::InvalidRecord {
            line,
            reason: "no participants".to_string(),
        });
    }
    Ok(record)
}

/// Parses a JSONL stream. Record order is preserved.
pub fn parse_jsonl(reader: impl BufRead) -> Result<Vec<ChannelRecord>, IngestError> {
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i as u64 + 1;
        let text = line?;
        let record: ChannelRecord =
            serde_json::from_str(&text).map_err(|e| IngestError::ParseError {
                line: line_no,
                reason: e.to_string(),
            })?;
        records.push(validate(record, line_no)?);
    }
    Ok(records)
}

const CSV_HEADER: [&str; 4] = ["id", "participants", "opened_at", "closed_at"];

/// Parses a CSV stream with the fixed header
/// `id,participants,opened_at,closed_at`.
pub fn parse_csv(reader: impl std::io::Read) -> Result<Vec<ChannelRecord>, IngestError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);

    let headers = csv_reader.headers().map_err(|e| csv_error(e, 1))?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(IngestError::ParseError {
            line: 1,
            reason: format!(
                "expected header {:?}, found {:?}",
                CSV_HEADER.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut records = Vec::new();
    for row in csv_reader.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, csv::Position::line);
            csv_error(e, line)
        })?;
        let line = row.position().map_or(0, csv::Position::line);
        if row.len() != 4 {
            return Err(IngestError::ParseError {
                line,
                reason: format!("expected 4 columns, found {}", row.len()),
            });
        }
        let parse_ts = |field: &str, name: &str| {
            field.parse::<i64>().map_err(|_| IngestError::ParseError {
                line,
                reason: format!("{name} is not an integer timestamp: {field:?}"),
            })
        };
        let record = ChannelRecord {
            external_id: row[0].to_string(),
            participants: row[1]
                .split('|')
                .filter(|p| !p.is_empty())
                .map(str::to_string)
                .collect(),
            opened_at: parse_ts(&row[2], "opened_at")?,
            closed_at: parse_ts(&row[3], "closed_at")?,
        };
        records.push(validate(record, line)?);
    }
    Ok(records)
}

fn csv_error(e: csv::Error, line: u64) -> IngestError {
    IngestError::ParseError {
        line,
        reason: e.to_string(),
    }
}

/// Applies the observation window and participant filters:
///
/// * records wholly outside the window are dropped (straddlers are kept
///   whole);
/// * deny-listed participants are removed from each record;
/// * records left with fewer than `min_participants` participants are
///   dropped (empty records always are).
///
/// Record order is preserved and the operation is idempotent.
pub fn apply_window(
    records: &[ChannelRecord],
    window: TimeWindow,
    deny_list: Option<&HashSet<String>>,
    min_participants: usize,
) -> Vec<ChannelRecord> {
    let floor = min_participants.max(1);
    records
        .iter()
        .filter(|r| window.overlaps(TimeStamp(r.opened_at), TimeStamp(r.closed_at)))
        .filter_map(|r| {
            let mut record = r.clone();
            if let Some(deny) = deny_list {
                record.participants.retain(|p| !deny.contains(p));
            }
            (record.participants.len() >= floor).then_some(record)
        })
        .collect()
}

/// Writes records as JSONL, one compact object per line.
pub fn write_jsonl(records: &[ChannelRecord], mut writer: impl Write) -> std::io::Result<()> {
    for record in records {
        serde_json::to_writer(&mut writer, record)?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// Writes records as CSV with the fixed header.
pub fn write_csv(records: &[ChannelRecord], writer: impl Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(CSV_HEADER)?;
    for record in records {
        w.write_record([
            record.external_id.as_str(),
            &record.participants.join("|"),
            &record.opened_at.to_string(),
            &record.closed_at.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
