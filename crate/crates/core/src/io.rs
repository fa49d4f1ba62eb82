//! JSON Lines pair files.
//!
//! One object per line: `{"id": "...", "candidate": [[x, y], ...], "reference": [[x, y], ...]}`.
//! Blank lines are skipped; line numbers in errors are 1-based physical lines.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::trajectory::{Point, Trajectory};

/// One candidate/reference pair to be scored.
#[derive(Debug, Clone, PartialEq)]
pub struct PairRecord {
    pub id: String,
    pub candidate: Trajectory,
    pub reference: Trajectory,
}

pub fn parse_pairs<R: BufRead>(reader: R) -> Result<Vec<PairRecord>> {
    let mut records = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = parse_line(&line, line_no)?;
        if let Some(&first) = seen.get(&record.id) {
            return Err(Error::DuplicateId {
                id: record.id,
                line: line_no,
                first,
            });
        }
        seen.insert(record.id.clone(), line_no);
        records.push(record);
    }
    Ok(records)
}

/// Parses a whole in-memory document.
pub fn parse_pairs_str(text: &str) -> Result<Vec<PairRecord>> {
    parse_pairs(text.as_bytes())
}

fn parse_line(line: &str, line_no: usize) -> Result<PairRecord> {
    let parse_err = |field: &str, message: String| Error::Parse {
        line: line_no,
        field: field.to_string(),
        message,
    };

    let value: Value =
        serde_json::from_str(line).map_err(|e| parse_err("<record>", e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(parse_err("<record>", "expected a JSON object".into()));
    };

    let id = match obj.get("id") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(parse_err("id", "expected a string".into())),
        None => return Err(parse_err("id", "missing field".into())),
    };

    let candidate = parse_trajectory(obj.get("candidate"), "candidate", line_no)?;
    let reference = parse_trajectory(obj.get("reference"), "reference", line_no)?;

    Ok(PairRecord {
        id,
        candidate,
        reference,
    })
}

fn parse_trajectory(value: Option<&Value>, field: &str, line_no: usize) -> Result<Trajectory> {
    let parse_err = |message: String| Error::Parse {
        line: line_no,
        field: field.to_string(),
        message,
    };

    let items = match value {
        Some(Value::Array(items)) => items,
        Some(_) => return Err(parse_err("expected an array of [x, y] pairs".into())),
        None => return Err(parse_err("missing field".into())),
    };
    if items.is_empty() {
        return Err(Error::EmptyTrajectory {
            line: line_no,
            field: field.to_string(),
        });
    }

    let mut points = Vec::with_capacity(items.len());
    for (index, item) in items.iter().enumerate() {
        let coords = match item {
            Value::Array(c) if c.len() == 2 => c,
            _ => return Err(parse_err(format!("point {index} is not an [x, y] pair"))),
        };
        let (Some(x), Some(y)) = (coords[0].as_f64(), coords[1].as_f64()) else {
            return Err(parse_err(format!(
                "point {index} has non-numeric coordinates"
            )));
        };
        let point = Point::new(x, y).map_err(|_| Error::NonFinite {
            line: line_no,
            field: field.to_string(),
            index,
        })?;
        points.push(point);
    }
    Ok(Trajectory::new(points).expect("checked non-empty"))
}

/// Writes records in the same line format [`parse_pairs`] reads.
pub fn write_pairs<W: Write>(mut writer: W, records: &[PairRecord]) -> Result<()> {
    for r in records {
        let value = serde_json::json!({
            "id": r.id,
            "candidate": r.candidate.points(),
            "reference": r.reference.points(),
        });
        serde_json::to_writer(&mut writer, &value).map_err(std::io::Error::from)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}
