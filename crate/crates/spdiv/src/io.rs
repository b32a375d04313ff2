//! Point-set ingestion and output formatting.
//!
//! Two input formats are accepted everywhere: CSV (one point per row, comma
//! separator, '.' decimal, optional header auto-detected by a non-numeric
//! first row) and JSON (an array of arrays, an array of numbers, or an
//! object carrying a `coordinates` or `points` field, so solver output can
//! be fed straight back in).

use std::fs;
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};

/// Parse rows of numbers, auto-detecting JSON (first non-space byte `[` or
/// `{`) versus CSV.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    match text.trim_start().chars().next() {
        Some('[') | Some('{') => parse_json(text),
        _ => parse_csv(text),
    }
}

/// Read and parse a file; the format is detected from the content.
pub fn read_rows(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path)?;
    parse_rows(&text)
}

/// CSV rows of f64 values. Row and column numbers in errors are 1-based and
/// refer to the original file, including any skipped header.
pub fn parse_csv(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    let mut first_data_row = true;
    for (line_index, line) in text.lines().enumerate() {
        let row_number = line_index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let cells: Vec<&str> = trimmed.split(',').collect();
        let mut parsed = Vec::with_capacity(cells.len());
        let mut failed_at = None;
        for (column_index, cell) in cells.iter().enumerate() {
            match cell.trim().parse::<f64>() {
                Ok(value) if value.is_finite() => parsed.push(value),
                _ => {
                    failed_at = Some(column_index + 1);
                    break;
                }
            }
        }
        if let Some(column) = failed_at {
            if first_data_row {
                // Non-numeric first row: header, skip it.
                first_data_row = false;
                continue;
            }
            return Err(Error::Parse {
                row: row_number,
                column,
                message: format!(
                    "'{}' is not a finite number",
                    cells[column - 1].trim()
                ),
            });
        }
        first_data_row = false;
        match width {
            None => width = Some(parsed.len()),
            Some(expected) if expected != parsed.len() => {
                return Err(Error::Parse {
                    row: row_number,
                    column: parsed.len().min(expected) + 1,
                    message: format!("row has {} columns, expected {expected}", parsed.len()),
                });
            }
            _ => {}
        }
        rows.push(parsed);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            row: 1,
            column: 1,
            message: "no data rows found".into(),
        });
    }
    Ok(rows)
}

/// JSON rows: `[[..], [..]]`, `[x, y, ...]` (one column), or an object with
/// a `coordinates` (flat) or `points` (nested) field.
pub fn parse_json(text: &str) -> Result<Vec<Vec<f64>>> {
    let value: Value = serde_json::from_str(text)?;
    let array = match &value {
        Value::Array(items) => items.as_slice(),
        Value::Object(map) => match (map.get("coordinates"), map.get("points")) {
            (Some(Value::Array(items)), _) => items.as_slice(),
            (None, Some(Value::Array(items))) => items.as_slice(),
            _ => {
                return Err(Error::Parse {
                    row: 1,
                    column: 1,
                    message: "JSON object carries neither a 'coordinates' nor a 'points' array"
                        .into(),
                })
            }
        },
        _ => {
            return Err(Error::Parse {
                row: 1,
                column: 1,
                message: "JSON input must be an array".into(),
            })
        }
    };
    if array.is_empty() {
        return Err(Error::Parse {
            row: 1,
            column: 1,
            message: "no data rows found".into(),
        });
    }

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(array.len());
    let nested = array[0].is_array();
    for (index, item) in array.iter().enumerate() {
        let row_number = index + 1;
        let row = if nested {
            let inner = item.as_array().ok_or_else(|| Error::Parse {
                row: row_number,
                column: 1,
                message: "mixed nesting: expected an inner array".into(),
            })?;
            inner
                .iter()
                .enumerate()
                .map(|(column_index, cell)| {
                    number(cell).ok_or_else(|| Error::Parse {
                        row: row_number,
                        column: column_index + 1,
                        message: format!("'{cell}' is not a finite number"),
                    })
                })
                .collect::<Result<Vec<f64>>>()?
        } else {
            vec![number(item).ok_or_else(|| Error::Parse {
                row: row_number,
                column: 1,
                message: format!("'{item}' is not a finite number"),
            })?]
        };
        if !rows.is_empty() && row.len() != rows[0].len() {
            return Err(Error::Parse {
                row: row_number,
                column: 1,
                message: format!("row has {} columns, expected {}", row.len(), rows[0].len()),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

fn number(value: &Value) -> Option<f64> {
    value.as_f64().filter(|v| v.is_finite())
}

/// Format with 12 significant digits: plain decimal notation in the
/// human-scale range, scientific outside it.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-8..=14).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).clamp(0, 19) as usize;
    format!("{x:.decimals$}")
}
