//! Report rendering: pretty JSON or RFC-4180 CSV, to a file or stdout.

use std::io::Write;
use std::path::Path;

use crate::config::{ReportFormat, RunError};
use crate::runner::ReportRow;

/// Renders rows in the requested format. Field order is fixed (check, p, x,
/// modulus, lhs, rhs, pass, status, elapsed_ms, seed); residues appear as
/// least nonnegative decimal integers, absent values as `null`/empty.
pub fn render(rows: &[ReportRow], format: ReportFormat) -> Result<String, RunError> {
    match format {
        ReportFormat::Json => {
            let mut body = serde_json::to_string_pretty(rows)
                .map_err(|e| RunError::Io(format!("serializing report: {e}")))?;
            body.push('\n');
            Ok(body)
        }
        ReportFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for row in rows {
                writer
                    .serialize(row)
                    .map_err(|e| RunError::Io(format!("serializing report: {e}")))?;
            }
            let bytes = writer
                .into_inner()
                .map_err(|e| RunError::Io(format!("serializing report: {e}")))?;
            String::from_utf8(bytes).map_err(|e| RunError::Io(format!("report not utf-8: {e}")))
        }
    }
}

/// Writes the rendered report to `out`, or stdout when no path is given.
pub fn emit(rows: &[ReportRow], format: ReportFormat, out: Option<&Path>) -> Result<(), RunError> {
    let body = render(rows, format)?;
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| RunError::Io(format!("writing {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| RunError::Io(format!("writing stdout: {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_row() -> ReportRow {
        ReportRow {
            check: "main-theorem".into(),
            p: Some(5),
            x: Some("1".into()),
            modulus: Some("5^3".into()),
            lhs: Some("40".into()),
            rhs: Some("40".into()),
            pass: Some(true),
            status: "ok".into(),
            elapsed_ms: 3,
            seed: None,
        }
    }

    fn skipped_row() -> ReportRow {
        ReportRow {
            check: "main-theorem".into(),
            p: Some(5),
            x: Some("-1/2".into()),
            modulus: None,
            lhs: None,
            rhs: None,
            pass: None,
            status: "skipped".into(),
            elapsed_ms: 0,
            seed: None,
        }
    }

    #[test]
    fn json_schema_is_pinned() {
        let body = render(&[sample_row(), skipped_row()], ReportFormat::Json).unwrap();
        // serialized key order is the declared column order
        let first_object = &body[..body.find('}').unwrap()];
        let keys = [
            "\"check\":", "\"p\":", "\"x\":", "\"modulus\":", "\"lhs\":", "\"rhs\":",
            "\"pass\":", "\"status\":", "\"elapsed_ms\":", "\"seed\":",
        ];
        let positions: Vec<usize> = keys
            .iter()
            .map(|k| first_object.find(k).unwrap_or_else(|| panic!("missing {k}")))
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");

        let parsed: serde_json::Value = serde_json::from_str(&body).unwrap();
        let rows = parsed.as_array().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0]["lhs"], "40");
        assert_eq!(rows[0]["pass"], true);
        assert_eq!(rows[1]["status"], "skipped");
        assert_eq!(rows[1]["lhs"], serde_json::Value::Null);
    }

    #[test]
    fn csv_has_header_and_empty_cells() {
        let body = render(&[sample_row(), skipped_row()], ReportFormat::Csv).unwrap();
        let mut lines = body.lines();
        assert_eq!(
            lines.next().unwrap(),
            "check,p,x,modulus,lhs,rhs,pass,status,elapsed_ms,seed"
        );
        assert_eq!(lines.next().unwrap(), "main-theorem,5,1,5^3,40,40,true,ok,3,");
        assert_eq!(lines.next().unwrap(), "main-theorem,5,-1/2,,,,,skipped,0,");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut row = sample_row();
        row.status = "fail: j=1, k=2".into();
        let body = render(&[row], ReportFormat::Csv).unwrap();
        assert!(body.contains("\"fail: j=1, k=2\""));
    }
}
