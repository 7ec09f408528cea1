//! Table import/export: JSON, CSV (0-based), and GAP list-of-lists (1-based).

use serde::{Deserialize, Serialize};

use super::{FiniteQuandle, QuandleError};

pub const TABLE_SCHEMA: &str = "quandlekit/table/v1";

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    schema: String,
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn to_json_value(q: &FiniteQuandle) -> serde_json::Value {
    serde_json::to_value(TableFile {
        schema: TABLE_SCHEMA.to_string(),
        order: q.order(),
        table: q.table().to_vec(),
        labels: q.labels().map(<[String]>::to_vec),
    })
    .expect("table serializes")
}

pub fn to_json(q: &FiniteQuandle) -> String {
    serde_json::to_string_pretty(&to_json_value(q)).expect("table serializes")
}

pub fn from_json(text: &str) -> Result<FiniteQuandle, QuandleError> {
    let file: TableFile =
        serde_json::from_str(text).map_err(|e| QuandleError::Parse(e.to_string()))?;
    if file.schema != TABLE_SCHEMA {
        return Err(QuandleError::Parse(format!(
            "unsupported schema {:?}",
            file.schema
        )));
    }
    if file.order != file.table.len() {
        return Err(QuandleError::Malformed(format!(
            "order {} but {} rows",
            file.order,
            file.table.len()
        )));
    }
    let q = FiniteQuandle::from_table(file.table)?;
    match file.labels {
        Some(labels) => q.with_labels(labels),
        None => Ok(q),
    }
}

pub fn to_csv(q: &FiniteQuandle) -> String {
    let mut out = String::new();
    for row in q.table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn from_csv(text: &str) -> Result<FiniteQuandle, QuandleError> {
    let mut table = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| {
                cell.trim().parse::<usize>().map_err(|e| {
                    QuandleError::Parse(format!("line {}: {:?}: {e}", lineno + 1, cell.trim()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    FiniteQuandle::from_table(table)
}

/// GAP list of rows with 1-based entries, e.g. `[ [ 1, 3, 2 ], ... ]`.
pub fn to_gap(q: &FiniteQuandle) -> String {
    let rows: Vec<String> = q
        .table()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
            format!("  [ {} ]", cells.join(", "))
        })
        .collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}

/// Reads either JSON (if the text starts with `{`) or CSV.
pub fn from_text(text: &str) -> Result<FiniteQuandle, QuandleError> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_csv(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_keeps_labels() {
        let q = FiniteQuandle::dihedral(3)
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let back = from_json(&to_json(&q)).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.find_label("c"), Some(2));
    }

    #[test]
    fn csv_round_trip() {
        let q = FiniteQuandle::dihedral(5).unwrap();
        assert_eq!(to_csv(&q).lines().next(), Some("0,2,4,1,3"));
        assert_eq!(from_csv(&to_csv(&q)).unwrap(), q);
        assert_eq!(from_text(&to_csv(&q)).unwrap(), q);
    }

    #[test]
    fn gap_is_one_based() {
        let q = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(
            to_gap(&q),
            "[\n  [ 1, 3, 2 ],\n  [ 3, 2, 1 ],\n  [ 2, 1, 3 ]\n]\n"
        );
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            from_csv("0,1\n1,x\n"),
            Err(QuandleError::Parse(_))
        ));
        assert!(matches!(
            from_json(r#"{"schema":"other","order":1,"table":[[0]]}"#),
            Err(QuandleError::Parse(_))
        ));
        assert!(matches!(
            from_json(r#"{"schema":"quandlekit/table/v1","order":2,"table":[[0]]}"#),
            Err(QuandleError::Malformed(_))
        ));
    }
}
