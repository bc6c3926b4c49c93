//! Plain-text point and heatmap files.
//!
//! Both are whitespace-separated numbers, one record per line. Blank lines
//! and lines starting with `#` or `%` are ignored.

use super::{RenderError, Result};

fn records(text: &str) -> impl Iterator<Item = (usize, Result<Vec<f64>>)> + '_ {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            return None;
        }
        let values = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| RenderError::Format(format!("line {}: malformed number `{tok}`", i + 1)))
            })
            .collect();
        Some((i + 1, values))
    })
}

/// Two columns: row angle, column angle (degrees).
pub fn parse_points(text: &str) -> Result<Vec<(f64, f64)>> {
    records(text)
        .map(|(line, values)| match values?.as_slice() {
            [x, y] => Ok((*x, *y)),
            other => Err(RenderError::Format(format!("line {line}: expected 2 columns, found {}", other.len()))),
        })
        .collect()
}

pub fn write_points(points: &[(f64, f64)]) -> String {
    points.iter().map(|(x, y)| format!("{x} {y}\n")).collect()
}

/// A rectangular, nonempty matrix. Row 0 is the bottom band of the plot.
#[derive(Debug, Clone, PartialEq)]
pub struct Heatmap {
    rows: Vec<Vec<f64>>,
}

impl Heatmap {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Heatmap> {
        let width = rows.first().map_or(0, Vec::len);
        if width == 0 {
            return Err(RenderError::Format("heatmap is empty".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(RenderError::Format(format!(
                "heatmap is not rectangular: row {} has {} values, expected {width}",
                i + 1,
                row.len()
            )));
        }
        if rows.iter().flatten().any(|v| !v.is_finite()) {
            return Err(RenderError::Format("heatmap has a non-finite value".into()));
        }
        Ok(Heatmap { rows })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn range(&self) -> (f64, f64) {
        self.rows
            .iter()
            .flatten()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)))
    }
}

pub fn parse_heatmap(text: &str) -> Result<Heatmap> {
    let rows = records(text).map(|(_, values)| values).collect::<Result<Vec<_>>>()?;
    Heatmap::new(rows)
}

pub fn write_heatmap(heatmap: &Heatmap) -> String {
    heatmap
        .rows
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(f64::to_string).collect();
            cells.join(" ") + "\n"
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_parse_and_reject() {
        let pts = parse_points("# header\n0 90\n\n 333.43 333.43 \n").unwrap();
        assert_eq!(pts, vec![(0.0, 90.0), (333.43, 333.43)]);
        assert!(matches!(parse_points("1 2 3"), Err(RenderError::Format(m)) if m.contains("2 columns")));
        assert!(matches!(parse_points("1 x"), Err(RenderError::Format(m)) if m.contains("`x`")));
    }

    #[test]
    fn heatmaps_must_be_rectangular() {
        assert!(parse_heatmap("1 2\n3 4\n").is_ok());
        assert!(matches!(parse_heatmap("1 2\n3\n"), Err(RenderError::Format(_))));
        assert!(parse_heatmap("").is_err());
        assert!(parse_heatmap("1 nan").is_err());
    }
}
