//! Line-oriented matrix text format.
//!
//! ```text
//! # comment
//! 2 2 Q
//! 1 1/2
//! 0 -3
//! ```

use std::fmt::Write as _;

use super::{format_scalar, parse_scalar, ExactMatrix, RingTag};
use crate::error::{Error, Result};

impl ExactMatrix {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows(), self.cols(), self.ring());
        for i in 0..self.rows() {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ExactMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `rows cols ring` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [rows, cols, ring] = fields[..] else {
            return Err(Error::parse(hline, "header must be `rows cols ring`"));
        };
        let rows: usize = rows
            .parse()
            .map_err(|_| Error::parse(hline, format!("bad row count `{rows}`")))?;
        let cols: usize = cols
            .parse()
            .map_err(|_| Error::parse(hline, format!("bad column count `{cols}`")))?;
        let ring: RingTag = ring
            .parse()
            .map_err(|e: Error| Error::parse(hline, e.to_string()))?;

        let mut entries = Vec::with_capacity(rows * cols);
        let mut seen_rows = 0;
        for (lineno, line) in lines {
            if seen_rows == rows {
                return Err(Error::parse(lineno, "more rows than declared"));
            }
            let row: Vec<_> = line
                .split_whitespace()
                .map(|t| {
                    parse_scalar(t).ok_or_else(|| Error::parse(lineno, format!("bad entry `{t}`")))
                })
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::parse(
                    lineno,
                    format!("expected {cols} entries, found {}", row.len()),
                ));
            }
            for x in row {
                entries.push(
                    ring.coerce(x)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?,
                );
            }
            seen_rows += 1;
        }
        if seen_rows != rows {
            return Err(Error::parse(
                hline,
                format!("declared {rows} rows, found {seen_rows}"),
            ));
        }
        ExactMatrix::new(ring, rows, cols, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_comments() {
        let m = ExactMatrix::from_text("# a matrix\n2 2 Q\n1 1/2\n\n0 -6/4\n").unwrap();
        assert_eq!(m.to_text(), "2 2 Q\n1 1/2\n0 -3/2\n");
    }

    #[test]
    fn modular_entries_are_reduced() {
        let m = ExactMatrix::from_text("1 2 Zm:5\n7 -1\n").unwrap();
        assert_eq!(m.to_text(), "1 2 Zm:5\n2 4\n");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(ExactMatrix::from_text("").is_err());
        assert!(ExactMatrix::from_text("2 2 Q\n1 2\n").is_err());
        assert!(ExactMatrix::from_text("1 2 Q\n1 2 3\n").is_err());
        assert!(ExactMatrix::from_text("1 1 Z\n1/2\n").is_err());
        assert!(ExactMatrix::from_text("1 1 R\n1\n").is_err());
        assert!(ExactMatrix::from_text("1 1 Q\n1\n2\n").is_err());
    }

    #[test]
    fn empty_matrix() {
        let m = ExactMatrix::from_text("0 3 Z\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 3));
    }
}
