//! The QGT text format.
//!
//! A record is an optional run of `#` comment lines, a line holding the order
//! `n`, then `n` lines of `n` whitespace-separated 0-based entries of the
//! multiplication table. Blank lines and comment lines may appear anywhere.
//! Streams of records are separated by a line containing only `---`.
//! Division tables are never written; they are always derived on load.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::qcore::quasigroup::Quasigroup;
use crate::qcore::table::OpTable;

pub const RECORD_SEPARATOR: &str = "---";
const TAG_MARKER: &str = "#tag";

/// Canonical serialization: `n`, then one line per row, entries separated by
/// single spaces, each line newline-terminated.
pub fn write_table(table: &OpTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", table.order());
    for row in table.rows() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn write_quasigroup(q: &Quasigroup) -> String {
    write_table(q.mul_table())
}

/// Parses one record into raw rows without checking the Latin property.
///
/// `first_line` is the 1-based line number of `text` within its source, used
/// in error messages.
pub fn parse_rows(text: &str, first_line: usize) -> Result<Vec<Vec<usize>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + first_line, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (order_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(first_line, "missing order line"))?;
    let order: usize = header
        .parse()
        .map_err(|_| Error::parse(order_line, format!("invalid order '{header}'")))?;
    if order == 0 {
        return Err(Error::parse(order_line, "order must be positive"));
    }

    let mut rows = Vec::with_capacity(order);
    for (line_no, line) in lines {
        if rows.len() == order {
            return Err(Error::parse(line_no, "unexpected data after table"));
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("invalid entry '{tok}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(Error::parse(
                line_no,
                format!("expected {order} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(Error::parse(
            first_line + text.lines().count(),
            format!("expected {order} rows, found {}", rows.len()),
        ));
    }
    Ok(rows)
}

pub fn parse_table(text: &str) -> Result<OpTable> {
    OpTable::from_rows(&parse_rows(text, 1)?)
}

pub fn parse_quasigroup(text: &str) -> Result<Quasigroup> {
    Quasigroup::from_table(parse_table(text)?)
}

/// Splits a stream on `---` lines, keeping the 1-based starting line of each
/// record. Records with no data lines are dropped.
pub fn split_records(text: &str) -> Vec<(usize, String)> {
    let mut records = Vec::new();
    let mut current = String::new();
    let mut start = 1;
    for (i, line) in text.lines().enumerate() {
        if line.trim() == RECORD_SEPARATOR {
            records.push((start, std::mem::take(&mut current)));
            start = i + 2;
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    records.push((start, current));
    records.retain(|(_, body)| {
        body.lines()
            .any(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
    });
    records
}

pub fn parse_stream_rows(text: &str) -> Result<Vec<Vec<Vec<usize>>>> {
    split_records(text)
        .into_iter()
        .map(|(start, body)| parse_rows(&body, start))
        .collect()
}

pub fn parse_stream(text: &str) -> Result<Vec<Quasigroup>> {
    parse_stream_rows(text)?
        .into_iter()
        .map(|rows| Quasigroup::from_mul_table(&rows))
        .collect()
}

pub fn write_stream<'a>(items: impl IntoIterator<Item = &'a Quasigroup>) -> String {
    items
        .into_iter()
        .map(write_quasigroup)
        .collect::<Vec<_>>()
        .join(&format!("{RECORD_SEPARATOR}\n"))
}

/// Writes `table` followed by a `#tag` comment block carrying `tag` line by line.
pub fn write_tagged(table: &OpTable, tag: &str) -> String {
    let mut out = write_table(table);
    out.push_str(TAG_MARKER);
    out.push('\n');
    for line in tag.lines() {
        let _ = writeln!(out, "# {line}");
    }
    out
}

/// Reads back [`write_tagged`] output as `(table, tag)`.
pub fn parse_tagged(text: &str) -> Result<(OpTable, String)> {
    let table = parse_table(text)?;
    let mut in_tag = false;
    let mut tag = String::new();
    for line in text.lines() {
        if in_tag {
            if let Some(rest) = line.strip_prefix('#') {
                tag.push_str(rest.strip_prefix(' ').unwrap_or(rest));
                tag.push('\n');
                continue;
            }
            break;
        }
        in_tag = line.trim() == TAG_MARKER;
    }
    if tag.is_empty() {
        return Err(Error::parse(1, "missing #tag block"));
    }
    Ok((table, tag))
}

/// A map as one line: the images of `0, …, n-1`.
pub fn write_map(map: &[usize]) -> String {
    map.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_map(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::parse(1, format!("invalid map entry '{tok}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let text = "# Z3 under addition\n3\n0 1 2\n1 2 0\n\n2 0 1\n";
        let q = parse_quasigroup(text).unwrap();
        assert_eq!(q, Quasigroup::cyclic(3).unwrap());
    }

    #[test]
    fn canonical_output() {
        let q = Quasigroup::cyclic(2).unwrap();
        assert_eq!(write_quasigroup(&q), "2\n0 1\n1 0\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_rows("2\n0 1\n1\n", 1),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_rows("x\n", 1),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_rows("", 1), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_rows("2\n0 1\n", 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_rows("1\n0\n0\n", 1),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_rows("0\n", 1), Err(Error::Parse { .. })));
    }

    #[test]
    fn out_of_range_entry_is_input_error() {
        assert!(matches!(
            parse_table("2\n0 2\n1 0\n"),
            Err(Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn streams() {
        let qs = vec![Quasigroup::trivial(), Quasigroup::cyclic(2).unwrap()];
        let text = write_stream(&qs);
        assert_eq!(text, "1\n0\n---\n2\n0 1\n1 0\n");
        assert_eq!(parse_stream(&text).unwrap(), qs);
        // trailing separator and empty records are tolerated
        assert_eq!(parse_stream("---\n1\n0\n---\n").unwrap().len(), 1);
    }

    #[test]
    fn stream_errors_report_source_line() {
        let err = parse_stream_rows("1\n0\n---\n2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::parse(6, "invalid entry 'x'"));
    }

    #[test]
    fn tagged_block() {
        let q = Quasigroup::cyclic(2).unwrap();
        let tag = write_quasigroup(&q);
        let text = write_tagged(Quasigroup::trivial().mul_table(), &tag);
        assert_eq!(text, "1\n0\n#tag\n# 2\n# 0 1\n# 1 0\n");
        let (table, back) = parse_tagged(&text).unwrap();
        assert_eq!(&table, Quasigroup::trivial().mul_table());
        assert_eq!(back, tag);
        assert!(parse_tagged("1\n0\n").is_err());
    }

    #[test]
    fn maps() {
        assert_eq!(write_map(&[1, 0, 2]), "1 0 2");
        assert_eq!(parse_map(" 1 0  2 ").unwrap(), vec![1, 0, 2]);
        assert!(parse_map("1 a").is_err());
    }
}
