//! Deterministic table emission and re-parsing.
//!
//! CSV output is RFC-4180-style: header row, comma separator, `.` decimal
//! point, quoting only when a cell contains a comma, quote, or newline.
//! Floats print in Rust's shortest round-trip form, so emitted files parse
//! back to identical bits and stay byte-stable across platforms. No
//! timestamps or environment data ever land in a data file.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CsvError {
    #[error("unterminated quoted cell starting at byte {0}")]
    UnterminatedQuote(usize),
    #[error("stray quote inside unquoted cell at byte {0}")]
    StrayQuote(usize),
    #[error("empty input")]
    Empty,
}

/// Shortest round-trip decimal form of a float.
pub fn fmt_f64(value: f64) -> String {
    format!("{value}")
}

/// Write one CSV record, quoting cells only where required.
pub fn write_record(out: &mut String, cells: &[String]) {
    for (i, cell) in cells.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        if cell.contains([',', '"', '\n', '\r']) {
            out.push('"');
            out.push_str(&cell.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(cell);
        }
    }
    out.push('\n');
}

/// Assemble a full CSV document from a header and rows.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    write_record(&mut out, &header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        write_record(&mut out, row);
    }
    out
}

/// Parse a CSV document into (header, rows).
///
/// Handles quoted cells, doubled quotes, and both \n and \r\n endings;
/// never panics on arbitrary bytes (callers feed it untrusted files).
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>), CsvError> {
    let bytes = text.as_bytes();
    let mut records: Vec<Vec<String>> = Vec::new();
    let mut record: Vec<String> = Vec::new();
    let mut cell = String::new();
    let mut i = 0usize;
    let mut in_quotes = false;
    let mut quote_start = 0usize;
    let mut cell_has_content = false;

    while i < bytes.len() {
        let c = bytes[i];
        if in_quotes {
            match c {
                b'"' if bytes.get(i + 1) == Some(&b'"') => {
                    cell.push('"');
                    i += 2;
                    continue;
                }
                b'"' => {
                    in_quotes = false;
                    i += 1;
                }
                _ => {
                    // Multi-byte UTF-8 passes through unchanged.
                    let ch_len = utf8_len(c);
                    cell.push_str(&text[i..i + ch_len]);
                    i += ch_len;
                }
            }
            continue;
        }
        match c {
            b'"' if !cell_has_content && cell.is_empty() => {
                in_quotes = true;
                quote_start = i;
                cell_has_content = true;
                i += 1;
            }
            b'"' => return Err(CsvError::StrayQuote(i)),
            b',' => {
                record.push(std::mem::take(&mut cell));
                cell_has_content = false;
                i += 1;
            }
            b'\r' if bytes.get(i + 1) == Some(&b'\n') => {
                record.push(std::mem::take(&mut cell));
                cell_has_content = false;
                records.push(std::mem::take(&mut record));
                i += 2;
            }
            b'\n' => {
                record.push(std::mem::take(&mut cell));
                cell_has_content = false;
                records.push(std::mem::take(&mut record));
                i += 1;
            }
            _ => {
                let ch_len = utf8_len(c);
                cell.push_str(&text[i..i + ch_len]);
                cell_has_content = true;
                i += ch_len;
            }
        }
    }
    if in_quotes {
        return Err(CsvError::UnterminatedQuote(quote_start));
    }
    if cell_has_content || !cell.is_empty() || !record.is_empty() {
        record.push(cell);
        records.push(record);
    }
    if records.is_empty() {
        return Err(CsvError::Empty);
    }
    let header = records.remove(0);
    Ok((header, records))
}

#[inline]
fn utf8_len(first_byte: u8) -> usize {
    match first_byte {
        0x00..=0x7f => 1,
        0xc0..=0xdf => 2,
        0xe0..=0xef => 3,
        _ => 4,
    }
}
