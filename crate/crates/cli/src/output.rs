//! Shared output plumbing: format selection, table rendering, CSV quoting,
//! and the approximate-notation suffix for very large exact integers.

use clap::ValueEnum;
use num_bigint::BigUint;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    /// Human-readable aligned columns.
    Table,
    /// Machine-readable rows; fields containing commas are quoted.
    Csv,
    /// One JSON document, schema-stable per subcommand.
    Json,
}

/// Renders rows as space-aligned columns, header first.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    emit(&mut out, &header_cells);
    for row in rows {
        emit(&mut out, row);
    }
    out
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_row(fields: &[String]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
}

/// Scientific-notation approximation of an exact integer, e.g. `1.11804e7`.
/// Returns None for values short enough to read directly (≤ 9 digits).
pub fn approx(value: &BigUint) -> Option<String> {
    let digits = value.to_string();
    if digits.len() <= 9 {
        return None;
    }
    let mantissa_tail = digits[1..6.min(digits.len())].trim_end_matches('0');
    let mantissa = if mantissa_tail.is_empty() {
        digits[..1].to_string()
    } else {
        format!("{}.{}", &digits[..1], mantissa_tail)
    };
    Some(format!("{}e{}", mantissa, digits.len() - 1))
}

/// Space-separated rendering of an element list (cycles, basins).
pub fn join_elements(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
