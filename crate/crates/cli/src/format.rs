//! Matrix file format and number formatting.
//!
//! ```text
//! # comments run to the end of the line
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first non-blank line holds `n` (1 to 64), followed by exactly `n`
//! rows of `n` whitespace-separated decimals.

use effspec::Matrix;

use crate::error::CliError;

pub const MAX_FILE_DIM: usize = 64;

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        source_name: String::new(),
        line,
        message: message.into(),
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_error(0, "missing dimension line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_error(first, format!("bad dimension '{header}'")))?;
    if !(1..=MAX_FILE_DIM).contains(&n) {
        return Err(parse_error(
            first,
            format!("dimension {n} outside 1..={MAX_FILE_DIM}"),
        ));
    }

    let mut data = Vec::with_capacity(n * n);
    let mut last = first;
    for row in 0..n {
        let (line, content) = lines
            .next()
            .ok_or_else(|| parse_error(last, format!("expected {n} rows, found {row}")))?;
        last = line;
        let before = data.len();
        for token in content.split_whitespace() {
            let x: f64 = token
                .parse()
                .map_err(|_| parse_error(line, format!("malformed number '{token}'")))?;
            if !x.is_finite() {
                return Err(parse_error(line, format!("non-finite entry '{token}'")));
            }
            data.push(x);
        }
        let found = data.len() - before;
        if found != n {
            return Err(parse_error(
                line,
                format!("row has {found} entries, expected {n}"),
            ));
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_error(line, "unexpected content after the last row"));
    }
    Ok(Matrix::new(n, data)?)
}

/// Shortest round-tripping decimal for every entry.
pub fn serialize_matrix(k: &Matrix) -> String {
    let n = k.dim();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = k.row(i).iter().map(|x| format!("{x}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Twelve digits after the point, trailing zeros dropped, no negative zero.
pub fn fmt_num(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Comma-separated list, e.g. `1,0.5,2`.
pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad {what} component '{t}'")))
        })
        .collect()
}
