//! Argument parsing with byte positions for error reporting.

use gkz_core::num::{parse_int, parse_rat, Int, Rat};
use gkz_core::IntMatrix;
use std::fmt;

/// A malformed argument, with the 1-based character column where it went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub argument: String,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (column {}): {}", self.argument, self.column, self.message)
    }
}

impl std::error::Error for InputError {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn column_of(source: &str, byte: usize) -> usize {
    source[..byte].chars().count() + 1
}

/// Splits `s` (starting at byte `start` of `source`) on commas and whitespace.
fn tokens<'a>(source: &'a str, start: usize, s: &'a str) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut begin = None;
    for (i, ch) in s.char_indices().chain(std::iter::once((s.len(), ' '))) {
        let sep = ch == ',' || ch.is_whitespace();
        match (sep, begin) {
            (false, None) => begin = Some(i),
            (true, Some(b)) => {
                out.push(Token { text: &s[b..i], column: column_of(source, start + b) });
                begin = None;
            }
            _ => {}
        }
    }
    out
}

/// Reads `@path` arguments from disk, anything else verbatim.
fn resolve(argument: &str, value: &str) -> Result<String, InputError> {
    match value.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| InputError {
            argument: argument.into(),
            column: 1,
            message: format!("cannot read '{path}': {e}"),
        }),
        None => Ok(value.to_string()),
    }
}

fn rows(source: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in source.char_indices() {
        if ch == ';' || ch == '\n' {
            out.push((start, &source[start..i]));
            start = i + ch.len_utf8();
        }
    }
    out.push((start, &source[start..]));
    out.into_iter().filter(|(_, r)| !r.trim().is_empty()).collect()
}

/// Integer matrix: rows split by `;` (or newlines in files), entries by
/// spaces or commas.
pub fn matrix(argument: &str, value: &str) -> Result<IntMatrix, InputError> {
    let source = resolve(argument, value)?;
    let err = |column, message: String| InputError { argument: argument.into(), column, message };
    let mut data: Vec<Vec<Int>> = Vec::new();
    for (start, row) in rows(&source) {
        let entries = tokens(&source, start, row)
            .into_iter()
            .map(|t| parse_int(t.text).map_err(|m| err(t.column, m)))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = data.first() {
            if first.len() != entries.len() {
                let message = format!("row {} has {} entries, expected {}", data.len() + 1, entries.len(), first.len());
                return Err(err(column_of(&source, start), message));
            }
        }
        data.push(entries);
    }
    if data.is_empty() {
        return Err(err(1, "empty matrix".into()));
    }
    IntMatrix::new(data).map_err(|e| err(1, e.to_string()))
}

/// Comma or whitespace separated rationals `p` or `p/q`; may be empty.
pub fn rationals(argument: &str, value: &str) -> Result<Vec<Rat>, InputError> {
    let source = resolve(argument, value)?;
    tokens(&source, 0, &source)
        .into_iter()
        .map(|t| {
            parse_rat(t.text).map_err(|message| InputError { argument: argument.into(), column: t.column, message })
        })
        .collect()
}

pub fn integers(argument: &str, value: &str) -> Result<Vec<Int>, InputError> {
    let source = resolve(argument, value)?;
    tokens(&source, 0, &source)
        .into_iter()
        .map(|t| parse_int(t.text).map_err(|message| InputError { argument: argument.into(), column: t.column, message }))
        .collect()
}

/// Rows of rationals, same layout as [`matrix`].
pub fn rational_rows(argument: &str, value: &str) -> Result<Vec<Vec<Rat>>, InputError> {
    let source = resolve(argument, value)?;
    rows(&source)
        .into_iter()
        .map(|(start, row)| {
            tokens(&source, start, row)
                .into_iter()
                .map(|t| {
                    parse_rat(t.text)
                        .map_err(|message| InputError { argument: argument.into(), column: t.column, message })
                })
                .collect()
        })
        .collect()
}
