//! `"a,b; a,b; ..."` lists.

use std::fmt;

use biproj::Bidegree;

/// Where and why a bidegree list failed to parse. `column` is 1-based and
/// counts characters of the original argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        column,
        message: message.into(),
    }
}

/// Column of the first non-blank character at or after `start`, or of the
/// end of the segment when it is blank.
fn first_visible(chars: &[char], start: usize, end: usize) -> usize {
    (start..end).find(|&i| !chars[i].is_whitespace()).unwrap_or(end) + 1
}

fn parse_int(chars: &[char], start: usize, end: usize, what: &str) -> Result<i64, ParseError> {
    let text: String = chars[start..end].iter().filter(|c| !c.is_whitespace()).collect();
    let column = first_visible(chars, start, end);
    if text.is_empty() {
        return Err(err(column, format!("missing {what}")));
    }
    text.parse::<i64>()
        .map_err(|_| err(column, format!("{what} {text:?} is not an integer")))
}

pub fn parse_bidegrees(input: &str) -> Result<Vec<Bidegree>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    if chars.iter().all(|c| c.is_whitespace()) {
        return Err(err(1, "empty bidegree list"));
    }
    let mut out = Vec::new();
    let mut start = 0;
    loop {
        let end = (start..chars.len()).find(|&i| chars[i] == ';').unwrap_or(chars.len());
        let commas: Vec<usize> = (start..end).filter(|&i| chars[i] == ',').collect();
        match commas.as_slice() {
            [] if (start..end).all(|i| chars[i].is_whitespace()) => {
                return Err(err(first_visible(&chars, start, end), "empty entry, expected \"a,b\""));
            }
            [] => return Err(err(first_visible(&chars, start, end), "expected \"a,b\", found no comma")),
            [c] => {
                let a = parse_int(&chars, start, *c, "first entry")?;
                let b = parse_int(&chars, c + 1, end, "second entry")?;
                out.push(Bidegree::new(a, b));
            }
            [_, extra, ..] => return Err(err(extra + 1, "unexpected second comma in one bidegree")),
        }
        if end == chars.len() {
            return Ok(out);
        }
        start = end + 1;
    }
}
