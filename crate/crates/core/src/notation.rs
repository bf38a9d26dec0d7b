//! Text forms of throw sequences.
//!
//! Grammar:
//!
//! ```text
//! compact := ([0-9] | [a-zA-Z])+
//! list    := INT (\s* ',' \s* INT)* (\s* ',')?
//! INT     := [0-9]+
//! ```
//!
//! Input is trimmed first; a comma anywhere selects the list form. A single
//! throw in list form is written with a trailing comma (`"57,"`), since
//! `"57"` would read as the two compact throws 5 and 7. In compact
//! form `a`..`z` (either case) stand for 10..35. Parsing only produces a
//! [`ThrowSequence`]; it never checks that the sequence is a valid pattern.

use thiserror::Error;

use crate::pattern::ThrowSequence;

/// Largest height the compact form can spell (`z`).
pub const COMPACT_MAX: u64 = 35;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NotationForm {
    /// One character per throw.
    #[default]
    Compact,
    /// Comma-separated decimals.
    List,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {0:?}")]
    UnknownChar(char),
    #[error("empty token")]
    EmptyToken,
    #[error("negative heights are not allowed")]
    Negative,
    #[error("number too large")]
    Overflow,
}

/// A parse failure with the byte offset (into the original, untrimmed text)
/// of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("height {height} at position {index} exceeds {COMPACT_MAX}; use list form")]
    NotCompact { index: usize, height: u64 },
}

fn err(offset: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { offset, kind }
}

pub fn parse(text: &str) -> Result<ThrowSequence, ParseError> {
    let body = text.trim_start();
    let start = text.len() - body.len();
    let body = body.trim_end();
    if body.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    let heights = if body.contains(',') {
        parse_list(body, start)?
    } else {
        parse_compact(body, start)?
    };
    Ok(ThrowSequence::new(heights).expect("non-empty input yields at least one throw"))
}

fn parse_compact(body: &str, base: usize) -> Result<Vec<u64>, ParseError> {
    body.char_indices()
        .map(|(i, c)| match c {
            '0'..='9' | 'a'..='z' | 'A'..='Z' => {
                Ok(c.to_digit(36).expect("alphanumeric ASCII") as u64)
            }
            '-' => Err(err(base + i, ParseErrorKind::Negative)),
            _ => Err(err(base + i, ParseErrorKind::UnknownChar(c))),
        })
        .collect()
}

fn parse_list(body: &str, base: usize) -> Result<Vec<u64>, ParseError> {
    let mut heights = Vec::new();
    let mut offset = base;
    let body = body.strip_suffix(',').unwrap_or(body);
    for raw in body.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        let token = raw.trim();
        let at = offset + lead;
        if token.is_empty() {
            return Err(err(at, ParseErrorKind::EmptyToken));
        }
        if token.starts_with('-') {
            return Err(err(at, ParseErrorKind::Negative));
        }
        if let Some((i, c)) = token.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(err(at + i, ParseErrorKind::UnknownChar(c)));
        }
        let value = token
            .parse::<u64>()
            .map_err(|_| err(at, ParseErrorKind::Overflow))?;
        heights.push(value);
        offset += raw.len() + 1;
    }
    Ok(heights)
}

pub fn render(seq: &ThrowSequence, form: NotationForm) -> Result<String, RenderError> {
    match form {
        NotationForm::Compact => seq
            .heights()
            .iter()
            .enumerate()
            .map(|(index, &height)| {
                char::from_digit(height.min(u32::MAX as u64) as u32, 36)
                    .filter(|_| height <= COMPACT_MAX)
                    .ok_or(RenderError::NotCompact { index, height })
            })
            .collect(),
        NotationForm::List => {
            let mut text = seq
                .heights()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            if seq.period() == 1 {
                text.push(',');
            }
            Ok(text)
        }
    }
}

/// Compact form when every height fits, list form otherwise.
pub fn render_auto(seq: &ThrowSequence) -> String {
    render(seq, NotationForm::Compact)
        .or_else(|_| render(seq, NotationForm::List))
        .expect("list form always renders")
}
