//! Line-oriented text formats shared by matrices, matroids and graphs.
//!
//! Every format is a sequence of whitespace-separated keyword lines. `#`
//! starts a comment that runs to the end of the line; blank lines are
//! skipped.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number, 0 when the problem is the input as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self { line, message: message.into() }
    }
}

/// A non-empty, comment-stripped input line.
#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    pub fn keyword(&self) -> &'a str {
        self.tokens[0]
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.number, message)
    }

    pub fn expect_arity(&self, n: usize) -> Result<(), ParseError> {
        if self.tokens.len() != n + 1 {
            return Err(self.error(format!(
                "`{}` expects {} argument(s), found {}",
                self.keyword(),
                n,
                self.tokens.len() - 1
            )));
        }
        Ok(())
    }

    pub fn parse_usize(&self, idx: usize) -> Result<usize, ParseError> {
        let tok = self.tokens[idx];
        tok.parse::<usize>().map_err(|_| self.error(format!("expected a non-negative integer, found `{tok}`")))
    }
}

pub(crate) fn lines(input: &str) -> impl Iterator<Item = Line<'_>> {
    input.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            None
        } else {
            Some(Line { number: i + 1, tokens })
        }
    })
}

/// Keyword of the first meaningful line, used to sniff which format a file holds.
pub fn leading_keyword(input: &str) -> Option<&str> {
    lines(input).next().map(|l| l.keyword())
}
