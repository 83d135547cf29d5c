//! Parse errors with source positions.

use thiserror::Error;

/// A position in the input: 1-based line and column plus a length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    pub fn new(line: usize, column: usize, length: usize) -> Self {
        debug_assert!(line >= 1 && column >= 1);
        SourceSpan {
            line,
            column,
            length,
        }
    }
}

impl std::fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("{span}: expected {expected}")]
    Syntax { span: SourceSpan, expected: String },
    #[error("{span}: unknown reference {name}")]
    UnknownReference { name: String, span: SourceSpan },
    #[error("{span}: unknown function {name}")]
    UnknownFunction { name: String, span: SourceSpan },
    #[error("{span}: {name} is already declared")]
    DuplicateName { name: String, span: SourceSpan },
    #[error("{span}: {message}")]
    Validation { span: SourceSpan, message: String },
}

impl ParseError {
    pub fn span(&self) -> SourceSpan {
        match self {
            ParseError::Syntax { span, .. }
            | ParseError::UnknownReference { span, .. }
            | ParseError::UnknownFunction { span, .. }
            | ParseError::DuplicateName { span, .. }
            | ParseError::Validation { span, .. } => *span,
        }
    }
}
