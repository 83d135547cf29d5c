//! Tokenizer for the declaration format. `#` starts a line comment.

use super::error::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Arrow, // ->
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Equals,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s}"),
            Tok::Int(s) => format!("integer {s}"),
            Tok::Arrow => "'->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Colon => "':'".into(),
            Tok::Equals => "'='".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = text.chars().peekable();

    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                column += 1;
            }
            continue;
        }
        let start = SourceSpan::new(line, column, 1);
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let len = s.chars().count();
            out.push(Token {
                tok: Tok::Ident(s),
                span: SourceSpan::new(start.line, start.column, len),
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let len = s.len();
            out.push(Token {
                tok: Tok::Int(s),
                span: SourceSpan::new(start.line, start.column, len),
            });
            continue;
        }
        let single = |t: Tok| Token {
            tok: t,
            span: start,
        };
        match c {
            '-' => {
                chars.next();
                column += 1;
                if chars.peek() == Some(&'>') {
                    chars.next();
                    column += 1;
                    out.push(Token {
                        tok: Tok::Arrow,
                        span: SourceSpan::new(start.line, start.column, 2),
                    });
                } else {
                    out.push(single(Tok::Minus));
                }
            }
            '(' | ')' | '{' | '}' | '[' | ']' | ',' | ';' | ':' | '=' | '+' | '*' | '/' | '^' => {
                chars.next();
                column += 1;
                let t = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    ':' => Tok::Colon,
                    '=' => Tok::Equals,
                    '+' => Tok::Plus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    _ => unreachable!(),
                };
                out.push(single(t));
            }
            other => {
                return Err(ParseError::Syntax {
                    span: start,
                    expected: format!("a token, found {other:?}"),
                });
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan::new(line, column, 0),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_tokens() {
        let toks = lex("algebra D2 = weil R[X,Y]/(X^2)").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(kinds[0], &Tok::Ident("algebra".into()));
        assert_eq!(kinds[2], &Tok::Equals);
        assert!(matches!(kinds.last(), Some(Tok::Eof)));
    }

    #[test]
    fn comments_and_unicode_names() {
        let toks = lex("# heading\nℝ -> D # trailing\n").unwrap();
        assert_eq!(toks[0].tok, Tok::Ident("ℝ".into()));
        assert_eq!(toks[0].span.line, 2);
        assert_eq!(toks[1].tok, Tok::Arrow);
    }

    #[test]
    fn spans_track_columns() {
        let toks = lex("ab + cd").unwrap();
        assert_eq!(toks[0].span.column, 1);
        assert_eq!(toks[1].span.column, 4);
        assert_eq!(toks[2].span.column, 6);
    }

    #[test]
    fn stray_character_rejected() {
        let err = lex("a ~ b").unwrap_err();
        assert_eq!(err.span().column, 3);
    }
}
