use super::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Nat(u64),
    Omega,
    Times,
    Can,
    Deriv,
    Empty,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Star,
    Caret,
    /// `(+)`, natural sum of ordinals or disjoint union of spaces
    CircPlus,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Omega => "'w'".into(),
            Tok::Times => "'x'".into(),
            Tok::Can => "'can'".into(),
            Tok::Deriv => "'D'".into(),
            Tok::Empty => "'empty'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::CircPlus => "'(+)'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < src.len() {
        let c = src[i..].chars().next().expect("in bounds");
        let start = i;
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let simple = match c {
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            _ => None,
        };
        if let Some(tok) = simple {
            i += 1;
            out.push(Token {
                tok,
                span: SourceSpan::new(start, i),
            });
            continue;
        }
        if c == '(' {
            i += 1;
            let tok = match circ_plus_end(src, i) {
                Some(end) => {
                    i = end;
                    Tok::CircPlus
                }
                None => Tok::LParen,
            };
            out.push(Token {
                tok,
                span: SourceSpan::new(start, i),
            });
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse::<u64>().map_err(|_| {
                ParseError::new(
                    src,
                    SourceSpan::new(start, i),
                    "a number below 2^64",
                    "an overflowing number",
                )
            })?;
            out.push(Token {
                tok: Tok::Nat(n),
                span: SourceSpan::new(start, i),
            });
            continue;
        }
        if c.is_alphabetic() {
            let word_len: usize = src[i..]
                .chars()
                .take_while(|ch| ch.is_alphanumeric() || *ch == '_')
                .map(char::len_utf8)
                .sum();
            i += word_len;
            let word = &src[start..i];
            let tok = match word {
                "w" | "ω" => Tok::Omega,
                "x" => Tok::Times,
                "can" => Tok::Can,
                "D" => Tok::Deriv,
                "empty" => Tok::Empty,
                _ => {
                    return Err(ParseError::new(
                        src,
                        SourceSpan::new(start, i),
                        "a token",
                        &format!("identifier '{word}'"),
                    ))
                }
            };
            out.push(Token {
                tok,
                span: SourceSpan::new(start, i),
            });
            continue;
        }
        let end = start + c.len_utf8();
        return Err(ParseError::new(
            src,
            SourceSpan::new(start, end),
            "a token",
            &format!("character {c:?}"),
        ));
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan::new(src.len(), src.len()),
    });
    Ok(out)
}

/// End offset of `(+)` when the text after an opening parenthesis at
/// `after_paren - 1` continues with optional whitespace, `+`, whitespace, `)`.
fn circ_plus_end(src: &str, after_paren: usize) -> Option<usize> {
    let rest = &src[after_paren..];
    let trimmed = rest.trim_start();
    let trimmed = trimmed.strip_prefix('+')?;
    let trimmed = trimmed.trim_start();
    let trimmed = trimmed.strip_prefix(')')?;
    Some(src.len() - trimmed.len())
}
