//! Lattice file format and command-line vector expressions.
//!
//! A lattice file is a JSON document with top-level fields `rank` (integer),
//! `gram` (rank x rank integer array) and optional `labels` (string array):
//!
//! ```json
//! { "rank": 2, "gram": [[4, 9], [9, 8]], "labels": ["f4", "f8"] }
//! ```
//!
//! Vector expressions are signed integer combinations of basis labels with
//! grammar `term (("+"|"-") term)*`, `term = [int "*"] label`; whitespace is
//! insignificant. Example: `5*f4 - 1*f8`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::lattice::{IntegralLattice, LatticeVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("lattice file: {0}")]
    Malformed(String),
    #[error("field rank: {rank} does not match gram, which has {rows} rows")]
    RankMismatch { rank: usize, rows: usize },
    #[error("field gram: row {row} has {len} entries, expected {rank}")]
    GramRow { row: usize, len: usize, rank: usize },
    #[error("field gram: not symmetric at ({row},{col})")]
    GramAsymmetric { row: usize, col: usize },
    #[error("field labels: expected {rank} entries, found {len}")]
    LabelCount { rank: usize, len: usize },
    #[error("field labels: duplicate entry `{0}`")]
    DuplicateLabel(String),
    #[error("vector expression: unknown label `{0}`")]
    UnknownLabel(String),
    #[error("vector expression: unexpected character `{0}` at position {1}")]
    UnexpectedChar(char, usize),
    #[error("vector expression: expected a label at position {0}")]
    ExpectedLabel(usize),
    #[error("vector expression: empty expression")]
    EmptyExpression,
    #[error("lattice has no labels; vector expressions need named basis vectors")]
    NoLabels,
}

#[derive(Deserialize)]
struct LatticeFile {
    rank: usize,
    gram: Vec<Vec<i64>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// Parses a lattice file. Errors name the offending field.
pub fn parse_lattice(text: &str) -> Result<IntegralLattice, FormatError> {
    let file: LatticeFile =
        serde_json::from_str(text).map_err(|e| FormatError::Malformed(e.to_string()))?;
    if file.gram.len() != file.rank {
        return Err(FormatError::RankMismatch {
            rank: file.rank,
            rows: file.gram.len(),
        });
    }
    for (row, r) in file.gram.iter().enumerate() {
        if r.len() != file.rank {
            return Err(FormatError::GramRow {
                row,
                len: r.len(),
                rank: file.rank,
            });
        }
    }
    for i in 0..file.rank {
        for j in (i + 1)..file.rank {
            if file.gram[i][j] != file.gram[j][i] {
                return Err(FormatError::GramAsymmetric { row: i, col: j });
            }
        }
    }
    if let Some(ls) = &file.labels {
        if ls.len() != file.rank {
            return Err(FormatError::LabelCount {
                rank: file.rank,
                len: ls.len(),
            });
        }
        for (i, l) in ls.iter().enumerate() {
            if ls[..i].contains(l) {
                return Err(FormatError::DuplicateLabel(l.clone()));
            }
        }
    }
    let gram = file
        .gram
        .iter()
        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    // structural checks above make this constructor infallible
    Ok(IntegralLattice::new(gram, file.labels).expect("validated lattice file"))
}

pub fn render_lattice(l: &IntegralLattice) -> String {
    let gram: Vec<Vec<i64>> = l
        .gram()
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| i64::try_from(c).expect("gram entry exceeds the i64 file-format range"))
                .collect()
        })
        .collect();
    let mut doc = serde_json::json!({
        "rank": l.rank(),
        "gram": gram,
    });
    if let Some(ls) = l.labels() {
        doc["labels"] = serde_json::json!(ls);
    }
    serde_json::to_string_pretty(&doc).expect("lattice serialization cannot fail")
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Some(digits.parse().expect("digit run parses as integer"))
    }

    fn label(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphabetic() || *c == '_')
        {
            self.pos += 1;
            while self
                .chars
                .get(self.pos)
                .is_some_and(|c| c.is_alphanumeric() || *c == '_')
            {
                self.pos += 1;
            }
            Some(self.chars[start..self.pos].iter().collect())
        } else {
            None
        }
    }
}

/// Parses a signed integer combination of basis labels into coordinates of
/// the given lattice.
pub fn parse_vector(l: &IntegralLattice, expr: &str) -> Result<LatticeVector, FormatError> {
    if l.labels().is_none() {
        return Err(FormatError::NoLabels);
    }
    let mut coords = vec![BigInt::zero(); l.rank()];
    let mut lexer = Lexer::new(expr);
    let mut first = true;
    loop {
        let sign = match lexer.peek() {
            None if first => return Err(FormatError::EmptyExpression),
            None => break,
            Some('+') => {
                lexer.pos += 1;
                BigInt::one()
            }
            Some('-') => {
                lexer.pos += 1;
                -BigInt::one()
            }
            Some(_) if first => BigInt::one(),
            Some(c) => return Err(FormatError::UnexpectedChar(c, lexer.pos)),
        };
        first = false;
        // term: [int "*"] label
        let coeff = match lexer.integer() {
            Some(n) => {
                match lexer.peek() {
                    Some('*') => lexer.pos += 1,
                    Some(c) => return Err(FormatError::UnexpectedChar(c, lexer.pos)),
                    None => {
                        return Err(FormatError::ExpectedLabel(lexer.src.len()));
                    }
                }
                n
            }
            None => BigInt::one(),
        };
        let name = lexer
            .label()
            .ok_or(FormatError::ExpectedLabel(lexer.pos))?;
        let idx = l
            .label_index(&name)
            .ok_or(FormatError::UnknownLabel(name))?;
        coords[idx] += sign * coeff;
    }
    Ok(LatticeVector::new(coords))
}
