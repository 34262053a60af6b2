//! Matrix input: whitespace-separated rows, or a JSON object with a
//! `"matrix"` key.

use std::fmt;

use dynkin_core::{CartanMatrix, GcmError};
use serde::Deserialize;

#[derive(Debug)]
pub enum InputError {
    /// The text could not be read as a matrix at all.
    Syntax(String),
    /// A well-formed integer matrix that is not a generalized Cartan matrix.
    Gcm(GcmError),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Syntax(msg) => f.write_str(msg),
            InputError::Gcm(e) => write!(f, "not a generalized Cartan matrix: {e}"),
        }
    }
}

impl std::error::Error for InputError {}

// unknown keys are ignored so that json output can be fed back in
#[derive(Deserialize)]
struct Structured {
    matrix: Vec<Vec<i64>>,
    rank: Option<usize>,
}

fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, InputError> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        // `;` separates rows in single-line inline input
        for part in line.split(';') {
            if part.trim().is_empty() {
                continue;
            }
            let row = part
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| {
                        InputError::Syntax(format!("line {}: `{tok}` is not an integer", k + 1))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Parses either format; JSON is recognized by a leading `{`.
pub fn parse_matrix_input(text: &str) -> Result<CartanMatrix, InputError> {
    let rows = if text.trim_start().starts_with('{') {
        let s: Structured = serde_json::from_str(text)
            .map_err(|e| InputError::Syntax(format!("invalid JSON matrix: {e}")))?;
        if let Some(rank) = s.rank {
            if rank != s.matrix.len() {
                return Err(InputError::Syntax(format!(
                    "\"rank\" is {rank} but \"matrix\" has {} rows",
                    s.matrix.len()
                )));
            }
        }
        s.matrix
    } else {
        parse_rows(text)?
    };
    CartanMatrix::new(rows).map_err(InputError::Gcm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rows() {
        let m = parse_matrix_input("2 -1\n-4 2").unwrap();
        assert_eq!(m.rows(), vec![vec![2, -1], vec![-4, 2]]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let m = parse_matrix_input("# G2\n\n2 -1   # short\n# between\n-3 2\n\n").unwrap();
        assert_eq!(m.rows(), vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn inline_semicolons() {
        let m = parse_matrix_input("2 -1; -1 2").unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn bad_diagonal_names_the_entry() {
        let err = parse_matrix_input("2 -1\n-4 3").unwrap_err();
        assert!(matches!(err, InputError::Gcm(_)));
        assert!(err.to_string().contains("diagonal entry 3 at (2,2)"), "{err}");
    }

    #[test]
    fn json_with_rank() {
        let m = parse_matrix_input(r#"{"matrix": [[2, -2], [-2, 2]], "rank": 2}"#).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(matches!(
            parse_matrix_input(r#"{"matrix": [[2]], "rank": 2}"#),
            Err(InputError::Syntax(_))
        ));
    }

    #[test]
    fn json_ignores_extra_keys() {
        let m = parse_matrix_input(r#"{"kind": "affine", "matrix": [[2, -2], [-2, 2]]}"#).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_matrix_input("2 x\n-1 2"), Err(InputError::Syntax(_))));
        assert!(matches!(parse_matrix_input("{"), Err(InputError::Syntax(_))));
        assert!(matches!(parse_matrix_input(""), Err(InputError::Gcm(GcmError::Empty))));
    }
}
