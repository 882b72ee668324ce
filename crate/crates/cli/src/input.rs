//! Line-oriented input files.
//!
//! Four kinds are recognized, each announced by its header line:
//!
//! ```text
//! semigroup:                     language:
//! elements: 0 1 a aa             alphabet: a b
//! table:                         words: a b aa ba
//! 0 0 0 0                        mode: close        # optional
//! 0 1 a aa
//! 0 a aa 0
//! 0 aa 0 0
//!
//! markov:                        monoid:
//! alphabet: x1 x2                elements: 1 g
//! matrix:                        table:
//! 1 1                            1 g
//! 1 0                            g 1
//! maxlen: 3
//! ```
//!
//! `#` starts a comment, blank lines are skipped, tokens are separated by
//! whitespace. Semigroup tables must name their zero element `0`; monoid
//! tables must not use the token `0`, which is reserved for the adjoined
//! zero.

use std::collections::BTreeMap;

use thiserror::Error;

use ihull_core::constructors::{
    adjoin_zero, language_semigroup, markov_semigroup, ClosureMode, ConstructorError,
    LanguageSpec, TransitionMatrix,
};
use ihull_core::semigroup::{Semigroup, SemigroupError};

#[derive(Error, Debug)]
pub enum InputError {
    #[error("empty input")]
    Empty,
    #[error("unknown input kind `{0}`; expected semigroup:, language:, markov: or monoid:")]
    UnknownKind(String),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: missing `{key}` section")]
    MissingKey { line: usize, key: &'static str },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Constructor(#[from] ConstructorError),
}

/// What kind of object the file described.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum InputKind {
    Table,
    Language,
    Markov,
    Monoid,
}

/// A parsed and validated input document. Every kind ends up as a semigroup
/// with zero; languages and Markov truncations keep their word provenance.
#[derive(Debug)]
pub struct InputDocument {
    pub kind: InputKind,
    pub semigroup: Semigroup,
}

struct Lines<'a> {
    rows: Vec<(usize, Vec<&'a str>)>,
}

impl<'a> Lines<'a> {
    fn parse(text: &'a str) -> Self {
        let rows = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let stripped = raw.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = stripped.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            })
            .collect();
        Lines { rows }
    }

    /// `key: values` rows, collected into a map; bare rows (table/matrix
    /// bodies) are attached to the preceding key.
    fn sections(&self) -> Result<BTreeMap<&'a str, Section<'a>>, InputError> {
        let mut out: BTreeMap<&str, Section> = BTreeMap::new();
        let mut current: Option<&str> = None;
        for (line, tokens) in self.rows.iter().skip(1) {
            if let Some(key) = tokens[0].strip_suffix(':') {
                let section = Section {
                    line: *line,
                    values: tokens[1..].to_vec(),
                    body: Vec::new(),
                };
                if out.insert(key, section).is_some() {
                    return Err(InputError::Malformed {
                        line: *line,
                        message: format!("duplicate section `{key}`"),
                    });
                }
                current = Some(key);
            } else {
                let Some(key) = current else {
                    return Err(InputError::Malformed {
                        line: *line,
                        message: "data before any section header".into(),
                    });
                };
                out.get_mut(key).unwrap().body.push((*line, tokens.clone()));
            }
        }
        Ok(out)
    }
}

struct Section<'a> {
    line: usize,
    values: Vec<&'a str>,
    body: Vec<(usize, Vec<&'a str>)>,
}

fn require<'s, 'a>(
    sections: &'s BTreeMap<&'a str, Section<'a>>,
    key: &'static str,
) -> Result<&'s Section<'a>, InputError> {
    sections
        .get(key)
        .ok_or(InputError::MissingKey { line: 0, key })
}

fn strings(tokens: &[&str]) -> Vec<String> {
    tokens.iter().map(|t| t.to_string()).collect()
}

/// Parses a document from source text, inferring the kind from the header
/// line.
pub fn parse_input(text: &str) -> Result<InputDocument, InputError> {
    let lines = Lines::parse(text);
    let Some((header_line, header)) = lines.rows.first() else {
        return Err(InputError::Empty);
    };
    let kind = match header[0] {
        "semigroup:" => InputKind::Table,
        "language:" => InputKind::Language,
        "markov:" => InputKind::Markov,
        "monoid:" => InputKind::Monoid,
        other => {
            let _ = header_line;
            return Err(InputError::UnknownKind(other.to_string()));
        }
    };
    let sections = lines.sections()?;
    let semigroup = match kind {
        InputKind::Table => {
            let elements = require(&sections, "elements")?;
            let names = strings(&elements.values);
            let table = require(&sections, "table")?;
            let rows: Vec<Vec<String>> =
                table.body.iter().map(|(_, tokens)| strings(tokens)).collect();
            Semigroup::validate(names, "0", &rows)?
        }
        InputKind::Monoid => {
            let elements = require(&sections, "elements")?;
            let names = strings(&elements.values);
            let table = require(&sections, "table")?;
            let rows: Vec<Vec<String>> =
                table.body.iter().map(|(_, tokens)| strings(tokens)).collect();
            adjoin_zero(names, &rows)?
        }
        InputKind::Language => {
            let alphabet = strings(&require(&sections, "alphabet")?.values);
            let words = strings(&require(&sections, "words")?.values);
            let mode = match sections.get("mode") {
                None => ClosureMode::Validate,
                Some(section) => match section.values.as_slice() {
                    ["close"] => ClosureMode::Close,
                    ["validate"] => ClosureMode::Validate,
                    other => {
                        return Err(InputError::Malformed {
                            line: section.line,
                            message: format!("unknown mode {other:?}"),
                        })
                    }
                },
            };
            let spec = LanguageSpec::parse(&alphabet, &words)?;
            language_semigroup(&spec, mode)?.semigroup
        }
        InputKind::Markov => {
            let alphabet = strings(&require(&sections, "alphabet")?.values);
            let matrix_section = require(&sections, "matrix")?;
            let mut matrix: Vec<Vec<u8>> = Vec::new();
            for (line, tokens) in &matrix_section.body {
                let mut row = Vec::new();
                for t in tokens {
                    let v: u8 = t.parse().map_err(|_| InputError::Malformed {
                        line: *line,
                        message: format!("matrix entry `{t}` is not a number"),
                    })?;
                    row.push(v);
                }
                matrix.push(row);
            }
            let maxlen_section = require(&sections, "maxlen")?;
            let maxlen: usize = match maxlen_section.values.as_slice() {
                [v] => v.parse().map_err(|_| InputError::Malformed {
                    line: maxlen_section.line,
                    message: format!("maxlen `{v}` is not a number"),
                })?,
                _ => {
                    return Err(InputError::Malformed {
                        line: maxlen_section.line,
                        message: "maxlen takes exactly one value".into(),
                    })
                }
            };
            let matrix = TransitionMatrix::new(matrix)?;
            markov_semigroup(&alphabet, &matrix, maxlen)?.semigroup
        }
    };
    Ok(InputDocument { kind, semigroup })
}

/// Parses a free-product factor: either a `monoid:` file (which gets a zero
/// adjoined) or a unital `semigroup:` file, whose own zero is kept. The
/// latter form is the way to give a factor with zero divisors, such as a
/// monoid with `a² = 0`.
pub fn parse_monoid_factor(text: &str) -> Result<Semigroup, InputError> {
    let doc = parse_input(text)?;
    match doc.kind {
        InputKind::Monoid => Ok(doc.semigroup),
        InputKind::Table if doc.semigroup.unit().is_some() => Ok(doc.semigroup),
        _ => Err(InputError::UnknownKind(
            "free product factors must be monoid files or unital semigroup tables".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIXTURE_B: &str = "\
semigroup:
elements: 0 e s
table:
0 0 0
0 e 0
0 s 0
";

    #[test]
    fn parses_a_semigroup_table() {
        let doc = parse_input(FIXTURE_B).unwrap();
        assert_eq!(doc.kind, InputKind::Table);
        assert_eq!(doc.semigroup.len(), 3);
    }

    #[test]
    fn parses_a_language_file() {
        let doc = parse_input(
            "language:\nalphabet: a b\nwords: a b aa ba\n",
        )
        .unwrap();
        assert_eq!(doc.kind, InputKind::Language);
        assert_eq!(doc.semigroup.len(), 5);
        assert!(doc.semigroup.has_word_provenance());
    }

    #[test]
    fn unknown_header_is_rejected() {
        assert!(matches!(
            parse_input("widget:\n"),
            Err(InputError::UnknownKind(_))
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a comment\n\nsemigroup:\nelements: 0 e s # trailing\ntable:\n0 0 0\n0 e 0\n0 s 0\n";
        assert!(parse_input(text).is_ok());
    }

    #[test]
    fn corrupted_table_reports_validation_error() {
        let text = "semigroup:\nelements: 0 e s\ntable:\n0 0 0\n0 s 0\n0 e e\n";
        assert!(parse_input(text).is_err());
    }

    #[test]
    fn markov_file_round_trips() {
        let text = "markov:\nalphabet: x1 x2\nmatrix:\n1 1\n1 0\nmaxlen: 3\n";
        let doc = parse_input(text).unwrap();
        assert_eq!(doc.semigroup.len(), 11);
    }

    #[test]
    fn monoid_file_gets_a_zero() {
        let text = "monoid:\nelements: 1 g\ntable:\n1 g\ng 1\n";
        let doc = parse_input(text).unwrap();
        assert_eq!(doc.kind, InputKind::Monoid);
        assert_eq!(doc.semigroup.len(), 3);
        assert_eq!(doc.semigroup.name(doc.semigroup.zero()), "0");
    }
}
