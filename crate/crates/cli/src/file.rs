//! Algebra-definition files.
//!
//! A small `key = value` format that is also valid TOML when values are quoted:
//!
//! ```text
//! # quantum plane
//! field = "Q(q)"
//! generators = ["x", "y"]
//! relations = ["x*y - q*y*x"]
//! cutoff = 4
//! ```
//!
//! Unquoted values work too: `generators = x, y`, `relations = a; b`, or a
//! repeated `relation = ...` line.

use std::collections::HashSet;

use cohom_core::dsl::parse_relation;
use cohom_core::{Field, QuantumSpace};
use thiserror::Error;

pub const DEFAULT_CUTOFF: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error("unknown field `{0}`; expected Q or Q(q)")]
    UnknownField(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("relation {index} (`{text}`): {source}")]
    Relation { index: usize, text: String, source: cohom_core::Error },
    #[error("relation {index} (`{text}`) has degree {degree}; relations start in degree 2")]
    LowDegree { index: usize, text: String, degree: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Q,
    Qq,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::Qq => "Q(q)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: FieldTag,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub cutoff: usize,
}

fn unquote(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('"').and_then(|t| t.strip_suffix('"')).unwrap_or(s)
}

/// Split on `sep` outside quotes and brackets.
fn split_top(s: &str, sep: char) -> Vec<String> {
    let (mut out, mut cur, mut depth, mut quoted) = (Vec::new(), String::new(), 0i32, false);
    for c in s.chars() {
        match c {
            '"' => quoted = !quoted,
            '(' | '[' if !quoted => depth += 1,
            ')' | ']' if !quoted => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 && !quoted {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out.into_iter().map(|t| unquote(&t).to_string()).filter(|t| !t.is_empty()).collect()
}

fn list(value: &str, sep: char) -> Vec<String> {
    let v = value.trim();
    match v.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        Some(inner) => split_top(inner, ','),
        None => split_top(v, sep),
    }
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let (mut field, mut generators, mut relations, mut cutoff) = (None, None, Vec::new(), None);
        let mut lines = text.lines().enumerate();
        while let Some((i, raw)) = lines.next() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| FileError::Syntax { line: i + 1, msg: "expected `key = value`".into() })?;
            let mut value = value.trim().to_string();
            // multi-line arrays
            while value.starts_with('[') && !value.ends_with(']') {
                let (_, next) = lines.next().ok_or_else(|| FileError::Syntax { line: i + 1, msg: "unterminated list".into() })?;
                value.push(' ');
                value.push_str(strip_comment(next).trim());
            }
            match key.trim() {
                "field" => {
                    field = Some(match unquote(&value) {
                        "Q" => FieldTag::Q,
                        "Q(q)" => FieldTag::Qq,
                        other => return Err(FileError::UnknownField(other.into())),
                    })
                }
                "generators" => generators = Some(list(&value, ',')),
                "relations" => relations.extend(list(&value, ';')),
                "relation" => relations.push(unquote(&value).to_string()),
                "cutoff" => {
                    cutoff = Some(unquote(&value).parse().map_err(|_| FileError::Syntax { line: i + 1, msg: format!("bad cutoff `{value}`") })?);
                }
                other => return Err(FileError::Syntax { line: i + 1, msg: format!("unknown key `{other}`") }),
            }
        }
        let generators = generators.ok_or(FileError::Missing("generators"))?;
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(FileError::DuplicateGenerator(g.clone()));
            }
        }
        Ok(AlgebraFile { field: field.ok_or(FileError::Missing("field"))?, generators, relations, cutoff: cutoff.unwrap_or(DEFAULT_CUTOFF) })
    }

    /// Close the relations into a kernel filtration; `cutoff` overrides the file's.
    pub fn build<F: Field>(&self, cutoff: Option<usize>) -> Result<QuantumSpace<F>, FileError> {
        let mut rels = Vec::with_capacity(self.relations.len());
        for (index, text) in self.relations.iter().enumerate() {
            let (degree, v) = parse_relation::<F>(text, &self.generators).map_err(|source| FileError::Relation { index, text: text.clone(), source })?;
            if degree < 2 {
                return Err(FileError::LowDegree { index, text: text.clone(), degree });
            }
            rels.push((degree, v));
        }
        let d = cutoff.unwrap_or(self.cutoff);
        QuantumSpace::from_presentation(self.generators.clone(), &rels, d).map_err(|source| FileError::Relation { index: 0, text: String::new(), source })
    }
}
