//! Flat text formats: codeword files and `key=value` lines.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::{Alphabet, Family, FamilyParams};
use crate::z4::{BinaryWord, Z4Word};

/// Version tag written at the top of every CLI output.
pub const FORMAT_HEADER: &str = "# format=1";

/// Splits `key=value` tokens separated by whitespace.
pub fn parse_fields(line: usize, text: &str) -> Result<BTreeMap<String, String>> {
    text.split_whitespace()
        .map(|tok| {
            tok.split_once('=')
                .map(|(k, v)| (k.to_owned(), v.to_owned()))
                .ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("expected key=value, got {tok:?}"),
                })
        })
        .collect()
}

pub fn field<T: FromStr>(line: usize, fields: &BTreeMap<String, String>, key: &str) -> Result<T> {
    let raw = fields.get(key).ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing field {key}"),
    })?;
    raw.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad value {raw:?} for {key}"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeFileHeader {
    pub family: Family,
    pub params: FamilyParams,
    /// Quaternary length; binary lines are `2n` long.
    pub n: usize,
    pub alphabet: Alphabet,
}

impl CodeFileHeader {
    pub fn to_line(&self) -> String {
        format!(
            "# z4code family={} r1={} r2={} n={} alphabet={}",
            self.family, self.params.r1, self.params.r2, self.n, self.alphabet
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeWords {
    Quaternary(Vec<Z4Word>),
    Binary(Vec<BinaryWord>),
}

impl CodeWords {
    pub fn len(&self) -> usize {
        match self {
            CodeWords::Quaternary(w) => w.len(),
            CodeWords::Binary(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub header: CodeFileHeader,
    pub words: CodeWords,
}

/// Writes the header line and then one codeword per line.
pub fn write_code<W: std::io::Write, I, T>(out: &mut W, header: &CodeFileHeader, words: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: std::fmt::Display,
{
    writeln!(out, "{}", header.to_line())?;
    for w in words {
        writeln!(out, "{w}")?;
    }
    Ok(())
}

pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    let mut header = None;
    let mut q = Vec::new();
    let mut b = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# z4code") {
            let f = parse_fields(lineno, rest)?;
            let r1 = field(lineno, &f, "r1")?;
            let r2 = field(lineno, &f, "r2")?;
            header = Some(CodeFileHeader {
                family: field(lineno, &f, "family")?,
                params: FamilyParams::new(r1, r2).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?,
                n: field(lineno, &f, "n")?,
                alphabet: field(lineno, &f, "alphabet")?,
            });
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let h = header.as_ref().ok_or(Error::Parse {
            line: lineno,
            msg: "codeword before z4code header".into(),
        })?;
        let bad = |e: Error| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        };
        match h.alphabet {
            Alphabet::Quaternary => {
                let w: Z4Word = line.parse().map_err(bad)?;
                expect_len(lineno, w.len(), h.n)?;
                q.push(w);
            }
            Alphabet::Binary => {
                let w: BinaryWord = line.parse().map_err(bad)?;
                expect_len(lineno, w.len(), 2 * h.n)?;
                b.push(w);
            }
        }
    }
    let header = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing z4code header".into(),
    })?;
    let words = match header.alphabet {
        Alphabet::Quaternary => CodeWords::Quaternary(q),
        Alphabet::Binary => CodeWords::Binary(b),
    };
    Ok(CodeFile { header, words })
}

fn expect_len(line: usize, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Parse {
            line,
            msg: format!("word has length {got}, expected {want}"),
        });
    }
    Ok(())
}
