//! Braid words, permutation/component analysis, and the named-link table.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid letter may not be 0")]
    ZeroLetter,
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("cannot parse braid letter {token:?}")]
    BadToken { token: String },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("unknown link {name:?}")]
    UnknownLink { name: String },
    #[error("link table entry {name:?} is invalid: {detail}")]
    BadTableEntry { name: String, detail: String },
    #[error("cannot read link table: {0}")]
    TableIo(String),
}

/// A braid word on `strands` strands: signed Artin generator letters, the
/// sign giving the crossing sign and the magnitude the generator index.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for &e in &letters {
            if e == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if e.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: e, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse whitespace-separated signed integers. Without an explicit
    /// strand count the word gets `1 + max|letter|` strands; an identity
    /// braid then needs the override to be meaningful.
    pub fn parse(text: &str, strands_override: Option<usize>) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let e: i32 = token
                .parse()
                .map_err(|_| BraidError::BadToken { token: token.to_string() })?;
            letters.push(e);
        }
        let strands = match strands_override {
            Some(w) => w,
            None => letters
                .iter()
                .map(|e| e.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1),
        };
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn render(&self) -> String {
        self.letters
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Number of components of the closure: cycles of the underlying
    /// permutation.
    pub fn components(&self) -> usize {
        let w = self.strands;
        let mut perm: Vec<usize> = (0..w).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; w];
        let mut cycles = 0;
        for start in 0..w {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
            }
        }
        cycles
    }

    /// The mirror image: every crossing sign flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|e| -e).collect(),
        }
    }
}

/// A named link with its shipped braid presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinkEntry {
    pub name: String,
    pub strands: usize,
    pub letters: Vec<i32>,
    pub components: usize,
}

impl LinkEntry {
    pub fn word(&self) -> Result<BraidWord, BraidError> {
        let word = BraidWord::new(self.strands, self.letters.clone()).map_err(|e| {
            BraidError::BadTableEntry { name: self.name.clone(), detail: e.to_string() }
        })?;
        if word.components() != self.components {
            return Err(BraidError::BadTableEntry {
                name: self.name.clone(),
                detail: format!(
                    "closure has {} components, table claims {}",
                    word.components(),
                    self.components
                ),
            });
        }
        Ok(word)
    }
}

/// The default link table. Braid words for links whose presentations are
/// not forced by the tabulated polynomials themselves are ordinary braid
/// table data; every entry is accepted only because it reproduces the
/// tabulated polynomial for its link.
static DEFAULT_TABLE: &str = include_str!("links.json");

#[derive(Clone, Debug)]
pub struct LinkTable {
    entries: Vec<LinkEntry>,
}

impl LinkTable {
    pub fn shipped() -> LinkTable {
        Self::from_json(DEFAULT_TABLE).expect("shipped link table is valid")
    }

    pub fn from_json(text: &str) -> Result<LinkTable, BraidError> {
        let entries: Vec<LinkEntry> =
            serde_json::from_str(text).map_err(|e| BraidError::TableIo(e.to_string()))?;
        Ok(LinkTable { entries })
    }

    pub fn from_path(path: &std::path::Path) -> Result<LinkTable, BraidError> {
        let text = std::fs::read_to_string(path).map_err(|e| BraidError::TableIo(e.to_string()))?;
        Self::from_json(&text)
    }

    pub fn entries(&self) -> &[LinkEntry] {
        &self.entries
    }

    pub fn lookup(&self, name: &str) -> Result<&LinkEntry, BraidError> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| BraidError::UnknownLink { name: name.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_words() {
        let w = BraidWord::parse("1 1 1", None).unwrap();
        assert_eq!(w.strands(), 2);
        assert_eq!(w.letters(), &[1, 1, 1]);

        let w = BraidWord::parse("1 -2 1 -2", None).unwrap();
        assert_eq!(w.strands(), 3);

        assert_eq!(
            BraidWord::parse("3", Some(2)),
            Err(BraidError::LetterOutOfRange { letter: 3, strands: 2 })
        );
        assert!(BraidWord::parse("0", None).is_err());
        assert!(BraidWord::parse("x", None).is_err());
    }

    #[test]
    fn parse_render_round_trip() {
        let text = "1 -2 1 -2";
        let w = BraidWord::parse(text, None).unwrap();
        assert_eq!(w.render(), text);
    }

    #[test]
    fn component_counts() {
        assert_eq!(BraidWord::parse("1 1 1", None).unwrap().components(), 1);
        assert_eq!(BraidWord::parse("", Some(2)).unwrap().components(), 2);
        assert_eq!(BraidWord::parse("1 1", None).unwrap().components(), 2);
        assert_eq!(BraidWord::parse("1 -2 1 -2", None).unwrap().components(), 1);
    }

    #[test]
    fn mirror_examples() {
        let w = BraidWord::parse("1 1 1", None).unwrap();
        assert_eq!(w.mirror().letters(), &[-1, -1, -1]);
        assert_eq!(w.mirror().components(), w.components());
        let e = BraidWord::parse("", Some(2)).unwrap();
        assert_eq!(e.mirror().letters(), &[] as &[i32]);
        let w = BraidWord::parse("1 -2", None).unwrap();
        assert_eq!(w.mirror().letters(), &[-1, 2]);
    }

    #[test]
    fn shipped_table_is_consistent() {
        let table = LinkTable::shipped();
        assert!(table.entries().len() >= 16);
        for entry in table.entries() {
            let word = entry.word().expect("entry is valid");
            assert_eq!(word.components(), entry.components, "{}", entry.name);
        }
        let trefoil = table.lookup("3_1").unwrap();
        assert_eq!(trefoil.strands, 2);
        assert_eq!(trefoil.letters, vec![1, 1, 1]);
        assert!(table.lookup("nope").is_err());
    }
}
