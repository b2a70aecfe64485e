//! The shipped example braids: word files, reduction files and growth rates.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::nt::ReductionData;

/// Directory holding `manifest.json` and the files it names.
pub const CORPUS_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub n: usize,
    pub word_file: String,
    pub reduction_file: String,
    pub lambda: f64,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    root: PathBuf,
    entries: Vec<CorpusEntry>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

impl Corpus {
    pub fn load(root: impl AsRef<Path>) -> Result<Self> {
        let root = root.as_ref().to_path_buf();
        let text = read(&root.join("manifest.json"))?;
        let entries = serde_json::from_str(&text)
            .map_err(|e| Error::InvalidArgument(format!("invalid corpus manifest: {e}")))?;
        Ok(Corpus { root, entries })
    }

    pub fn shipped() -> Result<Self> {
        Self::load(CORPUS_DIR)
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn word_path(&self, e: &CorpusEntry) -> PathBuf {
        self.root.join(&e.word_file)
    }

    pub fn reduction_path(&self, e: &CorpusEntry) -> PathBuf {
        self.root.join(&e.reduction_file)
    }

    pub fn word(&self, e: &CorpusEntry) -> Result<BraidWord> {
        parse_braid(read(&self.word_path(e))?.trim(), e.n)
    }

    pub fn reduction(&self, e: &CorpusEntry) -> Result<ReductionData> {
        let rd = ReductionData::from_json(&read(&self.reduction_path(e))?)?;
        if rd.n as usize != e.n {
            return Err(Error::StringMismatch(rd.n as usize, e.n));
        }
        Ok(rd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_corpus_loads() {
        let c = Corpus::shipped().unwrap();
        assert_eq!(c.entries().len(), 9);
        for e in c.entries() {
            let w = c.word(e).unwrap();
            assert_eq!(w.strings(), e.n);
            c.reduction(e).unwrap();
        }
        let b3 = c.get("beta_3").unwrap();
        assert_eq!(c.word(b3).unwrap().len(), 18);
        assert!(c.get("missing").is_none());
    }
}
