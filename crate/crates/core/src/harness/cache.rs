//! Append-only NDJSON result cache keyed by the exact graph6 string.
//!
//! No canonicalization happens: an isomorphic graph written with a different
//! labelling is a different key.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use log::warn;

use super::record::VerificationRecord;
use crate::error::Result;

pub const CACHE_ENV: &str = "SYMBREAK_CACHE";
pub const CACHE_FILE: &str = "records.ndjson";

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, VerificationRecord>,
    skipped: usize,
}

impl Cache {
    /// Opens (creating if needed) the cache in `dir`. Unparsable lines are
    /// skipped with a warning; later lines win over earlier ones.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        let mut skipped = 0;
        if path.exists() {
            for (line_no, line) in BufReader::new(File::open(&path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<VerificationRecord>(&line) {
                    Ok(record) => {
                        entries.insert(record.graph6.clone(), record);
                    }
                    Err(e) => {
                        warn!(
                            "{}:{}: skipping corrupt cache line: {e}",
                            path.display(),
                            line_no + 1
                        );
                        skipped += 1;
                    }
                }
            }
        }
        Ok(Cache {
            path,
            entries,
            skipped,
        })
    }

    pub fn lookup(&self, graph6: &str) -> Option<&VerificationRecord> {
        self.entries.get(graph6)
    }

    pub fn store(&mut self, record: &VerificationRecord) -> Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let mut line = serde_json::to_string(record)?;
        line.push('\n');
        file.write_all(line.as_bytes())?;
        self.entries.insert(record.graph6.clone(), record.clone());
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines dropped as corrupt when the cache was opened.
    pub fn skipped(&self) -> usize {
        self.skipped
    }
}
