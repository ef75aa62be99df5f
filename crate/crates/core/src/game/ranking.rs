use std::cmp::Ordering;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{GameError, Mode};

/// One finished session on the leaderboard. Serialized field order is the
/// on-disk line format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScoreEntry {
    pub player: String,
    pub score: u64,
    pub mode: Mode,
    /// Milliseconds since the Unix epoch.
    pub timestamp: u64,
    pub session_id: String,
}

fn ranking_order(a: &ScoreEntry, b: &ScoreEntry) -> Ordering {
    b.score
        .cmp(&a.score)
        .then(a.timestamp.cmp(&b.timestamp))
        .then_with(|| a.session_id.cmp(&b.session_id))
}

/// Sorts descending by score, earlier timestamp first on ties.
pub fn rank(entries: &mut [ScoreEntry]) {
    entries.sort_by(ranking_order);
}

#[derive(Debug, Error)]
pub enum RankingError {
    #[error("ranking file I/O")]
    Io(#[from] io::Error),
    #[error("ranking file line {line} is not a score entry")]
    Corrupt {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Game(#[from] GameError),
}

struct Inner {
    entries: Vec<ScoreEntry>,
    file: File,
}

/// Append-only leaderboard persisted as one JSON object per line.
pub struct RankingStore {
    path: PathBuf,
    inner: Mutex<Inner>,
}

impl RankingStore {
    /// Opens or creates the file and loads existing entries.
    pub fn open(path: impl AsRef<Path>) -> Result<RankingStore, RankingError> {
        let path = path.as_ref().to_path_buf();
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)?;
        }
        let entries = match File::open(&path) {
            Ok(f) => read_entries(f)?,
            Err(e) if e.kind() == io::ErrorKind::NotFound => Vec::new(),
            Err(e) => return Err(e.into()),
        };
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(RankingStore {
            path,
            inner: Mutex::new(Inner { entries, file }),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, entry: &ScoreEntry) -> Result<(), RankingError> {
        let mut line = serde_json::to_string(entry).expect("score entries serialize");
        line.push('\n');
        let mut inner = self.inner.lock().expect("ranking store poisoned");
        inner.file.write_all(line.as_bytes())?;
        inner.file.flush()?;
        inner.entries.push(entry.clone());
        Ok(())
    }

    /// Entries in insertion order.
    pub fn entries(&self) -> Vec<ScoreEntry> {
        self.inner.lock().expect("ranking store poisoned").entries.clone()
    }

    pub fn len(&self) -> usize {
        self.inner.lock().expect("ranking store poisoned").entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ranked entries, optionally filtered by mode.
    pub fn top(&self, mode: Option<Mode>, limit: usize) -> Vec<ScoreEntry> {
        let mut out: Vec<ScoreEntry> = self
            .entries()
            .into_iter()
            .filter(|e| mode.is_none_or(|m| e.mode == m))
            .collect();
        rank(&mut out);
        out.truncate(limit);
        out
    }

    /// Rewrites the file from the loaded entries (temp file, then rename).
    pub fn rewrite(&self) -> Result<(), RankingError> {
        let mut inner = self.inner.lock().expect("ranking store poisoned");
        let tmp = self.path.with_extension("tmp");
        {
            let mut out = io::BufWriter::new(File::create(&tmp)?);
            for e in &inner.entries {
                serde_json::to_writer(&mut out, e).expect("score entries serialize");
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        fs::rename(&tmp, &self.path)?;
        inner.file = OpenOptions::new().append(true).open(&self.path)?;
        Ok(())
    }
}

fn read_entries(f: File) -> Result<Vec<ScoreEntry>, RankingError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry = serde_json::from_str(&line).map_err(|source| RankingError::Corrupt { line: i + 1, source })?;
        out.push(entry);
    }
    Ok(out)
}
