//! On-disk store of lifting verdicts.
//!
//! Plain text: a format tag on the first line, then one verdict per line as
//! `<f key hex> <g key hex> <0|1>`. Files with another tag are ignored.

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::map::MapKey;

pub const CACHE_FORMAT: &str = "finlift-lift-cache v1";

const FILE_NAME: &str = "lifting.txt";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("malformed cache line {line}")]
    Malformed { line: usize },
}

/// A cache directory holding one verdict file.
#[derive(Debug, Clone)]
pub struct LiftCache {
    dir: PathBuf,
}

impl LiftCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LiftCache { dir: dir.into() }
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    /// Stored verdicts; empty if the file is missing or from another format.
    pub fn load(&self) -> Result<Vec<(MapKey, MapKey, bool)>, CacheError> {
        let file = match fs::File::open(self.path()) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut lines = io::BufReader::new(file).lines();
        match lines.next() {
            Some(Ok(tag)) if tag.trim() == CACHE_FORMAT => {}
            _ => return Ok(Vec::new()),
        }
        let mut out = Vec::new();
        for (n, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            out.push(parse_line(&line).ok_or(CacheError::Malformed { line: n + 2 })?);
        }
        Ok(out)
    }

    /// Merges `entries` with what is on disk and rewrites the file.
    pub fn store(&self, entries: &[(MapKey, MapKey, bool)]) -> Result<usize, CacheError> {
        let mut all = self.load().unwrap_or_default();
        all.extend_from_slice(entries);
        all.sort();
        all.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{FILE_NAME}.tmp"));
        write_entries(&tmp, &all)?;
        fs::rename(&tmp, self.path())?;
        Ok(all.len())
    }
}

fn parse_line(line: &str) -> Option<(MapKey, MapKey, bool)> {
    let mut parts = line.split_whitespace();
    let f = MapKey::from_hex(parts.next()?)?;
    let g = MapKey::from_hex(parts.next()?)?;
    let v = match parts.next()? {
        "0" => false,
        "1" => true,
        _ => return None,
    };
    parts.next().is_none().then_some((f, g, v))
}

fn write_entries(path: &Path, entries: &[(MapKey, MapKey, bool)]) -> io::Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "{CACHE_FORMAT}")?;
    for (f, g, v) in entries {
        writeln!(w, "{} {} {}", f.to_hex(), g.to_hex(), u8::from(*v))?;
    }
    w.flush()
}
