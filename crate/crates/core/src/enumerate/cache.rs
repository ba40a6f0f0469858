//! Append-only JSON-lines cache of computed counts.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use super::{count, ContentSpec, CountRecord};
use crate::error::{Error, Result};
use crate::shape::FerrersShape;
use crate::word::PatternSet;

type Key = (FerrersShape, ContentSpec, PatternSet);

/// One [`CountRecord`] per line. Existing lines are loaded on open; new
/// records are appended and never rewritten.
#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    entries: HashMap<Key, u64>,
    file: File,
}

impl CountCache {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CountRecord = serde_json::from_str(&line).map_err(|e| {
                    Error::Parse(format!("{}:{}: {}", path.display(), lineno + 1, e))
                })?;
                entries.insert((rec.shape, rec.content, rec.patterns), rec.count);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(CountCache {
            path,
            entries,
            file,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(
        &self,
        shape: &FerrersShape,
        content: &ContentSpec,
        patterns: &PatternSet,
    ) -> Option<u64> {
        self.entries
            .get(&(shape.clone(), content.clone(), patterns.clone()))
            .copied()
    }

    pub fn insert(&mut self, rec: &CountRecord) -> Result<()> {
        let key = (rec.shape.clone(), rec.content.clone(), rec.patterns.clone());
        if self.entries.contains_key(&key) {
            return Ok(());
        }
        let line = serde_json::to_string(rec)?;
        writeln!(self.file, "{line}")?;
        self.file.flush()?;
        self.entries.insert(key, rec.count);
        Ok(())
    }
}

/// Counting front end shared by the harness: consults the cache (if any)
/// before running the engine and records fresh results.
#[derive(Debug, Default)]
pub struct Counter {
    cache: Option<Mutex<CountCache>>,
}

impl Counter {
    pub fn new() -> Self {
        Counter { cache: None }
    }

    pub fn with_cache(cache: CountCache) -> Self {
        Counter {
            cache: Some(Mutex::new(cache)),
        }
    }

    pub fn record(
        &self,
        shape: &FerrersShape,
        content: &ContentSpec,
        patterns: &PatternSet,
    ) -> Result<CountRecord> {
        if let Some(cache) = &self.cache {
            let hit = cache
                .lock()
                .expect("cache lock")
                .get(shape, content, patterns);
            if let Some(count) = hit {
                return Ok(CountRecord {
                    shape: shape.clone(),
                    content: content.clone(),
                    patterns: patterns.clone(),
                    count,
                });
            }
        }
        let rec = CountRecord {
            shape: shape.clone(),
            content: content.clone(),
            patterns: patterns.clone(),
            count: count(shape, content, patterns)?,
        };
        if let Some(cache) = &self.cache {
            cache.lock().expect("cache lock").insert(&rec)?;
        }
        Ok(rec)
    }

    pub fn count(
        &self,
        shape: &FerrersShape,
        content: &ContentSpec,
        patterns: &PatternSet,
    ) -> Result<u64> {
        self.record(shape, content, patterns).map(|r| r.count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::pats;

    #[test]
    fn warm_cache_skips_and_persists() {
        let dir = std::env::temp_dir().join(format!("shape-wilf-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("counts.jsonl");
        let _ = std::fs::remove_file(&path);
        let shape: FerrersShape = "5,5,4".parse().unwrap();
        let content = ContentSpec::Exact(vec![2, 2, 1]);
        {
            let counter = Counter::with_cache(CountCache::open(&path).unwrap());
            assert_eq!(counter.count(&shape, &content, &pats("231")).unwrap(), 18);
            assert_eq!(counter.count(&shape, &content, &pats("231")).unwrap(), 18);
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        // a planted value proves the second run reads instead of recomputing
        std::fs::write(
            &path,
            r#"{"shape":"5,5,4","content":"2,2,1","patterns":"231","count":999}"#.to_owned() + "\n",
        )
        .unwrap();
        let cache = CountCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        let counter = Counter::with_cache(cache);
        assert_eq!(counter.count(&shape, &content, &pats("231")).unwrap(), 999);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn corrupt_line_is_reported() {
        let path =
            std::env::temp_dir().join(format!("shape-wilf-bad-{}.jsonl", std::process::id()));
        std::fs::write(&path, "not json\n").unwrap();
        assert!(matches!(CountCache::open(&path), Err(Error::Parse(_))));
        std::fs::remove_file(&path).unwrap();
    }
}
