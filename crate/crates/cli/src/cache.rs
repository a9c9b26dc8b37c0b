//! On-disk cache of count tables, one JSON file per `(engine version, n, k, side)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use skewplane_core::{CountTable, Side, ENGINE_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheKey {
    pub n: u32,
    pub k: u32,
    pub side: Side,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    version: String,
    n: u32,
    k: u32,
    side: Side,
    checksum: String,
    payload: String,
}

fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
    version: String,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, ENGINE_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        TableCache {
            dir: dir.into(),
            version: version.to_string(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: CacheKey) -> PathBuf {
        self.dir
            .join(format!("{}-n{}-k{}.json", key.side, key.n, key.k))
    }

    /// The cached table, or `None` when absent, corrupted, or from another engine version.
    pub fn lookup(&self, key: CacheKey) -> Option<CountTable> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.version != self.version
            || (entry.n, entry.k, entry.side) != (key.n, key.k, key.side)
            || entry.checksum != checksum(&entry.payload)
        {
            return None;
        }
        let table: CountTable = serde_json::from_str(&entry.payload).ok()?;
        ((table.n, table.k, table.side) == (key.n, key.k, key.side)).then_some(table)
    }

    pub fn store(&self, table: &CountTable) -> std::io::Result<()> {
        let key = CacheKey {
            n: table.n,
            k: table.k,
            side: table.side,
        };
        let payload = serde_json::to_string(table)?;
        let entry = CacheEntry {
            version: self.version.clone(),
            n: key.n,
            k: key.k,
            side: key.side,
            checksum: checksum(&payload),
            payload,
        };
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(key);
        let tmp = path.with_extension("json.tmp");
        {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(serde_json::to_string(&entry)?.as_bytes())?;
            file.sync_all()?;
        }
        fs::rename(tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> CountTable {
        let mut t = CountTable::new(5, 2, Side::Above);
        t.add(0, 0, 11).unwrap();
        t.add(1, 1, 4).unwrap();
        t
    }

    fn key() -> CacheKey {
        CacheKey {
            n: 5,
            k: 2,
            side: Side::Above,
        }
    }

    #[test]
    fn store_then_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        assert_eq!(cache.lookup(key()), None);
        cache.store(&table()).unwrap();
        assert_eq!(cache.lookup(key()), Some(table()));
        let other = CacheKey {
            side: Side::Below,
            ..key()
        };
        assert_eq!(cache.lookup(other), None);
    }

    #[test]
    fn corrupted_payload_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        cache.store(&table()).unwrap();
        let path = cache.path_for(key());
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace("11", "12")).unwrap();
        assert_eq!(cache.lookup(key()), None);
        fs::write(&path, "not json").unwrap();
        assert_eq!(cache.lookup(key()), None);
    }

    #[test]
    fn version_bump_invalidates() {
        let dir = tempfile::tempdir().unwrap();
        TableCache::with_version(dir.path(), "old").store(&table()).unwrap();
        assert_eq!(TableCache::with_version(dir.path(), "new").lookup(key()), None);
        assert_eq!(
            TableCache::with_version(dir.path(), "old").lookup(key()),
            Some(table())
        );
    }
}
