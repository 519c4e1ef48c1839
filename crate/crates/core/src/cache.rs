//! On-disk memo of coefficient values, one small text file per entry.
//!
//! Files are named by a SHA-256 digest of the entry key and written through
//! a temporary file and a rename, so concurrent writers of the same key
//! leave one complete file behind.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};
use crate::twopart::TwoPartition;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "EULERGRAPH_CACHE_DIR";

/// Stamp stored with every entry; entries with another stamp are ignored.
pub const CACHE_VERSION: &str = concat!("eulergraph-", env!("CARGO_PKG_VERSION"), "-1");

/// One cached coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub context: String,
    pub key: String,
    pub value: Q,
    pub version: String,
}

impl CacheEntry {
    pub fn new(context: &str, theta: &TwoPartition, value: Q) -> Self {
        CacheEntry {
            context: context.to_string(),
            key: theta.to_string(),
            value,
            version: CACHE_VERSION.to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}\n{}\n{}\n{}\n",
            self.version,
            self.context,
            self.key,
            format_q(&self.value)
        )
    }

    pub fn from_text(text: &str) -> Option<Self> {
        let mut lines = text.lines();
        let version = lines.next()?.to_string();
        let context = lines.next()?.to_string();
        let key = lines.next()?.to_string();
        let value = parse_q(lines.next()?).ok()?;
        Some(CacheEntry {
            context,
            key,
            value,
            version,
        })
    }

    fn file_name(context: &str, key: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(CACHE_VERSION.as_bytes());
        hasher.update(b"\n");
        hasher.update(context.as_bytes());
        hasher.update(b"\n");
        hasher.update(key.as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        format!("{hex}.entry")
    }
}

/// Context tag for plain graph counts.
pub fn plain_context() -> String {
    "plain".to_string()
}

/// Context tag for coloured, weighted graph counts.
pub fn colored_context(r: u32, d: u32) -> String {
    format!("r:{r},d:{d}")
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir).map_err(|source| Error::Io {
            path: dir.clone(),
            source,
        })?;
        Ok(DiskCache { dir })
    }

    /// Opens the directory named by [`CACHE_DIR_ENV`], if set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => DiskCache::open(dir).map(Some),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// A stored value for `(context, Θ)`, if present and current.
    pub fn load(&self, context: &str, theta: &TwoPartition) -> Option<Q> {
        let key = theta.to_string();
        let path = self.dir.join(CacheEntry::file_name(context, &key));
        let entry = CacheEntry::from_text(&fs::read_to_string(path).ok()?)?;
        (entry.version == CACHE_VERSION && entry.context == context && entry.key == key)
            .then_some(entry.value)
    }

    pub fn store(&self, context: &str, theta: &TwoPartition, value: &Q) -> Result<()> {
        let entry = CacheEntry::new(context, theta, value.clone());
        let name = CacheEntry::file_name(context, &entry.key);
        let target = self.dir.join(&name);
        let tmp = self.dir.join(format!(
            "{name}.{}.{:?}.tmp",
            std::process::id(),
            std::thread::current().id()
        ));
        let io = |source| Error::Io {
            path: tmp.clone(),
            source,
        };
        let mut file = fs::File::create(&tmp).map_err(io)?;
        file.write_all(entry.to_text().as_bytes()).map_err(io)?;
        drop(file);
        fs::rename(&tmp, &target).map_err(|source| Error::Io {
            path: target.clone(),
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::open(dir.path()).unwrap();
        let theta = TwoPartition::parse("{[1]:[1,1]}").unwrap();
        assert_eq!(cache.load("plain", &theta), None);
        cache.store("plain", &theta, &q_frac(1, 2)).unwrap();
        assert_eq!(cache.load("plain", &theta), Some(q_frac(1, 2)));
        assert_eq!(cache.load(&colored_context(1, 1), &theta), None);
        cache.store("plain", &theta, &q_frac(1, 2)).unwrap();
        let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(files.len(), 1);
    }

    #[test]
    fn stale_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::open(dir.path()).unwrap();
        let theta = TwoPartition::parse("{[2]:[1]}").unwrap();
        let name = CacheEntry::file_name("plain", &theta.to_string());
        let mut entry = CacheEntry::new("plain", &theta, q_frac(1, 2));
        entry.version = "old".into();
        fs::write(dir.path().join(name), entry.to_text()).unwrap();
        assert_eq!(cache.load("plain", &theta), None);
    }

    #[test]
    fn entry_text() {
        let theta = TwoPartition::parse("{[2]:[1]}").unwrap();
        let e = CacheEntry::new("r:2,d:3", &theta, q_frac(-3, 4));
        assert_eq!(CacheEntry::from_text(&e.to_text()), Some(e));
        assert_eq!(CacheEntry::from_text("only\ntwo"), None);
    }
}
