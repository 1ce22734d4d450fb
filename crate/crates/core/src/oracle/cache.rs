use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::graph::format::{write_host, write_pattern};
use crate::graph::{HostColouredGraph, PatternGraph};

pub const CACHE_VERSION: u32 = 1;

/// Hex SHA-256 of the serialized pattern and host.
pub fn instance_digest(pattern: &PatternGraph, host: &HostColouredGraph) -> String {
    let mut h = Sha256::new();
    h.update(write_pattern(pattern).as_bytes());
    h.update(b"\n--\n");
    h.update(write_host(host).as_bytes());
    hex::encode(h.finalize())
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    version: u32,
    operation: String,
    digest: String,
    value: T,
}

/// Oracle results on disk, one JSON file per `(instance, operation)`.
#[derive(Clone, Debug)]
pub struct OracleCache {
    dir: PathBuf,
}

impl OracleCache {
    pub fn new(dir: impl AsRef<Path>) -> Self {
        OracleCache { dir: dir.as_ref().to_path_buf() }
    }

    fn path(&self, digest: &str, operation: &str) -> PathBuf {
        self.dir.join(format!("v{CACHE_VERSION}")).join(format!("{operation}-{digest}.json"))
    }

    /// Cached value, ignoring entries from other format versions.
    pub fn get<T: DeserializeOwned>(&self, digest: &str, operation: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(digest, operation)).ok()?;
        let e: Entry<T> = serde_json::from_str(&text).ok()?;
        (e.version == CACHE_VERSION && e.digest == digest && e.operation == operation).then_some(e.value)
    }

    pub fn put<T: Serialize>(&self, digest: &str, operation: &str, value: &T) -> Result<()> {
        let p = self.path(digest, operation);
        fs::create_dir_all(p.parent().expect("cache subdir"))?;
        let e = Entry { version: CACHE_VERSION, operation: operation.to_string(), digest: digest.to_string(), value };
        fs::write(p, serde_json::to_string_pretty(&e)?)?;
        Ok(())
    }

    pub fn get_or_compute<T: Serialize + DeserializeOwned>(
        &self,
        digest: &str,
        operation: &str,
        f: impl FnOnce() -> Result<T>,
    ) -> Result<T> {
        if let Some(v) = self.get(digest, operation) {
            return Ok(v);
        }
        let v = f()?;
        self.put(digest, operation, &v)?;
        Ok(v)
    }
}
