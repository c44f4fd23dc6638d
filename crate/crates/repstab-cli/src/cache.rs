//! Content-addressed disk cache for expensive constructions.
//!
//! Keys are SHA-256 hashes of a human-readable construction descriptor;
//! values are the serialized construction (JSON bytes). Entries that fail to
//! deserialize are discarded with a warning and recomputed. Writes go through
//! a temporary file and an atomic rename, so concurrent writers of the same
//! (deterministic) content are harmless.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Resolution order: explicit flag, then the REPSTAB_CACHE environment
    /// variable, then a per-user directory under the system temp dir.
    pub fn resolve(flag: Option<PathBuf>) -> Cache {
        let dir = flag
            .or_else(|| std::env::var_os("REPSTAB_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("repstab-cache"));
        Cache { dir }
    }

    pub fn at(dir: &Path) -> Cache {
        Cache { dir: dir.to_path_buf() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(descriptor: &str) -> String {
        let mut h = Sha256::new();
        h.update(descriptor.as_bytes());
        let digest = h.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path_for(&self, descriptor: &str) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::key(descriptor)))
    }

    pub fn load(&self, descriptor: &str) -> Option<Vec<u8>> {
        fs::read(self.path_for(descriptor)).ok()
    }

    pub fn store(&self, descriptor: &str, bytes: &[u8]) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let dest = self.path_for(descriptor);
        let tmp = dest.with_extension(format!("tmp.{}", std::process::id()));
        if fs::write(&tmp, bytes).is_ok() {
            let _ = fs::rename(&tmp, &dest);
        }
    }

    /// Fetch a cached value, or compute, store, and return it. A present but
    /// unreadable entry is dropped and recomputed.
    pub fn get_or_compute<T, F>(&self, descriptor: &str, compute: F) -> T
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> T,
    {
        if let Some(bytes) = self.load(descriptor) {
            match serde_json::from_slice::<T>(&bytes) {
                Ok(v) => return v,
                Err(e) => {
                    eprintln!(
                        "warning: discarding corrupt cache entry for {descriptor:?}: {e}"
                    );
                    let _ = fs::remove_file(self.path_for(descriptor));
                }
            }
        }
        let value = compute();
        if let Ok(bytes) = serde_json::to_vec(&value) {
            self.store(descriptor, &bytes);
        }
        value
    }
}
