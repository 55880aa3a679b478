//! Catalog cache: reflection walks are cheap at desk scale but not free,
//! so catalogs are persisted as JSON keyed by a content hash of the quiver
//! file bytes and the cap. Stale or unreadable cache files are rebuilt
//! silently; cache writes are best-effort and never fail a command.

use std::path::PathBuf;

use sha2::{Digest, Sha256};

use tiltlab_core::catalog::{exceptional_catalog, Catalog};
use tiltlab_core::quiver::Quiver;

use crate::formats::CatalogCacheDto;
use crate::CliResult;

/// Version written into every cache file; bump on format changes.
pub const CACHE_VERSION: u32 = 1;

/// Cache directory: `TILTLAB_CACHE_DIR` if set, otherwise a subdirectory
/// of the system temp dir.
pub fn cache_dir() -> PathBuf {
    match std::env::var_os("TILTLAB_CACHE_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => std::env::temp_dir().join("tiltlab-cache"),
    }
}

/// Hex content hash identifying a (quiver file, cap) pair.
pub fn cache_key(quiver_bytes: &[u8], cap: i64) -> String {
    let mut hasher = Sha256::new();
    hasher.update(quiver_bytes);
    hasher.update(cap.to_string().as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn cache_path(key: &str) -> PathBuf {
    cache_dir().join(format!("catalog-{key}.json"))
}

/// Loads the catalog from cache when a valid entry exists, otherwise
/// builds it and writes the cache. The boolean reports a cache hit.
pub fn load_or_build(
    quiver_bytes: &[u8],
    q: &Quiver,
    cap: i64,
) -> CliResult<(Catalog, bool)> {
    let key = cache_key(quiver_bytes, cap);
    let path = cache_path(&key);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(dto) = serde_json::from_str::<CatalogCacheDto>(&text) {
            if dto.version == CACHE_VERSION && dto.key == key {
                if let Ok(catalog) = dto.to_catalog() {
                    return Ok((catalog, true));
                }
            }
        }
    }
    let catalog = exceptional_catalog(q, cap)?;
    if let Ok(dto) = CatalogCacheDto::of(&catalog, key) {
        if let Ok(json) = serde_json::to_string_pretty(&dto) {
            let _ = std::fs::create_dir_all(cache_dir());
            let _ = std::fs::write(&path, json + "\n");
        }
    }
    Ok((catalog, false))
}
