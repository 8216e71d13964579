//! On-disk results store keyed by a digest of the sorted edge list and the
//! parameter name. One small JSON file per entry.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use pdthrottle::Graph;
use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "PDTHROTTLE_CACHE";

pub fn graph_key(g: &Graph, param: &str) -> String {
    let mut h = Sha256::new();
    h.update(format!("n {}\n", g.order()));
    for (u, v) in g.edges() {
        h.update(format!("{u} {v}\n"));
    }
    h.update(format!("param {param}\n"));
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Cache {
    dir: Option<PathBuf>,
    solver_calls: AtomicUsize,
    hits: AtomicUsize,
}

impl Cache {
    /// `None` disables persistence; every lookup then computes.
    pub fn new(dir: Option<PathBuf>) -> std::io::Result<Self> {
        if let Some(d) = &dir {
            fs::create_dir_all(d)?;
        }
        Ok(Cache {
            dir,
            solver_calls: AtomicUsize::new(0),
            hits: AtomicUsize::new(0),
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn solver_calls(&self) -> usize {
        self.solver_calls.load(Ordering::Relaxed)
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    fn path_for(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Returns the stored value for `(g, param)` or computes and stores it.
    /// Errors from `compute` are passed through and nothing is stored.
    pub fn get_or_compute<T, E>(
        &self,
        g: &Graph,
        param: &str,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        let path = self.path_for(&graph_key(g, param));
        if let Some(p) = &path {
            if let Ok(text) = fs::read_to_string(p) {
                if let Ok(v) = serde_json::from_str(&text) {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                    return Ok(v);
                }
            }
        }
        self.solver_calls.fetch_add(1, Ordering::Relaxed);
        let v = compute()?;
        if let Some(p) = path {
            // write then rename so concurrent readers never see half a file
            let tmp = p.with_extension(format!("tmp{}", std::process::id()));
            if let Ok(text) = serde_json::to_string(&v) {
                if fs::write(&tmp, text).is_ok() {
                    let _ = fs::rename(&tmp, &p);
                }
            }
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pdthrottle::generators::{cycle, path};

    #[test]
    fn keys_depend_on_edges_and_param() {
        let p = path(4).unwrap();
        let c = cycle(4).unwrap();
        assert_ne!(graph_key(&p, "gamma"), graph_key(&c, "gamma"));
        assert_ne!(graph_key(&p, "gamma"), graph_key(&p, "thpdx"));
        assert_eq!(
            graph_key(&p, "gamma"),
            graph_key(&path(4).unwrap(), "gamma")
        );
        assert_eq!(graph_key(&p, "gamma").len(), 64);
    }

    #[test]
    fn memory_only_cache_always_computes() {
        let cache = Cache::new(None).unwrap();
        let g = path(3).unwrap();
        for _ in 0..2 {
            let v: Result<usize, ()> = cache.get_or_compute(&g, "x", || Ok(7));
            assert_eq!(v, Ok(7));
        }
        assert_eq!(cache.solver_calls(), 2);
    }
}
