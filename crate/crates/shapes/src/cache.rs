//! Groebner bases on disk.
//!
//! A basis is stored as a [`GroebnerDoc`] under a file name derived from the
//! SHA-256 of its generators and order, so a change in either misses the
//! cache instead of returning a stale basis.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use shapes_core::groebner::{buchberger, GroebnerBasis, ShapeContext};
use shapes_core::plucker_ideals::{generating_set, IdealPresentation};
use shapes_core::polyring::{OrderKind, RingKind};
use shapes_core::Result;

use crate::format::{groebner_doc, groebner_from_doc, polynomial_doc, GroebnerDoc};

pub const DEFAULT_DIR: &str = ".shapes-cache";

/// Where bases are kept; `None` always recomputes.
#[derive(Clone, Debug)]
pub struct GbCache {
    dir: Option<PathBuf>,
}

impl GbCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GbCache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> Self {
        GbCache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Cache key of an ideal under an order.
    pub fn key(ideal: &IdealPresentation, order: OrderKind) -> String {
        let mut hasher = Sha256::new();
        hasher.update(order.name().as_bytes());
        for g in &ideal.generators {
            hasher.update(b"\n");
            hasher.update(serde_json::to_vec(&polynomial_doc(g)).expect("documents serialize"));
        }
        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, ideal: &IdealPresentation, order: OrderKind) -> Option<PathBuf> {
        let ring = ideal.ring;
        let key = GbCache::key(ideal, order);
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{}-n{}-{}-{}.json", ring.kind.name(), ring.n, order.name(), &key[..16])))
    }

    /// The reduced basis of the Plücker ideal of `(n, ring)` under `order`.
    pub fn basis(&self, n: usize, ring: RingKind, order: OrderKind) -> Result<GroebnerBasis> {
        let ideal = generating_set(n, ring)?;
        let path = self.path(&ideal, order);
        if let Some(gb) = path.as_deref().and_then(load) {
            return Ok(gb);
        }
        let gb = buchberger(&ideal, order)?;
        if let Some(path) = path {
            if let Err(e) = store(&path, &groebner_doc(&gb, false)) {
                eprintln!("warning: could not write {}: {e}", path.display());
            }
        }
        Ok(gb)
    }

    /// A context for rank `n`, with the full-ring basis when asked for.
    pub fn context(&self, n: usize, with_full: bool) -> Result<ShapeContext> {
        let reduced = self.basis(n, RingKind::ReducedPlus, RingKind::ReducedPlus.paper_order())?;
        let full = if with_full { Some(self.basis(n, RingKind::Full, RingKind::Full.paper_order())?) } else { None };
        ShapeContext::from_bases(reduced, full)
    }
}

fn load(path: &Path) -> Option<GroebnerBasis> {
    let text = fs::read_to_string(path).ok()?;
    let parsed = serde_json::from_str::<GroebnerDoc>(&text)
        .map_err(|e| e.to_string())
        .and_then(|doc| groebner_from_doc(&doc).map_err(|e| e.to_string()));
    match parsed {
        Ok(gb) => Some(gb),
        Err(e) => {
            eprintln!("warning: ignoring unreadable cache file {}: {e}", path.display());
            None
        }
    }
}

fn store(path: &Path, doc: &GroebnerDoc) -> std::io::Result<()> {
    let dir = path.parent().expect("cache files live in a directory");
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut file = fs::File::create(&tmp)?;
    file.write_all(serde_json::to_string(doc).expect("documents serialize").as_bytes())?;
    file.sync_all()?;
    fs::rename(&tmp, path)
}
