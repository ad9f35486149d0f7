//! On-disk memo of the order polynomial table and the Eulerian polynomials,
//! stored as JSON with every integer written as a decimal string.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread;
use std::time::Duration;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::eulerian::gamma_from_z;
use super::{omega_table, z_polys, OmegaTable, ZigzagError};
use crate::exactmath::UniPoly;

pub(crate) mod decimal_table {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let text = Vec::<Vec<String>>::deserialize(d)?;
        text.iter().map(|r| r.iter().map(|x| x.parse::<BigInt>().map_err(D::Error::custom)).collect()).collect()
    }
}

const FORMAT: &str = "1";
const FILE_NAME: &str = "zigzag-cache.json";
const LOCK_NAME: &str = "zigzag-cache.lock";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache file is not valid: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cache is locked by another writer: {0}")]
    Locked(PathBuf),
    #[error(transparent)]
    Zigzag(#[from] ZigzagError),
}

/// The JSON document: `omega[n][m]`, `z[n-1]` (coefficients of `Z_n`),
/// `gamma[n-1]` and version metadata.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    #[serde(with = "decimal_table")]
    pub omega: Vec<Vec<BigInt>>,
    #[serde(with = "decimal_table")]
    pub z: Vec<Vec<BigInt>>,
    #[serde(with = "decimal_table")]
    pub gamma: Vec<Vec<BigInt>>,
    pub meta: BTreeMap<String, String>,
}

fn current_meta() -> BTreeMap<String, String> {
    BTreeMap::from([
        ("format".to_string(), FORMAT.to_string()),
        ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
    ])
}

/// A cache directory. Reads tolerate a missing or stale file; writes take an
/// exclusive lock file and replace the document atomically.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

struct LockGuard(PathBuf);

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    /// The stored document, or `None` when absent or written by another
    /// format version.
    pub fn load(&self) -> Result<Option<CacheFile>, CacheError> {
        let text = match fs::read_to_string(self.path()) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let file: CacheFile = serde_json::from_str(&text)?;
        Ok((file.meta == current_meta()).then_some(file))
    }

    fn lock(&self) -> Result<LockGuard, CacheError> {
        fs::create_dir_all(&self.dir)?;
        let path = self.dir.join(LOCK_NAME);
        for _ in 0..50 {
            match OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(_) => return Ok(LockGuard(path)),
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => thread::sleep(Duration::from_millis(100)),
                Err(e) => return Err(e.into()),
            }
        }
        Err(CacheError::Locked(path))
    }

    fn store(&self, update: impl FnOnce(&mut CacheFile)) -> Result<(), CacheError> {
        let _guard = self.lock()?;
        let mut file = self.load()?.unwrap_or_default();
        update(&mut file);
        file.meta = current_meta();
        let tmp = self.dir.join(format!("{FILE_NAME}.tmp"));
        let mut out = fs::File::create(&tmp)?;
        out.write_all(serde_json::to_string(&file)?.as_bytes())?;
        out.sync_all()?;
        fs::rename(tmp, self.path())?;
        Ok(())
    }

    /// `Ω_n(m)` for `n <= max_n`, `m <= max_m`, computed on a miss.
    pub fn omega(&self, max_n: usize, max_m: usize) -> Result<OmegaTable, CacheError> {
        if let Some(hit) =
            self.load()?.and_then(|f| OmegaTable::from_rows(f.omega)).and_then(|t| t.restrict(max_n, max_m))
        {
            return Ok(hit);
        }
        let table = omega_table(max_n, max_m)?;
        self.store(|f| {
            let larger = f.omega.len() > max_n || f.omega.first().is_some_and(|r| r.len() > max_m + 1);
            if !larger {
                f.omega = table.rows().to_vec();
            }
        })?;
        Ok(table)
    }

    /// `Z_1, ..., Z_{max_n}`, computed (with their gamma vectors) on a miss.
    pub fn z_polys(&self, max_n: usize) -> Result<Vec<UniPoly>, CacheError> {
        if let Some(file) = self.load()? {
            if file.z.len() >= max_n {
                return Ok(file.z[..max_n].iter().cloned().map(UniPoly::from_coeffs).collect());
            }
        }
        let zs = z_polys(max_n)?;
        let gammas = zs
            .iter()
            .enumerate()
            .map(|(i, z)| gamma_from_z(z, i + 1).map(|g| g.gammas))
            .collect::<Result<Vec<_>, _>>()?;
        self.store(|f| {
            if f.z.len() < zs.len() {
                f.z = zs.iter().map(|z| z.coeffs().to_vec()).collect();
                f.gamma = gammas;
            }
        })?;
        Ok(zs)
    }
}
