//! On-disk idempotent systems: one file `<n>-<field>.idem` per system, in the
//! text format of [`IdempotentSystem::to_text`]. Loading revalidates every
//! invariant.

use std::fs;
use std::path::{Path, PathBuf};

use descent_lie::idempotent::{lift_idempotents, IdempotentSystem};
use descent_lie::{Field, FieldKind};

use crate::error::CliError;
use crate::field::with_field;

pub const EXTENSION: &str = "idem";

pub fn file_name(n: usize, kind: FieldKind) -> String {
    format!("{n}-{kind}.{EXTENSION}")
}

/// `(n, field)` from a cache file name.
pub fn parse_file_name(path: &Path) -> Option<(usize, FieldKind)> {
    if path.extension()? != EXTENSION {
        return None;
    }
    let stem = path.file_stem()?.to_str()?;
    let (n, field) = stem.split_once('-')?;
    Some((n.parse().ok()?, field.parse().ok()?))
}

/// Errors from a cache entry that exists but does not revalidate.
#[derive(Debug)]
pub struct Corrupt {
    pub path: PathBuf,
    pub error: descent_lie::Error,
}

pub enum Lookup<F: Field> {
    Ready(IdempotentSystem<F>),
    Corrupt(Corrupt),
}

/// Loads the system from `dir` when present, otherwise lifts it and stores it there.
pub fn system<F: Field>(dir: Option<&Path>, n: usize) -> Result<Lookup<F>, CliError> {
    let Some(dir) = dir else {
        return Ok(Lookup::Ready(lift_idempotents::<F>(n)?));
    };
    let path = dir.join(file_name(n, FieldKind::of::<F>()));
    if path.exists() {
        let text = fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
        return Ok(match IdempotentSystem::<F>::from_text(&text) {
            Ok(sys) if sys.degree() == n => Lookup::Ready(sys),
            Ok(sys) => Lookup::Corrupt(Corrupt { path, error: descent_lie::Error::DegreeMismatch(sys.degree(), n) }),
            Err(error) => Lookup::Corrupt(Corrupt { path, error }),
        });
    }
    let sys = lift_idempotents::<F>(n)?;
    store(dir, &sys)?;
    Ok(Lookup::Ready(sys))
}

pub fn store<F: Field>(dir: &Path, sys: &IdempotentSystem<F>) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let path = dir.join(file_name(sys.degree(), FieldKind::of::<F>()));
    // write then rename, so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("{EXTENSION}.tmp"));
    fs::write(&tmp, sys.to_text()).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

pub fn build(dir: &Path, n: usize, kind: FieldKind) -> Result<PathBuf, CliError> {
    with_field!(kind, F => {
        let sys = lift_idempotents::<F>(n)?;
        store(dir, &sys)
    })
}

/// Rereads one entry and rechecks all invariants.
pub fn validate(path: &Path) -> Result<(), CliError> {
    let (n, kind) = parse_file_name(path)
        .ok_or_else(|| CliError::Usage(format!("{} is not named <n>-<field>.{EXTENSION}", path.display())))?;
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    with_field!(kind, F => {
        let sys = IdempotentSystem::<F>::from_text(&text)?;
        if sys.degree() != n {
            return Err(descent_lie::Error::DegreeMismatch(sys.degree(), n).into());
        }
        Ok(())
    })
}

/// Cache entries in `dir`, sorted by name.
pub fn entries(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| CliError::io(dir, e))? {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() && parse_file_name(&path).is_some() {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

pub fn remove(path: &Path) -> Result<bool, CliError> {
    match fs::remove_file(path) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(false),
        Err(e) => Err(CliError::io(path, e)),
    }
}
