use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::canonical::{parse_json, render, Format};
use crate::oracle::FormPair;
use crate::springer::{Kind, PoincareResult};

/// Bumped whenever the stored document changes meaning.
pub const CACHE_VERSION: u32 = 1;

/// `dir/v{CACHE_VERSION}/{PI|PC}_{d1}_{d2}.json`.
#[derive(Clone, Debug)]
pub struct Cache {
    root: PathBuf,
}

pub fn file_name(pair: FormPair, kind: Kind) -> String {
    format!("{}_{}_{}.json", kind.prefix(), pair.d1(), pair.d2())
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Self {
            root: dir.join(format!("v{CACHE_VERSION}")),
        }
    }

    pub fn path(&self, pair: FormPair, kind: Kind) -> PathBuf {
        self.root.join(file_name(pair, kind))
    }

    /// `Ok(None)` when there is no entry; `Err` when the entry exists but
    /// cannot be read or parsed.
    pub fn load(&self, pair: FormPair, kind: Kind) -> Result<Option<PoincareResult>, String> {
        let path = self.path(pair, kind);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(format!("{}: {e}", path.display())),
        };
        let r = parse_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        if r.pair != pair || r.kind != kind {
            return Err(format!(
                "{}: entry is for a different series",
                path.display()
            ));
        }
        Ok(Some(r))
    }

    /// Stores the value without its series prefix.
    pub fn store(&self, r: &PoincareResult) -> io::Result<()> {
        fs::create_dir_all(&self.root)?;
        let mut bare = r.clone();
        bare.series = None;
        atomic_write(
            &self.path(r.pair, r.kind),
            render(&bare, Format::Json).as_bytes(),
        )
    }
}

/// Writes to a temporary file in the same directory, then renames it over
/// `path`.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}
