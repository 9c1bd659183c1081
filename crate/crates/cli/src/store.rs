//! Content-addressed certificate directory with a run manifest.
//!
//! Certificates are stored under their hash-derived file name, so writing the
//! same claim twice is a no-op. `manifest.json` lists runs in the order they
//! happened; it holds no timestamps so identical runs give identical files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use pathramsey::certificate::Certificate;
use pathramsey::FORMAT_VERSION;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

pub const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: Vec<String>,
    pub config: RunConfig,
    pub outcome: String,
    pub files: Vec<String>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct Manifest {
    format: u32,
    runs: Vec<RunRecord>,
}

pub struct Store {
    dir: PathBuf,
}

impl Store {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self { dir: dir.to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Writes the certificate under its content name and returns that name.
    /// An existing file with that name holds the same claim and is kept.
    pub fn put(&self, cert: &Certificate) -> io::Result<String> {
        let name = cert.file_name();
        let path = self.dir.join(&name);
        if !path.exists() {
            fs::write(path, cert.to_json() + "\n")?;
        }
        Ok(name)
    }

    /// Writes a side file named after the certificate it belongs to.
    pub fn put_attachment(&self, cert: &Certificate, kind: &str, value: &serde_json::Value) -> io::Result<String> {
        let name = format!("{kind}-{}.json", &cert.hash[..16]);
        let text = serde_json::to_string_pretty(value).expect("json value serializes") + "\n";
        write_if_changed(&self.dir.join(&name), &text)?;
        Ok(name)
    }

    /// Appends a run unless the manifest already ends with an identical one.
    pub fn record(&self, run: RunRecord) -> io::Result<()> {
        let path = self.dir.join(MANIFEST);
        let mut manifest = match fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("{}: {e}", path.display())))?,
            Err(e) if e.kind() == io::ErrorKind::NotFound => Manifest::default(),
            Err(e) => return Err(e),
        };
        manifest.format = FORMAT_VERSION;
        if manifest.runs.last() != Some(&run) {
            manifest.runs.push(run);
        }
        fs::write(&path, serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n")
    }
}

fn write_if_changed(path: &Path, text: &str) -> io::Result<()> {
    if fs::read_to_string(path).is_ok_and(|old| old == text) {
        return Ok(());
    }
    fs::write(path, text)
}
