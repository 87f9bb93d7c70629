//! CSV emission with a provenance comment block, and atomic file writes.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::config::Provenance;
use crate::error::CliError;

/// Columns of `f64`, all rows the same width.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }
}

/// Comment block, single header row and `{:e}`-formatted values.
pub fn render(provenance: &Provenance, table: &Table) -> Vec<u8> {
    let mut out = Vec::new();
    writeln!(out, "# plasmon-itm {}", env!("CARGO_PKG_VERSION")).unwrap();
    writeln!(out, "# command: {}", provenance.command).unwrap();
    writeln!(out, "# config-hash: {}", provenance.hash()).unwrap();
    for (k, v) in &provenance.entries {
        writeln!(out, "# {k} = {v}").unwrap();
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.header).unwrap();
    for row in &table.rows {
        debug_assert_eq!(row.len(), table.header.len());
        w.write_record(row.iter().map(|v| format!("{v:e}"))).unwrap();
    }
    w.into_inner().expect("in-memory writer")
}

/// Writes `bytes` to `path` through a sibling temporary file and a rename, so
/// a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io_err)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    let result = fs::write(&tmp, bytes).and_then(|_| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io_err)
}

/// Where a table goes: a file under the output directory, or standard output.
pub fn emit(out_dir: Option<&Path>, name: &str, provenance: &Provenance, table: &Table) -> Result<(), CliError> {
    let bytes = render(provenance, table);
    match out_dir {
        Some(dir) => write_atomic(&dir.join(name), &bytes),
        None => {
            let stdout = io::stdout();
            let mut lock = io::BufWriter::new(stdout.lock());
            lock.write_all(&bytes)
                .and_then(|_| lock.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}
