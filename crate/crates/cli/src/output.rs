//! Output directory bookkeeping.

use serde::Serialize;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

/// The output directory and the files written into it, in order.
pub struct Out {
    dir: PathBuf,
    files: Vec<String>,
}

impl Out {
    pub fn create(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self { dir: dir.to_path_buf(), files: Vec::new() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn files(&self) -> &[String] {
        &self.files
    }

    pub fn file(&mut self, name: &str) -> io::Result<BufWriter<File>> {
        let f = File::create(self.dir.join(name))?;
        if !self.files.iter().any(|x| x == name) {
            self.files.push(name.to_string());
        }
        Ok(BufWriter::new(f))
    }

    pub fn write_text(&mut self, name: &str, text: &str) -> io::Result<()> {
        let mut f = self.file(name)?;
        f.write_all(text.as_bytes())?;
        f.flush()
    }

    pub fn write_json<T: Serialize>(&mut self, name: &str, v: &T) -> io::Result<()> {
        let mut f = self.file(name)?;
        serde_json::to_writer_pretty(&mut f, v)?;
        f.write_all(b"\n")?;
        f.flush()
    }
}
