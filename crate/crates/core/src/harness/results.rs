use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Fingerprint;
use crate::error::{QuasError, Result};
use crate::scoring::DataPoint;

pub const RESULT_FORMAT: &str = "quas-results";
pub const RESULT_VERSION: u32 = 1;

/// First line of every result file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultHeader {
    pub format: String,
    pub version: u32,
    pub fingerprint: Fingerprint,
}

impl ResultHeader {
    pub fn new(fingerprint: Fingerprint) -> Self {
        ResultHeader { format: RESULT_FORMAT.to_string(), version: RESULT_VERSION, fingerprint }
    }
}

/// An instance the backend could not run, e.g. above its qubit cap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkipRecord {
    pub size: usize,
    pub instance_index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Record {
    Point(DataPoint),
    Skip(SkipRecord),
}

impl Record {
    pub fn key(&self) -> (usize, usize) {
        match self {
            Record::Point(p) => (p.size, p.instance_index),
            Record::Skip(s) => (s.size, s.instance_index),
        }
    }
}

/// A line-delimited JSON result file: a header then one record per line.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultFile {
    pub header: ResultHeader,
    pub records: Vec<Record>,
}

impl ResultFile {
    pub fn points(&self) -> impl Iterator<Item = &DataPoint> {
        self.records.iter().filter_map(|r| match r {
            Record::Point(p) => Some(p),
            Record::Skip(_) => None,
        })
    }

    pub fn data_points(&self) -> Vec<DataPoint> {
        self.points().cloned().collect()
    }

    pub fn skipped(&self) -> impl Iterator<Item = &SkipRecord> {
        self.records.iter().filter_map(|r| match r {
            Record::Skip(s) => Some(s),
            Record::Point(_) => None,
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let reader = BufReader::new(File::open(path)?);
        let mut lines = reader.lines().enumerate();
        let header_line = match lines.next() {
            Some((_, line)) => line?,
            None => return Err(QuasError::Data(format!("{} is empty", path.display()))),
        };
        let header: ResultHeader = serde_json::from_str(&header_line)
            .map_err(|e| QuasError::Data(format!("{}: bad header: {e}", path.display())))?;
        if header.format != RESULT_FORMAT || header.version != RESULT_VERSION {
            return Err(QuasError::Data(format!(
                "{}: unsupported format {} v{}",
                path.display(),
                header.format,
                header.version
            )));
        }
        let mut records = Vec::new();
        for (i, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str(&line) {
                Ok(r) => records.push(r),
                // an interrupted write leaves a truncated line; its key is rerun on resume
                Err(e) if e.is_eof() => continue,
                Err(e) => return Err(QuasError::Data(format!("{}:{}: {e}", path.display(), i + 1))),
            }
        }
        Ok(ResultFile { header, records })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        writeln!(w, "{}", serde_json::to_string(&self.header)?)?;
        for r in &self.records {
            writeln!(w, "{}", serde_json::to_string(r)?)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Appends records one line at a time, flushing after each.
pub struct ResultWriter {
    file: File,
}

impl ResultWriter {
    pub fn create(path: impl AsRef<Path>, header: &ResultHeader) -> Result<Self> {
        let mut file = File::create(path)?;
        writeln!(file, "{}", serde_json::to_string(header)?)?;
        file.flush()?;
        Ok(ResultWriter { file })
    }

    pub fn append_to(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut file = OpenOptions::new().read(true).append(true).open(path)?;
        // make sure a truncated last line does not swallow the next record
        let len = file.metadata()?.len();
        if len > 0 {
            use std::io::{Read, Seek, SeekFrom};
            let mut last = [0u8; 1];
            file.seek(SeekFrom::Start(len - 1))?;
            file.read_exact(&mut last)?;
            if last[0] != b'\n' {
                file.write_all(b"\n")?;
            }
        }
        Ok(ResultWriter { file })
    }

    pub fn append(&mut self, record: &Record) -> Result<()> {
        let mut line = serde_json::to_string(record)?;
        line.push('\n');
        self.file.write_all(line.as_bytes())?;
        self.file.flush()?;
        Ok(())
    }
}
