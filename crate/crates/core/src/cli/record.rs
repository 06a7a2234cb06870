use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::counter::{BigCount, Method};
use crate::error::{Error, Result};

/// CSV header, fixed for downstream parsers.
pub const CSV_HEADER: [&str; 6] = ["p", "q", "n", "count", "method", "elapsed_ms"];

/// Marks a failed cell in the CSV `count` column.
const ERROR_PREFIX: &str = "error:";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Count(BigCount),
    /// The request was refused or failed; holds the error message.
    Error(String),
}

/// One computed (or refused) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub outcome: Outcome,
    pub method: Method,
    pub elapsed_ms: u64,
}

impl OutputRecord {
    pub fn count(&self) -> Option<&BigCount> {
        match &self.outcome {
            Outcome::Count(c) => Some(c),
            Outcome::Error(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" => Ok(Format::Jsonl),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonRecord {
    p: u32,
    q: u32,
    n: u32,
    count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    error: Option<String>,
    method: Method,
    elapsed_ms: u64,
}

impl From<&OutputRecord> for JsonRecord {
    fn from(r: &OutputRecord) -> Self {
        let (count, error) = match &r.outcome {
            Outcome::Count(c) => (Some(c.to_string()), None),
            Outcome::Error(e) => (None, Some(e.clone())),
        };
        JsonRecord {
            p: r.p,
            q: r.q,
            n: r.n,
            count,
            error,
            method: r.method,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

impl TryFrom<JsonRecord> for OutputRecord {
    type Error = Error;

    fn try_from(j: JsonRecord) -> Result<Self> {
        let outcome = match (j.count, j.error) {
            (Some(c), None) => Outcome::Count(c.parse()?),
            (None, Some(e)) => Outcome::Error(e),
            _ => {
                return Err(Error::InvalidArgument(
                    "record needs exactly one of count and error".into(),
                ))
            }
        };
        Ok(OutputRecord {
            p: j.p,
            q: j.q,
            n: j.n,
            outcome,
            method: j.method,
            elapsed_ms: j.elapsed_ms,
        })
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(e.to_string())
}

pub fn write_records<W: Write>(out: W, format: Format, records: &[OutputRecord]) -> Result<()> {
    match format {
        Format::Csv => write_csv(out, records),
        Format::Jsonl => write_jsonl(out, records),
    }
}

pub fn write_csv<W: Write>(out: W, records: &[OutputRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io_err)?;
    for r in records {
        let count = match &r.outcome {
            Outcome::Count(c) => c.to_string(),
            Outcome::Error(e) => format!("{ERROR_PREFIX}{e}"),
        };
        w.write_record([
            r.p.to_string(),
            r.q.to_string(),
            r.n.to_string(),
            count,
            r.method.to_string(),
            r.elapsed_ms.to_string(),
        ])
        .map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

pub fn write_jsonl<W: Write>(mut out: W, records: &[OutputRecord]) -> Result<()> {
    for r in records {
        let line = serde_json::to_string(&JsonRecord::from(r)).map_err(io_err)?;
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<OutputRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header = rd.headers().map_err(io_err)?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::InvalidArgument(format!(
            "unexpected CSV header {header:?}"
        )));
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(io_err)?;
        let field = |i: usize| row.get(i).unwrap_or_default();
        let int = |i: usize| field(i).parse::<u64>().map_err(io_err);
        let count = field(3);
        let outcome = match count.strip_prefix(ERROR_PREFIX) {
            Some(e) => Outcome::Error(e.to_string()),
            None => Outcome::Count(count.parse()?),
        };
        out.push(OutputRecord {
            p: int(0)? as u32,
            q: int(1)? as u32,
            n: int(2)? as u32,
            outcome,
            method: field(4).parse()?,
            elapsed_ms: int(5)?,
        });
    }
    Ok(out)
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<OutputRecord>> {
    input
        .lines()
        .filter(|l| !matches!(l, Ok(s) if s.trim().is_empty()))
        .map(|line| {
            let line = line.map_err(io_err)?;
            let j: JsonRecord = serde_json::from_str(&line).map_err(io_err)?;
            OutputRecord::try_from(j)
        })
        .collect()
}
