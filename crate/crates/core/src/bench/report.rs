use std::fs::File;
use std::io::Write;
use std::path::Path;

use super::experiment::ExperimentRecord;
use crate::error::{Result, WslError};

pub const CSV_HEADER: &str =
    "function,n,eps0,eps1,M,mode,infidelity,success_probability,wall_time_ms,float_floor";

/// Orders records by function id, mode, `n`, then `eps0`.
pub fn sort_records(records: &mut [ExperimentRecord]) {
    records.sort_by(|a, b| {
        a.function
            .cmp(&b.function)
            .then(a.mode.as_str().cmp(b.mode.as_str()))
            .then(a.n.cmp(&b.n))
            .then(a.eps0.total_cmp(&b.eps0))
    });
}

/// Writes sorted records as CSV to any writer.
pub fn write_csv<W: Write>(
    records: &[ExperimentRecord],
    out: W,
) -> std::result::Result<(), csv::Error> {
    let mut sorted = records.to_vec();
    sort_records(&mut sorted);
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    writer.write_record(CSV_HEADER.split(','))?;
    for record in &sorted {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes sorted records to `path`.
pub fn emit_csv(records: &[ExperimentRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| WslError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv(records, file).map_err(|source| WslError::Csv {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads records back from a CSV file written by [`emit_csv`].
pub fn parse_csv(path: &Path) -> Result<Vec<ExperimentRecord>> {
    let wrap = |source| WslError::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut reader = csv::Reader::from_path(path).map_err(wrap)?;
    reader
        .deserialize()
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(wrap)
}
