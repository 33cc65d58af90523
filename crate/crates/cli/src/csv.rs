//! Cost-curve CSV output.
//!
//! The format is a `r,cost` header followed by one row per sample, both
//! columns at 9 significant digits, every line ending in `\n` and nothing
//! after the last row.

use std::io::{self, Write};
use std::path::Path;

use radix_economy_core::EconomySample;
use tempfile::NamedTempFile;

use crate::format::significant;

pub const HEADER: &str = "r,cost";
const DIGITS: usize = 9;

pub fn write_curve<W: Write>(mut out: W, samples: &[EconomySample]) -> io::Result<()> {
    writeln!(out, "{}", HEADER)?;
    for s in samples {
        writeln!(
            out,
            "{},{}",
            significant(s.r, DIGITS),
            significant(s.cost, DIGITS)
        )?;
    }
    out.flush()
}

/// Writes the curve next to `path` and renames it into place, so a failed
/// write never leaves a partial file behind.
pub fn write_curve_file(path: &Path, samples: &[EconomySample]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir)?;
    write_curve(io::BufWriter::new(tmp.as_file_mut()), samples)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
