use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read};
use std::path::Path;

use anyhow::{Context as _, Result};
use jumbled::{persist, Alphabet, CornerIndex};

/// Reads a text from a file or stdin (`-`) and maps it to canonical `a`/`b`.
/// Leading and trailing whitespace is ignored.
pub fn read_text(path: &str, alphabet: Alphabet) -> Result<Vec<u8>> {
    let mut raw = Vec::new();
    open(path)?.read_to_end(&mut raw).with_context(|| format!("reading {path}"))?;
    let trimmed = raw.trim_ascii();
    let offset = raw.len() - raw.trim_ascii_start().len();
    alphabet.normalize(trimmed).map_err(|err| match err {
        jumbled::Error::InvalidCharacter { position, found } => anyhow::anyhow!(
            "{path}: invalid character {found:?} at byte {}",
            position + offset
        ),
        other => other.into(),
    })
}

pub fn open(path: &str) -> Result<Box<dyn Read>> {
    if path == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        let file = File::open(path).with_context(|| format!("opening {path}"))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

pub fn load_index(path: &Path) -> Result<CornerIndex> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    persist::deserialize(&mut BufReader::new(file))
        .with_context(|| format!("loading index {}", path.display()))
}

pub fn save_index(index: &CornerIndex, path: &Path) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut out = BufWriter::new(file);
    persist::serialize(index, &mut out).with_context(|| format!("writing {}", path.display()))?;
    io::Write::flush(&mut out)?;
    Ok(())
}
