//! On-disk index format.
//!
//! All integers are little-endian.
//!
//! ```text
//! magic       8 bytes   "JUMBLIDX"
//! version     u32       1
//! n           u64
//! total_a     u64
//! total_b     u64
//! |l_min|     u64
//! |l_max|     u64
//! peak_min    u64       informational
//! peak_max    u64       informational
//! l_min       |l_min| x (x: u64, y: u64)
//! l_max       |l_max| x (x: u64, y: u64)
//! ```

use std::io::{self, Read, Write};

use crate::corner::{CornerIndex, CornerList};
use crate::error::{Error, IndexCheck, Result};
use crate::parikh::ParikhVector;

pub const MAGIC: [u8; 8] = *b"JUMBLIDX";
pub const VERSION: u32 = 1;
pub const HEADER_LEN: u64 = 8 + 4 + 7 * 8;
pub const ENTRY_LEN: u64 = 16;

/// Exact size in bytes of the serialized form of `index`.
pub fn encoded_len(index: &CornerIndex) -> u64 {
    HEADER_LEN + ENTRY_LEN * (index.l_min().len() + index.l_max().len()) as u64
}

pub fn serialize<W: Write>(index: &CornerIndex, sink: &mut W) -> Result<()> {
    let (peak_min, peak_max) = index.peak_working_size();
    let mut buf = Vec::with_capacity(encoded_len(index) as usize);
    buf.extend_from_slice(&MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    for field in [
        index.n(),
        index.total_a(),
        index.total_b(),
        index.l_min().len() as u64,
        index.l_max().len() as u64,
        peak_min,
        peak_max,
    ] {
        buf.extend_from_slice(&field.to_le_bytes());
    }
    for p in index.l_min().iter().chain(index.l_max()) {
        buf.extend_from_slice(&p.x.to_le_bytes());
        buf.extend_from_slice(&p.y.to_le_bytes());
    }
    sink.write_all(&buf)?;
    Ok(())
}

pub fn to_bytes(index: &CornerIndex) -> Vec<u8> {
    let mut buf = Vec::new();
    serialize(index, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

pub fn deserialize<R: Read>(source: &mut R) -> Result<CornerIndex> {
    let mut magic = [0u8; 8];
    read_exact(source, &mut magic)?;
    if magic != MAGIC {
        return Err(Error::Format(format!("bad magic {:?}", String::from_utf8_lossy(&magic))));
    }
    let mut version = [0u8; 4];
    read_exact(source, &mut version)?;
    let version = u32::from_le_bytes(version);
    if version != VERSION {
        return Err(Error::Format(format!("unsupported version {version}")));
    }

    let n = read_u64(source)?;
    let total_a = read_u64(source)?;
    let total_b = read_u64(source)?;
    let len_min = read_u64(source)?;
    let len_max = read_u64(source)?;
    let peak_min = read_u64(source)?;
    let peak_max = read_u64(source)?;

    if total_a.checked_add(total_b) != Some(n) {
        return corrupt(IndexCheck::LengthSum);
    }
    // Each list has at most one entry per a-count; this also caps allocation.
    if len_min == 0 || len_max == 0 || len_min > total_a + 1 || len_max > total_a + 1 {
        return corrupt(IndexCheck::ListSize);
    }
    let l_min = read_list(source, len_min)?;
    let l_max = read_list(source, len_max)?;

    let mut probe = [0u8; 1];
    if source.read(&mut probe)? != 0 {
        return corrupt(IndexCheck::TrailingBytes);
    }

    if !l_min.is_strict_chain() {
        return corrupt(IndexCheck::MinOrder);
    }
    if !l_max.is_strict_chain() {
        return corrupt(IndexCheck::MaxOrder);
    }
    if l_min.last().map(|p| p.x) != Some(total_a) {
        return corrupt(IndexCheck::MinBoundary);
    }
    if l_min.last().is_some_and(|p| p.y > total_b) {
        return corrupt(IndexCheck::MinRange);
    }
    if l_max.first().map(|p| p.x) != Some(0) {
        return corrupt(IndexCheck::MaxBoundary);
    }
    if l_max.last().map(|p| p.y) != Some(total_b) || l_max.last().is_some_and(|p| p.x > total_a) {
        return corrupt(IndexCheck::MaxRange);
    }

    Ok(CornerIndex::from_parts(l_min, l_max, total_a, total_b, (peak_min, peak_max)))
}

pub fn from_bytes(mut bytes: &[u8]) -> Result<CornerIndex> {
    deserialize(&mut bytes)
}

fn corrupt<T>(check: IndexCheck) -> Result<T> {
    Err(Error::CorruptIndex(check))
}

fn read_exact<R: Read>(source: &mut R, buf: &mut [u8]) -> Result<()> {
    source.read_exact(buf).map_err(|e| match e.kind() {
        io::ErrorKind::UnexpectedEof => Error::CorruptIndex(IndexCheck::Truncated),
        _ => Error::Io(e),
    })
}

fn read_u64<R: Read>(source: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    read_exact(source, &mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_list<R: Read>(source: &mut R, len: u64) -> Result<CornerList> {
    let mut points = Vec::with_capacity(len as usize);
    for _ in 0..len {
        let x = read_u64(source)?;
        let y = read_u64(source)?;
        points.push(ParikhVector::new(x, y));
    }
    Ok(CornerList::from_points(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corner::build_index;

    const EXAMPLE: &[u8] = b"aabababbaaabbaabbb";

    fn header_counts(bytes: &[u8]) -> [u64; 5] {
        let mut out = [0; 5];
        for (i, v) in out.iter_mut().enumerate() {
            let at = 12 + 8 * i;
            *v = u64::from_le_bytes(bytes[at..at + 8].try_into().unwrap());
        }
        out
    }

    #[test]
    fn header_of_worked_example() {
        let idx = build_index(EXAMPLE).unwrap();
        let bytes = to_bytes(&idx);
        assert_eq!(&bytes[..8], b"JUMBLIDX");
        assert_eq!(u32::from_le_bytes(bytes[8..12].try_into().unwrap()), 1);
        assert_eq!(header_counts(&bytes), [18, 9, 9, 4, 5]);
        assert_eq!(bytes.len() as u64, 68 + 16 * 9);
        assert_eq!(bytes.len() as u64, encoded_len(&idx));
        // first l_min entry (3, 0)
        assert_eq!(u64::from_le_bytes(bytes[68..76].try_into().unwrap()), 3);
        assert_eq!(u64::from_le_bytes(bytes[76..84].try_into().unwrap()), 0);
    }

    #[test]
    fn header_of_empty_text() {
        let bytes = to_bytes(&build_index(b"").unwrap());
        assert_eq!(header_counts(&bytes), [0, 0, 0, 1, 1]);
    }

    #[test]
    fn round_trip_keeps_peaks() {
        let idx = build_index(EXAMPLE).unwrap();
        let back = from_bytes(&to_bytes(&idx)).unwrap();
        assert_eq!(back, idx);
        assert_eq!(back.peak_working_size(), idx.peak_working_size());
    }

    #[test]
    fn truncation_is_detected_at_every_length() {
        let bytes = to_bytes(&build_index(EXAMPLE).unwrap());
        for cut in 0..bytes.len() {
            match from_bytes(&bytes[..cut]) {
                Err(Error::CorruptIndex(IndexCheck::Truncated)) => {}
                other => panic!("cut at {cut}: {other:?}"),
            }
        }
    }

    #[test]
    fn bad_magic_and_version() {
        let mut bytes = to_bytes(&build_index(EXAMPLE).unwrap());
        bytes[0] = b'X';
        assert!(matches!(from_bytes(&bytes), Err(Error::Format(_))));
        let mut bytes = to_bytes(&build_index(EXAMPLE).unwrap());
        bytes[8] = 2;
        assert!(matches!(from_bytes(&bytes), Err(Error::Format(_))));
    }

    #[test]
    fn unsorted_pairs_rejected() {
        let mut bytes = to_bytes(&build_index(EXAMPLE).unwrap());
        // swap the first two l_min entries
        let (first, second) = (68..84, 84..100);
        let tmp = bytes[first.clone()].to_vec();
        bytes.copy_within(second.clone(), first.start);
        bytes[second].copy_from_slice(&tmp);
        assert!(matches!(
            from_bytes(&bytes),
            Err(Error::CorruptIndex(IndexCheck::MinOrder))
        ));
    }

    #[test]
    fn trailing_bytes_rejected() {
        let mut bytes = to_bytes(&build_index(EXAMPLE).unwrap());
        bytes.push(0);
        assert!(matches!(
            from_bytes(&bytes),
            Err(Error::CorruptIndex(IndexCheck::TrailingBytes))
        ));
    }
}
