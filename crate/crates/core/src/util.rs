//! Small shared helpers: stable hashing, byte-order I/O, hex digests.

use sha2::{Digest, Sha256};
use std::io::{self, Read, Write};

/// SplitMix64 finalizer. Stable across platforms and releases; used wherever
/// a value must be mixed into a reproducible stream selector.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Combine two values into one well-mixed 64-bit seed.
pub fn hash64(a: u64, b: u64) -> u64 {
    splitmix64(a ^ splitmix64(b))
}

/// FNV-1a over raw bytes. Stable alternative to the std hasher (which is
/// randomized per process) for content-addressed ids and n-gram indexes.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

/// SHA-256 of a byte slice.
pub fn sha256(bytes: &[u8]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    hasher.finalize().into()
}

/// SHA-256 of a file's contents, hex-encoded.
pub fn sha256_file_hex(path: &std::path::Path) -> io::Result<String> {
    let mut f = std::fs::File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = f.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}

/// Incremental SHA-256 wrapper so binary writers can checksum as they go.
pub struct Sha256Writer<W: Write> {
    inner: W,
    hasher: Sha256,
}

impl<W: Write> Sha256Writer<W> {
    pub fn new(inner: W) -> Self {
        Self { inner, hasher: Sha256::new() }
    }

    pub fn digest(&self) -> [u8; 32] {
        self.hasher.clone().finalize().into()
    }

    pub fn into_inner(self) -> W {
        self.inner
    }
}

impl<W: Write> Write for Sha256Writer<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.hasher.update(&buf[..n]);
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

// Little-endian read/write helpers for the binary file formats.

pub fn write_u32<W: Write>(w: &mut W, v: u32) -> io::Result<()> {
    w.write_all(&v.to_le_bytes())
}

pub fn write_u64<W: Write>(w: &mut W, v: u64) -> io::Result<()> {
    w.write_all(&v.to_le_bytes())
}

pub fn write_f32<W: Write>(w: &mut W, v: f32) -> io::Result<()> {
    w.write_all(&v.to_le_bytes())
}

pub fn read_u32(buf: &[u8], pos: &mut usize) -> io::Result<u32> {
    let b = take(buf, pos, 4)?;
    Ok(u32::from_le_bytes(b.try_into().unwrap()))
}

pub fn read_u64(buf: &[u8], pos: &mut usize) -> io::Result<u64> {
    let b = take(buf, pos, 8)?;
    Ok(u64::from_le_bytes(b.try_into().unwrap()))
}

pub fn read_f32(buf: &[u8], pos: &mut usize) -> io::Result<f32> {
    let b = take(buf, pos, 4)?;
    Ok(f32::from_le_bytes(b.try_into().unwrap()))
}

pub fn take<'a>(buf: &'a [u8], pos: &mut usize, n: usize) -> io::Result<&'a [u8]> {
    if *pos + n > buf.len() {
        return Err(io::Error::new(io::ErrorKind::UnexpectedEof, "truncated buffer"));
    }
    let s = &buf[*pos..*pos + n];
    *pos += n;
    Ok(s)
}

/// Atomically replace `path` with `bytes` (temp file + rename in the same
/// directory, so a crash never leaves a half-written file).
pub fn atomic_write(path: &std::path::Path, bytes: &[u8]) -> io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| std::path::Path::new("."));
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp{}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("file"),
        std::process::id()
    ));
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash64_mixes_both_arguments() {
        assert_ne!(hash64(1, 2), hash64(2, 1));
        assert_ne!(hash64(0, 1), hash64(0, 2));
        assert_eq!(hash64(7, 9), hash64(7, 9));
    }

    #[test]
    fn fnv_known_vector() {
        // FNV-1a("") is the offset basis.
        assert_eq!(fnv1a64(b""), 0xcbf2_9ce4_8422_2325);
        assert_ne!(fnv1a64(b"a"), fnv1a64(b"b"));
    }

    #[test]
    fn le_roundtrip() {
        let mut buf = Vec::new();
        write_u32(&mut buf, 0xdead_beef).unwrap();
        write_u64(&mut buf, u64::MAX - 1).unwrap();
        write_f32(&mut buf, -1.5).unwrap();
        let mut pos = 0;
        assert_eq!(read_u32(&buf, &mut pos).unwrap(), 0xdead_beef);
        assert_eq!(read_u64(&buf, &mut pos).unwrap(), u64::MAX - 1);
        assert_eq!(read_f32(&buf, &mut pos).unwrap(), -1.5);
        assert!(read_u32(&buf, &mut pos).is_err());
    }
}
