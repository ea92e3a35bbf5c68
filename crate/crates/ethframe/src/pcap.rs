//! Classic pcap capture-file reading and writing.
//!
//! The format is the tcpdump-family one: a 24-byte global header, then one
//! 16-byte record header plus frame bytes per captured frame.
//!
//! ```text
//! file header: magic(4) major(2) minor(2) thiszone(4) sigfigs(4) snaplen(4) linktype(4)
//! per record:  ts_sec(4) ts_usec(4) incl_len(4) orig_len(4) frame(incl_len)
//! ```
//!
//! Field byte order is whatever the writing host used; readers detect it
//! from the magic (`0xA1B2C3D4` read natively means no swapping, `0xD4C3B2A1`
//! means every header field needs a byte swap). Only link type 1 (Ethernet)
//! is accepted. pcapng and the nanosecond-magic variant are out of scope.

use std::io::{self, Read, Write};

use thiserror::Error;

use crate::frame::RawFrame;

/// Magic of a classic pcap file in the reader's own byte order.
pub const MAGIC_NATIVE: u32 = 0xA1B2_C3D4;

/// Magic as it appears when the file was written on an opposite-endian host.
pub const MAGIC_SWAPPED: u32 = 0xD4C3_B2A1;

/// Size of the global file header.
pub const FILE_HEADER_LEN: usize = 24;

/// Size of each per-record header.
pub const RECORD_HEADER_LEN: usize = 16;

/// Format version written: 2.4, the only one in the wild.
pub const VERSION_MAJOR: u16 = 2;
pub const VERSION_MINOR: u16 = 4;

/// Link type for Ethernet frames, the only one this crate handles.
pub const LINKTYPE_ETHERNET: u32 = 1;

/// Snap length written to new files: effectively "never snapped".
pub const DEFAULT_SNAPLEN: u32 = 65_535;

/// Errors from pcap reading and writing.
#[derive(Debug, Error)]
pub enum PcapError {
    #[error("capture I/O failed: {0}")]
    Io(#[from] io::Error),
    /// The file does not start with either pcap magic.
    #[error("bad magic 0x{0:08x}: not a classic pcap file")]
    BadMagic(u32),
    /// The capture is pcap but not of Ethernet frames.
    #[error("unsupported link type {0}: only Ethernet (link type 1) captures are handled")]
    UnsupportedLinkType(u32),
    /// A record header or body was cut short mid-file. Carries the 0-based
    /// index of the truncated record; records before it were intact.
    #[error("record {0} is truncated")]
    TruncatedRecord(usize),
    /// A record claims more frame bytes than the file's snap length allows.
    #[error("record {index}: {len}-byte frame exceeds the snap length {snaplen}")]
    RecordTooLarge {
        index: usize,
        len: usize,
        snaplen: u32,
    },
}

/// The global pcap file header, with fields normalized to native values
/// (the stored magic is [`MAGIC_NATIVE`] regardless of file byte order).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PcapFileHeader {
    pub magic: u32,
    pub version_major: u16,
    pub version_minor: u16,
    pub thiszone: i32,
    pub sigfigs: u32,
    pub snaplen: u32,
    pub linktype: u32,
}

impl PcapFileHeader {
    /// The header written to new files.
    #[must_use]
    pub fn native(snaplen: u32) -> Self {
        PcapFileHeader {
            magic: MAGIC_NATIVE,
            version_major: VERSION_MAJOR,
            version_minor: VERSION_MINOR,
            thiszone: 0,
            sigfigs: 0,
            snaplen,
            linktype: LINKTYPE_ETHERNET,
        }
    }

    fn to_bytes(self) -> [u8; FILE_HEADER_LEN] {
        let mut bytes = [0u8; FILE_HEADER_LEN];
        bytes[0..4].copy_from_slice(&self.magic.to_ne_bytes());
        bytes[4..6].copy_from_slice(&self.version_major.to_ne_bytes());
        bytes[6..8].copy_from_slice(&self.version_minor.to_ne_bytes());
        bytes[8..12].copy_from_slice(&self.thiszone.to_ne_bytes());
        bytes[12..16].copy_from_slice(&self.sigfigs.to_ne_bytes());
        bytes[16..20].copy_from_slice(&self.snaplen.to_ne_bytes());
        bytes[20..24].copy_from_slice(&self.linktype.to_ne_bytes());
        bytes
    }
}

/// One timestamped frame as stored in a capture.
///
/// `orig_len` is the frame's length on the wire; the stored frame may be
/// shorter when the capture was snapped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcapRecord {
    pub ts_sec: u32,
    pub ts_usec: u32,
    pub orig_len: u32,
    pub frame: RawFrame,
}

impl PcapRecord {
    /// Record for a fully captured frame (`orig_len` = stored length).
    #[must_use]
    pub fn new(ts_sec: u32, ts_usec: u32, frame: RawFrame) -> Self {
        let orig_len = frame.len() as u32;
        PcapRecord {
            ts_sec,
            ts_usec,
            orig_len,
            frame,
        }
    }

    /// Number of frame bytes actually stored in the file.
    #[must_use]
    pub fn incl_len(&self) -> u32 {
        self.frame.len() as u32
    }
}

fn u16_at(bytes: &[u8], off: usize, swapped: bool) -> u16 {
    let value = u16::from_ne_bytes(bytes[off..off + 2].try_into().unwrap());
    if swapped {
        value.swap_bytes()
    } else {
        value
    }
}

fn u32_at(bytes: &[u8], off: usize, swapped: bool) -> u32 {
    let value = u32::from_ne_bytes(bytes[off..off + 4].try_into().unwrap());
    if swapped {
        value.swap_bytes()
    } else {
        value
    }
}

/// Reads as many bytes as possible into `buf`; a return shorter than the
/// buffer means EOF was hit. Lets the record loop tell "clean EOF at a
/// record boundary" apart from "truncated mid-record".
fn read_up_to<R: Read>(reader: &mut R, buf: &mut [u8]) -> io::Result<usize> {
    let mut total = 0;
    while total < buf.len() {
        match reader.read(&mut buf[total..]) {
            Ok(0) => break,
            Ok(n) => total += n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(total)
}

/// Lazy reader over a classic pcap stream.
///
/// Also an [`Iterator`] of `Result<PcapRecord, PcapError>`; iteration ends
/// after clean EOF or the first error (records before a truncation are
/// still yielded).
#[derive(Debug)]
pub struct PcapReader<R> {
    inner: R,
    header: PcapFileHeader,
    swapped: bool,
    index: usize,
    finished: bool,
}

impl<R: Read> PcapReader<R> {
    /// Reads and validates the file header.
    pub fn new(mut inner: R) -> Result<Self, PcapError> {
        let mut head = [0u8; FILE_HEADER_LEN];
        inner.read_exact(&mut head[0..4])?;
        let raw_magic = u32::from_ne_bytes(head[0..4].try_into().unwrap());
        let swapped = match raw_magic {
            MAGIC_NATIVE => false,
            MAGIC_SWAPPED => true,
            other => return Err(PcapError::BadMagic(other)),
        };
        inner.read_exact(&mut head[4..])?;
        let header = PcapFileHeader {
            magic: MAGIC_NATIVE,
            version_major: u16_at(&head, 4, swapped),
            version_minor: u16_at(&head, 6, swapped),
            thiszone: u32_at(&head, 8, swapped) as i32,
            sigfigs: u32_at(&head, 12, swapped),
            snaplen: u32_at(&head, 16, swapped),
            linktype: u32_at(&head, 20, swapped),
        };
        if header.linktype != LINKTYPE_ETHERNET {
            return Err(PcapError::UnsupportedLinkType(header.linktype));
        }
        Ok(PcapReader {
            inner,
            header,
            swapped,
            index: 0,
            finished: false,
        })
    }

    /// The file header, normalized to native field values.
    #[must_use]
    pub fn header(&self) -> &PcapFileHeader {
        &self.header
    }

    /// Whether the file was written on an opposite-endian host.
    #[must_use]
    pub fn is_byte_swapped(&self) -> bool {
        self.swapped
    }

    /// Reads the next record; `Ok(None)` at clean EOF. After an error the
    /// reader is finished and keeps returning `Ok(None)`.
    pub fn next_record(&mut self) -> Result<Option<PcapRecord>, PcapError> {
        if self.finished {
            return Ok(None);
        }
        match self.read_record() {
            Ok(Some(record)) => {
                self.index += 1;
                Ok(Some(record))
            }
            Ok(None) => {
                self.finished = true;
                Ok(None)
            }
            Err(e) => {
                self.finished = true;
                Err(e)
            }
        }
    }

    fn read_record(&mut self) -> Result<Option<PcapRecord>, PcapError> {
        let mut head = [0u8; RECORD_HEADER_LEN];
        let got = read_up_to(&mut self.inner, &mut head)?;
        if got == 0 {
            return Ok(None);
        }
        if got < RECORD_HEADER_LEN {
            return Err(PcapError::TruncatedRecord(self.index));
        }
        let ts_sec = u32_at(&head, 0, self.swapped);
        let ts_usec = u32_at(&head, 4, self.swapped);
        let incl_len = u32_at(&head, 8, self.swapped);
        let orig_len = u32_at(&head, 12, self.swapped);

        // Bound the allocation before trusting incl_len: a corrupt length
        // must not make us reserve gigabytes.
        if incl_len > self.header.snaplen {
            return Err(PcapError::RecordTooLarge {
                index: self.index,
                len: incl_len as usize,
                snaplen: self.header.snaplen,
            });
        }
        let mut body = vec![0u8; incl_len as usize];
        let got = read_up_to(&mut self.inner, &mut body)?;
        if got < body.len() {
            return Err(PcapError::TruncatedRecord(self.index));
        }
        Ok(Some(PcapRecord {
            ts_sec,
            ts_usec,
            orig_len,
            frame: RawFrame::new(body),
        }))
    }
}

impl<R: Read> Iterator for PcapReader<R> {
    type Item = Result<PcapRecord, PcapError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_record().transpose()
    }
}

/// Writer producing classic pcap in native byte order (magic `0xA1B2C3D4`,
/// version 2.4, thiszone 0, sigfigs 0, link type 1).
#[derive(Debug)]
pub struct PcapWriter<W: Write> {
    inner: W,
    snaplen: u32,
    index: usize,
    bytes_written: u64,
}

impl<W: Write> PcapWriter<W> {
    /// Writes the file header with the default snap length.
    pub fn new(inner: W) -> Result<Self, PcapError> {
        Self::with_snaplen(inner, DEFAULT_SNAPLEN)
    }

    /// Writes the file header with an explicit snap length.
    pub fn with_snaplen(mut inner: W, snaplen: u32) -> Result<Self, PcapError> {
        inner.write_all(&PcapFileHeader::native(snaplen).to_bytes())?;
        Ok(PcapWriter {
            inner,
            snaplen,
            index: 0,
            bytes_written: FILE_HEADER_LEN as u64,
        })
    }

    /// Appends one record. Frames longer than the snap length are refused —
    /// this writer stores whole frames, it does not snap them.
    pub fn write_record(&mut self, record: &PcapRecord) -> Result<(), PcapError> {
        let frame_len = record.frame.len();
        if frame_len as u64 > u64::from(self.snaplen) {
            return Err(PcapError::RecordTooLarge {
                index: self.index,
                len: frame_len,
                snaplen: self.snaplen,
            });
        }
        let mut head = [0u8; RECORD_HEADER_LEN];
        head[0..4].copy_from_slice(&record.ts_sec.to_ne_bytes());
        head[4..8].copy_from_slice(&record.ts_usec.to_ne_bytes());
        head[8..12].copy_from_slice(&record.incl_len().to_ne_bytes());
        head[12..16].copy_from_slice(&record.orig_len.to_ne_bytes());
        self.inner.write_all(&head)?;
        self.inner.write_all(record.frame.as_bytes())?;
        self.index += 1;
        self.bytes_written += (RECORD_HEADER_LEN + frame_len) as u64;
        Ok(())
    }

    /// Octets written so far, header included.
    #[must_use]
    pub fn bytes_written(&self) -> u64 {
        self.bytes_written
    }

    pub fn flush(&mut self) -> Result<(), PcapError> {
        self.inner.flush()?;
        Ok(())
    }

    /// Flushes and returns the underlying sink.
    pub fn into_inner(mut self) -> Result<W, PcapError> {
        self.inner.flush()?;
        Ok(self.inner)
    }
}

/// Reads a whole capture into memory, failing on the first malformed record.
pub fn read_pcap<R: Read>(reader: R) -> Result<Vec<PcapRecord>, PcapError> {
    PcapReader::new(reader)?.collect()
}

/// Writes a whole capture; returns the octet count written.
pub fn write_pcap<W: Write>(records: &[PcapRecord], writer: W) -> Result<u64, PcapError> {
    let mut writer = PcapWriter::new(writer)?;
    for record in records {
        writer.write_record(record)?;
    }
    writer.flush()?;
    Ok(writer.bytes_written())
}
