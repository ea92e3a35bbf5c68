//! Frame format classification.
//!
//! All four link-layer formats put the interesting two bytes at offset 12,
//! and the formats were designed (and later retrofitted) so that a receiver
//! can tell them apart from frame content alone:
//!
//! 1. fewer than 14 bytes → `Invalid(TooShort)`: no complete header.
//! 2. value >= 0x0600 → `EthernetII`: the value is an EtherType.
//! 3. value in 1501..=1535 → `Invalid(TypeLengthGap)`: too large for an
//!    IEEE 802.3 length, too small for an EtherType.
//! 4. value exceeds the bytes present after the header →
//!    `Invalid(LengthExceedsFrame)`: the declared payload cannot fit.
//! 5. next two bytes are FF FF → `NovellRaw`: a standards-conformant LLC
//!    header can never start with FF FF (that would make both SAPs the
//!    global broadcast SAP), while a raw IPX packet always starts with
//!    FF FF in its checksum slot.
//! 6. fewer than 3 bytes follow the length field → `Invalid(TruncatedLlc)`.
//! 7. LLC header is AA AA 03 → SNAP: `Ieee8023Snap` when the five
//!    extension bytes are present, `Invalid(TruncatedSnap)` otherwise.
//! 8. anything else → `Ieee8023Llc`.
//!
//! The rules are evaluated strictly in this order; earlier verdicts win.

use crate::frame::{
    FrameKind, InvalidReason, RawFrame, CONTROL_UI, ETHERTYPE_MIN, HEADER_LEN, LENGTH_MAX, SNAP_SAP,
};

/// Number of bytes following the LLC header that a SNAP extension needs:
/// three OUI octets plus a two-octet protocol id.
const SNAP_EXTENSION_LEN: usize = 5;

/// Classifies a frame into one of the four formats, or `Invalid` with the
/// reason it fits none of them. Total: never fails, never panics, regardless
/// of input bytes.
#[must_use]
pub fn classify(frame: &RawFrame) -> FrameKind {
    classify_bytes(frame.as_bytes())
}

/// [`classify`] for a plain byte slice.
#[must_use]
pub fn classify_bytes(bytes: &[u8]) -> FrameKind {
    if bytes.len() < HEADER_LEN {
        return FrameKind::Invalid(InvalidReason::TooShort);
    }

    let type_or_length = u16::from_be_bytes([bytes[12], bytes[13]]);
    if type_or_length >= ETHERTYPE_MIN {
        return FrameKind::EthernetII;
    }
    if type_or_length > LENGTH_MAX {
        return FrameKind::Invalid(InvalidReason::TypeLengthGap);
    }

    let after_header = &bytes[HEADER_LEN..];
    if usize::from(type_or_length) > after_header.len() {
        return FrameKind::Invalid(InvalidReason::LengthExceedsFrame);
    }

    if after_header.len() >= 2 && after_header[0] == 0xFF && after_header[1] == 0xFF {
        return FrameKind::NovellRaw;
    }
    if after_header.len() < 3 {
        return FrameKind::Invalid(InvalidReason::TruncatedLlc);
    }

    let is_snap =
        after_header[0] == SNAP_SAP && after_header[1] == SNAP_SAP && after_header[2] == CONTROL_UI;
    if is_snap {
        if after_header.len() < 3 + SNAP_EXTENSION_LEN {
            return FrameKind::Invalid(InvalidReason::TruncatedSnap);
        }
        return FrameKind::Ieee8023Snap;
    }

    FrameKind::Ieee8023Llc
}
