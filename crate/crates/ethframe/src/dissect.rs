//! Frame dissection: splitting a classified frame into header fields,
//! optional LLC/SNAP headers, payload, and trailer.
//!
//! Dissection is total and zero-copy. The result borrows the input buffer;
//! payload and trailer come back as [`Span`]s. For the three IEEE
//! 802.3-family formats the declared length decides where the payload ends
//! and any remaining bytes become the trailer (pad bytes added to reach the
//! minimum frame size). Ethernet II has no length field, so at this layer
//! its payload runs to the end of the frame; [`decode_trailer`] lets a
//! caller who knows the upper-layer length split the padding off after the
//! fact.

use thiserror::Error;

use crate::classify::classify_bytes;
use crate::frame::{
    DissectedFrame, FrameKind, InvalidReason, LlcHeader, MacAddress, RawFrame, SnapHeader, Span,
    HEADER_LEN, MAX_FRAME_LEN, MIN_FRAME_LEN,
};

/// Dissects a frame into its structural parts. Total: every byte string has
/// a dissection, with invalid frames carrying their verdict and an empty
/// payload.
#[must_use]
pub fn dissect(frame: &RawFrame) -> DissectedFrame<'_> {
    dissect_bytes(frame.as_bytes())
}

/// [`dissect`] for a plain byte slice.
#[must_use]
pub fn dissect_bytes(bytes: &[u8]) -> DissectedFrame<'_> {
    let kind = classify_bytes(bytes);
    let length_conformant = (MIN_FRAME_LEN..=MAX_FRAME_LEN).contains(&bytes.len());

    if kind == FrameKind::Invalid(InvalidReason::TooShort) {
        return DissectedFrame {
            bytes,
            dst: MacAddress::ZERO,
            src: MacAddress::ZERO,
            kind,
            type_or_length: 0,
            llc: None,
            snap: None,
            payload_span: Span::empty_at(0),
            trailer_span: None,
            length_conformant,
        };
    }

    let dst = MacAddress(bytes[0..6].try_into().unwrap());
    let src = MacAddress(bytes[6..12].try_into().unwrap());
    let type_or_length = u16::from_be_bytes([bytes[12], bytes[13]]);

    let mut dissected = DissectedFrame {
        bytes,
        dst,
        src,
        kind,
        type_or_length,
        llc: None,
        snap: None,
        payload_span: Span::empty_at(HEADER_LEN),
        trailer_span: None,
        length_conformant,
    };

    // Offset where the payload starts, per format. The classifier has
    // already guaranteed the bytes up to that offset exist.
    let payload_start = match kind {
        FrameKind::EthernetII => {
            // No length field: everything after the header is payload.
            dissected.payload_span = Span::new(HEADER_LEN, bytes.len() - HEADER_LEN);
            return dissected;
        }
        FrameKind::NovellRaw => HEADER_LEN,
        FrameKind::Ieee8023Llc => {
            dissected.llc = Some(LlcHeader {
                dsap: bytes[14],
                ssap: bytes[15],
                control: bytes[16],
            });
            HEADER_LEN + 3
        }
        FrameKind::Ieee8023Snap => {
            dissected.llc = Some(LlcHeader {
                dsap: bytes[14],
                ssap: bytes[15],
                control: bytes[16],
            });
            dissected.snap = Some(SnapHeader {
                oui: bytes[17..20].try_into().unwrap(),
                pid: u16::from_be_bytes([bytes[20], bytes[21]]),
            });
            HEADER_LEN + 8
        }
        FrameKind::Invalid(_) => return dissected,
    };

    // The declared length counts from just after the length field, so the
    // payload ends at header + declared bytes; the classifier guarantees
    // that end is within the frame. A declared length smaller than the
    // LLC/SNAP overhead leaves an empty payload rather than a negative one.
    let declared_end = HEADER_LEN + usize::from(type_or_length);
    let payload_end = declared_end.max(payload_start);
    dissected.payload_span = Span::new(payload_start, payload_end - payload_start);
    if payload_end < bytes.len() {
        dissected.trailer_span = Some(Span::new(payload_end, bytes.len() - payload_end));
    }
    dissected
}

/// Errors from [`decode_trailer`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrailerError {
    /// Trailer splitting from an upper-layer length only applies to
    /// Ethernet II; the IEEE 802.3 family already carries its own length.
    #[error("frame is {kind}, not EthernetII")]
    NotEthernetII { kind: FrameKind },
    /// The claimed upper-layer length does not fit in the payload.
    #[error("upper-layer length {upper} exceeds the {payload}-byte payload")]
    UpperLengthExceedsPayload { upper: usize, payload: usize },
}

/// Splits an Ethernet II payload into data and trailer, given the payload
/// length the upper-layer protocol actually used. Returns the trailer span,
/// or `None` when the payload had no padding after the upper-layer data.
pub fn decode_trailer(
    frame: &DissectedFrame<'_>,
    upper_layer_length: usize,
) -> Result<Option<Span>, TrailerError> {
    if frame.kind != FrameKind::EthernetII {
        return Err(TrailerError::NotEthernetII { kind: frame.kind });
    }
    let payload = frame.payload_span;
    if upper_layer_length > payload.len {
        return Err(TrailerError::UpperLengthExceedsPayload {
            upper: upper_layer_length,
            payload: payload.len,
        });
    }
    let trailer_len = payload.len - upper_layer_length;
    if trailer_len == 0 {
        return Ok(None);
    }
    Ok(Some(Span::new(
        payload.offset + upper_layer_length,
        trailer_len,
    )))
}
