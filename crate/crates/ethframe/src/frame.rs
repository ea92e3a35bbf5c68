//! Core frame domain types: addresses, raw frames, format verdicts, and the
//! dissection result shared by the classifier, dissector, builder, and
//! statistics modules.
//!
//! All multi-byte wire fields in this crate are big-endian. The link-layer
//! header common to every format is:
//!
//! ```text
//!  0                   6                  12        14
//! +-------------------+-------------------+---------+----------------
//! | destination (6)   | source (6)        | T/L (2) | format-specific
//! +-------------------+-------------------+---------+----------------
//! ```
//!
//! The two bytes at offset 12 ("T/L") carry an EtherType in Ethernet II
//! frames and a payload byte count in the IEEE 802.3 family; telling those
//! apart is the classifier's job.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Fixed link-layer header length: two addresses plus the type/length field.
pub const HEADER_LEN: usize = 14;

/// Minimum conformant frame length, destination address through data.
/// Shorter frames must be padded with zero bytes before transmission.
pub const MIN_FRAME_LEN: usize = 60;

/// Maximum conformant frame length, destination address through data.
pub const MAX_FRAME_LEN: usize = 1514;

/// Smallest type/length value that denotes an EtherType (1536 decimal).
pub const ETHERTYPE_MIN: u16 = 0x0600;

/// Largest type/length value that denotes an IEEE 802.3 payload length.
/// Values between `LENGTH_MAX` and `ETHERTYPE_MIN` belong to neither scheme.
pub const LENGTH_MAX: u16 = 1500;

/// Maximum payload of an Ethernet II frame.
pub const MAX_PAYLOAD_ETHERNET_II: usize = 1500;

/// Maximum payload of an IEEE 802.3 frame with a plain LLC header; the
/// three LLC octets are carried inside the declared length.
pub const MAX_PAYLOAD_LLC: usize = 1497;

/// Maximum payload of an IEEE 802.3 frame with an LLC/SNAP header; the
/// three LLC octets plus the five SNAP octets eat into the declared length.
pub const MAX_PAYLOAD_SNAP: usize = 1492;

/// Maximum IPX payload of a Novell raw frame (no LLC header to subtract).
pub const MAX_PAYLOAD_NOVELL: usize = 1500;

/// DSAP/SSAP value reserved to signal a SNAP extension after the LLC header.
pub const SNAP_SAP: u8 = 0xAA;

/// LLC control value for an Unnumbered Information frame, the only control
/// value used with SNAP and by far the most common one on real networks.
pub const CONTROL_UI: u8 = 0x03;

// ---------------------------------------------------------------------------
// MAC addresses
// ---------------------------------------------------------------------------

/// A 48-bit IEEE MAC address.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MacAddress(pub [u8; 6]);

impl MacAddress {
    /// The all-ones broadcast address, `ff:ff:ff:ff:ff:ff`.
    pub const BROADCAST: MacAddress = MacAddress([0xFF; 6]);

    /// The all-zero address, used as a placeholder where no address exists.
    pub const ZERO: MacAddress = MacAddress([0; 6]);

    #[must_use]
    pub const fn new(octets: [u8; 6]) -> Self {
        MacAddress(octets)
    }

    #[must_use]
    pub const fn octets(&self) -> [u8; 6] {
        self.0
    }

    /// True for the all-ones broadcast address.
    #[must_use]
    pub fn is_broadcast(&self) -> bool {
        *self == Self::BROADCAST
    }

    /// True for group (multicast) addresses: the I/G bit — the least
    /// significant bit of the first octet — is set. Broadcast is a group
    /// address too.
    #[must_use]
    pub fn is_group(&self) -> bool {
        self.0[0] & 0x01 != 0
    }
}

impl From<[u8; 6]> for MacAddress {
    fn from(octets: [u8; 6]) -> Self {
        MacAddress(octets)
    }
}

impl fmt::Display for MacAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.0;
        write!(
            f,
            "{:02x}:{:02x}:{:02x}:{:02x}:{:02x}:{:02x}",
            o[0], o[1], o[2], o[3], o[4], o[5]
        )
    }
}

/// Error produced when parsing a textual MAC address fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid MAC address syntax: {input:?}")]
pub struct MacParseError {
    input: String,
}

impl FromStr for MacAddress {
    type Err = MacParseError;

    /// Parses the colon-separated form, e.g. `00:b0:d0:49:2a:b9`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MacParseError {
            input: s.to_string(),
        };
        let mut octets = [0u8; 6];
        let mut parts = s.split(':');
        for octet in &mut octets {
            let part = parts.next().ok_or_else(err)?;
            if part.len() != 2 {
                return Err(err());
            }
            *octet = u8::from_str_radix(part, 16).map_err(|_| err())?;
        }
        if parts.next().is_some() {
            return Err(err());
        }
        Ok(MacAddress(octets))
    }
}

// ---------------------------------------------------------------------------
// Raw frames
// ---------------------------------------------------------------------------

/// An unparsed link-layer frame exactly as it appeared on the wire,
/// destination address through the last data/padding byte (no preamble,
/// no frame check sequence).
///
/// Construction is total: any byte string is a `RawFrame`, including ones
/// too short to carry a header. Judging a frame is the classifier's job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFrame {
    bytes: Box<[u8]>,
}

impl RawFrame {
    #[must_use]
    pub fn new(bytes: Vec<u8>) -> Self {
        RawFrame {
            bytes: bytes.into_boxed_slice(),
        }
    }

    #[must_use]
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// True when the frame length falls within the conformant
    /// [`MIN_FRAME_LEN`]..=[`MAX_FRAME_LEN`] envelope. Frames outside the
    /// envelope still classify and dissect; this flag just records the
    /// violation.
    #[must_use]
    pub fn is_length_conformant(&self) -> bool {
        (MIN_FRAME_LEN..=MAX_FRAME_LEN).contains(&self.bytes.len())
    }

    #[must_use]
    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes.into_vec()
    }
}

impl From<Vec<u8>> for RawFrame {
    fn from(bytes: Vec<u8>) -> Self {
        RawFrame::new(bytes)
    }
}

impl From<&[u8]> for RawFrame {
    fn from(bytes: &[u8]) -> Self {
        RawFrame::new(bytes.to_vec())
    }
}

impl AsRef<[u8]> for RawFrame {
    fn as_ref(&self) -> &[u8] {
        &self.bytes
    }
}

// ---------------------------------------------------------------------------
// Format verdicts
// ---------------------------------------------------------------------------

/// Why a frame failed classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvalidReason {
    /// Fewer than [`HEADER_LEN`] bytes: no complete link-layer header.
    TooShort,
    /// Type/length value in the 1501..=1535 band, which is neither a valid
    /// IEEE 802.3 length nor a registered EtherType.
    TypeLengthGap,
    /// Declared IEEE 802.3 length larger than the bytes actually present
    /// after the header.
    LengthExceedsFrame,
    /// Valid length field but fewer than three bytes follow it, so no
    /// complete LLC header fits.
    TruncatedLlc,
    /// LLC header announces a SNAP extension, but fewer than five bytes
    /// follow the LLC header.
    TruncatedSnap,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            InvalidReason::TooShort => "TooShort",
            InvalidReason::TypeLengthGap => "TypeLengthGap",
            InvalidReason::LengthExceedsFrame => "LengthExceedsFrame",
            InvalidReason::TruncatedLlc => "TruncatedLlc",
            InvalidReason::TruncatedSnap => "TruncatedSnap",
        };
        f.write_str(name)
    }
}

/// The four link-layer frame formats that coexist on Ethernet networks,
/// plus an explicit verdict for byte strings that fit none of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameKind {
    /// DIX Ethernet II: type/length field holds an EtherType (>= 0x0600).
    EthernetII,
    /// IEEE 802.3 length field followed by a plain LLC header.
    Ieee8023Llc,
    /// IEEE 802.3 length field followed by LLC + SNAP extension.
    Ieee8023Snap,
    /// Novell's raw 802.3 variant: length field directly followed by an IPX
    /// packet, recognizable by the FF FF in its checksum slot.
    NovellRaw,
    /// None of the above.
    Invalid(InvalidReason),
}

impl FrameKind {
    /// True for the four real formats, false for `Invalid`.
    #[must_use]
    pub fn is_valid(&self) -> bool {
        !matches!(self, FrameKind::Invalid(_))
    }

    /// True for the three formats that interpret the type/length field as a
    /// payload length.
    #[must_use]
    pub fn is_ieee_length_framed(&self) -> bool {
        matches!(
            self,
            FrameKind::Ieee8023Llc | FrameKind::Ieee8023Snap | FrameKind::NovellRaw
        )
    }
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameKind::EthernetII => f.write_str("EthernetII"),
            FrameKind::Ieee8023Llc => f.write_str("Ieee8023Llc"),
            FrameKind::Ieee8023Snap => f.write_str("Ieee8023Snap"),
            FrameKind::NovellRaw => f.write_str("NovellRaw"),
            FrameKind::Invalid(reason) => write!(f, "Invalid({reason})"),
        }
    }
}

// ---------------------------------------------------------------------------
// LLC / SNAP headers
// ---------------------------------------------------------------------------

/// Extracts the 7-bit service access point number from a raw SAP octet.
/// The low-order bit of the octet is an address-type flag (I/G on the
/// DSAP, C/R on the SSAP), not part of the SAP number itself.
#[must_use]
pub fn sap_value(sap: u8) -> u8 {
    sap >> 1
}

/// The three-octet 802.2 LLC header that follows an IEEE 802.3 length field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LlcHeader {
    /// Destination service access point octet, flag bit included.
    pub dsap: u8,
    /// Source service access point octet, flag bit included.
    pub ssap: u8,
    /// Control field. Only the single-octet form is modeled; `0x03` (UI)
    /// covers SNAP and virtually all connectionless traffic.
    pub control: u8,
}

impl LlcHeader {
    /// Individual/Group flag from the DSAP: 0 = individual, 1 = group.
    #[must_use]
    pub fn ig_bit(&self) -> u8 {
        self.dsap & 0x01
    }

    /// Command/Response flag from the SSAP: 0 = command, 1 = response.
    #[must_use]
    pub fn cr_bit(&self) -> u8 {
        self.ssap & 0x01
    }

    /// 7-bit destination SAP number (flag bit stripped).
    #[must_use]
    pub fn dsap_value(&self) -> u8 {
        sap_value(self.dsap)
    }

    /// 7-bit source SAP number (flag bit stripped).
    #[must_use]
    pub fn ssap_value(&self) -> u8 {
        sap_value(self.ssap)
    }

    /// True when both SAPs announce a SNAP extension.
    #[must_use]
    pub fn is_snap(&self) -> bool {
        self.dsap == SNAP_SAP && self.ssap == SNAP_SAP && self.control == CONTROL_UI
    }
}

/// The five-octet SNAP extension that follows an AA/AA/03 LLC header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnapHeader {
    /// Organizationally unique identifier of whoever assigned the protocol
    /// id. All-zero means the id is a plain EtherType.
    pub oui: [u8; 3],
    /// Protocol id within the organization's numbering space.
    pub pid: u16,
}

impl SnapHeader {
    /// True when the OUI is all-zero and [`Self::pid`] is therefore an
    /// EtherType.
    #[must_use]
    pub fn is_ethertype_encapsulation(&self) -> bool {
        self.oui == [0, 0, 0]
    }
}

// ---------------------------------------------------------------------------
// Dissection results
// ---------------------------------------------------------------------------

/// A byte range within a frame, kept as offsets so a dissection can be
/// reported without copying any frame data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub offset: usize,
    pub len: usize,
}

impl Span {
    #[must_use]
    pub const fn new(offset: usize, len: usize) -> Self {
        Span { offset, len }
    }

    /// An empty span anchored at `offset`.
    #[must_use]
    pub const fn empty_at(offset: usize) -> Self {
        Span { offset, len: 0 }
    }

    /// One past the last byte covered.
    #[must_use]
    pub const fn end(&self) -> usize {
        self.offset + self.len
    }

    #[must_use]
    pub const fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The covered bytes of `buf`. Panics if the span exceeds `buf`.
    #[must_use]
    pub fn slice<'a>(&self, buf: &'a [u8]) -> &'a [u8] {
        &buf[self.offset..self.end()]
    }
}

/// The structured view of one frame produced by [`crate::dissect`].
///
/// Borrows the frame bytes rather than copying them; payload and trailer
/// are exposed as [`Span`]s into the original buffer. Every byte of the
/// frame is covered exactly once by header, LLC/SNAP, payload, and trailer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DissectedFrame<'a> {
    pub(crate) bytes: &'a [u8],
    /// Destination address (all-zero when the frame is too short to carry
    /// a header).
    pub dst: MacAddress,
    /// Source address (all-zero when the frame is too short).
    pub src: MacAddress,
    /// Classification verdict for the frame.
    pub kind: FrameKind,
    /// The raw big-endian value at offset 12: an EtherType for Ethernet II,
    /// a payload length for the IEEE 802.3 family, zero when too short.
    pub type_or_length: u16,
    /// LLC header, present only for `Ieee8023Llc` and `Ieee8023Snap`.
    pub llc: Option<LlcHeader>,
    /// SNAP extension, present only for `Ieee8023Snap`.
    pub snap: Option<SnapHeader>,
    /// The upper-layer payload bytes. Empty for invalid frames.
    pub payload_span: Span,
    /// Link-layer padding after the payload, present only when an IEEE
    /// 802.3-family frame carries bytes beyond its declared length.
    pub trailer_span: Option<Span>,
    /// Whether the whole frame sits inside the conformant 60..=1514 length
    /// envelope.
    pub length_conformant: bool,
}

impl<'a> DissectedFrame<'a> {
    /// The complete frame as captured.
    #[must_use]
    pub fn raw(&self) -> &'a [u8] {
        self.bytes
    }

    /// The payload bytes designated by [`Self::payload_span`].
    #[must_use]
    pub fn payload(&self) -> &'a [u8] {
        self.payload_span.slice(self.bytes)
    }

    /// The trailer bytes, if any.
    #[must_use]
    pub fn trailer(&self) -> Option<&'a [u8]> {
        self.trailer_span.map(|span| span.slice(self.bytes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mac_display_is_lowercase_colon_separated() {
        let mac = MacAddress([0x00, 0xB0, 0xD0, 0x49, 0x2A, 0xB9]);
        assert_eq!(mac.to_string(), "00:b0:d0:49:2a:b9");
    }

    #[test]
    fn mac_display_parse_round_trip() {
        let original = MacAddress([0x01, 0x80, 0xC2, 0x00, 0x00, 0x00]);
        let parsed: MacAddress = original.to_string().parse().unwrap();
        assert_eq!(parsed, original);
    }

    #[test]
    fn mac_parse_rejects_malformed_input() {
        for bad in [
            "",
            "00:11:22:33:44",
            "00:11:22:33:44:55:66",
            "0:11:22:33:44:55",
            "00:11:22:33:44:5g",
            "001122334455",
            "00-11-22-33-44-55",
        ] {
            assert!(bad.parse::<MacAddress>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn broadcast_is_group_but_not_vice_versa() {
        assert!(MacAddress::BROADCAST.is_broadcast());
        assert!(MacAddress::BROADCAST.is_group());
        let multicast = MacAddress([0x01, 0x80, 0xC2, 0x00, 0x00, 0x00]);
        assert!(multicast.is_group());
        assert!(!multicast.is_broadcast());
        let unicast = MacAddress([0x00, 0xB0, 0xD0, 0x49, 0x2A, 0xB9]);
        assert!(!unicast.is_group());
        assert!(!unicast.is_broadcast());
    }

    #[test]
    fn raw_frame_accepts_any_bytes() {
        assert_eq!(RawFrame::new(vec![]).len(), 0);
        assert_eq!(RawFrame::new(vec![0xFF; 3]).as_bytes(), &[0xFF; 3]);
        assert_eq!(RawFrame::new(vec![0; 9000]).len(), 9000);
    }

    #[test]
    fn length_conformance_envelope_is_inclusive() {
        assert!(!RawFrame::new(vec![0; 59]).is_length_conformant());
        assert!(RawFrame::new(vec![0; 60]).is_length_conformant());
        assert!(RawFrame::new(vec![0; 1514]).is_length_conformant());
        assert!(!RawFrame::new(vec![0; 1515]).is_length_conformant());
    }

    #[test]
    fn sap_value_strips_the_flag_bit() {
        assert_eq!(sap_value(0x42), 0x21);
        assert_eq!(sap_value(0x43), 0x21);
        assert_eq!(sap_value(0xAA), 0x55);
        assert_eq!(sap_value(0x00), 0x00);
        assert_eq!(sap_value(0xFF), 0x7F);
    }

    #[test]
    fn sap_value_has_exactly_128_distinct_outputs() {
        let mut seen = std::collections::BTreeSet::new();
        for octet in 0u8..=255 {
            seen.insert(sap_value(octet));
        }
        assert_eq!(seen.len(), 128);
        assert_eq!(seen.last(), Some(&0x7F));
    }

    #[test]
    fn llc_flag_bits_come_from_the_low_order_bits() {
        // Exhaustive over both flag bits and a spread of SAP numbers.
        for dsap in 0u8..=255 {
            for ssap in [0x00, 0x01, 0x42, 0x43, 0xAA, 0xFE, 0xFF] {
                let llc = LlcHeader {
                    dsap,
                    ssap,
                    control: CONTROL_UI,
                };
                assert_eq!(llc.ig_bit(), dsap & 1);
                assert_eq!(llc.cr_bit(), ssap & 1);
                assert_eq!(llc.dsap_value(), dsap >> 1);
                assert_eq!(llc.ssap_value(), ssap >> 1);
            }
        }
    }

    #[test]
    fn snap_announcement_requires_both_saps_and_ui_control() {
        let snap = LlcHeader {
            dsap: 0xAA,
            ssap: 0xAA,
            control: 0x03,
        };
        assert!(snap.is_snap());
        let wrong_control = LlcHeader {
            control: 0x00,
            ..snap
        };
        assert!(!wrong_control.is_snap());
        let wrong_sap = LlcHeader { dsap: 0x42, ..snap };
        assert!(!wrong_sap.is_snap());
    }

    #[test]
    fn frame_kind_display_matches_variant_names() {
        assert_eq!(FrameKind::EthernetII.to_string(), "EthernetII");
        assert_eq!(FrameKind::Ieee8023Llc.to_string(), "Ieee8023Llc");
        assert_eq!(FrameKind::Ieee8023Snap.to_string(), "Ieee8023Snap");
        assert_eq!(FrameKind::NovellRaw.to_string(), "NovellRaw");
        assert_eq!(
            FrameKind::Invalid(InvalidReason::TypeLengthGap).to_string(),
            "Invalid(TypeLengthGap)"
        );
    }

    #[test]
    fn span_slicing_and_bounds() {
        let buf = [0u8, 1, 2, 3, 4, 5];
        let span = Span::new(2, 3);
        assert_eq!(span.slice(&buf), &[2, 3, 4]);
        assert_eq!(span.end(), 5);
        assert!(Span::empty_at(6).is_empty());
        assert_eq!(Span::empty_at(6).slice(&buf), &[] as &[u8]);
    }
}
