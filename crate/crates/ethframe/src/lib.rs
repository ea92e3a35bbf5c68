//! Classification, dissection, construction, and capture statistics for the
//! four Ethernet link-layer frame formats that coexist on real networks:
//! Ethernet II, IEEE 802.3 with LLC, IEEE 802.3 with LLC/SNAP, and Novell's
//! raw 802.3 variant.
//!
//! The crux of the problem is that all four formats look identical through
//! byte 11 and differ only in how the two bytes at offset 12 — EtherType or
//! length — and the first payload bytes are interpreted. [`classify`]
//! implements the standard receiver-side decision procedure, [`dissect`]
//! produces a zero-copy structured view, the [`builder`] module is the
//! encode-side inverse, and [`pcap`]/[`stats`]/[`render`] cover capture
//! ingestion, population statistics, and analyzer-style trace output.
//!
//! ```
//! use ethframe::{build_ethernet_ii, classify, dissect, FrameKind, MacAddress};
//!
//! let frame = build_ethernet_ii(
//!     MacAddress::BROADCAST,
//!     MacAddress([0x00, 0xB0, 0xD0, 0x49, 0x2A, 0xB9]),
//!     0x0806,
//!     &[0u8; 28],
//! )
//! .unwrap();
//! assert_eq!(frame.len(), 60); // zero-padded to the minimum frame size
//! assert_eq!(classify(&frame), FrameKind::EthernetII);
//!
//! let view = dissect(&frame);
//! assert_eq!(view.payload_span.len, 46); // pad included: no length field
//! assert!(view.length_conformant);
//! ```

pub mod builder;
pub mod classify;
pub mod decode;
pub mod dissect;
pub mod frame;
pub mod pcap;
pub mod registry;
pub mod render;
pub mod stats;

pub use builder::{
    build_8023_llc, build_8023_snap, build_ethernet_ii, build_novell_raw, build_raw_unchecked,
    BuildError,
};
pub use classify::{classify, classify_bytes};
pub use decode::{
    decode_arp, decode_payload, decode_stp_bpdu, identify_snap_protocol, timer_seconds, ArpPacket,
    DecodeError, DecodedPayload, StpBpdu, ARP_WIRE_LEN, BPDU_CONFIG_WIRE_LEN,
};
pub use dissect::{decode_trailer, dissect, dissect_bytes, TrailerError};
pub use frame::{
    sap_value, DissectedFrame, FrameKind, InvalidReason, LlcHeader, MacAddress, RawFrame,
    SnapHeader, Span, ETHERTYPE_MIN, HEADER_LEN, LENGTH_MAX, MAX_FRAME_LEN,
    MAX_PAYLOAD_ETHERNET_II, MAX_PAYLOAD_LLC, MAX_PAYLOAD_NOVELL, MAX_PAYLOAD_SNAP, MIN_FRAME_LEN,
};
pub use pcap::{
    read_pcap, write_pcap, PcapError, PcapFileHeader, PcapReader, PcapRecord, PcapWriter,
};
pub use registry::{EtherTypeRegistry, LsapRegistry, Registries, SnapRegistry};
pub use render::{hex_string, render_frame, render_trace};
pub use stats::{CaptureStats, KindTally, ReportFormat};
