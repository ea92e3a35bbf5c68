//! Upper-layer payload decoders for the protocols that actually show up in
//! link-layer traffic surveys: ARP over Ethernet II, Spanning Tree BPDUs
//! over LLC, and SNAP protocol identification. Everything else decodes to a
//! named-but-opaque payload; no decoder ever makes a frame unrenderable.

use std::net::Ipv4Addr;

use thiserror::Error;

use crate::frame::{DissectedFrame, FrameKind, LlcHeader, MacAddress, SnapHeader};
use crate::registry::{EtherTypeRegistry, LsapRegistry, Registries};

/// Wire size of an ARP packet with the Ethernet/IPv4 geometry.
pub const ARP_WIRE_LEN: usize = 28;

/// Wire size of a Configuration BPDU.
pub const BPDU_CONFIG_WIRE_LEN: usize = 35;

/// Errors from the payload decoders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    /// ARP needs [`ARP_WIRE_LEN`] bytes of payload.
    #[error("ARP packet truncated: need {ARP_WIRE_LEN} bytes, have {len}")]
    TruncatedArp { len: usize },
    /// Only the Ethernet (6-byte) / IPv4 (4-byte) address geometry is
    /// decoded.
    #[error(
        "unsupported ARP geometry: hardware size {hardware_size}, protocol size {protocol_size}"
    )]
    UnsupportedArpGeometry {
        hardware_size: u8,
        protocol_size: u8,
    },
    /// BPDUs only travel between the spanning-tree SAPs (0x42/0x42).
    #[error("not a BPDU: dsap 0x{dsap:02x}, ssap 0x{ssap:02x}")]
    NotBpdu { dsap: u8, ssap: u8 },
    /// A Configuration BPDU needs [`BPDU_CONFIG_WIRE_LEN`] bytes.
    #[error("BPDU truncated: need {BPDU_CONFIG_WIRE_LEN} bytes, have {len}")]
    TruncatedBpdu { len: usize },
}

// ---------------------------------------------------------------------------
// ARP
// ---------------------------------------------------------------------------

/// A decoded ARP packet (Ethernet/IPv4 geometry only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArpPacket {
    pub hardware_type: u16,
    pub protocol_type: u16,
    pub hardware_size: u8,
    pub protocol_size: u8,
    pub opcode: u16,
    pub sender_mac: MacAddress,
    pub sender_ip: Ipv4Addr,
    pub target_mac: MacAddress,
    pub target_ip: Ipv4Addr,
}

impl ArpPacket {
    /// ARP request opcode.
    pub const OPCODE_REQUEST: u16 = 1;
    /// ARP reply opcode.
    pub const OPCODE_REPLY: u16 = 2;

    /// Short name for the opcode, if it is one of the two defined ones.
    #[must_use]
    pub fn opcode_name(&self) -> Option<&'static str> {
        match self.opcode {
            Self::OPCODE_REQUEST => Some("request"),
            Self::OPCODE_REPLY => Some("reply"),
            _ => None,
        }
    }

    /// Full rendering of the opcode: `request (0x0001)`, `reply (0x0002)`,
    /// or `unknown (0x####)`.
    #[must_use]
    pub fn opcode_text(&self) -> String {
        match self.opcode_name() {
            Some(name) => format!("{name} (0x{:04x})", self.opcode),
            None => format!("unknown (0x{:04x})", self.opcode),
        }
    }
}

/// Decodes the leading [`ARP_WIRE_LEN`] bytes of `payload` as an ARP packet.
/// Bytes beyond that are ignored; on Ethernet II they are frame padding
/// (see [`crate::decode_trailer`]).
pub fn decode_arp(payload: &[u8]) -> Result<ArpPacket, DecodeError> {
    if payload.len() < ARP_WIRE_LEN {
        return Err(DecodeError::TruncatedArp { len: payload.len() });
    }
    let hardware_size = payload[4];
    let protocol_size = payload[5];
    if hardware_size != 6 || protocol_size != 4 {
        return Err(DecodeError::UnsupportedArpGeometry {
            hardware_size,
            protocol_size,
        });
    }
    let ip = |off: usize| -> Ipv4Addr {
        let octets: [u8; 4] = payload[off..off + 4].try_into().unwrap();
        Ipv4Addr::from(octets)
    };
    Ok(ArpPacket {
        hardware_type: u16::from_be_bytes([payload[0], payload[1]]),
        protocol_type: u16::from_be_bytes([payload[2], payload[3]]),
        hardware_size,
        protocol_size,
        opcode: u16::from_be_bytes([payload[6], payload[7]]),
        sender_mac: MacAddress(payload[8..14].try_into().unwrap()),
        sender_ip: ip(14),
        target_mac: MacAddress(payload[18..24].try_into().unwrap()),
        target_ip: ip(24),
    })
}

// ---------------------------------------------------------------------------
// Spanning Tree BPDU
// ---------------------------------------------------------------------------

/// A decoded 802.1D Configuration BPDU.
///
/// The four timer fields are kept raw; on the wire they count in units of
/// 1/256 second (see [`timer_seconds`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StpBpdu {
    pub protocol_identifier: u16,
    pub protocol_version: u8,
    pub bpdu_type: u8,
    pub flags: u8,
    pub root_priority: u16,
    pub root_mac: MacAddress,
    pub root_path_cost: u32,
    pub bridge_priority: u16,
    pub bridge_mac: MacAddress,
    pub port_identifier: u16,
    pub message_age: u16,
    pub max_age: u16,
    pub hello_time: u16,
    pub forward_delay: u16,
}

impl StpBpdu {
    /// Configuration BPDU type code.
    pub const TYPE_CONFIGURATION: u8 = 0x00;
    /// Topology Change Notification BPDU type code.
    pub const TYPE_TOPOLOGY_CHANGE: u8 = 0x80;

    /// Topology Change flag (bit 0).
    #[must_use]
    pub fn topology_change(&self) -> bool {
        self.flags & 0x01 != 0
    }

    /// Topology Change Acknowledgment flag (bit 7).
    #[must_use]
    pub fn topology_change_ack(&self) -> bool {
        self.flags & 0x80 != 0
    }
}

/// Renders a raw 1/256-second timer field as seconds: whole numbers render
/// without a fraction (`20`), anything else as a decimal (`20.5`).
#[must_use]
pub fn timer_seconds(raw: u16) -> String {
    if raw.is_multiple_of(256) {
        (raw / 256).to_string()
    } else {
        (f64::from(raw) / 256.0).to_string()
    }
}

/// Decodes a Configuration BPDU from the payload of an LLC frame addressed
/// to the spanning-tree SAPs.
pub fn decode_stp_bpdu(payload: &[u8], llc: &LlcHeader) -> Result<StpBpdu, DecodeError> {
    if llc.dsap != LsapRegistry::SPANNING_TREE || llc.ssap != LsapRegistry::SPANNING_TREE {
        return Err(DecodeError::NotBpdu {
            dsap: llc.dsap,
            ssap: llc.ssap,
        });
    }
    if payload.len() < BPDU_CONFIG_WIRE_LEN {
        return Err(DecodeError::TruncatedBpdu { len: payload.len() });
    }
    let be16 = |off: usize| u16::from_be_bytes([payload[off], payload[off + 1]]);
    Ok(StpBpdu {
        protocol_identifier: be16(0),
        protocol_version: payload[2],
        bpdu_type: payload[3],
        flags: payload[4],
        root_priority: be16(5),
        root_mac: MacAddress(payload[7..13].try_into().unwrap()),
        root_path_cost: u32::from_be_bytes(payload[13..17].try_into().unwrap()),
        bridge_priority: be16(17),
        bridge_mac: MacAddress(payload[19..25].try_into().unwrap()),
        port_identifier: be16(25),
        message_age: be16(27),
        max_age: be16(29),
        hello_time: be16(31),
        forward_delay: be16(33),
    })
}

// ---------------------------------------------------------------------------
// SNAP identification and the dispatcher
// ---------------------------------------------------------------------------

/// Names the protocol carried by a SNAP frame: an EtherType lookup for the
/// zero OUI, the SNAP registry for known vendor assignments, and an
/// `OUI xx:xx:xx PID 0x####` fallback otherwise.
#[must_use]
pub fn identify_snap_protocol(snap: &SnapHeader, registries: &Registries) -> String {
    if snap.is_ethertype_encapsulation() {
        return registries.ethertype.name(snap.pid);
    }
    if let Some(name) = registries.snap.protocol_lookup(snap.oui, snap.pid) {
        return name.to_string();
    }
    format!(
        "OUI {:02x}:{:02x}:{:02x} PID 0x{:04x}",
        snap.oui[0], snap.oui[1], snap.oui[2], snap.pid
    )
}

/// What [`decode_payload`] understood about a frame's payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodedPayload {
    Arp(ArpPacket),
    StpBpdu(StpBpdu),
    /// Payload identified as `protocol` but not decoded any further.
    Opaque {
        protocol: String,
    },
}

/// Decodes a dissected frame's payload as far as this crate understands it:
/// ARP for Ethernet II type 0x0806, Configuration BPDUs for LLC 0x42/0x42
/// traffic, and a named opaque payload for everything else. Total — decoder
/// failures (truncation, odd geometry) degrade to the opaque form.
#[must_use]
pub fn decode_payload(frame: &DissectedFrame<'_>, registries: &Registries) -> DecodedPayload {
    let opaque = |protocol: String| DecodedPayload::Opaque { protocol };
    match frame.kind {
        FrameKind::EthernetII => {
            if frame.type_or_length == EtherTypeRegistry::ARP {
                if let Ok(arp) = decode_arp(frame.payload()) {
                    return DecodedPayload::Arp(arp);
                }
            }
            opaque(registries.ethertype.name(frame.type_or_length))
        }
        FrameKind::Ieee8023Llc => {
            let llc = frame.llc.expect("LLC frames carry an LLC header");
            if llc.dsap == LsapRegistry::SPANNING_TREE && llc.ssap == LsapRegistry::SPANNING_TREE {
                if let Ok(bpdu) = decode_stp_bpdu(frame.payload(), &llc) {
                    return DecodedPayload::StpBpdu(bpdu);
                }
            }
            opaque(registries.lsap.name(llc.dsap))
        }
        FrameKind::Ieee8023Snap => {
            let snap = frame.snap.expect("SNAP frames carry a SNAP header");
            opaque(identify_snap_protocol(&snap, registries))
        }
        FrameKind::NovellRaw => opaque("IPX".to_string()),
        FrameKind::Invalid(_) => opaque(frame.kind.to_string()),
    }
}
