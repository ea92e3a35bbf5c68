//! Encode-side inverse of the dissector: assembles wire-valid frames of all
//! four formats, with correct length fields and zero padding up to the
//! 60-byte minimum.
//!
//! The builders reject precondition violations instead of fixing them up:
//! they serve as the round-trip oracle for the classifier and dissector, so
//! leniency here would mask bugs there. [`build_raw_unchecked`] is the
//! escape hatch for deliberately malformed test frames.

use thiserror::Error;

use crate::frame::{
    LlcHeader, MacAddress, RawFrame, CONTROL_UI, ETHERTYPE_MIN, HEADER_LEN,
    MAX_PAYLOAD_ETHERNET_II, MAX_PAYLOAD_LLC, MAX_PAYLOAD_NOVELL, MAX_PAYLOAD_SNAP, MIN_FRAME_LEN,
    SNAP_SAP,
};

/// Errors from the frame builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    /// The value cannot be an EtherType (it is below 0x0600).
    #[error("0x{0:04x} is not an EtherType (EtherTypes start at 0x0600)")]
    NotAnEtherType(u16),
    /// The payload exceeds the format's cap.
    #[error("payload of {len} bytes exceeds the {max}-byte cap for this format")]
    PayloadTooLarge { len: usize, max: usize },
    /// The LLC header bytes collide with a pattern that classifies as a
    /// different format (AA/AA/03 is SNAP, FF/FF is Novell raw).
    #[error("LLC header {dsap:02x}/{ssap:02x}/{control:02x} is reserved for another frame format")]
    AmbiguousHeader { dsap: u8, ssap: u8, control: u8 },
    /// A raw IPX packet must start with the FF FF pseudo-checksum.
    #[error("IPX payload does not start with the FF FF pseudo-checksum")]
    NotRawIpx,
}

/// Assembles header ‖ parts and zero-pads the result to the 60-byte minimum.
fn assemble(dst: MacAddress, src: MacAddress, type_or_length: u16, parts: &[&[u8]]) -> RawFrame {
    let body_len: usize = parts.iter().map(|p| p.len()).sum();
    let mut bytes = Vec::with_capacity(MIN_FRAME_LEN.max(HEADER_LEN + body_len));
    bytes.extend_from_slice(&dst.octets());
    bytes.extend_from_slice(&src.octets());
    bytes.extend_from_slice(&type_or_length.to_be_bytes());
    for part in parts {
        bytes.extend_from_slice(part);
    }
    if bytes.len() < MIN_FRAME_LEN {
        bytes.resize(MIN_FRAME_LEN, 0x00);
    }
    RawFrame::new(bytes)
}

/// Builds an Ethernet II frame: `dst ‖ src ‖ ether_type ‖ payload`, padded
/// to 60 bytes.
pub fn build_ethernet_ii(
    dst: MacAddress,
    src: MacAddress,
    ether_type: u16,
    payload: &[u8],
) -> Result<RawFrame, BuildError> {
    if ether_type < ETHERTYPE_MIN {
        return Err(BuildError::NotAnEtherType(ether_type));
    }
    if payload.len() > MAX_PAYLOAD_ETHERNET_II {
        return Err(BuildError::PayloadTooLarge {
            len: payload.len(),
            max: MAX_PAYLOAD_ETHERNET_II,
        });
    }
    Ok(assemble(dst, src, ether_type, &[payload]))
}

/// Builds an IEEE 802.3 frame with a plain LLC header; the length field
/// covers the three LLC octets plus the payload.
pub fn build_8023_llc(
    dst: MacAddress,
    src: MacAddress,
    llc: LlcHeader,
    payload: &[u8],
) -> Result<RawFrame, BuildError> {
    if payload.len() > MAX_PAYLOAD_LLC {
        return Err(BuildError::PayloadTooLarge {
            len: payload.len(),
            max: MAX_PAYLOAD_LLC,
        });
    }
    let is_snap_pattern = llc.dsap == SNAP_SAP && llc.ssap == SNAP_SAP && llc.control == CONTROL_UI;
    let is_novell_pattern = llc.dsap == 0xFF && llc.ssap == 0xFF;
    if is_snap_pattern || is_novell_pattern {
        return Err(BuildError::AmbiguousHeader {
            dsap: llc.dsap,
            ssap: llc.ssap,
            control: llc.control,
        });
    }
    let length = (3 + payload.len()) as u16;
    Ok(assemble(
        dst,
        src,
        length,
        &[&[llc.dsap, llc.ssap, llc.control], payload],
    ))
}

/// Builds an IEEE 802.3 frame with an LLC/SNAP header; the length field
/// covers the three LLC octets, the five SNAP octets, and the payload.
pub fn build_8023_snap(
    dst: MacAddress,
    src: MacAddress,
    oui: [u8; 3],
    pid: u16,
    payload: &[u8],
) -> Result<RawFrame, BuildError> {
    if payload.len() > MAX_PAYLOAD_SNAP {
        return Err(BuildError::PayloadTooLarge {
            len: payload.len(),
            max: MAX_PAYLOAD_SNAP,
        });
    }
    let length = (8 + payload.len()) as u16;
    let pid_bytes = pid.to_be_bytes();
    Ok(assemble(
        dst,
        src,
        length,
        &[&[SNAP_SAP, SNAP_SAP, CONTROL_UI], &oui, &pid_bytes, payload],
    ))
}

/// Builds a Novell raw frame: the length field is directly followed by the
/// IPX packet, whose first two bytes must be the FF FF pseudo-checksum.
pub fn build_novell_raw(
    dst: MacAddress,
    src: MacAddress,
    ipx_payload: &[u8],
) -> Result<RawFrame, BuildError> {
    if ipx_payload.len() < 2 || ipx_payload[0] != 0xFF || ipx_payload[1] != 0xFF {
        return Err(BuildError::NotRawIpx);
    }
    if ipx_payload.len() > MAX_PAYLOAD_NOVELL {
        return Err(BuildError::PayloadTooLarge {
            len: ipx_payload.len(),
            max: MAX_PAYLOAD_NOVELL,
        });
    }
    let length = ipx_payload.len() as u16;
    Ok(assemble(dst, src, length, &[ipx_payload]))
}

/// Assembles `dst ‖ src ‖ type_or_length ‖ rest` with no validation and no
/// padding — exactly `14 + rest.len()` bytes. This exists so tests can
/// construct witnesses for every Invalid verdict (gap values, truncated
/// LLC/SNAP, overlong declared lengths).
#[must_use]
pub fn build_raw_unchecked(
    dst: MacAddress,
    src: MacAddress,
    type_or_length: u16,
    rest: &[u8],
) -> RawFrame {
    let mut bytes = Vec::with_capacity(HEADER_LEN + rest.len());
    bytes.extend_from_slice(&dst.octets());
    bytes.extend_from_slice(&src.octets());
    bytes.extend_from_slice(&type_or_length.to_be_bytes());
    bytes.extend_from_slice(rest);
    RawFrame::new(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::frame::{FrameKind, InvalidReason};

    const DST: MacAddress = MacAddress::BROADCAST;
    const SRC: MacAddress = MacAddress([0x00, 0xB0, 0xD0, 0x49, 0x2A, 0xB9]);

    #[test]
    fn ethernet_ii_pads_a_28_byte_payload_to_60_with_18_zeros() {
        let frame = build_ethernet_ii(DST, SRC, 0x0806, &[0xAB; 28]).unwrap();
        assert_eq!(frame.len(), 60);
        assert_eq!(&frame.as_bytes()[0..6], &[0xFF; 6]);
        assert_eq!(&frame.as_bytes()[6..12], &SRC.octets());
        assert_eq!(&frame.as_bytes()[12..14], &[0x08, 0x06]);
        assert_eq!(&frame.as_bytes()[14..42], &[0xAB; 28]);
        assert_eq!(&frame.as_bytes()[42..60], &[0u8; 18]);
        assert_eq!(classify(&frame), FrameKind::EthernetII);
    }

    #[test]
    fn ethernet_ii_boundary_payloads() {
        let empty = build_ethernet_ii(DST, SRC, 0x0800, &[]).unwrap();
        assert_eq!(empty.len(), 60);
        assert_eq!(&empty.as_bytes()[14..], &[0u8; 46]);

        let full = build_ethernet_ii(DST, SRC, 0x0800, &[0x11; 1500]).unwrap();
        assert_eq!(full.len(), 1514);
        assert_eq!(full.as_bytes()[1513], 0x11); // no pad

        assert_eq!(
            build_ethernet_ii(DST, SRC, 0x0800, &[0x11; 1501]),
            Err(BuildError::PayloadTooLarge {
                len: 1501,
                max: 1500
            })
        );
    }

    #[test]
    fn ethernet_ii_rejects_sub_ethertype_values() {
        assert_eq!(
            build_ethernet_ii(DST, SRC, 0x0100, &[]),
            Err(BuildError::NotAnEtherType(0x0100))
        );
        assert_eq!(
            build_ethernet_ii(DST, SRC, 0x05FF, &[]),
            Err(BuildError::NotAnEtherType(0x05FF))
        );
        assert!(build_ethernet_ii(DST, SRC, 0x0600, &[]).is_ok());
    }

    #[test]
    fn llc_length_field_covers_header_plus_payload() {
        let stp = LlcHeader {
            dsap: 0x42,
            ssap: 0x42,
            control: 0x03,
        };
        let frame = build_8023_llc(DST, SRC, stp, &[0x01; 35]).unwrap();
        assert_eq!(frame.len(), 60);
        assert_eq!(&frame.as_bytes()[12..14], &38u16.to_be_bytes());
        assert_eq!(&frame.as_bytes()[14..17], &[0x42, 0x42, 0x03]);
        assert_eq!(&frame.as_bytes()[52..60], &[0u8; 8]);
        assert_eq!(classify(&frame), FrameKind::Ieee8023Llc);

        let ip = LlcHeader {
            dsap: 0x06,
            ssap: 0x06,
            control: 0x03,
        };
        let frame = build_8023_llc(DST, SRC, ip, &[0; 100]).unwrap();
        assert_eq!(&frame.as_bytes()[12..14], &103u16.to_be_bytes());
    }

    #[test]
    fn llc_boundary_payloads() {
        let llc = LlcHeader {
            dsap: 0x06,
            ssap: 0x06,
            control: 0x03,
        };
        let full = build_8023_llc(DST, SRC, llc, &[0x22; 1497]).unwrap();
        assert_eq!(full.len(), 1514);
        assert_eq!(&full.as_bytes()[12..14], &1500u16.to_be_bytes());
        assert_eq!(
            build_8023_llc(DST, SRC, llc, &[0x22; 1498]),
            Err(BuildError::PayloadTooLarge {
                len: 1498,
                max: 1497
            })
        );
    }

    #[test]
    fn llc_rejects_headers_reserved_for_snap_and_novell() {
        let snap_pattern = LlcHeader {
            dsap: 0xAA,
            ssap: 0xAA,
            control: 0x03,
        };
        assert_eq!(
            build_8023_llc(DST, SRC, snap_pattern, &[]),
            Err(BuildError::AmbiguousHeader {
                dsap: 0xAA,
                ssap: 0xAA,
                control: 0x03
            })
        );
        // AA/AA with a different control is honest LLC, not SNAP.
        let aa_non_ui = LlcHeader {
            dsap: 0xAA,
            ssap: 0xAA,
            control: 0x00,
        };
        let frame = build_8023_llc(DST, SRC, aa_non_ui, &[]).unwrap();
        assert_eq!(classify(&frame), FrameKind::Ieee8023Llc);

        // FF/FF collides with the Novell heuristic no matter the control.
        for control in [0x03u8, 0x00, 0x7F] {
            let novell_pattern = LlcHeader {
                dsap: 0xFF,
                ssap: 0xFF,
                control,
            };
            assert_eq!(
                build_8023_llc(DST, SRC, novell_pattern, &[]),
                Err(BuildError::AmbiguousHeader {
                    dsap: 0xFF,
                    ssap: 0xFF,
                    control
                })
            );
        }
    }

    #[test]
    fn snap_length_field_covers_llc_snap_and_payload() {
        let frame = build_8023_snap(
            MacAddress([0x01, 0x00, 0x0C, 0xCC, 0xCC, 0xCC]),
            MacAddress([0x00, 0x03, 0x31, 0x34, 0x73, 0x0B]),
            [0x00, 0x00, 0x0C],
            0x2000,
            &[0x02; 341],
        )
        .unwrap();
        assert_eq!(frame.len(), 363);
        assert_eq!(&frame.as_bytes()[12..14], &349u16.to_be_bytes());
        assert_eq!(&frame.as_bytes()[14..17], &[0xAA, 0xAA, 0x03]);
        assert_eq!(&frame.as_bytes()[17..20], &[0x00, 0x00, 0x0C]);
        assert_eq!(&frame.as_bytes()[20..22], &[0x20, 0x00]);
        assert_eq!(classify(&frame), FrameKind::Ieee8023Snap);
    }

    #[test]
    fn snap_boundary_payloads() {
        let full = build_8023_snap(DST, SRC, [0, 0, 0], 0x0800, &[0x33; 1492]).unwrap();
        assert_eq!(full.len(), 1514);
        assert_eq!(&full.as_bytes()[12..14], &1500u16.to_be_bytes());
        assert_eq!(
            build_8023_snap(DST, SRC, [0, 0, 0], 0x0800, &[0x33; 1493]),
            Err(BuildError::PayloadTooLarge {
                len: 1493,
                max: 1492
            })
        );
        // Empty SNAP payload still pads out to the minimum frame.
        let empty = build_8023_snap(DST, SRC, [0, 0, 0], 0x0800, &[]).unwrap();
        assert_eq!(empty.len(), 60);
        assert_eq!(classify(&empty), FrameKind::Ieee8023Snap);
    }

    #[test]
    fn novell_raw_length_field_equals_ipx_length() {
        let mut ipx = vec![0xFF, 0xFF];
        ipx.extend_from_slice(&[0x55; 28]);
        let frame = build_novell_raw(DST, SRC, &ipx).unwrap();
        assert_eq!(frame.len(), 60);
        assert_eq!(&frame.as_bytes()[12..14], &30u16.to_be_bytes());
        assert_eq!(&frame.as_bytes()[14..16], &[0xFF, 0xFF]);
        assert_eq!(&frame.as_bytes()[44..60], &[0u8; 16]);
        assert_eq!(classify(&frame), FrameKind::NovellRaw);
    }

    #[test]
    fn novell_raw_boundary_payloads() {
        let mut full = vec![0xFF, 0xFF];
        full.extend_from_slice(&[0x44; 1498]);
        let frame = build_novell_raw(DST, SRC, &full).unwrap();
        assert_eq!(frame.len(), 1514);

        full.push(0x44);
        assert_eq!(
            build_novell_raw(DST, SRC, &full),
            Err(BuildError::PayloadTooLarge {
                len: 1501,
                max: 1500
            })
        );
    }

    #[test]
    fn novell_raw_rejects_payloads_without_the_checksum_convention() {
        assert_eq!(build_novell_raw(DST, SRC, &[]), Err(BuildError::NotRawIpx));
        assert_eq!(
            build_novell_raw(DST, SRC, &[0xFF]),
            Err(BuildError::NotRawIpx)
        );
        assert_eq!(
            build_novell_raw(DST, SRC, &[0x00, 0x00, 0x01]),
            Err(BuildError::NotRawIpx)
        );
        assert_eq!(
            build_novell_raw(DST, SRC, &[0xFF, 0xFE, 0x01]),
            Err(BuildError::NotRawIpx)
        );
    }

    #[test]
    fn unchecked_builder_constructs_invalid_witnesses() {
        let gap = build_raw_unchecked(DST, SRC, 1501, &[0u8; 46]);
        assert_eq!(
            classify(&gap),
            FrameKind::Invalid(InvalidReason::TypeLengthGap)
        );

        let truncated_llc = build_raw_unchecked(DST, SRC, 1, &[0x42]);
        assert_eq!(
            classify(&truncated_llc),
            FrameKind::Invalid(InvalidReason::TruncatedLlc)
        );

        let overlong = build_raw_unchecked(DST, SRC, 1400, &[0x42, 0x42, 0x03]);
        assert_eq!(
            classify(&overlong),
            FrameKind::Invalid(InvalidReason::LengthExceedsFrame)
        );

        // No padding: the frame is exactly header + rest.
        assert_eq!(truncated_llc.len(), 15);
    }

    #[test]
    fn all_builders_produce_length_conformant_frames() {
        let llc = LlcHeader {
            dsap: 0x06,
            ssap: 0x06,
            control: 0x03,
        };
        let mut ipx = vec![0xFF, 0xFF];
        ipx.extend_from_slice(&[0; 200]);
        let frames = [
            build_ethernet_ii(DST, SRC, 0x0800, &[]).unwrap(),
            build_ethernet_ii(DST, SRC, 0x0800, &[0; 1500]).unwrap(),
            build_8023_llc(DST, SRC, llc, &[]).unwrap(),
            build_8023_llc(DST, SRC, llc, &[0; 1497]).unwrap(),
            build_8023_snap(DST, SRC, [0, 0, 0], 0x0800, &[]).unwrap(),
            build_8023_snap(DST, SRC, [0, 0, 0], 0x0800, &[0; 1492]).unwrap(),
            build_novell_raw(DST, SRC, &[0xFF, 0xFF]).unwrap(),
            build_novell_raw(DST, SRC, &ipx).unwrap(),
        ];
        for frame in frames {
            assert!(frame.is_length_conformant(), "frame of {}", frame.len());
        }
    }
}
