//! Human-readable trace rendering in the classic protocol-analyzer style:
//! one titled block per layer, two-space-indented `Field: value` lines, and
//! hex dumps for whatever is not decoded, so that every byte of the frame
//! is accounted for somewhere in the output.

use std::fmt::Write as _;

use crate::decode::timer_seconds;
use crate::decode::{decode_payload, ArpPacket, DecodedPayload, StpBpdu, ARP_WIRE_LEN};
use crate::dissect::decode_trailer;
use crate::frame::{
    DissectedFrame, FrameKind, LlcHeader, MacAddress, SnapHeader, CONTROL_UI, HEADER_LEN,
};
use crate::registry::Registries;

/// Renders one frame as an indented text trace. The decoded payload is
/// whatever [`decode_payload`] produced for the same frame.
#[must_use]
pub fn render_trace(
    frame: &DissectedFrame<'_>,
    decoded: &DecodedPayload,
    registries: &Registries,
) -> String {
    let mut out = String::new();
    if let FrameKind::Invalid(reason) = frame.kind {
        let _ = writeln!(out, "Invalid frame ({reason})");
        if frame.raw().len() < HEADER_LEN {
            push_hex_line(&mut out, 1, "Data", frame.raw());
        } else {
            push_mac_line(&mut out, "Destination", frame.dst);
            push_mac_line(&mut out, "Source", frame.src);
            let _ = writeln!(out, "  Type/Length: 0x{:04x}", frame.type_or_length);
            push_hex_line(&mut out, 1, "Data", &frame.raw()[HEADER_LEN..]);
        }
        return out;
    }

    render_link_block(&mut out, frame, decoded, registries);
    if let Some(llc) = frame.llc {
        render_llc_block(&mut out, &llc, frame.snap.as_ref(), registries);
    }
    match decoded {
        DecodedPayload::Arp(arp) => render_arp_block(&mut out, arp, registries),
        DecodedPayload::StpBpdu(bpdu) => {
            render_stp_block(&mut out, bpdu);
            // Anything the 35-byte BPDU did not consume is dumped so the
            // whole payload stays visible.
            let rest = &frame.payload()[crate::decode::BPDU_CONFIG_WIRE_LEN..];
            if !rest.is_empty() {
                push_hex_line(&mut out, 1, "Data", rest);
            }
        }
        DecodedPayload::Opaque { protocol } => {
            if !frame.payload().is_empty() {
                let _ = writeln!(out, "{protocol}");
                push_hex_line(&mut out, 1, "Data", frame.payload());
            }
        }
    }
    out
}

/// Dissect-decode-render in one step.
#[must_use]
pub fn render_frame(frame: &DissectedFrame<'_>, registries: &Registries) -> String {
    render_trace(frame, &decode_payload(frame, registries), registries)
}

fn render_link_block(
    out: &mut String,
    frame: &DissectedFrame<'_>,
    decoded: &DecodedPayload,
    registries: &Registries,
) {
    let title = match frame.kind {
        FrameKind::EthernetII => "Ethernet II",
        FrameKind::NovellRaw => "Novell raw IEEE 802.3",
        _ => "IEEE 802.3 Ethernet",
    };
    let _ = writeln!(out, "{title}");
    push_mac_line(out, "Destination", frame.dst);
    push_mac_line(out, "Source", frame.src);
    if frame.kind == FrameKind::EthernetII {
        let _ = writeln!(
            out,
            "  Type: {} (0x{:04x})",
            lookup_or_unknown(registries.ethertype.lookup(frame.type_or_length)),
            frame.type_or_length
        );
        // The link layer alone cannot split an Ethernet II payload into
        // data and pad; when the upper layer fixed the boundary, show it.
        if let DecodedPayload::Arp(_) = decoded {
            if let Ok(Some(span)) = decode_trailer(frame, ARP_WIRE_LEN) {
                push_hex_line(out, 1, "Trailer", span.slice(frame.raw()));
            }
        }
    } else {
        let _ = writeln!(out, "  Length: {}", frame.type_or_length);
        if let Some(trailer) = frame.trailer() {
            push_hex_line(out, 1, "Trailer", trailer);
        }
    }
}

fn render_llc_block(
    out: &mut String,
    llc: &LlcHeader,
    snap: Option<&SnapHeader>,
    registries: &Registries,
) {
    let _ = writeln!(out, "Logical-Link Control");
    let _ = writeln!(
        out,
        "  DSAP: {} (0x{:02x})",
        lookup_or_unknown(registries.lsap.lookup(llc.dsap)),
        llc.dsap
    );
    let _ = writeln!(
        out,
        "  IG Bit: {}",
        if llc.ig_bit() == 0 {
            "Individual"
        } else {
            "Group"
        }
    );
    let _ = writeln!(
        out,
        "  SSAP: {} (0x{:02x})",
        lookup_or_unknown(registries.lsap.lookup(llc.ssap)),
        llc.ssap
    );
    let _ = writeln!(
        out,
        "  CR Bit: {}",
        if llc.cr_bit() == 0 {
            "Command"
        } else {
            "Response"
        }
    );
    if llc.control == CONTROL_UI {
        let _ = writeln!(out, "  Control field: U, func=UI (0x03)");
        let _ = writeln!(
            out,
            "    000. 00.. = Command: Unnumbered Information (0x00)"
        );
        let _ = writeln!(out, "    .... ..11 = Frame type: Unnumbered frame (0x03)");
    } else {
        let _ = writeln!(out, "  Control field: 0x{:02x}", llc.control);
    }
    if let Some(snap) = snap {
        let oui_value =
            u32::from(snap.oui[0]) << 16 | u32::from(snap.oui[1]) << 8 | u32::from(snap.oui[2]);
        let _ = writeln!(
            out,
            "  Organization Code: {} (0x{:06x})",
            registries.snap.organization_name(snap.oui),
            oui_value
        );
        let pid_name = if snap.is_ethertype_encapsulation() {
            lookup_or_unknown(registries.ethertype.lookup(snap.pid))
        } else {
            lookup_or_unknown(registries.snap.protocol_lookup(snap.oui, snap.pid))
        };
        let _ = writeln!(out, "  PID: {} (0x{:04x})", pid_name, snap.pid);
    }
}

fn render_arp_block(out: &mut String, arp: &ArpPacket, registries: &Registries) {
    let _ = writeln!(
        out,
        "Address Resolution Protocol ({})",
        arp.opcode_name().unwrap_or("unknown")
    );
    let hw_name = if arp.hardware_type == 1 {
        "Ethernet"
    } else {
        "unknown"
    };
    let _ = writeln!(
        out,
        "  Hardware type: {} (0x{:04x})",
        hw_name, arp.hardware_type
    );
    let _ = writeln!(
        out,
        "  Protocol type: {} (0x{:04x})",
        lookup_or_unknown(registries.ethertype.lookup(arp.protocol_type)),
        arp.protocol_type
    );
    let _ = writeln!(out, "  Hardware size: {}", arp.hardware_size);
    let _ = writeln!(out, "  Protocol size: {}", arp.protocol_size);
    let _ = writeln!(out, "  Opcode: {}", arp.opcode_text());
    let _ = writeln!(out, "  Sender MAC address: {}", arp.sender_mac);
    let _ = writeln!(out, "  Sender IP address: {}", arp.sender_ip);
    let _ = writeln!(out, "  Target MAC address: {}", arp.target_mac);
    let _ = writeln!(out, "  Target IP address: {}", arp.target_ip);
}

fn render_stp_block(out: &mut String, bpdu: &StpBpdu) {
    let _ = writeln!(out, "Spanning Tree Protocol");
    if bpdu.protocol_identifier == 0 {
        let _ = writeln!(
            out,
            "  Protocol Identifier: Spanning Tree Protocol (0x0000)"
        );
    } else {
        let _ = writeln!(
            out,
            "  Protocol Identifier: 0x{:04x}",
            bpdu.protocol_identifier
        );
    }
    if bpdu.protocol_version == 0 {
        let _ = writeln!(out, "  Protocol Version Identifier: Spanning Tree (0)");
    } else {
        let _ = writeln!(
            out,
            "  Protocol Version Identifier: {}",
            bpdu.protocol_version
        );
    }
    let type_name = match bpdu.bpdu_type {
        StpBpdu::TYPE_CONFIGURATION => "Configuration",
        StpBpdu::TYPE_TOPOLOGY_CHANGE => "Topology Change Notification",
        _ => "unknown",
    };
    let _ = writeln!(out, "  BPDU Type: {} (0x{:02x})", type_name, bpdu.bpdu_type);
    let _ = writeln!(out, "  BPDU flags: 0x{:02x}", bpdu.flags);
    let _ = writeln!(
        out,
        "    {}... .... = Topology Change Acknowledgment: {}",
        u8::from(bpdu.topology_change_ack()),
        if bpdu.topology_change_ack() {
            "Yes"
        } else {
            "No"
        }
    );
    let _ = writeln!(
        out,
        "    .... ...{} = Topology Change: {}",
        u8::from(bpdu.topology_change()),
        if bpdu.topology_change() { "Yes" } else { "No" }
    );
    let _ = writeln!(
        out,
        "  Root Identifier: {} / {}",
        bpdu.root_priority, bpdu.root_mac
    );
    let _ = writeln!(out, "  Root Path Cost: {}", bpdu.root_path_cost);
    let _ = writeln!(
        out,
        "  Bridge Identifier: {} / {}",
        bpdu.bridge_priority, bpdu.bridge_mac
    );
    let _ = writeln!(out, "  Port identifier: 0x{:04x}", bpdu.port_identifier);
    let _ = writeln!(out, "  Message Age: {}", timer_seconds(bpdu.message_age));
    let _ = writeln!(out, "  Max Age: {}", timer_seconds(bpdu.max_age));
    let _ = writeln!(out, "  Hello Time: {}", timer_seconds(bpdu.hello_time));
    let _ = writeln!(
        out,
        "  Forward Delay: {}",
        timer_seconds(bpdu.forward_delay)
    );
}

fn push_mac_line(out: &mut String, label: &str, mac: MacAddress) {
    if mac.is_broadcast() {
        let _ = writeln!(out, "  {label}: {mac} (Broadcast)");
    } else {
        let _ = writeln!(out, "  {label}: {mac}");
    }
}

fn push_hex_line(out: &mut String, depth: usize, label: &str, bytes: &[u8]) {
    let _ = writeln!(
        out,
        "{}{}: {}",
        "  ".repeat(depth),
        label,
        hex_string(bytes)
    );
}

fn lookup_or_unknown(name: Option<&str>) -> &str {
    name.unwrap_or("unknown")
}

/// Contiguous lowercase hex, the figure style for trailers and dumps.
#[must_use]
pub fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for byte in bytes {
        let _ = write!(s, "{byte:02x}");
    }
    s
}
