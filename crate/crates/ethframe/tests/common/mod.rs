//! Hand-encoded reference frames shared by the integration tests.
//!
//! Each frame is spelled out byte by byte, independently of the builder
//! module, so the builders and the dissector can be checked against these
//! fixtures rather than against each other.

/// A broadcast ARP request, 60 bytes: Ethernet II, type 0x0806, 28-byte ARP
/// payload asking who has 192.168.1.150, zero-padded with an 18-byte
/// trailer (60 − 14 − 28).
#[allow(dead_code)]
pub fn arp_request_frame() -> Vec<u8> {
    let mut frame = Vec::with_capacity(60);
    frame.extend_from_slice(&[0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF]); // destination: broadcast
    frame.extend_from_slice(&[0x00, 0xB0, 0xD0, 0x49, 0x2A, 0xB9]); // source
    frame.extend_from_slice(&[0x08, 0x06]); // EtherType: ARP
    frame.extend_from_slice(&[0x00, 0x01]); // hardware type: Ethernet
    frame.extend_from_slice(&[0x08, 0x00]); // protocol type: IP
    frame.push(0x06); // hardware size
    frame.push(0x04); // protocol size
    frame.extend_from_slice(&[0x00, 0x01]); // opcode: request
    frame.extend_from_slice(&[0x00, 0xB0, 0xD0, 0x49, 0x2A, 0xB9]); // sender MAC
    frame.extend_from_slice(&[192, 168, 1, 2]); // sender IP
    frame.extend_from_slice(&[0x00, 0x00, 0x00, 0x00, 0x00, 0x00]); // target MAC: unknown
    frame.extend_from_slice(&[192, 168, 1, 150]); // target IP
    frame.extend_from_slice(&[0x00; 18]); // pad to the 60-byte minimum
    assert_eq!(frame.len(), 60);
    frame
}

/// The 28 ARP payload bytes of [`arp_request_frame`].
#[allow(dead_code)]
pub fn arp_request_payload() -> Vec<u8> {
    arp_request_frame()[14..42].to_vec()
}

/// A Configuration BPDU from a bridge announcing itself as root, 60 bytes:
/// IEEE 802.3 length 38, LLC 42/42/03, 35-byte BPDU (priorities 32768,
/// bridge MAC 00:03:31:34:62:c0, port 0x800e, max age 20 s, hello 2 s,
/// forward delay 15 s), 8-byte zero trailer.
#[allow(dead_code)]
pub fn stp_bpdu_frame() -> Vec<u8> {
    let mut frame = Vec::with_capacity(60);
    frame.extend_from_slice(&[0x01, 0x80, 0xC2, 0x00, 0x00, 0x00]); // destination: STP multicast
    frame.extend_from_slice(&[0x00, 0x03, 0x31, 0x34, 0x62, 0xC2]); // source
    frame.extend_from_slice(&[0x00, 0x26]); // length: 38 = 3 LLC + 35 BPDU
    frame.extend_from_slice(&[0x42, 0x42, 0x03]); // LLC: BPDU SAPs, UI
    frame.extend_from_slice(&[0x00, 0x00]); // protocol identifier
    frame.push(0x00); // protocol version
    frame.push(0x00); // BPDU type: Configuration
    frame.push(0x00); // flags
    frame.extend_from_slice(&[0x80, 0x00]); // root priority: 32768
    frame.extend_from_slice(&[0x00, 0x03, 0x31, 0x34, 0x62, 0xC0]); // root MAC
    frame.extend_from_slice(&[0x00, 0x00, 0x00, 0x00]); // root path cost: 0
    frame.extend_from_slice(&[0x80, 0x00]); // bridge priority: 32768
    frame.extend_from_slice(&[0x00, 0x03, 0x31, 0x34, 0x62, 0xC0]); // bridge MAC
    frame.extend_from_slice(&[0x80, 0x0E]); // port identifier
    frame.extend_from_slice(&[0x00, 0x00]); // message age: 0
    frame.extend_from_slice(&[0x14, 0x00]); // max age: 20 × 256
    frame.extend_from_slice(&[0x02, 0x00]); // hello time: 2 × 256
    frame.extend_from_slice(&[0x0F, 0x00]); // forward delay: 15 × 256
    frame.extend_from_slice(&[0x00; 8]); // pad to the 60-byte minimum
    assert_eq!(frame.len(), 60);
    frame
}

/// The 35 BPDU payload bytes of [`stp_bpdu_frame`].
#[allow(dead_code)]
pub fn stp_bpdu_payload() -> Vec<u8> {
    stp_bpdu_frame()[17..52].to_vec()
}

/// A CDP announcement over SNAP, 363 bytes: IEEE 802.3 length 349, LLC
/// AA/AA/03, Cisco OUI 00:00:0c, PID 0x2000, 341-byte CDP body (version 2,
/// TTL 180 s, checksum 0x1787, then TLVs this crate treats as opaque).
/// No trailer: 14 + 349 is the whole frame.
#[allow(dead_code)]
pub fn cdp_snap_frame() -> Vec<u8> {
    let mut frame = Vec::with_capacity(363);
    frame.extend_from_slice(&[0x01, 0x00, 0x0C, 0xCC, 0xCC, 0xCC]); // destination: CDP multicast
    frame.extend_from_slice(&[0x00, 0x03, 0x31, 0x34, 0x73, 0x0B]); // source
    frame.extend_from_slice(&[0x01, 0x5D]); // length: 349 = 3 LLC + 5 SNAP + 341 body
    frame.extend_from_slice(&[0xAA, 0xAA, 0x03]); // LLC: SNAP announcement
    frame.extend_from_slice(&[0x00, 0x00, 0x0C]); // OUI: Cisco
    frame.extend_from_slice(&[0x20, 0x00]); // PID: CDP
    frame.extend_from_slice(&cdp_body());
    assert_eq!(frame.len(), 363);
    frame
}

/// The 341 CDP payload bytes of [`cdp_snap_frame`].
#[allow(dead_code)]
pub fn cdp_body() -> Vec<u8> {
    let mut body = Vec::with_capacity(341);
    body.extend_from_slice(&[0x02, 0xB4, 0x17, 0x87]); // version 2, TTL 180, checksum
                                                       // Deterministic stand-in for the TLV list, which is opaque here.
    for i in 0..337u32 {
        body.push((i * 7 + 3) as u8);
    }
    assert_eq!(body.len(), 341);
    body
}
