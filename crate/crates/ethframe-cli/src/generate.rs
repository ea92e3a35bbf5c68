//! Deterministic synthetic-capture generation for the `generate` command.
//!
//! Counts per kind are exact; frame order, addresses, and payloads are
//! pseudorandom but fully determined by the seed, so a mix and a seed name
//! one capture file, byte for byte.

use std::str::FromStr;

use ethframe::{
    build_8023_llc, build_8023_snap, build_ethernet_ii, build_novell_raw, LlcHeader, MacAddress,
    PcapRecord, RawFrame, ETHERTYPE_MIN, MAX_PAYLOAD_ETHERNET_II, MAX_PAYLOAD_LLC,
    MAX_PAYLOAD_NOVELL, MAX_PAYLOAD_SNAP,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Requested frame counts per kind, as given to `--mix`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Mix {
    pub e2: u64,
    pub llc: u64,
    pub snap: u64,
    pub novell: u64,
}

impl Mix {
    pub fn total(&self) -> u64 {
        self.e2 + self.llc + self.snap + self.novell
    }
}

impl FromStr for Mix {
    type Err = String;

    /// Parses `e2=<n>,llc=<n>,snap=<n>,novell=<n>`. Every key is optional
    /// and defaults to zero; no key may repeat.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut mix = Mix::default();
        let mut seen = Vec::new();
        for entry in s.split(',') {
            let (key, value) = entry
                .split_once('=')
                .ok_or_else(|| format!("mix entry {entry:?} is not of the form kind=<count>"))?;
            let slot = match key {
                "e2" => &mut mix.e2,
                "llc" => &mut mix.llc,
                "snap" => &mut mix.snap,
                "novell" => &mut mix.novell,
                _ => {
                    return Err(format!(
                        "unknown mix kind {key:?} (expected e2, llc, snap, or novell)"
                    ))
                }
            };
            if seen.contains(&key) {
                return Err(format!("mix lists {key} twice"));
            }
            seen.push(key);
            *slot = value
                .parse()
                .map_err(|_| format!("mix count {value:?} is not a non-negative integer"))?;
        }
        Ok(mix)
    }
}

/// One frame's kind in the shuffled corpus layout.
#[derive(Debug, Clone, Copy)]
enum Slot {
    EthernetII,
    Llc,
    Snap,
    Novell,
}

/// Builds the capture records for `mix`: one frame per requested slot, in a
/// shuffled order, timestamped a millisecond apart.
pub fn generate_corpus(mix: &Mix, seed: u64) -> Vec<PcapRecord> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);

    let mut slots = Vec::with_capacity(mix.total() as usize);
    slots.extend(std::iter::repeat_n(Slot::EthernetII, mix.e2 as usize));
    slots.extend(std::iter::repeat_n(Slot::Llc, mix.llc as usize));
    slots.extend(std::iter::repeat_n(Slot::Snap, mix.snap as usize));
    slots.extend(std::iter::repeat_n(Slot::Novell, mix.novell as usize));
    slots.shuffle(&mut rng);

    slots
        .iter()
        .enumerate()
        .map(|(i, slot)| {
            let frame = build_frame(*slot, &mut rng);
            PcapRecord::new((i / 1000) as u32, ((i % 1000) * 1000) as u32, frame)
        })
        .collect()
}

fn build_frame(slot: Slot, rng: &mut ChaCha20Rng) -> RawFrame {
    let dst = MacAddress(rng.random());
    let src = unicast_mac(rng);
    match slot {
        Slot::EthernetII => {
            let ether_type = rng.random_range(ETHERTYPE_MIN..=u16::MAX);
            let payload = random_payload(rng, MAX_PAYLOAD_ETHERNET_II);
            build_ethernet_ii(dst, src, ether_type, &payload)
        }
        Slot::Llc => {
            let llc = unambiguous_llc(rng);
            let payload = random_payload(rng, MAX_PAYLOAD_LLC);
            build_8023_llc(dst, src, llc, &payload)
        }
        Slot::Snap => {
            let oui: [u8; 3] = rng.random();
            let pid: u16 = rng.random();
            let payload = random_payload(rng, MAX_PAYLOAD_SNAP);
            build_8023_snap(dst, src, oui, pid, &payload)
        }
        Slot::Novell => {
            let mut ipx = vec![0xFF, 0xFF];
            ipx.extend_from_slice(&random_payload(rng, MAX_PAYLOAD_NOVELL - 2));
            build_novell_raw(dst, src, &ipx)
        }
    }
    .expect("generated inputs satisfy the builder preconditions")
}

fn random_payload(rng: &mut ChaCha20Rng, max: usize) -> Vec<u8> {
    let mut payload = vec![0u8; rng.random_range(0..=max)];
    rng.fill(payload.as_mut_slice());
    payload
}

/// A random unicast source address (the I/G bit clear: frames never come
/// *from* a group).
fn unicast_mac(rng: &mut ChaCha20Rng) -> MacAddress {
    let mut octets: [u8; 6] = rng.random();
    octets[0] &= 0xFE;
    MacAddress(octets)
}

/// LLC headers that stay plain LLC on the wire: the SNAP announcement
/// (AA/AA under UI) and the Novell-lookalike FF/FF pair are resampled away,
/// so generated corpora are classification-unambiguous by construction.
fn unambiguous_llc(rng: &mut ChaCha20Rng) -> LlcHeader {
    loop {
        let dsap: u8 = rng.random();
        let ssap: u8 = rng.random();
        if (dsap == 0xAA && ssap == 0xAA) || (dsap == 0xFF && ssap == 0xFF) {
            continue;
        }
        return LlcHeader {
            dsap,
            ssap,
            control: 0x03,
        };
    }
}
