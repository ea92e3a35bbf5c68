//! Name registries for the protocol numbering spaces a dissector runs into:
//! EtherTypes, LLC service access points, and SNAP (OUI, protocol id) pairs.
//!
//! Each registry starts with the assignments the dissector and renderer need
//! out of the box and accepts additional entries at runtime. Lookups never
//! fail: an unregistered value is named `unknown (0x…)` with its hex form.

use std::collections::BTreeMap;

/// Names for EtherType values (the >= 0x0600 interpretations of the
/// type/length field, also reused by SNAP's zero-OUI encapsulation).
#[derive(Debug, Clone)]
pub struct EtherTypeRegistry {
    names: BTreeMap<u16, String>,
}

impl EtherTypeRegistry {
    /// IPv4.
    pub const IP: u16 = 0x0800;
    /// Address Resolution Protocol.
    pub const ARP: u16 = 0x0806;

    /// Registry pre-populated with the well-known assignments.
    #[must_use]
    pub fn new() -> Self {
        let mut reg = EtherTypeRegistry {
            names: BTreeMap::new(),
        };
        reg.insert(Self::IP, "IP");
        reg.insert(Self::ARP, "ARP");
        reg
    }

    pub fn insert(&mut self, value: u16, name: impl Into<String>) {
        self.names.insert(value, name.into());
    }

    #[must_use]
    pub fn lookup(&self, value: u16) -> Option<&str> {
        self.names.get(&value).map(String::as_str)
    }

    /// Registered name, or `unknown (0x####)` for unregistered values.
    #[must_use]
    pub fn name(&self, value: u16) -> String {
        match self.lookup(value) {
            Some(name) => name.to_string(),
            None => format!("unknown (0x{value:04x})"),
        }
    }
}

impl Default for EtherTypeRegistry {
    fn default() -> Self {
        EtherTypeRegistry::new()
    }
}

/// Names for LLC service access point octets, keyed by the full octet as it
/// appears on the wire.
#[derive(Debug, Clone)]
pub struct LsapRegistry {
    names: BTreeMap<u8, String>,
}

impl LsapRegistry {
    /// Internet Protocol.
    pub const IP: u8 = 0x06;
    /// 802.1D Spanning Tree bridge protocol data units.
    pub const SPANNING_TREE: u8 = 0x42;
    /// SNAP extension indicator.
    pub const SNAP: u8 = 0xAA;

    /// Registry pre-populated with the well-known assignments.
    #[must_use]
    pub fn new() -> Self {
        let mut reg = LsapRegistry {
            names: BTreeMap::new(),
        };
        reg.insert(Self::IP, "IP");
        reg.insert(Self::SPANNING_TREE, "Spanning Tree BPDU");
        reg.insert(Self::SNAP, "SNAP");
        reg
    }

    pub fn insert(&mut self, sap: u8, name: impl Into<String>) {
        self.names.insert(sap, name.into());
    }

    #[must_use]
    pub fn lookup(&self, sap: u8) -> Option<&str> {
        self.names.get(&sap).map(String::as_str)
    }

    /// Registered name, or `unknown (0x##)` for unregistered values.
    #[must_use]
    pub fn name(&self, sap: u8) -> String {
        match self.lookup(sap) {
            Some(name) => name.to_string(),
            None => format!("unknown (0x{sap:02x})"),
        }
    }
}

impl Default for LsapRegistry {
    fn default() -> Self {
        LsapRegistry::new()
    }
}

/// Names for vendor-scoped SNAP protocols and for the organizations that
/// assign them.
#[derive(Debug, Clone)]
pub struct SnapRegistry {
    protocols: BTreeMap<([u8; 3], u16), String>,
    organizations: BTreeMap<[u8; 3], String>,
}

impl SnapRegistry {
    /// Cisco's organizationally unique identifier.
    pub const OUI_CISCO: [u8; 3] = [0x00, 0x00, 0x0C];
    /// Cisco Discovery Protocol id under [`Self::OUI_CISCO`].
    pub const PID_CDP: u16 = 0x2000;

    /// Registry pre-populated with the well-known assignments.
    #[must_use]
    pub fn new() -> Self {
        let mut reg = SnapRegistry {
            protocols: BTreeMap::new(),
            organizations: BTreeMap::new(),
        };
        reg.insert_organization(Self::OUI_CISCO, "Cisco");
        reg.insert_protocol(Self::OUI_CISCO, Self::PID_CDP, "CDP");
        reg
    }

    pub fn insert_protocol(&mut self, oui: [u8; 3], pid: u16, name: impl Into<String>) {
        self.protocols.insert((oui, pid), name.into());
    }

    pub fn insert_organization(&mut self, oui: [u8; 3], name: impl Into<String>) {
        self.organizations.insert(oui, name.into());
    }

    #[must_use]
    pub fn protocol_lookup(&self, oui: [u8; 3], pid: u16) -> Option<&str> {
        self.protocols.get(&(oui, pid)).map(String::as_str)
    }

    #[must_use]
    pub fn organization_lookup(&self, oui: [u8; 3]) -> Option<&str> {
        self.organizations.get(&oui).map(String::as_str)
    }

    /// Registered organization name, or `unknown` for unregistered OUIs.
    #[must_use]
    pub fn organization_name(&self, oui: [u8; 3]) -> String {
        match self.organization_lookup(oui) {
            Some(name) => name.to_string(),
            None => "unknown".to_string(),
        }
    }
}

impl Default for SnapRegistry {
    fn default() -> Self {
        SnapRegistry::new()
    }
}

/// The full set of registries a dissection or rendering pass consults.
#[derive(Debug, Clone, Default)]
pub struct Registries {
    pub ethertype: EtherTypeRegistry,
    pub lsap: LsapRegistry,
    pub snap: SnapRegistry,
}

impl Registries {
    #[must_use]
    pub fn new() -> Self {
        Registries::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ethertype_registry_knows_ip_and_arp() {
        let reg = EtherTypeRegistry::new();
        assert_eq!(reg.name(0x0800), "IP");
        assert_eq!(reg.name(0x0806), "ARP");
    }

    #[test]
    fn ethertype_registry_formats_unknown_values() {
        let reg = EtherTypeRegistry::new();
        assert_eq!(reg.name(0x1234), "unknown (0x1234)");
        assert_eq!(reg.name(0x0600), "unknown (0x0600)");
        assert_eq!(reg.lookup(0x1234), None);
    }

    #[test]
    fn ethertype_registry_accepts_new_entries() {
        let mut reg = EtherTypeRegistry::new();
        reg.insert(0x86DD, "IPv6");
        assert_eq!(reg.name(0x86DD), "IPv6");
        // Existing entries can be renamed too.
        reg.insert(0x0800, "IPv4");
        assert_eq!(reg.name(0x0800), "IPv4");
    }

    #[test]
    fn lsap_registry_knows_the_core_saps() {
        let reg = LsapRegistry::new();
        assert_eq!(reg.name(0x06), "IP");
        assert_eq!(reg.name(0x42), "Spanning Tree BPDU");
        assert_eq!(reg.name(0xAA), "SNAP");
        assert_eq!(reg.name(0xE0), "unknown (0xe0)");
    }

    #[test]
    fn snap_registry_knows_cdp_and_cisco() {
        let reg = SnapRegistry::new();
        assert_eq!(reg.protocol_lookup([0, 0, 0x0C], 0x2000), Some("CDP"));
        assert_eq!(reg.organization_name([0, 0, 0x0C]), "Cisco");
        assert_eq!(reg.protocol_lookup([0, 0, 0x0C], 0x2004), None);
        assert_eq!(reg.organization_name([0xAB, 0xCD, 0xEF]), "unknown");
    }

    #[test]
    fn registries_bundle_defaults_to_well_known_entries() {
        let regs = Registries::new();
        assert_eq!(regs.ethertype.name(0x0806), "ARP");
        assert_eq!(regs.lsap.name(0xAA), "SNAP");
        assert_eq!(regs.snap.organization_name([0, 0, 0x0C]), "Cisco");
    }
}
