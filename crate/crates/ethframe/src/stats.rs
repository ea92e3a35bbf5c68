//! Per-kind population statistics over a capture: frame counts, byte
//! totals, size extremes, and the percentage breakdown.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::frame::{DissectedFrame, FrameKind};

/// Count and byte sum for one frame kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KindTally {
    pub frames: u64,
    pub bytes: u64,
}

/// Report output formats: an aligned text table or comma-separated rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Delimited,
}

/// Mergeable per-kind counters over a capture.
///
/// `accumulate` and `merge` form a commutative monoid with the empty stats
/// as identity, so shards of a capture can be tallied independently and
/// combined in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaptureStats {
    per_kind: BTreeMap<FrameKind, KindTally>,
    total_frames: u64,
    total_bytes: u64,
    min_frame: Option<u64>,
    max_frame: Option<u64>,
}

impl CaptureStats {
    #[must_use]
    pub fn new() -> Self {
        CaptureStats::default()
    }

    /// Tallies one dissected frame. `wire_length` is the frame's length on
    /// the wire (for snapped captures this exceeds the stored byte count).
    pub fn accumulate(&mut self, frame: &DissectedFrame<'_>, wire_length: u64) {
        let tally = self.per_kind.entry(frame.kind).or_default();
        tally.frames += 1;
        tally.bytes += wire_length;
        self.total_frames += 1;
        self.total_bytes += wire_length;
        self.min_frame = Some(self.min_frame.map_or(wire_length, |m| m.min(wire_length)));
        self.max_frame = Some(self.max_frame.map_or(wire_length, |m| m.max(wire_length)));
    }

    /// Componentwise sum of two tallies.
    pub fn merge(&mut self, other: &CaptureStats) {
        for (kind, tally) in &other.per_kind {
            let mine = self.per_kind.entry(*kind).or_default();
            mine.frames += tally.frames;
            mine.bytes += tally.bytes;
        }
        self.total_frames += other.total_frames;
        self.total_bytes += other.total_bytes;
        self.min_frame = match (self.min_frame, other.min_frame) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max_frame = match (self.max_frame, other.max_frame) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }

    #[must_use]
    pub fn total_frames(&self) -> u64 {
        self.total_frames
    }

    #[must_use]
    pub fn total_bytes(&self) -> u64 {
        self.total_bytes
    }

    #[must_use]
    pub fn min_frame(&self) -> Option<u64> {
        self.min_frame
    }

    #[must_use]
    pub fn max_frame(&self) -> Option<u64> {
        self.max_frame
    }

    /// Tally for one kind; zero if the kind was never seen.
    #[must_use]
    pub fn tally(&self, kind: FrameKind) -> KindTally {
        self.per_kind.get(&kind).copied().unwrap_or_default()
    }

    /// Observed kinds with their tallies, in deterministic kind order.
    pub fn kinds(&self) -> impl Iterator<Item = (FrameKind, KindTally)> + '_ {
        self.per_kind.iter().map(|(k, t)| (*k, *t))
    }

    /// Mean frame size in tenths of a byte, rounded half-up; `None` when
    /// empty. 547648 bytes over 6411 frames gives 854, rendered `85.4`.
    #[must_use]
    pub fn mean_frame_tenths(&self) -> Option<u64> {
        if self.total_frames == 0 {
            return None;
        }
        let n = u128::from(self.total_bytes);
        let d = u128::from(self.total_frames);
        Some(((n * 20 + d) / (2 * d)) as u64)
    }

    /// Per-kind share of total frames in tenths of a percent, apportioned
    /// by largest remainder so the shares always sum to exactly 1000.
    /// Independent rounding cannot promise that; apportionment can.
    #[must_use]
    pub fn percent_tenths(&self) -> Vec<(FrameKind, u64)> {
        if self.total_frames == 0 {
            return Vec::new();
        }
        let total = u128::from(self.total_frames);
        let mut shares: Vec<(FrameKind, u64, u128)> = self
            .per_kind
            .iter()
            .map(|(kind, tally)| {
                let scaled = u128::from(tally.frames) * 1000;
                (*kind, (scaled / total) as u64, scaled % total)
            })
            .collect();
        let assigned: u64 = shares.iter().map(|(_, floor, _)| floor).sum();
        let mut leftover = 1000 - assigned;
        // Hand the leftover tenths to the largest remainders; the sort is
        // stable, so ties resolve in kind order.
        let mut order: Vec<usize> = (0..shares.len()).collect();
        order.sort_by(|&a, &b| shares[b].2.cmp(&shares[a].2));
        for idx in order {
            if leftover == 0 {
                break;
            }
            shares[idx].1 += 1;
            leftover -= 1;
        }
        shares
            .into_iter()
            .map(|(kind, share, _)| (kind, share))
            .collect()
    }

    /// Renders the population report.
    #[must_use]
    pub fn render_report(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.render_text(),
            ReportFormat::Delimited => self.render_delimited(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<28}{:>10}{:>14}{:>9}",
            "kind", "frames", "bytes", "percent"
        );
        for (kind, share) in self.percent_tenths() {
            let tally = self.tally(kind);
            let _ = writeln!(
                out,
                "{:<28}{:>10}{:>14}{:>9}",
                kind.to_string(),
                tally.frames,
                tally.bytes,
                format_tenths(share)
            );
        }
        let _ = writeln!(
            out,
            "{:<28}{:>10}{:>14}{:>9}",
            "total", self.total_frames, self.total_bytes, "100.0"
        );
        let _ = writeln!(
            out,
            "frame size min/max/mean: {} / {} / {}",
            self.min_frame.unwrap_or(0),
            self.max_frame.unwrap_or(0),
            format_tenths(self.mean_frame_tenths().unwrap_or(0))
        );
        out
    }

    fn render_delimited(&self) -> String {
        let mut out = String::from("kind,count,bytes,percent\n");
        for (kind, share) in self.percent_tenths() {
            let tally = self.tally(kind);
            let _ = writeln!(
                out,
                "{},{},{},{}",
                kind,
                tally.frames,
                tally.bytes,
                format_tenths(share)
            );
        }
        let _ = writeln!(
            out,
            "TOTAL,{},{},100.0",
            self.total_frames, self.total_bytes
        );
        out
    }
}

/// Renders a tenths-valued quantity with one decimal: 985 → `98.5`.
fn format_tenths(tenths: u64) -> String {
    format!("{}.{}", tenths / 10, tenths % 10)
}
