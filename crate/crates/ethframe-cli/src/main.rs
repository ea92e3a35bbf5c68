//! `ethframe`: classify, dissect, and summarize Ethernet link-layer frames.
//!
//! Reads classic pcap capture files and prints per-frame text traces or a
//! population report over the four frame formats; also generates synthetic
//! captures for testing. Exits 0 on success, 1 when an input file is
//! missing or malformed, and 2 on usage errors.

mod generate;

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ethframe::{
    classify_bytes, dissect, render_frame, CaptureStats, FrameKind, InvalidReason, PcapReader,
    PcapWriter, Registries, ReportFormat, HEADER_LEN,
};

use crate::generate::{generate_corpus, Mix};

#[derive(Parser)]
#[command(
    version,
    about = "Dissect Ethernet captures: four frame formats, traces, statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a capture: frame and byte counts per kind, with shares
    Stats {
        /// Capture file to read
        capture: PathBuf,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a trace block for each frame in a capture
    Trace {
        /// Capture file to read
        capture: PathBuf,
        /// Stop after this many frames
        #[arg(long, value_name = "N")]
        first: Option<u64>,
        /// Only trace frames of this kind, e.g. EthernetII, Ieee8023Llc,
        /// NovellRaw, Invalid, or Invalid(TooShort)
        #[arg(long, value_parser = parse_kind_filter)]
        kind: Option<KindFilter>,
    },
    /// Write a synthetic capture with an exact mix of frame kinds
    Generate {
        /// Capture file to create
        out: PathBuf,
        /// Frame counts per kind: e2=<n>,llc=<n>,snap=<n>,novell=<n>
        #[arg(long)]
        mix: Mix,
        /// Generation seed; the same seed yields a byte-identical file
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify one frame given as contiguous hex digits
    Classify {
        /// Frame bytes in hex: even length, at least a 14-byte header
        #[arg(value_parser = parse_frame_hex)]
        frame: FrameHex,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned table for people
    Text,
    /// Comma-separated rows for machines
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(format: Format) -> Self {
        match format {
            Format::Text => ReportFormat::Text,
            Format::Csv => ReportFormat::Delimited,
        }
    }
}

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

/// A `--kind` filter: one specific kind, or any invalid frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KindFilter {
    Kind(FrameKind),
    AnyInvalid,
}

impl KindFilter {
    fn matches(self, kind: FrameKind) -> bool {
        match self {
            KindFilter::Kind(want) => kind == want,
            KindFilter::AnyInvalid => !kind.is_valid(),
        }
    }
}

/// Every kind a frame can classify as; filter names are their display
/// forms, so `--kind` accepts exactly what `stats` and `trace` print.
const ALL_KINDS: [FrameKind; 9] = [
    FrameKind::EthernetII,
    FrameKind::Ieee8023Llc,
    FrameKind::Ieee8023Snap,
    FrameKind::NovellRaw,
    FrameKind::Invalid(InvalidReason::TooShort),
    FrameKind::Invalid(InvalidReason::TypeLengthGap),
    FrameKind::Invalid(InvalidReason::LengthExceedsFrame),
    FrameKind::Invalid(InvalidReason::TruncatedLlc),
    FrameKind::Invalid(InvalidReason::TruncatedSnap),
];

fn parse_kind_filter(s: &str) -> Result<KindFilter, String> {
    if s == "Invalid" {
        return Ok(KindFilter::AnyInvalid);
    }
    ALL_KINDS
        .into_iter()
        .find(|kind| kind.to_string() == s)
        .map(KindFilter::Kind)
        .ok_or_else(|| {
            format!(
                "unknown frame kind {s:?} (expected Invalid or one of: {})",
                ALL_KINDS.map(|kind| kind.to_string()).join(", ")
            )
        })
}

/// Decoded argument of `classify`.
#[derive(Debug, Clone)]
struct FrameHex(Vec<u8>);

fn parse_frame_hex(s: &str) -> Result<FrameHex, String> {
    let bytes = hex::decode(s).map_err(|err| format!("bad hex: {err}"))?;
    if bytes.len() < HEADER_LEN {
        return Err(format!(
            "need at least {} hex digits (a full {HEADER_LEN}-byte header), got {}",
            2 * HEADER_LEN,
            s.len()
        ));
    }
    Ok(FrameHex(bytes))
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    // Usage errors exit through clap with code 2; everything below is
    // either success or an input problem.
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats { capture, format } => cmd_stats(&capture, format.into()),
        Command::Trace {
            capture,
            first,
            kind,
        } => cmd_trace(&capture, first, kind),
        Command::Generate { out, mix, seed } => cmd_generate(&out, &mix, seed),
        Command::Classify { frame } => cmd_classify(&frame.0),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("ethframe: {message}");
            ExitCode::FAILURE
        }
    }
}

fn open_capture(path: &Path) -> Result<PcapReader<BufReader<File>>, String> {
    let file = File::open(path).map_err(|err| format!("{}: {err}", path.display()))?;
    PcapReader::new(BufReader::new(file)).map_err(|err| format!("{}: {err}", path.display()))
}

fn cmd_stats(path: &Path, format: ReportFormat) -> Result<(), String> {
    let mut stats = CaptureStats::new();
    for record in open_capture(path)? {
        let record = record.map_err(|err| format!("{}: {err}", path.display()))?;
        stats.accumulate(&dissect(&record.frame), u64::from(record.orig_len));
    }
    print!("{}", stats.render_report(format));
    Ok(())
}

fn cmd_trace(path: &Path, first: Option<u64>, filter: Option<KindFilter>) -> Result<(), String> {
    let registries = Registries::new();
    let mut remaining = first.unwrap_or(u64::MAX);
    let mut separate = false;
    for record in open_capture(path)? {
        if remaining == 0 {
            break;
        }
        let record = record.map_err(|err| format!("{}: {err}", path.display()))?;
        let view = dissect(&record.frame);
        if filter.is_some_and(|f| !f.matches(view.kind)) {
            continue;
        }
        if separate {
            println!();
        }
        print!("{}", render_frame(&view, &registries));
        separate = true;
        remaining -= 1;
    }
    Ok(())
}

fn cmd_generate(path: &Path, mix: &Mix, seed: u64) -> Result<(), String> {
    let fail = |err| format!("{}: {err}", path.display());
    let file = File::create(path).map_err(|err| fail(format!("{err}")))?;
    let mut writer = PcapWriter::new(BufWriter::new(file)).map_err(|err| fail(format!("{err}")))?;
    for record in generate_corpus(mix, seed) {
        writer
            .write_record(&record)
            .map_err(|err| fail(format!("{err}")))?;
    }
    writer.flush().map_err(|err| fail(format!("{err}")))?;
    Ok(())
}

fn cmd_classify(bytes: &[u8]) -> Result<(), String> {
    let kind = classify_bytes(bytes);
    let type_or_length = u16::from_be_bytes([bytes[12], bytes[13]]);
    match kind {
        FrameKind::EthernetII => println!("{kind} type=0x{type_or_length:04x}"),
        FrameKind::Ieee8023Llc | FrameKind::Ieee8023Snap | FrameKind::NovellRaw => {
            println!("{kind} length={type_or_length}");
        }
        FrameKind::Invalid(_) => println!("{kind}"),
    }
    Ok(())
}
