//! Deterministic structured-text reports. Identical inputs produce
//! byte-identical reports except for the trailing time_ms line.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

/// FNV-1a 64-bit hash, used to fingerprint inputs in reports.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xCBF2_9CE4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

pub struct Report {
    lines: Vec<String>,
    failed: bool,
    start: Instant,
}

impl Report {
    pub fn new(command: &str, input: &str, input_bytes: &[u8]) -> Report {
        let mut r = Report { lines: Vec::new(), failed: false, start: Instant::now() };
        r.lines.push(format!("report {command}"));
        r.lines.push(format!("input {input} fnv1a:{:016x}", fnv1a(input_bytes)));
        r
    }

    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key} {value}"));
    }

    pub fn section(&mut self, name: &str) {
        self.lines.push(format!("[{name}]"));
    }

    /// A named check with its outcome; failures flip the report status.
    pub fn check(&mut self, name: &str, ok: bool) {
        self.lines.push(format!("check {name} {}", if ok { "ok" } else { "FAILED" }));
        if !ok {
            self.failed = true;
        }
    }

    pub fn graded_dims(&mut self, key: &str, dims: &BTreeMap<i64, usize>) {
        let body = if dims.is_empty() {
            "0".to_string()
        } else {
            dims.iter()
                .map(|(q, d)| format!("{q}:{d}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        self.lines.push(format!("{key} {{{body}}}"));
    }

    pub fn matrix(&mut self, key: &str, m: &[Vec<i64>]) {
        for row in m {
            let body = row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
            self.lines.push(format!("{key} [{body}]"));
        }
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    /// Renders the report; status reflects recorded checks.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "status {}", if self.failed { "FAIL" } else { "PASS" });
        let _ = writeln!(out, "time_ms {}", self.start.elapsed().as_millis());
        out
    }
}
