use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::deck::nec_num;
use crate::necout::parse_nec_output;
use crate::response::FrequencyResponse;

/// Hex SHA-256 of the deck text; failure reports carry it so the exact
/// failing input can be reproduced.
pub fn deck_digest(deck: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(deck.as_bytes());
    let out = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in out {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

#[derive(Debug, Clone, PartialEq)]
pub struct BackendError {
    pub message: String,
    /// Digest of the deck that triggered the failure; empty when the failure
    /// happened before a deck existed.
    pub deck_digest: String,
}

impl BackendError {
    pub fn new(message: impl Into<String>, deck_digest: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            deck_digest: deck_digest.into(),
        }
    }
}

impl fmt::Display for BackendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deck_digest.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{} [deck {}]", self.message, self.deck_digest)
        }
    }
}

impl std::error::Error for BackendError {}

/// Turns a deck into a frequency response. Implementations must be
/// deterministic: identical deck text yields an identical response.
pub trait SimulatorBackend: Send + Sync {
    fn frequency_response(&self, deck: &str, z0: f64) -> Result<FrequencyResponse, BackendError>;
}

/// Solver data stored in a stub fixture (everything but the z0-dependent
/// SWR column).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StubResponse {
    pub freqs_mhz: Vec<f64>,
    pub efficiency_pct: Vec<f64>,
    pub gmax_dbi: Vec<f64>,
    pub rin_ohms: Vec<f64>,
    pub xin_ohms: Vec<f64>,
}

impl StubResponse {
    fn to_response(&self, z0: f64) -> FrequencyResponse {
        FrequencyResponse::from_parts(
            self.freqs_mhz.clone(),
            self.efficiency_pct.clone(),
            self.gmax_dbi.clone(),
            self.rin_ohms.clone(),
            self.xin_ohms.clone(),
            z0,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct StubEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    digest: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r_load: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    segment: Option<usize>,
    response: StubResponse,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct StubFile {
    entries: Vec<StubEntry>,
}

/// Canned-response backend: a lookup table keyed by deck digest or by the
/// (load resistance, segment) pair read off the deck's LD card. Misses are
/// reported with the deck digest. Immutable after loading and safe to share
/// across threads; an invocation counter supports tests that pin how many
/// solver calls a pipeline makes.
pub struct StubBackend {
    by_digest: BTreeMap<String, StubResponse>,
    by_load: BTreeMap<(String, usize), StubResponse>,
    invocations: AtomicU64,
}

impl StubBackend {
    pub fn new() -> Self {
        Self {
            by_digest: BTreeMap::new(),
            by_load: BTreeMap::new(),
            invocations: AtomicU64::new(0),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, BackendError> {
        let file: StubFile = serde_json::from_str(text)
            .map_err(|e| BackendError::new(format!("bad stub fixture: {e}"), String::new()))?;
        let mut stub = Self::new();
        for entry in file.entries {
            match (entry.digest, entry.r_load, entry.segment) {
                (Some(d), _, _) => {
                    stub.by_digest.insert(d, entry.response);
                }
                (None, Some(r), Some(seg)) => {
                    stub.by_load.insert((nec_num(r), seg), entry.response);
                }
                _ => {
                    return Err(BackendError::new(
                        "stub entry needs a digest or an (r_load, segment) pair",
                        String::new(),
                    ))
                }
            }
        }
        Ok(stub)
    }

    pub fn from_path(path: &Path) -> Result<Self, BackendError> {
        let text = fs::read_to_string(path).map_err(|e| {
            BackendError::new(
                format!("cannot read stub fixture {}: {e}", path.display()),
                "",
            )
        })?;
        Self::from_json(&text)
    }

    pub fn insert_digest(&mut self, digest: String, response: StubResponse) {
        self.by_digest.insert(digest, response);
    }

    pub fn insert_load(&mut self, r_ohms: f64, segment: usize, response: StubResponse) {
        self.by_load.insert((nec_num(r_ohms), segment), response);
    }

    /// Number of frequency_response calls served so far.
    pub fn invocations(&self) -> u64 {
        self.invocations.load(Ordering::Relaxed)
    }

    /// (resistance field text, segment) from the first LD card of a deck.
    fn load_key(deck: &str) -> Option<(String, usize)> {
        for line in deck.lines() {
            if let Some(rest) = line.strip_prefix("LD0,1,") {
                let fields: Vec<&str> = rest.split(',').collect();
                if fields.len() >= 3 {
                    if let Ok(seg) = fields[0].parse::<usize>() {
                        return Some((fields[2].to_string(), seg));
                    }
                }
            }
        }
        None
    }
}

impl Default for StubBackend {
    fn default() -> Self {
        Self::new()
    }
}

impl SimulatorBackend for StubBackend {
    fn frequency_response(&self, deck: &str, z0: f64) -> Result<FrequencyResponse, BackendError> {
        self.invocations.fetch_add(1, Ordering::Relaxed);
        let digest = deck_digest(deck);
        if let Some(resp) = self.by_digest.get(&digest) {
            return Ok(resp.to_response(z0));
        }
        if let Some(key) = Self::load_key(deck) {
            if let Some(resp) = self.by_load.get(&key) {
                return Ok(resp.to_response(z0));
            }
        }
        Err(BackendError::new("no stub entry for deck", digest))
    }
}

/// Runs an external field-solver executable per deck. Each invocation gets a
/// digest-named working subdirectory with the solver's expected file layout:
/// the deck as LD_MONO.NEC, INFILE.DAT naming input and output files, and
/// the small helper files some builds look for.
pub struct ExternalNecBackend {
    pub executable: PathBuf,
    pub workdir: PathBuf,
    pub timeout: Duration,
}

impl ExternalNecBackend {
    pub fn new(executable: PathBuf, workdir: PathBuf) -> Self {
        Self {
            executable,
            workdir,
            timeout: Duration::from_secs(60),
        }
    }
}

impl SimulatorBackend for ExternalNecBackend {
    fn frequency_response(&self, deck: &str, z0: f64) -> Result<FrequencyResponse, BackendError> {
        let digest = deck_digest(deck);
        let dir = self.workdir.join(format!("nec-{}", &digest[..16]));
        let io_err = |what: &str, e: std::io::Error| {
            BackendError::new(format!("{what}: {e}"), digest.clone())
        };
        fs::create_dir_all(&dir).map_err(|e| io_err("create workdir", e))?;
        fs::write(dir.join("LD_MONO.NEC"), deck).map_err(|e| io_err("write deck", e))?;
        fs::write(dir.join("INFILE.DAT"), "LD_MONO.NEC\nLD_MONO.OUT\n")
            .map_err(|e| io_err("write INFILE.DAT", e))?;
        fs::write(dir.join("ENDERR.DAT"), "NO\n").map_err(|e| io_err("write ENDERR.DAT", e))?;
        fs::write(dir.join("FILE_MSG.DAT"), "NO\n").map_err(|e| io_err("write FILE_MSG.DAT", e))?;
        fs::write(dir.join("NHSCALE.DAT"), "0.00001\n")
            .map_err(|e| io_err("write NHSCALE.DAT", e))?;
        let out_path = dir.join("LD_MONO.OUT");
        let _ = fs::remove_file(&out_path);

        let mut child = Command::new(&self.executable)
            .current_dir(&dir)
            .stdin(Stdio::null())
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| io_err("spawn solver", e))?;
        let started = Instant::now();
        let status = loop {
            match child.try_wait().map_err(|e| io_err("wait for solver", e))? {
                Some(status) => break status,
                None if started.elapsed() > self.timeout => {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Err(BackendError::new(
                        format!("solver timed out after {:?}", self.timeout),
                        digest,
                    ));
                }
                None => std::thread::sleep(Duration::from_millis(25)),
            }
        };
        if !status.success() {
            return Err(BackendError::new(
                format!("solver exited with {status}"),
                digest,
            ));
        }
        let text = fs::read_to_string(&out_path).map_err(|e| io_err("read solver output", e))?;
        parse_nec_output(&text, z0)
            .map_err(|e| BackendError::new(format!("parse solver output: {e}"), digest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::{generate_single_load_deck, FrequencySweep};
    use crate::monopole::{MonopoleSpec, SingleLoadDesign};

    fn canned() -> StubResponse {
        StubResponse {
            freqs_mhz: vec![5.0, 6.0],
            efficiency_pct: vec![80.0, 85.0],
            gmax_dbi: vec![4.0, 4.2],
            rin_ohms: vec![60.0, 70.0],
            xin_ohms: vec![-10.0, 15.0],
        }
    }

    fn reference_deck() -> String {
        generate_single_load_deck(
            &SingleLoadDesign {
                r_ohms: 5.025126,
                h_m: 1.621357,
            },
            &MonopoleSpec::single_load(),
            &FrequencySweep::default(),
            50.0,
        )
        .unwrap()
    }

    #[test]
    fn digest_lookup_hits() {
        let deck = reference_deck();
        let mut stub = StubBackend::new();
        stub.insert_digest(deck_digest(&deck), canned());
        let resp = stub.frequency_response(&deck, 50.0).unwrap();
        assert_eq!(resp.rin_ohms, vec![60.0, 70.0]);
        assert_eq!(stub.invocations(), 1);
    }

    #[test]
    fn load_pair_lookup_hits() {
        let deck = reference_deck();
        let mut stub = StubBackend::new();
        stub.insert_load(5.025126, 16, canned());
        assert!(stub.frequency_response(&deck, 50.0).is_ok());
    }

    #[test]
    fn miss_reports_the_digest() {
        let deck = reference_deck();
        let stub = StubBackend::new();
        let err = stub.frequency_response(&deck, 50.0).unwrap_err();
        assert_eq!(err.deck_digest, deck_digest(&deck));
    }

    #[test]
    fn fixture_json_round_trip() {
        let json = r#"{
            "entries": [
                {"r_load": 5.025126, "segment": 16,
                 "response": {"freqs_mhz": [5.0], "efficiency_pct": [80.0],
                              "gmax_dbi": [4.0], "rin_ohms": [50.0], "xin_ohms": [0.0]}}
            ]
        }"#;
        let stub = StubBackend::from_json(json).unwrap();
        let resp = stub.frequency_response(&reference_deck(), 50.0).unwrap();
        assert_eq!(resp.vswr, vec![1.0]);
    }

    #[test]
    fn malformed_fixture_is_rejected() {
        assert!(StubBackend::from_json("{").is_err());
        let missing_key = r#"{"entries": [{"response": {"freqs_mhz": [],
            "efficiency_pct": [], "gmax_dbi": [], "rin_ohms": [], "xin_ohms": []}}]}"#;
        assert!(StubBackend::from_json(missing_key).is_err());
    }
}
