//! Result envelopes: one JSON document per executed task, with a digest of
//! everything that influenced the computation. Reruns of the same session
//! and flags serialize byte for byte, which is why wall-clock timings stay
//! out unless explicitly requested.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize, Clone)]
pub struct Metadata {
    pub cap: u32,
    pub caps_hit: bool,
    pub stabilization: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<u64>,
}

#[derive(Serialize, Clone)]
pub struct ResultEnvelope {
    pub task: String,
    pub kind: String,
    pub inputs_digest: String,
    pub outputs: serde_json::Value,
    pub metadata: Metadata,
}

impl ResultEnvelope {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serialization")
    }
}

/// Digest over the canonical session text, the task line and the flags
/// that change results. Output formatting flags stay out.
pub fn inputs_digest(session_text: &str, task_line: &str, cap: u32, seed: Option<u64>) -> String {
    let mut h = Sha256::new();
    h.update(session_text.as_bytes());
    h.update(b"\x00task=");
    h.update(task_line.as_bytes());
    h.update(b"\x00cap=");
    h.update(cap.to_string().as_bytes());
    if let Some(s) = seed {
        h.update(b"\x00seed=");
        h.update(s.to_string().as_bytes());
    }
    let out = h.finalize();
    out.iter().map(|b| format!("{:02x}", b)).collect()
}
