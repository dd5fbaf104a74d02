//! JSON frame files: `{"n": 3, "k": 1, "frames": [[row-major n·k reals], …], "tol_orth": 1e-10}`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::frame::SubspaceFrame;
use crate::config::TOL_ORTH;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub n: usize,
    pub k: usize,
    pub frames: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_orth: Option<f64>,
}

impl FrameFile {
    pub fn from_frames(frames: &[SubspaceFrame]) -> Result<Self> {
        let first = frames
            .first()
            .ok_or_else(|| Error::invalid("no frames to serialize"))?;
        Ok(FrameFile {
            n: first.n(),
            k: first.k(),
            frames: frames.iter().map(SubspaceFrame::row_major).collect(),
            tol_orth: None,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("malformed frame file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("frame file serializes")
    }

    /// Validated frames; rounding in the file is repaired per the
    /// ingestion policy of [`SubspaceFrame::with_tolerance`].
    pub fn frames(&self) -> Result<Vec<SubspaceFrame>> {
        let tol = self.tol_orth.unwrap_or(TOL_ORTH);
        if self.k == 0 || self.k > self.n {
            return Err(Error::invalid(format!(
                "need 1 <= k <= n, got k = {}, n = {}",
                self.k, self.n
            )));
        }
        self.frames
            .iter()
            .enumerate()
            .map(|(i, entries)| {
                if entries.len() != self.n * self.k {
                    return Err(Error::invalid(format!(
                        "frame {i} has {} entries, expected {}",
                        entries.len(),
                        self.n * self.k
                    )));
                }
                SubspaceFrame::with_tolerance(DMatrix::from_row_slice(self.n, self.k, entries), tol)
                    .map_err(|e| Error::invalid(format!("frame {i}: {e}")))
            })
            .collect()
    }
}
