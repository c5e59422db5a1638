//! Verdicts and verification modes shared by every decision procedure.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
    NotDecided,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }

    pub fn is_no(self) -> bool {
        self == Verdict::No
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Mode {
    /// A single exact linear-algebra computation.
    Exact,
    /// Every candidate in a finite search space was checked.
    VerifiedExhaustive,
    /// Random sampling; a `No` is still backed by a certificate.
    Probabilistic { seed: u64, trials: usize },
    /// Relative to a caller-supplied finite list (e.g. of ideals).
    Relative { items: usize },
    NotDecided { reason: String },
}
