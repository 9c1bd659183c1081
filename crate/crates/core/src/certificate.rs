//! Re-verifiable claims: avoidance, arrowing and exact values.
//!
//! The content hash is SHA-256 over the compact JSON of the claim fields
//! (format, claim, target, r, host, coloring, value); status and note are
//! outside it.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::hypercore::{complete_hypergraph, EdgeColoring, Hypergraph, Target};
use crate::monosearch::{
    arrows, find_mono_target, size_ramsey_exact, ArrowOutcome, ExactOutcome, SearchError, SearchLimits, Witness,
};
use crate::FORMAT_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// The coloring of the host has no monochromatic target.
    Avoids,
    /// Every `r`-coloring of the host has a monochromatic target.
    Arrows,
    /// The complete host on `value` vertices is the least arrowing one.
    RamseyExact,
    /// The host has `value` edges, arrows, and no host with fewer edges does.
    SizeRamseyExact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Unverified,
    Verified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: u32,
    pub claim: Claim,
    pub target: Target,
    pub r: usize,
    pub host: Hypergraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<EdgeColoring>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub status: Status,
    pub hash: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize)]
struct Hashed<'a> {
    format: u32,
    claim: Claim,
    target: &'a Target,
    r: usize,
    host: &'a Hypergraph,
    coloring: &'a Option<EdgeColoring>,
    value: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Schema(String),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Outcome of re-checking a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Valid,
    Invalid { reason: String, witness: Option<Witness> },
    /// Re-search ran out of budget.
    Unknown,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        *self == Verification::Valid
    }

    fn invalid(reason: impl Into<String>) -> Self {
        Verification::Invalid {
            reason: reason.into(),
            witness: None,
        }
    }
}

impl Certificate {
    pub fn new(
        claim: Claim,
        target: Target,
        r: usize,
        host: Hypergraph,
        coloring: Option<EdgeColoring>,
        value: Option<usize>,
    ) -> Self {
        let mut cert = Self {
            format: FORMAT_VERSION,
            claim,
            target,
            r,
            host,
            coloring,
            value,
            status: Status::Unverified,
            hash: String::new(),
            note: None,
        };
        cert.hash = cert.compute_hash();
        cert
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn compute_hash(&self) -> String {
        let body = Hashed {
            format: self.format,
            claim: self.claim,
            target: &self.target,
            r: self.r,
            host: &self.host,
            coloring: &self.coloring,
            value: self.value,
        };
        let json = serde_json::to_vec(&body).expect("claim fields serialize");
        hex::encode(Sha256::digest(&json))
    }

    /// File name in a certificate store: claim kind and hash prefix.
    pub fn file_name(&self) -> String {
        let kind = serde_json::to_value(self.claim).expect("claim serializes");
        format!("{}-{}.json", kind.as_str().unwrap_or("claim"), &self.hash[..16])
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        let cert: Self = serde_json::from_str(text).map_err(|e| CertificateError::Schema(e.to_string()))?;
        if cert.format != FORMAT_VERSION {
            return Err(CertificateError::Schema(format!("unsupported format {}", cert.format)));
        }
        Ok(cert)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Verifies and, on success, marks the certificate verified.
    pub fn verify_and_mark(mut self, limits: SearchLimits) -> Result<(Self, Verification), CertificateError> {
        let v = verify_certificate(&self, limits)?;
        if v.is_valid() {
            self.status = Status::Verified;
        }
        Ok((self, v))
    }
}

/// Re-runs the detector or search that backs the claim.
pub fn verify_certificate(cert: &Certificate, limits: SearchLimits) -> Result<Verification, CertificateError> {
    if cert.host.uniformity() != cert.target.k() {
        return Err(CertificateError::Schema(format!(
            "host is {}-uniform but the target is {}-uniform",
            cert.host.uniformity(),
            cert.target.k()
        )));
    }
    if cert.r == 0 {
        return Err(CertificateError::Schema("r must be positive".into()));
    }
    let v = match cert.claim {
        Claim::Avoids => {
            let Some(coloring) = &cert.coloring else {
                return Err(CertificateError::Schema("avoids claim without coloring".into()));
            };
            if let Err(e) = coloring.validate(&cert.host, cert.r) {
                return Ok(Verification::invalid(e.to_string()));
            }
            match find_mono_target(&cert.host, coloring, &cert.target)? {
                Some(w) => Verification::Invalid {
                    reason: format!("monochromatic {} in color {}", cert.target, w.color()),
                    witness: Some(w),
                },
                None => Verification::Valid,
            }
        }
        Claim::Arrows => match arrows(&cert.host, cert.r, &cert.target, limits)?.outcome {
            ArrowOutcome::Arrows => Verification::Valid,
            ArrowOutcome::Avoided(_) => Verification::invalid("an avoiding coloring exists"),
            ArrowOutcome::Unknown => Verification::Unknown,
        },
        Claim::RamseyExact => verify_ramsey(cert, limits)?,
        Claim::SizeRamseyExact => verify_size_ramsey(cert, limits)?,
    };
    if v.is_valid() && cert.hash != cert.compute_hash() {
        return Ok(Verification::invalid("content hash does not match"));
    }
    Ok(v)
}

fn verify_ramsey(cert: &Certificate, limits: SearchLimits) -> Result<Verification, CertificateError> {
    let Some(n) = cert.value else {
        return Err(CertificateError::Schema("exact claim without value".into()));
    };
    let k = cert.target.k();
    if n < k || cert.host != complete_hypergraph(n, k).map_err(SearchError::from)? {
        return Ok(Verification::invalid("host is not the complete hypergraph on value vertices"));
    }
    match arrows(&cert.host, cert.r, &cert.target, limits)?.outcome {
        ArrowOutcome::Arrows => {}
        ArrowOutcome::Avoided(_) => return Ok(Verification::invalid("complete host does not arrow")),
        ArrowOutcome::Unknown => return Ok(Verification::Unknown),
    }
    if n - 1 < cert.target.min_vertices() || n - 1 < k {
        return Ok(Verification::Valid);
    }
    let smaller = complete_hypergraph(n - 1, k).map_err(SearchError::from)?;
    Ok(match arrows(&smaller, cert.r, &cert.target, limits)?.outcome {
        ArrowOutcome::Avoided(_) => Verification::Valid,
        ArrowOutcome::Arrows => Verification::invalid("a smaller complete host already arrows"),
        ArrowOutcome::Unknown => Verification::Unknown,
    })
}

fn verify_size_ramsey(cert: &Certificate, limits: SearchLimits) -> Result<Verification, CertificateError> {
    let Some(m) = cert.value else {
        return Err(CertificateError::Schema("exact claim without value".into()));
    };
    if cert.host.edge_count() != m {
        return Ok(Verification::invalid(format!(
            "host has {} edges, claimed {m}",
            cert.host.edge_count()
        )));
    }
    match arrows(&cert.host, cert.r, &cert.target, limits)?.outcome {
        ArrowOutcome::Arrows => {}
        ArrowOutcome::Avoided(_) => return Ok(Verification::invalid("host does not arrow")),
        ArrowOutcome::Unknown => return Ok(Verification::Unknown),
    }
    if m == 0 {
        return Ok(Verification::Valid);
    }
    Ok(match size_ramsey_exact(&cert.target, cert.r, m - 1, limits)?.outcome {
        ExactOutcome::LowerBound(_) => Verification::Valid,
        ExactOutcome::Exact(v) => Verification::invalid(format!("a host with {v} edges already arrows")),
        ExactOutcome::Unknown { .. } => Verification::Unknown,
    })
}
