//! Declarative cohomology claims about (filtered) homogeneous bundles on G/B
//! and their verification.

use super::{euler_char_filtered, line_bundle_cohomology, CohomologyResult};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// Ambient `G/B`; `parabolic` records the `G/P` the bundle is pulled back from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Space {
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Assertion {
    AllCohomologyZero,
    EulerCharEquals { value: i64 },
    ConcentratedIn { degree: usize, dimension: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingClaim {
    pub id: String,
    pub citation: String,
    pub space: Space,
    /// Weights of the line-bundle filtration (a single weight for a line bundle).
    pub weights: Vec<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Weight>,
    pub assertion: Assertion,
}

/// Claims file: a bare JSON list, or an object with a `claims` list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClaimsFile {
    List(Vec<VanishingClaim>),
    Object { claims: Vec<VanishingClaim> },
}

impl ClaimsFile {
    pub fn parse(json: &str) -> Result<Vec<VanishingClaim>> {
        let f: ClaimsFile = serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("claims file: {e}")))?;
        Ok(match f {
            ClaimsFile::List(c) | ClaimsFile::Object { claims: c } => c,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Refuted,
    NotDecidable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepResult {
    pub weight: Weight,
    pub cohomology: CohomologyResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub citation: String,
    pub verdict: Verdict,
    pub euler_characteristic: i128,
    pub evidence: String,
    pub steps: Vec<StepResult>,
}

impl VanishingClaim {
    fn validate(&self, rs: &RootSystem) -> Result<()> {
        if self.weights.is_empty() {
            return Err(Error::InvalidInput(format!("claim {}: empty weight list", self.id)));
        }
        if let Some(p) = &self.space.parabolic {
            if p.iter().any(|&i| i >= rs.rank) {
                return Err(Error::InvalidInput(format!("claim {}: parabolic index out of range", self.id)));
            }
        }
        let bad = self.weights.iter().chain(&self.twist).find(|w| w.rank() != rs.rank);
        if let Some(w) = bad {
            return Err(Error::InvalidInput(format!("claim {}: weight {w} has wrong rank", self.id)));
        }
        Ok(())
    }

    pub fn check(&self) -> Result<ClaimReport> {
        let rs = RootSystem::from_name(&self.space.group)?;
        self.validate(&rs)?;
        let twist = self.twist.clone().unwrap_or_else(|| Weight::zero(rs.rank));
        let mut steps = vec![];
        for w in &self.weights {
            let weight = w + &twist;
            let cohomology = line_bundle_cohomology(&rs, &weight)?;
            steps.push(StepResult { weight, cohomology });
        }
        let chi = euler_char_filtered(&rs, &self.weights, &twist)?;
        let nonzero: Vec<&StepResult> = steps.iter().filter(|s| s.cohomology != CohomologyResult::AllZero).collect();
        let single_degree = {
            let mut d: Vec<usize> = nonzero.iter().filter_map(|s| s.cohomology.degree()).collect();
            d.sort_unstable();
            d.dedup();
            (d.len() == 1).then(|| d[0])
        };
        let total_dim: u64 = nonzero.iter().map(|s| s.cohomology.dimension()).sum();
        let (verdict, evidence) = match &self.assertion {
            Assertion::EulerCharEquals { value } => {
                let v = if chi == *value as i128 { Verdict::Verified } else { Verdict::Refuted };
                (v, format!("Euler characteristic {chi}"))
            }
            Assertion::AllCohomologyZero => {
                if nonzero.is_empty() {
                    (Verdict::Verified, "every filtration step is acyclic".to_string())
                } else if chi != 0 {
                    (Verdict::Refuted, format!("Euler characteristic {chi} is nonzero"))
                } else if self.weights.len() == 1 {
                    (Verdict::Refuted, "line bundle has nonzero cohomology".to_string())
                } else {
                    (
                        Verdict::NotDecidable,
                        format!("{} of {} steps have cohomology, Euler characteristic 0", nonzero.len(), steps.len()),
                    )
                }
            }
            Assertion::ConcentratedIn { degree, dimension } => match single_degree {
                // all nonzero steps in one degree: the long exact sequences split into that degree
                Some(d) => {
                    let ok = d == *degree && total_dim == *dimension;
                    let v = if ok { Verdict::Verified } else { Verdict::Refuted };
                    (v, format!("cohomology concentrated in degree {d}, dimension {total_dim}"))
                }
                None if nonzero.is_empty() => (Verdict::Refuted, "all cohomology vanishes".to_string()),
                None => {
                    let expected = if degree % 2 == 0 { *dimension as i128 } else { -(*dimension as i128) };
                    if chi != expected {
                        (Verdict::Refuted, format!("Euler characteristic {chi}, expected {expected}"))
                    } else {
                        (Verdict::NotDecidable, "steps contribute in several degrees".to_string())
                    }
                }
            },
        };
        Ok(ClaimReport {
            id: self.id.clone(),
            citation: self.citation.clone(),
            verdict,
            euler_characteristic: chi,
            evidence,
            steps,
        })
    }
}

pub fn verify_claims(claims: &[VanishingClaim]) -> Result<Vec<ClaimReport>> {
    claims.iter().map(VanishingClaim::check).collect()
}

pub fn reports_to_markdown(reports: &[ClaimReport]) -> String {
    let mut s = String::from("| id | verdict | chi | evidence | citation |\n|---|---|---|---|---|\n");
    for r in reports {
        let v = match r.verdict {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::NotDecidable => "not_decidable",
        };
        writeln!(s, "| {} | {v} | {} | {} | {} |", r.id, r.euler_characteristic, r.evidence, r.citation).unwrap();
    }
    s
}
