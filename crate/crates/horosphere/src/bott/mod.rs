//! Bott-Demazure cohomology of line bundles on G/B and Euler characteristics
//! of bundles with a line-bundle filtration.

pub mod claims;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight, WeylElement};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

pub use claims::{reports_to_markdown, verify_claims, Assertion, ClaimReport, ClaimsFile, Space, VanishingClaim, Verdict};

/// Cohomology of `L_chi` on `G/B`: zero, or a single irreducible module in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CohomologyResult {
    AllZero,
    Concentrated { degree: usize, highest_weight: Weight, dimension: u64 },
}

impl CohomologyResult {
    pub fn euler_characteristic(&self) -> i128 {
        match self {
            CohomologyResult::AllZero => 0,
            CohomologyResult::Concentrated { degree, dimension, .. } => {
                let d = *dimension as i128;
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyResult::AllZero => None,
            CohomologyResult::Concentrated { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> u64 {
        match self {
            CohomologyResult::AllZero => 0,
            CohomologyResult::Concentrated { dimension, .. } => *dimension,
        }
    }
}

fn check_rank(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.rank() != rs.rank {
        return Err(Error::InvalidInput(format!("weight {w} has rank {}, expected {}", w.rank(), rs.rank)));
    }
    Ok(())
}

/// Dominating element `w` and image `w(chi + rho)`, or `None` when `chi + rho` is singular.
pub fn dominating_element(rs: &RootSystem, chi: &Weight) -> Option<(WeylElement, Weight)> {
    let mu = chi + &rs.rho;
    if !rs.is_regular(&mu) {
        return None;
    }
    Some(rs.to_dominant(&mu))
}

/// `H^*(G/B, L_chi)` by Bott's theorem: zero when `chi + rho` is singular,
/// otherwise `V(w . chi)` in degree `l(w)` with `w(chi + rho)` dominant.
pub fn line_bundle_cohomology(rs: &RootSystem, chi: &Weight) -> Result<CohomologyResult> {
    check_rank(rs, chi)?;
    match dominating_element(rs, chi) {
        None => Ok(CohomologyResult::AllZero),
        Some((w, dom)) => {
            let highest_weight = &dom - &rs.rho;
            let dimension = weyl_dimension(rs, &highest_weight)?;
            Ok(CohomologyResult::Concentrated { degree: w.length(), highest_weight, dimension })
        }
    }
}

/// Weyl dimension formula `prod <lambda + rho, g^vee> / <rho, g^vee>` over positive roots.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    check_rank(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let shifted = lambda + &rs.rho;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for g in 0..rs.positive_roots.len() {
        num *= rs.pair(&shifted, g);
        den *= rs.pair(&rs.rho, g);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r == BigInt::from(0), "Weyl dimension is an integer");
    q.to_u64().ok_or_else(|| Error::Overflow(format!("dimension of V({lambda}) exceeds u64")))
}

/// Euler characteristic of a bundle filtered by the line bundles `L_{w + twist}`.
pub fn euler_char_filtered(rs: &RootSystem, weights: &[Weight], twist: &Weight) -> Result<i128> {
    check_rank(rs, twist)?;
    let mut total: i128 = 0;
    for w in weights {
        total += line_bundle_cohomology(rs, &(w + twist))?.euler_characteristic();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;

    #[test]
    fn g2_examples() {
        let g2 = RootSystem::new(LieType::G2, 2).unwrap();
        let w = |a, b| Weight(vec![a, b]);
        assert_eq!(line_bundle_cohomology(&g2, &w(1, -1)).unwrap(), CohomologyResult::AllZero);
        let minus_alpha = -&g2.simple_root(0);
        assert_eq!(
            line_bundle_cohomology(&g2, &minus_alpha).unwrap(),
            CohomologyResult::Concentrated { degree: 1, highest_weight: w(0, 0), dimension: 1 }
        );
        assert_eq!(weyl_dimension(&g2, &w(1, 0)).unwrap(), 7);
        assert_eq!(weyl_dimension(&g2, &w(0, 1)).unwrap(), 14);
        assert!(matches!(weyl_dimension(&g2, &w(-1, 0)), Err(Error::NotDominant(_))));
        assert!(line_bundle_cohomology(&g2, &Weight(vec![0, 0, 0])).is_err());
    }
}
