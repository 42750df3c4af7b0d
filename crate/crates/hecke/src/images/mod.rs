//! Field cases, factorization tests, exterior powers, image predictions and
//! the checks used to compare a representation against a predicted group.

mod classify;
mod enumerate;
mod exterior;
mod factor;
mod predict;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldCtx, GfError};
use crate::hoefsmit::{HeckeError, HeckeParams};

pub use classify::{
    algebra_span_dim, classify_image, classify_image_d, enveloping_span_dim, expected_signature,
    is_pseudo_reflection, is_transvection, solve_forms, trace_subfield_degree, FormSolution,
    ImageReport, Signature, Verdict,
};
pub use enumerate::{derived_subgroup_order, enumerate_group, GroupEnumeration, DEFAULT_CAP};
pub use exterior::{compound_matrix, exterior_power_check, ExteriorReport};
pub use factor::{dual_label_d, predicted_relation_b, predicted_relation_d, test_factorization, FactorKind, Relation, Transform};
pub use predict::{
    canonical_rep_b, canonical_rep_d, class_members_b, predict_image_b, predict_image_d, transversal_b,
    transversal_d,
};
pub use search::{find_params_b, find_params_d, parameter_pool_b, SEARCH_MAX_Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ImagesError {
    #[error("no field case matches the subfield degrees {0:?}")]
    Inconsistent([u32; 6]),
    #[error("representations have dimensions {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not the canonical representative of its class")]
    NotRepresentative(String),
    #[error("field of degree {0} has no automorphism of order 2")]
    NoInvolution(u32),
    #[error("enumeration exceeded the cap of {0} elements")]
    Overflow(usize),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Which of the six configurations of subfields `F_p(α,β)`, `F_p(α+α⁻¹,β+β⁻¹)`,
/// `F_p(α,β+β⁻¹)`, `F_p(α+α⁻¹,β)` the parameters realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldCase {
    pub case_id: u8,
    /// Degrees of `F_p(α,β)`, `F_p(α+α⁻¹,β+β⁻¹)`, `F_p(α,β+β⁻¹)`, `F_p(α+α⁻¹,β)`.
    pub degrees: [u32; 4],
    /// Degrees of `F_p(α)` and `F_p(α+α⁻¹)`.
    pub dtilde: [u32; 2],
    pub p: u64,
}

impl FieldCase {
    pub fn d(&self) -> u32 {
        self.degrees[0]
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.d())
    }

    pub fn q_tilde(&self) -> u64 {
        self.p.pow(self.dtilde[0])
    }

    /// `F_p(α) != F_p(α+α⁻¹)`.
    pub fn alpha_unitary(&self) -> bool {
        self.dtilde[0] != self.dtilde[1]
    }
}

/// Case from the six subfield degrees, or `None` when no pattern matches.
pub fn case_from_degrees(deg: [u32; 4], dtilde: [u32; 2]) -> Option<u8> {
    let [d_ab, d_ss, d_as, d_sb] = deg;
    let [da, dsa] = dtilde;
    if d_ss == d_ab {
        Some(if da == dsa { 1 } else { 2 })
    } else if d_as == d_ab && d_sb == d_ab {
        Some(3)
    } else if d_as == d_ab {
        Some(4)
    } else if d_sb == d_ab {
        Some(if da != dsa { 5 } else { 6 })
    } else {
        None
    }
}

pub(crate) fn degrees_of(f: &FieldCtx, alpha: crate::gf::Fel, beta: crate::gf::Fel) -> ([u32; 4], [u32; 2]) {
    let sa = f.plus_inverse(alpha);
    let sb = f.plus_inverse(beta);
    (
        [
            f.subfield_degree(&[alpha, beta]),
            f.subfield_degree(&[sa, sb]),
            f.subfield_degree(&[alpha, sb]),
            f.subfield_degree(&[sa, beta]),
        ],
        [f.subfield_degree(&[alpha]), f.subfield_degree(&[sa])],
    )
}

pub fn classify_field_case(params: &HeckeParams) -> Result<FieldCase, ImagesError> {
    let (degrees, dtilde) = degrees_of(&params.field, params.alpha, params.beta);
    let case_id = case_from_degrees(degrees, dtilde).ok_or(ImagesError::Inconsistent([
        degrees[0], degrees[1], degrees[2], degrees[3], dtilde[0], dtilde[1],
    ]))?;
    Ok(FieldCase {
        case_id,
        degrees,
        dtilde,
        p: params.field.p(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SL,
    SU,
    SP,
    OmegaPlus,
}

/// The field a predicted group is written over, relative to `q = |F_p(α,β)|`
/// and `q̃ = |F_p(α)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSymbol {
    Q,
    QHalf,
    QTilde,
    QTildeHalf,
}

impl fmt::Display for FieldSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldSymbol::Q => "q",
            FieldSymbol::QHalf => "q^1/2",
            FieldSymbol::QTilde => "q~",
            FieldSymbol::QTildeHalf => "q~^1/2",
        })
    }
}

/// A predicted classical group: family, degree and field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupLabel {
    pub family: Family,
    pub degree: usize,
    pub field_size: u64,
    pub field: FieldSymbol,
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::SL => "SL",
            Family::SU => "SU",
            Family::SP => "SP",
            Family::OmegaPlus => "OmegaPlus",
        };
        write!(f, "{}({}, {})", fam, self.degree, self.field)
    }
}

fn checked_prod(xs: impl Iterator<Item = u128>) -> Option<u128> {
    xs.fold(Some(1u128), |acc, x| acc.and_then(|a| a.checked_mul(x)))
}

impl GroupLabel {
    /// Group order when it fits in 128 bits.
    pub fn order(&self) -> Option<u128> {
        let r = self.field_size as u128;
        let n = self.degree as u32;
        let rp = |e: u32| r.checked_pow(e);
        match self.family {
            Family::SL => checked_prod(
                std::iter::once(rp(n * (n.saturating_sub(1)) / 2)?)
                    .chain((2..=n).map(|i| rp(i).map(|x| x - 1).unwrap_or(u128::MAX))),
            ),
            Family::SU => {
                let mut acc = rp(n * (n.saturating_sub(1)) / 2)?;
                for i in 2..=n {
                    let x = rp(i)?;
                    let t = if i % 2 == 0 { x - 1 } else { x + 1 };
                    acc = acc.checked_mul(t)?;
                }
                Some(acc)
            }
            Family::SP => {
                let m = n / 2;
                let mut acc = rp(m * m)?;
                for i in 1..=m {
                    acc = acc.checked_mul(rp(2 * i)? - 1)?;
                }
                Some(acc)
            }
            Family::OmegaPlus => {
                if n % 2 == 1 {
                    let m = n / 2;
                    let mut acc = rp(m * m)?;
                    for i in 1..=m {
                        acc = acc.checked_mul(rp(2 * i)? - 1)?;
                    }
                    return Some(if r % 2 == 1 { acc / 2 } else { acc });
                }
                let m = n / 2;
                let mut acc = rp(m * (m.saturating_sub(1)))?.checked_mul(rp(m)? - 1)?;
                for i in 1..m {
                    acc = acc.checked_mul(rp(2 * i)? - 1)?;
                }
                Some(if r % 2 == 1 { acc / 2 } else { acc })
            }
        }
    }
}

/// Field size `p^e` as a symbol relative to the base field.
pub(crate) fn sized(p: u64, deg: u32, half: bool) -> u64 {
    if half {
        p.pow(deg / 2)
    } else {
        p.pow(deg)
    }
}
