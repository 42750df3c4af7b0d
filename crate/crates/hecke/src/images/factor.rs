use serde::{Deserialize, Serialize};

use super::{FieldCase, ImagesError};
use crate::gf::{Fel, FieldCtx};
use crate::hoefsmit::{Rep, RepKind, Sign};
use crate::matrix::{Mat, RowSpace};
use crate::tableaux::{phi_d, DoublePartition};
use crate::typed::DLabel;

/// What is applied to the second representation before comparing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Transform {
    Id,
    /// `g ↦ ᵗR(g)⁻¹`.
    Dual,
    /// The field involution applied entrywise.
    Eps,
    EpsDual,
}

impl Transform {
    pub const ALL: [Transform; 4] = [Transform::Id, Transform::Dual, Transform::Eps, Transform::EpsDual];

    pub fn relation(self) -> Relation {
        match self {
            Transform::Id => Relation::Iso,
            Transform::Dual => Relation::Dual,
            Transform::Eps => Relation::Eps,
            Transform::EpsDual => Relation::EpsDual,
        }
    }

    fn uses_eps(self) -> bool {
        matches!(self, Transform::Eps | Transform::EpsDual)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Iso,
    Dual,
    Eps,
    EpsDual,
    None,
}

/// Outcome of a factorization test. `witness` is the invertible `X` with
/// `R_A(g) X = c(g) X T(R_B(g))`; `twist` holds `c(T)` (or `c(U)`) and `c(S_i)`.
#[derive(Debug, Clone)]
pub struct FactorKind {
    pub relation: Relation,
    pub witness: Option<Mat>,
    pub twist: Option<(Fel, Fel)>,
}

impl FactorKind {
    fn none() -> FactorKind {
        FactorKind {
            relation: Relation::None,
            witness: None,
            twist: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation != Relation::None
    }
}

fn transformed(rep: &Rep, t: Transform) -> Result<Vec<Mat>, ImagesError> {
    let f = &rep.field;
    let base: Vec<Mat> = match t {
        Transform::Id | Transform::Eps => rep.gens.clone(),
        Transform::Dual | Transform::EpsDual => rep.inverses.iter().map(|m| m.transpose()).collect(),
    };
    if !t.uses_eps() {
        return Ok(base);
    }
    if f.d() % 2 != 0 {
        return Err(ImagesError::NoInvolution(f.d()));
    }
    let half = f.d() as i64 / 2;
    Ok(base.iter().map(|m| m.map(|x| f.frobenius(x, half))).collect())
}

/// Append the linear equations of `A X - c X B = 0` in the entries of `X`.
pub(super) fn add_equations(space: &mut RowSpace, a: &Mat, b: &Mat, c: Fel, f: &FieldCtx) -> bool {
    let n = a.rows();
    let nc = f.neg(c);
    let mut grew = false;
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Fel::ZERO; n * n];
            for k in 0..n {
                let x = a[(i, k)];
                if x != Fel::ZERO {
                    row[k * n + j] = f.add(row[k * n + j], x);
                }
                let y = b[(k, j)];
                if y != Fel::ZERO {
                    row[i * n + k] = f.add(row[i * n + k], f.mul(nc, y));
                }
            }
            grew |= space.insert(row, f);
        }
    }
    grew
}

fn solve_twisted(a: &[Mat], b: &[Mat], coeffs: &[Fel], f: &FieldCtx) -> Option<Mat> {
    let n = a[0].rows();
    let mut space = RowSpace::new(n * n);
    for ((ga, gb), &c) in a.iter().zip(b).zip(coeffs) {
        add_equations(&mut space, ga, gb, c, f);
        if space.dim() == n * n {
            return None;
        }
    }
    let sols = space.solutions(f);
    sols.into_iter()
        .map(|v| Mat::from_flat(n, n, v))
        .find(|x| x.det(f) != Fel::ZERO)
}

/// Test whether `R_A ≅ T(R_B) ⊗ χ` for a linear character `χ` of the
/// algebra, where `T` is one of the four transforms.
pub fn test_factorization(a: &Rep, b: &Rep, transform: Transform) -> Result<FactorKind, ImagesError> {
    if a.dim() != b.dim() {
        return Err(ImagesError::DimensionMismatch(a.dim(), b.dim()));
    }
    let f = &a.field;
    let tb = transformed(b, transform)?;
    let one = f.one();
    let us = [one, f.neg(a.alpha)];
    let vs = [one, f.neg(a.beta)];
    let type_d = a.label.kind == RepKind::D;
    for &u in &us {
        let v_choices: &[Fel] = if type_d { &[Fel::ZERO] } else { &vs };
        for &v in v_choices {
            let c0 = if type_d { u } else { v };
            let coeffs: Vec<Fel> = (0..a.gens.len()).map(|i| if i == 0 { c0 } else { u }).collect();
            if let Some(x) = solve_twisted(&a.gens, &tb, &coeffs, f) {
                return Ok(FactorKind {
                    relation: transform.relation(),
                    witness: Some(x),
                    twist: Some((c0, u)),
                });
            }
        }
    }
    Ok(FactorKind::none())
}

/// Expected outcome for two type-B labels without empty components.
pub fn predicted_relation_b(lam: &DoublePartition, mu: &DoublePartition, t: Transform, case: &FieldCase) -> bool {
    match t {
        Transform::Id => lam == mu,
        Transform::Dual => *mu == lam.transpose(),
        Transform::Eps => match case.case_id {
            3 => *mu == lam.transpose(),
            4 => *mu == lam.conj_components(),
            5 | 6 => *mu == lam.swap(),
            _ => false,
        },
        Transform::EpsDual => match case.case_id {
            3 => mu == lam,
            4 => *mu == lam.swap(),
            5 | 6 => *mu == lam.conj_components(),
            _ => false,
        },
    }
}

/// The label whose module is dual to `R_λ` in type D.
pub fn dual_label_d(label: &DLabel) -> DLabel {
    let shape = phi_d(&label.shape);
    let n = label.n();
    let sign = label.sign.map(|s| {
        if n % 4 == 0 {
            s
        } else {
            match s {
                Sign::Plus => Sign::Minus,
                Sign::Minus => Sign::Plus,
            }
        }
    });
    DLabel { shape, sign }
}

/// Expected outcome for two type-D labels; `unitary` is `F_p(α) != F_p(α+α⁻¹)`.
pub fn predicted_relation_d(lam: &DLabel, mu: &DLabel, t: Transform, unitary: bool) -> bool {
    match t {
        Transform::Id => lam == mu,
        Transform::Dual => *mu == dual_label_d(lam),
        Transform::Eps => unitary && *mu == dual_label_d(lam),
        Transform::EpsDual => unitary && lam == mu,
    }
}
