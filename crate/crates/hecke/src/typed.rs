//! Type D as the subalgebra of `H_{B_n, α, 1}` generated by `U = T S_1 T`
//! and the `S_i`, with the splitting of modules whose components coincide.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gf::{Fel, FieldCtx};
use crate::hoefsmit::{hoefsmit_matrices, ArtinWord, HeckeError, Rep, RepKind, RepLabel, Sign};
use crate::matrix::Mat;
use crate::tableaux::{
    d_normalize, double_partitions, is_d_normalized, standard_tableaux, tableau_index,
    DoublePartition, DoubleTableau, Partition,
};

#[derive(Debug, Clone)]
pub struct DParams {
    pub field: FieldCtx,
    pub alpha: Fel,
    pub n: usize,
}

impl DParams {
    pub fn new(field: FieldCtx, alpha: Fel, n: usize) -> Result<DParams, HeckeError> {
        if field.p() == 2 {
            return Err(HeckeError::EvenCharacteristic);
        }
        if n < 4 {
            return Err(HeckeError::BadRank { n, min: 4 });
        }
        let order = field.element_order(alpha)?;
        if order <= 2 * n as u64 {
            return Err(HeckeError::BadOrder { order, n });
        }
        let got = field.subfield_degree(&[alpha]);
        if got != field.d() {
            return Err(HeckeError::NotGenerating { got, d: field.d() });
        }
        Ok(DParams { field, alpha, n })
    }

    /// `F_p(α) = F_p(α + α⁻¹)`.
    pub fn field_split(&self) -> bool {
        let f = &self.field;
        f.subfield_degree(&[f.plus_inverse(self.alpha)]) == f.d()
    }
}

/// `(λ₁, λ₂)` with `λ₁ >= λ₂`, signed exactly when the components agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DLabel {
    pub shape: DoublePartition,
    pub sign: Option<Sign>,
}

impl DLabel {
    pub fn new(shape: DoublePartition, sign: Option<Sign>) -> Result<DLabel, HeckeError> {
        let equal = shape.left == shape.right;
        if !is_d_normalized(&shape) || equal != sign.is_some() {
            return Err(HeckeError::BadLabel(shape.to_string()));
        }
        Ok(DLabel { shape, sign })
    }

    pub fn unsigned(shape: DoublePartition) -> DLabel {
        DLabel::new(shape, None).expect("valid unsigned label")
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self) -> u128 {
        match self.sign {
            Some(_) => self.shape.dim() / 2,
            None => self.shape.dim(),
        }
    }

    /// Labels for a (possibly unnormalized) shape: one, or both signs.
    pub fn for_shape(shape: &DoublePartition) -> Vec<DLabel> {
        let s = d_normalize(shape);
        if s.left == s.right {
            vec![
                DLabel {
                    shape: s.clone(),
                    sign: Some(Sign::Plus),
                },
                DLabel {
                    shape: s,
                    sign: Some(Sign::Minus),
                },
            ]
        } else {
            vec![DLabel {
                shape: s,
                sign: None,
            }]
        }
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(s) => write!(f, "{}{}", self.shape, s),
            None => write!(f, "{}", self.shape),
        }
    }
}

/// All type-D labels of rank `n`, in order.
pub fn d_labels(n: usize) -> Vec<DLabel> {
    double_partitions(n)
        .into_iter()
        .filter(is_d_normalized)
        .flat_map(|s| DLabel::for_shape(&s))
        .collect()
}

/// Tableaux with `1` in the left component, in basis order.
pub fn signed_block_reps(shape: &DoublePartition) -> Vec<DoubleTableau> {
    standard_tableaux(shape)
        .into_iter()
        .filter(|t| t.cell(1).comp == 1)
        .collect()
}

/// Rows are the vectors `𝕋 ± σ(𝕋)` spanning the requested block, in
/// coordinates of the full tableau basis of `shape`.
pub fn signed_basis(shape: &DoublePartition, sign: Sign, f: &FieldCtx) -> Mat {
    let tabs = standard_tableaux(shape);
    let idx = tableau_index(&tabs);
    let reps = signed_block_reps(shape);
    let c = match sign {
        Sign::Plus => f.one(),
        Sign::Minus => f.neg(f.one()),
    };
    let mut p = Mat::zeros(reps.len(), tabs.len());
    for (k, t) in reps.iter().enumerate() {
        p[(k, idx[t])] = f.one();
        p[(k, idx[&t.sigma()])] = c;
    }
    p
}

/// `U, S_1, .., S_{n-1}` on the full module `V_{λ₁,λ₂}`.
pub(crate) fn unsplit_gens(shape: &DoublePartition, params: &DParams) -> Result<Vec<Mat>, HeckeError> {
    let f = &params.field;
    let (_, b) = hoefsmit_matrices(f, params.alpha, f.one(), shape)?;
    let t = &b[0];
    debug_assert!(t.mul(t, f).is_identity(f));
    let u = t.mul(&b[1], f).mul(t, f);
    Ok(std::iter::once(u).chain(b.into_iter().skip(1)).collect())
}

/// `R_λ` of type D; signed labels act on the block spanned by `𝕋 ± σ(𝕋)`.
pub fn build_rep_d(label: &DLabel, params: &DParams) -> Result<Rep, HeckeError> {
    if label.n() != params.n {
        return Err(HeckeError::BadShape {
            shape: label.shape.to_string(),
            n: params.n,
        });
    }
    let f = &params.field;
    let full = unsplit_gens(&label.shape, params)?;
    let gens = match label.sign {
        None => full,
        Some(sign) => {
            let tabs = standard_tableaux(&label.shape);
            let idx = tableau_index(&tabs);
            let reps = signed_block_reps(&label.shape);
            let rows: Vec<usize> = reps.iter().map(|t| idx[t]).collect();
            let mates: Vec<usize> = reps.iter().map(|t| idx[&t.sigma()]).collect();
            full.iter()
                .map(|m| {
                    let k = reps.len();
                    let mut b = Mat::zeros(k, k);
                    for a in 0..k {
                        for c in 0..k {
                            let x = m[(rows[a], rows[c])];
                            let y = m[(mates[a], rows[c])];
                            b[(a, c)] = match sign {
                                Sign::Plus => f.add(x, y),
                                Sign::Minus => f.sub(x, y),
                            };
                        }
                    }
                    b
                })
                .collect()
        }
    };
    Ok(Rep::assemble(
        RepLabel {
            kind: RepKind::D,
            shape: label.shape.clone(),
            sign: label.sign,
        },
        f.clone(),
        params.alpha,
        f.one(),
        params.n,
        gens,
    ))
}

fn push_shape(out: &mut Vec<DLabel>, left: &Partition, right: &Partition) {
    out.extend(DLabel::for_shape(&DoublePartition::new(
        left.clone(),
        right.clone(),
    )));
}

/// Restriction of a type-D module to rank `n - 1`, as a sorted multiset.
pub fn branch_d(label: &DLabel) -> Vec<DLabel> {
    let (lam, mu) = (&label.shape.left, &label.shape.right);
    let mut out = Vec::new();
    if label.sign.is_some() {
        for m in mu.remove_one() {
            out.push(DLabel::unsigned(DoublePartition::new(lam.clone(), m)));
        }
    } else if lam.size() > mu.size() + 1 {
        for l in lam.remove_one() {
            out.push(DLabel::unsigned(DoublePartition::new(l, mu.clone())));
        }
        for m in mu.remove_one() {
            out.push(DLabel::unsigned(DoublePartition::new(lam.clone(), m)));
        }
    } else if lam.size() == mu.size() + 1 {
        for m in mu.remove_one() {
            out.push(DLabel::unsigned(DoublePartition::new(lam.clone(), m)));
        }
        for l in lam.remove_one() {
            if l > *mu {
                out.push(DLabel::unsigned(DoublePartition::new(l, mu.clone())));
            } else if l < *mu {
                out.push(DLabel::unsigned(DoublePartition::new(mu.clone(), l)));
            } else {
                push_shape(&mut out, mu, mu);
            }
        }
    } else {
        for m in mu.remove_one() {
            out.push(DLabel::unsigned(DoublePartition::new(lam.clone(), m)));
        }
        for l in lam.remove_one() {
            out.push(DLabel::unsigned(DoublePartition::new(mu.clone(), l)));
        }
    }
    out.sort();
    out
}

/// Which of the five branching clauses applies: `1` when `|λ₁| > |λ₂| + 1`,
/// `2` and `3` when `|λ₁| = |λ₂| + 1` (`3` if a removal makes the components
/// equal), `4` for equal sizes with `λ₁ != λ₂`, `5` for signed labels.
pub fn branch_clause(label: &DLabel) -> u8 {
    let (lam, mu) = (&label.shape.left, &label.shape.right);
    if label.sign.is_some() {
        5
    } else if lam.size() > mu.size() + 1 {
        1
    } else if lam.size() == mu.size() + 1 {
        if lam.remove_one().contains(mu) {
            3
        } else {
            2
        }
    } else {
        4
    }
}

/// `η_r(w) = (-1)^((r-1) ℓ(w))`, `ℓ` the total exponent sum of a word in `U, S_i`.
pub fn eta_r(word: &ArtinWord, r: usize, params: &DParams) -> Fel {
    let f = &params.field;
    let e = (r as i64 - 1) * word.length();
    if e.rem_euclid(2) == 0 {
        f.one()
    } else {
        f.neg(f.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::hoefsmit::check_defining_relations;

    fn params() -> DParams {
        let f = make_field(29, 1).unwrap();
        let a = f.find_element_of_order(14).unwrap();
        DParams::new(f, a, 4).unwrap()
    }

    #[test]
    fn dimension_count_rank_four() {
        let total: u128 = d_labels(4).iter().map(|l| l.dim() * l.dim()).sum();
        assert_eq!(total, 192);
    }

    #[test]
    fn berkeley_shape() {
        let p = params();
        let l = DLabel::unsigned(DoublePartition::of(&[2, 1], &[1]));
        let r = build_rep_d(&l, &p).unwrap();
        assert_eq!(r.dim(), 8);
        assert!(check_defining_relations(&r).all_hold());
        let dims: u128 = branch_d(&l).iter().map(|x| x.dim()).sum();
        assert_eq!(dims, 8);
    }

    #[test]
    fn signed_block() {
        let p = params();
        let l = DLabel::new(DoublePartition::of(&[1, 1], &[1, 1]), Some(Sign::Plus)).unwrap();
        let r = build_rep_d(&l, &p).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(check_defining_relations(&r).all_hold());
    }

    #[test]
    fn eta_examples() {
        let p = params();
        let f = &p.field;
        assert_eq!(eta_r(&ArtinWord::gen(1), 1, &p), f.one());
        assert_eq!(eta_r(&ArtinWord::gen(1), 2, &p), f.neg(f.one()));
        let w = ArtinWord::new(vec![(1, 1), (2, 1)]);
        assert_eq!(eta_r(&w, 3, &p), f.one());
    }
}
