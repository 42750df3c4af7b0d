//! The weight `ω`, invariant bilinear forms of types B and D, the hermitian
//! form `d(𝕋)` and the intertwiner `𝓛`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Fel, FieldCtx};
use crate::hoefsmit::{build_rep_b, m_raw, HeckeError, HeckeParams, Rep, Sign};
use crate::matrix::Mat;
use crate::tableaux::{
    phi_d, phi_tableau, row_reading, standard_tableaux, tableau_index, Cell, DoublePartition,
    DoubleTableau, Partition,
};
use crate::typed::{build_rep_d, signed_basis, DLabel, DParams};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormsError {
    #[error("field of degree {0} has no automorphism of order 2")]
    NoInvolution(u32),
    #[error("vanishing denominator in the hermitian weight")]
    SingularDenominator,
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormKind {
    Bilinear,
    Sesquilinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    Symmetric,
    Skew,
    Neither,
}

/// Character values under which a form is invariant: `χ(T)` (or `χ(U)`) and `χ(S_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Twist {
    pub t: Fel,
    pub s: Fel,
}

impl Twist {
    pub fn of_generator(&self, i: usize) -> Fel {
        if i == 0 {
            self.t
        } else {
            self.s
        }
    }
}

#[derive(Debug, Clone)]
pub struct Gram {
    /// Labels of the summands the basis runs over.
    pub space: Vec<String>,
    pub matrix: Mat,
    pub kind: FormKind,
    pub symmetry: Symmetry,
    pub twist: Twist,
}

/// `ω(𝕋) = ω₁ω₂ω₃`.
pub fn weight(t: &DoubleTableau) -> i8 {
    let p = &t.placement;
    let mut count = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let (a, b) = (p[i], p[j]);
            if a.comp == 1 && b.comp == 2 {
                count += 1;
            } else if a.comp == b.comp && a.row > b.row {
                count += 1;
            }
        }
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn sign_el(f: &FieldCtx, s: i8) -> Fel {
    if s > 0 {
        f.one()
    } else {
        f.neg(f.one())
    }
}

/// Exact symmetry type; with `ε` for sesquilinear forms.
pub fn classify_symmetry(m: &Mat, f: &FieldCtx, eps: Option<&dyn Fn(Fel) -> Fel>) -> Symmetry {
    let t = match eps {
        Some(e) => m.transpose().map(e),
        None => m.transpose(),
    };
    let diag_zero = (0..m.rows()).all(|i| m[(i, i)] == f.zero());
    let skew = t == m.map(|x| f.neg(x)) && (eps.is_some() || diag_zero);
    if f.p() == 2 {
        if skew {
            return Symmetry::Skew;
        }
        if t == *m {
            return Symmetry::Symmetric;
        }
        return Symmetry::Neither;
    }
    if t == *m {
        Symmetry::Symmetric
    } else if skew {
        Symmetry::Skew
    } else {
        Symmetry::Neither
    }
}

/// Tableau basis of `V_λ ⊕ V_λ'`, or of `V_λ` when `λ = λ'`.
pub fn gram_space_b(lam: &DoublePartition) -> Vec<(DoublePartition, Vec<DoubleTableau>)> {
    let mut out = vec![(lam.clone(), standard_tableaux(lam))];
    let t = lam.transpose();
    if t != *lam {
        out.push((t.clone(), standard_tableaux(&t)));
    }
    out
}

fn flat_index(parts: &[(DoublePartition, Vec<DoubleTableau>)]) -> (Vec<DoubleTableau>, HashMap<DoubleTableau, usize>) {
    let all: Vec<DoubleTableau> = parts.iter().flat_map(|p| p.1.iter().cloned()).collect();
    let idx = tableau_index(&all);
    (all, idx)
}

/// `(𝕋|𝕋̃) = ω(𝕋) δ_{𝕋',𝕋̃}` on `V_λ ⊕ V_λ'`, twist `(-β, -α)`.
pub fn gram_b(lam: &DoublePartition, params: &HeckeParams) -> Gram {
    let f = &params.field;
    let parts = gram_space_b(lam);
    let (all, idx) = flat_index(&parts);
    let mut g = Mat::zeros(all.len(), all.len());
    for (k, t) in all.iter().enumerate() {
        g[(k, idx[&t.transpose()])] = sign_el(f, weight(t));
    }
    let symmetry = classify_symmetry(&g, f, None);
    Gram {
        space: parts.iter().map(|p| p.0.to_string()).collect(),
        matrix: g,
        kind: FormKind::Bilinear,
        symmetry,
        twist: Twist {
            t: f.neg(params.beta),
            s: f.neg(params.alpha),
        },
    }
}

/// `R_λ ⊕ R_λ'` (or `R_λ`), matching [`gram_b`].
pub fn gram_space_rep_b(lam: &DoublePartition, params: &HeckeParams) -> Result<Rep, HeckeError> {
    let r = build_rep_b(lam, params)?;
    let t = lam.transpose();
    if t == *lam {
        Ok(r)
    } else {
        Ok(r.direct_sum(&build_rep_b(&t, params)?))
    }
}

/// `𝓛`: the matrix with `𝓛[𝕋'][𝕋] = ω(𝕋)` on the basis of [`gram_space_b`].
pub fn transpose_intertwiner(lam: &DoublePartition, f: &FieldCtx) -> Mat {
    let parts = gram_space_b(lam);
    let (all, idx) = flat_index(&parts);
    let mut l = Mat::zeros(all.len(), all.len());
    for (k, t) in all.iter().enumerate() {
        l[(idx[&t.transpose()], k)] = sign_el(f, weight(t));
    }
    l
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormCheck {
    pub generator: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub space: Vec<String>,
    pub checks: Vec<FormCheck>,
}

impl InvarianceReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// `ᵗR(g) G R(g) = χ(g) G` for every generator; sesquilinear forms use `ε(ᵗR(g))`.
pub fn verify_twisted_invariance(rep: &Rep, g: &Gram) -> InvarianceReport {
    let f = &rep.field;
    let checks = rep
        .gens
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let chi = g.twist.of_generator(i);
            let lhs = match g.kind {
                FormKind::Bilinear => m.transpose().mul(&g.matrix, f).mul(m, f),
                FormKind::Sesquilinear => {
                    let e = f.d() as i64 / 2;
                    m.transpose()
                        .map(|x| f.frobenius(x, e))
                        .mul(&g.matrix, f)
                        .mul(m, f)
                }
            };
            FormCheck {
                generator: rep.names[i].clone(),
                holds: m.rows() == g.matrix.rows() && lhs == g.matrix.scale(chi, f),
            }
        })
        .collect();
    InvarianceReport {
        space: g.space.clone(),
        checks,
    }
}

/// `𝓛 R(g) 𝓛⁻¹ χ(g)⁻¹ = ᵗR(g)⁻¹` for every generator.
pub fn verify_intertwiner(rep: &Rep, l: &Mat, twist: Twist) -> InvarianceReport {
    let f = &rep.field;
    let Some(linv) = l.inverse(f) else {
        return InvarianceReport {
            space: vec![rep.label.to_string()],
            checks: vec![FormCheck {
                generator: "invertible".into(),
                holds: false,
            }],
        };
    };
    let checks = rep
        .gens
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let chi_inv = f.inv(twist.of_generator(i));
            let lhs = l.mul(m, f).mul(&linv, f).scale(chi_inv, f);
            FormCheck {
                generator: rep.names[i].clone(),
                holds: lhs == rep.inverses[i].transpose(),
            }
        })
        .collect();
    InvarianceReport {
        space: vec![rep.label.to_string()],
        checks,
    }
}

/// Basis of the space carrying the type-D form of `label`: the label itself
/// and, when different, its partner under `φ`.
pub fn gram_space_d(label: &DLabel) -> Vec<DLabel> {
    let shape = &label.shape;
    let partner_shape = phi_d(shape);
    let partner = match label.sign {
        None => DLabel::unsigned(partner_shape),
        Some(s) => {
            let s2 = if label.n() % 4 == 0 {
                s
            } else {
                match s {
                    Sign::Plus => Sign::Minus,
                    Sign::Minus => Sign::Plus,
                }
            };
            DLabel::new(partner_shape, Some(s2)).expect("φ preserves equal components")
        }
    };
    if partner == *label {
        vec![label.clone()]
    } else {
        vec![label.clone(), partner]
    }
}

/// `(𝕋|𝕋̃) = ω(𝕋) δ_{φ(𝕋),𝕋̃}` on the unsplit modules `V_λ ⊕ V_φ(λ)`.
fn unsplit_gram_d(shapes: &[DoublePartition], f: &FieldCtx) -> (Mat, Vec<(DoublePartition, usize)>) {
    let parts: Vec<(DoublePartition, Vec<DoubleTableau>)> = shapes
        .iter()
        .map(|s| (s.clone(), standard_tableaux(s)))
        .collect();
    let (all, idx) = flat_index(&parts);
    let mut offsets = Vec::new();
    let mut off = 0;
    for p in &parts {
        offsets.push((p.0.clone(), off));
        off += p.1.len();
    }
    let mut g = Mat::zeros(all.len(), all.len());
    let mut shape_of = Vec::with_capacity(all.len());
    for p in &parts {
        shape_of.extend(std::iter::repeat(p.0.clone()).take(p.1.len()));
    }
    for (k, t) in all.iter().enumerate() {
        let image = phi_tableau(t, &shape_of[k]);
        g[(k, idx[&image])] = sign_el(f, weight(t));
    }
    (g, offsets)
}

/// Gram matrix and matching representation for a type-D label.
pub fn form_space_d(label: &DLabel, params: &DParams) -> Result<(Gram, Rep), HeckeError> {
    let f = &params.field;
    let labels = gram_space_d(label);
    let mut shapes: Vec<DoublePartition> = Vec::new();
    for l in &labels {
        if !shapes.contains(&l.shape) {
            shapes.push(l.shape.clone());
        }
    }
    let (gw, offsets) = unsplit_gram_d(&shapes, f);
    let width = gw.rows();
    let mut rows: Vec<Vec<Fel>> = Vec::new();
    for l in &labels {
        let off = offsets.iter().find(|o| o.0 == l.shape).unwrap().1;
        let dim = l.shape.dim() as usize;
        match l.sign {
            None => {
                for i in 0..dim {
                    let mut v = vec![f.zero(); width];
                    v[off + i] = f.one();
                    rows.push(v);
                }
            }
            Some(s) => {
                let b = signed_basis(&l.shape, s, f);
                for i in 0..b.rows() {
                    let mut v = vec![f.zero(); width];
                    v[off..off + dim].copy_from_slice(b.row(i));
                    rows.push(v);
                }
            }
        }
    }
    let p = Mat::from_rows(rows);
    let gram = p.mul(&gw, f).mul(&p.transpose(), f);
    let mut rep = build_rep_d(&labels[0], params)?;
    if labels.len() > 1 {
        rep = rep.direct_sum(&build_rep_d(&labels[1], params)?);
    }
    let symmetry = classify_symmetry(&gram, f, None);
    let ma = f.neg(params.alpha);
    Ok((
        Gram {
            space: labels.iter().map(|l| l.to_string()).collect(),
            matrix: gram,
            kind: FormKind::Bilinear,
            symmetry,
            twist: Twist { t: ma, s: ma },
        },
        rep,
    ))
}

pub fn gram_d(label: &DLabel, params: &DParams) -> Result<Gram, HeckeError> {
    Ok(form_space_d(label, params)?.0)
}

/// `𝓛[φ(𝕋)][𝕋] = ω(𝕋)` on the unsplit `V_λ ⊕ V_φ(λ)`, with the matching representation.
pub fn transpose_intertwiner_d(shape: &DoublePartition, params: &DParams) -> Result<(Mat, Rep), HeckeError> {
    let f = &params.field;
    let mut shapes = vec![shape.clone()];
    let p = phi_d(shape);
    if p != *shape {
        shapes.push(p);
    }
    let (g, _) = unsplit_gram_d(&shapes, f);
    let full = |s: &DoublePartition| -> Result<Rep, HeckeError> {
        let gens = crate::typed::unsplit_gens(s, params)?;
        Ok(Rep::assemble(
            crate::hoefsmit::RepLabel {
                kind: crate::hoefsmit::RepKind::D,
                shape: s.clone(),
                sign: None,
            },
            f.clone(),
            params.alpha,
            f.one(),
            params.n,
            gens,
        ))
    };
    let mut rep = full(&shapes[0])?;
    if shapes.len() > 1 {
        rep = rep.direct_sum(&full(&shapes[1])?);
    }
    Ok((g.transpose(), rep))
}

/// Relabel the entries of one component as `1..k`, keeping their order.
fn component_cells(t: &DoubleTableau, comp: u8) -> Vec<Cell> {
    t.placement
        .iter()
        .filter(|c| c.comp == comp)
        .map(|c| Cell { comp: 1, ..*c })
        .collect()
}

/// Single-tableau weights `d̃` on the tableaux of `μ`, normalized to `1` on
/// the row-reading tableau and propagated along swaps.
pub fn single_weights(
    mu: &Partition,
    f: &FieldCtx,
    alpha: Fel,
) -> Result<HashMap<Vec<Cell>, Fel>, FormsError> {
    let d = f.d();
    if d % 2 != 0 {
        return Err(FormsError::NoInvolution(d));
    }
    let eps = |x: Fel| f.frobenius(x, d as i64 / 2);
    let shape = DoublePartition::new(mu.clone(), Partition::empty());
    let start = DoubleTableau {
        placement: row_reading(mu, 1),
    };
    let mut out: HashMap<Vec<Cell>, Fel> = HashMap::new();
    out.insert(start.placement.clone(), f.one());
    let mut queue = VecDeque::from([start]);
    let one = f.one();
    while let Some(t) = queue.pop_front() {
        let dt = out[&t.placement];
        for i in 1..shape.n() {
            let Some(s) = t.swap(i) else { continue };
            if out.contains_key(&s.placement) {
                continue;
            }
            let mt = m_raw(f, alpha, one, &t, i).map_err(|_| FormsError::SingularDenominator)?;
            let ms = m_raw(f, alpha, one, &s, i).map_err(|_| FormsError::SingularDenominator)?;
            let num = f.neg(f.mul(mt, eps(f.add(one, ms))));
            let den = f.mul(f.add(one, mt), eps(ms));
            if den == f.zero() {
                return Err(FormsError::SingularDenominator);
            }
            out.insert(s.placement.clone(), f.mul(dt, f.div(num, den)));
            queue.push_back(s);
        }
    }
    Ok(out)
}

/// Cross-component factor for `i ∈ 𝕋₁`, `j ∈ 𝕋₂`, `i < j`, with `a = c_i - r_i + r_j - c_j`.
pub fn cross_factor(f: &FieldCtx, alpha: Fel, beta: Fel, a: i64) -> Result<Fel, FormsError> {
    let binv = f.inv(beta);
    let num = f.add(
        f.from_int(2),
        f.add(f.mul(beta, f.pow(alpha, a - 1)), f.mul(binv, f.pow(alpha, 1 - a))),
    );
    let den = f.add(
        f.plus_inverse(alpha),
        f.add(f.mul(beta, f.pow(alpha, a)), f.mul(binv, f.pow(alpha, -a))),
    );
    if den == f.zero() {
        return Err(FormsError::SingularDenominator);
    }
    Ok(f.div(num, den))
}

/// `d(𝕋)` for every tableau of `λ`, in basis order.
pub fn hermitian_diag_raw(
    lam: &DoublePartition,
    f: &FieldCtx,
    alpha: Fel,
    beta: Fel,
) -> Result<Vec<Fel>, FormsError> {
    let w1 = single_weights(&lam.left, f, alpha)?;
    let w2 = single_weights(&lam.right, f, alpha)?;
    standard_tableaux(lam)
        .iter()
        .map(|t| {
            let mut d = f.mul(w1[&component_cells(t, 1)], w2[&component_cells(t, 2)]);
            for i in 1..=t.n() {
                let ci = t.cell(i);
                if ci.comp != 1 {
                    continue;
                }
                for j in i + 1..=t.n() {
                    let cj = t.cell(j);
                    if cj.comp != 2 {
                        continue;
                    }
                    let a = ci.content() - cj.content();
                    d = f.mul(d, cross_factor(f, alpha, beta, a)?);
                }
            }
            Ok(d)
        })
        .collect()
}

pub fn hermitian_diag(lam: &DoublePartition, params: &HeckeParams) -> Result<Vec<Fel>, FormsError> {
    hermitian_diag_raw(lam, &params.field, params.alpha, params.beta)
}

/// `d(𝕋)`.
pub fn hermitian_d(t: &DoubleTableau, params: &HeckeParams) -> Result<Fel, FormsError> {
    let lam = t.shape();
    let tabs = standard_tableaux(&lam);
    let k = tabs.iter().position(|x| x == t).expect("tableau of its own shape");
    Ok(hermitian_diag(&lam, params)?[k])
}

/// `R(g) D ε(ᵗR(g)) = D` for every generator (the form `⟨g x, g y⟩ = ⟨x, y⟩`).
pub fn verify_unitary(rep: &Rep, d: &Mat) -> InvarianceReport {
    let f = &rep.field;
    let e = f.d() as i64 / 2;
    let checks = rep
        .gens
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let h = m.transpose().map(|x| f.frobenius(x, e));
            FormCheck {
                generator: rep.names[i].clone(),
                holds: m.mul(d, f).mul(&h, f) == *d,
            }
        })
        .collect();
    InvarianceReport {
        space: vec![rep.label.to_string()],
        checks,
    }
}

/// Hermitian Gram matrix of a type-D label: `diag(d)` restricted to the label's block.
pub fn hermitian_gram_d(label: &DLabel, params: &DParams) -> Result<Mat, FormsError> {
    let f = &params.field;
    let d = Mat::diag(&hermitian_diag_raw(&label.shape, f, params.alpha, f.one())?);
    match label.sign {
        None => Ok(d),
        Some(s) => {
            let p = signed_basis(&label.shape, s, f);
            let e = f.d() as i64 / 2;
            let ph = p.transpose().map(|x| f.frobenius(x, e));
            Ok(p.mul(&d, f).mul(&ph, f))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn weights_and_gram() {
        let tabs = standard_tableaux(&DoublePartition::of(&[1], &[1]));
        assert_eq!(weight(&tabs[0]), -1);
        assert_eq!(weight(&tabs[1]), 1);
        let f = make_field(29, 1).unwrap();
        let a = f.find_element_of_order(7).unwrap();
        let p = HeckeParams::new(f.clone(), a, f.from_int(2), 2).unwrap();
        let g = gram_b(&DoublePartition::of(&[1], &[1]), &p);
        assert_eq!(g.matrix, Mat::from_ints(&[&[0, -1], &[1, 0]], &f));
        assert_eq!(g.symmetry, Symmetry::Skew);
        let l = transpose_intertwiner(&DoublePartition::of(&[1], &[1]), &f);
        assert_eq!(l, Mat::from_ints(&[&[0, 1], &[-1, 0]], &f));
        let r = gram_space_rep_b(&DoublePartition::of(&[1], &[1]), &p).unwrap();
        assert!(verify_twisted_invariance(&r, &g).all_hold());
        assert!(verify_intertwiner(&r, &l, g.twist).all_hold());
    }
}
