use super::{sized, Family, FieldCase, FieldSymbol, GroupLabel, ImagesError};
use crate::tableaux::{
    double_partitions, klein_orbit, nu, nu_tilde_b, nu_tilde_d, phi_d, DoublePartition, Partition,
};
use crate::typed::{d_labels, DLabel, DParams};
use crate::hoefsmit::Sign;

fn type_a_hooks(n: usize) -> Vec<Partition> {
    (1..n.saturating_sub(1))
        .map(|r| {
            let mut parts = vec![n - r];
            parts.extend(std::iter::repeat(1).take(r));
            Partition::of(&parts)
        })
        .collect()
}

fn hook_family_members(n: usize, family: u8) -> Vec<DoublePartition> {
    (1..n)
        .map(|r| match family {
            1 => DoublePartition::new(Partition::column(n - r), Partition::row(r)),
            _ => DoublePartition::new(Partition::row(r), Partition::column(n - r)),
        })
        .collect()
}

/// Every label whose image is identified with that of `λ`: duals, Galois
/// twists, the hook families and the type-A modules seen from both sides.
pub fn class_members_b(lam: &DoublePartition, case: &FieldCase) -> Vec<DoublePartition> {
    let n = lam.n();
    let mut out = if lam.has_empty_component() {
        let mu = if lam.left.is_empty() { &lam.right } else { &lam.left };
        let base = if mu.is_hook() && !mu.is_row() && !mu.is_column() {
            type_a_hooks(n)
        } else {
            vec![mu.clone(), mu.transpose()]
        };
        base.into_iter()
            .flat_map(|m| {
                [
                    DoublePartition::new(m.clone(), Partition::empty()),
                    DoublePartition::new(Partition::empty(), m),
                ]
            })
            .collect()
    } else if let Some(fam) = lam.hook_family() {
        let mut v = hook_family_members(n, fam);
        if case.case_id >= 4 || n == 2 {
            v.extend(hook_family_members(n, 3 - fam));
        }
        v
    } else if case.case_id >= 4 {
        klein_orbit(lam)
    } else {
        vec![lam.clone(), lam.transpose()]
    };
    out.sort();
    out.dedup();
    out
}

/// Class representative: the minimum of the class, except that type-A
/// modules are written `(μ, ∅)` and all type-A hooks go to `([n-1,1], ∅)`.
pub fn canonical_rep_b(lam: &DoublePartition, case: &FieldCase) -> DoublePartition {
    let n = lam.n();
    if lam.has_empty_component() {
        let mu = if lam.left.is_empty() { &lam.right } else { &lam.left };
        if mu.is_hook() && !mu.is_row() && !mu.is_column() {
            return DoublePartition::new(Partition::of(&[n - 1, 1]), Partition::empty());
        }
        let t = mu.transpose();
        let m = if *mu <= t { mu.clone() } else { t };
        return DoublePartition::new(m, Partition::empty());
    }
    class_members_b(lam, case).into_iter().next().expect("class contains λ")
}

/// Canonical representatives of every class of rank `n` with dimension above 1.
pub fn transversal_b(n: usize, case: &FieldCase) -> Vec<DoublePartition> {
    let mut out: Vec<DoublePartition> = double_partitions(n)
        .iter()
        .filter(|l| l.dim() > 1)
        .map(|l| canonical_rep_b(l, case))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn label(family: Family, degree: usize, field_size: u64, field: FieldSymbol) -> GroupLabel {
    let family = if family == Family::SP && degree == 2 { Family::SL } else { family };
    GroupLabel {
        family,
        degree,
        field_size,
        field,
    }
}

fn form_family(p: u64, sign: i8) -> Family {
    if p == 2 || sign == -1 {
        Family::SP
    } else {
        Family::OmegaPlus
    }
}

/// Predicted image of the derived subgroup for a class representative.
pub fn predict_image_b(lam: &DoublePartition, case: &FieldCase) -> Result<GroupLabel, ImagesError> {
    if canonical_rep_b(lam, case) != *lam {
        return Err(ImagesError::NotRepresentative(lam.to_string()));
    }
    let n = lam.n();
    let dim = lam.dim() as usize;
    let p = case.p;
    let d = case.d();
    let q = case.q();
    let qh = sized(p, d, true);
    let (sl_q, su_h, sl_h) = (
        label(Family::SL, dim, q, FieldSymbol::Q),
        label(Family::SU, dim, qh, FieldSymbol::QHalf),
        label(Family::SL, dim, qh, FieldSymbol::QHalf),
    );
    if dim == 1 {
        return Ok(sl_q);
    }
    if lam.right.is_empty() {
        let mu = &lam.left;
        let da = case.dtilde[0];
        let unitary = case.alpha_unitary();
        let (fs, sym) = if unitary {
            (sized(p, da, true), FieldSymbol::QTildeHalf)
        } else {
            (sized(p, da, false), FieldSymbol::QTilde)
        };
        let lin = if unitary { Family::SU } else { Family::SL };
        if mu.is_hook() {
            return Ok(label(lin, n - 1, fs, sym));
        }
        if !mu.is_self_transpose() {
            return Ok(label(lin, dim, fs, sym));
        }
        let s = nu(mu).expect("self-transpose");
        return Ok(label(form_family(p, s), dim, fs, sym));
    }
    if lam.is_hook() {
        if n == 2 {
            return Ok(match case.case_id {
                1 | 2 => sl_q,
                3 => su_h,
                _ => sl_h,
            });
        }
        return Ok(if case.case_id == 3 { su_h } else { sl_q });
    }
    let tr = lam.transpose();
    let self_dual = *lam == tr;
    let form = |half: bool| {
        let s = nu_tilde_b(lam).expect("self-transpose");
        if half {
            label(form_family(p, s), dim, qh, FieldSymbol::QHalf)
        } else {
            label(form_family(p, s), dim, q, FieldSymbol::Q)
        }
    };
    Ok(match case.case_id {
        1 | 2 => {
            if self_dual {
                form(false)
            } else {
                sl_q
            }
        }
        3 => {
            if self_dual {
                form(true)
            } else {
                su_h
            }
        }
        c => {
            let (u, h) = if c == 4 {
                (lam.swap(), lam.conj_components())
            } else {
                (lam.conj_components(), lam.swap())
            };
            let is_u = *lam == u;
            let is_h = *lam == h;
            match (self_dual, is_u, is_h) {
                (true, true, _) | (true, _, true) => form(true),
                (true, false, false) => form(false),
                (false, true, _) => su_h,
                (false, false, true) => sl_h,
                (false, false, false) => sl_q,
            }
        }
    })
}

fn is_type_a_hook(shape: &DoublePartition) -> bool {
    shape.right.is_empty()
        && shape.left.is_hook()
        && !shape.left.is_row()
        && !shape.left.is_column()
}

/// Class representative in type D: the larger of `λ` and `φ(λ)`, with all
/// hooks sent to `([1^(n-1)],[1])` and type-A hooks to `([2,1^(n-2)], ∅)`.
pub fn canonical_rep_d(label: &DLabel) -> DLabel {
    let n = label.n();
    let shape = &label.shape;
    if is_type_a_hook(shape) {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat(1).take(n - 2));
        return DLabel::unsigned(DoublePartition::new(Partition::of(&parts), Partition::empty()));
    }
    if shape.is_hook() {
        return DLabel::unsigned(DoublePartition::new(Partition::column(n - 1), Partition::row(1)));
    }
    let phi = phi_d(shape);
    let self_dual = phi == *shape;
    let top = if phi > *shape { phi } else { shape.clone() };
    let sign = label.sign.map(|s| {
        if self_dual {
            if n % 4 == 2 {
                Sign::Plus
            } else {
                s
            }
        } else if top == *shape || n % 4 == 0 {
            s
        } else if s == Sign::Plus {
            Sign::Minus
        } else {
            Sign::Plus
        }
    });
    DLabel { shape: top, sign }
}

pub fn transversal_d(n: usize) -> Vec<DLabel> {
    let mut out: Vec<DLabel> = d_labels(n)
        .iter()
        .filter(|l| l.dim() > 1)
        .map(canonical_rep_d)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Predicted image of the derived subgroup for a type-D class representative.
pub fn predict_image_d(lab: &DLabel, params: &DParams) -> Result<GroupLabel, ImagesError> {
    if canonical_rep_d(lab) != *lab {
        return Err(ImagesError::NotRepresentative(lab.to_string()));
    }
    let n = lab.n();
    let dim = lab.dim() as usize;
    let p = params.field.p();
    let d = params.field.d();
    let split = params.field_split();
    let (lin, fs, sym) = if split {
        (Family::SL, sized(p, d, false), FieldSymbol::Q)
    } else {
        (Family::SU, sized(p, d, true), FieldSymbol::QHalf)
    };
    if dim == 1 {
        return Ok(label(Family::SL, 1, sized(p, d, false), FieldSymbol::Q));
    }
    let shape = &lab.shape;
    if is_type_a_hook(shape) {
        return Ok(label(lin, n - 1, fs, sym));
    }
    if shape.is_hook() {
        return Ok(label(lin, n, fs, sym));
    }
    let self_dual = phi_d(shape) == *shape;
    if lab.sign.is_some() {
        if self_dual && n % 4 == 0 {
            return Ok(label(Family::OmegaPlus, dim, fs, sym));
        }
        return Ok(label(lin, dim, fs, sym));
    }
    if !self_dual {
        return Ok(label(lin, dim, fs, sym));
    }
    Ok(label(form_family(p, nu_tilde_d(shape)), dim, fs, sym))
}
