use serde::{Deserialize, Serialize};

use super::factor::add_equations;
use super::predict::{canonical_rep_b, canonical_rep_d, predict_image_b, predict_image_d};
use super::{Family, FieldCase, GroupLabel, ImagesError};
use crate::forms::{classify_symmetry, FormKind, Symmetry};
use crate::gf::{Fel, FieldCtx};
use crate::hoefsmit::{derived_subgroup_words, eval_word, ArtinWord, Rep};
use crate::matrix::{Mat, RowSpace};
use crate::tableaux::{DoublePartition, Partition};
use crate::typed::{DLabel, DParams};

/// The checkable shadow of a classical group: what the derived image must
/// satisfy if it equals the predicted group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub det_one: bool,
    pub span: usize,
    pub trace_degree: u32,
    /// Symmetry of the unique invariant bilinear form, if there is one.
    pub bilinear: Option<Symmetry>,
    /// Whether an `ε`-sesquilinear form exists; `None` when `ε` does not.
    pub sesquilinear: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormSolution {
    pub kind: FormKind,
    /// Dimension of the solution space on the commutator subgroup generators.
    pub derived_dim: usize,
    /// `1` when the solution is also invariant up to scalars under the full
    /// group, else `0`; equals `derived_dim` when that exceeds 1.
    pub dim: usize,
    pub symmetry: Option<Symmetry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Inconsistent(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImageReport {
    pub label: String,
    pub dim: usize,
    pub predicted: GroupLabel,
    pub expected: Signature,
    pub observed: Signature,
    pub forms: Vec<FormSolution>,
    pub verdict: Verdict,
}

impl ImageReport {
    pub fn consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }
}

fn log_p(p: u64, mut x: u64) -> u32 {
    let mut e = 0;
    while x > 1 {
        x /= p;
        e += 1;
    }
    e
}

/// What a group with label `g`, inside `SL_N(p^d)`, looks like to the checks.
pub fn expected_signature(g: &GroupLabel, p: u64, d: u32) -> Signature {
    let n = g.degree;
    let e = log_p(p, g.field_size);
    let has_eps = d % 2 == 0;
    if n == 1 {
        return Signature {
            det_one: true,
            span: 1,
            trace_degree: 1,
            bilinear: Some(Symmetry::Symmetric),
            sesquilinear: has_eps.then_some(true),
        };
    }
    let unitary = g.family == Family::SU && n >= 3;
    let trace_degree = if unitary { 2 * e } else { e };
    let bilinear = match g.family {
        Family::OmegaPlus => Some(Symmetry::Symmetric),
        Family::SP => Some(Symmetry::Skew),
        _ if n == 2 => Some(Symmetry::Skew),
        _ => None,
    };
    let sesquilinear = has_eps.then(|| {
        if (d / 2) % trace_degree == 0 {
            bilinear.is_some()
        } else {
            unitary
        }
    });
    Signature {
        det_one: true,
        span: n * n,
        trace_degree,
        bilinear,
        sesquilinear,
    }
}

fn words_mats(rep: &Rep, depth: usize) -> Result<Vec<Mat>, ImagesError> {
    let k = rep.gens.len();
    let words = derived_subgroup_words(k, depth);
    if words.is_empty() {
        return Ok(vec![Mat::identity(rep.dim(), &rep.field)]);
    }
    Ok(words
        .iter()
        .map(|w| eval_word(rep, w))
        .collect::<Result<_, _>>()?)
}

/// Products of `mats` forming a basis of the algebra they generate.
fn span_basis(mats: &[Mat], f: &FieldCtx, max_len: usize) -> Vec<Mat> {
    let Some(first) = mats.first() else {
        return Vec::new();
    };
    let n = first.rows();
    let mut space = RowSpace::new(n * n);
    let id = Mat::identity(n, f);
    space.insert(id.flatten(), f);
    let mut basis = vec![id.clone()];
    let mut frontier = vec![id];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &frontier {
            for g in mats {
                let p = m.mul(g, f);
                if space.insert(p.flatten(), f) {
                    basis.push(p.clone());
                    next.push(p);
                }
            }
        }
        if next.is_empty() || space.dim() == n * n {
            break;
        }
        frontier = next;
    }
    basis
}

/// Dimension of the span of all products of `mats` of length at most `max_len`.
pub fn algebra_span_dim(mats: &[Mat], f: &FieldCtx, max_len: usize) -> usize {
    span_basis(mats, f, max_len).len()
}

pub fn enveloping_span_dim(rep: &Rep, max_len: usize) -> usize {
    algebra_span_dim(&rep.gens, &rep.field, max_len)
}

pub fn trace_subfield_degree(rep: &Rep, words: &[ArtinWord]) -> Result<u32, ImagesError> {
    let f = &rep.field;
    let traces: Vec<Fel> = words
        .iter()
        .map(|w| eval_word(rep, w).map(|m| m.trace(f)))
        .collect::<Result<_, _>>()?;
    Ok(f.subfield_degree(&traces))
}

fn trace_of_product(a: &Mat, b: &Mat, f: &FieldCtx) -> Fel {
    let n = a.rows();
    let mut acc = Fel::ZERO;
    for i in 0..n {
        for k in 0..n {
            let x = a[(i, k)];
            if x != Fel::ZERO {
                acc = f.add(acc, f.mul(x, b[(k, i)]));
            }
        }
    }
    acc
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Degree of the field generated by the traces of `basis`, `extra` and all
/// products of two basis elements.
fn group_trace_degree(basis: &[Mat], extra: &[Mat], f: &FieldCtx) -> u32 {
    let traces: Vec<Fel> = basis.iter().chain(extra).map(|m| m.trace(f)).collect();
    let mut deg = f.subfield_degree(&traces);
    'outer: for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            if deg == f.d() {
                break 'outer;
            }
            let t = trace_of_product(a, b, f);
            if f.frobenius(t, deg as i64) != t {
                let e = f.subfield_degree(&[t]);
                deg = deg / gcd(deg, e) * e;
            }
        }
    }
    deg
}

fn half_eps(f: &FieldCtx) -> Option<i64> {
    (f.d() % 2 == 0).then_some(f.d() as i64 / 2)
}

/// Forms `X` with `ᵗḡ X g = X` on `derived`, `ḡ = g` or `ε(g)`; the unique
/// solution is then tested for proportional invariance under `full`.
pub fn solve_forms(derived: &[Mat], full: &[Mat], f: &FieldCtx, sesquilinear: bool) -> Option<FormSolution> {
    let eps = if sesquilinear { Some(half_eps(f)?) } else { None };
    let bar = |m: &Mat| match eps {
        Some(h) => m.map(|x| f.frobenius(x, h)),
        None => m.clone(),
    };
    let n = derived.first()?.rows();
    let mut space = RowSpace::new(n * n);
    for h in derived {
        let a = bar(&h.inverse(f).expect("invertible")).transpose();
        add_equations(&mut space, &a, h, f.one(), f);
        if space.dim() == n * n {
            break;
        }
    }
    let sols = space.solutions(f);
    let kind = if sesquilinear { FormKind::Sesquilinear } else { FormKind::Bilinear };
    if sols.len() != 1 {
        return Some(FormSolution {
            kind,
            derived_dim: sols.len(),
            dim: sols.len(),
            symmetry: None,
        });
    }
    let x = Mat::from_flat(n, n, sols[0].clone());
    let pivot = x.data().iter().position(|&v| v != Fel::ZERO)?;
    let proportional = full.iter().all(|g| {
        let y = bar(g).transpose().mul(&x, f).mul(g, f);
        let c = f.div(y.data()[pivot], x.data()[pivot]);
        y == x.scale(c, f)
    });
    let symmetry = proportional.then(|| match eps {
        Some(h) => {
            let e = move |v: Fel| f.frobenius(v, h);
            classify_symmetry(&x, f, Some(&e))
        }
        None => classify_symmetry(&x, f, None),
    });
    Some(FormSolution {
        kind,
        derived_dim: 1,
        dim: usize::from(proportional),
        symmetry,
    })
}

/// `rank(M - cI) = 1` for some scalar `c`.
pub fn is_pseudo_reflection(m: &Mat, f: &FieldCtx) -> bool {
    let n = m.rows();
    if n < 2 || m.is_scalar() {
        return false;
    }
    let id = Mat::identity(n, f);
    let off = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && m[(i, j)] != Fel::ZERO);
    let Some((i, j)) = off else {
        // Diagonal: all but one entry must agree.
        let d: Vec<Fel> = (0..n).map(|k| m[(k, k)]).collect();
        return d.iter().any(|&c| d.iter().filter(|&&x| x != c).count() == 1);
    };
    if n == 2 {
        // Rank one exactly when an eigenvalue lies in the field.
        let tr = m.trace(f);
        let det = m.det(f);
        return f
            .elements()
            .any(|c| f.add(f.sub(f.mul(c, c), f.mul(tr, c)), det) == Fel::ZERO);
    }
    let k = (0..n).find(|&k| k != i && k != j).expect("n >= 3");
    let c = f.sub(m[(k, k)], f.div(f.mul(m[(i, k)], m[(k, j)]), m[(i, j)]));
    m.sub(&id.scale(c, f), f).rank(f) == 1
}

/// `rank(M - I) = 1`, `(M - I)² = 0` and `det M = 1`.
pub fn is_transvection(m: &Mat, f: &FieldCtx) -> bool {
    let e = m.sub(&Mat::identity(m.rows(), f), f);
    e.rank(f) == 1 && e.mul(&e, f).is_zero() && m.det(f) == f.one()
}

fn observe(rep: &Rep) -> Result<(Signature, Vec<FormSolution>), ImagesError> {
    let f = &rep.field;
    let n = rep.dim();
    let h1 = words_mats(rep, 1)?;
    let h2 = words_mats(rep, 2)?;
    let det_one = h2.iter().all(|m| m.det(f) == f.one());
    let mut basis = span_basis(&h1, f, n * n);
    if basis.len() < n * n {
        basis = span_basis(&h2, f, n * n);
    }
    let span = basis.len();
    let trace_degree = group_trace_degree(&basis, &h2, f);
    let mut forms = Vec::new();
    let mut solve = |sesq: bool| -> Option<FormSolution> {
        let mut s = solve_forms(&h1, &rep.gens, f, sesq)?;
        if s.derived_dim > 1 {
            s = solve_forms(&h2, &rep.gens, f, sesq)?;
        }
        forms.push(s.clone());
        Some(s)
    };
    let read = |s: &FormSolution| if s.dim == 1 { s.symmetry } else { None };
    let bil = solve(false).expect("bilinear system is always posed");
    let bilinear = read(&bil);
    let sesquilinear = solve(true).map(|s| s.dim == 1);
    Ok((
        Signature {
            det_one,
            span,
            trace_degree,
            bilinear,
            sesquilinear,
        },
        forms,
    ))
}

fn compare(rep: &Rep, predicted: GroupLabel) -> Result<ImageReport, ImagesError> {
    let f = &rep.field;
    let expected = expected_signature(&predicted, f.p(), f.d());
    let (observed, forms) = observe(rep)?;
    let mut witness = Vec::new();
    if observed.det_one != expected.det_one {
        witness.push("determinant".to_string());
    }
    if observed.span != expected.span {
        witness.push(format!("span {} != {}", observed.span, expected.span));
    }
    if observed.trace_degree != expected.trace_degree {
        witness.push(format!(
            "trace degree {} != {}",
            observed.trace_degree, expected.trace_degree
        ));
    }
    if observed.bilinear != expected.bilinear {
        witness.push(format!(
            "bilinear {:?} != {:?}",
            observed.bilinear, expected.bilinear
        ));
    }
    if observed.sesquilinear != expected.sesquilinear {
        witness.push(format!(
            "sesquilinear {:?} != {:?}",
            observed.sesquilinear, expected.sesquilinear
        ));
    }
    let verdict = if witness.is_empty() {
        Verdict::Consistent
    } else {
        Verdict::Inconsistent(witness)
    };
    Ok(ImageReport {
        label: rep.label.to_string(),
        dim: rep.dim(),
        predicted,
        expected,
        observed,
        forms,
        verdict,
    })
}

/// Exterior powers in a hook class other than the natural module and its dual.
fn is_exterior_member(lam: &DoublePartition) -> bool {
    let n = lam.n();
    if lam.has_empty_component() {
        let mu = if lam.left.is_empty() { &lam.right } else { &lam.left };
        let r = mu.parts().len().saturating_sub(1);
        return mu.is_hook() && !mu.is_row() && !mu.is_column() && (2..=n.saturating_sub(3)).contains(&r);
    }
    if !lam.is_hook() {
        return false;
    }
    let r = if lam.left.is_column() && lam.right.is_row() {
        lam.right.size()
    } else {
        lam.left.size()
    };
    (2..=n.saturating_sub(2)).contains(&r)
}

/// Compare the derived image of a type-B (or type-A) module with the
/// prediction for its class.
pub fn classify_image(rep: &Rep, case: &FieldCase) -> Result<ImageReport, ImagesError> {
    let lam = &rep.label.shape;
    if is_exterior_member(lam) {
        return Err(ImagesError::NotRepresentative(lam.to_string()));
    }
    let predicted = predict_image_b(&canonical_rep_b(lam, case), case)?;
    compare(rep, predicted)
}

pub fn classify_image_d(rep: &Rep) -> Result<ImageReport, ImagesError> {
    let params = DParams::new(rep.field.clone(), rep.alpha, rep.n)?;
    let label = DLabel {
        shape: rep.label.shape.clone(),
        sign: rep.label.sign,
    };
    let canon = canonical_rep_d(&label);
    let shape = &label.shape;
    let exterior = if shape.is_hook() {
        let n = rep.n;
        let natural = DoublePartition::new(Partition::column(n - 1), Partition::row(1));
        *shape != natural && *shape != DoublePartition::of(&[n - 1], &[1])
    } else {
        is_exterior_member(shape)
    };
    if exterior {
        return Err(ImagesError::NotRepresentative(label.to_string()));
    }
    let predicted = predict_image_d(&canon, &params)?;
    compare(rep, predicted)
}
