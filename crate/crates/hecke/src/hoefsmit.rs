//! The Hoefsmit matrix model for type B (type A being the shapes `(λ₁, ∅)`).
//!
//! Matrices act on row vectors: `M[k][l]` is the coefficient of basis
//! tableau `l` in `g · 𝕋_k`.  Words evaluate to the ordered product of
//! their letters.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Fel, FieldCtx, GfError};
use crate::matrix::Mat;
use crate::tableaux::{standard_tableaux, tableau_index, DoublePartition, DoubleTableau};

/// Orders of `α` excluded throughout.
pub const EXCLUDED_ORDERS: [u64; 8] = [1, 2, 3, 4, 5, 6, 8, 10];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("rank must be at least {min}, got {n}")]
    BadRank { n: usize, min: usize },
    #[error("alpha has order {order}, which is not allowed for rank {n}")]
    BadOrder { order: u64, n: usize },
    #[error("beta is not admissible for rank {n}")]
    InadmissibleBeta { n: usize },
    #[error("parameters generate a subfield of degree {got}, the field has degree {d}")]
    NotGenerating { got: u32, d: u32 },
    #[error("characteristic 2 is not allowed in type D")]
    EvenCharacteristic,
    #[error("shape {shape} does not have size {n}")]
    BadShape { shape: String, n: usize },
    #[error("label {0} is not a valid type-D label")]
    BadLabel(String),
    #[error("vanishing denominator in the Hoefsmit coefficient")]
    SingularDenominator,
    #[error("generator index {0} out of range")]
    UnknownGenerator(usize),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Parameters `(F_q, α, β, n)` for type B.
#[derive(Debug, Clone)]
pub struct HeckeParams {
    pub field: FieldCtx,
    pub alpha: Fel,
    pub beta: Fel,
    pub n: usize,
}

impl HeckeParams {
    pub fn new(field: FieldCtx, alpha: Fel, beta: Fel, n: usize) -> Result<HeckeParams, HeckeError> {
        if n < 1 {
            return Err(HeckeError::BadRank { n, min: 1 });
        }
        let order = field.element_order(alpha)?;
        if order <= n as u64 || EXCLUDED_ORDERS.contains(&order) {
            return Err(HeckeError::BadOrder { order, n });
        }
        if beta == field.zero() || !field.beta_is_admissible(alpha, beta, n) {
            return Err(HeckeError::InadmissibleBeta { n });
        }
        let got = field.subfield_degree(&[alpha, beta]);
        if got != field.d() {
            return Err(HeckeError::NotGenerating { got, d: field.d() });
        }
        Ok(HeckeParams {
            field,
            alpha,
            beta,
            n,
        })
    }

    /// Same field and parameters at another rank, revalidated.
    pub fn with_rank(&self, n: usize) -> Result<HeckeParams, HeckeError> {
        HeckeParams::new(self.field.clone(), self.alpha, self.beta, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RepKind {
    A,
    B,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepLabel {
    pub kind: RepKind,
    pub shape: DoublePartition,
    pub sign: Option<Sign>,
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(s) => write!(f, "{}{}", self.shape, s),
            None => write!(f, "{}", self.shape),
        }
    }
}

/// A representation given by its generator matrices.
#[derive(Debug, Clone)]
pub struct Rep {
    pub label: RepLabel,
    pub field: FieldCtx,
    pub alpha: Fel,
    /// `1` in type D.
    pub beta: Fel,
    pub n: usize,
    pub names: Vec<String>,
    pub gens: Vec<Mat>,
    pub inverses: Vec<Mat>,
}

impl Rep {
    pub(crate) fn assemble(
        label: RepLabel,
        field: FieldCtx,
        alpha: Fel,
        beta: Fel,
        n: usize,
        gens: Vec<Mat>,
    ) -> Rep {
        let first = if label.kind == RepKind::D { "U" } else { "T" };
        let names = std::iter::once(first.to_string())
            .chain((1..gens.len()).map(|i| format!("S{i}")))
            .collect();
        let inverses = gens
            .iter()
            .map(|g| g.inverse(&field).expect("generators are invertible"))
            .collect();
        Rep {
            label,
            field,
            alpha,
            beta,
            n,
            names,
            gens,
            inverses,
        }
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map_or(0, |g| g.rows())
    }

    /// Eigenvalue `a` in the quadratic relation `(g - a)(g + 1) = 0` of generator `i`.
    pub fn quadratic_parameter(&self, i: usize) -> Fel {
        if i == 0 && self.label.kind != RepKind::D {
            self.beta
        } else {
            self.alpha
        }
    }

    /// Block-diagonal sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Rep) -> Rep {
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| Mat::block_diag(&[a, b]))
            .collect();
        let mut r = Rep::assemble(
            self.label.clone(),
            self.field.clone(),
            self.alpha,
            self.beta,
            self.n,
            gens,
        );
        r.names = self.names.clone();
        r
    }
}

/// A word in the Artin generators; letter `(0, e)` is `T` (or `U`), `(i, e)` is `S_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArtinWord {
    pub letters: Vec<(usize, i8)>,
    pub l1: i64,
    pub l2: i64,
}

impl ArtinWord {
    pub fn new(letters: Vec<(usize, i8)>) -> ArtinWord {
        let l1 = letters
            .iter()
            .filter(|l| l.0 != 0)
            .map(|l| l.1 as i64)
            .sum();
        let l2 = letters
            .iter()
            .filter(|l| l.0 == 0)
            .map(|l| l.1 as i64)
            .sum();
        ArtinWord { letters, l1, l2 }
    }

    pub fn empty() -> ArtinWord {
        ArtinWord::new(Vec::new())
    }

    pub fn gen(i: usize) -> ArtinWord {
        ArtinWord::new(vec![(i, 1)])
    }

    pub fn inverse(&self) -> ArtinWord {
        ArtinWord::new(self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len() + other.letters.len());
        for &l in self.letters.iter().chain(&other.letters) {
            if out.last().is_some_and(|&(g, e)| g == l.0 && e == -l.1) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ArtinWord::new(out)
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &ArtinWord, b: &ArtinWord) -> ArtinWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Total exponent sum.
    pub fn length(&self) -> i64 {
        self.l1 + self.l2
    }
}

/// `α^(c-r)β` on the left component, `-α^(c-r)` on the right.
pub(crate) fn content_raw(f: &FieldCtx, alpha: Fel, beta: Fel, t: &DoubleTableau, j: usize) -> Fel {
    let c = t.cell(j);
    let a = f.pow(alpha, c.content());
    if c.comp == 1 {
        f.mul(a, beta)
    } else {
        f.neg(a)
    }
}

pub(crate) fn m_raw(
    f: &FieldCtx,
    alpha: Fel,
    beta: Fel,
    t: &DoubleTableau,
    i: usize,
) -> Result<Fel, HeckeError> {
    let ratio = f.div(content_raw(f, alpha, beta, t, i), content_raw(f, alpha, beta, t, i + 1));
    let den = f.sub(f.one(), ratio);
    if den == f.zero() {
        return Err(HeckeError::SingularDenominator);
    }
    Ok(f.div(f.sub(alpha, f.one()), den))
}

/// `ct(𝕋 : j)`.
pub fn content(t: &DoubleTableau, j: usize, params: &HeckeParams) -> Fel {
    content_raw(&params.field, params.alpha, params.beta, t, j)
}

/// `m_i(𝕋) = (α - 1) / (1 - ct(𝕋:i)/ct(𝕋:i+1))`.
pub fn m_coeff(t: &DoubleTableau, i: usize, params: &HeckeParams) -> Result<Fel, HeckeError> {
    m_raw(&params.field, params.alpha, params.beta, t, i)
}

/// Generator matrices `T, S_1, .., S_{n-1}` on the tableaux of `lam`.
pub(crate) fn hoefsmit_matrices(
    f: &FieldCtx,
    alpha: Fel,
    beta: Fel,
    lam: &DoublePartition,
) -> Result<(Vec<DoubleTableau>, Vec<Mat>), HeckeError> {
    let tabs = standard_tableaux(lam);
    let idx = tableau_index(&tabs);
    let n = lam.n();
    let dim = tabs.len();
    let mut gens = Vec::with_capacity(n);
    let t_diag: Vec<Fel> = tabs
        .iter()
        .map(|t| {
            if t.cell(1).comp == 1 {
                beta
            } else {
                f.neg(f.one())
            }
        })
        .collect();
    gens.push(Mat::diag(&t_diag));
    for i in 1..n {
        let mut s = Mat::zeros(dim, dim);
        for (k, t) in tabs.iter().enumerate() {
            let m = m_raw(f, alpha, beta, t, i)?;
            s[(k, k)] = m;
            if let Some(u) = t.swap(i) {
                s[(k, idx[&u])] = f.add(f.one(), m);
            }
        }
        gens.push(s);
    }
    Ok((tabs, gens))
}

/// `R_λ` of type B.
pub fn build_rep_b(lam: &DoublePartition, params: &HeckeParams) -> Result<Rep, HeckeError> {
    if lam.n() != params.n {
        return Err(HeckeError::BadShape {
            shape: lam.to_string(),
            n: params.n,
        });
    }
    let (_, gens) = hoefsmit_matrices(&params.field, params.alpha, params.beta, lam)?;
    let kind = if lam.right.is_empty() {
        RepKind::A
    } else {
        RepKind::B
    };
    Ok(Rep::assemble(
        RepLabel {
            kind,
            shape: lam.clone(),
            sign: None,
        },
        params.field.clone(),
        params.alpha,
        params.beta,
        params.n,
        gens,
    ))
}

/// Ordered product of generator matrices and inverses.
pub fn eval_word(rep: &Rep, w: &ArtinWord) -> Result<Mat, HeckeError> {
    let f = &rep.field;
    let mut acc = Mat::identity(rep.dim(), f);
    for &(g, e) in &w.letters {
        let m = match e {
            1 => rep.gens.get(g),
            -1 => rep.inverses.get(g),
            _ => None,
        }
        .ok_or(HeckeError::UnknownGenerator(g))?;
        acc = acc.mul(m, f);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationReport {
    pub label: String,
    pub dim: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn braid3(a: &Mat, b: &Mat, f: &FieldCtx) -> bool {
    a.mul(b, f).mul(a, f) == b.mul(a, f).mul(b, f)
}

fn braid4(a: &Mat, b: &Mat, f: &FieldCtx) -> bool {
    let ab = a.mul(b, f);
    let ba = b.mul(a, f);
    ab.mul(&ab, f) == ba.mul(&ba, f)
}

fn commute(a: &Mat, b: &Mat, f: &FieldCtx) -> bool {
    a.mul(b, f) == b.mul(a, f)
}

/// Exact check of the quadratic, braid and commutation relations.
pub fn check_defining_relations(rep: &Rep) -> RelationReport {
    let f = &rep.field;
    let g = &rep.gens;
    let k = g.len();
    let nm = &rep.names;
    let mut checks = Vec::new();
    let mut push = |relation: String, holds: bool| checks.push(RelationCheck { relation, holds });
    for (i, m) in g.iter().enumerate() {
        let a = rep.quadratic_parameter(i);
        let id = Mat::identity(m.rows(), f);
        let lhs = m.sub(&id.scale(a, f), f).mul(&m.add(&id, f), f);
        push(format!("({} - a)({} + 1) = 0", nm[i], nm[i]), lhs.is_zero());
    }
    let type_d = rep.label.kind == RepKind::D;
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (&g[i], &g[j]);
            let name = format!("{} {}", nm[i], nm[j]);
            let ok = if i == 0 {
                if type_d {
                    match j {
                        2 => ("braid", braid3(a, b, f)),
                        _ => ("commute", commute(a, b, f)),
                    }
                } else {
                    match j {
                        1 => ("braid4", braid4(a, b, f)),
                        _ => ("commute", commute(a, b, f)),
                    }
                }
            } else if j == i + 1 {
                ("braid", braid3(a, b, f))
            } else {
                ("commute", commute(a, b, f))
            };
            push(format!("{} {}", ok.0, name), ok.1);
        }
    }
    RelationReport {
        label: rep.label.to_string(),
        dim: rep.dim(),
        checks,
    }
}

/// Commutators of the generators, plus conjugates by generators up to `depth`.
pub fn derived_subgroup_words(n: usize, depth: usize) -> Vec<ArtinWord> {
    let gens: Vec<ArtinWord> = (0..n).map(ArtinWord::gen).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(ArtinWord::commutator(&gens[i], &gens[j]));
        }
    }
    let mut layer = out.clone();
    let mut seen: std::collections::HashSet<Vec<(usize, i8)>> =
        out.iter().map(|w| w.letters.clone()).collect();
    for _ in 1..depth {
        let mut next = Vec::new();
        for w in &layer {
            for g in &gens {
                for x in [g.clone(), g.inverse()] {
                    let c = x.concat(w).concat(&x.inverse());
                    if seen.insert(c.letters.clone()) {
                        next.push(c);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// For each cell holding `n`, whether the principal block of `R_λ` on the
/// tableaux with `n` there equals `R_μ` for the corresponding `μ`, with the
/// off-block entries of `T, S_1, .., S_{n-2}` vanishing.
pub fn check_restriction(
    lam: &DoublePartition,
    params: &HeckeParams,
) -> Result<Vec<(DoublePartition, bool)>, HeckeError> {
    let f = &params.field;
    let n = lam.n();
    let (tabs, gens) = hoefsmit_matrices(f, params.alpha, params.beta, lam)?;
    let mut groups: HashMap<crate::tableaux::Cell, Vec<usize>> = HashMap::new();
    for (k, t) in tabs.iter().enumerate() {
        groups.entry(t.cell(n)).or_default().push(k);
    }
    let mut block_of = vec![usize::MAX; tabs.len()];
    let mut cells: Vec<_> = groups.keys().copied().collect();
    cells.sort();
    for (b, c) in cells.iter().enumerate() {
        for &k in &groups[c] {
            block_of[k] = b;
        }
    }
    let mut out = Vec::new();
    for c in &cells {
        let rows = &groups[c];
        let mu = DoubleTableau {
            placement: tabs[rows[0]].placement[..n - 1].to_vec(),
        }
        .shape();
        let (_, small) = hoefsmit_matrices(f, params.alpha, params.beta, &mu)?;
        let ok = gens[..n - 1]
            .iter()
            .zip(&small)
            .all(|(g, s)| g.submatrix(rows, rows) == *s);
        out.push((mu, ok));
    }
    let off_ok = gens[..n - 1].iter().all(|g| {
        (0..tabs.len()).all(|i| {
            (0..tabs.len()).all(|j| block_of[i] == block_of[j] || g[(i, j)] == f.zero())
        })
    });
    if !off_ok {
        for o in out.iter_mut() {
            o.1 = false;
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn params29() -> HeckeParams {
        let f = make_field(29, 1).unwrap();
        let a = f.find_element_of_order(7).unwrap();
        HeckeParams::new(f.clone(), a, f.from_int(2), 2).unwrap()
    }

    #[test]
    fn two_by_two() {
        let p = params29();
        let f = &p.field;
        let r = build_rep_b(&DoublePartition::of(&[1], &[1]), &p).unwrap();
        let (a, b) = (p.alpha, p.beta);
        let c = f.inv(f.add(b, f.one()));
        let one = f.one();
        let s = Mat::from_rows(vec![
            vec![f.sub(a, one), f.add(a, b)],
            vec![f.add(f.mul(a, b), one), f.sub(f.mul(a, b), b)],
        ])
        .scale(c, f);
        assert_eq!(r.gens[1], s);
        assert_eq!(r.gens[0], Mat::diag(&[b, f.neg(one)]));
        assert!(check_defining_relations(&r).all_hold());
    }

    #[test]
    fn words() {
        assert_eq!(derived_subgroup_words(2, 1).len(), 1);
        assert_eq!(derived_subgroup_words(3, 1).len(), 3);
        for w in derived_subgroup_words(4, 2) {
            assert_eq!((w.l1, w.l2), (0, 0));
        }
    }
}
