use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ImagesError;
use crate::gf::{Fel, FieldCtx};
use crate::hoefsmit::{build_rep_b, HeckeParams};
use crate::matrix::Mat;
use crate::tableaux::{standard_tableaux, DoublePartition, DoubleTableau, Partition};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExteriorReport {
    pub n: usize,
    pub r: usize,
    pub family: u8,
    /// One entry per generator, plus the `α`-eigenvector check.
    pub checks: Vec<(String, bool)>,
}

impl ExteriorReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(1, n, r, &mut cur, &mut out);
    out
}

/// Minors of `m` on every pair of index sets.
pub fn compound_matrix(m: &Mat, sets: &[Vec<usize>], f: &FieldCtx) -> Mat {
    let k = sets.len();
    let mut c = Mat::zeros(k, k);
    for (a, ra) in sets.iter().enumerate() {
        for (b, rb) in sets.iter().enumerate() {
            c[(a, b)] = m.submatrix(ra, rb).det(f);
        }
    }
    c
}

fn entries_in(t: &DoubleTableau, comp: u8) -> Vec<usize> {
    (1..=t.n()).filter(|&i| t.cell(i).comp == comp).collect()
}

fn sign_pow(f: &FieldCtx, e: usize) -> Fel {
    if e % 2 == 0 {
        f.one()
    } else {
        f.neg(f.one())
    }
}

/// Compare `Λ^r R_{λ(1)} ⊗ η` with `R_{λ(r)}` on every generator.
/// Family 1 is `λ(r) = ([1^(n-r)],[r])`, family 2 is `([r],[1^(n-r)])`.
pub fn exterior_power_check(
    r: usize,
    family: u8,
    params: &HeckeParams,
) -> Result<ExteriorReport, ImagesError> {
    let n = params.n;
    let f = &params.field;
    let shape = |k: usize| match family {
        1 => DoublePartition::new(Partition::column(n - k), Partition::row(k)),
        _ => DoublePartition::new(Partition::row(k), Partition::column(n - k)),
    };
    let comp = if family == 1 { 2 } else { 1 };
    let base = build_rep_b(&shape(1), params)?;
    let top = build_rep_b(&shape(r), params)?;
    let pos1: HashMap<usize, usize> = standard_tableaux(&shape(1))
        .iter()
        .enumerate()
        .map(|(k, t)| (entries_in(t, comp)[0], k))
        .collect();
    let pos_r: HashMap<Vec<usize>, usize> = standard_tableaux(&shape(r))
        .iter()
        .enumerate()
        .map(|(k, t)| (entries_in(t, comp), k))
        .collect();
    let sets = subsets(n, r);
    let rows: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.iter().map(|i| pos1[i]).collect())
        .collect();
    let order: Vec<usize> = sets.iter().map(|s| pos_r[s]).collect();
    let mut checks = Vec::new();
    for (g, name) in base.gens.iter().zip(&base.names) {
        let eta = if family == 1 && name == "T" {
            f.pow(params.beta, r as i64 - 1)
        } else {
            sign_pow(f, r - 1)
        };
        let c = compound_matrix(g, &rows, f);
        let i = base.names.iter().position(|x| x == name).unwrap_or(0);
        let target = top.gens[i].submatrix(&order, &order).scale(eta, f);
        checks.push((name.clone(), c == target));
    }
    let mut adjacent = true;
    for (a, s) in sets.iter().enumerate() {
        for k in 1..n {
            if s.contains(&k) && s.contains(&(k + 1)) {
                let m = &top.gens[k];
                let row = order[a];
                adjacent &= (0..m.cols()).all(|c| {
                    let want = if c == row { params.alpha } else { Fel::ZERO };
                    m[(row, c)] == want
                });
            }
        }
    }
    checks.push(("adjacent eigenvalue".to_string(), adjacent));
    Ok(ExteriorReport {
        n,
        r,
        family,
        checks,
    })
}
