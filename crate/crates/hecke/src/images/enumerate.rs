use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::ImagesError;
use crate::gf::FieldCtx;
use crate::matrix::Mat;

/// Default bound on the number of group elements kept in memory.
pub const DEFAULT_CAP: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEnumeration {
    pub order: u64,
    /// Whether the group equals its derived subgroup.
    pub is_derived_closed: bool,
}

fn key(m: &Mat) -> Box<[u32]> {
    m.data().iter().map(|x| x.raw()).collect()
}

/// Closure of `gens` under multiplication, as a list of elements.
fn closure(gens: &[Mat], f: &FieldCtx, cap: usize) -> Result<Vec<Mat>, ImagesError> {
    let n = gens.first().map_or(0, |g| g.rows());
    let id = Mat::identity(n, f);
    let mut seen: HashSet<Box<[u32]>> = HashSet::new();
    seen.insert(key(&id));
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = elems[i].mul(g, f);
            if seen.insert(key(&p)) {
                if elems.len() >= cap {
                    return Err(ImagesError::Overflow(cap));
                }
                elems.push(p);
            }
        }
        i += 1;
    }
    Ok(elems)
}

fn commutator(a: &Mat, b: &Mat, f: &FieldCtx) -> Mat {
    let ai = a.inverse(f).expect("invertible");
    let bi = b.inverse(f).expect("invertible");
    a.mul(b, f).mul(&ai, f).mul(&bi, f)
}

/// Elements of the normal closure of the pairwise commutators of `gens`.
fn derived_closure(gens: &[Mat], f: &FieldCtx, cap: usize) -> Result<Vec<Mat>, ImagesError> {
    let mut sub: Vec<Mat> = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = commutator(&gens[i], &gens[j], f);
            if !sub.contains(&c) {
                sub.push(c);
            }
        }
    }
    if sub.is_empty() {
        let n = gens.first().map_or(0, |g| g.rows());
        return Ok(vec![Mat::identity(n, f)]);
    }
    let inverses: Vec<Mat> = gens.iter().map(|g| g.inverse(f).expect("invertible")).collect();
    loop {
        let elems = closure(&sub, f, cap)?;
        let members: HashSet<Box<[u32]>> = elems.iter().map(key).collect();
        let mut grew = false;
        for h in sub.clone() {
            for (g, gi) in gens.iter().zip(&inverses) {
                let c = g.mul(&h, f).mul(gi, f);
                if !members.contains(&key(&c)) && !sub.contains(&c) {
                    sub.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(elems);
        }
    }
}

/// Order of `⟨gens⟩` by breadth-first closure, and whether it is perfect.
pub fn enumerate_group(gens: &[Mat], f: &FieldCtx, cap: usize) -> Result<GroupEnumeration, ImagesError> {
    let elems = closure(gens, f, cap)?;
    let derived = derived_closure(gens, f, cap)?;
    Ok(GroupEnumeration {
        order: elems.len() as u64,
        is_derived_closed: derived.len() == elems.len(),
    })
}

/// Order of the derived subgroup of `⟨gens⟩`.
pub fn derived_subgroup_order(gens: &[Mat], f: &FieldCtx, cap: usize) -> Result<u64, ImagesError> {
    Ok(derived_closure(gens, f, cap)?.len() as u64)
}
