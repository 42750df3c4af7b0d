use super::{classify_field_case, ImagesError};
use crate::gf::{is_prime, make_field, FieldCtx};
use crate::hoefsmit::HeckeParams;
use crate::typed::DParams;

/// Largest field scanned by the parameter search.
pub const SEARCH_MAX_Q: u64 = 1 << 16;

/// `(p, d)` with `p^d <= SEARCH_MAX_Q`, ordered by `q` then `p`.
fn fields(odd_only: bool) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in 2..=SEARCH_MAX_Q {
        if !is_prime(p) || (odd_only && p == 2) {
            continue;
        }
        let mut q = p;
        let mut d = 1;
        while q <= SEARCH_MAX_Q {
            out.push((q, p, d));
            q *= p;
            d += 1;
        }
    }
    out.sort();
    out.into_iter().map(|(_, p, d)| (p, d)).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|k| n % k == 0).collect()
}

fn first_in_field(f: &FieldCtx, case_id: u8, n: usize) -> Option<HeckeParams> {
    for m in divisors(f.q() - 1) {
        let Ok(alpha) = f.find_element_of_order(m) else {
            continue;
        };
        if m <= n as u64 {
            continue;
        }
        for beta in f.elements().skip(1) {
            let Ok(params) = HeckeParams::new(f.clone(), alpha, beta, n) else {
                continue;
            };
            if classify_field_case(&params).map(|c| c.case_id) == Ok(case_id) {
                return Some(params);
            }
        }
    }
    None
}

/// The first `count` parameter sets realizing `case_id` at rank `n`, at most
/// one per field, scanning fields by size, then orders of `α`, then `β`.
pub fn find_params_b(case_id: u8, n: usize, count: usize, p: Option<u64>) -> Result<Vec<HeckeParams>, ImagesError> {
    let mut out = Vec::new();
    for (pp, d) in fields(false) {
        if out.len() >= count {
            break;
        }
        if p.is_some_and(|x| x != pp) {
            continue;
        }
        // Cases 2 to 6 need a quadratic subextension.
        if case_id != 1 && d % 2 == 1 {
            continue;
        }
        let f = make_field(pp, d)?;
        if let Some(params) = first_in_field(&f, case_id, n) {
            out.push(params);
        }
    }
    Ok(out)
}

/// `per_case` parameter sets for each of the six cases.
pub fn parameter_pool_b(n: usize, per_case: usize) -> Result<Vec<(u8, HeckeParams)>, ImagesError> {
    let mut out = Vec::new();
    for c in 1..=6u8 {
        for params in find_params_b(c, n, per_case, None)? {
            out.push((c, params));
        }
    }
    Ok(out)
}

/// Type-D parameters with `F_p(α) = F_p(α+α⁻¹)` (`split`) or not.
pub fn find_params_d(split: bool, n: usize, count: usize, p: Option<u64>) -> Result<Vec<DParams>, ImagesError> {
    let mut out = Vec::new();
    for (pp, d) in fields(true) {
        if out.len() >= count {
            break;
        }
        if p.is_some_and(|x| x != pp) || (!split && d % 2 == 1) {
            continue;
        }
        let f = make_field(pp, d)?;
        for m in divisors(f.q() - 1) {
            let Ok(alpha) = f.find_element_of_order(m) else {
                continue;
            };
            let Ok(params) = DParams::new(f.clone(), alpha, n) else {
                continue;
            };
            if params.field_split() == split {
                out.push(params);
                break;
            }
        }
    }
    Ok(out)
}
