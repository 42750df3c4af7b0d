//! Verification suites shared by the command-line tool and the acceptance run.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::forms::{
    form_space_d, gram_b, gram_space_rep_b, hermitian_diag, hermitian_gram_d,
    transpose_intertwiner, transpose_intertwiner_d, verify_intertwiner, verify_twisted_invariance,
    verify_unitary, weight, FormsError, Symmetry, Twist,
};
use crate::gf::{Fel, FieldCtx};
use crate::hoefsmit::{
    build_rep_b, check_defining_relations, check_restriction, HeckeError, HeckeParams, Rep,
};
use crate::images::{
    classify_image, classify_image_d, exterior_power_check, predicted_relation_b, predicted_relation_d,
    test_factorization, transversal_b, transversal_d, FieldCase, ImagesError, Transform,
};
use crate::matrix::Mat;
use crate::tableaux::{
    double_partitions, nu_tilde_d, phi_d, phi_tableau, standard_tableaux, transpose_sign,
    DoublePartition, Partition,
};
use crate::typed::{branch_clause, branch_d, build_rep_d, d_labels, DLabel, DParams};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {0} does not apply to type {1}")]
    NotApplicable(Suite, &'static str),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Images(#[from] ImagesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Relations,
    Forms,
    Unitary,
    Intertwiners,
    Exterior,
    Factorizations,
    Branching,
    Images,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Relations,
        Suite::Forms,
        Suite::Unitary,
        Suite::Intertwiners,
        Suite::Exterior,
        Suite::Factorizations,
        Suite::Branching,
        Suite::Images,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Forms => "forms",
            Suite::Unitary => "unitary",
            Suite::Intertwiners => "intertwiners",
            Suite::Exterior => "exterior",
            Suite::Factorizations => "factorizations",
            Suite::Branching => "branching",
            Suite::Images => "images",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Suite, SuiteError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

/// Algebra and parameters a suite runs against.
#[derive(Debug, Clone)]
pub enum Setting {
    /// Type B; `type_a` restricts to modules with an empty right component.
    B {
        params: HeckeParams,
        case: FieldCase,
        type_a: bool,
    },
    D { params: DParams },
}

impl Setting {
    pub fn n(&self) -> usize {
        match self {
            Setting::B { params, .. } => params.n,
            Setting::D { params } => params.n,
        }
    }

    pub fn field(&self) -> &FieldCtx {
        match self {
            Setting::B { params, .. } => &params.field,
            Setting::D { params } => &params.field,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Setting::B { type_a: true, .. } => "A",
            Setting::B { .. } => "B",
            Setting::D { .. } => "D",
        }
    }

    fn shapes_b(&self) -> Vec<DoublePartition> {
        let n = self.n();
        let type_a = matches!(self, Setting::B { type_a: true, .. });
        double_partitions(n)
            .into_iter()
            .filter(|l| !type_a || l.right.is_empty())
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteResult {
    fn new(suite: Suite, cases: Vec<CaseResult>) -> SuiteResult {
        SuiteResult {
            suite,
            passed: cases.iter().all(|c| c.passed),
            cases,
        }
    }
}

fn case(label: impl ToString, passed: bool, detail: Value) -> CaseResult {
    CaseResult {
        label: label.to_string(),
        passed,
        detail,
    }
}

/// Run one suite. `seed` drives the random words of the branching suite.
pub fn run_suite(suite: Suite, setting: &Setting, seed: u64) -> Result<SuiteResult, SuiteError> {
    let cases = match (suite, setting) {
        (Suite::Relations, Setting::B { params, .. }) => relations_b(setting, params)?,
        (Suite::Relations, Setting::D { params }) => relations_d(params)?,
        (Suite::Forms, Setting::B { params, .. }) => forms_b(setting, params)?,
        (Suite::Forms, Setting::D { params }) => forms_d(params)?,
        (Suite::Unitary, Setting::B { params, .. }) => unitary_b(setting, params)?,
        (Suite::Unitary, Setting::D { params }) => unitary_d(params)?,
        (Suite::Intertwiners, Setting::B { params, .. }) => intertwiners_b(setting, params)?,
        (Suite::Intertwiners, Setting::D { params }) => intertwiners_d(params)?,
        (Suite::Exterior, Setting::B { params, type_a: false, .. }) => exterior(params)?,
        (Suite::Factorizations, Setting::B { params, case, .. }) => factorizations_b(setting, params, case)?,
        (Suite::Factorizations, Setting::D { params }) => factorizations_d(params)?,
        (Suite::Branching, Setting::B { params, .. }) => branching_b(setting, params, seed)?,
        (Suite::Branching, Setting::D { params }) => branching_d(params, seed)?,
        (Suite::Images, Setting::B { params, case, .. }) => images_b(setting, params, case)?,
        (Suite::Images, Setting::D { params }) => images_d(params)?,
        _ => return Err(SuiteError::NotApplicable(suite, setting.type_name())),
    };
    Ok(SuiteResult::new(suite, cases))
}

/// The suites that apply to a setting, in order.
pub fn default_suites(setting: &Setting) -> Vec<Suite> {
    Suite::ALL
        .into_iter()
        .filter(|s| !(matches!(setting, Setting::D { .. } | Setting::B { type_a: true, .. }) && *s == Suite::Exterior))
        .collect()
}

fn collect<T: Send, F>(items: Vec<T>, f: F) -> Result<Vec<CaseResult>, SuiteError>
where
    F: Fn(&T) -> Result<CaseResult, SuiteError> + Sync + Send,
    T: Sync,
{
    items.par_iter().map(f).collect()
}

fn relations_b(setting: &Setting, params: &HeckeParams) -> Result<Vec<CaseResult>, SuiteError> {
    collect(setting.shapes_b(), |lam| {
        let r = check_defining_relations(&build_rep_b(lam, params)?);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.holds).map(|c| c.relation.as_str()).collect();
        Ok(case(lam, r.all_hold(), json!({"dim": r.dim, "checked": r.checks.len(), "failed": failed})))
    })
}

fn relations_d(params: &DParams) -> Result<Vec<CaseResult>, SuiteError> {
    collect(d_labels(params.n), |l| {
        let r = check_defining_relations(&build_rep_d(l, params)?);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.holds).map(|c| c.relation.as_str()).collect();
        Ok(case(l, r.all_hold(), json!({"dim": r.dim, "checked": r.checks.len(), "failed": failed})))
    })
}

fn sym_name(s: Symmetry) -> &'static str {
    match s {
        Symmetry::Symmetric => "symmetric",
        Symmetry::Skew => "skew",
        Symmetry::Neither => "neither",
    }
}

fn forms_b(setting: &Setting, params: &HeckeParams) -> Result<Vec<CaseResult>, SuiteError> {
    let f = &params.field;
    collect(setting.shapes_b(), |lam| {
        let g = gram_b(lam, params);
        let rep = gram_space_rep_b(lam, params)?;
        let inv = verify_twisted_invariance(&rep, &g).all_hold();
        let nu = transpose_sign(lam);
        let sign_const = standard_tableaux(lam)
            .iter()
            .all(|t| weight(t) * weight(&t.transpose()) == nu);
        let nondeg = g.matrix.det(f) != f.zero();
        let want = if nu == 1 { Symmetry::Symmetric } else { Symmetry::Skew };
        // In characteristic 2 the weights are all 1 and the form is alternating.
        let sym_ok = if f.p() == 2 {
            g.symmetry != Symmetry::Neither
        } else {
            g.symmetry == want
        };
        Ok(case(
            lam,
            inv && sign_const && nondeg && sym_ok,
            json!({
                "space": g.space,
                "invariant": inv,
                "sign_constant": sign_const,
                "nu_tilde": nu,
                "nondegenerate": nondeg,
                "symmetry": sym_name(g.symmetry),
            }),
        ))
    })
}

/// The signed Gram matrix is monomial with every nonzero entry `±2`.
fn signed_pairing_ok(gram: &Mat, f: &FieldCtx) -> bool {
    let two = f.from_int(2);
    let m2 = f.neg(two);
    (0..gram.rows()).all(|k| {
        let nz: Vec<Fel> = gram.row(k).iter().copied().filter(|&x| x != f.zero()).collect();
        nz.len() == 1 && (nz[0] == two || nz[0] == m2)
    })
}

fn forms_d(params: &DParams) -> Result<Vec<CaseResult>, SuiteError> {
    let f = &params.field;
    collect(d_labels(params.n), |l| {
        let (g, rep) = form_space_d(l, params)?;
        let inv = verify_twisted_invariance(&rep, &g).all_hold();
        let nondeg = g.matrix.det(f) != f.zero();
        let mut detail = json!({
            "space": g.space,
            "invariant": inv,
            "nondegenerate": nondeg,
            "symmetry": sym_name(g.symmetry),
        });
        let mut ok = inv && nondeg;
        match l.sign {
            None => {
                let shape = &l.shape;
                let nu = nu_tilde_d(shape);
                let sign_const = standard_tableaux(shape)
                    .iter()
                    .all(|t| weight(t) * weight(&phi_tableau(t, shape)) == nu);
                ok &= sign_const;
                if phi_d(shape) == *shape {
                    let want = if nu == 1 { Symmetry::Symmetric } else { Symmetry::Skew };
                    ok &= g.symmetry == want;
                }
                detail["nu_tilde"] = json!(nu);
                detail["sign_constant"] = json!(sign_const);
            }
            Some(_) => {
                let pairing = signed_pairing_ok(&g.matrix, f);
                ok &= pairing;
                detail["pairing"] = json!(pairing);
            }
        }
        Ok(case(l, ok, detail))
    })
}

fn unitary_b(setting: &Setting, params: &HeckeParams) -> Result<Vec<CaseResult>, SuiteError> {
    let f = &params.field;
    if f.d() % 2 == 1 {
        return Ok(vec![case("field", true, json!({"skipped": "no automorphism of order 2"}))]);
    }
    let e = f.d() as i64 / 2;
    let inv_a = f.frobenius(params.alpha, e) == f.inv(params.alpha);
    let inv_b = f.frobenius(params.beta, e) == f.inv(params.beta);
    collect(setting.shapes_b(), |lam| {
        let d = hermitian_diag(lam, params)?;
        let nonzero = d.iter().all(|&x| x != Fel::ZERO);
        let rep = build_rep_b(lam, params)?;
        let r = verify_unitary(&rep, &Mat::diag(&d));
        let s_applies = inv_a && (lam.has_empty_component() || inv_b);
        let mut checked = Vec::new();
        let mut ok = nonzero;
        for c in &r.checks {
            let applies = if c.generator == "T" { inv_b } else { s_applies };
            if applies {
                checked.push(c.generator.clone());
                ok &= c.holds;
            }
        }
        Ok(case(
            lam,
            ok,
            json!({"nonzero": nonzero, "checked_generators": checked, "eps_inverts_alpha": inv_a, "eps_inverts_beta": inv_b}),
        ))
    })
}

fn unitary_d(params: &DParams) -> Result<Vec<CaseResult>, SuiteError> {
    let f = &params.field;
    if f.d() % 2 == 1 {
        return Ok(vec![case("field", true, json!({"skipped": "no automorphism of order 2"}))]);
    }
    let unitary = !params.field_split();
    collect(d_labels(params.n), |l| {
        let g = hermitian_gram_d(l, params)?;
        let nonzero = g.det(f) != f.zero();
        let mut ok = nonzero;
        let mut checked = false;
        if unitary {
            let rep = build_rep_d(l, params)?;
            ok &= verify_unitary(&rep, &g).all_hold();
            checked = true;
        }
        Ok(case(l, ok, json!({"nondegenerate": nonzero, "generators_checked": checked})))
    })
}

fn intertwiners_b(setting: &Setting, params: &HeckeParams) -> Result<Vec<CaseResult>, SuiteError> {
    let f = &params.field;
    let twist = Twist {
        t: f.neg(params.beta),
        s: f.neg(params.alpha),
    };
    collect(setting.shapes_b(), |lam| {
        let l = transpose_intertwiner(lam, f);
        let rep = gram_space_rep_b(lam, params)?;
        let ok = verify_intertwiner(&rep, &l, twist).all_hold();
        Ok(case(lam, ok, json!({"dim": rep.dim()})))
    })
}

fn intertwiners_d(params: &DParams) -> Result<Vec<CaseResult>, SuiteError> {
    let f = &params.field;
    let ma = f.neg(params.alpha);
    let twist = Twist { t: ma, s: ma };
    let mut shapes: Vec<DoublePartition> = d_labels(params.n).into_iter().map(|l| l.shape).collect();
    shapes.dedup();
    collect(shapes, |shape| {
        let (l, rep) = transpose_intertwiner_d(shape, params)?;
        let ok = verify_intertwiner(&rep, &l, twist).all_hold();
        Ok(case(shape, ok, json!({"dim": rep.dim()})))
    })
}

fn exterior(params: &HeckeParams) -> Result<Vec<CaseResult>, SuiteError> {
    let n = params.n;
    let jobs: Vec<(u8, usize)> = [1u8, 2].iter().flat_map(|&fam| (1..n).map(move |r| (fam, r))).collect();
    collect(jobs, |&(fam, r)| {
        let rep = exterior_power_check(r, fam, params)?;
        Ok(case(
            format!("family {fam}, r = {r}"),
            rep.all_hold(),
            serde_json::to_value(&rep.checks).unwrap_or(Value::Null),
        ))
    })
}

fn relation_row<L: ToString>(
    la: &L,
    reps: &[(String, Rep)],
    a: &Rep,
    want: impl Fn(usize, Transform) -> bool,
) -> Result<CaseResult, SuiteError> {
    let mut mismatches = Vec::new();
    let mut found = Vec::new();
    for (j, (lb, b)) in reps.iter().enumerate() {
        if a.dim() != b.dim() {
            continue;
        }
        for t in Transform::ALL {
            let got = match test_factorization(a, b, t) {
                Ok(k) => k.holds(),
                Err(ImagesError::NoInvolution(_)) => false,
                Err(e) => return Err(e.into()),
            };
            if got {
                found.push(format!("{t:?} {lb}"));
            }
            if got != want(j, t) {
                mismatches.push(format!("{t:?} {lb}: expected {}, found {got}", want(j, t)));
            }
        }
    }
    Ok(case(
        la.to_string(),
        mismatches.is_empty(),
        json!({"relations": found, "mismatches": mismatches}),
    ))
}

fn factorizations_b(setting: &Setting, params: &HeckeParams, fc: &FieldCase) -> Result<Vec<CaseResult>, SuiteError> {
    let shapes: Vec<DoublePartition> = setting
        .shapes_b()
        .into_iter()
        .filter(|l| !l.has_empty_component())
        .collect();
    let reps: Vec<(String, Rep)> = shapes
        .iter()
        .map(|l| Ok((l.to_string(), build_rep_b(l, params)?)))
        .collect::<Result<_, SuiteError>>()?;
    let idx: Vec<usize> = (0..shapes.len()).collect();
    let mut out = collect(idx, |&i| {
        relation_row(&shapes[i], &reps, &reps[i].1, |j, t| {
            predicted_relation_b(&shapes[i], &shapes[j], t, fc)
        })
    })?;
    // Type-A modules seen from either component agree on the derived subgroup.
    let n = params.n;
    let mut singles: Vec<Partition> = double_partitions(n)
        .into_iter()
        .filter(|l| l.right.is_empty() && l.dim() > 1)
        .map(|l| l.left)
        .collect();
    singles.sort();
    for mu in singles {
        let a = build_rep_b(&DoublePartition::new(mu.clone(), Partition::empty()), params)?;
        let b = build_rep_b(&DoublePartition::new(Partition::empty(), mu.clone()), params)?;
        let ok = test_factorization(&a, &b, Transform::Id)?.holds();
        out.push(case(
            format!("({mu},[]) ~ ([],{mu})"),
            ok,
            json!({"outside_no_empty_hypothesis": true}),
        ));
    }
    Ok(out)
}

fn factorizations_d(params: &DParams) -> Result<Vec<CaseResult>, SuiteError> {
    let labels: Vec<DLabel> = d_labels(params.n).into_iter().filter(|l| l.dim() > 1).collect();
    let reps: Vec<(String, Rep)> = labels
        .iter()
        .map(|l| Ok((l.to_string(), build_rep_d(l, params)?)))
        .collect::<Result<_, SuiteError>>()?;
    let unitary = !params.field_split();
    let idx: Vec<usize> = (0..labels.len()).collect();
    collect(idx, |&i| {
        relation_row(&labels[i], &reps, &reps[i].1, |j, t| {
            predicted_relation_d(&labels[i], &labels[j], t, unitary)
        })
    })
}

/// Traces of `big` against the block sum of `parts` on every freely reduced
/// word of length at most `depth` in the first `k` generators, and on
/// `samples` seeded random words of length `depth + 1`.
pub fn traces_agree(big: &Rep, parts: &[Rep], k: usize, depth: usize, samples: usize, seed: u64) -> bool {
    let f = &big.field;
    let sum = |i: usize, inv: bool| {
        Mat::block_diag(
            &parts
                .iter()
                .map(|p| if inv { &p.inverses[i] } else { &p.gens[i] })
                .collect::<Vec<_>>(),
        )
    };
    // Letter `2i` is generator `i`, `2i + 1` its inverse.
    let mut letters_big = Vec::new();
    let mut letters_sum = Vec::new();
    for i in 0..k {
        letters_big.push(big.gens[i].clone());
        letters_big.push(big.inverses[i].clone());
        letters_sum.push(sum(i, false));
        letters_sum.push(sum(i, true));
    }
    fn walk(a: &Mat, b: &Mat, last: Option<usize>, left: usize, la: &[Mat], lb: &[Mat], f: &FieldCtx) -> bool {
        if a.trace(f) != b.trace(f) {
            return false;
        }
        if left == 0 {
            return true;
        }
        (0..la.len()).all(|x| {
            if last == Some(x ^ 1) {
                return true;
            }
            walk(&a.mul(&la[x], f), &b.mul(&lb[x], f), Some(x), left - 1, la, lb, f)
        })
    }
    let ida = Mat::identity(big.dim(), f);
    if !walk(&ida, &ida, None, depth, &letters_big, &letters_sum, f) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let mut a = ida.clone();
        let mut b = ida.clone();
        for _ in 0..=depth {
            let x = rng.gen_range(0..letters_big.len());
            a = a.mul(&letters_big[x], f);
            b = b.mul(&letters_sum[x], f);
        }
        a.trace(f) == b.trace(f)
    })
}

const SAMPLES: usize = 64;

/// Exhaustive word length for the branching traces in types B and D.
const DEPTH_B: usize = 4;
const DEPTH_D: usize = 3;

fn branching_b(setting: &Setting, params: &HeckeParams, seed: u64) -> Result<Vec<CaseResult>, SuiteError> {
    let n = params.n;
    if n < 2 {
        return Ok(Vec::new());
    }
    let small = params.with_rank(n - 1)?;
    collect(setting.shapes_b(), |lam| {
        let big = build_rep_b(lam, params)?;
        let mus = lam.branch_candidates();
        let parts: Vec<Rep> = mus.iter().map(|m| build_rep_b(m, &small)).collect::<Result<_, _>>()?;
        let dims_ok = parts.iter().map(|p| p.dim()).sum::<usize>() == big.dim();
        let blocks = check_restriction(lam, params)?;
        let blocks_ok = blocks.iter().all(|b| b.1);
        let traces_ok = traces_agree(&big, &parts, n - 1, DEPTH_B, 0, seed);
        let names: Vec<String> = mus.iter().map(|m| m.to_string()).collect();
        Ok(case(
            lam,
            dims_ok && blocks_ok && traces_ok,
            json!({"constituents": names, "dims": dims_ok, "blocks": blocks_ok, "traces": traces_ok, "word_length": DEPTH_B}),
        ))
    })
}

fn branching_d(params: &DParams, seed: u64) -> Result<Vec<CaseResult>, SuiteError> {
    let n = params.n;
    let small = match DParams::new(params.field.clone(), params.alpha, n - 1) {
        Ok(s) => s,
        Err(HeckeError::BadRank { .. }) => {
            return Ok(vec![case("rank", true, json!({"skipped": "restriction leaves the type-D range"}))]);
        }
        Err(e) => return Err(e.into()),
    };
    collect(d_labels(n), |l| {
        let big = build_rep_d(l, params)?;
        let parts_l = branch_d(l);
        let parts: Vec<Rep> = parts_l.iter().map(|m| build_rep_d(m, &small)).collect::<Result<_, _>>()?;
        let dims_ok = parts.iter().map(|p| p.dim()).sum::<usize>() == big.dim();
        let traces_ok = traces_agree(&big, &parts, n - 1, DEPTH_D, SAMPLES, seed);
        let names: Vec<String> = parts_l.iter().map(|m| m.to_string()).collect();
        Ok(case(
            l,
            dims_ok && traces_ok,
            json!({"clause": branch_clause(l), "constituents": names, "dims": dims_ok, "traces": traces_ok, "word_length": DEPTH_D + 1}),
        ))
    })
}

fn images_b(setting: &Setting, params: &HeckeParams, fc: &FieldCase) -> Result<Vec<CaseResult>, SuiteError> {
    let type_a = matches!(setting, Setting::B { type_a: true, .. });
    let reps: Vec<DoublePartition> = transversal_b(params.n, fc)
        .into_iter()
        .filter(|l| !type_a || l.right.is_empty())
        .collect();
    collect(reps, |lam| {
        let rep = build_rep_b(lam, params)?;
        let r = classify_image(&rep, fc)?;
        Ok(case(
            lam,
            r.consistent(),
            serde_json::to_value(&r).unwrap_or(Value::Null),
        ))
    })
}

fn images_d(params: &DParams) -> Result<Vec<CaseResult>, SuiteError> {
    collect(transversal_d(params.n), |l| {
        let rep = build_rep_d(l, params)?;
        let r = classify_image_d(&rep)?;
        Ok(case(l, r.consistent(), serde_json::to_value(&r).unwrap_or(Value::Null)))
    })
}
