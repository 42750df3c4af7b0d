use hecke::gf::make_field;
use hecke::hoefsmit::{check_defining_relations, ArtinWord, HeckeError, Rep, Sign};
use hecke::tableaux::{standard_tableaux, tableau_index, DoublePartition};
use hecke::typed::{branch_clause, branch_d, build_rep_d, d_labels, eta_r, signed_basis, DLabel, DParams};
use hecke::{Fel, FieldCtx, Mat};
use proptest::prelude::*;

fn split(n: usize) -> DParams {
    let f = make_field(29, 1).unwrap();
    let a = f.find_element_of_order(14).unwrap();
    DParams::new(f, a, n).unwrap()
}

fn unitary(n: usize) -> DParams {
    let f = make_field(13, 2).unwrap();
    let a = f.find_element_of_order(14).unwrap();
    DParams::new(f, a, n).unwrap()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn signed(l: &[usize], r: &[usize], s: Sign) -> DLabel {
    DLabel::new(DoublePartition::of(l, r), Some(s)).unwrap()
}

fn plain(l: &[usize], r: &[usize]) -> DLabel {
    DLabel::new(DoublePartition::of(l, r), None).unwrap()
}

/// `U = T S_1 T` and the `S_i` from the two-term tableau rule at `β = 1`.
fn via_type_b(shape: &DoublePartition, d: &DParams) -> Vec<Mat> {
    let f = &d.field;
    let a = d.alpha;
    let tabs = standard_tableaux(shape);
    let idx = tableau_index(&tabs);
    let n = shape.n();
    let ct = |t: &hecke::DoubleTableau, j: usize| {
        let c = t.cell(j);
        let x = f.pow(a, c.col as i64 - c.row as i64);
        if c.comp == 1 { x } else { f.neg(x) }
    };
    let mut t = Mat::zeros(tabs.len(), tabs.len());
    for (k, tab) in tabs.iter().enumerate() {
        t[(k, k)] = if tab.cell(1).comp == 1 { f.one() } else { f.neg(f.one()) };
    }
    let mut gens = vec![t];
    for i in 1..n {
        let mut s = Mat::zeros(tabs.len(), tabs.len());
        for (k, tab) in tabs.iter().enumerate() {
            let m = f.div(f.sub(a, f.one()), f.sub(f.one(), f.div(ct(tab, i), ct(tab, i + 1))));
            s[(k, k)] = m;
            if let Some(sw) = tab.swap(i) {
                s[(k, idx[&sw])] = f.add(f.one(), m);
            }
        }
        gens.push(s);
    }
    let t = &gens[0];
    let mut out = vec![t.mul(&gens[1], f).mul(t, f)];
    out.extend(gens[1..].iter().cloned());
    out
}

#[test]
fn params_validation() {
    let f = make_field(29, 1).unwrap();
    let a = f.find_element_of_order(14).unwrap();
    assert!(matches!(DParams::new(f.clone(), a, 3), Err(HeckeError::BadRank { n: 3, min: 4 })));
    assert!(matches!(DParams::new(f.clone(), a, 7), Err(HeckeError::BadOrder { order: 14, n: 7 })));
    let f2 = make_field(2, 5).unwrap();
    let a2 = f2.find_element_of_order(31).unwrap();
    assert!(matches!(DParams::new(f2, a2, 4), Err(HeckeError::EvenCharacteristic)));
    assert!(split(4).field_split());
    assert!(!unitary(4).field_split());
}

#[test]
fn label_validation() {
    assert!(DLabel::new(DoublePartition::of(&[1], &[2]), None).is_err());
    assert!(DLabel::new(DoublePartition::of(&[1, 1], &[1, 1]), None).is_err());
    assert!(DLabel::new(DoublePartition::of(&[2], &[1]), Some(Sign::Plus)).is_err());
    assert_eq!(signed(&[1, 1], &[1, 1], Sign::Plus).dim(), 3);
}

#[test]
fn dimension_bookkeeping() {
    let n4: Vec<u128> = d_labels(4).iter().map(|l| l.dim() * l.dim()).collect();
    assert_eq!(n4.len(), 13);
    assert_eq!(n4.iter().sum::<u128>(), 192);
    for n in 4..=7 {
        let total: u128 = d_labels(n).iter().map(|l| l.dim() * l.dim()).sum();
        assert_eq!(total, (1u128 << (n - 1)) * factorial(n));
    }
}

#[test]
fn named_examples() {
    let d = split(4);
    let r = build_rep_d(&plain(&[2, 1], &[1]), &d).unwrap();
    assert_eq!(r.dim(), 8);
    assert_eq!(r.names, vec!["U", "S1", "S2", "S3"]);
    let r = build_rep_d(&signed(&[1, 1], &[1, 1], Sign::Plus), &d).unwrap();
    assert_eq!(r.dim(), 3);
    let r = build_rep_d(&plain(&[4], &[]), &d).unwrap();
    assert_eq!(r.dim(), 1);
    assert!(r.gens.iter().all(|g| *g == Mat::scalar(1, d.alpha)));
    assert!(matches!(
        build_rep_d(&plain(&[3], &[1]), &split(5)),
        Err(HeckeError::BadShape { .. })
    ));
}

#[test]
fn unsplit_matches_type_b_at_beta_one() {
    for d in [split(4), unitary(4)] {
        for l in d_labels(4).into_iter().filter(|l| l.sign.is_none()) {
            let r = build_rep_d(&l, &d).unwrap();
            assert_eq!(r.gens, via_type_b(&l.shape, &d), "{l}");
        }
    }
}

#[test]
fn relations_all_labels() {
    for n in 4..=6 {
        for d in [split(n), unitary(n)] {
            for l in d_labels(n) {
                let r = build_rep_d(&l, &d).unwrap();
                assert_eq!(r.dim() as u128, l.dim());
                let rep = check_defining_relations(&r);
                assert!(rep.all_hold(), "{l}");
            }
        }
    }
}

fn sigma_matrix(shape: &DoublePartition, f: &FieldCtx) -> Mat {
    let tabs = standard_tableaux(shape);
    let idx = tableau_index(&tabs);
    let mut m = Mat::zeros(tabs.len(), tabs.len());
    for (k, t) in tabs.iter().enumerate() {
        m[(k, idx[&t.sigma()])] = f.one();
    }
    m
}

#[test]
fn sigma_commutes_and_blocks_split() {
    for n in [4, 6] {
        let d = split(n);
        let f = &d.field;
        for l in d_labels(n).into_iter().filter(|l| l.sign == Some(Sign::Plus)) {
            let full = via_type_b(&l.shape, &d);
            let s = sigma_matrix(&l.shape, f);
            for g in &full {
                assert_eq!(g.mul(&s, f), s.mul(g, f), "{l}");
            }
            let plus = signed_basis(&l.shape, Sign::Plus, f);
            let minus = signed_basis(&l.shape, Sign::Minus, f);
            let k = plus.rows();
            let mut rows = plus.to_rows();
            rows.extend(minus.to_rows());
            let p = Mat::from_rows(rows);
            let pinv = p.inverse(f).unwrap();
            let all: Vec<usize> = (0..2 * k).collect();
            let (top, bottom): (Vec<usize>, Vec<usize>) = all.iter().partition(|&&i| i < k);
            let rp = build_rep_d(&l, &d).unwrap();
            let rm = build_rep_d(&DLabel { sign: Some(Sign::Minus), ..l.clone() }, &d).unwrap();
            for (i, g) in full.iter().enumerate() {
                let h = p.mul(g, f).mul(&pinv, f);
                assert!(h.submatrix(&top, &bottom).is_zero());
                assert!(h.submatrix(&bottom, &top).is_zero());
                assert_eq!(h.submatrix(&top, &top), rp.gens[i]);
                assert_eq!(h.submatrix(&bottom, &bottom), rm.gens[i]);
            }
        }
    }
}

#[test]
fn branch_examples() {
    let got = branch_d(&plain(&[2, 1], &[1]));
    let mut want = vec![plain(&[1, 1], &[1]), plain(&[2], &[1]), plain(&[2, 1], &[])];
    want.sort();
    assert_eq!(got, want);
    assert_eq!(got.iter().map(|l| l.dim()).sum::<u128>(), 8);
    assert_eq!(branch_clause(&plain(&[2, 1], &[1])), 1);

    let p = branch_d(&signed(&[2, 1], &[2, 1], Sign::Plus));
    let m = branch_d(&signed(&[2, 1], &[2, 1], Sign::Minus));
    assert_eq!(p, m);
    let mut want = vec![plain(&[2, 1], &[2]), plain(&[2, 1], &[1, 1])];
    want.sort();
    assert_eq!(p, want);

    let l = plain(&[2, 1], &[2]);
    assert_eq!(branch_clause(&l), 3);
    let b = branch_d(&l);
    assert!(b.contains(&signed(&[2], &[2], Sign::Plus)));
    assert!(b.contains(&signed(&[2], &[2], Sign::Minus)));
}

#[test]
fn branch_dimensions_sum() {
    for n in 2..=9 {
        for l in d_labels(n) {
            let s: u128 = branch_d(&l).iter().map(|m| m.dim()).sum();
            assert_eq!(s, l.dim(), "{l}");
            assert!(branch_d(&l).iter().all(|m| m.n() == n - 1));
        }
    }
}

fn walk(reps: &[&Rep], k: usize, depth: usize, acc: &[Mat], last: Option<(usize, i8)>, out: &mut Vec<Vec<Fel>>) {
    let f = &reps[0].field;
    out.push(acc.iter().map(|m| m.trace(f)).collect());
    if depth == 0 {
        return;
    }
    for g in 0..k {
        for e in [1i8, -1] {
            if last == Some((g, -e)) {
                continue;
            }
            let next: Vec<Mat> = reps
                .iter()
                .zip(acc)
                .map(|(r, m)| m.mul(if e == 1 { &r.gens[g] } else { &r.inverses[g] }, f))
                .collect();
            walk(reps, k, depth - 1, &next, Some((g, e)), out);
        }
    }
}

#[test]
fn branching_by_traces() {
    let d = split(5);
    let small = split(4);
    let f = &d.field;
    for l in d_labels(5) {
        let big = build_rep_d(&l, &d).unwrap();
        let parts: Vec<Rep> = branch_d(&l).iter().map(|m| build_rep_d(m, &small).unwrap()).collect();
        let mut reps = vec![&big];
        reps.extend(parts.iter());
        let start: Vec<Mat> = reps.iter().map(|r| Mat::identity(r.dim(), f)).collect();
        let mut traces = Vec::new();
        walk(&reps, 4, 3, &start, None, &mut traces);
        for t in traces {
            let sum = t[1..].iter().fold(f.zero(), |s, &x| f.add(s, x));
            assert_eq!(t[0], sum, "{l}");
        }
    }
}

#[test]
fn eta_examples() {
    let d = split(4);
    let f = &d.field;
    let s1 = ArtinWord::gen(1);
    let s1s2 = ArtinWord::new(vec![(1, 1), (2, 1)]);
    assert_eq!(eta_r(&s1, 1, &d), f.one());
    assert_eq!(eta_r(&s1, 2, &d), f.neg(f.one()));
    assert_eq!(eta_r(&s1s2, 3, &d), f.one());
    assert_eq!(eta_r(&s1s2, 2, &d), f.one());
}

fn word_strategy(n: usize) -> impl Strategy<Value = ArtinWord> {
    prop::collection::vec((0..n, prop::bool::ANY), 0..12)
        .prop_map(|v| ArtinWord::new(v.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 })).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eta_is_a_character(w in word_strategy(4), v in word_strategy(4), r in 1usize..6) {
        let d = split(4);
        let f = &d.field;
        prop_assert_eq!(eta_r(&w.concat(&v), r, &d), f.mul(eta_r(&w, r, &d), eta_r(&v, r, &d)));
        prop_assert_eq!(eta_r(&w, 1, &d), f.one());
    }

    #[test]
    fn row_module_acts_by_alpha_power(w in word_strategy(4)) {
        // On a 1-dimensional module every generator acts by α, so a word acts by α^ℓ.
        let d = split(4);
        let f = &d.field;
        let r = build_rep_d(&plain(&[4], &[]), &d).unwrap();
        let m = hecke::hoefsmit::eval_word(&r, &w).unwrap();
        prop_assert_eq!(m[(0, 0)], f.pow(d.alpha, w.length()));
    }
}
