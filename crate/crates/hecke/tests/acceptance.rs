//! Acceptance run: one pass/fail line per criterion.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke::hoefsmit::{build_rep_b, HeckeParams};
use hecke::images::{
    classify_field_case, classify_image, classify_image_d, derived_subgroup_order, find_params_b, find_params_d,
    canonical_rep_b, canonical_rep_d, class_members_b, predict_image_b, predict_image_d, Family, DEFAULT_CAP,
};
use hecke::suites::{run_suite, Setting, Suite, SuiteResult};
use hecke::tableaux::{
    double_partitions, klein_orbit, partition_order, partitions_revlex, square_tableaux_count, star_witnesses,
    standard_tableaux, DoublePartition, Partition,
};
use hecke::typed::{branch_clause, d_labels, DLabel, DParams};
use hecke::{make_field, Mat};

type Check = Result<String, String>;

fn hook_length(mu: &Partition) -> u128 {
    let parts = mu.parts();
    let cols = mu.transpose();
    let n = mu.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            den *= (row - j - 1 + cols.parts()[j] - i - 1 + 1) as u128;
        }
    }
    num /= den;
    num
}

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Dimension by the hook-length formula on each component.
fn dim_oracle(lam: &DoublePartition) -> u128 {
    binom(lam.n(), lam.left.size()) * hook_length(&lam.left) * hook_length(&lam.right)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn pool(n: usize, per_case: usize) -> Vec<(u8, HeckeParams)> {
    let mut out = Vec::new();
    for c in 1..=6u8 {
        for p in find_params_b(c, n, per_case, None).expect("search") {
            out.push((c, p));
        }
    }
    out
}

fn setting_b(params: &HeckeParams, n: usize) -> Setting {
    let params = params.with_rank(n).expect("rank");
    let case = classify_field_case(&params).expect("case");
    Setting::B {
        params,
        case,
        type_a: false,
    }
}

fn d_pool(n: usize, per_kind: usize) -> Vec<DParams> {
    let mut v = find_params_d(true, n, per_kind, None).expect("search");
    v.extend(find_params_d(false, n, per_kind, None).expect("search"));
    v
}

fn setting_d(params: &DParams, n: usize) -> Setting {
    Setting::D {
        params: DParams::new(params.field.clone(), params.alpha, n).expect("rank"),
    }
}

fn field_tag(s: &Setting) -> String {
    let f = s.field();
    match s {
        Setting::B { case, .. } => format!("B n={} case {} F_{}^{}", s.n(), case.case_id, f.p(), f.d()),
        Setting::D { params } => format!(
            "D n={} {} F_{}^{}",
            s.n(),
            if params.field_split() { "split" } else { "unitary" },
            f.p(),
            f.d()
        ),
    }
}

/// Run `suite` on every setting; collect failures.
fn suite_over(suite: Suite, settings: &[Setting]) -> Check {
    let mut cases = 0;
    let mut failures = Vec::new();
    for s in settings {
        let r: SuiteResult = run_suite(suite, s, 0).map_err(|e| format!("{}: {e}", field_tag(s)))?;
        cases += r.cases.len();
        for c in r.cases.iter().filter(|c| !c.passed) {
            failures.push(format!("{} {}: {}", field_tag(s), c.label, c.detail));
        }
    }
    if failures.is_empty() {
        Ok(format!("{suite}: {cases} cases over {} settings", settings.len()))
    } else {
        Err(failures.join("; "))
    }
}

fn all(checks: Vec<Check>) -> Check {
    let mut ok = Vec::new();
    for c in checks {
        ok.push(c?);
    }
    Ok(ok.join("; "))
}

fn criterion_1() -> Check {
    let mut notes = Vec::new();
    for n in 2..=6 {
        let mut total = 0u128;
        for lam in double_partitions(n) {
            let d = lam.dim();
            if d != dim_oracle(&lam) {
                return Err(format!("{lam}: dim {d} vs hook length {}", dim_oracle(&lam)));
            }
            if n <= 5 && standard_tableaux(&lam).len() as u128 != d {
                return Err(format!("{lam}: tableau count differs from dim"));
            }
            total += d * d;
        }
        let want = (1u128 << n) * factorial(n);
        if total != want {
            return Err(format!("type B n={n}: {total} != {want}"));
        }
        notes.push(format!("B{n}={total}"));
    }
    for n in 4..=6 {
        let total: u128 = d_labels(n).iter().map(|l| l.dim() * l.dim()).sum();
        let want = (1u128 << (n - 1)) * factorial(n);
        if total != want {
            return Err(format!("type D n={n}: {total} != {want}"));
        }
        notes.push(format!("D{n}={total}"));
    }
    Ok(notes.join(" "))
}

fn criterion_2() -> Check {
    let bp = pool(5, 3);
    let mut per_case: HashMap<u8, usize> = HashMap::new();
    for (c, _) in &bp {
        *per_case.entry(*c).or_default() += 1;
    }
    if (1..=6).any(|c| per_case.get(&c).copied().unwrap_or(0) < 3) {
        return Err(format!("fewer than 3 parameter sets in some case: {per_case:?}"));
    }
    let mut settings: Vec<Setting> = Vec::new();
    for (_, p) in &bp {
        for n in 1..=5 {
            settings.push(setting_b(p, n));
        }
    }
    let dp = d_pool(5, 3);
    if dp.len() < 6 {
        return Err("fewer than 3 type-D parameter sets per kind".into());
    }
    for p in &dp {
        for n in 4..=5 {
            settings.push(setting_d(p, n));
        }
    }
    suite_over(Suite::Relations, &settings)
}

fn criterion_3() -> Check {
    let lam = DoublePartition::of(&[1], &[1]);
    let mut checked = 0;
    let explicit = [(29, 1, 7, 2i64), (13, 1, 12, 5), (31, 1, 15, 3), (5, 2, 12, 2)];
    for (p, d, order, b) in explicit {
        let f = make_field(p, d).map_err(|e| e.to_string())?;
        let alpha = f.find_element_of_order(order).map_err(|e| e.to_string())?;
        let params = HeckeParams::new(f.clone(), alpha, f.from_int(b), 2).map_err(|e| e.to_string())?;
        let f = &params.field;
        let (a, b) = (params.alpha, params.beta);
        let one = f.one();
        let c = f.inv(f.add(b, one));
        let t = Mat::diag(&[b, f.neg(one)]);
        let s = Mat::from_rows(vec![
            vec![f.mul(c, f.sub(a, one)), f.mul(c, f.add(a, b))],
            vec![f.mul(c, f.add(f.mul(a, b), one)), f.mul(c, f.sub(f.mul(a, b), b))],
        ]);
        let rep = build_rep_b(&lam, &params).map_err(|e| e.to_string())?;
        if rep.gens[0] != t || rep.gens[1] != s {
            return Err(format!("mismatch over F_{}^{}", f.p(), f.d()));
        }
        checked += 1;
    }
    Ok(format!("T and S1 match entrywise for {checked} parameter sets"))
}

fn criterion_4() -> Check {
    let mut settings = Vec::new();
    for (_, p) in pool(5, 1) {
        for n in 1..=5 {
            settings.push(setting_b(&p, n));
        }
    }
    for p in d_pool(6, 1) {
        for n in 4..=6 {
            settings.push(setting_d(&p, n));
        }
    }
    suite_over(Suite::Forms, &settings)
}

fn criterion_5() -> Check {
    let mut settings = Vec::new();
    let mut cases = BTreeSet::new();
    for c in 1..=6u8 {
        // Every case with an automorphism of order 2: the first parameter set with even degree.
        let found = find_params_b(c, 4, 8, None).map_err(|e| e.to_string())?;
        if let Some(p) = found.into_iter().find(|p| p.field.d() % 2 == 0) {
            cases.insert(c);
            for n in 1..=4 {
                settings.push(setting_b(&p, n));
            }
        }
    }
    if cases.len() != 6 {
        return Err(format!("no even-degree parameters for some case: {cases:?}"));
    }
    for p in find_params_d(false, 4, 1, None).map_err(|e| e.to_string())? {
        settings.push(setting_d(&p, 4));
    }
    suite_over(Suite::Unitary, &settings)
}

fn criterion_6() -> Check {
    let mut inter = Vec::new();
    for (_, p) in pool(5, 1) {
        for n in 1..=5 {
            inter.push(setting_b(&p, n));
        }
    }
    for p in d_pool(5, 1) {
        for n in 4..=5 {
            inter.push(setting_d(&p, n));
        }
    }
    let mut ext = Vec::new();
    for (_, p) in pool(6, 1) {
        for n in 2..=6 {
            ext.push(setting_b(&p, n));
        }
    }
    all(vec![suite_over(Suite::Intertwiners, &inter), suite_over(Suite::Exterior, &ext)])
}

fn criterion_7() -> Check {
    let mut settings = Vec::new();
    for (_, p) in pool(4, 1) {
        for n in 3..=4 {
            settings.push(setting_b(&p, n));
        }
    }
    for p in d_pool(4, 1) {
        settings.push(setting_d(&p, 4));
    }
    suite_over(Suite::Factorizations, &settings)
}

fn criterion_8() -> Check {
    let mut settings = Vec::new();
    for (_, p) in pool(5, 1) {
        for n in 2..=5 {
            settings.push(setting_b(&p, n));
        }
    }
    for p in d_pool(6, 1) {
        for n in 5..=6 {
            settings.push(setting_d(&p, n));
        }
    }
    let clauses: BTreeSet<u8> = [5, 6]
        .iter()
        .flat_map(|&n| d_labels(n))
        .map(|l: DLabel| branch_clause(&l))
        .collect();
    let at5: BTreeSet<u8> = d_labels(5).iter().map(branch_clause).collect();
    if clauses != (1..=5).collect() {
        return Err(format!("clauses exercised: {clauses:?}"));
    }
    let r = suite_over(Suite::Branching, &settings)?;
    Ok(format!("{r}; clauses at n=5 {at5:?}, over n=5,6 {clauses:?}"))
}

fn criterion_9() -> Check {
    let lam = DoublePartition::of(&[1], &[1]);
    let mut notes = Vec::new();
    let sets: Vec<HeckeParams> = [1u8, 2]
        .iter()
        .flat_map(|&c| find_params_b(c, 2, 2, None).expect("search"))
        .filter(|p| p.field.q() <= 10_000)
        .collect();
    if sets.len() < 3 {
        return Err("fewer than 3 admissible parameter sets".into());
    }
    for params in sets {
        let start = Instant::now();
        let rep = build_rep_b(&lam, &params).map_err(|e| e.to_string())?;
        let f = &params.field;
        let got = derived_subgroup_order(&rep.gens, f, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let q = f.q();
        let want = q * (q * q - 1);
        if got != want {
            return Err(format!("q={q}: enumerated {got}, expected {want}"));
        }
        if start.elapsed() > Duration::from_secs(60) {
            return Err(format!("q={q}: enumeration took {:?}", start.elapsed()));
        }
        notes.push(format!("q={q}:{got}"));
    }
    Ok(notes.join(" "))
}

fn criterion_10() -> Check {
    let mut settings = Vec::new();
    for (_, p) in pool(5, 1) {
        for n in 3..=5 {
            settings.push(setting_b(&p, n));
        }
    }
    for p in d_pool(5, 1) {
        for n in 4..=5 {
            settings.push(setting_d(&p, n));
        }
    }
    let r = suite_over(Suite::Images, &settings)?;

    let (_, p1) = pool(5, 1).into_iter().next().expect("case 1");
    let Setting::B { params, case, .. } = setting_b(&p1, 5) else {
        unreachable!()
    };
    let named = DoublePartition::of(&[1, 1, 1], &[1, 1]);
    let lam = canonical_rep_b(&named, &case);
    if !class_members_b(&lam, &case).contains(&named) {
        return Err(format!("{named} missing from the class of {lam}"));
    }
    let rep = build_rep_b(&lam, &params).map_err(|e| e.to_string())?;
    let g = predict_image_b(&lam, &case).map_err(|e| e.to_string())?;
    let rb = classify_image(&rep, &case).map_err(|e| e.to_string())?;
    if g.family != Family::SL || g.degree != 10 || g.field_size != params.field.q() || !rb.consistent() {
        return Err(format!("{lam}: predicted {g}, consistent {}", rb.consistent()));
    }

    let dp = find_params_d(true, 5, 1, None).map_err(|e| e.to_string())?.remove(0);
    let dl = canonical_rep_d(&DLabel::unsigned(DoublePartition::of(&[2, 2], &[1])));
    let gd = predict_image_d(&dl, &dp).map_err(|e| e.to_string())?;
    let rd = classify_image_d(&hecke::typed::build_rep_d(&dl, &dp).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    if gd.family != Family::SP || gd.degree != 10 || gd.field_size != dp.field.q() || !rd.consistent() {
        return Err(format!("{}: predicted {gd}, consistent {}", dl, rd.consistent()));
    }
    Ok(format!("{r}; {named} ~ {lam} -> {g}; D ([2,2],[1]) ~ {dl} -> {gd}"))
}

fn criterion_11() -> Check {
    for r in 1..=8 {
        let order = partition_order(r);
        let all = partitions_revlex(r);
        let as_set: BTreeSet<String> = order.iter().map(|p| p.to_string()).collect();
        if order.len() != all.len() || as_set.len() != all.len() {
            return Err(format!("r={r}: order is not a permutation of the partitions"));
        }
        let pos: HashMap<&Partition, usize> = order.iter().enumerate().map(|(i, p)| (p, i)).collect();
        for a in &order {
            for b in &order {
                if *a == b.transpose() || a == b {
                    continue;
                }
                let (ta, tb) = (a.transpose(), b.transpose());
                if pos[a] < pos[b] && pos[&ta] >= pos[&tb] {
                    return Err(format!("r={r}: {a} < {b} but {ta} >= {tb}"));
                }
            }
        }
    }
    let mut orbits = 0;
    for n in 1..=8 {
        for lam in double_partitions(n) {
            let orbit = klein_orbit(&lam);
            if orbit.len() == 4 {
                orbits += 1;
                let w = star_witnesses(&lam);
                if w.len() != 1 {
                    return Err(format!("{lam}: {} witnesses", w.len()));
                }
            }
        }
    }
    Ok(format!("orders r<=8 monotone; {orbits} four-element orbits with a unique witness"))
}

/// Standard tableaux of `shape` counted by removing corners, memoized.
fn count_by_corners(shape: Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
    if shape.iter().all(|&x| x == 0) {
        return 1;
    }
    if let Some(&v) = memo.get(&shape) {
        return v;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let below = shape.get(i + 1).copied().unwrap_or(0);
        if shape[i] > below {
            let mut s = shape.clone();
            s[i] -= 1;
            total += count_by_corners(s, memo);
        }
    }
    memo.insert(shape, total);
    total
}

fn criterion_12() -> Check {
    let mut memo = HashMap::new();
    let a9 = square_tableaux_count(3);
    let a16 = square_tableaux_count(4);
    let o9 = count_by_corners(vec![3; 3], &mut memo);
    let o16 = count_by_corners(vec![4; 4], &mut memo);
    let h9 = hook_length(&Partition::of(&[3, 3, 3]));
    let h16 = hook_length(&Partition::of(&[4, 4, 4, 4]));
    let e9 = standard_tableaux(&DoublePartition::of(&[3, 3, 3], &[])).len() as u128;
    if (a9, a16, o9, o16, h9, h16, e9) != (42, 24024, 42, 24024, 42, 24024, 42) {
        return Err(format!("a9={a9} a16={a16} corners {o9},{o16} hooks {h9},{h16} enumerated {e9}"));
    }
    Ok("a9 = 42, a16 = 24024".into())
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, u64, fn() -> Check)> = vec![
        (1, "dimension identities", 5, criterion_1),
        (2, "defining relations", 120, criterion_2),
        (3, "explicit 2x2 matrices", 1, criterion_3),
        (4, "form laws", 300, criterion_4),
        (5, "unitarity", 120, criterion_5),
        (6, "intertwiners and exterior powers", 300, criterion_6),
        (7, "factorization truth table", 600, criterion_7),
        (8, "branching", 600, criterion_8),
        (9, "exact image at n = 2", 180, criterion_9),
        (10, "image consistency", 900, criterion_10),
        (11, "element orders and partition order", 60, criterion_11),
        (12, "square tableaux counts", 60, criterion_12),
    ];
    let mut failed = 0;
    for (k, name, budget, f) in criteria {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = match res {
            Ok(d) if took > Duration::from_secs(budget) => Err(format!("{d}; took {took:.1?}, budget {budget}s")),
            r => r,
        };
        match res {
            Ok(d) => println!("[PASS] criterion {k}: {name} ({took:.2?}) {d}"),
            Err(e) => {
                failed += 1;
                println!("[FAIL] criterion {k}: {name} ({took:.2?}) {e}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
