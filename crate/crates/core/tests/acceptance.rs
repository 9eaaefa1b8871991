//! Acceptance run: one PASS/FAIL line per criterion, with timings.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use cgbounds::actions::{block_action, find_block_system, restrict_to_orbit};
use cgbounds::bounds::{
    builtin_corpus, enumerate_transitive_small, load_corpus_dir, scan_corpus, verify_linear, verify_spec, BoundReport,
    GroupFile, ScanRow, Theorem, Verdict, TRANSITIVE_COUNTS,
};
use cgbounds::complen::{
    composition_length, composition_length_analytic, composition_length_oracle, degree_analytic, Certainty,
    EngineOptions, ORACLE_CAP,
};
use cgbounds::constructions::{
    direct_product, quasiprimitive_example, semiprimitive_example, wreath_imprimitive, ConstructionSpec,
};
use cgbounds::gf::{build_l, gl1_power, Irreducibility};
use cgbounds::PermGroup;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn spec(s: &str) -> ConstructionSpec {
    s.parse().expect("valid spec")
}

fn engine(s: &str) -> Result<u32, String> {
    let g = spec(s).build_perm().map_err(|e| format!("{}: {}", s, e))?;
    let r = composition_length(&g).map_err(|e| format!("{}: {}", s, e))?;
    ensure(
        r.certainty == Certainty::Certified,
        format!("{} is only {}", s, r.certainty),
    )?;
    r.trace.audit().map_err(|e| format!("{}: {}", s, e))?;
    Ok(r.length)
}

fn report(s: &str, t: Theorem) -> Result<BoundReport, String> {
    verify_spec(&spec(s), t, &EngineOptions::default()).map_err(|e| format!("{} under {}: {}", s, t, e))
}

fn expect_equal(s: &str, t: Theorem) -> Result<(), String> {
    let r = report(s, t)?;
    ensure(
        r.verdict == Verdict::Equal && r.fingerprint == Some(true),
        format!("{} under {}: {} with fingerprint {:?}", s, t, r.verdict, r.fingerprint),
    )
}

fn expect_strict(s: &str, t: Theorem) -> Result<(), String> {
    let r = report(s, t)?;
    ensure(
        r.verdict == Verdict::Strict,
        format!("{} under {}: {}", s, t, r.verdict),
    )
}

fn criterion_1() -> Outcome {
    for (k, want) in [(1, 4), (2, 20), (3, 84)] {
        let s = format!("T({})", k);
        let c = engine(&s)?;
        ensure(c == want, format!("c({}) = {}, want {}", s, c, want))?;
        ensure(
            BigUint::from(c) == composition_length_analytic(&spec(&s)).unwrap(),
            "closed form",
        )?;
        expect_equal(&s, Theorem::T12)?;
    }
    Ok("c(T_k) = 4, 20, 84 certified; equal under T12 with fingerprint".into())
}

fn criterion_2() -> Outcome {
    ensure(engine("P(1)")? == 20, "c(P_1) != 20")?;
    ensure(engine("P(0)")? == 4, "c(P_0) != 4")?;
    expect_equal("P(1)", Theorem::T13)?;
    expect_equal("P(0)", Theorem::T13)?;
    Ok("c(P_1) = 20 on 256 points, c(P_0) = 4; both equal under T13".into())
}

fn criterion_3() -> Outcome {
    let s = "wrP(S(5),T(1))";
    ensure(engine(s)? == 12, "c != 12")?;
    let r = report(s, Theorem::T15)?;
    ensure(r.n == BigUint::from(625u32), "degree")?;
    let affine = r.classification.as_ref().map(|c| c.affine.to_string());
    ensure(
        r.verdict == Verdict::Equal && r.fingerprint == Some(true),
        format!("T15: {} (affine {:?})", r.verdict, affine),
    )?;
    expect_strict(s, Theorem::T13)?;
    Ok("c = 12 on 625 points; equal under T15 (exact log5), strict under T13".into())
}

fn criterion_4() -> Outcome {
    for (k, degree, c) in [(0u32, 8usize, 5u32), (1, 512, 21)] {
        let ex = semiprimitive_example(k).map_err(|e| e.to_string())?;
        ensure(
            ex.group.degree() == degree,
            format!("sp_ex({}) degree {}", k, ex.group.degree()),
        )?;
        let s = format!("sp_ex({})", k);
        ensure(engine(&s)? == c, format!("c({}) != {}", s, c))?;
        expect_equal(&s, Theorem::T16b)?;
        if k == 1 {
            let w = &ex.central_image;
            ensure(
                w.order() == BigUint::from(2u32) && !w.is_transitive() && w.is_normal_subgroup_of(&ex.group),
                "Z/N is not an intransitive normal subgroup of order 2",
            )?;
        }
    }
    Ok("sp_ex(0): 8 points, c = 5; sp_ex(1): 512 points, c = 21; both equal under T16b; Z/N of order 2 intransitive normal".into())
}

fn criterion_5() -> Outcome {
    let ex = quasiprimitive_example(1).map_err(|e| e.to_string())?;
    ensure(ex.group.degree() == 16_875, "degree")?;
    ensure(ex.group.order() == BigUint::from(622_080_000u64), "order")?;
    ensure(
        ex.socle.order() == BigUint::from(60u32).pow(4) && ex.socle.is_transitive(),
        "socle A5^4 is not transitive",
    )?;
    ensure(ex.socle.is_normal_subgroup_of(&ex.group), "socle not normal")?;
    ensure(engine("qp_ex(1)")? == 9, "c != 9")?;
    let r = report("qp_ex(1)", Theorem::T16a)?;
    ensure(r.verdict == Verdict::Strict, format!("T16a: {}", r.verdict))?;
    Ok(format!(
        "16875 points, order 622080000, transitive socle, c = 9 < {:.2} (strict under T16a)",
        r.bound.to_f64()
    ))
}

fn criterion_6() -> Outcome {
    let opts = EngineOptions::default();
    let l1 = build_l(1).map_err(|e| e.to_string())?;
    ensure(
        l1.is_irreducible(opts.seed).map_err(|e| e.to_string())? == Irreducibility::Irreducible,
        "L_1 reducible",
    )?;
    let r = verify_linear("L(1)", &l1, &opts, None).map_err(|e| e.to_string())?;
    ensure(r.r == 1 && r.c == 12, format!("L_1: r = {}, c = {}", r.r, r.c))?;
    ensure(
        r.verdict == Verdict::Equal && r.fingerprint == Some(true),
        format!("L_1 under T14: {}", r.verdict),
    )?;
    for d in 1..=3 {
        let h = gl1_power(d, 4).map_err(|e| e.to_string())?;
        let r = verify_linear(&format!("GL(1,4)^{}", d), &h, &opts, None).map_err(|e| e.to_string())?;
        ensure(
            r.r == d && r.c == d as u32,
            format!("GL(1,4)^{}: r = {}, c = {}", d, r.r, r.c),
        )?;
        ensure(
            r.verdict == Verdict::Equal && r.fingerprint == Some(true),
            format!("GL(1,4)^{} under T14: {}", d, r.verdict),
        )?;
    }
    let l2 = composition_length_analytic(&spec("L(2)")).unwrap();
    let law = degree_analytic(&spec("T(2)")) * composition_length_analytic(&spec("GLperm(2,2)")).unwrap()
        + composition_length_analytic(&spec("T(2)")).unwrap();
    ensure(
        l2 == BigUint::from(52u32) && law == l2,
        format!("c(L_2) = {}, law gives {}", l2, law),
    )?;
    let r2 = report("L(2)", Theorem::T14)?;
    ensure(r2.verdict == Verdict::Equal, format!("L_2 under T14: {}", r2.verdict))?;
    Ok(
        "L_1 irreducible, c = 12 equal under T14; GL(1,4)^d gives r = c = d for d = 1..3; c(L_2) = 52 = 16*2 + 20"
            .into(),
    )
}

fn criterion_7() -> Outcome {
    let mut groups: Vec<(String, PermGroup)> = builtin_corpus()
        .into_iter()
        .map(|e| match e.group {
            Ok(GroupFile::Perm(g)) => (e.id, g),
            _ => unreachable!("built-in corpus holds permutation groups"),
        })
        .collect();
    for s in [
        "S(4)",
        "S(5)",
        "A(5)",
        "GLperm(2,3)",
        "directX(C(2),C(2),C(2))",
        "C(6)",
        "D(4)",
    ] {
        groups.push((s.to_string(), spec(s).build_perm().unwrap()));
    }
    for (id, g) in &groups {
        let r = composition_length(g).map_err(|e| format!("{}: {}", id, e))?;
        let oracle = composition_length_oracle(g).map_err(|e| format!("{}: {}", id, e))?;
        ensure(
            r.length == oracle,
            format!("{}: engine {} vs oracle {}", id, r.length, oracle),
        )?;
        r.trace
            .audit_with(&mut |h| {
                (h.order() <= BigUint::from(ORACLE_CAP)).then(|| composition_length_oracle(h).unwrap())
            })
            .map_err(|e| format!("{}: {}", id, e))?;
    }
    Ok(format!(
        "{} groups: engine = oracle, every trace node audited",
        groups.len()
    ))
}

fn criterion_8() -> Outcome {
    for (n, &expected) in TRANSITIVE_COUNTS.iter().enumerate().skip(2) {
        let count = enumerate_transitive_small(n).map_err(|e| e.to_string())?.len();
        ensure(count == expected, format!("degree {}: {} groups", n, count))?;
    }
    let corpus = builtin_corpus();
    let scan = scan_corpus(&corpus, Theorem::T12, None, &EngineOptions::default()).map_err(|e| e.to_string())?;
    ensure(
        scan.summary.violations == 0 && scan.summary.failures == 0,
        "violations or failures",
    )?;
    let equal: Vec<&BoundReport> = scan
        .rows
        .iter()
        .filter_map(|r| match r {
            ScanRow::Report(r) if r.verdict == Verdict::Equal => Some(r.as_ref()),
            _ => None,
        })
        .collect();
    ensure(
        equal.len() == 1 && equal[0].n == BigUint::from(4u32) && equal[0].order == BigUint::from(24u32),
        format!("equality cases: {:?}", scan.summary.equalities),
    )?;
    let external = match std::env::var_os("CGBOUNDS_PRIMITIVE_DIR").map(PathBuf::from) {
        None => "degree <= 24 primitive export: skipped (CGBOUNDS_PRIMITIVE_DIR unset)".to_string(),
        Some(dir) => {
            let entries = load_corpus_dir(&dir).map_err(|e| e.to_string())?;
            let scan =
                scan_corpus(&entries, Theorem::T13, None, &EngineOptions::default()).map_err(|e| e.to_string())?;
            ensure(scan.summary.violations == 0, "violation in the primitive export")?;
            let equal: Vec<&BoundReport> = scan
                .rows
                .iter()
                .filter_map(|r| match r {
                    ScanRow::Report(r) if r.verdict == Verdict::Equal => Some(r.as_ref()),
                    _ => None,
                })
                .collect();
            ensure(
                equal
                    .iter()
                    .all(|r| r.n == BigUint::from(4u32) && r.order == BigUint::from(24u32)),
                format!("unexpected equality cases: {:?}", scan.summary.equalities),
            )?;
            format!(
                "primitive export: {} groups, {} parse failures, equality only at S4",
                scan.summary.groups, scan.summary.failures
            )
        }
    };
    Ok(format!(
        "counts 1,2,5,5,16; {} groups under T12, equality only at (4, S4); {}",
        corpus.len(),
        external
    ))
}

fn random_small(rng: &mut ChaCha8Rng) -> &'static str {
    [
        "S(2)", "S(3)", "S(4)", "A(4)", "C(2)", "C(3)", "C(4)", "D(4)", "A(5)", "C(6)",
    ]
    .choose(rng)
    .copied()
    .unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let c = |g: &PermGroup| composition_length(g).map(|r| r.length).map_err(|e| e.to_string());
    for i in 0..20 {
        let (a, b) = (random_small(&mut rng), random_small(&mut rng));
        let (ga, gb) = (spec(a).build_perm().unwrap(), spec(b).build_perm().unwrap());
        let (product, expected, what) = if rng.gen_bool(0.5) {
            let gc = spec(random_small(&mut rng)).build_perm().unwrap();
            let p = direct_product(&[ga.clone(), gb.clone(), gc.clone()]).map_err(|e| e.to_string())?;
            (p, c(&ga)? + c(&gb)? + c(&gc)?, "direct")
        } else {
            let p = wreath_imprimitive(&ga, &gb).map_err(|e| e.to_string())?;
            (p, gb.degree() as u32 * c(&ga)? + c(&gb)?, "wreath")
        };
        let got = c(&product)?;
        ensure(
            got == expected,
            format!("instance {} ({} of {}, {}): {} vs {}", i, what, a, b, got, expected),
        )?;
    }
    // log2 envelope, orbit-stabilizer and split laws on every constructed group.
    let specs = [
        "T(1)",
        "T(2)",
        "T(3)",
        "P(0)",
        "P(1)",
        "wrP(S(5),T(1))",
        "sp_ex(0)",
        "sp_ex(1)",
        "L(1)",
        "GLperm(2,3)",
        "C(8)",
        "D(4)",
        "directX(C(2),C(2),C(2))",
        "wr(C(2),C(2))",
        "wr(C(2),wr(C(2),C(2)))",
        "A(5)",
        "S(6)",
    ];
    let mut two_groups = 0;
    for s in specs {
        let g = spec(s).build_perm().unwrap();
        let order = g.order();
        let len = c(&g)?;
        let pow = BigUint::from(2u32).pow(len);
        ensure(pow <= order, format!("{}: c exceeds log2 |G|", s))?;
        let two_group = order.count_ones() == 1;
        ensure(
            (pow == order) == two_group,
            format!("{}: envelope equality off a 2-group", s),
        )?;
        two_groups += two_group as usize;
        let stab = g.point_stabilizer(0).map_err(|e| e.to_string())?;
        ensure(
            stab.order() * g.orbit(0).len() == order,
            format!("{}: orbit-stabilizer", s),
        )?;
        let orbit = g.orbit(0);
        let split = restrict_to_orbit(&g, &orbit).map_err(|e| e.to_string())?;
        ensure(
            split.image.order() * split.kernel.order() == order,
            format!("{}: orbit split law", s),
        )?;
        if g.is_transitive() {
            if let Some(blocks) = find_block_system(&g).map_err(|e| e.to_string())? {
                let split = block_action(&g, &blocks).map_err(|e| e.to_string())?;
                ensure(
                    split.image.order() * split.kernel.order() == order,
                    format!("{}: block split law", s),
                )?;
            }
        }
    }
    Ok(format!(
        "20 random products obey the direct and wreath laws; envelope tight exactly on {} 2-groups; split laws on {} groups",
        two_groups,
        specs.len()
    ))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("T_k family under T12", Duration::from_secs(5), criterion_1),
        ("P_k family under T13", Duration::from_secs(10), criterion_2),
        ("S5 wr T_1 under T15", Duration::from_secs(20), criterion_3),
        ("semiprimitive example", Duration::from_secs(30), criterion_4),
        ("quasiprimitive example", Duration::from_secs(60), criterion_5),
        ("linear groups under T14", Duration::from_secs(30), criterion_6),
        ("engine against oracle", Duration::from_secs(60), criterion_7),
        ("small transitive corpus", Duration::from_secs(120), criterion_8),
        ("invariant suites", Duration::from_secs(60), criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > *limit;
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{} (over the {:?} budget)", d, limit)),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{:.2}s] {}: {}",
            i + 1,
            status,
            took.as_secs_f64(),
            name,
            detail
        );
    }
    if failed > 0 {
        eprintln!("{} of {} criteria failed", failed, criteria.len());
        std::process::exit(1);
    }
}
