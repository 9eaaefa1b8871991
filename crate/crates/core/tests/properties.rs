use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, RoundingMode};
use cgbounds::actions::{block_action, find_block_system, is_primitive, restrict_to_orbit};
use cgbounds::bounds::{enumerate_transitive_small, parse_perm_group, ratio, write_perm_group, BoundExpr};
use cgbounds::complen::{composition_length, composition_length_oracle};
use cgbounds::constructions::{direct_product, wreath_imprimitive, ConstructionSpec};
use cgbounds::{PermGroup, Permutation};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

const PREC: usize = 200;
const RM: RoundingMode = RoundingMode::ToEven;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group_strategy(max_degree: usize) -> impl Strategy<Value = PermGroup> {
    (2..=max_degree).prop_flat_map(|n| {
        prop::collection::vec(perm_strategy(n), 1..=3).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

fn small_spec() -> impl Strategy<Value = ConstructionSpec> {
    prop::sample::select(vec![
        "S(2)", "S(3)", "S(4)", "A(4)", "C(2)", "C(3)", "C(5)", "D(4)", "A(5)", "D(5)",
    ])
    .prop_map(|s| s.parse().unwrap())
}

fn big(x: i64) -> BigFloat {
    BigFloat::from_i64(x, PREC)
}

/// `a + b log_base(m) - t` at 200 bits.
fn high_precision_diff(a: (i64, i64), b: (i64, i64), base: u64, m: u64, t: i64, cc: &mut Consts) -> BigFloat {
    let frac = |(n, d): (i64, i64)| big(n).div(&big(d), PREC, RM);
    let log = BigFloat::from_u64(m, PREC).log(&BigFloat::from_u64(base, PREC), PREC, RM, cc);
    frac(a)
        .add(&frac(b).mul(&log, PREC, RM), PREC, RM)
        .sub(&big(t), PREC, RM)
}

fn brute_force_primitive(g: &PermGroup) -> bool {
    let n = g.degree();
    if !g.is_transitive() {
        return false;
    }
    // A nontrivial block through 0 is a set whose images under the group
    // are pairwise equal or disjoint.
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if mask & 1 == 0 || size < 2 || size == n || !n.is_multiple_of(size) {
            continue;
        }
        let mut images = vec![mask];
        let mut i = 0;
        let mut ok = true;
        while i < images.len() && ok {
            for s in g.generators() {
                let img = (0..n)
                    .filter(|&x| images[i] >> x & 1 == 1)
                    .fold(0u32, |acc, x| acc | 1 << s.apply(x));
                if !images.contains(&img) {
                    ok &= images.iter().all(|&b| b & img == 0);
                    images.push(img);
                }
            }
            i += 1;
        }
        if ok {
            return false;
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn exact_comparison_matches_200_bit_floats(
        an in -60i64..60, ad in 1i64..12,
        bn in -40i64..40, bd in 1i64..12,
        base in 2u64..12, m in 1u64..1_000_000,
        offset in -3i64..3,
    ) {
        let e = BoundExpr::log(ratio(an, ad), ratio(bn, bd), base, m).unwrap();
        let t = e.to_f64().round() as i64 + offset;
        let exact = e.cmp_rational(&BigRational::from_integer(t.into())).unwrap();
        let mut cc = Consts::new().unwrap();
        let diff = high_precision_diff((an, ad), (bn, bd), base, m, t, &mut cc);
        let tiny = diff.abs().cmp(&BigFloat::from_f64(1e-40, PREC)) == Some(-1);
        if exact == Ordering::Equal {
            prop_assert!(tiny, "exact equality but float difference {:?}", diff);
        } else if !tiny {
            let float = if diff.is_negative() { Ordering::Less } else { Ordering::Greater };
            prop_assert_eq!(exact, float);
        }
    }
}

proptest! {
    #[test]
    fn powers_of_the_base_are_exact(an in -30i64..30, ad in 1i64..9, bn in -20i64..20, bd in 1i64..9, base in 2u64..9, k in 0u32..12) {
        let m = BigUint::from(base).pow(k);
        let e = BoundExpr::log(ratio(an, ad), ratio(bn, bd), base, m).unwrap();
        let value = ratio(an, ad) + ratio(bn, bd) * BigRational::from_integer(k.into());
        prop_assert_eq!(e.cmp_rational(&value).unwrap(), Ordering::Equal);
        prop_assert_eq!(e.as_rational(), Some(value));
    }

    #[test]
    fn permutation_laws(p in perm_strategy(9), q in perm_strategy(9), r in perm_strategy(9)) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert!(p.mul(&p.inverse()).is_identity());
        prop_assert_eq!(p.pow(p.order()), Permutation::identity(9));
        prop_assert_eq!(p.conjugate_by(&q).order(), p.order());
        for x in 0..9 {
            prop_assert_eq!(p.mul(&q).apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn orbit_stabilizer_and_split_laws(g in group_strategy(9)) {
        let order = g.order();
        for orbit in g.orbits() {
            let stab = g.point_stabilizer(orbit[0]).unwrap();
            prop_assert_eq!(stab.order() * orbit.len(), order.clone());
            let split = restrict_to_orbit(&g, &orbit).unwrap();
            prop_assert_eq!(split.image.order() * split.kernel.order(), order.clone());
            prop_assert!(split.kernel.is_normal_subgroup_of(&g));
        }
        for gen in g.generators() {
            prop_assert!(g.contains(gen).unwrap());
        }
        if g.is_transitive() {
            if let Some(blocks) = find_block_system(&g).unwrap() {
                let split = block_action(&g, &blocks).unwrap();
                prop_assert_eq!(split.image.order() * split.kernel.order(), order);
            }
        }
    }

    #[test]
    fn engine_matches_oracle_and_envelope(g in group_strategy(7)) {
        let r = composition_length(&g).unwrap();
        r.trace.audit().unwrap();
        if let Ok(oracle) = composition_length_oracle(&g) {
            prop_assert_eq!(r.length, oracle);
        }
        let pow = BigUint::from(2u32).pow(r.length);
        let order = g.order();
        prop_assert!(pow <= order);
        prop_assert_eq!(pow == order, order.count_ones() == 1);
    }

    #[test]
    fn group_files_round_trip(g in group_strategy(12)) {
        let back = parse_perm_group(&write_perm_group(&g)).unwrap();
        prop_assert_eq!(back.generators(), g.generators());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn direct_and_wreath_laws(a in small_spec(), b in small_spec(), c in small_spec()) {
        let (ga, gb, gc) = (a.build_perm().unwrap(), b.build_perm().unwrap(), c.build_perm().unwrap());
        let len = |g: &PermGroup| composition_length(g).unwrap().length;
        let direct = direct_product(&[ga.clone(), gb.clone(), gc.clone()]).unwrap();
        prop_assert_eq!(len(&direct), len(&ga) + len(&gb) + len(&gc));
        let wreath = wreath_imprimitive(&ga, &gb).unwrap();
        prop_assert_eq!(len(&wreath), gb.degree() as u32 * len(&ga) + len(&gb));
        prop_assert_eq!(wreath.order(), ga.order().pow(gb.degree() as u32) * gb.order());
    }
}

#[test]
fn primitivity_agrees_with_block_search() {
    let mut groups: Vec<PermGroup> = (1..=6).flat_map(|n| enumerate_transitive_small(n).unwrap()).collect();
    for s in [
        "C(7)",
        "D(7)",
        "A(7)",
        "GLperm(3,2)",
        "C(8)",
        "D(8)",
        "wr(S(2),S(4))",
        "wr(S(4),S(2))",
        "S(8)",
        "GLperm(1,9)",
    ] {
        groups.push(s.parse::<ConstructionSpec>().unwrap().build_perm().unwrap());
    }
    for g in &groups {
        assert_eq!(
            is_primitive(g),
            brute_force_primitive(g),
            "degree {} order {}",
            g.degree(),
            g.order()
        );
    }
}
