use cgbounds::complen::{
    composition_length, composition_length_analytic, composition_length_oracle, Certainty, ORACLE_CAP,
};
use cgbounds::constructions::ConstructionSpec;
use cgbounds::gf::gl1_power;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

fn engine(spec: &str) -> u32 {
    let s: ConstructionSpec = spec.parse().unwrap();
    let g = s.build_perm().unwrap();
    let r = composition_length(&g).unwrap();
    assert_eq!(r.certainty, Certainty::Certified, "{}", spec);
    r.trace.audit().unwrap_or_else(|e| panic!("{}: {}", spec, e));
    let analytic = composition_length_analytic(&s).unwrap();
    assert_eq!(BigUint::from(r.length), analytic, "{}", spec);
    r.length
}

#[test]
fn t_family() {
    assert_eq!(engine("T(1)"), 4);
    assert_eq!(engine("T(2)"), 20);
    assert_eq!(engine("T(3)"), 84);
}

#[test]
fn p_family() {
    assert_eq!(engine("P(0)"), 4);
    assert_eq!(engine("P(1)"), 20);
}

#[test]
fn s5_product_action() {
    assert_eq!(engine("wrP(S(5),T(1))"), 12);
}

#[test]
fn semiprimitive_examples() {
    assert_eq!(engine("sp_ex(0)"), 5);
    assert_eq!(engine("sp_ex(1)"), 21);
}

#[test]
fn quasiprimitive_example() {
    assert_eq!(engine("qp_ex(1)"), 9);
}

#[test]
fn linear_shadows() {
    assert_eq!(engine("L(1)"), 12);
    for d in 1..=3 {
        let g = gl1_power(d, 4).unwrap().to_perm(1 << 20).unwrap();
        assert_eq!(composition_length(&g).unwrap().length, d as u32);
    }
}

#[test]
fn mixed_products_match_analytic() {
    for s in [
        "directX(T(1),T(2))",
        "wr(S(3),C(2))",
        "wr(GLperm(2,3),T(1))",
        "directX(A(5),D(4),C(6))",
        "wr(A(5),S(3))",
    ] {
        engine(s);
    }
}

#[test]
fn engine_agrees_with_oracle_on_small_groups() {
    for s in [
        "S(4)",
        "S(5)",
        "A(5)",
        "GLperm(2,3)",
        "directX(C(2),C(2),C(2))",
        "C(6)",
        "D(4)",
        "wr(S(3),C(2))",
        "A(6)",
        "GLperm(3,2)",
        "directX(A(5),A(5))",
    ] {
        let spec: ConstructionSpec = s.parse().unwrap();
        let g = spec.build_perm().unwrap();
        assert!(g.order().to_u64().unwrap() <= ORACLE_CAP);
        let r = composition_length(&g).unwrap();
        assert_eq!(r.length, composition_length_oracle(&g).unwrap(), "{}", s);
        r.trace
            .audit_with(&mut |h| {
                (h.order() <= BigUint::from(ORACLE_CAP)).then(|| composition_length_oracle(h).unwrap())
            })
            .unwrap();
    }
}
