use cgbounds::constructions::{
    quasiprimitive_example, semiprimitive_example, symmetric, t_k, t_order, wreath_imprimitive, wreath_product_action,
};
use cgbounds::gf::{build_l, gl1_power, Irreducibility, MatGroup};
use num_bigint::BigUint;

#[test]
fn semiprimitive_k1() {
    let ex = semiprimitive_example(1).unwrap();
    assert_eq!(ex.group.degree(), 512);
    assert_eq!(ex.kernel_order, BigUint::from(8u32));
    assert_eq!(ex.group.order(), BigUint::from(15_925_248u64));
    assert_eq!(ex.central_image.order(), BigUint::from(2u32));
    assert!(!ex.central_image.is_transitive());
    assert!(ex.central_image.is_normal_subgroup_of(&ex.group));
}

#[test]
fn quasiprimitive_k1() {
    let ex = quasiprimitive_example(1).unwrap();
    assert_eq!(ex.group.degree(), 16_875);
    assert_eq!(ex.group.order(), BigUint::from(622_080_000u64));
    assert!(ex.action.is_faithful());
    assert!(ex.group.is_transitive());
    assert!(ex.socle.is_transitive());
}

#[test]
fn product_action_s5() {
    let g = wreath_product_action(&symmetric(5).unwrap(), &t_k(1).unwrap()).unwrap();
    assert_eq!(g.degree(), 625);
    assert_eq!(g.order(), BigUint::from(120u32).pow(4) * 24u32);
}

#[test]
fn iterated_wreath_is_t_family() {
    let t2 = wreath_imprimitive(&t_k(1).unwrap(), &t_k(1).unwrap()).unwrap();
    assert_eq!(t2.order(), t_order(2));
    let t3 = wreath_imprimitive(&t_k(1).unwrap(), &t_k(2).unwrap()).unwrap();
    assert_eq!(t3.order(), t_order(3));
}

#[test]
fn l1_is_irreducible() {
    let l1 = build_l(1).unwrap();
    assert_eq!(l1.is_irreducible(7).unwrap(), Irreducibility::Irreducible);
    let cs = l1.irreducible_constituents(7).unwrap();
    assert_eq!(cs.iter().map(|c| c.dim()).collect::<Vec<_>>(), vec![8]);
}

#[test]
fn diagonal_f4_splits_into_lines() {
    for d in 1..=3 {
        let g = gl1_power(d, 4).unwrap();
        let cs = g.irreducible_constituents(11).unwrap();
        assert_eq!(cs.len(), d);
        assert!(cs.iter().all(|c| c.dim() == 1));
    }
}

#[test]
fn block_diagonal_witness() {
    let g = MatGroup::parse("matgroup 4 2\ngen\n1100\n0100\n0010\n0001\ngen\n0100\n1000\n0010\n0001\ngen\n1000\n0100\n0011\n0001\ngen\n1000\n0100\n0001\n0010\n").unwrap();
    match g.is_irreducible(3).unwrap() {
        Irreducibility::Reducible(w) => {
            assert_eq!(w.dim(), 2);
            assert!(w.is_invariant_under(g.generators()));
        }
        Irreducibility::Irreducible => panic!("block-diagonal group is reducible"),
    }
}
