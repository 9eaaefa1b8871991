use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::constructions::{gl_order, t_order, ConstructionSpec};
use crate::error::{Error, Result};
use crate::perm::omega;

fn four_pow(k: u32) -> BigUint {
    BigUint::from(4u32).pow(k)
}

/// `(4/3)(4^k - 1)`.
fn t_length(k: u32) -> BigUint {
    (four_pow(k) - 1u32) * 4u32 / 3u32
}

/// `c(GL(d,q))`: the cyclic top `GL/SL`, the centre of `SL`, and `PSL`,
/// which is simple except for `PSL(2,2) = S3` and `PSL(2,3) = A4`.
pub fn gl_length(d: usize, q: u32) -> u32 {
    let top = omega(q as u64 - 1);
    if d == 1 {
        return top;
    }
    let centre = omega((d as u64).gcd(&(q as u64 - 1)));
    let psl = match (d, q) {
        (2, 2) => 2,
        (2, 3) => 3,
        _ => 1,
    };
    top + centre + psl
}

fn symmetric_length(n: usize) -> u32 {
    match n {
        0 | 1 => 0,
        2 => 1,
        3 => 2,
        4 => 4,
        _ => 2,
    }
}

fn alternating_length(n: usize) -> u32 {
    match n {
        0..=2 => 0,
        4 => 3,
        _ => 1,
    }
}

/// Degree of the permutation group a spec denotes; `L(k)` counts nonzero
/// vectors.
pub fn degree_analytic(spec: &ConstructionSpec) -> BigUint {
    use ConstructionSpec::*;
    match spec {
        T(k) => four_pow(*k),
        P(k) => BigUint::from(4u32).pow(4u32.pow(*k)),
        L(k) => BigUint::from(2u32).pow(2 * 4u32.pow(*k)) - 1u32,
        Symmetric(n) | Alternating(n) | Cyclic(n) | Dihedral(n) => BigUint::from(*n),
        GlPerm(d, q) => BigUint::from(*q).pow(*d as u32) - 1u32,
        Wreath(a, b) => degree_analytic(a) * degree_analytic(b),
        WreathProduct(a, b) => {
            let e = degree_analytic(b).to_u32().unwrap_or(u32::MAX);
            degree_analytic(a).pow(e)
        }
        Direct(parts) => parts.iter().map(degree_analytic).sum(),
        SemiprimitiveExample(k) => BigUint::from(2u32) * BigUint::from(4u32).pow(4u32.pow(*k)),
        QuasiprimitiveExample(k) => {
            let b = 4u32.pow(*k);
            BigUint::from(5u32).pow(b) * BigUint::from(3u32).pow(3 * b / 4)
        }
    }
}

/// Order of the permutation group a spec denotes.
pub fn order_analytic(spec: &ConstructionSpec) -> BigUint {
    use ConstructionSpec::*;
    let factorial = |n: usize| (1..=n).map(BigUint::from).product::<BigUint>();
    let power = |x: BigUint, k: u32| x.pow(4u32.pow(k));
    match spec {
        T(k) => t_order(*k),
        P(k) => power(24u32.into(), *k) * t_order(*k),
        L(k) => power(6u32.into(), *k) * t_order(*k),
        Symmetric(n) => factorial(*n),
        Alternating(n) => (factorial(*n) / 2u32).max(BigUint::one()),
        Cyclic(n) => BigUint::from(*n),
        Dihedral(n) => BigUint::from(2 * *n),
        GlPerm(d, q) => gl_order(*d, *q),
        Wreath(a, b) | WreathProduct(a, b) => {
            let e = degree_analytic(b).to_u32().unwrap_or(u32::MAX);
            order_analytic(a).pow(e) * order_analytic(b)
        }
        Direct(parts) => parts.iter().map(order_analytic).product(),
        // |GL(2,3) wr T_k| over the even-weight part of the centre.
        SemiprimitiveExample(k) => {
            let b = 4u32.pow(*k);
            power(48u32.into(), *k) * t_order(*k) / BigUint::from(2u32).pow(b - 1)
        }
        QuasiprimitiveExample(k) => power(60u32.into(), *k) * 2u32 * t_order(*k),
    }
}

/// `c(G)` from closed forms and the wreath and direct product laws, for
/// any parameter size.
pub fn composition_length_analytic(spec: &ConstructionSpec) -> Result<BigUint> {
    use ConstructionSpec::*;
    Ok(match spec {
        T(k) => t_length(*k),
        P(k) => t_length(k + 1),
        L(k) => four_pow(*k) * 2u32 + t_length(*k),
        Symmetric(n) => symmetric_length(*n).into(),
        Alternating(n) => alternating_length(*n).into(),
        Cyclic(n) => omega(*n as u64).into(),
        Dihedral(n) => omega(2 * *n as u64).into(),
        GlPerm(d, q) => {
            if *d == 0 || crate::perm::factorize(*q as u64).len() != 1 {
                return Err(Error::OutOfRange(format!("GL({},{})", d, q)));
            }
            gl_length(*d, *q).into()
        }
        Wreath(a, b) | WreathProduct(a, b) => {
            degree_analytic(b) * composition_length_analytic(a)? + composition_length_analytic(b)?
        }
        Direct(parts) => {
            let mut sum = BigUint::zero();
            for p in parts {
                sum += composition_length_analytic(p)?;
            }
            sum
        }
        SemiprimitiveExample(k) => (four_pow(*k) * 16u32 - 1u32) / 3u32,
        QuasiprimitiveExample(k) => {
            if *k == 0 {
                return Err(Error::OutOfRange("qp_ex(k) needs k >= 1".into()));
            }
            (four_pow(*k) * 31u32 - 16u32) / 12u32
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> BigUint {
        composition_length_analytic(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(c("T(3)"), BigUint::from(84u32));
        assert_eq!(c("L(1)"), BigUint::from(12u32));
        assert_eq!(c("L(2)"), BigUint::from(52u32));
        assert_eq!(c("qp_ex(2)"), BigUint::from(40u32));
        assert_eq!(c("qp_ex(1)"), BigUint::from(9u32));
        assert_eq!(c("sp_ex(0)"), BigUint::from(5u32));
        assert_eq!(c("sp_ex(1)"), BigUint::from(21u32));
        assert_eq!(c("P(1)"), BigUint::from(20u32));
        assert_eq!(c("wrP(S(5),T(1))"), BigUint::from(12u32));
        assert_eq!(c("wr(S(4),T(2))"), c("T(3)"));
        assert_eq!(c("GLperm(2,3)"), BigUint::from(5u32));
        assert_eq!(c("GLperm(2,2)"), BigUint::from(2u32));
        assert_eq!(c("GLperm(1,4)"), BigUint::from(1u32));
        assert!(c("T(0)").is_zero());
        assert_eq!(c("P(0)"), BigUint::from(4u32));
    }

    #[test]
    fn degrees() {
        let d = |s: &str| degree_analytic(&s.parse().unwrap());
        assert_eq!(d("qp_ex(1)"), BigUint::from(16_875u32));
        assert_eq!(d("sp_ex(1)"), BigUint::from(512u32));
        assert_eq!(d("P(1)"), BigUint::from(256u32));
        assert_eq!(d("L(1)"), BigUint::from(255u32));
    }

    #[test]
    fn orders() {
        let o = |s: &str| order_analytic(&s.parse().unwrap());
        assert_eq!(o("qp_ex(1)"), BigUint::from(622_080_000u64));
        assert_eq!(o("sp_ex(1)"), BigUint::from(15_925_248u64));
        assert_eq!(o("sp_ex(0)"), BigUint::from(48u32));
        assert_eq!(o("L(1)"), BigUint::from(31_104u32));
        assert_eq!(o("wrP(S(5),T(1))"), BigUint::from(120u32).pow(4) * 24u32);
        assert_eq!(o("A(2)"), BigUint::one());
    }
}
