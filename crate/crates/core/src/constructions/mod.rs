//! Builders for the explicit groups: symmetric, alternating and cyclic
//! groups, direct and wreath products, the iterated wreath products `T_k`
//! with their product-action forms `P_k`, and two examples of
//! semiprimitive and quasiprimitive groups built as induced actions.

mod spec;

pub use spec::{Built, ConstructionSpec};

use num_bigint::BigUint;

use crate::actions::{coset_action, quotient_action_on_orbits, CosetAction};
use crate::error::{Error, Result};
use crate::gf::{Field, Mat, MatGroup};
use crate::perm::{PermGroup, Permutation, DEFAULT_DEGREE_CAP};

fn cap_check(degree: u128) -> Result<usize> {
    if degree > DEFAULT_DEGREE_CAP as u128 {
        return Err(Error::DegreeCap {
            degree,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    Ok(degree as usize)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `S_n` generated by `(0 1 ... n-1)` and `(0 1)`.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::OutOfRange("S(0)".into()));
    }
    let n = cap_check(n as u128)?;
    let mut gens = Vec::new();
    if n >= 2 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle])?);
        if n > 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
        }
    }
    Ok(PermGroup::new(n, gens)?.with_order_bound(factorial(n)))
}

/// `A_n` generated by `(0 1 2)` together with an `n`-cycle (odd `n`) or an
/// `(n-1)`-cycle on `1..n` (even `n`).
pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::OutOfRange("A(0)".into()));
    }
    let n = cap_check(n as u128)?;
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1, 2]])?);
        if n > 3 {
            let cycle: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
            gens.push(Permutation::from_cycles(n, &[&cycle])?);
        }
    }
    let order = if n <= 1 {
        BigUint::from(1u32)
    } else {
        factorial(n) / 2u32
    };
    Ok(PermGroup::new(n, gens)?.with_order_bound(order))
}

/// Regular cyclic group of order `n`.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::OutOfRange("C(0)".into()));
    }
    let n = cap_check(n as u128)?;
    let gens = if n >= 2 {
        let cycle: Vec<usize> = (0..n).collect();
        vec![Permutation::from_cycles(n, &[&cycle])?]
    } else {
        Vec::new()
    };
    Ok(PermGroup::new(n, gens)?.with_order_bound(BigUint::from(n)))
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("D({}) needs n >= 3", n)));
    }
    let n = cap_check(n as u128)?;
    let rot: Vec<u32> = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    let refl: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
    let gens = vec![Permutation::from_images(rot)?, Permutation::from_images(refl)?];
    Ok(PermGroup::new(n, gens)?.with_order_bound(BigUint::from(2 * n)))
}

/// Disjoint-union action of the parts, in order.
pub fn direct_product(parts: &[PermGroup]) -> Result<PermGroup> {
    let degree = cap_check(parts.iter().map(|p| p.degree() as u128).sum())?;
    let mut gens = Vec::new();
    let mut offset = 0;
    for p in parts {
        for g in p.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for x in 0..p.degree() {
                images[offset + x] = (offset + g.apply(x)) as u32;
            }
            gens.push(Permutation::from_images(images)?);
        }
        offset += p.degree();
    }
    let order = parts.iter().map(PermGroup::order).product();
    Ok(PermGroup::new(degree.max(1), gens)?.with_order_bound(order))
}

fn wreath_order(bottom: &PermGroup, top: &PermGroup) -> BigUint {
    bottom.order().pow(top.degree() as u32) * top.order()
}

/// `bottom wr top` on `m * b` points; point `j * m + i` is point `i` of
/// block `j`.
pub fn wreath_imprimitive(bottom: &PermGroup, top: &PermGroup) -> Result<PermGroup> {
    let (m, b) = (bottom.degree(), top.degree());
    let degree = cap_check(m as u128 * b as u128)?;
    let mut gens = Vec::new();
    // Conjugation by the top group carries a generator on one block of each
    // top orbit to every other block of that orbit.
    for orbit in top.orbits() {
        let j = orbit[0];
        for g in bottom.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in 0..m {
                images[j * m + i] = (j * m + g.apply(i)) as u32;
            }
            gens.push(Permutation::from_images(images)?);
        }
    }
    for t in top.generators() {
        let images = (0..degree).map(|x| (t.apply(x / m) * m + x % m) as u32).collect();
        gens.push(Permutation::from_images(images)?);
    }
    Ok(PermGroup::new(degree, gens)?.with_order_bound(wreath_order(bottom, top)))
}

/// `bottom wr top` in product action on `m^b` tuples, encoded mixed-radix
/// with coordinate 0 varying fastest.
pub fn wreath_product_action(bottom: &PermGroup, top: &PermGroup) -> Result<PermGroup> {
    let (m, b) = (bottom.degree(), top.degree());
    if m < 2 {
        return Err(Error::OutOfRange("product action needs bottom degree >= 2".into()));
    }
    let degree = cap_check((m as u128).checked_pow(b as u32).unwrap_or(u128::MAX))?;
    let mut gens = Vec::new();
    for orbit in top.orbits() {
        for g in bottom.generators() {
            gens.push(on_coordinate(g, orbit[0], m, b));
        }
    }
    for t in top.generators() {
        gens.push(permute_coordinates(t, m, b));
    }
    Ok(PermGroup::new(degree, gens)?.with_order_bound(wreath_order(bottom, top)))
}

fn digits(mut x: usize, m: usize, b: usize) -> Vec<usize> {
    (0..b)
        .map(|_| {
            let d = x % m;
            x /= m;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], m: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * m + d)
}

/// `g` acting on coordinate `i` of `m^b` tuples.
pub fn on_coordinate(g: &Permutation, i: usize, m: usize, b: usize) -> Permutation {
    let stride = m.pow(i as u32);
    let degree = m.pow(b as u32);
    let images = (0..degree)
        .map(|x| {
            let d = (x / stride) % m;
            (x + (g.apply(d) * stride) - d * stride) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `g` acting diagonally on every coordinate.
pub fn diagonal(g: &Permutation, m: usize, b: usize) -> Permutation {
    (0..b).fold(Permutation::identity(m.pow(b as u32)), |acc, i| {
        acc.mul(&on_coordinate(g, i, m, b))
    })
}

/// Moves coordinate `i` to coordinate `t(i)`.
fn permute_coordinates(t: &Permutation, m: usize, b: usize) -> Permutation {
    let images = (0..m.pow(b as u32))
        .map(|x| {
            let ds = digits(x, m, b);
            let mut out = vec![0; b];
            for (i, &d) in ds.iter().enumerate() {
                out[t.apply(i)] = d;
            }
            undigits(&out, m) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

pub const MAX_T: u32 = 3;

/// Iterated wreath product `S4 wr ... wr S4` of degree `4^k`; `T_0` is
/// trivial of degree 1.
pub fn t_k(k: u32) -> Result<PermGroup> {
    if k > MAX_T {
        return Err(Error::OutOfRange(format!("T({}) is realized for k <= {}", k, MAX_T)));
    }
    let s4 = symmetric(4)?;
    let mut t = PermGroup::trivial(1);
    for _ in 0..k {
        t = wreath_imprimitive(&s4, &t)?;
    }
    Ok(t)
}

/// `|T_k| = 24^((4^k - 1)/3)`.
pub fn t_order(k: u32) -> BigUint {
    BigUint::from(24u32).pow((4u32.pow(k) - 1) / 3)
}

/// `S4 wr T_k` in product action, degree `4^(4^k)`.
pub fn p_k(k: u32) -> Result<PermGroup> {
    if k > 1 {
        return Err(Error::DegreeCap {
            degree: 4u128.checked_pow(4u32.pow(k)).unwrap_or(u128::MAX),
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    wreath_product_action(&symmetric(4)?, &t_k(k)?)
}

/// `GL(d,q)` on its nonzero vectors, generated by the elementary
/// transvections between neighbouring coordinates and a diagonal matrix
/// with a primitive element in the corner.
pub fn gl_matrix_group(d: usize, q: u32) -> Result<MatGroup> {
    if d == 0 {
        return Err(Error::OutOfRange("GL(0,q)".into()));
    }
    let field = Field::new(q)?;
    let mut gens = Vec::new();
    for i in 0..d.saturating_sub(1) {
        for (r, c) in [(i, i + 1), (i + 1, i)] {
            let mut m = Mat::identity(&field, d);
            m.set(r, c, 1);
            gens.push(m);
        }
    }
    if q > 2 {
        let mut m = Mat::identity(&field, d);
        m.set(0, 0, field.primitive_element());
        gens.push(m);
    }
    MatGroup::new(&field, d, gens)
}

/// `|GL(d,q)|`.
pub fn gl_order(d: usize, q: u32) -> BigUint {
    let q = BigUint::from(q);
    let qd = q.pow(d as u32);
    (0..d).map(|i| &qd - q.pow(i as u32)).product()
}

pub fn gl_on_nonzero_vectors(d: usize, q: u32) -> Result<PermGroup> {
    let g = gl_matrix_group(d, q)?;
    Ok(g.to_perm(DEFAULT_DEGREE_CAP)?.with_order_bound(gl_order(d, q)))
}

/// The semiprimitive example: `H_k = GL(2,3) wr T_k` in product action on
/// `8^(4^k)` points, acting on the orbits of `N_k`, the even-weight part of
/// the centre of its base group.
pub struct SemiprimitiveExample {
    pub k: u32,
    /// The faithful action of `H_k / N_k` on `N_k`-orbits.
    pub group: PermGroup,
    /// Order of the kernel `N_k` of the quotient action.
    pub kernel_order: BigUint,
    /// Image of the centre `Z_k` of the base group: a normal subgroup of
    /// order at most 2.
    pub central_image: PermGroup,
}

pub fn semiprimitive_example(k: u32) -> Result<SemiprimitiveExample> {
    if k > 1 {
        return Err(Error::OutOfRange(format!("sp_ex({}) is realized for k <= 1", k)));
    }
    let delta = gl_on_nonzero_vectors(2, 3)?;
    let top = t_k(k)?;
    let h = wreath_product_action(&delta, &top)?;
    let b = top.degree();
    // -I negates vectors; on the enumeration `x0 + 3 x1 - 1` this is the
    // permutation of the nonzero vectors induced by the scalar 2.
    let minus_one = gl_scalar_perm(2, 3, 2)?;
    let z: Vec<Permutation> = (0..b).map(|i| on_coordinate(&minus_one, i, 8, b)).collect();
    let n_gens: Vec<Permutation> = z.windows(2).map(|w| w[0].mul(&w[1])).collect();
    let n = PermGroup::new(h.degree(), n_gens)?;
    let split = quotient_action_on_orbits(&h, &n)?;
    let central_image = PermGroup::new(split.degree_of_image(), vec![split.image_of(&z[0])])?;
    Ok(SemiprimitiveExample {
        k,
        group: split.image,
        kernel_order: split.kernel.order(),
        central_image,
    })
}

fn gl_scalar_perm(d: usize, q: u32, c: u8) -> Result<Permutation> {
    let field = Field::new(q)?;
    let m = Mat::identity(&field, d).scale(c);
    let g = MatGroup::new(&field, d, vec![m])?.to_perm(DEFAULT_DEGREE_CAP)?;
    Ok(g.generators()[0].clone())
}

/// The quasiprimitive example for `k = 1`: `G = N.M.T_1` inside
/// `S5 wr T_1` (product action on 625 points), acting on the cosets of
/// `H = O_2(N_delta).M_1.T_1`.
pub struct QuasiprimitiveExample {
    pub k: u32,
    pub group: PermGroup,
    /// The socle `A5^4` as a subgroup of `group`.
    pub socle: PermGroup,
    pub action: CosetAction,
}

pub fn quasiprimitive_example(k: u32) -> Result<QuasiprimitiveExample> {
    if k != 1 {
        return Err(Error::OutOfRange(format!("qp_ex({}) is realized for k = 1 only", k)));
    }
    let top = t_k(1)?;
    let b = top.degree();
    let coord = |cycles: &[&[usize]], i: usize| -> Result<Permutation> {
        Ok(on_coordinate(&Permutation::from_cycles(5, cycles)?, i, 5, b))
    };
    let diag =
        |cycles: &[&[usize]]| -> Result<Permutation> { Ok(diagonal(&Permutation::from_cycles(5, cycles)?, 5, b)) };
    let tops: Vec<Permutation> = top.generators().iter().map(|t| permute_coordinates(t, 5, b)).collect();

    let mut socle_gens = Vec::new();
    for i in 0..b {
        socle_gens.push(coord(&[&[0, 1, 2]], i)?);
        socle_gens.push(coord(&[&[0, 1, 2, 3, 4]], i)?);
    }
    // The top group permutes the coordinates transitively, so the first
    // coordinate's generators suffice for G and H.
    let mut g_gens = socle_gens[..2].to_vec();
    g_gens.push(diag(&[&[0, 1]])?);
    g_gens.extend(tops.iter().cloned());
    let g_order = BigUint::from(60u32).pow(b as u32) * 2u32 * top.order();
    let g = PermGroup::new(625, g_gens)?.with_order_bound(g_order.clone());

    let mut h_gens = vec![coord(&[&[0, 1], &[2, 3]], 0)?, coord(&[&[0, 2], &[1, 3]], 0)?];
    h_gens.push(diag(&[&[0, 1]])?);
    h_gens.push(diag(&[&[0, 1, 2]])?);
    h_gens.extend(tops);
    let h_order = BigUint::from(4u32).pow(b as u32) * 6u32 * top.order();
    let h = PermGroup::new(625, h_gens)?.with_order_bound(h_order);

    let action = coset_action(&g, &h, DEFAULT_DEGREE_CAP)?;
    let socle_images: Vec<Permutation> = socle_gens.iter().map(|s| action.image_of(s)).collect();
    let socle = PermGroup::new(action.degree(), socle_images)?.with_order_bound(BigUint::from(60u32).pow(b as u32));
    Ok(QuasiprimitiveExample {
        k,
        group: action.image.clone(),
        socle,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_named_groups() {
        assert_eq!(symmetric(5).unwrap().order(), BigUint::from(120u32));
        assert_eq!(symmetric(2).unwrap().order(), BigUint::from(2u32));
        assert_eq!(alternating(5).unwrap().order(), BigUint::from(60u32));
        assert_eq!(alternating(6).unwrap().order(), BigUint::from(360u32));
        assert_eq!(alternating(4).unwrap().order(), BigUint::from(12u32));
        assert_eq!(cyclic(6).unwrap().order(), BigUint::from(6u32));
        assert_eq!(dihedral(4).unwrap().order(), BigUint::from(8u32));
    }

    #[test]
    fn t_family() {
        assert_eq!(t_k(0).unwrap().degree(), 1);
        for k in 1..=3 {
            let t = t_k(k).unwrap();
            assert_eq!(t.degree(), 4usize.pow(k));
            assert_eq!(t.order(), t_order(k));
            assert!(t.is_transitive());
        }
        assert!(t_k(4).is_err());
    }

    #[test]
    fn p1_matches_t2_order() {
        let p = p_k(1).unwrap();
        assert_eq!(p.degree(), 256);
        assert_eq!(p.order(), t_order(2));
        assert!(p_k(2).is_err());
        assert_eq!(p_k(0).unwrap().order(), BigUint::from(24u32));
    }

    #[test]
    fn direct_products() {
        let t1 = t_k(1).unwrap();
        let d = direct_product(&[t1.clone(), t1]).unwrap();
        assert_eq!(d.degree(), 8);
        assert_eq!(d.order(), BigUint::from(576u32));
        assert_eq!(d.orbits().len(), 2);
        let triv = direct_product(&[PermGroup::trivial(1), PermGroup::trivial(1)]).unwrap();
        assert_eq!(triv.degree(), 2);
        assert_eq!(triv.orbits().len(), 2);
    }

    #[test]
    fn general_linear_shadows() {
        let g = gl_on_nonzero_vectors(2, 3).unwrap();
        assert_eq!((g.degree(), g.order()), (8, BigUint::from(48u32)));
        let g = gl_on_nonzero_vectors(2, 2).unwrap();
        assert_eq!((g.degree(), g.order()), (3, BigUint::from(6u32)));
        let g = gl_on_nonzero_vectors(1, 4).unwrap();
        assert_eq!((g.degree(), g.order()), (3, BigUint::from(3u32)));
        let g = gl_on_nonzero_vectors(3, 2).unwrap();
        assert_eq!(g.order(), BigUint::from(168u32));
    }

    #[test]
    fn imprimitive_wreath_order_law() {
        let gl = gl_on_nonzero_vectors(2, 3).unwrap();
        let w = wreath_imprimitive(&gl, &t_k(1).unwrap()).unwrap();
        assert_eq!(w.degree(), 32);
        assert_eq!(w.order(), BigUint::from(48u32).pow(4) * 24u32);
        let top = wreath_imprimitive(&PermGroup::trivial(3), &symmetric(4).unwrap()).unwrap();
        assert_eq!(top.order(), BigUint::from(24u32));
    }

    #[test]
    fn semiprimitive_k0() {
        let ex = semiprimitive_example(0).unwrap();
        assert_eq!(ex.group.degree(), 8);
        assert_eq!(ex.group.order(), BigUint::from(48u32));
        assert_eq!(ex.kernel_order, BigUint::from(1u32));
    }
}
