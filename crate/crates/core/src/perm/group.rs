use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::chain::{Bsgs, ChainOptions};
use super::{omega, orbits_of, Permutation, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};

const DEFAULT_SEED: u64 = 0x0c0f_fee0;

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Immutable once constructed; clones share nothing mutable.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    order_bound: Option<BigUint>,
    chain: OnceLock<Arc<Bsgs>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::OutOfRange("degree must be at least 1".into()));
        }
        if degree > DEFAULT_DEGREE_CAP {
            return Err(Error::DegreeCap {
                degree: degree as u128,
                cap: DEFAULT_DEGREE_CAP,
            });
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            gens,
            order_bound: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("valid degree")
    }

    /// Attaches a certified upper bound on the order, which lets chain
    /// construction stop as soon as the bound is reached.
    pub fn with_order_bound(mut self, bound: BigUint) -> Self {
        self.order_bound = Some(bound);
        self
    }

    pub(crate) fn from_chain(degree: usize, gens: Vec<Permutation>, chain: Bsgs) -> Self {
        let lock = OnceLock::new();
        let _ = lock.set(Arc::new(chain));
        PermGroup {
            degree,
            gens,
            order_bound: None,
            chain: lock,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &Bsgs {
        self.chain.get_or_init(|| {
            let opts = ChainOptions {
                base_prefix: Vec::new(),
                order_bound: self.order_bound.clone(),
                seed: DEFAULT_SEED,
            };
            Arc::new(Bsgs::build(self.degree, &self.gens, &opts))
        })
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        Ok(self.chain().contains(g))
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn orbit(&self, alpha: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[alpha] = true;
        let mut orbit = vec![alpha];
        let mut i = 0;
        while i < orbit.len() {
            for g in &self.gens {
                let y = g.apply(orbit[i]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Ω(|G|), from the fundamental orbit lengths.
    pub fn omega_order(&self) -> u32 {
        self.chain().orbit_lengths().iter().map(|&l| omega(l as u64)).sum()
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// A chain whose base opens with `prefix`, reusing the cached chain when
    /// it already does.
    pub fn chain_with_prefix(&self, prefix: &[usize]) -> Bsgs {
        let chain = self.chain();
        let base = chain.base();
        if base.len() >= prefix.len() && &base[..prefix.len()] == prefix {
            return chain.clone();
        }
        chain.with_base_prefix(prefix, DEFAULT_SEED ^ prefix.len() as u64)
    }

    pub fn point_stabilizer(&self, alpha: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[alpha])
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            if p >= self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
        }
        if points.is_empty() {
            return Ok(self.clone());
        }
        let mut prefix = Vec::with_capacity(points.len());
        let mut seen = vec![false; self.degree];
        for &p in points {
            if !seen[p] {
                seen[p] = true;
                prefix.push(p);
            }
        }
        let chain = self.chain_with_prefix(&prefix).tail(prefix.len());
        let gens = chain.strong_generators().to_vec();
        Ok(PermGroup::from_chain(self.degree, gens, chain))
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.chain().contains(g))
    }

    /// Whether `self` is normalized by every generator of `g`.
    pub fn is_normalized_by(&self, g: &PermGroup) -> bool {
        let chain = self.chain();
        g.gens.iter().all(|x| {
            let xi = x.inverse();
            self.gens.iter().all(|n| chain.contains(&xi.mul(n).mul(x)))
        })
    }

    pub fn is_normal_subgroup_of(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && self.is_normalized_by(g)
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(Error::NotMember);
            }
        }
        Ok(self.normal_closure_unchecked(seeds))
    }

    pub(crate) fn normal_closure_unchecked(&self, seeds: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        if gens.is_empty() {
            return PermGroup::trivial(self.degree);
        }
        let g = self.reduced();
        let order = g.order();
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 0xc105e);
        let mut n = PermGroup::new(self.degree, gens.clone())
            .expect("degrees agree")
            .with_order_bound(order.clone())
            .reduced();
        gens = n.gens.clone();
        loop {
            if n.order() == order {
                return n;
            }
            // Random conjugates find most of the closure cheaply; the
            // generator scan below certifies normality.
            let chain = n.chain();
            let mut missing = None;
            for _ in 0..8 {
                let c = chain.random_element(&mut rng).conjugate_by(&g.random_element(&mut rng));
                if !chain.contains(&c) {
                    missing = Some(c);
                    break;
                }
            }
            if missing.is_none() {
                missing = n
                    .gens
                    .iter()
                    .flat_map(|x| g.gens.iter().map(move |y| x.conjugate_by(y)))
                    .find(|c| !chain.contains(c));
            }
            match missing {
                None => return n,
                Some(c) => gens.push(c),
            }
            n = PermGroup::new(self.degree, gens.clone())
                .expect("degrees agree")
                .with_order_bound(order.clone())
                .reduced();
            gens = n.gens.clone();
        }
    }

    /// The same group on a short generating set of random elements, keeping
    /// the stabilizer chain. Returns `self` unchanged when it already has
    /// few generators or no shorter set turns up.
    pub fn reduced(&self) -> PermGroup {
        const FEW: usize = 4;
        if self.gens.len() <= FEW {
            return self.clone();
        }
        let order = self.order();
        let chain = self.chain.get().expect("order built the chain").clone();
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 0x7ed ^ self.gens.len() as u64);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut sub: Option<PermGroup> = None;
        let mut misses = 0;
        while gens.len() < self.gens.len() && misses < 24 {
            let r = chain.random_element(&mut rng);
            if r.is_identity() || sub.as_ref().is_some_and(|h| h.chain().contains(&r)) {
                misses += 1;
                continue;
            }
            gens.push(r);
            let h = PermGroup::new(self.degree, gens.clone())
                .expect("degrees agree")
                .with_order_bound(order.clone());
            if h.order() == order {
                let lock = OnceLock::new();
                let _ = lock.set(chain);
                return PermGroup {
                    degree: self.degree,
                    gens,
                    order_bound: self.order_bound.clone(),
                    chain: lock,
                };
            }
            sub = Some(h);
        }
        self.clone()
    }

    /// The commutator subgroup.
    pub fn derived_subgroup(&self) -> PermGroup {
        let g = self.reduced();
        let mut comms = Vec::new();
        for (i, a) in g.gens.iter().enumerate() {
            for b in &g.gens[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        g.normal_closure_unchecked(&comms)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Whether the group is a `p`-group for some prime, or trivial.
    pub fn is_power_of_two_order(&self) -> bool {
        let o = self.order();
        o.is_one() || (o.count_ones() == 1)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("gens", &self.gens)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sym(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_cycles(n, &[&cycle]).unwrap(),
                Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn alt5() -> PermGroup {
        PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(7);
        assert_eq!(g.order(), BigUint::one());
        assert_eq!(g.orbits().len(), 7);
        assert_eq!(g.omega_order(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(g.random_element(&mut rng).is_identity());
    }

    #[test]
    fn membership() {
        let a5 = alt5();
        assert_eq!(a5.order(), BigUint::from(60u32));
        let t = Permutation::from_cycles(5, &[&[0, 1]]).unwrap();
        assert!(!a5.contains(&t).unwrap());
        for g in a5.generators() {
            assert!(a5.contains(g).unwrap());
        }
        assert!(a5.contains(&Permutation::identity(6)).is_err());
    }

    #[test]
    fn stabilizers() {
        let s4 = sym(4);
        let st = s4.point_stabilizer(0).unwrap();
        assert_eq!(st.order(), BigUint::from(6u32));
        assert!(st.generators().iter().all(|g| g.apply(0) == 0));
        assert_eq!(alt5().point_stabilizer(2).unwrap().order(), BigUint::from(12u32));
        assert_eq!(s4.pointwise_stabilizer(&[0, 1, 2, 3]).unwrap().order(), BigUint::one());
        assert_eq!(s4.pointwise_stabilizer(&[]).unwrap().order(), BigUint::from(24u32));
        assert!(s4.point_stabilizer(4).is_err());
    }

    #[test]
    fn closures_and_derived() {
        let s4 = sym(4);
        let v = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let k = s4.normal_closure(&[v]).unwrap();
        assert_eq!(k.order(), BigUint::from(4u32));
        assert!(k.is_normal_subgroup_of(&s4));
        assert_eq!(s4.derived_subgroup().order(), BigUint::from(12u32));
        let a5 = alt5();
        assert_eq!(a5.derived_subgroup().order(), BigUint::from(60u32));
        let s5 = sym(5);
        let three = Permutation::from_cycles(5, &[&[1, 3, 4]]).unwrap();
        assert_eq!(s5.normal_closure(&[three]).unwrap().order(), BigUint::from(60u32));
        assert!(s5.normal_closure(&[Permutation::identity(5)]).unwrap().is_trivial());
        let c4 = PermGroup::new(4, vec![Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
        assert!(c4.derived_subgroup().is_trivial());
        assert!(a5
            .normal_closure(&[Permutation::from_cycles(5, &[&[0, 1]]).unwrap()])
            .is_err());
    }

    #[test]
    fn random_elements_cover_s4() {
        let s4 = sym(4);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let seen: HashSet<Permutation> = (0..10_000).map(|_| s4.random_element(&mut rng)).collect();
        assert_eq!(seen.len(), 24);
    }
}
