//! Every transitive subgroup of `Sym(n)` for `n <= 6`, up to conjugacy, by
//! brute force over the multiplication table of `Sym(n)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub const MAX_ENUMERATION_DEGREE: usize = 6;

/// Number of transitive groups of degree `n`, for the sizes enumerated.
pub const TRANSITIVE_COUNTS: [usize; 7] = [0, 1, 1, 2, 5, 5, 16];

type Bits = Vec<u64>;

struct Sym {
    n: usize,
    elems: Vec<Permutation>,
    /// `mul[a * size + b]` indexes `elems[a] * elems[b]`.
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl Sym {
    fn new(n: usize) -> Sym {
        let mut elems = Vec::new();
        let mut images: Vec<u32> = (0..n as u32).collect();
        permutations(&mut images, 0, &mut elems);
        let index: HashMap<&Permutation, u16> = elems.iter().enumerate().map(|(i, p)| (p, i as u16)).collect();
        let size = elems.len();
        let mut mul = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                mul[a * size + b] = index[&elems[a].mul(&elems[b])];
            }
        }
        let inv = elems.iter().map(|p| index[&p.inverse()]).collect();
        Sym { n, elems, mul, inv }
    }

    fn size(&self) -> usize {
        self.elems.len()
    }

    fn m(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.size() + b as usize]
    }

    /// Element set of the subgroup generated by `gens`.
    fn closure(&self, gens: &[u16]) -> Bits {
        let mut bits = vec![0u64; self.size().div_ceil(64)];
        let mut list = vec![0u16];
        set(&mut bits, 0);
        let mut i = 0;
        while i < list.len() {
            for &s in gens {
                let y = self.m(list[i], s);
                if !get(&bits, y) {
                    set(&mut bits, y);
                    list.push(y);
                }
            }
            i += 1;
        }
        bits
    }

    fn conjugate(&self, bits: &Bits, by: u16) -> Bits {
        let mut out = vec![0u64; bits.len()];
        for x in members(bits) {
            set(&mut out, self.m(self.m(self.inv[by as usize], x), by));
        }
        out
    }

    fn is_transitive(&self, bits: &Bits) -> bool {
        let mut reached = vec![false; self.n];
        for x in members(bits) {
            reached[self.elems[x as usize].apply(0)] = true;
        }
        reached.iter().all(|&r| r)
    }
}

fn permutations(images: &mut [u32], k: usize, out: &mut Vec<Permutation>) {
    if k == images.len() {
        out.push(Permutation::from_images(images.to_vec()).expect("bijection"));
        return;
    }
    for i in k..images.len() {
        images.swap(k, i);
        permutations(images, k + 1, out);
        images.swap(k, i);
    }
}

fn get(bits: &Bits, x: u16) -> bool {
    bits[x as usize / 64] >> (x % 64) & 1 == 1
}

fn set(bits: &mut Bits, x: u16) {
    bits[x as usize / 64] |= 1 << (x % 64);
}

fn members(bits: &Bits) -> impl Iterator<Item = u16> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64)
            .filter(move |b| word >> b & 1 == 1)
            .map(move |b| (w * 64 + b) as u16)
    })
}

/// Transitive subgroups of `Sym(n)`, one per conjugacy class, ordered by
/// group order.
pub fn enumerate_transitive_small(n: usize) -> Result<Vec<PermGroup>> {
    if n == 0 || n > MAX_ENUMERATION_DEGREE {
        return Err(Error::OutOfRange(format!(
            "transitive groups are enumerated for 1 <= n <= {}",
            MAX_ENUMERATION_DEGREE
        )));
    }
    let sym = Sym::new(n);
    // All subgroups: start from the cyclic ones and keep joining a cyclic
    // subgroup not yet contained. Every subgroup is the join of its cyclic
    // subgroups, so this reaches all of them.
    let mut cyclic: Vec<(u16, Bits)> = Vec::new();
    let mut seen_cyclic: HashSet<Bits> = HashSet::new();
    for x in 0..sym.size() as u16 {
        let c = sym.closure(&[x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut subgroups: Vec<(Vec<u16>, Bits)> = vec![(Vec::new(), sym.closure(&[]))];
    let mut seen: HashSet<Bits> = HashSet::from([subgroups[0].1.clone()]);
    let mut i = 0;
    while i < subgroups.len() {
        for (x, _) in &cyclic {
            if get(&subgroups[i].1, *x) {
                continue;
            }
            let mut gens = subgroups[i].0.clone();
            gens.push(*x);
            let bits = sym.closure(&gens);
            if seen.insert(bits.clone()) {
                subgroups.push((gens, bits));
            }
        }
        i += 1;
    }
    // Transitive ones, one per conjugacy class (canonical form: the least
    // conjugate element set).
    let mut classes: BTreeMap<Bits, Vec<u16>> = BTreeMap::new();
    for (gens, bits) in subgroups {
        if !sym.is_transitive(&bits) {
            continue;
        }
        let canon = (0..sym.size() as u16)
            .map(|g| sym.conjugate(&bits, g))
            .min()
            .expect("nonempty");
        classes.entry(canon).or_insert(gens);
    }
    let mut out: Vec<PermGroup> = classes
        .into_values()
        .map(|gens| {
            let perms = gens.iter().map(|&g| sym.elems[g as usize].clone()).collect();
            PermGroup::new(n, perms).expect("degrees agree")
        })
        .collect();
    // Stable, so ties keep the canonical-form order.
    out.sort_by_key(|g| g.order());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn classical_counts() {
        for (n, &count) in TRANSITIVE_COUNTS.iter().enumerate().take(6).skip(1) {
            assert_eq!(enumerate_transitive_small(n).unwrap().len(), count, "degree {}", n);
        }
    }

    #[test]
    fn degree_four_orders() {
        let orders: Vec<BigUint> = enumerate_transitive_small(4)
            .unwrap()
            .iter()
            .map(|g| g.order())
            .collect();
        let expected: Vec<BigUint> = [4u32, 4, 8, 12, 24].into_iter().map(BigUint::from).collect();
        assert_eq!(orders, expected);
    }

    #[test]
    fn range_is_checked() {
        assert!(enumerate_transitive_small(0).is_err());
        assert!(enumerate_transitive_small(7).is_err());
    }
}
