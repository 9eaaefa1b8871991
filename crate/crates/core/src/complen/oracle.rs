//! Brute-force composition length for small groups, sharing nothing with
//! the engine beyond the permutation type: every element is listed, and a
//! chief series is built from subgroups of the full multiplication table.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::perm::{omega, PermGroup, Permutation};

pub const ORACLE_CAP: u64 = 5000;

struct Table {
    n: usize,
    /// `mul[a * n + b]` is the index of `a * b`.
    mul: Vec<u16>,
    inv: Vec<u16>,
    /// Indices of the group's generators.
    gens: Vec<u16>,
}

impl Table {
    fn new(g: &PermGroup, cap: u64) -> Result<Table> {
        let deg = g.degree();
        let id = Permutation::identity(deg);
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Permutation, u16> = HashMap::from([(id, 0)]);
        // parent[i] = (j, s) with elems[i] = elems[j] * gens[s]
        let mut parent: Vec<(u16, u16)> = vec![(0, 0)];
        let gens: Vec<&Permutation> = g.generators().iter().filter(|s| !s.is_identity()).collect();
        let mut i = 0;
        while i < elems.len() {
            for (k, s) in gens.iter().enumerate() {
                let y = elems[i].mul(s);
                if !index.contains_key(&y) {
                    if elems.len() as u64 >= cap {
                        return Err(Error::OracleCap {
                            order: format!(">{}", cap),
                            cap,
                        });
                    }
                    index.insert(y.clone(), elems.len() as u16);
                    elems.push(y);
                    parent.push((i as u16, k as u16));
                }
            }
            i += 1;
        }
        let n = elems.len();
        let right: Vec<Vec<u16>> = gens
            .iter()
            .map(|s| elems.iter().map(|e| index[&e.mul(s)]).collect())
            .collect();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            mul[a * n] = a as u16;
            // Elements are discovered after their parents.
            for b in 1..n {
                let (pb, s) = parent[b];
                mul[a * n + b] = right[s as usize][mul[a * n + pb as usize] as usize];
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let gens = gens.iter().map(|s| index[*s]).collect();
        Ok(Table { n, mul, inv, gens })
    }

    #[inline]
    fn m(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.n + b as usize]
    }

    fn conj(&self, x: u16, by: u16) -> u16 {
        self.m(self.m(self.inv[by as usize], x), by)
    }

    /// One representative per conjugacy class, identity excluded.
    fn class_reps(&self) -> Vec<u16> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut reps = Vec::new();
        for x in 1..self.n as u16 {
            if seen[x as usize] {
                continue;
            }
            reps.push(x);
            seen[x as usize] = true;
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &s in &self.gens {
                    let z = self.conj(y, s);
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        stack.push(z);
                    }
                }
            }
        }
        reps
    }
}

/// A subgroup as a membership mask, its element list and generators.
#[derive(Clone)]
struct Sub {
    mask: Vec<bool>,
    elems: Vec<u16>,
    gens: Vec<u16>,
}

impl Sub {
    fn trivial(n: usize) -> Sub {
        let mut mask = vec![false; n];
        mask[0] = true;
        Sub {
            mask,
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    fn order(&self) -> usize {
        self.elems.len()
    }

    fn contains(&self, x: u16) -> bool {
        self.mask[x as usize]
    }

    fn add_gen(&mut self, t: &Table, x: u16) {
        if self.contains(x) {
            return;
        }
        self.gens.push(x);
        let old = self.elems.len();
        let mut i = 0;
        while i < self.elems.len() {
            let e = self.elems[i];
            let start = if i < old { self.gens.len() - 1 } else { 0 };
            for k in start..self.gens.len() {
                let y = t.m(e, self.gens[k]);
                if !self.mask[y as usize] {
                    self.mask[y as usize] = true;
                    self.elems.push(y);
                }
            }
            i += 1;
        }
    }

    /// Smallest subgroup containing `self` and `x` that is normalized by
    /// `by`.
    fn normal_closure_with(&self, t: &Table, x: u16, by: &[u16]) -> Sub {
        let mut s = self.clone();
        s.add_gen(t, x);
        let mut i = 0;
        while i < s.gens.len() {
            let h = s.gens[i];
            for &b in by {
                let c = t.conj(h, b);
                s.add_gen(t, c);
            }
            i += 1;
        }
        s
    }
}

/// Exact `c(G)` for `|G| <= ORACLE_CAP`.
pub fn composition_length_oracle(g: &PermGroup) -> Result<u32> {
    composition_length_oracle_capped(g, ORACLE_CAP)
}

pub fn composition_length_oracle_capped(g: &PermGroup, cap: u64) -> Result<u32> {
    if let Some(o) = g.order().to_u64().filter(|&o| o > cap) {
        return Err(Error::OracleCap {
            order: o.to_string(),
            cap,
        });
    }
    let t = Table::new(g, cap.min(u16::MAX as u64))?;
    let n = t.n;
    // Chief series: repeatedly adjoin the smallest normal closure over the
    // current normal subgroup, then count simple factors in each step.
    // Closures of conjugate elements are conjugate, so class
    // representatives suffice throughout.
    let reps = t.class_reps();
    let mut current = Sub::trivial(n);
    let mut total = 0;
    while current.order() < n {
        let mut best: Option<Sub> = None;
        for &x in &reps {
            if current.contains(x) {
                continue;
            }
            let m = current.normal_closure_with(&t, x, &t.gens);
            if best.as_ref().is_none_or(|b| m.order() < b.order()) {
                best = Some(m);
            }
        }
        let m = best.expect("proper subgroup has an element outside");
        total += chief_factor_length(&t, &reps, &current, &m);
        current = m;
    }
    Ok(total)
}

/// Length of the chief factor `M / K`: `Omega(|M/K|)` when abelian,
/// otherwise `m` where `M / K = T^m` and `|T|` is the smallest normal
/// closure inside `M` over `K`.
fn chief_factor_length(t: &Table, reps: &[u16], k: &Sub, m: &Sub) -> u32 {
    let index = m.order() / k.order();
    let abelian = m.gens.iter().all(|&a| {
        m.gens
            .iter()
            .all(|&b| k.contains(t.m(t.m(t.inv[a as usize], t.inv[b as usize]), t.m(a, b))))
    });
    if abelian {
        return omega(index as u64);
    }
    let mut smallest = usize::MAX;
    // `M` is normal in `G`, so conjugating by `G` permutes the closures.
    for &x in reps {
        if !m.contains(x) || k.contains(x) {
            continue;
        }
        let c = k.normal_closure_with(t, x, &m.gens);
        smallest = smallest.min(c.order() / k.order());
    }
    let mut len = 0;
    let mut r = index;
    while r > 1 {
        r /= smallest;
        len += 1;
    }
    len
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alternating, cyclic, direct_product, gl_on_nonzero_vectors, symmetric};

    #[test]
    fn classical_values() {
        assert_eq!(composition_length_oracle(&symmetric(4).unwrap()).unwrap(), 4);
        assert_eq!(composition_length_oracle(&symmetric(5).unwrap()).unwrap(), 2);
        assert_eq!(composition_length_oracle(&alternating(5).unwrap()).unwrap(), 1);
        assert_eq!(
            composition_length_oracle(&gl_on_nonzero_vectors(2, 3).unwrap()).unwrap(),
            5
        );
        let c2 = cyclic(2).unwrap();
        let c2_3 = direct_product(&[c2.clone(), c2.clone(), c2]).unwrap();
        assert_eq!(composition_length_oracle(&c2_3).unwrap(), 3);
        assert_eq!(composition_length_oracle(&PermGroup::trivial(2)).unwrap(), 0);
    }

    #[test]
    fn nonabelian_chief_factor_of_rank_two() {
        let a5 = alternating(5).unwrap();
        let g = direct_product(&[a5.clone(), a5]).unwrap();
        assert_eq!(composition_length_oracle(&g).unwrap(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            composition_length_oracle(&symmetric(8).unwrap()),
            Err(Error::OracleCap { .. })
        ));
    }
}
