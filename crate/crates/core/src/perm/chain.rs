//! Base and strong generating set, built by Schreier–Sims.
//!
//! Construction runs a randomized pass first. The result is accepted
//! without further work only when the caller supplies a certified upper
//! bound on the group order and the product of the fundamental orbit
//! lengths reaches it; otherwise every Schreier generator is sifted
//! (deterministic completion).

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::random::ProductReplacement;
use super::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// Options for chain construction.
#[derive(Clone, Debug, Default)]
pub struct ChainOptions {
    /// Points that must open the base, in order.
    pub base_prefix: Vec<usize>,
    /// A certified upper bound on the order of the generated group.
    pub order_bound: Option<BigUint>,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base_point: u32,
    /// Strong generators fixing every earlier base point.
    pub(crate) gen_ids: Vec<usize>,
    pub(crate) orbit: Vec<u32>,
    /// Schreier vector; `None` while the orbit is a single point.
    labels: Option<Vec<u32>>,
    /// Per entry of `gen_ids`, how many orbit points have had their
    /// Schreier generator verified.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: u32) -> Self {
        Level {
            base_point,
            gen_ids: Vec::new(),
            orbit: vec![base_point],
            labels: None,
            checked: Vec::new(),
        }
    }

    #[inline]
    fn contains(&self, x: u32) -> bool {
        match &self.labels {
            None => x == self.base_point,
            Some(l) => l[x as usize] != NOT_IN_ORBIT,
        }
    }

    #[inline]
    fn label(&self, x: u32) -> u32 {
        match &self.labels {
            None => ROOT,
            Some(l) => l[x as usize],
        }
    }
}

/// A stabilizer chain: base, strong generators, and one Schreier vector per
/// base point.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    gens: Vec<Permutation>,
    inv: Vec<Permutation>,
    pub(crate) levels: Vec<Level>,
}

impl Bsgs {
    fn empty(degree: usize, prefix: &[usize]) -> Self {
        Bsgs {
            degree,
            gens: Vec::new(),
            inv: Vec::new(),
            levels: prefix.iter().map(|&b| Level::new(b as u32)).collect(),
        }
    }

    /// Builds a complete chain for the group generated by `gens`.
    pub fn build(degree: usize, gens: &[Permutation], opts: &ChainOptions) -> Bsgs {
        let mut prefix = opts.base_prefix.clone();
        let nontrivial: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return Bsgs::empty(degree, &prefix);
        }
        if prefix.is_empty() {
            prefix.push(first_base_point(degree, &nontrivial));
        }
        let mut chain = Bsgs::empty(degree, &prefix);
        let mut sampler = ProductReplacement::new(degree, &nontrivial, opts.seed ^ 0x5eed_c4a1);

        if let Some(bound) = &opts.order_bound {
            if chain.randomized_pass(|| sampler.next_element(), Some(bound), 80) {
                chain.mark_complete();
                return chain;
            }
        } else {
            chain.randomized_pass(|| sampler.next_element(), None, 12);
        }
        for g in &nontrivial {
            let (res, j) = chain.sift_from(g.clone(), 0);
            if j < chain.levels.len() || !res.is_identity() {
                chain.add_strong_generator(res, j);
            }
        }
        chain.complete();
        chain
    }

    /// Rebuilds a chain for the group of `self` with a new base prefix.
    /// Random elements are drawn exactly uniformly from `self`, and the known
    /// order certifies the result.
    pub fn with_base_prefix(&self, prefix: &[usize], seed: u64) -> Bsgs {
        let order = self.order();
        let mut chain = Bsgs::empty(self.degree, prefix);
        if order.is_one() {
            return chain;
        }
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let mut patience = 0;
        loop {
            if chain.randomized_pass(|| self.random_element(&mut rng), Some(&order), 40) {
                chain.mark_complete();
                return chain;
            }
            patience += 1;
            if patience > 4 {
                // Uniform sampling makes this practically unreachable.
                for g in &self.gens {
                    let (res, j) = chain.sift_from(g.clone(), 0);
                    if j < chain.levels.len() || !res.is_identity() {
                        chain.add_strong_generator(res, j);
                    }
                }
                chain.complete();
                return chain;
            }
        }
    }

    /// Sifts random elements until the order reaches `bound` (returns true)
    /// or `patience` consecutive elements sift to the identity.
    fn randomized_pass<F>(&mut self, mut sample: F, bound: Option<&BigUint>, patience: usize) -> bool
    where
        F: FnMut() -> Permutation,
    {
        let mut streak = 0;
        let mut order = self.order();
        loop {
            if let Some(b) = bound {
                if &order == b {
                    return true;
                }
                if &order > b {
                    return false;
                }
            }
            if streak >= patience {
                return false;
            }
            let g = sample();
            let (res, j) = self.sift_from(g, 0);
            if j < self.levels.len() || !res.is_identity() {
                self.add_strong_generator(res, j);
                order = self.order();
                streak = 0;
            } else {
                streak += 1;
            }
        }
    }

    fn mark_complete(&mut self) {
        for level in &mut self.levels {
            let len = level.orbit.len();
            for c in level.checked.iter_mut() {
                *c = len;
            }
        }
    }

    /// Deterministic Schreier–Sims completion from the current state.
    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.check_level(i) {
                Some(j) => i = j,
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Verifies every Schreier generator of level `i`. On the first failure
    /// the residue is added and the deepest affected level is returned.
    fn check_level(&mut self, i: usize) -> Option<usize> {
        let start = self.levels[i].checked.iter().copied().min()?;
        let mut pos = start;
        while pos < self.levels[i].orbit.len() {
            let beta = self.levels[i].orbit[pos];
            let u = self.transversal_element(i, beta);
            for k in 0..self.levels[i].gen_ids.len() {
                if self.levels[i].checked[k] > pos {
                    continue;
                }
                let gid = self.levels[i].gen_ids[k];
                let y = u.mul(&self.gens[gid]);
                let (res, j) = self.sift_from(y, i);
                self.levels[i].checked[k] = pos + 1;
                if j < self.levels.len() || !res.is_identity() {
                    self.add_strong_generator(res, j);
                    return Some(j.min(self.levels.len() - 1));
                }
            }
            pos += 1;
        }
        None
    }

    /// Adds `h` (which fixes the first `upto` base points) as a strong
    /// generator for levels `0..=upto`, creating a new level if needed.
    fn add_strong_generator(&mut self, h: Permutation, upto: usize) {
        debug_assert!(!h.is_identity());
        let gid = self.gens.len();
        self.inv.push(h.inverse());
        if upto == self.levels.len() {
            let b = h.smallest_moved_point().expect("nonidentity residue") as u32;
            self.levels.push(Level::new(b));
        }
        self.gens.push(h);
        for li in 0..=upto {
            self.levels[li].gen_ids.push(gid);
            self.levels[li].checked.push(0);
            self.extend_orbit(li, gid);
        }
    }

    fn extend_orbit(&mut self, li: usize, new_gid: usize) {
        let degree = self.degree;
        let gens = &self.gens;
        let level = &mut self.levels[li];
        let push = |level: &mut Level, x: u32, label: u32| {
            if level.labels.is_none() {
                let mut l = vec![NOT_IN_ORBIT; degree];
                l[level.base_point as usize] = ROOT;
                level.labels = Some(l);
            }
            level.labels.as_mut().unwrap()[x as usize] = label;
            level.orbit.push(x);
        };
        let old_len = level.orbit.len();
        for idx in 0..old_len {
            let x = gens[new_gid].image(level.orbit[idx]);
            if !level.contains(x) {
                push(level, x, new_gid as u32);
            }
        }
        let mut idx = old_len;
        while idx < level.orbit.len() {
            let b = level.orbit[idx];
            for k in 0..level.gen_ids.len() {
                let gid = level.gen_ids[k];
                let x = gens[gid].image(b);
                if !level.contains(x) {
                    push(level, x, gid as u32);
                }
            }
            idx += 1;
        }
    }

    /// Strips `g` through levels `start..`. Returns the residue and the
    /// index of the level where stripping failed (`levels.len()` if none).
    pub(crate) fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let mut beta = g.image(level.base_point);
            if !level.contains(beta) {
                return (g, i);
            }
            while beta != level.base_point {
                let gid = level.label(beta) as usize;
                g.mul_assign(&self.inv[gid]);
                beta = self.inv[gid].image(beta);
            }
        }
        let l = self.levels.len();
        (g, l)
    }

    /// The coset representative `u` with `base_point^u = beta` at level `i`.
    pub(crate) fn transversal_element(&self, i: usize, beta: u32) -> Permutation {
        let level = &self.levels[i];
        let mut path = Vec::new();
        let mut x = beta;
        while x != level.base_point {
            let gid = level.label(x) as usize;
            path.push(gid);
            x = self.inv[gid].image(x);
        }
        let mut u = Permutation::identity(self.degree);
        for &gid in path.iter().rev() {
            u.mul_assign(&self.gens[gid]);
        }
        u
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point as usize).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// The fundamental orbit of level `i`.
    pub fn fundamental_orbit(&self, i: usize) -> &[u32] {
        &self.levels[i].orbit
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, _) = self.sift_from(g.clone(), 0);
        res.is_identity()
    }

    /// Exactly uniform random element: one transversal element per level.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for i in (0..self.levels.len()).rev() {
            let orbit = &self.levels[i].orbit;
            let beta = orbit[rng.gen_range(0..orbit.len())];
            g.mul_assign(&self.transversal_element(i, beta));
        }
        g
    }

    /// Generators of the pointwise stabilizer of the first `m` base points.
    pub fn stabilizer_generators(&self, m: usize) -> Vec<Permutation> {
        if m >= self.levels.len() {
            return Vec::new();
        }
        self.levels[m].gen_ids.iter().map(|&g| self.gens[g].clone()).collect()
    }

    /// The chain of the pointwise stabilizer of the first `m` base points.
    pub fn tail(&self, m: usize) -> Bsgs {
        if m >= self.levels.len() {
            return Bsgs::empty(self.degree, &[]);
        }
        let keep = &self.levels[m].gen_ids;
        let mut remap = vec![u32::MAX; self.gens.len()];
        let mut gens = Vec::with_capacity(keep.len());
        let mut inv = Vec::with_capacity(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new as u32;
            gens.push(self.gens[old].clone());
            inv.push(self.inv[old].clone());
        }
        let levels = self.levels[m..]
            .iter()
            .map(|l| {
                let labels = l.labels.as_ref().map(|lab| {
                    lab.iter()
                        .map(|&x| {
                            if x == NOT_IN_ORBIT || x == ROOT {
                                x
                            } else {
                                remap[x as usize]
                            }
                        })
                        .collect()
                });
                Level {
                    base_point: l.base_point,
                    gen_ids: l.gen_ids.iter().map(|&g| remap[g] as usize).collect(),
                    orbit: l.orbit.clone(),
                    labels,
                    checked: vec![l.orbit.len(); l.gen_ids.len()],
                }
            })
            .collect();
        Bsgs {
            degree: self.degree,
            gens,
            inv,
            levels,
        }
    }
}

/// Smallest point of a largest orbit.
fn first_base_point(degree: usize, gens: &[Permutation]) -> usize {
    let orbits = super::orbits_of(degree, gens);
    let mut best = (0usize, usize::MAX);
    for o in &orbits {
        let min = *o.iter().min().unwrap();
        if o.len() > best.0 || (o.len() == best.0 && min < best.1) {
            best = (o.len(), min);
        }
    }
    best.1
}
