use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Permutation;

/// Product-replacement sampler over a fixed generating set.
///
/// Elements drift towards uniform after the initial scramble; output is
/// not exactly uniform, so callers that need exactness verify afterwards.
pub struct ProductReplacement {
    slots: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    pub fn new(degree: usize, gens: &[Permutation], seed: u64) -> Self {
        let mut slots: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if slots.is_empty() {
            slots.push(Permutation::identity(degree));
        }
        let base = slots.len();
        let want = (2 * base).max(10);
        let mut i = 0;
        while slots.len() < want {
            slots.push(slots[i % base].clone());
            i += 1;
        }
        let mut pr = ProductReplacement {
            slots,
            acc: Permutation::identity(degree),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..60 {
            pr.next_element();
        }
        pr
    }

    pub fn next_element(&mut self) -> Permutation {
        let n = self.slots.len();
        let s = self.rng.gen_range(0..n);
        let mut t = self.rng.gen_range(0..n - 1);
        if t >= s {
            t += 1;
        }
        let right = self.rng.gen_bool(0.5);
        let other = if self.rng.gen_bool(0.5) {
            self.slots[t].clone()
        } else {
            self.slots[t].inverse()
        };
        if right {
            self.slots[s].mul_assign(&other);
        } else {
            self.slots[s] = other.mul(&self.slots[s]);
        }
        self.acc.mul_assign(&self.slots[s]);
        self.acc.clone()
    }
}
