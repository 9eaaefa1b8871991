use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::perm::{factorize, PermGroup, Permutation};

/// Random elements drawn by the default probe.
pub const DEFAULT_PROBE_BUDGET: usize = 64;

fn candidates_from(g: &Permutation) -> Vec<Permutation> {
    let o = g.order();
    let mut out = vec![g.clone()];
    for (p, _) in factorize(o) {
        // Elements of prime order, and the p-th power, which strips a
        // coordinate of order p from diagonal-looking elements.
        out.push(g.pow(o / p));
        let gp = g.pow(p);
        if !gp.is_identity() {
            out.push(gp);
        }
    }
    out
}

/// Looks for a proper nontrivial normal subgroup as the normal closure of
/// a candidate element: generators, commutators of generator pairs, and
/// powers of `budget` random elements. Among the deterministic candidates
/// the smallest closure wins; random candidates stop at the first hit.
pub fn probe_normal_subgroup(g: &PermGroup, budget: usize, seed: u64) -> Option<PermGroup> {
    if g.is_trivial() {
        return None;
    }
    let order = g.order();
    let mut best: Option<PermGroup> = None;
    let consider = |best: &mut Option<PermGroup>, x: &Permutation| {
        if x.is_identity() {
            return;
        }
        let n = g.normal_closure_unchecked(std::slice::from_ref(x));
        let no = n.order();
        if no < order && no > BigUint::from(1u32) && best.as_ref().is_none_or(|b| no < b.order()) {
            *best = Some(n);
        }
    };
    let gens = g.generators();
    for s in gens {
        for c in candidates_from(s) {
            consider(&mut best, &c);
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            consider(&mut best, &Permutation::commutator(a, b));
        }
    }
    if best.is_some() {
        return best;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let x = g.random_element(&mut rng);
        for c in candidates_from(&x) {
            consider(&mut best, &c);
        }
        if best.is_some() {
            return best;
        }
    }
    None
}
