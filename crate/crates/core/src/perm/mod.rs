//! Permutations and permutation groups with stabilizer chains.

mod chain;
mod group;
mod permutation;
mod random;

pub use chain::{Bsgs, ChainOptions};
pub use group::PermGroup;
pub use permutation::{Permutation, DEFAULT_DEGREE_CAP};
pub use random::ProductReplacement;

/// Orbits of the group generated by `gens`, each sorted, ordered by their
/// smallest point.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Prime factorization by trial division, smallest prime first.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Number of prime factors of `m` counted with multiplicity.
pub fn omega(m: u64) -> u32 {
    factorize(m).iter().map(|&(_, e)| e).sum()
}
