//! Induced actions with their kernels: restriction to an orbit, action on
//! a block system, on the orbits of a normal subgroup, and on cosets.

mod blocks;
mod coset;

pub use blocks::{find_block_system, is_primitive, minimal_block_system, BlockSystem};
pub use coset::{coset_action, CosetAction};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::{Bsgs, ChainOptions, PermGroup, Permutation};

/// A homomorphism onto a permutation action on new points, together with
/// its kernel on the original points.
#[derive(Clone, Debug)]
pub struct ActionSplit {
    pub image: PermGroup,
    pub kernel: PermGroup,
    /// Original point to new point; `u32::MAX` outside the domain.
    point_map: Vec<u32>,
    reps: Vec<u32>,
}

impl ActionSplit {
    pub fn degree_of_image(&self) -> usize {
        self.image.degree()
    }

    /// The new point carrying original point `x`, if `x` is in the domain.
    pub fn map_point(&self, x: usize) -> Option<usize> {
        match self.point_map[x] {
            u32::MAX => None,
            y => Some(y as usize),
        }
    }

    /// Image of an element of the acting group.
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        induced(g, &self.point_map, &self.reps)
    }
}

fn induced(g: &Permutation, point_map: &[u32], reps: &[u32]) -> Permutation {
    let images = reps.iter().map(|&r| point_map[g.image(r) as usize]).collect();
    Permutation::from_images_unchecked(images)
}

/// Shared engine for every induced action: the group acts faithfully on
/// the disjoint union of old and new points, so its order is `|G|`, which
/// certifies a chain whose base starts with all new points. The levels over
/// new points describe the image; the rest is the kernel.
fn split_along(g: &PermGroup, point_map: Vec<u32>, reps: Vec<u32>) -> ActionSplit {
    let n = g.degree();
    let s = reps.len();
    let order = g.order();
    let image_gens: Vec<Permutation> = g.generators().iter().map(|p| induced(p, &point_map, &reps)).collect();
    let union_gens: Vec<Permutation> = g
        .generators()
        .iter()
        .zip(&image_gens)
        .map(|(p, q)| p.disjoint_sum(q))
        .collect();
    let opts = ChainOptions {
        base_prefix: (n..n + s).collect(),
        order_bound: Some(order.clone()),
        seed: 0xac7 ^ s as u64,
    };
    let chain = Bsgs::build(n + s, &union_gens, &opts);
    let image_order: BigUint = chain.orbit_lengths()[..s.min(chain.orbit_lengths().len())]
        .iter()
        .map(|&l| BigUint::from(l))
        .product();
    let kernel_gens: Vec<Permutation> = chain
        .stabilizer_generators(s)
        .iter()
        .map(|p| Permutation::from_images_unchecked(p.images()[..n].to_vec()))
        .filter(|p| !p.is_identity())
        .collect();
    let kernel_order = &order / &image_order;
    let image = PermGroup::new(s.max(1), image_gens)
        .expect("image degree")
        .with_order_bound(image_order);
    let kernel = PermGroup::new(n, kernel_gens)
        .expect("kernel degree")
        .with_order_bound(kernel_order);
    ActionSplit {
        image,
        kernel,
        point_map,
        reps,
    }
}

/// Action induced on a single orbit; the kernel is the pointwise
/// stabilizer of the orbit.
pub fn restrict_to_orbit(g: &PermGroup, orbit: &[usize]) -> Result<ActionSplit> {
    let n = g.degree();
    if orbit.is_empty() {
        return Err(Error::NotAnOrbit("empty point set".into()));
    }
    let mut sorted = orbit.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().any(|&x| x >= n) {
        return Err(Error::NotAnOrbit("point out of range".into()));
    }
    let mut actual = g.orbit(sorted[0]);
    actual.sort_unstable();
    if actual != sorted {
        return Err(Error::NotAnOrbit(format!(
            "{:?} is not the orbit of {}",
            orbit, sorted[0]
        )));
    }
    let mut point_map = vec![u32::MAX; n];
    for (i, &x) in sorted.iter().enumerate() {
        point_map[x] = i as u32;
    }
    let reps = sorted.iter().map(|&x| x as u32).collect();
    Ok(split_along(g, point_map, reps))
}

/// Action on the blocks of an invariant block system; the kernel fixes
/// every block setwise.
pub fn block_action(g: &PermGroup, blocks: &BlockSystem) -> Result<ActionSplit> {
    if blocks.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: blocks.degree(),
        });
    }
    if blocks.num_blocks() < 2 {
        return Err(Error::NotBlockSystem("a single block is not a proper system".into()));
    }
    if !blocks.is_invariant_under(g) {
        return Err(Error::NotBlockSystem("partition is not invariant".into()));
    }
    let reps = blocks.blocks().iter().map(|b| b[0] as u32).collect();
    Ok(split_along(g, blocks.labels().to_vec(), reps))
}

/// Action of `g` on the set of orbits of its normal subgroup `n`.
pub fn quotient_action_on_orbits(g: &PermGroup, n: &PermGroup) -> Result<ActionSplit> {
    if n.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: n.degree(),
        });
    }
    if !n.is_subgroup_of(g) {
        return Err(Error::NotMember);
    }
    if !n.is_normalized_by(g) {
        return Err(Error::NotNormal);
    }
    let orbits = n.orbits();
    let mut point_map = vec![0u32; g.degree()];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            point_map[x] = i as u32;
        }
    }
    let reps = orbits.iter().map(|o| o[0] as u32).collect();
    Ok(split_along(g, point_map, reps))
}

/// Only the identity fixes a point.
pub fn is_semiregular(g: &PermGroup) -> bool {
    let order = g.order();
    g.orbits().iter().all(|o| BigUint::from(o.len()) == order)
}
