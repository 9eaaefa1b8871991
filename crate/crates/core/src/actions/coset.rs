use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::perm::{Bsgs, PermGroup, Permutation};

/// The action of a group on the right cosets of a subgroup.
///
/// Cosets are indexed in breadth-first discovery order from `H` itself
/// (index 0). Each coset is stored as its canonical representative.
pub struct CosetAction {
    pub image: PermGroup,
    /// Order of the kernel of the action; 1 exactly when it is faithful.
    pub kernel_order: BigUint,
    sub_chain: Bsgs,
    key_points: Vec<u32>,
    reps: Vec<Permutation>,
    index_of: HashMap<Vec<u32>, u32>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_order == BigUint::from(1u32)
    }

    /// Image of an element of the acting group.
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        let images = self.reps.iter().map(|r| self.lookup(&r.mul(g))).collect();
        Permutation::from_images_unchecked(images)
    }

    fn lookup(&self, x: &Permutation) -> u32 {
        let c = canonical_rep(&self.sub_chain, x.clone());
        let key: Vec<u32> = self.key_points.iter().map(|&b| c.image(b)).collect();
        self.index_of[&key]
    }
}

/// Lexicographically least element of `Hx` on the base of `H`: at each
/// level, pick the transversal element sending the base point to the orbit
/// point with the smallest image under the running product.
fn canonical_rep(sub: &Bsgs, mut x: Permutation) -> Permutation {
    for i in 0..sub.levels.len() {
        let orbit = sub.fundamental_orbit(i);
        if orbit.len() == 1 {
            continue;
        }
        let best = *orbit.iter().min_by_key(|&&g| x.image(g)).unwrap();
        if best != orbit[0] {
            let u = sub.transversal_element(i, best);
            x = u.mul(&x);
        }
    }
    x
}

/// Action of `g` on the right cosets of `h`, which must be a subgroup.
/// The index may not exceed `cap`.
pub fn coset_action(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<CosetAction> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotMember);
    }
    let g_order = g.order();
    let index = &g_order / h.order();
    let index_small = index.to_usize().filter(|&i| i <= cap).ok_or_else(|| Error::DegreeCap {
        degree: index.to_u128().unwrap_or(u128::MAX),
        cap,
    })?;
    let sub_chain = h.chain().clone();
    let key_points: Vec<u32> = g.chain().base().iter().map(|&b| b as u32).collect();
    let key = |c: &Permutation| -> Vec<u32> { key_points.iter().map(|&b| c.image(b)).collect() };

    let start = canonical_rep(&sub_chain, Permutation::identity(g.degree()));
    let mut reps = vec![start.clone()];
    let mut index_of = HashMap::with_capacity(index_small);
    index_of.insert(key(&start), 0u32);
    let gens = g.generators();
    let mut gen_images: Vec<Vec<u32>> = vec![Vec::with_capacity(index_small); gens.len()];
    let mut i = 0;
    while i < reps.len() {
        for (k, s) in gens.iter().enumerate() {
            let c = canonical_rep(&sub_chain, reps[i].mul(s));
            let kc = key(&c);
            let next = reps.len() as u32;
            let j = *index_of.entry(kc).or_insert(next);
            if j == next {
                reps.push(c);
            }
            gen_images[k].push(j);
        }
        i += 1;
    }
    debug_assert_eq!(reps.len(), index_small);
    let image_gens = gen_images.into_iter().map(Permutation::from_images_unchecked).collect();
    let image = PermGroup::new(reps.len(), image_gens)?.with_order_bound(g_order.clone());
    let kernel_order = &g_order / image.order();
    Ok(CosetAction {
        image,
        kernel_order,
        sub_chain,
        key_points,
        reps,
        index_of,
    })
}
