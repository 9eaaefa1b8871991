//! Composition length: a divide-and-conquer engine over induced actions,
//! an independent brute-force oracle for small groups, and closed forms
//! for the named families.

mod analytic;
mod oracle;
mod probe;
mod simple_orders;

pub use analytic::{composition_length_analytic, degree_analytic, gl_length, order_analytic};
pub use oracle::{composition_length_oracle, ORACLE_CAP};
pub use probe::{probe_normal_subgroup, DEFAULT_PROBE_BUDGET};
pub use simple_orders::is_simple_order;

use std::fmt;

use num_traits::{One, ToPrimitive};

use crate::actions::{block_action, find_block_system, restrict_to_orbit};
use crate::error::{Error, Result};
use crate::perm::{omega, PermGroup, DEFAULT_DEGREE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Certainty {
    /// Some simple leaf rests only on the probe failing to find a normal
    /// subgroup.
    Probable,
    Certified,
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certainty::Certified => "certified",
            Certainty::Probable => "probable",
        })
    }
}

/// One reduction in the recursion, with the group it was applied to.
#[derive(Clone, Debug)]
pub struct Trace {
    pub group: PermGroup,
    pub length: u32,
    pub step: Step,
}

#[derive(Clone, Debug)]
pub enum Step {
    Trivial,
    /// Action on the first nontrivial orbit and its kernel.
    OrbitSplit {
        image: Box<Trace>,
        kernel: Box<Trace>,
    },
    /// Action on a block system and its kernel.
    BlockSplit {
        image: Box<Trace>,
        kernel: Box<Trace>,
    },
    /// Derived subgroup plus the abelian quotient, `Omega(|G/D|)`.
    DerivedSplit {
        derived: Box<Trace>,
        quotient_omega: u32,
    },
    /// Transitive normal subgroup `N`: `c(N) + c(G_a) - c(N_a)`.
    NormalSplit {
        normal: Box<Trace>,
        stabilizer: Box<Trace>,
        intersection: Box<Trace>,
    },
    AbelianLeaf {
        omega: u32,
    },
    /// No normal subgroup found; `corroborated` when the order is that of a
    /// simple group.
    SimpleLeaf {
        corroborated: bool,
    },
}

impl Trace {
    fn leaf(group: PermGroup, length: u32, step: Step) -> Trace {
        Trace { group, length, step }
    }

    pub fn children(&self) -> Vec<&Trace> {
        match &self.step {
            Step::OrbitSplit { image, kernel } | Step::BlockSplit { image, kernel } => vec![image, kernel],
            Step::DerivedSplit { derived, .. } => vec![derived],
            Step::NormalSplit {
                normal,
                stabilizer,
                intersection,
            } => vec![normal, stabilizer, intersection],
            _ => Vec::new(),
        }
    }

    pub fn certainty(&self) -> Certainty {
        match &self.step {
            Step::SimpleLeaf { corroborated: false } => Certainty::Probable,
            _ => self
                .children()
                .iter()
                .map(|c| c.certainty())
                .min()
                .unwrap_or(Certainty::Certified),
        }
    }

    /// Checks every node: its length is the stated combination of the
    /// children's lengths, and the matching order law holds.
    pub fn audit(&self) -> std::result::Result<(), String> {
        self.audit_with(&mut |_| None)
    }

    /// As `audit`, and also compares every node's length with `recompute`
    /// wherever it returns a value.
    pub fn audit_with(&self, recompute: &mut dyn FnMut(&PermGroup) -> Option<u32>) -> std::result::Result<(), String> {
        let order = self.group.order();
        let fail = |what: &str| Err(format!("{} at a node of degree {}", what, self.group.degree()));
        let expected = match &self.step {
            Step::Trivial => {
                if !order.is_one() {
                    return fail("trivial leaf on a nontrivial group");
                }
                0
            }
            Step::OrbitSplit { image, kernel } | Step::BlockSplit { image, kernel } => {
                if image.group.order() * kernel.group.order() != order {
                    return fail("image and kernel orders do not multiply to the group order");
                }
                image.length + kernel.length
            }
            Step::DerivedSplit {
                derived,
                quotient_omega,
            } => {
                let q = &order / derived.group.order();
                if &q * derived.group.order() != order || q.to_u64().map(omega) != Some(*quotient_omega) {
                    return fail("derived quotient mismatch");
                }
                derived.length + quotient_omega
            }
            Step::NormalSplit {
                normal,
                stabilizer,
                intersection,
            } => {
                if normal.group.order() * stabilizer.group.order() != &order * intersection.group.order() {
                    return fail("stabilizer factorization does not hold");
                }
                (normal.length + stabilizer.length)
                    .checked_sub(intersection.length)
                    .ok_or_else(|| "negative length".to_string())?
            }
            Step::AbelianLeaf { omega: w } => {
                if order.to_u64().map(omega) != Some(*w) {
                    return fail("abelian leaf length is not Omega of the order");
                }
                *w
            }
            Step::SimpleLeaf { .. } => 1,
        };
        if expected != self.length {
            return fail(&format!("length {} but parts give {}", self.length, expected));
        }
        if let Some(c) = recompute(&self.group) {
            if c != self.length {
                return fail(&format!("length {} but recomputed {}", self.length, c));
            }
        }
        for child in self.children() {
            child.audit_with(recompute)?;
        }
        Ok(())
    }

    /// Abelian composition factors, counted through the same recursion as
    /// the length. Zero means the group has no nontrivial soluble normal
    /// subgroup.
    pub fn abelian_factors(&self) -> u32 {
        match &self.step {
            Step::Trivial => 0,
            Step::OrbitSplit { image, kernel } | Step::BlockSplit { image, kernel } => {
                image.abelian_factors() + kernel.abelian_factors()
            }
            Step::DerivedSplit {
                derived,
                quotient_omega,
            } => derived.abelian_factors() + quotient_omega,
            Step::NormalSplit {
                normal,
                stabilizer,
                intersection,
            } => normal.abelian_factors() + stabilizer.abelian_factors() - intersection.abelian_factors(),
            Step::AbelianLeaf { omega } => *omega,
            Step::SimpleLeaf { .. } => u32::from(self.group.omega_order() == 1),
        }
    }

    /// Number of nodes in the trace.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }
}

#[derive(Clone, Debug)]
pub struct LengthResult {
    pub length: u32,
    pub certainty: Certainty,
    pub trace: Trace,
}

#[derive(Clone, Copy, Debug)]
pub struct EngineOptions {
    pub probe_budget: usize,
    pub seed: u64,
    pub degree_cap: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            probe_budget: DEFAULT_PROBE_BUDGET,
            seed: 0x5eed,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

pub fn composition_length(g: &PermGroup) -> Result<LengthResult> {
    composition_length_with(g, &EngineOptions::default())
}

pub fn composition_length_with(g: &PermGroup, opts: &EngineOptions) -> Result<LengthResult> {
    if g.degree() > opts.degree_cap {
        return Err(Error::DegreeCap {
            degree: g.degree() as u128,
            cap: opts.degree_cap,
        });
    }
    let trace = recurse(g, opts, 0)?;
    Ok(LengthResult {
        length: trace.length,
        certainty: trace.certainty(),
        trace,
    })
}

fn recurse(g: &PermGroup, opts: &EngineOptions, depth: u64) -> Result<Trace> {
    let order = g.order();
    if order.is_one() {
        return Ok(Trace::leaf(g.clone(), 0, Step::Trivial));
    }
    // Induced groups arrive with many strong generators; every step below
    // costs at least linearly in their number.
    let g = &g.reduced();
    let orbits = g.orbits();
    if orbits.len() > 1 {
        let orbit = orbits
            .iter()
            .find(|o| o.len() > 1)
            .expect("nontrivial group moves a point");
        let split = restrict_to_orbit(g, orbit)?;
        let image = recurse(&split.image, opts, depth + 1)?;
        let kernel = recurse(&split.kernel, opts, depth + 1)?;
        return Ok(Trace {
            group: g.clone(),
            length: image.length + kernel.length,
            step: Step::OrbitSplit {
                image: Box::new(image),
                kernel: Box::new(kernel),
            },
        });
    }
    if let Some(blocks) = find_block_system(g)? {
        let split = block_action(g, &blocks)?;
        let image = recurse(&split.image, opts, depth + 1)?;
        let kernel = recurse(&split.kernel, opts, depth + 1)?;
        return Ok(Trace {
            group: g.clone(),
            length: image.length + kernel.length,
            step: Step::BlockSplit {
                image: Box::new(image),
                kernel: Box::new(kernel),
            },
        });
    }
    // Primitive.
    let derived = g.derived_subgroup();
    let d_order = derived.order();
    if d_order.is_one() {
        let w = g.omega_order();
        return Ok(Trace::leaf(g.clone(), w, Step::AbelianLeaf { omega: w }));
    }
    if d_order < order {
        // Omega by factoring orbit lengths of both chains.
        let quotient_omega = g.omega_order() - derived.omega_order();
        let d = recurse(&derived, opts, depth + 1)?;
        return Ok(Trace {
            group: g.clone(),
            length: d.length + quotient_omega,
            step: Step::DerivedSplit {
                derived: Box::new(d),
                quotient_omega,
            },
        });
    }
    // Perfect and primitive.
    let seed = opts.seed ^ depth.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ g.degree() as u64;
    if let Some(n) = probe_normal_subgroup(g, opts.probe_budget, seed) {
        if !n.is_transitive() {
            return Err(Error::Unsupported(
                "intransitive normal subgroup of a primitive group".into(),
            ));
        }
        let stab = g.point_stabilizer(0)?;
        let n_stab = n.point_stabilizer(0)?;
        let nt = recurse(&n, opts, depth + 1)?;
        let st = recurse(&stab, opts, depth + 1)?;
        let it = recurse(&n_stab, opts, depth + 1)?;
        let length = nt.length + st.length - it.length;
        return Ok(Trace {
            group: g.clone(),
            length,
            step: Step::NormalSplit {
                normal: Box::new(nt),
                stabilizer: Box::new(st),
                intersection: Box::new(it),
            },
        });
    }
    let corroborated = is_simple_order(&order);
    Ok(Trace::leaf(g.clone(), 1, Step::SimpleLeaf { corroborated }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alternating, cyclic, symmetric, t_k, wreath_product_action};
    use num_bigint::BigUint;

    #[test]
    fn small_cases() {
        assert_eq!(composition_length(&PermGroup::trivial(3)).unwrap().length, 0);
        assert_eq!(composition_length(&symmetric(4).unwrap()).unwrap().length, 4);
        assert_eq!(composition_length(&symmetric(5).unwrap()).unwrap().length, 2);
        let a5 = composition_length(&alternating(5).unwrap()).unwrap();
        assert_eq!(a5.length, 1);
        assert_eq!(a5.certainty, Certainty::Certified);
        assert_eq!(composition_length(&cyclic(12).unwrap()).unwrap().length, 3);
    }

    #[test]
    fn t2_is_twenty() {
        let r = composition_length(&t_k(2).unwrap()).unwrap();
        assert_eq!(r.length, 20);
        assert_eq!(r.certainty, Certainty::Certified);
        r.trace.audit().unwrap();
    }

    #[test]
    fn probe_examples() {
        let s5 = symmetric(5).unwrap();
        let n = probe_normal_subgroup(&s5, 64, 1).unwrap();
        assert_eq!(n.order(), BigUint::from(60u32));
        assert!(probe_normal_subgroup(&alternating(5).unwrap(), 64, 1).is_none());
        let a5sq = wreath_product_action(&alternating(5).unwrap(), &PermGroup::trivial(2)).unwrap();
        assert_eq!(a5sq.degree(), 25);
        let n = probe_normal_subgroup(&a5sq, 64, 1).unwrap();
        assert_eq!(n.order(), BigUint::from(60u32));
    }

    #[test]
    fn product_of_simple_groups() {
        let a5sq = wreath_product_action(&alternating(5).unwrap(), &PermGroup::trivial(2)).unwrap();
        let r = composition_length(&a5sq).unwrap();
        assert_eq!(r.length, 2);
        assert_eq!(r.trace.abelian_factors(), 0);
        let s4 = composition_length(&symmetric(4).unwrap()).unwrap();
        assert_eq!(s4.trace.abelian_factors(), 4);
        let s5 = composition_length(&symmetric(5).unwrap()).unwrap();
        assert_eq!(s5.trace.abelian_factors(), 1);
        r.trace.audit().unwrap();
    }
}
