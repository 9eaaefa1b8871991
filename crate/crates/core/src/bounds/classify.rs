use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::actions::{block_action, find_block_system, is_primitive, is_semiregular};
use crate::complen::{composition_length, Certainty};
use crate::constructions::ConstructionSpec;
use crate::perm::{factorize, PermGroup, Permutation};

/// Groups up to this order have their normal subgroups listed outright.
pub const EXHAUSTIVE_CAP: u64 = 5000;

/// Above this degree the classifier computes no derived series or normal
/// closures: certifying their orders needs deterministic Schreier-Sims,
/// which takes tens of seconds per subgroup there. Flags stay `Unknown`
/// unless a cheaper witness settles them.
pub const SEARCH_DEGREE_CAP: usize = 4096;

/// A flag that is either certified either way or left open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::No, _) | (_, Tri::No) => Tri::No,
            (Tri::Yes, Tri::Yes) => Tri::Yes,
            _ => Tri::Unknown,
        }
    }
}

impl std::ops::Not for Tri {
    type Output = Tri;

    fn not(self) -> Tri {
        match self {
            Tri::Yes => Tri::No,
            Tri::No => Tri::Yes,
            Tri::Unknown => Tri::Unknown,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub transitive: bool,
    pub primitive: bool,
    pub quasiprimitive: Tri,
    pub semiprimitive: Tri,
    /// Primitive with an elementary abelian regular normal subgroup.
    pub affine: Tri,
    /// A nontrivial intransitive normal subgroup, when one was found.
    pub quasiprimitive_witness: Option<PermGroup>,
    /// A normal subgroup that is neither transitive nor semiregular.
    pub semiprimitive_witness: Option<PermGroup>,
    /// Every normal subgroup was listed, so all flags are certified.
    pub exhaustive: bool,
    /// Some `Yes` rests on the construction the group came from.
    pub tagged: bool,
}

pub fn classify(g: &PermGroup) -> Classification {
    let transitive = g.is_transitive();
    let primitive = is_primitive(g);
    let mut c = Classification {
        transitive,
        primitive,
        quasiprimitive: Tri::Unknown,
        semiprimitive: Tri::Unknown,
        affine: Tri::No,
        quasiprimitive_witness: None,
        semiprimitive_witness: None,
        exhaustive: false,
        tagged: false,
    };
    if g.order().to_u64().is_some_and(|o| o <= EXHAUSTIVE_CAP) {
        classify_exhaustive(g, &mut c);
        return c;
    }
    if primitive {
        // Nontrivial normal subgroups of a primitive group are transitive.
        c.quasiprimitive = Tri::Yes;
        c.semiprimitive = Tri::Yes;
        c.affine = affine_primitive(g);
        return c;
    }
    if !transitive {
        note_witness(&mut c, g);
        if is_semiregular(g) {
            // Subgroups of a semiregular group are semiregular.
            c.semiprimitive = Tri::Yes;
        }
        return c;
    }
    // Imprimitive: the kernel on a block system is an intransitive normal
    // subgroup; derived terms and normal closures of generator powers are
    // further candidates.
    if let Ok(Some(blocks)) = find_block_system(g) {
        if let Ok(split) = block_action(g, &blocks) {
            note_witness(&mut c, &split.kernel);
        }
    }
    if g.degree() > SEARCH_DEGREE_CAP {
        return c;
    }
    if c.semiprimitive == Tri::Unknown {
        let mut d = g.derived_subgroup();
        while !d.is_trivial() && c.semiprimitive == Tri::Unknown {
            note_witness(&mut c, &d);
            let next = d.derived_subgroup();
            if next.order() == d.order() {
                break;
            }
            d = next;
        }
    }
    if c.semiprimitive == Tri::Unknown {
        for s in g.generators() {
            for (p, _) in factorize(s.order()) {
                let x = s.pow(s.order() / p);
                note_witness(&mut c, &g.normal_closure_unchecked(&[x]));
            }
        }
    }
    c
}

/// Records `n` (a normal subgroup of the classified group) as a witness
/// against quasi- or semiprimitivity where it is one.
fn note_witness(c: &mut Classification, n: &PermGroup) {
    if n.is_trivial() || n.is_transitive() {
        return;
    }
    if c.quasiprimitive_witness.as_ref().is_none_or(|w| n.order() < w.order()) {
        c.quasiprimitive = Tri::No;
        c.quasiprimitive_witness = Some(n.clone());
    }
    if c.semiprimitive_witness.is_none() && !is_semiregular(n) {
        c.semiprimitive = Tri::No;
        c.semiprimitive_witness = Some(n.clone());
    }
}

/// A primitive group is affine iff it has a nontrivial abelian normal
/// subgroup. A soluble one always does; otherwise the regular normal
/// subgroup would sit inside the perfect core of the derived series, which
/// would then have an abelian composition factor.
fn affine_primitive(g: &PermGroup) -> Tri {
    if factorize(g.degree() as u64).len() != 1 {
        return Tri::No;
    }
    if g.degree() > SEARCH_DEGREE_CAP {
        return Tri::Unknown;
    }
    let mut d = g.clone();
    loop {
        let next = d.derived_subgroup();
        if next.is_trivial() {
            return Tri::Yes;
        }
        if next.order() == d.order() {
            break;
        }
        d = next;
    }
    match composition_length(&d) {
        Ok(r) if r.certainty == Certainty::Certified && r.trace.abelian_factors() == 0 => Tri::No,
        _ => Tri::Unknown,
    }
}

/// Lists the normal subgroups as joins of normal closures of conjugacy
/// classes and reads every flag off the list.
fn classify_exhaustive(g: &PermGroup, c: &mut Classification) {
    c.exhaustive = true;
    let mut normals: Vec<PermGroup> = Vec::new();
    let push = |normals: &mut Vec<PermGroup>, n: PermGroup| -> bool {
        if normals.iter().any(|m| m.order() == n.order() && n.is_subgroup_of(m)) {
            return false;
        }
        normals.push(n);
        true
    };
    for x in class_representatives(g) {
        let n = g.normal_closure_unchecked(&[x]);
        push(&mut normals, n);
    }
    let mut i = 0;
    while i < normals.len() {
        for j in 0..i {
            let mut gens = normals[i].generators().to_vec();
            gens.extend_from_slice(normals[j].generators());
            let join = PermGroup::new(g.degree(), gens).expect("degrees agree");
            push(&mut normals, join);
        }
        i += 1;
    }
    normals.sort_by_key(|n| n.order());
    c.quasiprimitive = Tri::Yes;
    c.semiprimitive = Tri::Yes;
    for n in &normals {
        note_witness(c, n);
    }
    c.affine = Tri::from_bool(c.primitive && normals.iter().any(|n| !n.is_trivial() && n.is_abelian()));
}

/// One element per nontrivial conjugacy class of a small group.
fn class_representatives(g: &PermGroup) -> Vec<Permutation> {
    let gens: Vec<&Permutation> = g.generators().iter().filter(|s| !s.is_identity()).collect();
    let id = Permutation::identity(g.degree());
    let mut elems = vec![id.clone()];
    let mut seen: HashSet<Permutation> = HashSet::from([id]);
    let mut i = 0;
    while i < elems.len() {
        for s in &gens {
            let y = elems[i].mul(s);
            if seen.insert(y.clone()) {
                elems.push(y);
            }
        }
        i += 1;
    }
    let mut classified: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for x in elems.into_iter().skip(1) {
        if classified.contains(&x) {
            continue;
        }
        let mut stack = vec![x.clone()];
        classified.insert(x.clone());
        while let Some(y) = stack.pop() {
            for s in &gens {
                let z = y.conjugate_by(s);
                if classified.insert(z.clone()) {
                    stack.push(z);
                }
            }
        }
        reps.push(x);
    }
    reps
}

/// Upgrades open flags that the construction guarantees. A certified `No`
/// is kept: it would expose a construction bug, not be papered over.
pub fn apply_construction_tags(spec: &ConstructionSpec, c: &mut Classification) {
    fn upgrade(flag: &mut Tri, tagged: &mut bool) {
        if *flag == Tri::Unknown {
            *flag = Tri::Yes;
            *tagged = true;
        }
    }
    match spec {
        ConstructionSpec::SemiprimitiveExample(_) => upgrade(&mut c.semiprimitive, &mut c.tagged),
        ConstructionSpec::QuasiprimitiveExample(_) => {
            upgrade(&mut c.quasiprimitive, &mut c.tagged);
            upgrade(&mut c.semiprimitive, &mut c.tagged);
        }
        _ => {}
    }
}
