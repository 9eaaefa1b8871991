use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::mat::Mat;
use super::subspace::{spin, Subspace};
use crate::error::{Error, Result};

/// Random algebra elements tried before giving up.
pub const DEFAULT_BUDGET: usize = 32;
/// Null spaces with more projective points than this are skipped.
const MAX_NULL_POINTS: usize = 4096;
const MAX_SHIFTS: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

/// Every nonzero vector of `span` up to scalars, or `None` above the cap.
fn projective_points(field: &Field, span: &[Vec<u8>]) -> Option<Vec<Vec<u8>>> {
    let q = field.order() as usize;
    let k = span.len();
    let mut count = 0usize;
    let mut qi = 1usize;
    for _ in 0..k {
        count = count.checked_add(qi)?;
        qi = qi.checked_mul(q)?;
    }
    if count > MAX_NULL_POINTS {
        return None;
    }
    let d = span.first().map_or(0, |v| v.len());
    let mut out = Vec::with_capacity(count);
    // Coefficient vectors whose first nonzero entry is 1.
    for lead in 0..k {
        let tail = k - lead - 1;
        for mut code in 0..q.pow(tail as u32) {
            let mut v = span[lead].clone();
            for t in 0..tail {
                let c = (code % q) as u8;
                code /= q;
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(&span[lead + 1 + t]) {
                        *x = field.add(*x, field.mul(c, y));
                    }
                }
            }
            debug_assert_eq!(v.len(), d);
            out.push(v);
        }
    }
    Some(out)
}

struct Algebra<'a> {
    field: &'a Arc<Field>,
    d: usize,
    pool: Vec<Mat>,
    rng: ChaCha8Rng,
}

impl<'a> Algebra<'a> {
    fn new(field: &'a Arc<Field>, d: usize, gens: &[Mat], seed: u64) -> Self {
        let mut pool = gens.to_vec();
        if pool.is_empty() {
            pool.push(Mat::identity(field, d));
        }
        Algebra {
            field,
            d,
            pool,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random linear combination of pool elements, after growing the pool
    /// by one random product.
    fn random_element(&mut self) -> Mat {
        let n = self.pool.len();
        let a = self.rng.gen_range(0..n);
        let b = self.rng.gen_range(0..n);
        let prod = self.pool[a].mul(&self.pool[b]);
        self.pool.push(prod);
        let q = self.field.order();
        let mut theta = Mat::zero(self.field, self.d);
        for m in &self.pool {
            let c = self.rng.gen_range(0..q) as u8;
            if c != 0 {
                theta = theta.add(&m.scale(c));
            }
        }
        theta
    }
}

/// Norton's irreducibility test on the row module `GF(q)^d` of `gens`.
pub fn is_irreducible(field: &Arc<Field>, d: usize, gens: &[Mat], seed: u64) -> Result<Irreducibility> {
    is_irreducible_with_budget(field, d, gens, seed, DEFAULT_BUDGET)
}

pub fn is_irreducible_with_budget(
    field: &Arc<Field>,
    d: usize,
    gens: &[Mat],
    seed: u64,
    budget: usize,
) -> Result<Irreducibility> {
    if d == 0 {
        return Err(Error::Matrix("zero-dimensional module".into()));
    }
    if d == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let transposed: Vec<Mat> = gens.iter().map(Mat::transpose).collect();
    let mut alg = Algebra::new(field, d, gens, seed);
    let id = Mat::identity(field, d);
    let shifts: Vec<u8> = (0..field.order().min(MAX_SHIFTS as u32)).map(|x| x as u8).collect();
    for _ in 0..budget {
        let base = alg.random_element();
        for &lambda in &shifts {
            let theta = if lambda == 0 {
                base.clone()
            } else {
                base.add(&id.scale(field.neg(lambda)))
            };
            let null = theta.left_nullspace();
            if null.is_empty() {
                continue;
            }
            let Some(points) = projective_points(field, &null) else {
                continue;
            };
            for v in &points {
                let s = spin(field, d, std::slice::from_ref(v), gens);
                if !s.is_full() {
                    return Ok(Irreducibility::Reducible(s));
                }
            }
            let dual_null = theta.transpose().left_nullspace();
            let u = spin(field, d, &dual_null[..1], &transposed);
            if !u.is_full() {
                return Ok(Irreducibility::Reducible(u.annihilator()));
            }
            return Ok(Irreducibility::Irreducible);
        }
    }
    Err(Error::Undecided(budget))
}

/// An irreducible constituent: an invariant subspace of the ambient space.
#[derive(Clone, Debug)]
pub struct Constituent {
    pub space: Subspace,
}

impl Constituent {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Decomposes a completely reducible module as a direct sum of irreducible
/// invariant subspaces. Fails when no complement can be found for the
/// submodules already collected.
pub fn irreducible_constituents(field: &Arc<Field>, d: usize, gens: &[Mat], seed: u64) -> Result<Vec<Constituent>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = Subspace::zero(field, d);
    let mut out = Vec::new();
    let q = field.order();
    while !sum.is_full() {
        let mut found = None;
        for _ in 0..DEFAULT_BUDGET {
            let v = loop {
                let v: Vec<u8> = (0..d).map(|_| rng.gen_range(0..q) as u8).collect();
                if !sum.contains(&v) {
                    break v;
                }
            };
            let m = spin(field, d, &[v], gens);
            if let Some(y) = irreducible_outside(field, gens, m, &sum, rng.gen())? {
                found = Some(y);
                break;
            }
        }
        let y = found.ok_or_else(|| {
            Error::NotCompletelyReducible(format!(
                "no invariant complement found for a submodule of dimension {}",
                sum.dim()
            ))
        })?;
        debug_assert!(y.meets_trivially(&sum));
        sum = sum.join(&y);
        out.push(Constituent { space: y });
    }
    Ok(out)
}

/// An irreducible submodule of `m` meeting `avoid` trivially, searched by
/// descent through meataxe witnesses and spun null vectors.
fn irreducible_outside(
    field: &Arc<Field>,
    gens: &[Mat],
    mut m: Subspace,
    avoid: &Subspace,
    seed: u64,
) -> Result<Option<Subspace>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'descend: loop {
        let local = m.restrict(gens);
        let k = m.dim();
        match is_irreducible(field, k, &local, rng.gen())? {
            Irreducibility::Irreducible => {
                return Ok(m.meets_trivially(avoid).then_some(m));
            }
            Irreducibility::Reducible(w) => {
                let w = Subspace::span(
                    field,
                    m.ambient_dim(),
                    &w.basis().iter().map(|c| m.vector(c)).collect::<Vec<_>>(),
                );
                if !avoid.contains_subspace(&w) {
                    m = w;
                    continue;
                }
            }
        }
        // The witness lies inside `avoid`: look for a smaller submodule
        // through null vectors outside it.
        let mut alg = Algebra::new(field, k, &local, rng.gen());
        for _ in 0..DEFAULT_BUDGET {
            let theta = alg.random_element();
            let null = theta.left_nullspace();
            let Some(points) = projective_points(field, &null) else {
                continue;
            };
            for c in &points {
                let v = m.vector(c);
                if avoid.contains(&v) {
                    continue;
                }
                let s = spin(field, m.ambient_dim(), &[v], gens);
                if s.dim() < m.dim() {
                    m = s;
                    continue 'descend;
                }
            }
        }
        return Ok(None);
    }
}
