use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// A partition of the points into blocks of equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    block_of: Vec<u32>,
    num_blocks: usize,
    block_size: usize,
}

impl BlockSystem {
    /// Builds a system from an explicit list of blocks covering `0..degree`.
    pub fn from_blocks(degree: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut block_of = vec![u32::MAX; degree];
        let size = blocks.first().map_or(0, Vec::len);
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != size {
                return Err(Error::NotBlockSystem("blocks differ in size".into()));
            }
            for &x in b {
                if x >= degree || block_of[x] != u32::MAX {
                    return Err(Error::NotBlockSystem(format!("point {} misplaced", x)));
                }
                block_of[x] = i as u32;
            }
        }
        if block_of.contains(&u32::MAX) || size == 0 {
            return Err(Error::NotBlockSystem("blocks do not cover the points".into()));
        }
        Ok(BlockSystem {
            block_of,
            num_blocks: blocks.len(),
            block_size: size,
        })
    }

    /// Builds a system from a class label per point, renumbering classes
    /// by first appearance.
    pub(crate) fn from_labels(labels: &[usize]) -> Result<Self> {
        let mut renumber = std::collections::HashMap::new();
        let mut block_of = Vec::with_capacity(labels.len());
        let mut sizes = Vec::new();
        for &l in labels {
            let next = renumber.len();
            let id = *renumber.entry(l).or_insert(next);
            if id == sizes.len() {
                sizes.push(0usize);
            }
            sizes[id] += 1;
            block_of.push(id as u32);
        }
        if sizes.iter().any(|&s| s != sizes[0]) {
            return Err(Error::NotBlockSystem("blocks differ in size".into()));
        }
        Ok(BlockSystem {
            block_of,
            num_blocks: sizes.len(),
            block_size: sizes[0],
        })
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x] as usize
    }

    pub(crate) fn labels(&self) -> &[u32] {
        &self.block_of
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::with_capacity(self.block_size); self.num_blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b as usize].push(x);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.num_blocks <= 1 || self.block_size <= 1
    }

    /// Whether every generator maps blocks onto blocks.
    pub fn is_invariant_under(&self, g: &PermGroup) -> bool {
        if g.degree() != self.degree() {
            return false;
        }
        let blocks = self.blocks();
        g.generators().iter().all(|p| {
            blocks.iter().all(|b| {
                let target = self.block_of[p.apply(b[0])];
                b.iter().all(|&x| self.block_of[p.apply(x)] == target)
            })
        })
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}

/// Finest `G`-invariant partition in which `alpha` and `beta` share a
/// class (Atkinson's merge closure). `None` means the class is everything.
pub fn minimal_block_system(g: &PermGroup, alpha: usize, beta: usize) -> Result<Option<BlockSystem>> {
    let n = g.degree();
    for p in [alpha, beta] {
        if p >= n {
            return Err(Error::PointOutOfRange { point: p, degree: n });
        }
    }
    if alpha == beta {
        return Err(Error::OutOfRange("alpha and beta must differ".into()));
    }
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    let labels = merge_closure(g, alpha, beta);
    let system = BlockSystem::from_labels(&labels)?;
    Ok(if system.num_blocks() == 1 { None } else { Some(system) })
}

fn merge_closure(g: &PermGroup, alpha: usize, beta: usize) -> Vec<usize> {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    uf.union(alpha as u32, beta as u32);
    let mut queue = vec![(alpha as u32, beta as u32)];
    let mut merged = 1;
    while let Some((x, y)) = queue.pop() {
        for p in g.generators() {
            let (a, b) = (p.image(x), p.image(y));
            if uf.union(a, b) {
                queue.push((a, b));
                merged += 1;
                if merged == n - 1 {
                    return vec![0; n];
                }
            }
        }
    }
    (0..n as u32).map(|x| uf.find(x) as usize).collect()
}

/// Representatives of the orbits of the stabilizer of `alpha`, excluding
/// `alpha` itself. Blocks through `alpha` only depend on these.
fn suborbit_representatives(g: &PermGroup, alpha: usize) -> Vec<usize> {
    let stab = g.point_stabilizer(alpha).expect("alpha in range");
    stab.orbits()
        .into_iter()
        .filter(|o| o[0] != alpha || o.len() > 1)
        .map(|o| if o[0] == alpha { o[1] } else { o[0] })
        .collect()
}

/// Transitive with no nontrivial invariant partition.
pub fn is_primitive(g: &PermGroup) -> bool {
    let n = g.degree();
    if !g.is_transitive() {
        return false;
    }
    if n <= 3 || crate::perm::omega(n as u64) == 1 {
        return true;
    }
    suborbit_representatives(g, 0)
        .into_iter()
        .all(|beta| merge_closure(g, 0, beta).iter().all(|&c| c == 0))
}

/// A nontrivial block system of a transitive group, or `None` if it is
/// primitive. Among the minimal systems through point 0, the one with the
/// largest blocks is returned.
pub fn find_block_system(g: &PermGroup) -> Result<Option<BlockSystem>> {
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = g.degree();
    if n <= 3 || crate::perm::omega(n as u64) == 1 {
        return Ok(None);
    }
    let mut best: Option<BlockSystem> = None;
    for beta in suborbit_representatives(g, 0) {
        let labels = merge_closure(g, 0, beta);
        let system = BlockSystem::from_labels(&labels)?;
        if system.num_blocks() > 1 && best.as_ref().is_none_or(|b| system.block_size() > b.block_size()) {
            best = Some(system);
        }
    }
    Ok(best)
}
