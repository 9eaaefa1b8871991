use std::sync::Arc;

use super::field::Field;
use super::mat::Mat;

/// A subspace of `GF(q)^d`, held as a basis in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Arc<Field>,
    d: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Arc<Field>, d: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            d,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Arc<Field>, d: usize) -> Subspace {
        let mut s = Subspace::zero(field, d);
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            s.insert(&e);
        }
        s
    }

    pub fn span(field: &Arc<Field>, d: usize, vectors: &[Vec<u8>]) -> Subspace {
        let mut s = Subspace::zero(field, d);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.d
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// `v` minus its projection along the echelon basis.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in w.iter_mut().zip(r) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = f.inv(w[p]);
        for x in w.iter_mut() {
            *x = f.mul(*x, s);
        }
        for r in self.rows.iter_mut() {
            let c = r[p];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in r.iter_mut().zip(&w) {
                    *x = f.add(*x, f.mul(nc, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    /// Coordinates of a vector of the subspace in the echelon basis.
    pub fn coordinates(&self, v: &[u8]) -> Vec<u8> {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    /// Ambient vector with the given coordinates.
    pub fn vector(&self, coords: &[u8]) -> Vec<u8> {
        let f = &self.field;
        let mut v = vec![0; self.d];
        for (&c, r) in coords.iter().zip(&self.rows) {
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    pub fn is_invariant_under(&self, gens: &[Mat]) -> bool {
        gens.iter()
            .all(|g| self.rows.iter().all(|r| self.contains(&g.apply(r))))
    }

    /// Matrices of the generators acting on this (invariant) subspace, in
    /// echelon coordinates.
    pub fn restrict(&self, gens: &[Mat]) -> Vec<Mat> {
        gens.iter()
            .map(|g| {
                let rows: Vec<Vec<u8>> = self.rows.iter().map(|r| self.coordinates(&g.apply(r))).collect();
                Mat::from_rows(&self.field, &rows).expect("restricted rows are square")
            })
            .collect()
    }

    /// `{v : v . u = 0 for all u in self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        // Left kernel of the d x dim matrix whose columns are the basis.
        let cols: Vec<Vec<u8>> = (0..self.d).map(|i| self.rows.iter().map(|r| r[i]).collect()).collect();
        let basis = left_nullspace(&self.field, &cols, self.rows.len());
        Subspace::span(&self.field, self.d, &basis)
    }

    pub fn meets_trivially(&self, other: &Subspace) -> bool {
        let mut s = self.clone();
        other.rows.iter().all(|r| s.insert(r))
    }

    /// The sum of two subspaces.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.pivots == other.pivots && self.rows == other.rows
    }
}

/// Basis of `{c : sum_i c_i rows[i] = 0}`, where every row has `ncols`
/// entries.
pub fn left_nullspace(field: &Arc<Field>, rows: &[Vec<u8>], ncols: usize) -> Vec<Vec<u8>> {
    let m = rows.len();
    // Eliminate on [rows | I]; rows whose left part vanishes give the kernel.
    let mut aug: Vec<Vec<u8>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            a.resize(ncols + m, 0);
            a[ncols + i] = 1;
            a
        })
        .collect();
    let f = field;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m).find(|&i| aug[i][col] != 0) else {
            continue;
        };
        aug.swap(rank, piv);
        let s = f.inv(aug[rank][col]);
        for x in aug[rank].iter_mut() {
            *x = f.mul(*x, s);
        }
        let pivot_row = aug[rank].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let nc = f.neg(row[col]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        rank += 1;
    }
    aug[rank..].iter().map(|r| r[ncols..].to_vec()).collect()
}

/// Smallest subspace containing the seeds and invariant under `gens`.
pub fn spin(field: &Arc<Field>, d: usize, seeds: &[Vec<u8>], gens: &[Mat]) -> Subspace {
    let mut s = Subspace::zero(field, d);
    let mut queue: Vec<Vec<u8>> = Vec::new();
    for v in seeds {
        if s.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if s.is_full() {
            break;
        }
        for g in gens {
            let w = g.apply(&v);
            if s.insert(&w) {
                queue.push(w);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl22(f: &Arc<Field>) -> Vec<Mat> {
        vec![
            Mat::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap(),
            Mat::from_rows(f, &[vec![0, 1], vec![1, 0]]).unwrap(),
        ]
    }

    fn block_diag(f: &Arc<Field>, a: &Mat, b: &Mat) -> Mat {
        let (m, n) = (a.dim(), b.dim());
        let mut out = Mat::zero(f, m + n);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, a.get(i, j));
            }
        }
        for i in 0..n {
            for j in 0..n {
                out.set(m + i, m + j, b.get(i, j));
            }
        }
        out
    }

    #[test]
    fn spin_examples() {
        let f = Field::new(2).unwrap();
        let g = gl22(&f);
        assert!(spin(&f, 2, &[vec![1, 0]], &g).is_full());

        let i2 = Mat::identity(&f, 2);
        let mut gens: Vec<Mat> = g.iter().map(|x| block_diag(&f, x, &i2)).collect();
        gens.extend(g.iter().map(|x| block_diag(&f, &i2, x)));
        let s = spin(&f, 4, &[vec![1, 0, 0, 0]], &gens);
        assert_eq!(s.dim(), 2);
        assert!(s.is_invariant_under(&gens));
        assert!(s.contains(&[0, 1, 0, 0]));

        gens.push(Mat::permutation(&f, &[2, 3, 0, 1]));
        assert_eq!(spin(&f, 4, &[vec![1, 0, 1, 0]], &gens).dim(), 4);
    }

    #[test]
    fn annihilator_pairs_to_zero() {
        let f = Field::new(5).unwrap();
        let s = Subspace::span(&f, 4, &[vec![1, 2, 3, 4], vec![0, 1, 1, 0]]);
        let a = s.annihilator();
        assert_eq!(a.dim(), 2);
        for u in s.basis() {
            for v in a.basis() {
                let dot = u.iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let f = Field::new(9).unwrap();
        let s = Subspace::span(&f, 3, &[vec![1, 5, 0], vec![0, 3, 7]]);
        let v = s.vector(&[4, 2]);
        assert!(s.contains(&v));
        assert_eq!(s.coordinates(&v), vec![4, 2]);
    }
}
