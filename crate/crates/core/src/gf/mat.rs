use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::subspace::left_nullspace;
use crate::error::{Error, Result};

#[derive(Clone)]
enum Storage {
    /// GF(2): row `i` occupies `words` consecutive `u64`s, bit `j` of the
    /// row is entry `(i, j)`.
    Packed { words: usize, bits: Vec<u64> },
    /// Any other field: one byte per entry, row-major.
    Bytes(Vec<u8>),
}

/// A square matrix over a small finite field. Vectors are rows and act on
/// the right: `v -> v * M`.
#[derive(Clone)]
pub struct Mat {
    field: Arc<Field>,
    d: usize,
    data: Storage,
}

impl Mat {
    pub fn zero(field: &Arc<Field>, d: usize) -> Mat {
        let data = if field.order() == 2 {
            let words = d.div_ceil(64).max(1);
            Storage::Packed {
                words,
                bits: vec![0; words * d],
            }
        } else {
            Storage::Bytes(vec![0; d * d])
        };
        Mat {
            field: field.clone(),
            d,
            data,
        }
    }

    pub fn identity(field: &Arc<Field>, d: usize) -> Mat {
        let mut m = Mat::zero(field, d);
        for i in 0..d {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Arc<Field>, rows: &[Vec<u8>]) -> Result<Mat> {
        let d = rows.len();
        let mut m = Mat::zero(field, d);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != d {
                return Err(Error::Matrix(format!(
                    "row {} has length {}, expected {}",
                    i,
                    r.len(),
                    d
                )));
            }
            for (j, &x) in r.iter().enumerate() {
                if x as u32 >= field.order() {
                    return Err(Error::Matrix(format!("entry {} not in GF({})", x, field.order())));
                }
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// Permutation matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(field: &Arc<Field>, perm: &[usize]) -> Mat {
        let mut m = Mat::zero(field, perm.len());
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        match &self.data {
            Storage::Packed { words, bits } => ((bits[i * words + j / 64] >> (j % 64)) & 1) as u8,
            Storage::Bytes(b) => b[i * self.d + j],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        let d = self.d;
        match &mut self.data {
            Storage::Packed { words, bits } => {
                let w = &mut bits[i * *words + j / 64];
                if x & 1 == 1 {
                    *w |= 1 << (j % 64);
                } else {
                    *w &= !(1 << (j % 64));
                }
            }
            Storage::Bytes(b) => b[i * d + j] = x,
        }
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.d).map(|j| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.d).map(|i| self.row(i)).collect()
    }

    /// Row `i` of a GF(2) matrix of dimension at most 64 as a bit mask.
    pub(crate) fn packed_row(&self, i: usize) -> Option<u64> {
        match &self.data {
            Storage::Packed { words: 1, bits } => Some(bits[i]),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.d, other.d, "dimension mismatch");
        let d = self.d;
        match (&self.data, &other.data) {
            (Storage::Packed { words, bits: a }, Storage::Packed { bits: b, .. }) => {
                let w = *words;
                let mut out = vec![0u64; w * d];
                for i in 0..d {
                    let dst = &mut out[i * w..(i + 1) * w];
                    for j in 0..d {
                        if (a[i * w + j / 64] >> (j % 64)) & 1 == 1 {
                            for (x, y) in dst.iter_mut().zip(&b[j * w..(j + 1) * w]) {
                                *x ^= y;
                            }
                        }
                    }
                }
                Mat {
                    field: self.field.clone(),
                    d,
                    data: Storage::Packed { words: w, bits: out },
                }
            }
            _ => self.mul_entrywise(other),
        }
    }

    /// Schoolbook product through `get`/`set`, independent of the storage.
    pub fn mul_entrywise(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let mut m = Mat::zero(f, self.d);
        for i in 0..self.d {
            for k in 0..self.d {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..self.d {
                    let cur = m.get(i, j);
                    m.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        m
    }

    pub fn add(&self, other: &Mat) -> Mat {
        let f = &self.field;
        let mut m = Mat::zero(f, self.d);
        for i in 0..self.d {
            for j in 0..self.d {
                m.set(i, j, f.add(self.get(i, j), other.get(i, j)));
            }
        }
        m
    }

    pub fn scale(&self, c: u8) -> Mat {
        let f = &self.field;
        let mut m = Mat::zero(f, self.d);
        for i in 0..self.d {
            for j in 0..self.d {
                m.set(i, j, f.mul(c, self.get(i, j)));
            }
        }
        m
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zero(&self.field, self.d);
        for i in 0..self.d {
            for j in 0..self.d {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    /// `v * M`.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let f = &self.field;
        let mut out = vec![0u8; self.d];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(x, self.get(i, j)));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.d - left_nullspace(&self.field, &self.rows(), self.d).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.d
    }

    pub fn is_identity(&self) -> bool {
        (0..self.d).all(|i| (0..self.d).all(|j| self.get(i, j) == (i == j) as u8))
    }

    /// `{v : v * M = 0}`, as a basis.
    pub fn left_nullspace(&self) -> Vec<Vec<u8>> {
        left_nullspace(&self.field, &self.rows(), self.d)
    }
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order()
            && self.d == other.d
            && (0..self.d).all(|i| (0..self.d).all(|j| self.get(i, j) == other.get(i, j)))
    }
}

impl Eq for Mat {}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat over GF({}) dim {}", self.field.order(), self.d)?;
        for i in 0..self.d {
            let r: Vec<String> = self.row(i).iter().map(|x| format!("{:x}", x)).collect();
            writeln!(f, "  {}", r.join(" "))?;
        }
        Ok(())
    }
}
