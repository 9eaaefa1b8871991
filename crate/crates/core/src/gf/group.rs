use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigUint;

use super::field::Field;
use super::mat::Mat;
use super::meataxe::{self, Constituent, Irreducibility};
use crate::constructions;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A group of invertible `d x d` matrices over `GF(q)`, acting on row
/// vectors.
#[derive(Clone, Debug)]
pub struct MatGroup {
    field: Arc<Field>,
    d: usize,
    gens: Vec<Mat>,
}

impl MatGroup {
    pub fn new(field: &Arc<Field>, d: usize, gens: Vec<Mat>) -> Result<MatGroup> {
        if d == 0 {
            return Err(Error::Matrix("dimension must be positive".into()));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.dim() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: g.dim(),
                });
            }
            if g.field().order() != field.order() {
                return Err(Error::Matrix(format!(
                    "generator {} is over GF({})",
                    i,
                    g.field().order()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::Matrix(format!("generator {} is singular", i)));
            }
        }
        Ok(MatGroup {
            field: field.clone(),
            d,
            gens,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Mat] {
        &self.gens
    }

    pub fn is_irreducible(&self, seed: u64) -> Result<Irreducibility> {
        meataxe::is_irreducible(&self.field, self.d, &self.gens, seed)
    }

    pub fn irreducible_constituents(&self, seed: u64) -> Result<Vec<Constituent>> {
        meataxe::irreducible_constituents(&self.field, self.d, &self.gens, seed)
    }

    /// Number of nonzero vectors, if it fits in a `u128`.
    pub fn nonzero_vectors(&self) -> Option<u128> {
        (self.field.order() as u128).checked_pow(self.d as u32).map(|x| x - 1)
    }

    /// Action on the nonzero vectors. Vector `x` is point
    /// `sum_i x_i q^i - 1`.
    pub fn to_perm(&self, cap: usize) -> Result<PermGroup> {
        let n = self
            .nonzero_vectors()
            .filter(|&n| n <= cap as u128)
            .ok_or_else(|| Error::DegreeCap {
                degree: self.nonzero_vectors().unwrap_or(u128::MAX),
                cap,
            })? as usize;
        let gens = self.gens.iter().map(|g| self.perm_of(g, n)).collect();
        PermGroup::new(n, gens)
    }

    fn perm_of(&self, g: &Mat, n: usize) -> Permutation {
        if self.field.order() == 2 && self.d <= 64 {
            let rows: Vec<u64> = (0..self.d).map(|i| g.packed_row(i).expect("packed")).collect();
            let images = (1..=n as u64)
                .map(|x| {
                    let mut y = 0u64;
                    let mut bits = x;
                    while bits != 0 {
                        y ^= rows[bits.trailing_zeros() as usize];
                        bits &= bits - 1;
                    }
                    (y - 1) as u32
                })
                .collect();
            return Permutation::from_images(images).expect("invertible matrix permutes vectors");
        }
        self.perm_of_generic(g, n)
    }

    fn perm_of_generic(&self, g: &Mat, n: usize) -> Permutation {
        let q = self.field.order() as usize;
        let images = (1..=n)
            .map(|x| {
                let mut v = Vec::with_capacity(self.d);
                let mut r = x;
                for _ in 0..self.d {
                    v.push((r % q) as u8);
                    r /= q;
                }
                let w = g.apply(&v);
                let idx = w.iter().rev().fold(0usize, |acc, &c| acc * q + c as usize);
                (idx - 1) as u32
            })
            .collect();
        Permutation::from_images(images).expect("invertible matrix permutes vectors")
    }

    /// `matgroup d q` followed by one `gen` block of `d` rows per generator.
    pub fn to_text(&self) -> String {
        let q = self.field.order();
        let mut s = format!("matgroup {} {}\n", self.d, q);
        for g in &self.gens {
            s.push_str("gen\n");
            for i in 0..self.d {
                let row = g.row(i);
                if q <= 16 {
                    for x in row {
                        let _ = write!(s, "{:x}", x);
                    }
                } else {
                    let parts: Vec<String> = row.iter().map(u8::to_string).collect();
                    s.push_str(&parts.join(" "));
                }
                s.push('\n');
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<MatGroup> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix group file".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let (d, q) = match parts.as_slice() {
            ["matgroup", d, q] => (
                d.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("dimension: {}", e)))?,
                q.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("field order: {}", e)))?,
            ),
            _ => return Err(Error::Parse(format!("bad header {:?}", header))),
        };
        let field = Field::new(q)?;
        let mut gens = Vec::new();
        while let Some(line) = lines.next() {
            if line != "gen" {
                return Err(Error::Parse(format!("expected `gen`, found {:?}", line)));
            }
            let mut rows = Vec::with_capacity(d);
            for _ in 0..d {
                let row = lines.next().ok_or_else(|| Error::Parse("truncated generator".into()))?;
                rows.push(parse_row(row, q)?);
            }
            gens.push(Mat::from_rows(&field, &rows)?);
        }
        MatGroup::new(&field, d, gens)
    }
}

fn parse_row(row: &str, q: u32) -> Result<Vec<u8>> {
    let bad = |t: &str| Error::Parse(format!("bad field element {:?}", t));
    if row.contains(|c: char| c.is_whitespace() || c == ',') {
        row.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|_| bad(t)))
            .collect()
    } else if q <= 16 {
        row.chars()
            .map(|c| c.to_digit(16).map(|x| x as u8).ok_or_else(|| bad(&c.to_string())))
            .collect()
    } else {
        Err(Error::Parse(format!("rows over GF({}) need separators", q)))
    }
}

/// `GL(2,2) wr T_k` on `GF(2)^(2 * 4^k)`: the natural generators of
/// `GL(2,2)` in the first 2-block and block permutation matrices for the
/// generators of `T_k`.
pub fn build_l(k: u32) -> Result<MatGroup> {
    if k > 2 {
        return Err(Error::OutOfRange(format!("L({}) supported for k <= 2", k)));
    }
    let field = Field::new(2)?;
    let top = constructions::t_k(k)?;
    let blocks = top.degree();
    let d = 2 * blocks;
    let mut gens = Vec::new();
    for m in [[[1u8, 1], [0, 1]], [[0, 1], [1, 0]]] {
        let mut g = Mat::identity(&field, d);
        for (i, row) in m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                g.set(i, j, x);
            }
        }
        gens.push(g);
    }
    for t in top.generators() {
        let perm: Vec<usize> = (0..d).map(|i| 2 * t.apply(i / 2) + i % 2).collect();
        gens.push(Mat::permutation(&field, &perm));
    }
    MatGroup::new(&field, d, gens)
}

/// Order law for `L_k`: `6^(4^k) * |T_k|`.
pub fn l_order(k: u32) -> BigUint {
    BigUint::from(6u32).pow(4u32.pow(k)) * constructions::t_order(k)
}

/// Diagonal matrices over `GF(q)` with one primitive-element generator per
/// coordinate: `GL(1,q)^d` acting block-diagonally.
pub fn gl1_power(d: usize, q: u32) -> Result<MatGroup> {
    let field = Field::new(q)?;
    let w = field.primitive_element();
    let gens = (0..d)
        .map(|i| {
            let mut g = Mat::identity(&field, d);
            g.set(i, i, w);
            g
        })
        .collect();
    MatGroup::new(&field, d, gens)
}
