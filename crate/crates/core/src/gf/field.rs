use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::factorize;

/// Conway polynomials for the non-prime fields of order at most 256,
/// coefficients from the constant term up.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// A finite field of order `q = p^f <= 256`.
///
/// Elements are the integers `0..q`, read as base-`p` digit strings giving
/// polynomial coefficients (digit `i` is the coefficient of `x^i`) modulo
/// the field's Conway polynomial. Arithmetic goes through full tables.
#[derive(Debug)]
pub struct Field {
    p: u32,
    f: u32,
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

impl Field {
    pub fn new(q: u32) -> Result<Arc<Field>> {
        if !(2..=256).contains(&q) {
            return Err(Error::OutOfRange(format!("field order {} not in 2..=256", q)));
        }
        let fac = factorize(q as u64);
        if fac.len() != 1 {
            return Err(Error::OutOfRange(format!("{} is not a prime power", q)));
        }
        let (p, f) = (fac[0].0 as u32, fac[0].1);
        let poly: Vec<u32> = if f == 1 {
            vec![0, 1]
        } else {
            CONWAY
                .iter()
                .find(|(pp, ff, _)| *pp == p && *ff == f)
                .map(|(_, _, c)| c.to_vec())
                .expect("table covers every prime power up to 256")
        };
        let qs = q as usize;
        let digits = |mut a: u32| -> Vec<u32> {
            (0..f)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let encode = |ds: &[u32]| -> u32 { ds.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&s) as u8;
                let prod = if f == 1 {
                    (a * b) % p
                } else {
                    let mut c = vec![0u32; 2 * f as usize];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            c[i + j] = (c[i + j] + x * y) % p;
                        }
                    }
                    // Reduce by the monic polynomial from the top degree down.
                    for deg in (f as usize..c.len()).rev() {
                        let lead = c[deg];
                        if lead != 0 {
                            for (k, &pk) in poly.iter().enumerate() {
                                let idx = deg - f as usize + k;
                                c[idx] = (c[idx] + (p - lead) * pk) % p;
                            }
                        }
                    }
                    encode(&c[..f as usize])
                };
                mul[(a * q + b) as usize] = prod as u8;
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            for b in 0..qs {
                if add[a * qs + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * qs + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        let mut field = Field {
            p,
            f,
            q,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = if f == 1 {
            (2..q)
                .find(|&g| field.multiplicative_order(g as u8) == q - 1)
                .unwrap_or(1) as u8
        } else {
            p as u8
        };
        Ok(Arc::new(field))
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// The fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; zero maps to zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn multiplicative_order(&self, a: u8) -> u32 {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_tabulated_polynomial_is_primitive() {
        for q in 2..=256u32 {
            if factorize(q as u64).len() != 1 {
                continue;
            }
            let f = Field::new(q).unwrap();
            assert_eq!(f.multiplicative_order(f.primitive_element()), q - 1, "q = {}", q);
        }
    }

    #[test]
    fn field_axioms_small() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16] {
            let f = Field::new(q).unwrap();
            let q = q as u8;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(Field::new(6).is_err());
        assert!(Field::new(257).is_err());
        assert!(Field::new(1).is_err());
    }
}
