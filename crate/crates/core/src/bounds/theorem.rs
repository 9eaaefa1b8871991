use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;

use super::expr::{ratio, BoundExpr};
use crate::error::{Error, Result};

/// The composition-length bounds the harness checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Any permutation group: `4/3 (n - r)` with `r` orbits.
    T12,
    /// Primitive groups: `8/3 log2 n - 4/3`.
    T13,
    /// Completely reducible linear groups in `GL(d, p^f)` with `r`
    /// constituents: `(8/3 log2 p - 1) d f - r (log2 f + 4/3)`.
    T14,
    /// Non-affine primitive groups: `10/3 log5 n - 4/3`.
    T15,
    /// Quasiprimitive, imprimitive groups: `c_na (log2 n - 1) - 4/3`.
    T16a,
    /// Semiprimitive, not quasiprimitive groups: `8/3 log2 n - 3`.
    T16b,
}

pub const ALL_THEOREMS: [Theorem; 6] = [
    Theorem::T12,
    Theorem::T13,
    Theorem::T14,
    Theorem::T15,
    Theorem::T16a,
    Theorem::T16b,
];

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown theorem {:?}", s)))
    }
}

/// Parameters a bound is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundParams {
    /// Degree and number of orbits.
    Perm { n: u64, r: u64 },
    /// Dimension, field `GF(p^f)`, number of irreducible constituents.
    Linear { d: u64, p: u64, f: u64, r: u64 },
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

pub fn bound_value(theorem: Theorem, params: BoundParams) -> Result<BoundExpr> {
    let bad = || Err(Error::OutOfRange(format!("{} does not take {:?}", theorem, params)));
    let int = |x: u64| BigRational::from_integer(x.into());
    match (theorem, params) {
        (Theorem::T14, BoundParams::Linear { d, p, f, r }) => {
            if d == 0 || f == 0 || r == 0 || r > d || !is_prime(p) {
                return bad();
            }
            // -df - 4r/3 + (8df/3) log2 p - r log2 f
            let a = -int(d * f) - ratio(4, 3) * int(r);
            let terms = vec![
                (ratio(8, 3) * int(d * f), BigUint::from(p)),
                (-int(r), BigUint::from(f)),
            ];
            BoundExpr::multi(a, 2, terms)
        }
        (Theorem::T14, _) | (_, BoundParams::Linear { .. }) => bad(),
        (_, BoundParams::Perm { n, r }) => {
            if n == 0 || r == 0 || r > n {
                return bad();
            }
            match theorem {
                Theorem::T12 => Ok(BoundExpr::constant(ratio(4, 3) * int(n - r))),
                Theorem::T13 => BoundExpr::log(ratio(-4, 3), ratio(8, 3), 2, n),
                Theorem::T15 => BoundExpr::log(ratio(-4, 3), ratio(10, 3), 5, n),
                // c_na = 10 / (3 log2 5), so c_na (log2 n - 1) = 10/3 log5(n/2).
                Theorem::T16a => BoundExpr::multi(
                    ratio(-4, 3),
                    5,
                    vec![(ratio(10, 3), BigUint::from(n)), (ratio(-10, 3), BigUint::from(2u32))],
                ),
                Theorem::T16b => BoundExpr::log(ratio(-3, 1), ratio(8, 3), 2, n),
                Theorem::T14 => unreachable!(),
            }
        }
    }
}
