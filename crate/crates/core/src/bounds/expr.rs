use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponents beyond this many bits of output are refused rather than
/// computed; every bound in the toolkit stays far below it.
const MAX_POWER_BITS: u64 = 1 << 26;

/// `a + sum b_i log_base(m_i)` with rational `a`, `b_i` and integers
/// `base >= 2`, `m_i >= 1`. Comparisons with rationals are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundExpr {
    a: BigRational,
    base: u64,
    terms: Vec<(BigRational, BigUint)>,
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl BoundExpr {
    pub fn constant(a: BigRational) -> Self {
        BoundExpr {
            a,
            base: 2,
            terms: Vec::new(),
        }
    }

    /// `a + b log_base(m)`.
    pub fn log(a: BigRational, b: BigRational, base: u64, m: impl Into<BigUint>) -> Result<Self> {
        BoundExpr::multi(a, base, vec![(b, m.into())])
    }

    pub fn multi(a: BigRational, base: u64, terms: Vec<(BigRational, BigUint)>) -> Result<Self> {
        if base < 2 {
            return Err(Error::OutOfRange(format!("logarithm base {}", base)));
        }
        if terms.iter().any(|(_, m)| m.is_zero()) {
            return Err(Error::OutOfRange("logarithm of zero".into()));
        }
        let terms = terms.into_iter().filter(|(b, m)| !b.is_zero() && !m.is_one()).collect();
        Ok(BoundExpr { a, base, terms })
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.a
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn terms(&self) -> &[(BigRational, BigUint)] {
        &self.terms
    }

    /// Sign of `self - t`, decided in integers: with `D` clearing every
    /// denominator, compare `base^((a - t) D) * prod m_i^(b_i D)` with 1.
    pub fn cmp_rational(&self, t: &BigRational) -> Result<Ordering> {
        let diff = &self.a - t;
        if self.terms.is_empty() {
            return Ok(diff.cmp(&BigRational::zero()));
        }
        let mut den = diff.denom().clone();
        for (b, _) in &self.terms {
            den = den.lcm(b.denom());
        }
        let scale = |r: &BigRational| -> BigInt { r.numer() * (&den / r.denom()) };
        let mut lhs = BigUint::one();
        let mut rhs = BigUint::one();
        let base = BigUint::from(self.base);
        let mut factors = vec![(scale(&diff), &base)];
        for (b, m) in &self.terms {
            factors.push((scale(b), m));
        }
        for (e, m) in factors {
            let side = if e.sign() == Sign::Minus { &mut rhs } else { &mut lhs };
            *side *= checked_pow(m, &e.abs())?;
        }
        Ok(lhs.cmp(&rhs))
    }

    pub fn cmp_integer(&self, t: u64) -> Result<Ordering> {
        self.cmp_rational(&BigRational::from_integer(t.into()))
    }

    /// Floating value, for display and cross-checks only.
    pub fn to_f64(&self) -> f64 {
        let ln_base = (self.base as f64).ln();
        let logs: f64 = self
            .terms
            .iter()
            .map(|(b, m)| rational_f64(b) * ln_biguint(m) / ln_base)
            .sum();
        rational_f64(&self.a) + logs
    }

    /// The exact rational value when every term vanishes or the arguments
    /// are integer powers of the base.
    pub fn as_rational(&self) -> Option<BigRational> {
        let mut v = self.a.clone();
        for (b, m) in &self.terms {
            v += b * BigRational::from_integer(exact_log(m, self.base)?.into());
        }
        Some(v)
    }
}

fn checked_pow(m: &BigUint, e: &BigInt) -> Result<BigUint> {
    let e = e
        .to_u64()
        .ok_or_else(|| Error::OutOfRange("exponent too large".into()))?;
    if m.bits().saturating_mul(e) > MAX_POWER_BITS {
        return Err(Error::OutOfRange(format!(
            "power with {} bits",
            m.bits().saturating_mul(e)
        )));
    }
    Ok(m.pow(e as u32))
}

/// `log_base(m)` when `m` is an exact power of `base`.
fn exact_log(m: &BigUint, base: u64) -> Option<u64> {
    let mut k = 0;
    let mut x = m.clone();
    let b = BigUint::from(base);
    while !x.is_one() {
        let (q, r) = x.div_rem(&b);
        if !r.is_zero() {
            return None;
        }
        x = q;
        k += 1;
    }
    Some(k)
}

pub(crate) fn rational_f64(r: &BigRational) -> f64 {
    quotient_f64(r.numer(), r.denom())
}

fn quotient_f64(n: &BigInt, d: &BigInt) -> f64 {
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // Shift both to 64 significant bits.
            let shift = n.bits().max(d.bits()).saturating_sub(64);
            let a = (n >> shift).to_f64().unwrap_or(0.0);
            let b = (d >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

fn ln_biguint(m: &BigUint) -> f64 {
    let shift = m.bits().saturating_sub(64);
    (m >> shift).to_f64().unwrap_or(1.0).ln() + shift as f64 * std::f64::consts::LN_2
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.a.is_zero() || self.terms.is_empty() {
            parts.push(fmt_rational(&self.a));
        }
        for (b, m) in &self.terms {
            parts.push(format!("{}*log{}({})", fmt_rational(b), self.base, m));
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_arguments_are_exact() {
        // 8/3 log2(256) - 4/3 = 20
        let e = BoundExpr::log(ratio(-4, 3), ratio(8, 3), 2, 256u32).unwrap();
        assert_eq!(e.cmp_integer(20).unwrap(), Ordering::Equal);
        assert_eq!(e.cmp_integer(19).unwrap(), Ordering::Greater);
        assert_eq!(e.cmp_integer(21).unwrap(), Ordering::Less);
        assert_eq!(e.as_rational(), Some(ratio(20, 1)));
    }

    #[test]
    fn irrational_values_are_never_equal() {
        // 10/3 log5(16) - 4/3 is about 4.41.
        let e = BoundExpr::log(ratio(-4, 3), ratio(10, 3), 5, 16u32).unwrap();
        assert_eq!(e.cmp_integer(4).unwrap(), Ordering::Greater);
        assert_eq!(e.cmp_integer(5).unwrap(), Ordering::Less);
        assert!(e.as_rational().is_none());
        assert!((e.to_f64() - 4.4092).abs() < 1e-3);
    }

    #[test]
    fn negative_coefficients() {
        // 3 - 2 log2(8) = -3
        let e = BoundExpr::log(ratio(3, 1), ratio(-2, 1), 2, 8u32).unwrap();
        assert_eq!(e.cmp_rational(&ratio(-3, 1)).unwrap(), Ordering::Equal);
        assert_eq!(e.cmp_rational(&ratio(-7, 2)).unwrap(), Ordering::Greater);
        assert_eq!(e.to_string(), "3 - 2*log2(8)");
    }

    #[test]
    fn rejects_bad_logs() {
        assert!(BoundExpr::log(ratio(0, 1), ratio(1, 1), 1, 4u32).is_err());
        assert!(BoundExpr::log(ratio(0, 1), ratio(1, 1), 2, 0u32).is_err());
    }
}
