use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::classify::{apply_construction_tags, classify, Classification, Tri};
use super::expr::BoundExpr;
use super::theorem::{bound_value, BoundParams, Theorem};
use crate::complen::{
    composition_length_analytic, composition_length_with, degree_analytic, order_analytic, Certainty, EngineOptions,
};
use crate::constructions::{t_order, Built, ConstructionSpec};
use crate::error::{Error, Result};
use crate::gf::MatGroup;
use crate::perm::{PermGroup, DEFAULT_DEGREE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Strict,
    Equal,
    /// `c` exceeds the bound on a group not known to miss the hypotheses.
    Violation,
    /// The group provably falls outside the theorem; the comparison is
    /// reported but carries no weight.
    HypothesisUnmet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Strict => "strict",
            Verdict::Equal => "equal",
            Verdict::Violation => "VIOLATION",
            Verdict::HypothesisUnmet => "hypothesis unmet",
        })
    }
}

/// Where a composition length came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthSource {
    Engine(Certainty),
    /// Closed form of a named family, used past the degree cap.
    Analytic,
}

impl fmt::Display for LengthSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthSource::Engine(c) => c.fmt(f),
            LengthSource::Analytic => f.write_str("analytic"),
        }
    }
}

/// Extra facts for a linear group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFacts {
    pub dim: usize,
    pub field_order: u32,
    pub constituent_dims: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub id: String,
    pub theorem: Theorem,
    /// Degree; for a linear group, the dimension.
    pub n: BigUint,
    /// Orbits; for a linear group, irreducible constituents.
    pub r: usize,
    pub order: BigUint,
    pub c: u32,
    pub source: LengthSource,
    pub classification: Option<Classification>,
    pub linear: Option<LinearFacts>,
    pub hypothesis: Tri,
    pub bound: BoundExpr,
    pub verdict: Verdict,
    /// On equality: whether degree and order match the family the equality
    /// clause names. `None` when the bound is not attained.
    pub fingerprint: Option<bool>,
}

impl BoundReport {
    /// `bound - c` as a float, for summaries.
    pub fn slack(&self) -> f64 {
        self.bound.to_f64() - self.c as f64
    }
}

fn hypothesis(theorem: Theorem, c: &Classification) -> Tri {
    let primitive = Tri::from_bool(c.primitive);
    match theorem {
        Theorem::T12 => Tri::Yes,
        Theorem::T13 => primitive,
        Theorem::T15 => primitive.and(!c.affine),
        Theorem::T16a => c.quasiprimitive.and(!primitive),
        Theorem::T16b => c.semiprimitive.and(!c.quasiprimitive),
        Theorem::T14 => Tri::No,
    }
}

fn verdict(bound: &BoundExpr, c: u32, hypothesis: Tri) -> Result<Verdict> {
    if hypothesis == Tri::No {
        return Ok(Verdict::HypothesisUnmet);
    }
    Ok(match bound.cmp_integer(c as u64)? {
        Ordering::Greater => Verdict::Strict,
        Ordering::Equal => Verdict::Equal,
        Ordering::Less => Verdict::Violation,
    })
}

/// `k` when `x` is `base^(4^k)`.
fn iterated_exponent(x: &BigUint, base: u32) -> Option<u32> {
    let mut e = 0u32;
    let mut y = x.clone();
    let b = BigUint::from(base);
    while y > BigUint::from(1u32) {
        if &y % &b != BigUint::from(0u32) {
            return None;
        }
        y /= &b;
        e += 1;
    }
    let k = (0..16).find(|&k| 4u32.pow(k) == e)?;
    Some(k)
}

fn log4(x: usize) -> Option<u32> {
    (0..32).find(|&k| 4usize.checked_pow(k) == Some(x))
}

/// Degree and order of the family named by each equality clause.
fn perm_fingerprint(theorem: Theorem, g: &PermGroup) -> bool {
    let n = BigUint::from(g.degree());
    let order = g.order();
    let family = |base: u32, factor: u32| -> Option<BigUint> {
        let k = iterated_exponent(&n, base)?;
        Some(BigUint::from(factor).pow(4u32.pow(k)) * t_order(k))
    };
    match theorem {
        // A direct product of T_{k_i}, one per orbit of size 4^{k_i}.
        Theorem::T12 => {
            let mut expected = BigUint::from(1u32);
            for o in g.orbits() {
                match log4(o.len()) {
                    Some(k) => expected *= t_order(k),
                    None => return false,
                }
            }
            expected == order
        }
        Theorem::T13 => family(4, 24) == Some(order),
        Theorem::T15 => family(5, 120) == Some(order),
        Theorem::T16b => {
            if &n % 2u32 != BigUint::from(0u32) {
                return false;
            }
            let half = &n / 2u32;
            match iterated_exponent(&half, 4) {
                Some(k) => {
                    let b = 4u32.pow(k);
                    order == BigUint::from(48u32).pow(b) * t_order(k) / BigUint::from(2u32).pow(b - 1)
                }
                None => false,
            }
        }
        // The bound is never attained.
        Theorem::T16a | Theorem::T14 => false,
    }
}

fn linear_fingerprint(facts: &LinearFacts, order: &BigUint) -> bool {
    match facts.field_order {
        // L_{k_1} x ... x L_{k_r}: constituent dimensions 2^(2k+1).
        2 => {
            let mut expected = BigUint::from(1u32);
            for &d in &facts.constituent_dims {
                match (0..16).find(|&k| 1usize << (2 * k + 1) == d) {
                    Some(k) => expected *= BigUint::from(6u32).pow(4u32.pow(k)) * t_order(k),
                    None => return false,
                }
            }
            &expected == order
        }
        // GL(1,4)^d: d lines, each scalar group of order 3.
        4 => facts.constituent_dims.iter().all(|&d| d == 1) && *order == BigUint::from(3u32).pow(facts.dim as u32),
        _ => false,
    }
}

/// Checks a permutation group against a permutation-group bound.
pub fn verify_perm(id: &str, g: &PermGroup, theorem: Theorem, opts: &EngineOptions) -> Result<BoundReport> {
    let classification = classify(g);
    verify_classified(id, g, theorem, opts, classification)
}

fn verify_classified(
    id: &str,
    g: &PermGroup,
    theorem: Theorem,
    opts: &EngineOptions,
    classification: Classification,
) -> Result<BoundReport> {
    if theorem == Theorem::T14 {
        return Err(Error::Unsupported("T14 applies to linear groups".into()));
    }
    let r = g.orbits().len();
    let result = composition_length_with(g, opts)?;
    let bound = bound_value(
        theorem,
        BoundParams::Perm {
            n: g.degree() as u64,
            r: r as u64,
        },
    )?;
    let hyp = hypothesis(theorem, &classification);
    let verdict = verdict(&bound, result.length, hyp)?;
    let fingerprint = (verdict == Verdict::Equal).then(|| perm_fingerprint(theorem, g));
    Ok(BoundReport {
        id: id.to_string(),
        theorem,
        n: g.degree().into(),
        r,
        order: g.order(),
        c: result.length,
        source: LengthSource::Engine(result.certainty),
        classification: Some(classification),
        linear: None,
        hypothesis: hyp,
        bound,
        verdict,
        fingerprint,
    })
}

/// Checks a matrix group against the linear bound. The length comes from
/// the permutation action on nonzero vectors, or from `analytic` when that
/// action is past the degree cap.
pub fn verify_linear(
    id: &str,
    h: &MatGroup,
    opts: &EngineOptions,
    analytic: Option<(u32, BigUint)>,
) -> Result<BoundReport> {
    let field = h.field();
    let (p, f) = (field.characteristic() as u64, field.degree() as u64);
    let (constituents, hyp) = match h.irreducible_constituents(opts.seed) {
        Ok(cs) => (cs.iter().map(|c| c.dim()).collect::<Vec<_>>(), Tri::Yes),
        Err(Error::NotCompletelyReducible(_)) => (Vec::new(), Tri::No),
        Err(e) => return Err(e),
    };
    let (c, order, source) = match h.to_perm(opts.degree_cap) {
        Ok(g) => {
            let r = composition_length_with(&g, opts)?;
            (r.length, g.order(), LengthSource::Engine(r.certainty))
        }
        Err(Error::DegreeCap { .. }) if analytic.is_some() => {
            let (c, order) = analytic.expect("checked");
            (c, order, LengthSource::Analytic)
        }
        Err(e) => return Err(e),
    };
    let r = constituents.len().max(1);
    let bound = bound_value(
        Theorem::T14,
        BoundParams::Linear {
            d: h.dim() as u64,
            p,
            f,
            r: r as u64,
        },
    )?;
    let verdict = verdict(&bound, c, hyp)?;
    let facts = LinearFacts {
        dim: h.dim(),
        field_order: field.order(),
        constituent_dims: constituents,
    };
    let fingerprint = (verdict == Verdict::Equal).then(|| linear_fingerprint(&facts, &order));
    Ok(BoundReport {
        id: id.to_string(),
        theorem: Theorem::T14,
        n: h.dim().into(),
        r,
        order,
        c,
        source,
        classification: None,
        linear: Some(facts),
        hypothesis: hyp,
        bound,
        verdict,
        fingerprint,
    })
}

/// Builds a spec and checks it. Past the degree cap, named families fall
/// back to their closed forms, with hypotheses taken from the construction.
pub fn verify_spec(spec: &ConstructionSpec, theorem: Theorem, opts: &EngineOptions) -> Result<BoundReport> {
    let id = spec.to_string();
    if theorem == Theorem::T14 {
        return match spec.build()? {
            Built::Linear(h) => {
                let analytic = composition_length_analytic(spec)?
                    .to_u32()
                    .map(|c| (c, order_analytic(spec)));
                verify_linear(&id, &h, opts, analytic)
            }
            Built::Perm(_) => Err(Error::Unsupported(format!("{} is not a linear group", id))),
        };
    }
    match spec.build_perm() {
        Ok(g) => {
            let mut classification = classify(&g);
            apply_construction_tags(spec, &mut classification);
            verify_classified(&id, &g, theorem, opts, classification)
        }
        Err(Error::DegreeCap { .. }) => verify_analytic(spec, theorem),
        Err(e) => Err(e),
    }
}

/// Report for a named family too large to build: degree, order and length
/// from closed forms; only the constructions whose structure is known by
/// design get their hypotheses.
fn verify_analytic(spec: &ConstructionSpec, theorem: Theorem) -> Result<BoundReport> {
    let id = spec.to_string();
    let n = degree_analytic(spec);
    let c = composition_length_analytic(spec)?
        .to_u32()
        .ok_or_else(|| Error::OutOfRange(format!("length of {}", id)))?;
    let n64 = n.to_u64().ok_or(Error::DegreeCap {
        degree: u128::MAX,
        cap: DEFAULT_DEGREE_CAP,
    })?;
    if matches!(spec, ConstructionSpec::Direct(_)) {
        return Err(Error::Unsupported(format!("orbit count of {} past the degree cap", id)));
    }
    let r = 1;
    let hyp = match (theorem, spec) {
        (Theorem::T12, _) | (Theorem::T13, ConstructionSpec::P(_)) => Tri::Yes,
        _ => Tri::Unknown,
    };
    let bound = bound_value(theorem, BoundParams::Perm { n: n64, r: r as u64 })?;
    let verdict = verdict(&bound, c, hyp)?;
    let order = order_analytic(spec);
    let fingerprint = (verdict == Verdict::Equal).then(|| match theorem {
        Theorem::T13 => {
            iterated_exponent(&n, 4).map(|k| BigUint::from(24u32).pow(4u32.pow(k)) * t_order(k)) == Some(order.clone())
        }
        Theorem::T12 => log4(n64 as usize).map(t_order) == Some(order.clone()),
        _ => false,
    });
    Ok(BoundReport {
        id,
        theorem,
        n,
        r,
        order,
        c,
        source: LengthSource::Analytic,
        classification: None,
        linear: None,
        hypothesis: hyp,
        bound,
        verdict,
        fingerprint,
    })
}
