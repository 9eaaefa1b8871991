//! Orders of the nonabelian finite simple groups below `10^18`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub const LIMIT: u128 = 1_000_000_000_000_000_000;

const SPORADIC: &[&str] = &[
    "7920",
    "95040",
    "443520",
    "10200960",
    "244823040",
    "175560",
    "604800",
    "50232960",
    "86775571046077562880",
    "44352000",
    "898128000",
    "448345497600",
    "495766656000",
    "42305421312000",
    "4157776806543360000",
    "4030387200",
    "145926144000",
    "460815505920",
    "64561751654400",
    "4089470473293004800",
    "1255205709190661721292800",
    "273030912000000",
    "51765179004000000",
    "90745943887872000",
    "4154781481226426191177580544000000",
    "808017424794512875886459904961710757005754368000000000",
];

/// The Tits group `2F4(2)'`.
const TITS: u128 = 17_971_200;

fn prime_powers(limit: u64) -> Vec<u64> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = Vec::new();
    for p in 2..=limit as usize {
        if !sieve[p] {
            continue;
        }
        for m in (p * p..=limit as usize).step_by(p) {
            sieve[m] = false;
        }
        let mut q = p as u64;
        while q <= limit {
            out.push(q);
            q = match q.checked_mul(p as u64) {
                Some(x) => x,
                None => break,
            };
        }
    }
    out.sort_unstable();
    out
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn checked_prod(factors: impl IntoIterator<Item = Option<u128>>) -> Option<u128> {
    factors.into_iter().try_fold(1u128, |acc, f| acc.checked_mul(f?))
}

fn pow(q: u128, e: u32) -> Option<u128> {
    q.checked_pow(e)
}

/// Walks ranks upward and field sizes upward, keeping orders below the
/// limit. `order(rank, q)` returns `None` on overflow or when the pair is
/// excluded.
fn family(
    out: &mut BTreeSet<u128>,
    qs: &[u64],
    min_rank: u32,
    accept: impl Fn(u64) -> bool,
    order: impl Fn(u32, u128) -> Option<Option<u128>>,
) {
    let mut rank = min_rank;
    loop {
        let mut any = false;
        for &q in qs.iter().filter(|&&q| accept(q)) {
            match order(rank, q as u128) {
                // Overflowed: larger q only grows.
                None => break,
                Some(None) => continue,
                Some(Some(o)) if o >= LIMIT => break,
                Some(Some(o)) => {
                    out.insert(o);
                    any = true;
                }
            }
        }
        if !any && rank > min_rank + 1 {
            return;
        }
        rank += 1;
        if rank > 64 {
            return;
        }
    }
}

fn build() -> BTreeSet<u128> {
    let mut out = BTreeSet::new();
    let mut fact = 1u128;
    for n in 2..=20u128 {
        fact *= n;
        if n >= 5 && fact / 2 < LIMIT {
            out.insert(fact / 2);
        }
    }
    let qs = prime_powers(1_300_000);
    let any = |_: u64| true;

    // PSL(n, q)
    family(&mut out, &qs, 2, any, |n, q| {
        if n == 2 && q <= 3 {
            return Some(None);
        }
        let o =
            checked_prod(std::iter::once(pow(q, n * (n - 1) / 2)).chain((2..=n).map(|i| pow(q, i).map(|x| x - 1))))?;
        Some(Some(o / gcd(n as u128, q - 1)))
    });
    // PSU(n, q)
    family(&mut out, &qs, 3, any, |n, q| {
        if n == 3 && q == 2 {
            return Some(None);
        }
        let o = checked_prod(
            std::iter::once(pow(q, n * (n - 1) / 2))
                .chain((2..=n).map(|i| pow(q, i).map(|x| if i % 2 == 0 { x - 1 } else { x + 1 }))),
        )?;
        Some(Some(o / gcd(n as u128, q + 1)))
    });
    // PSp(2m, q); PΩ(2m+1, q) for odd q has the same order.
    family(&mut out, &qs, 2, any, |m, q| {
        if m == 2 && q == 2 {
            return Some(None);
        }
        let o = checked_prod(std::iter::once(pow(q, m * m)).chain((1..=m).map(|i| pow(q, 2 * i).map(|x| x - 1))))?;
        Some(Some(o / gcd(2, q - 1)))
    });
    // PΩ+(2m, q) and PΩ-(2m, q)
    for sign in [false, true] {
        family(&mut out, &qs, 4, any, |m, q| {
            let qm = pow(q, m)?;
            let mid = if sign { qm + 1 } else { qm - 1 };
            let o = checked_prod(
                [pow(q, m * (m - 1)), Some(mid)]
                    .into_iter()
                    .chain((1..m).map(|i| pow(q, 2 * i).map(|x| x - 1))),
            )?;
            Some(Some(o / gcd(4, mid)))
        });
    }
    // Exceptional families of bounded rank.
    let single = |out: &mut BTreeSet<u128>, accept: &dyn Fn(u64) -> bool, f: &dyn Fn(u128) -> Option<u128>| {
        for &q in qs.iter().filter(|&&q| accept(q)) {
            match f(q as u128) {
                Some(o) if o < LIMIT => {
                    out.insert(o);
                }
                _ => break,
            }
        }
    };
    let is_odd_power = |q: u64, p: u64| {
        let mut e = 0;
        let mut x = q;
        while x.is_multiple_of(p) {
            x /= p;
            e += 1;
        }
        x == 1 && e % 2 == 1
    };
    single(&mut out, &|q| q >= 3, &|q| {
        checked_prod([pow(q, 6), pow(q, 6).map(|x| x - 1), Some(q * q - 1)])
    });
    single(&mut out, &any, &|q| {
        checked_prod([
            pow(q, 24),
            pow(q, 12).map(|x| x - 1),
            pow(q, 8).map(|x| x - 1),
            pow(q, 6).map(|x| x - 1),
            Some(q * q - 1),
        ])
    });
    single(&mut out, &any, &|q| {
        let q4 = pow(q, 4)?;
        checked_prod([
            pow(q, 12),
            pow(q, 8).map(|x| x + q4 + 1),
            pow(q, 6).map(|x| x - 1),
            Some(q * q - 1),
        ])
    });
    single(&mut out, &any, &|q| {
        let e6 = checked_prod([
            pow(q, 36),
            pow(q, 12).map(|x| x - 1),
            pow(q, 9).map(|x| x - 1),
            pow(q, 8).map(|x| x - 1),
            pow(q, 6).map(|x| x - 1),
            pow(q, 5).map(|x| x - 1),
            Some(q * q - 1),
        ])?;
        Some(e6 / gcd(3, q - 1))
    });
    single(&mut out, &|q| q >= 8 && is_odd_power(q, 2), &|q| {
        checked_prod([Some(q * q), Some(q * q + 1), Some(q - 1)])
    });
    single(&mut out, &|q| q >= 27 && is_odd_power(q, 3), &|q| {
        checked_prod([pow(q, 3), pow(q, 3).map(|x| x + 1), Some(q - 1)])
    });
    single(&mut out, &|q| q >= 8 && is_odd_power(q, 2), &|q| {
        checked_prod([
            pow(q, 12),
            pow(q, 6).map(|x| x + 1),
            pow(q, 4).map(|x| x - 1),
            pow(q, 3).map(|x| x + 1),
            Some(q - 1),
        ])
    });
    out.insert(TITS);
    for s in SPORADIC {
        let v: u128 = match s.parse() {
            Ok(v) => v,
            Err(_) => continue,
        };
        if v < LIMIT {
            out.insert(v);
        }
    }
    out
}

fn table() -> &'static BTreeSet<u128> {
    static TABLE: OnceLock<BTreeSet<u128>> = OnceLock::new();
    TABLE.get_or_init(build)
}

/// Whether `order` is the order of some nonabelian simple group, for
/// orders below `10^18`. Larger orders are never corroborated.
pub fn is_simple_order(order: &BigUint) -> bool {
    order.to_u128().is_some_and(|o| table().contains(&o))
}
