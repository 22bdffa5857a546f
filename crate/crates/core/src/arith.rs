//! Small exact integer helpers shared across modules.

/// Exact `k`-th root of `value` if one exists.
///
/// Binary search on `t^k`; never touches floating point.
pub fn exact_root(value: u64, k: u64) -> Option<u64> {
    if k == 0 {
        return None;
    }
    if value <= 1 || k == 1 {
        return Some(value);
    }
    // 2^k > value means the only candidate root is 1.
    if k >= 64 || (1u64 << k) > value {
        return None;
    }
    let (mut lo, mut hi) = (2u64, value);
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match checked_pow(mid, k) {
            Some(p) if p == value => return Some(mid),
            Some(p) if p < value => lo = mid + 1,
            _ => hi = mid - 1,
        }
    }
    None
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

/// Decomposes `m` as `p^k` with `p` prime, if possible.
pub fn prime_power_parts(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let p = smallest_prime_factor(m);
    let mut rest = m;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime_power(m: u64) -> bool {
    prime_power_parts(m).is_some()
}

fn smallest_prime_factor(m: u64) -> u64 {
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    m
}

/// Prime-power divisors `t > 1` of `n`, ascending.
pub fn prime_power_divisors(n: u64) -> Vec<u64> {
    (2..=n).filter(|t| n.is_multiple_of(*t) && is_prime_power(*t)).collect()
}
