//! Fixed-size subsets of `{0, ..., w-1}` as bitmasks: enumeration, ranking,
//! and orbit representatives under the affine maps `x -> cx + t` of `F_p`.

use crate::engine::bitmask::{bits, MaskField};

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// All `k`-subsets of `{0, ..., w-1}` in increasing mask order.
pub fn subsets_of_size(w: u32, k: u32) -> Vec<u64> {
    assert!(w <= 64, "universe wider than a word");
    let mut out = Vec::with_capacity(binomial(w as u64, k as u64).min(1 << 24) as usize);
    if k > w {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = if w == 64 { u64::MAX } else { (1u64 << w) - 1 };
    let mut m: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    loop {
        out.push(m);
        // next mask with the same popcount
        let c = m & m.wrapping_neg();
        let Some(r) = m.checked_add(c) else { break };
        let next = (((r ^ m) >> 2) / c) | r;
        if next > limit || next < m {
            break;
        }
        m = next;
    }
    out
}

/// Position of `mask` in [`subsets_of_size`] order.
pub fn rank(mask: u64) -> u128 {
    bits(mask)
        .enumerate()
        .map(|(i, c)| binomial(c as u64, i as u64 + 1))
        .sum()
}

/// The `k`-subset at position `r` of [`subsets_of_size`] order.
pub fn unrank(mut r: u128, k: u32) -> u64 {
    let mut mask = 0u64;
    let mut hi = 64u64;
    for i in (1..=k as u64).rev() {
        // largest c below hi with C(c, i) <= r
        let mut c = i - 1;
        while c + 1 < hi && binomial(c + 1, i) <= r {
            c += 1;
        }
        mask |= 1 << c;
        r -= binomial(c, i);
        hi = c;
    }
    mask
}

/// One subset per affine orbit, with the orbit size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitRep {
    pub mask: u64,
    pub orbit: u64,
}

fn inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64, p.saturating_sub(2), 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

fn affine_image(mask: u64, c: u32, t: u32, p: u32) -> u64 {
    bits(mask).fold(0, |m, x| m | 1 << ((x as u64 * c as u64 + t as u64) % p as u64))
}

/// Orbit representatives of the `k`-subsets of `F_p` under `x -> cx + t`,
/// `c != 0`, in increasing mask order. The orbit sizes sum to `C(p, k)`.
pub fn affine_orbit_reps(field: MaskField, k: u32) -> Vec<OrbitRep> {
    let p = field.p();
    let group = p as u64 * (p as u64 - 1);
    match k {
        0 => return vec![OrbitRep { mask: 0, orbit: 1 }],
        1 => return vec![OrbitRep { mask: 1, orbit: p as u64 }],
        _ if k > p => return Vec::new(),
        _ => {}
    }
    // every orbit meets the sets containing 0 and 1: send any ordered pair
    // (a, b) of members to (0, 1)
    let mut reps = Vec::new();
    for rest in subsets_of_size(p - 2, k - 2) {
        let mask = (rest << 2) | 0b11;
        let mut canonical = true;
        let mut stabilizer = 0u64;
        'pairs: for a in bits(mask) {
            for b in bits(mask) {
                if a == b {
                    continue;
                }
                let c = inverse((b + p - a) % p, p);
                let t = (p - (a as u64 * c as u64 % p as u64) as u32) % p;
                let image = affine_image(mask, c, t, p);
                if image < mask {
                    canonical = false;
                    break 'pairs;
                }
                if image == mask {
                    stabilizer += 1;
                }
            }
        }
        if canonical {
            reps.push(OrbitRep {
                mask,
                orbit: group / stabilizer,
            });
        }
    }
    reps
}
