//! Full tuple enumeration, the reference every dynamic program is checked
//! against.

use std::collections::BTreeSet;

use super::{AdditiveDomain, SetFamily, SumsetKind, SumsetResult};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_CAP: u128 = 100_000_000;

/// Enumerates all `prod |A_i|` tuples, keeps those `kind` admits and collects
/// their sums. Fails when the tuple count exceeds `cap`.
pub fn brute_force_oracle<D: AdditiveDomain>(
    family: &SetFamily<D>,
    kind: SumsetKind,
    cap: u128,
) -> Result<SumsetResult<D::Elem>> {
    let needed = family.tuple_count();
    if needed > cap {
        return Err(Error::ResourceCap {
            what: "brute-force tuple enumeration",
            needed,
            cap,
        });
    }
    let d = family.domain();
    let members = family.members();
    let mut digits = vec![0usize; members.len()];
    let mut tuple: Vec<D::Elem> = members.iter().map(|m| m[0].clone()).collect();
    let mut sums = BTreeSet::new();
    loop {
        if kind.admits(&tuple) {
            let s = tuple.iter().fold(d.zero(), |acc, x| d.add(&acc, x));
            sums.insert(s);
        }
        // odometer increment, last slot fastest
        let mut slot = members.len();
        loop {
            if slot == 0 {
                return Ok(SumsetResult {
                    kind,
                    elements: sums.into_iter().collect(),
                });
            }
            slot -= 1;
            digits[slot] += 1;
            if digits[slot] < members[slot].len() {
                tuple[slot] = members[slot][digits[slot]].clone();
                break;
            }
            digits[slot] = 0;
            tuple[slot] = members[slot][0].clone();
        }
    }
}
