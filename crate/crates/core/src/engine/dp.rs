//! Layered dynamic programs. Layer `i` holds every reachable state after the
//! summands `a_1, ..., a_i` have been chosen.

use std::collections::HashMap;

use super::{AdditiveDomain, SetFamily, SumsetKind, SumsetResult};
use crate::error::{Error, Result};

/// `{a_1 + ... + a_n : a_i in A_i}`.
pub fn plain_sumset<D: AdditiveDomain>(family: &SetFamily<D>) -> SumsetResult<D::Elem> {
    let d = family.domain();
    let mut acc = d.singleton(&d.zero());
    for member in family.members() {
        let mut next = d.empty_sums();
        for b in member {
            d.translate_into(&mut next, &acc, b);
        }
        acc = next;
    }
    finish(d, SumsetKind::Plain, &acc)
}

/// Sums over tuples whose coordinates are pairwise distinct. The state is the
/// set of elements already used, so the union of the members may hold at most
/// 64 elements.
pub fn distinct_sumset<D: AdditiveDomain>(family: &SetFamily<D>) -> Result<SumsetResult<D::Elem>> {
    let d = family.domain();
    let mut universe: Vec<D::Elem> = family.members().iter().flatten().cloned().collect();
    universe.sort();
    universe.dedup();
    if universe.len() > 64 {
        return Err(Error::ResourceCap {
            what: "distinct-summand state space (union size)",
            needed: universe.len() as u128,
            cap: 64,
        });
    }
    let index = |e: &D::Elem| universe.binary_search(e).expect("element of the union");

    let mut layer: HashMap<u64, D::Sums> = HashMap::new();
    layer.insert(0, d.singleton(&d.zero()));
    for member in family.members() {
        let mut next: HashMap<u64, D::Sums> = HashMap::new();
        for (&used, sums) in &layer {
            for b in member {
                let bit = 1u64 << index(b);
                if used & bit != 0 {
                    continue;
                }
                let slot = next.entry(used | bit).or_insert_with(|| d.empty_sums());
                d.translate_into(slot, sums, b);
            }
        }
        layer = next;
    }
    let mut acc = d.empty_sums();
    for sums in layer.values() {
        d.union_into(&mut acc, sums);
    }
    Ok(finish(d, SumsetKind::Distinct, &acc))
}

/// `L(A_1, ..., A_n)`: sums with `a_i != a_{i+1}`. States are
/// `(last element, partial sum)`. For `n = 1` this is `A_1`.
pub fn linear_restricted_sumset<D: AdditiveDomain>(family: &SetFamily<D>) -> SumsetResult<D::Elem> {
    let d = family.domain();
    let states = chain_states(d, family.members(), None);
    let mut acc = d.empty_sums();
    for (_, sums) in &states {
        d.union_into(&mut acc, sums);
    }
    finish(d, SumsetKind::Linear, &acc)
}

/// `C(A_1, ..., A_n)`: `L`'s restriction plus `a_n != a_1`. States are
/// `(first element, last element, partial sum)`; the first element is fixed
/// per run. For `n = 1` this is `A_1`.
pub fn cyclic_restricted_sumset<D: AdditiveDomain>(family: &SetFamily<D>) -> SumsetResult<D::Elem> {
    let d = family.domain();
    let members = family.members();
    if members.len() == 1 {
        return linear_restricted_sumset(family).with_kind(SumsetKind::Cyclic);
    }
    let mut acc = d.empty_sums();
    for first in &members[0] {
        for (last, sums) in chain_states(d, members, Some(first)) {
            if &last != first {
                d.union_into(&mut acc, &sums);
            }
        }
    }
    finish(d, SumsetKind::Cyclic, &acc)
}

/// Dispatches on `kind`.
pub fn sumset<D: AdditiveDomain>(family: &SetFamily<D>, kind: SumsetKind) -> Result<SumsetResult<D::Elem>> {
    Ok(match kind {
        SumsetKind::Plain => plain_sumset(family),
        SumsetKind::Distinct => distinct_sumset(family)?,
        SumsetKind::Linear => linear_restricted_sumset(family),
        SumsetKind::Cyclic => cyclic_restricted_sumset(family),
    })
}

/// Final layer of the adjacent-distinct chain: for each last element, the
/// reachable partial sums. `first` pins `a_1`.
fn chain_states<D: AdditiveDomain>(
    d: &D,
    members: &[Vec<D::Elem>],
    first: Option<&D::Elem>,
) -> Vec<(D::Elem, D::Sums)> {
    let mut layer: Vec<(D::Elem, D::Sums)> = match first {
        Some(f) => vec![(f.clone(), d.singleton(f))],
        None => members[0].iter().map(|a| (a.clone(), d.singleton(a))).collect(),
    };
    for member in &members[1..] {
        // prefix[j] = union of layer[..j], suffix[j] = union of layer[j..]
        let k = layer.len();
        let mut prefix = Vec::with_capacity(k + 1);
        prefix.push(d.empty_sums());
        for (_, s) in &layer {
            let mut u = prefix.last().expect("nonempty").clone();
            d.union_into(&mut u, s);
            prefix.push(u);
        }
        let mut suffix = vec![d.empty_sums(); k + 1];
        for j in (0..k).rev() {
            let mut u = suffix[j + 1].clone();
            d.union_into(&mut u, &layer[j].1);
            suffix[j] = u;
        }

        let mut next = Vec::with_capacity(member.len());
        for b in member {
            let mut sums = d.empty_sums();
            match layer.binary_search_by(|(a, _)| a.cmp(b)) {
                Ok(j) => {
                    let mut others = prefix[j].clone();
                    d.union_into(&mut others, &suffix[j + 1]);
                    d.translate_into(&mut sums, &others, b);
                }
                Err(_) => d.translate_into(&mut sums, &prefix[k], b),
            }
            next.push((b.clone(), sums));
        }
        layer = next;
    }
    layer
}

fn finish<D: AdditiveDomain>(d: &D, kind: SumsetKind, acc: &D::Sums) -> SumsetResult<D::Elem> {
    SumsetResult {
        kind,
        elements: d.sums_to_vec(acc),
    }
}

impl<E> SumsetResult<E> {
    fn with_kind(mut self, kind: SumsetKind) -> Self {
        self.kind = kind;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{LatticePoint, PrimeModulus};
    use crate::engine::{brute_force_oracle, Integers, Lattice, Zp, DEFAULT_ORACLE_CAP};

    fn int_family(sets: &[&[i64]]) -> SetFamily<Integers> {
        SetFamily::new(Integers, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn repeat(set: &[i64], n: usize) -> SetFamily<Integers> {
        SetFamily::repeated(Integers, set.to_vec(), n).unwrap()
    }

    fn elems(family: &SetFamily<Integers>, kind: SumsetKind) -> Vec<i64> {
        let dp = sumset(family, kind).unwrap();
        let oracle = brute_force_oracle(family, kind, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(dp, oracle, "{kind} on {}", family.to_literal());
        dp.elements
    }

    #[test]
    fn plain_examples() {
        assert_eq!(elems(&int_family(&[&[0, 1], &[0, 1]]), SumsetKind::Plain), [0, 1, 2]);
        assert_eq!(elems(&int_family(&[&[0, 1, 2]]), SumsetKind::Plain), [0, 1, 2]);
        assert_eq!(
            elems(&int_family(&[&[0, 3], &[0, 5], &[0, 7]]), SumsetKind::Plain),
            [0, 3, 5, 7, 8, 10, 12, 15]
        );
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(elems(&int_family(&[&[0, 1], &[0, 1]]), SumsetKind::Distinct), [1]);
        assert_eq!(elems(&repeat(&[0, 1, 2], 3), SumsetKind::Distinct), [3]);
        assert!(elems(&repeat(&[0, 1], 3), SumsetKind::Distinct).is_empty());
    }

    #[test]
    fn distinct_rejects_wide_unions() {
        let wide: Vec<i64> = (0..65).collect();
        let family = SetFamily::new(Integers, vec![wide.clone(), wide]).unwrap();
        assert!(distinct_sumset(&family).unwrap_err().is_resource());
    }

    #[test]
    fn linear_examples() {
        assert_eq!(elems(&int_family(&[&[0, 1], &[0, 1]]), SumsetKind::Linear), [1]);
        assert_eq!(elems(&repeat(&[0, 1, 2], 3), SumsetKind::Linear), [1, 2, 3, 4, 5]);
        // (1, 7, 1) is admissible, so 9 belongs
        assert_eq!(
            elems(&int_family(&[&[0, 1], &[5, 7], &[0, 1]]), SumsetKind::Linear),
            [5, 6, 7, 8, 9]
        );
        assert_eq!(
            elems(&repeat(&[0, 1, 3], 4), SumsetKind::Linear),
            [2, 4, 5, 6, 7, 8]
        );
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(elems(&int_family(&[&[0, 1], &[0, 1]]), SumsetKind::Cyclic), [1]);
        assert_eq!(elems(&repeat(&[0, 1, 2], 3), SumsetKind::Cyclic), [3]);
        assert!(elems(&repeat(&[0, 1], 3), SumsetKind::Cyclic).is_empty());
        // 2a1 + 2a2 + a3, 2a1 + 2a3 + a2, 2a2 + 2a3 + a1
        for a in [[0i64, 1, 5], [-4, 2, 3], [0, 1, 2]] {
            let got = elems(&repeat(&a, 5), SumsetKind::Cyclic);
            let mut expected = vec![
                2 * a[0] + 2 * a[1] + a[2],
                2 * a[0] + 2 * a[2] + a[1],
                2 * a[1] + 2 * a[2] + a[0],
            ];
            expected.sort();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn single_member_is_the_set_itself() {
        let family = int_family(&[&[4, 9]]);
        for kind in SumsetKind::ALL {
            assert_eq!(elems(&family, kind), [4, 9]);
        }
    }

    #[test]
    fn prime_field_wraps() {
        let f5 = Zp(PrimeModulus::new(5).unwrap());
        let family = SetFamily::repeated(f5, vec![0, 1], 3).unwrap();
        assert_eq!(linear_restricted_sumset(&family).elements, [1, 2]);
        let f3 = Zp(PrimeModulus::new(3).unwrap());
        let family = SetFamily::repeated(f3, vec![0, 1, 2], 3).unwrap();
        assert_eq!(linear_restricted_sumset(&family).elements, [0, 1, 2]);
        let oracle = brute_force_oracle(&family, SumsetKind::Linear, 100).unwrap();
        assert_eq!(oracle.elements, [0, 1, 2]);
    }

    #[test]
    fn lattice_points() {
        let lattice = Lattice::new(2).unwrap();
        let pts = |v: &[(i64, i64)]| -> Vec<LatticePoint> {
            v.iter()
                .map(|&(a, b)| LatticePoint::new(vec![a, b]).unwrap())
                .collect()
        };
        let family = SetFamily::new(lattice, vec![pts(&[(0, 0), (1, 0)]), pts(&[(0, 0), (0, 1)])]).unwrap();
        let got = linear_restricted_sumset(&family);
        assert_eq!(got.elements, pts(&[(0, 1), (1, 0), (1, 1)]));
        assert_eq!(got, brute_force_oracle(&family, SumsetKind::Linear, 100).unwrap());
    }

    #[test]
    fn oracle_cap() {
        let family = repeat(&[0, 1, 2], 4);
        let err = brute_force_oracle(&family, SumsetKind::Plain, 80).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceCap {
                what: "brute-force tuple enumeration",
                needed: 81,
                cap: 80
            }
        );
    }
}
