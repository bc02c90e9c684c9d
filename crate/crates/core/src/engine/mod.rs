//! Exact computation of plain, distinct-summand, linear (`L`) and cyclic (`C`)
//! restricted sumsets.
//!
//! Every kind has a layered dynamic program in [`dp`] and an independent
//! tuple-enumeration oracle in [`oracle`]. [`bitmask`] is a word-sized kernel
//! for `F_p` with `p <= 64`, used by the exhaustive sweeps.

pub mod bitmask;
pub mod dp;
pub mod oracle;
pub mod sets;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::domain::{DomainKind, LatticePoint, PrimeModulus};
use crate::error::{Error, Result};
use sets::{ResidueSet, SortedSet};

pub use dp::{cyclic_restricted_sumset, distinct_sumset, linear_restricted_sumset, plain_sumset, sumset};
pub use oracle::{brute_force_oracle, DEFAULT_ORACLE_CAP};

/// An additive group the engine can sum over, with its sum-set container.
pub trait AdditiveDomain: Clone + Send + Sync {
    type Elem: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;
    type Sums: Clone + Send + Sync;

    fn kind(&self) -> DomainKind;
    fn zero(&self) -> Self::Elem;
    fn validate(&self, e: &Self::Elem) -> Result<()>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn empty_sums(&self) -> Self::Sums;
    fn singleton(&self, e: &Self::Elem) -> Self::Sums;
    fn union_into(&self, dst: &mut Self::Sums, src: &Self::Sums);
    /// `dst |= src + by`.
    fn translate_into(&self, dst: &mut Self::Sums, src: &Self::Sums, by: &Self::Elem);
    fn sums_len(&self, s: &Self::Sums) -> usize;
    fn sums_to_vec(&self, s: &Self::Sums) -> Vec<Self::Elem>;
}

/// `F_p`; elements are least nonnegative representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp(pub PrimeModulus);

impl AdditiveDomain for Zp {
    type Elem = u32;
    type Sums = ResidueSet;

    fn kind(&self) -> DomainKind {
        DomainKind::PrimeField(self.0)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn validate(&self, e: &u32) -> Result<()> {
        if *e < self.0.get() {
            Ok(())
        } else {
            Err(Error::input(format!("{e} is not a residue mod {}", self.0)))
        }
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.0.get() as u64) as u32
    }

    fn empty_sums(&self) -> ResidueSet {
        ResidueSet::empty(self.0.get())
    }

    fn singleton(&self, e: &u32) -> ResidueSet {
        let mut s = self.empty_sums();
        s.insert(*e);
        s
    }

    fn union_into(&self, dst: &mut ResidueSet, src: &ResidueSet) {
        dst.union_with(src);
    }

    fn translate_into(&self, dst: &mut ResidueSet, src: &ResidueSet, by: &u32) {
        dst.union_rotated(src, *by);
    }

    fn sums_len(&self, s: &ResidueSet) -> usize {
        s.len()
    }

    fn sums_to_vec(&self, s: &ResidueSet) -> Vec<u32> {
        s.iter().collect()
    }
}

/// `Z` with machine integers: the rank-one lattice, kept separate because the
/// sweeps over integer windows are its main workload.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

impl AdditiveDomain for Integers {
    type Elem = i64;
    type Sums = SortedSet<i64>;

    fn kind(&self) -> DomainKind {
        DomainKind::TorsionFree { dim: 1 }
    }

    fn zero(&self) -> i64 {
        0
    }

    fn validate(&self, _: &i64) -> Result<()> {
        Ok(())
    }

    fn add(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn empty_sums(&self) -> SortedSet<i64> {
        SortedSet::new()
    }

    fn singleton(&self, e: &i64) -> SortedSet<i64> {
        SortedSet::from_sorted(vec![*e])
    }

    fn union_into(&self, dst: &mut SortedSet<i64>, src: &SortedSet<i64>) {
        dst.union_with(src);
    }

    fn translate_into(&self, dst: &mut SortedSet<i64>, src: &SortedSet<i64>, by: &i64) {
        dst.merge_from(src.as_slice().iter().map(|x| x + by));
    }

    fn sums_len(&self, s: &SortedSet<i64>) -> usize {
        s.len()
    }

    fn sums_to_vec(&self, s: &SortedSet<i64>) -> Vec<i64> {
        s.as_slice().to_vec()
    }
}

/// `Z^r` under the lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lattice {
    dim: usize,
}

impl Lattice {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("lattice dimension must be at least 1"));
        }
        Ok(Lattice { dim })
    }

    pub fn dim(self) -> usize {
        self.dim
    }
}

impl AdditiveDomain for Lattice {
    type Elem = LatticePoint;
    type Sums = SortedSet<LatticePoint>;

    fn kind(&self) -> DomainKind {
        DomainKind::TorsionFree { dim: self.dim }
    }

    fn zero(&self) -> LatticePoint {
        LatticePoint::zero(self.dim)
    }

    fn validate(&self, e: &LatticePoint) -> Result<()> {
        if e.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: e.dim(),
            })
        }
    }

    fn add(&self, a: &LatticePoint, b: &LatticePoint) -> LatticePoint {
        a + b
    }

    fn empty_sums(&self) -> SortedSet<LatticePoint> {
        SortedSet::new()
    }

    fn singleton(&self, e: &LatticePoint) -> SortedSet<LatticePoint> {
        SortedSet::from_sorted(vec![e.clone()])
    }

    fn union_into(&self, dst: &mut SortedSet<LatticePoint>, src: &SortedSet<LatticePoint>) {
        dst.union_with(src);
    }

    fn translate_into(
        &self,
        dst: &mut SortedSet<LatticePoint>,
        src: &SortedSet<LatticePoint>,
        by: &LatticePoint,
    ) {
        dst.merge_from(src.as_slice().iter().map(|x| x + by));
    }

    fn sums_len(&self, s: &SortedSet<LatticePoint>) -> usize {
        s.len()
    }

    fn sums_to_vec(&self, s: &SortedSet<LatticePoint>) -> Vec<LatticePoint> {
        s.as_slice().to_vec()
    }
}

/// Which restriction a sumset applies to its summand tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumsetKind {
    /// No restriction.
    Plain,
    /// Summands pairwise distinct.
    Distinct,
    /// Adjacent summands distinct: `L(A_1, ..., A_n)`.
    Linear,
    /// Adjacent summands distinct and `a_n != a_1`: `C(A_1, ..., A_n)`.
    Cyclic,
}

impl SumsetKind {
    pub const ALL: [SumsetKind; 4] = [
        SumsetKind::Plain,
        SumsetKind::Distinct,
        SumsetKind::Linear,
        SumsetKind::Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumsetKind::Plain => "plain",
            SumsetKind::Distinct => "distinct",
            SumsetKind::Linear => "linear",
            SumsetKind::Cyclic => "cyclic",
        }
    }

    /// Whether a tuple of summands satisfies the restriction.
    pub fn admits<T: PartialEq>(self, tuple: &[T]) -> bool {
        match self {
            SumsetKind::Plain => true,
            SumsetKind::Distinct => tuple
                .iter()
                .enumerate()
                .all(|(i, a)| tuple[i + 1..].iter().all(|b| a != b)),
            SumsetKind::Linear => tuple.windows(2).all(|w| w[0] != w[1]),
            SumsetKind::Cyclic => {
                // a single summand has no neighbours
                SumsetKind::Linear.admits(tuple)
                    && (tuple.len() < 2 || tuple[0] != tuple[tuple.len() - 1])
            }
        }
    }
}

impl fmt::Display for SumsetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SumsetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SumsetKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::input(format!("unknown sumset kind `{s}`")))
    }
}

/// An ordered family `(A_1, ..., A_n)` of nonempty finite sets over one domain.
/// Each member is stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily<D: AdditiveDomain> {
    domain: D,
    members: Vec<Vec<D::Elem>>,
}

impl<D: AdditiveDomain> SetFamily<D> {
    pub fn new(domain: D, members: Vec<Vec<D::Elem>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::input("a set family needs at least one member"));
        }
        let mut sorted = Vec::with_capacity(members.len());
        for (i, mut set) in members.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::input(format!("member {} is empty", i + 1)));
            }
            for e in &set {
                domain.validate(e)?;
            }
            set.sort();
            if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::input(format!(
                    "member {} repeats element {}",
                    i + 1,
                    w[0]
                )));
            }
            sorted.push(set);
        }
        Ok(SetFamily {
            domain,
            members: sorted,
        })
    }

    /// `(A, A, ..., A)` with `n` slots.
    pub fn repeated(domain: D, set: Vec<D::Elem>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a set family needs at least one member"));
        }
        Self::new(domain, vec![set; n])
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn members(&self) -> &[Vec<D::Elem>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Number of summand tuples, saturating.
    pub fn tuple_count(&self) -> u128 {
        self.members
            .iter()
            .fold(1u128, |acc, m| acc.saturating_mul(m.len() as u128))
    }

    pub fn map_members(&self, f: impl Fn(&D::Elem) -> D::Elem) -> Result<Self> {
        let members = self
            .members
            .iter()
            .map(|m| m.iter().map(&f).collect())
            .collect();
        Self::new(self.domain.clone(), members)
    }

    pub fn reversed(&self) -> Self {
        let mut members = self.members.clone();
        members.reverse();
        SetFamily {
            domain: self.domain.clone(),
            members,
        }
    }

    pub fn rotated(&self, by: usize) -> Self {
        let mut members = self.members.clone();
        let len = members.len();
        members.rotate_left(by % len);
        SetFamily {
            domain: self.domain.clone(),
            members,
        }
    }

    /// Renders the family as `{..};{..};...`.
    pub fn to_literal(&self) -> String {
        self.members
            .iter()
            .map(|m| format_set(m))
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub(crate) fn format_set<T: fmt::Display>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// A computed sumset, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetResult<E> {
    pub kind: SumsetKind,
    pub elements: Vec<E>,
}

impl<E> SumsetResult<E> {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl<E: Ord> SumsetResult<E> {
    pub fn is_subset_of(&self, other: &SumsetResult<E>) -> bool {
        self.elements
            .iter()
            .all(|e| other.elements.binary_search(e).is_ok())
    }
}

impl<E: fmt::Display> fmt::Display for SumsetResult<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(&self.elements))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admits_matches_definitions() {
        assert!(SumsetKind::Linear.admits(&[0, 1, 0]));
        assert!(!SumsetKind::Cyclic.admits(&[0, 1, 0]));
        assert!(!SumsetKind::Distinct.admits(&[0, 1, 0]));
        assert!(SumsetKind::Distinct.admits(&[2, 1, 0]));
        assert!(SumsetKind::Cyclic.admits(&[7]));
        assert!(!SumsetKind::Linear.admits(&[1, 1]));
    }

    #[test]
    fn family_validation() {
        let f7 = Zp(PrimeModulus::new(7).unwrap());
        assert!(SetFamily::new(f7, vec![]).is_err());
        assert!(SetFamily::new(f7, vec![vec![]]).is_err());
        assert!(SetFamily::new(f7, vec![vec![1, 1]]).is_err());
        assert!(SetFamily::new(f7, vec![vec![7]]).is_err());
        let lattice = Lattice::new(2).unwrap();
        let bad = SetFamily::new(lattice, vec![vec![LatticePoint::scalar(1)]]);
        assert_eq!(bad.unwrap_err(), Error::DimensionMismatch { left: 2, right: 1 });
        let fam = SetFamily::new(f7, vec![vec![3, 0, 1]]).unwrap();
        assert_eq!(fam.members()[0], vec![0, 1, 3]);
        assert_eq!(fam.to_literal(), "{0,1,3}");
    }
}
