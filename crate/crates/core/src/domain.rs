//! Element domains: residues of a prime field and points of an integer lattice
//! `Z^r`, together with the minimum torsion order `p(G)` of each.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime `p`, checked by trial division at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p as u64) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn residue(self, value: i64) -> Residue {
        Residue {
            value: value.rem_euclid(self.0 as i64) as u32,
            modulus: self,
        }
    }
}

impl TryFrom<u32> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u32 {
    fn from(p: PrimeModulus) -> u32 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `F_p`, stored as its least nonnegative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u32,
    modulus: PrimeModulus,
}

impl Residue {
    pub fn new(value: u32, modulus: PrimeModulus) -> Result<Self> {
        if value >= modulus.get() {
            return Err(Error::input(format!(
                "residue {value} out of range for modulus {modulus}"
            )));
        }
        Ok(Residue { value, modulus })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }
}

impl Add for Residue {
    type Output = Residue;

    fn add(self, rhs: Residue) -> Residue {
        assert_eq!(self.modulus, rhs.modulus, "residues of different fields");
        let p = self.modulus.get() as u64;
        Residue {
            value: ((self.value as u64 + rhs.value as u64) % p) as u32,
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        let p = self.modulus.get();
        Residue {
            value: (p - self.value) % p,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A point of `Z^r`. Points of equal dimension are ordered lexicographically,
/// which is a linear order compatible with translation and negation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::input("lattice point needs at least one coordinate"));
        }
        Ok(LatticePoint(coords))
    }

    pub fn scalar(x: i64) -> Self {
        LatticePoint(vec![x])
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim.max(1)])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, c: i64) -> Self {
        LatticePoint(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;

    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.0.as_slice() {
            return write!(f, "{x}");
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison of two lattice points of the same dimension.
pub fn lex_compare(a: &LatticePoint, b: &LatticePoint) -> Result<Ordering> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(a.0.cmp(&b.0))
}

/// Minimum order of a nonzero group element: finite for `F_p`, infinite for
/// torsion-free groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorsionBound {
    Finite(u64),
    Infinite,
}

impl TorsionBound {
    pub fn finite(self) -> Option<u64> {
        match self {
            TorsionBound::Finite(p) => Some(p),
            TorsionBound::Infinite => None,
        }
    }

    /// `min(self, value)` as a signed integer.
    pub fn min_with(self, value: i64) -> i64 {
        match self {
            TorsionBound::Finite(p) => value.min(p as i64),
            TorsionBound::Infinite => value,
        }
    }
}

impl fmt::Display for TorsionBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionBound::Finite(p) => write!(f, "{p}"),
            TorsionBound::Infinite => write!(f, "inf"),
        }
    }
}

/// The carriers this crate computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    PrimeField(PrimeModulus),
    /// `Z^r`.
    TorsionFree { dim: usize },
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainKind::PrimeField(p) => write!(f, "F_{p}"),
            DomainKind::TorsionFree { dim: 1 } => write!(f, "Z"),
            DomainKind::TorsionFree { dim } => write!(f, "Z^{dim}"),
        }
    }
}

pub fn min_torsion(domain: DomainKind) -> TorsionBound {
    match domain {
        DomainKind::PrimeField(p) => TorsionBound::Finite(p.get() as u64),
        DomainKind::TorsionFree { .. } => TorsionBound::Infinite,
    }
}

/// Elements that admit the arithmetic-progression test.
pub trait Progression: Clone + Eq {
    fn difference(later: &Self, earlier: &Self) -> Self;
}

impl Progression for i64 {
    fn difference(later: &i64, earlier: &i64) -> i64 {
        later - earlier
    }
}

impl Progression for LatticePoint {
    fn difference(later: &LatticePoint, earlier: &LatticePoint) -> LatticePoint {
        later - earlier
    }
}

/// Tests whether a sorted list of distinct elements is an arithmetic
/// progression, returning the common difference when it is. Lists of at most
/// two elements count as progressions; a singleton has no difference.
pub fn is_arithmetic_progression<T: Progression>(sorted: &[T]) -> (bool, Option<T>) {
    match sorted {
        [] | [_] => (true, None),
        [first, second, rest @ ..] => {
            let d = T::difference(second, first);
            let mut prev = second;
            for x in rest {
                if T::difference(x, prev) != d {
                    return (false, None);
                }
                prev = x;
            }
            (true, Some(d))
        }
    }
}
