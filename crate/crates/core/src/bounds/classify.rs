//! Classification of the equality cases of the torsion-free bounds.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::subsets::subsets_of_size;
use crate::engine::bitmask::bits;

use super::formula::{BoundFormula, BoundKind};
use crate::domain::{is_arithmetic_progression, TorsionBound};
use crate::engine::{sumset, Integers, SetFamily, SumsetKind};
use crate::error::{Error, Result};

/// How `|n~A|` or `|n°A|` compares with its torsion-free lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityClass {
    /// Equality, and `A` is an arithmetic progression.
    ApEquality,
    /// Cyclic equality with `|A| = 3`, `n = 5` and `A` not a progression.
    #[serde(rename = "exceptional-k3n5")]
    ExceptionalK3N5,
    /// The cardinality exceeds the bound.
    Strict,
    /// The bound is at most zero and the sumset is empty.
    Vacuous,
    /// Equality outside the two expected cases.
    UnexpectedEquality,
    /// `A` is a progression yet the bound is not attained.
    ApWithoutEquality,
    /// The cardinality is below the bound.
    BelowBound,
}

impl EqualityClass {
    /// True for the outcomes the equality characterization rules out.
    pub fn is_anomaly(self) -> bool {
        matches!(
            self,
            EqualityClass::UnexpectedEquality
                | EqualityClass::ApWithoutEquality
                | EqualityClass::BelowBound
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            EqualityClass::ApEquality => "ap-equality",
            EqualityClass::ExceptionalK3N5 => "exceptional-k3n5",
            EqualityClass::Strict => "strict",
            EqualityClass::Vacuous => "vacuous",
            EqualityClass::UnexpectedEquality => "unexpected-equality",
            EqualityClass::ApWithoutEquality => "ap-without-equality",
            EqualityClass::BelowBound => "below-bound",
        }
    }
}

impl fmt::Display for EqualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A classified instance with the numbers behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub set: Vec<i64>,
    pub n: usize,
    pub kind: SumsetKind,
    pub bound_raw: i64,
    pub actual: usize,
    pub is_ap: bool,
    pub class: EqualityClass,
}

/// Classifies `n` copies of `set ⊂ Z` against the unclamped torsion-free
/// bound. Requires `|A| >= 3`, `n >= 3` and a linear or cyclic kind.
pub fn classify_equality(set: &[i64], n: usize, kind: SumsetKind) -> Result<Classification> {
    let bound_kind = match kind {
        SumsetKind::Linear => BoundKind::TorsionfreeL,
        SumsetKind::Cyclic => BoundKind::TorsionfreeC,
        other => return Err(Error::input(format!("no equality statement for {other} sums"))),
    };
    if set.len() < 3 || n < 3 {
        return Err(Error::input(format!(
            "equality classification needs |A| >= 3 and n >= 3, got |A| = {}, n = {n}",
            set.len()
        )));
    }
    let family = SetFamily::repeated(Integers, set.to_vec(), n)?;
    let sorted = family.members()[0].clone();
    let actual = sumset(&family, kind)?.cardinality();
    let bound_raw = BoundFormula::equal(bound_kind, n, set.len(), TorsionBound::Infinite).raw()?;
    let (is_ap, _) = is_arithmetic_progression(&sorted);
    let exceptional = kind == SumsetKind::Cyclic && set.len() == 3 && n == 5;
    let actual_i = actual as i64;
    let class = if bound_raw <= 0 && actual == 0 {
        EqualityClass::Vacuous
    } else if actual_i < bound_raw {
        EqualityClass::BelowBound
    } else if actual_i == bound_raw {
        if is_ap {
            EqualityClass::ApEquality
        } else if exceptional {
            EqualityClass::ExceptionalK3N5
        } else {
            EqualityClass::UnexpectedEquality
        }
    } else if is_ap {
        EqualityClass::ApWithoutEquality
    } else {
        EqualityClass::Strict
    };
    Ok(Classification {
        set: sorted,
        n,
        kind,
        bound_raw,
        actual,
        is_ap,
        class,
    })
}

/// Classifications of every set in a window, with per-class counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSweep {
    pub records: Vec<Classification>,
    pub counts: BTreeMap<EqualityClass, u64>,
}

impl ClassSweep {
    pub fn anomalies(&self) -> impl Iterator<Item = &Classification> {
        self.records.iter().filter(|c| c.class.is_anomaly())
    }
}

/// Classifies every `A ⊆ {lo, ..., hi}` with `|A|` in `sizes`, for each `n`
/// in `ns` and each kind, ordered by size, then set, then `n`, then kind.
pub fn classify_window(
    (lo, hi): (i64, i64),
    sizes: (usize, usize),
    ns: (usize, usize),
    kinds: &[SumsetKind],
) -> Result<ClassSweep> {
    if hi < lo || hi - lo >= 64 {
        return Err(Error::input(format!("window {lo}..={hi} must hold 1 to 64 integers")));
    }
    let width = (hi - lo + 1) as u32;
    let sets: Vec<Vec<i64>> = (sizes.0..=sizes.1.min(width as usize))
        .flat_map(|k| subsets_of_size(width, k as u32))
        .map(|m| bits(m).map(|x| lo + x as i64).collect())
        .collect();
    let per_set: Vec<Vec<Classification>> = sets
        .par_iter()
        .map(|set| {
            let mut out = Vec::new();
            for n in ns.0..=ns.1 {
                for &kind in kinds {
                    out.push(classify_equality(set, n, kind)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let records: Vec<Classification> = per_set.into_iter().flatten().collect();
    let mut counts = BTreeMap::new();
    for c in &records {
        *counts.entry(c.class).or_insert(0) += 1;
    }
    Ok(ClassSweep { records, counts })
}
