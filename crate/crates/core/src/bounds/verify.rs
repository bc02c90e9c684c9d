//! Per-instance checks of the bounds against computed sumsets.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::formula::{BoundFormula, BoundKind, BoundValue};
use crate::domain::{min_torsion, DomainKind};
use crate::engine::{
    cyclic_restricted_sumset, linear_restricted_sumset, AdditiveDomain, SetFamily, SumsetKind,
    SumsetResult, Zp,
};
use crate::error::{Error, Result};

/// The statement an instance is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    ConjectureL,
    ConjectureC,
    TheoremL3,
    TheoremEvenC,
    TheoremOddL,
    /// `3~A` covers `F_p` once `|A| >= floor(p/3) + 2`.
    Corollary,
    TorsionfreeL,
    TorsionfreeC,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::ConjectureL,
        Check::ConjectureC,
        Check::TheoremL3,
        Check::TheoremEvenC,
        Check::TheoremOddL,
        Check::Corollary,
        Check::TorsionfreeL,
        Check::TorsionfreeC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::ConjectureL => "conjecture-l",
            Check::ConjectureC => "conjecture-c",
            Check::TheoremL3 => "theorem-l3",
            Check::TheoremEvenC => "theorem-even-c",
            Check::TheoremOddL => "theorem-odd-l",
            Check::Corollary => "corollary",
            Check::TorsionfreeL => "torsionfree-l",
            Check::TorsionfreeC => "torsionfree-c",
        }
    }

    /// The sumset whose size is compared with the bound.
    pub fn sumset_kind(self) -> SumsetKind {
        match self {
            Check::ConjectureC | Check::TheoremEvenC | Check::TorsionfreeC => SumsetKind::Cyclic,
            _ => SumsetKind::Linear,
        }
    }

    pub fn bound_kind(self) -> Option<BoundKind> {
        Some(match self {
            Check::ConjectureL => BoundKind::ConjectureL,
            Check::ConjectureC => BoundKind::ConjectureC,
            Check::TheoremL3 => BoundKind::TheoremL3,
            Check::TheoremEvenC => BoundKind::TheoremEvenC,
            Check::TheoremOddL => BoundKind::TheoremOddL,
            Check::TorsionfreeL => BoundKind::TorsionfreeL,
            Check::TorsionfreeC => BoundKind::TorsionfreeC,
            Check::Corollary => return None,
        })
    }

    /// True for checks over `n` copies of a single set.
    pub fn single_set(self) -> bool {
        matches!(self, Check::Corollary | Check::TorsionfreeL | Check::TorsionfreeC)
    }

    /// True for checks whose domain is a prime field.
    pub fn over_prime_field(self) -> bool {
        !matches!(self, Check::TorsionfreeL | Check::TorsionfreeC)
    }

    /// Why a shape with these sizes falls outside the statement, if it does.
    /// `p` is `None` in a torsion-free group.
    pub fn hypothesis_gap(self, sizes: &[usize], p: Option<u64>) -> Option<String> {
        let n = sizes.len();
        let total: i64 = sizes.iter().map(|&s| s as i64).sum();
        let equal = sizes.windows(2).all(|w| w[0] == w[1]);
        let beyond_p = |threshold: i64| p.is_some_and(|p| p as i64 <= threshold);
        match self {
            Check::ConjectureL | Check::ConjectureC => {
                if n < 2 {
                    return Some(format!("needs n >= 2, got n = {n}"));
                }
                if sizes.iter().any(|&s| s < 2) {
                    return Some("needs every |A_i| >= 2".into());
                }
            }
            Check::TheoremL3 => {
                if n != 3 {
                    return Some(format!("needs n = 3, got n = {n}"));
                }
                if sizes[0] < 2 || sizes[2] < 2 {
                    return Some("needs |A_1|, |A_3| >= 2".into());
                }
                if sizes[1] != sizes[0] && sizes[1] != sizes[0] + 1 {
                    return Some("needs |A_2| - |A_1| in {0, 1}".into());
                }
            }
            Check::TheoremEvenC | Check::TheoremOddL => {
                let even = self == Check::TheoremEvenC;
                if n == 0 || (n % 2 == 0) != even {
                    let parity = if even { "even" } else { "odd" };
                    return Some(format!("needs {parity} n, got n = {n}"));
                }
                if !equal || sizes[0] < 2 {
                    return Some("needs equal sizes |A_i| >= 2".into());
                }
                let threshold = total - 2 * n as i64 + if even { 0 } else { 1 };
                if beyond_p(threshold) {
                    return Some(format!("needs p > {threshold}"));
                }
            }
            Check::Corollary => {
                let p = p.unwrap_or(0);
                if n != 1 {
                    return Some("takes a single set".into());
                }
                let need = p as usize / 3 + 2;
                if sizes[0] < need {
                    return Some(format!("needs |A| >= {need}"));
                }
            }
            Check::TorsionfreeL | Check::TorsionfreeC => {
                if n < 2 {
                    return Some(format!("needs n >= 2, got n = {n}"));
                }
                if !equal || sizes[0] < 2 {
                    return Some("needs n copies of one set with |A| >= 2".into());
                }
            }
        }
        None
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::input(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The actual size exceeds the bound, or the bound is vacuous.
    Holds,
    /// The actual size equals a positive bound.
    Equality,
    Violated,
    /// The instance lies outside the statement's hypotheses.
    Skipped,
}

impl Verdict {
    pub fn judge(bound: &BoundValue, actual: usize) -> Verdict {
        let actual = actual as i64;
        if actual < bound.clamped {
            Verdict::Violated
        } else if bound.clamped > 0 && actual == bound.clamped {
            Verdict::Equality
        } else {
            Verdict::Holds
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Violated => "violated",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One checked instance. Timing is deliberately left out so that identical
/// inputs serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: Check,
    pub domain: String,
    pub kind: SumsetKind,
    /// Family literal, absent for a skipped shape.
    pub family: Option<String>,
    pub sizes: Vec<usize>,
    pub bound_raw: Option<i64>,
    /// The bound after the minimum with `p(G)` and clamping at zero.
    pub bound: Option<i64>,
    pub actual: Option<usize>,
    pub verdict: Verdict,
    /// Skip reason or extra detail.
    pub note: Option<String>,
    /// The computed sumset.
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn skipped(check: Check, domain: DomainKind, sizes: Vec<usize>, family: Option<String>, reason: String) -> Self {
        VerificationReport {
            check,
            domain: domain.to_string(),
            kind: check.sumset_kind(),
            family,
            sizes,
            bound_raw: None,
            bound: None,
            actual: None,
            verdict: Verdict::Skipped,
            note: Some(reason),
            witness: None,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.check, self.domain)?;
        match &self.family {
            Some(family) => write!(f, " {family}")?,
            None => write!(f, " sizes {:?}", self.sizes)?,
        }
        if let (Some(bound), Some(actual)) = (self.bound, self.actual) {
            write!(f, ": |{}| = {actual}, bound {bound}", self.kind)?;
            if self.bound_raw != Some(bound) {
                write!(f, " (raw {})", self.bound_raw.unwrap_or(bound))?;
            }
        }
        write!(f, " -> {}", self.verdict)?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

/// Builds a report from a computed sumset, or a skipped report when the
/// family is outside the check's hypotheses.
pub(crate) fn report_for<D: AdditiveDomain>(
    check: Check,
    family: &SetFamily<D>,
    shape: Vec<usize>,
    compute: impl FnOnce() -> SumsetResult<D::Elem>,
) -> Result<VerificationReport> {
    let domain = family.domain().kind();
    let torsion = min_torsion(domain);
    let literal = Some(family.to_literal());
    if let Some(reason) = check.hypothesis_gap(&shape, torsion.finite()) {
        return Ok(VerificationReport::skipped(check, domain, shape, literal, reason));
    }
    let result = compute();
    let bound = match check.bound_kind() {
        Some(kind) => BoundFormula::new(kind, family.sizes(), torsion).eval()?,
        // full coverage of F_p
        None => {
            let p = torsion.finite().expect("corollary runs over F_p") as i64;
            BoundValue { raw: p, effective: p, clamped: p }
        }
    };
    Ok(VerificationReport {
        check,
        domain: domain.to_string(),
        kind: check.sumset_kind(),
        family: literal,
        sizes: shape,
        bound_raw: Some(bound.raw),
        bound: Some(bound.clamped),
        actual: Some(result.cardinality()),
        verdict: Verdict::judge(&bound, result.cardinality()),
        note: None,
        witness: Some(result.to_string()),
    })
}

fn require_len<D: AdditiveDomain>(family: &SetFamily<D>, n: usize, what: &str) -> Result<()> {
    if family.len() != n {
        return Err(Error::input(format!(
            "{what} takes {n} sets, got {}",
            family.len()
        )));
    }
    Ok(())
}

/// Checks `|L(A_1, A_2, A_3)| >= min{p, |A_1|+|A_2|+|A_3|-4}`.
pub fn verify_l3_theorem(family: &SetFamily<Zp>) -> Result<VerificationReport> {
    require_len(family, 3, "the three-set theorem")?;
    report_for(Check::TheoremL3, family, family.sizes(), || {
        linear_restricted_sumset(family)
    })
}

/// Checks `|L| >= |C| >= sum|A_i| - 2n + 1` for an even number of equal-size
/// sets with `p > sum|A_i| - 2n`.
pub fn verify_even_c_theorem(family: &SetFamily<Zp>) -> Result<VerificationReport> {
    let mut report = report_for(Check::TheoremEvenC, family, family.sizes(), || {
        cyclic_restricted_sumset(family)
    })?;
    if report.verdict != Verdict::Skipped {
        let linear = linear_restricted_sumset(family).cardinality();
        if Some(linear) < report.actual {
            report.verdict = Verdict::Violated;
            report.note = Some(format!("|L| = {linear} is below |C|"));
        }
    }
    Ok(report)
}

/// Checks `|L| >= sum|A_i| - 2n + 2` for an odd number of equal-size sets
/// with `p > sum|A_i| - 2n + 1`.
pub fn verify_odd_l_theorem(family: &SetFamily<Zp>) -> Result<VerificationReport> {
    report_for(Check::TheoremOddL, family, family.sizes(), || {
        linear_restricted_sumset(family)
    })
}

/// Checks a conjectured bound on an arbitrary family over `F_p`.
pub fn verify_conjecture(family: &SetFamily<Zp>, kind: SumsetKind) -> Result<VerificationReport> {
    let check = match kind {
        SumsetKind::Linear => Check::ConjectureL,
        SumsetKind::Cyclic => Check::ConjectureC,
        other => return Err(Error::input(format!("no conjecture for {other} sums"))),
    };
    report_for(check, family, family.sizes(), || match kind {
        SumsetKind::Linear => linear_restricted_sumset(family),
        _ => cyclic_restricted_sumset(family),
    })
}

/// Checks the torsion-free bound for `n` copies of `set` in `Z^r`.
pub fn verify_torsionfree<D: AdditiveDomain>(
    domain: D,
    set: Vec<D::Elem>,
    n: usize,
    kind: SumsetKind,
) -> Result<VerificationReport> {
    if let DomainKind::PrimeField(p) = domain.kind() {
        return Err(Error::input(format!("F_{p} is not torsion-free")));
    }
    let check = match kind {
        SumsetKind::Linear => Check::TorsionfreeL,
        SumsetKind::Cyclic => Check::TorsionfreeC,
        other => return Err(Error::input(format!("no torsion-free bound for {other} sums"))),
    };
    let family = SetFamily::repeated(domain, set, n)?;
    report_for(check, &family, family.sizes(), || match kind {
        SumsetKind::Linear => linear_restricted_sumset(&family),
        _ => cyclic_restricted_sumset(&family),
    })
}

/// Whether `3~A` is all of `F_p`; `None` when `|A| < floor(p/3) + 2`.
pub fn verify_corollary_coverage(field: Zp, set: Vec<u32>) -> Result<Option<bool>> {
    let report = verify_corollary(field, set)?;
    Ok(match report.verdict {
        Verdict::Skipped => None,
        v => Some(v != Verdict::Violated),
    })
}

/// Checks whether `3~A` covers `F_p`, as a full report.
pub fn verify_corollary(field: Zp, set: Vec<u32>) -> Result<VerificationReport> {
    let family = SetFamily::repeated(field, set, 3)?;
    let shape = vec![family.members()[0].len()];
    report_for(Check::Corollary, &family, shape, || {
        linear_restricted_sumset(&family)
    })
}
