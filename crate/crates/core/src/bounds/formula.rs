//! Lower-bound formulas for restricted sumset cardinalities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domain::TorsionBound;
use crate::error::{Error, Result};

/// Which lower bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// Conjectured bound for linear restricted sums of any family.
    ConjectureL,
    /// Conjectured bound for cyclic restricted sums of any family.
    ConjectureC,
    /// Three-set bound `min{p, |A_1|+|A_2|+|A_3|-4}`.
    TheoremL3,
    /// Cyclic bound for an even number of equal-size sets.
    TheoremEvenC,
    /// Linear bound for an odd number of equal-size sets.
    TheoremOddL,
    /// Linear bound for `n` copies of one set in a torsion-free group.
    TorsionfreeL,
    /// Cyclic bound for `n` copies of one set in a torsion-free group.
    TorsionfreeC,
    /// `|A +^ B| >= min{p, |A|+|B|-2}` for `0 < |A| < |B|`.
    AnrPair,
}

impl BoundKind {
    pub const ALL: [BoundKind; 8] = [
        BoundKind::ConjectureL,
        BoundKind::ConjectureC,
        BoundKind::TheoremL3,
        BoundKind::TheoremEvenC,
        BoundKind::TheoremOddL,
        BoundKind::TorsionfreeL,
        BoundKind::TorsionfreeC,
        BoundKind::AnrPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::ConjectureL => "conjecture-l",
            BoundKind::ConjectureC => "conjecture-c",
            BoundKind::TheoremL3 => "theorem-l3",
            BoundKind::TheoremEvenC => "theorem-even-c",
            BoundKind::TheoremOddL => "theorem-odd-l",
            BoundKind::TorsionfreeL => "torsionfree-l",
            BoundKind::TorsionfreeC => "torsionfree-c",
            BoundKind::AnrPair => "anr-pair",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A bound kind together with its parameters. The number of summands is
/// `sizes.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundFormula {
    pub kind: BoundKind,
    pub sizes: Vec<usize>,
    pub torsion: TorsionBound,
}

/// An evaluated bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    /// The formula itself, possibly zero or negative.
    pub raw: i64,
    /// `min(p(G), raw)`.
    pub effective: i64,
    /// `max(0, effective)`, the value an actual cardinality is compared with.
    pub clamped: i64,
}

impl BoundValue {
    /// True when the inequality says nothing.
    pub fn is_vacuous(&self) -> bool {
        self.clamped == 0
    }
}

/// `{n}_2`, the least nonnegative residue of `n` mod 2.
fn parity(n: usize) -> i64 {
    (n % 2) as i64
}

impl BoundFormula {
    pub fn new(kind: BoundKind, sizes: Vec<usize>, torsion: TorsionBound) -> Self {
        BoundFormula {
            kind,
            sizes,
            torsion,
        }
    }

    /// `n` copies of a set of size `k`.
    pub fn equal(kind: BoundKind, n: usize, k: usize, torsion: TorsionBound) -> Self {
        Self::new(kind, vec![k; n], torsion)
    }

    fn arity_error(&self, expected: &str) -> Error {
        Error::input(format!(
            "{} takes {expected} sizes, got {}",
            self.kind,
            self.sizes.len()
        ))
    }

    fn require_equal(&self) -> Result<()> {
        if self.sizes.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::input(format!("{} needs equal sizes", self.kind)));
        }
        Ok(())
    }

    /// The formula value before taking the minimum with `p(G)`.
    pub fn raw(&self) -> Result<i64> {
        let n = self.sizes.len();
        if n == 0 {
            return Err(self.arity_error("at least one"));
        }
        let total: i64 = self.sizes.iter().map(|&s| s as i64).sum();
        let n_i = n as i64;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        Ok(match self.kind {
            BoundKind::ConjectureL => total - 2 * n_i + 1 + parity(n),
            BoundKind::ConjectureC => total - 2 * n_i + sign * (1 + parity(n)),
            BoundKind::TheoremL3 => {
                if n != 3 {
                    return Err(self.arity_error("exactly 3"));
                }
                total - 4
            }
            BoundKind::TheoremEvenC => {
                self.require_equal()?;
                total - 2 * n_i + 1
            }
            BoundKind::TheoremOddL => {
                self.require_equal()?;
                total - 2 * n_i + 2
            }
            BoundKind::TorsionfreeL => {
                self.require_equal()?;
                total - 2 * n_i + 1 + parity(n)
            }
            BoundKind::TorsionfreeC => {
                self.require_equal()?;
                total - 2 * n_i + sign * (1 + parity(n))
            }
            BoundKind::AnrPair => {
                if n != 2 {
                    return Err(self.arity_error("exactly 2"));
                }
                total - 2
            }
        })
    }

    pub fn eval(&self) -> Result<BoundValue> {
        let raw = self.raw()?;
        let effective = self.torsion.min_with(raw);
        Ok(BoundValue {
            raw,
            effective,
            clamped: effective.max(0),
        })
    }
}

/// Evaluates a bound formula.
pub fn eval_bound(formula: &BoundFormula) -> Result<BoundValue> {
    formula.eval()
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: TorsionBound = TorsionBound::Infinite;

    fn value(kind: BoundKind, sizes: &[usize], torsion: TorsionBound) -> BoundValue {
        eval_bound(&BoundFormula::new(kind, sizes.to_vec(), torsion)).unwrap()
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(value(BoundKind::ConjectureL, &[3, 3, 3], INF).clamped, 5);
        assert_eq!(value(BoundKind::ConjectureC, &[3, 3, 3], INF).clamped, 1);
        let c = value(BoundKind::ConjectureC, &[2, 2, 2], INF);
        assert_eq!((c.raw, c.clamped), (-2, 0));
        assert!(c.is_vacuous());
        // even n: the sign flips and the parity term vanishes
        assert_eq!(value(BoundKind::ConjectureL, &[3, 3, 3, 3], INF).raw, 5);
        assert_eq!(value(BoundKind::ConjectureC, &[3, 3, 3, 3], INF).raw, 5);
    }

    #[test]
    fn theorem_formulas() {
        assert_eq!(value(BoundKind::TheoremL3, &[2, 3, 4], INF).raw, 5);
        assert_eq!(value(BoundKind::TheoremEvenC, &[3; 4], INF).raw, 5);
        assert_eq!(value(BoundKind::TheoremOddL, &[2; 5], INF).raw, 2);
        assert_eq!(value(BoundKind::TorsionfreeL, &[3; 4], INF).raw, 5);
        assert_eq!(value(BoundKind::TorsionfreeC, &[3; 5], INF).raw, 3);
        assert_eq!(value(BoundKind::AnrPair, &[2, 3], INF).raw, 3);
    }

    #[test]
    fn torsion_caps_the_bound() {
        let v = value(BoundKind::TheoremL3, &[3, 3, 3], TorsionBound::Finite(3));
        assert_eq!((v.raw, v.effective, v.clamped), (5, 3, 3));
        let v = value(BoundKind::ConjectureL, &[7, 7, 7], TorsionBound::Finite(7));
        assert_eq!(v.effective, 7);
        let v = value(BoundKind::TheoremL3, &[2, 2, 2], TorsionBound::Finite(5));
        assert_eq!(v.effective, 2);
    }

    #[test]
    fn arity_is_checked() {
        let bad = |kind, sizes: &[usize]| eval_bound(&BoundFormula::new(kind, sizes.to_vec(), INF)).is_err();
        assert!(bad(BoundKind::TheoremL3, &[2, 2]));
        assert!(bad(BoundKind::AnrPair, &[2, 2, 2]));
        assert!(bad(BoundKind::TheoremEvenC, &[2, 3]));
        assert!(bad(BoundKind::ConjectureL, &[]));
    }
}
