//! Coefficient extraction from `P * (x_1 + ... + x_n)^m` without expanding the
//! power, the closed-form coefficients it is checked against, and the
//! nonvanishing-coefficient certificate for sumset lower bounds.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::multi::MultiPoly;
use crate::domain::TorsionBound;
use crate::error::{Error, Result};

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial coefficient, so division is exact
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

/// Multinomial coefficient `m! / (e_1! ... e_n!)`: the coefficient of
/// `x^e` in `(x_1 + ... + x_n)^m`. Zero when the exponents do not sum to `m`.
pub fn linear_power_coeff(exponents: &[u32], m: u32) -> BigUint {
    let total: u64 = exponents.iter().map(|&e| e as u64).sum();
    if total != m as u64 {
        return BigUint::zero();
    }
    let mut partial = 0;
    let mut acc = BigUint::one();
    for &e in exponents {
        partial += e;
        acc *= binomial(partial, e);
    }
    acc
}

/// `[x^target] P * (x_1 + ... + x_n)^(|target| - deg P)`, summing over the
/// sparse terms of `P`.
pub fn coeff_of_product_with_linear_power(p: &MultiPoly, target: &[u32]) -> Result<BigInt> {
    if target.len() != p.nvars() {
        return Err(Error::DimensionMismatch {
            left: p.nvars(),
            right: target.len(),
        });
    }
    let Some(deg) = p.degree() else {
        return Ok(BigInt::zero());
    };
    let total: u32 = target.iter().sum();
    let Some(m) = total.checked_sub(deg) else {
        return Err(Error::input(format!(
            "target degree {total} is below deg P = {deg}"
        )));
    };
    let mut acc = BigInt::zero();
    let mut rest = vec![0u32; target.len()];
    'terms: for (e, c) in p.terms() {
        for (slot, (&t, &ei)) in rest.iter_mut().zip(target.iter().zip(e)) {
            match t.checked_sub(ei) {
                Some(r) => *slot = r,
                None => continue 'terms,
            }
        }
        let mult = linear_power_coeff(&rest, m);
        if !mult.is_zero() {
            acc += c * BigInt::from(mult);
        }
    }
    Ok(acc)
}

/// Divides, asserting the remainder is zero.
fn exact_div(num: BigInt, den: BigInt) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "closed form is not integral: remainder {r}");
    q
}

/// `[x1^k1 x2^k2 x3^k3] (x1 - x2)(x2 - x3)(x1 + x2 + x3)^(k1+k2+k3-2)`
/// in closed form: `(K-2)! / (k1! k2! k3!) * (k2 + (k2 - k1)(k3 - k2))`.
pub fn anr_coefficient(k1: u32, k2: u32, k3: u32) -> Result<BigInt> {
    if k1 == 0 || k2 == 0 || k3 == 0 {
        return Err(Error::input("exponents must be positive"));
    }
    let (a, b, c) = (k1 as i64, k2 as i64, k3 as i64);
    let factor = BigInt::from(b + (b - a) * (c - b));
    let num = BigInt::from(factorial(k1 + k2 + k3 - 2)) * factor;
    let den = BigInt::from(factorial(k1) * factorial(k2) * factorial(k3));
    Ok(exact_div(num, den))
}

/// `[x_1^k ... x_n^k] P_n (x_1 + ... + x_n)^((k-1)n)` for even `n`, in closed
/// form `((k-1)n)! / (k!)^n * 2 k^(n/2)`.
pub fn even_cycle_coefficient(n: u32, k: u32) -> Result<BigInt> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::input(format!("n = {n} must be even and at least 2")));
    }
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let num = BigInt::from(factorial((k - 1) * n)) * 2 * BigInt::from(k).pow(n / 2);
    let den = BigInt::from(factorial(k).pow(n));
    Ok(exact_div(num, den))
}

/// `[x_1^k ... x_n^k] Q_n (x_1 + ... + x_n)^((k-1)n+1)` for odd `n`, in closed
/// form `((k-1)n+1)! / (k!)^n * k^((n-1)/2)`.
pub fn odd_path_coefficient(n: u32, k: u32) -> Result<BigInt> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::input(format!("n = {n} must be odd and at least 3")));
    }
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let num = BigInt::from(factorial((k - 1) * n + 1)) * BigInt::from(k).pow((n - 1) / 2);
    let den = BigInt::from(factorial(k).pow(n));
    Ok(exact_div(num, den))
}

/// Outcome of the coefficient test for a restricted-sumset lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffCertificate {
    /// Integer coefficient `h` at `(|A_1|-1, ..., |A_n|-1)`.
    pub coefficient: BigInt,
    /// `h mod p` in characteristic `p`; `None` in characteristic zero.
    pub residue: Option<u64>,
    /// `sum(|A_i| - 1) - deg P + 1`, the bound a nonzero coefficient certifies.
    pub candidate_bound: i64,
    /// `Some(candidate_bound)` iff `h` is nonzero in the field.
    pub certified_bound: Option<i64>,
}

/// Evaluates the coefficient of `x^(|A_i|-1)` in `P * (sum x_i)^(sum(|A_i|-1) - deg P)`
/// and, when it is nonzero in characteristic `char`, certifies
/// `|{a_1 + ... + a_n : P(a) != 0}| >= sum(|A_i| - 1) - deg P + 1`.
pub fn certified_lower_bound(p: &MultiPoly, sizes: &[usize], char: TorsionBound) -> Result<CoeffCertificate> {
    if p.is_zero() {
        return Err(Error::input("the polynomial must be nonzero"));
    }
    if sizes.len() != p.nvars() {
        return Err(Error::DimensionMismatch {
            left: p.nvars(),
            right: sizes.len(),
        });
    }
    if sizes.contains(&0) {
        return Err(Error::input("sets must be nonempty"));
    }
    let target: Vec<u32> = sizes.iter().map(|&s| (s - 1) as u32).collect();
    let budget: u32 = target.iter().sum();
    let deg = p.degree().expect("nonzero");
    if deg > budget {
        return Err(Error::input(format!(
            "deg P = {deg} exceeds sum(|A_i| - 1) = {budget}"
        )));
    }
    let coefficient = coeff_of_product_with_linear_power(p, &target)?;
    let residue = char.finite().map(|q| {
        coefficient
            .mod_floor(&BigInt::from(q))
            .to_u64()
            .expect("residue below modulus")
    });
    let nonzero = match residue {
        Some(r) => r != 0,
        None => !coefficient.is_zero(),
    };
    let candidate_bound = budget as i64 - deg as i64 + 1;
    Ok(CoeffCertificate {
        certified_bound: nonzero.then_some(candidate_bound),
        coefficient,
        residue,
        candidate_bound,
    })
}
