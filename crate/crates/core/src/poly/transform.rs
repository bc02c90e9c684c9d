//! The falling-factorial transform `L(P)` of a homogeneous polynomial, the
//! path and cycle difference polynomials, and the identities tying them to
//! coefficient extraction.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff::{coeff_of_product_with_linear_power, factorial};
use super::multi::MultiPoly;
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// `Q_n = (x_1 - x_2)(x_2 - x_3) ... (x_{n-1} - x_n)`.
pub fn path_polynomial(n: usize) -> Result<MultiPoly> {
    if n < 2 {
        return Err(Error::input(format!("path polynomial needs n >= 2, got {n}")));
    }
    (0..n - 1).try_fold(MultiPoly::one(n), |acc, i| acc.mul(&difference(n, i, i + 1)?))
}

/// `P_n = Q_n (x_n - x_1)`.
pub fn cycle_polynomial(n: usize) -> Result<MultiPoly> {
    path_polynomial(n)?.mul(&difference(n, n - 1, 0)?)
}

fn difference(n: usize, i: usize, j: usize) -> Result<MultiPoly> {
    MultiPoly::var(n, i)?.sub(&MultiPoly::var(n, j)?)
}

/// `L(P)(x) = sum c_j (x)_{j_1} ... (x)_{j_n}` for homogeneous `P`.
pub fn l_transform(p: &MultiPoly) -> Result<UniPoly> {
    if p.homogeneous_degree().is_none() {
        return Err(Error::input("the falling-factorial transform needs a homogeneous polynomial"));
    }
    let mut falling: HashMap<u32, UniPoly> = HashMap::new();
    let mut out = UniPoly::zero();
    for (e, c) in p.terms() {
        let mut term = UniPoly::constant(c.clone());
        for &j in e {
            if j > 0 {
                let ff = falling.entry(j).or_insert_with(|| UniPoly::falling_factorial(j));
                term = term.mul(ff);
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Both sides of
/// `[x_1^k ... x_n^k] P (sum x_i)^(kn - deg P) = (kn - deg P)! / (k!)^n * L(P)(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySides {
    /// Left side, by sparse coefficient extraction.
    pub extracted: BigInt,
    /// `L(P)(k)`.
    pub transform_at_k: BigInt,
    /// `(kn - deg P)!`.
    pub numerator: BigInt,
    /// `(k!)^n`.
    pub denominator: BigInt,
}

impl IdentitySides {
    /// Cross-multiplied comparison, so no division is needed.
    pub fn holds(&self) -> bool {
        &self.extracted * &self.denominator == &self.numerator * &self.transform_at_k
    }

    /// The right side, when it is an integer.
    pub fn transformed(&self) -> Option<BigInt> {
        let prod = &self.numerator * &self.transform_at_k;
        (&prod % &self.denominator)
            .is_zero()
            .then(|| prod / &self.denominator)
    }
}

pub fn l_identity_sides(p: &MultiPoly, k: u32) -> Result<IdentitySides> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let Some(deg) = p.degree() else {
        return Err(Error::input("the polynomial must be nonzero"));
    };
    let n = p.nvars() as u32;
    if deg > k * n {
        return Err(Error::input(format!("deg P = {deg} exceeds kn = {}", k * n)));
    }
    let transform = l_transform(p)?;
    Ok(IdentitySides {
        extracted: coeff_of_product_with_linear_power(p, &vec![k; n as usize])?,
        transform_at_k: transform.eval(&BigInt::from(k)),
        numerator: BigInt::from(factorial(k * n - deg)),
        denominator: BigInt::from(factorial(k).pow(n)),
    })
}

pub fn l_identity_check(p: &MultiPoly, k: u32) -> Result<bool> {
    Ok(l_identity_sides(p, k)?.holds())
}

/// Checks `L(P_{n+1}) = x L(Q_n) + x^2 L(Q_{n-2})` for odd `n >= 5`, with each
/// transform computed from its own expansion.
pub fn l_recursion_check(n: usize) -> Result<bool> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::input(format!("recursion needs odd n >= 5, got {n}")));
    }
    let lhs = l_transform(&cycle_polynomial(n + 1)?)?;
    let x = UniPoly::x();
    let rhs = x
        .mul(&l_transform(&path_polynomial(n)?)?)
        .add(&x.mul(&x).mul(&l_transform(&path_polynomial(n - 2)?)?));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn x_pow(c: i64, d: usize) -> UniPoly {
        UniPoly::monomial(BigInt::from(c), d)
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(path_polynomial(2).unwrap().to_string(), "x1 - x2");
        assert_eq!(cycle_polynomial(2).unwrap().to_string(), "-x1^2 + 2*x1*x2 - x2^2");
        assert_eq!(path_polynomial(3).unwrap().to_string(), "x1*x2 - x1*x3 - x2^2 + x2*x3");
        assert!(path_polynomial(1).is_err());
        assert!(cycle_polynomial(0).is_err());
    }

    #[test]
    fn transform_examples() {
        let x1x2 = MultiPoly::monomial(BigInt::one(), vec![1, 1]);
        assert_eq!(l_transform(&x1x2).unwrap(), x_pow(1, 2));
        assert_eq!(l_transform(&path_polynomial(3).unwrap()).unwrap(), x_pow(1, 1));
        assert_eq!(l_transform(&cycle_polynomial(4).unwrap()).unwrap(), x_pow(2, 2));
        let mixed = x1x2.add(&MultiPoly::var(2, 0).unwrap()).unwrap();
        assert!(l_transform(&mixed).is_err());
    }

    #[test]
    fn identity_examples() {
        let sides = l_identity_sides(&cycle_polynomial(4).unwrap(), 2).unwrap();
        assert!(sides.holds());
        assert_eq!(sides.extracted, BigInt::from(12));
        assert_eq!(sides.transformed(), Some(BigInt::from(12)));

        let sides = l_identity_sides(&path_polynomial(3).unwrap(), 1).unwrap();
        assert!(sides.holds());
        assert_eq!(sides.extracted, BigInt::from(1));

        let x1x2 = MultiPoly::monomial(BigInt::one(), vec![1, 1]);
        let sides = l_identity_sides(&x1x2, 1).unwrap();
        assert!(sides.holds());
        assert_eq!(sides.extracted, BigInt::from(1));

        assert!(l_identity_check(&cycle_polynomial(4).unwrap(), 0).is_err());
        // deg 6 > kn = 5
        assert!(l_identity_check(&MultiPoly::monomial(BigInt::one(), vec![6, 0, 0, 0, 0]), 1).is_err());
    }

    #[test]
    fn recursion_examples() {
        for n in [5, 7, 9] {
            assert!(l_recursion_check(n).unwrap(), "n = {n}");
        }
        assert!(l_recursion_check(3).is_err());
        assert!(l_recursion_check(6).is_err());
    }
}
