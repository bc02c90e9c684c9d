//! Exact polynomial arithmetic for the polynomial method.

pub mod coeff;
pub mod multi;
pub mod transform;
pub mod uni;

pub use coeff::{
    anr_coefficient, certified_lower_bound, coeff_of_product_with_linear_power,
    even_cycle_coefficient, linear_power_coeff, odd_path_coefficient, CoeffCertificate,
};
pub use multi::{poly_mul, Exponents, MultiPoly};
pub use transform::{
    cycle_polynomial, l_identity_check, l_identity_sides, l_recursion_check, l_transform,
    path_polynomial, IdentitySides,
};
pub use uni::UniPoly;
