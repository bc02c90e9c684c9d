//! The `identities` subcommand: falling-factorial transforms of the path and
//! cycle polynomials, the recursion linking them, and the closed-form
//! coefficients checked against sparse extraction.

use std::io::{self, Write};

use num_bigint::BigInt;
use serde::Serialize;
use sumset_core::poly::{
    anr_coefficient, coeff_of_product_with_linear_power, cycle_polynomial, even_cycle_coefficient,
    l_identity_sides, l_recursion_check, l_transform, odd_path_coefficient, path_polynomial, MultiPoly,
    UniPoly,
};

use crate::args::{Format, IdentityArgs};
use crate::{Failure, Status};

const MAX_N: usize = 16;
const MAX_COEFF_N: usize = 10;
const MAX_K: u32 = 8;

#[derive(Debug, Serialize)]
struct Instance {
    identity: &'static str,
    params: String,
    expected: String,
    actual: String,
    pass: bool,
}

impl Instance {
    fn new(identity: &'static str, params: String, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Instance {
            identity,
            params,
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

fn check_caps(args: &IdentityArgs) -> Result<(), Failure> {
    let over = |what: &str, got: u64, cap: u64| {
        Failure::Resource(format!("{what} = {got} exceeds the cap of {cap}"))
    };
    if args.max_n > MAX_N {
        return Err(over("--max-n", args.max_n as u64, MAX_N as u64));
    }
    if args.max_coeff_n > MAX_COEFF_N {
        return Err(over("--max-coeff-n", args.max_coeff_n as u64, MAX_COEFF_N as u64));
    }
    if args.max_k > MAX_K {
        return Err(over("--max-k", args.max_k as u64, MAX_K as u64));
    }
    Ok(())
}

fn transforms(max_n: usize) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let inst = if n % 2 == 0 {
            let expected = UniPoly::monomial(BigInt::from(2), n / 2);
            let actual = l_transform(&cycle_polynomial(n)?)?;
            Instance::new("cycle-transform", format!("n={n}"), expected, actual)
        } else {
            let expected = UniPoly::monomial(BigInt::from(1), (n - 1) / 2);
            let actual = l_transform(&path_polynomial(n)?)?;
            Instance::new("path-transform", format!("n={n}"), expected, actual)
        };
        out.push(inst);
    }
    // the recursion relates the cycle polynomial on n + 1 variables to paths
    for n in (5..max_n).step_by(2) {
        let holds = l_recursion_check(n)?;
        out.push(Instance::new("recursion", format!("n={n}"), true, holds));
    }
    Ok(out)
}

fn coefficient_identities(max_n: usize, max_k: u32) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let polys: [(&str, MultiPoly); 2] = [("path", path_polynomial(n)?), ("cycle", cycle_polynomial(n)?)];
        for (name, poly) in &polys {
            let deg = poly.degree().unwrap_or(0);
            for k in 1..=max_k {
                if deg > k * n as u32 {
                    continue;
                }
                let sides = l_identity_sides(poly, k)?;
                let expected = match sides.transformed() {
                    Some(v) => v.to_string(),
                    None => "non-integral".to_string(),
                };
                out.push(Instance::new(
                    "transform-extraction",
                    format!("{name} n={n} k={k}"),
                    expected,
                    sides.extracted,
                ));
            }
        }
    }
    Ok(out)
}

fn closed_forms(max_n: usize, max_k: u32) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    let q3 = path_polynomial(3)?;
    for k1 in 1..=max_k {
        for k2 in 1..=max_k {
            for k3 in 1..=max_k {
                out.push(Instance::new(
                    "three-set-closed-form",
                    format!("k=({k1},{k2},{k3})"),
                    coeff_of_product_with_linear_power(&q3, &[k1, k2, k3])?,
                    anr_coefficient(k1, k2, k3)?,
                ));
            }
        }
    }
    for n in 2..=max_n {
        let (name, poly) = if n % 2 == 0 {
            ("even-cycle-closed-form", cycle_polynomial(n)?)
        } else if n >= 3 {
            ("odd-path-closed-form", path_polynomial(n)?)
        } else {
            continue;
        };
        for k in 1..=max_k {
            let closed = if n % 2 == 0 {
                even_cycle_coefficient(n as u32, k)?
            } else {
                odd_path_coefficient(n as u32, k)?
            };
            out.push(Instance::new(
                name,
                format!("n={n} k={k}"),
                coeff_of_product_with_linear_power(&poly, &vec![k; n])?,
                closed,
            ));
        }
    }
    Ok(out)
}

pub fn run(args: &IdentityArgs) -> Result<Status, Failure> {
    check_caps(args)?;
    let mut out = io::stdout().lock();
    if args.show_polynomials {
        for n in 2..=args.max_n {
            writeln!(out, "Q_{n} = {}", path_polynomial(n)?)?;
            writeln!(out, "P_{n} = {}", cycle_polynomial(n)?)?;
        }
    }
    let mut instances = transforms(args.max_n)?;
    instances.extend(coefficient_identities(args.max_coeff_n, args.max_k)?);
    instances.extend(closed_forms(args.max_coeff_n, args.max_k)?);
    let failed = instances.iter().filter(|i| !i.pass).count();
    for inst in &instances {
        match args.format {
            Format::Text if inst.pass => {
                writeln!(out, "pass {} {}: {}", inst.identity, inst.params, inst.actual)?;
            }
            Format::Text => writeln!(
                out,
                "FAIL {} {}: expected {}, got {}",
                inst.identity, inst.params, inst.expected, inst.actual
            )?,
            Format::Jsonl => {
                serde_json::to_writer(&mut out, inst).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
    }
    match args.format {
        Format::Text => writeln!(out, "{} identity instances, {failed} failed", instances.len())?,
        Format::Jsonl => writeln!(
            out,
            "{}",
            serde_json::json!({ "instances": instances.len(), "failed": failed })
        )?,
    }
    Ok(if failed == 0 { Status::Pass } else { Status::Violation })
}
