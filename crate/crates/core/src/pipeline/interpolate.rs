use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{binomial, format_q, q, Q};
use crate::symfunc::SymFunc;

/// A polynomial in `r` with coefficients in `Λ`, written as
/// `Σ_k c_k C(r+1, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPolynomial {
    pub d: u32,
    pub g: i64,
    pub n: u32,
    /// `c_k` at index `k`; trailing zeros are trimmed.
    pub binomial_coeffs: Vec<SymFunc>,
}

impl RPolynomial {
    pub fn evaluate(&self, r: i64) -> SymFunc {
        self.binomial_coeffs
            .iter()
            .enumerate()
            .fold(SymFunc::zero(), |acc, (k, c)| {
                &acc + &c.scale(&binomial(r + 1, k as u32))
            })
    }

    /// Degree in `r`, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.binomial_coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.binomial_coeffs.is_empty()
    }

    /// `16·C(r+1,4)+21·C(r+1,3)+6·C(r+1,2)`, highest `k` first.
    pub fn binomial_form(&self) -> String {
        let mut pieces = Vec::new();
        for (k, c) in self.binomial_coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let scalar =
                (c.len() == 1).then(|| c.coefficient(&crate::partition::Partition::empty()));
            let coeff = match scalar {
                Some(x) if !x.is_zero() && x.is_one() => String::new(),
                Some(x) if !x.is_zero() => format!("{}·", format_q(&x)),
                _ => format!("({c})·"),
            };
            pieces.push(format!("{coeff}C(r+1,{k})"));
        }
        if pieces.is_empty() {
            return "0".into();
        }
        pieces.join("+").replace("+-", "-")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "g": self.g,
            "n": self.n,
            "binomial_coefficients": self.binomial_coeffs.iter().map(SymFunc::to_json).collect::<Vec<_>>(),
            "form": self.binomial_form(),
        })
    }
}

// Lagrange basis weight of node `j` at `x`.
fn lagrange_weight(nodes: &[i64], j: usize, x: i64) -> Q {
    let mut w = Q::one();
    for (m, &xm) in nodes.iter().enumerate() {
        if m != j {
            w = w * q(x - xm) / q(nodes[j] - xm);
        }
    }
    w
}

/// Fits a polynomial of degree `<= d + 1` in `r` through the first `d + 2`
/// samples, then checks that it vanishes at `r = -1` and reproduces every
/// remaining sample exactly.
pub fn interpolate_in_r(d: u32, g: i64, n: u32, samples: &[(i64, SymFunc)]) -> Result<RPolynomial> {
    let need = d as usize + 2;
    let distinct: BTreeSet<i64> = samples.iter().map(|(r, _)| *r).collect();
    if distinct.len() != samples.len() {
        return Err(Error::Interpolation(
            "sample points must be distinct".into(),
        ));
    }
    if samples.len() < need {
        return Err(Error::Interpolation(format!(
            "need at least {need} samples for d = {d}, got {}",
            samples.len()
        )));
    }
    let (fit, held_out) = samples.split_at(need);
    let nodes: Vec<i64> = fit.iter().map(|(r, _)| *r).collect();
    let value_at = |r: i64| -> SymFunc {
        fit.iter()
            .enumerate()
            .fold(SymFunc::zero(), |acc, (j, (_, y))| {
                &acc + &y.scale(&lagrange_weight(&nodes, j, r))
            })
    };
    // forward differences at r + 1 = 0, 1, ..., d + 1
    let values: Vec<SymFunc> = (0..need as i64).map(|x| value_at(x - 1)).collect();
    let mut coeffs: Vec<SymFunc> = (0..need)
        .map(|k| {
            (0..=k).fold(SymFunc::zero(), |acc, j| {
                let sign = if (k - j) % 2 == 0 { q(1) } else { q(-1) };
                &acc + &values[j].scale(&(sign * binomial(k as i64, j as u32)))
            })
        })
        .collect();
    while coeffs.last().is_some_and(SymFunc::is_zero) {
        coeffs.pop();
    }
    let poly = RPolynomial {
        d,
        g,
        n,
        binomial_coeffs: coeffs,
    };
    if poly.binomial_coeffs.first().is_some_and(|c| !c.is_zero()) {
        return Err(Error::Interpolation(format!(
            "interpolant is not divisible by r + 1 (value {} at r = -1)",
            poly.binomial_coeffs[0]
        )));
    }
    for (r, y) in held_out {
        let predicted = poly.evaluate(*r);
        if &predicted != y {
            return Err(Error::Interpolation(format!(
                "held-out sample at r = {r} is {y}, interpolant gives {predicted}"
            )));
        }
    }
    Ok(poly)
}
