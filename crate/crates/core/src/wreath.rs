//! The ring `Λ^[2]` of 2-symmetric functions in the `p_Θ` basis and its
//! action `⊙` on `Λ`.
//!
//! The action is determined by `p_n(μ) ⊙ f = ψ_n(p_μ^⊥ f)` together with
//! multiplicativity in the first argument, so a monomial `p_Θ` acts as
//! `D_Θ(f) = ∏_μ ψ_{Θ(μ)}(p_μ^⊥ f)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, ParseError, Result};
use crate::partition::Partition;
use crate::rational::{format_q, parse_q, Q};
use crate::series::GenusSeries;
use crate::specht::{conjugacy_type, WreathElement};
use crate::symfunc::SymFunc;
use crate::twopart::TwoPartition;

/// Targets of the `⊙` action: anything with skewing, Adams operations and a
/// commutative product.
pub trait LambdaAlgebra: Clone {
    fn unit() -> Self;
    fn zero() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Q) -> Self;
    fn skewed(&self, mu: &Partition) -> Self;
    /// `ψ_k` for `k >= 1`.
    fn adams_op(&self, k: u32) -> Self;
}

impl LambdaAlgebra for SymFunc {
    fn unit() -> Self {
        SymFunc::one()
    }
    fn zero() -> Self {
        SymFunc::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
    fn skewed(&self, mu: &Partition) -> Self {
        self.skew(mu)
    }
    fn adams_op(&self, k: u32) -> Self {
        self.adams_unchecked(k)
    }
}

impl LambdaAlgebra for GenusSeries {
    fn unit() -> Self {
        GenusSeries::one()
    }
    fn zero() -> Self {
        GenusSeries::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
    fn skewed(&self, mu: &Partition) -> Self {
        self.skew(mu)
    }
    fn adams_op(&self, k: u32) -> Self {
        self.adams_unchecked(k)
    }
}

/// `D_Θ(f) = ∏_μ ∏_{n ∈ Θ(μ)} ψ_n(p_μ^⊥ f)`; the empty Θ gives 1.
pub fn d_theta<F: LambdaAlgebra>(theta: &TwoPartition, f: &F) -> F {
    let mut acc = F::unit();
    for (mu, lambda) in theta.iter() {
        let skewed = f.skewed(mu);
        for &n in lambda.parts() {
            acc = acc.times(&skewed.adams_op(n));
        }
    }
    acc
}

/// `D_Θ(f)` restricted to exponents `<= max_exponent` and degrees
/// `<= max_degree`, truncating partial products along the way.
pub fn d_theta_truncated(
    theta: &TwoPartition,
    f: &GenusSeries,
    max_exponent: i64,
    max_degree: u32,
) -> GenusSeries {
    let mut factors = Vec::new();
    for (mu, lambda) in theta.iter() {
        let skewed = f.skew(mu);
        for &n in lambda.parts() {
            factors.push(skewed.adams_unchecked(n));
        }
    }
    let floors: Vec<i64> = factors.iter().map(|x| x.window().floor()).collect();
    let mut remaining: i64 = floors.iter().sum();
    let mut acc = GenusSeries::one();
    for (factor, floor) in factors.iter().zip(floors) {
        remaining -= floor;
        acc = acc.mul_truncated(factor, max_exponent - remaining, max_degree);
    }
    acc.truncated(max_exponent, max_degree)
}

/// An element of `Λ^[2]`: a finite sum of `c_Θ p_Θ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WreathSymFunc {
    terms: BTreeMap<TwoPartition, Q>,
}

impl WreathSymFunc {
    pub fn zero() -> Self {
        WreathSymFunc::default()
    }

    pub fn one() -> Self {
        WreathSymFunc::monomial(TwoPartition::empty(), Q::one())
    }

    pub fn monomial(theta: TwoPartition, c: Q) -> Self {
        let mut out = WreathSymFunc::zero();
        out.add_term(theta, c);
        out
    }

    /// The generator `p_n(μ)`.
    pub fn generator(n: u32, mu: Partition) -> Self {
        WreathSymFunc::monomial(TwoPartition::single(mu, Partition::single(n)), Q::one())
    }

    pub fn add_term(&mut self, theta: TwoPartition, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(theta).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TwoPartition, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, theta: &TwoPartition) -> Q {
        self.terms.get(theta).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = WreathSymFunc::zero();
        for (t, x) in &self.terms {
            out.add_term(t.clone(), x * c);
        }
        out
    }

    /// The action `g ⊙ f`, extended linearly from `p_Θ ⊙ f = D_Θ(f)`.
    pub fn act<F: LambdaAlgebra>(&self, f: &F) -> F {
        self.terms.iter().fold(F::zero(), |acc, (theta, c)| {
            acc.plus(&d_theta(theta, f).scaled(c))
        })
    }

    /// The algebra map `Λ^[2] → Λ` sending every `p_n(μ)` to `p_n`.
    pub fn specialize(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (theta, c) in &self.terms {
            let lambda = theta
                .iter()
                .fold(Partition::empty(), |acc, (_, l)| acc.union(l));
            out.add_term(lambda, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(t, c)| (t.to_string(), Value::String(format_q(c))))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> std::result::Result<Self, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new("wreath symmetric function must be a JSON object"))?;
        let mut out = WreathSymFunc::zero();
        for (k, v) in obj {
            let c = v.as_str().ok_or_else(|| {
                ParseError::new(format!("coefficient of {k} must be a rational string"))
            })?;
            out.add_term(TwoPartition::parse(k)?, parse_q(c)?);
        }
        Ok(out)
    }

    /// Terms in canonical order, with `Θ` keys, as text lines.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(t, c)| format!("{}  {}", format_q(c), t))
            .collect()
    }
}

/// `p_Θ` written as a product of `p_n[μ]^k` factors, e.g. `p_1[1,1]^3*p_2[1,1,1]`.
pub fn monomial_string(theta: &TwoPartition) -> String {
    if theta.is_empty() {
        return "1".to_string();
    }
    let mut factors = Vec::new();
    for (mu, lambda) in theta.iter() {
        for (n, m) in lambda.multiplicities() {
            if m == 1 {
                factors.push(format!("p_{n}{mu}"));
            } else {
                factors.push(format!("p_{n}{mu}^{m}"));
            }
        }
    }
    factors.join("*")
}

impl fmt::Display for WreathSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (theta, c)) in self.terms.iter().enumerate() {
            let negative = c < &Q::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial_string(theta);
            match (mag.is_one(), theta.is_empty()) {
                (true, _) => f.write_str(&mono)?,
                (false, true) => f.write_str(&format_q(&mag))?,
                (false, false) => write!(f, "{}*{}", format_q(&mag), mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WreathSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &WreathSymFunc {
    type Output = WreathSymFunc;
    fn add(self, rhs: &WreathSymFunc) -> WreathSymFunc {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Mul for &WreathSymFunc {
    type Output = WreathSymFunc;
    fn mul(self, rhs: &WreathSymFunc) -> WreathSymFunc {
        let mut out = WreathSymFunc::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.merge(b), x * y);
            }
        }
        out
    }
}

/// Frobenius characteristic of the trivial representation of `H` induced
/// to `S_ν`: `(1/|H|) Σ_{h ∈ H} p_{Θ^h}`.
///
/// `elements` must list a subgroup of `S_ν`; closure is only checked in
/// debug builds.
pub fn induced_trivial_character(elements: &[WreathElement]) -> Result<WreathSymFunc> {
    let Some(first) = elements.first() else {
        return Err(Error::InvalidArgument(
            "subgroup must contain at least the identity".into(),
        ));
    };
    if let Some(bad) = elements.iter().find(|e| e.profile() != first.profile()) {
        return Err(Error::InvalidArgument(format!(
            "element of S_{} mixed with elements of S_{}",
            bad.profile(),
            first.profile()
        )));
    }
    debug_assert!(is_subgroup(elements), "elements do not form a subgroup");
    let weight = Q::new(BigInt::one(), BigInt::from(elements.len()));
    let mut out = WreathSymFunc::zero();
    for h in elements {
        out.add_term(conjugacy_type(h), weight.clone());
    }
    Ok(out)
}

/// Closure under composition and inverses.
pub fn is_subgroup(elements: &[WreathElement]) -> bool {
    let set: std::collections::HashSet<&WreathElement> = elements.iter().collect();
    elements
        .iter()
        .all(|a| set.contains(&a.inverse()) && elements.iter().all(|b| set.contains(&a.compose(b))))
}
