//! Exact symmetric functions in the power-sum basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, ParseError, Result};
use crate::partition::{factorial, Partition};
use crate::rational::{format_q, parse_q, q_from_big, Q};

/// An element of `Λ = Q[p_1, p_2, ...]`: a finite sum of `c_λ p_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Q>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        SymFunc::monomial(Partition::empty(), c)
    }

    pub fn monomial(lambda: Partition, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        SymFunc { terms }
    }

    /// `p_λ`.
    pub fn p(parts: &[u32]) -> Self {
        SymFunc::monomial(Partition::new(parts.to_vec()), Q::one())
    }

    /// Complete homogeneous `h_n = Σ_{λ ⊢ n} p_λ / z_λ`.
    pub fn h(n: u32) -> Self {
        let terms = Partition::all_of(n)
            .into_iter()
            .map(|lambda| {
                let c = Q::new(BigInt::one(), BigInt::from(lambda.z()));
                (lambda, c)
            })
            .collect();
        SymFunc { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut out = SymFunc::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
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

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|l| l.size()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|l| l.size())
    }

    pub fn has_degree(&self, n: u32) -> bool {
        self.terms.keys().any(|l| l.size() == n)
    }

    /// The homogeneous component of degree `n`.
    pub fn degree_part(&self, n: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `max`.
    pub fn truncated(&self, max: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() <= max)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// Product, keeping only terms of degree at most `max_degree`.
    pub fn mul_truncated(&self, other: &SymFunc, max_degree: Option<u32>) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(max) = max_degree {
                    if a.size() + b.size() > max {
                        continue;
                    }
                }
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    /// `f^k`.
    pub fn pow(&self, k: u32) -> SymFunc {
        (0..k).fold(SymFunc::one(), |acc, _| &acc * self)
    }

    /// Skewing `p_μ^⊥ f = (∏ i^{m_i(μ)}) ∂^{m(μ)} f / ∏ ∂p_i^{m_i(μ)}`.
    pub fn skew(&self, mu: &Partition) -> SymFunc {
        if mu.is_empty() {
            return self.clone();
        }
        let mults = mu.multiplicities();
        let mut out = SymFunc::zero();
        for (lambda, c) in &self.terms {
            let Some(rest) = lambda.difference(mu) else {
                continue;
            };
            let mut factor = BigInt::one();
            for &(i, m) in &mults {
                let have = lambda.multiplicity(i);
                // i^m times the falling factorial have (have-1) ... (have-m+1)
                for k in 0..m {
                    factor *= BigInt::from(i) * BigInt::from(have - k);
                }
            }
            out.add_term(rest, c * q_from_big(factor));
        }
        out
    }

    /// The Adams operation `ψ_k`, the ring map `p_i ↦ p_{ik}`.
    pub fn adams(&self, k: u32) -> Result<SymFunc> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "Adams operation index must be positive".into(),
            ));
        }
        Ok(self.adams_unchecked(k))
    }

    pub(crate) fn adams_unchecked(&self, k: u32) -> SymFunc {
        if k == 1 {
            return self.clone();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.scaled(k), c.clone()))
                .collect(),
        }
    }

    /// `ψ_μ(f) = p_μ ∘ f = ∏_{parts k of μ} ψ_k(f)`.
    pub fn adams_mu(&self, mu: &Partition) -> SymFunc {
        mu.parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| &acc * &self.adams_unchecked(k))
    }

    /// The image under `p_i ↦ 1` for every `i`.
    pub fn sum_of_coefficients(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// For the degree-`n` part `f_n`: the plain Euler characteristic
    /// `n! [p_1^n] f_n` and the quotient Euler characteristic `<f_n, h_n>`.
    pub fn euler_specializations(&self, n: u32) -> (Q, Q) {
        let part = self.degree_part(n);
        let plain =
            part.coefficient(&Partition::ones(n as usize)) * q_from_big(BigInt::from(factorial(n)));
        (plain, part.sum_of_coefficients())
    }

    /// JSON object mapping `"3,1,1"` (or `""`) to `"num/den"`.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(l, c)| (l.to_csv(), Value::String(format_q(c))))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> std::result::Result<SymFunc, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new("symmetric function must be a JSON object"))?;
        let mut out = SymFunc::zero();
        for (k, v) in obj {
            let lambda = Partition::parse(k)?;
            let c = match v {
                Value::String(s) => parse_q(s)?,
                Value::Number(n) if n.is_i64() => parse_q(&n.to_string())?,
                _ => {
                    return Err(ParseError::new(format!(
                        "coefficient of p[{k}] must be a rational string"
                    )))
                }
            };
            out.add_term(lambda, c);
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (lambda, c)) in self.terms.iter().enumerate() {
            let negative = c < &Q::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if lambda.is_empty() {
                write!(f, "{}", format_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "p{lambda}")?;
            } else {
                write!(f, "{}*p{lambda}", format_q(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.mul_truncated(rhs, None)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SymFunc {
            type Output = SymFunc;
            fn $m(self, rhs: SymFunc) -> SymFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |acc, x| &acc + &x)
    }
}
