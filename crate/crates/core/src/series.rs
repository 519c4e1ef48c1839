//! Genus series: Laurent families `Σ_e F_e t^e` of symmetric functions with
//! explicit truncation windows.
//!
//! A [`Window`] records which homogeneous components are determined. Every
//! operation propagates windows cell by cell: a coefficient of a result is
//! marked known only if every input cell it depends on is known, or the
//! cell it is paired with is known to vanish. Windows only ever narrow.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::partition::Partition;
use crate::rational::Q;
use crate::symfunc::SymFunc;

/// How much of one `t`-coefficient is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Known {
    Nothing,
    /// Every homogeneous component of degree `<= n`.
    UpTo(u32),
    Everything,
}

impl Known {
    pub fn covers(self, degree: u32) -> bool {
        match self {
            Known::Nothing => false,
            Known::UpTo(n) => degree <= n,
            Known::Everything => true,
        }
    }

    fn lowered(self, by: u32) -> Known {
        match self {
            Known::UpTo(n) if n >= by => Known::UpTo(n - by),
            Known::UpTo(_) => Known::Nothing,
            other => other,
        }
    }

    fn bound(self) -> Option<u32> {
        match self {
            Known::UpTo(n) => Some(n),
            _ => None,
        }
    }
}

/// The region of `(t-exponent, degree)` cells a series determines.
///
/// Exponents below `floor` are known to vanish; `rows[k]` describes exponent
/// `floor + k`, and `rest` every exponent past the rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    floor: i64,
    rows: Vec<Known>,
    rest: Known,
}

impl Window {
    /// Everything known; the series vanishes below `floor`.
    pub fn exact(floor: i64) -> Self {
        Window {
            floor,
            rows: Vec::new(),
            rest: Known::Everything,
        }
    }

    /// Complete for genus `g <= g_max` (exponents `-1 ..= g_max - 1`) and
    /// degrees `<= n_max`; zero below `t^{-1}`.
    pub fn rect(g_max: i64, n_max: u32) -> Self {
        let rows = (0..=g_max).map(|_| Known::UpTo(n_max)).collect();
        Window {
            floor: -1,
            rows,
            rest: Known::Nothing,
        }
        .normalized()
    }

    /// Degree bounds per genus, starting at genus 0 (`t^{-1}`).
    pub fn staircase(n_max_by_genus: &[u32]) -> Self {
        Window {
            floor: -1,
            rows: n_max_by_genus.iter().map(|&n| Known::UpTo(n)).collect(),
            rest: Known::Nothing,
        }
        .normalized()
    }

    pub fn from_parts(floor: i64, rows: Vec<Known>, rest: Known) -> Self {
        Window { floor, rows, rest }.normalized()
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn known(&self, exponent: i64) -> Known {
        if exponent < self.floor {
            return Known::Everything;
        }
        let idx = (exponent - self.floor) as usize;
        self.rows.get(idx).copied().unwrap_or(self.rest)
    }

    /// One past the last explicitly described exponent.
    fn end(&self) -> i64 {
        self.floor + self.rows.len() as i64
    }

    fn normalized(mut self) -> Self {
        while self.rows.last() == Some(&self.rest) {
            self.rows.pop();
        }
        self
    }

    pub fn is_exact(&self) -> bool {
        self.rows.iter().all(|k| *k == Known::Everything) && self.rest == Known::Everything
    }

    /// `(g_max, n_max)` when the window is a plain rectangle from `t^{-1}`.
    pub fn as_rect(&self) -> Option<(i64, u32)> {
        if self.floor != -1 || self.rest != Known::Nothing {
            return None;
        }
        let n = self.rows.first()?.bound()?;
        self.rows
            .iter()
            .all(|k| *k == Known::UpTo(n))
            .then(|| (self.rows.len() as i64 - 1, n))
    }

    /// The first `(exponent, degree)` cell of the `(g_max, n_max)` rectangle
    /// that this window does not cover.
    pub fn first_gap(&self, g_max: i64, n_max: u32) -> Option<(i64, u32)> {
        for e in -1..g_max {
            let k = self.known(e);
            if !k.covers(n_max) {
                let degree = match k {
                    Known::UpTo(n) => n + 1,
                    _ => 0,
                };
                return Some((e, degree));
            }
        }
        None
    }

    pub fn intersect(&self, other: &Window) -> Window {
        let floor = self.floor.min(other.floor);
        let end = self.end().max(other.end());
        let rows = (floor..end)
            .map(|e| self.known(e).min(other.known(e)))
            .collect();
        Window::from_parts(floor, rows, self.rest.min(other.rest))
    }

    fn lowered(&self, by: u32) -> Window {
        Window::from_parts(
            self.floor,
            self.rows.iter().map(|k| k.lowered(by)).collect(),
            self.rest.lowered(by),
        )
    }

    fn shifted(&self, by: i64) -> Window {
        Window {
            floor: self.floor + by,
            rows: self.rows.clone(),
            rest: self.rest,
        }
    }

    fn adams(&self, k: u32) -> Window {
        let k64 = k as i64;
        let floor = self.floor * k64;
        let end = self.end() * k64;
        let rows = (floor..end)
            .map(|e| {
                if e.rem_euclid(k64) != 0 {
                    Known::Everything
                } else {
                    match self.known(e.div_euclid(k64)) {
                        Known::UpTo(n) => Known::UpTo(n * k + k - 1),
                        other => other,
                    }
                }
            })
            .collect();
        let rest = if self.rest == Known::Everything {
            Known::Everything
        } else {
            Known::Nothing
        };
        Window::from_parts(floor, rows, rest)
    }

    /// Restricts to exponents `<= max_exponent` and degrees `<= max_degree`.
    pub fn truncated(&self, max_exponent: i64, max_degree: u32) -> Window {
        let floor = self.floor.min(max_exponent + 1);
        let rows = (floor..=max_exponent)
            .map(|e| self.known(e).min(Known::UpTo(max_degree)))
            .collect();
        Window::from_parts(floor, rows, Known::Nothing)
    }

    pub fn to_json(&self) -> Value {
        if let Some((g_max, n_max)) = self.as_rect() {
            return json!({ "g_max": g_max, "n_max": n_max });
        }
        let known_json = |k: &Known| match k {
            Known::Nothing => Value::Null,
            Known::UpTo(n) => json!(n),
            Known::Everything => json!("all"),
        };
        json!({
            "floor": self.floor,
            "degrees": self.rows.iter().map(known_json).collect::<Vec<_>>(),
            "rest": known_json(&self.rest),
        })
    }

    pub fn from_json(value: &Value) -> std::result::Result<Window, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new("window must be a JSON object"))?;
        let int = |key: &str| -> std::result::Result<Option<i64>, ParseError> {
            match obj.get(key) {
                None => Ok(None),
                Some(v) => v.as_i64().map(Some).ok_or_else(|| {
                    ParseError::new(format!("window field `{key}` must be an integer"))
                }),
            }
        };
        let known = |v: &Value| -> std::result::Result<Known, ParseError> {
            match v {
                Value::Null => Ok(Known::Nothing),
                Value::String(s) if s == "all" => Ok(Known::Everything),
                Value::Number(n) if n.is_u64() => Ok(Known::UpTo(n.as_u64().unwrap() as u32)),
                _ => Err(ParseError::new(format!("bad window degree bound `{v}`"))),
            }
        };
        if let (Some(g), Some(n)) = (int("g_max")?, int("n_max")?) {
            if g < 0 || n < 0 {
                return Err(ParseError::new("window bounds must be nonnegative"));
            }
            return Ok(Window::rect(g, n as u32));
        }
        let floor = int("floor")?
            .ok_or_else(|| ParseError::new("window needs `g_max`/`n_max` or `floor`"))?;
        let rows = obj
            .get("degrees")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new("window needs a `degrees` array"))?
            .iter()
            .map(known)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let rest = obj
            .get("rest")
            .map(known)
            .transpose()?
            .unwrap_or(Known::Nothing);
        Ok(Window::from_parts(floor, rows, rest))
    }
}

/// A Laurent family of symmetric functions indexed by the exponent of `t`
/// (for moduli of curves, `e = g - 1`), together with its [`Window`].
///
/// Only known components are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct GenusSeries {
    coeffs: BTreeMap<i64, SymFunc>,
    window: Window,
}

impl GenusSeries {
    pub fn zero() -> Self {
        GenusSeries {
            coeffs: BTreeMap::new(),
            window: Window::exact(0),
        }
    }

    pub fn one() -> Self {
        GenusSeries::monomial(SymFunc::one(), 0)
    }

    /// `f · t^exponent`, known exactly.
    pub fn monomial(f: SymFunc, exponent: i64) -> Self {
        GenusSeries::exact([(exponent, f)])
    }

    pub fn exact(coeffs: impl IntoIterator<Item = (i64, SymFunc)>) -> Self {
        let mut map: BTreeMap<i64, SymFunc> = BTreeMap::new();
        for (e, f) in coeffs {
            let entry = map.entry(e).or_default();
            *entry = &*entry + &f;
        }
        map.retain(|_, f| !f.is_zero());
        let floor = map.keys().next().copied().unwrap_or(0);
        GenusSeries {
            coeffs: map,
            window: Window::exact(floor),
        }
    }

    /// Attaches a window. Components outside it are discarded.
    pub fn with_window(
        coeffs: impl IntoIterator<Item = (i64, SymFunc)>,
        window: Window,
    ) -> Result<Self> {
        let exact = GenusSeries::exact(coeffs);
        if let Some(&e) = exact.coeffs.keys().next() {
            if e < window.floor() {
                return Err(Error::InvalidArgument(format!(
                    "coefficient at t^{e} lies below the window floor t^{}",
                    window.floor()
                )));
            }
        }
        Ok(exact.restricted(window))
    }

    fn restricted(mut self, window: Window) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, f) in std::mem::take(&mut self.coeffs) {
            let kept = match window.known(e) {
                Known::Nothing => continue,
                Known::UpTo(n) => f.truncated(n),
                Known::Everything => f,
            };
            if !kept.is_zero() {
                coeffs.insert(e, kept);
            }
        }
        GenusSeries { coeffs, window }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Stored coefficients; components outside the window are absent, so
    /// use [`GenusSeries::coefficient`] for checked access.
    pub fn raw_coefficients(&self) -> impl Iterator<Item = (i64, &SymFunc)> {
        self.coeffs.iter().map(|(e, f)| (*e, f))
    }

    /// The degree-`degree` part of the `t^exponent` coefficient.
    pub fn coefficient(&self, exponent: i64, degree: u32) -> Result<SymFunc> {
        if !self.window.known(exponent).covers(degree) {
            return Err(Error::OutsideWindow { exponent, degree });
        }
        Ok(self
            .coeffs
            .get(&exponent)
            .map(|f| f.degree_part(degree))
            .unwrap_or_default())
    }

    /// All components of degree `<= max_degree` at `t^exponent`.
    pub fn coefficient_upto(&self, exponent: i64, max_degree: u32) -> Result<SymFunc> {
        if !self.window.known(exponent).covers(max_degree) {
            return Err(Error::OutsideWindow {
                exponent,
                degree: max_degree,
            });
        }
        Ok(self
            .coeffs
            .get(&exponent)
            .map(|f| f.truncated(max_degree))
            .unwrap_or_default())
    }

    /// Equivariant Euler characteristic in genus `g` with `n` markings,
    /// i.e. the degree-`n` part of the `t^{g-1}` coefficient.
    pub fn genus_entry(&self, g: i64, n: u32) -> Result<SymFunc> {
        self.coefficient(g - 1, n)
    }

    fn is_zero_at(&self, exponent: i64, degree: u32) -> bool {
        self.window.known(exponent).covers(degree)
            && !self
                .coeffs
                .get(&exponent)
                .is_some_and(|f| f.has_degree(degree))
    }

    fn max_degree(&self) -> u32 {
        self.coeffs
            .values()
            .filter_map(SymFunc::max_degree)
            .max()
            .unwrap_or(0)
    }

    fn horizon(&self) -> i64 {
        let last = self
            .coeffs
            .keys()
            .next_back()
            .map(|e| e + 1)
            .unwrap_or(self.window.floor);
        self.window.end().max(last)
    }

    pub fn scale(&self, c: &Q) -> GenusSeries {
        GenusSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, f)| (*e, f.scale(c)))
                .filter(|(_, f)| !f.is_zero())
                .collect(),
            window: self.window.clone(),
        }
    }

    /// Multiplication by `t^by`.
    pub fn shift(&self, by: i64) -> GenusSeries {
        GenusSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, f)| (e + by, f.clone()))
                .collect(),
            window: self.window.shifted(by),
        }
    }

    pub fn add(&self, other: &GenusSeries) -> GenusSeries {
        let window = self.window.intersect(&other.window);
        let mut coeffs = self.coeffs.clone();
        for (e, f) in &other.coeffs {
            let entry = coeffs.entry(*e).or_default();
            *entry = &*entry + f;
        }
        GenusSeries::exact(coeffs).restricted(window)
    }

    pub fn sub(&self, other: &GenusSeries) -> GenusSeries {
        self.add(&other.scale(&-Q::from_integer(1.into())))
    }

    pub fn mul(&self, other: &GenusSeries) -> GenusSeries {
        self.mul_within(other, None)
    }

    /// Product restricted to exponents `<= max_exponent` and degrees
    /// `<= max_degree`.
    pub fn mul_truncated(
        &self,
        other: &GenusSeries,
        max_exponent: i64,
        max_degree: u32,
    ) -> GenusSeries {
        self.mul_within(other, Some((max_exponent, max_degree)))
    }

    fn mul_within(&self, other: &GenusSeries, cap: Option<(i64, u32)>) -> GenusSeries {
        let mut window = self.product_window(other, cap);
        if let Some((max_e, max_n)) = cap {
            window = window.truncated(max_e, max_n);
        }
        let mut coeffs: BTreeMap<i64, SymFunc> = BTreeMap::new();
        for (ea, fa) in &self.coeffs {
            for (eb, fb) in &other.coeffs {
                let e = ea + eb;
                let max_degree = match window.known(e) {
                    Known::Nothing => continue,
                    Known::UpTo(n) => Some(n),
                    Known::Everything => None,
                };
                let prod = fa.mul_truncated(fb, max_degree);
                let entry = coeffs.entry(e).or_default();
                *entry = &*entry + &prod;
            }
        }
        coeffs.retain(|_, f| !f.is_zero());
        GenusSeries { coeffs, window }
    }

    fn product_window(&self, other: &GenusSeries, limit: Option<(i64, u32)>) -> Window {
        let max_exponent = limit.map(|l| l.0);
        let (fa, fb) = (self.window.floor, other.window.floor);
        let floor = fa + fb;
        let both_exact_tail =
            self.window.rest == Known::Everything && other.window.rest == Known::Everything;
        let mut end = self.horizon() + other.horizon();
        if let Some(max_e) = max_exponent {
            end = end.min(max_e + 1).max(floor);
        }
        let bounds = self
            .window
            .rows
            .iter()
            .chain(other.window.rows.iter())
            .chain([&self.window.rest, &other.window.rest])
            .filter_map(|k| k.bound())
            .max();
        let mut cap =
            2 * (bounds.map_or(0, |b| b + 1)) + self.max_degree().max(other.max_degree()) + 2;
        if let Some((_, max_n)) = limit {
            cap = cap.min(max_n + 1);
        }
        let rows = (floor..end)
            .map(|e| self.product_known(other, e, cap))
            .collect();
        let rest = if both_exact_tail && max_exponent.is_none() {
            Known::Everything
        } else {
            Known::Nothing
        };
        Window::from_parts(floor, rows, rest)
    }

    fn product_known(&self, other: &GenusSeries, e: i64, cap: u32) -> Known {
        let splits: Vec<(i64, i64)> = (self.window.floor..=e - other.window.floor)
            .map(|e1| (e1, e - e1))
            .collect();
        if splits.iter().all(|&(e1, e2)| {
            self.window.known(e1) == Known::Everything
                && other.window.known(e2) == Known::Everything
        }) {
            return Known::Everything;
        }
        for n in 0..=cap {
            let ok = splits.iter().all(|&(e1, e2)| {
                let (ka, kb) = (self.window.known(e1), other.window.known(e2));
                (0..=n).all(|n1| {
                    let n2 = n - n1;
                    (ka.covers(n1) && kb.covers(n2))
                        || self.is_zero_at(e1, n1)
                        || other.is_zero_at(e2, n2)
                })
            });
            if !ok {
                return if n == 0 {
                    Known::Nothing
                } else {
                    Known::UpTo(n - 1)
                };
            }
        }
        Known::Everything
    }

    /// `p_μ^⊥` applied coefficientwise.
    pub fn skew(&self, mu: &Partition) -> GenusSeries {
        GenusSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, f)| (*e, f.skew(mu)))
                .filter(|(_, f)| !f.is_zero())
                .collect(),
            window: self.window.lowered(mu.size()),
        }
        .restricted_self()
    }

    fn restricted_self(self) -> GenusSeries {
        let window = self.window.clone();
        self.restricted(window)
    }

    /// `ψ_k`, acting on `t` by `t^m ↦ t^{km}`.
    pub fn adams(&self, k: u32) -> Result<GenusSeries> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "Adams operation index must be positive".into(),
            ));
        }
        Ok(self.adams_unchecked(k))
    }

    pub(crate) fn adams_unchecked(&self, k: u32) -> GenusSeries {
        if k == 1 {
            return self.clone();
        }
        GenusSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, f)| (e * k as i64, f.adams_unchecked(k)))
                .collect(),
            window: self.window.adams(k),
        }
    }

    pub fn truncated(&self, max_exponent: i64, max_degree: u32) -> GenusSeries {
        self.clone()
            .restricted(self.window.truncated(max_exponent, max_degree))
    }

    /// Checks that every cell of the `(g_max, n_max)` rectangle is known.
    pub fn require_rect(&self, g_max: i64, n_max: u32) -> Result<()> {
        match self.window.first_gap(g_max, n_max) {
            Some((exponent, degree)) => Err(Error::OutsideWindow { exponent, degree }),
            None => Ok(()),
        }
    }

    /// Equality of every cell known to both series.
    pub fn agrees_with(&self, other: &GenusSeries, g_max: i64, n_max: u32) -> Result<bool> {
        for e in -1..g_max {
            if self.coefficient_upto(e, n_max)? != other.coefficient_upto(e, n_max)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(e, f)| json!({ "t": e, "value": f.to_json() }))
            .collect();
        json!({ "coeffs": coeffs, "window": self.window.to_json() })
    }

    pub fn from_json(value: &Value) -> std::result::Result<GenusSeries, ParseError> {
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new("genus series needs a `coeffs` array"))?;
        let window = match value.get("window") {
            Some(w) => Window::from_json(w)?,
            None => return Err(ParseError::new("genus series needs a `window`")),
        };
        let mut pairs = Vec::new();
        for c in coeffs {
            let e = c
                .get("t")
                .and_then(Value::as_i64)
                .ok_or_else(|| ParseError::new("coefficient entry needs integer `t`"))?;
            let f = SymFunc::from_json(
                c.get("value")
                    .ok_or_else(|| ParseError::new("coefficient entry needs `value`"))?,
            )?;
            pairs.push((e, f));
        }
        GenusSeries::with_window(pairs, window).map_err(|e| ParseError::new(e.to_string()))
    }
}

impl fmt::Display for GenusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let pieces: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| format!("({c})*t^{e}"))
            .collect();
        f.write_str(&pieces.join(" + "))
    }
}

impl fmt::Debug for GenusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{:?}]", self.window)
    }
}

impl Default for GenusSeries {
    fn default() -> Self {
        GenusSeries::zero()
    }
}
