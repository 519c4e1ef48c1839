use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::rational::{format_q, q, Q};
use crate::series::{GenusSeries, Known, Window};
use crate::symfunc::SymFunc;

/// Which moduli spaces a table describes: the compactifications `M̄_{g,n}`
/// (input to the stable-maps sum) or the open `M_{g,n}` (input to the
/// compactification sum).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureKind {
    #[default]
    Compactified,
    Open,
}

impl FixtureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FixtureKind::Compactified => "compactified",
            FixtureKind::Open => "open",
        }
    }

    pub fn parse(text: &str) -> std::result::Result<FixtureKind, ParseError> {
        match text {
            "compactified" => Ok(FixtureKind::Compactified),
            "open" => Ok(FixtureKind::Open),
            other => Err(ParseError::new(format!("unknown fixture kind `{other}`"))),
        }
    }

    // χ(M̄_{0,4}) = χ(P¹) and χ(M_{0,4}) = χ(P¹ minus three points).
    fn four_point_euler(self) -> i64 {
        match self {
            FixtureKind::Compactified => 2,
            FixtureKind::Open => -1,
        }
    }
}

/// A tabulated value of `χ^{S_n}` of one moduli space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureEntry {
    pub value: SymFunc,
    pub provenance: String,
}

/// Tabulated input data, keyed by `(g, n)`.
///
/// A cell is *known* when it is unstable (`2g - 2 + n <= 0`, hence zero) or
/// has an entry. The optional window `(g_max, n_max)` claims every stable
/// cell inside it has an entry; validation checks the claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixtureTable {
    kind: FixtureKind,
    entries: BTreeMap<(i64, u32), FixtureEntry>,
    window: Option<(i64, u32)>,
}

pub fn is_stable(g: i64, n: u32) -> bool {
    g >= 0 && 2 * g - 2 + n as i64 > 0
}

fn check_entry(kind: FixtureKind, g: i64, n: u32, entry: &FixtureEntry) -> Result<()> {
    let fail = |reason: String| Err(Error::Fixture { g, n, reason });
    if !is_stable(g, n) {
        return fail("entries are only allowed for 2g - 2 + n > 0".into());
    }
    if entry.provenance.trim().is_empty() {
        return fail("provenance string is required".into());
    }
    if let Some((lambda, _)) = entry.value.terms().find(|(l, _)| l.size() != n) {
        return fail(format!(
            "term p{lambda} has degree {} instead of {n}",
            lambda.size()
        ));
    }
    let (plain, quotient) = entry.value.euler_specializations(n);
    if !plain.is_integer() {
        return fail(format!(
            "Euler characteristic {} is not an integer",
            format_q(&plain)
        ));
    }
    if !quotient.is_integer() {
        return fail(format!(
            "quotient Euler characteristic {} is not an integer",
            format_q(&quotient)
        ));
    }
    let expected = kind.four_point_euler();
    if (g, n) == (0, 4) && plain != q(expected) {
        return fail(format!(
            "Euler characteristic must be {expected}, found {}",
            format_q(&plain)
        ));
    }
    Ok(())
}

/// One validated row of a fixture table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReportRow {
    pub g: i64,
    pub n: u32,
    pub euler: Q,
    pub quotient_euler: Q,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub rows: Vec<FixtureReportRow>,
    pub window: Option<(i64, u32)>,
}

impl FixtureTable {
    pub fn new() -> Self {
        FixtureTable::default()
    }

    pub fn of_kind(kind: FixtureKind) -> Self {
        FixtureTable {
            kind,
            ..FixtureTable::default()
        }
    }

    /// The data every computation may assume: `M̄_{0,3}` is a point.
    pub fn builtin() -> Self {
        FixtureTable::builtin_of(FixtureKind::Compactified)
    }

    /// The built-in point `M_{0,3} = M̄_{0,3}` in a table of the given kind.
    pub fn builtin_of(kind: FixtureKind) -> Self {
        let mut t = FixtureTable::of_kind(kind);
        t.insert(
            0,
            3,
            SymFunc::h(3),
            "M_{0,3} is a point with trivial action",
        )
        .expect("built-in entry is valid");
        t
    }

    pub fn kind(&self) -> FixtureKind {
        self.kind
    }

    pub fn insert(
        &mut self,
        g: i64,
        n: u32,
        value: SymFunc,
        provenance: impl Into<String>,
    ) -> Result<()> {
        let entry = FixtureEntry {
            value,
            provenance: provenance.into(),
        };
        check_entry(self.kind, g, n, &entry)?;
        if let Some(old) = self.entries.get(&(g, n)) {
            if old.value != entry.value {
                return Err(Error::Fixture {
                    g,
                    n,
                    reason: "conflicting values for the same cell".into(),
                });
            }
            return Ok(());
        }
        self.entries.insert((g, n), entry);
        Ok(())
    }

    pub fn set_window(&mut self, g_max: i64, n_max: u32) {
        self.window = Some((g_max, n_max));
    }

    pub fn window(&self) -> Option<(i64, u32)> {
        self.window
    }

    pub fn get(&self, g: i64, n: u32) -> Option<&FixtureEntry> {
        self.entries.get(&(g, n))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, u32), &FixtureEntry)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn known(&self, g: i64, n: u32) -> bool {
        !is_stable(g, n) || self.entries.contains_key(&(g, n))
    }

    /// Cells among `cells` that are neither unstable nor tabulated.
    pub fn missing(&self, cells: impl IntoIterator<Item = (i64, u32)>) -> Vec<(i64, u32)> {
        cells
            .into_iter()
            .filter(|&(g, n)| !self.known(g, n))
            .collect()
    }

    /// Union of two tables; conflicting values are an error.
    pub fn merge(&self, other: &FixtureTable) -> Result<FixtureTable> {
        if self.kind != other.kind {
            return Err(Error::InvalidArgument(format!(
                "cannot merge {} and {} fixture tables",
                self.kind.as_str(),
                other.kind.as_str()
            )));
        }
        let mut out = self.clone();
        for ((g, n), e) in &other.entries {
            out.insert(*g, *n, e.value.clone(), e.provenance.clone())?;
        }
        out.window = match (self.window, other.window) {
            (Some(a), Some(b)) if a.0 >= b.0 && a.1 >= b.1 => Some(a),
            (Some(a), Some(b)) if b.0 >= a.0 && b.1 >= a.1 => Some(b),
            (Some(a), Some(b)) => Some((a.0.min(b.0), a.1.min(b.1))),
            (a, b) => a.or(b),
        };
        Ok(out)
    }

    /// `ā = Σ χ^{S_n}(M̄_{g,n}) t^{g-1}`, known on the largest staircase
    /// of contiguous known cells in each genus.
    pub fn to_series(&self) -> GenusSeries {
        let top_genus = self
            .entries
            .keys()
            .map(|&(g, _)| g)
            .max()
            .unwrap_or(0)
            .max(1);
        let mut rows = Vec::new();
        for g in 0..=top_genus {
            let mut n = 0;
            while self.known(g, n) && n < 1000 {
                n += 1;
            }
            rows.push(if n == 0 {
                Known::Nothing
            } else {
                Known::UpTo(n - 1)
            });
        }
        let mut coeffs: BTreeMap<i64, SymFunc> = BTreeMap::new();
        for ((g, _), e) in &self.entries {
            let slot = coeffs.entry(g - 1).or_default();
            *slot = &*slot + &e.value;
        }
        GenusSeries::with_window(coeffs, Window::from_parts(-1, rows, Known::Nothing))
            .expect("fixture coefficients sit at t^{-1} or above")
    }

    /// `ā_† = (h_1 + h_2) t^{-1} + ā`.
    pub fn dagger_series(&self) -> GenusSeries {
        let formal = GenusSeries::monomial(&SymFunc::h(1) + &SymFunc::h(2), -1);
        self.to_series().add(&formal)
    }

    pub fn from_json(value: &Value) -> Result<FixtureTable> {
        let (items, window, kind) = match value {
            Value::Array(items) => (items.as_slice(), None, FixtureKind::Compactified),
            Value::Object(obj) => {
                let items = obj
                    .get("entries")
                    .and_then(Value::as_array)
                    .ok_or_else(|| ParseError::new("fixture file needs an `entries` array"))?;
                let kind = match obj.get("kind") {
                    None => FixtureKind::Compactified,
                    Some(k) => FixtureKind::parse(k.as_str().unwrap_or_default())?,
                };
                (items.as_slice(), obj.get("window"), kind)
            }
            _ => return Err(ParseError::new("fixture file must be a JSON array or object").into()),
        };
        let mut table = FixtureTable::of_kind(kind);
        for (idx, item) in items.iter().enumerate() {
            let field = |key: &str| {
                item.get(key)
                    .ok_or_else(|| ParseError::new(format!("fixture entry {idx} lacks `{key}`")))
            };
            let g = field("g")?.as_i64().ok_or_else(|| {
                ParseError::new(format!("fixture entry {idx}: `g` must be an integer"))
            })?;
            let n = field("n")?.as_u64().ok_or_else(|| {
                ParseError::new(format!(
                    "fixture entry {idx}: `n` must be a nonnegative integer"
                ))
            })? as u32;
            let value = SymFunc::from_json(field("value")?).map_err(|e| Error::Fixture {
                g,
                n,
                reason: e.to_string(),
            })?;
            let provenance = item.get("provenance").and_then(Value::as_str).unwrap_or("");
            table.insert(g, n, value, provenance)?;
        }
        if let Some(w) = window {
            let g = w.get("g_max").and_then(Value::as_i64);
            let n = w.get("n_max").and_then(Value::as_u64);
            match (g, n) {
                (Some(g), Some(n)) => table.set_window(g, n as u32),
                _ => {
                    return Err(
                        ParseError::new("fixture window needs integer `g_max` and `n_max`").into(),
                    )
                }
            }
        }
        Ok(table)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|((g, n), e)| json!({"g": g, "n": n, "value": e.value.to_json(), "provenance": e.provenance}))
            .collect();
        let mut out = json!({"entries": entries});
        if let Some((g, n)) = self.window {
            out["window"] = json!({"g_max": g, "n_max": n});
        }
        if self.kind == FixtureKind::Open {
            out["kind"] = json!(self.kind.as_str());
        }
        out
    }
}

/// Reads a fixture file and merges it with the built-in entries.
pub fn load_fixtures(path: impl AsRef<Path>) -> Result<FixtureTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| ParseError::new(format!("{}: {e}", path.display())))?;
    let table = FixtureTable::from_json(&value)?;
    FixtureTable::builtin_of(table.kind).merge(&table)
}

/// Re-checks every entry and the completeness claim of the window.
pub fn validate_fixtures(table: &FixtureTable) -> Result<FixtureReport> {
    let mut rows = Vec::new();
    for ((g, n), e) in &table.entries {
        check_entry(table.kind, *g, *n, e)?;
        let (euler, quotient_euler) = e.value.euler_specializations(*n);
        rows.push(FixtureReportRow {
            g: *g,
            n: *n,
            euler,
            quotient_euler,
            provenance: e.provenance.clone(),
        });
    }
    if let Some((g_max, n_max)) = table.window {
        let cells = (0..=g_max).flat_map(|g| (0..=n_max).map(move |n| (g, n)));
        let missing = table.missing(cells);
        if !missing.is_empty() {
            return Err(Error::MissingFixtures(missing));
        }
    }
    Ok(FixtureReport {
        rows,
        window: table.window,
    })
}
