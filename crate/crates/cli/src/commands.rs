use std::path::Path;

use eulergraph::cache::DiskCache;
use eulergraph::pipeline::{
    compactified_series, interpolate_in_r, load_fixtures, stable_map_stratum_series,
    stable_maps_series, stratum_series, validate_fixtures,
};
use eulergraph::rational::{format_q, Q};
use eulergraph::wreath::monomial_string;
use eulergraph::{
    centralizer_order, class_enumeration, graph, Coefficients, DecoratedGraph, Error, FixtureKind,
    FixtureTable, GenPartition, HalfEdgeGraph, SymFunc, TwoPartition, WreathSymFunc,
};
use serde_json::{json, Value};

use crate::render::{aligned, cells, cells_json, cells_text, json_text};
use crate::GlobalOpts;

type Out = Result<String, String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn coefficients(g: &GlobalOpts) -> Result<Coefficients, String> {
    let cache = if g.no_cache {
        None
    } else if let Some(dir) = &g.cache_dir {
        Some(DiskCache::open(dir).map_err(err)?)
    } else {
        DiskCache::from_env().map_err(err)?
    };
    Ok(Coefficients::with_cache(cache))
}

fn fixtures_at(path: &Path) -> Result<FixtureTable, String> {
    load_fixtures(path).map_err(|e| match e {
        Error::Io { .. } => e.to_string(),
        other => format!("{}: {other}", path.display()),
    })
}

fn optional_fixtures(path: Option<&Path>) -> Result<FixtureTable, String> {
    path.map_or_else(|| Ok(FixtureTable::builtin()), fixtures_at)
}

enum GraphFile {
    Plain(HalfEdgeGraph),
    Decorated(DecoratedGraph),
}

fn read_graph(path: &Path) -> Result<GraphFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let located = |e: eulergraph::ParseError| format!("{}: {e}", path.display());
    if text.contains("colors") || text.contains("weights") {
        DecoratedGraph::parse(&text)
            .map(GraphFile::Decorated)
            .map_err(located)
    } else {
        HalfEdgeGraph::parse(&text)
            .map(GraphFile::Plain)
            .map_err(located)
    }
}

fn parse_profile(text: &str) -> Result<GenPartition, String> {
    GenPartition::parse(text).map_err(|e| e.to_string())
}

pub fn classes(g: &GlobalOpts, nu: &str) -> Out {
    let profile = parse_profile(nu)?;
    let order = profile.group_order();
    let rows: Vec<(TwoPartition, String, String)> = class_enumeration(&profile)
        .into_iter()
        .map(|theta| {
            let z = centralizer_order(&theta);
            let size = &order / &z;
            (theta, z.to_string(), size.to_string())
        })
        .collect();
    if g.json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(t, z, s)| json!({"theta": t.to_string(), "centralizer": z, "size": s}))
            .collect();
        return Ok(json_text(&json!({
            "profile": profile.to_string(),
            "group_order": order.to_string(),
            "classes": items,
        })));
    }
    let body: Vec<Vec<String>> = rows
        .into_iter()
        .map(|(t, z, s)| vec![t.to_string(), z, s])
        .collect();
    Ok(format!(
        "profile {profile}: group order {order}, {} classes\n{}",
        body.len(),
        aligned(&["class", "centralizer", "size"], &body)
    ))
}

pub fn otheta(
    g: &GlobalOpts,
    theta: Option<&str>,
    all_for_nu: Option<&str>,
    colored: Option<(u32, u32)>,
) -> Out {
    let coeffs = coefficients(g)?;
    let context = colored.map_or_else(|| "plain".to_string(), |(r, d)| format!("r:{r},d:{d}"));
    if let Some(text) = theta {
        let theta = TwoPartition::parse(text).map_err(|e| e.to_string())?;
        let value = match colored {
            Some((r, d)) => coeffs.o_theta_colored(&theta, r, d),
            None => coeffs.o_theta(&theta),
        }
        .map_err(err)?;
        if g.json {
            return Ok(json_text(&json!({
                "theta": theta.to_string(),
                "context": context,
                "value": format_q(&value),
            })));
        }
        return Ok(format_q(&value) + "\n");
    }
    let profile = parse_profile(all_for_nu.expect("clap requires a class or a profile"))?;
    let values: Vec<(TwoPartition, Q)> = match colored {
        Some((r, d)) => {
            let all = coeffs.colored_table(r, d).map_err(err)?;
            class_enumeration(&profile)
                .into_iter()
                .map(|t| {
                    let v = all.get(&t).cloned().unwrap_or_default();
                    (t, v)
                })
                .collect()
        }
        None => coeffs
            .plain_table(&profile)
            .map_err(err)?
            .iter()
            .map(|(t, v)| (t.clone(), v.clone()))
            .collect(),
    };
    if g.json {
        let items: Vec<Value> = values
            .iter()
            .map(|(t, v)| json!({"theta": t.to_string(), "value": format_q(v)}))
            .collect();
        return Ok(json_text(&json!({
            "profile": profile.to_string(),
            "context": context,
            "values": items,
        })));
    }
    let total = values.iter().fold(Q::default(), |acc, (_, v)| acc + v);
    let body: Vec<Vec<String>> = values
        .iter()
        .map(|(t, v)| vec![t.to_string(), format_q(v)])
        .collect();
    Ok(format!(
        "{}total: {}\n",
        aligned(&["class", "O"], &body),
        format_q(&total)
    ))
}

fn zeta_text(order: usize, zeta: &WreathSymFunc) -> String {
    let order_q = Q::from_integer(order.into());
    let mut out = format!("automorphisms: {order}\nzeta = 1/{order} * (\n");
    for (idx, (theta, c)) in zeta.terms().enumerate() {
        let count = c * &order_q;
        let lead = if idx == 0 { "    " } else { "  + " };
        let mono = monomial_string(theta);
        if count == Q::from_integer(1.into()) {
            out.push_str(&format!("{lead}{mono}\n"));
        } else {
            out.push_str(&format!("{lead}{}*{mono}\n", format_q(&count)));
        }
    }
    out.push_str(")\n");
    out
}

pub fn zeta(g: &GlobalOpts, path: &Path) -> Out {
    let (description, order, zeta) = match read_graph(path)? {
        GraphFile::Plain(graph) => {
            let order = graph::automorphisms(&graph).len();
            (graph.to_string(), order, graph::polya_petersen(&graph))
        }
        GraphFile::Decorated(graph) => (
            graph.to_string(),
            graph.automorphism_count(),
            graph.polya_petersen(),
        ),
    };
    let specialized = zeta.specialize();
    if g.json {
        return Ok(json_text(&json!({
            "graph": description,
            "automorphisms": order,
            "zeta": zeta.to_json(),
            "specialization": specialized.to_json(),
        })));
    }
    Ok(format!(
        "graph: {description}\n{}specialization: {specialized}\n",
        zeta_text(order, &zeta)
    ))
}

fn series_output(
    g: &GlobalOpts,
    header: Value,
    series: &eulergraph::GenusSeries,
    g_max: i64,
    n_max: u32,
) -> Out {
    let cells = cells(series, g_max, n_max)?;
    if g.json {
        let mut doc = header;
        doc["entries"] = cells_json(&cells);
        return Ok(json_text(&doc));
    }
    let title = header
        .as_object()
        .map(|o| {
            o.iter()
                .map(|(k, v)| {
                    format!(
                        "{k}={}",
                        v.as_str().map_or_else(|| v.to_string(), str::to_string)
                    )
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default();
    Ok(format!("{title}\n{}", cells_text(&cells)))
}

fn require_kind(table: &FixtureTable, kind: FixtureKind, path: &Path) -> Result<(), String> {
    if table.kind() == kind {
        Ok(())
    } else {
        Err(format!(
            "{}: this command needs a fixture file of kind `{}`, found `{}`",
            path.display(),
            kind.as_str(),
            table.kind().as_str()
        ))
    }
}

pub fn strata(g: &GlobalOpts, graph_path: &Path, fixtures: &Path, g_max: i64, n_max: u32) -> Out {
    let table = fixtures_at(fixtures)?;
    let (description, series) = match read_graph(graph_path)? {
        GraphFile::Plain(graph) => {
            require_kind(&table, FixtureKind::Open, fixtures)?;
            let s = stratum_series(&graph, &table.to_series(), g_max, n_max).map_err(err)?;
            (graph.to_string(), s)
        }
        GraphFile::Decorated(graph) => {
            require_kind(&table, FixtureKind::Compactified, fixtures)?;
            let s = stable_map_stratum_series(&graph, &table, g_max, n_max).map_err(err)?;
            (graph.to_string(), s)
        }
    };
    series_output(
        g,
        json!({"command": "strata", "graph": description}),
        &series,
        g_max,
        n_max,
    )
}

pub fn compactify(g: &GlobalOpts, fixtures: &Path, g_max: i64, n_max: u32) -> Out {
    let table = fixtures_at(fixtures)?;
    require_kind(&table, FixtureKind::Open, fixtures)?;
    let coeffs = coefficients(g)?;
    let series = compactified_series(&table.to_series(), g_max, n_max, &coeffs).map_err(err)?;
    series_output(g, json!({"command": "compactify"}), &series, g_max, n_max)
}

pub fn stablemaps(
    g: &GlobalOpts,
    r: u32,
    d: u32,
    g_max: i64,
    n_max: u32,
    fixtures: Option<&Path>,
) -> Out {
    let table = optional_fixtures(fixtures)?;
    let coeffs = coefficients(g)?;
    let series = stable_maps_series(&table, r, d, g_max, n_max, &coeffs).map_err(err)?;
    series_output(
        g,
        json!({"command": "stablemaps", "r": r, "d": d}),
        &series,
        g_max,
        n_max,
    )
}

pub fn table(
    g: &GlobalOpts,
    d: u32,
    g_max: i64,
    n: u32,
    rmin: u32,
    rmax: u32,
    fixtures: Option<&Path>,
) -> Out {
    if rmin == 0 || rmin > rmax {
        return Err("need 1 <= rmin <= rmax".into());
    }
    let fx = optional_fixtures(fixtures)?;
    let coeffs = coefficients(g)?;
    // d + 2 points determine the polynomial; two more are held out.
    let r_top = rmax.max(d + 4);
    let mut rows = Vec::new();
    for genus in 0..=g_max {
        let mut samples: Vec<(i64, SymFunc)> = Vec::new();
        for r in 1..=r_top {
            let s = stable_maps_series(&fx, r, d, genus, n, &coeffs).map_err(err)?;
            samples.push((r as i64, s.genus_entry(genus, n).map_err(err)?));
        }
        let poly = interpolate_in_r(d, genus, n, &samples).map_err(err)?;
        let shown: Vec<SymFunc> = samples
            .iter()
            .filter(|(r, _)| *r >= rmin as i64 && *r <= rmax as i64)
            .map(|(_, v)| v.clone())
            .collect();
        rows.push((genus, shown, poly));
    }
    if g.json {
        let items: Vec<Value> = rows
            .iter()
            .map(|(genus, shown, poly)| {
                json!({
                    "g": genus,
                    "values": shown.iter().map(SymFunc::to_json).collect::<Vec<_>>(),
                    "polynomial": poly.to_json(),
                    "binomial_form": poly.binomial_form(),
                })
            })
            .collect();
        return Ok(json_text(
            &json!({"d": d, "n": n, "rmin": rmin, "rmax": rmax, "rows": items}),
        ));
    }
    let mut out = format!("d={d} n={n} r={rmin}..{rmax}\n");
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|(genus, shown, poly)| {
            let values = shown
                .iter()
                .map(SymFunc::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            vec![format!("g={genus}"), values, poly.binomial_form()]
        })
        .collect();
    out.push_str(&aligned(&["genus", "values", "polynomial"], &body));
    Ok(out)
}

pub fn fixtures(g: &GlobalOpts, path: &Path) -> Out {
    let table = fixtures_at(path)?;
    let report = validate_fixtures(&table).map_err(|e| format!("{}: {e}", path.display()))?;
    if g.json {
        let rows: Vec<Value> = report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "g": r.g,
                    "n": r.n,
                    "euler": format_q(&r.euler),
                    "quotient_euler": format_q(&r.quotient_euler),
                    "provenance": r.provenance,
                })
            })
            .collect();
        return Ok(json_text(&json!({
            "kind": table.kind().as_str(),
            "window": report.window.map(|(g, n)| json!({"g_max": g, "n_max": n})),
            "entries": rows,
        })));
    }
    let body: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.g.to_string(),
                r.n.to_string(),
                format_q(&r.euler),
                format_q(&r.quotient_euler),
                r.provenance.clone(),
            ]
        })
        .collect();
    let window = report.window.map_or_else(
        || "none".to_string(),
        |(g, n)| format!("g <= {g}, n <= {n}"),
    );
    Ok(format!(
        "kind: {}\nwindow: {window}\n{}",
        table.kind().as_str(),
        aligned(&["g", "n", "euler", "quotient", "provenance"], &body)
    ))
}
