//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//!
//! The genus-one table row is opt-in: set `EULERGRAPH_GENUS_ONE_FIXTURES` to a
//! fixture file covering `M̄_{1,n}` for `n <= 3` (for example
//! `fixtures/genus1.json`). Without it the criterion prints SKIP.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use eulergraph::graph::{
    automorphisms, census_labeled, enumerate_graphs, polya_petersen, vertex_cycle_index,
};
use eulergraph::pipeline::{
    compactified_series, compactified_series_by_strata, interpolate_in_r, is_stable, load_fixtures,
    required_fixture_cells, required_input_cells, stable_maps_series, stable_maps_series_by_strata,
    Coefficients,
};
use eulergraph::rational::{binomial, format_q, q, q_frac, q_from_big, Q};
use eulergraph::specht::class_representative;
use eulergraph::wreath::d_theta;
use eulergraph::{
    centralizer_order, class_enumeration, conjugacy_type, FixtureTable, GenPartition, GenusSeries,
    HalfEdgeGraph, Partition, SymFunc, TwoPartition, Window, WreathElement, WreathSymFunc,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn genus_zero_cubic(r: i64) -> Q {
    q(16) * binomial(r + 1, 4) + q(21) * binomial(r + 1, 3) + q(6) * binomial(r + 1, 2)
}

fn table_row_genus_zero() -> Outcome {
    let start = Instant::now();
    let mut values = Vec::new();
    for r in 1..=5 {
        let out = Command::new(env!("CARGO_BIN_EXE_eulergraph"))
            .args([
                "--no-cache",
                "--json",
                "stablemaps",
                "--r",
                &r.to_string(),
                "--d",
                "3",
            ])
            .env_remove("EULERGRAPH_CACHE_DIR")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            String::from_utf8_lossy(&out.stderr).into_owned()
        })?;
        let doc: serde_json::Value =
            serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let value = SymFunc::from_json(&doc["entries"][0]["value"]).map_err(|e| e.to_string())?;
        let expected = SymFunc::constant(genus_zero_cubic(r));
        ensure(value == expected, || {
            format!("r = {r}: got {value}, expected {expected}")
        })?;
        values.push(value.to_string());
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} in {:.2}s",
        values.join(", "),
        elapsed.as_secs_f64()
    ))
}

fn grassmannian() -> Outcome {
    let fx = FixtureTable::builtin();
    let coeffs = Coefficients::new();
    for r in 1..=6u32 {
        let s = stable_maps_series(&fx, r, 1, 0, 1, &coeffs).map_err(|e| e.to_string())?;
        let c = binomial(r as i64 + 1, 2);
        let points = s.genus_entry(0, 0).map_err(|e| e.to_string())?;
        let lines = s.genus_entry(0, 1).map_err(|e| e.to_string())?;
        ensure(points == SymFunc::constant(c.clone()), || {
            format!("r = {r}: (0,0) = {points}")
        })?;
        let flag = SymFunc::h(1).scale(&(q(2) * c));
        ensure(lines == flag, || format!("r = {r}: (0,1) = {lines}"))?;
    }
    Ok("C(r+1,2) and 2·C(r+1,2)·h_1 for r = 1..6".into())
}

fn polynomial_in_r() -> Outcome {
    let fx = FixtureTable::builtin();
    let coeffs = Coefficients::new();
    let mut forms = Vec::new();
    for d in 1..=3u32 {
        let fit = d as i64 + 2;
        let samples: Vec<(i64, SymFunc)> = (1..=fit + 2)
            .map(|r| {
                let s = stable_maps_series(&fx, r as u32, d, 0, 0, &coeffs)?;
                Ok((r, s.genus_entry(0, 0)?))
            })
            .collect::<eulergraph::Result<_>>()
            .map_err(|e| e.to_string())?;
        let poly =
            interpolate_in_r(d, 0, 0, &samples[..fit as usize]).map_err(|e| e.to_string())?;
        let degree = poly.degree().unwrap_or(0);
        ensure(degree <= d as usize + 1, || {
            format!("d = {d}: degree {degree}")
        })?;
        ensure(poly.evaluate(-1).is_zero(), || {
            format!("d = {d}: not divisible by r + 1")
        })?;
        for (r, v) in &samples[fit as usize..] {
            ensure(&poly.evaluate(*r) == v, || {
                format!("d = {d}: held-out r = {r} disagrees")
            })?;
        }
        forms.push(format!("d={d}: {}", poly.binomial_form()));
    }
    Ok(forms.join("; "))
}

fn subdivided_theta_zeta() -> Outcome {
    let graph = HalfEdgeGraph::new(5, vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        .map_err(|e| e.to_string())?;
    let order = automorphisms(&graph).len();
    ensure(order == 12, || format!("|Aut| = {order}"))?;
    // Valence-2 blocks are [1,1] (no flip) or [2] (flip); valence-3 blocks
    // are [1,1,1], [2,1] or [3].
    let expected_terms = [
        (1, "{[1,1]:[1,1,1], [1,1,1]:[1,1]}"),
        (3, "{[1,1]:[1,2], [2,1]:[1,1]}"),
        (2, "{[1,1]:[3], [3]:[1,1]}"),
        (1, "{[2]:[1,1,1], [1,1,1]:[2]}"),
        (3, "{[2]:[1], [1,1]:[2], [1,1,1]:[2]}"),
        (2, "{[2]:[3], [3]:[2]}"),
    ];
    let mut expected = WreathSymFunc::zero();
    for (c, text) in expected_terms {
        expected.add_term(
            TwoPartition::parse(text).map_err(|e| e.to_string())?,
            q_frac(c, 12),
        );
    }
    let zeta = polya_petersen(&graph);
    ensure(zeta == expected, || format!("got {zeta}"))?;

    let file =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/subdivided_theta.graph");
    let out = Command::new(env!("CARGO_BIN_EXE_eulergraph"))
        .args(["--no-cache", "zeta"])
        .arg(&file)
        .output()
        .map_err(|e| e.to_string())?;
    let golden = std::fs::read(file.with_file_name("subdivided_theta.zeta.txt"))
        .map_err(|e| e.to_string())?;
    ensure(out.status.success() && out.stdout == golden, || {
        "cmd zeta output differs from the golden file".into()
    })?;
    Ok("six terms, |Aut(G)| = 12".into())
}

/// Profiles `ν` (indexed by valence) with `Σ i ν_i = half_edges`.
fn profiles_with(half_edges: u32, isolated: u32) -> Vec<GenPartition> {
    Partition::all_of(half_edges)
        .into_iter()
        .map(|p| {
            let valences = p
                .parts()
                .iter()
                .map(|&i| i as usize)
                .chain(std::iter::repeat(0).take(isolated as usize));
            GenPartition::from_valences(valences)
        })
        .collect()
}

fn cycle_index() -> Outcome {
    let mut count = 0;
    for edges in 0..=3u32 {
        let isolated = u32::from(edges == 0);
        for profile in profiles_with(2 * edges, isolated) {
            for g in enumerate_graphs(&profile, true) {
                let lhs = polya_petersen(&g).specialize();
                let rhs = vertex_cycle_index(&g);
                ensure(lhs == rhs, || format!("graph {g}: {lhs} vs {rhs}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} connected graphs"))
}

fn wreath_profiles(max_order: u64) -> Vec<GenPartition> {
    let fact = |n: u64| (1..=n).product::<u64>();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        budget: u64,
        mults: &mut Vec<u32>,
        out: &mut Vec<GenPartition>,
        fact: &dyn Fn(u64) -> u64,
    ) {
        if i == 8 {
            if mults.iter().any(|&m| m > 0) {
                out.push(GenPartition::new(mults.clone()));
            }
            return;
        }
        let mut m = 0u32;
        loop {
            let order = fact(i as u64).pow(m) * fact(m as u64);
            if order > budget {
                break;
            }
            mults.push(m);
            rec(i + 1, budget / order, mults, out, fact);
            mults.pop();
            m += 1;
        }
    }
    rec(0, max_order, &mut Vec::new(), &mut out, &fact);
    out
}

fn swap(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(0, 1);
    p
}

fn rotation(n: usize) -> Vec<usize> {
    (0..n).map(|k| (k + 1) % n).collect()
}

// A transposition and a long cycle in each outer and each first inner factor.
fn generators(profile: &GenPartition) -> Vec<WreathElement> {
    let mut out = Vec::new();
    for i in 0..profile.width() {
        let m = profile.get(i) as usize;
        if m == 0 {
            continue;
        }
        let mut moves: Vec<(Option<Vec<usize>>, Option<Vec<usize>>)> = Vec::new();
        if m >= 2 {
            moves.push((Some(swap(m)), None));
            moves.push((Some(rotation(m)), None));
        }
        if i >= 2 {
            moves.push((None, Some(swap(i))));
            moves.push((None, Some(rotation(i))));
        }
        for (outer, inner) in moves {
            let mut factors = WreathElement::identity(profile).factors().to_vec();
            if let Some(p) = outer {
                factors[i].outer = p;
            }
            if let Some(p) = inner {
                factors[i].inner[0] = p;
            }
            out.push(
                WreathElement::new(profile.clone(), factors).expect("generators are well formed"),
            );
        }
    }
    out
}

// The action on vertices followed by the action on half-edge slots, which
// together determine the element.
fn as_points(w: &WreathElement) -> Vec<u16> {
    let mut out = Vec::new();
    let mut offset = 0;
    for f in w.factors() {
        out.extend(f.outer.iter().map(|&k| (offset + k) as u16));
        offset += f.outer.len();
    }
    out.extend(w.slot_permutation().iter().map(|&h| (offset + h) as u16));
    out
}

fn apply(s: &[u16], x: &[u16]) -> Vec<u16> {
    x.iter().map(|&i| s[i as usize]).collect()
}

fn conjugate(s: &[u16], x: &[u16], s_inv: &[u16]) -> Vec<u16> {
    s_inv.iter().map(|&i| s[x[i as usize] as usize]).collect()
}

fn invert(s: &[u16]) -> Vec<u16> {
    let mut out = vec![0; s.len()];
    for (i, &x) in s.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out
}

fn specht_suite() -> Outcome {
    let profiles = wreath_profiles(10_000);
    let mut classes_seen = 0;
    for profile in &profiles {
        let order = profile.group_order();
        let elements = WreathElement::all(profile);
        let n = elements.len();
        ensure(order == n.into(), || format!("{profile}: element count"))?;
        let points: Vec<Vec<u16>> = elements.iter().map(as_points).collect();
        let index: HashMap<&[u16], usize> = points
            .iter()
            .enumerate()
            .map(|(k, e)| (e.as_slice(), k))
            .collect();
        ensure(index.len() == n, || format!("{profile}: repeated elements"))?;
        let gens: Vec<(Vec<u16>, Vec<u16>)> = generators(profile)
            .iter()
            .map(|s| {
                let p = as_points(s);
                let inv = invert(&p);
                (p, inv)
            })
            .collect();

        // The generators reach every element, so their conjugation orbits
        // are the conjugacy classes.
        let identity = index[as_points(&WreathElement::identity(profile)).as_slice()];
        let mut reached = vec![false; n];
        reached[identity] = true;
        let mut queue = vec![identity];
        while let Some(y) = queue.pop() {
            for (s, _) in &gens {
                let z = index[apply(s, &points[y]).as_slice()];
                if !reached[z] {
                    reached[z] = true;
                    queue.push(z);
                }
            }
        }
        ensure(reached.iter().all(|&r| r), || {
            format!("{profile}: generators fall short")
        })?;

        let types: Vec<TwoPartition> = elements.iter().map(conjugacy_type).collect();
        let mut assigned = vec![false; n];
        let mut seen = BTreeSet::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut queue = vec![start];
            let mut size = 0usize;
            while let Some(y) = queue.pop() {
                size += 1;
                ensure(types[y] == types[start], || {
                    format!("{profile}: type not constant on a class")
                })?;
                for (s, inv) in &gens {
                    let z = index[conjugate(s, &points[y], inv).as_slice()];
                    if !assigned[z] {
                        assigned[z] = true;
                        queue.push(z);
                    }
                }
            }
            let theta = &types[start];
            ensure(seen.insert(theta.clone()), || {
                format!("{profile}: two classes share type {theta}")
            })?;
            let expected = &order / centralizer_order(theta);
            ensure(expected == size.into(), || {
                format!("{profile}: class {theta} has {size} elements, expected {expected}")
            })?;
        }
        let listed: BTreeSet<TwoPartition> = class_enumeration(profile).into_iter().collect();
        let total = listed
            .iter()
            .fold(num_bigint::BigUint::default(), |acc, t| {
                acc + &order / centralizer_order(t)
            });
        ensure(total == order, || {
            format!("{profile}: class sizes sum to {total}")
        })?;
        ensure(listed == seen, || {
            format!("{profile}: class enumeration differs from brute force")
        })?;
        classes_seen += seen.len();
    }
    Ok(format!(
        "{} profiles, {classes_seen} classes",
        profiles.len()
    ))
}

// Fixed-point-free involutions on the slots commuting with `g`.
fn commuting_matchings(g: &[usize]) -> u64 {
    fn rec(pairing: &mut Vec<usize>, g: &[usize]) -> u64 {
        let Some(a) = pairing.iter().position(|&x| x == usize::MAX) else {
            return u64::from((0..pairing.len()).all(|h| pairing[g[h]] == g[pairing[h]]));
        };
        let mut total = 0;
        for b in a + 1..pairing.len() {
            if pairing[b] == usize::MAX {
                pairing[a] = b;
                pairing[b] = a;
                total += rec(pairing, g);
                pairing[a] = usize::MAX;
                pairing[b] = usize::MAX;
            }
        }
        total
    }
    if g.len() % 2 == 1 {
        return 0;
    }
    rec(&mut vec![usize::MAX; g.len()], g)
}

fn o_theta_suite() -> Outcome {
    let coeffs = Coefficients::new();
    let point = coeffs
        .o_theta(&TwoPartition::single(
            Partition::empty(),
            Partition::single(1),
        ))
        .map_err(|e| e.to_string())?;
    ensure(point == q(1), || {
        format!("O(∅ ↦ (1)) = {}", format_q(&point))
    })?;
    let mut profiles = 0;
    let mut classes = 0;
    for half_edges in (0..=8u32).step_by(2) {
        for isolated in 0..=1u32 {
            for profile in profiles_with(half_edges, isolated) {
                if profile.vertex_count() == 0 {
                    continue;
                }
                let table = coeffs.plain_table(&profile).map_err(|e| e.to_string())?;
                let sum = table.values().fold(Q::zero(), |a, b| a + b);
                let connected = enumerate_graphs(&profile, true).len();
                ensure(sum == q(connected as i64), || {
                    format!(
                        "{profile}: Σ O = {}, {connected} connected graphs",
                        format_q(&sum)
                    )
                })?;
                let all = enumerate_graphs(&profile, false);
                let censuses: Vec<(BTreeMap<TwoPartition, u64>, u64)> = all
                    .iter()
                    .map(|g| {
                        census_labeled(g, &vec![0; g.vertex_count()], &vec![0; g.edge_count()])
                    })
                    .collect();
                for theta in class_enumeration(&profile) {
                    let lhs = censuses.iter().fold(Q::zero(), |acc, (c, order)| {
                        acc + q(*c.get(&theta).unwrap_or(&0) as i64) / q(*order as i64)
                    });
                    let fix = commuting_matchings(&class_representative(&theta).slot_permutation());
                    let rhs = q(fix as i64) / q_from_big(centralizer_order(&theta));
                    ensure(lhs == rhs, || {
                        format!(
                            "{profile}, {theta}: {} vs {}",
                            format_q(&lhs),
                            format_q(&rhs)
                        )
                    })?;
                    classes += 1;
                }
                profiles += 1;
            }
        }
    }
    Ok(format!("{profiles} profiles, {classes} classes"))
}

fn random_symfunc(rng: &mut StdRng, max_degree: u32, terms: usize) -> SymFunc {
    SymFunc::from_terms((0..terms).map(|_| {
        let shapes = Partition::all_of(rng.gen_range(0..=max_degree));
        (
            shapes[rng.gen_range(0..shapes.len())].clone(),
            q(rng.gen_range(-4..=4)),
        )
    }))
}

fn random_partition(rng: &mut StdRng, max: u32) -> Partition {
    let shapes = Partition::all_of(rng.gen_range(0..=max));
    shapes[rng.gen_range(0..shapes.len())].clone()
}

fn random_wreath(rng: &mut StdRng) -> WreathSymFunc {
    let mut out = WreathSymFunc::zero();
    for _ in 0..rng.gen_range(0..=3) {
        let mut theta = TwoPartition::empty();
        for _ in 0..rng.gen_range(0..=2) {
            let lambda = Partition::new(vec![rng.gen_range(1..=3)]);
            theta = theta.merge(&TwoPartition::single(random_partition(rng, 3), lambda));
        }
        out.add_term(theta, q(rng.gen_range(-3..=3)));
    }
    out
}

// ψ_n(p_μ^⊥ f), with skewing read off from the Hall inner product
// (z_{μ∪κ}/z_κ [p_{μ∪κ}] f) and ψ_n as the substitution p_i ↦ p_{ni}.
fn generator_oracle(n: u32, mu: &Partition, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, c) in f.terms() {
        if let Some(kappa) = lambda.difference(mu) {
            let w = q_from_big(lambda.z()) / q_from_big(kappa.z());
            let mono = kappa
                .parts()
                .iter()
                .fold(SymFunc::one(), |acc, &i| &acc * &SymFunc::p(&[n * i]));
            out = &out + &mono.scale(&(c * w));
        }
    }
    out
}

fn action_of_generators() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    for instance in 0..100 {
        let f = random_symfunc(&mut rng, 5, 6);
        let n = rng.gen_range(1..=3);
        let mu = random_partition(&mut rng, 3);
        let lhs = WreathSymFunc::generator(n, mu.clone()).act(&f);
        ensure(lhs == generator_oracle(n, &mu, &f), || {
            format!("instance {instance}: p_{n}[{mu}] ⊙ f")
        })?;
        let (a, b) = (random_wreath(&mut rng), random_wreath(&mut rng));
        let small = random_symfunc(&mut rng, 4, 4);
        ensure(
            (&a * &b).act(&small) == &a.act(&small) * &b.act(&small),
            || format!("instance {instance}: product not preserved"),
        )?;
        ensure(
            (&a + &b).act(&small) == &a.act(&small) + &b.act(&small),
            || format!("instance {instance}: sum not preserved"),
        )?;
    }
    let mut thetas = BTreeSet::new();
    for half_edges in 0..=6u32 {
        for isolated in 0..=2u32 {
            for profile in profiles_with(half_edges, isolated) {
                if profile.vertex_count() > 0 {
                    thetas.extend(class_enumeration(&profile));
                }
            }
        }
    }
    for theta in &thetas {
        let f = random_symfunc(&mut rng, 5, 6);
        let expected = theta.iter().fold(SymFunc::one(), |acc, (mu, lambda)| {
            lambda
                .parts()
                .iter()
                .fold(acc, |acc, &n| &acc * &generator_oracle(n, mu, &f))
        });
        ensure(d_theta(theta, &f) == expected, || {
            format!("D_Θ for {theta}")
        })?;
        ensure(
            WreathSymFunc::monomial(theta.clone(), q(1)).act(&f) == expected,
            || format!("p_Θ ⊙ f for {theta}"),
        )?;
    }
    Ok(format!(
        "100 random instances, {} classes with ||Θ|| <= 6",
        thetas.len()
    ))
}

fn random_open_series(rng: &mut StdRng, g_max: i64, n_max: u32) -> GenusSeries {
    let mut rows = vec![0u32; g_max as usize + 1];
    let mut coeffs: BTreeMap<i64, SymFunc> = BTreeMap::new();
    for (g, n) in required_input_cells(g_max, n_max) {
        rows[g as usize] = rows[g as usize].max(n);
        if is_stable(g, n) {
            let shapes = Partition::all_of(n);
            let value = SymFunc::from_terms((0..3).map(|_| {
                (
                    shapes[rng.gen_range(0..shapes.len())].clone(),
                    q(rng.gen_range(-5..=5)),
                )
            }));
            let slot = coeffs.entry(g - 1).or_default();
            *slot = &*slot + &value;
        }
    }
    GenusSeries::with_window(coeffs, Window::staircase(&rows))
        .expect("coefficients sit at t^{-1} or above")
}

fn random_compact_fixtures(rng: &mut StdRng, d: u32, g_max: i64, n_max: u32) -> FixtureTable {
    let mut fx = FixtureTable::builtin();
    for (g, n) in required_fixture_cells(d, g_max, n_max) {
        if fx.known(g, n) {
            continue;
        }
        let value = if (g, n) == (0, 4) {
            SymFunc::h(4).scale(&q(2))
        } else {
            let shapes = Partition::all_of(n);
            (0..3).fold(SymFunc::zero(), |acc, _| {
                let l = &shapes[rng.gen_range(0..shapes.len())];
                let h = l
                    .parts()
                    .iter()
                    .fold(SymFunc::one(), |a, &k| &a * &SymFunc::h(k));
                &acc + &h.scale(&q(rng.gen_range(-4..=4)))
            })
        };
        fx.insert(g, n, value, "random test data")
            .expect("random entries are valid");
    }
    fx
}

fn path_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let coeffs = Coefficients::new();
    let mut windows = 0;
    for g_max in 0..=2i64 {
        for n_max in 0..=4u32 {
            let a = random_open_series(&mut rng, g_max, n_max);
            let lhs = compactified_series(&a, g_max, n_max, &coeffs).map_err(|e| e.to_string())?;
            let rhs = compactified_series_by_strata(&a, g_max, n_max).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || {
                format!("curves, g_max = {g_max}, n_max = {n_max}")
            })?;
            windows += 1;
        }
    }
    for r in 1..=2u32 {
        for d in 1..=2u32 {
            for g_max in 0..=2i64 {
                for n_max in 0..=2u32 {
                    let fx = random_compact_fixtures(&mut rng, d, g_max, n_max);
                    let lhs = stable_maps_series(&fx, r, d, g_max, n_max, &coeffs)
                        .map_err(|e| e.to_string())?;
                    let rhs = stable_maps_series_by_strata(&fx, r, d, g_max, n_max)
                        .map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || {
                        format!("maps, r = {r}, d = {d}, g_max = {g_max}, n_max = {n_max}")
                    })?;
                    windows += 1;
                }
            }
        }
    }
    Ok(format!("{windows} randomized windows"))
}

fn elliptic_point() -> Outcome {
    let a = GenusSeries::with_window(
        [(-1, SymFunc::h(3)), (0, SymFunc::p(&[1]))],
        Window::staircase(&[3, 1]),
    )
    .map_err(|e| e.to_string())?;
    let abar = compactified_series(&a, 1, 1, &Coefficients::new()).map_err(|e| e.to_string())?;
    let value = abar.genus_entry(1, 1).map_err(|e| e.to_string())?;
    let expected = SymFunc::h(1).scale(&q(2));
    ensure(value == expected, || format!("got {value}"))?;
    Ok(format!("coefficient {value}"))
}

const HIGHER_GENUS_ROWS: [(i64, &str); 4] = [
    (1, "216·C(r+1,4)+247·C(r+1,3)+55·C(r+1,2)"),
    (2, "3160·C(r+1,4)+3342·C(r+1,3)+645·C(r+1,2)"),
    (3, "44800·C(r+1,4)+45114·C(r+1,3)+8088·C(r+1,2)"),
    (4, "630352·C(r+1,4)+613213·C(r+1,3)+104208·C(r+1,2)"),
];

fn higher_genus_rows() -> Option<Outcome> {
    let path = std::env::var_os("EULERGRAPH_GENUS_ONE_FIXTURES")?;
    let path = {
        let p = PathBuf::from(path);
        if p.is_relative() {
            root().join(p)
        } else {
            p
        }
    };
    Some((|| {
        let fx = load_fixtures(&path).map_err(|e| e.to_string())?;
        let coeffs = Coefficients::new();
        let mut report = Vec::new();
        for (g, form) in HIGHER_GENUS_ROWS {
            if !fx.missing(required_fixture_cells(3, g, 0)).is_empty() {
                break;
            }
            let samples: Vec<(i64, SymFunc)> = (1..=7i64)
                .map(|r| {
                    let s = stable_maps_series(&fx, r as u32, 3, g, 0, &coeffs)?;
                    Ok((r, s.genus_entry(g, 0)?))
                })
                .collect::<eulergraph::Result<_>>()
                .map_err(|e| e.to_string())?;
            let poly = interpolate_in_r(3, g, 0, &samples).map_err(|e| e.to_string())?;
            ensure(poly.binomial_form() == form, || {
                format!("g = {g}: got {}", poly.binomial_form())
            })?;
            report.push(format!("g={g}: r=1 gives {}, {}", samples[0].1, form));
        }
        ensure(!report.is_empty(), || {
            format!("{} does not cover genus one", path.display())
        })?;
        Ok(report.join("; "))
    })())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (
            1,
            "genus-zero degree-3 counts from built-in data",
            table_row_genus_zero,
        ),
        (
            2,
            "Grassmannian of lines and its universal line",
            grassmannian,
        ),
        (
            3,
            "polynomiality in r and divisibility by r+1",
            polynomial_in_r,
        ),
        (
            4,
            "Pólya–Petersen character of the subdivided theta graph",
            subdivided_theta_zeta,
        ),
        (
            5,
            "cycle-index specialization for graphs with <= 3 edges",
            cycle_index,
        ),
        (
            6,
            "wreath product classes against brute force",
            specht_suite,
        ),
        (
            7,
            "O(Θ) sums and fixed-point identity up to 8 half-edges",
            o_theta_suite,
        ),
        (
            8,
            "generator identity, algebra map, D_Θ = p_Θ ⊙ f",
            action_of_generators,
        ),
        (9, "class sums agree with strata sums", path_equivalence),
        (10, "M-bar_{1,1} from M_{1,1} and M_{0,3}", elliptic_point),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {why} [{secs:.2}s]");
            }
        }
    }
    let name = "degree-3 rows in positive genus from supplied fixtures";
    match higher_genus_rows() {
        None => println!("criterion 11 SKIP  {name}: set EULERGRAPH_GENUS_ONE_FIXTURES to run"),
        Some(Ok(detail)) => println!("criterion 11 PASS  {name}: {detail}"),
        Some(Err(why)) => {
            failed += 1;
            println!("criterion 11 FAIL  {name}: {why}");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
