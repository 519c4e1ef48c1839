use num_traits::Zero;
use rayon::prelude::*;

use super::curves::{sum_terms, theta_term, zeta_action};
use super::fixtures::{is_stable, FixtureKind, FixtureTable};
use super::Coefficients;
use crate::error::{Error, Result};
use crate::graph::{enumerate_stable_map_graphs, DecoratedGraph};
use crate::rational::Q;
use crate::series::GenusSeries;
use crate::twopart::TwoPartition;

/// Tabulated cells needed for `(g_max, n_max)` in degree `d`: every stable
/// `(h, n)` with `h <= g_max` and `n <= n_max + d`.
pub fn required_fixture_cells(d: u32, g_max: i64, n_max: u32) -> Vec<(i64, u32)> {
    (0..=g_max)
        .flat_map(|h| (0..=n_max + d).map(move |n| (h, n)))
        .filter(|&(h, n)| is_stable(h, n))
        .collect()
}

fn prepare(abar: &FixtureTable, r: u32, d: u32, g_max: i64) -> Result<GenusSeries> {
    if r == 0 || d == 0 {
        return Err(Error::InvalidArgument("r and d must be positive".into()));
    }
    if g_max < 0 {
        return Err(Error::InvalidArgument("g_max must be nonnegative".into()));
    }
    if abar.kind() != FixtureKind::Compactified {
        return Err(Error::InvalidArgument(
            "stable-map sums need a table of compactified moduli spaces".into(),
        ));
    }
    Ok(abar.dagger_series())
}

fn check_fixtures(abar: &FixtureTable, d: u32, g_max: i64, n_max: u32) -> Result<()> {
    let missing = abar.missing(required_fixture_cells(d, g_max, n_max));
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::MissingFixtures(missing))
    }
}

fn betti(theta: &TwoPartition) -> i64 {
    theta.norm() as i64 / 2 - theta.profile().vertex_count() as i64 + 1
}

/// `ā_{P^r,d} = Σ_Θ O_{P^r,d}(Θ) D_Θ(ā_†) t^{||Θ||/2}` on exponents
/// `<= g_max - 1` and degrees `<= n_max`.
pub fn stable_maps_series(
    abar: &FixtureTable,
    r: u32,
    d: u32,
    g_max: i64,
    n_max: u32,
    coeffs: &Coefficients,
) -> Result<GenusSeries> {
    let dagger = prepare(abar, r, d, g_max)?;
    check_fixtures(abar, d, g_max, n_max)?;
    let table = coeffs.colored_table(r, d)?;
    let weighted: Vec<(&TwoPartition, &Q)> = table
        .iter()
        .filter(|(theta, c)| !c.is_zero() && betti(theta) <= g_max)
        .collect();
    let terms: Vec<GenusSeries> = weighted
        .par_iter()
        .map(|(theta, c)| theta_term(theta, c, &dagger, g_max, n_max))
        .collect();
    sum_terms(terms, g_max, n_max)
}

/// The contribution `(ζ ⊙ ā_†) t^{|E|}` of one decorated graph, with `ζ`
/// taken over its decorated automorphisms.
pub fn stable_map_stratum_series(
    graph: &DecoratedGraph,
    abar: &FixtureTable,
    g_max: i64,
    n_max: u32,
) -> Result<GenusSeries> {
    let dagger = prepare(abar, 1, graph.degree().max(1), g_max)?;
    check_fixtures(abar, graph.degree(), g_max, n_max)?;
    let zeta = graph.polya_petersen();
    sum_terms(
        zeta_action(&zeta, &dagger, graph.base().edge_count(), g_max, n_max),
        g_max,
        n_max,
    )
}

/// The same series summed over decorated graphs, each contributing
/// `(ζ ⊙ ā_†) t^{|E|}` with `ζ` taken over its decorated automorphisms.
pub fn stable_maps_series_by_strata(
    abar: &FixtureTable,
    r: u32,
    d: u32,
    g_max: i64,
    n_max: u32,
) -> Result<GenusSeries> {
    let dagger = prepare(abar, r, d, g_max)?;
    check_fixtures(abar, d, g_max, n_max)?;
    let graphs = enumerate_stable_map_graphs(r, d);
    let terms: Vec<GenusSeries> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            zeta_action(
                &g.polya_petersen(),
                &dagger,
                g.base().edge_count(),
                g_max,
                n_max,
            )
        })
        .collect();
    sum_terms(terms, g_max, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, q};
    use crate::symfunc::SymFunc;

    #[test]
    fn grassmannian_of_lines() {
        let fx = FixtureTable::builtin();
        let coeffs = Coefficients::new();
        for r in 1..=4 {
            let s = stable_maps_series(&fx, r, 1, 0, 1, &coeffs).unwrap();
            let c = binomial(r as i64 + 1, 2);
            assert_eq!(s.genus_entry(0, 0).unwrap(), SymFunc::constant(c.clone()));
            assert_eq!(
                s.genus_entry(0, 1).unwrap(),
                SymFunc::h(1).scale(&(c * q(2)))
            );
        }
    }

    #[test]
    fn missing_cells_are_listed() {
        let fx = FixtureTable::builtin();
        let err = stable_maps_series(&fx, 1, 3, 1, 0, &Coefficients::new()).unwrap_err();
        match err {
            Error::MissingFixtures(cells) => {
                assert_eq!(cells, vec![(1, 1), (1, 2), (1, 3)]);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn strata_route_agrees() {
        let fx = FixtureTable::builtin();
        for d in 1..=2 {
            for r in 1..=2 {
                let a = stable_maps_series(&fx, r, d, 0, 1, &Coefficients::new()).unwrap();
                let b = stable_maps_series_by_strata(&fx, r, d, 0, 1).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
