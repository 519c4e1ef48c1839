use num_traits::Zero;
use rayon::prelude::*;

use super::fixtures::is_stable;
use super::relevance::{relevant_profiles, VertexFloor};
use super::Coefficients;
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, polya_petersen, HalfEdgeGraph};
use crate::rational::Q;
use crate::series::GenusSeries;
use crate::twopart::TwoPartition;
use crate::wreath::{d_theta_truncated, WreathSymFunc};

/// Rejects series with nonzero coefficients at unstable `(g, n)`.
pub fn check_stable_input(a: &GenusSeries) -> Result<()> {
    for (e, f) in a.raw_coefficients() {
        let g = e + 1;
        if let Some((lambda, _)) = f.terms().find(|(l, _)| !is_stable(g, l.size())) {
            return Err(Error::UnstableInput {
                g,
                n: lambda.size(),
            });
        }
    }
    Ok(())
}

/// Input cells needed for output genus `<= g_max` and degree `<= n_max`:
/// in genus `h`, every degree up to `n_max + 2 (g_max - h)`.
pub fn required_input_cells(g_max: i64, n_max: u32) -> Vec<(i64, u32)> {
    (0..=g_max)
        .flat_map(|h| (0..=n_max + 2 * (g_max - h) as u32).map(move |n| (h, n)))
        .collect()
}

fn check_input_window(a: &GenusSeries, g_max: i64, n_max: u32) -> Result<()> {
    for (g, n) in required_input_cells(g_max, n_max) {
        if !a.window().known(g - 1).covers(n) {
            return Err(Error::MissingInput { g, n });
        }
    }
    Ok(())
}

// `c · D_Θ(a) · t^{||Θ||/2}`, truncated to the target window.
pub(crate) fn theta_term(
    theta: &TwoPartition,
    c: &Q,
    a: &GenusSeries,
    g_max: i64,
    n_max: u32,
) -> GenusSeries {
    let shift = (theta.norm() / 2) as i64;
    d_theta_truncated(theta, a, g_max - 1 - shift, n_max)
        .scale(c)
        .shift(shift)
}

pub(crate) fn sum_terms(terms: Vec<GenusSeries>, g_max: i64, n_max: u32) -> Result<GenusSeries> {
    let total = terms
        .into_iter()
        .fold(GenusSeries::zero(), |acc, t| acc.add(&t))
        .truncated(g_max - 1, n_max);
    total.require_rect(g_max, n_max)?;
    Ok(total)
}

/// `ā = Σ_Θ O(Θ) D_Θ(a) t^{||Θ||/2}` on exponents `<= g_max - 1` and
/// degrees `<= n_max`.
pub fn compactified_series(
    a: &GenusSeries,
    g_max: i64,
    n_max: u32,
    coeffs: &Coefficients,
) -> Result<GenusSeries> {
    if g_max < 0 {
        return Err(Error::InvalidArgument("g_max must be nonnegative".into()));
    }
    check_stable_input(a)?;
    check_input_window(a, g_max, n_max)?;
    let mut weighted: Vec<(TwoPartition, Q)> = Vec::new();
    for profile in relevant_profiles(g_max, n_max, VertexFloor::Stable) {
        for (theta, c) in coeffs.plain_table(&profile)?.iter() {
            if !c.is_zero() {
                weighted.push((theta.clone(), c.clone()));
            }
        }
    }
    let terms: Vec<GenusSeries> = weighted
        .par_iter()
        .map(|(theta, c)| theta_term(theta, c, a, g_max, n_max))
        .collect();
    sum_terms(terms, g_max, n_max)
}

pub(crate) fn zeta_action(
    zeta: &WreathSymFunc,
    a: &GenusSeries,
    edges: usize,
    g_max: i64,
    n_max: u32,
) -> Vec<GenusSeries> {
    zeta.terms()
        .map(|(theta, c)| {
            debug_assert_eq!(theta.norm() as usize, 2 * edges);
            theta_term(theta, c, a, g_max, n_max)
        })
        .collect()
}

/// The contribution `(ζ_G ⊙ a) t^{|E(G)|}` of the stratum of graph `G`.
pub fn stratum_series(
    graph: &HalfEdgeGraph,
    a: &GenusSeries,
    g_max: i64,
    n_max: u32,
) -> Result<GenusSeries> {
    check_stable_input(a)?;
    check_input_window(a, g_max, n_max)?;
    let zeta = polya_petersen(graph);
    sum_terms(
        zeta_action(&zeta, a, graph.edge_count(), g_max, n_max),
        g_max,
        n_max,
    )
}

/// `ā` computed stratum by stratum: the sum of [`stratum_series`] over all
/// connected graphs with a relevant profile.
pub fn compactified_series_by_strata(
    a: &GenusSeries,
    g_max: i64,
    n_max: u32,
) -> Result<GenusSeries> {
    check_stable_input(a)?;
    check_input_window(a, g_max, n_max)?;
    let graphs: Vec<HalfEdgeGraph> = relevant_profiles(g_max, n_max, VertexFloor::Stable)
        .iter()
        .flat_map(|p| enumerate_graphs(p, true))
        .collect();
    let terms: Vec<GenusSeries> = graphs
        .par_iter()
        .flat_map_iter(|g| zeta_action(&polya_petersen(g), a, g.edge_count(), g_max, n_max))
        .collect();
    sum_terms(terms, g_max, n_max)
}
