//! End-to-end graph sums: compactified genus series from open ones, and
//! Euler characteristics of stable-map spaces to projective space.

mod coefficients;
mod curves;
mod fixtures;
mod interpolate;
mod relevance;
mod stable_maps;

pub use coefficients::Coefficients;
pub use curves::{
    check_stable_input, compactified_series, compactified_series_by_strata, required_input_cells,
    stratum_series,
};
pub use fixtures::{
    is_stable, load_fixtures, validate_fixtures, FixtureEntry, FixtureKind, FixtureReport,
    FixtureReportRow, FixtureTable,
};
pub use interpolate::{interpolate_in_r, RPolynomial};
pub use relevance::{relevant_profiles, relevant_thetas, VertexFloor};
pub use stable_maps::{
    required_fixture_cells, stable_map_stratum_series, stable_maps_series,
    stable_maps_series_by_strata,
};
