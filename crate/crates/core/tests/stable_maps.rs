use eulergraph::pipeline::{
    interpolate_in_r, load_fixtures, stable_maps_series, Coefficients, FixtureTable,
};
use eulergraph::rational::{binomial, q};
use eulergraph::SymFunc;

fn genus_zero_degree_three(r: i64) -> i64 {
    let c = |k| binomial(r + 1, k);
    (q(16) * c(4) + q(21) * c(3) + q(6) * c(2))
        .to_integer()
        .try_into()
        .unwrap()
}

#[test]
fn degree_three_genus_zero_row() {
    let fx = FixtureTable::builtin();
    let coeffs = Coefficients::new();
    let mut samples = Vec::new();
    for r in 1..=7 {
        let s = stable_maps_series(&fx, r, 3, 0, 0, &coeffs).unwrap();
        let v = s.genus_entry(0, 0).unwrap();
        assert_eq!(
            v,
            SymFunc::constant(q(genus_zero_degree_three(r as i64))),
            "r = {r}"
        );
        samples.push((r as i64, v));
    }
    let poly = interpolate_in_r(3, 0, 0, &samples).unwrap();
    assert_eq!(poly.binomial_form(), "16·C(r+1,4)+21·C(r+1,3)+6·C(r+1,2)");
}

#[test]
fn low_degrees_are_polynomial_and_divisible() {
    let fx = load_fixtures(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/genus0.json"
    ))
    .unwrap();
    let coeffs = Coefficients::new();
    for d in 1..=3u32 {
        for n in 0..=2u32 {
            let samples: Vec<(i64, SymFunc)> = (1..=d as i64 + 4)
                .map(|r| {
                    let s = stable_maps_series(&fx, r as u32, d, 0, n, &coeffs).unwrap();
                    (r, s.genus_entry(0, n).unwrap())
                })
                .collect();
            let poly = interpolate_in_r(d, 0, n, &samples).unwrap();
            assert!(
                poly.degree().is_some_and(|k| k <= d as usize + 1),
                "d = {d}, n = {n}"
            );
        }
    }
}
