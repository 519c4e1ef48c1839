use eulergraph::rational::{q, q_from_big, Q};
use eulergraph::wreath::d_theta;
use eulergraph::{Partition, SymFunc, TwoPartition, WreathSymFunc};
use num_traits::Zero;
use proptest::prelude::*;

fn partition_up_to(max: u32) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn symfunc(max_degree: u32, max_terms: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_up_to(max_degree), -4i64..=4), 0..=max_terms)
        .prop_map(|terms| SymFunc::from_terms(terms.into_iter().map(|(l, c)| (l, q(c)))))
}

fn two_partition(max_norm: u32) -> impl Strategy<Value = TwoPartition> {
    prop::collection::vec((partition_up_to(3), partition_up_to(3)), 0..=3).prop_filter_map(
        "norm too large",
        move |pairs| {
            let theta = pairs
                .into_iter()
                .fold(TwoPartition::empty(), |acc, (mu, l)| {
                    acc.merge(&TwoPartition::single(mu, l))
                });
            (theta.norm() <= max_norm).then_some(theta)
        },
    )
}

fn wreath(max_terms: usize) -> impl Strategy<Value = WreathSymFunc> {
    prop::collection::vec((two_partition(4), -3i64..=3), 0..=max_terms).prop_map(|terms| {
        let mut out = WreathSymFunc::zero();
        for (theta, c) in terms {
            out.add_term(theta, q(c));
        }
        out
    })
}

// Hall inner product in the power-sum basis.
fn hall(f: &SymFunc, g: &SymFunc) -> Q {
    f.terms()
        .map(|(l, c)| c * g.coefficient(l) * q_from_big(l.z()))
        .fold(Q::zero(), |a, b| a + b)
}

// Skewing read off from adjointness: [p_κ] p_μ^⊥ f = z_{μ∪κ}/z_κ [p_{μ∪κ}] f.
fn skew_by_adjoint(f: &SymFunc, mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero();
    for (l, c) in f.terms() {
        if let Some(kappa) = l.difference(mu) {
            let w = q_from_big(l.z()) / q_from_big(kappa.z());
            out.add_term(kappa, c * w);
        }
    }
    out
}

// ψ_n as the substitution p_i ↦ p_{ni}, written out term by term.
fn adams_by_substitution(f: &SymFunc, n: u32) -> SymFunc {
    let mut out = SymFunc::zero();
    for (l, c) in f.terms() {
        let mono = l
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &i| &acc * &SymFunc::p(&[n * i]));
        out = &out + &mono.scale(c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skew_is_adjoint_to_multiplication(f in symfunc(6, 6), g in symfunc(3, 4), mu in partition_up_to(3)) {
        let pmu = SymFunc::p(mu.parts());
        prop_assert_eq!(hall(&f.skew(&mu), &g), hall(&f, &(&pmu * &g)));
        prop_assert_eq!(f.skew(&mu), skew_by_adjoint(&f, &mu));
    }

    #[test]
    fn skewing_composes(f in symfunc(6, 6), a in partition_up_to(2), b in partition_up_to(2)) {
        prop_assert_eq!(f.skew(&a).skew(&b), f.skew(&a.union(&b)));
    }

    #[test]
    fn adams_is_a_ring_map(f in symfunc(3, 4), g in symfunc(3, 4), k in 1u32..=3, l in 1u32..=3) {
        let ak = |x: &SymFunc| x.adams(k).unwrap();
        prop_assert_eq!(ak(&(&f * &g)), &ak(&f) * &ak(&g));
        prop_assert_eq!(ak(&(&f + &g)), &ak(&f) + &ak(&g));
        prop_assert_eq!(ak(&f).adams(l).unwrap(), f.adams(k * l).unwrap());
        prop_assert_eq!(ak(&f), adams_by_substitution(&f, k));
    }

    #[test]
    fn generators_act_by_skew_then_adams(f in symfunc(5, 6), n in 1u32..=3, mu in partition_up_to(3)) {
        let lhs = WreathSymFunc::generator(n, mu.clone()).act(&f);
        prop_assert_eq!(lhs, adams_by_substitution(&skew_by_adjoint(&f, &mu), n));
    }

    #[test]
    fn action_is_an_algebra_map(a in wreath(3), b in wreath(3), f in symfunc(4, 5), c in -3i64..=3) {
        prop_assert_eq!((&a * &b).act(&f), &a.act(&f) * &b.act(&f));
        prop_assert_eq!((&a + &b).act(&f), &a.act(&f) + &b.act(&f));
        prop_assert_eq!(a.scale(&q(c)).act(&f), a.act(&f).scale(&q(c)));
        prop_assert_eq!(WreathSymFunc::one().act(&f), SymFunc::one());
    }

    #[test]
    fn d_theta_is_the_product_of_generators(theta in two_partition(6), f in symfunc(5, 6)) {
        let mut product = WreathSymFunc::one();
        for (mu, lambda) in theta.iter() {
            for &n in lambda.parts() {
                product = &product * &WreathSymFunc::generator(n, mu.clone());
            }
        }
        prop_assert_eq!(&product, &WreathSymFunc::monomial(theta.clone(), q(1)));
        prop_assert_eq!(d_theta(&theta, &f), product.act(&f));
    }

    #[test]
    fn specialization_is_an_algebra_map(a in wreath(3), b in wreath(3)) {
        prop_assert_eq!((&a * &b).specialize(), &a.specialize() * &b.specialize());
        prop_assert_eq!((&a + &b).specialize(), &a.specialize() + &b.specialize());
    }
}
