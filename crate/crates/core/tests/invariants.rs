mod common;

use gsidon::encoder::{analyze_coincidence, encode, Coincidence};
use gsidon::extract::{extract_bk, guaranteed_size, partition_edges, verify_no_ascending_path};
use gsidon::forest::{examples, is_forest_of_copies};
use gsidon::ordgraph::{check_local_structure, girth, make_theta, theta_layout, ThetaSpec};
use gsidon::ramsey::{arrow_check, mono_class_witness, Coloring};
use gsidon::repset::{classify, rho_profile, sum_counts};
use gsidon::{nat, Config, FiniteSet, Nat};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_set() -> impl Strategy<Value = FiniteSet> {
    prop::collection::btree_set(1u64..40, 0..9).prop_map(|s| FiniteSet::from_u64s(&s.into_iter().collect::<Vec<_>>()).unwrap())
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn theta_shape(k in 2usize..6, ell in 2usize..5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = ThetaSpec::new(k, ell).with_interleaving(common::random_interleaving(k, ell, &mut rng));
        let g = make_theta(&spec).unwrap();
        prop_assert_eq!(g.vertex_count(), (k - 1) * ell + 2);
        prop_assert_eq!(g.edge_count(), k * ell);
        prop_assert_eq!(girth(&g), Some(2 * k));
        let layout = theta_layout(&spec).unwrap();
        for p in &layout.paths {
            prop_assert!(p.windows(2).all(|w| w[0] < w[1] && g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn encoding_is_a_bijection(k in 2usize..5, ell in 2usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = ThetaSpec::new(k, ell).with_interleaving(common::random_interleaving(k, ell, &mut rng));
        let g = make_theta(&spec).unwrap();
        let enc = encode(&g, k).unwrap();
        prop_assert_eq!(enc.set().len(), g.edge_count());
        prop_assert_eq!(enc.m(), 2 * k as u64 + 1);
        for &(u, v) in g.edges() {
            let x = enc.element_of_edge(u, v).unwrap();
            prop_assert_eq!(&x, &(nat::pow(enc.m_nat(), v as u32 + 1) - nat::pow(enc.m_nat(), u as u32 + 1)));
            prop_assert_eq!(enc.edge_of(&x), Some((u, v)));
        }
        // Differences along each path telescope to the endpoint difference.
        let layout = theta_layout(&spec).unwrap();
        let span = enc.value_of(layout.ak) - enc.value_of(layout.a0);
        for p in &layout.paths {
            let total: Nat = enc.path_differences(p).iter().sum();
            prop_assert_eq!(&total, &span);
        }
    }

    #[test]
    fn tuple_counts_add_up(x in small_set(), k in 1usize..4) {
        let total: u64 = sum_counts(&x, k).values().sum();
        let expect = if x.is_empty() { 0 } else { binomial(x.len() as u64 + k as u64 - 1, k as u64) };
        prop_assert_eq!(total, expect);
        let profile = rho_profile(&x, k).unwrap();
        let targets: u64 = profile.histogram.values().sum();
        prop_assert_eq!(targets as usize, sum_counts(&x, k).len());
    }

    #[test]
    fn rho_is_monotone_under_subsets(x in small_set(), mask in any::<u16>(), k in 2usize..4) {
        let y = x.select(|i| mask & (1 << i) != 0);
        prop_assert!(classify(&y, k).unwrap().ell <= classify(&x, k).unwrap().ell);
    }

    #[test]
    fn single_colour_arrow_is_classification(x in small_set(), ell in 2u64..4) {
        let v = arrow_check(&x, 2, ell, 1, &Config::default()).unwrap();
        prop_assert_eq!(v.holds, classify(&x, 2).unwrap().ell == ell);
    }

    #[test]
    fn pruned_branches_stay_satisfied(
        x in prop::collection::btree_set(1u64..16, 5..10)
            .prop_map(|s| FiniteSet::from_u64s(&s.into_iter().collect::<Vec<_>>()).unwrap()),
        seed in any::<u64>(),
    ) {
        // With ell = rho_2(X), a class holding a target with ell representations
        // keeps rho_2 = ell whatever is added to it later.
        let ell = classify(&x, 2).unwrap().ell;
        prop_assume!(ell >= 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rng.gen_range(2..=3);
        let n = x.len();
        let cut = rng.gen_range(n / 2..=n);
        let prefix: Vec<usize> = (0..cut).map(|_| rng.gen_range(1..=r)).collect();
        let partial_sets: Vec<FiniteSet> = (1..=r).map(|q| x.select(|i| i < cut && prefix[i] == q)).collect();
        let settled = partial_sets.iter().any(|s| classify(s, 2).unwrap().ell == ell);
        prop_assume!(settled);
        for _ in 0..8 {
            let mut colors = prefix.clone();
            colors.extend((cut..n).map(|_| rng.gen_range(1..=r)));
            let c = Coloring::new(r, colors).unwrap();
            prop_assert!(mono_class_witness(&x, &c, 2, ell).unwrap().is_some());
        }
    }

    #[test]
    fn verdicts_ignore_split_depth(x in small_set(), depth in 1usize..10, r in 2usize..4) {
        let base = arrow_check(&x, 2, 2, r, &Config::default()).unwrap();
        let cfg = Config { split_depth: depth, ..Config::default() };
        prop_assert_eq!(arrow_check(&x, 2, 2, r, &cfg).unwrap(), base);
    }

    #[test]
    fn extraction_meets_its_bound(k in 2usize..5, ell in 2usize..4, mask in any::<u16>()) {
        let enc = common::encoded_theta(k, ell);
        let y = enc.set().select(|i| mask & (1 << i) != 0);
        let ex = extract_bk(&y, &enc, k).unwrap();
        prop_assert!(ex.certificate.passed, "{}", ex.certificate.to_json_pretty());
        prop_assert!(ex.subset.len() >= guaranteed_size(k, y.len()));
        prop_assert!(ex.subset.is_subset_of(&y));
        prop_assert!(classify(&ex.subset, k).unwrap().ell <= 1);
    }

    #[test]
    fn partition_bounds_hold_on_arbitrary_edges(
        raw in prop::collection::vec((1u64..30, 1u64..30), 0..25),
        k in 2usize..5,
    ) {
        let edges: Vec<(Nat, Nat)> = raw.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (Nat::from(a), Nat::from(b))).collect();
        let w = partition_edges(&edges, k).unwrap();
        prop_assert!(w.same_class <= w.edge_count / k);
        prop_assert!(w.chosen_edges().len() * 2 >= w.cross_count());
        prop_assert!(verify_no_ascending_path(w.chosen_edges(), k).unwrap().ok());
    }

    #[test]
    fn coincidences_resolve(k in 2usize..4, ell in 2usize..4, seed in any::<u64>()) {
        let enc = common::encoded_theta(k, ell);
        let elems = enc.set().elements();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let s = rng.gen_range(1..2 * k);
            let t = rng.gen_range(1..=2 * k - s);
            let mut xs: Vec<Nat> = (0..s).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
            let mut ys: Vec<Nat> = (0..t).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
            xs.sort();
            ys.sort();
            let outcome = analyze_coincidence(&enc, ell, &xs, &ys).unwrap();
            let sx: Nat = xs.iter().sum();
            let sy: Nat = ys.iter().sum();
            prop_assert_eq!(outcome == Coincidence::NoCoincidence, sx != sy);
        }
    }
}

#[test]
fn forest_property_is_not_closed_under_subfamilies() {
    let cfg = Config::default();
    let whole = examples::triangle_cycle_with_fan();
    let part = examples::triangle_cycle();
    assert!(is_forest_of_copies(&whole, &cfg).unwrap().is_forest);
    assert!(!is_forest_of_copies(&part, &cfg).unwrap().is_forest);
    assert!(part.members.iter().all(|m| whole.members.contains(m)));
}

#[test]
fn thetas_have_the_local_structure() {
    for k in 2..=4 {
        for ell in 2..=3 {
            let g = common::theta(k, ell);
            let cert = check_local_structure(&g, k, ell, 2 * k + 1).unwrap();
            assert!(cert.passed, "{}", cert.to_json_pretty());
            // The same graph viewed with one path fewer is not Θ_{k,ell-1}-local.
            if ell > 2 {
                assert!(!check_local_structure(&g, k, ell - 1, 2 * k).unwrap().passed);
            }
        }
    }
}

#[test]
fn large_labels_stay_exact() {
    // Θ_{6,4}: vertex labels reach 13^22, beyond 64 bits.
    let g = common::theta(6, 4);
    let enc = encode(&g, 6).unwrap();
    assert!(enc.set().max().unwrap().to_u64().is_none());
    for x in enc.set().elements() {
        assert!(enc.edge_of(x).is_some());
    }
}
