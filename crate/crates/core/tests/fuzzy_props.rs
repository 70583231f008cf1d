use fuzzy_homlie::format::{parse_algebra, parse_flag, parse_instance, serialize_algebra, serialize_flag, serialize_instance};
use fuzzy_homlie::oracle::{
    brute_direct_sum, brute_pullback, brute_pushforward, pointwise_check, random_instance_with,
    table_from_flag, Family, FlagKind, InstanceParams,
};
use fuzzy_homlie::{flag_from_table, ClosureMode, FuzzyFlag, HomLieAlgebra, Morphism};
use proptest::prelude::*;

const CAP: u128 = 1_000_000;

fn params_for(p: u32) -> impl Strategy<Value = InstanceParams> {
    (1usize..=3, any::<u64>(), prop::sample::select(Family::ALL.to_vec())).prop_flat_map(
        move |(dim, seed, family)| {
            let dim = if family == Family::PaperExample { 3 } else { dim };
            (1..=dim + 1).prop_map(move |flag_depth| InstanceParams {
                p,
                dim,
                flag_depth,
                seed,
                family,
            })
        },
    )
}

fn params() -> impl Strategy<Value = InstanceParams> {
    prop_oneof![params_for(2), params_for(3), params_for(5)]
}

fn kind() -> impl Strategy<Value = FlagKind> {
    prop_oneof![Just(FlagKind::Subalgebra), Just(FlagKind::Ideal), Just(FlagKind::Arbitrary)]
}

fn instance() -> impl Strategy<Value = (HomLieAlgebra, FuzzyFlag)> {
    (params(), kind()).prop_map(|(p, k)| random_instance_with(&p, k).unwrap())
}

fn pair(kind: FlagKind) -> impl Strategy<Value = ((HomLieAlgebra, FuzzyFlag), (HomLieAlgebra, FuzzyFlag))> {
    prop_oneof![Just(2u32), Just(3)].prop_flat_map(move |p| {
        let small = || params_for(p).prop_filter("small", |q| q.dim <= 2 || q.p == 2);
        (small(), small()).prop_map(move |(a, b)| {
            (random_instance_with(&a, kind).unwrap(), random_instance_with(&b, kind).unwrap())
        })
    })
}

fn modes() -> [ClosureMode; 2] {
    [ClosureMode::Subalgebra, ClosureMode::Ideal]
}

proptest! {
    #[test]
    fn flag_and_pointwise_checks_agree((a, mu) in instance()) {
        let table = table_from_flag(&mu, CAP).unwrap();
        for mode in modes() {
            prop_assert_eq!(
                mu.check(&a, mode).unwrap().holds,
                pointwise_check(&table, &a, mode, CAP).unwrap().holds
            );
        }
    }

    #[test]
    fn cuts_characterize_closure((a, mu) in instance()) {
        for mode in modes() {
            let cuts_ok = mu
                .image_levels()
                .iter()
                .filter_map(|t| mu.upper_level(t))
                .all(|u| a.violation(u, mode).unwrap().is_none());
            prop_assert_eq!(cuts_ok, mu.check(&a, mode).unwrap().holds);
        }
    }

    #[test]
    fn table_round_trip_and_evaluation((_, mu) in instance()) {
        let table = table_from_flag(&mu, CAP).unwrap();
        prop_assert_eq!(&flag_from_table(&table).unwrap(), &mu);
        for (k, t) in table.entries().iter().enumerate() {
            prop_assert_eq!(&mu.evaluate(&table.vector_at(k)).unwrap(), t);
        }
        let zero = fuzzy_homlie::Vector::zero(mu.field(), mu.dim());
        prop_assert_eq!(&mu.evaluate(&zero).unwrap(), mu.top_level());
    }

    #[test]
    fn cuts_are_nested_and_strong_cuts_are_inside((_, mu) in instance()) {
        let levels = mu.image_levels();
        for w in levels.windows(2) {
            let (hi, lo) = (&w[0], &w[1]);
            prop_assert!(hi > lo);
            let (uh, ul) = (mu.upper_level(hi).unwrap(), mu.upper_level(lo).unwrap());
            prop_assert!(uh.is_subspace_of(ul).unwrap() && uh != ul);
            prop_assert_eq!(mu.strong_upper_level(lo), Some(uh));
        }
        prop_assert!(mu.strong_upper_level(&levels[0]).is_none());
        prop_assert!(mu.upper_level(levels.last().unwrap()).unwrap().is_full());
    }

    #[test]
    fn serialization_round_trips((a, mu) in instance()) {
        prop_assert_eq!(&parse_algebra(&serialize_algebra(&a)).unwrap(), &a);
        prop_assert_eq!(&parse_flag(&serialize_flag(&mu), None).unwrap(), &mu);
        let text = serialize_instance(&[(&a, &mu)]);
        prop_assert_eq!(parse_instance(&text).unwrap(), vec![(a, mu)]);
    }

    #[test]
    fn direct_sum_matches_pointwise_min(((a, mu), (b, nu)) in pair(FlagKind::Subalgebra)) {
        let sum = HomLieAlgebra::direct_sum(&[&a, &b]).unwrap();
        let flag = FuzzyFlag::direct_sum(&[&mu, &nu]).unwrap();
        let (tm, tn) = (table_from_flag(&mu, CAP).unwrap(), table_from_flag(&nu, CAP).unwrap());
        let brute = brute_direct_sum(&[&tm, &tn], CAP).unwrap();
        prop_assert_eq!(&table_from_flag(&flag, CAP).unwrap(), &brute);
        prop_assert!(flag.is_fuzzy_subalgebra(&sum).unwrap().holds);
        prop_assert!(pointwise_check(&brute, &sum, ClosureMode::Subalgebra, CAP).unwrap().holds);
    }

    #[test]
    fn transport_laws_along_canonical_maps(((a, mu), (b, nu)) in pair(FlagKind::Ideal)) {
        let sum = HomLieAlgebra::direct_sum(&[&a, &b]).unwrap();
        let maps = [
            (Morphism::inclusion(&[&a, &b], 0, &sum).unwrap(), mu.clone()),
            (Morphism::projection(&[&a, &b], 1, &sum).unwrap(), FuzzyFlag::direct_sum(&[&mu, &nu]).unwrap()),
            (Morphism::zero(&a, &b).unwrap(), mu.clone()),
            (Morphism::identity(&b), nu.clone()),
        ];
        for (f, source_flag) in &maps {
            let pushed = source_flag.pushforward(f).unwrap();
            let brute = brute_pushforward(f, &table_from_flag(source_flag, CAP).unwrap(), CAP).unwrap();
            prop_assert_eq!(table_from_flag(&pushed, CAP).unwrap(), brute);
        }
        for (f, target_flag) in [
            (Morphism::projection(&[&a, &b], 0, &sum).unwrap(), &mu),
            (Morphism::inclusion(&[&a, &b], 1, &sum).unwrap(), &FuzzyFlag::direct_sum(&[&mu, &nu]).unwrap()),
            (Morphism::zero(&a, &b).unwrap(), &nu),
        ] {
            let pulled = target_flag.pullback(&f).unwrap();
            let brute = brute_pullback(&f, &table_from_flag(target_flag, CAP).unwrap(), CAP).unwrap();
            prop_assert_eq!(&table_from_flag(&pulled, CAP).unwrap(), &brute);
            prop_assert!(pulled.is_fuzzy_ideal(f.source()).unwrap().holds);
        }
    }
}
