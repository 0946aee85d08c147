use num_rational::Rational64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use sfw_core::aut::automorphism_group;
use sfw_core::character::{induce, multiplicity, permutation_character, restrict, ClassFunction, CharacterTable};
use sfw_core::cocycle::normalize_cocycle;
use sfw_core::extension::{crossed_product_check, crossed_relations_hold, extension_from_out, RepRule};
use sfw_core::group::normal_core;
use sfw_core::index::{
    jones_spectrum_query, jones_value, local_index_combine, virtual_index, SpectrumKind, VirtualEmbeddingSpec,
    VirtualPart,
};
use sfw_core::subfactor::{
    brute_force_commutant_dim, dual_principal_graph, pimsner_popa_expand, pimsner_popa_reassemble, principal_graph,
    relative_commutant_dim, BipartiteMultiGraph, Side, ThetaMap,
};
use sfw_core::verify::random_algebra_element;
use sfw_core::{Config, CosetData, DoubleCosetData, GroupAction, GroupSpec, PermGroup, Permutation};

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A group on at most 5 points with a subgroup generated by words in its elements.
fn pair() -> impl Strategy<Value = (PermGroup, PermGroup)> {
    (2usize..=5)
        .prop_flat_map(|d| (prop::collection::vec(perm(d), 1..=3), prop::collection::vec(any::<prop::sample::Index>(), 0..=2)))
        .prop_map(|(gens, picks)| {
            let d = gens[0].degree();
            let cfg = Config::default();
            let g = PermGroup::generate(d, gens, &cfg).unwrap();
            let sub: Vec<Permutation> = picks.iter().map(|i| g.elements()[i.index(g.order())].clone()).collect();
            let h = PermGroup::generate(d, sub, &cfg).unwrap();
            (g, h)
        })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groups_are_closed_and_lagrange_holds((g, h) in pair()) {
        prop_assert!(g.elements()[0].is_identity());
        for a in g.elements() {
            prop_assert!(g.contains(&a.inverse()));
            for b in g.generators() {
                prop_assert!(g.contains(&(a * b)));
            }
        }
        prop_assert_eq!(factorial(g.degree()) % g.order(), 0);
        let cosets = CosetData::new(&g, &h).unwrap();
        prop_assert_eq!(cosets.index() * h.order(), g.order());
        let dc = DoubleCosetData::new(&g, &h).unwrap();
        let total: usize = dc.stabilizers.iter().map(|k| h.order() * (h.order() / k.order())).sum();
        prop_assert_eq!(total, g.order());
    }

    #[test]
    fn coset_action_is_a_homomorphism_into_bijections((g, h) in pair(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let cosets = CosetData::new(&g, &h).unwrap();
        let act = GroupAction::on_right_cosets(&cosets).unwrap();
        let (x, y) = (&g.elements()[a.index(g.order())], &g.elements()[b.index(g.order())]);
        prop_assert_eq!(act.image(&(x * y)), &(act.image(x) * act.image(y)));
        for j in 0..cosets.index() {
            // g · Hg_j = H g_j g^-1
            let moved = &cosets.reps[j] * &x.inverse();
            prop_assert_eq!(act.image(x).apply(j), cosets.coset_index(&moved));
        }
    }

    #[test]
    fn theta_is_multiplicative_and_sparse((g, h) in pair(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let cfg = Config::default();
        let cosets = CosetData::new(&g, &h).unwrap();
        prop_assume!(cosets.index() <= 8);
        let theta = ThetaMap::new(&cosets, 2, &cfg).unwrap();
        let (x, y) = (&g.elements()[a.index(g.order())], &g.elements()[b.index(g.order())]);
        let mx = theta.matrix(x).unwrap();
        prop_assert!(&mx * &theta.matrix(y).unwrap() == theta.matrix(&(x * y)).unwrap());
        let pattern = mx.nonzero_pattern();
        prop_assert_eq!(pattern.len(), theta.tuple_count());
        for (i, j) in pattern {
            prop_assert_eq!(i, theta.act(x, j).unwrap());
            prop_assert_eq!(theta.entry(x, i, j).unwrap(), theta.closed_entry(x, i, j));
        }
    }

    #[test]
    fn pimsner_popa_reassembles_exactly((g, h) in pair(), seed in any::<u64>()) {
        let cosets = CosetData::new(&g, &h).unwrap();
        let x = random_algebra_element(&g, &mut StdRng::seed_from_u64(seed));
        let coeffs = pimsner_popa_expand(&x, &cosets).unwrap();
        for c in &coeffs {
            prop_assert!(c.support().all(|p| h.contains(p)));
        }
        prop_assert_eq!(pimsner_popa_reassemble(&coeffs, &cosets), x);
    }

    #[test]
    fn frobenius_reciprocity_and_permutation_character((g, h) in pair()) {
        let cfg = Config::default();
        let tg = CharacterTable::compute(&g, &cfg).unwrap();
        let th = CharacterTable::compute(&h, &cfg).unwrap();
        prop_assert!(tg.column_orthogonality_residual() <= cfg.tol_char);
        prop_assert_eq!(tg.degrees.iter().map(|&d| (d as usize).pow(2)).sum::<usize>(), g.order());
        for chi in &th.irreducibles {
            let ind = induce(chi, &tg.classes).unwrap();
            for psi in &tg.irreducibles {
                let lhs = multiplicity(&ind, psi, cfg.tol_mult).unwrap();
                let rhs = multiplicity(chi, &restrict(psi, &th.classes).unwrap(), cfg.tol_mult).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
        let act = GroupAction::on_right_cosets(&CosetData::new(&g, &h).unwrap()).unwrap();
        let perm_char = permutation_character(&tg.classes, &act).unwrap();
        let ind_triv = induce(&ClassFunction::trivial(&th.classes), &tg.classes).unwrap();
        prop_assert!(perm_char.approx_eq(&ind_triv, 1e-9));
    }

    #[test]
    fn graphs_recover_the_index((g, h) in pair()) {
        let cfg = Config::default();
        let index = (g.order() / h.order()) as f64;
        for graph in [principal_graph(&g, &h, &cfg).unwrap(), dual_principal_graph(&g, &h, &cfg).unwrap()] {
            prop_assert!((graph.norm_squared - index).abs() <= cfg.tol_norm, "{} vs {}", graph.norm_squared, index);
            prop_assert!(graph.is_connected());
            let back = BipartiteMultiGraph::from_json(&graph.to_json().unwrap()).unwrap();
            prop_assert_eq!(back, graph);
        }
    }

    #[test]
    fn commutant_routes_agree((g, h) in pair(), side_h in any::<bool>()) {
        let cfg = Config::default();
        let side = if side_h { Side::InH } else { Side::InG };
        let by_chars = relative_commutant_dim(&g, &h, &h, 1, side, &cfg).unwrap();
        let oracle = brute_force_commutant_dim(&g, &h, &h, 1, side, &cfg).unwrap();
        prop_assert_eq!(by_chars, oracle);
        if side == Side::InH {
            prop_assert!(by_chars as f64 <= (g.order() / h.order()) as f64 + 1.0);
        }
    }

    #[test]
    fn group_json_round_trips((g, _h) in pair()) {
        let text = serde_json::to_string(&g.to_spec()).unwrap();
        let back = GroupSpec::from_json(&text).unwrap().build(&Config::default()).unwrap();
        prop_assert_eq!(serde_json::to_string(&back.to_spec()).unwrap(), text);
        prop_assert_eq!(back, g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn automorphisms_preserve_orders((g, _h) in pair().prop_filter("small", |(g, _)| g.order() <= 24)) {
        let cfg = Config::default();
        let aut = automorphism_group(&g, &cfg).unwrap();
        prop_assert_eq!(aut.inner.order() * g.centre().unwrap().order(), g.order());
        for phi in aut.aut.elements() {
            for (i, x) in aut.base.elements().iter().enumerate() {
                prop_assert_eq!(x.order(), aut.base.elements()[phi.apply(i)].order());
            }
        }
    }

    #[test]
    fn extension_cocycles_hold((g, _h) in pair().prop_filter("small", |(g, _)| g.order() <= 24)) {
        let cfg = Config::default();
        prop_assume!(g.centre().unwrap().order() == 1);
        let aut = automorphism_group(&g, &cfg).unwrap();
        let all: Vec<usize> = (1..aut.out_order()).collect();
        let ext = extension_from_out(&g, &all, &cfg).unwrap();
        prop_assert!(ext.cocycle.verify().holds);
        prop_assert_eq!(ext.realized.order(), g.order() * ext.index);
        prop_assert!(crossed_relations_hold(&ext));
        let normalized = normalize_cocycle(&ext.cocycle).unwrap();
        prop_assert!(normalized.is_normalized());
        prop_assert_eq!(normalize_cocycle(&normalized).unwrap(), normalized);
    }

    #[test]
    fn crossed_product_holds_under_both_rules((g, h) in pair().prop_filter("small", |(g, _)| g.order() <= 24)) {
        let core = normal_core(&g, &h).unwrap();
        for rule in [RepRule::Simplest, RepRule::Maximal] {
            let r = crossed_product_check(&g, &core, &h, rule).unwrap();
            prop_assert!(r.holds, "{:?}", r);
        }
    }
}

proptest! {
    #[test]
    fn jones_values_increase_towards_four(n in 3u64..5000) {
        let (a, b) = (jones_value(n), jones_value(n + 1));
        prop_assert!(a < b && b < 4.0);
    }

    #[test]
    fn verdicts_are_stable_under_halving_tol(x in 0.0f64..6.0) {
        let tol = 1e-9;
        let far = (3..200).all(|n| (x - jones_value(n)).abs() > 2.0 * tol) && (x - 4.0).abs() > 2.0 * tol;
        prop_assume!(far);
        let a = jones_spectrum_query(x, tol).unwrap().kind;
        let b = jones_spectrum_query(x, tol / 2.0).unwrap().kind;
        prop_assert_eq!(a, b);
        if x < 4.0 {
            prop_assert_eq!(a, SpectrumKind::NotInSpectrum);
        }
    }

    #[test]
    fn single_part_virtual_index(index_h in 1u64..1000, t in 1u64..4) {
        let spec = VirtualEmbeddingSpec { t, parts: vec![VirtualPart { s: 1, index_g_k: 1, index_h_gamma_k: index_h }] };
        let got = virtual_index(&spec);
        if t == 1 {
            prop_assert_eq!(got.unwrap(), index_h);
        } else {
            prop_assert!(got.is_err());
        }
    }

    #[test]
    fn uniform_partition_local_index(n in 1i64..40, c in 1.0f64..50.0) {
        let parts = vec![(Rational64::new(1, n), c); n as usize];
        let got = local_index_combine(&parts).unwrap();
        let want = (n * n) as f64 * c;
        prop_assert!((got - want).abs() <= 1e-9 * want);
    }
}
