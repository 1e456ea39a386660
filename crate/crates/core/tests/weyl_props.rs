use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smindy_core::maps::PhiMap;
use smindy_core::{HomEngine, NcTuple, Quiver, WeylElement, WeylGroup};

fn d4() -> &'static WeylGroup {
    static G: OnceLock<WeylGroup> = OnceLock::new();
    G.get_or_init(|| WeylGroup::new(&Quiver::d(4)).unwrap())
}

fn a3_zigzag() -> &'static WeylGroup {
    static G: OnceLock<WeylGroup> = OnceLock::new();
    G.get_or_init(|| WeylGroup::new(&Quiver::new(3, vec![(0, 1), (2, 1)]).unwrap()).unwrap())
}

fn product(g: &WeylGroup, word: &[usize]) -> WeylElement {
    word.iter().fold(g.identity(), |acc, &i| acc.mul(&g.reflections()[i].elem))
}

#[test]
fn abs_length_matches_reflection_bfs() {
    for g in [d4(), a3_zigzag()] {
        let mut dist = HashMap::from([(g.identity(), 0usize)]);
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(u) = queue.pop_front() {
            for t in g.reflections() {
                let v = u.mul(&t.elem);
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), dist[&u] + 1);
                    queue.push_back(v);
                }
            }
        }
        assert_eq!(dist.len(), g.order());
        for u in g.elements() {
            assert_eq!(g.abs_length(u), dist[u]);
        }
    }
}

/// Support criterion for positivity against explicit standard parabolic
/// subgroups, for every Dynkin quiver of rank at most 3 up to orientation.
#[test]
fn support_detects_proper_parabolic_subgroups_up_to_rank_3() {
    let quivers = [
        Quiver::linear_a(1),
        Quiver::linear_a(2),
        Quiver::new(2, vec![]).unwrap(),
        Quiver::linear_a(3),
        Quiver::new(3, vec![(0, 1), (2, 1)]).unwrap(),
        Quiver::new(3, vec![(1, 0), (1, 2)]).unwrap(),
        Quiver::new(3, vec![(0, 1)]).unwrap(),
        Quiver::new(3, vec![]).unwrap(),
    ];
    for q in quivers {
        let g = WeylGroup::new(&q).unwrap();
        let n = g.rank();
        let mut proper = HashSet::new();
        for mask in 0u32..(1 << n) - 1 {
            let gens: Vec<&WeylElement> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &g.simple_reflections()[i]).collect();
            let mut seen = HashSet::from([g.identity()]);
            let mut queue = VecDeque::from([g.identity()]);
            while let Some(u) = queue.pop_front() {
                for s in &gens {
                    let v = u.mul(s);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
            proper.extend(seen);
        }
        for u in g.elements() {
            assert_eq!(g.support(u).len() < n, proper.contains(u), "{} {:?}", q.type_label(), u.reduced_word(g.simple_reflections()));
        }
    }
}

#[test]
fn every_element_preserves_the_form() {
    let g = d4();
    assert!(g.elements().iter().all(|u| u.preserves_form(g.form())));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_is_subadditive(i in 0usize..192, j in 0usize..192) {
        let g = d4();
        let (u, v) = (&g.elements()[i], &g.elements()[j]);
        prop_assert!(g.abs_length(&u.mul(v)) <= g.abs_length(u) + g.abs_length(v));
        prop_assert_eq!(g.abs_length(u), g.abs_length(&u.inverse()));
        prop_assert!(u.mul(&u.inverse()).is_identity());
    }

    #[test]
    fn support_does_not_depend_on_the_reduced_word(i in 0usize..192, seed in any::<u64>()) {
        let g = d4();
        let u = &g.elements()[i];
        let fixed = g.support(u);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            prop_assert_eq!(&g.support_random(u, &mut rng), &fixed);
        }
    }

    #[test]
    fn random_t_reduced_expressions_are_reduced(i in 0usize..24, seed in any::<u64>()) {
        let g = a3_zigzag();
        let u = &g.elements()[i];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = g.t_reduced_random(u, &mut rng);
        prop_assert_eq!(word.len(), g.abs_length(u));
        prop_assert_eq!(&product(g, &word), u);
    }

    #[test]
    fn t_reduced_letters_stay_in_the_parabolic_subgroup(i in 0usize..24) {
        // Every reflection in a T-reduced word of u has its root supported on supp(u).
        let g = a3_zigzag();
        let u = &g.elements()[i];
        let supp = g.support(u);
        for word in g.all_t_reduced_expressions(u) {
            for t in word {
                let root = &g.reflections()[t].root;
                prop_assert!(root.support().all(|v| supp.contains(&v)));
            }
        }
    }

    #[test]
    fn phi_ignores_the_choice_of_expressions(idx in 0usize..1000, seed in any::<u64>()) {
        let q = Quiver::linear_a(3);
        let e = HomEngine::new(&q).unwrap();
        let g = WeylGroup::new(&q).unwrap();
        let tuples: Vec<NcTuple> = g.filter_positive(&g.enumerate_nc(2).unwrap());
        let t = &tuples[idx % tuples.len()];
        let phi = PhiMap::new(&e, &g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(phi.phi_random(t, 2, &mut rng).unwrap(), phi.phi(t, 2).unwrap());
    }
}
