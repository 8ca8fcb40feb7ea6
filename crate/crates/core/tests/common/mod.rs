//! Shared generators, oracles and property checks for the integration tests.
//!
//! Every property runs under a fixed seed so failures reproduce exactly.

#![allow(dead_code)]

use std::collections::BTreeSet;

use orient_expr::automaton::{enumerate_periods, is_periodic, is_transitive};
use orient_expr::canon::{enumerate_digraphs, enumerate_graphs, labelling_count};
use orient_expr::duality::{digraph_universe, known_pairs, verify_on_universe};
use orient_expr::embed::{contains_induced, is_isomorphic};
use orient_expr::forbidden::homomorphic_image_closure;
use orient_expr::holes::{analyze, HoleClassSpec, HoleTail, Overall, Status, Witness};
use orient_expr::hom::{core_of, hom_exists, is_hom_equivalent, is_oriented_forest, is_oriented_tree};
use orient_expr::orientations::orientations_of;
use orient_expr::periods::period_structure;
use orient_expr::search::admits_orientation;
use orient_expr::words::{is_a_free, is_factor, path_to_word, sync_bound, word_to_path};
use orient_expr::{Digraph, FactorSet, ForbiddenSet, Graph, Letter, OrientedGraph, SearchMode, Word};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: [u8; 32] = *b"orientations-avoiding-a-set-F-01";

/// Cases for word-level properties.
pub const WORD_CASES: u32 = 10_000;
/// Cases for graph-level properties, which are costlier per case.
pub const GRAPH_CASES: u32 = 1_000;

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// generators

pub fn arb_word(min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), min..=max)
        .prop_map(|bits| Word::new(bits.into_iter().map(|b| if b { Letter::Fwd } else { Letter::Bwd }).collect()))
}

pub fn arb_factor_set(max_len: usize, max_members: usize) -> impl Strategy<Value = FactorSet> {
    prop::collection::vec(arb_word(1, max_len), 0..=max_members).prop_map(|ws| FactorSet::new(ws).unwrap())
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Random digraphs; each pair is absent, one arc, the other arc, or (unless
/// `oriented`) a digon.
pub fn arb_digraph(max_n: usize, oriented: bool) -> impl Strategy<Value = Digraph> {
    let kinds = if oriented { 3u8 } else { 4u8 };
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..kinds, n * (n - 1) / 2).prop_map(move |codes| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let mut arcs = Vec::new();
            for ((u, v), c) in pairs.zip(codes) {
                if c == 1 || c == 3 {
                    arcs.push((u, v));
                }
                if c == 2 || c == 3 {
                    arcs.push((v, u));
                }
            }
            Digraph::new(n, arcs).unwrap()
        })
    })
}

fn random_word(rng: &mut ChaCha8Rng, min: usize, max: usize) -> Word {
    let len = rng.random_range(min..=max);
    Word::new(
        (0..len)
            .map(|_| if rng.random_bool(0.5) { Letter::Fwd } else { Letter::Bwd })
            .collect(),
    )
}

/// `count` forbidden sets of oriented paths on 2 to 5 vertices.
pub fn random_path_sets(seed: u64, count: usize) -> Vec<ForbiddenSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let members = rng.random_range(1..=3);
            ForbiddenSet::new((0..members).map(|_| word_to_path(&random_word(&mut rng, 1, 4)))).unwrap()
        })
        .collect()
}

/// `count` factor sets with members of length 1 to `max_len`.
pub fn random_factor_sets(seed: u64, count: usize, max_len: usize, max_members: usize) -> Vec<FactorSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let members = rng.random_range(1..=max_members);
            FactorSet::new((0..members).map(|_| random_word(&mut rng, 1, max_len))).unwrap()
        })
        .collect()
}

/// Every distinct factor set whose members have length at most 3.
pub fn all_short_factor_sets() -> Vec<FactorSet> {
    let words: Vec<Word> = (1..=3).flat_map(Word::all_of_length).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << words.len() {
        let chosen = (0..words.len()).filter(|i| mask >> i & 1 == 1).map(|i| words[i].clone());
        let a = FactorSet::new(chosen).unwrap();
        let key: Vec<String> = a.members().iter().map(|w| w.to_string()).collect();
        if seen.insert(key) {
            out.push(a);
        }
    }
    out
}

pub fn all_graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(|n| enumerate_graphs(n).unwrap()).collect()
}

// oracles

pub fn same_arcs(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n() && (0..a.n()).all(|u| a.out_mask(u) == b.out_mask(u))
}

/// `w^n` avoids `a` for every `n <= reps`.
pub fn powers_avoid(w: &Word, a: &FactorSet, reps: usize) -> bool {
    (1..=reps).all(|n| is_a_free(&w.pow(n), a))
}

/// A random `a`-free word of length `len` extending `prefix`, built letter by
/// letter with the direct factor check. `None` on a dead end.
fn extend_free(rng: &mut ChaCha8Rng, prefix: &Word, len: usize, a: &FactorSet) -> Option<Word> {
    let mut w = prefix.clone();
    for _ in 0..len {
        let first = if rng.random_bool(0.5) { Letter::Fwd } else { Letter::Bwd };
        let next = [first, first.flip()]
            .into_iter()
            .map(|l| w.concat(&Word::new(vec![l])))
            .find(|c| is_a_free(c, a))?;
        w = next;
    }
    Some(w)
}

// property checks: each returns Err with a description of the first failure

pub fn prop_orientation_counts() -> Result<(), String> {
    run(GRAPH_CASES, arb_graph(6), |g| {
        let all: Vec<OrientedGraph> = orientations_of(&g, false).collect();
        prop_assert_eq!(all.len(), 1usize << g.edge_count());
        for o in &all {
            prop_assert_eq!(&o.underlying(), &g);
        }
        Ok(())
    })
}

pub fn prop_acyclic_round_trip() -> Result<(), String> {
    run(GRAPH_CASES, arb_digraph(6, true), |d| {
        let d = OrientedGraph::try_from(d).unwrap();
        let found = orientations_of(&d.underlying(), true).any(|o| same_arcs(&o, &d));
        prop_assert_eq!(d.is_acyclic(), found);
        Ok(())
    })
}

pub fn prop_induced_containment() -> Result<(), String> {
    let strategy = (arb_digraph(7, false), any::<u64>(), any::<u64>());
    run(GRAPH_CASES, strategy, |(d, s1, s2)| {
        prop_assert!(contains_induced(&d, &d).is_some());
        let keep1: Vec<usize> = (0..d.n()).filter(|u| s1 >> u & 1 == 1).collect();
        let h = d.induced(&keep1);
        let keep2: Vec<usize> = (0..h.n()).filter(|u| s2 >> u & 1 == 1).collect();
        let k = h.induced(&keep2);
        let kh = contains_induced(&k, &h).expect("induced subdigraph");
        let hd = contains_induced(&h, &d).expect("induced subdigraph");
        let composed: Vec<usize> = kh.iter().map(|&x| hd[x]).collect();
        prop_assert!(is_isomorphic(&d.induced(&composed), &k));
        Ok(())
    })
}

pub fn prop_enumeration_classes() -> Result<(), String> {
    for n in 1..=3 {
        let classes = enumerate_digraphs(n, false).map_err(|e| e.to_string())?;
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                check(!is_isomorphic(a, b), || format!("duplicate class on {n} vertices"))?;
            }
        }
        let total: usize = classes.iter().map(labelling_count).sum();
        check(total == 1 << (n * (n - 1)), || format!("labellings on {n} vertices sum to {total}"))?;
    }
    Ok(())
}

pub fn prop_coupling_girth() -> Result<(), String> {
    for r in 3..=8 {
        for s in 3..=8 {
            let g = Graph::coupling(r, s).map_err(|e| e.to_string())?;
            check(g.girth() == Some(r.min(s)), || format!("girth of coupling({r}, {s})"))?;
        }
    }
    Ok(())
}

pub fn prop_word_round_trip() -> Result<(), String> {
    run(WORD_CASES, arb_word(0, 12), |w| {
        let p = word_to_path(&w);
        let words = path_to_word(&p).unwrap();
        prop_assert!(words.contains(&w));
        for v in &words {
            prop_assert!(is_isomorphic(&word_to_path(v), &p));
        }
        Ok(())
    })
}

pub fn prop_factor_monotone() -> Result<(), String> {
    let strategy = arb_word(0, 10).prop_flat_map(|b| {
        let n = b.len();
        (Just(b), 0..=n, 0..=n)
    });
    run(WORD_CASES, strategy, |(b, i, j)| {
        let (i, j) = (i.min(j), i.max(j));
        let a = Word::new(b.letters()[i..j].to_vec());
        prop_assert!(is_factor(&a, &b));
        prop_assert!(contains_induced(&word_to_path(&a), &word_to_path(&b)).is_some());
        Ok(())
    })
}

/// `ba, ad` free with `|a| >= sync_bound` gives `bad` free, for `WORD_CASES`
/// instances per factor set.
pub fn prop_synchronization() -> Result<(), String> {
    let mut sets: Vec<FactorSet> = ["<< >>", "><< >>", "<><> >>>", "<<<< ><>", "><"]
        .iter()
        .map(|s| FactorSet::new(s.split(' ').map(|w| w.parse().unwrap())).unwrap())
        .collect();
    sets.extend(random_factor_sets(7, 5, 4, 3));
    for a in &sets {
        let m = sync_bound(a);
        run(WORD_CASES, (any::<u64>(), 0..6usize, 0..4usize, 0..6usize), |(seed, lb, extra, ld)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let Some(ba) = extend_free(&mut rng, &Word::empty(), lb + m + extra, a) else {
                return Ok(());
            };
            let split = ba.len() - (m + extra);
            let b = Word::new(ba.letters()[..split].to_vec());
            let mid = Word::new(ba.letters()[split..].to_vec());
            let Some(ad) = extend_free(&mut rng, &mid, ld, a) else {
                return Ok(());
            };
            let d = Word::new(ad.letters()[mid.len()..].to_vec());
            prop_assert!(is_a_free(&b.concat(&mid).concat(&d), a), "A = {a}, b = {b}, a = {mid}, d = {d}");
            Ok(())
        })?;
    }
    Ok(())
}

pub fn prop_periodicity_oracle() -> Result<(), String> {
    run(WORD_CASES, (arb_word(1, 8), arb_factor_set(4, 4)), |(w, a)| {
        let k = a.max_len().div_ceil(w.len()) + 1;
        prop_assert_eq!(is_periodic(&w, &a).unwrap(), powers_avoid(&w, &a, 3 * k));
        Ok(())
    })
}

pub fn prop_multiples_closure() -> Result<(), String> {
    run(GRAPH_CASES, (arb_factor_set(4, 5), any::<bool>()), |(a, nonconstant)| {
        let periods = enumerate_periods(&a, 60, nonconstant);
        for &k in &periods {
            for lk in (2 * k..=60).step_by(k) {
                prop_assert!(periods.contains(&lk), "{a}: {k} but not {lk}");
            }
        }
        Ok(())
    })
}

/// Period sets of transitive languages match their predicted structure.
pub fn prop_period_structure() -> Result<(), String> {
    run(GRAPH_CASES, (arb_factor_set(4, 5), any::<bool>()), |(a, nonconstant)| {
        if !is_transitive(&a) {
            return Ok(());
        }
        let ps = period_structure(&a, nonconstant);
        let actual = enumerate_periods(&a, 300, nonconstant);
        prop_assert_eq!(ps.predicted(300), Some(actual), "{}", a);
        Ok(())
    })
}

/// Periods from the automaton against powers of every word up to length 10.
pub fn prop_periods_by_words() -> Result<(), String> {
    run(GRAPH_CASES, arb_factor_set(3, 4), |a| {
        let periods = enumerate_periods(&a, 10, false);
        for k in 1..=10 {
            let reps = a.max_len().div_ceil(k) + 2;
            let direct = Word::all_of_length(k).any(|w| powers_avoid(&w, &a, reps));
            prop_assert_eq!(periods.contains(&k), direct, "{} at {}", a, k);
        }
        Ok(())
    })
}

pub fn prop_witness_soundness() -> Result<(), String> {
    let members = prop::collection::vec(arb_digraph(4, true), 1..=3);
    let modes = prop::sample::select(vec![
        SearchMode::induced(),
        SearchMode::induced().acyclic(),
        SearchMode::hom(),
        SearchMode::overlap(),
        SearchMode::overlap().acyclic(),
    ]);
    run(GRAPH_CASES, (arb_graph(7), members, modes), |(g, members, mode)| {
        let f = ForbiddenSet::from_digraphs(members).unwrap();
        let v = admits_orientation(&g, &f, mode).unwrap();
        if let Some(w) = &v.witness {
            let o = w.to_oriented();
            prop_assert_eq!(&o.underlying(), &g);
            prop_assert!(orient_expr::is_free(&o, &f, mode).unwrap());
            if mode.acyclic {
                prop_assert!(o.is_acyclic());
            }
        }
        prop_assert_eq!(v.admits, v.witness.is_some());
        Ok(())
    })
}

/// With connected members, an overlap-free orientation is free.
pub fn prop_overlap_implies_induced() -> Result<(), String> {
    let members = prop::collection::vec(arb_digraph(4, true), 1..=3);
    run(GRAPH_CASES, (arb_graph(7), members), |(g, members)| {
        let f = ForbiddenSet::from_digraphs(members).unwrap();
        if !f.all_connected() {
            return Ok(());
        }
        if let Some(w) = admits_orientation(&g, &f, SearchMode::overlap()).unwrap().witness {
            prop_assert!(orient_expr::is_free(&w.to_oriented(), &f, SearchMode::induced()).unwrap());
        }
        Ok(())
    })
}

/// Induced search against the hom-image closure agrees with hom search.
pub fn prop_hom_closure_equivalence() -> Result<(), String> {
    for k in [3, 4] {
        let f = ForbiddenSet::new([OrientedGraph::directed_path(k)]).unwrap();
        let closure = homomorphic_image_closure(&f);
        for g in all_graphs_up_to(5) {
            let hom = admits_orientation(&g, &f, SearchMode::hom()).map_err(|e| e.to_string())?;
            let ind = admits_orientation(&g, &closure, SearchMode::induced()).map_err(|e| e.to_string())?;
            check(hom.admits == ind.admits, || format!("P{k} on {g:?}"))?;
            // hom-freeness of the witness, checked by homomorphism search
            if let Some(w) = hom.witness {
                let o = w.to_oriented();
                let maps = hom_exists(f.members()[0].as_digraph(), o.as_digraph()).map_err(|e| e.to_string())?;
                check(maps.is_none(), || format!("P{k} maps into the witness for {g:?}"))?;
            }
        }
    }
    Ok(())
}

pub fn prop_hom_composition() -> Result<(), String> {
    let d = || arb_digraph(5, false);
    run(GRAPH_CASES, (d(), d(), d()), |(a, b, c)| {
        let id = hom_exists(&a, &a).unwrap().expect("identity");
        prop_assert!(id.verify(&a, &a));
        if let (Some(ab), Some(bc)) = (hom_exists(&a, &b).unwrap(), hom_exists(&b, &c).unwrap()) {
            prop_assert!(ab.verify(&a, &b) && bc.verify(&b, &c));
            prop_assert!(ab.compose(&bc).verify(&a, &c));
        }
        Ok(())
    })
}

pub fn prop_core() -> Result<(), String> {
    run(GRAPH_CASES, arb_digraph(6, false), |d| {
        let core = core_of(&d).unwrap();
        prop_assert!(core.n() <= d.n());
        prop_assert!(is_hom_equivalent(&core, &d).unwrap());
        prop_assert!(is_isomorphic(&core_of(&core).unwrap(), &core));
        Ok(())
    })
}

/// Every pair whose first member is not an oriented forest fails somewhere
/// on five vertices.
pub fn prop_non_forest_pairs_fail() -> Result<(), String> {
    let small = digraph_universe(3, 3).map_err(|e| e.to_string())?;
    let universe = digraph_universe(5, 5).map_err(|e| e.to_string())?;
    for a in small.iter().filter(|a| !is_oriented_forest(a)) {
        for b in &small {
            let r = verify_on_universe(std::slice::from_ref(a), std::slice::from_ref(b), &universe, 4)
                .map_err(|e| e.to_string())?;
            let c = r.counterexample.ok_or_else(|| format!("({a:?}, {b:?}) holds to 5"))?;
            check(c.reverify(std::slice::from_ref(a), std::slice::from_ref(b)).unwrap(), || {
                format!("counterexample for ({a:?}, {b:?}) does not verify")
            })?;
        }
    }
    Ok(())
}

pub fn prop_verified_pairs_have_tree_cores() -> Result<(), String> {
    let universe = digraph_universe(4, 4).map_err(|e| e.to_string())?;
    for pair in known_pairs() {
        let r = verify_on_universe(std::slice::from_ref(&pair.a), std::slice::from_ref(&pair.b), &universe, 1).map_err(|e| e.to_string())?;
        check(r.counterexample.is_none(), || format!("{} fails", pair.name))?;
        let core = core_of(&pair.a).map_err(|e| e.to_string())?;
        check(is_oriented_tree(&core), || format!("{} has a non-tree core", pair.name))?;
    }
    Ok(())
}

fn arb_hole_spec() -> impl Strategy<Value = HoleClassSpec> {
    let set = || prop::collection::btree_set(4usize..40, 0..6);
    let tail = prop::sample::select(vec![HoleTail::Finite, HoleTail::Cofinite, HoleTail::OddTail, HoleTail::Other]);
    prop_oneof![
        set().prop_map(|s| HoleClassSpec::FiniteSet { lengths: s }),
        set().prop_map(|s| HoleClassSpec::CofiniteComplement { excluded: s }),
        (4usize..30, set()).prop_map(|(m, e)| HoleClassSpec::OddTail {
            threshold: m,
            exceptions: e.into_iter().filter(|&k| k < m).collect(),
        }),
        (prop::collection::btree_set(4usize..=60, 0..40), tail).prop_map(|(members, tail)| HoleClassSpec::Custom {
            members,
            bound: 60,
            tail,
        }),
    ]
}

/// A report's verdicts are consistent and their witnesses check out against
/// the sample.
pub fn prop_hole_report_consistency() -> Result<(), String> {
    run(GRAPH_CASES, arb_hole_spec(), |spec| {
        let r = analyze(&spec, 50).unwrap();
        let fails: Vec<_> = r.verdicts.iter().filter(|v| v.status == Status::Fail).collect();
        prop_assert_eq!(r.overall == Overall::NecessaryConditionsPass, fails.is_empty());
        for v in fails {
            match &v.witness {
                Some(Witness::Multiple { k, multiple }) => {
                    prop_assert!(r.cyc_sample.contains(k) && !r.cyc_sample.contains(multiple));
                    prop_assert_eq!(multiple % k, 0);
                }
                Some(Witness::CoprimeLengths { lengths, gcd }) => {
                    prop_assert!(lengths.iter().all(|k| r.cyc_sample.contains(k)));
                    let g = lengths.iter().fold(0, |a, &b| num_gcd(a, b));
                    prop_assert_eq!(g, *gcd);
                }
                Some(Witness::DeclaredTail { .. }) => {}
                other => prop_assert!(false, "fail with witness {:?}", other),
            }
        }
        Ok(())
    })
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Sampled cycle lengths match the closed form up to 200.
pub fn prop_hole_sample_coherence() -> Result<(), String> {
    let strategy = (prop::collection::btree_set(4usize..=200, 0..10), 4usize..60, any::<bool>());
    run(GRAPH_CASES, strategy, |(set, m, finite)| {
        let (spec, expected): (HoleClassSpec, Box<dyn Fn(usize) -> bool>) = if finite {
            let s = set.clone();
            (HoleClassSpec::FiniteSet { lengths: set }, Box::new(move |k| k == 3 || !s.contains(&k)))
        } else {
            let exc: BTreeSet<usize> = set.into_iter().filter(|&k| k < m).collect();
            let e = exc.clone();
            (
                HoleClassSpec::OddTail { threshold: m, exceptions: exc },
                Box::new(move |k| k == 3 || if k < m { !e.contains(&k) } else { k % 2 == 0 }),
            )
        };
        let cyc = orient_expr::holes::cycles_in_class(&spec, 200).unwrap();
        let closed: BTreeSet<usize> = (3..=200).filter(|&k| expected(k)).collect();
        prop_assert_eq!(cyc, closed);
        Ok(())
    })
}

/// Every property check, by name.
pub type PropertyCheck = fn() -> Result<(), String>;

pub fn all_properties() -> Vec<(&'static str, PropertyCheck)> {
    vec![
        ("orientation counts", prop_orientation_counts),
        ("acyclic round trip", prop_acyclic_round_trip),
        ("induced containment", prop_induced_containment),
        ("enumeration classes", prop_enumeration_classes),
        ("coupling girth", prop_coupling_girth),
        ("word round trip", prop_word_round_trip),
        ("factor monotonicity", prop_factor_monotone),
        ("synchronization", prop_synchronization),
        ("periodicity oracle", prop_periodicity_oracle),
        ("multiples closure", prop_multiples_closure),
        ("period structure", prop_period_structure),
        ("periods by words", prop_periods_by_words),
        ("witness soundness", prop_witness_soundness),
        ("overlap implies induced", prop_overlap_implies_induced),
        ("hom closure equivalence", prop_hom_closure_equivalence),
        ("hom composition", prop_hom_composition),
        ("core", prop_core),
        ("non-forest pairs fail", prop_non_forest_pairs_fail),
        ("verified pairs have tree cores", prop_verified_pairs_have_tree_cores),
        ("hole report consistency", prop_hole_report_consistency),
        ("hole sample coherence", prop_hole_sample_coherence),
    ]
}
