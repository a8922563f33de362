use pauli_lie::oracle::{lie_closure, DEFAULT_CAP};
use pauli_lie::reduction::{minimize_generators, reduce_component, reduce_to_canonical};
use pauli_lie::sweep::{instance_rng, random_contractions, random_set};
use pauli_lie::{build_graph, parse_pauli, GeneratorSystem, PauliString, Spider};
use proptest::prelude::*;
use rand::Rng;

fn random_connected(seed: u64) -> Option<Vec<PauliString>> {
    let mut rng = instance_rng(seed, 0);
    let set = random_set(&mut rng, 5, 9);
    let g = build_graph(&set).ok()?;
    (set.len() >= 2 && g.is_connected()).then_some(set)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn contractions_preserve_the_closure(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 1);
        let set = random_set(&mut rng, 4, 6);
        let steps = rng.random_range(1..15);
        let moved = random_contractions(&mut rng, &set, steps);
        let a = lie_closure(&set, DEFAULT_CAP).unwrap();
        let b = lie_closure(&moved, DEFAULT_CAP).unwrap();
        prop_assert_eq!(a.keys, b.keys);
    }

    #[test]
    fn reduction_reaches_a_canonical_spider(seed in any::<u64>()) {
        let Some(set) = random_connected(seed) else { return Ok(()) };
        let mut sys = GeneratorSystem::new(set.clone()).unwrap();
        let shape = reduce_to_canonical(&mut sys).unwrap();
        prop_assert!(sys.graph_is_consistent());
        prop_assert!(sys.replay_matches());
        let all: Vec<usize> = (0..set.len()).collect();
        prop_assert_eq!(Spider::recognize(sys.graph(), &all).and_then(|s| s.shape()), Some(shape));
        let before = lie_closure(&set, DEFAULT_CAP).unwrap();
        let after = lie_closure(sys.paulis(), DEFAULT_CAP).unwrap();
        prop_assert_eq!(&before.keys, &after.keys);

        let min = minimize_generators(&mut sys, &all).unwrap();
        let kept: Vec<PauliString> = min.vertices.iter().map(|&v| sys.paulis()[v].clone()).collect();
        prop_assert_eq!(lie_closure(&kept, DEFAULT_CAP).unwrap().keys, before.keys);
    }
}

#[test]
fn five_vertex_component_matches_oracle() {
    let n = 5;
    let set: Vec<PauliString> =
        ["Y1 X2", "X1 X3", "Z3", "Z1 X3 Z4", "X4"].iter().map(|s| parse_pauli(s, Some(n)).unwrap()).collect();
    assert!(build_graph(&set).unwrap().is_connected());
    let mut sys = GeneratorSystem::new(set.clone()).unwrap();
    let all: Vec<usize> = (0..set.len()).collect();
    reduce_component(&mut sys, &all).unwrap();
    let c = pauli_lie::classify(&set).unwrap();
    let oracle = lie_closure(&set, DEFAULT_CAP).unwrap().len();
    assert_eq!(c.total_dimension, oracle.into());
}
