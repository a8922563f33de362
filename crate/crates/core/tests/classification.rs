use num_bigint::BigUint;
use pauli_lie::classify::compute_center;
use pauli_lie::oracle::{closure_dimension, enumerate_valid_colourings, lie_closure, ClosureDimension, DEFAULT_CAP};
use pauli_lie::sweep::{instance, instance_rng, oracle_sweep, random_conjugation, SweepConfig};
use pauli_lie::{
    canonical_generators, classify, parse_pauli, CanonicalForm, CanonicalShape, Exec, Family, GeneratorSystem, PauliString,
};

fn ps(list: &[&str], n: usize) -> Vec<PauliString> {
    list.iter().map(|s| parse_pauli(s, Some(n)).unwrap()).collect()
}

fn form(family: Family, k: usize, n_c: usize, dependent: bool) -> CanonicalForm {
    let shape = if family == Family::A { CanonicalShape::line(k, n_c) } else { CanonicalShape::star(family, k, n_c) };
    CanonicalForm::new(shape, dependent)
}

#[test]
fn two_component_set() {
    let set = ps(&["Z0", "X0", "Y1 X2", "X1 X3", "Z3", "Z1 X3 Z4", "X4"], 5);
    let c = classify(&set).unwrap();
    assert_eq!(c.components.len(), 2);
    assert_eq!(c.components[0].generators, [0, 1]);
    let oracle = lie_closure(&set, DEFAULT_CAP).unwrap().len();
    assert_eq!(c.total_dimension, BigUint::from(oracle));
}

#[test]
fn center_column_of_weight_two() {
    // centers Z1, Z3 and Z1 Z3
    let set = ps(&["X0", "Z0", "Z0 Z1", "X2", "Z2", "Z2 Z3", "X4", "Z4", "Z4 Z1 Z3"], 5);
    let c = classify(&set).unwrap();
    let z = &c.center;
    assert_eq!((z.n_z, z.n_z_bar), (2, 3));
    let weights: Vec<usize> = (0..z.n_z_bar).map(|j| (0..z.n_z).filter(|&i| z.matrix.get(i, j)).count()).collect();
    assert_eq!(weights, [1, 1, 2]);
    for j in 0..z.n_z_bar {
        let mut acc = PauliString::identity(5);
        for i in (0..z.n_z).filter(|&i| z.matrix.get(i, j)) {
            acc = acc.mul(&z.generators[z.basis[i]]).unwrap();
        }
        assert_eq!(acc.key(), z.generators[j].key());
    }
    assert_eq!(compute_center(&c.components), c.center);
}

#[test]
fn odd_line_without_dependence_has_a_symmetry() {
    let c = classify(&canonical_generators(&form(Family::A, 5, 0, false)).unwrap()).unwrap();
    assert_eq!(c.center.per_component, [(0, 1)]);
    let c = classify(&canonical_generators(&form(Family::A, 6, 0, false)).unwrap()).unwrap();
    assert_eq!((c.center.n_z, c.center.matrix.n_cols()), (0, 0));
}

#[test]
fn trace_replays_to_the_labels() {
    let cfg = SweepConfig { seed: 99, count: 300, ..SweepConfig::default() };
    for i in 0..cfg.count {
        let set = instance(&cfg, i);
        let c = classify(&set).unwrap();
        let log: Vec<_> = c.components.iter().flat_map(|k| k.log.iter().copied()).collect();
        let replayed = GeneratorSystem::replay(&set, &log).unwrap();
        for comp in &c.components {
            for (label, &src) in comp.labels.iter().zip(&comp.label_sources) {
                assert_eq!(&replayed[src], label, "instance {i}");
            }
        }
    }
}

#[test]
fn second_seed_sweep_agrees() {
    let cfg = SweepConfig { seed: 2024, count: 500, max_qubits: 6, max_generators: 10 };
    for o in oracle_sweep(&cfg, Exec::Sequential) {
        assert!(o.agrees(), "instance {}: {:?} vs {:?}", o.index, o.classified, o.oracle);
    }
}

#[test]
fn canonical_forms_survive_conjugation() {
    let forms = [
        form(Family::A, 6, 1, false),
        form(Family::A, 7, 0, true),
        form(Family::B1, 2, 1, false),
        form(Family::B2, 1, 0, false),
        form(Family::B3, 2, 0, false),
        form(Family::B3, 1, 1, true),
    ];
    for (k, f) in forms.iter().enumerate() {
        let gens = canonical_generators(f).unwrap();
        let moved = random_conjugation(&mut instance_rng(5, k), &gens, 80);
        assert_eq!(classify(&moved).unwrap().components[0].form, Some(*f));
    }
}

#[test]
fn colourings_count_the_closure() {
    for f in [form(Family::A, 5, 1, false), form(Family::A, 5, 0, true), form(Family::B3, 1, 0, true), form(Family::B3, 1, 0, false), form(Family::A, 7, 0, true), form(Family::B1, 2, 0, false)] {
        let gens = canonical_generators(&f).unwrap();
        let cols = enumerate_valid_colourings(&f).unwrap();
        let mut keys: Vec<_> = cols.iter().map(|c| c.key(&gens)).collect();
        keys.sort();
        keys.dedup();
        let closure = lie_closure(&gens, DEFAULT_CAP).unwrap();
        assert_eq!(keys.len(), closure.len(), "{f}");
        assert!(keys.iter().all(|k| closure.keys.contains(k)));
        assert_eq!(cols.len(), keys.len(), "{f}");
    }
}

#[test]
fn frozen_closure_sizes() {
    // computed once with the closure oracle
    let cases: [(CanonicalForm, usize); 5] = [
        (form(Family::A, 7, 0, false), 28),
        (form(Family::B1, 2, 0, false), 36),
        (form(Family::B2, 1, 0, false), 120),
        (form(Family::B3, 1, 0, false), 63),
        (form(Family::B3, 1, 0, true), 63),
    ];
    for (f, dim) in cases {
        let gens = canonical_generators(&f).unwrap();
        assert_eq!(closure_dimension(&gens, DEFAULT_CAP).unwrap(), ClosureDimension::Exact(dim), "{f}");
        assert_eq!(classify(&gens).unwrap().total_dimension, BigUint::from(dim));
    }
}
