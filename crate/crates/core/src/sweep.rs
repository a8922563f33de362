//! Seeded random generator sets and the classifier-versus-oracle sweep.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify, Classification};
use crate::gf2::BitVector;
use crate::graph::GeneratorSystem;
use crate::oracle::{closure_dimension, ClosureDimension, DEFAULT_CAP};
use crate::par::{self, Exec};
use crate::pauli::{Clifford, PauliString};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    pub max_qubits: usize,
    pub max_generators: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seed: 0x5eed, count: 1000, max_qubits: 5, max_generators: 8 }
    }
}

/// Per-instance generator for `(seed, index)`.
pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn random_pauli<R: Rng>(rng: &mut R, n_qubits: usize) -> PauliString {
    loop {
        let x: Vec<bool> = (0..n_qubits).map(|_| rng.random()).collect();
        let z: Vec<bool> = (0..n_qubits).map(|_| rng.random()).collect();
        let p = PauliString::from_bits(BitVector::from_bools(&x), BitVector::from_bools(&z), 0).expect("equal widths");
        if !p.is_identity() {
            return p;
        }
    }
}

/// Up to `max_generators` non-identity Paulis on up to `max_qubits` qubits.
pub fn random_set<R: Rng>(rng: &mut R, max_qubits: usize, max_generators: usize) -> Vec<PauliString> {
    let n = rng.random_range(1..=max_qubits);
    let k = rng.random_range(1..=max_generators);
    (0..k).map(|_| random_pauli(rng, n)).collect()
}

pub fn instance(cfg: &SweepConfig, index: usize) -> Vec<PauliString> {
    random_set(&mut instance_rng(cfg.seed, index), cfg.max_qubits, cfg.max_generators)
}

/// Applies `steps` random contractions between adjacent generators.
pub fn random_contractions<R: Rng>(rng: &mut R, paulis: &[PauliString], steps: usize) -> Vec<PauliString> {
    let mut sys = GeneratorSystem::new(paulis.to_vec()).expect("valid generators");
    for _ in 0..steps {
        let edges = sys.graph().edges();
        if edges.is_empty() {
            break;
        }
        let (a, b) = edges[rng.random_range(0..edges.len())];
        let (t, s) = if rng.random() { (a, b) } else { (b, a) };
        sys.contract(t, s).expect("edge endpoints anticommute");
    }
    sys.paulis().to_vec()
}

pub fn random_clifford<R: Rng>(rng: &mut R, n_qubits: usize) -> Clifford {
    let kind = if n_qubits < 2 { rng.random_range(0..2) } else { rng.random_range(0..3) };
    let q = rng.random_range(0..n_qubits);
    match kind {
        0 => Clifford::H(q),
        1 => Clifford::S(q),
        _ => {
            let t = (q + rng.random_range(1..n_qubits)) % n_qubits;
            Clifford::Cnot(q, t)
        }
    }
}

/// Conjugates every generator by the same `steps` random gates.
pub fn random_conjugation<R: Rng>(rng: &mut R, paulis: &[PauliString], steps: usize) -> Vec<PauliString> {
    let n = paulis[0].n_qubits();
    let gates: Vec<Clifford> = (0..steps).map(|_| random_clifford(rng, n)).collect();
    paulis
        .iter()
        .map(|p| gates.iter().fold(p.clone(), |acc, &g| acc.apply(g).expect("gate in range")))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub index: usize,
    pub paulis: Vec<PauliString>,
    pub classified: Result<BigUint, String>,
    pub oracle: ClosureDimension,
}

impl SweepOutcome {
    pub fn agrees(&self) -> bool {
        match (&self.classified, self.oracle) {
            (Ok(d), ClosureDimension::Exact(o)) => *d == BigUint::from(o),
            _ => false,
        }
    }
}

fn dimension(c: &crate::error::Result<Classification>) -> Result<BigUint, String> {
    c.as_ref().map(|c| c.total_dimension.clone()).map_err(ToString::to_string)
}

/// Classifies every instance and compares with the closure size.
pub fn oracle_sweep(cfg: &SweepConfig, exec: Exec) -> Vec<SweepOutcome> {
    let indices: Vec<usize> = (0..cfg.count).collect();
    par::map(exec, &indices, |&index| {
        let paulis = instance(cfg, index);
        let classified = dimension(&classify(&paulis));
        let oracle = closure_dimension(&paulis, DEFAULT_CAP).unwrap_or(ClosureDimension::CapExceeded);
        SweepOutcome { index, paulis, classified, oracle }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_reproducible() {
        let cfg = SweepConfig::default();
        assert_eq!(instance(&cfg, 17), instance(&cfg, 17));
        assert_ne!(instance(&cfg, 17), instance(&cfg, 18));
        for i in 0..50 {
            let set = instance(&cfg, i);
            assert!(!set.is_empty() && set.len() <= 8);
            assert!(set.iter().all(|p| !p.is_identity() && p.n_qubits() <= 5));
        }
    }

    #[test]
    fn small_sweep_agrees() {
        let cfg = SweepConfig { count: 60, ..SweepConfig::default() };
        let seq = oracle_sweep(&cfg, Exec::Sequential);
        let par = oracle_sweep(&cfg, Exec::Parallel);
        for (a, b) in seq.iter().zip(&par) {
            assert!(a.agrees(), "instance {}: {:?} vs {:?}", a.index, a.classified, a.oracle);
            assert_eq!(a.classified, b.classified);
        }
    }
}
