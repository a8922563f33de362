//! Brute-force ground truth: Lie closure by nested commutators and the
//! colouring characterization of canonical algebras.

use std::collections::{BTreeSet, HashSet};

use crate::classify::{canonical_generators, CanonicalForm};
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graph::build_graph;
use crate::par::{self, Exec};
use crate::pauli::{PauliKey, PauliString};
use crate::shape::{Family, Spider};

pub const DEFAULT_CAP: usize = 1 << 20;

/// Phase-free keys of a (possibly truncated) Lie closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSet {
    pub keys: BTreeSet<PauliKey>,
    pub frontier_exhausted: bool,
    pub cap_hit: bool,
}

impl ClosureSet {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, p: &PauliString) -> bool {
        self.keys.contains(&p.key())
    }

    /// Members as Hermitian Paulis in key order.
    pub fn members(&self) -> Vec<PauliString> {
        self.keys.iter().map(PauliKey::to_pauli).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureDimension {
    Exact(usize),
    CapExceeded,
}

/// Which pairs the saturation multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureRule {
    /// Member × generator (left-nested commutators).
    Generators,
    /// Member × member; slower, used to cross-check `Generators`.
    AllPairs,
}

fn keys_of(paulis: &[PauliString]) -> Result<Vec<PauliKey>> {
    if let Some(first) = paulis.first() {
        for p in paulis {
            if p.n_qubits() != first.n_qubits() {
                return Err(Error::WidthMismatch(first.n_qubits(), p.n_qubits()));
            }
        }
    }
    Ok(paulis.iter().map(PauliString::key).collect())
}

pub fn lie_closure(paulis: &[PauliString], cap: usize) -> Result<ClosureSet> {
    lie_closure_with(paulis, cap, Exec::default(), ClosureRule::Generators)
}

/// Breadth-first saturation: seed with the generators, then add the key of
/// every nonzero commutator until nothing new appears or `cap` is reached.
pub fn lie_closure_with(paulis: &[PauliString], cap: usize, exec: Exec, rule: ClosureRule) -> Result<ClosureSet> {
    let gens = keys_of(paulis)?;
    let mut seen: HashSet<PauliKey> = HashSet::new();
    let mut members: Vec<PauliKey> = Vec::new();
    let mut frontier: Vec<PauliKey> = Vec::new();
    let mut cap_hit = false;
    for g in &gens {
        if seen.contains(g) {
            continue;
        }
        if seen.len() == cap {
            cap_hit = true;
            break;
        }
        seen.insert(g.clone());
        members.push(g.clone());
        frontier.push(g.clone());
    }
    let mut unique_gens = members.clone();
    while !frontier.is_empty() && !cap_hit {
        let partners: &[PauliKey] = match rule {
            ClosureRule::Generators => &unique_gens,
            ClosureRule::AllPairs => &members,
        };
        let candidates = par::flat_map(exec, &frontier, |m| {
            partners.iter().filter(|g| m.anticommutes(g)).map(|g| m.product(g)).collect::<Vec<_>>()
        });
        let mut next = Vec::new();
        for k in candidates {
            if seen.contains(&k) {
                continue;
            }
            if seen.len() == cap {
                cap_hit = true;
                break;
            }
            seen.insert(k.clone());
            next.push(k);
        }
        members.extend(next.iter().cloned());
        if rule == ClosureRule::AllPairs {
            unique_gens.clear();
        }
        frontier = next;
    }
    Ok(ClosureSet { keys: members.into_iter().collect(), frontier_exhausted: !cap_hit, cap_hit })
}

pub fn closure_dimension(paulis: &[PauliString], cap: usize) -> Result<ClosureDimension> {
    let set = lie_closure(paulis, cap)?;
    Ok(if set.cap_hit { ClosureDimension::CapExceeded } else { ClosureDimension::Exact(set.len()) })
}

/// Post-hoc check: every anticommuting pair of members has its product inside.
pub fn is_closed(set: &ClosureSet) -> bool {
    let keys: Vec<&PauliKey> = set.keys.iter().collect();
    keys.iter().enumerate().all(|(i, a)| {
        keys[i + 1..].iter().all(|b| !a.anticommutes(b) || set.keys.contains(&a.product(b)))
    })
}

/// A subset of the vertices of a canonical graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    pub bits: BitVector,
}

impl Colouring {
    /// Key of the product of the coloured generators.
    pub fn key(&self, generators: &[PauliString]) -> PauliKey {
        let mut acc = PauliString::identity(generators[0].n_qubits()).key();
        for i in self.bits.iter_ones() {
            acc = acc.product(&generators[i].key());
        }
        acc
    }
}

fn count_components(adj: &[Vec<usize>], set: &[bool]) -> usize {
    let mut seen = vec![false; set.len()];
    let mut count = 0;
    for s in 0..set.len() {
        if !set[s] || seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if set[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Colourings of the graph of `canonical_generators(form)` whose product
/// lies in the algebra, by the connected-component rules.
///
/// Leg-1 vertices are the leaves adjacent to the center. Lines: a single
/// component after discarding an even number of coloured leg-1 vertices.
/// Stars: an odd number of components, except (B3) the first and third
/// vertex of the long leg together with an odd number of leg-1 vertices.
pub fn enumerate_valid_colourings(form: &CanonicalForm) -> Result<Vec<Colouring>> {
    let gens = canonical_generators(form)?;
    let graph = build_graph(&gens)?;
    let n = gens.len();
    let all: Vec<usize> = (0..n).collect();
    let sp = Spider::recognize(&graph, &all).ok_or_else(|| Error::defect("canonical set is not a spider"))?;
    let adj: Vec<Vec<usize>> = (0..n).map(|v| graph.neighbors(v).collect()).collect();
    let leg1: Vec<usize> = sp.leaves();
    let b3_leg = (form.shape.family == Family::B3)
        .then(|| sp.legs.iter().find(|l| l.len() == 3).map(|l| (l[0], l[2])))
        .flatten();

    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let valid = if form.shape.family == Family::A {
            line_rule(&adj, &set, &leg1)
        } else {
            star_rule(&adj, &set, &leg1, b3_leg)
        };
        if valid {
            out.push(Colouring { bits: BitVector::from_bools(&set) });
        }
    }
    Ok(out)
}

fn line_rule(adj: &[Vec<usize>], set: &[bool], leg1: &[usize]) -> bool {
    let coloured: Vec<usize> = leg1.iter().copied().filter(|&v| set[v]).collect();
    let k = coloured.len();
    (0u64..(1u64 << k)).filter(|e| e.count_ones() % 2 == 0).any(|e| {
        let mut rest = set.to_vec();
        for (i, &v) in coloured.iter().enumerate() {
            if e >> i & 1 == 1 {
                rest[v] = false;
            }
        }
        count_components(adj, &rest) == 1
    })
}

fn star_rule(adj: &[Vec<usize>], set: &[bool], leg1: &[usize], b3_leg: Option<(usize, usize)>) -> bool {
    if let Some((first, third)) = b3_leg {
        if set[first] && set[third] {
            let others: Vec<usize> = (0..set.len()).filter(|&v| set[v] && v != first && v != third).collect();
            if others.iter().all(|v| leg1.contains(v)) && others.len() % 2 == 1 {
                return false;
            }
        }
    }
    count_components(adj, set) % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;
    use crate::shape::CanonicalShape;

    fn ps(list: &[&str]) -> Vec<PauliString> {
        let n = 6;
        list.iter().map(|s| parse_pauli(s, Some(n)).unwrap()).collect()
    }

    #[test]
    fn small_closures() {
        assert_eq!(lie_closure(&ps(&["X0", "Z0"]), DEFAULT_CAP).unwrap().len(), 3);
        assert_eq!(closure_dimension(&ps(&["X0", "X1"]), DEFAULT_CAP).unwrap(), ClosureDimension::Exact(2));
        let b1 = ps(&["Y0", "Z0", "Z0 Z1", "Y1"]);
        assert_eq!(closure_dimension(&b1, DEFAULT_CAP).unwrap(), ClosureDimension::Exact(10));
        assert_eq!(closure_dimension(&b1, 5).unwrap(), ClosureDimension::CapExceeded);
        let capped = lie_closure(&b1, 5).unwrap();
        assert!(capped.cap_hit && !capped.frontier_exhausted);
        assert_eq!(capped.len(), 5);
    }

    #[test]
    fn rules_and_schedules_agree() {
        let set = ps(&["Y0", "Z0 Y2", "Z0 Z1 Y2", "Y1", "Z1 Y2", "Y0 X2"]);
        let a = lie_closure_with(&set, DEFAULT_CAP, Exec::Sequential, ClosureRule::Generators).unwrap();
        let b = lie_closure_with(&set, DEFAULT_CAP, Exec::Parallel, ClosureRule::Generators).unwrap();
        let c = lie_closure_with(&set, DEFAULT_CAP, Exec::Sequential, ClosureRule::AllPairs).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.keys, c.keys);
        assert!(is_closed(&a));
        let mut rev = set.clone();
        rev.reverse();
        assert_eq!(lie_closure(&rev, DEFAULT_CAP).unwrap().keys, a.keys);
    }

    #[test]
    fn line_of_three_colourings() {
        let form = CanonicalForm { shape: CanonicalShape::line(3, 0), dependent: false };
        let cols = enumerate_valid_colourings(&form).unwrap();
        let mut sets: Vec<String> = cols.iter().map(|c| c.bits.to_string()).collect();
        sets.sort();
        assert_eq!(sets, vec!["001", "010", "011", "100", "110", "111"]);
    }

    #[test]
    fn b3_exception_is_excluded() {
        let form = CanonicalForm { shape: CanonicalShape::star(Family::B3, 1, 0), dependent: true };
        let gens = canonical_generators(&form).unwrap();
        let cols = enumerate_valid_colourings(&form).unwrap();
        // Z0 (leaf), Z0 Z2 (long leg start), Z2 (long leg end)
        let excluded = BitVector::from_indices(gens.len(), &[1, 4, 6]);
        assert!(!cols.iter().any(|c| c.bits == excluded));
        assert!(!cols.iter().any(|c| c.bits.is_zero()));
    }
}
