//! Anti-commutation graphs, contraction, and the lightning toggle calculus.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::pauli::PauliString;

/// Simple undirected graph on `0..n`; `labels[v]` names the generator that
/// vertex `v` came from.
#[derive(Clone, PartialEq, Eq)]
pub struct AntiCommutationGraph {
    adjacency: BitMatrix,
    labels: Vec<usize>,
}

impl AntiCommutationGraph {
    pub fn empty(n: usize) -> Self {
        AntiCommutationGraph { adjacency: BitMatrix::zeros(n, n), labels: (0..n).collect() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            assert!(a != b && a < n && b < n, "bad edge ({a}, {b})");
            g.adjacency.set(a, b, true);
            g.adjacency.set(b, a, true);
        }
        g
    }

    /// Wraps a symmetric zero-diagonal matrix.
    pub fn from_adjacency(adjacency: BitMatrix) -> Option<Self> {
        let n = adjacency.n_rows();
        if adjacency.n_cols() != n || adjacency != adjacency.transpose() || (0..n).any(|i| adjacency.get(i, i)) {
            return None;
        }
        Some(AntiCommutationGraph { adjacency, labels: (0..n).collect() })
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    #[inline]
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a, b)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &BitVector {
        self.adjacency.row(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.row(v).iter_ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency.row(v).count_ones()
    }

    pub fn n_edges(&self) -> usize {
        (0..self.n_vertices()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_vertices()).flat_map(|a| self.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    /// Induced subgraph on `vertices` (in the given order); labels are carried over.
    pub fn induced(&self, vertices: &[usize]) -> AntiCommutationGraph {
        let k = vertices.len();
        let mut adjacency = BitMatrix::zeros(k, k);
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.adjacent(a, b) {
                    adjacency.set(i, j, true);
                }
            }
        }
        AntiCommutationGraph { adjacency, labels: vertices.iter().map(|&v| self.labels[v]).collect() }
    }

    /// Components ordered by smallest vertex, each sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Adds row and column `source` into `target`, clearing the diagonal.
    fn add_row_col(&mut self, target: usize, source: usize) {
        let src = self.adjacency.row(source).clone();
        for v in src.iter_ones() {
            if v != target {
                self.adjacency.row_mut(v).flip(target);
            }
        }
        let mut row = self.adjacency.row(target).xor(&src);
        row.set(target, false);
        *self.adjacency.row_mut(target) = row;
    }
}

impl fmt::Debug for AntiCommutationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n_vertices(), self.edges())
    }
}

/// Anti-commutation graph of `paulis`: `i ~ j` iff `P_i`, `P_j` anticommute.
pub fn build_graph(paulis: &[PauliString]) -> Result<AntiCommutationGraph> {
    check_generators(paulis)?;
    let n = paulis.len();
    let mut adjacency = BitMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            if paulis[i].anticommutes_unchecked(&paulis[j]) {
                adjacency.set(i, j, true);
                adjacency.set(j, i, true);
            }
        }
    }
    Ok(AntiCommutationGraph { adjacency, labels: (0..n).collect() })
}

/// Paulis whose anti-commutation graph is `g`: `P_i = X_i · Π Z_j` over
/// neighbours `j < i`, one qubit per vertex.
pub fn realize_graph(g: &AntiCommutationGraph) -> Vec<PauliString> {
    let n = g.n_vertices();
    (0..n)
        .map(|i| {
            let mut x = BitVector::zeros(n);
            x.set(i, true);
            let mut z = BitVector::zeros(n);
            for j in g.neighbors(i).filter(|&j| j < i) {
                z.set(j, true);
            }
            PauliString::from_bits(x, z, 0).expect("equal widths")
        })
        .collect()
}

pub(crate) fn check_generators(paulis: &[PauliString]) -> Result<()> {
    if let Some(first) = paulis.first() {
        let n = first.n_qubits();
        for p in paulis {
            if p.n_qubits() != n {
                return Err(Error::WidthMismatch(n, p.n_qubits()));
            }
        }
    }
    if let Some(i) = paulis.iter().position(|p| p.is_identity()) {
        return Err(Error::Identity(i));
    }
    Ok(())
}

/// One contraction: `P_target ← sign · ½i[P_target, P_source]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractionRecord {
    pub target: usize,
    pub source: usize,
    pub sign: i8,
}

impl fmt::Display for ContractionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CONTRACT {} {} {}", self.target, self.source, if self.sign < 0 { "-1" } else { "+1" })
    }
}

/// `sign · ½i[p, q]` with the sign chosen so the phase exponent is 0 or 1.
fn contracted(p: &PauliString, q: &PauliString) -> Option<(PauliString, i8)> {
    let c = p.commutator(q).ok()??;
    if c.phase_exp() >= 2 {
        let ph = c.phase_exp() - 2;
        Some((c.with_phase(ph), -1))
    } else {
        Some((c, 1))
    }
}

/// A generator list together with its graph and contraction history.
#[derive(Clone, Debug)]
pub struct GeneratorSystem {
    initial: Vec<PauliString>,
    paulis: Vec<PauliString>,
    graph: AntiCommutationGraph,
    log: Vec<ContractionRecord>,
}

impl GeneratorSystem {
    pub fn new(paulis: Vec<PauliString>) -> Result<Self> {
        let graph = build_graph(&paulis)?;
        Ok(GeneratorSystem { initial: paulis.clone(), paulis, graph, log: Vec::new() })
    }

    /// Fresh system on the given vertices; labels keep the parent labels.
    pub fn subsystem(&self, vertices: &[usize]) -> GeneratorSystem {
        let paulis: Vec<PauliString> = vertices.iter().map(|&v| self.paulis[v].clone()).collect();
        GeneratorSystem {
            initial: paulis.clone(),
            paulis,
            graph: self.graph.induced(vertices),
            log: Vec::new(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.paulis.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.paulis.is_empty()
    }

    #[inline]
    pub fn paulis(&self) -> &[PauliString] {
        &self.paulis
    }

    #[inline]
    pub fn initial(&self) -> &[PauliString] {
        &self.initial
    }

    #[inline]
    pub fn graph(&self) -> &AntiCommutationGraph {
        &self.graph
    }

    #[inline]
    pub fn log(&self) -> &[ContractionRecord] {
        &self.log
    }

    /// Contracts `source` onto `target`.
    pub fn contract(&mut self, target: usize, source: usize) -> Result<()> {
        let n = self.len();
        if target >= n {
            return Err(Error::VertexOutOfRange(target));
        }
        if source >= n {
            return Err(Error::VertexOutOfRange(source));
        }
        if target == source || !self.graph.adjacent(target, source) {
            return Err(Error::NotAdjacent { target, from: source });
        }
        let (p, sign) = contracted(&self.paulis[target], &self.paulis[source])
            .ok_or_else(|| Error::defect("graph edge between commuting Paulis"))?;
        self.paulis[target] = p;
        self.graph.add_row_col(target, source);
        self.log.push(ContractionRecord { target, source, sign });
        #[cfg(debug_assertions)]
        if n <= 48 {
            debug_assert!(self.graph_is_consistent(), "incremental graph diverged after contraction");
        }
        Ok(())
    }

    pub fn graph_is_consistent(&self) -> bool {
        build_graph(&self.paulis).is_ok_and(|g| g.adjacency == self.graph.adjacency)
    }

    /// Replays `log` on `initial` and returns the resulting Paulis.
    pub fn replay(initial: &[PauliString], log: &[ContractionRecord]) -> Result<Vec<PauliString>> {
        let mut paulis = initial.to_vec();
        for r in log {
            if r.target >= paulis.len() || r.source >= paulis.len() {
                return Err(Error::VertexOutOfRange(r.target.max(r.source)));
            }
            let c = paulis[r.target]
                .commutator(&paulis[r.source])?
                .ok_or(Error::NotAdjacent { target: r.target, from: r.source })?;
            let c = if r.sign < 0 { let ph = c.phase_exp() + 2; c.with_phase(ph) } else { c };
            paulis[r.target] = c;
        }
        Ok(paulis)
    }

    pub fn replay_matches(&self) -> bool {
        Self::replay(&self.initial, &self.log).is_ok_and(|p| p == self.paulis)
    }
}

/// The graph seen from a pivot: every other vertex, lit iff adjacent to the pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lightning {
    base: AntiCommutationGraph,
    lit: BitVector,
    pivot: usize,
    vertices: Vec<usize>,
}

pub fn make_lightning(graph: &AntiCommutationGraph, pivot: usize) -> Result<Lightning> {
    let n = graph.n_vertices();
    if pivot >= n {
        return Err(Error::VertexOutOfRange(pivot));
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| v != pivot).collect();
    let lit = BitVector::from_bools(&vertices.iter().map(|&v| graph.adjacent(pivot, v)).collect::<Vec<_>>());
    let mut base = graph.induced(&vertices);
    base.labels = vertices.clone();
    Ok(Lightning { base, lit, pivot, vertices })
}

impl Lightning {
    #[inline]
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    #[inline]
    pub fn base(&self) -> &AntiCommutationGraph {
        &self.base
    }

    fn position(&self, v: usize) -> Result<usize> {
        if v == self.pivot || v > self.vertices.len() {
            return Err(Error::VertexOutOfRange(v));
        }
        Ok(if v < self.pivot { v } else { v - 1 })
    }

    /// Lit state of parent vertex `v`.
    pub fn is_lit(&self, v: usize) -> bool {
        self.position(v).is_ok_and(|i| self.lit.get(i))
    }

    /// Lit parent vertices in ascending order.
    pub fn lit_vertices(&self) -> Vec<usize> {
        self.lit.iter_ones().map(|i| self.vertices[i]).collect()
    }

    /// Toggles lit parent vertex `w`: every neighbour of `w` flips.
    pub fn toggle(&self, w: usize) -> Result<Lightning> {
        let i = self.position(w)?;
        if !self.lit.get(i) {
            return Err(Error::NotLit(w));
        }
        let mut out = self.clone();
        out.lit.xor_assign(self.base.row(i));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;

    fn ps(list: &[&str], n: usize) -> Vec<PauliString> {
        list.iter().map(|s| parse_pauli(s, Some(n)).unwrap()).collect()
    }

    #[test]
    fn build_graph_examples() {
        let g = build_graph(&ps(&["X0", "Z0"], 1)).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        let g = build_graph(&ps(&["X0", "X1"], 2)).unwrap();
        assert_eq!(g.n_edges(), 0);
        assert_eq!(build_graph(&ps(&["X0", "I"], 1)), Err(Error::Identity(1)));
        let mixed = vec![parse_pauli("X", None).unwrap(), parse_pauli("XX", None).unwrap()];
        assert_eq!(build_graph(&mixed), Err(Error::WidthMismatch(1, 2)));
    }

    #[test]
    fn two_component_example() {
        let set = ps(&["Z0", "X0", "Y1 X2", "X1 X3", "Z3", "Z1 X3 Z4", "X4"], 5);
        let g = build_graph(&set).unwrap();
        assert!(g.adjacent(2, 3));
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4, 5, 6]]);
    }

    #[test]
    fn contract_path_and_triangle() {
        // path a - b - c with Paulis Z0, X0, Z0 X1
        let mut s = GeneratorSystem::new(ps(&["Z0", "X0", "Z0 X1"], 2)).unwrap();
        s.contract(1, 2).unwrap();
        assert_eq!(s.graph().edges(), vec![(0, 1), (1, 2)]);
        assert!(s.graph_is_consistent());

        // triangle: X0, Z0, Y0
        let mut t = GeneratorSystem::new(ps(&["X0", "Z0", "Y0"], 1)).unwrap();
        t.contract(1, 2).unwrap();
        assert_eq!(t.graph().edges(), vec![(0, 2), (1, 2)]);
        assert!(t.graph_is_consistent());
        assert!(t.replay_matches());

        assert_eq!(
            GeneratorSystem::new(ps(&["X0", "X1"], 2)).unwrap().contract(0, 1),
            Err(Error::NotAdjacent { target: 0, from: 1 })
        );
    }

    #[test]
    fn double_contraction_restores_key() {
        let mut s = GeneratorSystem::new(ps(&["X1 X3", "Y1 X2"], 4)).unwrap();
        let before = s.paulis()[0].key();
        let g = s.graph().clone();
        s.contract(0, 1).unwrap();
        assert_eq!(s.paulis()[0].key(), parse_pauli("Z1 X2 X3", Some(4)).unwrap().key());
        s.contract(0, 1).unwrap();
        assert_eq!(s.paulis()[0].key(), before);
        assert_eq!(s.graph(), &g);
        assert_eq!(s.log().len(), 2);
        assert!(s.replay_matches());
    }

    #[test]
    fn lightning_toggle() {
        // star: center 0 with leaves 1, 2 and leg 3 - 4
        let g = AntiCommutationGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        let l = make_lightning(&g, 0).unwrap();
        assert_eq!(l.lit_vertices(), vec![1, 2, 3]);
        let t = l.toggle(3).unwrap();
        assert_eq!(t.lit_vertices(), vec![1, 2, 3, 4]);
        assert_eq!(t.toggle(3).unwrap(), l);
        assert_eq!(l.toggle(4), Err(Error::NotLit(4)));

        let iso = AntiCommutationGraph::from_edges(3, &[(1, 2)]);
        assert!(make_lightning(&iso, 0).unwrap().lit_vertices().is_empty());

        // leaf whose only neighbour is the center: toggling flips the center
        let g2 = AntiCommutationGraph::from_edges(4, &[(1, 2), (2, 3), (0, 1)]);
        let l2 = make_lightning(&g2, 0).unwrap();
        assert_eq!(l2.toggle(1).unwrap().lit_vertices(), vec![1, 2]);
    }

    #[test]
    fn record_format() {
        let r = ContractionRecord { target: 3, source: 1, sign: -1 };
        assert_eq!(r.to_string(), "CONTRACT 3 1 -1");
    }
}
