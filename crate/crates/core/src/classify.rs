//! Classification of Pauli generator sets into the canonical families.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{ContractionRecord, GeneratorSystem};
use crate::par::{self, Exec};
use crate::pauli::{PauliKey, PauliString};
use crate::reduction::{dependence_kernel, minimize_generators, reduce_component};
use crate::shape::{CanonicalShape, Family, Spider};

/// Canonical shape plus the dependence flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub shape: CanonicalShape,
    pub dependent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DependenceClass {
    AI,
    AD,
    B1,
    B2,
    B3I,
    B3D,
}

impl fmt::Display for DependenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DependenceClass::AI => "A_I",
            DependenceClass::AD => "A_D",
            DependenceClass::B1 => "B1",
            DependenceClass::B2 => "B2",
            DependenceClass::B3I => "B3_I",
            DependenceClass::B3D => "B3_D",
        })
    }
}

impl CanonicalForm {
    pub fn new(shape: CanonicalShape, dependent: bool) -> Self {
        CanonicalForm { shape, dependent }
    }

    pub fn class(&self) -> DependenceClass {
        match (self.shape.family, self.dependent) {
            (Family::A, false) => DependenceClass::AI,
            (Family::A, true) => DependenceClass::AD,
            (Family::B1, _) => DependenceClass::B1,
            (Family::B2, _) => DependenceClass::B2,
            (Family::B3, false) => DependenceClass::B3I,
            (Family::B3, true) => DependenceClass::B3D,
        }
    }

    /// Whether the shape admits an algebraic dependence.
    pub fn admits_dependence(&self) -> bool {
        match self.shape.family {
            Family::A => self.shape.n_l % 2 == 1 && self.shape.n_l >= 3,
            Family::B3 => true,
            _ => false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let s = &self.shape;
        let bad = |msg: &str| Err(Error::InvalidForm(msg.to_string()));
        match s.family {
            Family::A => {
                if s.n_l < 2 {
                    return bad("n_L must be at least 2");
                }
                if s.n_2 != 0 {
                    return bad("family A has no legs of length 2");
                }
                if s.n_l == 2 && s.n_c > 0 {
                    return bad("controls need n_L >= 3");
                }
                if self.dependent && (s.n_l < 5 || s.n_l.is_multiple_of(2)) {
                    return bad("a dependent line needs odd n_L >= 5");
                }
            }
            fam => {
                if s.n_l != 0 {
                    return bad("star families have no n_L");
                }
                if s.n_2 == 0 {
                    return bad("star families need n_2 >= 1");
                }
                if fam == Family::B1 && s.n_2 == 1 {
                    return bad("B1 with n_2 = 1 is the line A(n_L=4)");
                }
                if self.dependent && fam != Family::B3 {
                    return bad("only B3 admits a dependence among stars");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.class(), self.shape)
    }
}

/// `block_count` copies of a simple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDescriptor {
    pub name: String,
    pub rank: BigUint,
    pub block_count: BigUint,
    pub block_dim: BigUint,
    pub total_dim: BigUint,
}

impl AlgebraDescriptor {
    /// A lone generator.
    pub fn u1() -> Self {
        AlgebraDescriptor {
            name: "u(1)-like block".into(),
            rank: BigUint::one(),
            block_count: BigUint::one(),
            block_dim: BigUint::one(),
            total_dim: BigUint::one(),
        }
    }

    /// Block dimension recomputed from the name and rank.
    pub fn is_consistent(&self) -> bool {
        let k = &self.rank;
        let one = BigUint::one();
        let expect = match self.name.split('(').next() {
            Some("so") => k * (k - &one) / 2u32,
            Some("sp") => k * (k * 2u32 + &one),
            Some("su") => k * k - &one,
            _ => one.clone(),
        };
        expect == self.block_dim && &self.block_dim * &self.block_count == self.total_dim
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block_count.is_one() {
            write!(f, "{} (dim {})", self.name, self.total_dim)
        } else {
            write!(f, "{} x {} (dim {})", self.block_count, self.name, self.total_dim)
        }
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn algebra_descriptor(form: &CanonicalForm) -> AlgebraDescriptor {
    let s = &form.shape;
    let one = BigUint::one();
    let (kind, rank, block_dim) = match s.family {
        Family::A => {
            let k = BigUint::from(s.n_l + 1);
            let d = BigUint::from(s.n_l * (s.n_l + 1) / 2);
            ("so", k, d)
        }
        Family::B1 => {
            let k = pow2(s.n_2);
            let d = &k * (pow2(s.n_2 + 1) + &one);
            ("sp", k, d)
        }
        Family::B2 => {
            let k = pow2(s.n_2 + 3);
            let d = pow2(s.n_2 + 2) * (&k - &one);
            ("so", k, d)
        }
        Family::B3 => {
            let k = pow2(s.n_2 + 2);
            let d = &k * &k - &one;
            ("su", k, d)
        }
    };
    let block_count = pow2(s.n_c);
    AlgebraDescriptor {
        name: format!("{kind}({rank})"),
        total_dim: &block_dim * &block_count,
        rank,
        block_count,
        block_dim,
    }
}

fn build(tokens: &[(char, usize)], n: usize) -> PauliString {
    let mut x = BitVector::zeros(n);
    let mut z = BitVector::zeros(n);
    for &(c, q) in tokens {
        match c {
            'X' => x.set(q, true),
            'Z' => z.set(q, true),
            _ => {
                x.set(q, true);
                z.set(q, true);
            }
        }
    }
    PauliString::from_bits(x, z, 0).expect("equal widths")
}

/// Element `k` of the nearest-neighbour chain Z0, X0, Z0X1, Z1, X1Z2, X2, …
fn chain(k: usize) -> Vec<(char, usize)> {
    match k {
        0 => vec![('Z', 0)],
        1 => vec![('X', 0)],
        _ => {
            let j = k / 2;
            let (a, b) = if j % 2 == 1 { ('Z', 'X') } else { ('X', 'Z') };
            if k.is_multiple_of(2) {
                vec![(a, j - 1), (b, j)]
            } else {
                vec![(a, j)]
            }
        }
    }
}

/// The canonical labeling of `form`, in canonical vertex order.
pub fn canonical_generators(form: &CanonicalForm) -> Result<Vec<PauliString>> {
    form.validate()?;
    let s = form.shape;
    let mut sets: Vec<Vec<(char, usize)>> = Vec::new();
    let mut dependent_tail: Option<Vec<usize>> = None;
    match s.family {
        Family::A => {
            let len = if form.dependent { s.n_l - 1 } else { s.n_l };
            sets.extend((0..len).map(chain));
            if form.dependent {
                dependent_tail = Some((0..s.n_l - 2).step_by(2).collect());
            }
            let width = sets.iter().flatten().map(|&(_, q)| q + 1).max().unwrap_or(1);
            sets.extend((0..s.n_c).map(|c| vec![('Z', 0), ('Z', width + c)]));
        }
        Family::B1 => {
            sets.push(vec![('Y', 0)]);
            sets.push(vec![('Z', 0)]);
            for i in 1..=s.n_2 {
                sets.push(vec![('Z', 0), ('Z', i)]);
                sets.push(vec![('Y', i)]);
            }
            sets.extend((0..s.n_c).map(|c| vec![('Z', 0), ('Z', s.n_2 + 1 + c)]));
        }
        Family::B3 if form.dependent => {
            sets.push(vec![('Y', 0)]);
            sets.push(vec![('Z', 0)]);
            for i in 1..=s.n_2 + 1 {
                sets.push(vec![('Z', 0), ('Z', i)]);
                sets.push(vec![('Y', i)]);
            }
            sets.push(vec![('Z', s.n_2 + 1)]);
            sets.extend((0..s.n_c).map(|c| vec![('Z', 0), ('Z', s.n_2 + 2 + c)]));
        }
        Family::B2 | Family::B3 => {
            let n = s.n_2 + 1;
            let y = n + 1;
            sets.push(vec![('Y', 0)]);
            sets.push(vec![('Z', 0), ('Y', y)]);
            for i in 1..n {
                sets.push(vec![('Z', 0), ('Z', i), ('Y', y)]);
                sets.push(vec![('Y', i)]);
            }
            sets.push(vec![('Z', 0), ('Z', n), ('Y', y)]);
            sets.push(vec![('Y', n)]);
            sets.push(vec![('Z', n), ('Y', y)]);
            if s.family == Family::B2 {
                sets.push(vec![('Y', 0), ('X', y)]);
            }
            sets.extend((0..s.n_c).map(|c| vec![('Z', 0), ('Z', n + 2 + c), ('Y', y)]));
        }
    }
    let width = sets.iter().flatten().map(|&(_, q)| q + 1).max().unwrap_or(1);
    let mut out: Vec<PauliString> = sets.iter().map(|t| build(t, width)).collect();
    if let Some(idx) = dependent_tail {
        let mut key = PauliString::identity(width).key();
        for i in idx {
            key = key.product(&out[i].key());
        }
        // the terminal vertex closes the line before the controls
        out.insert(s.n_l - 1, key.to_pauli());
    }
    Ok(out)
}

/// Minimal qubit count of a set with the same span and commutation relations:
/// `dim span − rank(commutation form on a basis) / 2`.
pub fn min_qubits(paulis: &[PauliString]) -> usize {
    if paulis.is_empty() {
        return 0;
    }
    let rows = 2 * paulis[0].n_qubits();
    let cols: Vec<BitVector> = paulis.iter().map(PauliString::symplectic).collect();
    let (_, pivots) = BitMatrix::from_columns(rows, &cols).row_reduce();
    let basis: Vec<PauliKey> = pivots.iter().map(|&j| paulis[j].key()).collect();
    let d = basis.len();
    let mut form = BitMatrix::zeros(d, d);
    for i in 0..d {
        for j in i + 1..d {
            if basis[i].anticommutes(&basis[j]) {
                form.set(i, j, true);
                form.set(j, i, true);
            }
        }
    }
    d - form.rank() / 2
}

/// Returns the dependent leaf if the single kernel vector of the canonical,
/// minimized component has the allowed alternating pattern.
pub fn detect_dependence(sys: &GeneratorSystem, vertices: &[usize]) -> Result<Option<usize>> {
    let kernel = dependence_kernel(sys, vertices);
    match kernel.len() {
        0 => return Ok(None),
        1 => {}
        k => return Err(Error::defect(format!("{k} independent dependences after minimization"))),
    }
    let sp = Spider::recognize(sys.graph(), vertices).ok_or_else(|| Error::defect("component is not a spider"))?;
    let shape = sp.shape().ok_or_else(|| Error::defect("component is not canonical"))?;
    let coloured: Vec<usize> = kernel[0].iter_ones().map(|i| vertices[i]).collect();
    let leaves = sp.leaves();
    let dep_leaves: Vec<usize> = coloured.iter().copied().filter(|v| leaves.contains(v)).collect();
    let leg = match shape.family {
        Family::A => sp.long_legs().into_iter().next(),
        Family::B3 => sp.legs.iter().find(|l| l.len() == 3),
        _ => None,
    };
    let ok = |leg: &Vec<usize>| {
        let mut expect: Vec<usize> = leg.iter().step_by(2).copied().chain(dep_leaves.iter().copied()).collect();
        let mut got = coloured.clone();
        expect.sort_unstable();
        got.sort_unstable();
        leg.len() % 2 == 1 && leg.len() >= 3 && expect == got
    };
    match leg {
        Some(l) if dep_leaves.len() == 1 && !coloured.contains(&sp.center) && ok(l) => Ok(Some(dep_leaves[0])),
        _ => Err(Error::defect(format!("dependence outside the allowed pattern on {shape}"))),
    }
}

/// Classification of one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    /// Input indices of the component's generators, ascending.
    pub generators: Vec<usize>,
    /// `None` for an isolated generator.
    pub form: Option<CanonicalForm>,
    pub algebra: AlgebraDescriptor,
    pub min_qubits: usize,
    /// Reduced generators in canonical vertex order.
    pub labels: Vec<PauliString>,
    /// Input index holding each label after the contractions.
    pub label_sources: Vec<usize>,
    /// Input indices dropped as redundant.
    pub removed: Vec<usize>,
    /// Contractions in input indices.
    pub log: Vec<ContractionRecord>,
    /// Center generators: the `n_c` leaf products, then the symmetry element.
    pub center: Vec<PauliString>,
    pub n_c: usize,
    pub n_s: usize,
}

impl ComponentReport {
    pub fn class(&self) -> Option<DependenceClass> {
        self.form.map(|f| f.class())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterData {
    pub per_component: Vec<(usize, usize)>,
    pub n_z_bar: usize,
    pub n_z: usize,
    /// Column `j` expresses center generator `j` over the independent ones.
    pub matrix: BitMatrix,
    /// All center generators in component order.
    pub generators: Vec<PauliString>,
    /// Indices into `generators` of the independent basis.
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n_qubits: usize,
    pub components: Vec<ComponentReport>,
    pub center: CenterData,
    pub total_dimension: BigUint,
}

impl Classification {
    /// Full `su(2^n)` on all qubits.
    pub fn is_universal(&self) -> bool {
        let full = (BigUint::one() << (2 * self.n_qubits)) - BigUint::one();
        self.components.len() == 1 && self.total_dimension == full
    }

    /// Half-open line ranges of each component's records in `trace_lines`.
    pub fn trace_ranges(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.components
            .iter()
            .map(|c| {
                let r = (start, start + c.log.len());
                start = r.1;
                r
            })
            .collect()
    }

    pub fn trace_lines(&self) -> Vec<String> {
        self.components.iter().flat_map(|c| c.log.iter().map(ToString::to_string)).collect()
    }

    /// Comparable summary used by the invariance checks.
    pub fn signature(&self) -> Vec<(Option<CanonicalForm>, usize)> {
        let mut sig: Vec<(Option<CanonicalForm>, usize)> =
            self.components.iter().map(|c| (c.form, c.generators.len() - c.removed.len())).collect();
        sig.sort();
        sig
    }
}

fn isolated(index: usize, p: &PauliString) -> ComponentReport {
    ComponentReport {
        generators: vec![index],
        form: None,
        algebra: AlgebraDescriptor::u1(),
        min_qubits: 1,
        labels: vec![p.clone()],
        label_sources: vec![index],
        removed: Vec::new(),
        log: Vec::new(),
        center: Vec::new(),
        n_c: 0,
        n_s: 0,
    }
}

fn product(ps: &[&PauliString]) -> PauliString {
    let mut key = PauliString::identity(ps[0].n_qubits()).key();
    for p in ps {
        key = key.product(&p.key());
    }
    key.to_pauli()
}

fn center_elements(form: &CanonicalForm, labels: &[PauliString]) -> (Vec<PauliString>, usize) {
    let s = form.shape;
    let n = labels.len();
    if n <= 2 {
        return (Vec::new(), 0);
    }
    let (primary, controls, tail): (usize, std::ops::Range<usize>, Vec<usize>) = match s.family {
        Family::A => (0, s.n_l..n, (2..s.n_l).step_by(2).collect()),
        fam => {
            let start = 2 + 2 * s.n_2;
            let tail = if fam == Family::B3 { vec![start, start + 2] } else { Vec::new() };
            (1, n - s.n_c..n, tail)
        }
    };
    let mut out: Vec<PauliString> = controls.map(|c| product(&[&labels[primary], &labels[c]])).collect();
    let mut n_s = 0;
    if form.admits_dependence() && !form.dependent {
        let mut parts: Vec<&PauliString> = tail.iter().map(|&i| &labels[i]).collect();
        parts.push(&labels[primary]);
        out.push(product(&parts));
        n_s = 1;
    }
    (out, n_s)
}

fn classify_component(parent: &GeneratorSystem, comp: &[usize]) -> Result<ComponentReport> {
    if comp.len() == 1 {
        return Ok(isolated(comp[0], &parent.paulis()[comp[0]]));
    }
    let mut sys = parent.subsystem(comp);
    let all: Vec<usize> = (0..comp.len()).collect();
    reduce_component(&mut sys, &all)?;
    let min = minimize_generators(&mut sys, &all)?;
    let dep_leaf = detect_dependence(&sys, &min.vertices)?;
    let mut sp = Spider::recognize(sys.graph(), &min.vertices).ok_or_else(|| Error::defect("minimized component is not a spider"))?;
    let shape = sp.shape().ok_or_else(|| Error::defect("minimized component is not canonical"))?;
    let form = CanonicalForm::new(shape, dep_leaf.is_some());
    if form.dependent && !form.admits_dependence() {
        return Err(Error::defect(format!("dependence on {shape}")));
    }
    if let Some(leaf) = dep_leaf {
        let pos = sp.legs.iter().position(|l| l == &vec![leaf]).expect("leaf leg");
        let leg = sp.legs.remove(pos);
        sp.legs.insert(0, leg);
    }
    let order = sp.canonical_order();
    let labels: Vec<PauliString> = order.iter().map(|&v| sys.paulis()[v].clone()).collect();
    let (center, n_s) = center_elements(&form, &labels);
    let log = sys
        .log()
        .iter()
        .map(|r| ContractionRecord { target: comp[r.target], source: comp[r.source], sign: r.sign })
        .collect();
    Ok(ComponentReport {
        generators: comp.to_vec(),
        form: Some(form),
        algebra: algebra_descriptor(&form),
        min_qubits: min_qubits(&labels),
        label_sources: order.iter().map(|&v| comp[v]).collect(),
        labels,
        removed: min.removed.iter().map(|&v| comp[v]).collect(),
        log,
        center,
        n_c: shape.n_c,
        n_s,
    })
}

/// Independent basis of the center generators and the matrix expressing
/// every generator over it.
pub fn compute_center(components: &[ComponentReport]) -> CenterData {
    let generators: Vec<PauliString> = components.iter().flat_map(|c| c.center.iter().cloned()).collect();
    let per_component = components.iter().map(|c| (c.n_c, c.n_s)).collect();
    let n_z_bar = generators.len();
    if n_z_bar == 0 {
        return CenterData { per_component, n_z_bar, n_z: 0, matrix: BitMatrix::zeros(0, 0), generators, basis: Vec::new() };
    }
    let rows = 2 * generators[0].n_qubits();
    let cols: Vec<BitVector> = generators.iter().map(PauliString::symplectic).collect();
    let (rref, pivots) = BitMatrix::from_columns(rows, &cols).row_reduce();
    let n_z = pivots.len();
    let mut matrix = BitMatrix::zeros(n_z, n_z_bar);
    for i in 0..n_z {
        for j in 0..n_z_bar {
            matrix.set(i, j, rref.get(i, j));
        }
    }
    CenterData { per_component, n_z_bar, n_z, matrix, generators, basis: pivots }
}

pub fn classify(paulis: &[PauliString]) -> Result<Classification> {
    classify_with(paulis, Exec::default())
}

/// Components are processed with `exec` and merged in component order.
pub fn classify_with(paulis: &[PauliString], exec: Exec) -> Result<Classification> {
    if paulis.is_empty() {
        return Err(Error::Empty);
    }
    let sys = GeneratorSystem::new(paulis.to_vec())?;
    let comps = sys.graph().connected_components();
    let reports = par::map(exec, &comps, |c| classify_component(&sys, c));
    let mut components: Vec<ComponentReport> = Vec::with_capacity(reports.len());
    let mut seen: HashMap<PauliKey, usize> = HashMap::new();
    for r in reports {
        let r = r?;
        if r.form.is_none() {
            let key = r.labels[0].key();
            if let Some(&at) = seen.get(&key) {
                components[at].generators.push(r.generators[0]);
                components[at].removed.push(r.generators[0]);
                continue;
            }
            seen.insert(key, components.len());
        }
        components.push(r);
    }
    let center = compute_center(&components);
    let total_dimension = components.iter().fold(BigUint::zero(), |acc, c| acc + &c.algebra.total_dim);
    Ok(Classification { n_qubits: paulis[0].n_qubits(), components, center, total_dimension })
}

pub fn is_universal(paulis: &[PauliString], n_qubits: usize) -> Result<bool> {
    let padded: Vec<PauliString> = paulis.iter().map(|p| p.resized(n_qubits.max(p.n_qubits()))).collect();
    Ok(classify(&padded)?.is_universal())
}

/// A generator whose addition promotes the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suggestion {
    pub pauli: PauliString,
    pub form: CanonicalForm,
    pub algebra: AlgebraDescriptor,
}

/// Promoting additions for a single-component classification, each checked
/// by classifying the canonical labels together with the addition.
pub fn extension_suggestions(c: &Classification) -> Result<Vec<Suggestion>> {
    let [comp] = c.components.as_slice() else {
        return Err(Error::InvalidForm("suggestions need a single component".into()));
    };
    let Some(form) = comp.form else {
        return Ok(Vec::new());
    };
    let labels = &comp.labels;
    let s = form.shape;
    let mut candidates: Vec<PauliString> = Vec::new();
    match (s.family, form.dependent) {
        (Family::A, false) => {
            if s.n_l >= 4 && s.n_l % 2 == 0 {
                let parts: Vec<&PauliString> = (0..s.n_l - 1).step_by(2).map(|i| &labels[i]).collect();
                candidates.push(product(&parts));
            }
            for t in 2..s.n_l.saturating_sub(2) {
                candidates.extend(attach_to(labels, t));
            }
        }
        (Family::B1, _) => candidates.push(product(&[&labels[1], &labels[2]])),
        _ => {}
    }
    let mut out: Vec<Suggestion> = Vec::new();
    for p in candidates {
        let mut set = labels.clone();
        set.push(p.clone());
        let Ok(r) = classify(&set) else { continue };
        let [rc] = r.components.as_slice() else { continue };
        let Some(f) = rc.form else { continue };
        let promoted = rc.algebra.total_dim > comp.algebra.total_dim;
        if promoted && !out.iter().any(|o| o.form == f) {
            out.push(Suggestion { pauli: p, form: f, algebra: rc.algebra.clone() });
        }
    }
    Ok(out)
}

/// A Pauli anticommuting with `labels[t]` only, outside the span of `labels`.
fn attach_to(labels: &[PauliString], t: usize) -> Option<PauliString> {
    let n = labels[0].n_qubits();
    // rows: ⟨s, g_i⟩ = s_x·g_z + s_z·g_x, augmented with δ_{i,t}
    let rows: Vec<BitVector> = labels
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut r = g.z_bits().concat(g.x_bits()).resized(2 * n + 1);
            r.set(2 * n, i == t);
            r
        })
        .collect();
    let (rref, pivots) = BitMatrix::from_rows(2 * n + 1, rows).row_reduce();
    if pivots.contains(&(2 * n)) {
        return None;
    }
    let mut s = BitVector::zeros(2 * n);
    for (i, &p) in pivots.iter().enumerate() {
        s.set(p, rref.get(i, 2 * n));
    }
    let x = BitVector::from_bools(&(0..n).map(|q| s.get(q)).collect::<Vec<_>>());
    let z = BitVector::from_bools(&(0..n).map(|q| s.get(n + q)).collect::<Vec<_>>());
    let p = PauliString::from_bits(x, z, 0).ok()?;
    (!p.is_identity()).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{closure_dimension, ClosureDimension, DEFAULT_CAP};
    use crate::graph::build_graph;
    use crate::pauli::{parse_pauli, Style};

    fn ps(list: &[&str]) -> Vec<PauliString> {
        let n = list.iter().map(|s| parse_pauli(s, None).unwrap().n_qubits()).max().unwrap();
        list.iter().map(|s| parse_pauli(s, Some(n)).unwrap()).collect()
    }

    fn texts(v: &[PauliString]) -> Vec<String> {
        v.iter().map(|p| p.to_text(Style::Sparse)).collect()
    }

    fn form(family: Family, n: usize, n_c: usize, dependent: bool) -> CanonicalForm {
        let shape = if family == Family::A { CanonicalShape::line(n, n_c) } else { CanonicalShape::star(family, n, n_c) };
        CanonicalForm::new(shape, dependent)
    }

    #[test]
    fn labelings() {
        assert_eq!(texts(&canonical_generators(&form(Family::A, 4, 0, false)).unwrap()), ["Z0", "X0", "Z0 X1", "Z1"]);
        assert_eq!(
            texts(&canonical_generators(&form(Family::B1, 2, 0, false)).unwrap()),
            ["Y0", "Z0", "Z0 Z1", "Y1", "Z0 Z2", "Y2"]
        );
        assert_eq!(texts(&canonical_generators(&form(Family::A, 5, 0, true)).unwrap()), ["Z0", "X0", "Z0 X1", "Z1", "X1"]);
        assert_eq!(
            texts(&canonical_generators(&form(Family::A, 3, 2, false)).unwrap()),
            ["Z0", "X0", "Z0 X1", "Z0 Z2", "Z0 Z3"]
        );
        assert!(canonical_generators(&form(Family::B1, 2, 0, true)).is_err());
        assert!(canonical_generators(&form(Family::A, 4, 0, true)).is_err());
        assert!(canonical_generators(&form(Family::A, 3, 0, true)).is_err());
    }

    #[test]
    fn descriptor_table() {
        let a7 = algebra_descriptor(&form(Family::A, 7, 0, false));
        assert_eq!((a7.name.as_str(), a7.total_dim.clone()), ("so(8)", BigUint::from(28u32)));
        let b3 = algebra_descriptor(&form(Family::B3, 1, 0, true));
        assert_eq!((b3.name.as_str(), b3.total_dim.clone()), ("su(8)", BigUint::from(63u32)));
        let b2 = algebra_descriptor(&form(Family::B2, 1, 0, false));
        assert_eq!((b2.name.as_str(), b2.total_dim.clone()), ("so(16)", BigUint::from(120u32)));
        let b1 = algebra_descriptor(&form(Family::B1, 2, 2, false));
        assert_eq!(b1.block_count, BigUint::from(4u32));
        assert_eq!(b1.block_dim, BigUint::from(36u32));
        for d in [a7, b3, b2, b1, AlgebraDescriptor::u1()] {
            assert!(d.is_consistent(), "{d}");
        }
        let huge = algebra_descriptor(&form(Family::B3, 200, 0, false));
        assert!(huge.is_consistent());
    }

    #[test]
    fn qubit_counts() {
        assert_eq!(min_qubits(&ps(&["X0", "Z0"])), 1);
        assert_eq!(min_qubits(&ps(&["Z0", "X0", "Z0 X1"])), 2);
        assert_eq!(min_qubits(&ps(&["Y0", "Z0", "Z0 Z1", "Y1"])), 2);
    }

    #[test]
    fn small_classifications() {
        let c = classify(&ps(&["X0", "Z0"])).unwrap();
        assert_eq!(c.components.len(), 1);
        assert_eq!(c.components[0].form, Some(form(Family::A, 2, 0, false)));
        assert_eq!(c.total_dimension, BigUint::from(3u32));
        assert!(c.is_universal());

        // B1 with a single leg of length 2 is the line of four
        let c = classify(&ps(&["Y0", "Z0", "Z0 Z1", "Y1"])).unwrap();
        assert_eq!(c.components[0].form, Some(form(Family::A, 4, 0, false)));
        assert_eq!(c.total_dimension, BigUint::from(10u32));

        let gens = canonical_generators(&form(Family::A, 4, 2, false)).unwrap();
        let c = classify(&gens).unwrap();
        assert_eq!(c.components[0].algebra.block_count, BigUint::from(4u32));
        assert_eq!(c.center.n_z, 2);

        assert!(!is_universal(&ps(&["X0", "Z0", "X1", "Z1"]), 2).unwrap());
        assert!(is_universal(&canonical_generators(&form(Family::B3, 1, 0, true)).unwrap(), 3).unwrap());
        assert_eq!(classify(&[]).unwrap_err(), Error::Empty);
        assert!(matches!(classify(&ps(&["X0", "I"])), Err(Error::Identity(1))));
    }

    #[test]
    fn dependence_detection() {
        let maj = ps(&["X0", "Y0", "Z0 X1", "Z0 Y1", "Z0 Z1"]);
        let c = classify(&maj).unwrap();
        assert_eq!(c.components[0].class(), Some(DependenceClass::AD));
        assert_eq!(c.total_dimension, BigUint::from(15u32));
        let b3 = canonical_generators(&form(Family::B3, 1, 0, true)).unwrap();
        assert_eq!(classify(&b3).unwrap().components[0].class(), Some(DependenceClass::B3D));
        let chain = ps(&["Z0", "X0", "Z0 X1", "Z1", "X1 Z2", "X2"]);
        assert_eq!(classify(&chain).unwrap().components[0].class(), Some(DependenceClass::AI));
    }

    #[test]
    fn round_trip_grid_matches_oracle() {
        let mut forms = Vec::new();
        for n_c in 0..=2 {
            for n_l in 2..=8 {
                if n_l == 2 && n_c > 0 {
                    continue;
                }
                forms.push(form(Family::A, n_l, n_c, false));
                if n_l >= 5 && n_l % 2 == 1 {
                    forms.push(form(Family::A, n_l, n_c, true));
                }
            }
            for n_2 in 1..=2 {
                if n_2 > 1 {
                    forms.push(form(Family::B1, n_2, n_c, false));
                }
                forms.push(form(Family::B2, n_2, n_c, false));
                forms.push(form(Family::B3, n_2, n_c, false));
                forms.push(form(Family::B3, n_2, n_c, true));
            }
        }
        for f in forms {
            let gens = canonical_generators(&f).unwrap();
            let g = build_graph(&gens).unwrap();
            let sp = Spider::recognize(&g, &(0..gens.len()).collect::<Vec<_>>()).unwrap();
            assert_eq!(sp.shape(), Some(f.shape), "{f}");
            let c = classify(&gens).unwrap();
            assert_eq!(c.components.len(), 1, "{f}");
            assert_eq!(c.components[0].form, Some(f), "{f}");
            let small = f.shape.n_c == 0 || gens[0].n_qubits() <= 6;
            if small {
                let dim = closure_dimension(&gens, DEFAULT_CAP).unwrap();
                assert_eq!(dim, ClosureDimension::Exact(c.total_dimension.clone().try_into().unwrap()), "{f}");
            }
        }
    }

    #[test]
    fn center_matrix_columns_multiply_out() {
        // two blocks whose leaf products coincide
        let gens = ps(&["X0", "Z0", "Z0 Z1", "X2", "Z2", "Z2 Z1"]);
        let c = classify(&gens).unwrap();
        let z = &c.center;
        assert!(z.n_z <= z.n_z_bar);
        for j in 0..z.n_z_bar {
            let parts: Vec<&PauliString> = (0..z.n_z).filter(|&i| z.matrix.get(i, j)).map(|i| &z.generators[z.basis[i]]).collect();
            assert_eq!(product(&parts).key(), z.generators[j].key());
        }
    }

    #[test]
    fn suggestions_promote() {
        let line4 = classify(&canonical_generators(&form(Family::A, 4, 0, false)).unwrap()).unwrap();
        let s = extension_suggestions(&line4).unwrap();
        assert!(!s.is_empty());
        assert!(s.iter().any(|x| x.form == form(Family::A, 5, 0, true)));
        let b3 = classify(&canonical_generators(&form(Family::B3, 1, 0, true)).unwrap()).unwrap();
        assert!(extension_suggestions(&b3).unwrap().is_empty());
        let b1 = classify(&canonical_generators(&form(Family::B1, 2, 0, false)).unwrap()).unwrap();
        assert!(extension_suggestions(&b1).unwrap().iter().any(|x| x.form == form(Family::B3, 1, 0, true)));
    }
}
