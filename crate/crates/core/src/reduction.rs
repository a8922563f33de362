//! Reduction of a connected generator system to a canonical graph.
//!
//! Vertices are inserted one at a time. Each new vertex `V` sees the
//! canonical part as a lightning; contracting canonical vertices onto `V`
//! (toggling) normalizes `V` to a single neighbour, after which local
//! rewrites restore canonicity. All multi-step rewrites are named toggle
//! templates over the roles of a star: center `O`, a leaf `W`, legs `L`
//! and `M`, and an extra center neighbour `P`.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{ContractionRecord, GeneratorSystem, Lightning};
use crate::shape::{CanonicalShape, Spider};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    O,
    W,
    P,
    L(u8),
    M(u8),
}

use Role::{L, M, O, P, W};

/// A fixed toggle sequence over star roles; all toggles act on one pivot.
#[derive(Clone, Copy, Debug)]
pub struct Template {
    pub name: &'static str,
    pub steps: &'static [Role],
}

/// Inverts L1 and M1 when both are unlit (reversed: both lit).
pub const EVEN_SWAP_SAME: Template = Template {
    name: "even-swap-same",
    steps: &[O, M(1), L(1), O, M(2), M(1), L(2), L(1)],
};

/// Inverts L1 (lit) and M1 (unlit) through a lit leaf W.
pub const EVEN_SWAP_MIXED: Template = Template {
    name: "even-swap-mixed",
    steps: &[L(1), L(2), W, O, L(1), M(1), O, M(2), M(1), W],
};

/// Pivot L5: moves the pivot off a leg longer than 4 so the leg is cut to length 4.
pub const LEG_SPLIT: Template = Template {
    name: "leg-split",
    steps: &[
        L(4), L(3), L(2), L(1), O, M(1), P, O, L(1), M(2), M(1), O, L(2), L(1),
        L(3), L(2), L(4), L(3), P, O, L(1), L(2), M(1), M(2), O, L(1), M(1), O,
    ],
};

/// Pivot L3 with L, M both of length 3; followed by an even swap and an O toggle.
pub const LEG3_MERGE: Template = Template {
    name: "leg3-merge",
    steps: &[L(2), L(1), O, M(1), M(2), M(3), W],
};

/// Pivot L3 with L, M both of length 4.
pub const LEG44_PAIR: Template = Template {
    name: "leg44-pair",
    steps: &[
        L(2), L(1), O, M(1), M(2), M(3), M(4), W, O, L(1),
        L(2), M(1), O, W, L(1), M(4), M(3), O, M(1), M(2),
    ],
};

/// Pivot L3 of the length-4 leg L, with M of length 3.
pub const LEG43_PAIR: Template = Template {
    name: "leg43-pair",
    steps: &[
        L(2), L(1), O, M(1), M(2), M(3), W, O, L(1), L(2),
        M(1), O, W, L(1), M(3), W, M(3), M(2), M(1), O,
    ],
};

pub const TEMPLATES: [Template; 6] = [EVEN_SWAP_SAME, EVEN_SWAP_MIXED, LEG_SPLIT, LEG3_MERGE, LEG44_PAIR, LEG43_PAIR];

/// Assignment of roles to vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Binding {
    pub o: Option<usize>,
    pub w: Option<usize>,
    pub p: Option<usize>,
    pub l: [Option<usize>; 5],
    pub m: [Option<usize>; 4],
}

impl Binding {
    pub fn new(o: usize) -> Self {
        Binding { o: Some(o), ..Default::default() }
    }

    pub fn w(mut self, w: usize) -> Self {
        self.w = Some(w);
        self
    }

    pub fn p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    pub fn l(mut self, leg: &[usize]) -> Self {
        for (slot, &v) in self.l.iter_mut().zip(leg) {
            *slot = Some(v);
        }
        self
    }

    pub fn m(mut self, leg: &[usize]) -> Self {
        for (slot, &v) in self.m.iter_mut().zip(leg) {
            *slot = Some(v);
        }
        self
    }

    fn swapped(mut self) -> Self {
        let (l, m) = (self.l, self.m);
        self.l = [m[0], m[1], m[2], m[3], None];
        self.m = [l[0], l[1], l[2], l[3]];
        self
    }

    pub fn get(&self, role: Role) -> Result<usize> {
        let v = match role {
            O => self.o,
            W => self.w,
            P => self.p,
            L(i) => self.l.get(usize::from(i).wrapping_sub(1)).copied().flatten(),
            M(i) => self.m.get(usize::from(i).wrapping_sub(1)).copied().flatten(),
        };
        v.ok_or_else(|| Error::defect(format!("template role {role:?} unbound")))
    }
}

impl Template {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex sequence under `binding`, optionally reversed.
    pub fn resolve(&self, binding: &Binding, reversed: bool) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = self.steps.iter().map(|&r| binding.get(r)).collect::<Result<_>>()?;
        if reversed {
            out.reverse();
        }
        Ok(out)
    }

    /// Replays the template on a lightning (no system involved).
    pub fn replay(&self, lightning: &Lightning, binding: &Binding, reversed: bool) -> Result<Lightning> {
        let mut cur = lightning.clone();
        for v in self.resolve(binding, reversed)? {
            cur = cur.toggle(v)?;
        }
        Ok(cur)
    }
}

/// Contraction budget for a component of `n` vertices.
pub fn contraction_budget(n: usize) -> usize {
    64 * n * n * n + 1024
}

/// Drives contractions on a system while counting them against a budget.
pub struct Reducer<'a> {
    sys: &'a mut GeneratorSystem,
    budget: usize,
    used: usize,
}

impl<'a> Reducer<'a> {
    pub fn new(sys: &'a mut GeneratorSystem, budget: usize) -> Self {
        Reducer { sys, budget, used: 0 }
    }

    pub fn system(&self) -> &GeneratorSystem {
        self.sys
    }

    pub fn contractions_used(&self) -> usize {
        self.used
    }

    fn contract(&mut self, target: usize, source: usize) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            return Err(Error::defect(format!("contraction budget of {} exceeded", self.budget)));
        }
        self.sys.contract(target, source).map_err(|e| match e {
            Error::NotAdjacent { target, from: source } => {
                Error::defect(format!("reduction toggled non-adjacent pair ({target}, {source})"))
            }
            other => other,
        })
    }

    fn toggle(&mut self, pivot: usize, w: usize) -> Result<()> {
        self.contract(pivot, w)
    }

    #[inline]
    fn is_lit(&self, pivot: usize, v: usize) -> bool {
        self.sys.graph().adjacent(pivot, v)
    }

    /// Lit vertices of `vertices` in ascending order.
    fn lit(&self, pivot: usize, vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.iter().copied().filter(|&v| self.is_lit(pivot, v)).collect();
        out.sort_unstable();
        out
    }

    fn spider(&self, vertices: &[usize]) -> Result<Spider> {
        Spider::recognize(self.sys.graph(), vertices)
            .ok_or_else(|| Error::defect("expected a spider during reduction"))
    }

    pub fn apply(&mut self, pivot: usize, template: &Template, binding: &Binding, reversed: bool) -> Result<()> {
        for v in template.resolve(binding, reversed)? {
            self.toggle(pivot, v)?;
        }
        Ok(())
    }

    /// Replaces `g` by `g·P·Q` for leaves `P`, `Q` by walking in to the center.
    fn shift(&mut self, g: usize, sp: &Spider, p: usize, q: usize) -> Result<()> {
        let seq: Vec<usize> = if g == sp.center {
            vec![p, q]
        } else {
            let (li, j) = sp.leg_of(g).ok_or_else(|| Error::defect("shift target off the spider"))?;
            let inner = &sp.legs[li][..j];
            inner.iter().rev().copied().chain([sp.center, p, q, sp.center]).chain(inner.iter().copied()).collect()
        };
        for s in seq {
            self.contract(g, s)?;
        }
        Ok(())
    }

    /// Inverts the lit states of `l[0]` and `m[0]` (and `l[2]` if present).
    pub fn even_leg_swap(
        &mut self,
        pivot: usize,
        center: usize,
        l: &[usize],
        m: &[usize],
        w: usize,
    ) -> Result<()> {
        if l.len() < 2 || m.len() < 2 {
            return Err(Error::defect("even_leg_swap needs legs of length at least 2"));
        }
        if !self.is_lit(pivot, center) || self.is_lit(pivot, l[1]) || self.is_lit(pivot, m[1]) {
            return Err(Error::defect("even_leg_swap precondition violated"));
        }
        let b = Binding::new(center).w(w).l(l).m(m);
        let (l1, m1) = (self.is_lit(pivot, l[0]), self.is_lit(pivot, m[0]));
        if l1 == m1 {
            return self.apply(pivot, &EVEN_SWAP_SAME, &b, l1);
        }
        // make L the lit leg
        let b = if l1 { b } else { b.swapped() };
        if self.is_lit(pivot, w) {
            self.apply(pivot, &EVEN_SWAP_MIXED, &b, false)
        } else {
            // toggling O swaps the lit states of L1 and M1
            self.toggle(pivot, center)?;
            self.apply(pivot, &EVEN_SWAP_MIXED, &b.swapped(), false)?;
            self.toggle(pivot, center)
        }
    }

    /// Toggles until exactly one vertex of the canonical part is lit.
    pub fn normalize(&mut self, pivot: usize, vertices: &[usize], force: bool) -> Result<()> {
        let lit = self.lit(pivot, vertices);
        if lit.is_empty() {
            return Err(Error::defect("pivot has no neighbour in the canonical part"));
        }
        if lit.len() == 1 && !force {
            return Ok(());
        }
        if vertices.len() <= 2 {
            if lit.len() == 2 {
                let first = *vertices.iter().min().unwrap();
                self.toggle(pivot, first)?;
            }
            return Ok(());
        }
        let sp = self.spider(vertices)?;
        let leaves = sp.leaves();
        let lit_leaves: Vec<usize> = leaves.iter().copied().filter(|&v| self.is_lit(pivot, v)).collect();
        if !lit_leaves.is_empty() && lit_leaves.len() < leaves.len() {
            let p = lit_leaves[0];
            let q = *leaves.iter().find(|&&v| !self.is_lit(pivot, v)).unwrap();
            for g in lit {
                if g != p {
                    self.shift(g, &sp, p, q)?;
                }
            }
            return Ok(());
        }
        let longs: Vec<Vec<usize>> = sp.long_legs().into_iter().cloned().collect();
        let w = leaves[0];
        if longs.len() <= 1 {
            let mut path = vec![None, Some(sp.center)];
            if let Some(l) = longs.first() {
                path.extend(l.iter().map(|&v| Some(v)));
            }
            return self.sweep(pivot, vertices, &path, &leaves);
        }
        let o = sp.center;
        if !self.is_lit(pivot, o) {
            if self.is_lit(pivot, w) {
                self.toggle(pivot, w)?;
            } else {
                let leg = longs
                    .iter()
                    .find(|l| l.iter().any(|&v| self.is_lit(pivot, v)))
                    .ok_or_else(|| Error::defect("no lit vertex on any long leg"))?;
                let i = leg.iter().position(|&v| self.is_lit(pivot, v)).unwrap();
                for k in (0..=i).rev() {
                    self.toggle(pivot, leg[k])?;
                }
            }
        }
        if !self.is_lit(pivot, w) {
            self.toggle(pivot, o)?;
        }
        for leg in &longs {
            if self.is_lit(pivot, leg[1]) {
                if !self.is_lit(pivot, leg[0]) {
                    self.toggle(pivot, leg[1])?;
                }
                self.toggle(pivot, leg[0])?;
                self.toggle(pivot, w)?;
            }
        }
        let main = longs.iter().position(|l| l.len() >= 3).unwrap_or(0);
        for (k, other) in longs.iter().enumerate() {
            if k != main && !self.is_lit(pivot, other[0]) {
                self.even_leg_swap(pivot, o, &longs[main], other, w)?;
            }
        }
        self.toggle(pivot, o)?;
        let path: Vec<Option<usize>> = std::iter::once(o).chain(longs[main].iter().copied()).map(Some).collect();
        self.sweep(pivot, vertices, &path, &leaves)
    }

    /// Repeatedly toggles the second-leftmost lit position of `path`; a
    /// `None` entry stands for the (uniformly lit) leaf group.
    fn sweep(&mut self, pivot: usize, vertices: &[usize], path: &[Option<usize>], leaves: &[usize]) -> Result<()> {
        loop {
            if self.lit(pivot, vertices).len() == 1 {
                return Ok(());
            }
            let lit_pos: Vec<usize> = path
                .iter()
                .enumerate()
                .filter(|(_, v)| match v {
                    None => self.is_lit(pivot, leaves[0]),
                    Some(v) => self.is_lit(pivot, *v),
                })
                .map(|(k, _)| k)
                .collect();
            match lit_pos.as_slice() {
                [0] if path[0].is_none() => self.toggle(pivot, leaves[0])?,
                [_, j, ..] => {
                    let v = path[*j].ok_or_else(|| Error::defect("sweep hit the leaf group"))?;
                    self.toggle(pivot, v)?;
                }
                _ => return Err(Error::defect("sweep left lit vertices off the path")),
            }
        }
    }

    /// Rewrites a star with one leaf until it is canonical.
    pub fn shorten(&mut self, vertices: &[usize]) -> Result<()> {
        loop {
            let sp = self.spider(vertices)?;
            if sp.shape().is_some() || sp.n_vertices() <= 2 {
                return Ok(());
            }
            let o = sp.center;
            let mut legs = sp.legs.clone();
            legs.sort_by_key(|l| (std::cmp::Reverse(l.len()), l[0]));
            let w = *sp.leaves().first().ok_or_else(|| Error::defect("star without a leaf"))?;
            if legs[0].len() > 4 {
                let (l, m) = (&legs[0], &legs[1]);
                let p = legs.get(2).map(|leg| leg[0]).ok_or_else(|| Error::defect("split needs a third leg"))?;
                self.apply(l[4], &LEG_SPLIT, &Binding::new(o).p(p).l(l).m(m), false)?;
                continue;
            }
            let threes: Vec<&Vec<usize>> = legs.iter().filter(|l| l.len() == 3).collect();
            let fours: Vec<&Vec<usize>> = legs.iter().filter(|l| l.len() == 4).collect();
            if threes.len() >= 2 {
                let (l, m) = (threes[0].clone(), threes[1].clone());
                let pivot = l[2];
                self.apply(pivot, &LEG3_MERGE, &Binding::new(o).w(w).l(&l).m(&m), false)?;
                self.even_leg_swap(pivot, o, &m, &l[..2], w)?;
                self.toggle(pivot, o)?;
                continue;
            }
            if let (Some(m), Some(l)) = (threes.first(), fours.first()) {
                let b = Binding::new(o).w(w).l(l).m(m);
                self.apply(l[2], &LEG43_PAIR, &b, false)?;
                continue;
            }
            if fours.len() >= 2 {
                let (l, m) = (fours[0].clone(), fours[1].clone());
                self.apply(l[2], &LEG44_PAIR, &Binding::new(o).w(w).l(&l).m(&m), false)?;
                self.contract(m[1], m[0])?;
                self.contract(o, m[1])?;
                self.apply(m[1], &EVEN_SWAP_SAME, &Binding::new(o).l(&l[2..]).m(&m[2..]), true)?;
                continue;
            }
            return Err(Error::defect("non-canonical star without a rewrite rule"));
        }
    }

    /// Moves an attachment at the interior vertex `leg[j]` to the center.
    fn relocate(&mut self, sp: &Spider, leg: &[usize], j: usize, v: usize) -> Result<()> {
        let pivot = leg[j + 1];
        let w = *sp.leaves().first().ok_or_else(|| Error::defect("relocation needs a leaf"))?;
        let inner: Vec<usize> = leg[..=j].iter().rev().copied().collect();
        let seq: Vec<usize> = inner.iter().copied().chain([sp.center, w, v]).chain(inner.iter().copied()).chain([sp.center]).collect();
        for s in seq {
            self.toggle(pivot, s)?;
        }
        Ok(())
    }

    /// Inserts `v` into the canonical part `vertices` and restores canonicity.
    fn insert(&mut self, vertices: &[usize], v: usize) -> Result<()> {
        let sp = self.spider(vertices)?;
        if vertices.len() > 1 && sp.shape().is_none() {
            return Err(Error::defect("canonical part lost canonicity"));
        }
        self.normalize(v, vertices, false)?;
        if vertices.len() >= 3 {
            let lit = self.lit(v, vertices);
            if lit.len() == 1 && sp.long_legs().len() >= 2 && sp.leaves() == lit {
                self.normalize(v, vertices, true)?;
            }
        }
        let lit = self.lit(v, vertices);
        if lit.len() != 1 {
            return Err(Error::defect(format!("normalization left {} lit vertices", lit.len())));
        }
        if vertices.len() >= 3 {
            if let Some((li, j)) = sp.leg_of(lit[0]) {
                let leg = sp.legs[li].clone();
                if j + 1 < leg.len() {
                    self.relocate(&sp, &leg, j, v)?;
                }
            }
        }
        let mut grown = vertices.to_vec();
        grown.push(v);
        self.shorten(&grown)
    }

    /// Reduces the connected vertex set `vertices`; returns the insertion order.
    pub fn reduce(&mut self, vertices: &[usize]) -> Result<Vec<usize>> {
        let Some(&start) = vertices.iter().min() else {
            return Err(Error::defect("empty component"));
        };
        let mut pending: Vec<usize> = vertices.iter().copied().filter(|&v| v != start).collect();
        pending.sort_unstable();
        let mut inserted = vec![start];
        while !pending.is_empty() {
            let pos = pending
                .iter()
                .position(|&c| inserted.iter().any(|&u| self.is_lit(c, u)))
                .ok_or_else(|| Error::defect("component is not connected"))?;
            let v = pending.remove(pos);
            self.insert(&inserted, v)?;
            inserted.push(v);
        }
        Ok(inserted)
    }
}

/// Reduces the connected component `vertices` of `sys` in place.
pub fn reduce_component(sys: &mut GeneratorSystem, vertices: &[usize]) -> Result<CanonicalShape> {
    if vertices.len() < 2 {
        return Err(Error::defect("reduction needs at least two vertices"));
    }
    let mut r = Reducer::new(sys, contraction_budget(vertices.len()));
    r.reduce(vertices)?;
    Spider::recognize(sys.graph(), vertices)
        .and_then(|s| s.shape())
        .ok_or_else(|| Error::defect("reduction ended on a non-canonical graph"))
}

/// Reduces a whole connected system to a canonical graph.
pub fn reduce_to_canonical(sys: &mut GeneratorSystem) -> Result<CanonicalShape> {
    let all: Vec<usize> = (0..sys.len()).collect();
    if all.len() < 2 {
        return Err(Error::InvalidForm("reduction needs at least two generators".into()));
    }
    if !sys.graph().is_connected() {
        return Err(Error::InvalidForm("reduction needs a connected graph".into()));
    }
    reduce_component(sys, &all)
}

/// Shortens a star (with at least one leaf) to a canonical star.
pub fn shorten_star(sys: &mut GeneratorSystem, vertices: &[usize]) -> Result<()> {
    let budget = contraction_budget(vertices.len());
    Reducer::new(sys, budget).shorten(vertices)
}

/// Normalizes the lightning at `pivot` over the canonical part `vertices`;
/// returns the contractions applied.
pub fn normalize_lightning(sys: &mut GeneratorSystem, pivot: usize, vertices: &[usize]) -> Result<Vec<ContractionRecord>> {
    let start = sys.log().len();
    let budget = contraction_budget(vertices.len() + 1);
    Reducer::new(sys, budget).normalize(pivot, vertices, false)?;
    Ok(sys.log()[start..].to_vec())
}

/// Result of stripping redundant generators from a canonical component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimized {
    pub vertices: Vec<usize>,
    pub removed: Vec<usize>,
}

fn symplectic_columns(sys: &GeneratorSystem, vertices: &[usize]) -> BitMatrix {
    let cols: Vec<BitVector> = vertices.iter().map(|&v| sys.paulis()[v].symplectic()).collect();
    let rows = 2 * sys.paulis().first().map_or(0, |p| p.n_qubits());
    BitMatrix::from_columns(rows, &cols)
}

/// Kernel of the generators' symplectic vectors, indexed like `vertices`.
pub fn dependence_kernel(sys: &GeneratorSystem, vertices: &[usize]) -> Vec<BitVector> {
    symplectic_columns(sys, vertices).kernel_basis()
}

/// Removes leg-1 generators that are products of other leg-1 generators,
/// then moves a dependence that involves several leaves onto a single leaf.
pub fn minimize_generators(sys: &mut GeneratorSystem, vertices: &[usize]) -> Result<Minimized> {
    let mut kept = vertices.to_vec();
    let mut removed = Vec::new();
    if kept.len() <= 2 {
        return Ok(Minimized { vertices: kept, removed });
    }
    let sp = Spider::recognize(sys.graph(), &kept).ok_or_else(|| Error::defect("minimize on non-spider"))?;
    let mut basis: Vec<(usize, BitVector)> = Vec::new();
    for leaf in sp.leaves() {
        let mut v = sys.paulis()[leaf].symplectic();
        for (piv, b) in &basis {
            if v.get(*piv) {
                v.xor_assign(b);
            }
        }
        match v.first_one() {
            Some(piv) => {
                for (_, b) in basis.iter_mut() {
                    if b.get(piv) {
                        b.xor_assign(&v);
                    }
                }
                basis.push((piv, v));
            }
            None => removed.push(leaf),
        }
    }
    kept.retain(|v| !removed.contains(v));

    let kernel = dependence_kernel(sys, &kept);
    if kernel.len() == 1 {
        let sp = Spider::recognize(sys.graph(), &kept).ok_or_else(|| Error::defect("minimize broke the spider"))?;
        let leaves: Vec<usize> = sp.leaves().into_iter().filter(|l| kernel[0].get(kept.iter().position(|v| v == l).unwrap())).collect();
        if leaves.len() >= 3 && leaves.len() % 2 == 1 {
            let mut r = Reducer::new(sys, contraction_budget(kept.len()));
            let (first, rest) = (leaves[0], &leaves[1..]);
            for _ in 0..2 {
                for &l in rest {
                    r.contract(sp.center, l)?;
                }
                r.contract(first, sp.center)?;
            }
        }
    }
    Ok(Minimized { vertices: kept, removed })
}
