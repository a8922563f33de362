//! Spider recognition and the canonical shapes.

use std::fmt;

use crate::gf2::BitVector;
use crate::graph::AntiCommutationGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B1,
    B2,
    B3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B1 => "B1",
            Family::B2 => "B2",
            Family::B3 => "B3",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B1" | "b1" => Ok(Family::B1),
            "B2" | "b2" => Ok(Family::B2),
            "B3" | "b3" => Ok(Family::B3),
            _ => Err(format!("unknown family {s:?} (expected A, B1, B2 or B3)")),
        }
    }
}

/// Parameters of a canonical graph.
///
/// Family A is a line of `n_l` vertices with `n_c` extra leaves on the
/// second vertex; `n_2` is 0. Star families have `n_c + 1` legs of length 1,
/// `n_2` legs of length 2 and at most one longer leg; `n_l` is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalShape {
    pub family: Family,
    pub n_l: usize,
    pub n_2: usize,
    pub n_c: usize,
}

impl CanonicalShape {
    pub fn line(n_l: usize, n_c: usize) -> Self {
        CanonicalShape { family: Family::A, n_l, n_2: 0, n_c }
    }

    pub fn star(family: Family, n_2: usize, n_c: usize) -> Self {
        debug_assert!(family != Family::A);
        CanonicalShape { family, n_l: 0, n_2, n_c }
    }

    pub fn n_vertices(&self) -> usize {
        match self.family {
            Family::A => self.n_l + self.n_c,
            Family::B1 => 1 + (self.n_c + 1) + 2 * self.n_2,
            Family::B2 => 1 + (self.n_c + 1) + 2 * self.n_2 + 4,
            Family::B3 => 1 + (self.n_c + 1) + 2 * self.n_2 + 3,
        }
    }

    /// Collapses the descriptions that name the same graph: `A(2, c>0)` is
    /// `A(3, c−1)` and `B1` with a single leg of length 2 is `A(4, c)`.
    pub fn normalized(self) -> Self {
        match self.family {
            Family::A if self.n_l == 2 && self.n_c > 0 => Self::line(3, self.n_c - 1),
            Family::B1 if self.n_2 == 1 => Self::line(4, self.n_c),
            _ => self,
        }
    }
}

impl fmt::Display for CanonicalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A(n_L={}, n_c={})", self.n_l, self.n_c),
            fam => write!(f, "{fam}(n_2={}, n_c={})", self.n_2, self.n_c),
        }
    }
}

/// A tree with at most one vertex of degree ≥ 3, seen as a center with legs.
///
/// Legs are listed by ascending first vertex and run outward from the
/// center. For a path the center is the neighbour of the lower-indexed end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spider {
    pub center: usize,
    pub legs: Vec<Vec<usize>>,
}

impl Spider {
    /// Recognizes the induced subgraph on `vertices` as a spider.
    pub fn recognize(graph: &AntiCommutationGraph, vertices: &[usize]) -> Option<Spider> {
        let n = vertices.len();
        if n == 0 {
            return None;
        }
        let mut mask = BitVector::zeros(graph.n_vertices());
        for &v in vertices {
            mask.set(v, true);
        }
        let nbrs = |v: usize| -> Vec<usize> { graph.row(v).and(&mask).iter_ones().collect() };
        let degrees: Vec<usize> = vertices.iter().map(|&v| graph.row(v).and(&mask).count_ones()).collect();
        if degrees.iter().sum::<usize>() != 2 * (n - 1) {
            return None;
        }
        if n == 1 {
            return Some(Spider { center: vertices[0], legs: Vec::new() });
        }
        let hubs: Vec<usize> = vertices.iter().zip(&degrees).filter(|(_, &d)| d >= 3).map(|(&v, _)| v).collect();
        let center = match hubs.len() {
            0 => {
                let end = vertices.iter().zip(&degrees).filter(|(_, &d)| d == 1).map(|(&v, _)| v).min()?;
                nbrs(end)[0]
            }
            1 => hubs[0],
            _ => return None,
        };
        let mut legs = Vec::new();
        for first in nbrs(center) {
            let mut leg = vec![first];
            let (mut prev, mut cur) = (center, first);
            loop {
                let next: Vec<usize> = nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                match next.len() {
                    0 => break,
                    1 => {
                        prev = cur;
                        cur = next[0];
                        leg.push(cur);
                    }
                    _ => return None,
                }
                if leg.len() > n {
                    return None;
                }
            }
            legs.push(leg);
        }
        if 1 + legs.iter().map(Vec::len).sum::<usize>() != n {
            return None;
        }
        Some(Spider { center, legs })
    }

    pub fn n_vertices(&self) -> usize {
        1 + self.legs.iter().map(Vec::len).sum::<usize>()
    }

    /// Vertices on legs of length 1, in leg order.
    pub fn leaves(&self) -> Vec<usize> {
        self.legs.iter().filter(|l| l.len() == 1).map(|l| l[0]).collect()
    }

    pub fn long_legs(&self) -> Vec<&Vec<usize>> {
        self.legs.iter().filter(|l| l.len() >= 2).collect()
    }

    pub fn leg_of(&self, v: usize) -> Option<(usize, usize)> {
        self.legs.iter().enumerate().find_map(|(i, l)| l.iter().position(|&w| w == v).map(|j| (i, j)))
    }

    /// Parameters if this spider is a canonical graph with ≥ 2 vertices.
    pub fn shape(&self) -> Option<CanonicalShape> {
        let n = self.n_vertices();
        if n < 2 {
            return None;
        }
        if n == 2 {
            return Some(CanonicalShape::line(2, 0));
        }
        let ones = self.legs.iter().filter(|l| l.len() == 1).count();
        let mut long: Vec<usize> = self.legs.iter().map(Vec::len).filter(|&l| l >= 2).collect();
        long.sort_unstable();
        if ones == 0 {
            return None;
        }
        match long.len() {
            0 => return Some(CanonicalShape::line(3, ones - 2)),
            1 => return Some(CanonicalShape::line(long[0] + 2, ones - 1)),
            _ => {}
        }
        let max = *long.last().unwrap();
        if max > 4 || long.iter().filter(|&&l| l >= 3).count() > 1 {
            return None;
        }
        let n_2 = long.iter().filter(|&&l| l == 2).count();
        let family = match max {
            2 => Family::B1,
            3 => Family::B3,
            _ => Family::B2,
        };
        Some(CanonicalShape::star(family, n_2, ones - 1))
    }

    /// Canonical vertex order: for lines the primary leaf, the center, the
    /// long leg, then the controls; for stars the center, the primary leaf,
    /// the legs of length 2 (inner first), the long leg, then the controls.
    pub fn canonical_order(&self) -> Vec<usize> {
        let leaves = self.leaves();
        let longs = self.long_legs();
        if self.n_vertices() <= 2 {
            let mut v: Vec<usize> = std::iter::once(self.center).chain(self.legs.iter().flatten().copied()).collect();
            v.sort_unstable();
            return v;
        }
        let mut out = Vec::with_capacity(self.n_vertices());
        if longs.len() <= 1 {
            out.push(leaves[0]);
            out.push(self.center);
            match longs.first() {
                Some(l) => out.extend(l.iter().copied()),
                None => out.push(leaves[1]),
            }
            let skip = if longs.is_empty() { 2 } else { 1 };
            out.extend(leaves.iter().skip(skip).copied());
        } else {
            out.push(self.center);
            out.push(leaves[0]);
            for l in longs.iter().filter(|l| l.len() == 2) {
                out.extend(l.iter().copied());
            }
            if let Some(l) = longs.iter().find(|l| l.len() > 2) {
                out.extend(l.iter().copied());
            }
            out.extend(leaves.iter().skip(1).copied());
        }
        out
    }
}

/// Parameters of `graph` if it is connected and exactly canonical.
pub fn classify_shape(graph: &AntiCommutationGraph) -> Option<CanonicalShape> {
    let all: Vec<usize> = (0..graph.n_vertices()).collect();
    Spider::recognize(graph, &all)?.shape()
}
