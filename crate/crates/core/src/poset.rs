//! Finite posets stored as transitively closed bitset relations.
//!
//! Vertices are dense indices `0..n` with `n <= 64`. Each vertex carries its
//! strict upset and downset as a [`VertexSet`]; covers are derived on demand.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Poset`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, ..., n-1}` as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Neither set contains the other.
    pub fn is_incomparable(self, other: VertexSet) -> bool {
        !self.is_subset(other) && !other.is_subset(self)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An induced copy of a forbidden pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum PatternWitness {
    /// `chain[0] < chain[1] < chain[2]`, `isolated` incomparable to all three.
    ThreePlusOne { chain: [usize; 3], isolated: usize },
    /// Two 2-chains `lower < upper`, every cross pair incomparable.
    TwoPlusTwo { first: [usize; 2], second: [usize; 2] },
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternWitness::ThreePlusOne { chain, isolated } => write!(
                f,
                "{} < {} < {} with {} incomparable",
                chain[0], chain[1], chain[2], isolated
            ),
            PatternWitness::TwoPlusTwo { first, second } => write!(
                f,
                "{} < {} and {} < {} pairwise incomparable",
                first[0], first[1], second[0], second[1]
            ),
        }
    }
}

/// A finite strict partial order on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `up[a]` = strict upset of `a`.
    up: Vec<VertexSet>,
    /// `down[a]` = strict downset of `a`.
    down: Vec<VertexSet>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .finish()
    }
}

impl Poset {
    /// Transitive closure of `pairs` as a poset; `(a, b)` means `a < b`.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_VERTICES {
            return Err(Error::Size { what: "poset vertices", got: n, max: MAX_VERTICES });
        }
        let mut up = vec![VertexSet::EMPTY; n];
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::Index { index: v, n });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            up[a].insert(b);
        }
        // Warshall on rows: after step k every path through 0..=k is closed.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| up[a].contains(a)) {
            return Err(Error::Cycle(a));
        }
        Ok(Self::from_closed_upsets(up))
    }

    /// Builds from already transitively closed, acyclic upsets.
    pub(crate) fn from_closed_upsets(up: Vec<VertexSet>) -> Poset {
        let n = up.len();
        let mut down = vec![VertexSet::EMPTY; n];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        let p = Poset { n, up, down };
        debug_assert!(p.check_axioms());
        p
    }

    pub fn antichain(n: usize) -> Poset {
        Self::from_closed_upsets(vec![VertexSet::EMPTY; n])
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(n, &pairs).expect("chain is acyclic")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.comparable(a, b)
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::Index { index: a, n: self.n })
        }
    }

    pub fn downset(&self, a: usize) -> Result<VertexSet> {
        self.check_index(a)?;
        Ok(self.down[a])
    }

    pub fn upset(&self, a: usize) -> Result<VertexSet> {
        self.check_index(a)?;
        Ok(self.up[a])
    }

    /// Unchecked strict downset.
    pub fn down(&self, a: usize) -> VertexSet {
        self.down[a]
    }

    /// Unchecked strict upset.
    pub fn up(&self, a: usize) -> VertexSet {
        self.up[a]
    }

    /// Vertices comparable to `a`, plus `a` itself.
    pub fn closed_comparability(&self, a: usize) -> VertexSet {
        let mut s = self.up[a].union(self.down[a]);
        s.insert(a);
        s
    }

    /// Strict relation as `(a, b)` pairs with `a < b`, in row-major order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.up[a].iter().map(move |b| (a, b)))
            .collect()
    }

    /// Cover relations `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| {
                self.up[a]
                    .iter()
                    .filter(move |&b| self.up[a].intersection(self.down[b]).is_empty())
                    .map(move |b| (a, b))
            })
            .collect()
    }

    /// Irreflexive, antisymmetric and transitively closed.
    pub fn check_axioms(&self) -> bool {
        (0..self.n).all(|a| {
            !self.up[a].contains(a)
                && self.up[a].iter().all(|b| {
                    !self.up[b].contains(a)
                        && self.down[b].contains(a)
                        && self.up[b].is_subset(self.up[a])
                })
                && self.down[a].iter().all(|b| self.up[b].contains(a))
        })
    }

    /// The poset with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut up = vec![VertexSet::EMPTY; self.n];
        for a in 0..self.n {
            up[perm[a]] = self.up[a].iter().map(|b| perm[b]).collect();
        }
        Self::from_closed_upsets(up)
    }

    /// Subposet induced on `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Poset {
        let verts = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let up = verts
            .iter()
            .map(|&a| self.up[a].intersection(keep).iter().map(|b| index[b]).collect())
            .collect();
        Self::from_closed_upsets(up)
    }

    /// The dual order.
    pub fn dual(&self) -> Poset {
        Poset { n: self.n, up: self.down.clone(), down: self.up.clone() }
    }

    /// Some induced `(3+1)`, or `None` when the poset is (3+1)-free.
    pub fn find_3plus1(&self) -> Option<PatternWitness> {
        let all = self.vertices();
        for b in 0..self.n {
            for a in self.down[b].iter() {
                for c in self.up[b].iter() {
                    let seen = self
                        .closed_comparability(a)
                        .union(self.closed_comparability(b))
                        .union(self.closed_comparability(c));
                    if let Some(d) = all.difference(seen).min() {
                        return Some(PatternWitness::ThreePlusOne { chain: [a, b, c], isolated: d });
                    }
                }
            }
        }
        None
    }

    /// Some induced `(2+2)`, or `None` when the poset is (2+2)-free.
    pub fn find_2plus2(&self) -> Option<PatternWitness> {
        let all = self.vertices();
        for a in 0..self.n {
            for b in self.up[a].iter() {
                let free = all
                    .difference(self.closed_comparability(a))
                    .difference(self.closed_comparability(b));
                for c in free.iter() {
                    if let Some(d) = self.up[c].intersection(free).min() {
                        return Some(PatternWitness::TwoPlusTwo { first: [a, b], second: [c, d] });
                    }
                }
            }
        }
        None
    }

    pub fn is_31_free(&self) -> bool {
        self.find_3plus1().is_none()
    }

    pub fn is_22_free(&self) -> bool {
        self.find_2plus2().is_none()
    }

    /// Iterated minimal-vertex strata `L_1, L_2, ...`.
    pub fn levels(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while !remaining.is_empty() {
            let layer: VertexSet = remaining
                .iter()
                .filter(|&v| self.down[v].intersection(remaining).is_empty())
                .collect();
            remaining = remaining.difference(layer);
            out.push(layer);
        }
        out
    }

    /// 1-based level of every vertex.
    pub fn level_map(&self) -> Vec<u32> {
        let mut level = vec![0; self.n];
        for (i, layer) in self.levels().iter().enumerate() {
            for v in layer.iter() {
                level[v] = i as u32 + 1;
            }
        }
        level
    }
}
