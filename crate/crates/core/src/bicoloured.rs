//! Bipartite graphs with an ordered bipartition (tops, bottoms).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::canon::{CanonicalForm, ColouredDigraph};
use crate::poset::{Poset, VertexSet};

/// `adj[a]` holds the bottoms adjacent to top `a`; as a poset, bottom `b`
/// lies below top `a` exactly when they are adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicolouredGraph {
    p: usize,
    q: usize,
    adj: Vec<u64>,
}

fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::one(), |acc, i| acc * i)
}

impl BicolouredGraph {
    pub fn new(p: usize, q: usize, adj: Vec<u64>) -> Self {
        assert_eq!(adj.len(), p, "one adjacency row per top vertex");
        assert!(p + q <= 64);
        let mask = VertexSet::full(q).bits();
        assert!(adj.iter().all(|&r| r & !mask == 0), "adjacency row out of range");
        BicolouredGraph { p, q, adj }
    }

    pub fn from_edges(p: usize, q: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u64; p];
        for &(a, b) in edges {
            adj[a] |= 1 << b;
        }
        Self::new(p, q, adj)
    }

    /// The tangle `(top, bottom)` of `poset` as a graph; tops and bottoms
    /// are numbered in increasing vertex order.
    pub fn from_parts(poset: &Poset, top: VertexSet, bottom: VertexSet) -> Self {
        let bottoms = bottom.to_vec();
        let adj = top
            .iter()
            .map(|a| {
                bottoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| poset.lt(b, a))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Self::new(top.len(), bottom.len(), adj)
    }

    pub fn tops(&self) -> usize {
        self.p
    }

    pub fn bottoms(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.p + self.q
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn adjacent(&self, top: usize, bottom: usize) -> bool {
        self.adj[top] >> bottom & 1 == 1
    }

    pub fn row(&self, top: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[top])
    }

    /// Tops adjacent to `bottom`.
    pub fn column(&self, bottom: usize) -> VertexSet {
        (0..self.p).filter(|&a| self.adjacent(a, bottom)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.p)
            .flat_map(|a| self.row(a).iter().map(move |b| (a, b)))
            .collect()
    }

    /// Height-two poset: bottoms are `0..q`, tops are `q..q+p`.
    pub fn to_poset(&self) -> Poset {
        let mut up = vec![VertexSet::EMPTY; self.len()];
        for a in 0..self.p {
            for b in self.row(a).iter() {
                up[b].insert(self.q + a);
            }
        }
        Poset::from_closed_upsets(up)
    }

    fn digraph(&self) -> ColouredDigraph {
        let mut out = vec![0u64; self.len()];
        for a in 0..self.p {
            for b in self.row(a).iter() {
                out[b] |= 1 << (self.q + a);
            }
        }
        let colour = (0..self.len()).map(|v| u32::from(v >= self.q)).collect();
        ColouredDigraph::new(out, colour)
    }

    /// Encoding invariant under colour-preserving relabelling.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.digraph().canonical_form()
    }

    /// The representative of this graph's class obtained from its canonical
    /// form; equal for all colour-preserving relabellings.
    pub fn canonical(&self) -> BicolouredGraph {
        let form = self.canonical_form();
        // Bottoms (colour 0) occupy the first q canonical slots.
        let adj = (0..self.p)
            .map(|a| {
                (0..self.q)
                    .filter(|&b| form.rows[b] >> (self.q + a) & 1 == 1)
                    .fold(0u64, |acc, b| acc | 1 << b)
            })
            .collect();
        BicolouredGraph::new(self.p, self.q, adj)
    }

    /// Whether `(tops, bottoms)` forms a single tangle: both sides have at
    /// least two vertices, tops are connected under incomparability of their
    /// neighbourhoods, and bottoms likewise.
    pub fn is_tangle(&self) -> bool {
        if self.p < 2 || self.q < 2 {
            return false;
        }
        let rows: Vec<VertexSet> = (0..self.p).map(|a| self.row(a)).collect();
        let cols: Vec<VertexSet> = (0..self.q).map(|b| self.column(b)).collect();
        incomparability_connected(&rows) && incomparability_connected(&cols)
    }

    /// Number of colour-preserving automorphisms.
    ///
    /// Twin tops (equal rows) and twin bottoms (equal columns) contribute
    /// factorials; the remaining count is a search over permutations of the
    /// distinct rows, each of which forces the map on distinct columns.
    pub fn automorphism_count(&self) -> BigUint {
        let mut top_classes: BTreeMap<u64, usize> = BTreeMap::new();
        for &r in &self.adj {
            *top_classes.entry(r).or_default() += 1;
        }
        let mut bottom_classes: BTreeMap<u64, usize> = BTreeMap::new();
        for b in 0..self.q {
            *bottom_classes.entry(self.column(b).bits()).or_default() += 1;
        }
        let twins = top_classes
            .values()
            .chain(bottom_classes.values())
            .fold(BigUint::one(), |acc, &m| acc * factorial(m));

        let rows: Vec<(u64, usize)> = top_classes.into_iter().collect();
        // Representative bottom of each bottom class, with its weight.
        let reps: Vec<(usize, usize)> = {
            let mut seen: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
            for b in 0..self.q {
                seen.entry(self.column(b).bits()).or_insert((b, 0)).1 += 1;
            }
            seen.into_values().collect()
        };
        // Reduced incidence: class i adjacent to bottom class j.
        let incid: Vec<Vec<bool>> = rows
            .iter()
            .map(|&(r, _)| reps.iter().map(|&(b, _)| r >> b & 1 == 1).collect())
            .collect();
        let mut sigma = vec![usize::MAX; rows.len()];
        let mut used = vec![false; rows.len()];
        let reduced = count_row_maps(0, &rows, &reps, &incid, &mut sigma, &mut used);
        twins * reduced
    }

    pub fn transpose(&self) -> BicolouredGraph {
        let adj = (0..self.q).map(|b| self.column(b).bits()).collect();
        BicolouredGraph::new(self.q, self.p, adj)
    }
}

fn count_row_maps(
    i: usize,
    rows: &[(u64, usize)],
    reps: &[(usize, usize)],
    incid: &[Vec<bool>],
    sigma: &mut [usize],
    used: &mut [bool],
) -> u64 {
    let k = rows.len();
    if i == k {
        // Column j must go to the class whose column is sigma(column j).
        let image_col = |j: usize| -> Vec<bool> {
            let mut col = vec![false; k];
            for r in 0..k {
                if incid[r][j] {
                    col[sigma[r]] = true;
                }
            }
            col
        };
        let col_of = |j: usize| -> Vec<bool> { (0..k).map(|r| incid[r][j]).collect() };
        let mut hit = vec![false; reps.len()];
        for j in 0..reps.len() {
            let target = image_col(j);
            match (0..reps.len()).find(|&t| col_of(t) == target) {
                Some(t) if !hit[t] && reps[t].1 == reps[j].1 => hit[t] = true,
                _ => return 0,
            }
        }
        return 1;
    }
    let degree = |r: usize| -> usize {
        incid[r].iter().zip(reps).filter(|(&e, _)| e).map(|(_, &(_, w))| w).sum()
    };
    let mut total = 0;
    for t in 0..k {
        if used[t] || rows[t].1 != rows[i].1 || degree(t) != degree(i) {
            continue;
        }
        sigma[i] = t;
        used[t] = true;
        total += count_row_maps(i + 1, rows, reps, incid, sigma, used);
        used[t] = false;
    }
    total
}

/// Whether the sets form one component under pairwise incomparability.
fn incomparability_connected(sets: &[VertexSet]) -> bool {
    let n = sets.len();
    if n == 0 {
        return true;
    }
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !reached[j] && sets[i].is_incomparable(sets[j]) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}
