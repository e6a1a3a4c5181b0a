//! Canonical labelling and automorphism search for small coloured digraphs.
//!
//! Posets and bicoloured graphs both reduce to a [`ColouredDigraph`]. The
//! canonical form is the lexicographically smallest relabelled encoding over
//! the leaves of an individualisation-refinement search tree. Vertices whose
//! transposition is an automorphism are branched on only once.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Poset, VertexSet};

/// Largest vertex count accepted by the brute-force automorphism counter.
pub const MAX_BRUTEFORCE_VERTICES: usize = 12;

/// Digraph on `0..n` with an initial vertex colouring.
#[derive(Debug, Clone)]
pub struct ColouredDigraph {
    out: Vec<u64>,
    inc: Vec<u64>,
    colour: Vec<u32>,
}

/// Label-independent encoding: two inputs get equal forms iff isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    /// Initial colour of each vertex in canonical order.
    pub colours: Vec<u32>,
    /// Out-neighbourhood of each vertex in canonical order.
    pub rows: Vec<u64>,
}

impl ColouredDigraph {
    pub fn new(out: Vec<u64>, colour: Vec<u32>) -> Self {
        assert_eq!(out.len(), colour.len());
        let n = out.len();
        let mut inc = vec![0u64; n];
        for (v, &row) in out.iter().enumerate() {
            for w in VertexSet::from_bits(row).iter() {
                inc[w] |= 1 << v;
            }
        }
        ColouredDigraph { out, inc, colour }
    }

    pub fn from_poset(p: &Poset) -> Self {
        let out = (0..p.len()).map(|a| p.up(a).bits()).collect();
        Self::new(out, vec![0; p.len()])
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.out[a] >> b & 1 == 1
    }

    /// Replaces `colour` by the coarsest equitable refinement, ranked by
    /// signature so that the cell order is label independent.
    fn refine(&self, colour: &mut [u32]) {
        let n = self.len();
        let mut cells = count_distinct(colour);
        loop {
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
                .map(|v| {
                    let mut o: Vec<u32> =
                        VertexSet::from_bits(self.out[v]).iter().map(|w| colour[w]).collect();
                    let mut i: Vec<u32> =
                        VertexSet::from_bits(self.inc[v]).iter().map(|w| colour[w]).collect();
                    o.sort_unstable();
                    i.sort_unstable();
                    (colour[v], o, i)
                })
                .collect();
            let mut sorted: Vec<&(u32, Vec<u32>, Vec<u32>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            for v in 0..n {
                colour[v] = sorted.binary_search(&&sigs[v]).unwrap() as u32;
            }
            if sorted.len() == cells {
                return;
            }
            cells = sorted.len();
        }
    }

    fn initial_partition(&self) -> Vec<u32> {
        let mut distinct: Vec<u32> = self.colour.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let mut colour: Vec<u32> = self
            .colour
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() as u32)
            .collect();
        self.refine(&mut colour);
        colour
    }

    /// Whether swapping `a` and `b` (and fixing all else) is an automorphism.
    fn transposition_is_automorphism(&self, a: usize, b: usize) -> bool {
        if self.colour[a] != self.colour[b] {
            return false;
        }
        let swap = |v: usize| if v == a { b } else if v == b { a } else { v };
        (0..self.len()).all(|u| {
            (0..self.len()).all(|w| self.has_edge(u, w) == self.has_edge(swap(u), swap(w)))
        })
    }

    /// Representative (smallest member) of each vertex's twin class.
    fn twin_classes(&self) -> Vec<usize> {
        let n = self.len();
        let mut rep: Vec<usize> = (0..n).collect();
        for b in 0..n {
            for a in 0..b {
                if rep[a] == a && self.transposition_is_automorphism(a, b) {
                    rep[b] = a;
                    break;
                }
            }
        }
        rep
    }

    fn encode(&self, colour: &[u32]) -> CanonicalForm {
        let n = self.len();
        let mut order = vec![0usize; n];
        for (v, &c) in colour.iter().enumerate() {
            order[c as usize] = v;
        }
        let rows = order
            .iter()
            .map(|&v| {
                VertexSet::from_bits(self.out[v])
                    .iter()
                    .fold(0u64, |acc, w| acc | 1 << colour[w])
            })
            .collect();
        let colours = order.iter().map(|&v| self.colour[v]).collect();
        CanonicalForm { n, colours, rows }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let twins = self.twin_classes();
        let colour = self.initial_partition();
        let mut best: Option<CanonicalForm> = None;
        self.search(colour, &twins, &mut best);
        best.unwrap_or(CanonicalForm { n: 0, colours: Vec::new(), rows: Vec::new() })
    }

    fn search(&self, colour: Vec<u32>, twins: &[usize], best: &mut Option<CanonicalForm>) {
        let n = self.len();
        if count_distinct(&colour) == n {
            let form = self.encode(&colour);
            if best.as_ref().is_none_or(|b| form < *b) {
                *best = Some(form);
            }
            return;
        }
        // First non-singleton cell in cell order.
        let mut sizes = vec![0usize; n];
        for &c in &colour {
            sizes[c as usize] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).unwrap() as u32;
        let mut tried_classes: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colour[v] == target) {
            if tried_classes.contains(&twins[v]) {
                continue;
            }
            tried_classes.push(twins[v]);
            let mut next: Vec<u32> = colour
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
                .collect();
            self.refine(&mut next);
            self.search(next, twins, best);
        }
    }

    /// Counts colour-preserving automorphisms by backtracking, restricting
    /// each image to the vertex's cell of the equitable partition.
    pub fn count_automorphisms(&self) -> u64 {
        let colour = self.initial_partition();
        let mut image = vec![usize::MAX; self.len()];
        let mut used = 0u64;
        self.extend_automorphism(0, &colour, &mut image, &mut used)
    }

    fn extend_automorphism(
        &self,
        v: usize,
        colour: &[u32],
        image: &mut [usize],
        used: &mut u64,
    ) -> u64 {
        let n = self.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if *used >> w & 1 == 1 || colour[w] != colour[v] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.has_edge(u, v) == self.has_edge(image[u], w)
                    && self.has_edge(v, u) == self.has_edge(w, image[u])
            });
            if !consistent {
                continue;
            }
            image[v] = w;
            *used |= 1 << w;
            total += self.extend_automorphism(v + 1, colour, image, used);
            *used &= !(1 << w);
        }
        total
    }
}

fn count_distinct(colour: &[u32]) -> usize {
    let mut seen = colour.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Canonical encoding of a poset's isomorphism class.
pub fn canonical_form(p: &Poset) -> CanonicalForm {
    ColouredDigraph::from_poset(p).canonical_form()
}

/// `|Aut(P)|` by direct search; limited to [`MAX_BRUTEFORCE_VERTICES`].
pub fn aut_order_bruteforce(p: &Poset) -> Result<u64> {
    if p.len() > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::Size {
            what: "brute-force automorphism search",
            got: p.len(),
            max: MAX_BRUTEFORCE_VERTICES,
        });
    }
    Ok(ColouredDigraph::from_poset(p).count_automorphisms())
}

/// Rebuilds the poset whose canonical encoding is `form`.
pub fn poset_from_form(form: &CanonicalForm) -> Poset {
    Poset::from_closed_upsets(form.rows.iter().map(|&r| VertexSet::from_bits(r)).collect())
}
