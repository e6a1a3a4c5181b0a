//! Brute-force enumeration of all unlabelled posets.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, poset_from_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::poset::{Poset, VertexSet};

use super::size_cap;

pub const MAX_ORACLE_VERTICES: usize = 7;
/// Reachable with `allow_eight`; a few million natural labellings.
pub const MAX_ORACLE_VERTICES_EXTENDED: usize = 8;

/// All posets on `n` unlabelled vertices, sorted by canonical form.
///
/// Vertex `k` is added with a down-closed subset of `0..k` as its strict
/// downset, which produces every naturally labelled poset once.
pub fn enumerate_posets_oracle(n: usize, allow_eight: bool) -> Result<Vec<Poset>> {
    let default = if allow_eight { MAX_ORACLE_VERTICES_EXTENDED } else { MAX_ORACLE_VERTICES };
    let max = size_cap(default);
    if n > max {
        return Err(Error::Size { what: "poset oracle", got: n, max });
    }
    if n == 0 {
        return Ok(vec![Poset::antichain(0)]);
    }
    // Split the search on the downsets of the first two vertices.
    let seeds: Vec<Vec<VertexSet>> = if n == 1 {
        vec![vec![VertexSet::EMPTY]]
    } else {
        vec![
            vec![VertexSet::EMPTY, VertexSet::EMPTY],
            vec![VertexSet::EMPTY, VertexSet::singleton(0)],
        ]
    };
    let found: BTreeMap<CanonicalForm, ()> = seeds
        .into_par_iter()
        .flat_map_iter(|seed| {
            let mut out = BTreeMap::new();
            let mut downs = seed;
            grow(n, &mut downs, &mut out);
            out.into_iter()
        })
        .collect();
    Ok(found.keys().map(poset_from_form).collect())
}

fn grow(n: usize, downs: &mut Vec<VertexSet>, out: &mut BTreeMap<CanonicalForm, ()>) {
    let k = downs.len();
    if k == n {
        out.insert(canonical_form(&poset_of(downs)), ());
        return;
    }
    for bits in 0..1u64 << k {
        let d = VertexSet::from_bits(bits);
        if d.iter().all(|v| downs[v].is_subset(d)) {
            downs.push(d);
            grow(n, downs, out);
            downs.pop();
        }
    }
}

fn poset_of(downs: &[VertexSet]) -> Poset {
    let n = downs.len();
    let mut up = vec![VertexSet::EMPTY; n];
    for (b, d) in downs.iter().enumerate() {
        for a in d.iter() {
            up[a].insert(b);
        }
    }
    Poset::from_closed_upsets(up)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        let counts: Vec<usize> =
            (0..=5).map(|n| enumerate_posets_oracle(n, false).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn filtered_counts() {
        let free = enumerate_posets_oracle(4, false)
            .unwrap()
            .into_iter()
            .filter(|p| p.find_3plus1().is_none())
            .count();
        assert_eq!(free, 15);
    }

    #[test]
    fn bound() {
        assert!(enumerate_posets_oracle(8, false).is_err());
    }
}
