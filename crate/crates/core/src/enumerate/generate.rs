//! Isomorph-free generation of (3+1)-free posets from skeleta and parts.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bicoloured::BicolouredGraph;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::skeleton::{enumerate_skeleta, SkeletonWord};
use crate::tangle::aut_order;

use super::assemble::{assemble, PartData, PartSpec};
use super::bicoloured::enumerate_tangles;
use super::size_cap;

pub const MAX_GENERATE_VERTICES: usize = 12;
pub const MAX_BURNSIDE_VERTICES: usize = 9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenerateOptions {
    /// Recompute canonical forms and panic on a repeated class.
    pub check_duplicates: bool,
}

/// Tangles with `size` vertices in all top/bottom splits, sorted by
/// canonical form.
pub fn tangles_of_size(size: usize) -> Result<Vec<BicolouredGraph>> {
    let mut all = Vec::new();
    for p in 2..=size.saturating_sub(2) {
        all.extend(enumerate_tangles(p, size - p)?);
    }
    all.sort_by_cached_key(BicolouredGraph::canonical_form);
    Ok(all)
}

/// Skeleta realisable on at most `n` vertices (each clone letter needs one
/// vertex, each tangle letter four), by length and then lexicographically.
pub fn skeleta_up_to(n: usize) -> Vec<SkeletonWord> {
    let mut out = Vec::new();
    for len in 1..=n {
        let mut same_len = Vec::new();
        for tangles in 0..=len {
            let clones = len - tangles;
            if clones + 4 * tangles <= n {
                same_len.extend(enumerate_skeleta(clones, tangles));
            }
        }
        same_len.sort();
        out.extend(same_len);
    }
    out
}

pub fn generate_31free(n: usize) -> Result<Vec<Poset>> {
    generate_31free_with(n, GenerateOptions::default())
}

/// Every (3+1)-free poset on `n` vertices exactly once, up to isomorphism.
///
/// Order: skeleta by length then lexicographically; for each, part sizes in
/// lexicographic order of compositions; then tangle choices in
/// canonical-form order, earlier letters varying slowest.
pub fn generate_31free_with(n: usize, options: GenerateOptions) -> Result<Vec<Poset>> {
    let max = size_cap(MAX_GENERATE_VERTICES);
    if n > max {
        return Err(Error::Size { what: "(3+1)-free generation", got: n, max });
    }
    if n == 0 {
        return Ok(vec![Poset::antichain(0)]);
    }
    let mut by_size: Vec<Vec<BicolouredGraph>> = vec![Vec::new(); n + 1];
    for (size, slot) in by_size.iter_mut().enumerate().skip(4) {
        *slot = tangles_of_size(size)?;
    }
    let skeleta = skeleta_up_to(n);
    let chunks: Vec<Vec<Poset>> =
        skeleta.par_iter().map(|w| expand(w, n, &by_size)).collect::<Result<_>>()?;
    let posets: Vec<Poset> = chunks.into_iter().flatten().collect();

    if options.check_duplicates {
        let mut seen = BTreeSet::new();
        for p in &posets {
            assert!(seen.insert(canonical_form(p)), "generator emitted an isomorphism class twice");
        }
    }
    Ok(posets)
}

fn expand(word: &SkeletonWord, n: usize, by_size: &[Vec<BicolouredGraph>]) -> Result<Vec<Poset>> {
    let mins: Vec<usize> = word.letters().iter().map(|l| if l.is_clone() { 1 } else { 4 }).collect();
    let mut out = Vec::new();
    let mut sizes = Vec::with_capacity(mins.len());
    compositions(&mins, n, &mut sizes, &mut |sizes| {
        let mut spec = Vec::with_capacity(sizes.len());
        fill(word, sizes, by_size, &mut spec, &mut out)
    })?;
    Ok(out)
}

fn compositions(
    mins: &[usize],
    remaining: usize,
    sizes: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let k = sizes.len();
    if k == mins.len() {
        return if remaining == 0 { emit(sizes) } else { Ok(()) };
    }
    let rest: usize = mins[k + 1..].iter().sum();
    if remaining < mins[k] + rest {
        return Ok(());
    }
    let hi = if k + 1 == mins.len() { remaining } else { remaining - rest };
    for s in mins[k]..=hi {
        sizes.push(s);
        compositions(mins, remaining - s, sizes, emit)?;
        sizes.pop();
    }
    Ok(())
}

fn fill(
    word: &SkeletonWord,
    sizes: &[usize],
    by_size: &[Vec<BicolouredGraph>],
    spec: &mut Vec<PartData>,
    out: &mut Vec<Poset>,
) -> Result<()> {
    let k = spec.len();
    if k == sizes.len() {
        out.push(assemble(word, &PartSpec(spec.clone()))?);
        return Ok(());
    }
    if word.letters()[k].is_clone() {
        spec.push(PartData::CloneSize(sizes[k]));
        fill(word, sizes, by_size, spec, out)?;
        spec.pop();
    } else {
        for g in &by_size[sizes[k]] {
            spec.push(PartData::TangleIso(g.clone()));
            fill(word, sizes, by_size, spec, out)?;
            spec.pop();
        }
    }
    Ok(())
}

/// Labelled (3+1)-free posets on `n` vertices as `sum n!/|Aut(P)|` over the
/// unlabelled classes.
pub fn count_labelled_via_burnside(n: usize) -> Result<BigUint> {
    let max = size_cap(MAX_BURNSIDE_VERTICES);
    if n > max {
        return Err(Error::Size { what: "labelled count by orbits", got: n, max });
    }
    let fact: BigUint = (1..=n as u64).product();
    let posets = generate_31free(n)?;
    let terms: Vec<BigUint> = posets
        .par_iter()
        .map(|p| {
            let aut = aut_order(p).expect("generated posets are (3+1)-free");
            assert!((&fact % &aut).is_zero());
            &fact / aut
        })
        .collect();
    Ok(terms.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_generation() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| {
                generate_31free_with(n, GenerateOptions { check_duplicates: true }).unwrap().len()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 49, 173]);
    }

    #[test]
    fn burnside_small() {
        let got: Vec<u64> = (0..=3)
            .map(|n| count_labelled_via_burnside(n).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 1, 3, 19]);
    }

    #[test]
    fn skeleton_order() {
        let s: Vec<String> = skeleta_up_to(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(s, vec!["c1", "c1 c2"]);
        assert_eq!(tangles_of_size(4).unwrap().len(), 1);
        assert_eq!(tangles_of_size(5).unwrap().len(), 2);
    }

    #[test]
    fn bounds() {
        assert!(generate_31free(13).is_err());
        assert!(count_labelled_via_burnside(10).is_err());
    }
}
