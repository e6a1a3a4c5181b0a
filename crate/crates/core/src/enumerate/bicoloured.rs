//! Isomorphism classes of bicoloured graphs and tangles.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bicoloured::BicolouredGraph;
use crate::canon::CanonicalForm;
use crate::error::{Error, Result};

use super::size_cap;

/// Default bound on `p + q` for [`enumerate_bicoloured`] and [`enumerate_tangles`].
pub const MAX_BICOLOURED_VERTICES: usize = 12;

fn check_size(p: usize, q: usize) -> Result<()> {
    let max = size_cap(MAX_BICOLOURED_VERTICES);
    if p + q > max {
        return Err(Error::Size { what: "bicoloured graph enumeration", got: p + q, max });
    }
    Ok(())
}

/// All colour-preserving isomorphism classes with `p` tops and `q` bottoms,
/// as canonical representatives sorted by canonical form.
pub fn enumerate_bicoloured(p: usize, q: usize) -> Result<Vec<BicolouredGraph>> {
    check_size(p, q)?;
    Ok(classes(p, q, false))
}

/// Isomorphism classes with `p` tops and `q` bottoms that are tangles,
/// sorted by canonical form.
pub fn enumerate_tangles(p: usize, q: usize) -> Result<Vec<BicolouredGraph>> {
    check_size(p, q)?;
    if p < 2 || q < 2 {
        return Ok(Vec::new());
    }
    Ok(classes(p, q, true))
}

fn multiset_count(options: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (options + i) as f64 / (i + 1) as f64)
}

fn classes(p: usize, q: usize, tangles_only: bool) -> Vec<BicolouredGraph> {
    // Rows range over subsets of the columns; pick the orientation with
    // fewer row multisets and transpose afterwards if needed.
    let transpose = multiset_count(1 << p, q as u64) < multiset_count(1 << q, p as u64);
    let (rows_n, cols_n) = if transpose { (q, p) } else { (p, q) };
    let full = if cols_n == 64 { u64::MAX } else { (1u64 << cols_n) - 1 };
    let options: Vec<u64> = (0..=full)
        .filter(|&r| !tangles_only || (r != 0 && r != full))
        .collect();
    if rows_n == 0 {
        let g = BicolouredGraph::new(0, cols_n, Vec::new());
        return finish(vec![g], transpose);
    }

    let found: BTreeMap<CanonicalForm, BicolouredGraph> = (0..options.len())
        .into_par_iter()
        .map(|first| {
            let mut local = BTreeMap::new();
            let mut rows = vec![options[first]];
            extend(&options, first, rows_n, cols_n, tangles_only, &mut rows, &mut local);
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    finish(found.into_values().collect(), transpose)
}

fn extend(
    options: &[u64],
    from: usize,
    rows_n: usize,
    cols_n: usize,
    tangles_only: bool,
    rows: &mut Vec<u64>,
    out: &mut BTreeMap<CanonicalForm, BicolouredGraph>,
) {
    if rows.len() == rows_n {
        // Every class has a representative with nondecreasing column degrees.
        let degrees: Vec<u32> = (0..cols_n)
            .map(|b| rows.iter().filter(|&&r| r >> b & 1 == 1).count() as u32)
            .collect();
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return;
        }
        let g = BicolouredGraph::new(rows_n, cols_n, rows.clone());
        if tangles_only && !g.is_tangle() {
            return;
        }
        out.entry(g.canonical_form()).or_insert(g);
        return;
    }
    for k in from..options.len() {
        rows.push(options[k]);
        extend(options, k, rows_n, cols_n, tangles_only, rows, out);
        rows.pop();
    }
}

fn finish(graphs: Vec<BicolouredGraph>, transpose: bool) -> Vec<BicolouredGraph> {
    let mut keyed: Vec<(CanonicalForm, BicolouredGraph)> = graphs
        .into_iter()
        .map(|g| {
            let g = if transpose { g.transpose() } else { g };
            (g.canonical_form(), g.canonical())
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_classes() {
        assert_eq!(enumerate_bicoloured(2, 2).unwrap().len(), 7);
        assert_eq!(enumerate_bicoloured(0, 3).unwrap().len(), 1);
        assert_eq!(enumerate_bicoloured(1, 2).unwrap().len(), 3);
        assert_eq!(enumerate_tangles(2, 2).unwrap().len(), 1);
        assert_eq!(enumerate_tangles(3, 2).unwrap().len(), 1);
        assert_eq!(enumerate_tangles(2, 3).unwrap().len(), 1);
        assert!(enumerate_tangles(2, 1).unwrap().is_empty());
    }

    #[test]
    fn orientation_is_preserved() {
        for g in enumerate_bicoloured(1, 3).unwrap() {
            assert_eq!((g.tops(), g.bottoms()), (1, 3));
        }
        assert_eq!(enumerate_bicoloured(1, 3).unwrap().len(), 4);
        assert_eq!(enumerate_bicoloured(3, 1).unwrap().len(), 4);
    }

    #[test]
    fn size_bound() {
        assert!(matches!(enumerate_tangles(7, 6), Err(Error::Size { .. })));
    }
}
