//! Building a poset from a skeleton and the data of its parts.

use crate::bicoloured::BicolouredGraph;
use crate::error::{Error, Result};
use crate::poset::{Poset, VertexSet};
use crate::skeleton::{Letter, SkeletonWord};
use crate::tangle::{decompose, Part};

/// What fills one letter of a skeleton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PartData {
    CloneSize(usize),
    TangleIso(BicolouredGraph),
}

impl PartData {
    pub fn len(&self) -> usize {
        match self {
            PartData::CloneSize(k) => *k,
            PartData::TangleIso(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One entry per skeleton letter, in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartSpec(pub Vec<PartData>);

/// Instantiates the parts in the order of the skeleton's letters and relates
/// vertices of different parts by the listing rule: `a < b` iff `a` is at
/// least two levels below `b`, or exactly one level below with its part
/// earlier. Tangle bottoms get the lower level. Vertices are numbered part
/// by part, bottoms of a tangle before its tops.
///
/// Panics if the result fails to decompose back into the given parts.
pub fn assemble(skeleton: &SkeletonWord, spec: &PartSpec) -> Result<Poset> {
    let letters = skeleton.letters();
    if !skeleton.is_valid() {
        return Err(Error::SpecMismatch(format!("`{skeleton}` is not a valid skeleton")));
    }
    if letters.len() != spec.0.len() {
        return Err(Error::SpecMismatch(format!(
            "{} letters but {} parts",
            letters.len(),
            spec.0.len()
        )));
    }
    let n: usize = spec.0.iter().map(PartData::len).sum();
    if n > crate::poset::MAX_VERTICES {
        return Err(Error::Size { what: "assembled poset", got: n, max: crate::poset::MAX_VERTICES });
    }

    let mut level = Vec::with_capacity(n);
    let mut part_of = Vec::with_capacity(n);
    let mut expected = Vec::with_capacity(letters.len());
    let mut inner = Vec::new();
    for (k, (&letter, data)) in letters.iter().zip(&spec.0).enumerate() {
        let base = level.len();
        match (letter, data) {
            (Letter::C(i), PartData::CloneSize(size)) => {
                if *size == 0 {
                    return Err(Error::SpecMismatch(format!("clone set {k} is empty")));
                }
                level.extend(std::iter::repeat_n(i, *size));
                part_of.extend(std::iter::repeat_n(k, *size));
                expected.push(Part::CloneSet { vertices: (base..base + size).collect(), level: i });
            }
            (Letter::T(i), PartData::TangleIso(g)) => {
                if !g.is_tangle() {
                    return Err(Error::SpecMismatch(format!("part {k} is not a tangle")));
                }
                let (p, q) = (g.tops(), g.bottoms());
                level.extend(std::iter::repeat_n(i, q));
                level.extend(std::iter::repeat_n(i + 1, p));
                part_of.extend(std::iter::repeat_n(k, p + q));
                for (a, b) in g.edges() {
                    inner.push((base + b, base + q + a));
                }
                expected.push(Part::Tangle {
                    top: (base + q..base + q + p).collect(),
                    bottom: (base..base + q).collect(),
                    levels: (i, i + 1),
                });
            }
            (letter, _) => {
                return Err(Error::SpecMismatch(format!("letter {letter} does not fit part {k}")));
            }
        }
    }

    let mut up = vec![VertexSet::EMPTY; n];
    for a in 0..n {
        for b in 0..n {
            if part_of[a] != part_of[b]
                && (level[a] + 2 <= level[b] || (level[a] + 1 == level[b] && part_of[a] < part_of[b]))
            {
                up[a].insert(b);
            }
        }
    }
    for &(a, b) in &inner {
        up[a].insert(b);
    }
    let relations: Vec<(usize, usize)> =
        (0..n).flat_map(|a| up[a].iter().map(move |b| (a, b))).collect();
    let poset = Poset::from_relations(n, &relations).expect("listing relations are acyclic");

    verify_round_trip(&poset, skeleton, spec, &expected);
    Ok(poset)
}

fn verify_round_trip(poset: &Poset, skeleton: &SkeletonWord, spec: &PartSpec, expected: &[Part]) {
    if let Some(w) = poset.find_3plus1() {
        panic!("assembled poset for `{skeleton}` contains a (3+1): {w}");
    }
    let d = decompose(poset).expect("(3+1)-free");
    let (word, origin) = SkeletonWord::normalize_tracked(&d.raw_word());
    assert_eq!(&word, skeleton, "assembled poset has a different skeleton");
    for (k, &src) in origin.iter().enumerate() {
        let got = &d.parts[src];
        assert_eq!(got.vertices(), expected[k].vertices(), "part {k} of `{skeleton}` was not recovered");
        if let (Part::Tangle { top, .. }, PartData::TangleIso(g)) = (got, &spec.0[k]) {
            let Part::Tangle { top: want, .. } = &expected[k] else { unreachable!() };
            assert_eq!(top, want, "tangle {k} of `{skeleton}` has the wrong top");
            let found = got.tangle_graph(poset).unwrap();
            assert_eq!(found.canonical_form(), g.canonical_form(), "tangle {k} changed isomorphism type");
        }
    }
}
