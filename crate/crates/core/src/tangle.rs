//! Views, clone sets, tangles and compatible listings of (3+1)-free posets.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bicoloured::BicolouredGraph;
use crate::error::{Error, Result};
use crate::poset::{Poset, VertexSet};
use crate::skeleton::{Letter, SkeletonWord};

/// `(D_a, P \ U_a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct View {
    pub down: VertexSet,
    pub codown: VertexSet,
}

impl View {
    /// Product order on (downset, complement of upset).
    pub fn le(&self, other: &View) -> bool {
        self.down.is_subset(other.down) && self.codown.is_subset(other.codown)
    }

    pub fn incomparable(&self, other: &View) -> bool {
        !self.le(other) && !other.le(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Part {
    CloneSet { vertices: Vec<usize>, level: u32 },
    /// `levels = (i, i + 1)`: the bottom lies on level `i`.
    Tangle { top: Vec<usize>, bottom: Vec<usize>, levels: (u32, u32) },
}

impl Part {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Part::CloneSet { vertices, .. } => vertices.iter().copied().collect(),
            Part::Tangle { top, bottom, .. } => top.iter().chain(bottom).copied().collect(),
        }
    }

    pub fn letter(&self) -> Letter {
        match self {
            Part::CloneSet { level, .. } => Letter::C(*level),
            Part::Tangle { levels, .. } => Letter::T(levels.0),
        }
    }

    pub fn is_tangle(&self) -> bool {
        matches!(self, Part::Tangle { .. })
    }

    /// Tangle as a bicoloured graph; `None` for clone sets.
    pub fn tangle_graph(&self, poset: &Poset) -> Option<BicolouredGraph> {
        match self {
            Part::Tangle { top, bottom, .. } => Some(BicolouredGraph::from_parts(
                poset,
                top.iter().copied().collect(),
                bottom.iter().copied().collect(),
            )),
            Part::CloneSet { .. } => None,
        }
    }
}

/// Parts in a compatible listing, plus the 1-based level of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
    pub level_of: Vec<u32>,
}

impl Decomposition {
    /// Letters of the listing, before normalization.
    pub fn raw_word(&self) -> Vec<Letter> {
        self.parts.iter().map(Part::letter).collect()
    }

    pub fn skeleton(&self) -> SkeletonWord {
        SkeletonWord::normalize(&self.raw_word())
    }
}

/// One co-connected component of the view poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViewComponent {
    pub views: Vec<View>,
    pub preimage: VertexSet,
}

fn require_31_free(p: &Poset) -> Result<()> {
    match p.find_3plus1() {
        Some(w) => Err(Error::Not31Free(w)),
        None => Ok(()),
    }
}

pub fn view(p: &Poset, a: usize) -> Result<View> {
    Ok(View { down: p.downset(a)?, codown: p.vertices().difference(p.upset(a)?) })
}

fn view_unchecked(p: &Poset, a: usize) -> View {
    View { down: p.down(a), codown: p.vertices().difference(p.up(a)) }
}

/// `v(a) = v(b)`.
pub fn is_clone(p: &Poset, a: usize, b: usize) -> bool {
    p.down(a) == p.down(b) && p.up(a) == p.up(b)
}

/// Downsets of `a` and `b` are incomparable: a (2+2) with `a, b` on top.
pub fn rel_ttop(p: &Poset, a: usize, b: usize) -> bool {
    p.down(a).is_incomparable(p.down(b))
}

/// Upsets of `a` and `b` are incomparable: a (2+2) with `a, b` below.
pub fn rel_tbot(p: &Poset, a: usize, b: usize) -> bool {
    p.up(a).is_incomparable(p.up(b))
}

/// `|D_a| - |U_a|`.
pub fn altitude(p: &Poset, a: usize) -> Result<i64> {
    Ok(p.downset(a)?.len() as i64 - p.upset(a)?.len() as i64)
}

/// Co-connected components of the view poset, each entirely below the next.
pub fn ordered_view_components(p: &Poset) -> Result<Vec<ViewComponent>> {
    require_31_free(p)?;
    Ok(view_components(p))
}

fn view_components(p: &Poset) -> Vec<ViewComponent> {
    let mut views: Vec<View> = (0..p.len()).map(|a| view_unchecked(p, a)).collect();
    views.sort();
    views.dedup();
    let k = views.len();

    // Union-find over incomparable pairs.
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for i in 0..k {
        for j in i + 1..k {
            if views[i].incomparable(&views[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<View>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = vec![None; k];
    for (i, &v) in views.iter().enumerate() {
        let r = find(&mut parent, i);
        let slot = *root_slot[r].get_or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[slot].push(v);
    }
    // Components are totally ordered; any representatives compare.
    groups.sort_by(|x, y| {
        if x[0] == y[0] {
            std::cmp::Ordering::Equal
        } else if x[0].le(&y[0]) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    groups
        .into_iter()
        .map(|views| {
            let preimage = (0..p.len()).filter(|&a| views.contains(&view_unchecked(p, a))).collect();
            ViewComponent { views, preimage }
        })
        .collect()
}

/// Tangle decomposition in a compatible listing.
///
/// Parts are emitted by a topological sort of the adjacent-level precedence
/// constraints, preferring the part whose anchor component comes first in the
/// view order (a tangle is anchored at its bottom), then the smallest vertex.
pub fn decompose(p: &Poset) -> Result<Decomposition> {
    require_31_free(p)?;
    let level_of = p.level_map();
    let components = view_components(p);

    #[derive(Clone, Copy, PartialEq)]
    enum Kind {
        Clone,
        Top,
        Bottom,
    }
    let kinds: Vec<Kind> = components
        .iter()
        .map(|c| {
            if c.views.len() == 1 {
                Kind::Clone
            } else if c.views[0].codown == c.views[1].codown {
                // Tops of a tangle share their upset, bottoms their downset.
                Kind::Top
            } else {
                Kind::Bottom
            }
        })
        .collect();
    let component_of = |v: usize| components.iter().position(|c| c.preimage.contains(v)).unwrap();

    // (part, anchor component index)
    let mut parts: Vec<(Part, usize)> = Vec::new();
    let mut matched_bottoms = vec![false; components.len()];
    for (ci, comp) in components.iter().enumerate() {
        match kinds[ci] {
            Kind::Clone => {
                let vertices = comp.preimage.to_vec();
                parts.push((Part::CloneSet { level: level_of[vertices[0]], vertices }, ci));
            }
            Kind::Top => {
                let tops = comp.preimage.to_vec();
                let (a1, a2) = tops
                    .iter()
                    .flat_map(|&x| tops.iter().map(move |&y| (x, y)))
                    .find(|&(x, y)| rel_ttop(p, x, y))
                    .expect("top of a tangle has a (2+2) pair");
                let c = p.down(a1).difference(p.down(a2)).min().unwrap();
                let bi = component_of(c);
                assert!(kinds[bi] == Kind::Bottom, "top matched to a non-bottom component");
                assert!(!matched_bottoms[bi], "bottom matched twice");
                matched_bottoms[bi] = true;
                let bottom = components[bi].preimage.to_vec();
                let bottom_level = level_of[bottom[0]];
                parts.push((
                    Part::Tangle { top: tops, bottom, levels: (bottom_level, bottom_level + 1) },
                    bi,
                ));
            }
            Kind::Bottom => {}
        }
    }
    assert!(
        (0..components.len()).all(|i| kinds[i] != Kind::Bottom || matched_bottoms[i]),
        "unmatched bottom of a tangle"
    );

    let listing = compatible_order(p, &level_of, parts);
    let decomposition = Decomposition { parts: listing, level_of };
    if let Err(e) = check_listing(p, &decomposition) {
        panic!("emitted listing is not compatible: {e}");
    }
    Ok(decomposition)
}

fn compatible_order(p: &Poset, level_of: &[u32], parts: Vec<(Part, usize)>) -> Vec<Part> {
    let k = parts.len();
    let sets: Vec<VertexSet> = parts.iter().map(|(part, _)| part.vertices()).collect();
    let mut indegree = vec![0usize; k];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    for x in 0..k {
        for y in 0..k {
            if x == y {
                continue;
            }
            // Only pairs a in x, b in y on adjacent levels with a one below b
            // constrain the order.
            let mut must_precede = None;
            'scan: for a in sets[x].iter() {
                for b in sets[y].iter() {
                    if level_of[a] + 1 == level_of[b] {
                        must_precede = Some(p.lt(a, b));
                        break 'scan;
                    }
                }
            }
            match must_precede {
                Some(true) => {
                    succ[x].push(y);
                    indegree[y] += 1;
                }
                Some(false) => {
                    succ[y].push(x);
                    indegree[x] += 1;
                }
                None => {}
            }
        }
    }
    let key = |x: usize| (parts[x].1, sets[x].min().unwrap_or(usize::MAX));
    let mut ready: Vec<usize> = (0..k).filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(k);
    while !ready.is_empty() {
        let pos = (0..ready.len()).min_by_key(|&i| key(ready[i])).unwrap();
        let x = ready.swap_remove(pos);
        order.push(x);
        for &y in &succ[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(y);
            }
        }
    }
    assert_eq!(order.len(), k, "precedence constraints between parts are cyclic");
    let mut slots: Vec<Option<Part>> = parts.into_iter().map(|(part, _)| Some(part)).collect();
    order.into_iter().map(|x| slots[x].take().unwrap()).collect()
}

/// Verifies that the parts partition the poset, sit on one or two adjacent
/// levels, and that cross-part relations follow the listing rule.
pub fn check_listing(p: &Poset, d: &Decomposition) -> std::result::Result<(), String> {
    let mut covered = VertexSet::EMPTY;
    let mut part_of = vec![usize::MAX; p.len()];
    for (i, part) in d.parts.iter().enumerate() {
        let vs = part.vertices();
        if !vs.intersection(covered).is_empty() {
            return Err(format!("part {i} overlaps an earlier part"));
        }
        covered = covered.union(vs);
        for v in vs.iter() {
            part_of[v] = i;
        }
        match part {
            Part::CloneSet { vertices, level } => {
                if vertices.is_empty() || vertices.iter().any(|&v| d.level_of[v] != *level) {
                    return Err(format!("clone set {i} is not on level {level}"));
                }
            }
            Part::Tangle { top, bottom, levels } => {
                if top.len() < 2 || bottom.len() < 2 || levels.1 != levels.0 + 1 {
                    return Err(format!("tangle {i} has bad shape"));
                }
                if top.iter().any(|&v| d.level_of[v] != levels.1)
                    || bottom.iter().any(|&v| d.level_of[v] != levels.0)
                {
                    return Err(format!("tangle {i} is not on levels {levels:?}"));
                }
            }
        }
    }
    if covered != p.vertices() {
        return Err("parts do not cover the vertex set".into());
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            let (i, j) = (part_of[a], part_of[b]);
            if i == j {
                continue;
            }
            let (la, lb) = (d.level_of[a], d.level_of[b]);
            let expect = la + 2 <= lb || (la + 1 == lb && i < j);
            if p.lt(a, b) != expect {
                return Err(format!("relation {a} < {b} disagrees with the listing"));
            }
        }
    }
    Ok(())
}

pub fn skeleton_of(p: &Poset) -> Result<SkeletonWord> {
    Ok(decompose(p)?.skeleton())
}

/// `|Aut(P)|` as the product of `k!` over clone sets and the
/// colour-preserving automorphism counts of the tangles.
pub fn aut_order(p: &Poset) -> Result<BigUint> {
    let d = decompose(p)?;
    Ok(aut_order_of(p, &d))
}

pub fn aut_order_of(p: &Poset, d: &Decomposition) -> BigUint {
    d.parts.iter().fold(BigUint::one(), |acc, part| match part {
        Part::CloneSet { vertices, .. } => {
            acc * (1..=vertices.len() as u64).fold(BigUint::one(), |f, i| f * i)
        }
        Part::Tangle { .. } => acc * part.tangle_graph(p).unwrap().automorphism_count(),
    })
}
