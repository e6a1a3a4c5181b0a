#![allow(dead_code)]

use tanglecount::cli::format::{parse_poset, NamedPoset};
use tanglecount::tangle::{is_clone, rel_tbot, rel_ttop, view};
use tanglecount::Poset;

/// Ten vertices a..j given by their strict downsets.
pub const TEN_VERTEX_EXAMPLE: &str = "\
poset 10
a b c d e f g h i j
a < d
a < e
a < f
b < f
a < g
c < g
a < h
b < h
c < h
d < h
e < h
a < i
b < i
c < i
d < i
e < i
f < i
g < i
a < j
b < j
c < j
d < j
e < j
f < j
g < j
h < j
";

pub fn ten_vertex_example() -> NamedPoset {
    parse_poset(TEN_VERTEX_EXAMPLE).unwrap()
}

pub fn index(np: &NamedPoset, name: &str) -> usize {
    np.names.iter().position(|x| x == name).unwrap()
}

/// The seven clauses relating clones, top pairs and bottom pairs.
pub fn check_relation_clauses(p: &Poset) -> Result<(), String> {
    let n = p.len();
    let clone = |a: usize, b: usize| is_clone(p, a, b);
    let top = |a: usize, b: usize| a != b && rel_ttop(p, a, b);
    let bot = |a: usize, b: usize| a != b && rel_tbot(p, a, b);
    for a in 0..n {
        for b in 0..n {
            if top(a, b) && p.up(a) != p.up(b) {
                return Err(format!("(iv) fails at {a},{b}"));
            }
            if bot(a, b) && p.down(a) != p.down(b) {
                return Err(format!("(v) fails at {a},{b}"));
            }
            let va = view(p, a).unwrap();
            let vb = view(p, b).unwrap();
            if a != b && va.incomparable(&vb) != (top(a, b) || bot(a, b)) {
                return Err(format!("(vi) fails at {a},{b}"));
            }
            for c in 0..n {
                if clone(a, b) && clone(b, c) && !clone(a, c) {
                    return Err(format!("(i) fails at {a},{b},{c}"));
                }
                if top(a, b) && clone(b, c) && !top(a, c) {
                    return Err(format!("(ii) fails at {a},{b},{c}"));
                }
                if bot(a, b) && clone(b, c) && !bot(a, c) {
                    return Err(format!("(iii) fails at {a},{b},{c}"));
                }
                if top(a, b) && bot(b, c) {
                    return Err(format!("(vii) fails at {a},{b},{c}"));
                }
            }
        }
    }
    Ok(())
}

/// Vertices two or more levels apart are related, and same-level vertices
/// have nested upsets or nested downsets.
pub fn check_level_properties(p: &Poset) -> Result<(), String> {
    let level = p.level_map();
    for a in 0..p.len() {
        for b in 0..p.len() {
            if level[a] + 2 <= level[b] && !p.lt(a, b) {
                return Err(format!("{a} and {b} are two levels apart but unrelated"));
            }
            if a != b
                && level[a] == level[b]
                && !(p.up(a).is_subset(p.up(b)) || p.down(a).is_subset(p.down(b)))
            {
                return Err(format!("{a} and {b} share a level without nested sets"));
            }
        }
    }
    Ok(())
}
