//! Skeleton words over the partially commuting alphabet `{c_i, t_{i,i+1}}`.
//!
//! Words are kept in their lexicographically maximal normal form under the
//! letter order `c_1 < t_12 < c_2 < t_23 < ...`. Validity of a skeleton is
//! decided on that representative alone.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(i)` is the clone letter `c_i`, `T(i)` the tangle letter `t_{i,i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    C(u32),
    T(u32),
}

impl Letter {
    /// Position in the total order `c_1 < t_12 < c_2 < t_23 < ...`.
    fn rank(self) -> u32 {
        match self {
            Letter::C(i) => 2 * i,
            Letter::T(i) => 2 * i + 1,
        }
    }

    pub fn index(self) -> u32 {
        match self {
            Letter::C(i) | Letter::T(i) => i,
        }
    }

    pub fn is_clone(self) -> bool {
        matches!(self, Letter::C(_))
    }

    /// Highest level touched by the letter.
    pub fn top_level(self) -> u32 {
        match self {
            Letter::C(i) => i,
            Letter::T(i) => i + 1,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::C(i) => write!(f, "c{i}"),
            Letter::T(i) => write!(f, "t{}{}", i, i + 1),
        }
    }
}

impl FromStr for Letter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Letter, String> {
        let bad = || format!("invalid skeleton letter `{s}`");
        if let Some(rest) = s.strip_prefix('c') {
            let i: u32 = rest.parse().map_err(|_| bad())?;
            return if i >= 1 { Ok(Letter::C(i)) } else { Err(bad()) };
        }
        if let Some(rest) = s.strip_prefix('t') {
            // `t<i><i+1>`: find the split where the suffix is prefix + 1.
            for cut in 1..rest.len() {
                let (a, b) = rest.split_at(cut);
                if let (Ok(i), Ok(j)) = (a.parse::<u32>(), b.parse::<u32>()) {
                    if i >= 1 && j == i + 1 && !b.starts_with('0') {
                        return Ok(Letter::T(i));
                    }
                }
            }
        }
        Err(bad())
    }
}

/// Whether `x y = y x` in the monoid.
pub fn commutes(x: Letter, y: Letter) -> bool {
    use Letter::*;
    let d = |i: u32, j: u32| i64::from(i) - i64::from(j);
    match (x, y) {
        (C(i), C(j)) => d(i, j).abs() >= 2,
        (C(i), T(j)) | (T(j), C(i)) => d(i, j) <= -2 || d(i, j) >= 3,
        (T(i), T(j)) => d(i, j).abs() >= 3,
    }
}

/// A monoid element held as its lex-max representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SkeletonWord(Vec<Letter>);

impl SkeletonWord {
    pub fn empty() -> Self {
        SkeletonWord(Vec::new())
    }

    /// Normal form of the element represented by `raw`.
    pub fn normalize(raw: &[Letter]) -> SkeletonWord {
        Self::normalize_tracked(raw).0
    }

    /// Normal form plus, for each output position, the input position its
    /// letter came from. Equal letters never commute, so this is well defined.
    pub fn normalize_tracked(raw: &[Letter]) -> (SkeletonWord, Vec<usize>) {
        let mut word: Vec<Letter> = raw.to_vec();
        let mut origin: Vec<usize> = (0..raw.len()).collect();
        // Each swap strictly increases the word lexicographically.
        let mut changed = true;
        while changed {
            changed = false;
            for k in 1..word.len() {
                let (x, y) = (word[k - 1], word[k]);
                if x < y && commutes(x, y) {
                    word.swap(k - 1, k);
                    origin.swap(k - 1, k);
                    changed = true;
                }
            }
        }
        (SkeletonWord(word), origin)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn clone_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_clone()).count()
    }

    pub fn tangle_count(&self) -> usize {
        self.0.len() - self.clone_count()
    }

    /// Skeleton of some (3+1)-free poset: empty, or starts with `c1`/`t12`
    /// and has no factor `c_i c_i`.
    pub fn is_valid(&self) -> bool {
        let Some(&first) = self.0.first() else {
            return true;
        };
        matches!(first, Letter::C(1) | Letter::T(1))
            && self
                .0
                .windows(2)
                .all(|w| !(w[0].is_clone() && w[0] == w[1]))
    }

    /// Decorated Dyck path of a valid skeleton.
    pub fn to_dyck(&self) -> Result<DecoratedDyckPath> {
        if !self.is_valid() {
            return Err(Error::MalformedPath(format!("`{self}` is not a valid skeleton")));
        }
        let mut steps = Vec::new();
        let mut height = 0u32;
        for &letter in &self.0 {
            let start = letter.index() - 1;
            if start > height {
                return Err(Error::MalformedPath(format!("`{self}` is not in normal form")));
            }
            steps.extend(std::iter::repeat_n(Step::Down, (height - start) as usize));
            match letter {
                Letter::C(_) => steps.push(Step::Up),
                Letter::T(_) => steps.push(Step::DoubleUp),
            }
            height = letter.top_level();
        }
        steps.extend(std::iter::repeat_n(Step::Down, height as usize));
        Ok(DecoratedDyckPath(steps))
    }

    pub fn from_dyck(path: &DecoratedDyckPath) -> Result<SkeletonWord> {
        path.validate()?;
        let mut height = 0u32;
        let mut letters = Vec::new();
        for step in &path.0 {
            match step {
                Step::Up => {
                    letters.push(Letter::C(height + 1));
                    height += 1;
                }
                Step::DoubleUp => {
                    letters.push(Letter::T(height + 1));
                    height += 2;
                }
                Step::Down => height -= 1,
            }
        }
        Ok(SkeletonWord(letters))
    }
}

impl fmt::Display for SkeletonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for SkeletonWord {
    type Err = String;

    /// Parses whitespace-separated letters and normalizes.
    fn from_str(s: &str) -> std::result::Result<SkeletonWord, String> {
        let raw = s.split_whitespace().map(str::parse).collect::<std::result::Result<Vec<Letter>, _>>()?;
        Ok(SkeletonWord::normalize(&raw))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// `(1, 1)`
    Up,
    /// `(1, -1)`
    Down,
    /// `(2, 2)`, a pair of decorated up steps.
    DoubleUp,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecoratedDyckPath(pub Vec<Step>);

impl DecoratedDyckPath {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Nonnegative, returns to zero, and has no undecorated up-down-up.
    pub fn validate(&self) -> Result<()> {
        let mut height: i64 = 0;
        for (k, step) in self.0.iter().enumerate() {
            height += match step {
                Step::Up => 1,
                Step::Down => -1,
                Step::DoubleUp => 2,
            };
            if height < 0 {
                return Err(Error::MalformedPath(format!("path goes below zero at step {k}")));
            }
        }
        if height != 0 {
            return Err(Error::MalformedPath(format!("path ends at height {height}")));
        }
        if self.0.windows(3).any(|w| w == [Step::Up, Step::Down, Step::Up]) {
            return Err(Error::MalformedPath("undecorated up-down-up".into()));
        }
        Ok(())
    }
}

/// All valid skeleta with exactly `clones` clone letters and `tangles`
/// tangle letters, in increasing lexicographic order.
///
/// Walks decorated Dyck paths: before each letter the path may descend to
/// any height, except that an undecorated up may not follow a single down
/// after another undecorated up.
pub fn enumerate_skeleta(clones: usize, tangles: usize) -> Vec<SkeletonWord> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(clones + tangles);
    extend_skeleta(&mut word, 0, clones, tangles, &mut out);
    out.sort();
    out
}

fn extend_skeleta(
    word: &mut Vec<Letter>,
    height: u32,
    clones: usize,
    tangles: usize,
    out: &mut Vec<SkeletonWord>,
) {
    if clones == 0 && tangles == 0 {
        out.push(SkeletonWord(word.clone()));
        return;
    }
    for start in 0..=height {
        if clones > 0 {
            let letter = Letter::C(start + 1);
            let repeats = word.last() == Some(&letter);
            if !repeats {
                word.push(letter);
                extend_skeleta(word, start + 1, clones - 1, tangles, out);
                word.pop();
            }
        }
        if tangles > 0 {
            word.push(Letter::T(start + 1));
            extend_skeleta(word, start + 2, clones, tangles - 1, out);
            word.pop();
        }
    }
}

/// Strings over `{c1, c2, t12}` with the given letter counts and no factor
/// `c1 c1` or `c2 c2`: the skeleta of bicoloured graphs.
pub fn bicoloured_skeleton_count(r1: usize, r2: usize, s: usize) -> u128 {
    // ways[a][b][c][last]: last letter 0 = c1, 1 = c2, 2 = t12, 3 = none.
    let mut ways = vec![vec![vec![[0u128; 4]; s + 1]; r2 + 1]; r1 + 1];
    ways[0][0][0][3] = 1;
    for a in 0..=r1 {
        for b in 0..=r2 {
            for c in 0..=s {
                let cur = ways[a][b][c];
                for (last, &w) in cur.iter().enumerate() {
                    if w == 0 {
                        continue;
                    }
                    if a < r1 && last != 0 {
                        ways[a + 1][b][c][0] += w;
                    }
                    if b < r2 && last != 1 {
                        ways[a][b + 1][c][1] += w;
                    }
                    if c < s {
                        ways[a][b][c + 1][2] += w;
                    }
                }
            }
        }
    }
    ways[r1][r2][s].iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn w(s: &str) -> SkeletonWord {
        s.parse().unwrap()
    }

    #[test]
    fn commutation_rules() {
        assert!(commutes(C(1), C(3)));
        assert!(!commutes(C(1), C(2)));
        assert!(commutes(C(4), T(1)));
        assert!(!commutes(C(3), T(1)));
        assert!(commutes(T(1), T(4)));
        assert!(!commutes(T(1), T(3)));
        assert!(!commutes(C(2), C(2)));
        assert!(!commutes(T(2), T(2)));
    }

    #[test]
    fn letter_syntax() {
        assert_eq!("t12".parse::<Letter>(), Ok(T(1)));
        assert_eq!("t910".parse::<Letter>(), Ok(T(9)));
        assert_eq!("t1011".parse::<Letter>(), Ok(T(10)));
        assert_eq!("c12".parse::<Letter>(), Ok(C(12)));
        assert!("t13".parse::<Letter>().is_err());
        assert!("c0".parse::<Letter>().is_err());
        assert!("x1".parse::<Letter>().is_err());
        assert_eq!(T(10).to_string(), "t1011");
    }

    #[test]
    fn normal_forms() {
        let raw = [C(1), C(2), C(3), T(1), C(4), C(3)];
        assert_eq!(SkeletonWord::normalize(&raw).to_string(), "c1 c2 c3 c4 t12 c3");
        assert_eq!(w("c1").to_string(), "c1");
        assert_eq!(w("c1 c3").to_string(), "c3 c1");
        assert_eq!(w("").len(), 0);
    }

    #[test]
    fn validity() {
        assert!(w("c1 c2 c3 c4 t12 c3").is_valid());
        assert!(!w("c2").is_valid());
        assert!(!SkeletonWord(vec![C(1), C(1)]).is_valid());
        assert!(SkeletonWord::empty().is_valid());
        // t45 t12 normalises away from a t12 start.
        assert!(!w("t12 t45").is_valid());
    }

    #[test]
    fn dyck_examples() {
        use Step::*;
        assert_eq!(w("c1").to_dyck().unwrap().0, vec![Up, Down]);
        assert_eq!(w("t12").to_dyck().unwrap().0, vec![DoubleUp, Down, Down]);
        assert_eq!(
            w("c1 c2 c1").to_dyck().unwrap().0,
            vec![Up, Up, Down, Down, Up, Down]
        );
        assert!(w("c2").to_dyck().is_err());
        assert!(DecoratedDyckPath(vec![Down, Up]).validate().is_err());
        assert!(DecoratedDyckPath(vec![Up]).validate().is_err());
        assert!(DecoratedDyckPath(vec![Up, Down, Up, Down]).validate().is_err());
        assert!(SkeletonWord::from_dyck(&DecoratedDyckPath(vec![Up, Down, Up, Down])).is_err());
    }

    #[test]
    fn small_skeleton_lists() {
        let show = |r, s| -> Vec<String> {
            enumerate_skeleta(r, s).iter().map(ToString::to_string).collect()
        };
        assert_eq!(show(2, 0), vec!["c1 c2"]);
        assert_eq!(show(1, 1), vec!["c1 t12", "c1 t23", "t12 c1", "t12 c2", "t12 c3"]);
        assert_eq!(show(0, 2), vec!["t12 t12", "t12 t23", "t12 t34"]);
        assert_eq!(show(0, 0), vec![""]);
    }

    #[test]
    fn bicoloured_strings() {
        assert_eq!(bicoloured_skeleton_count(1, 0, 0), 1);
        assert_eq!(bicoloured_skeleton_count(2, 0, 0), 0);
        assert_eq!(bicoloured_skeleton_count(1, 1, 0), 2);
        assert_eq!(bicoloured_skeleton_count(0, 0, 0), 1);
    }
}
